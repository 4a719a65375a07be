#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace snarklab {

// Input could not be decoded. `where` is a byte offset for graph6 input
// and a 1-based line number for edge lists.
class parse_error : public std::runtime_error {
public:
  parse_error(std::string msg, std::size_t where)
      : std::runtime_error(std::move(msg)), where_(where) {}

  std::size_t where() const noexcept { return where_; }

private:
  std::size_t where_;
};

// A documented precondition was violated by the caller.
class contract_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// The configured oracle-call budget was exhausted mid-enumeration.
class budget_exceeded : public std::runtime_error {
public:
  budget_exceeded() : std::runtime_error("oracle budget exceeded") {}
  using std::runtime_error::runtime_error;
};

// Two independently computed quantities that must agree did not.
class invariant_violation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace snarklab
