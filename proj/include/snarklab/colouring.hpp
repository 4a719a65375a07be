#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <list>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "snarklab/edge_set.hpp"
#include "snarklab/errors.hpp"
#include "snarklab/graph.hpp"

namespace snarklab {

// Proper edge colouring of a scope. Colours are 1..3 for 3-colourings and
// 0..3 for 4-colourings whose class 0 is the conflict set; entries outside
// the scope are meaningless.
struct Colouring {
  EdgeSet scope;
  std::vector<std::uint8_t> colour;

  Colouring() = default;
  explicit Colouring(std::size_t m) : scope(m), colour(m, 0) {}

  EdgeSet colour_class(unsigned c) const {
    EdgeSet out(scope.size());
    for (std::size_t i = scope.first(); i < scope.size(); i = scope.next(i))
      if (colour[i] == c) out.set(i);
    return out;
  }
};

// Minimal colouring: a proper 4-colouring whose class 0 has size r(G).
struct MinimalColouring {
  Colouring colouring;
  EdgeSet conflict_set;
};

inline bool is_proper(const Graph& g, const Colouring& f) {
  for (std::size_t i = f.scope.first(); i < f.scope.size();
       i = f.scope.next(i))
    for (EdgeIndex j : g.adjacent_edges(static_cast<EdgeIndex>(i)))
      if (f.scope.test(j) && f.colour[j] == f.colour[i]) return false;
  return true;
}

// Exact 3-edge-colouring oracle for edge-induced subgraphs of one host
// graph. Decision results are memoized in a bounded LRU cache keyed by the
// scope bits; the budget counts actual searches, not cache hits.
class ColourOracle {
public:
  explicit ColourOracle(const Graph& g, std::size_t cache_capacity = 1u << 20)
      : g_(g), cache_capacity_(cache_capacity) {}

  const Graph& graph() const { return g_; }

  // Searches are counted against the budget; 0 means unlimited.
  void set_budget(std::uint64_t max_calls) { budget_ = max_calls; }
  std::uint64_t budget() const { return budget_; }
  std::uint64_t calls() const { return calls_.load(); }

  // Proper 3-colouring of the scope, or absent. Deterministic: components
  // are coloured independently, edges picked by fewest remaining colours
  // (ties by lowest index), and per component the first edge gets colour 1
  // and the first edge coloured next to it gets colour 2.
  std::optional<Colouring> find_3_colouring(const EdgeSet& scope) {
    if (auto hit = cache_get(scope); hit && *hit) return std::nullopt;
    charge();
    Colouring f(g_.n_edges());
    f.scope = scope;
    bool ok = true;
    for (const EdgeSet& comp : scope_components(g_, scope))
      if (!solve_component(comp, f.colour)) {
        ok = false;
        break;
      }
    cache_put(scope, !ok);
    if (!ok) return std::nullopt;
    return f;
  }

  bool is_conflicting(const EdgeSet& scope) {
    if (auto hit = cache_get(scope)) return *hit;
    return !find_3_colouring(scope).has_value();
  }

private:
  std::optional<bool> cache_get(const EdgeSet& key) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    order_.splice(order_.begin(), order_, it->second);
    return it->second->second;
  }

  void cache_put(const EdgeSet& key, bool value) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = map_.find(key);
    if (it != map_.end()) {
      order_.splice(order_.begin(), order_, it->second);
      return;
    }
    order_.emplace_front(key, value);
    map_.emplace(key, order_.begin());
    if (map_.size() > cache_capacity_) {
      map_.erase(order_.back().first);
      order_.pop_back();
    }
  }

  void charge() {
    std::uint64_t used = ++calls_;
    if (budget_ != 0 && used > budget_)
      throw budget_exceeded("colour oracle budget exhausted");
  }

  // Backtracking 3-colouring of one edge-connected component, writing
  // colours 1..3 into `colour`.
  bool solve_component(const EdgeSet& comp, std::vector<std::uint8_t>& colour) {
    std::vector<EdgeIndex> ids;
    for (std::size_t i = comp.first(); i < comp.size(); i = comp.next(i))
      ids.push_back(static_cast<EdgeIndex>(i));

    const std::size_t k = ids.size();
    std::vector<int> local(g_.n_edges(), -1);
    for (std::size_t a = 0; a < k; ++a) local[ids[a]] = static_cast<int>(a);

    std::vector<std::uint8_t> avail(k, 0b111), col(k, 0);
    std::vector<std::vector<int>> adj(k);
    for (std::size_t a = 0; a < k; ++a)
      for (EdgeIndex j : g_.adjacent_edges(ids[a]))
        if (local[j] >= 0) adj[a].push_back(local[j]);

    auto pick = [&]() -> int {
      int best = -1, best_n = 4;
      for (std::size_t a = 0; a < k; ++a)
        if (col[a] == 0) {
          int nav = std::popcount(static_cast<unsigned>(avail[a]));
          if (nav < best_n) {
            best = static_cast<int>(a);
            best_n = nav;
            if (nav <= 1) break;
          }
        }
      return best;
    };

    std::vector<int> touched;
    auto rec = [&](auto&& self, std::size_t depth) -> bool {
      int a = pick();
      if (a < 0) return true;
      std::uint8_t options = avail[a];
      if (depth == 0) options &= 0b001;
      if (depth == 1 && avail[a] == 0b110) options = 0b010;
      for (unsigned c = 1; c <= 3; ++c) {
        std::uint8_t bit = static_cast<std::uint8_t>(1u << (c - 1));
        if (!(options & bit)) continue;
        col[a] = static_cast<std::uint8_t>(c);
        std::size_t mark = touched.size();
        bool ok = true;
        for (int b : adj[a])
          if (col[b] == 0 && (avail[b] & bit)) {
            avail[b] = static_cast<std::uint8_t>(avail[b] & ~bit);
            touched.push_back(b);
            if (avail[b] == 0) ok = false;
          }
        if (ok && self(self, depth + 1)) return true;
        while (touched.size() > mark) {
          avail[touched.back()] =
              static_cast<std::uint8_t>(avail[touched.back()] | bit);
          touched.pop_back();
        }
        col[a] = 0;
      }
      return false;
    };

    if (!rec(rec, 0)) return false;
    for (std::size_t a = 0; a < k; ++a) colour[ids[a]] = col[a];
    return true;
  }

  const Graph& g_;
  std::size_t cache_capacity_;
  std::uint64_t budget_ = 0;
  std::atomic<std::uint64_t> calls_{0};

  std::mutex mutex_;
  std::list<std::pair<EdgeSet, bool>> order_;
  std::unordered_map<EdgeSet, std::list<std::pair<EdgeSet, bool>>::iterator,
                     EdgeSetHash>
      map_;
};

// Proper 4-colouring of the whole graph minimizing |class 0|, by iterative
// deepening on the class-0 budget. Independent of the deletion-based
// resistance search so the two can cross-check each other.
inline MinimalColouring min_class0_colouring(const Graph& g) {
  const std::size_t m = g.n_edges();
  std::vector<std::uint8_t> col(m, 4);  // 4 = unassigned
  std::vector<std::uint8_t> forbid(m, 0);
  std::vector<int> zero_block(m, 0);

  for (std::size_t k = 0; k <= m; ++k) {
    std::size_t zeros_left = k;
    unsigned max_used = 0;

    auto rec = [&](auto&& self) -> bool {
      int best = -1, best_n = 6;
      unsigned cap = std::min(3u, max_used + 1);
      for (std::size_t i = 0; i < m; ++i)
        if (col[i] == 4) {
          int n = 0;
          for (unsigned c = 1; c <= cap; ++c)
            if (!(forbid[i] & (1u << (c - 1)))) ++n;
          if (zero_block[i] == 0 && zeros_left > 0) ++n;
          if (n < best_n) {
            best = static_cast<int>(i);
            best_n = n;
            if (n == 0) break;
          }
        }
      if (best < 0) return true;
      if (best_n == 0) return false;
      std::size_t i = static_cast<std::size_t>(best);

      for (unsigned c = 1; c <= cap; ++c) {
        if (forbid[i] & (1u << (c - 1))) continue;
        col[i] = static_cast<std::uint8_t>(c);
        unsigned prev_max = max_used;
        max_used = std::max(max_used, c);
        std::vector<EdgeIndex> touched;
        for (EdgeIndex j : g.adjacent_edges(static_cast<EdgeIndex>(i)))
          if (col[j] == 4 && !(forbid[j] & (1u << (c - 1)))) {
            forbid[j] = static_cast<std::uint8_t>(forbid[j] | (1u << (c - 1)));
            touched.push_back(j);
          }
        if (self(self)) return true;
        for (EdgeIndex j : touched)
          forbid[j] = static_cast<std::uint8_t>(forbid[j] & ~(1u << (c - 1)));
        max_used = prev_max;
        col[i] = 4;
      }

      if (zero_block[i] == 0 && zeros_left > 0) {
        col[i] = 0;
        --zeros_left;
        for (EdgeIndex j : g.adjacent_edges(static_cast<EdgeIndex>(i)))
          ++zero_block[j];
        if (self(self)) return true;
        for (EdgeIndex j : g.adjacent_edges(static_cast<EdgeIndex>(i)))
          --zero_block[j];
        ++zeros_left;
        col[i] = 4;
      }
      return false;
    };

    if (rec(rec)) {
      MinimalColouring out;
      out.colouring.scope = g.full_edge_set();
      out.colouring.colour = col;
      out.conflict_set = out.colouring.colour_class(0);
      return out;
    }
  }
  throw invariant_violation("min_class0_colouring: search space exhausted");
}

struct MinimalColouringEnumeration {
  std::vector<MinimalColouring> colourings;
  bool complete = true;
};

// All minimal colourings of G with |class 0| = r, one witness per conflict
// set, in canonical conflict-set order. Conflict sets of minimal colourings
// are exactly the size-r matchings whose deletion leaves G 3-colourable, so
// the enumeration walks size-r matchings lexicographically. cap = 0 means
// unlimited; hitting the cap marks the result incomplete.
inline MinimalColouringEnumeration enumerate_minimal_colourings(
    ColourOracle& oracle, std::size_t r, std::size_t cap = 0) {
  const Graph& g = oracle.graph();
  const std::size_t m = g.n_edges();
  MinimalColouringEnumeration out;

  EdgeSet chosen(m);
  EdgeSet blocked(m);  // chosen edges plus everything adjacent to them

  auto emit = [&]() -> bool {  // false = stop (cap reached)
    EdgeSet rest = g.full_edge_set() - chosen;
    auto witness = oracle.find_3_colouring(rest);
    if (!witness) return true;
    MinimalColouring mc;
    mc.colouring = std::move(*witness);
    mc.colouring.scope = g.full_edge_set();
    mc.conflict_set = chosen;
    out.colourings.push_back(std::move(mc));
    return cap == 0 || out.colourings.size() < cap;
  };

  auto rec = [&](auto&& self, std::size_t from, std::size_t left) -> bool {
    if (left == 0) return emit();
    for (std::size_t i = from; i + left <= m; ++i) {
      if (blocked.test(i)) continue;
      chosen.set(i);
      std::vector<std::size_t> touched{i};
      blocked.set(i);
      for (EdgeIndex j : g.adjacent_edges(static_cast<EdgeIndex>(i)))
        if (!blocked.test(j)) {
          blocked.set(j);
          touched.push_back(j);
        }
      bool keep_going = self(self, i + 1, left - 1);
      for (std::size_t t : touched) blocked.reset(t);
      chosen.reset(i);
      if (!keep_going) return false;
    }
    return true;
  };

  out.complete = rec(rec, 0, r);
  return out;
}

}  // namespace snarklab
