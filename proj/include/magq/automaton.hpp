// Bottom-up deterministic automaton recognizing trees that avoid a set of
// patterns, and the counting DP over it.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "magq/trees.hpp"

namespace magq {

class AvoidanceAutomaton {
 public:
  static constexpr int dead = -1;

  explicit AvoidanceAutomaton(const std::vector<BinaryTree>& patterns) {
    for (const auto& p : patterns) {
      if (p.is_leaf()) throw rejected_input("avoidance patterns must have degree >= 1");
    }
    collect_subpatterns(patterns);
    words_ = words_ == 0 ? 1 : words_;
    intern(Bits(words_, 0));  // the leaf state
  }

  /// States discovered so far; transitions are built on demand.
  std::size_t state_count() const noexcept { return states_.size(); }
  std::size_t subpattern_count() const noexcept { return sub_.size(); }
  int leaf_state() const noexcept { return 0; }

  /// State of (left, right), or `dead` once some pattern matches at the root.
  int transition(int a, int b) const {
    if (a == dead || b == dead) return dead;
    std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    auto it = delta_.find(key);
    if (it != delta_.end()) return it->second;
    int t = combine(a, b);
    delta_.emplace(key, t);
    return t;
  }

  int evaluate(const BinaryTree& t) const {
    const std::string& w = t.word();
    std::vector<int> stack;
    for (std::size_t i = w.size(); i-- > 0;) {
      if (w[i] == '0') {
        stack.push_back(leaf_state());
      } else {
        int l = stack.back();
        stack.pop_back();
        int r = stack.back();
        stack.pop_back();
        stack.push_back(transition(l, r));
      }
    }
    return stack.back();
  }

  bool accepts(const BinaryTree& t) const { return evaluate(t) != dead; }

  /// Avoider counts for arities 1..n_max (index n-1).
  template <class Int>
  std::vector<Int> count(std::size_t n_max) const {
    // cnt[n] maps a state to the number of arity-n avoiders reaching it.
    std::vector<std::vector<std::pair<int, Int>>> cnt(n_max + 1);
    std::vector<Int> total;
    if (n_max == 0) return total;
    cnt[1].emplace_back(0, Int(1));
    total.push_back(Int(1));
    std::unordered_map<int, Int> row;
    for (std::size_t n = 2; n <= n_max; ++n) {
      row.clear();
      for (std::size_t a = 1; a < n; ++a) {
        for (const auto& [s1, c1] : cnt[a]) {
          for (const auto& [s2, c2] : cnt[n - a]) {
            int t = transition(s1, s2);
            if (t == dead) continue;
            row[t] += c1 * c2;
          }
        }
      }
      Int sum(0);
      for (auto& [s, c] : row) {
        if (c != Int(0)) {
          sum += c;
          cnt[n].emplace_back(s, std::move(c));
        }
      }
      std::sort(cnt[n].begin(), cnt[n].end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      total.push_back(sum);
    }
    return total;
  }

 private:
  using Bits = std::vector<std::uint64_t>;

  struct Sub {
    int left;   // index of left child subpattern, -1 for a pattern leaf
    int right;
    bool full;  // is one of the input patterns
  };

  int sub_index(const std::string& w, std::map<std::string, int>& ids) {
    if (w == "0") return -1;
    auto it = ids.find(w);
    if (it != ids.end()) return it->second;
    std::size_t e = word::subtree_end(w, 1);
    int l = sub_index(w.substr(1, e - 1), ids);
    int r = sub_index(w.substr(e), ids);
    int id = static_cast<int>(sub_.size());
    sub_.push_back({l, r, false});
    ids.emplace(w, id);
    return id;
  }

  void collect_subpatterns(const std::vector<BinaryTree>& patterns) {
    std::map<std::string, int> ids;
    for (const auto& p : patterns) sub_[static_cast<std::size_t>(sub_index(p.word(), ids))].full = true;
    words_ = (sub_.size() + 63) / 64;
  }

  static bool has(const Bits& b, int i) { return (b[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1U; }

  int intern(const Bits& b) const {
    auto it = ids_.find(b);
    if (it != ids_.end()) return it->second;
    int id = static_cast<int>(states_.size());
    states_.push_back(b);
    ids_.emplace(b, id);
    return id;
  }

  // Returns dead or the interned id of the combined state.
  int combine(int a, int b) const {
    const Bits& A = states_[static_cast<std::size_t>(a)];
    const Bits& B = states_[static_cast<std::size_t>(b)];
    Bits out(words_, 0);
    for (std::size_t q = 0; q < sub_.size(); ++q) {
      const Sub& s = sub_[q];
      if ((s.left < 0 || has(A, s.left)) && (s.right < 0 || has(B, s.right))) {
        if (s.full) return dead;
        out[q / 64] |= std::uint64_t(1) << (q % 64);
      }
    }
    return intern(out);
  }

  std::vector<Sub> sub_;
  std::size_t words_ = 1;
  // Lazily grown; logically const.
  mutable std::vector<Bits> states_;
  mutable std::map<Bits, int> ids_;
  mutable std::unordered_map<std::uint64_t, int> delta_;
};

}  // namespace magq
