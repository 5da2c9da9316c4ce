// The lattice of comb associative operads CAs(g) under the division order
// on barred indices (bar g = g - 1), and the oracle checks behind it.
#pragma once

#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

#include "magq/rewriting.hpp"
#include "magq/trees.hpp"

namespace magq {

inline std::size_t bar(std::size_t g) {
  if (g < 1) throw rejected_input("CAs indices start at 1");
  return g - 1;
}

/// a | b with 0 | b only for b = 0 (so every bar divides 0).
inline bool divides(std::size_t a, std::size_t b) { return a == 0 ? b == 0 : b % a == 0; }

/// CAs(g) below CAs(g2): bar g divides bar g2. CAs(1) = Mag is the maximum.
inline bool cas_leq(std::size_t g, std::size_t g2) { return divides(bar(g), bar(g2)); }

inline std::size_t cas_meet(std::size_t g, std::size_t g2) { return std::gcd(bar(g), bar(g2)) + 1; }

inline std::size_t cas_join(std::size_t g, std::size_t g2) { return std::lcm(bar(g), bar(g2)) + 1; }

/// Left rank is constant mod bar g on every class of L_g ~ R_g, arities <= n_max.
inline bool left_rank_invariant_check(std::size_t g, std::size_t n_max) {
  if (g < 2) throw rejected_input("left_rank_invariant_check needs g >= 2");
  const std::size_t m = bar(g);
  Congruence c{{left_comb(g), right_comb(g)}};
  for (std::size_t n = 1; n <= n_max; ++n) {
    auto p = congruence_classes(c, n);
    std::vector<std::optional<std::size_t>> seen(p.class_count());
    std::uint64_t r = 0;
    bool ok = true;
    for_each_tree_word(n, [&](std::string_view w) {
      std::size_t lr = 0;
      while (lr < w.size() && w[lr] == '2') ++lr;
      auto& s = seen[p.class_of_rank(r++)];
      if (!s) {
        s = lr % m;
      } else if (*s != lr % m) {
        ok = false;
      }
    });
    if (!ok) return false;
  }
  return true;
}

struct MorphismCheck {
  bool criterion = false;       // bar g divides bar g2
  std::optional<bool> oracle;   // L_{g2} ~ R_{g2} in CAs(g), when within budget
  bool agree() const { return !oracle || *oracle == criterion; }
  bool exists() const { return oracle.value_or(criterion); }
};

/// Whether a morphism CAs(g2) -> CAs(g) exists, by the divisibility
/// criterion and, when arity g2 + 1 fits the budget, by the oracle.
inline MorphismCheck morphism_exists(std::size_t g2, std::size_t g) {
  MorphismCheck out;
  out.criterion = cas_leq(g, g2);
  if (g2 + 1 <= oracle_arity_budget()) {
    auto p = congruence_classes({{left_comb(g), right_comb(g)}}, g2 + 1);
    out.oracle = p.same_class(left_comb(g2), right_comb(g2));
  }
  return out;
}

}  // namespace magq
