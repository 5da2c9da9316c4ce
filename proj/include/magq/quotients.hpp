// Dimension sequences of set-theoretic quotients of Mag: congruence oracle,
// pattern-avoidance counting and Taylor coefficients of rational series, plus
// the named presentations and the CAs(3) basis families.
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "magq/automaton.hpp"
#include "magq/rewriting.hpp"
#include "magq/trees.hpp"

namespace magq {

/// Values at arities 1..n (index n-1).
using ArityTable = std::vector<mpz_class>;

// ------------------------------------------------------------ avoidance

inline ArityTable avoider_count(const std::vector<BinaryTree>& patterns, std::size_t n_max) {
  if (patterns.empty()) throw rejected_input("avoider_count needs at least one pattern");
  return AvoidanceAutomaton(patterns).count<mpz_class>(n_max);
}

/// Same counts by filtering every tree; for cross-checks at small arity.
inline std::vector<std::uint64_t> avoider_count_by_filtering(const std::vector<BinaryTree>& patterns, std::size_t n_max) {
  std::vector<std::uint64_t> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::uint64_t c = 0;
    for_each_tree_word(n, [&](std::string_view w) {
      for (const auto& p : patterns) {
        std::size_t end;
        for (std::size_t j = 0; j < w.size(); ++j) {
          if (w[j] == '2' && match_at(w, j, p.word(), nullptr, &end)) return;
        }
      }
      ++c;
    });
    out.push_back(c);
  }
  return out;
}

inline std::vector<BinaryTree> avoiders(const std::vector<BinaryTree>& patterns, std::size_t n) {
  std::vector<BinaryTree> out;
  for_each_tree_word(n, [&](std::string_view w) {
    BinaryTree t = BinaryTree::from_valid_word(std::string(w));
    for (const auto& p : patterns) {
      if (contains_subtree(t, p)) return;
    }
    out.push_back(std::move(t));
  });
  return out;
}

// ------------------------------------------------------- rational series

/// numerator / denominator with integer coefficients, index = power of t.
struct RationalSeries {
  std::vector<mpz_class> numerator;
  std::vector<mpz_class> denominator;
};

/// Coefficients of t^1..t^n_max. Rejects a zero constant term in the
/// denominator and series whose coefficients are not integers.
inline ArityTable taylor_coefficients(const RationalSeries& s, std::size_t n_max) {
  if (s.denominator.empty() || s.denominator[0] == 0) {
    throw rejected_input("denominator must have a nonzero constant term");
  }
  const auto& num = s.numerator;
  const auto& den = s.denominator;
  std::vector<mpq_class> c(n_max + 1);
  mpq_class d0(den[0]);
  for (std::size_t k = 0; k <= n_max; ++k) {
    mpq_class acc = k < num.size() ? mpq_class(num[k]) : mpq_class(0);
    for (std::size_t j = 1; j <= k && j < den.size(); ++j) acc -= mpq_class(den[j]) * c[k - j];
    c[k] = acc / d0;
  }
  ArityTable out;
  for (std::size_t k = 1; k <= n_max; ++k) {
    if (c[k].get_den() != 1) throw rejected_input("series has a non-integer coefficient at t^" + std::to_string(k));
    out.push_back(c[k].get_num());
  }
  return out;
}

namespace detail {

inline std::vector<mpz_class> poly(std::initializer_list<long> c) {
  std::vector<mpz_class> out;
  for (long v : c) out.emplace_back(v);
  return out;
}

}  // namespace detail

/// t(1 - t + t^2 + t^3 + 2t^4 + 2t^5 - 7t^7 - 2t^8 + t^9 + 2t^10 + t^11) / (1 - t)^2.
inline RationalSeries hilbert_series_cas3() {
  return {detail::poly({0, 1, -1, 1, 1, 2, 2, 0, -7, -2, 1, 2, 1}), detail::poly({1, -2, 1})};
}

/// t(1 - t) / (1 - 2t), shared by the seven cubic quotients with 2^{n-2}.
inline RationalSeries hilbert_series_cubic() { return {detail::poly({0, 1, -1}), detail::poly({1, -2})}; }

/// t / (1 - t).
inline RationalSeries hilbert_series_as() { return {detail::poly({0, 1}), detail::poly({1, -1})}; }

/// t + t^2 + t^3.
inline RationalSeries hilbert_series_aas() { return {detail::poly({0, 1, 1, 1}), detail::poly({1})}; }

// --------------------------------------------------- named presentations

/// {L_g -> R_g}, the seed of CAs(g).
inline RewriteSystem cas_rules(std::size_t g) {
  if (g < 2) throw rejected_input("CAs(g) needs g >= 2");
  return RewriteSystem{RewriteRule{left_comb(g), right_comb(g)}};
}

/// The five cubic trees in lex order, a_1 .. a_5.
inline BinaryTree cubic_tree(int i) {
  static const char* w[] = {"2020200", "2022000", "2200200", "2202000", "2220000"};
  if (i < 1 || i > 5) throw rejected_input("cubic trees are indexed 1..5");
  return BinaryTree::from_valid_word(w[i - 1]);
}

/// A single-rule convergent presentation of Mag^{i,j} (the quotient by
/// a_i ~ a_j), for the seven pairs where one exists.
inline RewriteRule cubic_presentation(int i, int j) {
  if (i > j) std::swap(i, j);
  static const std::pair<std::pair<int, int>, std::pair<int, int>> table[] = {
      {{1, 2}, {2, 1}}, {{4, 5}, {4, 5}}, {{1, 3}, {3, 1}}, {{3, 5}, {3, 5}},
      {{1, 4}, {4, 1}}, {{2, 5}, {2, 5}}, {{2, 4}, {4, 2}},
  };
  for (const auto& [key, rule] : table) {
    if (key == std::pair{i, j}) return RewriteRule{cubic_tree(rule.first), cubic_tree(rule.second)};
  }
  throw rejected_input("Mag^{" + std::to_string(i) + "," + std::to_string(j) + "} has no single-rule convergent presentation");
}

inline const std::vector<std::pair<int, int>>& cubic_convergent_pairs() {
  static const std::vector<std::pair<int, int>> p = {{1, 2}, {4, 5}, {1, 3}, {3, 5}, {1, 4}, {2, 5}, {2, 4}};
  return p;
}

inline RewriteSystem cas3_rules() {
  static const char* rules[][2] = {
      {"2220000", "2020200"},
      {"220202000", "220020200"},
      {"20202202000", "20202020200"},
      {"20220200200", "20202020200"},
      {"2020220020200", "2020202022000"},
      {"2022002020200", "2020202200200"},
      {"2202200020200", "2200202020200"},
      {"202020202200200", "202020202022000"},
      {"202020220022000", "202020202020200"},
      {"220020202200200", "220020202022000"},
      {"220200202020200", "220020202022000"},
  };
  RewriteSystem s;
  for (const auto& r : rules) s.add(RewriteRule{BinaryTree::from_valid_word(r[0]), BinaryTree::from_valid_word(r[1])});
  return s;
}

/// a_2 -> a_3 with the two fixed higher rules and the k-family, members of
/// arity <= max_arity.
inline RewriteSystem mag23_rule_family(std::size_t max_arity) {
  if (max_arity < 5) throw rejected_input("max_arity must be at least 5");
  RewriteSystem s{RewriteRule{cubic_tree(2), cubic_tree(3)}};
  auto add = [&](const std::string& l, const std::string& r) {
    RewriteRule rule{BinaryTree::from_valid_word(l), BinaryTree::from_valid_word(r)};
    if (rule.arity() <= max_arity) s.add(rule);
  };
  add("22200020200", "22020020200");
  add("2222000200200", "2220020200200");
  for (std::size_t k = 1; k + 5 <= max_arity; ++k) {
    std::string lhs = "2" + std::string(k, '2') + "20200" + std::string(k, '0') + "200";
    std::string rhs = "22200";
    for (std::size_t j = 1; j < k; ++j) rhs += "20";
    rhs += "200200";
    add(lhs, rhs);
  }
  return s;
}

/// Mirror image of `mag23_rule_family`: a_4 -> a_3 and the mirrored higher rules.
inline RewriteSystem mag34_rule_family(std::size_t max_arity) { return mirror_system(mag23_rule_family(max_arity)); }

/// n(n+1)/2 - 7, the dimension of Mag^{2,3} and Mag^{3,4} for n >= 5.
inline mpz_class mag23_closed_form(std::size_t n) {
  return mpz_class(static_cast<unsigned long>(n * (n + 1) / 2)) - 7;
}

// ------------------------------------------------------- oracle dimensions

struct QuotientTable {
  ArityTable values;                  // arities 1..values.size()
  std::optional<std::size_t> cutoff;  // first arity not computed, when the budget stopped the run
};

/// Congruence class counts per arity; stops at the oracle budget.
inline QuotientTable quotient_dims(const Congruence& gens, std::size_t n_max) {
  QuotientTable out;
  std::size_t budget = oracle_arity_budget();
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (n > budget) {
      out.cutoff = n;
      break;
    }
    out.values.emplace_back(static_cast<unsigned long>(congruence_classes(gens, n).class_count()));
  }
  return out;
}

// ------------------------------------------------------ CAs(3) basis

/// z_d o_{d+1} z_{n-1-d} for d = 1..n-1.
inline std::vector<BinaryTree> cas3_basis_type_a(std::size_t n) {
  std::vector<BinaryTree> out;
  for (std::size_t d = 1; d + 1 <= n; ++d) out.push_back(graft(z_tree(d), d + 1, z_tree(n - 1 - d)));
  return out;
}

/// R_{n-1}, R_{n-2} o_1 200, R_{n-2} o_{n-2} 200 and the tree carrying both
/// grafts; n >= 6.
inline std::vector<BinaryTree> cas3_basis_type_b(std::size_t n) {
  if (n < 6) throw rejected_input("type-B family needs n >= 6");
  auto rep = [](const char* s, std::size_t k) {
    std::string out;
    for (std::size_t i = 0; i < k; ++i) out += s;
    return out;
  };
  return {
      right_comb(n - 1),
      BinaryTree::from_valid_word("2200" + rep("20", n - 4) + "200"),
      BinaryTree::from_valid_word(rep("20", n - 3) + "2200" + "0"),
      BinaryTree::from_valid_word("2200" + rep("20", n - 5) + "2200" + "0"),
  };
}

/// Normal forms of arity n >= 11, type A then type B.
inline std::vector<BinaryTree> cas3_basis(std::size_t n) {
  if (n < 11) throw rejected_input("the basis families are stated for n >= 11");
  auto out = cas3_basis_type_a(n);
  auto b = cas3_basis_type_b(n);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline bool is_cas3_type_b(const BinaryTree& t) {
  if (t.arity() < 6) return false;
  auto b = cas3_basis_type_b(t.arity());
  return std::find(b.begin(), b.end(), t) != b.end();
}

/// Grafting a type-B tree with any normal form (on either side, at any
/// position) normalizes to a type-B tree, for total arity <= n_max.
inline bool absorbing_check(std::size_t n_max) {
  auto sys = cas3_rules();
  Normalizer nf(sys);
  std::vector<std::vector<BinaryTree>> normal(n_max + 1);
  auto patterns = sys.left_members();
  for (std::size_t n = 2; n <= n_max; ++n) normal[n] = n >= 11 ? cas3_basis(n) : avoiders(patterns, n);
  for (std::size_t a = 11; a <= n_max; ++a) {
    for (const auto& x : cas3_basis_type_b(a)) {
      for (std::size_t b = 2; a + b - 1 <= n_max; ++b) {
        for (const auto& y : normal[b]) {
          for (std::size_t i = 1; i <= a; ++i) {
            if (!is_cas3_type_b(nf(graft(x, i, y)))) return false;
          }
          for (std::size_t i = 1; i <= b; ++i) {
            if (!is_cas3_type_b(nf(graft(y, i, x)))) return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace magq
