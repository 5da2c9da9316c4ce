// Linear magmatic quotients over Q: arity-wise ideal spaces, quotient
// dimensions, sums and intersections of ideals and the Grassmann identity.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "magq/automaton.hpp"
#include "magq/rewriting.hpp"
#include "magq/trees.hpp"

namespace magq {

/// Homogeneous element of Q<Mag>(n): trees of one arity with nonzero coefficients.
class LinearElement {
 public:
  LinearElement() = default;
  explicit LinearElement(std::size_t arity) : arity_(arity) {}
  LinearElement(const BinaryTree& t, mpq_class c = 1) : arity_(t.arity()) { add(t, c); }

  std::size_t arity() const noexcept { return arity_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<BinaryTree, mpq_class>& terms() const noexcept { return terms_; }

  mpq_class coefficient(const BinaryTree& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? mpq_class(0) : it->second;
  }

  void add(const BinaryTree& t, const mpq_class& c) {
    if (terms_.empty() && arity_ == 0) arity_ = t.arity();
    if (t.arity() != arity_) throw rejected_input("linear element mixes arities");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(t, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LinearElement& operator+=(const LinearElement& o) {
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
  }
  LinearElement& operator-=(const LinearElement& o) {
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
  }
  LinearElement& operator*=(const mpq_class& k) {
    if (k == 0) {
      terms_.clear();
    } else {
      for (auto& [t, c] : terms_) c *= k;
    }
    return *this;
  }
  friend LinearElement operator+(LinearElement a, const LinearElement& b) { return a += b; }
  friend LinearElement operator-(LinearElement a, const LinearElement& b) { return a -= b; }
  friend LinearElement operator*(const mpq_class& k, LinearElement a) { return a *= k; }
  friend bool operator==(const LinearElement& a, const LinearElement& b) {
    return a.terms_ == b.terms_ && (a.terms_.empty() || a.arity_ == b.arity_);
  }

 private:
  std::size_t arity_ = 0;
  std::map<BinaryTree, mpq_class> terms_;
};

/// Partial composition extended bilinearly.
inline LinearElement graft(const LinearElement& x, std::size_t i, const LinearElement& y) {
  LinearElement out(x.arity() + y.arity() - 1);
  for (const auto& [s, a] : x.terms()) {
    for (const auto& [t, b] : y.terms()) out.add(graft(s, i, t), a * b);
  }
  return out;
}

/// `c1*WORD1 + c2*WORD2 ...`, terms in decreasing lex order, unit coefficients omitted.
inline std::string to_string(const LinearElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    mpq_class c = it->second;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    mpq_class a = abs(c);
    if (a != 1) out += a.get_str() + "*";
    out += it->first.word();
    first = false;
  }
  return out;
}

/// Inverse of `to_string`; words may also be written as (A,B)/L terms.
inline LinearElement parse_linear(std::string_view text) {
  LinearElement out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip();
  if (text.substr(i) == "0") return out;
  bool any = false;
  while (true) {
    skip();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (any) {
      throw parse_error("expected '+' or '-' between terms", i);
    }
    std::size_t start = i;
    while (i < text.size() && text[i] != '+' && text[i] != '-') ++i;
    std::string term = detail::trim(text.substr(start, i - start));
    if (term.empty()) throw parse_error("empty term", start);
    mpq_class c = 1;
    std::string tree = term;
    if (auto star = term.find('*'); star != std::string::npos) {
      std::string coef = detail::trim(term.substr(0, star));
      tree = detail::trim(term.substr(star + 1));
      if (coef.empty() || c.set_str(coef, 10) != 0) throw parse_error("bad coefficient '" + coef + "'", start);
      c.canonicalize();
      if (c.get_den() == 0) throw parse_error("zero denominator", start);
    }
    BinaryTree t;
    try {
      t = BinaryTree::parse(tree);
    } catch (const parse_error& e) {
      throw parse_error(std::string(e.what()), start + e.position());
    }
    if (any && t.arity() != out.arity() && !out.is_zero()) throw parse_error("terms of different arities", start);
    out.add(t, sign * c);
    any = true;
  }
  if (!any) throw parse_error("empty linear element", 0);
  return out;
}

// ------------------------------------------------------------ arity spaces

/// Subspace of Q<Mag>(n) in row-echelon form; pivots are lex-largest trees.
class AritySpace {
 public:
  using Row = std::vector<std::pair<std::uint32_t, mpq_class>>;  // decreasing column index

  AritySpace() : AritySpace(1) {}
  explicit AritySpace(std::size_t arity) : arity_(arity), ranker_(arity) {}

  std::size_t arity() const noexcept { return arity_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  std::uint64_t ambient_dim() const noexcept { return ranker_.size(); }
  bool full() const noexcept { return rows_.size() == ranker_.size(); }

  /// Adds a vector; returns true if the dimension grew.
  bool insert(Row v) {
    reduce(v);
    if (v.empty()) return false;
    mpq_class lead = v.front().second;
    for (auto& [k, c] : v) c /= lead;
    std::uint32_t p = v.front().first;
    pivot_.emplace(p, rows_.size());
    rows_.push_back(std::move(v));
    return true;
  }

  bool insert(const LinearElement& e) {
    if (e.is_zero()) return false;
    if (e.arity() != arity_) throw rejected_input("element arity differs from the space");
    return insert(to_row(e));
  }

  bool contains(const LinearElement& e) const {
    if (e.is_zero()) return true;
    if (e.arity() != arity_) return false;
    Row v = to_row(e);
    reduce(v);
    return v.empty();
  }

  const std::vector<Row>& rows() const noexcept { return rows_; }

  /// Basis elements, ordered by decreasing pivot.
  std::vector<LinearElement> basis() const {
    std::vector<LinearElement> out;
    for (const auto& [p, idx] : pivot_) out.push_back(to_element(rows_[idx]));
    return out;
  }

  Row to_row(const LinearElement& e) const {
    Row v;
    for (const auto& [t, c] : e.terms()) v.emplace_back(static_cast<std::uint32_t>(ranker_.rank(t)), c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    return v;
  }

  LinearElement to_element(const Row& r) const {
    LinearElement e(arity_);
    for (const auto& [k, c] : r) e.add(ranker_.unrank(k), c);
    return e;
  }

  /// v -= c * row, both sorted by decreasing index.
  static void axpy(Row& v, const mpq_class& c, const Row& row) {
    Row out;
    out.reserve(v.size() + row.size());
    std::size_t a = 0, b = 0;
    while (a < v.size() || b < row.size()) {
      if (b == row.size() || (a < v.size() && v[a].first > row[b].first)) {
        out.push_back(std::move(v[a++]));
      } else if (a == v.size() || row[b].first > v[a].first) {
        out.emplace_back(row[b].first, -c * row[b].second);
        ++b;
      } else {
        mpq_class x = v[a].second - c * row[b].second;
        if (x != 0) out.emplace_back(v[a].first, std::move(x));
        ++a;
        ++b;
      }
    }
    v.swap(out);
  }

 private:
  void reduce(Row& v) const {
    // Each pass removes the current leading term or stops at a new pivot.
    std::size_t start = 0;
    while (start < v.size()) {
      auto it = pivot_.find(v[start].first);
      if (it == pivot_.end()) break;
      mpq_class c = v[start].second;
      axpy(v, c, rows_[it->second]);
      start = 0;
    }
  }

  std::size_t arity_;
  TreeRanker ranker_;
  std::vector<Row> rows_;
  std::map<std::uint32_t, std::size_t, std::greater<>> pivot_;
};

inline AritySpace space_sum(const AritySpace& a, const AritySpace& b) {
  if (a.arity() != b.arity()) throw rejected_input("space_sum: arity mismatch");
  AritySpace out(a.arity());
  for (const auto& r : a.rows()) out.insert(r);
  for (const auto& r : b.rows()) out.insert(r);
  return out;
}

/// Kernel method (Zassenhaus): echelonize [a | a] and [b | 0] with the left
/// block leading; rows whose left block vanishes carry A ∩ B.
inline AritySpace space_intersection(const AritySpace& a, const AritySpace& b) {
  if (a.arity() != b.arity()) throw rejected_input("space_intersection: arity mismatch");
  const auto N = static_cast<std::uint32_t>(a.ambient_dim());
  std::vector<AritySpace::Row> rows;
  std::map<std::uint32_t, std::size_t, std::greater<>> pivot;
  AritySpace out(a.arity());
  auto push = [&](AritySpace::Row v) {
    while (!v.empty()) {
      auto it = pivot.find(v.front().first);
      if (it == pivot.end()) break;
      mpq_class c = v.front().second;
      AritySpace::axpy(v, c, rows[it->second]);
    }
    if (v.empty()) return;
    mpq_class lead = v.front().second;
    for (auto& [k, c] : v) c /= lead;
    pivot.emplace(v.front().first, rows.size());
    rows.push_back(std::move(v));
  };
  for (const auto& r : a.rows()) {
    AritySpace::Row v;
    for (const auto& [k, c] : r) v.emplace_back(k + N, c);
    for (const auto& [k, c] : r) v.emplace_back(k, c);
    push(std::move(v));
  }
  for (const auto& r : b.rows()) {
    AritySpace::Row v;
    for (const auto& [k, c] : r) v.emplace_back(k + N, c);
    push(std::move(v));
  }
  for (const auto& r : rows) {
    if (r.front().first < N) out.insert(r);
  }
  return out;
}

// ------------------------------------------------------------------ ideals

/// Largest arity for ideal computations; MAGQ_MAX_ARITY can lower it.
inline std::size_t linear_arity_budget() { return std::min<std::size_t>(oracle_arity_budget(), 10); }

namespace detail {

using WordElement = std::vector<std::pair<std::string, mpq_class>>;

inline void substitute_all(const WordElement& g, const std::vector<const std::string*>& subs, WordElement& out) {
  for (const auto& [w, c] : g) {
    std::string r;
    std::size_t k = 0;
    for (char ch : w) {
      if (ch == '0') {
        r += *subs[k++];
      } else {
        r.push_back('2');
      }
    }
    out.emplace_back(std::move(r), c);
  }
}

}  // namespace detail

/// Arity-n part of the operad ideal generated by `gens`, built from arity
/// n - 1 down: I(n) = span{g o [r_1..r_k]} + span{(x, s), (s, x) : x in I(m)}.
inline std::vector<AritySpace> ideal_spaces(const std::vector<LinearElement>& gens, std::size_t n_max) {
  if (n_max > linear_arity_budget()) {
    throw rejected_input("ideal computation at arity " + std::to_string(n_max) + " exceeds the budget " +
                         std::to_string(linear_arity_budget()) + " (ambient dimension " +
                         std::to_string(catalan(n_max - 1)) + ")");
  }
  std::vector<detail::WordElement> g;
  std::vector<std::size_t> garity;
  for (const auto& e : gens) {
    if (e.is_zero()) continue;
    detail::WordElement w;
    for (const auto& [t, c] : e.terms()) w.emplace_back(t.word(), c);
    g.push_back(std::move(w));
    garity.push_back(e.arity());
  }
  std::vector<std::vector<std::string>> trees(n_max + 1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    for_each_tree_word(n, [&](std::string_view w) { trees[n].emplace_back(w); });
  }
  std::vector<AritySpace> out;
  out.emplace_back(1);  // index 0 unused
  for (std::size_t n = 1; n <= n_max; ++n) {
    AritySpace sp(n);
    TreeRanker rk(n);
    auto insert_words = [&](const detail::WordElement& e) {
      if (sp.full()) return;
      AritySpace::Row v;
      for (const auto& [w, c] : e) v.emplace_back(static_cast<std::uint32_t>(rk.rank(w)), c);
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
      // merge equal columns
      AritySpace::Row m;
      for (auto& p : v) {
        if (!m.empty() && m.back().first == p.first) {
          m.back().second += p.second;
          if (m.back().second == 0) m.pop_back();
        } else {
          m.push_back(std::move(p));
        }
      }
      sp.insert(std::move(m));
    };
    // Generators with every leaf substituted.
    for (std::size_t gi = 0; gi < g.size(); ++gi) {
      std::size_t k = garity[gi];
      if (k > n) continue;
      std::vector<std::size_t> parts(k, 1);
      parts.back() = n - (k - 1);
      // enumerate compositions of n into k positive parts
      std::function<void(std::size_t, std::size_t, std::vector<const std::string*>&)> rec =
          [&](std::size_t j, std::size_t left, std::vector<const std::string*>& subs) {
            if (sp.full()) return;
            if (j + 1 == k) {
              for (const auto& t : trees[left]) {
                subs[j] = &t;
                detail::WordElement e;
                detail::substitute_all(g[gi], subs, e);
                insert_words(e);
              }
              return;
            }
            for (std::size_t a = 1; a + (k - j - 1) <= left; ++a) {
              for (const auto& t : trees[a]) {
                subs[j] = &t;
                rec(j + 1, left - a, subs);
              }
            }
          };
      std::vector<const std::string*> subs(k);
      rec(0, n, subs);
    }
    // Left and right products with lower ideal parts.
    for (std::size_t m = 1; m < n && !sp.full(); ++m) {
      for (const auto& row : out[m].rows()) {
        if (sp.full()) break;
        detail::WordElement x;
        TreeRanker rm(m);
        for (const auto& [k, c] : row) x.emplace_back(rm.unrank(k).word(), c);
        for (const auto& s : trees[n - m]) {
          detail::WordElement l, r;
          for (const auto& [w, c] : x) {
            l.emplace_back("2" + w + s, c);
            r.emplace_back("2" + s + w, c);
          }
          insert_words(l);
          insert_words(r);
        }
      }
    }
    out.push_back(std::move(sp));
  }
  return out;
}

inline AritySpace ideal_space(const std::vector<LinearElement>& gens, std::size_t n) {
  return std::move(ideal_spaces(gens, n)[n]);
}

inline std::uint64_t quotient_dim(const std::vector<LinearElement>& gens, std::size_t n) {
  return catalan(n - 1) - ideal_space(gens, n).dim();
}

/// Quotient dimensions for arities 1..n_max.
inline std::vector<std::uint64_t> quotient_dims_linear(const std::vector<LinearElement>& gens, std::size_t n_max) {
  auto sp = ideal_spaces(gens, n_max);
  std::vector<std::uint64_t> out;
  for (std::size_t n = 1; n <= n_max; ++n) out.push_back(catalan(n - 1) - sp[n].dim());
  return out;
}

struct GrassmannRow {
  std::size_t arity;
  std::uint64_t first, second;  // quotient dims by I1 and I2
  std::uint64_t meet;           // quotient by I1 + I2
  std::uint64_t join;           // quotient by I1 ∩ I2
  bool holds;
};

/// meet + join = first + second at each arity, the intersection computed
/// by the kernel method.
inline std::vector<GrassmannRow> grassmann_check(const std::vector<LinearElement>& g1, const std::vector<LinearElement>& g2,
                                                 std::size_t n_max) {
  auto a = ideal_spaces(g1, n_max), b = ideal_spaces(g2, n_max);
  std::vector<GrassmannRow> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::uint64_t cat = catalan(n - 1);
    GrassmannRow r{n, cat - a[n].dim(), cat - b[n].dim(), cat - space_sum(a[n], b[n]).dim(),
                   cat - space_intersection(a[n], b[n]).dim(), false};
    r.holds = r.meet + r.join == r.first + r.second;
    out.push_back(r);
  }
  return out;
}

// --------------------------------------------------------------- builtins

/// Named generator families: as, aas, 2nil, rc:g, cas:g.
inline std::vector<LinearElement> builtin_generators(std::string_view name) {
  auto L = [](std::size_t g) { return LinearElement(left_comb(g)); };
  auto R = [](std::size_t g) { return LinearElement(right_comb(g)); };
  auto index = [&](std::string_view prefix) -> std::size_t {
    std::string_view rest = name.substr(prefix.size());
    std::size_t v = 0;
    if (rest.empty()) throw rejected_input("missing index in '" + std::string(name) + "'");
    for (char c : rest) {
      if (c < '0' || c > '9') throw rejected_input("bad index in '" + std::string(name) + "'");
      v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    if (v < 1 || v > 12) throw rejected_input("index out of range in '" + std::string(name) + "'");
    return v;
  };
  if (name == "as") return {L(2) - R(2)};
  if (name == "aas") return {L(2) + R(2)};
  if (name == "2nil") return {L(2), R(2)};
  if (name.starts_with("rc:")) {
    std::size_t g = index("rc:");
    std::vector<LinearElement> out;
    for (const auto& t : enumerate_trees(g + 1)) {
      if (t != right_comb(g)) out.push_back(LinearElement(t) - R(g));
    }
    return out;
  }
  if (name.starts_with("cas:")) {
    std::size_t g = index("cas:");
    if (g < 2) throw rejected_input("cas:g needs g >= 2");
    return {L(g) - R(g)};
  }
  throw rejected_input("unknown generator family '" + std::string(name) + "'");
}

/// avoider count of {L_2, R_3} against quotient_dim({L_2 + R_2}) for n <= n_max.
inline bool aas_presentation_check(std::size_t n_max) {
  AvoidanceAutomaton aut({left_comb(2), right_comb(3)});
  auto av = aut.count<mpz_class>(n_max);
  auto q = quotient_dims_linear(builtin_generators("aas"), n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (av[n - 1] != q[n - 1]) return false;
  }
  return true;
}

/// A random homogeneous element of arity 3 or 4 with small integer coefficients.
inline LinearElement random_generator(std::mt19937_64& rng) {
  std::size_t n = std::uniform_int_distribution<int>(3, 4)(rng);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (;;) {
    LinearElement e(n);
    for (const auto& t : enumerate_trees(n)) e.add(t, coef(rng));
    if (!e.is_zero()) return e;
  }
}

}  // namespace magq
