// Integer-composition realizations of the cubic quotients of Mag, their
// mirrored variants, the maps from normal forms onto compositions and the
// gamma-right-comb composition.
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "magq/quotients.hpp"
#include "magq/rewriting.hpp"
#include "magq/trees.hpp"

namespace magq {

/// Finite sequence of positive integers; arity is 1 + sum of parts.
struct Composition {
  std::vector<std::size_t> parts;

  Composition() = default;
  Composition(std::initializer_list<std::size_t> p) : parts(p) { check(); }
  explicit Composition(std::vector<std::size_t> p) : parts(std::move(p)) { check(); }

  std::size_t size() const noexcept { return parts.size(); }
  bool empty() const noexcept { return parts.empty(); }
  std::size_t arity() const {
    std::size_t a = 1;
    for (auto v : parts) a += v;
    return a;
  }
  /// 1-based part.
  std::size_t operator()(std::size_t k) const { return parts.at(k - 1); }
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  void check() const {
    for (auto v : parts) {
      if (v == 0) throw rejected_input("composition parts must be positive");
    }
  }
};

inline std::string to_string(const Composition& c) {
  std::string out = "(";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(c.parts[k]);
  }
  return out + ")";
}

inline Composition parse_composition(std::string_view s) {
  std::string t = detail::trim(s);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw parse_error("composition must be parenthesized", 0);
  std::vector<std::size_t> parts;
  std::string body = t.substr(1, t.size() - 2);
  if (detail::trim(body).empty()) return Composition{};
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t e = body.find(',', pos);
    if (e == std::string::npos) e = body.size();
    std::string f = detail::trim(std::string_view(body).substr(pos, e - pos));
    if (f.empty() || f.find_first_not_of("0123456789") != std::string::npos) throw parse_error("bad part '" + f + "'", pos + 1);
    std::size_t v = std::stoul(f);
    if (v == 0) throw parse_error("parts must be positive", pos + 1);
    parts.push_back(v);
    pos = e + 1;
  }
  return Composition(std::move(parts));
}

/// 1 + sum of parts i..j (1-based); an empty range gives 1.
inline std::size_t s_value(const Composition& c, std::size_t i, std::size_t j) {
  if (i < 1 || j > c.size()) throw rejected_input("s_value: range out of bounds");
  std::size_t s = 1;
  for (std::size_t k = i; k <= j; ++k) s += c(k);
  return s;
}

namespace detail {

using Parts = std::vector<std::size_t>;

inline void check_position(const Composition& l, std::size_t i) {
  if (i < 1 || i > l.arity()) throw rejected_input("composition position out of range");
}

/// k in 0..p with s_{1,k} <= i < s_{1,k+1}; k = p exactly when i is the arity.
inline std::size_t find_block(const Composition& l, std::size_t i) {
  std::size_t s = 1;
  for (std::size_t k = 0; k < l.size(); ++k) {
    if (i < s + l.parts[k]) return k;
    s += l.parts[k];
  }
  return l.size();
}

inline Parts slice(const Parts& v, std::size_t b, std::size_t e) {
  e = std::min(e, v.size());
  return b >= e ? Parts{} : Parts(v.begin() + static_cast<long>(b), v.begin() + static_cast<long>(e));
}

inline Parts cat(std::initializer_list<Parts> ps) {
  Parts out;
  for (const auto& p : ps) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace detail

/// Concatenation at the last position, otherwise the hit part absorbs mu.
using detail::Parts;

inline Composition comp_12(const Composition& l, std::size_t i, const Composition& m) {
  detail::check_position(l, i);
  const auto& L = l.parts;
  if (i == l.arity()) return Composition(detail::cat({L, m.parts}));
  std::size_t k = detail::find_block(l, i);
  Parts out = L;
  out[k] += m.arity() - 1;
  return Composition(std::move(out));
}

inline Composition comp_13(const Composition& l, std::size_t i, const Composition& m) {
  detail::check_position(l, i);
  if (m.empty()) return l;
  const auto& L = l.parts;
  const auto& M = m.parts;
  const std::size_t p = l.size();
  if (i <= p + 1) {
    Parts out = detail::slice(L, 0, i - 1);
    out.push_back(M[0] + s_value(l, i, p) - 1);
    out.insert(out.end(), M.begin() + 1, M.end());
    return Composition(std::move(out));
  }
  for (std::size_t k = 1; k <= p; ++k) {
    if (k + 1 + s_value(l, k + 1, p) <= i && i < k + s_value(l, k, p)) {
      Parts out = L;
      out[k - 1] += m.arity() - 1;
      return Composition(std::move(out));
    }
  }
  throw rejected_input("comp_13: no block for position " + std::to_string(i));
}

inline Composition comp_25(const Composition& l, std::size_t i, const Composition& m) {
  detail::check_position(l, i);
  if (m.empty()) return l;
  const auto& L = l.parts;
  const auto& M = m.parts;
  const std::size_t p = l.size(), q = m.size();
  const std::size_t k = detail::find_block(l, i);
  const std::size_t sk = s_value(l, 1, k);
  using detail::cat;
  using detail::slice;
  if (i == sk) {
    if (k == p) return Composition(cat({L, M}));
    if (q % 2 == 1) return Composition(cat({slice(L, 0, k), slice(M, 0, q - 1), {M[q - 1] + L[k]}, slice(L, k + 1, p)}));
    return Composition(cat({slice(L, 0, k), M, slice(L, k, p)}));
  }
  const std::size_t a = i - sk, b = sk + L[k] - i;
  if (q % 2 == 1) return Composition(cat({slice(L, 0, k), {a}, M, {b}, slice(L, k + 1, p)}));
  return Composition(cat({slice(L, 0, k), {a}, slice(M, 0, q - 1), {M[q - 1] + b}, slice(L, k + 1, p)}));
}

inline Composition comp_24(const Composition& l, std::size_t i, const Composition& m) {
  detail::check_position(l, i);
  if (m.empty()) return l;
  const auto& L = l.parts;
  const auto& M = m.parts;
  const std::size_t p = l.size(), q = m.size();
  const std::size_t k = detail::find_block(l, i);
  const std::size_t sk = s_value(l, 1, k);
  using detail::cat;
  using detail::slice;
  if (i == sk) {
    std::size_t next = k < p ? L[k] : 0;
    return Composition(cat({slice(L, 0, k), slice(M, 0, q - 1), {M[q - 1] + next}, slice(L, k + 1, p)}));
  }
  return Composition(cat({slice(L, 0, k), {i - sk}, slice(M, 0, q - 1), {M[q - 1] + sk + L[k] - i}, slice(L, k + 1, p)}));
}

using CompositionOp = std::function<Composition(const Composition&, std::size_t, const Composition&)>;

/// op at the mirrored position arity(l) - i + 1.
inline Composition mirrored_compose(const CompositionOp& op, const Composition& l, std::size_t i, const Composition& m) {
  detail::check_position(l, i);
  return op(l, l.arity() - i + 1, m);
}

// ---------------------------------------------------------------- maps phi

/// R_p o [L_{l_1 - 1}, ..., L_{l_p - 1}, leaf].
inline BinaryTree left_comb_forest(const Composition& c) {
  BinaryTree t = BinaryTree::leaf();
  for (std::size_t k = c.size(); k-- > 0;) t = BinaryTree::node(left_comb(c.parts[k] - 1), t);
  return t;
}

/// Inverse of `left_comb_forest`; t must avoid a_4 (left children on the
/// right spine are left combs).
inline Composition phi_left_comb_forest(const BinaryTree& t) {
  std::vector<std::size_t> parts;
  const std::string& w = t.word();
  std::size_t j = 0;
  while (w[j] == '2') {
    std::size_t e = word::subtree_end(w, j + 1);
    std::size_t d = 0;
    while (w[j + 1 + d] == '2') ++d;
    if (e - (j + 1) != 2 * d + 1) throw rejected_input("not a left-comb forest: " + w);
    parts.push_back(d + 1);
    j = e;
  }
  return Composition(std::move(parts));
}

/// L_{l_1} o_2 (L_{l_2} o_2 (...)), the empty composition giving the leaf.
inline BinaryTree lightning(const Composition& c) {
  std::string w = "0";
  for (std::size_t k = c.size(); k-- > 0;) {
    std::size_t a = c.parts[k];
    w = std::string(a, '2') + "0" + w + std::string(a - 1, '0');
  }
  return BinaryTree::from_valid_word(w);
}

/// Inverse of `lightning`; rejects other shapes.
inline Composition phi_lightning(const BinaryTree& t) {
  const std::string& w = t.word();
  std::vector<std::size_t> parts;
  std::size_t j = 0;
  // Each layer is 2^a 0 X 0^(a-1); the tail zeros close the layers in reverse.
  std::vector<std::size_t> closers;
  while (w[j] == '2') {
    std::size_t a = 0;
    while (w[j] == '2') {
      ++a;
      ++j;
    }
    if (w[j] != '0') throw rejected_input("not a lightning tree: " + w);
    ++j;
    parts.push_back(a);
    closers.push_back(a - 1);
  }
  if (w[j] != '0') throw rejected_input("not a lightning tree: " + w);
  ++j;
  for (std::size_t k = closers.size(); k-- > 0;) {
    for (std::size_t z = 0; z < closers[k]; ++z) {
      if (j >= w.size() || w[j] != '0') throw rejected_input("not a lightning tree: " + w);
      ++j;
    }
  }
  if (j != w.size()) throw rejected_input("not a lightning tree: " + w);
  return Composition(std::move(parts));
}

// ----------------------------------------------------------- realizations

enum class PhiKind { left_comb_forest, lightning };

/// A composition law, the tree map, and the convergent single rule of the
/// quotient it realizes.
struct Realization {
  std::string name;
  CompositionOp op;
  PhiKind phi_kind;
  bool mirrored;  // phi applied to the mirrored tree, op at mirrored positions
  int rule_lhs, rule_rhs;

  RewriteSystem system() const { return RewriteSystem{RewriteRule{cubic_tree(rule_lhs), cubic_tree(rule_rhs)}}; }

  Composition compose(const Composition& l, std::size_t i, const Composition& m) const {
    return mirrored ? mirrored_compose(op, l, i, m) : op(l, i, m);
  }

  Composition phi(const BinaryTree& t) const {
    BinaryTree u = mirrored ? mirror(t) : t;
    return phi_kind == PhiKind::left_comb_forest ? phi_left_comb_forest(u) : phi_lightning(u);
  }

  BinaryTree phi_inverse(const Composition& c) const {
    BinaryTree u = phi_kind == PhiKind::left_comb_forest ? left_comb_forest(c) : lightning(c);
    return mirrored ? mirror(u) : u;
  }

  /// The quotient label Mag^{i,j}, i < j.
  std::string quotient() const {
    int a = std::min(rule_lhs, rule_rhs), b = std::max(rule_lhs, rule_rhs);
    return "Mag^{" + std::to_string(a) + "," + std::to_string(b) + "}";
  }
};

inline const std::vector<Realization>& realizations() {
  static const std::vector<Realization> table = {
      {"comp_12", comp_12, PhiKind::left_comb_forest, false, 4, 5},
      {"comp_12 mirrored", comp_12, PhiKind::left_comb_forest, true, 2, 1},
      {"comp_13", comp_13, PhiKind::lightning, false, 3, 5},
      {"comp_13 mirrored", comp_13, PhiKind::lightning, true, 3, 1},
      {"comp_25", comp_25, PhiKind::left_comb_forest, false, 4, 1},
      {"comp_25 mirrored", comp_25, PhiKind::left_comb_forest, true, 2, 5},
      {"comp_24", comp_24, PhiKind::left_comb_forest, false, 4, 2},
      {"comp_24 mirrored", comp_24, PhiKind::left_comb_forest, true, 2, 4},
  };
  return table;
}

/// All compositions of arity n, lex order of parts.
inline std::vector<Composition> compositions(std::size_t n) {
  std::vector<Composition> out;
  if (n == 0) return out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t left) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (std::size_t v = 1; v <= left; ++v) {
      cur.push_back(v);
      rec(left - v);
      cur.pop_back();
    }
  };
  rec(n - 1);
  return out;
}

struct CompositionTriple {
  Composition left;
  std::size_t position;
  Composition right;
};

/// First triple of arity <= max_arity (left first, then position, then right)
/// where two laws differ.
inline std::optional<CompositionTriple> distinguishing_triple(const CompositionOp& a, const CompositionOp& b,
                                                              std::size_t max_arity) {
  for (std::size_t n = 1; n <= max_arity; ++n) {
    for (std::size_t m = 1; n + m - 1 <= max_arity; ++m) {
      for (const auto& l : compositions(n)) {
        for (std::size_t i = 1; i <= n; ++i) {
          for (const auto& r : compositions(m)) {
            if (a(l, i, r) != b(l, i, r)) return CompositionTriple{l, i, r};
          }
        }
      }
    }
  }
  return std::nullopt;
}

/// First failure of the unit, sequential and parallel axioms with result
/// arity <= max_arity, as text.
inline std::optional<std::string> operad_axiom_failure(const CompositionOp& op, std::size_t max_arity) {
  std::vector<std::vector<Composition>> by(max_arity + 1);
  for (std::size_t n = 1; n <= max_arity; ++n) by[n] = compositions(n);
  auto show = [](const Composition& x, std::size_t i, const Composition& y) {
    return to_string(x) + " o_" + std::to_string(i) + " " + to_string(y);
  };
  const Composition e;
  for (std::size_t a = 1; a <= max_arity; ++a) {
    for (const auto& x : by[a]) {
      if (op(e, 1, x) != x) return "left unit fails on " + to_string(x);
      for (std::size_t i = 1; i <= a; ++i) {
        if (op(x, i, e) != x) return "right unit fails on " + show(x, i, e);
      }
    }
    for (std::size_t b = 1; a + b - 1 <= max_arity; ++b) {
      for (std::size_t c = 1; a + b + c - 2 <= max_arity; ++c) {
        for (const auto& x : by[a]) {
          for (const auto& y : by[b]) {
            for (const auto& z : by[c]) {
              for (std::size_t i = 1; i <= a; ++i) {
                for (std::size_t j = 1; j <= b; ++j) {
                  if (op(op(x, i, y), i + j - 1, z) != op(x, i, op(y, j, z))) {
                    return "sequential axiom fails on (" + show(x, i, y) + ") o_" + std::to_string(i + j - 1) + " " +
                           to_string(z);
                  }
                }
                for (std::size_t j = i + 1; j <= a; ++j) {
                  if (op(op(x, i, y), j + b - 1, z) != op(op(x, j, z), i, y)) {
                    return "parallel axiom fails on (" + show(x, i, y) + ") o_" + std::to_string(j + b - 1) + " " +
                           to_string(z);
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

/// First pair of normal forms t, u with phi(nf(t o_i u)) != phi(t) o_i phi(u),
/// result arity <= max_arity.
inline std::optional<std::string> intertwining_failure(const Realization& r, std::size_t max_arity) {
  const RewriteSystem sys = r.system();
  Normalizer nf(sys);
  std::vector<std::vector<BinaryTree>> normal(max_arity + 1);
  for (std::size_t n = 1; n <= max_arity; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      if (is_normal(sys, t)) normal[n].push_back(t);
    }
  }
  for (std::size_t a = 1; a <= max_arity; ++a) {
    for (std::size_t b = 1; a + b - 1 <= max_arity; ++b) {
      for (const auto& t : normal[a]) {
        for (const auto& u : normal[b]) {
          for (std::size_t i = 1; i <= a; ++i) {
            if (r.phi(nf(graft(t, i, u))) != r.compose(r.phi(t), i, r.phi(u))) {
              return r.name + ": phi fails to intertwine " + t.word() + " o_" + std::to_string(i) + " " + u.word();
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------ right combs

/// Graft in Mag while the result has arity <= g, otherwise R_{n-1}.
inline BinaryTree rc_compose(std::size_t g, const BinaryTree& t1, std::size_t i, const BinaryTree& t2) {
  BinaryTree t = graft(t1, i, t2);
  if (t.arity() <= g) return t;
  return right_comb(t.arity() - 1);
}

/// Generators of the right-comb congruence: every arity-(g+1) tree ~ R_g.
inline Congruence rc_congruence(std::size_t g) {
  Congruence c;
  for (const auto& t : enumerate_trees(g + 1)) {
    if (t != right_comb(g)) c.emplace_back(t, right_comb(g));
  }
  return c;
}

}  // namespace magq
