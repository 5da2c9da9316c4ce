// Binary trees of the free magmatic operad, keyed by their prefix words.
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace magq {

/// Thrown for any malformed or out-of-range input.
class rejected_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed prefix word; `position` is the index of the first violation.
class parse_error : public rejected_input {
 public:
  parse_error(const std::string& msg, std::size_t position)
      : rejected_input(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

namespace word {

/// End (exclusive) of the subtree whose root symbol sits at `pos`.
inline std::size_t subtree_end(std::string_view w, std::size_t pos) {
  std::size_t need = 1;
  while (need != 0) {
    need += (w[pos] == '2') ? 1 : std::size_t(-1);
    ++pos;
  }
  return pos;
}

/// Position of the first violation, or npos if `w` is a valid prefix word.
inline std::size_t first_violation(std::string_view w) {
  if (w.empty()) return 0;
  std::size_t need = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (need == 0) return i;  // trailing symbols after a complete tree
    char c = w[i];
    if (c == '2') {
      ++need;
    } else if (c == '0') {
      --need;
    } else {
      return i;
    }
  }
  return need == 0 ? std::string_view::npos : w.size();
}

inline std::size_t count_leaves(std::string_view w) {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), '0'));
}

/// Position of the i-th '0' (1-based), or npos.
inline std::size_t leaf_position(std::string_view w, std::size_t i) {
  std::size_t c = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] == '0' && ++c == i) return k;
  }
  return std::string_view::npos;
}

}  // namespace word

class BinaryTree {
 public:
  /// The leaf (operadic unit).
  BinaryTree() : w_("0") {}

  static BinaryTree leaf() { return BinaryTree(); }

  static BinaryTree node(const BinaryTree& l, const BinaryTree& r) {
    std::string w;
    w.reserve(1 + l.w_.size() + r.w_.size());
    w.push_back('2');
    w += l.w_;
    w += r.w_;
    return BinaryTree(std::move(w), trusted{});
  }

  /// Parses a prefix word over {0,2}.
  static BinaryTree from_word(std::string_view w) {
    std::size_t bad = word::first_violation(w);
    if (bad != std::string_view::npos) {
      throw parse_error("invalid prefix word '" + std::string(w) + "'", bad);
    }
    return BinaryTree(std::string(w), trusted{});
  }

  /// Skips validation; `w` must already be a valid prefix word.
  static BinaryTree from_valid_word(std::string w) { return BinaryTree(std::move(w), trusted{}); }

  /// Accepts a prefix word or the parenthesized form `(A,B)` with `L` for a leaf.
  static BinaryTree parse(std::string_view text);

  const std::string& word() const noexcept { return w_; }
  std::size_t arity() const noexcept { return (w_.size() + 1) / 2; }
  std::size_t degree() const noexcept { return w_.size() / 2; }
  bool is_leaf() const noexcept { return w_.size() == 1; }

  BinaryTree left() const {
    if (is_leaf()) throw rejected_input("leaf has no left subtree");
    std::size_t e = word::subtree_end(w_, 1);
    return BinaryTree(w_.substr(1, e - 1), trusted{});
  }
  BinaryTree right() const {
    if (is_leaf()) throw rejected_input("leaf has no right subtree");
    std::size_t e = word::subtree_end(w_, 1);
    return BinaryTree(w_.substr(e), trusted{});
  }

  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;
  // '0' < '2' in ASCII, so plain string order is the lex order on trees.
  friend std::strong_ordering operator<=>(const BinaryTree& a, const BinaryTree& b) {
    int c = a.w_.compare(b.w_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  struct trusted {};
  BinaryTree(std::string w, trusted) : w_(std::move(w)) {}
  std::string w_;
};

namespace detail {

inline BinaryTree parse_paren(std::string_view s, std::size_t& i) {
  auto skip = [&] {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  };
  skip();
  if (i >= s.size()) throw parse_error("unexpected end of tree", i);
  if (s[i] == 'L' || s[i] == 'l') {
    ++i;
    return BinaryTree::leaf();
  }
  if (s[i] != '(') throw parse_error("expected '(' or 'L'", i);
  ++i;
  BinaryTree l = parse_paren(s, i);
  skip();
  if (i >= s.size() || s[i] != ',') throw parse_error("expected ','", i);
  ++i;
  BinaryTree r = parse_paren(s, i);
  skip();
  if (i >= s.size() || s[i] != ')') throw parse_error("expected ')'", i);
  ++i;
  return BinaryTree::node(l, r);
}

}  // namespace detail

inline BinaryTree BinaryTree::parse(std::string_view text) {
  std::size_t b = text.find_first_not_of(" \t\r\n");
  std::size_t e = text.find_last_not_of(" \t\r\n");
  if (b == std::string_view::npos) throw parse_error("empty tree", 0);
  text = text.substr(b, e - b + 1);
  if (text.front() == '(' || text.front() == 'L' || text.front() == 'l') {
    std::size_t i = 0;
    BinaryTree t = detail::parse_paren(text, i);
    if (i != text.size()) throw parse_error("trailing characters after tree", i);
    return t;
  }
  return from_word(text);
}

/// Parenthesized form, `L` for leaves.
inline std::string to_paren(const BinaryTree& t) {
  const std::string& w = t.word();
  std::string out;
  // Each '2' opens a pair; a stack of "children seen" decides ',' and ')'.
  std::vector<int> seen;
  for (char c : w) {
    if (c == '2') {
      out.push_back('(');
      seen.push_back(0);
      continue;
    }
    out.push_back('L');
    while (!seen.empty()) {
      if (++seen.back() == 1) {
        out.push_back(',');
        break;
      }
      out.push_back(')');
      seen.pop_back();
    }
  }
  return out;
}

// ---------------------------------------------------------------- operations

/// Grafts the root of `s` on the i-th leaf of `t` (1-based).
inline BinaryTree graft(const BinaryTree& t, std::size_t i, const BinaryTree& s) {
  if (i < 1 || i > t.arity()) {
    throw rejected_input("graft index " + std::to_string(i) + " out of range 1.." +
                         std::to_string(t.arity()));
  }
  const std::string& w = t.word();
  std::size_t k = word::leaf_position(w, i);
  std::string r;
  r.reserve(w.size() + s.word().size() - 1);
  r.append(w, 0, k);
  r += s.word();
  r.append(w, k + 1);
  return BinaryTree::from_valid_word(std::move(r));
}

/// t ∘ [s_1, ..., s_n]: all leaves replaced at once.
inline BinaryTree complete_graft(const BinaryTree& t, const std::vector<BinaryTree>& subs) {
  if (subs.size() != t.arity()) {
    throw rejected_input("complete_graft expects " + std::to_string(t.arity()) +
                         " subtrees, got " + std::to_string(subs.size()));
  }
  std::string r;
  std::size_t k = 0;
  for (char c : t.word()) {
    if (c == '0') {
      r += subs[k++].word();
    } else {
      r.push_back('2');
    }
  }
  return BinaryTree::from_valid_word(std::move(r));
}

inline std::strong_ordering lex_compare(const BinaryTree& a, const BinaryTree& b) { return a <=> b; }

inline std::size_t left_rank(const BinaryTree& t) {
  const std::string& w = t.word();
  return w.find_first_not_of('2');
}

/// Left comb 2^γ 0^(γ+1).
inline BinaryTree left_comb(std::size_t gamma) {
  return BinaryTree::from_valid_word(std::string(gamma, '2') + std::string(gamma + 1, '0'));
}

/// Right comb (20)^γ 0.
inline BinaryTree right_comb(std::size_t gamma) {
  std::string w;
  w.reserve(2 * gamma + 1);
  for (std::size_t k = 0; k < gamma; ++k) w += "20";
  w.push_back('0');
  return BinaryTree::from_valid_word(std::move(w));
}

namespace detail {

inline void mirror_into(std::string_view w, std::string& out) {
  if (w.size() == 1) {
    out.push_back('0');
    return;
  }
  std::size_t e = word::subtree_end(w, 1);
  out.push_back('2');
  mirror_into(w.substr(e), out);
  mirror_into(w.substr(1, e - 1), out);
}

}  // namespace detail

inline std::string mirror_word(std::string_view w) {
  std::string out;
  out.reserve(w.size());
  detail::mirror_into(w, out);
  return out;
}

inline BinaryTree mirror(const BinaryTree& t) { return BinaryTree::from_valid_word(mirror_word(t.word())); }

/// z_d = z_{d-1} ∘_{⌊(d-1)/2⌋+1} 200, z_0 = leaf.
inline BinaryTree z_tree(std::size_t d) {
  BinaryTree z;
  const BinaryTree gen = BinaryTree::from_valid_word("200");
  for (std::size_t k = 1; k <= d; ++k) z = graft(z, (k - 1) / 2 + 1, gen);
  return z;
}

// ------------------------------------------------------------- occurrences

/// Matches pattern `p` anchored at `anchor` of `w`. On success stores the
/// [begin,end) span of the subtree sitting under each pattern leaf and
/// returns the end of the matched region.
inline bool match_at(std::string_view w, std::size_t anchor, std::string_view p,
                     std::vector<std::pair<std::size_t, std::size_t>>* subs, std::size_t* end) {
  std::size_t i = anchor;
  if (subs) subs->clear();
  for (char c : p) {
    if (i >= w.size()) return false;
    if (c == '0') {
      std::size_t e = word::subtree_end(w, i);
      if (subs) subs->emplace_back(i, e);
      i = e;
    } else {
      if (w[i] != '2') return false;
      ++i;
    }
  }
  if (end) *end = i;
  return true;
}

struct Occurrence {
  std::size_t anchor;  // position in the prefix word of the host
  std::size_t end;     // end of the matched region
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// Internal-node anchors where `s` embeds; pattern leaves take whole subtrees.
inline std::vector<Occurrence> occurrences(const BinaryTree& t, const BinaryTree& s) {
  std::vector<Occurrence> out;
  const std::string& w = t.word();
  if (s.is_leaf()) {
    for (std::size_t j = 0; j < w.size(); ++j) out.push_back({j, word::subtree_end(w, j)});
    return out;
  }
  for (std::size_t j = 0; j < w.size(); ++j) {
    std::size_t e;
    if (w[j] == '2' && match_at(w, j, s.word(), nullptr, &e)) out.push_back({j, e});
  }
  return out;
}

inline bool contains_subtree(const BinaryTree& t, const BinaryTree& s) {
  if (s.is_leaf()) return true;
  const std::string& w = t.word();
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j] == '2' && match_at(w, j, s.word(), nullptr, nullptr)) return true;
  }
  return false;
}

// -------------------------------------------------- counting and enumeration

/// Catalan(k) for k <= 33 (fits in 64 bits).
inline std::uint64_t catalan(std::size_t k) {
  if (k > 33) throw rejected_input("catalan index too large for 64-bit counting");
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

/// Lex ranking of the trees of one arity. C(r, k) counts the ways to finish a
/// word with r symbols '2' still to place while k subtrees are pending.
class TreeRanker {
 public:
  explicit TreeRanker(std::size_t arity) : n_(arity), width_(2 * arity + 2) {
    if (arity < 1 || arity > 34) throw rejected_input("ranker arity out of range 1..34");
    std::size_t deg = arity - 1;
    table_.assign((deg + 1) * width_, 0);
    for (std::size_t r = 0; r <= deg; ++r) {
      for (std::size_t k = 0; k + 1 < width_; ++k) {
        std::uint64_t v = 0;
        if (r == 0) {
          v = 1;
        } else if (k > 0) {
          v = at(r - 1, k + 1) + (k >= 2 ? at(r, k - 1) : 0);
        }
        table_[r * width_ + k] = v;
      }
    }
  }

  std::size_t arity() const noexcept { return n_; }
  std::uint64_t size() const { return at(n_ - 1, 1); }

  std::uint64_t rank(std::string_view w) const {
    std::size_t r = n_ - 1, k = 1;
    std::uint64_t idx = 0;
    for (char c : w) {
      if (c == '2') {
        if (k >= 2) idx += at(r, k - 1);  // words with '0' here come first
        --r;
        ++k;
      } else {
        --k;
      }
    }
    return idx;
  }
  std::uint64_t rank(const BinaryTree& t) const { return rank(t.word()); }

  BinaryTree unrank(std::uint64_t idx) const {
    std::string w;
    w.reserve(2 * n_ - 1);
    std::size_t r = n_ - 1, k = 1;
    while (k > 0) {
      std::uint64_t with_zero = (k >= 2 || r == 0) ? at(r, k - 1) : 0;
      if (idx < with_zero) {
        w.push_back('0');
        --k;
      } else {
        idx -= with_zero;
        w.push_back('2');
        --r;
        ++k;
      }
    }
    return BinaryTree::from_valid_word(std::move(w));
  }

 private:
  std::uint64_t at(std::size_t r, std::size_t k) const { return k < width_ ? table_[r * width_ + k] : 0; }
  std::size_t n_;
  std::size_t width_;
  std::vector<std::uint64_t> table_;
};

/// Calls f(word) for each tree of arity n in lex order.
template <class F>
void for_each_tree_word(std::size_t n, F&& f) {
  if (n < 1) return;
  std::string w(2 * n - 1, '0');
  // Depth-first fill; try '0' before '2' to get lex order.
  std::function<void(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t r,
                                                                       std::size_t k) {
    if (k == 0) {
      f(std::string_view(w));
      return;
    }
    if (k >= 2 || r == 0) {
      w[pos] = '0';
      rec(pos + 1, r, k - 1);
    }
    if (r > 0) {
      w[pos] = '2';
      rec(pos + 1, r - 1, k + 1);
    }
  };
  rec(0, n - 1, 1);
}

inline std::vector<BinaryTree> enumerate_trees(std::size_t n) {
  if (n < 1) throw rejected_input("arity must be at least 1");
  std::vector<BinaryTree> out;
  for_each_tree_word(n, [&](std::string_view w) { out.push_back(BinaryTree::from_valid_word(std::string(w))); });
  return out;
}

}  // namespace magq

template <>
struct std::hash<magq::BinaryTree> {
  std::size_t operator()(const magq::BinaryTree& t) const noexcept { return std::hash<std::string>{}(t.word()); }
};
