// Rewrite systems on binary trees: one-step relation, normal forms,
// convergence certification and the brute-force congruence oracle.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "magq/automaton.hpp"
#include "magq/trees.hpp"

namespace magq {

struct RewriteRule {
  BinaryTree lhs;
  BinaryTree rhs;

  static RewriteRule make(BinaryTree lhs, BinaryTree rhs) {
    if (lhs.arity() != rhs.arity()) {
      throw rejected_input("rule members have different arities: " + lhs.word() + " -> " + rhs.word());
    }
    if (lhs == rhs) throw rejected_input("rule members are equal: " + lhs.word());
    if (lhs.is_leaf()) throw rejected_input("a leaf cannot be a rule member");
    return RewriteRule{std::move(lhs), std::move(rhs)};
  }
  static RewriteRule make(std::string_view lhs, std::string_view rhs) {
    return make(BinaryTree::parse(lhs), BinaryTree::parse(rhs));
  }

  std::size_t arity() const { return lhs.arity(); }
  std::size_t degree() const { return lhs.degree(); }
  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

/// Termination orders we can certify: prefix-lex or lex on mirrored trees.
enum class TermOrder { prefix_lex, mirrored_lex };

inline const char* to_string(TermOrder o) { return o == TermOrder::prefix_lex ? "prefix-lex" : "mirrored-lex"; }

inline bool is_decreasing(const RewriteRule& r, TermOrder o) {
  if (o == TermOrder::prefix_lex) return r.lhs > r.rhs;
  return mirror_word(r.lhs.word()) > mirror_word(r.rhs.word());
}

class RewriteSystem {
 public:
  RewriteSystem() = default;
  RewriteSystem(std::initializer_list<RewriteRule> rules) {
    for (const auto& r : rules) add(r);
  }
  explicit RewriteSystem(const std::vector<RewriteRule>& rules) {
    for (const auto& r : rules) add(r);
  }

  /// Appends `r`; returns false (and ignores it) if already present.
  bool add(const RewriteRule& r) {
    if (std::find(rules_.begin(), rules_.end(), r) != rules_.end()) return false;
    rules_.push_back(r);
    return true;
  }

  std::size_t size() const noexcept { return rules_.size(); }
  bool empty() const noexcept { return rules_.empty(); }
  const RewriteRule& operator[](std::size_t i) const { return rules_[i]; }
  auto begin() const { return rules_.begin(); }
  auto end() const { return rules_.end(); }
  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }

  /// Max degree over all members; 0 for the empty system.
  std::size_t degree() const {
    std::size_t d = 0;
    for (const auto& r : rules_) d = std::max({d, r.lhs.degree(), r.rhs.degree()});
    return d;
  }

  std::vector<BinaryTree> left_members() const {
    std::vector<BinaryTree> out;
    for (const auto& r : rules_) out.push_back(r.lhs);
    return out;
  }

  friend bool operator==(const RewriteSystem&, const RewriteSystem&) = default;

 private:
  std::vector<RewriteRule> rules_;
};

/// True iff every rule has lhs > rhs in prefix-lex order.
inline bool is_lex_decreasing(const RewriteSystem& sys) {
  return std::all_of(sys.begin(), sys.end(), [](const RewriteRule& r) { return is_decreasing(r, TermOrder::prefix_lex); });
}

/// An order for which every rule decreases, preferring prefix-lex.
inline std::optional<TermOrder> termination_order(const RewriteSystem& sys) {
  for (TermOrder o : {TermOrder::prefix_lex, TermOrder::mirrored_lex}) {
    if (std::all_of(sys.begin(), sys.end(), [o](const RewriteRule& r) { return is_decreasing(r, o); })) return o;
  }
  return std::nullopt;
}

inline RewriteSystem mirror_system(const RewriteSystem& sys) {
  RewriteSystem out;
  for (const auto& r : sys) out.add(RewriteRule{mirror(r.lhs), mirror(r.rhs)});
  return out;
}

// --------------------------------------------------------- word-level steps

namespace detail {

inline std::string instantiate(std::string_view w, std::string_view rhs,
                               const std::vector<std::pair<std::size_t, std::size_t>>& subs) {
  std::string out;
  std::size_t k = 0;
  for (char c : rhs) {
    if (c == '0') {
      auto [b, e] = subs[k++];
      out.append(w.substr(b, e - b));
    } else {
      out.push_back('2');
    }
  }
  return out;
}

/// Rewrites `w` at `anchor` with `r` if it matches.
inline bool rewrite_at(std::string_view w, std::size_t anchor, const RewriteRule& r, std::string& out,
                       std::vector<std::pair<std::size_t, std::size_t>>& subs) {
  std::size_t end;
  if (!match_at(w, anchor, r.lhs.word(), &subs, &end)) return false;
  out.assign(w.substr(0, anchor));
  out += instantiate(w, r.rhs.word(), subs);
  out.append(w.substr(end));
  return true;
}

/// Words reachable in one step, sorted and deduplicated.
inline std::vector<std::string> one_step_words(const std::vector<RewriteRule>& rules, std::string_view w) {
  std::vector<std::string> out;
  std::vector<std::pair<std::size_t, std::size_t>> subs;
  std::string buf;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j] != '2') continue;
    for (const auto& r : rules) {
      if (rewrite_at(w, j, r, buf, subs)) out.push_back(buf);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

inline std::vector<BinaryTree> one_step_rewrites(const RewriteSystem& sys, const BinaryTree& t) {
  std::vector<BinaryTree> out;
  for (auto& w : detail::one_step_words(sys.rules(), t.word())) out.push_back(BinaryTree::from_valid_word(std::move(w)));
  return out;
}

/// Deterministic normalizer: smallest anchor first, then first rule in list
/// order. Construction rejects systems with no certified termination order.
class Normalizer {
 public:
  explicit Normalizer(const RewriteSystem& sys) : rules_(sys.rules()) {
    auto o = termination_order(sys);
    if (!o) throw rejected_input("termination not certified: rules are not decreasing for a lex order");
    order_ = *o;
  }

  TermOrder order() const noexcept { return order_; }

  /// Rewrites once; returns false if `w` is normal.
  bool step(std::string& w) const {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j] != '2') continue;
      for (const auto& r : rules_) {
        if (detail::rewrite_at(w, j, r, buf_, subs_)) {
          w.swap(buf_);
          return true;
        }
      }
    }
    return false;
  }

  std::string reduce(std::string w) const {
    while (step(w)) {
    }
    return w;
  }

  BinaryTree operator()(const BinaryTree& t) const { return BinaryTree::from_valid_word(reduce(t.word())); }

  /// The sequence of trees visited, starting with t and ending with its normal form.
  std::vector<BinaryTree> trace(const BinaryTree& t) const {
    std::vector<BinaryTree> out{t};
    std::string w = t.word();
    while (step(w)) out.push_back(BinaryTree::from_valid_word(w));
    return out;
  }

 private:
  std::vector<RewriteRule> rules_;
  TermOrder order_;
  mutable std::string buf_;
  mutable std::vector<std::pair<std::size_t, std::size_t>> subs_;
};

inline BinaryTree normal_form(const RewriteSystem& sys, const BinaryTree& t) { return Normalizer(sys)(t); }

inline bool is_normal(const RewriteSystem& sys, const BinaryTree& t) {
  return std::none_of(sys.begin(), sys.end(), [&](const RewriteRule& r) { return contains_subtree(t, r.lhs); });
}

// ------------------------------------------------------------- branchings

struct BranchingPair {
  BinaryTree tree;
  BinaryTree first;  // first < second
  BinaryTree second;
  friend bool operator==(const BranchingPair&, const BranchingPair&) = default;
};

/// All branching trees of degree 1..max_degree with all their result pairs.
inline std::vector<BranchingPair> branching_pairs(const RewriteSystem& sys, std::size_t max_degree) {
  std::vector<BranchingPair> out;
  if (sys.empty()) return out;
  for (std::size_t n = 2; n <= max_degree + 1; ++n) {
    for_each_tree_word(n, [&](std::string_view w) {
      auto res = detail::one_step_words(sys.rules(), w);
      for (std::size_t a = 0; a < res.size(); ++a) {
        for (std::size_t b = a + 1; b < res.size(); ++b) {
          out.push_back({BinaryTree::from_valid_word(std::string(w)), BinaryTree::from_valid_word(res[a]),
                         BinaryTree::from_valid_word(res[b])});
        }
      }
    });
  }
  return out;
}

namespace detail {

inline std::string unify_words(std::string_view a, std::string_view b) {
  if (a == "0") return std::string(b);
  if (b == "0") return std::string(a);
  std::size_t ea = word::subtree_end(a, 1), eb = word::subtree_end(b, 1);
  return "2" + unify_words(a.substr(1, ea - 1), b.substr(1, eb - 1)) + unify_words(a.substr(ea), b.substr(eb));
}

}  // namespace detail

/// Minimal trees where `inner` sits at a non-root internal node of `outer`
/// (or at the root, when the two patterns differ) with overlapping nodes.
inline std::vector<BinaryTree> overlap_trees(const BinaryTree& outer, const BinaryTree& inner) {
  std::vector<BinaryTree> out;
  const std::string& w = outer.word();
  bool same = outer == inner;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j] != '2' || (same && j == 0)) continue;
    std::size_t e = word::subtree_end(w, j);
    std::string u = w.substr(0, j) + detail::unify_words(std::string_view(w).substr(j, e - j), inner.word()) + w.substr(e);
    out.push_back(BinaryTree::from_valid_word(std::move(u)));
  }
  return out;
}

/// Sorted set of overlap trees over all ordered pairs of left members.
inline std::vector<BinaryTree> critical_overlaps(const RewriteSystem& sys) {
  std::vector<BinaryTree> out;
  for (const auto& a : sys) {
    for (const auto& b : sys) {
      auto v = overlap_trees(a.lhs, b.lhs);
      out.insert(out.end(), v.begin(), v.end());
    }
  }
  std::sort(out.begin(), out.end(), [](const BinaryTree& x, const BinaryTree& y) {
    return x.degree() != y.degree() ? x.degree() < y.degree() : x < y;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// First non-joinable pair among the one-step results of `t`, if any.
inline std::optional<BranchingPair> non_joinable_pair(const Normalizer& nf, const RewriteSystem& sys, const BinaryTree& t) {
  auto res = detail::one_step_words(sys.rules(), t.word());
  std::vector<std::string> nfs;
  for (const auto& r : res) nfs.push_back(nf.reduce(r));
  for (std::size_t a = 0; a < res.size(); ++a) {
    for (std::size_t b = a + 1; b < res.size(); ++b) {
      if (nfs[a] != nfs[b]) {
        return BranchingPair{t, BinaryTree::from_valid_word(res[a]), BinaryTree::from_valid_word(res[b])};
      }
    }
  }
  return std::nullopt;
}

struct ConvergenceCertificate {
  bool convergent = false;
  TermOrder order = TermOrder::prefix_lex;
  std::size_t bound = 0;                       // largest degree checked
  std::vector<std::uint64_t> trees_checked;    // index = degree
  std::vector<std::uint64_t> branching_trees;  // trees with >= 2 results, index = degree
  std::optional<BranchingPair> counterexample;
};

/// Exhaustive local-confluence check of every tree of degree <= bound
/// (default 2·deg - 1). Trees of one arity are visited in increasing term
/// order, so every one-step result already has a known normal form.
inline ConvergenceCertificate certify_convergence(const RewriteSystem& sys, std::optional<std::size_t> bound = std::nullopt) {
  auto order = termination_order(sys);
  if (!order) throw rejected_input("termination not certified: rules are not decreasing for a lex order");
  ConvergenceCertificate cert;
  cert.order = *order;
  std::size_t deg = sys.degree();
  cert.bound = bound ? *bound : (deg == 0 ? 0 : 2 * deg - 1);
  cert.trees_checked.assign(cert.bound + 1, 0);
  cert.branching_trees.assign(cert.bound + 1, 0);
  if (deg == 0) {
    cert.convergent = true;
    return cert;
  }
  const bool mirrored = *order == TermOrder::mirrored_lex;
  for (std::size_t n = 2; n <= cert.bound + 1; ++n) {
    TreeRanker rk(n);
    std::vector<std::uint32_t> nf(rk.size());
    std::uint32_t idx = 0;
    bool failed = false;
    for_each_tree_word(n, [&](std::string_view key_word) {
      if (failed) return;
      std::string w = mirrored ? mirror_word(key_word) : std::string(key_word);
      auto res = detail::one_step_words(sys.rules(), w);
      ++cert.trees_checked[n - 1];
      if (res.empty()) {
        nf[idx] = idx;
      } else {
        if (res.size() >= 2) ++cert.branching_trees[n - 1];
        std::vector<std::uint32_t> ids;
        for (const auto& r : res) {
          std::uint64_t k = mirrored ? rk.rank(mirror_word(r)) : rk.rank(r);
          ids.push_back(nf[k]);
        }
        nf[idx] = ids[0];
        for (std::size_t a = 1; a < ids.size(); ++a) {
          if (ids[a] != ids[0]) {
            cert.counterexample = BranchingPair{BinaryTree::from_valid_word(w), BinaryTree::from_valid_word(res[0]),
                                                BinaryTree::from_valid_word(res[a])};
            failed = true;
            return;
          }
        }
      }
      ++idx;
    });
    if (failed) return cert;
  }
  cert.convergent = true;
  return cert;
}

/// Largest arity the oracle may enumerate; MAGQ_MAX_ARITY overrides.
inline std::size_t oracle_arity_budget() {
  if (const char* s = std::getenv("MAGQ_MAX_ARITY")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && v > 0 && v <= 30) return static_cast<std::size_t>(v);
  }
  return 13;
}

struct ExhaustiveCheck {
  bool terminating = true;
  bool confluent = true;
  std::size_t max_arity = 0;
  std::optional<BinaryTree> cycle_witness;     // a tree on a rewriting cycle or leading to one
  std::optional<BranchingPair> counterexample;  // two one-step results with different normal forms
};

/// Termination and confluence on all trees of arity <= max_arity, with no
/// order assumed: per arity the one-step graph is finite, so it is checked
/// for cycles and then resolved sinks-first.
inline ExhaustiveCheck exhaustive_convergence(const RewriteSystem& sys, std::size_t max_arity) {
  if (max_arity > oracle_arity_budget()) throw rejected_input("exhaustive check beyond the arity budget");
  ExhaustiveCheck out;
  out.max_arity = max_arity;
  constexpr std::uint32_t none = UINT32_MAX, mixed = UINT32_MAX - 1;
  for (std::size_t n = 2; n <= max_arity; ++n) {
    TreeRanker rk(n);
    const std::size_t N = rk.size();
    std::vector<std::vector<std::uint32_t>> succ(N), pred(N);
    std::vector<std::string> ws;
    ws.reserve(N);
    for_each_tree_word(n, [&](std::string_view w) { ws.emplace_back(w); });
    for (std::uint32_t i = 0; i < N; ++i) {
      for (const auto& r : detail::one_step_words(sys.rules(), ws[i])) {
        auto k = static_cast<std::uint32_t>(rk.rank(r));
        succ[i].push_back(k);
        pred[k].push_back(i);
      }
    }
    std::vector<std::uint32_t> pending(N), nf(N, none), queue;
    for (std::uint32_t i = 0; i < N; ++i) {
      pending[i] = static_cast<std::uint32_t>(succ[i].size());
      if (pending[i] == 0) {
        nf[i] = i;
        queue.push_back(i);
      }
    }
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (std::uint32_t p : pred[queue[q]]) {
        if (--pending[p] != 0) continue;
        std::uint32_t v = nf[succ[p][0]];
        for (std::uint32_t s : succ[p]) {
          if (nf[s] != v || v == mixed) {
            if (out.confluent && v != mixed && nf[s] != mixed) {
              std::size_t a = &s - succ[p].data();
              out.counterexample = BranchingPair{BinaryTree::from_valid_word(ws[p]),
                                                 BinaryTree::from_valid_word(ws[succ[p][0]]),
                                                 BinaryTree::from_valid_word(ws[succ[p][a]])};
            }
            out.confluent = false;
            v = mixed;
            break;
          }
        }
        nf[p] = v;
        queue.push_back(p);
      }
    }
    if (queue.size() != N) {
      out.terminating = false;
      for (std::uint32_t i = 0; i < N; ++i) {
        if (nf[i] == none) {
          out.cycle_witness = BinaryTree::from_valid_word(ws[i]);
          break;
        }
      }
    }
    if (!out.terminating || !out.confluent) {
      out.max_arity = n;
      return out;
    }
  }
  return out;
}

/// Joinability of every critical overlap; equivalent to local confluence for
/// linear patterns. Returns the first failure.
inline std::optional<BranchingPair> check_critical_overlaps(const RewriteSystem& sys) {
  Normalizer nf(sys);
  for (const auto& t : critical_overlaps(sys)) {
    if (auto p = non_joinable_pair(nf, sys, t)) return p;
  }
  return std::nullopt;
}

// --------------------------------------------------------------- oracle

using Congruence = std::vector<std::pair<BinaryTree, BinaryTree>>;

inline Congruence symmetrize(const RewriteSystem& sys) {
  Congruence out;
  for (const auto& r : sys) out.emplace_back(r.lhs, r.rhs);
  return out;
}

class CongruencePartition {
 public:
  CongruencePartition(std::size_t n, std::vector<std::uint32_t> class_of, std::size_t count)
      : n_(n), class_of_(std::move(class_of)), count_(count), ranker_(n) {}

  std::size_t arity() const noexcept { return n_; }
  std::size_t class_count() const noexcept { return count_; }
  std::size_t tree_count() const noexcept { return class_of_.size(); }

  /// Classes are numbered by their lex-smallest member.
  std::uint32_t class_of(const BinaryTree& t) const { return class_of_[ranker_.rank(t)]; }
  std::uint32_t class_of_rank(std::uint64_t r) const { return class_of_[r]; }
  bool same_class(const BinaryTree& a, const BinaryTree& b) const { return class_of(a) == class_of(b); }

  /// Lex-smallest member of each class.
  std::vector<BinaryTree> representatives() const {
    std::vector<BinaryTree> out(count_);
    std::vector<bool> seen(count_, false);
    for (std::uint64_t r = 0; r < class_of_.size(); ++r) {
      auto c = class_of_[r];
      if (!seen[c]) {
        seen[c] = true;
        out[c] = ranker_.unrank(r);
      }
    }
    return out;
  }

  std::vector<std::vector<BinaryTree>> classes() const {
    std::vector<std::vector<BinaryTree>> out(count_);
    for (std::uint64_t r = 0; r < class_of_.size(); ++r) out[class_of_[r]].push_back(ranker_.unrank(r));
    return out;
  }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> class_of_;
  std::size_t count_;
  TreeRanker ranker_;
};

/// Union-find closure of the symmetric one-step relation on arity-n trees.
inline CongruencePartition congruence_classes(const Congruence& gens, std::size_t n) {
  if (n < 1) throw rejected_input("arity must be at least 1");
  std::size_t budget = oracle_arity_budget();
  if (n > budget) {
    throw rejected_input("arity " + std::to_string(n) + " exceeds the oracle budget " + std::to_string(budget) +
                         " (would enumerate " + std::to_string(catalan(n - 1)) + " trees; set MAGQ_MAX_ARITY)");
  }
  std::vector<RewriteRule> rules;
  for (const auto& [a, b] : gens) {
    if (a.arity() != b.arity()) throw rejected_input("congruence pair with different arities: " + a.word() + " ~ " + b.word());
    if (a == b || a.is_leaf()) continue;
    rules.push_back({a, b});
    rules.push_back({b, a});
  }
  TreeRanker rk(n);
  std::vector<std::uint32_t> parent(rk.size());
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::uint32_t idx = 0;
  std::vector<std::pair<std::size_t, std::size_t>> subs;
  std::string buf;
  for_each_tree_word(n, [&](std::string_view w) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j] != '2') continue;
      for (const auto& r : rules) {
        if (!detail::rewrite_at(w, j, r, buf, subs)) continue;
        auto a = find(idx), b = find(static_cast<std::uint32_t>(rk.rank(buf)));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    ++idx;
  });
  std::vector<std::uint32_t> cls(parent.size());
  std::vector<std::uint32_t> id_of_root(parent.size(), UINT32_MAX);
  std::uint32_t count = 0;
  for (std::uint32_t r = 0; r < parent.size(); ++r) {
    auto root = find(r);
    if (id_of_root[root] == UINT32_MAX) id_of_root[root] = count++;
    cls[r] = id_of_root[root];
  }
  return CongruencePartition(n, std::move(cls), count);
}

// ---------------------------------------------------------- counting

/// Counts of trees avoiding every left member, arities 1..n_max.
inline std::vector<mpz_class> normal_form_counts(const RewriteSystem& sys, std::size_t n_max) {
  if (sys.empty()) {
    std::vector<mpz_class> out;
    for (std::size_t n = 1; n <= n_max; ++n) {
      // Catalan(n-1) exactly, without the 64-bit limit.
      mpz_class c;
      mpz_bin_uiui(c.get_mpz_t(), 2 * (n - 1), n - 1);
      out.push_back(c / mpz_class(static_cast<unsigned long>(n)));
    }
    return out;
  }
  return AvoidanceAutomaton(sys.left_members()).count<mpz_class>(n_max);
}


/// Direct filtering over all trees; meant for small arities.
inline std::vector<std::uint64_t> normal_form_counts_by_filtering(const RewriteSystem& sys, std::size_t n_max) {
  std::vector<std::uint64_t> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::uint64_t c = 0;
    for_each_tree_word(n, [&](std::string_view w) {
      BinaryTree t = BinaryTree::from_valid_word(std::string(w));
      if (is_normal(sys, t)) ++c;
    });
    out.push_back(c);
  }
  return out;
}

// ---------------------------------------------------------- text formats

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

/// Splits non-comment lines on `sep`; calls f(line_no, left, right).
template <class F>
void for_each_pair_line(std::string_view text, std::string_view sep, F&& f) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    std::string t = trim(line);
    if (t.empty()) continue;
    auto p = t.find(sep);
    if (p == std::string::npos) {
      throw parse_error("line " + std::to_string(no) + ": expected 'LHS " + std::string(sep) + " RHS'", no);
    }
    BinaryTree l, r;
    try {
      l = BinaryTree::parse(t.substr(0, p));
      r = BinaryTree::parse(t.substr(p + sep.size()));
    } catch (const parse_error& e) {
      throw parse_error("line " + std::to_string(no) + ": " + e.what(), no);
    }
    f(no, std::move(l), std::move(r));
  }
}

}  // namespace detail

/// Lines `LHS -> RHS`, `#` starts a comment.
inline RewriteSystem parse_rules(std::string_view text) {
  RewriteSystem sys;
  detail::for_each_pair_line(text, "->", [&](std::size_t no, BinaryTree l, BinaryTree r) {
    try {
      sys.add(RewriteRule::make(std::move(l), std::move(r)));
    } catch (const parse_error&) {
      throw;
    } catch (const rejected_input& e) {
      throw parse_error("line " + std::to_string(no) + ": " + e.what(), no);
    }
  });
  return sys;
}

/// Lines `LHS ~ RHS`, `#` starts a comment.
inline Congruence parse_congruence(std::string_view text) {
  Congruence out;
  detail::for_each_pair_line(text, "~", [&](std::size_t no, BinaryTree l, BinaryTree r) {
    if (l.arity() != r.arity()) throw parse_error("line " + std::to_string(no) + ": members have different arities", no);
    out.emplace_back(std::move(l), std::move(r));
  });
  return out;
}

inline std::string to_text(const RewriteSystem& sys) {
  std::string out;
  for (const auto& r : sys) out += r.lhs.word() + " -> " + r.rhs.word() + "\n";
  return out;
}

inline std::string to_text(const Congruence& c) {
  std::string out;
  for (const auto& [a, b] : c) out += a.word() + " ~ " + b.word() + "\n";
  return out;
}

}  // namespace magq
