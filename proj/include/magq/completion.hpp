// Buchberger-style completion of set-theoretic operad presentations and
// the backtracking variant that also tries reversed orientations.
#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "magq/rewriting.hpp"

namespace magq {

enum class CompletionStatus { completed, budget_exhausted };

inline const char* to_string(CompletionStatus s) { return s == CompletionStatus::completed ? "completed" : "budget_exhausted"; }

struct AddedRule {
  RewriteRule rule;
  BinaryTree provenance;  // branching tree whose pair produced the rule
};

struct CompletionTrace {
  RewriteSystem initial_rules;
  std::vector<AddedRule> added_rules;
  RewriteSystem system;                      // initial rules followed by added ones
  std::vector<std::size_t> per_arity_counts;  // index = arity - 1, up to max_arity
  CompletionStatus status = CompletionStatus::completed;
  std::size_t max_arity = 0;
  std::size_t verified_arity = 0;  // all branchings of arity <= this were resolved
  std::string reason;              // why the budget ran out, empty when completed
  std::vector<BranchingPair> unresolved;  // non-joinable pairs past the arity budget
  double wall_time = 0.0;
};

namespace detail {

struct WorkKey {
  std::size_t degree;
  std::string word;
  friend auto operator<=>(const WorkKey&, const WorkKey&) = default;
};

class Worklist {
 public:
  explicit Worklist(std::size_t max_arity) : max_arity_(max_arity) {}

  void push_overlaps(const RewriteSystem& sys, const RewriteRule& added) {
    for (const auto& r : sys) {
      for (const auto& t : overlap_trees(added.lhs, r.lhs)) push(t);
      if (!(r == added)) {
        for (const auto& t : overlap_trees(r.lhs, added.lhs)) push(t);
      }
    }
  }

  void push_all(const RewriteSystem& sys) {
    for (const auto& t : critical_overlaps(sys)) push(t);
  }

  bool empty() const { return queue_.empty(); }

  BinaryTree pop() {
    auto it = queue_.begin();
    BinaryTree t = BinaryTree::from_valid_word(it->word);
    queue_.erase(it);
    return t;
  }

  /// Overlaps beyond the arity budget, in arrival order.
  const std::vector<BinaryTree>& deferred() const { return deferred_; }

 private:
  void push(const BinaryTree& t) {
    if (!seen_.insert(t.word()).second) return;
    if (t.arity() > max_arity_) {
      deferred_.push_back(t);
    } else {
      queue_.insert({t.degree(), t.word()});
    }
  }

  std::size_t max_arity_;
  std::set<WorkKey> queue_;
  std::unordered_set<std::string> seen_;
  std::vector<BinaryTree> deferred_;
};

inline std::vector<std::size_t> arity_histogram(const RewriteSystem& sys, std::size_t max_arity) {
  std::vector<std::size_t> out(max_arity, 0);
  for (const auto& r : sys) {
    if (r.arity() >= 1 && r.arity() <= max_arity) ++out[r.arity() - 1];
  }
  return out;
}

/// Resolves every branching pair of `t` against `sys`, adding max -> min rules.
/// Returns the rules added, in order.
inline std::vector<RewriteRule> resolve_tree(RewriteSystem& sys, const BinaryTree& t, std::size_t max_steps,
                                             std::size_t& added_so_far, bool& hit_step_budget) {
  std::vector<RewriteRule> added;
  auto res = one_step_words(sys.rules(), t.word());
  for (std::size_t a = 0; a < res.size(); ++a) {
    for (std::size_t b = a + 1; b < res.size(); ++b) {
      Normalizer nf(sys);
      std::string x = nf.reduce(res[a]), y = nf.reduce(res[b]);
      if (x == y) continue;
      if (added_so_far >= max_steps) {
        hit_step_budget = true;
        return added;
      }
      if (x < y) std::swap(x, y);
      RewriteRule r{BinaryTree::from_valid_word(x), BinaryTree::from_valid_word(y)};
      sys.add(r);
      added.push_back(r);
      ++added_so_far;
    }
  }
  return added;
}

}  // namespace detail

/// Completion with deterministic choices: branching trees are the critical
/// overlaps, processed by (degree, word); pairs of one tree in lex order.
inline CompletionTrace buchberger_complete(const RewriteSystem& sys, std::size_t max_arity, std::size_t max_steps) {
  auto t0 = std::chrono::steady_clock::now();
  if (!is_lex_decreasing(sys)) throw rejected_input("completion needs a lex-decreasing input system");
  CompletionTrace tr;
  tr.initial_rules = sys;
  tr.system = sys;
  tr.max_arity = max_arity;
  detail::Worklist wl(max_arity);
  wl.push_all(sys);
  std::size_t added = 0;
  bool step_budget = false;
  std::size_t stopped_at = 0;
  while (!wl.empty()) {
    BinaryTree t = wl.pop();
    auto new_rules = detail::resolve_tree(tr.system, t, max_steps, added, step_budget);
    for (const auto& r : new_rules) {
      tr.added_rules.push_back({r, t});
      wl.push_overlaps(tr.system, r);
    }
    if (step_budget) {
      stopped_at = t.arity();
      break;
    }
  }
  if (step_budget) {
    tr.status = CompletionStatus::budget_exhausted;
    tr.reason = "max_steps reached";
    tr.verified_arity = stopped_at - 1;
  } else {
    Normalizer nf(tr.system);
    for (const auto& t : wl.deferred()) {
      if (auto p = non_joinable_pair(nf, tr.system, t)) tr.unresolved.push_back(*p);
    }
    tr.verified_arity = max_arity;
    if (!tr.unresolved.empty()) {
      tr.status = CompletionStatus::budget_exhausted;
      tr.reason = "branching trees beyond max_arity are not joinable";
    }
  }
  tr.per_arity_counts = detail::arity_histogram(tr.system, max_arity);
  tr.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return tr;
}

/// Re-runs the recorded provenance trees in order and returns the rules they produce.
inline std::vector<RewriteRule> replay_trace(const CompletionTrace& tr) {
  RewriteSystem sys = tr.initial_rules;
  std::vector<RewriteRule> out;
  std::vector<std::string> done;
  std::size_t added = 0;
  bool budget = false;
  for (const auto& a : tr.added_rules) {
    if (!done.empty() && done.back() == a.provenance.word()) continue;
    done.push_back(a.provenance.word());
    auto v = detail::resolve_tree(sys, a.provenance, SIZE_MAX, added, budget);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

struct DimEntry {
  std::size_t arity;
  mpz_class value;
  bool verified;  // equals the quotient dimension (completion covers this arity)
};

/// Normal-form counts under the trace's rules, flagged by coverage.
inline std::vector<DimEntry> dims_from_completion(const CompletionTrace& tr, std::size_t n_max) {
  auto counts = normal_form_counts(tr.system, n_max);
  std::vector<DimEntry> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    bool ok = tr.status == CompletionStatus::completed || n <= tr.verified_arity;
    out.push_back({n, counts[n - 1], ok});
  }
  return out;
}

// ------------------------------------------------------------ backtracking

struct BacktrackOptions {
  std::size_t max_nodes = 4096;      // orientation decisions explored
  std::size_t max_reduce_steps = 20000;  // per reduction, for systems without a certified order
};

struct BacktrackResult {
  bool found = false;
  CompletionTrace trace;         // the convergent system when found
  std::size_t nodes = 0;         // orientation choices tried
  std::size_t dead_ends = 0;     // branches rejected
  std::size_t loops = 0;         // orientations rejected as looping
  std::size_t beyond_budget = 0; // branches needing rules past max_arity
  bool search_budget_hit = false;
  std::string report;
};

namespace detail {

/// Normalizer without an order certificate: detects revisits and caps steps.
class GuardedNormalizer {
 public:
  GuardedNormalizer(const std::vector<RewriteRule>& rules, std::size_t cap) : rules_(rules), cap_(cap) {}

  std::optional<std::string> reduce(std::string w) const {
    std::unordered_set<std::string> seen;
    std::vector<std::pair<std::size_t, std::size_t>> subs;
    std::string buf;
    for (std::size_t steps = 0;; ++steps) {
      if (steps > cap_ || !seen.insert(w).second) return std::nullopt;
      bool moved = false;
      for (std::size_t j = 0; j < w.size() && !moved; ++j) {
        if (w[j] != '2') continue;
        for (const auto& r : rules_) {
          if (rewrite_at(w, j, r, buf, subs)) {
            w.swap(buf);
            moved = true;
            break;
          }
        }
      }
      if (!moved) return w;
    }
  }

 private:
  const std::vector<RewriteRule>& rules_;
  std::size_t cap_;
};

/// rhs ->* lhs for the last rule, by bounded search over all rewrites.
inline bool closes_cycle(const std::vector<RewriteRule>& rules, const RewriteRule& r, std::size_t limit) {
  std::vector<std::string> frontier{r.rhs.word()};
  std::unordered_set<std::string> seen{r.rhs.word()};
  while (!frontier.empty() && seen.size() < limit) {
    std::vector<std::string> next;
    for (const auto& w : frontier) {
      for (auto& u : one_step_words(rules, w)) {
        if (u == r.lhs.word()) return true;
        if (seen.insert(u).second) next.push_back(std::move(u));
      }
    }
    frontier.swap(next);
  }
  return false;
}

struct SearchState {
  RewriteSystem sys;
  std::vector<AddedRule> added;
  std::set<WorkKey> queue;
  std::unordered_set<std::string> seen;
  std::vector<BinaryTree> deferred;
};

class Backtracker {
 public:
  Backtracker(std::size_t max_arity, const BacktrackOptions& opt, BacktrackResult& out)
      : max_arity_(max_arity), opt_(opt), out_(out) {}

  bool run(SearchState st) {
    while (!st.queue.empty()) {
      auto it = st.queue.begin();
      BinaryTree t = BinaryTree::from_valid_word(it->word);
      st.queue.erase(it);
      GuardedNormalizer nf(st.sys.rules(), opt_.max_reduce_steps);
      auto res = one_step_words(st.sys.rules(), t.word());
      for (std::size_t a = 0; a < res.size(); ++a) {
        for (std::size_t b = a + 1; b < res.size(); ++b) {
          auto x = nf.reduce(res[a]), y = nf.reduce(res[b]);
          if (!x || !y) {
            ++out_.loops;
            ++out_.dead_ends;
            return false;
          }
          if (*x == *y) continue;
          // Branch: decreasing under the current order first (prefix-lex when
          // none certifies the system), then the reversed orientation.
          TermOrder pref = termination_order(st.sys).value_or(TermOrder::prefix_lex);
          if (!is_decreasing(RewriteRule{BinaryTree::from_valid_word(*x), BinaryTree::from_valid_word(*y)}, pref)) {
            std::swap(*x, *y);
          }
          for (int flip = 0; flip < 2; ++flip) {
            if (out_.nodes >= opt_.max_nodes) {
              out_.search_budget_hit = true;
              return false;
            }
            ++out_.nodes;
            RewriteRule r = flip == 0 ? RewriteRule{BinaryTree::from_valid_word(*x), BinaryTree::from_valid_word(*y)}
                                      : RewriteRule{BinaryTree::from_valid_word(*y), BinaryTree::from_valid_word(*x)};
            SearchState child = st;
            child.sys.add(r);
            if (closes_cycle(child.sys.rules(), r, 2000)) {
              ++out_.loops;
              ++out_.dead_ends;
              continue;
            }
            child.added.push_back({r, t});
            enqueue_overlaps(child, r);
            // Revisit t: its remaining pairs may still need rules.
            child.queue.insert({t.degree(), t.word()});
            if (run(std::move(child))) return true;
          }
          return false;
        }
      }
    }
    // Worklist done: everything past the budget must already join.
    GuardedNormalizer nf(st.sys.rules(), opt_.max_reduce_steps);
    for (const auto& t : st.deferred) {
      auto res = one_step_words(st.sys.rules(), t.word());
      std::optional<std::string> first;
      for (const auto& r : res) {
        auto x = nf.reduce(r);
        if (!x) {
          ++out_.loops;
          ++out_.dead_ends;
          return false;
        }
        if (!first) {
          first = x;
        } else if (*first != *x) {
          ++out_.beyond_budget;
          ++out_.dead_ends;
          return false;
        }
      }
    }
    if (!termination_order(st.sys)) {
      ++out_.dead_ends;  // joinable, but termination has no certificate
      return false;
    }
    winner_ = std::move(st);
    return true;
  }

  void enqueue_overlaps(SearchState& st, const RewriteRule& added) {
    for (const auto& r : st.sys) {
      std::vector<BinaryTree> v = overlap_trees(added.lhs, r.lhs);
      if (!(r == added)) {
        auto w = overlap_trees(r.lhs, added.lhs);
        v.insert(v.end(), w.begin(), w.end());
      }
      for (const auto& t : v) push(st, t);
    }
  }

  void push(SearchState& st, const BinaryTree& t) {
    if (!st.seen.insert(t.word()).second) return;
    if (t.arity() > max_arity_) {
      st.deferred.push_back(t);
    } else {
      st.queue.insert({t.degree(), t.word()});
    }
  }

  SearchState& winner() { return winner_; }

 private:
  std::size_t max_arity_;
  BacktrackOptions opt_;
  BacktrackResult& out_;
  SearchState winner_;
};

}  // namespace detail

/// Depth-first search over orientations of every non-joinable pair.
inline BacktrackResult backtracking_complete(const RewriteSystem& sys, std::size_t max_arity,
                                             const BacktrackOptions& opt = {}) {
  auto t0 = std::chrono::steady_clock::now();
  BacktrackResult out;
  detail::Backtracker bt(max_arity, opt, out);
  detail::SearchState st;
  st.sys = sys;
  for (const auto& t : critical_overlaps(sys)) bt.push(st, t);
  out.found = bt.run(std::move(st));
  if (out.found) {
    auto& w = bt.winner();
    CompletionTrace& tr = out.trace;
    tr.initial_rules = sys;
    tr.system = w.sys;
    tr.added_rules = w.added;
    tr.max_arity = max_arity;
    tr.verified_arity = max_arity;
    tr.status = CompletionStatus::completed;
    tr.per_arity_counts = detail::arity_histogram(w.sys, max_arity);
    out.report = "found a convergent system with " + std::to_string(w.sys.size()) + " rules";
  } else {
    out.trace.initial_rules = sys;
    out.trace.system = sys;
    out.trace.max_arity = max_arity;
    out.trace.status = CompletionStatus::budget_exhausted;
    out.trace.per_arity_counts = detail::arity_histogram(sys, max_arity);
    out.report = std::string(out.search_budget_hit ? "search budget reached" : "search space exhausted") +
                 ": no finite convergent system within arity " + std::to_string(max_arity) + " (" +
                 std::to_string(out.nodes) + " orientation choices, " + std::to_string(out.loops) + " looping, " +
                 std::to_string(out.beyond_budget) + " needing larger rules)";
    out.trace.reason = out.report;
  }
  out.trace.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

}  // namespace magq
