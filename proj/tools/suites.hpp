// Named verification suites run by `magq verify`.
#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include <json.hpp>

#include "magq/caslattice.hpp"
#include "magq/completion.hpp"
#include "magq/linear.hpp"
#include "magq/quotients.hpp"
#include "magq/realizations.hpp"

namespace magq::cli {

using json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool passed;
  std::string detail;  // first counterexample on failure
};

struct SuiteResult {
  std::vector<Check> checks;
  json results = json::object();
  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

template <class T>
json to_json_seq(const std::vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) {
    if constexpr (std::is_same_v<T, mpz_class>) {
      a.push_back(x.get_str());
    } else {
      a.push_back(x);
    }
  }
  return a;
}

template <class A, class B>
std::string first_mismatch(const std::vector<A>& got, const std::vector<B>& want, std::size_t offset = 1) {
  for (std::size_t k = 0; k < std::min(got.size(), want.size()); ++k) {
    if (got[k] != want[k]) {
      std::ostringstream os;
      os << "arity " << k + offset << ": got " << got[k] << ", expected " << want[k];
      return os.str();
    }
  }
  if (got.size() != want.size()) return "length " + std::to_string(got.size()) + " vs " + std::to_string(want.size());
  return {};
}

inline std::vector<mpz_class> oracle_dims(const Congruence& c, std::size_t n_max) {
  std::vector<mpz_class> out;
  for (std::size_t n = 1; n <= n_max; ++n) out.emplace_back(static_cast<unsigned long>(congruence_classes(c, n).class_count()));
  return out;
}

template <class T>
std::vector<mpz_class> as_mpz(const std::vector<T>& v) {
  std::vector<mpz_class> out;
  for (auto x : v) out.emplace_back(static_cast<unsigned long>(x));
  return out;
}

inline void expect(SuiteResult& r, std::string name, std::string mismatch) {
  bool ok = mismatch.empty();
  r.checks.push_back({std::move(name), ok, std::move(mismatch)});
}

inline SuiteResult suite_cas3() {
  SuiteResult r;
  const std::size_t n_or = std::min<std::size_t>(12, oracle_arity_budget());
  const std::vector<mpz_class> expected{1, 1, 2, 4, 8, 14, 20, 19, 16, 14, 14, 15};
  auto oracle = oracle_dims(symmetrize(cas_rules(3)), n_or);
  expect(r, "oracle dimensions", first_mismatch(oracle, std::vector<mpz_class>(expected.begin(), expected.begin() + n_or)));

  auto tr = buchberger_complete(cas_rules(3), 10, 100000);
  std::string comp;
  if (tr.status != CompletionStatus::completed) comp = "completion stopped: " + tr.reason;
  else if (tr.system.size() != 11) comp = "completed system has " + std::to_string(tr.system.size()) + " rules, expected 11";
  expect(r, "completion", comp);

  auto nf = normal_form_counts(tr.system, 14);
  auto taylor = taylor_coefficients(hilbert_series_cas3(), 14);
  expect(r, "normal forms vs series", first_mismatch(nf, taylor));
  expect(r, "normal forms vs oracle", first_mismatch(std::vector<mpz_class>(nf.begin(), nf.begin() + n_or), oracle));

  std::vector<BinaryTree> lhs;
  for (const auto& rule : tr.system) lhs.push_back(rule.lhs);
  auto av = avoider_count(lhs, 25);
  std::string stable;
  for (std::size_t n = 11; n <= 25 && stable.empty(); ++n) {
    if (av[n - 1] != mpz_class(static_cast<unsigned long>(n + 3))) stable = "arity " + std::to_string(n) + ": " + av[n - 1].get_str();
  }
  expect(r, "stable regime n + 3", stable);

  r.results["oracle"] = to_json_seq(oracle);
  r.results["normal_forms"] = to_json_seq(nf);
  r.results["series"] = to_json_seq(taylor);
  r.results["rules"] = tr.system.size();
  r.results["per_arity_counts"] = to_json_seq(tr.per_arity_counts);
  r.results["avoiders_11_25"] = to_json_seq(std::vector<mpz_class>(av.begin() + 10, av.end()));
  return r;
}

inline SuiteResult suite_grassmann() {
  SuiteResult r;
  auto rows = grassmann_check(builtin_generators("as"), builtin_generators("aas"), 7);
  std::vector<std::uint64_t> meet, join;
  std::string bad;
  for (const auto& row : rows) {
    meet.push_back(row.meet);
    join.push_back(row.join);
    if (!row.holds && bad.empty()) bad = "arity " + std::to_string(row.arity);
  }
  expect(r, "As/AAs identity", bad);
  expect(r, "meet is 2Nil", first_mismatch(meet, quotient_dims_linear(builtin_generators("2nil"), 7)));
  expect(r, "join is RC(3)", first_mismatch(join, quotient_dims_linear(builtin_generators("rc:3"), 7)));

  std::mt19937_64 rng(7);
  std::string rnd;
  for (int rep = 0; rep < 20 && rnd.empty(); ++rep) {
    std::vector<LinearElement> g1{random_generator(rng)}, g2{random_generator(rng)};
    for (const auto& row : grassmann_check(g1, g2, 6)) {
      if (!row.holds) {
        rnd = to_string(g1[0]) + " | " + to_string(g2[0]) + " at arity " + std::to_string(row.arity);
        break;
      }
    }
  }
  expect(r, "20 random pairs", rnd);
  r.results["meet"] = meet;
  r.results["join"] = join;
  return r;
}

inline SuiteResult suite_realizations() {
  SuiteResult r;
  json names = json::array();
  for (const auto& real : realizations()) {
    CompositionOp op = [&](const Composition& x, std::size_t i, const Composition& y) { return real.compose(x, i, y); };
    auto ax = operad_axiom_failure(op, 8);
    expect(r, real.name + " axioms", ax.value_or(""));
    auto in = intertwining_failure(real, 8);
    expect(r, real.name + " intertwining", in.value_or(""));
    names.push_back({{"name", real.name}, {"quotient", real.quotient()}});
  }
  r.results["realizations"] = names;
  r.results["max_arity"] = 8;
  return r;
}

inline SuiteResult suite_mag34() {
  SuiteResult r;
  const std::size_t n_max = std::min<std::size_t>(12, oracle_arity_budget());
  const std::vector<mpz_class> expected{1, 1, 2, 4, 8, 14, 21, 29, 38, 48};
  auto d34 = oracle_dims({{cubic_tree(3), cubic_tree(4)}}, n_max);
  auto d23 = oracle_dims({{cubic_tree(2), cubic_tree(3)}}, n_max);
  std::size_t n10 = std::min<std::size_t>(10, n_max);
  expect(r, "Mag^{3,4} dimensions", first_mismatch(std::vector<mpz_class>(d34.begin(), d34.begin() + n10),
                                                  std::vector<mpz_class>(expected.begin(), expected.begin() + n10)));
  expect(r, "Mag^{2,3} equals Mag^{3,4}", first_mismatch(d23, d34));
  std::string closed;
  for (std::size_t n = 5; n <= n_max && closed.empty(); ++n) {
    if (d34[n - 1] != mag23_closed_form(n)) closed = "arity " + std::to_string(n) + ": " + d34[n - 1].get_str();
  }
  expect(r, "closed form n(n+1)/2 - 7", closed);
  auto fam = mag34_rule_family(n_max);
  expect(r, "rule family normal forms", first_mismatch(normal_form_counts(fam, n_max), d34));
  auto ex = exhaustive_convergence(fam, std::min<std::size_t>(n_max, 10));
  std::string conv;
  if (!ex.terminating) conv = "cycle through " + ex.cycle_witness->word();
  else if (!ex.confluent) conv = "non-joinable pair at " + ex.counterexample->tree.word();
  expect(r, "rule family convergent", conv);
  r.results["dims"] = to_json_seq(d34);
  r.results["rules"] = fam.size();
  return r;
}

inline SuiteResult suite_caslattice(std::size_t gamma_max) {
  SuiteResult r;
  std::string ax;
  for (std::size_t a = 1; a <= gamma_max && ax.empty(); ++a) {
    for (std::size_t b = 1; b <= gamma_max && ax.empty(); ++b) {
      bool ok = cas_meet(a, b) == cas_meet(b, a) && cas_join(a, b) == cas_join(b, a) &&
                cas_meet(a, cas_join(a, b)) == a && cas_join(a, cas_meet(a, b)) == a &&
                cas_leq(a, b) == (cas_meet(a, b) == a);
      for (std::size_t c = 1; c <= gamma_max && ok; ++c) {
        ok = cas_meet(cas_meet(a, b), c) == cas_meet(a, cas_meet(b, c)) &&
             cas_join(cas_join(a, b), c) == cas_join(a, cas_join(b, c));
      }
      if (!ok) ax = "indices " + std::to_string(a) + ", " + std::to_string(b);
    }
  }
  expect(r, "lattice axioms", ax);
  std::string mor;
  for (std::size_t g2 = 1; g2 <= 7 && mor.empty(); ++g2) {
    for (std::size_t g = 1; g <= 5; ++g) {
      if (!morphism_exists(g2, g).agree()) {
        mor = "CAs(" + std::to_string(g2) + ") -> CAs(" + std::to_string(g) + ")";
        break;
      }
    }
  }
  expect(r, "morphism criterion vs oracle", mor);
  std::string lr;
  for (std::size_t g : {3, 4, 5}) {
    if (!left_rank_invariant_check(g, std::min<std::size_t>(9, oracle_arity_budget()))) lr = "gamma " + std::to_string(g);
  }
  expect(r, "left-rank invariant", lr);
  r.results["gamma_max"] = gamma_max;
  return r;
}

inline const std::vector<std::pair<std::string, std::function<SuiteResult()>>>& named_suites() {
  static const std::vector<std::pair<std::string, std::function<SuiteResult()>>> s = {
      {"cas3", suite_cas3},
      {"grassmann", suite_grassmann},
      {"realizations", suite_realizations},
      {"mag34", suite_mag34},
  };
  return s;
}

}  // namespace magq::cli
