// Acceptance run: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "magq/caslattice.hpp"
#include "magq/completion.hpp"
#include "magq/linear.hpp"
#include "magq/quotients.hpp"
#include "magq/realizations.hpp"
#include "oracle.hpp"

using namespace magq;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class A, class B>
void require_seq(const std::string& what, const std::vector<A>& got, const std::vector<B>& want) {
  std::ostringstream os;
  bool ok = got.size() == want.size();
  for (std::size_t k = 0; ok && k < got.size(); ++k) ok = got[k] == want[k];
  if (ok) return;
  os << what << ": got";
  for (const auto& x : got) os << ' ' << x;
  os << ", expected";
  for (const auto& x : want) os << ' ' << x;
  throw Failure(os.str());
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

std::vector<mpz_class> class_dims(const Congruence& c, std::size_t from, std::size_t to) {
  std::vector<mpz_class> out;
  for (std::size_t n = from; n <= to; ++n) out.emplace_back(static_cast<unsigned long>(congruence_classes(c, n).class_count()));
  return out;
}

template <class T>
std::vector<mpz_class> mpz_seq(const std::vector<T>& v) {
  std::vector<mpz_class> out;
  for (auto x : v) out.emplace_back(static_cast<unsigned long>(x));
  return out;
}

RewriteSystem fixture_cas3_system() {
  RewriteSystem s;
  for (const auto& [l, r] : fixtures::cas3_rules) s.add(RewriteRule{BinaryTree::from_word(l), BinaryTree::from_word(r)});
  return s;
}

void criterion1() {
  std::vector<std::pair<std::string, std::string>> gens{{left_comb(3).word(), right_comb(3).word()}};
  std::vector<unsigned long> oracle;
  for (std::size_t n = 1; n <= 12; ++n) oracle.push_back(oracle::class_count(gens, n));
  const std::vector<unsigned long> first12(fixtures::cas3_dims.begin(), fixtures::cas3_dims.begin() + 12);
  require_seq("union-find oracle", oracle, first12);
  require_seq("congruence classes", class_dims(symmetrize(cas_rules(3)), 1, 12), mpz_seq(first12));
  require_seq("normal forms", normal_form_counts(fixture_cas3_system(), 14), mpz_seq(fixtures::cas3_dims));
  require_seq("series", taylor_coefficients(hilbert_series_cas3(), 14), mpz_seq(fixtures::cas3_dims));
}

void criterion2() {
  auto tr = buchberger_complete(cas_rules(3), 10, 100000);
  require(tr.status == CompletionStatus::completed, "completion stopped: " + tr.reason);
  std::set<std::pair<std::string, std::string>> got, want(fixtures::cas3_rules.begin(), fixtures::cas3_rules.end());
  for (const auto& r : tr.system) got.insert({r.lhs.word(), r.rhs.word()});
  require(got.size() == tr.system.size() && got == want, "completed rules differ from the 11-rule system");
  require_seq("per-arity counts", tr.per_arity_counts, std::vector<std::size_t>{0, 0, 0, 1, 1, 2, 3, 4, 0, 0});
  auto cert = certify_convergence(tr.system, 13);
  require(cert.convergent, "a branching pair of degree <= 13 is not joinable");
  require(cert.bound >= 13, "certificate bound " + std::to_string(cert.bound));
}

void criterion3() {
  std::vector<BinaryTree> lhs;
  for (const auto& r : fixture_cas3_system()) lhs.push_back(r.lhs);
  auto av = avoider_count(lhs, 25);
  for (std::size_t n = 11; n <= 25; ++n) {
    require(av[n - 1] == mpz_class(static_cast<unsigned long>(n + 3)),
            "arity " + std::to_string(n) + ": " + av[n - 1].get_str() + " avoiders");
  }
}

void criterion4() {
  const std::vector<std::vector<unsigned long>> rows{fixtures::table2_row4, fixtures::table2_row5, fixtures::table2_row6};
  for (std::size_t g = 4; g <= 6; ++g) {
    require_seq("CAs(" + std::to_string(g) + ")", class_dims(symmetrize(cas_rules(g)), 1, 10), mpz_seq(rows[g - 4]));
  }
}

void criterion5() {
  for (auto [i, j] : cubic_convergent_pairs()) {
    const std::string name = "Mag^{" + std::to_string(i) + "," + std::to_string(j) + "}";
    auto dims = class_dims({{cubic_tree(i), cubic_tree(j)}}, 2, 12);
    std::vector<mpz_class> pow2;
    for (std::size_t n = 2; n <= 12; ++n) pow2.emplace_back(1ul << (n - 2));
    require_seq(name, dims, pow2);
    RewriteSystem sys{cubic_presentation(i, j)};
    require(certify_convergence(sys).convergent, name + " rule not certified convergent");
    auto av = avoider_count({sys[0].lhs}, 12);
    require_seq(name + " avoiders", std::vector<mpz_class>(av.begin() + 1, av.end()), pow2);
  }
}

void criterion6() {
  std::vector<std::pair<std::string, std::string>> g23{{fixtures::cubic[1], fixtures::cubic[2]}},
      g34{{fixtures::cubic[2], fixtures::cubic[3]}};
  std::vector<unsigned long> o23, o34;
  for (std::size_t n = 1; n <= 10; ++n) {
    o23.push_back(oracle::class_count(g23, n));
    o34.push_back(oracle::class_count(g34, n));
  }
  require_seq("Mag^{2,3} oracle", o23, fixtures::mag23_dims);
  require_seq("Mag^{3,4} oracle", o34, fixtures::mag23_dims);
  auto d23 = class_dims({{cubic_tree(2), cubic_tree(3)}}, 1, 12);
  auto d34 = class_dims({{cubic_tree(3), cubic_tree(4)}}, 1, 12);
  require_seq("Mag^{2,3} vs Mag^{3,4}", d23, d34);
  for (std::size_t n = 5; n <= 12; ++n) {
    require(d34[n - 1] == mpz_class(static_cast<unsigned long>(n * (n + 1) / 2 - 7)), "closed form at arity " + std::to_string(n));
  }
  require_seq("Mag^{2,3} rule family", normal_form_counts(mag23_rule_family(12), 12), d23);
  require_seq("Mag^{3,4} rule family", normal_form_counts(mag34_rule_family(12), 12), d34);
}

void criterion7() {
  using Dims = std::vector<std::uint64_t>;
  require_seq("As", quotient_dims_linear(builtin_generators("as"), 6), Dims{1, 1, 1, 1, 1, 1});
  require_seq("AAs", quotient_dims_linear(builtin_generators("aas"), 6), Dims{1, 1, 1, 0, 0, 0});
  require_seq("2Nil", quotient_dims_linear(builtin_generators("2nil"), 4), Dims{1, 1, 0, 0});
  require_seq("KRC3", quotient_dims_linear(builtin_generators("rc:3"), 6), Dims{1, 1, 2, 1, 1, 1});
  Dims meet, join;
  for (const auto& r : grassmann_check(builtin_generators("as"), builtin_generators("aas"), 7)) {
    require(r.holds, "As/AAs identity fails at arity " + std::to_string(r.arity));
    meet.push_back(r.meet);
    join.push_back(r.join);
  }
  require_seq("meet", meet, quotient_dims_linear(builtin_generators("2nil"), 7));
  require_seq("join", join, quotient_dims_linear(builtin_generators("rc:3"), 7));
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<LinearElement> g1{random_generator(rng)}, g2{random_generator(rng)};
    for (const auto& r : grassmann_check(g1, g2, 6)) {
      require(r.holds, to_string(g1[0]) + " | " + to_string(g2[0]) + " at arity " + std::to_string(r.arity));
    }
  }
}

void criterion8() {
  for (const auto& r : realizations()) {
    CompositionOp op = [&](const Composition& x, std::size_t i, const Composition& y) { return r.compose(x, i, y); };
    if (auto f = operad_axiom_failure(op, 8)) throw Failure(r.name + ": " + *f);
    if (auto f = intertwining_failure(r, 8)) throw Failure(*f);
  }
}

void criterion9() {
  for (std::size_t a = 1; a <= 20; ++a) {
    for (std::size_t b = 1; b <= 20; ++b) {
      require(cas_meet(a, b) == cas_meet(b, a) && cas_join(a, b) == cas_join(b, a), "commutativity");
      require(cas_meet(a, cas_join(a, b)) == a && cas_join(a, cas_meet(a, b)) == a, "absorption");
      require(cas_leq(a, b) == (cas_meet(a, b) == a), "order vs meet");
      for (std::size_t c = 1; c <= 20; ++c) {
        require(cas_meet(cas_meet(a, b), c) == cas_meet(a, cas_meet(b, c)), "meet associativity");
        require(cas_join(cas_join(a, b), c) == cas_join(a, cas_join(b, c)), "join associativity");
      }
    }
  }
  for (std::size_t g2 = 1; g2 <= 7; ++g2) {
    for (std::size_t g = 1; g <= 5; ++g) {
      auto m = morphism_exists(g2, g);
      require(m.oracle.has_value() && m.agree(), "morphism CAs(" + std::to_string(g2) + ") -> CAs(" + std::to_string(g) + ")");
    }
  }
  for (std::size_t g : {3, 4, 5}) require(left_rank_invariant_check(g, 9), "left rank for gamma " + std::to_string(g));
}

void informational_table1() {
  auto tr = buchberger_complete(cas_rules(4), 12, 1000000);
  std::cout << "  info: CAs(4) completion to arity 12: " << to_string(tr.status) << ", per-arity";
  for (auto c : tr.per_arity_counts) std::cout << ' ' << c;
  std::cout << "\n";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"CAs(3) dimensions by oracle, normal forms and series", criterion1},
      {"completion of L3 -> R3 and convergence certificate", criterion2},
      {"stable regime n + 3 for 11 <= n <= 25", criterion3},
      {"CAs(4), CAs(5), CAs(6) dimensions for n <= 10", criterion4},
      {"seven cubic quotients with 2^{n-2}", criterion5},
      {"Mag^{2,3} and Mag^{3,4}", criterion6},
      {"linear quotients and Grassmann identity", criterion7},
      {"realization axioms and intertwining, arity <= 8", criterion8},
      {"CAs lattice", criterion9},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      criteria[k].second();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << k + 1 << ". " << criteria[k].first << " (" << s << " s)";
    if (!ok) std::cout << " -- " << detail;
    std::cout << std::endl;
    failed += !ok;
  }
  informational_table1();
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
