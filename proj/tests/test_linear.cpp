#include <catch_amalgamated.hpp>

#include "magq/linear.hpp"
#include "oracle.hpp"

using namespace magq;

static LinearElement E(const std::string& s) { return parse_linear(s); }

using Dims = std::vector<std::uint64_t>;

TEST_CASE("linear elements parse and print", "[linear]") {
  auto e = E("2220000 - 2020200");
  CHECK(e.arity() == 4);
  CHECK(e.coefficient(left_comb(3)) == 1);
  CHECK(e.coefficient(right_comb(3)) == -1);
  CHECK(to_string(e) == "2220000 - 2020200");
  CHECK(to_string(E("3/2*2020200 + 0 * 2202000")) == "3/2*2020200");
  CHECK(to_string(E("-2*22000 + 4/6*20200")) == "-2*22000 + 2/3*20200");
  CHECK(E("((L,L),L) + (L,(L,L))") == E("22000 + 20200"));
  CHECK(E("22000 - 22000").is_zero());
  CHECK(to_string(E("0")) == "0");
  CHECK_THROWS_AS(E("22000 + 2020200"), parse_error);
  CHECK_THROWS_AS(E("x*22000"), parse_error);
  CHECK_THROWS_AS(E("22000 20200"), parse_error);
  CHECK_THROWS_AS(E(""), parse_error);
  for (const auto& s : {"2220000 - 2020200", "-7/3*2200200", "5*200 - 200"}) CHECK(E(to_string(E(s))) == E(s));
}

TEST_CASE("linear graft", "[linear]") {
  auto as = E("22000 - 20200");
  CHECK(graft(as, 1, LinearElement(BinaryTree::parse("200"))) == E("2220000 - 2200200"));
  auto x = graft(E("200"), 2, as);
  CHECK(x == E("2022000 - 2020200"));
}

TEST_CASE("ideal spaces", "[linear]") {
  CHECK(ideal_space(builtin_generators("as"), 3).dim() == 1);
  CHECK(ideal_space(builtin_generators("aas"), 4).dim() == 5);
  CHECK(ideal_space(builtin_generators("as"), 1).dim() == 0);
  CHECK(ideal_space(builtin_generators("rc:3"), 1).dim() == 0);
  auto sp = ideal_space(builtin_generators("as"), 4);
  for (const auto& b : sp.basis()) CHECK(b.arity() == 4);
  CHECK(sp.contains(E("2220000 - 2020200")));
  CHECK_FALSE(sp.contains(E("2220000")));
  // pivots strictly decreasing
  auto rows = sp.rows();
  std::vector<std::uint32_t> piv;
  for (const auto& r : rows) piv.push_back(r.front().first);
  std::sort(piv.begin(), piv.end());
  CHECK(std::adjacent_find(piv.begin(), piv.end()) == piv.end());
  CHECK_THROWS_AS(ideal_space(builtin_generators("as"), linear_arity_budget() + 1), rejected_input);
}

TEST_CASE("quotient dimensions of the example operads", "[linear]") {
  CHECK(quotient_dims_linear(builtin_generators("2nil"), 5) == Dims{1, 1, 0, 0, 0});
  CHECK(quotient_dims_linear(builtin_generators("as"), 6) == Dims{1, 1, 1, 1, 1, 1});
  CHECK(quotient_dims_linear(builtin_generators("rc:3"), 6) == Dims{1, 1, 2, 1, 1, 1});
  CHECK(quotient_dims_linear(builtin_generators("aas"), 7) == Dims{1, 1, 1, 0, 0, 0, 0});
  CHECK(quotient_dim(builtin_generators("as"), 5) == 1);
  CHECK(quotient_dims_linear({}, 5) == Dims{1, 1, 2, 5, 14});
  CHECK_THROWS_AS(builtin_generators("nope"), rejected_input);
  CHECK_THROWS_AS(builtin_generators("rc:"), rejected_input);
}

TEST_CASE("sums and intersections", "[linear]") {
  auto as3 = ideal_space(builtin_generators("as"), 3);
  auto aas3 = ideal_space(builtin_generators("aas"), 3);
  auto sum = space_sum(as3, aas3);
  CHECK(sum.dim() == 2);
  auto nil3 = ideal_space(builtin_generators("2nil"), 3);
  CHECK(space_sum(sum, nil3).dim() == 2);
  auto as4 = ideal_space(builtin_generators("as"), 4);
  auto aas4 = ideal_space(builtin_generators("aas"), 4);
  auto cap = space_intersection(as4, aas4);
  CHECK(cap.dim() == 4);
  for (const auto& b : cap.basis()) {
    CHECK(as4.contains(b));
    CHECK(aas4.contains(b));
  }
  CHECK(space_intersection(as4, as4).dim() == as4.dim());
  CHECK(space_sum(as4, as4).dim() == as4.dim());
  CHECK_THROWS_AS(space_sum(as3, as4), rejected_input);
  CHECK_THROWS_AS(space_intersection(as3, as4), rejected_input);
}

TEST_CASE("subspace Grassmann identity on random subspaces", "[linear][property]") {
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<int> coef(-3, 3), count(0, 10);
  for (std::size_t n : {4, 5, 6}) {
    auto trees = enumerate_trees(n);
    for (int rep = 0; rep < 30; ++rep) {
      AritySpace a(n), b(n);
      auto fill = [&](AritySpace& s) {
        int k = count(rng);
        for (int i = 0; i < k; ++i) {
          LinearElement e(n);
          for (const auto& t : trees) {
            if (rng() % 3 == 0) e.add(t, coef(rng));
          }
          s.insert(e);
        }
      };
      fill(a);
      fill(b);
      // force some overlap
      if (!a.basis().empty()) b.insert(a.basis().front());
      auto cap = space_intersection(a, b);
      auto sum = space_sum(a, b);
      REQUIRE(cap.dim() + sum.dim() == a.dim() + b.dim());
      for (const auto& v : cap.basis()) REQUIRE((a.contains(v) && b.contains(v)));
      for (const auto& v : a.basis()) REQUIRE(sum.contains(v));
    }
  }
}

TEST_CASE("Grassmann formula for As and AAs", "[linear]") {
  auto rows = grassmann_check(builtin_generators("as"), builtin_generators("aas"), 7);
  Dims meet, join;
  for (const auto& r : rows) {
    CHECK(r.holds);
    meet.push_back(r.meet);
    join.push_back(r.join);
  }
  CHECK(meet == Dims{1, 1, 0, 0, 0, 0, 0});
  CHECK(join == Dims{1, 1, 2, 1, 1, 1, 1});
  CHECK(meet == quotient_dims_linear(builtin_generators("2nil"), 7));
  CHECK(join == quotient_dims_linear(builtin_generators("rc:3"), 7));
  for (const auto& r : grassmann_check(builtin_generators("as"), builtin_generators("as"), 6)) {
    CHECK(r.holds);
    CHECK(r.meet == r.first);
    CHECK(r.join == r.first);
  }
}

TEST_CASE("Grassmann formula for 20 seeded random generator pairs", "[linear][property]") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<LinearElement> g1{random_generator(rng)}, g2{random_generator(rng)};
    INFO(to_string(g1[0]) << " | " << to_string(g2[0]));
    for (const auto& r : grassmann_check(g1, g2, 6)) REQUIRE(r.holds);
  }
}

TEST_CASE("ideal spaces are monotone in the generators", "[linear][property]") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 8; ++rep) {
    std::vector<LinearElement> g1{random_generator(rng)};
    auto g2 = g1;
    g2.push_back(random_generator(rng));
    auto a = ideal_spaces(g1, 6), b = ideal_spaces(g2, 6);
    for (std::size_t n = 1; n <= 6; ++n) {
      REQUIRE(a[n].dim() <= b[n].dim());
      for (const auto& v : a[n].basis()) REQUIRE(b[n].contains(v));
    }
  }
}

TEST_CASE("comb relations: linear and set-theoretic dimensions agree", "[linear][property]") {
  for (std::size_t g = 2; g <= 4; ++g) {
    auto lin = quotient_dims_linear(builtin_generators("cas:" + std::to_string(g)), 8);
    std::vector<std::pair<std::string, std::string>> gens{{left_comb(g).word(), right_comb(g).word()}};
    for (std::size_t n = 1; n <= 8; ++n) REQUIRE(lin[n - 1] == oracle::class_count(gens, n));
  }
}

TEST_CASE("AAs presentation", "[linear]") {
  CHECK(aas_presentation_check(6));
  CHECK(aas_presentation_check(7));
  CHECK(aas_presentation_check(2));
}
