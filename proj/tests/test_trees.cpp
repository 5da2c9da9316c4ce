#include <catch_amalgamated.hpp>

#include "magq/trees.hpp"
#include "oracle.hpp"

using namespace magq;

static BinaryTree T(const char* w) { return BinaryTree::from_word(w); }

TEST_CASE("prefix words parse and print", "[trees]") {
  CHECK(BinaryTree::parse("0").is_leaf());
  CHECK(T("220200222002000").arity() == 8);
  CHECK(T("220200222002000").degree() == 7);
  CHECK(BinaryTree::parse("((L,(L,L)),L)").word() == "2202000");
  CHECK(to_paren(T("2202000")) == "((L,(L,L)),L)");
  CHECK(BinaryTree::parse(" 2020200 ").word() == "2020200");
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& t : enumerate_trees(n)) CHECK(BinaryTree::parse(to_paren(t)) == t);
  }
}

TEST_CASE("malformed words report the first violation", "[trees]") {
  auto pos = [](const char* w) {
    try {
      BinaryTree::from_word(w);
    } catch (const parse_error& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(pos("22020200") == 8);  // the printed rew_2 word: one symbol short
  CHECK(pos("200200") == 3);
  CHECK(pos("201") == 2);
  CHECK(pos("") == 0);
  CHECK(pos("220202000") == -1);
  CHECK_THROWS_AS(BinaryTree::parse("(L,L"), parse_error);
}

TEST_CASE("round trip through prefix words, degree <= 8", "[trees]") {
  for (std::size_t n = 1; n <= 9; ++n) {
    for (const auto& t : oracle::all_trees(n)) {
      std::string w = oracle::word(t);
      CHECK(BinaryTree::from_word(w).word() == w);
    }
  }
}

TEST_CASE("graft", "[trees]") {
  CHECK(graft(T("220200200"), 4, T("2200200")).word() == "220200222002000");
  CHECK(graft(T("200"), 1, T("200")).word() == "22000");
  CHECK(graft(T("200"), 2, T("200")).word() == "20200");
  CHECK_THROWS_AS(graft(T("200"), 3, T("200")), rejected_input);
  CHECK_THROWS_AS(graft(T("200"), 0, T("200")), rejected_input);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      for (std::size_t i = 1; i <= n; ++i) CHECK(graft(t, i, BinaryTree::leaf()) == t);
      CHECK(graft(BinaryTree::leaf(), 1, t) == t);
    }
  }
}

TEST_CASE("graft agrees with pointer grafting, degrees <= 6", "[trees][property]") {
  for (std::size_t a = 1; a <= 5; ++a) {
    for (std::size_t b = 1; a + b <= 8; ++b) {
      for (const auto& t : oracle::all_trees(a)) {
        for (const auto& s : oracle::all_trees(b)) {
          for (std::size_t i = 1; i <= a; ++i) {
            REQUIRE(graft(T(oracle::word(t).c_str()), i, T(oracle::word(s).c_str())).word() ==
                    oracle::word(oracle::graft(t, i, s)));
          }
        }
      }
    }
  }
}

TEST_CASE("complete_graft", "[trees]") {
  CHECK(complete_graft(T("200"), {T("200"), BinaryTree::leaf()}).word() == "22000");
  CHECK(complete_graft(T("2020200"), {T("200"), BinaryTree(), BinaryTree(), BinaryTree()}).word() == "220020200");
  CHECK(complete_graft(T("2202000"), std::vector<BinaryTree>(4)).word() == "2202000");
  CHECK_THROWS_AS(complete_graft(T("200"), {T("200")}), rejected_input);
  // right-to-left fold of graft
  for (const auto& t : enumerate_trees(4)) {
    std::vector<BinaryTree> subs{T("200"), T("0"), T("22000"), T("20200")};
    BinaryTree f = t;
    for (std::size_t i = subs.size(); i >= 1; --i) f = graft(f, i, subs[i - 1]);
    CHECK(complete_graft(t, subs) == f);
  }
}

TEST_CASE("operad axioms, total arity <= 10", "[trees][property]") {
  std::vector<std::vector<BinaryTree>> by(9);
  for (std::size_t n = 1; n <= 8; ++n) by[n] = enumerate_trees(n);
  for (std::size_t a = 1; a <= 8; ++a) {
    for (std::size_t b = 1; a + b <= 9; ++b) {
      for (std::size_t c = 1; a + b + c <= 10; ++c) {
        for (const auto& x : by[a]) {
          for (const auto& y : by[b]) {
            for (const auto& z : by[c]) {
              for (std::size_t i = 1; i <= a; ++i) {
                for (std::size_t j = 1; j <= b; ++j) {
                  REQUIRE(graft(graft(x, i, y), i + j - 1, z) == graft(x, i, graft(y, j, z)));
                }
                for (std::size_t j = i + 1; j <= a; ++j) {
                  REQUIRE(graft(graft(x, i, y), j + b - 1, z) == graft(graft(x, j, z), i, y));
                }
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("prefix word of a graft replaces the i-th 0, degrees <= 6", "[trees][property]") {
  for (std::size_t a = 1; a <= 7; ++a) {
    for (const auto& t : enumerate_trees(a)) {
      for (std::size_t b = 1; b <= 7 && a + b <= 11; b += 2) {
        for (const auto& s : enumerate_trees(b)) {
          for (std::size_t i = 1; i <= a; ++i) {
            std::string w = t.word();
            std::size_t k = 0, c = 0;
            for (; k < w.size(); ++k) {
              if (w[k] == '0' && ++c == i) break;
            }
            REQUIRE(graft(t, i, s).word() == w.substr(0, k) + s.word() + w.substr(k + 1));
          }
        }
      }
    }
  }
}

TEST_CASE("lex order", "[trees]") {
  CHECK(lex_compare(T("2220000"), T("2020200")) == std::strong_ordering::greater);
  CHECK(lex_compare(T("2202000"), T("2202000")) == std::strong_ordering::equal);
  auto cubic = enumerate_trees(4);
  std::vector<std::string> w;
  for (const auto& t : cubic) w.push_back(t.word());
  CHECK(w == std::vector<std::string>{"2020200", "2022000", "2200200", "2202000", "2220000"});
}

TEST_CASE("left rank", "[trees]") {
  CHECK(left_rank(T("222020002200200")) == 3);
  CHECK(left_rank(BinaryTree::leaf()) == 0);
  for (std::size_t g = 0; g <= 8; ++g) CHECK(left_rank(left_comb(g)) == g);
}

TEST_CASE("occurrences", "[trees]") {
  auto occ = occurrences(T("222200000"), T("2220000"));
  REQUIRE(occ.size() == 2);
  CHECK(occ[0].anchor == 0);
  CHECK(occ[1].anchor == 1);
  CHECK_FALSE(contains_subtree(T("220020200"), T("2220000")));
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& t : enumerate_trees(n)) CHECK(contains_subtree(t, BinaryTree::leaf()));
  }
}

TEST_CASE("containment agrees with pointer matching", "[trees][property]") {
  auto pats = enumerate_trees(4);
  pats.push_back(T("22000"));
  pats.push_back(T("220202000"));
  for (std::size_t n = 2; n <= 8; ++n) {
    for (const auto& t : oracle::all_trees(n)) {
      BinaryTree bt = T(oracle::word(t).c_str());
      for (const auto& p : pats) REQUIRE(contains_subtree(bt, p) == oracle::contains(t, oracle::parse(p.word())));
    }
  }
}

TEST_CASE("enumeration", "[trees]") {
  std::vector<std::size_t> counts;
  for (std::size_t n = 1; n <= 6; ++n) counts.push_back(enumerate_trees(n).size());
  CHECK(counts == std::vector<std::size_t>{1, 1, 2, 5, 14, 42});
  CHECK(enumerate_trees(1) == std::vector<BinaryTree>{BinaryTree::leaf()});
  for (std::size_t n = 1; n <= 15; ++n) {
    std::uint64_t c = 0;
    std::string prev;
    bool increasing = true;
    for_each_tree_word(n, [&](std::string_view w) {
      if (c > 0 && !(prev < w)) increasing = false;
      prev = w;
      ++c;
    });
    CHECK(c == catalan(n - 1));
    CHECK(increasing);
  }
  for (std::size_t n = 1; n <= 9; ++n) {
    std::vector<std::string> ours;
    for (const auto& t : enumerate_trees(n)) ours.push_back(t.word());
    CHECK(ours == oracle::all_words(n));
  }
}

TEST_CASE("ranking is the position in lex order", "[trees]") {
  for (std::size_t n = 1; n <= 10; ++n) {
    TreeRanker rk(n);
    CHECK(rk.size() == catalan(n - 1));
    std::uint64_t i = 0;
    for (const auto& t : enumerate_trees(n)) {
      REQUIRE(rk.rank(t) == i);
      REQUIRE(rk.unrank(i) == t);
      ++i;
    }
  }
}

TEST_CASE("combs", "[trees]") {
  CHECK(left_comb(3).word() == "2220000");
  CHECK(right_comb(3).word() == "2020200");
  CHECK(left_comb(1) == right_comb(1));
  CHECK(left_comb(1).word() == "200");
  CHECK(right_comb(4).word() == "202020200");
  CHECK(left_comb(0).is_leaf());
  for (std::size_t g = 1; g <= 8; ++g) {
    CHECK(left_comb(g) == BinaryTree::node(left_comb(g - 1), BinaryTree::leaf()));
    CHECK(right_comb(g) == BinaryTree::node(BinaryTree::leaf(), right_comb(g - 1)));
  }
}

TEST_CASE("mirror", "[trees]") {
  CHECK(mirror(T("2202000")).word() == "2022000");
  CHECK(mirror(BinaryTree::leaf()).is_leaf());
  for (std::size_t g = 0; g <= 8; ++g) CHECK(mirror(left_comb(g)) == right_comb(g));
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& t : oracle::all_trees(n)) {
      BinaryTree bt = T(oracle::word(t).c_str());
      REQUIRE(mirror(bt).word() == oracle::word(oracle::mirror(t)));
      REQUIRE(mirror(mirror(bt)) == bt);
    }
  }
}

TEST_CASE("mirror is an anti-morphism for graft", "[trees][property]") {
  for (std::size_t a = 1; a <= 6; ++a) {
    for (std::size_t b = 1; a + b <= 8; ++b) {
      for (const auto& t : enumerate_trees(a)) {
        for (const auto& s : enumerate_trees(b)) {
          for (std::size_t i = 1; i <= a; ++i) {
            REQUIRE(mirror(graft(t, i, s)) == graft(mirror(t), a - i + 1, mirror(s)));
          }
        }
      }
    }
  }
}

TEST_CASE("z-trees", "[trees]") {
  CHECK(z_tree(0).is_leaf());
  CHECK(z_tree(1).word() == "200");
  CHECK(z_tree(3).word() == "2202000");
  CHECK(z_tree(4).word() == "220220000");
  CHECK(z_tree(5).word() == "22022020000");
  for (std::size_t d = 1; d <= 12; ++d) {
    CHECK(z_tree(d).degree() == d);
    CHECK(z_tree(d) == graft(z_tree(d - 1), (d - 1) / 2 + 1, T("200")));
  }
  // the type-A example z_8 ∘_9 z_3
  CHECK(graft(z_tree(8), 9, z_tree(3)).word() == "22022022022000002202000");
}
