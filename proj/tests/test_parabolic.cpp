#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"

using namespace kcell;
using kctest::datum_of;

namespace {

std::vector<std::string> coset_names(const WeylGroup& g, const DoubleCoset& c) {
  std::vector<std::string> out;
  for (auto e : c.elements) out.push_back(g.word_name(e));
  std::sort(out.begin(), out.end());
  return out;
}

void check_partition(const WeylGroup& g, const std::vector<DoubleCoset>& cs,
                     const std::vector<int>& I) {
  std::set<std::size_t> seen;
  for (const auto& c : cs) {
    for (auto e : c.elements) CHECK(seen.insert(e).second);
    // min_rep is the unique length minimum of its coset
    for (auto e : c.elements)
      if (e != c.min_rep) CHECK(g.length(e) > g.length(c.min_rep));
    // closed under left and right multiplication by the subset generators
    std::set<std::size_t> inset(c.elements.begin(), c.elements.end());
    for (auto e : c.elements)
      for (int i : I) {
        CHECK(inset.count(g.mult(g.simple(i), e)) == 1);
        CHECK(inset.count(g.mult(e, g.simple(i))) == 1);
      }
  }
  CHECK(seen.size() == g.size());
}

}  // namespace

TEST_SUITE("parabolic") {
  TEST_CASE("double cosets in rank two") {
    WeylGroup g(datum_of("A2"));
    auto cs = double_cosets(g, {0});
    REQUIRE(cs.size() == 2);
    CHECK(g.word_name(cs[0].min_rep) == "e");
    CHECK(coset_names(g, cs[0]) == std::vector<std::string>{"1", "e"});
    CHECK(g.word_name(cs[1].min_rep) == "2");
    CHECK(coset_names(g, cs[1]) == std::vector<std::string>{"12", "121", "2", "21"});
    CHECK(coset_leq(g, cs[0], cs[1]));
    CHECK(!coset_leq(g, cs[1], cs[0]));
    CHECK(coset_leq(g, cs[0], cs[0]));
    check_partition(g, cs, {0});
  }

  TEST_CASE("empty subset reduces to the bruhat order") {
    WeylGroup g(datum_of("A2"));
    auto cs = double_cosets(g, {});
    REQUIRE(cs.size() == g.size());
    for (const auto& c : cs) CHECK(c.elements.size() == 1);
    for (const auto& a : cs)
      for (const auto& b : cs)
        CHECK(coset_leq(g, a, b) == kctest::subword_leq(g, a.min_rep, b.min_rep));
  }

  TEST_CASE("full subset gives a single coset") {
    WeylGroup g(datum_of("B2"));
    auto cs = double_cosets(g, {0, 1});
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].min_rep == g.identity());
    CHECK(cs[0].elements.size() == g.size());
  }

  TEST_CASE("partitions in larger groups") {
    {
      WeylGroup g(datum_of("B2"));
      auto cs = double_cosets(g, {0});
      check_partition(g, cs, {0});
      std::size_t total = 0;
      for (auto& c : cs) total += c.elements.size();
      CHECK(total == 8);
    }
    {
      WeylGroup g(datum_of("A3"));
      auto cs = double_cosets(g, {0, 2});
      check_partition(g, cs, {0, 2});
      // cosets are sorted by the length of the minimal representative
      for (std::size_t i = 0; i + 1 < cs.size(); ++i)
        CHECK(g.length(cs[i].min_rep) <= g.length(cs[i + 1].min_rep));
    }
  }

  TEST_CASE("bad subsets are rejected") {
    WeylGroup g(datum_of("A2"));
    CHECK_THROWS_AS(double_cosets(g, {5}), UsageError);
    CHECK_THROWS_AS(double_cosets(g, {-1}), UsageError);
  }

  TEST_CASE("levi characters against the full character") {
    // the full simple set with w = e recovers the ordinary character
    for (const char* t : {"A2", "B2"}) {
      RootDatum d = datum_of(t);
      WeylGroup g(d);
      std::vector<int> all;
      for (std::size_t i = 0; i < d.rank(); ++i) all.push_back(static_cast<int>(i));
      CHECK(levi_character(g, all, g.identity(), Weight{1, 0}) ==
            weyl_character(g, Weight{1, 0}));
      CHECK(levi_character(g, all, g.identity(), Weight{1, 1}) ==
            weyl_character(g, Weight{1, 1}));
    }
  }

  TEST_CASE("levi characters for proper subsets") {
    RootDatum d = datum_of("A2");
    WeylGroup g(d);
    CHECK(levi_character(g, {0}, g.identity(), Weight{1, 0}) ==
          Laurent::from_string("1*e[-1,1] + 1*e[1,0]", 2));
    // the string of weights chi, chi - alpha, ..., chi - <chi,av> alpha
    CHECK(levi_character(g, {0}, g.identity(), Weight{2, 0}) ==
          Laurent::from_string("1*e[2,0] + 1*e[0,1] + 1*e[-2,2]", 2));
    // invariance under the subsystem reflections
    Laurent lc = levi_character(g, {0}, g.identity(), Weight{3, 1});
    CHECK(lc.weyl_act(g, g.simple(0)) == lc);

    // twisting by w can empty the subsystem; then the character is one monomial
    std::size_t s2 = g.element_by_word_name("2");
    CHECK(levi_character(g, {0}, s2, Weight{1, 0}) ==
          Laurent::monomial(Weight{1, 0}, 1));
    // with an empty subsystem there is no dominance constraint at all
    CHECK(levi_character(g, {0}, s2, Weight{-3, 5}) ==
          Laurent::monomial(Weight{-3, 5}, 1));

    CHECK_THROWS_AS(levi_character(g, {0}, g.identity(), Weight{-1, 0}),
                    NotDominantForLevi);
  }

  TEST_CASE("levi string lengths in rank two type B") {
    RootDatum d = datum_of("B2");
    WeylGroup g(d);
    Laurent lc = levi_character(g, {1}, g.identity(), Weight{0, 2});
    CHECK(lc.num_terms() == 3);
    Weight a1 = d.simple_root(1);
    CHECK(lc == Laurent::monomial(Weight{0, 2}, 1) +
                    Laurent::monomial(Weight{0, 2} - a1, 1) +
                    Laurent::monomial(Weight{0, 2} - a1 - a1, 1));
  }
}
