#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "workbench/groups.hpp"

using namespace wb;

TEST_CASE("cyclic groups") {
  auto g = FiniteGroup::cyclic(4);
  CHECK(g.order() == 4);
  CHECK(g.name(g.identity()) == "1");
  std::size_t gen = g.element("g");
  CHECK(g.element_order(gen) == 4);
  CHECK(g.mul(gen, g.element("g^3")) == g.identity());
  CHECK(g.inverse(gen) == g.element("g^3"));
  CHECK(g.power(gen, -1) == g.element("g^3"));
  CHECK(g.power(gen, 6) == g.element("g^2"));
  CHECK(g.is_abelian());
  CHECK_THROWS_AS(g.element("h"), UnknownElement);
}

TEST_CASE("dihedral group on two reflections, order four") {
  auto g = FiniteGroup::dihedral_reflections(2);
  REQUIRE(g.order() == 4);
  CHECK(g.names() == std::vector<std::string>{"1", "a", "b", "ab"});
  CHECK(g.is_abelian());
  for (std::size_t x = 0; x < 4; ++x)
    CHECK(g.mul(x, x) == g.identity());  // Klein four group
  CHECK(g.mul(g.element("a"), g.element("b")) == g.element("ab"));
}

TEST_CASE("dihedral group on two reflections, order six") {
  auto g = FiniteGroup::dihedral_reflections(3);
  REQUIRE(g.order() == 6);
  CHECK(g.names() ==
        std::vector<std::string>{"1", "a", "b", "ab", "ba", "aba"});
  CHECK_FALSE(g.is_abelian());
  CHECK(g.element_order(g.element("a")) == 2);
  CHECK(g.element_order(g.element("b")) == 2);
  CHECK(g.element_order(g.element("ba")) == 3);
  // aba = bab is the remaining reflection
  std::size_t aba = g.element("aba");
  CHECK(g.mul(g.mul(g.element("b"), g.element("a")), g.element("b")) == aba);
  auto rot = g.subgroup_generated({g.element("ba")});
  CHECK(rot.size() == 3);
}

TEST_CASE("quaternion group") {
  auto q = FiniteGroup::quaternion8();
  REQUIRE(q.order() == 8);
  std::size_t i = q.element("i"), j = q.element("j"), k = q.element("k");
  std::size_t minus = q.element("-1");
  CHECK(q.mul(i, i) == minus);
  CHECK(q.mul(j, j) == minus);
  CHECK(q.mul(k, k) == minus);
  CHECK(q.mul(i, j) == k);
  CHECK(q.mul(j, i) == q.element("-k"));
  CHECK(q.mul(j, k) == i);
  CHECK(q.mul(k, i) == j);
  CHECK(q.element_order(i) == 4);
  CHECK(q.element_order(minus) == 2);
  CHECK_FALSE(q.is_abelian());
  // -1 is the unique element of order two
  std::size_t count = 0;
  for (std::size_t x = 0; x < 8; ++x)
    if (q.element_order(x) == 2) ++count;
  CHECK(count == 1);
  auto sub = q.subgroup_generated({i});
  CHECK(sub.size() == 4);
}

TEST_CASE("direct products") {
  auto g = FiniteGroup::product(FiniteGroup::cyclic(4), FiniteGroup::cyclic(2));
  CHECK(g.order() == 8);
  CHECK(g.is_abelian());
  std::size_t x = g.element("(g,1)"), y = g.element("(1,g)");
  CHECK(g.element_order(x) == 4);
  CHECK(g.element_order(y) == 2);
  CHECK(g.mul(x, y) == g.element("(g,g)"));
  CHECK(g.inverse(x) == g.element("(g^3,1)"));
}

TEST_CASE("table validation") {
  using T = std::vector<std::vector<std::size_t>>;
  // not a Latin square
  CHECK_THROWS_AS(FiniteGroup::from_table({"1", "x"}, T{{0, 0}, {1, 1}}),
                  NotAGroup);
  // Latin square without a two-sided identity
  CHECK_THROWS_AS(FiniteGroup::from_table(
                      {"1", "x", "y"}, T{{1, 0, 2}, {0, 2, 1}, {2, 1, 0}}),
                  NotAGroup);
  // valid Z/2
  auto g = FiniteGroup::from_table({"1", "x"}, T{{0, 1}, {1, 0}});
  CHECK(g.order() == 2);
  // Latin square with identity but not associative: the smallest such
  // quasigroups have order five
  T q = {{0, 1, 2, 3, 4},
         {1, 0, 3, 4, 2},
         {2, 4, 0, 1, 3},
         {3, 2, 4, 0, 1},
         {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_table({"1", "p", "q", "r", "s"}, q),
                  NotAGroup);
  // duplicate names
  CHECK_THROWS_AS(FiniteGroup::from_table({"1", "1"}, T{{0, 1}, {1, 0}}),
                  NotAGroup);
}
