#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "workbench/scalar.hpp"

using namespace wb;

namespace {

ParamTablePtr ab_table() { return ParamTable::make({"alpha", "beta"}); }

ParamTablePtr sqrt2_table() {
  // a^2 - 2 = 0
  AlgebraicRelation rel;
  rel.param = 0;
  rel.lower = {mpq_class(-2), mpq_class(0)};
  return ParamTable::make({"a"}, rel);
}

}  // namespace

TEST_CASE("rational arithmetic") {
  Scalar half(1, 2);
  Scalar third(1, 3);
  CHECK((half + third).to_string() == "5/6");
  CHECK((half * third).to_string() == "1/6");
  CHECK((half - half).is_zero());
  CHECK((half / third).to_string() == "3/2");
  CHECK(Scalar(0).is_zero());
  CHECK(Scalar(1).is_one());
  CHECK_THROWS_AS(half / Scalar(0), DivisionByZero);
}

TEST_CASE("polynomial arithmetic and cancellation") {
  auto t = ab_table();
  Scalar a = Scalar::parameter(t, "alpha");
  Scalar b = Scalar::parameter(t, "beta");

  Scalar p = (a + b) * (a - b);
  CHECK(p.to_string() == "alpha^2 - beta^2");

  // gcd cancellation: (alpha^2 - beta^2)/(alpha - beta) = alpha + beta
  Scalar q = p / (a - b);
  CHECK(q == a + b);
  CHECK(q.to_string() == "alpha + beta");

  // canonical form: denominator leading coefficient 1
  Scalar r = Scalar(1) / (Scalar(2) * a - Scalar(2) * b);
  CHECK(r.to_string() == "1/2/(alpha - beta)");

  Scalar s = (a * a + Scalar(2) * a * b + b * b) / (a + b);
  CHECK(s == a + b);
}

TEST_CASE("mixing parameter tables") {
  auto t1 = ab_table();
  auto t2 = ParamTable::make({"gamma"});
  Scalar a = Scalar::parameter(t1, "alpha");
  Scalar g = Scalar::parameter(t2, "gamma");
  CHECK_THROWS_AS(a + g, MixedAlgebraicRelations);
  // plain rationals are compatible with any table
  CHECK((a + Scalar(1)).to_string() == "alpha + 1");
}

TEST_CASE("algebraic relation a^2 = 2") {
  auto t = sqrt2_table();
  Scalar a = Scalar::parameter(t, "a");

  CHECK((a * a).to_string() == "2");
  CHECK((a * a - Scalar(2)).is_zero());
  CHECK(((Scalar(1) + a) * (Scalar(1) - a)).to_string() == "-1");

  // inversion rationalizes the denominator
  CHECK((Scalar(1) / a) == a / Scalar(2));
  Scalar inv = Scalar(1) / (Scalar(1) + a);
  CHECK(inv == a - Scalar(1));
  CHECK((inv * (Scalar(1) + a)).is_one());

  // degree-5 powers reduce: a^5 = 4a
  Scalar p = a * a * a * a * a;
  CHECK(p == Scalar(4) * a);

  CHECK_THROWS_AS(Scalar(1) / (a * a - Scalar(2)), DivisionByZero);
}

TEST_CASE("mixed free and algebraic parameters") {
  AlgebraicRelation rel;
  rel.param = 1;
  rel.lower = {mpq_class(-2), mpq_class(0)};
  auto t = ParamTable::make({"alpha", "a"}, rel);
  Scalar al = Scalar::parameter(t, "alpha");
  Scalar a = Scalar::parameter(t, "a");

  Scalar x = Scalar(1) / (al + a);
  // (alpha + a)(alpha - a) = alpha^2 - 2
  CHECK((x * (al + a)).is_one());
  CHECK(x == (al - a) / (al * al - Scalar(2)));
}

TEST_CASE("canonical serialization matches expected shapes") {
  auto t = ParamTable::make({"a"});
  Scalar a = Scalar::parameter(t, "a");
  Scalar p = Scalar(-2) * a * a * a * a * a - Scalar(2) * a * a * a * a +
             Scalar(6) * a * a * a + Scalar(8) * a * a - Scalar(4) * a -
             Scalar(6);
  CHECK(p.to_string() == "-2*a^5 - 2*a^4 + 6*a^3 + 8*a^2 - 4*a - 6");
}

TEST_CASE("specialization") {
  auto t = ab_table();
  Scalar a = Scalar::parameter(t, "alpha");
  Scalar b = Scalar::parameter(t, "beta");
  Scalar f = (a * a - b) / (a - Scalar(1));

  CHECK(f.specialize({mpq_class(2), mpq_class(3)}) == mpq_class(1));
  CHECK_THROWS_AS(f.specialize({mpq_class(1), mpq_class(5)}),
                  DenominatorVanishes);
  CHECK_THROWS_AS(f.specialize({mpq_class(1)}), InvalidParams);

  auto ta = sqrt2_table();
  Scalar sq = Scalar::parameter(ta, "a");
  CHECK_THROWS_AS(sq.specialize({mpq_class(1)}), InvalidParams);
}

TEST_CASE("field axioms on pseudo-random samples") {
  auto t = ab_table();
  Scalar a = Scalar::parameter(t, "alpha");
  Scalar b = Scalar::parameter(t, "beta");
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> coef(-4, 4);

  auto sample = [&]() {
    Scalar s = Scalar(coef(rng)) + Scalar(coef(rng)) * a +
               Scalar(coef(rng)) * b + Scalar(coef(rng)) * a * b;
    return s;
  };

  for (int i = 0; i < 40; ++i) {
    Scalar x = sample(), y = sample(), z = sample();
    CHECK(x + y == y + x);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x * y) * z == x * (y * z));
    if (!x.is_zero()) {
      CHECK((x * x.inverse()).is_one());
      CHECK((y / x) * x == y);
    }
    CHECK(x - x == Scalar(0));
  }
}
