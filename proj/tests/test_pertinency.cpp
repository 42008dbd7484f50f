#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "workbench/pertinency.hpp"

using namespace wb;

namespace {

Presentation downup_completed(int alpha, int beta, std::size_t deg) {
  return complete(downup_presentation(Scalar(alpha), Scalar(beta),
                                      ParamTable::rationals()),
                  deg)
      .presentation;
}

Presentation xy_completed(int alpha, std::size_t deg) {
  return complete(downup_xy_presentation(Scalar(alpha),
                                         ParamTable::rationals()),
                  deg)
      .presentation;
}

Grading klein_du(const Presentation& p) {
  auto g4 = FiniteGroup::dihedral_reflections(2);
  return Grading::make(g4, p.alphabet(), {{"d", "a"}, {"u", "b"}});
}

Grading order_eight_xy(const Presentation& p) {
  auto g8 = FiniteGroup::product(FiniteGroup::cyclic(4),
                                 FiniteGroup::cyclic(2));
  return Grading::make(g8, p.alphabet(), {{"x", "(g,1)"}, {"y", "(g,g)"}});
}

std::vector<std::size_t> dims_of(const std::vector<std::size_t>& v) {
  return v;
}

bool ideal_has(const TruncatedIdeal& J, const Presentation& p,
               const std::string& s) {
  Word w = parse_word(s, p.alphabet());
  NcPoly nf = normal_form(w, p);
  return nf.is_zero() || J.component(w.degree()).contains(nf);
}

}  // namespace

TEST_CASE("trivial grading saturates the ideal immediately") {
  auto p = downup_completed(0, 1, 6);
  auto g1 = FiniteGroup::cyclic(1);
  auto g = Grading::make(g1, p.alphabet(), {{"d", "1"}, {"u", "1"}});
  auto rep = pertinency_report(p, g, 6);

  CHECK(rep.growth.dims == dims_of({0, 0, 0, 0, 0, 0, 0}));
  CHECK(rep.growth.kind == GrowthProfile::Kind::eventually_zero);
  CHECK(rep.growth.zero_from == 0);
  REQUIRE(rep.certificate.has_value());
  CHECK(rep.certificate->kind == "power_pattern");
  REQUIRE(rep.certificate->matches.size() == 2);
  CHECK(rep.certificate->matches[0].word == "u");
  CHECK(rep.certificate->matches[1].word == "d");
  CHECK(rep.pty_ge_2 == Confidence::certified);
  CHECK(rep.pty_eq_3 == Confidence::certified);
  CHECK(rep.isolated_singularity);
  CHECK(rep.gk_algebra == 3);
}

TEST_CASE("down-up algebra over two reflections: bounded quotient") {
  auto p = downup_completed(0, 1, 14);
  auto g = klein_du(p);
  auto rep = pertinency_report(p, g, 14);

  SUBCASE("dimension profile settles at 2 after an initial bump") {
    REQUIRE(rep.growth.dims.size() == 15);
    CHECK(rep.growth.dims[0] == 1);
    CHECK(rep.growth.dims[1] == 2);
    CHECK(rep.growth.dims[2] == 4);
    for (std::size_t n = 3; n <= 14; ++n) CHECK(rep.growth.dims[n] == 2);
    CHECK(rep.growth.kind == GrowthProfile::Kind::bounded);
    CHECK(rep.growth.bound == 4);
    CHECK(rep.growth.window_lo == 2);  // 14 - (2*4 + 4)
  }

  SUBCASE("even power certificate, witnesses by degree 4") {
    REQUIRE(rep.certificate.has_value());
    CHECK(rep.certificate->kind == "even_power_pattern");
    REQUIRE(rep.certificate->matches.size() == 2);
    CHECK(rep.certificate->matches[0].shape == "d^(2s)*(du)^i");
    CHECK(rep.certificate->matches[0].word == "d^3*u");
    CHECK(rep.certificate->matches[1].shape == "(ud)^j*u^(2t)");
    CHECK(rep.certificate->matches[1].word == "u*d*u^2");
  }

  SUBCASE("pertinency flags: >= 2 certified, = 3 ruled out by growth") {
    CHECK(rep.pty_ge_2 == Confidence::certified);
    CHECK(rep.pty_eq_3 == Confidence::none);
    CHECK(confidence_name(rep.pty_eq_3) == "false");
    CHECK_FALSE(rep.isolated_singularity);
  }
}

TEST_CASE("nonzero alpha falls back to the avoidance automaton") {
  auto p = downup_completed(1, 1, 12);
  auto g = klein_du(p);
  auto rep = pertinency_report(p, g, 12);

  CHECK(rep.growth.kind == GrowthProfile::Kind::bounded);
  CHECK(rep.growth.bound == 4);
  for (std::size_t n = 3; n <= 12; ++n) CHECK(rep.growth.dims[n] == 2);
  REQUIRE(rep.certificate.has_value());
  CHECK(rep.certificate->kind == "avoidance_bounded");
  CHECK(rep.certificate->matches.empty());
  CHECK(rep.pty_ge_2 == Confidence::certified);
}

TEST_CASE("x,y form: one generator graded trivially") {
  auto p = xy_completed(3, 8);
  auto g2 = FiniteGroup::cyclic(2);
  auto g = Grading::make(g2, p.alphabet(), {{"x", "g"}, {"y", "1"}});
  auto rep = pertinency_report(p, g, 8);

  CHECK(rep.growth.dims == dims_of({1, 1, 1, 0, 0, 0, 0, 0, 0}));
  CHECK(rep.growth.kind == GrowthProfile::Kind::eventually_zero);
  CHECK(rep.growth.zero_from == 3);
  REQUIRE(rep.certificate.has_value());
  CHECK(rep.certificate->kind == "pure_power_pattern");
  CHECK(rep.certificate->matches[0].word == "x");
  CHECK(rep.certificate->matches[1].word == "y^3");
  CHECK(rep.pty_eq_3 == Confidence::certified);
  CHECK(rep.isolated_singularity);

  auto J = pertinency_ideal(p, g, 4);
  CHECK(ideal_has(J, p, "x^2"));
  CHECK(ideal_has(J, p, "x*y*x"));
  CHECK(ideal_has(J, p, "x*y^2*x"));
  CHECK(ideal_has(J, p, "y^3"));  // reducible: membership via its normal form
  CHECK_FALSE(ideal_has(J, p, "y"));
  CHECK_FALSE(ideal_has(J, p, "y^2"));
}

TEST_CASE("x,y form: equal degrees of order two and four") {
  auto p = xy_completed(3, 8);

  SUBCASE("order two: only the constants survive") {
    auto g2 = FiniteGroup::cyclic(2);
    auto g = Grading::make(g2, p.alphabet(), {{"x", "g"}, {"y", "g"}});
    auto rep = pertinency_report(p, g, 8);
    CHECK(rep.growth.dims == dims_of({1, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(rep.growth.zero_from == 1);
    CHECK(rep.pty_eq_3 == Confidence::certified);
  }

  SUBCASE("order four: saturation at degree 3") {
    auto g4 = FiniteGroup::cyclic(4);
    auto g = Grading::make(g4, p.alphabet(), {{"x", "g"}, {"y", "g"}});
    auto rep = pertinency_report(p, g, 8);
    CHECK(rep.growth.dims == dims_of({1, 2, 4, 0, 0, 0, 0, 0, 0}));
    CHECK(rep.growth.zero_from == 3);
    REQUIRE(rep.certificate.has_value());
    CHECK(rep.certificate->matches[0].word == "x^3");
    CHECK(rep.certificate->matches[1].word == "y^3");

    auto J = pertinency_ideal(p, g, 4);
    CHECK(J.component(3).rank() == dim_component(p, 3));
    CHECK(J.component(4).rank() == dim_component(p, 4));
  }
}

TEST_CASE("x,y form: generator degrees inverse to each other") {
  auto p = xy_completed(3, 8);
  auto g4 = FiniteGroup::cyclic(4);
  auto g = Grading::make(g4, p.alphabet(), {{"x", "g"}, {"y", "g^3"}});
  auto rep = pertinency_report(p, g, 8);

  CHECK(rep.growth.dims == dims_of({1, 2, 4, 4, 3, 0, 0, 0, 0}));
  CHECK(rep.growth.zero_from == 5);
  REQUIRE(rep.certificate.has_value());
  CHECK(rep.certificate->kind == "pure_power_pattern");
  CHECK(rep.certificate->matches[0].shape == "x^s");
  CHECK(rep.certificate->matches[0].word == "x^3");
  CHECK(rep.certificate->matches[1].shape == "y^t");
  CHECK(rep.certificate->matches[1].word == "y^3");
  CHECK(rep.pty_ge_2 == Confidence::certified);
  CHECK(rep.pty_eq_3 == Confidence::certified);
  CHECK(rep.isolated_singularity);
}

TEST_CASE("x,y form: degrees are distinct commuting involutions") {
  auto p = xy_completed(3, 8);
  auto g4 = FiniteGroup::dihedral_reflections(2);
  auto g = Grading::make(g4, p.alphabet(), {{"x", "a"}, {"y", "b"}});
  auto rep = pertinency_report(p, g, 8);

  CHECK(rep.growth.dims == dims_of({1, 2, 4, 4, 3, 0, 0, 0, 0}));
  REQUIRE(rep.certificate.has_value());
  CHECK(rep.certificate->kind == "bracket_word_pattern");
  CHECK(rep.certificate->matches[0].word == "x*y*x");
  CHECK(rep.certificate->matches[1].word == "y*x*y");
  CHECK(rep.pty_eq_3 == Confidence::certified);

  SUBCASE("bracket families really span: ideal plus avoiding words") {
    auto J = pertinency_ideal(p, g, 4);
    SpanBasis span = J.component(4);
    Word xyx = parse_word("x*y*x", p.alphabet());
    Word yxy = parse_word("y*x*y", p.alphabet());
    auto avoids = [&](const Word& w) {
      auto hit = [&](const Word& f) {
        return std::search(w.idx.begin(), w.idx.end(), f.idx.begin(),
                           f.idx.end()) != w.idx.end();
      };
      return !hit(xyx) && !hit(yxy);
    };
    for (std::uint8_t a = 0; a < 16; ++a) {
      Word w;
      for (int b = 3; b >= 0; --b)
        w.idx.push_back(static_cast<std::uint8_t>((a >> b) & 1));
      if (!avoids(w)) continue;
      NcPoly nf = normal_form(w, p);
      if (!nf.is_zero()) span.insert(nf);
    }
    CHECK(span.rank() == dim_component(p, 4));
  }
}

TEST_CASE("x,y form over a group of order eight") {
  auto p = xy_completed(3, 9);
  auto g = order_eight_xy(p);

  SUBCASE("short truncation leaves the zero tail as evidence") {
    auto rep = pertinency_report(p, g, 8);
    CHECK(rep.growth.dims == dims_of({1, 2, 4, 6, 9, 6, 4, 0, 0}));
    CHECK(rep.growth.kind == GrowthProfile::Kind::eventually_zero);
    CHECK(rep.growth.zero_from == 7);
    CHECK(rep.pty_ge_2 == Confidence::certified);
    CHECK(rep.pty_eq_3 == Confidence::evidence);
    CHECK_FALSE(rep.isolated_singularity);
  }

  SUBCASE("one more degree certifies the saturated tail") {
    auto rep = pertinency_report(p, g, 9);
    CHECK(rep.growth.zero_from == 7);
    CHECK(rep.pty_eq_3 == Confidence::certified);
    CHECK(rep.isolated_singularity);
  }

  SUBCASE("the eight degree-7 words all land in the ideal") {
    auto J = pertinency_ideal(p, g, 7);
    const char* words[] = {"y^2*x*y^3*x", "x*y*x^3*y*x", "y*x^3*y*x^2",
                           "x^3*y*x^3",   "x^2*y*x^3*y", "y*x*y^3*x*y",
                           "x*y^3*x*y^2", "y^3*x*y^3"};
    for (const char* s : words) CHECK_MESSAGE(ideal_has(J, p, s), s);
  }
}

TEST_CASE("x,y form over order eight at other parameter values") {
  auto g8 = FiniteGroup::product(FiniteGroup::cyclic(4),
                                 FiniteGroup::cyclic(2));

  SUBCASE("alpha = 0: quotient stays four-dimensional") {
    auto p = xy_completed(0, 9);
    auto g = Grading::make(g8, p.alphabet(), {{"x", "(g,1)"}, {"y", "(g,g)"}});
    auto rep = pertinency_report(p, g, 9);
    CHECK(rep.growth.dims == dims_of({1, 2, 4, 6, 9, 4, 4, 4, 4, 4}));
    CHECK(rep.growth.kind == GrowthProfile::Kind::bounded);
    REQUIRE(rep.certificate.has_value());
    CHECK(rep.certificate->kind == "pure_power_pattern");
    CHECK(rep.certificate->matches[0].word == "x^5");
    CHECK(rep.certificate->matches[1].word == "y^5");
    CHECK(rep.pty_ge_2 == Confidence::certified);
    CHECK(rep.pty_eq_3 == Confidence::none);
  }

  SUBCASE("alpha = 1: bounded via the avoidance automaton") {
    auto p = xy_completed(1, 9);
    auto g = Grading::make(g8, p.alphabet(), {{"x", "(g,1)"}, {"y", "(g,g)"}});
    auto rep = pertinency_report(p, g, 9);
    CHECK(rep.growth.dims == dims_of({1, 2, 4, 6, 7, 6, 5, 4, 5, 4}));
    CHECK(rep.growth.kind == GrowthProfile::Kind::bounded);
    REQUIRE(rep.certificate.has_value());
    CHECK(rep.certificate->kind == "avoidance_bounded");
    CHECK(rep.pty_ge_2 == Confidence::certified);
  }
}

TEST_CASE("hyperbolic form over two reflections") {
  auto p = complete(h_presentation(), 10).presentation;
  auto g4 = FiniteGroup::dihedral_reflections(2);
  auto g = Grading::make(g4, p.alphabet(), {{"x", "a"}, {"y", "b"}});
  auto rep = pertinency_report(p, g, 10);

  CHECK(rep.growth.dims ==
        dims_of({1, 2, 4, 4, 3, 0, 0, 0, 0, 0, 0}));
  CHECK(rep.growth.zero_from == 5);
  REQUIRE(rep.certificate.has_value());
  CHECK(rep.certificate->kind == "bracket_word_pattern");
  CHECK(rep.pty_eq_3 == Confidence::certified);
  CHECK(rep.isolated_singularity);
}

TEST_CASE("five-rule algebra over a cyclic group of order four") {
  auto p = complete(f_presentation(), 12).presentation;
  auto g4 = FiniteGroup::cyclic(4);
  auto g = Grading::make(g4, p.alphabet(), {{"x", "g"}, {"y", "g^3"}});
  auto rep = pertinency_report(p, g, 12);

  REQUIRE(rep.growth.dims.size() == 13);
  CHECK(rep.growth.dims[0] == 1);
  CHECK(rep.growth.dims[1] == 2);
  for (std::size_t n = 2; n <= 12; ++n) CHECK(rep.growth.dims[n] == 4);
  CHECK(rep.growth.kind == GrowthProfile::Kind::bounded);
  CHECK(rep.growth.bound == 4);
  REQUIRE(rep.certificate.has_value());
  CHECK(rep.certificate->kind == "factor_word_pattern");
  CHECK(rep.certificate->matches[0].shape == "(yx^3)^a*(y^2x^2)^b");
  CHECK(rep.certificate->matches[0].word == "y*x^3");
  CHECK(rep.certificate->matches[1].shape == "(yx^3)^a*(yx^2)*(y^2x^2)^b");
  CHECK(rep.certificate->matches[1].word == "y*x^3*y*x^2");
  CHECK(rep.pty_ge_2 == Confidence::certified);
  CHECK(rep.pty_eq_3 == Confidence::none);
}

TEST_CASE("skew extension with a central-square grading") {
  auto p = complete(b_presentation(), 10).presentation;

  SUBCASE("z graded trivially over two reflections") {
    auto g4 = FiniteGroup::dihedral_reflections(2);
    auto g = Grading::make(g4, p.alphabet(),
                           {{"x", "a"}, {"y", "b"}, {"z", "1"}});
    auto rep = pertinency_report(p, g, 10);
    REQUIRE(rep.growth.dims.size() == 11);
    CHECK(rep.growth.dims[1] == 3);
    for (std::size_t n = 2; n <= 10; ++n) CHECK(rep.growth.dims[n] == 6);
    CHECK(rep.growth.kind == GrowthProfile::Kind::bounded);
    CHECK(rep.growth.bound == 6);
    REQUIRE(rep.certificate.has_value());
    CHECK(rep.certificate->kind == "skew_power_pattern");
    CHECK(rep.certificate->matches[0].shape == "x^(2s)*(yx)^i");
    CHECK(rep.certificate->matches[0].word == "x^4");
    CHECK(rep.certificate->matches[1].shape == "(xy)^j*z^t");
    CHECK(rep.certificate->matches[1].word == "x*y*x*y");
    CHECK(rep.pty_ge_2 == Confidence::certified);
  }

  SUBCASE("cyclic grading with z of order two") {
    auto g4 = FiniteGroup::cyclic(4);
    auto g = Grading::make(g4, p.alphabet(),
                           {{"x", "g"}, {"y", "g^3"}, {"z", "g^2"}});
    auto rep = pertinency_report(p, g, 10);
    for (std::size_t n = 1; n <= 10; ++n) CHECK(rep.growth.dims[n] == 3);
    CHECK(rep.growth.kind == GrowthProfile::Kind::bounded);
    CHECK(rep.growth.bound == 3);
    REQUIRE(rep.certificate.has_value());
    CHECK(rep.certificate->kind == "skew_power_pattern");
    CHECK(rep.certificate->matches[0].word == "x^2");
    CHECK(rep.certificate->matches[1].word == "x*y*z");
  }
}

TEST_CASE("zero ideal: full growth, no certificate") {
  auto p = downup_completed(0, 1, 8);
  auto J = TruncatedIdeal::closure(p, {}, 8);
  auto growth = quotient_growth(p, J, 8, 1);

  CHECK(growth.dims == dims_of({1, 2, 4, 6, 9, 12, 16, 20, 25}));
  CHECK(growth.kind == GrowthProfile::Kind::unbounded_evidence);
  CHECK_FALSE(pattern_certificate(p, J).has_value());
}

TEST_CASE("growth profile invariants") {
  auto p = xy_completed(3, 8);
  auto g4 = FiniteGroup::cyclic(4);
  auto g = Grading::make(g4, p.alphabet(), {{"x", "g"}, {"y", "g^3"}});

  SUBCASE("dimensions are stable under raising the truncation") {
    auto lo = quotient_growth(p, pertinency_ideal(p, g, 5), 5, 4);
    auto hi = quotient_growth(p, pertinency_ideal(p, g, 8), 8, 4);
    for (std::size_t n = 0; n <= 5; ++n) CHECK(lo.dims[n] == hi.dims[n]);
  }

  SUBCASE("enlarging the generating spans never enlarges the quotient") {
    auto gens = intersection_generators(p, g, 8);
    auto base = quotient_growth(p, TruncatedIdeal::closure(p, gens, 8), 8, 4);
    auto gens2 = gens;
    gens2[1].insert(NcPoly::monomial(p.alphabet(),
                                     parse_word("y", p.alphabet())));
    auto bigger =
        quotient_growth(p, TruncatedIdeal::closure(p, gens2, 8), 8, 4);
    for (std::size_t n = 0; n <= 8; ++n)
      CHECK(bigger.dims[n] <= base.dims[n]);
    CHECK(bigger.dims[1] < base.dims[1]);
  }

  SUBCASE("profile degree beyond the truncation is rejected") {
    auto J = pertinency_ideal(p, g, 5);
    CHECK_THROWS_AS(quotient_growth(p, J, 6, 4), InvalidParams);
  }
}

TEST_CASE("custom presentations must state their ambient dimension") {
  auto p = xy_completed(3, 6);
  auto custom = Presentation::from_rules(p.alphabet(), p.params(), p.rules(),
                                         Family::custom)
                    .with_verified_degree(p.verified_to_degree());
  auto g4 = FiniteGroup::cyclic(4);
  auto g = Grading::make(g4, p.alphabet(), {{"x", "g"}, {"y", "g^3"}});

  CHECK_THROWS_AS(pertinency_report(custom, g, 6), InvalidParams);
  auto rep = pertinency_report(custom, g, 6, 3);
  CHECK(rep.gk_algebra == 3);
  CHECK(rep.growth.zero_from == 5);
}

TEST_CASE("generator changes between the two down-up forms are inverse") {
  auto params = ParamTable::rationals();
  const Scalar half = Scalar(1) / Scalar(2);

  for (int a : {0, 1, 3}) {
    auto du = complete(downup_presentation(Scalar(a), Scalar(-1), params), 6)
                  .presentation;
    auto xy = xy_completed(a, 6);

    // x -> (d+u)/2, y -> (d-u)/2 kills the x,y relations inside the d,u form
    NcPoly pd = NcPoly::monomial(du.alphabet(), parse_word("d", du.alphabet()));
    NcPoly pu = NcPoly::monomial(du.alphabet(), parse_word("u", du.alphabet()));
    std::vector<NcPoly> to_du = {(pd + pu).scaled(half),
                                 (pd - pu).scaled(half)};
    for (const auto& rule : xy.rules()) {
      NcPoly rel = NcPoly::monomial(xy.alphabet(), rule.lhs) - rule.rhs;
      CHECK(normal_form(substitute(rel, to_du), du).is_zero());
    }

    // d -> x+y, u -> x-y kills the d,u relations inside the x,y form
    NcPoly px = NcPoly::monomial(xy.alphabet(), parse_word("x", xy.alphabet()));
    NcPoly py = NcPoly::monomial(xy.alphabet(), parse_word("y", xy.alphabet()));
    std::vector<NcPoly> to_xy = {px + py, px - py};
    for (const auto& rule : du.rules()) {
      NcPoly rel = NcPoly::monomial(du.alphabet(), rule.lhs) - rule.rhs;
      CHECK(normal_form(substitute(rel, to_xy), xy).is_zero());
    }
  }
}
