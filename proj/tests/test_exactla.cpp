#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "workbench/exactla.hpp"

using namespace wb;

namespace {

AlphabetPtr du() { return Alphabet::make({"d", "u"}); }

std::vector<Word> all_words(std::size_t n) {
  // all degree-n words over a 2-letter alphabet
  std::vector<Word> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Word w;
    for (std::size_t i = 0; i < n; ++i)
      w.idx.push_back(static_cast<std::uint8_t>((mask >> i) & 1));
    out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("column order is deglex descending") {
  auto a = du();
  auto cols = ColumnSpace::make(a, all_words(2));
  REQUIRE(cols->size() == 4);
  // u^2 > ud > du > d^2
  CHECK(word_to_string(cols->words()[0], *a) == "u^2");
  CHECK(word_to_string(cols->words()[1], *a) == "u*d");
  CHECK(word_to_string(cols->words()[2], *a) == "d*u");
  CHECK(word_to_string(cols->words()[3], *a) == "d^2");
}

TEST_CASE("echelon pivots are leading words") {
  auto a = du();
  auto t = ParamTable::rationals();
  auto cols = ColumnSpace::make(a, all_words(2));
  SpanBasis s(cols);

  CHECK(s.insert(parse_poly("d*u + u*d", a, t)));
  CHECK(s.insert(parse_poly("d*u - u*d", a, t)));
  CHECK(!s.insert(parse_poly("2*d*u", a, t)));
  CHECK(s.rank() == 2);

  auto pivots = s.pivot_words();
  REQUIRE(pivots.size() == 2);
  CHECK(word_to_string(pivots[0], *a) == "u*d");
  CHECK(word_to_string(pivots[1], *a) == "d*u");

  // full reduction: each stored row is a bare pivot here
  CHECK(s.row_poly(s.pivot_columns()[0]) == parse_poly("u*d", a, t));
  CHECK(s.row_poly(s.pivot_columns()[1]) == parse_poly("d*u", a, t));

  CHECK(s.contains(parse_poly("3*d*u - 5*u*d", a, t)));
  CHECK(!s.contains(parse_poly("d^2", a, t)));
  CHECK_THROWS_AS(s.insert(parse_poly("d", a, t)), WordOutsideAmbient);
}

TEST_CASE("coordinates recover membership") {
  auto a = du();
  auto t = ParamTable::make({"alpha"});
  auto cols = ColumnSpace::make(a, all_words(3));
  SpanBasis s(cols);
  NcPoly f = parse_poly("d^2*u - alpha*d*u*d", a, t);
  NcPoly g = parse_poly("u^3 + d*u*d", a, t);
  s.insert(f);
  s.insert(g);

  NcPoly target = f.scaled(Scalar(3)) - g.scaled(Scalar::parameter(t, "alpha"));
  auto coords = s.coordinates(to_row(target, *cols));
  REQUIRE(coords.has_value());
  // reconstruct from the reduced rows
  NcPoly back(a);
  for (const auto& [piv, c] : *coords)
    back += s.row_poly(piv).scaled(c);
  CHECK(back == target);

  CHECK(!s.coordinates(to_row(parse_poly("d^3", a, t), *cols)).has_value());
}

TEST_CASE("intersection via Zassenhaus") {
  auto a = du();
  auto t = ParamTable::rationals();
  auto cols = ColumnSpace::make(a, all_words(2));

  SpanBasis u(cols), w(cols);
  u.insert(parse_poly("d^2 + d*u", a, t));
  u.insert(parse_poly("u*d", a, t));
  w.insert(parse_poly("d^2 + d*u + u*d", a, t));
  w.insert(parse_poly("u^2", a, t));

  SpanBasis i = intersect(u, w);
  CHECK(i.rank() == 1);
  CHECK(i.contains(parse_poly("d^2 + d*u + u*d", a, t)));
  CHECK(!i.contains(parse_poly("u*d", a, t)));

  // dim(U∩W) = dim U + dim W - dim(U+W)
  SpanBasis sum(cols);
  for (const auto& [p, row] : u.rows()) sum.insert(row);
  for (const auto& [p, row] : w.rows()) sum.insert(row);
  CHECK(i.rank() == u.rank() + w.rank() - sum.rank());
}

TEST_CASE("random span properties") {
  auto a = du();
  auto cols = ColumnSpace::make(a, all_words(4));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);

  for (int trial = 0; trial < 10; ++trial) {
    SpanBasis u(cols), w(cols);
    auto rand_row = [&]() {
      SparseRow r;
      for (std::size_t c = 0; c < cols->size(); ++c) {
        int x = coef(rng);
        if (x != 0 && c % 3 == static_cast<std::size_t>(trial % 3))
          r.emplace(c, Scalar(x));
      }
      return r;
    };
    for (int k = 0; k < 4; ++k) {
      u.insert(rand_row());
      w.insert(rand_row());
    }
    SpanBasis i = intersect(u, w);
    SpanBasis sum(cols);
    for (const auto& [p, row] : u.rows()) sum.insert(row);
    for (const auto& [p, row] : w.rows()) sum.insert(row);
    CHECK(i.rank() == u.rank() + w.rank() - sum.rank());
    for (const auto& [p, row] : i.rows()) {
      CHECK(u.contains(row));
      CHECK(w.contains(row));
    }
    CHECK(intersect(u, u).same_span(u));
  }
}
