#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "workbench/grading.hpp"
#include "workbench/ideals.hpp"

namespace wb {

// One minimal generator of the identity component. Every builtin example
// admits monomial generators (the identity component has a monomial basis,
// so pivots are words); poly carries the generator either way.
struct CovariantGenerator {
  Word word;
  NcPoly poly;
  std::size_t degree = 0;
};

// Identity component up to a truncation degree: per-degree monomial bases,
// minimal generators, and the Hilbert function.
struct CovariantBasis {
  std::vector<std::vector<Word>> basis;  // basis[n]: identity-degree normal words
  std::vector<CovariantGenerator> generators;
  std::vector<std::size_t> hilbert;  // hilbert[n] = basis[n].size()
};

// Normal words of identity group degree in each total degree 0..N.
std::vector<std::vector<Word>> identity_component(const Presentation& pres,
                                                  const Grading& grading,
                                                  std::size_t N);

// Degree-ascending sweep: a degree-n identity-component basis element is a
// new generator iff it lies outside the span of normal-form products of the
// generators found so far. Minimality is relative to the truncation degree.
std::vector<CovariantGenerator> minimal_generators(const Presentation& pres,
                                                   const Grading& grading,
                                                   std::size_t N);

// Dimensions of the identity component, degrees 0..N.
std::vector<std::size_t> hilbert_function(const Presentation& pres,
                                          const Grading& grading,
                                          std::size_t N);

// Basis, generators, and Hilbert function together. The generating property
// is re-verified from scratch after the sweep; a failure throws, since it
// would mean the sweep itself is broken.
CovariantBasis covariant_basis(const Presentation& pres, const Grading& grading,
                               std::size_t N);

// Rational power series numerator/denominator, coefficients by ascending
// power of t. The denominator must have a nonzero constant term.
struct RationalSeries {
  std::vector<Scalar> numerator;
  std::vector<Scalar> denominator;
};

// 1 - t^k as a coefficient vector.
std::vector<Scalar> one_minus_t_pow(std::size_t k);
std::vector<Scalar> poly_mul(const std::vector<Scalar>& a,
                             const std::vector<Scalar>& b);

// Coefficients 0..N of the series expansion.
std::vector<Scalar> expand_series(const RationalSeries& s, std::size_t N);

// True iff the expansion matches every given value exactly.
bool compare_series(const std::vector<std::size_t>& values,
                    const RationalSeries& s);

// True iff nf(lhs - rhs) = 0. The presentation must be verified past the
// degree of both operands.
bool verify_identity(const Presentation& pres, const NcPoly& lhs,
                     const NcPoly& rhs);

}  // namespace wb
