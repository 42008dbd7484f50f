#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "workbench/errors.hpp"

namespace wb {

// One distinguished parameter may satisfy a monic minimal polynomial
//   p^k + lower[k-1] p^{k-1} + ... + lower[0] = 0,  k = lower.size() >= 1.
// The polynomial is assumed irreducible over Q(other parameters); the field
// operations below rely on that (a reducible relation introduces zero
// divisors, which surface as DivisionByZero on inversion).
struct AlgebraicRelation {
  std::size_t param = 0;
  std::vector<mpq_class> lower;
  std::size_t degree() const { return lower.size(); }
};

// Session-wide parameter declarations. Scalars from tables with different
// declarations must not be mixed; plain rationals are compatible with any
// table.
class ParamTable {
 public:
  static std::shared_ptr<const ParamTable> rationals();
  static std::shared_ptr<const ParamTable> make(
      std::vector<std::string> names,
      std::optional<AlgebraicRelation> relation = std::nullopt);

  const std::vector<std::string>& names() const { return names_; }
  const std::optional<AlgebraicRelation>& relation() const { return relation_; }
  std::size_t size() const { return names_.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  bool same_declarations(const ParamTable& other) const;

 private:
  ParamTable() = default;
  std::vector<std::string> names_;
  std::optional<AlgebraicRelation> relation_;
};

using ParamTablePtr = std::shared_ptr<const ParamTable>;
using Expvec = std::vector<std::uint32_t>;

// Sparse multivariate polynomial over Q. Exponent vectors always have one
// slot per declared parameter; the zero polynomial has an empty term map.
class MPoly {
 public:
  MPoly() : nvars_(0) {}
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
  static MPoly constant(std::size_t nvars, const mpq_class& c);
  static MPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Zero polynomial reports constant value 0.
  mpq_class constant_value() const;
  bool uses_var(std::size_t index) const;
  std::uint32_t degree_in(std::size_t index) const;
  std::size_t term_count() const { return terms_.size(); }

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  bool operator==(const MPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  void add_term(const Expvec& e, const mpq_class& c);
  // Exact division; throws DivisionByZero if divisor is zero and Error if the
  // division leaves a remainder (callers only divide known factors).
  MPoly div_exact(const MPoly& divisor) const;
  mpq_class evaluate(const std::vector<mpq_class>& point) const;
  // Re-embeds into a table with `nvars` slots (old vars keep their indices).
  MPoly widened(std::size_t nvars) const;

  // Terms ordered by total degree descending, then lex descending: the first
  // term is the canonical leading term.
  const std::map<Expvec, mpq_class>& terms() const { return terms_; }
  const mpq_class& leading_coeff() const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_;
  std::map<Expvec, mpq_class> terms_;
};

MPoly gcd(const MPoly& a, const MPoly& b);

// Element of Q(parameters), reduced: gcd(num, den) = 1, den has leading
// coefficient 1, den never involves the algebraic parameter (denominators are
// rationalized on division), and num has algebraic-parameter degree below the
// relation degree.
class Scalar {
 public:
  Scalar();  // zero over the empty table
  Scalar(int n);
  Scalar(const mpq_class& q);
  Scalar(long num, long den);
  static Scalar from_rational(const mpq_class& q, ParamTablePtr table);
  static Scalar parameter(ParamTablePtr table, std::size_t index);
  static Scalar parameter(ParamTablePtr table, const std::string& name);
  static Scalar from_parts(MPoly num, MPoly den, ParamTablePtr table);

  const ParamTablePtr& table() const { return table_; }
  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_rational() const;
  // Only meaningful when is_rational().
  mpq_class rational_value() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  Scalar inverse() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // point[i] is the value of parameter i; the point must satisfy the declared
  // algebraic relation and must not kill the denominator.
  mpq_class specialize(const std::vector<mpq_class>& point) const;

  std::string to_string() const;

 private:
  void canonicalize();
  ParamTablePtr table_;
  MPoly num_, den_;
};

}  // namespace wb
