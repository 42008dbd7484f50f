#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "workbench/scalar.hpp"

namespace wb {

// Ordered set of generators; the declaration order is the deglex letter order
// (first letter is smallest).
class Alphabet {
 public:
  static std::shared_ptr<const Alphabet> make(std::vector<std::string> letters);
  std::size_t size() const { return letters_.size(); }
  const std::vector<std::string>& letters() const { return letters_; }
  const std::string& letter(std::size_t i) const { return letters_[i]; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  bool same_letters(const Alphabet& other) const {
    return letters_ == other.letters_;
  }

 private:
  Alphabet() = default;
  std::vector<std::string> letters_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

// A word in the free monoid, stored as letter indices. The empty word is the
// unit.
struct Word {
  std::vector<std::uint8_t> idx;

  Word() = default;
  explicit Word(std::vector<std::uint8_t> v) : idx(std::move(v)) {}
  std::size_t degree() const { return idx.size(); }
  bool empty() const { return idx.empty(); }
  Word operator*(const Word& o) const;
  bool operator==(const Word& o) const { return idx == o.idx; }
  bool operator!=(const Word& o) const { return idx != o.idx; }
  // w^n
  Word pow(std::size_t n) const;
  Word subword(std::size_t pos, std::size_t len) const;
};

// degree first, then lexicographic on letter indices; -1 / 0 / +1
int deglex_compare(const Word& a, const Word& b);

struct DeglexLess {
  bool operator()(const Word& a, const Word& b) const {
    return deglex_compare(a, b) < 0;
  }
};

std::string word_to_string(const Word& w, const Alphabet& alpha);

// Finitely supported map word -> Scalar over a fixed alphabet.
class NcPoly {
 public:
  explicit NcPoly(AlphabetPtr alpha) : alpha_(std::move(alpha)) {}
  static NcPoly zero(AlphabetPtr alpha) { return NcPoly(std::move(alpha)); }
  static NcPoly monomial(AlphabetPtr alpha, Word w, Scalar c = Scalar(1));

  const AlphabetPtr& alphabet() const { return alpha_; }
  const std::map<Word, Scalar, DeglexLess>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  // highest word degree appearing; 0 for the zero polynomial
  std::size_t degree() const;
  bool is_homogeneous() const;
  bool is_constant() const;
  Scalar constant_coefficient() const;

  const Word& leading_word() const;
  const Scalar& leading_coeff() const;
  Scalar coeff(const Word& w) const;

  void add_term(const Word& w, const Scalar& c);
  NcPoly operator-() const;
  NcPoly operator+(const NcPoly& o) const;
  NcPoly operator-(const NcPoly& o) const;
  NcPoly operator*(const NcPoly& o) const;
  NcPoly& operator+=(const NcPoly& o) { return *this = *this + o; }
  NcPoly& operator-=(const NcPoly& o) { return *this = *this - o; }
  NcPoly scaled(const Scalar& c) const;
  bool operator==(const NcPoly& o) const;
  bool operator!=(const NcPoly& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_same(const NcPoly& o) const;
  AlphabetPtr alpha_;
  std::map<Word, Scalar, DeglexLess> terms_;
};

// Applies the monoid homomorphism letter i -> images[i]; all images must share
// one target alphabet.
NcPoly substitute(const NcPoly& p, const std::vector<NcPoly>& images);

// Recursive-descent parser for the expression grammar
//   expr   := ('+'|'-')? term (('+'|'-') term)*
//   term   := factor (('*'|'/')? factor)*      (juxtaposition multiplies)
//   factor := primary ('^' nat)?
//   primary:= nat | name | '(' expr ')'
// Identifiers are resolved greedily against generator and parameter names, so
// "dud" parses as d*u*d when d,u are generators. '/' requires a constant
// divisor.
NcPoly parse_poly(const std::string& text, AlphabetPtr alpha,
                  ParamTablePtr params);

// Convenience: parse an expression that must be a single word with
// coefficient 1.
Word parse_word(const std::string& text, AlphabetPtr alpha);

}  // namespace wb
