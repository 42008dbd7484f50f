#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "workbench/groups.hpp"
#include "workbench/rewrite.hpp"

namespace wb {

// Assignment of a group degree to every generator. Word degrees multiply left
// to right, so suffixes of a word have degrees equal to suffix products.
class Grading {
 public:
  Grading(FiniteGroup group, AlphabetPtr alpha, std::vector<std::size_t> degs);
  // names maps generator name -> group element name; throws
  // IncompleteAssignment when a generator is missing.
  static Grading make(const FiniteGroup& group, const AlphabetPtr& alpha,
                      const std::map<std::string, std::string>& names);

  const FiniteGroup& group() const { return group_; }
  const AlphabetPtr& alphabet() const { return alpha_; }
  std::size_t generator_degree(std::size_t letter) const {
    return degs_[letter];
  }
  const std::vector<std::size_t>& generator_degrees() const { return degs_; }

 private:
  FiniteGroup group_;
  AlphabetPtr alpha_;
  std::vector<std::size_t> degs_;
};

struct GradingValidation {
  bool valid = false;           // every rule is G-homogeneous
  bool inner_faithful = false;  // generator degrees generate the whole group
  std::vector<std::string> violations;
};

// Checks each rule of the presentation for G-homogeneity; inner-faithfulness
// is reported separately and does not make the grading invalid.
GradingValidation validate_grading(const Presentation& pres,
                                   const Grading& grading);

std::size_t word_degree(const Grading& grading, const Word& w);

// Normal words of N-degree n and G-degree g; the union over g is the full
// degree-n normal-word basis. Requires completeness through degree n.
std::vector<Word> component_basis(const Presentation& pres,
                                  const Grading& grading, std::size_t n,
                                  std::size_t g);

struct HdetResult {
  std::size_t element;
  bool trivial;
};

// Closed-form homological codeterminant: word_degree(d^2u^2) for downup(0,b);
// (deg first generator)^4 for the x,y families. Throws UnsupportedFamily
// otherwise; custom presentations go through verify_resolution_euler.
HdetResult hdet(const Presentation& pres, const Grading& grading);

// One free summand A(shift) of the length-three resolution of the trivial
// module: sign * dim A_{(n - nshift, g * gshift^{-1})}.
struct ResolutionTerm {
  int sign;
  std::size_t nshift;
  std::size_t gshift;
};

// The standard down-up shape: generators in degrees (1, g1), (1, g2),
// relations in degrees (3, deg d^2u), (3, deg du^2), socle (4, deg d^2u^2).
std::vector<ResolutionTerm> downup_resolution_terms(const Presentation& pres,
                                                    const Grading& grading);

// Evaluates the alternating sum of component dimensions for all n <= N and
// all g; true iff it equals the delta function of the trivial module.
bool verify_euler(const Presentation& pres, const Grading& grading,
                  std::size_t N, const std::vector<ResolutionTerm>& terms);

// verify_euler with the standard down-up terms; requires family downup with
// alpha = 0 and completeness through N.
bool verify_resolution_euler(const Presentation& pres, const Grading& grading,
                             std::size_t N);

}  // namespace wb
