#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "workbench/freealg.hpp"

namespace wb {

// lhs is a monic word, rhs a polynomial of the same N-degree with every word
// deglex-smaller than lhs.
struct RewriteRule {
  Word lhs;
  NcPoly rhs;
};

enum class Family { downup, f_algebra, h_algebra, b_algebra, downup_xy, custom };

std::string family_name(Family f);

// An oriented, N-homogeneous rewriting system over a fixed alphabet. The
// completeness certificate is bounded: verified_to_degree() == v means every
// ambiguity of word degree <= v resolves; -1 means never checked.
class Presentation {
 public:
  static Presentation make(AlphabetPtr alpha, ParamTablePtr params,
                           const std::vector<NcPoly>& relations,
                           Family family = Family::custom);
  static Presentation from_rules(AlphabetPtr alpha, ParamTablePtr params,
                                 std::vector<RewriteRule> rules,
                                 Family family = Family::custom);

  const AlphabetPtr& alphabet() const { return alpha_; }
  const ParamTablePtr& params() const { return params_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  Family family() const { return family_; }
  int verified_to_degree() const { return verified_; }

  // Named scalar attached to a builtin family (alpha, beta).
  std::optional<Scalar> family_param(const std::string& key) const;

  Presentation with_verified_degree(int v) const;
  Presentation with_family_params(std::map<std::string, Scalar> p) const;

 private:
  AlphabetPtr alpha_;
  ParamTablePtr params_;
  std::vector<RewriteRule> rules_;
  Family family_ = Family::custom;
  std::map<std::string, Scalar> family_params_;
  int verified_ = -1;
};

// Builtin presentations -----------------------------------------------------

// Down-up algebra on d < u: rules u*d^2 and u^2*d oriented from
//   d^2*u = alpha*d*u*d + beta*u*d^2,  d*u^2 = alpha*u*d*u + beta*u^2*d.
Presentation downup_presentation(const Scalar& alpha, const Scalar& beta,
                                 ParamTablePtr params);

// Cubic pair algebra on x < y with x^3 = y*x*y, y^3 = x*y*x; ships the known
// five-rule confluent system.
Presentation f_presentation();

// x^2*y + y*x^2 = 2y^3 and x*y^2 + y^2*x = 2x^3 on x < y; two oriented rules,
// completeness unknown until complete() runs.
Presentation h_presentation();

// Skew extension on x < y < z: y^2 -> x^2, y*x^2 -> x^2*y, z*x -> -x*z,
// z*y -> -y*z.
Presentation b_presentation();

// The d,u algebra with beta = -1 rewritten in the eigenbasis x = (d+u)/2,
// y = (d-u)/2:
//   alpha*x^2*y + (-2-alpha)*x*y*x + alpha*y*x^2 + (2-alpha)*y^3 = 0
//   (2-alpha)*x^3 + alpha*x*y^2 + (-2-alpha)*y*x*y + alpha*y^2*x = 0.
Presentation downup_xy_presentation(const Scalar& alpha, ParamTablePtr params);

// Rewriting -------------------------------------------------------------

// Fully reduces p, always rewriting the deglex-greatest reducible subword
// occurrence first (greatest rule lhs, then leftmost position).
NcPoly normal_form(const NcPoly& p, const Presentation& pres);
NcPoly normal_form(const Word& w, const Presentation& pres);
bool is_irreducible(const Word& w, const Presentation& pres);

struct Ambiguity {
  Word word;          // overlap or inclusion word
  bool resolved;      // difference reduces to zero
  NcPoly difference;  // normal form of the two-way difference
};

// All overlap and inclusion ambiguities among current rules with word degree
// <= maxdeg, sorted by word (deglex ascending).
std::vector<Ambiguity> overlaps(const Presentation& pres, std::size_t maxdeg);

struct CompletionResult {
  Presentation presentation;         // verified_to_degree set to maxdeg
  std::vector<RewriteRule> added;    // rules appended during completion
};

// Bounded Knuth-Bendix: resolves ambiguities up to maxdeg, adding oriented
// rules for unresolved ones; throws CompletionBudgetExceeded when more than
// max_rules rules would be needed.
CompletionResult complete(const Presentation& pres, std::size_t maxdeg,
                          std::size_t max_rules = 128);

// Irreducible ("normal") words by degree; purely combinatorial on the lhs set.
class NormalWordBasis {
 public:
  explicit NormalWordBasis(const Presentation& pres);
  const std::vector<Word>& degree(std::size_t n);
  std::size_t dim(std::size_t n) { return degree(n).size(); }

 private:
  AlphabetPtr alpha_;
  std::vector<Word> lhs_;
  std::vector<std::vector<Word>> by_degree_;
};

// Number of irreducible words of degree n; requires the presentation's
// completeness certificate to reach n.
std::size_t dim_component(const Presentation& pres, std::size_t n);

}  // namespace wb
