#pragma once

#include <optional>
#include <string>
#include <vector>

#include "workbench/ideals.hpp"

namespace wb {

// Exact dimension sequence of the graded quotient by a truncated ideal,
// dims[n] = dim A_n - rank J_n for n <= maxdeg, plus a tail classification.
// The tail window covers the last 2 * group_order + 4 degrees: normal-word
// families repeat with period <= 2 and coset effects with period <= the group
// order, so a quotient that is still growing grows across half the window.
struct GrowthProfile {
  enum class Kind { eventually_zero, bounded, unbounded_evidence };

  std::vector<std::size_t> dims;
  Kind kind = Kind::unbounded_evidence;
  std::size_t zero_from = 0;  // eventually_zero: first degree of the zero tail
  std::size_t bound = 0;      // bounded: max of dims over the window
  std::size_t window_lo = 0;  // window is [window_lo, dims.size() - 1]
};

std::string growth_kind_name(GrowthProfile::Kind k);

GrowthProfile quotient_growth(const Presentation& pres,
                              const TruncatedIdeal& ideal, std::size_t maxdeg,
                              std::size_t group_order);

// One matched pattern instance: a word the ideal is known to contain, either
// as an element or as the leading word of a member.
struct PatternMatch {
  std::string shape;  // e.g. "u^t" or "d^s*(ud)^i"
  std::string word;   // rendered instance
};

// Witness that every long enough word is reducible modulo the ideal, so the
// quotient is spanned degreewise by a bounded set of words and grows at most
// linearly. Kinds:
//   power_pattern               u^t and d^s*(ud)^i           (d,u letters)
//   even_power_pattern          d^(2s)*(du)^i, (ud)^j*u^(2t) (d,u, alpha = 0)
//   factor_word_pattern         (yx^3)^a*(y^2x^2)^b and (yx^3)^a*yx^2*(y^2x^2)^b
//   skew_power_pattern          x^(2s)*(yx)^i and (xy)^j*z^t (x,y,z letters)
//   pure_power_pattern          x^s and y^t                  (x,y letters)
//   bracket_word_pattern        x*y*x and y*x*y              (x,y letters)
//   avoidance_bounded           the leading-word avoidance automaton is bounded
//   basis_change_power_pattern  power_pattern after d = x+y, u = x-y
struct PatternCertificate {
  std::string kind;
  std::vector<PatternMatch> matches;
  std::string conclusion;
};

std::optional<PatternCertificate> pattern_certificate(
    const Presentation& pres, const TruncatedIdeal& ideal);

// certified: backed by a finite witness (pattern certificate or a saturated
// zero tail). evidence: dimension data over the window only. none: no support.
enum class Confidence { certified, evidence, none };
std::string confidence_name(Confidence c);

struct PertinencyReport {
  GrowthProfile growth;
  std::optional<PatternCertificate> certificate;
  Confidence pty_ge_2 = Confidence::none;
  Confidence pty_eq_3 = Confidence::none;
  bool isolated_singularity = false;
  int gk_algebra = 3;
  std::string notes;
};

// Full pipeline: build the pertinency ideal, profile the quotient, and search
// for a certificate. The ambient GK dimension is 3 for the builtin families;
// custom presentations must supply theirs (InvalidParams otherwise). A
// certificate together with an unbounded window is an internal inconsistency
// and throws.
PertinencyReport pertinency_report(const Presentation& pres,
                                   const Grading& grading, std::size_t maxdeg,
                                   std::optional<int> custom_gk = std::nullopt);

}  // namespace wb
