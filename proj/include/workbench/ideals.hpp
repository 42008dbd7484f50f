#pragma once

#include <optional>
#include <string>
#include <vector>

#include "workbench/exactla.hpp"
#include "workbench/grading.hpp"

namespace wb {

// Cached ambient column spaces, one per degree, over the normal words of a
// completed presentation.
class ComponentSpaces {
 public:
  explicit ComponentSpaces(const Presentation& pres);
  ColumnSpacePtr at(std::size_t n);
  NormalWordBasis& words() { return basis_; }

 private:
  AlphabetPtr alpha_;
  NormalWordBasis basis_;
  std::vector<ColumnSpacePtr> cache_;
};

// (A * A_g)_n: the span of nf(m * w) over normal m and normal w of G-degree g
// with deg m + deg w = n. Computed by the recursion
//   (A * A_g)_n = A_1 * (A * A_g)_{n-1} + (A_g)_n.
SpanBasis left_component(const Presentation& pres, const Grading& grading,
                         std::size_t g, std::size_t n);
// The whole chain 0..N at once (shared work).
std::vector<SpanBasis> left_component_chain(const Presentation& pres,
                                            const Grading& grading,
                                            std::size_t g, std::size_t N,
                                            ComponentSpaces& spaces);

// Per-degree intersection over all g of left_component(g, n), n = 0..N.
std::vector<SpanBasis> intersection_generators(const Presentation& pres,
                                               const Grading& grading,
                                               std::size_t N);

struct PivotNote {
  Word pivot;          // leading word of the inserted row
  std::string origin;  // "generator" or the letter product that produced it
};

// Two-sided ideal generated by per-degree spans, truncated at degree N. The
// degree-n component is exact: it does not depend on N (ideal growth only
// feeds forward).
class TruncatedIdeal {
 public:
  static TruncatedIdeal closure(const Presentation& pres,
                                const std::vector<SpanBasis>& gens,
                                std::size_t N);

  const Presentation& presentation() const { return pres_; }
  std::size_t truncation() const { return N_; }
  const SpanBasis& component(std::size_t n) const;
  const std::vector<PivotNote>& provenance(std::size_t n) const;

 private:
  TruncatedIdeal(Presentation pres, std::size_t N) : pres_(std::move(pres)), N_(N) {}
  Presentation pres_;
  std::size_t N_;
  std::vector<SpanBasis> comps_;
  std::vector<std::vector<PivotNote>> notes_;
};

// The ideal the pertinency analysis uses: generated by the per-degree
// intersection of all left components.
TruncatedIdeal pertinency_ideal(const Presentation& pres,
                                const Grading& grading, std::size_t N);

// Membership witness for w: every group element is the degree of some literal
// suffix of w (the empty suffix witnesses the identity).
struct SuffixCover {
  Word word;
  // suffix_start[g] = start position of a suffix of degree g; word.degree()
  // denotes the empty suffix.
  std::vector<std::size_t> suffix_start;
};
std::optional<SuffixCover> suffix_cover_certificate(const Grading& grading,
                                                    const Word& w);

// nf(target) = lambda * nf(certified) with lambda != 0; transfers a
// membership certificate from `certified` to `target` without linear algebra.
// Requires completeness through both degrees.
std::optional<Scalar> nf_proportionality(const Word& target,
                                         const Word& certified,
                                         const Presentation& pres);
bool member_via_equivalence(const Word& target, const Word& certified,
                            const Presentation& pres);

}  // namespace wb
