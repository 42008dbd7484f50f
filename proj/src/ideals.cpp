#include "workbench/ideals.hpp"

namespace wb {

namespace {

void require_complete(const Presentation& pres, std::size_t n,
                      const char* what) {
  if (pres.verified_to_degree() < static_cast<int>(n))
    throw IncompletePresentation(std::string(what) + " through degree " +
                                 std::to_string(n) +
                                 " needs completeness verified that far");
}

}  // namespace

ComponentSpaces::ComponentSpaces(const Presentation& pres)
    : alpha_(pres.alphabet()), basis_(pres) {}

ColumnSpacePtr ComponentSpaces::at(std::size_t n) {
  while (cache_.size() <= n) {
    std::size_t m = cache_.size();
    cache_.push_back(ColumnSpace::make(alpha_, basis_.degree(m)));
  }
  return cache_[n];
}

std::vector<SpanBasis> left_component_chain(const Presentation& pres,
                                            const Grading& grading,
                                            std::size_t g, std::size_t N,
                                            ComponentSpaces& spaces) {
  require_complete(pres, N, "left components");
  const AlphabetPtr& ab = pres.alphabet();
  std::vector<SpanBasis> chain;
  chain.reserve(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    SpanBasis span(spaces.at(n));
    // direct part: normal words of G-degree g
    for (const Word& w : spaces.words().degree(n))
      if (word_degree(grading, w) == g)
        span.insert(NcPoly::monomial(ab, w));
    // A_1 times the previous component
    if (n > 0) {
      for (const auto& [pivot, row] : chain[n - 1].rows()) {
        (void)pivot;
        NcPoly p = from_row(row, *spaces.at(n - 1));
        for (std::size_t l = 0; l < ab->size(); ++l) {
          NcPoly letter =
              NcPoly::monomial(ab, Word{{static_cast<std::uint8_t>(l)}});
          span.insert(normal_form(letter * p, pres));
        }
      }
    }
    chain.push_back(std::move(span));
  }
  return chain;
}

SpanBasis left_component(const Presentation& pres, const Grading& grading,
                         std::size_t g, std::size_t n) {
  ComponentSpaces spaces(pres);
  return left_component_chain(pres, grading, g, n, spaces).back();
}

std::vector<SpanBasis> intersection_generators(const Presentation& pres,
                                               const Grading& grading,
                                               std::size_t N) {
  require_complete(pres, N, "intersection of left components");
  ComponentSpaces spaces(pres);
  const FiniteGroup& G = grading.group();
  std::vector<std::vector<SpanBasis>> chains;
  chains.reserve(G.order());
  for (std::size_t g = 0; g < G.order(); ++g)
    chains.push_back(left_component_chain(pres, grading, g, N, spaces));
  std::vector<SpanBasis> out;
  out.reserve(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    std::vector<SpanBasis> at_n;
    at_n.reserve(G.order());
    for (std::size_t g = 0; g < G.order(); ++g) at_n.push_back(chains[g][n]);
    out.push_back(intersect_all(at_n));
  }
  return out;
}

TruncatedIdeal TruncatedIdeal::closure(const Presentation& pres,
                                       const std::vector<SpanBasis>& gens,
                                       std::size_t N) {
  require_complete(pres, N, "ideal closure");
  const AlphabetPtr& ab = pres.alphabet();
  ComponentSpaces spaces(pres);
  TruncatedIdeal out(pres, N);
  out.comps_.reserve(N + 1);
  out.notes_.resize(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    SpanBasis span(spaces.at(n));
    auto note = [&](const NcPoly& p, const std::string& origin) {
      if (p.is_zero()) return;
      Word lead = p.leading_word();
      if (span.insert(p))
        out.notes_[n].push_back(PivotNote{std::move(lead), origin});
    };
    if (n < gens.size()) {
      for (const auto& [pivot, row] : gens[n].rows()) {
        (void)pivot;
        note(from_row(row, *spaces.at(n)), "generator");
      }
    }
    if (n > 0) {
      for (const auto& [pivot, row] : out.comps_[n - 1].rows()) {
        NcPoly p = from_row(row, *spaces.at(n - 1));
        std::string pw = word_to_string(spaces.at(n - 1)->words()[pivot], *ab);
        for (std::size_t l = 0; l < ab->size(); ++l) {
          NcPoly letter =
              NcPoly::monomial(ab, Word{{static_cast<std::uint8_t>(l)}});
          note(normal_form(letter * p, pres), ab->letter(l) + "*(" + pw + ")");
          note(normal_form(p * letter, pres), "(" + pw + ")*" + ab->letter(l));
        }
      }
    }
    out.comps_.push_back(std::move(span));
  }
  return out;
}

const SpanBasis& TruncatedIdeal::component(std::size_t n) const {
  if (n >= comps_.size())
    throw WordOutsideAmbient("ideal truncated at degree " +
                             std::to_string(N_));
  return comps_[n];
}

const std::vector<PivotNote>& TruncatedIdeal::provenance(std::size_t n) const {
  if (n >= notes_.size())
    throw WordOutsideAmbient("ideal truncated at degree " +
                             std::to_string(N_));
  return notes_[n];
}

TruncatedIdeal pertinency_ideal(const Presentation& pres,
                                const Grading& grading, std::size_t N) {
  return TruncatedIdeal::closure(pres, intersection_generators(pres, grading, N),
                                 N);
}

std::optional<SuffixCover> suffix_cover_certificate(const Grading& grading,
                                                    const Word& w) {
  const FiniteGroup& G = grading.group();
  const std::size_t none = w.degree() + 1;
  std::vector<std::size_t> start(G.order(), none);
  std::size_t deg = G.identity();
  start[deg] = w.degree();  // empty suffix
  for (std::size_t p = w.degree(); p-- > 0;) {
    deg = G.mul(grading.generator_degree(w.idx[p]), deg);
    // keep the shortest suffix witnessing each element
    if (start[deg] == none) start[deg] = p;
  }
  for (std::size_t s : start)
    if (s == none) return std::nullopt;
  return SuffixCover{w, std::move(start)};
}

std::optional<Scalar> nf_proportionality(const Word& target,
                                         const Word& certified,
                                         const Presentation& pres) {
  require_complete(pres, std::max(target.degree(), certified.degree()),
                   "normal-form comparison");
  NcPoly nt = normal_form(target, pres);
  NcPoly nc = normal_form(certified, pres);
  if (nt.is_zero() || nc.is_zero()) return std::nullopt;
  if (nt.leading_word() != nc.leading_word()) return std::nullopt;
  Scalar lambda = nt.leading_coeff() / nc.leading_coeff();
  if (nt == nc.scaled(lambda)) return lambda;
  return std::nullopt;
}

bool member_via_equivalence(const Word& target, const Word& certified,
                            const Presentation& pres) {
  return nf_proportionality(target, certified, pres).has_value();
}

}  // namespace wb
