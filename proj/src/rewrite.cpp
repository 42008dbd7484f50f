#include "workbench/rewrite.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace wb {

namespace {

// Leftmost occurrence of pat inside w, if any.
std::optional<std::size_t> find_subword(const Word& w, const Word& pat) {
  if (pat.empty() || pat.idx.size() > w.idx.size()) return std::nullopt;
  auto it = std::search(w.idx.begin(), w.idx.end(), pat.idx.begin(),
                        pat.idx.end());
  if (it == w.idx.end()) return std::nullopt;
  return static_cast<std::size_t>(it - w.idx.begin());
}

bool ends_with(const Word& w, const Word& pat) {
  if (pat.idx.size() > w.idx.size()) return false;
  return std::equal(pat.idx.rbegin(), pat.idx.rend(), w.idx.rbegin());
}

RewriteRule orient(const NcPoly& rel) {
  if (rel.is_zero()) throw UnorientableRule("cannot orient the zero relation");
  if (!rel.is_homogeneous())
    throw NonHomogeneousRule("relation is not homogeneous: " + rel.to_string());
  const Word& lw = rel.leading_word();
  if (lw.empty())
    throw UnorientableRule("cannot orient a constant relation: " +
                           rel.to_string());
  // rel = lc*lw + rest  =>  lw -> -rest/lc
  NcPoly rhs = NcPoly::monomial(rel.alphabet(), lw) -
               rel.scaled(rel.leading_coeff().inverse());
  return RewriteRule{lw, std::move(rhs)};
}

void validate_rule(const RewriteRule& r, const Alphabet& alpha) {
  if (r.lhs.empty())
    throw UnorientableRule("rule left side must be a nonempty word");
  if (!r.rhs.alphabet()->same_letters(alpha))
    throw AlphabetMismatch("rule right side uses a different alphabet");
  for (const auto& [w, c] : r.rhs.terms()) {
    (void)c;
    if (w.degree() != r.lhs.degree())
      throw NonHomogeneousRule("rule does not preserve degree: " +
                               r.rhs.to_string());
    if (deglex_compare(w, r.lhs) >= 0)
      throw UnorientableRule("rule right side is not smaller than left side");
  }
}

struct RuleLess {
  bool operator()(const RewriteRule& a, const RewriteRule& b) const {
    return deglex_compare(a.lhs, b.lhs) < 0;
  }
};

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::downup:
      return "downup";
    case Family::f_algebra:
      return "F";
    case Family::h_algebra:
      return "H";
    case Family::b_algebra:
      return "B";
    case Family::downup_xy:
      return "downup_xy";
    case Family::custom:
      return "custom";
  }
  return "custom";
}

Presentation Presentation::make(AlphabetPtr alpha, ParamTablePtr params,
                                const std::vector<NcPoly>& relations,
                                Family family) {
  std::vector<RewriteRule> rules;
  rules.reserve(relations.size());
  for (const NcPoly& rel : relations) {
    if (!rel.alphabet()->same_letters(*alpha))
      throw AlphabetMismatch("relation uses a different alphabet");
    rules.push_back(orient(rel));
  }
  return from_rules(std::move(alpha), std::move(params), std::move(rules),
                    family);
}

Presentation Presentation::from_rules(AlphabetPtr alpha, ParamTablePtr params,
                                      std::vector<RewriteRule> rules,
                                      Family family) {
  for (const RewriteRule& r : rules) validate_rule(r, *alpha);
  std::stable_sort(rules.begin(), rules.end(), RuleLess{});
  Presentation p;
  p.alpha_ = std::move(alpha);
  p.params_ = std::move(params);
  p.rules_ = std::move(rules);
  p.family_ = family;
  return p;
}

std::optional<Scalar> Presentation::family_param(const std::string& key) const {
  auto it = family_params_.find(key);
  if (it == family_params_.end()) return std::nullopt;
  return it->second;
}

Presentation Presentation::with_verified_degree(int v) const {
  Presentation p = *this;
  p.verified_ = v;
  return p;
}

Presentation Presentation::with_family_params(
    std::map<std::string, Scalar> fp) const {
  Presentation p = *this;
  p.family_params_ = std::move(fp);
  return p;
}

Presentation downup_presentation(const Scalar& alpha, const Scalar& beta,
                                 ParamTablePtr params) {
  if (beta.is_zero())
    throw InvalidParams(
        "down-up parameter beta must be nonzero (beta = 0 gives a "
        "non-noetherian algebra)");
  auto ab = Alphabet::make({"d", "u"});
  auto w = [](std::initializer_list<std::uint8_t> l) {
    return Word(std::vector<std::uint8_t>(l));
  };
  // d^2u - alpha*dud - beta*ud^2 and du^2 - alpha*udu - beta*u^2d
  NcPoly r1(ab), r2(ab);
  r1.add_term(w({0, 0, 1}), Scalar(1));
  r1.add_term(w({0, 1, 0}), -alpha);
  r1.add_term(w({1, 0, 0}), -beta);
  r2.add_term(w({0, 1, 1}), Scalar(1));
  r2.add_term(w({1, 0, 1}), -alpha);
  r2.add_term(w({1, 1, 0}), -beta);
  return Presentation::make(ab, std::move(params), {r1, r2}, Family::downup)
      .with_family_params({{"alpha", alpha}, {"beta", beta}});
}

Presentation f_presentation() {
  auto ab = Alphabet::make({"x", "y"});
  auto params = ParamTable::rationals();
  const char* rels[] = {
      "y^3 - x*y*x",        "y*x*y - x^3",       "y^2*x^3 - x*y*x^2*y",
      "y*x^2*y*x - x^3*y^2", "y*x^4 - x^4*y",
  };
  std::vector<NcPoly> relations;
  for (const char* r : rels) relations.push_back(parse_poly(r, ab, params));
  return Presentation::make(ab, params, relations, Family::f_algebra);
}

Presentation h_presentation() {
  auto ab = Alphabet::make({"x", "y"});
  auto params = ParamTable::rationals();
  std::vector<NcPoly> relations = {
      parse_poly("x^2*y + y*x^2 - 2*y^3", ab, params),
      parse_poly("x*y^2 + y^2*x - 2*x^3", ab, params),
  };
  return Presentation::make(ab, params, relations, Family::h_algebra);
}

Presentation b_presentation() {
  auto ab = Alphabet::make({"x", "y", "z"});
  auto params = ParamTable::rationals();
  std::vector<NcPoly> relations = {
      parse_poly("y^2 - x^2", ab, params),
      parse_poly("y*x^2 - x^2*y", ab, params),
      parse_poly("z*x + x*z", ab, params),
      parse_poly("z*y + y*z", ab, params),
  };
  return Presentation::make(ab, params, relations, Family::b_algebra);
}

Presentation downup_xy_presentation(const Scalar& alpha, ParamTablePtr params) {
  auto ab = Alphabet::make({"x", "y"});
  auto w = [](std::initializer_list<std::uint8_t> l) {
    return Word(std::vector<std::uint8_t>(l));
  };
  Scalar two(2);
  // alpha*x^2y + (-2-alpha)*xyx + alpha*yx^2 + (2-alpha)*y^3
  NcPoly r1(ab);
  r1.add_term(w({0, 0, 1}), alpha);
  r1.add_term(w({0, 1, 0}), -two - alpha);
  r1.add_term(w({1, 0, 0}), alpha);
  r1.add_term(w({1, 1, 1}), two - alpha);
  // (2-alpha)*x^3 + alpha*xy^2 + (-2-alpha)*yxy + alpha*y^2x
  NcPoly r2(ab);
  r2.add_term(w({0, 0, 0}), two - alpha);
  r2.add_term(w({0, 1, 1}), alpha);
  r2.add_term(w({1, 0, 1}), -two - alpha);
  r2.add_term(w({1, 1, 0}), alpha);
  return Presentation::make(ab, std::move(params), {r1, r2}, Family::downup_xy)
      .with_family_params({{"alpha", alpha}});
}

NcPoly normal_form(const NcPoly& p, const Presentation& pres) {
  if (!p.alphabet()->same_letters(*pres.alphabet()))
    throw AlphabetMismatch("polynomial alphabet differs from presentation");
  const auto& rules = pres.rules();
  NcPoly cur = p;
  for (;;) {
    // Deglex-greatest reducible term; within it the greatest rule lhs wins
    // (rules are sorted ascending, so scan them in reverse), leftmost
    // occurrence on ties.
    const Word* word = nullptr;
    Scalar coeff;
    std::size_t rule_idx = 0, pos = 0;
    for (auto it = cur.terms().rbegin(); it != cur.terms().rend(); ++it) {
      for (std::size_t r = rules.size(); r-- > 0;) {
        if (auto at = find_subword(it->first, rules[r].lhs)) {
          word = &it->first;
          coeff = it->second;
          rule_idx = r;
          pos = *at;
          break;
        }
      }
      if (word) break;
    }
    if (!word) return cur;
    const RewriteRule& rule = rules[rule_idx];
    Word prefix = word->subword(0, pos);
    Word suffix = word->subword(pos + rule.lhs.degree(),
                                word->degree() - pos - rule.lhs.degree());
    NcPoly replacement = NcPoly::monomial(cur.alphabet(), prefix) * rule.rhs *
                         NcPoly::monomial(cur.alphabet(), suffix);
    Word reduced = *word;  // copy before mutating cur invalidates the pointer
    cur.add_term(reduced, -coeff);
    cur += replacement.scaled(coeff);
  }
}

NcPoly normal_form(const Word& w, const Presentation& pres) {
  return normal_form(NcPoly::monomial(pres.alphabet(), w), pres);
}

bool is_irreducible(const Word& w, const Presentation& pres) {
  for (const RewriteRule& r : pres.rules())
    if (find_subword(w, r.lhs)) return false;
  return true;
}

std::vector<Ambiguity> overlaps(const Presentation& pres, std::size_t maxdeg) {
  const auto& rules = pres.rules();
  const auto& alpha = pres.alphabet();
  std::vector<Ambiguity> out;
  auto record = [&](Word w, const NcPoly& f1, const NcPoly& f2) {
    NcPoly diff = normal_form(f1 - f2, pres);
    out.push_back(Ambiguity{std::move(w), diff.is_zero(), std::move(diff)});
  };
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& li = rules[i].lhs;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& lj = rules[j].lhs;
      // Overlap: a proper suffix of li equals a proper prefix of lj.
      std::size_t kmax = std::min(li.degree(), lj.degree()) - 1;
      for (std::size_t k = 1; k <= kmax; ++k) {
        if (li.subword(li.degree() - k, k) != lj.subword(0, k)) continue;
        Word tail = lj.subword(k, lj.degree() - k);
        Word w = li * tail;
        if (w.degree() > maxdeg) continue;
        Word head = li.subword(0, li.degree() - k);
        record(w, rules[i].rhs * NcPoly::monomial(alpha, tail),
               NcPoly::monomial(alpha, head) * rules[j].rhs);
      }
      if (i == j) continue;
      if (li == lj) {
        // Two rules with the same left side (only possible in hand-built
        // systems); their right sides must agree.
        if (i < j && li.degree() <= maxdeg)
          record(li, rules[i].rhs, rules[j].rhs);
        continue;
      }
      // Inclusion: li occurs properly inside lj.
      if (li.degree() < lj.degree() && lj.degree() <= maxdeg) {
        for (std::size_t pos = 0; pos + li.degree() <= lj.degree(); ++pos) {
          if (lj.subword(pos, li.degree()) != li) continue;
          Word head = lj.subword(0, pos);
          Word tail = lj.subword(pos + li.degree(),
                                 lj.degree() - pos - li.degree());
          record(lj, rules[j].rhs,
                 NcPoly::monomial(alpha, head) * rules[i].rhs *
                     NcPoly::monomial(alpha, tail));
        }
      }
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Ambiguity& a, const Ambiguity& b) {
                     return deglex_compare(a.word, b.word) < 0;
                   });
  return out;
}

CompletionResult complete(const Presentation& pres, std::size_t maxdeg,
                          std::size_t max_rules) {
  Presentation cur = pres;
  std::vector<RewriteRule> added;
  for (;;) {
    auto ambs = overlaps(cur, maxdeg);
    const Ambiguity* bad = nullptr;
    for (const Ambiguity& a : ambs) {
      if (!a.resolved) {
        bad = &a;
        break;
      }
    }
    if (!bad) return CompletionResult{cur.with_verified_degree(
                                          static_cast<int>(maxdeg)),
                                      std::move(added)};
    if (cur.rules().size() >= max_rules)
      throw CompletionBudgetExceeded(
          "completion needs more than " + std::to_string(max_rules) +
          " rules up to degree " + std::to_string(maxdeg));
    RewriteRule nr = orient(bad->difference);
    added.push_back(nr);
    std::vector<RewriteRule> rules = cur.rules();
    rules.push_back(std::move(nr));
    cur = Presentation::from_rules(cur.alphabet(), cur.params(),
                                   std::move(rules), cur.family());
  }
}

NormalWordBasis::NormalWordBasis(const Presentation& pres)
    : alpha_(pres.alphabet()) {
  for (const RewriteRule& r : pres.rules()) lhs_.push_back(r.lhs);
  by_degree_.push_back({Word{}});
}

const std::vector<Word>& NormalWordBasis::degree(std::size_t n) {
  while (by_degree_.size() <= n) {
    const std::vector<Word>& prev = by_degree_.back();
    std::vector<Word> next;
    for (const Word& w : prev) {
      for (std::size_t l = 0; l < alpha_->size(); ++l) {
        Word cand = w;
        cand.idx.push_back(static_cast<std::uint8_t>(l));
        // Only suffixes ending at the new letter can create an occurrence.
        bool reducible = false;
        for (const Word& lhs : lhs_) {
          if (ends_with(cand, lhs)) {
            reducible = true;
            break;
          }
        }
        if (!reducible) next.push_back(std::move(cand));
      }
    }
    by_degree_.push_back(std::move(next));
  }
  return by_degree_[n];
}

std::size_t dim_component(const Presentation& pres, std::size_t n) {
  if (pres.verified_to_degree() < static_cast<int>(n))
    throw IncompletePresentation(
        "presentation is only verified to degree " +
        std::to_string(pres.verified_to_degree()) +
        "; run completion through degree " + std::to_string(n) + " first");
  NormalWordBasis basis(pres);
  return basis.dim(n);
}

}  // namespace wb
