#include "workbench/pertinency.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "workbench/errors.hpp"

namespace wb {

namespace {

Word letters(std::initializer_list<std::size_t> ls) {
  Word w;
  w.idx.reserve(ls.size());
  for (std::size_t l : ls) w.idx.push_back(static_cast<std::uint8_t>(l));
  return w;
}

bool contains_subword(const Word& hay, const Word& needle) {
  if (needle.empty()) return true;
  return std::search(hay.idx.begin(), hay.idx.end(), needle.idx.begin(),
                     needle.idx.end()) != hay.idx.end();
}

bool ends_with_any(const Word& w, const std::vector<Word>& set) {
  for (const Word& f : set) {
    if (f.empty() || f.degree() > w.degree()) continue;
    if (std::equal(f.idx.begin(), f.idx.end(), w.idx.end() - f.idx.size()))
      return true;
  }
  return false;
}

// Words avoiding every forbidden subword form a regular language; its
// counting sequence is bounded exactly when, in the live part of the
// suffix automaton, no state sits on two distinct cycles and no path meets
// two different cycles. Forbidden leading words of ideal members make the
// avoiding words a degreewise spanning set of the quotient, so a bounded
// count here rigorously bounds every quotient component, including the
// degrees beyond the truncation.
bool avoidance_is_bounded(std::size_t nletters, std::vector<Word> forbidden) {
  std::sort(forbidden.begin(), forbidden.end(), DeglexLess{});
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()),
                  forbidden.end());
  std::vector<Word> minimal;
  for (const Word& w : forbidden) {
    bool redundant = false;
    for (const Word& v : minimal) {
      if (contains_subword(w, v)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(w);
  }
  for (const Word& w : minimal) {
    if (w.empty()) return true;  // unit excluded: the language is empty
  }

  // States: proper prefixes of forbidden words (the empty word is the root).
  std::map<Word, std::size_t, DeglexLess> id;
  std::vector<Word> states;
  auto intern = [&](const Word& w) {
    auto [it, fresh] = id.emplace(w, states.size());
    if (fresh) states.push_back(w);
    return it->second;
  };
  intern(Word{});
  std::size_t longest = 0;
  for (const Word& f : minimal) {
    longest = std::max(longest, f.degree());
    for (std::size_t len = 1; len + 1 <= f.degree(); ++len)
      intern(f.subword(0, len));
  }

  const std::size_t m = states.size();
  const std::ptrdiff_t dead = -1;
  std::vector<std::vector<std::ptrdiff_t>> next(
      m, std::vector<std::ptrdiff_t>(nletters, dead));
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t a = 0; a < nletters; ++a) {
      Word w = states[s];
      w.idx.push_back(static_cast<std::uint8_t>(a));
      if (ends_with_any(w, minimal)) continue;
      std::size_t cap = std::min(w.degree(), longest);
      for (std::size_t len = cap;; --len) {
        auto it = id.find(w.subword(w.degree() - len, len));
        if (it != id.end()) {
          next[s][a] = static_cast<std::ptrdiff_t>(it->second);
          break;
        }
        if (len == 0) break;
      }
    }
  }

  // Live part: states reachable from the root.
  std::vector<char> on(m, 0);
  std::vector<std::size_t> queue = {0};
  on[0] = 1;
  while (!queue.empty()) {
    std::size_t s = queue.back();
    queue.pop_back();
    for (std::size_t a = 0; a < nletters; ++a) {
      std::ptrdiff_t t = next[s][a];
      if (t != dead && !on[t]) {
        on[t] = 1;
        queue.push_back(static_cast<std::size_t>(t));
      }
    }
  }

  std::vector<std::vector<char>> reach(m, std::vector<char>(m, 0));
  for (std::size_t s = 0; s < m; ++s) {
    if (!on[s]) continue;
    for (std::size_t a = 0; a < nletters; ++a) {
      std::ptrdiff_t t = next[s][a];
      if (t != dead && on[t]) reach[s][t] = 1;
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    if (!on[k]) continue;
    for (std::size_t i = 0; i < m; ++i) {
      if (!on[i] || !reach[i][k]) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (reach[k][j]) reach[i][j] = 1;
      }
    }
  }

  for (std::size_t v = 0; v < m; ++v) {
    if (!on[v] || !reach[v][v]) continue;
    // A cycle state may continue inside its own cycle in at most one way.
    std::size_t inside = 0;
    for (std::size_t a = 0; a < nletters; ++a) {
      std::ptrdiff_t t = next[v][a];
      if (t != dead && on[t] && reach[t][v]) ++inside;
    }
    if (inside > 1) return false;
  }
  for (std::size_t u = 0; u < m; ++u) {
    if (!on[u] || !reach[u][u]) continue;
    for (std::size_t v = 0; v < m; ++v) {
      if (!on[v] || !reach[v][v]) continue;
      if (reach[u][v] && !reach[v][u]) return false;  // cycle feeding a cycle
    }
  }
  return true;
}

struct Shape {
  std::string name;
  std::function<std::vector<Word>(std::size_t)> instances;  // of exact degree
};

using Matcher = std::function<bool(const Word&)>;

std::optional<Word> find_word(const Shape& shape, std::size_t maxdeg,
                              const Matcher& member) {
  for (std::size_t n = 1; n <= maxdeg; ++n) {
    for (const Word& w : shape.instances(n)) {
      if (member(w)) return w;
    }
  }
  return std::nullopt;
}

std::optional<PatternMatch> find_shape(const Shape& shape, std::size_t maxdeg,
                                       const Matcher& member,
                                       const Alphabet& alpha) {
  if (auto w = find_word(shape, maxdeg, member))
    return PatternMatch{shape.name, word_to_string(*w, alpha)};
  return std::nullopt;
}

std::string bound_conclusion(const std::string& families) {
  return "words containing either matched word are reducible modulo the "
         "ideal, so the quotient is spanned degreewise by the bounded "
         "families " +
         families + "; its GK dimension is at most 1 and pertinency >= 2";
}

// Power shapes over a two-letter alphabet lo < hi, e.g. d < u.
Shape hi_power(std::size_t hi, std::string name) {
  return {std::move(name), [hi](std::size_t n) {
            return std::vector<Word>{letters({hi}).pow(n)};
          }};
}

Shape lo_cycle(std::size_t lo, std::size_t hi, std::string name) {
  // lo^s*(hi lo)^i, instances ordered by ascending i
  return {std::move(name), [lo, hi](std::size_t n) {
            std::vector<Word> out;
            for (std::size_t i = 0; 2 * i <= n; ++i)
              out.push_back(letters({lo}).pow(n - 2 * i) *
                            letters({hi, lo}).pow(i));
            return out;
          }};
}

Shape lo_even_cycle(std::size_t lo, std::size_t hi, std::string name) {
  // lo^(2s)*(lo hi)^i
  return {std::move(name), [lo, hi](std::size_t n) {
            std::vector<Word> out;
            for (std::size_t i = 0; 2 * i <= n; ++i) {
              if ((n - 2 * i) % 2 != 0) continue;
              out.push_back(letters({lo}).pow(n - 2 * i) *
                            letters({lo, hi}).pow(i));
            }
            return out;
          }};
}

Shape cycle_hi_even(std::size_t lo, std::size_t hi, std::string name) {
  // (hi lo)^j*hi^(2t)
  return {std::move(name), [lo, hi](std::size_t n) {
            std::vector<Word> out;
            for (std::size_t j = 0; 2 * j <= n; ++j) {
              if ((n - 2 * j) % 2 != 0) continue;
              out.push_back(letters({hi, lo}).pow(j) *
                            letters({hi}).pow(n - 2 * j));
            }
            return out;
          }};
}

std::optional<PatternCertificate> two_shape_certificate(
    const Shape& s1, const Shape& s2, std::string kind,
    const std::string& families, std::size_t maxdeg, const Matcher& member,
    const Alphabet& alpha) {
  auto m1 = find_shape(s1, maxdeg, member, alpha);
  if (!m1) return std::nullopt;
  auto m2 = find_shape(s2, maxdeg, member, alpha);
  if (!m2) return std::nullopt;
  return PatternCertificate{std::move(kind), {*m1, *m2},
                            bound_conclusion(families)};
}

// Membership of the monomial w in the ideal component of its degree; a zero
// normal form counts (the word names the zero element).
Matcher ideal_member(const Presentation& pres, const TruncatedIdeal& ideal,
                     const std::vector<std::set<Word, DeglexLess>>& pivots) {
  return [&pres, &ideal, &pivots](const Word& w) {
    std::size_t n = w.degree();
    if (n == 0 || n > ideal.truncation()) return false;
    if (pivots[n].count(w)) return true;
    NcPoly nf = normal_form(w, pres);
    if (nf.is_zero()) return true;
    return ideal.component(n).contains(nf);
  };
}

// x,y presentations of the d,u algebra at beta = -1 transfer back through
// d = x + y, u = x - y; power patterns found on the transferred ideal bound
// the same quotient.
std::optional<PatternCertificate> basis_change_certificate(
    const Presentation& pres, const TruncatedIdeal& ideal) {
  Scalar alpha_param(-2);  // the symmetric two-rule algebra sits at alpha = -2
  if (auto a = pres.family_param("alpha")) {
    alpha_param = *a;
  } else if (pres.family() != Family::h_algebra) {
    return std::nullopt;
  }
  const std::size_t N = ideal.truncation();
  Presentation du =
      complete(downup_presentation(alpha_param, Scalar(-1), pres.params()), N)
          .presentation;
  const AlphabetPtr& duA = du.alphabet();
  std::size_t d = *duA->index_of("d");
  std::size_t u = *duA->index_of("u");

  const AlphabetPtr& xyA = pres.alphabet();
  auto ox = xyA->index_of("x");
  auto oy = xyA->index_of("y");
  if (!ox || !oy) return std::nullopt;
  std::vector<NcPoly> images(xyA->size(), NcPoly::zero(duA));
  NcPoly pd = NcPoly::monomial(duA, letters({d}));
  NcPoly pu = NcPoly::monomial(duA, letters({u}));
  images[*ox] = (pd + pu).scaled(Scalar(1, 2));
  images[*oy] = (pd - pu).scaled(Scalar(1, 2));

  NormalWordBasis nb(du);
  std::vector<SpanBasis> image;
  std::vector<std::set<Word, DeglexLess>> pivots(N + 1);
  image.reserve(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    SpanBasis sb(ColumnSpace::make(duA, nb.degree(n)));
    for (const auto& [col, row] : ideal.component(n).rows()) {
      NcPoly p = ideal.component(n).row_poly(col);
      sb.insert(normal_form(substitute(p, images), du));
    }
    for (const Word& w : sb.pivot_words()) pivots[n].insert(w);
    image.push_back(std::move(sb));
  }

  Matcher member = [&](const Word& w) {
    std::size_t n = w.degree();
    if (n == 0 || n > N) return false;
    if (pivots[n].count(w)) return true;
    NcPoly nf = normal_form(w, du);
    if (nf.is_zero()) return true;
    return image[n].contains(nf);
  };

  auto cert = two_shape_certificate(
      hi_power(u, "u^t"), lo_cycle(d, u, "d^s*(ud)^i"),
      "basis_change_power_pattern", "d^a*(ud)^b*u^c with a or b capped and c capped",
      N, member, *duA);
  if (!cert) return std::nullopt;
  cert->conclusion =
      "after the change of generators d = x + y, u = x - y, " +
      cert->conclusion;
  return cert;
}

}  // namespace

std::string growth_kind_name(GrowthProfile::Kind k) {
  switch (k) {
    case GrowthProfile::Kind::eventually_zero:
      return "eventually_zero";
    case GrowthProfile::Kind::bounded:
      return "bounded";
    case GrowthProfile::Kind::unbounded_evidence:
      return "unbounded_evidence";
  }
  return "unbounded_evidence";
}

std::string confidence_name(Confidence c) {
  switch (c) {
    case Confidence::certified:
      return "certified";
    case Confidence::evidence:
      return "evidence";
    case Confidence::none:
      return "false";
  }
  return "false";
}

GrowthProfile quotient_growth(const Presentation& pres,
                              const TruncatedIdeal& ideal, std::size_t maxdeg,
                              std::size_t group_order) {
  if (maxdeg > ideal.truncation())
    throw InvalidParams("growth profile degree exceeds the ideal truncation");
  GrowthProfile out;
  out.dims.resize(maxdeg + 1);
  for (std::size_t n = 0; n <= maxdeg; ++n) {
    std::size_t dim = dim_component(pres, n);
    std::size_t rank = ideal.component(n).rank();
    out.dims[n] = dim - rank;
  }
  // Once a component saturates, letter products keep every later component
  // saturated; a regression would be a bug in the closure.
  for (std::size_t n = 0; n + 1 <= maxdeg; ++n) {
    if (out.dims[n] == 0 && out.dims[n + 1] != 0)
      throw Error("ideal saturation must persist degree to degree");
  }

  if (out.dims[maxdeg] == 0) {
    out.kind = GrowthProfile::Kind::eventually_zero;
    std::size_t z = maxdeg;
    while (z > 0 && out.dims[z - 1] == 0) --z;
    out.zero_from = z;
    return out;
  }

  std::size_t w = 2 * group_order + 4;
  std::size_t lo = maxdeg > w ? maxdeg - w : 0;
  std::size_t mid = lo + (maxdeg - lo) / 2;
  std::size_t first = 0, second = 0;
  for (std::size_t n = lo; n <= mid; ++n) first = std::max(first, out.dims[n]);
  for (std::size_t n = mid + 1; n <= maxdeg; ++n)
    second = std::max(second, out.dims[n]);
  out.window_lo = lo;
  if (second <= first) {
    out.kind = GrowthProfile::Kind::bounded;
    out.bound = std::max(first, second);
  } else {
    out.kind = GrowthProfile::Kind::unbounded_evidence;
  }
  return out;
}

std::optional<PatternCertificate> pattern_certificate(
    const Presentation& pres, const TruncatedIdeal& ideal) {
  const AlphabetPtr& alpha = pres.alphabet();
  const std::size_t N = ideal.truncation();

  std::vector<std::set<Word, DeglexLess>> pivots(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    for (const Word& w : ideal.component(n).pivot_words()) pivots[n].insert(w);
  }
  Matcher member = ideal_member(pres, ideal, pivots);

  auto idx = [&](const char* name) { return alpha->index_of(name); };

  // The avoidance automaton over all known leading words; shared fallback.
  std::optional<bool> bounded_cache;
  auto avoidance_bounded = [&]() {
    if (!bounded_cache) {
      std::vector<Word> forbidden;
      for (const RewriteRule& r : pres.rules()) forbidden.push_back(r.lhs);
      for (std::size_t n = 1; n <= N; ++n)
        forbidden.insert(forbidden.end(), pivots[n].begin(), pivots[n].end());
      bounded_cache = avoidance_is_bounded(alpha->size(), forbidden);
    }
    return *bounded_cache;
  };

  std::optional<PatternCertificate> cert;
  switch (pres.family()) {
    case Family::downup: {
      std::size_t d = *idx("d"), u = *idx("u");
      cert = two_shape_certificate(hi_power(u, "u^t"),
                                   lo_cycle(d, u, "d^s*(ud)^i"),
                                   "power_pattern",
                                   "d^a*(ud)^b*u^c with a or b capped and c capped",
                                   N, member, *alpha);
      if (!cert) {
        auto a = pres.family_param("alpha");
        if (a && a->is_zero()) {
          cert = two_shape_certificate(
              lo_even_cycle(d, u, "d^(2s)*(du)^i"),
              cycle_hi_even(d, u, "(ud)^j*u^(2t)"), "even_power_pattern",
              "d^a*(ud)^b*u^c with a capped or b and c capped", N, member,
              *alpha);
        }
      }
      break;
    }
    case Family::f_algebra: {
      std::size_t x = *idx("x"), y = *idx("y");
      Word yx3 = letters({y, x, x, x});
      Word y2x2 = letters({y, y, x, x});
      Word yx2 = letters({y, x, x});
      Shape plain{"(yx^3)^a*(y^2x^2)^b", [yx3, y2x2](std::size_t n) {
                    std::vector<Word> out;
                    if (n == 0 || n % 4 != 0) return out;
                    for (std::size_t a = 0; 4 * a <= n; ++a)
                      out.push_back(yx3.pow(a) * y2x2.pow(n / 4 - a));
                    return out;
                  }};
      Shape marked{"(yx^3)^a*(yx^2)*(y^2x^2)^b",
                   [yx3, yx2, y2x2](std::size_t n) {
                     std::vector<Word> out;
                     if (n < 3 || (n - 3) % 4 != 0) return out;
                     for (std::size_t a = 0; 4 * a <= n - 3; ++a)
                       out.push_back(yx3.pow(a) * yx2 *
                                     y2x2.pow((n - 3) / 4 - a));
                     return out;
                   }};
      cert = two_shape_certificate(
          plain, marked, "factor_word_pattern",
          "x^i*(yx^3)^j*(yx^2)^e*(y^2x^2)^k*(tails) with two of i, j, k capped",
          N, member, *alpha);
      break;
    }
    case Family::b_algebra: {
      std::size_t x = *idx("x"), y = *idx("y"), z = *idx("z");
      Shape xcyc{"x^(2s)*(yx)^i", [x, y](std::size_t n) {
                   std::vector<Word> out;
                   if (n % 2 != 0 || n == 0) return out;
                   for (std::size_t i = 0; 2 * i <= n; ++i)
                     out.push_back(letters({x}).pow(n - 2 * i) *
                                   letters({y, x}).pow(i));
                   return out;
                 }};
      Shape zpow{"(xy)^j*z^t", [x, y, z](std::size_t n) {
                   std::vector<Word> out;
                   for (std::size_t j = 0; 2 * j <= n; ++j)
                     out.push_back(letters({x, y}).pow(j) *
                                   letters({z}).pow(n - 2 * j));
                   return out;
                 }};
      cert = two_shape_certificate(
          xcyc, zpow, "skew_power_pattern",
          "x^i*(yx)^j*(y)^e*z^k with i or j capped and j or k capped", N,
          member, *alpha);
      break;
    }
    case Family::downup_xy:
    case Family::h_algebra: {
      std::size_t x = *idx("x"), y = *idx("y");
      auto wx = find_word(hi_power(x, "x^s"), N, member);
      auto wy = find_word(hi_power(y, "y^t"), N, member);
      Word xyx = letters({x, y, x});
      Word yxy = letters({y, x, y});
      bool brackets = member(xyx) && member(yxy);
      std::size_t pure_top =
          wx && wy ? std::max(wx->degree(), wy->degree()) : N + 1;
      // Prefer the certificate whose witnesses sit in the lowest degree;
      // a saturated high component would otherwise shadow sharper words.
      if (wx && wy && (!brackets || pure_top <= 3) && avoidance_bounded()) {
        cert = PatternCertificate{
            "pure_power_pattern",
            {PatternMatch{"x^s", word_to_string(*wx, *alpha)},
             PatternMatch{"y^t", word_to_string(*wy, *alpha)}},
            bound_conclusion("x^i*(yx)^j*y^k with i and k capped")};
      } else if (brackets && avoidance_bounded()) {
        cert = PatternCertificate{
            "bracket_word_pattern",
            {PatternMatch{"x*y*x", word_to_string(xyx, *alpha)},
             PatternMatch{"y*x*y", word_to_string(yxy, *alpha)}},
            bound_conclusion(
                "x^i, y*x^i, x^i*y, x^i*y^2, y*x^i*y, y*x^i*y^2")};
      }
      break;
    }
    case Family::custom:
      break;
  }

  if (!cert && avoidance_bounded()) {
    std::size_t count = 0;
    for (std::size_t n = 1; n <= N; ++n) count += pivots[n].size();
    std::ostringstream conclusion;
    conclusion << "the automaton of words avoiding the presentation's rule "
                  "words and all "
               << count
               << " ideal leading words has no path through two cycles, so "
                  "the avoiding words per degree are bounded; the quotient "
                  "has GK dimension at most 1 and pertinency >= 2";
    cert = PatternCertificate{"avoidance_bounded", {}, conclusion.str()};
  }
  if (!cert &&
      (pres.family() == Family::downup_xy ||
       pres.family() == Family::h_algebra)) {
    cert = basis_change_certificate(pres, ideal);
  }
  return cert;
}

PertinencyReport pertinency_report(const Presentation& pres,
                                   const Grading& grading, std::size_t maxdeg,
                                   std::optional<int> custom_gk) {
  int gk = 3;
  if (pres.family() == Family::custom) {
    if (!custom_gk)
      throw InvalidParams(
          "custom presentations must supply their ambient GK dimension");
    gk = *custom_gk;
  }

  TruncatedIdeal ideal = pertinency_ideal(pres, grading, maxdeg);
  GrowthProfile growth =
      quotient_growth(pres, ideal, maxdeg, grading.group().order());
  std::optional<PatternCertificate> cert = pattern_certificate(pres, ideal);
  if (cert && growth.kind == GrowthProfile::Kind::unbounded_evidence)
    throw Error(
        "bounded-growth certificate disagrees with the dimension window");

  PertinencyReport rep;
  rep.growth = growth;
  rep.certificate = cert;
  rep.gk_algebra = gk;

  std::ostringstream notes;
  bool zero_tail = growth.kind == GrowthProfile::Kind::eventually_zero;
  bool zero_certified = zero_tail && growth.zero_from + 2 <= maxdeg;
  if (zero_certified) {
    rep.pty_eq_3 = Confidence::certified;
    rep.isolated_singularity = true;
    notes << "quotient components vanish from degree " << growth.zero_from
          << " on; a saturated component stays saturated, so the quotient is "
             "finite dimensional, the pertinency equals the ambient GK "
             "dimension, and the invariant ring has a graded isolated "
             "singularity. ";
  } else if (zero_tail) {
    rep.pty_eq_3 = Confidence::evidence;
    notes << "quotient components vanish only at the last two degrees "
             "checked; raising the truncation would settle it. ";
  }

  if (cert) {
    rep.pty_ge_2 = Confidence::certified;
    notes << "certificate " << cert->kind << ": " << cert->conclusion << ". ";
  } else if (zero_certified) {
    rep.pty_ge_2 = Confidence::certified;
  } else if (growth.kind != GrowthProfile::Kind::unbounded_evidence) {
    rep.pty_ge_2 = Confidence::evidence;
    notes << "dimension data over the window [" << growth.window_lo << ", "
          << maxdeg << "] stays within " << growth.bound
          << " but no certificate was found. ";
  } else {
    notes << "quotient dimensions grow across the window; no lower bound "
             "beyond the trivial one. ";
  }
  rep.notes = notes.str();
  return rep;
}

}  // namespace wb
