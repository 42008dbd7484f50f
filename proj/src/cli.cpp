#include "workbench/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "workbench/errors.hpp"

namespace wb {

namespace {

// ---------------------------------------------------------------------------
// config validation

const Json& need(const Json& j, const std::string& key,
                 const std::string& where) {
  if (!j.is_object())
    throw ConfigError(where, "expected an object");
  if (!j.contains(key))
    throw ConfigError(where, "missing required key \"" + key + "\"");
  return j.at(key);
}

std::string need_string(const Json& j, const std::string& key,
                        const std::string& where) {
  const Json& v = need(j, key, where);
  if (!v.is_string())
    throw ConfigError(where + "." + key, "expected a string");
  return v.get<std::string>();
}

long need_int(const Json& j, const std::string& key, const std::string& where,
              long lo) {
  const Json& v = need(j, key, where);
  if (!v.is_number_integer())
    throw ConfigError(where + "." + key, "expected an integer");
  long n = v.get<long>();
  if (n < lo)
    throw ConfigError(where + "." + key,
                      "expected an integer >= " + std::to_string(lo));
  return n;
}

void only_keys(const Json& j, const std::vector<std::string>& allowed,
               const std::string& where) {
  for (const auto& item : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end())
      throw ConfigError(where, "unknown key \"" + item.key() + "\"");
  }
}

Scalar parse_rational(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Scalar(mpq_class(v.get<long>()));
  if (v.is_string()) {
    try {
      mpq_class q(v.get<std::string>());
      q.canonicalize();
      return Scalar(q);
    } catch (const std::invalid_argument&) {
      throw ConfigError(where,
                        "not a rational: \"" + v.get<std::string>() + "\"");
    }
  }
  throw ConfigError(where, "expected an integer or a string like \"3/2\"");
}

FiniteGroup build_group(const Json& g, const std::string& where) {
  std::string kind = need_string(g, "kind", where);
  if (kind == "cyclic") {
    only_keys(g, {"kind", "n"}, where);
    return FiniteGroup::cyclic(static_cast<std::size_t>(need_int(g, "n", where, 1)));
  }
  if (kind == "dihedral") {
    only_keys(g, {"kind", "n"}, where);
    return FiniteGroup::dihedral_reflections(
        static_cast<std::size_t>(need_int(g, "n", where, 1)));
  }
  if (kind == "quaternion") {
    only_keys(g, {"kind"}, where);
    return FiniteGroup::quaternion8();
  }
  if (kind == "product") {
    only_keys(g, {"kind", "factors"}, where);
    const Json& f = need(g, "factors", where);
    if (!f.is_array() || f.size() < 2)
      throw ConfigError(where + ".factors",
                        "expected an array of at least two group specs");
    FiniteGroup acc = build_group(f[0], where + ".factors[0]");
    for (std::size_t i = 1; i < f.size(); ++i)
      acc = FiniteGroup::product(
          acc, build_group(f[i], where + ".factors[" + std::to_string(i) + "]"));
    return acc;
  }
  if (kind == "table") {
    only_keys(g, {"kind", "names", "table"}, where);
    const Json& names = need(g, "names", where);
    const Json& table = need(g, "table", where);
    if (!names.is_array() || !table.is_array())
      throw ConfigError(where, "\"names\" and \"table\" must be arrays");
    std::vector<std::string> nm;
    for (const Json& s : names) {
      if (!s.is_string())
        throw ConfigError(where + ".names", "expected strings");
      nm.push_back(s.get<std::string>());
    }
    std::vector<std::vector<std::size_t>> tb;
    for (const Json& row : table) {
      if (!row.is_array())
        throw ConfigError(where + ".table", "expected an array of rows");
      std::vector<std::size_t> r;
      for (const Json& e : row) {
        if (!e.is_number_integer() || e.get<long>() < 0)
          throw ConfigError(where + ".table", "entries are element indices");
        r.push_back(static_cast<std::size_t>(e.get<long>()));
      }
      tb.push_back(std::move(r));
    }
    try {
      return FiniteGroup::from_table(std::move(nm), std::move(tb));
    } catch (const NotAGroup& e) {
      throw ConfigError(where + ".table", e.what());
    }
  }
  throw ConfigError(where + ".kind", "unknown group kind \"" + kind + "\"");
}

Presentation build_presentation(const Json& a, const std::string& where) {
  std::string fam = need_string(a, "family", where);
  auto params = ParamTable::rationals();
  if (fam == "downup") {
    only_keys(a, {"family", "alpha", "beta"}, where);
    Scalar alpha = parse_rational(need(a, "alpha", where), where + ".alpha");
    Scalar beta = parse_rational(need(a, "beta", where), where + ".beta");
    if (beta.is_zero())
      throw ConfigError(where + ".beta",
                        "beta = 0 makes the algebra non-noetherian; the "
                        "analysis requires a noetherian algebra (beta != 0)");
    return downup_presentation(alpha, beta, params);
  }
  if (fam == "downup_xy") {
    only_keys(a, {"family", "alpha"}, where);
    Scalar alpha = parse_rational(need(a, "alpha", where), where + ".alpha");
    return downup_xy_presentation(alpha, params);
  }
  if (fam == "five_rule") {
    only_keys(a, {"family"}, where);
    return f_presentation();
  }
  if (fam == "hyperbolic") {
    only_keys(a, {"family"}, where);
    return h_presentation();
  }
  if (fam == "skew") {
    only_keys(a, {"family"}, where);
    return b_presentation();
  }
  if (fam == "custom") {
    only_keys(a, {"family", "letters", "relations", "gk"}, where);
    const Json& letters = need(a, "letters", where);
    if (!letters.is_array() || letters.empty())
      throw ConfigError(where + ".letters", "expected a nonempty array");
    std::vector<std::string> ls;
    for (const Json& s : letters) {
      if (!s.is_string())
        throw ConfigError(where + ".letters", "expected strings");
      ls.push_back(s.get<std::string>());
    }
    AlphabetPtr alpha = Alphabet::make(std::move(ls));
    const Json& rels = need(a, "relations", where);
    if (!rels.is_array())
      throw ConfigError(where + ".relations", "expected an array of strings");
    std::vector<NcPoly> ps;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      std::string loc = where + ".relations[" + std::to_string(i) + "]";
      if (!rels[i].is_string()) throw ConfigError(loc, "expected a string");
      try {
        ps.push_back(parse_poly(rels[i].get<std::string>(), alpha, params));
      } catch (const Error& e) {
        throw ConfigError(loc, e.what());
      }
    }
    try {
      return Presentation::make(alpha, params, ps);
    } catch (const Error& e) {
      throw ConfigError(where + ".relations", e.what());
    }
  }
  throw ConfigError(where + ".family", "unknown family \"" + fam + "\"");
}

std::vector<Scalar> build_series_side(const Json& s, const std::string& where) {
  if (!s.is_object()) throw ConfigError(where, "expected an object");
  only_keys(s, {"one_minus_t_powers", "coefficients"}, where);
  if (s.contains("one_minus_t_powers")) {
    const Json& ks = s.at("one_minus_t_powers");
    if (!ks.is_array() || ks.empty())
      throw ConfigError(where + ".one_minus_t_powers",
                        "expected a nonempty array of positive integers");
    std::vector<Scalar> acc{Scalar(1)};
    for (const Json& k : ks) {
      if (!k.is_number_integer() || k.get<long>() < 1)
        throw ConfigError(where + ".one_minus_t_powers",
                          "expected positive integers");
      acc = poly_mul(acc,
                     one_minus_t_pow(static_cast<std::size_t>(k.get<long>())));
    }
    return acc;
  }
  if (s.contains("coefficients")) {
    const Json& cs = s.at("coefficients");
    if (!cs.is_array() || cs.empty())
      throw ConfigError(where + ".coefficients", "expected a nonempty array");
    std::vector<Scalar> acc;
    for (const Json& c : cs)
      acc.push_back(parse_rational(c, where + ".coefficients"));
    return acc;
  }
  throw ConfigError(where,
                    "expected \"one_minus_t_powers\" or \"coefficients\"");
}

const std::vector<std::string>& task_order() {
  static const std::vector<std::string> order{
      "validate",   "hdet",       "hilbert",    "covariants",
      "pertinency", "verify-identities", "memberships"};
  return order;
}

// Rendering helpers -------------------------------------------------------

std::string algebra_summary(const Json& a) {
  std::ostringstream os;
  os << a.at("family").get<std::string>();
  bool first = true;
  for (const auto& item : a.items()) {
    if (item.key() == "family" || item.key() == "letters" ||
        item.key() == "relations")
      continue;
    os << (first ? " (" : ", ") << item.key() << " = "
       << (item.value().is_string() ? item.value().get<std::string>()
                                    : item.value().dump());
    first = false;
  }
  if (!first) os << ")";
  return os.str();
}

class TaskClock {
 public:
  TaskClock() : start_(std::chrono::steady_clock::now()) {}
  long ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

AnalysisConfig parse_config(const Json& j) {
  if (!j.is_object()) throw ConfigError("config", "expected a JSON object");
  only_keys(j,
            {"name", "algebra", "group", "grading", "maxdeg", "tasks",
             "identities", "memberships", "series", "expected"},
            "config");

  AnalysisConfig cfg;
  if (j.contains("name")) {
    if (!j.at("name").is_string())
      throw ConfigError("config.name", "expected a string");
    cfg.name = j.at("name").get<std::string>();
  }

  cfg.algebra = need(j, "algebra", "config");
  Presentation pres = build_presentation(cfg.algebra, "algebra");
  cfg.group = need(j, "group", "config");
  FiniteGroup group = build_group(cfg.group, "group");

  cfg.grading = need(j, "grading", "config");
  if (!cfg.grading.is_object())
    throw ConfigError("config.grading",
                      "expected an object: generator -> group element");
  const Alphabet& alpha = *pres.alphabet();
  for (const auto& item : cfg.grading.items()) {
    if (!alpha.index_of(item.key()))
      throw ConfigError("grading." + item.key(), "not a generator");
    if (!item.value().is_string())
      throw ConfigError("grading." + item.key(), "expected an element name");
    try {
      group.element(item.value().get<std::string>());
    } catch (const UnknownElement&) {
      throw ConfigError("grading." + item.key(),
                        "unknown group element \"" +
                            item.value().get<std::string>() + "\"");
    }
  }
  for (const std::string& l : alpha.letters()) {
    if (!cfg.grading.contains(l))
      throw ConfigError("config.grading", "no degree for generator \"" + l + "\"");
  }

  if (j.contains("maxdeg")) {
    long n = need_int(j, "maxdeg", "config", 4);
    cfg.maxdeg = static_cast<std::size_t>(n);
  }

  const Json& tasks = need(j, "tasks", "config");
  if (!tasks.is_array() || tasks.empty())
    throw ConfigError("config.tasks", "expected a nonempty array");
  std::set<std::string> seen;
  for (const Json& t : tasks) {
    if (!t.is_string())
      throw ConfigError("config.tasks", "expected task names");
    std::string name = t.get<std::string>();
    const auto& order = task_order();
    if (std::find(order.begin(), order.end(), name) == order.end())
      throw ConfigError("config.tasks", "unknown task \"" + name + "\"");
    seen.insert(name);
  }
  for (const std::string& t : task_order())
    if (seen.count(t)) cfg.tasks.push_back(t);

  if (j.contains("identities")) {
    const Json& ids = j.at("identities");
    if (!ids.is_array())
      throw ConfigError("config.identities", "expected an array");
    for (std::size_t i = 0; i < ids.size(); ++i) {
      std::string loc = "identities[" + std::to_string(i) + "]";
      only_keys(ids[i], {"lhs", "rhs"}, loc);
      std::string lhs = need_string(ids[i], "lhs", loc);
      std::string rhs = need_string(ids[i], "rhs", loc);
      try {
        parse_poly(lhs, pres.alphabet(), pres.params());
      } catch (const Error& e) {
        throw ConfigError(loc + ".lhs", e.what());
      }
      try {
        parse_poly(rhs, pres.alphabet(), pres.params());
      } catch (const Error& e) {
        throw ConfigError(loc + ".rhs", e.what());
      }
      cfg.identities.emplace_back(lhs, rhs);
    }
  }

  if (j.contains("memberships")) {
    const Json& ms = j.at("memberships");
    if (!ms.is_array())
      throw ConfigError("config.memberships", "expected an array of words");
    for (std::size_t i = 0; i < ms.size(); ++i) {
      std::string loc = "memberships[" + std::to_string(i) + "]";
      if (!ms[i].is_string()) throw ConfigError(loc, "expected a word string");
      std::string s = ms[i].get<std::string>();
      try {
        parse_word(s, pres.alphabet());
      } catch (const Error& e) {
        throw ConfigError(loc, e.what());
      }
      cfg.memberships.push_back(s);
    }
  }

  if (j.contains("series")) {
    const Json& s = j.at("series");
    only_keys(s, {"numerator", "denominator"}, "config.series");
    RationalSeries rs{
        build_series_side(need(s, "numerator", "config.series"),
                          "series.numerator"),
        build_series_side(need(s, "denominator", "config.series"),
                          "series.denominator")};
    if (rs.denominator.empty() || rs.denominator[0].is_zero())
      throw ConfigError("series.denominator",
                        "constant term must be nonzero");
    cfg.series = std::move(rs);
  }

  if (j.contains("expected")) {
    const Json& e = j.at("expected");
    if (!e.is_object())
      throw ConfigError("config.expected", "expected an object");
    only_keys(e,
              {"generators", "hilbert", "dims", "certificate", "growth",
               "pty_ge_2", "pty_eq_3", "isolated_singularity", "hdet_trivial",
               "memberships"},
              "config.expected");
    cfg.expected = e;
  } else {
    cfg.expected = Json::object();
  }

  bool custom = cfg.algebra.at("family").get<std::string>() == "custom";
  if (custom && seen.count("pertinency") && !cfg.algebra.contains("gk"))
    throw ConfigError("algebra.gk",
                      "custom presentations must declare the algebra's "
                      "Gelfand-Kirillov dimension for the pertinency task");

  return cfg;
}

AnalysisConfig parse_config_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("<json>", e.what());
  }
  return parse_config(j);
}

Report run(const AnalysisConfig& cfg) {
  TaskClock total;
  std::ostringstream human;

  Presentation pres0 = build_presentation(cfg.algebra, "algebra");
  FiniteGroup group = build_group(cfg.group, "group");

  // identity operands are reparsed here; completion must reach their degree
  std::size_t need_deg = cfg.maxdeg;
  std::vector<std::pair<NcPoly, NcPoly>> id_polys;
  for (const auto& [l, r] : cfg.identities) {
    NcPoly lp = parse_poly(l, pres0.alphabet(), pres0.params());
    NcPoly rp = parse_poly(r, pres0.alphabet(), pres0.params());
    need_deg = std::max({need_deg, lp.degree(), rp.degree()});
    id_polys.emplace_back(std::move(lp), std::move(rp));
  }

  TaskClock comp_clock;
  CompletionResult comp = complete(pres0, need_deg);
  const Presentation& pres = comp.presentation;
  Grading grading = [&] {
    std::map<std::string, std::string> assign;
    for (const auto& item : cfg.grading.items())
      assign[item.key()] = item.value().get<std::string>();
    return Grading::make(group, pres.alphabet(), assign);
  }();

  human << "== workbench run";
  if (!cfg.name.empty()) human << ": " << cfg.name;
  human << " ==\n";
  human << "algebra: " << algebra_summary(cfg.algebra) << "; group order "
        << group.order() << "; maxdeg " << cfg.maxdeg << "\n";
  human << "completion: verified through degree " << pres.verified_to_degree()
        << ", " << pres.rules().size() << " rules (" << comp_clock.ms()
        << " ms)\n";
  if (std::getenv("WORKBENCH_THREADS"))
    human << "threads: " << thread_cap() << " (WORKBENCH_THREADS set)\n";

  Json report = Json::object();
  if (!cfg.name.empty()) report["name"] = cfg.name;
  report["algebra"] = cfg.algebra;
  report["group"] = Json{{"kind", cfg.group.at("kind").get<std::string>()},
                         {"order", group.order()}};
  report["grading"] = cfg.grading;
  report["maxdeg"] = cfg.maxdeg;
  report["completion"] = Json{{"verified_to_degree", pres.verified_to_degree()},
                              {"rules", pres.rules().size()},
                              {"rules_added", comp.added.size()}};
  Json tasks = Json::object();

  std::optional<TruncatedIdeal> shared_ideal;
  auto ideal = [&]() -> const TruncatedIdeal& {
    if (!shared_ideal)
      shared_ideal = pertinency_ideal(pres, grading, cfg.maxdeg);
    return *shared_ideal;
  };

  for (const std::string& task : cfg.tasks) {
    TaskClock tc;
    try {
      if (task == "validate") {
        GradingValidation v = validate_grading(pres, grading);
        tasks[task] = Json{{"homogeneous", v.valid},
                           {"inner_faithful", v.inner_faithful},
                           {"violations", v.violations}};
        human << "validate: homogeneous " << (v.valid ? "yes" : "no")
              << ", inner-faithful " << (v.inner_faithful ? "yes" : "no");
      } else if (task == "hdet") {
        HdetResult r = hdet(pres, grading);
        tasks[task] =
            Json{{"element", group.name(r.element)}, {"trivial", r.trivial}};
        human << "hdet: element " << group.name(r.element)
              << (r.trivial ? " (trivial)" : " (nontrivial)");
      } else if (task == "hilbert") {
        std::vector<std::size_t> values =
            hilbert_function(pres, grading, cfg.maxdeg);
        Json tj = Json{{"through_degree", cfg.maxdeg}, {"values", values}};
        human << "hilbert: " << join_sizes(values);
        if (cfg.series) {
          bool ok = compare_series(values, *cfg.series);
          tj["matches_series"] = ok;
          human << (ok ? "; matches reference series"
                       : "; DOES NOT match reference series");
        }
        tasks[task] = std::move(tj);
      } else if (task == "covariants") {
        std::vector<CovariantGenerator> gens =
            minimal_generators(pres, grading, cfg.maxdeg);
        Json arr = Json::array();
        human << "covariants: " << gens.size() << " generators:";
        for (const CovariantGenerator& g : gens) {
          std::string w = word_to_string(g.word, *pres.alphabet());
          arr.push_back(Json{{"word", w}, {"degree", g.degree}});
          human << " " << w << " (" << g.degree << ")";
        }
        tasks[task] = Json{{"through_degree", cfg.maxdeg},
                           {"count", gens.size()},
                           {"generators", std::move(arr)}};
      } else if (task == "pertinency") {
        std::optional<int> gk;
        if (cfg.algebra.at("family").get<std::string>() == "custom")
          gk = static_cast<int>(cfg.algebra.at("gk").get<long>());
        PertinencyReport rep = pertinency_report(pres, grading, cfg.maxdeg, gk);
        Json tj = Json{{"truncation", cfg.maxdeg},
                       {"dims", rep.growth.dims},
                       {"growth", growth_kind_name(rep.growth.kind)}};
        if (rep.growth.kind == GrowthProfile::Kind::eventually_zero)
          tj["zero_from"] = rep.growth.zero_from;
        if (rep.growth.kind == GrowthProfile::Kind::bounded)
          tj["bound"] = rep.growth.bound;
        tj["window_lo"] = rep.growth.window_lo;
        if (rep.certificate) {
          Json matches = Json::array();
          for (const PatternMatch& m : rep.certificate->matches)
            matches.push_back(Json{{"shape", m.shape}, {"word", m.word}});
          tj["certificate"] = Json{{"kind", rep.certificate->kind},
                                   {"matches", std::move(matches)},
                                   {"conclusion", rep.certificate->conclusion}};
        } else {
          tj["certificate"] = nullptr;
        }
        tj["pty_ge_2"] = confidence_name(rep.pty_ge_2);
        tj["pty_eq_3"] = confidence_name(rep.pty_eq_3);
        tj["isolated_singularity"] = rep.isolated_singularity;
        tj["gk_algebra"] = rep.gk_algebra;
        if (!rep.notes.empty()) tj["notes"] = rep.notes;
        tasks[task] = std::move(tj);
        human << "pertinency: growth " << growth_kind_name(rep.growth.kind)
              << "; certificate "
              << (rep.certificate ? rep.certificate->kind : "none")
              << "; Pty>=2 " << confidence_name(rep.pty_ge_2) << "; Pty=3 "
              << confidence_name(rep.pty_eq_3);
        if (rep.isolated_singularity) human << "; isolated singularity";
      } else if (task == "verify-identities") {
        Json arr = Json::array();
        bool all = true;
        for (std::size_t i = 0; i < id_polys.size(); ++i) {
          bool holds = verify_identity(pres, id_polys[i].first,
                                       id_polys[i].second);
          all = all && holds;
          arr.push_back(Json{{"lhs", cfg.identities[i].first},
                             {"rhs", cfg.identities[i].second},
                             {"holds", holds}});
        }
        tasks[task] = Json{{"checked", id_polys.size()},
                           {"all_hold", all},
                           {"results", std::move(arr)}};
        human << "verify-identities: " << id_polys.size() << " checked, "
              << (all ? "all hold" : "SOME FAIL");
      } else if (task == "memberships") {
        Json arr = Json::array();
        bool all = true;
        for (const std::string& s : cfg.memberships) {
          Word w = parse_word(s, pres.alphabet());
          Json e = Json{{"word", s}, {"degree", w.degree()}};
          if (w.degree() <= cfg.maxdeg) {
            NcPoly nf = normal_form(w, pres);
            bool in = nf.is_zero() ||
                      ideal().component(w.degree()).contains(nf);
            e["method"] = "linear_algebra";
            e["truncation"] = cfg.maxdeg;
            e["certified"] = in;
            all = all && in;
          } else {
            auto cover = suffix_cover_certificate(grading, w);
            e["method"] = cover ? "suffix_cover" : "none";
            e["certified"] = cover.has_value();
            if (cover) e["suffix_starts"] = cover->suffix_start;
            all = all && cover.has_value();
          }
          arr.push_back(std::move(e));
        }
        tasks[task] = Json{{"count", cfg.memberships.size()},
                           {"all_certified", all},
                           {"results", std::move(arr)}};
        human << "memberships: " << cfg.memberships.size() << " words, "
              << (all ? "all certified" : "NOT all certified");
      }
    } catch (const Error& e) {
      throw Error("task " + task + ": " + e.what());
    }
    human << " (" << tc.ms() << " ms)\n";
  }

  report["tasks"] = std::move(tasks);
  human << "total: " << total.ms() << " ms\n";
  return Report{std::move(report), human.str()};
}

// ---------------------------------------------------------------------------
// built-in examples

namespace {

struct CatalogItem {
  CatalogEntry entry;
  Json config;
};

Json series_json(std::size_t num_pow, std::vector<int> den_pows) {
  return Json{{"numerator", Json{{"one_minus_t_powers", Json::array({num_pow})}}},
              {"denominator", Json{{"one_minus_t_powers", den_pows}}}};
}

std::string repeat_block(const std::string& base, int pow) {
  return "(" + base + ")^" + std::to_string(pow);
}

// The three staged words of the five-rule chain: a degree-99 product of the
// commuting degree-4 factors with single letters inserted so that every group
// element appears as a suffix degree, and the two degree-99/100 monomials its
// normal form certifies.
std::vector<std::string> five_rule_membership_words() {
  const std::string V0 = "y*x^3", V1 = "x*y*x^2", V2 = "x^2*y*x",
                    V3 = "x^3*y";
  const std::string W0 = "y^2*x^2", W1 = "x*y^2*x", W2 = "x^2*y^2",
                    W3 = "y*x^2*y";
  std::string phi = repeat_block(V0, 3) + "*" + repeat_block(W3, 3) + "*y*" +
                    repeat_block(V3, 3) + "*" + repeat_block(W2, 3) + "*x*" +
                    repeat_block(V2, 3) + "*" + repeat_block(W1, 3) + "*x*" +
                    repeat_block(V1, 3) + "*" + repeat_block(W0, 3);
  std::string t1 = repeat_block(V0, 12) + "*y*x^2*" + repeat_block(W0, 12);
  std::string t2 = repeat_block(V0, 12) + "*" + repeat_block(W0, 13);
  return {phi, t1, t2};
}

std::vector<CatalogItem> build_catalog() {
  std::vector<CatalogItem> items;
  auto add = [&](std::string name, std::string summary, Json config) {
    config["name"] = name;
    // keep "name" first for readable files
    Json ordered = Json::object();
    ordered["name"] = name;
    for (const auto& item : config.items())
      if (item.key() != "name") ordered[item.key()] = item.value();
    items.push_back({{std::move(name), std::move(summary)}, std::move(ordered)});
  };

  Json du_klein_grading = Json{{"d", "a"}, {"u", "b"}};
  Json xy_grading_g = Json{{"x", "g"}, {"y", "g"}};

  add("downup-dihedral4",
      "down-up algebra (alpha 0, beta 1), two commuting reflections; "
      "covariants, series, pertinency",
      Json{{"algebra", Json{{"family", "downup"}, {"alpha", 0}, {"beta", 1}}},
           {"group", Json{{"kind", "dihedral"}, {"n", 2}}},
           {"grading", du_klein_grading},
           {"maxdeg", 8},
           {"tasks", Json::array({"validate", "hdet", "hilbert", "covariants",
                                  "pertinency"})},
           {"series", series_json(8, {2, 2, 4, 4})},
           {"expected",
            Json{{"generators", Json::array({"d^2", "u^2", "d*u*d*u",
                                             "u*d*u*d"})},
                 {"hilbert", Json::array({1, 0, 2, 0, 5, 0, 8, 0, 13})},
                 {"hdet_trivial", true},
                 {"pty_ge_2", "certified"}}}});

  add("downup-dihedral6",
      "down-up algebra (alpha 0, beta 1), dihedral group of order 6",
      Json{{"algebra", Json{{"family", "downup"}, {"alpha", 0}, {"beta", 1}}},
           {"group", Json{{"kind", "dihedral"}, {"n", 3}}},
           {"grading", du_klein_grading},
           {"maxdeg", 12},
           {"tasks", Json::array({"validate", "hdet", "hilbert", "covariants",
                                  "pertinency"})},
           {"series", series_json(12, {2, 2, 6, 6})},
           {"expected",
            Json{{"generators",
                  Json::array({"d^2", "u^2", "d*u*d*u*d*u", "u*d*u*d*u*d"})},
                 {"hdet_trivial", true},
                 {"pty_ge_2", "certified"}}}});

  add("downup-quaternion",
      "down-up algebra (alpha 0, beta 1), quaternion group; nine covariant "
      "generators",
      Json{{"algebra", Json{{"family", "downup"}, {"alpha", 0}, {"beta", 1}}},
           {"group", Json{{"kind", "quaternion"}}},
           {"grading", Json{{"d", "i"}, {"u", "k"}}},
           {"maxdeg", 8},
           {"tasks",
            Json::array({"validate", "hdet", "hilbert", "covariants"})},
           {"expected",
            Json{{"generators",
                  Json::array({"d^4", "u^4", "d^2*u^2", "d^3*u*d*u",
                               "d^2*u*d*u*d", "d*u*d*u^3", "u*d*u*d*u^2",
                               "d*u*d*u*d*u*d*u", "u*d*u*d*u*d*u*d"})},
                 {"hilbert", Json::array({1, 0, 0, 0, 3, 0, 4, 0, 7})},
                 {"hdet_trivial", true}}}});

  add("hyperbolic-dihedral4",
      "hyperbolic x,y algebra over two commuting reflections; generalized "
      "Weyl identities",
      Json{{"algebra", Json{{"family", "hyperbolic"}}},
           {"group", Json{{"kind", "dihedral"}, {"n", 2}}},
           {"grading", Json{{"x", "a"}, {"y", "b"}}},
           {"maxdeg", 16},
           {"tasks",
            Json::array({"validate", "hdet", "hilbert", "covariants",
                         "pertinency", "verify-identities"})},
           {"series", series_json(8, {2, 2, 4, 4})},
           {"identities",
            Json::array(
                {Json{{"lhs", "x^2*y^2"}, {"rhs", "y^2*x^2"}},
                 Json{{"lhs", "x^2*y - y*x^2"},
                      {"rhs", "2*y*(y^2 - x^2)"}},
                 Json{{"lhs", "y^2*(x*y)^2 - (x*y)^2*y^2"},
                      {"rhs", "4*(x*y)^2*(y^2 - x^2)"}},
                 Json{{"lhs", "(y*x)^2*x^2"},
                      {"rhs", "(x^2 + 4*(y^2 - x^2))*(y*x)^2"}},
                 Json{{"lhs", "(y*x)^2*y^2"},
                      {"rhs", "(y^2 + 4*(y^2 - x^2))*(y*x)^2"}},
                 Json{{"lhs", "(x*y)^2*x^2"},
                      {"rhs", "(x^2 - 4*(y^2 - x^2))*(x*y)^2"}},
                 Json{{"lhs", "(x*y)^2*y^2"},
                      {"rhs", "(y^2 - 4*(y^2 - x^2))*(x*y)^2"}},
                 Json{{"lhs", "(y*x)^2*(x*y)^2"},
                      {"rhs",
                       "y^2*(2*y^2 - x^2)*(3*y^2 - 2*x^2)*(4*y^2 - 3*x^2)"}},
                 Json{{"lhs", "(x*y)^2*(y*x)^2"},
                      {"rhs",
                       "x^2*(2*x^2 - y^2)*(3*x^2 - 2*y^2)*(4*x^2 - 3*y^2)"}}})},
           {"expected",
            Json{{"generators",
                  Json::array({"x^2", "y^2", "x*y*x*y", "y*x*y*x"})},
                 {"hdet_trivial", true}}}});

  add("xy-c2-fixed-y",
      "x,y form of the down-up algebra, order-2 group fixing y",
      Json{{"algebra", Json{{"family", "downup_xy"}, {"alpha", 3}}},
           {"group", Json{{"kind", "cyclic"}, {"n", 2}}},
           {"grading", Json{{"x", "g"}, {"y", "1"}}},
           {"maxdeg", 8},
           {"tasks", Json::array({"validate", "pertinency"})},
           {"expected", Json{{"pty_eq_3", "certified"},
                             {"isolated_singularity", true}}}});

  add("xy-klein",
      "x,y form, distinct commuting involutions on x and y",
      Json{{"algebra", Json{{"family", "downup_xy"}, {"alpha", 3}}},
           {"group",
            Json{{"kind", "product"},
                 {"factors", Json::array({Json{{"kind", "cyclic"}, {"n", 2}},
                                          Json{{"kind", "cyclic"}, {"n", 2}}})}}},
           {"grading", Json{{"x", "(g,1)"}, {"y", "(1,g)"}}},
           {"maxdeg", 8},
           {"tasks", Json::array({"validate", "pertinency"})},
           {"expected", Json{{"certificate", "bracket_word_pattern"},
                             {"pty_ge_2", "certified"}}}});

  add("xy-c2-diagonal",
      "x,y form, one involution acting as -1 on both generators",
      Json{{"algebra", Json{{"family", "downup_xy"}, {"alpha", 3}}},
           {"group", Json{{"kind", "cyclic"}, {"n", 2}}},
           {"grading", xy_grading_g},
           {"maxdeg", 8},
           {"tasks", Json::array({"validate", "pertinency"})},
           {"expected", Json{{"pty_eq_3", "certified"}}}});

  add("xy-c4-diagonal",
      "x,y form, order-4 generator acting as i on both generators",
      Json{{"algebra", Json{{"family", "downup_xy"}, {"alpha", 3}}},
           {"group", Json{{"kind", "cyclic"}, {"n", 4}}},
           {"grading", xy_grading_g},
           {"maxdeg", 8},
           {"tasks", Json::array({"validate", "pertinency"})},
           {"expected", Json{{"pty_eq_3", "certified"}}}});

  add("xy-c4-inverse",
      "x,y form, order-4 generator acting as i on x and -i on y",
      Json{{"algebra", Json{{"family", "downup_xy"}, {"alpha", 3}}},
           {"group", Json{{"kind", "cyclic"}, {"n", 4}}},
           {"grading", Json{{"x", "g"}, {"y", "g^3"}}},
           {"maxdeg", 8},
           {"tasks", Json::array({"validate", "pertinency"})},
           {"expected", Json{{"certificate", "pure_power_pattern"},
                             {"pty_ge_2", "certified"}}}});

  add("xy-c4xc2",
      "x,y form over an order-8 abelian group; finite-dimensional quotient "
      "and eight degree-7 memberships",
      Json{{"algebra", Json{{"family", "downup_xy"}, {"alpha", 3}}},
           {"group",
            Json{{"kind", "product"},
                 {"factors", Json::array({Json{{"kind", "cyclic"}, {"n", 4}},
                                          Json{{"kind", "cyclic"}, {"n", 2}}})}}},
           {"grading", Json{{"x", "(g,1)"}, {"y", "(g,g)"}}},
           {"maxdeg", 9},
           {"tasks", Json::array({"validate", "pertinency", "memberships"})},
           {"memberships",
            Json::array({"y^2*x*y^3*x", "x*y*x^3*y*x", "y*x^3*y*x^2",
                         "x^3*y*x^3", "x^2*y*x^3*y", "y*x*y^3*x*y",
                         "x*y^3*x*y^2", "y^3*x*y^3"})},
           {"expected",
            Json{{"dims", Json::array({1, 2, 4, 6, 9, 6, 4, 0, 0, 0})},
                 {"pty_eq_3", "certified"},
                 {"isolated_singularity", true},
                 {"memberships",
                  Json{{"y^2*x*y^3*x", true},
                       {"x*y*x^3*y*x", true},
                       {"y*x^3*y*x^2", true},
                       {"x^3*y*x^3", true},
                       {"x^2*y*x^3*y", true},
                       {"y*x*y^3*x*y", true},
                       {"x*y^3*x*y^2", true},
                       {"y^3*x*y^3", true}}}}}});

  add("five-rule-dihedral6",
      "five-rule cubic algebra; word-level suffix-cover certificates for "
      "three staged monomials",
      Json{{"algebra", Json{{"family", "five_rule"}}},
           {"group", Json{{"kind", "dihedral"}, {"n", 3}}},
           {"grading", Json{{"x", "a"}, {"y", "b"}}},
           {"maxdeg", 8},
           {"tasks", Json::array({"validate", "memberships"})},
           {"memberships", five_rule_membership_words()},
           {"expected",
            Json{{"memberships",
                  [] {
                    Json m = Json::object();
                    for (const std::string& w : five_rule_membership_words())
                      m[w] = true;
                    return m;
                  }()}}}});

  add("downup-neg-dihedral4",
      "down-up algebra (alpha 0, beta -1), two commuting reflections",
      Json{{"algebra", Json{{"family", "downup"}, {"alpha", 0}, {"beta", -1}}},
           {"group", Json{{"kind", "dihedral"}, {"n", 2}}},
           {"grading", du_klein_grading},
           {"maxdeg", 12},
           {"tasks", Json::array({"validate", "hdet", "pertinency"})},
           {"expected", Json{{"hdet_trivial", true},
                             {"pty_ge_2", "certified"}}}});

  add("skew-klein",
      "three-generator skew extension over two commuting reflections, z in "
      "the identity component",
      Json{{"algebra", Json{{"family", "skew"}}},
           {"group", Json{{"kind", "dihedral"}, {"n", 2}}},
           {"grading", Json{{"x", "a"}, {"y", "b"}, {"z", "1"}}},
           {"maxdeg", 10},
           {"tasks", Json::array({"validate", "pertinency"})},
           {"expected", Json{{"certificate", "skew_power_pattern"},
                             {"pty_ge_2", "certified"}}}});

  return items;
}

const std::vector<CatalogItem>& catalog() {
  static const std::vector<CatalogItem> items = build_catalog();
  return items;
}

}  // namespace

const std::vector<CatalogEntry>& list_examples() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> es;
    for (const CatalogItem& it : catalog()) es.push_back(it.entry);
    return es;
  }();
  return entries;
}

bool has_example(const std::string& name) {
  for (const CatalogItem& it : catalog())
    if (it.entry.name == name) return true;
  return false;
}

const Json& example_config(const std::string& name) {
  for (const CatalogItem& it : catalog())
    if (it.entry.name == name) return it.config;
  throw ConfigError("examples", "no built-in example named \"" + name + "\"");
}

// ---------------------------------------------------------------------------
// regression

namespace {

const Json* task_result(const Json& report, const std::string& task) {
  const Json& tasks = report.at("tasks");
  if (!tasks.contains(task)) return nullptr;
  return &tasks.at(task);
}

void diff_sequence(const Json& expected, const Json& computed,
                   const std::string& label,
                   std::vector<std::string>& diffs) {
  std::size_t n = std::min(expected.size(), computed.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (expected[i] != computed[i]) {
      std::ostringstream os;
      os << label << "[" << i << "]: expected " << expected[i].dump()
         << ", computed " << computed[i].dump();
      diffs.push_back(os.str());
      return;  // first mismatching degree only
    }
  }
  if (expected.size() > computed.size())
    diffs.push_back(label + ": expected " + std::to_string(expected.size()) +
                    " values, report has " + std::to_string(computed.size()));
}

}  // namespace

RegressionResult regression(const AnalysisConfig& cfg) {
  Report rep = run(cfg);
  const Json& exp = cfg.expected;
  RegressionResult rr;
  auto missing_task = [&](const std::string& key, const std::string& task) {
    rr.diffs.push_back("expected." + key + ": task \"" + task +
                       "\" not present in the report");
  };

  if (exp.contains("generators")) {
    const Json* t = task_result(rep.data, "covariants");
    if (!t) {
      missing_task("generators", "covariants");
    } else {
      std::set<std::string> want, got;
      for (const Json& w : exp.at("generators"))
        want.insert(w.get<std::string>());
      for (const Json& g : t->at("generators"))
        got.insert(g.at("word").get<std::string>());
      for (const std::string& w : want)
        if (!got.count(w))
          rr.diffs.push_back("generators: expected \"" + w + "\" not found");
      for (const std::string& w : got)
        if (!want.count(w))
          rr.diffs.push_back("generators: unexpected \"" + w + "\"");
    }
  }
  if (exp.contains("hilbert")) {
    const Json* t = task_result(rep.data, "hilbert");
    if (!t)
      missing_task("hilbert", "hilbert");
    else
      diff_sequence(exp.at("hilbert"), t->at("values"), "hilbert", rr.diffs);
  }
  if (exp.contains("dims")) {
    const Json* t = task_result(rep.data, "pertinency");
    if (!t)
      missing_task("dims", "pertinency");
    else
      diff_sequence(exp.at("dims"), t->at("dims"), "dims", rr.diffs);
  }
  if (exp.contains("certificate")) {
    const Json* t = task_result(rep.data, "pertinency");
    if (!t) {
      missing_task("certificate", "pertinency");
    } else {
      std::string got = t->at("certificate").is_null()
                            ? "none"
                            : t->at("certificate").at("kind").get<std::string>();
      std::string want = exp.at("certificate").get<std::string>();
      if (want != got)
        rr.diffs.push_back("certificate: expected kind \"" + want +
                           "\", computed \"" + got + "\"");
    }
  }
  if (exp.contains("growth")) {
    const Json* t = task_result(rep.data, "pertinency");
    if (!t) {
      missing_task("growth", "pertinency");
    } else if (exp.at("growth") != t->at("growth")) {
      rr.diffs.push_back("growth: expected " + exp.at("growth").dump() +
                         ", computed " + t->at("growth").dump());
    }
  }
  for (const char* key : {"pty_ge_2", "pty_eq_3", "isolated_singularity"}) {
    if (!exp.contains(key)) continue;
    const Json* t = task_result(rep.data, "pertinency");
    if (!t) {
      missing_task(key, "pertinency");
    } else if (exp.at(key) != t->at(key)) {
      rr.diffs.push_back(std::string(key) + ": expected " +
                         exp.at(key).dump() + ", computed " +
                         t->at(key).dump());
    }
  }
  if (exp.contains("hdet_trivial")) {
    const Json* t = task_result(rep.data, "hdet");
    if (!t) {
      missing_task("hdet_trivial", "hdet");
    } else if (exp.at("hdet_trivial") != t->at("trivial")) {
      rr.diffs.push_back("hdet_trivial: expected " +
                         exp.at("hdet_trivial").dump() + ", computed " +
                         t->at("trivial").dump());
    }
  }
  if (exp.contains("memberships")) {
    const Json* t = task_result(rep.data, "memberships");
    if (!t) {
      missing_task("memberships", "memberships");
    } else {
      std::map<std::string, bool> got;
      for (const Json& r : t->at("results"))
        got[r.at("word").get<std::string>()] = r.at("certified").get<bool>();
      for (const auto& item : exp.at("memberships").items()) {
        auto it = got.find(item.key());
        if (it == got.end())
          rr.diffs.push_back("memberships: \"" + item.key() +
                             "\" not checked by the report");
        else if (it->second != item.value().get<bool>())
          rr.diffs.push_back("memberships: \"" + item.key() + "\": expected " +
                             item.value().dump() + ", computed " +
                             (it->second ? "true" : "false"));
      }
    }
  }

  rr.pass = rr.diffs.empty();
  return rr;
}

int thread_cap() {
  const char* s = std::getenv("WORKBENCH_THREADS");
  if (!s || !*s) return 1;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || v < 1) return 1;
  return static_cast<int>(std::min(v, 64L));
}

}  // namespace wb
