#include "workbench/scalar.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace wb {

// ---------------------------------------------------------------------------
// ParamTable

ParamTablePtr ParamTable::rationals() {
  static ParamTablePtr empty = [] {
    auto t = std::shared_ptr<ParamTable>(new ParamTable());
    return ParamTablePtr(t);
  }();
  return empty;
}

ParamTablePtr ParamTable::make(std::vector<std::string> names,
                               std::optional<AlgebraicRelation> relation) {
  auto t = std::shared_ptr<ParamTable>(new ParamTable());
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw InvalidParams("duplicate parameter name '" + names[i] + "'");
  if (relation) {
    if (relation->param >= names.size())
      throw InvalidParams("algebraic relation names an undeclared parameter");
    if (relation->lower.empty())
      throw InvalidParams("algebraic relation must have degree >= 1");
  }
  t->names_ = std::move(names);
  t->relation_ = std::move(relation);
  return ParamTablePtr(t);
}

std::optional<std::size_t> ParamTable::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool ParamTable::same_declarations(const ParamTable& other) const {
  if (names_ != other.names_) return false;
  if (relation_.has_value() != other.relation_.has_value()) return false;
  if (relation_ && (relation_->param != other.relation_->param ||
                    relation_->lower != other.relation_->lower))
    return false;
  return true;
}

// ---------------------------------------------------------------------------
// MPoly

namespace {

// total degree descending, then lex descending; used for canonical printing
// and the leading term.
bool canon_before(const Expvec& a, const Expvec& b) {
  std::uint64_t da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da > db;
  return a > b;
}

}  // namespace

MPoly MPoly::constant(std::size_t nvars, const mpq_class& c) {
  MPoly p(nvars);
  if (c != 0) p.terms_[Expvec(nvars, 0)] = c;
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t index) {
  assert(index < nvars);
  MPoly p(nvars);
  Expvec e(nvars, 0);
  e[index] = 1;
  p.terms_[e] = 1;
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Expvec& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

mpq_class MPoly::constant_value() const {
  if (terms_.empty()) return 0;
  assert(is_constant());
  return terms_.begin()->second;
}

bool MPoly::uses_var(std::size_t index) const {
  for (const auto& [e, c] : terms_)
    if (e[index] > 0) return true;
  return false;
}

std::uint32_t MPoly::degree_in(std::size_t index) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[index]);
  return d;
}

void MPoly::add_term(const Expvec& e, const mpq_class& c) {
  assert(e.size() == nvars_);
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  assert(nvars_ == o.nvars_);
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  assert(nvars_ == o.nvars_);
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  assert(nvars_ == o.nvars_);
  MPoly r(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Expvec e(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

const mpq_class& MPoly::leading_coeff() const {
  assert(!terms_.empty());
  const std::pair<const Expvec, mpq_class>* best = nullptr;
  for (const auto& t : terms_)
    if (!best || canon_before(t.first, best->first)) best = &t;
  return best->second;
}

MPoly MPoly::div_exact(const MPoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (divisor.is_constant()) {
    MPoly r(nvars_);
    mpq_class inv = 1 / divisor.constant_value();
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * inv);
    return r;
  }
  // Repeatedly cancel the canonical leading term. Exactness is a precondition.
  MPoly rem = *this;
  MPoly quot(nvars_);
  auto leading = [](const MPoly& p) {
    const std::pair<const Expvec, mpq_class>* best = nullptr;
    for (const auto& t : p.terms_)
      if (!best || canon_before(t.first, best->first)) best = &t;
    return best;
  };
  const auto* dlead = leading(divisor);
  while (!rem.is_zero()) {
    const auto* rlead = leading(rem);
    Expvec q(nvars_);
    bool divisible = true;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (rlead->first[i] < dlead->first[i]) {
        divisible = false;
        break;
      }
      q[i] = rlead->first[i] - dlead->first[i];
    }
    if (!divisible) throw Error("non-exact polynomial division");
    mpq_class qc = rlead->second / dlead->second;
    quot.add_term(q, qc);
    MPoly mono(nvars_);
    mono.terms_.emplace(q, qc);
    rem = rem - mono * divisor;
  }
  return quot;
}

mpq_class MPoly::evaluate(const std::vector<mpq_class>& point) const {
  assert(point.size() == nvars_);
  mpq_class total = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class v = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::uint32_t k = 0; k < e[i]; ++k) v *= point[i];
    total += v;
  }
  return total;
}

MPoly MPoly::widened(std::size_t nvars) const {
  assert(nvars >= nvars_);
  MPoly r(nvars);
  for (const auto& [e, c] : terms_) {
    Expvec w(nvars, 0);
    std::copy(e.begin(), e.end(), w.begin());
    r.terms_.emplace(std::move(w), c);
  }
  return r;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Expvec, mpq_class>*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return canon_before(a->first, b->first); });
  std::ostringstream out;
  bool first = true;
  for (const auto* t : order) {
    mpq_class c = t->second;
    bool neg = c < 0;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    mpq_class mag = abs(c);
    std::string vars;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t->first[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += names[i];
      if (t->first[i] > 1) vars += "^" + std::to_string(t->first[i]);
    }
    if (vars.empty()) {
      out << mag.get_str();
    } else if (mag == 1) {
      out << vars;
    } else {
      out << mag.get_str() << "*" << vars;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Multivariate gcd: primitive Euclidean recursion on the highest variable in
// use. Polynomials here are tiny (few parameters, low degree), so no attempt
// at modular methods.

namespace {

int top_var(const MPoly& p) {
  for (int i = static_cast<int>(p.nvars()) - 1; i >= 0; --i)
    if (p.uses_var(static_cast<std::size_t>(i))) return i;
  return -1;
}

// View p as a univariate polynomial in variable v with MPoly coefficients.
std::vector<MPoly> coeffs_in(const MPoly& p, std::size_t v) {
  std::vector<MPoly> out(p.degree_in(v) + 1, MPoly(p.nvars()));
  for (const auto& [e, c] : p.terms()) {
    Expvec rest = e;
    std::uint32_t k = rest[v];
    rest[v] = 0;
    out[k].add_term(rest, c);
  }
  return out;
}

MPoly assemble(const std::vector<MPoly>& cs, std::size_t v, std::size_t nvars) {
  MPoly r(nvars);
  for (std::size_t k = 0; k < cs.size(); ++k) {
    for (const auto& [e, c] : cs[k].terms()) {
      Expvec w = e;
      w[v] += static_cast<std::uint32_t>(k);
      r.add_term(w, c);
    }
  }
  return r;
}

int deg_of(const std::vector<MPoly>& cs) {
  for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i)
    if (!cs[i].is_zero()) return i;
  return -1;
}

MPoly content_of(const std::vector<MPoly>& cs) {
  MPoly g;
  bool init = false;
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    if (!init) {
      g = c;
      init = true;
    } else {
      g = gcd(g, c);
    }
  }
  return g;
}

// Pseudo-remainder of a by b (univariate views in the same variable).
std::vector<MPoly> prem(std::vector<MPoly> a, const std::vector<MPoly>& b,
                        std::size_t nvars) {
  int da = deg_of(a), db = deg_of(b);
  assert(db >= 0);
  const MPoly& lb = b[db];
  while (da >= db && da >= 0) {
    MPoly la = a[da];
    for (int i = 0; i <= da; ++i) a[i] = a[i] * lb;
    for (int i = 0; i <= db; ++i)
      a[da - db + i] = a[da - db + i] - la * b[i];
    a[da] = MPoly(nvars);
    da = deg_of(a);
  }
  a.resize(da + 1, MPoly(nvars));
  return a;
}

MPoly normalize_leading(MPoly p) {
  if (p.is_zero()) return p;
  return p.div_exact(MPoly::constant(p.nvars(), p.leading_coeff()));
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return normalize_leading(b);
  if (b.is_zero()) return normalize_leading(a);
  int va = top_var(a), vb = top_var(b);
  if (va < 0 && vb < 0) return MPoly::constant(a.nvars(), 1);
  std::size_t v = static_cast<std::size_t>(std::max(va, vb));
  std::size_t nvars = a.nvars();

  auto ca = coeffs_in(a, v);
  auto cb = coeffs_in(b, v);
  MPoly cont_a = content_of(ca);
  MPoly cont_b = content_of(cb);
  MPoly cont = gcd(cont_a, cont_b);

  auto divall = [&](std::vector<MPoly>& cs, const MPoly& d) {
    for (auto& c : cs)
      if (!c.is_zero()) c = c.div_exact(d);
  };
  divall(ca, cont_a);
  divall(cb, cont_b);

  // Primitive PRS.
  std::vector<MPoly>*pa = &ca, *pb = &cb;
  if (deg_of(*pa) < deg_of(*pb)) std::swap(pa, pb);
  std::vector<MPoly> r;
  while (true) {
    r = prem(*pa, *pb, nvars);
    if (deg_of(r) < 0) {
      // pb divides pa; gcd of primitive parts is pp(pb).
      MPoly g = assemble(*pb, v, nvars);
      MPoly gc = content_of(*pb);
      g = g.div_exact(gc);
      return normalize_leading(cont * g);
    }
    if (deg_of(r) == 0) return normalize_leading(cont);
    MPoly rc = content_of(r);
    divall(r, rc);
    *pa = std::move(*pb);
    *pb = std::move(r);
  }
}

// ---------------------------------------------------------------------------
// Scalar

namespace {

// Reduces powers of the algebraic parameter below the relation degree.
MPoly reduce_algebraic(MPoly p, const ParamTable& table) {
  const auto& rel = table.relation();
  if (!rel) return p;
  std::size_t v = rel->param;
  std::uint32_t k = static_cast<std::uint32_t>(rel->degree());
  while (p.degree_in(v) >= k) {
    MPoly next(p.nvars());
    for (const auto& [e, c] : p.terms()) {
      if (e[v] < k) {
        next.add_term(e, c);
        continue;
      }
      // p^e = p^(e-k) * (-sum lower[i] p^i)
      for (std::size_t i = 0; i < rel->lower.size(); ++i) {
        if (rel->lower[i] == 0) continue;
        Expvec w = e;
        w[v] = e[v] - k + static_cast<std::uint32_t>(i);
        next.add_term(w, -rel->lower[i] * c);
      }
    }
    p = std::move(next);
  }
  return p;
}

MPoly det_mpoly(std::vector<std::vector<MPoly>> m, std::size_t nvars);

MPoly minor_det(const std::vector<std::vector<MPoly>>& m, std::size_t skip_row,
                std::size_t skip_col, std::size_t nvars) {
  std::vector<std::vector<MPoly>> sub;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == skip_row) continue;
    std::vector<MPoly> row;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j == skip_col) continue;
      row.push_back(m[i][j]);
    }
    sub.push_back(std::move(row));
  }
  return det_mpoly(std::move(sub), nvars);
}

MPoly det_mpoly(std::vector<std::vector<MPoly>> m, std::size_t nvars) {
  std::size_t n = m.size();
  if (n == 0) return MPoly::constant(nvars, 1);
  if (n == 1) return m[0][0];
  MPoly total(nvars);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    MPoly cof = minor_det(m, 0, j, nvars);
    MPoly term = m[0][j] * cof;
    if (j % 2 == 1) term = -term;
    total = total + term;
  }
  return total;
}

}  // namespace

Scalar::Scalar() : table_(ParamTable::rationals()), num_(0), den_(MPoly::constant(0, 1)) {}

Scalar::Scalar(int n)
    : table_(ParamTable::rationals()),
      num_(MPoly::constant(0, n)),
      den_(MPoly::constant(0, 1)) {}

Scalar::Scalar(const mpq_class& q)
    : table_(ParamTable::rationals()),
      num_(MPoly::constant(0, q)),
      den_(MPoly::constant(0, 1)) {}

Scalar::Scalar(long num, long den)
    : Scalar(mpq_class(num, den)) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
}

Scalar Scalar::from_rational(const mpq_class& q, ParamTablePtr table) {
  Scalar s;
  s.table_ = std::move(table);
  s.num_ = MPoly::constant(s.table_->size(), q);
  s.den_ = MPoly::constant(s.table_->size(), 1);
  return s;
}

Scalar Scalar::parameter(ParamTablePtr table, std::size_t index) {
  if (index >= table->size()) throw InvalidParams("parameter index out of range");
  Scalar s;
  s.table_ = std::move(table);
  s.num_ = MPoly::variable(s.table_->size(), index);
  s.den_ = MPoly::constant(s.table_->size(), 1);
  return s;
}

Scalar Scalar::parameter(ParamTablePtr table, const std::string& name) {
  auto idx = table->index_of(name);
  if (!idx) throw InvalidParams("unknown parameter '" + name + "'");
  return parameter(std::move(table), *idx);
}

Scalar Scalar::from_parts(MPoly num, MPoly den, ParamTablePtr table) {
  if (den.is_zero()) throw DivisionByZero("scalar with zero denominator");
  Scalar s;
  s.table_ = std::move(table);
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  if (s.table_->relation() && s.den_.uses_var(s.table_->relation()->param)) {
    // Rationalize through the field structure: reuse operator/.
    Scalar n = s;
    n.den_ = MPoly::constant(s.table_->size(), 1);
    n.num_ = s.num_;
    n.canonicalize();
    Scalar d = s;
    d.den_ = MPoly::constant(s.table_->size(), 1);
    d.num_ = s.den_;
    d.canonicalize();
    return n / d;
  }
  s.canonicalize();
  return s;
}

bool Scalar::is_one() const {
  return num_ == den_;
}

bool Scalar::is_rational() const {
  return num_.is_constant() && den_.is_constant();
}

mpq_class Scalar::rational_value() const {
  assert(is_rational());
  return num_.constant_value() / den_.constant_value();
}

void Scalar::canonicalize() {
  num_ = reduce_algebraic(std::move(num_), *table_);
  den_ = reduce_algebraic(std::move(den_), *table_);
  if (den_.is_zero()) throw DivisionByZero("scalar with zero denominator");
  if (num_.is_zero()) {
    den_ = MPoly::constant(table_->size(), 1);
    return;
  }
  MPoly g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = num_.div_exact(g);
    den_ = den_.div_exact(g);
  }
  mpq_class lc = den_.leading_coeff();
  if (lc != 1) {
    MPoly c = MPoly::constant(table_->size(), lc);
    num_ = num_.div_exact(c);
    den_ = den_.div_exact(c);
  }
}

namespace {

// Picks the common table for a binary operation, widening plain rationals.
void unify(const Scalar& a, const Scalar& b, ParamTablePtr& table, MPoly& an,
           MPoly& ad, MPoly& bn, MPoly& bd) {
  if (a.table() == b.table() || a.table()->same_declarations(*b.table())) {
    table = a.table();
    an = a.num();
    ad = a.den();
    bn = b.num();
    bd = b.den();
    return;
  }
  if (a.table()->size() == 0) {
    table = b.table();
    an = a.num().widened(table->size());
    ad = a.den().widened(table->size());
    bn = b.num();
    bd = b.den();
    return;
  }
  if (b.table()->size() == 0) {
    table = a.table();
    an = a.num();
    ad = a.den();
    bn = b.num().widened(table->size());
    bd = b.den().widened(table->size());
    return;
  }
  throw MixedAlgebraicRelations(
      "scalars declared under different parameter tables");
}

}  // namespace

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  ParamTablePtr t;
  MPoly an, ad, bn, bd;
  unify(*this, o, t, an, ad, bn, bd);
  Scalar r;
  r.table_ = t;
  r.num_ = an * bd + bn * ad;
  r.den_ = ad * bd;
  r.canonicalize();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  ParamTablePtr t;
  MPoly an, ad, bn, bd;
  unify(*this, o, t, an, ad, bn, bd);
  Scalar r;
  r.table_ = t;
  r.num_ = an * bn;
  r.den_ = ad * bd;
  r.canonicalize();
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw DivisionByZero("scalar division by zero");
  ParamTablePtr t;
  MPoly an, ad, bn, bd;
  unify(*this, o, t, an, ad, bn, bd);
  Scalar r;
  r.table_ = t;
  const auto& rel = t->relation();
  if (rel && bn.uses_var(rel->param)) {
    // Denominator involves the algebraic parameter p with p^k = -(lower
    // terms). Invert bn modulo the relation via the adjugate of the
    // multiplication-by-bn matrix on the basis 1, p, ..., p^{k-1}: bn * u =
    // det, with det free of p.
    std::size_t k = rel->degree();
    std::size_t v = rel->param;
    std::size_t nv = t->size();
    std::vector<std::vector<MPoly>> m(k, std::vector<MPoly>(k, MPoly(nv)));
    MPoly power = MPoly::constant(nv, 1);
    for (std::size_t j = 0; j < k; ++j) {
      MPoly col = reduce_algebraic(bn * power, *t);
      auto cs = coeffs_in(col, v);
      for (std::size_t i = 0; i < k && i < cs.size(); ++i) m[i][j] = cs[i];
      power = power * MPoly::variable(nv, v);
    }
    MPoly det = det_mpoly(m, nv);
    if (det.is_zero())
      throw DivisionByZero(
          "denominator is a zero divisor modulo the algebraic relation");
    MPoly u(nv);
    MPoly pw = MPoly::constant(nv, 1);
    for (std::size_t i = 0; i < k; ++i) {
      MPoly cof = minor_det(m, 0, i, nv);
      if (i % 2 == 1) cof = -cof;
      u = u + cof * pw;
      pw = pw * MPoly::variable(nv, v);
    }
    r.num_ = reduce_algebraic(an * bd * u, *t);
    r.den_ = ad * det;
  } else {
    r.num_ = an * bd;
    r.den_ = ad * bn;
  }
  r.canonicalize();
  return r;
}

Scalar Scalar::inverse() const {
  Scalar one(1);
  return one / *this;
}

bool Scalar::operator==(const Scalar& o) const {
  return (*this - o).is_zero();
}

mpq_class Scalar::specialize(const std::vector<mpq_class>& point) const {
  if (point.size() != table_->size())
    throw InvalidParams("specialization point has wrong arity");
  const auto& rel = table_->relation();
  if (rel) {
    mpq_class v = point[rel->param];
    mpq_class acc = 1, total = 0;
    for (const auto& c : rel->lower) {
      total += c * acc;
      acc *= v;
    }
    total += acc;  // monic top term
    if (total != 0)
      throw InvalidParams(
          "specialization point does not satisfy the algebraic relation");
  }
  mpq_class d = den_.evaluate(point);
  if (d == 0)
    throw DenominatorVanishes("denominator vanishes at specialization point");
  return num_.evaluate(point) / d;
}

std::string Scalar::to_string() const {
  std::string n = num_.to_string(table_->names());
  if (den_.is_constant() && den_.constant_value() == 1) return n;
  std::string d = den_.to_string(table_->names());
  auto wrap = [](const std::string& s, std::size_t nterms) {
    return nterms > 1 ? "(" + s + ")" : s;
  };
  return wrap(n, num_.term_count()) + "/" + wrap(d, den_.term_count());
}

}  // namespace wb
