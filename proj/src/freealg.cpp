#include "workbench/freealg.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>

namespace wb {

// ---------------------------------------------------------------------------
// Alphabet / Word

AlphabetPtr Alphabet::make(std::vector<std::string> letters) {
  if (letters.empty()) throw InvalidParams("alphabet must not be empty");
  if (letters.size() > 255) throw InvalidParams("alphabet too large");
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i].empty()) throw InvalidParams("empty generator name");
    for (std::size_t j = i + 1; j < letters.size(); ++j)
      if (letters[i] == letters[j])
        throw InvalidParams("duplicate generator name '" + letters[i] + "'");
  }
  auto a = std::shared_ptr<Alphabet>(new Alphabet());
  a->letters_ = std::move(letters);
  return AlphabetPtr(a);
}

std::optional<std::size_t> Alphabet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] == name) return i;
  return std::nullopt;
}

Word Word::operator*(const Word& o) const {
  Word r;
  r.idx.reserve(idx.size() + o.idx.size());
  r.idx.insert(r.idx.end(), idx.begin(), idx.end());
  r.idx.insert(r.idx.end(), o.idx.begin(), o.idx.end());
  return r;
}

Word Word::pow(std::size_t n) const {
  Word r;
  r.idx.reserve(idx.size() * n);
  for (std::size_t i = 0; i < n; ++i)
    r.idx.insert(r.idx.end(), idx.begin(), idx.end());
  return r;
}

Word Word::subword(std::size_t pos, std::size_t len) const {
  assert(pos + len <= idx.size());
  Word r;
  r.idx.assign(idx.begin() + pos, idx.begin() + pos + len);
  return r;
}

int deglex_compare(const Word& a, const Word& b) {
  if (a.idx.size() != b.idx.size())
    return a.idx.size() < b.idx.size() ? -1 : 1;
  if (a.idx < b.idx) return -1;
  if (b.idx < a.idx) return 1;
  return 0;
}

std::string word_to_string(const Word& w, const Alphabet& alpha) {
  if (w.empty()) return "1";
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < w.idx.size()) {
    std::size_t j = i;
    while (j < w.idx.size() && w.idx[j] == w.idx[i]) ++j;
    if (!first) out << "*";
    out << alpha.letter(w.idx[i]);
    if (j - i > 1) out << "^" << (j - i);
    first = false;
    i = j;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// NcPoly

NcPoly NcPoly::monomial(AlphabetPtr alpha, Word w, Scalar c) {
  NcPoly p(std::move(alpha));
  for (auto i : w.idx)
    if (i >= p.alpha_->size())
      throw AlphabetMismatch("word letter index outside alphabet");
  p.add_term(std::move(w), c);
  return p;
}

void NcPoly::check_same(const NcPoly& o) const {
  if (alpha_ == o.alpha_) return;
  if (alpha_ && o.alpha_ && alpha_->same_letters(*o.alpha_)) return;
  throw AlphabetMismatch("operands live over different alphabets");
}

std::size_t NcPoly::degree() const {
  if (terms_.empty()) return 0;
  return terms_.rbegin()->first.degree();
}

bool NcPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  std::size_t d = terms_.begin()->first.degree();
  return terms_.rbegin()->first.degree() == d;
}

bool NcPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.empty());
}

Scalar NcPoly::constant_coefficient() const {
  auto it = terms_.find(Word());
  return it == terms_.end() ? Scalar(0) : it->second;
}

const Word& NcPoly::leading_word() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading word");
  return terms_.rbegin()->first;
}

const Scalar& NcPoly::leading_coeff() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading coefficient");
  return terms_.rbegin()->second;
}

Scalar NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NcPoly NcPoly::operator-() const {
  NcPoly r(alpha_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
  check_same(o);
  NcPoly r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

NcPoly NcPoly::operator-(const NcPoly& o) const {
  check_same(o);
  NcPoly r = *this;
  for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
  return r;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
  check_same(o);
  NcPoly r(alpha_);
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : o.terms_) r.add_term(wa * wb, ca * cb);
  return r;
}

NcPoly NcPoly::scaled(const Scalar& c) const {
  NcPoly r(alpha_);
  if (c.is_zero()) return r;
  for (const auto& [w, k] : terms_) r.add_term(w, k * c);
  return r;
}

bool NcPoly::operator==(const NcPoly& o) const {
  check_same(o);
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return false;
    if (it->second != jt->second) return false;
  }
  return true;
}

std::string NcPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // highest terms first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Word& w = it->first;
    const Scalar& c = it->second;
    // Pull a sign out of single-term numerators so "- alpha*w" prints
    // naturally; multi-term coefficients keep their own signs inside parens.
    bool neg = false;
    Scalar mag = c;
    if (c.num().term_count() == 1 && c.num().leading_coeff() < 0) {
      neg = true;
      mag = -c;
    }
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    std::string cs = mag.to_string();
    bool wrap = mag.num().term_count() > 1;
    if (w.empty()) {
      out << (wrap ? "(" + cs + ")" : cs);
    } else if (mag.is_one()) {
      out << word_to_string(w, *alpha_);
    } else {
      out << (wrap ? "(" + cs + ")" : cs) << "*"
          << word_to_string(w, *alpha_);
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// substitute

NcPoly substitute(const NcPoly& p, const std::vector<NcPoly>& images) {
  if (images.size() != p.alphabet()->size())
    throw AlphabetMismatch("substitution needs one image per generator");
  for (std::size_t i = 1; i < images.size(); ++i)
    if (!images[0].alphabet()->same_letters(*images[i].alphabet()))
      throw AlphabetMismatch("substitution images over different alphabets");
  AlphabetPtr target = images.empty() ? p.alphabet() : images[0].alphabet();
  NcPoly out(target);
  for (const auto& [w, c] : p.terms()) {
    NcPoly prod = NcPoly::monomial(target, Word(), c);
    for (auto i : w.idx) prod = prod * images[i];
    out += prod;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Token {
  enum Kind { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
    std::size_t start = i_;
    if (i_ >= s_.size()) return {Token::End, "", start};
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j])))
        ++j;
      Token t{Token::Number, s_.substr(i_, j - i_), start};
      i_ = j;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      Token t{Token::Name, s_.substr(i_, j - i_), start};
      i_ = j;
      return t;
    }
    ++i_;
    switch (c) {
      case '+':
        return {Token::Plus, "+", start};
      case '-':
        return {Token::Minus, "-", start};
      case '*':
        return {Token::Star, "*", start};
      case '/':
        return {Token::Slash, "/", start};
      case '^':
        return {Token::Caret, "^", start};
      case '(':
        return {Token::LParen, "(", start};
      case ')':
        return {Token::RParen, ")", start};
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'",
                          start);
    }
  }

 private:
  const std::string& s_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  Parser(const std::string& text, AlphabetPtr alpha, ParamTablePtr params)
      : alpha_(std::move(alpha)), params_(std::move(params)), lex_(text) {
    advance();
  }

  NcPoly parse() {
    NcPoly p = expr();
    if (tok_.kind != Token::End)
      throw SyntaxError("trailing input after expression", tok_.pos);
    return p;
  }

 private:
  void advance() { tok_ = lex_.next(); }

  bool starts_factor() const {
    return tok_.kind == Token::Number || tok_.kind == Token::Name ||
           tok_.kind == Token::LParen;
  }

  NcPoly expr() {
    bool neg = false;
    if (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
      neg = tok_.kind == Token::Minus;
      advance();
    }
    NcPoly acc = term();
    if (neg) acc = -acc;
    while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
      bool minus = tok_.kind == Token::Minus;
      advance();
      NcPoly t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  NcPoly term() {
    NcPoly acc = factor();
    while (true) {
      if (tok_.kind == Token::Star) {
        advance();
        acc = acc * factor();
      } else if (tok_.kind == Token::Slash) {
        std::size_t at = tok_.pos;
        advance();
        NcPoly d = factor();
        if (!d.is_constant())
          throw SyntaxError("division by a non-scalar expression", at);
        Scalar s = d.constant_coefficient();
        if (s.is_zero()) throw DivisionByZero("division by zero in expression");
        acc = acc.scaled(s.inverse());
      } else if (starts_factor()) {
        acc = acc * factor();  // juxtaposition
      } else {
        break;
      }
    }
    return acc;
  }

  NcPoly factor() {
    NcPoly base = primary();
    if (tok_.kind == Token::Caret) {
      advance();
      if (tok_.kind != Token::Number)
        throw SyntaxError("exponent must be a natural number", tok_.pos);
      unsigned long e = std::stoul(tok_.text);
      advance();
      NcPoly acc = NcPoly::monomial(alpha_, Word(), Scalar(1));
      for (unsigned long i = 0; i < e; ++i) acc = acc * base;
      return acc;
    }
    return base;
  }

  NcPoly primary() {
    switch (tok_.kind) {
      case Token::Number: {
        mpq_class q(tok_.text);
        advance();
        return NcPoly::monomial(alpha_, Word(),
                                Scalar::from_rational(q, params_));
      }
      case Token::Name: {
        std::string name = tok_.text;
        std::size_t at = tok_.pos;
        advance();
        return resolve_name(name, at);
      }
      case Token::LParen: {
        advance();
        NcPoly p = expr();
        if (tok_.kind != Token::RParen)
          throw SyntaxError("expected ')'", tok_.pos);
        advance();
        return p;
      }
      default:
        throw SyntaxError("expected a number, name, or '('", tok_.pos);
    }
  }

  // Greedy longest-prefix resolution against generator and parameter names;
  // "dud" becomes d*u*d.
  NcPoly resolve_name(const std::string& name, std::size_t at) {
    NcPoly acc = NcPoly::monomial(alpha_, Word(), Scalar(1));
    std::size_t i = 0;
    while (i < name.size()) {
      std::size_t best = 0;
      bool is_letter = false;
      std::size_t idx = 0;
      for (std::size_t len = name.size() - i; len >= 1; --len) {
        std::string pre = name.substr(i, len);
        if (auto li = alpha_->index_of(pre)) {
          best = len;
          is_letter = true;
          idx = *li;
          break;
        }
        if (auto pi = params_->index_of(pre)) {
          best = len;
          is_letter = false;
          idx = *pi;
          break;
        }
      }
      if (best == 0)
        throw UnknownSymbol("unknown symbol '" + name.substr(i) +
                            "' at position " + std::to_string(at + i));
      if (is_letter) {
        Word w;
        w.idx.push_back(static_cast<std::uint8_t>(idx));
        acc = acc * NcPoly::monomial(alpha_, w);
      } else {
        acc = acc.scaled(Scalar::parameter(params_, idx));
      }
      i += best;
    }
    return acc;
  }

  AlphabetPtr alpha_;
  ParamTablePtr params_;
  Lexer lex_;
  Token tok_;
};

}  // namespace

NcPoly parse_poly(const std::string& text, AlphabetPtr alpha,
                  ParamTablePtr params) {
  return Parser(text, std::move(alpha), std::move(params)).parse();
}

Word parse_word(const std::string& text, AlphabetPtr alpha) {
  NcPoly p = parse_poly(text, alpha, ParamTable::rationals());
  if (p.term_count() != 1 || !p.leading_coeff().is_one())
    throw SyntaxError("expected a single monomial with coefficient 1", 0);
  return p.leading_word();
}

}  // namespace wb
