#include "workbench/exactla.hpp"

#include <algorithm>

namespace wb {

ColumnSpacePtr ColumnSpace::make(AlphabetPtr alpha, std::vector<Word> words) {
  auto c = std::shared_ptr<ColumnSpace>(new ColumnSpace());
  std::sort(words.begin(), words.end(),
            [](const Word& a, const Word& b) { return deglex_compare(a, b) > 0; });
  words.erase(std::unique(words.begin(), words.end()), words.end());
  c->alpha_ = std::move(alpha);
  c->words_ = std::move(words);
  for (std::size_t i = 0; i < c->words_.size(); ++i)
    c->index_.emplace(c->words_[i], i);
  return ColumnSpacePtr(c);
}

std::size_t ColumnSpace::index_of(const Word& w) const {
  auto it = index_.find(w);
  if (it == index_.end())
    throw WordOutsideAmbient("word " + word_to_string(w, *alpha_) +
                             " is not a basis word of this component");
  return it->second;
}

bool ColumnSpace::same_columns(const ColumnSpace& o) const {
  return words_ == o.words_ && alpha_->same_letters(*o.alpha_);
}

SparseRow to_row(const NcPoly& p, const ColumnSpace& cols) {
  SparseRow r;
  for (const auto& [w, c] : p.terms()) r.emplace(cols.index_of(w), c);
  return r;
}

NcPoly from_row(const SparseRow& r, const ColumnSpace& cols) {
  NcPoly p(cols.alphabet());
  for (const auto& [i, c] : r) p.add_term(cols.words()[i], c);
  return p;
}

namespace {

// v -= c * row; c is taken by value because callers pass coefficients that
// live inside v or row and get erased mid-loop.
void axpy(SparseRow& v, Scalar c, const SparseRow& row) {
  if (c.is_zero()) return;
  for (const auto& [col, rc] : row) {
    auto it = v.find(col);
    if (it == v.end()) {
      Scalar nc = -(c * rc);
      if (!nc.is_zero()) v.emplace(col, std::move(nc));
    } else {
      it->second -= c * rc;
      if (it->second.is_zero()) v.erase(it);
    }
  }
}

void scale(SparseRow& v, const Scalar& c) {
  for (auto& [col, vc] : v) vc *= c;
}

}  // namespace

void SpanBasis::check_cols(const ColumnSpace& o) const {
  if (!cols_->same_columns(o))
    throw AmbientMismatch("spans live in different components");
}

bool SpanBasis::insert(SparseRow v) {
  // forward-reduce
  while (!v.empty()) {
    std::size_t lead = v.begin()->first;
    auto it = rows_.find(lead);
    if (it == rows_.end()) break;
    axpy(v, v.begin()->second, it->second);
  }
  if (v.empty()) return false;
  scale(v, v.begin()->second.inverse());
  std::size_t pivot = v.begin()->first;
  // eliminate the new pivot column from existing rows
  for (auto& [p, row] : rows_) {
    auto it = row.find(pivot);
    if (it != row.end()) axpy(row, it->second, v);
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

bool SpanBasis::insert(const NcPoly& p) { return insert(to_row(p, *cols_)); }

bool SpanBasis::contains(const SparseRow& v) const {
  SparseRow w = v;
  while (!w.empty()) {
    auto it = rows_.find(w.begin()->first);
    if (it == rows_.end()) return false;
    axpy(w, w.begin()->second, it->second);
  }
  return true;
}

bool SpanBasis::contains(const NcPoly& p) const {
  return contains(to_row(p, *cols_));
}

std::optional<std::map<std::size_t, Scalar>> SpanBasis::coordinates(
    SparseRow v) const {
  std::map<std::size_t, Scalar> coords;
  while (!v.empty()) {
    std::size_t lead = v.begin()->first;
    auto it = rows_.find(lead);
    if (it == rows_.end()) return std::nullopt;
    Scalar c = v.begin()->second;
    coords.emplace(lead, c);
    axpy(v, c, it->second);
  }
  return coords;
}

std::vector<std::size_t> SpanBasis::pivot_columns() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(p);
  return out;
}

std::vector<Word> SpanBasis::pivot_words() const {
  std::vector<Word> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(cols_->words()[p]);
  return out;
}

NcPoly SpanBasis::row_poly(std::size_t pivot_col) const {
  auto it = rows_.find(pivot_col);
  if (it == rows_.end()) throw Error("no row with that pivot column");
  return from_row(it->second, *cols_);
}

bool SpanBasis::same_span(const SpanBasis& o) const {
  check_cols(*o.cols_);
  if (rank() != o.rank()) return false;
  for (const auto& [p, row] : rows_)
    if (!o.contains(row)) return false;
  return true;
}

SpanBasis intersect(const SpanBasis& u, const SpanBasis& w) {
  if (!u.columns()->same_columns(*w.columns()))
    throw AmbientMismatch("intersecting spans from different components");
  std::size_t m = u.columns()->size();

  // Zassenhaus: rows [x|x] for x in U and [y|0] for y in W; after reduction,
  // rows with empty left half carry a basis of U ∩ W in the right half.
  std::map<std::size_t, SparseRow> rows;  // generic RREF over 2m columns
  auto insert_row = [&](SparseRow v) {
    while (!v.empty()) {
      auto it = rows.find(v.begin()->first);
      if (it == rows.end()) break;
      axpy(v, v.begin()->second, it->second);
    }
    if (v.empty()) return;
    scale(v, v.begin()->second.inverse());
    std::size_t pivot = v.begin()->first;
    for (auto& [p, row] : rows) {
      auto it = row.find(pivot);
      if (it != row.end()) axpy(row, it->second, v);
    }
    rows.emplace(pivot, std::move(v));
  };

  for (const auto& [p, row] : u.rows()) {
    SparseRow v;
    for (const auto& [col, c] : row) {
      v.emplace(col, c);
      v.emplace(col + m, c);
    }
    insert_row(std::move(v));
  }
  for (const auto& [p, row] : w.rows()) insert_row(row);

  SpanBasis out(u.columns());
  for (const auto& [p, row] : rows) {
    if (p < m) continue;  // left half nonzero
    SparseRow v;
    for (const auto& [col, c] : row) v.emplace(col - m, c);
    out.insert(std::move(v));
  }
  return out;
}

SpanBasis intersect_all(const std::vector<SpanBasis>& spans) {
  if (spans.empty()) throw InvalidParams("intersect_all needs at least one span");
  SpanBasis acc = spans[0];
  for (std::size_t i = 1; i < spans.size(); ++i) acc = intersect(acc, spans[i]);
  return acc;
}

}  // namespace wb
