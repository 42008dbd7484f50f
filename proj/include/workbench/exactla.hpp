#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "workbench/freealg.hpp"

namespace wb {

// Ordered list of basis words for one graded component, deglex descending, so
// column 0 holds the greatest word and a row's first nonzero column is its
// leading word.
class ColumnSpace {
 public:
  static std::shared_ptr<const ColumnSpace> make(AlphabetPtr alpha,
                                                 std::vector<Word> words);
  const AlphabetPtr& alphabet() const { return alpha_; }
  const std::vector<Word>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  std::size_t index_of(const Word& w) const;  // throws WordOutsideAmbient
  bool same_columns(const ColumnSpace& o) const;

 private:
  ColumnSpace() = default;
  AlphabetPtr alpha_;
  std::vector<Word> words_;
  std::map<Word, std::size_t, DeglexLess> index_;
};

using ColumnSpacePtr = std::shared_ptr<const ColumnSpace>;

// sparse row: column index -> nonzero coefficient; begin() is the pivot
using SparseRow = std::map<std::size_t, Scalar>;

SparseRow to_row(const NcPoly& p, const ColumnSpace& cols);
NcPoly from_row(const SparseRow& r, const ColumnSpace& cols);

// Row-reduced echelon span over the Scalar field. Rows are kept fully
// reduced: pivot coefficient 1, pivot column eliminated from every other row.
class SpanBasis {
 public:
  explicit SpanBasis(ColumnSpacePtr cols) : cols_(std::move(cols)) {}

  const ColumnSpacePtr& columns() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  // Returns true when the vector enlarged the span.
  bool insert(SparseRow v);
  bool insert(const NcPoly& p);

  bool contains(const SparseRow& v) const;
  bool contains(const NcPoly& p) const;
  // Coefficients of v along the stored rows (keyed by pivot column), or
  // nullopt when v lies outside the span.
  std::optional<std::map<std::size_t, Scalar>> coordinates(SparseRow v) const;

  // Pivot columns in increasing order (= leading words, deglex descending).
  std::vector<std::size_t> pivot_columns() const;
  std::vector<Word> pivot_words() const;
  const std::map<std::size_t, SparseRow>& rows() const { return rows_; }
  NcPoly row_poly(std::size_t pivot_col) const;

  bool same_span(const SpanBasis& o) const;

 private:
  void check_cols(const ColumnSpace& o) const;
  ColumnSpacePtr cols_;
  std::map<std::size_t, SparseRow> rows_;  // pivot column -> row
};

// U ∩ W via the Zassenhaus doubling trick.
SpanBasis intersect(const SpanBasis& u, const SpanBasis& w);
SpanBasis intersect_all(const std::vector<SpanBasis>& spans);

}  // namespace wb
