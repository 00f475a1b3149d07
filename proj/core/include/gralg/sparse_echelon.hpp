#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "gralg/rational.hpp"

namespace gralg {

using Column = std::uint32_t;

/// Sparse rational vector with strictly increasing columns and no zero entries.
using SparseVector = std::vector<std::pair<Column, Rational>>;

/// Incremental row-echelon basis over Q with fraction-free integer storage.
///
/// Rows are kept as primitive integer vectors whose first (pivot) entry is
/// positive. Every row is zero on columns to the left of its pivot, so reducing a
/// vector in increasing column order clears all pivot columns; what remains is
/// the unique representative supported on the non-pivot columns.
class SparseEchelon {
 public:
  explicit SparseEchelon(std::size_t columns = 0);

  std::size_t columns() const { return pivot_row_.size(); }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(Column c) const { return pivot_row_.at(c) >= 0; }

  /// Adds v to the span. Returns false when v was already in it.
  bool insert(const SparseVector& v);
  /// The representative of v modulo the span, supported on non-pivot columns.
  SparseVector reduce(const SparseVector& v) const;

  /// Fully reduced row-echelon basis (pivot entries 1), sorted by pivot column.
  std::vector<SparseVector> reduced_basis() const;

 private:
  struct IntRow {
    std::vector<Column> cols;
    std::vector<BigInt> vals;
  };

  // Integer accumulator: value = entries / denominator.
  struct Accumulator;

  void eliminate(Accumulator& acc) const;

  std::vector<IntRow> rows_;
  std::vector<std::int32_t> pivot_row_;
};

}  // namespace gralg
