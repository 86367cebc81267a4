#pragma once

#include "gcdlab/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace gcdlab {

/// Row space of sparse vectors over Q kept in echelon form.
///
/// Pivots are chosen by a column priority: a new row pivots on its first
/// nonzero column in priority order. reduce() eliminates every pivot column,
/// so the residual of v lives on non-pivot columns and v - residual lies in
/// the space.
class RowSpace {
public:
    using Vector = std::map<std::size_t, Rational>;

    explicit RowSpace(std::size_t dim);
    /// priority[k] is the column that gets the k-th highest pivot priority;
    /// must be a permutation of 0..dim-1.
    RowSpace(std::size_t dim, std::span<const std::size_t> priority);

    std::size_t dim() const { return column_at_.size(); }
    std::size_t rank() const { return pivots_.size(); }

    /// Adds v; returns true when v was independent of the current rows.
    bool insert(const Vector& v);
    Vector reduce(const Vector& v) const;
    bool contains(const Vector& v) const { return reduce(v).empty(); }
    std::vector<std::size_t> pivot_columns() const;
    /// Rows in reduced echelon form: each has a 1 on its pivot column and
    /// zeros on all other pivot columns. Ordered by pivot priority.
    std::vector<Vector> reduced_rows() const;

private:
    using Row = std::map<std::size_t, Rational>;  // keyed by priority position
    Row to_positions(const Vector& v) const;
    Vector to_columns(const Row& r) const;
    Row reduce_positions(Row r) const;

    std::vector<std::size_t> position_of_;
    std::vector<std::size_t> column_at_;
    std::map<std::size_t, Row> pivots_;
};

using DenseMatrix = std::vector<std::vector<Rational>>;

/// Rank of a dense matrix over Q.
std::size_t rank(const DenseMatrix& rows);

/// Solves A x = b exactly; nullopt if inconsistent. Free variables are set to 0.
std::optional<std::vector<Rational>> solve(const DenseMatrix& A, std::span<const Rational> b);

}  // namespace gcdlab
