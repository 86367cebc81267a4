#include "gcdlab/linalg.hpp"

#include <iterator>
#include <numeric>

namespace gcdlab {

RowSpace::RowSpace(std::size_t dim) : position_of_(dim), column_at_(dim) {
    std::iota(position_of_.begin(), position_of_.end(), std::size_t{0});
    std::iota(column_at_.begin(), column_at_.end(), std::size_t{0});
}

RowSpace::RowSpace(std::size_t dim, std::span<const std::size_t> priority) : position_of_(dim, dim), column_at_(dim) {
    if (priority.size() != dim) throw DomainError("column priority must cover every column");
    for (std::size_t k = 0; k < dim; ++k) {
        std::size_t col = priority[k];
        if (col >= dim || position_of_[col] != dim) throw DomainError("column priority is not a permutation");
        position_of_[col] = k;
        column_at_[k] = col;
    }
}

RowSpace::Row RowSpace::to_positions(const Vector& v) const {
    Row r;
    for (const auto& [col, val] : v) {
        if (col >= dim()) throw DomainError("vector entry outside the ambient dimension");
        if (val != 0) r.emplace(position_of_[col], val);
    }
    return r;
}

RowSpace::Vector RowSpace::to_columns(const Row& r) const {
    Vector v;
    for (const auto& [pos, val] : r) v.emplace(column_at_[pos], val);
    return v;
}

RowSpace::Row RowSpace::reduce_positions(Row r) const {
    auto it = r.begin();
    while (it != r.end()) {
        auto piv = pivots_.find(it->first);
        if (piv == pivots_.end()) {
            ++it;
            continue;
        }
        const std::size_t pos = it->first;
        const Rational factor = it->second;
        for (const auto& [p, val] : piv->second) {
            auto [slot, inserted] = r.try_emplace(p, -factor * val);
            if (!inserted) {
                slot->second -= factor * val;
                if (slot->second == 0) r.erase(slot);
            }
        }
        it = r.upper_bound(pos);
    }
    return r;
}

RowSpace::Vector RowSpace::reduce(const Vector& v) const { return to_columns(reduce_positions(to_positions(v))); }

bool RowSpace::insert(const Vector& v) {
    Row r = reduce_positions(to_positions(v));
    if (r.empty()) return false;
    const std::size_t pos = r.begin()->first;
    const Rational inv = 1 / r.begin()->second;
    for (auto& [p, val] : r) val *= inv;
    pivots_.emplace(pos, std::move(r));
    return true;
}

std::vector<std::size_t> RowSpace::pivot_columns() const {
    std::vector<std::size_t> out;
    for (const auto& [pos, row] : pivots_) out.push_back(column_at_[pos]);
    return out;
}

std::vector<RowSpace::Vector> RowSpace::reduced_rows() const {
    std::vector<Vector> out;
    out.reserve(pivots_.size());
    for (const auto& [pos, row] : pivots_) {
        Row tail(std::next(row.begin()), row.end());
        Row reduced = reduce_positions(std::move(tail));
        reduced.emplace(pos, Rational(1));
        out.push_back(to_columns(reduced));
    }
    return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(DenseMatrix& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Rational inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const DenseMatrix& rows) {
    if (rows.empty()) return 0;
    DenseMatrix m = rows;
    return rref(m, m.front().size()).size();
}

std::optional<std::vector<Rational>> solve(const DenseMatrix& A, std::span<const Rational> b) {
    if (A.size() != b.size()) throw DomainError("solve: dimension mismatch");
    if (A.empty()) return std::vector<Rational>{};
    const std::size_t cols = A.front().size();
    DenseMatrix aug = A;
    for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
    auto pivots = rref(aug, cols + 1);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    std::vector<Rational> x(cols, 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
    return x;
}

}  // namespace gcdlab
