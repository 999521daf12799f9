#include "ihrep/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace ihrep {

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t columns) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col].is_zero())
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[row], m[pivot]);
        const Rational inv = m[row][col].inverse();
        for (std::size_t c = col; c < columns; ++c)
            m[row][c] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero())
                continue;
            const Rational factor = m[r][col];
            for (std::size_t c = col; c < columns; ++c)
                if (!m[row][c].is_zero())
                    m[r][c] -= factor * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t checked_width(const RationalMatrix& m) {
    const std::size_t width = m.empty() ? 0 : m.front().size();
    for (const auto& row : m)
        if (row.size() != width)
            throw std::invalid_argument("ragged matrix");
    return width;
}

}  // namespace

std::size_t rank(RationalMatrix m) {
    const std::size_t width = checked_width(m);
    return row_reduce(m, width).size();
}

std::vector<std::vector<Rational>> kernel_basis(RationalMatrix m, std::size_t columns) {
    if (!m.empty() && checked_width(m) != columns)
        throw std::invalid_argument("matrix width does not match column count");
    const auto pivots = row_reduce(m, columns);
    std::vector<bool> is_pivot(columns, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> v(columns);
        v[free] = Rational(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace ihrep
