#pragma once

#include "qwalk/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace qwalk {

/// Dense integer matrix, row-major.
class IntMatrix {
  public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const {
        return a_[r * cols_ + c];
    }
    void swap_rows(std::size_t r1, std::size_t r2) {
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap(at(r1, c), at(r2, c));
    }

  private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

/// Exact rational basis of {x : M x = 0} via fraction-free (Bareiss)
/// elimination. Pivots are chosen as the first nonzero entry in column
/// order, so the result is deterministic; intermediate entries stay integer
/// because each one-step division by the previous pivot is exact. Each
/// basis vector is scaled so its first nonzero coordinate is 1. An empty
/// result means the only solution is zero.
inline std::vector<std::vector<Rational>> nullspace_basis(IntMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m.at(p, c) == 0)
            ++p;
        if (p == rows)
            continue; // free column
        if (p != r)
            m.swap_rows(r, p);
        const Int pivot = m.at(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Int factor = m.at(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                Int t = pivot * m.at(i, j) - factor * m.at(r, j);
                m.at(i, j) = t / prev; // exact by the Sylvester identity
            }
            m.at(i, c) = 0;
        }
        prev = pivot;
        pivot_cols.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_cols)
        is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> x(cols, Rational(0));
        x[f] = 1;
        for (std::size_t k = pivot_cols.size(); k-- > 0;) {
            std::size_t c = pivot_cols[k];
            Rational s = 0;
            for (std::size_t j = c + 1; j < cols; ++j)
                if (x[j] != 0)
                    s += Rational(m.at(k, j)) * x[j];
            x[c] = -s / Rational(m.at(k, c));
        }
        // first nonzero coordinate scaled to 1
        for (std::size_t j = 0; j < cols; ++j)
            if (x[j] != 0) {
                Rational inv = x[j];
                for (std::size_t i = j; i < cols; ++i)
                    x[i] /= inv;
                break;
            }
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace qwalk
