#pragma once

#include "qwalk/state.hpp"

#include <utility>
#include <vector>

namespace qwalk {

/// 2d x 2d coin matrix with exact entries. Unitarity is decidable exactly.
class Coin {
  public:
    explicit Coin(int size)
        : size_(size), a_(static_cast<std::size_t>(size) * size) {
        if (size < 2 || size % 2 != 0)
            throw std::invalid_argument("Coin: size must be a positive even number");
    }

    static Coin identity(int size) {
        Coin c(size);
        for (int i = 0; i < size; ++i)
            c.at(i, i) = Scalar(1);
        return c;
    }

    int size() const { return size_; }
    int walk_dim() const { return size_ / 2; }

    Scalar& at(int i, int j) {
        return a_[static_cast<std::size_t>(i) * size_ + j];
    }
    const Scalar& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * size_ + j];
    }

    /// Row i applied to an amplitude vector.
    Scalar row_dot(int i, const AmpVector& v) const {
        Scalar s;
        for (int j = 0; j < size_; ++j)
            s += at(i, j) * v[static_cast<std::size_t>(j)];
        return s;
    }

    friend bool operator==(const Coin&, const Coin&) = default;

  private:
    int size_;
    std::vector<Scalar> a_;
};

/// Grover coin on Z^d: g_ij = 1/d - delta_ij.
inline Coin grover_coin(int d) {
    if (d < 1)
        throw std::invalid_argument("grover_coin: d must be >= 1");
    Coin g(2 * d);
    Rational off = make_rational(1, d);
    Rational diag = make_rational(Int(1) - d, d);
    for (int i = 0; i < 2 * d; ++i)
        for (int j = 0; j < 2 * d; ++j)
            g.at(i, j) = Scalar(i == j ? diag : off);
    return g;
}

/// Exact unitarity check: A * A^dagger == I.
inline bool check_unitary(const Coin& a) {
    int n = a.size();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Scalar s;
            for (int k = 0; k < n; ++k)
                s += a.at(i, k) * a.at(j, k).conj();
            if (s != Scalar(i == j ? 1 : 0))
                return false;
        }
    }
    return true;
}

/// Rows 2k-1 and 2k exchanged within every chirality pair (0-based 2a, 2a+1).
inline Coin swap_paired_rows(const Coin& a) {
    Coin b(a.size());
    for (int p = 0; p < a.size() / 2; ++p)
        for (int j = 0; j < a.size(); ++j) {
            b.at(2 * p, j) = a.at(2 * p + 1, j);
            b.at(2 * p + 1, j) = a.at(2 * p, j);
        }
    return b;
}

} // namespace qwalk
