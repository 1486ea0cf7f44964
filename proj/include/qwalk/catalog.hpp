#pragma once

#include "qwalk/eigen.hpp"

#include <map>
#include <utility>
#include <vector>

namespace qwalk {

/// Chirality basis kets: |0> = (1,0), |1> = (0,1) within one pair.
inline std::pair<Scalar, Scalar> chirality_ket(int bit) {
    if (bit != 0 && bit != 1)
        throw std::invalid_argument("chirality_ket: bit must be 0 or 1");
    return bit == 0 ? std::pair<Scalar, Scalar>{Scalar(1), Scalar()}
                    : std::pair<Scalar, Scalar>{Scalar(), Scalar(1)};
}

/// Minimal-support eigenstate of the moving-shift Grover walk: support is
/// base + {0,1}^d and the amplitude at offset (x_1..x_d) is
/// lambda^(x_1+...+x_d) times the stacked kets |x_1>,...,|x_d>.
inline WaveFunction moving_min_state(int d, Eigenvalue lambda,
                                     const LatticePoint& base) {
    if (d < 1)
        throw std::invalid_argument("moving_min_state: d must be >= 1");
    if (base.dim() != d)
        throw std::invalid_argument("moving_min_state: base dimension != d");
    WaveFunction::EntryMap m;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
        LatticePoint x = base;
        AmpVector v(static_cast<std::size_t>(2 * d));
        int ones = 0;
        for (int a = 0; a < d; ++a) {
            int bit = static_cast<int>((mask >> a) & 1);
            ones += bit;
            x = x.step(a, bit);
            auto [c0, c1] = chirality_ket(bit);
            v[static_cast<std::size_t>(2 * a)] = c0;
            v[static_cast<std::size_t>(2 * a + 1)] = c1;
        }
        Scalar sign = lambda.pow(ones);
        for (auto& z : v)
            z = sign * z;
        m.emplace(std::move(x), std::move(v));
    }
    return WaveFunction(d, std::move(m));
}

inline WaveFunction moving_min_state(int d, Eigenvalue lambda) {
    return moving_min_state(d, lambda, LatticePoint::origin(d));
}

/// Minimal-support eigenstate of the flip-flop Grover walk, d >= 2: support
/// is base + {0,1}^2 x {0}^(d-2); at offset (m1, m2) the first two pairs
/// hold lambda^(m1+m2) * ((-1)^(m1+m2)|m1>, (-1)^(m1+m2+1)|m2>) and all
/// further components vanish. No finite-support eigenstate exists at d = 1,
/// so that dimension is rejected.
inline WaveFunction flipflop_min_state(int d, Eigenvalue lambda,
                                       const LatticePoint& base) {
    if (d < 2)
        throw std::invalid_argument(
            "flipflop_min_state: requires d >= 2 (no finite-support "
            "eigenstate exists on the line)");
    if (base.dim() != d)
        throw std::invalid_argument("flipflop_min_state: base dimension != d");
    WaveFunction::EntryMap m;
    for (int m1 = 0; m1 <= 1; ++m1)
        for (int m2 = 0; m2 <= 1; ++m2) {
            LatticePoint x = base.step(0, m1).step(1, m2);
            AmpVector v(static_cast<std::size_t>(2 * d));
            Scalar sign = lambda.pow(m1 + m2) * Scalar((m1 + m2) % 2 ? -1 : 1);
            auto [a0, a1] = chirality_ket(m1);
            auto [b0, b1] = chirality_ket(m2);
            v[0] = sign * a0;
            v[1] = sign * a1;
            v[2] = -sign * b0;
            v[3] = -sign * b1;
            m.emplace(std::move(x), std::move(v));
        }
    return WaveFunction(d, std::move(m));
}

inline WaveFunction flipflop_min_state(int d, Eigenvalue lambda) {
    return flipflop_min_state(d, lambda, LatticePoint::origin(d));
}

/// Superposition of translated lambda=+1 moving minimal states on Z^2,
/// weighted by a finite g: Z^2 -> C:
///   psi(x,y) = (1,0,1,0) g(x,y) + (0,1,1,0) g(x-1,y)
///            + (1,0,0,1) g(x,y-1) + (0,1,0,1) g(x-1,y-1).
/// Every finite nonzero g yields a moving-shift eigenstate with lambda = +1.
inline WaveFunction
convolve_moving_d2(const std::map<LatticePoint, Scalar>& g) {
    std::vector<std::pair<Scalar, WaveFunction>> terms;
    for (const auto& [p, c] : g) {
        if (p.dim() != 2)
            throw std::invalid_argument("convolve_moving_d2: g points must be 2-d");
        if (c.is_zero())
            continue;
        terms.emplace_back(c, moving_min_state(2, Eigenvalue::plus_one(), p));
    }
    if (terms.empty())
        throw std::invalid_argument("convolve_moving_d2: g is identically zero");
    return linear_combine(terms);
}

/// The nine-site lambda=+1 moving eigenstate on Z^2 obtained from the
/// indicator g of {0,-1}^2. Amplitudes are pinned to the known table; the
/// convolution route reproduces it exactly.
inline WaveFunction nine_point_state() {
    auto amp = [](int a, int b, int c, int e) {
        return AmpVector{Scalar(a), Scalar(b), Scalar(c), Scalar(e)};
    };
    WaveFunction::EntryMap m;
    m.emplace(LatticePoint{0, 0}, amp(2, 2, 2, 2));
    m.emplace(LatticePoint{0, 1}, amp(1, 1, 0, 2));
    m.emplace(LatticePoint{1, 0}, amp(0, 2, 1, 1));
    m.emplace(LatticePoint{0, -1}, amp(1, 1, 2, 0));
    m.emplace(LatticePoint{-1, 0}, amp(2, 0, 1, 1));
    m.emplace(LatticePoint{1, 1}, amp(0, 1, 0, 1));
    m.emplace(LatticePoint{1, -1}, amp(0, 1, 1, 0));
    m.emplace(LatticePoint{-1, -1}, amp(1, 0, 1, 0));
    m.emplace(LatticePoint{-1, 1}, amp(1, 0, 0, 1));
    return WaveFunction(2, std::move(m));
}

/// The g of the nine-point construction: indicator of {0,-1}^2.
inline std::map<LatticePoint, Scalar> nine_point_g() {
    std::map<LatticePoint, Scalar> g;
    for (Coord x : {0, -1})
        for (Coord y : {0, -1})
            g.emplace(LatticePoint{x, y}, Scalar(1));
    return g;
}

} // namespace qwalk
