#pragma once

#include "qwalk/coin.hpp"
#include "qwalk/state.hpp"

#include <cstdint>
#include <set>
#include <string>

namespace qwalk {

enum class ShiftKind { moving, flipflop };

inline std::string to_string(ShiftKind s) {
    return s == ShiftKind::moving ? "moving" : "flipflop";
}

/// Support together with its unit l1-neighborhood. One-step evolution and
/// the eigen-equations are identically zero outside this set.
inline std::set<LatticePoint> neighborhood_closure(const WaveFunction& psi) {
    std::set<LatticePoint> c;
    for (const auto& [x, v] : psi.entries()) {
        c.insert(x);
        for (int a = 0; a < psi.dim(); ++a) {
            c.insert(x.step(a, +1));
            c.insert(x.step(a, -1));
        }
    }
    return c;
}

/// One step of the walk.
///
/// Moving shift: component 2a of the output at x is coin row 2a applied to
/// psi(x+e_a), component 2a+1 is row 2a+1 applied to psi(x-e_a). Chirality
/// index 2a rides in the -e_a direction, 2a+1 in +e_a.
///
/// Flip-flop shift: same gather pattern, but the row within the pair is
/// exchanged: component 2a takes row 2a+1 on psi(x+e_a) and component 2a+1
/// takes row 2a on psi(x-e_a). Equivalently shift composed with the
/// within-pair swap and the coin.
inline WaveFunction step(const WaveFunction& psi, const Coin& coin,
                         ShiftKind shift) {
    int d = psi.dim();
    if (coin.size() != 2 * d)
        throw std::invalid_argument("step: coin size != 2d");
    WaveFunction::EntryMap out;
    for (const LatticePoint& x : neighborhood_closure(psi)) {
        AmpVector v(static_cast<std::size_t>(2 * d));
        bool any = false;
        for (int a = 0; a < d; ++a) {
            int row_minus = 2 * a;     // gathers from x+e_a
            int row_plus = 2 * a + 1;  // gathers from x-e_a
            if (shift == ShiftKind::flipflop)
                std::swap(row_minus, row_plus);
            if (auto it = psi.entries().find(x.step(a, +1));
                it != psi.entries().end()) {
                v[static_cast<std::size_t>(2 * a)] = coin.row_dot(row_minus, it->second);
                any = true;
            }
            if (auto it = psi.entries().find(x.step(a, -1));
                it != psi.entries().end()) {
                v[static_cast<std::size_t>(2 * a + 1)] = coin.row_dot(row_plus, it->second);
                any = true;
            }
        }
        if (any && !is_zero_vector(v))
            out.emplace(x, std::move(v));
    }
    return WaveFunction(d, std::move(out));
}

/// n-fold application of step; n = 0 returns psi unchanged.
inline WaveFunction evolve(const WaveFunction& psi, const Coin& coin,
                           ShiftKind shift, std::uint64_t n) {
    WaveFunction cur = psi;
    for (std::uint64_t i = 0; i < n; ++i)
        cur = step(cur, coin, shift);
    return cur;
}

} // namespace qwalk
