#pragma once

#include "qwalk/walk.hpp"

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qwalk {

/// Eigenvalue of the Grover walk, restricted to +1 / -1. The d-dimensional
/// Grover walk has no other point spectrum, so wider values are rejected
/// at construction.
class Eigenvalue {
  public:
    explicit Eigenvalue(int v) : v_(v) {
        if (v != 1 && v != -1)
            throw std::invalid_argument("Eigenvalue: only +1 and -1 are admitted");
    }
    static Eigenvalue plus_one() { return Eigenvalue(1); }
    static Eigenvalue minus_one() { return Eigenvalue(-1); }

    int value() const { return v_; }
    Scalar as_scalar() const { return Scalar(v_); }

    /// lambda^m for any integer m (lambda^2 = 1, so only parity matters).
    Scalar pow(Coord m) const { return Scalar((m % 2 == 0) ? 1 : v_); }

    friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;

  private:
    int v_;
};

inline std::string to_string(const Eigenvalue& l) {
    return l.value() == 1 ? "+1" : "-1";
}

struct StructureViolation {
    LatticePoint x;
    int axis; // 0-based
    std::string what;
};

/// Outcome of a structural check; empty violation list means pass.
struct StructureReport {
    std::vector<StructureViolation> violations;

    bool passed() const { return violations.empty(); }

    void add(const LatticePoint& x, int axis, std::string what) {
        violations.push_back({x, axis, std::move(what)});
    }
    void merge(const StructureReport& o) {
        violations.insert(violations.end(), o.violations.begin(),
                          o.violations.end());
    }
};

/// step(psi) - lambda*psi. Zero exactly when psi is an eigenstate (or zero).
inline WaveFunction eigen_residual(const WaveFunction& psi, Eigenvalue lambda,
                                   const Coin& coin, ShiftKind shift) {
    return step(psi, coin, shift) - lambda.as_scalar() * psi;
}

inline bool is_eigenstate(const WaveFunction& psi, Eigenvalue lambda,
                          const Coin& coin, ShiftKind shift) {
    return !psi.is_zero() && eigen_residual(psi, lambda, coin, shift).is_zero();
}

namespace detail {

inline bool pair_nonzero(const WaveFunction& psi, const LatticePoint& x,
                         int axis) {
    return !psi.component(x, 2 * axis).is_zero() ||
           !psi.component(x, 2 * axis + 1).is_zero();
}

inline std::string describe(const Scalar& lhs, const Scalar& rhs) {
    std::ostringstream os;
    os << lhs << " != " << rhs;
    return os.str();
}

} // namespace detail

/// Checks the Gamma-form of the Grover eigen-system on the neighborhood
/// closure of the support, where the finite check is complete.
///
/// Moving shift, per axis k (0-based a) and site x:
///   lambda*psi^{2a}(x-e_a)   + psi^{2a}(x)   = Gamma(x)/d
///   lambda*psi^{2a+1}(x+e_a) + psi^{2a+1}(x) = Gamma(x)/d
/// Flip-flop shift couples the pair across sites instead:
///   lambda*psi^{2a}(x-e_a)   + psi^{2a+1}(x) = Gamma(x)/d
///   lambda*psi^{2a+1}(x+e_a) + psi^{2a}(x)   = Gamma(x)/d
/// The two-sided pair identity implied by subtracting them is checked too.
inline StructureReport check_gamma_relations(const WaveFunction& psi,
                                             Eigenvalue lambda,
                                             ShiftKind shift) {
    StructureReport report;
    int d = psi.dim();
    Scalar lam = lambda.as_scalar();
    Scalar inv_d = Scalar(make_rational(1, d));
    for (const LatticePoint& x : neighborhood_closure(psi)) {
        Scalar g = gamma(psi, x) * inv_d;
        for (int a = 0; a < d; ++a) {
            Scalar lo = lam * psi.component(x.step(a, -1), 2 * a);
            Scalar hi = lam * psi.component(x.step(a, +1), 2 * a + 1);
            Scalar lhs1, lhs2;
            if (shift == ShiftKind::moving) {
                lhs1 = lo + psi.component(x, 2 * a);
                lhs2 = hi + psi.component(x, 2 * a + 1);
            } else {
                lhs1 = lo + psi.component(x, 2 * a + 1);
                lhs2 = hi + psi.component(x, 2 * a);
            }
            if (lhs1 != g)
                report.add(x, a, "minus-direction relation: " +
                                     detail::describe(lhs1, g));
            if (lhs2 != g)
                report.add(x, a, "plus-direction relation: " +
                                     detail::describe(lhs2, g));
            if (lhs1 != lhs2)
                report.add(x, a,
                           "pair relation: " + detail::describe(lhs1, lhs2));
        }
    }
    return report;
}

/// Neighbor property of finite-support eigenstates: wherever a chirality
/// pair is nonzero, the same pair is nonzero at one of the two axis
/// neighbors (otherwise the pair relation propagates it to infinity).
inline StructureReport check_neighbor_property(const WaveFunction& psi) {
    StructureReport report;
    for (const auto& [x, v] : psi.entries())
        for (int a = 0; a < psi.dim(); ++a)
            if (detail::pair_nonzero(psi, x, a) &&
                !detail::pair_nonzero(psi, x.step(a, -1), a) &&
                !detail::pair_nonzero(psi, x.step(a, +1), a))
                report.add(x, a, "pair has no nonzero axis neighbor");
    return report;
}

/// Endpoint structure of a finite-support eigenstate along the axis-k line
/// through x.
///
/// Scans {x + m*e_k}, locates the extremal positions m(-), m(+) where the
/// pair (2k-1, 2k) is nonzero, and asserts the endpoint shapes (alpha, 0)
/// and (0, beta) with alpha*beta != 0. For the moving shift additionally
/// asserts every other pair is nonzero at both endpoints; for flip-flop
/// asserts Gamma = 0 at both endpoints.
///
/// Throws if psi is not a verified eigenstate or the pair vanishes at x.
inline StructureReport check_endpoint_structure(const WaveFunction& psi,
                                                Eigenvalue lambda,
                                                ShiftKind shift, int axis,
                                                const LatticePoint& x) {
    int d = psi.dim();
    if (axis < 0 || axis >= d)
        throw std::invalid_argument("check_endpoint_structure: bad axis");
    if (!is_eigenstate(psi, lambda, grover_coin(d), shift))
        throw std::invalid_argument(
            "check_endpoint_structure: input is not an eigenstate");
    if (!detail::pair_nonzero(psi, x, axis))
        throw std::invalid_argument(
            "check_endpoint_structure: pair vanishes at the given site");

    // Extremal pair-nonzero offsets along the line; m = 0 qualifies.
    Coord m_minus = 0, m_plus = 0;
    for (const auto& [y, v] : psi.entries()) {
        bool on_line = true;
        for (int i = 0; i < d; ++i)
            if (i != axis && y[i] != x[i])
                on_line = false;
        if (!on_line)
            continue;
        Coord m = y[axis] - x[axis];
        if (detail::pair_nonzero(psi, y, axis)) {
            m_minus = std::min(m_minus, m);
            m_plus = std::max(m_plus, m);
        }
    }

    StructureReport report;
    LatticePoint lo = x.step(axis, m_minus);
    LatticePoint hi = x.step(axis, m_plus);
    if (m_minus == m_plus) {
        report.add(x, axis, "pair is nonzero at a single line site");
        return report;
    }
    if (!psi.component(lo, 2 * axis + 1).is_zero() ||
        psi.component(lo, 2 * axis).is_zero())
        report.add(lo, axis, "lower endpoint is not of shape (alpha, 0)");
    if (!psi.component(hi, 2 * axis).is_zero() ||
        psi.component(hi, 2 * axis + 1).is_zero())
        report.add(hi, axis, "upper endpoint is not of shape (0, beta)");

    if (shift == ShiftKind::moving) {
        for (int l = 0; l < d; ++l) {
            if (l == axis)
                continue;
            if (!detail::pair_nonzero(psi, lo, l))
                report.add(lo, l, "other pair vanishes at lower endpoint");
            if (!detail::pair_nonzero(psi, hi, l))
                report.add(hi, l, "other pair vanishes at upper endpoint");
        }
    } else {
        if (!gamma(psi, lo).is_zero())
            report.add(lo, axis, "Gamma != 0 at lower endpoint");
        if (!gamma(psi, hi).is_zero())
            report.add(hi, axis, "Gamma != 0 at upper endpoint");
    }
    return report;
}

/// Runs the endpoint check for every axis, anchored at the first support
/// point whose pair is nonzero, plus the neighbor property everywhere.
/// The endpoint checks are conditional on a nonzero pair, so an axis whose
/// pair vanishes identically has nothing to check (flip-flop minimal
/// states have exactly this shape on axes beyond the second).
inline StructureReport check_support_structure(const WaveFunction& psi,
                                               Eigenvalue lambda,
                                               ShiftKind shift) {
    StructureReport report = check_neighbor_property(psi);
    for (int a = 0; a < psi.dim(); ++a) {
        std::optional<LatticePoint> anchor;
        for (const auto& [x, v] : psi.entries())
            if (detail::pair_nonzero(psi, x, a)) {
                anchor = x;
                break;
            }
        if (anchor)
            report.merge(
                check_endpoint_structure(psi, lambda, shift, a, *anchor));
    }
    return report;
}

/// True iff the induced measure is invariant under the walk for all
/// n = 1..n_max, checked exactly.
inline bool is_stationary_measure(const WaveFunction& psi, const Coin& coin,
                                  ShiftKind shift, std::uint64_t n_max) {
    if (psi.is_zero())
        throw std::invalid_argument("is_stationary_measure: zero state");
    Measure mu = to_measure(psi);
    WaveFunction cur = psi;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        cur = step(cur, coin, shift);
        if (to_measure(cur) != mu)
            return false;
    }
    return true;
}

} // namespace qwalk
