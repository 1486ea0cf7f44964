#pragma once

#include "qwalk/lattice.hpp"
#include "qwalk/scalar.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace qwalk {

/// Amplitude vector at one lattice site; length 2d.
using AmpVector = std::vector<Scalar>;

inline bool is_zero_vector(const AmpVector& v) {
    return std::all_of(v.begin(), v.end(),
                       [](const Scalar& z) { return z.is_zero(); });
}

/// Finitely supported map Z^d -> C^{2d}. Stored sparsely; all-zero site
/// vectors are pruned so the key set is exactly the support.
class WaveFunction {
  public:
    using EntryMap = std::map<LatticePoint, AmpVector>;

    explicit WaveFunction(int d) : d_(check_d(d)) {}

    WaveFunction(int d, EntryMap entries) : d_(check_d(d)) {
        for (auto& [x, v] : entries) {
            if (x.dim() != d_)
                throw std::invalid_argument("WaveFunction: point dimension != d");
            if (v.size() != static_cast<std::size_t>(2 * d_))
                throw std::invalid_argument(
                    "WaveFunction: amplitude vector length != 2d");
            if (!is_zero_vector(v))
                entries_.emplace(x, std::move(v));
        }
    }

    static WaveFunction zero(int d) { return WaveFunction(d); }

    int dim() const { return d_; }
    int components() const { return 2 * d_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }
    const EntryMap& entries() const { return entries_; }

    /// Amplitude vector at x; all-zero vector when x is off-support.
    AmpVector at(const LatticePoint& x) const {
        check_point(x);
        auto it = entries_.find(x);
        if (it == entries_.end())
            return AmpVector(static_cast<std::size_t>(2 * d_));
        return it->second;
    }

    /// Component j (0-based) at x; zero when off-support.
    Scalar component(const LatticePoint& x, int j) const {
        check_point(x);
        auto it = entries_.find(x);
        if (it == entries_.end())
            return Scalar();
        return it->second[static_cast<std::size_t>(j)];
    }

    bool contains(const LatticePoint& x) const {
        return entries_.count(x) != 0;
    }

    friend bool operator==(const WaveFunction&, const WaveFunction&) = default;

  private:
    static int check_d(int d) {
        if (d < 1)
            throw std::invalid_argument("WaveFunction: d must be >= 1");
        return d;
    }
    void check_point(const LatticePoint& x) const {
        if (x.dim() != d_)
            throw std::invalid_argument("WaveFunction: point dimension mismatch");
    }

    int d_;
    EntryMap entries_;
};

/// Finitely supported measure Z^d -> Q_{>0}; zero values pruned.
class Measure {
  public:
    using EntryMap = std::map<LatticePoint, Rational>;

    explicit Measure(int d) : d_(d) {}
    Measure(int d, EntryMap entries) : d_(d) {
        for (auto& [x, v] : entries) {
            if (x.dim() != d_)
                throw std::invalid_argument("Measure: point dimension != d");
            if (v < 0)
                throw std::invalid_argument("Measure: negative value");
            if (v != 0)
                entries_.emplace(x, std::move(v));
        }
    }

    int dim() const { return d_; }
    const EntryMap& entries() const { return entries_; }
    Rational at(const LatticePoint& x) const {
        auto it = entries_.find(x);
        return it == entries_.end() ? Rational(0) : it->second;
    }
    Rational total_mass() const {
        Rational s = 0;
        for (const auto& [x, v] : entries_)
            s += v;
        return s;
    }

    friend bool operator==(const Measure&, const Measure&) = default;

  private:
    int d_;
    EntryMap entries_;
};

/// S(psi): the set of sites carrying a nonzero amplitude vector.
inline std::set<LatticePoint> support(const WaveFunction& psi) {
    std::set<LatticePoint> s;
    for (const auto& [x, v] : psi.entries())
        s.insert(x);
    return s;
}

/// Gamma(x): sum of all 2d amplitude components at x; 0 off-support.
inline Scalar gamma(const WaveFunction& psi, const LatticePoint& x) {
    if (x.dim() != psi.dim())
        throw std::invalid_argument("gamma: dimension mismatch");
    Scalar g;
    auto it = psi.entries().find(x);
    if (it == psi.entries().end())
        return g;
    for (const Scalar& z : it->second)
        g += z;
    return g;
}

/// mu(x) = sum_j |psi^j(x)|^2. Support of the measure equals S(psi).
inline Measure to_measure(const WaveFunction& psi) {
    Measure::EntryMap m;
    for (const auto& [x, v] : psi.entries()) {
        Rational s = 0;
        for (const Scalar& z : v)
            s += z.norm_sq();
        m.emplace(x, std::move(s));
    }
    return Measure(psi.dim(), std::move(m));
}

/// Total squared norm, an exact rational.
inline Rational norm_sq(const WaveFunction& psi) {
    Rational s = 0;
    for (const auto& [x, v] : psi.entries())
        for (const Scalar& z : v)
            s += z.norm_sq();
    return s;
}

/// psi shifted so that x maps to x+v.
inline WaveFunction translate(const WaveFunction& psi, const LatticePoint& v) {
    if (v.dim() != psi.dim())
        throw std::invalid_argument("translate: dimension mismatch");
    WaveFunction::EntryMap m;
    for (const auto& [x, amp] : psi.entries())
        m.emplace(x + v, amp);
    return WaveFunction(psi.dim(), std::move(m));
}

/// Pointwise exact linear combination sum_i c_i * psi_i.
inline WaveFunction
linear_combine(const std::vector<std::pair<Scalar, WaveFunction>>& terms) {
    if (terms.empty())
        throw std::invalid_argument("linear_combine: no terms");
    int d = terms.front().second.dim();
    WaveFunction::EntryMap m;
    for (const auto& [c, psi] : terms) {
        if (psi.dim() != d)
            throw std::invalid_argument("linear_combine: dimension mismatch");
        if (c.is_zero())
            continue;
        for (const auto& [x, amp] : psi.entries()) {
            auto [it, inserted] =
                m.try_emplace(x, AmpVector(static_cast<std::size_t>(2 * d)));
            for (std::size_t j = 0; j < amp.size(); ++j)
                it->second[j] += c * amp[j];
        }
    }
    return WaveFunction(d, std::move(m));
}

inline WaveFunction operator*(const Scalar& c, const WaveFunction& psi) {
    return linear_combine({{c, psi}});
}
inline WaveFunction operator+(const WaveFunction& a, const WaveFunction& b) {
    return linear_combine({{Scalar(1), a}, {Scalar(1), b}});
}
inline WaveFunction operator-(const WaveFunction& a, const WaveFunction& b) {
    return linear_combine({{Scalar(1), a}, {Scalar(-1), b}});
}

} // namespace qwalk
