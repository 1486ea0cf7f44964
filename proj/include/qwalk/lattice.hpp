#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qwalk {

using Coord = std::int64_t;

/// A point of Z^d. Ordered lexicographically, which fixes the deterministic
/// iteration order used everywhere (sparse maps, candidate enumeration,
/// witness normalization).
class LatticePoint {
  public:
    LatticePoint() = default;
    explicit LatticePoint(std::vector<Coord> coords) : c_(std::move(coords)) {}
    LatticePoint(std::initializer_list<Coord> coords) : c_(coords) {}

    static LatticePoint origin(int d) {
        return LatticePoint(std::vector<Coord>(static_cast<std::size_t>(d), 0));
    }

    /// Standard basis vector e_axis (axis is 0-based).
    static LatticePoint unit(int d, int axis) {
        auto p = origin(d);
        p.c_.at(static_cast<std::size_t>(axis)) = 1;
        return p;
    }

    int dim() const { return static_cast<int>(c_.size()); }
    Coord operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<Coord>& coords() const { return c_; }

    LatticePoint& operator+=(const LatticePoint& o) {
        check_dim(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] += o.c_[i];
        return *this;
    }
    LatticePoint& operator-=(const LatticePoint& o) {
        check_dim(o);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c_[i] -= o.c_[i];
        return *this;
    }
    friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) {
        return a += b;
    }
    friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) {
        return a -= b;
    }
    LatticePoint operator-() const {
        LatticePoint p(*this);
        for (auto& x : p.c_)
            x = -x;
        return p;
    }

    /// This point shifted by step*e_axis.
    LatticePoint step(int axis, Coord amount) const {
        LatticePoint p(*this);
        p.c_.at(static_cast<std::size_t>(axis)) += amount;
        return p;
    }

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend std::strong_ordering operator<=>(const LatticePoint&,
                                            const LatticePoint&) = default;

    friend std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
        os << "(";
        for (std::size_t i = 0; i < p.c_.size(); ++i)
            os << (i ? "," : "") << p.c_[i];
        return os << ")";
    }

  private:
    void check_dim(const LatticePoint& o) const {
        if (c_.size() != o.c_.size())
            throw std::invalid_argument("LatticePoint: dimension mismatch");
    }

    std::vector<Coord> c_;
};

} // namespace qwalk
