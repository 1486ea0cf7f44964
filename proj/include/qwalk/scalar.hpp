#pragma once

#include "qwalk/rational.hpp"

#include <ostream>
#include <utility>

namespace qwalk {

/// Gaussian rational: re + im*i with exact rational parts.
class Scalar {
  public:
    Scalar() = default;
    Scalar(Rational re) : re_(std::move(re)) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    Scalar(int n) : re_(n) {}

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }

    /// |z|^2 = re^2 + im^2, an exact nonnegative rational.
    Rational norm_sq() const { return re_ * re_ + im_ * im_; }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return Scalar(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return Scalar(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.re_ * b.re_ - a.im_ * b.im_,
                      a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero())
            throw std::invalid_argument("Scalar: division by zero");
        Rational n = b.norm_sq();
        Scalar p = a * b.conj();
        return Scalar(p.re_ / n, p.im_ / n);
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend bool operator==(const Scalar&, const Scalar&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Scalar& z) {
        os << z.re_;
        if (z.im_ != 0)
            os << (z.im_ > 0 ? "+" : "") << z.im_ << "i";
        return os;
    }

  private:
    Rational re_{0};
    Rational im_{0};
};

} // namespace qwalk
