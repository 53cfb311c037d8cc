#pragma once

#include "rational.hpp"

namespace skt {

// Gaussian rational a + bi with exact arithmetic; scalar type for the exact
// Moebius mode used on integer-matrix groups.
struct GaussianRational {
    Rational re, im;

    GaussianRational(Rational r = 0, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw Error(ErrorClass::module, "GaussianRational: division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    bool is_zero() const { return re == 0 && im == 0; }
};

// Unnormalized exact Moebius matrix over Gaussian rationals.  Projectively
// equivalent matrices compare equal through cross-ratios of entries, not here.
struct MoebiusRat {
    GaussianRational a, b, c, d;

    static MoebiusRat identity() { return {1, 0, 0, 1}; }

    GaussianRational det() const { return a * d - b * c; }

    MoebiusRat inverse() const { return {d, GaussianRational(0) - b, GaussianRational(0) - c, a}; }

    // Finite application; caller must avoid the pole.
    GaussianRational apply(const GaussianRational& z) const {
        GaussianRational den = c * z + d;
        if (den.is_zero()) throw Error(ErrorClass::module, "MoebiusRat: pole hit");
        return (a * z + b) / den;
    }

    friend MoebiusRat operator*(const MoebiusRat& f, const MoebiusRat& g) {
        return {f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d, f.c * g.a + f.d * g.c,
                f.c * g.b + f.d * g.d};
    }
};

}  // namespace skt
