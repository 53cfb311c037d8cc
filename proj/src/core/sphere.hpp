#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "errors.hpp"

namespace skt {

using cplx = std::complex<double>;

// A point of the Riemann sphere: a finite complex number or the point at
// infinity.  Infinity is a tagged case, never a large-magnitude sentinel.
class SpherePoint {
public:
    SpherePoint() : z_(0.0, 0.0), inf_(false) {}
    SpherePoint(cplx z) : z_(z), inf_(false) {  // NOLINT: implicit by design
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw ConfigError("SpherePoint: non-finite coordinates");
    }
    SpherePoint(double x) : SpherePoint(cplx(x, 0.0)) {}  // NOLINT

    static SpherePoint infinity() {
        SpherePoint p;
        p.inf_ = true;
        return p;
    }

    bool is_infinity() const { return inf_; }
    cplx value() const {
        if (inf_) throw ConfigError("SpherePoint: value() on infinity");
        return z_;
    }

    friend bool operator==(const SpherePoint& a, const SpherePoint& b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.z_ == b.z_;
    }

private:
    cplx z_;
    bool inf_;
};

// Chordal distance on the sphere, range [0, 2].
inline double chordal(const SpherePoint& a, const SpherePoint& b) {
    if (a.is_infinity() && b.is_infinity()) return 0.0;
    if (a.is_infinity()) return 2.0 / std::sqrt(1.0 + std::norm(b.value()));
    if (b.is_infinity()) return 2.0 / std::sqrt(1.0 + std::norm(a.value()));
    double num = 2.0 * std::abs(a.value() - b.value());
    return num / std::sqrt((1.0 + std::norm(a.value())) * (1.0 + std::norm(b.value())));
}

}  // namespace skt
