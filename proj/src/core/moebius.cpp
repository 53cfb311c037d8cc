#include "moebius.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

namespace skt {

namespace {

constexpr double kDegenerateTol = 1e-14;
constexpr double kParabolicTol = 1e-9;
constexpr double kIdentityTol = 1e-12;

cplx read_cplx(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2)
        throw ConfigError("expected complex number as [re, im]");
    return cplx(j[0].get<double>(), j[1].get<double>());
}

nlohmann::json write_cplx(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

}  // namespace

MoebiusMap::MoebiusMap(cplx a, cplx b, cplx c, cplx d) : a_(a), b_(b), c_(c), d_(d) {
    cplx det = a_ * d_ - b_ * c_;
    if (std::abs(det) < kDegenerateTol)
        throw DegenerateMatrixError("MoebiusMap: |det| < 1e-14");
    cplx s = std::sqrt(det);
    a_ /= s;
    b_ /= s;
    c_ /= s;
    d_ /= s;
}

SpherePoint MoebiusMap::apply(const SpherePoint& p) const {
    if (p.is_infinity()) {
        if (std::abs(c_) == 0.0) return SpherePoint::infinity();
        return SpherePoint(a_ / c_);
    }
    cplx z = p.value();
    cplx den = c_ * z + d_;
    if (std::abs(den) == 0.0) return SpherePoint::infinity();
    cplx w = (a_ * z + b_) / den;
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return SpherePoint::infinity();
    return SpherePoint(w);
}

cplx MoebiusMap::apply_finite(cplx z) const { return (a_ * z + b_) / (c_ * z + d_); }

double MoebiusMap::projective_distance(const MoebiusMap& other) const {
    auto entry_max = [](cplx p, cplx q, cplx r, cplx s) {
        return std::max(std::max(std::abs(p), std::abs(q)), std::max(std::abs(r), std::abs(s)));
    };
    double dm = entry_max(a_ - other.a_, b_ - other.b_, c_ - other.c_, d_ - other.d_);
    double dp = entry_max(a_ + other.a_, b_ + other.b_, c_ + other.c_, d_ + other.d_);
    return std::min(dm, dp);
}

MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g) {
    return MoebiusMap(f.a() * g.a() + f.b() * g.c(), f.a() * g.b() + f.b() * g.d(),
                      f.c() * g.a() + f.d() * g.c(), f.c() * g.b() + f.d() * g.d());
}

MapClass classify(const MoebiusMap& f) {
    MapClass mc;
    mc.trace_squared = f.trace_squared();
    if (std::abs(f.b()) <= kIdentityTol && std::abs(f.c()) <= kIdentityTol &&
        std::abs(f.a() - f.d()) <= kIdentityTol) {
        mc.kind = MapKind::identity;
        return mc;
    }
    cplx t2 = mc.trace_squared;
    if (std::abs(t2 - 4.0) < kParabolicTol) {
        mc.kind = MapKind::parabolic;
        if (std::abs(f.c()) > kIdentityTol)
            mc.fixed_points.push_back(SpherePoint((f.a() - f.d()) / (2.0 * f.c())));
        else
            mc.fixed_points.push_back(SpherePoint::infinity());
        return mc;
    }
    if (std::abs(t2.imag()) < kParabolicTol && t2.real() >= -kParabolicTol && t2.real() < 4.0)
        mc.kind = MapKind::elliptic;
    else
        mc.kind = MapKind::loxodromic;

    if (std::abs(f.c()) > kIdentityTol) {
        cplx disc = std::sqrt(t2 - 4.0);
        mc.fixed_points.push_back(SpherePoint((f.a() - f.d() + disc) / (2.0 * f.c())));
        mc.fixed_points.push_back(SpherePoint((f.a() - f.d() - disc) / (2.0 * f.c())));
    } else {
        mc.fixed_points.push_back(SpherePoint::infinity());
        mc.fixed_points.push_back(SpherePoint(f.b() / (f.d() - f.a())));
    }
    return mc;
}

const char* to_string(MapKind k) {
    switch (k) {
        case MapKind::identity: return "identity";
        case MapKind::parabolic: return "parabolic";
        case MapKind::elliptic: return "elliptic";
        case MapKind::loxodromic: return "loxodromic";
    }
    return "?";
}

Circle Circle::circle(cplx center, double radius, bool inside) {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw ConfigError("Circle: radius must be positive and finite");
    Circle c;
    c.is_line_ = false;
    c.center_ = center;
    c.radius_ = radius;
    c.inside_ = inside;
    return c;
}

Circle Circle::line(cplx point, cplx direction, bool inside) {
    double n = std::abs(direction);
    if (!(n > 0.0)) throw ConfigError("Circle: line direction must be nonzero");
    Circle c;
    c.is_line_ = true;
    c.center_ = point;
    c.direction_ = direction / n;
    c.inside_ = inside;
    return c;
}

double Circle::side(cplx p) const {
    if (is_line_) {
        cplx rel = p - center_;
        return direction_.real() * rel.imag() - direction_.imag() * rel.real();
    }
    return radius_ - std::abs(p - center_);
}

bool Circle::disk_contains(const SpherePoint& p) const {
    if (p.is_infinity()) {
        if (is_line_) return false;  // infinity lies on the line-circle
        return !inside_;
    }
    double s = side(p.value());
    return inside_ ? s > 0.0 : s < 0.0;
}

bool Circle::boundary_contains(cplx p, double tol) const { return std::abs(side(p)) <= tol; }

std::array<SpherePoint, 3> Circle::sample_points() const {
    if (is_line_)
        return {SpherePoint(center_ - direction_), SpherePoint(center_),
                SpherePoint(center_ + direction_)};
    return {SpherePoint(center_ + radius_), SpherePoint(center_ + cplx(0, 1) * radius_),
            SpherePoint(center_ - radius_)};
}

SpherePoint Circle::disk_point() const {
    if (is_line_) {
        cplx normal = cplx(0, 1) * direction_;  // points into the left half-plane
        return SpherePoint(center_ + (inside_ ? normal : -normal));
    }
    if (inside_) return SpherePoint(center_);
    return SpherePoint::infinity();
}

Circle circle_through(const SpherePoint& p1, const SpherePoint& p2, const SpherePoint& p3) {
    int n_inf = (p1.is_infinity() ? 1 : 0) + (p2.is_infinity() ? 1 : 0) + (p3.is_infinity() ? 1 : 0);
    if (n_inf > 1) throw ConfigError("circle_through: points must be distinct");
    if (n_inf == 1) {
        cplx a, b;
        if (p1.is_infinity()) {
            a = p2.value();
            b = p3.value();
        } else if (p2.is_infinity()) {
            a = p1.value();
            b = p3.value();
        } else {
            a = p1.value();
            b = p2.value();
        }
        return Circle::line(a, b - a);
    }
    cplx z1 = p1.value(), z2 = p2.value(), z3 = p3.value();
    cplx u = z2 - z1, v = z3 - z1;
    double cross = u.real() * v.imag() - u.imag() * v.real();
    double scale = std::max({std::abs(u), std::abs(v), std::abs(z3 - z2)});
    if (scale == 0.0) throw ConfigError("circle_through: points must be distinct");
    if (std::abs(cross) <= 1e-12 * scale * scale) {
        return Circle::line(z1, std::abs(u) > std::abs(v) ? u : v);
    }
    double su = std::norm(z2) - std::norm(z1);
    double sv = std::norm(z3) - std::norm(z1);
    // 2*u . (x,y) = su ; 2*v . (x,y) = sv
    double det = 4.0 * cross;
    double x = (2.0 * su * v.imag() - 2.0 * sv * u.imag()) / det;
    double y = (2.0 * sv * u.real() - 2.0 * su * v.real()) / det;
    cplx center(x, y);
    double r = (std::abs(z1 - center) + std::abs(z2 - center) + std::abs(z3 - center)) / 3.0;
    return Circle::circle(center, r);
}

namespace {

// Transport the selected disk: choose result.inside so the image of an
// interior witness lands in the selected disk of the image circle.
Circle orient_image(const MoebiusMap& f, const Circle& src, Circle img) {
    std::vector<SpherePoint> witnesses;
    if (src.is_line()) {
        cplx normal = cplx(0, 1) * src.direction();
        double sign = src.inside() ? 1.0 : -1.0;
        witnesses.emplace_back(src.point() + sign * normal);
        witnesses.emplace_back(src.point() + 2.0 * sign * normal);
        witnesses.emplace_back(src.point() + src.direction() + 0.5 * sign * normal);
    } else if (src.inside()) {
        witnesses.emplace_back(src.center());
        witnesses.emplace_back(src.center() + 0.5 * src.radius());
        witnesses.emplace_back(src.center() + cplx(0, 0.5) * src.radius());
    } else {
        witnesses.push_back(SpherePoint::infinity());
        witnesses.emplace_back(src.center() + 2.0 * src.radius());
        witnesses.emplace_back(src.center() + cplx(0, 3.0) * src.radius());
    }
    for (const auto& w : witnesses) {
        SpherePoint q = f.apply(w);
        if (q.is_infinity()) {
            if (!img.is_line()) return img.with_inside(false);
            continue;  // infinity sits on the image line, ambiguous
        }
        double s = img.side(q.value());
        double margin = img.is_line() ? 1e-12 * (1.0 + std::abs(q.value()))
                                      : 1e-12 * std::max(img.radius(), 1.0);
        if (std::abs(s) > margin) return img.with_inside(s > 0.0);
    }
    throw Error(ErrorClass::module, "map_circle: could not transport orientation");
}

}  // namespace

Circle map_circle(const MoebiusMap& f, const Circle& c) {
    Circle img = Circle::circle(0.0, 1.0);
    bool have = false;

    if (std::abs(f.c()) == 0.0) {
        cplx s = f.a() / f.d();
        cplx t = f.b() / f.d();
        if (c.is_line()) {
            img = Circle::line(s * c.point() + t, s * c.direction());
        } else {
            img = Circle::circle(s * c.center() + t, std::abs(s) * c.radius());
        }
        have = true;
    } else {
        cplx pole = -f.d() / f.c();
        if (c.is_line()) {
            double dist = std::abs(c.side(pole));
            if (dist > 1e-13 * (1.0 + std::abs(pole))) {
                // reflection of the pole across the line
                cplx rel = pole - c.point();
                cplx refl = c.point() + c.direction() * std::conj(rel / c.direction());
                cplx center = f.apply_finite(refl);
                double radius = std::abs(f.apply_finite(c.point()) - center);
                img = Circle::circle(center, radius);
                have = true;
            }
        } else {
            cplx rel = pole - c.center();
            double dist = std::abs(rel);
            if (std::abs(dist - c.radius()) > 1e-13 * std::max(c.radius(), 1.0)) {
                // symmetric point of the pole maps to the image center
                cplx sym = c.center() + c.radius() * c.radius() / std::conj(rel);
                cplx center = f.apply_finite(sym);
                cplx far = dist > 0.0 ? c.center() - c.radius() * rel / dist
                                      : c.center() + c.radius();
                double radius = std::abs(f.apply_finite(far) - center);
                img = Circle::circle(center, radius);
                have = true;
            }
        }
        if (!have) {
            // pole on the boundary: the image is a line
            auto pts = c.sample_points();
            std::vector<SpherePoint> good;
            for (const auto& p : pts) {
                SpherePoint q = f.apply(p);
                if (!q.is_infinity()) good.push_back(q);
            }
            if (c.is_line()) {
                SpherePoint q = f.apply(SpherePoint::infinity());
                if (!q.is_infinity()) good.push_back(q);
            }
            if (good.size() < 2)
                throw Error(ErrorClass::module, "map_circle: degenerate image");
            // pick the two best-separated images
            double best = -1.0;
            cplx pa = 0, pb = 1;
            for (size_t i = 0; i < good.size(); ++i)
                for (size_t j = i + 1; j < good.size(); ++j) {
                    double d = std::abs(good[i].value() - good[j].value());
                    if (d > best) {
                        best = d;
                        pa = good[i].value();
                        pb = good[j].value();
                    }
                }
            img = Circle::line(pa, pb - pa);
            have = true;
        }
    }
    return orient_image(f, c, img);
}

void to_json(nlohmann::json& j, const MoebiusMap& m) {
    j = nlohmann::json{{"a", write_cplx(m.a())},
                       {"b", write_cplx(m.b())},
                       {"c", write_cplx(m.c())},
                       {"d", write_cplx(m.d())}};
}

void from_json(const nlohmann::json& j, MoebiusMap& m) {
    m = MoebiusMap(read_cplx(j.at("a")), read_cplx(j.at("b")), read_cplx(j.at("c")),
                   read_cplx(j.at("d")));
}

void to_json(nlohmann::json& j, const Circle& c) {
    if (c.is_line()) {
        j = nlohmann::json{
            {"line",
             nlohmann::json{{"point", write_cplx(c.point())}, {"direction", write_cplx(c.direction())}}},
            {"inside", c.inside()}};
    } else {
        j = nlohmann::json{
            {"center", write_cplx(c.center())}, {"radius", c.radius()}, {"inside", c.inside()}};
    }
}

void from_json(const nlohmann::json& j, Circle& c) {
    bool inside = j.value("inside", true);
    if (j.contains("line")) {
        const auto& l = j.at("line");
        c = Circle::line(read_cplx(l.at("point")), read_cplx(l.at("direction")), inside);
    } else {
        c = Circle::circle(read_cplx(j.at("center")), j.at("radius").get<double>(), inside);
    }
}

}  // namespace skt
