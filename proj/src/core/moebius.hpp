#pragma once

#include <array>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sphere.hpp"

namespace skt {

// Fractional-linear transformation z -> (az+b)/(cz+d), stored with ad-bc
// normalized to 1 (up to the global sign ambiguity of PSL(2,C)).
class MoebiusMap {
public:
    MoebiusMap() : a_(1), b_(0), c_(0), d_(1) {}
    MoebiusMap(cplx a, cplx b, cplx c, cplx d);

    static MoebiusMap identity() { return MoebiusMap(); }
    static MoebiusMap translation(cplx t) { return MoebiusMap(1, t, 0, 1); }
    static MoebiusMap scaling(cplx s) { return MoebiusMap(s, 0, 0, 1); }
    static MoebiusMap inversion() { return MoebiusMap(0, 1, 1, 0); }  // z -> 1/z

    cplx a() const { return a_; }
    cplx b() const { return b_; }
    cplx c() const { return c_; }
    cplx d() const { return d_; }

    cplx trace() const { return a_ + d_; }
    cplx trace_squared() const { return (a_ + d_) * (a_ + d_); }

    MoebiusMap inverse() const { return MoebiusMap(d_, -b_, -c_, a_); }

    SpherePoint apply(const SpherePoint& p) const;
    cplx apply_finite(cplx z) const;  // caller guarantees the image is finite

    // Entrywise distance up to the PSL sign, after both are normalized.
    double projective_distance(const MoebiusMap& other) const;

private:
    cplx a_, b_, c_, d_;
};

// Acts as f after g (matrix product f*g).
MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g);

enum class MapKind { identity, parabolic, elliptic, loxodromic };

struct MapClass {
    MapKind kind;
    cplx trace_squared;
    // identity: none; parabolic: one; elliptic/loxodromic: two.
    std::vector<SpherePoint> fixed_points;
};

// Trace classification with |tr^2 - 4| < 1e-9 calling parabolic.
MapClass classify(const MoebiusMap& f);

const char* to_string(MapKind k);

// A circle or a line on the sphere together with a choice of one of the two
// complementary disks.  For a proper circle, inside=true selects the bounded
// component; for a line, inside=true selects the half-plane to the left of
// `direction`.
class Circle {
public:
    static Circle circle(cplx center, double radius, bool inside = true);
    static Circle line(cplx point, cplx direction, bool inside = true);

    bool is_line() const { return is_line_; }
    cplx center() const { return center_; }
    double radius() const { return radius_; }
    cplx point() const { return center_; }
    cplx direction() const { return direction_; }
    bool inside() const { return inside_; }

    Circle with_inside(bool inside) const {
        Circle c = *this;
        c.inside_ = inside;
        return c;
    }
    Circle flipped() const { return with_inside(!inside_); }

    // Signed boundary distance: positive on the bounded side (circle) or the
    // left of `direction` (line).
    double side(cplx p) const;

    // Membership in the selected open disk.
    bool disk_contains(const SpherePoint& p) const;
    bool boundary_contains(cplx p, double tol = 1e-9) const;

    // Three points on the boundary, counterclockwise around the selected disk.
    std::array<SpherePoint, 3> sample_points() const;

    // A point interior to the selected disk.
    SpherePoint disk_point() const;

private:
    Circle() = default;
    bool is_line_ = false;
    cplx center_{0.0, 0.0};    // circle: center; line: a point on it
    double radius_ = 1.0;      // circle only
    cplx direction_{1.0, 0.0}; // line only, unit modulus
    bool inside_ = true;
};

// Image of a circle under a Moebius map, with the selected disk transported.
Circle map_circle(const MoebiusMap& f, const Circle& c);

// Circle through three distinct sphere points (at most one infinite); used by
// tests as the independent 3-point oracle and by map_circle's line fallback.
Circle circle_through(const SpherePoint& p1, const SpherePoint& p2, const SpherePoint& p3);

// JSON encodings:
//   MoebiusMap: {"a":[re,im],"b":[re,im],"c":[re,im],"d":[re,im]}
//   Circle:     {"center":[re,im],"radius":r,"inside":b}
//               {"line":{"point":[re,im],"direction":[re,im]},"inside":b}
void to_json(nlohmann::json& j, const MoebiusMap& m);
void from_json(const nlohmann::json& j, MoebiusMap& m);
void to_json(nlohmann::json& j, const Circle& c);
void from_json(const nlohmann::json& j, Circle& c);

}  // namespace skt
