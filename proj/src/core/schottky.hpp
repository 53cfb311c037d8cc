#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "moebius.hpp"
#include "rational.hpp"

namespace skt {

// A letter of the free group F_g: +i stands for the i-th generator (1-based),
// -i for its inverse.
using Letter = int;

inline Letter letter_inverse(Letter l) { return -l; }

// Reduced word in the generators; empty = identity.
struct GroupWord {
    std::vector<Letter> letters;

    size_t length() const { return letters.size(); }
    bool is_reduced() const {
        for (size_t i = 1; i < letters.size(); ++i)
            if (letters[i] == -letters[i - 1]) return false;
        return true;
    }
    std::string str() const;  // e.g. "a1.A2.a1" with A = inverse
};

// All reduced words of length exactly n; count is 2g(2g-1)^(n-1) for n>=1.
// Throws DepthLimitError when the count exceeds `budget`.
std::vector<GroupWord> enumerate_words(unsigned genus, unsigned n, std::uint64_t budget = 5'000'000);

// Exact reduced-word count 2g(2g-1)^(n-1) (1 for n=0).
BigInt reduced_word_count(unsigned genus, unsigned n);

enum class SchottkyValidity { classical, tangent_degenerate, invalid };

const char* to_string(SchottkyValidity v);

struct PairGap {
    int i, j;      // 1-based disk indices
    double gap;    // |c_i - c_j| - (r_i + r_j)
};

struct PairingResidual {
    int generator;          // 1-based
    double center_dev;      // |center(gamma_i(ext D_{2i-1})) - center(D_2i)|
    double radius_dev;
    bool orientation_ok;    // the image disk is the interior of D_{2i}
};

struct SchottkyDiagnostics {
    std::vector<PairGap> gaps;                 // all unordered disk pairs
    double min_gap = 0.0;
    std::vector<std::pair<int, int>> overlaps; // pairs with gap < -tol
    std::vector<std::pair<int, int>> tangencies;
    std::vector<PairingResidual> pairings;
    std::optional<cplx> tangency_point;
    std::optional<int> parabolic_generator;    // 1-based
};

// 2g disks paired by g generators; gamma_i maps the exterior (closure
// complement) of D_{2i-1} onto the interior of D_{2i}.
struct SchottkyData {
    unsigned genus = 0;
    std::vector<Circle> disks;        // D_1..D_2g, selected disk = bounded side
    std::vector<MoebiusMap> generators;
    SchottkyValidity validity = SchottkyValidity::invalid;
    SchottkyDiagnostics diagnostics;

    const MoebiusMap& letter_map(Letter l) const;  // gamma_i or its inverse
    // Target disk of a letter: T(+i) = D_2i, T(-i) = D_{2i-1}.
    const Circle& target_disk(Letter l) const;
    MoebiusMap word_map(const GroupWord& w) const;

    std::vector<MoebiusMap> inverses;  // filled by build_schottky
};

// Classifies the configuration as classical / tangent_degenerate / invalid
// with full diagnostics.  When `strict`, an overlap raises OverlapError and a
// broken pairing raises InvalidPairingError instead of returning `invalid`.
SchottkyData build_schottky(const std::vector<Circle>& disks,
                            const std::vector<MoebiusMap>& generators, bool strict = false,
                            double tol = 1e-9);

// Standard classical example: 2g unit-radius disks on the real axis paired by
// hyperbolic maps z -> c2 - r1 r2 / (z - c1).
SchottkyData standard_schottky(unsigned genus);

// Same but with the last pair tangent and its generator parabolic, the
// boundary-of-Schottky-space configuration.
SchottkyData tangent_schottky(unsigned genus);

// (generator index, fixed point) of a parabolic generator, if any.
std::optional<std::pair<int, SpherePoint>> detect_parabolic_cusp(const SchottkyData& s);

struct DiskNode {
    GroupWord word;       // nonempty reduced word; depth = word length
    Circle disk;          // prefix(word) applied to target_disk(last letter)
    std::uint32_t parent; // index into nodes; undefined for depth-1 nodes
    std::uint32_t depth;
    bool leaf;
};

struct StopRule {
    unsigned max_depth = 6;
    double max_radius = 0.0;            // 0 disables the radius stop
    std::uint64_t node_budget = 5'000'000;
};

// Nested-disk approximation of the limit set.  Depth-1 nodes are the 2g
// original disks (single-letter words); a node's children append every letter
// except the inverse of its last one.  Levels are stored contiguously.
struct DiskTree {
    unsigned genus = 0;
    std::vector<DiskNode> nodes;
    std::vector<std::size_t> level_offset;  // level_offset[d] = first index of depth d+1

    std::size_t depth() const { return level_offset.size() - 1; }
    std::size_t count_at_depth(std::size_t d) const {
        return level_offset[d] - level_offset[d - 1];
    }
    double min_radius_at_depth(std::size_t d) const;
    double max_radius_at_depth(std::size_t d) const;
    std::size_t leaf_count() const;

    // Worst containment margin r_parent - (dist + r_child) over depth>=2 nodes.
    double min_containment_margin() const;

    void write_point_cloud_csv(std::ostream& os) const;  // re,im,depth of leaf centers
};

// Expands until every leaf has radius < max_radius or depth = max_depth.
// Requires a classical group.  Throws ContractionFailureError if a child disk
// escapes its parent by more than 1e-9, DepthLimitError past the node budget.
DiskTree limit_set(const SchottkyData& s, const StopRule& stop);

struct ExhaustionLevel {
    unsigned n;
    BigInt boundary_curves;  // 2g(2g-1)^n
    BigInt copies;           // 1 + sum_{k<n} 2g(2g-1)^k
    double min_radius;       // over the disks realizing the boundary curves
    double max_radius;
};

struct ExhaustionStats {
    unsigned genus = 0;
    std::vector<ExhaustionLevel> levels;  // n = 0..n_max
};

// Exact per-level counts plus radius extrema read from the disk tree.
ExhaustionStats exhaustion_stats(const SchottkyData& s, unsigned n_max,
                                 std::uint64_t node_budget = 5'000'000);

// Formula-only variant (no group needed, no radii).
ExhaustionStats exhaustion_counts(unsigned genus, unsigned n_max);

nlohmann::json scene_to_json(const SchottkyData& s);
SchottkyData scene_from_json(const nlohmann::json& j, bool strict = false);
nlohmann::json diagnostics_to_json(const SchottkyData& s);
nlohmann::json stats_to_json(const ExhaustionStats& st);

}  // namespace skt
