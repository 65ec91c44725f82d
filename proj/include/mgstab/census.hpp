#pragma once

#include "mgstab/curve.hpp"
#include "mgstab/polarization.hpp"
#include "mgstab/stability.hpp"
#include "mgstab/walls.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace mgstab {

struct CensusEntry {
    std::vector<long long> tilde_multidegree;  // by component index
    std::vector<std::size_t> not_locally_free; // empty unless the S flag is set

    RankOneSheaf sheaf() const { return RankOneSheaf{tilde_multidegree, not_locally_free}; }
};

bool operator==(const CensusEntry& a, const CensusEntry& b);
bool operator<(const CensusEntry& a, const CensusEntry& b);

/// Exhaustive classification of the rank-one sheaves of total degree d at a
/// fixed sigma. The search box per component comes from the subcurve
/// inequality evaluated at the simplex vertices, so it contains every
/// semistable candidate independently of sigma.
struct Census {
    std::vector<CensusEntry> semistable;
    std::vector<CensusEntry> stable;
    std::vector<CensusEntry> strictly_semistable;
    StabilityParameter sigma;
    long long degree = 0;
    bool include_non_locally_free = false;
    std::vector<std::pair<long long, long long>> box; // tilde degree bounds per component
};

/// The per-component enumeration bounds (on deg restricted to the
/// component), before the self-node slack correction. Exposed for the
/// box-completeness check.
std::vector<std::pair<long long, long long>>
census_box(const DualGraph& graph, const Polarization& pol, long long degree);

Census census(const DualGraph& graph, const Polarization& pol, const StabilityParameter& sigma,
              long long degree, bool include_non_locally_free = false);

/// Same census but with every component bound widened by `margin`; used to
/// verify box completeness.
Census census_widened(const DualGraph& graph, const Polarization& pol,
                      const StabilityParameter& sigma, long long degree,
                      bool include_non_locally_free, long long margin);

struct FlipEvent {
    Rational t;             // crossing parameter along the segment
    std::size_t wall_index; // into FlipReport::walls
    Census before;
    Census on_wall;
    Census after;
};

/// Wall crossings along sigma_t = (1-t) start + t end, each with the
/// censuses on both chamber sides and on the wall itself. Chamber-side
/// semistable sets are contained in the wall's semistable set.
struct FlipReport {
    StabilityParameter sigma_start;
    StabilityParameter sigma_end;
    std::vector<Wall> walls; // wall list for this (rank 1, degree) problem
    std::vector<FlipEvent> events;
    std::vector<std::size_t> segment_walls;       // proper walls containing the whole segment
    std::vector<std::size_t> whole_simplex_walls; // indices into walls
    bool include_non_locally_free = false;
};

FlipReport flip_report(const DualGraph& graph, const Polarization& pol, long long degree,
                       const StabilityParameter& sigma_start, const StabilityParameter& sigma_end,
                       bool include_non_locally_free = false);

} // namespace mgstab
