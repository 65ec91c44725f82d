#pragma once

#include "mgstab/curve.hpp"
#include "mgstab/polarization.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace mgstab {

struct ProvenancePair {
    std::vector<long long> multirank;
    long long chi = 0;
};

enum class WallKind {
    proper,        // rational hyperplane meeting the simplex
    whole_simplex, // zero functional arising from a nonzero candidate pair
};

const char* wall_kind_name(WallKind kind);

/// Wall of the stability decomposition: the locus sum_i c_i sigma_i = 0 on
/// the simplex, with c_i = r*chi_F*a_i - chi_E*b_i cleared to a primitive
/// integer vector (gcd 1, first nonzero entry positive). boundary_only marks
/// walls meeting the simplex only where some sigma_i = 0.
struct Wall {
    std::vector<long long> coefficients;
    WallKind classification = WallKind::proper;
    bool boundary_only = false;
    std::vector<ProvenancePair> provenance;
};

/// Canonical form of a wall functional: denominators cleared, divided by the
/// gcd, first nonzero entry positive. The all-zero vector stays zero.
std::vector<long long> primitive_coefficients(const std::vector<Rational>& values);

/// The integers chi_F for which the (multirank, chi_F) wall meets the
/// simplex: the wall functional at vertex e_i vanishes at
/// chi_F = chi_E * b_i / (r * a_i), and is increasing in chi_F, so the wall
/// meets the simplex iff chi_F lies between the extreme vertex zeros.
/// Returns nullopt when no integer does.
std::optional<std::pair<long long, long long>>
chi_interval(const DualGraph& graph, const Polarization& pol, long long rank, long long degree,
             const std::vector<long long>& multirank);

/// All walls met by the simplex for the given rank and degree, deduplicated
/// by primitive coefficient vector, proper walls first, each with its full
/// provenance list. Rank-one candidates are indicators of connected proper
/// subcurves; for rank >= 2 all intermediate multiranks are taken, so the
/// result may be a superset of the walls cut out by actual subsheaves.
std::vector<Wall> enumerate_walls(const DualGraph& graph, const Polarization& pol,
                                  long long rank, long long degree);

/// Open cell of the wall arrangement on the simplex, identified by its sign
/// on each proper wall (+1 or -1) and an interior rational representative.
struct Chamber {
    std::vector<int> sign_vector;
    std::vector<Rational> representative;
};

struct ChamberSet {
    std::vector<Chamber> chambers;
    bool exhaustive = true;
};

/// Chambers of the proper-wall arrangement restricted to the simplex.
/// Exact and complete for k <= 3; for k > 3 requires allow_sampling and
/// returns a (possibly incomplete) set found by midpoint-refinement
/// sampling, marked exhaustive = false.
ChamberSet enumerate_chambers(const std::vector<Wall>& walls, std::size_t k,
                              bool allow_sampling = false);

struct Location {
    std::vector<std::size_t> on_walls; // proper wall indices with zero value
    std::vector<int> sign_vector;      // -1, 0, +1 per proper wall
};

/// Exact evaluation of every proper wall functional at sigma.
Location locate(const StabilityParameter& sigma, const std::vector<Wall>& walls);

} // namespace mgstab
