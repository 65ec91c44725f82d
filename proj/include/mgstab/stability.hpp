#pragma once

#include "mgstab/curve.hpp"
#include "mgstab/polarization.hpp"

#include <vector>

namespace mgstab {

/// On a curve the multi-Hilbert polynomial is linear in the twist:
/// P(t) = constant + slope_coefficient * t.
struct LinearPolynomial {
    Rational constant;
    Rational slope_coefficient;

    Rational at(long long t) const { return constant + slope_coefficient * Rational(t); }
};

enum class Status {
    stable,
    strictly_semistable,
    unstable,
};

const char* status_name(Status status);

struct Witness {
    Subcurve subcurve;
    Rational margin;
};

/// Verdict plus the full margin list, one entry per connected proper
/// subcurve in canonical order. unstable iff some margin < 0, stable iff all
/// margins > 0, strictly semistable iff the minimum margin is exactly 0.
struct StabilityVerdict {
    Status status = Status::stable;
    std::vector<Witness> witnesses;
};

Status status_from_margins(const std::vector<Witness>& witnesses);

/// constant = chi * sum sigma_i;
/// slope_coefficient = sum_i sigma_i (sum_j multirank_j deg_j L_i).
LinearPolynomial multi_hilbert(const DualGraph& graph, const Polarization& pol,
                               const StabilityParameter& sigma, const SheafClass& cls);

/// mu = chi / slope_coefficient; the denominator is positive for nonzero
/// multirank and a valid polarization.
Rational slope(const DualGraph& graph, const Polarization& pol,
               const StabilityParameter& sigma, const SheafClass& cls);

/// Rank-one semistability via the subcurve inequality: for each connected
/// proper subcurve D,
///   deg_D F  >=  q_D (deg F - deg w_C / 2) + deg_D w_C / 2 - k_D / 2,
/// with q_D = (sum_i sigma_i deg_D L_i) / (sum_i sigma_i deg L_i); strict
/// inequality everywhere means stable.
StabilityVerdict check_rank_one(const DualGraph& graph, const Polarization& pol,
                                const StabilityParameter& sigma, const RankOneSheaf& sheaf);

/// Independent route to the same verdict: for each connected proper subcurve
/// D compare the slope of the maximal subsheaf supported on D (its chi is
/// computed from the complement via Euler characteristics) with the slope of
/// the sheaf itself. Margins are slope differences, so they are not
/// comparable to check_rank_one margins; the statuses must agree.
StabilityVerdict oracle_check_rank_one(const DualGraph& graph, const Polarization& pol,
                                       const StabilityParameter& sigma, const RankOneSheaf& sheaf);

} // namespace mgstab
