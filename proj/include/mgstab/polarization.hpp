#pragma once

#include "mgstab/curve.hpp"
#include "mgstab/rational.hpp"

#include <string>
#include <vector>

namespace mgstab {

/// Fibre degrees of the relatively ample Q-line bundles L_1, ..., L_k:
/// row i holds the positive rational degree of L_i on each component,
/// columns in graph component order.
struct Polarization {
    std::vector<std::string> names;                // parallel to rows; may be empty
    std::vector<std::vector<Rational>> degrees;    // k rows, one column per component

    std::size_t count() const { return degrees.size(); }

    /// Total degree a_i of L_i on the whole curve.
    Rational total_degree(std::size_t i) const;

    /// Degree of L_i on the subcurve D.
    Rational degree_on(std::size_t i, const Subcurve& sub) const;
};

void validate_polarization(const DualGraph& graph, const Polarization& pol);

/// Point of the stability space: k nonnegative rationals, not all zero.
struct StabilityParameter {
    std::vector<Rational> sigma;

    std::size_t size() const { return sigma.size(); }
};

/// Nonnegativity and not-all-zero; throws NegativeEntry or AllZero.
void validate_sigma(const StabilityParameter& sigma);

/// Scales sigma so its entries sum to 1 (the slice Sigma'). Idempotent.
StabilityParameter normalize(const StabilityParameter& sigma);

/// Per-component degrees of the combined bundle: entry_j = sum_i sigma_i deg_j L_i.
std::vector<Rational> combined_degrees(const Polarization& pol, const StabilityParameter& sigma);

} // namespace mgstab
