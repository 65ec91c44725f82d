#pragma once

#include "mgstab/curve.hpp"
#include "mgstab/polarization.hpp"

#include <vector>

namespace mgstab {

/// Smallest twist m0 >= 1 beyond which first cohomology of every semistable
/// sheaf of the given rank and degree twisted by L_i^m vanishes, so Hilbert
/// polynomial values are honest section counts: the smallest integer
/// exceeding (2g - 2 - d/r) / a_i for every i.
long long regularity_bound(const DualGraph& graph, const Polarization& pol,
                           long long rank, long long degree);

/// (P_1(m1), P_1(m2), ..., P_k(m1), P_k(m2)) with P_i(m) = chi + r*m*a_i.
struct DimensionVector {
    std::vector<long long> entries;
    long long m1 = 0;
    long long m2 = 0;

    std::size_t pairs() const { return entries.size() / 2; }
    long long at(std::size_t i, int slot) const { return entries[2 * i + static_cast<std::size_t>(slot)]; }
};

DimensionVector dimension_vector(const DualGraph& graph, const Polarization& pol,
                                 long long rank, long long degree, long long m1, long long m2);

/// King-style weights induced by sigma on the two-layer quiver:
/// theta_{j1} = sigma_j / sum_i sigma_i d_{i1},
/// theta_{j2} = -sigma_j / sum_i sigma_i d_{i2}.
/// The weighted dimension of the full module is exactly zero.
struct ThetaWeights {
    std::vector<Rational> theta; // theta_11, theta_12, ..., theta_k1, theta_k2
};

ThetaWeights theta_weights(const DimensionVector& dvec, const StabilityParameter& sigma);

/// Weighted dimension of the submodule induced by the subsheaf class F
/// inside the module of the ambient class E:
///   sum_j theta_{j1} P^F_j(m1) + theta_{j2} P^F_j(m2)
///     = P^sigma_F(m1)/P^sigma_E(m1) - P^sigma_F(m2)/P^sigma_E(m2).
/// Its sign equals the sign of mu(F) - mu(E) for every m1 < m2 with
/// P^sigma_E(m1) > 0.
Rational theta_of_subsheaf(const DualGraph& graph, const Polarization& pol,
                           const StabilityParameter& sigma, const SheafClass& ambient,
                           const SheafClass& sub, long long m1, long long m2);

} // namespace mgstab
