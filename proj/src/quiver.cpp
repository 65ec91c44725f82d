#include "mgstab/quiver.hpp"

#include "mgstab/errors.hpp"
#include "mgstab/stability.hpp"

#include <algorithm>

namespace mgstab {

long long regularity_bound(const DualGraph& graph, const Polarization& pol, long long rank,
                           long long degree) {
    validate_graph(graph);
    validate_polarization(graph, pol);
    if (rank < 1) {
        fail(Errc::InvalidMultirank, "rank must be positive");
    }
    const long long genus = arithmetic_genus(graph);
    const Rational excess = Rational(2 * genus - 2) - Rational(degree, rank);
    Rational worst = 0;
    bool first = true;
    for (std::size_t i = 0; i < pol.count(); ++i) {
        const Rational bound = excess / pol.total_degree(i);
        if (first || bound > worst) {
            worst = bound;
            first = false;
        }
    }
    const long long m0 = to_long(floor_rational(worst)) + 1;
    return std::max<long long>(1, m0);
}

DimensionVector dimension_vector(const DualGraph& graph, const Polarization& pol, long long rank,
                                 long long degree, long long m1, long long m2) {
    if (m2 <= m1) {
        fail(Errc::OrderViolation, "m2 must exceed m1");
    }
    const long long m0 = regularity_bound(graph, pol, rank, degree);
    if (m1 < m0) {
        fail(Errc::BelowRegularity,
             "m1 = " + std::to_string(m1) + " is below the regularity bound " + std::to_string(m0));
    }
    const long long chi = degree + rank * (1 - arithmetic_genus(graph));
    DimensionVector dvec;
    dvec.m1 = m1;
    dvec.m2 = m2;
    for (std::size_t i = 0; i < pol.count(); ++i) {
        for (long long m : {m1, m2}) {
            const Rational value = Rational(chi) + Rational(rank) * Rational(m) * pol.total_degree(i);
            if (denominator(value) != 1) {
                fail(Errc::NonIntegralDimension,
                     "P_" + std::to_string(i + 1) + "(" + std::to_string(m) +
                         ") = " + rational_string(value) + " is not an integer");
            }
            if (value <= 0) {
                fail(Errc::NonPositiveDimension,
                     "P_" + std::to_string(i + 1) + "(" + std::to_string(m) +
                         ") = " + rational_string(value) + " is not positive");
            }
            dvec.entries.push_back(to_long(numerator(value)));
        }
    }
    return dvec;
}

ThetaWeights theta_weights(const DimensionVector& dvec, const StabilityParameter& sigma) {
    validate_sigma(sigma);
    const std::size_t k = dvec.pairs();
    if (sigma.size() != k) {
        fail(Errc::ComponentMismatch, "sigma length does not match the dimension vector");
    }
    Rational denom1 = 0, denom2 = 0;
    for (std::size_t i = 0; i < k; ++i) {
        denom1 += sigma.sigma[i] * Rational(dvec.at(i, 0));
        denom2 += sigma.sigma[i] * Rational(dvec.at(i, 1));
    }
    ThetaWeights out;
    for (std::size_t j = 0; j < k; ++j) {
        out.theta.push_back(sigma.sigma[j] / denom1);
        out.theta.push_back(-sigma.sigma[j] / denom2);
    }
    return out;
}

Rational theta_of_subsheaf(const DualGraph& graph, const Polarization& pol,
                           const StabilityParameter& sigma, const SheafClass& ambient,
                           const SheafClass& sub, long long m1, long long m2) {
    if (m2 <= m1) {
        fail(Errc::OrderViolation, "m2 must exceed m1");
    }
    const LinearPolynomial poly_ambient = multi_hilbert(graph, pol, sigma, ambient);
    const LinearPolynomial poly_sub = multi_hilbert(graph, pol, sigma, sub);
    const Rational denom1 = poly_ambient.at(m1);
    if (denom1 <= 0) {
        fail(Errc::NonPositiveDenominator,
             "P^sigma_E(m1) = " + rational_string(denom1) + " is not positive");
    }
    const Rational denom2 = poly_ambient.at(m2); // > denom1 since the slope coefficient is positive
    return poly_sub.at(m1) / denom1 - poly_sub.at(m2) / denom2;
}

} // namespace mgstab
