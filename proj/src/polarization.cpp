#include "mgstab/polarization.hpp"

#include "mgstab/errors.hpp"

namespace mgstab {

Rational Polarization::total_degree(std::size_t i) const {
    Rational total = 0;
    for (const Rational& d : degrees[i]) total += d;
    return total;
}

Rational Polarization::degree_on(std::size_t i, const Subcurve& sub) const {
    Rational total = 0;
    for (std::size_t j : sub.component_indices) total += degrees[i][j];
    return total;
}

void validate_polarization(const DualGraph& graph, const Polarization& pol) {
    if (pol.degrees.empty()) {
        fail(Errc::ComponentMismatch, "polarization must contain at least one line bundle");
    }
    for (std::size_t i = 0; i < pol.degrees.size(); ++i) {
        if (pol.degrees[i].size() != graph.components.size()) {
            fail(Errc::ComponentMismatch,
                 "polarization row " + std::to_string(i) + " does not cover every component");
        }
        for (std::size_t j = 0; j < pol.degrees[i].size(); ++j) {
            if (pol.degrees[i][j] <= 0) {
                fail(Errc::NonPositiveDegree,
                     "degree of line bundle " + std::to_string(i) + " on component '" +
                         graph.components[j].id + "' is not positive");
            }
        }
    }
}

void validate_sigma(const StabilityParameter& sigma) {
    bool any = false;
    for (const Rational& s : sigma.sigma) {
        if (s < 0) {
            fail(Errc::NegativeEntry, "sigma entries must be nonnegative");
        }
        if (s > 0) any = true;
    }
    if (!any) {
        fail(Errc::AllZero, "sigma must have a positive entry");
    }
}

StabilityParameter normalize(const StabilityParameter& sigma) {
    validate_sigma(sigma);
    Rational total = 0;
    for (const Rational& s : sigma.sigma) total += s;
    StabilityParameter out;
    out.sigma.reserve(sigma.sigma.size());
    for (const Rational& s : sigma.sigma) out.sigma.push_back(s / total);
    return out;
}

std::vector<Rational> combined_degrees(const Polarization& pol, const StabilityParameter& sigma) {
    validate_sigma(sigma);
    if (sigma.size() != pol.count()) {
        fail(Errc::ComponentMismatch, "sigma length does not match the number of line bundles");
    }
    const std::size_t n = pol.degrees.front().size();
    std::vector<Rational> out(n, Rational(0));
    for (std::size_t i = 0; i < pol.count(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[j] += sigma.sigma[i] * pol.degrees[i][j];
        }
    }
    return out;
}

} // namespace mgstab
