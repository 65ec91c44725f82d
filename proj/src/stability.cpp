#include "mgstab/stability.hpp"

#include "mgstab/errors.hpp"

namespace mgstab {

const char* status_name(Status status) {
    switch (status) {
        case Status::stable: return "stable";
        case Status::strictly_semistable: return "strictly_semistable";
        case Status::unstable: return "unstable";
    }
    return "unknown";
}

Status status_from_margins(const std::vector<Witness>& witnesses) {
    bool zero = false;
    for (const Witness& w : witnesses) {
        if (w.margin < 0) return Status::unstable;
        if (w.margin == 0) zero = true;
    }
    return zero ? Status::strictly_semistable : Status::stable;
}

namespace {

void check_common(const DualGraph& graph, const Polarization& pol, const StabilityParameter& sigma) {
    validate_graph(graph);
    validate_polarization(graph, pol);
    validate_sigma(sigma);
    if (sigma.size() != pol.count()) {
        fail(Errc::ComponentMismatch, "sigma length does not match the number of line bundles");
    }
}

// sum_i sigma_i * deg_D(L_i)
Rational sigma_weighted_degree(const Polarization& pol, const StabilityParameter& sigma,
                               const Subcurve& sub) {
    Rational total = 0;
    for (std::size_t i = 0; i < pol.count(); ++i) {
        total += sigma.sigma[i] * pol.degree_on(i, sub);
    }
    return total;
}

Rational sigma_weighted_total(const Polarization& pol, const StabilityParameter& sigma) {
    Rational total = 0;
    for (std::size_t i = 0; i < pol.count(); ++i) {
        total += sigma.sigma[i] * pol.total_degree(i);
    }
    return total;
}

} // namespace

LinearPolynomial multi_hilbert(const DualGraph& graph, const Polarization& pol,
                               const StabilityParameter& sigma, const SheafClass& cls) {
    check_common(graph, pol, sigma);
    validate_class(graph, cls);
    Rational sigma_sum = 0;
    for (const Rational& s : sigma.sigma) sigma_sum += s;
    Rational slope_coeff = 0;
    for (std::size_t i = 0; i < pol.count(); ++i) {
        Rational weighted = 0;
        for (std::size_t j = 0; j < graph.components.size(); ++j) {
            weighted += Rational(cls.multirank[j]) * pol.degrees[i][j];
        }
        slope_coeff += sigma.sigma[i] * weighted;
    }
    return LinearPolynomial{Rational(cls.chi) * sigma_sum, slope_coeff};
}

Rational slope(const DualGraph& graph, const Polarization& pol, const StabilityParameter& sigma,
               const SheafClass& cls) {
    const LinearPolynomial poly = multi_hilbert(graph, pol, sigma, cls);
    return Rational(cls.chi) / poly.slope_coefficient;
}

StabilityVerdict check_rank_one(const DualGraph& graph, const Polarization& pol,
                                const StabilityParameter& sigma, const RankOneSheaf& sheaf) {
    check_common(graph, pol, sigma);
    validate_sheaf(graph, sheaf);

    const long long deg_total = sheaf_chi_deg(graph, sheaf).deg;
    const long long genus = arithmetic_genus(graph);
    // deg E - deg w_C / 2
    const Rational degree_excess = Rational(deg_total) - Rational(2 * genus - 2, 2);
    const Rational denom = sigma_weighted_total(pol, sigma);

    StabilityVerdict verdict;
    for (const Subcurve& sub : connected_proper_subcurves(graph)) {
        const SubcurveInvariants inv = subcurve_invariants(graph, sub);
        const Rational q = sigma_weighted_degree(pol, sigma, sub) / denom;
        const Rational rhs = q * degree_excess + Rational(inv.deg_omega_D, 2) - Rational(inv.k_D, 2);
        const Rational margin = Rational(deg_on_subcurve(graph, sheaf, sub)) - rhs;
        verdict.witnesses.push_back(Witness{sub, margin});
    }
    verdict.status = status_from_margins(verdict.witnesses);
    return verdict;
}

StabilityVerdict oracle_check_rank_one(const DualGraph& graph, const Polarization& pol,
                                       const StabilityParameter& sigma, const RankOneSheaf& sheaf) {
    check_common(graph, pol, sigma);
    validate_sheaf(graph, sheaf);

    const long long chi_total = sheaf_chi_deg(graph, sheaf).chi;
    const Rational denom_total = sigma_weighted_total(pol, sigma);
    const Rational mu_total = Rational(chi_total) / denom_total;

    StabilityVerdict verdict;
    for (const Subcurve& sub : connected_proper_subcurves(graph)) {
        // Maximal subsheaf supported on D: sections vanishing on the
        // complement, so chi is computed from the complement restriction.
        const Subcurve comp = complement(graph, sub);
        const long long chi_comp =
            deg_on_subcurve(graph, sheaf, comp) + subcurve_invariants(graph, comp).chi_O_D;
        const long long chi_sub = chi_total - chi_comp;
        const Rational mu_sub = Rational(chi_sub) / sigma_weighted_degree(pol, sigma, sub);
        verdict.witnesses.push_back(Witness{sub, mu_total - mu_sub});
    }
    verdict.status = status_from_margins(verdict.witnesses);
    return verdict;
}

} // namespace mgstab
