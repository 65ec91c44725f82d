#include "mgstab/census.hpp"

#include "mgstab/errors.hpp"

#include <algorithm>
#include <functional>

namespace mgstab {

bool operator==(const CensusEntry& a, const CensusEntry& b) {
    return a.tilde_multidegree == b.tilde_multidegree && a.not_locally_free == b.not_locally_free;
}

bool operator<(const CensusEntry& a, const CensusEntry& b) {
    if (a.tilde_multidegree != b.tilde_multidegree) return a.tilde_multidegree < b.tilde_multidegree;
    return a.not_locally_free < b.not_locally_free;
}

namespace {

// Smallest value of the subcurve inequality right-hand side over the whole
// simplex; attained at a vertex since q_D is a mediant of its vertex values.
Rational min_rhs_over_simplex(const DualGraph& graph, const Polarization& pol, long long degree,
                              const Subcurve& sub) {
    const long long genus = arithmetic_genus(graph);
    const Rational degree_excess = Rational(degree) - Rational(2 * genus - 2, 2);
    const SubcurveInvariants inv = subcurve_invariants(graph, sub);
    const Rational offset = Rational(inv.deg_omega_D, 2) - Rational(inv.k_D, 2);
    bool first = true;
    Rational best;
    for (std::size_t i = 0; i < pol.count(); ++i) {
        const Rational q = pol.degree_on(i, sub) / pol.total_degree(i);
        const Rational rhs = q * degree_excess + offset;
        if (first || rhs < best) {
            best = rhs;
            first = false;
        }
    }
    return best;
}

} // namespace

std::vector<std::pair<long long, long long>>
census_box(const DualGraph& graph, const Polarization& pol, long long degree) {
    validate_graph(graph);
    validate_polarization(graph, pol);
    const std::size_t n = graph.components.size();
    std::vector<std::pair<long long, long long>> box;
    if (n == 1) {
        box.emplace_back(degree, degree);
        return box;
    }
    for (std::size_t j = 0; j < n; ++j) {
        Subcurve single{{j}};
        const Subcurve rest = complement(graph, single);
        const long long lo = to_long(ceil_rational(min_rhs_over_simplex(graph, pol, degree, single)));
        const long long hi =
            to_long(floor_rational(Rational(degree) - min_rhs_over_simplex(graph, pol, degree, rest)));
        box.emplace_back(lo, hi);
    }
    return box;
}

namespace {

Census census_impl(const DualGraph& graph, const Polarization& pol, const StabilityParameter& sigma,
                   long long degree, bool include_non_locally_free, long long widen) {
    validate_graph(graph);
    validate_polarization(graph, pol);
    validate_sigma(sigma);

    Census out;
    out.sigma = sigma;
    out.degree = degree;
    out.include_non_locally_free = include_non_locally_free;
    out.box = census_box(graph, pol, degree);
    for (auto& [lo, hi] : out.box) {
        lo -= widen;
        hi += widen;
    }

    const std::size_t n = graph.components.size();
    const auto endpoints = graph.node_endpoints();
    const std::size_t node_count = graph.nodes.size();

    std::vector<std::vector<std::size_t>> node_subsets;
    if (include_non_locally_free) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << node_count); ++mask) {
            std::vector<std::size_t> subset;
            for (std::size_t s = 0; s < node_count; ++s) {
                if (mask & (std::uint64_t{1} << s)) subset.push_back(s);
            }
            node_subsets.push_back(std::move(subset));
        }
    } else {
        node_subsets.emplace_back();
    }

    std::vector<CensusEntry> semistable, stable, strictly;
    for (const auto& subset : node_subsets) {
        // Self-nodes in S shift the degree on their component, so the tilde
        // bounds move accordingly.
        std::vector<long long> self_count(n, 0);
        for (std::size_t s : subset) {
            if (endpoints[s][0] == endpoints[s][1]) ++self_count[endpoints[s][0]];
        }
        std::vector<std::pair<long long, long long>> tilde_box(n);
        for (std::size_t j = 0; j < n; ++j) {
            tilde_box[j] = {out.box[j].first - self_count[j], out.box[j].second - self_count[j]};
        }
        const long long target = degree - static_cast<long long>(subset.size());

        // Suffix sums for pruning the product enumeration.
        std::vector<long long> suffix_lo(n + 1, 0), suffix_hi(n + 1, 0);
        for (std::size_t j = n; j-- > 0;) {
            suffix_lo[j] = suffix_lo[j + 1] + tilde_box[j].first;
            suffix_hi[j] = suffix_hi[j + 1] + tilde_box[j].second;
        }

        std::vector<long long> tilde(n, 0);
        std::function<void(std::size_t, long long)> recurse = [&](std::size_t j, long long remaining) {
            if (j == n) {
                if (remaining != 0) return;
                RankOneSheaf sheaf{tilde, subset};
                const StabilityVerdict verdict = check_rank_one(graph, pol, sigma, sheaf);
                if (verdict.status == Status::unstable) return;
                CensusEntry entry{tilde, subset};
                semistable.push_back(entry);
                if (verdict.status == Status::stable) stable.push_back(entry);
                else strictly.push_back(entry);
                return;
            }
            for (long long v = tilde_box[j].first; v <= tilde_box[j].second; ++v) {
                const long long rest = remaining - v;
                if (rest < suffix_lo[j + 1] || rest > suffix_hi[j + 1]) continue;
                tilde[j] = v;
                recurse(j + 1, rest);
            }
        };
        if (suffix_lo[0] <= target && target <= suffix_hi[0]) {
            recurse(0, target);
        }
    }

    std::sort(semistable.begin(), semistable.end());
    std::sort(stable.begin(), stable.end());
    std::sort(strictly.begin(), strictly.end());
    out.semistable = std::move(semistable);
    out.stable = std::move(stable);
    out.strictly_semistable = std::move(strictly);
    return out;
}

} // namespace

Census census(const DualGraph& graph, const Polarization& pol, const StabilityParameter& sigma,
              long long degree, bool include_non_locally_free) {
    return census_impl(graph, pol, sigma, degree, include_non_locally_free, 0);
}

Census census_widened(const DualGraph& graph, const Polarization& pol,
                      const StabilityParameter& sigma, long long degree,
                      bool include_non_locally_free, long long margin) {
    return census_impl(graph, pol, sigma, degree, include_non_locally_free, margin);
}

FlipReport flip_report(const DualGraph& graph, const Polarization& pol, long long degree,
                       const StabilityParameter& sigma_start, const StabilityParameter& sigma_end,
                       bool include_non_locally_free) {
    validate_graph(graph);
    validate_polarization(graph, pol);
    if (sigma_start.size() != pol.count() || sigma_end.size() != pol.count()) {
        fail(Errc::ComponentMismatch, "sigma length does not match the number of line bundles");
    }

    FlipReport report;
    report.sigma_start = normalize(sigma_start);
    report.sigma_end = normalize(sigma_end);
    report.include_non_locally_free = include_non_locally_free;
    report.walls = enumerate_walls(graph, pol, 1, degree);

    auto sigma_at = [&](const Rational& t) {
        StabilityParameter sigma;
        sigma.sigma.reserve(pol.count());
        for (std::size_t i = 0; i < pol.count(); ++i) {
            sigma.sigma.push_back((Rational(1) - t) * report.sigma_start.sigma[i] +
                                  t * report.sigma_end.sigma[i]);
        }
        return sigma;
    };

    auto value_at = [&](const Wall& wall, const StabilityParameter& sigma) {
        Rational total = 0;
        for (std::size_t i = 0; i < wall.coefficients.size(); ++i) {
            total += Rational(wall.coefficients[i]) * sigma.sigma[i];
        }
        return total;
    };

    // Crossing parameters: exact roots of the wall functionals along the
    // segment; walls vanishing identically on it are listed apart.
    std::vector<std::pair<Rational, std::size_t>> crossings;
    for (std::size_t w = 0; w < report.walls.size(); ++w) {
        const Wall& wall = report.walls[w];
        if (wall.classification == WallKind::whole_simplex) {
            report.whole_simplex_walls.push_back(w);
            continue;
        }
        const Rational hs = value_at(wall, report.sigma_start);
        const Rational he = value_at(wall, report.sigma_end);
        if (hs == 0 && he == 0) {
            report.segment_walls.push_back(w);
            continue;
        }
        if (hs == he) continue; // constant and nonzero along the segment
        const Rational t = hs / (hs - he);
        if (t >= 0 && t <= 1) crossings.emplace_back(t, w);
    }
    std::sort(crossings.begin(), crossings.end());

    std::vector<Rational> distinct;
    for (const auto& [t, w] : crossings) {
        if (distinct.empty() || distinct.back() != t) distinct.push_back(t);
    }

    auto census_at = [&](const Rational& t) {
        return census(graph, pol, sigma_at(t), degree, include_non_locally_free);
    };

    for (const auto& [t, wall_index] : crossings) {
        const std::size_t pos = static_cast<std::size_t>(
            std::lower_bound(distinct.begin(), distinct.end(), t) - distinct.begin());
        const Rational prev = (pos == 0) ? Rational(0) : distinct[pos - 1];
        const Rational next = (pos + 1 < distinct.size()) ? distinct[pos + 1] : Rational(1);
        const Rational before_t = (t == 0) ? Rational(0) : (prev + t) / 2;
        const Rational after_t = (t == 1) ? Rational(1) : (t + next) / 2;

        FlipEvent event;
        event.t = t;
        event.wall_index = wall_index;
        event.before = census_at(before_t);
        event.on_wall = census_at(t);
        event.after = census_at(after_t);
        report.events.push_back(std::move(event));
    }
    return report;
}

} // namespace mgstab
