#include "mgstab/stability.hpp"
#include "mgstab/errors.hpp"

#include "fixtures.hpp"
#include "generators.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace mgstab;
using mgstab::testsup::fails_with;

namespace {

StabilityParameter sigma2(const Rational& a, const Rational& b) {
    return StabilityParameter{{a, b}};
}

Rational margin_for(const DualGraph& graph, const StabilityVerdict& verdict,
                    const std::string& component_id) {
    for (const Witness& w : verdict.witnesses) {
        const auto ids = subcurve_ids(graph, w.subcurve);
        if (ids.size() == 1 && ids[0] == component_id) return w.margin;
    }
    FAIL("no singleton witness for " << component_id);
    return Rational(0);
}

} // namespace

TEST_CASE("multi-Hilbert polynomial on the fixtures") {
    const auto genus2 = testfix::genus2_graph();
    const auto pol = testfix::genus2_polarization();
    const SheafClass cls{1, 3, {1, 1}};

    const auto half = multi_hilbert(genus2, pol, sigma2(Rational(1, 2), Rational(1, 2)), cls);
    CHECK(half.constant == 3);
    CHECK(half.slope_coefficient == 4);

    const auto first = multi_hilbert(genus2, pol, sigma2(1, 0), cls);
    CHECK(first.constant == 3);
    CHECK(first.slope_coefficient == 2);

    const auto banana = testfix::banana_graph();
    Polarization single;
    single.names = {"L1"};
    single.degrees = {{Rational(1), Rational(1)}};
    const auto poly = multi_hilbert(banana, single, StabilityParameter{{Rational(1)}},
                                    SheafClass{1, 0, {1, 1}});
    CHECK(poly.constant == 0);
    CHECK(poly.slope_coefficient == 2);
}

TEST_CASE("slope on the fixtures") {
    const auto genus2 = testfix::genus2_graph();
    const auto pol = testfix::genus2_polarization();

    CHECK(slope(genus2, pol, sigma2(1, 0), SheafClass{1, 3, {1, 1}}) == Rational(3, 2));
    CHECK(slope(genus2, pol, sigma2(Rational(3, 4), Rational(1, 4)), SheafClass{1, 1, {1, 0}}) == 1);
    CHECK(slope(genus2, pol, sigma2(1, 1), SheafClass{1, 0, {1, 1}}) == 0);

    CHECK(fails_with(Errc::ZeroMultirank,
                     [&] { slope(genus2, pol, sigma2(1, 0), SheafClass{1, 3, {0, 0}}); }));
    CHECK(fails_with(Errc::AllZero,
                     [&] { slope(genus2, pol, sigma2(0, 0), SheafClass{1, 3, {1, 1}}); }));
}

TEST_CASE("rank-one check on the genus-2 fixture") {
    const auto graph = testfix::genus2_graph();
    const auto pol = testfix::genus2_polarization();
    const auto wall_sigma = sigma2(Rational(3, 4), Rational(1, 4));

    const auto balanced = check_rank_one(graph, pol, wall_sigma, RankOneSheaf{{2, 2}, {}});
    CHECK(balanced.status == Status::stable);
    CHECK(margin_for(graph, balanced, "C1") == 1);
    CHECK(margin_for(graph, balanced, "C2") == 1);

    const auto tilted = check_rank_one(graph, pol, wall_sigma, RankOneSheaf{{1, 3}, {}});
    CHECK(tilted.status == Status::strictly_semistable);
    CHECK(margin_for(graph, tilted, "C1") == 0);

    const auto first_only = check_rank_one(graph, pol, sigma2(1, 0), RankOneSheaf{{1, 3}, {}});
    CHECK(first_only.status == Status::unstable);
    CHECK(margin_for(graph, first_only, "C1") == Rational(-1, 2));
}

TEST_CASE("slope oracle on the fixtures") {
    const auto graph = testfix::genus2_graph();
    const auto pol = testfix::genus2_polarization();
    const auto wall_sigma = sigma2(Rational(3, 4), Rational(1, 4));

    CHECK(oracle_check_rank_one(graph, pol, wall_sigma, RankOneSheaf{{2, 2}, {}}).status ==
          Status::stable);
    CHECK(oracle_check_rank_one(graph, pol, wall_sigma, RankOneSheaf{{1, 3}, {}}).status ==
          Status::strictly_semistable);

    const auto banana = testfix::banana_graph();
    const auto banana_pol = testfix::banana_polarization();
    for (const auto& sigma : {sigma2(1, 0), sigma2(1, 5), sigma2(Rational(2, 7), Rational(1, 3))}) {
        CHECK(oracle_check_rank_one(banana, banana_pol, sigma, RankOneSheaf{{0, 0}, {}}).status ==
              Status::stable);
    }
}

TEST_CASE("verdict is the one recomputed from its margins") {
    testgen::Rng rng(424242);
    for (int trial = 0; trial < 200; ++trial) {
        const DualGraph graph = testgen::random_graph(rng);
        if (graph.components.size() < 2) continue;
        const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 3));
        const Polarization pol = testgen::random_polarization(rng, graph, k);
        const StabilityParameter sigma = testgen::random_sigma(rng, k);
        const RankOneSheaf sheaf = testgen::random_sheaf(rng, graph, true);
        const auto verdict = check_rank_one(graph, pol, sigma, sheaf);
        CHECK(verdict.status == status_from_margins(verdict.witnesses));
        CHECK(verdict.witnesses.size() == connected_proper_subcurves(graph).size());
    }
}

TEST_CASE("oracle equivalence on random instances") {
    testgen::Rng rng(31337);
    for (int trial = 0; trial < 400; ++trial) {
        const DualGraph graph = testgen::random_graph(rng);
        const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 3));
        const Polarization pol = testgen::random_polarization(rng, graph, k);
        const StabilityParameter sigma = testgen::random_sigma(rng, k);
        const RankOneSheaf sheaf = testgen::random_sheaf(rng, graph, true);
        CHECK(check_rank_one(graph, pol, sigma, sheaf).status ==
              oracle_check_rank_one(graph, pol, sigma, sheaf).status);
    }
}

TEST_CASE("verdicts are invariant under scaling") {
    testgen::Rng rng(771177);
    for (int trial = 0; trial < 150; ++trial) {
        const DualGraph graph = testgen::random_graph(rng);
        const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 3));
        const Polarization pol = testgen::random_polarization(rng, graph, k);
        const StabilityParameter sigma = testgen::random_sigma(rng, k);
        const RankOneSheaf sheaf = testgen::random_sheaf(rng, graph, true);
        const auto base = check_rank_one(graph, pol, sigma, sheaf).status;

        StabilityParameter scaled;
        const Rational lambda(rng.uniform(1, 7), rng.uniform(1, 3));
        for (const Rational& s : sigma.sigma) scaled.sigma.push_back(s * lambda);
        CHECK(check_rank_one(graph, pol, scaled, sheaf).status == base);

        Polarization powered = pol;
        const long long p = rng.uniform(2, 5);
        for (auto& row : powered.degrees) {
            for (auto& d : row) d *= p;
        }
        CHECK(check_rank_one(graph, powered, sigma, sheaf).status == base);
    }
}

TEST_CASE("k polarizations reduce to the combined single polarization") {
    testgen::Rng rng(90125);
    for (int trial = 0; trial < 150; ++trial) {
        const DualGraph graph = testgen::random_graph(rng);
        const std::size_t k = static_cast<std::size_t>(rng.uniform(2, 3));
        const Polarization pol = testgen::random_polarization(rng, graph, k);
        const StabilityParameter sigma = testgen::random_sigma(rng, k);
        const RankOneSheaf sheaf = testgen::random_sheaf(rng, graph, true);

        Polarization combined;
        combined.names = {"L"};
        combined.degrees = {combined_degrees(pol, sigma)};
        const StabilityParameter one{{Rational(1)}};

        CHECK(check_rank_one(graph, pol, sigma, sheaf).status ==
              check_rank_one(graph, combined, one, sheaf).status);
    }
}

TEST_CASE("input validation errors") {
    const auto graph = testfix::genus2_graph();
    const auto pol = testfix::genus2_polarization();
    CHECK(fails_with(Errc::AllZero,
                     [&] { check_rank_one(graph, pol, sigma2(0, 0), RankOneSheaf{{1, 1}, {}}); }));
    CHECK(fails_with(Errc::ComponentMismatch, [&] {
        check_rank_one(graph, pol, StabilityParameter{{Rational(1)}}, RankOneSheaf{{1, 1}, {}});
    }));
}
