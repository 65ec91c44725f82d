#include "mgstab/polarization.hpp"
#include "mgstab/errors.hpp"

#include "fixtures.hpp"
#include "generators.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace mgstab;
using mgstab::testsup::fails_with;

TEST_CASE("polarization validation") {
    const auto genus2 = testfix::genus2_graph();
    CHECK_NOTHROW(validate_polarization(genus2, testfix::genus2_polarization()));

    Polarization zero = testfix::genus2_polarization();
    zero.degrees[1][0] = 0;
    CHECK(fails_with(Errc::NonPositiveDegree, [&] { validate_polarization(genus2, zero); }));

    Polarization missing = testfix::genus2_polarization();
    missing.degrees[0].pop_back();
    CHECK(fails_with(Errc::ComponentMismatch, [&] { validate_polarization(genus2, missing); }));
}

TEST_CASE("sigma normalization") {
    const auto scaled = normalize(StabilityParameter{{Rational(3), Rational(1)}});
    CHECK(scaled.sigma == std::vector<Rational>{Rational(3, 4), Rational(1, 4)});

    const auto fixed = normalize(StabilityParameter{{Rational(1, 2), Rational(1, 2)}});
    CHECK(fixed.sigma == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
    CHECK(normalize(fixed).sigma == fixed.sigma);

    CHECK(fails_with(Errc::AllZero, [] { normalize(StabilityParameter{{Rational(0), Rational(0)}}); }));
    CHECK(fails_with(Errc::NegativeEntry,
                     [] { normalize(StabilityParameter{{Rational(-1), Rational(2)}}); }));
}

TEST_CASE("combined degrees") {
    const auto pol = testfix::genus2_polarization();
    CHECK(combined_degrees(pol, StabilityParameter{{Rational(1), Rational(0)}}) ==
          std::vector<Rational>{Rational(1), Rational(1)});
    CHECK(combined_degrees(pol, StabilityParameter{{Rational(3, 4), Rational(1, 4)}}) ==
          std::vector<Rational>{Rational(1), Rational(2)});

    const auto banana_pol = testfix::banana_polarization();
    CHECK(combined_degrees(banana_pol, StabilityParameter{{Rational(1, 2), Rational(1, 2)}}) ==
          std::vector<Rational>{Rational(2), Rational(1)});
}

TEST_CASE("combined degrees are homogeneous in sigma") {
    testgen::Rng rng(771);
    for (int trial = 0; trial < 100; ++trial) {
        const DualGraph graph = testgen::random_graph(rng);
        const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 3));
        const Polarization pol = testgen::random_polarization(rng, graph, k);
        const StabilityParameter sigma = testgen::random_sigma(rng, k);
        const Rational lambda(rng.uniform(1, 9), rng.uniform(1, 4));

        StabilityParameter scaled;
        for (const Rational& s : sigma.sigma) scaled.sigma.push_back(s * lambda);

        const auto base = combined_degrees(pol, sigma);
        const auto rescaled = combined_degrees(pol, scaled);
        REQUIRE(base.size() == rescaled.size());
        for (std::size_t j = 0; j < base.size(); ++j) {
            CHECK(rescaled[j] == base[j] * lambda);
        }
    }
}
