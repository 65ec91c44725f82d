#include "mgstab/walls.hpp"
#include "mgstab/errors.hpp"

#include "fixtures.hpp"
#include "generators.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace mgstab;
using mgstab::testsup::fails_with;

namespace {

Rational wall_at(const Wall& wall, const std::vector<Rational>& sigma) {
    Rational total = 0;
    for (std::size_t i = 0; i < wall.coefficients.size(); ++i) {
        total += Rational(wall.coefficients[i]) * sigma[i];
    }
    return total;
}

Wall proper_wall(std::vector<long long> coefficients) {
    Wall wall;
    wall.coefficients = std::move(coefficients);
    wall.classification = WallKind::proper;
    return wall;
}

} // namespace

TEST_CASE("chi intervals on the fixtures") {
    const auto genus2 = testfix::genus2_graph();
    const auto pol = testfix::genus2_polarization();

    auto left = chi_interval(genus2, pol, 1, 4, {1, 0});
    REQUIRE(left.has_value());
    CHECK(left->first == 1);
    CHECK(left->second == 1);

    auto right = chi_interval(genus2, pol, 1, 4, {0, 1});
    REQUIRE(right.has_value());
    CHECK(right->first == 2);
    CHECK(right->second == 2);

    auto banana = chi_interval(testfix::banana_graph(), testfix::banana_polarization(), 1, 0, {1, 0});
    REQUIRE(banana.has_value());
    CHECK(banana->first == 0);
    CHECK(banana->second == 0);

    // chi strictly between the vertex zeros of two polarizations that agree:
    // no integer chi gives a wall through the simplex.
    Polarization same;
    same.names = {"L1", "L2"};
    same.degrees = {{Rational(1), Rational(1)}, {Rational(2), Rational(2)}};
    auto empty = chi_interval(testfix::banana_graph(), same, 1, 1, {1, 0});
    CHECK(!empty.has_value()); // vertex zeros both 1/2
}

TEST_CASE("wall enumeration on the genus-2 fixture") {
    const auto genus2 = testfix::genus2_graph();
    const auto pol = testfix::genus2_polarization();
    const auto walls = enumerate_walls(genus2, pol, 1, 4);

    REQUIRE(walls.size() == 1);
    const Wall& wall = walls.front();
    CHECK(wall.classification == WallKind::proper);
    CHECK(!wall.boundary_only);
    CHECK(wall.coefficients == std::vector<long long>{1, -3});
    // Locus sigma1 = 3 sigma2.
    CHECK(wall_at(wall, {Rational(3, 4), Rational(1, 4)}) == 0);
    REQUIRE(wall.provenance.size() == 2);
    CHECK(wall.provenance[0].multirank == std::vector<long long>{0, 1});
    CHECK(wall.provenance[0].chi == 2);
    CHECK(wall.provenance[1].multirank == std::vector<long long>{1, 0});
    CHECK(wall.provenance[1].chi == 1);
}

TEST_CASE("whole-simplex wall on the banana fixture") {
    const auto walls =
        enumerate_walls(testfix::banana_graph(), testfix::banana_polarization(), 1, 0);
    REQUIRE(walls.size() == 1);
    CHECK(walls.front().classification == WallKind::whole_simplex);
    CHECK(walls.front().coefficients == std::vector<long long>{0, 0});
    CHECK(walls.front().provenance.size() == 2);
}

TEST_CASE("boundary-touching wall is kept and flagged") {
    // Degree 3 on the genus-2 fixture puts the only wall at sigma2 = 0.
    const auto walls = enumerate_walls(testfix::genus2_graph(), testfix::genus2_polarization(), 1, 3);
    REQUIRE(walls.size() == 1);
    CHECK(walls.front().classification == WallKind::proper);
    CHECK(walls.front().boundary_only);
    CHECK(walls.front().coefficients == std::vector<long long>{0, 1});
}

TEST_CASE("provenance pairs regenerate their wall") {
    testgen::Rng rng(515151);
    for (int trial = 0; trial < 60; ++trial) {
        const DualGraph graph = testgen::random_graph(rng, 4, 6);
        const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 3));
        const Polarization pol = testgen::random_polarization(rng, graph, k);
        const long long rank = rng.uniform(1, 2);
        const long long degree = rng.uniform(-4, 8);
        const long long chi_ambient = degree + rank * (1 - arithmetic_genus(graph));

        for (const Wall& wall : enumerate_walls(graph, pol, rank, degree)) {
            REQUIRE(!wall.provenance.empty());
            for (const ProvenancePair& pair : wall.provenance) {
                std::vector<Rational> values(k);
                for (std::size_t i = 0; i < k; ++i) {
                    Rational b = 0;
                    for (std::size_t j = 0; j < graph.components.size(); ++j) {
                        b += Rational(pair.multirank[j]) * pol.degrees[i][j];
                    }
                    values[i] = Rational(rank) * Rational(pair.chi) * pol.total_degree(i) -
                                Rational(chi_ambient) * b;
                }
                CHECK(primitive_coefficients(values) == wall.coefficients);
            }
        }
    }
}

TEST_CASE("walls are invariant under scaling the polarization degrees") {
    testgen::Rng rng(626262);
    for (int trial = 0; trial < 60; ++trial) {
        const DualGraph graph = testgen::random_graph(rng, 4, 6);
        const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 3));
        const Polarization pol = testgen::random_polarization(rng, graph, k);
        const long long degree = rng.uniform(-4, 8);
        const auto base = enumerate_walls(graph, pol, 1, degree);

        Polarization powered = pol;
        const long long p = rng.uniform(2, 5);
        for (auto& row : powered.degrees) {
            for (auto& d : row) d *= p;
        }
        const auto scaled = enumerate_walls(graph, powered, 1, degree);
        REQUIRE(base.size() == scaled.size());
        for (std::size_t w = 0; w < base.size(); ++w) {
            CHECK(base[w].coefficients == scaled[w].coefficients);
            CHECK(base[w].classification == scaled[w].classification);
        }
    }
}

TEST_CASE("chambers of the genus-2 fixture") {
    const auto walls = enumerate_walls(testfix::genus2_graph(), testfix::genus2_polarization(), 1, 4);
    const auto out = enumerate_chambers(walls, 2);
    CHECK(out.exhaustive);
    REQUIRE(out.chambers.size() == 2);

    // One chamber on each side of sigma1 = 3 sigma2; representatives realize
    // their sign vectors strictly.
    const Chamber& first = out.chambers[0];
    CHECK(first.representative == std::vector<Rational>{Rational(7, 8), Rational(1, 8)});
    CHECK(first.sign_vector == std::vector<int>{1});
    const Chamber& second = out.chambers[1];
    CHECK(second.representative == std::vector<Rational>{Rational(3, 8), Rational(5, 8)});
    CHECK(second.sign_vector == std::vector<int>{-1});
    for (const Chamber& chamber : out.chambers) {
        CHECK(sign(wall_at(walls.front(), chamber.representative)) == chamber.sign_vector[0]);
    }
}

TEST_CASE("chamber enumeration, segment cases") {
    CHECK(enumerate_chambers({}, 2).chambers.size() == 1);
    CHECK(enumerate_chambers({}, 2).chambers.front().representative ==
          std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

    const std::vector<Wall> two{proper_wall({1, -3}), proper_wall({3, -1})};
    CHECK(enumerate_chambers(two, 2).chambers.size() == 3);

    // A wall meeting the segment only at a vertex does not subdivide it.
    const std::vector<Wall> corner{proper_wall({0, 1})};
    CHECK(enumerate_chambers(corner, 2).chambers.size() == 1);
}

TEST_CASE("chamber enumeration in the triangle") {
    CHECK(enumerate_chambers({}, 3).chambers.size() == 1);
    CHECK(enumerate_chambers({}, 3).chambers.front().representative ==
          std::vector<Rational>{Rational(1, 3), Rational(1, 3), Rational(1, 3)});

    // The three medians through the barycenter cut the triangle into six.
    const std::vector<Wall> medians{proper_wall({1, -1, 0}), proper_wall({0, 1, -1}),
                                    proper_wall({1, 0, -1})};
    const auto out = enumerate_chambers(medians, 3);
    CHECK(out.exhaustive);
    REQUIRE(out.chambers.size() == 6);
    std::set<std::vector<int>> signatures;
    for (const Chamber& chamber : out.chambers) {
        Rational sum = 0;
        for (const Rational& s : chamber.representative) {
            CHECK(s >= 0);
            sum += s;
        }
        CHECK(sum == 1);
        for (std::size_t w = 0; w < medians.size(); ++w) {
            const int s = sign(wall_at(medians[w], chamber.representative));
            CHECK(s != 0);
            CHECK(s == chamber.sign_vector[w]);
        }
        signatures.insert(chamber.sign_vector);
    }
    CHECK(signatures.size() == 6);
}

TEST_CASE("triangle chambers cover every off-wall sign vector") {
    testgen::Rng rng(737373);
    for (int trial = 0; trial < 30; ++trial) {
        const DualGraph graph = testgen::random_graph(rng, 4, 6);
        const Polarization pol = testgen::random_polarization(rng, graph, 3);
        const long long degree = rng.uniform(-3, 6);
        const auto walls = enumerate_walls(graph, pol, 1, degree);
        const auto out = enumerate_chambers(walls, 3);

        std::set<std::vector<int>> chamber_signs;
        for (const Chamber& chamber : out.chambers) chamber_signs.insert(chamber.sign_vector);
        CHECK(chamber_signs.size() == out.chambers.size());

        // Random points off every wall must land in an enumerated chamber.
        for (int probe = 0; probe < 40; ++probe) {
            std::vector<Rational> sigma{Rational(rng.uniform(1, 50), 1),
                                        Rational(rng.uniform(1, 50), 1),
                                        Rational(rng.uniform(1, 50), 1)};
            Rational sum = sigma[0] + sigma[1] + sigma[2];
            for (auto& s : sigma) s /= sum;
            std::vector<int> signs;
            bool on_wall = false;
            for (const Wall& wall : walls) {
                if (wall.classification != WallKind::proper) continue;
                const int s = sign(wall_at(wall, sigma));
                if (s == 0) on_wall = true;
                signs.push_back(s);
            }
            if (on_wall) continue;
            CHECK(chamber_signs.count(signs) == 1);
        }
    }
}

TEST_CASE("sampling fallback beyond three polarizations") {
    const std::vector<Wall> one{proper_wall({1, 1, -1, -1})};
    CHECK(fails_with(Errc::UnsupportedDimension, [&] { enumerate_chambers(one, 4); }));

    const auto sampled = enumerate_chambers(one, 4, true);
    CHECK(!sampled.exhaustive);
    REQUIRE(sampled.chambers.size() == 2);
    std::set<std::vector<int>> signs;
    for (const Chamber& chamber : sampled.chambers) {
        CHECK(sign(wall_at(one.front(), chamber.representative)) == chamber.sign_vector[0]);
        signs.insert(chamber.sign_vector);
    }
    CHECK(signs.count({1}) == 1);
    CHECK(signs.count({-1}) == 1);
}

TEST_CASE("locate against the genus-2 wall") {
    const auto walls = enumerate_walls(testfix::genus2_graph(), testfix::genus2_polarization(), 1, 4);

    const auto on = locate(StabilityParameter{{Rational(3, 4), Rational(1, 4)}}, walls);
    CHECK(on.on_walls == std::vector<std::size_t>{0});
    CHECK(on.sign_vector == std::vector<int>{0});

    const auto left = locate(StabilityParameter{{Rational(1), Rational(0)}}, walls);
    CHECK(left.on_walls.empty());
    CHECK(left.sign_vector == std::vector<int>{1});

    const auto right = locate(StabilityParameter{{Rational(0), Rational(1)}}, walls);
    CHECK(right.sign_vector == std::vector<int>{-1});
}
