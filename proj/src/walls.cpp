#include "mgstab/walls.hpp"

#include "mgstab/errors.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace mgstab {

const char* wall_kind_name(WallKind kind) {
    switch (kind) {
        case WallKind::proper: return "proper";
        case WallKind::whole_simplex: return "whole_simplex";
    }
    return "unknown";
}

// Clears denominators, divides by the gcd and makes the first nonzero entry
// positive; the canonical dedup key for wall functionals.
std::vector<long long> primitive_coefficients(const std::vector<Rational>& values) {
    Int lcm_den = 1;
    for (const Rational& v : values) {
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator(v));
    }
    std::vector<Int> ints;
    ints.reserve(values.size());
    for (const Rational& v : values) {
        ints.push_back(numerator(v) * (lcm_den / denominator(v)));
    }
    Int g = 0;
    for (const Int& n : ints) g = boost::multiprecision::gcd(g, abs(n));
    int first_sign = 0;
    for (const Int& n : ints) {
        if (n != 0) {
            first_sign = n.sign();
            break;
        }
    }
    std::vector<long long> out;
    out.reserve(ints.size());
    for (const Int& n : ints) {
        if (g == 0) {
            out.push_back(0);
        } else {
            Int reduced = n / g;
            if (first_sign < 0) reduced = -reduced;
            out.push_back(to_long(reduced));
        }
    }
    return out;
}

namespace {

bool has_both_signs(const std::vector<long long>& c) {
    bool pos = false, neg = false;
    for (long long v : c) {
        if (v > 0) pos = true;
        if (v < 0) neg = true;
    }
    return pos && neg;
}

Rational wall_value(const std::vector<long long>& c, const std::vector<Rational>& sigma) {
    Rational total = 0;
    for (std::size_t i = 0; i < c.size(); ++i) total += Rational(c[i]) * sigma[i];
    return total;
}

// Candidate multiranks for the wall family: indicators of connected proper
// subcurves when rank is 1 (the multiranks of saturated subsheaves of a
// rank-one sheaf), all intermediate vectors otherwise.
std::vector<std::vector<long long>> candidate_multiranks(const DualGraph& graph, long long rank) {
    std::vector<std::vector<long long>> out;
    const std::size_t n = graph.components.size();
    if (rank == 1) {
        for (const Subcurve& sub : connected_proper_subcurves(graph)) {
            std::vector<long long> mr(n, 0);
            for (std::size_t j : sub.component_indices) mr[j] = 1;
            out.push_back(std::move(mr));
        }
        return out;
    }
    std::vector<long long> mr(n, 0);
    while (true) {
        bool all_zero = true, all_rank = true;
        for (long long v : mr) {
            if (v != 0) all_zero = false;
            if (v != rank) all_rank = false;
        }
        if (!all_zero && !all_rank) out.push_back(mr);
        std::size_t pos = 0;
        while (pos < n && mr[pos] == rank) {
            mr[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
        ++mr[pos];
    }
    return out;
}

} // namespace

std::optional<std::pair<long long, long long>>
chi_interval(const DualGraph& graph, const Polarization& pol, long long rank, long long degree,
             const std::vector<long long>& multirank) {
    validate_graph(graph);
    validate_polarization(graph, pol);
    SheafClass probe{rank, 0, multirank};
    validate_class(graph, probe);

    const long long chi_ambient = degree + rank * (1 - arithmetic_genus(graph));
    bool first = true;
    Rational lo, hi;
    for (std::size_t i = 0; i < pol.count(); ++i) {
        Rational b = 0;
        for (std::size_t j = 0; j < graph.components.size(); ++j) {
            b += Rational(multirank[j]) * pol.degrees[i][j];
        }
        // Vertex zero of the wall functional at e_i.
        const Rational z = Rational(chi_ambient) * b / (Rational(rank) * pol.total_degree(i));
        if (first) {
            lo = hi = z;
            first = false;
        } else {
            lo = std::min(lo, z);
            hi = std::max(hi, z);
        }
    }
    const long long chi_lo = to_long(ceil_rational(lo));
    const long long chi_hi = to_long(floor_rational(hi));
    if (chi_lo > chi_hi) return std::nullopt;
    return std::make_pair(chi_lo, chi_hi);
}

std::vector<Wall> enumerate_walls(const DualGraph& graph, const Polarization& pol, long long rank,
                                  long long degree) {
    validate_graph(graph);
    validate_polarization(graph, pol);
    if (rank < 1) {
        fail(Errc::InvalidMultirank, "rank must be positive");
    }

    const long long chi_ambient = degree + rank * (1 - arithmetic_genus(graph));
    const std::size_t k = pol.count();

    std::map<std::vector<long long>, std::vector<ProvenancePair>> by_coefficients;
    for (const auto& multirank : candidate_multiranks(graph, rank)) {
        const auto interval = chi_interval(graph, pol, rank, degree, multirank);
        if (!interval) continue;
        for (long long chi = interval->first; chi <= interval->second; ++chi) {
            std::vector<Rational> values(k);
            for (std::size_t i = 0; i < k; ++i) {
                Rational b = 0;
                for (std::size_t j = 0; j < graph.components.size(); ++j) {
                    b += Rational(multirank[j]) * pol.degrees[i][j];
                }
                values[i] = Rational(rank) * Rational(chi) * pol.total_degree(i) -
                            Rational(chi_ambient) * b;
            }
            by_coefficients[primitive_coefficients(values)].push_back(ProvenancePair{multirank, chi});
        }
    }

    std::vector<Wall> walls;
    Wall whole;
    bool have_whole = false;
    for (auto& [coeffs, provenance] : by_coefficients) {
        std::sort(provenance.begin(), provenance.end(),
                  [](const ProvenancePair& a, const ProvenancePair& b) {
                      if (a.multirank != b.multirank) return a.multirank < b.multirank;
                      return a.chi < b.chi;
                  });
        const bool zero = std::all_of(coeffs.begin(), coeffs.end(), [](long long v) { return v == 0; });
        Wall wall;
        wall.coefficients = coeffs;
        wall.classification = zero ? WallKind::whole_simplex : WallKind::proper;
        wall.boundary_only = !zero && !has_both_signs(coeffs);
        wall.provenance = std::move(provenance);
        if (zero) {
            whole = std::move(wall);
            have_whole = true;
        } else {
            walls.push_back(std::move(wall));
        }
    }
    // The map already orders proper walls lexicographically; the
    // whole-simplex wall, if any, goes last.
    if (have_whole) walls.push_back(std::move(whole));
    return walls;
}

namespace {

using Point2 = std::array<Rational, 2>;
using Polygon = std::vector<Point2>;

// Wall functional in barycentric section coordinates (x, y) = (s1, s2),
// restricted to the plane sum = 1: A x + B y + C.
struct Line2 {
    Rational a, b, c;

    Rational at(const Point2& p) const { return a * p[0] + b * p[1] + c; }
};

Rational polygon_area2(const Polygon& poly) {
    Rational twice = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point2& p = poly[i];
        const Point2& q = poly[(i + 1) % poly.size()];
        twice += p[0] * q[1] - q[0] * p[1];
    }
    if (twice < 0) twice = -twice;
    return twice;
}

Polygon dedup(Polygon poly) {
    Polygon out;
    for (const Point2& p : poly) {
        if (out.empty() || out.back() != p) out.push_back(p);
    }
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    return out;
}

// Clip against the half plane side * line >= 0.
Polygon clip(const Polygon& poly, const Line2& line, int side) {
    Polygon out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& p = poly[i];
        const Point2& q = poly[(i + 1) % n];
        const Rational hp = Rational(side) * line.at(p);
        const Rational hq = Rational(side) * line.at(q);
        if (hp >= 0) out.push_back(p);
        if ((hp > 0 && hq < 0) || (hp < 0 && hq > 0)) {
            const Rational t = hp / (hp - hq);
            out.push_back(Point2{p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
        }
    }
    return dedup(std::move(out));
}

std::vector<Rational> section_to_sigma(const Point2& p, std::size_t k) {
    std::vector<Rational> sigma(k);
    sigma[0] = p[0];
    sigma[1] = p[1];
    if (k == 3) sigma[2] = Rational(1) - p[0] - p[1];
    return sigma;
}

ChamberSet chambers_dim2(const std::vector<const Wall*>& propers) {
    // Segment sigma = (1 - t, t), t in [0, 1]; each wall cuts it in at most
    // one point.
    std::set<Rational> cuts;
    for (const Wall* wall : propers) {
        const Rational c0(wall->coefficients[0]);
        const Rational c1(wall->coefficients[1]);
        if (c0 == c1) continue; // constant on the segment, never zero for a kept wall
        const Rational t = c0 / (c0 - c1);
        if (t >= 0 && t <= 1) cuts.insert(t);
    }
    std::vector<Rational> bounds{Rational(0)};
    for (const Rational& t : cuts) bounds.push_back(t);
    bounds.push_back(Rational(1));

    ChamberSet out;
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        if (!(bounds[i] < bounds[i + 1])) continue;
        const Rational mid = (bounds[i] + bounds[i + 1]) / 2;
        Chamber chamber;
        chamber.representative = {Rational(1) - mid, mid};
        for (const Wall* wall : propers) {
            chamber.sign_vector.push_back(sign(wall_value(wall->coefficients, chamber.representative)));
        }
        out.chambers.push_back(std::move(chamber));
    }
    return out;
}

ChamberSet chambers_dim3(const std::vector<const Wall*>& propers) {
    std::vector<Polygon> cells{Polygon{Point2{Rational(0), Rational(0)},
                                       Point2{Rational(1), Rational(0)},
                                       Point2{Rational(0), Rational(1)}}};
    for (const Wall* wall : propers) {
        const Rational c0(wall->coefficients[0]);
        const Rational c1(wall->coefficients[1]);
        const Rational c2(wall->coefficients[2]);
        const Line2 line{c0 - c2, c1 - c2, c2};
        std::vector<Polygon> next;
        for (const Polygon& cell : cells) {
            for (int side : {+1, -1}) {
                Polygon piece = clip(cell, line, side);
                if (piece.size() >= 3 && polygon_area2(piece) > 0) {
                    next.push_back(std::move(piece));
                }
            }
        }
        cells = std::move(next);
    }

    ChamberSet out;
    for (const Polygon& cell : cells) {
        Point2 mean{Rational(0), Rational(0)};
        for (const Point2& p : cell) {
            mean[0] += p[0];
            mean[1] += p[1];
        }
        mean[0] /= Rational(static_cast<long long>(cell.size()));
        mean[1] /= Rational(static_cast<long long>(cell.size()));
        Chamber chamber;
        chamber.representative = section_to_sigma(mean, 3);
        for (const Wall* wall : propers) {
            chamber.sign_vector.push_back(sign(wall_value(wall->coefficients, chamber.representative)));
        }
        out.chambers.push_back(std::move(chamber));
    }
    std::sort(out.chambers.begin(), out.chambers.end(), [](const Chamber& a, const Chamber& b) {
        return a.representative < b.representative;
    });
    return out;
}

ChamberSet chambers_sampled(const std::vector<const Wall*>& propers, std::size_t k) {
    std::vector<std::vector<Rational>> points;
    points.push_back(std::vector<Rational>(k, Rational(1, static_cast<long long>(k))));
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Rational> p(k, Rational(1, static_cast<long long>(2 * k)));
        p[i] = Rational(static_cast<long long>(k) + 1, static_cast<long long>(2 * k));
        points.push_back(std::move(p));
    }

    auto signs_of = [&](const std::vector<Rational>& sigma) {
        std::vector<int> signs;
        signs.reserve(propers.size());
        for (const Wall* wall : propers) signs.push_back(sign(wall_value(wall->coefficients, sigma)));
        return signs;
    };

    std::map<std::vector<int>, std::vector<Rational>> found;
    auto consider = [&](const std::vector<Rational>& sigma) {
        const auto signs = signs_of(sigma);
        if (std::find(signs.begin(), signs.end(), 0) != signs.end()) return; // landed on a wall
        found.emplace(signs, sigma);
    };
    for (const auto& p : points) consider(p);

    // Midpoint refinement: bisect between representatives of distinct cells
    // until no new sign vector turns up.
    for (int round = 0; round < 8; ++round) {
        std::vector<std::vector<Rational>> reps;
        for (const auto& [signs, rep] : found) reps.push_back(rep);
        const std::size_t before = found.size();
        for (std::size_t a = 0; a < reps.size(); ++a) {
            for (std::size_t b = a + 1; b < reps.size(); ++b) {
                std::vector<Rational> mid(k);
                for (std::size_t i = 0; i < k; ++i) mid[i] = (reps[a][i] + reps[b][i]) / 2;
                consider(mid);
            }
        }
        if (found.size() == before) break;
    }

    ChamberSet out;
    out.exhaustive = false;
    for (const auto& [signs, rep] : found) {
        out.chambers.push_back(Chamber{signs, rep});
    }
    return out;
}

} // namespace

ChamberSet enumerate_chambers(const std::vector<Wall>& walls, std::size_t k, bool allow_sampling) {
    std::vector<const Wall*> propers;
    for (const Wall& wall : walls) {
        if (wall.classification == WallKind::proper) {
            if (wall.coefficients.size() != k) {
                fail(Errc::ComponentMismatch, "wall coefficient length does not match k");
            }
            propers.push_back(&wall);
        }
    }

    if (k == 1) {
        ChamberSet out;
        out.chambers.push_back(Chamber{std::vector<int>(propers.size(), 0), {Rational(1)}});
        // A proper wall in dimension one would be a nonzero functional on a
        // point off its locus; record its sign at the unique point.
        for (std::size_t w = 0; w < propers.size(); ++w) {
            out.chambers.front().sign_vector[w] =
                sign(wall_value(propers[w]->coefficients, out.chambers.front().representative));
        }
        return out;
    }
    if (k == 2) return chambers_dim2(propers);
    if (k == 3) return chambers_dim3(propers);
    if (!allow_sampling) {
        fail(Errc::UnsupportedDimension,
             "exact chamber enumeration supports k <= 3; pass the sampling flag for larger k");
    }
    return chambers_sampled(propers, k);
}

Location locate(const StabilityParameter& sigma, const std::vector<Wall>& walls) {
    const StabilityParameter normalized = normalize(sigma);
    Location out;
    std::size_t index = 0;
    for (const Wall& wall : walls) {
        if (wall.classification != WallKind::proper) {
            ++index;
            continue;
        }
        if (wall.coefficients.size() != normalized.size()) {
            fail(Errc::ComponentMismatch, "sigma length does not match wall coefficients");
        }
        const int s = sign(wall_value(wall.coefficients, normalized.sigma));
        out.sign_vector.push_back(s);
        if (s == 0) out.on_walls.push_back(index);
        ++index;
    }
    return out;
}

} // namespace mgstab
