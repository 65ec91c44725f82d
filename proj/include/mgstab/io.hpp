#pragma once

#include "mgstab/census.hpp"
#include "mgstab/curve.hpp"
#include "mgstab/polarization.hpp"
#include "mgstab/quiver.hpp"
#include "mgstab/stability.hpp"
#include "mgstab/walls.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace mgstab::io {

using json = nlohmann::json;

struct Problem {
    DualGraph graph;
    Polarization polarization;
    long long rank = 1;
    long long degree = 0;
};

DualGraph parse_curve(const json& value);
Polarization parse_polarizations(const json& value, const DualGraph& graph);
Problem parse_problem(const json& value);
Problem load_problem(const std::string& path);

/// Comma-separated rationals, e.g. "3/4,1/4".
StabilityParameter parse_sigma(const std::string& text);

/// Comma-separated integers in sorted-component-id order, mapped to graph order.
std::vector<long long> parse_component_values(const std::string& text, const DualGraph& graph);

/// Comma-separated node labels: "n1,n2" or "1,2" (1-based), to 0-based indices.
std::vector<std::size_t> parse_nodes(const std::string& text, const DualGraph& graph);

/// Graph component indices in sorted-id order; reports list per-component
/// data in this order.
std::vector<std::size_t> sorted_component_order(const DualGraph& graph);
std::vector<std::string> sorted_component_ids(const DualGraph& graph);

json rational_json(const Rational& value);

json verdict_report(const DualGraph& graph, const StabilityVerdict& verdict);
json walls_report(const DualGraph& graph, const std::vector<Wall>& walls);
json chambers_report(const DualGraph& graph, const std::vector<Wall>& walls,
                     const ChamberSet& chambers);
json census_report(const DualGraph& graph, const Census& result);
json flips_report(const DualGraph& graph, const FlipReport& report);
json compare_report(const Rational& theta, const Rational& mu_sub, const Rational& mu_ambient);
json hilbert_report(const LinearPolynomial& poly, const Rational& mu);

} // namespace mgstab::io
