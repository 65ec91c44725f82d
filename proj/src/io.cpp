#include "mgstab/io.hpp"

#include "mgstab/errors.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace mgstab::io {

namespace {

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string token;
    std::stringstream stream(text);
    while (std::getline(stream, token, ',')) {
        // trim surrounding spaces
        const auto begin = token.find_first_not_of(" \t");
        const auto end = token.find_last_not_of(" \t");
        out.push_back(begin == std::string::npos ? "" : token.substr(begin, end - begin + 1));
    }
    return out;
}

Rational rational_from_json(const json& value) {
    if (value.is_number_integer()) {
        return Rational(static_cast<long long>(value.get<long long>()));
    }
    if (value.is_string()) {
        return parse_rational(value.get<std::string>());
    }
    fail(Errc::ParseError, "expected an integer or a \"p/q\" string, got " + value.dump());
}

} // namespace

DualGraph parse_curve(const json& value) {
    if (!value.is_object() || !value.contains("components") || !value.contains("nodes")) {
        fail(Errc::ParseError, "curve must be an object with 'components' and 'nodes'");
    }
    DualGraph graph;
    for (const auto& comp : value.at("components")) {
        if (!comp.contains("id") || !comp.contains("genus") || !comp.at("id").is_string() ||
            !comp.at("genus").is_number_integer()) {
            fail(Errc::ParseError, "component entries must be {\"id\": str, \"genus\": int}");
        }
        graph.components.push_back(
            Component{comp.at("id").get<std::string>(), comp.at("genus").get<long long>()});
    }
    for (const auto& node : value.at("nodes")) {
        if (!node.is_array() || node.size() != 2 || !node[0].is_string() || !node[1].is_string()) {
            fail(Errc::ParseError, "node entries must be [id, id] pairs");
        }
        graph.nodes.emplace_back(node[0].get<std::string>(), node[1].get<std::string>());
    }
    if (value.contains("metadata")) {
        graph.metadata_json = value.at("metadata").dump();
    }
    validate_graph(graph);
    return graph;
}

Polarization parse_polarizations(const json& value, const DualGraph& graph) {
    if (!value.is_array() || value.empty()) {
        fail(Errc::ParseError, "'polarizations' must be a nonempty array");
    }
    Polarization pol;
    for (const auto& entry : value) {
        if (!entry.is_object() || !entry.contains("degrees") || !entry.at("degrees").is_object()) {
            fail(Errc::ParseError, "each polarization needs a 'degrees' object");
        }
        pol.names.push_back(entry.value("name", "L" + std::to_string(pol.names.size() + 1)));
        const auto& degrees = entry.at("degrees");
        std::vector<Rational> row;
        row.reserve(graph.components.size());
        for (const auto& comp : graph.components) {
            if (!degrees.contains(comp.id)) {
                fail(Errc::ComponentMismatch,
                     "polarization '" + pol.names.back() + "' has no degree for component '" +
                         comp.id + "'");
            }
            row.push_back(rational_from_json(degrees.at(comp.id)));
        }
        if (degrees.size() != graph.components.size()) {
            fail(Errc::ComponentMismatch,
                 "polarization '" + pol.names.back() + "' lists a component not in the curve");
        }
        pol.degrees.push_back(std::move(row));
    }
    validate_polarization(graph, pol);
    return pol;
}

Problem parse_problem(const json& value) {
    if (!value.is_object() || !value.contains("curve") || !value.contains("polarizations")) {
        fail(Errc::ParseError, "problem file needs 'curve' and 'polarizations'");
    }
    Problem problem;
    problem.graph = parse_curve(value.at("curve"));
    problem.polarization = parse_polarizations(value.at("polarizations"), problem.graph);
    if (value.contains("rank")) {
        if (!value.at("rank").is_number_integer()) fail(Errc::ParseError, "'rank' must be an integer");
        problem.rank = value.at("rank").get<long long>();
        if (problem.rank < 1) fail(Errc::ParseError, "'rank' must be positive");
    }
    if (value.contains("degree")) {
        if (!value.at("degree").is_number_integer()) {
            fail(Errc::ParseError, "'degree' must be an integer");
        }
        problem.degree = value.at("degree").get<long long>();
    }
    return problem;
}

Problem load_problem(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) {
        fail(Errc::ParseError, "cannot open problem file '" + path + "'");
    }
    json value;
    try {
        stream >> value;
    } catch (const json::exception& e) {
        fail(Errc::ParseError, std::string("malformed JSON: ") + e.what());
    }
    return parse_problem(value);
}

StabilityParameter parse_sigma(const std::string& text) {
    StabilityParameter sigma;
    for (const auto& token : split_csv(text)) {
        sigma.sigma.push_back(parse_rational(token));
    }
    validate_sigma(sigma);
    return sigma;
}

std::vector<std::size_t> sorted_component_order(const DualGraph& graph) {
    std::vector<std::size_t> order(graph.components.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return graph.components[a].id < graph.components[b].id;
    });
    return order;
}

std::vector<std::string> sorted_component_ids(const DualGraph& graph) {
    std::vector<std::string> ids;
    for (std::size_t j : sorted_component_order(graph)) ids.push_back(graph.components[j].id);
    return ids;
}

std::vector<long long> parse_component_values(const std::string& text, const DualGraph& graph) {
    const auto tokens = split_csv(text);
    if (tokens.size() != graph.components.size()) {
        fail(Errc::ComponentMismatch, "expected " + std::to_string(graph.components.size()) +
                                          " comma-separated values, got " +
                                          std::to_string(tokens.size()));
    }
    const auto order = sorted_component_order(graph);
    std::vector<long long> values(graph.components.size(), 0);
    for (std::size_t pos = 0; pos < tokens.size(); ++pos) {
        const Rational value = parse_rational(tokens[pos]);
        if (denominator(value) != 1) {
            fail(Errc::ParseError, "expected an integer, got '" + tokens[pos] + "'");
        }
        values[order[pos]] = to_long(numerator(value));
    }
    return values;
}

std::vector<std::size_t> parse_nodes(const std::string& text, const DualGraph& graph) {
    std::vector<std::size_t> out;
    if (text.empty()) return out;
    for (auto token : split_csv(text)) {
        if (!token.empty() && (token.front() == 'n' || token.front() == 'N')) {
            token.erase(token.begin());
        }
        const Rational value = parse_rational(token);
        if (denominator(value) != 1 || value < 1) {
            fail(Errc::UnknownNode, "node labels are n1, n2, ...; got '" + token + "'");
        }
        const long long index = to_long(numerator(value));
        if (static_cast<std::size_t>(index) > graph.nodes.size()) {
            fail(Errc::UnknownNode, "node n" + std::to_string(index) + " is out of range");
        }
        out.push_back(static_cast<std::size_t>(index - 1));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

json rational_json(const Rational& value) {
    return rational_string(value);
}

namespace {

json sigma_json(const StabilityParameter& sigma) {
    json out = json::array();
    for (const Rational& s : sigma.sigma) out.push_back(rational_json(s));
    return out;
}

std::string node_label(std::size_t index) {
    return "n" + std::to_string(index + 1);
}

// Multidegree-style vectors are reported in sorted-component-id order.
json permuted_values(const std::vector<long long>& values, const std::vector<std::size_t>& order) {
    json out = json::array();
    for (std::size_t j : order) out.push_back(values[j]);
    return out;
}

json census_entries(const Census& result, const std::vector<std::size_t>& order) {
    auto rows = [&](const std::vector<CensusEntry>& entries) {
        std::vector<std::pair<std::vector<long long>, std::vector<std::size_t>>> sorted;
        for (const CensusEntry& entry : entries) {
            std::vector<long long> permuted;
            for (std::size_t j : order) permuted.push_back(entry.tilde_multidegree[j]);
            sorted.emplace_back(std::move(permuted), entry.not_locally_free);
        }
        std::sort(sorted.begin(), sorted.end());
        json out = json::array();
        for (const auto& [multidegree, nodes] : sorted) {
            if (result.include_non_locally_free) {
                json labels = json::array();
                for (std::size_t s : nodes) labels.push_back(node_label(s));
                out.push_back(json{{"multidegree", multidegree}, {"not_locally_free", labels}});
            } else {
                out.push_back(multidegree);
            }
        }
        return out;
    };
    json out;
    out["semistable"] = rows(result.semistable);
    out["stable"] = rows(result.stable);
    out["strictly_semistable"] = rows(result.strictly_semistable);
    out["sigma"] = sigma_json(result.sigma);
    return out;
}

json wall_json(const DualGraph& graph, const Wall& wall) {
    const auto order = sorted_component_order(graph);
    json provenance = json::array();
    for (const ProvenancePair& pair : wall.provenance) {
        provenance.push_back(
            json{{"multirank", permuted_values(pair.multirank, order)}, {"chi", pair.chi}});
    }
    return json{{"coefficients", wall.coefficients},
                {"classification", wall_kind_name(wall.classification)},
                {"boundary_only", wall.boundary_only},
                {"provenance", provenance}};
}

json wall_assumptions() {
    return json{{"wall_family",
                 "all (multirank, chi) pairs whose wall meets the simplex; may strictly contain "
                 "the walls of saturated subsheaves of semistable sheaves"}};
}

json box_json(const DualGraph& graph, const Census& result) {
    json out;
    for (std::size_t j = 0; j < graph.components.size(); ++j) {
        out[graph.components[j].id] = json::array({result.box[j].first, result.box[j].second});
    }
    return out;
}

} // namespace

json verdict_report(const DualGraph& graph, const StabilityVerdict& verdict) {
    json witnesses = json::array();
    for (const Witness& w : verdict.witnesses) {
        witnesses.push_back(
            json{{"subcurve", subcurve_ids(graph, w.subcurve)}, {"margin", rational_json(w.margin)}});
    }
    return json{{"status", status_name(verdict.status)},
                {"witnesses", witnesses},
                {"assumptions",
                 json{{"subcurve_family", "connected proper subcurves"},
                      {"sheaf_model", "line bundle on the partial normalization at S"}}}};
}

json walls_report(const DualGraph& graph, const std::vector<Wall>& walls) {
    json rows = json::array();
    for (const Wall& wall : walls) rows.push_back(wall_json(graph, wall));
    return json{{"walls", rows},
                {"component_order", sorted_component_ids(graph)},
                {"assumptions", wall_assumptions()}};
}

json chambers_report(const DualGraph& graph, const std::vector<Wall>& walls,
                     const ChamberSet& chambers) {
    json rows = json::array();
    for (const Chamber& chamber : chambers.chambers) {
        json signs = json::array();
        for (int s : chamber.sign_vector) signs.push_back(s > 0 ? "+" : "-");
        json rep = json::array();
        for (const Rational& r : chamber.representative) rep.push_back(rational_json(r));
        rows.push_back(json{{"sign_vector", signs}, {"representative", rep}});
    }
    json walls_rows = json::array();
    for (const Wall& wall : walls) walls_rows.push_back(wall_json(graph, wall));
    json assumptions = wall_assumptions();
    assumptions["exhaustive"] = chambers.exhaustive;
    return json{{"chambers", rows},
                {"walls", walls_rows},
                {"component_order", sorted_component_ids(graph)},
                {"assumptions", assumptions}};
}

json census_report(const DualGraph& graph, const Census& result) {
    const auto order = sorted_component_order(graph);
    json out = census_entries(result, order);
    out["degree"] = result.degree;
    out["component_order"] = sorted_component_ids(graph);
    out["assumptions"] = json{{"box", box_json(graph, result)},
                              {"include_non_locally_free", result.include_non_locally_free},
                              {"sheaf_model", "line bundle on the partial normalization at S"}};
    return out;
}

json flips_report(const DualGraph& graph, const FlipReport& report) {
    const auto order = sorted_component_order(graph);
    json events = json::array();
    for (const FlipEvent& event : report.events) {
        events.push_back(json{{"t", rational_json(event.t)},
                              {"wall_index", event.wall_index},
                              {"census_before", census_entries(event.before, order)},
                              {"census_on_wall", census_entries(event.on_wall, order)},
                              {"census_after", census_entries(event.after, order)}});
    }
    json walls_rows = json::array();
    for (const Wall& wall : report.walls) walls_rows.push_back(wall_json(graph, wall));
    json assumptions = wall_assumptions();
    assumptions["include_non_locally_free"] = report.include_non_locally_free;
    return json{{"sigma_start", sigma_json(report.sigma_start)},
                {"sigma_end", sigma_json(report.sigma_end)},
                {"events", events},
                {"segment_walls", report.segment_walls},
                {"whole_simplex_walls", report.whole_simplex_walls},
                {"walls", walls_rows},
                {"component_order", sorted_component_ids(graph)},
                {"assumptions", assumptions}};
}

json compare_report(const Rational& theta, const Rational& mu_sub, const Rational& mu_ambient) {
    const int theta_sign = sign(theta);
    const int slope_sign = sign(mu_sub - mu_ambient);
    return json{{"theta", rational_json(theta)},
                {"mu_f", rational_json(mu_sub)},
                {"mu_e", rational_json(mu_ambient)},
                {"signs_agree", theta_sign == slope_sign},
                {"assumptions",
                 json{{"submodule_dimensions", "Euler characteristics of the twisted subsheaf"}}}};
}

json hilbert_report(const LinearPolynomial& poly, const Rational& mu) {
    return json{{"constant", rational_json(poly.constant)},
                {"slope_coefficient", rational_json(poly.slope_coefficient)},
                {"mu", rational_json(mu)}};
}

} // namespace mgstab::io
