#include "mgstab/census.hpp"
#include "mgstab/errors.hpp"
#include "mgstab/io.hpp"
#include "mgstab/quiver.hpp"
#include "mgstab/stability.hpp"
#include "mgstab/walls.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

using mgstab::io::json;

void emit(const json& report, const std::string& output_path) {
    const std::string text = report.dump(2) + "\n";
    if (output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream stream(output_path, std::ios::binary);
        if (!stream) {
            mgstab::fail(mgstab::Errc::ParseError, "cannot write to '" + output_path + "'");
        }
        stream << text;
    }
}

void require_rank_one(const mgstab::io::Problem& problem, const std::string& command) {
    if (problem.rank != 1) {
        mgstab::fail(mgstab::Errc::RankUnsupported,
                     "'" + command + "' works with rank 1 problems; the file declares rank " +
                         std::to_string(problem.rank));
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact stability computations for sheaves on nodal curves"};
    app.require_subcommand(1);

    std::string problem_path;
    std::string output_path;
    std::string sigma_text;
    std::string sigma_start_text;
    std::string sigma_end_text;
    std::string multidegree_text;
    std::string nodes_text;
    std::string multirank_text;
    std::string multirank_ambient_text;
    std::string multirank_sub_text;
    long long chi_value = 0;
    long long chi_ambient = 0;
    long long chi_sub = 0;
    long long m1 = 0;
    long long m2 = 0;
    bool include_nlf = false;
    bool sampling = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("problem", problem_path, "problem file (JSON)")->required();
        cmd->add_option("--output", output_path, "write the report to a file instead of stdout");
    };

    CLI::App* cmd_check = app.add_subcommand("check", "classify one rank-1 sheaf at sigma");
    add_common(cmd_check);
    cmd_check->add_option("--sigma", sigma_text, "comma-separated rationals")->required();
    cmd_check->add_option("--multidegree", multidegree_text, "integers, sorted component order")
        ->required();
    cmd_check->add_option("--not-locally-free", nodes_text, "node labels, e.g. n1,n2");

    CLI::App* cmd_census = app.add_subcommand("census", "all semistable rank-1 sheaves at sigma");
    add_common(cmd_census);
    cmd_census->add_option("--sigma", sigma_text, "comma-separated rationals")->required();
    cmd_census->add_flag("--include-non-locally-free", include_nlf,
                         "also enumerate sheaves that fail to be locally free at node subsets");

    CLI::App* cmd_walls = app.add_subcommand("walls", "walls meeting the stability simplex");
    add_common(cmd_walls);

    CLI::App* cmd_chambers = app.add_subcommand("chambers", "chambers of the wall arrangement");
    add_common(cmd_chambers);
    cmd_chambers->add_flag("--sampling", sampling, "allow non-exhaustive sampling when k > 3");

    CLI::App* cmd_flips = app.add_subcommand("flips", "wall crossings along a sigma segment");
    add_common(cmd_flips);
    cmd_flips->add_option("--sigma-start", sigma_start_text, "comma-separated rationals")->required();
    cmd_flips->add_option("--sigma-end", sigma_end_text, "comma-separated rationals")->required();
    cmd_flips->add_flag("--include-non-locally-free", include_nlf,
                        "also enumerate sheaves that fail to be locally free at node subsets");

    CLI::App* cmd_compare = app.add_subcommand(
        "compare", "weighted quiver dimension of a subsheaf class against the slope comparison");
    add_common(cmd_compare);
    cmd_compare->add_option("--sigma", sigma_text, "comma-separated rationals")->required();
    cmd_compare->add_option("--chi-e", chi_ambient, "Euler characteristic of the ambient class")
        ->required();
    cmd_compare
        ->add_option("--multirank-e", multirank_ambient_text, "integers, sorted component order")
        ->required();
    cmd_compare->add_option("--chi-f", chi_sub, "Euler characteristic of the subsheaf class")
        ->required();
    cmd_compare->add_option("--multirank-f", multirank_sub_text, "integers, sorted component order")
        ->required();
    cmd_compare->add_option("--m1", m1, "first twist")->required();
    cmd_compare->add_option("--m2", m2, "second twist")->required();

    CLI::App* cmd_hilbert = app.add_subcommand("hilbert", "multi-Hilbert polynomial of a class");
    add_common(cmd_hilbert);
    cmd_hilbert->add_option("--sigma", sigma_text, "comma-separated rationals")->required();
    cmd_hilbert->add_option("--chi", chi_value, "Euler characteristic")->required();
    cmd_hilbert->add_option("--multirank", multirank_text, "integers, sorted component order")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        const mgstab::io::Problem problem = mgstab::io::load_problem(problem_path);
        const auto& graph = problem.graph;
        const auto& pol = problem.polarization;

        if (cmd_check->parsed()) {
            const auto sigma = mgstab::io::parse_sigma(sigma_text);
            mgstab::RankOneSheaf sheaf;
            sheaf.tilde_multidegree = mgstab::io::parse_component_values(multidegree_text, graph);
            sheaf.not_locally_free = mgstab::io::parse_nodes(nodes_text, graph);
            const auto verdict = mgstab::check_rank_one(graph, pol, sigma, sheaf);
            emit(mgstab::io::verdict_report(graph, verdict), output_path);
        } else if (cmd_census->parsed()) {
            require_rank_one(problem, "census");
            const auto sigma = mgstab::io::parse_sigma(sigma_text);
            const auto result = mgstab::census(graph, pol, sigma, problem.degree, include_nlf);
            emit(mgstab::io::census_report(graph, result), output_path);
        } else if (cmd_walls->parsed()) {
            const auto walls = mgstab::enumerate_walls(graph, pol, problem.rank, problem.degree);
            emit(mgstab::io::walls_report(graph, walls), output_path);
        } else if (cmd_chambers->parsed()) {
            const auto walls = mgstab::enumerate_walls(graph, pol, problem.rank, problem.degree);
            const auto chambers = mgstab::enumerate_chambers(walls, pol.count(), sampling);
            emit(mgstab::io::chambers_report(graph, walls, chambers), output_path);
        } else if (cmd_flips->parsed()) {
            require_rank_one(problem, "flips");
            const auto start = mgstab::io::parse_sigma(sigma_start_text);
            const auto end = mgstab::io::parse_sigma(sigma_end_text);
            const auto report =
                mgstab::flip_report(graph, pol, problem.degree, start, end, include_nlf);
            emit(mgstab::io::flips_report(graph, report), output_path);
        } else if (cmd_compare->parsed()) {
            const auto sigma = mgstab::io::parse_sigma(sigma_text);
            mgstab::SheafClass ambient{problem.rank, chi_ambient,
                                       mgstab::io::parse_component_values(multirank_ambient_text,
                                                                          graph)};
            mgstab::SheafClass sub{problem.rank, chi_sub,
                                   mgstab::io::parse_component_values(multirank_sub_text, graph)};
            const auto theta = mgstab::theta_of_subsheaf(graph, pol, sigma, ambient, sub, m1, m2);
            const auto mu_sub = mgstab::slope(graph, pol, sigma, sub);
            const auto mu_ambient = mgstab::slope(graph, pol, sigma, ambient);
            emit(mgstab::io::compare_report(theta, mu_sub, mu_ambient), output_path);
        } else if (cmd_hilbert->parsed()) {
            const auto sigma = mgstab::io::parse_sigma(sigma_text);
            mgstab::SheafClass cls{problem.rank, chi_value,
                                   mgstab::io::parse_component_values(multirank_text, graph)};
            const auto poly = mgstab::multi_hilbert(graph, pol, sigma, cls);
            const auto mu = mgstab::slope(graph, pol, sigma, cls);
            emit(mgstab::io::hilbert_report(poly, mu), output_path);
        }
    } catch (const mgstab::Error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == mgstab::Errc::UnsupportedDimension ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
