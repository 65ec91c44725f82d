#include "mgstab/census.hpp"
#include "mgstab/curve.hpp"
#include "mgstab/errors.hpp"
#include "mgstab/io.hpp"
#include "mgstab/polarization.hpp"
#include "mgstab/quiver.hpp"
#include "mgstab/stability.hpp"
#include "mgstab/walls.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;

namespace pybind11::detail {

// mgstab::Rational <-> fractions.Fraction, exact in both directions.
template <>
struct type_caster<mgstab::Rational> {
    PYBIND11_TYPE_CASTER(mgstab::Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (src.is_none() || py::isinstance<py::float_>(src)) return false;
        try {
            py::object fraction_type = py::module_::import("fractions").attr("Fraction");
            py::object fraction = fraction_type(py::reinterpret_borrow<py::object>(src));
            value = mgstab::parse_rational(py::cast<std::string>(py::str(fraction)));
            return true;
        } catch (const std::exception&) {
            return false;
        }
    }

    static handle cast(const mgstab::Rational& src, return_value_policy, handle) {
        py::object fraction_type = py::module_::import("fractions").attr("Fraction");
        return fraction_type(py::str(mgstab::rational_string(src))).release();
    }
};

} // namespace pybind11::detail

namespace {

mgstab::StabilityParameter to_sigma(const std::vector<mgstab::Rational>& values) {
    return mgstab::StabilityParameter{values};
}

mgstab::Subcurve to_subcurve(const mgstab::DualGraph& graph, const std::vector<std::string>& ids) {
    return mgstab::make_subcurve(graph, ids);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact stability computations for sheaves on nodal curves";

    py::register_exception<mgstab::Error>(m, "StabilityError");

    py::class_<mgstab::Component>(m, "Component")
        .def(py::init<std::string, long long>(), py::arg("id"), py::arg("genus"))
        .def_readonly("id", &mgstab::Component::id)
        .def_readonly("genus", &mgstab::Component::genus);

    py::class_<mgstab::DualGraph>(m, "DualGraph")
        .def(py::init([](const std::vector<std::pair<std::string, long long>>& components,
                         const std::vector<std::pair<std::string, std::string>>& nodes,
                         const std::string& metadata_json) {
                 mgstab::DualGraph graph;
                 for (const auto& [id, genus] : components) {
                     graph.components.push_back(mgstab::Component{id, genus});
                 }
                 graph.nodes = nodes;
                 graph.metadata_json = metadata_json;
                 mgstab::validate_graph(graph);
                 return graph;
             }),
             py::arg("components"), py::arg("nodes"),
             py::arg("metadata_json") = std::string())
        .def_readonly("components", &mgstab::DualGraph::components)
        .def_readonly("nodes", &mgstab::DualGraph::nodes)
        .def_readonly("metadata_json", &mgstab::DualGraph::metadata_json)
        .def("component_ids",
             [](const mgstab::DualGraph& graph) {
                 std::vector<std::string> ids;
                 for (const auto& comp : graph.components) ids.push_back(comp.id);
                 return ids;
             })
        .def("__repr__", [](const mgstab::DualGraph& graph) {
            return "DualGraph(" + std::to_string(graph.components.size()) + " components, " +
                   std::to_string(graph.nodes.size()) + " nodes)";
        });

    m.def("validate_graph", &mgstab::validate_graph);
    m.def("arithmetic_genus", &mgstab::arithmetic_genus);
    m.def("connected_proper_subcurves", [](const mgstab::DualGraph& graph) {
        std::vector<std::vector<std::string>> out;
        for (const auto& sub : mgstab::connected_proper_subcurves(graph)) {
            out.push_back(mgstab::subcurve_ids(graph, sub));
        }
        return out;
    });

    py::class_<mgstab::SubcurveInvariants>(m, "SubcurveInvariants")
        .def_readonly("k_D", &mgstab::SubcurveInvariants::k_D)
        .def_readonly("internal_nodes", &mgstab::SubcurveInvariants::internal_nodes)
        .def_readonly("chi_O_D", &mgstab::SubcurveInvariants::chi_O_D)
        .def_readonly("genus_D", &mgstab::SubcurveInvariants::genus_D)
        .def_readonly("deg_omega_D", &mgstab::SubcurveInvariants::deg_omega_D);

    m.def("subcurve_invariants",
          [](const mgstab::DualGraph& graph, const std::vector<std::string>& ids) {
              return mgstab::subcurve_invariants(graph, to_subcurve(graph, ids));
          });

    py::class_<mgstab::RankOneSheaf>(m, "RankOneSheaf")
        .def(py::init<std::vector<long long>, std::vector<std::size_t>>(),
             py::arg("tilde_multidegree"), py::arg("not_locally_free") = std::vector<std::size_t>{})
        .def_readonly("tilde_multidegree", &mgstab::RankOneSheaf::tilde_multidegree)
        .def_readonly("not_locally_free", &mgstab::RankOneSheaf::not_locally_free);

    m.def("sheaf_chi_deg", [](const mgstab::DualGraph& graph, const mgstab::RankOneSheaf& sheaf) {
        const auto out = mgstab::sheaf_chi_deg(graph, sheaf);
        return py::make_tuple(out.chi, out.deg);
    });
    m.def("deg_on_subcurve", [](const mgstab::DualGraph& graph, const mgstab::RankOneSheaf& sheaf,
                                const std::vector<std::string>& ids) {
        return mgstab::deg_on_subcurve(graph, sheaf, to_subcurve(graph, ids));
    });

    py::class_<mgstab::SheafClass>(m, "SheafClass")
        .def(py::init<long long, long long, std::vector<long long>>(), py::arg("rank"),
             py::arg("chi"), py::arg("multirank"))
        .def_readonly("rank", &mgstab::SheafClass::rank)
        .def_readonly("chi", &mgstab::SheafClass::chi)
        .def_readonly("multirank", &mgstab::SheafClass::multirank);

    m.def("uniform_class", &mgstab::uniform_class);

    py::class_<mgstab::Polarization>(m, "Polarization")
        .def(py::init([](const std::vector<std::vector<mgstab::Rational>>& degrees,
                         const std::vector<std::string>& names) {
                 mgstab::Polarization pol;
                 pol.degrees = degrees;
                 pol.names = names;
                 return pol;
             }),
             py::arg("degrees"), py::arg("names") = std::vector<std::string>{})
        .def_readonly("degrees", &mgstab::Polarization::degrees)
        .def_readonly("names", &mgstab::Polarization::names)
        .def_property_readonly("count", &mgstab::Polarization::count);

    m.def("validate_polarization", &mgstab::validate_polarization);
    m.def("normalize_sigma", [](const std::vector<mgstab::Rational>& sigma) {
        return mgstab::normalize(to_sigma(sigma)).sigma;
    });
    m.def("combined_degrees",
          [](const mgstab::Polarization& pol, const std::vector<mgstab::Rational>& sigma) {
              return mgstab::combined_degrees(pol, to_sigma(sigma));
          });

    m.def("multi_hilbert",
          [](const mgstab::DualGraph& graph, const mgstab::Polarization& pol,
             const std::vector<mgstab::Rational>& sigma, const mgstab::SheafClass& cls) {
              const auto poly = mgstab::multi_hilbert(graph, pol, to_sigma(sigma), cls);
              return py::make_tuple(poly.constant, poly.slope_coefficient);
          });
    m.def("slope", [](const mgstab::DualGraph& graph, const mgstab::Polarization& pol,
                      const std::vector<mgstab::Rational>& sigma, const mgstab::SheafClass& cls) {
        return mgstab::slope(graph, pol, to_sigma(sigma), cls);
    });

    py::class_<mgstab::StabilityVerdict>(m, "StabilityVerdict")
        .def_property_readonly(
            "status",
            [](const mgstab::StabilityVerdict& v) { return std::string(status_name(v.status)); })
        .def_property_readonly("witnesses", [](const mgstab::StabilityVerdict& v) {
            // (subcurve indices, margin) pairs; ids are resolved by the caller
            std::vector<std::pair<std::vector<std::size_t>, mgstab::Rational>> out;
            for (const auto& w : v.witnesses) out.emplace_back(w.subcurve.component_indices, w.margin);
            return out;
        });

    m.def("check_rank_one",
          [](const mgstab::DualGraph& graph, const mgstab::Polarization& pol,
             const std::vector<mgstab::Rational>& sigma, const mgstab::RankOneSheaf& sheaf) {
              return mgstab::check_rank_one(graph, pol, to_sigma(sigma), sheaf);
          });
    m.def("oracle_check_rank_one",
          [](const mgstab::DualGraph& graph, const mgstab::Polarization& pol,
             const std::vector<mgstab::Rational>& sigma, const mgstab::RankOneSheaf& sheaf) {
              return mgstab::oracle_check_rank_one(graph, pol, to_sigma(sigma), sheaf);
          });

    py::class_<mgstab::Wall>(m, "Wall")
        .def_readonly("coefficients", &mgstab::Wall::coefficients)
        .def_property_readonly(
            "classification",
            [](const mgstab::Wall& w) { return std::string(wall_kind_name(w.classification)); })
        .def_readonly("boundary_only", &mgstab::Wall::boundary_only)
        .def_property_readonly("provenance", [](const mgstab::Wall& w) {
            std::vector<std::pair<std::vector<long long>, long long>> out;
            for (const auto& p : w.provenance) out.emplace_back(p.multirank, p.chi);
            return out;
        });

    m.def("chi_interval", &mgstab::chi_interval);
    m.def("enumerate_walls", &mgstab::enumerate_walls);

    py::class_<mgstab::Chamber>(m, "Chamber")
        .def_readonly("sign_vector", &mgstab::Chamber::sign_vector)
        .def_readonly("representative", &mgstab::Chamber::representative);
    py::class_<mgstab::ChamberSet>(m, "ChamberSet")
        .def_readonly("chambers", &mgstab::ChamberSet::chambers)
        .def_readonly("exhaustive", &mgstab::ChamberSet::exhaustive);

    m.def("enumerate_chambers", &mgstab::enumerate_chambers, py::arg("walls"), py::arg("k"),
          py::arg("allow_sampling") = false);
    m.def("locate",
          [](const std::vector<mgstab::Rational>& sigma, const std::vector<mgstab::Wall>& walls) {
              const auto loc = mgstab::locate(to_sigma(sigma), walls);
              return py::make_tuple(loc.on_walls, loc.sign_vector);
          });

    m.def("regularity_bound", &mgstab::regularity_bound);

    py::class_<mgstab::DimensionVector>(m, "DimensionVector")
        .def_readonly("entries", &mgstab::DimensionVector::entries)
        .def_readonly("m1", &mgstab::DimensionVector::m1)
        .def_readonly("m2", &mgstab::DimensionVector::m2);

    m.def("dimension_vector", &mgstab::dimension_vector);
    m.def("theta_weights",
          [](const mgstab::DimensionVector& dvec, const std::vector<mgstab::Rational>& sigma) {
              return mgstab::theta_weights(dvec, to_sigma(sigma)).theta;
          });
    m.def("theta_of_subsheaf",
          [](const mgstab::DualGraph& graph, const mgstab::Polarization& pol,
             const std::vector<mgstab::Rational>& sigma, const mgstab::SheafClass& ambient,
             const mgstab::SheafClass& sub, long long m1, long long m2) {
              return mgstab::theta_of_subsheaf(graph, pol, to_sigma(sigma), ambient, sub, m1, m2);
          });

    py::class_<mgstab::CensusEntry>(m, "CensusEntry")
        .def_readonly("tilde_multidegree", &mgstab::CensusEntry::tilde_multidegree)
        .def_readonly("not_locally_free", &mgstab::CensusEntry::not_locally_free);

    py::class_<mgstab::Census>(m, "Census")
        .def_readonly("semistable", &mgstab::Census::semistable)
        .def_readonly("stable", &mgstab::Census::stable)
        .def_readonly("strictly_semistable", &mgstab::Census::strictly_semistable)
        .def_readonly("degree", &mgstab::Census::degree)
        .def_readonly("box", &mgstab::Census::box);

    m.def("census",
          [](const mgstab::DualGraph& graph, const mgstab::Polarization& pol,
             const std::vector<mgstab::Rational>& sigma, long long degree,
             bool include_non_locally_free) {
              return mgstab::census(graph, pol, to_sigma(sigma), degree, include_non_locally_free);
          },
          py::arg("graph"), py::arg("polarization"), py::arg("sigma"), py::arg("degree"),
          py::arg("include_non_locally_free") = false);

    py::class_<mgstab::FlipEvent>(m, "FlipEvent")
        .def_readonly("t", &mgstab::FlipEvent::t)
        .def_readonly("wall_index", &mgstab::FlipEvent::wall_index)
        .def_readonly("before", &mgstab::FlipEvent::before)
        .def_readonly("on_wall", &mgstab::FlipEvent::on_wall)
        .def_readonly("after", &mgstab::FlipEvent::after);

    py::class_<mgstab::FlipReport>(m, "FlipReport")
        .def_readonly("events", &mgstab::FlipReport::events)
        .def_readonly("walls", &mgstab::FlipReport::walls)
        .def_readonly("segment_walls", &mgstab::FlipReport::segment_walls)
        .def_readonly("whole_simplex_walls", &mgstab::FlipReport::whole_simplex_walls);

    m.def("flip_report",
          [](const mgstab::DualGraph& graph, const mgstab::Polarization& pol, long long degree,
             const std::vector<mgstab::Rational>& start, const std::vector<mgstab::Rational>& end,
             bool include_non_locally_free) {
              return mgstab::flip_report(graph, pol, degree, to_sigma(start), to_sigma(end),
                                         include_non_locally_free);
          },
          py::arg("graph"), py::arg("polarization"), py::arg("degree"), py::arg("sigma_start"),
          py::arg("sigma_end"), py::arg("include_non_locally_free") = false);

    py::class_<mgstab::io::Problem>(m, "Problem")
        .def_readonly("graph", &mgstab::io::Problem::graph)
        .def_readonly("polarization", &mgstab::io::Problem::polarization)
        .def_readonly("rank", &mgstab::io::Problem::rank)
        .def_readonly("degree", &mgstab::io::Problem::degree);

    m.def("load_problem", &mgstab::io::load_problem);
}
