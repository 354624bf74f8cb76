#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "profsemi/json_io.hpp"
#include "profsemi/props.hpp"

namespace py = pybind11;
using namespace profsemi;

namespace {

py::object to_py(const ojson& j) {
    return py::module_::import("json").attr("loads")(py::str(j.dump()));
}

py::list suites_to_py(const std::vector<SuiteResult>& rs) {
    py::list out;
    for (const auto& r : rs) {
        py::dict d;
        d["suite"] = r.name;
        d["pass"] = r.pass;
        d["cases"] = r.cases;
        d["witness"] = r.witness;
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite semirings, profinite spaces and semiring-valued measures";

    py::register_exception<descriptor_error>(m, "DescriptorError");
    py::register_exception<depth_error>(m, "DepthError");
    py::register_exception<mismatch_error>(m, "MismatchError");
    py::register_exception<domain_error>(m, "DomainError");

    py::class_<FiniteSemiring>(m, "Semiring")
        .def_readonly("label", &FiniteSemiring::label)
        .def_readonly("size", &FiniteSemiring::size)
        .def_readonly("zero", &FiniteSemiring::zero)
        .def_readonly("one", &FiniteSemiring::one)
        .def("add", &FiniteSemiring::add)
        .def("mul", &FiniteSemiring::mul)
        .def("idempotent", &FiniteSemiring::idempotent)
        .def("__repr__", [](const FiniteSemiring& s) { return "<Semiring " + s.label + ">"; });

    m.def("builtin_semiring", &builtin_semiring_spec, py::arg("spec"),
          "builtin semiring from a spec like 'bool2', 'zmod:3', 'trop_trunc:2', 'nat_sat:4'");
    m.def("semiring_from_json", [](const std::string& text) {
        return semiring_from_json(parse_json(text, "<python>"));
    });
    m.def("validate_semiring",
          [](const FiniteSemiring& s) { return to_py(report_to_json(validate_semiring(s))); });

    py::class_<NaturalOrder>(m, "NaturalOrder")
        .def_readonly("size", &NaturalOrder::size)
        .def_readonly("bottom", &NaturalOrder::bottom)
        .def("leq", &NaturalOrder::leq)
        .def("meet", &NaturalOrder::meet);
    m.def("natural_order", &natural_order);

    py::class_<FiniteSemimodule>(m, "Semimodule")
        .def_readonly("label", &FiniteSemimodule::label)
        .def_readonly("size", &FiniteSemimodule::size)
        .def("add", &FiniteSemimodule::add)
        .def("act", &FiniteSemimodule::act);
    m.def("self_module", &self_module);
    m.def("three_chain_module", &three_chain_module);
    m.def("semimodule_from_json", [](const std::string& text) {
        return semimodule_from_json(parse_json(text, "<python>"));
    });
    m.def("validate_semimodule",
          [](const FiniteSemimodule& mm) { return to_py(report_to_json(validate_semimodule(mm))); });

    py::class_<Space>(m, "Space")
        .def("level_size", &Space::level_size)
        .def("transition", &Space::transition)
        .def("max_depth", &Space::max_depth)
        .def("describe", &Space::describe)
        .def("__eq__", [](const Space& a, const Space& b) { return a == b; })
        .def("__repr__", [](const Space& s) { return "<Space " + s.describe() + ">"; });
    m.def("make_space", &make_space_spec, py::arg("spec"),
          "space from a spec like 'cantor', 'nat_infty', 'finite:3'");
    m.def("validate_system", [](const Space& s, int depth) {
        return to_py(report_to_json(validate_system(s, depth)));
    });

    py::class_<Clopen>(m, "Clopen")
        .def(py::init<const Space&, int, const std::vector<int>&>())
        .def_property_readonly("level", &Clopen::level)
        .def_property_readonly("cells", &Clopen::cells)
        .def("is_empty", &Clopen::is_empty)
        .def("__and__", &clopen_and)
        .def("__or__", &clopen_or)
        .def("__sub__", &clopen_diff)
        .def("__invert__", &clopen_not)
        .def("__le__", &clopen_leq)
        .def("__eq__", &clopen_equal);
    m.def("full_clopen", &Clopen::full);
    m.def("empty_clopen", &Clopen::empty);
    m.def("atoms", &atoms);

    py::class_<Point>(m, "Point")
        .def_static("from_prefix", &Point::from_prefix, py::arg("space"), py::arg("level"),
                    py::arg("cell"), py::arg("depth"))
        .def("at", &Point::at)
        .def_property_readonly("depth", &Point::depth);
    m.def("point_in", &point_in);

    py::class_<ContinuousMap>(m, "ContinuousMap")
        .def_static("identity", &ContinuousMap::identity)
        .def_static("first_bit", &ContinuousMap::first_bit)
        .def_static("stage_quotient", &ContinuousMap::stage_quotient)
        .def("apply", &ContinuousMap::apply)
        .def("preimage", &ContinuousMap::preimage)
        .def("then", &ContinuousMap::then);

    py::class_<FinSuppFn>(m, "FinSuppFn")
        .def(py::init([](const Space& sp, const FiniteSemiring& s,
                         const std::vector<std::pair<Point, int>>& support) {
            std::vector<WeightedPoint> pts;
            for (const auto& [p, v] : support) pts.push_back({p, v});
            return FinSuppFn(sp, s, std::move(pts));
        }))
        .def_property_readonly("separation", &FinSuppFn::separation);

    py::class_<Measure>(m, "Measure")
        .def_property_readonly("certified_depth", &Measure::certified_depth)
        .def("stage_at", [](const Measure& mm, int level) { return mm.stage_at(level).values; });
    m.def("dirac", &dirac);
    m.def("integrate", &integrate);
    m.def("zero_measure", &zero_measure);
    m.def("eval_measure", &eval);
    m.def("combine", &combine);
    m.def("scale", &scale);
    m.def("pushforward", &pushforward);
    m.def("equal_to_depth", &equal_to_depth);
    m.def("free_extension", &free_extension);

    m.def("density_witness",
          [](const Space& sp, const FiniteSemiring& s,
             const std::vector<std::pair<Clopen, std::vector<int>>>& constraints, int depth) {
              std::vector<SubbasicConstraint> cs;
              for (const auto& [cl, allowed] : constraints) {
                  SubbasicConstraint c{cl, std::vector<char>(s.size, 0)};
                  for (int v : allowed) c.allowed.at(v) = 1;
                  cs.push_back(std::move(c));
              }
              WitnessResult w = density_witness(sp, s, cs, depth);
              py::dict d;
              d["satisfiable"] = w.satisfiable;
              if (w.satisfiable) {
                  py::list support;
                  for (const auto& wp : w.witness->support())
                      support.append(py::make_tuple(wp.point, wp.value));
                  d["support"] = support;
              }
              return d;
          },
          py::arg("space"), py::arg("semiring"), py::arg("constraints"), py::arg("depth") = -1);
    m.def("separating_clopen", &separating_clopen);

    py::class_<ScottFn>(m, "ScottFn")
        .def_property_readonly("certified_depth", &ScottFn::certified_depth)
        .def("stage_at", [](const ScottFn& f, int level) { return f.stage_at(level).values; });
    m.def("density", &density);
    m.def("to_measure", &to_measure);
    m.def("eval_pointwise", [](const ScottFn& f, const Point& p, int depth) {
        PointwiseValue v = eval_pointwise(f, p, depth);
        return py::make_tuple(v.value, v.stabilised);
    });
    m.def("integral", &integral);
    m.def("galois_holds", [](const ScottFn& f, const Measure& mm, int depth) {
        return to_py(galois_report_to_json(galois_holds(f, mm, depth)));
    });

    py::class_<ClosedSetFamily>(m, "ClosedSetFamily")
        .def_static("from_measure", &ClosedSetFamily::from_measure)
        .def_static("singleton", &ClosedSetFamily::singleton)
        .def_static("union_of", &ClosedSetFamily::union_of)
        .def("cells_at", &ClosedSetFamily::cells_at);
    m.def("family_meets", &family_meets);
    m.def("family_inside", &family_inside);

    m.def("unit", &unit);
    m.def("functor_map", [](const FiniteSemiring& s, const std::vector<int>& phi, int target,
                            const std::vector<int>& values) {
        return functor_map(s, phi, target, FinFn{values}).values;
    });
    m.def("mult", [](const FiniteSemiring& s, int inner_base, const std::vector<int>& outer) {
        return mult(s, {inner_base, FinFn{outer}}).values;
    });
    m.def("check_monad_laws",
          [](const FiniteSemiring& s, int max_base, long long budget) {
              return to_py(monad_report_to_json(check_monad_laws(s, max_base, budget)));
          },
          py::arg("semiring"), py::arg("max_base") = 2, py::arg("budget") = (1 << 17));

    m.def("bijection_report",
          [](int base, const FiniteSemiring& s, long long budget) {
              return to_py(bijection_report_to_json(bijection_report(base, s, budget)));
          },
          py::arg("base"), py::arg("semiring"), py::arg("budget") = (1 << 20));

    m.def("saturated_three_chain_action_report", [](int depth, int check_depth) {
        return to_py(continuity_report_to_json(
            check_action_joint_continuity(saturated_three_chain_action(depth), check_depth)));
    });
    m.def("self_action_report", [](const FiniteSemiring& s, int depth, int check_depth) {
        return to_py(continuity_report_to_json(
            check_action_joint_continuity(constant_self_action(s, depth), check_depth)));
    });

    m.def("run_all_suites", [](int cases, std::uint64_t seed) {
        return suites_to_py(run_all_suites(cases, seed));
    });
}
