#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nonopen/runner.hpp"

namespace py = pybind11;
using namespace nonopen;

namespace {

RunConfig config_from_kwargs(const py::kwargs& kwargs) {
    json j = json::object();
    for (const auto& item : kwargs) {
        const std::string key = py::cast<std::string>(item.first);
        const py::handle value = item.second;
        if (py::isinstance<py::str>(value)) {
            j[key] = py::cast<std::string>(value);
        } else if (py::isinstance<py::bool_>(value)) {
            j[key] = py::cast<bool>(value);
        } else if (py::isinstance<py::int_>(value)) {
            j[key] = py::cast<std::int64_t>(value);
        } else {
            j[key] = py::cast<double>(value);
        }
    }
    return RunConfig::from_json(j);
}

MapSpec map_from_kwargs(const py::kwargs& kwargs) { return resolve_map(config_from_kwargs(kwargs)); }

py::object json_to_py(const json& j) {
    py::module_ pyjson = py::module_::import("json");
    return pyjson.attr("loads")(j.dump());
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "non-open C1 maps F(x) = exp(-1/G(x)) x on Banach-space models: "
              "derivatives, rank-one solves, and certificates";

    py::register_exception<representation_error>(m, "RepresentationError", PyExc_ValueError);
    py::register_exception<parameter_error>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<not_invertible_error>(m, "NotInvertibleError", PyExc_ArithmeticError);
    py::register_exception<numerical_range_error>(m, "NumericalRangeError", PyExc_OverflowError);

    py::class_<SparseVector>(m, "SparseVector")
        .def(py::init([](const std::vector<std::pair<std::uint64_t, double>>& entries) {
                 std::vector<SparseEntry> es;
                 es.reserve(entries.size());
                 for (const auto& [k, v] : entries) es.push_back({k, v});
                 return SparseVector::from_entries(std::move(es));
             }),
             py::arg("entries") = std::vector<std::pair<std::uint64_t, double>>{})
        .def_static("unit", &SparseVector::unit, py::arg("index"), py::arg("value") = 1.0)
        .def("entries",
             [](const SparseVector& v) {
                 std::vector<std::pair<std::uint64_t, double>> out;
                 for (const auto& e : v.entries()) out.emplace_back(e.index, e.value);
                 return out;
             })
        .def("at", &SparseVector::at)
        .def("is_zero", &SparseVector::is_zero)
        .def("support_size", &SparseVector::support_size)
        .def("__eq__", [](const SparseVector& a, const SparseVector& b) { return a == b; })
        .def("__repr__", [](const SparseVector& v) {
            return "SparseVector(" + vector_to_json(Vector(v)).at("entries").dump() + ")";
        });

    py::class_<GridFunction>(m, "GridFunction")
        .def(py::init<int, std::vector<double>>(), py::arg("cells"), py::arg("values"))
        .def("cells", &GridFunction::cells)
        .def("values", &GridFunction::values)
        .def("is_zero", &GridFunction::is_zero)
        .def("__eq__", [](const GridFunction& a, const GridFunction& b) { return a == b; })
        .def("__repr__", [](const GridFunction& g) {
            return "GridFunction(M=" + std::to_string(g.cells()) + ")";
        });

    py::class_<MapSpec>(m, "Map")
        .def(py::init(&map_from_kwargs))
        .def_property_readonly("model_id", [](const MapSpec& m_) { return m_.model.id(); })
        .def_property_readonly("gauge_id", [](const MapSpec& m_) { return m_.gauge.id(); })
        .def_property_readonly("degree", [](const MapSpec& m_) { return m_.gauge.degree(); })
        .def("__repr__", [](const MapSpec& m_) { return "Map(" + m_.id() + ")"; });

    m.def("strong_norm", [](const MapSpec& m_, const Vector& x) { return strong_norm(m_.model, x); });
    m.def("weak_norm", [](const MapSpec& m_, const Vector& x) {
        return weak_norm(m_.gauge, m_.model, x);
    });
    m.def("gauge_eval", [](const MapSpec& m_, const Vector& x) {
        return gauge_eval(m_.gauge, m_.model, x);
    });
    m.def("gauge_grad_apply", [](const MapSpec& m_, const Vector& x, const Vector& h) {
        return gauge_grad_apply(m_.gauge, m_.model, x, h);
    });
    m.def("gauge_grad_lipschitz_bound", [](const MapSpec& m_, const Vector& x, const Vector& z) {
        const LipschitzBound lb = gauge_grad_lipschitz_bound(m_.gauge, m_.model, x, z);
        return py::make_tuple(lb.estimate, lb.bound);
    });
    m.def("f_eval", [](const MapSpec& m_, const Vector& x) { return f_eval(m_, x); });
    m.def("jf_apply",
          [](const MapSpec& m_, const Vector& x, const Vector& h) { return jf_apply(m_, x, h); });
    m.def("jf_solve", [](const MapSpec& m_, const Vector& x, const Vector& y) {
        const SolveResult sol = jf_solve(m_, x, y);
        py::dict d;
        d["solution"] = sol.solution;
        d["residual"] = sol.residual;
        d["log_scale"] = sol.log_scale;
        return d;
    });
    m.def("f_invert_radial",
          [](const MapSpec& m_, const Vector& y) { return f_invert_radial(m_, y); });

    m.def("gamma_sequence", [](double s, const std::vector<std::uint64_t>& ns) {
        py::list out;
        for (const GammaRecord& rec : gamma_sequence(s, ns)) {
            py::dict d;
            d["n"] = rec.n;
            d["gamma"] = rec.gamma;
            d["sqrt_n"] = rec.sqrt_n;
            d["satisfied"] = rec.satisfied;
            d["residual"] = rec.residual;
            out.append(std::move(d));
        }
        return out;
    });
    m.def("certify_no_preimage", [](const MapSpec& m_, double delta, const Vector& y) {
        const NoPreimageCertificate cert = certify_no_preimage(m_, delta, y);
        py::dict d;
        d["delta"] = cert.delta;
        d["s"] = cert.s;
        d["threshold"] = cert.threshold;
        d["weak_norm_y"] = cert.weak_norm_y;
        d["certified"] = cert.certified;
        return d;
    });
    m.def("classify_point", [](const MapSpec& m_, const Vector& x) {
        const Classification c = classify_point(m_, x);
        py::dict d;
        d["class"] = c.cls == PointClass::Critical ? "critical" : "regular";
        d["max_residual"] = c.max_residual;
        d["log_scale_used"] = c.log_scale_used;
        return d;
    });
    m.def("divergence_report", [](const MapSpec& m_, const std::vector<std::uint64_t>& ns) {
        const WitnessReport rep = divergence_report(m_, ns);
        py::list rows;
        for (const auto& row : rep.divergence) {
            py::dict d;
            d["n"] = row.n;
            d["nu"] = row.nu;
            d["z_norm"] = row.z_norm;
            d["inv_norm"] = row.inv_norm;
            d["gamma_ref"] = row.gamma_ref;
            d["satisfied"] = row.satisfied;
            rows.append(std::move(d));
        }
        py::dict d;
        d["model"] = rep.model_id;
        d["gauge"] = rep.gauge_id;
        d["s"] = rep.s;
        d["rows"] = std::move(rows);
        d["all_satisfied"] = rep.all_satisfied;
        d["max_path_mismatch"] = rep.max_path_mismatch;
        return d;
    });
    m.def("weaksep_witness", [](int q) {
        const WeakSepWitness w = weaksep_witness(FunctionalFamily(FamilyKind::Coordinate), q);
        return py::make_tuple(w.x_q, w.weak_norm, w.bound);
    });
    m.def("remainder_bounds_q5", [](const SparseVector& x, const SparseVector& h) {
        const RemainderSplit r = remainder_bounds_q5(x, h);
        py::dict d;
        d["main_term"] = r.main_term;
        d["A"] = r.A;
        d["B"] = r.B;
        d["bound_A"] = r.bound_A;
        d["bound_B"] = r.bound_B;
        d["total"] = r.total;
        return d;
    });

    m.def("run_models", [] { return json_to_py(run_models().report); });
    m.def("run_gradcheck", [](const py::kwargs& kwargs) {
        const RunOutput out = run_gradcheck(config_from_kwargs(kwargs));
        return py::make_tuple(out.exit_code, json_to_py(out.report));
    });
    m.def("run_nonopen", [](std::uint64_t n_max, const py::kwargs& kwargs) {
        const RunOutput out = run_nonopen(config_from_kwargs(kwargs), n_max);
        return py::make_tuple(out.exit_code, json_to_py(out.report), out.csv);
    }, py::arg("n_max"));
    m.def("run_report", [](const py::kwargs& kwargs) {
        const RunOutput out = run_report(config_from_kwargs(kwargs));
        return py::make_tuple(out.exit_code, json_to_py(out.report));
    });
    // byte-level report texts, for determinism checks
    m.def("nonopen_json_text", [](std::uint64_t n_max, const py::kwargs& kwargs) {
        return run_nonopen(config_from_kwargs(kwargs), n_max).report.dump();
    }, py::arg("n_max"));
    m.def("gradcheck_json_text", [](const py::kwargs& kwargs) {
        return run_gradcheck(config_from_kwargs(kwargs)).report.dump();
    });
}
