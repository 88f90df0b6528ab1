// Python bindings: document-level operations (load, verify, classify,
// curvature, soliton checks, deformation, theorem reports) plus the exact
// expression helpers of the symbolic core.

#include "contactgeo/curvature.hpp"
#include "contactgeo/errors.hpp"
#include "contactgeo/expr.hpp"
#include "contactgeo/manifold_io.hpp"
#include "contactgeo/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

namespace py = pybind11;
using namespace contactgeo;
using ordered_json = nlohmann::ordered_json;

namespace {

py::object json_to_py(const ordered_json& j) {
    switch (j.type()) {
        case ordered_json::value_t::object: {
            py::dict d;
            for (const auto& [key, value] : j.items()) d[py::str(key)] = json_to_py(value);
            return d;
        }
        case ordered_json::value_t::array: {
            py::list l;
            for (const auto& value : j) l.append(json_to_py(value));
            return l;
        }
        case ordered_json::value_t::string: return py::str(j.get<std::string>());
        case ordered_json::value_t::boolean: return py::bool_(j.get<bool>());
        case ordered_json::value_t::number_integer: return py::int_(j.get<long long>());
        case ordered_json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case ordered_json::value_t::number_float: return py::float_(j.get<double>());
        default: return py::none();
    }
}

Rational rational_arg(const std::string& text, const char* what) {
    try {
        return Rational::parse(text);
    } catch (const Error& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

VarsPtr coords_arg(const std::vector<std::string>& coordinates) {
    return Chart(coordinates).vars();
}

struct PyManifold {
    LoadedManifold m;

    explicit PyManifold(LoadedManifold loaded) : m(std::move(loaded)) {}

    static PyManifold from_json(const std::string& text) {
        return PyManifold(instantiate_document(parse_document(text)));
    }
    static PyManifold from_file(const std::string& path) {
        return PyManifold(load_manifold_file(path));
    }
    static PyManifold example(const std::string& epsilon, const std::string& lambda,
                              const std::string& mu) {
        int eps;
        if (epsilon == "1" || epsilon == "+1")
            eps = 1;
        else if (epsilon == "-1")
            eps = -1;
        else
            throw ParseError("epsilon: expected +1 or -1, got '" + epsilon + "'");
        ManifoldDocument doc = builtin_example_document(eps, rational_arg(lambda, "lambda"),
                                                        rational_arg(mu, "mu"));
        return PyManifold(instantiate_document(doc));
    }

    std::string name() const { return m.document.name; }
    int epsilon() const { return m.structure.epsilon(); }
    size_t dimension() const { return m.structure.chart().dim(); }
    std::vector<std::string> coordinates() const { return *m.structure.chart().vars(); }

    std::string to_json() const {
        return serialize_document(
            document_from_structure(m.structure, m.soliton, m.document.name));
    }

    py::object verify() const {
        return json_to_py(report_to_json(structure_identity_report(m.structure)));
    }

    py::object classify_structure() const {
        return json_to_py(classification_to_json(classify(m.structure)));
    }

    py::object curvature() const {
        const TensorField& g = m.structure.metric();
        ordered_json out;
        out["metric_determinant"] = metric_determinant(g).to_string();
        ConnectionCoefficients conn = christoffel(g);
        ordered_json gamma = ordered_json::object();
        for (size_t h = 0; h < g.dim(); ++h)
            for (size_t i = 0; i < g.dim(); ++i)
                for (size_t j = i; j < g.dim(); ++j) {
                    const RationalFunction& c = conn.gamma(h, i, j);
                    if (c.is_zero()) continue;
                    gamma[std::to_string(h) + "," + std::to_string(i) + "," +
                          std::to_string(j)] = c.to_string();
                }
        out["christoffel"] = std::move(gamma);
        TensorField ric = ricci(g);
        ordered_json rows = ordered_json::array();
        for (size_t i = 0; i < g.dim(); ++i) {
            ordered_json row = ordered_json::array();
            for (size_t j = 0; j < g.dim(); ++j) row.push_back(ric.at({i, j}).to_string());
            rows.push_back(std::move(row));
        }
        out["ricci"] = std::move(rows);
        out["scalar_curvature"] = scalar_curvature(g).to_string();
        return json_to_py(out);
    }

    SolitonData resolve_vector_data(const std::optional<std::string>& lambda,
                                    const std::optional<std::string>& mu) const {
        if (!m.soliton || !m.soliton->has_vector())
            throw ParseError("document carries no soliton vector field");
        Rational l = lambda ? rational_arg(*lambda, "lambda") : m.soliton->lambda;
        Rational mm = mu ? rational_arg(*mu, "mu") : m.soliton->mu;
        return SolitonData::with_vector(m.soliton->vector(), l, mm);
    }

    py::object soliton(const std::optional<std::string>& lambda,
                       const std::optional<std::string>& mu) const {
        SolitonData d = resolve_vector_data(lambda, mu);
        SolitonVerdict v = soliton_residual(m.structure, d);
        return json_to_py(verdict_to_json(v, d.lambda, d.mu, false));
    }

    py::object gradient_soliton(const std::string& potential, const std::string& lambda,
                                const std::string& mu) const {
        RationalFunction f = parse_expression(potential, m.structure.chart().vars());
        SolitonData d = SolitonData::with_potential(std::move(f), rational_arg(lambda, "lambda"),
                                                    rational_arg(mu, "mu"));
        SolitonVerdict v = gradient_soliton_residual(m.structure, d);
        return json_to_py(verdict_to_json(v, d.lambda, d.mu, false));
    }

    PyManifold deform(const std::string& t) const {
        Rational tt = rational_arg(t, "t");
        ContactStructure deformed = d_homothetic_deform(m.structure, tt);
        ManifoldDocument doc = document_from_structure(
            deformed, m.soliton, m.document.name + "-deformed-t-" + tt.to_string());
        return PyManifold(instantiate_document(doc));
    }

    py::object theorems(const std::optional<std::string>& lambda,
                        const std::optional<std::string>& mu) const {
        std::optional<SolitonData> data;
        if (m.soliton) {
            Rational l = lambda ? rational_arg(*lambda, "lambda") : m.soliton->lambda;
            Rational mm = mu ? rational_arg(*mu, "mu") : m.soliton->mu;
            data = m.soliton->has_vector()
                       ? SolitonData::with_vector(m.soliton->vector(), l, mm)
                       : SolitonData::with_potential(m.soliton->scalar(), l, mm);
        }
        ordered_json list = ordered_json::array();
        for (const TheoremReport& rep : theorem_suite(m.structure, data))
            list.push_back(theorem_to_json(rep));
        if (auto pack = kappa_mu_package_if_applicable(m.structure)) {
            ordered_json item;
            item["id"] = "kappa_mu_identity_package";
            item["report"] = report_to_json(*pack);
            list.push_back(std::move(item));
        }
        return json_to_py(list);
    }
};

} // namespace

PYBIND11_MODULE(_contactgeo, mod) {
    mod.doc() = "exact tensor calculus for contact pseudo-metric structures";

    py::register_exception<ParseError>(mod, "ParseError", PyExc_ValueError);
    py::register_exception<InvariantViolation>(mod, "InvariantViolation", PyExc_ValueError);
    py::register_exception<NotContact>(mod, "NotContactError", PyExc_ValueError);
    py::register_exception<UnknownVariable>(mod, "UnknownVariableError", PyExc_ValueError);

    py::class_<PyManifold>(mod, "Manifold")
        .def_static("from_json", &PyManifold::from_json, py::arg("text"),
                    "Load a manifold document from a JSON string.")
        .def_static("from_file", &PyManifold::from_file, py::arg("path"))
        .def_static("example", &PyManifold::example, py::arg("epsilon") = "+1",
                    py::arg("lambda_") = "6", py::arg("mu") = "0",
                    "The built-in R^3 example; rationals are 'p/q' strings.")
        .def_property_readonly("name", &PyManifold::name)
        .def_property_readonly("epsilon", &PyManifold::epsilon)
        .def_property_readonly("dimension", &PyManifold::dimension)
        .def_property_readonly("coordinates", &PyManifold::coordinates)
        .def("to_json", &PyManifold::to_json)
        .def("verify", &PyManifold::verify,
             "Run the full identity suite; returns the report as a dict.")
        .def("classify", &PyManifold::classify_structure)
        .def("curvature", &PyManifold::curvature)
        .def("soliton", &PyManifold::soliton, py::arg("lambda_") = std::nullopt,
             py::arg("mu") = std::nullopt,
             "Check the eta-Ricci soliton equation with the document's "
             "vector potential.")
        .def("gradient_soliton", &PyManifold::gradient_soliton, py::arg("potential"),
             py::arg("lambda_"), py::arg("mu"))
        .def("deform", &PyManifold::deform, py::arg("t"),
             "Apply a D-homothetic deformation; returns a new Manifold.")
        .def("theorems", &PyManifold::theorems, py::arg("lambda_") = std::nullopt,
             py::arg("mu") = std::nullopt);

    mod.def(
        "simplify",
        [](const std::string& expr, const std::vector<std::string>& coordinates) {
            return parse_expression(expr, coords_arg(coordinates)).to_string();
        },
        py::arg("expr"), py::arg("coordinates"),
        "Canonical form of an expression over the given coordinates.");
    mod.def(
        "diff",
        [](const std::string& expr, const std::string& var,
           const std::vector<std::string>& coordinates) {
            VarsPtr vars = coords_arg(coordinates);
            Chart chart(coordinates);
            auto idx = chart.index_of(var);
            if (!idx) throw UnknownVariable(var);
            return parse_expression(expr, vars).partial(*idx).to_string();
        },
        py::arg("expr"), py::arg("var"), py::arg("coordinates"),
        "Exact partial derivative of an expression.");
    mod.def(
        "evaluate",
        [](const std::string& expr, const std::map<std::string, std::string>& point,
           const std::vector<std::string>& coordinates) {
            VarsPtr vars = coords_arg(coordinates);
            std::map<std::string, Rational> assignment;
            for (const auto& [key, value] : point)
                assignment.emplace(key, rational_arg(value, key.c_str()));
            return parse_expression(expr, vars)
                .eval(Point::from_assignments(vars, assignment))
                .to_string();
        },
        py::arg("expr"), py::arg("point"), py::arg("coordinates"),
        "Exact value at a rational point; entries are 'p/q' strings.");
    mod.def(
        "expr_equal",
        [](const std::string& a, const std::string& b,
           const std::vector<std::string>& coordinates) {
            VarsPtr vars = coords_arg(coordinates);
            return parse_expression(a, vars) == parse_expression(b, vars);
        },
        py::arg("a"), py::arg("b"), py::arg("coordinates"),
        "Exact equality of two expressions.");
}
