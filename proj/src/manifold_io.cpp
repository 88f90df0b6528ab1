#include "contactgeo/manifold_io.hpp"

#include "contactgeo/errors.hpp"
#include "contactgeo/expr.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace contactgeo {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
    throw ParseError("document field '" + path + "': " + what);
}

const json& need(const json& obj, const std::string& key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) field_error(path.empty() ? key : path + "." + key, "missing");
    return *it;
}

std::string need_string(const json& obj, const std::string& key, const std::string& path) {
    const json& v = need(obj, key, path);
    if (!v.is_string()) field_error(path + key, "expected a string");
    return v.get<std::string>();
}

std::vector<std::string> string_list(const json& v, const std::string& path, size_t want) {
    if (!v.is_array()) field_error(path, "expected an array");
    std::vector<std::string> out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_string())
            field_error(path + "[" + std::to_string(i) + "]", "expected an expression string");
        out.push_back(v[i].get<std::string>());
    }
    if (want && out.size() != want)
        field_error(path, "expected " + std::to_string(want) + " entries, found " +
                              std::to_string(out.size()));
    return out;
}

std::vector<std::vector<std::string>> string_matrix(const json& v, const std::string& path,
                                                    size_t want) {
    if (!v.is_array()) field_error(path, "expected a matrix of expression strings");
    if (v.size() != want)
        field_error(path, "expected " + std::to_string(want) + " rows, found " +
                              std::to_string(v.size()));
    std::vector<std::vector<std::string>> out;
    for (size_t i = 0; i < v.size(); ++i)
        out.push_back(string_list(v[i], path + "[" + std::to_string(i) + "]", want));
    return out;
}

} // namespace

ManifoldDocument parse_document(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("document root must be a JSON object");

    ManifoldDocument m;
    m.name = doc.contains("name") ? need_string(doc, "name", "") : "unnamed";
    const json& dim = need(doc, "dimension", "");
    if (!dim.is_number_integer() || dim.get<long long>() < 1)
        field_error("dimension", "expected a positive integer");
    m.dimension = dim.get<size_t>();
    m.coordinates = string_list(need(doc, "coordinates", ""), "coordinates", m.dimension);
    const json& eps = need(doc, "epsilon", "");
    if (!eps.is_number_integer() ||
        (eps.get<long long>() != 1 && eps.get<long long>() != -1))
        field_error("epsilon", "expected 1 or -1");
    m.epsilon = static_cast<int>(eps.get<long long>());
    m.metric = string_matrix(need(doc, "metric", ""), "metric", m.dimension);
    m.xi = string_list(need(doc, "xi", ""), "xi", m.dimension);
    m.eta = string_list(need(doc, "eta", ""), "eta", m.dimension);
    m.phi = string_matrix(need(doc, "phi", ""), "phi", m.dimension);
    if (doc.contains("soliton")) {
        const json& s = doc["soliton"];
        if (!s.is_object()) field_error("soliton", "expected an object");
        SolitonBlock block;
        if (s.contains("vector"))
            block.vector = string_list(s["vector"], "soliton.vector", m.dimension);
        if (s.contains("potential")) {
            if (!s["potential"].is_string())
                field_error("soliton.potential", "expected an expression string");
            block.potential = s["potential"].get<std::string>();
        }
        if (block.vector.has_value() == block.potential.has_value())
            field_error("soliton", "exactly one of 'vector' or 'potential' is required");
        block.lambda = need_string(s, "lambda", "soliton");
        block.mu = need_string(s, "mu", "soliton");
        m.soliton = std::move(block);
    }
    return m;
}

std::string serialize_document(const ManifoldDocument& doc) {
    json j;
    j["name"] = doc.name;
    j["dimension"] = doc.dimension;
    j["coordinates"] = doc.coordinates;
    j["epsilon"] = doc.epsilon;
    j["metric"] = doc.metric;
    j["xi"] = doc.xi;
    j["eta"] = doc.eta;
    j["phi"] = doc.phi;
    if (doc.soliton) {
        json s;
        if (doc.soliton->vector) s["vector"] = *doc.soliton->vector;
        if (doc.soliton->potential) s["potential"] = *doc.soliton->potential;
        s["lambda"] = doc.soliton->lambda;
        s["mu"] = doc.soliton->mu;
        j["soliton"] = std::move(s);
    }
    return j.dump(2) + "\n";
}

LoadedManifold instantiate_document(const ManifoldDocument& doc) {
    if (doc.coordinates.size() != doc.dimension)
        field_error("coordinates", "count does not match dimension");
    Chart chart(doc.coordinates);
    const VarsPtr& vars = chart.vars();

    auto parse_at = [&](const std::string& text, const std::string& path) {
        try {
            return parse_expression(text, vars);
        } catch (const Error& e) {
            field_error(path, e.what());
        }
    };

    TensorField g = make_metric_shape(chart);
    for (size_t i = 0; i < doc.dimension; ++i)
        for (size_t j = 0; j < doc.dimension; ++j)
            g.at_mut({i, j}) = parse_at(doc.metric[i][j],
                                        "metric[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    for (size_t i = 0; i < doc.dimension; ++i)
        for (size_t j = i + 1; j < doc.dimension; ++j)
            if (g.at({i, j}) != g.at({j, i}))
                throw InvariantViolation("metric matrix is not symmetric at (" +
                                         std::to_string(i) + ", " + std::to_string(j) + ")");

    VectorField xi = make_vector_field(chart);
    TensorField eta = make_one_form(chart);
    for (size_t i = 0; i < doc.dimension; ++i) {
        xi.at_mut({i}) = parse_at(doc.xi[i], "xi[" + std::to_string(i) + "]");
        eta.at_mut({i}) = parse_at(doc.eta[i], "eta[" + std::to_string(i) + "]");
    }
    TensorField phi = make_endomorphism_shape(chart);
    for (size_t i = 0; i < doc.dimension; ++i)
        for (size_t j = 0; j < doc.dimension; ++j)
            phi.at_mut({i, j}) = parse_at(doc.phi[i][j],
                                          "phi[" + std::to_string(i) + "][" + std::to_string(j) + "]");

    ContactStructure structure =
        ContactStructure::create(chart, std::move(phi), std::move(xi), std::move(eta),
                                 std::move(g), doc.epsilon);

    std::optional<SolitonData> soliton;
    if (doc.soliton) {
        Rational lambda, mu;
        try {
            lambda = Rational::parse(doc.soliton->lambda);
        } catch (const Error& e) {
            field_error("soliton.lambda", e.what());
        }
        try {
            mu = Rational::parse(doc.soliton->mu);
        } catch (const Error& e) {
            field_error("soliton.mu", e.what());
        }
        if (doc.soliton->vector) {
            VectorField v = make_vector_field(structure.chart());
            for (size_t i = 0; i < doc.dimension; ++i)
                v.at_mut({i}) = parse_at((*doc.soliton->vector)[i],
                                         "soliton.vector[" + std::to_string(i) + "]");
            soliton = SolitonData::with_vector(std::move(v), lambda, mu);
        } else {
            RationalFunction f = parse_at(*doc.soliton->potential, "soliton.potential");
            soliton = SolitonData::with_potential(std::move(f), lambda, mu);
        }
    }
    return LoadedManifold{std::move(structure), std::move(soliton), doc};
}

LoadedManifold load_manifold_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return instantiate_document(parse_document(buf.str()));
}

ManifoldDocument document_from_structure(const ContactStructure& s,
                                         const std::optional<SolitonData>& soliton,
                                         std::string name) {
    ManifoldDocument doc;
    doc.name = std::move(name);
    doc.dimension = s.chart().dim();
    doc.coordinates = *s.chart().vars();
    doc.epsilon = s.epsilon();
    doc.metric.assign(doc.dimension, std::vector<std::string>(doc.dimension));
    doc.phi.assign(doc.dimension, std::vector<std::string>(doc.dimension));
    doc.xi.resize(doc.dimension);
    doc.eta.resize(doc.dimension);
    for (size_t i = 0; i < doc.dimension; ++i) {
        doc.xi[i] = s.xi().at({i}).to_string();
        doc.eta[i] = s.eta().at({i}).to_string();
        for (size_t j = 0; j < doc.dimension; ++j) {
            doc.metric[i][j] = s.metric().at({i, j}).to_string();
            doc.phi[i][j] = s.phi().at({i, j}).to_string();
        }
    }
    if (soliton) {
        SolitonBlock block;
        if (soliton->has_vector()) {
            std::vector<std::string> comps(doc.dimension);
            for (size_t i = 0; i < doc.dimension; ++i)
                comps[i] = soliton->vector().at({i}).to_string();
            block.vector = std::move(comps);
        } else {
            block.potential = soliton->scalar().to_string();
        }
        block.lambda = soliton->lambda.to_string();
        block.mu = soliton->mu.to_string();
        doc.soliton = std::move(block);
    }
    return doc;
}

ManifoldDocument builtin_example_document(int epsilon, const Rational& lambda,
                                          const Rational& mu) {
    auto [s, d] = builtin_example(epsilon, lambda, mu);
    return document_from_structure(s, d, "sasakian-r3-example");
}

} // namespace contactgeo
