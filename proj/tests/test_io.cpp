#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "contactgeo/errors.hpp"
#include "contactgeo/manifold_io.hpp"

#include "test_support.hpp"

#include <fstream>
#include <sstream>

using namespace contactgeo;

#ifndef CONTACTGEO_FIXTURE_DIR
#define CONTACTGEO_FIXTURE_DIR "fixtures"
#endif

namespace {

std::string fixture(const std::string& name) {
    return std::string(CONTACTGEO_FIXTURE_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("bundled example document loads and classifies sasakian") {
    LoadedManifold m = load_manifold_file(fixture("example_sasakian_r3.json"));
    CHECK(m.document.name == "sasakian-r3-example");
    ClassificationResult c = classify(m.structure);
    CHECK(c.is_sasakian);
    REQUIRE(m.soliton.has_value());
    CHECK(m.soliton->lambda == Rational(6));
    CHECK(m.soliton->mu == Rational(0));
    SolitonVerdict v = soliton_residual(m.structure, *m.soliton);
    CHECK(v.is_soliton);
}

TEST_CASE("bundled flat document loads but is not contact") {
    LoadedManifold m = load_manifold_file(fixture("flat_r3.json"));
    CHECK_FALSE(m.soliton.has_value());
    CHECK_THROWS_AS(classify(m.structure), NotContact);
}

TEST_CASE("document round trip reproduces the structure exactly") {
    ManifoldDocument doc = builtin_example_document(+1, Rational(6), Rational(0));
    std::string text = serialize_document(doc);
    ManifoldDocument again = parse_document(text);
    LoadedManifold a = instantiate_document(doc);
    LoadedManifold b = instantiate_document(again);
    CHECK(a.structure.metric() == b.structure.metric());
    CHECK(a.structure.phi() == b.structure.phi());
    CHECK(a.structure.eta() == b.structure.eta());
    CHECK(a.structure.xi() == b.structure.xi());
    CHECK(a.structure.epsilon() == b.structure.epsilon());
    REQUIRE(a.soliton.has_value());
    REQUIRE(b.soliton.has_value());
    CHECK(a.soliton->vector() == b.soliton->vector());
    // serialization is a fixed point after one round
    CHECK(serialize_document(document_from_structure(b.structure, b.soliton, doc.name)) == text);
    // and the document matches the in-memory builtin example
    auto [s, d] = builtin_example(+1, Rational(6), Rational(0));
    CHECK(a.structure.metric() == s.metric());
    CHECK(a.soliton->vector() == d.vector());
}

TEST_CASE("deformed structures survive a document round trip") {
    auto [s, d] = builtin_example(-1, Rational(-2), Rational(-4));
    ContactStructure deformed = d_homothetic_deform(s, Rational(3, 2));
    ManifoldDocument doc = document_from_structure(deformed, std::nullopt, "deformed");
    LoadedManifold back = instantiate_document(parse_document(serialize_document(doc)));
    CHECK(back.structure.metric() == deformed.metric());
    CHECK(back.structure.eta() == deformed.eta());
}

TEST_CASE("function calls in expressions are rejected with the field path") {
    ManifoldDocument doc = builtin_example_document(+1, Rational(6), Rational(0));
    doc.metric[0][0] = "sin(x)";
    try {
        instantiate_document(doc);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        std::string what = e.what();
        CHECK(what.find("metric[0][0]") != std::string::npos);
        CHECK(what.find("function calls") != std::string::npos);
    }
}

TEST_CASE("non-symmetric metric matrices are rejected") {
    ManifoldDocument doc = builtin_example_document(+1, Rational(6), Rational(0));
    doc.metric[0][1] = "1";
    CHECK_THROWS_AS(instantiate_document(doc), InvariantViolation);
}

TEST_CASE("axiom violations in documents are rejected on load") {
    ManifoldDocument doc = builtin_example_document(+1, Rational(6), Rational(0));
    doc.eta = {"-y", "0", "1"}; // doubled eta
    CHECK_THROWS_AS(instantiate_document(doc), InvariantViolation);
}

TEST_CASE("malformed json and missing fields are parse errors") {
    CHECK_THROWS_AS(parse_document("not json at all {"), ParseError);
    CHECK_THROWS_AS(parse_document("{\"dimension\": 3}"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"dimension": 0, "coordinates": []})"), ParseError);
    // epsilon must be +-1
    ManifoldDocument doc = builtin_example_document(+1, Rational(6), Rational(0));
    std::string text = serialize_document(doc);
    std::string bad = text;
    bad.replace(bad.find("\"epsilon\": 1"), 12, "\"epsilon\": 2");
    CHECK_THROWS_AS(parse_document(bad), ParseError);
    // soliton block needs exactly one potential kind
    std::string both = text;
    both.replace(both.find("\"vector\": ["), 11, "\"potential\": \"x\", \"vector\": [");
    CHECK_THROWS_AS(parse_document(both), ParseError);
    // float literals are not in the grammar
    ManifoldDocument doc2 = builtin_example_document(+1, Rational(6), Rational(0));
    doc2.xi[2] = "2.0";
    CHECK_THROWS_AS(instantiate_document(doc2), ParseError);
    // rationals in the soliton block are "p/q" strings
    ManifoldDocument doc3 = builtin_example_document(+1, Rational(6), Rational(0));
    doc3.soliton->lambda = "1.5";
    CHECK_THROWS_AS(instantiate_document(doc3), ParseError);
}

TEST_CASE("example documents for both causal characters load") {
    for (int eps : {+1, -1}) {
        ManifoldDocument doc = builtin_example_document(eps, Rational(0), Rational(0));
        LoadedManifold m = instantiate_document(doc);
        CHECK(m.structure.epsilon() == eps);
        CHECK(classify(m.structure).is_sasakian);
    }
}

TEST_CASE("fixture files are byte-stable under reserialization") {
    std::string text = slurp(fixture("example_sasakian_r3.json"));
    LoadedManifold m = instantiate_document(parse_document(text));
    CHECK(serialize_document(document_from_structure(m.structure, m.soliton, m.document.name)) ==
          text);
}
