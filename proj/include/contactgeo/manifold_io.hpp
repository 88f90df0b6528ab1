#pragma once

#include "contactgeo/soliton.hpp"

#include <optional>
#include <string>
#include <vector>

namespace contactgeo {

// On-disk description of a contact pseudo-metric structure: every entry is
// an expression string in the chart coordinates, rationals are written as
// "p/q" strings. No floating point anywhere.
struct SolitonBlock {
    std::optional<std::vector<std::string>> vector; // component expressions
    std::optional<std::string> potential;           // scalar expression
    std::string lambda;
    std::string mu;
};

struct ManifoldDocument {
    std::string name;
    size_t dimension = 0;
    std::vector<std::string> coordinates;
    int epsilon = 1;
    std::vector<std::vector<std::string>> metric; // dim x dim
    std::vector<std::string> xi;
    std::vector<std::string> eta;
    std::vector<std::vector<std::string>> phi; // phi[row][col] = phi^row_col
    std::optional<SolitonBlock> soliton;
};

struct LoadedManifold {
    ContactStructure structure;
    std::optional<SolitonData> soliton;
    ManifoldDocument document;
};

// JSON text -> document; throws ParseError with the offending field path.
ManifoldDocument parse_document(const std::string& json_text);

// Deterministic serialization: fixed key order, canonical expressions.
std::string serialize_document(const ManifoldDocument& doc);

// Builds the structure (throws ParseError for bad expressions with their
// field path, InvariantViolation for axiom failures).
LoadedManifold instantiate_document(const ManifoldDocument& doc);

LoadedManifold load_manifold_file(const std::string& path);

ManifoldDocument document_from_structure(const ContactStructure& s,
                                         const std::optional<SolitonData>& soliton,
                                         std::string name);

// Document form of the built-in R^3 example for the given parameters.
ManifoldDocument builtin_example_document(int epsilon, const Rational& lambda,
                                          const Rational& mu);

} // namespace contactgeo
