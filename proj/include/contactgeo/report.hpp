#pragma once

#include "contactgeo/contact.hpp"
#include "contactgeo/soliton.hpp"

#include <json.hpp>

#include <string>

namespace contactgeo {

// Deterministic report rendering. JSON objects use a fixed key order and
// name-sorted check lists so identical inputs produce byte-identical
// output.

nlohmann::ordered_json report_to_json(const StructureReport& rep);
nlohmann::ordered_json classification_to_json(const ClassificationResult& c);
// tau_naming: print the soliton constant as tau (kappa-mu structures).
nlohmann::ordered_json verdict_to_json(const SolitonVerdict& v, const Rational& lambda,
                                       const Rational& mu, bool tau_naming);
nlohmann::ordered_json theorem_to_json(const TheoremReport& rep);

std::string report_to_table(const StructureReport& rep);
std::string classification_to_table(const ClassificationResult& c);
std::string verdict_to_table(const SolitonVerdict& v, const Rational& lambda, const Rational& mu,
                             bool tau_naming);
std::string theorem_to_table(const TheoremReport& rep);

} // namespace contactgeo
