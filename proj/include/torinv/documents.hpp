#pragma once

#include "torinv/segre_veronese.hpp"
#include "torinv/separating.hpp"

#include <json.hpp>

namespace torinv {

using json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

// Integers within ±2^53 are JSON numbers, larger ones decimal strings.
// Index sets are 1-based on the wire.

json to_json(const Integer& v);
json to_json(const IntVector& v);
json to_json(const std::vector<IntVector>& vs);
json index_set_to_json(const IndexSet& I);

Integer integer_from_json(const json& j, const std::string& field);
IntVector vector_from_json(const json& j, const std::string& field);
IndexSet index_set_from_json(const json& j, Eigen::Index n, const std::string& field);

/// {"rank": r, "weights": [[...], ...]} with one array per column.
TorusRep rep_from_json(const json& doc);
json rep_to_json(const TorusRep& rep);

/// {"generators": [[...], ...]}
MonomialSemigroup generators_from_json(const json& doc, Eigen::Index n);
json generators_to_json(const MonomialSemigroup& S);

json certificate_to_json(const Char0Certificate& cert);
Char0Certificate char0_certificate_from_json(const json& j, Eigen::Index n);

json charp_to_json(const CharPVerdict& v);
json charp_certificate_to_json(const CharPVerdict& v);
CharPVerdict charp_from_json(const json& result, const json& certificate, Eigen::Index n);

json point_to_json(const TorusPoint& p);
TorusPoint point_from_json(const json& j, Eigen::Index n, const std::string& field);
json oracle_to_json(const OracleWitness& w);
OracleWitness oracle_from_json(const json& j, Eigen::Index n);

json bounds_to_json(const BoundsReport& b);
json sepvar_to_json(const SepVarDecomposition& d);

/// {"command", "result", "certificate", "version"}; keys come out sorted.
json result_document(const std::string& command, json result, json certificate = nullptr);

} // namespace torinv
