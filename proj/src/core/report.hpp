#pragma once

#include <string>

#include <json.hpp>

#include "complex.hpp"
#include "fiber.hpp"
#include "invariants.hpp"

namespace margeo {

constexpr int kSchemaVersion = 1;

/// Integers that fit in int64 become JSON numbers, larger ones decimal strings.
nlohmann::json integer_json(const Integer& v);
nlohmann::json rational_json(const Rational& v);

nlohmann::json to_json(const CodegreeResult& r);
nlohmann::json to_json(const NormalityEvidence& e);
nlohmann::json to_json(const GorensteinCertificate& c);
nlohmann::json to_json(const WmltResult& r);
nlohmann::json to_json(const ReducibleDecomposition& d);
nlohmann::json to_json(const FactorizationReport& r);
nlohmann::json to_json(const TransferReport& r);

/// Verdict object {negative, summary}.
nlohmann::json make_verdict(bool negative, std::string summary);

/// Human-readable rendering computed from a report document alone.
std::string render_table(const nlohmann::json& doc);
/// CSV for `matrix` documents only.
std::string render_csv(const nlohmann::json& doc);
/// format: json | table | both | csv
std::string render(const nlohmann::json& doc, const std::string& format);

}  // namespace margeo
