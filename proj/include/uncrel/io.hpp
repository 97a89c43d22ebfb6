#pragma once

#include <string>

#include <json.hpp>

#include "uncrel/linalg.hpp"
#include "uncrel/multivariance.hpp"
#include "uncrel/report.hpp"
#include "uncrel/squeezing.hpp"

namespace uncrel {

/// Portable matrix/vector format: {"dim": n, "kind": "ket" | "density" |
/// "operator", "entries": [[re, im], ...]} with entries row-major (length n
/// for kets, n*n for matrices).
nlohmann::json ket_to_json(const ComplexVector& v);
nlohmann::json matrix_to_json(const ComplexMatrix& m, const std::string& kind = "operator");
nlohmann::json state_to_json(const QuantumState& state);

/// Parsers throw ParameterError naming the offending field on any schema
/// violation.
ComplexVector json_to_ket(const nlohmann::json& j);
ComplexMatrix json_to_matrix(const nlohmann::json& j, const std::string& expected_kind);
/// Accepts kind "ket" (pure state) or "density".
QuantumState json_to_state(const nlohmann::json& j);

nlohmann::json report_to_json(const InequalityReport& report);
nlohmann::json classification_to_json(const SqueezingClassification& c);
nlohmann::json oscillator_to_json(const OscillatorResult& r);

/// Whole-file helpers; failures throw IoError.
nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// Decimal form with 17 significant digits (lossless double round-trip).
std::string format_double(double value);

}  // namespace uncrel
