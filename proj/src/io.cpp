#include "uncrel/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace uncrel {

namespace {

json pairs_from(const cdouble* data, std::size_t count) {
  json entries = json::array();
  for (std::size_t i = 0; i < count; ++i)
    entries.push_back(json::array({data[i].real(), data[i].imag()}));
  return entries;
}

void require(bool ok, const std::string& field, const std::string& what) {
  if (!ok) throw ParameterError(field + ": " + what);
}

std::size_t parse_dim(const json& j) {
  require(j.is_object(), "$", "expected a JSON object");
  require(j.contains("dim"), "dim", "missing");
  require(j["dim"].is_number_integer(), "dim", "expected an integer");
  const auto dim = j["dim"].get<long long>();
  require(dim >= 1, "dim", "must be >= 1");
  return static_cast<std::size_t>(dim);
}

std::string parse_kind(const json& j) {
  require(j.contains("kind"), "kind", "missing");
  require(j["kind"].is_string(), "kind", "expected a string");
  const auto kind = j["kind"].get<std::string>();
  require(kind == "ket" || kind == "density" || kind == "operator", "kind",
          "expected \"ket\", \"density\", or \"operator\"");
  return kind;
}

std::vector<cdouble> parse_entries(const json& j, std::size_t expected) {
  require(j.contains("entries"), "entries", "missing");
  const json& entries = j["entries"];
  require(entries.is_array(), "entries", "expected an array");
  require(entries.size() == expected,
          "entries", "expected " + std::to_string(expected) + " [re, im] pairs, got " +
                         std::to_string(entries.size()));
  std::vector<cdouble> out;
  out.reserve(expected);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const json& pair = entries[i];
    const std::string field = "entries[" + std::to_string(i) + "]";
    require(pair.is_array() && pair.size() == 2, field, "expected an [re, im] pair");
    require(pair[0].is_number() && pair[1].is_number(), field, "expected numeric re and im");
    out.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return out;
}

}  // namespace

json ket_to_json(const ComplexVector& v) {
  json j;
  j["dim"] = v.dim();
  j["kind"] = "ket";
  j["entries"] = pairs_from(v.entries().data(), v.dim());
  return j;
}

json matrix_to_json(const ComplexMatrix& m, const std::string& kind) {
  if (kind != "density" && kind != "operator")
    throw ParameterError("kind: expected \"density\" or \"operator\"");
  if (!m.is_square()) throw DimensionError("only square matrices are serialized");
  json j;
  j["dim"] = m.rows();
  j["kind"] = kind;
  j["entries"] = pairs_from(m.data().data(), m.rows() * m.cols());
  return j;
}

json state_to_json(const QuantumState& state) {
  return state.is_pure() ? ket_to_json(state.ket()) : matrix_to_json(state.rho(), "density");
}

ComplexVector json_to_ket(const json& j) {
  const std::size_t dim = parse_dim(j);
  require(parse_kind(j) == "ket", "kind", "expected \"ket\"");
  const auto entries = parse_entries(j, dim);
  ComplexVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = entries[i];
  return v;
}

ComplexMatrix json_to_matrix(const json& j, const std::string& expected_kind) {
  const std::size_t dim = parse_dim(j);
  require(parse_kind(j) == expected_kind, "kind", "expected \"" + expected_kind + "\"");
  const auto entries = parse_entries(j, dim * dim);
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) m(i, k) = entries[i * dim + k];
  return m;
}

QuantumState json_to_state(const json& j) {
  parse_dim(j);
  const std::string kind = parse_kind(j);
  require(kind != "operator", "kind", "expected \"ket\" or \"density\" for a state");
  if (kind == "ket") return QuantumState::pure(json_to_ket(j));
  return QuantumState::density(json_to_matrix(j, "density"));
}

json report_to_json(const InequalityReport& report) {
  json j;
  j["relation"] = relation_name(report.relation);
  j["lhs"] = report.lhs;
  j["rhs"] = report.rhs;
  j["slack"] = report.slack;
  j["scale"] = report.scale;
  j["satisfied"] = report.satisfied;
  return j;
}

json classification_to_json(const SqueezingClassification& c) {
  json j;
  j["M"] = c.M;
  j["beta"] = c.beta;
  j["threshold"] = c.threshold;
  j["variances"] = c.gen_variances;
  j["squeezed_indices"] = c.squeezed_indices;
  j["q"] = c.q;
  j["label"] = c.label;
  j["relations_ok"] = c.relations_ok;
  return j;
}

json oscillator_to_json(const OscillatorResult& r) {
  json j = report_to_json(r.report);
  j["sigma_x"] = r.sigma_x;
  j["sigma_p"] = r.sigma_p;
  j["sigma_r"] = r.sigma_r;
  j["truncation_tail"] = r.truncation_tail;
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParameterError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IoError("write to " + path + " failed");
}

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace uncrel
