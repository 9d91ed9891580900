#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "twodist/certificates/code.hpp"
#include "twodist/certificates/params.hpp"
#include "twodist/errors.hpp"
#include "twodist/linalg/rational.hpp"

namespace twodist {

namespace detail {

inline std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline Scalar read_parameter(const nlohmann::json& doc, const char* key) {
  const std::string exact_key = std::string(key) + "_exact";
  if (doc.contains(exact_key) && doc[exact_key].is_string())
    return Scalar(parse_rational(doc[exact_key].get<std::string>()));
  if (!doc.contains(key)) throw InvalidCodeError(std::string("code file lacks field '") + key + "'");
  const auto& v = doc[key];
  if (v.is_string()) return Scalar(parse_rational(v.get<std::string>()));
  if (!v.is_number()) throw InvalidCodeError(std::string("field '") + key + "' is not a number");
  return Scalar(v.get<double>());
}

}  // namespace detail

/// Reads {alpha, beta, dim, vectors}. Unknown fields are ignored; alpha and
/// beta may be numbers or rational strings such as "-1/2".
inline SphericalCode code_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidCodeError(std::string("malformed code JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidCodeError("code JSON must be an object");
  const CodeParameters params(detail::read_parameter(doc, "alpha"), detail::read_parameter(doc, "beta"));
  if (!doc.contains("vectors") || !doc["vectors"].is_array()) throw InvalidCodeError("code file lacks 'vectors'");
  SphericalCode code{0, {}, params};
  for (const auto& row : doc["vectors"]) {
    if (!row.is_array()) throw InvalidCodeError("each vector must be an array of reals");
    Vector v;
    for (const auto& x : row) {
      if (!x.is_number()) throw InvalidCodeError("vector entries must be numbers");
      v.push_back(x.get<double>());
    }
    code.vectors.push_back(std::move(v));
  }
  check_dimensions(code.vectors);
  code.dim = static_cast<int>(code.vectors.front().size());
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_integer() || doc["dim"].get<int>() != code.dim)
      throw DimensionMismatchError("'dim' does not match the vector length");
  }
  return code;
}

/// Writes with 17 significant digits. Exact parameters also get
/// alpha_exact/beta_exact string fields.
inline std::string code_to_json(const SphericalCode& code) {
  std::ostringstream out;
  out << "{\n  \"alpha\": " << detail::format_real(code.params.alpha().value()) << ",\n";
  out << "  \"beta\": " << detail::format_real(code.params.beta().value()) << ",\n";
  if (code.params.is_exact()) {
    out << "  \"alpha_exact\": \"" << code.params.alpha().str() << "\",\n";
    out << "  \"beta_exact\": \"" << code.params.beta().str() << "\",\n";
  }
  out << "  \"dim\": " << code.dim << ",\n  \"vectors\": [";
  for (std::size_t i = 0; i < code.vectors.size(); ++i) {
    out << (i ? ",\n    [" : "\n    [");
    for (std::size_t k = 0; k < code.vectors[i].size(); ++k)
      out << (k ? ", " : "") << detail::format_real(code.vectors[i][k]);
    out << "]";
  }
  out << "\n  ]\n}\n";
  return out.str();
}

inline SphericalCode read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidCodeError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return code_from_json(buf.str());
}

inline void write_code_file(const std::string& path, const SphericalCode& code) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << code_to_json(code);
}

}  // namespace twodist
