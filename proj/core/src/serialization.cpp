#include "shortbasis/serialization.hpp"

#include <json.hpp>

#include "shortbasis/error.hpp"

namespace shortbasis {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& what) {
  throw MathError(ErrorCode::kInvalidArgument, "malformed basis JSON: " + what);
}

Int decimal(const json& value, const char* where) {
  if (!value.is_string()) malformed(std::string(where) + " must be a decimal string");
  try {
    return parse_int(value.get<std::string>());
  } catch (const MathError&) {
    malformed(std::string(where) + " is not a decimal integer");
  }
}

}  // namespace

std::string basis_to_json(const Basis& basis,
                          const std::optional<DecompositionProblem>& problem, int indent) {
  ordered_json doc;
  doc["scheme"] = basis.scheme;
  doc["r"] = basis.dimension();
  doc["modulus"] = problem ? ordered_json(to_decimal(problem->modulus())) : ordered_json();
  ordered_json eigen = ordered_json::array();
  if (problem) {
    for (const Int& l : problem->eigenvalues()) eigen.push_back(to_decimal(l));
  }
  doc["eigenvalues"] = std::move(eigen);
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    ordered_json row = ordered_json::array();
    for (const Int& x : basis.rows.row(i)) row.push_back(to_decimal(x));
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(indent);
}

BasisDocument parse_basis_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
  if (!doc.is_object()) malformed("top level must be an object");
  if (!doc.contains("rows") || !doc["rows"].is_array()) malformed("missing \"rows\" array");

  std::vector<std::vector<Int>> rows;
  for (const json& row : doc["rows"]) {
    if (!row.is_array()) malformed("every row must be an array");
    std::vector<Int> values;
    for (const json& x : row) values.push_back(decimal(x, "row entry"));
    rows.push_back(std::move(values));
  }
  const std::size_t r = rows.size();
  if (r == 0) malformed("empty basis");
  for (const auto& row : rows) {
    if (row.size() != r) malformed("basis must be square");
  }
  if (doc.contains("r")) {
    const json& jr = doc["r"];
    const bool ok = (jr.is_number_integer() && jr.get<long long>() == static_cast<long long>(r)) ||
                    (jr.is_string() && jr.get<std::string>() == std::to_string(r));
    if (!ok) malformed("\"r\" does not match the number of rows");
  }
  std::string scheme = doc.value("scheme", std::string("unknown"));

  BasisDocument out{Basis(IntMatrix::from_rows(rows), std::move(scheme)), std::nullopt};
  if (doc.contains("modulus") && !doc["modulus"].is_null()) {
    std::vector<Int> eigen;
    if (doc.contains("eigenvalues")) {
      if (!doc["eigenvalues"].is_array()) malformed("\"eigenvalues\" must be an array");
      for (const json& l : doc["eigenvalues"]) eigen.push_back(decimal(l, "eigenvalue"));
    }
    if (eigen.size() + 1 != r) malformed("need r - 1 eigenvalues");
    out.problem.emplace(decimal(doc["modulus"], "modulus"), std::move(eigen));
  }
  return out;
}

}  // namespace shortbasis
