#include "gabikit/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>

namespace gabikit {

namespace {

using nlohmann::json;

[[noreturn]] void fail_at(const std::string& at, const std::string& what) {
  throw input_error(at + ": " + what);
}

const json& field_of(const json& j, const std::string& key, const std::string& at) {
  if (!j.is_object()) fail_at(at, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail_at(at, "missing key \"" + key + "\"");
  return *it;
}

std::size_t size_from_json(const json& j, const std::string& at) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    fail_at(at, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<Scalar> vector_from_json(const json& j, const FieldSpec& field, std::size_t n,
                                     const std::string& at) {
  if (!j.is_array() || j.size() != n)
    fail_at(at, "expected an array of " + std::to_string(n) + " scalars");
  std::vector<Scalar> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(scalar_from_json(j[i], field, at + "[" + std::to_string(i) + "]"));
  return out;
}

FinAlgebra algebra_from_json(const json& j, const std::string& at) {
  const FieldSpec field = field_from_json(field_of(j, "field", at), at + ".field");
  const std::size_t n = size_from_json(field_of(j, "dim", at), at + ".dim");
  if (n == 0) fail_at(at + ".dim", "an algebra has dimension at least 1");

  FinAlgebra a{field, n, {}, {}, {}};
  const json& names = field_of(j, "basis_names", at);
  if (!names.is_array() || names.size() != n)
    fail_at(at + ".basis_names", "expected an array of " + std::to_string(n) + " strings");
  for (std::size_t i = 0; i < n; ++i) {
    if (!names[i].is_string())
      fail_at(at + ".basis_names[" + std::to_string(i) + "]", "expected a string");
    a.basis_names.push_back(names[i].get<std::string>());
  }

  const json& mul = field_of(j, "mul", at);
  if (!mul.is_array() || mul.size() != n)
    fail_at(at + ".mul", "expected " + std::to_string(n) + " rows");
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_at = at + ".mul[" + std::to_string(i) + "]";
    if (!mul[i].is_array() || mul[i].size() != n)
      fail_at(row_at, "expected " + std::to_string(n) + " products");
    std::vector<std::vector<Scalar>> row;
    row.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
      row.push_back(
          vector_from_json(mul[i][k], field, n, row_at + "[" + std::to_string(k) + "]"));
    a.mul.push_back(std::move(row));
  }

  a.unit = vector_from_json(field_of(j, "unit", at), field, n, at + ".unit");
  a.validate_shape();
  return a;
}

GabiStructure gabi_from_json(const json& j, const FinAlgebra& a, const std::string& at) {
  GabiStructure g{a,
                  matrix_from_json(field_of(j, "delta", at), a.field, a.dim * a.dim, a.dim,
                                   at + ".delta"),
                  matrix_from_json(field_of(j, "eps", at), a.field, 1, a.dim, at + ".eps"),
                  GabiSide::Left};
  if (const auto it = j.find("side"); it != j.end()) {
    if (!it->is_string()) fail_at(at + ".side", "expected \"left\" or \"right\"");
    const auto side = it->get<std::string>();
    if (side == "left")
      g.side = GabiSide::Left;
    else if (side == "right")
      g.side = GabiSide::Right;
    else
      fail_at(at + ".side", "expected \"left\" or \"right\", got \"" + side + "\"");
  }
  g.validate_shape();
  return g;
}

NamedModule module_from_json(const json& j, const FinAlgebra& a, ParseStrictness strictness,
                             const std::string& at) {
  const json& name = field_of(j, "name", at);
  if (!name.is_string()) fail_at(at + ".name", "expected a string");
  const std::size_t d = size_from_json(field_of(j, "dim", at), at + ".dim");
  const json& action = field_of(j, "action", at);
  if (!action.is_array() || action.size() != a.dim)
    fail_at(at + ".action", "expected " + std::to_string(a.dim) + " action matrices");
  AModule m{a, d, {}};
  for (std::size_t i = 0; i < a.dim; ++i)
    m.action.push_back(matrix_from_json(action[i], a.field, d, d,
                                        at + ".action[" + std::to_string(i) + "]"));
  if (strictness == ParseStrictness::Validated) {
    const Report r = check_module(m);
    if (!r.passed()) {
      const Finding& f = r.findings().front();
      fail_at(at, "module \"" + name.get<std::string>() + "\" violates the " + f.axiom +
                      " law at " + f.witness + ": " + f.detail);
    }
  }
  return NamedModule{name.get<std::string>(), std::move(m)};
}

FiniteMonoid monoid_from_json(const json& j, ParseStrictness strictness,
                              const std::string& at) {
  FiniteMonoid m;
  m.size = size_from_json(field_of(j, "size", at), at + ".size");
  m.identity = size_from_json(field_of(j, "identity", at), at + ".identity");
  const json& table = field_of(j, "table", at);
  if (!table.is_array() || table.size() != m.size)
    fail_at(at + ".table", "expected " + std::to_string(m.size) + " rows");
  for (std::size_t i = 0; i < m.size; ++i) {
    const std::string row_at = at + ".table[" + std::to_string(i) + "]";
    if (!table[i].is_array() || table[i].size() != m.size)
      fail_at(row_at, "expected " + std::to_string(m.size) + " entries");
    std::vector<std::size_t> row;
    row.reserve(m.size);
    for (std::size_t k = 0; k < m.size; ++k)
      row.push_back(size_from_json(table[i][k], row_at + "[" + std::to_string(k) + "]"));
    m.table.push_back(std::move(row));
  }
  if (strictness == ParseStrictness::Validated) {
    try {
      validate_monoid(m);
    } catch (const input_error& e) {
      fail_at(at + ".table", e.what());
    }
  } else {
    if (m.identity >= m.size) fail_at(at + ".identity", "index out of range");
    for (std::size_t i = 0; i < m.size; ++i)
      for (std::size_t k = 0; k < m.size; ++k)
        if (m.table[i][k] >= m.size)
          fail_at(at + ".table[" + std::to_string(i) + "][" + std::to_string(k) + "]",
                  "index out of range");
  }
  return m;
}

}  // namespace

FieldSpec field_from_json(const json& j, const std::string& at) {
  const json& kind = field_of(j, "kind", at);
  if (!kind.is_string()) fail_at(at + ".kind", "expected \"rationals\" or \"prime\"");
  const auto k = kind.get<std::string>();
  if (k == "rationals") return FieldSpec::rationals();
  if (k == "prime") {
    const json& p = field_of(j, "p", at);
    if (!p.is_number_unsigned() && !p.is_number_integer())
      fail_at(at + ".p", "expected an integer modulus");
    const auto v = p.get<long long>();
    if (v < 2 || v >= (1ll << 31)) fail_at(at + ".p", "modulus out of range");
    try {
      return FieldSpec::prime(static_cast<std::uint32_t>(v));
    } catch (const input_error& e) {
      fail_at(at + ".p", e.what());
    }
  }
  fail_at(at + ".kind", "expected \"rationals\" or \"prime\", got \"" + k + "\"");
}

Scalar scalar_from_json(const json& j, const FieldSpec& field, const std::string& at) {
  try {
    if (j.is_number_integer() || j.is_number_unsigned())
      return Scalar::of_int(field, j.get<long long>());
    if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
  } catch (const input_error& e) {
    fail_at(at, e.what());
  }
  fail_at(at, "expected a scalar (integer or string)");
}

Matrix matrix_from_json(const json& j, const FieldSpec& field, std::size_t rows,
                        std::size_t cols, const std::string& at) {
  if (!j.is_array() || j.size() != rows)
    fail_at(at, "expected a matrix with " + std::to_string(rows) + " rows");
  Matrix out(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_at = at + "[" + std::to_string(r) + "]";
    out.set_row(r, vector_from_json(j[r], field, cols, row_at));
  }
  return out;
}

nlohmann::json field_to_json(const FieldSpec& field) {
  if (field.kind == FieldKind::Rationals) return json{{"kind", "rationals"}};
  return json{{"kind", "prime"}, {"p", field.p}};
}

nlohmann::json scalar_to_json(const Scalar& s) {
  if (s.field().kind == FieldKind::Rationals) return json(s.to_string());
  return json(s.residue());
}

nlohmann::json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Definition parse_definition_text(const std::string& text, const std::string& origin,
                                 ParseStrictness strictness) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(origin + ": " + e.what());
  }
  if (!j.is_object()) fail_at(origin, "expected a JSON object");

  if (j.contains("table")) return monoid_from_json(j, strictness, origin);
  if (!j.contains("mul"))
    fail_at(origin, "file defines neither an algebra (\"mul\") nor a monoid (\"table\")");

  AlgebraDefinition def{algebra_from_json(j, origin), std::nullopt, {}};
  if (strictness == ParseStrictness::Validated) {
    const Report r = check_algebra(def.algebra);
    if (!r.passed()) {
      const Finding& f = r.findings().front();
      fail_at(origin + ".mul", f.axiom + " fails at " + f.witness + ": " + f.detail);
    }
  }
  if (j.contains("gabi")) def.gabi = gabi_from_json(j["gabi"], def.algebra, origin + ".gabi");
  if (const auto it = j.find("modules"); it != j.end()) {
    if (!it->is_array()) fail_at(origin + ".modules", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i)
      def.modules.push_back(module_from_json((*it)[i], def.algebra, strictness,
                                             origin + ".modules[" + std::to_string(i) + "]"));
  }
  return def;
}

Definition parse_definition(const std::string& path, ParseStrictness strictness) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_definition_text(buf.str(), path, strictness);
}

}  // namespace gabikit
