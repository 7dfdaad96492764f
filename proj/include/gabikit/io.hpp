// JSON definition files and serialization of derived structures.
//
// A definition file holds one JSON object. Algebra files:
//   {
//     "field": {"kind": "rationals"} or {"kind": "prime", "p": 5},
//     "dim": n,
//     "basis_names": [n strings],
//     "mul": n x n x n nested arrays, mul[i][j] = coordinates of e_i e_j,
//     "unit": [n scalars],
//     "gabi": {"delta": n^2 x n matrix, "eps": 1 x n matrix,
//              "side": "left" or "right"}            (optional),
//     "modules": [{"name": str, "dim": d, "action": [n d x d matrices]}]
//                                                     (optional)
//   }
// Monoid files: {"size": n, "identity": i, "table": n x n array of indices}.
//
// Matrices are nested arrays of rows (row-major, matching the convention that
// e_i (x) e_j flattens to index i * dim + j). Scalars serialize as strings
// over the rationals ("-3/2") and as plain integers over prime fields; the
// parser accepts both forms over either field.
#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gabikit/gabi.hpp"
#include "gabikit/module.hpp"
#include "gabikit/monoid.hpp"

namespace gabikit {

/// A test module from a definition file, keyed by its reporting label.
struct NamedModule {
  std::string name;
  AModule module;
};

/// Everything an algebra definition file can carry.
struct AlgebraDefinition {
  FinAlgebra algebra;
  std::optional<GabiStructure> gabi;
  std::vector<NamedModule> modules;
};

using Definition = std::variant<AlgebraDefinition, FiniteMonoid>;

/// How deep parsing validates. ShapesOnly checks syntax, dimensions, and
/// scalar ranges; Validated additionally enforces the algebraic invariants
/// of the parsed objects (associativity and unit laws of the algebra or
/// monoid, module laws of each test module), naming the offending entry.
/// Comultiplication data is shape-checked only: its axioms are what the
/// checkers exist to test.
enum class ParseStrictness { ShapesOnly, Validated };

/// Parse a definition from text; origin names the source in errors. All
/// failures (syntax, shape, invariant) throw input_error carrying the
/// offending key path.
[[nodiscard]] Definition parse_definition_text(
    const std::string& text, const std::string& origin,
    ParseStrictness strictness = ParseStrictness::Validated);

/// Parse a definition file from disk.
[[nodiscard]] Definition parse_definition(
    const std::string& path, ParseStrictness strictness = ParseStrictness::Validated);

[[nodiscard]] nlohmann::json field_to_json(const FieldSpec& field);
[[nodiscard]] nlohmann::json scalar_to_json(const Scalar& s);
[[nodiscard]] nlohmann::json matrix_to_json(const Matrix& m);

/// Parsers for the pieces; `at` is the key path used in error messages.
[[nodiscard]] FieldSpec field_from_json(const nlohmann::json& j, const std::string& at);
[[nodiscard]] Scalar scalar_from_json(const nlohmann::json& j, const FieldSpec& field,
                                      const std::string& at);
[[nodiscard]] Matrix matrix_from_json(const nlohmann::json& j, const FieldSpec& field,
                                      std::size_t rows, std::size_t cols,
                                      const std::string& at);

}  // namespace gabikit
