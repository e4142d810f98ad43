#pragma once

/**
 * @file workspace.hpp
 * @brief JSON workspaces of named algebras, modules, extensions, sections and
 * symmetric maps.
 *
 * Rationals are written as strings. Output is canonical: sorted keys, two-space
 * indentation, LF line endings, polynomial terms in graded-lex order and cochain
 * entries in lexicographic tuple order (zero entries omitted), so that parsing
 * and re-serializing a canonical document reproduces it byte for byte.
 */

#include <map>
#include <string>
#include <variant>

#include <json.hpp>

#include "lieclass/characteristic.hpp"

namespace lieclass {

/// Malformed JSON or a document that does not follow the schema. The message
/// carries the location (line/column or JSON pointer).
class ParseError : public Error {
public:
  using Error::Error;
};

using json = nlohmann::json;

struct NamedRepresentation {
  std::string algebra;
  Representation rep;
};

struct NamedSection {
  std::string extension;
  std::variant<Section, PolySection> map;

  [[nodiscard]] bool is_polynomial() const { return map.index() == 1; }
};

struct NamedPolynomial {
  std::string algebra;
  SymMultiMap map;
};

struct Workspace {
  std::map<std::string, LieAlgebra> algebras;
  std::map<std::string, NamedRepresentation> representations;
  std::map<std::string, Extension> extensions;
  std::map<std::string, NamedSection> sections;
  std::map<std::string, NamedPolynomial> polynomials;

  /// Lookups by name; throw ValidationError naming the missing object.
  [[nodiscard]] const LieAlgebra& algebra(const std::string& name) const;
  [[nodiscard]] const NamedRepresentation& representation(const std::string& name) const;
  [[nodiscard]] const Extension& extension(const std::string& name) const;
  [[nodiscard]] const NamedSection& section(const std::string& name) const;
  [[nodiscard]] const NamedPolynomial& polynomial(const std::string& name) const;

  /// Rational section `name`, checked to belong to extension `ext`.
  [[nodiscard]] Section rational_section(const std::string& name, const std::string& ext) const;
  /// Symmetric map `name`, checked to be defined on the kernel of `ext`.
  [[nodiscard]] SymMultiMap polynomial_on_kernel(const std::string& name, const std::string& ext) const;
};

bool operator==(const Workspace& a, const Workspace& b);

/// Throws ParseError or ValidationError (naming the object and invariant).
Workspace parse_workspace(const std::string& text);
std::string serialize_workspace(const Workspace& w);
/// Canonical text of any JSON value (as written by serialize_workspace).
std::string canonical_text(const json& j);

json to_json(const Rational& r);
json to_json(const MultiPoly& p);
json to_json(const LieAlgebra& g);
json to_json(const Extension& e);
json to_json(const SymMultiMap& f);
json to_json(const RatCochain& c);
json to_json(const PolyCochain& c);
json to_json(const CharacteristicClass& c);
json to_json(const CohomologySpace& h);
json to_json(const TheoremReport& r);

template <typename S>
json matrix_to_json(const Matrix<S>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace lieclass
