#ifndef TFORGE_IO_HPP
#define TFORGE_IO_HPP

#include "tforge/liealg.hpp"
#include "tforge/repn.hpp"
#include "tforge/tannaka.hpp"
#include "tforge/toric.hpp"
#include "tforge/uea.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace tforge::io
{

  /// nlohmann::json keeps object keys in a std::map, so dumps are key-sorted.
  using Json = nlohmann::json;

  inline constexpr const char *kSchema = "tannaka-forge/1";

  /// Parses a file; InputError carries the path plus line and column of a syntax error.
  Json parse_file(const std::string &path);
  Json parse_text(const std::string &text, const std::string &source);
  /// Two-space indented, sorted keys, trailing newline.
  std::string canonical_dump(const Json &j);
  /// Adds the schema header to an object report.
  Json with_schema(Json report);

  /// `where` is prefixed to error messages, e.g. "sl2.json:/brackets/0/value".
  Json to_json(const Rational &q);
  Rational rational_from_json(const Json &j, const std::string &where);
  Json to_json(const QVector &v);
  QVector vector_from_json(const Json &j, const std::string &where, std::size_t expected_size);
  Json to_json(const QMatrix &m);
  QMatrix matrix_from_json(const Json &j, const std::string &where);

  Json algebra_to_json(const LieAlgebra &g);
  /// Omitted pairs are zero; the antisymmetric partner of each listed pair is filled in.
  /// Axioms are not checked here.
  LieAlgebra algebra_from_json(const Json &j, const std::string &where);

  /// Unvalidated module data as read from JSON.
  struct RawModule
  {
    std::string id;
    std::vector<QMatrix> action;
  };

  Json module_to_json(const Module &v);
  /// Missing basis names act by zero.
  RawModule raw_module_from_json(const Json &j, const LieAlgebra &g, const std::string &where);
  /// Accepts one module object or { "modules": [...] }.
  std::vector<RawModule> raw_modules_from_json(const Json &j, const LieAlgebra &g, const std::string &where);

  Json dual_to_json(const TruncatedDual &h, const LieAlgebra &g);
  TruncatedDual dual_from_json(const Json &j, const LieAlgebra &g, const std::string &where);

  /// { object id: matrix }
  Json family_to_json(const CategoryClosure &c, const NatFamily &f);
  NatFamily family_from_json(const Json &j, const CategoryClosure &c, const std::string &where);

  Json monoid_to_json(const WeightMonoid &a);
  /// { "rank": r, "generators": [[ints]] }
  WeightMonoid monoid_from_json(const Json &j, const std::string &where);

} // namespace tforge::io

#endif
