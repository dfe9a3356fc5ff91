#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "plslab/dkm.hpp"
#include "plslab/mufl.hpp"
#include "plslab/oracle.hpp"
#include "plslab/sat.hpp"

namespace plslab {

/// The shared instance document:
///   kind          "mufl" | "dkm"
///   sites         labels
///   clients       client labels (mufl, optional; default every site)
///   facilities    facility labels (mufl)
///   opening_cost  "p/q", or one "p/q" per facility (mufl)
///   K             integer (dkm)
///   distances     strict lower triangle, row-major, as "p/q" strings
///   coords        per-site lists of floats (dkm, optional)
///   meta          free-form audit record
struct InstanceDocument {
  std::variant<MuflInstance, DkmInstance> instance;
  nlohmann::json meta;
  nlohmann::json manifest;
};

/// Throws ParseError on malformed JSON or fields, std::invalid_argument when
/// the fields describe an invalid instance.
InstanceDocument parse_instance_document(std::string_view text);
nlohmann::json to_json(const InstanceDocument& doc);
std::string serialize_instance_document(const InstanceDocument& doc);

/// Lower-triangular row-major list (diagonal excluded).
nlohmann::json lower_triangle(const RationalMatrix& d);

/// {c, W, N, M} plus eps for the K-means target.
nlohmann::json reduction_meta(const SatInstance& sat, const Rational& c, ReductionTarget target);

nlohmann::json to_json(const OracleReport& report);

}  // namespace plslab
