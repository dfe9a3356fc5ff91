#include "plslab/instance_io.hpp"

#include <algorithm>
#include <unordered_map>

#include "plslab/errors.hpp"
#include "plslab/reduction.hpp"

namespace plslab {

using nlohmann::json;

namespace {

const json& field(const json& doc, const char* name) {
  if (!doc.contains(name)) throw ParseError(std::string("instance document lacks '") + name + "'");
  return doc.at(name);
}

std::vector<std::string> string_list(const json& j, const char* name) {
  if (!j.is_array()) throw ParseError(std::string("'") + name + "' must be a list of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError(std::string("'") + name + "' must be a list of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

Rational rational_field(const json& j, const char* name) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError(std::string("'") + name + "' must be a \"p/q\" string");
}

RationalMatrix table_from(const json& j, Index n) {
  if (!j.is_array()) throw ParseError("'distances' must be a list");
  const Index strict = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (j.size() != strict)
    throw ParseError("'distances' must hold " + std::to_string(strict) + " lower-triangle entries, found " +
                     std::to_string(j.size()));
  RationalMatrix d = RationalMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  std::size_t k = 0;
  for (Eigen::Index i = 1; i < static_cast<Eigen::Index>(n); ++i)
    for (Eigen::Index c = 0; c < i; ++c) {
      d(i, c) = d(c, i) = rational_field(j[k++], "distances");
    }
  return d;
}

std::vector<Index> indices_of(const std::vector<std::string>& labels, const std::vector<std::string>& sites,
                              const char* what) {
  std::unordered_map<std::string, Index> where;
  for (Index i = 0; i < sites.size(); ++i)
    if (!where.emplace(sites[i], i).second) throw ParseError("duplicate site label '" + sites[i] + "'");
  std::vector<Index> out;
  for (const auto& l : labels) {
    const auto it = where.find(l);
    if (it == where.end()) throw ParseError(std::string(what) + " label '" + l + "' is not a site");
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

InstanceDocument parse_instance_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance document must be a JSON object");
  const json& kind = field(doc, "kind");
  if (!kind.is_string()) throw ParseError("'kind' must be a string");
  const std::vector<std::string> sites = string_list(field(doc, "sites"), "sites");
  RationalMatrix d = table_from(field(doc, "distances"), sites.size());

  InstanceDocument out;
  if (doc.contains("meta")) out.meta = doc.at("meta");
  if (doc.contains("manifest")) out.manifest = doc.at("manifest");

  if (kind == "mufl") {
    const auto facility_labels = string_list(field(doc, "facilities"), "facilities");
    std::vector<Index> facilities = indices_of(facility_labels, sites, "facility");
    std::vector<Index> clients;
    if (doc.contains("clients")) {
      clients = indices_of(string_list(doc.at("clients"), "clients"), sites, "client");
    } else {
      clients.resize(sites.size());
      for (Index i = 0; i < sites.size(); ++i) clients[i] = i;
    }
    const json& oc = field(doc, "opening_cost");
    std::vector<Rational> opening;
    if (oc.is_array()) {
      for (const auto& e : oc) opening.push_back(rational_field(e, "opening_cost"));
    } else {
      opening.assign(facilities.size(), rational_field(oc, "opening_cost"));
    }
    out.instance = MuflInstance(sites, std::move(clients), std::move(facilities), std::move(opening), std::move(d));
  } else if (kind == "dkm") {
    const json& k = field(doc, "K");
    if (!k.is_number_integer() || k.get<long long>() < 0) throw ParseError("'K' must be a nonnegative integer");
    DkmInstance inst(sites, k.get<Index>(), std::move(d));
    if (doc.contains("coords")) {
      const json& cj = doc.at("coords");
      if (!cj.is_array() || cj.size() != sites.size()) throw ParseError("'coords' must have one row per site");
      const Index dim = sites.empty() ? 0 : cj.at(0).size();
      Eigen::MatrixXd x(static_cast<Eigen::Index>(sites.size()), static_cast<Eigen::Index>(dim));
      for (Index i = 0; i < sites.size(); ++i) {
        if (!cj[i].is_array() || cj[i].size() != dim) throw ParseError("'coords' rows must share one dimension");
        for (Index c = 0; c < dim; ++c) {
          if (!cj[i][c].is_number()) throw ParseError("'coords' entries must be numbers");
          x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = cj[i][c].get<double>();
        }
      }
      inst.set_coords(std::move(x));
    }
    out.instance = std::move(inst);
  } else {
    throw ParseError("'kind' must be \"mufl\" or \"dkm\"");
  }
  return out;
}

json lower_triangle(const RationalMatrix& d) {
  json out = json::array();
  for (Eigen::Index i = 1; i < d.rows(); ++i)
    for (Eigen::Index j = 0; j < i; ++j) out.push_back(to_string(d(i, j)));
  return out;
}

namespace {

json labels_of(const std::vector<std::string>& sites, const std::vector<Index>& idx) {
  json out = json::array();
  for (const Index i : idx) out.push_back(sites[i]);
  return out;
}

}  // namespace

json to_json(const InstanceDocument& doc) {
  json out;
  std::visit(
      [&](const auto& inst) {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, MuflInstance>) {
          out["kind"] = "mufl";
          out["sites"] = inst.sites();
          out["facilities"] = labels_of(inst.sites(), inst.facilities());
          std::vector<Index> all(inst.num_sites());
          for (Index i = 0; i < all.size(); ++i) all[i] = i;
          if (inst.clients() != all) out["clients"] = labels_of(inst.sites(), inst.clients());
          const auto& oc = inst.opening_cost();
          if (std::all_of(oc.begin(), oc.end(), [&](const Rational& v) { return v == oc.front(); })) {
            out["opening_cost"] = to_string(oc.front());
          } else {
            json list = json::array();
            for (const auto& v : oc) list.push_back(to_string(v));
            out["opening_cost"] = list;
          }
          out["distances"] = lower_triangle(inst.distance());
        } else {
          out["kind"] = "dkm";
          out["sites"] = inst.points();
          out["K"] = inst.k();
          out["distances"] = lower_triangle(inst.distance());
          if (inst.coords()) {
            json rows = json::array();
            const Eigen::MatrixXd& x = *inst.coords();
            for (Eigen::Index i = 0; i < x.rows(); ++i) {
              json row = json::array();
              for (Eigen::Index c = 0; c < x.cols(); ++c) row.push_back(x(i, c));
              rows.push_back(row);
            }
            out["coords"] = rows;
          }
        }
      },
      doc.instance);
  if (!doc.meta.is_null()) out["meta"] = doc.meta;
  if (!doc.manifest.is_null()) out["manifest"] = doc.manifest;
  return out;
}

std::string serialize_instance_document(const InstanceDocument& doc) { return to_json(doc).dump(2) + "\n"; }

json reduction_meta(const SatInstance& sat, const Rational& c, ReductionTarget target) {
  json meta;
  meta["c"] = to_string(c);
  meta["W"] = sat.normalizer().str();
  meta["N"] = sat.num_variables();
  meta["M"] = sat.num_clauses();
  if (target == ReductionTarget::dkm) meta["eps"] = to_string(dkm_epsilon(sat));
  return meta;
}

json to_json(const OracleReport& report) {
  json out;
  out["target"] = to_string(report.target);
  out["instance"] = report.instance_summary;
  out["solutions_scanned"] = report.solutions_scanned;
  out["local_optima"] = report.local_optima;
  out["reasonable_local_optima"] = report.reasonable_local_optima;
  out["reasonable_solutions"] = report.reasonable_solutions;
  out["reasonable_pairs"] = report.reasonable_pairs;
  json v = json::array();
  for (const auto& x : report.violations) v.push_back({{"claim", x.claim}, {"witness", x.witness}, {"detail", x.detail}});
  out["violations"] = v;
  out["ok"] = report.ok();
  return out;
}

}  // namespace plslab
