#include "plslab/mufl.hpp"

#include <algorithm>
#include <stdexcept>

namespace plslab {

namespace {

void check_indices(const std::vector<Index>& idx, Index n, const char* what) {
  std::vector<Index> sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument(std::string(what) + " repeat a site");
  if (!sorted.empty() && sorted.back() >= n) throw std::invalid_argument(std::string(what) + " index out of range");
}

}  // namespace

MuflInstance::MuflInstance(std::vector<std::string> sites, std::vector<Index> clients, std::vector<Index> facilities,
                           std::vector<Rational> opening_cost, RationalMatrix distance)
    : sites_(std::move(sites)),
      clients_(std::move(clients)),
      facilities_(std::move(facilities)),
      opening_cost_(std::move(opening_cost)),
      distance_(std::move(distance)) {
  const auto n = static_cast<Eigen::Index>(sites_.size());
  if (distance_.rows() != n || distance_.cols() != n)
    throw std::invalid_argument("distance table must be " + std::to_string(n) + "x" + std::to_string(n));
  if (facilities_.empty()) throw std::invalid_argument("facility list is empty");
  if (opening_cost_.size() != facilities_.size())
    throw std::invalid_argument("need one opening cost per facility");
  check_indices(clients_, sites_.size(), "clients");
  check_indices(facilities_, sites_.size(), "facilities");

  RationalMatrix service(static_cast<Eigen::Index>(clients_.size()), static_cast<Eigen::Index>(facilities_.size()));
  for (Index c = 0; c < clients_.size(); ++c)
    for (Index f = 0; f < facilities_.size(); ++f)
      service(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(f)) = distance_to_facility(clients_[c], f);
  scaled_ = ScaledTable(service, opening_cost_, clients_.size() + facilities_.size());
}

SolutionSet MuflInstance::solution(std::vector<Index> members) const {
  SolutionSet s;
  s.members = normalized_members(std::move(members), num_facilities());
  s.cost = phi_fl(*this, s.members);
  return s;
}

Cost phi_fl(const MuflInstance& instance, std::span<const Index> open) {
  if (open.empty()) return Cost::infinity();
  for (const Index f : open)
    if (f >= instance.num_facilities()) throw std::out_of_range("facility index " + std::to_string(f));
  const ScaledTable& scaled = instance.scaled();
  return scaled.visit([&](const auto& entries) {
    auto total = sum_of_row_minima(entries.table, open);
    for (const Index f : open) total += entries.extras[f];
    return Cost(scaled.unscale(to_integer(total)));
  });
}

std::vector<SolutionSet> swap_neighbors_mufl(const MuflInstance& instance, const SolutionSet& open) {
  const Index nf = instance.num_facilities();
  std::vector<Index> closed;
  for (Index f = 0; f < nf; ++f)
    if (!open.contains(f)) closed.push_back(f);

  std::vector<SolutionSet> out;
  out.reserve(open.size() * closed.size() + closed.size() + open.size());
  if (open.size() > 1) {
    for (const Index o : open.members) {
      std::vector<Index> m;
      for (const Index x : open.members)
        if (x != o) m.push_back(x);
      out.push_back(instance.solution(std::move(m)));
    }
  }
  for (const Index c : closed) {
    std::vector<Index> m = open.members;
    m.push_back(c);
    out.push_back(instance.solution(std::move(m)));
  }
  for (const Index o : open.members) {
    for (const Index c : closed) {
      std::vector<Index> m = open.members;
      *std::find(m.begin(), m.end(), o) = c;
      out.push_back(instance.solution(std::move(m)));
    }
  }
  return out;
}

MetricReport validate_metric(const RationalMatrix& distance) {
  MetricReport report;
  const Eigen::Index n = distance.rows();
  if (distance.cols() != n) throw std::invalid_argument("distance table must be square");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (distance(i, i) != 0) report.nonzero_diagonal.push_back(static_cast<Index>(i));
    for (Eigen::Index j = 0; j < n; ++j) {
      if (distance(i, j) < 0) report.negative_entries.emplace_back(i, j);
      if (i < j && distance(i, j) != distance(j, i)) report.asymmetric_pairs.emplace_back(i, j);
    }
  }
  const ScaledTable scaled(distance, {}, 2);
  scaled.visit([&](const auto& entries) {
    const auto& d = entries.table;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = 0; q < n; ++q) {
        if (q == p) continue;
        for (Eigen::Index r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          if (d(p, r) > d(p, q) + d(q, r))
            report.triangle_violations.push_back({static_cast<Index>(p), static_cast<Index>(q), static_cast<Index>(r)});
        }
      }
  });
  return report;
}

}  // namespace plslab
