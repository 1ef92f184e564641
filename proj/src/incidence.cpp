#include "pauligeo/incidence.hpp"

#include <algorithm>

namespace pauligeo {

std::vector<int> IncidenceStructure::degrees() const {
  std::vector<int> deg(points.size());
  for (const auto& l : lines)
    for (int i : l) ++deg[i];
  return deg;
}

IncidenceStructure collinear_triples(std::vector<BinVec> points, std::span<const BinVec> sums) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  IncidenceStructure s;
  s.points = std::move(points);
  const auto& p = s.points;
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const auto total = p[i] + p[j] + p[k];
        if (std::find(sums.begin(), sums.end(), total) != sums.end()) s.lines.push_back({i, j, k});
      }
  return s;
}

IncidenceStructure collinear_triples(std::vector<BinVec> points) {
  if (points.empty()) return {};
  const BinVec zero = BinVec::zero(points.front().dim());
  return collinear_triples(std::move(points), std::span<const BinVec>(&zero, 1));
}

GqCheck check_generalized_quadrangle(const IncidenceStructure& s, int t) {
  constexpr int kS = 2;
  GqCheck out;
  const auto n = s.points.size();
  out.counts_ok = n == static_cast<std::size_t>((kS + 1) * (kS * t + 1)) &&
                  s.lines.size() == static_cast<std::size_t>((t + 1) * (kS * t + 1));
  out.line_size_ok = true;  // lines are triples by construction
  const auto deg = s.degrees();
  out.point_degree_ok = std::all_of(deg.begin(), deg.end(), [&](int d) { return d == t + 1; });

  std::vector<std::vector<bool>> collinear(n, std::vector<bool>(n, false));
  for (const auto& l : s.lines)
    for (int a : l)
      for (int b : l)
        if (a != b) collinear[a][b] = true;

  out.axiom_ok = true;
  for (const auto& l : s.lines)
    for (std::size_t p = 0; p < n && out.axiom_ok; ++p) {
      if (std::find(l.begin(), l.end(), static_cast<int>(p)) != l.end()) continue;
      int hits = 0;
      for (int q : l) hits += collinear[p][q];
      if (hits != 1) out.axiom_ok = false;
    }
  return out;
}

}  // namespace pauligeo
