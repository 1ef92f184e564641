#pragma once

#include <array>
#include <vector>

#include "pauligeo/gf2.hpp"

namespace pauligeo {

// A finite point-line structure with 3-point lines, points stored by value.
struct IncidenceStructure {
  std::vector<BinVec> points;              // ascending
  std::vector<std::array<int, 3>> lines;   // indices into points, each ascending

  // Lines on each point.
  std::vector<int> degrees() const;
};

// All 3-subsets of `points` whose sum lies in `sums` (normally {0}: the
// PG(n,2)-lines fully contained in the set).
IncidenceStructure collinear_triples(std::vector<BinVec> points, std::span<const BinVec> sums);
IncidenceStructure collinear_triples(std::vector<BinVec> points);

struct GqCheck {
  bool point_degree_ok = false;  // every point on t+1 lines
  bool line_size_ok = false;     // every line has s+1 points (3 here)
  bool counts_ok = false;        // (s+1)(st+1) points, (t+1)(st+1) lines
  bool axiom_ok = false;         // a point off a line is collinear with exactly one of its points
  bool ok() const { return point_degree_ok && line_size_ok && counts_ok && axiom_ok; }
};

// Parameter and axiom check for a generalized quadrangle GQ(2, t).
GqCheck check_generalized_quadrangle(const IncidenceStructure& s, int t);

}  // namespace pauligeo
