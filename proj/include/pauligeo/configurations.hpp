#pragma once

// Named, exportable configurations of the four-qubit Pauli group built on an
// ovoid of Q+(7,2). The fig_* builders produce reports; the plain structs
// underneath carry the raw geometry for checking.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pauligeo/polar.hpp"

namespace pauligeo {

struct ConfigPoint {
  BinVec coords;
  PauliWord word;
  ElementClass cls;
  std::vector<std::string> roles;

  bool has_role(std::string_view r) const;
};

enum class DotLineStyle { clique, subdivided };

class ConfigReport {
 public:
  explicit ConfigReport(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  const std::vector<ConfigPoint>& points() const { return points_; }
  const std::vector<std::array<int, 3>>& lines() const { return lines_; }
  const std::vector<std::pair<std::string, std::string>>& annotations() const { return annotations_; }

  // Adds p (or tags it again when already present) and returns its index.
  int add_point(BinVec p, std::string_view role);
  // Points must already be present. Duplicate lines are ignored.
  void add_line(BinVec a, BinVec b, BinVec c);
  void add_line(const Line& l) { add_line(l.points()[0], l.points()[1], l.points()[2]); }
  void annotate(std::string key, std::string value);

  std::optional<int> index_of(BinVec p) const;
  std::size_t count_role(std::string_view role) const;
  std::size_t count_class(ElementClass c) const;
  std::optional<std::string> annotation(std::string_view key) const;

  // Empty when every line sums to zero and every class tag matches the
  // quadric; otherwise one message per problem.
  std::vector<std::string> validate() const;

  // {"name", "points": [{"coords","word","class","role"}], "lines", "annotations"}
  std::string to_json(int indent = 2) const;
  // Undirected graph; circles for symmetric points, hexagons for skew ones.
  std::string to_dot(DotLineStyle style = DotLineStyle::clique) const;

 private:
  std::string name_;
  std::vector<ConfigPoint> points_;
  std::vector<std::array<int, 3>> lines_;
  std::vector<std::pair<std::string, std::string>> annotations_;
};

std::string words_of(const std::vector<BinVec>& points);

// --- figure-level structures ------------------------------------------------------

struct NucleiFan {
  BinVec common;                       // p
  std::vector<BinVec> nuclei;          // the 28 nuclei of conics on p, ascending
  BinVec singled;
  BinVec conic_a, conic_b;             // the singled conic's other two points
  std::vector<BinVec> six_a, six_b;    // nuclei of the conics {p, conic_a|b, x}; six_a[i] pairs with six_b[i]
  std::vector<BinVec> fifteen;         // remaining nuclei
  BinVec concurrence;                  // meet of the 6 pairing lines
  std::vector<BinVec> symmetric_fifteen;  // third points of the 30 cross lines
  IncidenceStructure gq;               // 15 symmetric + 12 skew points, lines collinear modulo p
  GqCheck gq_check;
};

// Throws UsageError unless p is on o and `singled` is the nucleus of a conic
// of o through p.
NucleiFan nuclei_fan(const Ovoid& o, BinVec p, BinVec singled);

struct HeptadAnalogue {
  BinVec first, second;                // the two shared ovoid points
  std::vector<BinVec> heptad;          // nuclei of {first, second, x}
  std::vector<BinVec> third_points;    // of the 21 heptad lines
  std::vector<BinVec> triple_nuclei;   // sums of 3-subsets of the heptad, deduplicated
  std::size_t triple_sums = 0;         // before dedup (35)
};
HeptadAnalogue heptad_analogue_of(const Ovoid& o, BinVec first, BinVec second);

enum class HeptadShape { triangle, quadrangle };

struct HeptadFamily {
  HeptadShape shape;
  std::vector<BinVec> vertices;                  // cycle order
  std::vector<std::vector<BinVec>> heptads;      // one per consecutive pair, on o
  std::vector<std::vector<BinVec>> second_heptads;  // triangle only: same pairs on the second ovoid
  std::vector<BinVec> common;                    // triangle: intersection of all heptads
  std::vector<BinVec> shared;                    // quadrangle: shared[i] = heptads[i] n heptads[i+1]
  std::vector<Line> concurrent_lines;            // quadrangle: shared point to opposite vertex
  BinVec solid_point;                            // quadrangle: fifth quadric point of the vertices' solid
};

// `vertices` in cycle order: 3 points (triangle) or 4 points (quadrangle).
// Throws UsageError for any other size or points off o.
HeptadFamily heptad_family_of(const Ovoid& o, const std::vector<BinVec>& vertices);

struct SplitCensus {
  std::vector<Ovoid> through;   // the 64 ovoids on p
  IntersectionCensus census;    // relative to the reference
  bool reference_invariant = false;  // same (35, 28) for every reference choice
};
SplitCensus sixty_three_split_of(const std::vector<Ovoid>& all, const Ovoid& reference, BinVec p);

// How often each commutation profile (in family().all() order) occurs among
// the skew elements.
std::map<std::vector<int>, std::size_t> skew_profile_distribution(const SixOvoidFamily& family);

// --- report builders ------------------------------------------------------------------

ConfigReport fig_secants(const Ovoid& o);
ConfigReport fig_conic_partition(const Ovoid& o, const Partition& partition);
ConfigReport fig_tetrad(const Ovoid& o, const Partition& partition);
ConfigReport fig_two_ovoids_conic(const Ovoid& o, const Triple& triple);
ConfigReport fig_six_ovoids(const Ovoid& o, const Partition& partition);
ConfigReport fig_commutation(const Ovoid& o, const Partition& partition, BinVec symmetric_probe, BinVec skew_probe);
ConfigReport fig_two_ovoids_point(const Ovoid& o, BinVec p, const std::vector<BinVec>& part_a);
ConfigReport fig_pentad(const Ovoid& o, const std::vector<BinVec>& pentad);
ConfigReport fig_sextet(const Ovoid& o, const std::vector<BinVec>& sextet);
ConfigReport fig_nuclei_fan(const Ovoid& o, BinVec p, BinVec singled);
ConfigReport heptad_analogue(const Ovoid& o, BinVec first, BinVec second);
ConfigReport fig_triple_nuclei(const Ovoid& o, BinVec first, BinVec second);
ConfigReport heptad_family(const Ovoid& o, const std::vector<BinVec>& vertices);
ConfigReport sixty_three_split(const std::vector<Ovoid>& all, const Ovoid& reference, BinVec p);

// --- default parameters ---------------------------------------------------------------

// Reference rows: Edge's ovoid in printed order when o is that ovoid,
// otherwise o's points in ascending order. Defaults below index into them.
std::array<BinVec, 9> reference_rows(const Ovoid& o);

struct FigureDefaults {
  Partition partition;           // {r1,r3,r9}, {r2,r4,r6}, {r5,r7,r8}
  Triple conic;                  // {r1,r3,r9}
  BinVec split_point;            // r9
  std::vector<BinVec> split_a;   // r1..r4
  std::vector<BinVec> pentad;    // r1..r5
  std::vector<BinVec> sextet;    // complement of `conic`
  BinVec fan_point;              // r9
  BinVec fan_nucleus;            // nucleus of `conic`
  BinVec heptad_first, heptad_second;   // r6, r7
  std::vector<BinVec> triangle;  // r1, r2, r3
  std::vector<BinVec> quadrangle;  // r1, r2, r3, r4
};
FigureDefaults figure_defaults(const Ovoid& o);

// Smallest symmetric point outside the family's 27 points and smallest skew
// point.
std::pair<BinVec, BinVec> default_probes(const SixOvoidFamily& family);

}  // namespace pauligeo
