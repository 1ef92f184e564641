#pragma once

// Enumeration engine for the symplectic space W(2N-1,2) and the hyperbolic
// quadric Q+(2N-1,2) of symmetric Pauli elements, with the ovoid-based
// dissection of Q+(7,2).
//
// Everything N=4-specific (ovoids and their subspaces) assumes the standard
// quadric x1x5 + x2x6 + x3x7 + x4x8 = 0. Point sets are std::vector<BinVec> in
// ascending order unless stated otherwise.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pauligeo/gf2.hpp"
#include "pauligeo/incidence.hpp"
#include "pauligeo/pauli.hpp"

namespace pauligeo {

// --- closed-form counts --------------------------------------------------------

enum class SpaceKind { symplectic, parabolic, elliptic, hyperbolic };
enum class Measure { points, generators };

const char* to_string(SpaceKind k);

// Point and generator counts of W(2N-1,q), Q(2N,q), Q-(2N-1,q) and
// Q+(2N-1,q) for rank N. Throws UsageError for q < 2, N < 1, or generators
// with N < 2.
std::uint64_t expected_count(SpaceKind kind, Measure measure, int rank, int q = 2);

// --- quadric and generators ----------------------------------------------------

enum class QuadricKind { hyperbolic, elliptic, parabolic };

struct Quadric {
  QuadricKind kind = QuadricKind::hyperbolic;
  GeometryContext ctx{4};
  std::vector<BinVec> points;
  PointMask mask;

  bool contains(BinVec p) const { return mask.test(p.value()); }
};

// The quadric sum_i x_i x_{i+N} = 0 holding the symmetric elements.
Quadric hyperbolic_quadric(const GeometryContext& ctx);

enum class GeneratorSpace { symplectic, quadric };

struct GeneratorSet {
  GeneratorSpace space = GeneratorSpace::symplectic;
  int n = 0;
  std::vector<Flat> generators;   // canonical order
  std::vector<PointMask> masks;   // point sets, parallel to generators
  std::vector<int> family;        // quadric only: 0 or 1, parallel to generators
};

// Two generators of Q+(2N-1,2) lie in the same family iff their intersection
// has projective dimension of the same parity as N-1.
bool same_family(const Flat& a, const Flat& b, int n);

// All maximal totally isotropic (symplectic) or totally singular (quadric)
// flats, by level-wise extension with canonical dedup.
GeneratorSet enumerate_generators(const GeometryContext& ctx, GeneratorSpace space);

// --- cliques --------------------------------------------------------------------

// All k-cliques of the graph on `vertices` given by `adjacent`, each clique
// sorted, the list in lexicographic order. Sharded by first vertex.
std::vector<std::vector<BinVec>> find_cliques(const std::vector<BinVec>& vertices,
                                              const std::function<bool(BinVec, BinVec)>& adjacent, int k,
                                              unsigned jobs = 1);

// --- ovoids -----------------------------------------------------------------------

using Triple = std::array<BinVec, 3>;
using Partition = std::array<Triple, 3>;

// Nine points of Q+(7,2), pairwise non-orthogonal. The constructor checks
// that and throws UsageError otherwise; it does not need the generator list.
class Ovoid {
 public:
  Ovoid() = default;
  explicit Ovoid(std::vector<BinVec> points);

  const std::vector<BinVec>& points() const { return points_; }
  const PointMask& mask() const { return mask_; }
  bool contains(BinVec p) const { return mask_.test(p.value()); }
  std::size_t shared_with(const Ovoid& other) const { return (mask_ & other.mask_).count(); }

  bool operator==(const Ovoid& other) const { return points_ == other.points_; }
  auto operator<=>(const Ovoid& other) const { return points_ <=> other.points_; }

 private:
  std::vector<BinVec> points_;
  PointMask mask_;
};

// The nine rows of Edge's ovoid in standard coordinates, in the printed row
// order (ZIIX, IZYY, XZXI, ZXZZ, XIZI, ZZIZ, IXXZ, YYZX, XXXX).
std::array<BinVec, 9> edge_ovoid_rows();
// Edge's ovoid in his own coordinates: the unit vectors and the all-ones vector.
std::array<BinVec, 9> edge_ovoid_rows_edge_coords();
Ovoid edge_ovoid();

// True iff |s| = 9 and every generator meets s exactly once. Throws
// UsageError for a point off the quadric.
bool is_ovoid(const std::vector<BinVec>& s, const GeneratorSet& quadric_generators);

// All ovoids of Q+(7,2): 9-cliques of the sigma = 1 graph on the quadric,
// each confirmed against the generators. Canonically sorted.
std::vector<Ovoid> enumerate_ovoids(const Quadric& quadric, const GeneratorSet& quadric_generators,
                                    unsigned jobs = 1);

// --- subspaces spanned by ovoid points ---------------------------------------------

// The 36 third points of secants, ascending.
std::vector<BinVec> secant_third_points(const Ovoid& o);

struct Conic {
  Triple triple;
  BinVec nucleus;
  Flat plane;
};
std::vector<Conic> conics_of(const Ovoid& o);

// The 280 partitions into three triples; each triple ascending, triples
// ordered by first element.
std::vector<Partition> partitions_of(const Ovoid& o);

// The line through the three conic nuclei of a partition.
Line axis_of_partition(const Ovoid& o, const Partition& partition);

struct Tetrad {
  Line axis;
  std::array<Line, 4> lines;  // ascending; includes the axis
  std::vector<BinVec> points() const;
};

// The unique line of a conic's plane avoiding the quadric.
Line off_quadric_line(const Flat& plane);

Tetrad tetrad_of_partition(const Ovoid& o, const Partition& partition);

struct TetradCensus {
  std::size_t raw = 0;
  std::size_t distinct = 0;
  std::size_t min_multiplicity = 0;
  std::size_t max_multiplicity = 0;
};
TetradCensus tetrad_census(const std::vector<Ovoid>& ovoids, unsigned jobs = 1);

// The other ovoid through a conic: the triple plus x + nucleus for the six
// remaining points x.
Ovoid second_ovoid_on_conic(const Ovoid& o, const Triple& triple);

struct SixOvoidFamily {
  std::array<Ovoid, 3> first_triad;   // second ovoids on the partition's triples
  std::array<Ovoid, 3> second_triad;  // o and the two further ovoids in the union
  std::vector<BinVec> points;         // the 27-point union
  Line axis;

  std::vector<Ovoid> all() const;
};
SixOvoidFamily six_ovoid_family(const Ovoid& o, const Partition& partition);

// How many elements of each ovoid commute with w (w itself counts).
std::vector<int> commutation_profile(const PauliWord& w, const std::vector<Ovoid>& family);

// The fifth quadric point of the solid spanned by four ovoid points.
BinVec solid_extra_point(const Ovoid& o, const std::vector<BinVec>& quad);

struct PointSplit {
  BinVec point;
  std::vector<BinVec> part_a, part_b;
  BinVec extra_a, extra_b;  // fifth quadric points of the two solids
  Line line;                // {point, extra_a, extra_b}
  Ovoid second;             // shares exactly `point` with o
};

// The 35 ways to split o minus p into two quadruples; part_a always holds the
// smallest remaining point.
std::vector<std::vector<BinVec>> splits_through(const Ovoid& o, BinVec p);
PointSplit point_partition_line(const Ovoid& o, BinVec p, const std::vector<BinVec>& part_a);

struct IntersectionCensus {
  std::size_t through_point = 0;  // ovoids on p, including o
  std::size_t one_point = 0;
  std::size_t three_points = 0;
  std::size_t other = 0;
};
IntersectionCensus ovoid_intersection_census(const std::vector<Ovoid>& all, const Ovoid& o, BinVec p);

// Histogram of |A n B| over all unordered pairs of distinct ovoids.
std::map<std::size_t, std::size_t> pairwise_intersection_histogram(const std::vector<Ovoid>& all,
                                                                   unsigned jobs = 1);

struct PentadCone {
  std::vector<BinVec> points;  // span n quadric, 11 points
  BinVec vertex;
  std::vector<Line> lines;     // the 5 quadric lines through the vertex
};
PentadCone pentad_intersection(const Ovoid& o, const std::vector<BinVec>& pentad);

struct SextetSection {
  std::vector<BinVec> points;                          // 27 points of Q-(5,2)
  IncidenceStructure lines;                            // the quadric lines inside
  std::vector<std::pair<BinVec, BinVec>> double_six;   // (sextet point, its partner)
  BinVec center;                                       // meet of the 6 pairing lines
  BinVec complementary_nucleus;
};
SextetSection sextet_intersection(const Ovoid& o, const std::vector<BinVec>& sextet);

struct HeptadSection {
  std::vector<BinVec> points;  // 63 points of Q(6,2)
  BinVec nucleus;              // radical of sigma restricted to the PG(6,2)
};
HeptadSection heptad_intersection(const Ovoid& o, const std::vector<BinVec>& heptad);

// The maximal exterior sets (Conwell heptads) of Q+(5,2).
std::vector<std::vector<BinVec>> conwell_heptads_q5(const GeometryContext& ctx);

// Points of o not in `subset`. Throws UsageError if subset is not inside o.
std::vector<BinVec> ovoid_complement(const Ovoid& o, const std::vector<BinVec>& subset);

}  // namespace pauligeo
