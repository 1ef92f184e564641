#include "pauligeo/polar.hpp"

#include <algorithm>
#include <set>

#include "pauligeo/errors.hpp"
#include "pauligeo/parallel.hpp"

namespace pauligeo {

namespace {

const GeometryContext kFourQubits(4);

std::uint64_t ipow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

bool on_quadric(BinVec p) { return !kFourQubits.quadratic(p); }

void require_subset(const Ovoid& o, const std::vector<BinVec>& subset, std::size_t size, const char* what) {
  std::vector<BinVec> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() != size || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw UsageError(std::string(what) + " must be " + std::to_string(size) + " distinct points");
  for (auto p : subset)
    if (!o.contains(p)) throw UsageError(std::string(what) + " is not contained in the ovoid");
}

std::vector<BinVec> quadric_points_of(const Flat& f) {
  std::vector<BinVec> out;
  for (auto p : flat_points(f))
    if (on_quadric(p)) out.push_back(p);
  return out;
}

std::vector<BinVec> sorted(std::vector<BinVec> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

// --- counts ------------------------------------------------------------------------

const char* to_string(SpaceKind k) {
  switch (k) {
    case SpaceKind::symplectic: return "symplectic";
    case SpaceKind::parabolic: return "parabolic";
    case SpaceKind::elliptic: return "elliptic";
    case SpaceKind::hyperbolic: return "hyperbolic";
  }
  return "?";
}

std::uint64_t expected_count(SpaceKind kind, Measure measure, int rank, int q) {
  if (q < 2) throw UsageError("field order must be at least 2");
  if (rank < 1) throw UsageError("rank must be at least 1");
  if (measure == Measure::generators && rank < 2) throw UsageError("generator counts need rank >= 2");
  const std::uint64_t Q = static_cast<std::uint64_t>(q);
  const int N = rank;
  auto product = [&](int from, int to) {
    std::uint64_t r = 1;
    for (int i = from; i <= to; ++i) r *= ipow(Q, i) + 1;
    return r;
  };
  if (measure == Measure::points) {
    switch (kind) {
      case SpaceKind::symplectic:
      case SpaceKind::parabolic: return (ipow(Q, 2 * N) - 1) / (Q - 1);
      case SpaceKind::elliptic: return (ipow(Q, N - 1) - 1) * (ipow(Q, N) + 1) / (Q - 1);
      case SpaceKind::hyperbolic: return (ipow(Q, N - 1) + 1) * (ipow(Q, N) - 1) / (Q - 1);
    }
  } else {
    switch (kind) {
      case SpaceKind::symplectic:
      case SpaceKind::parabolic: return product(1, N);
      case SpaceKind::elliptic: return product(2, N);
      case SpaceKind::hyperbolic: return 2 * product(1, N - 1);
    }
  }
  throw UsageError("unsupported space kind");
}

// --- quadric and generators ----------------------------------------------------------

Quadric hyperbolic_quadric(const GeometryContext& ctx) {
  Quadric q{QuadricKind::hyperbolic, ctx, ctx.quadric_points(), {}};
  q.mask = mask_of(q.points);
  return q;
}

bool same_family(const Flat& a, const Flat& b, int n) {
  const int meet_proj_dim = intersection_rank(a, b) - 1;
  return ((meet_proj_dim - (n - 1)) % 2) == 0;
}

GeneratorSet enumerate_generators(const GeometryContext& ctx, GeneratorSpace space) {
  const auto points = ctx.points();
  auto admissible = [&](BinVec p) { return space == GeneratorSpace::symplectic || !ctx.quadratic(p); };

  std::vector<Flat> level;
  for (auto p : points)
    if (admissible(p)) level.push_back(span({p}));

  for (int rank = 1; rank < ctx.n(); ++rank) {
    std::set<Flat> next;
    for (const auto& f : level) {
      for (auto p : points) {
        if (!admissible(p) || f.contains(p)) continue;
        bool perp = true;
        for (auto b : f.basis())
          if (ctx.symplectic(p, b)) {
            perp = false;
            break;
          }
        if (perp) next.insert(f.extended(p));
      }
    }
    level.assign(next.begin(), next.end());
  }

  GeneratorSet out;
  out.space = space;
  out.n = ctx.n();
  out.generators = std::move(level);
  for (const auto& g : out.generators) out.masks.push_back(mask_of(flat_points(g)));
  if (space == GeneratorSpace::quadric && !out.generators.empty()) {
    const auto& anchor = out.generators.front();
    for (const auto& g : out.generators) out.family.push_back(same_family(anchor, g, ctx.n()) ? 0 : 1);
  }
  return out;
}

// --- cliques ---------------------------------------------------------------------------

std::vector<std::vector<BinVec>> find_cliques(const std::vector<BinVec>& vertices,
                                              const std::function<bool(BinVec, BinVec)>& adjacent, int k,
                                              unsigned jobs) {
  using Bits = std::bitset<256>;
  const std::size_t n = vertices.size();
  if (n > 256) throw UsageError("clique search supports at most 256 vertices");
  if (!std::is_sorted(vertices.begin(), vertices.end())) throw UsageError("vertices must be sorted");

  // later[i] = neighbours of i with a larger index.
  std::vector<Bits> later(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (adjacent(vertices[i], vertices[j])) later[i].set(j);

  auto shard = [&](std::size_t first) {
    std::vector<std::vector<BinVec>> found;
    std::vector<std::size_t> clique{first};
    auto extend = [&](auto& self, const Bits& candidates) -> void {
      if (static_cast<int>(clique.size()) == k) {
        std::vector<BinVec> c;
        for (auto i : clique) c.push_back(vertices[i]);
        found.push_back(std::move(c));
        return;
      }
      if (static_cast<int>(clique.size() + candidates.count()) < k) return;
      for (std::size_t v = 0; v < n; ++v) {
        if (!candidates.test(v)) continue;
        clique.push_back(v);
        self(self, candidates & later[v]);
        clique.pop_back();
      }
    };
    extend(extend, later[first]);
    return found;
  };

  std::vector<std::vector<BinVec>> out;
  if (k <= 0) return out;
  for (auto& part : parallel_map(n, jobs, shard))
    for (auto& c : part) out.push_back(std::move(c));
  return out;
}

// --- ovoids ------------------------------------------------------------------------------

Ovoid::Ovoid(std::vector<BinVec> points) : points_(sorted(std::move(points))) {
  if (points_.size() != 9) throw UsageError("an ovoid of Q+(7,2) has 9 points");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].dim() != 8) throw UsageError("ovoid points must live in PG(7,2)");
    if (!on_quadric(points_[i])) throw UsageError("ovoid point " + points_[i].str() + " is off the quadric");
    for (std::size_t j = 0; j < i; ++j)
      if (!kFourQubits.symplectic(points_[i], points_[j]))
        throw UsageError("ovoid points " + points_[j].str() + " and " + points_[i].str() + " are perpendicular");
  }
  mask_ = mask_of(points_);
}

std::array<BinVec, 9> edge_ovoid_rows_edge_coords() {
  std::array<BinVec, 9> rows;
  for (int i = 0; i < 8; ++i) rows[i] = BinVec::unit(8, i);
  rows[8] = BinVec(8, 0xFF);
  return rows;
}

std::array<BinVec, 9> edge_ovoid_rows() {
  auto rows = edge_ovoid_rows_edge_coords();
  for (auto& r : rows) r = edge_to_standard(r);
  return rows;
}

Ovoid edge_ovoid() {
  const auto rows = edge_ovoid_rows();
  return Ovoid(std::vector<BinVec>(rows.begin(), rows.end()));
}

bool is_ovoid(const std::vector<BinVec>& s, const GeneratorSet& quadric_generators) {
  const GeometryContext ctx(quadric_generators.n);
  for (auto p : s)
    if (p.dim() != ctx.dim() || ctx.quadratic(p)) throw UsageError("point " + p.str() + " is not on the quadric");
  const auto mask = mask_of(s);
  if (s.size() != 9 || mask.count() != 9) return false;
  for (const auto& g : quadric_generators.masks)
    if ((g & mask).count() != 1) return false;
  return true;
}

std::vector<Ovoid> enumerate_ovoids(const Quadric& quadric, const GeneratorSet& quadric_generators, unsigned jobs) {
  if (quadric.ctx.n() != 4) throw UsageError("ovoid enumeration is defined for Q+(7,2)");
  const auto& ctx = quadric.ctx;
  auto cliques = find_cliques(quadric.points, [&](BinVec a, BinVec b) { return ctx.symplectic(a, b); }, 9, jobs);

  std::vector<Ovoid> out;
  out.reserve(cliques.size());
  for (auto& c : cliques) {
    if (!is_ovoid(c, quadric_generators)) throw ConsistencyError("9-clique that is not an ovoid");
    out.emplace_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- subspaces spanned by ovoid points ---------------------------------------------------

std::vector<BinVec> secant_third_points(const Ovoid& o) {
  const auto& p = o.points();
  std::vector<BinVec> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) out.push_back(p[i] + p[j]);
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw ConsistencyError("two secants meet");
  return out;
}

std::vector<Conic> conics_of(const Ovoid& o) {
  const auto& p = o.points();
  std::vector<Conic> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      for (std::size_t k = j + 1; k < p.size(); ++k) {
        Triple t{p[i], p[j], p[k]};
        Flat plane = span({p[i], p[j], p[k]});
        if (quadric_points_of(plane) != std::vector<BinVec>(t.begin(), t.end()))
          throw ConsistencyError("conic plane meets the quadric outside its triple");
        out.push_back({t, p[i] + p[j] + p[k], std::move(plane)});
      }
  return out;
}

std::vector<Partition> partitions_of(const Ovoid& o) {
  const auto& p = o.points();
  std::vector<Partition> out;
  auto rest_of = [](const std::vector<BinVec>& from, std::initializer_list<BinVec> drop) {
    std::vector<BinVec> r;
    for (auto x : from)
      if (std::find(drop.begin(), drop.end(), x) == drop.end()) r.push_back(x);
    return r;
  };
  for (std::size_t b = 1; b < 9; ++b)
    for (std::size_t c = b + 1; c < 9; ++c) {
      const auto rest = rest_of(p, {p[0], p[b], p[c]});
      for (std::size_t e = 1; e < 6; ++e)
        for (std::size_t f = e + 1; f < 6; ++f) {
          const auto last = rest_of(rest, {rest[0], rest[e], rest[f]});
          out.push_back({Triple{p[0], p[b], p[c]}, Triple{rest[0], rest[e], rest[f]}, Triple{last[0], last[1], last[2]}});
        }
    }
  return out;
}

namespace {

void require_partition(const Ovoid& o, const Partition& partition) {
  std::vector<BinVec> all;
  for (const auto& t : partition) all.insert(all.end(), t.begin(), t.end());
  require_subset(o, all, 9, "partition");
}

}  // namespace

Line axis_of_partition(const Ovoid& o, const Partition& partition) {
  require_partition(o, partition);
  std::array<BinVec, 3> nuclei;
  for (int i = 0; i < 3; ++i) nuclei[i] = partition[i][0] + partition[i][1] + partition[i][2];
  if (!(nuclei[0] + nuclei[1] + nuclei[2]).is_zero()) throw ConsistencyError("partition nuclei are not collinear");
  Line axis(nuclei[0], nuclei[1], nuclei[2]);
  for (auto x : axis.points())
    if (on_quadric(x)) throw ConsistencyError("axis meets the quadric");
  return axis;
}

Line off_quadric_line(const Flat& plane) {
  const auto pts = flat_points(plane);
  std::vector<Line> found;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const auto third = pts[i] + pts[j];
      if (third < pts[j]) continue;  // each line once
      if (!on_quadric(pts[i]) && !on_quadric(pts[j]) && !on_quadric(third)) found.emplace_back(pts[i], pts[j], third);
    }
  if (found.size() != 1) throw ConsistencyError("plane does not have a unique line off the quadric");
  return found.front();
}

std::vector<BinVec> Tetrad::points() const {
  std::vector<BinVec> out;
  for (const auto& l : lines) out.insert(out.end(), l.points().begin(), l.points().end());
  std::sort(out.begin(), out.end());
  return out;
}

Tetrad tetrad_of_partition(const Ovoid& o, const Partition& partition) {
  Line axis = axis_of_partition(o, partition);
  std::array<Line, 4> lines{axis, off_quadric_line(span({partition[0][0], partition[0][1], partition[0][2]})),
                            off_quadric_line(span({partition[1][0], partition[1][1], partition[1][2]})),
                            off_quadric_line(span({partition[2][0], partition[2][1], partition[2][2]}))};
  std::sort(lines.begin(), lines.end());
  Tetrad t{axis, lines};
  const auto pts = t.points();
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) throw ConsistencyError("tetrad lines intersect");
  return t;
}

TetradCensus tetrad_census(const std::vector<Ovoid>& ovoids, unsigned jobs) {
  using Key = std::array<std::uint8_t, 12>;
  auto per_ovoid = parallel_map(ovoids.size(), jobs, [&](std::size_t i) {
    std::vector<Key> keys;
    for (const auto& part : partitions_of(ovoids[i])) {
      const auto t = tetrad_of_partition(ovoids[i], part);
      Key k{};
      int at = 0;
      for (const auto& l : t.lines)
        for (auto p : l.points()) k[at++] = static_cast<std::uint8_t>(p.value());
      keys.push_back(k);
    }
    return keys;
  });

  std::vector<Key> all;
  for (auto& v : per_ovoid) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end());

  TetradCensus c;
  c.raw = all.size();
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    while (j < all.size() && all[j] == all[i]) ++j;
    const auto mult = j - i;
    c.min_multiplicity = c.distinct == 0 ? mult : std::min(c.min_multiplicity, mult);
    c.max_multiplicity = std::max(c.max_multiplicity, mult);
    ++c.distinct;
    i = j;
  }
  return c;
}

Ovoid second_ovoid_on_conic(const Ovoid& o, const Triple& triple) {
  require_subset(o, {triple.begin(), triple.end()}, 3, "conic triple");
  const auto nucleus = triple[0] + triple[1] + triple[2];
  std::vector<BinVec> pts(triple.begin(), triple.end());
  for (auto x : ovoid_complement(o, pts)) pts.push_back(x + nucleus);
  return Ovoid(std::move(pts));
}

std::vector<Ovoid> SixOvoidFamily::all() const {
  std::vector<Ovoid> out(first_triad.begin(), first_triad.end());
  out.insert(out.end(), second_triad.begin(), second_triad.end());
  return out;
}

SixOvoidFamily six_ovoid_family(const Ovoid& o, const Partition& partition) {
  const Line axis = axis_of_partition(o, partition);
  std::array<Ovoid, 3> first;
  std::vector<BinVec> points;
  for (int i = 0; i < 3; ++i) {
    first[i] = second_ovoid_on_conic(o, partition[i]);
    points.insert(points.end(), first[i].points().begin(), first[i].points().end());
  }
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end())
    throw ConsistencyError("second ovoids of a partition are not disjoint");

  // Every ovoid inside the 27 points; the three outside `first` form the
  // other triad.
  auto cliques = find_cliques(points, [](BinVec a, BinVec b) { return kFourQubits.symplectic(a, b); }, 9);
  std::vector<Ovoid> others;
  for (auto& c : cliques) {
    Ovoid candidate(std::move(c));
    if (std::find(first.begin(), first.end(), candidate) == first.end()) others.push_back(std::move(candidate));
  }
  if (others.size() != 3) throw ConsistencyError("27-point set does not carry exactly two ovoid triads");
  if (std::find(others.begin(), others.end(), o) == others.end())
    throw ConsistencyError("second triad does not contain the original ovoid");

  std::array<Ovoid, 3> second{others[0], others[1], others[2]};
  return SixOvoidFamily{first, second, std::move(points), axis};
}

std::vector<int> commutation_profile(const PauliWord& w, const std::vector<Ovoid>& family) {
  std::vector<int> out;
  const auto wp = word_to_point(w);
  for (const auto& ov : family) {
    int n = 0;
    for (auto x : ov.points()) n += !kFourQubits.symplectic(wp, x);
    out.push_back(n);
  }
  return out;
}

BinVec solid_extra_point(const Ovoid& o, const std::vector<BinVec>& quad) {
  require_subset(o, quad, 4, "solid quadruple");
  const auto on = quadric_points_of(span(quad));
  std::vector<BinVec> extra;
  for (auto p : on)
    if (std::find(quad.begin(), quad.end(), p) == quad.end()) extra.push_back(p);
  if (on.size() != 5 || extra.size() != 1) throw ConsistencyError("solid does not meet the quadric in 5 points");
  for (std::size_t i = 0; i < on.size(); ++i)
    for (std::size_t j = i + 1; j < on.size(); ++j)
      if (on_quadric(on[i] + on[j])) throw ConsistencyError("solid contains a line of the quadric");
  return extra.front();
}

std::vector<std::vector<BinVec>> splits_through(const Ovoid& o, BinVec p) {
  if (!o.contains(p)) throw UsageError("point is not on the ovoid");
  const auto rest = ovoid_complement(o, {p});
  std::vector<std::vector<BinVec>> out;
  for (std::size_t a = 1; a < 8; ++a)
    for (std::size_t b = a + 1; b < 8; ++b)
      for (std::size_t c = b + 1; c < 8; ++c) out.push_back({rest[0], rest[a], rest[b], rest[c]});
  return out;
}

PointSplit point_partition_line(const Ovoid& o, BinVec p, const std::vector<BinVec>& part_a) {
  if (!o.contains(p)) throw UsageError("point is not on the ovoid");
  if (std::find(part_a.begin(), part_a.end(), p) != part_a.end()) throw UsageError("split must exclude the point");
  auto a = sorted(part_a);
  auto b = ovoid_complement(o, a);
  b.erase(std::find(b.begin(), b.end(), p));
  require_subset(o, a, 4, "split quadruple");

  const auto ea = solid_extra_point(o, a);
  const auto eb = solid_extra_point(o, b);
  if (!(p + ea + eb).is_zero()) throw ConsistencyError("split extra points are not collinear with the point");

  // Lines from each extra point to the other solid's four points lie on the
  // quadric; their third points complete the second ovoid.
  std::vector<BinVec> pts{p};
  for (auto x : b) pts.push_back(ea + x);
  for (auto x : a) pts.push_back(eb + x);
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (!on_quadric(pts[i])) throw ConsistencyError("split line leaves the quadric");
  Ovoid second(std::move(pts));
  if (second.shared_with(o) != 1) throw ConsistencyError("split ovoid shares more than the point");
  return PointSplit{p, a, b, ea, eb, Line(p, ea, eb), std::move(second)};
}

IntersectionCensus ovoid_intersection_census(const std::vector<Ovoid>& all, const Ovoid& o, BinVec p) {
  if (!o.contains(p)) throw UsageError("point is not on the ovoid");
  IntersectionCensus c;
  for (const auto& q : all) {
    if (!q.contains(p)) continue;
    ++c.through_point;
    if (q == o) continue;
    switch (q.shared_with(o)) {
      case 1: ++c.one_point; break;
      case 3: ++c.three_points; break;
      default: ++c.other; break;
    }
  }
  return c;
}

std::map<std::size_t, std::size_t> pairwise_intersection_histogram(const std::vector<Ovoid>& all, unsigned jobs) {
  auto rows = parallel_map(all.size(), jobs, [&](std::size_t i) {
    std::array<std::size_t, 10> h{};
    for (std::size_t j = i + 1; j < all.size(); ++j) ++h[all[i].shared_with(all[j])];
    return h;
  });
  std::map<std::size_t, std::size_t> out;
  for (const auto& h : rows)
    for (std::size_t k = 0; k < h.size(); ++k)
      if (h[k]) out[k] += h[k];
  return out;
}

PentadCone pentad_intersection(const Ovoid& o, const std::vector<BinVec>& pentad) {
  require_subset(o, pentad, 5, "pentad");
  PentadCone cone;
  cone.points = quadric_points_of(span(pentad));
  cone.vertex = solid_extra_point(o, ovoid_complement(o, pentad));
  if (std::find(cone.points.begin(), cone.points.end(), cone.vertex) == cone.points.end())
    throw ConsistencyError("cone vertex is outside the pentad span");
  const auto mask = mask_of(cone.points);
  for (auto x : cone.points) {
    if (x == cone.vertex) continue;
    const auto y = x + cone.vertex;
    if (x < y && mask.test(y.value())) cone.lines.emplace_back(cone.vertex, x, y);
  }
  return cone;
}

SextetSection sextet_intersection(const Ovoid& o, const std::vector<BinVec>& sextet) {
  require_subset(o, sextet, 6, "sextet");
  SextetSection s;
  s.points = quadric_points_of(span(sextet));
  s.lines = collinear_triples(s.points);
  const auto triple = ovoid_complement(o, sextet);
  s.complementary_nucleus = sum_of(triple, 8);
  for (auto a : sorted(sextet)) {
    // Partner of a: the cone vertex of the pentad sextet - {a}.
    std::vector<BinVec> quartet = triple;
    quartet.push_back(a);
    s.double_six.emplace_back(a, solid_extra_point(o, quartet));
  }
  s.center = s.double_six.front().first + s.double_six.front().second;
  return s;
}

HeptadSection heptad_intersection(const Ovoid& o, const std::vector<BinVec>& heptad) {
  require_subset(o, heptad, 7, "heptad");
  HeptadSection h;
  const auto flat = span(heptad);
  h.points = quadric_points_of(flat);
  std::vector<BinVec> radical;
  for (auto r : flat_points(flat)) {
    bool perp = true;
    for (auto b : flat.basis())
      if (kFourQubits.symplectic(r, b)) {
        perp = false;
        break;
      }
    if (perp) radical.push_back(r);
  }
  if (radical.size() != 1) throw ConsistencyError("PG(6,2) section does not have a one-point radical");
  h.nucleus = radical.front();
  return h;
}

std::vector<std::vector<BinVec>> conwell_heptads_q5(const GeometryContext& ctx) {
  if (ctx.n() != 3) throw UsageError("Conwell heptads are defined for Q+(5,2)");
  const auto off = ctx.off_quadric_points();
  const int size = (1 << ctx.n()) - 1;
  return find_cliques(off, [&](BinVec a, BinVec b) { return ctx.quadratic(a + b); }, size);
}

std::vector<BinVec> ovoid_complement(const Ovoid& o, const std::vector<BinVec>& subset) {
  for (auto p : subset)
    if (!o.contains(p)) throw UsageError("point " + p.str() + " is not on the ovoid");
  const auto mask = mask_of(subset);
  std::vector<BinVec> out;
  for (auto p : o.points())
    if (!mask.test(p.value())) out.push_back(p);
  return out;
}

}  // namespace pauligeo
