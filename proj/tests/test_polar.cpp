#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "pauligeo/errors.hpp"
#include "pauligeo/polar.hpp"

using namespace pauligeo;

namespace {

const GeometryContext C4(4);

bool on_q(BinVec p) { return !C4.quadratic(p); }

BinVec w(const char* s) { return parse_point(s); }

// Brute-force maximal totally isotropic / singular subspaces: all
// subspaces of rank n, checked point by point.
std::set<std::vector<std::uint32_t>> brute_generators(int n, bool quadric) {
  const GeometryContext ctx(n);
  const auto pts = ctx.points();
  std::set<std::vector<std::uint32_t>> out;
  std::vector<BinVec> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(chosen.size()) == n) {
      const auto f = span(chosen);
      if (f.rank() != n) return;
      const auto fp = flat_points(f);
      for (auto a : fp) {
        if (quadric && ctx.quadratic(a)) return;
        for (auto b : fp)
          if (ctx.symplectic(a, b)) return;
      }
      std::vector<std::uint32_t> key;
      for (auto p : fp) key.push_back(p.value());
      out.insert(key);
      return;
    }
    for (std::size_t i = start; i < pts.size(); ++i) {
      chosen.push_back(pts[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return out;
}

struct Shared {
  Quadric quadric = hyperbolic_quadric(C4);
  GeneratorSet gens = enumerate_generators(C4, GeneratorSpace::quadric);
  std::vector<Ovoid> ovoids = enumerate_ovoids(quadric, gens, 2);
};

Shared& shared() {
  static Shared s;
  return s;
}

}  // namespace

TEST_CASE("closed-form counts") {
  CHECK(expected_count(SpaceKind::symplectic, Measure::points, 4) == 255);
  CHECK(expected_count(SpaceKind::symplectic, Measure::generators, 4) == 2295);
  CHECK(expected_count(SpaceKind::symplectic, Measure::generators, 3) == 135);
  CHECK(expected_count(SpaceKind::symplectic, Measure::generators, 2) == 15);
  CHECK(expected_count(SpaceKind::hyperbolic, Measure::points, 4) == 135);
  CHECK(expected_count(SpaceKind::hyperbolic, Measure::generators, 4) == 270);
  CHECK(expected_count(SpaceKind::hyperbolic, Measure::points, 3) == 35);
  CHECK(expected_count(SpaceKind::hyperbolic, Measure::points, 2) == 9);
  CHECK(expected_count(SpaceKind::elliptic, Measure::points, 3) == 27);
  CHECK(expected_count(SpaceKind::parabolic, Measure::points, 3) == 63);
  CHECK(expected_count(SpaceKind::hyperbolic, Measure::points, 2, 3) == 16);
  CHECK_THROWS_AS(expected_count(SpaceKind::hyperbolic, Measure::points, 2, 1), UsageError);
  CHECK_THROWS_AS(expected_count(SpaceKind::hyperbolic, Measure::points, 0), UsageError);
  CHECK_THROWS_AS(expected_count(SpaceKind::hyperbolic, Measure::generators, 1), UsageError);
}

TEST_CASE("generators match brute force for N=2,3") {
  for (int n = 2; n <= 3; ++n)
    for (bool quadric : {false, true}) {
      const auto g = enumerate_generators(GeometryContext(n), quadric ? GeneratorSpace::quadric : GeneratorSpace::symplectic);
      std::set<std::vector<std::uint32_t>> got;
      for (const auto& f : g.generators) {
        std::vector<std::uint32_t> key;
        for (auto p : flat_points(f)) key.push_back(p.value());
        got.insert(key);
      }
      CHECK(got.size() == g.generators.size());
      CHECK(got == brute_generators(n, quadric));
    }
}

TEST_CASE("generator families") {
  const auto& g = shared().gens;
  REQUIRE(g.generators.size() == 270);
  REQUIRE(g.family.size() == 270);
  // families are the classes of same_family; check on a sample of pairs
  std::mt19937 rng(3);
  for (int t = 0; t < 2000; ++t) {
    const auto i = rng() % 270, j = rng() % 270;
    CHECK(same_family(g.generators[i], g.generators[j], 4) == (g.family[i] == g.family[j]));
  }
  CHECK(std::count(g.family.begin(), g.family.end(), 0) == 135);
}

TEST_CASE("cliques on a small graph") {
  // 5-cycle 1..5 with chord 1-3
  std::vector<BinVec> v;
  for (int i = 1; i <= 5; ++i) v.emplace_back(4, i);
  auto adj = [](BinVec a, BinVec b) {
    const int x = static_cast<int>(a.value()), y = static_cast<int>(b.value());
    const int d = std::abs(x - y);
    return d == 1 || d == 4 || (std::min(x, y) == 1 && std::max(x, y) == 3);
  };
  const auto tri = find_cliques(v, adj, 3, 1);
  REQUIRE(tri.size() == 1);
  CHECK(tri[0][0].value() == 1);
  CHECK(tri[0][2].value() == 3);
  CHECK(find_cliques(v, adj, 2, 1).size() == 6);
  CHECK(find_cliques(v, adj, 3, 4) == tri);
  CHECK(find_cliques(v, adj, 4, 2).empty());
}

TEST_CASE("reference ovoid") {
  const auto o = edge_ovoid();
  CHECK(o.points().size() == 9);
  CHECK(is_ovoid(o.points(), shared().gens));
  CHECK(o.contains(w("XXXX")));
  CHECK(o.contains(w("YYZX")));
  for (auto a : o.points())
    for (auto b : o.points())
      if (a != b) CHECK(C4.symplectic(a, b));
  CHECK(sum_of(o.points(), 8).is_zero());
  CHECK_THROWS_AS(Ovoid({w("XXXX")}), UsageError);
  auto bad = o.points();
  bad[0] = w("IIIY");  // skew
  CHECK_THROWS_AS(Ovoid{bad}, UsageError);
  CHECK_THROWS_AS(is_ovoid(bad, shared().gens), UsageError);
  std::vector<BinVec> eight(o.points().begin(), o.points().begin() + 8);
  CHECK_FALSE(is_ovoid(eight, shared().gens));
}

TEST_CASE("ovoid enumeration") {
  const auto& all = shared().ovoids;
  CHECK(all.size() == 960);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::binary_search(all.begin(), all.end(), edge_ovoid()));
  // each one meets every generator exactly once
  for (std::size_t i = 0; i < all.size(); i += 37) {
    for (const auto& m : shared().gens.masks) CHECK((m & all[i].mask()).count() == 1);
  }
  for (auto p : shared().quadric.points)
    CHECK(std::count_if(all.begin(), all.end(), [&](const Ovoid& o) { return o.contains(p); }) == 64);
  // independent of thread count
  CHECK(enumerate_ovoids(shared().quadric, shared().gens, 1) == all);
}

TEST_CASE("secants and conics") {
  const auto o = edge_ovoid();
  const auto sec = secant_third_points(o);
  CHECK(sec.size() == 36);
  for (auto s : sec) CHECK_FALSE(on_q(s));
  const auto conics = conics_of(o);
  CHECK(conics.size() == 84);
  std::set<BinVec> nuclei;
  for (const auto& c : conics) {
    CHECK(c.nucleus == c.triple[0] + c.triple[1] + c.triple[2]);
    CHECK(c.plane.proj_dim() == 2);
    nuclei.insert(c.nucleus);
  }
  CHECK(nuclei.size() == 84);
  for (auto s : sec) CHECK(nuclei.count(s) == 0);
}

TEST_CASE("partitions, axes, tetrads") {
  const auto o = edge_ovoid();
  const auto parts = partitions_of(o);
  CHECK(parts.size() == 280);
  std::set<Partition> uniq(parts.begin(), parts.end());
  CHECK(uniq.size() == 280);
  for (std::size_t i = 0; i < parts.size(); i += 13) {
    const auto axis = axis_of_partition(o, parts[i]);
    for (const auto& t : parts[i]) CHECK(axis.contains(t[0] + t[1] + t[2]));
    const auto tet = tetrad_of_partition(o, parts[i]);
    CHECK(std::find(tet.lines.begin(), tet.lines.end(), axis) != tet.lines.end());
    const auto pts = tet.points();
    CHECK(mask_of(pts).count() == 12);
    for (auto p : pts) CHECK_FALSE(on_q(p));
    CHECK(span(pts).proj_dim() == 7);
  }
  Partition bad = parts[0];
  std::swap(bad[0][0], bad[0][1]);
  bad[1][0] = bad[0][0];
  CHECK_THROWS_AS(axis_of_partition(o, bad), UsageError);
}

TEST_CASE("off-quadric line of a conic plane") {
  const auto c = conics_of(edge_ovoid()).front();
  const auto l = off_quadric_line(c.plane);
  for (auto p : l.points()) {
    CHECK_FALSE(on_q(p));
    CHECK(c.plane.contains(p));
  }
}

TEST_CASE("tetrad census") {
  const auto c = tetrad_census(shared().ovoids, 2);
  CHECK(c.raw == 268800);
  CHECK(c.distinct == 11200);
  CHECK(c.min_multiplicity == 24);
  CHECK(c.max_multiplicity == 24);
}

TEST_CASE("second ovoid on a conic") {
  const auto o = edge_ovoid();
  for (const auto& c : conics_of(o)) {
    const auto o2 = second_ovoid_on_conic(o, c.triple);
    CHECK(o2.shared_with(o) == 3);
    CHECK(std::binary_search(shared().ovoids.begin(), shared().ovoids.end(), o2));
    // the only other ovoid through the triple
    std::size_t through = 0;
    for (const auto& q : shared().ovoids)
      through += q.contains(c.triple[0]) && q.contains(c.triple[1]) && q.contains(c.triple[2]);
    CHECK(through == 2);
  }
}

TEST_CASE("six-ovoid family and commutation profiles") {
  const auto o = edge_ovoid();
  const auto parts = partitions_of(o);
  const auto fam = six_ovoid_family(o, parts[5]);
  const auto all = fam.all();
  CHECK(all.size() == 6);
  CHECK(fam.points.size() == 27);
  CHECK(std::find(all.begin(), all.end(), o) != all.end());
  for (const auto& x : all)
    for (auto p : x.points()) CHECK(std::binary_search(fam.points.begin(), fam.points.end(), p));
  // an ovoid inside the 27-set is one of the six
  std::size_t inside = 0;
  for (const auto& q : shared().ovoids) inside += (q.mask() & ~mask_of(fam.points)).none();
  CHECK(inside == 6);

  for (auto p : C4.points()) {
    const auto prof = commutation_profile(point_to_word(p), all);
    REQUIRE(prof.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
      int brute = 0;
      for (auto q : all[i].points()) brute += !C4.symplectic(p, q);
      CHECK(prof[i] == brute);
    }
  }
}

TEST_CASE("solids and point splits") {
  const auto o = edge_ovoid();
  const auto& p = o.points();
  const std::vector<BinVec> quad{p[0], p[1], p[2], p[3]};
  const auto e = solid_extra_point(o, quad);
  CHECK(e == p[0] + p[1] + p[2] + p[3]);
  CHECK(on_q(e));
  CHECK_FALSE(o.contains(e));
  CHECK_THROWS_AS(solid_extra_point(o, {p[0], p[1], p[2]}), UsageError);

  const auto splits = splits_through(o, p[4]);
  CHECK(splits.size() == 35);
  for (const auto& a : splits) {
    const auto s = point_partition_line(o, p[4], a);
    CHECK(s.second.shared_with(o) == 1);
    CHECK(s.second.contains(p[4]));
    CHECK(s.line.contains(s.extra_a));
    CHECK(s.line.contains(s.extra_b));
    CHECK(std::binary_search(shared().ovoids.begin(), shared().ovoids.end(), s.second));
  }
  CHECK_THROWS_AS(point_partition_line(o, w("IIXX"), quad), UsageError);
}

TEST_CASE("intersection laws") {
  const auto& all = shared().ovoids;
  const auto h = pairwise_intersection_histogram(all, 2);
  std::size_t total = 0;
  for (const auto& [k, v] : h) {
    CHECK((k == 0 || k == 1 || k == 3));
    total += v;
  }
  CHECK(total == 960 * 959 / 2);
  const auto o = edge_ovoid();
  for (auto p : o.points()) {
    const auto c = ovoid_intersection_census(all, o, p);
    CHECK(c.through_point == 64);
    CHECK(c.one_point == 35);
    CHECK(c.three_points == 28);
    CHECK(c.other == 0);
  }
}

TEST_CASE("pentad, sextet, heptad sections") {
  const auto o = edge_ovoid();
  const auto& p = o.points();
  const auto cone = pentad_intersection(o, {p[0], p[1], p[2], p[3], p[4]});
  CHECK(cone.points.size() == 11);
  CHECK(cone.vertex == p[5] + p[6] + p[7] + p[8]);
  CHECK(cone.lines.size() == 5);

  const auto sx = sextet_intersection(o, {p[0], p[1], p[2], p[3], p[4], p[5]});
  CHECK(sx.points.size() == 27);
  CHECK(sx.lines.lines.size() == 45);
  CHECK(sx.double_six.size() == 6);
  CHECK(sx.center == p[6] + p[7] + p[8]);

  const auto hp = heptad_intersection(o, {p[0], p[1], p[2], p[3], p[4], p[5], p[6]});
  CHECK(hp.points.size() == 63);
  CHECK(hp.nucleus == p[7] + p[8]);
  CHECK_THROWS_AS(heptad_intersection(o, {p[0]}), UsageError);
}

TEST_CASE("sextet nucleus ZYII") {
  const auto o = edge_ovoid();
  const auto sext = ovoid_complement(o, {w("ZIIX"), w("XZXI"), w("XXXX")});
  CHECK(point_to_word(sextet_intersection(o, sext).complementary_nucleus).str() == "ZYII");
}

TEST_CASE("Conwell heptads") {
  const GeometryContext c3(3);
  const auto hs = conwell_heptads_q5(c3);
  CHECK(hs.size() == 8);
  for (const auto& h : hs) {
    CHECK(h.size() == 7);
    for (auto a : h) {
      CHECK(c3.quadratic(a));
      for (auto b : h)
        if (a != b) CHECK(c3.quadratic(a + b));
    }
  }
  // every off-quadric point lies on exactly two of them
  for (auto x : c3.off_quadric_points()) {
    int on = 0;
    for (const auto& h : hs) on += std::count(h.begin(), h.end(), x);
    CHECK(on == 2);
  }
}

TEST_CASE("ovoid complement") {
  const auto o = edge_ovoid();
  CHECK(ovoid_complement(o, {}).size() == 9);
  CHECK(ovoid_complement(o, {w("XXXX")}).size() == 8);
  CHECK_THROWS_AS(ovoid_complement(o, {w("IIXX")}), UsageError);
}
