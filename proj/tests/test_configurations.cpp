#include <algorithm>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "pauligeo/configurations.hpp"
#include "pauligeo/errors.hpp"

using namespace pauligeo;

namespace {

const GeometryContext C4(4);

BinVec w(const char* s) { return parse_point(s); }

std::vector<Ovoid>& all_ovoids() {
  static std::vector<Ovoid> v = [] {
    const auto q = hyperbolic_quadric(C4);
    return enumerate_ovoids(q, enumerate_generators(C4, GeneratorSpace::quadric), 2);
  }();
  return v;
}

}  // namespace

TEST_CASE("report bookkeeping") {
  ConfigReport r("t");
  CHECK(r.add_point(w("XXXX"), "a") == 0);
  CHECK(r.add_point(w("XXII"), "b") == 1);
  CHECK(r.add_point(w("XXXX"), "c") == 0);
  CHECK(r.add_point(w("XXXX"), "c") == 0);
  CHECK(r.points()[0].roles.size() == 2);
  CHECK(r.points()[0].has_role("c"));
  r.add_point(w("IIXX"), "b");
  r.add_line(w("XXII"), w("XXXX"), w("IIXX"));
  r.add_line(w("IIXX"), w("XXII"), w("XXXX"));
  CHECK(r.lines().size() == 1);
  CHECK(r.count_role("b") == 2);
  CHECK(r.count_class(ElementClass::symmetric) == 3);
  CHECK_THROWS_AS(r.add_line(w("XXII"), w("XXXX"), w("ZZII")), UsageError);
  r.annotate("k", "v");
  CHECK(r.annotation("k") == "v");
  CHECK_FALSE(r.annotation("missing").has_value());
  CHECK(r.validate().empty());
}

TEST_CASE("json export") {
  const auto r = fig_secants(edge_ovoid());
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["name"] == "fig1");
  CHECK(j["points"].size() == 45);
  CHECK(j["lines"].size() == 36);
  CHECK(j["points"][0].contains("coords"));
  CHECK(j["points"][0].contains("word"));
  CHECK(j["points"][0].contains("class"));
  CHECK(j["points"][0].contains("role"));
  for (const auto& l : j["lines"]) {
    const auto a = parse_point(j["points"][l[0].get<int>()]["word"].get<std::string>());
    const auto b = parse_point(j["points"][l[1].get<int>()]["word"].get<std::string>());
    const auto c = parse_point(j["points"][l[2].get<int>()]["word"].get<std::string>());
    CHECK((a + b + c).is_zero());
  }
  CHECK(j["annotations"]["secant_points"] == "36");
}

TEST_CASE("dot export") {
  const auto r = fig_secants(edge_ovoid());
  const auto dot = r.to_dot();
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = dot.find(needle); pos != std::string::npos; pos = dot.find(needle, pos + 1)) ++n;
    return n;
  };
  CHECK(dot.rfind("graph \"fig1\" {", 0) == 0);
  CHECK(count("shape=circle") == 9);
  CHECK(count("shape=hexagon") == 36);
  CHECK(count(" -- ") == 36 * 3);
  const auto sub = r.to_dot(DotLineStyle::subdivided);
  CHECK(sub.find("l35 [shape=point]") != std::string::npos);
}

TEST_CASE("fig3 double six") {
  const auto o = edge_ovoid();
  const auto d = figure_defaults(o);
  const auto r = fig_two_ovoids_conic(o, d.conic);
  CHECK(r.count_role("shared") == 3);
  CHECK(r.count_role("ovoid") == 6);
  CHECK(r.count_role("second-ovoid") == 6);
  CHECK(r.count_role("nucleus") == 1);
  CHECK(r.lines().size() == 6);
  CHECK(r.annotation("nucleus") == "ZYII");
  CHECK(r.validate().empty());
}

TEST_CASE("fig6 extra points") {
  const auto o = edge_ovoid();
  const auto d = figure_defaults(o);
  const auto r = fig_two_ovoids_point(o, d.split_point, d.split_a);
  CHECK(r.annotation("extra_points") == "XXII IIXX");
  CHECK(r.count_role("second-ovoid") == 8);
  CHECK(r.lines().size() == 9);
}

TEST_CASE("nuclei fan") {
  const auto o = edge_ovoid();
  const auto f = nuclei_fan(o, w("XXXX"), w("ZYII"));
  CHECK(point_to_word(f.concurrence).str() == "YZXX");
  CHECK(f.nuclei.size() == 28);
  CHECK(f.fifteen.size() == 15);
  CHECK(f.six_a.size() == 6);
  CHECK(f.six_b.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK((f.six_a[i] + f.six_b[i]) == f.concurrence);
  for (auto x : f.symmetric_fifteen) CHECK_FALSE(C4.quadratic(x));
  for (auto x : f.six_a) CHECK(C4.quadratic(x));
  CHECK(f.gq.points.size() == 27);
  CHECK(f.gq.lines.size() == 45);
  CHECK(f.gq_check.ok());
  CHECK_THROWS_AS(nuclei_fan(o, w("XXXX"), w("IIXX")), UsageError);
  CHECK_THROWS_AS(nuclei_fan(o, w("IIXX"), w("ZYII")), UsageError);

  const auto r = fig_nuclei_fan(o, w("XXXX"), w("ZYII"));
  CHECK(r.annotation("gq_2_4") == "yes");
  CHECK(r.validate().empty());
}

TEST_CASE("heptad analogue on ZZIZ, IXXZ") {
  const auto o = edge_ovoid();
  const auto h = heptad_analogue_of(o, w("ZZIZ"), w("IXXZ"));
  CHECK(h.heptad.size() == 7);
  for (auto x : h.heptad) CHECK(C4.quadratic(x));
  CHECK(h.third_points.size() == 21);
  CHECK(std::set<BinVec>(h.third_points.begin(), h.third_points.end()).size() == 21);
  for (auto x : h.third_points) CHECK(C4.quadratic(x));
  CHECK(h.triple_sums == 35);
  CHECK(h.triple_nuclei.size() == 35);
  for (auto x : h.triple_nuclei) CHECK_FALSE(C4.quadratic(x));
  CHECK_THROWS_AS(heptad_analogue_of(o, w("ZZIZ"), w("ZZIZ")), UsageError);
  const auto r = fig_triple_nuclei(o, w("ZZIZ"), w("IXXZ"));
  CHECK(r.count_role("triple-nucleus") == 35);
}

TEST_CASE("heptad families") {
  const auto o = edge_ovoid();
  const auto d = figure_defaults(o);
  const auto tri = heptad_family_of(o, d.triangle);
  CHECK(tri.shape == HeptadShape::triangle);
  CHECK(tri.heptads.size() == 3);
  CHECK(tri.second_heptads.size() == 3);
  CHECK(tri.common.size() == 1);
  for (const auto& h : tri.second_heptads) CHECK(std::count(h.begin(), h.end(), tri.common[0]) == 1);

  const auto quad = heptad_family_of(o, d.quadrangle);
  CHECK(quad.shape == HeptadShape::quadrangle);
  CHECK(quad.shared.size() == 4);
  CHECK(quad.solid_point == sum_of(d.quadrangle, 8));
  for (const auto& l : quad.concurrent_lines) CHECK(l.contains(quad.solid_point));

  CHECK_THROWS_AS(heptad_family_of(o, {d.triangle[0], d.triangle[1]}), UsageError);
  CHECK_THROWS_AS(heptad_family_of(o, {d.triangle[0], d.triangle[0], d.triangle[1]}), UsageError);
  CHECK_THROWS_AS(heptad_family_of(o, {d.triangle[0], d.triangle[1], w("IIXX")}), UsageError);
}

TEST_CASE("split of the 63") {
  const auto o = edge_ovoid();
  const auto s = sixty_three_split_of(all_ovoids(), o, w("XXXX"));
  CHECK(s.through.size() == 64);
  CHECK(s.census.one_point == 35);
  CHECK(s.census.three_points == 28);
  CHECK(s.reference_invariant);
}

TEST_CASE("skew profile distribution") {
  const auto o = edge_ovoid();
  const auto fam = six_ovoid_family(o, figure_defaults(o).partition);
  const auto dist = skew_profile_distribution(fam);
  std::size_t total = 0;
  std::map<std::vector<int>, std::size_t> sorted;
  for (const auto& [prof, n] : dist) {
    total += n;
    auto s = prof;
    std::sort(s.begin(), s.end());
    sorted[s] += n;
  }
  CHECK(total == 120);
  CHECK(sorted.size() == 3);
  CHECK(sorted[{3, 3, 3, 3, 3, 3}] == 30);
  CHECK(sorted[{3, 3, 3, 3, 7, 7}] == 81);
  CHECK(sorted[{7, 7, 7, 7, 7, 7}] == 9);
}

TEST_CASE("default probes") {
  const auto o = edge_ovoid();
  const auto fam = six_ovoid_family(o, figure_defaults(o).partition);
  const auto [sym, skew] = default_probes(fam);
  CHECK_FALSE(C4.quadratic(sym));
  CHECK(C4.quadratic(skew));
  CHECK_FALSE(std::binary_search(fam.points.begin(), fam.points.end(), sym));
  const auto r = fig_commutation(o, figure_defaults(o).partition, sym, skew);
  CHECK(r.annotation("symmetric_profile") == "5,5,5,5,5,5");
}

TEST_CASE("every builder yields a valid report") {
  const auto o = edge_ovoid();
  const auto d = figure_defaults(o);
  const auto fam = six_ovoid_family(o, d.partition);
  const auto [sym, skew] = default_probes(fam);
  const std::vector<ConfigReport> reports{
      fig_secants(o),
      fig_conic_partition(o, d.partition),
      fig_tetrad(o, d.partition),
      fig_two_ovoids_conic(o, d.conic),
      fig_six_ovoids(o, d.partition),
      fig_commutation(o, d.partition, sym, skew),
      fig_two_ovoids_point(o, d.split_point, d.split_a),
      fig_pentad(o, d.pentad),
      fig_sextet(o, d.sextet),
      fig_nuclei_fan(o, d.fan_point, d.fan_nucleus),
      heptad_analogue(o, d.heptad_first, d.heptad_second),
      fig_triple_nuclei(o, d.heptad_first, d.heptad_second),
      heptad_family(o, d.triangle),
      heptad_family(o, d.quadrangle),
  };
  for (const auto& r : reports) {
    CHECK(r.validate().empty());
    CHECK(!r.points().empty());
    CHECK(nlohmann::json::parse(r.to_json())["points"].size() == r.points().size());
  }
  // a non-reference ovoid works too
  const auto& other = all_ovoids()[17];
  const auto d2 = figure_defaults(other);
  CHECK(fig_nuclei_fan(other, d2.fan_point, d2.fan_nucleus).validate().empty());
  CHECK(fig_sextet(other, d2.sextet).validate().empty());
}
