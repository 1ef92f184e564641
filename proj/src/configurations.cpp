#include "pauligeo/configurations.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pauligeo/errors.hpp"

namespace pauligeo {

namespace {

const GeometryContext kCtx(4);

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<BinVec> unique_sorted(std::vector<BinVec> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<BinVec> intersect(const std::vector<BinVec>& a, const std::vector<BinVec>& b) {
  const auto mask = mask_of(b);
  std::vector<BinVec> out;
  for (auto p : a)
    if (mask.test(p.value())) out.push_back(p);
  return unique_sorted(std::move(out));
}

std::string word(BinVec p) { return point_to_word(p).str(); }

std::string profile_str(const std::vector<int>& v) {
  std::vector<std::string> parts;
  for (int x : v) parts.push_back(std::to_string(x));
  return join(parts, ",");
}

}  // namespace

std::string words_of(const std::vector<BinVec>& points) {
  std::vector<std::string> parts;
  for (auto p : points) parts.push_back(word(p));
  return join(parts, " ");
}

// --- ConfigReport --------------------------------------------------------------------

bool ConfigPoint::has_role(std::string_view r) const { return std::find(roles.begin(), roles.end(), r) != roles.end(); }

int ConfigReport::add_point(BinVec p, std::string_view role) {
  if (auto i = index_of(p)) {
    auto& roles = points_[*i].roles;
    if (std::find(roles.begin(), roles.end(), role) == roles.end()) roles.emplace_back(role);
    return *i;
  }
  points_.push_back({p, point_to_word(p), kCtx.classify(p), {std::string(role)}});
  return static_cast<int>(points_.size() - 1);
}

void ConfigReport::add_line(BinVec a, BinVec b, BinVec c) {
  auto ia = index_of(a), ib = index_of(b), ic = index_of(c);
  if (!ia || !ib || !ic) throw UsageError("line endpoint missing from report " + name_);
  std::array<int, 3> l{*ia, *ib, *ic};
  std::sort(l.begin(), l.end());
  if (std::find(lines_.begin(), lines_.end(), l) == lines_.end()) lines_.push_back(l);
}

void ConfigReport::annotate(std::string key, std::string value) { annotations_.emplace_back(std::move(key), std::move(value)); }

std::optional<int> ConfigReport::index_of(BinVec p) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i].coords == p) return static_cast<int>(i);
  return std::nullopt;
}

std::size_t ConfigReport::count_role(std::string_view role) const {
  return static_cast<std::size_t>(
      std::count_if(points_.begin(), points_.end(), [&](const ConfigPoint& p) { return p.has_role(role); }));
}

std::size_t ConfigReport::count_class(ElementClass c) const {
  return static_cast<std::size_t>(
      std::count_if(points_.begin(), points_.end(), [&](const ConfigPoint& p) { return p.cls == c; }));
}

std::optional<std::string> ConfigReport::annotation(std::string_view key) const {
  for (const auto& [k, v] : annotations_)
    if (k == key) return v;
  return std::nullopt;
}

std::vector<std::string> ConfigReport::validate() const {
  std::vector<std::string> problems;
  for (const auto& l : lines_) {
    const auto s = points_[l[0]].coords + points_[l[1]].coords + points_[l[2]].coords;
    if (!s.is_zero()) problems.push_back("line does not sum to zero: " + points_[l[0]].word.str());
  }
  for (const auto& p : points_) {
    if (p.cls != classify(p.word) || p.cls != kCtx.classify(p.coords))
      problems.push_back("class tag mismatch at " + p.word.str());
    if (!(word_to_point(p.word) == p.coords)) problems.push_back("word/coords mismatch at " + p.word.str());
  }
  return problems;
}

std::string ConfigReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["name"] = name_;
  j["points"] = nlohmann::ordered_json::array();
  for (const auto& p : points_)
    j["points"].push_back(
        {{"coords", p.coords.str()}, {"word", p.word.str()}, {"class", to_string(p.cls)}, {"role", join(p.roles, ",")}});
  j["lines"] = nlohmann::ordered_json::array();
  for (const auto& l : lines_) j["lines"].push_back({l[0], l[1], l[2]});
  j["annotations"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : annotations_) j["annotations"][k] = v;
  return j.dump(indent);
}

std::string ConfigReport::to_dot(DotLineStyle style) const {
  std::ostringstream out;
  out << "graph \"" << name_ << "\" {\n";
  out << "  node [fontsize=10];\n";
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    out << "  p" << i << " [label=\"" << p.word.str() << "\", shape="
        << (p.cls == ElementClass::symmetric ? "circle" : "hexagon") << ", role=\"" << join(p.roles, ",") << "\"];\n";
  }
  for (std::size_t i = 0; i < lines_.size(); ++i) {
    const auto& l = lines_[i];
    if (style == DotLineStyle::clique) {
      out << "  p" << l[0] << " -- p" << l[1] << ";\n";
      out << "  p" << l[1] << " -- p" << l[2] << ";\n";
      out << "  p" << l[0] << " -- p" << l[2] << ";\n";
    } else {
      out << "  l" << i << " [shape=point];\n";
      for (int k : l) out << "  l" << i << " -- p" << k << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

// --- structures --------------------------------------------------------------------------

NucleiFan nuclei_fan(const Ovoid& o, BinVec p, BinVec singled) {
  if (!o.contains(p)) throw UsageError("point is not on the ovoid");
  const auto rest = ovoid_complement(o, {p});
  NucleiFan fan;
  fan.common = p;
  fan.singled = singled;
  bool found = false;
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      const auto n = p + rest[i] + rest[j];
      fan.nuclei.push_back(n);
      if (n == singled) {
        fan.conic_a = rest[i];
        fan.conic_b = rest[j];
        found = true;
      }
    }
  if (!found) throw UsageError("singled nucleus is not the nucleus of a conic through the point");
  std::sort(fan.nuclei.begin(), fan.nuclei.end());

  std::vector<BinVec> others;
  for (auto x : rest)
    if (x != fan.conic_a && x != fan.conic_b) others.push_back(x);
  for (auto x : others) {
    fan.six_a.push_back(p + fan.conic_a + x);
    fan.six_b.push_back(p + fan.conic_b + x);
  }
  for (std::size_t i = 0; i < others.size(); ++i)
    for (std::size_t j = i + 1; j < others.size(); ++j) fan.fifteen.push_back(p + others[i] + others[j]);
  std::sort(fan.fifteen.begin(), fan.fifteen.end());
  fan.concurrence = p + singled;

  std::vector<BinVec> cross;
  for (std::size_t i = 0; i < fan.six_a.size(); ++i)
    for (std::size_t j = 0; j < fan.six_b.size(); ++j)
      if (i != j) cross.push_back(fan.six_a[i] + fan.six_b[j]);
  fan.symmetric_fifteen = unique_sorted(std::move(cross));

  // Lines of the GQ: PG-lines inside the set, plus triples collinear after
  // projecting from p (sum equal to p).
  std::vector<BinVec> gq_points = fan.symmetric_fifteen;
  gq_points.insert(gq_points.end(), fan.six_a.begin(), fan.six_a.end());
  gq_points.insert(gq_points.end(), fan.six_b.begin(), fan.six_b.end());
  const std::array<BinVec, 2> sums{BinVec::zero(8), p};
  fan.gq = collinear_triples(std::move(gq_points), sums);
  fan.gq_check = check_generalized_quadrangle(fan.gq, 4);
  return fan;
}

HeptadAnalogue heptad_analogue_of(const Ovoid& o, BinVec first, BinVec second) {
  if (first == second) throw UsageError("heptad analogue needs two distinct points");
  const auto rest = ovoid_complement(o, {first, second});
  HeptadAnalogue h;
  h.first = first;
  h.second = second;
  for (auto x : rest) h.heptad.push_back(first + second + x);
  std::sort(h.heptad.begin(), h.heptad.end());
  const auto& hp = h.heptad;
  for (std::size_t i = 0; i < hp.size(); ++i)
    for (std::size_t j = i + 1; j < hp.size(); ++j) h.third_points.push_back(hp[i] + hp[j]);
  std::sort(h.third_points.begin(), h.third_points.end());
  std::vector<BinVec> triples;
  for (std::size_t i = 0; i < hp.size(); ++i)
    for (std::size_t j = i + 1; j < hp.size(); ++j)
      for (std::size_t k = j + 1; k < hp.size(); ++k) triples.push_back(hp[i] + hp[j] + hp[k]);
  h.triple_sums = triples.size();
  h.triple_nuclei = unique_sorted(std::move(triples));
  return h;
}

HeptadFamily heptad_family_of(const Ovoid& o, const std::vector<BinVec>& vertices) {
  const auto k = vertices.size();
  if (k != 3 && k != 4) throw UsageError("heptad family needs a triangle (3 vertices) or a quadrangle (4 vertices)");
  if (unique_sorted(vertices).size() != k) throw UsageError("heptad family vertices must be distinct");
  for (auto v : vertices)
    if (!o.contains(v)) throw UsageError("heptad family vertex " + word(v) + " is not on the ovoid");

  HeptadFamily f;
  f.shape = k == 3 ? HeptadShape::triangle : HeptadShape::quadrangle;
  f.vertices = vertices;
  for (std::size_t i = 0; i < k; ++i) f.heptads.push_back(heptad_analogue_of(o, vertices[i], vertices[(i + 1) % k]).heptad);

  if (f.shape == HeptadShape::triangle) {
    f.common = intersect(intersect(f.heptads[0], f.heptads[1]), f.heptads[2]);
    const auto other = second_ovoid_on_conic(o, {vertices[0], vertices[1], vertices[2]});
    for (std::size_t i = 0; i < k; ++i)
      f.second_heptads.push_back(heptad_analogue_of(other, vertices[i], vertices[(i + 1) % k]).heptad);
    return f;
  }

  f.solid_point = solid_extra_point(o, vertices);
  for (std::size_t i = 0; i < k; ++i) {
    const auto meet = intersect(f.heptads[i], f.heptads[(i + 1) % k]);
    if (meet.size() != 1) throw ConsistencyError("consecutive heptads do not share exactly one point");
    f.shared.push_back(meet.front());
    // heptads[i] and heptads[i+1] both contain the middle vertex i+1; pair
    // their shared point with the vertex outside both pairs.
    f.concurrent_lines.push_back(line_through(meet.front(), vertices[(i + 3) % k]));
  }
  return f;
}

SplitCensus sixty_three_split_of(const std::vector<Ovoid>& all, const Ovoid& reference, BinVec p) {
  SplitCensus s;
  for (const auto& q : all)
    if (q.contains(p)) s.through.push_back(q);
  s.census = ovoid_intersection_census(all, reference, p);
  s.reference_invariant = true;
  for (const auto& q : s.through) {
    const auto c = ovoid_intersection_census(all, q, p);
    if (c.one_point != s.census.one_point || c.three_points != s.census.three_points || c.other != s.census.other)
      s.reference_invariant = false;
  }
  return s;
}

std::map<std::vector<int>, std::size_t> skew_profile_distribution(const SixOvoidFamily& family) {
  std::map<std::vector<int>, std::size_t> out;
  const auto all = family.all();
  for (auto w : kCtx.off_quadric_points()) ++out[commutation_profile(point_to_word(w), all)];
  return out;
}

// --- report builders ---------------------------------------------------------------------

namespace {

void add_ovoid(ConfigReport& r, const Ovoid& o, std::string_view role) {
  for (auto p : o.points()) r.add_point(p, role);
}

void add_plane(ConfigReport& r, const Flat& plane, std::string_view role_off) {
  const auto pts = flat_points(plane);
  for (auto p : pts)
    if (!r.index_of(p)) r.add_point(p, role_off);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) r.add_line(pts[i], pts[j], pts[i] + pts[j]);
}

std::string partition_str(const Partition& partition) {
  std::vector<std::string> parts;
  for (const auto& t : partition) parts.push_back(words_of({t.begin(), t.end()}));
  return join(parts, " | ");
}

}  // namespace

ConfigReport fig_secants(const Ovoid& o) {
  ConfigReport r("fig1");
  add_ovoid(r, o, "ovoid");
  const auto& p = o.points();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      r.add_point(p[i] + p[j], "secant");
      r.add_line(p[i], p[j], p[i] + p[j]);
    }
  r.annotate("ovoid", words_of(o.points()));
  r.annotate("secant_points", std::to_string(r.count_role("secant")));
  return r;
}

ConfigReport fig_conic_partition(const Ovoid& o, const Partition& partition) {
  ConfigReport r("fig2");
  add_ovoid(r, o, "ovoid");
  const auto tetrad = tetrad_of_partition(o, partition);
  for (const auto& t : partition) {
    r.add_point(t[0] + t[1] + t[2], "nucleus");
    add_plane(r, span({t[0], t[1], t[2]}), "secant");
  }
  for (const auto& l : tetrad.lines) {
    for (auto x : l.points()) r.add_point(x, "tetrad");
    r.add_line(l);
  }
  for (auto x : tetrad.axis.points()) r.add_point(x, "axis");
  r.add_line(tetrad.axis);
  r.annotate("partition", partition_str(partition));
  r.annotate("axis", words_of({tetrad.axis.points().begin(), tetrad.axis.points().end()}));
  std::vector<std::string> lines;
  for (const auto& l : tetrad.lines) lines.push_back(words_of({l.points().begin(), l.points().end()}));
  r.annotate("tetrad", join(lines, " | "));
  r.annotate("tetrad_span_proj_dim", std::to_string(span(tetrad.points()).proj_dim()));
  return r;
}

ConfigReport fig_tetrad(const Ovoid& o, const Partition& partition) {
  ConfigReport r("fig2-tetrad");
  const auto tetrad = tetrad_of_partition(o, partition);
  for (const auto& l : tetrad.lines) {
    for (auto x : l.points()) r.add_point(x, "tetrad");
    r.add_line(l);
  }
  for (auto x : tetrad.axis.points()) r.add_point(x, "axis");
  r.annotate("partition", partition_str(partition));
  r.annotate("span_proj_dim", std::to_string(span(tetrad.points()).proj_dim()));
  return r;
}

ConfigReport fig_two_ovoids_conic(const Ovoid& o, const Triple& triple) {
  ConfigReport r("fig3");
  const auto other = second_ovoid_on_conic(o, triple);
  const auto nucleus = triple[0] + triple[1] + triple[2];
  for (auto p : triple) r.add_point(p, "shared");
  std::vector<BinVec> double_six;
  for (auto p : o.points())
    if (!r.index_of(p)) {
      r.add_point(p, "ovoid");
      double_six.push_back(p);
    }
  for (auto p : other.points())
    if (!r.index_of(p)) {
      r.add_point(p, "second-ovoid");
      double_six.push_back(p);
    }
  r.add_point(nucleus, "nucleus");
  for (auto p : ovoid_complement(o, {triple.begin(), triple.end()})) r.add_line(p, p + nucleus, nucleus);
  r.annotate("nucleus", word(nucleus));
  r.annotate("second_ovoid", words_of(other.points()));
  r.annotate("fano_plane", words_of(flat_points(span({triple[0], triple[1], triple[2]}))));
  r.annotate("double_six", words_of(double_six));
  return r;
}

ConfigReport fig_six_ovoids(const Ovoid& o, const Partition& partition) {
  ConfigReport r("fig4");
  const auto family = six_ovoid_family(o, partition);
  for (int i = 0; i < 3; ++i) add_ovoid(r, family.first_triad[i], "triad1:O" + std::to_string(i + 1));
  for (int i = 0; i < 3; ++i) add_ovoid(r, family.second_triad[i], "triad2:O" + std::to_string(i + 1));
  for (auto x : family.axis.points()) r.add_point(x, "axis");
  r.add_line(family.axis);
  for (int i = 0; i < 3; ++i)
    if (family.second_triad[i] == o) r.annotate("reference_ovoid", "triad2:O" + std::to_string(i + 1));
  r.annotate("partition", partition_str(partition));
  r.annotate("axis", words_of({family.axis.points().begin(), family.axis.points().end()}));
  return r;
}

ConfigReport fig_commutation(const Ovoid& o, const Partition& partition, BinVec symmetric_probe, BinVec skew_probe) {
  ConfigReport r("fig5");
  const auto family = six_ovoid_family(o, partition);
  const auto all = family.all();
  for (int i = 0; i < 3; ++i) add_ovoid(r, family.first_triad[i], "triad1:O" + std::to_string(i + 1));
  for (int i = 0; i < 3; ++i) add_ovoid(r, family.second_triad[i], "triad2:O" + std::to_string(i + 1));
  r.add_point(symmetric_probe, "probe");
  r.add_point(skew_probe, "probe");
  for (auto x : family.points) {
    if (!kCtx.symplectic(x, symmetric_probe)) r.add_point(x, "commutes-symmetric-probe");
    if (!kCtx.symplectic(x, skew_probe)) r.add_point(x, "commutes-skew-probe");
  }
  r.annotate("symmetric_probe", word(symmetric_probe));
  r.annotate("symmetric_profile", profile_str(commutation_profile(point_to_word(symmetric_probe), all)));
  r.annotate("skew_probe", word(skew_probe));
  r.annotate("skew_profile", profile_str(commutation_profile(point_to_word(skew_probe), all)));
  std::vector<std::string> dist;
  for (const auto& [profile, count] : skew_profile_distribution(family))
    dist.push_back("(" + profile_str(profile) + "):" + std::to_string(count));
  r.annotate("skew_profile_distribution", join(dist, " "));
  return r;
}

ConfigReport fig_two_ovoids_point(const Ovoid& o, BinVec p, const std::vector<BinVec>& part_a) {
  ConfigReport r("fig6");
  const auto s = point_partition_line(o, p, part_a);
  r.add_point(p, "shared");
  for (auto x : s.part_a) r.add_point(x, "ovoid"), r.add_point(x, "part-a");
  for (auto x : s.part_b) r.add_point(x, "ovoid"), r.add_point(x, "part-b");
  for (auto x : s.second.points())
    if (x != p) r.add_point(x, "second-ovoid");
  r.add_point(s.extra_a, "extra");
  r.add_point(s.extra_b, "extra");
  r.add_line(s.line);
  for (auto x : s.part_b) r.add_line(s.extra_a, x, s.extra_a + x);
  for (auto x : s.part_a) r.add_line(s.extra_b, x, s.extra_b + x);

  auto with = [](std::vector<BinVec> v, BinVec e) {
    v.push_back(e);
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<BinVec> second_a, second_b;  // second ovoid's own quadruples
  for (auto x : s.part_b) second_a.push_back(s.extra_a + x);
  for (auto x : s.part_a) second_b.push_back(s.extra_b + x);
  r.annotate("through_line", words_of({s.line.points().begin(), s.line.points().end()}));
  r.annotate("extra_points", words_of({s.extra_a, s.extra_b}));
  r.annotate("second_ovoid", words_of(s.second.points()));
  r.annotate("elliptic_quadrics_on_" + word(s.extra_a),
             words_of(with(s.part_a, s.extra_a)) + " | " + words_of(with(second_b, s.extra_a)));
  r.annotate("elliptic_quadrics_on_" + word(s.extra_b),
             words_of(with(s.part_b, s.extra_b)) + " | " + words_of(with(second_a, s.extra_b)));
  return r;
}

ConfigReport fig_pentad(const Ovoid& o, const std::vector<BinVec>& pentad) {
  ConfigReport r("fig7");
  const auto cone = pentad_intersection(o, pentad);
  for (auto x : pentad) r.add_point(x, "pentad");
  r.add_point(cone.vertex, "vertex");
  for (auto x : cone.points)
    if (!r.index_of(x)) r.add_point(x, "extra");
  for (const auto& l : cone.lines) r.add_line(l);
  r.annotate("vertex", word(cone.vertex));
  r.annotate("complementary_quartet", words_of(ovoid_complement(o, pentad)));
  r.annotate("section_points", std::to_string(cone.points.size()));
  return r;
}

ConfigReport fig_sextet(const Ovoid& o, const std::vector<BinVec>& sextet) {
  ConfigReport r("fig8");
  const auto s = sextet_intersection(o, sextet);
  for (const auto& [a, b] : s.double_six) {
    r.add_point(a, "sextet");
    r.add_point(b, "partner");
  }
  for (auto x : s.points)
    if (!r.index_of(x)) r.add_point(x, "gq22");
  for (const auto& l : s.lines.lines) r.add_line(s.lines.points[l[0]], s.lines.points[l[1]], s.lines.points[l[2]]);
  r.add_point(s.complementary_nucleus, "nucleus");
  for (const auto& [a, b] : s.double_six)
    if ((a + b) == s.complementary_nucleus) r.add_line(a, b, s.complementary_nucleus);
  r.annotate("nucleus", word(s.complementary_nucleus));
  r.annotate("quadric_lines", std::to_string(s.lines.lines.size()));
  return r;
}

ConfigReport fig_nuclei_fan(const Ovoid& o, BinVec p, BinVec singled) {
  ConfigReport r("fig9");
  const auto fan = nuclei_fan(o, p, singled);
  r.add_point(p, "common");
  r.add_point(fan.conic_a, "conic");
  r.add_point(fan.conic_b, "conic");
  r.add_point(singled, "singled");
  for (auto x : fan.six_a) r.add_point(x, "six-a");
  for (auto x : fan.six_b) r.add_point(x, "six-b");
  for (auto x : fan.fifteen) r.add_point(x, "fifteen");
  r.add_point(fan.concurrence, "concurrence");
  for (auto x : fan.symmetric_fifteen) r.add_point(x, "gq-symmetric");
  r.add_line(p, singled, fan.concurrence);
  for (std::size_t i = 0; i < fan.six_a.size(); ++i) {
    r.add_line(fan.six_a[i], fan.six_b[i], fan.concurrence);
    for (std::size_t j = 0; j < fan.six_b.size(); ++j)
      if (i != j) r.add_line(fan.six_a[i], fan.six_b[j], fan.six_a[i] + fan.six_b[j]);
  }
  r.annotate("concurrence", word(fan.concurrence));
  r.annotate("conic_points", words_of({fan.conic_a, fan.conic_b}));
  r.annotate("gq_points", std::to_string(fan.gq.points.size()));
  r.annotate("gq_lines", std::to_string(fan.gq.lines.size()));
  r.annotate("gq_2_4", fan.gq_check.ok() ? "yes" : "no");
  return r;
}

ConfigReport heptad_analogue(const Ovoid& o, BinVec first, BinVec second) {
  ConfigReport r("fig10");
  const auto h = heptad_analogue_of(o, first, second);
  r.add_point(first, "shared");
  r.add_point(second, "shared");
  for (auto x : h.heptad) r.add_point(x, "heptad");
  for (auto x : h.third_points) r.add_point(x, "third");
  for (std::size_t i = 0; i < h.heptad.size(); ++i)
    for (std::size_t j = i + 1; j < h.heptad.size(); ++j) r.add_line(h.heptad[i], h.heptad[j], h.heptad[i] + h.heptad[j]);
  r.annotate("heptad", words_of(h.heptad));
  r.annotate("off_quadric_points", std::to_string(h.heptad.size() + h.third_points.size()));
  return r;
}

ConfigReport fig_triple_nuclei(const Ovoid& o, BinVec first, BinVec second) {
  ConfigReport r("fig11");
  const auto h = heptad_analogue_of(o, first, second);
  for (auto x : h.heptad) r.add_point(x, "heptad");
  for (auto x : h.triple_nuclei) r.add_point(x, "triple-nucleus");
  r.annotate("heptad", words_of(h.heptad));
  r.annotate("triple_nuclei", std::to_string(h.triple_nuclei.size()));
  return r;
}

ConfigReport heptad_family(const Ovoid& o, const std::vector<BinVec>& vertices) {
  const auto f = heptad_family_of(o, vertices);
  ConfigReport r(f.shape == HeptadShape::triangle ? "heptad-family-triangle" : "heptad-family-quadrangle");
  for (auto v : f.vertices) r.add_point(v, "vertex");
  for (std::size_t i = 0; i < f.heptads.size(); ++i)
    for (auto x : f.heptads[i]) r.add_point(x, "heptad:" + std::to_string(i + 1));
  for (std::size_t i = 0; i < f.second_heptads.size(); ++i)
    for (auto x : f.second_heptads[i]) r.add_point(x, "second-heptad:" + std::to_string(i + 1));
  for (auto x : f.common) r.add_point(x, "common");
  if (f.shape == HeptadShape::quadrangle) {
    for (auto x : f.shared) r.add_point(x, "shared");
    r.add_point(f.solid_point, "solid-point");
    for (const auto& l : f.concurrent_lines) r.add_line(l);
    r.annotate("solid_point", word(f.solid_point));
  } else {
    r.annotate("common", words_of(f.common));
  }
  r.annotate("vertices", words_of(f.vertices));
  return r;
}

ConfigReport sixty_three_split(const std::vector<Ovoid>& all, const Ovoid& reference, BinVec p) {
  ConfigReport r("split63");
  const auto s = sixty_three_split_of(all, reference, p);
  r.add_point(p, "common");
  for (auto x : reference.points())
    if (x != p) r.add_point(x, "reference");
  r.annotate("ovoids_through_point", std::to_string(s.through.size()));
  r.annotate("one_point_neighbours", std::to_string(s.census.one_point));
  r.annotate("conic_neighbours", std::to_string(s.census.three_points));
  r.annotate("other_neighbours", std::to_string(s.census.other));
  r.annotate("reference_invariant", s.reference_invariant ? "yes" : "no");
  r.annotate("klein_analogy", "PG(5,2): 35 points on / 28 off a Klein quadric");
  return r;
}

// --- defaults ------------------------------------------------------------------------------

std::array<BinVec, 9> reference_rows(const Ovoid& o) {
  if (o == edge_ovoid()) return edge_ovoid_rows();
  std::array<BinVec, 9> rows;
  std::copy(o.points().begin(), o.points().end(), rows.begin());
  return rows;
}

FigureDefaults figure_defaults(const Ovoid& o) {
  const auto r = reference_rows(o);
  auto sort3 = [](Triple t) {
    std::sort(t.begin(), t.end());
    return t;
  };
  FigureDefaults d;
  d.partition = {sort3({r[0], r[2], r[8]}), sort3({r[1], r[3], r[5]}), sort3({r[4], r[6], r[7]})};
  std::sort(d.partition.begin(), d.partition.end());
  d.conic = sort3({r[0], r[2], r[8]});
  d.split_point = r[8];
  d.split_a = {r[0], r[1], r[2], r[3]};
  d.pentad = {r[0], r[1], r[2], r[3], r[4]};
  d.sextet = ovoid_complement(o, {d.conic.begin(), d.conic.end()});
  d.fan_point = r[8];
  d.fan_nucleus = r[0] + r[2] + r[8];
  d.heptad_first = r[5];
  d.heptad_second = r[6];
  d.triangle = {r[0], r[1], r[2]};
  d.quadrangle = {r[0], r[1], r[2], r[3]};
  return d;
}

std::pair<BinVec, BinVec> default_probes(const SixOvoidFamily& family) {
  const auto mask = mask_of(family.points);
  std::optional<BinVec> sym, skew;
  for (auto p : kCtx.points()) {
    if (!sym && !kCtx.quadratic(p) && !mask.test(p.value())) sym = p;
    if (!skew && kCtx.quadratic(p)) skew = p;
  }
  return {*sym, *skew};
}

}  // namespace pauligeo
