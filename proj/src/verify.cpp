#include "pauligeo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pauligeo/errors.hpp"
#include "pauligeo/matrix_oracle.hpp"
#include "pauligeo/parallel.hpp"

namespace pauligeo {

// --- cache ---------------------------------------------------------------------

const Quadric& GeometryCache::quadric() {
  std::call_once(quadric_once_, [&] { quadric_ = hyperbolic_quadric(GeometryContext(4)); });
  return *quadric_;
}

const GeneratorSet& GeometryCache::quadric_generators() {
  std::call_once(qgen_once_, [&] { qgen_ = enumerate_generators(GeometryContext(4), GeneratorSpace::quadric); });
  return *qgen_;
}

const GeneratorSet& GeometryCache::symplectic_generators() {
  std::call_once(sgen_once_, [&] { sgen_ = enumerate_generators(GeometryContext(4), GeneratorSpace::symplectic); });
  return *sgen_;
}

const std::vector<Ovoid>& GeometryCache::ovoids() {
  std::call_once(ovoids_once_, [&] { ovoids_ = enumerate_ovoids(quadric(), quadric_generators(), jobs_); });
  return *ovoids_;
}

// --- report --------------------------------------------------------------------

bool VerificationReport::pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.pass; });
}

const CheckRow* VerificationReport::find(std::string_view check) const {
  for (const auto& r : rows)
    if (r.check == check) return &r;
  return nullptr;
}

std::string VerificationReport::to_text(bool timings) const {
  std::size_t w_check = 5, w_exp = 8, w_comp = 8;
  for (const auto& r : rows) {
    w_check = std::max(w_check, r.check.size());
    w_exp = std::max(w_exp, r.expected.size());
    w_comp = std::max(w_comp, r.computed.size());
  }
  std::ostringstream out;
  auto cell = [&](const std::string& s, std::size_t w) { out << s << std::string(w - s.size(), ' ') << " | "; };
  out << "N=" << n << " level=" << (level == VerifyLevel::quick ? "quick" : "full") << "\n";
  cell("check", w_check);
  cell("expected", w_exp);
  cell("computed", w_comp);
  out << "status";
  if (timings) out << " | ms";
  out << "\n";
  for (const auto& r : rows) {
    cell(r.check, w_check);
    cell(r.expected, w_exp);
    cell(r.computed, w_comp);
    out << (r.pass ? "PASS  " : "FAIL  ");
    if (timings) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " | %.1f", r.ms);
      out << buf;
    }
    out << "\n";
  }
  out << (pass() ? "ALL PASS" : "FAILURES") << " (" << rows.size() << " checks)\n";
  return out.str();
}

std::string VerificationReport::to_json(bool timings) const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["level"] = level == VerifyLevel::quick ? "quick" : "full";
  j["pass"] = pass();
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row{{"check", r.check}, {"expected", r.expected}, {"computed", r.computed}, {"pass", r.pass}};
    if (timings) row["ms"] = r.ms;
    j["rows"].push_back(row);
  }
  return j.dump(2);
}

// --- checks --------------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

class Runner {
 public:
  explicit Runner(VerificationReport& report) : report_(report) {}

  void check(std::string name, std::string expected, const std::function<std::string()>& compute) {
    CheckRow row{std::move(name), std::move(expected), "", false, 0};
    const auto start = Clock::now();
    try {
      row.computed = compute();
    } catch (const std::exception& e) {
      row.computed = std::string("error: ") + e.what();
    }
    row.ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    row.pass = row.computed == row.expected;
    report_.rows.push_back(std::move(row));
  }
  void check(std::string name, std::uint64_t expected, const std::function<std::uint64_t()>& compute) {
    check(std::move(name), std::to_string(expected), [&] { return std::to_string(compute()); });
  }
  void check_true(std::string name, const std::function<bool()>& compute) {
    check(std::move(name), "yes", [&] { return std::string(compute() ? "yes" : "no"); });
  }

 private:
  VerificationReport& report_;
};

std::string pair_str(std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); }

void common_checks(Runner& run, const VerifyOptions& opt, const GeometryContext& ctx) {
  const int n = ctx.n();
  run.check("points", (1u << (2 * n)) - 1, [&] { return ctx.points().size(); });
  run.check("quadric points", expected_count(SpaceKind::hyperbolic, Measure::points, n),
            [&] { return ctx.quadric_points().size(); });
  run.check("off-quadric points",
            expected_count(SpaceKind::symplectic, Measure::points, n) -
                expected_count(SpaceKind::hyperbolic, Measure::points, n),
            [&] { return ctx.off_quadric_points().size(); });
  run.check("quadric <=> even Y-count", (1u << (2 * n)) - 1, [&] {
    std::size_t ok = 0;
    for (auto p : ctx.points()) ok += (!ctx.quadratic(p)) == (point_to_word(p).y_count() % 2 == 0);
    return ok;
  });
  run.check("oracle mismatches", 0, [&] {
    return check_oracle_agreement(n, opt.exhaustive_oracle, 100000).mismatches;
  });
}

void generator_checks(Runner& run, const GeometryContext& ctx, const GeneratorSet* sym, const GeneratorSet* quad) {
  const int n = ctx.n();
  const std::size_t per = (std::size_t{1} << n) - 1;
  run.check("symplectic generators", expected_count(SpaceKind::symplectic, Measure::generators, n), [&] {
    return (sym ? *sym : enumerate_generators(ctx, GeneratorSpace::symplectic)).generators.size();
  });
  run.check_true("symplectic generators have 2^N-1 points", [&] {
    const auto& g = sym ? *sym : enumerate_generators(ctx, GeneratorSpace::symplectic);
    return std::all_of(g.masks.begin(), g.masks.end(), [&](const PointMask& m) { return m.count() == per; });
  });
  const auto total = expected_count(SpaceKind::hyperbolic, Measure::generators, n);
  run.check("quadric generators by family", pair_str(total / 2, total / 2), [&] {
    const auto& g = quad ? *quad : enumerate_generators(ctx, GeneratorSpace::quadric);
    const auto ones = static_cast<std::size_t>(std::count(g.family.begin(), g.family.end(), 1));
    return pair_str(g.family.size() - ones, ones);
  });
}

void run_n4(Runner& run, const VerifyOptions& opt, GeometryCache& cache) {
  const GeometryContext ctx(4);
  const Ovoid ref = opt.ovoid ? *opt.ovoid : edge_ovoid();
  const unsigned jobs = opt.jobs;

  generator_checks(run, ctx, &cache.symplectic_generators(), &cache.quadric_generators());

  run.check("edge rows map onto reference rows", 9, [&] {
    const auto y = edge_ovoid_rows_edge_coords();
    const auto x = edge_ovoid_rows();
    std::size_t ok = 0;
    for (int i = 0; i < 9; ++i) ok += edge_to_standard(y[i]) == x[i];
    return ok;
  });
  run.check("edge transform bijective", 256, [&] {
    std::set<std::uint32_t> images;
    std::size_t inverse_ok = 0;
    for (std::uint32_t v = 0; v < 256; ++v) {
      const auto img = edge_to_standard(BinVec(8, v));
      images.insert(img.value());
      inverse_ok += standard_to_edge(img) == BinVec(8, v);
    }
    return inverse_ok == 256 ? images.size() : 0;
  });

  run.check_true("reference is an ovoid", [&] { return is_ovoid(ref.points(), cache.quadric_generators()); });
  run.check("ovoids", 960, [&] { return cache.ovoids().size(); });
  run.check("ovoids through each point (min/max)", "64/64", [&] {
    std::size_t lo = SIZE_MAX, hi = 0;
    for (auto p : cache.quadric().points) {
      const auto c = static_cast<std::size_t>(std::count_if(cache.ovoids().begin(), cache.ovoids().end(),
                                                             [&](const Ovoid& o) { return o.contains(p); }));
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    return pair_str(lo, hi);
  });

  run.check("secant points + nuclei", "36+84=120", [&] {
    const auto secants = secant_third_points(ref);
    std::vector<BinVec> nuclei;
    for (const auto& c : conics_of(ref)) nuclei.push_back(c.nucleus);
    std::sort(nuclei.begin(), nuclei.end());
    nuclei.erase(std::unique(nuclei.begin(), nuclei.end()), nuclei.end());
    auto all = mask_of(secants) | mask_of(nuclei);
    const auto both = (mask_of(secants) & mask_of(nuclei)).count();
    const auto off = mask_of(ctx.off_quadric_points());
    if (both != 0 || (all & ~off).any()) return std::string("overlap or on-quadric");
    return std::to_string(secants.size()) + "+" + std::to_string(nuclei.size()) + "=" + std::to_string(all.count());
  });

  const auto partitions = partitions_of(ref);
  run.check("partitions", 280, [&] { return partitions.size(); });
  run.check("axes off the quadric", 280, [&] {
    std::size_t ok = 0;
    for (const auto& part : partitions) {
      const auto axis = axis_of_partition(ref, part);
      ok += std::none_of(axis.points().begin(), axis.points().end(), [&](BinVec p) { return !ctx.quadratic(p); });
    }
    return ok;
  });
  run.check("tetrads spanning PG(7,2)", 280, [&] {
    std::size_t ok = 0;
    for (const auto& part : partitions) {
      const auto t = tetrad_of_partition(ref, part);
      const auto pts = t.points();
      ok += pts.size() == 12 && mask_of(pts).count() == 12 && span(pts).proj_dim() == 7;
    }
    return ok;
  });
  if (opt.level == VerifyLevel::full) {
    run.check("distinct tetrads (multiplicity)", "11200 (24..24)", [&] {
      const auto c = tetrad_census(cache.ovoids(), jobs);
      return std::to_string(c.distinct) + " (" + std::to_string(c.min_multiplicity) + ".." +
             std::to_string(c.max_multiplicity) + ")";
    });
  }

  run.check("second ovoids on conics", 84, [&] {
    std::size_t ok = 0;
    for (const auto& c : conics_of(ref)) {
      const auto o2 = second_ovoid_on_conic(ref, c.triple);
      ok += ref.shared_with(o2) == 3 && std::binary_search(cache.ovoids().begin(), cache.ovoids().end(), o2);
    }
    return ok;
  });

  run.check("solid extra points = quadric minus ovoid", 126, [&] {
    std::vector<BinVec> extras;
    const auto& p = ref.points();
    for (int a = 0; a < 9; ++a)
      for (int b = a + 1; b < 9; ++b)
        for (int c = b + 1; c < 9; ++c)
          for (int d = c + 1; d < 9; ++d) {
            const std::vector<BinVec> quad{p[a], p[b], p[c], p[d]};
            const auto solid = flat_points(span(quad));
            std::vector<BinVec> on;
            for (auto x : solid)
              if (!ctx.quadratic(x)) on.push_back(x);
            if (on.size() != 5 || !collinear_triples(on).lines.empty()) return std::size_t{0};
            extras.push_back(solid_extra_point(ref, quad));
          }
    const auto m = mask_of(extras);
    const auto expected = mask_of(cache.quadric().points) & ~ref.mask();
    return m == expected && extras.size() == m.count() ? m.count() : 0;
  });

  run.check("splits through each point", 9 * 35, [&] {
    std::size_t ok = 0;
    for (auto p : ref.points())
      for (const auto& a : splits_through(ref, p)) {
        const auto s = point_partition_line(ref, p, a);
        ok += s.second.shared_with(ref) == 1 && s.line.contains(p) && !ctx.quadratic(s.extra_a) &&
              !ctx.quadratic(s.extra_b);
      }
    return ok;
  });

  if (opt.level == VerifyLevel::full) {
    run.check("pairwise intersection sizes", "{0,1,3}", [&] {
      std::string out = "{";
      bool first = true;
      for (const auto& [size, count] : pairwise_intersection_histogram(cache.ovoids(), jobs)) {
        if (!first) out += ",";
        out += std::to_string(size);
        first = false;
      }
      return out + "}";
    });
    run.check("one-point/three-point neighbours per point", "35/28 x9", [&] {
      std::set<std::string> seen;
      for (auto p : ref.points()) {
        const auto c = ovoid_intersection_census(cache.ovoids(), ref, p);
        seen.insert(pair_str(c.one_point, c.three_points));
      }
      if (seen.size() != 1) return std::string("varies");
      return *seen.begin() + " x9";
    });
  }

  run.check("pentad cones (11 points, 5 lines)", 126, [&] {
    std::size_t ok = 0;
    const auto& p = ref.points();
    for (int a = 0; a < 9; ++a)
      for (int b = a + 1; b < 9; ++b)
        for (int c = b + 1; c < 9; ++c)
          for (int d = c + 1; d < 9; ++d) {
            const auto quartet = std::vector<BinVec>{p[a], p[b], p[c], p[d]};
            const auto pentad = ovoid_complement(ref, quartet);
            const auto cone = pentad_intersection(ref, pentad);
            const bool lines_ok = cone.lines.size() == 5 && std::all_of(cone.lines.begin(), cone.lines.end(),
                                                                         [&](const Line& l) { return l.contains(cone.vertex); });
            ok += cone.points.size() == 11 && lines_ok && cone.vertex == solid_extra_point(ref, quartet);
          }
    return ok;
  });
  run.check("sextet sections (27 points, 45 lines)", 84, [&] {
    std::size_t ok = 0;
    for (const auto& c : conics_of(ref)) {
      const auto s = sextet_intersection(ref, ovoid_complement(ref, {c.triple.begin(), c.triple.end()}));
      const auto deg = s.lines.degrees();
      ok += s.points.size() == 27 && s.lines.lines.size() == 45 &&
            std::all_of(deg.begin(), deg.end(), [](int d) { return d == 5; }) && s.center == c.nucleus &&
            s.complementary_nucleus == c.nucleus;
    }
    return ok;
  });
  run.check("heptad sections (63 points)", 36, [&] {
    std::size_t ok = 0;
    const auto& p = ref.points();
    for (int a = 0; a < 9; ++a)
      for (int b = a + 1; b < 9; ++b) {
        const auto h = heptad_intersection(ref, ovoid_complement(ref, {p[a], p[b]}));
        ok += h.points.size() == 63 && h.nucleus == p[a] + p[b];
      }
    return ok;
  });

  run.check("conic nuclei through each ovoid point", "28 x9", [&] {
    std::set<std::size_t> sizes;
    for (auto p : ref.points()) {
      std::set<BinVec> nuclei;
      for (const auto& c : conics_of(ref))
        if (std::find(c.triple.begin(), c.triple.end(), p) != c.triple.end()) nuclei.insert(c.nucleus);
      sizes.insert(nuclei.size());
    }
    return sizes.size() == 1 ? std::to_string(*sizes.begin()) + " x9" : std::string("varies");
  });
  run.check("nuclei fans (15+6+6, GQ(2,4))", 9 * 28, [&] {
    std::size_t ok = 0;
    for (auto p : ref.points())
      for (const auto& c : conics_of(ref)) {
        if (std::find(c.triple.begin(), c.triple.end(), p) == c.triple.end()) continue;
        const auto f = nuclei_fan(ref, p, c.nucleus);
        bool concurrent = true;
        for (std::size_t i = 0; i < f.six_a.size(); ++i) concurrent &= (f.six_a[i] + f.six_b[i]) == f.concurrence;
        ok += f.nuclei.size() == 28 && f.fifteen.size() == 15 && f.six_a.size() == 6 && concurrent &&
              f.symmetric_fifteen.size() == 15 && f.gq.points.size() == 27 && f.gq.lines.size() == 45 &&
              f.gq_check.ok();
      }
    return ok;
  });
  if (!opt.ovoid) {
    run.check("concurrence for XXXX, ZYII", "YZXX", [&] {
      return point_to_word(nuclei_fan(ref, parse_point("XXXX"), parse_point("ZYII")).concurrence).str();
    });
  }
  run.check("heptad analogues (21 skew thirds, 35 symmetric triples)", 36, [&] {
    std::size_t ok = 0;
    const auto& p = ref.points();
    for (int a = 0; a < 9; ++a)
      for (int b = a + 1; b < 9; ++b) {
        const auto h = heptad_analogue_of(ref, p[a], p[b]);
        const bool thirds = mask_of(h.third_points).count() == 21 &&
                            std::all_of(h.third_points.begin(), h.third_points.end(), [&](BinVec x) { return ctx.quadratic(x); });
        const bool triples = h.triple_sums == 35 && h.triple_nuclei.size() == 35 &&
                             std::none_of(h.triple_nuclei.begin(), h.triple_nuclei.end(), [&](BinVec x) { return ctx.quadratic(x); });
        ok += h.heptad.size() == 7 && thirds && triples;
      }
    return ok;
  });
  run.check("triangles (3+3 heptads, one common point)", 84, [&] {
    std::size_t ok = 0;
    for (const auto& c : conics_of(ref)) {
      const auto f = heptad_family_of(ref, {c.triple.begin(), c.triple.end()});
      std::vector<std::vector<BinVec>> six = f.heptads;
      six.insert(six.end(), f.second_heptads.begin(), f.second_heptads.end());
      auto common = mask_of(six[0]);
      for (const auto& h : six) common &= mask_of(h);
      ok += f.heptads.size() == 3 && f.second_heptads.size() == 3 && common.count() == 1 && f.common.size() == 1;
    }
    return ok;
  });
  run.check("quadrangles (4 lines concurrent at solid point)", 126 * 3, [&] {
    std::size_t ok = 0;
    const auto& p = ref.points();
    for (int a = 0; a < 9; ++a)
      for (int b = a + 1; b < 9; ++b)
        for (int c = b + 1; c < 9; ++c)
          for (int d = c + 1; d < 9; ++d) {
            // the three cyclic orders of a 4-set
            for (const auto& order : {std::vector<BinVec>{p[a], p[b], p[c], p[d]}, std::vector<BinVec>{p[a], p[b], p[d], p[c]},
                                      std::vector<BinVec>{p[a], p[c], p[b], p[d]}}) {
              const auto f = heptad_family_of(ref, order);
              ok += f.concurrent_lines.size() == 4 &&
                    std::all_of(f.concurrent_lines.begin(), f.concurrent_lines.end(),
                                [&](const Line& l) { return l.contains(f.solid_point); });
            }
          }
    return ok;
  });

  const auto defaults = figure_defaults(ref);
  const auto family = six_ovoid_family(ref, defaults.partition);
  run.check("six-ovoid family", "6 ovoids on 27 points", [&] {
    auto all = family.all();
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    std::size_t inside = 0;
    for (const auto& o : cache.ovoids()) inside += (o.mask() & ~mask_of(family.points)).none();
    return std::to_string(all.size()) + " ovoids on " + std::to_string(family.points.size()) + " points" +
           (inside == all.size() ? "" : " (" + std::to_string(inside) + " inside)");
  });
  run.check("symmetric outside family: profile 5^6", 135 - 27, [&] {
    std::size_t ok = 0;
    const auto in = mask_of(family.points);
    for (auto q : cache.quadric().points) {
      if (in.test(q.value())) continue;
      const auto prof = commutation_profile(point_to_word(q), family.all());
      ok += std::all_of(prof.begin(), prof.end(), [](int c) { return c == 5; });
    }
    return ok;
  });
  run.check("skew profiles in {3,7}", 120, [&] {
    std::size_t ok = 0;
    for (const auto& [profile, count] : skew_profile_distribution(family))
      if (std::all_of(profile.begin(), profile.end(), [](int c) { return c == 3 || c == 7; })) ok += count;
    return ok;
  });

  run.check("configuration reports valid", 15, [&] {
    const auto [sym, skew] = default_probes(family);
    std::vector<ConfigReport> reports{
        fig_secants(ref),
        fig_conic_partition(ref, defaults.partition),
        fig_tetrad(ref, defaults.partition),
        fig_two_ovoids_conic(ref, defaults.conic),
        fig_six_ovoids(ref, defaults.partition),
        fig_commutation(ref, defaults.partition, sym, skew),
        fig_two_ovoids_point(ref, defaults.split_point, defaults.split_a),
        fig_pentad(ref, defaults.pentad),
        fig_sextet(ref, defaults.sextet),
        fig_nuclei_fan(ref, defaults.fan_point, defaults.fan_nucleus),
        heptad_analogue(ref, defaults.heptad_first, defaults.heptad_second),
        fig_triple_nuclei(ref, defaults.heptad_first, defaults.heptad_second),
        heptad_family(ref, defaults.triangle),
        heptad_family(ref, defaults.quadrangle),
        sixty_three_split(cache.ovoids(), ref, defaults.split_point),
    };
    std::size_t ok = 0;
    for (const auto& r : reports) ok += r.validate().empty();
    return ok;
  });
}

void run_n3(Runner& run, const GeometryContext& ctx) {
  generator_checks(run, ctx, nullptr, nullptr);
  run.check("Conwell heptads", 8, [&] { return conwell_heptads_q5(ctx).size(); });
  run.check_true("Conwell heptads pairwise share one point", [&] {
    const auto hs = conwell_heptads_q5(ctx);
    for (std::size_t i = 0; i < hs.size(); ++i)
      for (std::size_t j = i + 1; j < hs.size(); ++j)
        if ((mask_of(hs[i]) & mask_of(hs[j])).count() != 1) return false;
    return true;
  });
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& options, GeometryCache& cache) {
  if (options.n < 2 || options.n > 4) throw UsageError("--n must be 2, 3 or 4");
  VerificationReport report;
  report.n = options.n;
  report.level = options.level;
  Runner run(report);
  const GeometryContext ctx(options.n);
  common_checks(run, options, ctx);
  if (options.n == 4)
    run_n4(run, options, cache);
  else if (options.n == 3)
    run_n3(run, ctx);
  else
    generator_checks(run, ctx, nullptr, nullptr);
  return report;
}

VerificationReport run_verification(const VerifyOptions& options) {
  GeometryCache cache(options.jobs);
  return run_verification(options, cache);
}

}  // namespace pauligeo
