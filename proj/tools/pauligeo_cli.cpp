// pauligeo: verification, enumeration and configuration export for the
// finite-geometry model of the real N-qubit Pauli group.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pauligeo/configurations.hpp"
#include "pauligeo/errors.hpp"
#include "pauligeo/matrix_oracle.hpp"
#include "pauligeo/verify.hpp"

using namespace pauligeo;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

const std::vector<std::string> kConfigNames{"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7",
                                            "fig8", "fig9", "fig10", "fig11", "heptad-analogue",
                                            "heptad-family", "split63"};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<BinVec> parse_points(const std::string& text) {
  std::vector<BinVec> out;
  for (const auto& t : split_list(text)) {
    const auto p = parse_point(t);
    if (p.dim() != 8) throw UsageError("expected a four-qubit point, got " + t);
    out.push_back(p);
  }
  return out;
}

Ovoid parse_ovoid(const std::string& text) {
  if (text.empty() || text == "Ostar") return edge_ovoid();
  auto pts = parse_points(text);
  if (pts.size() != 9) throw UsageError("--ovoid needs 9 comma-separated words");
  std::sort(pts.begin(), pts.end());
  return Ovoid(pts);
}

Partition parse_partition(const std::string& text) {
  // "a,b,c|d,e,f|g,h,i"
  Partition part;
  std::stringstream ss(text);
  std::string chunk;
  int k = 0;
  while (std::getline(ss, chunk, '|')) {
    const auto pts = parse_points(chunk);
    if (k >= 3 || pts.size() != 3) throw UsageError("--partition needs three '|'-separated triples");
    std::copy(pts.begin(), pts.end(), part[k].begin());
    std::sort(part[k].begin(), part[k].end());
    ++k;
  }
  if (k != 3) throw UsageError("--partition needs three '|'-separated triples");
  std::sort(part.begin(), part.end());
  return part;
}

std::string edge_coords(BinVec p) {
  if (p.dim() != 8) return "n/a";
  return standard_to_edge(p).str();
}

std::string point_row(BinVec p) {
  return point_to_word(p).str() + " " + p.str();
}

struct Options {
  int n = 4;
  std::string ovoid;
  std::string format = "text";
  std::string level = "quick";
  unsigned jobs = 0;
  bool exhaustive_oracle = false;
  bool no_timings = false;
  // enumerate
  std::string what;
  std::string through_point;
  std::string space = "quadric";
  bool dedup = false;
  // config
  std::string name;
  std::string point, subset, partition, nucleus, probe, style = "clique";
  // map
  std::string token;
};

int cmd_verify(const Options& o) {
  VerifyOptions v;
  v.n = o.n;
  v.level = o.level == "full" ? VerifyLevel::full : VerifyLevel::quick;
  v.jobs = o.jobs;
  v.exhaustive_oracle = o.exhaustive_oracle;
  if (!o.ovoid.empty()) v.ovoid = parse_ovoid(o.ovoid);
  const auto report = run_verification(v);
  if (o.format == "json")
    std::cout << report.to_json(!o.no_timings) << "\n";
  else
    std::cout << report.to_text(!o.no_timings);
  return report.pass() ? 0 : kExitFail;
}

int cmd_enumerate(const Options& o) {
  GeometryCache cache(o.jobs);
  std::optional<BinVec> through;
  if (!o.through_point.empty()) {
    through = parse_point(o.through_point);
    if (through->dim() != 2 * o.n) throw UsageError("--through-point has the wrong number of qubits");
  }
  auto keep = [&](const PointMask& m) { return !through || m.test(through->value()); };

  if (o.what == "ovoids") {
    if (o.n != 4) throw UsageError("ovoids exist only for --n 4");
    for (const auto& ov : cache.ovoids())
      if (keep(ov.mask())) std::cout << words_of(ov.points()) << "\n";
  } else if (o.what == "generators") {
    GeneratorSpace space;
    if (o.space == "quadric")
      space = GeneratorSpace::quadric;
    else if (o.space == "symplectic")
      space = GeneratorSpace::symplectic;
    else
      throw UsageError("--space must be quadric or symplectic");
    const auto g = enumerate_generators(GeometryContext(o.n), space);
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
      if (!keep(g.masks[i])) continue;
      std::vector<BinVec> pts = flat_points(g.generators[i]);
      std::cout << words_of(pts);
      if (space == GeneratorSpace::quadric) std::cout << " family=" << g.family[i];
      std::cout << "\n";
    }
  } else if (o.what == "tetrads") {
    if (o.n != 4) throw UsageError("tetrads exist only for --n 4");
    std::vector<std::vector<BinVec>> rows;
    for (const auto& ov : cache.ovoids())
      for (const auto& part : partitions_of(ov)) {
        const auto t = tetrad_of_partition(ov, part);
        std::vector<BinVec> flat;
        for (const auto& l : t.lines) flat.insert(flat.end(), l.points().begin(), l.points().end());
        if (through && std::find(flat.begin(), flat.end(), *through) == flat.end()) continue;
        rows.push_back(flat);
      }
    if (o.dedup) {
      std::sort(rows.begin(), rows.end());
      rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    }
    for (const auto& r : rows) {
      for (int l = 0; l < 4; ++l) {
        if (l) std::cout << " | ";
        std::cout << words_of({r.begin() + 3 * l, r.begin() + 3 * l + 3});
      }
      std::cout << "\n";
    }
  } else if (o.what == "heptads") {
    if (o.n != 3) throw UsageError("Conwell heptads are enumerated for --n 3");
    for (const auto& h : conwell_heptads_q5(GeometryContext(3))) {
      if (through && std::find(h.begin(), h.end(), *through) == h.end()) continue;
      std::cout << words_of(h) << "\n";
    }
  } else {
    throw UsageError("enumerate target must be ovoids, generators, tetrads or heptads");
  }
  return 0;
}

int cmd_config(const Options& o) {
  if (std::find(kConfigNames.begin(), kConfigNames.end(), o.name) == kConfigNames.end()) {
    std::string names;
    for (const auto& n : kConfigNames) names += " " + n;
    throw UsageError("unknown configuration '" + o.name + "'; valid:" + names);
  }
  const Ovoid ov = parse_ovoid(o.ovoid);
  const auto d = figure_defaults(ov);
  const auto partition = o.partition.empty() ? d.partition : parse_partition(o.partition);
  const auto subset = o.subset.empty() ? std::vector<BinVec>{} : parse_points(o.subset);
  const auto point = o.point.empty() ? std::optional<BinVec>{} : std::optional<BinVec>(parse_point(o.point));
  const auto name = o.name;

  auto subset_or = [&](const std::vector<BinVec>& fallback, std::size_t size) {
    if (subset.empty()) return fallback;
    if (subset.size() != size) throw UsageError("--subset needs " + std::to_string(size) + " points for " + name);
    return subset;
  };

  auto build = [&]() -> ConfigReport {
    if (name == "fig1") return fig_secants(ov);
    if (name == "fig2") return fig_conic_partition(ov, partition);
    if (name == "fig3") {
      const auto s = subset_or({d.conic.begin(), d.conic.end()}, 3);
      return fig_two_ovoids_conic(ov, {s[0], s[1], s[2]});
    }
    if (name == "fig4") return fig_six_ovoids(ov, partition);
    if (name == "fig5") {
      const auto family = six_ovoid_family(ov, partition);
      auto [sym, skew] = default_probes(family);
      for (const auto& t : split_list(o.probe)) {
        const auto p = parse_point(t);
        (GeometryContext(4).quadratic(p) ? skew : sym) = p;
      }
      return fig_commutation(ov, partition, sym, skew);
    }
    if (name == "fig6") return fig_two_ovoids_point(ov, point.value_or(d.split_point), subset_or(d.split_a, 4));
    if (name == "fig7") return fig_pentad(ov, subset_or(d.pentad, 5));
    if (name == "fig8") return fig_sextet(ov, subset_or(d.sextet, 6));
    if (name == "fig9")
      return fig_nuclei_fan(ov, point.value_or(d.fan_point), o.nucleus.empty() ? d.fan_nucleus : parse_point(o.nucleus));
    if (name == "fig10" || name == "heptad-analogue" || name == "fig11") {
      const auto s = subset_or({d.heptad_first, d.heptad_second}, 2);
      return name == "fig11" ? fig_triple_nuclei(ov, s[0], s[1]) : heptad_analogue(ov, s[0], s[1]);
    }
    if (name == "heptad-family") return heptad_family(ov, subset.empty() ? d.quadrangle : subset);
    GeometryCache cache(o.jobs);
    return sixty_three_split(cache.ovoids(), ov, point.value_or(d.split_point));
  };
  const auto report = build();

  if (o.format == "json") {
    std::cout << report.to_json() << "\n";
  } else if (o.format == "dot") {
    std::cout << report.to_dot(o.style == "subdivided" ? DotLineStyle::subdivided : DotLineStyle::clique);
  } else {
    std::cout << report.name() << ": " << report.points().size() << " points (" << report.count_class(ElementClass::symmetric)
              << " symmetric, " << report.count_class(ElementClass::skew) << " skew), " << report.lines().size()
              << " lines\n";
    for (const auto& p : report.points()) {
      std::string roles;
      for (const auto& r : p.roles) roles += (roles.empty() ? "" : ",") + r;
      std::cout << "  " << p.word.str() << " " << p.coords.str() << " " << to_string(p.cls) << " " << roles << "\n";
    }
    for (const auto& l : report.lines())
      std::cout << "  line " << report.points()[l[0]].word.str() << " " << report.points()[l[1]].word.str() << " "
                << report.points()[l[2]].word.str() << "\n";
    for (const auto& [k, v] : report.annotations()) std::cout << "  " << k << ": " << v << "\n";
  }
  const auto problems = report.validate();
  for (const auto& p : problems) std::cerr << "invalid: " << p << "\n";
  return problems.empty() ? 0 : kExitFail;
}

int cmd_map(const Options& o) {
  const auto p = parse_point(o.token);
  const GeometryContext ctx(p.dim() / 2);
  std::cout << "word:   " << point_to_word(p).str() << "\n";
  std::cout << "coords: " << p.str() << "\n";
  std::cout << "class:  " << to_string(ctx.classify(p)) << "\n";
  std::cout << "edge:   " << edge_coords(p) << "\n";
  return 0;
}

int cmd_oracle(const Options& o) {
  const auto r = check_oracle_agreement(o.n, o.exhaustive_oracle, 100000);
  std::cout << "N=" << o.n << " words=" << r.words_checked << " pairs=" << r.pairs_checked
            << " products=" << r.products_checked << " mismatches=" << r.mismatches << "\n";
  return r.mismatches == 0 ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite geometry of the real N-qubit Pauli group"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "number of qubits")->check(CLI::IsMember({2, 3, 4}));
    sub->add_option("--jobs", o.jobs, "worker threads (0 = all cores)");
  };
  auto add_ovoid = [&](CLI::App* sub) {
    sub->add_option("--ovoid", o.ovoid, "9 comma-separated words or Ostar");
  };

  auto* verify = app.add_subcommand("verify", "run the count table");
  add_common(verify);
  add_ovoid(verify);
  verify->add_option("--level", o.level)->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--exhaustive-oracle", o.exhaustive_oracle, "check all ordered products");
  verify->add_flag("--no-timings", o.no_timings, "omit the ms column");

  auto* enumerate = app.add_subcommand("enumerate", "stream objects in canonical order");
  add_common(enumerate);
  enumerate->add_option("what", o.what)->required()->check(CLI::IsMember({"ovoids", "generators", "tetrads", "heptads"}));
  enumerate->add_option("--through-point", o.through_point);
  enumerate->add_option("--space", o.space)->check(CLI::IsMember({"quadric", "symplectic"}));
  enumerate->add_flag("--dedup", o.dedup, "tetrads: drop repeats");

  auto* config = app.add_subcommand("config", "extract a named configuration");
  config->add_option("name", o.name)->required();
  config->add_option("--jobs", o.jobs);
  add_ovoid(config);
  config->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "dot"}));
  config->add_option("--style", o.style, "dot line style")->check(CLI::IsMember({"clique", "subdivided"}));
  config->add_option("--point", o.point);
  config->add_option("--subset", o.subset, "comma-separated words");
  config->add_option("--partition", o.partition, "a,b,c|d,e,f|g,h,i");
  config->add_option("--nucleus", o.nucleus);
  config->add_option("--probe", o.probe, "symmetric and/or skew probe words");

  auto* map = app.add_subcommand("map", "convert between words and coordinates");
  map->add_option("token", o.token)->required();

  auto* oracle = app.add_subcommand("oracle-check", "compare the matrix oracle with the bit codec");
  add_common(oracle);
  oracle->add_flag("--exhaustive-oracle", o.exhaustive_oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(o);
    if (*enumerate) return cmd_enumerate(o);
    if (*config) return cmd_config(o);
    if (*map) return cmd_map(o);
    if (*oracle) return cmd_oracle(o);
  } catch (const IdentityNotAPoint& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
