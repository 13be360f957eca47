#include "commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rrk/algebra/atom.hpp"
#include "rrk/algebra/fme.hpp"
#include "rrk/algebra/oracle.hpp"
#include "rrk/algebra/parse.hpp"
#include "rrk/algebra/pipeline.hpp"
#include "rrk/dm/atoms.hpp"
#include "rrk/dm/conditions.hpp"
#include "rrk/dm/frontier.hpp"
#include "rrk/dm/io.hpp"
#include "rrk/gaussian/family.hpp"
#include "rrk/geometry/plot.hpp"
#include "rrk/regime/regime.hpp"

namespace rrk::cli {

using nlohmann::json;

void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write output file '" + path + "'");
    os << content;
    os.flush();
    if (!os) throw std::runtime_error("failed while writing '" + path + "'");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot move output into place at '" + path + "'");
  }
}

namespace {

json entries_json(const geom::BoundSet& b) {
  json arr = json::array();
  for (const auto& e : b.entries)
    arr.push_back({{"c1", e.c1}, {"c2", e.c2}, {"value", e.value}, {"source", e.source}});
  return arr;
}

json frontier_json(const geom::Frontier& f) {
  return {{"region", f.tag}, {"samples", f.size()}, {"r1_max", f.r1_max()}, {"r2_max", f.r2_max()}};
}

gauss::GRegion gaussian_region(const std::string& name) {
  auto r = gauss::parse_gaussian_region(name);
  if (!r) throw std::invalid_argument("unknown Gaussian region '" + name + "'");
  return *r;
}

gauss::FamilySpec family_spec(std::size_t alpha_points, const std::string& lambda, double sigma2) {
  gauss::FamilySpec s;
  if (alpha_points < 2) throw std::invalid_argument("--alpha-points must be >= 2");
  s.alpha_points = alpha_points;
  s.sigma2_tilde = sigma2;
  if (!(sigma2 > 0)) throw std::invalid_argument("--sigma2 must be > 0");
  if (lambda == "costa") {
    s.lambda_policy = gauss::LambdaPolicy::Costa;
  } else if (lambda == "zero") {
    s.lambda_policy = gauss::LambdaPolicy::Zero;
  } else {
    s.lambda_policy = gauss::LambdaPolicy::Fixed;
    s.lambda = gauss::parse_complex(lambda);
  }
  return s;
}

geom::R1Grid r1_grid(std::size_t samples) {
  if (samples < 2) throw std::invalid_argument("--r1-samples must be >= 2");
  geom::R1Grid g;
  g.samples = samples;
  return g;
}

// Frontiers for several regions on one shared R1 grid.
std::vector<geom::Frontier> shared_frontiers(const std::vector<gauss::GRegion>& regions,
                                             const gauss::ChannelGaussian& ch,
                                             const gauss::FamilySpec& spec, geom::R1Grid grid) {
  std::vector<geom::Frontier> fs;
  double upper = 0;
  for (auto r : regions) {
    fs.push_back(gauss::gaussian_frontier(r, ch, spec, grid));
    upper = std::max(upper, fs.back().r1_max());
  }
  if (upper > 0) {
    grid.upper = upper;
    for (std::size_t i = 0; i < regions.size(); ++i)
      fs[i] = gauss::gaussian_frontier(regions[i], ch, spec, grid);
  }
  return fs;
}

void emit_frontiers(const std::vector<geom::Frontier>& fs, const Outputs& io,
                    const std::string& title, std::vector<std::string>& written) {
  if (io.out) {
    std::ostringstream os;
    geom::write_frontiers_csv(os, fs);
    write_atomically(*io.out, os.str());
    written.push_back(*io.out);
  }
  if (io.svg) {
    write_atomically(*io.svg, geom::svg_frontiers(fs, title));
    written.push_back(*io.svg);
  }
}

std::pair<double, double> parse_range(const std::string& text) {
  auto c = text.find(':');
  if (c == std::string::npos) throw std::invalid_argument("range must look like LO:HI, got '" + text + "'");
  std::size_t used = 0;
  double lo, hi;
  try {
    lo = std::stod(text.substr(0, c), &used);
    if (used != c) throw std::invalid_argument("");
    const std::string rest = text.substr(c + 1);
    hi = std::stod(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed range '" + text + "'");
  }
  if (!(hi >= lo)) throw std::invalid_argument("empty range '" + text + "'");
  return {lo, hi};
}

}  // namespace

json cmd_bounds(const BoundsOptions& o) {
  const auto ch = gauss::parse_channel(o.channel);
  const auto spec = family_spec(2, o.lambda, o.sigma2);
  json regions = json::array();
  for (const auto& name : o.regions) {
    const auto r = gaussian_region(name);
    gauss::RegionParams p;
    if (r == gauss::GRegion::OutBcDms) {
      p = gauss::BcDmsParams{o.alpha1, o.alpha2, gauss::parse_complex(o.rho1), gauss::parse_complex(o.rho2)};
    } else if (r != gauss::GRegion::InTimeDiv) {
      gauss::SchemeParams s;
      s.alpha = o.alpha;
      s.sigma2_tilde = o.sigma2;
      if (r == gauss::GRegion::InBinning) s.lambda = gauss::binning_lambda(ch, o.alpha, spec);
      p = s;
    }
    regions.push_back({{"region", name}, {"entries", entries_json(gauss::eval_gaussian_region(r, ch, p))}});
  }
  const auto lab = regime::classify_channel(ch);
  const auto gaps = gauss::gap_terms(ch, o.alpha, o.sigma2);
  return {{"channel", gauss::format_channel(ch)},
          {"alpha", o.alpha},
          {"regions", regions},
          {"regime",
           {{"label", regime::label_name(lab.label)},
            {"vsi_slack", lab.vsi_slack},
            {"pdc_slack_a", lab.pdc_slack_a},
            {"pdc_slack_b", lab.pdc_slack_b}}},
          {"gap", {{"gap1", gaps.gap1}, {"gap2", gaps.gap2}}}};
}

json cmd_frontier(const FrontierOptions& o, std::vector<std::string>& written) {
  const auto ch = gauss::parse_channel(o.channel);
  auto spec = family_spec(o.alpha_points, o.lambda, o.sigma2);
  spec.bc_alpha_points = o.bc_alpha;
  spec.bc_modulus_points = o.bc_modulus;
  spec.bc_phase_points = o.bc_phase;
  std::vector<gauss::GRegion> regions;
  for (const auto& n : o.regions) regions.push_back(gaussian_region(n));
  auto fs = shared_frontiers(regions, ch, spec, r1_grid(o.r1_samples));
  if (o.envelope)
    for (std::size_t i = 0; i < fs.size(); ++i)
      if (!gauss::is_outer(regions[i])) fs[i] = geom::concave_envelope(fs[i]);
  for (const auto& f : fs) geom::check_frontier(f);
  emit_frontiers(fs, o.io, gauss::format_channel(ch), written);
  json arr = json::array();
  for (const auto& f : fs) arr.push_back(frontier_json(f));
  return {{"channel", gauss::format_channel(ch)}, {"frontiers", arr}};
}

json cmd_regimes(const RegimeOptions& o, std::vector<std::string>& written) {
  if (o.res < 1) throw std::invalid_argument("--res must be >= 1");
  auto [alo, ahi] = parse_range(o.a_range);
  auto [blo, bhi] = parse_range(o.b_range);
  const auto g = regime::regime_grid(o.P1, o.P2, {alo, ahi}, {blo, bhi}, o.res);
  std::map<std::string, std::size_t> counts{{"VSI", 0}, {"PDC", 0}, {"BOTH", 0}, {"UNKNOWN", 0}};
  for (const auto& c : g.cells) ++counts[regime::label_name(c.label)];
  if (o.io.out) {
    std::ostringstream os;
    regime::write_regime_csv(os, g);
    write_atomically(*o.io.out, os.str());
    written.push_back(*o.io.out);
  }
  if (o.io.svg) {
    char title[96];
    std::snprintf(title, sizeof title, "Regimes, P1=%g, P2=%g", o.P1, o.P2);
    write_atomically(*o.io.svg, regime::regime_svg(g, title));
    written.push_back(*o.io.svg);
  }
  return {{"P1", o.P1}, {"P2", o.P2}, {"rows", g.b.size()}, {"cols", g.a.size()}, {"counts", counts}};
}

json cmd_gap(const GapOptions& o, std::vector<std::string>& written) {
  const auto ch = gauss::parse_channel(o.channel);
  const auto spec = family_spec(o.alpha_points, o.lambda, o.sigma2);
  const auto grid = r1_grid(o.r1_samples);
  const auto outer_region = gaussian_region(o.outer);
  std::vector<gauss::GRegion> inner_regions;
  for (const auto& n : o.inner) inner_regions.push_back(gaussian_region(n));
  if (inner_regions.empty()) throw std::invalid_argument("--inner needs at least one region");

  const geom::Frontier outer = gauss::gaussian_frontier(outer_region, ch, spec, grid);
  auto parts = shared_frontiers(inner_regions, ch, spec, grid);
  std::string tag;
  for (const auto& n : o.inner) tag += (tag.empty() ? "" : "+") + n;
  geom::Frontier inner = parts.size() == 1 ? parts.front() : geom::frontier_union(parts, tag);
  inner.tag = tag;
  if (o.envelope) inner = geom::concave_envelope(inner);
  geom::check_frontier(outer);
  geom::check_frontier(inner);

  const auto gap = geom::gap_between(outer, inner);
  const auto cont = geom::region_contains(outer, inner, 1e-9);
  emit_frontiers({outer, inner}, o.io, gauss::format_channel(ch), written);
  return {{"channel", gauss::format_channel(ch)},
          {"outer", frontier_json(outer)},
          {"inner", frontier_json(inner)},
          {"additive", gap.additive},
          {"additive_witness", {gap.additive_witness.first, gap.additive_witness.second}},
          {"multiplicative", gap.multiplicative},
          {"multiplicative_witness", {gap.multiplicative_witness.first, gap.multiplicative_witness.second}},
          {"inner_contained", cont.contained},
          {"max_violation", cont.max_violation}};
}

json cmd_fme(const FmeOptions& o, std::vector<std::string>& written) {
  using namespace algebra;
  const Document doc = parse_document(read_text_file(o.input));
  ProjectionPlan plan;
  plan.set_zero = o.set_zero;
  plan.eliminate = o.eliminate;
  plan.definitions = doc.definitions;
  for (const auto& s : o.subst) plan.definitions.push_back(parse_definition(s));
  plan.relations = doc.relations;
  for (const auto& path : o.relations) {
    auto rels = parse_relations(read_text_file(path));
    plan.relations.insert(plan.relations.end(), rels.begin(), rels.end());
  }
  plan.reduce = !o.no_reduce;

  const ProjectionResult res = run_projection(doc.system, plan);
  json steps = json::array();
  std::size_t removed = 0;
  for (const auto& s : res.steps) {
    steps.push_back({{"action", s.action}, {"inequalities", s.system.inequalities.size()},
                     {"pruned", s.removed.size()}});
    removed += s.removed.size();
  }
  const std::string text = print_system(res.system);
  json result{{"input", o.input},
              {"steps", steps},
              {"inequalities", res.system.inequalities.size()},
              {"pruned", removed},
              {"system", text}};

  bool info_atoms = true;
  for (const auto& a : doc.system.atoms.list()) info_atoms = info_atoms && looks_like_info_atom(a.name);
  if (o.certificate_samples > 0 && removed > 0) {
    if (info_atoms) {
      const auto chk = dm::verify_certificates(res, o.certificate_samples, o.seed);
      result["certificates"] = {{"checked", chk.certificates},
                                {"assignments", chk.assignments},
                                {"violations", chk.violations},
                                {"worst_slack", chk.worst_slack}};
      if (!chk.ok()) throw std::logic_error("a pruning certificate failed its numeric check");
    } else {
      result["certificates"] = {{"skipped", "atoms are not information expressions"}};
    }
  }

  if (o.oracle_samples > 0) {
    if (!info_atoms) throw std::invalid_argument("--oracle needs information-expression atoms");
    InequalitySystem original = doc.system;
    for (const auto& v : plan.set_zero) original = set_zero(original, v);
    for (const auto& d : plan.definitions) original = substitute(original, d);
    std::vector<std::string> names;
    for (const auto& a : original.atoms.list()) names.push_back(a.name);
    // Draw distributions until the region is nonempty at the origin, so the
    // check is not vacuous.
    std::mt19937_64 rng(o.seed);
    std::map<std::string, Rational> values;
    Point origin;
    for (const auto& v : res.system.variables()) origin[v] = 0;
    int draws = 0;
    for (; draws < 256; ++draws) {
      values.clear();
      for (const auto& [n, v] : dm::random_atom_values(names, rng)) values[n] = Rational(v);
      if (in_projection(original, origin, values)) break;
    }
    const auto rep = numeric_projection_oracle(original, res.system, values, o.oracle_samples, o.seed);
    result["oracle"] = {{"samples", rep.samples}, {"inside", rep.inside}, {"disagreements", rep.disagreements},
                        {"distribution_draws", draws + 1}};
    if (!rep.sound()) throw std::logic_error("projection disagrees with the numeric oracle");
  }

  if (o.io.out) {
    write_atomically(*o.io.out, text);
    written.push_back(*o.io.out);
  }
  if (o.expect) {
    const InequalitySystem expected = parse_system(read_text_file(*o.expect));
    const MatchReport m = systems_match(res.system, expected, plan.relations);
    json a = json::array(), b = json::array();
    for (const auto& r : m.missing_from_b) a.push_back(format_inequality(r));
    for (const auto& r : m.missing_from_a) b.push_back(format_inequality(r));
    result["expect"] = *o.expect;
    result["match"] = m.match();
    result["missing_from_expected"] = a;
    result["missing_from_result"] = b;
    if (!m.match()) throw CheckFailed{result};
  }
  return result;
}

json cmd_dm(const DmOptions& o, std::vector<std::string>& written) {
  const dm::DmChannel ch = dm::channel_from_json(algebra::read_text_file(o.channel));
  std::optional<dm::JointDistribution> dist;
  if (o.dist) dist = dm::distribution_from_json(algebra::read_text_file(*o.dist));
  std::vector<dm::DmRegion> regions;
  for (const auto& n : o.regions) {
    auto r = dm::parse_dm_region(n);
    if (!r) throw std::invalid_argument("unknown DM region '" + n + "'");
    regions.push_back(*r);
  }
  json result{{"channel", o.channel}, {"semideterministic", ch.is_semideterministic()}};

  if (dist) {
    json arr = json::array();
    for (auto r : regions)
      arr.push_back({{"region", dm::region_name(r)}, {"entries", entries_json(dm::eval_dm_region(r, ch, *dist))}});
    result["bounds"] = arr;
  }
  json conds = json::array();
  for (const auto& n : o.conditions) {
    auto k = dm::parse_condition(n);
    if (!k) throw std::invalid_argument("unknown condition '" + n + "'");
    const auto rep = dm::check_conditions_dm(*k, ch, dist);
    json c{{"condition", n}, {"holds", rep.holds}, {"slack", rep.slack}, {"expression", rep.expression}};
    if (!rep.note.empty()) c["note"] = rep.note;
    conds.push_back(c);
  }
  if (!o.conditions.empty()) result["conditions"] = conds;

  if (o.frontier) {
    dm::DistributionGrid grid;
    grid.step = o.step;
    grid.budget = o.budget;
    if (o.aux_size > 0)
      for (auto role : {dm::Role::U, dm::Role::V, dm::Role::U1, dm::Role::U2, dm::Role::U1c,
                        dm::Role::U2c, dm::Role::U2pb})
        grid.sizes[role] = o.aux_size;
    std::vector<geom::Frontier> fs;
    for (auto r : regions) fs.push_back(dm::dm_frontier(r, ch, grid, r1_grid(o.r1_samples)));
    for (const auto& f : fs) geom::check_frontier(f);
    emit_frontiers(fs, o.io, "DM frontiers", written);
    json arr = json::array();
    for (const auto& f : fs) arr.push_back(frontier_json(f));
    result["frontiers"] = arr;
  }
  return result;
}

}  // namespace rrk::cli
