#include "mobius/workbench.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "mobius/chains.hpp"
#include "mobius/covering.hpp"
#include "mobius/distortion.hpp"
#include "mobius/document.hpp"
#include "mobius/error.hpp"
#include "mobius/generators.hpp"
#include "mobius/numeric.hpp"
#include "mobius/report.hpp"
#include "mobius/transforms.hpp"
#include "mobius/verify.hpp"

namespace mobius {

using json = nlohmann::ordered_json;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("MOBIUS_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, std::string("MOBIUS_SEED is not an unsigned integer: ") + env);
    }
  }
  return 1;
}

namespace {

struct Loaded {
  std::string text;
  SpaceDocument doc;
};

Loaded load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  Loaded l{buffer.str(), {}};
  l.doc = parse_document(l.text);
  return l;
}

PointId require_label(const SpaceDocument& doc, const std::string& label) {
  for (std::size_t i = 0; i < doc.points.size(); ++i) {
    if (doc.points[i] == label) return PointId{i};
  }
  throw Error(ErrorKind::Parse, "unknown point label '" + label + "'");
}

json labels_of(const std::vector<std::string>& labels, const std::vector<PointId>& ids) {
  json j = json::array();
  for (auto id : ids) j.push_back(labels[id.index]);
  return j;
}

json matrix_json(const DistanceMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(json_number(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json chain_json(const std::vector<std::string>& labels, const Chain& chain) {
  json j;
  j["points"] = labels_of(labels, chain.points);
  j["theta"] = chain.theta;
  j["endpoints_distance"] = chain.endpoints_distance;
  j["max_link"] = *std::max_element(chain.links.begin(), chain.links.end());
  return j;
}

// Validates the document as the space it declares.
void check_space(const SpaceDocument& doc) {
  if (doc.kind == SpaceKind::Metric) {
    to_metric_space(doc);
  } else {
    to_quasi_space(doc);
  }
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::string report_path;
};

int emit(const Context& ctx, RunReport& report, std::chrono::steady_clock::time_point start, int code) {
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const std::string text = report.to_json().dump(2) + "\n";
  if (ctx.report_path.empty()) {
    ctx.out << text;
  } else {
    std::ofstream file(ctx.report_path);
    if (!file) throw Error(ErrorKind::Parameter, "cannot write '" + ctx.report_path + "'");
    file << text;
  }
  return code;
}

int cmd_validate(const Context& ctx, const std::string& input) {
  const auto start = std::chrono::steady_clock::now();
  const Loaded l = load(input);
  RunReport report;
  report.command = "validate";
  report.inputs_digest = sha256_hex(l.text);
  report.parameters["input"] = input;
  ValidationReport v;
  if (l.doc.kind == SpaceKind::Metric) {
    std::optional<PointId> remote;
    if (l.doc.remote) remote = require_label(l.doc, *l.doc.remote);
    v = validate_metric(l.doc.matrix, remote);
  } else {
    std::vector<PointId> remote_set;
    for (const auto& r : l.doc.remote_set) remote_set.push_back(require_label(l.doc, r));
    v = validate_quasi_metric(l.doc.matrix, *l.doc.K, remote_set);
  }
  report.results["kind"] = l.doc.kind == SpaceKind::Metric ? "metric" : "quasi";
  report.results["points"] = l.doc.points.size();
  report.results["ok"] = v.ok();
  report.results["violation_count"] = v.violations.size();
  json list = json::array();
  for (std::size_t i = 0; i < v.violations.size() && i < 100; ++i) {
    const auto& violation = v.violations[i];
    list.push_back(json{{"kind", to_string(violation.kind)},
                        {"witness", labels_of(l.doc.points, violation.witness)},
                        {"lhs", json_number(violation.lhs)},
                        {"rhs", json_number(violation.rhs)}});
  }
  report.witnesses = list;
  if (!v.ok()) ctx.err << v.summary() << "\n";
  return emit(ctx, report, start, v.ok() ? 0 : 1);
}

struct InvertArgs {
  std::string input, point, output;
  bool sphericalize = false, complete = false;
};

int cmd_invert(const Context& ctx, const InvertArgs& args) {
  const auto start = std::chrono::steady_clock::now();
  const Loaded l = load(args.input);
  ExtendedMetricSpace space = to_metric_space(l.doc);
  if (args.complete) space = complete_with_remote(space);
  std::string label = args.point;
  if (label.empty()) {
    if (!l.doc.basepoint) throw Error(ErrorKind::Parameter, "--point is required when the document has no basepoint");
    label = *l.doc.basepoint;
  }
  const auto p = space.find(label);
  if (!p) throw Error(ErrorKind::Parse, "unknown point label '" + label + "'");

  const KernelMatrix kernel = args.sphericalize ? sphericalization_kernel(space, *p) : inversion_kernel(space, *p);
  const ExtendedMetricSpace result = args.sphericalize ? sphericalized_metric(space, *p) : chain_metric(space, *p);

  double min_ratio = kInf, max_ratio = 0.0, diameter = 0.0;
  bool lower_ok = true, upper_ok = true;
  for (std::size_t a = 0; a < kernel.size(); ++a) {
    for (std::size_t b = a + 1; b < kernel.size(); ++b) {
      const double k = kernel(a, b), c = result.matrix()(a, b);
      min_ratio = std::min(min_ratio, c / k);
      max_ratio = std::max(max_ratio, c / k);
      diameter = std::max(diameter, c);
      lower_ok = lower_ok && approx_le(0.25 * k, c);
      upper_ok = upper_ok && approx_le(c, k);
    }
  }
  const std::string suffix = args.sphericalize ? ".sphericalized" : ".inverted";
  const SpaceDocument out_doc = make_document((l.doc.name.empty() ? "space" : l.doc.name) + suffix, result);

  RunReport report;
  report.command = "invert";
  report.inputs_digest = sha256_hex(l.text);
  report.parameters["input"] = args.input;
  report.parameters["point"] = label;
  report.parameters["sphericalize"] = args.sphericalize;
  report.parameters["complete"] = args.complete;
  report.results["transform"] = args.sphericalize ? "sphericalization" : "inversion";
  report.results["points"] = kernel.labels();
  report.results["kernel"] = matrix_json(kernel.matrix());
  report.results["sandwich"] = json{{"lower_holds", lower_ok},
                                    {"upper_holds", upper_ok},
                                    {"min_chain_over_kernel", json_number(min_ratio)},
                                    {"max_chain_over_kernel", max_ratio}};
  report.results["diameter"] = diameter;
  report.results["document"] = format_document(out_doc);
  if (!args.output.empty()) write_document(args.output, out_doc);
  return emit(ctx, report, start, 0);
}

int cmd_doubling(const Context& ctx, const std::string& input, const std::string& mode_name, std::size_t cap) {
  const auto start = std::chrono::steady_clock::now();
  const Loaded l = load(input);
  check_space(l.doc);
  const CoverMode mode = mode_name == "greedy" ? CoverMode::Greedy : CoverMode::Exact;
  CoverLimits limits;
  limits.max_points = cap;
  const DoublingReport d = doubling_constant(l.doc.matrix, mode, limits);
  RunReport report;
  report.command = "doubling";
  report.inputs_digest = sha256_hex(l.text);
  report.parameters["input"] = input;
  report.parameters["mode"] = to_string(mode);
  report.parameters["exact_cap"] = cap;
  report.results["D"] = d.constant;
  report.results["method"] = to_string(d.method);
  report.results["witness"] = json{{"center", l.doc.points[d.witness_center.index]}, {"radius", d.witness_radius}};
  report.results["entries"] = d.table.size();
  if (d.table.size() <= 2000) {
    json table = json::array();
    for (const auto& e : d.table) table.push_back(json{l.doc.points[e.center.index], e.radius, e.cover_size});
    report.results["table"] = table;
  }
  return emit(ctx, report, start, 0);
}

int cmd_chains(const Context& ctx, const std::string& input, std::optional<double> theta,
               const std::vector<std::string>& pair) {
  const auto start = std::chrono::steady_clock::now();
  const Loaded l = load(input);
  check_space(l.doc);
  RunReport report;
  report.command = "chains";
  report.inputs_digest = sha256_hex(l.text);
  report.parameters["input"] = input;
  if (!theta) {
    if (!pair.empty()) throw Error(ErrorKind::Parameter, "--pair needs --theta");
    const DisconnectednessReport r = critical_theta(l.doc.matrix);
    report.results["theta_star"] = r.theta_star;
    report.results["uniformly_disconnected"] = r.uniformly_disconnected();
    if (r.uniformly_disconnected()) report.results["message"] = "uniformly disconnected for all θ<1";
    if (r.witness_pair) {
      report.results["witness_pair"] = json{l.doc.points[r.witness_pair->first.index],
                                            l.doc.points[r.witness_pair->second.index]};
    }
    if (r.witness_chain) report.witnesses.push_back(chain_json(l.doc.points, *r.witness_chain));
    return emit(ctx, report, start, 0);
  }
  report.parameters["theta"] = *theta;
  std::optional<Chain> chain;
  if (!pair.empty()) {
    const PointId a = require_label(l.doc, pair.at(0)), b = require_label(l.doc, pair.at(1));
    report.parameters["pair"] = pair;
    chain = find_theta_chain(l.doc.matrix, *theta, a, b);
  } else {
    chain = find_any_theta_chain(l.doc.matrix, *theta);
  }
  report.results["found"] = chain.has_value();
  if (chain) {
    report.results["chain"] = chain_json(l.doc.points, *chain);
    report.witnesses.push_back(chain_json(l.doc.points, *chain));
  } else {
    report.results["chain"] = nullptr;
  }
  return emit(ctx, report, start, 0);
}

int cmd_verify(const Context& ctx, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report = run_verification(options);
  const bool passed = report.results["passed"].get<bool>();
  if (!passed) {
    for (const auto& c : report.results["criteria"]) {
      if (!c["passed"].get<bool>()) ctx.err << "criterion " << c["id"] << " failed: " << c["name"].get<std::string>() << "\n";
    }
  }
  return emit(ctx, report, start, passed ? 0 : 1);
}

struct GenerateArgs {
  std::string model, output, name, coords, kind = "euclidean";
  std::optional<std::size_t> k, depth, n;
  std::optional<double> a, u_lo, u_hi, K;
  double jitter = 0.25;
  std::optional<std::uint64_t> seed;
};

template <typename T>
T need(const std::optional<T>& value, const char* flag, const std::string& model) {
  if (!value) throw Error(ErrorKind::Parameter, std::string("--model ") + model + " requires " + flag);
  return *value;
}

std::vector<std::vector<double>> parse_coords(const std::string& text) {
  std::vector<std::vector<double>> coords;
  std::stringstream points(text);
  for (std::string point; std::getline(points, point, ';');) {
    std::vector<double> c;
    std::stringstream parts(point);
    for (std::string part; std::getline(parts, part, ',');) {
      std::istringstream token(part);
      std::string value;
      token >> value;
      c.push_back(parse_number(value));
    }
    coords.push_back(std::move(c));
  }
  return coords;
}

int cmd_generate(const Context& ctx, const GenerateArgs& g) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.command = "generate";
  report.parameters["model"] = g.model;
  SpaceDocument doc;
  if (g.model == "cantor") {
    const CantorSpec spec{need(g.k, "--k", g.model), need(g.depth, "--depth", g.model), need(g.a, "--a", g.model), 1024};
    doc = make_document(g.name.empty() ? "cantor" : g.name, cantor_space(spec));
    report.parameters["k"] = spec.k;
    report.parameters["depth"] = spec.depth;
    report.parameters["a"] = spec.a;
  } else if (g.model == "euclidean") {
    if (g.coords.empty()) throw Error(ErrorKind::Parameter, "--model euclidean requires --coords");
    doc = make_document(g.name.empty() ? "euclidean" : g.name, euclidean_space(parse_coords(g.coords)));
    report.parameters["coords"] = g.coords;
  } else if (g.model == "ray") {
    const auto ray = inversion_ray(need(g.n, "--n", g.model), need(g.u_lo, "--ulo", g.model), need(g.u_hi, "--uhi", g.model));
    doc = make_document(g.name.empty() ? "ray" : g.name, ray.space, ray.p);
    report.parameters["n"] = *g.n;
    report.parameters["ulo"] = *g.u_lo;
    report.parameters["uhi"] = *g.u_hi;
  } else if (g.model == "random") {
    const std::uint64_t seed = g.seed ? *g.seed : default_seed();
    const std::size_t n = need(g.n, "--n", g.model);
    report.seed = seed;
    report.parameters["n"] = n;
    report.parameters["kind"] = g.kind;
    const std::string name = g.name.empty() ? "random-" + g.kind : g.name;
    if (g.kind == "quasi") {
      doc = make_document(name, random_quasi_space(seed, n, need(g.K, "--K", "random --kind quasi")));
      report.parameters["K"] = *g.K;
    } else {
      const RandomModel model = g.kind == "ultrametric"      ? RandomModel::Ultrametric
                                : g.kind == "perturbed-grid" ? RandomModel::PerturbedGrid
                                : g.kind == "graph"          ? RandomModel::Graph
                                                             : RandomModel::Euclidean;
      doc = make_document(name, random_metric_space(seed, n, model, g.jitter));
      report.parameters["jitter"] = g.jitter;
    }
  } else {
    throw Error(ErrorKind::Parameter, "unknown model '" + g.model + "'");
  }
  const std::string text = format_document(doc);
  if (g.output.empty()) {
    ctx.out << text;
    return 0;
  }
  write_document(g.output, doc);
  report.inputs_digest = sha256_hex(report.parameters.dump());
  report.results["output"] = g.output;
  report.results["points"] = doc.points.size();
  report.results["document_digest"] = sha256_hex(text);
  return emit(ctx, report, start, 0);
}

// Map file: one "source-label target-label" pair per line. Without a map file,
// points are matched by label. Source points left unmapped are dropped, so a
// space can be compared with its inversion, which lacks the basepoint.
std::vector<std::pair<std::size_t, std::size_t>> read_map(const std::string& text, const SpaceDocument& src,
                                                          const SpaceDocument& tgt) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (text.empty()) {
    for (std::size_t t = 0; t < tgt.points.size(); ++t) {
      const auto it = std::find(src.points.begin(), src.points.end(), tgt.points[t]);
      if (it == src.points.end()) throw Error(ErrorKind::Contract, "target point '" + tgt.points[t] + "' has no source preimage");
      pairs.emplace_back(static_cast<std::size_t>(it - src.points.begin()), t);
    }
    return pairs;
  }
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b) || (fields >> extra)) throw Error(ErrorKind::Parse, "map lines hold two labels: '" + line + "'");
    pairs.emplace_back(require_label(src, a).index, require_label(tgt, b).index);
  }
  return pairs;
}

json envelope_json(const MonotoneEnvelope& env) {
  json points = json::array();
  const auto& bp = env.breakpoints();
  for (std::size_t i = 0; i < bp.size(); ++i) {
    if (i == 0 || i + 1 == bp.size() || bp[i].second > bp[i - 1].second) {
      points.push_back(json{json_number(bp[i].first), json_number(bp[i].second)});
    }
  }
  return points;
}

json scatter_summary(const std::vector<std::pair<double, double>>& pairs, std::size_t skipped, bool sampled) {
  json j;
  j["count"] = pairs.size();
  j["skipped"] = skipped;
  j["sampled"] = sampled;
  if (pairs.empty()) return j;
  double lo = kInf, hi = 0.0;
  for (const auto& [t, u] : pairs) {
    if (t > 0.0 && std::isfinite(t) && std::isfinite(u)) {
      lo = std::min(lo, u / t);
      hi = std::max(hi, u / t);
    }
  }
  j["min_ratio"] = json_number(lo);
  j["max_ratio"] = json_number(hi);
  j["envelope"] = envelope_json(MonotoneEnvelope::of(pairs));
  return j;
}

int cmd_distortion(const Context& ctx, const std::string& source, const std::string& target,
                   const std::string& map_path, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  const Loaded s = load(source), t = load(target);
  check_space(s.doc);
  check_space(t.doc);
  std::string map_text;
  if (!map_path.empty()) {
    std::ifstream in(map_path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open '" + map_path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    map_text = buffer.str();
    if (map_text.find_first_not_of(" \t\r\n") == std::string::npos) throw Error(ErrorKind::Contract, "empty map file");
  }
  const auto pairs = read_map(map_text, s.doc, t.doc);
  if (pairs.size() != t.doc.points.size()) throw Error(ErrorKind::Contract, "map does not cover the target");
  std::vector<std::size_t> keep;
  std::vector<PointId> f;
  for (const auto& [a, b] : pairs) {
    if (std::find(keep.begin(), keep.end(), a) != keep.end()) throw Error(ErrorKind::Contract, "map is not injective");
    keep.push_back(a);
    f.push_back(PointId{b});
  }
  const DistanceMatrix src = s.doc.matrix.induced(keep);
  const SamplingPolicy policy{12, 100000, seed};
  const DistortionScatter forward = distortion_scatter(src, t.doc.matrix, f, policy);
  const auto inverse_map = invert_mapping(f);
  const DistortionScatter backward = distortion_scatter(t.doc.matrix, src, inverse_map, policy);
  const TripleScatter triples = quasisymmetry_scatter(src, t.doc.matrix, f, policy);

  RunReport report;
  report.command = "distortion";
  report.seed = seed;
  report.inputs_digest = sha256_hex(s.text + '\0' + t.text + '\0' + map_text);
  report.parameters["source"] = source;
  report.parameters["target"] = target;
  report.parameters["map"] = map_path.empty() ? json("by-label") : json(map_path);
  report.results["points"] = keep.size();
  report.results["dropped_source_points"] = s.doc.points.size() - keep.size();
  report.results["cross_ratio"] = scatter_summary(forward.pairs, forward.skipped, forward.sampled);
  report.results["cross_ratio_inverse"] = scatter_summary(backward.pairs, backward.skipped, backward.sampled);
  report.results["three_point"] = scatter_summary(triples.pairs, triples.skipped, triples.sampled);
  return emit(ctx, report, start, 0);
}

}  // namespace

int run_workbench(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite metric space workbench: inversions, doubling constants, θ-chains and cross-ratios", "mobius"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  std::string report_path;

  const auto with_report = [&](CLI::App* sub) { sub->add_option("--report", report_path, "write the JSON report here"); };

  std::string input;
  auto* validate = app.add_subcommand("validate", "check the axioms of a space document");
  validate->add_option("--input", input, "space document")->required();
  with_report(validate);

  InvertArgs inv;
  auto* invert = app.add_subcommand("invert", "metric inversion d_p or sphericalization");
  invert->add_option("--input", inv.input, "space document")->required();
  invert->add_option("--point", inv.point, "basepoint label (default: the document's basepoint)");
  invert->add_flag("--sphericalize", inv.sphericalize, "sphericalize instead of inverting");
  invert->add_flag("--complete", inv.complete, "append an infinitely remote point first");
  invert->add_option("--output", inv.output, "write the transformed space document here");
  with_report(invert);

  std::string mode = "exact";
  std::size_t doubling_cap = CoverLimits{}.max_points;
  auto* doubling = app.add_subcommand("doubling", "doubling constant by minimum half-radius covers");
  doubling->add_option("--input", input, "space document")->required();
  doubling->add_option("--mode", mode, "exact or greedy")->check(CLI::IsMember({"exact", "greedy"}));
  doubling->add_option("--exact-cap", doubling_cap, "largest point count for exact covers");
  with_report(doubling);

  std::optional<double> theta;
  std::vector<std::string> pair;
  auto* chains = app.add_subcommand("chains", "θ-chains and the critical constant θ*");
  chains->add_option("--input", input, "space document")->required();
  chains->add_option("--theta", theta, "chain constant in (0,1)");
  chains->add_option("--pair", pair, "endpoint labels")->expected(2);
  with_report(chains);

  VerifyOptions verify_options;
  std::string suite = "default";
  std::optional<std::uint64_t> verify_seed;
  auto* verify = app.add_subcommand("verify-theorems", "certificate sweep over generated instances");
  verify->add_option("--suite", suite, "default or extended")->check(CLI::IsMember({"default", "extended"}));
  verify->add_option("--seed", verify_seed, "seed (default $MOBIUS_SEED or 1)");
  verify->add_option("--exact-cap", verify_options.exact_cap, "largest point count for exact doubling certificates");
  verify->add_flag("--inject-fault", verify_options.inject_fault, "corrupt the doubling bound (test hook)");
  with_report(verify);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "write a generated space document");
  generate->add_option("--model", gen.model, "cantor, euclidean, ray or random")
      ->required()
      ->check(CLI::IsMember({"cantor", "euclidean", "ray", "random"}));
  generate->add_option("--k", gen.k, "cantor alphabet size");
  generate->add_option("--depth", gen.depth, "cantor word length");
  generate->add_option("--a", gen.a, "cantor scale in (0,1)");
  generate->add_option("--coords", gen.coords, "euclidean points as 'x,y;x,y;...'");
  generate->add_option("--n", gen.n, "point count (ray, random)");
  generate->add_option("--ulo", gen.u_lo, "ray: smallest u");
  generate->add_option("--uhi", gen.u_hi, "ray: largest u");
  generate->add_option("--kind", gen.kind, "random: ultrametric, perturbed-grid, euclidean, graph or quasi")
      ->check(CLI::IsMember({"ultrametric", "perturbed-grid", "euclidean", "graph", "quasi"}));
  generate->add_option("--K", gen.K, "random quasi: constant K > 1");
  generate->add_option("--jitter", gen.jitter, "random perturbed-grid: jitter in [0, 0.5)");
  generate->add_option("--seed", gen.seed, "seed (default $MOBIUS_SEED or 1)");
  generate->add_option("--name", gen.name, "document name");
  generate->add_option("--output", gen.output, "output file (default: print the document)");
  with_report(generate);

  std::string source, target, map_path;
  std::optional<std::uint64_t> distortion_seed;
  auto* distortion = app.add_subcommand("distortion", "cross-ratio and three-point distortion of a bijection");
  distortion->add_option("--source", source, "source space document")->required();
  distortion->add_option("--target", target, "target space document")->required();
  distortion->add_option("--map", map_path, "lines 'source-label target-label' (default: match labels)");
  distortion->add_option("--seed", distortion_seed, "sampling seed (default $MOBIUS_SEED or 1)");
  with_report(distortion);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Context ctx{out, err, report_path};
    if (*validate) return cmd_validate(ctx, input);
    if (*invert) return cmd_invert(ctx, inv);
    if (*doubling) return cmd_doubling(ctx, input, mode, doubling_cap);
    if (*chains) return cmd_chains(ctx, input, theta, pair);
    if (*verify) {
      verify_options.suite = suite == "extended" ? Suite::Extended : Suite::Default;
      verify_options.seed = verify_seed ? *verify_seed : default_seed();
      return cmd_verify(ctx, verify_options);
    }
    if (*generate) return cmd_generate(ctx, gen);
    if (*distortion) return cmd_distortion(ctx, source, target, map_path, distortion_seed ? *distortion_seed : default_seed());
  } catch (const Error& e) {
    err << "mobius: " << e.what() << "\n";
    return e.kind() == ErrorKind::Counterexample ? 1 : 2;
  } catch (const std::exception& e) {
    err << "mobius: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace mobius
