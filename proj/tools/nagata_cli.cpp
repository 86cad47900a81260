// Command-line surface: every subcommand reads JSON/CSV inputs, runs one
// pipeline, emits a deterministic JSON report on stdout and a human summary
// on stderr. Exit codes: 0 all assertions pass, 1 assertion failures,
// 2 malformed input or usage.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "nagata/dimension.hpp"
#include "nagata/extension.hpp"
#include "nagata/hyperbolic.hpp"
#include "nagata/json_io.hpp"
#include "nagata/nerve.hpp"
#include "nagata/oracles.hpp"
#include "nagata/report.hpp"
#include "nagata/sphere_ext.hpp"
#include "nagata/suites.hpp"

using namespace nagata;

namespace {

struct GlobalOpts {
  bool exact = false;
  bool force = false;
  bool timing = false;
  std::uint64_t seed = 0;
  std::string json_out;
  std::string space_path;
  std::string points_path;
  std::string norm = "l2";
  std::string cover_path;
  std::string map_path;
};

int emit(RunReport& report, const GlobalOpts& g, const WallClock& clock) {
  json j = report.to_json();
  if (g.timing) j["wall_ms"] = clock.ms();
  std::cout << j.dump(2) << "\n";
  if (!g.json_out.empty()) {
    std::ofstream out(g.json_out);
    out << j.dump(2) << "\n";
  }
  int failures = 0;
  for (const auto& rec : report.assertions.records) {
    if (!rec.pass) ++failures;
    std::cerr << (rec.pass ? "  ok   " : "  FAIL ") << rec.name;
    if (!rec.pass && !rec.witness.empty()) std::cerr << "  [" << rec.witness << "]";
    std::cerr << "\n";
  }
  std::cerr << report.command << ": " << report.assertions.records.size() - failures << "/"
            << report.assertions.records.size() << " assertions pass";
  if (g.timing) std::cerr << " (" << clock.ms() << " ms)";
  std::cerr << "\n";
  return failures == 0 ? 0 : 1;
}

template <typename S>
FiniteMetricSpace<S> load_space(const GlobalOpts& g, RunReport& report) {
  if (!g.space_path.empty()) {
    std::string bytes = load_text_file(g.space_path);
    report.add_input("space", bytes);
    return space_from_json<S>(json::parse(bytes));
  }
  if (!g.points_path.empty()) {
    std::string bytes = load_text_file(g.points_path);
    report.add_input("points", bytes);
    NormTag tag = g.norm == "l1" ? NormTag::L1 : NormTag::L2;
    if constexpr (!std::is_floating_point_v<S>) {
      if (tag == NormTag::L2)
        throw std::invalid_argument("l2 point clouds need float mode (square roots)");
    }
    return space_from_points<S>(points_from_csv<S>(bytes), tag);
  }
  throw std::invalid_argument("need --space or --points");
}

template <typename S>
std::vector<S> parse_scales(const std::string& csv) {
  std::vector<S> out;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_scalar<S>(item));
  std::sort(out.begin(), out.end());
  return out;
}

template <typename S>
json profile_to_json(const LebesgueProfile<S>& p) {
  json j;
  j["global"] = ext_to_json(p.global);
  j["mesh"] = scalar_to_json(p.mesh);
  j["mult_open"] = p.mult_open;
  j["mult_paper"] = p.mult_paper;
  json local = json::array();
  for (const auto& v : p.local) local.push_back(ext_to_json(v));
  j["local"] = std::move(local);
  return j;
}

template <typename S>
json weights_to_json(const FiniteMetricSpace<S>& X, const DenseMatrix<S>& w) {
  json rows = json::object();
  for (int x = 0; x < X.size(); ++x) {
    json row = json::array();
    for (int c = 0; c < w.cols(); ++c) row.push_back(scalar_to_json(w(x, c)));
    rows[X.label(x)] = std::move(row);
  }
  return rows;
}

void append_checks(RunReport& report, const CheckList& checks) {
  for (const auto& rec : checks.records) report.assertions.records.push_back(rec);
}

// ---- subcommand bodies ----

template <typename S>
int cmd_validate(const GlobalOpts& g) {
  WallClock clock;
  RunReport report;
  report.command = "validate";
  report.seed = g.seed;
  auto X = load_space<S>(g, report);
  auto violations = validate(X);
  json vj = json::array();
  for (const auto& v : violations) {
    json one;
    one["axiom"] = axiom_name(v.axiom);
    json pts = json::array();
    for (int p : v.points)
      if (p >= 0) pts.push_back(X.label(p));
    one["points"] = std::move(pts);
    one["amount"] = scalar_to_json(v.amount);
    vj.push_back(std::move(one));
  }
  std::string witness;
  if (!violations.empty()) {
    for (int p : violations[0].points)
      if (p >= 0) witness += (witness.empty() ? "" : ",") + X.label(p);
  }
  report.assertions.add("metric_axioms_hold", violations.empty(),
                        static_cast<double>(violations.size()), 0.0, witness);
  report.results["violations"] = std::move(vj);
  report.results["points"] = X.size();
  return emit(report, g, clock);
}

template <typename S>
int cmd_transform(const GlobalOpts& g, const std::string& max_eps, const std::string& min_eps) {
  WallClock clock;
  RunReport report;
  report.command = "transform";
  report.seed = g.seed;
  auto X = load_space<S>(g, report);
  if (max_eps.empty() == min_eps.empty())
    throw std::invalid_argument("pass exactly one of --max-eps / --min-eps");
  FiniteMetricSpace<S> out = max_eps.empty() ? transform_min(X, parse_scalar<S>(min_eps))
                                             : transform_max(X, parse_scalar<S>(max_eps));
  report.assertions.add("output_validates", validate(out).empty());
  report.results["space"] = space_to_json(out);
  return emit(report, g, clock);
}

template <typename S>
int cmd_lebesgue(const GlobalOpts& g, const std::string& r_text) {
  WallClock clock;
  RunReport report;
  report.command = "lebesgue";
  report.seed = g.seed;
  auto X = load_space<S>(g, report);
  std::string cover_bytes = load_text_file(g.cover_path);
  report.add_input("cover", cover_bytes);
  auto U = cover_from_json<S>(json::parse(cover_bytes), X);
  auto p = lebesgue_profile(U);
  bool global_le_local = true;
  for (const auto& loc : p.local) global_le_local = global_le_local && p.global <= loc;
  report.assertions.add("global_is_min_of_local", global_le_local);
  if (!r_text.empty()) {
    S r = parse_scalar<S>(r_text);
    report.assertions.add("cover_is_r_lebesgue", scale_le_ext(r, p.global),
                          p.global.as_double(), to_double(r));
  }
  report.results["profile"] = profile_to_json(p);
  return emit(report, g, clock);
}

template <typename S>
int cmd_nerve(const GlobalOpts& g, const std::string& tag_text) {
  WallClock clock;
  RunReport report;
  report.command = "nerve";
  report.seed = g.seed;
  auto X = load_space<S>(g, report);
  std::string cover_bytes = load_text_file(g.cover_path);
  report.add_input("cover", cover_bytes);
  auto U = cover_from_json<S>(json::parse(cover_bytes), X);
  NormTag tag = tag_text == "l2" ? NormTag::L2 : NormTag::L1;
  auto N = build_nerve(U);
  auto rep = verify_barycentric_bound(U, tag);
  auto phi = barycentric_map(U, tag);
  bool points_ok = true;
  for (int x = 0; x < X.size(); ++x) {
    RowVector<S> row = phi.weights.row(x);
    points_ok = points_ok && is_simplex_point<S>(row, N);
  }
  report.assertions.add("barycentric_values_are_simplex_points", points_ok);
  report.assertions.add("barycentric_lip_le_4m2_over_L", rep.holds, to_double(rep.measured_lip),
                        rep.vacuous ? 0.0 : to_double(rep.bound_paper));
  json simplices = json::array();
  for (const auto& s : N.simplices) simplices.push_back(s);
  report.results["nerve"] = {{"vertices", N.vertex_count},
                             {"dimension", N.dimension},
                             {"simplices", std::move(simplices)}};
  report.results["barycentric"] = weights_to_json(X, phi.weights);
  report.results["bound_report"] = {{"measured_lip", to_double(rep.measured_lip)},
                                    {"bound_paper", rep.vacuous ? json("inf")
                                                                : scalar_to_json(rep.bound_paper)},
                                    {"bound_open", rep.vacuous ? json("inf")
                                                               : scalar_to_json(rep.bound_open)},
                                    {"holds_open", rep.holds_open},
                                    {"mult_paper", rep.mult_paper},
                                    {"mult_open", rep.mult_open}};
  return emit(report, g, clock);
}

template <typename S>
int cmd_extend_mcshane(const GlobalOpts& g, bool use_whitney) {
  WallClock clock;
  RunReport report;
  report.command = "extend-mcshane";
  report.seed = g.seed;
  auto X = load_space<S>(g, report);
  std::string map_bytes = load_text_file(g.map_path);
  report.add_input("map", map_bytes);
  auto parsed = map_from_json<S>(json::parse(map_bytes), X);
  if (parsed.kind != TargetKind::Real)
    throw std::invalid_argument("extend-mcshane needs a real-valued map");
  RealMap<S> f{parsed.domain, parsed.real_values, parsed.lambda};
  auto ext = use_whitney ? whitney_extend(X, f) : mcshane_extend(X, f);
  const S tau = comparison_tolerance<S>();
  S gap(0);
  for (size_t a = 0; a < f.domain.size(); ++a)
    gap = std::max(gap, scalar_abs(S(ext.values[static_cast<size_t>(f.domain[a])] - f.values[a])));
  report.assertions.add("restriction_exact", gap <= tau, to_double(gap), 0.0);
  RealMap<S> total{{}, ext.values, S(0)};
  total.domain.resize(static_cast<size_t>(X.size()));
  std::iota(total.domain.begin(), total.domain.end(), 0);
  report.assertions.require_leq("lip_le_lambda", lipschitz_constant(X, total), ext.lambda_used);
  report.assertions.add("declared_lambda_honest", !ext.lambda_was_raised,
                        to_double(ext.lambda_used), to_double(f.lambda));
  json values = json::object();
  for (int x = 0; x < X.size(); ++x)
    values[X.label(x)] = scalar_to_json(ext.values[static_cast<size_t>(x)]);
  report.results["values"] = std::move(values);
  report.results["lambda_used"] = scalar_to_json(ext.lambda_used);
  return emit(report, g, clock);
}

int cmd_extend_simplex(const GlobalOpts& g) {
  WallClock clock;
  RunReport report;
  report.command = "extend-simplex";
  report.seed = g.seed;
  auto X = load_space<double>(g, report);
  std::string map_bytes = load_text_file(g.map_path);
  report.add_input("map", map_bytes);
  auto parsed = map_from_json<double>(json::parse(map_bytes), X);
  if (parsed.kind != TargetKind::Simplex && parsed.kind != TargetKind::Vector)
    throw std::invalid_argument("extend-simplex needs a simplex or vector target");
  VectorMap<double> f{parsed.domain, parsed.vector_values, parsed.tag, parsed.lambda};
  double measured = lipschitz_constant(X, f);
  auto ext = extend_into_convex(X, f, ConvexBody<double>(StandardSimplex<double>{parsed.ambient}));
  std::vector<int> all(static_cast<size_t>(X.size()));
  std::iota(all.begin(), all.end(), 0);
  VectorMap<double> total{all, ext.values, parsed.tag, 0.0};
  report.assertions.require_leq("lip_le_factor_lambda", lipschitz_constant(X, total),
                                ext.factor * ext.lambda_used);
  bool inside = true;
  for (int x = 0; x < X.size(); ++x) {
    RowVector<double> row = ext.values.row(x);
    inside = inside && body_contains<double>(
                           row, ConvexBody<double>(StandardSimplex<double>{parsed.ambient}), 1e-9);
  }
  report.assertions.add("image_in_simplex", inside);
  report.assertions.add("declared_lambda_honest", !ext.lambda_was_raised, measured,
                        parsed.lambda);
  report.results["values"] = weights_to_json(X, ext.values);
  report.results["factor"] = ext.factor;
  return emit(report, g, clock);
}

int cmd_extend_sphere(const GlobalOpts& g, double C_search) {
  // force mode: run outside the window, report measured constants
  WallClock clock;
  RunReport report;
  report.command = "extend-sphere";
  report.seed = g.seed;
  auto X = load_space<double>(g, report);
  std::string map_bytes = load_text_file(g.map_path);
  report.add_input("map", map_bytes);
  auto parsed = map_from_json<double>(json::parse(map_bytes), X);
  if (parsed.kind != TargetKind::SimplexBoundary)
    throw std::invalid_argument("extend-sphere needs a simplex_boundary target");
  const int k = parsed.ambient;
  const int m = k - 2;
  VectorMap<double> fv{parsed.domain, parsed.vector_values, parsed.tag, parsed.lambda};
  double lambda = std::max(parsed.lambda, lipschitz_constant(X, fv));
  const double s = convex_extension_factor<double>(k, parsed.tag);
  const double r_int = 1.0 / (12.0 * s * lambda * k);
  auto ref = refinement_oracle_from_search<double>(C_search, m,
                                                   ScaleWindow<double>{r_int / 2, r_int * 4});
  auto res = extension_from_refinement(ref, X, parsed.domain, parsed.vector_values, lambda,
                                       PipelineOptions<double>{parsed.tag, g.force});
  if (res.status == PipelineStatus::OracleRefused) {
    report.assertions.add("refinement_oracle_answered", false);
  } else {
    append_checks(report, res.checks);
    report.results["values"] = weights_to_json(X, res.values);
  }
  report.results["C"] = res.C;
  report.results["lambda"] = lambda;
  return emit(report, g, clock);
}

int cmd_refine(const GlobalOpts& g, double r, double C_search, int m) {
  WallClock clock;
  RunReport report;
  report.command = "refine";
  report.seed = g.seed;
  auto X = load_space<double>(g, report);
  std::string cover_bytes = load_text_file(g.cover_path);
  report.add_input("cover", cover_bytes);
  auto U = cover_from_json<double>(json::parse(cover_bytes), X);
  if (m < 0) m = U.element_count() - 2;
  const int k = m + 2;
  const double s = convex_extension_factor<double>(k, NormTag::L1);
  const double lambda_phi = 4.0 * k * k / r;
  const double r_int = 1.0 / (12.0 * s * lambda_phi * k);
  auto ref = refinement_oracle_from_search<double>(C_search, m,
                                                   ScaleWindow<double>{r_int / 2, r_int * 4});
  auto sphere = sphere_oracle_from_refinement(ref, m);
  auto res = refinement_from_extension(sphere, U, r, PipelineOptions<double>{NormTag::L1, g.force});
  if (res.status == PipelineStatus::OracleRefused)
    report.assertions.add("extension_oracle_answered", false);
  else
    append_checks(report, res.checks);
  report.results["t"] = to_double(res.t);
  report.results["C"] = sphere.C;
  if (res.status == PipelineStatus::Ok) report.results["cover"] = cover_to_json(res.refined);
  return emit(report, g, clock);
}

int cmd_lift(const GlobalOpts& g, double s_scale, double C_search) {
  WallClock clock;
  RunReport report;
  report.command = "lift";
  report.seed = g.seed;
  auto X = load_space<double>(g, report);
  std::string cover_bytes = load_text_file(g.cover_path);
  report.add_input("cover", cover_bytes);
  auto W = cover_from_json<double>(json::parse(cover_bytes), X);
  const int n = W.element_count() - 3;
  if (n < 0) throw std::invalid_argument("lift needs a cover of at least 3 elements");
  auto ref = refinement_oracle_from_search<double>(
      C_search, n, ScaleWindow<double>{s_scale / 8, s_scale});
  auto res = lift_refinement(ref, W, s_scale, PipelineOptions<double>{NormTag::L1, g.force});
  if (res.status == PipelineStatus::OracleRefused)
    report.assertions.add("refinement_oracle_answered", false);
  else
    append_checks(report, res.checks);
  report.results["t"] = to_double(res.t);
  if (res.status == PipelineStatus::Ok) report.results["cover"] = cover_to_json(res.refined);
  return emit(report, g, clock);
}

int cmd_surgery(const GlobalOpts& g, int n, double C_search, const std::string& shrink_text) {
  WallClock clock;
  RunReport report;
  report.command = "surgery";
  report.seed = g.seed;
  auto X = load_space<double>(g, report);
  std::string cover_bytes = load_text_file(g.cover_path);
  report.add_input("cover", cover_bytes);
  auto D = decomposition_from_json<double>(json::parse(cover_bytes), X);
  double shrink = shrink_text.empty() ? 0.25 : parse_scalar<double>(shrink_text);
  // window engineered around the barycentric constant of this decomposition
  const int k = n + 2;
  const double s = convex_extension_factor<double>(k, NormTag::L1);
  const double lambda_f = 4.0 * k * k / (shrink * D.r);
  const double r_int = 1.0 / (12.0 * s * lambda_f * k);
  auto sphere = sphere_oracle_from_search<double>(C_search, n,
                                                  ScaleWindow<double>{r_int / 2, r_int * 4});
  auto res =
      nerve_surgery_refine(sphere, D, shrink, PipelineOptions<double>{NormTag::L1, g.force});
  if (res.status == PipelineStatus::OracleRefused)
    report.assertions.add("extension_oracle_answered", false);
  else
    append_checks(report, res.checks);
  report.results["d"] = to_double(res.d);
  report.results["mesh_bound"] = to_double(res.mesh_bound);
  if (res.status == PipelineStatus::Ok) report.results["cover"] = cover_to_json(res.refined);
  return emit(report, g, clock);
}

template <typename S>
int cmd_dim(const GlobalOpts& g, const std::string& C_text, const std::string& scales_text,
            const std::string& macro_text, const std::string& micro_text, bool exact_only) {
  WallClock clock;
  RunReport report;
  report.command = "dim";
  report.seed = g.seed;
  auto X = load_space<S>(g, report);
  S C = parse_scalar<S>(C_text);
  std::vector<S> scales;
  if (!scales_text.empty()) {
    scales = parse_scales<S>(scales_text);
  } else {
    // default: the distinct pairwise distances, the only scales where finite
    // covers change combinatorially
    for (int i = 0; i < X.size(); ++i)
      for (int j = i + 1; j < X.size(); ++j) scales.push_back(X(i, j));
    std::sort(scales.begin(), scales.end());
    scales.erase(std::unique(scales.begin(), scales.end()), scales.end());
  }
  SearchOptions opts;
  opts.force_exact = exact_only;
  auto witnesses_json = [&](const DimReport<S>& rep) {
    json w = json::object();
    for (const auto& [idx, wit] : rep.witnesses) {
      w[std::to_string(to_double(rep.scales_in_scope[static_cast<size_t>(idx)]))] =
          decomposition_to_json(wit);
    }
    return w;
  };
  if (!macro_text.empty() || !micro_text.empty()) {
    ScaleMode mode = macro_text.empty() ? ScaleMode::Micro : ScaleMode::Macro;
    S M = parse_scalar<S>(macro_text.empty() ? micro_text : macro_text);
    auto rep = scale_mode_dimension(X, C, scales, M, mode, opts);
    report.assertions.add("restricted_witnesses_transport", rep.transported_restricted_witnesses);
    report.assertions.add("transform_witnesses_transport", rep.transported_transform_witnesses);
    report.results["restricted"] = {{"upper", rep.restricted.upper_bound},
                                    {"lower", rep.restricted.lower_bound}};
    if (rep.restricted.n_exact) report.results["restricted"]["exact"] = *rep.restricted.n_exact;
    report.results["transformed"] = {{"upper", rep.transformed.upper_bound},
                                     {"lower", rep.transformed.lower_bound}};
    if (rep.transformed.n_exact) report.results["transformed"]["exact"] = *rep.transformed.n_exact;
    report.results["witnesses"] = witnesses_json(rep.restricted);
    report.results["notes"] = rep.notes;
  } else {
    DimQuery<S> q{&X, C, scales, ScaleMode::Full, S(0), opts};
    auto rep = scale_range_dimension(q);
    bool wits_ok = true;
    for (const auto& [idx, wit] : rep.witnesses)
      wits_ok = wits_ok && check_decomposition(wit).is_valid;
    report.assertions.add("witnesses_validate", wits_ok);
    report.assertions.add("dimension_determined", rep.upper_bound >= 0,
                          static_cast<double>(rep.upper_bound), 0.0);
    report.results["upper"] = rep.upper_bound;
    report.results["lower"] = rep.lower_bound;
    if (rep.n_exact) report.results["exact"] = *rep.n_exact;
    report.results["witnesses"] = witnesses_json(rep);
  }
  return emit(report, g, clock);
}

template <typename S>
int cmd_dim0(const GlobalOpts& g, const std::string& C_text, const std::string& scales_text,
             bool non_strict) {
  WallClock clock;
  RunReport report;
  report.command = "dim0";
  report.seed = g.seed;
  auto X = load_space<S>(g, report);
  S C = parse_scalar<S>(C_text);
  auto scales = parse_scales<S>(scales_text);
  auto reps = dim_zero_certificate(X, C, scales, !non_strict);
  json per_scale = json::array();
  for (const auto& rep : reps) {
    std::string witness;
    if (rep.witness)
      for (int p : *rep.witness) witness += (witness.empty() ? "" : ",") + X.label(p);
    report.assertions.add("components_bounded_at_" + std::to_string(to_double(rep.r)),
                          rep.components_bounded, to_double(rep.witness_diameter),
                          to_double(S(C * rep.r)), witness);
    json one;
    one["r"] = scalar_to_json(rep.r);
    one["bounded"] = rep.components_bounded;
    if (rep.witness) {
      json w = json::array();
      for (int p : *rep.witness) w.push_back(X.label(p));
      one["witness"] = std::move(w);
      one["witness_diameter"] = scalar_to_json(rep.witness_diameter);
    }
    per_scale.push_back(std::move(one));
  }
  report.results["scales"] = std::move(per_scale);
  return emit(report, g, clock);
}

template <typename S>
int cmd_hyperbolize(const GlobalOpts& g, int n, const std::string& C_text,
                    const std::string& growth_text, bool all_basepoints) {
  WallClock clock;
  RunReport report;
  report.command = "hyperbolize";
  report.seed = g.seed;
  auto X = load_space<S>(g, report);
  S C = parse_scalar<S>(C_text);
  S growth = growth_text.empty() ? S(4) : parse_scalar<S>(growth_text);
  auto res = build_tower(X, n, C, growth);
  if (!res.tower.has_value()) {
    report.assertions.add("tower_built", false, 0.0, 0.0, res.error);
    return emit(report, g, clock);
  }
  report.assertions.add("tower_built", true);
  append_checks(report, res.checks);
  auto Dh = dh_metric(*res.tower);
  report.assertions.add("dh_validates", validate(Dh).empty());
  std::vector<int> basepoints{0};
  if (all_basepoints) {
    basepoints.resize(static_cast<size_t>(X.size()));
    std::iota(basepoints.begin(), basepoints.end(), 0);
  }
  S max_delta(0), max_side(0);
  for (int b : basepoints) {
    auto rep = hyperbolicity_certificate(Dh, b);
    max_delta = std::max(max_delta, rep.delta_measured);
    max_side = std::max(max_side, rep.side_defect);
    if (b == basepoints.back()) {
      report.results["gromov_products"] = weights_to_json(Dh, rep.gromov_products);
    }
  }
  report.assertions.require_leq("side_defect_le_1", max_side, S(1));
  report.assertions.require_leq("four_point_delta_le_4", max_delta, S(4));
  auto rows = coarse_equivalence_profile(X, Dh, *res.tower);
  bool coarse_ok = true;
  json rows_json = json::array();
  for (const auto& row : rows) {
    coarse_ok = coarse_ok && row.forward_ok && row.backward_ok;
    rows_json.push_back({{"level", row.level},
                         {"mesh", scalar_to_json(row.mesh)},
                         {"lebesgue", ext_to_json(row.lebesgue)},
                         {"forward_ok", row.forward_ok},
                         {"backward_ok", row.backward_ok}});
  }
  report.assertions.add("coarse_equivalence_tables", coarse_ok);
  append_checks(report, dh_dimension_certificate(Dh, *res.tower));
  report.results["dh"] = space_to_json(Dh);
  report.results["levels"] = static_cast<int>(res.tower->levels.size());
  report.results["delta_measured"] = to_double(max_delta);
  report.results["side_defect"] = to_double(max_side);
  report.results["coarse_rows"] = std::move(rows_json);
  report.results["basepoints_checked"] = static_cast<int>(basepoints.size());
  return emit(report, g, clock);
}

int cmd_corpus(const GlobalOpts& g, bool quick) {
  WallClock clock;
  RunReport report;
  report.command = "corpus";
  report.seed = g.seed;
  auto results = run_acceptance_suites(g.seed, quick);
  json arr = json::array();
  for (const auto& r : results) {
    report.assertions.add(r.name, r.pass(), static_cast<double>(r.failures),
                          static_cast<double>(r.instances));
    json one;
    one["name"] = r.name;
    one["instances"] = r.instances;
    one["failures"] = r.failures;
    one["details"] = r.details;
    arr.push_back(std::move(one));
  }
  report.results["criteria"] = std::move(arr);
  return emit(report, g, clock);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite metric space toolkit: covers, Lipschitz extensions, "
               "scale-range Nagata-Assouad dimension, cover-tower hyperbolic metrics"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_flag("--exact", g.exact, "exact rational arithmetic; numbers as p/q strings");
  app.add_flag("--timing", g.timing, "include wall time (breaks byte determinism)");
  app.add_flag("--force", g.force,
               "run pipelines outside their guaranteed windows, reporting measured constants");
  app.add_option("--seed", g.seed, "seed for randomized pipelines");
  app.add_option("--json-out", g.json_out, "also write the JSON report to this path");

  auto add_space_opts = [&](CLI::App* cmd) {
    cmd->add_option("--space", g.space_path, "space JSON: {labels, dist}");
    cmd->add_option("--points", g.points_path, "point-cloud CSV, one point per row");
    cmd->add_option("--norm", g.norm, "l1|l2 metric for --points")->default_str("l2");
  };

  auto* v = app.add_subcommand("validate", "check the metric axioms, report witnesses");
  add_space_opts(v);

  auto* tr = app.add_subcommand("transform", "apply max(d,eps) or min(d,eps)");
  add_space_opts(tr);
  std::string max_eps, min_eps;
  tr->add_option("--max-eps", max_eps, "epsilon for max(d,eps)");
  tr->add_option("--min-eps", min_eps, "epsilon for min(d,eps)");

  auto* lb = app.add_subcommand("lebesgue", "Lebesgue profile of a cover");
  add_space_opts(lb);
  lb->add_option("--cover", g.cover_path)->required();
  std::string r_text;
  lb->add_option("--r", r_text, "also check r <= L(U)");

  auto* nv = app.add_subcommand("nerve", "nerve, barycentric map and its Lipschitz certificate");
  add_space_opts(nv);
  nv->add_option("--cover", g.cover_path)->required();
  std::string tag_text = "l1";
  nv->add_option("--tag", tag_text, "simplex metric: l1|l2")->default_str("l1");

  auto* em = app.add_subcommand("extend-mcshane", "inf-convolution extension of a real map");
  add_space_opts(em);
  em->add_option("--map", g.map_path)->required();
  bool use_whitney = false;
  em->add_flag("--whitney", use_whitney, "use the sup-form envelope instead");

  auto* es = app.add_subcommand("extend-simplex", "coordinatewise extension into the simplex");
  add_space_opts(es);
  es->add_option("--map", g.map_path)->required();

  auto* eb = app.add_subcommand("extend-sphere",
                                "extension into the simplex boundary via cover refinements");
  add_space_opts(eb);
  eb->add_option("--map", g.map_path)->required();
  double C_search = 2.0;
  eb->add_option("--C", C_search, "decomposition constant for the internal oracle");

  auto* rf = app.add_subcommand("refine", "multiplicity-dropping refinement via sphere extension");
  add_space_opts(rf);
  rf->add_option("--cover", g.cover_path)->required();
  double refine_r = 1.0;
  int refine_m = -1;
  rf->add_option("--r", refine_r, "Lebesgue scale of the input cover")->required();
  rf->add_option("--m", refine_m, "sphere dimension (default: elements-2)");
  rf->add_option("--C", C_search);

  auto* lf = app.add_subcommand("lift", "refine an (n+3)-element cover to multiplicity n+2");
  add_space_opts(lf);
  lf->add_option("--cover", g.cover_path)->required();
  double lift_s = 1.0;
  lf->add_option("--s", lift_s, "Lebesgue scale of the input cover")->required();
  lf->add_option("--C", C_search);

  auto* sg = app.add_subcommand("surgery", "nerve surgery over a family decomposition");
  add_space_opts(sg);
  sg->add_option("--cover", g.cover_path, "decomposition JSON with families and r")->required();
  int surgery_n = 1;
  std::string shrink_text;
  sg->add_option("--n", surgery_n)->required();
  sg->add_option("--C", C_search);
  sg->add_option("--shrink", shrink_text, "neighborhood fraction (default 1/4)");

  auto* dm = app.add_subcommand("dim", "scale-range Nagata-Assouad dimension");
  add_space_opts(dm);
  std::string C_text = "2", scales_text, macro_text, micro_text;
  bool exact_only = false;
  dm->add_option("--C", C_text)->required();
  dm->add_option("--scales", scales_text, "comma-separated; default: distinct distances");
  dm->add_option("--macro", macro_text, "macroscopic mode at threshold M");
  dm->add_option("--micro", micro_text, "microscopic mode at threshold M");
  dm->add_flag("--exact-only", exact_only, "exhaustive search regardless of size");

  auto* d0 = app.add_subcommand("dim0", "dimension-zero chain-component certificate");
  add_space_opts(d0);
  bool non_strict = false;
  d0->add_option("--C", C_text)->required();
  d0->add_option("--scales", scales_text)->required();
  d0->add_flag("--non-strict", non_strict, "chain with d <= r instead of d < r");

  auto* hy = app.add_subcommand("hyperbolize", "cover tower, d_h and its certificates");
  add_space_opts(hy);
  int tower_n = 1;
  std::string growth_text;
  bool all_basepoints = false;
  hy->add_option("--n", tower_n)->required();
  hy->add_option("--C", C_text)->required();
  hy->add_option("--growth", growth_text, "scale ratio between levels (default 4)");
  hy->add_flag("--all-basepoints", all_basepoints);

  auto* cp = app.add_subcommand("corpus", "run the randomized property suites");
  bool quick = false;
  cp->add_flag("--quick", quick, "small instance counts");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(v)) return g.exact ? cmd_validate<Rational>(g) : cmd_validate<double>(g);
    if (app.got_subcommand(tr))
      return g.exact ? cmd_transform<Rational>(g, max_eps, min_eps)
                     : cmd_transform<double>(g, max_eps, min_eps);
    if (app.got_subcommand(lb))
      return g.exact ? cmd_lebesgue<Rational>(g, r_text) : cmd_lebesgue<double>(g, r_text);
    if (app.got_subcommand(nv)) {
      if (g.exact && tag_text == "l2")
        throw std::invalid_argument("exact mode supports the l1 simplex metric only");
      return g.exact ? cmd_nerve<Rational>(g, tag_text) : cmd_nerve<double>(g, tag_text);
    }
    if (app.got_subcommand(em))
      return g.exact ? cmd_extend_mcshane<Rational>(g, use_whitney)
                     : cmd_extend_mcshane<double>(g, use_whitney);
    if (app.got_subcommand(es)) {
      if (g.exact) throw std::invalid_argument("extend-simplex needs float mode (sqrt factors)");
      return cmd_extend_simplex(g);
    }
    if (app.got_subcommand(eb)) {
      if (g.exact) throw std::invalid_argument("extend-sphere needs float mode (sqrt factors)");
      return cmd_extend_sphere(g, C_search);
    }
    if (app.got_subcommand(rf)) {
      if (g.exact) throw std::invalid_argument("refine needs float mode (sqrt factors)");
      return cmd_refine(g, refine_r, C_search, refine_m);
    }
    if (app.got_subcommand(lf)) {
      if (g.exact) throw std::invalid_argument("lift needs float mode (sqrt factors)");
      return cmd_lift(g, lift_s, C_search);
    }
    if (app.got_subcommand(sg)) {
      if (g.exact) throw std::invalid_argument("surgery needs float mode (sqrt factors)");
      return cmd_surgery(g, surgery_n, C_search, shrink_text);
    }
    if (app.got_subcommand(dm))
      return g.exact
                 ? cmd_dim<Rational>(g, C_text, scales_text, macro_text, micro_text, exact_only)
                 : cmd_dim<double>(g, C_text, scales_text, macro_text, micro_text, exact_only);
    if (app.got_subcommand(d0))
      return g.exact ? cmd_dim0<Rational>(g, C_text, scales_text, non_strict)
                     : cmd_dim0<double>(g, C_text, scales_text, non_strict);
    if (app.got_subcommand(hy))
      return g.exact ? cmd_hyperbolize<Rational>(g, tower_n, C_text, growth_text, all_basepoints)
                     : cmd_hyperbolize<double>(g, tower_n, C_text, growth_text, all_basepoints);
    if (app.got_subcommand(cp)) return cmd_corpus(g, quick);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
