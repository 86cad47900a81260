#pragma once

#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nagata/checks.hpp"
#include "nagata/cover.hpp"
#include "nagata/extension.hpp"
#include "nagata/nerve.hpp"

namespace nagata {

template <typename S>
struct ScaleWindow {
  S lo{}, hi{};
  bool contains(const S& x) const { return lo < x && x < hi; }
};

// Produces indexwise shrinkings: given an r-Lebesgue cover U of m+2 elements
// with r inside the window, returns V with V_i inside U_i, multiplicity at
// most m+1 and L(V) >= t*r. Returning nullopt is a refusal.
template <typename S>
struct RefinementOracle {
  S t{};
  ScaleWindow<S> window;  // scales r where the guarantee holds
  std::function<std::optional<Cover<S>>(const Cover<S>&, const S&)> refine;
};

// Extends boundary-valued partial maps: given lambda-Lipschitz values on a
// domain inside `space` with lambda in the window, returns a total weight
// matrix into the simplex boundary with exact restriction and Lip <= C*lambda.
template <typename S>
struct SphereExtensionOracle {
  int m = 0;  // target is the boundary of the (m+1)-simplex in R^(m+2)
  S C{};
  ScaleWindow<S> lambda_window;
  std::function<std::optional<DenseMatrix<S>>(const FiniteMetricSpace<S>&,
                                              const std::vector<int>&, const DenseMatrix<S>&,
                                              const S&)>
      extend;
};

enum class PipelineStatus { Ok, OracleRefused, PreconditionFailed };

template <typename S>
struct PipelineOptions {
  NormTag tag = NormTag::L1;
  bool force = false;  // run outside declared windows, still measuring everything
};

namespace detail {

template <typename S>
int min_weight_index(const DenseMatrix<S>& w, int row) {
  int arg = 0;
  for (int c = 1; c < w.cols(); ++c)
    if (w(row, c) < w(row, arg)) arg = c;
  return arg;
}

template <typename S>
S max_abs_row_gap(const DenseMatrix<S>& a, int ra, const DenseMatrix<S>& b, int rb) {
  S worst(0);
  for (int c = 0; c < a.cols(); ++c) worst = std::max(worst, scalar_abs(S(a(ra, c) - b(rb, c))));
  return worst;
}

}  // namespace detail

// ---- sphere extensor -> cover refinement ----

template <typename S>
struct RefinementResult {
  PipelineStatus status = PipelineStatus::Ok;
  Cover<S> refined;
  S t{};  // the guaranteed shrink factor 1/(4C(m+2)^2(m+1))
  CheckList checks;
};

// Runs the barycentric map of an r-Lebesgue (m+2)-element cover into the
// (m+1)-simplex, pushes the boundary part through the extension oracle and
// reads the refinement off the supports of the result.
template <typename S>
RefinementResult<S> refinement_from_extension(const SphereExtensionOracle<S>& oracle,
                                              const Cover<S>& U, const S& r,
                                              const PipelineOptions<S>& opts = {}) {
  RefinementResult<S> out;
  const int m = oracle.m;
  const int k = m + 2;
  if (U.element_count() != k)
    throw std::invalid_argument("refinement_from_extension: cover must have m+2 elements");
  auto profile = lebesgue_profile(U);
  out.checks.add("cover_is_r_lebesgue", scale_le_ext(r, profile.global),
                 profile.global.as_double(), to_double(r));
  S window_lo = S(4) * S(k) * S(k) / oracle.lambda_window.hi;
  S window_hi = S(4) * S(k) * S(k) / oracle.lambda_window.lo;
  bool in_window = window_lo < r && r < window_hi;
  out.checks.add("scale_inside_window", in_window, to_double(r), to_double(window_hi));
  if ((!in_window || !out.checks.records[0].pass) && !opts.force) {
    out.status = PipelineStatus::PreconditionFailed;
    return out;
  }

  auto phi = barycentric_map(U, opts.tag, &profile);
  S lambda_phi = S(4) * S(k) * S(k) / r;
  out.checks.require_leq("barycentric_lip_le_4k2_over_r",
                         barycentric_lipschitz(*U.space, phi.weights, opts.tag), lambda_phi);

  std::vector<int> boundary;
  for (int x = 0; x < U.space->size(); ++x)
    if (phi.weights(x, detail::min_weight_index(phi.weights, x)) == S(0)) boundary.push_back(x);
  DenseMatrix<S> boundary_vals(boundary.size(), k);
  for (size_t a = 0; a < boundary.size(); ++a) boundary_vals.row(a) = phi.weights.row(boundary[a]);

  auto g = oracle.extend(*U.space, boundary, boundary_vals, lambda_phi);
  if (!g) {
    out.status = PipelineStatus::OracleRefused;
    return out;
  }
  const S tau = comparison_tolerance<S>();
  S restrict_gap(0);
  for (size_t a = 0; a < boundary.size(); ++a)
    restrict_gap = std::max(restrict_gap, detail::max_abs_row_gap(*g, boundary[a], boundary_vals,
                                                                  static_cast<int>(a)));
  out.checks.add("oracle_restriction_exact", restrict_gap <= tau, to_double(restrict_gap), 0.0);
  out.checks.require_leq("oracle_lip_le_C_lambda",
                         barycentric_lipschitz(*U.space, *g, opts.tag), oracle.C * lambda_phi);

  std::vector<std::vector<int>> elems(static_cast<size_t>(k));
  for (int x = 0; x < U.space->size(); ++x)
    for (int c = 0; c < k; ++c)
      if ((*g)(x, c) > S(0)) elems[static_cast<size_t>(c)].push_back(x);
  out.refined = make_cover(*U.space, std::move(elems), /*allow_empty=*/true);

  out.t = S(1) / (S(4) * oracle.C * S(k) * S(k) * S(m + 1));
  auto vprof = lebesgue_profile(out.refined);
  out.checks.add("refines_indexwise", contained_indexwise(out.refined, U));
  out.checks.add("multiplicity_le_m_plus_1", vprof.mult_open <= m + 1,
                 static_cast<double>(vprof.mult_open), static_cast<double>(m + 1));
  out.checks.add("lebesgue_ge_t_r", scale_le_ext(S(out.t * r), vprof.global),
                 vprof.global.as_double(), to_double(out.t * r));
  if (!out.checks.all_pass() && out.status == PipelineStatus::Ok)
    out.status = PipelineStatus::PreconditionFailed;
  return out;
}

// ---- cover refinement -> sphere extension ----

template <typename S>
struct SphereExtensionResult {
  PipelineStatus status = PipelineStatus::Ok;
  DenseMatrix<S> values;  // rows = all points, columns = m+2 weights
  S C{};                  // 50(m+2)^2 s + 150 s^2 (m+2)^5 / t
  CheckList checks;
};

// The splice (1-beta) * radial part + beta * barycentric part. `f` holds
// boundary-simplex values on `domain`; lambda is its Lipschitz constant.
template <typename S>
SphereExtensionResult<S> extension_from_refinement(const RefinementOracle<S>& oracle,
                                                   const FiniteMetricSpace<S>& X,
                                                   const std::vector<int>& domain,
                                                   const DenseMatrix<S>& f, const S& lambda,
                                                   const PipelineOptions<S>& opts = {}) {
  SphereExtensionResult<S> out;
  const int k = static_cast<int>(f.cols());
  const int m = k - 2;
  if (m < 0) throw std::invalid_argument("boundary map needs at least two coordinates");
  for (Eigen::Index a = 0; a < f.rows(); ++a)
    if (!(f(a, detail::min_weight_index(f, static_cast<int>(a))) == S(0)))
      throw std::invalid_argument("boundary map rows need an exact zero coordinate");
  const S s = convex_extension_factor<S>(k, opts.tag);
  const S tau = comparison_tolerance<S>();

  S lam_lo = S(1) / (S(12) * s * oracle.window.hi * S(k));
  S lam_hi = S(1) / (S(12) * s * oracle.window.lo * S(k));
  bool in_window = lam_lo < lambda && lambda < lam_hi;
  out.checks.add("lambda_inside_window", in_window, to_double(lambda), to_double(lam_hi));
  if (!in_window && !opts.force) {
    out.status = PipelineStatus::PreconditionFailed;
    return out;
  }

  DenseMatrix<S> g;
  if (domain.empty()) {
    // nothing to restrict to: any s*lambda-Lipschitz map into the simplex
    // works, take the constant barycenter
    g = DenseMatrix<S>::Constant(X.size(), k, S(1) / S(k));
  } else {
    VectorMap<S> fv{domain, f, opts.tag, lambda};
    auto gext = extend_into_convex(X, fv, ConvexBody<S>(StandardSimplex<S>{k}));
    g = std::move(gext.values);
  }
  out.checks.require_leq("simplex_extension_lip_le_s_lambda",
                         barycentric_lipschitz(X, g, opts.tag), s * lambda);

  const int n = X.size();
  std::vector<S> minval(static_cast<size_t>(n));
  std::vector<S> alpha(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) {
    minval[static_cast<size_t>(x)] = g(x, detail::min_weight_index(g, x));
    alpha[static_cast<size_t>(x)] = S(k) * minval[static_cast<size_t>(x)];
  }

  // U_i = { x : g_i(x) > alpha(x)/(m+2) or alpha(x) > 2/3 }
  std::vector<std::vector<int>> uelems(static_cast<size_t>(k));
  for (int x = 0; x < n; ++x) {
    bool deep = alpha[static_cast<size_t>(x)] > S(2) / S(3);
    for (int c = 0; c < k; ++c)
      if (deep || g(x, c) > minval[static_cast<size_t>(x)])
        uelems[static_cast<size_t>(c)].push_back(x);
  }
  Cover<S> U = make_cover(X, std::move(uelems), /*allow_empty=*/true);
  const S r = S(1) / (S(12) * s * lambda * S(k));
  auto uprof = lebesgue_profile(U);
  out.checks.add("cutoff_cover_lebesgue_ge_r", scale_le_ext(r, uprof.global),
                 uprof.global.as_double(), to_double(r));

  auto V = oracle.refine(U, r);
  if (!V) {
    out.status = PipelineStatus::OracleRefused;
    return out;
  }
  auto vprof = lebesgue_profile(*V);
  out.checks.add("refinement_indexwise", contained_indexwise(*V, U));
  out.checks.add("refinement_multiplicity_le_m_plus_1", vprof.mult_open <= m + 1,
                 static_cast<double>(vprof.mult_open), static_cast<double>(m + 1));
  out.checks.add("refinement_lebesgue_ge_t_r", scale_le_ext(S(oracle.t * r), vprof.global),
                 vprof.global.as_double(), to_double(oracle.t * r));

  auto phi = barycentric_map(*V, opts.tag, &vprof);

  // h = (g_i - min g) * (1-beta)/(1-alpha) + beta * phi_i
  out.values = DenseMatrix<S>::Zero(n, k);
  bool denominator_ok = true;
  for (int x = 0; x < n; ++x) {
    const S& a = alpha[static_cast<size_t>(x)];
    S beta = a <= S(1) / S(3) ? S(0) : (a >= S(2) / S(3) ? S(1) : S(3) * a - S(1));
    if (beta < S(1)) {
      if (!(S(1) - a >= S(1) / S(3) - tau)) denominator_ok = false;
      S q = (S(1) - beta) / (S(1) - a);
      for (int c = 0; c < k; ++c)
        out.values(x, c) = (g(x, c) - minval[static_cast<size_t>(x)]) * q + beta * phi.weights(x, c);
    } else {
      for (int c = 0; c < k; ++c) out.values(x, c) = phi.weights(x, c);
    }
  }
  out.checks.add("radial_denominator_ge_one_third", denominator_ok);

  // The argmin coordinate always lands on zero; all g_i - min g > 0 is impossible.
  S worst_min(0);
  for (int x = 0; x < n; ++x) {
    int arg = detail::min_weight_index(out.values, x);
    worst_min = std::max(worst_min, scalar_abs(out.values(x, arg)));
  }
  out.checks.add("image_touches_boundary", worst_min <= tau * S(4), to_double(worst_min), 0.0);

  S sum_gap(0), neg(0);
  for (int x = 0; x < n; ++x) {
    S sum(0);
    for (int c = 0; c < k; ++c) {
      sum += out.values(x, c);
      neg = std::max(neg, S(-out.values(x, c)));
    }
    sum_gap = std::max(sum_gap, scalar_abs(S(sum - S(1))));
  }
  out.checks.add("image_in_simplex", sum_gap <= tau * S(8) && neg <= tau * S(4),
                 to_double(sum_gap), 0.0);

  S restrict_gap(0);
  for (size_t a = 0; a < domain.size(); ++a)
    restrict_gap = std::max(restrict_gap, detail::max_abs_row_gap(out.values, domain[a], f,
                                                                  static_cast<int>(a)));
  out.checks.add("restriction_exact", restrict_gap <= tau, to_double(restrict_gap), 0.0);

  out.C = S(50) * S(k) * S(k) * s +
          S(150) * s * s * S(k) * S(k) * S(k) * S(k) * S(k) / oracle.t;
  out.checks.require_leq("extension_lip_le_C_lambda", barycentric_lipschitz(X, out.values, opts.tag),
                         out.C * lambda);
  if (!out.checks.all_pass() && out.status == PipelineStatus::Ok)
    out.status = PipelineStatus::PreconditionFailed;
  return out;
}

// Wraps the splice pipeline as an oracle usable by refinement_from_extension.
template <typename S>
SphereExtensionOracle<S> sphere_oracle_from_refinement(const RefinementOracle<S>& ref, int m,
                                                       const PipelineOptions<S>& opts = {}) {
  SphereExtensionOracle<S> oracle;
  oracle.m = m;
  const int k = m + 2;
  const S s = convex_extension_factor<S>(k, opts.tag);
  oracle.C = S(50) * S(k) * S(k) * s +
             S(150) * s * s * S(k) * S(k) * S(k) * S(k) * S(k) / ref.t;
  oracle.lambda_window = {S(1) / (S(12) * s * ref.window.hi * S(k)),
                          S(1) / (S(12) * s * ref.window.lo * S(k))};
  oracle.extend = [ref, opts](const FiniteMetricSpace<S>& X, const std::vector<int>& domain,
                              const DenseMatrix<S>& vals,
                              const S& lambda) -> std::optional<DenseMatrix<S>> {
    auto res = extension_from_refinement(ref, X, domain, vals, lambda, opts);
    if (res.status != PipelineStatus::Ok) return std::nullopt;
    return res.values;
  };
  return oracle;
}

// ---- multiplicity lift: level n oracle to level n+1 covers ----

template <typename S>
struct LiftResult {
  PipelineStatus status = PipelineStatus::Ok;
  Cover<S> refined;  // n+3 elements, indexwise inside the input
  S t{};             // conclusion factor: L >= t * s with t = oracle.t / 4
  CheckList checks;
};

// Splits off the scale-s core away from the last element, refines there with
// the level-n oracle and reattaches the last element untouched.
template <typename S>
LiftResult<S> lift_refinement(const RefinementOracle<S>& oracle, const Cover<S>& W, const S& s,
                              const PipelineOptions<S>& opts = {}) {
  LiftResult<S> out;
  const int k = W.element_count();  // n+3
  if (k < 3) throw std::invalid_argument("lift_refinement: cover needs at least 3 elements");
  const int last = k - 1;
  const auto& X = *W.space;
  out.t = oracle.t / S(4);

  auto wprof = lebesgue_profile(W);
  out.checks.add("cover_is_s_lebesgue", scale_le_ext(s, wprof.global),
                 wprof.global.as_double(), to_double(s));
  bool in_window = S(4) * oracle.window.lo < s && s < S(4) * oracle.window.hi;
  out.checks.add("scale_inside_window", in_window, to_double(s), 0.0);
  if ((!in_window || !out.checks.records[0].pass) && !opts.force) {
    out.status = PipelineStatus::PreconditionFailed;
    return out;
  }

  // A = union of balls B(x, s/2) whose double B(x, s) escapes the last element.
  std::vector<bool> in_last(X.size(), false);
  for (int x : W.elements[static_cast<size_t>(last)]) in_last[static_cast<size_t>(x)] = true;
  std::vector<bool> in_A(X.size(), false);
  for (int x = 0; x < X.size(); ++x) {
    bool escapes = false;
    for (int y : open_ball(X, x, s))
      if (!in_last[static_cast<size_t>(y)]) {
        escapes = true;
        break;
      }
    if (escapes)
      for (int y : open_ball(X, x, s / S(2))) in_A[static_cast<size_t>(y)] = true;
  }
  std::vector<int> A;
  for (int x = 0; x < X.size(); ++x)
    if (in_A[static_cast<size_t>(x)]) A.push_back(x);

  std::vector<std::vector<int>> final_elems(static_cast<size_t>(k));
  final_elems[static_cast<size_t>(last)] = W.elements[static_cast<size_t>(last)];

  if (!A.empty()) {
    // U_i = W_i cap A is s/2-Lebesgue on the subspace A.
    auto XA = subspace(X, A);
    std::vector<int> pos_in_A(X.size(), -1);
    for (size_t i = 0; i < A.size(); ++i) pos_in_A[static_cast<size_t>(A[i])] = static_cast<int>(i);
    std::vector<std::vector<int>> u_elems(static_cast<size_t>(k - 1));
    for (int i = 0; i < k - 1; ++i)
      for (int x : W.elements[static_cast<size_t>(i)])
        if (in_A[static_cast<size_t>(x)])
          u_elems[static_cast<size_t>(i)].push_back(pos_in_A[static_cast<size_t>(x)]);
    Cover<S> UA{&XA, u_elems};
    auto uaprof = lebesgue_profile(UA);
    out.checks.add("core_cover_lebesgue_ge_half_s", scale_le_ext(S(s / S(2)), uaprof.global),
                   uaprof.global.as_double(), to_double(s / S(2)));

    // U'_i = U_i cup (X \ A) is s/4-Lebesgue on X.
    std::vector<std::vector<int>> uprime(static_cast<size_t>(k - 1));
    for (int i = 0; i < k - 1; ++i) {
      for (int x : W.elements[static_cast<size_t>(i)])
        if (in_A[static_cast<size_t>(x)]) uprime[static_cast<size_t>(i)].push_back(x);
      for (int x = 0; x < X.size(); ++x)
        if (!in_A[static_cast<size_t>(x)]) uprime[static_cast<size_t>(i)].push_back(x);
    }
    Cover<S> Uprime = make_cover(X, std::move(uprime), /*allow_empty=*/true);
    auto upprof = lebesgue_profile(Uprime);
    out.checks.add("extended_cover_lebesgue_ge_quarter_s",
                   scale_le_ext(S(s / S(4)), upprof.global), upprof.global.as_double(),
                   to_double(s / S(4)));

    auto refined = oracle.refine(Uprime, s / S(4));
    if (!refined) {
      out.status = PipelineStatus::OracleRefused;
      return out;
    }
    auto rprof = lebesgue_profile(*refined);
    out.checks.add("oracle_refinement_indexwise", contained_indexwise(*refined, Uprime));
    out.checks.add("oracle_multiplicity", rprof.mult_open <= k - 2,
                   static_cast<double>(rprof.mult_open), static_cast<double>(k - 2));
    out.checks.add("oracle_lebesgue", scale_le_ext(S(oracle.t * s / S(4)), rprof.global),
                   rprof.global.as_double(), to_double(oracle.t * s / S(4)));

    for (int i = 0; i < k - 1; ++i)
      for (int x : refined->elements[static_cast<size_t>(i)])
        if (in_A[static_cast<size_t>(x)]) final_elems[static_cast<size_t>(i)].push_back(x);
  }

  out.refined = make_cover(X, std::move(final_elems), /*allow_empty=*/true);
  auto fprof = lebesgue_profile(out.refined);
  out.checks.add("result_multiplicity_le_n_plus_2", fprof.mult_open <= k - 1,
                 static_cast<double>(fprof.mult_open), static_cast<double>(k - 1));
  out.checks.add("result_lebesgue_ge_t_s", scale_le_ext(S(out.t * s), fprof.global),
                 fprof.global.as_double(), to_double(out.t * s));
  out.checks.add("result_inside_input", contained_indexwise(out.refined, W));
  if (!out.checks.all_pass() && out.status == PipelineStatus::Ok)
    out.status = PipelineStatus::PreconditionFailed;
  return out;
}

// ---- nerve surgery: Lipschitz extensions to a multiplicity-(n+1) cover ----

template <typename S>
struct SurgeryResult {
  PipelineStatus status = PipelineStatus::Ok;
  Cover<S> refined;            // star preimages of the surgered map
  std::vector<int> vertex_of;  // output element -> nerve vertex
  S d{};                       // claimed Lebesgue bound r/(4k(n+3)^3)
  S mesh_bound{};              // 4*c*r
  DenseMatrix<S> surgered;     // the pasted map g
  CheckList checks;
};

// Converts the decomposition to Lebesgue form, maps barycentrically into the
// nerve, replaces the interior of every top simplex by an oracle extension of
// its boundary values and reads the refined cover off the stars.
template <typename S>
SurgeryResult<S> nerve_surgery_refine(const SphereExtensionOracle<S>& oracle,
                                      const FamilyDecomposition<S>& D,
                                      const S& shrink = S(1) / S(4),
                                      const PipelineOptions<S>& opts = {}) {
  SurgeryResult<S> out;
  const int n = oracle.m;
  if (D.family_count != n + 2)
    throw std::invalid_argument("nerve_surgery_refine: need n+2 families");
  const auto& X = *D.cover.space;

  auto leb = decomposition_to_lebesgue_cover(D, shrink);
  const Cover<S>& U = leb.cover;
  const S r = shrink * D.r;
  const S c = leb.profile.mesh > S(0) && r > S(0) ? S(leb.profile.mesh / r) : S(1);
  out.checks.add("lebesgue_form_available", leb.lebesgue_ok && leb.multiplicity_ok,
                 leb.profile.global.as_double(), to_double(r));

  auto phi = barycentric_map(U, opts.tag, &leb.profile);
  const S lambda_f = S(4) * S(n + 2) * S(n + 2) / r;
  out.checks.require_leq("barycentric_lip_le_4n2_over_r",
                         barycentric_lipschitz(X, phi.weights, opts.tag), lambda_f);
  bool in_window = oracle.lambda_window.contains(lambda_f);
  out.checks.add("lambda_inside_window", in_window, to_double(lambda_f),
                 to_double(oracle.lambda_window.hi));
  if ((!in_window || !leb.lebesgue_ok) && !opts.force) {
    out.status = PipelineStatus::PreconditionFailed;
    return out;
  }

  auto nerve = build_nerve(U);
  auto top_simplices = nerve.simplices_of_size(static_cast<size_t>(n + 2));

  std::vector<std::vector<int>> support(static_cast<size_t>(X.size()));
  for (int x = 0; x < X.size(); ++x)
    for (int v = 0; v < U.element_count(); ++v)
      if (phi.weights(x, v) > S(0)) support[static_cast<size_t>(x)].push_back(v);

  out.surgered = phi.weights;
  const S tau = comparison_tolerance<S>();
  bool pasting_ok = true;
  for (const auto& simplex : top_simplices) {
    std::vector<int> closure;
    for (int x = 0; x < X.size(); ++x) {
      const auto& supp = support[static_cast<size_t>(x)];
      if (std::includes(simplex.begin(), simplex.end(), supp.begin(), supp.end()))
        closure.push_back(x);
    }
    if (closure.empty()) continue;
    auto XD = subspace(X, closure);
    std::vector<int> boundary_local;
    DenseMatrix<S> boundary_vals(0, n + 2);
    for (size_t a = 0; a < closure.size(); ++a) {
      if (support[static_cast<size_t>(closure[a])].size() < simplex.size()) {
        boundary_local.push_back(static_cast<int>(a));
        boundary_vals.conservativeResize(boundary_vals.rows() + 1, Eigen::NoChange);
        for (int v = 0; v < n + 2; ++v)
          boundary_vals(boundary_vals.rows() - 1, v) = phi.weights(closure[a], simplex[v]);
      }
    }
    auto g = oracle.extend(XD, boundary_local, boundary_vals, lambda_f);
    if (!g) {
      out.status = PipelineStatus::OracleRefused;
      return out;
    }
    S gap(0);
    for (size_t b = 0; b < boundary_local.size(); ++b)
      gap = std::max(gap, detail::max_abs_row_gap(*g, boundary_local[b], boundary_vals,
                                                  static_cast<int>(b)));
    if (gap > tau) pasting_ok = false;
    out.checks.require_leq("cell_extension_lip_le_k_lambda",
                           barycentric_lipschitz(XD, *g, opts.tag), oracle.C * lambda_f);
    for (size_t a = 0; a < closure.size(); ++a) {
      if (support[static_cast<size_t>(closure[a])].size() < simplex.size()) continue;
      for (int v = 0; v < n + 2; ++v)
        out.surgered(closure[a], simplex[v]) = (*g)(static_cast<int>(a), v);
    }
  }
  out.checks.add("pasting_consistent_on_shared_faces", pasting_ok);

  auto stars = star_preimages(X, out.surgered);
  out.refined = std::move(stars.cover);
  out.vertex_of = std::move(stars.kept);
  const S k_const = oracle.C;
  out.d = r / (S(4) * k_const * S(n + 3) * S(n + 3) * S(n + 3));
  out.mesh_bound = S(4) * c * r;

  auto vprof = lebesgue_profile(out.refined);
  out.checks.add("result_multiplicity_le_n_plus_1", vprof.mult_open <= n + 1,
                 static_cast<double>(vprof.mult_open), static_cast<double>(n + 1));
  out.checks.add("result_lebesgue_ge_d", scale_le_ext(out.d, vprof.global),
                 vprof.global.as_double(), to_double(out.d));
  out.checks.require_leq("result_mesh_le_4cr", vprof.mesh, out.mesh_bound);
  if (!out.checks.all_pass() && out.status == PipelineStatus::Ok)
    out.status = PipelineStatus::PreconditionFailed;
  return out;
}

// ---- standalone combinatorial shrinker (toy-oracle helper) ----

// Removes each full-intersection point from one element so the common
// intersection empties; the element losing the point is the one where the
// point already sits closest to the boundary.
template <typename S>
Cover<S> shrink_full_intersections(const Cover<S>& U) {
  auto profile = lebesgue_profile(U);
  const int k = U.element_count();
  std::vector<std::vector<int>> elems = U.elements;
  std::vector<std::vector<bool>> drop(static_cast<size_t>(k),
                                      std::vector<bool>(U.space->size(), false));
  for (int x = 0; x < U.space->size(); ++x) {
    if (profile.mult_open_local[static_cast<size_t>(x)] < k) continue;
    int best = -1;
    for (int s = 0; s < k; ++s) {
      const auto& v = profile.f[static_cast<size_t>(s)][static_cast<size_t>(x)];
      if (best == -1 || v < profile.f[static_cast<size_t>(best)][static_cast<size_t>(x)]) best = s;
    }
    drop[static_cast<size_t>(best)][static_cast<size_t>(x)] = true;
  }
  for (int s = 0; s < k; ++s) {
    auto& e = elems[static_cast<size_t>(s)];
    e.erase(std::remove_if(e.begin(), e.end(),
                           [&](int x) { return drop[static_cast<size_t>(s)][static_cast<size_t>(x)]; }),
            e.end());
  }
  return Cover<S>{U.space, std::move(elems)};
}

// ---- chain components and the dimension-zero certificate ----

template <typename S>
struct ChainComponents {
  std::vector<int> component_of;          // per point
  std::vector<std::vector<int>> classes;  // sorted members per class
  std::vector<S> diameters;
};

// Equivalence classes of the r-chain relation: consecutive gaps < r (strict)
// or <= r (non-strict).
template <typename S>
ChainComponents<S> chain_components(const FiniteMetricSpace<S>& X, const S& r, bool strict) {
  const int n = X.size();
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool linked = strict ? X(i, j) < r : X(i, j) <= r;
      if (linked) parent[static_cast<size_t>(find(i))] = find(j);
    }
  ChainComponents<S> out;
  out.component_of.assign(static_cast<size_t>(n), -1);
  std::vector<int> root_to_class;
  for (int i = 0; i < n; ++i) {
    int root = find(i);
    int cls = -1;
    for (size_t c = 0; c < root_to_class.size(); ++c)
      if (root_to_class[c] == root) cls = static_cast<int>(c);
    if (cls == -1) {
      cls = static_cast<int>(root_to_class.size());
      root_to_class.push_back(root);
      out.classes.emplace_back();
    }
    out.component_of[static_cast<size_t>(i)] = cls;
    out.classes[static_cast<size_t>(cls)].push_back(i);
  }
  for (const auto& cls : out.classes) out.diameters.push_back(set_diameter(X, cls));
  return out;
}

template <typename S>
struct DimZeroScaleReport {
  S r{};
  bool components_bounded = false;
  std::optional<std::vector<int>> witness;  // a class with diameter > C*r
  S witness_diameter{};
};

// The executable dimension-zero test: at each scale every chain component must
// have diameter at most C*r. Strict chaining (< r) matches the non-strict
// r-disjointness convention.
template <typename S>
std::vector<DimZeroScaleReport<S>> dim_zero_certificate(const FiniteMetricSpace<S>& X, const S& C,
                                                        const std::vector<S>& scales,
                                                        bool strict = true) {
  if (!(C > S(1))) throw std::invalid_argument("dim_zero_certificate: C must exceed 1");
  std::vector<DimZeroScaleReport<S>> out;
  for (const S& r : scales) {
    auto comps = chain_components(X, r, strict);
    DimZeroScaleReport<S> rep;
    rep.r = r;
    rep.components_bounded = true;
    for (size_t c = 0; c < comps.classes.size(); ++c) {
      if (!leq_tol(comps.diameters[c], S(C * r))) {
        rep.components_bounded = false;
        rep.witness = comps.classes[c];
        rep.witness_diameter = comps.diameters[c];
        break;
      }
    }
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace nagata
