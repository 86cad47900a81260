#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <variant>
#include <vector>

#include "nagata/maps.hpp"
#include "nagata/metric_space.hpp"

namespace nagata {

template <typename S>
struct McShaneResult {
  std::vector<S> values;   // one per point of X
  S lambda_used{};
  bool lambda_was_raised = false;  // declared constant was below the measured one
};

// f~(x) = min over a in A of (f(a) + lambda * d(x, a)). Restriction is exact
// and Lip(f~) <= lambda by the inf-convolution formula. A dishonest declared
// lambda is raised to the measured constant and flagged.
template <typename S>
McShaneResult<S> mcshane_extend(const FiniteMetricSpace<S>& X, const RealMap<S>& f) {
  if (f.domain.empty()) throw std::invalid_argument("mcshane_extend: empty domain");
  if (f.domain.size() != f.values.size())
    throw std::invalid_argument("mcshane_extend: domain/value size mismatch");
  McShaneResult<S> out;
  S measured = lipschitz_constant(X, f);
  out.lambda_used = f.lambda;
  if (measured > f.lambda) {
    out.lambda_used = measured;
    out.lambda_was_raised = true;
  }
  out.values.resize(static_cast<size_t>(X.size()));
  for (int x = 0; x < X.size(); ++x) {
    S best = f.values[0] + out.lambda_used * X(x, f.domain[0]);
    for (size_t a = 1; a < f.domain.size(); ++a)
      best = std::min(best, S(f.values[a] + out.lambda_used * X(x, f.domain[a])));
    out.values[static_cast<size_t>(x)] = best;
  }
  return out;
}

// The sup-form twin: f~(x) = max over a of (f(a) - lambda * d(x, a)). Also a
// valid lambda-Lipschitz extension; may differ pointwise from the inf form.
template <typename S>
McShaneResult<S> whitney_extend(const FiniteMetricSpace<S>& X, const RealMap<S>& f) {
  if (f.domain.empty()) throw std::invalid_argument("whitney_extend: empty domain");
  McShaneResult<S> out;
  S measured = lipschitz_constant(X, f);
  out.lambda_used = f.lambda;
  if (measured > f.lambda) {
    out.lambda_used = measured;
    out.lambda_was_raised = true;
  }
  out.values.resize(static_cast<size_t>(X.size()));
  for (int x = 0; x < X.size(); ++x) {
    S best = f.values[0] - out.lambda_used * X(x, f.domain[0]);
    for (size_t a = 1; a < f.domain.size(); ++a)
      best = std::max(best, S(f.values[a] - out.lambda_used * X(x, f.domain[a])));
    out.values[static_cast<size_t>(x)] = best;
  }
  return out;
}

// ---- convex bodies ----

// Standard simplex {w >= 0, sum w = 1} in R^n, or an axis box [lo, hi]^shape.
template <typename S>
struct StandardSimplex {
  int ambient_dim = 0;
};

template <typename S>
struct Box {
  RowVector<S> lo, hi;
};

template <typename S>
using ConvexBody = std::variant<StandardSimplex<S>, Box<S>>;

// Euclidean nearest point of the standard simplex, by sort-and-threshold.
// Exact with rational coordinates; idempotent; 1-Lipschitz in l2.
template <typename S>
RowVector<S> project_to_simplex(const RowVector<S>& v) {
  const Eigen::Index n = v.size();
  if (n == 0) throw std::invalid_argument("project_to_simplex: empty vector");
  std::vector<S> u(v.data(), v.data() + n);
  std::sort(u.begin(), u.end(), [](const S& a, const S& b) { return a > b; });
  S cumsum(0);
  S theta(0);
  int rho = 0;
  S running(0);
  for (Eigen::Index k = 0; k < n; ++k) {
    running += u[static_cast<size_t>(k)];
    S candidate = (running - S(1)) / S(static_cast<int>(k) + 1);
    if (u[static_cast<size_t>(k)] > candidate) {
      rho = static_cast<int>(k) + 1;
      cumsum = running;
    }
  }
  theta = (cumsum - S(1)) / S(rho);
  RowVector<S> w(n);
  for (Eigen::Index i = 0; i < n; ++i) w(i) = std::max(S(0), S(v(i) - theta));
  return w;
}

template <typename S>
RowVector<S> project_to_box(const RowVector<S>& v, const Box<S>& box) {
  if (v.size() != box.lo.size() || v.size() != box.hi.size())
    throw std::invalid_argument("project_to_box: dimension mismatch");
  RowVector<S> w(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    w(i) = std::min(box.hi(i), std::max(box.lo(i), v(i)));
  return w;
}

template <typename S>
RowVector<S> project_to_body(const RowVector<S>& v, const ConvexBody<S>& body) {
  if (std::holds_alternative<StandardSimplex<S>>(body)) return project_to_simplex(v);
  return project_to_box(v, std::get<Box<S>>(body));
}

template <typename S>
bool body_contains(const RowVector<S>& v, const ConvexBody<S>& body, const S& tau) {
  if (std::holds_alternative<StandardSimplex<S>>(body)) {
    S sum(0);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (v(i) < -tau) return false;
      sum += v(i);
    }
    return scalar_abs(S(sum - S(1))) <= tau * S(4);
  }
  const auto& box = std::get<Box<S>>(body);
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) < box.lo(i) - tau || v(i) > box.hi(i) + tau) return false;
  return true;
}

// The guaranteed extension factor for a lambda-Lipschitz map into a convex
// subset of (R^n, d_tag): sqrt(n) under l2, n^2 under l1.
template <typename S>
S convex_extension_factor(int ambient_dim, NormTag tag) {
  if (tag == NormTag::L1) return S(ambient_dim) * S(ambient_dim);
  return S(std::sqrt(static_cast<double>(ambient_dim)));
}

template <typename S>
struct ConvexExtensionResult {
  DenseMatrix<S> values;  // rows = all points of X
  S lambda_used{};
  S factor{};             // the s with Lip(result) <= s * lambda
  bool lambda_was_raised = false;
};

// Coordinatewise inf-convolution followed by nearest-point retraction onto the
// body. Under l2 the retraction is 1-Lipschitz and the result is
// sqrt(n)*lambda-Lipschitz; the l1 case routes through l2 and lands at
// n^2*lambda.
template <typename S>
ConvexExtensionResult<S> extend_into_convex(const FiniteMetricSpace<S>& X, const VectorMap<S>& f,
                                            const ConvexBody<S>& body) {
  if (f.domain.empty()) throw std::invalid_argument("extend_into_convex: empty domain");
  if (static_cast<size_t>(f.values.rows()) != f.domain.size())
    throw std::invalid_argument("extend_into_convex: domain/value size mismatch");
  const int n = static_cast<int>(f.values.cols());
  const S tau = comparison_tolerance<S>();
  for (Eigen::Index a = 0; a < f.values.rows(); ++a)
    if (!body_contains<S>(f.values.row(a), body, tau))
      throw std::invalid_argument("extend_into_convex: values leave the body");

  ConvexExtensionResult<S> out;
  out.factor = convex_extension_factor<S>(n, f.tag);
  S measured = lipschitz_constant(X, f);
  out.lambda_used = f.lambda;
  if (measured > f.lambda) {
    out.lambda_used = measured;
    out.lambda_was_raised = true;
  }

  // Coordinate maps of a lambda-Lipschitz map are lambda-Lipschitz under l2;
  // under l1 the same map viewed in l2 is sqrt(n)*lambda-Lipschitz, so its
  // coordinates get that constant.
  S coord_lambda = out.lambda_used;
  if (f.tag == NormTag::L1) {
    if constexpr (std::is_floating_point_v<S>) {
      coord_lambda = out.lambda_used * S(std::sqrt(static_cast<double>(n)));
    } else {
      throw std::invalid_argument("l1 convex extension requires float mode (sqrt factor)");
    }
  }

  DenseMatrix<S> hat(X.size(), n);
  for (int c = 0; c < n; ++c) {
    RealMap<S> coord{f.domain, {}, coord_lambda};
    coord.values.reserve(f.domain.size());
    for (size_t a = 0; a < f.domain.size(); ++a) coord.values.push_back(f.values(a, c));
    auto ext = mcshane_extend(X, coord);
    if (ext.lambda_was_raised) out.lambda_was_raised = true;
    for (int x = 0; x < X.size(); ++x) hat(x, c) = ext.values[static_cast<size_t>(x)];
  }
  out.values = DenseMatrix<S>(X.size(), n);
  for (int x = 0; x < X.size(); ++x)
    out.values.row(x) = project_to_body<S>(hat.row(x), body);
  // restriction must be exact: retraction fixes in-body values
  for (size_t a = 0; a < f.domain.size(); ++a) out.values.row(f.domain[a]) = f.values.row(a);
  return out;
}

}  // namespace nagata
