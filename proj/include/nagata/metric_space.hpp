#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "nagata/scalar.hpp"

namespace nagata {

template <typename S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using DenseVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <typename S>
using RowVector = Eigen::Matrix<S, 1, Eigen::Dynamic>;

enum class NormTag { L1, L2 };

inline const char* norm_name(NormTag tag) { return tag == NormTag::L1 ? "l1" : "l2"; }

// Table shape problems are structural, kept apart from metric-axiom failures.
struct StructuralError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class MetricAxiom {
  NonzeroDiagonal,
  NonpositiveOffDiagonal,
  Asymmetry,
  TriangleInequality,
};

inline const char* axiom_name(MetricAxiom a) {
  switch (a) {
    case MetricAxiom::NonzeroDiagonal: return "nonzero_diagonal";
    case MetricAxiom::NonpositiveOffDiagonal: return "nonpositive_off_diagonal";
    case MetricAxiom::Asymmetry: return "asymmetry";
    case MetricAxiom::TriangleInequality: return "triangle_inequality";
  }
  return "unknown";
}

template <typename S>
struct MetricViolation {
  MetricAxiom axiom;
  std::array<int, 3> points{-1, -1, -1};  // unused slots stay -1
  S amount{};                             // size of the breach
};

// A finite metric space: labelled points plus a symmetric distance table.
// Immutable after construction; all operations are free functions returning
// fresh values.
template <typename S>
class FiniteMetricSpace {
 public:
  using Matrix = DenseMatrix<S>;

  FiniteMetricSpace(std::vector<std::string> labels, Matrix dist)
      : labels_(std::move(labels)), dist_(std::move(dist)) {
    if (labels_.empty()) throw StructuralError("empty space");
    if (dist_.rows() != dist_.cols())
      throw StructuralError("distance table is not square");
    if (static_cast<size_t>(dist_.rows()) != labels_.size())
      throw StructuralError("distance table size does not match label count");
    for (size_t i = 0; i < labels_.size(); ++i) {
      if (!index_.emplace(labels_[i], static_cast<int>(i)).second)
        throw StructuralError("duplicate label: " + labels_[i]);
    }
  }

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(static_cast<size_t>(i)); }
  const std::vector<std::string>& labels() const { return labels_; }

  int index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw std::out_of_range("unknown label: " + label);
    return it->second;
  }

  const S& operator()(int i, int j) const { return dist_(i, j); }
  const Matrix& table() const { return dist_; }

 private:
  std::vector<std::string> labels_;
  Matrix dist_;
  std::unordered_map<std::string, int> index_;
};

// Every broken (axiom, witness) pair; empty iff the table is a metric.
template <typename S>
std::vector<MetricViolation<S>> validate(const FiniteMetricSpace<S>& X) {
  const S tau = comparison_tolerance<S>();
  std::vector<MetricViolation<S>> out;
  const int n = X.size();
  for (int i = 0; i < n; ++i) {
    if (scalar_abs(X(i, i)) > tau)
      out.push_back({MetricAxiom::NonzeroDiagonal, {i, -1, -1}, X(i, i)});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (X(i, j) <= tau)
        out.push_back({MetricAxiom::NonpositiveOffDiagonal, {i, j, -1}, X(i, j)});
      S gap = X(i, j) - X(j, i);
      if (scalar_abs(gap) > tau)
        out.push_back({MetricAxiom::Asymmetry, {i, j, -1}, gap});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = j + 1; k < n; ++k) {
        if (k == i) continue;
        S excess = X(j, k) - (X(j, i) + X(i, k));
        if (excess > tau)
          out.push_back({MetricAxiom::TriangleInequality, {j, i, k}, excess});
      }
    }
  }
  return out;
}

template <typename S>
bool is_valid_metric(const FiniteMetricSpace<S>& X) {
  return validate(X).empty();
}

// Kills small scale: off-diagonal entries become max(d, eps).
template <typename S>
FiniteMetricSpace<S> transform_max(const FiniteMetricSpace<S>& X, const S& eps) {
  if (!(eps > S(0))) throw std::invalid_argument("transform_max: eps must be positive");
  DenseMatrix<S> m = X.table();
  for (int i = 0; i < X.size(); ++i)
    for (int j = 0; j < X.size(); ++j)
      if (i != j) m(i, j) = std::max(m(i, j), eps);
  return FiniteMetricSpace<S>(X.labels(), std::move(m));
}

// Kills large scale: off-diagonal entries become min(d, eps).
template <typename S>
FiniteMetricSpace<S> transform_min(const FiniteMetricSpace<S>& X, const S& eps) {
  if (!(eps > S(0))) throw std::invalid_argument("transform_min: eps must be positive");
  DenseMatrix<S> m = X.table();
  for (int i = 0; i < X.size(); ++i)
    for (int j = 0; j < X.size(); ++j)
      if (i != j) m(i, j) = std::min(m(i, j), eps);
  return FiniteMetricSpace<S>(X.labels(), std::move(m));
}

template <typename S>
bool tables_equal(const DenseMatrix<S>& a, const DenseMatrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <typename S>
S diameter(const FiniteMetricSpace<S>& X) {
  S d(0);
  for (int i = 0; i < X.size(); ++i)
    for (int j = i + 1; j < X.size(); ++j) d = std::max(d, X(i, j));
  return d;
}

// Smallest off-diagonal entry; the delta of delta-discreteness (exposed as the
// exact min positive distance). Empty for singletons.
template <typename S>
std::optional<S> min_positive_distance(const FiniteMetricSpace<S>& X) {
  std::optional<S> best;
  for (int i = 0; i < X.size(); ++i)
    for (int j = i + 1; j < X.size(); ++j)
      if (!best || X(i, j) < *best) best = X(i, j);
  return best;
}

template <typename S>
FiniteMetricSpace<S> subspace(const FiniteMetricSpace<S>& X, const std::vector<int>& points) {
  if (points.empty()) throw StructuralError("empty subspace");
  std::vector<std::string> labels;
  labels.reserve(points.size());
  DenseMatrix<S> m(points.size(), points.size());
  for (size_t a = 0; a < points.size(); ++a) {
    labels.push_back(X.label(points[a]));
    for (size_t b = 0; b < points.size(); ++b) m(a, b) = X(points[a], points[b]);
  }
  return FiniteMetricSpace<S>(std::move(labels), std::move(m));
}

template <typename S>
S set_diameter(const FiniteMetricSpace<S>& X, const std::vector<int>& pts) {
  S d(0);
  for (size_t a = 0; a < pts.size(); ++a)
    for (size_t b = a + 1; b < pts.size(); ++b) d = std::max(d, X(pts[a], pts[b]));
  return d;
}

// dist(A, B) = min over pairs; +infinity when either side is empty.
template <typename S>
ExtValue<S> set_distance(const FiniteMetricSpace<S>& X, const std::vector<int>& A,
                         const std::vector<int>& B) {
  ExtValue<S> best = ExtValue<S>::inf();
  for (int a : A)
    for (int b : B) best = ExtValue<S>::min(best, ExtValue<S>::of(X(a, b)));
  return best;
}

// dist(x, A); +infinity for empty A.
template <typename S>
ExtValue<S> point_set_distance(const FiniteMetricSpace<S>& X, int x, const std::vector<int>& A) {
  ExtValue<S> best = ExtValue<S>::inf();
  for (int a : A) best = ExtValue<S>::min(best, ExtValue<S>::of(X(x, a)));
  return best;
}

// Open ball B(x, r) = { y : d(x,y) < r }.
template <typename S>
std::vector<int> open_ball(const FiniteMetricSpace<S>& X, int x, const S& r) {
  std::vector<int> out;
  for (int y = 0; y < X.size(); ++y)
    if (X(x, y) < r) out.push_back(y);
  return out;
}

// ---- l1 / l2 geometry on coordinate vectors ----

template <typename S>
S norm_l1(const RowVector<S>& v) {
  S s(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) s += scalar_abs(v(i));
  return s;
}

template <typename S>
S norm_l2_sq(const RowVector<S>& v) {
  S s(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) s += v(i) * v(i);
  return s;
}

// l2 norms need a square root, so they are float-only; exact pipelines compare
// squares instead.
template <typename S>
S norm_l2(const RowVector<S>& v) {
  static_assert(std::is_floating_point_v<S>, "l2 norm values require a floating scalar");
  return std::sqrt(norm_l2_sq(v));
}

template <typename S>
S vector_norm(const RowVector<S>& v, NormTag tag) {
  if (tag == NormTag::L1) return norm_l1(v);
  if constexpr (std::is_floating_point_v<S>) {
    return norm_l2(v);
  } else {
    throw std::invalid_argument("l2 norm values are unavailable in exact mode; use l1");
  }
}

template <typename S>
S vector_distance(const RowVector<S>& a, const RowVector<S>& b, NormTag tag) {
  if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
  RowVector<S> d = a - b;
  return vector_norm(d, tag);
}

// Materializes the metric of a point cloud (rows = points) under l1 or l2.
template <typename S>
FiniteMetricSpace<S> space_from_points(const DenseMatrix<S>& points, NormTag tag,
                                       std::vector<std::string> labels = {}) {
  const int n = static_cast<int>(points.rows());
  if (labels.empty()) {
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  }
  DenseMatrix<S> m = DenseMatrix<S>::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RowVector<S> diff = points.row(i) - points.row(j);
      S d = tag == NormTag::L1 ? norm_l1(diff) : [&] {
        if constexpr (std::is_floating_point_v<S>) {
          return norm_l2(diff);
        } else {
          throw std::invalid_argument("l2 point clouds require float mode");
          return S(0);
        }
      }();
      m(i, j) = d;
      m(j, i) = d;
    }
  return FiniteMetricSpace<S>(std::move(labels), std::move(m));
}

}  // namespace nagata
