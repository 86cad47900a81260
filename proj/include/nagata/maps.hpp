#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "nagata/metric_space.hpp"

namespace nagata {

// Partial map into the reals: values[k] is the image of domain[k].
template <typename S>
struct RealMap {
  std::vector<int> domain;
  std::vector<S> values;
  S lambda{};  // declared Lipschitz constant
};

// Partial map into R^n (rows of `values` are images), under l1 or l2.
template <typename S>
struct VectorMap {
  std::vector<int> domain;
  DenseMatrix<S> values;
  NormTag tag = NormTag::L1;
  S lambda{};
};

// Partial map into another finite metric space, by target point index.
template <typename S>
struct SpaceMap {
  const FiniteMetricSpace<S>* target = nullptr;
  std::vector<int> domain;
  std::vector<int> values;
};

// Exact max over pairs of d_Y(f(x),f(y)) / d_X(x,y); 0 on singletons.
// `target_dist(a, b)` is the image distance between domain positions a, b.
template <typename S, typename DistFn>
S map_lipschitz(const FiniteMetricSpace<S>& X, const std::vector<int>& domain,
                DistFn&& target_dist) {
  S best(0);
  for (size_t a = 0; a < domain.size(); ++a)
    for (size_t b = a + 1; b < domain.size(); ++b) {
      S dx = X(domain[a], domain[b]);
      if (!(dx > S(0))) continue;  // duplicate points: skip, validate() flags them
      best = std::max(best, S(target_dist(a, b) / dx));
    }
  return best;
}

template <typename S>
S lipschitz_constant(const FiniteMetricSpace<S>& X, const RealMap<S>& f) {
  return map_lipschitz(X, f.domain, [&](size_t a, size_t b) {
    return scalar_abs(S(f.values[a] - f.values[b]));
  });
}

template <typename S>
S lipschitz_constant(const FiniteMetricSpace<S>& X, const VectorMap<S>& f) {
  return map_lipschitz(X, f.domain, [&](size_t a, size_t b) {
    RowVector<S> diff = f.values.row(a) - f.values.row(b);
    return vector_norm(diff, f.tag);
  });
}

template <typename S>
S lipschitz_constant(const FiniteMetricSpace<S>& X, const SpaceMap<S>& f) {
  if (f.target == nullptr) throw std::invalid_argument("space map without target");
  return map_lipschitz(X, f.domain,
                       [&](size_t a, size_t b) { return (*f.target)(f.values[a], f.values[b]); });
}

template <typename S>
struct BiLipschitzBounds {
  S mu{};      // largest valid lower factor
  S lambda{};  // smallest valid upper factor
};

// For the identity between two metrics on the same labels: the extreme ratios
// mu <= d_B/d_A <= lambda over all pairs.
template <typename S>
BiLipschitzBounds<S> bilipschitz_bounds(const FiniteMetricSpace<S>& A,
                                        const FiniteMetricSpace<S>& B) {
  if (A.labels() != B.labels())
    throw std::invalid_argument("bilipschitz_bounds: label sets differ");
  bool any = false;
  S lo(0), hi(0);
  for (int i = 0; i < A.size(); ++i)
    for (int j = i + 1; j < A.size(); ++j) {
      if (!(A(i, j) > S(0))) continue;
      S ratio = B(i, j) / A(i, j);
      if (!any) {
        lo = hi = ratio;
        any = true;
      } else {
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
      }
    }
  if (!any) return {S(1), S(1)};  // singleton: any factors work, report (1,1)
  return {lo, hi};
}

}  // namespace nagata
