#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "nagata/cover.hpp"
#include "nagata/maps.hpp"

namespace nagata {

inline constexpr int kMaxNerveDimension = 25;  // combinatorial explosion guard

// Nerve of a cover: one vertex per element, a simplex per subfamily with a
// common point. Downward closed by construction.
struct NerveComplex {
  int vertex_count = 0;
  std::vector<std::vector<int>> simplices;       // sorted vertex lists, incl. singletons
  std::vector<std::vector<int>> point_support;   // T(x) per point: maximal simplex at x
  int dimension = -1;

  bool has_simplex(const std::vector<int>& verts) const {
    return std::binary_search(simplices.begin(), simplices.end(), verts);
  }

  std::vector<std::vector<int>> simplices_of_size(size_t k) const {
    std::vector<std::vector<int>> out;
    for (const auto& s : simplices)
      if (s.size() == k) out.push_back(s);
    return out;
  }
};

template <typename S>
NerveComplex build_nerve(const Cover<S>& U) {
  NerveComplex N;
  N.vertex_count = U.element_count();
  auto in = membership(U);
  const int n = U.space->size();
  N.point_support.assign(static_cast<size_t>(n), {});
  std::set<std::vector<int>> simp;
  for (int x = 0; x < n; ++x) {
    std::vector<int>& T = N.point_support[static_cast<size_t>(x)];
    for (int s = 0; s < U.element_count(); ++s)
      if (in[static_cast<size_t>(s)][static_cast<size_t>(x)]) T.push_back(s);
    if (static_cast<int>(T.size()) - 1 > kMaxNerveDimension)
      throw std::invalid_argument("nerve dimension exceeds guard");
    // all nonempty subsets of T(x)
    const size_t m = T.size();
    for (size_t mask = 1; mask < (size_t(1) << m); ++mask) {
      std::vector<int> face;
      for (size_t b = 0; b < m; ++b)
        if (mask & (size_t(1) << b)) face.push_back(T[b]);
      simp.insert(std::move(face));
    }
  }
  N.simplices.assign(simp.begin(), simp.end());
  for (const auto& s : N.simplices)
    N.dimension = std::max(N.dimension, static_cast<int>(s.size()) - 1);
  return N;
}

// A point of a simplex: barycentric weights over the cover's elements.
template <typename S>
struct SimplexPoint {
  RowVector<S> weights;
  NormTag tag = NormTag::L1;
};

// Rows = points of X, columns = cover elements; row x holds the barycentric
// coordinates of phi(x).
template <typename S>
struct BarycentricMap {
  DenseMatrix<S> weights;
  NormTag tag = NormTag::L1;
};

// phi_s(x) = f_s(x) / sum_t f_t(x). Elements equal to the whole space have
// f_s = +infinity; the limit convention puts all weight on those vertices
// (split evenly if several).
template <typename S>
BarycentricMap<S> barycentric_map(const Cover<S>& U, NormTag tag = NormTag::L1,
                                  const LebesgueProfile<S>* profile = nullptr) {
  LebesgueProfile<S> local_profile;
  if (profile == nullptr) {
    local_profile = lebesgue_profile(U);
    profile = &local_profile;
  }
  const int n = U.space->size();
  const int k = U.element_count();
  BarycentricMap<S> out;
  out.tag = tag;
  out.weights = DenseMatrix<S>::Zero(n, k);
  for (int x = 0; x < n; ++x) {
    std::vector<int> infinite;
    S denom(0);
    for (int s = 0; s < k; ++s) {
      const auto& v = profile->f[static_cast<size_t>(s)][static_cast<size_t>(x)];
      if (v.infinite)
        infinite.push_back(s);
      else
        denom += v.value;
    }
    if (!infinite.empty()) {
      S w = S(1) / S(static_cast<int>(infinite.size()));
      for (int s : infinite) out.weights(x, s) = w;
      continue;
    }
    if (!(denom > S(0)))
      throw std::logic_error("barycentric denominator vanished: not a cover");
    for (int s = 0; s < k; ++s)
      out.weights(x, s) = profile->f[static_cast<size_t>(s)][static_cast<size_t>(x)].value / denom;
  }
  return out;
}

template <typename S>
S simplex_distance(const SimplexPoint<S>& p, const SimplexPoint<S>& q) {
  if (p.tag != q.tag) throw std::invalid_argument("simplex metric tag mismatch");
  return vector_distance<S>(p.weights, q.weights, p.tag);
}

template <typename S>
S row_distance(const DenseMatrix<S>& w, int a, int b, NormTag tag) {
  RowVector<S> diff = w.row(a) - w.row(b);
  return vector_norm(diff, tag);
}

// Checks a weight row is a simplex point: nonnegative, sums to 1, support a
// simplex of the nerve.
template <typename S>
bool is_simplex_point(const RowVector<S>& w, const NerveComplex& N) {
  const S tau = comparison_tolerance<S>();
  S sum(0);
  std::vector<int> support;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) < -tau) return false;
    sum += w(i);
    if (w(i) > S(0)) support.push_back(static_cast<int>(i));
  }
  if (scalar_abs(S(sum - S(1))) > tau * S(4)) return false;
  if (support.empty()) return false;
  return N.has_simplex(support);
}

// Measured Lipschitz constant of a point-indexed weight matrix.
template <typename S>
S barycentric_lipschitz(const FiniteMetricSpace<S>& X, const DenseMatrix<S>& w, NormTag tag) {
  S best(0);
  for (int a = 0; a < X.size(); ++a)
    for (int b = a + 1; b < X.size(); ++b) {
      if (!(X(a, b) > S(0))) continue;
      best = std::max(best, S(row_distance(w, a, b, tag) / X(a, b)));
    }
  return best;
}

template <typename S>
struct BarycentricBoundReport {
  S measured_lip{};
  bool vacuous = false;       // L(U) infinite: phi is constant, bound is moot
  S bound_paper{};            // 4 * mult_paper^2 / L
  S bound_open{};             // same with the open multiplicity count
  bool holds = false;         // measured <= paper bound
  bool holds_open = false;
  int mult_paper = 0;
  int mult_open = 0;
  ExtValue<S> lebesgue{};
};

// The 4 m(U)^2 / L(U) Lipschitz certificate for the barycentric map, computed
// under both multiplicity conventions.
template <typename S>
BarycentricBoundReport<S> verify_barycentric_bound(const Cover<S>& U, NormTag tag = NormTag::L1) {
  auto profile = lebesgue_profile(U);
  auto phi = barycentric_map(U, tag, &profile);
  BarycentricBoundReport<S> rep;
  rep.mult_paper = profile.mult_paper;
  rep.mult_open = profile.mult_open;
  rep.lebesgue = profile.global;
  rep.measured_lip = barycentric_lipschitz(*U.space, phi.weights, tag);
  if (!profile.global.is_finite()) {
    rep.vacuous = true;
    rep.holds = rep.holds_open = true;
    return rep;
  }
  const S L = profile.global.value;
  if (!(L > S(0))) throw std::invalid_argument("cover has zero Lebesgue number");
  rep.bound_paper = S(4) * S(profile.mult_paper) * S(profile.mult_paper) / L;
  rep.bound_open = S(4) * S(profile.mult_open) * S(profile.mult_open) / L;
  rep.holds = leq_tol(rep.measured_lip, rep.bound_paper);
  rep.holds_open = leq_tol(rep.measured_lip, rep.bound_open);
  return rep;
}

// The cover { x : weight_v(x) > 0 } indexed by vertices with nonempty
// preimage; `kept` maps output elements back to vertex ids.
template <typename S>
struct StarPreimages {
  Cover<S> cover;
  std::vector<int> kept;
};

template <typename S>
StarPreimages<S> star_preimages(const FiniteMetricSpace<S>& X, const DenseMatrix<S>& weights) {
  std::vector<std::vector<int>> elems;
  std::vector<int> kept;
  for (int v = 0; v < weights.cols(); ++v) {
    std::vector<int> e;
    for (int x = 0; x < X.size(); ++x)
      if (weights(x, v) > S(0)) e.push_back(x);
    if (!e.empty()) {
      elems.push_back(std::move(e));
      kept.push_back(v);
    }
  }
  return {make_cover(X, std::move(elems)), std::move(kept)};
}

}  // namespace nagata
