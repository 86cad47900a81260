#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "nagata/metric_space.hpp"

namespace nagata {

// Indexed family of point subsets of one space. User-facing covers have
// nonempty elements whose union is the whole point set; pipeline-internal
// pipelines may carry empty elements (an empty element contributes f_s = 0
// and never affects mesh).
template <typename S>
struct Cover {
  const FiniteMetricSpace<S>* space = nullptr;
  std::vector<std::vector<int>> elements;  // sorted point indices

  int element_count() const { return static_cast<int>(elements.size()); }
};

template <typename S>
std::vector<std::vector<bool>> membership(const Cover<S>& U) {
  std::vector<std::vector<bool>> in(U.elements.size(),
                                    std::vector<bool>(U.space->size(), false));
  for (size_t s = 0; s < U.elements.size(); ++s)
    for (int x : U.elements[s]) in[s][static_cast<size_t>(x)] = true;
  return in;
}

template <typename S>
Cover<S> make_cover(const FiniteMetricSpace<S>& X, std::vector<std::vector<int>> elements,
                    bool allow_empty = false) {
  std::vector<bool> covered(X.size(), false);
  for (auto& e : elements) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.empty() && !allow_empty) throw std::invalid_argument("cover has an empty element");
    for (int x : e) {
      if (x < 0 || x >= X.size()) throw std::out_of_range("cover element point out of range");
      covered[static_cast<size_t>(x)] = true;
    }
  }
  if (std::find(covered.begin(), covered.end(), false) != covered.end())
    throw std::invalid_argument("elements do not cover the space");
  return Cover<S>{&X, std::move(elements)};
}

// The cover {B(x, r)} of open balls around every point.
template <typename S>
Cover<S> ball_cover(const FiniteMetricSpace<S>& X, const S& r) {
  std::vector<std::vector<int>> elems;
  elems.reserve(X.size());
  for (int x = 0; x < X.size(); ++x) elems.push_back(open_ball(X, x, r));
  return make_cover(X, std::move(elems));
}

// f_s(x) = dist(x, X \ U_s): 0 off the element, +infinity when U_s = X.
template <typename S>
ExtValue<S> boundary_distance(const Cover<S>& U, int s, int x) {
  if (s < 0 || s >= U.element_count()) throw std::out_of_range("bad element index");
  const auto& elem = U.elements[static_cast<size_t>(s)];
  std::vector<bool> in(U.space->size(), false);
  for (int p : elem) in[static_cast<size_t>(p)] = true;
  ExtValue<S> best = ExtValue<S>::inf();
  for (int y = 0; y < U.space->size(); ++y)
    if (!in[static_cast<size_t>(y)])
      best = ExtValue<S>::min(best, ExtValue<S>::of((*U.space)(x, y)));
  return best;
}

template <typename S>
struct LebesgueProfile {
  std::vector<ExtValue<S>> local;      // L_U(x) = max_s f_s(x)
  ExtValue<S> global;                  // L(U) = min_x local(x)
  S mesh{};                            // max element diameter
  std::vector<int> mult_open_local;    // |{s : f_s(x) > 0}| = |T(x)|
  int mult_open = 0;
  std::vector<int> mult_paper_local;   // 1 + |T(x)|
  int mult_paper = 0;
  // All per-element boundary distances, rows = elements, cols = points.
  std::vector<std::vector<ExtValue<S>>> f;
};

template <typename S>
LebesgueProfile<S> lebesgue_profile(const Cover<S>& U) {
  const int n = U.space->size();
  const int k = U.element_count();
  auto in = membership(U);
  LebesgueProfile<S> p;
  p.f.assign(static_cast<size_t>(k), std::vector<ExtValue<S>>(static_cast<size_t>(n)));
  for (int s = 0; s < k; ++s) {
    for (int x = 0; x < n; ++x) {
      ExtValue<S> best = ExtValue<S>::inf();
      for (int y = 0; y < n; ++y)
        if (!in[static_cast<size_t>(s)][static_cast<size_t>(y)])
          best = ExtValue<S>::min(best, ExtValue<S>::of((*U.space)(x, y)));
      p.f[static_cast<size_t>(s)][static_cast<size_t>(x)] = best;
    }
  }
  p.local.assign(static_cast<size_t>(n), ExtValue<S>::of(S(0)));
  p.mult_open_local.assign(static_cast<size_t>(n), 0);
  p.mult_paper_local.assign(static_cast<size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    ExtValue<S> loc = ExtValue<S>::of(S(0));
    int t = 0;
    for (int s = 0; s < k; ++s) {
      const auto& v = p.f[static_cast<size_t>(s)][static_cast<size_t>(x)];
      loc = ExtValue<S>::max(loc, v);
      if (v.infinite || v.value > S(0)) ++t;
    }
    p.local[static_cast<size_t>(x)] = loc;
    p.mult_open_local[static_cast<size_t>(x)] = t;
    p.mult_paper_local[static_cast<size_t>(x)] = 1 + t;
    p.mult_open = std::max(p.mult_open, t);
  }
  p.mult_paper = p.mult_open + 1;
  p.global = ExtValue<S>::inf();
  for (const auto& loc : p.local) p.global = ExtValue<S>::min(p.global, loc);
  p.mesh = S(0);
  for (const auto& e : U.elements) p.mesh = std::max(p.mesh, set_diameter(*U.space, e));
  return p;
}

// Shortcut for r <= L(U).
template <typename S>
bool is_r_lebesgue(const Cover<S>& U, const S& r) {
  return ExtValue<S>::of(r) <= lebesgue_profile(U).global;
}

// A cover grouped into families; elements of one family must sit at mutual
// set distance >= r (non-strict, the single global disjointness convention).
template <typename S>
struct FamilyDecomposition {
  Cover<S> cover;
  std::vector<int> family_of;  // per element, in [0, family_count)
  int family_count = 0;
  S r{};
};

template <typename S>
struct DecompositionReport {
  bool is_valid = true;
  // (family, element a, element b, their set distance) for the worst breach.
  std::optional<std::tuple<int, int, int, S>> violating_pair;
  S mesh{};
  S bound_ratio{};  // mesh / r, the empirical C
};

template <typename S>
DecompositionReport<S> check_decomposition(const FamilyDecomposition<S>& D) {
  DecompositionReport<S> rep;
  const auto& U = D.cover;
  if (static_cast<int>(D.family_of.size()) != U.element_count())
    throw std::invalid_argument("family assignment size mismatch");
  for (int a = 0; a < U.element_count(); ++a) {
    for (int b = a + 1; b < U.element_count(); ++b) {
      if (D.family_of[a] != D.family_of[b]) continue;
      auto d = set_distance(*U.space, U.elements[a], U.elements[b]);
      if (d < ExtValue<S>::of(D.r)) {
        rep.is_valid = false;
        if (!rep.violating_pair)
          rep.violating_pair = std::make_tuple(D.family_of[a], a, b, d.value);
      }
    }
  }
  rep.mesh = S(0);
  for (const auto& e : U.elements) rep.mesh = std::max(rep.mesh, set_diameter(*U.space, e));
  rep.bound_ratio = D.r > S(0) ? S(rep.mesh / D.r) : S(0);
  return rep;
}

// True iff every element of `fine` is a subset of some element of `coarse`.
template <typename S>
bool refines(const Cover<S>& fine, const Cover<S>& coarse) {
  if (fine.space != coarse.space) throw std::invalid_argument("refines: different spaces");
  auto in = membership(coarse);
  for (const auto& e : fine.elements) {
    bool found = false;
    for (size_t c = 0; c < coarse.elements.size() && !found; ++c) {
      bool subset = true;
      for (int x : e)
        if (!in[c][static_cast<size_t>(x)]) {
          subset = false;
          break;
        }
      found = subset;
    }
    if (!found) return false;
  }
  return true;
}

// Indexwise containment V_i subset of U_i: the shrinking relation the
// refinement pipelines produce (strictly stronger than refines).
template <typename S>
bool contained_indexwise(const Cover<S>& V, const Cover<S>& U) {
  if (V.element_count() != U.element_count()) return false;
  auto in = membership(U);
  for (int s = 0; s < V.element_count(); ++s)
    for (int x : V.elements[static_cast<size_t>(s)])
      if (!in[static_cast<size_t>(s)][static_cast<size_t>(x)]) return false;
  return true;
}

// Closed neighborhood { x : dist(x, E) <= radius }.
template <typename S>
std::vector<int> closed_neighborhood(const FiniteMetricSpace<S>& X, const std::vector<int>& E,
                                     const S& radius) {
  std::vector<int> out;
  for (int x = 0; x < X.size(); ++x) {
    auto d = point_set_distance(X, x, E);
    if (d.is_finite() && d.value <= radius) out.push_back(x);
  }
  return out;
}

template <typename S>
struct LebesgueCoverResult {
  Cover<S> cover;
  // post-hoc verified guarantees
  bool multiplicity_ok = false;  // mult_open <= family count
  bool lebesgue_ok = false;      // L >= shrink * r
  bool mesh_ok = false;          // mesh <= original mesh + 2 * shrink * r
  LebesgueProfile<S> profile;
};

// Expands a decomposition's elements into (shrink*r)-neighborhoods, turning an
// r-disjoint family structure into a cover with positive Lebesgue number. The
// guarantees are measured on the result, not assumed.
template <typename S>
LebesgueCoverResult<S> decomposition_to_lebesgue_cover(const FamilyDecomposition<S>& D,
                                                       const S& shrink) {
  if (!(shrink > S(0)) || !(shrink < S(1) / S(2)))
    throw std::invalid_argument("shrink must lie in (0, 1/2)");
  auto rep = check_decomposition(D);
  if (!rep.is_valid) throw std::invalid_argument("invalid decomposition");
  const auto& X = *D.cover.space;
  S radius = shrink * D.r;
  std::vector<std::vector<int>> elems;
  elems.reserve(D.cover.elements.size());
  for (const auto& e : D.cover.elements) elems.push_back(closed_neighborhood(X, e, radius));
  LebesgueCoverResult<S> out{make_cover(X, std::move(elems)), false, false, false, {}};
  out.profile = lebesgue_profile(out.cover);
  out.multiplicity_ok = out.profile.mult_open <= D.family_count;
  out.lebesgue_ok = ExtValue<S>::of(radius) <= out.profile.global;
  out.mesh_ok = out.profile.mesh <= rep.mesh + S(2) * radius;
  return out;
}

}  // namespace nagata
