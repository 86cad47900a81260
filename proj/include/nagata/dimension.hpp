#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nagata/cover.hpp"
#include "nagata/maps.hpp"
#include "nagata/sphere_ext.hpp"

namespace nagata {

inline constexpr int kExactSearchThreshold = 12;

enum class SearchStatus { Found, ProvedAbsent, Unknown };

template <typename S>
struct DecompositionSearch {
  SearchStatus status = SearchStatus::Unknown;
  std::optional<FamilyDecomposition<S>> witness;
};

struct SearchOptions {
  int exact_threshold = kExactSearchThreshold;
  bool force_exact = false;
  bool force_greedy = false;
};

namespace detail {

// Exhaustive family-coloring search. Within one family, points linked by a
// strict-(<r) chain must share an element, so elements are forced to be the
// chain components of each color class; feasibility is just their diameter.
template <typename S>
class ExactDecompositionSearch {
 public:
  ExactDecompositionSearch(const FiniteMetricSpace<S>& X, const S& r, const S& C, int n)
      : X_(X), r_(r), max_diam_(C * r), colors_(n + 1), color_of_(X.size(), -1) {}

  std::optional<FamilyDecomposition<S>> run() {
    if (assign(0, 0)) return build();
    return std::nullopt;
  }

 private:
  bool assign(int p, int used) {
    if (p == X_.size()) return true;
    int limit = std::min(colors_, used + 1);  // canonical color introduction
    for (int c = 0; c < limit; ++c) {
      color_of_[static_cast<size_t>(p)] = c;
      if (feasible(p, c) && assign(p + 1, std::max(used, c + 1))) return true;
      color_of_[static_cast<size_t>(p)] = -1;
    }
    return false;
  }

  // Diameter of the chain component of p within color class c (only points
  // assigned so far matter; later points can only merge components, and any
  // future merge re-runs this check at that point).
  bool feasible(int p, int c) {
    std::vector<int> comp{p};
    std::vector<bool> seen(static_cast<size_t>(X_.size()), false);
    seen[static_cast<size_t>(p)] = true;
    for (size_t head = 0; head < comp.size(); ++head) {
      int x = comp[head];
      for (int y = 0; y <= p; ++y) {
        if (seen[static_cast<size_t>(y)] || color_of_[static_cast<size_t>(y)] != c) continue;
        if (X_(x, y) < r_) {
          seen[static_cast<size_t>(y)] = true;
          comp.push_back(y);
        }
      }
    }
    return leq_tol(set_diameter(X_, comp), max_diam_);
  }

  FamilyDecomposition<S> build() const {
    // elements = chain components per color class
    std::vector<std::vector<int>> elems;
    std::vector<int> fam;
    std::vector<bool> done(static_cast<size_t>(X_.size()), false);
    for (int p = 0; p < X_.size(); ++p) {
      if (done[static_cast<size_t>(p)]) continue;
      int c = color_of_[static_cast<size_t>(p)];
      std::vector<int> comp{p};
      done[static_cast<size_t>(p)] = true;
      for (size_t head = 0; head < comp.size(); ++head)
        for (int y = 0; y < X_.size(); ++y)
          if (!done[static_cast<size_t>(y)] && color_of_[static_cast<size_t>(y)] == c &&
              X_(comp[head], y) < r_) {
            done[static_cast<size_t>(y)] = true;
            comp.push_back(y);
          }
      elems.push_back(std::move(comp));
      fam.push_back(c);
    }
    FamilyDecomposition<S> D{make_cover(X_, std::move(elems)), std::move(fam), colors_, r_};
    return D;
  }

  const FiniteMetricSpace<S>& X_;
  S r_, max_diam_;
  int colors_;
  std::vector<int> color_of_;
};

}  // namespace detail

template <typename S>
std::optional<FamilyDecomposition<S>> find_decomposition_exact(const FiniteMetricSpace<S>& X,
                                                               const S& r, const S& C, int n) {
  detail::ExactDecompositionSearch<S> search(X, r, C, n);
  return search.run();
}

// Net-and-color heuristic: maximal (C*r/2)-net, nearest-center clusters
// (ties to the lowest label), first-fit coloring under family r-disjointness.
// Failure proves nothing.
template <typename S>
std::optional<FamilyDecomposition<S>> find_decomposition_greedy(const FiniteMetricSpace<S>& X,
                                                                const S& r, const S& C, int n) {
  const S net_radius = C * r / S(2);
  std::vector<int> centers;
  for (int p = 0; p < X.size(); ++p) {
    bool separated = true;
    for (int c : centers)
      if (X(p, c) < net_radius) {
        separated = false;
        break;
      }
    if (separated) centers.push_back(p);
  }
  std::vector<std::vector<int>> clusters(centers.size());
  for (int p = 0; p < X.size(); ++p) {
    size_t best = 0;
    for (size_t c = 1; c < centers.size(); ++c)
      if (X(p, centers[c]) < X(p, centers[best])) best = c;
    clusters[best].push_back(p);
  }
  clusters.erase(std::remove_if(clusters.begin(), clusters.end(),
                                [](const auto& c) { return c.empty(); }),
                 clusters.end());
  for (const auto& cl : clusters)
    if (!leq_tol(set_diameter(X, cl), S(C * r))) return std::nullopt;

  std::vector<int> color(clusters.size(), -1);
  int used = 0;
  for (size_t i = 0; i < clusters.size(); ++i) {
    for (int c = 0; c <= n; ++c) {
      bool fits = true;
      for (size_t j = 0; j < i && fits; ++j)
        if (color[j] == c && set_distance(X, clusters[i], clusters[j]) < ExtValue<S>::of(r))
          fits = false;
      if (fits) {
        color[i] = c;
        used = std::max(used, c + 1);
        break;
      }
    }
    if (color[i] == -1) return std::nullopt;
  }
  FamilyDecomposition<S> D{make_cover(X, std::move(clusters)), std::move(color), n + 1, r};
  return D;
}

template <typename S>
DecompositionSearch<S> find_decomposition(const FiniteMetricSpace<S>& X, const S& r, const S& C,
                                          int n, const SearchOptions& opts = {}) {
  DecompositionSearch<S> out;
  bool exact = opts.force_exact || (!opts.force_greedy && X.size() <= opts.exact_threshold);
  if (exact) {
    auto w = find_decomposition_exact(X, r, C, n);
    if (w) {
      out.status = SearchStatus::Found;
      out.witness = std::move(w);
    } else {
      out.status = SearchStatus::ProvedAbsent;
    }
    return out;
  }
  auto w = find_decomposition_greedy(X, r, C, n);
  if (w) {
    out.status = SearchStatus::Found;
    out.witness = std::move(w);
  } else {
    out.status = SearchStatus::Unknown;
  }
  return out;
}

enum class ScaleMode { Full, Macro, Micro };

template <typename S>
struct DimQuery {
  const FiniteMetricSpace<S>* space = nullptr;
  S C{};
  std::vector<S> scales;  // positive, sorted
  ScaleMode mode = ScaleMode::Full;
  S mode_threshold{};  // the M of macro/micro
  SearchOptions search;
};

template <typename S>
struct DimReport {
  std::optional<int> n_exact;
  int upper_bound = -1;            // smallest n with all scales Found (-1: none up to cap)
  int lower_bound = 0;             // 1 + largest n with a proved absence
  std::vector<S> scales_in_scope;
  // witness decomposition per scale at the reported upper bound
  std::map<int, FamilyDecomposition<S>> witnesses;  // scale index -> witness
  bool every_scale_exact = true;
};

template <typename S>
std::vector<S> scales_in_scope(const DimQuery<S>& q) {
  std::vector<S> out;
  for (const S& r : q.scales) {
    if (q.mode == ScaleMode::Macro && !(r > q.mode_threshold)) continue;
    if (q.mode == ScaleMode::Micro && !(r < q.mode_threshold)) continue;
    out.push_back(r);
  }
  return out;
}

// Smallest n such that a decomposition is found at every scale in scope.
template <typename S>
DimReport<S> scale_range_dimension(const DimQuery<S>& q) {
  DimReport<S> rep;
  rep.scales_in_scope = scales_in_scope(q);
  const auto& X = *q.space;
  const int n_cap = std::max(0, X.size() - 1);  // singleton families always work at n = |X|-1
  for (int n = 0; n <= n_cap; ++n) {
    bool all_found = true;
    bool any_absent = false;
    std::map<int, FamilyDecomposition<S>> wits;
    for (size_t i = 0; i < rep.scales_in_scope.size(); ++i) {
      auto res = find_decomposition(X, rep.scales_in_scope[i], q.C, n, q.search);
      if (res.status == SearchStatus::Found) {
        wits.emplace(static_cast<int>(i), std::move(*res.witness));
      } else {
        all_found = false;
        if (res.status == SearchStatus::ProvedAbsent)
          any_absent = true;
        else
          rep.every_scale_exact = false;
        break;
      }
    }
    if (all_found) {
      rep.upper_bound = n;
      rep.witnesses = std::move(wits);
      break;
    }
    if (any_absent) rep.lower_bound = n + 1;
  }
  // exact iff every level below the answer carries a proved absence
  if (rep.upper_bound >= 0 && rep.lower_bound == rep.upper_bound) rep.n_exact = rep.upper_bound;
  return rep;
}

// ---- the three cover presentations, with measured constants ----

template <typename S>
struct LebesgueFormReport {  // presentation (2)
  Cover<S> cover;
  S r{};          // verified Lebesgue scale
  S c1{};         // measured mesh / r
  int multiplicity = 0;
};

template <typename S>
LebesgueFormReport<S> convert_decomposition_to_lebesgue(const FamilyDecomposition<S>& D,
                                                        const S& shrink) {
  auto res = decomposition_to_lebesgue_cover(D, shrink);
  LebesgueFormReport<S> rep{res.cover, shrink * D.r, S(0), res.profile.mult_open};
  if (rep.r > S(0)) rep.c1 = res.profile.mesh / rep.r;
  return rep;
}

template <typename S>
struct BallIntersectionReport {  // presentation (3)
  S ball_radius{};
  int max_elements_met = 0;  // measured over all ball centers
  S c2{};                    // mesh / ball_radius
  std::optional<int> worst_center;
};

template <typename S>
BallIntersectionReport<S> measure_ball_intersections(const Cover<S>& U, const S& ball_radius) {
  BallIntersectionReport<S> rep;
  rep.ball_radius = ball_radius;
  const auto& X = *U.space;
  S mesh(0);
  for (const auto& e : U.elements) mesh = std::max(mesh, set_diameter(X, e));
  rep.c2 = ball_radius > S(0) ? S(mesh / ball_radius) : S(0);
  for (int x = 0; x < X.size(); ++x) {
    auto ball = open_ball(X, x, ball_radius);
    int met = 0;
    for (const auto& e : U.elements) {
      bool hits = false;
      for (int p : ball) {
        if (std::binary_search(e.begin(), e.end(), p)) {
          hits = true;
          break;
        }
      }
      if (hits) ++met;
    }
    if (met > rep.max_elements_met) {
      rep.max_elements_met = met;
      rep.worst_center = x;
    }
  }
  return rep;
}

// Presentation (3) -> (1): first-fit coloring of elements under set-distance
// r-disjointness; the family count is measured, never assumed.
template <typename S>
FamilyDecomposition<S> split_cover_into_families(const Cover<S>& U, const S& r) {
  std::vector<int> color(U.elements.size(), -1);
  int used = 0;
  for (size_t i = 0; i < U.elements.size(); ++i) {
    for (int c = 0;; ++c) {
      bool fits = true;
      for (size_t j = 0; j < i && fits; ++j)
        if (color[j] == c &&
            set_distance(*U.space, U.elements[i], U.elements[j]) < ExtValue<S>::of(r))
          fits = false;
      if (fits) {
        color[i] = c;
        used = std::max(used, c + 1);
        break;
      }
    }
  }
  return FamilyDecomposition<S>{U, std::move(color), used, r};
}

// ---- union harness: measures, asserts nothing ----

template <typename S>
struct UnionHarnessReport {
  int dim_a = -1, dim_b = -1;           // exact dimensions of the two pieces
  int dim_union_at_c = -1;              // dimension of X at the base constant
  std::optional<S> sufficient_c;        // smallest tested C' with dim(X) <= max(dim_a, dim_b)
  std::vector<std::pair<double, int>> sweep;  // (C', dim) pairs measured
};

// How much constant inflation a union needs at finite scale: sweeps doubling
// constants and records where dim(A cup B) falls to max(dim A, dim B).
template <typename S>
UnionHarnessReport<S> union_dimension_harness(const FiniteMetricSpace<S>& X,
                                              const std::vector<int>& part_a,
                                              const std::vector<int>& part_b, const S& C,
                                              const std::vector<S>& scales, int doublings = 5,
                                              const SearchOptions& opts = {}) {
  UnionHarnessReport<S> rep;
  auto A = subspace(X, part_a);
  auto B = subspace(X, part_b);
  DimQuery<S> qa{&A, C, scales, ScaleMode::Full, S(0), opts};
  DimQuery<S> qb{&B, C, scales, ScaleMode::Full, S(0), opts};
  rep.dim_a = scale_range_dimension(qa).upper_bound;
  rep.dim_b = scale_range_dimension(qb).upper_bound;
  int target = std::max(rep.dim_a, rep.dim_b);
  S c_prime = C;
  for (int j = 0; j <= doublings; ++j) {
    DimQuery<S> qx{&X, c_prime, scales, ScaleMode::Full, S(0), opts};
    int d = scale_range_dimension(qx).upper_bound;
    if (j == 0) rep.dim_union_at_c = d;
    rep.sweep.emplace_back(to_double(c_prime), d);
    if (d >= 0 && d <= target && !rep.sufficient_c) rep.sufficient_c = c_prime;
    c_prime = c_prime * S(2);
  }
  return rep;
}

// ---- macroscopic / microscopic dimension ----

template <typename S>
struct ScaleModeDimensionReport {
  DimReport<S> restricted;    // on (X, d), scales beyond/below M
  DimReport<S> transformed;   // on the max/min transform, all scales, C+1
  // owns the transform so the transformed witnesses stay valid
  std::shared_ptr<const FiniteMetricSpace<S>> transformed_space;
  bool transported_restricted_witnesses = false;  // X -> transform transport valid
  bool transported_transform_witnesses = false;   // transform -> X transport valid
  std::vector<std::string> notes;
};

namespace detail {

template <typename S>
bool transport_witness(const FamilyDecomposition<S>& D, const FiniteMetricSpace<S>& target,
                       const S& r, const S& C) {
  FamilyDecomposition<S> moved{Cover<S>{&target, D.cover.elements}, D.family_of, D.family_count, r};
  auto rep = check_decomposition(moved);
  return rep.is_valid && leq_tol(rep.mesh, S(C * r));
}

}  // namespace detail

// Runs the restricted-scale query on (X, d) and the full query on the
// transformed space, then validates witness transport both ways (with the
// C -> C+1 slack; micro additionally respects the C*r < M guard).
template <typename S>
ScaleModeDimensionReport<S> scale_mode_dimension(const FiniteMetricSpace<S>& X, const S& C,
                                                 const std::vector<S>& scales, const S& M,
                                                 ScaleMode mode, const SearchOptions& opts = {}) {
  if (mode == ScaleMode::Full) throw std::invalid_argument("mode must be macro or micro");
  ScaleModeDimensionReport<S> rep;
  DimQuery<S> restricted{&X, C, scales, mode, M, opts};
  rep.restricted = scale_range_dimension(restricted);

  rep.transformed_space = std::make_shared<FiniteMetricSpace<S>>(
      mode == ScaleMode::Macro ? transform_max(X, M) : transform_min(X, M));
  const FiniteMetricSpace<S>& T = *rep.transformed_space;
  DimQuery<S> full{&T, C + S(1), scales, ScaleMode::Full, S(0), opts};
  rep.transformed = scale_range_dimension(full);

  // (X,d) witnesses move to the transform at the same scale with C+1.
  rep.transported_restricted_witnesses = true;
  for (const auto& [idx, wit] : rep.restricted.witnesses) {
    const S& r = rep.restricted.scales_in_scope[static_cast<size_t>(idx)];
    if (!detail::transport_witness(wit, T, r, C + S(1))) {
      rep.transported_restricted_witnesses = false;
      rep.notes.push_back("restricted witness failed transport at scale " +
                          std::to_string(to_double(r)));
    }
  }
  // Transform witnesses move back to (X,d) on the restricted side; in micro
  // mode only where C*r stays below M.
  rep.transported_transform_witnesses = true;
  for (const auto& [idx, wit] : rep.transformed.witnesses) {
    const S& r = rep.transformed.scales_in_scope[static_cast<size_t>(idx)];
    if (mode == ScaleMode::Macro && !(r > M)) continue;
    if (mode == ScaleMode::Micro && !(r < M && (C + S(1)) * r < M)) continue;
    if (!detail::transport_witness(wit, X, r, C + S(1))) {
      rep.transported_transform_witnesses = false;
      rep.notes.push_back("transform witness failed transport at scale " +
                          std::to_string(to_double(r)));
    }
  }
  return rep;
}

}  // namespace nagata
