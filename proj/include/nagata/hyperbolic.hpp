#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nagata/checks.hpp"
#include "nagata/cover.hpp"
#include "nagata/dimension.hpp"

namespace nagata {

// Increasing sequence of covers on one space: multiplicity capped by n+1,
// mesh and Lebesgue nondecreasing, 2*mesh(U_i) < L(U_{i+1}), and a total top
// level so every pair is eventually co-contained.
template <typename S>
struct CoverTower {
  const FiniteMetricSpace<S>* space = nullptr;
  std::vector<Cover<S>> levels;
  std::vector<LebesgueProfile<S>> profiles;
  int declared_n = 0;
};

template <typename S>
CheckList validate_tower(const CoverTower<S>& T) {
  CheckList checks;
  bool mult_ok = true, gap_ok = true, mono_ok = true;
  for (size_t i = 0; i < T.levels.size(); ++i) {
    if (T.profiles[i].mult_open > T.declared_n + 1) mult_ok = false;
    if (i + 1 < T.levels.size()) {
      const S two_mesh = S(2) * T.profiles[i].mesh;
      if (!(ExtValue<S>::of(two_mesh) < T.profiles[i + 1].global)) gap_ok = false;
      if (T.profiles[i + 1].mesh < T.profiles[i].mesh) mono_ok = false;
      if (T.profiles[i + 1].global < T.profiles[i].global) mono_ok = false;
    }
  }
  checks.add("levels_multiplicity_le_n_plus_1", mult_ok);
  checks.add("gap_two_mesh_below_next_lebesgue", gap_ok);
  checks.add("mesh_and_lebesgue_nondecreasing", mono_ok);
  bool total = !T.levels.empty();
  if (total) {
    const auto& top = T.levels.back();
    total = top.element_count() >= 1;
    bool whole = false;
    for (const auto& e : top.elements)
      if (static_cast<int>(e.size()) == T.space->size()) whole = true;
    total = total && whole;
  }
  checks.add("top_level_total", total);
  return checks;
}

template <typename S>
struct TowerBuildResult {
  std::optional<CoverTower<S>> tower;
  std::string error;  // blocking pair / certification failure when empty
  CheckList checks;
};

// Builds level covers from decompositions at geometrically growing scales,
// dropping candidates that break the 2*mesh < L gap or monotonicity, and
// finishing with the whole-space cover.
template <typename S>
TowerBuildResult<S> build_tower(const FiniteMetricSpace<S>& X, int n, const S& C,
                                const S& growth = S(4), const S& shrink = S(1) / S(4),
                                const SearchOptions& opts = {}) {
  TowerBuildResult<S> out;
  if (!(growth > S(1))) {
    out.error = "growth must exceed 1";
    return out;
  }
  CoverTower<S> T;
  T.space = &X;
  T.declared_n = n;

  auto push_level = [&](Cover<S> cover) -> bool {
    auto prof = lebesgue_profile(cover);
    if (!T.levels.empty()) {
      const auto& prev = T.profiles.back();
      if (!(ExtValue<S>::of(S(2) * prev.mesh) < prof.global)) return false;
      if (prof.mesh < prev.mesh) return false;
      if (prof.global < prev.global) return false;
    }
    T.levels.push_back(std::move(cover));
    T.profiles.push_back(std::move(prof));
    return true;
  };

  const S diam = diameter(X);
  if (X.size() == 1) {
    push_level(make_cover(X, {{0}}));
    out.tower = std::move(T);
    out.checks = validate_tower(*out.tower);
    return out;
  }

  S r = *min_positive_distance(X) / S(2);
  int guard = 0;
  while (r <= diam && guard++ < 256) {
    auto found = find_decomposition(X, r, C, n, opts);
    if (found.status != SearchStatus::Found) {
      out.error = "dimension certification failed at scale " + std::to_string(to_double(r));
      return out;
    }
    auto leb = convert_decomposition_to_lebesgue(*found.witness, shrink);
    push_level(leb.cover);  // gap-violating candidates are simply skipped
    r = r * growth;
  }
  // top level: the whole-space cover, Lebesgue number +infinity
  std::vector<int> everything(static_cast<size_t>(X.size()));
  std::iota(everything.begin(), everything.end(), 0);
  if (!push_level(make_cover(X, {everything}))) {
    out.error = "top level rejected: blocking pair mesh=" +
                std::to_string(to_double(T.profiles.back().mesh));
    return out;
  }
  out.tower = std::move(T);
  out.checks = validate_tower(*out.tower);
  return out;
}

// d_h(x, y) = the smallest level whose cover co-contains x and y (1-based).
template <typename S>
FiniteMetricSpace<S> dh_metric(const CoverTower<S>& T) {
  const auto& X = *T.space;
  const int n = X.size();
  DenseMatrix<S> m = DenseMatrix<S>::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int level = -1;
      for (size_t l = 0; l < T.levels.size() && level < 0; ++l)
        for (const auto& e : T.levels[l].elements)
          if (std::binary_search(e.begin(), e.end(), i) &&
              std::binary_search(e.begin(), e.end(), j)) {
            level = static_cast<int>(l) + 1;
            break;
          }
      if (level < 0)
        throw std::invalid_argument("tower is not total: pair " + X.label(i) + "," + X.label(j) +
                                    " never co-contained");
      m(i, j) = S(level);
      m(j, i) = S(level);
    }
  return FiniteMetricSpace<S>(X.labels(), std::move(m));
}

template <typename S>
struct HyperbolicReport {
  int basepoint = 0;
  DenseMatrix<S> gromov_products;  // (x|y) relative to the basepoint
  S delta_measured{};              // max over triples of (median product - min product)
  S side_defect{};                 // max over triples of (largest side - second side)
  S boundary_proxy_defect{};       // max of min(d(x,x0), d(y,x0)) - 2(x|y)
  CheckList checks;
};

// Exhaustive triple scan of the four-point condition, the triangle side
// property and the one-point-boundary proxy inequality.
template <typename S>
HyperbolicReport<S> hyperbolicity_certificate(const FiniteMetricSpace<S>& D, int basepoint = 0) {
  const int n = D.size();
  if (basepoint < 0 || basepoint >= n) throw std::out_of_range("bad basepoint");
  HyperbolicReport<S> rep;
  rep.basepoint = basepoint;
  rep.gromov_products = DenseMatrix<S>::Zero(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      rep.gromov_products(x, y) =
          (D(x, basepoint) + D(y, basepoint) - D(x, y)) / S(2);

  rep.delta_measured = S(0);
  rep.side_defect = S(0);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z) {
        S p[3] = {rep.gromov_products(x, y), rep.gromov_products(y, z),
                  rep.gromov_products(x, z)};
        std::sort(p, p + 3);
        rep.delta_measured = std::max(rep.delta_measured, S(p[1] - p[0]));
        S sides[3] = {D(x, y), D(y, z), D(x, z)};
        std::sort(sides, sides + 3);
        rep.side_defect = std::max(rep.side_defect, S(sides[2] - sides[1]));
      }

  rep.boundary_proxy_defect = S(0);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      S lhs = S(2) * rep.gromov_products(x, y);
      S rhs = std::min(D(x, basepoint), D(y, basepoint)) - S(2);
      rep.boundary_proxy_defect = std::max(rep.boundary_proxy_defect, S(rhs - lhs));
    }

  rep.checks.require_leq("side_defect_le_1", rep.side_defect, S(1));
  rep.checks.require_leq("four_point_delta_le_4", rep.delta_measured, S(4));
  rep.checks.require_leq("boundary_proxy_2xy_ge_min_minus_2", rep.boundary_proxy_defect, S(0));
  return rep;
}

template <typename S>
struct CoarseEquivalenceRow {
  int level = 0;
  S mesh{};              // mesh of the level in the original metric
  ExtValue<S> lebesgue;  // its Lebesgue number in the original metric
  bool forward_ok = true;   // d_h <= i implies d <= mesh(U_i)
  bool backward_ok = true;  // d < L(U_i) implies d_h <= i
};

// The two monotone control functions between d and d_h, checked pairwise per
// level. The backward implication uses the strict form d < L(U_i): at d = L
// the covering element is not forced in a finite space.
template <typename S>
std::vector<CoarseEquivalenceRow<S>> coarse_equivalence_profile(const FiniteMetricSpace<S>& X,
                                                                const FiniteMetricSpace<S>& Dh,
                                                                const CoverTower<S>& T) {
  if (X.labels() != Dh.labels())
    throw std::invalid_argument("coarse_equivalence_profile: label mismatch");
  std::vector<CoarseEquivalenceRow<S>> rows;
  for (size_t l = 0; l < T.levels.size(); ++l) {
    CoarseEquivalenceRow<S> row;
    row.level = static_cast<int>(l) + 1;
    row.mesh = T.profiles[l].mesh;
    row.lebesgue = T.profiles[l].global;
    for (int i = 0; i < X.size(); ++i)
      for (int j = i + 1; j < X.size(); ++j) {
        if (Dh(i, j) <= S(row.level) && !leq_tol(X(i, j), row.mesh)) row.forward_ok = false;
        if (ExtValue<S>::of(X(i, j)) < row.lebesgue && !(Dh(i, j) <= S(row.level)))
          row.backward_ok = false;
      }
    rows.push_back(std::move(row));
  }
  return rows;
}

// The dimension claim transported to (X, d_h): at integer scales r <= 4 the
// singleton cover works, above that the tower level floor(r) has mesh <= r
// and Lebesgue >= r/4 in d_h.
template <typename S>
CheckList dh_dimension_certificate(const FiniteMetricSpace<S>& Dh, const CoverTower<S>& T) {
  CheckList checks;
  const int top = static_cast<int>(T.levels.size());
  for (int r = 1; r <= top; ++r) {
    Cover<S> cover;
    std::vector<std::vector<int>> elems;
    if (r <= 4) {
      for (int x = 0; x < Dh.size(); ++x) elems.push_back({x});
    } else {
      elems = T.levels[static_cast<size_t>(r - 1)].elements;
    }
    cover = make_cover(Dh, std::move(elems));
    auto prof = lebesgue_profile(cover);
    bool mesh_ok = leq_tol(prof.mesh, S(r));
    bool leb_ok = scale_le_ext(S(S(r) / S(4)), prof.global);
    checks.add("dh_scale_" + std::to_string(r) + "_mesh_le_r", mesh_ok, to_double(prof.mesh),
               static_cast<double>(r));
    checks.add("dh_scale_" + std::to_string(r) + "_lebesgue_ge_quarter_r", leb_ok,
               prof.global.as_double(), static_cast<double>(r) / 4.0);
  }
  return checks;
}

}  // namespace nagata
