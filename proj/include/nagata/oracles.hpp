#pragma once

#include "nagata/dimension.hpp"
#include "nagata/sphere_ext.hpp"

namespace nagata {

// Refinement oracle backed by the decomposition search: at scale r it finds a
// decomposition into at most m+1 families at scale r/(C+1), expands it into a
// Lebesgue cover of mesh below r, and folds the pieces indexwise into the
// input cover. Works on whatever space the input cover lives on.
//
// Guarantee when the search succeeds and the input is r-Lebesgue:
//   t = 1/(4(C+1))   (expanded Lebesgue number shrink*rho with shrink = 1/4)
template <typename S>
RefinementOracle<S> refinement_oracle_from_search(const S& C, int m, ScaleWindow<S> window,
                                                  const SearchOptions& opts = {}) {
  RefinementOracle<S> oracle;
  oracle.t = S(1) / (S(4) * (C + S(1)));
  oracle.window = window;
  oracle.refine = [C, m, opts](const Cover<S>& U,
                               const S& r) -> std::optional<Cover<S>> {
    const auto& X = *U.space;
    const S rho = r / (C + S(1));
    auto found = find_decomposition(X, rho, C, m, opts);
    if (found.status != SearchStatus::Found) return std::nullopt;
    auto leb = decomposition_to_lebesgue_cover(*found.witness, S(1) / S(4));
    if (!leb.multiplicity_ok || !leb.lebesgue_ok) return std::nullopt;
    if (!(leb.profile.mesh < r)) return std::nullopt;

    // fold each fine element into the first input element containing it
    auto in = membership(U);
    std::vector<std::vector<int>> folded(static_cast<size_t>(U.element_count()));
    for (const auto& piece : leb.cover.elements) {
      int host = -1;
      for (int i = 0; i < U.element_count() && host < 0; ++i) {
        bool inside = true;
        for (int x : piece)
          if (!in[static_cast<size_t>(i)][static_cast<size_t>(x)]) {
            inside = false;
            break;
          }
        if (inside) host = i;
      }
      if (host < 0) return std::nullopt;  // input cover was not r-Lebesgue
      auto& dst = folded[static_cast<size_t>(host)];
      dst.insert(dst.end(), piece.begin(), piece.end());
    }
    return make_cover(X, std::move(folded), /*allow_empty=*/true);
  };
  return oracle;
}

// Refinement oracle replaying one known witness decomposition; valid only on
// that decomposition's space near its scale. The guarantee is measured at
// build time from the expanded cover.
template <typename S>
RefinementOracle<S> refinement_oracle_from_witness(const FamilyDecomposition<S>& D,
                                                   const S& shrink, ScaleWindow<S> window) {
  auto leb = decomposition_to_lebesgue_cover(D, shrink);
  if (!leb.multiplicity_ok || !leb.lebesgue_ok)
    throw std::invalid_argument("witness decomposition does not expand cleanly");
  S guaranteed = shrink * D.r;
  RefinementOracle<S> oracle;
  oracle.window = window;
  oracle.t = guaranteed / window.hi;  // L >= shrink*r_D >= t*r for r in the window
  Cover<S> expanded = leb.cover;
  S mesh = leb.profile.mesh;
  oracle.refine = [expanded, mesh](const Cover<S>& U,
                                   const S& r) -> std::optional<Cover<S>> {
    if (U.space != expanded.space) return std::nullopt;
    if (!(mesh < r)) return std::nullopt;
    auto in = membership(U);
    std::vector<std::vector<int>> folded(static_cast<size_t>(U.element_count()));
    for (const auto& piece : expanded.elements) {
      int host = -1;
      for (int i = 0; i < U.element_count() && host < 0; ++i) {
        bool inside = true;
        for (int x : piece)
          if (!in[static_cast<size_t>(i)][static_cast<size_t>(x)]) {
            inside = false;
            break;
          }
        if (inside) host = i;
      }
      if (host < 0) return std::nullopt;
      auto& dst = folded[static_cast<size_t>(host)];
      dst.insert(dst.end(), piece.begin(), piece.end());
    }
    return make_cover(*U.space, std::move(folded), /*allow_empty=*/true);
  };
  return oracle;
}

// Sphere-extension oracle that runs the splice pipeline on top of a
// search-backed refinement oracle built fresh for each call's space.
template <typename S>
SphereExtensionOracle<S> sphere_oracle_from_search(const S& C, int m, ScaleWindow<S> scale_window,
                                                   const PipelineOptions<S>& pipe_opts = {},
                                                   const SearchOptions& search_opts = {}) {
  RefinementOracle<S> ref = refinement_oracle_from_search(C, m, scale_window, search_opts);
  return sphere_oracle_from_refinement(ref, m, pipe_opts);
}

}  // namespace nagata
