#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "nagata/corpus.hpp"
#include "nagata/dimension.hpp"
#include "nagata/extension.hpp"
#include "nagata/hyperbolic.hpp"
#include "nagata/json_io.hpp"
#include "nagata/oracles.hpp"
#include "nagata/parallel.hpp"
#include "nagata/report.hpp"
#include "nagata/sphere_ext.hpp"

namespace nagata {

struct CriterionResult {
  std::string name;
  int instances = 0;
  int failures = 0;
  double elapsed_ms = 0;
  json details = json::object();

  bool pass() const { return failures == 0 && instances > 0; }
};

namespace suites {

inline std::uint64_t instance_seed(std::uint64_t seed, int criterion, int instance) {
  return seed * 1000003ull + static_cast<std::uint64_t>(criterion) * 10007ull +
         static_cast<std::uint64_t>(instance);
}

// Random boundary-simplex values (one coordinate exactly zero per row).
template <typename S>
DenseMatrix<S> random_boundary_rows(SeededRng& rng, int rows, int k) {
  DenseMatrix<S> vals(rows, k);
  for (int a = 0; a < rows; ++a) {
    S sum(0);
    int zero_at = rng.uniform_int(0, k - 1);
    for (int c = 0; c < k; ++c) {
      S w = c == zero_at ? S(0) : rng.template rational<S>(0, 8, 8);
      vals(a, c) = w;
      sum += w;
    }
    if (!(sum > S(0))) {
      vals(a, (zero_at + 1) % k) = S(1);
      sum = S(1);
    }
    for (int c = 0; c < k; ++c) vals(a, c) = vals(a, c) / sum;
  }
  return vals;
}

// Cover with Lebesgue number at least r: closed r-neighborhoods of the
// nearest-seed partition into k parts.
template <typename S>
Cover<S> neighborhood_cover(SeededRng& rng, const FiniteMetricSpace<S>& X, int k, const S& r) {
  auto seeds = rng.distinct_subset(X.size(), std::min(k, X.size()));
  std::vector<std::vector<int>> parts(static_cast<size_t>(k));
  for (int x = 0; x < X.size(); ++x) {
    size_t best = 0;
    for (size_t s = 1; s < seeds.size(); ++s)
      if (X(x, seeds[s]) < X(x, seeds[best])) best = s;
    parts[best].push_back(x);
  }
  std::vector<std::vector<int>> elems;
  for (auto& p : parts) {
    if (p.empty()) p.push_back(seeds[0]);
    elems.push_back(closed_neighborhood(X, p, r));
  }
  return make_cover(X, std::move(elems));
}

// ---- criterion 1: inf-convolution extension, exact restriction and constant ----

inline CriterionResult mcshane_suite(std::uint64_t seed, int instances = 500) {
  CriterionResult out{"mcshane_restriction_and_constant_exact"};
  WallClock clock;
  std::vector<int> fail(static_cast<size_t>(instances), 0);
  parallel_for(instances, [&](int i) {
    SeededRng rng(instance_seed(seed, 1, i));
    auto pool = small_corpus<Rational>(rng.next(), 1, 20);
    const auto& X = pool[0];
    int a_size = rng.uniform_int(1, X.size());
    auto domain = rng.distinct_subset(X.size(), a_size);
    std::vector<Rational> vals;
    for (int a = 0; a < a_size; ++a) vals.push_back(rng.rational<Rational>(-8, 8, 16));
    RealMap<Rational> f{domain, vals, Rational(0)};
    f.lambda = lipschitz_constant(X, f);
    auto ext = mcshane_extend(X, f);
    bool ok = true;
    for (size_t a = 0; a < domain.size(); ++a)
      ok = ok && ext.values[static_cast<size_t>(domain[a])] == vals[a];
    RealMap<Rational> total{{}, {}, Rational(0)};
    total.domain.resize(static_cast<size_t>(X.size()));
    std::iota(total.domain.begin(), total.domain.end(), 0);
    total.values = ext.values;
    ok = ok && lipschitz_constant(X, total) <= f.lambda;

    // float mode twin at 1e-9
    DenseMatrix<double> md(X.size(), X.size());
    for (int p = 0; p < X.size(); ++p)
      for (int q = 0; q < X.size(); ++q) md(p, q) = to_double(X(p, q));
    FiniteMetricSpace<double> Xd(X.labels(), md);
    RealMap<double> fd{domain, {}, 0.0};
    for (const auto& v : vals) fd.values.push_back(to_double(v));
    fd.lambda = lipschitz_constant(Xd, fd);
    auto extd = mcshane_extend(Xd, fd);
    for (size_t a = 0; a < domain.size(); ++a)
      ok = ok && std::abs(extd.values[static_cast<size_t>(domain[a])] - fd.values[a]) <= 1e-9;
    RealMap<double> totald{total.domain, extd.values, 0.0};
    ok = ok && lipschitz_constant(Xd, totald) <= fd.lambda * (1 + 1e-9) + 1e-9;
    fail[static_cast<size_t>(i)] = ok ? 0 : 1;
  });
  out.instances = instances;
  out.failures = std::accumulate(fail.begin(), fail.end(), 0);
  out.elapsed_ms = clock.ms();
  return out;
}

// ---- criterion 2: extension into the simplex under both norms ----

inline CriterionResult convex_extension_suite(std::uint64_t seed, int instances = 200) {
  CriterionResult out{"simplex_extension_factor_bounds"};
  WallClock clock;
  std::vector<int> fail(static_cast<size_t>(instances), 0);
  parallel_for(instances, [&](int i) {
    SeededRng rng(instance_seed(seed, 2, i));
    auto pool = small_corpus<double>(rng.next(), 1, 14);
    const auto& X = pool[0];
    const int n = rng.uniform_int(2, 4);
    const NormTag tag = i % 2 == 0 ? NormTag::L2 : NormTag::L1;
    int a_size = rng.uniform_int(2, std::max(2, X.size() - 1));
    a_size = std::min(a_size, X.size());
    auto domain = rng.distinct_subset(X.size(), a_size);
    DenseMatrix<double> vals(a_size, n);
    for (int a = 0; a < a_size; ++a) {
      RowVector<double> raw(n);
      for (int c = 0; c < n; ++c) raw(c) = rng.uniform01();
      vals.row(a) = project_to_simplex<double>(raw);
    }
    VectorMap<double> f{domain, vals, tag, 0.0};
    f.lambda = lipschitz_constant(X, f);
    auto ext = extend_into_convex(X, f, ConvexBody<double>(StandardSimplex<double>{n}));
    std::vector<int> all(static_cast<size_t>(X.size()));
    std::iota(all.begin(), all.end(), 0);
    VectorMap<double> total{all, ext.values, tag, 0.0};
    double measured = lipschitz_constant(X, total);
    double factor = tag == NormTag::L2 ? std::sqrt(static_cast<double>(n))
                                       : static_cast<double>(n) * n;
    bool ok = measured <= factor * f.lambda * (1 + 1e-9) + 1e-12;
    for (int x = 0; x < X.size() && ok; ++x) {
      RowVector<double> row = ext.values.row(x);
      ok = body_contains<double>(row, ConvexBody<double>(StandardSimplex<double>{n}), 1e-9);
    }
    for (int a = 0; a < a_size && ok; ++a)
      for (int c = 0; c < n; ++c)
        ok = ok && ext.values(domain[static_cast<size_t>(a)], c) == vals(a, c);
    fail[static_cast<size_t>(i)] = ok ? 0 : 1;
  });
  out.instances = instances;
  out.failures = std::accumulate(fail.begin(), fail.end(), 0);
  out.elapsed_ms = clock.ms();
  return out;
}

// ---- criterion 3: the 4 m(U)^2 / L(U) barycentric certificate ----

inline CriterionResult barycentric_suite(std::uint64_t seed, int instances = 300) {
  CriterionResult out{"barycentric_bound_paper_convention"};
  WallClock clock;
  std::vector<int> fail(static_cast<size_t>(instances), 0);
  std::vector<int> open_holds(static_cast<size_t>(instances), 0);
  std::vector<int> vacuous(static_cast<size_t>(instances), 0);
  parallel_for(instances, [&](int i) {
    SeededRng rng(instance_seed(seed, 3, i));
    auto pool = small_corpus<Rational>(rng.next(), 1, 16);
    const auto& X = pool[0];
    auto U = random_cover(rng, X, rng.uniform_int(1, std::min(5, X.size())));
    auto rep = verify_barycentric_bound(U, NormTag::L1);
    fail[static_cast<size_t>(i)] = rep.holds ? 0 : 1;
    open_holds[static_cast<size_t>(i)] = rep.holds_open ? 1 : 0;
    vacuous[static_cast<size_t>(i)] = rep.vacuous ? 1 : 0;
  });
  out.instances = instances;
  out.failures = std::accumulate(fail.begin(), fail.end(), 0);
  out.details["open_convention_holds"] = std::accumulate(open_holds.begin(), open_holds.end(), 0);
  out.details["vacuous_infinite_lebesgue"] = std::accumulate(vacuous.begin(), vacuous.end(), 0);
  out.elapsed_ms = clock.ms();
  return out;
}

// ---- criterion 4: the splice extension through a refinement oracle ----

inline CriterionResult splice_extension_suite(std::uint64_t seed, int instances = 100) {
  CriterionResult out{"sphere_extension_from_refinement"};
  WallClock clock;
  std::vector<int> fail(static_cast<size_t>(instances), 0);
  parallel_for(instances, [&](int i) {
    SeededRng rng(instance_seed(seed, 4, i));
    auto pool = small_corpus<double>(rng.next(), 1, 12);
    const auto& X = pool[0];
    const int m = i % 2;
    const int k = m + 2;
    const double s = convex_extension_factor<double>(k, NormTag::L1);
    const double min_dist = to_double(*min_positive_distance(X));

    int a_size = std::min(X.size(), rng.uniform_int(2, std::max(2, X.size() / 2)));
    auto domain = rng.distinct_subset(X.size(), a_size);
    DenseMatrix<double> f = random_boundary_rows<double>(rng, a_size, k);
    VectorMap<double> fv{domain, f, NormTag::L1, 0.0};
    double lambda = lipschitz_constant(X, fv);
    double lambda_floor = 1.0 / (36.0 * s * k * min_dist);
    if (lambda < lambda_floor) {
      // force a genuine jump so the window stays usable
      f.row(0) = RowVector<double>::Zero(k);
      f(0, 0) = 1.0;
      f.row(1) = RowVector<double>::Zero(k);
      f(1, 1) = 1.0;
      fv.values = f;
      lambda = lipschitz_constant(X, fv);
    }
    const double r_int = 1.0 / (12.0 * s * lambda * k);
    auto ref = refinement_oracle_from_search<double>(2.0, m,
                                                     ScaleWindow<double>{r_int / 2, r_int * 4});
    auto res = extension_from_refinement(ref, X, domain, f, lambda);
    bool ok = res.status == PipelineStatus::Ok && res.checks.all_pass();
    if (ok) {
      // re-verify the headline bounds independently of the pipeline records
      std::vector<int> all(static_cast<size_t>(X.size()));
      std::iota(all.begin(), all.end(), 0);
      VectorMap<double> total{all, res.values, NormTag::L1, 0.0};
      ok = lipschitz_constant(X, total) <= res.C * lambda * (1 + 1e-9);
      for (size_t a = 0; a < domain.size() && ok; ++a)
        for (int c = 0; c < k; ++c)
          ok = ok && res.values(domain[a], c) == f(static_cast<Eigen::Index>(a), c);
    }
    fail[static_cast<size_t>(i)] = ok ? 0 : 1;
  });
  out.instances = instances;
  out.failures = std::accumulate(fail.begin(), fail.end(), 0);
  out.elapsed_ms = clock.ms();
  return out;
}

// ---- criterion 5: refinement through a sphere-extension oracle ----

inline CriterionResult refinement_suite(std::uint64_t seed, int instances = 100) {
  CriterionResult out{"cover_refinement_from_extension"};
  WallClock clock;
  std::vector<int> fail(static_cast<size_t>(instances), 0);
  parallel_for(instances, [&](int i) {
    SeededRng rng(instance_seed(seed, 5, i));
    auto pool = small_corpus<double>(rng.next(), 1, 12);
    const auto& X = pool[0];
    const int m = i % 2;
    const int k = m + 2;
    const double s = convex_extension_factor<double>(k, NormTag::L1);
    double diam = to_double(diameter(X));
    double r = std::max(diam / rng.uniform_int(2, 6), 1e-3);
    auto U = neighborhood_cover(rng, X, k, r);
    const double lambda_phi = 4.0 * k * k / r;
    const double r_int = 1.0 / (12.0 * s * lambda_phi * k);
    auto ref = refinement_oracle_from_search<double>(2.0, m,
                                                     ScaleWindow<double>{r_int / 2, r_int * 4});
    auto sphere = sphere_oracle_from_refinement(ref, m);
    auto res = refinement_from_extension(sphere, U, r);
    bool ok = res.status == PipelineStatus::Ok && res.checks.all_pass();
    if (ok) {
      auto prof = lebesgue_profile(res.refined);
      double t = 1.0 / (4.0 * sphere.C * k * k * (m + 1));
      ok = contained_indexwise(res.refined, U) && prof.mult_open <= m + 1 &&
           scale_le_ext(t * r, prof.global);
    }
    fail[static_cast<size_t>(i)] = ok ? 0 : 1;
  });
  out.instances = instances;
  out.failures = std::accumulate(fail.begin(), fail.end(), 0);
  out.elapsed_ms = clock.ms();
  return out;
}

// ---- criterion 6: the three-element lift ----

inline CriterionResult lift_suite(std::uint64_t seed, int instances = 100) {
  CriterionResult out{"lift_to_three_element_covers"};
  WallClock clock;
  std::vector<int> fail(static_cast<size_t>(instances), 0);
  parallel_for(instances, [&](int i) {
    SeededRng rng(instance_seed(seed, 6, i));
    auto pool = small_corpus<double>(rng.next(), 1, 14);
    const auto& X = pool[0];
    const double min_dist = to_double(*min_positive_distance(X));
    double s_scale = std::min(to_double(diameter(X)) / 2.0, 12.0 * min_dist * 0.9);
    s_scale = std::max(s_scale, min_dist / 2);
    auto W = neighborhood_cover(rng, X, 3, s_scale);
    auto ref = refinement_oracle_from_search<double>(
        2.0, 0, ScaleWindow<double>{s_scale / 8, s_scale});
    auto res = lift_refinement(ref, W, s_scale);
    bool ok = res.status == PipelineStatus::Ok && res.checks.all_pass();
    if (ok) {
      auto prof = lebesgue_profile(res.refined);
      ok = prof.mult_open <= 2 && scale_le_ext(res.t * s_scale, prof.global) &&
           contained_indexwise(res.refined, W);
    }
    fail[static_cast<size_t>(i)] = ok ? 0 : 1;
  });
  out.instances = instances;
  out.failures = std::accumulate(fail.begin(), fail.end(), 0);
  out.elapsed_ms = clock.ms();
  return out;
}

// ---- criterion 7: nerve surgery on grids and trees ----

inline CriterionResult surgery_suite(std::uint64_t seed, int instances = 30) {
  CriterionResult out{"nerve_surgery_multiplicity_drop"};
  WallClock clock;
  std::vector<int> fail(static_cast<size_t>(instances), 0);
  parallel_for(instances, [&](int i) {
    SeededRng rng(instance_seed(seed, 7, i));
    const int n = 1;
    std::optional<FamilyDecomposition<double>> D;
    std::optional<FiniteMetricSpace<double>> space;
    if (i % 2 == 0) {
      int w = rng.uniform_int(4, 6), h = rng.uniform_int(4, 6);
      int b = rng.uniform_int(1, 2);
      space = grid_space<double>(w, h, GridNorm::L1);
      std::vector<std::vector<int>> blocks;
      std::vector<int> family;
      for (int by = 0; by * b < h; ++by)
        for (int bx = 0; bx * b < w; ++bx) {
          std::vector<int> block;
          for (int y = b * by; y < std::min(h, b * by + b); ++y)
            for (int x = b * bx; x < std::min(w, b * bx + b); ++x) block.push_back(y * w + x);
          blocks.push_back(block);
          family.push_back((bx + by) % 3);
        }
      D = FamilyDecomposition<double>{make_cover(*space, blocks), family, 3,
                                      static_cast<double>(b)};
    } else {
      space = tree_space<double>(rng, rng.uniform_int(8, 12), 2);
      double r = rng.uniform_int(1, 2);
      auto found = find_decomposition(*space, r, 3.0, 2, SearchOptions{12, true, false});
      if (found.status != SearchStatus::Found) {
        fail[static_cast<size_t>(i)] = 1;
        return;
      }
      D = std::move(found.witness);
    }
    if (!check_decomposition(*D).is_valid) {
      fail[static_cast<size_t>(i)] = 1;
      return;
    }
    auto sphere = sphere_oracle_from_search<double>(2.0, n, ScaleWindow<double>{1e-9, 1e-3});
    auto res = nerve_surgery_refine(sphere, *D, 0.25,
                                    PipelineOptions<double>{NormTag::L1, true});
    bool ok = res.status == PipelineStatus::Ok;
    if (ok)
      for (const auto& rec : res.checks.records)
        if (rec.name == "result_multiplicity_le_n_plus_1" || rec.name == "result_lebesgue_ge_d" ||
            rec.name == "result_mesh_le_4cr" || rec.name == "pasting_consistent_on_shared_faces" ||
            rec.name == "cell_extension_lip_le_k_lambda")
          ok = ok && rec.pass;
    fail[static_cast<size_t>(i)] = ok ? 0 : 1;
  });
  out.instances = instances;
  out.failures = std::accumulate(fail.begin(), fail.end(), 0);
  out.elapsed_ms = clock.ms();
  return out;
}

// ---- criterion 8: hyperbolicity certificates over constructed towers ----

inline CriterionResult tower_suite(std::uint64_t seed, int instances = 50) {
  CriterionResult out{"tower_hyperbolicity_certificates"};
  WallClock clock;
  std::vector<int> fail(static_cast<size_t>(instances), 0);
  std::vector<double> max_delta(static_cast<size_t>(instances), 0.0);
  parallel_for(instances, [&](int i) {
    SeededRng rng(instance_seed(seed, 8, i));
    FiniteMetricSpace<double> X = [&]() -> FiniteMetricSpace<double> {
      switch (i % 5) {
        case 0: return path_space<double>(rng.uniform_int(6, 40));
        case 1: return weighted_path_space<double>(rng, rng.uniform_int(6, 24), 3);
        case 2: return tree_space<double>(rng, rng.uniform_int(8, 30), 2);
        case 3: {
          int w = rng.uniform_int(3, 6);
          return grid_space<double>(w, rng.uniform_int(3, 6), GridNorm::L1);
        }
        default: return uniform_space<double>(rng.uniform_int(4, 20), rng.uniform_int(1, 4));
      }
    }();
    int n = i % 5 == 4 ? 0 : (i % 5 == 3 ? 3 : 2);  // grids need the extra family
    auto res = build_tower(X, n, 3.0);
    bool ok = res.tower.has_value() && res.checks.all_pass();
    if (ok) {
      auto Dh = dh_metric(*res.tower);
      ok = validate(Dh).empty();
      double delta = 0;
      for (int b = 0; b < X.size() && ok; ++b) {
        auto rep = hyperbolicity_certificate(Dh, b);
        ok = rep.checks.all_pass();
        delta = std::max(delta, to_double(rep.delta_measured));
      }
      max_delta[static_cast<size_t>(i)] = delta;
      if (ok) {
        auto rows = coarse_equivalence_profile(X, Dh, *res.tower);
        for (const auto& row : rows) ok = ok && row.forward_ok && row.backward_ok;
      }
    }
    fail[static_cast<size_t>(i)] = ok ? 0 : 1;
  });
  out.instances = instances;
  out.failures = std::accumulate(fail.begin(), fail.end(), 0);
  out.details["max_delta_measured"] = *std::max_element(max_delta.begin(), max_delta.end());
  out.elapsed_ms = clock.ms();
  return out;
}

// ---- criterion 9: dimension oracle coherence ----

inline CriterionResult dimension_coherence_suite(std::uint64_t seed, int corpus_size = 40) {
  CriterionResult out{"dimension_oracle_coherence"};
  WallClock clock;
  auto corpus = small_corpus<Rational>(seed * 31 + 9, corpus_size, 12);
  std::vector<int> fail(corpus.size(), 0);
  parallel_for(static_cast<int>(corpus.size()), [&](int i) {
    SeededRng rng(instance_seed(seed, 9, i));
    const auto& X = corpus[static_cast<size_t>(i)];
    bool ok = true;
    Rational C(2);
    std::vector<Rational> scales{rng.rational<Rational>(1, 2, 2), rng.rational<Rational>(2, 5, 2)};
    std::sort(scales.begin(), scales.end());
    // greedy success implies exact success, scale by scale
    for (const Rational& r : scales)
      for (int n = 0; n <= 2; ++n) {
        auto greedy = find_decomposition_greedy(X, r, C, n);
        if (greedy && !find_decomposition_exact(X, r, C, n)) ok = false;
      }
    // subspace monotonicity
    if (X.size() >= 3) {
      auto subset = rng.distinct_subset(X.size(), rng.uniform_int(2, X.size() - 1));
      auto A = subspace(X, subset);
      DimQuery<Rational> qx{&X, C, scales, ScaleMode::Full, {}, {}};
      DimQuery<Rational> qa{&A, C, scales, ScaleMode::Full, {}, {}};
      auto rx = scale_range_dimension(qx);
      auto ra = scale_range_dimension(qa);
      if (!rx.n_exact || !ra.n_exact || *ra.n_exact > *rx.n_exact) ok = false;
    }
    // functor invariance via witness transport at matched scales
    if (X.size() >= 2) {
      Rational e1(1), e2(2);
      auto X1 = transform_max(X, e1);
      auto X2 = transform_max(X, e2);
      std::vector<Rational> macro_scales{Rational(3), Rational(6)};
      DimQuery<Rational> q1{&X1, C, macro_scales, ScaleMode::Full, {}, {}};
      auto rep1 = scale_range_dimension(q1);
      for (const auto& [idx, wit] : rep1.witnesses) {
        FamilyDecomposition<Rational> moved{Cover<Rational>{&X2, wit.cover.elements},
                                            wit.family_of, wit.family_count, wit.r};
        auto rep = check_decomposition(moved);
        if (!rep.is_valid || !leq_tol(rep.mesh, Rational((C + Rational(1)) * wit.r))) ok = false;
      }
      auto Xm1 = transform_min(X, Rational(4));
      auto Xm2 = transform_min(X, Rational(8));
      std::vector<Rational> micro_scales{Rational(1)};
      DimQuery<Rational> q2{&Xm1, C, micro_scales, ScaleMode::Full, {}, {}};
      auto rep2 = scale_range_dimension(q2);
      for (const auto& [idx, wit] : rep2.witnesses) {
        FamilyDecomposition<Rational> moved{Cover<Rational>{&Xm2, wit.cover.elements},
                                            wit.family_of, wit.family_count, wit.r};
        auto rep = check_decomposition(moved);
        if (!rep.is_valid || !leq_tol(rep.mesh, Rational((C + Rational(1)) * wit.r))) ok = false;
      }
    }
    // every witness verifies
    DimQuery<Rational> q{&X, C, scales, ScaleMode::Full, {}, {}};
    auto rep = scale_range_dimension(q);
    for (const auto& [idx, wit] : rep.witnesses)
      if (!check_decomposition(wit).is_valid) ok = false;
    fail[static_cast<size_t>(i)] = ok ? 0 : 1;
  });
  out.instances = static_cast<int>(corpus.size());
  out.failures = std::accumulate(fail.begin(), fail.end(), 0);
  out.elapsed_ms = clock.ms();
  return out;
}

// ---- criterion 10: dimension-zero certificate against the exact search ----

inline CriterionResult dim_zero_suite(std::uint64_t seed, int corpus_size = 40) {
  CriterionResult out{"dim_zero_certificate_agreement"};
  WallClock clock;
  auto corpus = small_corpus<Rational>(seed * 77 + 5, corpus_size, 12);
  std::vector<int> fail(corpus.size(), 0);
  parallel_for(static_cast<int>(corpus.size()), [&](int i) {
    SeededRng rng(instance_seed(seed, 10, i));
    const auto& X = corpus[static_cast<size_t>(i)];
    bool ok = true;
    for (int trial = 0; trial < 3; ++trial) {
      Rational r = rng.rational<Rational>(1, 5, 4);
      Rational C = Rational(rng.uniform_int(2, 4));
      auto cert = dim_zero_certificate(X, C, {r}, /*strict=*/true);
      bool exact = find_decomposition_exact(X, r, C, 0).has_value();
      if (cert[0].components_bounded != exact) ok = false;
    }
    fail[static_cast<size_t>(i)] = ok ? 0 : 1;
  });
  out.instances = static_cast<int>(corpus.size());
  out.failures = std::accumulate(fail.begin(), fail.end(), 0);
  out.elapsed_ms = clock.ms();
  return out;
}

}  // namespace suites

inline std::vector<CriterionResult> run_acceptance_suites(std::uint64_t seed, bool quick = false) {
  int f = quick ? 10 : 1;
  std::vector<CriterionResult> out;
  out.push_back(suites::mcshane_suite(seed, 500 / f));
  out.push_back(suites::convex_extension_suite(seed, 200 / f));
  out.push_back(suites::barycentric_suite(seed, 300 / f));
  out.push_back(suites::splice_extension_suite(seed, 100 / f));
  out.push_back(suites::refinement_suite(seed, 100 / f));
  out.push_back(suites::lift_suite(seed, 100 / f));
  out.push_back(suites::surgery_suite(seed, std::max(2, 30 / f)));
  out.push_back(suites::tower_suite(seed, 50 / f));
  out.push_back(suites::dimension_coherence_suite(seed, 40 / f));
  out.push_back(suites::dim_zero_suite(seed, 40 / f));
  return out;
}

}  // namespace nagata
