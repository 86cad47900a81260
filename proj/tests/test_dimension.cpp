#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nagata/dimension.hpp"
#include "test_helpers.hpp"

using namespace nagata;
using testutil::sample_spaces;

namespace {

// Unpruned enumeration of every family coloring; independent of the search.
template <typename S>
bool oracle_decomposition_exists(const FiniteMetricSpace<S>& X, const S& r, const S& C, int n) {
  const int N = X.size();
  const int colors = n + 1;
  std::vector<int> color(static_cast<size_t>(N), 0);
  auto valid = [&] {
    for (int c = 0; c < colors; ++c) {
      std::vector<int> members;
      for (int p = 0; p < N; ++p)
        if (color[static_cast<size_t>(p)] == c) members.push_back(p);
      std::vector<bool> done(members.size(), false);
      for (size_t i = 0; i < members.size(); ++i) {
        if (done[i]) continue;
        std::vector<int> comp{members[i]};
        done[i] = true;
        for (size_t head = 0; head < comp.size(); ++head)
          for (size_t j = 0; j < members.size(); ++j)
            if (!done[j] && X(comp[head], members[j]) < r) {
              done[j] = true;
              comp.push_back(members[j]);
            }
        if (!leq_tol(set_diameter(X, comp), S(C * r))) return false;
      }
    }
    return true;
  };
  while (true) {
    if (valid()) return true;
    int pos = N - 1;
    while (pos >= 0 && color[static_cast<size_t>(pos)] == colors - 1) {
      color[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return false;
    ++color[static_cast<size_t>(pos)];
  }
}

}  // namespace

TEST_CASE("small scales make singleton decompositions") {
  auto X = path_space<Rational>(5);
  auto res = find_decomposition(X, Rational(1) / Rational(2), Rational(2), 0);
  REQUIRE(res.status == SearchStatus::Found);
  auto rep = check_decomposition(*res.witness);
  CHECK(rep.is_valid);
  CHECK(res.witness->family_count == 1);
  CHECK(rep.mesh == Rational(0));
}

TEST_CASE("large C*r admits the whole space as one element") {
  auto X = path_space<Rational>(5);
  auto res = find_decomposition(X, Rational(3), Rational(2), 0);
  REQUIRE(res.status == SearchStatus::Found);
  CHECK(check_decomposition(*res.witness).is_valid);
  // single chain component of diameter 4 <= 6
  CHECK(res.witness->cover.element_count() == 1);
}

TEST_CASE("the 6-point path at r=2, C=1, n=0 is proved impossible") {
  auto X = path_space<Rational>(6);
  auto res = find_decomposition(X, Rational(2), Rational(1), 0);
  CHECK(res.status == SearchStatus::ProvedAbsent);
  CHECK(!oracle_decomposition_exists(X, Rational(2), Rational(1), 0));
}

TEST_CASE("exact search agrees with the unpruned enumeration on small spaces") {
  SeededRng rng(404);
  for (const auto& X : sample_spaces<Rational>(811, 10)) {
    if (X.size() > 8) continue;
    for (int n = 0; n <= 2; ++n) {
      Rational r = rng.rational<Rational>(1, 4, 2);
      Rational C = Rational(rng.uniform_int(1, 3));
      auto mine = find_decomposition_exact(X, r, C, n);
      bool expected = oracle_decomposition_exists(X, r, C, n);
      CHECK(mine.has_value() == expected);
      if (mine) {
        auto rep = check_decomposition(*mine);
        CHECK(rep.is_valid);
        CHECK(leq_tol(rep.mesh, Rational(C * r)));
        CHECK(mine->family_count <= n + 1);
      }
    }
  }
}

TEST_CASE("greedy witnesses always verify even when the search is heuristic") {
  SeededRng rng(73);
  for (const auto& X : sample_spaces<Rational>(902, 10)) {
    Rational r = rng.rational<Rational>(1, 3, 2);
    auto res = find_decomposition_greedy(X, r, Rational(3), 2);
    if (!res) continue;
    auto rep = check_decomposition(*res);
    CHECK(rep.is_valid);
    CHECK(leq_tol(rep.mesh, Rational(Rational(3) * r)));
  }
}

TEST_CASE("greedy success never contradicts the exact oracle") {
  SeededRng rng(515);
  for (const auto& X : sample_spaces<Rational>(733, 12)) {
    if (X.size() > 10) continue;
    Rational r = rng.rational<Rational>(1, 3, 2);
    Rational C(2);
    for (int n = 0; n <= 2; ++n) {
      auto greedy = find_decomposition_greedy(X, r, C, n);
      if (greedy) {
        auto exact = find_decomposition_exact(X, r, C, n);
        CHECK(exact.has_value());
      }
    }
  }
}

TEST_CASE("scale-range dimension of trivial spaces is zero") {
  FiniteMetricSpace<Rational> single({"a"}, DenseMatrix<Rational>::Zero(1, 1));
  DimQuery<Rational> q{&single, Rational(2), {Rational(1), Rational(2)}, ScaleMode::Full, {}, {}};
  auto rep = scale_range_dimension(q);
  CHECK(rep.n_exact == 0);

  auto U = uniform_space<Rational>(6, Rational(4));
  DimQuery<Rational> qu{&U, Rational(2), {Rational(1), Rational(2)}, ScaleMode::Full, {}, {}};
  auto rep_u = scale_range_dimension(qu);
  CHECK(rep_u.n_exact == 0);
}

TEST_CASE("the 4x4 unit grid has exact scale-range dimension 1 at C=2, scales {1,2}") {
  auto G = grid_space<Rational>(4, 4, GridNorm::L1);
  DimQuery<Rational> q{&G, Rational(2), {Rational(1), Rational(2)}, ScaleMode::Full, {},
                       SearchOptions{12, /*force_exact=*/true, false}};
  auto rep = scale_range_dimension(q);
  REQUIRE(rep.n_exact.has_value());
  CHECK(*rep.n_exact == 1);
  for (const auto& [idx, wit] : rep.witnesses) CHECK(check_decomposition(wit).is_valid);
}

TEST_CASE("every returned witness passes check_decomposition") {
  SeededRng rng(5601);
  for (const auto& X : sample_spaces<Rational>(622, 8)) {
    std::vector<Rational> scales{rng.rational<Rational>(1, 2, 2), rng.rational<Rational>(2, 4, 2)};
    std::sort(scales.begin(), scales.end());
    DimQuery<Rational> q{&X, Rational(2), scales, ScaleMode::Full, {}, {}};
    auto rep = scale_range_dimension(q);
    REQUIRE(rep.upper_bound >= 0);
    for (const auto& [idx, wit] : rep.witnesses) CHECK(check_decomposition(wit).is_valid);
  }
}

TEST_CASE("subspace monotonicity of the exact dimension") {
  SeededRng rng(8080);
  for (const auto& X : sample_spaces<Rational>(1012, 10)) {
    if (X.size() > 10 || X.size() < 3) continue;
    auto subset = rng.distinct_subset(X.size(), rng.uniform_int(2, X.size() - 1));
    auto A = subspace(X, subset);
    std::vector<Rational> scales{Rational(1), Rational(2)};
    DimQuery<Rational> qx{&X, Rational(2), scales, ScaleMode::Full, {}, {}};
    DimQuery<Rational> qa{&A, Rational(2), scales, ScaleMode::Full, {}, {}};
    auto rx = scale_range_dimension(qx);
    auto ra = scale_range_dimension(qa);
    REQUIRE(rx.n_exact.has_value());
    REQUIRE(ra.n_exact.has_value());
    CHECK(*ra.n_exact <= *rx.n_exact);
  }
}

TEST_CASE("conversion 1->2 produces a verified Lebesgue-form cover") {
  auto X = path_space<Rational>(6);
  auto found = find_decomposition(X, Rational(2), Rational(2), 1);
  REQUIRE(found.status == SearchStatus::Found);
  auto leb = convert_decomposition_to_lebesgue(*found.witness, Rational(1) / Rational(4));
  CHECK(is_r_lebesgue(leb.cover, leb.r));
  CHECK(leb.multiplicity <= 2);
  CHECK(leb.c1 >= Rational(0));
}

TEST_CASE("conversion 2->3 measures ball intersections") {
  auto X = path_space<Rational>(6);
  auto U = make_cover(X, {{0, 1, 2}, {2, 3, 4}, {4, 5}});
  auto rep = measure_ball_intersections(U, Rational(1));
  CHECK(rep.max_elements_met >= 1);
  CHECK(rep.max_elements_met <= 3);
  // whole-space cover: every ball meets the one element
  auto W = make_cover(X, {{0, 1, 2, 3, 4, 5}});
  CHECK(measure_ball_intersections(W, Rational(1)).max_elements_met == 1);
}

TEST_CASE("conversion 3->1 splits a cover into measured r-disjoint families") {
  auto X = path_space<Rational>(8);
  auto U = make_cover(X, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  auto D = split_cover_into_families(U, Rational(2));
  auto rep = check_decomposition(D);
  CHECK(rep.is_valid);
  CHECK(D.family_count == 2);  // neighbours alternate, distance 1 < 2
  auto singleton_dec = split_cover_into_families(make_cover(X, {{0, 1, 2, 3, 4, 5, 6, 7}}),
                                                 Rational(1));
  CHECK(singleton_dec.family_count == 1);
}

TEST_CASE("micro dimension of a bounded space equals the plain dimension") {
  SeededRng rng(31415);
  for (const auto& X : sample_spaces<Rational>(1102, 6)) {
    if (X.size() > 10 || X.size() < 2) continue;
    Rational M = diameter(X) * Rational(2);  // min(d, M) = d: genuinely bounded case
    std::vector<Rational> scales{Rational(1) / Rational(2), Rational(1), Rational(2)};
    auto rep = scale_mode_dimension(X, Rational(2), scales, M, ScaleMode::Micro);
    CHECK(rep.transported_restricted_witnesses);
    CHECK(rep.transported_transform_witnesses);
    // on the transformed space = original space the dimension can only drop
    if (rep.restricted.n_exact && rep.transformed.n_exact)
      CHECK(*rep.transformed.n_exact <= *rep.restricted.n_exact);
  }
}

TEST_CASE("macro dimension of a discrete space equals the plain dimension") {
  SeededRng rng(2718);
  for (const auto& X : sample_spaces<Rational>(1203, 6)) {
    if (X.size() > 10 || X.size() < 2) continue;
    Rational M = *min_positive_distance(X) / Rational(2);  // max(d, M) = d
    std::vector<Rational> scales{Rational(1), Rational(2), Rational(4)};
    auto rep = scale_mode_dimension(X, Rational(2), scales, M, ScaleMode::Macro);
    CHECK(rep.transported_restricted_witnesses);
    CHECK(rep.transported_transform_witnesses);
    if (rep.restricted.n_exact && rep.transformed.n_exact)
      CHECK(*rep.transformed.n_exact <= *rep.restricted.n_exact);
  }
}

TEST_CASE("both modes agree on the path at the median distance") {
  auto X = path_space<Rational>(8);
  std::vector<Rational> scales{Rational(1), Rational(2), Rational(4), Rational(7)};
  Rational M(3);
  auto macro = scale_mode_dimension(X, Rational(2), scales, M, ScaleMode::Macro);
  CHECK(macro.transported_restricted_witnesses);
  CHECK(macro.transported_transform_witnesses);
  auto micro = scale_mode_dimension(X, Rational(2), scales, M, ScaleMode::Micro);
  CHECK(micro.transported_restricted_witnesses);
  CHECK(micro.transported_transform_witnesses);
}

TEST_CASE("union harness measures constant inflation without asserting it") {
  SeededRng rng(606);
  for (const auto& X : sample_spaces<Rational>(1404, 6)) {
    if (X.size() < 4 || X.size() > 10) continue;
    auto part_a = rng.distinct_subset(X.size(), X.size() / 2);
    std::vector<int> part_b;
    for (int i = 0; i < X.size(); ++i)
      if (!std::binary_search(part_a.begin(), part_a.end(), i)) part_b.push_back(i);
    std::vector<Rational> scales{Rational(1), Rational(2)};
    auto rep = union_dimension_harness(X, part_a, part_b, Rational(2), scales);
    CHECK(rep.dim_a >= 0);
    CHECK(rep.dim_b >= 0);
    CHECK(rep.sweep.size() == 6);
    // the sweep is measured; the pieces embed, so their dimension never
    // exceeds the union's at the same constant
    CHECK(std::max(rep.dim_a, rep.dim_b) <= rep.dim_union_at_c);
  }
}

TEST_CASE("functor invariance: witnesses transport between epsilon levels") {
  SeededRng rng(99);
  for (const auto& X : sample_spaces<Rational>(1303, 6)) {
    if (X.size() < 2) continue;
    Rational e1(1), e2(2);
    auto X1 = transform_max(X, e1);
    auto X2 = transform_max(X, e2);
    std::vector<Rational> scales{Rational(3), Rational(5)};  // above e2
    DimQuery<Rational> q1{&X1, Rational(2), scales, ScaleMode::Full, {}, {}};
    auto rep1 = scale_range_dimension(q1);
    for (const auto& [idx, wit] : rep1.witnesses) {
      FamilyDecomposition<Rational> moved{Cover<Rational>{&X2, wit.cover.elements}, wit.family_of,
                                          wit.family_count, wit.r};
      auto rep = check_decomposition(moved);
      CHECK(rep.is_valid);
      CHECK(leq_tol(rep.mesh, Rational(Rational(3) * wit.r)));  // C+1 slack
    }
  }
}
