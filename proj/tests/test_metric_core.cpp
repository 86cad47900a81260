#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nagata/maps.hpp"
#include "nagata/metric_space.hpp"
#include "test_helpers.hpp"

using namespace nagata;
using testutil::brute_force_is_metric;
using testutil::sample_spaces;
using testutil::space_of;

TEST_CASE("validate accepts a one-point space") {
  FiniteMetricSpace<double> X({"a"}, DenseMatrix<double>::Zero(1, 1));
  CHECK(validate(X).empty());
}

TEST_CASE("validate reports the triangle violation with its witness") {
  auto X = space_of<double>({"a", "b", "c"}, {{0, 1, 5}, {1, 0, 1}, {5, 1, 0}});
  auto v = validate(X);
  REQUIRE(v.size() == 1);
  CHECK(v[0].axiom == MetricAxiom::TriangleInequality);
  // witness: d(a,c) > d(a,b) + d(b,c) routed through b
  CHECK(v[0].points[1] == 1);
}

TEST_CASE("validate agrees with the brute-force oracle on a 4-point path") {
  auto X = path_space<double>(4);
  CHECK(brute_force_is_metric(X));
  CHECK(validate(X).empty());
}

TEST_CASE("validate catches asymmetry, diagonal and zero-distance breaches") {
  DenseMatrix<double> m(2, 2);
  m << 0.5, 0.0, 0.0, 0.0;
  FiniteMetricSpace<double> X({"a", "b"}, m);
  auto v = validate(X);
  bool saw_diag = false, saw_zero = false;
  for (const auto& breach : v) {
    if (breach.axiom == MetricAxiom::NonzeroDiagonal) saw_diag = true;
    if (breach.axiom == MetricAxiom::NonpositiveOffDiagonal) saw_zero = true;
  }
  CHECK(saw_diag);
  CHECK(saw_zero);
}

TEST_CASE("structural problems are not axiom violations") {
  CHECK_THROWS_AS(FiniteMetricSpace<double>({}, DenseMatrix<double>::Zero(0, 0)),
                  StructuralError);
  CHECK_THROWS_AS(FiniteMetricSpace<double>({"a", "b"}, DenseMatrix<double>::Zero(3, 3)),
                  StructuralError);
  CHECK_THROWS_AS(FiniteMetricSpace<double>({"a", "a"}, DenseMatrix<double>::Zero(2, 2)),
                  StructuralError);
}

TEST_CASE("transform_max flattens a short path") {
  auto X = path_space<Rational>(3);
  auto T = transform_max(X, Rational(2));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(T(i, j) == Rational(2));
  CHECK(T(1, 1) == Rational(0));
}

TEST_CASE("transform_max below the minimum distance is the identity") {
  SeededRng rng(7);
  auto X = weighted_path_space<Rational>(rng, 5, 3);
  auto T = transform_max(X, Rational(1) / Rational(2));
  CHECK(tables_equal(T.table(), X.table()));
}

TEST_CASE("transform_max on the 0-1-3 line") {
  auto X = line_space<Rational>({Rational(0), Rational(1), Rational(3)});
  auto T = transform_max(X, Rational(2));
  CHECK(T(0, 1) == Rational(2));
  CHECK(T(1, 2) == Rational(2));
  CHECK(T(0, 2) == Rational(3));
  CHECK(validate(T).empty());
}

TEST_CASE("transform_min on the 0-1-3 line") {
  auto X = line_space<Rational>({Rational(0), Rational(1), Rational(3)});
  auto T = transform_min(X, Rational(2));
  CHECK(T(0, 1) == Rational(1));
  CHECK(T(1, 2) == Rational(2));
  CHECK(T(0, 2) == Rational(2));
  CHECK(validate(T).empty());
}

TEST_CASE("transform_min above the diameter is the identity, at the minimum it is uniform") {
  auto X = line_space<Rational>({Rational(0), Rational(2), Rational(5)});
  CHECK(tables_equal(transform_min(X, Rational(9)).table(), X.table()));
  auto U = transform_min(X, Rational(2));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(U(i, j) == Rational(2));
}

TEST_CASE("transforms reject nonpositive epsilon") {
  auto X = path_space<double>(3);
  CHECK_THROWS(transform_max(X, 0.0));
  CHECK_THROWS(transform_min(X, -1.0));
}

TEST_CASE("macro functor composition collapses: max(max(d,delta),eps) = max(d,eps)") {
  auto spaces = sample_spaces<Rational>(11, 8);
  for (const auto& X : spaces) {
    Rational delta(1), eps(3);  // eps > delta
    auto lhs = transform_max(transform_max(X, delta), eps);
    auto rhs = transform_max(X, eps);
    CHECK(tables_equal(lhs.table(), rhs.table()));
    // dual identity for min with eps < delta
    auto lhs2 = transform_min(transform_min(X, Rational(3)), Rational(1));
    auto rhs2 = transform_min(X, Rational(1));
    CHECK(tables_equal(lhs2.table(), rhs2.table()));
  }
}

TEST_CASE("transform outputs always validate") {
  auto spaces = sample_spaces<Rational>(23, 10);
  SeededRng rng(5);
  for (const auto& X : spaces) {
    Rational eps = rng.rational<Rational>(1, 6, 4);
    CHECK(validate(transform_max(X, eps)).empty());
    CHECK(validate(transform_min(X, eps)).empty());
  }
}

TEST_CASE("identity from the macro transform is 1-Lipschitz and its inverse is (1+eps/delta)") {
  auto spaces = sample_spaces<Rational>(37, 8);
  for (const auto& X : spaces) {
    if (X.size() < 2) continue;
    Rational eps(2);
    auto T = transform_max(X, eps);
    auto bounds_T_to_X = bilipschitz_bounds(T, X);  // ratios d / max(d,eps)
    CHECK(bounds_T_to_X.lambda <= Rational(1));
    Rational delta = *min_positive_distance(X);
    auto bounds_X_to_T = bilipschitz_bounds(X, T);
    CHECK(bounds_X_to_T.lambda <= Rational(1) + eps / delta);
  }
}

TEST_CASE("micro transform bounds sit inside [1, 1+S/eps]") {
  auto spaces = sample_spaces<Rational>(41, 8);
  for (const auto& X : spaces) {
    if (X.size() < 2) continue;
    Rational eps(1);
    Rational S_bound = diameter(X);
    auto T = transform_min(X, eps);
    auto bounds = bilipschitz_bounds(T, X);  // d vs min(d,eps)
    CHECK(bounds.mu >= Rational(1));
    CHECK(bounds.lambda <= Rational(1) + S_bound / eps);
  }
}

TEST_CASE("lipschitz constant of constant and identity maps") {
  auto X = path_space<double>(5);
  RealMap<double> constant{{0, 1, 2, 3, 4}, {2, 2, 2, 2, 2}, 0};
  CHECK(lipschitz_constant(X, constant) == 0.0);
  RealMap<double> single{{3}, {7}, 0};
  CHECK(lipschitz_constant(X, single) == 0.0);
  SpaceMap<double> id{&X, {0, 1, 2, 3, 4}, {0, 1, 2, 3, 4}};
  CHECK(lipschitz_constant(X, id) == 1.0);
}

TEST_CASE("composition is submultiplicative on random triples") {
  SeededRng rng(77);
  auto spaces = sample_spaces<double>(91, 6);
  for (const auto& X : spaces) {
    const int n = X.size();
    // f: X -> X permutation-ish, g: X -> R
    std::vector<int> f(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) f[static_cast<size_t>(i)] = rng.uniform_int(0, n - 1);
    std::vector<double> g(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) g[static_cast<size_t>(i)] = rng.uniform01() * 10;
    std::vector<int> all(static_cast<size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    SpaceMap<double> fm{&X, all, f};
    RealMap<double> gm{all, g, 0};
    std::vector<double> gof(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) gof[static_cast<size_t>(i)] = g[static_cast<size_t>(f[static_cast<size_t>(i)])];
    RealMap<double> gofm{all, gof, 0};
    double lip_f = lipschitz_constant(X, fm);
    double lip_g = lipschitz_constant(X, gm);
    double lip_gof = lipschitz_constant(X, gofm);
    CHECK(lip_gof <= lip_g * lip_f + 1e-9);
  }
}

TEST_CASE("bilipschitz bounds: identical metrics and antisymmetry") {
  auto spaces = sample_spaces<Rational>(55, 6);
  for (const auto& X : spaces) {
    auto same = bilipschitz_bounds(X, X);
    CHECK(same.mu == Rational(1));
    CHECK(same.lambda == Rational(1));
    auto T = transform_max(X, Rational(2));
    auto fwd = bilipschitz_bounds(X, T);
    auto bwd = bilipschitz_bounds(T, X);
    if (X.size() >= 2) {
      CHECK(bwd.mu == Rational(1) / fwd.lambda);
      CHECK(bwd.lambda == Rational(1) / fwd.mu);
    }
  }
}

TEST_CASE("l2 to l1 identity on a point cloud stays within the n and sqrt(n) factors") {
  SeededRng rng(13);
  DenseMatrix<double> pts(6, 3);
  for (int i = 0; i < 6; ++i)
    for (int c = 0; c < 3; ++c) pts(i, c) = rng.uniform01() * 5;
  auto X2 = space_from_points<double>(pts, NormTag::L2);
  auto X1 = space_from_points<double>(pts, NormTag::L1);
  auto b = bilipschitz_bounds(X2, X1);  // d1 / d2 ratios
  CHECK(b.lambda <= 3.0 + 1e-9);        // n-Lipschitz
  auto inv = bilipschitz_bounds(X1, X2);
  CHECK(inv.lambda <= std::sqrt(3.0) + 1e-9);  // inverse sqrt(n)-Lipschitz
}

TEST_CASE("label mismatch is rejected") {
  auto A = path_space<double>(3);
  auto B = uniform_space<double>(3, 1.0);
  CHECK_THROWS(bilipschitz_bounds(A, B));
}

TEST_CASE("subspace restriction keeps the metric") {
  auto X = path_space<double>(6);
  auto A = subspace(X, {1, 3, 4});
  CHECK(A.size() == 3);
  CHECK(A(0, 1) == 2.0);
  CHECK(A(1, 2) == 1.0);
  CHECK(validate(A).empty());
}

TEST_CASE("point cloud CSV materialization under both norms") {
  DenseMatrix<double> pts(3, 2);
  pts << 0, 0, 3, 4, 0, 4;
  auto X2 = space_from_points<double>(pts, NormTag::L2);
  CHECK(X2(0, 1) == doctest::Approx(5.0));
  auto X1 = space_from_points<double>(pts, NormTag::L1);
  CHECK(X1(0, 1) == doctest::Approx(7.0));
}
