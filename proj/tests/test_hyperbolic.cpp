#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nagata/hyperbolic.hpp"
#include "test_helpers.hpp"

using namespace nagata;
using testutil::sample_spaces;

namespace {

template <typename S>
CoverTower<S> manual_tower(const FiniteMetricSpace<S>& X, std::vector<Cover<S>> levels, int n) {
  CoverTower<S> T;
  T.space = &X;
  for (auto& c : levels) {
    T.profiles.push_back(lebesgue_profile(c));
    T.levels.push_back(std::move(c));
  }
  T.declared_n = n;
  return T;
}

}  // namespace

TEST_CASE("singleton space gets a one-level tower") {
  FiniteMetricSpace<Rational> X({"a"}, DenseMatrix<Rational>::Zero(1, 1));
  auto res = build_tower(X, 0, Rational(2));
  REQUIRE(res.tower.has_value());
  CHECK(res.tower->levels.size() == 1);
  CHECK(res.checks.all_pass());
}

TEST_CASE("uniform space gets singletons then the whole space") {
  auto X = uniform_space<Rational>(5, Rational(2));
  auto res = build_tower(X, 0, Rational(2));
  REQUIRE(res.tower.has_value());
  REQUIRE(res.tower->levels.size() == 2);
  CHECK(res.tower->levels[0].element_count() == 5);
  CHECK(res.tower->levels[1].element_count() == 1);
  CHECK(res.checks.all_pass());
  auto Dh = dh_metric(*res.tower);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (i != j) CHECK(Dh(i, j) == Rational(2));
}

TEST_CASE("16-point path tower satisfies the gap conditions") {
  auto X = path_space<Rational>(16);
  auto res = build_tower(X, 1, Rational(2));
  REQUIRE(res.tower.has_value());
  CHECK(res.checks.all_pass());
  REQUIRE(res.tower->levels.size() >= 2);
  for (size_t i = 0; i + 1 < res.tower->levels.size(); ++i) {
    CHECK(ExtValue<Rational>::of(Rational(2) * res.tower->profiles[i].mesh) <
          res.tower->profiles[i + 1].global);
  }
}

TEST_CASE("dh metric of the hand-built 5-point tower") {
  auto X = path_space<Rational>(5);
  auto U1 = make_cover(X, {{0, 1}, {2, 3}, {4}});
  std::vector<int> all{0, 1, 2, 3, 4};
  auto U2 = make_cover(X, {all});
  auto T = manual_tower<Rational>(X, {U1, U2}, 0);
  CHECK(validate_tower(T).all_pass());
  auto Dh = dh_metric(T);
  CHECK(Dh(0, 1) == Rational(1));
  CHECK(Dh(1, 2) == Rational(2));
  CHECK(Dh(0, 4) == Rational(2));
  CHECK(validate(Dh).empty());
}

TEST_CASE("a pair never co-contained is a totality error") {
  auto X = path_space<Rational>(3);
  auto U1 = make_cover(X, {{0, 1}, {1, 2}});
  auto T = manual_tower<Rational>(X, {U1}, 1);
  CHECK_THROWS(dh_metric(T));
}

TEST_CASE("degenerate certificates: two points and uniform distance") {
  DenseMatrix<Rational> m(2, 2);
  m << Rational(0), Rational(3), Rational(3), Rational(0);
  FiniteMetricSpace<Rational> X({"a", "b"}, m);
  auto rep = hyperbolicity_certificate(X, 0);
  CHECK(rep.delta_measured == Rational(0));
  CHECK(rep.side_defect == Rational(0));
  CHECK(rep.checks.all_pass());

  auto U = uniform_space<Rational>(6, Rational(1));
  auto rep_u = hyperbolicity_certificate(U, 0);
  CHECK(rep_u.delta_measured == Rational(0));
  CHECK(rep_u.side_defect == Rational(0));
}

TEST_CASE("products are half-integers and certificates hold on built towers") {
  SeededRng rng(64);
  std::vector<FiniteMetricSpace<Rational>> spaces;
  spaces.push_back(path_space<Rational>(9));
  spaces.push_back(uniform_space<Rational>(7, Rational(3)));
  spaces.push_back(tree_space<Rational>(rng, 10));
  spaces.push_back(grid_space<Rational>(3, 3, GridNorm::L1));
  for (const auto& X : spaces) {
    int n = X.size() > 8 ? 2 : 1;
    auto res = build_tower(X, n, Rational(3));
    REQUIRE(res.tower.has_value());
    REQUIRE(res.checks.all_pass());
    auto Dh = dh_metric(*res.tower);
    CHECK(validate(Dh).empty());
    for (int b = 0; b < X.size(); ++b) {
      auto rep = hyperbolicity_certificate(Dh, b);
      CHECK(rep.checks.all_pass());
      CHECK(rep.side_defect <= Rational(1));
      CHECK(rep.delta_measured <= Rational(4));
      for (int x = 0; x < X.size(); ++x)
        for (int y = 0; y < X.size(); ++y) {
          Rational twice = Rational(2) * rep.gromov_products(x, y);
          CHECK(twice == Rational(boost::multiprecision::numerator(twice)));  // integer
        }
    }
  }
}

TEST_CASE("coarse equivalence rows have no violations on built towers") {
  auto X = path_space<Rational>(12);
  auto res = build_tower(X, 1, Rational(2));
  REQUIRE(res.tower.has_value());
  auto Dh = dh_metric(*res.tower);
  auto rows = coarse_equivalence_profile(X, Dh, *res.tower);
  REQUIRE(!rows.empty());
  for (const auto& row : rows) {
    CHECK(row.forward_ok);
    CHECK(row.backward_ok);
  }
}

TEST_CASE("single-level tower gives a single trivially-true row") {
  FiniteMetricSpace<Rational> X({"a"}, DenseMatrix<Rational>::Zero(1, 1));
  auto res = build_tower(X, 0, Rational(2));
  auto Dh = dh_metric(*res.tower);
  auto rows = coarse_equivalence_profile(X, Dh, *res.tower);
  CHECK(rows.size() == 1);
  CHECK(rows[0].forward_ok);
  CHECK(rows[0].backward_ok);
}

TEST_CASE("the dh dimension certificate holds at every integer scale") {
  SeededRng rng(4);
  std::vector<FiniteMetricSpace<Rational>> spaces;
  spaces.push_back(path_space<Rational>(10));
  spaces.push_back(tree_space<Rational>(rng, 9));
  for (const auto& X : spaces) {
    auto res = build_tower(X, 2, Rational(3));
    REQUIRE(res.tower.has_value());
    auto Dh = dh_metric(*res.tower);
    auto checks = dh_dimension_certificate(Dh, *res.tower);
    for (const auto& rec : checks.records) CHECK_MESSAGE(rec.pass, rec.name);
  }
}

TEST_CASE("growth must exceed one, bad certification reports an error") {
  auto X = path_space<Rational>(6);
  auto res = build_tower(X, 1, Rational(2), Rational(1));
  CHECK(!res.tower.has_value());
  CHECK(!res.error.empty());
  // C=1, n=0 on a path fails certification at middling scales
  auto res2 = build_tower(X, 0, Rational(1), Rational(4), Rational(1) / Rational(4),
                          SearchOptions{12, true, false});
  CHECK(!res2.tower.has_value());
  CHECK(res2.error.find("certification") != std::string::npos);
}
