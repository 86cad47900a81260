#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nagata/dimension.hpp"
#include "nagata/extension.hpp"
#include "nagata/hyperbolic.hpp"
#include "nagata/metric_space.hpp"
#include "nagata/nerve.hpp"
#include "nagata/oracles.hpp"

using namespace nagata;

namespace {

template <typename S>
FiniteMetricSpace<S> path_space(int n) {
  DenseMatrix<S> m(n, n);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (int j = 0; j < n; ++j) m(i, j) = S(std::abs(i - j));
  }
  return FiniteMetricSpace<S>(std::move(labels), std::move(m));
}

}  // namespace

TEST_CASE("double pipeline instantiates") {
  auto X = path_space<double>(4);
  CHECK(validate(X).empty());
  auto U = make_cover(X, {{0, 1, 2}, {1, 2, 3}});
  auto prof = lebesgue_profile(U);
  CHECK(prof.global == ExtValue<double>::of(2.0));
  CHECK(prof.mesh == 2.0);
  CHECK(prof.mult_open == 2);
  auto rep = verify_barycentric_bound(U);
  CHECK(rep.holds);
}

TEST_CASE("rational pipeline instantiates") {
  auto X = path_space<Rational>(4);
  CHECK(validate(X).empty());
  auto t = transform_max(X, Rational(2));
  CHECK(t(0, 1) == Rational(2));
  CHECK(t(0, 3) == Rational(3));
  auto U = make_cover(X, {{0, 1, 2}, {1, 2, 3}});
  auto rep = verify_barycentric_bound(U);
  CHECK(rep.holds);
  RealMap<Rational> f{{0, 2}, {Rational(0), Rational(2)}, Rational(1)};
  auto ext = mcshane_extend(X, f);
  CHECK(ext.values[1] == Rational(1));
}
