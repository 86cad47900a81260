#pragma once

#include <random>
#include <string>
#include <vector>

#include "nagata/cover.hpp"
#include "nagata/metric_space.hpp"

namespace nagata {

// All randomness in the project flows through this seeded generator; the
// distributions are hand-rolled on top of mt19937_64 so reports stay
// byte-identical across standard libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return uniform01() < p; }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<size_t>(uniform_int(0, static_cast<int>(v.size()) - 1))];
  }

  std::vector<int> distinct_subset(int universe, int size) {
    std::vector<int> all(static_cast<size_t>(universe));
    std::iota(all.begin(), all.end(), 0);
    for (int i = universe - 1; i > 0; --i)
      std::swap(all[static_cast<size_t>(i)], all[static_cast<size_t>(uniform_int(0, i))]);
    all.resize(static_cast<size_t>(size));
    std::sort(all.begin(), all.end());
    return all;
  }

  // rational in [lo, hi] with the given denominator; exact in both modes
  template <typename S>
  S rational(int lo, int hi, int denom) {
    return S(uniform_int(lo * denom, hi * denom)) / S(denom);
  }

 private:
  std::mt19937_64 eng_;
};

// ---- seeded space generators ----

template <typename S>
FiniteMetricSpace<S> line_space(const std::vector<S>& coords) {
  const int n = static_cast<int>(coords.size());
  DenseMatrix<S> m(n, n);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back("x" + std::to_string(i));
    for (int j = 0; j < n; ++j) m(i, j) = scalar_abs(S(coords[i] - coords[j]));
  }
  return FiniteMetricSpace<S>(std::move(labels), std::move(m));
}

template <typename S>
FiniteMetricSpace<S> path_space(int n, const S& step = S(1)) {
  std::vector<S> coords;
  for (int i = 0; i < n; ++i) coords.push_back(S(i) * step);
  return line_space(coords);
}

template <typename S>
FiniteMetricSpace<S> weighted_path_space(SeededRng& rng, int n, int max_step) {
  std::vector<S> coords{S(0)};
  for (int i = 1; i < n; ++i) coords.push_back(coords.back() + S(rng.uniform_int(1, max_step)));
  return line_space(coords);
}

template <typename S>
FiniteMetricSpace<S> uniform_space(int n, const S& delta) {
  DenseMatrix<S> m = DenseMatrix<S>::Constant(n, n, delta);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back("u" + std::to_string(i));
    m(i, i) = S(0);
  }
  return FiniteMetricSpace<S>(std::move(labels), std::move(m));
}

enum class GridNorm { L1, Linf };

template <typename S>
FiniteMetricSpace<S> grid_space(int w, int h, GridNorm norm = GridNorm::L1,
                                const S& spacing = S(1)) {
  const int n = w * h;
  DenseMatrix<S> m(n, n);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    labels.push_back("g" + std::to_string(i % w) + "_" + std::to_string(i / w));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int dx = std::abs(i % w - j % w);
      int dy = std::abs(i / w - j / w);
      int d = norm == GridNorm::L1 ? dx + dy : std::max(dx, dy);
      m(i, j) = S(d) * spacing;
    }
  return FiniteMetricSpace<S>(std::move(labels), std::move(m));
}

// Random tree with integer edge weights; distances by shortest path.
template <typename S>
FiniteMetricSpace<S> tree_space(SeededRng& rng, int n, int max_edge = 3) {
  DenseMatrix<S> m = DenseMatrix<S>::Zero(n, n);
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n));
  for (int v = 1; v < n; ++v) {
    int parent = rng.uniform_int(0, v - 1);
    int wgt = rng.uniform_int(1, max_edge);
    adj[static_cast<size_t>(v)].push_back({parent, wgt});
    adj[static_cast<size_t>(parent)].push_back({v, wgt});
  }
  for (int src = 0; src < n; ++src) {
    std::vector<long long> dist(static_cast<size_t>(n), -1);
    std::vector<int> stack{src};
    dist[static_cast<size_t>(src)] = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [u, wgt] : adj[static_cast<size_t>(v)])
        if (dist[static_cast<size_t>(u)] < 0) {
          dist[static_cast<size_t>(u)] = dist[static_cast<size_t>(v)] + wgt;
          stack.push_back(u);
        }
    }
    for (int v = 0; v < n; ++v) m(src, v) = S(static_cast<int>(dist[static_cast<size_t>(v)]));
  }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("t" + std::to_string(i));
  return FiniteMetricSpace<S>(std::move(labels), std::move(m));
}

// Random ultrametric from a hierarchy of merges: d(x, y) = the level at which
// their blocks join. Always a metric; chain components at any scale have
// diameter below the scale, so these probe dimension zero.
template <typename S>
FiniteMetricSpace<S> ultrametric_space(SeededRng& rng, int n, int levels = 3,
                                       const S& base = S(1), const S& ratio = S(4)) {
  std::vector<int> block(static_cast<size_t>(n));
  std::iota(block.begin(), block.end(), 0);
  DenseMatrix<S> m = DenseMatrix<S>::Zero(n, n);
  S level_dist = base;
  for (int lvl = 0; lvl < levels; ++lvl) {
    // merge random pairs of blocks at this level
    std::vector<int> ids;
    for (int b : block)
      if (std::find(ids.begin(), ids.end(), b) == ids.end()) ids.push_back(b);
    std::vector<int> merged(static_cast<size_t>(n), -1);
    std::vector<int> target(ids.size());
    int groups = std::max(1, static_cast<int>(ids.size()) / 2);
    for (size_t i = 0; i < ids.size(); ++i) target[i] = rng.uniform_int(0, groups - 1);
    for (int x = 0; x < n; ++x)
      for (size_t i = 0; i < ids.size(); ++i)
        if (block[static_cast<size_t>(x)] == ids[i]) merged[static_cast<size_t>(x)] = target[i];
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        if (m(x, y) == S(0) && block[static_cast<size_t>(x)] != block[static_cast<size_t>(y)] &&
            merged[static_cast<size_t>(x)] == merged[static_cast<size_t>(y)]) {
          m(x, y) = level_dist;
          m(y, x) = level_dist;
        }
    for (int x = 0; x < n; ++x) block[static_cast<size_t>(x)] = merged[static_cast<size_t>(x)];
    level_dist = level_dist * ratio;
  }
  // anything never merged sits at the top level
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (x != y && m(x, y) == S(0)) {
        m(x, y) = level_dist;
        m(y, x) = level_dist;
      }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
  return FiniteMetricSpace<S>(std::move(labels), std::move(m));
}

// Perturbed integer lattice points in the plane with exact rational jitter.
template <typename S>
FiniteMetricSpace<S> cloud_space(SeededRng& rng, int n, NormTag tag, int denom = 16) {
  DenseMatrix<S> pts(n, 2);
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back("p" + std::to_string(i));
    pts(i, 0) = S(rng.uniform_int(0, 3 * n)) + rng.template rational<S>(0, 1, denom);
    pts(i, 1) = S(rng.uniform_int(0, 3 * n)) + rng.template rational<S>(0, 1, denom);
  }
  // distinct points: nudge duplicates apart on the x axis
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pts(i, 0) == pts(j, 0) && pts(i, 1) == pts(j, 1))
        pts(j, 0) += S(1) / S(denom * (2 + j));
  return space_from_points<S>(pts, tag, labels);
}

// Mixed pool of small spaces for corpus sweeps.
template <typename S>
std::vector<FiniteMetricSpace<S>> small_corpus(std::uint64_t seed, int count, int max_points) {
  SeededRng rng(seed);
  std::vector<FiniteMetricSpace<S>> out;
  while (static_cast<int>(out.size()) < count) {
    int n = rng.uniform_int(2, max_points);
    switch (rng.uniform_int(0, 6)) {
      case 0: out.push_back(path_space<S>(n)); break;
      case 1: out.push_back(weighted_path_space<S>(rng, n, 4)); break;
      case 2: out.push_back(uniform_space<S>(n, S(rng.uniform_int(1, 4)))); break;
      case 3: {
        int w = rng.uniform_int(2, 3);
        out.push_back(grid_space<S>(w, std::max(2, std::min(n / w, 4)), GridNorm::L1));
        break;
      }
      case 4: out.push_back(tree_space<S>(rng, std::max(3, n))); break;
      case 5: out.push_back(ultrametric_space<S>(rng, std::max(4, n))); break;
      default: out.push_back(cloud_space<S>(rng, std::max(3, std::min(n, 9)), NormTag::L1)); break;
    }
  }
  return out;
}

// ---- random covers and subsets ----

// Elements grow from distinct seeds by random-radius balls, leftovers join
// their nearest seed, so every element is nonempty and the union covers.
template <typename S>
Cover<S> random_cover(SeededRng& rng, const FiniteMetricSpace<S>& X, int k) {
  k = std::min(k, X.size());
  auto seeds = rng.distinct_subset(X.size(), k);
  S diam = diameter(X);
  std::vector<std::vector<int>> elems(static_cast<size_t>(k));
  for (int e = 0; e < k; ++e) {
    S radius = diam * S(rng.uniform_int(1, 8)) / S(16);
    elems[static_cast<size_t>(e)] = open_ball(X, seeds[static_cast<size_t>(e)], radius);
    if (elems[static_cast<size_t>(e)].empty())
      elems[static_cast<size_t>(e)].push_back(seeds[static_cast<size_t>(e)]);
  }
  for (int x = 0; x < X.size(); ++x) {
    bool covered = false;
    for (const auto& e : elems)
      if (std::find(e.begin(), e.end(), x) != e.end()) covered = true;
    if (!covered) {
      int best = 0;
      for (int e = 1; e < k; ++e)
        if (X(x, seeds[static_cast<size_t>(e)]) < X(x, seeds[static_cast<size_t>(best)])) best = e;
      elems[static_cast<size_t>(best)].push_back(x);
    }
  }
  return make_cover(X, std::move(elems));
}

}  // namespace nagata
