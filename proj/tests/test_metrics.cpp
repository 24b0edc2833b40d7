#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "mirrorbench/error.hpp"
#include "mirrorbench/metrics.hpp"
#include "mirrorbench/synth.hpp"
#include "oracles.hpp"

using namespace mirrorbench;

namespace {

const Graph k2 = Graph::from_dense_edges(2, std::vector<Edge>{{0, 1}});

std::array<std::uint64_t, 9> counts(std::initializer_list<std::uint64_t> xs) {
  std::array<std::uint64_t, 9> out{};
  std::copy(xs.begin(), xs.end(), out.begin());
  return out;
}

}  // namespace

TEST_CASE("js divergence") {
  const std::vector<double> p{0.5, 0.5}, q{1.0, 0.0};
  // ½[½log2(½/¾) + ½log2(½/¼)] + ½[log2(1/¾)]
  const double hand = 0.5 * (0.5 * std::log2(0.5 / 0.75) + 0.5 * std::log2(0.5 / 0.25)) + 0.5 * std::log2(1.0 / 0.75);
  CHECK(hand == doctest::Approx(0.3113).epsilon(1e-4));
  CHECK(js_divergence(p, q) == doctest::Approx(hand).epsilon(1e-12));
  CHECK(js_divergence(p, p) == 0.0);
  CHECK(js_divergence(std::vector<double>{1, 0}, std::vector<double>{0, 1}) == doctest::Approx(1.0));

  const auto a = Distribution::from_counts({{1, 1.0}, {2, 1.0}});
  const auto b = Distribution::from_counts({{1, 2.0}});
  CHECK(js_divergence(a, b) == doctest::Approx(hand).epsilon(1e-12));
  const auto c = Distribution::from_counts({{7, 3.0}});
  CHECK(js_divergence(b, c) == doctest::Approx(1.0).epsilon(1e-12));

  const auto d = Distribution::from_counts({{0, 3.0}, {4, 1.0}, {9, 6.0}});
  CHECK(std::accumulate(d.probs.begin(), d.probs.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::is_sorted(d.support.begin(), d.support.end()));
}

TEST_CASE("degree and pagerank js") {
  CHECK(degree_js(oracle::complete(4), oracle::cycle(4)) == doctest::Approx(1.0));
  const Graph g = oracle::random_graph(30, 0.2, 4);
  CHECK(degree_js(g, g) == 0.0);
  CHECK(degree_js(g, g.relabeled(oracle::random_permutation(30, 1))) == 0.0);
  CHECK(pagerank_js(g, g) == 0.0);
  CHECK(pagerank_js(g, g.relabeled(oracle::random_permutation(30, 2))) <= 1e-12);
  CHECK(pagerank_js(oracle::cycle(5), oracle::cycle(7)) > 0.0);
  CHECK(binned_js({0.5, 0.5}, {0.5, 0.5}) == 0.0);
}

TEST_CASE("portrait rows") {
  const auto p3 = portrait(oracle::path(3));
  REQUIRE(p3.rows.size() == 3);
  CHECK(p3.rows[0] == std::map<std::uint64_t, std::uint64_t>{{1, 3}});
  CHECK(p3.rows[1] == std::map<std::uint64_t, std::uint64_t>{{1, 2}, {2, 1}});
  CHECK(p3.rows[2] == std::map<std::uint64_t, std::uint64_t>{{1, 2}});

  const auto k4 = portrait(oracle::complete(4));
  CHECK(k4.rows[1] == std::map<std::uint64_t, std::uint64_t>{{3, 4}});

  const auto pairs = portrait(oracle::two_k2());
  CHECK(pairs.rows.size() == 2);
  CHECK(pairs.rows[1] == std::map<std::uint64_t, std::uint64_t>{{1, 4}});

  // Each row counts the nodes with eccentricity >= l.
  const Graph g = oracle::random_graph(25, 0.12, 9);
  const auto pg = portrait(g);
  const auto d = oracle::all_pairs(g);
  for (std::size_t l = 1; l < pg.rows.size(); ++l) {
    std::uint64_t row_total = 0, expect = 0;
    for (const auto& [k, c] : pg.rows[l]) row_total += c;
    for (const auto& r : d) expect += *std::max_element(r.begin(), r.end()) >= static_cast<int>(l);
    CHECK(row_total == expect);
  }
}

TEST_CASE("portrait joint equals pair enumeration") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Graph g = oracle::random_graph(5 + s % 46, 0.04 + 0.02 * static_cast<double>(s % 8), 300 + s);
    if (g.edge_count() == 0) continue;
    const auto joint = portrait_joint(portrait(g));
    const auto ref = oracle::portrait_joint(g);
    REQUIRE(joint.size() == ref.size());
    double total = 0.0;
    for (const auto& [key, v] : joint) {
      CHECK(v == doctest::Approx(ref.at(key)).epsilon(1e-12));
      total += v;
    }
    CHECK(std::abs(total - 1.0) <= 1e-12);
  }
}

TEST_CASE("portrait divergence") {
  const Graph g = oracle::random_graph(20, 0.2, 6);
  CHECK(portrait_divergence(g, g.relabeled(oracle::random_permutation(20, 3))) == 0.0);
  const double d = portrait_divergence(oracle::complete(4), oracle::two_k2());
  CHECK(d > 0.0);
  CHECK(d <= 1.0);
  CHECK(portrait_divergence(oracle::path(3), oracle::path(3).relabeled(std::vector<NodeId>{2, 0, 1})) == 0.0);
  try {
    portrait_divergence(oracle::complete(4), Graph::from_dense_edges(4, std::vector<Edge>{}));
    FAIL("expected undefined_portrait");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::undefined_portrait);
  }
}

TEST_CASE("lambda distance") {
  CHECK(lambda_distance(oracle::complete(4), k2) == doctest::Approx(6.0).epsilon(1e-9));
  CHECK(lambda_distance(std::vector<double>{4, 4, 4, 0}, std::vector<double>{2, 0}) == doctest::Approx(6.0));
  const Graph g = oracle::random_graph(40, 0.1, 12);
  CHECK(lambda_distance(g, g) <= 1e-6);
  CHECK(lambda_distance(g, g.relabeled(oracle::random_permutation(40, 5))) <= 1e-6);

  SpectrumResult t1{{5, 4, 3}, LaplacianKind::combinatorial, true};
  SpectrumResult t2{{5, 4}, LaplacianKind::combinatorial, true};
  CHECK(lambda_distance(t1, t2) == 0.0);
}

TEST_CASE("netlsd") {
  const auto t = netlsd_timescales();
  REQUIRE(t.size() == kNetlsdSamples);
  CHECK(t.front() == doctest::Approx(1e-2));
  CHECK(t.back() == doctest::Approx(1e2));

  const auto d = netlsd_descriptor(k2);
  for (std::size_t i : {std::size_t{0}, std::size_t{100}, std::size_t{249}})
    CHECK(d.heat_trace[i] == doctest::Approx(1.0 + std::exp(-2.0 * t[i])).epsilon(1e-10));

  for (std::uint64_t s = 0; s < 5; ++s) {
    const Graph g = oracle::random_graph(30, 0.15, 60 + s);
    const auto h = netlsd_descriptor(g).heat_trace;
    // Σλ equals the number of non-isolated nodes and exp(-x) >= 1 - x.
    std::size_t active = 0;
    for (NodeId v = 0; v < 30; ++v) active += g.degree(v) > 0;
    CHECK(h.front() <= 30.0);
    CHECK(30.0 - h.front() <= t.front() * static_cast<double>(active) + 1e-12);
    for (std::size_t i = 1; i < h.size(); ++i) CHECK(h[i] < h[i - 1]);
    for (double x : h) CHECK(x > 0.0);
    CHECK(netlsd_distance(g, g.relabeled(oracle::random_permutation(30, s))) <= 1e-6);
  }
}

TEST_CASE("graphlet examples") {
  CHECK(graphlet_counts(oracle::complete(4)).counts == counts({6, 0, 4, 0, 0, 0, 0, 0, 1}));
  CHECK(graphlet_counts(oracle::cycle(4)).counts == counts({4, 4, 0, 0, 0, 1, 0, 0, 0}));
  CHECK(graphlet_counts(oracle::path(3)).counts == counts({2, 1, 0, 0, 0, 0, 0, 0, 0}));
  CHECK(graphlet_counts(oracle::star(3))[Graphlet::star3] == 1);
  CHECK(graphlet_counts(oracle::path(4))[Graphlet::path4] == 1);
}

TEST_CASE("graphlets match exhaustive enumeration") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Graph g = oracle::random_graph(4 + s % 9, 0.1 + 0.8 * static_cast<double>(s % 9) / 8.0, 7000 + s);
    CHECK(graphlet_counts(g).counts == oracle::graphlets(g));
  }
}

TEST_CASE("rgfd") {
  const auto k4 = graphlet_counts(oracle::complete(4));
  const auto p3 = graphlet_counts(oracle::path(3));
  // [6,0,4,...,1]/11 against [2,1,0,...]/3
  const double l1 = std::abs(6.0 / 11 - 2.0 / 3) + 1.0 / 3 + 4.0 / 11 + 1.0 / 11;
  const double l2 = std::sqrt(std::pow(6.0 / 11 - 2.0 / 3, 2) + 1.0 / 9 + 16.0 / 121 + 1.0 / 121);
  CHECK(rgfd(k4, p3) == doctest::Approx(l1).epsilon(1e-12));
  CHECK(rgfd(k4, p3, Norm::l2) == doctest::Approx(l2).epsilon(1e-12));
  CHECK(rgfd(k4, k4) == 0.0);
}

TEST_CASE("pca") {
  const auto line = pca_2d({{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  CHECK(line.explained_variance[1] == doctest::Approx(0.0).epsilon(1e-12));
  double mean_x = 0, mean_y = 0;
  for (const auto& c : line.coordinates) {
    mean_x += c[0];
    mean_y += c[1];
  }
  CHECK(std::abs(mean_x) < 1e-12);
  CHECK(std::abs(mean_y) < 1e-12);

  // Points (2,0,0), (0,1,0), (0,0,0): covariance [[4/3,-1/3,0],[-1/3,1/3,0],[0,0,0]].
  // Eigenvalues (5 ± √13)/6; the top eigenvector is ∝ (1, (3 − √13)/2, 0).
  const double r13 = std::sqrt(13.0);
  const double l1 = (5 + r13) / 6, l2 = (5 - r13) / 6;
  const double y1 = (3 - r13) / 2, n1 = std::sqrt(1 + y1 * y1);
  const std::array<double, 3> v1{1 / n1, y1 / n1, 0};
  const std::array<double, 3> v2{-y1 / n1, 1 / n1, 0};
  const std::vector<std::vector<double>> pts{{2, 0, 0}, {0, 1, 0}, {0, 0, 0}};
  const auto r = pca_2d(pts);
  CHECK(r.explained_variance[0] == doctest::Approx(l1).epsilon(1e-10));
  CHECK(r.explained_variance[1] == doctest::Approx(l2).epsilon(1e-10));
  for (int i = 0; i < 3; ++i) {
    CHECK(r.weights[0][i] == doctest::Approx(v1[i]).epsilon(1e-10));
    CHECK(r.weights[1][i] == doctest::Approx(v2[i]).epsilon(1e-10));
  }
  const double mean[3] = {2.0 / 3, 1.0 / 3, 0};
  for (int p = 0; p < 3; ++p) {
    double x = 0, y = 0;
    for (int i = 0; i < 3; ++i) {
      x += (pts[p][i] - mean[i]) * v1[i];
      y += (pts[p][i] - mean[i]) * v2[i];
    }
    CHECK(r.coordinates[p][0] == doctest::Approx(x).epsilon(1e-10));
    CHECK(r.coordinates[p][1] == doctest::Approx(y).epsilon(1e-10));
  }

  const auto flat = pca_2d({{1, 2}, {1, 2}});
  CHECK(flat.zero_variance);
  CHECK(flat.coordinates[0] == std::array<double, 2>{0, 0});
}

TEST_CASE("metric registry") {
  for (auto id : kAllMetrics) CHECK(parse_metric(metric_name(id)) == id);
  CHECK(metric_name(MetricId::rgfd_l1) == "rgfd-l1");
  CHECK(parse_metric_list("all").size() == 9);
  const auto ns = parse_metric_list("non-spectral");
  CHECK(std::none_of(ns.begin(), ns.end(), is_spectral));
  CHECK(parse_metric_list("degree-js,lambda") == std::vector<MetricId>{MetricId::degree_js, MetricId::lambda});
  CHECK_THROWS_AS(parse_metric_list("degree-js,gcd"), Error);
}

TEST_CASE("metric axioms over a small corpus") {
  std::vector<Graph> graphs = {oracle::complete(5), oracle::cycle(8), oracle::star(6), make_clique_ring(5, 4),
                               oracle::two_k5_bridge()};
  for (std::uint64_t s = 0; s < 5; ++s) graphs.push_back(oracle::random_graph(20 + 4 * s, 0.15, 40 + s));
  for (auto id : kAllMetrics) {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Graph& g = graphs[i];
      CHECK(evaluate(id, g, g) == 0.0);
      const double tol = is_spectral(id) ? 1e-6 : 1e-12;
      for (std::uint64_t r = 0; r < 3; ++r)
        CHECK(evaluate(id, g, g.relabeled(oracle::random_permutation(g.node_count(), r))) <= tol);
      const Graph& h = graphs[(i + 1) % graphs.size()];
      const double ab = evaluate(id, g, h), ba = evaluate(id, h, g);
      CHECK(std::abs(ab - ba) <= 1e-12);
      CHECK(ab >= 0.0);
    }
  }
}
