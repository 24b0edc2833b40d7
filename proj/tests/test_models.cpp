#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <tuple>

#include "expectations.hpp"
#include "mirrorbench/error.hpp"
#include "mirrorbench/metrics.hpp"
#include "mirrorbench/models.hpp"
#include "mirrorbench/synth.hpp"
#include "oracles.hpp"

using namespace mirrorbench;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::usage;
}

/// Newman modularity straight from the definition over all node pairs.
double modularity_oracle(const Graph& g, const std::vector<std::uint32_t>& label) {
  const auto a = oracle::adjacency(g);
  const double two_m = 2.0 * static_cast<double>(g.edge_count());
  double q = 0.0;
  for (NodeId i = 0; i < g.node_count(); ++i)
    for (NodeId j = 0; j < g.node_count(); ++j)
      if (label[i] == label[j])
        q += (a[i][j] ? 1.0 : 0.0) -
             static_cast<double>(g.degree(i)) * static_cast<double>(g.degree(j)) / two_m;
  return q / two_m;
}

const Graph& power_law_source() {
  static const Graph g = oracle::preferential_attachment(400, 2, 17);
  return g;
}

}  // namespace

TEST_CASE("model names") {
  for (auto kind : {ModelKind::er, ModelKind::chung_lu, ModelKind::sbm, ModelKind::kronecker, ModelKind::bter}) {
    CHECK(parse_model_kind(cli_name(kind)) == kind);
    CHECK(parse_model_kind(json_name(kind)) == kind);
  }
  CHECK(parse_model_kind("kron") == ModelKind::kronecker);
  CHECK(parse_model_kind("chung-lu") == ModelKind::chung_lu);
  CHECK_FALSE(parse_model_kind("graphrnn").has_value());
}

TEST_CASE("er fit and generate") {
  CHECK(fit_er(oracle::complete(4)) == ErParams{4, 6});
  CHECK(fit_er(make_clique_ring(500, 4)) == ErParams{2000, 3500});
  CHECK(fit_er(Graph::from_dense_edges(5, std::vector<Edge>{})) == ErParams{5, 0});
  CHECK(code_of([] { fit_er(Graph::from_dense_edges(1, std::vector<Edge>{})); }) == ErrorCode::degenerate_input);
  for (std::uint64_t s = 0; s < 10; ++s) CHECK(generate_er({4, 6}, RngSeed{s}) == oracle::complete(4));
  const Graph empty = generate_er({100, 0}, RngSeed{1});
  CHECK(empty.node_count() == 100);
  CHECK(empty.edge_count() == 0);
}

TEST_CASE("chung-lu fit and generate") {
  CHECK(fit_chung_lu(oracle::complete(4)).weights == std::vector<double>{3, 3, 3, 3});
  CHECK(fit_chung_lu(oracle::star(3)).weights == std::vector<double>{3, 1, 1, 1});
  const auto cr = fit_chung_lu(make_clique_ring(500, 4)).weights;
  CHECK(std::count(cr.begin(), cr.end(), 3.0) == 1000);
  CHECK(std::count(cr.begin(), cr.end(), 4.0) == 1000);
  CHECK(code_of([] { fit_chung_lu(Graph::from_dense_edges(4, std::vector<Edge>{})); }) ==
        ErrorCode::degenerate_input);

  int hits = 0;
  for (std::uint64_t s = 0; s < 2000; ++s) hits += generate_chung_lu({{1.0, 1.0}}, RngSeed{s}).edge_count();
  CHECK(hits > 900);
  CHECK(hits < 1100);

  CHECK(generate_chung_lu({{0.0, 0.0, 5.0, 0.0}}, RngSeed{3}).edge_count() == 0);

  const auto w = expect::power_law_weights(300, 30.0, 2.3);
  double total = 0.0, oracle_sum = 0.0;
  for (double x : w) total += x;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) oracle_sum += std::min(1.0, w[i] * w[j] / total);
  CHECK(chung_lu_expected_edges(w) == doctest::Approx(oracle_sum).epsilon(1e-12));
}

TEST_CASE("generator edge counts match analytic expectations") {
  for (const auto& c : expect::all()) {
    INFO(c.label << ": empirical " << c.empirical << " expected " << c.expected << " tol " << c.tolerance);
    CHECK(c.ok());
  }
}

TEST_CASE("community detection") {
  const Graph bridged = oracle::two_k5_bridge();
  const auto label = detect_communities(bridged);
  CHECK(label == std::vector<std::uint32_t>{0, 0, 0, 0, 0, 1, 1, 1, 1, 1});
  CHECK(modularity(bridged, label) == doctest::Approx(modularity_oracle(bridged, label)).epsilon(1e-12));

  double best = -1.0;
  std::vector<std::uint32_t> best_label;
  for (unsigned mask = 1; mask + 1 < (1u << 10); ++mask) {
    std::vector<std::uint32_t> l(10);
    for (int i = 0; i < 10; ++i) l[i] = (mask >> i) & 1u;
    const double q = modularity_oracle(bridged, l);
    if (q > best + 1e-12) {
      best = q;
      best_label = l;
    }
  }
  CHECK(modularity(bridged, label) == doctest::Approx(best).epsilon(1e-12));
  for (int i = 0; i < 10; ++i) CHECK((best_label[i] == best_label[0]) == (label[i] == label[0]));

  CHECK(detect_communities(oracle::complete(4)) == std::vector<std::uint32_t>{0, 0, 0, 0});
  CHECK(detect_communities(oracle::two_k2()) == std::vector<std::uint32_t>{0, 0, 1, 1});
  CHECK(detect_communities(Graph::from_dense_edges(3, std::vector<Edge>{})) ==
        std::vector<std::uint32_t>{0, 1, 2});

  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph g = oracle::random_graph(30, 0.15, 500 + s);
    if (g.edge_count() == 0) continue;
    const auto l = detect_communities(g);
    CHECK(modularity(g, l) == doctest::Approx(modularity_oracle(g, l)).epsilon(1e-10));
    CHECK(modularity(g, l) >= -1e-12);
  }
}

TEST_CASE("sbm fit and generate") {
  const auto bridged = fit_sbm(oracle::two_k5_bridge());
  CHECK(bridged.block_sizes == std::vector<std::uint64_t>{5, 5});
  CHECK(bridged.block_edge_counts == std::vector<std::vector<std::uint64_t>>{{10, 1}, {1, 10}});

  const auto k4 = fit_sbm(oracle::complete(4));
  CHECK(k4.block_edge_counts == std::vector<std::vector<std::uint64_t>>{{6}});
  CHECK(generate_sbm(k4, RngSeed{4}) == oracle::complete(4));

  const auto pairs = fit_sbm(oracle::two_k2());
  CHECK(pairs.block_edge_counts == std::vector<std::vector<std::uint64_t>>{{1, 0}, {0, 1}});

  SbmParams bip;
  bip.block_sizes = {5, 5};
  bip.assignment = {0, 0, 0, 0, 0, 1, 1, 1, 1, 1};
  bip.block_edge_counts = {{0, 25}, {25, 0}};
  const Graph kb = generate_sbm(bip, RngSeed{2});
  CHECK(kb.edge_count() == 25);
  for (NodeId u = 0; u < 5; ++u)
    for (NodeId v = 5; v < 10; ++v) CHECK(kb.has_edge(u, v));
}

TEST_CASE("kronecker moments match brute-force sums over the probability matrix") {
  for (const auto& [a, b, c, k] : std::vector<std::tuple<double, double, double, int>>{
           {0.9, 0.6, 0.2, 3}, {0.99, 0.45, 0.3, 4}, {0.5, 0.5, 0.5, 2}, {0.7, 0.1, 0.95, 5}}) {
    const std::size_t n = std::size_t{1} << k;
    std::vector<std::vector<double>> p(n, std::vector<double>(n, 1.0));
    const double init[2][2] = {{a, b}, {b, c}};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (int l = 0; l < k; ++l) p[i][j] *= init[(i >> l) & 1][(j >> l) & 1];
    double edges = 0, wedges = 0, triangles = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        edges += p[i][j];
        for (std::size_t l = j + 1; l < n; ++l) triangles += p[i][j] * p[j][l] * p[i][l];
      }
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (i != v && j != v) wedges += p[v][i] * p[v][j];
    const auto m = kronecker_expected_moments(a, b, c, k);
    CHECK(m.edges == doctest::Approx(edges).epsilon(1e-10));
    CHECK(m.wedges == doctest::Approx(wedges).epsilon(1e-10));
    CHECK(m.triangles == doctest::Approx(triangles).epsilon(1e-10));
    const double s = a + 2 * b + c, d = a + c;
    CHECK(edges == doctest::Approx((std::pow(s, k) - std::pow(d, k)) / 2.0).epsilon(1e-10));
  }
}

TEST_CASE("kronecker fit") {
  const KroneckerParams truth{0.9, 0.6, 0.2, 9};
  const double true_edges = kronecker_expected_moments(truth.a, truth.b, truth.c, truth.k).edges;
  double mean_fitted = 0.0;
  KroneckerParams fitted;
  Graph target;
  for (std::uint64_t s = 0; s < 5; ++s) {
    target = generate_kronecker(truth, RngSeed{40 + s});
    fitted = fit_kronecker(target);
    CHECK(fitted.k == 9);
    CHECK(fitted.a >= fitted.c);
    const double e = kronecker_expected_moments(fitted.a, fitted.b, fitted.c, fitted.k).edges;
    CHECK(std::abs(e / static_cast<double>(target.edge_count()) - 1.0) <= 0.05);
    mean_fitted += e / 5.0;
  }
  CHECK(std::abs(mean_fitted / true_edges - 1.0) <= 0.05);

  const auto tree = fit_kronecker(make_random_tree(500, RngSeed{8}));
  CHECK(tree.k == 9);
  CHECK(kronecker_expected_moments(tree.a, tree.b, tree.c, tree.k).triangles <= 1.5);

  const auto k4 = fit_kronecker(oracle::complete(4));
  CHECK(k4.k == 2);
  const double s = k4.a + 2 * k4.b + k4.c, d = k4.a + k4.c;
  CHECK(s * s == doctest::Approx(2.0 * 6.0 + d * d).epsilon(0.02));

  for (double x : {tree.a, tree.b, tree.c, k4.a, k4.b, k4.c}) {
    CHECK(x >= 0.001);
    CHECK(x <= 0.999);
  }
  CHECK(fit_kronecker(target) == fitted);
  CHECK(code_of([] { fit_kronecker(oracle::path(3)); }) == ErrorCode::degenerate_input);
}

TEST_CASE("kronecker generate") {
  int near_complete = 0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Graph g = generate_kronecker({0.999, 0.999, 0.999, 3}, RngSeed{s});
    CHECK(g.node_count() == 8);
    near_complete += g.edge_count() >= 26;
  }
  CHECK(near_complete >= 190);

  // Low-id quadrant share of the expected edges: a·(S^{k−1} − D^{k−1}) / (S^k − D^k).
  const double a = 0.999, bc = 0.1;
  const int k = 10;
  const double s = a + 3 * bc, d = a + bc;
  const double share = a * (std::pow(s, k - 1) - std::pow(d, k - 1)) / (std::pow(s, k) - std::pow(d, k));
  std::size_t low = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const Graph g = generate_kronecker({a, bc, bc, k}, RngSeed{seed});
    for (const auto& [u, v] : g.edges()) {
      ++total;
      low += u < 512 && v < 512;
    }
  }
  REQUIRE(total > 500);
  CHECK(share > 0.7);
  CHECK(std::abs(static_cast<double>(low) / static_cast<double>(total) - share) < 0.05);

  for (int k : {1, 4, 10, 12}) CHECK(generate_kronecker({0.7, 0.5, 0.3, k}, RngSeed{1}).node_count() == (1u << k));

  const Graph darts = generate_kronecker({0.9, 0.5, 0.2, 12}, RngSeed{5});
  const double expected = kronecker_expected_moments(0.9, 0.5, 0.2, 12).edges;
  CHECK(static_cast<double>(darts.edge_count()) > 0.8 * expected);
  CHECK(static_cast<double>(darts.edge_count()) <= 1.05 * expected);
}

TEST_CASE("bter fit") {
  const auto k4 = fit_bter(oracle::complete(4));
  CHECK(k4.degree_counts == std::map<std::size_t, std::size_t>{{3, 4}});
  CHECK(k4.clustering_by_degree.at(3) == 1.0);

  const auto st = fit_bter(oracle::star(3));
  CHECK(st.degree_counts == std::map<std::size_t, std::size_t>{{1, 3}, {3, 1}});
  CHECK(st.clustering_by_degree.at(1) == 0.0);
  CHECK(st.clustering_by_degree.at(3) == 0.0);

  const auto cr = fit_bter(make_clique_ring(500, 4));
  CHECK(cr.clustering_by_degree.at(3) == 1.0);
  CHECK(cr.clustering_by_degree.at(4) == 0.5);
  CHECK(code_of([] { fit_bter(Graph::from_dense_edges(4, std::vector<Edge>{})); }) ==
        ErrorCode::degenerate_input);
}

TEST_CASE("bter generate") {
  BterParams cliques;
  cliques.degree_counts = {{3, 40}};
  cliques.clustering_by_degree = {{3, 1.0}};
  const Graph g = generate_bter(cliques, RngSeed{1});
  CHECK(g.node_count() == 40);
  CHECK(count_triangles(g) >= 40);
  CHECK(connected_components(g).count >= 8);
  CHECK(g.edge_count() >= 60);
  CHECK(g.edge_count() <= 64);

  BterParams flat;
  flat.degree_counts = {{2, 50}, {5, 50}};
  flat.clustering_by_degree = {{2, 0.0}, {5, 0.0}};
  double edges = 0.0;
  for (std::uint64_t s = 0; s < 50; ++s) edges += static_cast<double>(generate_bter(flat, RngSeed{s}).edge_count());
  std::vector<double> w(50, 2.0);
  w.insert(w.end(), 50, 5.0);
  CHECK(edges / 50.0 == doctest::Approx(chung_lu_expected_edges(w)).epsilon(0.05));

  const Graph ring = make_clique_ring(125, 4);
  const auto params = fit_bter(ring);
  double cc = 0.0;
  for (std::uint64_t s = 0; s < 50; ++s) cc += average_clustering(generate_bter(params, RngSeed{s}));
  CHECK(cc / 50.0 >= 0.4);
}

TEST_CASE("bter degree fidelity beats er") {
  const Graph& src = power_law_source();
  const auto target = degree_distribution(src);
  const auto pooled = [&](const ModelParams& params) {
    std::map<std::int64_t, double> counts;
    for (std::uint64_t s = 0; s < 20; ++s)
      for (const auto& [d, c] : degree_histogram(generate(params, RngSeed{s})))
        counts[static_cast<std::int64_t>(d)] += static_cast<double>(c);
    return Distribution::from_counts(counts);
  };
  const double bter = js_divergence(target, pooled(fit_bter(src)));
  const double er = js_divergence(target, pooled(fit_er(src)));
  INFO("bter " << bter << " er " << er);
  CHECK(bter <= er);
}

TEST_CASE("dispatch, json round trip and determinism") {
  const Graph src = make_clique_ring(12, 4);
  CHECK(std::get<ErParams>(fit(ModelKind::er, src)) == fit_er(src));
  CHECK(std::get<ChungLuParams>(fit(ModelKind::chung_lu, src)) == fit_chung_lu(src));
  CHECK(std::get<SbmParams>(fit(ModelKind::sbm, src)) == fit_sbm(src));
  for (auto kind : {ModelKind::er, ModelKind::chung_lu, ModelKind::sbm, ModelKind::kronecker, ModelKind::bter}) {
    const auto params = fit(kind, src);
    CHECK(kind_of(params) == kind);
    const std::string text = to_json(params);
    CHECK(params_from_json(text) == params);
    CHECK(to_json(params_from_json(text)) == text);
    CHECK(generate(params, RngSeed{77}) == generate(params, RngSeed{77}));
  }
  CHECK(to_json(KroneckerParams{0.9, 0.6, 0.2, 9}).find("\"initiator\":[[0.9,0.6],[0.6,0.2]]") != std::string::npos);
  CHECK(code_of([] { params_from_json("{\"model\":\"graphrnn\"}"); }) == ErrorCode::parse);
  CHECK(code_of([] { params_from_json("not json"); }) == ErrorCode::parse);
  CHECK(code_of([] { generate(ErParams{100, 0}, RngSeed{1}); }) == ErrorCode::generation_degenerate);
}
