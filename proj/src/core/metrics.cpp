#include <algorithm>
#include <cmath>
#include <string>

#include "mirrorbench/error.hpp"
#include "mirrorbench/metrics.hpp"

namespace mirrorbench {

std::string_view metric_name(MetricId id) noexcept {
  switch (id) {
    case MetricId::degree_js: return "degree-js";
    case MetricId::pagerank_js: return "pagerank-js";
    case MetricId::portrait: return "portrait";
    case MetricId::lambda: return "lambda";
    case MetricId::rgfd_l1: return "rgfd-l1";
    case MetricId::rgfd_l2: return "rgfd-l2";
    case MetricId::netlsd: return "netlsd";
    case MetricId::avg_cc: return "avg-cc";
    case MetricId::avg_pl: return "avg-pl";
  }
  return "?";
}

std::optional<MetricId> parse_metric(std::string_view name) noexcept {
  for (MetricId id : kAllMetrics) {
    if (metric_name(id) == name) return id;
  }
  return std::nullopt;
}

bool is_spectral(MetricId id) noexcept { return id == MetricId::lambda || id == MetricId::netlsd; }

std::vector<MetricId> parse_metric_list(std::string_view list) {
  std::vector<MetricId> out;
  auto add = [&out](MetricId id) {
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  };
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const auto comma = list.find(',', pos);
    auto token = list.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token == "all") {
      for (MetricId id : kAllMetrics) add(id);
    } else if (token == "non-spectral") {
      for (MetricId id : kAllMetrics) {
        if (!is_spectral(id)) add(id);
      }
    } else if (!token.empty()) {
      const auto id = parse_metric(token);
      if (!id) throw Error(ErrorCode::usage, "unknown metric '" + std::string(token) + "'");
      add(*id);
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw Error(ErrorCode::usage, "empty metric list");
  return out;
}

GraphProfile::GraphProfile(const Graph& g, const std::vector<MetricId>& metrics) {
  for (MetricId id : metrics) {
    switch (id) {
      case MetricId::degree_js:
        if (!degrees_) degrees_ = degree_distribution(g);
        break;
      case MetricId::pagerank_js:
        if (!pagerank_) pagerank_ = mirrorbench::pagerank(g).scores;
        break;
      case MetricId::portrait:
        if (!portrait_) portrait_ = mirrorbench::portrait(g);
        break;
      case MetricId::lambda:
        if (!spectrum_) spectrum_ = metric_spectrum(g, LaplacianKind::combinatorial);
        break;
      case MetricId::rgfd_l1:
      case MetricId::rgfd_l2:
        if (!graphlets_) graphlets_ = graphlet_counts(g);
        break;
      case MetricId::netlsd:
        if (!netlsd_) netlsd_ = netlsd_descriptor(g);
        break;
      case MetricId::avg_cc:
        if (!avg_cc_) avg_cc_ = average_clustering(g);
        break;
      case MetricId::avg_pl:
        if (!avg_pl_) avg_pl_ = average_path_length(g).value;
        break;
    }
  }
}

namespace {

template <typename T>
const T& require(const std::optional<T>& slot, std::string_view what) {
  if (!slot) throw Error(ErrorCode::usage, "graph profile lacks " + std::string(what));
  return *slot;
}

}  // namespace

const Distribution& GraphProfile::degrees() const { return require(degrees_, "degrees"); }
const std::vector<double>& GraphProfile::pagerank() const { return require(pagerank_, "pagerank"); }
const Portrait& GraphProfile::portrait() const { return require(portrait_, "portrait"); }
const SpectrumResult& GraphProfile::combinatorial_spectrum() const { return require(spectrum_, "spectrum"); }
const NetlsdDescriptor& GraphProfile::netlsd() const { return require(netlsd_, "netlsd"); }
const GraphletVector& GraphProfile::graphlets() const { return require(graphlets_, "graphlets"); }
double GraphProfile::avg_clustering() const { return require(avg_cc_, "clustering"); }
double GraphProfile::avg_path_length() const { return require(avg_pl_, "path length"); }

double evaluate(MetricId id, const GraphProfile& p1, const GraphProfile& p2) {
  switch (id) {
    case MetricId::degree_js: return js_divergence(p1.degrees(), p2.degrees());
    case MetricId::pagerank_js: return binned_js(p1.pagerank(), p2.pagerank());
    case MetricId::portrait: return portrait_divergence(p1.portrait(), p2.portrait());
    case MetricId::lambda: return lambda_distance(p1.combinatorial_spectrum(), p2.combinatorial_spectrum());
    case MetricId::rgfd_l1: return rgfd(p1.graphlets(), p2.graphlets(), Norm::l1);
    case MetricId::rgfd_l2: return rgfd(p1.graphlets(), p2.graphlets(), Norm::l2);
    case MetricId::netlsd: return netlsd_distance(p1.netlsd(), p2.netlsd());
    case MetricId::avg_cc: return std::abs(p1.avg_clustering() - p2.avg_clustering());
    case MetricId::avg_pl: return std::abs(p1.avg_path_length() - p2.avg_path_length());
  }
  throw Error(ErrorCode::usage, "unknown metric");
}

double evaluate(MetricId id, const Graph& g1, const Graph& g2) {
  return evaluate(id, GraphProfile(g1, {id}), GraphProfile(g2, {id}));
}

}  // namespace mirrorbench
