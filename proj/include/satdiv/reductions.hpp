#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "satdiv/model.hpp"

namespace satdiv::reductions {

/// Simple undirected graph on vertices 1..N.
struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, input order preserved
};

/// Checks N >= 0, endpoints in [1, N], no loops, no duplicates. Normalises
/// each edge to (min, max). Throws BadParam.
Graph make_graph(int vertices, std::vector<std::pair<int, int>> edges);

/// "N M" then M lines "u v". Throws ParseError.
Graph parse_graph(std::string_view text);
Graph read_graph(const std::filesystem::path& path);
std::string format_graph(const Graph& g);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph path_graph(int n);

struct ReductionOutput {
  Instance instance;
  ThresholdSpec tau;
  Rational target_budget;
  nlohmann::json mapping;
};

/// Agents = edges, projects = vertices, endpoints demand 1/k, tau = m-1, budget 1.
/// YES iff G has a vertex cover of size <= k. Throws BadParam (k < 2), EmptyGraph.
ReductionOutput vc_to_allsat_m_minus_1(const Graph& g, int k);

/// Pads G with c+1 disjoint edges, k += c+1; c-1 private projects per agent
/// with demand (k-2)/((c-1)k); tau = m-c. YES iff VC(G) <= k (original k).
ReductionOutput vc_to_allsat_m_minus_c(const Graph& g, int k, int c);

/// Adds universal vertices until N >= 2k+2; N interesting and N-2k-2 idle
/// projects; tau = m/2; everyone satisfiable within k/(N-2) iff IS(G) >= k.
ReductionOutput is_to_minbudget_half(const Graph& g, int k);

/// Endpoints demand 1/2, tau = m-1. Minimum budget = VC(G)/2.
ReductionOutput vc_to_minbudget_m_minus_1(const Graph& g);

/// Endpoints demand 1/m^2, every other project (m^2-2)/((m-2)m^2), tau = 1.
/// Satisfiable within k/m^2 iff VC(G) <= k.
ReductionOutput vc_to_minbudget_tau1(const Graph& g, int k);

/// Exact minimum vertex cover / maximum independent set by subset
/// enumeration. Throws TooLarge for N > 20.
int brute_force_vc(const Graph& g);
int brute_force_is(const Graph& g);

bool is_connected(const Graph& g);

/// One representative per isomorphism class of connected graphs with
/// 2..max_vertices vertices (max_vertices <= 6).
std::vector<Graph> connected_graphs(int max_vertices);

struct NamedGraph {
  std::string name;
  Graph graph;
};
/// K3, C5, C6, K4, K_{1,4}.
std::vector<NamedGraph> named_graphs();

/// Reduction names accepted by the CLI.
const std::vector<std::string>& reduction_names();

}  // namespace satdiv::reductions
