#include "satdiv/reductions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

#include "satdiv/io.hpp"

namespace satdiv::reductions {

using satdiv::to_string;

using nlohmann::json;

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::BadParam, what);
}

void require_edges(const Graph& g) {
  if (g.edges.empty()) throw Error(ErrorKind::EmptyGraph, "graph has no edges");
}

json edge_list(const Graph& g) {
  json out = json::array();
  for (const auto& [u, v] : g.edges) out.push_back({u, v});
  return out;
}

json base_mapping(const std::string& name, const Graph& original, const Graph& used) {
  json agents = json::array();
  for (std::size_t i = 0; i < used.edges.size(); ++i)
    agents.push_back({{"agent", i + 1}, {"edge", {used.edges[i].first, used.edges[i].second}},
                      {"padding", i >= original.edges.size()}});
  return {{"reduction", name},
          {"original_graph", {{"vertices", original.vertices}, {"edges", edge_list(original)}}},
          {"agents", agents}};
}

json vertex_projects(const Graph& original, int count) {
  json out = json::array();
  for (int v = 1; v <= count; ++v)
    out.push_back({{"project", v}, {"vertex", v}, {"padding", v > original.vertices}});
  return out;
}

}  // namespace

Graph make_graph(int vertices, std::vector<std::pair<int, int>> edges) {
  require(vertices >= 0, "vertex count must be non-negative");
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges) {
    require(u >= 1 && u <= vertices && v >= 1 && v <= vertices,
            "edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside 1.." +
                std::to_string(vertices));
    require(u != v, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    require(seen.insert({u, v}).second, "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  return Graph{vertices, std::move(edges)};
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw Error(ErrorKind::ParseError, "graph header must be 'N M'");
  std::vector<std::pair<int, int>> edges;
  for (long long e = 0; e < m; ++e) {
    long long u = 0, v = 0;
    if (!(in >> u >> v))
      throw Error(ErrorKind::ParseError, "expected " + std::to_string(m) + " edges, read " + std::to_string(e));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorKind::ParseError, "trailing content after the edge list");
  try {
    return make_graph(static_cast<int>(n), std::move(edges));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

Graph read_graph(const std::filesystem::path& path) { return parse_graph(io::read_text(path)); }

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertices << ' ' << g.edges.size() << '\n';
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  return make_graph(n, std::move(e));
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u < n; ++u) e.emplace_back(u, u + 1);
  e.emplace_back(1, n);
  return make_graph(n, std::move(e));
}

Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int v = 2; v <= leaves + 1; ++v) e.emplace_back(1, v);
  return make_graph(leaves + 1, std::move(e));
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 1; u < n; ++u) e.emplace_back(u, u + 1);
  return make_graph(n, std::move(e));
}

ReductionOutput vc_to_allsat_m_minus_1(const Graph& g, int k) {
  require(k >= 2, "k must be at least 2 so that rows sum to at most 1");
  require_edges(g);
  Matrix rows(g.edges.size(), Row(g.vertices, 0));
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    rows[i][g.edges[i].first - 1] = rows[i][g.edges[i].second - 1] = Rational(1, k);
  json mapping = base_mapping("vc-allsat-m1", g, g);
  mapping["projects"] = vertex_projects(g, g.vertices);
  mapping["k"] = k;
  mapping["question"] = "vertex cover of size <= k";
  return {validate_instance(std::move(rows)), ThresholdSpec::all_but(1), 1, std::move(mapping)};
}

ReductionOutput vc_to_allsat_m_minus_c(const Graph& g, int k, int c) {
  require(c >= 2, "c must be at least 2");
  require(k >= 0, "k must be non-negative");
  require_edges(g);
  Graph padded = g;
  for (int t = 0; t < c + 1; ++t) {
    padded.edges.emplace_back(padded.vertices + 1, padded.vertices + 2);
    padded.vertices += 2;
  }
  const int kk = k + c + 1;
  const int nv = padded.vertices;
  const int ne = static_cast<int>(padded.edges.size());
  const int m = nv + (c - 1) * ne;
  const Rational endpoint(1, kk);
  const Rational priv(kk - 2, (c - 1) * kk);
  Matrix rows(ne, Row(m, 0));
  json projects = vertex_projects(g, nv);
  for (int i = 0; i < ne; ++i) {
    rows[i][padded.edges[i].first - 1] = rows[i][padded.edges[i].second - 1] = endpoint;
    for (int t = 0; t < c - 1; ++t) {
      const int j = nv + i * (c - 1) + t;
      rows[i][j] = priv;
      projects.push_back({{"project", j + 1}, {"private_to_agent", i + 1}});
    }
  }
  json mapping = base_mapping("vc-allsat-mc", g, padded);
  mapping["projects"] = projects;
  mapping["k"] = k;
  mapping["c"] = c;
  mapping["padded_k"] = kk;
  mapping["padded_graph"] = {{"vertices", nv}, {"edges", edge_list(padded)}};
  mapping["question"] = "vertex cover of the original graph of size <= k";
  return {validate_instance(std::move(rows), Tightness::Tight), ThresholdSpec::all_but(c), 1, std::move(mapping)};
}

ReductionOutput is_to_minbudget_half(const Graph& g, int k) {
  require(k >= 1, "k must be at least 1");
  require_edges(g);
  Graph padded = g;
  while (padded.vertices < 2 * k + 2) {
    const int u = ++padded.vertices;
    for (int v = 1; v < u; ++v) padded.edges.emplace_back(v, u);
  }
  const int n_v = padded.vertices;
  const int m = 2 * n_v - 2 * k - 2;
  const Rational d(1, n_v - 2);
  Matrix rows(padded.edges.size(), Row(m, 0));
  for (std::size_t i = 0; i < padded.edges.size(); ++i)
    for (int v = 1; v <= n_v; ++v)
      if (v != padded.edges[i].first && v != padded.edges[i].second) rows[i][v - 1] = d;
  json projects = vertex_projects(g, n_v);
  for (int j = n_v + 1; j <= m; ++j) projects.push_back({{"project", j}, {"idle", true}});
  json mapping = base_mapping("is-minbudget-half", g, padded);
  mapping["projects"] = projects;
  mapping["k"] = k;
  mapping["padded_graph"] = {{"vertices", n_v}, {"edges", edge_list(padded)}};
  mapping["question"] = "independent set of size >= k";
  return {validate_instance(std::move(rows)), ThresholdSpec::fixed(m / 2), Rational(k, n_v - 2),
          std::move(mapping)};
}

ReductionOutput vc_to_minbudget_m_minus_1(const Graph& g) {
  require_edges(g);
  Matrix rows(g.edges.size(), Row(g.vertices, 0));
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    rows[i][g.edges[i].first - 1] = rows[i][g.edges[i].second - 1] = Rational(1, 2);
  json mapping = base_mapping("vc-minbudget-m1", g, g);
  mapping["projects"] = vertex_projects(g, g.vertices);
  mapping["question"] = "minimum budget equals half the minimum vertex cover";
  return {validate_instance(std::move(rows)), ThresholdSpec::all_but(1), Rational(g.vertices, 2),
          std::move(mapping)};
}

ReductionOutput vc_to_minbudget_tau1(const Graph& g, int k) {
  require_edges(g);
  const int m = g.vertices;
  require(m >= 3, "need at least 3 vertices");
  require(k >= 1, "k must be at least 1");
  const int m2 = m * m;
  // k < m + 2 + 2/(m-2), i.e. k(m-2) < m^2 - 2
  require(static_cast<long long>(k) * (m - 2) < m2 - 2, "k too large for this reduction");
  const Rational endpoint(1, m2);
  const Rational other(m2 - 2, (m - 2) * m2);
  Matrix rows(g.edges.size(), Row(m, other));
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    rows[i][g.edges[i].first - 1] = rows[i][g.edges[i].second - 1] = endpoint;
  json mapping = base_mapping("vc-minbudget-tau1", g, g);
  mapping["projects"] = vertex_projects(g, m);
  mapping["k"] = k;
  mapping["question"] = "vertex cover of size <= k";
  return {validate_instance(std::move(rows), Tightness::Tight), ThresholdSpec::one(), Rational(k, m2),
          std::move(mapping)};
}

int brute_force_vc(const Graph& g) {
  if (g.vertices > 20) throw Error(ErrorKind::TooLarge, "brute force is limited to 20 vertices");
  int best = g.vertices;
  for (std::uint32_t s = 0; s < (1u << g.vertices); ++s) {
    const int size = std::popcount(s);
    if (size >= best) continue;
    bool cover = true;
    for (const auto& [u, v] : g.edges)
      if (!(s >> (u - 1) & 1) && !(s >> (v - 1) & 1)) {
        cover = false;
        break;
      }
    if (cover) best = size;
  }
  return best;
}

int brute_force_is(const Graph& g) {
  if (g.vertices > 20) throw Error(ErrorKind::TooLarge, "brute force is limited to 20 vertices");
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << g.vertices); ++s) {
    const int size = std::popcount(s);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& [u, v] : g.edges)
      if ((s >> (u - 1) & 1) && (s >> (v - 1) & 1)) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

bool is_connected(const Graph& g) {
  if (g.vertices == 0) return true;
  std::vector<int> parent(g.vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = g.vertices;
  for (const auto& [u, v] : g.edges) {
    const int a = find(u - 1), b = find(v - 1);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::vector<Graph> connected_graphs(int max_vertices) {
  require(max_vertices <= 6, "graph enumeration is limited to 6 vertices");
  std::vector<Graph> out;
  for (int n = 2; n <= max_vertices; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
    for (std::size_t t = 0; t < slots.size(); ++t)
      index[slots[t].first][slots[t].second] = index[slots[t].second][slots[t].first] = static_cast<int>(t);
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    const std::uint32_t total = 1u << slots.size();
    for (std::uint32_t mask = 1; mask < total; ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (std::size_t t = 0; t < slots.size(); ++t)
        if (mask >> t & 1) edges.emplace_back(slots[t].first + 1, slots[t].second + 1);
      Graph g{n, edges};
      if (!is_connected(g)) continue;
      // Keep the graph only if it is the smallest mask in its isomorphism class.
      bool canonical = true;
      for (const auto& perm : perms) {
        std::uint32_t image = 0;
        for (std::size_t t = 0; t < slots.size(); ++t)
          if (mask >> t & 1) image |= 1u << index[perm[slots[t].first]][perm[slots[t].second]];
        if (image < mask) {
          canonical = false;
          break;
        }
      }
      if (canonical) out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<NamedGraph> named_graphs() {
  return {{"K3", complete_graph(3)},
          {"C5", cycle_graph(5)},
          {"C6", cycle_graph(6)},
          {"K4", complete_graph(4)},
          {"K1,4", star_graph(4)}};
}

const std::vector<std::string>& reduction_names() {
  static const std::vector<std::string> names{"vc-allsat-m1", "vc-allsat-mc", "is-minbudget-half",
                                              "vc-minbudget-m1", "vc-minbudget-tau1"};
  return names;
}

}  // namespace satdiv::reductions
