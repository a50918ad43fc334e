#include "x3/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "x3/errors.hpp"

namespace x3 {

Digraph::Digraph(int n) : n_(n), out_(n), in_(n), fromto_(n * n, -1) {}

int Digraph::add_arc(int tail, int head) {
  if (tail == head) {
    throw LoopArcError("loop arc at vertex " + std::to_string(tail));
  }
  if (tail < 0 || tail >= n_ || head < 0 || head >= n_) {
    throw ParseError("arc endpoint out of range: " + std::to_string(tail) +
                     " " + std::to_string(head));
  }
  int id = static_cast<int>(arcs_.size());
  arcs_.push_back({tail, head});
  out_[tail].push_back(id);
  in_[head].push_back(id);
  if (fromto_[tail * n_ + head] < 0) fromto_[tail * n_ + head] = id;
  return id;
}

std::vector<int> Digraph::arcs_from_to(int u, int v) const {
  std::vector<int> ids;
  for (int a : out_[u]) {
    if (arcs_[a].head == v) ids.push_back(a);
  }
  return ids;
}

std::vector<int> Digraph::arcs_between(int u, int v) const {
  std::vector<int> ids = arcs_from_to(u, v);
  std::vector<int> back = arcs_from_to(v, u);
  ids.insert(ids.end(), back.begin(), back.end());
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<int> Digraph::out_neighbors(int v) const {
  std::vector<int> heads;
  for (int a : out_[v]) heads.push_back(arcs_[a].head);
  std::sort(heads.begin(), heads.end());
  heads.erase(std::unique(heads.begin(), heads.end()), heads.end());
  return heads;
}

std::vector<int> Digraph::in_neighbors(int v) const {
  std::vector<int> tails;
  for (int a : in_[v]) tails.push_back(arcs_[a].tail);
  std::sort(tails.begin(), tails.end());
  tails.erase(std::unique(tails.begin(), tails.end()), tails.end());
  return tails;
}

std::vector<int> Digraph::neighbors(int v) const {
  std::vector<int> nb = out_neighbors(v);
  std::vector<int> tails = in_neighbors(v);
  nb.insert(nb.end(), tails.begin(), tails.end());
  std::sort(nb.begin(), nb.end());
  nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  return nb;
}

bool Digraph::is_simple() const {
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (u != v && arcs_from_to(u, v).size() > 1) return false;
    }
  }
  return true;
}

bool Digraph::is_tournament() const {
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (arcs_between(u, v).size() != 1) return false;
    }
  }
  return true;
}

Digraph build_digraph(int n, const std::vector<std::pair<int, int>>& arcs) {
  Digraph d(n);
  for (auto [t, h] : arcs) d.add_arc(t, h);
  return d;
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  g.n = n;
  for (auto [u, v] : edges) {
    if (u == v) throw LoopArcError("loop edge at vertex " + std::to_string(u));
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError("edge endpoint out of range: " + std::to_string(u) +
                       " " + std::to_string(v));
    }
    if (u > v) std::swap(u, v);
    g.edges.emplace_back(u, v);
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  g.adj.assign(n, {});
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& list : g.adj) std::sort(list.begin(), list.end());
  return g;
}

Digraph biorient(const Graph& g) {
  Digraph d(g.n);
  for (auto [u, v] : g.edges) {
    d.add_arc(u, v);
    d.add_arc(v, u);
  }
  return d;
}

Graph underlying_graph(const Digraph& d) {
  std::vector<std::pair<int, int>> edges;
  for (const Arc& a : d.arcs()) {
    edges.emplace_back(std::min(a.tail, a.head), std::max(a.tail, a.head));
  }
  return build_graph(d.n(), edges);
}

bool pair_redundant(const Digraph& d, int u, int v) {
  auto contained = [&](int a, int b) {
    // every arc leaving a runs to b
    for (int id : d.out_arcs(a)) {
      if (d.arc(id).head != b) return false;
    }
    return true;
  };
  return contained(u, v) || contained(v, u);
}

CollapseResult collapse_parallel(const Digraph& d) {
  CollapseResult r;
  r.digraph = Digraph(d.n());
  r.arc_map.assign(d.m(), -1);
  // first pass: representative (lowest old id) per (tail, head) class
  std::vector<int> rep(d.n() * d.n(), -1);
  for (int id = 0; id < d.m(); ++id) {
    const Arc& a = d.arc(id);
    int key = a.tail * d.n() + a.head;
    if (rep[key] < 0) rep[key] = id;
  }
  std::vector<int> new_id(d.n() * d.n(), -1);
  for (int id = 0; id < d.m(); ++id) {
    const Arc& a = d.arc(id);
    int key = a.tail * d.n() + a.head;
    if (rep[key] == id) {
      new_id[key] = r.digraph.add_arc(a.tail, a.head);
      r.rep.push_back(id);
    }
    r.arc_map[id] = new_id[key];
  }
  return r;
}

ReduceResult remove_redundant(const Digraph& d) {
  ReduceResult r;
  r.digraph = Digraph(d.n());
  r.old_to_new.assign(d.m(), -1);
  for (int id = 0; id < d.m(); ++id) {
    const Arc& a = d.arc(id);
    if (pair_redundant(d, a.tail, a.head)) continue;
    r.old_to_new[id] = r.digraph.add_arc(a.tail, a.head);
    r.kept.push_back(id);
  }
  return r;
}

ArcSubgraph subdigraph_by_arcs(const Digraph& d, const std::vector<int>& ids) {
  ArcSubgraph s;
  s.digraph = Digraph(d.n());
  for (int id : ids) {
    const Arc& a = d.arc(id);
    s.digraph.add_arc(a.tail, a.head);
    s.kept.push_back(id);
  }
  return s;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> index(g.n, -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    index[vertices[i]] = i;
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges) {
    if (index[u] >= 0 && index[v] >= 0) {
      edges.emplace_back(index[u], index[v]);
    }
  }
  return build_graph(static_cast<int>(vertices.size()), edges);
}

namespace {

// Strips comments and pulls the next meaningful line.
bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string word;
    if (probe >> word) return true;
  }
  return false;
}

std::vector<std::pair<int, int>> read_pair_list(std::istream& in, int& n) {
  std::string line;
  if (!next_data_line(in, line)) throw ParseError("missing header line");
  std::istringstream head(line);
  int m = 0;
  if (!(head >> n >> m) || n < 0 || m < 0) {
    throw ParseError("bad header line: " + line);
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(m);
  while (static_cast<int>(pairs.size()) < m) {
    if (!next_data_line(in, line)) {
      throw ParseError("expected " + std::to_string(m) + " arcs, got " +
                       std::to_string(pairs.size()));
    }
    std::istringstream row(line);
    int t = 0, h = 0;
    while (row >> t) {
      if (!(row >> h)) throw ParseError("odd endpoint count on line: " + line);
      pairs.emplace_back(t, h);
    }
  }
  if (static_cast<int>(pairs.size()) != m) {
    throw ParseError("arc count mismatch: header says " + std::to_string(m));
  }
  return pairs;
}

}  // namespace

Digraph read_digraph(std::istream& in) {
  int n = 0;
  auto pairs = read_pair_list(in, n);
  return build_digraph(n, pairs);
}

void write_digraph(std::ostream& out, const Digraph& d) {
  out << d.n() << ' ' << d.m() << '\n';
  for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
}

Graph read_graph(std::istream& in) {
  int n = 0;
  auto pairs = read_pair_list(in, n);
  return build_graph(n, pairs);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.n << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

std::string to_dot(const Digraph& d) {
  std::ostringstream out;
  out << "digraph D {\n";
  for (int v = 0; v < d.n(); ++v) out << "  " << v << ";\n";
  for (const Arc& a : d.arcs()) {
    out << "  " << a.tail << " -> " << a.head << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.n; ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace x3
