#include <algorithm>
#include <string>

#include "x3/extractor.hpp"

namespace x3 {

namespace {

bool covered(const Digraph& f, int z) {
  return f.out_degree(z) > 0 || f.in_degree(z) > 0;
}

}  // namespace

int spare_out_arc(const Digraph& d, const Digraph& f, int v) {
  for (int id : d.out_arcs(v)) {
    const Arc& a = d.arc(id);
    if (f.has_arc(a.tail, a.head)) continue;
    int z = a.head;
    if (!covered(f, z) || f.out_degree(z) == 0 || f.out_degree(z) == 2)
      return id;
  }
  return -1;
}

bool has_spare_arcs(const Digraph& f, const Digraph& d) {
  for (int v = 0; v < f.n(); ++v) {
    if (f.out_degree(v) != 1) continue;
    int w = f.arc(f.out_arcs(v)[0]).head;
    // a redundant pair leaves v no potential arc at all; nothing to check
    if (pair_redundant(d, v, w)) continue;
    if (spare_out_arc(d, f, v) < 0) return false;
  }
  return true;
}

Orientation orient_with_spare_arcs(const Graph& h, const Digraph& d) {
  if (h.n != d.n())
    throw NoOrientationError("graph and digraph vertex counts differ");
  const int ne = h.m();
  std::vector<char> dir(ne, 0);  // edge stored (a,b) with a<b; 0: a->b, 1: b->a
  for (int e = 0; e < ne; ++e) {
    auto [a, b] = h.edges[e];
    if (d.arc_from_to(a, b) >= 0)
      dir[e] = 0;
    else if (d.arc_from_to(b, a) >= 0)
      dir[e] = 1;
    else
      throw NoOrientationError("edge " + std::to_string(a) + "-" +
                               std::to_string(b) + " has no arc to inherit");
  }
  auto materialize = [&]() {
    Digraph f(d.n());
    for (int e = 0; e < ne; ++e) {
      auto [a, b] = h.edges[e];
      if (dir[e] == 0)
        f.add_arc(a, b);
      else
        f.add_arc(b, a);
    }
    return f;
  };
  // Repair pass: while some out-degree-1 vertex lacks a spare arc, apply
  // the first available reorientation. Every move lowers the number of
  // out-degree-1 vertices by at least one and never creates a new one,
  // so the loop settles within one flip per edge.
  //   A: reverse an incoming edge z->v (needs arc v->z and out-degree(z)
  //      != 2): v reaches out-degree 2.
  //   B: reverse v's own edge v->w (needs arc w->v and out-degree(w) >=
  //      1): v drops to out-degree 0.
  //   D: some potential target z of v sits at out-degree 1 on an edge
  //      z->y; reverse it (needs arc y->z and out-degree(y) >= 1): z
  //      drops to out-degree 0 and becomes a spare for v.
  Digraph f = materialize();
  for (int guard = d.n() + ne + 1; guard > 0; --guard) {
    int bad = -1;
    for (int v = 0; v < f.n() && bad < 0; ++v) {
      if (f.out_degree(v) != 1) continue;
      int w = f.arc(f.out_arcs(v)[0]).head;
      if (pair_redundant(d, v, w)) continue;
      if (spare_out_arc(d, f, v) < 0) bad = v;
    }
    if (bad < 0) {
      Orientation out;
      out.f = std::move(f);
      for (int e = 0; e < ne; ++e) {
        auto [a, b] = h.edges[e];
        int tail = dir[e] == 0 ? a : b;
        int head = dir[e] == 0 ? b : a;
        out.f_to_d.push_back(d.arc_from_to(tail, head));
      }
      for (int v = 0; v < d.n(); ++v)
        if (covered(out.f, v)) out.vertices.push_back(v);
      for (int id = 0; id < d.m(); ++id) {
        const Arc& a = d.arc(id);
        if (!out.f.has_arc(a.tail, a.head)) out.potential_arcs.push_back(id);
      }
      return out;
    }
    auto edge_at = [&](int x, int y) {
      for (int e = 0; e < ne; ++e) {
        auto [a, b] = h.edges[e];
        if ((a == x && b == y) || (a == y && b == x)) return e;
      }
      return -1;
    };
    int flip_edge = -1, best_tail = -1;
    for (int e = 0; e < ne; ++e) {
      auto [a, b] = h.edges[e];
      int tail = dir[e] == 0 ? a : b;
      int head = dir[e] == 0 ? b : a;
      if (head != bad) continue;
      if (d.arc_from_to(bad, tail) < 0) continue;
      if (f.out_degree(tail) == 2) continue;
      if (flip_edge < 0 || tail < best_tail) {
        flip_edge = e;
        best_tail = tail;
      }
    }
    if (flip_edge < 0) {
      int w = f.arc(f.out_arcs(bad)[0]).head;
      if (d.arc_from_to(w, bad) >= 0 && f.out_degree(w) >= 1)
        flip_edge = edge_at(bad, w);
    }
    if (flip_edge < 0) {
      for (int id : d.out_arcs(bad)) {
        const Arc& pa = d.arc(id);
        if (f.has_arc(pa.tail, pa.head)) continue;
        int z = pa.head;
        if (f.out_degree(z) != 1) continue;
        int y = f.arc(f.out_arcs(z)[0]).head;
        if (d.arc_from_to(y, z) < 0 || f.out_degree(y) < 1) continue;
        flip_edge = edge_at(z, y);
        break;
      }
    }
    if (flip_edge < 0)
      throw NoOrientationError("no flip available at vertex " +
                               std::to_string(bad));
    dir[flip_edge] ^= 1;
    f = materialize();
  }
  throw NoOrientationError("flip loop failed to settle");
}

ScoredArcs score_arcs(const Digraph& f) {
  ScoredArcs out;
  out.score.resize(f.m());
  int best = -1;
  for (int id = 0; id < f.m(); ++id) {
    const Arc& a = f.arc(id);
    int sv = f.out_degree(a.tail) + f.out_degree(a.head) - 1;
    out.score[id] = sv;
    out.lhs_sum += sv;
    if (best < 0 || sv > out.score[best]) best = id;
  }
  out.argmax = best;
  for (int v = 0; v < f.n(); ++v) {
    long long od = f.out_degree(v);
    long long dg = od + f.in_degree(v);
    out.rhs_sum += od * (dg - 1);
  }
  return out;
}

SinkFanPrune prune_sink_fans(const Digraph& f, int k) {
  SinkFanPrune out;
  std::vector<char> sink(f.n(), 0);
  for (int v = 0; v < f.n(); ++v) {
    if (f.out_degree(v) == 0) {
      sink[v] = 1;
      out.q_sinks.push_back(v);
    }
  }
  std::vector<char> special(f.n(), 0);
  for (int v = 0; v < f.n(); ++v) {
    if (f.out_degree(v) != k - 2 || f.in_degree(v) != 1) continue;
    bool all_sinks = true;
    for (int id : f.out_arcs(v)) all_sinks = all_sinks && sink[f.arc(id).head];
    if (all_sinks) {
      special[v] = 1;
      out.w_vertices.push_back(v);
    }
  }
  out.f_prime = Digraph(f.n());
  for (int id = 0; id < f.m(); ++id) {
    const Arc& a = f.arc(id);
    if (special[a.tail]) {
      out.w_out_arcs.push_back(id);
    } else {
      out.f_prime.add_arc(a.tail, a.head);
      out.fp_to_f.push_back(id);
    }
  }
  return out;
}

std::vector<int> ArcSelection::arcs_u() const {
  std::vector<int> out;
  for (int w : nbrs_u)
    if (cont_u[w] >= 0) out.push_back(cont_u[w]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> ArcSelection::arcs_v() const {
  std::vector<int> out;
  for (int w : nbrs_v)
    if (cont_v[w] >= 0) out.push_back(cont_v[w]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> ArcSelection::shared() const {
  std::vector<int> out;
  for (int w : nbrs_u)
    if (cont_u[w] >= 0 && cont_u[w] == cont_v[w]) out.push_back(cont_u[w]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> ArcSelection::shared_tails() const {
  std::vector<int> out;
  for (int w : nbrs_u)
    if (cont_u[w] >= 0 && cont_u[w] == cont_v[w]) out.push_back(w);
  return out;
}

std::vector<int> ArcSelection::common_neighbors() const {
  std::vector<int> out;
  std::set_intersection(nbrs_u.begin(), nbrs_u.end(), nbrs_v.begin(),
                        nbrs_v.end(), std::back_inserter(out));
  return out;
}

ArcSelection select_phi(const Digraph& f, const Digraph& d, int u, int v) {
  ArcSelection sel;
  sel.u = u;
  sel.v = v;
  sel.cont_u.assign(d.n(), -1);
  sel.cont_v.assign(d.n(), -1);
  for (int w : f.neighbors(u))
    if (w != v) sel.nbrs_u.push_back(w);
  for (int w : f.neighbors(v))
    if (w != u) sel.nbrs_v.push_back(w);
  auto pick = [&](int w, int avoid, int skip_id) {
    for (int id : d.out_arcs(w)) {
      if (id == skip_id) continue;
      if (d.arc(id).head != avoid) return id;
    }
    return -1;
  };
  for (int w : sel.nbrs_u) {
    int id = pick(w, u, -1);
    if (id < 0)
      throw MissingChoiceError("no continuation arc at vertex " +
                               std::to_string(w) + " avoiding " +
                               std::to_string(u));
    sel.cont_u[w] = id;
  }
  for (int w : sel.nbrs_v) {
    int id = pick(w, v, -1);
    if (id < 0)
      throw MissingChoiceError("no continuation arc at vertex " +
                               std::to_string(w) + " avoiding " +
                               std::to_string(v));
    sel.cont_v[w] = id;
  }
  // Shrink the overlap: a shared choice at w moves off one side whenever
  // w offers another arc. No reassignment can create a new shared arc,
  // so the overlap size strictly decreases until this settles.
  for (;;) {
    int w_fix = -1;
    for (int w : sel.nbrs_u) {
      if (sel.cont_u[w] < 0 || sel.cont_u[w] != sel.cont_v[w]) continue;
      if (d.out_degree(w) >= 2) {
        w_fix = w;
        break;
      }
    }
    if (w_fix < 0) break;
    int cur = sel.cont_u[w_fix];
    int alt_u = pick(w_fix, u, cur);
    if (alt_u >= 0) {
      sel.cont_u[w_fix] = alt_u;
    } else {
      int alt_v = pick(w_fix, v, cur);
      if (alt_v < 0)
        throw MissingChoiceError("cannot separate the shared choice at " +
                                 std::to_string(w_fix));
      sel.cont_v[w_fix] = alt_v;
    }
  }
  sel.i = f.out_degree(u) - (f.has_arc(u, v) ? 1 : 0);
  sel.j = f.out_degree(v);
  sel.r = static_cast<int>(sel.nbrs_u.size());
  sel.s = static_cast<int>(sel.nbrs_v.size());
  sel.t = static_cast<int>(sel.shared().size());
  return sel;
}

ParallelSet parallel_set(const Digraph& f, const Digraph& d,
                         const std::vector<int>& path, int u, int v,
                         const ArcSelection& sel) {
  if (path.empty())
    throw ConstructionFailedError("parallel set needs a non-empty path");
  for (int z : path)
    if (z == u || z == v)
      throw ConstructionFailedError("path touches the selected arc");
  for (size_t g = 0; g + 1 < path.size(); ++g)
    if (!f.adjacent(path[g], path[g + 1]))
      throw ConstructionFailedError("path vertices not adjacent in the orientation");
  const int l = static_cast<int>(path.size());
  auto ucommon = sel.common_neighbors();
  auto in_common = [&](int x) {
    return std::binary_search(ucommon.begin(), ucommon.end(), x);
  };
  ParallelSet out;
  out.path = path;
  for (int g = 0; g < l; ++g) {
    int z = path[g];
    int prev = g == 0 ? u : path[g - 1];
    int next = g == l - 1 ? v : path[g + 1];
    // one arc clearing both bundle neighbours, preferring to clear the
    // selected pair as well
    int single = -1, relaxed = -1;
    for (int id : d.out_arcs(z)) {
      int hd = d.arc(id).head;
      if (hd == prev || hd == next) continue;
      if (relaxed < 0) relaxed = id;
      if (hd != u && hd != v) {
        single = id;
        break;
      }
    }
    if (single < 0) single = relaxed;
    std::vector<int> q;
    if (single >= 0) {
      q = {single};
    } else {
      int back = d.arc_from_to(z, prev);
      int fwd = d.arc_from_to(z, next);
      if (back < 0 || fwd < 0)
        throw ConstructionFailedError("path vertex lacks arcs toward its neighbours");
      // feeder: an in-neighbour clear of the bundle neighbours, preferring
      // one clear of the selected pair and their common neighbourhood
      int feeder = -1, feeder_any = -1;
      for (int y : f.in_neighbors(z)) {
        if (y == prev || y == next) continue;
        if (feeder_any < 0) feeder_any = y;
        if (y != u && y != v && !in_common(y)) {
          feeder = y;
          break;
        }
      }
      if (feeder < 0) feeder = feeder_any;
      if (feeder < 0)
        throw ConstructionFailedError("no feeder for a path bundle");
      int fout = -1;
      for (int id : d.out_arcs(feeder)) {
        if (d.arc(id).head != z) {
          fout = id;
          break;
        }
      }
      if (fout < 0)
        throw ConstructionFailedError("feeder has no arc avoiding the path");
      q = {back, fwd, fout};
    }
    out.q_sets.push_back(q);
    for (int id : q) out.arcs.push_back(id);
  }
  std::sort(out.arcs.begin(), out.arcs.end());
  out.arcs.erase(std::unique(out.arcs.begin(), out.arcs.end()), out.arcs.end());
  // prune the continuation families of everything the bundles consumed,
  // replacing same-tail where the host allows it
  auto banned = [&](int id) {
    return std::binary_search(out.arcs.begin(), out.arcs.end(), id);
  };
  auto rebuilt = [&](const std::vector<int>& nbrs, const std::vector<int>& cont,
                     int avoid) {
    std::vector<int> res;
    for (int w : nbrs) {
      int a = cont[w];
      if (a < 0) continue;
      if (banned(a)) {
        a = -1;
        for (int id : d.out_arcs(w)) {
          if (banned(id) || d.arc(id).head == avoid) continue;
          a = id;
          break;
        }
      }
      if (a >= 0) res.push_back(a);
    }
    std::sort(res.begin(), res.end());
    return res;
  };
  out.pruned_u = rebuilt(sel.nbrs_u, sel.cont_u, sel.u);
  out.pruned_v = rebuilt(sel.nbrs_v, sel.cont_v, sel.v);
  if (static_cast<int>(out.pruned_u.size()) < sel.r - 1)
    throw ConstructionFailedError("path bundles starve the first continuation family");
  if (static_cast<int>(out.pruned_v.size()) < sel.s - 2)
    throw ConstructionFailedError("path bundles starve the second continuation family");
  return out;
}

}  // namespace x3
