#include <algorithm>
#include <iterator>
#include <limits>
#include <queue>
#include <string>
#include <utility>

#include "x3/caps.hpp"
#include "x3/extractor.hpp"
#include "x3/three_arc.hpp"

namespace x3 {

namespace {

using Sets = std::vector<std::vector<int>>;

void need(bool ok, const std::string& msg) {
  if (!ok) throw ConstructionFailedError(msg);
}

int host_arc(const Digraph& d, int a, int b) {
  int id = d.arc_from_to(a, b);
  need(id >= 0, "required host arc " + std::to_string(a) + "->" +
                    std::to_string(b) + " is missing");
  return id;
}

// Host arcs backing the f arcs out of x, ascending, optionally skipping
// one head.
std::vector<int> fan_arcs(const Digraph& d, const Digraph& f, int x,
                          int skip_head) {
  std::vector<int> out;
  for (int id : f.out_arcs(x)) {
    int h = f.arc(id).head;
    if (h == skip_head) continue;
    out.push_back(host_arc(d, x, h));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> minus_sets(const std::vector<int>& a,
                            const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

std::vector<int> sorted_union(
    std::initializer_list<const std::vector<int>*> parts) {
  std::vector<int> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool arc_set_adjacent(const Digraph& d, const std::vector<int>& lhs,
                      const std::vector<int>& rhs) {
  for (int a : lhs)
    for (int b : rhs)
      if (arcs_adjacent(d, a, b)) return true;
  return false;
}

bool arc_set_connected(const Digraph& d, const std::vector<int>& s) {
  if (s.empty()) return false;
  std::vector<char> seen(s.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  size_t cnt = 1;
  while (!stack.empty()) {
    int at = stack.back();
    stack.pop_back();
    for (size_t idx = 0; idx < s.size(); ++idx) {
      if (seen[idx] || !arcs_adjacent(d, s[at], s[idx])) continue;
      seen[idx] = 1;
      ++cnt;
      stack.push_back(static_cast<int>(idx));
    }
  }
  return cnt == s.size();
}

void need_disjoint(const Sets& sets) {
  std::vector<int> all;
  for (const auto& s : sets) {
    need(!s.empty(), "empty branch set");
    all.insert(all.end(), s.begin(), s.end());
  }
  std::sort(all.begin(), all.end());
  need(std::adjacent_find(all.begin(), all.end()) == all.end(),
       "branch sets overlap");
}

struct PoolSplit {
  std::vector<int> feasible;
  std::vector<int> compatible;
};

// Splits a family of companion arcs by tail: tails that are fan heads go
// to the feasible pool, the rest to the compatible pool.
PoolSplit split_pool(const Digraph& d, const std::vector<int>& a_arcs,
                     const std::vector<int>& pool) {
  std::vector<char> ishead(d.n(), 0);
  for (int id : a_arcs) ishead[d.arc(id).head] = 1;
  PoolSplit out;
  for (int id : pool)
    (ishead[d.arc(id).tail] ? out.feasible : out.compatible).push_back(id);
  return out;
}

NetCertificate pooled_net(const Digraph& d, int hub,
                          const std::vector<int>& a_arcs,
                          const std::vector<int>& pool) {
  PoolSplit ps = split_pool(d, a_arcs, pool);
  return build_net(NetSpec{hub, a_arcs, ps.feasible, ps.compatible}, d);
}

// A net whose every branch set must touch the anchor b0. When only the
// single-arc set misses it, the net is rebuilt around a fan arc that
// reaches the anchor on its own.
Sets anchored_net(const Digraph& d, int hub, const std::vector<int>& a_arcs,
                  const std::vector<int>& pool, const std::vector<int>& b0) {
  PoolSplit ps = split_pool(d, a_arcs, pool);
  NetSpec spec{hub, a_arcs, ps.feasible, ps.compatible};
  NetCertificate net = build_net(spec, d);
  auto first_bad = [&](const NetCertificate& nc) {
    for (size_t idx = 0; idx < nc.branch_arc_sets.size(); ++idx)
      if (!arc_set_adjacent(d, nc.branch_arc_sets[idx], b0))
        return static_cast<int>(idx);
    return -1;
  };
  int bad = first_bad(net);
  if (bad < 0) return net.branch_arc_sets;
  need(bad == net.singleton_set, "a companioned branch set avoids the anchor");
  for (int a : a_arcs) {
    if (!arc_set_adjacent(d, std::vector<int>{a}, b0)) continue;
    try {
      NetCertificate retry = build_net_with_singleton(spec, d, a);
      if (first_bad(retry) < 0) return retry.branch_arc_sets;
    } catch (const Error&) {
    }
  }
  throw ConstructionFailedError("no branch arc can anchor the singleton");
}

// Rebuilds a continuation family after some arcs were spoken for: a
// banned choice is replaced by another arc at the same tail when one
// exists, otherwise the tail drops out.
std::vector<int> rebuild_family(const Digraph& d, const std::vector<int>& nbrs,
                                const std::vector<int>& cont, int avoid,
                                const std::vector<int>& banned_sorted) {
  auto banned = [&](int id) {
    return std::binary_search(banned_sorted.begin(), banned_sorted.end(), id);
  };
  std::vector<int> out;
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
    if (a >= 0) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct SplitCtx {
  const Digraph& d;
  const Digraph& f;
  int k;
  int u;
  int v;
  ArcSelection sel;
  std::vector<int> sigma;      // arcs_u(), ascending
  std::vector<int> pi;         // arcs_v(), ascending
  std::vector<int> shr_tails;  // shared tails, ascending
  int uv_d = -1;
  int avoid = -1;  // head of u's lone fan arc when i == 1, else -1
};

MinorCertificate join_sets(int k, Sets lhs, Sets rhs) {
  for (auto& s : rhs) lhs.push_back(std::move(s));
  need(static_cast<int>(lhs.size()) == k, "branch set count mismatch");
  MinorCertificate cert{std::move(lhs)};
  need_disjoint(cert.branch_sets);
  return cert;
}

// Branch sets on the tail side of the anchored split: i sets, each
// holding one fan arc; a two-set fan pairs both arcs with companions so
// neither is left alone.
Sets left_sets(const SplitCtx& c, const std::vector<int>& sigma2,
               const std::vector<int>& b0) {
  std::vector<int> a_arcs = fan_arcs(c.d, c.f, c.u, c.v);
  need(!a_arcs.empty(), "no fan arcs beside the selected arc");
  if (a_arcs.size() == 1) {
    Sets out{{a_arcs[0]}};
    need(arc_set_adjacent(c.d, out[0], b0), "lone fan arc avoids the anchor");
    return out;
  }
  if (a_arcs.size() == 2) {
    std::vector<char> ishead(c.d.n(), 0);
    for (int id : a_arcs) ishead[c.d.arc(id).head] = 1;
    std::vector<int> comp;
    for (int id : sigma2) {
      if (ishead[c.d.arc(id).tail]) continue;
      comp.push_back(id);
      if (comp.size() == 2) break;
    }
    if (comp.size() == 2) {
      Sets out{{a_arcs[0], comp[0]}, {a_arcs[1], comp[1]}};
      if (arc_set_adjacent(c.d, out[0], b0) &&
          arc_set_adjacent(c.d, out[1], b0))
        return out;
    }
  }
  return anchored_net(c.d, c.u, a_arcs, sigma2, b0);
}

Sets right_sets(const SplitCtx& c, const std::vector<int>& pi2,
                const std::vector<int>& b0) {
  std::vector<int> a_arcs = fan_arcs(c.d, c.f, c.v, -1);
  need(!a_arcs.empty(), "no fan arcs on the head side");
  return anchored_net(c.d, c.v, a_arcs, pi2, b0);
}

MinorCertificate anchored_cert(const SplitCtx& c, std::vector<int> b0,
                               const std::vector<int>& sigma2,
                               const std::vector<int>& pi2) {
  std::sort(b0.begin(), b0.end());
  b0.erase(std::unique(b0.begin(), b0.end()), b0.end());
  need(arc_set_connected(c.d, b0), "anchor set is not connected");
  Sets sets = left_sets(c, sigma2, b0);
  Sets right = right_sets(c, pi2, b0);
  for (auto& s : right) sets.push_back(std::move(s));
  for (const auto& s : sets)
    need(arc_set_adjacent(c.d, s, b0), "a branch set avoids the anchor");
  sets.push_back(std::move(b0));
  need(static_cast<int>(sets.size()) == c.k, "branch set count mismatch");
  MinorCertificate cert{std::move(sets)};
  need_disjoint(cert.branch_sets);
  return cert;
}

// --- surplus family: outdeg(u) + outdeg(v) - 1 >= k --------------------

MinorCertificate case_wide_fan(const Digraph& d, const Digraph& f, int k,
                               int x) {
  std::vector<int> fan = fan_arcs(d, f, x, -1);
  need(static_cast<int>(fan.size()) >= k, "fan shorter than the order");
  fan.resize(k);
  std::vector<int> pool;
  for (int id : fan) {
    int h = d.arc(id).head;
    int cand = -1;
    for (int a : d.out_arcs(h))
      if (d.arc(a).head != x) {
        cand = a;
        break;
      }
    need(cand >= 0, "fan head has no continuation");
    pool.push_back(cand);
  }
  std::sort(pool.begin(), pool.end());
  NetCertificate net = pooled_net(d, x, fan, pool);
  MinorCertificate cert = net.to_minor_certificate();
  need(cert.order() == k, "branch set count mismatch");
  need_disjoint(cert.branch_sets);
  return cert;
}

MinorCertificate surplus_full_fan(const SplitCtx& c) {
  std::vector<int> a_u = fan_arcs(c.d, c.f, c.u, c.v);
  need(!a_u.empty(), "no fan arcs beside the selected arc");
  std::vector<int> a_v = fan_arcs(c.d, c.f, c.v, -1);
  std::vector<int> pool;
  for (int id : a_v) pool.push_back(c.sel.cont_v[c.d.arc(id).head]);
  std::sort(pool.begin(), pool.end());
  NetCertificate netv = pooled_net(c.d, c.v, a_v, pool);
  return join_sets(c.k, Sets{{a_u[0]}}, netv.branch_arc_sets);
}

MinorCertificate surplus_overlap_max(const SplitCtx& c) {
  std::vector<int> sig_only = minus_sets(c.sigma, c.pi);
  std::vector<int> pi_only = minus_sets(c.pi, c.sigma);
  if (!sig_only.empty()) {
    int xarc = sig_only[0];
    int xt = c.d.arc(xarc).tail;
    std::vector<int> a_u = fan_arcs(c.d, c.f, c.u, c.v);
    std::vector<int> picks;
    for (int id : a_u) {
      if (c.d.arc(id).head == xt) continue;
      picks.push_back(id);
      if (picks.size() == 2) break;
    }
    need(picks.size() == 2, "fan too small beside the overlap");
    NetCertificate two = build_net(NetSpec{c.u, picks, {}, {xarc}}, c.d);
    std::vector<int> a_v = fan_arcs(c.d, c.f, c.v, -1);
    std::vector<int> pool;
    for (int id : a_v) pool.push_back(c.sel.cont_v[c.d.arc(id).head]);
    std::sort(pool.begin(), pool.end());
    NetCertificate netv = pooled_net(c.d, c.v, a_v, pool);
    return join_sets(c.k, two.branch_arc_sets, netv.branch_arc_sets);
  }
  if (!pi_only.empty()) {
    int yarc = pi_only[0];
    int yt = c.d.arc(yarc).tail;
    std::vector<int> a_v = fan_arcs(c.d, c.f, c.v, -1);
    std::vector<int> picks;
    for (int id : a_v) {
      if (c.d.arc(id).head == yt) continue;
      picks.push_back(id);
      if (picks.size() == 2) break;
    }
    need(picks.size() == 2, "fan too small beside the overlap");
    NetCertificate two = build_net(NetSpec{c.v, picks, {}, {yarc}}, c.d);
    std::vector<int> a_u = fan_arcs(c.d, c.f, c.u, c.v);
    std::vector<int> pool;
    for (int id : a_u) pool.push_back(c.sel.cont_u[c.d.arc(id).head]);
    std::sort(pool.begin(), pool.end());
    NetCertificate netu = pooled_net(c.d, c.u, a_u, pool);
    return join_sets(c.k, netu.branch_arc_sets, two.branch_arc_sets);
  }
  // both families sit on the shared tails: close a ring through them
  const int t = c.sel.t;
  const auto& W = c.shr_tails;
  need(t >= 2 && t + 2 == c.k, "overlap does not close a ring");
  std::vector<int> sh;
  for (int w : W) sh.push_back(c.sel.cont_u[w]);
  Sets sets;
  sets.push_back({c.uv_d, sh[0]});
  for (int l = 0; l + 1 < t; ++l)
    sets.push_back({host_arc(c.d, c.u, W[l]), sh[l + 1]});
  sets.push_back({host_arc(c.d, c.u, W[t - 1]), host_arc(c.d, c.v, W[0])});
  sets.push_back({host_arc(c.d, c.v, W[1])});
  return join_sets(c.k, std::move(sets), {});
}

MinorCertificate surplus_overlap_high(const SplitCtx& c) {
  const int k = c.k, t = c.sel.t, m = k - t;
  const auto& W = c.shr_tails;
  need(m >= 3 && m <= t, "overlap out of range for the paired fans");
  std::vector<int> a_u, a_v;
  for (int w : W) a_u.push_back(host_arc(c.d, c.u, w));
  for (int l = 0; l < m; ++l) a_v.push_back(host_arc(c.d, c.v, W[l]));
  std::sort(a_u.begin(), a_u.end());
  std::sort(a_v.begin(), a_v.end());
  std::vector<int> feas_u, feas_v;
  for (int l = m - 1; l < t; ++l) feas_u.push_back(c.sel.cont_u[W[l]]);
  for (int l = 0; l + 1 < m; ++l) feas_v.push_back(c.sel.cont_u[W[l]]);
  std::vector<int> sig_only = minus_sets(c.sigma, c.pi);
  const int extra = k - 2 - t;
  need(static_cast<int>(sig_only.size()) >= extra, "first family too small");
  std::vector<int> comp_u(sig_only.begin(), sig_only.begin() + extra);
  std::vector<int> comp_v;
  if (m == 3) {
    std::vector<int> pi_only = minus_sets(c.pi, c.sigma);
    need(!pi_only.empty(), "second family too small");
    comp_v.push_back(pi_only[0]);
  }
  NetCertificate netu = build_net(NetSpec{c.u, a_u, feas_u, comp_u}, c.d);
  NetCertificate netv = build_net(NetSpec{c.v, a_v, feas_v, comp_v}, c.d);
  return join_sets(k, netu.branch_arc_sets, netv.branch_arc_sets);
}

MinorCertificate surplus_overlap_low(const SplitCtx& c) {
  const int k = c.k, t = c.sel.t, i = c.sel.i, j = c.sel.j;
  std::vector<int> sig_only = minus_sets(c.sigma, c.pi);
  std::vector<int> pi_only = minus_sets(c.pi, c.sigma);
  std::vector<int> a_u = fan_arcs(c.d, c.f, c.u, c.v);
  std::vector<int> a_v = fan_arcs(c.d, c.f, c.v, -1);
  if (t == 0) {
    const int bcnt = k - i;
    need(bcnt >= 2 && bcnt <= j, "fan shares misfit the order");
    std::vector<int> a_v_cut(a_v.begin(), a_v.begin() + bcnt);
    NetCertificate netu = pooled_net(c.d, c.u, a_u, c.sigma);
    NetCertificate netv = pooled_net(c.d, c.v, a_v_cut, c.pi);
    return join_sets(k, netu.branch_arc_sets, netv.branch_arc_sets);
  }
  if (j == k - 2) {
    const int w1 = c.shr_tails[0];
    const int uw1 = host_arc(c.d, c.u, w1);
    int other = -1;
    for (int id : a_u)
      if (id != uw1) {
        other = id;
        break;
      }
    need(other >= 0, "fan too small beside the shared tail");
    std::vector<int> picks{std::min(uw1, other), std::max(uw1, other)};
    const int h1 = c.d.arc(picks[0]).head, h2 = c.d.arc(picks[1]).head;
    int comp = -1;
    for (int id : sig_only) {
      int tl = c.d.arc(id).tail;
      if (tl != h1 && tl != h2) {
        comp = id;
        break;
      }
    }
    need(comp >= 0, "no companion clear of the pair");
    NetCertificate netu = build_net(NetSpec{c.u, picks, {}, {comp}}, c.d);
    NetCertificate netv = pooled_net(c.d, c.v, a_v, c.pi);
    return join_sets(k, netu.branch_arc_sets, netv.branch_arc_sets);
  }
  if (i == t) {
    NetCertificate netu = pooled_net(c.d, c.u, a_u, sig_only);
    const int bcnt = k - t;
    need(bcnt >= 2 && bcnt <= j, "fan shares misfit the order");
    std::vector<int> a_v_cut(a_v.begin(), a_v.begin() + bcnt);
    NetCertificate netv = pooled_net(c.d, c.v, a_v_cut, c.pi);
    return join_sets(k, netu.branch_arc_sets, netv.branch_arc_sets);
  }
  // i > t: the whole fan beside u; a shared-tail arc leads the other fan
  NetCertificate netu = pooled_net(c.d, c.u, a_u, c.sigma);
  const int bcnt = k - i;
  need(bcnt >= 2 && bcnt <= j, "fan shares misfit the order");
  const int vw1 = host_arc(c.d, c.v, c.shr_tails[0]);
  std::vector<int> a_v_cut{vw1};
  for (int id : a_v) {
    if (static_cast<int>(a_v_cut.size()) == bcnt) break;
    if (id != vw1) a_v_cut.push_back(id);
  }
  need(static_cast<int>(a_v_cut.size()) == bcnt, "fan too small");
  std::sort(a_v_cut.begin(), a_v_cut.end());
  NetCertificate netv = pooled_net(c.d, c.v, a_v_cut, pi_only);
  return join_sets(k, netu.branch_arc_sets, netv.branch_arc_sets);
}

// --- tight family: outdeg(u) + outdeg(v) - 1 == k - 1 ------------------

MinorCertificate tight_single_out(const SplitCtx& c) {
  int vz = spare_out_arc(c.d, c.f, c.v);
  need(vz >= 0, "no spare arc beside the single fan");
  std::vector<int> a_v = fan_arcs(c.d, c.f, c.v, -1);
  need(a_v.size() == 1, "fan is not single");
  const int v1 = c.d.arc(a_v[0]).head;
  const int z = c.d.arc(vz).head;
  std::vector<int> pi_only = minus_sets(c.pi, c.sigma);
  int tau = -1;
  for (int id : pi_only) {
    int tl = c.d.arc(id).tail;
    if (tl != v1 && tl != z) {
      tau = id;
      break;
    }
  }
  need(tau >= 0, "no companion clear of the pair");
  NetCertificate netv =
      build_net(NetSpec{c.v, {a_v[0], vz}, {}, {tau}}, c.d);
  std::vector<int> a_u = fan_arcs(c.d, c.f, c.u, c.v);
  std::vector<int> sig_only = minus_sets(c.sigma, c.pi);
  NetCertificate netu = pooled_net(c.d, c.u, a_u, sig_only);
  return join_sets(c.k, netu.branch_arc_sets, netv.branch_arc_sets);
}

MinorCertificate tight_wide_fan(const SplitCtx& c) {
  int uz = spare_out_arc(c.d, c.f, c.u);
  need(uz >= 0, "no spare arc beside the selected arc");
  std::vector<int> a_v = fan_arcs(c.d, c.f, c.v, -1);
  NetCertificate netv = pooled_net(c.d, c.v, a_v, c.pi);
  return join_sets(c.k, Sets{{uz}}, netv.branch_arc_sets);
}

MinorCertificate tight_overlap2(const SplitCtx& c) {
  const auto& W = c.shr_tails;
  need(W.size() >= 2, "overlap too small for a shared anchor");
  std::vector<int> b0{c.sel.cont_u[W[0]], c.sel.cont_u[W[1]], c.uv_d};
  std::vector<int> banned_u = sorted_union({&b0, &c.pi});
  std::vector<int> sigma2 =
      rebuild_family(c.d, c.sel.nbrs_u, c.sel.cont_u, c.u, banned_u);
  std::vector<int> banned_v = sorted_union({&b0, &c.sigma, &sigma2});
  std::vector<int> pi2 =
      rebuild_family(c.d, c.sel.nbrs_v, c.sel.cont_v, c.v, banned_v);
  return anchored_cert(c, b0, sigma2, pi2);
}

MinorCertificate tight_common_in(const SplitCtx& c,
                                 const std::vector<int>& uin) {
  int a = uin[0];
  if (c.avoid >= 0)
    for (int cand : uin)
      if (cand != c.avoid) {
        a = cand;
        break;
      }
  std::vector<int> b0{c.uv_d};
  int aout = -1;
  for (int id : c.d.out_arcs(a)) {
    int hd = c.d.arc(id).head;
    if (hd != c.u && hd != c.v) {
      aout = id;
      break;
    }
  }
  if (aout >= 0) {
    b0.push_back(aout);
  } else {
    // a points only at the selected pair; route through a feeder of a
    int au = host_arc(c.d, a, c.u);
    int av = host_arc(c.d, a, c.v);
    int abar = -1;
    for (int y : c.f.in_neighbors(a))
      if (y != c.u && y != c.v) {
        abar = y;
        break;
      }
    need(abar >= 0, "no feeder beside the selected pair");
    int abar_out = -1;
    for (int id : c.d.out_arcs(abar))
      if (c.d.arc(id).head != a) {
        abar_out = id;
        break;
      }
    need(abar_out >= 0, "feeder has no arc avoiding its target");
    b0 = {c.uv_d, au, av, abar_out};
  }
  std::vector<int> b0s = b0;
  std::sort(b0s.begin(), b0s.end());
  auto hits = [&](const std::vector<int>& fam) {
    int cnt = 0;
    for (int id : b0s)
      if (std::binary_search(fam.begin(), fam.end(), id)) ++cnt;
    return cnt;
  };
  need(hits(c.sigma) <= 2 && hits(c.pi) <= 2,
       "anchor consumes too much of a family");
  std::vector<int> banned_u = sorted_union({&b0s, &c.pi});
  std::vector<int> sigma2 =
      rebuild_family(c.d, c.sel.nbrs_u, c.sel.cont_u, c.u, banned_u);
  std::vector<int> banned_v = sorted_union({&b0s, &c.sigma, &sigma2});
  std::vector<int> pi2 =
      rebuild_family(c.d, c.sel.nbrs_v, c.sel.cont_v, c.v, banned_v);
  return anchored_cert(c, b0, sigma2, pi2);
}

MinorCertificate tight_common_out(const SplitCtx& c,
                                  const std::vector<int>& common) {
  std::vector<int> b0{c.uv_d};
  int a1 = -1, a2 = -1;
  for (int a : common) {
    for (int b : common)
      if (a != b && c.f.has_arc(a, b)) {
        a1 = a;
        a2 = b;
        break;
      }
    if (a1 >= 0) break;
  }
  if (a1 >= 0) {
    // two common neighbours already joined: anchor along their arc
    int tau = host_arc(c.d, a1, a2);
    int gamma = -1, relaxed = -1;
    for (int id : c.d.out_arcs(a2)) {
      int hd = c.d.arc(id).head;
      if (hd == c.u) continue;
      if (relaxed < 0) relaxed = id;
      if (hd != c.v && hd != a1) {
        gamma = id;
        break;
      }
    }
    if (gamma < 0) gamma = relaxed;
    need(gamma >= 0, "no outlet for the joined pair");
    b0.push_back(tau);
    b0.push_back(gamma);
  } else {
    // independent common neighbours: anchor bundles around two of them
    auto bundle = [&](int a) {
      std::vector<int> q;
      for (int id : c.d.out_arcs(a)) {
        int hd = c.d.arc(id).head;
        if (hd != c.u && hd != c.v) {
          q.push_back(id);
          break;
        }
      }
      if (!q.empty()) return q;
      int au = host_arc(c.d, a, c.u);
      int av = host_arc(c.d, a, c.v);
      int abar = -1;
      for (int y : c.f.in_neighbors(a))
        if (y != c.u && y != c.v) {
          abar = y;
          break;
        }
      need(abar >= 0, "no feeder beside the selected pair");
      int abar_out = -1;
      for (int id : c.d.out_arcs(abar))
        if (c.d.arc(id).head != a) {
          abar_out = id;
          break;
        }
      need(abar_out >= 0, "feeder has no arc avoiding its target");
      return std::vector<int>{au, av, abar_out};
    };
    std::vector<std::vector<int>> bs;
    bs.reserve(common.size());
    for (int a : common) bs.push_back(bundle(a));
    int al = -1, am = -1;
    size_t best = std::numeric_limits<size_t>::max();
    if (c.sel.t == 1)
      for (size_t idx = 0; idx < common.size(); ++idx)
        if (common[idx] == c.shr_tails[0]) al = static_cast<int>(idx);
    if (al >= 0) {
      for (size_t mi = 0; mi < common.size(); ++mi) {
        if (static_cast<int>(mi) == al) continue;
        size_t sz = sorted_union({&bs[al], &bs[mi]}).size();
        if (sz < best) {
          best = sz;
          am = static_cast<int>(mi);
        }
      }
    } else {
      for (size_t li = 0; li < common.size(); ++li)
        for (size_t mi = li + 1; mi < common.size(); ++mi) {
          size_t sz = sorted_union({&bs[li], &bs[mi]}).size();
          if (sz < best) {
            best = sz;
            al = static_cast<int>(li);
            am = static_cast<int>(mi);
          }
        }
    }
    need(al >= 0 && am >= 0, "no anchor pair in the common neighbourhood");
    for (int id : bs[al]) b0.push_back(id);
    for (int id : bs[am]) b0.push_back(id);
  }
  std::vector<int> b0s = sorted_union({&b0});
  std::vector<int> banned_u = sorted_union({&b0s, &c.pi});
  std::vector<int> sigma2 =
      rebuild_family(c.d, c.sel.nbrs_u, c.sel.cont_u, c.u, banned_u);
  std::vector<int> banned_v = sorted_union({&b0s, &c.sigma, &sigma2});
  std::vector<int> pi2 =
      rebuild_family(c.d, c.sel.nbrs_v, c.sel.cont_v, c.v, banned_v);
  return anchored_cert(c, b0, sigma2, pi2);
}

MinorCertificate tight_path_anchor(const SplitCtx& c,
                                   const std::vector<int>& common) {
  std::vector<char> blocked(c.d.n(), 0);
  blocked[c.u] = blocked[c.v] = 1;
  for (int a : common) blocked[a] = 1;
  std::vector<int> sources;
  for (int w : c.sel.nbrs_u)
    if (!blocked[w]) sources.push_back(w);
  if (c.avoid >= 0) {
    // keep the lone fan head as a last resort: its branch set must still
    // reach the anchor on its own
    auto it = std::find(sources.begin(), sources.end(), c.avoid);
    if (it != sources.end()) {
      sources.erase(it);
      sources.push_back(c.avoid);
    }
  }
  std::vector<char> is_target(c.d.n(), 0);
  bool any_target = false;
  for (int w : c.f.in_neighbors(c.v))
    if (w != c.u && !blocked[w]) {
      is_target[w] = 1;
      any_target = true;
    }
  need(!sources.empty() && any_target, "no ends for the anchor path");
  std::vector<int> parent(c.d.n(), -2);
  std::queue<int> bfs;
  for (int sv : sources)
    if (parent[sv] == -2) {
      parent[sv] = -1;
      bfs.push(sv);
    }
  int goal = -1;
  while (!bfs.empty() && goal < 0) {
    int at = bfs.front();
    bfs.pop();
    if (is_target[at]) {
      goal = at;
      break;
    }
    for (int y : c.f.neighbors(at)) {
      if (blocked[y] || parent[y] != -2) continue;
      parent[y] = at;
      bfs.push(y);
    }
  }
  need(goal >= 0, "no anchor path");
  std::vector<int> path;
  for (int at = goal; at >= 0; at = parent[at]) path.push_back(at);
  std::reverse(path.begin(), path.end());
  // cut at the second vertex already beside the head of the selected arc
  int seen = 0;
  for (size_t idx = 0; idx < path.size(); ++idx) {
    if (!c.f.adjacent(path[idx], c.v)) continue;
    if (++seen == 2) {
      path.resize(idx + 1);
      break;
    }
  }
  ParallelSet ps = parallel_set(c.f, c.d, path, c.u, c.v, c.sel);
  std::vector<int> b0 = ps.arcs;
  b0.push_back(c.uv_d);
  std::vector<int> sigma2 =
      minus_sets(ps.pruned_u, sorted_union({&ps.pruned_v, &b0}));
  std::vector<int> pi2 =
      minus_sets(ps.pruned_v, sorted_union({&ps.pruned_u, &b0}));
  return anchored_cert(c, b0, sigma2, pi2);
}

// Router shared by the anchored subcases; also serves the narrow-fan
// shape once substitution is ruled out.
MinorCertificate tight_anchored(const SplitCtx& c) {
  std::vector<int> common = c.sel.common_neighbors();
  std::vector<int> uin;
  for (int a : common)
    if (c.f.has_arc(a, c.v)) uin.push_back(a);
  if (c.sel.t >= 2) return tight_overlap2(c);
  if (!uin.empty()) return tight_common_in(c, uin);
  if (common.size() >= 2) return tight_common_out(c, common);
  return tight_path_anchor(c, common);
}

}  // namespace

SplitResult dispatch_split(const Digraph& d, const Digraph& f, int k, int u,
                           int v, int depth) {
  SplitResult res;
  try {
    need(k >= 4, "order too small for the split");
    need(f.has_arc(u, v), "selected pair is not an arc of the orientation");
    if (f.out_degree(u) >= k) {
      res.label = "wide_out_fan";
      res.cert = case_wide_fan(d, f, k, u);
      return res;
    }
    if (f.out_degree(v) >= k) {
      res.label = "wide_out_fan";
      res.cert = case_wide_fan(d, f, k, v);
      return res;
    }
    SplitCtx c{d, f, k, u, v, select_phi(f, d, u, v), {}, {}, {}, -1, -1};
    c.sigma = c.sel.arcs_u();
    c.pi = c.sel.arcs_v();
    c.shr_tails = c.sel.shared_tails();
    c.uv_d = host_arc(d, u, v);
    if (c.sel.i == 1) {
      std::vector<int> lone = fan_arcs(d, f, u, v);
      if (lone.size() == 1) c.avoid = d.arc(lone[0]).head;
    }
    const int score = c.sel.i + c.sel.j;
    if (score >= k) {
      if (c.sel.j == k - 1) {
        res.label = "surplus_full_fan";
        res.cert = surplus_full_fan(c);
      } else if (c.sel.t == k - 2) {
        res.label = "surplus_overlap_max";
        res.cert = surplus_overlap_max(c);
      } else if (c.sel.t >= (k + 1) / 2) {
        res.label = "surplus_overlap_high";
        res.cert = surplus_overlap_high(c);
      } else {
        res.label = "surplus_overlap_low";
        res.cert = surplus_overlap_low(c);
      }
    } else if (score == k - 1) {
      if (c.sel.j == 1) {
        res.label = "tight_single_out";
        res.cert = tight_single_out(c);
      } else if (c.sel.j == k - 1) {
        res.label = "tight_wide_fan";
        res.cert = tight_wide_fan(c);
      } else if (c.sel.j == k - 2) {
        res.label = "tight_lone_arc";
        if (f.in_degree(v) == 1) {
          // only the selected arc feeds v: substitute a pair leaving v
          need(depth < 2, "substitution depth exceeded");
          std::vector<int> heads;
          for (int id : f.out_arcs(v)) heads.push_back(f.arc(id).head);
          std::sort(heads.begin(), heads.end());
          int next_u = -1;
          const Digraph* fh = &f;
          Digraph aug;
          for (int w : heads)
            if (f.out_degree(w) >= 2) {
              next_u = w;
              break;
            }
          if (next_u < 0) {
            for (int w : heads) {
              if (f.out_degree(w) != 1) continue;
              int sp = spare_out_arc(d, f, w);
              if (sp < 0) continue;
              aug = f;
              aug.add_arc(w, d.arc(sp).head);
              fh = &aug;
              next_u = w;
              break;
            }
          }
          need(next_u >= 0, "fan feeds only sinks");
          SplitResult inner = dispatch_split(d, *fh, k, v, next_u, depth + 1);
          res.cert = std::move(inner.cert);
          res.label = "tight_lone_arc>" + inner.label;
          return res;
        }
        res.cert = tight_anchored(c);
      } else if (c.sel.j >= 2 && c.sel.j <= k - 3) {
        std::vector<int> common = c.sel.common_neighbors();
        std::vector<int> uin;
        for (int a : common)
          if (f.has_arc(a, v)) uin.push_back(a);
        if (c.sel.t >= 2) {
          res.label = "tight_overlap2";
          res.cert = tight_overlap2(c);
        } else if (!uin.empty()) {
          res.label = "tight_common_in";
          res.cert = tight_common_in(c, uin);
        } else if (common.size() >= 2) {
          res.label = "tight_common_out";
          res.cert = tight_common_out(c, common);
        } else {
          res.label = "tight_path_anchor";
          res.cert = tight_path_anchor(c, common);
        }
      } else {
        res.label = "low-S";
      }
    } else {
      res.label = "low-S";
    }
  } catch (const Error& e) {
    res.cert.reset();
    res.label = res.label.empty() ? std::string(e.what())
                                  : res.label + ": " + e.what();
  }
  return res;
}

namespace {

struct Fallback {
  int k = 0;
  MinorCertificate cert;
  std::string label;
};

// Direct routes to a verified certificate, tried in order: a complete
// host yields branch sets of full order through a sub-tournament; then
// bounded search at the coloring target; then exact search at the
// three-arc graph's own coloring number; then the merge heuristic.
Fallback fallback_route(const CollapseResult& col, const Graph& x,
                        int chi_g) {
  const Digraph& d1 = col.digraph;
  const int n = d1.n();
  bool complete = n >= 5;
  for (int a = 0; a < n && complete; ++a)
    for (int b = a + 1; b < n && complete; ++b)
      if (!d1.adjacent(a, b)) complete = false;
  if (complete) {
    Digraph t(n);
    std::vector<int> t2d;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        int id = d1.arcs_between(a, b)[0];
        const Arc& ar = d1.arc(id);
        t.add_arc(ar.tail, ar.head);
        t2d.push_back(id);
      }
    try {
      MinorCertificate mc = tournament_minor(t);
      for (auto& s : mc.branch_sets)
        for (int& id : s) id = col.rep[t2d[id]];
      if (verify_certificate(x, mc).ok)
        return {n, std::move(mc), "fallback:tournament_complete"};
    } catch (const Error&) {
    }
  }
  if (chi_g >= 1) {
    MinorSearch ms = find_clique_minor(x, chi_g, caps().minor_budget);
    if (ms.status == SearchStatus::found && verify_certificate(x, ms.cert).ok)
      return {chi_g, std::move(ms.cert), "fallback:exact_chi_g"};
  }
  MinorCertificate best;
  if (x.n <= caps().chi) {
    int cx = chromatic_number(x).k;
    MinorSearch ms = find_clique_minor(x, cx, caps().minor_budget);
    if (ms.status != SearchStatus::found) ms = find_clique_minor(x, cx, 0);
    if (ms.status == SearchStatus::found && verify_certificate(x, ms.cert).ok)
      return {cx, std::move(ms.cert), "fallback:exact_chi_x"};
    best = std::move(ms.cert);
  }
  MinorCertificate greedy = greedy_clique_minor(x);
  if (greedy.order() > 0 && verify_certificate(x, greedy).ok)
    return {greedy.order(), std::move(greedy), "fallback:greedy"};
  throw ExtractionIncompleteError(
      "no fallback produced a verified certificate", std::move(best),
      "fallback:greedy");
}

}  // namespace

ExtractionResult extract_minor(const Digraph& d0) {
  ExtractionResult out;
  auto note = [&](std::string s) { out.trace.push_back(std::move(s)); };
  note("input: n=" + std::to_string(d0.n()) +
       " m=" + std::to_string(d0.m()));
  if (d0.m() == 0) {
    note("no arcs: empty certificate");
    return out;
  }
  CollapseResult col = collapse_parallel(d0);
  const Digraph& d1 = col.digraph;
  note("collapse parallel: m=" + std::to_string(d1.m()));
  ReduceResult red = remove_redundant(d1);
  note("drop redundant pairs: m=" + std::to_string(red.digraph.m()));
  Graph g = underlying_graph(red.digraph);
  const int k = chromatic_number(g).k;
  note("coloring number of the reduced underlying graph: " +
       std::to_string(k));
  ThreeArcGraph x = three_arc_graph(d0);
  auto translate = [&](MinorCertificate cert) {
    for (auto& s : cert.branch_sets)
      for (int& id : s) id = col.rep[id];
    return cert;
  };
  auto accept = [&](int kk, MinorCertificate cert, const std::string& label) {
    VerifyResult vr = verify_certificate(x.graph, cert);
    if (!vr.ok) {
      note(label + ": certificate rejected, " + describe(*vr.violation));
      return false;
    }
    note(label + ": verified, k=" + std::to_string(kk));
    out.k = kk;
    out.cert = std::move(cert);
    return true;
  };
  if (k >= 7) {
    try {
      CriticalSubgraph crit = critical_subgraph(g, k);
      note("critical core: " + std::to_string(crit.vertices.size()) +
           " vertices, " + std::to_string(crit.graph.m()) + " edges");
      // orient the induced graph on the core's vertices: a potential arc
      // leaving the core's span then always lands on out-degree 0 or on
      // a reversible in-edge, so the spare-arc repair cannot get stuck
      std::vector<char> in_core(d1.n(), 0);
      for (int hv : crit.vertices) in_core[hv] = 1;
      std::vector<std::pair<int, int>> host_edges;
      for (auto [a, b] : g.edges)
        if (in_core[a] && in_core[b]) host_edges.push_back({a, b});
      Graph h = build_graph(d1.n(), host_edges);
      Orientation ori = orient_with_spare_arcs(h, d1);
      const Digraph& f = ori.f;
      note("orientation settled");
      int xstar = 0;
      for (int vtx = 1; vtx < f.n(); ++vtx)
        if (f.out_degree(vtx) > f.out_degree(xstar)) xstar = vtx;
      if (f.out_degree(xstar) >= k) {
        MinorCertificate cert = case_wide_fan(d1, f, k, xstar);
        if (accept(k, translate(std::move(cert)), "wide_out_fan")) return out;
      } else {
        ScoredArcs sc = score_arcs(f);
        const bool equality =
            sc.lhs_sum == static_cast<long long>(k - 2) * f.m();
        const bool complete_core =
            static_cast<int>(crit.vertices.size()) == k &&
            2 * static_cast<int>(host_edges.size()) == k * (k - 1);
        if (equality && complete_core) {
          // the core carries a tournament of full order: use it directly
          std::vector<int> pos(d1.n(), -1);
          for (size_t idx = 0; idx < crit.vertices.size(); ++idx)
            pos[crit.vertices[idx]] = static_cast<int>(idx);
          Digraph tt(k);
          std::vector<int> t2d;
          bool inside = true;
          for (int id = 0; id < f.m() && inside; ++id) {
            const Arc& a = f.arc(id);
            if (pos[a.tail] < 0 || pos[a.head] < 0) {
              inside = false;
              break;
            }
            tt.add_arc(pos[a.tail], pos[a.head]);
            t2d.push_back(d1.arc_from_to(a.tail, a.head));
          }
          if (inside && tt.is_tournament()) {
            MinorCertificate mc = tournament_minor(tt);
            for (auto& s : mc.branch_sets)
              for (int& id : s) id = t2d[id];
            if (accept(k, translate(std::move(mc)), "regular_complete"))
              return out;
          }
        } else if (equality) {
          note("equality-degenerate: tight score identity without a "
               "complete core");
        }
        SinkFanPrune pr = prune_sink_fans(f, k);
        if (!pr.w_vertices.empty())
          note("pruned " + std::to_string(pr.w_vertices.size()) +
               " sink fans");
        ScoredArcs sc2 = score_arcs(pr.f_prime);
        if (sc2.argmax >= 0 && sc2.score[sc2.argmax] >= k - 1) {
          const Arc& a = pr.f_prime.arc(sc2.argmax);
          SplitResult sr = dispatch_split(d1, pr.f_prime, k, a.tail, a.head, 0);
          if (sr.cert) {
            if (accept(k, translate(std::move(*sr.cert)), sr.label))
              return out;
          } else {
            note("split gave up: " + sr.label);
          }
        } else {
          note("low-S: no arc reaches the tight score");
        }
      }
    } catch (const Error& e) {
      note(std::string("constructive path failed: ") + e.what());
    }
  } else {
    note("small coloring number: direct minor search");
  }
  Fallback fb = fallback_route(col, x.graph, k);
  note(fb.label + ": k=" + std::to_string(fb.k));
  out.k = fb.k;
  out.cert = std::move(fb.cert);
  return out;
}

}  // namespace x3
