#include "newt/polytope.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "newt/lp.hpp"

namespace newt {
namespace {

std::vector<long long> to_ll(const Exponent& e) {
  return std::vector<long long>(e.c.begin(), e.c.end());
}

// Exact affine rank of (pts - pts[0]).
int affine_dim(const std::vector<Exponent>& pts) {
  if (pts.size() <= 1) return 0;
  std::size_t n = pts[0].size();
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rational> r(n);
    for (std::size_t j = 0; j < n; ++j)
      r[j] = Rational((long long)pts[i][j] - (long long)pts[0][j]);
    rows.push_back(std::move(r));
  }
  int rank = 0;
  for (std::size_t col = 0; col < n && rank < (int)rows.size(); ++col) {
    std::size_t piv = rows.size();
    for (std::size_t i = rank; i < rows.size(); ++i)
      if (!rows[i][col].is_zero()) { piv = i; break; }
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col].is_zero()) continue;
      Rational f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < n; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

long long cross2(long long ox, long long oy, long long ax, long long ay, long long bx,
                 long long by) {
  return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox);
}

struct P2 {
  long long x, y;
  friend bool operator<(const P2& a, const P2& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
  friend bool operator==(const P2& a, const P2& b) { return a.x == b.x && a.y == b.y; }
};

// Monotone chain, strict turns only: returns ccw hull vertices.
std::vector<P2> hull2d(std::vector<P2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<P2> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 &&
           cross2(h[k - 2].x, h[k - 2].y, h[k - 1].x, h[k - 1].y, pts[i].x, pts[i].y) <= 0)
      --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t &&
           cross2(h[k - 2].x, h[k - 2].y, h[k - 1].x, h[k - 1].y, pts[i].x, pts[i].y) <= 0)
      --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace

struct LatticePolytope::Cache {
  std::mutex mutex;
  std::optional<std::vector<std::pair<int, int>>> edges;
  std::optional<std::vector<std::vector<int>>> faces2;
};

LatticePolytope LatticePolytope::hull(const Support& s) {
  LatticePolytope poly;
  poly.n_ = s.n();
  poly.cache_ = std::make_shared<Cache>();
  const auto& pts = s.points();
  poly.dim_ = affine_dim(pts);

  if (poly.dim_ == 0) {
    poly.vertices_ = {pts[0]};
    return poly;
  }
  if (poly.dim_ == 1) {
    // Lex order is monotone along a line, so the extremes are the sorted ends.
    poly.vertices_ = {pts.front(), pts.back()};
    return poly;
  }
  if (poly.dim_ == 2) {
    // Pick two coordinates on which the affine hull projects injectively.
    bool found = false;
    for (std::size_t a = 0; a < poly.n_ && !found; ++a)
      for (std::size_t b = a + 1; b < poly.n_ && !found; ++b) {
        std::vector<P2> proj;
        for (const auto& p : pts)
          proj.push_back({(long long)p[a], (long long)p[b]});
        std::vector<P2> diffs;
        for (std::size_t i = 1; i < proj.size(); ++i)
          diffs.push_back({proj[i].x - proj[0].x, proj[i].y - proj[0].y});
        bool rank2 = false;
        for (std::size_t i = 0; i < diffs.size() && !rank2; ++i)
          for (std::size_t j = i + 1; j < diffs.size() && !rank2; ++j)
            if (diffs[i].x * diffs[j].y - diffs[i].y * diffs[j].x != 0) rank2 = true;
        if (rank2) { poly.px_ = a; poly.py_ = b; found = true; }
      }
    if (!found) throw std::logic_error("no injective coordinate plane for a 2d hull");
    std::map<P2, Exponent> back;
    std::vector<P2> proj;
    for (const auto& p : pts) {
      P2 q{(long long)p[poly.px_], (long long)p[poly.py_]};
      back.emplace(q, p);
      proj.push_back(q);
    }
    for (const auto& q : hull2d(std::move(proj))) poly.vertices_.push_back(back.at(q));
    std::sort(poly.vertices_.begin(), poly.vertices_.end());
    return poly;
  }

  // dim >= 3: extreme-point test per point.
  std::vector<std::vector<long long>> all;
  for (const auto& p : pts) all.push_back(to_ll(p));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<std::vector<long long>> others;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.push_back(all[j]);
    if (!in_convex_hull(all[i], others)) poly.vertices_.push_back(pts[i]);
  }
  return poly;
}

long long LatticePolytope::degree() const {
  long long d = 0;
  for (const auto& v : vertices_) d = std::max(d, v.total());
  return d;
}

void LatticePolytope::build_planar_cycle() const {
  // dim <= 2 edge/face structure: for a polygon, walk the ccw boundary of the
  // injective projection; for a segment or point the structure is immediate.
  auto& c = *cache_;
  c.edges.emplace();
  c.faces2.emplace();
  if (dim_ == 1) {
    c.edges->push_back({0, 1});
    return;
  }
  if (dim_ != 2) return;
  std::vector<P2> proj;
  for (const auto& v : vertices_)
    proj.push_back({(long long)v[px_], (long long)v[py_]});
  std::vector<P2> cyc = hull2d(proj);
  std::vector<int> cycle;
  for (const auto& q : cyc) {
    auto it = std::find(proj.begin(), proj.end(), q);
    cycle.push_back((int)(it - proj.begin()));
  }
  // Rotate so the cycle starts at vertex 0 (the lex-min vertex).
  auto zero = std::find(cycle.begin(), cycle.end(), 0);
  std::rotate(cycle.begin(), zero, cycle.end());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    int a = cycle[i], b = cycle[(i + 1) % cycle.size()];
    c.edges->push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(c.edges->begin(), c.edges->end());
  c.faces2->push_back(cycle);
}

const std::vector<std::pair<int, int>>& LatticePolytope::edges() const {
  auto& c = *cache_;
  std::lock_guard<std::mutex> lock(c.mutex);
  if (!c.edges) {
    if (dim_ <= 2) {
      build_planar_cycle();
    } else {
      c.edges.emplace();
      c.faces2.emplace();
      std::vector<std::vector<long long>> vs;
      for (const auto& v : vertices_) vs.push_back(to_ll(v));
      for (std::size_t i = 0; i < vertices_.size(); ++i)
        for (std::size_t j = i + 1; j < vertices_.size(); ++j)
          if (is_edge_pair(vs[i], vs[j], vs)) c.edges->push_back({(int)i, (int)j});
    }
  }
  return *c.edges;
}

const std::vector<std::vector<int>>& LatticePolytope::faces2() const {
  edges();
  std::lock_guard<std::mutex> lock(cache_->mutex);
  return *cache_->faces2;
}

bool LatticePolytope::contains(const Exponent& p) const {
  if (p.size() != n_) throw std::invalid_argument("point dimension mismatch");
  if (dim_ == 0) return p == vertices_[0];
  if (dim_ == 1) {
    const Exponent& a = vertices_[0];
    const Exponent& b = vertices_[1];
    // p = a + t (b - a) for some t in [0, 1]: componentwise consistent ratio.
    long long tn = 0, td = 0;  // t = tn / td once pinned by a nonzero delta
    for (std::size_t i = 0; i < n_; ++i) {
      long long d = (long long)b[i] - (long long)a[i];
      long long e = (long long)p[i] - (long long)a[i];
      if (d == 0) {
        if (e != 0) return false;
      } else if (td == 0) {
        tn = e;
        td = d;
      } else if (e * td != tn * d) {
        return false;
      }
    }
    if (td < 0) { tn = -tn; td = -td; }
    return tn >= 0 && tn <= td;
  }
  if (dim_ == 2) {
    // Must lie in the affine plane of the polygon, then inside its projection.
    std::vector<Exponent> with_p = vertices_;
    with_p.push_back(p);
    if (affine_dim(with_p) > 2) return false;
    const auto& cycle = faces2().at(0);
    long long px = p[px_], py = p[py_];
    int sign = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Exponent& a = vertices_[cycle[i]];
      const Exponent& b = vertices_[cycle[(i + 1) % cycle.size()]];
      long long cr = cross2((long long)a[px_], (long long)a[py_], (long long)b[px_],
                            (long long)b[py_], px, py);
      if (cr == 0) continue;
      int s = cr > 0 ? 1 : -1;
      if (sign == 0) sign = s;
      else if (sign != s) return false;
    }
    return true;
  }
  std::vector<std::vector<long long>> vs;
  for (const auto& v : vertices_) vs.push_back(to_ll(v));
  return in_convex_hull(to_ll(p), vs);
}

std::vector<Exponent> LatticePolytope::lattice_points() const {
  if (dim_ == 0) return {vertices_[0]};
  if (dim_ == 1) return segment_lattice_points(vertices_[0], vertices_[1]);
  Exponent lo = vertices_[0], hi = vertices_[0];
  for (const auto& v : vertices_)
    for (std::size_t i = 0; i < n_; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  std::uint64_t box = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    box *= (std::uint64_t)(hi[i] - lo[i]) + 1;
    if (box > (1u << 20)) throw std::domain_error("lattice point enumeration too large");
  }
  std::vector<Exponent> out;
  Exponent cur = lo;
  for (;;) {
    if (contains(cur)) out.push_back(cur);
    bool exhausted = true;
    std::size_t i = n_;
    while (i-- > 0) {
      if (cur[i] < hi[i]) { ++cur[i]; exhausted = false; break; }
      cur[i] = lo[i];
    }
    if (exhausted) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> lambda_candidates(const Exponent& v, const Exponent& w) {
  Exponent d(v.size());
  std::uint32_t g = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    g = std::gcd(g, (std::uint32_t)std::llabs((long long)w[i] - (long long)v[i]));
  if (g == 0) throw std::invalid_argument("degenerate edge");
  std::vector<Rational> out;
  for (std::uint32_t a = 0; a <= g; ++a) out.emplace_back(a, g);
  return out;
}

namespace {

// Integer vector arithmetic for splitting-map propagation (values can dip
// below zero along tree paths before normalization).
using IVec = std::vector<long long>;

std::optional<Exponent> to_exponent(const IVec& v) {
  Exponent e(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || v[i] > (long long)kMaxCoord) return std::nullopt;
    e[i] = (std::uint32_t)v[i];
  }
  return e;
}

// lambda * (w - v) as an integer vector; nullopt when not integral.
std::optional<IVec> scaled_edge(const Exponent& v, const Exponent& w, const Rational& lam) {
  IVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    long long d = (long long)w[i] - (long long)v[i];
    long long num = lam.num() * d;
    if (num % lam.den() != 0) return std::nullopt;
    r[i] = num / lam.den();
  }
  return r;
}

struct SplitResult {
  std::map<Exponent, Exponent> phi, psi;
  LatticePolytope left, right;

  SplitResult(std::map<Exponent, Exponent> p, std::map<Exponent, Exponent> q,
              LatticePolytope l, LatticePolytope r)
      : phi(std::move(p)), psi(std::move(q)), left(std::move(l)), right(std::move(r)) {}
};

// Shared validation tail: given integral phi values on the vertices of c
// (up to a common translation), normalize both halves and verify that they
// Minkowski-sum back to c exactly.
std::optional<SplitResult> finish_split(const LatticePolytope& c,
                                        const std::vector<IVec>& phi_raw) {
  const auto& verts = c.vertices();
  const std::size_t n = c.n();
  IVec lo1(n, LLONG_MAX), lo2(n, LLONG_MAX);
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      lo1[j] = std::min(lo1[j], phi_raw[i][j]);
      lo2[j] = std::min(lo2[j], (long long)verts[i][j] - phi_raw[i][j]);
    }
  // inf(left) + inf(right) must land on inf(c) = 0.
  for (std::size_t j = 0; j < n; ++j)
    if (lo1[j] + lo2[j] != 0) return std::nullopt;
  std::map<Exponent, Exponent> phi, psi;
  std::vector<Exponent> lpts, rpts;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    IVec a(n), b(n);
    for (std::size_t j = 0; j < n; ++j) {
      a[j] = phi_raw[i][j] - lo1[j];
      b[j] = (long long)verts[i][j] - phi_raw[i][j] - lo2[j];
    }
    auto ea = to_exponent(a), eb = to_exponent(b);
    if (!ea || !eb) return std::nullopt;
    phi.emplace(verts[i], *ea);
    psi.emplace(verts[i], *eb);
    lpts.push_back(*ea);
    rpts.push_back(*eb);
  }
  LatticePolytope left = LatticePolytope::hull(Support(n, lpts));
  LatticePolytope right = LatticePolytope::hull(Support(n, rpts));
  LatticePolytope sum = LatticePolytope::hull(
      minkowski_sum(left.vertex_support(), right.vertex_support()));
  if (!(sum == c)) return std::nullopt;
  return SplitResult{std::move(phi), std::move(psi), std::move(left), std::move(right)};
}

void require_inf_zero(const LatticePolytope& c) {
  Exponent inf = inf_point(c.vertex_support());
  if (!inf.is_zero())
    throw std::invalid_argument("polytope must be inf-normalized (inf = 0)");
}

}  // namespace

std::optional<Decomposition> reconstruct(const LatticePolytope& c, const LambdaMap& lambda) {
  require_inf_zero(c);
  const auto& verts = c.vertices();
  const auto& edges = c.edges();
  for (const auto& [vw, lam] : lambda)
    if (lam < Rational(0) || lam > Rational(1))
      throw std::invalid_argument("edge coefficient outside [0,1]");

  std::vector<IVec> phi_raw(verts.size(), IVec(c.n(), 0));
  if (!verts.empty() && !edges.empty()) {
    // Propagate over a BFS tree, then check the remaining edges.
    std::vector<std::vector<std::pair<int, int>>> adj(verts.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      adj[edges[e].first].push_back({edges[e].second, (int)e});
      adj[edges[e].second].push_back({edges[e].first, (int)e});
    }
    std::vector<bool> seen(verts.size(), false);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = true;
    auto lambda_at = [&](int ei) -> const Rational& {
      EdgeKey key{verts[edges[ei].first], verts[edges[ei].second]};
      auto it = lambda.find(key);
      if (it == lambda.end())
        throw std::invalid_argument("missing edge coefficient");
      return it->second;
    };
    std::size_t visited = 1;
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (auto [v, ei] : adj[u]) {
        if (seen[v]) continue;
        auto step = scaled_edge(verts[edges[ei].first], verts[edges[ei].second],
                                lambda_at(ei));
        if (!step) return std::nullopt;
        // Step is oriented first -> second; flip when walking the other way.
        for (std::size_t j = 0; j < c.n(); ++j) {
          long long s = (*step)[j];
          phi_raw[v][j] = phi_raw[u][j] + (u == edges[ei].first ? s : -s);
        }
        seen[v] = true;
        ++visited;
        bfs.push(v);
      }
    }
    if (visited != verts.size())
      throw std::logic_error("polytope edge graph is disconnected");
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto step = scaled_edge(verts[edges[e].first], verts[edges[e].second],
                              lambda_at((int)e));
      if (!step) return std::nullopt;
      for (std::size_t j = 0; j < c.n(); ++j)
        if (phi_raw[edges[e].second][j] - phi_raw[edges[e].first][j] != (*step)[j])
          return std::nullopt;
    }
  }
  auto split = finish_split(c, phi_raw);
  if (!split) return std::nullopt;
  return Decomposition{std::move(split->left), std::move(split->right), lambda,
                       std::move(split->phi), std::move(split->psi)};
}

std::vector<Decomposition> enumerate_decompositions(const LatticePolytope& c,
                                                    bool positive_dims) {
  require_inf_zero(c);
  const auto& verts = c.vertices();
  const auto& edges = c.edges();
  std::vector<Decomposition> out;

  if (edges.empty()) {
    if (!positive_dims)
      if (auto d = reconstruct(c, {})) out.push_back(std::move(*d));
    return out;
  }

  // BFS spanning tree; free coefficients live on tree edges, the rest are
  // forced by path sums and checked inside reconstruct.
  std::vector<std::vector<std::pair<int, int>>> adj(verts.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adj[edges[e].first].push_back({edges[e].second, (int)e});
    adj[edges[e].second].push_back({edges[e].first, (int)e});
  }
  std::vector<int> tree;
  {
    std::vector<bool> seen(verts.size(), false);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = true;
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (auto [v, ei] : adj[u])
        if (!seen[v]) {
          seen[v] = true;
          tree.push_back(ei);
          bfs.push(v);
        }
    }
  }
  std::sort(tree.begin(), tree.end());
  std::vector<std::vector<Rational>> cands;
  for (int ei : tree)
    cands.push_back(lambda_candidates(verts[edges[ei].first], verts[edges[ei].second]));

  std::vector<std::size_t> odo(tree.size(), 0);
  for (;;) {
    // Tree assignment -> phi on all vertices -> derived lambda on every edge.
    std::vector<IVec> phi_raw(verts.size(), IVec(c.n(), 0));
    std::vector<bool> seen(verts.size(), false);
    std::vector<Rational> tree_lambda(edges.size(), Rational(0));
    std::vector<bool> on_tree(edges.size(), false);
    for (std::size_t t = 0; t < tree.size(); ++t) {
      tree_lambda[tree[t]] = cands[t][odo[t]];
      on_tree[tree[t]] = true;
    }
    bool ok = true;
    {
      std::queue<int> bfs;
      bfs.push(0);
      seen[0] = true;
      while (!bfs.empty() && ok) {
        int u = bfs.front();
        bfs.pop();
        for (auto [v, ei] : adj[u]) {
          if (seen[v] || !on_tree[ei]) continue;
          auto step = scaled_edge(verts[edges[ei].first], verts[edges[ei].second],
                                  tree_lambda[ei]);
          if (!step) { ok = false; break; }
          for (std::size_t j = 0; j < c.n(); ++j) {
            long long s = (*step)[j];
            phi_raw[v][j] = phi_raw[u][j] + (u == edges[ei].first ? s : -s);
          }
          seen[v] = true;
          bfs.push(v);
        }
      }
    }
    if (ok) {
      LambdaMap lam;
      for (std::size_t e = 0; e < edges.size() && ok; ++e) {
        const Exponent& v = verts[edges[e].first];
        const Exponent& w = verts[edges[e].second];
        if (on_tree[e]) {
          lam.emplace(EdgeKey{v, w}, tree_lambda[e]);
          continue;
        }
        // Derived coefficient: phi(w) - phi(v) must be t * (w - v), t in [0,1].
        Rational t(0);
        bool pinned = false;
        for (std::size_t j = 0; j < c.n() && ok; ++j) {
          long long d = (long long)w[j] - (long long)v[j];
          long long e2 = phi_raw[edges[e].second][j] - phi_raw[edges[e].first][j];
          if (d == 0) {
            if (e2 != 0) ok = false;
          } else if (!pinned) {
            t = Rational(e2, d);
            pinned = true;
          } else if (!(Rational(e2) == t * Rational(d))) {
            ok = false;
          }
        }
        if (ok && (t < Rational(0) || t > Rational(1))) ok = false;
        if (ok) lam.emplace(EdgeKey{v, w}, t);
      }
      if (ok) {
        auto split = finish_split(c, phi_raw);
        if (split)
          out.push_back(Decomposition{std::move(split->left), std::move(split->right),
                                      std::move(lam), std::move(split->phi),
                                      std::move(split->psi)});
      }
    }
    bool exhausted = true;
    std::size_t i = tree.size();
    while (i-- > 0) {
      if (++odo[i] < cands[i].size()) { exhausted = false; break; }
      odo[i] = 0;
    }
    if (exhausted) break;
  }

  if (positive_dims) {
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const Decomposition& d) {
                               return d.left.is_point() || d.right.is_point();
                             }),
              out.end());
  }
  std::sort(out.begin(), out.end(), [](const Decomposition& a, const Decomposition& b) {
    auto ia = a.lambda.begin();
    auto ib = b.lambda.begin();
    for (; ia != a.lambda.end() && ib != b.lambda.end(); ++ia, ++ib) {
      if (ia->second < ib->second) return true;
      if (ib->second < ia->second) return false;
    }
    return false;
  });
  return out;
}

std::pair<std::map<Exponent, Exponent>, std::map<Exponent, Exponent>> split_maps(
    const LatticePolytope& c, const LatticePolytope& left, const LatticePolytope& right) {
  LatticePolytope sum = LatticePolytope::hull(
      minkowski_sum(left.vertex_support(), right.vertex_support()));
  if (!(sum == c)) throw std::invalid_argument("not a Minkowski decomposition of c");
  std::map<Exponent, Exponent> phi, psi;
  for (const auto& v : c.vertices()) {
    int hits = 0;
    for (const auto& x : left.vertices())
      for (const auto& y : right.vertices()) {
        bool match = true;
        for (std::size_t j = 0; j < c.n() && match; ++j)
          match = (long long)x[j] + y[j] == (long long)v[j];
        if (match) {
          ++hits;
          phi[v] = x;
          psi[v] = y;
        }
      }
    if (hits != 1) throw std::logic_error("vertex splitting is not unique");
  }
  return {phi, psi};
}

LambdaMap lambda_of(const LatticePolytope& c, const std::map<Exponent, Exponent>& phi) {
  LambdaMap out;
  for (const auto& [i, j] : c.edges()) {
    const Exponent& v = c.vertices()[i];
    const Exponent& w = c.vertices()[j];
    auto pv = phi.find(v);
    auto pw = phi.find(w);
    if (pv == phi.end() || pw == phi.end())
      throw std::invalid_argument("phi missing a vertex");
    Rational t(0);
    bool pinned = false;
    for (std::size_t x = 0; x < c.n(); ++x) {
      long long d = (long long)w[x] - (long long)v[x];
      long long e = (long long)pw->second[x] - (long long)pv->second[x];
      if (d == 0) {
        if (e != 0) throw std::invalid_argument("phi is not a vertex splitting");
      } else if (!pinned) {
        t = Rational(e, d);
        pinned = true;
      } else if (!(Rational(e) == t * Rational(d))) {
        throw std::invalid_argument("phi is not a vertex splitting");
      }
    }
    if (t < Rational(0) || t > Rational(1))
      throw std::invalid_argument("phi is not a vertex splitting");
    out.emplace(EdgeKey{v, w}, t);
  }
  return out;
}

}  // namespace newt
