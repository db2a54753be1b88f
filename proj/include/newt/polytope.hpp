#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "newt/rational.hpp"
#include "newt/support.hpp"

namespace newt {

// Integral polytope given by its vertex set (lex sorted). Edges are certified
// 1-faces; for affine dimension >= 3 they are computed on first use via exact
// LP feasibility. 2-face cycles are available for dimension <= 2 only, which
// is all the decomposition machinery needs: candidate splittings are checked
// by full reconstruction rather than by face-cycle conditions.
class LatticePolytope {
 public:
  static LatticePolytope hull(const Support& s);

  std::size_t n() const { return n_; }
  int dim() const { return dim_; }
  const std::vector<Exponent>& vertices() const { return vertices_; }
  bool is_point() const { return vertices_.size() == 1; }
  Support vertex_support() const { return Support(n_, vertices_); }
  long long degree() const;

  // Vertex index pairs (i < j), sorted.
  const std::vector<std::pair<int, int>>& edges() const;
  // Cyclic vertex index sequences, one per 2-face. Dimension <= 2 only.
  const std::vector<std::vector<int>>& faces2() const;

  bool contains(const Exponent& p) const;
  std::vector<Exponent> lattice_points() const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.n_ == b.n_ && a.vertices_ == b.vertices_;
  }

 private:
  LatticePolytope() = default;
  void build_planar_cycle() const;

  std::size_t n_ = 0;
  int dim_ = -1;
  std::vector<Exponent> vertices_;
  // Projection axes witnessing injectivity on the affine hull (dim 2).
  std::size_t px_ = 0, py_ = 1;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

using EdgeKey = std::pair<Exponent, Exponent>;  // (v, w) with v < w lex
using LambdaMap = std::map<EdgeKey, Rational>;

// Left/right Minkowski summands of an inf-normalized polytope C together with
// the edge coefficients and the vertex splitting maps that produced them.
// C = left + right, inf(left) = inf(right) = 0, and for every vertex v of C,
// v = phi(v) + psi(v) with phi(v) a vertex of left, psi(v) of right. Each
// edge [v,w] satisfies phi(w) - phi(v) = lambda * (w - v) with an integral
// multiple on both sides of the split.
struct Decomposition {
  LatticePolytope left, right;
  LambdaMap lambda;
  std::map<Exponent, Exponent> phi, psi;
};

// Admissible integral coefficients on the edge [v, w]: alpha/d for
// alpha = 0..d, d = gcd of the coordinates of w - v.
std::vector<Rational> lambda_candidates(const Exponent& v, const Exponent& w);

// All integral Minkowski decompositions of C (inf C = 0 required), sorted by
// their lambda vectors. Always contains the two trivial splits ({0}, C) and
// (C, {0}) unless positive_dims is set, which drops every pair with a point
// summand. Enumerates lambda over a spanning tree of the edge graph, derives
// the remaining edges, and keeps exactly the assignments whose reconstruction
// satisfies left + right = C.
std::vector<Decomposition> enumerate_decompositions(const LatticePolytope& c,
                                                    bool positive_dims = false);

// Vertex splitting maps of a known decomposition pair; validates
// left + right = c first.
std::pair<std::map<Exponent, Exponent>, std::map<Exponent, Exponent>> split_maps(
    const LatticePolytope& c, const LatticePolytope& left, const LatticePolytope& right);

// Edge coefficients from a splitting map; error if some edge difference is
// not a [0,1]-rational multiple of the edge vector.
LambdaMap lambda_of(const LatticePolytope& c, const std::map<Exponent, Exponent>& phi);

// Rebuilds the decomposition from edge coefficients (given on every edge of
// c); nullopt when the assignment is not realizable.
std::optional<Decomposition> reconstruct(const LatticePolytope& c, const LambdaMap& lambda);

}  // namespace newt
