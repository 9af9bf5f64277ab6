#include "newton/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "newton/errors.hpp"

namespace newton {

namespace {

Rational dot(const std::vector<Integer>& n, const RationalPoint& x) {
  Rational s = 0;
  for (size_t i = 0; i < n.size(); ++i) s += Rational(n[i]) * x[i];
  return s;
}

Rational dot(const std::vector<Rational>& n, const RationalPoint& x) {
  Rational s = 0;
  for (size_t i = 0; i < n.size(); ++i) s += n[i] * x[i];
  return s;
}

// Clear denominators and divide out the content.
std::vector<Integer> primitive(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const Rational& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> w(v.size());
  Integer g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    Rational q = v[i] * l;
    w[i] = q.get_num();
    g = gcd(g, w[i]);
  }
  if (g > 1)
    for (Integer& x : w) x /= g;
  return w;
}

// Row rank of a rational matrix (destructive Gaussian elimination).
int rank_of(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  size_t cols = m[0].size();
  int r = 0;
  for (size_t c = 0; c < cols && r < (int)m.size(); ++c) {
    size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    for (size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

Rational det_of(std::vector<std::vector<Rational>> m) {
  size_t n = m.size();
  Rational d = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[c], m[piv]);
      d = -d;
    }
    d *= m[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

// Normal of the hyperplane spanned by d-1 direction vectors, via cofactor
// expansion. Zero vector when the directions do not span a hyperplane.
std::vector<Rational> hyperplane_normal(const std::vector<RationalPoint>& dirs,
                                        int dim) {
  std::vector<Rational> n(dim);
  std::vector<std::vector<Rational>> minor(dim - 1,
                                           std::vector<Rational>(dim - 1));
  for (int skip = 0; skip < dim; ++skip) {
    for (int r = 0; r < dim - 1; ++r) {
      int cc = 0;
      for (int c = 0; c < dim; ++c) {
        if (c == skip) continue;
        minor[r][cc++] = dirs[r][c];
      }
    }
    Rational d = det_of(minor);
    n[skip] = (skip % 2 == 0) ? d : -d;
  }
  return n;
}

bool lex_less(const RationalPoint& a, const RationalPoint& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

bool lex_less_facet(const Facet& a, const Facet& b) {
  for (size_t i = 0; i < a.normal.size(); ++i) {
    if (a.normal[i] != b.normal[i]) return a.normal[i] < b.normal[i];
  }
  return a.offset < b.offset;
}

// Remove duplicates and componentwise-dominated points.
std::vector<RationalPoint> pareto_minimal(std::vector<RationalPoint> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<RationalPoint> keep;
  for (size_t i = 0; i < pts.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < pts.size() && !dominated; ++j) {
      if (i == j) continue;
      bool le = true;
      for (size_t k = 0; k < pts[i].size(); ++k)
        if (pts[j][k] > pts[i][k]) {
          le = false;
          break;
        }
      if (le && pts[j] != pts[i]) dominated = true;
      if (le && pts[j] == pts[i] && j < i) dominated = true;
    }
    if (!dominated) keep.push_back(pts[i]);
  }
  return keep;
}

int affine_rank(const std::vector<RationalPoint>& pts) {
  if (pts.size() <= 1) return 0;
  std::vector<std::vector<Rational>> rows;
  for (size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rational> r(pts[i].size());
    for (size_t k = 0; k < r.size(); ++k) r[k] = pts[i][k] - pts[0][k];
    rows.push_back(std::move(r));
  }
  return rank_of(std::move(rows));
}

}  // namespace

StaircasePolyhedron StaircasePolyhedron::hull(std::vector<RationalPoint> points,
                                              int dim) {
  if (dim < 1) throw DomainError("dimension must be positive");
  if (points.empty()) throw EmptyGeneratorError("hull of an empty point set");
  for (const RationalPoint& p : points) {
    if ((int)p.size() != dim)
      throw DimensionError("point dimension does not match");
    for (const Rational& c : p)
      if (c < 0) throw DomainError("negative coordinate");
  }

  StaircasePolyhedron out;
  out.dim_ = dim;
  std::vector<RationalPoint> pts = pareto_minimal(std::move(points));

  if (dim == 1) {
    out.vertices_ = {pts.front()};  // pareto filter leaves the minimum
    out.facets_ = {Facet{{1}, pts.front()[0]}};
    return out;
  }

  if (dim == 2) {
    // Pareto-minimal points are strictly increasing in x, decreasing in y.
    // Keep the convex chain toward the origin.
    std::vector<RationalPoint> chain;
    for (const RationalPoint& p : pts) {
      while (chain.size() >= 2) {
        const RationalPoint& a = chain[chain.size() - 2];
        const RationalPoint& b = chain.back();
        // the region lies above-right; keep b only on a strict left turn
        Rational cross =
            (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
        if (cross <= 0)
          chain.pop_back();
        else
          break;
      }
      chain.push_back(p);
    }
    out.vertices_ = chain;
    out.facets_.push_back(Facet{{1, 0}, chain.front()[0]});
    out.facets_.push_back(Facet{{0, 1}, chain.back()[1]});
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
      std::vector<Rational> n = {chain[i][1] - chain[i + 1][1],
                                 chain[i + 1][0] - chain[i][0]};
      Facet f;
      f.normal = primitive(n);
      f.offset = dot(f.normal, chain[i]);
      out.facets_.push_back(std::move(f));
    }
    std::sort(out.facets_.begin(), out.facets_.end(), lex_less_facet);
    return out;
  }

  // General dimension: every facet hyperplane is spanned, around one of the
  // input points, by d-1 independent directions taken from point differences
  // and orthant rays. Enumerate those, keep the supporting ones with
  // nonnegative normal.
  size_t n = pts.size();
  std::set<std::pair<std::vector<Integer>, Rational>> facetset;
  for (size_t base = 0; base < n; ++base) {
    std::vector<RationalPoint> dirs;
    for (size_t j = 0; j < n; ++j) {
      if (j == base) continue;
      RationalPoint d(dim);
      for (int k = 0; k < dim; ++k) d[k] = pts[j][k] - pts[base][k];
      dirs.push_back(std::move(d));
    }
    for (int k = 0; k < dim; ++k) {
      RationalPoint e(dim, Rational(0));
      e[k] = 1;
      dirs.push_back(std::move(e));
    }
    std::vector<int> idx(dim - 1);
    // iterate (d-1)-subsets of dirs
    std::vector<RationalPoint> chosen(dim - 1);
    auto recurse = [&](auto&& self, int pos, int start) -> void {
      if (pos == dim - 1) {
        std::vector<Rational> nor = hyperplane_normal(chosen, dim);
        bool zero = true, nonneg = true;
        for (const Rational& c : nor)
          if (c != 0) zero = false;
        if (zero) return;
        // orient so that all points lie on the >= side
        int sign = 0;
        for (size_t j = 0; j < n && sign == 0; ++j) {
          Rational v = dot(nor, pts[j]) - dot(nor, pts[base]);
          if (v > 0) sign = 1;
          if (v < 0) sign = -1;
        }
        if (sign == -1)
          for (Rational& c : nor) c = -c;
        for (const Rational& c : nor)
          if (c < 0) nonneg = false;
        if (!nonneg) return;
        Rational c0 = dot(nor, pts[base]);
        for (size_t j = 0; j < n; ++j)
          if (dot(nor, pts[j]) < c0) return;
        std::vector<Integer> ni = primitive(nor);
        Rational off = dot(ni, pts[base]);
        facetset.insert({std::move(ni), std::move(off)});
        return;
      }
      for (int i = start; i < (int)dirs.size(); ++i) {
        chosen[pos] = dirs[i];
        self(self, pos + 1, i + 1);
      }
    };
    recurse(recurse, 0, 0);
  }
  for (auto& [nor, off] : facetset) out.facets_.push_back(Facet{nor, off});
  std::sort(out.facets_.begin(), out.facets_.end(), lex_less_facet);

  // A point is a vertex exactly when its active facet normals span R^d.
  for (const RationalPoint& p : pts) {
    std::vector<std::vector<Rational>> active;
    for (const Facet& f : out.facets_) {
      if (dot(f.normal, p) == f.offset) {
        std::vector<Rational> row(dim);
        for (int k = 0; k < dim; ++k) row[k] = Rational(f.normal[k]);
        active.push_back(std::move(row));
      }
    }
    if (rank_of(std::move(active)) == dim) out.vertices_.push_back(p);
  }
  std::sort(out.vertices_.begin(), out.vertices_.end(), lex_less);
  return out;
}

bool StaircasePolyhedron::contains(const RationalPoint& p) const {
  if ((int)p.size() != dim_) throw DimensionError("point dimension mismatch");
  for (const Facet& f : facets_)
    if (dot(f.normal, p) < f.offset) return false;
  return true;
}

StaircasePolyhedron minkowski_sum(const StaircasePolyhedron& p,
                                  const StaircasePolyhedron& q) {
  if (p.dim() != q.dim())
    throw DimensionError("minkowski sum of mismatched dimensions");
  std::vector<RationalPoint> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const RationalPoint& a : p.vertices())
    for (const RationalPoint& b : q.vertices()) {
      RationalPoint s(a.size());
      for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      sums.push_back(std::move(s));
    }
  return StaircasePolyhedron::hull(std::move(sums), p.dim());
}

StaircasePolyhedron scale(const StaircasePolyhedron& p, const Rational& r) {
  if (r <= 0) throw DomainError("scale factor must be positive");
  StaircasePolyhedron out;
  out.dim_ = p.dim_;
  out.vertices_ = p.vertices_;
  for (RationalPoint& v : out.vertices_)
    for (Rational& c : v) c *= r;
  out.facets_ = p.facets_;
  for (Facet& f : out.facets_) f.offset *= r;
  return out;
}

bool subset(const StaircasePolyhedron& p, const StaircasePolyhedron& q) {
  if (p.dim() != q.dim()) throw DimensionError("subset of mismatched dimensions");
  for (const RationalPoint& v : p.vertices())
    if (!q.contains(v)) return false;
  return true;
}

std::vector<CompactFace> compact_faces(const StaircasePolyhedron& p) {
  int d = p.dim();
  if (d > 3)
    throw UnsupportedDimensionError("compact face enumeration needs d <= 3");
  const auto& vs = p.vertices();
  const auto& fs = p.facets();

  auto active_at = [&](const RationalPoint& v) {
    std::vector<size_t> a;
    for (size_t i = 0; i < fs.size(); ++i)
      if (dot(fs[i].normal, v) == fs[i].offset) a.push_back(i);
    return a;
  };

  std::map<std::vector<RationalPoint>, CompactFace> found;
  auto record = [&](std::vector<RationalPoint> verts,
                    std::vector<Rational> w) {
    std::sort(verts.begin(), verts.end(), lex_less);
    if (found.count(verts)) return;
    CompactFace cf;
    cf.affine_dim = affine_rank(verts);
    cf.normal = primitive(w);
    cf.level = dot(cf.normal, verts[0]);
    cf.vertices = verts;
    found.emplace(std::move(verts), std::move(cf));
  };

  // Vertex faces: the sum of active facet normals is interior to the
  // normal cone, hence strictly positive.
  for (const RationalPoint& v : vs) {
    std::vector<Rational> w(d, Rational(0));
    for (size_t i : active_at(v))
      for (int k = 0; k < d; ++k) w[k] += Rational(fs[i].normal[k]);
    record({v}, std::move(w));
  }

  // Higher faces from vertex pairs: the minimal face containing the pair is
  // supported by the sum of the facets active at both; it is compact exactly
  // when that sum is strictly positive.
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j) {
      auto ai = active_at(vs[i]);
      auto aj = active_at(vs[j]);
      std::vector<size_t> both;
      std::set_intersection(ai.begin(), ai.end(), aj.begin(), aj.end(),
                            std::back_inserter(both));
      if (both.empty()) continue;
      std::vector<Rational> w(d, Rational(0));
      for (size_t f : both)
        for (int k = 0; k < d; ++k) w[k] += Rational(fs[f].normal[k]);
      bool positive = true;
      for (const Rational& c : w)
        if (c == 0) positive = false;
      if (!positive) continue;
      Rational level = dot(w, vs[i]);
      std::vector<RationalPoint> verts;
      for (const RationalPoint& v : vs)
        if (dot(w, v) == level) verts.push_back(v);
      record(std::move(verts), std::move(w));
    }

  // Strictly positive facets are compact (d-1)-faces.
  for (const Facet& f : fs) {
    bool positive = true;
    for (const Integer& c : f.normal)
      if (c == 0) positive = false;
    if (!positive) continue;
    std::vector<RationalPoint> verts;
    for (const RationalPoint& v : vs)
      if (dot(f.normal, v) == f.offset) verts.push_back(v);
    std::vector<Rational> w(d);
    for (int k = 0; k < d; ++k) w[k] = Rational(f.normal[k]);
    record(std::move(verts), std::move(w));
  }

  std::vector<CompactFace> out;
  for (auto& [k, cf] : found) out.push_back(std::move(cf));
  std::sort(out.begin(), out.end(), [](const CompactFace& a, const CompactFace& b) {
    if (a.affine_dim != b.affine_dim) return a.affine_dim < b.affine_dim;
    return a.vertices < b.vertices;
  });
  return out;
}

namespace {

// Vertices of the intersection of P with [0, M]^d, by brute-force
// intersection of constraint subsets (d is at most 3 here).
struct Constraint {
  std::vector<Rational> a;
  Rational b;  // <a, x> >= b
};

std::vector<RationalPoint> hpolytope_vertices(
    const std::vector<Constraint>& cons, int d) {
  std::vector<RationalPoint> verts;
  size_t n = cons.size();
  std::vector<size_t> idx(d);
  auto solve_and_check = [&](const std::vector<size_t>& sel) {
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) m[r][c] = cons[sel[r]].a[c];
      m[r][d] = cons[sel[r]].b;
    }
    // Gaussian elimination with unique-solution check.
    for (int c = 0; c < d; ++c) {
      int piv = -1;
      for (int r = c; r < d; ++r)
        if (m[r][c] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return;
      std::swap(m[c], m[piv]);
      for (int r = 0; r < d; ++r) {
        if (r == c || m[r][c] == 0) continue;
        Rational f = m[r][c] / m[c][c];
        for (int j = c; j <= d; ++j) m[r][j] -= f * m[c][j];
      }
    }
    RationalPoint x(d);
    for (int c = 0; c < d; ++c) x[c] = m[c][d] / m[c][c];
    for (const Constraint& con : cons)
      if (dot(con.a, x) < con.b) return;
    verts.push_back(std::move(x));
  };
  std::vector<size_t> sel(d);
  auto rec = [&](auto&& self, int pos, size_t start) -> void {
    if (pos == d) {
      solve_and_check(sel);
      return;
    }
    for (size_t i = start; i < n; ++i) {
      sel[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  std::sort(verts.begin(), verts.end(), lex_less);
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return verts;
}

// Cyclically order coplanar points around their centroid. u, v span the
// plane's coordinate frame.
void cyclic_sort(std::vector<RationalPoint>& pts, const RationalPoint& centroid,
                 const std::vector<Rational>& u, const std::vector<Rational>& v) {
  auto coords = [&](const RationalPoint& p) {
    RationalPoint rel(p.size());
    for (size_t i = 0; i < p.size(); ++i) rel[i] = p[i] - centroid[i];
    return std::pair<Rational, Rational>{dot(u, rel), dot(v, rel)};
  };
  auto half = [](const std::pair<Rational, Rational>& c) {
    if (c.second > 0 || (c.second == 0 && c.first > 0)) return 0;
    return 1;
  };
  std::sort(pts.begin(), pts.end(),
            [&](const RationalPoint& a, const RationalPoint& b) {
              auto ca = coords(a), cb = coords(b);
              int ha = half(ca), hb = half(cb);
              if (ha != hb) return ha < hb;
              Rational cross = ca.first * cb.second - ca.second * cb.first;
              if (cross != 0) return cross > 0;
              return lex_less(a, b);
            });
}

Rational polygon_area(std::vector<RationalPoint> pts) {
  if (pts.size() < 3) return 0;
  RationalPoint centroid(2, Rational(0));
  for (const RationalPoint& p : pts) {
    centroid[0] += p[0];
    centroid[1] += p[1];
  }
  centroid[0] /= (long)pts.size();
  centroid[1] /= (long)pts.size();
  cyclic_sort(pts, centroid, {1, 0}, {0, 1});
  Rational twice = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    const RationalPoint& a = pts[i];
    const RationalPoint& b = pts[(i + 1) % pts.size()];
    twice += a[0] * b[1] - a[1] * b[0];
  }
  return abs(twice) / 2;
}

Rational polytope_volume_3d(const std::vector<Constraint>& cons,
                            const std::vector<RationalPoint>& verts) {
  Rational six_vol = 0;
  std::set<std::vector<RationalPoint>> seen_facets;
  for (const Constraint& con : cons) {
    std::vector<RationalPoint> on;
    for (const RationalPoint& v : verts)
      if (dot(con.a, v) == con.b) on.push_back(v);
    if (on.size() < 3 || affine_rank(on) != 2) continue;
    std::sort(on.begin(), on.end(), lex_less);
    if (!seen_facets.insert(on).second) continue;  // duplicated constraint
    RationalPoint centroid(3, Rational(0));
    for (const RationalPoint& p : on)
      for (int k = 0; k < 3; ++k) centroid[k] += p[k];
    for (int k = 0; k < 3; ++k) centroid[k] /= (long)on.size();
    // in-plane frame: u = first vertex - centroid, v = n x u
    std::vector<Rational> u(3), w(3);
    for (int k = 0; k < 3; ++k) u[k] = on[0][k] - centroid[k];
    w[0] = con.a[1] * u[2] - con.a[2] * u[1];
    w[1] = con.a[2] * u[0] - con.a[0] * u[2];
    w[2] = con.a[0] * u[1] - con.a[1] * u[0];
    cyclic_sort(on, centroid, u, w);
    // fan; orient each triangle with outward normal -a
    for (size_t i = 1; i + 1 < on.size(); ++i) {
      const RationalPoint &q0 = on[0], &q1 = on[i], &q2 = on[i + 1];
      std::vector<Rational> e1(3), e2(3), nn(3);
      for (int k = 0; k < 3; ++k) {
        e1[k] = q1[k] - q0[k];
        e2[k] = q2[k] - q0[k];
      }
      nn[0] = e1[1] * e2[2] - e1[2] * e2[1];
      nn[1] = e1[2] * e2[0] - e1[0] * e2[2];
      nn[2] = e1[0] * e2[1] - e1[1] * e2[0];
      Rational orient = -(nn[0] * con.a[0] + nn[1] * con.a[1] + nn[2] * con.a[2]);
      Rational det = q0[0] * (q1[1] * q2[2] - q1[2] * q2[1]) -
                     q0[1] * (q1[0] * q2[2] - q1[2] * q2[0]) +
                     q0[2] * (q1[0] * q2[1] - q1[1] * q2[0]);
      if (orient > 0)
        six_vol += det;
      else if (orient < 0)
        six_vol -= det;
    }
  }
  return six_vol / 6;
}

void check_cofinite(const StaircasePolyhedron& p) {
  int d = p.dim();
  for (int axis = 0; axis < d; ++axis) {
    bool touched = false;
    for (const RationalPoint& v : p.vertices()) {
      bool on_axis = true;
      for (int k = 0; k < d; ++k)
        if (k != axis && v[k] != 0) on_axis = false;
      if (on_axis) {
        touched = true;
        break;
      }
    }
    if (!touched)
      throw NotCoFiniteError("staircase misses coordinate axis " +
                             std::to_string(axis) + "; complement unbounded");
  }
}

Integer min_box(const StaircasePolyhedron& p) {
  Integer m = 1;
  for (const RationalPoint& v : p.vertices())
    for (const Rational& c : v) {
      Integer ci;
      mpz_cdiv_q(ci.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
      if (ci > m) m = ci;
    }
  return m;
}

}  // namespace

Rational covolume_boxed(const StaircasePolyhedron& p, const Integer& box) {
  int d = p.dim();
  if (d > 3)
    throw UnsupportedDimensionError("covolume implemented for d <= 3");
  check_cofinite(p);
  Rational m(box);
  for (const RationalPoint& v : p.vertices())
    for (const Rational& c : v)
      if (c > m) throw DomainError("box too small for polyhedron");

  if (d == 1) return p.vertices()[0][0];

  std::vector<Constraint> cons;
  for (const Facet& f : p.facets()) {
    Constraint c;
    c.a.resize(d);
    for (int k = 0; k < d; ++k) c.a[k] = Rational(f.normal[k]);
    c.b = f.offset;
    cons.push_back(std::move(c));
  }
  for (int k = 0; k < d; ++k) {
    Constraint lo, hi;
    lo.a.assign(d, Rational(0));
    lo.a[k] = 1;
    lo.b = 0;
    hi.a.assign(d, Rational(0));
    hi.a[k] = -1;
    hi.b = -m;
    cons.push_back(std::move(lo));
    cons.push_back(std::move(hi));
  }
  std::vector<RationalPoint> verts = hpolytope_vertices(cons, d);
  Rational inner =
      (d == 2) ? polygon_area(verts) : polytope_volume_3d(cons, verts);
  Rational total = 1;
  for (int k = 0; k < d; ++k) total *= m;
  return total - inner;
}

Rational covolume(const StaircasePolyhedron& p) {
  int d = p.dim();
  if (d > 3)
    throw UnsupportedDimensionError("covolume implemented for d <= 3");
  check_cofinite(p);
  if (d == 1) return p.vertices()[0][0];
  if (d == 2) {
    // Shoelace of (0,0) followed by the staircase chain.
    const auto& vs = p.vertices();
    std::vector<RationalPoint> poly;
    poly.push_back({Rational(0), Rational(0)});
    poly.insert(poly.end(), vs.begin(), vs.end());
    Rational twice = 0;
    for (size_t i = 0; i < poly.size(); ++i) {
      const RationalPoint& a = poly[i];
      const RationalPoint& b = poly[(i + 1) % poly.size()];
      twice += a[0] * b[1] - a[1] * b[0];
    }
    return abs(twice) / 2;
  }
  if (d == 3) return covolume_boxed(p, min_box(p));
  throw UnsupportedDimensionError("covolume implemented for d <= 3");
}

}  // namespace newton
