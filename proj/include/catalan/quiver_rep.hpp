#ifndef CATALAN_QUIVER_REP_HPP
#define CATALAN_QUIVER_REP_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "catalan/matrix.hpp"

namespace catalan {

// Representation of the linear quiver 1 -> 2 -> ... -> n-1 over exact
// rationals.  arrows[k] is the map out of vertex k+1 (1-based), of shape
// dims[k+1] x dims[k].  Zero-dimensional vertices carry 0-by-k matrices and
// are not special-cased anywhere.
struct QuiverRep {
  int n = 2;
  std::vector<int> dims;
  std::vector<QMatrix> arrows;

  int vertex_count() const { return n - 1; }
  int dim(int v) const { return dims[v - 1]; }          // v in 1..n-1
  QMatrix const& arrow(int v) const { return arrows[v - 1]; }  // V_v -> V_{v+1}

  static QuiverRep zero(int n) {
    QuiverRep r;
    r.n = n;
    r.dims.assign(n - 1, 0);
    for (int k = 0; k + 2 <= n - 1; ++k) r.arrows.emplace_back(0, 0);
    return r;
  }

  bool is_zero() const {
    for (int d : dims) {
      if (d != 0) return false;
    }
    return true;
  }

  int total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
  }

  void validate() const {
    if (n < 2) throw std::invalid_argument("QuiverRep: n must be at least 2");
    if (static_cast<int>(dims.size()) != n - 1 ||
        static_cast<int>(arrows.size()) != std::max(0, n - 2)) {
      throw std::invalid_argument("QuiverRep: wrong number of vertices or arrows");
    }
    for (int k = 0; k < n - 2; ++k) {
      if (static_cast<int>(arrows[k].rows()) != dims[k + 1] ||
          static_cast<int>(arrows[k].cols()) != dims[k]) {
        throw std::invalid_argument("QuiverRep: arrow shape mismatch");
      }
    }
  }
};

struct Interval {
  int a = 1;
  int b = 1;
  friend bool operator==(Interval const& x, Interval const& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator<(Interval const& x, Interval const& y) {
    return std::pair(x.a, x.b) < std::pair(y.a, y.b);
  }
};

// One-dimensional on vertices a..b with identity arrows inside the support.
// interval_rep(n, 1, i) is the injective I_i, (i, i) the simple L_i and
// (i, n-1) the projective P_i.
inline QuiverRep interval_rep(int n, int a, int b) {
  if (a < 1 || b > n - 1 || a > b) throw std::out_of_range("interval_rep: bad range");
  QuiverRep r = QuiverRep::zero(n);
  for (int v = a; v <= b; ++v) r.dims[v - 1] = 1;
  for (int k = 0; k < n - 2; ++k) {
    r.arrows[k] = QMatrix(r.dims[k + 1], r.dims[k]);
    if (k + 1 >= a && k + 2 <= b) r.arrows[k](0, 0) = Rational(1);
  }
  return r;
}

inline QuiverRep simple_rep(int n, int i) { return interval_rep(n, i, i); }
inline QuiverRep injective_rep(int n, int i) { return interval_rep(n, 1, i); }
inline QuiverRep projective_rep(int n, int i) { return interval_rep(n, i, n - 1); }

// Vertexwise matrices commuting with the arrows; exact equality is required.
struct RepMorphism {
  QuiverRep source;
  QuiverRep target;
  std::vector<QMatrix> components;  // components[v-1]: source V_v -> target V_v

  void validate() const {
    source.validate();
    target.validate();
    if (source.n != target.n || components.size() != source.dims.size()) {
      throw std::invalid_argument("RepMorphism: shape mismatch");
    }
    for (int v = 1; v <= source.vertex_count(); ++v) {
      if (static_cast<int>(components[v - 1].rows()) != target.dim(v) ||
          static_cast<int>(components[v - 1].cols()) != source.dim(v)) {
        throw std::invalid_argument("RepMorphism: component shape mismatch");
      }
    }
    for (int k = 0; k < source.n - 2; ++k) {
      if (target.arrows[k] * components[k] != components[k + 1] * source.arrows[k]) {
        throw std::invalid_argument("RepMorphism: squares do not commute");
      }
    }
  }
};

inline RepMorphism make_morphism(QuiverRep source, QuiverRep target,
                                 std::vector<QMatrix> components) {
  RepMorphism m{std::move(source), std::move(target), std::move(components)};
  m.validate();
  return m;
}

inline RepMorphism identity_morphism(QuiverRep const& m) {
  std::vector<QMatrix> comps;
  for (int d : m.dims) comps.push_back(QMatrix::identity(d));
  return make_morphism(m, m, std::move(comps));
}

inline RepMorphism compose(RepMorphism const& g, RepMorphism const& f) {
  // g after f
  std::vector<QMatrix> comps;
  for (std::size_t v = 0; v < f.components.size(); ++v) {
    comps.push_back(g.components[v] * f.components[v]);
  }
  return make_morphism(f.source, g.target, std::move(comps));
}

inline RepMorphism zero_morphism(QuiverRep const& source, QuiverRep const& target) {
  std::vector<QMatrix> comps;
  for (int v = 1; v <= source.vertex_count(); ++v) {
    comps.emplace_back(target.dim(v), source.dim(v));
  }
  return make_morphism(source, target, std::move(comps));
}

// Direct sum with per-summand coordinate offsets, so block maps in and out
// of the sum can be assembled.
struct DirectSum {
  QuiverRep rep;
  std::vector<std::vector<int>> offsets;  // offsets[summand][vertex-1]
};

inline DirectSum direct_sum(int n, std::vector<QuiverRep> const& parts) {
  DirectSum s;
  s.rep = QuiverRep::zero(n);
  s.offsets.resize(parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].n != n) throw std::invalid_argument("direct_sum: mixed n");
    s.offsets[p].resize(n - 1);
    for (int v = 0; v < n - 1; ++v) {
      s.offsets[p][v] = s.rep.dims[v];
      s.rep.dims[v] += parts[p].dims[v];
    }
  }
  for (int k = 0; k < n - 2; ++k) {
    QMatrix a(s.rep.dims[k + 1], s.rep.dims[k]);
    for (std::size_t p = 0; p < parts.size(); ++p) {
      auto const& blk = parts[p].arrows[k];
      for (std::size_t r = 0; r < blk.rows(); ++r) {
        for (std::size_t c = 0; c < blk.cols(); ++c) {
          a(s.offsets[p][k + 1] + r, s.offsets[p][k] + c) = blk(r, c);
        }
      }
    }
    s.rep.arrows[k] = std::move(a);
  }
  return s;
}

struct SubRep {
  QuiverRep rep;
  RepMorphism inclusion;  // rep -> ambient, injective at every vertex
};

struct QuotientRep {
  QuiverRep rep;
  RepMorphism projection;  // ambient -> rep, surjective at every vertex
};

// Vertexwise kernel with the induced arrows.
inline SubRep kernel(RepMorphism const& phi) {
  int n = phi.source.n;
  std::vector<QMatrix> bases;
  QuiverRep k = QuiverRep::zero(n);
  for (int v = 0; v < n - 1; ++v) {
    bases.push_back(kernel_basis(phi.components[v]));
    k.dims[v] = static_cast<int>(bases[v].cols());
  }
  for (int a = 0; a < n - 2; ++a) {
    QMatrix img = phi.source.arrows[a] * bases[a];
    QMatrix induced;
    if (!solve(bases[a + 1], img, induced)) {
      throw std::logic_error("kernel: arrow does not restrict");
    }
    k.arrows[a] = std::move(induced);
  }
  return SubRep{k, make_morphism(k, phi.source, std::move(bases))};
}

namespace detail {

// Projection q: ambient -> ambient/S for the column space S of `span`,
// together with a section of q.  ker q == S exactly.
struct QuotientMap {
  QMatrix proj;     // (d - r) x d
  QMatrix section;  // d x (d - r), proj * section = identity
};

inline QuotientMap quotient_map(QMatrix const& span, int ambient_dim) {
  QMatrix r = span.transpose();  // rows span S
  auto pivots = rref(r);
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (int c = 0; c < ambient_dim; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  QuotientMap q;
  q.proj = QMatrix(free_cols.size(), ambient_dim);
  q.section = QMatrix(ambient_dim, free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    q.proj(j, free_cols[j]) = Rational(1);
    q.section(free_cols[j], j) = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      q.proj(j, pivots[i]) = -r(i, free_cols[j]);
    }
  }
  return q;
}

}  // namespace detail

// Vertexwise cokernel with the induced arrows.
inline QuotientRep cokernel(RepMorphism const& phi) {
  int n = phi.target.n;
  std::vector<detail::QuotientMap> maps;
  QuiverRep c = QuiverRep::zero(n);
  for (int v = 0; v < n - 1; ++v) {
    maps.push_back(detail::quotient_map(phi.components[v], phi.target.dims[v]));
    c.dims[v] = static_cast<int>(maps[v].proj.rows());
  }
  for (int a = 0; a < n - 2; ++a) {
    c.arrows[a] = maps[a + 1].proj * phi.target.arrows[a] * maps[a].section;
    if (c.arrows[a] * maps[a].proj != maps[a + 1].proj * phi.target.arrows[a]) {
      throw std::logic_error("cokernel: induced arrow ill-defined");
    }
  }
  std::vector<QMatrix> comps;
  for (auto& m : maps) comps.push_back(std::move(m.proj));
  return QuotientRep{c, make_morphism(phi.target, c, std::move(comps))};
}

// g with inclusion . g = f; requires im f inside the subobject.
inline RepMorphism factor_through_inclusion(RepMorphism const& inclusion,
                                            RepMorphism const& f) {
  std::vector<QMatrix> comps;
  for (std::size_t v = 0; v < f.components.size(); ++v) {
    QMatrix g;
    if (!solve(inclusion.components[v], f.components[v], g)) {
      throw std::logic_error("factor_through_inclusion: image not contained");
    }
    comps.push_back(std::move(g));
  }
  return make_morphism(f.source, inclusion.source, std::move(comps));
}

// g with g . projection = f; requires f to kill ker(projection).
inline RepMorphism factor_through_quotient(RepMorphism const& projection,
                                           RepMorphism const& f) {
  std::vector<QMatrix> comps;
  for (std::size_t v = 0; v < f.components.size(); ++v) {
    QMatrix section;
    if (!solve(projection.components[v], QMatrix::identity(projection.target.dims[v]),
               section)) {
      throw std::logic_error("factor_through_quotient: projection not surjective");
    }
    QMatrix g = f.components[v] * section;
    if (g * projection.components[v] != f.components[v]) {
      throw std::logic_error("factor_through_quotient: map does not descend");
    }
    comps.push_back(std::move(g));
  }
  return make_morphism(projection.target, f.target, std::move(comps));
}

// Basis of Hom(M, N) as the solution space of the commuting-square system.
inline std::vector<RepMorphism> hom_basis(QuiverRep const& m, QuiverRep const& n) {
  if (m.n != n.n) throw std::invalid_argument("hom_basis: mixed n");
  int nv = m.vertex_count();
  std::vector<int> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
  int unknowns = offset[nv];
  int equations = 0;
  for (int k = 0; k < nv - 1; ++k) equations += n.dims[k + 1] * m.dims[k];
  QMatrix sys(equations, unknowns);
  int eq = 0;
  for (int k = 0; k < nv - 1; ++k) {
    // phi_{k+1} A^M_k - A^N_k phi_k = 0 entrywise
    for (int r = 0; r < n.dims[k + 1]; ++r) {
      for (int c = 0; c < m.dims[k]; ++c) {
        for (int j = 0; j < m.dims[k + 1]; ++j) {
          sys(eq, offset[k + 1] + r * m.dims[k + 1] + j) += m.arrows[k](j, c);
        }
        for (int j = 0; j < n.dims[k]; ++j) {
          sys(eq, offset[k] + j * m.dims[k] + c) -= n.arrows[k](r, j);
        }
        ++eq;
      }
    }
  }
  QMatrix null = kernel_basis(sys);
  std::vector<RepMorphism> basis;
  for (std::size_t col = 0; col < null.cols(); ++col) {
    std::vector<QMatrix> comps;
    for (int v = 0; v < nv; ++v) {
      QMatrix phi(n.dims[v], m.dims[v]);
      for (int r = 0; r < n.dims[v]; ++r) {
        for (int c = 0; c < m.dims[v]; ++c) {
          phi(r, c) = null(offset[v] + r * m.dims[v] + c, col);
        }
      }
      comps.push_back(std::move(phi));
    }
    basis.push_back(make_morphism(m, n, std::move(comps)));
  }
  return basis;
}

inline int hom_dim(QuiverRep const& m, QuiverRep const& n) {
  return static_cast<int>(hom_basis(m, n).size());
}

// dim ker of the arrow out of each vertex; the last vertex contributes all
// of its space.  These are the socle multiplicities.
inline std::vector<int> socle_dims(QuiverRep const& m) {
  int nv = m.vertex_count();
  std::vector<int> s(nv);
  for (int v = 0; v < nv - 1; ++v) {
    s[v] = m.dims[v] - static_cast<int>(rank(m.arrows[v]));
  }
  s[nv - 1] = m.dims[nv - 1];
  return s;
}

// Tr_{L_i}(M): ker of the arrow out of vertex i, placed at i.
inline SubRep trace_of_simple(int i, QuiverRep const& m) {
  if (i < 1 || i > m.vertex_count()) throw std::out_of_range("trace_of_simple: bad vertex");
  int nv = m.vertex_count();
  QMatrix basis = (i < nv) ? kernel_basis(m.arrows[i - 1])
                           : QMatrix::identity(m.dims[nv - 1]);
  QuiverRep t = QuiverRep::zero(m.n);
  t.dims[i - 1] = static_cast<int>(basis.cols());
  for (int k = 0; k < m.n - 2; ++k) t.arrows[k] = QMatrix(t.dims[k + 1], t.dims[k]);
  std::vector<QMatrix> comps;
  for (int v = 0; v < nv; ++v) {
    comps.push_back(v == i - 1 ? basis : QMatrix(m.dims[v], 0));
  }
  return SubRep{t, make_morphism(t, m, std::move(comps))};
}

// Composite arrow map V_a -> V_b (identity when a == b).
inline QMatrix composite_arrow(QuiverRep const& m, int a, int b) {
  QMatrix acc = QMatrix::identity(m.dims[a - 1]);
  for (int v = a; v < b; ++v) acc = m.arrows[v - 1] * acc;
  return acc;
}

// Multiplicity of each interval summand from composite ranks, by
// inclusion-exclusion.  The direct sum of the result is isomorphic to the
// input; this is the complete isomorphism invariant used everywhere.
inline std::map<Interval, int> decompose_intervals(QuiverRep const& m) {
  int nv = m.vertex_count();
  auto r = [&](int a, int b) -> int {
    if (a < 1 || b > nv || a > b) return 0;
    return static_cast<int>(rank(composite_arrow(m, a, b)));
  };
  std::map<Interval, int> mult;
  for (int a = 1; a <= nv; ++a) {
    for (int b = a; b <= nv; ++b) {
      int c = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1);
      if (c < 0) throw std::logic_error("decompose_intervals: negative multiplicity");
      if (c > 0) mult[Interval{a, b}] = c;
    }
  }
  return mult;
}

// Flat, sorted form of decompose_intervals; equality of these lists is
// isomorphism of representations.
inline std::vector<Interval> interval_multiset(QuiverRep const& m) {
  std::vector<Interval> out;
  for (auto const& [ival, count] : decompose_intervals(m)) {
    for (int k = 0; k < count; ++k) out.push_back(ival);
  }
  return out;
}

inline bool isomorphic(QuiverRep const& a, QuiverRep const& b) {
  return interval_multiset(a) == interval_multiset(b);
}

// Injective envelope together with the canonical embedding.  Labels list the
// socle indices in ascending order; the target is the matching direct sum of
// interval injectives.
struct Envelope {
  std::vector<int> labels;  // I_{labels[k]}
  RepMorphism embed;        // M -> sum of injectives
};

inline Envelope injective_envelope(QuiverRep const& m) {
  int n = m.n;
  int nv = m.vertex_count();
  std::vector<int> soc = socle_dims(m);

  // Functionals dual to a socle basis at each vertex: Lambda with
  // Lambda * basis = identity.
  std::vector<QMatrix> lambdas(nv);
  for (int v = 1; v <= nv; ++v) {
    QMatrix basis = (v < nv) ? kernel_basis(m.arrows[v - 1])
                             : QMatrix::identity(m.dims[nv - 1]);
    QMatrix lambda_t;
    if (!solve(basis.transpose(), QMatrix::identity(basis.cols()), lambda_t)) {
      throw std::logic_error("injective_envelope: socle basis not full rank");
    }
    lambdas[v - 1] = lambda_t.transpose();
  }

  Envelope env;
  std::vector<QuiverRep> parts;
  for (int v = 1; v <= nv; ++v) {
    for (int k = 0; k < soc[v - 1]; ++k) {
      env.labels.push_back(v);
      parts.push_back(injective_rep(n, v));
    }
  }
  DirectSum sum = direct_sum(n, parts);

  std::vector<QMatrix> comps;
  for (int v = 1; v <= nv; ++v) {
    QMatrix comp(sum.rep.dims[v - 1], m.dims[v - 1]);
    std::size_t part = 0;
    for (int i = 1; i <= nv; ++i) {
      QMatrix to_socle = composite_arrow(m, v, i);  // only used when i >= v
      for (int k = 0; k < soc[i - 1]; ++k, ++part) {
        if (i < v) continue;  // I_i unsupported at v
        int row = sum.offsets[part][v - 1];
        for (int c = 0; c < m.dims[v - 1]; ++c) {
          Rational entry(0);
          for (int j = 0; j < m.dims[i - 1]; ++j) {
            entry += lambdas[i - 1](k, j) * to_socle(j, c);
          }
          comp(row, c) = entry;
        }
      }
    }
    comps.push_back(std::move(comp));
  }
  env.embed = make_morphism(m, sum.rep, std::move(comps));
  for (int v = 0; v < nv; ++v) {
    if (static_cast<int>(rank(env.embed.components[v])) != m.dims[v]) {
      throw std::logic_error("injective_envelope: embedding not injective");
    }
  }
  return env;
}

// Two-step injective copresentation M >-> Q0 ->> Q1; two steps always
// suffice since cokernels of embeddings into injectives are injective here.
struct InjCopresentation {
  std::vector<int> q0_labels;
  std::vector<int> q1_labels;
  RepMorphism embed;  // M -> Q0
  RepMorphism map;    // Q0 -> Q1
};

inline InjCopresentation injective_copresentation(QuiverRep const& m) {
  Envelope env = injective_envelope(m);
  QuotientRep cok = cokernel(env.embed);
  Envelope env_c = injective_envelope(cok.rep);
  if (env_c.embed.target.dims != cok.rep.dims) {
    throw std::logic_error("injective_copresentation: cokernel not injective");
  }
  InjCopresentation cop;
  cop.q0_labels = env.labels;
  cop.q1_labels = env_c.labels;
  cop.map = compose(env_c.embed, cok.projection);
  cop.embed = std::move(env.embed);
  return cop;
}

}  // namespace catalan

#endif  // CATALAN_QUIVER_REP_HPP
