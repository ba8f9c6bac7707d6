#ifndef CATALAN_FUNCTOR_CALC_HPP
#define CATALAN_FUNCTOR_CALC_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "catalan/bimodule_lattice.hpp"
#include "catalan/catalan_map.hpp"
#include "catalan/enumeration.hpp"
#include "catalan/groth_matrices.hpp"
#include "catalan/quiver_rep.hpp"

namespace catalan {

// Composition word: G_{letters[0]} . G_{letters[1]} . ... with the leftmost
// factor applied last.
struct FunctorWord {
  int n;
  std::vector<int> letters;
};

inline Word underlying_word(FunctorWord const& w) { return Word{w.n, w.letters}; }

// F_i = Id / Tr_{L_i}, with the projection onto the quotient.
inline QuotientRep apply_F_with_proj(int i, QuiverRep const& m) {
  return cokernel(trace_of_simple(i, m).inclusion);
}

inline QuiverRep apply_F(int i, QuiverRep const& m) {
  return apply_F_with_proj(i, m).rep;
}

// Exact functor G_i computed from a two-step injective copresentation:
// the kernel of F_i applied to Q0 -> Q1.
namespace detail {

struct GOnCopresentation {
  QuotientRep f_q0;
  QuotientRep f_q1;
  RepMorphism f_map;  // F_i Q0 -> F_i Q1
};

inline GOnCopresentation g_data(int i, QuiverRep const& m) {
  InjCopresentation cop = injective_copresentation(m);
  GOnCopresentation d{apply_F_with_proj(i, cop.embed.target),
                      apply_F_with_proj(i, cop.map.target),
                      RepMorphism{}};
  d.f_map = factor_through_quotient(d.f_q0.projection,
                                    compose(d.f_q1.projection, cop.map));
  return d;
}

}  // namespace detail

inline QuiverRep apply_G(int i, QuiverRep const& m) {
  return kernel(detail::g_data(i, m).f_map).rep;
}

// Degree-k right-derived value of G_i.  Degree 0 recovers apply_G; the
// copresentation has two steps, so everything above degree 1 vanishes.
inline QuiverRep right_derived_G(int i, int k, QuiverRep const& m) {
  if (k < 0) throw std::invalid_argument("right_derived_G: negative degree");
  if (k == 0) return apply_G(i, m);
  if (k >= 2) return QuiverRep::zero(m.n);
  return cokernel(detail::g_data(i, m).f_map).rep;
}

inline QuiverRep apply_word(FunctorWord const& w, QuiverRep m) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    m = apply_G(*it, m);
  }
  return m;
}

// Closed form of G_i on a single interval; the derived oracle the generic
// kernel computation is tested against.
inline std::optional<Interval> interval_image_closed_form(int i, Interval const& ival) {
  if (i == ival.a - 1) return Interval{ival.a - 1, ival.b};
  if (i == ival.b && ival.b > ival.a) return Interval{ival.a, ival.b - 1};
  if (i == ival.a && ival.a == ival.b) return std::nullopt;
  return ival;
}

// Partial approximation with respect to the sum of all injectives except
// I_i: inside an injective envelope of M, intersect kernels of maps to that
// sum vanishing on M, then quotient by the kernels of all remaining maps.
inline QuiverRep partial_approximation(int i, QuiverRep const& m) {
  int n = m.n;
  int nv = m.vertex_count();
  if (i < 1 || i > nv) throw std::out_of_range("partial_approximation: bad vertex");

  Envelope env = injective_envelope(m);
  QuiverRep const& ambient = env.embed.target;

  std::vector<QuiverRep> parts;
  for (int j = 1; j <= nv; ++j) {
    if (j != i) parts.push_back(injective_rep(n, j));
  }
  QuiverRep q = direct_sum(n, parts).rep;

  // Basis of { f : ambient -> Q with f . embed = 0 }.
  std::vector<RepMorphism> homs = hom_basis(ambient, q);
  int entries = 0;
  for (int v = 0; v < nv; ++v) entries += q.dims[v] * m.dims[v];
  QMatrix cond(entries, homs.size());
  for (std::size_t k = 0; k < homs.size(); ++k) {
    RepMorphism composed = compose(homs[k], env.embed);
    int row = 0;
    for (int v = 0; v < nv; ++v) {
      auto const& c = composed.components[v];
      for (std::size_t r = 0; r < c.rows(); ++r) {
        for (std::size_t cc = 0; cc < c.cols(); ++cc) cond(row++, k) = c(r, cc);
      }
    }
  }
  QMatrix combos = kernel_basis(cond);

  auto stack_kernels = [&](std::vector<RepMorphism> const& maps,
                           QuiverRep const& space) {
    std::vector<QMatrix> bases;
    for (int v = 0; v < nv; ++v) {
      QMatrix stacked(0, space.dims[v]);
      for (auto const& f : maps) stacked = vstack(stacked, f.components[v]);
      bases.push_back(kernel_basis(stacked));
    }
    return bases;
  };

  std::vector<RepMorphism> vanishing;
  for (std::size_t c = 0; c < combos.cols(); ++c) {
    std::vector<QMatrix> comps;
    for (int v = 0; v < nv; ++v) {
      QMatrix acc(q.dims[v], ambient.dims[v]);
      for (std::size_t k = 0; k < homs.size(); ++k) {
        if (combos(k, c).is_zero()) continue;
        for (std::size_t r = 0; r < acc.rows(); ++r) {
          for (std::size_t cc = 0; cc < acc.cols(); ++cc) {
            acc(r, cc) += combos(k, c) * homs[k].components[v](r, cc);
          }
        }
      }
      comps.push_back(std::move(acc));
    }
    vanishing.push_back(make_morphism(ambient, q, std::move(comps)));
  }

  // M' as a subrepresentation of the envelope.
  std::vector<QMatrix> m1_bases = stack_kernels(vanishing, ambient);
  QuiverRep m1 = QuiverRep::zero(n);
  for (int v = 0; v < nv; ++v) m1.dims[v] = static_cast<int>(m1_bases[v].cols());
  for (int a = 0; a < n - 2; ++a) {
    QMatrix induced;
    if (!solve(m1_bases[a + 1], ambient.arrows[a] * m1_bases[a], induced)) {
      throw std::logic_error("partial_approximation: M' not arrow-closed");
    }
    m1.arrows[a] = std::move(induced);
  }

  // M'' inside M': kernels of every map M' -> Q.
  std::vector<QMatrix> m2_bases = stack_kernels(hom_basis(m1, q), m1);
  QuiverRep m2 = QuiverRep::zero(n);
  for (int v = 0; v < nv; ++v) m2.dims[v] = static_cast<int>(m2_bases[v].cols());
  for (int a = 0; a < n - 2; ++a) {
    QMatrix induced;
    if (!solve(m2_bases[a + 1], m1.arrows[a] * m2_bases[a], induced)) {
      throw std::logic_error("partial_approximation: M'' not arrow-closed");
    }
    m2.arrows[a] = std::move(induced);
  }

  return cokernel(make_morphism(m2, m1, std::move(m2_bases))).rep;
}

// ---------------------------------------------------------------------------
// Decategorification.

// Class of a representation in the chosen ordered basis of the Grothendieck
// group, via the interval decomposition.
inline std::vector<std::int64_t> class_vector(QuiverRep const& m, BasisTag basis) {
  int nv = m.vertex_count();
  std::vector<std::int64_t> v(nv, 0);
  for (auto const& [ival, mult] : decompose_intervals(m)) {
    switch (basis) {
      case BasisTag::InjectiveBasis:
        v[ival.b - 1] += mult;
        if (ival.a >= 2) v[ival.a - 2] -= mult;
        break;
      case BasisTag::SimpleBasis:
        for (int j = ival.a; j <= ival.b; ++j) v[nv - j] += mult;
        break;
      case BasisTag::ProjectiveBasis:
        v[ival.a - 1] += mult;
        if (ival.b + 1 <= nv) v[ival.b] -= mult;
        break;
    }
  }
  return v;
}

// j-th element (1-based) of the documented basis order.
inline QuiverRep basis_element_rep(int n, int j, BasisTag basis) {
  switch (basis) {
    case BasisTag::InjectiveBasis:
      return injective_rep(n, j);
    case BasisTag::SimpleBasis:
      return simple_rep(n, n - j);
    case BasisTag::ProjectiveBasis:
      return projective_rep(n, j);
  }
  throw std::logic_error("basis_element_rep: unreachable");
}

// Matrix of the word's functor on the Grothendieck group: column j is the
// class of the image of the j-th basis element.
inline IntMatrix grothendieck_matrix(FunctorWord const& w, BasisTag basis) {
  int nv = w.n - 1;
  IntMatrix out(nv, nv);
  for (int j = 1; j <= nv; ++j) {
    QuiverRep image = apply_word(w, basis_element_rep(w.n, j, basis));
    auto col = class_vector(image, basis);
    for (int r = 0; r < nv; ++r) out(r, j - 1) = col[r];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical names of 1-morphisms and the orientation of the isomorphism.

// Read the tuple name off the functor itself: the image of each injective
// must be a single injective interval or zero.
inline std::optional<TTuple> observed_name(FunctorWord const& w) {
  TTuple t{w.n, std::vector<int>(w.n - 1, 0)};
  for (int j = 1; j <= w.n - 1; ++j) {
    auto intervals = interval_multiset(apply_word(w, injective_rep(w.n, j)));
    if (intervals.empty()) {
      t.t[j - 1] = 0;
    } else if (intervals.size() == 1 && intervals[0].a == 1) {
      t.t[j - 1] = intervals[0].b;
    } else {
      return std::nullopt;
    }
  }
  t.validate();
  return t;
}

// Name of the word's 1-morphism through the monoid, checked against the
// functor evaluation on every injective.  A mismatch would falsify the
// bimodule description of composition functors and is surfaced.
inline TTuple functor_name(FunctorWord const& w) {
  TTuple named = theta_inv(eval_word(underlying_word(w)));
  auto observed = observed_name(w);
  if (!observed || *observed != named) {
    throw std::logic_error("functor_name: functor value disagrees with bimodule name");
  }
  return named;
}

// Does concatenation of words match multiplication of the evaluated maps in
// the same order, or reversed?  Decided by exhaustive comparison of functor
// values against the named maps.
inline PhiOrientation phi_orientation(int n, int bound = 5) {
  if (n > bound) throw std::invalid_argument("phi_orientation: n exceeds bound");
  EnumeratedMonoid monoid(n);
  bool covariant = true, contravariant = true;
  for (auto const& f : monoid.elements()) {
    for (auto const& g : monoid.elements()) {
      FunctorWord w{n, monoid.word_for(f).letters};
      auto const& wg = monoid.word_for(g).letters;
      w.letters.insert(w.letters.end(), wg.begin(), wg.end());
      auto observed = observed_name(w);
      if (!observed) throw std::logic_error("phi_orientation: unreadable functor value");
      CatalanMap cls = theta(*observed);
      if (cls != compose(f, g)) covariant = false;
      if (cls != compose(g, f)) contravariant = false;
    }
  }
  if (covariant) return PhiOrientation::Covariant;
  if (contravariant) return PhiOrientation::Contravariant;
  throw std::logic_error("phi_orientation: neither orientation is consistent");
}

// The orientation constant used by matrix evaluation; determined once at the
// smallest rank with a non-commuting product.
inline PhiOrientation discovered_phi_orientation() {
  static PhiOrientation const orientation = phi_orientation(3);
  return orientation;
}

enum class WordClass { Indecomposable, Zero };

// A composition of the generators is indecomposable or zero, never a proper
// direct sum: the quotient bimodule either vanishes or has a one-dimensional
// endomorphism space.  A larger endomorphism space is surfaced.
inline WordClass indecomposable_or_zero(FunctorWord const& w, std::size_t max_len = 16) {
  if (w.letters.size() > max_len) {
    throw std::invalid_argument("indecomposable_or_zero: word exceeds length bound");
  }
  TTuple name = functor_name(w);
  if (name.is_zero_quotient()) return WordClass::Zero;
  int endo = hom_dim_onemorphisms(name, name);
  if (endo != 1) {
    throw std::logic_error("indecomposable_or_zero: nonzero quotient with endo dim != 1");
  }
  return WordClass::Indecomposable;
}

}  // namespace catalan

#endif  // CATALAN_FUNCTOR_CALC_HPP
