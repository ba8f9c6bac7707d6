#ifndef CATALAN_GROTH_MATRICES_HPP
#define CATALAN_GROTH_MATRICES_HPP

#include <stdexcept>
#include <vector>

#include "catalan/catalan_map.hpp"
#include "catalan/enumeration.hpp"
#include "catalan/matrix.hpp"

namespace catalan {

// Basis of the free abelian group on the n-1 indecomposable classes.  The
// element order is part of the contract: injectives ascending, simples
// DESCENDING, projectives ascending.  The simple-basis transpose identity
// silently breaks if any of these orders is changed.
enum class BasisTag { InjectiveBasis, SimpleBasis, ProjectiveBasis };

// Whether a word multiplies to its element's matrix left-to-right or
// right-to-left.  Discovered by functor_calc::phi_orientation, never assumed.
enum class PhiOrientation { Covariant, Contravariant };

namespace detail {

// Identity with row i zeroed and, for i >= 2, a 1 at (i-1, i); the generator
// action on injective classes.
inline IntMatrix injective_generator(int n, int i) {
  IntMatrix m = IntMatrix::identity(n - 1);
  for (int c = 0; c < n - 1; ++c) m(i - 1, c) = 0;
  if (i >= 2) m(i - 2, i - 1) = 1;
  return m;
}

}  // namespace detail

inline IntMatrix matrix_generator(int n, int i, BasisTag basis) {
  if (i < 1 || i > n - 1) throw std::out_of_range("matrix_generator: index out of range");
  switch (basis) {
    case BasisTag::InjectiveBasis:
      return detail::injective_generator(n, i);
    case BasisTag::SimpleBasis:
      return detail::injective_generator(n, n - i).transpose();
    case BasisTag::ProjectiveBasis:
      if (i != n - 1) return detail::injective_generator(n, i + 1);
      {
        IntMatrix m = IntMatrix::identity(n - 1);
        for (int c = 0; c < n - 1; ++c) m(n - 2, c) = (c == n - 2) ? 0 : -1;
        return m;
      }
  }
  throw std::logic_error("matrix_generator: unreachable");
}

struct WeightVector {
  std::vector<std::int64_t> z;  // z_1..z_{n-2}, all >= 1
};

// Weighted-quiver variant in the injective basis: the (i-1, i) entry becomes
// z_{i-1}.  Unit weights specialize to matrix_generator.
inline IntMatrix matrix_weighted(int n, int i, WeightVector const& z) {
  if (i < 1 || i > n - 1) throw std::out_of_range("matrix_weighted: index out of range");
  if (static_cast<int>(z.z.size()) != n - 2) {
    throw std::invalid_argument("matrix_weighted: weight vector must have n-2 entries");
  }
  for (auto w : z.z) {
    if (w < 1) throw std::invalid_argument("matrix_weighted: weights must be positive");
  }
  IntMatrix m = detail::injective_generator(n, i);
  if (i >= 2) m(i - 2, i - 1) = z.z[i - 2];
  return m;
}

// Matrix of a generator word, multiplied in reading order.
inline IntMatrix word_matrix(int n, std::vector<int> const& letters, BasisTag basis) {
  IntMatrix m = IntMatrix::identity(n - 1);
  for (int i : letters) m = m * matrix_generator(n, i, basis);
  return m;
}

// Matrix of a monoid element: evaluate any witnessing word, in the order the
// discovered orientation dictates.
inline IntMatrix rep_of_element(CatalanMap const& f, BasisTag basis,
                                PhiOrientation orientation,
                                EnumeratedMonoid const& monoid) {
  std::vector<int> letters = monoid.word_for(f).letters;
  if (orientation == PhiOrientation::Contravariant) {
    std::reverse(letters.begin(), letters.end());
  }
  return word_matrix(f.n(), letters, basis);
}

inline IntMatrix rep_of_element(CatalanMap const& f, BasisTag basis,
                                PhiOrientation orientation) {
  return rep_of_element(f, basis, orientation, EnumeratedMonoid(f.n()));
}

// True iff distinct elements receive distinct matrices.
inline bool faithfulness_check(int n, BasisTag basis, PhiOrientation orientation,
                               int bound = 6) {
  if (n > bound) throw std::invalid_argument("faithfulness_check: n exceeds bound");
  EnumeratedMonoid monoid(n);
  std::vector<IntMatrix> seen;
  for (auto const& f : monoid.elements()) {
    IntMatrix m = rep_of_element(f, basis, orientation, monoid);
    for (auto const& other : seen) {
      if (other == m) return false;
    }
    seen.push_back(std::move(m));
  }
  return true;
}

}  // namespace catalan

#endif  // CATALAN_GROTH_MATRICES_HPP
