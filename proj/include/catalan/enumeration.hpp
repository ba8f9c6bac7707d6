#ifndef CATALAN_ENUMERATION_HPP
#define CATALAN_ENUMERATION_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "catalan/catalan_map.hpp"

namespace catalan {

inline constexpr int kDefaultEnumerationBound = 12;

// n-th Catalan number (1/(n+1)) * binom(2n, n), exact.
inline std::uint64_t catalan_number(int n) {
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) {
    c = c * 2 * (2 * static_cast<std::uint64_t>(k) + 1) / (k + 2);
  }
  return c;
}

// Generator-closure enumeration: breadth-first right-multiplication by the
// alpha_i starting from the identity, keyed on value sequences.  Each element
// keeps one witnessing word.  Elements are finally sorted lexicographically
// by value sequence so iteration order is reproducible.
class EnumeratedMonoid {
 public:
  explicit EnumeratedMonoid(int n, int bound = kDefaultEnumerationBound) : n_(n) {
    if (n < 1) throw std::invalid_argument("enumerate: n must be positive");
    if (n > bound) throw std::invalid_argument("enumerate: n exceeds configured bound");
    std::map<std::vector<int>, std::vector<int>> seen;  // values -> word
    std::vector<CatalanMap> frontier{CatalanMap::identity(n)};
    seen.emplace(frontier[0].values(), std::vector<int>{});
    while (!frontier.empty()) {
      std::vector<CatalanMap> next;
      for (auto const& x : frontier) {
        for (int i = 1; i <= n - 1; ++i) {
          CatalanMap y = compose(x, generator(n, i));
          auto it = seen.find(y.values());
          if (it == seen.end()) {
            auto w = seen.at(x.values());
            w.push_back(i);
            seen.emplace(y.values(), std::move(w));
            next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
    for (auto const& [values, word] : seen) {
      elements_.push_back(CatalanMap(values));
      words_.push_back(Word{n, word});
    }
  }

  int n() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  std::vector<CatalanMap> const& elements() const { return elements_; }

  std::size_t index_of(CatalanMap const& f) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), f);
    if (it == elements_.end() || *it != f) {
      throw std::invalid_argument("index_of: element not in monoid");
    }
    return static_cast<std::size_t>(it - elements_.begin());
  }

  // A witnessing word for the element (not necessarily the shortest).
  Word const& word_for(CatalanMap const& f) const { return words_[index_of(f)]; }

 private:
  int n_;
  std::vector<CatalanMap> elements_;
  std::vector<Word> words_;
};

inline std::vector<CatalanMap> enumerate(int n, int bound = kDefaultEnumerationBound) {
  return EnumeratedMonoid(n, bound).elements();
}

inline bool is_idempotent(CatalanMap const& f) { return compose(f, f) == f; }

// Two-sided ideal {a f b} as a set of value sequences.
inline std::set<std::vector<int>> two_sided_ideal(CatalanMap const& f,
                                                  std::vector<CatalanMap> const& all) {
  std::set<std::vector<int>> ideal;
  for (auto const& a : all) {
    CatalanMap af = compose(a, f);
    for (auto const& b : all) {
      ideal.insert(compose(af, b).values());
    }
  }
  return ideal;
}

enum class CellClass { IdentityClass, LowerClass };

// Left action of alpha_i on the idempotent epsilon_X: either fixes it or
// moves it strictly down in the pointwise order.  Anything else means the
// monoid structure is broken.
inline CellClass cell_action(int i, IdempotentSpec const& spec) {
  CatalanMap eps = idempotent(spec);
  CatalanMap moved = compose(generator(spec.n, i), eps);
  if (moved == eps) return CellClass::IdentityClass;
  if (leq(moved, eps)) return CellClass::LowerClass;
  throw std::logic_error("cell_action: image neither equal nor below the idempotent");
}

}  // namespace catalan

#endif  // CATALAN_ENUMERATION_HPP
