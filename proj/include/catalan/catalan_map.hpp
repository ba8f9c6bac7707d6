#ifndef CATALAN_CATALAN_MAP_HPP
#define CATALAN_CATALAN_MAP_HPP

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace catalan {

// Total map f on {1..n} with f(i) <= i and f weakly increasing, stored as
// its value sequence.  These maps form a monoid under composition from
// right to left; the value sequence is the canonical representation and
// doubles as the comparison key everywhere.
class CatalanMap {
 public:
  explicit CatalanMap(std::vector<int> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("CatalanMap: n must be positive");
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] < 1 || values_[i] > static_cast<int>(i) + 1) {
        throw std::invalid_argument("CatalanMap: value exceeds order-decreasing bound");
      }
      if (i > 0 && values_[i] < values_[i - 1]) {
        throw std::invalid_argument("CatalanMap: values not weakly increasing");
      }
    }
  }

  static CatalanMap identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return CatalanMap(std::move(v));
  }

  int n() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return values_[i - 1]; }
  std::vector<int> const& values() const { return values_; }

  bool is_identity() const {
    for (int i = 1; i <= n(); ++i) {
      if ((*this)(i) != i) return false;
    }
    return true;
  }

  friend bool operator==(CatalanMap const& a, CatalanMap const& b) {
    return a.values_ == b.values_;
  }
  friend bool operator!=(CatalanMap const& a, CatalanMap const& b) {
    return !(a == b);
  }
  // Lexicographic on value sequences; fixes enumeration and report order.
  friend bool operator<(CatalanMap const& a, CatalanMap const& b) {
    return a.values_ < b.values_;
  }

 private:
  std::vector<int> values_;
};

// alpha_i: sends i+1 to i and fixes every other point.
inline CatalanMap generator(int n, int i) {
  if (i < 1 || i > n - 1) throw std::out_of_range("generator: index out of range");
  std::vector<int> v(n);
  for (int j = 1; j <= n; ++j) v[j - 1] = (j == i + 1) ? j - 1 : j;
  return CatalanMap(std::move(v));
}

// (f o g)(j) = f(g(j)).
inline CatalanMap compose(CatalanMap const& f, CatalanMap const& g) {
  if (f.n() != g.n()) throw std::invalid_argument("compose: mismatched n");
  std::vector<int> v(f.n());
  for (int j = 1; j <= f.n(); ++j) v[j - 1] = f(g(j));
  return CatalanMap(std::move(v));
}

// Pointwise order: f <= g iff f(i) <= g(i) for all i.
inline bool leq(CatalanMap const& f, CatalanMap const& g) {
  if (f.n() != g.n()) throw std::invalid_argument("leq: mismatched n");
  for (int i = 1; i <= f.n(); ++i) {
    if (f(i) > g(i)) return false;
  }
  return true;
}

// Monotone lattice path from (0,0) to (n,n) staying below the diagonal,
// recorded by the maximal y-coordinate over each x in 1..n-1.
struct LatticePath {
  int n;
  std::vector<int> ymax;  // ymax[i-1] = max y at x = i
};

inline LatticePath to_lattice_path(CatalanMap const& f) {
  LatticePath p;
  p.n = f.n();
  p.ymax.resize(f.n() - 1);
  for (int i = 1; i <= f.n() - 1; ++i) p.ymax[i - 1] = f(i + 1) - 1;
  return p;
}

inline CatalanMap from_lattice_path(LatticePath const& p) {
  if (p.n < 1 || static_cast<int>(p.ymax.size()) != p.n - 1) {
    throw std::invalid_argument("from_lattice_path: wrong length");
  }
  std::vector<int> v(p.n);
  v[0] = 1;
  for (int i = 1; i <= p.n - 1; ++i) {
    if (p.ymax[i - 1] < 0 || p.ymax[i - 1] > i) {
      throw std::invalid_argument("from_lattice_path: path above diagonal");
    }
    if (i > 1 && p.ymax[i - 1] < p.ymax[i - 2]) {
      throw std::invalid_argument("from_lattice_path: path not monotone");
    }
    v[i] = p.ymax[i - 1] + 1;
  }
  return CatalanMap(std::move(v));
}

// Word over the generator alphabet {1..n-1}.
struct Word {
  int n;
  std::vector<int> letters;
};

// Product alpha_{w1} alpha_{w2} ... as a map (right-to-left composition);
// empty word gives the identity.
inline CatalanMap eval_word(Word const& w) {
  CatalanMap acc = CatalanMap::identity(w.n);
  for (int letter : w.letters) {
    if (letter < 1 || letter > w.n - 1) {
      throw std::out_of_range("eval_word: letter out of range");
    }
    acc = compose(acc, generator(w.n, letter));
  }
  return acc;
}

struct IdempotentSpec {
  int n;
  std::set<int> X;  // subset of {1..n-1}
};

// epsilon_X = alpha_{i_1} ... alpha_{i_k} with i_1 < ... < i_k.
inline CatalanMap idempotent(IdempotentSpec const& spec) {
  Word w;
  w.n = spec.n;
  for (int i : spec.X) {
    if (i < 1 || i > spec.n - 1) throw std::out_of_range("idempotent: index out of range");
    w.letters.push_back(i);
  }
  return eval_word(w);
}

}  // namespace catalan

#endif  // CATALAN_CATALAN_MAP_HPP
