#ifndef CATALAN_REWRITING_HPP
#define CATALAN_REWRITING_HPP

#include <cstddef>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include "catalan/catalan_map.hpp"
#include "catalan/enumeration.hpp"

namespace catalan {

// One defining relation instance, as a pair of words over {1..n-1}.
struct RelationInstance {
  std::string name;
  std::vector<int> lhs;
  std::vector<int> rhs;
};

// All instances of the three defining schemas at rank n: idempotency of each
// generator, the two equalities of the mixed braid relation, and distant
// commutation.
inline std::vector<RelationInstance> relation_instances(int n) {
  if (n < 2) throw std::invalid_argument("relation_instances: n must be at least 2");
  std::vector<RelationInstance> out;
  for (int i = 1; i <= n - 1; ++i) {
    out.push_back({"idempotent a" + std::to_string(i), {i, i}, {i}});
  }
  for (int i = 1; i <= n - 2; ++i) {
    std::string si = std::to_string(i), sj = std::to_string(i + 1);
    out.push_back({"braid a" + si + " a" + sj + " a" + si + " = a" + sj + " a" + si + " a" + sj,
                   {i, i + 1, i},
                   {i + 1, i, i + 1}});
    out.push_back({"braid a" + si + " a" + sj + " a" + si + " = a" + si + " a" + sj,
                   {i, i + 1, i},
                   {i, i + 1}});
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      out.push_back({"commute a" + std::to_string(i) + " a" + std::to_string(j),
                     {i, j},
                     {j, i}});
    }
  }
  return out;
}

struct RelationCheck {
  RelationInstance instance;
  bool pass;
};

// Evaluate every relation instance in the transformation monoid itself.
inline std::vector<RelationCheck> check_relations(int n) {
  std::vector<RelationCheck> report;
  for (auto const& rel : relation_instances(n)) {
    CatalanMap l = eval_word(Word{n, rel.lhs});
    CatalanMap r = eval_word(Word{n, rel.rhs});
    report.push_back({rel, l == r});
  }
  return report;
}

// ---------------------------------------------------------------------------
// String rewriting / Knuth-Bendix completion over the generator alphabet.

using RWord = std::vector<int>;

// Length-then-lexicographic order.
inline bool shortlex_less(RWord const& a, RWord const& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct Rule {
  RWord lhs;
  RWord rhs;  // shortlex-smaller than lhs
};

struct KBLimits {
  std::size_t max_rules = 10000;
  std::size_t max_word_length = 64;
  std::size_t max_normal_forms = 1u << 20;
};

enum class KBStatus { Complete, Inconclusive };

class RewriteSystem {
 public:
  explicit RewriteSystem(std::vector<Rule> rules) : rules_(std::move(rules)) {}

  std::vector<Rule> const& rules() const { return rules_; }

  // Leftmost rewriting to the unique irreducible descendant (unique once the
  // system is confluent; terminating regardless, since every rule is
  // shortlex-decreasing).
  RWord normal_form(RWord w) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t pos = 0; pos < w.size() && !changed; ++pos) {
        for (auto const& rule : rules_) {
          if (matches_at(w, rule.lhs, pos)) {
            RWord next(w.begin(), w.begin() + pos);
            next.insert(next.end(), rule.rhs.begin(), rule.rhs.end());
            next.insert(next.end(), w.begin() + pos + rule.lhs.size(), w.end());
            w = std::move(next);
            changed = true;
            break;
          }
        }
      }
    }
    return w;
  }

  bool is_irreducible(RWord const& w) const {
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      for (auto const& rule : rules_) {
        if (matches_at(w, rule.lhs, pos)) return false;
      }
    }
    return true;
  }

  static bool matches_at(RWord const& w, RWord const& pat, std::size_t pos) {
    if (pat.empty() || pos + pat.size() > w.size()) return false;
    for (std::size_t k = 0; k < pat.size(); ++k) {
      if (w[pos + k] != pat[k]) return false;
    }
    return true;
  }

 private:
  std::vector<Rule> rules_;
};

// Knuth-Bendix completion oriented by shortlex.  Returns Inconclusive when
// the rule or word-length cap is hit.
inline KBStatus knuth_bendix(std::vector<Rule>& rules, KBLimits const& limits) {
  auto orient = [](RWord a, RWord b) -> Rule {
    if (shortlex_less(a, b)) std::swap(a, b);
    return Rule{std::move(a), std::move(b)};
  };

  std::deque<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules.size(); ++j) pending.emplace_back(i, j);
  }

  auto consider = [&](RWord const& u, RWord const& v) -> bool {
    RewriteSystem rs(rules);
    RWord nu = rs.normal_form(u);
    RWord nv = rs.normal_form(v);
    if (nu == nv) return true;
    if (nu.size() > limits.max_word_length || nv.size() > limits.max_word_length) {
      return false;
    }
    rules.push_back(orient(std::move(nu), std::move(nv)));
    std::size_t added = rules.size() - 1;
    for (std::size_t i = 0; i < rules.size(); ++i) {
      pending.emplace_back(i, added);
      pending.emplace_back(added, i);
    }
    return rules.size() <= limits.max_rules;
  };

  while (!pending.empty()) {
    auto [i, j] = pending.front();
    pending.pop_front();
    RWord const l1 = rules[i].lhs, r1 = rules[i].rhs;
    RWord const l2 = rules[j].lhs, r2 = rules[j].rhs;
    // Suffix of l1 equal to a proper prefix of l2.
    for (std::size_t o = 1; o < l1.size() && o < l2.size(); ++o) {
      bool overlap = true;
      for (std::size_t k = 0; k < o; ++k) {
        if (l1[l1.size() - o + k] != l2[k]) {
          overlap = false;
          break;
        }
      }
      if (!overlap) continue;
      RWord u = r1;
      u.insert(u.end(), l2.begin() + o, l2.end());
      RWord v(l1.begin(), l1.end() - o);
      v.insert(v.end(), r2.begin(), r2.end());
      if (!consider(u, v)) return KBStatus::Inconclusive;
    }
    // l2 contained in l1.
    if (i != j && l2.size() < l1.size()) {
      for (std::size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
        if (!RewriteSystem::matches_at(l1, l2, pos)) continue;
        RWord v(l1.begin(), l1.begin() + pos);
        v.insert(v.end(), r2.begin(), r2.end());
        v.insert(v.end(), l1.begin() + pos + l2.size(), l1.end());
        if (!consider(r1, v)) return KBStatus::Inconclusive;
      }
    }
  }
  return KBStatus::Complete;
}

inline std::vector<Rule> defining_rules(int n) {
  std::vector<Rule> rules;
  for (auto const& rel : relation_instances(n)) {
    RWord a = rel.lhs, b = rel.rhs;
    if (shortlex_less(a, b)) std::swap(a, b);
    rules.push_back(Rule{a, b});
  }
  return rules;
}

// Count irreducible words by breadth-first extension; irreducible words form
// a factor-closed language, so extending by one letter suffices.
inline KBStatus count_normal_forms(RewriteSystem const& rs, int n, KBLimits const& limits,
                                   std::size_t& count) {
  std::vector<RWord> level{{}};
  count = 1;
  while (!level.empty()) {
    std::vector<RWord> next;
    for (auto const& w : level) {
      for (int a = 1; a <= n - 1; ++a) {
        RWord x = w;
        x.push_back(a);
        if (!rs.is_irreducible(x)) continue;
        ++count;
        if (count > limits.max_normal_forms) return KBStatus::Inconclusive;
        if (x.size() > limits.max_word_length) return KBStatus::Inconclusive;
        next.push_back(std::move(x));
      }
    }
    level = std::move(next);
  }
  return KBStatus::Complete;
}

enum class PresentationResult { Match, Mismatch, Inconclusive };

struct PresentationReport {
  PresentationResult result;
  std::size_t presented_size = 0;
  std::size_t monoid_size = 0;
  std::size_t rule_count = 0;
};

// Complete the defining relations and compare the number of irreducible
// words with the size of the concretely enumerated monoid.
inline PresentationReport presentation_completeness(int n, KBLimits const& limits = {}) {
  PresentationReport rep{};
  std::vector<Rule> rules = defining_rules(n);
  if (knuth_bendix(rules, limits) == KBStatus::Inconclusive) {
    rep.result = PresentationResult::Inconclusive;
    return rep;
  }
  rep.rule_count = rules.size();
  RewriteSystem rs(std::move(rules));
  if (count_normal_forms(rs, n, limits, rep.presented_size) == KBStatus::Inconclusive) {
    rep.result = PresentationResult::Inconclusive;
    return rep;
  }
  rep.monoid_size = enumerate(n).size();
  rep.result = rep.presented_size == rep.monoid_size ? PresentationResult::Match
                                                     : PresentationResult::Mismatch;
  return rep;
}

}  // namespace catalan

#endif  // CATALAN_REWRITING_HPP
