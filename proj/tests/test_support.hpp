#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "latlin/latlin.hpp"

namespace latlin::test {

inline Element fin(const Algebra& alg, long long num, long long den = 1) {
  return Element::finite(alg, Rational(num, den));
}

// --- deterministic generators ------------------------------------------------

struct Rng {
  std::mt19937 gen;

  explicit Rng(std::uint32_t seed) : gen(seed) {}

  int below(int n) { return static_cast<int>(gen() % static_cast<std::uint32_t>(n)); }
  bool coin() { return (gen() & 1u) != 0; }

  Element pick(const std::vector<Element>& pool) { return pool[static_cast<std::size_t>(below(static_cast<int>(pool.size())))]; }
};

// Mixed pool of finite rationals and both infinities for a dense algebra.
inline std::vector<Element> dense_pool(const Algebra& alg) {
  std::vector<Element> pool{alg.bottom(), alg.top()};
  for (long long num : {-2, -1, 0, 1, 2, 3}) pool.push_back(fin(alg, num));
  pool.push_back(fin(alg, 1, 2));
  pool.push_back(fin(alg, -1, 2));
  return pool;
}

inline std::vector<Element> full_carrier(const Algebra& alg) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < alg.carrier_size(); ++i) out.push_back(alg.carrier_at(i));
  return out;
}

inline std::vector<Element> element_pool(const Algebra& alg) {
  return alg.finite_carrier() ? full_carrier(alg) : dense_pool(alg);
}

inline Vector random_vector(Rng& rng, const Algebra& alg, int n, const std::vector<Element>& pool) {
  std::vector<Element> entries;
  for (int i = 0; i < n; ++i) entries.push_back(rng.pick(pool));
  return Vector(alg, std::move(entries));
}

inline Matrix random_matrix(Rng& rng, const Algebra& alg, int m, int n, const std::vector<Element>& pool) {
  std::vector<Element> entries;
  for (int i = 0; i < m * n; ++i) entries.push_back(rng.pick(pool));
  return Matrix(alg, m, n, std::move(entries));
}

// --- independent oracles -------------------------------------------------------

// Exact solution set of a ⊗ v = w over a finite carrier, by exhaustion.
inline std::vector<Element> scalar_solutions_exhaustive(const Element& a, const Element& w) {
  std::vector<Element> out;
  for (const Element& v : full_carrier(a.algebra())) {
    if (equal(otimes(a, v), w)) out.push_back(v);
  }
  return out;
}

// Largest v with a ⊗ v <= w over a finite carrier, by exhaustion.
inline Element residual_exhaustive(const Element& a, const Element& w) {
  Element best = a.algebra().bottom();
  for (const Element& v : full_carrier(a.algebra())) {
    if (leq(otimes(a, v), w) && leq(best, v)) best = v;
  }
  return best;
}

// The intersection lemma's exclusion set written out from its set-builder
// definition, for right-closed operands.
inline IndexSet lemma_exclusion_reference(const QuasiInterval& q1, const QuasiInterval& q2) {
  IndexSet c;
  const IndexSet& a = q1.lower_excluded;
  const IndexSet& b = q2.lower_excluded;
  for (int i : a) {
    if (!b.count(i) && compare(q1.lower.at(i), q2.lower.at(i)) != Ordering::Less) c.insert(i);
  }
  for (int j : b) {
    if (!a.count(j) && compare(q1.lower.at(j), q2.lower.at(j)) != Ordering::Greater) c.insert(j);
  }
  for (int i : a) {
    if (b.count(i)) c.insert(i);
  }
  return c;
}

// Per-coordinate probe values that separate every membership decision the
// two quasi-intervals can make: their endpoints, the extremes, and for dense
// carriers points straddling each finite endpoint.
inline std::vector<std::vector<Element>> probe_coordinates(const QuasiInterval& q1, const QuasiInterval& q2) {
  const Algebra& alg = q1.algebra();
  std::vector<std::vector<Element>> coords;
  for (int k = 1; k <= q1.dimension(); ++k) {
    std::vector<Element> pts;
    if (alg.finite_carrier()) {
      pts = full_carrier(alg);
    } else {
      pts = {alg.bottom(), alg.top()};
      std::vector<Rational> finites;
      for (const Element* e : {&q1.lower.at(k), &q1.upper.at(k), &q2.lower.at(k), &q2.upper.at(k)}) {
        if (e->ext() == Element::Ext::Finite) finites.push_back(e->finite_value());
      }
      if (finites.empty()) {
        pts.push_back(fin(alg, 0));
      } else {
        std::sort(finites.begin(), finites.end());
        for (const Rational& r : finites) pts.push_back(Element::finite(alg, r));
        for (std::size_t t = 0; t + 1 < finites.size(); ++t) {
          pts.push_back(Element::finite(alg, (finites[t] + finites[t + 1]) / 2));
        }
        pts.push_back(Element::finite(alg, finites.front() - 1));
        pts.push_back(Element::finite(alg, finites.back() + 1));
      }
      std::sort(pts.begin(), pts.end(), [](const Element& x, const Element& y) { return less(x, y); });
      pts.erase(std::unique(pts.begin(), pts.end(), [](const Element& x, const Element& y) { return equal(x, y); }),
                pts.end());
    }
    coords.push_back(std::move(pts));
  }
  return coords;
}

inline void for_each_point(const Algebra& alg, const std::vector<std::vector<Element>>& coords,
                           const std::function<void(const Vector&)>& fn) {
  SampleGrid grid{coords};
  grid.for_each(alg, fn);
}

}  // namespace latlin::test
