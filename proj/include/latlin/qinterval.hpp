#pragma once

#include <set>
#include <utility>
#include <vector>

#include "latlin/tensor.hpp"

namespace latlin {

// 1-based coordinate indices.
using IndexSet = std::set<int>;

// A box in V^n whose coordinate intervals may independently exclude their
// endpoints: coordinate k ranges over [lower(k), upper(k)] with lower(k)
// excluded when k is in lower_excluded and upper(k) excluded when k is in
// upper_excluded.
struct QuasiInterval {
  Vector lower;
  Vector upper;
  IndexSet lower_excluded;
  IndexSet upper_excluded;

  QuasiInterval(Vector lo, Vector hi, IndexSet lo_exc = {}, IndexSet hi_exc = {})
      : lower(std::move(lo)),
        upper(std::move(hi)),
        lower_excluded(std::move(lo_exc)),
        upper_excluded(std::move(hi_exc)) {
    detail::require_same_length(lower, upper);
    for (int k : lower_excluded) {
      if (k < 1 || k > lower.size()) throw Error(ErrorCode::DimensionMismatch, "exclusion index out of range");
    }
    for (int k : upper_excluded) {
      if (k < 1 || k > lower.size()) throw Error(ErrorCode::DimensionMismatch, "exclusion index out of range");
    }
  }

  // The full carrier box [bottom, top]^n.
  static QuasiInterval full(const Algebra& alg, int n) {
    return QuasiInterval(Vector::filled(alg, n, alg.bottom()), Vector::filled(alg, n, alg.top()));
  }

  const Algebra& algebra() const { return lower.algebra(); }
  int dimension() const { return lower.size(); }
};

inline bool contains(const QuasiInterval& q, const Vector& v) {
  detail::require_same_length(q.lower, v);
  for (int k = 1; k <= v.size(); ++k) {
    Ordering lo = compare(q.lower.at(k), v.at(k));
    if (lo == Ordering::Greater) return false;
    if (lo == Ordering::Equal && q.lower_excluded.count(k)) return false;
    Ordering hi = compare(v.at(k), q.upper.at(k));
    if (hi == Ordering::Greater) return false;
    if (hi == Ordering::Equal && q.upper_excluded.count(k)) return false;
  }
  return true;
}

// Emptiness is decided per coordinate. Half-open coordinates with distinct
// endpoints still contain an endpoint; fully open ones are empty exactly when
// no carrier element lies strictly between the endpoints (never the case for
// the dense carriers, an index-gap test for finite chains).
inline bool is_empty(const QuasiInterval& q) {
  if (!q.algebra().totally_ordered()) {
    throw Error(ErrorCode::NotTotallyOrdered, "emptiness test needs a totally ordered carrier");
  }
  for (int k = 1; k <= q.dimension(); ++k) {
    bool lo_exc = q.lower_excluded.count(k) > 0;
    bool hi_exc = q.upper_excluded.count(k) > 0;
    switch (compare(q.lower.at(k), q.upper.at(k))) {
      case Ordering::Greater:
        return true;
      case Ordering::Equal:
        if (lo_exc || hi_exc) return true;
        break;
      case Ordering::Less:
        if (lo_exc && hi_exc && !has_strict_between(q.lower.at(k), q.upper.at(k))) return true;
        break;
    }
  }
  return false;
}

// Intersection of quasi-intervals is again a quasi-interval: endpoints are
// the coordinate-wise join of lowers and meet of uppers, and an endpoint of
// the result is excluded exactly when the side attaining it excludes it.
// For right-closed inputs the computed lower_excluded is
//   {k in A\B : p(k) >= r(k)} ∪ {k in B\A : p(k) <= r(k)} ∪ (A ∩ B);
// the upper side uses the mirrored rule. The result may be empty and is not
// canonicalized.
inline QuasiInterval intersect(const QuasiInterval& a, const QuasiInterval& b) {
  detail::require_same_length(a.lower, b.lower);
  Vector lower = vec_join(a.lower, b.lower);
  Vector upper = vec_meet(a.upper, b.upper);
  IndexSet lo_exc;
  IndexSet hi_exc;
  for (int k = 1; k <= lower.size(); ++k) {
    bool in_a = a.lower_excluded.count(k) > 0;
    bool in_b = b.lower_excluded.count(k) > 0;
    if (in_a || in_b) {
      Ordering pr = compare(a.lower.at(k), b.lower.at(k));
      bool excluded = (in_a && in_b) ||
                      (in_a && pr != Ordering::Less) ||    // p(k) >= r(k)
                      (in_b && pr != Ordering::Greater);   // p(k) <= r(k)
      if (excluded) lo_exc.insert(k);
    }
    bool up_a = a.upper_excluded.count(k) > 0;
    bool up_b = b.upper_excluded.count(k) > 0;
    if (up_a || up_b) {
      Ordering qs = compare(a.upper.at(k), b.upper.at(k));
      bool excluded = (up_a && up_b) ||
                      (up_a && qs != Ordering::Greater) ||  // q(k) <= s(k)
                      (up_b && qs != Ordering::Less);       // q(k) >= s(k)
      if (excluded) hi_exc.insert(k);
    }
  }
  return QuasiInterval(std::move(lower), std::move(upper), std::move(lo_exc), std::move(hi_exc));
}

namespace detail {

struct CoordInterval {
  Element lo;
  Element hi;
  bool lo_exc;
  bool hi_exc;
};

// Over a finite chain, half-open coordinate intervals collapse to closed ones
// by stepping the excluded endpoint inward. Dense coordinates are unchanged.
inline CoordInterval closed_normalize(CoordInterval c) {
  if (c.lo.algebra().chain_like()) {
    if (c.lo_exc) {
      c.lo = chain_successor(c.lo);  // non-empty input guarantees headroom
      c.lo_exc = false;
    }
    if (c.hi_exc) {
      c.hi = chain_predecessor(c.hi);
      c.hi_exc = false;
    }
  }
  return c;
}

inline CoordInterval coord_of(const QuasiInterval& q, int k) {
  return {q.lower.at(k), q.upper.at(k), q.lower_excluded.count(k) > 0, q.upper_excluded.count(k) > 0};
}

}  // namespace detail

// True iff every point of `inner` lies in `outer`, decided coordinate-wise
// from endpoints and exclusion flags.
inline bool subsumes(const QuasiInterval& outer, const QuasiInterval& inner) {
  detail::require_same_length(outer.lower, inner.lower);
  if (is_empty(inner)) return true;
  if (is_empty(outer)) return false;
  for (int k = 1; k <= outer.dimension(); ++k) {
    detail::CoordInterval a = detail::closed_normalize(detail::coord_of(outer, k));
    detail::CoordInterval b = detail::closed_normalize(detail::coord_of(inner, k));
    switch (compare(a.lo, b.lo)) {
      case Ordering::Greater:
        return false;
      case Ordering::Equal:
        if (a.lo_exc && !b.lo_exc) return false;
        break;
      case Ordering::Less:
        break;
    }
    switch (compare(b.hi, a.hi)) {
      case Ordering::Greater:
        return false;
      case Ordering::Equal:
        if (a.hi_exc && !b.hi_exc) return false;
        break;
      case Ordering::Less:
        break;
    }
  }
  return true;
}

// A finite union of quasi-intervals over a fixed algebra and dimension.
struct SolutionRegion {
  Algebra alg;
  int dimension = 0;
  std::vector<QuasiInterval> members;

  static SolutionRegion empty(const Algebra& a, int n) { return {a, n, {}}; }

  bool contains(const Vector& v) const {
    if (v.size() != dimension) {
      throw Error(ErrorCode::DimensionMismatch, "point dimension does not match the region");
    }
    for (const QuasiInterval& q : members) {
      if (latlin::contains(q, v)) return true;
    }
    return false;
  }
};

// Drops empty members, then members whose points all lie in some other
// member. Among members with identical point sets the earliest survives;
// membership is unchanged.
inline SolutionRegion canonicalize(const SolutionRegion& region) {
  std::vector<const QuasiInterval*> live;
  for (const QuasiInterval& q : region.members) {
    if (!is_empty(q)) live.push_back(&q);
  }
  SolutionRegion out{region.alg, region.dimension, {}};
  for (std::size_t i = 0; i < live.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < live.size() && !drop; ++j) {
      if (j == i) continue;
      if (subsumes(*live[j], *live[i]) && (j < i || !subsumes(*live[i], *live[j]))) drop = true;
    }
    if (!drop) out.members.push_back(*live[i]);
  }
  return out;
}

}  // namespace latlin
