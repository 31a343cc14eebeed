#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latlin/solver.hpp"

namespace latlin {

namespace detail {

inline std::uint32_t element_key(const Element& e) {
  return e.algebra().kind == AlgebraKind::PowerSet ? e.subset_bits()
                                                   : static_cast<std::uint32_t>(e.chain_index());
}

inline std::vector<std::uint32_t> vector_key(const Vector& v) {
  std::vector<std::uint32_t> key;
  key.reserve(static_cast<std::size_t>(v.size()));
  for (int i = 1; i <= v.size(); ++i) key.push_back(element_key(v.at(i)));
  return key;
}

}  // namespace detail

// Definition-level ground truth: the exact solution set of A v = w obtained
// by testing every vector of the finite carrier power V^n.
inline std::vector<Vector> enumerate_solutions(const Matrix& A, const Vector& w,
                                               std::size_t limit = 1'000'000) {
  if (!(A.algebra() == w.algebra())) throw Error(ErrorCode::AlgebraMismatch, "matrix and vector from different algebras");
  if (A.rows() != w.size()) throw Error(ErrorCode::DimensionMismatch, "matrix rows and w length differ");
  const Algebra& alg = A.algebra();
  const std::size_t carrier = alg.carrier_size();  // throws CarrierNotFinite for dense kinds
  const int n = A.cols();

  std::size_t total = 1;
  for (int j = 0; j < n; ++j) {
    if (total > limit / carrier) {
      throw Error(ErrorCode::EnumerationTooLarge,
                  "carrier^n exceeds the enumeration limit of " + std::to_string(limit));
    }
    total *= carrier;
  }

  std::vector<Vector> solutions;
  std::vector<std::size_t> odo(static_cast<std::size_t>(n), 0);
  Vector v = Vector::filled(alg, n, alg.carrier_at(0));
  for (std::size_t step = 0; step < total; ++step) {
    for (int j = 1; j <= n; ++j) v.set(j, alg.carrier_at(odo[static_cast<std::size_t>(j) - 1]));
    if (verify(A, w, v)) solutions.push_back(v);
    for (int j = n - 1; j >= 0; --j) {
      if (++odo[static_cast<std::size_t>(j)] < carrier) break;
      odo[static_cast<std::size_t>(j)] = 0;
    }
  }
  return solutions;
}

// Per-coordinate probe values whose product separates every endpoint
// configuration a solve region can produce for the system.
struct SampleGrid {
  std::vector<std::vector<Element>> coordinates;

  std::size_t point_count() const {
    std::size_t total = 1;
    for (const auto& c : coordinates) total *= c.size();
    return total;
  }

  void for_each(const Algebra& alg, const std::function<void(const Vector&)>& fn) const {
    const std::size_t n = coordinates.size();
    std::vector<std::size_t> odo(n, 0);
    Vector v = Vector::filled(alg, static_cast<int>(n), alg.bottom());
    const std::size_t total = point_count();
    for (std::size_t step = 0; step < total; ++step) {
      for (std::size_t j = 0; j < n; ++j) v.set(static_cast<int>(j) + 1, coordinates[j][odo[j]]);
      fn(v);
      for (std::size_t j = n; j-- > 0;) {
        if (++odo[j] < coordinates[j].size()) break;
        odo[j] = 0;
      }
    }
  }
};

// Breakpoint grid for a dense carrier: per coordinate the scalar-solution
// endpoints and residual bounds of every row, bottom and top, midpoints of
// consecutive finite breakpoints, and probes just outside the extremes. For
// the finite chains the grid is simply the whole carrier.
inline SampleGrid build_grid(const Matrix& A, const Vector& w) {
  if (!(A.algebra() == w.algebra())) throw Error(ErrorCode::AlgebraMismatch, "matrix and vector from different algebras");
  if (A.rows() != w.size()) throw Error(ErrorCode::DimensionMismatch, "matrix rows and w length differ");
  const Algebra& alg = A.algebra();
  if (!alg.totally_ordered()) {
    throw Error(ErrorCode::NotTotallyOrdered, "grids need a totally ordered carrier");
  }

  SampleGrid grid;
  if (!alg.dense()) {
    std::vector<Element> carrier;
    for (std::size_t idx = 0; idx < alg.carrier_size(); ++idx) carrier.push_back(alg.carrier_at(idx));
    grid.coordinates.assign(static_cast<std::size_t>(A.cols()), carrier);
    return grid;
  }

  auto element_less = [](const Element& x, const Element& y) { return compare(x, y) == Ordering::Less; };
  for (int j = 1; j <= A.cols(); ++j) {
    std::vector<Element> points{alg.bottom(), alg.top()};
    for (int i = 1; i <= A.rows(); ++i) {
      points.push_back(residual(A.at(i, j), w.at(i)));
      ScalarSolution sol = solve_scalar(A.at(i, j), w.at(i));
      if (!sol.is_empty()) {
        points.push_back(sol.lower());
        points.push_back(sol.upper());
      }
    }
    std::sort(points.begin(), points.end(), element_less);
    points.erase(std::unique(points.begin(), points.end(),
                             [](const Element& x, const Element& y) { return equal(x, y); }),
                 points.end());

    std::vector<Rational> finites;
    for (const Element& e : points) {
      if (e.ext() == Element::Ext::Finite) finites.push_back(e.finite_value());
    }
    if (finites.empty()) {
      points.push_back(Element::finite(alg, Rational(0)));
    } else {
      for (std::size_t t = 0; t + 1 < finites.size(); ++t) {
        points.push_back(Element::finite(alg, (finites[t] + finites[t + 1]) / 2));
      }
      points.push_back(Element::finite(alg, finites.front() - 1));
      points.push_back(Element::finite(alg, finites.back() + 1));
    }
    std::sort(points.begin(), points.end(), element_less);
    points.erase(std::unique(points.begin(), points.end(),
                             [](const Element& x, const Element& y) { return equal(x, y); }),
                 points.end());
    grid.coordinates.push_back(std::move(points));
  }
  return grid;
}

struct StructureReport {
  bool pass = true;
  std::string detail;
};

namespace detail {

inline std::string describe(const Vector& v) {
  std::string out = "(";
  for (int i = 1; i <= v.size(); ++i) {
    if (i > 1) out += ",";
    out += format_element(v.at(i));
  }
  return out + ")";
}

}  // namespace detail

// Checks the testable content of the union-of-intervals shape of a solution
// set X over any finite carrier (the power-set instance included):
//   (1) the join x of X is itself a solution,
//   (2) every order interval [u, x] with u in X lies inside X, and
//   (3) X is closed under pairwise joins.
// An empty X passes vacuously.
inline StructureReport check_solution_structure(const std::vector<Vector>& X,
                                                 std::size_t limit = 1'000'000) {
  StructureReport report;
  if (X.empty()) {
    report.detail = "empty solution set, vacuous pass";
    return report;
  }
  const Algebra& alg = X.front().algebra();
  const std::size_t carrier = alg.carrier_size();
  const int n = X.front().size();

  std::set<std::vector<std::uint32_t>> members;
  for (const Vector& v : X) members.insert(detail::vector_key(v));
  auto in_X = [&](const Vector& v) { return members.count(detail::vector_key(v)) > 0; };

  Vector terminal = X.front();
  for (const Vector& v : X) terminal = vec_join(terminal, v);
  if (!in_X(terminal)) {
    report.pass = false;
    report.detail = "terminal point " + detail::describe(terminal) + " is not a solution";
    return report;
  }

  for (const Vector& u : X) {
    // enumerate the carrier points of the order interval [u, terminal]
    std::vector<std::vector<Element>> coords;
    std::size_t total = 1;
    for (int i = 1; i <= n; ++i) {
      std::vector<Element> c;
      for (std::size_t idx = 0; idx < carrier; ++idx) {
        Element e = alg.carrier_at(idx);
        if (leq(u.at(i), e) && leq(e, terminal.at(i))) c.push_back(e);
      }
      if (total > limit / std::max<std::size_t>(c.size(), 1)) {
        throw Error(ErrorCode::EnumerationTooLarge, "order-interval enumeration exceeds the limit");
      }
      total *= c.size();
      coords.push_back(std::move(c));
    }
    SampleGrid box{std::move(coords)};
    bool ok = true;
    Vector witness = u;
    box.for_each(alg, [&](const Vector& z) {
      if (ok && !in_X(z)) {
        ok = false;
        witness = z;
      }
    });
    if (!ok) {
      report.pass = false;
      report.detail = "point " + detail::describe(witness) + " of [" + detail::describe(u) + ", " +
                      detail::describe(terminal) + "] is not a solution";
      return report;
    }
  }

  for (const Vector& u : X) {
    for (const Vector& v : X) {
      Vector uv = vec_join(u, v);
      if (!in_X(uv)) {
        report.pass = false;
        report.detail = "join " + detail::describe(uv) + " of two solutions is not a solution";
        return report;
      }
    }
  }
  report.detail = "terminal " + detail::describe(terminal) + ", " + std::to_string(X.size()) + " solutions";
  return report;
}

}  // namespace latlin
