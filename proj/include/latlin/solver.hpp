#pragma once

#include <cstdint>
#include <future>
#include <optional>
#include <utility>
#include <vector>

#include "latlin/qinterval.hpp"

namespace latlin {

// Per-row scalar analysis of the system A v = w: for row i and every column
// j, the solution set of A(i,j) ⊗ v = w(i) and the residual bound
// q_j = max{v : A(i,j) ⊗ v <= w(i)}. Columns are split into the non-empty
// left-open and non-empty closed cases.
struct RowAnalysis {
  int row = 0;
  std::vector<ScalarSolution> solutions;  // per column, index j-1
  std::vector<Element> bounds;            // q_j for every column, defined also when empty
  std::vector<int> non_empty;             // columns with a non-empty solution set
  std::vector<int> left_open;             // the non-closed subset of non_empty
  std::vector<int> closed;                // the closed subset of non_empty
};

// One column choice per row; choice[i-1] is the selected column of row i.
using ChoiceFunction = std::vector<int>;

inline RowAnalysis analyze_row(const Matrix& A, int i, const Element& w_i) {
  if (i < 1 || i > A.rows()) throw Error(ErrorCode::DimensionMismatch, "row index out of range");
  if (!A.algebra().totally_ordered()) {
    throw Error(ErrorCode::NotTotallyOrdered, "row analysis needs a totally ordered carrier");
  }
  RowAnalysis ra;
  ra.row = i;
  for (int j = 1; j <= A.cols(); ++j) {
    ScalarSolution sol = solve_scalar(A.at(i, j), w_i);
    ra.solutions.push_back(sol);
    ra.bounds.push_back(residual(A.at(i, j), w_i));
    if (!sol.is_empty()) {
      ra.non_empty.push_back(j);
      (sol.is_left_open() ? ra.left_open : ra.closed).push_back(j);
    }
  }
  return ra;
}

// The row's solution set as a union of quasi-intervals, one per achieving
// column j': that column is pinned to the scalar solution set, every other
// column is bounded above by its residual. All members are right-closed and
// share the upper endpoint vector (q_1, ..., q_n).
inline std::vector<QuasiInterval> row_region(const RowAnalysis& ra, int n) {
  if (static_cast<int>(ra.bounds.size()) != n) {
    throw Error(ErrorCode::DimensionMismatch, "row analysis does not match the dimension");
  }
  std::vector<QuasiInterval> members;
  if (ra.non_empty.empty()) return members;
  const Algebra& alg = ra.bounds.front().algebra();
  Vector upper(alg, ra.bounds);
  for (int jp : ra.non_empty) {
    const ScalarSolution& sol = ra.solutions[static_cast<std::size_t>(jp) - 1];
    Vector lower = Vector::filled(alg, n, alg.bottom());
    lower.set(jp, sol.lower());
    IndexSet lo_exc;
    if (sol.is_left_open()) lo_exc.insert(jp);
    members.emplace_back(std::move(lower), upper, std::move(lo_exc), IndexSet{});
  }
  return members;
}

struct SolveOptions {
  std::uint64_t term_budget = 1'000'000;  // cap on the pre-pruning choice count
  bool canonical = true;                  // set false to keep the raw union
  int threads = 1;
};

struct SolveStats {
  std::uint64_t choice_total = 0;  // product of per-row achieving-column counts
  std::uint64_t explored = 0;      // complete choice functions reached
  std::uint64_t pruned = 0;        // branches cut at an empty partial intersection
};

namespace detail {

struct SearchFrame {
  const std::vector<std::vector<QuasiInterval>>* row_members = nullptr;
  const std::vector<std::vector<int>>* row_columns = nullptr;
  std::vector<QuasiInterval>* leaves = nullptr;
  std::vector<ChoiceFunction>* choices = nullptr;  // may be null
  ChoiceFunction current;
  std::uint64_t explored = 0;
  std::uint64_t pruned = 0;

  void run(std::size_t row, const QuasiInterval& acc) {
    if (row == row_members->size()) {
      leaves->push_back(acc);
      if (choices) choices->push_back(current);
      ++explored;
      return;
    }
    const auto& members = (*row_members)[row];
    for (std::size_t idx = 0; idx < members.size(); ++idx) {
      QuasiInterval next = intersect(acc, members[idx]);
      if (is_empty(next)) {
        ++pruned;
        continue;
      }
      current[row] = (*row_columns)[row][idx];
      run(row + 1, next);
    }
  }
};

}  // namespace detail

// Complete solution space of A v = w as a finite union of quasi-intervals.
// Rows are analyzed independently; any row with no achieving column makes the
// system unsatisfiable. Otherwise the per-row unions are intersected by
// enumerating one column choice per row, pruning branches whose running
// intersection is already empty, and the surviving intersections are
// canonicalized unless options.canonical is false.
//
// choices_out, when given, receives the column choice behind each surviving
// intersection, aligned with the raw (pre-canonicalization) union.
inline SolutionRegion solve(const Matrix& A, const Vector& w,
                            const SolveOptions& options = {},
                            SolveStats* stats_out = nullptr,
                            std::vector<ChoiceFunction>* choices_out = nullptr) {
  if (!(A.algebra() == w.algebra())) throw Error(ErrorCode::AlgebraMismatch, "matrix and vector from different algebras");
  if (A.rows() != w.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "matrix has " + std::to_string(A.rows()) + " rows but w has length " + std::to_string(w.size()));
  }
  if (!A.algebra().totally_ordered()) {
    throw Error(ErrorCode::NotTotallyOrdered, "solving needs a totally ordered carrier");
  }

  SolveStats stats;
  const int n = A.cols();
  std::vector<std::vector<QuasiInterval>> row_members;
  std::vector<std::vector<int>> row_columns;
  stats.choice_total = 1;
  for (int i = 1; i <= A.rows(); ++i) {
    RowAnalysis ra = analyze_row(A, i, w.at(i));
    if (ra.non_empty.empty()) {
      stats.choice_total = 0;
      if (stats_out) *stats_out = stats;
      return SolutionRegion::empty(A.algebra(), n);
    }
    std::uint64_t width = ra.non_empty.size();
    if (stats.choice_total > options.term_budget / width) {
      throw Error(ErrorCode::TermBudgetExceeded,
                  "choice count exceeds the term budget of " + std::to_string(options.term_budget));
    }
    stats.choice_total *= width;
    row_members.push_back(row_region(ra, n));
    row_columns.push_back(ra.non_empty);
  }

  const std::size_t m = row_members.size();
  std::vector<QuasiInterval> leaves;
  if (choices_out) choices_out->clear();
  QuasiInterval everything = QuasiInterval::full(A.algebra(), n);

  const std::size_t first_width = row_members.front().size();
  if (options.threads > 1 && first_width > 1) {
    // Branch on row 1 across workers; concatenating per-branch results in
    // branch order reproduces the sequential leaf order exactly.
    std::vector<std::vector<QuasiInterval>> branch_leaves(first_width);
    std::vector<std::vector<ChoiceFunction>> branch_choices(first_width);
    std::vector<detail::SearchFrame> frames(first_width);
    std::vector<std::future<void>> work;
    for (std::size_t b = 0; b < first_width; ++b) {
      frames[b].row_members = &row_members;
      frames[b].row_columns = &row_columns;
      frames[b].leaves = &branch_leaves[b];
      frames[b].choices = choices_out ? &branch_choices[b] : nullptr;
      frames[b].current.assign(m, 0);
      work.push_back(std::async(std::launch::async, [&, b] {
        QuasiInterval start = intersect(everything, row_members.front()[b]);
        if (is_empty(start)) {
          ++frames[b].pruned;
          return;
        }
        frames[b].current[0] = row_columns.front()[b];
        frames[b].run(1, start);
      }));
    }
    for (auto& f : work) f.get();
    for (std::size_t b = 0; b < first_width; ++b) {
      stats.explored += frames[b].explored;
      stats.pruned += frames[b].pruned;
      leaves.insert(leaves.end(), branch_leaves[b].begin(), branch_leaves[b].end());
      if (choices_out) {
        choices_out->insert(choices_out->end(), branch_choices[b].begin(), branch_choices[b].end());
      }
    }
  } else {
    detail::SearchFrame frame;
    frame.row_members = &row_members;
    frame.row_columns = &row_columns;
    frame.leaves = &leaves;
    frame.choices = choices_out;
    frame.current.assign(m, 0);
    frame.run(0, everything);
    stats.explored = frame.explored;
    stats.pruned = frame.pruned;
  }

  SolutionRegion region{A.algebra(), n, std::move(leaves)};
  if (options.canonical) region = canonicalize(region);
  if (stats_out) *stats_out = stats;
  return region;
}

inline bool verify(const Matrix& A, const Vector& w, const Vector& v) {
  return vec_equal(mat_vec(A, v), w);
}

// Candidate greatest solution: the meet over rows of the residual bound
// vectors. It solves the system iff the solution space is non-empty, in which
// case it is the join of all solutions.
inline std::optional<Vector> greatest_solution(const Matrix& A, const Vector& w) {
  if (!(A.algebra() == w.algebra())) throw Error(ErrorCode::AlgebraMismatch, "matrix and vector from different algebras");
  if (A.rows() != w.size()) throw Error(ErrorCode::DimensionMismatch, "matrix rows and w length differ");
  if (!A.algebra().totally_ordered()) {
    throw Error(ErrorCode::NotTotallyOrdered, "solving needs a totally ordered carrier");
  }
  Vector candidate = Vector::filled(A.algebra(), A.cols(), A.algebra().top());
  for (int i = 1; i <= A.rows(); ++i) {
    RowAnalysis ra = analyze_row(A, i, w.at(i));
    candidate = vec_meet(candidate, Vector(A.algebra(), ra.bounds));
  }
  if (verify(A, w, candidate)) return candidate;
  return std::nullopt;
}

}  // namespace latlin
