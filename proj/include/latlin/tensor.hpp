#pragma once

#include <utility>
#include <vector>

#include "latlin/algebra.hpp"

namespace latlin {

// Dense vector over one algebra instance. Coordinates are 1-based in every
// interface, matching the usual {1,...,n} convention.
class Vector {
 public:
  Vector(Algebra alg, std::vector<Element> entries) : alg_(alg), entries_(std::move(entries)) {
    if (entries_.empty()) throw Error(ErrorCode::DimensionMismatch, "vector needs length >= 1");
    for (const Element& e : entries_) {
      if (!(e.algebra() == alg_)) throw Error(ErrorCode::AlgebraMismatch, "vector entry from a different algebra");
    }
  }

  static Vector filled(const Algebra& alg, int n, const Element& value) {
    if (n < 1) throw Error(ErrorCode::DimensionMismatch, "vector needs length >= 1");
    return Vector(alg, std::vector<Element>(static_cast<std::size_t>(n), value));
  }

  const Algebra& algebra() const { return alg_; }
  int size() const { return static_cast<int>(entries_.size()); }

  const Element& at(int i) const { return entries_.at(static_cast<std::size_t>(i) - 1); }
  void set(int i, const Element& value) {
    if (!(value.algebra() == alg_)) throw Error(ErrorCode::AlgebraMismatch, "vector entry from a different algebra");
    entries_.at(static_cast<std::size_t>(i) - 1) = value;
  }

  const std::vector<Element>& entries() const { return entries_; }

 private:
  Algebra alg_;
  std::vector<Element> entries_;
};

// Dense row-major matrix over one algebra instance, 1-based access.
class Matrix {
 public:
  Matrix(Algebra alg, int rows, int cols, std::vector<Element> row_major)
      : alg_(alg), rows_(rows), cols_(cols), entries_(std::move(row_major)) {
    if (rows_ < 1 || cols_ < 1) throw Error(ErrorCode::DimensionMismatch, "matrix needs m >= 1 and n >= 1");
    if (entries_.size() != static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_)) {
      throw Error(ErrorCode::DimensionMismatch, "matrix storage does not match its dimensions");
    }
    for (const Element& e : entries_) {
      if (!(e.algebra() == alg_)) throw Error(ErrorCode::AlgebraMismatch, "matrix entry from a different algebra");
    }
  }

  static Matrix from_rows(const Algebra& alg, const std::vector<std::vector<Element>>& rows) {
    if (rows.empty() || rows.front().empty()) {
      throw Error(ErrorCode::DimensionMismatch, "matrix needs m >= 1 and n >= 1");
    }
    std::vector<Element> flat;
    flat.reserve(rows.size() * rows.front().size());
    for (const auto& row : rows) {
      if (row.size() != rows.front().size()) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return Matrix(alg, static_cast<int>(rows.size()), static_cast<int>(rows.front().size()), std::move(flat));
  }

  const Algebra& algebra() const { return alg_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Element& at(int i, int j) const {
    return entries_.at(static_cast<std::size_t>(i - 1) * cols_ + (j - 1));
  }

 private:
  Algebra alg_;
  int rows_;
  int cols_;
  std::vector<Element> entries_;
};

namespace detail {

inline void require_same_length(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector lengths " + std::to_string(u.size()) + " and " + std::to_string(v.size()));
  }
  if (!(u.algebra() == v.algebra())) throw Error(ErrorCode::AlgebraMismatch, "vectors from different algebras");
}

}  // namespace detail

inline bool vec_equal(const Vector& u, const Vector& v) {
  detail::require_same_length(u, v);
  for (int i = 1; i <= u.size(); ++i) {
    if (!equal(u.at(i), v.at(i))) return false;
  }
  return true;
}

// Product order: u <= v iff u(i) <= v(i) for all i.
inline bool vec_leq(const Vector& u, const Vector& v) {
  detail::require_same_length(u, v);
  for (int i = 1; i <= u.size(); ++i) {
    if (!leq(u.at(i), v.at(i))) return false;
  }
  return true;
}

inline Vector vec_join(const Vector& u, const Vector& v) {
  detail::require_same_length(u, v);
  std::vector<Element> out;
  out.reserve(u.entries().size());
  for (int i = 1; i <= u.size(); ++i) out.push_back(join(u.at(i), v.at(i)));
  return Vector(u.algebra(), std::move(out));
}

inline Vector vec_meet(const Vector& u, const Vector& v) {
  detail::require_same_length(u, v);
  std::vector<Element> out;
  out.reserve(u.entries().size());
  for (int i = 1; i <= u.size(); ++i) out.push_back(meet(u.at(i), v.at(i)));
  return Vector(u.algebra(), std::move(out));
}

// result(i) = join over k of A(i,k) ⊗ v(k)
inline Vector mat_vec(const Matrix& A, const Vector& v) {
  if (!(A.algebra() == v.algebra())) throw Error(ErrorCode::AlgebraMismatch, "matrix and vector from different algebras");
  if (A.cols() != v.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "matrix is " + std::to_string(A.rows()) + "x" + std::to_string(A.cols()) +
                    " but vector has length " + std::to_string(v.size()));
  }
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(A.rows()));
  for (int i = 1; i <= A.rows(); ++i) {
    Element acc = A.algebra().bottom();
    for (int k = 1; k <= A.cols(); ++k) acc = join(acc, otimes(A.at(i, k), v.at(k)));
    out.push_back(acc);
  }
  return Vector(A.algebra(), std::move(out));
}

inline Matrix mat_add(const Matrix& A, const Matrix& B) {
  if (!(A.algebra() == B.algebra())) throw Error(ErrorCode::AlgebraMismatch, "matrices from different algebras");
  if (A.rows() != B.rows() || A.cols() != B.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix sum needs equal dimensions");
  }
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(A.rows()) * A.cols());
  for (int i = 1; i <= A.rows(); ++i) {
    for (int j = 1; j <= A.cols(); ++j) out.push_back(join(A.at(i, j), B.at(i, j)));
  }
  return Matrix(A.algebra(), A.rows(), A.cols(), std::move(out));
}

inline Matrix mat_mul(const Matrix& A, const Matrix& B) {
  if (!(A.algebra() == B.algebra())) throw Error(ErrorCode::AlgebraMismatch, "matrices from different algebras");
  if (A.cols() != B.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix product needs conformable dimensions");
  }
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(A.rows()) * B.cols());
  for (int i = 1; i <= A.rows(); ++i) {
    for (int j = 1; j <= B.cols(); ++j) {
      Element acc = A.algebra().bottom();
      for (int k = 1; k <= A.cols(); ++k) acc = join(acc, otimes(A.at(i, k), B.at(k, j)));
      out.push_back(acc);
    }
  }
  return Matrix(A.algebra(), A.rows(), B.cols(), std::move(out));
}

}  // namespace latlin
