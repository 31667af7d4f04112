#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "abdkit/rational.hpp"

namespace abdkit {

using QVec = std::vector<Rat>;

QVec qvec_add(const QVec& a, const QVec& b);
QVec qvec_sub(const QVec& a, const QVec& b);
QVec qvec_scale(const Rat& c, const QVec& a);
bool qvec_is_zero(const QVec& a);

// Dense matrix over the rationals, row-major.
class QMatrix {
public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QVec row(std::size_t i) const;
  QVec col(std::size_t j) const;

  QMatrix transpose() const;
  QMatrix mul(const QMatrix& o) const;
  QMatrix add(const QMatrix& o) const;
  QMatrix sub(const QMatrix& o) const;
  QMatrix scale(const Rat& c) const;
  QVec apply(const QVec& v) const;  // matrix * column vector

  bool operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const QMatrix& o) const { return !(*this == o); }

  bool is_zero() const;

  struct Rref;
  Rref rref() const;

  std::size_t rank() const;

  // Basis of {x : A x = 0}, each vector of length cols().  The basis comes
  // from the free columns of the RREF, in increasing column order.
  std::vector<QVec> nullspace() const;

  // One solution of A x = b (free variables set to zero), or nullopt.
  std::optional<QVec> solve(const QVec& b) const;

  std::optional<QMatrix> inverse() const;

private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

struct QMatrix::Rref {
  QMatrix mat;                      // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

inline std::size_t QMatrix::rank() const { return rref().pivots.size(); }

}  // namespace abdkit
