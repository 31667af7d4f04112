#include "abdkit/matrix.hpp"

#include "abdkit/errors.hpp"

namespace abdkit {

QVec qvec_add(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw InternalError("vector size mismatch");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec qvec_sub(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw InternalError("vector size mismatch");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec qvec_scale(const Rat& c, const QVec& a) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool qvec_is_zero(const QVec& a) {
  for (const Rat& x : a)
    if (!x.is_zero()) return false;
  return true;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVec>& rows) {
  if (rows.empty()) return QMatrix();
  QMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw InternalError("ragged row list");
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

QVec QMatrix::row(std::size_t i) const {
  QVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

QVec QMatrix::col(std::size_t j) const {
  QVec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) r[i] = at(i, j);
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QMatrix QMatrix::mul(const QMatrix& o) const {
  if (cols_ != o.rows_) throw InternalError("matrix product shape mismatch");
  QMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

QMatrix QMatrix::add(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw InternalError("matrix sum shape mismatch");
  QMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

QMatrix QMatrix::sub(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw InternalError("matrix difference shape mismatch");
  QMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

QMatrix QMatrix::scale(const Rat& c) const {
  QMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = c * data_[i];
  return r;
}

QVec QMatrix::apply(const QVec& v) const {
  if (v.size() != cols_) throw InternalError("matrix apply shape mismatch");
  QVec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

bool QMatrix::is_zero() const {
  for (const Rat& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

QMatrix::Rref QMatrix::rref() const {
  Rref res{*this, {}};
  QMatrix& m = res.mat;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t piv = r;
    while (piv < rows_ && m.at(piv, c).is_zero()) ++piv;
    if (piv == rows_) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(r, j));
    const Rat inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < cols_; ++j) m.at(r, j) = inv * m.at(r, j);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      const Rat f = m.at(i, c);
      for (std::size_t j = c; j < cols_; ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  return res;
}

std::vector<QVec> QMatrix::nullspace() const {
  Rref rr = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    QVec v(cols_);
    v[f] = Rat(1);
    for (std::size_t r = 0; r < rr.pivots.size(); ++r)
      v[rr.pivots[r]] = -rr.mat.at(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> QMatrix::solve(const QVec& b) const {
  if (b.size() != rows_) throw InternalError("solve rhs size mismatch");
  QMatrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  Rref rr = aug.rref();
  for (std::size_t r = 0; r < rr.pivots.size(); ++r)
    if (rr.pivots[r] == cols_) return std::nullopt;  // row (0..0 | 1)
  QVec x(cols_);
  for (std::size_t r = 0; r < rr.pivots.size(); ++r)
    x[rr.pivots[r]] = rr.mat.at(r, cols_);
  return x;
}

std::optional<QMatrix> QMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = Rat(1);
  }
  Rref rr = aug.rref();
  if (rr.pivots.size() != n || (n > 0 && rr.pivots[n - 1] != n - 1))
    return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.mat.at(i, n + j);
  return inv;
}

}  // namespace abdkit
