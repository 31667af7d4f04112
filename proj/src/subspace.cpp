#include "abdkit/subspace.hpp"

#include "abdkit/errors.hpp"

namespace abdkit {

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  for (std::size_t i = 0; i < ambient; ++i) {
    QVec e(ambient);
    e[i] = Rat(1);
    s.basis_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<QVec>& gens) {
  Subspace s;
  s.ambient_ = ambient;
  if (gens.empty()) return s;
  for (const QVec& g : gens)
    if (g.size() != ambient) throw InternalError("generator has wrong length");
  QMatrix::Rref rr = QMatrix::from_rows(gens).rref();
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
    s.basis_.push_back(rr.mat.row(r));
    s.pivots_.push_back(rr.pivots[r]);
  }
  return s;
}

QVec Subspace::reduce(QVec v) const {
  if (v.size() != ambient_) throw InternalError("reduce: wrong vector length");
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const Rat c = v[pivots_[r]];
    if (c.is_zero()) continue;
    for (std::size_t j = pivots_[r]; j < ambient_; ++j)
      v[j] = v[j] - c * basis_[r][j];
  }
  return v;
}

bool Subspace::leq(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw InternalError("leq: ambient mismatch");
  for (const QVec& b : basis_)
    if (!o.contains(b)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw InternalError("sum: ambient mismatch");
  std::vector<QVec> gens = basis_;
  gens.insert(gens.end(), o.basis_.begin(), o.basis_.end());
  return span(ambient_, gens);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw InternalError("intersect: ambient mismatch");
  const std::size_t da = dim(), db = o.dim();
  if (da == 0 || db == 0) return zero(ambient_);
  // Columns are coefficients (a, b) with sum_i a_i u_i - sum_j b_j w_j = 0.
  QMatrix m(ambient_, da + db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k < ambient_; ++k) m.at(k, i) = basis_[i][k];
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t k = 0; k < ambient_; ++k) m.at(k, da + j) = -o.basis_[j][k];
  std::vector<QVec> gens;
  for (const QVec& n : m.nullspace()) {
    QVec x(ambient_);
    for (std::size_t i = 0; i < da; ++i)
      if (!n[i].is_zero()) x = qvec_add(x, qvec_scale(n[i], basis_[i]));
    gens.push_back(std::move(x));
  }
  return span(ambient_, gens);
}

std::vector<std::size_t> Subspace::standard_complement() const {
  std::vector<std::size_t> chosen;
  Subspace cur = *this;
  for (std::size_t j = 0; j < ambient_ && cur.dim() < ambient_; ++j) {
    QVec e(ambient_);
    e[j] = Rat(1);
    if (cur.contains(e)) continue;
    chosen.push_back(j);
    std::vector<QVec> gens = cur.basis_;
    gens.push_back(std::move(e));
    cur = span(ambient_, gens);
  }
  return chosen;
}

}  // namespace abdkit
