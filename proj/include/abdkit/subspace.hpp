#pragma once

#include <cstddef>
#include <vector>

#include "abdkit/matrix.hpp"

namespace abdkit {

// Linear subspace of Q^n in canonical form: the stored basis is the reduced
// row echelon form of any generating set, so equal subspaces compare equal
// member-wise.
class Subspace {
public:
  Subspace() : ambient_(0) {}

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<QVec>& gens);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<QVec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // v minus its projection onto the span, eliminating pivot coordinates.
  QVec reduce(QVec v) const;
  bool contains(const QVec& v) const { return qvec_is_zero(reduce(v)); }
  bool leq(const Subspace& o) const;

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  // Indices j of standard basis vectors e_j chosen greedily in increasing
  // order so that this subspace plus those vectors spans the ambient space.
  std::vector<std::size_t> standard_complement() const;

private:
  std::size_t ambient_;
  std::vector<QVec> basis_;          // RREF rows, no zero rows
  std::vector<std::size_t> pivots_;  // pivot column of each basis row
};

}  // namespace abdkit
