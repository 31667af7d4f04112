#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abdkit/matrix.hpp"
#include "abdkit/subspace.hpp"

namespace abdkit {

// Finite-dimensional algebra given by structure constants over Q:
// e_i * e_j = sum_k c[i][j][k] e_k, stored flat at index (i*dim + j)*dim + k.
struct Algebra {
  std::size_t dim = 0;
  std::string label;
  std::vector<Rat> c;

  Algebra() = default;
  Algebra(std::size_t n, std::string lbl)
      : dim(n), label(std::move(lbl)), c(n * n * n) {}

  Rat& cref(std::size_t i, std::size_t j, std::size_t k) {
    return c[(i * dim + j) * dim + k];
  }
  const Rat& cat(std::size_t i, std::size_t j, std::size_t k) const {
    return c[(i * dim + j) * dim + k];
  }

  bool operator==(const Algebra& o) const { return dim == o.dim && c == o.c; }
  bool operator!=(const Algebra& o) const { return !(*this == o); }
};

// Throws InputError when the table has the wrong size.
void validate(const Algebra& a);

// Bilinear product of coordinate vectors.
QVec multiply(const Algebra& a, const QVec& x, const QVec& y);
QVec basis_product(const Algebra& a, std::size_t i, std::size_t j);

// Symmetrized product x o y = xy + yx.
Algebra plus_algebra(const Algebra& a);
// Commutator [x,y] = xy - yx.
Algebra minus_algebra(const Algebra& a);
// Reassemble a product from its symmetric and antisymmetric parts:
// xy = 1/2([x,y] + x o y).  Throws InputError when the symmetry
// preconditions fail or dims differ.
Algebra depolarize(const Algebra& comm, const Algebra& anticomm);
// x * y = alpha*xy + beta*yx.
Algebra mutate(const Algebra& a, const Rat& alpha, const Rat& beta);

bool is_commutative(const Algebra& a);      // table-level symmetry
bool is_anticommutative(const Algebra& a);  // table-level antisymmetry

// Column j of the returned matrix is the coordinate vector of e_i * e_j
// (resp. e_j * e_i): left and right multiplication operators by e_i.
QMatrix left_mult_matrix(const Algebra& a, std::size_t i);
QMatrix right_mult_matrix(const Algebra& a, std::size_t i);

Subspace derived_subalgebra(const Algebra& a);  // span of all e_i * e_j
Subspace annihilator(const Algebra& a);         // {x : x*y = y*x = 0 for all y}
bool is_perfect(const Algebra& a);              // derived = full space

bool is_ideal(const Algebra& a, const Subspace& s);
// span{ x o y : x in basis(I), y in basis(J) } under the symmetrized product.
Subspace ideal_circ_product(const Algebra& a, const Subspace& I, const Subspace& J);

// Quotient by a (two-sided) ideal, on the basis of standard vectors chosen
// greedily in index order to complement I.  Throws InputError when I is not
// an ideal.
Algebra quotient(const Algebra& a, const Subspace& I);

// Transport the table to the basis f_i = sum_j p[i][j] e_j (rows of p are
// the new basis vectors in old coordinates).  Throws InputError when p is
// singular.  basis_change(basis_change(a,p),q) = basis_change(a, q.mul(p)).
Algebra basis_change(const Algebra& a, const QMatrix& p);

// Descending chain A^1 = A, A^k = sum_{i+j=k} span(A^i * A^j), computed
// until it stabilizes.  `nilpotent` is true when the chain reaches zero;
// `cls` is then the largest m with A^m != 0 (0 for the 0-dim algebra).
struct NilpotencyInfo {
  bool nilpotent = false;
  std::size_t cls = 0;
  std::vector<std::size_t> chain_dims;  // dims of A^1, A^2, ...
};
NilpotencyInfo nilpotency(const Algebra& a);

// True when A^3 = A^2*A + A*A^2 vanishes (covers the zero algebra too).
bool is_two_step_or_less(const Algebra& a);

// Basis-invariant bundle used to certify that two algebras are not
// isomorphic.  Flags follow the named-check registry order.
struct Fingerprint {
  std::size_t dim = 0;
  std::size_t dim_derived = 0, dim_ann = 0, dim_der = 0, dim_ader = 0;
  std::size_t dim_derived_plus = 0, dim_ann_plus = 0;
  std::size_t dim_derived_minus = 0, dim_ann_minus = 0;
  bool nil3 = false;
  std::vector<std::pair<std::string, bool>> identity_flags;

  bool operator==(const Fingerprint& o) const {
    return dim == o.dim && dim_derived == o.dim_derived && dim_ann == o.dim_ann &&
           dim_der == o.dim_der && dim_ader == o.dim_ader &&
           dim_derived_plus == o.dim_derived_plus && dim_ann_plus == o.dim_ann_plus &&
           dim_derived_minus == o.dim_derived_minus &&
           dim_ann_minus == o.dim_ann_minus && nil3 == o.nil3 &&
           identity_flags == o.identity_flags;
  }
  bool operator!=(const Fingerprint& o) const { return !(*this == o); }
};
Fingerprint fingerprint(const Algebra& a);

}  // namespace abdkit
