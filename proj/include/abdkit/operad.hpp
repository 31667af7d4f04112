#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "abdkit/identities.hpp"
#include "abdkit/subspace.hpp"

namespace abdkit {

// The multilinear component of the free binary algebra at arity k: every
// bracketing x every permutation of k distinct variables.  Bracketings are
// enumerated by decreasing left-depth, permutations lexicographically; the
// first monomial at k=3 is (x1*x2)*x3.
struct MultilinearSpace {
  int arity = 0;
  std::vector<Monomial> basis;

  std::size_t dim() const { return basis.size(); }
  std::size_t index_of(const Monomial& m) const;  // InputError when absent

 private:
  friend const MultilinearSpace& monomial_basis(int k);
  std::map<Monomial, std::size_t> index_;
};

// k in {3, 4}; 12 resp. 120 monomials.
const MultilinearSpace& monomial_basis(int k);

// Coordinates of a multilinear identity (arity 3 or 4) in the monomial basis.
QVec identity_vector(const Identity& id);
Identity identity_from_vector(int k, const QVec& v);

// Permutation-closed span of relation vectors inside the multilinear
// component of its arity.
struct RelationSet {
  int arity = 3;
  Subspace span;
};

// Span of the identities' consequences at arity k: identities of lower arity
// are lifted by substituting a product into each variable and by multiplying
// with a fresh variable on either side; the result is closed under variable
// relabeling.  Non-multilinear input is linearized first.
RelationSet identity_span(const std::vector<Identity>& ids, int k);

// Degree-4 component of the operadic ideal generated by arity-3 relations.
RelationSet consequence_space(const RelationSet& r);

struct DualResult {
  RelationSet dual_span;
  std::vector<std::string> generator_identities;
};

// Koszul dual of a binary variety from its arity-3 relation span, computed
// through the tensor-product Jacobi expansion: each first-factor monomial is
// reduced modulo the relations against the echelon-complement basis, and the
// second-factor coefficient identities are collected per complement monomial.
DualResult koszul_dual(const RelationSet& r);

// true iff the variety of `sub` is contained in the variety of `super`,
// i.e. super's relation span is contained in sub's (same arity required).
bool variety_includes(const RelationSet& sub, const RelationSet& super);

// true iff r is self-dual and the images of (ab)c, (ba)c, c(ab), c(ba) are
// linearly independent in the quotient by the dual span.
bool dong_check(const RelationSet& r);

}  // namespace abdkit
