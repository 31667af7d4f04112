#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abdkit/algebra.hpp"
#include "abdkit/matrix.hpp"
#include "abdkit/rng.hpp"
#include "abdkit/subspace.hpp"

namespace abdkit {

// Central-extension datum: a commutative base together with a symmetric
// fiber-valued bilinear form.  beta is stored flat at (i*n + j)*m + k for
// i, j < n = base.dim and k < m = fiber_dim.
struct CocycleData {
  Algebra base;
  std::size_t fiber_dim = 0;
  std::vector<Rat> beta;

  const Rat& beta_at(std::size_t i, std::size_t j, std::size_t k) const {
    return beta[(i * base.dim + j) * fiber_dim + k];
  }
};

// Throws InputError when the table shape is wrong.
void validate(const CocycleData& d);

// true iff the base is commutative and Jacobi, beta is symmetric, and the
// cyclic sum beta(x, y z) + beta(y, z x) + beta(z, x y) vanishes on all basis
// triples -- exactly the condition for central_extension to produce a
// commutative algebra satisfying Jacobi.
bool check_jj_cocycle(const CocycleData& d);

// Commutative algebra on base (+) fiber with (x+a)(y+b) = xy + beta(x,y);
// the fiber is central.  Throws PreconditionError when check_jj_cocycle
// fails.  Fiber coordinates are appended after base coordinates.
Algebra central_extension(const CocycleData& d);

// A central extension equipped with a skew fiber-valued bracket on the total
// space.  bracket is stored flat at (i*N + j)*m + k for i, j < N =
// base.dim + fiber_dim and k < m.
struct ExtensionData {
  CocycleData cocycle;
  std::vector<Rat> bracket;

  std::size_t total_dim() const { return cocycle.base.dim + cocycle.fiber_dim; }
  const Rat& bracket_at(std::size_t i, std::size_t j, std::size_t k) const {
    return bracket[(i * total_dim() + j) * cocycle.fiber_dim + k];
  }
};

void validate(const ExtensionData& x);

// Centrality of symmetrized products under the bracket: for every base pair
// (i, j), the total-space vector w = embed(e_i e_j) + beta(e_i, e_j) must
// bracket to zero with every basis vector e_t.
struct EqcResult {
  bool holds = true;
  std::size_t i = 0, j = 0, t = 0;  // witness when violated
};
EqcResult check_eqc(const ExtensionData& x);

// x . y = 1/2(bracket(x,y) + circ(x,y)) on the total space, where circ is
// the central-extension product.  Throws PreconditionError when the cocycle
// check, the bracket skew-symmetry, or check_eqc fails (with the witness
// triple in the message).
Algebra abd_extension(const ExtensionData& x);

// true iff the base is a two-step-nilpotent commutative Jacobi algebra and
// the bracket associator-sum conditions hold: on base triples it equals
// beta(y, x z), and it vanishes whenever an argument lies in the fiber.
// Exactly then the assembled algebra is antiassociative.
bool antiassociative_extension_conditions(const ExtensionData& x);

// Split an algebra with commutator-square fiber F = derived(minus(a)) into
// base = quotient of plus(a) by F, symmetric part beta, and the commutator
// bracket, in the basis [lex standard complement of F, echelon basis of F].
// abd_extension of the result equals basis_change(a, P) exactly; P is
// written to *splitting when given.  Requires classify(a) to show the
// flexibility-sum law and both defining laws (PreconditionError otherwise).
ExtensionData decompose_aflexible(const Algebra& a, QMatrix* splitting = nullptr);

// Pointwise product x * y = f(x) f(y) (f(y) - f(x)) c on a commutative
// Jacobi algebra, with f a functional vanishing on a chosen codimension-1
// ideal containing the derived subalgebra.
struct PointwiseProduct {
  std::size_t dim = 0;
  QVec c;          // central target vector
  QVec f;          // functional coordinates: f(x) = sum_i f[i] x[i]
  QVec generator;  // vector with f(generator) = 1, outside the ideal
  Subspace ideal;  // the chosen codimension-1 ideal
  bool is_pjj = false;     // all three pointwise axioms verified on the grid
  std::string axiom_note;  // grid outcome, including a witness on failure
};

QVec pp_eval(const PointwiseProduct& p, const QVec& x, const QVec& y);

// Pointwise verification of the three axioms over a deterministic grid: all
// vectors with coordinates in {-1,0,1,2} for dim <= 3; standard basis
// vectors, their doubles, and 64 seeded rational vectors otherwise.
//   eq1:  x*y = -(y*x)
//   eq1dot:  x*(y z) + (x*y) z + y (x*z) = 0       (juxtaposition: j's product)
//   eq1ddot: (x y)*z + x*(y*z) + y*(x*z) = 0
struct GridCheck {
  bool eq1 = true, eq1dot = true, eq1ddot = true;
  std::string witness;  // first failing axiom and point, if any
};
GridCheck verify_pjj_axioms(const Algebra& j, const PointwiseProduct& p,
                            std::uint64_t seed = kDefaultSeed);

// Requires j commutative, Jacobi, with nonzero product, not perfect
// (PreconditionError otherwise).  c is the first echelon basis vector of
// Ann(j) intersected with j^2; all three axioms hold.
PointwiseProduct build_pjj(const Algebra& j, std::uint64_t seed = kDefaultSeed);

// Same construction, but when Ann(j) is not contained in j^2 the target c is
// moved to an annihilator vector outside j^2 (which then doubles as the
// generator).  The first two axioms persist; the third may fail, which is
// recorded in is_pjj/axiom_note.
PointwiseProduct build_abd_structure(const Algebra& j,
                                     std::uint64_t seed = kDefaultSeed);

// The three axioms for a *bilinear* skew product given by a flat n^3 table
// over the same space as jj_base, checked on basis triples (sufficient by
// multilinearity).
struct BilinearAxioms {
  bool eq1 = false, eq1dot = false, eq1ddot = false;
  bool all() const { return eq1 && eq1dot && eq1ddot; }
};
BilinearAxioms bilinear_pjj_axioms_on(const Algebra& jj_base,
                                      const std::vector<Rat>& star_table);

// Deterministic family of extension data over five small bases (zero
// products of dims 1-3 and a rank-one commutative base), with beta drawn
// from the cocycle solution space and bracket from the check_eqc solution
// space for that beta.  The first instance of each base is the zero datum.
std::vector<ExtensionData> seeded_extension_instances(
    std::size_t count, std::uint64_t seed = kDefaultSeed);

}  // namespace abdkit
