#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "abdkit/algebra.hpp"
#include "abdkit/rng.hpp"
#include "abdkit/subspace.hpp"

namespace abdkit {

// Solution space of a linear condition on n x n matrices (column convention:
// column j holds phi(e_j)).  The basis is the nullspace of the condition
// system in deterministic echelon order; `flat` is its span inside Q^(n^2)
// under row-major flattening.
struct MapSpace {
  std::size_t n = 0;
  std::vector<QMatrix> basis;
  Subspace flat;

  std::size_t dim() const { return basis.size(); }
  bool contains(const QMatrix& m) const;
};

// phi(x*y) = phi(x)*y + x*phi(y)
MapSpace derivation_space(const Algebra& a);
// phi(x*y) = -(phi(x)*y + x*phi(y))
MapSpace antiderivation_space(const Algebra& a);

// Space of skew-symmetric bilinear maps delta: A x A -> A subject to a
// derivation-type condition in the second argument.  Unknowns are indexed by
// (i < j, k); each basis element is stored as the full table
// delta[i][j][k] flattened to n^3 (with delta[j][i][k] = -delta[i][j][k]).
struct BilinearMapSpace {
  std::size_t n = 0;
  std::vector<std::vector<Rat>> tables;
  Subspace uspan;  // span in the skew-unknown coordinates

  std::size_t dim() const { return tables.size(); }
  // Membership of a flat n^3 table; false when the table is not skew.
  bool contains_table(const std::vector<Rat>& table) const;
};

// delta(x, y*z) = -(delta(x,y)*z + y*delta(x,z))
BilinearMapSpace skew_anti_biderivation_space(const Algebra& a);
// delta(x, y*z) = delta(x,y)*z + y*delta(x,z)
BilinearMapSpace skew_biderivation_space(const Algebra& a);

// Evaluate a flat n^3 bilinear table on two coordinate vectors.
QVec eval_bilinear_table(const std::vector<Rat>& table, std::size_t n,
                         const QVec& x, const QVec& y);

struct InvertibleDerivationResult {
  enum class Verdict { yes, no_certificate, unknown_probably_no };
  Verdict verdict = Verdict::unknown_probably_no;
  QMatrix witness{0, 0};         // invertible derivation, when verdict == yes
  std::size_t zero_index = 0;    // vanishing coordinate, when no_certificate
  bool zero_is_column = false;   // certificate found in columns, not rows
  std::size_t samples_tried = 0;
  std::string reason;
};

// yes(witness): an explicit invertible matrix from the derivation span.
// no_certificate: a coordinate row (or column) vanishes across the whole
// basis, so every derivation is singular.  Otherwise 32 seeded random
// combinations with integer coefficients in [-100,100] are tested;
// all-singular samples give unknown_probably_no.
InvertibleDerivationResult has_invertible_derivation(
    const Algebra& a, std::uint64_t seed = kDefaultSeed);

// true iff phi(I) is contained in I for every basis phi of s.
bool space_preserves_subspace(const MapSpace& s, const Subspace& I);

}  // namespace abdkit
