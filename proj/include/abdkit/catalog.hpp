#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "abdkit/algebra.hpp"
#include "abdkit/matrix.hpp"
#include "abdkit/rational.hpp"

namespace abdkit::catalog {

// Explicit isomorphism onto another catalog entry, as a basis-change matrix
// (rows are the images of the basis vectors in the target's coordinates).
struct IsoWitness {
  std::string target_key;
  QMatrix p;
};

// Built-in algebra together with the properties it is claimed to have; the
// claims are data so that a verification failure pinpoints the discrepancy.
struct Entry {
  std::string key;
  Algebra algebra;
  std::vector<std::pair<std::string, bool>> claimed_flags;
  bool claimed_nilpotent = false;
  std::size_t claimed_class = 0;  // checked only when claimed_nilpotent
  std::size_t claimed_dim_derived = 0;
  std::size_t claimed_dim_ann = 0;
  std::vector<IsoWitness> witnesses;
};

const std::vector<Entry>& entries();
bool has_key(const std::string& key);

// Fixed keys: A2_1, A2_2, A3_1, A3_2, A3_3(1), A3_3(-1), A4_0, A4_1..A4_5,
// A5_0.  The family key "A3_3" requires the parameter overload.
Algebra get(const std::string& key);
Algebra get(const std::string& key, const Rat& param);

// true iff basis_change(a, p) has exactly b's structure constants.
// Throws InputError when dims differ or p is singular.
bool check_iso_witness(const Algebra& a, const Algebra& b, const QMatrix& p);

struct Check {
  std::string entry;
  std::string what;
  bool ok = false;
  std::string detail;
};

struct Report {
  bool ok = true;
  std::vector<Check> checks;
  std::vector<std::string> notes;
};

// Recomputes every claimed flag, nilpotency class, and dimension; checks
// that entries of equal dimension have distinct fingerprints except for the
// declared isomorphic pairs, whose witnesses are re-verified; checks that
// the parameterized family has parameter-independent flags on sample values.
Report verify_all();

}  // namespace abdkit::catalog
