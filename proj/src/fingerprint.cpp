#include "abdkit/algebra.hpp"
#include "abdkit/identities.hpp"
#include "abdkit/map_spaces.hpp"

namespace abdkit {

Fingerprint fingerprint(const Algebra& a) {
  Fingerprint f;
  f.dim = a.dim;
  f.dim_derived = derived_subalgebra(a).dim();
  f.dim_ann = annihilator(a).dim();
  f.dim_der = derivation_space(a).dim();
  f.dim_ader = antiderivation_space(a).dim();
  const Algebra plus = plus_algebra(a);
  const Algebra minus = minus_algebra(a);
  f.dim_derived_plus = derived_subalgebra(plus).dim();
  f.dim_ann_plus = annihilator(plus).dim();
  f.dim_derived_minus = derived_subalgebra(minus).dim();
  f.dim_ann_minus = annihilator(minus).dim();
  f.nil3 = check_named(a, "nil3").holds;
  const IdentityReport rep = classify(a);
  f.identity_flags = rep.flags;
  return f;
}

}  // namespace abdkit
