#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "abdkit/algebra.hpp"

namespace abdkit {

// Binary-tree monomial in postfix encoding: a leaf is a variable index
// (>= 0), an internal node is -1 and consumes the two previous subtrees.
struct Monomial {
  std::vector<int> post;

  static Monomial leaf(int v) {
    Monomial m;
    m.post.push_back(v);
    return m;
  }
  static Monomial node(const Monomial& l, const Monomial& r) {
    Monomial m;
    m.post = l.post;
    m.post.insert(m.post.end(), r.post.begin(), r.post.end());
    m.post.push_back(-1);
    return m;
  }

  std::size_t leaf_count() const { return (post.size() + 1) / 2; }
  std::vector<int> occurrence_profile(int arity) const;
  std::string str() const;  // e.g. "((x1*x2)*x3)"

  bool operator==(const Monomial& o) const { return post == o.post; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
  bool operator<(const Monomial& o) const { return post < o.post; }
};

struct Term {
  Rat coeff;
  Monomial mono;
};

// Linear combination of monomials, asserted to vanish identically.
struct Identity {
  int arity = 0;
  std::vector<Term> terms;

  bool is_multilinear() const;  // every monomial uses each variable once
  std::string str() const;
};

// A named check is a conjunction of identities under one registry name
// (e.g. a commutativity law of arity 2 plus a cyclic law of arity 3).
struct NamedCheck {
  std::string name;
  std::vector<Identity> identities;
};

inline constexpr const char* kRegistryVersion = "abdkit-registry-1";

const std::vector<NamedCheck>& registry();
bool registry_has(const std::string& name);
const NamedCheck& registry_entry(const std::string& name);  // InputError if unknown

struct EvalResult {
  bool holds = false;
  std::vector<std::size_t> witness;  // first failing basis tuple, lex order
};

// Exhaustive check over all dim^arity basis tuples; exact by
// multilinearity.  Throws InputError when the identity is not multilinear.
EvalResult evaluate_multilinear(const Algebra& a, const Identity& id);

// Full polarization over characteristic 0: each variable occurring d times
// is spread over d fresh variables, keeping the multilinear component.
// Requires every term to share one occurrence profile (InputError
// otherwise); already-multilinear input is returned unchanged.
Identity linearize(const Identity& id);

// Linearizes when needed, then evaluates.
EvalResult check_identity(const Algebra& a, const Identity& id);

struct NamedResult {
  bool holds = true;
  int failed_index = -1;  // position of the failing identity in the conjunction
  std::vector<std::size_t> witness;
};
NamedResult check_named(const Algebra& a, const std::string& name);

struct IdentityReport {
  std::string registry_version;
  std::vector<std::pair<std::string, bool>> flags;  // registry order
  std::map<std::string, std::vector<std::size_t>> witnesses;
  bool is_abd = false;
};
IdentityReport classify(const Algebra& a);

// Leaf relabeling: variable v becomes perm[v].
Monomial relabel(const Monomial& m, const std::vector<int>& perm);
Identity relabel(const Identity& id, const std::vector<int>& perm);

// Rewrites every product node as a commutator (uv -> uv - vu, recursively),
// merging equal monomials.
Identity expand_over_commutator(const Identity& id);

// Merge duplicate monomials and drop zero coefficients.
Identity normalize(const Identity& id);

}  // namespace abdkit
