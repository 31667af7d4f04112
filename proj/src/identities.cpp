#include "abdkit/identities.hpp"

#include <algorithm>
#include <sstream>

#include "abdkit/errors.hpp"

namespace abdkit {

std::vector<int> Monomial::occurrence_profile(int arity) const {
  std::vector<int> prof(arity, 0);
  for (int t : post) {
    if (t < 0) continue;
    if (t >= arity) throw InputError("monomial variable index out of range");
    ++prof[t];
  }
  return prof;
}

std::string Monomial::str() const {
  std::vector<std::string> stack;
  for (int t : post) {
    if (t >= 0) {
      stack.push_back("x" + std::to_string(t + 1));
    } else {
      const std::string r = stack.back();
      stack.pop_back();
      const std::string l = stack.back();
      stack.pop_back();
      stack.push_back("(" + l + "*" + r + ")");
    }
  }
  return stack.back();
}

bool Identity::is_multilinear() const {
  for (const Term& t : terms) {
    const std::vector<int> prof = t.mono.occurrence_profile(arity);
    for (int c : prof)
      if (c != 1) return false;
  }
  return true;
}

std::string Identity::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms) {
    const Rat c = t.coeff;
    if (first) {
      if (c == Rat(-1))
        os << "-";
      else if (c != Rat(1))
        os << c.str() << "*";
      first = false;
    } else if (c.sign() >= 0) {
      os << " + ";
      if (c != Rat(1)) os << c.str() << "*";
    } else {
      os << " - ";
      if (c != Rat(-1)) os << (-c).str() << "*";
    }
    os << t.mono.str();
  }
  return os.str();
}

Identity normalize(const Identity& id) {
  std::map<Monomial, Rat> acc;
  for (const Term& t : id.terms) acc[t.mono] += t.coeff;
  Identity r;
  r.arity = id.arity;
  for (const auto& [m, c] : acc)
    if (!c.is_zero()) r.terms.push_back({c, m});
  return r;
}

Monomial relabel(const Monomial& m, const std::vector<int>& perm) {
  Monomial r = m;
  for (int& t : r.post)
    if (t >= 0) t = perm[t];
  return r;
}

Identity relabel(const Identity& id, const std::vector<int>& perm) {
  Identity r;
  r.arity = id.arity;
  for (const Term& t : id.terms) r.terms.push_back({t.coeff, relabel(t.mono, perm)});
  return r;
}

Identity expand_over_commutator(const Identity& id) {
  Identity r;
  r.arity = id.arity;
  for (const Term& t : id.terms) {
    // expansion of the monomial: list of signed monomials
    std::vector<std::vector<Term>> stack;
    for (int tok : t.mono.post) {
      if (tok >= 0) {
        stack.push_back({{Rat(1), Monomial::leaf(tok)}});
      } else {
        const std::vector<Term> right = stack.back();
        stack.pop_back();
        const std::vector<Term> left = stack.back();
        stack.pop_back();
        std::vector<Term> combined;
        for (const Term& l : left)
          for (const Term& rr : right) {
            combined.push_back({l.coeff * rr.coeff, Monomial::node(l.mono, rr.mono)});
            combined.push_back({-(l.coeff * rr.coeff), Monomial::node(rr.mono, l.mono)});
          }
        stack.push_back(std::move(combined));
      }
    }
    for (const Term& e : stack.back()) r.terms.push_back({t.coeff * e.coeff, e.mono});
  }
  return normalize(r);
}

namespace {

QVec eval_monomial(const Algebra& a, const Monomial& m,
                   const std::vector<std::size_t>& tuple) {
  std::vector<QVec> stack;
  for (int tok : m.post) {
    if (tok >= 0) {
      QVec e(a.dim);
      e[tuple[tok]] = Rat(1);
      stack.push_back(std::move(e));
    } else {
      QVec r = std::move(stack.back());
      stack.pop_back();
      QVec l = std::move(stack.back());
      stack.pop_back();
      stack.push_back(multiply(a, l, r));
    }
  }
  return stack.back();
}

}  // namespace

EvalResult evaluate_multilinear(const Algebra& a, const Identity& id) {
  if (!id.is_multilinear())
    throw InputError("identity is not multilinear; linearize it first");
  EvalResult res;
  res.holds = true;
  if (a.dim == 0 || id.terms.empty()) return res;
  const std::size_t k = static_cast<std::size_t>(id.arity);
  std::vector<std::size_t> tuple(k, 0);
  for (;;) {
    QVec total(a.dim);
    for (const Term& t : id.terms) {
      const QVec v = eval_monomial(a, t.mono, tuple);
      for (std::size_t i = 0; i < a.dim; ++i)
        if (!v[i].is_zero()) total[i] += t.coeff * v[i];
    }
    if (!qvec_is_zero(total)) {
      res.holds = false;
      res.witness = tuple;
      return res;
    }
    // advance tuple lexicographically
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++tuple[pos] < a.dim) break;
      tuple[pos] = 0;
      if (pos == 0) return res;
    }
    if (k == 0) return res;
  }
}

Identity linearize(const Identity& id) {
  if (id.terms.empty() || id.is_multilinear()) return id;
  const std::vector<int> prof = id.terms[0].mono.occurrence_profile(id.arity);
  for (const Term& t : id.terms)
    if (t.mono.occurrence_profile(id.arity) != prof)
      throw InputError(
          "cannot linearize: terms have different variable occurrence profiles");
  // variable v occupies the fresh-label block [offset[v], offset[v]+prof[v])
  std::vector<int> offset(id.arity + 1, 0);
  for (int v = 0; v < id.arity; ++v) offset[v + 1] = offset[v] + prof[v];
  const int new_arity = offset[id.arity];

  Identity out;
  out.arity = new_arity;
  for (const Term& t : id.terms) {
    // positions of each variable's leaves in postfix order
    std::vector<std::vector<std::size_t>> slots(id.arity);
    for (std::size_t p = 0; p < t.mono.post.size(); ++p)
      if (t.mono.post[p] >= 0) slots[t.mono.post[p]].push_back(p);
    // one label assignment per combination of per-variable permutations
    std::vector<std::vector<int>> perms(id.arity);  // current permutation per var
    for (int v = 0; v < id.arity; ++v) {
      perms[v].resize(prof[v]);
      for (int d = 0; d < prof[v]; ++d) perms[v][d] = d;
    }
    for (;;) {
      Monomial m = t.mono;
      for (int v = 0; v < id.arity; ++v)
        for (int d = 0; d < prof[v]; ++d)
          m.post[slots[v][d]] = offset[v] + perms[v][d];
      out.terms.push_back({t.coeff, m});
      // advance: next_permutation odometer across variables
      int v = 0;
      while (v < id.arity && !std::next_permutation(perms[v].begin(), perms[v].end()))
        ++v;
      if (v == id.arity) break;
    }
  }
  return normalize(out);
}

EvalResult check_identity(const Algebra& a, const Identity& id) {
  return id.is_multilinear() ? evaluate_multilinear(a, id)
                             : evaluate_multilinear(a, linearize(id));
}

NamedResult check_named(const Algebra& a, const std::string& name) {
  const NamedCheck& nc = registry_entry(name);
  NamedResult res;
  for (std::size_t i = 0; i < nc.identities.size(); ++i) {
    const EvalResult er = evaluate_multilinear(a, nc.identities[i]);
    if (!er.holds) {
      res.holds = false;
      res.failed_index = static_cast<int>(i);
      res.witness = er.witness;
      return res;
    }
  }
  return res;
}

IdentityReport classify(const Algebra& a) {
  IdentityReport rep;
  rep.registry_version = kRegistryVersion;
  for (const NamedCheck& nc : registry()) {
    const NamedResult nr = check_named(a, nc.name);
    rep.flags.emplace_back(nc.name, nr.holds);
    if (!nr.holds) rep.witnesses[nc.name] = nr.witness;
    if (nc.name == "abd") rep.is_abd = nr.holds;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

namespace {

Monomial lf(int v) { return Monomial::leaf(v); }
Monomial nd(const Monomial& l, const Monomial& r) { return Monomial::node(l, r); }
// (a*b)*c and a*(b*c)
Monomial Lb(int a, int b, int c) { return nd(nd(lf(a), lf(b)), lf(c)); }
Monomial Rb(int a, int b, int c) { return nd(lf(a), nd(lf(b), lf(c))); }

Identity ident(int arity, std::vector<Term> terms) {
  Identity id;
  id.arity = arity;
  id.terms = std::move(terms);
  return id;
}

Term P(const Monomial& m) { return {Rat(1), m}; }
Term N(const Monomial& m) { return {Rat(-1), m}; }

std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool is_even_permutation(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0;
}

std::vector<NamedCheck> build_registry() {
  std::vector<NamedCheck> reg;
  auto add = [&reg](const std::string& name, std::vector<Identity> ids) {
    reg.push_back({name, std::move(ids)});
  };

  // x*(y o z) + ((x*y) o z + y o (x*z)) = 0, expanded over the base product
  const Identity def1 = ident(3, {P(Rb(0, 1, 2)), P(Rb(0, 2, 1)), P(Lb(0, 1, 2)),
                                  P(Rb(2, 0, 1)), P(Rb(1, 0, 2)), P(Lb(0, 2, 1))});
  // (y o z)*x + ((y*x) o z + y o (z*x)) = 0
  const Identity def2 = ident(3, {P(Lb(1, 2, 0)), P(Lb(2, 1, 0)), P(Lb(1, 0, 2)),
                                  P(Rb(2, 1, 0)), P(Rb(1, 2, 0)), P(Lb(2, 0, 1))});
  add("def1", {def1});
  add("def2", {def2});
  // the same conditions written through L_x o-derivation form; term-wise
  // they coincide with def1/def2 and the flags must agree
  add("def2dot", {ident(3, {P(Lb(0, 1, 2)), P(Rb(0, 1, 2)), P(Lb(0, 2, 1)),
                            P(Rb(0, 2, 1)), P(Rb(2, 0, 1)), P(Rb(1, 0, 2))})});
  add("def3dot", {ident(3, {P(Lb(1, 2, 0)), P(Rb(1, 2, 0)), P(Lb(2, 1, 0)),
                            P(Rb(2, 1, 0)), P(Lb(1, 0, 2)), P(Lb(2, 0, 1))})});
  const Identity jacobi =
      ident(3, {P(Rb(0, 1, 2)), P(Rb(1, 2, 0)), P(Rb(2, 0, 1))});
  add("jacobi", {jacobi});
  const Identity commutative = ident(2, {P(nd(lf(0), lf(1))), N(nd(lf(1), lf(0)))});
  add("commutative", {commutative});
  add("anticommutative", {ident(2, {P(nd(lf(0), lf(1))), P(nd(lf(1), lf(0)))})});
  add("jj", {commutative, jacobi});
  {
    // linearized third-power antiassociativity: all twelve arity-3 monomials
    std::vector<Term> all12;
    for (const auto& p : permutations(3)) all12.push_back(P(Lb(p[0], p[1], p[2])));
    for (const auto& p : permutations(3)) all12.push_back(P(Rb(p[0], p[1], p[2])));
    add("jj_admissible", {ident(3, all12)});
  }
  {
    std::vector<Term> left6, right6;
    for (const auto& p : permutations(3)) {
      left6.push_back(P(Lb(p[0], p[1], p[2])));
      right6.push_back(P(Rb(p[0], p[1], p[2])));
    }
    add("nil3", {ident(3, left6), ident(3, right6)});
  }
  // Anticommutator of multiplication operators: {L_y, L_z} = {R_y, R_z}
  // on x, i.e. y*(z*x) + z*(y*x) = (x*z)*y + (x*y)*z.
  add("x3abd", {ident(3, {P(Rb(1, 2, 0)), P(Rb(2, 1, 0)), N(Lb(0, 2, 1)),
                          N(Lb(0, 1, 2))})});
  // [x, y o z] + [x,y] o z + y o [x,z] = 0, expanded
  add("eq2", {ident(3, {P(Rb(0, 1, 2)), P(Rb(0, 2, 1)), N(Lb(1, 2, 0)),
                        N(Lb(2, 1, 0)), P(Lb(0, 1, 2)), P(Rb(2, 0, 1)),
                        N(Lb(1, 0, 2)), N(Rb(2, 1, 0)), P(Rb(1, 0, 2)),
                        N(Rb(1, 2, 0)), P(Lb(0, 2, 1)), N(Lb(2, 0, 1))})});
  // x o (y o z) - y o (z o x)... the companion commutator-form condition;
  // term-wise equal to eq2 after expansion
  add("eq4", {ident(3, {P(Lb(0, 1, 2)), P(Rb(0, 1, 2)), P(Lb(0, 2, 1)),
                        P(Rb(0, 2, 1)), N(Lb(1, 2, 0)), N(Rb(1, 2, 0)),
                        N(Lb(2, 1, 0)), N(Rb(2, 1, 0)), N(Lb(2, 0, 1)),
                        P(Rb(2, 0, 1)), N(Lb(1, 0, 2)), P(Rb(1, 0, 2))})});
  // left/right anti-Leibniz: x*(y*z) = -(x*y)*z - y*(x*z) and mirror
  const Identity eq9 = ident(3, {P(Rb(0, 1, 2)), P(Lb(0, 1, 2)), P(Rb(1, 0, 2))});
  const Identity eq10 = ident(3, {P(Lb(1, 2, 0)), P(Lb(1, 0, 2)), P(Rb(1, 2, 0))});
  add("eq9", {eq9});
  add("eq10", {eq10});
  add("symmetric_anti_leibniz", {eq9, eq10});
  // left/right Leibniz: x*(y*z) = (x*y)*z + y*(x*z) and mirror
  const Identity leibniz_left =
      ident(3, {P(Rb(0, 1, 2)), N(Lb(0, 1, 2)), N(Rb(1, 0, 2))});
  const Identity leibniz_right =
      ident(3, {P(Lb(1, 2, 0)), N(Lb(1, 0, 2)), N(Rb(1, 2, 0))});
  add("leibniz_left", {leibniz_left});
  add("leibniz_right", {leibniz_right});
  add("symmetric_leibniz", {leibniz_left, leibniz_right});
  const Identity al = ident(3, {P(Rb(0, 1, 2)), P(Rb(1, 0, 2))});
  const Identity ar = ident(3, {P(Lb(0, 1, 2)), P(Lb(0, 2, 1))});
  add("al_bracket", {al});
  add("ar_bracket", {ar});
  add("alr", {al, ar});
  add("flexible", {ident(3, {P(Lb(0, 1, 2)), N(Rb(0, 1, 2)), P(Lb(2, 1, 0)),
                             N(Rb(2, 1, 0))})});
  add("antiflexible", {ident(3, {P(Lb(0, 1, 2)), N(Rb(0, 1, 2)), N(Lb(2, 1, 0)),
                                 P(Rb(2, 1, 0))})});
  add("aflexible", {ident(3, {P(Lb(0, 1, 2)), P(Rb(0, 1, 2)), N(Lb(2, 1, 0)),
                              N(Rb(2, 1, 0))})});
  add("associative", {ident(3, {P(Lb(0, 1, 2)), N(Rb(0, 1, 2))})});
  add("antiassociative", {ident(3, {P(Lb(0, 1, 2)), P(Rb(0, 1, 2))})});
  // x*(y*z) = (z*y)*x
  add("aflabd", {ident(3, {P(Rb(0, 1, 2)), N(Lb(2, 1, 0))})});
  // (z*x)*y = y*(x*z)
  add("int_identity", {ident(3, {P(Lb(2, 0, 1)), N(Rb(1, 0, 2))})});
  // (x*y)*(z*t) = -(x*z)*(y*t)
  add("anti_medial", {ident(4, {P(nd(nd(lf(0), lf(1)), nd(lf(2), lf(3)))),
                                P(nd(nd(lf(0), lf(2)), nd(lf(1), lf(3))))})});
  add("s3", {ident(3, {P(Lb(0, 1, 2)), P(Lb(1, 2, 0)), P(Lb(2, 0, 1))})});
  {
    // left-normed products over even permutations of four variables
    std::vector<Term> terms;
    for (const auto& p : permutations(4)) {
      if (!is_even_permutation(p)) continue;
      terms.push_back(P(nd(nd(nd(lf(p[0]), lf(p[1])), lf(p[2])), lf(p[3]))));
    }
    add("s4", {ident(4, std::move(terms))});
  }
  add("pre_jj_left", {ident(3, {P(Lb(0, 1, 2)), P(Rb(0, 1, 2)), P(Lb(1, 0, 2)),
                                P(Rb(1, 0, 2))})});
  add("pre_jj_right", {ident(3, {P(Lb(0, 1, 2)), P(Rb(0, 1, 2)), P(Lb(0, 2, 1)),
                                 P(Rb(0, 2, 1))})});
  // x*(y*z) = -z*(y*x) and (x*y)*z = -(z*y)*x
  add("remark2", {ident(3, {P(Rb(0, 1, 2)), P(Rb(2, 1, 0))})});
  add("remark3", {ident(3, {P(Lb(0, 1, 2)), P(Lb(2, 1, 0))})});
  add("abd", {def1, def2});
  return reg;
}

}  // namespace

const std::vector<NamedCheck>& registry() {
  static const std::vector<NamedCheck> reg = build_registry();
  return reg;
}

bool registry_has(const std::string& name) {
  for (const NamedCheck& nc : registry())
    if (nc.name == name) return true;
  return false;
}

const NamedCheck& registry_entry(const std::string& name) {
  for (const NamedCheck& nc : registry())
    if (nc.name == name) return nc;
  throw InputError("unknown named identity: '" + name + "'");
}

}  // namespace abdkit
