#include "abdkit/operad.hpp"

#include <algorithm>

#include "abdkit/errors.hpp"

namespace abdkit {

namespace {

Monomial lf(int v) { return Monomial::leaf(v); }
Monomial nd(const Monomial& l, const Monomial& r) { return Monomial::node(l, r); }

std::vector<Monomial> shapes_for(int k) {
  // leaves carry their left-to-right position; bracketings in decreasing
  // left-depth order
  if (k == 3) return {nd(nd(lf(0), lf(1)), lf(2)), nd(lf(0), nd(lf(1), lf(2)))};
  return {nd(nd(nd(lf(0), lf(1)), lf(2)), lf(3)),
          nd(nd(lf(0), nd(lf(1), lf(2))), lf(3)),
          nd(nd(lf(0), lf(1)), nd(lf(2), lf(3))),
          nd(lf(0), nd(nd(lf(1), lf(2)), lf(3))),
          nd(lf(0), nd(lf(1), nd(lf(2), lf(3))))};
}

MultilinearSpace build_space(int k) {
  MultilinearSpace ms;
  ms.arity = k;
  for (const Monomial& shape : shapes_for(k)) {
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    do {
      ms.basis.push_back(relabel(shape, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return ms;
}

// replace every occurrence of the leaf `var` by `sub`
Monomial substitute(const Monomial& m, int var, const Monomial& sub) {
  Monomial out;
  for (int tok : m.post) {
    if (tok == var)
      out.post.insert(out.post.end(), sub.post.begin(), sub.post.end());
    else
      out.post.push_back(tok);
  }
  return out;
}

// all one-step operadic consequences of a multilinear identity of arity m:
// substitute x_i -> x_i * x_{m+1} in each slot, and multiply the whole
// relation by x_{m+1} on either side
std::vector<Identity> lift_one(const Identity& f) {
  const int m = f.arity;
  const Monomial fresh = lf(m);
  std::vector<Identity> out;
  for (int i = 0; i < m; ++i) {
    Identity g;
    g.arity = m + 1;
    for (const Term& t : f.terms)
      g.terms.push_back({t.coeff, substitute(t.mono, i, nd(lf(i), fresh))});
    out.push_back(std::move(g));
  }
  Identity left, right;
  left.arity = right.arity = m + 1;
  for (const Term& t : f.terms) {
    left.terms.push_back({t.coeff, nd(t.mono, fresh)});
    right.terms.push_back({t.coeff, nd(fresh, t.mono)});
  }
  out.push_back(std::move(left));
  out.push_back(std::move(right));
  return out;
}

std::vector<std::vector<int>> all_perms(int k) {
  std::vector<int> p(k);
  for (int i = 0; i < k; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void append_orbit(std::vector<QVec>& vecs, const Identity& id) {
  for (const auto& perm : all_perms(id.arity))
    vecs.push_back(identity_vector(relabel(id, perm)));
}

}  // namespace

std::size_t MultilinearSpace::index_of(const Monomial& m) const {
  const auto it = index_.find(m);
  if (it == index_.end())
    throw InputError("monomial is not in the arity-" + std::to_string(arity) +
                     " multilinear basis: " + m.str());
  return it->second;
}

const MultilinearSpace& monomial_basis(int k) {
  if (k != 3 && k != 4) throw InputError("monomial_basis supports arity 3 and 4");
  static const MultilinearSpace s3 = [] {
    MultilinearSpace ms = build_space(3);
    for (std::size_t i = 0; i < ms.basis.size(); ++i) ms.index_[ms.basis[i]] = i;
    return ms;
  }();
  static const MultilinearSpace s4 = [] {
    MultilinearSpace ms = build_space(4);
    for (std::size_t i = 0; i < ms.basis.size(); ++i) ms.index_[ms.basis[i]] = i;
    return ms;
  }();
  return k == 3 ? s3 : s4;
}

QVec identity_vector(const Identity& id) {
  if (!id.is_multilinear())
    throw InputError("identity_vector requires a multilinear identity");
  const MultilinearSpace& ms = monomial_basis(id.arity);
  QVec v(ms.dim());
  for (const Term& t : id.terms) v[ms.index_of(t.mono)] += t.coeff;
  return v;
}

Identity identity_from_vector(int k, const QVec& v) {
  const MultilinearSpace& ms = monomial_basis(k);
  if (v.size() != ms.dim())
    throw InputError("coordinate vector size does not match the monomial basis");
  Identity id;
  id.arity = k;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) id.terms.push_back({v[i], ms.basis[i]});
  return id;
}

RelationSet identity_span(const std::vector<Identity>& ids, int k) {
  const MultilinearSpace& ms = monomial_basis(k);
  std::vector<QVec> vecs;
  for (const Identity& raw : ids) {
    const Identity lin = linearize(raw);
    if (lin.arity > k || lin.arity < 2)
      throw InputError("identity of arity " + std::to_string(lin.arity) +
                       " cannot contribute relations at arity " +
                       std::to_string(k));
    std::vector<Identity> level = {lin};
    for (int ar = lin.arity; ar < k; ++ar) {
      std::vector<Identity> next;
      for (const Identity& cur : level)
        for (Identity& g : lift_one(cur)) next.push_back(std::move(g));
      level = std::move(next);
    }
    for (const Identity& fin : level) append_orbit(vecs, fin);
  }
  return {k, Subspace::span(ms.dim(), vecs)};
}

RelationSet consequence_space(const RelationSet& r) {
  if (r.arity != 3)
    throw InputError("consequence_space expects arity-3 relations");
  std::vector<QVec> vecs;
  for (const QVec& row : r.span.basis()) {
    const Identity id = identity_from_vector(3, row);
    for (const Identity& g : lift_one(id)) append_orbit(vecs, g);
  }
  return {4, Subspace::span(monomial_basis(4).dim(), vecs)};
}

namespace {

struct JacobiPair {
  Monomial mono;  // same bracketing/permutation in both tensor factors
  int sign;
};

// terms of [[a (x) x, b (x) y], c (x) z] + cyclic, with first and second
// tensor factors sharing the monomial pattern
const std::vector<JacobiPair>& jacobi_pairs() {
  static const std::vector<JacobiPair> pairs = [] {
    auto Lb = [](int a, int b, int c) { return nd(nd(lf(a), lf(b)), lf(c)); };
    auto Rb = [](int a, int b, int c) { return nd(lf(a), nd(lf(b), lf(c))); };
    return std::vector<JacobiPair>{
        {Lb(0, 1, 2), +1}, {Rb(2, 0, 1), -1}, {Lb(1, 0, 2), -1},
        {Rb(2, 1, 0), +1}, {Lb(1, 2, 0), +1}, {Rb(0, 1, 2), -1},
        {Lb(2, 1, 0), -1}, {Rb(0, 2, 1), +1}, {Lb(2, 0, 1), +1},
        {Rb(1, 2, 0), -1}, {Lb(0, 2, 1), -1}, {Rb(1, 0, 2), +1}};
  }();
  return pairs;
}

}  // namespace

DualResult koszul_dual(const RelationSet& r) {
  if (r.arity != 3) throw InputError("koszul_dual expects arity-3 relations");
  const MultilinearSpace& ms = monomial_basis(3);
  const std::size_t dim = ms.dim();

  // first factor of each pair reduced modulo the relations: supported on the
  // echelon-complement monomials
  std::vector<QVec> reduced;
  std::vector<std::size_t> second_index;
  for (const JacobiPair& p : jacobi_pairs()) {
    QVec unit(dim);
    unit[ms.index_of(p.mono)] = Rat(1);
    reduced.push_back(r.span.reduce(unit));
    second_index.push_back(ms.index_of(p.mono));
  }
  std::vector<bool> is_pivot(dim, false);
  for (std::size_t p : r.span.pivots()) is_pivot[p] = true;

  DualResult res;
  std::vector<QVec> gens;
  for (std::size_t cj = 0; cj < dim; ++cj) {
    if (is_pivot[cj]) continue;
    QVec g(dim);
    const auto& pairs = jacobi_pairs();
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const Rat coeff = Rat(pairs[p].sign) * reduced[p][cj];
      if (!coeff.is_zero()) g[second_index[p]] += coeff;
    }
    if (qvec_is_zero(g)) continue;
    gens.push_back(g);
    res.generator_identities.push_back(identity_from_vector(3, g).str());
  }
  std::vector<QVec> closed;
  for (const QVec& g : gens) append_orbit(closed, identity_from_vector(3, g));
  res.dual_span = {3, Subspace::span(dim, closed)};
  return res;
}

bool variety_includes(const RelationSet& sub, const RelationSet& super) {
  if (sub.arity != super.arity)
    throw InputError("variety_includes: relation sets have different arities");
  return super.span.leq(sub.span);
}

bool dong_check(const RelationSet& r) {
  if (r.arity != 3) throw InputError("dong_check expects arity-3 relations");
  const DualResult d = koszul_dual(r);
  if (!(d.dual_span.span == r.span)) return false;
  const MultilinearSpace& ms = monomial_basis(3);
  std::vector<QVec> rows = d.dual_span.span.basis();
  for (const Monomial& m :
       {nd(nd(lf(0), lf(1)), lf(2)), nd(nd(lf(1), lf(0)), lf(2)),
        nd(lf(2), nd(lf(0), lf(1))), nd(lf(2), nd(lf(1), lf(0)))}) {
    QVec unit(ms.dim());
    unit[ms.index_of(m)] = Rat(1);
    rows.push_back(std::move(unit));
  }
  return QMatrix::from_rows(rows).rank() == d.dual_span.span.dim() + 4;
}

}  // namespace abdkit
