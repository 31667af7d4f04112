#include "abdkit/algebra.hpp"

#include "abdkit/errors.hpp"

namespace abdkit {

void validate(const Algebra& a) {
  if (a.c.size() != a.dim * a.dim * a.dim)
    throw InputError("structure constant table has wrong size for dim " +
                     std::to_string(a.dim));
}

QVec multiply(const Algebra& a, const QVec& x, const QVec& y) {
  if (x.size() != a.dim || y.size() != a.dim)
    throw InternalError("multiply: coordinate length mismatch");
  QVec r(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.dim; ++j) {
      if (y[j].is_zero()) continue;
      const Rat f = x[i] * y[j];
      for (std::size_t k = 0; k < a.dim; ++k) {
        const Rat& cc = a.cat(i, j, k);
        if (!cc.is_zero()) r[k] += f * cc;
      }
    }
  }
  return r;
}

QVec basis_product(const Algebra& a, std::size_t i, std::size_t j) {
  QVec r(a.dim);
  for (std::size_t k = 0; k < a.dim; ++k) r[k] = a.cat(i, j, k);
  return r;
}

Algebra plus_algebra(const Algebra& a) { return mutate(a, Rat(1), Rat(1)); }

Algebra minus_algebra(const Algebra& a) { return mutate(a, Rat(1), Rat(-1)); }

Algebra depolarize(const Algebra& comm, const Algebra& anticomm) {
  if (comm.dim != anticomm.dim)
    throw InputError("depolarize: dimension mismatch");
  if (!is_commutative(comm))
    throw InputError("depolarize: symmetric part is not commutative");
  if (!is_anticommutative(anticomm))
    throw InputError("depolarize: antisymmetric part is not anticommutative");
  Algebra r(comm.dim, comm.label);
  const Rat half(1, 2);
  for (std::size_t t = 0; t < r.c.size(); ++t)
    r.c[t] = half * (anticomm.c[t] + comm.c[t]);
  return r;
}

Algebra mutate(const Algebra& a, const Rat& alpha, const Rat& beta) {
  Algebra r(a.dim, a.label);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k)
        r.cref(i, j, k) = alpha * a.cat(i, j, k) + beta * a.cat(j, i, k);
  return r;
}

bool is_commutative(const Algebra& a) {
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i + 1; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k)
        if (a.cat(i, j, k) != a.cat(j, i, k)) return false;
  return true;
}

bool is_anticommutative(const Algebra& a) {
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = i; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k)
        if (a.cat(i, j, k) != -a.cat(j, i, k)) return false;
  return true;
}

QMatrix left_mult_matrix(const Algebra& a, std::size_t i) {
  QMatrix m(a.dim, a.dim);
  for (std::size_t j = 0; j < a.dim; ++j)
    for (std::size_t k = 0; k < a.dim; ++k) m.at(k, j) = a.cat(i, j, k);
  return m;
}

QMatrix right_mult_matrix(const Algebra& a, std::size_t i) {
  QMatrix m(a.dim, a.dim);
  for (std::size_t j = 0; j < a.dim; ++j)
    for (std::size_t k = 0; k < a.dim; ++k) m.at(k, j) = a.cat(j, i, k);
  return m;
}

Subspace derived_subalgebra(const Algebra& a) {
  std::vector<QVec> gens;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) gens.push_back(basis_product(a, i, j));
  return Subspace::span(a.dim, gens);
}

Subspace annihilator(const Algebra& a) {
  // Rows index (j, k, side): sum_i x_i c[i][j][k] = 0 and sum_i x_i c[j][i][k] = 0.
  QMatrix m(2 * a.dim * a.dim, a.dim);
  std::size_t r = 0;
  for (std::size_t j = 0; j < a.dim; ++j)
    for (std::size_t k = 0; k < a.dim; ++k) {
      for (std::size_t i = 0; i < a.dim; ++i) m.at(r, i) = a.cat(i, j, k);
      ++r;
      for (std::size_t i = 0; i < a.dim; ++i) m.at(r, i) = a.cat(j, i, k);
      ++r;
    }
  return Subspace::span(a.dim, m.nullspace());
}

bool is_perfect(const Algebra& a) { return derived_subalgebra(a).dim() == a.dim; }

bool is_ideal(const Algebra& a, const Subspace& s) {
  if (s.ambient() != a.dim) throw InternalError("is_ideal: ambient mismatch");
  for (const QVec& v : s.basis()) {
    for (std::size_t j = 0; j < a.dim; ++j) {
      QVec e(a.dim);
      e[j] = Rat(1);
      if (!s.contains(multiply(a, v, e))) return false;
      if (!s.contains(multiply(a, e, v))) return false;
    }
  }
  return true;
}

Subspace ideal_circ_product(const Algebra& a, const Subspace& I, const Subspace& J) {
  if (I.ambient() != a.dim || J.ambient() != a.dim)
    throw InternalError("ideal_circ_product: ambient mismatch");
  std::vector<QVec> gens;
  for (const QVec& x : I.basis())
    for (const QVec& y : J.basis())
      gens.push_back(qvec_add(multiply(a, x, y), multiply(a, y, x)));
  return Subspace::span(a.dim, gens);
}

Algebra quotient(const Algebra& a, const Subspace& I) {
  if (!is_ideal(a, I)) throw InputError("quotient: subspace is not an ideal");
  const std::vector<std::size_t> comp = I.standard_complement();
  const std::size_t m = comp.size();
  // Invertible matrix whose columns are the complement vectors then the
  // ideal basis; coefficients on the first m columns are quotient coords.
  const std::size_t n = a.dim;
  QMatrix cb(n, n);
  for (std::size_t t = 0; t < m; ++t) cb.at(comp[t], t) = Rat(1);
  for (std::size_t t = 0; t < I.dim(); ++t)
    for (std::size_t k = 0; k < n; ++k) cb.at(k, m + t) = I.basis()[t][k];
  const auto inv = cb.inverse();
  if (!inv) throw InternalError("quotient: complement assembly not invertible");
  Algebra q(m, a.label.empty() ? "" : a.label + "/I");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const QVec coeffs = inv->apply(basis_product(a, comp[i], comp[j]));
      for (std::size_t k = 0; k < m; ++k) q.cref(i, j, k) = coeffs[k];
    }
  return q;
}

Algebra basis_change(const Algebra& a, const QMatrix& p) {
  if (p.rows() != a.dim || p.cols() != a.dim)
    throw InputError("basis_change: matrix shape mismatch");
  const auto pinv = p.inverse();
  if (!pinv) throw InputError("basis_change: singular matrix");
  Algebra r(a.dim, a.label);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      const QVec w = multiply(a, p.row(i), p.row(j));
      // coords of w in the new basis: row vector w * p^{-1}
      for (std::size_t k = 0; k < a.dim; ++k) {
        Rat s;
        for (std::size_t t = 0; t < a.dim; ++t) s += w[t] * pinv->at(t, k);
        r.cref(i, j, k) = s;
      }
    }
  return r;
}

namespace {

Subspace span_product(const Algebra& a, const Subspace& u, const Subspace& v) {
  std::vector<QVec> gens;
  for (const QVec& x : u.basis())
    for (const QVec& y : v.basis()) gens.push_back(multiply(a, x, y));
  return Subspace::span(a.dim, gens);
}

}  // namespace

NilpotencyInfo nilpotency(const Algebra& a) {
  NilpotencyInfo info;
  if (a.dim == 0) {
    info.nilpotent = true;
    info.cls = 0;
    return info;
  }
  const Subspace full = Subspace::full(a.dim);

  // Decide nilpotency with the multiplication-orbit chain B_{t+1} =
  // A*B_t + B_t*A.  A repeat there is a genuine fixed point (the next step
  // applies the same operators to the same space), and B reaching zero is
  // equivalent to nilpotency: any m-factor product, recursing into the
  // larger half, is a word of >= log2(m) left/right multiplications
  // applied to a single factor.  The full power chain A^k used below for
  // the class can plateau temporarily (e.g. a*a=b, b*b=z has dims
  // 3,2,1,1,0), so it cannot decide the negative case by itself.
  Subspace b = full;
  for (;;) {
    const Subspace nb = span_product(a, full, b).sum(span_product(a, b, full));
    if (nb.dim() == 0) {
      info.nilpotent = true;
      break;
    }
    if (nb == b) {
      info.nilpotent = false;
      break;
    }
    b = nb;
  }

  // Power chain A^1 = A, A^k = sum_{i+j=k} A^i A^j for the reported dims
  // and, when nilpotent, the class (largest m with A^m != 0).
  std::vector<Subspace> chain{full};
  info.chain_dims.push_back(a.dim);
  for (;;) {
    const std::size_t k = chain.size() + 1;
    Subspace next = Subspace::zero(a.dim);
    for (std::size_t i = 1; i < k; ++i)
      next = next.sum(span_product(a, chain[i - 1], chain[k - i - 1]));
    if (next.dim() == 0) {
      info.cls = chain.size();
      info.chain_dims.push_back(0);
      return info;
    }
    if (!info.nilpotent && next == chain.back()) {
      info.cls = 0;  // chain reported up to its first repeat
      return info;
    }
    chain.push_back(next);
    info.chain_dims.push_back(next.dim());
  }
}

bool is_two_step_or_less(const Algebra& a) {
  const Subspace d = derived_subalgebra(a);
  const Subspace full = Subspace::full(a.dim);
  return span_product(a, d, full).dim() == 0 && span_product(a, full, d).dim() == 0;
}

}  // namespace abdkit
