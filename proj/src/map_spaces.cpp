#include "abdkit/map_spaces.hpp"

#include <sstream>
#include <utility>

#include "abdkit/errors.hpp"

namespace abdkit {

namespace {

QVec flatten(const QMatrix& m) {
  QVec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

QMatrix unflatten(const QVec& v, std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = v[i * n + j];
  return m;
}

// sign = +1: phi(xy) - phi(x)y - x phi(y) = 0  (derivation)
// sign = -1: phi(xy) + phi(x)y + x phi(y) = 0  (antiderivation)
MapSpace linear_map_space(const Algebra& a, int sign, const char* what) {
  const std::size_t n = a.dim;
  MapSpace sp;
  sp.n = n;
  if (n == 0) {
    sp.flat = Subspace::zero(0);
    return sp;
  }
  const Rat s(-sign);
  QMatrix sys(n * n * n, n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t row = (p * n + q) * n + k;
        for (std::size_t m = 0; m < n; ++m) {
          sys.at(row, k * n + m) += a.cat(p, q, m);
          sys.at(row, m * n + p) += s * a.cat(m, q, k);
          sys.at(row, m * n + q) += s * a.cat(p, m, k);
        }
      }
  const std::vector<QVec> null = sys.nullspace();
  for (const QVec& v : null) sp.basis.push_back(unflatten(v, n));
  sp.flat = Subspace::span(n * n, null);

  // re-verify the defining condition exactly on all basis pairs
  for (const QMatrix& phi : sp.basis)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        QVec ep(n), eq(n);
        ep[p] = Rat(1);
        eq[q] = Rat(1);
        const QVec lhs = phi.apply(basis_product(a, p, q));
        QVec rhs = qvec_add(multiply(a, phi.apply(ep), eq),
                            multiply(a, ep, phi.apply(eq)));
        if (sign < 0) rhs = qvec_scale(Rat(-1), rhs);
        if (lhs != rhs)
          throw InternalError(std::string(what) +
                              ": solved basis element fails its condition");
      }
  return sp;
}

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  // lexicographic rank of (i, j) with i < j
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::vector<Rat> unknowns_to_table(const QVec& u, std::size_t n) {
  std::vector<Rat> t(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rat val = u[pair_index(i, j, n) * n + k];
        t[(i * n + j) * n + k] = val;
        t[(j * n + i) * n + k] = -val;
      }
  return t;
}

// sign = +1: delta(x, yz) - delta(x,y)z - y delta(x,z) = 0  (biderivation)
// sign = -1: delta(x, yz) + delta(x,y)z + y delta(x,z) = 0  (anti)
BilinearMapSpace skew_bilinear_space(const Algebra& a, int sign,
                                     const char* what) {
  const std::size_t n = a.dim;
  BilinearMapSpace sp;
  sp.n = n;
  const std::size_t nunk = n * (n - 1) / 2 * n;
  if (n == 0 || nunk == 0) {
    sp.uspan = Subspace::zero(nunk);
    return sp;
  }
  const Rat s(-sign);
  // signed unknown block of delta(e_x, e_y): (pair base, sign), or npos
  auto delta_block = [n](std::size_t x, std::size_t y)
      -> std::pair<std::size_t, int> {
    if (x < y) return {pair_index(x, y, n) * n, +1};
    if (x > y) return {pair_index(y, x, n) * n, -1};
    return {static_cast<std::size_t>(-1), 0};
  };
  QMatrix sys(n * n * n * n, nunk);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
          const std::size_t row = ((p * n + q) * n + r) * n + k;
          // delta(e_p, e_q e_r)[k]
          for (std::size_t m = 0; m < n; ++m) {
            if (a.cat(q, r, m).is_zero()) continue;
            const auto [base, sg] = delta_block(p, m);
            if (sg != 0) sys.at(row, base + k) += Rat(sg) * a.cat(q, r, m);
          }
          for (std::size_t t = 0; t < n; ++t) {
            // (delta(e_p, e_q) e_r)[k] via component t
            {
              const auto [base, sg] = delta_block(p, q);
              if (sg != 0) sys.at(row, base + t) += Rat(sg) * s * a.cat(t, r, k);
            }
            // (e_q delta(e_p, e_r))[k] via component t
            {
              const auto [base, sg] = delta_block(p, r);
              if (sg != 0) sys.at(row, base + t) += Rat(sg) * s * a.cat(q, t, k);
            }
          }
        }
  const std::vector<QVec> null = sys.nullspace();
  for (const QVec& u : null) sp.tables.push_back(unknowns_to_table(u, n));
  sp.uspan = Subspace::span(nunk, null);

  // re-verify the defining condition exactly on all basis triples
  for (const std::vector<Rat>& tab : sp.tables)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t r = 0; r < n; ++r) {
          QVec ep(n), eq(n), er(n);
          ep[p] = Rat(1);
          eq[q] = Rat(1);
          er[r] = Rat(1);
          const QVec lhs =
              eval_bilinear_table(tab, n, ep, basis_product(a, q, r));
          QVec rhs =
              qvec_add(multiply(a, eval_bilinear_table(tab, n, ep, eq), er),
                       multiply(a, eq, eval_bilinear_table(tab, n, ep, er)));
          if (sign < 0) rhs = qvec_scale(Rat(-1), rhs);
          if (lhs != rhs)
            throw InternalError(std::string(what) +
                                ": solved basis table fails its condition");
        }
  return sp;
}

}  // namespace

bool MapSpace::contains(const QMatrix& m) const {
  if (m.rows() != n || m.cols() != n)
    throw InputError("matrix dimension does not match the map space");
  return flat.contains(flatten(m));
}

MapSpace derivation_space(const Algebra& a) {
  return linear_map_space(a, +1, "derivation_space");
}

MapSpace antiderivation_space(const Algebra& a) {
  return linear_map_space(a, -1, "antiderivation_space");
}

bool BilinearMapSpace::contains_table(const std::vector<Rat>& table) const {
  if (table.size() != n * n * n)
    throw InputError("table size does not match the bilinear map space");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (table[(i * n + j) * n + k] != -table[(j * n + i) * n + k])
          return false;  // not skew-symmetric
  const std::size_t nunk = n * (n - 1) / 2 * n;
  QVec u(nunk);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        u[pair_index(i, j, n) * n + k] = table[(i * n + j) * n + k];
  return uspan.contains(u);
}

BilinearMapSpace skew_anti_biderivation_space(const Algebra& a) {
  return skew_bilinear_space(a, -1, "skew_anti_biderivation_space");
}

BilinearMapSpace skew_biderivation_space(const Algebra& a) {
  return skew_bilinear_space(a, +1, "skew_biderivation_space");
}

QVec eval_bilinear_table(const std::vector<Rat>& table, std::size_t n,
                         const QVec& x, const QVec& y) {
  if (x.size() != n || y.size() != n || table.size() != n * n * n)
    throw InputError("bilinear table evaluation: dimension mismatch");
  QVec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Rat xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Rat& c = table[(i * n + j) * n + k];
        if (!c.is_zero()) out[k] += xy * c;
      }
    }
  }
  return out;
}

InvertibleDerivationResult has_invertible_derivation(const Algebra& a,
                                                     std::uint64_t seed) {
  const std::size_t n = a.dim;
  const MapSpace der = derivation_space(a);
  InvertibleDerivationResult res;
  if (n == 0) {
    res.verdict = InvertibleDerivationResult::Verdict::yes;
    res.witness = QMatrix::identity(0);
    res.reason = "empty algebra: the empty map is invertible";
    return res;
  }
  if (der.flat.contains(flatten(QMatrix::identity(n)))) {
    res.verdict = InvertibleDerivationResult::Verdict::yes;
    res.witness = QMatrix::identity(n);
    res.reason = "identity matrix lies in the derivation space";
    return res;
  }
  // structural certificate: a coordinate row (or column) vanishing across
  // the whole basis forces every derivation to be singular
  for (int pass = 0; pass < 2; ++pass) {
    const bool column = pass == 1;
    for (std::size_t r = 0; r < n; ++r) {
      bool all_zero = true;
      for (const QMatrix& m : der.basis) {
        for (std::size_t j = 0; j < n && all_zero; ++j)
          if (!(column ? m.at(j, r) : m.at(r, j)).is_zero()) all_zero = false;
        if (!all_zero) break;
      }
      if (all_zero) {
        res.verdict = InvertibleDerivationResult::Verdict::no_certificate;
        res.zero_index = r;
        res.zero_is_column = column;
        std::ostringstream os;
        os << (column ? "column " : "coordinate row ") << r
           << " vanishes for every derivation, so the determinant is"
              " identically zero";
        res.reason = os.str();
        return res;
      }
    }
  }
  SeededRng rng(seed);
  constexpr std::size_t kSamples = 32;
  for (std::size_t s = 0; s < kSamples; ++s) {
    QMatrix m(n, n);
    for (const QMatrix& b : der.basis) {
      const long coeff = rng.next_int(-100, 100);
      if (coeff != 0) m = m.add(b.scale(Rat(coeff)));
    }
    if (m.inverse().has_value()) {
      res.verdict = InvertibleDerivationResult::Verdict::yes;
      res.witness = m;
      std::ostringstream os;
      os << "random combination found after " << (s + 1) << " sample(s)";
      res.reason = os.str();
      res.samples_tried = s + 1;
      return res;
    }
  }
  res.verdict = InvertibleDerivationResult::Verdict::unknown_probably_no;
  res.samples_tried = kSamples;
  res.reason = "all 32 sampled combinations were singular";
  return res;
}

bool space_preserves_subspace(const MapSpace& s, const Subspace& I) {
  if (I.ambient() != s.n)
    throw InputError("space_preserves_subspace: dimension mismatch");
  for (const QMatrix& phi : s.basis)
    for (const QVec& v : I.basis())
      if (!I.contains(phi.apply(v))) return false;
  return true;
}

}  // namespace abdkit
