#pragma once

// Shared helpers for the unit tests: access to the frozen expected-value
// file (tests/data/oracle.json, produced by the independent generator in
// tests/oracle/) and small conversion utilities.

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "abdkit/algebra.hpp"
#include "abdkit/identities.hpp"
#include "abdkit/json_io.hpp"
#include "abdkit/matrix.hpp"
#include "abdkit/subspace.hpp"

namespace testutil {

inline const abdkit::ojson& oracle() {
  static const abdkit::ojson data =
      abdkit::load_json_file(std::string(ABDKIT_TEST_DATA_DIR) + "/oracle.json");
  return data;
}

inline abdkit::QVec qvec_of(const abdkit::ojson& arr) {
  abdkit::QVec v;
  v.reserve(arr.size());
  for (const auto& s : arr) v.push_back(abdkit::Rat::parse(s.get<std::string>()));
  return v;
}

inline std::vector<abdkit::QVec> rows_of(const abdkit::ojson& arr) {
  std::vector<abdkit::QVec> rows;
  rows.reserve(arr.size());
  for (const auto& r : arr) rows.push_back(qvec_of(r));
  return rows;
}

inline abdkit::QMatrix matrix_of(const abdkit::ojson& arr) {
  return abdkit::QMatrix::from_rows(rows_of(arr));
}

// n x n matrix from a flat row-major coordinate vector.
inline abdkit::QMatrix unflatten(const abdkit::QVec& flat, std::size_t n) {
  abdkit::QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = flat[i * n + j];
  return m;
}

inline abdkit::QVec flatten(const abdkit::QMatrix& m) {
  abdkit::QVec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

// 3-dim anticommutative algebra e1*e2 = e3, e2*e1 = -e3.
inline abdkit::Algebra heisenberg3() {
  abdkit::Algebra a(3, "heis3");
  a.cref(0, 1, 2) = abdkit::Rat(1);
  a.cref(1, 0, 2) = abdkit::Rat(-1);
  return a;
}

// Left-normed product ((x_{p0} x_{p1}) x_{p2}) ... of the given leaves.
inline abdkit::Monomial left_normed(const std::vector<int>& vars) {
  abdkit::Monomial m = abdkit::Monomial::leaf(vars[0]);
  for (std::size_t i = 1; i < vars.size(); ++i)
    m = abdkit::Monomial::node(m, abdkit::Monomial::leaf(vars[i]));
  return m;
}

inline int perm_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

// Sum over even permutations of {0..k-1} of left-normed products.
inline abdkit::Identity alternating_sum(int k) {
  abdkit::Identity id;
  id.arity = k;
  std::vector<int> p(k);
  for (int i = 0; i < k; ++i) p[i] = i;
  do {
    if (perm_sign(p) != 1) continue;
    id.terms.push_back({abdkit::Rat(1), left_normed(p)});
  } while (std::next_permutation(p.begin(), p.end()));
  return id;
}

inline std::vector<abdkit::Identity> registry_ids(const std::string& name) {
  return abdkit::registry_entry(name).identities;
}

inline std::vector<abdkit::Identity> concat_ids(
    std::initializer_list<std::string> names) {
  std::vector<abdkit::Identity> out;
  for (const auto& n : names)
    for (const auto& id : registry_ids(n)) out.push_back(id);
  return out;
}

}  // namespace testutil
