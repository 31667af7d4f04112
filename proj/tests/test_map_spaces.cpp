#include <doctest.h>

#include <cstddef>
#include <set>
#include <vector>

#include "abdkit/algebra.hpp"
#include "abdkit/catalog.hpp"
#include "abdkit/map_spaces.hpp"
#include "abdkit/subspace.hpp"
#include "test_util.hpp"

using namespace abdkit;

namespace {
QVec e(std::size_t n, std::size_t i) {
  QVec v(n, Rat(0));
  v[i] = Rat(1);
  return v;
}
}  // namespace

TEST_CASE("derivation space of A4_2 matches the frozen basis") {
  const auto& frozen = testutil::oracle().at("der_a4_2");
  MapSpace der = derivation_space(catalog::get("A4_2"));
  REQUIRE(der.dim() == frozen.at("dim").get<std::size_t>());
  REQUIRE(der.n == 4);
  for (std::size_t i = 0; i < der.dim(); ++i) {
    QMatrix expect = testutil::unflatten(testutil::qvec_of(frozen.at("basis").at(i)), 4);
    CHECK(der.basis[i] == expect);
    CHECK(der.contains(der.basis[i]));
  }
  // the first coordinate row vanishes across the whole space
  for (std::size_t r : frozen.at("zero_rows").get<std::vector<std::size_t>>())
    for (const QMatrix& b : der.basis)
      CHECK(qvec_is_zero(b.row(r)));
  auto res = has_invertible_derivation(catalog::get("A4_2"));
  CHECK(res.verdict == InvertibleDerivationResult::Verdict::no_certificate);
  CHECK(res.zero_index == 0);
  CHECK_FALSE(res.zero_is_column);
}

TEST_CASE("antiderivation space of A2_1 matches the frozen basis") {
  const auto& frozen = testutil::oracle().at("ader_a2_1");
  MapSpace ader = antiderivation_space(catalog::get("A2_1"));
  REQUIRE(ader.dim() == frozen.at("dim").get<std::size_t>());
  for (std::size_t i = 0; i < ader.dim(); ++i)
    CHECK(ader.basis[i] ==
          testutil::unflatten(testutil::qvec_of(frozen.at("basis").at(i)), 2));
  QMatrix outside(2, 2);
  outside.at(0, 1) = Rat(1);  // maps e2 to e1: incompatible with e1*e1 = e2
  CHECK_FALSE(ader.contains(outside));
}

TEST_CASE("heisenberg bracket derivations") {
  Algebra h = testutil::heisenberg3();
  const auto& frozen = testutil::oracle().at("example_anticommutative_3dim");
  MapSpace der = derivation_space(h);
  MapSpace ader = antiderivation_space(h);
  CHECK(der.dim() == frozen.at("der_dim").get<std::size_t>());
  CHECK(ader.dim() == frozen.at("ader_dim").get<std::size_t>());
  QMatrix grading = QMatrix::identity(3);
  grading.at(2, 2) = Rat(2);
  CHECK(der.contains(grading));
  Algebra zero(2, "zero");
  CHECK(derivation_space(zero).dim() == 4);
  CHECK(antiderivation_space(zero).dim() == 4);
}

TEST_CASE("antiderivations of the algebra are antiderivations of its symmetrization") {
  for (const auto& entry : catalog::entries()) {
    MapSpace a = antiderivation_space(entry.algebra);
    MapSpace p = antiderivation_space(plus_algebra(entry.algebra));
    INFO(entry.key);
    CHECK(a.flat.leq(p.flat));
  }
}

TEST_CASE("the skew part of the product is a skew anti-biderivation of the symmetrization") {
  for (const auto& entry : catalog::entries()) {
    const auto& frozen = testutil::oracle().at("antibider").at(entry.key);
    Algebra plus = plus_algebra(entry.algebra);
    Algebra minus = minus_algebra(entry.algebra);
    BilinearMapSpace space = skew_anti_biderivation_space(plus);
    INFO(entry.key);
    CHECK(space.dim() == frozen.at("plus_space_dim").get<std::size_t>());
    CHECK(space.contains_table(minus.c) == frozen.at("minus_contained").get<bool>());
  }
  // a non-skew table is rejected outright
  Algebra p21 = plus_algebra(catalog::get("A2_1"));
  CHECK_FALSE(skew_anti_biderivation_space(p21).contains_table(p21.c));
}

TEST_CASE("bilinear tables evaluate like the algebra product") {
  Algebra m = minus_algebra(catalog::get("A5_0"));
  QVec x = e(5, 1), y = e(5, 2);
  CHECK(eval_bilinear_table(m.c, 5, x, y) == multiply(m, x, y));
  QVec mix = qvec_add(e(5, 0), qvec_scale(Rat(3), e(5, 3)));
  CHECK(eval_bilinear_table(m.c, 5, mix, y) == multiply(m, mix, y));
}

TEST_CASE("skew biderivation values on the complement of the square") {
  const auto& scan = testutil::oracle().at("complement_scan");
  for (const auto& [key, frozen] : scan.items()) {
    Algebra p = plus_algebra(catalog::get(key));
    const std::size_t n = p.dim;
    BilinearMapSpace bider = skew_biderivation_space(p);
    INFO(key);
    CHECK(bider.dim() == frozen.at("bider_space_dim").get<std::size_t>());
    Subspace sq = derived_subalgebra(p);
    std::set<std::size_t> piv(sq.pivots().begin(), sq.pivots().end());
    std::vector<std::size_t> jcols;
    for (std::size_t c = 0; c < n; ++c)
      if (!piv.count(c)) jcols.push_back(c);
    std::vector<QVec> vals;
    for (const auto& table : bider.tables)
      for (std::size_t x : jcols)
        for (std::size_t y : jcols) {
          QVec v(n, Rat(0));
          for (std::size_t k = 0; k < n; ++k) v[k] = table[(x * n + y) * n + k];
          vals.push_back(std::move(v));
        }
    Subspace spanned = Subspace::span(n, vals);
    bool ok = true;
    for (std::size_t c : jcols) ok = ok && spanned.contains(e(n, c));
    CHECK(ok == frozen.at("complement_spanned").get<bool>());
  }
}

TEST_CASE("invertible derivation search") {
  for (const char* key : {"A3_2"}) {
    auto res = has_invertible_derivation(catalog::get(key));
    REQUIRE(res.verdict == InvertibleDerivationResult::Verdict::yes);
    CHECK(res.witness.inverse().has_value());
    CHECK(derivation_space(catalog::get(key)).contains(res.witness));
  }
  for (Rat alpha : {Rat(1), Rat(-1)}) {
    auto res = has_invertible_derivation(catalog::get("A3_3", alpha));
    REQUIRE(res.verdict == InvertibleDerivationResult::Verdict::yes);
    CHECK(res.witness.inverse().has_value());
    CHECK(derivation_space(catalog::get("A3_3", alpha)).contains(res.witness));
  }
  Algebra zero(3, "zero");
  auto res = has_invertible_derivation(zero);
  CHECK(res.verdict == InvertibleDerivationResult::Verdict::yes);
}

TEST_CASE("map spaces preserving subspaces") {
  for (const char* key : {"A3_2", "A5_0"}) {
    Algebra a = catalog::get(key);
    MapSpace der = derivation_space(a);
    MapSpace ader = antiderivation_space(a);
    for (const MapSpace* s : {&der, &ader}) {
      CHECK(space_preserves_subspace(*s, derived_subalgebra(a)));
      CHECK(space_preserves_subspace(*s, annihilator(a)));
      CHECK(space_preserves_subspace(*s, Subspace::full(a.dim)));
      CHECK(space_preserves_subspace(*s, Subspace::zero(a.dim)));
    }
  }
  Algebra zero(3, "zero");
  CHECK_FALSE(space_preserves_subspace(derivation_space(zero),
                                       Subspace::span(3, {e(3, 0)})));
}
