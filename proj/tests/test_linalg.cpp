#include <doctest.h>

#include "abdkit/errors.hpp"
#include "abdkit/matrix.hpp"
#include "abdkit/rational.hpp"
#include "abdkit/subspace.hpp"
#include "test_util.hpp"

using namespace abdkit;
using testutil::oracle;

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rat::parse("3/6").str() == "1/2");
  CHECK(Rat::parse("-4/2").str() == "-2");
  CHECK(Rat::parse("0/7").str() == "0");
  CHECK(Rat::parse("5").str() == "5");
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK((Rat(1, 3) + Rat(1, 6)).str() == "1/2");
  CHECK((Rat(2, 3) * Rat(3, 4)).str() == "1/2");
  CHECK((Rat(1) - Rat(5, 2)).str() == "-3/2");
  CHECK(Rat(7, 3).inverse().str() == "3/7");
  CHECK(Rat(-5).abs() == Rat(5));
  CHECK(Rat(1, 2) < Rat(2, 3));
  CHECK(Rat(0).is_zero());
  CHECK_THROWS_AS(Rat::parse(""), InputError);
  CHECK_THROWS_AS(Rat::parse("x"), InputError);
  CHECK_THROWS_AS(Rat::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rat(1, 0), InputError);
  CHECK_THROWS_AS(Rat(1) / Rat(0), InputError);
  CHECK_THROWS_AS(Rat(0).inverse(), InputError);
}

TEST_CASE("matrix arithmetic basics") {
  QMatrix id2 = QMatrix::identity(2);
  QMatrix a(2, 2);
  a.at(0, 0) = Rat(1);
  a.at(0, 1) = Rat(2);
  a.at(1, 0) = Rat(3);
  a.at(1, 1) = Rat(4);
  CHECK(a.mul(id2) == a);
  CHECK(id2.mul(a) == a);
  CHECK(a.transpose().transpose() == a);
  CHECK(a.sub(a).is_zero());
  CHECK(a.add(a) == a.scale(Rat(2)));
  QVec v{Rat(1), Rat(1)};
  QVec av = a.apply(v);
  CHECK(av[0] == Rat(3));
  CHECK(av[1] == Rat(7));
}

TEST_CASE("rref, pivots and nullspace match the frozen example") {
  const auto& ex = oracle()["linalg"]["rref_example"];
  QMatrix input = testutil::matrix_of(ex["input"]);
  auto r = input.rref();
  // The frozen form lists the nonzero rows; rref() keeps the input shape
  // with zero rows collected at the bottom.
  QMatrix nz = testutil::matrix_of(ex["rref"]);
  REQUIRE(nz.rows() <= r.mat.rows());
  for (std::size_t i = 0; i < r.mat.rows(); ++i) {
    if (i < nz.rows())
      CHECK(r.mat.row(i) == nz.row(i));
    else
      CHECK(qvec_is_zero(r.mat.row(i)));
  }
  std::vector<std::size_t> pivots;
  for (const auto& p : ex["pivots"]) pivots.push_back(p.get<std::size_t>());
  CHECK(r.pivots == pivots);
  auto ns = input.nullspace();
  auto expected = testutil::rows_of(ex["nullspace"]);
  REQUIRE(ns.size() == expected.size());
  for (std::size_t i = 0; i < ns.size(); ++i) CHECK(ns[i] == expected[i]);
  // rank-nullity
  CHECK(input.rank() + ns.size() == input.cols());
  // every nullspace vector really solves A x = 0
  for (const auto& x : ns) CHECK(qvec_is_zero(input.apply(x)));
}

TEST_CASE("inverse matches the frozen example") {
  const auto& ex = oracle()["linalg"]["inverse_example"];
  QMatrix input = testutil::matrix_of(ex["input"]);
  auto inv = input.inverse();
  REQUIRE(inv.has_value());
  CHECK(*inv == testutil::matrix_of(ex["inverse"]));
  CHECK(input.mul(*inv) == QMatrix::identity(input.rows()));
  CHECK(ex["full_rank"].get<bool>());
  CHECK(input.rank() == input.rows());
}

TEST_CASE("singular matrices have no inverse and solve reports consistently") {
  QMatrix m(2, 2);
  m.at(0, 0) = Rat(1);
  m.at(0, 1) = Rat(1);
  m.at(1, 0) = Rat(2);
  m.at(1, 1) = Rat(2);
  CHECK_FALSE(m.inverse().has_value());
  // consistent system
  auto x = m.solve({Rat(3), Rat(6)});
  REQUIRE(x.has_value());
  QVec mx = m.apply(*x);
  CHECK(mx[0] == Rat(3));
  CHECK(mx[1] == Rat(6));
  // inconsistent system
  CHECK_FALSE(m.solve({Rat(1), Rat(0)}).has_value());
  // nullspace of [[1,1],[2,2]] is span{(-1,1)} as echelon convention vectors
  auto ns = m.nullspace();
  REQUIRE(ns.size() == 1);
  CHECK(qvec_is_zero(m.apply(ns[0])));
  CHECK_FALSE(qvec_is_zero(ns[0]));
}

TEST_CASE("identity and zero nullspaces") {
  CHECK(QMatrix::identity(2).nullspace().empty());
  QMatrix z(1, 3);
  CHECK(z.nullspace().size() == 3);
}

TEST_CASE("subspace canonical form, membership and ordering") {
  // two generating sets of the same plane compare equal
  Subspace s1 = Subspace::span(3, {{Rat(1), Rat(0), Rat(1)}, {Rat(0), Rat(1), Rat(1)}});
  Subspace s2 = Subspace::span(3, {{Rat(1), Rat(1), Rat(2)}, {Rat(1), Rat(-1), Rat(0)}});
  CHECK(s1 == s2);
  CHECK(s1.dim() == 2);
  CHECK(s1.contains({Rat(2), Rat(0), Rat(2)}));
  CHECK_FALSE(s1.contains({Rat(0), Rat(0), Rat(1)}));
  CHECK(Subspace::full(3).contains({Rat(5), Rat(-7), Rat(13)}));
  CHECK_FALSE(Subspace::zero(3).contains({Rat(1), Rat(0), Rat(0)}));
  CHECK(Subspace::zero(3).leq(s1));
  CHECK(s1.leq(s1));
  Subspace e1 = Subspace::span(2, {{Rat(1), Rat(0)}});
  Subspace e2 = Subspace::span(2, {{Rat(0), Rat(1)}});
  CHECK_FALSE(e1.leq(e2));
}

TEST_CASE("sum, intersection and the dimension formula") {
  Subspace u = Subspace::span(3, {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}});
  Subspace w = Subspace::span(3, {{Rat(1), Rat(1), Rat(0)}});
  Subspace i = u.intersect(w);
  CHECK(i == w);  // w is inside u
  Subspace o = Subspace::span(3, {{Rat(0), Rat(0), Rat(1)}});
  CHECK(u.intersect(o).dim() == 0);
  CHECK(u.sum(o) == Subspace::full(3));
  // dim(U) + dim(W) = dim(U+W) + dim(U cap W) on a generic pair
  Subspace w2 = Subspace::span(3, {{Rat(1), Rat(1), Rat(1)}, {Rat(0), Rat(0), Rat(1)}});
  CHECK(u.dim() + w2.dim() == u.sum(w2).dim() + u.intersect(w2).dim());
  Subspace iw = u.intersect(w2);
  CHECK(iw.leq(u));
  CHECK(iw.leq(w2));
}

TEST_CASE("standard complement extends a subspace to the full space") {
  Subspace s = Subspace::span(4, {{Rat(0), Rat(1), Rat(0), Rat(0)},
                                  {Rat(0), Rat(0), Rat(0), Rat(1)}});
  auto comp = s.standard_complement();
  REQUIRE(comp.size() == 2);
  CHECK(comp[0] == 0);
  CHECK(comp[1] == 2);
  std::vector<QVec> gens = s.basis();
  for (auto j : comp) {
    QVec e(4, Rat(0));
    e[j] = Rat(1);
    gens.push_back(e);
  }
  CHECK(Subspace::span(4, gens) == Subspace::full(4));
}
