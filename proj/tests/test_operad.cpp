#include <doctest.h>

#include <string>
#include <vector>

#include "abdkit/errors.hpp"
#include "abdkit/identities.hpp"
#include "abdkit/operad.hpp"
#include "test_util.hpp"

using namespace abdkit;

namespace {

const Monomial X = Monomial::leaf(0);
const Monomial Y = Monomial::leaf(1);
const Monomial Z = Monomial::leaf(2);
const Monomial T = Monomial::leaf(3);

Identity single(int arity, const Rat& c, const Monomial& m) {
  Identity id;
  id.arity = arity;
  id.terms.push_back({c, m});
  return id;
}

RelationSet span_of(const std::string& name) {
  return identity_span(testutil::registry_ids(name), 3);
}

const ojson& op_oracle() { return testutil::oracle().at("operad"); }

}  // namespace

TEST_CASE("multilinear monomial bases") {
  const MultilinearSpace& b3 = monomial_basis(3);
  REQUIRE(b3.dim() == 12);
  CHECK(b3.basis[0].str() == "((x1*x2)*x3)");
  CHECK(b3.basis[6].str() == "(x1*(x2*x3))");
  for (std::size_t i = 0; i < b3.dim(); ++i) CHECK(b3.index_of(b3.basis[i]) == i);

  const MultilinearSpace& b4 = monomial_basis(4);
  REQUIRE(b4.dim() == 120);
  CHECK(b4.basis[0].str() == "(((x1*x2)*x3)*x4)");
  CHECK(b4.basis[24].str() == "((x1*(x2*x3))*x4)");
  CHECK(b4.basis[48].str() == "((x1*x2)*(x3*x4))");
  CHECK(b4.basis[72].str() == "(x1*((x2*x3)*x4))");
  CHECK(b4.basis[96].str() == "(x1*(x2*(x3*x4)))");

  CHECK_THROWS_AS(monomial_basis(2), InputError);
  CHECK_THROWS_AS(monomial_basis(5), InputError);
  CHECK_THROWS_AS(b3.index_of(Monomial::node(X, X)), InputError);
}

TEST_CASE("identity coordinates round-trip") {
  const Identity& jac = registry_entry("jacobi").identities[0];
  QVec v = identity_vector(jac);
  REQUIRE(v.size() == 12);
  Identity back = identity_from_vector(3, v);
  CHECK(identity_vector(back) == v);
  CHECK_THROWS_AS(identity_vector(registry_entry("commutative").identities[0]),
                  InputError);
  Identity cube = single(1, Rat(1), Monomial::node(Monomial::node(X, X), X));
  CHECK_THROWS_AS(identity_vector(cube), InputError);
  CHECK_THROWS_AS(identity_from_vector(3, QVec(5, Rat(0))), InputError);
}

TEST_CASE("relation spans match frozen dimensions") {
  const auto& dims = op_oracle().at("span_dims");
  for (const auto& [name, d] : dims.items()) {
    std::vector<Identity> ids;
    if (name == "anticommutative+antiassociative")
      ids = testutil::concat_ids({"anticommutative", "antiassociative"});
    else if (name == "zero")
      ids = {};
    else
      ids = testutil::registry_ids(name);
    INFO(name);
    CHECK(identity_span(ids, 3).span.dim() == d.get<std::size_t>());
  }
  CHECK_THROWS_AS(identity_span(testutil::registry_ids("s4"), 3), InputError);
}

TEST_CASE("span inclusions between the main relation sets") {
  const auto& inc = op_oracle().at("inclusions");
  RelationSet jj = span_of("jj_admissible"), abd = span_of("abd"),
              alr = span_of("alr"), sal = span_of("symmetric_anti_leibniz");
  RelationSet both = identity_span(
      testutil::concat_ids({"anticommutative", "antiassociative"}), 3);
  CHECK(jj.span.leq(abd.span) == inc.at("jj_admissible_span_in_abd").get<bool>());
  CHECK(abd.span.leq(alr.span) == inc.at("abd_span_in_alr").get<bool>());
  CHECK(alr.span.leq(both.span) ==
        inc.at("alr_span_in_anticomm_antiassoc").get<bool>());
  CHECK(abd.span.leq(sal.span) ==
        inc.at("abd_span_in_symmetric_anti_leibniz").get<bool>());

  // variety-level phrasing: more relations cut out a smaller variety
  CHECK(variety_includes(alr, abd));
  CHECK_FALSE(variety_includes(abd, alr));
  CHECK(variety_includes(sal, abd));
  CHECK(variety_includes(abd, jj));
  CHECK(variety_includes(abd, abd));
  RelationSet four{4, Subspace::zero(120)};
  CHECK_THROWS_AS(variety_includes(abd, four), InputError);
}

TEST_CASE("degree-4 consequence spaces") {
  const auto& s4 = op_oracle().at("s4");
  const auto& nil = op_oracle().at("nil");
  CHECK(consequence_space(span_of("abd")).span.dim() ==
        nil.at("consequence_abd_dim").get<std::size_t>());
  CHECK(consequence_space(span_of("alr")).span.dim() ==
        s4.at("consequence_alr_dim").get<std::size_t>());
  CHECK(consequence_space(span_of("associative")).span.dim() ==
        s4.at("consequence_associative_dim").get<std::size_t>());
  CHECK(consequence_space(span_of("antiassociative")).span.dim() ==
        s4.at("consequence_antiassociative_dim").get<std::size_t>());
  RelationSet zero{3, Subspace::zero(12)};
  CHECK(consequence_space(zero).span.dim() == 0);
  RelationSet four{4, Subspace::zero(120)};
  CHECK_THROWS_AS(consequence_space(four), InputError);
}

TEST_CASE("powers collapse under the defining relations") {
  const auto& nil = op_oracle().at("nil");
  RelationSet abd = span_of("abd");
  Identity left3 = single(1, Rat(1), Monomial::node(Monomial::node(X, X), X));
  Identity right3 = single(1, Rat(1), Monomial::node(X, Monomial::node(X, X)));
  CHECK(abd.span.contains(identity_vector(linearize(left3))) ==
        nil.at("lin_x3_left_in_abd").get<bool>());
  CHECK(abd.span.contains(identity_vector(linearize(right3))) ==
        nil.at("lin_x3_right_in_abd").get<bool>());

  RelationSet cons = consequence_space(abd);
  const MultilinearSpace& b4 = monomial_basis(4);
  const auto expected = nil.at("x4_lin_in_consequence").get<std::vector<bool>>();
  REQUIRE(expected.size() == 5);
  for (std::size_t shape = 0; shape < 5; ++shape) {
    // replace all four variables of the shape's first monomial by one variable
    Monomial m = b4.basis[24 * shape];
    m = relabel(m, {0, 0, 0, 0});
    Identity pow = single(1, Rat(1), m);
    CHECK(cons.span.contains(identity_vector(linearize(pow))) == expected[shape]);
  }
}

TEST_CASE("triple alternating sums") {
  const auto& s3 = op_oracle().at("s3");
  QVec s_vec =
      identity_vector(expand_over_commutator(registry_entry("s3").identities[0]));
  CHECK(s_vec ==
        identity_vector(expand_over_commutator(testutil::alternating_sum(3))));
  CHECK(s_vec == testutil::qvec_of(s3.at("s_vector")));

  Identity assoc_cyc;
  assoc_cyc.arity = 3;
  for (const auto& p : std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}) {
    Monomial a = Monomial::leaf(p[0]), b = Monomial::leaf(p[1]),
             c = Monomial::leaf(p[2]);
    assoc_cyc.terms.push_back({Rat(1), Monomial::node(Monomial::node(a, b), c)});
    assoc_cyc.terms.push_back({Rat(-1), Monomial::node(a, Monomial::node(b, c))});
  }
  QVec t_vec = identity_vector(assoc_cyc);
  CHECK(t_vec == testutil::qvec_of(s3.at("t_vector")));

  // exact closed form: S - 2T = lin(x*(x*x)) - lin((x*x)*x)
  Identity left3 = single(1, Rat(1), Monomial::node(Monomial::node(X, X), X));
  Identity right3 = single(1, Rat(1), Monomial::node(X, Monomial::node(X, X)));
  QVec residual = qvec_sub(qvec_add(qvec_sub(s_vec, qvec_scale(Rat(2), t_vec)),
                                    identity_vector(linearize(left3))),
                           identity_vector(linearize(right3)));
  CHECK(qvec_is_zero(residual) == s3.at("exact_identity_residual_zero").get<bool>());
  QVec s_minus_2t = qvec_sub(s_vec, qvec_scale(Rat(2), t_vec));
  CHECK_FALSE(qvec_is_zero(s_minus_2t));
  CHECK(span_of("alr").span.contains(s_minus_2t) ==
        s3.at("s_minus_2t_in_alr").get<bool>());
  CHECK(span_of("anticommutative").span.contains(s_minus_2t) ==
        s3.at("s_minus_2t_in_anticommutative").get<bool>());
}

TEST_CASE("quadruple alternating sum is not a relation consequence") {
  const auto& s4 = op_oracle().at("s4");
  RelationSet cons = consequence_space(span_of("alr"));
  QVec s4_vec = identity_vector(expand_over_commutator(testutil::alternating_sum(4)));
  CHECK(cons.span.contains(s4_vec) == s4.at("in_consequence_alr").get<bool>());
  CHECK_FALSE(s4.at("in_consequence_alr").get<bool>());

  // single-relation rewriting of (x*y)*(z*t) into (z*t)*(x*y) does work
  std::vector<std::pair<Rat, Monomial>> chain = {
      {Rat(1), Monomial::node(Monomial::node(X, Y), Monomial::node(Z, T))},
      {Rat(-1), Monomial::node(Monomial::node(X, Monomial::node(Z, T)), Y)},
      {Rat(1), Monomial::node(Monomial::node(Z, Monomial::node(X, T)), Y)},
      {Rat(-1), Monomial::node(Monomial::node(Z, Y), Monomial::node(X, T))},
      {Rat(1), Monomial::node(X, Monomial::node(Monomial::node(Z, Y), T))},
      {Rat(-1), Monomial::node(X, Monomial::node(Monomial::node(Z, T), Y))},
      {Rat(1), Monomial::node(Monomial::node(Z, T), Monomial::node(X, Y))},
  };
  std::vector<QVec> vecs;
  for (const auto& [c, m] : chain) vecs.push_back(identity_vector(single(4, c, m)));
  const auto steps =
      s4.at("pair_rewrite_steps_in_consequence_alr").get<std::vector<bool>>();
  REQUIRE(steps.size() == chain.size() - 1);
  for (std::size_t i = 0; i + 1 < vecs.size(); ++i)
    CHECK(cons.span.contains(qvec_sub(vecs[i], vecs[i + 1])) == steps[i]);
  CHECK(cons.span.contains(qvec_sub(vecs.front(), vecs.back())) ==
        s4.at("pair_product_commutation_in_consequence_alr").get<bool>());
}

TEST_CASE("koszul duality") {
  const auto& frozen = op_oracle();
  RelationSet alr = span_of("alr"), assoc = span_of("associative"),
              ar = span_of("ar_bracket");
  CHECK((koszul_dual(alr).dual_span.span == alr.span) ==
        frozen.at("selfdual").at("alr").get<bool>());
  CHECK((koszul_dual(assoc).dual_span.span == assoc.span) ==
        frozen.at("selfdual").at("associative").get<bool>());
  CHECK((koszul_dual(ar).dual_span.span == ar.span) ==
        frozen.at("selfdual").at("ar_bracket").get<bool>());

  DualResult dual = koszul_dual(ar);
  const auto& frozen_dual = frozen.at("ar_dual");
  CHECK(dual.dual_span.span.dim() == frozen_dual.at("dim").get<std::size_t>());
  CHECK(dual.dual_span.span.basis() == testutil::rows_of(frozen_dual.at("rref")));
  CHECK(dual.generator_identities.size() == dual.dual_span.span.dim());

  // the claimed generating identities: (x*y)*z + (x*z)*y and x*(y*z)
  Identity g1;
  g1.arity = 3;
  g1.terms.push_back({Rat(1), Monomial::node(Monomial::node(X, Y), Z)});
  g1.terms.push_back({Rat(1), Monomial::node(Monomial::node(X, Z), Y)});
  Identity g2 = single(3, Rat(1), Monomial::node(X, Monomial::node(Y, Z)));
  RelationSet claimed = identity_span({g1, g2}, 3);
  CHECK((dual.dual_span.span == claimed.span) ==
        frozen_dual.at("equals_claimed_span").get<bool>());

  // duality is an involution on these relation sets
  CHECK(koszul_dual(dual.dual_span).dual_span.span == ar.span);
  CHECK(koszul_dual(koszul_dual(alr).dual_span).dual_span.span == alr.span);
  RelationSet four{4, Subspace::zero(120)};
  CHECK_THROWS_AS(koszul_dual(four), InputError);
}

TEST_CASE("self-dual independence criterion") {
  const auto& dong = op_oracle().at("dong");
  CHECK(dong_check(span_of("alr")) == dong.at("alr").get<bool>());
  CHECK(dong_check(span_of("ar_bracket")) == dong.at("ar_bracket").get<bool>());
  RelationSet zero{3, Subspace::zero(12)};
  CHECK(dong_check(zero) == dong.at("zero").get<bool>());
}
