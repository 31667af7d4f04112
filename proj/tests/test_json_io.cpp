#include <doctest.h>

#include <string>

#include "abdkit/algebra.hpp"
#include "abdkit/catalog.hpp"
#include "abdkit/constructions.hpp"
#include "abdkit/errors.hpp"
#include "abdkit/identities.hpp"
#include "abdkit/json_io.hpp"
#include "test_util.hpp"

using namespace abdkit;

namespace {
std::string data_path(const std::string& name) {
  return std::string(ABDKIT_TEST_DATA_DIR) + "/" + name;
}
}  // namespace

TEST_CASE("algebra serialization round-trips and is byte-stable") {
  Algebra a21 = catalog::get("A2_1");
  ojson j = algebra_to_json(a21);
  CHECK(j.dump() == R"({"dim":2,"label":"A2_1","products":[[0,0,1,"1"]]})");
  Algebra back = algebra_from_json(j);
  CHECK(back == a21);
  CHECK(back.label == a21.label);
  CHECK(algebra_to_json(back).dump() == j.dump());

  for (const auto& entry : catalog::entries())
    CHECK(algebra_from_json(algebra_to_json(entry.algebra)) == entry.algebra);

  // label is optional on input
  Algebra anon = algebra_from_json(parse_json_text(R"({"dim":1,"products":[]})"));
  CHECK(anon.dim == 1);
  CHECK(anon.label.empty());
}

TEST_CASE("algebra files load like catalog entries") {
  Algebra fromfile = algebra_from_json(load_json_file(data_path("a3_1.json")));
  CHECK(fromfile == catalog::get("A3_1"));
  CHECK(fromfile.label == "A3_1");
}

TEST_CASE("malformed algebra input is rejected with a reason") {
  auto reject = [](const char* text) {
    CHECK_THROWS_AS(algebra_from_json(parse_json_text(text)), InputError);
  };
  reject(R"({"products":[]})");                                // missing dim
  reject(R"({"dim":-2,"products":[]})");                       // negative dim
  reject(R"({"dim":2})");                                      // missing products
  reject(R"({"dim":2,"products":[[0,0,1,"1"],[0,0,1,"1"]]})"); // duplicate
  reject(R"({"dim":2,"products":[[0,0,2,"1"]]})");             // out of range
  reject(R"({"dim":2,"products":[[-1,0,1,"1"]]})");            // negative index
  reject(R"({"dim":2,"products":[[0,0,1,1]]})");               // numeric coeff
  reject(R"({"dim":2,"products":[[0,0,1,"1/0"]]})");           // zero denominator
  reject(R"({"dim":2,"products":[[0,0,"1"]]})");               // short entry

  CHECK_THROWS_AS(parse_json_text("{\"dim\": 3, \"products\": [[0, 0,"), InputError);
  CHECK_THROWS_AS(load_json_file(data_path("malformed.json")), InputError);
  CHECK_THROWS_AS(load_json_file(data_path("no_such_file.json")), InputError);
  bool threw = false;
  try {
    parse_json_text("not json");
  } catch (const InputError& e) {
    threw = true;
    CHECK(std::string(e.what()).find("parse error") != std::string::npos);
  }
  CHECK(threw);
}

TEST_CASE("identity serialization round-trips") {
  const Identity& jac = registry_entry("jacobi").identities[0];
  Identity back = identity_from_json(identity_to_json(jac));
  CHECK(back.arity == jac.arity);
  REQUIRE(back.terms.size() == jac.terms.size());
  for (std::size_t i = 0; i < back.terms.size(); ++i) {
    CHECK(back.terms[i].coeff == jac.terms[i].coeff);
    CHECK(back.terms[i].mono == jac.terms[i].mono);
  }

  auto reject = [](const char* text) {
    CHECK_THROWS_AS(identity_from_json(parse_json_text(text)), InputError);
  };
  reject(R"({"arity":2,"terms":[{"coeff":"1","tree":[0,1,2]}]})");  // 3-node
  reject(R"({"arity":2,"terms":[{"coeff":"1","tree":[0,2]}]})");    // leaf range
  reject(R"({"arity":0,"terms":[]})");
  reject(R"({"arity":2,"terms":[{"tree":[0,1]}]})");                // no coeff
}

TEST_CASE("cocycle and extension serialization round-trips") {
  ExtensionData x;
  x.cocycle.base = Algebra(2, "zero");
  x.cocycle.fiber_dim = 1;
  x.cocycle.beta.assign(4, Rat(0));
  x.cocycle.beta[(0 * 2 + 0) * 1] = Rat(1, 3);
  x.bracket.assign(9, Rat(0));
  x.bracket[(0 * 3 + 1) * 1] = Rat(1);
  x.bracket[(1 * 3 + 0) * 1] = Rat(-1);

  CocycleData c = cocycle_from_json(cocycle_to_json(x.cocycle));
  CHECK(c.base == x.cocycle.base);
  CHECK(c.fiber_dim == x.cocycle.fiber_dim);
  CHECK(c.beta == x.cocycle.beta);

  ExtensionData back = extension_from_json(extension_to_json(x));
  CHECK(back.cocycle.base == x.cocycle.base);
  CHECK(back.cocycle.beta == x.cocycle.beta);
  CHECK(back.bracket == x.bracket);

  // serialized form of the same datum is byte-identical across calls
  CHECK(extension_to_json(x).dump() == extension_to_json(back).dump());
}

TEST_CASE("the shipped failing-form example is a valid file but not a cocycle") {
  CocycleData d = cocycle_from_json(load_json_file(data_path("bad_cocycle.json")));
  CHECK(d.base.dim == 2);
  CHECK(d.fiber_dim == 1);
  CHECK_FALSE(check_jj_cocycle(d));
  CHECK_THROWS_AS(central_extension(d), PreconditionError);
}

TEST_CASE("vector, matrix, and triple renderings") {
  QVec v{Rat(1), Rat(-1, 2)};
  CHECK(qvec_to_json(v).dump() == R"(["1","-1/2"])");
  CHECK(qmatrix_to_json(QMatrix::identity(2)).dump() ==
        R"([["1","0"],["0","1"]])");
  Algebra a21 = catalog::get("A2_1");
  CHECK(triples_from_flat(a21.c, 2, 2, 2).dump() == R"([[0,0,1,"1"]])");
}

TEST_CASE("content digests") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("abc") == "e71fa2190541574b");
  CHECK(fnv1a_hex("abc") == fnv1a_hex("abc"));
  CHECK(fnv1a_hex("abd") != fnv1a_hex("abc"));
}
