#include <doctest.h>

#include "circconj/io/json_io.hpp"
#include "test_support.hpp"

using namespace circconj;
using namespace testing_support;
using io::json;

TEST_CASE("json: surd, parameter and matrix formats") {
  CHECK(io::surd_to_json(sqrt2_minus_1()) == json{{"a", -1}, {"b", 1}, {"c", 1}, {"d", 2}});
  CHECK(io::surd_from_json(json{{"a", -1}, {"b", 1}, {"c", 2}, {"d", 5}}) == golden_conj());
  CHECK_THROWS_AS(io::surd_from_json(json{{"a", 1}, {"b", 1}, {"c", 1}}), DomainError);
  CHECK_THROWS_AS(io::surd_from_json(json{{"a", 1}, {"b", 1}, {"c", 1}, {"d", 2}, {"e", 0}}), DomainError);
  CHECK_THROWS_AS(io::surd_from_json(json{{"a", 1.5}, {"b", 1}, {"c", 1}, {"d", 2}}), DomainError);

  Alpha prefix = CfPrefix{{0, 1, 2, 3}};
  CHECK(io::alpha_to_json(prefix) == json{{"nonquadratic_cf", {0, 1, 2, 3}}});
  CHECK(io::alpha_from_json(io::alpha_to_json(prefix)) == prefix);
  CHECK_THROWS_AS(io::alpha_from_json(json{{"nonquadratic_cf", {0, 1, 0}}}), DomainError);

  CHECK(io::matrix_to_json({2, 1, 1, 0}) == json{2, 1, 1, 0});
  CHECK(io::matrix_from_json(json{2, 1, 1, 0}) == UnimodularMatrix2{2, 1, 1, 0});
  CHECK_THROWS_AS(io::matrix_from_json(json{2, 2, 1, 1}), DomainError);
  CHECK(io::cf_to_json(cf_expand(Surd(1, 1, 1, 2))) == json{{"preperiod", {2}}, {"period", {2}}});
}

TEST_CASE("json: descriptors") {
  CircleGroupDescriptor d{Alpha{sqrt2_minus_1()}, 3, 2, {1, 0, 1}};
  json j = io::descriptor_to_json(d);
  CHECK(io::descriptor_from_json(j) == d);
  json torsion = j;
  torsion["g"] = {2, 0, 2};
  CHECK_THROWS_AS(io::descriptor_from_json(torsion), DomainError);
  json extra = j;
  extra["f"] = 1;
  CHECK_THROWS_AS(io::descriptor_from_json(extra), DomainError);
  json missing = j;
  missing.erase("k");
  CHECK_THROWS_AS(io::descriptor_from_json(missing), DomainError);
  LineGroupDescriptor l{Alpha{golden_conj()}, 4};
  CHECK(io::line_descriptor_from_json(io::line_descriptor_to_json(l)).n == 4);
}

TEST_CASE("json: expressions round trip") {
  CircleGroupDescriptor d{Alpha{sqrt2_minus_1()}, 3, 3, {1, 0, 1}};
  std::vector<Expr> samples{
      identity_expr(),
      element_to_expr(d.line(), {2, -1, 1}),
      staircase_unchecked(hbar_wrap(translate(1))),
      power(scale(Surd(1, 1, 1, 2)), -3),
      element_expr(d, {2, {1, 1, 0}}),
      retwist(canonical_f(d), canonical_f(d), 3),
      inverse(hbar_base()),
  };
  for (const Expr& e : samples) CHECK(io::expr_from_json(io::expr_to_json(e)) == e);
  json j = io::expr_to_json(element_to_expr(d.line(), {2, -1, 1}));
  CHECK(j["commuting"] == true);
  CHECK_FALSE(io::expr_to_json(compose({translate(1), translate(2)})).contains("commuting"));
  CHECK_THROWS_AS(io::expr_from_json(json{{"tag", "rotate"}}), DomainError);
  CHECK_THROWS_AS(io::expr_from_json(json{{"tag", "identity"}, {"inner", 1}}), DomainError);
  // Translation by 1/2 does not fix the integers, so it cannot sit under a staircase.
  json half = io::expr_to_json(translate(Alpha{Surd::rational(1, 2)}));
  json bad_staircase{{"tag", "staircase"}, {"inner", half}};
  CHECK_THROWS_AS(io::expr_from_json(bad_staircase), DomainError);
}

TEST_CASE("json: decisions and witnesses") {
  CircleGroupDescriptor d1{Alpha{sqrt2_minus_1()}, 3, 2, {1, 0, 1}};
  CircleGroupDescriptor d2{Alpha{sqrt2_minus_1()}, 3, 2, {0, 1, 1}};
  Decision r = decide(d1, d2);
  json j = io::decision_to_json(r);
  CHECK(j["verdict"] == "conjugate");
  for (const char* key : {"f_alpha", "A", "S", "B", "w", "h"}) CHECK(j["witness"].contains(key));
  CHECK(io::witness_from_json(j["witness"]) == *r.witness);
  json no = io::decision_to_json(decide(d1, CircleGroupDescriptor{Alpha{sqrt2_minus_1()}, 2, 2, {1, 0}}));
  CHECK(no["witness"].is_null());
  CHECK(no["certificate"]["reason"] == "rank");
}

TEST_CASE("json: precision") {
  Precision p = io::precision_from_json(json{{"working_bits", 128}, {"delta", 1e-3}});
  CHECK(p.working_bits == 128);
  CHECK(p.delta == 1e-3);
  CHECK_THROWS_AS(io::precision_from_json(json{{"bits", 128}}), DomainError);
  CHECK_THROWS_AS(io::precision_from_json(json{{"delta", 0.7}}), DomainError);
  CHECK(io::precision_from_json(io::precision_to_json(Precision{})).working_bits == 256);
}
