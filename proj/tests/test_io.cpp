#include <catch2/catch_amalgamated.hpp>

#include "persuasion/appendix_c.hpp"
#include "persuasion/json_io.hpp"

using namespace persuasion;

TEST_CASE("instance serialization round-trips bit-exactly") {
  const Instance a(Rational(1, 2), {Rational(3, 4), Rational(1, 2), Rational(1, 4)},
                   UtilityFunction::prefix({0, 1, 2, 3}));
  CHECK(instance_from_json(to_json(a)) == a);
  CHECK(instance_from_json(json::parse(to_json(a).dump())) == a);

  const Instance b(Rational(1, 3), {Rational(1, 7), Rational(1, 7)},
                   UtilityFunction::xos({{Rational(1), Rational(0)}, {Rational(1, 2), Rational(2, 3)}}));
  CHECK(instance_from_json(to_json(b)) == b);

  std::map<SubsetMask, Rational> t{{0b1, Rational(1, 9)}, {0b11, Rational(2, 9)}};
  const Instance c(Rational(2, 5), {Rational(1, 2), Rational(1, 2)},
                   UtilityFunction::table(2, std::move(t)));
  CHECK(instance_from_json(to_json(c)) == c);
}

TEST_CASE("scheme serialization round-trips, sparse profiles as strings") {
  std::map<SubsetMask, Rational> mu0{{0b000, Rational(1)}};
  std::map<SubsetMask, Rational> mu1{{0b111, Rational(1)}};
  const auto scheme = SignalingScheme::binary(3, std::move(mu0), std::move(mu1));
  const json j = to_json(scheme);
  CHECK(j.at("mu1").size() == 1);  // sparse single-entry map
  CHECK(j.at("mu1").contains("111"));
  CHECK(scheme_from_json(j) == scheme);

  const auto three = appendix_c::three_signal();
  CHECK(scheme_from_json(to_json(three)) == three);
  CHECK(to_json(three).at("mu0").contains("+Y0"));
}

TEST_CASE("loading invalid documents names the violated invariant") {
  json j = json::parse(R"({"n":2,"lambda":"1/2","theta":["1/4","1/2"],
                           "utility":{"kind":"prefix","weights":["0","1","2"]}})");
  CHECK_THROWS_WITH(instance_from_json(j), "theta not sorted descending");

  json bad_scheme = json::parse(R"({"alphabets":[2,2],
    "mu0":{"00":"1/2"}, "mu1":{"11":"1"}})");
  CHECK_THROWS_WITH(scheme_from_json(bad_scheme), "mu0 does not sum to 1");

  json bad_rational = json::parse(R"({"n":1,"lambda":"x/y","theta":["1/2"],
    "utility":{"kind":"additive","weights":["1"]}})");
  CHECK_THROWS_AS(instance_from_json(bad_rational), std::invalid_argument);
}

TEST_CASE("pattern and model serialization") {
  const auto p = appendix_c::cycle_pattern();
  CHECK(pattern_from_json(to_json(p)) == p);
  const auto model = appendix_c::somewhat_indirect_model();
  const auto back = model_from_json(to_json(model));
  REQUIRE(back.kind == LeakageModel::Kind::mixture);
  CHECK(back.mixture.size() == 2);
  CHECK(back.mixture[0].first == Rational(1, 2));
  CHECK(back.mixture[0].second == model.mixture[0].second);

  CHECK(model_from_json(to_json(LeakageModel::star(2))).k == 2);
  CHECK_THROWS_AS(pattern_from_json(json::parse(R"({"n":2,"edges":[[1,1]]})")),
                  std::invalid_argument);
}

TEST_CASE("instance hash is stable and content-derived") {
  const Instance a(Rational(1, 2), {Rational(3, 4), Rational(1, 2), Rational(1, 4)},
                   UtilityFunction::prefix({0, 1, 2, 3}));
  const Instance b(Rational(1, 2), {Rational(3, 4), Rational(1, 2), Rational(1, 4)},
                   UtilityFunction::prefix({0, 1, 2, 4}));
  CHECK(instance_hash(a) == instance_hash(a));
  CHECK(instance_hash(a) != instance_hash(b));
  CHECK(instance_hash(a).size() == 16);
}
