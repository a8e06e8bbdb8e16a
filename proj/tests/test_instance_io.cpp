#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "scoremanip/instance_io.hpp"
#include "support/oracles.hpp"

using namespace scoremanip;

namespace {

ParseError parse_failure(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("parse unexpectedly succeeded");
  return ParseError(0, ErrorKind::Parse, "");
}

}  // namespace

TEST_CASE("parse the veto reduction instance") {
  auto inst = parse_instance("alpha 1 1 0\np 1\ns 1 2 3 1\ns 1 3 2 1\nt 4\nt 4\n");
  CHECK(inst == reduce(make_vector({1, 1, 0}), {{1, 1}}).instance);
}

TEST_CASE("parse resolves family directives") {
  auto inst = parse_instance("family borda 4\np 2\n");
  CHECK(inst.alpha == make_vector({4, 3, 2, 1}));
  CHECK(inst.p == 2);
  CHECK(inst.s_voters.empty());
  CHECK(inst.t_weights.empty());

  CHECK(parse_instance("family k-approval:2 4\np 1\n").alpha == make_vector({1, 1, 0, 0}));
  CHECK(parse_instance("family constant:-3 2\np 1\n").alpha == make_vector({-3, -3}));
  CHECK(parse_failure("family k-approval:5 4\np 1\n").kind() == ErrorKind::UnsupportedM);
  CHECK(parse_failure("family nope 4\np 1\n").line() == 1);
}

TEST_CASE("parse errors carry the offending line") {
  auto e = parse_failure("alpha 0 1\np 1\n");
  CHECK(e.kind() == ErrorKind::NonMonotoneAlpha);
  CHECK(e.line() == 1);

  e = parse_failure("# header\nalpha 1 0 0\np 1\ns 1 1 1 3\n");
  CHECK(e.kind() == ErrorKind::NonPermutationOrder);
  CHECK(e.line() == 4);

  e = parse_failure("alpha 1 0 0\np 1\nt 2\nt 0\n");
  CHECK(e.kind() == ErrorKind::NonPositiveWeight);
  CHECK(e.line() == 4);

  e = parse_failure("alpha 1 0 0\np 4\n");
  CHECK(e.kind() == ErrorKind::CandidateOutOfRange);
  CHECK(e.line() == 2);

  e = parse_failure("alpha 1 x 0\np 1\n");
  CHECK(e.kind() == ErrorKind::Parse);
  CHECK(e.line() == 1);

  CHECK(parse_failure("alpha 1 0\nalpha 1 0\np 1\n").line() == 2);
  CHECK(parse_failure("alpha 1 0\nwhat 1\n").line() == 2);
  CHECK(parse_failure("alpha 1 0\n").kind() == ErrorKind::Parse);
  CHECK(parse_failure("p 1\n").kind() == ErrorKind::Parse);
}

TEST_CASE("directives may come in any order and carry comments") {
  auto inst = parse_instance("t 5 # coalition\n\np 2\n# votes\ns 1 2 1\nalpha 3 0\n");
  CHECK(inst.alpha == make_vector({3, 0}));
  CHECK(inst.p == 2);
  CHECK(inst.t_weights == std::vector<BigInt>{5});
  CHECK(serialize_instance(inst) == "alpha 3 0\np 2\ns 1 2 1\nt 5\n");
}

TEST_CASE("serialize then parse is the identity on random instances") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t m = 1 + rng() % 6;
    ManipulationInstance inst;
    inst.alpha = oracle::random_vector(rng, m, -20, 20);
    inst.s_voters = oracle::random_profile(rng, m, 5, 1000);
    if (iter % 7 == 0 && !inst.s_voters.empty()) inst.s_voters[0].weight <<= 130;
    for (std::size_t i = rng() % 4; i > 0; --i) inst.t_weights.emplace_back(1 + rng() % 500);
    inst.p = 1 + static_cast<Candidate>(rng() % m);
    const auto text = serialize_instance(inst);
    REQUIRE(parse_instance(text) == inst);
    REQUIRE(serialize_instance(parse_instance(text)) == text);
  }
}

TEST_CASE("witness files") {
  auto votes = parse_witness("t-vote 2 1 3 2\nt-vote 1 1 2 3\n", 2, 3);
  CHECK(votes == std::vector<PreferenceOrder>{{{1, 2, 3}}, {{1, 3, 2}}});
  CHECK(parse_witness(serialize_witness(votes), 2, 3) == votes);
  CHECK(parse_witness("", 0, 3).empty());

  CHECK_THROWS_AS(parse_witness("t-vote 1 1 2 3\n", 2, 3), ParseError);                  // missing
  CHECK_THROWS_AS(parse_witness("t-vote 1 1 2 3\nt-vote 1 1 2 3\n", 1, 3), ParseError);  // duplicate
  CHECK_THROWS_AS(parse_witness("t-vote 3 1 2 3\n", 2, 3), ParseError);                  // out of range
  CHECK_THROWS_AS(parse_witness("t-vote 1 1 1 3\n", 1, 3), ParseError);                  // not a permutation
  CHECK_THROWS_AS(parse_witness("vote 1 1 2 3\n", 1, 3), ParseError);
}

TEST_CASE("artifact files round trip through their metadata") {
  auto alpha = make_vector({4, 3, 2, 1});
  auto art = reduce(alpha, {{BigInt(2), BigInt(3), BigInt(5)}});
  auto text = serialize_artifact(art, alpha);
  auto meta = parse_artifact_metadata(text);
  CHECK(meta["case"] == "ELL_NE_1");
  CHECK(meta["K"] == "5");
  CHECK(meta["partition"] == "2 3 5");
  CHECK(parse_instance(text) == art.instance);

  auto back = parse_artifact(text);
  CHECK(back.instance == art.instance);
  CHECK(back.K == art.K);
  CHECK(back.source == art.source);

  std::string tampered = text + "t 1\n";
  CHECK_THROWS_AS(parse_artifact(tampered), Error);
}

TEST_CASE("family names") {
  CHECK(family_name(parse_family("k-approval:3")) == "k-approval:3");
  CHECK(family_name(parse_family("constant:7")) == "constant:7");
  CHECK(family_name(parse_family("half-approval")) == "half-approval");
  CHECK_THROWS_AS(parse_family("k-approval:"), Error);
  CHECK_THROWS_AS(parse_family("k-approval:0"), Error);
  CHECK_THROWS_AS(parse_family("condorcet"), Error);
}
