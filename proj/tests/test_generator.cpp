#include <doctest.h>

#include "borda/generator.hpp"
#include "borda/io.hpp"

using namespace borda;

TEST_CASE("LCG sequence") {
  Lcg rng(0);
  // state 1442695040888963407, high word 0x14057B7E
  CHECK(rng.below(std::uint64_t{1} << 32) == 0x14057B7Eu);
  Lcg a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.below(1000) == b.below(1000));
}

TEST_CASE("same seed gives identical bytes") {
  GenParams g;
  g.seed = 12345;
  g.m = 5;
  g.n = 6;
  g.t = 3;
  g.kind = ControlKind::CCAV;
  g.pool = 4;
  g.budget = 2;
  CHECK(serialize(generate_instance(g)) == serialize(generate_instance(g)));
  GenParams other = g;
  other.seed = 12346;
  CHECK(serialize(generate_instance(other)) != serialize(generate_instance(g)));
}

TEST_CASE("t = m yields complete votes") {
  GenParams g;
  g.m = 4;
  g.t = 4;
  g.n = 5;
  g.rule = Rule::BordaComplete;
  g.kind = ControlKind::CCDV;
  const ControlInstance inst = generate_instance(g);
  CHECK_FALSE(inst.base.t_cap.has_value());
  for (const Vote& v : inst.base.votes) CHECK(v.length() == 4);
}

TEST_CASE("lengths stay within [0, t] and pools are sized as asked") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    GenParams g;
    g.seed = seed;
    g.m = 6;
    g.t = 3;
    g.n = 8;
    g.kind = seed % 2 ? ControlKind::CCAV : ControlKind::CCAC;
    g.pool = 5;
    g.budget = 2;
    const ControlInstance inst = generate_instance(g);
    for (const Vote& v : inst.base.votes) CHECK(v.length() <= 3);
    if (g.kind == ControlKind::CCAV) CHECK(inst.pool_votes.size() == 5);
    else CHECK(inst.pool_candidates.size() == 5);
    CHECK(inst.base.labels[0] == "p");
  }
}

TEST_CASE("invalid parameters") {
  GenParams g;
  g.m = 3;
  g.t = 4;
  CHECK_THROWS_AS(generate_instance(g), DomainError);
  g.t = 0;
  CHECK_THROWS_AS(generate_instance(g), DomainError);
  g.t = 2;
  g.rule = Rule::BordaComplete;
  CHECK_THROWS_AS(generate_instance(g), DomainError);
  g.rule = Rule::BordaUp;
  g.budget = 10;
  CHECK_THROWS_AS(generate_instance(g), DomainError);
}
