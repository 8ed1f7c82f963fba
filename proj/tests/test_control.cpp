#include <doctest.h>

#include <random>

#include "borda/control.hpp"
#include "borda/generator.hpp"
#include "support/fixtures.hpp"
#include "support/naive.hpp"

using namespace borda;

namespace {

std::int64_t score_of(const Election& e, const std::string& label) {
  return total_score(fixture::id(e, label), e).doubled() / 2;
}

Solution picks_of(const Election& e, std::initializer_list<const char*> labels) {
  Solution s;
  for (const char* l : labels) s.picks.push_back(fixture::id(e, l));
  return s;
}

ControlInstance random_instance(std::mt19937_64& rng, ControlKind kind, Rule rule) {
  GenParams g;
  g.seed = rng();
  g.m = 2 + rng() % 4;
  g.t = rule == Rule::BordaComplete ? g.m : 1 + rng() % std::min<std::size_t>(3, g.m);
  g.n = rng() % 7;
  g.rule = rule;
  g.kind = kind;
  g.pool = rng() % 5;
  g.budget = 0;
  ControlInstance inst = generate_instance(g);
  inst.budget = rng() % (1 + naive::pool_of(inst).size());
  return inst;
}

std::vector<std::size_t> random_picks(std::mt19937_64& rng, const ControlInstance& inst) {
  std::vector<std::size_t> out;
  for (std::size_t x : naive::pool_of(inst))
    if (rng() % 3 == 0) out.push_back(x);
  return out;
}

const Rule kRules[] = {Rule::BordaUp, Rule::BordaDown, Rule::BordaAv, Rule::BordaComplete};
const ControlKind kKinds[] = {ControlKind::CCAV, ControlKind::CCDV, ControlKind::CCAC, ControlKind::CCDC};

}  // namespace

TEST_CASE("deleting the third vote of the complete example") {
  const ControlInstance inst = fixture::instance("ex2.inst");
  const Election after = apply(inst, Solution{{2}});
  CHECK(score_of(after, "c1") == 4);
  CHECK(score_of(after, "c2") == 1);
  CHECK(score_of(after, "c3") == 2);
  CHECK(score_of(after, "p") == 5);
  CHECK(verify(inst, Solution{{2}}));
  const Verdict none = check(inst, Solution{});
  CHECK_FALSE(none.ok);
  CHECK(none.reason == "special candidate does not win");
  CHECK(pick_label(inst, 2) == "v3");
}

TEST_CASE("empty solution leaves the election unchanged") {
  const ControlInstance inst = fixture::instance("ex2.inst");
  CHECK(score_table(apply(inst, Solution{})) == score_table(inst.base));
}

TEST_CASE("adding c4 and c5") {
  const ControlInstance inst = fixture::instance("ex3.inst");
  const Election before = projected(inst.base);
  CHECK(score_of(before, "c1") == 4);
  CHECK(score_of(before, "c2") == 1);
  CHECK(score_of(before, "p") == 3);
  const Election after = apply(inst, picks_of(inst.base, {"c4", "c5"}));
  CHECK(score_of(after, "c1") == 6);
  CHECK(score_of(after, "c2") == 3);
  CHECK(score_of(after, "c4") == 3);
  CHECK(score_of(after, "c5") == 6);
  CHECK(score_of(after, "p") == 7);
  CHECK(verify(inst, picks_of(inst.base, {"c4", "c5"})));
}

TEST_CASE("candidate addition examples") {
  SUBCASE("up") {
    const ControlInstance inst = fixture::instance("ex4.inst");
    const Election before = projected(inst.base);
    CHECK(score_of(before, "p") == 1);
    CHECK(score_of(before, "c1") == 1);
    const Election with_c2 = apply(inst, picks_of(inst.base, {"c2"}));
    CHECK(score_of(with_c2, "p") == 2);
    CHECK(score_of(with_c2, "c1") == 2);
    const Election with_c3 = apply(inst, picks_of(inst.base, {"c3"}));
    CHECK(score_of(with_c3, "p") == 3);
    CHECK(score_of(with_c3, "c1") == 2);
    CHECK(verify(inst, picks_of(inst.base, {"c3"})));
    CHECK_FALSE(verify(inst, picks_of(inst.base, {"c2"})));
  }
  SUBCASE("down") {
    const ControlInstance inst = fixture::instance("ex6.inst");
    const Election before = projected(inst.base);
    // The printed pre-addition score (1) is a typo: p>c1 and c1>p give 2+1 each.
    CHECK(score_of(before, "p") == 3);
    CHECK(score_of(before, "c1") == 3);
    const Election with_c2 = apply(inst, picks_of(inst.base, {"c2"}));
    CHECK(score_of(with_c2, "p") == 3);
    CHECK(score_of(with_c2, "c1") == 3);
    const Election with_c3 = apply(inst, picks_of(inst.base, {"c3"}));
    CHECK(score_of(with_c3, "p") == 4);
    CHECK(score_of(with_c3, "c1") == 3);
    CHECK(verify(inst, picks_of(inst.base, {"c3"})));
  }
}

TEST_CASE("candidate deletion examples") {
  SUBCASE("down") {
    const ControlInstance inst = fixture::instance("ex5.inst");
    const Election& e = inst.base;
    const CandidateId p = fixture::id(e, "p"), c1 = fixture::id(e, "c1");
    // Printed as 5; the two length-3 votes give p 1+3 and c1 3+1.
    CHECK(diff(p, c1, e) == ScoreValue{});
    CHECK(total_score(p, e) == ScoreValue::from_int(4));
    CHECK(diff(p, c1, apply(inst, picks_of(e, {"c2"}))) == ScoreValue::from_int(-1));
    CHECK(diff(p, c1, apply(inst, picks_of(e, {"c3"}))) == ScoreValue::from_int(1));
    CHECK(verify(inst, picks_of(e, {"c3"})));
  }
  SUBCASE("up") {
    const ControlInstance inst = fixture::instance("ex7.inst");
    const Election& e = inst.base;
    const CandidateId p = fixture::id(e, "p"), c1 = fixture::id(e, "c1");
    CHECK(total_score(p, e) == ScoreValue::from_int(4));
    CHECK(total_score(c1, e) == ScoreValue::from_int(4));
    CHECK(diff(p, c1, apply(inst, picks_of(e, {"c2"}))) == ScoreValue::from_int(-1));
    CHECK(diff(p, c1, apply(inst, picks_of(e, {"c3"}))) == ScoreValue::from_int(1));
    CHECK(verify(inst, picks_of(e, {"c3"})));
  }
}

TEST_CASE("illegal picks") {
  const ControlInstance del = fixture::instance("ex7.inst");
  const CandidateId p = fixture::id(del.base, "p");
  CHECK_THROWS_AS(apply(del, Solution{{p}}), InvalidSolution);
  CHECK(check(del, Solution{{p}}).reason == "the special candidate cannot be deleted");
  const ControlInstance votes = fixture::instance("ex2.inst");
  CHECK_THROWS_AS(apply(votes, Solution{{7}}), InvalidSolution);
  CHECK_THROWS_AS(apply(votes, Solution{{1, 1}}), InvalidSolution);
  CHECK(check(votes, Solution{{0, 1}}).reason == "budget");
}

TEST_CASE("zero budget with p already winning is a yes-instance") {
  ControlInstance inst = fixture::instance("ex2.inst");
  inst.base.votes.pop_back();
  inst.budget = 0;
  CHECK(verify(inst, Solution{}));
}

TEST_CASE("destructive goal through check_destructive") {
  const ControlInstance inst = fixture::instance("ex2.inst");
  CHECK(check_destructive(inst, Solution{}).ok);
  CHECK_FALSE(check_destructive(inst, Solution{{2}}).ok);
}

TEST_CASE("instance validation") {
  ControlInstance inst = fixture::instance("ex3.inst");
  CHECK_NOTHROW(validate(inst));
  SUBCASE("pool overlaps registered candidates") {
    inst.pool_candidates.push_back(0);
    CHECK_THROWS_AS(validate(inst), DomainError);
  }
  SUBCASE("budget above pool size") {
    inst.budget = 4;
    CHECK_THROWS_AS(validate(inst), DomainError);
  }
  SUBCASE("pool votes on a candidate-control instance") {
    inst.pool_votes.push_back(Vote{{0}, 1});
    CHECK_THROWS_AS(validate(inst), DomainError);
  }
}

TEST_CASE("property: apply agrees with the definition-level edit") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const ControlInstance inst = random_instance(rng, kKinds[trial % 4], kRules[(trial / 4) % 4]);
    const auto picks = random_picks(rng, inst);
    const Election after = apply(inst, Solution{picks});
    const naive::Edited ref = naive::edit(inst, picks);
    REQUIRE(after.active == ref.active);
    std::vector<std::size_t> act(ref.active.begin(), ref.active.end());
    const auto expect = naive::doubled_scores(act, inst.base.labels.size(), ref.votes, inst.base.rule);
    const auto got = score_table(after);
    for (CandidateId c = 0; c < got.size(); ++c) REQUIRE(got[c].doubled() == expect[c]);
    REQUIRE(verify(inst, Solution{picks}) == (picks.size() <= inst.budget && naive::succeeds(inst, picks)));
  }
}

TEST_CASE("property: verify implies the budget holds") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    const ControlInstance inst = random_instance(rng, kKinds[trial % 4], kRules[(trial / 4) % 4]);
    const auto picks = random_picks(rng, inst);
    if (verify(inst, Solution{picks})) REQUIRE(picks.size() <= inst.budget);
  }
}

TEST_CASE("property: vote control monotonicity") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 1000; ++trial) {
    const ControlKind kind = trial % 2 ? ControlKind::CCAV : ControlKind::CCDV;
    const ControlInstance inst = random_instance(rng, kind, kRules[(trial / 2) % 4]);
    const auto before = score_table(inst.base);
    const auto after = score_table(apply(inst, Solution{random_picks(rng, inst)}));
    for (CandidateId c : inst.base.active) {
      if (kind == ControlKind::CCAV) REQUIRE(after[c] >= before[c]);
      else REQUIRE(after[c] <= before[c]);
    }
  }
}

TEST_CASE("property: candidate control monotonicity") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 1000; ++trial) {
    const bool add = trial % 2;
    const ControlInstance inst =
        random_instance(rng, add ? ControlKind::CCAC : ControlKind::CCDC, add ? Rule::BordaDown : Rule::BordaUp);
    const auto before = score_table(projected(inst.base));
    const Election after_e = apply(inst, Solution{random_picks(rng, inst)});
    const auto after = score_table(after_e);
    for (CandidateId c : after_e.active) {
      if (!inst.base.is_active(c)) continue;
      if (add) REQUIRE(after[c] >= before[c]);
      else REQUIRE(after[c] <= before[c]);
    }
  }
}
