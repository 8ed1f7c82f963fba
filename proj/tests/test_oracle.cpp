#include <doctest.h>

#include <random>

#include "borda/generator.hpp"
#include "borda/graph.hpp"
#include "borda/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/naive.hpp"

using namespace borda;

TEST_CASE("brute force on the worked examples") {
  const auto ex2 = solve_control_bruteforce(fixture::instance("ex2.inst"));
  REQUIRE(ex2.feasible());
  CHECK(ex2.solution->picks == std::vector<std::size_t>{2});
  CHECK(ex2.solver == "brute");

  const ControlInstance ex3 = fixture::instance("ex3.inst");
  const auto r3 = solve_control_bruteforce(ex3);
  REQUIRE(r3.feasible());
  CHECK(r3.solution->picks ==
        std::vector<std::size_t>{fixture::id(ex3.base, "c4"), fixture::id(ex3.base, "c5")});

  for (const char* name : {"ex4.inst", "ex6.inst"}) {
    CAPTURE(name);
    const ControlInstance inst = fixture::instance(name);
    const auto r = solve_control_bruteforce(inst);
    REQUIRE(r.feasible());
    CHECK(r.solution->picks == std::vector<std::size_t>{fixture::id(inst.base, "c3")});
  }
  // Deleting the rival c1 itself also works and comes first.
  for (const char* name : {"ex5.inst", "ex7.inst"}) {
    CAPTURE(name);
    const ControlInstance inst = fixture::instance(name);
    const auto r = solve_control_bruteforce(inst);
    REQUIRE(r.feasible());
    CHECK(r.solution->picks == std::vector<std::size_t>{fixture::id(inst.base, "c1")});
    CHECK(verify(inst, Solution{{fixture::id(inst.base, "c3")}}));
  }
}

TEST_CASE("p already the unique winner gives the empty solution") {
  ControlInstance inst = fixture::instance("ex2.inst");
  inst.base.votes.pop_back();
  for (std::size_t l : {0, 1, 2}) {
    inst.budget = l;
    const auto r = solve_control_bruteforce(inst);
    REQUIRE(r.feasible());
    CHECK(r.solution->picks.empty());
  }
}

TEST_CASE("subset cap raises BudgetExceeded") {
  ControlInstance inst = fixture::instance("ex2.inst");
  inst.base.votes[2].ranking = inst.base.votes[0].ranking;
  inst.budget = 0;
  OracleOptions tiny;
  tiny.max_subsets = 0;
  CHECK_THROWS_AS(solve_control_bruteforce(inst, tiny), BudgetExceeded);
}

TEST_CASE("property: brute force returns the least solution of the unpruned enumeration") {
  std::mt19937_64 rng(7);
  const ControlKind kinds[] = {ControlKind::CCAV, ControlKind::CCDV, ControlKind::CCAC, ControlKind::CCDC};
  const Rule rules[] = {Rule::BordaUp, Rule::BordaDown, Rule::BordaAv};
  for (int trial = 0; trial < 1200; ++trial) {
    GenParams g;
    g.seed = rng();
    g.m = 2 + rng() % 4;
    g.t = 1 + rng() % std::min<std::size_t>(3, g.m);
    g.n = rng() % 8;
    g.rule = g.t == g.m ? Rule::BordaUp : rules[rng() % 3];
    g.kind = kinds[trial % 4];
    g.pool = rng() % 7;
    g.budget = 0;
    g.model = rng() % 4 ? WinnerModel::Unique : WinnerModel::CoWinner;
    ControlInstance inst = generate_instance(g);
    inst.budget = rng() % (1 + std::min<std::size_t>(3, naive::pool_of(inst).size()));
    const auto r = solve_control_bruteforce(inst);
    const auto ref = naive::control(inst);
    REQUIRE(r.feasible() == ref.has_value());
    if (ref) {
      REQUIRE(r.solution->picks == *ref);
      REQUIRE(verify(inst, *r.solution));
    }
  }
}

TEST_CASE("closed neighborhoods") {
  const Graph k3 = fixture::graph("k3.graph");
  const Graph p4 = fixture::graph("p4.graph");
  CHECK(closed_neighborhood(k3, 0) == std::vector<Vertex>{0, 1, 2});
  CHECK(closed_neighborhood(p4, 1) == std::vector<Vertex>{0, 1, 2});
  CHECK(closed_neighborhood(make_graph(3, {{0, 1}}), 2) == std::vector<Vertex>{2});
  CHECK(degree(p4, 3) == 1);
  CHECK_THROWS_AS(closed_neighborhood(k3, 3), DomainError);
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(make_graph(3, {{0, 0}}), DomainError);
  CHECK_THROWS_AS(make_graph(3, {{0, 1}, {1, 0}}), DomainError);
  CHECK_THROWS_AS(make_graph(3, {{0, 3}}), DomainError);
  CHECK(make_graph(3, {{2, 0}}).edges == std::vector<std::pair<Vertex, Vertex>>{{0, 2}});
}

TEST_CASE("dominating sets on small graphs") {
  CHECK(solve_dominating_set(fixture::graph("k3.graph"), 1) == std::vector<Vertex>{0});
  CHECK_FALSE(solve_dominating_set(fixture::graph("p4.graph"), 1).has_value());
  CHECK(solve_dominating_set(fixture::graph("p4.graph"), 2) == naive::dominating_set(fixture::graph("p4.graph"), 2));
  CHECK(solve_dominating_set(fixture::graph("p4.graph"), 2) == std::vector<Vertex>{0, 2});
}

TEST_CASE("property: dominating set search on every graph up to five vertices") {
  int checked = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Graph& g : naive::all_graphs(n))
      for (std::size_t k = 0; k <= n; ++k) {
        const auto got = solve_dominating_set(g, k);
        const auto ref = naive::dominating_set(g, k);
        REQUIRE(got.has_value() == ref.has_value());
        if (got) {
          REQUIRE(*got == *ref);
          REQUIRE(dominates(g, *got));
        }
        ++checked;
      }
  CHECK(naive::all_graphs(4).size() == 11);
  CHECK(naive::all_graphs(5).size() == 34);
  CHECK(checked > 100);
}
