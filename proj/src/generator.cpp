#include "borda/generator.hpp"

#include <string>

namespace borda {

namespace {

Vote draw_vote(Lcg& rng, const std::vector<CandidateId>& from, std::size_t len) {
  std::vector<CandidateId> deck = from;
  Vote v;
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t j = i + rng.below(deck.size() - i);
    std::swap(deck[i], deck[j]);
    v.ranking.push_back(deck[i]);
  }
  return v;
}

}  // namespace

ControlInstance generate_instance(const GenParams& g) {
  if (g.m == 0) throw DomainError("m must be positive");
  if (g.t == 0 || g.t > g.m) throw DomainError("t must satisfy 1 <= t <= m");
  const bool complete = g.t == g.m;
  if (g.rule == Rule::BordaComplete && !complete) throw DomainError("rule borda needs t = m");
  const bool ccac = g.kind == ControlKind::CCAC;
  const bool ccav = g.kind == ControlKind::CCAV;

  ControlInstance inst;
  inst.kind = g.kind;
  inst.budget = g.budget;
  inst.model = g.model;
  Election& e = inst.base;
  e.rule = g.rule;
  if (!complete) e.t_cap = g.t;
  e.labels.push_back("p");
  for (std::size_t i = 1; i < g.m; ++i) e.labels.push_back("c" + std::to_string(i));
  for (CandidateId c = 0; c < g.m; ++c) e.active.push_back(c);
  e.special = 0;
  if (ccac)
    for (std::size_t i = 1; i <= g.pool; ++i) {
      e.labels.push_back("a" + std::to_string(i));
      inst.pool_candidates.push_back(static_cast<CandidateId>(e.labels.size() - 1));
    }

  Lcg rng(g.seed);
  std::vector<CandidateId> voting(e.labels.size());
  for (CandidateId c = 0; c < voting.size(); ++c) voting[c] = c;
  const auto length = [&](std::size_t universe) {
    return complete ? universe : static_cast<std::size_t>(rng.below(g.t + 1));
  };
  for (std::size_t i = 0; i < g.n; ++i) e.votes.push_back(draw_vote(rng, voting, length(voting.size())));
  if (ccav)
    for (std::size_t i = 0; i < g.pool; ++i) inst.pool_votes.push_back(draw_vote(rng, e.active, length(g.m)));

  validate(inst);
  return inst;
}

}  // namespace borda
