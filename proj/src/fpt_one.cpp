#include <algorithm>

#include "fpt_detail.hpp"

namespace borda {

namespace {

void require_t1(const ControlInstance& inst, ControlKind kind, const char* who) {
  if (inst.kind != kind) throw DomainError(std::string(who) + " expects a " + kind_name(kind) + " instance");
  if (!inst.base.t_cap || *inst.base.t_cap != 1)
    throw DomainError(std::string(who) + " requires 1-truncated votes");
}

}  // namespace

SolveResult solve_1ccdc(const ControlInstance& inst) {
  require_t1(inst, ControlKind::CCDC, "solve_1ccdc");
  SolveResult res;
  res.solver = "fpt-1ccdc";
  const Election& e = inst.base;
  const auto score = score_table(e);
  const ScoreValue sp = score[e.special];
  const bool strict = inst.model == WinnerModel::Unique;
  Solution plus;
  for (CandidateId c : e.active)
    if (c != e.special && (strict ? score[c] >= sp : score[c] > sp)) plus.picks.push_back(c);
  res.stats.combinations = 1;
  if (plus.picks.size() <= inst.budget) res.solution = std::move(plus);
  return res;
}

SolveResult solve_1ccac(const ControlInstance& inst) {
  require_t1(inst, ControlKind::CCAC, "solve_1ccac");
  SolveResult res;
  res.solver = "fpt-1ccac";
  const auto w = winners(projected(inst.base), inst.model);
  res.stats.combinations = 1;
  if (std::find(w.begin(), w.end(), inst.base.special) != w.end()) res.solution = Solution{};
  return res;
}

}  // namespace borda
