#include <algorithm>
#include <map>

#include "fpt_detail.hpp"

namespace borda {

SolveResult solve_ccdv_fpt(const ControlInstance& inst, const FptOptions& opts) {
  if (inst.kind != ControlKind::CCDV) throw DomainError("solve_ccdv_fpt expects a ccdv instance");
  SolveResult res;
  res.solver = "fpt-ccdv";

  const Election e = projected(inst.base);
  const CandidateId p = e.special;
  const std::size_t m = e.m();
  const std::size_t t = detail::solver_t(e);
  const Rule rule = detail::solver_rule(e);
  const std::size_t l = inst.budget;

  const auto ballots = expand_ballots(e.votes);
  for (const Vote& v : ballots)
    if (v.length() > t) throw DomainError("instance is not " + std::to_string(t) + "-truncated");

  const auto types = vote_types(t, false);
  std::map<VoteType, std::size_t> type_index;
  for (std::size_t k = 0; k < types.size(); ++k) type_index[types[k]] = k;
  std::vector<std::size_t> type_of(ballots.size());
  std::vector<std::size_t> avail(types.size(), 0);
  for (std::size_t b = 0; b < ballots.size(); ++b) {
    type_of[b] = type_index.at(vote_type(ballots[b], p));
    ++avail[type_of[b]];
  }

  const auto score = shifted_score_table(e);
  const bool strict = inst.model == WinnerModel::Unique;

  const auto visit = [&](const std::vector<std::size_t>& counts) -> bool {
    ScoreValue f = score[p];
    for (std::size_t k = 0; k < types.size(); ++k)
      f -= static_cast<std::int64_t>(counts[k]) * type_p_score(types[k], m, rule);

    std::vector<CandidateId> plus;
    for (CandidateId c : e.active)
      if (c != p && (strict ? score[c] >= f : score[c] > f)) plus.push_back(c);
    if (plus.size() > t * l) return false;

    std::vector<std::size_t> survivors;
    if (opts.data_reduction) {
      // similar: same length, same positions of p and every C+ candidate
      std::map<std::vector<std::size_t>, std::size_t> kept;
      for (std::size_t b = 0; b < ballots.size(); ++b) {
        std::vector<std::size_t> sig{ballots[b].length(), position_of(p, ballots[b])};
        for (CandidateId c : plus) sig.push_back(position_of(c, ballots[b]));
        if (++kept[sig] <= l + 1) survivors.push_back(b);
      }
    } else {
      survivors.resize(ballots.size());
      for (std::size_t b = 0; b < ballots.size(); ++b) survivors[b] = b;
    }
    res.stats.votes_after_reduction = std::max(res.stats.votes_after_reduction, survivors.size());

    Solution sol;
    auto found = detail::find_exact_subset(survivors, type_of, ballots, counts, res.stats.subsets_examined,
                                           [&](const std::vector<std::size_t>& picks) {
                                             sol.picks = picks;
                                             return verify(inst, sol);
                                           });
    if (!found) return false;
    res.solution = Solution{*found};
    return true;
  };

  res.stats.combinations =
      detail::for_each_combination(avail, l, combination_bound(l, types.size()), visit);
  return res;
}

}  // namespace borda
