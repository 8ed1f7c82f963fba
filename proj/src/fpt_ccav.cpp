#include <algorithm>
#include <map>
#include <stdexcept>

#include "fpt_detail.hpp"

namespace borda {

namespace {

constexpr CandidateId kWildcard = static_cast<CandidateId>(-1);

// All r-subsets of {0..len-1} minus `skip`, as 0-based slot lists, in lex order.
std::vector<std::vector<std::size_t>> wildcard_sets(std::size_t len, std::size_t skip, std::size_t r) {
  std::vector<std::size_t> slots;
  for (std::size_t s = 0; s < len; ++s)
    if (s != skip) slots.push_back(s);
  std::vector<std::vector<std::size_t>> out;
  if (r > slots.size()) return out;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    std::vector<std::size_t> pick;
    for (std::size_t i : idx) pick.push_back(slots[i]);
    out.push_back(std::move(pick));
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == slots.size() - r + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<CandidateId> masked(const Vote& v, const std::vector<std::size_t>& slots) {
  std::vector<CandidateId> key = v.ranking;
  for (std::size_t s : slots) key[s] = kWildcard;
  return key;
}

// Largest class size of the r-th rule over `group` (r = 0: identical votes).
std::size_t largest_class(const std::vector<std::size_t>& group, const std::vector<Vote>& ballots,
                          std::size_t p_slot, std::size_t r) {
  std::map<std::vector<CandidateId>, std::size_t> size;
  std::size_t best = 0;
  for (std::size_t b : group) {
    const Vote& v = ballots[b];
    for (const auto& slots : wildcard_sets(v.length(), p_slot, r)) best = std::max(best, ++size[masked(v, slots)]);
  }
  return best;
}

// Trims every r-class of `group` to keep+1 members, lowest indices first.
void trim_classes(std::vector<std::size_t>& group, const std::vector<Vote>& ballots, std::size_t p_slot,
                  std::size_t r, std::uint64_t keep, std::size_t t) {
  for (std::size_t len = 1; len <= t; ++len) {
    for (const auto& slots : wildcard_sets(len, p_slot, r)) {
      std::map<std::vector<CandidateId>, std::uint64_t> seen;
      std::vector<std::size_t> next;
      for (std::size_t b : group) {
        const Vote& v = ballots[b];
        if (v.length() != len || ++seen[masked(v, slots)] <= keep + 1) next.push_back(b);
      }
      group = std::move(next);
    }
  }
}

}  // namespace

SolveResult solve_ccav_fpt(const ControlInstance& inst, const FptOptions& opts) {
  if (inst.kind != ControlKind::CCAV) throw DomainError("solve_ccav_fpt expects a ccav instance");
  SolveResult res;
  res.solver = "fpt-ccav";

  const Election e = projected(inst.base);
  const CandidateId p = e.special;
  const std::size_t m = e.m();
  const std::size_t t = detail::solver_t(e);
  const Rule rule = detail::solver_rule(e);
  const std::size_t l = inst.budget;

  const auto ballots = expand_ballots(inst.pool_votes);
  for (const Vote& v : ballots)
    if (v.length() > t) throw DomainError("pool is not " + std::to_string(t) + "-truncated");

  const auto types = vote_types(t, true);
  std::map<VoteType, std::size_t> type_index;
  for (std::size_t k = 0; k < types.size(); ++k) type_index[types[k]] = k;

  // only votes ranking p can help
  std::vector<std::size_t> ranked_p;
  std::vector<std::size_t> type_of(ballots.size(), 0);
  std::vector<std::size_t> avail(types.size(), 0);
  for (std::size_t b = 0; b < ballots.size(); ++b) {
    const VoteType ty = vote_type(ballots[b], p);
    if (ty.p_pos == 0) continue;
    type_of[b] = type_index.at(ty);
    ++avail[type_of[b]];
    ranked_p.push_back(b);
  }

  const auto score = shifted_score_table(e);
  const bool strict = inst.model == WinnerModel::Unique;
  std::vector<std::vector<ScoreValue>> gain(ballots.size());
  for (std::size_t b : ranked_p) {
    gain[b].resize(e.universe_size());
    for (CandidateId c : e.active) gain[b][c] = shifted_score_in_vote(c, ballots[b], m, rule);
  }

  const auto visit = [&](const std::vector<std::size_t>& counts) -> bool {
    ScoreValue f = score[p];
    for (std::size_t k = 0; k < types.size(); ++k)
      f += static_cast<std::int64_t>(counts[k]) * type_p_score(types[k], m, rule);

    std::vector<std::size_t> survivors;
    if (!opts.data_reduction) {
      survivors = ranked_p;
    } else {
      // cleaning rule
      for (std::size_t b : ranked_p) {
        bool clean = true;
        for (CandidateId c : e.active) {
          if (c == p) continue;
          const ScoreValue after = score[c] + gain[b][c];
          if (strict ? after >= f : after > f) {
            clean = false;
            break;
          }
        }
        if (clean) survivors.push_back(b);
      }
      // identical votes rule, then DR1..DR(t-1), per p-position
      std::vector<std::size_t> reduced;
      for (std::size_t i = 1; i <= t; ++i) {
        std::vector<std::size_t> group;
        for (std::size_t b : survivors)
          if (position_of(p, ballots[b]) == i) group.push_back(b);
        if (group.empty()) continue;
        trim_classes(group, ballots, i - 1, 0, dr_threshold(0, t, l, opts.thresholds), t);
        for (std::size_t r = 1; r + 1 <= t; ++r) {
          const std::uint64_t prev = dr_threshold(r - 1, t, l, opts.thresholds);
          if (largest_class(group, ballots, i - 1, r - 1) > prev + 1)
            throw std::logic_error("reduction rule applied while its predecessor is still applicable");
          trim_classes(group, ballots, i - 1, r, dr_threshold(r, t, l, opts.thresholds), t);
        }
        reduced.insert(reduced.end(), group.begin(), group.end());
      }
      std::sort(reduced.begin(), reduced.end());
      survivors = std::move(reduced);
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
