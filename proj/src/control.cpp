#include "borda/control.hpp"

#include <algorithm>

namespace borda {

const char* kind_name(ControlKind k) {
  switch (k) {
    case ControlKind::CCAV: return "ccav";
    case ControlKind::CCDV: return "ccdv";
    case ControlKind::CCAC: return "ccac";
    case ControlKind::CCDC: return "ccdc";
  }
  return "?";
}

bool is_vote_control(ControlKind k) { return k == ControlKind::CCAV || k == ControlKind::CCDV; }

namespace {

std::size_t ballots_in(const std::vector<Vote>& votes) {
  std::size_t n = 0;
  for (const Vote& v : votes) n += static_cast<std::size_t>(v.multiplicity);
  return n;
}

void check_ranking(const Vote& v, const std::vector<char>& allowed, std::size_t universe,
                   const std::string& where) {
  if (v.multiplicity <= 0) throw DomainError(where + ": multiplicity must be positive");
  std::vector<char> seen(universe, 0);
  for (CandidateId c : v.ranking) {
    if (c >= universe || !allowed[c]) throw DomainError(where + ": candidate not allowed here");
    if (seen[c]) throw DomainError(where + ": candidate ranked twice");
    seen[c] = 1;
  }
}

}  // namespace

void validate(const ControlInstance& inst) {
  const Election& e = inst.base;
  validate(e);
  const std::size_t u = e.universe_size();
  if (inst.kind != ControlKind::CCAV && !inst.pool_votes.empty())
    throw DomainError("pool votes are only meaningful for ccav");
  if (inst.kind != ControlKind::CCAC && !inst.pool_candidates.empty())
    throw DomainError("pool candidates are only meaningful for ccac");

  switch (inst.kind) {
    case ControlKind::CCAV: {
      std::vector<char> allowed(u, 0);
      for (CandidateId c : e.active) allowed[c] = 1;
      for (std::size_t i = 0; i < inst.pool_votes.size(); ++i) {
        const Vote& v = inst.pool_votes[i];
        const std::string where = "pool vote " + std::to_string(i + 1);
        check_ranking(v, allowed, u, where);
        if (e.t_cap && v.length() > *e.t_cap) throw DomainError(where + ": longer than the truncation bound");
        if (!e.t_cap && v.length() != e.m()) throw DomainError(where + ": complete vote must rank every candidate");
      }
      if (inst.budget > ballots_in(inst.pool_votes)) throw DomainError("budget exceeds the number of pool votes");
      break;
    }
    case ControlKind::CCDV:
      if (inst.budget > ballots_in(e.votes)) throw DomainError("budget exceeds the number of votes");
      break;
    case ControlKind::CCAC: {
      const auto& pool = inst.pool_candidates;
      if (!std::is_sorted(pool.begin(), pool.end()) || std::adjacent_find(pool.begin(), pool.end()) != pool.end())
        throw DomainError("pool candidates must be sorted and duplicate-free");
      std::vector<char> allowed(u, 0);
      for (CandidateId c : e.active) allowed[c] = 1;
      for (CandidateId c : pool) {
        if (c >= u) throw DomainError("pool candidate outside universe");
        if (allowed[c]) throw DomainError("pool candidate '" + e.labels[c] + "' is already registered");
        allowed[c] = 1;
      }
      const std::size_t full = e.m() + pool.size();
      for (std::size_t i = 0; i < e.votes.size(); ++i) {
        const Vote& v = e.votes[i];
        const std::string where = "vote " + std::to_string(i + 1);
        check_ranking(v, allowed, u, where);
        if (e.t_cap && v.length() > *e.t_cap) throw DomainError(where + ": longer than the truncation bound");
        if (!e.t_cap && v.length() != full) throw DomainError(where + ": complete vote must rank every candidate");
      }
      if (inst.budget > pool.size()) throw DomainError("budget exceeds the number of pool candidates");
      break;
    }
    case ControlKind::CCDC:
      if (inst.budget + 1 > e.m()) throw DomainError("budget exceeds the number of deletable candidates");
      break;
  }
}

std::vector<Vote> expand_ballots(const std::vector<Vote>& votes) {
  std::vector<Vote> out;
  out.reserve(ballots_in(votes));
  for (const Vote& v : votes)
    for (std::int64_t k = 0; k < v.multiplicity; ++k) out.push_back(Vote{v.ranking, 1});
  return out;
}

std::vector<std::size_t> legal_picks(const ControlInstance& inst) {
  std::vector<std::size_t> out;
  switch (inst.kind) {
    case ControlKind::CCAV:
    case ControlKind::CCDV: {
      const std::size_t n = ballots_in(inst.kind == ControlKind::CCAV ? inst.pool_votes : inst.base.votes);
      out.resize(n);
      for (std::size_t i = 0; i < n; ++i) out[i] = i;
      break;
    }
    case ControlKind::CCAC:
      out.assign(inst.pool_candidates.begin(), inst.pool_candidates.end());
      break;
    case ControlKind::CCDC:
      for (CandidateId c : inst.base.active)
        if (c != inst.base.special) out.push_back(c);
      break;
  }
  return out;
}

std::string pick_label(const ControlInstance& inst, std::size_t pick) {
  if (is_vote_control(inst.kind)) return "v" + std::to_string(pick + 1);
  if (pick < inst.base.universe_size()) return inst.base.labels[pick];
  return "#" + std::to_string(pick);
}

Election apply(const ControlInstance& inst, const Solution& sol) {
  std::vector<std::size_t> picks = sol.picks;
  std::sort(picks.begin(), picks.end());
  if (std::adjacent_find(picks.begin(), picks.end()) != picks.end())
    throw InvalidSolution("duplicate pick");
  const auto legal = legal_picks(inst);
  for (std::size_t x : picks)
    if (!std::binary_search(legal.begin(), legal.end(), x)) {
      if (inst.kind == ControlKind::CCDC && x == inst.base.special)
        throw InvalidSolution("the special candidate cannot be deleted");
      throw InvalidSolution("unknown pick " + pick_label(inst, x));
    }

  Election out = inst.base;
  switch (inst.kind) {
    case ControlKind::CCAV: {
      auto pool = expand_ballots(inst.pool_votes);
      for (std::size_t x : picks) out.votes.push_back(pool[x]);
      break;
    }
    case ControlKind::CCDV: {
      auto ballots = expand_ballots(inst.base.votes);
      out.votes.clear();
      std::size_t next = 0;
      for (std::size_t i = 0; i < ballots.size(); ++i) {
        if (next < picks.size() && picks[next] == i) {
          ++next;
          continue;
        }
        out.votes.push_back(std::move(ballots[i]));
      }
      break;
    }
    case ControlKind::CCAC: {
      CandidateSet grown;
      std::merge(out.active.begin(), out.active.end(), picks.begin(), picks.end(), std::back_inserter(grown));
      out.active = std::move(grown);
      break;
    }
    case ControlKind::CCDC: {
      CandidateSet shrunk;
      std::set_difference(out.active.begin(), out.active.end(), picks.begin(), picks.end(),
                          std::back_inserter(shrunk));
      out.active = std::move(shrunk);
      break;
    }
  }
  return projected(out);
}

namespace {

Verdict judge(const ControlInstance& inst, const Solution& sol, bool constructive) {
  if (sol.picks.size() > inst.budget) return {false, "budget"};
  Election after;
  try {
    after = apply(inst, sol);
  } catch (const InvalidSolution& err) {
    return {false, err.what()};
  }
  const auto w = winners(after, inst.model);
  const bool p_wins = std::find(w.begin(), w.end(), inst.base.special) != w.end();
  if (constructive && !p_wins) return {false, "special candidate does not win"};
  if (!constructive && p_wins) return {false, "special candidate still wins"};
  return {true, {}};
}

}  // namespace

Verdict check(const ControlInstance& inst, const Solution& sol) { return judge(inst, sol, true); }

bool verify(const ControlInstance& inst, const Solution& sol) { return check(inst, sol).ok; }

Verdict check_destructive(const ControlInstance& inst, const Solution& sol) {
  return judge(inst, sol, false);
}

}  // namespace borda
