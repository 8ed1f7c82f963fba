#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "fpt_detail.hpp"

namespace borda {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return b > std::numeric_limits<std::uint64_t>::max() - a ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

}  // namespace

VoteType vote_type(const Vote& v, CandidateId p) { return {position_of(p, v), v.length()}; }

std::vector<VoteType> vote_types(std::size_t t, bool p_ranked) {
  std::vector<VoteType> out;
  for (std::size_t j = 0; j <= t; ++j)
    for (std::size_t i = p_ranked ? 1 : 0; i <= j; ++i) out.push_back({i, j});
  return out;
}

std::size_t TypeCombination::total() const {
  std::size_t s = 0;
  for (std::size_t c : counts) s += c;
  return s;
}

ScoreValue type_p_score(VoteType ty, std::size_t m, Rule rule) {
  if (ty.p_pos > ty.length || ty.length > m) throw DomainError("invalid vote type");
  if (ty.p_pos == 0) return {};
  const auto mm = static_cast<std::int64_t>(m);
  const auto i = static_cast<std::int64_t>(ty.p_pos);
  const auto j = static_cast<std::int64_t>(ty.length);
  switch (rule) {
    case Rule::BordaComplete:
    case Rule::BordaUp: return ScoreValue::from_int(mm - i);
    case Rule::BordaDown: return ScoreValue::from_int(j - i + 1);
    case Rule::BordaAv: return ScoreValue::from_doubled(2 * (mm - i) - (mm - j - 1));
  }
  return {};
}

ScoreValue shifted_score_in_vote(CandidateId c, const Vote& v, std::size_t m, Rule rule) {
  const ScoreValue raw = score_in_vote(c, v, m, rule);
  if (rule != Rule::BordaAv) return raw;
  return raw - ScoreValue::from_doubled(static_cast<std::int64_t>(m) - static_cast<std::int64_t>(v.length()) - 1);
}

std::vector<ScoreValue> shifted_score_table(const Election& e) {
  auto table = score_table(e);
  if (e.rule != Rule::BordaAv) return table;
  const auto m = static_cast<std::int64_t>(e.m());
  std::int64_t shift = 0;
  for (const Vote& v : e.votes) {
    const auto len = static_cast<std::int64_t>(project_vote(v, e.active).length());
    shift += v.multiplicity * (m - len - 1);
  }
  for (CandidateId c : e.active) table[c] -= ScoreValue::from_doubled(shift);
  return table;
}

ScoreValue final_score_F(const Election& e, const TypeCombination& combo, Direction dir) {
  if (combo.types.size() != combo.counts.size()) throw DomainError("combination types and counts differ in size");
  const Rule rule = detail::solver_rule(e);
  ScoreValue f = shifted_score_table(e)[e.special];
  for (std::size_t k = 0; k < combo.types.size(); ++k) {
    const ScoreValue per = static_cast<std::int64_t>(combo.counts[k]) * type_p_score(combo.types[k], e.m(), rule);
    if (dir == Direction::Delete)
      f -= per;
    else
      f += per;
  }
  return f;
}

std::uint64_t dr_threshold(std::size_t r, std::size_t t, std::size_t l, ThresholdPolicy policy) {
  if (r == 0) return l;
  if (l <= 1 || t <= 1) return 0;
  const std::uint64_t tt = t - 1;
  const std::uint64_t ll = l - 1;
  if (policy == ThresholdPolicy::Published) {
    std::uint64_t g = l;
    for (std::uint64_t k = 1; k <= r; ++k) g = sat_mul(sat_mul(sat_mul(g, k), tt), ll);
    return g;
  }
  std::uint64_t h = l;
  for (std::uint64_t k = 1; k <= r; ++k) h = sat_add(sat_mul(sat_mul(sat_mul(k, tt), ll), sat_add(h, 1)), ll);
  return h;
}

std::uint64_t combination_bound(std::size_t l, std::size_t type_count) {
  std::uint64_t b = 1;
  for (std::size_t k = 0; k < type_count; ++k) b = sat_mul(b, l + 1);
  return b;
}

bool fpt_available(const ControlInstance& inst) {
  switch (inst.kind) {
    case ControlKind::CCDV:
    case ControlKind::CCAV: return true;
    case ControlKind::CCAC:
    case ControlKind::CCDC: return inst.base.t_cap && *inst.base.t_cap == 1;
  }
  return false;
}

SolveResult solve_fpt(const ControlInstance& inst, const FptOptions& opts) {
  if (!fpt_available(inst)) throw NoFptAlgorithm("no FPT algorithm exists for this problem class");
  switch (inst.kind) {
    case ControlKind::CCDV: return solve_ccdv_fpt(inst, opts);
    case ControlKind::CCAV: return solve_ccav_fpt(inst, opts);
    case ControlKind::CCDC: return solve_1ccdc(inst);
    case ControlKind::CCAC: return solve_1ccac(inst);
  }
  throw NoFptAlgorithm("no FPT algorithm exists for this problem class");
}

namespace detail {

Rule solver_rule(const Election& e) { return e.rule == Rule::BordaComplete ? Rule::BordaUp : e.rule; }

std::size_t solver_t(const Election& e) { return e.t_cap ? *e.t_cap : e.m(); }

std::uint64_t for_each_combination(const std::vector<std::size_t>& avail, std::size_t l, std::uint64_t bound,
                                   const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  const std::size_t k_types = avail.size();
  std::vector<std::size_t> counts(k_types, 0);
  std::uint64_t visited = 0;
  bool stop = false;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t k, std::size_t left) {
    if (stop) return;
    if (k == k_types) {
      if (++visited > bound) throw std::logic_error("combination enumerator exceeded its bound");
      stop = visit(counts);
      return;
    }
    const std::size_t hi = std::min(left, avail[k]);
    for (std::size_t c = 0; c <= hi && !stop; ++c) {
      counts[k] = c;
      walk(k + 1, left - c);
    }
    counts[k] = 0;
  };
  walk(0, l);
  return visited;
}

std::optional<std::vector<std::size_t>> find_exact_subset(
    const std::vector<std::size_t>& pool, const std::vector<std::size_t>& type_of,
    const std::vector<Vote>& ballots, std::vector<std::size_t> need, std::uint64_t& examined,
    const std::function<bool(const std::vector<std::size_t>&)>& accept) {
  std::vector<std::size_t> usable;
  for (std::size_t b : pool)
    if (need[type_of[b]] > 0) usable.push_back(b);
  std::size_t left = 0;
  for (std::size_t c : need) left += c;

  std::vector<std::ptrdiff_t> pred(usable.size(), -1);
  std::map<std::vector<CandidateId>, std::size_t> last;
  for (std::size_t i = 0; i < usable.size(); ++i) {
    auto [it, fresh] = last.try_emplace(ballots[usable[i]].ranking, i);
    if (!fresh) {
      pred[i] = static_cast<std::ptrdiff_t>(it->second);
      it->second = i;
    }
  }

  std::vector<char> chosen(usable.size(), 0);
  std::vector<std::size_t> picked;
  std::function<bool(std::size_t, std::size_t)> descend = [&](std::size_t start, std::size_t rem) -> bool {
    if (rem == 0) {
      ++examined;
      return accept(picked);
    }
    for (std::size_t i = start; i + rem <= usable.size(); ++i) {
      const std::size_t ty = type_of[usable[i]];
      if (need[ty] == 0) continue;
      if (pred[i] >= 0 && !chosen[static_cast<std::size_t>(pred[i])]) continue;
      --need[ty];
      chosen[i] = 1;
      picked.push_back(usable[i]);
      const bool hit = descend(i + 1, rem - 1);
      if (hit) return true;
      picked.pop_back();
      chosen[i] = 0;
      ++need[ty];
    }
    return false;
  };
  if (descend(0, left)) return picked;
  return std::nullopt;
}

}  // namespace detail

}  // namespace borda
