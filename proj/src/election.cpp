#include "borda/election.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace borda {

std::string ScoreValue::to_string() const {
  const std::int64_t whole = doubled_ / 2;  // truncates toward zero
  if (doubled_ % 2 == 0) return std::to_string(whole);
  if (doubled_ < 0 && whole == 0) return "-0.5";
  return std::to_string(whole) + ".5";
}

bool Election::is_active(CandidateId c) const {
  return std::binary_search(active.begin(), active.end(), c);
}

std::int64_t Election::ballot_count() const {
  return std::accumulate(votes.begin(), votes.end(), std::int64_t{0},
                         [](std::int64_t acc, const Vote& v) { return acc + v.multiplicity; });
}

namespace {

std::vector<char> active_mask(const Election& e) {
  std::vector<char> mask(e.universe_size(), 0);
  for (CandidateId c : e.active) mask[c] = 1;
  return mask;
}

std::size_t projected_length(const Vote& v, const std::vector<char>& mask) {
  return static_cast<std::size_t>(
      std::count_if(v.ranking.begin(), v.ranking.end(), [&](CandidateId c) { return mask[c] != 0; }));
}

}  // namespace

void validate(const Election& e) {
  std::unordered_set<std::string> seen;
  for (const auto& label : e.labels) {
    if (label.empty()) throw DomainError("empty candidate label");
    if (!seen.insert(label).second) throw DomainError("duplicate candidate label '" + label + "'");
  }
  if (e.active.empty()) throw DomainError("election has no active candidates");
  if (!std::is_sorted(e.active.begin(), e.active.end()) ||
      std::adjacent_find(e.active.begin(), e.active.end()) != e.active.end())
    throw DomainError("active set must be sorted and duplicate-free");
  if (e.active.back() >= e.universe_size()) throw DomainError("active id outside universe");
  if (!e.is_active(e.special)) throw DomainError("special candidate is not active");
  if (e.rule == Rule::BordaComplete && e.t_cap)
    throw DomainError("rule borda requires complete votes");
  if (e.t_cap && *e.t_cap == 0) throw DomainError("truncation bound must be positive");

  const auto mask = active_mask(e);
  std::vector<char> used(e.universe_size(), 0);
  for (std::size_t i = 0; i < e.votes.size(); ++i) {
    const Vote& v = e.votes[i];
    const std::string where = "vote " + std::to_string(i + 1);
    if (v.multiplicity <= 0) throw DomainError(where + ": multiplicity must be positive");
    for (CandidateId c : v.ranking) {
      if (c >= e.universe_size()) throw DomainError(where + ": unknown candidate id");
      if (used[c]) throw DomainError(where + ": candidate '" + e.labels[c] + "' ranked twice");
      used[c] = 1;
    }
    for (CandidateId c : v.ranking) used[c] = 0;
    const std::size_t len = projected_length(v, mask);
    if (e.t_cap && len > *e.t_cap)
      throw DomainError(where + ": ranks " + std::to_string(len) + " candidates, bound is " +
                        std::to_string(*e.t_cap));
    if (!e.t_cap && len != e.m())
      throw DomainError(where + ": complete vote must rank all " + std::to_string(e.m()) +
                        " active candidates");
  }
}

Vote project_vote(const Vote& v, std::span<const CandidateId> active) {
  Vote out;
  out.multiplicity = v.multiplicity;
  out.ranking.reserve(v.ranking.size());
  for (CandidateId c : v.ranking)
    if (std::binary_search(active.begin(), active.end(), c)) out.ranking.push_back(c);
  return out;
}

std::size_t position_of(CandidateId c, const Vote& v) {
  const auto it = std::find(v.ranking.begin(), v.ranking.end(), c);
  return it == v.ranking.end() ? 0 : static_cast<std::size_t>(it - v.ranking.begin()) + 1;
}

ScoreValue score_in_vote(CandidateId c, const Vote& v, std::size_t m, Rule rule) {
  if (m == 0) throw DomainError("score_in_vote: empty candidate set");
  const auto len = static_cast<std::int64_t>(v.length());
  const auto mm = static_cast<std::int64_t>(m);
  if (rule == Rule::BordaComplete && v.length() != m)
    throw DomainError("malformed complete vote: ranks " + std::to_string(len) + " of " +
                      std::to_string(mm) + " candidates");
  const auto pos = static_cast<std::int64_t>(position_of(c, v));
  switch (rule) {
    case Rule::BordaComplete:
    case Rule::BordaUp:
      return pos == 0 ? ScoreValue{} : ScoreValue::from_int(mm - pos);
    case Rule::BordaDown:
      return pos == 0 ? ScoreValue{} : ScoreValue::from_int(len - pos + 1);
    case Rule::BordaAv:
      return pos == 0 ? ScoreValue::from_doubled(mm - len - 1) : ScoreValue::from_int(mm - pos);
  }
  return {};
}

std::vector<ScoreValue> score_table(const Election& e) {
  const auto mask = active_mask(e);
  const auto m = static_cast<std::int64_t>(e.m());
  std::vector<std::int64_t> doubled(e.universe_size(), 0);
  std::vector<CandidateId> ranked;
  for (const Vote& v : e.votes) {
    ranked.clear();
    for (CandidateId c : v.ranking)
      if (mask[c]) ranked.push_back(c);
    const auto len = static_cast<std::int64_t>(ranked.size());
    const std::int64_t k = v.multiplicity;
    switch (e.rule) {
      case Rule::BordaComplete:
        if (len != m)
          throw DomainError("malformed complete vote: ranks " + std::to_string(len) + " of " +
                            std::to_string(m) + " candidates");
        [[fallthrough]];
      case Rule::BordaUp:
        for (std::int64_t i = 0; i < len; ++i) doubled[ranked[i]] += k * 2 * (m - i - 1);
        break;
      case Rule::BordaDown:
        for (std::int64_t i = 0; i < len; ++i) doubled[ranked[i]] += k * 2 * (len - i);
        break;
      case Rule::BordaAv: {
        const std::int64_t unranked = m - len - 1;  // doubled score of every unranked candidate
        for (CandidateId c : e.active) doubled[c] += k * unranked;
        for (std::int64_t i = 0; i < len; ++i) doubled[ranked[i]] += k * (2 * (m - i - 1) - unranked);
        break;
      }
    }
  }
  std::vector<ScoreValue> out(doubled.size());
  std::transform(doubled.begin(), doubled.end(), out.begin(), ScoreValue::from_doubled);
  return out;
}

ScoreValue total_score(CandidateId c, const Election& e) {
  if (!e.is_active(c)) throw DomainError("total_score: candidate is not active");
  return score_table(e)[c];
}

ScoreValue diff(CandidateId a, CandidateId b, const Election& e) {
  if (!e.is_active(a) || !e.is_active(b)) throw DomainError("diff: candidate is not active");
  const auto table = score_table(e);
  return table[a] - table[b];
}

CandidateSet winners(const Election& e, WinnerModel model) {
  if (e.active.empty()) return {};
  const auto table = score_table(e);
  ScoreValue best = table[e.active.front()];
  for (CandidateId c : e.active) best = std::max(best, table[c]);
  CandidateSet top;
  for (CandidateId c : e.active)
    if (table[c] == best) top.push_back(c);
  if (model == WinnerModel::Unique && top.size() != 1) return {};
  return top;
}

Election projected(const Election& e) {
  Election out = e;
  out.votes.clear();
  for (const Vote& v : e.votes) out.votes.push_back(project_vote(v, e.active));
  return out;
}

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::BordaComplete: return "borda";
    case Rule::BordaUp: return "up";
    case Rule::BordaDown: return "down";
    case Rule::BordaAv: return "av";
  }
  return "?";
}

const char* model_name(WinnerModel m) {
  return m == WinnerModel::Unique ? "unique" : "cowinner";
}

}  // namespace borda
