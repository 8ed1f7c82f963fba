#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace borda {

using CandidateId = std::uint32_t;

/// Sorted, duplicate-free list of candidate ids.
using CandidateSet = std::vector<CandidateId>;

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A ranking over a subset of candidates, most preferred first, repeated
/// `multiplicity` times in the profile.
struct Vote {
  std::vector<CandidateId> ranking;
  std::int64_t multiplicity = 1;

  std::size_t length() const { return ranking.size(); }
  bool operator==(const Vote&) const = default;
};

enum class Rule { BordaComplete, BordaUp, BordaDown, BordaAv };

enum class WinnerModel { Unique, CoWinner };

/// Exact half-integer score, stored doubled. Only Borda_av produces odd
/// doubled values.
class ScoreValue {
 public:
  constexpr ScoreValue() = default;

  static constexpr ScoreValue from_int(std::int64_t v) { return ScoreValue(2 * v); }
  static constexpr ScoreValue from_doubled(std::int64_t d) { return ScoreValue(d); }

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }

  constexpr ScoreValue& operator+=(ScoreValue o) {
    doubled_ += o.doubled_;
    return *this;
  }
  constexpr ScoreValue& operator-=(ScoreValue o) {
    doubled_ -= o.doubled_;
    return *this;
  }
  friend constexpr ScoreValue operator+(ScoreValue a, ScoreValue b) { return a += b; }
  friend constexpr ScoreValue operator-(ScoreValue a, ScoreValue b) { return a -= b; }
  friend constexpr ScoreValue operator-(ScoreValue a) { return ScoreValue(-a.doubled_); }
  friend constexpr ScoreValue operator*(std::int64_t k, ScoreValue a) {
    return ScoreValue(k * a.doubled_);
  }

  friend constexpr auto operator<=>(ScoreValue, ScoreValue) = default;

  /// Renders as `a` or `a.5` (e.g. `-0.5`, `7`).
  std::string to_string() const;

 private:
  constexpr explicit ScoreValue(std::int64_t d) : doubled_(d) {}
  std::int64_t doubled_ = 0;
};

/// An election over a declared candidate universe. `active` is the
/// registered subset that is scored; rankings may mention inactive
/// candidates and are projected onto `active` when scored.
struct Election {
  std::vector<std::string> labels;  // universe, indexed by CandidateId
  CandidateSet active;
  CandidateId special = 0;
  std::vector<Vote> votes;
  Rule rule = Rule::BordaComplete;
  std::optional<std::size_t> t_cap;  // absent for complete-vote elections

  std::size_t m() const { return active.size(); }
  std::size_t universe_size() const { return labels.size(); }
  bool is_active(CandidateId c) const;
  /// Number of ballots counting multiplicities.
  std::int64_t ballot_count() const;

  bool operator==(const Election&) const = default;
};

/// Throws DomainError when any Election invariant is violated.
void validate(const Election& e);

/// Removes every candidate not in `active` (sorted) from `v`, keeping order.
Vote project_vote(const Vote& v, std::span<const CandidateId> active);

/// 1-based position of `c` in `v`, 0 when unranked.
std::size_t position_of(CandidateId c, const Vote& v);

/// Score `c` receives from an already projected vote in an election with
/// `m` active candidates.
ScoreValue score_in_vote(CandidateId c, const Vote& v, std::size_t m, Rule rule);

/// Total scores indexed by CandidateId over the whole universe; inactive
/// candidates hold zero. Multiplicity-weighted, projecting every vote.
std::vector<ScoreValue> score_table(const Election& e);

ScoreValue total_score(CandidateId c, const Election& e);
ScoreValue diff(CandidateId a, CandidateId b, const Election& e);
CandidateSet winners(const Election& e, WinnerModel model);

/// Copy of `e` with every vote projected onto `e.active`; empty-multiplicity
/// entries are dropped.
Election projected(const Election& e);

const char* rule_name(Rule r);
const char* model_name(WinnerModel m);

}  // namespace borda
