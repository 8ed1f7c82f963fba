#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "borda/election.hpp"

namespace borda {

enum class ControlKind { CCAV, CCDV, CCAC, CCDC };

/// Constructive control instance. For vote control the pool/base votes are
/// addressed by ballot index in expansion order (entries in file order, the
/// copies of a multiplicity-k entry consecutive). For CCAC the base votes
/// range over active and pool_candidates; scoring projects them.
struct ControlInstance {
  ControlKind kind = ControlKind::CCDV;
  Election base;
  std::vector<Vote> pool_votes;      // CCAV only
  CandidateSet pool_candidates;      // CCAC only
  std::size_t budget = 0;
  WinnerModel model = WinnerModel::Unique;

  bool operator==(const ControlInstance&) const = default;
};

/// Ballot indices (vote control) or candidate ids (candidate control).
struct Solution {
  std::vector<std::size_t> picks;
  bool operator==(const Solution&) const = default;
};

struct Verdict {
  bool ok = false;
  std::string reason;  // empty when ok
};

class InvalidSolution : public DomainError {
 public:
  using DomainError::DomainError;
};

const char* kind_name(ControlKind k);
bool is_vote_control(ControlKind k);

/// Throws DomainError when the instance breaks a ControlInstance invariant.
void validate(const ControlInstance& inst);

/// One multiplicity-1 vote per ballot, in expansion order.
std::vector<Vote> expand_ballots(const std::vector<Vote>& votes);

/// Everything a solution may pick from, in ascending order.
std::vector<std::size_t> legal_picks(const ControlInstance& inst);

/// Display name of a pick: `v<k>` (1-based ballot) or the candidate label.
std::string pick_label(const ControlInstance& inst, std::size_t pick);

/// Election after the edit, with votes projected onto the new active set.
/// Throws InvalidSolution for illegal picks; the budget is not checked here.
Election apply(const ControlInstance& inst, const Solution& sol);

/// Legality (including the budget) and the constructive goal.
Verdict check(const ControlInstance& inst, const Solution& sol);
bool verify(const ControlInstance& inst, const Solution& sol);

/// Destructive goal: sol is legal and p is not a winner afterwards.
Verdict check_destructive(const ControlInstance& inst, const Solution& sol);

}  // namespace borda
