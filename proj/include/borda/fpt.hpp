#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "borda/control.hpp"
#include "borda/oracle.hpp"

namespace borda {

class NoFptAlgorithm : public DomainError {
 public:
  using DomainError::DomainError;
};

/// ty_i^j: p at position i (0 when unranked) in a vote of length j.
struct VoteType {
  std::size_t p_pos = 0;
  std::size_t length = 0;

  auto operator<=>(const VoteType&) const = default;
};

VoteType vote_type(const Vote& v, CandidateId p);

/// Types up to length t, ordered by (length, p-position). With `p_ranked`
/// only types with p_pos >= 1 are listed.
std::vector<VoteType> vote_types(std::size_t t, bool p_ranked);

struct TypeCombination {
  std::vector<VoteType> types;
  std::vector<std::size_t> counts;  // parallel to types

  std::size_t total() const;
};

enum class Direction { Delete, Add };

/// Score p receives from a vote of the given type in the solver convention:
/// 0 when unranked, m-i (up), j-i+1 (down), (m-i) - (m-j-1)/2 (av, shifted).
ScoreValue type_p_score(VoteType ty, std::size_t m, Rule rule);

/// Scores in the solver convention: for av every vote's unranked share
/// (m-|v|-1)/2 is subtracted from every candidate, leaving pairwise diffs
/// unchanged. Identical to score_table for the other rules.
std::vector<ScoreValue> shifted_score_table(const Election& e);
ScoreValue shifted_score_in_vote(CandidateId c, const Vote& v, std::size_t m, Rule rule);

/// p's final score once the combination is deleted/added.
ScoreValue final_score_F(const Election& e, const TypeCombination& combo, Direction dir);

enum class ThresholdPolicy { Corrected, Published };

/// Keep-limit parameter of the r-th reduction rule (r = 0 is the identical
/// votes rule): a class larger than threshold+1 is trimmed to threshold+1.
std::uint64_t dr_threshold(std::size_t r, std::size_t t, std::size_t l, ThresholdPolicy policy);

struct FptOptions {
  bool data_reduction = true;
  ThresholdPolicy thresholds = ThresholdPolicy::Corrected;
};

/// Number of count vectors the combination enumerator may produce at most.
std::uint64_t combination_bound(std::size_t l, std::size_t type_count);

SolveResult solve_ccdv_fpt(const ControlInstance& inst, const FptOptions& opts = {});
SolveResult solve_ccav_fpt(const ControlInstance& inst, const FptOptions& opts = {});
SolveResult solve_1ccdc(const ControlInstance& inst);
SolveResult solve_1ccac(const ControlInstance& inst);

/// True when one of the solvers above covers (kind, t).
bool fpt_available(const ControlInstance& inst);

/// Dispatches to the matching solver; throws NoFptAlgorithm otherwise.
SolveResult solve_fpt(const ControlInstance& inst, const FptOptions& opts = {});

}  // namespace borda
