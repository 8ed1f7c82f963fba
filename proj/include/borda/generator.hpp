#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "borda/control.hpp"

namespace borda {

/// 64-bit LCG, state' = 6364136223846793005 * state + 1442695040888963407
/// (mod 2^64), seeded with the state itself. A draw below `bound` is
/// (state' >> 32) % bound.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t bound) { return (engine_() >> 32) % bound; }

 private:
  std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL, 1442695040888963407ULL, 0> engine_;
};

struct GenParams {
  std::uint64_t seed = 1;
  std::size_t m = 4;       // registered candidates, p included
  std::size_t n = 4;       // registered votes
  std::size_t t = 2;       // t == m yields complete votes
  Rule rule = Rule::BordaUp;
  ControlKind kind = ControlKind::CCDV;
  std::size_t budget = 1;
  std::size_t pool = 0;    // pool votes (ccav) or pool candidates (ccac)
  WinnerModel model = WinnerModel::Unique;
};

/// Candidates are p, c1..c{m-1}, then pool candidates a1..a{pool}. Each vote
/// draws its length uniformly from [0, t] (complete votes take every
/// candidate) and its ranking uniformly without replacement by a partial
/// Fisher-Yates shuffle. Registered votes are drawn before pool votes.
ControlInstance generate_instance(const GenParams& params);

}  // namespace borda
