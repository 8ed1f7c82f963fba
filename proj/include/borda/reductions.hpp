#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "borda/control.hpp"
#include "borda/graph.hpp"

namespace borda {

/// A construction identity failed; the emitted instance would be wrong.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Vertex i of the source graph maps to the gadget pick `pick`.
struct WitnessEntry {
  Vertex vertex = 0;
  std::size_t pick = 0;
  std::string gadget;
};

struct ReductionOutput {
  ControlInstance instance;
  std::vector<WitnessEntry> witness;  // one entry per vertex, by vertex
  std::string provenance;             // reduction name and parameters
  std::vector<std::pair<std::string, std::int64_t>> sizes;  // gadget-size summary
};

struct ReduceOptions {
  bool force = false;       // lift the size guard of reduce_ccdv
  bool as_printed = false;  // 2ccac-up: emit the unrepaired gadget sizes
};

/// Complete-vote reductions. The budget is min(k, number of legal picks).
ReductionOutput reduce_ccdv(const Graph& g, std::size_t k, const ReduceOptions& opts = {});
ReductionOutput reduce_ccac(const Graph& g, std::size_t k);
ReductionOutput reduce_ccdc(const Graph& g, std::size_t k);

/// 2-truncated reductions.
ReductionOutput reduce_2ccac_up(const Graph& g, std::size_t k, const ReduceOptions& opts = {});
ReductionOutput reduce_2ccdc_down(const Graph& g, std::size_t k);
ReductionOutput reduce_2ccdc_up(const Graph& g, std::size_t k);
ReductionOutput reduce_2ccac_down(const Graph& g, std::size_t k);

/// Adds |C|-t-1 unranked dummy candidates to the registered set and switches
/// a Borda-up instance to Borda-av.
ControlInstance lift_up_to_av(const ControlInstance& inst, std::size_t t);

const std::vector<std::string>& reduction_names();
ReductionOutput reduce_by_name(const std::string& name, const Graph& g, std::size_t k,
                               const ReduceOptions& opts = {});

/// Maps a vertex set through the witness map.
Solution transport(const ReductionOutput& out, const std::vector<Vertex>& vertices);

}  // namespace borda
