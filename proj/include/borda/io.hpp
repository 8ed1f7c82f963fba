#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "borda/control.hpp"
#include "borda/graph.hpp"
#include "borda/reductions.hpp"

namespace borda {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& msg)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Text formats. Blank lines and lines starting with `#` are ignored.
///
///   election <m> <t|complete> <borda|up|down|av>
///   special <label>
///   candidates <label> ...
///   <multiplicity>: <label> > <label> > ...
///
/// Instances add `pool-candidates <label> ...`, `kind <ccav|ccdv|ccac|ccdc>`,
/// `budget <l>`, an optional `model <unique|cowinner>`, and a `pool-votes`
/// line after which vote lines go to the pool.
Election parse_election(const std::string& text);
ControlInstance parse_instance(const std::string& text);
Graph parse_graph(const std::string& text);
std::vector<std::pair<Vertex, std::string>> parse_witness(const std::string& text);

std::string serialize(const Election& e);
std::string serialize(const ControlInstance& inst);
std::string serialize(const Graph& g);
std::string serialize_witness(const ReductionOutput& out);

/// `v<k>` tokens (vote control) or candidate labels; throws InvalidSolution.
Solution parse_picks(const ControlInstance& inst, const std::vector<std::string>& tokens);
std::string format_picks(const ControlInstance& inst, const Solution& sol);

Rule parse_rule(const std::string& s);
ControlKind parse_kind(const std::string& s);
WinnerModel parse_model(const std::string& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace borda
