#pragma once

#include <string>

#include "borda/io.hpp"

#ifndef BORDA_TEST_DATA
#error "BORDA_TEST_DATA must point at tests/data"
#endif

namespace fixture {

inline std::string path(const std::string& name) { return std::string(BORDA_TEST_DATA) + "/" + name; }
inline borda::ControlInstance instance(const std::string& name) {
  return borda::parse_instance(borda::read_file(path(name)));
}
inline borda::Election election(const std::string& name) {
  return borda::parse_election(borda::read_file(path(name)));
}
inline borda::Graph graph(const std::string& name) { return borda::parse_graph(borda::read_file(path(name))); }

/// Id of `label` in the universe of `e`.
inline borda::CandidateId id(const borda::Election& e, const std::string& label) {
  for (borda::CandidateId c = 0; c < e.labels.size(); ++c)
    if (e.labels[c] == label) return c;
  throw std::out_of_range("no candidate " + label);
}

}  // namespace fixture
