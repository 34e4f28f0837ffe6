#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "dynlog/propositions.hpp"

namespace dynlog {

/// A transition frame (S, R) with R as a dense boolean matrix plus the pair
/// list in insertion order.
struct TransitionFrame {
  StateSet states;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::uint8_t> matrix; // size() * size()

  bool related(int s, int t) const {
    return matrix[static_cast<std::size_t>(s) * states.names.size() + t] != 0;
  }
  std::vector<int> successors(int s) const;
  std::vector<int> predecessors(int t) const;
};

TransitionFrame make_frame(StateSet states,
                           std::vector<std::pair<int, int>> pairs);

/// An acceptor (X, S, R): labelled transitions, no outputs, no initial or
/// final states.
struct Automaton {
  std::vector<std::string> inputs;
  StateSet states;
  std::vector<std::tuple<int, int, int>> triples; // (input, from, to)

  int input_index(std::string_view name) const;
  int require_input(std::string_view name) const; // throws unknown_input
  TransitionFrame fibre(int x) const;
  TransitionFrame fibre(std::string_view input) const;
};

Automaton make_automaton(std::vector<std::string> inputs, StateSet states,
                         std::vector<std::tuple<int, int, int>> triples);

bool is_deterministic(const Automaton &a);

bool same_relation(const Automaton &a, const Automaton &b);

} // namespace dynlog
