#include "dynlog/automaton.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace dynlog {

std::vector<int> TransitionFrame::successors(int s) const {
  if (s < 0 || s >= states.size())
    fail(errc::unknown_state, "state index out of range");
  std::vector<int> out;
  for (int t = 0; t < states.size(); ++t)
    if (related(s, t))
      out.push_back(t);
  return out;
}

std::vector<int> TransitionFrame::predecessors(int t) const {
  if (t < 0 || t >= states.size())
    fail(errc::unknown_state, "state index out of range");
  std::vector<int> out;
  for (int s = 0; s < states.size(); ++s)
    if (related(s, t))
      out.push_back(s);
  return out;
}

TransitionFrame make_frame(StateSet states,
                           std::vector<std::pair<int, int>> pairs) {
  TransitionFrame f;
  const int n = states.size();
  f.states = std::move(states);
  f.matrix.assign(static_cast<std::size_t>(n) * n, 0);
  for (auto [s, t] : pairs) {
    if (s < 0 || s >= n || t < 0 || t >= n)
      fail(errc::unknown_state, "transition references an unknown state");
    if (!f.matrix[static_cast<std::size_t>(s) * n + t]) {
      f.matrix[static_cast<std::size_t>(s) * n + t] = 1;
      f.pairs.emplace_back(s, t);
    }
  }
  return f;
}

int Automaton::input_index(std::string_view name) const {
  for (std::size_t i = 0; i < inputs.size(); ++i)
    if (inputs[i] == name)
      return static_cast<int>(i);
  return -1;
}

int Automaton::require_input(std::string_view name) const {
  int i = input_index(name);
  if (i < 0)
    fail(errc::unknown_input, "unknown input '" + std::string(name) + "'");
  return i;
}

TransitionFrame Automaton::fibre(int x) const {
  if (x < 0 || x >= static_cast<int>(inputs.size()))
    fail(errc::unknown_input, "input index out of range");
  std::vector<std::pair<int, int>> pairs;
  for (const auto &[xi, s, t] : triples)
    if (xi == x)
      pairs.emplace_back(s, t);
  return make_frame(states, std::move(pairs));
}

TransitionFrame Automaton::fibre(std::string_view input) const {
  return fibre(require_input(input));
}

Automaton make_automaton(std::vector<std::string> inputs, StateSet states,
                         std::vector<std::tuple<int, int, int>> triples) {
  if (inputs.empty())
    fail(errc::validation_error, "input set must be non-empty");
  std::set<std::string> seen(inputs.begin(), inputs.end());
  if (seen.size() != inputs.size())
    fail(errc::validation_error, "duplicate input names");
  Automaton a;
  a.inputs = std::move(inputs);
  const int n = states.size();
  a.states = std::move(states);
  std::set<std::tuple<int, int, int>> dedup;
  for (auto [x, s, t] : triples) {
    if (x < 0 || x >= static_cast<int>(a.inputs.size()))
      fail(errc::unknown_input, "transition references an unknown input");
    if (s < 0 || s >= n || t < 0 || t >= n)
      fail(errc::unknown_state, "transition references an unknown state");
    if (dedup.insert({x, s, t}).second)
      a.triples.emplace_back(x, s, t);
  }
  return a;
}

bool is_deterministic(const Automaton &a) {
  std::set<std::pair<int, int>> seen;
  for (const auto &[x, s, t] : a.triples)
    if (!seen.insert({x, s}).second)
      return false;
  return true;
}

bool same_relation(const Automaton &a, const Automaton &b) {
  if (a.inputs != b.inputs || a.states.names != b.states.names)
    return false;
  std::set<std::tuple<int, int, int>> ra(a.triples.begin(), a.triples.end());
  std::set<std::tuple<int, int, int>> rb(b.triples.begin(), b.triples.end());
  return ra == rb;
}

} // namespace dynlog
