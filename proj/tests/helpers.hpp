#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "dynlog/io.hpp"
#include "dynlog/synthesis.hpp"

#ifndef DYNLOG_DATA_DIR
#define DYNLOG_DATA_DIR "data"
#endif

namespace dynlog::testing {

inline std::string data_path(const std::string &rel) {
  return std::string(DYNLOG_DATA_DIR) + "/" + rel;
}

inline TruthLattice chain3() {
  return as_complete_lattice(
      build_poset({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}}));
}

inline TruthLattice diamond() {
  return as_complete_lattice(build_poset(
      {"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}));
}

inline StateSet states(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i)
    names.push_back("s" + std::to_string(i));
  return make_state_set(names);
}

/// The SkyLine bundle parsed from the shipped data files.
inline PropositionAlgebra skyline_algebra() {
  return io::parse_algebra(data_path("skyline/algebra.txt"), bool2());
}

inline Automaton skyline_automaton() {
  return io::parse_automaton(data_path("skyline/automaton.txt"));
}

/// All tuples of M^S as an algebra (2^S for BOOL2).
inline PropositionAlgebra full_algebra(const TruthLattice &lattice, int n) {
  StateSet ss = states(n);
  std::vector<Proposition> members;
  ValueTable t(n, 0);
  int counter = 0;
  while (true) {
    members.push_back({"e" + std::to_string(counter++), t});
    int pos = n - 1;
    while (pos >= 0 && t[pos] == lattice.size() - 1)
      t[pos--] = 0;
    if (pos < 0)
      break;
    ++t[pos];
  }
  // Element indexing does not follow the order, so locate real constants by
  // renaming: make_algebra only needs the constant tables present, which the
  // full enumeration guarantees.
  return make_algebra(lattice, ss, members);
}

/// The Boolean algebra 2^S over BOOL2, members in crisp mask order.
inline PropositionAlgebra crisp_algebra(int n) {
  TruthLattice two = bool2();
  StateSet ss = states(n);
  std::vector<Proposition> members;
  int counter = 0;
  for (const auto &t : all_crisp_tuples(two, n))
    members.push_back({"c" + std::to_string(counter++), t});
  return make_algebra(two, ss, members);
}

/// Random subalgebra of M^S that always contains both constants.
inline PropositionAlgebra random_algebra(const TruthLattice &lattice, int n,
                                         int extra, std::mt19937 &rng) {
  StateSet ss = states(n);
  std::uniform_int_distribution<int> elem(0, lattice.size() - 1);
  std::vector<Proposition> members;
  members.push_back({"bot", ValueTable(n, lattice.bottom())});
  members.push_back({"top", ValueTable(n, lattice.top())});
  int counter = 0;
  for (int k = 0; k < extra; ++k) {
    ValueTable t(n);
    for (int s = 0; s < n; ++s)
      t[s] = elem(rng);
    bool fresh = true;
    for (const auto &m : members)
      fresh = fresh && m.values != t;
    if (fresh)
      members.push_back({"m" + std::to_string(counter++), t});
  }
  return make_algebra(lattice, ss, members);
}

inline TransitionFrame random_frame(const StateSet &ss, double density,
                                    std::mt19937 &rng) {
  std::bernoulli_distribution edge(density);
  std::vector<std::pair<int, int>> pairs;
  for (int s = 0; s < ss.size(); ++s)
    for (int t = 0; t < ss.size(); ++t)
      if (edge(rng))
        pairs.emplace_back(s, t);
  return make_frame(ss, pairs);
}

inline Automaton random_automaton(const StateSet &ss, int num_inputs,
                                  double density, std::mt19937 &rng) {
  std::vector<std::string> inputs;
  for (int i = 1; i <= num_inputs; ++i)
    inputs.push_back("x" + std::to_string(i));
  std::bernoulli_distribution edge(density);
  std::vector<std::tuple<int, int, int>> triples;
  for (int x = 0; x < num_inputs; ++x)
    for (int s = 0; s < ss.size(); ++s)
      for (int t = 0; t < ss.size(); ++t)
        if (edge(rng))
          triples.emplace_back(x, s, t);
  return make_automaton(inputs, ss, triples);
}

/// A random meet-closed subset of the algebra containing top.
inline SubposetHandle random_meet_closed(const PropositionAlgebra &algebra,
                                         std::mt19937 &rng) {
  std::uniform_int_distribution<int> pick(0, algebra.size() - 1);
  std::vector<int> chosen{algebra.top_member};
  int extras = std::uniform_int_distribution<int>(0, 4)(rng);
  for (int k = 0; k < extras; ++k) {
    int c = pick(rng);
    if (std::find(chosen.begin(), chosen.end(), c) == chosen.end())
      chosen.push_back(c);
  }
  // Close under pairwise pointwise meets.
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t a = 0; a < chosen.size(); ++a)
      for (std::size_t b = a; b < chosen.size(); ++b) {
        ValueTable m(algebra.states.size());
        for (int s = 0; s < algebra.states.size(); ++s)
          m[s] = algebra.lattice.meet(algebra.members[chosen[a]].values[s],
                                      algebra.members[chosen[b]].values[s]);
        int idx = algebra.find(m);
        if (idx >= 0 &&
            std::find(chosen.begin(), chosen.end(), idx) == chosen.end()) {
          chosen.push_back(idx);
          grew = true;
        }
      }
  }
  return meet_closed_subposet(algebra, chosen);
}

} // namespace dynlog::testing
