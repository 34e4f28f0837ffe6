// Compares the parallel induced-relation kernel against the serial literal
// reference on randomized instances, and times the down-set enumeration.

#include <chrono>
#include <cstdio>
#include <random>

#include "dynlog/reference.hpp"
#include "dynlog/synthesis.hpp"

using namespace dynlog;
using clk = std::chrono::steady_clock;

namespace {

double seconds_since(clk::time_point start) {
  return std::chrono::duration<double>(clk::now() - start).count();
}

PropositionAlgebra random_algebra(const TruthLattice &lattice, int num_states,
                                  int num_members, std::mt19937 &rng) {
  std::vector<std::string> names;
  for (int i = 0; i < num_states; ++i)
    names.push_back("s" + std::to_string(i));
  StateSet states = make_state_set(names);
  std::uniform_int_distribution<int> elem(0, lattice.size() - 1);
  std::vector<Proposition> members;
  members.push_back({"bot", ValueTable(num_states, lattice.bottom())});
  members.push_back({"top", ValueTable(num_states, lattice.top())});
  int next = 0;
  while (static_cast<int>(members.size()) < num_members) {
    ValueTable t(num_states);
    for (int s = 0; s < num_states; ++s)
      t[s] = elem(rng);
    bool fresh = true;
    for (const auto &m : members)
      fresh = fresh && m.values != t;
    if (fresh)
      members.push_back({"m" + std::to_string(next++), std::move(t)});
  }
  return make_algebra(lattice, states, members);
}

TransitionFrame random_frame(const StateSet &states, double density,
                             std::mt19937 &rng) {
  std::bernoulli_distribution edge(density);
  std::vector<std::pair<int, int>> pairs;
  for (int s = 0; s < states.size(); ++s)
    for (int t = 0; t < states.size(); ++t)
      if (edge(rng))
        pairs.emplace_back(s, t);
  return make_frame(states, pairs);
}

} // namespace

int main() {
  std::mt19937 rng(20230817);
  TruthLattice diamond = as_complete_lattice(
      build_poset({"0", "a", "b", "1"},
                  {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}));

  const int num_states = 96;
  const int num_members = 1500;
  PropositionAlgebra algebra = random_algebra(diamond, num_states, num_members, rng);
  TransitionFrame frame = random_frame(algebra.states, 0.15, rng);
  TransitionFunctor upper = upper_functor_from_frame(frame, algebra);

  std::printf("induced relation: |S|=%d, |B|=%d\n", num_states, num_members);
  auto t0 = clk::now();
  TransitionFrame parallel = induced_relation(upper, 0);
  double par = seconds_since(t0);
  t0 = clk::now();
  TransitionFrame serial = induced_relation_reference(upper, 0);
  double ser = seconds_since(t0);
  bool agree = parallel.matrix == serial.matrix;
  std::printf("  parallel kernel: %8.4f s\n", par);
  std::printf("  serial reference:%8.4f s\n", ser);
  std::printf("  agreement: %s, speedup %.2fx\n", agree ? "yes" : "NO",
              ser / par);
  if (!agree)
    return 1;

  // Down-set enumeration over a random 20-member bounded poset.
  PropositionAlgebra base = random_algebra(diamond, 5, 20, rng);
  std::printf("down-set enumeration: |B|=%d\n", base.size());
  t0 = clk::now();
  CanonicalStateSpace space = downset_state_space(base, 20);
  std::printf("  %d states in %.4f s\n", space.states.size(), seconds_since(t0));
  return 0;
}
