#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dynlog/dynamics.hpp"
#include "dynlog/synthesis.hpp"

#include <nlohmann/json.hpp>

namespace dynlog::io {

using json = nlohmann::ordered_json;

/// Size caps for the exhaustive scans; desk-scale by default, liftable via
/// --cap-* flags or DYNLOG_CAP_OVERRIDE=1.
struct Caps {
  int states = 12;
  int algebra = 4096;
  bool lifted = false;

  void enforce(int num_states, int num_members) const;
};

/// Lattice/poset text format: `elements:` line plus `cover: lo hi` lines.
/// The reserved name BOOL2 yields the built-in two-element lattice.
TruthLattice parse_lattice(const std::string &path_or_name);

/// Proposition file: `states:`, `prop <name> = s:<elem> ...`, and an
/// `algebra:` member list where ALL_CRISP expands to every {0,1}-tuple.
PropositionAlgebra parse_algebra(const std::string &path,
                                 const TruthLattice &lattice);

/// Automaton file: `inputs:`, `states:`, `trans: x s t` lines. Initial or
/// final state markers are rejected.
Automaton parse_automaton(const std::string &path);

/// Subposet file: a single `members:` line naming algebra members.
std::vector<int> parse_subposet(const std::string &path,
                                const PropositionAlgebra &algebra);

struct ParsedFunctor {
  std::string name;
  Direction direction = Direction::upper;
  std::vector<std::string> labels;  // first-appearance order
  std::vector<std::string> members; // first-appearance order
  std::vector<std::vector<ValueTable>> images; // [label][member]
};

/// Functor file: `functor <name> upper|lower` plus one `label <x>: <prop>
/// -> ...` line per image. The image is either a raw `state:value` table
/// over `image_states`, or the name of an algebra member; named members
/// resolve through the canonical evaluations when `space` is given.
ParsedFunctor parse_functor(const std::string &path,
                            const PropositionAlgebra &algebra,
                            const StateSet &image_states,
                            const CanonicalStateSpace *space = nullptr);

/// Reorders a parsed functor against C; every member of C must have an
/// image under every label.
PartialFunctorInput align_functor(const ParsedFunctor &parsed,
                                  const PropositionAlgebra &algebra,
                                  const SubposetHandle &C);

std::string serialize_automaton(const Automaton &a);
std::string serialize_algebra(const PropositionAlgebra &algebra);

/// DOT export; node and edge order follow declaration order, multi-edges
/// preserved.
std::string to_dot(const Automaton &a);

/// Image named by an algebra member when the table matches one, otherwise
/// the raw `state:value` spelling.
std::string describe_image(const TransitionFunctor &f, const ValueTable &img);

std::string render_functor(const TransitionFunctor &f);
std::string render_recovery(const RecoveryReport &report);
std::string render_witnesses(const WitnessReport &report, const StateSet &states,
                             const PropositionAlgebra &upper_algebra,
                             const PropositionAlgebra &lower_algebra);

json functor_to_json(const TransitionFunctor &f);
json recovery_to_json(const RecoveryReport &report);
json witnesses_to_json(const WitnessReport &report, const StateSet &states,
                       const PropositionAlgebra &upper_algebra,
                       const PropositionAlgebra &lower_algebra);

} // namespace dynlog::io
