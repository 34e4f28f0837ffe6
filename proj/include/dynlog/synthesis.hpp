#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dynlog/dynamics.hpp"

namespace dynlog {

enum class SpaceKind { downset, ultrafilter };

/// A canonical state space over an abstract bounded poset B: states are
/// proper down-sets of B (general case) or ultrafilters (Boolean case),
/// each acting as a {0,1}-valued evaluation of the members.
struct CanonicalStateSpace {
  SpaceKind kind = SpaceKind::downset;
  std::vector<std::string> member_names; // of the base B, declaration order
  StateSet states;
  std::vector<std::vector<int>> eval;     // eval[state][member], 0 or 1
  std::vector<std::vector<int>> downsets; // member indices, downset kind only
  std::vector<int> atoms;                 // atom member index, ultrafilter kind only
};

/// Enumerates all down-sets D of B with bottom in D and top outside D.
/// States are named by the antichain of maximal elements of D. Exponential
/// in |B|; capped (size_cap_exceeded) unless lifted.
CanonicalStateSpace downset_state_space(const PropositionAlgebra &base,
                                        int member_cap = 20);

/// Validates that B is a finite Boolean lattice under the pointwise
/// operations (closure, unique complements, join-of-atoms decomposition)
/// and returns one state per atom, named by the atom. Throws not_boolean.
CanonicalStateSpace ultrafilter_state_space(const PropositionAlgebra &base);

/// A user-supplied partial functor: per-label image tables over the
/// canonical states for each member of the subposet C, values in {0,1}.
struct PartialFunctorInput {
  Direction direction = Direction::upper;
  std::vector<std::string> labels;
  std::vector<std::vector<ValueTable>> images; // [label][C position][state]
};

struct MeetPreservationResult {
  bool ok = false;
  std::string witness_a;
  std::string witness_b;
};

/// True iff the label's images satisfy T(y meet z) = T(y) meet T(z) for all
/// members of the meet-closed subposet C, and T(1) = 1.
MeetPreservationResult check_meet_preserving(const PropositionAlgebra &base,
                                             const SubposetHandle &C,
                                             const PartialFunctorInput &input,
                                             int label);

struct SynthesisResult {
  Automaton automaton;         // over the canonical states
  TransitionFunctor extended;  // full functor on all of B
  bool extension_verified = false;
};

/// Builds the induced automaton over the canonical states from a partial
/// upper functor on C (C must contain top), extends it to all of B, and
/// verifies that the extension agrees with the input on C. Verification
/// failure raises extension_mismatch. Ultrafilter spaces additionally
/// require C meet-closed and the input meet-preserving.
SynthesisResult synthesize(const PropositionAlgebra &base,
                           const SubposetHandle &C,
                           const PartialFunctorInput &input,
                           const CanonicalStateSpace &space);

/// Order-dual of synthesize for a partial lower functor on C containing
/// bottom: induced relation by the lower rule, extension by joins over
/// predecessors, verification on C.
SynthesisResult synthesize_dual(const PropositionAlgebra &base,
                                const SubposetHandle &C,
                                const PartialFunctorInput &input,
                                const CanonicalStateSpace &space);

/// The base algebra re-expressed over the canonical states: one member per
/// member of B with value table h_state(member).
PropositionAlgebra algebra_over_space(const PropositionAlgebra &base,
                                      const CanonicalStateSpace &space);

} // namespace dynlog
