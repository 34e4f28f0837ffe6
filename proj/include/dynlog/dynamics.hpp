#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "dynlog/automaton.hpp"
#include "dynlog/propositions.hpp"

namespace dynlog {

enum class Direction { upper, lower };

/// A (possibly labelled, possibly partial-domain) transition functor.
///
/// The domain is a list of members with an explicit order; `member_eval`
/// gives the value b(t) of each member at each codomain state, which is what
/// the induced-relation conditions quantify over. For functors over a
/// proposition algebra the eval tables are the member tables themselves; for
/// synthesis inputs they are the canonical-state evaluations. Images live in
/// M^S and are not required to fall back into the domain.
struct TransitionFunctor {
  Direction direction = Direction::upper;
  TruthLattice lattice;
  StateSet states;
  std::vector<std::string> labels;
  std::vector<std::string> member_names;
  std::vector<ValueTable> member_eval;
  std::vector<std::uint8_t> member_leq_matrix;
  std::vector<std::vector<ValueTable>> images; // images[label][member]
  int bottom_member = -1; // -1 when the constant is not in the domain
  int top_member = -1;

  int num_members() const { return static_cast<int>(member_names.size()); }
  int num_labels() const { return static_cast<int>(labels.size()); }
  bool member_leq(int i, int j) const {
    return member_leq_matrix[static_cast<std::size_t>(i) * member_names.size() +
                             j] != 0;
  }
  int label_index(std::string_view name) const;
};

/// Checks order-preservation per label plus the unit laws (upper: T_x(1)=1
/// when 1 is in the domain; lower: P_x(0)=0 when 0 is). Throws
/// precondition_failed with a witness.
void validate_functor(const TransitionFunctor &f);

/// Single-label functor T_{R} on B by the meet-over-successors rule; the
/// empty successor set yields top.
TransitionFunctor upper_functor_from_frame(const TransitionFrame &frame,
                                           const PropositionAlgebra &algebra,
                                           const std::string &label = "");

/// Single-label functor P_{R} on A by the join-over-predecessors rule; the
/// empty predecessor set yields bottom.
TransitionFunctor lower_functor_from_frame(const TransitionFrame &frame,
                                           const PropositionAlgebra &algebra,
                                           const std::string &label = "");

/// Labelled T_R and P_R, one fibre per input.
std::pair<TransitionFunctor, TransitionFunctor>
labelled_functors(const Automaton &a, const PropositionAlgebra &algebra);

/// Restriction of a functor to a subposet of its domain.
TransitionFunctor restrict_functor(const TransitionFunctor &f,
                                   const std::vector<int> &members);

/// The induced relation of one label: pairs (s, t) surviving every domain
/// member's constraint (image(b)(s) <= b(t) upper; b(s) <= image(b)(t)
/// lower). Parallel over state pairs; output is deterministic.
TransitionFrame induced_relation(const TransitionFunctor &f, int label);

/// All labels assembled into the induced automaton.
Automaton induced_automaton(const TransitionFunctor &f);

struct AdjunctionWitness {
  std::string label;
  std::string a;
  std::string b;
};

struct AdjunctionResult {
  bool holds = false;
  std::optional<AdjunctionWitness> witness; // first in (label, a, b) order
};

/// Residuated-pair check: P_x(a) <= b iff a <= T_x(b), all labels, all
/// domain pairs.
AdjunctionResult check_adjunction(const TransitionFunctor &lower,
                                  const TransitionFunctor &upper);

struct InclusionReport {
  bool P_into_B = false;      // every lower image is a member of T's domain
  bool T_into_A = false;      // every upper image is a member of P's domain
  bool RT_subset_RP = false;  // observed, all labels
  bool RP_subset_RT = false;
  bool equal = false;
};

/// Requires the adjunction (throws adjunction_required otherwise); reports
/// closure flags and the observed inclusions between both induced relations.
InclusionReport check_inclusion_conditions(const TransitionFunctor &lower,
                                           const TransitionFunctor &upper);

struct WitnessReport {
  bool upper_ok = false;
  bool lower_ok = false;
  bool upper_per_target = false; // the stronger one-witness-per-t form held
  bool lower_per_source = false;
  // One entry per non-pair (s, t): the member index that separated it,
  // or -1 when none exists.
  std::vector<std::tuple<int, int, int>> upper_witnesses;
  std::vector<std::tuple<int, int, int>> lower_witnesses;
};

/// Witness conditions guaranteeing recoverability of a single frame: for
/// each (s, t) not in R, some b in B with meet{b(u) | s R u} not<= b(t) and
/// b(t) != 1 (dually for the lower side with joins over predecessors).
WitnessReport check_recovery_witnesses(const TransitionFrame &frame,
                                       const PropositionAlgebra &upper_algebra,
                                       const PropositionAlgebra &lower_algebra);

struct LabelRecovery {
  std::string label;
  TransitionFrame induced_upper;
  TransitionFrame induced_lower;
  bool upper_matches = false;
  bool lower_matches = false;
};

struct RecoveryReport {
  std::vector<LabelRecovery> per_label;
  bool upper_overall = false;
  bool lower_overall = false;
  bool overall = false;
  bool upper_closed = false; // T_R(B) within B, all labels
  bool lower_closed = false; // P_R(B) within B, all labels
};

/// Computes both labelled functors, both induced automata, and compares
/// against the original relation per label and side.
RecoveryReport recover(const Automaton &a, const PropositionAlgebra &algebra);

} // namespace dynlog
