#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dynlog/poset.hpp"

namespace dynlog {

struct StateSet {
  std::vector<std::string> names;

  int size() const { return static_cast<int>(names.size()); }
  int index_of(std::string_view name) const;
  int require(std::string_view name) const; // throws unknown_state
};

StateSet make_state_set(std::vector<std::string> names);

/// A proposition is a total map from states to lattice elements, stored as
/// the vector of element indices in state order.
using ValueTable = std::vector<int>;

struct Proposition {
  std::string name; // display only; identity is the value table
  ValueTable values;
};

/// A bounded subposet of M^S under the pointwise order. Always contains the
/// constant-bottom and constant-top propositions; members are unique as
/// value tables.
struct PropositionAlgebra {
  TruthLattice lattice;
  StateSet states;
  std::vector<Proposition> members;
  int bottom_member = -1;
  int top_member = -1;

  int size() const { return static_cast<int>(members.size()); }
  int find(const ValueTable &values) const; // -1 if absent
  int member_index(std::string_view name) const;
  bool member_leq(int i, int j) const;
  bool same_carrier(const PropositionAlgebra &other) const;
};

PropositionAlgebra make_algebra(TruthLattice lattice, StateSet states,
                                std::vector<Proposition> members);

bool pointwise_leq(const TruthLattice &lattice, const ValueTable &p,
                   const ValueTable &q);

/// Checked variant for propositions from possibly different carriers.
bool pointwise_leq(const PropositionAlgebra &algebra, const Proposition &p,
                   const Proposition &q);

/// True iff every {bottom,top}-valued tuple over S is a member.
bool contains_all_crisp(const PropositionAlgebra &algebra);

/// All 2^|S| crisp tuples in lexicographic bit order (s1 most significant).
std::vector<ValueTable> all_crisp_tuples(const TruthLattice &lattice, int num_states);

/// A subposet of an algebra, by member indices in declaration order.
/// The synthesis input C is such a handle: it must contain top, need not
/// contain bottom, and may additionally be certified meet-closed.
struct SubposetHandle {
  std::vector<int> member_indices;
  bool meet_closed = false;

  bool contains(int member) const;
};

/// Validates that `chosen` contains top and is closed under pairwise
/// pointwise meet; throws missing_top / not_meet_closed.
SubposetHandle meet_closed_subposet(const PropositionAlgebra &algebra,
                                    const std::vector<int> &chosen);

/// A plain subposet containing top, without the meet-closure certificate.
SubposetHandle subposet_with_top(const PropositionAlgebra &algebra,
                                 const std::vector<int> &chosen);

/// The pointwise embedding of Observation-style full families: the image of
/// the source inside M^S, isomorphic to the source as a bounded poset.
/// Throws not_full_set when the family does not reflect the order.
PropositionAlgebra embed_pointwise(const BoundedMorphismFamily &family);

} // namespace dynlog
