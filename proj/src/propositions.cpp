#include "dynlog/propositions.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace dynlog {

int StateSet::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names[i] == name)
      return i;
  return -1;
}

int StateSet::require(std::string_view name) const {
  int i = index_of(name);
  if (i < 0)
    fail(errc::unknown_state, "unknown state '" + std::string(name) + "'");
  return i;
}

StateSet make_state_set(std::vector<std::string> names) {
  if (names.empty())
    fail(errc::validation_error, "state set must be non-empty");
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size())
    fail(errc::validation_error, "duplicate state names");
  return StateSet{std::move(names)};
}

int PropositionAlgebra::find(const ValueTable &values) const {
  for (int i = 0; i < size(); ++i)
    if (members[i].values == values)
      return i;
  return -1;
}

int PropositionAlgebra::member_index(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (members[i].name == name)
      return i;
  return -1;
}

bool PropositionAlgebra::member_leq(int i, int j) const {
  return pointwise_leq(lattice, members[i].values, members[j].values);
}

bool PropositionAlgebra::same_carrier(const PropositionAlgebra &other) const {
  return states.names == other.states.names &&
         lattice.poset.names == other.lattice.poset.names &&
         lattice.poset.leq_matrix == other.lattice.poset.leq_matrix;
}

PropositionAlgebra make_algebra(TruthLattice lattice, StateSet states,
                                std::vector<Proposition> members) {
  PropositionAlgebra alg;
  alg.lattice = std::move(lattice);
  alg.states = std::move(states);
  alg.members = std::move(members);

  const int n = alg.states.size();
  for (const auto &m : alg.members) {
    if (static_cast<int>(m.values.size()) != n)
      fail(errc::validation_error, "proposition '" + m.name + "' is not total");
    for (int v : m.values)
      if (v < 0 || v >= alg.lattice.size())
        fail(errc::validation_error,
             "proposition '" + m.name + "' has an invalid lattice element");
  }
  for (int i = 0; i < alg.size(); ++i)
    for (int j = i + 1; j < alg.size(); ++j)
      if (alg.members[i].values == alg.members[j].values)
        fail(errc::validation_error, "duplicate members '" + alg.members[i].name +
                                         "' and '" + alg.members[j].name + "'");

  ValueTable bot(n, alg.lattice.bottom()), top(n, alg.lattice.top());
  alg.bottom_member = alg.find(bot);
  alg.top_member = alg.find(top);
  if (alg.bottom_member < 0)
    fail(errc::validation_error, "algebra lacks the constant-bottom proposition");
  if (alg.top_member < 0)
    fail(errc::validation_error, "algebra lacks the constant-top proposition");
  return alg;
}

bool pointwise_leq(const TruthLattice &lattice, const ValueTable &p,
                   const ValueTable &q) {
  for (std::size_t s = 0; s < p.size(); ++s)
    if (!lattice.leq(p[s], q[s]))
      return false;
  return true;
}

bool pointwise_leq(const PropositionAlgebra &algebra, const Proposition &p,
                   const Proposition &q) {
  if (p.values.size() != q.values.size() ||
      p.values.size() != static_cast<std::size_t>(algebra.states.size()))
    fail(errc::carrier_mismatch, "propositions over different state sets");
  return pointwise_leq(algebra.lattice, p.values, q.values);
}

std::vector<ValueTable> all_crisp_tuples(const TruthLattice &lattice,
                                         int num_states) {
  std::vector<ValueTable> out;
  const std::size_t count = std::size_t{1} << num_states;
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    ValueTable t(num_states, lattice.bottom());
    for (int s = 0; s < num_states; ++s)
      if (mask & (std::size_t{1} << (num_states - 1 - s)))
        t[s] = lattice.top();
    out.push_back(std::move(t));
  }
  return out;
}

bool contains_all_crisp(const PropositionAlgebra &algebra) {
  if (algebra.states.size() > 20)
    fail(errc::size_cap_exceeded, "crisp enumeration capped at 20 states");
  for (const auto &t : all_crisp_tuples(algebra.lattice, algebra.states.size()))
    if (algebra.find(t) < 0)
      return false;
  return true;
}

bool SubposetHandle::contains(int member) const {
  return std::find(member_indices.begin(), member_indices.end(), member) !=
         member_indices.end();
}

SubposetHandle subposet_with_top(const PropositionAlgebra &algebra,
                                 const std::vector<int> &chosen) {
  SubposetHandle h;
  for (int i : chosen) {
    if (i < 0 || i >= algebra.size())
      fail(errc::validation_error, "subposet member index out of range");
    if (!h.contains(i))
      h.member_indices.push_back(i);
  }
  if (!h.contains(algebra.top_member))
    fail(errc::missing_top, "subposet does not contain the top proposition");
  return h;
}

SubposetHandle meet_closed_subposet(const PropositionAlgebra &algebra,
                                    const std::vector<int> &chosen) {
  SubposetHandle h = subposet_with_top(algebra, chosen);
  const int n = algebra.states.size();
  for (std::size_t a = 0; a < h.member_indices.size(); ++a)
    for (std::size_t b = a; b < h.member_indices.size(); ++b) {
      const auto &p = algebra.members[h.member_indices[a]];
      const auto &q = algebra.members[h.member_indices[b]];
      ValueTable m(n);
      for (int s = 0; s < n; ++s)
        m[s] = algebra.lattice.meet(p.values[s], q.values[s]);
      int idx = algebra.find(m);
      if (idx < 0 || !h.contains(idx))
        fail(errc::not_meet_closed,
             "meet of '" + p.name + "' and '" + q.name + "' is not in the subposet");
    }
  h.meet_closed = true;
  return h;
}

PropositionAlgebra embed_pointwise(const BoundedMorphismFamily &family) {
  if (!check_full_set(family))
    fail(errc::not_full_set, "morphism family does not reflect the order");
  StateSet states = make_state_set(family.index_names);
  std::vector<Proposition> members;
  members.reserve(family.source.names.size());
  for (int a = 0; a < family.source.size(); ++a) {
    ValueTable t(family.index_names.size());
    for (std::size_t s = 0; s < family.maps.size(); ++s)
      t[s] = family.maps[s][a];
    members.push_back({family.source.names[a], std::move(t)});
  }
  return make_algebra(family.target, std::move(states), std::move(members));
}

} // namespace dynlog
