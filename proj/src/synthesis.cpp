#include "dynlog/synthesis.hpp"

#include <algorithm>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dynlog {

namespace {

std::string downset_name(const PropositionAlgebra &base,
                         const std::vector<int> &members) {
  // Named by the antichain of maximal elements, declaration order.
  std::vector<int> maximal;
  for (int i : members) {
    bool is_max = true;
    for (int j : members)
      if (i != j && base.member_leq(i, j))
        is_max = false;
    if (is_max)
      maximal.push_back(i);
  }
  std::string name = "{";
  for (std::size_t k = 0; k < maximal.size(); ++k) {
    if (k)
      name += ",";
    name += base.members[maximal[k]].name;
  }
  name += "}";
  return name;
}

void assert_full(const CanonicalStateSpace &space, const PropositionAlgebra &base) {
  const int m = base.size();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (base.member_leq(i, j))
        continue;
      bool separated = false;
      for (const auto &ev : space.eval)
        if (ev[i] > ev[j]) {
          separated = true;
          break;
        }
      if (!separated)
        fail(errc::validation_error,
             "canonical family fails to reflect the order of the base poset");
    }
}

ValueTable pointwise_meet(const PropositionAlgebra &base, const ValueTable &p,
                          const ValueTable &q) {
  ValueTable out(p.size());
  for (std::size_t s = 0; s < p.size(); ++s)
    out[s] = base.lattice.meet(p[s], q[s]);
  return out;
}

ValueTable pointwise_join(const PropositionAlgebra &base, const ValueTable &p,
                          const ValueTable &q) {
  ValueTable out(p.size());
  for (std::size_t s = 0; s < p.size(); ++s)
    out[s] = base.lattice.join(p[s], q[s]);
  return out;
}

void validate_input_shape(const PropositionAlgebra &base,
                          const SubposetHandle &C,
                          const PartialFunctorInput &input,
                          const CanonicalStateSpace &space) {
  if (base.members.size() != space.member_names.size())
    fail(errc::carrier_mismatch, "state space was built over a different base");
  for (std::size_t i = 0; i < space.member_names.size(); ++i)
    if (base.members[i].name != space.member_names[i])
      fail(errc::carrier_mismatch, "state space was built over a different base");
  if (input.labels.empty())
    fail(errc::validation_error, "functor has no labels");
  if (input.images.size() != input.labels.size())
    fail(errc::validation_error, "one image table per label required");
  for (const auto &imgs : input.images) {
    if (imgs.size() != C.member_indices.size())
      fail(errc::validation_error, "image table does not cover the subposet");
    for (const auto &img : imgs) {
      if (static_cast<int>(img.size()) != space.states.size())
        fail(errc::validation_error, "image has the wrong arity");
      for (int v : img)
        if (v != 0 && v != 1)
          fail(errc::validation_error, "image values must be 0 or 1");
    }
  }
}

/// The partial input as a TransitionFunctor over the canonical states,
/// with the subposet's canonical evaluations as the domain tables.
TransitionFunctor partial_as_functor(const PropositionAlgebra &base,
                                     const SubposetHandle &C,
                                     const PartialFunctorInput &input,
                                     const CanonicalStateSpace &space) {
  TransitionFunctor f;
  f.direction = input.direction;
  f.lattice = bool2();
  f.states = space.states;
  f.labels = input.labels;
  f.images = input.images;
  const int m = static_cast<int>(C.member_indices.size());
  f.member_leq_matrix.assign(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i) {
    int bi = C.member_indices[i];
    f.member_names.push_back(base.members[bi].name);
    ValueTable ev(space.states.size());
    for (int s = 0; s < space.states.size(); ++s)
      ev[s] = space.eval[s][bi];
    f.member_eval.push_back(std::move(ev));
    if (bi == base.bottom_member)
      f.bottom_member = i;
    if (bi == base.top_member)
      f.top_member = i;
    for (int j = 0; j < m; ++j)
      f.member_leq_matrix[static_cast<std::size_t>(i) * m + j] =
          base.member_leq(bi, C.member_indices[j]) ? 1 : 0;
  }
  return f;
}

SynthesisResult synthesize_impl(const PropositionAlgebra &base,
                                const SubposetHandle &C,
                                const PartialFunctorInput &input,
                                const CanonicalStateSpace &space,
                                Direction dir) {
  validate_input_shape(base, C, input, space);

  TransitionFunctor partial = partial_as_functor(base, C, input, space);
  if (dir == Direction::upper) {
    if (partial.top_member < 0)
      fail(errc::missing_top, "subposet C must contain the top proposition");
  } else {
    if (partial.bottom_member < 0)
      fail(errc::precondition_failed, "subposet C must contain the bottom proposition");
  }
  validate_functor(partial); // monotone + unit law

  if (space.kind == SpaceKind::ultrafilter) {
    if (dir == Direction::upper) {
      if (!C.meet_closed)
        fail(errc::precondition_failed,
             "ultrafilter synthesis requires a meet-closed subposet");
      for (std::size_t l = 0; l < input.labels.size(); ++l) {
        auto mp = check_meet_preserving(base, C, input, static_cast<int>(l));
        if (!mp.ok)
          fail(errc::precondition_failed,
               "label '" + input.labels[l] + "': not meet-preserving on ('" +
                   mp.witness_a + "', '" + mp.witness_b + "')");
      }
    } else {
      // Dual hypothesis: join-closure of C and join-preservation.
      for (std::size_t a = 0; a < C.member_indices.size(); ++a)
        for (std::size_t b = a; b < C.member_indices.size(); ++b) {
          ValueTable j = pointwise_join(base, base.members[C.member_indices[a]].values,
                                        base.members[C.member_indices[b]].values);
          int idx = base.find(j);
          if (idx < 0 || !C.contains(idx))
            fail(errc::precondition_failed,
                 "ultrafilter dual synthesis requires a join-closed subposet");
        }
      for (std::size_t l = 0; l < input.labels.size(); ++l)
        for (std::size_t a = 0; a < C.member_indices.size(); ++a)
          for (std::size_t b = a; b < C.member_indices.size(); ++b) {
            ValueTable j =
                pointwise_join(base, base.members[C.member_indices[a]].values,
                               base.members[C.member_indices[b]].values);
            std::size_t pos = 0;
            while (C.member_indices[pos] != base.find(j))
              ++pos;
            for (int s = 0; s < space.states.size(); ++s)
              if (std::max(input.images[l][a][s], input.images[l][b][s]) !=
                  input.images[l][pos][s])
                fail(errc::precondition_failed,
                     "label '" + input.labels[l] + "': not join-preserving on ('" +
                         base.members[C.member_indices[a]].name + "', '" +
                         base.members[C.member_indices[b]].name + "')");
          }
    }
  }

  SynthesisResult result;
  std::vector<std::tuple<int, int, int>> triples;
  for (int l = 0; l < partial.num_labels(); ++l) {
    TransitionFrame fr = induced_relation(partial, l);
    for (auto [s, t] : fr.pairs)
      triples.emplace_back(l, s, t);
  }
  result.automaton =
      make_automaton(input.labels, space.states, std::move(triples));

  PropositionAlgebra hatB = algebra_over_space(base, space);
  auto [upper, lower] = labelled_functors(result.automaton, hatB);
  result.extended = dir == Direction::upper ? std::move(upper) : std::move(lower);

  // Member order in hatB follows the base declaration order, so C positions
  // translate directly.
  for (int l = 0; l < result.extended.num_labels(); ++l)
    for (std::size_t k = 0; k < C.member_indices.size(); ++k) {
      int bi = C.member_indices[k];
      if (result.extended.images[l][bi] != input.images[l][k])
        fail(errc::extension_mismatch,
             "label '" + input.labels[l] + "': extension disagrees with the input on '" +
                 base.members[bi].name + "'");
    }
  result.extension_verified = true;
  return result;
}

} // namespace

CanonicalStateSpace downset_state_space(const PropositionAlgebra &base,
                                        int member_cap) {
  const int m = base.size();
  if (m > member_cap)
    fail(errc::size_cap_exceeded,
         "down-set enumeration capped at " + std::to_string(member_cap) +
             " members");

  const std::uint64_t count = std::uint64_t{1} << m;
  std::vector<std::uint8_t> keep(count, 0);

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (count >= 4096)
#endif
  for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(count); ++mask) {
    auto in = [&](int i) { return (mask >> i) & 1; };
    if (!in(base.bottom_member) || in(base.top_member))
      continue;
    bool closed = true;
    for (int i = 0; i < m && closed; ++i)
      if (in(i))
        for (int j = 0; j < m && closed; ++j)
          if (!in(j) && base.member_leq(j, i))
            closed = false;
    keep[mask] = closed;
  }

  CanonicalStateSpace space;
  space.kind = SpaceKind::downset;
  for (const auto &member : base.members)
    space.member_names.push_back(member.name);
  std::vector<std::string> state_names;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (!keep[mask])
      continue;
    std::vector<int> members;
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1)
        members.push_back(i);
    state_names.push_back(downset_name(base, members));
    std::vector<int> ev(m);
    for (int i = 0; i < m; ++i)
      ev[i] = ((mask >> i) & 1) ? 0 : 1;
    space.eval.push_back(std::move(ev));
    space.downsets.push_back(std::move(members));
  }
  space.states = make_state_set(std::move(state_names));
  assert_full(space, base);
  return space;
}

CanonicalStateSpace ultrafilter_state_space(const PropositionAlgebra &base) {
  const int m = base.size();
  // Closure under the pointwise operations.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (base.find(pointwise_meet(base, base.members[i].values,
                                   base.members[j].values)) < 0 ||
          base.find(pointwise_join(base, base.members[i].values,
                                   base.members[j].values)) < 0)
        fail(errc::not_boolean, "members '" + base.members[i].name + "' and '" +
                                    base.members[j].name +
                                    "' lack a member meet or join");
    }
  // Unique complements.
  const auto &bot = base.members[base.bottom_member].values;
  const auto &top = base.members[base.top_member].values;
  for (int i = 0; i < m; ++i) {
    int complement = -1;
    for (int j = 0; j < m; ++j) {
      if (pointwise_meet(base, base.members[i].values, base.members[j].values) ==
              bot &&
          pointwise_join(base, base.members[i].values, base.members[j].values) ==
              top) {
        if (complement >= 0)
          fail(errc::not_boolean,
               "member '" + base.members[i].name + "' has two complements");
        complement = j;
      }
    }
    if (complement < 0)
      fail(errc::not_boolean,
           "member '" + base.members[i].name + "' has no complement");
  }

  // Atoms: minimal members strictly above bottom.
  std::vector<int> atoms;
  for (int i = 0; i < m; ++i) {
    if (i == base.bottom_member)
      continue;
    bool minimal = true;
    for (int j = 0; j < m && minimal; ++j)
      if (j != i && j != base.bottom_member && base.member_leq(j, i))
        minimal = false;
    if (minimal)
      atoms.push_back(i);
  }
  if ((std::uint64_t{1} << atoms.size()) != static_cast<std::uint64_t>(m))
    fail(errc::not_boolean, "member count is not 2^(number of atoms)");
  // Every member must be the join of the atoms below it.
  for (int i = 0; i < m; ++i) {
    ValueTable acc = bot;
    for (int a : atoms)
      if (base.member_leq(a, i))
        acc = pointwise_join(base, acc, base.members[a].values);
    if (acc != base.members[i].values)
      fail(errc::not_boolean, "member '" + base.members[i].name +
                                  "' is not the join of the atoms below it");
  }

  CanonicalStateSpace space;
  space.kind = SpaceKind::ultrafilter;
  for (const auto &member : base.members)
    space.member_names.push_back(member.name);
  std::vector<std::string> state_names;
  for (int a : atoms) {
    state_names.push_back(base.members[a].name);
    std::vector<int> ev(m);
    for (int i = 0; i < m; ++i)
      ev[i] = base.member_leq(a, i) ? 1 : 0;
    space.eval.push_back(std::move(ev));
  }
  space.atoms = std::move(atoms);
  space.states = make_state_set(std::move(state_names));
  assert_full(space, base);
  return space;
}

MeetPreservationResult check_meet_preserving(const PropositionAlgebra &base,
                                             const SubposetHandle &C,
                                             const PartialFunctorInput &input,
                                             int label) {
  const auto &imgs = input.images[label];
  // Unit law first.
  for (std::size_t k = 0; k < C.member_indices.size(); ++k)
    if (C.member_indices[k] == base.top_member)
      for (int v : imgs[k])
        if (v != 1)
          return {false, base.members[base.top_member].name,
                  base.members[base.top_member].name};
  for (std::size_t a = 0; a < C.member_indices.size(); ++a)
    for (std::size_t b = a; b < C.member_indices.size(); ++b) {
      ValueTable mt = pointwise_meet(base, base.members[C.member_indices[a]].values,
                                     base.members[C.member_indices[b]].values);
      int idx = base.find(mt);
      if (idx < 0 || !C.contains(idx))
        return {false, base.members[C.member_indices[a]].name,
                base.members[C.member_indices[b]].name};
      std::size_t pos = 0;
      while (C.member_indices[pos] != idx)
        ++pos;
      for (std::size_t s = 0; s < imgs[a].size(); ++s)
        if (std::min(imgs[a][s], imgs[b][s]) != imgs[pos][s])
          return {false, base.members[C.member_indices[a]].name,
                  base.members[C.member_indices[b]].name};
    }
  return {true, "", ""};
}

PropositionAlgebra algebra_over_space(const PropositionAlgebra &base,
                                      const CanonicalStateSpace &space) {
  std::vector<Proposition> members;
  members.reserve(base.members.size());
  for (int i = 0; i < base.size(); ++i) {
    ValueTable t(space.states.size());
    for (int s = 0; s < space.states.size(); ++s)
      t[s] = space.eval[s][i];
    members.push_back({base.members[i].name, std::move(t)});
  }
  return make_algebra(bool2(), space.states, std::move(members));
}

SynthesisResult synthesize(const PropositionAlgebra &base,
                           const SubposetHandle &C,
                           const PartialFunctorInput &input,
                           const CanonicalStateSpace &space) {
  if (input.direction != Direction::upper)
    fail(errc::validation_error, "synthesize expects an upper functor");
  return synthesize_impl(base, C, input, space, Direction::upper);
}

SynthesisResult synthesize_dual(const PropositionAlgebra &base,
                                const SubposetHandle &C,
                                const PartialFunctorInput &input,
                                const CanonicalStateSpace &space) {
  if (input.direction != Direction::lower)
    fail(errc::validation_error, "synthesize_dual expects a lower functor");
  return synthesize_impl(base, C, input, space, Direction::lower);
}

} // namespace dynlog
