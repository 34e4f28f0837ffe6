#include "dynlog/dynamics.hpp"

#include <algorithm>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dynlog {

namespace {

void require_same_states(const TransitionFrame &frame,
                         const PropositionAlgebra &algebra) {
  if (frame.states.names != algebra.states.names)
    fail(errc::carrier_mismatch, "frame and algebra use different state sets");
}

std::vector<std::uint8_t> member_order(const PropositionAlgebra &algebra) {
  const int m = algebra.size();
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      leq[static_cast<std::size_t>(i) * m + j] = algebra.member_leq(i, j) ? 1 : 0;
  return leq;
}

TransitionFunctor functor_base(Direction dir, const PropositionAlgebra &algebra) {
  TransitionFunctor f;
  f.direction = dir;
  f.lattice = algebra.lattice;
  f.states = algebra.states;
  for (const auto &m : algebra.members) {
    f.member_names.push_back(m.name);
    f.member_eval.push_back(m.values);
  }
  f.member_leq_matrix = member_order(algebra);
  f.bottom_member = algebra.bottom_member;
  f.top_member = algebra.top_member;
  return f;
}

std::vector<ValueTable> upper_images(const TransitionFrame &frame,
                                     const PropositionAlgebra &algebra) {
  const int n = frame.states.size();
  std::vector<ValueTable> images;
  images.reserve(algebra.size());
  for (const auto &b : algebra.members) {
    ValueTable img(n);
    for (int s = 0; s < n; ++s) {
      int acc = algebra.lattice.top();
      for (int t = 0; t < n; ++t)
        if (frame.related(s, t))
          acc = algebra.lattice.meet(acc, b.values[t]);
      img[s] = acc;
    }
    images.push_back(std::move(img));
  }
  return images;
}

std::vector<ValueTable> lower_images(const TransitionFrame &frame,
                                     const PropositionAlgebra &algebra) {
  const int n = frame.states.size();
  std::vector<ValueTable> images;
  images.reserve(algebra.size());
  for (const auto &a : algebra.members) {
    ValueTable img(n);
    for (int t = 0; t < n; ++t) {
      int acc = algebra.lattice.bottom();
      for (int s = 0; s < n; ++s)
        if (frame.related(s, t))
          acc = algebra.lattice.join(acc, a.values[s]);
      img[t] = acc;
    }
    images.push_back(std::move(img));
  }
  return images;
}

bool image_in_members(const std::vector<ValueTable> &images,
                      const std::vector<ValueTable> &member_eval) {
  for (const auto &img : images)
    if (std::find(member_eval.begin(), member_eval.end(), img) ==
        member_eval.end())
      return false;
  return true;
}

bool frame_subset(const TransitionFrame &a, const TransitionFrame &b) {
  for (auto [s, t] : a.pairs)
    if (!b.related(s, t))
      return false;
  return true;
}

} // namespace

int TransitionFunctor::label_index(std::string_view name) const {
  for (int i = 0; i < num_labels(); ++i)
    if (labels[i] == name)
      return i;
  return -1;
}

void validate_functor(const TransitionFunctor &f) {
  const int m = f.num_members();
  const int n = f.states.size();
  for (int l = 0; l < f.num_labels(); ++l) {
    const auto &imgs = f.images[l];
    if (static_cast<int>(imgs.size()) != m)
      fail(errc::precondition_failed,
           "label '" + f.labels[l] + "': image table is not total");
    for (int i = 0; i < m; ++i)
      if (static_cast<int>(imgs[i].size()) != n)
        fail(errc::precondition_failed,
             "label '" + f.labels[l] + "': image of '" + f.member_names[i] +
                 "' has the wrong arity");
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (f.member_leq(i, j) &&
            !pointwise_leq(f.lattice, imgs[i], imgs[j]))
          fail(errc::precondition_failed,
               "label '" + f.labels[l] + "': not monotone on '" +
                   f.member_names[i] + "' <= '" + f.member_names[j] + "'");
    if (f.direction == Direction::upper && f.top_member >= 0) {
      for (int v : imgs[f.top_member])
        if (v != f.lattice.top())
          fail(errc::precondition_failed,
               "label '" + f.labels[l] + "': top is not preserved");
    }
    if (f.direction == Direction::lower && f.bottom_member >= 0) {
      for (int v : imgs[f.bottom_member])
        if (v != f.lattice.bottom())
          fail(errc::precondition_failed,
               "label '" + f.labels[l] + "': bottom is not preserved");
    }
  }
}

TransitionFunctor upper_functor_from_frame(const TransitionFrame &frame,
                                           const PropositionAlgebra &algebra,
                                           const std::string &label) {
  require_same_states(frame, algebra);
  TransitionFunctor f = functor_base(Direction::upper, algebra);
  f.labels = {label};
  f.images.push_back(upper_images(frame, algebra));
  return f;
}

TransitionFunctor lower_functor_from_frame(const TransitionFrame &frame,
                                           const PropositionAlgebra &algebra,
                                           const std::string &label) {
  require_same_states(frame, algebra);
  TransitionFunctor f = functor_base(Direction::lower, algebra);
  f.labels = {label};
  f.images.push_back(lower_images(frame, algebra));
  return f;
}

std::pair<TransitionFunctor, TransitionFunctor>
labelled_functors(const Automaton &a, const PropositionAlgebra &algebra) {
  if (a.states.names != algebra.states.names)
    fail(errc::carrier_mismatch, "automaton and algebra use different state sets");
  TransitionFunctor upper = functor_base(Direction::upper, algebra);
  TransitionFunctor lower = functor_base(Direction::lower, algebra);
  for (std::size_t x = 0; x < a.inputs.size(); ++x) {
    TransitionFrame fibre = a.fibre(static_cast<int>(x));
    upper.labels.push_back(a.inputs[x]);
    upper.images.push_back(upper_images(fibre, algebra));
    lower.labels.push_back(a.inputs[x]);
    lower.images.push_back(lower_images(fibre, algebra));
  }
  return {upper, lower};
}

TransitionFunctor restrict_functor(const TransitionFunctor &f,
                                   const std::vector<int> &members) {
  TransitionFunctor r;
  r.direction = f.direction;
  r.lattice = f.lattice;
  r.states = f.states;
  r.labels = f.labels;
  const int m = static_cast<int>(members.size());
  r.member_leq_matrix.assign(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i) {
    int src = members[i];
    if (src < 0 || src >= f.num_members())
      fail(errc::validation_error, "restriction member index out of range");
    r.member_names.push_back(f.member_names[src]);
    r.member_eval.push_back(f.member_eval[src]);
    if (src == f.bottom_member)
      r.bottom_member = i;
    if (src == f.top_member)
      r.top_member = i;
    for (int j = 0; j < m; ++j)
      r.member_leq_matrix[static_cast<std::size_t>(i) * m + j] =
          f.member_leq(src, members[j]) ? 1 : 0;
  }
  for (const auto &imgs : f.images) {
    std::vector<ValueTable> sub;
    sub.reserve(members.size());
    for (int src : members)
      sub.push_back(imgs[src]);
    r.images.push_back(std::move(sub));
  }
  return r;
}

TransitionFrame induced_relation(const TransitionFunctor &f, int label) {
  if (label < 0 || label >= f.num_labels())
    fail(errc::unknown_input, "label index out of range");
  const int n = f.states.size();
  const int m = f.num_members();
  const auto &imgs = f.images[label];
  const bool upper = f.direction == Direction::upper;
  std::vector<std::uint8_t> rel(static_cast<std::size_t>(n) * n, 1);

#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(static) if (n * n >= 256)
#endif
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      std::uint8_t keep = 1;
      for (int i = 0; i < m; ++i) {
        bool ok = upper ? f.lattice.leq(imgs[i][s], f.member_eval[i][t])
                        : f.lattice.leq(f.member_eval[i][s], imgs[i][t]);
        if (!ok) {
          keep = 0;
          break;
        }
      }
      rel[static_cast<std::size_t>(s) * n + t] = keep;
    }

  std::vector<std::pair<int, int>> pairs;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (rel[static_cast<std::size_t>(s) * n + t])
        pairs.emplace_back(s, t);
  return make_frame(f.states, std::move(pairs));
}

Automaton induced_automaton(const TransitionFunctor &f) {
  std::vector<std::tuple<int, int, int>> triples;
  for (int l = 0; l < f.num_labels(); ++l) {
    TransitionFrame fr = induced_relation(f, l);
    for (auto [s, t] : fr.pairs)
      triples.emplace_back(l, s, t);
  }
  return make_automaton(f.labels, f.states, std::move(triples));
}

AdjunctionResult check_adjunction(const TransitionFunctor &lower,
                                  const TransitionFunctor &upper) {
  if (lower.direction != Direction::lower || upper.direction != Direction::upper)
    fail(errc::carrier_mismatch, "expected a (lower, upper) functor pair");
  if (lower.states.names != upper.states.names ||
      lower.lattice.poset.names != upper.lattice.poset.names ||
      lower.labels != upper.labels)
    fail(errc::carrier_mismatch, "functors live over different carriers");

  for (int l = 0; l < lower.num_labels(); ++l)
    for (int i = 0; i < lower.num_members(); ++i)
      for (int j = 0; j < upper.num_members(); ++j) {
        bool lhs = pointwise_leq(lower.lattice, lower.images[l][i],
                                 upper.member_eval[j]);
        bool rhs = pointwise_leq(lower.lattice, lower.member_eval[i],
                                 upper.images[l][j]);
        if (lhs != rhs)
          return {false,
                  AdjunctionWitness{lower.labels[l], lower.member_names[i],
                                    upper.member_names[j]}};
      }
  return {true, std::nullopt};
}

InclusionReport check_inclusion_conditions(const TransitionFunctor &lower,
                                           const TransitionFunctor &upper) {
  if (!check_adjunction(lower, upper).holds)
    fail(errc::adjunction_required,
         "inclusion conditions require the residuated pair law");

  InclusionReport rep;
  rep.P_into_B = true;
  rep.T_into_A = true;
  for (const auto &imgs : lower.images)
    rep.P_into_B = rep.P_into_B && image_in_members(imgs, upper.member_eval);
  for (const auto &imgs : upper.images)
    rep.T_into_A = rep.T_into_A && image_in_members(imgs, lower.member_eval);

  rep.RT_subset_RP = true;
  rep.RP_subset_RT = true;
  for (int l = 0; l < lower.num_labels(); ++l) {
    TransitionFrame rt = induced_relation(upper, l);
    TransitionFrame rp = induced_relation(lower, l);
    rep.RT_subset_RP = rep.RT_subset_RP && frame_subset(rt, rp);
    rep.RP_subset_RT = rep.RP_subset_RT && frame_subset(rp, rt);
  }
  rep.equal = rep.RT_subset_RP && rep.RP_subset_RT;
  return rep;
}

WitnessReport check_recovery_witnesses(const TransitionFrame &frame,
                                       const PropositionAlgebra &upper_algebra,
                                       const PropositionAlgebra &lower_algebra) {
  require_same_states(frame, upper_algebra);
  require_same_states(frame, lower_algebra);
  const int n = frame.states.size();
  const auto &latU = upper_algebra.lattice;
  const auto &latL = lower_algebra.lattice;
  WitnessReport rep;
  rep.upper_ok = true;
  rep.lower_ok = true;
  rep.upper_per_target = true;
  rep.lower_per_source = true;

  auto upper_separates = [&](const Proposition &b, int s, int t) {
    int acc = latU.top();
    for (int u = 0; u < n; ++u)
      if (frame.related(s, u))
        acc = latU.meet(acc, b.values[u]);
    return !latU.leq(acc, b.values[t]) && b.values[t] != latU.top();
  };
  auto lower_separates = [&](const Proposition &a, int s, int t) {
    int acc = latL.bottom();
    for (int u = 0; u < n; ++u)
      if (frame.related(u, t))
        acc = latL.join(acc, a.values[u]);
    return !latL.leq(a.values[s], acc) && a.values[s] != latL.bottom();
  };

  for (int t = 0; t < n; ++t) {
    bool shared_exists = false;
    for (int i = 0; i < upper_algebra.size() && !shared_exists; ++i) {
      bool works = true;
      for (int s = 0; s < n && works; ++s)
        if (!frame.related(s, t))
          works = upper_separates(upper_algebra.members[i], s, t);
      shared_exists = works;
    }
    rep.upper_per_target = rep.upper_per_target && shared_exists;
    for (int s = 0; s < n; ++s) {
      if (frame.related(s, t))
        continue;
      int found = -1;
      for (int i = 0; i < upper_algebra.size(); ++i)
        if (upper_separates(upper_algebra.members[i], s, t)) {
          found = i;
          break;
        }
      rep.upper_witnesses.emplace_back(s, t, found);
      rep.upper_ok = rep.upper_ok && found >= 0;
    }
  }

  for (int s = 0; s < n; ++s) {
    bool shared_exists = false;
    for (int i = 0; i < lower_algebra.size() && !shared_exists; ++i) {
      bool works = true;
      for (int t = 0; t < n && works; ++t)
        if (!frame.related(s, t))
          works = lower_separates(lower_algebra.members[i], s, t);
      shared_exists = works;
    }
    rep.lower_per_source = rep.lower_per_source && shared_exists;
    for (int t = 0; t < n; ++t) {
      if (frame.related(s, t))
        continue;
      int found = -1;
      for (int i = 0; i < lower_algebra.size(); ++i)
        if (lower_separates(lower_algebra.members[i], s, t)) {
          found = i;
          break;
        }
      rep.lower_witnesses.emplace_back(s, t, found);
      rep.lower_ok = rep.lower_ok && found >= 0;
    }
  }
  return rep;
}

RecoveryReport recover(const Automaton &a, const PropositionAlgebra &algebra) {
  auto [upper, lower] = labelled_functors(a, algebra);
  RecoveryReport rep;
  rep.upper_overall = true;
  rep.lower_overall = true;
  rep.upper_closed = true;
  rep.lower_closed = true;
  for (int l = 0; l < upper.num_labels(); ++l) {
    LabelRecovery lr;
    lr.label = upper.labels[l];
    lr.induced_upper = induced_relation(upper, l);
    lr.induced_lower = induced_relation(lower, l);
    TransitionFrame original = a.fibre(l);
    lr.upper_matches = lr.induced_upper.matrix == original.matrix;
    lr.lower_matches = lr.induced_lower.matrix == original.matrix;
    rep.upper_overall = rep.upper_overall && lr.upper_matches;
    rep.lower_overall = rep.lower_overall && lr.lower_matches;
    rep.upper_closed =
        rep.upper_closed && image_in_members(upper.images[l], upper.member_eval);
    rep.lower_closed =
        rep.lower_closed && image_in_members(lower.images[l], lower.member_eval);
    rep.per_label.push_back(std::move(lr));
  }
  rep.overall = rep.upper_overall && rep.lower_overall;
  return rep;
}

} // namespace dynlog
