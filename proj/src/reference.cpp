#include "dynlog/reference.hpp"

#include <utility>

namespace dynlog {

TransitionFrame induced_relation_reference(const TransitionFunctor &f,
                                           int label) {
  if (label < 0 || label >= f.num_labels())
    fail(errc::unknown_input, "label index out of range");
  const int n = f.states.size();
  const int m = f.num_members();
  const auto &imgs = f.images[label];
  std::vector<std::pair<int, int>> pairs;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      bool keep = true;
      for (int i = 0; i < m; ++i) {
        if (f.direction == Direction::upper) {
          if (!f.lattice.leq(imgs[i][s], f.member_eval[i][t]))
            keep = false;
        } else {
          if (!f.lattice.leq(f.member_eval[i][s], imgs[i][t]))
            keep = false;
        }
      }
      if (keep)
        pairs.emplace_back(s, t);
    }
  return make_frame(f.states, std::move(pairs));
}

TransitionFunctor upper_functor_reference(const TransitionFrame &frame,
                                          const PropositionAlgebra &algebra,
                                          const std::string &label) {
  TransitionFunctor f = upper_functor_from_frame(frame, algebra, label);
  // Recompute every entry by collecting the successor values first and
  // folding them afterwards, replacing the fused loop of the main kernel.
  for (int i = 0; i < f.num_members(); ++i)
    for (int s = 0; s < frame.states.size(); ++s) {
      std::vector<int> vals;
      for (int t = 0; t < frame.states.size(); ++t)
        if (frame.related(s, t))
          vals.push_back(algebra.members[i].values[t]);
      f.images[0][i][s] = algebra.lattice.meet_subset(vals);
    }
  return f;
}

TransitionFunctor lower_functor_reference(const TransitionFrame &frame,
                                          const PropositionAlgebra &algebra,
                                          const std::string &label) {
  TransitionFunctor f = lower_functor_from_frame(frame, algebra, label);
  for (int i = 0; i < f.num_members(); ++i)
    for (int t = 0; t < frame.states.size(); ++t) {
      std::vector<int> vals;
      for (int s = 0; s < frame.states.size(); ++s)
        if (frame.related(s, t))
          vals.push_back(algebra.members[i].values[s]);
      f.images[0][i][t] = algebra.lattice.join_subset(vals);
    }
  return f;
}

} // namespace dynlog
