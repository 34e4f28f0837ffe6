#pragma once

#include "dynlog/dynamics.hpp"

namespace dynlog {

// Serial literal-loop evaluations kept as the oracle for the parallel
// kernels. These transcribe the defining conditions one quantifier at a
// time, with no early exits and no parallelism; any optimization of the
// main kernels must keep agreeing with them.

TransitionFrame induced_relation_reference(const TransitionFunctor &f,
                                           int label);

TransitionFunctor upper_functor_reference(const TransitionFrame &frame,
                                          const PropositionAlgebra &algebra,
                                          const std::string &label = "");

TransitionFunctor lower_functor_reference(const TransitionFrame &frame,
                                          const PropositionAlgebra &algebra,
                                          const std::string &label = "");

} // namespace dynlog
