#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dynlog/io.hpp"
#include "dynlog/reference.hpp"

namespace {

using namespace dynlog;

struct Options {
  std::string automaton_path;
  std::string algebra_path;
  std::string lattice = "BOOL2";
  std::string subposet_path;
  std::string functor_path;
  std::string side = "both";
  std::string space = "auto";
  std::string output_path;
  std::string dot_path;
  std::string json_path;
  io::Caps caps;
};

void write_file(const std::string &path, const std::string &content) {
  std::ofstream out(path);
  if (!out)
    fail(errc::validation_error, "cannot write '" + path + "'");
  out << content;
}

void maybe_dump_json(const Options &opt, const io::json &j) {
  if (!opt.json_path.empty())
    write_file(opt.json_path, j.dump(2) + "\n");
}

PropositionAlgebra load_algebra(const Options &opt) {
  if (opt.algebra_path.empty())
    fail(errc::missing_input, "an algebra file (-b) is required");
  TruthLattice lattice = io::parse_lattice(opt.lattice);
  PropositionAlgebra algebra = io::parse_algebra(opt.algebra_path, lattice);
  opt.caps.enforce(algebra.states.size(), algebra.size());
  return algebra;
}

Automaton load_automaton(const Options &opt, const PropositionAlgebra &algebra) {
  if (opt.automaton_path.empty())
    fail(errc::missing_input, "an automaton file (-a) is required");
  Automaton a = io::parse_automaton(opt.automaton_path);
  if (a.states.names != algebra.states.names)
    fail(errc::carrier_mismatch,
         "automaton and algebra declare different state sets");
  return a;
}

CanonicalStateSpace build_space(const Options &opt,
                                const PropositionAlgebra &algebra) {
  std::string kind = opt.space;
  if (kind == "auto") {
    // Boolean bases default to the smaller ultrafilter space.
    try {
      return ultrafilter_state_space(algebra);
    } catch (const error &e) {
      if (e.code() != errc::not_boolean)
        throw;
      kind = "downset";
    }
  }
  if (kind == "ultrafilter")
    return ultrafilter_state_space(algebra);
  if (kind == "downset")
    return downset_state_space(algebra, opt.caps.lifted ? 30 : 20);
  fail(errc::validation_error, "unknown space kind '" + kind + "'");
}

int cmd_functor(const Options &opt) {
  PropositionAlgebra algebra = load_algebra(opt);
  Automaton a = load_automaton(opt, algebra);
  auto [upper, lower] = labelled_functors(a, algebra);
  io::json j;
  if (opt.side == "upper" || opt.side == "both") {
    std::cout << io::render_functor(upper);
    j["upper"] = io::functor_to_json(upper);
  }
  if (opt.side == "lower" || opt.side == "both") {
    std::cout << io::render_functor(lower);
    j["lower"] = io::functor_to_json(lower);
  }
  maybe_dump_json(opt, j);
  return 0;
}

int cmd_recover(const Options &opt) {
  PropositionAlgebra algebra = load_algebra(opt);
  Automaton a = load_automaton(opt, algebra);
  RecoveryReport report = recover(a, algebra);
  std::cout << io::render_recovery(report);
  maybe_dump_json(opt, io::recovery_to_json(report));
  return report.overall ? 0 : 1;
}

int cmd_adjoint(const Options &opt) {
  PropositionAlgebra algebra = load_algebra(opt);
  Automaton a = load_automaton(opt, algebra);
  auto [upper, lower] = labelled_functors(a, algebra);
  AdjunctionResult res = check_adjunction(lower, upper);
  if (res.holds) {
    std::cout << "adjunction: holds (P_x(a) <= b iff a <= T_x(b))\n";
  } else {
    std::cout << "adjunction: fails at (" << res.witness->label << ", "
              << res.witness->a << ", " << res.witness->b << ")\n";
  }
  InclusionReport inc = check_inclusion_conditions(lower, upper);
  std::cout << "P into B: " << (inc.P_into_B ? "yes" : "no")
            << ", T into A: " << (inc.T_into_A ? "yes" : "no")
            << ", R_T == R^P: " << (inc.equal ? "yes" : "no") << "\n";
  return res.holds ? 0 : 1;
}

int cmd_witnesses(const Options &opt) {
  PropositionAlgebra algebra = load_algebra(opt);
  Automaton a = load_automaton(opt, algebra);
  bool all_ok = true;
  io::json j = io::json::object();
  for (std::size_t x = 0; x < a.inputs.size(); ++x) {
    TransitionFrame fibre = a.fibre(static_cast<int>(x));
    WitnessReport report = check_recovery_witnesses(fibre, algebra, algebra);
    std::cout << "label " << a.inputs[x] << ":\n"
              << io::render_witnesses(report, a.states, algebra, algebra);
    j[a.inputs[x]] = io::witnesses_to_json(report, a.states, algebra, algebra);
    all_ok = all_ok && report.upper_ok && report.lower_ok;
  }
  maybe_dump_json(opt, j);
  return all_ok ? 0 : 1;
}

int cmd_enumerate_states(const Options &opt) {
  PropositionAlgebra algebra = load_algebra(opt);
  CanonicalStateSpace space = build_space(opt, algebra);
  std::cout << (space.kind == SpaceKind::ultrafilter ? "ultrafilter" : "downset")
            << " states (" << space.states.size() << "):\n";
  for (const auto &name : space.states.names)
    std::cout << "  " << name << "\n";
  return 0;
}

int cmd_synthesize(const Options &opt) {
  PropositionAlgebra algebra = load_algebra(opt);
  if (opt.subposet_path.empty() || opt.functor_path.empty())
    fail(errc::missing_input,
         "synthesize needs a subposet (-c) and a functor file (-t)");
  CanonicalStateSpace space = build_space(opt, algebra);

  std::vector<int> chosen = io::parse_subposet(opt.subposet_path, algebra);
  SubposetHandle C = space.kind == SpaceKind::ultrafilter
                         ? meet_closed_subposet(algebra, chosen)
                         : subposet_with_top(algebra, chosen);
  io::ParsedFunctor parsed =
      io::parse_functor(opt.functor_path, algebra, space.states, &space);
  PartialFunctorInput input = io::align_functor(parsed, algebra, C);

  SynthesisResult result = input.direction == Direction::upper
                               ? synthesize(algebra, C, input, space)
                               : synthesize_dual(algebra, C, input, space);
  std::cout << io::serialize_automaton(result.automaton);
  std::cout << "extension check: "
            << (result.extension_verified ? "agrees with the input on C"
                                          : "mismatch")
            << "\n";
  if (!opt.output_path.empty())
    write_file(opt.output_path, io::serialize_automaton(result.automaton));
  if (!opt.dot_path.empty())
    write_file(opt.dot_path, io::to_dot(result.automaton));
  maybe_dump_json(opt, io::functor_to_json(result.extended));
  return 0;
}

int cmd_render(const Options &opt) {
  if (opt.automaton_path.empty())
    fail(errc::missing_input, "an automaton file (-a) is required");
  Automaton a = io::parse_automaton(opt.automaton_path);
  std::string dot = io::to_dot(a);
  if (!opt.output_path.empty())
    write_file(opt.output_path, dot);
  else
    std::cout << dot;
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"dynlog: dynamic logics assigned to finite automata"};
  app.require_subcommand(1);

  Options opt;
  if (const char *env = std::getenv("DYNLOG_CAP_OVERRIDE"))
    opt.caps.lifted = std::string(env) == "1";

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--cap-states", opt.caps.states, "state-count cap");
    sub->add_option("--cap-algebra", opt.caps.algebra, "algebra-size cap");
  };
  auto add_workspace = [&](CLI::App *sub) {
    sub->add_option("-b,--algebra", opt.algebra_path, "proposition file");
    sub->add_option("-m,--lattice", opt.lattice,
                    "lattice file or the reserved name BOOL2");
    sub->add_option("--json", opt.json_path, "write a structured report here");
    add_common(sub);
  };

  auto *functor = app.add_subcommand("functor", "print T_R and P_R tables");
  functor->add_option("-a,--automaton", opt.automaton_path, "automaton file");
  functor->add_option("--side", opt.side, "upper, lower, or both");
  add_workspace(functor);

  auto *recover_cmd = app.add_subcommand("recover", "induce relations and compare");
  recover_cmd->add_option("-a,--automaton", opt.automaton_path, "automaton file");
  add_workspace(recover_cmd);

  auto *adjoint = app.add_subcommand("adjoint", "check the residuated pair law");
  adjoint->add_option("-a,--automaton", opt.automaton_path, "automaton file");
  add_workspace(adjoint);

  auto *witnesses = app.add_subcommand("witnesses", "check recovery witness conditions");
  witnesses->add_option("-a,--automaton", opt.automaton_path, "automaton file");
  add_workspace(witnesses);

  auto *enumerate = app.add_subcommand("enumerate-states",
                                       "list the canonical state space");
  enumerate->add_option("--space", opt.space, "downset, ultrafilter, or auto");
  add_workspace(enumerate);

  auto *synthesize_cmd = app.add_subcommand("synthesize",
                                            "build an automaton from a partial functor");
  synthesize_cmd->add_option("-c,--subposet", opt.subposet_path, "subposet file");
  synthesize_cmd->add_option("-t,--functor", opt.functor_path, "functor file");
  synthesize_cmd->add_option("--space", opt.space, "downset, ultrafilter, or auto");
  synthesize_cmd->add_option("-o,--output", opt.output_path, "automaton output file");
  synthesize_cmd->add_option("--dot", opt.dot_path, "DOT output file");
  add_workspace(synthesize_cmd);

  auto *render = app.add_subcommand("render", "export an automaton as DOT");
  render->add_option("-a,--automaton", opt.automaton_path, "automaton file");
  render->add_option("-o,--output", opt.output_path, "DOT output file");
  add_common(render);

  CLI11_PARSE(app, argc, argv);

  try {
    if (functor->parsed())
      return cmd_functor(opt);
    if (recover_cmd->parsed())
      return cmd_recover(opt);
    if (adjoint->parsed())
      return cmd_adjoint(opt);
    if (witnesses->parsed())
      return cmd_witnesses(opt);
    if (enumerate->parsed())
      return cmd_enumerate_states(opt);
    if (synthesize_cmd->parsed())
      return cmd_synthesize(opt);
    if (render->parsed())
      return cmd_render(opt);
  } catch (const dynlog::error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
