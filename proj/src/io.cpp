#include "dynlog/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace dynlog::io {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

[[noreturn]] void parse_fail(const std::string &path, int line,
                             const std::string &msg) {
  fail(errc::parse_error, path + ":" + std::to_string(line) + ": " + msg);
}

std::vector<Line> read_lines(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    fail(errc::parse_error, "cannot open '" + path + "'");
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    std::string tok;
    while (ss >> tok)
      line.tokens.push_back(tok);
    if (!line.tokens.empty())
      lines.push_back(std::move(line));
  }
  return lines;
}

std::pair<std::string, std::string> split_colon(const std::string &tok) {
  auto pos = tok.rfind(':');
  if (pos == std::string::npos || pos == 0 || pos + 1 == tok.size())
    return {"", ""};
  return {tok.substr(0, pos), tok.substr(pos + 1)};
}

std::string table_text(const TransitionFunctor &f, const ValueTable &img) {
  std::string out;
  for (int s = 0; s < f.states.size(); ++s) {
    if (s)
      out += " ";
    out += f.states.names[s] + ":" + f.lattice.name_of(img[s]);
  }
  return out;
}

std::string frame_text(const TransitionFrame &frame) {
  std::string out = "{";
  for (std::size_t i = 0; i < frame.pairs.size(); ++i) {
    if (i)
      out += ", ";
    out += "(" + frame.states.names[frame.pairs[i].first] + "," +
           frame.states.names[frame.pairs[i].second] + ")";
  }
  return out + "}";
}

} // namespace

void Caps::enforce(int num_states, int num_members) const {
  if (lifted)
    return;
  if (num_states > states)
    fail(errc::size_cap_exceeded,
         "state count " + std::to_string(num_states) + " exceeds cap " +
             std::to_string(states) + " (set DYNLOG_CAP_OVERRIDE=1 to lift)");
  if (num_members > algebra)
    fail(errc::size_cap_exceeded,
         "algebra size " + std::to_string(num_members) + " exceeds cap " +
             std::to_string(algebra) + " (set DYNLOG_CAP_OVERRIDE=1 to lift)");
}

TruthLattice parse_lattice(const std::string &path_or_name) {
  if (path_or_name == "BOOL2")
    return bool2();
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto &line : read_lines(path_or_name)) {
    const auto &t = line.tokens;
    if (t[0] == "elements:") {
      elements.assign(t.begin() + 1, t.end());
    } else if (t[0] == "cover:") {
      if (t.size() != 3)
        parse_fail(path_or_name, line.number, "cover expects two element names");
      covers.emplace_back(t[1], t[2]);
    } else {
      parse_fail(path_or_name, line.number, "unknown directive '" + t[0] + "'");
    }
  }
  if (elements.empty())
    fail(errc::parse_error, path_or_name + ": missing 'elements:' line");
  return as_complete_lattice(build_poset(elements, covers));
}

PropositionAlgebra parse_algebra(const std::string &path,
                                 const TruthLattice &lattice) {
  std::optional<StateSet> states;
  std::vector<Proposition> declared;
  std::vector<std::string> member_list;
  for (const auto &line : read_lines(path)) {
    const auto &t = line.tokens;
    if (t[0] == "states:") {
      if (t.size() < 2)
        parse_fail(path, line.number, "empty state list");
      states = make_state_set({t.begin() + 1, t.end()});
    } else if (t[0] == "prop") {
      if (!states)
        parse_fail(path, line.number, "'prop' before 'states:'");
      if (t.size() < 4 || t[2] != "=")
        parse_fail(path, line.number, "expected 'prop <name> = s:<elem> ...'");
      Proposition p;
      p.name = t[1];
      p.values.assign(states->size(), -1);
      for (std::size_t i = 3; i < t.size(); ++i) {
        auto [state, elem] = split_colon(t[i]);
        if (state.empty())
          parse_fail(path, line.number, "expected '<state>:<element>'");
        int si = states->index_of(state);
        if (si < 0)
          parse_fail(path, line.number, "unknown state '" + state + "'");
        int ei = lattice.poset.index_of(elem);
        if (ei < 0)
          parse_fail(path, line.number, "unknown lattice element '" + elem + "'");
        p.values[si] = ei;
      }
      for (int v : p.values)
        if (v < 0)
          parse_fail(path, line.number, "proposition '" + p.name + "' is partial");
      declared.push_back(std::move(p));
    } else if (t[0] == "algebra:") {
      member_list.assign(t.begin() + 1, t.end());
    } else {
      parse_fail(path, line.number, "unknown directive '" + t[0] + "'");
    }
  }
  if (!states)
    fail(errc::parse_error, path + ": missing 'states:' line");
  if (member_list.empty())
    fail(errc::parse_error, path + ": missing 'algebra:' line");

  std::vector<Proposition> members;
  auto push_unique = [&](Proposition p) {
    for (const auto &m : members)
      if (m.values == p.values)
        return;
    members.push_back(std::move(p));
  };
  for (const auto &name : member_list) {
    if (name == "ALL_CRISP") {
      for (const auto &t : all_crisp_tuples(lattice, states->size())) {
        std::string crisp_name;
        for (const auto &d : declared)
          if (d.values == t)
            crisp_name = d.name;
        if (crisp_name.empty()) {
          crisp_name = "crisp:";
          for (int v : t)
            crisp_name += v == lattice.top() ? '1' : '0';
        }
        push_unique({crisp_name, t});
      }
    } else {
      bool found = false;
      for (const auto &d : declared)
        if (d.name == name) {
          push_unique(d);
          found = true;
        }
      if (!found)
        fail(errc::validation_error,
             path + ": algebra member '" + name + "' is not declared");
    }
  }
  return make_algebra(lattice, *states, std::move(members));
}

Automaton parse_automaton(const std::string &path) {
  std::vector<std::string> inputs;
  std::optional<StateSet> states;
  std::vector<std::tuple<std::string, std::string, std::string, int>> raw;
  for (const auto &line : read_lines(path)) {
    const auto &t = line.tokens;
    if (t[0] == "inputs:") {
      inputs.assign(t.begin() + 1, t.end());
    } else if (t[0] == "states:") {
      states = make_state_set({t.begin() + 1, t.end()});
    } else if (t[0] == "trans:") {
      if (t.size() != 4)
        parse_fail(path, line.number, "expected 'trans: <input> <from> <to>'");
      raw.emplace_back(t[1], t[2], t[3], line.number);
    } else if (t[0] == "initial:" || t[0] == "final:" || t[0] == "accepting:") {
      // The model is an acceptor without initial/final structure.
      parse_fail(path, line.number,
                 "'" + t[0] + "' markers are not part of the automaton model");
    } else {
      parse_fail(path, line.number, "unknown directive '" + t[0] + "'");
    }
  }
  if (inputs.empty())
    fail(errc::parse_error, path + ": missing 'inputs:' line");
  if (!states)
    fail(errc::parse_error, path + ": missing 'states:' line");

  std::vector<std::tuple<int, int, int>> triples;
  for (const auto &[x, s, t, number] : raw) {
    auto xi = std::find(inputs.begin(), inputs.end(), x);
    if (xi == inputs.end())
      parse_fail(path, number, "undeclared input '" + x + "'");
    int si = states->index_of(s);
    int ti = states->index_of(t);
    if (si < 0)
      parse_fail(path, number, "undeclared state '" + s + "'");
    if (ti < 0)
      parse_fail(path, number, "undeclared state '" + t + "'");
    triples.emplace_back(static_cast<int>(xi - inputs.begin()), si, ti);
  }
  return make_automaton(std::move(inputs), std::move(*states), std::move(triples));
}

std::vector<int> parse_subposet(const std::string &path,
                                const PropositionAlgebra &algebra) {
  std::vector<int> chosen;
  for (const auto &line : read_lines(path)) {
    const auto &t = line.tokens;
    if (t[0] != "members:")
      parse_fail(path, line.number, "expected a 'members:' line");
    for (std::size_t i = 1; i < t.size(); ++i) {
      int idx = algebra.member_index(t[i]);
      if (idx < 0)
        parse_fail(path, line.number, "unknown member '" + t[i] + "'");
      chosen.push_back(idx);
    }
  }
  if (chosen.empty())
    fail(errc::parse_error, path + ": empty subposet");
  return chosen;
}

ParsedFunctor parse_functor(const std::string &path,
                            const PropositionAlgebra &algebra,
                            const StateSet &image_states,
                            const CanonicalStateSpace *space) {
  ParsedFunctor out;
  bool header_seen = false;
  auto label_pos = [&](const std::string &l) {
    auto it = std::find(out.labels.begin(), out.labels.end(), l);
    if (it == out.labels.end()) {
      out.labels.push_back(l);
      for (auto &imgs : out.images)
        (void)imgs;
      out.images.emplace_back(out.members.size());
      return out.labels.size() - 1;
    }
    return static_cast<std::size_t>(it - out.labels.begin());
  };
  auto member_pos = [&](const std::string &m, int line) {
    auto it = std::find(out.members.begin(), out.members.end(), m);
    if (it == out.members.end()) {
      if (algebra.member_index(m) < 0)
        parse_fail(path, line, "unknown algebra member '" + m + "'");
      out.members.push_back(m);
      for (auto &imgs : out.images)
        imgs.emplace_back();
      return out.members.size() - 1;
    }
    return static_cast<std::size_t>(it - out.members.begin());
  };

  for (const auto &line : read_lines(path)) {
    const auto &t = line.tokens;
    if (t[0] == "functor") {
      if (t.size() != 3 || (t[2] != "upper" && t[2] != "lower"))
        parse_fail(path, line.number, "expected 'functor <name> upper|lower'");
      out.name = t[1];
      out.direction = t[2] == "upper" ? Direction::upper : Direction::lower;
      header_seen = true;
    } else if (t[0] == "label") {
      if (!header_seen)
        parse_fail(path, line.number, "'label' before the 'functor' header");
      if (t.size() < 5 || t[3] != "->")
        parse_fail(path, line.number,
                   "expected 'label <x>: <prop> -> <table or member>'");
      std::string label = t[1];
      if (label.empty() || label.back() != ':')
        parse_fail(path, line.number, "label must end with ':'");
      label.pop_back();
      std::size_t l = label_pos(label);
      std::size_t m = member_pos(t[2], line.number);

      ValueTable img(image_states.size(), -1);
      if (t.size() == 5 && split_colon(t[4]).first.empty()) {
        // A named member as the image.
        int ref = algebra.member_index(t[4]);
        if (ref < 0)
          parse_fail(path, line.number, "unknown member '" + t[4] + "'");
        if (space) {
          for (int s = 0; s < image_states.size(); ++s)
            img[s] = space->eval[s][ref];
        } else {
          img = algebra.members[ref].values;
        }
      } else {
        for (std::size_t i = 4; i < t.size(); ++i) {
          auto [state, elem] = split_colon(t[i]);
          if (state.empty())
            parse_fail(path, line.number, "expected '<state>:<value>'");
          int si = image_states.index_of(state);
          if (si < 0)
            parse_fail(path, line.number, "unknown state '" + state + "'");
          int ei = space ? (elem == "0"   ? 0
                            : elem == "1" ? 1
                                          : -1)
                         : algebra.lattice.poset.index_of(elem);
          if (ei < 0)
            parse_fail(path, line.number, "unknown value '" + elem + "'");
          img[si] = ei;
        }
        for (int v : img)
          if (v < 0)
            parse_fail(path, line.number, "image table is partial");
      }
      if (!out.images[l][m].empty())
        parse_fail(path, line.number,
                   "duplicate image for '" + t[2] + "' under '" + label + "'");
      out.images[l][m] = std::move(img);
    } else {
      parse_fail(path, line.number, "unknown directive '" + t[0] + "'");
    }
  }
  if (!header_seen)
    fail(errc::parse_error, path + ": missing 'functor' header");
  for (std::size_t l = 0; l < out.labels.size(); ++l)
    for (std::size_t m = 0; m < out.members.size(); ++m)
      if (out.images[l][m].empty())
        fail(errc::validation_error, path + ": no image for '" + out.members[m] +
                                         "' under label '" + out.labels[l] + "'");
  return out;
}

PartialFunctorInput align_functor(const ParsedFunctor &parsed,
                                  const PropositionAlgebra &algebra,
                                  const SubposetHandle &C) {
  PartialFunctorInput input;
  input.direction = parsed.direction;
  input.labels = parsed.labels;
  for (std::size_t l = 0; l < parsed.labels.size(); ++l) {
    std::vector<ValueTable> imgs;
    for (int ci : C.member_indices) {
      const std::string &name = algebra.members[ci].name;
      auto it = std::find(parsed.members.begin(), parsed.members.end(), name);
      if (it == parsed.members.end())
        fail(errc::validation_error,
             "functor gives no image for subposet member '" + name + "'");
      imgs.push_back(parsed.images[l][it - parsed.members.begin()]);
    }
    input.images.push_back(std::move(imgs));
  }
  for (const auto &name : parsed.members) {
    int idx = algebra.member_index(name);
    if (!C.contains(idx))
      fail(errc::validation_error,
           "functor member '" + name + "' is outside the subposet");
  }
  return input;
}

std::string serialize_automaton(const Automaton &a) {
  std::string out = "inputs:";
  for (const auto &x : a.inputs)
    out += " " + x;
  out += "\nstates:";
  for (const auto &s : a.states.names)
    out += " " + s;
  out += "\n";
  for (const auto &[x, s, t] : a.triples)
    out += "trans: " + a.inputs[x] + " " + a.states.names[s] + " " +
           a.states.names[t] + "\n";
  return out;
}

std::string serialize_algebra(const PropositionAlgebra &algebra) {
  std::string out = "states:";
  for (const auto &s : algebra.states.names)
    out += " " + s;
  out += "\n";
  for (const auto &m : algebra.members) {
    out += "prop " + m.name + " =";
    for (int s = 0; s < algebra.states.size(); ++s)
      out += " " + algebra.states.names[s] + ":" +
             algebra.lattice.name_of(m.values[s]);
    out += "\n";
  }
  out += "algebra:";
  for (const auto &m : algebra.members)
    out += " " + m.name;
  out += "\n";
  return out;
}

std::string to_dot(const Automaton &a) {
  std::string out = "digraph automaton {\n  rankdir=LR;\n";
  for (const auto &s : a.states.names)
    out += "  \"" + s + "\";\n";
  for (const auto &[x, s, t] : a.triples)
    out += "  \"" + a.states.names[s] + "\" -> \"" + a.states.names[t] +
           "\" [label=\"" + a.inputs[x] + "\"];\n";
  out += "}\n";
  return out;
}

std::string describe_image(const TransitionFunctor &f, const ValueTable &img) {
  for (int i = 0; i < f.num_members(); ++i)
    if (f.member_eval[i] == img)
      return f.member_names[i];
  return table_text(f, img);
}

std::string render_functor(const TransitionFunctor &f) {
  std::string letter = f.direction == Direction::upper ? "T" : "P";
  std::string out =
      "functor " + letter + " " +
      (f.direction == Direction::upper ? "upper" : "lower") + "\n";
  for (int l = 0; l < f.num_labels(); ++l) {
    out += "label " + (f.labels[l].empty() ? "-" : f.labels[l]) + ":\n";
    for (int i = 0; i < f.num_members(); ++i)
      out += "  " + letter + "(" + f.member_names[i] + ") = " +
             describe_image(f, f.images[l][i]) + "\n";
  }
  return out;
}

std::string render_recovery(const RecoveryReport &report) {
  std::string out;
  for (const auto &lr : report.per_label) {
    out += "label " + lr.label + ":\n";
    out += "  induced upper relation = " + frame_text(lr.induced_upper) +
           (lr.upper_matches ? "  (matches)" : "  (differs)") + "\n";
    out += "  induced lower relation = " + frame_text(lr.induced_lower) +
           (lr.lower_matches ? "  (matches)" : "  (differs)") + "\n";
  }
  out += std::string("verdict: ") +
         (report.overall ? "recoverable (both sides, all labels)"
                         : "not recoverable") +
         "\n";
  return out;
}

std::string render_witnesses(const WitnessReport &report, const StateSet &states,
                             const PropositionAlgebra &upper_algebra,
                             const PropositionAlgebra &lower_algebra) {
  std::string out;
  out += std::string("upper witness condition: ") +
         (report.upper_ok ? "holds" : "fails") +
         (report.upper_per_target ? " (per-target form holds)" : "") + "\n";
  for (const auto &[s, t, b] : report.upper_witnesses)
    out += "  (" + states.names[s] + "," + states.names[t] + "): " +
           (b >= 0 ? upper_algebra.members[b].name : "none") + "\n";
  out += std::string("lower witness condition: ") +
         (report.lower_ok ? "holds" : "fails") +
         (report.lower_per_source ? " (per-source form holds)" : "") + "\n";
  for (const auto &[s, t, a] : report.lower_witnesses)
    out += "  (" + states.names[s] + "," + states.names[t] + "): " +
           (a >= 0 ? lower_algebra.members[a].name : "none") + "\n";
  return out;
}

json functor_to_json(const TransitionFunctor &f) {
  json j;
  j["direction"] = f.direction == Direction::upper ? "upper" : "lower";
  j["states"] = f.states.names;
  json labels = json::object();
  for (int l = 0; l < f.num_labels(); ++l) {
    json tbl = json::object();
    for (int i = 0; i < f.num_members(); ++i) {
      json img = json::object();
      for (int s = 0; s < f.states.size(); ++s)
        img[f.states.names[s]] = f.lattice.name_of(f.images[l][i][s]);
      tbl[f.member_names[i]] = img;
    }
    labels[f.labels[l].empty() ? "-" : f.labels[l]] = tbl;
  }
  j["labels"] = labels;
  return j;
}

json recovery_to_json(const RecoveryReport &report) {
  json j;
  json per_label = json::object();
  for (const auto &lr : report.per_label) {
    json entry;
    json up = json::array(), low = json::array();
    for (auto [s, t] : lr.induced_upper.pairs)
      up.push_back({lr.induced_upper.states.names[s],
                    lr.induced_upper.states.names[t]});
    for (auto [s, t] : lr.induced_lower.pairs)
      low.push_back({lr.induced_lower.states.names[s],
                     lr.induced_lower.states.names[t]});
    entry["induced_upper"] = up;
    entry["induced_lower"] = low;
    entry["upper_matches"] = lr.upper_matches;
    entry["lower_matches"] = lr.lower_matches;
    per_label[lr.label] = entry;
  }
  j["per_label"] = per_label;
  j["upper_overall"] = report.upper_overall;
  j["lower_overall"] = report.lower_overall;
  j["overall"] = report.overall;
  j["upper_closed"] = report.upper_closed;
  j["lower_closed"] = report.lower_closed;
  return j;
}

json witnesses_to_json(const WitnessReport &report, const StateSet &states,
                       const PropositionAlgebra &upper_algebra,
                       const PropositionAlgebra &lower_algebra) {
  json j;
  j["upper_ok"] = report.upper_ok;
  j["upper_per_target"] = report.upper_per_target;
  json up = json::array();
  for (const auto &[s, t, b] : report.upper_witnesses)
    up.push_back({{"from", states.names[s]},
                  {"to", states.names[t]},
                  {"witness", b >= 0 ? upper_algebra.members[b].name : ""}});
  j["upper_witnesses"] = up;
  j["lower_ok"] = report.lower_ok;
  j["lower_per_source"] = report.lower_per_source;
  json low = json::array();
  for (const auto &[s, t, a] : report.lower_witnesses)
    low.push_back({{"from", states.names[s]},
                   {"to", states.names[t]},
                   {"witness", a >= 0 ? lower_algebra.members[a].name : ""}});
  j["lower_witnesses"] = low;
  return j;
}

} // namespace dynlog::io
