// Copyright 2026 The mpha Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: eval, simulate, translate, abstract, check and
// reproduce. Exit codes: 0 success or true verdict, 1 false verdict or
// failing check, 2 usage or model error.

#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mpha/equivalence.hpp"
#include "mpha/io.hpp"
#include "mpha/maha.hpp"
#include "mpha/mpa.hpp"
#include "mpha/reproduce.hpp"
#include "mpha/smpl.hpp"

#ifndef MPHA_MODELS_DIR
#define MPHA_MODELS_DIR "models"
#endif

namespace mpha::cli {

inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;
inline constexpr int kUsage = 2;

struct Options {
  std::uint64_t seed = 42;
  std::string format = "text";
  std::size_t bound = 6;
};

struct Report {
  int code = kOk;
  Json json;
  std::string text;
};

namespace detail {

inline std::string show(const Vector& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

inline std::string show_word(const Word& w) { return w.empty() ? "<empty>" : to_string(w); }

inline const std::vector<Symbol>& alphabet_of(const ModelDocument& d) {
  switch (d.kind()) {
    case ModelKind::kMpa: return std::get<MaxPlusAutomaton>(d.body).alphabet();
    case ModelKind::kSmpl: return std::get<SmplSystem>(d.body).alphabet;
    case ModelKind::kMaha: return std::get<HybridAutomaton>(d.body).discrete_inputs;
    case ModelKind::kFa: return std::get<FiniteAutomaton>(d.body).alphabet();
  }
  throw ModelError("unknown model kind");
}

inline Json inputs_json(const std::vector<StepInput>& in) {
  Json j = Json::array();
  for (const auto& s : in) {
    Json e = Json::object();
    if (s.theta.w) e["w"] = *s.theta.w;
    if (!s.theta.r.empty()) e["r"] = io::vector_json(s.theta.r);
    if (!s.theta.p.empty()) e["p"] = io::vector_json(s.theta.p);
    if (!s.u.empty()) e["u"] = io::vector_json(s.u);
    if (!s.v.empty()) e["v"] = io::vector_json(s.v);
    j.push_back(e);
  }
  return j;
}

inline std::optional<Word> as_word(const std::vector<StepInput>& in) {
  Word w;
  for (const auto& s : in) {
    if (!s.theta.w || !s.theta.r.empty() || !s.theta.p.empty() || !s.u.empty() || !s.v.empty())
      return std::nullopt;
    w.push_back(*s.theta.w);
  }
  return w;
}

inline FiniteAutomaton to_fa(const ModelDocument& d) {
  switch (d.kind()) {
    case ModelKind::kFa: return std::get<FiniteAutomaton>(d.body);
    case ModelKind::kMpa: return to_finite_abstraction(std::get<MaxPlusAutomaton>(d.body));
    case ModelKind::kMaha: return finite_abstraction(std::get<HybridAutomaton>(d.body));
    case ModelKind::kSmpl: {
      const auto& s = std::get<SmplSystem>(d.body);
      return finite_abstraction(s.controller ? from_smpl_closed(s) : from_smpl_open(s));
    }
  }
  throw ModelError("unknown model kind");
}

inline BehaviourModel to_behaviour(const ModelDocument& d) {
  switch (d.kind()) {
    case ModelKind::kMpa: return behaviour_of(std::get<MaxPlusAutomaton>(d.body));
    case ModelKind::kSmpl: return behaviour_of(std::get<SmplSystem>(d.body));
    case ModelKind::kMaha: return behaviour_of(std::get<HybridAutomaton>(d.body));
    case ModelKind::kFa: break;
  }
  throw ModelError("finite automata have no input-output behaviour");
}

inline Json header(const std::string& command, const ModelDocument& d) {
  Json j;
  j["command"] = command;
  j["model"] = d.name;
  j["kind"] = to_string(d.kind());
  return j;
}

}  // namespace detail

inline Report cmd_eval(const ModelDocument& d, const std::string& word_text) {
  const Word w = parse_word(word_text, detail::alphabet_of(d));
  Report r;
  r.json = detail::header("eval", d);
  r.json["word"] = to_string(w);
  std::ostringstream os;
  os << "model: " << d.name << " (" << to_string(d.kind()) << ")\nword: " << detail::show_word(w)
     << "\n";
  switch (d.kind()) {
    case ModelKind::kMpa: {
      const auto& a = std::get<MaxPlusAutomaton>(d.body);
      const ExtendedWeight y = eval_output(a, w);
      r.json["accepted"] = accepts(a, w);
      r.json["state"] = io::vector_json(eval_state(a, w));
      r.json["output"] = io::weight_json(y);
      os << "accepted: " << (accepts(a, w) ? "true" : "false") << "\nstate: "
         << detail::show(eval_state(a, w)) << "\noutput: " << to_string(y) << "\n";
      break;
    }
    case ModelKind::kFa: {
      const bool acc = std::get<FiniteAutomaton>(d.body).accepts(w);
      r.json["accepted"] = acc;
      os << "accepted: " << (acc ? "true" : "false") << "\n";
      break;
    }
    case ModelKind::kSmpl:
    case ModelKind::kMaha: {
      const BehaviourTrace t = detail::to_behaviour(d).run(word_inputs(w));
      r.json["halted_at"] = t.halted_at ? Json(*t.halted_at) : Json(nullptr);
      r.json["output"] = t.outputs.empty() ? Json(nullptr) : io::vector_json(t.outputs.back());
      if (t.halted_at) os << "halted at k=" << *t.halted_at << ": no successor mode\n";
      os << "output: " << (t.outputs.empty() ? std::string("-") : detail::show(t.outputs.back()))
         << "\n";
      break;
    }
  }
  r.text = os.str();
  return r;
}

inline Report cmd_simulate(const ModelDocument& d, const std::vector<StepInput>& inputs) {
  Report r;
  r.json = detail::header("simulate", d);
  std::ostringstream os;
  os << "model: " << d.name << " (" << to_string(d.kind()) << ")\n";
  Json steps = Json::array();
  std::optional<std::size_t> halted;
  auto record = [&](std::size_t k, Mode l, const Vector& x, const Vector& y, const ModeSet& succ) {
    steps.push_back({{"k", k}, {"l", l}, {"x", io::vector_json(x)}, {"y", io::vector_json(y)},
                     {"successors", succ}});
    os << "k=" << k << " l=" << l << " x=" << detail::show(x) << " y=" << detail::show(y) << "\n";
  };
  switch (d.kind()) {
    case ModelKind::kMpa: {
      const auto& a = std::get<MaxPlusAutomaton>(d.body);
      const SmplSystem s = from_mpa(a);
      const SmplTrace t = simulate(s, inputs);
      for (const auto& st : t.steps) record(st.k, st.l, st.x, st.y, st.successors);
      halted = t.halted_at;
      break;
    }
    case ModelKind::kSmpl: {
      const SmplTrace t = simulate(std::get<SmplSystem>(d.body), inputs);
      for (const auto& st : t.steps) record(st.k, st.l, st.x, st.y, st.successors);
      halted = t.halted_at;
      break;
    }
    case ModelKind::kMaha: {
      const auto& h = std::get<HybridAutomaton>(d.body);
      std::vector<HybridInput> hin;
      for (const auto& in : inputs)
        hin.push_back(h.origin == HybridAutomaton::Origin::kClosedLoop
                          ? HybridInput{in.theta.theta_x(), in.theta.w}
                          : hybrid_input(in));
      const HybridTrace t = run(h, hin);
      for (const auto& st : t.steps) record(st.k, st.q, st.x, st.y, st.successors);
      halted = t.halted_at;
      break;
    }
    case ModelKind::kFa: throw ModelError("finite automata cannot be simulated; use eval");
  }
  r.json["steps"] = steps;
  r.json["halted_at"] = halted ? Json(*halted) : Json(nullptr);
  if (halted) os << "halted at k=" << *halted << ": no successor mode\n";
  r.text = os.str();
  return r;
}

inline ModelDocument translate(const ModelDocument& d, const std::string& target) {
  ModelDocument out{d.name, d.description, d.body};
  if (d.kind() == ModelKind::kMpa) {
    const auto& a = std::get<MaxPlusAutomaton>(d.body);
    if (target == "smpl") out.body = from_mpa(a);
    else if (target == "maha") out.body = from_smpl_open(from_mpa(a));
    else if (target == "fa") out.body = to_finite_abstraction(a);
    else throw ModelError("cannot translate mpa to '" + target + "'");
  } else if (d.kind() == ModelKind::kSmpl && target == "maha") {
    const auto& s = std::get<SmplSystem>(d.body);
    out.body = s.controller ? from_smpl_closed(s) : from_smpl_open(s);
  } else {
    throw ModelError("cannot translate " + to_string(d.kind()) + " to '" + target + "'");
  }
  return out;
}

/// General abstraction, or the fused one for models derived from an MPA.
inline ModelDocument abstract(const ModelDocument& d, bool fused) {
  ModelDocument out{d.name.empty() ? "" : d.name + (fused ? "_fused" : "_abstraction"), "", d.body};
  if (!fused) {
    if (d.kind() == ModelKind::kFa) throw ModelError("model is already a finite automaton");
    out.body = detail::to_fa(d);
    return out;
  }
  if (d.kind() == ModelKind::kMpa) {
    out.body = specialized_abstraction_for_mpa_translation(
        from_smpl_open(from_mpa(std::get<MaxPlusAutomaton>(d.body))));
  } else if (d.kind() == ModelKind::kSmpl) {
    out.body = specialized_abstraction_for_mpa_translation(
        from_smpl_open(std::get<SmplSystem>(d.body)));
  } else if (d.kind() == ModelKind::kMaha) {
    out.body = specialized_abstraction_for_mpa_translation(std::get<HybridAutomaton>(d.body));
  } else {
    throw ModelError("fused abstraction needs an mpa, smpl or maha model");
  }
  return out;
}

inline Report cmd_check(const ModelDocument& a, const ModelDocument& b,
                        const std::string& relation, const Options& opt, bool exact = false) {
  Report r;
  r.json["command"] = "check";
  r.json["models"] = {a.name, b.name};
  r.json["relation"] = relation;
  std::ostringstream os;
  os << "relation: " << relation << "\n";
  bool verdict = false;
  if (relation == "language") {
    const auto fa = detail::to_fa(a), fb = detail::to_fa(b);
    const auto cmp = exact ? language_equal_exact(fa, fb) : language_equal_upto(fa, fb, opt.bound);
    verdict = cmp.equal;
    if (exact) r.json["exact"] = true;
    else r.json["bound"] = opt.bound;
    os << (exact ? std::string("exact") : "bound: " + std::to_string(opt.bound)) << "\n";
    if (cmp.witness) {
      r.json["witness"] = to_string(*cmp.witness);
      os << "witness: " << detail::show_word(*cmp.witness) << "\n";
    }
  } else if (relation == "simulation" || relation == "bisimulation") {
    const auto fa = detail::to_fa(a), fb = detail::to_fa(b);
    const auto w = relation == "simulation" ? greatest_simulation(fa, fb) : bisimulation(fa, fb);
    verdict = w.has_value();
    if (w) {
      Json pairs = Json::array();
      for (const auto& [p, q] : w->pairs)
        pairs.push_back(Json::array({fa.states()[p], fb.states()[q]}));
      r.json["pairs"] = pairs;
      os << "pairs: " << w->pairs.size() << "\n";
    }
  } else if (relation == "behaviour") {
    const auto res = behavioural_inclusion_upto(detail::to_behaviour(a), detail::to_behaviour(b),
                                                opt.bound, opt.seed);
    verdict = res.included;
    r.json["bound"] = opt.bound;
    r.json["regime"] = res.exhaustive ? "exhaustive" : "sampled";
    r.json["sequences"] = res.checked;
    os << "bound: " << opt.bound << "\nregime: " << (res.exhaustive ? "exhaustive" : "sampled")
       << "\nsequences: " << res.checked << "\n";
    if (res.witness) {
      if (auto w = detail::as_word(*res.witness)) {
        r.json["witness"] = to_string(*w);
        os << "witness: " << detail::show_word(*w) << "\n";
      } else {
        r.json["witness"] = detail::inputs_json(*res.witness);
        os << "witness: " << r.json["witness"].dump() << "\n";
      }
    }
  } else {
    throw ModelError("unknown relation '" + relation + "'");
  }
  r.json["verdict"] = verdict;
  os << "verdict: " << (verdict ? "true" : "false") << "\n";
  r.text = os.str();
  r.code = verdict ? kOk : kFalse;
  return r;
}

inline Report cmd_reproduce(const std::string& models_dir, const Options& opt, bool timing) {
  const auto results = run_reproduction(models_dir, opt.seed);
  Report r;
  r.json["command"] = "reproduce";
  r.json["seed"] = opt.seed;
  Json checks = Json::array();
  std::size_t failed = 0, width = 0;
  for (const auto& c : results) width = std::max(width, c.name.size());
  std::ostringstream os;
  for (const auto& c : results) {
    Json e{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
    if (timing) e["seconds"] = c.seconds;
    checks.push_back(e);
    if (!c.passed) ++failed;
    os << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width))
       << c.name << "  " << c.detail;
    if (timing) os << "  [" << std::fixed << std::setprecision(3) << c.seconds << " s]";
    os << "\n";
  }
  r.json["checks"] = checks;
  r.json["passed"] = results.size() - failed;
  r.json["failed"] = failed;
  os << results.size() - failed << "/" << results.size() << " checks passed (seed "
     << opt.seed << ")\n";
  r.text = os.str();
  r.code = failed ? kFalse : kOk;
  return r;
}

namespace detail {

inline void emit(const Report& r, const Options& opt, std::ostream& out) {
  if (opt.format == "json") {
    io::write_json(out, r.json, 0);
    out << "\n";
  } else {
    out << r.text;
  }
}

inline void emit_model(const ModelDocument& d, const std::string& path, std::ostream& out) {
  const std::string text = serialize(d);
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
}

}  // namespace detail

/// Entry point shared by the binary and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Max-plus automata, SMPL systems and max-algebraic hybrid automata", "mpha"};
  app.fallthrough();
  app.require_subcommand(1);
  Options opt;
  app.add_option("--seed", opt.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--bound", opt.bound, "Word or sequence length bound")->capture_default_str();

  std::string model, model2, word, inputs_file, target, relation = "language", output;
  std::string models_dir = MPHA_MODELS_DIR;
  bool fused = false, timing = false, exact = false;

  auto* eval = app.add_subcommand("eval", "Evaluate a model on a word");
  eval->add_option("model", model, "Model file")->required();
  eval->add_option("--word,-w", word, "Input word")->required();

  auto* sim = app.add_subcommand("simulate", "Simulate a system on a word or input file");
  sim->add_option("model", model, "Model file")->required();
  auto* sim_word = sim->add_option("--word,-w", word, "Input word");
  auto* sim_in = sim->add_option("--inputs", inputs_file, "JSON input sequence");
  sim_word->excludes(sim_in);

  auto* tr = app.add_subcommand("translate", "Translate mpa -> smpl|maha|fa or smpl -> maha");
  tr->add_option("model", model, "Model file")->required();
  tr->add_option("--to", target, "Target kind")
      ->required()
      ->check(CLI::IsMember({"smpl", "maha", "fa"}));
  tr->add_option("--output,-o", output, "Write the model here instead of stdout");

  auto* ab = app.add_subcommand("abstract", "Finite-state abstraction of a model");
  ab->add_option("model", model, "Model file")->required();
  ab->add_flag("--fused", fused, "Fused abstraction of a model derived from an mpa");
  ab->add_option("--output,-o", output, "Write the automaton here instead of stdout");

  auto* ck = app.add_subcommand("check", "Compare two models");
  ck->add_option("model1", model, "First model")->required();
  ck->add_option("model2", model2, "Second model")->required();
  ck->add_option("--relation,-r", relation, "Relation to check")
      ->check(CLI::IsMember({"language", "simulation", "bisimulation", "behaviour"}))
      ->capture_default_str();
  ck->add_flag("--exact", exact, "Unbounded language check (at most 12 states)");

  auto* rp = app.add_subcommand("reproduce", "Run the reproduction suite");
  rp->add_option("--models", models_dir, "Fixture directory")->capture_default_str();
  rp->add_flag("--timing", timing, "Include wall-clock times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) {
      const Report r = cmd_eval(load_model(model), word);
      detail::emit(r, opt, out);
      return r.code;
    }
    if (*sim) {
      const ModelDocument d = load_model(model);
      std::vector<StepInput> in;
      if (!inputs_file.empty()) in = parse_inputs(read_text_file(inputs_file));
      else if (*sim_word) {
        const Word w = parse_word(word, detail::alphabet_of(d));
        const SmplSystem* s = std::get_if<SmplSystem>(&d.body);
        if (const auto* h = std::get_if<HybridAutomaton>(&d.body)) s = h->source.get();
        in = s ? word_inputs(*s, w) : word_inputs(w);
      }
      else throw ModelError("simulate needs --word or --inputs");
      const Report r = cmd_simulate(d, in);
      detail::emit(r, opt, out);
      return r.code;
    }
    if (*tr) {
      detail::emit_model(translate(load_model(model), target), output, out);
      return kOk;
    }
    if (*ab) {
      detail::emit_model(abstract(load_model(model), fused), output, out);
      return kOk;
    }
    if (*ck) {
      const Report r = cmd_check(load_model(model), load_model(model2), relation, opt, exact);
      detail::emit(r, opt, out);
      return r.code;
    }
    if (*rp) {
      const Report r = cmd_reproduce(models_dir, opt, timing);
      detail::emit(r, opt, out);
      return r.code;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace mpha::cli
