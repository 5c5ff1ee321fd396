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

// JSON model documents. Weights are numbers, "-inf" (epsilon) or "+inf"
// (top); modes are numbered from 1.

#pragma once

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "mpha/errors.hpp"
#include "mpha/finite_automaton.hpp"
#include "mpha/maha.hpp"
#include "mpha/mpa.hpp"
#include "mpha/smpl.hpp"

namespace mpha {

using Json = nlohmann::ordered_json;

enum class ModelKind { kMpa, kSmpl, kMaha, kFa };

inline std::string to_string(ModelKind k) {
  switch (k) {
    case ModelKind::kMpa: return "mpa";
    case ModelKind::kSmpl: return "smpl";
    case ModelKind::kMaha: return "maha";
    case ModelKind::kFa: return "fa";
  }
  return "?";
}

struct ModelDocument {
  std::string name;
  std::string description;
  std::variant<MaxPlusAutomaton, SmplSystem, HybridAutomaton, FiniteAutomaton> body;

  ModelKind kind() const { return static_cast<ModelKind>(body.index()); }
};

namespace io {

// Writing.

inline Json weight_json(ExtendedWeight w) {
  if (w.is_epsilon()) return "-inf";
  if (w.is_top()) return "+inf";
  const double v = w.value();
  if (v == std::trunc(v) && std::abs(v) < 9.0e15) return static_cast<std::int64_t>(v);
  return v;
}

inline Json vector_json(const Vector& x) {
  Json j = Json::array();
  for (auto w : x) j.push_back(weight_json(w));
  return j;
}

inline Json matrix_json(const TropicalMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(vector_json(m.row_vector(i)));
  return j;
}

inline Json matrices_json(const std::vector<TropicalMatrix>& ms) {
  Json j = Json::array();
  for (const auto& m : ms) j.push_back(matrix_json(m));
  return j;
}

inline Json switching_json(const SwitchingRule& r) {
  if (!r.spec) throw ModelError("switching rule has no declarative form to serialise");
  Json j;
  if (const auto* g = std::get_if<SymbolGuarded>(&*r.spec)) {
    j["type"] = "symbol_guarded";
    j["kind"] = to_string(r.kind);
    j["symbols"] = g->symbols;
    j["require"] =
        g->require == SymbolGuarded::Require::kHasFinite ? "has_finite" : "not_all_epsilon";
  } else if (const auto* e = std::get_if<ExternalMap>(&*r.spec)) {
    j["type"] = "external";
    j["kind"] = to_string(r.kind);
    Json m = Json::object();
    for (const auto& [w, q] : e->modes) m[w] = q;
    j["modes"] = m;
  } else if (const auto* t = std::get_if<TransitionTable>(&*r.spec)) {
    j["type"] = "table";
    j["kind"] = to_string(r.kind);
    Json entries = Json::array();
    for (const auto& en : t->entries) {
      Json e2;
      if (en.from) e2["from"] = *en.from;
      if (en.w) e2["w"] = *en.w;
      if (en.v) e2["v"] = vector_json(*en.v);
      e2["to"] = en.to;
      entries.push_back(e2);
    }
    j["entries"] = entries;
  } else {
    const auto& th = std::get<ThresholdSwitch>(*r.spec);
    j["type"] = "threshold";
    j["kind"] = to_string(r.kind);
    Json clauses = Json::array();
    for (const auto& c : th.clauses)
      clauses.push_back({{"i", c.i}, {"j", c.j}, {"offset", weight_json(c.offset)}, {"mode", c.mode}});
    j["clauses"] = clauses;
    j["otherwise"] = th.otherwise;
  }
  return j;
}

inline Json smpl_body(const SmplSystem& s) {
  Json j;
  j["dims"] = {{"n", s.dims.n},
               {"n_u", s.dims.n_u},
               {"n_v", s.dims.n_v},
               {"n_y", s.dims.n_y},
               {"n_r", s.dims.n_r}};
  j["alphabet"] = s.alphabet;
  j["x0"] = vector_json(s.x0);
  if (s.initial_mode) j["initial_mode"] = *s.initial_mode;
  Json modes = Json::array();
  for (std::size_t l = 0; l < s.modes.size(); ++l) {
    Json m;
    m["name"] = s.mode_names[l];
    if (const auto* mf = s.modes[l].matrix_form()) {
      m["A"] = matrices_json(mf->A);
      m["B"] = matrices_json(mf->B);
      m["C"] = matrices_json(mf->C);
      m["D"] = matrices_json(mf->D);
      m["constant_input"] = mf->constant_input;
    } else {
      const auto& e = *s.modes[l].expressions();
      Json f = Json::array(), h = Json::array();
      for (const auto& x : e.f) f.push_back(to_text(x));
      for (const auto& x : e.h) h.push_back(to_text(x));
      m["f"] = f;
      m["h"] = h;
    }
    modes.push_back(m);
  }
  j["modes"] = modes;
  j["switching"] = switching_json(s.switching);
  if (s.controller) {
    if (!s.controller->static_feedback)
      throw ModelError("only static feedback controllers can be serialised");
    const auto& sf = *s.controller->static_feedback;
    j["controller"] = {{"type", "static_feedback"},
                       {"K", matrix_json(sf.K)},
                       {"E", matrix_json(sf.E)},
                       {"v", vector_json(sf.v)}};
  }
  if (s.from_automaton) j["from_automaton"] = true;
  return j;
}

inline Json fa_body(const FiniteAutomaton& fa) {
  Json j;
  j["states"] = fa.states();
  j["alphabet"] = fa.alphabet();
  Json init = Json::array(), fin = Json::array(), tr = Json::array();
  for (auto q : fa.initial()) init.push_back(fa.states()[q]);
  for (auto q : fa.final_states()) fin.push_back(fa.states()[q]);
  for (std::size_t q = 0; q < fa.num_states(); ++q)
    for (std::size_t a = 0; a < fa.alphabet().size(); ++a)
      for (auto t : fa.successors(q, a))
        tr.push_back(Json::array({fa.states()[q], fa.alphabet()[a], fa.states()[t]}));
  j["initial"] = init;
  j["final"] = fin;
  j["transitions"] = tr;
  return j;
}

/// dump(2) layout, except arrays of scalars stay on one line.
inline void write_json(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) os << ",\n";
      first = false;
      os << inner << Json(it.key()).dump() << ": ";
      write_json(os, it.value(), indent + 2);
    }
    os << "\n" << pad << "}";
  } else if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) {
      return e.is_primitive();
    });
    if (flat) {
      os << "[";
      for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << j[i].dump();
      os << "]";
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << inner;
      write_json(os, j[i], indent + 2);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << pad << "]";
  } else {
    os << j.dump();
  }
}

// Reading.

struct Reader {
  std::string path;

  [[noreturn]] void fail(const std::string& what) const {
    throw ModelError((path.empty() ? std::string("model") : path) + ": " + what);
  }
  Reader at(const std::string& key) const { return {path.empty() ? key : path + "." + key}; }
  Reader at(std::size_t i) const { return {path + "[" + std::to_string(i) + "]"}; }

  const Json& field(const Json& j, const std::string& key) const {
    if (!j.is_object()) fail("expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail("missing field '" + key + "'");
    return *it;
  }
  const Json* optional_field(const Json& j, const std::string& key) const {
    if (!j.is_object()) fail("expected an object");
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
  }
  const Json& array(const Json& j) const {
    if (!j.is_array()) fail("expected an array");
    return j;
  }
  std::string string(const Json& j) const {
    if (!j.is_string()) fail("expected a string");
    return j.get<std::string>();
  }
  std::size_t count(const Json& j) const {
    if (!j.is_number_unsigned()) fail("expected a non-negative integer");
    return j.get<std::size_t>();
  }
  bool boolean(const Json& j) const {
    if (!j.is_boolean()) fail("expected true or false");
    return j.get<bool>();
  }
  std::vector<std::string> strings(const Json& j) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < array(j).size(); ++i) out.push_back(at(i).string(j[i]));
    return out;
  }
  std::vector<std::size_t> counts(const Json& j) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < array(j).size(); ++i) out.push_back(at(i).count(j[i]));
    return out;
  }
  ExtendedWeight weight(const Json& j) const {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
      const auto s = j.get<std::string>();
      if (s == "-inf") return kEps;
      if (s == "+inf") return kTop;
    }
    fail("expected a number, \"-inf\" or \"+inf\"");
  }
  Vector vector(const Json& j, std::optional<std::size_t> size = {}) const {
    Vector out;
    for (std::size_t i = 0; i < array(j).size(); ++i) out.push_back(at(i).weight(j[i]));
    if (size && out.size() != *size)
      fail("has " + std::to_string(out.size()) + " entries, expected " + std::to_string(*size));
    return out;
  }
  TropicalMatrix matrix(const Json& j, std::size_t rows, std::size_t cols) const {
    if (array(j).size() != rows)
      fail("has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
    TropicalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      const Vector row = at(i).vector(j[i], cols);
      for (std::size_t c = 0; c < cols; ++c) m(i, c) = row[c];
    }
    return m;
  }
  std::vector<TropicalMatrix> matrices(const Json& j, std::size_t rows, std::size_t cols) const {
    std::vector<TropicalMatrix> out;
    for (std::size_t i = 0; i < array(j).size(); ++i) out.push_back(at(i).matrix(j[i], rows, cols));
    return out;
  }
  Mode mode(const Json& j, std::size_t n_modes) const {
    const std::size_t q = count(j);
    if (q < 1 || q > n_modes)
      fail("mode " + std::to_string(q) + " outside 1.." + std::to_string(n_modes));
    return q;
  }
};

inline MaxPlusAutomaton read_mpa(const Json& j, const Reader& r) {
  const auto states = r.at("states").strings(r.field(j, "states"));
  const auto alphabet = r.at("alphabet").strings(r.field(j, "alphabet"));
  const std::size_t n = states.size();
  const Json& mu = r.field(j, "mu");
  if (!mu.is_object()) r.at("mu").fail("expected an object");
  std::map<Symbol, TropicalMatrix> m;
  for (auto it = mu.begin(); it != mu.end(); ++it)
    m.emplace(it.key(), r.at("mu").at(it.key()).matrix(it.value(), n, n));
  try {
    return MaxPlusAutomaton(states, alphabet, r.at("alpha").vector(r.field(j, "alpha"), n), m,
                            r.at("beta").vector(r.field(j, "beta"), n));
  } catch (const ModelError& e) {
    r.fail(e.what());
  }
}

inline SwitchingRule read_switching(const Json& j, const Reader& r, std::size_t n_modes) {
  const std::string type = r.at("type").string(r.field(j, "type"));
  std::optional<SwitchingKind> kind;
  if (const Json* k = r.optional_field(j, "kind")) {
    try {
      kind = parse_switching_kind(r.at("kind").string(*k));
    } catch (const ModelError& e) {
      r.at("kind").fail(e.what());
    }
  }
  if (type == "symbol_guarded") {
    SymbolGuarded g;
    g.symbols = r.at("symbols").strings(r.field(j, "symbols"));
    if (const Json* req = r.optional_field(j, "require")) {
      const std::string s = r.at("require").string(*req);
      if (s == "has_finite") g.require = SymbolGuarded::Require::kHasFinite;
      else if (s != "not_all_epsilon") r.at("require").fail("unknown requirement '" + s + "'");
    }
    return SwitchingRule::from_spec(g, kind);
  }
  if (type == "external") {
    ExternalMap e;
    const Json& m = r.field(j, "modes");
    if (!m.is_object()) r.at("modes").fail("expected an object");
    for (auto it = m.begin(); it != m.end(); ++it)
      e.modes[it.key()] = r.at("modes").at(it.key()).mode(it.value(), n_modes);
    return SwitchingRule::from_spec(e, kind);
  }
  if (type == "table") {
    TransitionTable t;
    const Reader re = r.at("entries");
    const Json& es = re.array(r.field(j, "entries"));
    for (std::size_t i = 0; i < es.size(); ++i) {
      const Reader ri = re.at(i);
      TransitionTable::Entry en;
      if (const Json* f = ri.optional_field(es[i], "from")) en.from = ri.at("from").mode(*f, n_modes);
      if (const Json* w = ri.optional_field(es[i], "w")) en.w = ri.at("w").string(*w);
      if (const Json* v = ri.optional_field(es[i], "v")) en.v = ri.at("v").vector(*v);
      const Json& to = ri.array(ri.field(es[i], "to"));
      for (std::size_t k = 0; k < to.size(); ++k) en.to.push_back(ri.at("to").at(k).mode(to[k], n_modes));
      t.entries.push_back(std::move(en));
    }
    return SwitchingRule::from_spec(t, kind);
  }
  if (type == "threshold") {
    ThresholdSwitch th;
    const Reader rc = r.at("clauses");
    const Json& cs = rc.array(r.field(j, "clauses"));
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const Reader ri = rc.at(i);
      th.clauses.push_back({ri.at("i").count(ri.field(cs[i], "i")),
                            ri.at("j").count(ri.field(cs[i], "j")),
                            ri.at("offset").weight(ri.field(cs[i], "offset")),
                            ri.at("mode").mode(ri.field(cs[i], "mode"), n_modes)});
    }
    th.otherwise = r.at("otherwise").mode(r.field(j, "otherwise"), n_modes);
    return SwitchingRule::from_spec(th, kind);
  }
  r.at("type").fail("unknown switching type '" + type + "'");
}

inline SmplSystem read_smpl(const Json& j, const Reader& r) {
  SmplSystem s;
  const Reader rd = r.at("dims");
  const Json& d = r.field(j, "dims");
  s.dims.n = rd.at("n").count(rd.field(d, "n"));
  s.dims.n_y = rd.at("n_y").count(rd.field(d, "n_y"));
  for (auto [key, slot] : {std::pair{"n_u", &s.dims.n_u}, {"n_v", &s.dims.n_v}, {"n_r", &s.dims.n_r}})
    if (const Json* v = rd.optional_field(d, key)) *slot = rd.at(key).count(*v);
  if (const Json* a = r.optional_field(j, "alphabet")) s.alphabet = r.at("alphabet").strings(*a);
  s.x0 = r.at("x0").vector(r.field(j, "x0"), s.dims.n);
  const std::size_t width = s.input_width();
  const Reader rm = r.at("modes");
  const Json& modes = rm.array(r.field(j, "modes"));
  if (modes.empty()) rm.fail("needs at least one mode");
  for (std::size_t l = 0; l < modes.size(); ++l) {
    const Reader ri = rm.at(l);
    const Json& m = modes[l];
    s.mode_names.push_back(ri.at("name").string(ri.field(m, "name")));
    if (ri.optional_field(m, "f")) {
      ExpressionDynamics e;
      for (auto [key, list] : {std::pair{"f", &e.f}, {"h", &e.h}}) {
        const auto texts = ri.at(key).strings(ri.field(m, key));
        for (std::size_t i = 0; i < texts.size(); ++i) {
          try {
            list->push_back(parse_expression(texts[i]));
          } catch (const ParseError& err) {
            ri.at(key).at(i).fail(err.what());
          }
        }
      }
      s.modes.emplace_back(std::move(e));
    } else {
      MatrixForm mf;
      if (const Json* c = ri.optional_field(m, "constant_input"))
        mf.constant_input = ri.at("constant_input").boolean(*c);
      const std::size_t cols = width + (mf.constant_input ? 1 : 0);
      mf.A = ri.at("A").matrices(ri.field(m, "A"), s.dims.n, s.dims.n);
      mf.B = ri.at("B").matrices(ri.field(m, "B"), s.dims.n, cols);
      mf.C = ri.at("C").matrices(ri.field(m, "C"), s.dims.n_y, s.dims.n);
      mf.D = ri.at("D").matrices(ri.field(m, "D"), s.dims.n_y, cols);
      try {
        s.modes.emplace_back(std::move(mf));
      } catch (const ShapeError& e) {
        ri.fail(e.what());
      }
    }
  }
  if (const Json* q = r.optional_field(j, "initial_mode"))
    s.initial_mode = r.at("initial_mode").mode(*q, s.modes.size());
  s.switching = read_switching(r.field(j, "switching"), r.at("switching"), s.modes.size());
  if (const Json* c = r.optional_field(j, "controller")) {
    const Reader rc = r.at("controller");
    if (rc.at("type").string(rc.field(*c, "type")) != "static_feedback")
      rc.at("type").fail("only static_feedback controllers are supported");
    StaticFeedback sf{rc.at("K").matrix(rc.field(*c, "K"), s.dims.n_u, s.dims.n),
                      rc.at("E").matrix(rc.field(*c, "E"), s.dims.n_u, s.dims.n_r),
                      rc.at("v").vector(rc.field(*c, "v"), s.dims.n_v)};
    s.controller = static_feedback_controller(std::move(sf));
  }
  if (const Json* f = r.optional_field(j, "from_automaton"))
    s.from_automaton = r.at("from_automaton").boolean(*f);
  try {
    validate(s);
  } catch (const Error& e) {
    r.fail(e.what());
  }
  return s;
}

inline FiniteAutomaton read_fa(const Json& j, const Reader& r) {
  try {
    FiniteAutomaton fa(r.at("alphabet").strings(r.field(j, "alphabet")));
    for (const auto& s : r.at("states").strings(r.field(j, "states"))) fa.add_state(s);
    for (const auto& s : r.at("initial").strings(r.field(j, "initial"))) fa.set_initial(fa.state_index(s));
    for (const auto& s : r.at("final").strings(r.field(j, "final"))) fa.set_final(fa.state_index(s));
    const Reader rt = r.at("transitions");
    const Json& ts = rt.array(r.field(j, "transitions"));
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const auto t = rt.at(i).strings(ts[i]);
      if (t.size() != 3) rt.at(i).fail("expected [from, symbol, to]");
      fa.add_transition(t[0], t[1], t[2]);
    }
    return fa;
  } catch (const ModelError& e) {
    if (std::string(e.what()).rfind(r.path.empty() ? "model" : r.path, 0) == 0) throw;
    r.fail(e.what());
  }
}

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace io

/// Parses and validates a model. Syntax errors raise ParseError with a line
/// and column; invariant violations raise ModelError naming the field.
inline ModelDocument parse_model(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = io::line_column(text, e.byte);
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ParseError(msg, line, col);
  }
  const io::Reader r;
  const std::string kind = r.at("kind").string(r.field(j, "kind"));
  std::string name, description;
  if (const Json* n = r.optional_field(j, "name")) name = r.at("name").string(*n);
  if (const Json* d = r.optional_field(j, "description"))
    description = r.at("description").string(*d);
  if (kind == "mpa") return {name, description, io::read_mpa(j, r)};
  if (kind == "smpl") return {name, description, io::read_smpl(j, r)};
  if (kind == "fa") return {name, description, io::read_fa(j, r)};
  if (kind == "maha") {
    const std::string how = r.at("construction").string(r.field(j, "construction"));
    SmplSystem s = io::read_smpl(r.field(j, "system"), r.at("system"));
    try {
      if (how == "open") return {name, description, from_smpl_open(s)};
      if (how == "closed") return {name, description, from_smpl_closed(s)};
    } catch (const ModelError& e) {
      r.fail(e.what());
    }
    r.at("construction").fail("expected \"open\" or \"closed\"");
  }
  r.at("kind").fail("unknown kind '" + kind + "'");
}

inline Json to_json(const ModelDocument& doc) {
  Json j;
  j["kind"] = to_string(doc.kind());
  if (!doc.name.empty()) j["name"] = doc.name;
  if (!doc.description.empty()) j["description"] = doc.description;
  Json body;
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, MaxPlusAutomaton>) {
          body["states"] = m.states();
          body["alphabet"] = m.alphabet();
          body["alpha"] = io::vector_json(m.alpha());
          Json mu = Json::object();
          for (const auto& s : m.alphabet()) mu[s] = io::matrix_json(m.mu(s));
          body["mu"] = mu;
          body["beta"] = io::vector_json(m.beta());
        } else if constexpr (std::is_same_v<T, SmplSystem>) {
          body = io::smpl_body(m);
        } else if constexpr (std::is_same_v<T, HybridAutomaton>) {
          if (!m.source || m.origin == HybridAutomaton::Origin::kDirect)
            throw ModelError("only MAHA built from an SMPL system can be serialised");
          body["construction"] = m.origin == HybridAutomaton::Origin::kOpenLoop ? "open" : "closed";
          body["system"] = io::smpl_body(*m.source);
        } else {
          body = io::fa_body(m);
        }
      },
      doc.body);
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  return j;
}

/// Canonical text: fixed field order, two-space indent, trailing newline.
inline std::string serialize(const ModelDocument& doc) {
  std::ostringstream os;
  io::write_json(os, to_json(doc), 0);
  os << "\n";
  return os.str();
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline ModelDocument load_model(const std::string& path) {
  return parse_model(read_text_file(path));
}

/// Event inputs: [{"w": "a", "r": [...], "p": [...], "u": [...], "v": [...]}, ...].
inline std::vector<StepInput> parse_inputs(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = io::line_column(text, e.byte);
    throw ParseError("malformed input sequence", line, col);
  }
  const io::Reader r{"inputs"};
  std::vector<StepInput> out;
  for (std::size_t i = 0; i < r.array(j).size(); ++i) {
    const io::Reader ri = r.at(i);
    StepInput in;
    if (const Json* w = ri.optional_field(j[i], "w")) in.theta.w = ri.at("w").string(*w);
    if (const Json* v = ri.optional_field(j[i], "r")) in.theta.r = ri.at("r").vector(*v);
    if (const Json* v = ri.optional_field(j[i], "p")) in.theta.p = ri.at("p").vector(*v);
    if (const Json* v = ri.optional_field(j[i], "u")) in.u = ri.at("u").vector(*v);
    if (const Json* v = ri.optional_field(j[i], "v")) in.v = ri.at("v").vector(*v);
    out.push_back(std::move(in));
  }
  return out;
}

}  // namespace mpha
