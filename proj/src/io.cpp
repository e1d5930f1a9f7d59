#include "nlg/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace nlg {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

void reject_unknown_fields(const json& j, const std::set<std::string>& known,
                           const std::string& where) {
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) throw ParseError("unknown field '" + key + "' in " + where);
}

int label_index(const std::vector<std::string>& labels, const std::string& label,
                const std::string& where) {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw ParseError("unknown label '" + label + "' in " + where);
  return static_cast<int>(it - labels.begin());
}

std::vector<std::vector<std::string>> parse_alphabets(const json& j, const std::string& where,
                                                      size_t players) {
  if (!j.is_array() || j.size() != players)
    throw ParseError(where + " must list one alphabet per player");
  std::vector<std::vector<std::string>> out;
  for (const auto& alpha : j) {
    if (!alpha.is_array() || alpha.empty()) throw ParseError("empty alphabet in " + where);
    std::vector<std::string> labels;
    for (const auto& l : alpha) labels.push_back(l.get<std::string>());
    out.push_back(std::move(labels));
  }
  return out;
}

cplx parse_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("complex number must be a [real, imaginary] pair in " + where);
  return cplx(j[0].get<double>(), j[1].get<double>());
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

ComplexMatrix parse_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a row array in " + where);
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j[r].size()) != cols) throw ParseError("ragged matrix in " + where);
    for (int c = 0; c < cols; ++c) m(r, c) = parse_complex(j[r][c], where);
  }
  return m;
}

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

GameDocument parse_game_document(const std::string& text) {
  const json j = parse_json(text);
  reject_unknown_fields(j, {"players", "inputs", "outputs", "relation", "promise", "metadata"},
                        "game document");
  if (!j.contains("players") || !j.contains("inputs") || !j.contains("outputs") ||
      !j.contains("relation"))
    throw ParseError("game document needs players, inputs, outputs, relation");

  const int players = j["players"].get<int>();
  if (players < 2) throw ParseError("players must be >= 2");

  GameDocument doc;
  doc.inputLabels = parse_alphabets(j["inputs"], "inputs", players);
  doc.outputLabels = parse_alphabets(j["outputs"], "outputs", players);

  std::vector<int> inSizes, outSizes;
  for (const auto& a : doc.inputLabels) inSizes.push_back(static_cast<int>(a.size()));
  for (const auto& a : doc.outputLabels) outSizes.push_back(static_cast<int>(a.size()));
  Game base(inSizes, outSizes);

  for (const auto& tuple : j["relation"]) {
    if (!tuple.is_array() || static_cast<int>(tuple.size()) != 2 * players)
      throw ParseError("relation tuple must list one input and one output per player");
    std::vector<int> ins(players), outs(players);
    for (int p = 0; p < players; ++p) {
      ins[p] = label_index(doc.inputLabels[p], tuple[p].get<std::string>(), "relation");
      outs[p] =
          label_index(doc.outputLabels[p], tuple[players + p].get<std::string>(), "relation");
    }
    base.set_winning(ins, outs, true);
  }
  doc.unfolded = base;

  if (j.contains("promise")) {
    std::vector<std::vector<int>> promise;
    for (const auto& tuple : j["promise"]) {
      if (!tuple.is_array() || static_cast<int>(tuple.size()) != players)
        throw ParseError("promise tuple must list one input per player");
      std::vector<int> ins(players);
      for (int p = 0; p < players; ++p)
        ins[p] = label_index(doc.inputLabels[p], tuple[p].get<std::string>(), "promise");
      promise.push_back(std::move(ins));
    }
    if (promise.empty()) throw ParseError("promise must be nonempty");
    doc.promise = promise;
    doc.game = fold_promise(PromiseGame{std::move(base), promise});
  } else {
    doc.game = std::move(base);
  }
  return doc;
}

std::string serialize_game_document(const GameDocument& doc) {
  json j;
  j["players"] = doc.inputLabels.size();
  j["inputs"] = doc.inputLabels;
  j["outputs"] = doc.outputLabels;

  const Game& g = doc.unfolded;
  json relation = json::array();
  for (std::int64_t in = 0; in < g.joint_inputs(); ++in)
    for (std::int64_t out = 0; out < g.joint_outputs(); ++out) {
      if (!g.winning_index(in, out)) continue;
      const std::vector<int> ins = g.input_tuple(in);
      const std::vector<int> outs = g.output_tuple(out);
      json tuple = json::array();
      for (size_t p = 0; p < ins.size(); ++p) tuple.push_back(doc.inputLabels[p][ins[p]]);
      for (size_t p = 0; p < outs.size(); ++p) tuple.push_back(doc.outputLabels[p][outs[p]]);
      relation.push_back(tuple);
    }
  j["relation"] = relation;

  if (doc.promise) {
    json promise = json::array();
    for (const auto& ins : *doc.promise) {
      json tuple = json::array();
      for (size_t p = 0; p < ins.size(); ++p) tuple.push_back(doc.inputLabels[p][ins[p]]);
      promise.push_back(tuple);
    }
    j["promise"] = promise;
  }
  return j.dump(2) + "\n";
}

StrategyDocument parse_strategy_document(const std::string& text) {
  const json j = parse_json(text);
  reject_unknown_fields(j, {"dims", "state", "measurements", "answers"}, "strategy document");
  if (!j.contains("dims") || !j.contains("state") || !j.contains("measurements") ||
      !j.contains("answers"))
    throw ParseError("strategy document needs dims, state, measurements, answers");

  const size_t players = j["dims"].size();
  if (players != 2 && players != 3)
    throw ParseError("dims must list 2 or 3 local dimensions");

  auto parse_side = [&](const json& side, int dim) {
    std::vector<Povm> povms;
    for (const auto& inputPovm : side) {
      Povm p;
      p.dim = dim;
      for (const auto& el : inputPovm) p.elements.push_back(parse_matrix(el, "measurements"));
      povms.push_back(std::move(p));
    }
    return povms;
  };

  StrategyDocument doc;
  doc.players = static_cast<int>(players);

  if (players == 2) {
    QuantumStrategy& s = doc.strategy;
    s.dimA = j["dims"][0].get<int>();
    s.dimB = j["dims"][1].get<int>();
    for (const auto& amp : j["state"]) s.shared.amps.push_back(parse_complex(amp, "state"));

    const json& meas = j["measurements"];
    reject_unknown_fields(meas, {"A", "B"}, "measurements");
    s.povmsA = parse_side(meas.at("A"), s.dimA);
    s.povmsB = parse_side(meas.at("B"), s.dimB);

    const json& ans = j["answers"];
    reject_unknown_fields(ans, {"A", "B"}, "answers");
    s.answerA = ans.at("A").get<std::vector<std::vector<int>>>();
    s.answerB = ans.at("B").get<std::vector<std::vector<int>>>();

    try {
      s.validate();
    } catch (const std::exception& e) {
      throw ParseError(std::string("invalid strategy: ") + e.what());
    }
    return doc;
  }

  QuantumStrategy3& s = doc.strategy3;
  int stateDim = 1;
  std::vector<int> dims;
  for (const auto& d : j["dims"]) {
    dims.push_back(d.get<int>());
    stateDim *= dims.back();
  }
  for (const auto& amp : j["state"]) s.shared.amps.push_back(parse_complex(amp, "state"));
  if (s.shared.dim() != stateDim)
    throw ParseError("invalid strategy: state dim != product of dims");

  const json& meas = j["measurements"];
  reject_unknown_fields(meas, {"A", "B", "C"}, "measurements");
  const json& ans = j["answers"];
  reject_unknown_fields(ans, {"A", "B", "C"}, "answers");
  const std::array<const char*, 3> keys = {"A", "B", "C"};
  for (size_t p = 0; p < 3; ++p) {
    s.povms.push_back(parse_side(meas.at(keys[p]), dims[p]));
    s.answers.push_back(ans.at(keys[p]).get<std::vector<std::vector<int>>>());
    if (s.povms[p].size() != s.answers[p].size())
      throw ParseError("invalid strategy: answer map must cover every input");
    for (size_t x = 0; x < s.povms[p].size(); ++x) {
      if (!validate_povm(s.povms[p][x]).ok)
        throw ParseError(std::string("invalid strategy: invalid POVM for player ") + keys[p]);
      if (s.answers[p][x].size() != s.povms[p][x].elements.size())
        throw ParseError("invalid strategy: answer map missing outcomes");
    }
  }
  try {
    s.shared.check_normalized();
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid strategy: ") + e.what());
  }
  return doc;
}

std::string serialize_strategy_document(const StrategyDocument& doc) {
  auto side_json = [](const std::vector<Povm>& povms) {
    json side = json::array();
    for (const auto& p : povms) {
      json elems = json::array();
      for (const auto& m : p.elements) elems.push_back(matrix_json(m));
      side.push_back(elems);
    }
    return side;
  };

  json j;
  if (doc.players == 3) {
    const QuantumStrategy3& s = doc.strategy3;
    // Local dims are uniform qubits in the 3-player form we emit.
    j["dims"] = {2, 2, 2};
    json state = json::array();
    for (const cplx& a : s.shared.amps) state.push_back(complex_json(a));
    j["state"] = state;
    const std::array<const char*, 3> keys = {"A", "B", "C"};
    for (size_t p = 0; p < 3; ++p) {
      j["measurements"][keys[p]] = side_json(s.povms[p]);
      j["answers"][keys[p]] = s.answers[p];
    }
    return j.dump(2) + "\n";
  }

  const QuantumStrategy& s = doc.strategy;
  j["dims"] = {s.dimA, s.dimB};
  json state = json::array();
  for (const cplx& a : s.shared.amps) state.push_back(complex_json(a));
  j["state"] = state;
  j["measurements"]["A"] = side_json(s.povmsA);
  j["measurements"]["B"] = side_json(s.povmsB);
  j["answers"]["A"] = s.answerA;
  j["answers"]["B"] = s.answerB;
  return j.dump(2) + "\n";
}

std::string serialize_deterministic_strategy(const DeterministicStrategy& s) {
  json j;
  j["players"] = s.outputs.size();
  j["outputs"] = s.outputs;
  return j.dump(2) + "\n";
}

DeterministicStrategy parse_deterministic_strategy(const std::string& text) {
  const json j = parse_json(text);
  reject_unknown_fields(j, {"players", "outputs"}, "deterministic strategy document");
  DeterministicStrategy s;
  s.outputs = j.at("outputs").get<std::vector<std::vector<int>>>();
  if (j.at("players").get<size_t>() != s.outputs.size())
    throw ParseError("players field disagrees with outputs");
  return s;
}

Povm parse_povm_document(const std::string& text) {
  const json j = parse_json(text);
  reject_unknown_fields(j, {"dim", "elements"}, "POVM document");
  Povm p;
  p.dim = j.at("dim").get<int>();
  for (const auto& el : j.at("elements")) p.elements.push_back(parse_matrix(el, "elements"));
  return p;
}

std::string serialize_povm_document(const Povm& p) {
  json j;
  j["dim"] = p.dim;
  json elems = json::array();
  for (const auto& m : p.elements) elems.push_back(matrix_json(m));
  j["elements"] = elems;
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace nlg
