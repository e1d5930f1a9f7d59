// Command-line front end for nonlocal game analysis: strategy verification,
// classical-strategy extraction, exact classical values, POVM inspection and
// the Hardy-state demonstration.
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nlg/classical.hpp"
#include "nlg/extraction.hpp"
#include "nlg/io.hpp"
#include "nlg/support_gen.hpp"

using namespace nlg;
using nlohmann::json;

namespace {

// Exit codes: 0 success/winning, 1 usage or parse error,
// 2 semantic negative (not winning / infeasible), 3 resource cap.
constexpr int kOk = 0;
constexpr int kParseError = 1;
constexpr int kNegative = 2;
constexpr int kCapExceeded = 3;

std::string hemisphere_name(Hemisphere h) {
  switch (h) {
    case Hemisphere::East: return "east";
    case Hemisphere::West: return "west";
    case Hemisphere::Both: return "both";
    case Hemisphere::Neither: return "neither";
  }
  return "?";
}

json tuple_json(const std::vector<int>& t) { return json(t); }

int cmd_verify(const std::string& gameFile, const std::string& strategyFile, double tolFlag,
               bool asJson) {
  const GameDocument gd = parse_game_document(read_file(gameFile));
  const StrategyDocument sd = parse_strategy_document(read_file(strategyFile));
  if (gd.game.player_count() != sd.players)
    throw ParseError("game and strategy disagree on the number of players");
  const VerifyResult res = sd.players == 3 ? verify_winning(sd.strategy3, gd.game, tolFlag)
                                           : verify_winning(sd.strategy, gd.game, tolFlag);

  if (asJson) {
    json j;
    j["wins"] = res.wins;
    j["worst_losing_mass"] = res.worst_losing_mass;
    json perInput = json::array();
    for (std::int64_t in = 0; in < gd.game.joint_inputs(); ++in) {
      json row;
      row["inputs"] = tuple_json(gd.game.input_tuple(in));
      row["losing_mass"] = res.losing_mass[static_cast<size_t>(in)];
      perInput.push_back(row);
    }
    j["per_input"] = perInput;
    if (!res.wins) {
      j["counterexample"]["inputs"] = tuple_json(res.inputs);
      j["counterexample"]["outputs"] = tuple_json(res.outputs);
      j["counterexample"]["probability"] = res.probability;
    }
    std::cout << j.dump(2) << "\n";
  } else if (res.wins) {
    std::cout << "winning: every input has losing mass <= " << tolFlag << "\n";
    for (std::int64_t in = 0; in < gd.game.joint_inputs(); ++in) {
      const std::vector<int> t = gd.game.input_tuple(in);
      std::cout << "  inputs (";
      for (size_t i = 0; i < t.size(); ++i) std::cout << (i ? "," : "") << t[i];
      std::cout << "): losing mass " << res.losing_mass[static_cast<size_t>(in)] << "\n";
    }
  } else {
    std::cout << "not winning: inputs (";
    for (size_t i = 0; i < res.inputs.size(); ++i)
      std::cout << (i ? "," : "") << res.inputs[i];
    std::cout << ") lose mass " << res.worst_losing_mass << ", worst outputs (";
    for (size_t i = 0; i < res.outputs.size(); ++i)
      std::cout << (i ? "," : "") << res.outputs[i];
    std::cout << ") with probability " << res.probability << "\n";
  }
  return res.wins ? kOk : kNegative;
}

int cmd_extract(const std::string& gameFile, const std::string& strategyFile,
                const std::string& outFile, bool asJson) {
  const GameDocument gd = parse_game_document(read_file(gameFile));
  const StrategyDocument sd = parse_strategy_document(read_file(strategyFile));
  const ExtractionResult res = extract_classical(sd.strategy, gd.game);
  const bool classicalWins = deterministic_wins_everywhere(gd.game, res.strategy);

  const std::string doc = serialize_deterministic_strategy(res.strategy);
  if (!outFile.empty()) write_file(outFile, doc);

  if (asJson) {
    json j;
    j["strategy"] = json::parse(doc);
    j["input_strategy_verified_winning"] = res.guaranteed;
    j["extracted_strategy_wins_all_instances"] = classicalWins;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << doc;
    std::cout << "input strategy verified winning: " << (res.guaranteed ? "yes" : "no") << "\n";
    std::cout << "extracted strategy wins all instances: " << (classicalWins ? "yes" : "no")
              << "\n";
  }
  return classicalWins ? kOk : kNegative;
}

int cmd_classical_value(const std::string& gameFile, int threads, bool asJson) {
  const GameDocument gd = parse_game_document(read_file(gameFile));
  std::vector<std::vector<int>> promise;
  const std::vector<std::vector<int>>* promisePtr = nullptr;
  if (gd.promise) {
    promise = *gd.promise;
    promisePtr = &promise;
  }
  const ClassicalValueReport rep = classical_value(gd.game, promisePtr, threads);

  if (asJson) {
    json j;
    j["fraction"] = rep.fraction();
    j["value"] = rep.value();
    j["strategies_searched"] = rep.strategies_searched;
    j["witness"] = rep.witness.outputs;
    if (rep.promise_wins) {
      j["promise_wins"] = *rep.promise_wins;
      j["promise_instances"] = *rep.promise_instances;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "classical value: " << rep.fraction() << " = " << std::setprecision(10)
              << rep.value() << " (searched " << rep.strategies_searched << " strategies)\n";
    std::cout << "witness:";
    for (size_t p = 0; p < rep.witness.outputs.size(); ++p) {
      std::cout << " player" << p << "=[";
      for (size_t x = 0; x < rep.witness.outputs[p].size(); ++x)
        std::cout << (x ? "," : "") << rep.witness.outputs[p][x];
      std::cout << "]";
    }
    std::cout << "\n";
    if (rep.promise_wins)
      std::cout << "value on promise inputs: " << *rep.promise_wins << "/"
                << *rep.promise_instances << "\n";
  }
  return kOk;
}

int cmd_hardy_demo(bool asJson) {
  const SupportTable t = hardy_support();
  const Game induced = t.induced_game();
  const FeasibilityReport feas = local_support_feasible(t);
  const ClassicalValueReport cval = classical_value(induced);
  const QuantumStrategy hs = hardy_strategy();
  const SchmidtForm sf = schmidt(hs.shared, 2, 2);

  if (asJson) {
    json j;
    json table = json::array();
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        json row;
        row["inputs"] = {x, y};
        json possible = json::array();
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            if (t.at({x, y}, {a, b})) possible.push_back({a, b});
        row["possible"] = possible;
        table.push_back(row);
      }
    j["support"] = table;
    j["schmidt_coefficients"] = {sf.coefficients[0], sf.coefficients[1]};
    j["local_support_feasible"] = feas.feasible;
    if (!feas.feasible) {
      j["uncovered_event"]["inputs"] = feas.uncovered_inputs;
      j["uncovered_event"]["outputs"] = feas.uncovered_outputs;
    }
    j["classical_value_of_support_game"] = cval.fraction();
    j["classically_winnable"] = (cval.wins == cval.instances);
    j["classical_witness"] = cval.witness.outputs;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "Hardy state (|01>+|10>+|11>)/sqrt(3), bases: 0=computational 1=Hadamard\n";
    std::cout << "Schmidt coefficients: " << std::setprecision(10) << sf.coefficients[0] << " "
              << sf.coefficients[1] << "\n\n";
    std::cout << "support table (x,y -> possible (a,b)):\n";
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        std::cout << "  (" << x << "," << y << "):";
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            if (t.at({x, y}, {a, b})) std::cout << " (" << a << "," << b << ")";
        std::cout << "\n";
      }
    std::cout << "\nlocal support feasible: " << (feas.feasible ? "yes" : "no") << "\n";
    if (!feas.feasible)
      std::cout << "uncovered event: inputs (" << feas.uncovered_inputs[0] << ","
                << feas.uncovered_inputs[1] << ") outputs (" << feas.uncovered_outputs[0] << ","
                << feas.uncovered_outputs[1] << ")\n";
    std::cout << "classical value of the induced support game: " << cval.fraction() << "\n";
    std::cout << "winning classical strategy: A=[" << cval.witness.outputs[0][0] << ","
              << cval.witness.outputs[0][1] << "] B=[" << cval.witness.outputs[1][0] << ","
              << cval.witness.outputs[1][1] << "]\n";
  }
  return kOk;
}

int cmd_gen_support(std::uint64_t seed, const std::string& outPrefix, bool asJson) {
  const SupportBundle bundle = random_support_bundle(seed);

  GameDocument gd;
  gd.inputLabels = {{"x0", "x1"}, {"y0", "y1"}};
  gd.outputLabels = {{"a0", "a1"}, {"b0", "b1"}};
  gd.game = bundle.game;
  gd.unfolded = bundle.game;

  StrategyDocument sd;
  sd.strategy = bundle.strategy;

  const std::string gameText = serialize_game_document(gd);
  const std::string strategyText = serialize_strategy_document(sd);
  write_file(outPrefix + ".game.json", gameText);
  write_file(outPrefix + ".strategy.json", strategyText);

  if (asJson) {
    json j;
    j["seed"] = seed;
    j["game_file"] = outPrefix + ".game.json";
    j["strategy_file"] = outPrefix + ".strategy.json";
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "wrote " << outPrefix << ".game.json and " << outPrefix
              << ".strategy.json (seed " << seed << ")\n";
  }
  return kOk;
}

int cmd_povm_inspect(const std::string& povmFile, bool asJson) {
  const Povm p = parse_povm_document(read_file(povmFile));
  const PovmValidation v = validate_povm(p);
  if (!v.ok) {
    std::cout << "invalid POVM: " << v.message;
    if (v.element_index >= 0) std::cout << " (element " << v.element_index << ")";
    std::cout << "\n";
    return kNegative;
  }
  const std::vector<Rank1Element> elems = refine_to_rank1(p);

  if (asJson) {
    json j;
    json list = json::array();
    for (const auto& e : elems) {
      const BlochPoint b = angles_to_bloch(e.theta, e.phi);
      json el;
      el["label"] = {e.original, e.sub};
      el["gamma"] = e.gamma;
      el["theta"] = e.theta;
      el["phi"] = e.phi;
      el["bloch"] = {b.x, b.y, b.z};
      el["hemisphere"] = hemisphere_name(hemisphere_of(e));
      list.push_back(el);
    }
    j["elements"] = list;
    j["east_pick"] = {elems[pick_east(elems)].original, elems[pick_east(elems)].sub};
    j["west_pick"] = {elems[pick_west(elems)].original, elems[pick_west(elems)].sub};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "rank-1 refinement (" << elems.size() << " elements):\n";
    for (const auto& e : elems) {
      const BlochPoint b = angles_to_bloch(e.theta, e.phi);
      std::cout << "  (" << e.original << "," << e.sub << "): gamma=" << std::setprecision(6)
                << e.gamma << " theta=" << e.theta << " phi=" << e.phi << " bloch=(" << b.x
                << "," << b.y << "," << b.z << ") " << hemisphere_name(hemisphere_of(e))
                << "\n";
    }
    const auto& east = elems[pick_east(elems)];
    const auto& west = elems[pick_west(elems)];
    std::cout << "east pick: (" << east.original << "," << east.sub << "), west pick: ("
              << west.original << "," << west.sub << ")\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nonlocal game analysis: quantum strategy verification, classical extraction, "
               "exhaustive classical values"};
  app.require_subcommand(1);

  double tolFlag = tol().winning_mass;
  int threads = 1;
  bool asJson = false;
  std::uint64_t seed = 0;
  std::string gameFile, strategyFile, povmFile, outFile, outPrefix = "support";

  auto* verify = app.add_subcommand("verify", "check a quantum strategy against a game");
  verify->add_option("game", gameFile)->required();
  verify->add_option("strategy", strategyFile)->required();
  verify->add_option("--tol", tolFlag, "losing-mass tolerance");
  verify->add_flag("--json", asJson);

  auto* extract = app.add_subcommand("extract", "extract a classical strategy (2x2 / 2xn)");
  extract->add_option("game", gameFile)->required();
  extract->add_option("strategy", strategyFile)->required();
  extract->add_option("-o,--out", outFile, "write the deterministic strategy here");
  extract->add_flag("--json", asJson);

  auto* cval = app.add_subcommand("classical-value", "exact classical value by brute force");
  cval->add_option("game", gameFile)->required();
  cval->add_option("--threads", threads);
  cval->add_flag("--json", asJson);

  auto* hardy = app.add_subcommand("hardy-demo", "Hardy-state separation report");
  hardy->add_flag("--json", asJson);

  auto* gen = app.add_subcommand("gen-support", "random winning strategy + support game");
  gen->add_option("--seed", seed)->required();
  gen->add_option("-o,--out", outPrefix, "output file prefix");
  gen->add_flag("--json", asJson);

  auto* inspect = app.add_subcommand("povm-inspect", "rank-1 refinement and Bloch geometry");
  inspect->add_option("povm", povmFile)->required();
  inspect->add_flag("--json", asJson);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(gameFile, strategyFile, tolFlag, asJson);
    if (extract->parsed()) return cmd_extract(gameFile, strategyFile, outFile, asJson);
    if (cval->parsed()) return cmd_classical_value(gameFile, threads, asJson);
    if (hardy->parsed()) return cmd_hardy_demo(asJson);
    if (gen->parsed()) return cmd_gen_support(seed, outPrefix, asJson);
    if (inspect->parsed()) return cmd_povm_inspect(povmFile, asJson);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    std::cerr << "error: " << msg << "\n";
    return msg.find("cap") != std::string::npos ? kCapExceeded : kParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kParseError;
}
