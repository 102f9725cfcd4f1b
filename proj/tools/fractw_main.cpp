#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fractw/acceptance.hpp"
#include "fractw/alice.hpp"
#include "fractw/bob.hpp"
#include "fractw/bounds.hpp"
#include "fractw/bridge.hpp"
#include "fractw/chif.hpp"
#include "fractw/clique.hpp"
#include "fractw/dimacs.hpp"
#include "fractw/error.hpp"
#include "fractw/generators.hpp"
#include "fractw/transcript.hpp"
#include "fractw/universal.hpp"

using namespace fractw;

namespace {

// 0 ok / 2 usage / 3 forfeit / 4 guard.
int exit_for(Errc c) {
  switch (c) {
    case Errc::claim_violated:
    case Errc::forfeit:
      return 3;
    case Errc::size_guard:
    case Errc::too_large:
    case Errc::clique_too_large:
      return 4;
    default:
      return 2;
  }
}

std::string show(const Rational& r) { return rat_str(r) + " (" + std::to_string(rat_approx(r)) + ")"; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(Errc::io_error, "cannot open " + path + " for writing");
  out << text;
  if (!out) fail(Errc::io_error, "write to " + path + " failed");
}

struct PlayArgs {
  int t = 0, omega = 0;
  std::string alice = "greedy", bob = "random";
  unsigned long long seed = 1;
  int moves = 10;
  std::string out;
};

int cmd_play(const PlayArgs& a) {
  GameConfig cfg{a.t, a.omega};
  cfg.validate();

  GreedyAlice greedy;
  RandomAlice random(a.seed + 1000003);
  AliceStrategy* alice = nullptr;
  if (a.alice == "greedy")
    alice = &greedy;
  else if (a.alice == "random")
    alice = &random;
  else
    fail(Errc::bad_params, "unknown alice strategy '" + a.alice + "'");

  std::cout << "game: t=" << a.t << " omega=" << a.omega << " alice=" << a.alice
            << " bob=" << a.bob << "\n";
  if (a.bob == "random") {
    RandomBob bob(a.seed, a.moves);
    GameRecord rec = run_game(cfg, *alice, bob, true);
    std::cout << "moves: " << rec.moves.size() << "\n";
    std::cout << "total measure: " << show(rec.total) << "\n";
    std::cout << "greedy window: " << show(cfg.greedy_window()) << "\n";
    if (!a.out.empty()) write_transcript_file(rec, a.out);
  } else if (a.bob == "cor1" || a.bob == "thm3") {
    AdversaryPlan plan = a.bob == "cor1" ? plan_corollary1(a.t, a.omega)
                                         : plan_theorem3(a.t, a.omega);
    ForcedBoundReport rep = execute_adversary(plan, *alice, true);
    std::cout << "moves: " << rep.record.moves.size() << "\n";
    std::cout << "total measure: " << show(rep.record.total) << "\n";
    std::cout << "greedy window: " << show(cfg.greedy_window()) << "\n";
    std::cout << "forced clique measure: " << show(rep.union_measure) << "\n";
    std::cout << "guaranteed floor: " << show(rep.guaranteed) << "\n";
    if (!a.out.empty()) write_transcript_file(rep.record, a.out);
  } else {
    fail(Errc::bad_params, "unknown bob strategy '" + a.bob + "'");
  }
  return 0;
}

struct ConstructArgs {
  int t = 0, omega = 0;
  std::string plan = "cor1";
  std::string out = "construction";
};

int cmd_construct(const ConstructArgs& a) {
  AdversaryPlan plan;
  if (a.plan == "cor1")
    plan = plan_corollary1(a.t, a.omega);
  else if (a.plan == "thm3")
    plan = plan_theorem3(a.t, a.omega);
  else
    fail(Errc::bad_params, "unknown plan '" + a.plan + "'");
  GreedyAlice alice;
  ForcedBoundReport rep = execute_adversary(plan, alice, true);

  RBGraph blue = rep.record.graph.blue_subgraph();
  const EliminationWitness& w = rep.record.witness;
  if (auto err = verify_witness(blue, w))
    fail(Errc::witness_invalid, "emitted witness failed validation: " + *err);

  std::string graph_path = a.out + ".dimacs";
  std::string witness_path = a.out + ".witness.json";
  write_dimacs_rb_file(blue, graph_path);
  write_witness_file(w, witness_path);

  std::cout << "graph: " << graph_path << " (" << blue.vertex_count() << " vertices, "
            << blue.edge_count() << " blue edges)\n";
  std::cout << "witness: " << witness_path << " (width " << w.width << ")\n";
  if (blue.vertex_count() <= 64)
    std::cout << "blue clique number: " << clique_number(blue, CliqueScope::BlueOnly) << "\n";
  std::cout << "guaranteed floor: " << show(rep.guaranteed) << "\n";
  std::cout << "forced clique measure vs greedy: " << show(rep.union_measure) << "\n";
  return 0;
}

struct ChifArgs {
  std::string path;
  std::string cert;
};

int cmd_chif(const ChifArgs& a) {
  RBGraph g = read_dimacs_rb_file(a.path);
  ChifCertificate cert = chif_exact(g);
  std::cout << rat_str(cert.value) << "\n";
  if (!a.cert.empty()) write_text(a.cert, certificate_to_json(cert));
  return 0;
}

struct BoundsArgs {
  int tmax = 12;
  std::string format = "csv";
  std::string out;
  bool eq1 = false;
  bool cor2 = false;
  int t = 100;
  std::string c = "1/10";
};

int cmd_bounds(const BoundsArgs& a) {
  if (a.eq1) {
    int omega = (a.t + 2) / 2;
    std::cout << "t: " << a.t << "\n";
    std::cout << "main term t - ln t: " << eq1_main(a.t) << "\n";
    std::cout << "floor at omega=" << omega << ": " << show(lb_corollary1(a.t, omega)) << "\n";
    return 0;
  }
  if (a.cor2) {
    Rational c = rat_parse(a.c);
    int omega = cor2_omega(a.t, c);
    double main = cor2_main(a.t, c);
    Rational exact = cor2_exact(a.t, c);
    std::cout << "t: " << a.t << " c: " << rat_str(c) << " omega: " << omega << "\n";
    std::cout << "main term: " << main << "\n";
    std::cout << "exact floor: " << show(exact) << "\n";
    std::cout << "gap: " << rat_approx(exact) - main << "\n";
    return 0;
  }
  if (a.format != "json" && a.format != "csv")
    fail(Errc::bad_params, "unknown format '" + a.format + "'");
  std::vector<BoundRow> rows = bound_table(a.tmax);
  std::string text = a.format == "json" ? bound_table_json(rows) : bound_table_csv(rows);
  if (a.out.empty())
    std::cout << text;
  else
    write_text(a.out, text);
  return 0;
}

struct VerifyArgs {
  std::string suite = "all";
  std::string scale = "smoke";
  std::string report;
};

int cmd_verify(const VerifyArgs& a) {
  Scale scale;
  if (a.scale == "smoke")
    scale = Scale::Smoke;
  else if (a.scale == "desk")
    scale = Scale::Desk;
  else
    fail(Errc::bad_params, "unknown scale '" + a.scale + "'");
  std::vector<CriterionResult> results = run_acceptance(scale, suite_criteria(a.suite));
  bool all_pass = true;
  for (const CriterionResult& r : results) {
    std::cout << format_result(r) << "\n";
    all_pass &= r.pass;
  }
  if (!a.report.empty()) {
    nlohmann::json arr = nlohmann::json::array();
    for (const CriterionResult& r : results) {
      nlohmann::json row;
      row["id"] = r.id;
      row["name"] = r.name;
      row["pass"] = r.pass;
      row["detail"] = r.detail;
      row["seconds"] = r.seconds;
      arr.push_back(std::move(row));
    }
    write_text(a.report, arr.dump(2) + "\n");
  }
  return all_pass ? 0 : 1;
}

struct UniversalArgs {
  int t = 2, omega = 2, rounds = 1;
  std::string out;
};

int cmd_universal(const UniversalArgs& a) {
  UniversalBoard board = materialize_universal(a.t, a.omega, a.rounds);
  std::cout << "vertices: " << board.graph.vertex_count() << "\n";
  std::cout << "edges: " << board.graph.edge_count() << "\n";
  for (std::size_t r = 0; r < board.added_per_round.size(); ++r)
    std::cout << "round " << r + 1 << ": +" << board.added_per_round[r] << "\n";
  if (!a.out.empty()) {
    write_dimacs_rb_file(board.graph, a.out + ".dimacs");
    write_witness_file(board.witness, a.out + ".witness.json");
    std::cout << "wrote " << a.out << ".dimacs and " << a.out << ".witness.json\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for the online red/blue colouring game on partial t-trees"};
  app.require_subcommand(1);
  int rc = 0;

  PlayArgs play;
  auto* play_cmd = app.add_subcommand("play", "play a full game and report the measure used");
  play_cmd->add_option("-t", play.t, "treewidth parameter")->required();
  play_cmd->add_option("-w,--omega", play.omega, "blue clique bound")->required();
  play_cmd->add_option("--alice", play.alice, "alice strategy: greedy|random");
  play_cmd->add_option("--bob", play.bob, "bob strategy: random|cor1|thm3");
  play_cmd->add_option("--seed", play.seed, "seed for random strategies");
  play_cmd->add_option("--moves", play.moves, "moves for the random bob");
  play_cmd->add_option("-o,--out", play.out, "write the transcript JSONL here");
  play_cmd->callback([&] { rc = cmd_play(play); });

  ConstructArgs construct;
  auto* con_cmd =
      app.add_subcommand("construct", "emit the adversary's blue graph with its witness");
  con_cmd->add_option("-t", construct.t, "treewidth parameter")->required();
  con_cmd->add_option("-w,--omega", construct.omega, "blue clique bound")->required();
  con_cmd->add_option("--plan", construct.plan, "construction: cor1|thm3");
  con_cmd->add_option("-o,--out", construct.out, "output base name");
  con_cmd->callback([&] { rc = cmd_construct(construct); });

  ChifArgs chif;
  auto* chif_cmd =
      app.add_subcommand("chif", "exact fractional chromatic number of a DIMACS graph");
  chif_cmd->add_option("path", chif.path, "DIMACS file")->required();
  chif_cmd->add_option("--cert", chif.cert, "write the optimality certificate JSON here");
  chif_cmd->callback([&] { rc = cmd_chif(chif); });

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bound tables and asymptotics");
  bounds_cmd->add_option("--tmax", bounds.tmax, "largest t in the table");
  bounds_cmd->add_option("--format", bounds.format, "csv|json");
  bounds_cmd->add_option("-o,--out", bounds.out, "write the table here instead of stdout");
  bounds_cmd->add_flag("--eq1", bounds.eq1, "print the t - ln t comparison");
  bounds_cmd->add_flag("--cor2", bounds.cor2, "print the asymptotic-vs-exact comparison");
  bounds_cmd->add_option("-t", bounds.t, "t for --eq1/--cor2");
  bounds_cmd->add_option("-c", bounds.c, "rational c for --cor2, e.g. 1/10");
  bounds_cmd->callback([&] { rc = cmd_bounds(bounds); });

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance criteria");
  verify_cmd->add_option("--suite", verify.suite,
                         "all|game|adversary|oracle|bounds|universal|replay");
  verify_cmd->add_option("--scale", verify.scale, "smoke|desk");
  verify_cmd->add_option("--report", verify.report, "write a JSON report here");
  verify_cmd->callback([&] { rc = cmd_verify(verify); });

  UniversalArgs universal;
  auto* uni_cmd =
      app.add_subcommand("universal", "materialise every reachable position for a few rounds");
  uni_cmd->add_option("-t", universal.t, "treewidth parameter")->required();
  uni_cmd->add_option("-w,--omega", universal.omega, "blue clique bound")->required();
  uni_cmd->add_option("-N,--rounds", universal.rounds, "breadth-first rounds")->required();
  uni_cmd->add_option("-o,--out", universal.out, "output base name");
  uni_cmd->callback([&] { rc = cmd_universal(universal); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
