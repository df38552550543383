// arena: play, verify, render and serve planar-arena games.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "planar_arena/acceptance.hpp"
#include "planar_arena/http_server.hpp"
#include "planar_arena/svg.hpp"

using namespace parena;

namespace {

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::malformed, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(errc::malformed, path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) fail(errc::invalid_parameter, "cannot write " + path);
  out << text;
}

struct RunArgs {
  std::string game = "edge";
  int n = 8;
  std::string bias = "1:1";
  std::string builder = "random", spoiler = "random";
  std::uint64_t seed = 1;
  std::string first = "builder";
  int nominated = 0;
  std::string h;
  int target_n = 10;
  double epsilon = 0;
  int budget = kPackingBudget;
  bool strict = false;
  std::string out;
};

int run(const RunArgs& a) {
  const Player first = player_from_string(a.first);
  json transcript;
  if (a.game == "edge") {
    EdgeMatchConfig c;
    c.n = a.n;
    c.bias = BiasSchedule::parse(a.bias, first);
    c.builder = a.builder;
    c.spoiler = a.spoiler;
    c.seed = a.seed;
    c.nominated = a.nominated;
    c.strict = a.strict;
    auto m = run_edge_match(c);
    transcript = std::move(m.transcript);
  } else if (a.game == "packing") {
    PackingMatchConfig c;
    c.builder = a.builder;
    c.spoiler = a.spoiler;
    c.target = {a.h, a.target_n, a.epsilon};
    c.first = first;
    c.seed = a.seed;
    c.budget = a.budget;
    c.strict = a.strict;
    auto m = run_packing_match(c);
    transcript = std::move(m.transcript);
  } else {
    fail(errc::invalid_parameter, "unknown game '" + a.game + "' (edge or packing)");
  }
  std::cerr << "status " << transcript["status"].get<std::string>() << ", " << transcript["moves"].size()
            << " moves\nverdict " << transcript["verdict"].dump() << "\n";
  write_text(a.out, transcript.dump(2) + "\n");
  return transcript["status"] == "aborted" ? 2 : 0;
}

int verify(const std::string& path) {
  VerifyReport r = verify_transcript(read_json(path));
  std::cout << (r.ok ? "OK" : "FAIL") << " " << path << "\n";
  for (const auto& p : r.problems) std::cout << "  " << p << "\n";
  std::cout << "verdict " << r.verdict.dump() << "\n";
  return r.ok ? 0 : 1;
}

int render(const std::string& path, long ply, const std::string& svg) {
  const json t = read_json(path);
  const std::string game = t.value("game", "");
  if (game == "edge") write_text(svg, render_edge_svg(replay_edge_transcript(t, ply)));
  else if (game == "packing") write_text(svg, render_packing_svg(replay_packing_transcript(t, ply).packing()));
  else fail(errc::malformed, "unknown game kind '" + game + "'");
  return 0;
}

int bench(const std::vector<int>& only) {
  AcceptanceOptions o;
  o.only = {only.begin(), only.end()};
  o.progress = &std::cerr;
  return acceptance_exit_code(run_acceptance(o, std::cout));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar-arena: Builder/Spoiler games on planar graphs and circle packings"};
  app.require_subcommand(1);

  RunArgs ra;
  auto* run_cmd = app.add_subcommand("run", "play one seeded match and write its transcript");
  run_cmd->add_option("--game", ra.game, "edge or packing")->check(CLI::IsMember({"edge", "packing"}));
  run_cmd->add_option("--n", ra.n, "points in the edge game");
  run_cmd->add_option("--bias", ra.bias, "edge-game bias b:s");
  run_cmd->add_option("--builder", ra.builder, "Builder strategy");
  run_cmd->add_option("--spoiler", ra.spoiler, "Spoiler strategy");
  run_cmd->add_option("--seed", ra.seed);
  run_cmd->add_option("--first", ra.first, "who moves first")->check(CLI::IsMember({"builder", "spoiler"}));
  run_cmd->add_option("--nominated", ra.nominated, "vertex builder-degree grows");
  run_cmd->add_option("--target", ra.h, "packing target graph H: k4, octahedron, prism, k3");
  run_cmd->add_option("--target-n", ra.target_n, "network size for builder-apollonian");
  run_cmd->add_option("--epsilon", ra.epsilon, "packing bias (1+eps):1; 0 plays 1:1");
  run_cmd->add_option("--budget", ra.budget, "packing moves per side");
  run_cmd->add_flag("--strict", ra.strict, "abort instead of falling back");
  run_cmd->add_option("--out", ra.out, "transcript path, '-' for stdout")->default_val("-");

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "replay a transcript and recompute its verdict");
  verify_cmd->add_option("transcript", verify_path)->required();

  std::string render_path, svg_path = "-";
  long ply = -1;
  auto* render_cmd = app.add_subcommand("render", "draw a transcript position as SVG");
  render_cmd->add_option("transcript", render_path)->required();
  render_cmd->add_option("--ply", ply, "moves to replay, all by default");
  render_cmd->add_option("--svg", svg_path, "output path, '-' for stdout");

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve_cmd = app.add_subcommand("serve", "JSON game server");
  serve_cmd->add_option("--port", port)->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--host", host);

  std::vector<int> only;
  auto* bench_cmd = app.add_subcommand("bench", "run the acceptance suite");
  bench_cmd->add_option("--only", only, "criterion ids")->delimiter(',')->check(CLI::Range(1, 8));

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run_cmd) return run(ra);
    if (*verify_cmd) return verify(verify_path);
    if (*render_cmd) return render(render_path, ply, svg_path);
    if (*serve_cmd) {
      std::cerr << "listening on " << host << ":" << port << "\n";
      return serve(host, port) ? 0 : 1;
    }
    if (*bench_cmd) return bench(only);
  } catch (const arena_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
