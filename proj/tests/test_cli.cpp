#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pogroup/cli.hpp"
#include "pogroup/io.hpp"
#include "pogroup/oracle.hpp"
#include "support.hpp"

using namespace pogroup;

namespace {

struct Result {
  int code;
  std::string out, err;
};

std::string data(const std::string& name) { return std::string(POGROUP_TEST_DATA) + "/" + name; }
std::string golden(const std::string& name) {
  return std::string(POGROUP_TEST_DATA) + "/../golden/cli/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  std::string path = (std::filesystem::temp_directory_path() / ("pogroup_" + name)).string();
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

} // namespace

TEST_CASE("golden outputs match in-process runs") {
  CHECK(run({"decompose-downset", "--input", data("E1.json")}).out == slurp(golden("E1_decompose.json")));
  CHECK(run({"decompose-downset", "--input", data("E2.json")}).out == slurp(golden("E2_decompose.json")));
  CHECK(run({"decompose-downset", "--input", data("hyperbola.json")}).out ==
        slurp(golden("hyperbola_decompose.json")));
  CHECK(run({"faces", "--cone", data("orthant2.json")}).out == slurp(golden("orthant2_faces.json")));
  CHECK(run({"render", "--input", data("E1.json"), "--format", "ascii"}).out == slurp(golden("E1_render.txt")));
  CHECK(run({"render", "--input", data("hyperbola.json"), "--box=-2,-40..22,440"}).out ==
        slurp(golden("hyperbola_render.svg")));
}

TEST_CASE("golden decompositions agree with the grid oracle") {
  for (const char* name : {"E1", "E2", "hyperbola"}) {
    CAPTURE(name);
    io::Json g = io::parse_text(slurp(golden(std::string(name) + "_decompose.json")));
    DownsetExpr d = io::downset_from_json(g["downset"]);
    GridBox box = oracle::margin_box(d);
    auto grid = oracle::grid_canonical_decomposition(oracle::grid_from_downset(d, box));
    REQUIRE(grid.size() == g["components"].size());
    for (std::size_t t = 0; t < grid.size(); ++t) {
      const io::Json& c = g["components"][t];
      io::Json piece_doc = {{"group", g["downset"]["group"]}, {"pieces", c["pieces"]}};
      DownsetExpr comp = io::downset_from_json(piece_doc);
      CHECK(c["label"] == face_label(grid[t].face));
      CHECK(oracle::compare(comp, grid[t].component).equal);
      CHECK(oracle::compare(io::region_from_json(c["local_support"]), grid[t].support).equal);
    }
  }
  io::Json square = io::parse_text(slurp(golden("square_cone_faces.json")));
  CHECK(square["count"] == 10);
  CHECK(square["rays"].size() == 4);
}

TEST_CASE("hyperbola render has three panels joined by unions") {
  std::string svg = slurp(golden("hyperbola_render.svg"));
  std::size_t panels = 0, unions = 0;
  for (std::size_t p = svg.find("class=\"panel\""); p != std::string::npos; p = svg.find("class=\"panel\"", p + 1))
    ++panels;
  for (std::size_t p = svg.find("&#x222A;</text>"); p != std::string::npos; p = svg.find("&#x222A;</text>", p + 1))
    ++unions;
  CHECK(panels == 3);
  CHECK(unions == 2);
  CHECK(svg.find("face x") < svg.find("face y"));
  CHECK(svg.find("face y") < svg.find("face 0"));
}

TEST_CASE("exit codes") {
  CHECK(run({"decompose-downset", "--input", data("E2.json"), "--prune"}).code == cli::kExitOk);
  CHECK(run({"check", "--input", data("E1.json")}).code == cli::kExitOk);
  CHECK(run({"check", "--input", data("hull_E2.json"), "--budget", "49"}).code == cli::kExitOk);
  CHECK(run({"localize", "--input", data("E1.json"), "--face", "y"}).code == cli::kExitOk);
  CHECK(run({"support", "--input", data("E1.json"), "--face", "0", "--local"}).code == cli::kExitOk);
  CHECK(run({"classify", "--input", data("E1.json"), "--face", "y", "--degree", "0,-2", "--box=-3..3"}).code ==
        cli::kExitOk);
  CHECK(run({"decompose-module", "--input", data("hull_E2.json")}).code == cli::kExitOk);

  Result missing = run({"decompose-downset", "--input", data("nope.json")});
  CHECK(missing.code == cli::kExitInvalid);
  CHECK(missing.err.find("nope.json") != std::string::npos);
  CHECK(run({"bogus"}).code == cli::kExitInvalid);
  CHECK(run({"localize", "--input", data("E1.json"), "--face", "q"}).code == cli::kExitInvalid);
  CHECK(run({"localize", "--input", data("E1.json"), "--face", "5"}).code == cli::kExitInvalid);
  CHECK(run({"faces", "--cone", data("orthant2.json"), "--format", "svg"}).code == cli::kExitInvalid);

  std::string bad = temp_file("bad.json", "{\"group\": {\"kind\": \"orthant-int\", \"n\": 2}, \"pieces\": [{\"apex\": [0], \"face\": []}]}");
  Result r = run({"decompose-downset", "--input", bad});
  CHECK(r.code == cli::kExitInvalid);
  CHECK(r.err.find("pieces[0].apex") != std::string::npos);
  std::remove(bad.c_str());

  CHECK(run({"check", "--input", data("hull_E2.json"), "--budget", "4"}).code == cli::kExitBudget);

  CHECK(cli::exit_code(ErrorKind::BoxTooLarge) == cli::kExitBudget);
  CHECK(cli::exit_code(ErrorKind::ConversionOverflow) == cli::kExitBudget);
  CHECK(cli::exit_code(ErrorKind::InjectivityFailure) == cli::kExitCheckFailed);
  CHECK(cli::exit_code(ErrorKind::DecompositionUnionMismatch) == cli::kExitCheckFailed);
  CHECK(cli::exit_code(ErrorKind::RankMismatch) == cli::kExitInvalid);
}

TEST_CASE("command outputs") {
  io::Json loc = io::parse_text(run({"localize", "--input", data("E1.json"), "--face", "y"}).out);
  CHECK(io::downset_from_json(loc["downset"]) == testing::downset(2, {{{0, 0}, {1}}}));

  io::Json pruned = io::parse_text(run({"decompose-downset", "--input", data("E2.json"), "--prune"}).out);
  CHECK(pruned["components"].size() == 3);
  CHECK(pruned["removed"].empty());

  io::Json cls = io::parse_text(
      run({"classify", "--input", data("E1.json"), "--face", "y", "--degree", "0,-2", "--box=-3..3"}).out);
  CHECK(cls["coprimary"] == true);

  io::Json dec = io::parse_text(run({"decompose-module", "--input", data("hull_E2.json")}).out);
  CHECK(dec["components"].size() == 3);

  Result general = run({"check", "--input", data("square_general.json")});
  CHECK(general.code == cli::kExitOk);
  CHECK(io::parse_text(general.out)["ok"] == true);

  Result ascii = run({"render", "--input", data("E2.json"), "--format", "ascii", "--box=-1..3"});
  CHECK(ascii.out.rfind("face x\n", 0) == 0);
}
