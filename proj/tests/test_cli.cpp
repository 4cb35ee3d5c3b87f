#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "mvmob/project_io.hpp"
#include "support/fixtures.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const char* kCli = MVMOB_CLI_PATH;

struct CliResult {
  int exitCode = -1;
  std::string out;
  std::string err;
};

CliResult runCli(const std::string& args) {
  static int counter = 0;
  fs::path outFile = fs::temp_directory_path() /
                     ("mvmob_cli_out_" + std::to_string(++counter));
  fs::path errFile = fs::temp_directory_path() /
                     ("mvmob_cli_err_" + std::to_string(counter));
  std::string command = std::string(kCli) + " " + args + " > " +
                        outFile.string() + " 2> " + errFile.string();
  int status = std::system(command.c_str());
  CliResult result;
  result.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = mvmob::readFile(outFile);
  result.err = mvmob::readFile(errFile);
  fs::remove(outFile);
  fs::remove(errFile);
  return result;
}

fs::path cityguideDir() { return testsupport::testDataDir() / "cityguide"; }

fs::path freshDir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void writeProject(const fs::path& dir,
                  const std::map<std::string, std::string>& files) {
  json manifest{{"name", "Temp"}};
  for (const auto& [name, content] : files) {
    mvmob::writeFile(dir / name, content);
    if (name.ends_with(".nav")) manifest["navigation"] = name;
    if (name.ends_with(".data")) manifest["data"] = name;
    if (name.ends_with(".ui")) manifest["ui"] = name;
    if (name.ends_with(".bl")) manifest["logic"] = name;
    if (name.ends_with(".corr")) manifest["correspondences"] = name;
  }
  mvmob::writeFile(dir / "mvmob.json", manifest.dump(2) + "\n");
}

// Minimal complete project: one entry view, empty other models.
std::map<std::string, std::string> minimalFiles() {
  return {{"t.nav", "view home \"Home\" entry\n"},
          {"t.data", ""},
          {"t.ui", ""},
          {"t.bl", ""},
          {"t.corr", ""}};
}

}  // namespace

TEST_CASE("cli: check on CityGuide exits 0") {
  auto result = runCli("--project " + cityguideDir().string() + " check");
  CHECK(result.exitCode == 0);
}

TEST_CASE("cli: check reports VAL100 and exits 1 on a dangling flow target") {
  fs::path dir = freshDir("mvmob_cli_dangling");
  auto files = minimalFiles();
  files["t.nav"] = "view home \"Home\" entry\nflow f: home -> ghost\n";
  writeProject(dir, files);
  auto result = runCli("--project " + dir.string() + " check");
  CHECK(result.exitCode == 1);
  CHECK(result.out.find("VAL100") != std::string::npos);
}

TEST_CASE("cli: missing manifest exits 3") {
  fs::path dir = freshDir("mvmob_cli_nomanifest");
  auto result = runCli("--project " + dir.string() + " check");
  CHECK(result.exitCode == 3);
}

TEST_CASE("cli: parse failure exits 2") {
  fs::path dir = freshDir("mvmob_cli_badparse");
  auto files = minimalFiles();
  files["t.nav"] = "view 9bad \"Nope\" entry\n";
  writeProject(dir, files);
  auto result = runCli("--project " + dir.string() + " check");
  CHECK(result.exitCode == 2);
  CHECK(result.out.find("PAR") != std::string::npos);
}

TEST_CASE("cli: json check output parses and matches the schema") {
  auto result = runCli("--project " + cityguideDir().string() +
                       " --format json check");
  CHECK(result.exitCode == 0);
  json j = json::parse(result.out);
  CHECK(j.at("valid") == true);
  CHECK(j.at("diagnostics").is_array());
}

TEST_CASE("cli: json output is emitted for parse failures too") {
  fs::path dir = freshDir("mvmob_cli_badparse_json");
  auto files = minimalFiles();
  files["t.nav"] = "view 9bad \"Nope\" entry\n";
  writeProject(dir, files);
  auto result = runCli("--project " + dir.string() + " --format json check");
  CHECK(result.exitCode == 2);
  json j = json::parse(result.out);
  CHECK(j.at("valid") == false);
  CHECK_FALSE(j.at("diagnostics").empty());
}

TEST_CASE("cli: fail-on-warning turns warnings into exit 1") {
  fs::path dir = freshDir("mvmob_cli_warn");
  auto files = minimalFiles();
  // A container with no ViewMainContainer correspondence: VAL202 warning.
  files["t.ui"] = "plainContainer root {}\n";
  writeProject(dir, files);
  CHECK(runCli("--project " + dir.string() + " check").exitCode == 0);
  CHECK(runCli("--project " + dir.string() + " --fail-on-warning check")
            .exitCode == 1);
}

TEST_CASE("cli: analyze writes one report per analysis and exits 0 on CityGuide") {
  fs::path out = freshDir("mvmob_cli_analyze_out");
  auto result = runCli("--project " + cityguideDir().string() + " --out " +
                       out.string() + " analyze");
  CHECK(result.exitCode == 0);
  for (const std::string name :
       {"reachability", "dead-flows", "event-coverage", "guarded-cycles"}) {
    fs::path file = out / "analysis" / (name + ".json");
    INFO(file.string());
    REQUIRE(fs::exists(file));
    json j = json::parse(mvmob::readFile(file));
    CHECK(j.at("name") == name);
    CHECK(j.contains("summary"));
    CHECK(j.at("findings").is_array());
  }
}

TEST_CASE("cli: analysis reports match the frozen golden snapshots") {
  fs::path out = freshDir("mvmob_cli_analyze_golden");
  auto result = runCli("--project " + cityguideDir().string() + " --out " +
                       out.string() + " analyze");
  CHECK(result.exitCode == 0);
  for (const std::string name :
       {"reachability", "dead-flows", "event-coverage", "guarded-cycles"}) {
    INFO(name);
    CHECK(mvmob::readFile(out / "analysis" / (name + ".json")) ==
          mvmob::readFile(testsupport::testDataDir() / "cityguide" / "golden" /
                          (name + ".json")));
  }
}

TEST_CASE("cli: analyze exits 1 when a view is unreachable") {
  fs::path dir = freshDir("mvmob_cli_island");
  auto files = minimalFiles();
  files["t.nav"] = "view home \"Home\" entry\nview island \"I\"\n";
  writeProject(dir, files);
  fs::path out = freshDir("mvmob_cli_island_out");
  auto result = runCli("--project " + dir.string() + " --out " + out.string() +
                       " analyze --analysis reachability");
  CHECK(result.exitCode == 1);
}

TEST_CASE("cli: project user writes exactly one .ui file plus manifest") {
  fs::path out = freshDir("mvmob_cli_slice_out");
  auto result = runCli("--project " + cityguideDir().string() + " --out " +
                       out.string() + " project user");
  CHECK(result.exitCode == 0);
  fs::path dir = out / "slices" / "user";
  REQUIRE(fs::exists(dir / "mvmob.json"));
  int uiFiles = 0, navFiles = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".ui") ++uiFiles;
    if (entry.path().extension() == ".nav") ++navFiles;
  }
  CHECK(uiFiles == 1);
  CHECK(navFiles == 0);

  // The slice itself passes check.
  CHECK(runCli("--project " + dir.string() + " check").exitCode == 0);
}

TEST_CASE("cli: appDeveloper slice file set equals the source file set") {
  fs::path out = freshDir("mvmob_cli_slice_full");
  auto result = runCli("--project " + cityguideDir().string() + " --out " +
                       out.string() + " project appDeveloper");
  CHECK(result.exitCode == 0);
  fs::path dir = out / "slices" / "appDeveloper";
  std::set<std::string> names;
  for (const auto& entry : fs::directory_iterator(dir))
    names.insert(entry.path().filename().string());
  CHECK(names == std::set<std::string>{"cityguide.nav", "cityguide.data",
                                       "cityguide.ui", "cityguide.bl",
                                       "cityguide.corr", "mvmob.json"});
  // Sources are canonical, so the exported models are byte-identical.
  for (const auto& name : {"cityguide.nav", "cityguide.data", "cityguide.ui",
                           "cityguide.bl", "cityguide.corr"})
    CHECK(mvmob::readFile(dir / name) ==
          mvmob::readFile(cityguideDir() / name));

  CHECK(runCli("--project " + dir.string() + " check").exitCode == 0);
}

TEST_CASE("cli: every stakeholder slice passes check") {
  fs::path out = freshDir("mvmob_cli_slice_all");
  for (mvmob::Stakeholder s : mvmob::kAllStakeholders) {
    std::string name(toString(s));
    auto result = runCli("--project " + cityguideDir().string() + " --out " +
                         out.string() + " project " + name);
    INFO(name);
    CHECK(result.exitCode == 0);
    CHECK(runCli("--project " + (out / "slices" / name).string() + " check")
              .exitCode == 0);
  }
}

TEST_CASE("cli: unknown stakeholder exits 3") {
  auto result =
      runCli("--project " + cityguideDir().string() + " project nobody");
  CHECK(result.exitCode == 3);
}

TEST_CASE("cli: simulate writes the trace and reports the final view") {
  fs::path out = freshDir("mvmob_cli_sim_out");
  auto result = runCli("--project " + cityguideDir().string() + " --out " +
                       out.string() + " --format json simulate " +
                       (cityguideDir() / "scenarios" / "browse-and-detail.scn")
                           .string());
  CHECK(result.exitCode == 0);
  json summary = json::parse(result.out);
  CHECK(summary.at("finalView") == "Navigation:cityDetail");
  CHECK(summary.at("budgetExhausted") == false);
  REQUIRE(fs::exists(out / "trace.jsonl"));
  // Every line of the trace is standalone JSON.
  std::ifstream in(out / "trace.jsonl");
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    json event = json::parse(line);
    CHECK(event.contains("step"));
    CHECK(event.contains("kind"));
    CHECK(event.contains("subject"));
  }
  CHECK(lines == summary.at("traceEvents").get<int>());
}

TEST_CASE("cli: simulate exits 1 when the budget is exhausted") {
  fs::path dir = freshDir("mvmob_cli_spin");
  auto files = minimalFiles();
  files["t.bl"] =
      "rule spin on app go do {\n"
      "  a: ui UI:root.x refresh -> b\n"
      "  b: ui UI:root.x refresh -> a\n"
      "}\n";
  files["t.ui"] = "plainContainer root {\n  label x\n}\n";
  writeProject(dir, files);
  mvmob::writeFile(dir / "spin.scn",
                   R"({"stimuli": [{"event": {"kind": "applicationSpecific", "name": "go"}}]})");
  fs::path out = freshDir("mvmob_cli_spin_out");
  auto result = runCli("--project " + dir.string() + " --out " + out.string() +
                       " simulate " + (dir / "spin.scn").string());
  CHECK(result.exitCode == 1);
}

TEST_CASE("cli: malformed scenario exits 2, missing scenario exits 3") {
  fs::path dir = freshDir("mvmob_cli_scn");
  writeProject(dir, minimalFiles());
  mvmob::writeFile(dir / "bad.scn", "{nope");
  CHECK(runCli("--project " + dir.string() + " simulate " +
               (dir / "bad.scn").string())
            .exitCode == 2);
  CHECK(runCli("--project " + dir.string() + " simulate " +
               (dir / "absent.scn").string())
            .exitCode == 3);
}

TEST_CASE("cli: generate writes the bundle and prototype") {
  fs::path out = freshDir("mvmob_cli_gen_out");
  auto result = runCli("--project " + cityguideDir().string() + " --out " +
                       out.string() + " generate");
  CHECK(result.exitCode == 0);
  REQUIRE(fs::exists(out / "bundle.json"));
  CHECK(fs::exists(out / "prototype" / "index.html"));
  CHECK(fs::exists(out / "prototype" / "home.html"));
  CHECK(fs::exists(out / "prototype" / "styles.css"));
  json bundle = json::parse(mvmob::readFile(out / "bundle.json"));
  CHECK(bundle.at("name") == "CityGuide");
}

TEST_CASE("cli: format --check is clean on canonical sources") {
  auto result =
      runCli("--project " + cityguideDir().string() + " format --check");
  CHECK(result.exitCode == 0);
  CHECK(result.out.empty());
}

TEST_CASE("cli: format rewrites to canonical form and is a fixpoint") {
  fs::path dir = freshDir("mvmob_cli_fmt");
  auto files = minimalFiles();
  files["t.nav"] = "view   home   \"Home\"   entry\n\n\nflow f :home->home\n";
  writeProject(dir, files);

  CHECK(runCli("--project " + dir.string() + " format --check").exitCode == 1);
  CHECK(runCli("--project " + dir.string() + " format").exitCode == 0);
  CHECK(mvmob::readFile(dir / "t.nav") ==
        "view home \"Home\" entry\n\nflow f: home -> home\n");
  // Formatting again changes nothing.
  auto second = runCli("--project " + dir.string() + " format");
  CHECK(second.exitCode == 0);
  CHECK(second.out.empty());
  CHECK(runCli("--project " + dir.string() + " format --check").exitCode == 0);
}

TEST_CASE("cli: format on unparsable sources exits 2") {
  fs::path dir = freshDir("mvmob_cli_fmt_bad");
  auto files = minimalFiles();
  files["t.data"] = "entity {ates";
  writeProject(dir, files);
  CHECK(runCli("--project " + dir.string() + " format").exitCode == 2);
}
