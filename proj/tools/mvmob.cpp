// mvmob — command-line front end for the multi-view mobile app toolchain.
//
// Subcommands mirror the pipeline stages: check, analyze, project, simulate,
// generate, format. Exit codes: 0 success, 1 findings, 2 parse error,
// 3 environment/IO error.

#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mvmob/mvmob.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

enum class OutputFormat { human, json };

struct CliConfig {
  fs::path projectDir = ".";
  fs::path outDir = "out";
  OutputFormat format = OutputFormat::human;
  bool failOnWarning = false;
};

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitParse = 2;
constexpr int kExitEnv = 3;

void printReport(const mvmob::ValidationReport& report, OutputFormat format) {
  if (format == OutputFormat::json) {
    std::cout << mvmob::toJson(report).dump(2) << "\n";
    return;
  }
  for (const auto& d : report.diagnostics) std::cout << d.toLine() << "\n";
  int errors = 0, warnings = 0;
  for (const auto& d : report.diagnostics) {
    if (d.severity == mvmob::Severity::error) ++errors;
    if (d.severity == mvmob::Severity::warning) ++warnings;
  }
  std::cerr << "check: " << errors << " error(s), " << warnings
            << " warning(s)\n";
}

// Shared load step: parses the project and runs the validation pipeline.
// Returns nonzero when the pipeline cannot continue.
struct LoadedAndChecked {
  mvmob::LoadedProject loaded;
  mvmob::ValidationReport report;
};

int loadAndValidate(const CliConfig& config, LoadedAndChecked& out) {
  try {
    out.loaded = mvmob::loadProject(config.projectDir);
  } catch (const mvmob::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEnv;
  }
  if (!out.loaded.parseOk()) {
    mvmob::ValidationReport parseReport;
    parseReport.diagnostics = out.loaded.parseDiagnostics;
    printReport(parseReport, config.format);
    return kExitParse;
  }
  // Parse warnings (if any) travel with the validation report.
  out.report.diagnostics = out.loaded.parseDiagnostics;
  out.report.merge(mvmob::validateProject(out.loaded.models));
  return kExitOk;
}

int requireValidProject(const CliConfig& config, LoadedAndChecked& out,
                        mvmob::Project& project) {
  if (int code = loadAndValidate(config, out)) return code;
  if (!out.report.valid()) {
    printReport(out.report, config.format);
    return kExitFindings;
  }
  auto p = out.loaded.models.toProject();
  if (!p) {
    std::cerr << "error: this command needs all four models; the manifest in '"
              << config.projectDir.string() << "' names only a subset\n";
    return kExitEnv;
  }
  project = std::move(*p);
  return kExitOk;
}

int cmdCheck(const CliConfig& config) {
  LoadedAndChecked state;
  if (int code = loadAndValidate(config, state)) return code;
  printReport(state.report, config.format);
  if (!state.report.valid()) return kExitFindings;
  if (config.failOnWarning) {
    for (const auto& d : state.report.diagnostics)
      if (d.severity == mvmob::Severity::warning) return kExitFindings;
  }
  return kExitOk;
}

int cmdAnalyze(const CliConfig& config, std::vector<std::string> names) {
  LoadedAndChecked state;
  mvmob::Project project;
  if (int code = requireValidProject(config, state, project)) return code;

  if (names.empty()) names = mvmob::analysisNames();
  std::vector<mvmob::AnalysisResult> results;
  for (const auto& name : names) {
    auto result = mvmob::runAnalysis(project, name);
    if (!result) {
      std::cerr << "error: unknown analysis '" << name << "' (available:";
      for (const auto& n : mvmob::analysisNames()) std::cerr << " " << n;
      std::cerr << ")\n";
      return kExitEnv;
    }
    results.push_back(std::move(*result));
  }

  bool anyError = false;
  json combined = json::array();
  for (const auto& result : results) {
    anyError = anyError || result.hasErrors();
    json j = mvmob::toJson(result);
    combined.push_back(j);
    try {
      mvmob::writeFile(config.outDir / "analysis" / (result.name + ".json"),
                       j.dump(2) + "\n");
    } catch (const mvmob::IoError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitEnv;
    }
  }

  if (config.format == OutputFormat::json) {
    std::cout << combined.dump(2) << "\n";
  } else {
    for (const auto& result : results) {
      std::cout << result.name << ":";
      for (const auto& [key, value] : result.summary)
        std::cout << " " << key << "=" << value;
      std::cout << "\n";
      for (const auto& f : result.findings)
        std::cout << "  " << f.element.qualified() << ": "
                  << toString(f.severity) << " " << f.message << "\n";
    }
  }
  return anyError ? kExitFindings : kExitOk;
}

int cmdProject(const CliConfig& config, const std::string& stakeholderName) {
  auto stakeholder = mvmob::stakeholderFromString(stakeholderName);
  if (!stakeholder) {
    std::cerr << "error: unknown stakeholder '" << stakeholderName
              << "' (expected one of:";
    for (auto s : mvmob::kAllStakeholders) std::cerr << " " << toString(s);
    std::cerr << ")\n";
    return kExitEnv;
  }
  LoadedAndChecked state;
  if (int code = loadAndValidate(config, state)) return code;
  if (!state.report.valid()) {
    printReport(state.report, config.format);
    return kExitFindings;
  }
  mvmob::ModelSet slice = mvmob::project(state.loaded.models, *stakeholder);
  fs::path dir = config.outDir / "slices" / std::string(toString(*stakeholder));
  try {
    auto written = mvmob::writeSlice(slice, dir);
    if (config.format == OutputFormat::json) {
      json files = json::array();
      for (const auto& path : written) files.push_back(path.string());
      std::cout << json{{"stakeholder", std::string(toString(*stakeholder))},
                        {"files", files}}
                       .dump(2)
                << "\n";
    } else {
      for (const auto& path : written) std::cout << path.string() << "\n";
    }
  } catch (const mvmob::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEnv;
  }
  return kExitOk;
}

int cmdSimulate(const CliConfig& config, const std::string& scenarioPath) {
  LoadedAndChecked state;
  mvmob::Project project;
  if (int code = requireValidProject(config, state, project)) return code;

  std::string scenarioText;
  try {
    scenarioText = mvmob::readFile(scenarioPath);
  } catch (const mvmob::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEnv;
  }

  mvmob::SimRun result;
  try {
    mvmob::Scenario scenario = mvmob::parseScenario(scenarioText);
    result = mvmob::run(project, scenario);
  } catch (const mvmob::ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const mvmob::SeedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    mvmob::writeFile(config.outDir / "trace.jsonl",
                     mvmob::traceToJsonl(result.trace));
  } catch (const mvmob::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEnv;
  }

  bool budgetExhausted = false;
  for (const auto& e : result.trace)
    budgetExhausted =
        budgetExhausted || e.kind == mvmob::TraceKind::budgetExhausted;

  json summary{{"finalView", result.state.currentView.qualified()},
               {"traceEvents", result.trace.size()},
               {"store", result.state.store.counts()},
               {"budgetExhausted", budgetExhausted}};
  if (config.format == OutputFormat::json) {
    std::cout << summary.dump(2) << "\n";
  } else {
    std::cout << "final view: " << result.state.currentView.dotted() << "\n"
              << "trace events: " << result.trace.size() << "\n";
    for (const auto& [entity, count] : result.state.store.counts())
      std::cout << "store " << entity << ": " << count << "\n";
    if (budgetExhausted) std::cout << "budget exhausted: yes\n";
  }
  return budgetExhausted ? kExitFindings : kExitOk;
}

int cmdGenerate(const CliConfig& config, std::vector<std::string> targets) {
  LoadedAndChecked state;
  mvmob::Project project;
  if (int code = requireValidProject(config, state, project)) return code;

  if (targets.empty()) targets = {"bundle", "prototype"};
  std::vector<std::string> written;
  try {
    for (const auto& target : targets) {
      if (target == "bundle") {
        fs::path path = config.outDir / "bundle.json";
        mvmob::writeFile(path, mvmob::bundleText(project));
        written.push_back(path.string());
      } else if (target == "prototype") {
        for (const auto& path :
             mvmob::generatePrototype(project, config.outDir / "prototype"))
          written.push_back(path.string());
      } else {
        std::cerr << "error: unknown generate target '" << target
                  << "' (expected bundle or prototype)\n";
        return kExitEnv;
      }
    }
  } catch (const mvmob::GenError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFindings;
  } catch (const mvmob::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEnv;
  }

  if (config.format == OutputFormat::json) {
    std::cout << json{{"files", written}}.dump(2) << "\n";
  } else {
    for (const auto& path : written) std::cout << path << "\n";
  }
  return kExitOk;
}

int cmdFormat(const CliConfig& config, bool checkOnly) {
  mvmob::ProjectManifest manifest;
  try {
    manifest = mvmob::loadManifest(config.projectDir);
  } catch (const mvmob::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEnv;
  }

  std::vector<mvmob::Diagnostic> diagnostics;
  std::vector<std::pair<fs::path, std::string>> rewrites;

  for (mvmob::ModelKind kind : mvmob::kAllModelKinds) {
    if (!manifest.has(kind)) continue;
    fs::path path = manifest.pathOf(kind);
    std::string text;
    try {
      text = mvmob::readFile(path);
    } catch (const mvmob::IoError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitEnv;
    }
    std::string file = path.filename().string();
    std::string canonical;
    std::vector<mvmob::Diagnostic> diags;
    switch (kind) {
      case mvmob::ModelKind::Navigation: {
        auto r = mvmob::parseNavigation(text, file);
        diags = r.diagnostics;
        if (r.model) canonical = mvmob::prettyPrint(*r.model);
        break;
      }
      case mvmob::ModelKind::Data: {
        auto r = mvmob::parseData(text, file);
        diags = r.diagnostics;
        if (r.model) canonical = mvmob::prettyPrint(*r.model);
        break;
      }
      case mvmob::ModelKind::UI: {
        auto r = mvmob::parseUI(text, file);
        diags = r.diagnostics;
        if (r.model) canonical = mvmob::prettyPrint(*r.model);
        break;
      }
      case mvmob::ModelKind::BusinessLogic: {
        auto r = mvmob::parseLogic(text, file);
        diags = r.diagnostics;
        if (r.model) canonical = mvmob::prettyPrint(*r.model);
        break;
      }
      case mvmob::ModelKind::Correspondence: {
        auto r = mvmob::parseCorrespondences(text, file);
        diags = r.diagnostics;
        if (r.model) canonical = mvmob::prettyPrint(*r.model);
        break;
      }
    }
    diagnostics.insert(diagnostics.end(), diags.begin(), diags.end());
    if (!mvmob::hasErrors(diags) && canonical != text)
      rewrites.emplace_back(path, canonical);
  }

  if (mvmob::hasErrors(diagnostics)) {
    for (const auto& d : diagnostics) std::cout << d.toLine() << "\n";
    return kExitParse;
  }

  for (const auto& [path, canonical] : rewrites) {
    if (checkOnly) {
      std::cout << path.string() << "\n";
    } else {
      try {
        mvmob::writeFile(path, canonical);
      } catch (const mvmob::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEnv;
      }
      std::cout << "formatted " << path.string() << "\n";
    }
  }
  return checkOnly && !rewrites.empty() ? kExitFindings : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mvmob — multi-view mobile app model toolchain"};
  app.require_subcommand(1);

  CliConfig config;
  std::string formatName = "human";
  app.add_option("--project", config.projectDir,
                 "Project directory containing mvmob.json");
  app.add_option("--out", config.outDir, "Output directory (default: out)");
  app.add_option("--format", formatName, "Output format: human or json")
      ->check(CLI::IsMember({"human", "json"}));
  app.add_flag("--fail-on-warning", config.failOnWarning,
               "Treat warnings as failures (check)");

  auto* check = app.add_subcommand("check", "Parse and validate the project");

  std::vector<std::string> analysisNames;
  auto* analyze = app.add_subcommand("analyze", "Run pre-deployment analyses");
  analyze->add_option("--analysis", analysisNames,
                      "Analyses to run (default: all)")
      ->delimiter(',');

  std::string stakeholderName;
  auto* projectCmd =
      app.add_subcommand("project", "Export a stakeholder viewpoint slice");
  projectCmd->add_option("stakeholder", stakeholderName, "Stakeholder kind")
      ->required();

  std::string scenarioPath;
  auto* simulate = app.add_subcommand("simulate", "Run a scenario script");
  simulate->add_option("scenario", scenarioPath, "Scenario file (.scn)")
      ->required();

  std::vector<std::string> generateTargets;
  auto* generate =
      app.add_subcommand("generate", "Generate the bundle and prototype");
  generate->add_option("--targets", generateTargets,
                       "Targets: bundle, prototype (default: both)")
      ->delimiter(',');

  bool checkOnly = false;
  auto* format = app.add_subcommand("format", "Rewrite DSL files canonically");
  format->add_flag("--check", checkOnly,
                   "Only report files that are not canonical");

  CLI11_PARSE(app, argc, argv);
  config.format = formatName == "json" ? OutputFormat::json : OutputFormat::human;

  if (check->parsed()) return cmdCheck(config);
  if (analyze->parsed()) return cmdAnalyze(config, analysisNames);
  if (projectCmd->parsed()) return cmdProject(config, stakeholderName);
  if (simulate->parsed()) return cmdSimulate(config, scenarioPath);
  if (generate->parsed()) return cmdGenerate(config, generateTargets);
  if (format->parsed()) return cmdFormat(config, checkOnly);
  return kExitEnv;
}
