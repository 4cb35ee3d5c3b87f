// Acceptance suite: one check per acceptance criterion, each printed as a
// single PASS/FAIL line with its runtime. The process exits nonzero if any
// criterion fails. Run it via ctest (test name "acceptance") or directly.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "mvmob/mvmob.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace fs = std::filesystem;
using namespace mvmob;
namespace ts = testsupport;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool condition, const std::string& message) {
  if (!condition) throw Failure(message);
}

// ---------------------------------------------------------------------------
// 1. Table fidelity: the stakeholder/viewpoint matrix, transcribed row by row.

void criterionTableFidelity() {
  struct Row {
    Stakeholder who;
    ViewpointSet expected;
  };
  const std::vector<Row> table = {
      {Stakeholder::uiDesigner, {true, true, true, true}},
      {Stakeholder::appDeveloper, {true, true, true, true}},
      {Stakeholder::backEndDeveloper, {false, true, false, true}},
      {Stakeholder::informationArchitect, {true, true, true, false}},
      {Stakeholder::contentProducer, {false, true, false, false}},
      {Stakeholder::user, {false, false, true, false}},
      {Stakeholder::customer, {true, false, true, false}},
      {Stakeholder::projectManager, {true, false, true, false}},
  };
  require(table.size() == kAllStakeholders.size(), "stakeholder count");
  int checkmarks = 0;
  for (const Row& row : table) {
    ViewpointSet actual = viewpointsOf(row.who);
    require(actual == row.expected,
            std::string("row mismatch for ") + std::string(toString(row.who)));
    checkmarks += actual.count();
  }
  require(checkmarks == 19, "the matrix carries 19 access grants");
}

// ---------------------------------------------------------------------------
// 2. Round-trip: 300 random well-formed models per DSL.

void criterionRoundTrip() {
  ts::Rng rng(300300);
  for (int i = 0; i < 300; ++i) {
    NavigationModel nav = ts::randNavigationModel(rng);
    auto navBack = parseNavigation(prettyPrint(nav), "rt.nav");
    require(navBack.model && *navBack.model == nav,
            "navigation round-trip failed at iteration " + std::to_string(i));

    DataModel data = ts::randDataModel(rng);
    auto dataBack = parseData(prettyPrint(data), "rt.data");
    require(dataBack.model && *dataBack.model == data,
            "data round-trip failed at iteration " + std::to_string(i));

    UIModel ui = ts::randUIModel(rng);
    auto uiBack = parseUI(prettyPrint(ui), "rt.ui");
    require(uiBack.model && *uiBack.model == ui,
            "ui round-trip failed at iteration " + std::to_string(i));

    BusinessLogicModel logic = ts::randLogicModel(rng);
    auto logicBack = parseLogic(prettyPrint(logic), "rt.bl");
    require(logicBack.model && *logicBack.model == logic,
            "logic round-trip failed at iteration " + std::to_string(i));

    auto corrs = ts::randCorrespondences(rng);
    auto corrBack = parseCorrespondences(prettyPrint(corrs), "rt.corr");
    require(corrBack.model && *corrBack.model == corrs,
            "correspondence round-trip failed at iteration " + std::to_string(i));
  }
}

// ---------------------------------------------------------------------------
// 3. Expression oracle: 200 random expressions over 3 boolean variables,
// all 8 environments, against the brute-force evaluator.

void criterionExpressionOracle() {
  ts::Rng rng(800813);
  const std::vector<std::string> vars = {"a", "b", "c"};
  for (int i = 0; i < 200; ++i) {
    Expr e = ts::randBoolExpr(rng, 3, vars);
    for (int bits = 0; bits < 8; ++bits) {
      Environment env;
      std::map<std::string, bool> oracleEnv;
      for (int v = 0; v < 3; ++v) {
        bool value = bits & (1 << v);
        env.bindings[vars[size_t(v)]] = Value(value);
        oracleEnv[vars[size_t(v)]] = value;
      }
      bool mine = evaluate(e, env);
      bool oracle = ts::oracleEval(e, oracleEnv);
      require(mine == oracle, "mismatch on " + printExpr(e) + " under env " +
                                  std::to_string(bits));
    }
  }
}

// ---------------------------------------------------------------------------
// 4. Reachability oracle: 200 random navigation graphs (<=10 views,
// <=25 flows) against exhaustive path enumeration.

void criterionReachabilityOracle() {
  ts::Rng rng(160160);
  for (int i = 0; i < 200; ++i) {
    NavigationModel nav;
    int viewCount = ts::randInt(rng, 1, 10);
    for (int v = 0; v < viewCount; ++v) {
      View view;
      view.name = "v" + std::to_string(v);
      view.id = makeId(ModelKind::Navigation, {view.name});
      view.title = view.name;
      nav.views.push_back(std::move(view));
    }
    nav.entryView = nav.views[size_t(ts::randInt(rng, 0, viewCount - 1))].id;
    int flowCount = ts::randInt(rng, 0, 25);
    for (int f = 0; f < flowCount; ++f) {
      NavigationFlow flow;
      flow.id = makeId(ModelKind::Navigation, {"f" + std::to_string(f)});
      flow.source = ts::pick(rng, nav.views).id;
      flow.target = ts::pick(rng, nav.views).id;
      nav.flows.push_back(std::move(flow));
    }

    Project p;
    p.name = "r";
    p.navigation = nav;
    AnalysisResult result = reachability(p);

    std::set<ElementId> unreachable;
    for (const auto& finding : result.findings)
      unreachable.insert(finding.element);
    std::set<ElementId> reachable;
    for (const auto& view : nav.views)
      if (!unreachable.count(view.id)) reachable.insert(view.id);

    require(reachable == ts::oracleReachable(nav),
            "reachability mismatch at iteration " + std::to_string(i));
  }
}

// ---------------------------------------------------------------------------
// 5. Correspondence typing: per ctype one passing and two failing fixtures,
// flagging exactly the expected VAL2xx code.

void criterionCorrespondenceTyping() {
  using CT = CorrespondenceType;
  Project base = ts::corrPlayground();

  auto errorCodes = [](const ValidationReport& report) {
    std::set<std::string> codes;
    for (const auto& d : report.diagnostics)
      if (d.severity == Severity::error) codes.insert(d.code);
    return codes;
  };
  auto withExtra = [&](Correspondence c) {
    Project p = base;
    p.correspondences.push_back(std::move(c));
    require(validateIntra(ModelSet::fromProject(p)).valid(),
            "fixture must be intra-valid");
    return errorCodes(validateCross(p));
  };
  auto expectOnly = [&](const std::set<std::string>& codes,
                        const std::string& expected, const std::string& what) {
    require(codes == std::set<std::string>{expected},
            what + ": expected exactly " + expected);
  };

  require(errorCodes(validateCross(base)).empty(), "playground must be clean");

  auto nav = [](const std::string& s) {
    return makeId(ModelKind::Navigation, {s});
  };
  auto data1 = [](const std::string& s) { return makeId(ModelKind::Data, {s}); };
  auto data2 = [](const std::string& a, const std::string& b) {
    return makeId(ModelKind::Data, {a, b});
  };
  auto ui1 = [](const std::string& s) { return makeId(ModelKind::UI, {s}); };
  auto ui2 = [](const std::string& a, const std::string& b) {
    return makeId(ModelKind::UI, {a, b});
  };
  auto bl2 = [](const std::string& a, const std::string& b) {
    return makeId(ModelKind::BusinessLogic, {a, b});
  };

  // ViewMainContainer
  expectOnly(withExtra(ts::mkCorr("ok", CT::ViewMainContainer, nav("main"),
                                  ui1("mainRoot"))),
             "VAL201", "duplicate main container");  // second one for main
  expectOnly(withExtra(ts::mkCorr("bad", CT::ViewMainContainer, nav("main"),
                                  ui2("mainRoot", "goItem"))),
             "VAL200", "non-root right endpoint");
  {
    // Passing fixture: the playground's own pair of VMC correspondences.
    require(errorCodes(validateCross(base)).empty(), "VMC passing fixture");
  }

  // AttributeLabel
  require(withExtra(ts::mkCorr("ok", CT::AttributeLabel, data2("Item", "title"),
                               ui2("mainRoot", "titleLabel")))
              .empty(),
          "AttributeLabel passing fixture");
  expectOnly(withExtra(ts::mkCorr("bad1", CT::AttributeLabel,
                                  data2("Item", "title"),
                                  ui2("mainRoot", "goItem"))),
             "VAL210", "AttributeLabel to a non-label");
  expectOnly(withExtra(ts::mkCorr("bad2", CT::AttributeLabel, data1("Item"),
                                  ui2("mainRoot", "titleLabel"))),
             "VAL210", "AttributeLabel from a non-property");

  // ActionDataOperation
  require(withExtra(ts::mkCorr("ok", CT::ActionDataOperation,
                               bl2("onGo", "save"), data2("Item", "create")))
              .empty(),
          "ActionDataOperation passing fixture");
  expectOnly(withExtra(ts::mkCorr("bad1", CT::ActionDataOperation,
                                  bl2("onGo", "hop"), data2("Item", "create"))),
             "VAL220", "left is not a dataOp action");
  expectOnly(withExtra(ts::mkCorr("bad2", CT::ActionDataOperation,
                                  bl2("onGo", "save"), data2("Item", "delete"))),
             "VAL220", "operation mismatch");

  // ElementEntityBinding
  require(withExtra(ts::mkCorr("ok", CT::ElementEntityBinding,
                               ui2("mainRoot", "list"), data1("Item")))
              .empty(),
          "ElementEntityBinding passing fixture");
  expectOnly(withExtra(ts::mkCorr("bad1", CT::ElementEntityBinding,
                                  ui2("mainRoot", "titleLabel"), data1("Item"))),
             "VAL230", "left is not a container");
  expectOnly(withExtra(ts::mkCorr("bad2", CT::ElementEntityBinding,
                                  ui2("mainRoot", "list"),
                                  data2("Item", "title"))),
             "VAL230", "right is not an entity");

  // NavItemFlow
  require(withExtra(ts::mkCorr("ok", CT::NavItemFlow, ui2("mainRoot", "goItem"),
                               nav("go")))
              .empty(),
          "NavItemFlow passing fixture");
  expectOnly(withExtra(ts::mkCorr("bad1", CT::NavItemFlow,
                                  ui2("mainRoot", "titleLabel"), nav("go"))),
             "VAL231", "left is not a navigation item");
  {
    Project p = base;
    p.navigation.flows[0] = ts::mkFlow("go", "other", "main");
    p.correspondences.push_back(
        ts::mkCorr("bad2", CT::NavItemFlow, ui2("mainRoot", "goItem"), nav("go")));
    expectOnly(errorCodes(validateCross(p)), "VAL231",
               "flow source is not the owning view");
  }
}

// ---------------------------------------------------------------------------
// 6. Simulator determinism and soundness on the CityGuide golden trace.

void criterionSimulatorGolden() {
  Project p = ts::loadCityGuide();
  Scenario scenario = parseScenario(readFile(
      ts::testDataDir() / "cityguide" / "scenarios" / "browse-and-detail.scn"));
  SimRun result = run(p, scenario);
  std::string jsonl = traceToJsonl(result.trace);

  fs::path goldenPath = ts::testDataDir() / "cityguide" / "golden" /
                        "browse-and-detail.trace.jsonl";
  require(fs::exists(goldenPath), "golden trace file missing");
  std::string golden = readFile(goldenPath);
  require(jsonl == golden, "trace is not byte-identical to the golden trace");

  // Replay determinism.
  require(traceToJsonl(run(p, scenario).trace) == jsonl,
          "replay produced a different trace");

  // Navigated-source soundness, derived from the trace alone.
  std::string current = p.navigation.entryView.dotted();
  for (const auto& event : result.trace) {
    if (event.kind != TraceKind::navigated) continue;
    require(event.detail.at("from").get<std::string>() == current,
            "navigated entry does not leave from the pre-step view");
    current = event.detail.at("to").get<std::string>();
  }

  // Visited views are inside the static reachable set.
  AnalysisResult reach = reachability(p);
  std::set<std::string> unreachable;
  for (const auto& finding : reach.findings)
    unreachable.insert(finding.element.dotted());
  std::set<std::string> visited{p.navigation.entryView.dotted()};
  for (const auto& event : result.trace)
    if (event.kind == TraceKind::navigated)
      visited.insert(event.detail.at("to").get<std::string>());
  for (const auto& view : visited)
    require(!unreachable.count(view),
            "simulator visited statically unreachable view " + view);
}

// ---------------------------------------------------------------------------
// 7. CRUD oracle: random operation sequences against the reference store.

void criterionCrudOracle() {
  Property name;
  name.id = makeId(ModelKind::Data, {"City", "name"});
  name.name = "name";
  name.type = PropertyType::string;
  Property population;
  population.id = makeId(ModelKind::Data, {"City", "population"});
  population.name = "population";
  population.type = PropertyType::integer;
  Entity city = makeEntity("City", {name, population}, {}, {});

  ts::Rng rng(700700);
  for (int seq = 0; seq < 100; ++seq) {
    Store store;
    ts::ReferenceStore ref;
    std::vector<long long> live;
    int ops = ts::randInt(rng, 1, 40);
    for (int i = 0; i < ops; ++i) {
      int op = ts::randInt(rng, 0, 2);
      if (op == 0 || live.empty()) {
        std::string n = ts::randName(rng, "c");
        long long pop = ts::randInt(rng, 0, 9999999);
        auto inst = store.create(city, {Value(n), Value(pop)});
        long long refId =
            ref.create("City", {{"name", Value(n)}, {"population", Value(pop)}});
        require(inst->id == refId, "id divergence");
        live.push_back(refId);
      } else if (op == 1) {
        long long id = live[size_t(ts::randInt(rng, 0, int(live.size()) - 1))];
        long long pop = ts::randInt(rng, 0, 9999999);
        for (const auto& inst : store.instances("City"))
          if (inst->id == id) inst->properties["population"] = Value(pop);
        ref.update("City", id, "population", Value(pop));
      } else {
        size_t pickIdx = size_t(ts::randInt(rng, 0, int(live.size()) - 1));
        long long id = live[pickIdx];
        bool a = store.remove("City", id);
        bool b = ref.remove("City", id);
        require(a == b, "remove divergence");
        live.erase(live.begin() + long(pickIdx));
      }
    }
    const auto& mine = store.instances("City");
    const auto& theirs = ref.instances("City");
    require(mine.size() == theirs.size(), "instance count divergence");
    for (size_t i = 0; i < mine.size(); ++i) {
      require(mine[i]->id == theirs[i].id, "instance id divergence");
      require(renderValue(mine[i]->properties.at("name")) ==
                  renderValue(theirs[i].props.at("name")),
              "name divergence");
      require(renderValue(mine[i]->properties.at("population")) ==
                  renderValue(theirs[i].props.at("population")),
              "population divergence");
    }
  }
}

// ---------------------------------------------------------------------------
// 8. Codegen fidelity: hyperlink graph versus the NavItemFlow-linked flows;
// byte-identical bundle regeneration.

void criterionCodegenFidelity() {
  Project p = ts::loadCityGuide();

  auto files = prototypeFiles(p);
  std::set<std::pair<std::string, std::string>> links;
  static const std::regex href("href=\"([A-Za-z_][A-Za-z0-9_]*)\\.html\"");
  for (const auto& [fileName, content] : files) {
    if (fileName == "index.html" || !fileName.ends_with(".html")) continue;
    std::string source = fileName.substr(0, fileName.size() - 5);
    for (std::sregex_iterator it(content.begin(), content.end(), href), end;
         it != end; ++it)
      links.emplace(source, (*it)[1].str());
  }

  std::set<std::pair<std::string, std::string>> expected;
  for (const auto& c : p.correspondences) {
    if (c.ctype != CorrespondenceType::NavItemFlow) continue;
    const NavigationFlow* flow = p.navigation.findFlow(c.right);
    require(flow != nullptr, "NavItemFlow names a missing flow");
    expected.emplace(flow->source.dotted(), flow->target.dotted());
  }
  require(links == expected,
          "prototype hyperlink graph differs from the NavItemFlow image");

  // Byte-identical bundle across two full regenerations (fresh model load).
  std::string first = bundleText(p);
  Project reloaded = ts::loadCityGuide();
  require(first == bundleText(reloaded), "bundle regeneration differs");

  fs::path goldenPath =
      ts::testDataDir() / "cityguide" / "golden" / "bundle.json";
  require(fs::exists(goldenPath), "golden bundle file missing");
  require(first == readFile(goldenPath),
          "bundle differs from the frozen golden bundle");
}

// ---------------------------------------------------------------------------
// 9. End-to-end pipeline through the CLI binary.

void criterionEndToEnd() {
  fs::path out = fs::temp_directory_path() / "mvmob_acceptance_e2e";
  fs::remove_all(out);
  fs::path cityguide = ts::testDataDir() / "cityguide";
  std::string base = std::string(MVMOB_CLI_PATH) + " --project " +
                     cityguide.string() + " --out " + out.string() + " ";
  auto step = [&](const std::string& args) {
    std::string command = base + args + " > /dev/null 2>&1";
    int status = std::system(command.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    require(code == 0, "'" + args + "' exited with " + std::to_string(code));
  };
  step("check");
  step("analyze");
  step("project user");
  step("simulate " + (cityguide / "scenarios" / "browse-and-detail.scn").string());
  step("generate");
  fs::remove_all(out);
}

struct Criterion {
  std::string name;
  std::function<void()> fn;
  double limitSeconds;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"table-fidelity", criterionTableFidelity, 1.0},
      {"round-trip-300-per-dsl", criterionRoundTrip, 30.0},
      {"expression-oracle", criterionExpressionOracle, 10.0},
      {"reachability-oracle", criterionReachabilityOracle, 10.0},
      {"correspondence-typing", criterionCorrespondenceTyping, 30.0},
      {"simulator-golden-trace", criterionSimulatorGolden, 5.0},
      {"crud-oracle", criterionCrudOracle, 30.0},
      {"codegen-fidelity", criterionCodegenFidelity, 30.0},
      {"end-to-end-pipeline", criterionEndToEnd, 10.0},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      criterion.fn();
    } catch (const std::exception& e) {
      failure = e.what();
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (failure.empty() && seconds > criterion.limitSeconds)
      failure = "exceeded the " + std::to_string(criterion.limitSeconds) +
                "s runtime limit";
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    if (failure.empty()) {
      line << "[PASS] " << criterion.name << " (" << seconds << "s)";
    } else {
      ++failures;
      line << "[FAIL] " << criterion.name << " (" << seconds
           << "s): " << failure;
    }
    std::cout << line.str() << std::endl;
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all " << criteria.size() << " acceptance criteria passed"
            << std::endl;
  return 0;
}
