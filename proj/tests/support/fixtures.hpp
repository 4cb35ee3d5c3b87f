// Shared fixtures: the CityGuide worked example plus small synthetic projects
// used by validation and codegen tests.
#pragma once

#include <filesystem>
#include <stdexcept>

#include "mvmob/mvmob.hpp"
#include "support/generators.hpp"

namespace testsupport {

inline std::filesystem::path testDataDir() { return MVMOB_TESTDATA_DIR; }

inline mvmob::Project loadCityGuide() {
  auto loaded = mvmob::loadProject(testDataDir() / "cityguide");
  if (!loaded.parseOk()) {
    std::string lines;
    for (const auto& d : loaded.parseDiagnostics) lines += d.toLine() + "\n";
    throw std::runtime_error("CityGuide fixture failed to parse:\n" + lines);
  }
  auto project = loaded.models.toProject();
  if (!project)
    throw std::runtime_error("CityGuide fixture is missing a model");
  return *project;
}

// A compact project exercising every correspondence type:
//   nav:   main (entry) --go--> other
//   data:  Item { prop title: string }
//   ui:    mainRoot { navigationItem goItem, label titleLabel, listItems list }
//          otherRoot {}
//   logic: rule onGo: tap goItem -> { save: data Item.create(...); hop: goto go }
inline mvmob::Project corrPlayground() {
  using namespace mvmob;
  Project p;
  p.name = "Playground";

  p.navigation.views.push_back(mkView("main", "Main"));
  p.navigation.views.push_back(mkView("other", "Other"));
  p.navigation.entryView = p.navigation.views.front().id;
  p.navigation.flows.push_back(mkFlow("go", "main", "other"));

  Property title;
  title.id = makeId(ModelKind::Data, {"Item", "title"});
  title.name = "title";
  title.type = PropertyType::string;
  p.data.entities.push_back(makeEntity("Item", {title}, {}, {}));

  UIElement goItem = mkElement(UIElementKind::navigationItem, {"mainRoot", "goItem"});
  UIElement titleLabel = mkElement(UIElementKind::label, {"mainRoot", "titleLabel"});
  UIElement list = mkElement(UIElementKind::listItems, {"mainRoot", "list"});
  p.ui.elements.push_back(mkElement(UIElementKind::plainContainer, {"mainRoot"},
                                    {goItem, titleLabel, list}));
  p.ui.elements.push_back(mkElement(UIElementKind::plainContainer, {"otherRoot"}));

  EcaRule rule;
  rule.id = makeId(ModelKind::BusinessLogic, {"onGo"});
  rule.trigger = Event::interaction(Gesture::tap, goItem.id);
  ActionNode save;
  save.id = childId(rule.id, "save");
  save.action = Action::dataOp(makeId(ModelKind::Data, {"Item"}), "create",
                               {exprOperand(literalOperand(std::string("x")))});
  save.outgoing.push_back(ControlFlow{childId(rule.id, "hop"), std::nullopt});
  ActionNode hop;
  hop.id = childId(rule.id, "hop");
  hop.action = Action::navigate(makeId(ModelKind::Navigation, {"go"}));
  rule.body.nodes = {save, hop};
  p.logic.rules.push_back(std::move(rule));

  // Main containers for both views keep VAL202 quiet where it matters.
  Correspondence vmcMain;
  vmcMain.id = makeId(ModelKind::Correspondence, {"vmcMain"});
  vmcMain.ctype = CorrespondenceType::ViewMainContainer;
  vmcMain.left = makeId(ModelKind::Navigation, {"main"});
  vmcMain.right = makeId(ModelKind::UI, {"mainRoot"});
  Correspondence vmcOther;
  vmcOther.id = makeId(ModelKind::Correspondence, {"vmcOther"});
  vmcOther.ctype = CorrespondenceType::ViewMainContainer;
  vmcOther.left = makeId(ModelKind::Navigation, {"other"});
  vmcOther.right = makeId(ModelKind::UI, {"otherRoot"});
  p.correspondences = {vmcMain, vmcOther};
  return p;
}

inline mvmob::Correspondence mkCorr(const std::string& name,
                                    mvmob::CorrespondenceType ctype,
                                    mvmob::ElementId left,
                                    mvmob::ElementId right) {
  mvmob::Correspondence c;
  c.id = mvmob::makeId(mvmob::ModelKind::Correspondence, {name});
  c.ctype = ctype;
  c.left = std::move(left);
  c.right = std::move(right);
  return c;
}

inline std::vector<std::string> codesOf(const mvmob::ValidationReport& report) {
  std::vector<std::string> codes;
  for (const auto& d : report.diagnostics) codes.push_back(d.code);
  return codes;
}

inline bool hasCode(const mvmob::ValidationReport& report,
                    const std::string& code) {
  for (const auto& d : report.diagnostics)
    if (d.code == code) return true;
  return false;
}

}  // namespace testsupport
