// Stakeholder viewpoints and project slicing. Each stakeholder sees a fixed
// subset of the four viewpoints; a slice keeps exactly those models plus the
// correspondences whose two endpoints both survive, so it stays a
// self-contained, re-checkable project.
#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>

#include "mvmob/model.hpp"

namespace mvmob {

enum class Stakeholder {
  uiDesigner,
  appDeveloper,
  backEndDeveloper,
  informationArchitect,
  contentProducer,
  user,
  customer,
  projectManager,
};

constexpr std::array<Stakeholder, 8> kAllStakeholders = {
    Stakeholder::uiDesigner,     Stakeholder::appDeveloper,
    Stakeholder::backEndDeveloper, Stakeholder::informationArchitect,
    Stakeholder::contentProducer, Stakeholder::user,
    Stakeholder::customer,       Stakeholder::projectManager};

inline std::string_view toString(Stakeholder s) {
  switch (s) {
    case Stakeholder::uiDesigner: return "uiDesigner";
    case Stakeholder::appDeveloper: return "appDeveloper";
    case Stakeholder::backEndDeveloper: return "backEndDeveloper";
    case Stakeholder::informationArchitect: return "informationArchitect";
    case Stakeholder::contentProducer: return "contentProducer";
    case Stakeholder::user: return "user";
    case Stakeholder::customer: return "customer";
    case Stakeholder::projectManager: return "projectManager";
  }
  return "?";
}

inline std::optional<Stakeholder> stakeholderFromString(std::string_view s) {
  for (Stakeholder st : kAllStakeholders)
    if (s == toString(st)) return st;
  return std::nullopt;
}

struct ViewpointSet {
  bool navigation = false;
  bool data = false;
  bool ui = false;
  bool businessLogic = false;

  bool operator==(const ViewpointSet&) const = default;

  bool contains(ModelKind kind) const {
    switch (kind) {
      case ModelKind::Navigation: return navigation;
      case ModelKind::Data: return data;
      case ModelKind::UI: return ui;
      case ModelKind::BusinessLogic: return businessLogic;
      case ModelKind::Correspondence: return false;
    }
    return false;
  }

  int count() const {
    return int(navigation) + int(data) + int(ui) + int(businessLogic);
  }
};

// The stakeholder/viewpoint access matrix.
inline ViewpointSet viewpointsOf(Stakeholder s) {
  switch (s) {
    case Stakeholder::uiDesigner: return {true, true, true, true};
    case Stakeholder::appDeveloper: return {true, true, true, true};
    case Stakeholder::backEndDeveloper: return {false, true, false, true};
    case Stakeholder::informationArchitect: return {true, true, true, false};
    case Stakeholder::contentProducer: return {false, true, false, false};
    case Stakeholder::user: return {false, false, true, false};
    case Stakeholder::customer: return {true, false, true, false};
    case Stakeholder::projectManager: return {true, false, true, false};
  }
  return {};
}

// The sub-project visible to a stakeholder. Correspondences are retained only
// when both endpoint models are retained.
inline ModelSet project(const Project& p, Stakeholder s) {
  ViewpointSet vp = viewpointsOf(s);
  ModelSet slice;
  slice.name = p.name;
  if (vp.navigation) slice.navigation = p.navigation;
  if (vp.data) slice.data = p.data;
  if (vp.ui) slice.ui = p.ui;
  if (vp.businessLogic) slice.logic = p.logic;
  for (const auto& c : p.correspondences) {
    auto [leftKind, rightKind] = endpointKinds(c.ctype);
    if (vp.contains(leftKind) && vp.contains(rightKind))
      slice.correspondences.push_back(c);
  }
  return slice;
}

inline ModelSet project(const ModelSet& models, Stakeholder s) {
  ViewpointSet vp = viewpointsOf(s);
  ModelSet slice;
  slice.name = models.name;
  if (vp.navigation) slice.navigation = models.navigation;
  if (vp.data) slice.data = models.data;
  if (vp.ui) slice.ui = models.ui;
  if (vp.businessLogic) slice.logic = models.logic;
  for (const auto& c : models.correspondences) {
    auto [leftKind, rightKind] = endpointKinds(c.ctype);
    if (vp.contains(leftKind) && vp.contains(rightKind) &&
        slice.has(leftKind) && slice.has(rightKind))
      slice.correspondences.push_back(c);
  }
  return slice;
}

}  // namespace mvmob
