// In-memory representation of the five models a project is made of
// (Navigation, Data, UI, Business Logic, Correspondences) plus element lookup.
// Everything here is a plain immutable value type; dangling cross-references
// are representable and reported by the validation passes, not here.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mvmob/condition.hpp"
#include "mvmob/ids.hpp"

namespace mvmob {

// --------------------------------------------------------------------------
// Navigation

struct View {
  ElementId id;  // Navigation:<name>
  std::string name;
  std::string title;

  bool operator==(const View&) const = default;
};

struct NavigationFlow {
  ElementId id;  // Navigation:<name>
  ElementId source;
  ElementId target;
  std::optional<Expr> guard;

  bool operator==(const NavigationFlow&) const = default;
  const std::string& name() const { return id.name(); }
};

struct NavigationModel {
  std::vector<View> views;
  std::vector<NavigationFlow> flows;
  ElementId entryView;

  bool operator==(const NavigationModel&) const = default;

  const View* findView(const ElementId& id) const {
    for (const auto& v : views)
      if (v.id == id) return &v;
    return nullptr;
  }
  const NavigationFlow* findFlow(const ElementId& id) const {
    for (const auto& f : flows)
      if (f.id == id) return &f;
    return nullptr;
  }
};

// --------------------------------------------------------------------------
// Data

enum class PropertyType { string, integer, floating, boolean, date, url };

constexpr std::array<PropertyType, 6> kAllPropertyTypes = {
    PropertyType::string, PropertyType::integer, PropertyType::floating,
    PropertyType::boolean, PropertyType::date, PropertyType::url};

inline std::string_view toString(PropertyType t) {
  switch (t) {
    case PropertyType::string: return "string";
    case PropertyType::integer: return "integer";
    case PropertyType::floating: return "float";
    case PropertyType::boolean: return "boolean";
    case PropertyType::date: return "date";
    case PropertyType::url: return "url";
  }
  return "?";
}

inline std::optional<PropertyType> propertyTypeFromString(std::string_view s) {
  for (PropertyType t : kAllPropertyTypes)
    if (s == toString(t)) return t;
  return std::nullopt;
}

struct Property {
  ElementId id;  // Data:<entity>.<name>
  std::string name;
  PropertyType type = PropertyType::string;

  bool operator==(const Property&) const = default;
};

enum class OperationKind { create, read, update, del, custom };

inline std::string_view toString(OperationKind k) {
  switch (k) {
    case OperationKind::create: return "create";
    case OperationKind::read: return "read";
    case OperationKind::update: return "update";
    case OperationKind::del: return "delete";
    case OperationKind::custom: return "custom";
  }
  return "?";
}

constexpr std::array<std::string_view, 4> kCrudNames = {"create", "read",
                                                        "update", "delete"};

inline bool isCrudName(std::string_view name) {
  for (auto crud : kCrudNames)
    if (name == crud) return true;
  return false;
}

struct DataOperation {
  ElementId id;  // Data:<entity>.<name>
  std::string name;
  OperationKind kind = OperationKind::custom;
  std::vector<std::pair<std::string, PropertyType>> params;
  std::optional<PropertyType> returns;

  bool operator==(const DataOperation&) const = default;
};

enum class Cardinality { one, many };

inline std::string_view toString(Cardinality c) {
  return c == Cardinality::one ? "one" : "many";
}

struct Reference {
  ElementId id;  // Data:<entity>.<name>
  std::string name;
  ElementId targetEntity;  // Data:<entity>
  Cardinality cardinality = Cardinality::one;

  bool operator==(const Reference&) const = default;
};

struct Entity {
  ElementId id;  // Data:<name>
  std::string name;
  std::vector<Property> properties;
  // Always starts with the four implicit CRUD operations (see makeEntity),
  // followed by declared custom operations in declaration order.
  std::vector<DataOperation> operations;
  std::vector<Reference> references;

  bool operator==(const Entity&) const = default;

  const Property* findProperty(std::string_view n) const {
    for (const auto& p : properties)
      if (p.name == n) return &p;
    return nullptr;
  }
  const DataOperation* findOperation(std::string_view n) const {
    for (const auto& o : operations)
      if (o.name == n) return &o;
    return nullptr;
  }
  const Reference* findReference(std::string_view n) const {
    for (const auto& r : references)
      if (r.name == n) return &r;
    return nullptr;
  }
};

// Materializes the implicit CRUD operations ahead of the declared custom ones.
// create takes the entity's properties as parameters; read/update/delete are
// special forms whose argument handling lives in the simulator.
inline Entity makeEntity(std::string name, std::vector<Property> properties,
                         std::vector<DataOperation> customOps,
                         std::vector<Reference> references) {
  Entity e;
  e.id = makeId(ModelKind::Data, {name});
  e.name = std::move(name);
  e.properties = std::move(properties);
  e.references = std::move(references);
  auto crud = [&](std::string_view opName, OperationKind kind) {
    DataOperation op;
    op.id = childId(e.id, std::string(opName));
    op.name = std::string(opName);
    op.kind = kind;
    if (kind == OperationKind::create)
      for (const auto& p : e.properties) op.params.emplace_back(p.name, p.type);
    return op;
  };
  e.operations.push_back(crud("create", OperationKind::create));
  e.operations.push_back(crud("read", OperationKind::read));
  e.operations.push_back(crud("update", OperationKind::update));
  e.operations.push_back(crud("delete", OperationKind::del));
  for (auto& op : customOps) e.operations.push_back(std::move(op));
  return e;
}

struct DataModel {
  std::vector<Entity> entities;

  bool operator==(const DataModel&) const = default;

  const Entity* findEntity(const ElementId& id) const {
    for (const auto& e : entities)
      if (e.id == id) return &e;
    return nullptr;
  }
  const Entity* findEntity(std::string_view name) const {
    for (const auto& e : entities)
      if (e.name == name) return &e;
    return nullptr;
  }
};

// --------------------------------------------------------------------------
// UI

enum class UIElementKind {
  // basic
  button, label, map, image, navigationItem, textInput,
  // containers
  listItems, grid, menu, navigationBar, plainContainer,
};

constexpr std::array<UIElementKind, 11> kAllUIElementKinds = {
    UIElementKind::button,      UIElementKind::label,
    UIElementKind::map,         UIElementKind::image,
    UIElementKind::navigationItem, UIElementKind::textInput,
    UIElementKind::listItems,   UIElementKind::grid,
    UIElementKind::menu,        UIElementKind::navigationBar,
    UIElementKind::plainContainer};

inline bool isContainerKind(UIElementKind k) {
  switch (k) {
    case UIElementKind::listItems:
    case UIElementKind::grid:
    case UIElementKind::menu:
    case UIElementKind::navigationBar:
    case UIElementKind::plainContainer:
      return true;
    default:
      return false;
  }
}

inline std::string_view toString(UIElementKind k) {
  switch (k) {
    case UIElementKind::button: return "button";
    case UIElementKind::label: return "label";
    case UIElementKind::map: return "map";
    case UIElementKind::image: return "image";
    case UIElementKind::navigationItem: return "navigationItem";
    case UIElementKind::textInput: return "textInput";
    case UIElementKind::listItems: return "listItems";
    case UIElementKind::grid: return "grid";
    case UIElementKind::menu: return "menu";
    case UIElementKind::navigationBar: return "navigationBar";
    case UIElementKind::plainContainer: return "plainContainer";
  }
  return "?";
}

inline std::optional<UIElementKind> uiElementKindFromString(std::string_view s) {
  for (UIElementKind k : kAllUIElementKinds)
    if (s == toString(k)) return k;
  return std::nullopt;
}

struct UIElement {
  ElementId id;  // UI:<root>.<...>.<name> — path mirrors containment
  UIElementKind kind = UIElementKind::plainContainer;
  std::vector<UIElement> children;            // empty for basic elements
  std::map<std::string, std::string> attributes;  // e.g. text, placeholder

  bool operator==(const UIElement&) const = default;
  const std::string& name() const { return id.name(); }
  bool isContainer() const { return isContainerKind(kind); }
};

struct UIModel {
  std::vector<UIElement> elements;  // forest roots, containers

  bool operator==(const UIModel&) const = default;

  const UIElement* findElement(const ElementId& id) const {
    const UIElement* found = nullptr;
    walk([&](const UIElement& e) {
      if (e.id == id) found = &e;
    });
    return found;
  }

  void walk(const std::function<void(const UIElement&)>& fn) const {
    for (const auto& root : elements) walkFrom(root, fn);
  }

  static void walkFrom(const UIElement& e,
                       const std::function<void(const UIElement&)>& fn) {
    fn(e);
    for (const auto& child : e.children) walkFrom(child, fn);
  }

  // The root container an element lives under, or null when the id does not
  // name a top-level subtree element.
  const UIElement* rootOf(const ElementId& id) const {
    for (const auto& root : elements)
      if (!id.path.empty() && !root.id.path.empty() &&
          id.path.front() == root.id.path.front())
        return findElement(id) ? &root : nullptr;
    return nullptr;
  }
};

// --------------------------------------------------------------------------
// Business logic

enum class Gesture { tap, longPress, swipe };

inline std::string_view toString(Gesture g) {
  switch (g) {
    case Gesture::tap: return "tap";
    case Gesture::longPress: return "longPress";
    case Gesture::swipe: return "swipe";
  }
  return "?";
}

inline std::optional<Gesture> gestureFromString(std::string_view s) {
  if (s == "tap") return Gesture::tap;
  if (s == "longPress") return Gesture::longPress;
  if (s == "swipe") return Gesture::swipe;
  return std::nullopt;
}

enum class Capability { gps, camera, network, battery };

inline std::string_view toString(Capability c) {
  switch (c) {
    case Capability::gps: return "gps";
    case Capability::camera: return "camera";
    case Capability::network: return "network";
    case Capability::battery: return "battery";
  }
  return "?";
}

inline std::optional<Capability> capabilityFromString(std::string_view s) {
  if (s == "gps") return Capability::gps;
  if (s == "camera") return Capability::camera;
  if (s == "network") return Capability::network;
  if (s == "battery") return Capability::battery;
  return std::nullopt;
}

struct Event {
  enum class Kind { userInteraction, deviceCapability, applicationSpecific };
  Kind kind = Kind::applicationSpecific;
  // userInteraction
  Gesture gesture = Gesture::tap;
  ElementId target;
  // deviceCapability
  Capability capability = Capability::gps;
  std::string signal;
  // applicationSpecific
  std::string name;

  bool operator==(const Event&) const = default;

  static Event interaction(Gesture g, ElementId uiTarget) {
    Event e;
    e.kind = Kind::userInteraction;
    e.gesture = g;
    e.target = std::move(uiTarget);
    return e;
  }
  static Event device(Capability c, std::string signal) {
    Event e;
    e.kind = Kind::deviceCapability;
    e.capability = c;
    e.signal = std::move(signal);
    return e;
  }
  static Event application(std::string name) {
    Event e;
    e.kind = Kind::applicationSpecific;
    e.name = std::move(name);
    return e;
  }
};

enum class UiUpdateKind { setText, show, hide, refresh };

inline std::string_view toString(UiUpdateKind k) {
  switch (k) {
    case UiUpdateKind::setText: return "setText";
    case UiUpdateKind::show: return "show";
    case UiUpdateKind::hide: return "hide";
    case UiUpdateKind::refresh: return "refresh";
  }
  return "?";
}

inline std::optional<UiUpdateKind> uiUpdateKindFromString(std::string_view s) {
  if (s == "setText") return UiUpdateKind::setText;
  if (s == "show") return UiUpdateKind::show;
  if (s == "hide") return UiUpdateKind::hide;
  if (s == "refresh") return UiUpdateKind::refresh;
  return std::nullopt;
}

struct Action {
  enum class Kind { dataOp, uiUpdate, navigate, deviceAccess };
  Kind kind = Kind::navigate;
  // dataOp
  ElementId entity;       // Data:<entity>
  std::string operation;  // operation name on that entity
  std::vector<Expr> args;
  std::optional<std::string> bindAs;  // also used by deviceAccess
  // uiUpdate
  ElementId element;  // UI:<path>
  UiUpdateKind update = UiUpdateKind::refresh;
  std::optional<Expr> value;
  // navigate
  ElementId flow;  // Navigation:<flow>
  // deviceAccess
  Capability capability = Capability::gps;
  std::string request;

  bool operator==(const Action&) const = default;

  static Action dataOp(ElementId entity, std::string operation,
                       std::vector<Expr> args,
                       std::optional<std::string> bindAs = std::nullopt) {
    Action a;
    a.kind = Kind::dataOp;
    a.entity = std::move(entity);
    a.operation = std::move(operation);
    a.args = std::move(args);
    a.bindAs = std::move(bindAs);
    return a;
  }
  static Action uiUpdate(ElementId element, UiUpdateKind update,
                         std::optional<Expr> value = std::nullopt) {
    Action a;
    a.kind = Kind::uiUpdate;
    a.element = std::move(element);
    a.update = update;
    a.value = std::move(value);
    return a;
  }
  static Action navigate(ElementId flow) {
    Action a;
    a.kind = Kind::navigate;
    a.flow = std::move(flow);
    return a;
  }
  static Action deviceAccess(Capability c, std::string request,
                             std::optional<std::string> bindAs = std::nullopt) {
    Action a;
    a.kind = Kind::deviceAccess;
    a.capability = c;
    a.request = std::move(request);
    a.bindAs = std::move(bindAs);
    return a;
  }
};

struct ControlFlow {
  ElementId target;  // BusinessLogic:<rule>.<node>
  std::optional<Expr> condition;

  bool operator==(const ControlFlow&) const = default;
};

struct ActionNode {
  ElementId id;  // BusinessLogic:<rule>.<label>
  Action action;
  std::vector<ControlFlow> outgoing;

  bool operator==(const ActionNode&) const = default;
  const std::string& label() const { return id.name(); }
};

// Directed action graph; the first node is the entry point.
struct ControlGraph {
  std::vector<ActionNode> nodes;

  bool operator==(const ControlGraph&) const = default;

  const ActionNode* entry() const { return nodes.empty() ? nullptr : &nodes.front(); }
  const ActionNode* findNode(const ElementId& id) const {
    for (const auto& n : nodes)
      if (n.id == id) return &n;
    return nullptr;
  }
};

struct EcaRule {
  ElementId id;  // BusinessLogic:<name>
  std::optional<ElementId> scope;  // Navigation:<view>; absent = global
  Event trigger;
  ControlGraph body;

  bool operator==(const EcaRule&) const = default;
  const std::string& name() const { return id.name(); }
};

struct BusinessLogicModel {
  std::vector<EcaRule> rules;

  bool operator==(const BusinessLogicModel&) const = default;

  const EcaRule* findRule(const ElementId& id) const {
    for (const auto& r : rules)
      if (r.id == id) return &r;
    return nullptr;
  }
};

// --------------------------------------------------------------------------
// Correspondences

enum class CorrespondenceType {
  ViewMainContainer,   // Navigation -> UI
  AttributeLabel,      // Data -> UI
  ActionDataOperation, // BusinessLogic -> Data
  ElementEntityBinding,// UI -> Data
  NavItemFlow,         // UI -> Navigation
};

constexpr std::array<CorrespondenceType, 5> kAllCorrespondenceTypes = {
    CorrespondenceType::ViewMainContainer, CorrespondenceType::AttributeLabel,
    CorrespondenceType::ActionDataOperation,
    CorrespondenceType::ElementEntityBinding, CorrespondenceType::NavItemFlow};

inline std::string_view toString(CorrespondenceType t) {
  switch (t) {
    case CorrespondenceType::ViewMainContainer: return "ViewMainContainer";
    case CorrespondenceType::AttributeLabel: return "AttributeLabel";
    case CorrespondenceType::ActionDataOperation: return "ActionDataOperation";
    case CorrespondenceType::ElementEntityBinding: return "ElementEntityBinding";
    case CorrespondenceType::NavItemFlow: return "NavItemFlow";
  }
  return "?";
}

inline std::optional<CorrespondenceType> correspondenceTypeFromString(
    std::string_view s) {
  for (CorrespondenceType t : kAllCorrespondenceTypes)
    if (s == toString(t)) return t;
  return std::nullopt;
}

// Required endpoint model kinds, left then right.
inline std::pair<ModelKind, ModelKind> endpointKinds(CorrespondenceType t) {
  switch (t) {
    case CorrespondenceType::ViewMainContainer:
      return {ModelKind::Navigation, ModelKind::UI};
    case CorrespondenceType::AttributeLabel:
      return {ModelKind::Data, ModelKind::UI};
    case CorrespondenceType::ActionDataOperation:
      return {ModelKind::BusinessLogic, ModelKind::Data};
    case CorrespondenceType::ElementEntityBinding:
      return {ModelKind::UI, ModelKind::Data};
    case CorrespondenceType::NavItemFlow:
      return {ModelKind::UI, ModelKind::Navigation};
  }
  return {ModelKind::Navigation, ModelKind::UI};
}

struct Correspondence {
  ElementId id;  // Correspondence:<name>
  CorrespondenceType ctype = CorrespondenceType::ViewMainContainer;
  ElementId left;
  ElementId right;

  bool operator==(const Correspondence&) const = default;
  const std::string& name() const { return id.name(); }
};

// --------------------------------------------------------------------------
// Project

struct Project {
  std::string name;
  NavigationModel navigation;
  DataModel data;
  UIModel ui;
  BusinessLogicModel logic;
  std::vector<Correspondence> correspondences;

  bool operator==(const Project&) const = default;
};

// A possibly-partial project: what a stakeholder slice or a partially
// populated manifest yields. Validation operates on this shape so slices are
// checkable with the same pipeline.
struct ModelSet {
  std::string name;
  std::optional<NavigationModel> navigation;
  std::optional<DataModel> data;
  std::optional<UIModel> ui;
  std::optional<BusinessLogicModel> logic;
  std::vector<Correspondence> correspondences;

  bool operator==(const ModelSet&) const = default;

  bool has(ModelKind kind) const {
    switch (kind) {
      case ModelKind::Navigation: return navigation.has_value();
      case ModelKind::Data: return data.has_value();
      case ModelKind::UI: return ui.has_value();
      case ModelKind::BusinessLogic: return logic.has_value();
      case ModelKind::Correspondence: return true;
    }
    return false;
  }

  bool isComplete() const { return navigation && data && ui && logic; }

  std::optional<Project> toProject() const {
    if (!isComplete()) return std::nullopt;
    return Project{name, *navigation, *data, *ui, *logic, correspondences};
  }

  static ModelSet fromProject(const Project& p) {
    return ModelSet{p.name, p.navigation, p.data, p.ui, p.logic,
                    p.correspondences};
  }
};

// --------------------------------------------------------------------------
// Element lookup

using ModelElement =
    std::variant<const View*, const NavigationFlow*, const Entity*,
                 const Property*, const DataOperation*, const Reference*,
                 const UIElement*, const EcaRule*, const ActionNode*,
                 const Correspondence*>;

inline void forEachElement(
    const NavigationModel& m,
    const std::function<void(const ElementId&, ModelElement)>& fn) {
  for (const auto& v : m.views) fn(v.id, &v);
  for (const auto& f : m.flows) fn(f.id, &f);
}

inline void forEachElement(
    const DataModel& m,
    const std::function<void(const ElementId&, ModelElement)>& fn) {
  for (const auto& e : m.entities) {
    fn(e.id, &e);
    for (const auto& p : e.properties) fn(p.id, &p);
    for (const auto& o : e.operations) fn(o.id, &o);
    for (const auto& r : e.references) fn(r.id, &r);
  }
}

inline void forEachElement(
    const UIModel& m,
    const std::function<void(const ElementId&, ModelElement)>& fn) {
  m.walk([&](const UIElement& e) { fn(e.id, &e); });
}

inline void forEachElement(
    const BusinessLogicModel& m,
    const std::function<void(const ElementId&, ModelElement)>& fn) {
  for (const auto& r : m.rules) {
    fn(r.id, &r);
    for (const auto& n : r.body.nodes) fn(n.id, &n);
  }
}

inline void forEachElement(
    const std::vector<Correspondence>& corrs,
    const std::function<void(const ElementId&, ModelElement)>& fn) {
  for (const auto& c : corrs) fn(c.id, &c);
}

inline void forEachElement(
    const Project& p, ModelKind kind,
    const std::function<void(const ElementId&, ModelElement)>& fn) {
  switch (kind) {
    case ModelKind::Navigation: forEachElement(p.navigation, fn); break;
    case ModelKind::Data: forEachElement(p.data, fn); break;
    case ModelKind::UI: forEachElement(p.ui, fn); break;
    case ModelKind::BusinessLogic: forEachElement(p.logic, fn); break;
    case ModelKind::Correspondence: forEachElement(p.correspondences, fn); break;
  }
}

// Unique element with the given id, or absent. Dangling ids are a value, not
// an error.
inline std::optional<ModelElement> resolve(const Project& p,
                                           const ElementId& ref) {
  std::optional<ModelElement> found;
  forEachElement(p, ref.model, [&](const ElementId& id, ModelElement el) {
    if (!found && id == ref) found = el;
  });
  return found;
}

// Declaration-order element listing for one model of the project.
inline std::vector<ElementId> elementsOf(const Project& p, ModelKind kind) {
  std::vector<ElementId> out;
  forEachElement(p, kind,
                 [&](const ElementId& id, ModelElement) { out.push_back(id); });
  return out;
}

}  // namespace mvmob
