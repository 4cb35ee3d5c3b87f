// Code generation: (a) the app bundle, a single fully resolved JSON document
// joining the four models through their correspondences, and (b) a static
// navigable hypertext prototype, one document per view. Both outputs are
// byte-identical across regenerations.
#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvmob/validation.hpp"

namespace mvmob {

struct GenError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void requireValid(const Project& p) {
  if (!validateProject(p).valid())
    throw GenError("project '" + p.name + "' has validation errors");
}

inline nlohmann::json uiTreeJson(const UIElement& e) {
  nlohmann::json children = nlohmann::json::array();
  for (const auto& child : e.children) children.push_back(uiTreeJson(child));
  return {{"id", e.id.qualified()},
          {"name", e.name()},
          {"kind", std::string(toString(e.kind))},
          {"attributes", e.attributes},
          {"children", children}};
}

inline nlohmann::json actionJson(const Action& a) {
  switch (a.kind) {
    case Action::Kind::dataOp: {
      nlohmann::json args = nlohmann::json::array();
      for (const auto& arg : a.args) args.push_back(printExpr(arg));
      return {{"kind", "dataOp"},
              {"entity", a.entity.qualified()},
              {"operation", a.operation},
              {"args", args},
              {"bind", a.bindAs ? nlohmann::json(*a.bindAs) : nlohmann::json()}};
    }
    case Action::Kind::uiUpdate:
      return {{"kind", "uiUpdate"},
              {"element", a.element.qualified()},
              {"update", std::string(toString(a.update))},
              {"value", a.value ? nlohmann::json(printExpr(*a.value))
                                : nlohmann::json()}};
    case Action::Kind::navigate:
      return {{"kind", "navigate"}, {"flow", a.flow.qualified()}};
    case Action::Kind::deviceAccess:
      return {{"kind", "deviceAccess"},
              {"capability", std::string(toString(a.capability))},
              {"request", a.request},
              {"bind", a.bindAs ? nlohmann::json(*a.bindAs) : nlohmann::json()}};
  }
  return nullptr;
}

inline nlohmann::json eventJsonForBundle(const Event& e) {
  switch (e.kind) {
    case Event::Kind::userInteraction:
      return {{"kind", "userInteraction"},
              {"gesture", std::string(toString(e.gesture))},
              {"target", e.target.qualified()}};
    case Event::Kind::deviceCapability:
      return {{"kind", "deviceCapability"},
              {"capability", std::string(toString(e.capability))},
              {"signal", e.signal}};
    case Event::Kind::applicationSpecific:
      return {{"kind", "applicationSpecific"}, {"name", e.name}};
  }
  return nullptr;
}

inline nlohmann::json ruleJson(const EcaRule& r) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& node : r.body.nodes) {
    nlohmann::json outgoing = nlohmann::json::array();
    for (const auto& edge : node.outgoing)
      outgoing.push_back(
          {{"target", edge.target.qualified()},
           {"condition", edge.condition ? nlohmann::json(printExpr(*edge.condition))
                                        : nlohmann::json()}});
    nodes.push_back({{"id", node.id.qualified()},
                     {"label", node.label()},
                     {"action", actionJson(node.action)},
                     {"outgoing", outgoing}});
  }
  return {{"id", r.id.qualified()},
          {"name", r.name()},
          {"scope", r.scope ? nlohmann::json(r.scope->qualified()) : nlohmann::json()},
          {"trigger", eventJsonForBundle(r.trigger)},
          {"nodes", nodes}};
}

}  // namespace detail

// The fully resolved, joined JSON form of a valid project. Object keys are
// serialized in sorted order and arrays keep declaration order, so repeated
// generation is byte-identical.
inline nlohmann::json generateBundle(const Project& p) {
  detail::requireValid(p);

  // View id -> main container, via ViewMainContainer correspondences.
  std::map<ElementId, const UIElement*> mainContainer;
  for (const auto& c : p.correspondences) {
    if (c.ctype != CorrespondenceType::ViewMainContainer) continue;
    for (const auto& root : p.ui.elements)
      if (root.id == c.right) mainContainer.emplace(c.left, &root);
  }

  nlohmann::json views = nlohmann::json::array();
  for (const auto& view : p.navigation.views) {
    nlohmann::json flows = nlohmann::json::array();
    for (const auto& flow : p.navigation.flows) {
      if (flow.source != view.id) continue;
      flows.push_back(
          {{"id", flow.id.qualified()},
           {"name", flow.name()},
           {"target", flow.target.qualified()},
           {"guard", flow.guard ? nlohmann::json(printExpr(*flow.guard))
                                : nlohmann::json()}});
    }
    nlohmann::json rules = nlohmann::json::array();
    for (const auto& rule : p.logic.rules)
      if (!rule.scope || *rule.scope == view.id)
        rules.push_back(rule.id.qualified());
    auto mc = mainContainer.find(view.id);
    views.push_back({{"id", view.id.qualified()},
                     {"name", view.name},
                     {"title", view.title},
                     {"entry", view.id == p.navigation.entryView},
                     {"mainContainer", mc == mainContainer.end()
                                           ? nlohmann::json()
                                           : detail::uiTreeJson(*mc->second)},
                     {"flows", flows},
                     {"rules", rules}});
  }

  nlohmann::json entities = nlohmann::json::array();
  for (const auto& e : p.data.entities) {
    nlohmann::json properties = nlohmann::json::array();
    for (const auto& prop : e.properties)
      properties.push_back(
          {{"name", prop.name}, {"type", std::string(toString(prop.type))}});
    nlohmann::json operations = nlohmann::json::array();
    for (const auto& op : e.operations) {
      nlohmann::json params = nlohmann::json::array();
      for (const auto& [name, type] : op.params)
        params.push_back({{"name", name}, {"type", std::string(toString(type))}});
      operations.push_back(
          {{"name", op.name},
           {"kind", std::string(toString(op.kind))},
           {"params", params},
           {"returns", op.returns ? nlohmann::json(std::string(toString(*op.returns)))
                                  : nlohmann::json()}});
    }
    nlohmann::json references = nlohmann::json::array();
    for (const auto& ref : e.references)
      references.push_back({{"name", ref.name},
                            {"target", ref.targetEntity.qualified()},
                            {"cardinality", std::string(toString(ref.cardinality))}});
    entities.push_back({{"id", e.id.qualified()},
                        {"name", e.name},
                        {"properties", properties},
                        {"operations", operations},
                        {"references", references}});
  }

  nlohmann::json rules = nlohmann::json::array();
  for (const auto& rule : p.logic.rules) rules.push_back(detail::ruleJson(rule));

  nlohmann::json correspondences = nlohmann::json::array();
  for (const auto& c : p.correspondences)
    correspondences.push_back({{"id", c.id.qualified()},
                               {"type", std::string(toString(c.ctype))},
                               {"left", c.left.qualified()},
                               {"right", c.right.qualified()}});

  return nlohmann::json{{"name", p.name},
                        {"entryView", p.navigation.entryView.qualified()},
                        {"views", views},
                        {"entities", entities},
                        {"rules", rules},
                        {"correspondences", correspondences}};
}

inline std::string bundleText(const Project& p) {
  return generateBundle(p).dump(2) + "\n";
}

// --------------------------------------------------------------------------
// Prototype generation

namespace detail {

inline std::string htmlEscape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out += c;
    }
  }
  return out;
}

struct PrototypeLinks {
  // navigationItem element -> linked flow (NavItemFlow)
  std::map<ElementId, const NavigationFlow*> itemFlow;
  // label element -> entity property (AttributeLabel)
  std::map<ElementId, ElementId> labelProperty;
};

inline std::string elementText(const UIElement& e) {
  auto it = e.attributes.find("text");
  return it != e.attributes.end() ? it->second : e.name();
}

inline void renderElement(const UIElement& e, const PrototypeLinks& links,
                          int indent, std::string& out) {
  std::string pad(indent * 2, ' ');
  std::string id = htmlEscape(e.id.dotted());
  if (e.isContainer()) {
    out += pad + "<div class=\"ui-" + std::string(toString(e.kind)) +
           "\" id=\"" + id + "\">\n";
    for (const auto& child : e.children)
      renderElement(child, links, indent + 1, out);
    out += pad + "</div>\n";
    return;
  }
  switch (e.kind) {
    case UIElementKind::navigationItem: {
      auto link = links.itemFlow.find(e.id);
      if (link != links.itemFlow.end()) {
        const NavigationFlow* flow = link->second;
        out += pad + "<a class=\"ui-navigationItem\" id=\"" + id + "\" href=\"" +
               htmlEscape(flow->target.dotted()) + ".html\">" +
               htmlEscape(elementText(e));
        if (flow->guard)
          out += "<span class=\"guard\">when " +
                 htmlEscape(printExpr(*flow->guard)) + "</span>";
        out += "</a>\n";
      } else {
        out += pad + "<span class=\"ui-navigationItem\" id=\"" + id + "\">" +
               htmlEscape(elementText(e)) + "</span>\n";
      }
      return;
    }
    case UIElementKind::label: {
      auto bound = links.labelProperty.find(e.id);
      std::string text = bound != links.labelProperty.end()
                             ? "{" + bound->second.dotted() + "}"
                             : elementText(e);
      out += pad + "<span class=\"ui-label\" id=\"" + id + "\">" +
             htmlEscape(text) + "</span>\n";
      return;
    }
    case UIElementKind::button:
      out += pad + "<button class=\"ui-button\" id=\"" + id + "\">" +
             htmlEscape(elementText(e)) + "</button>\n";
      return;
    case UIElementKind::textInput: {
      auto ph = e.attributes.find("placeholder");
      out += pad + "<input class=\"ui-textInput\" id=\"" + id +
             "\" placeholder=\"" +
             htmlEscape(ph != e.attributes.end() ? ph->second : e.name()) +
             "\">\n";
      return;
    }
    case UIElementKind::map:
    case UIElementKind::image:
    default:
      out += pad + "<div class=\"ui-" + std::string(toString(e.kind)) +
             "\" id=\"" + id + "\">" + htmlEscape(elementText(e)) + "</div>\n";
      return;
  }
}

inline const char* kPrototypeStyles =
    "body { font-family: sans-serif; margin: 0; background: #f4f4f4; }\n"
    ".view-header { background: #222; color: #fff; padding: 12px 16px; }\n"
    ".view-header h1 { margin: 0; font-size: 20px; }\n"
    ".view-name { margin: 2px 0 0; font-size: 12px; color: #aaa; }\n"
    ".view-body { max-width: 420px; margin: 16px auto; }\n"
    "[class^=\"ui-\"] { display: block; margin: 6px; }\n"
    ".ui-plainContainer, .ui-grid, .ui-listItems, .ui-menu, .ui-navigationBar {\n"
    "  border: 1px dashed #bbb; border-radius: 6px; padding: 8px;\n"
    "  background: #fff; }\n"
    ".ui-navigationBar { background: #e8effa; }\n"
    ".ui-listItems { background: #fbf7e8; }\n"
    ".ui-navigationItem { color: #1456a0; }\n"
    ".ui-button { padding: 6px 14px; }\n"
    ".ui-map, .ui-image { background: #ddd; text-align: center;\n"
    "  padding: 24px 0; color: #666; }\n"
    ".guard { margin-left: 6px; font-size: 11px; color: #a04d14;\n"
    "  font-style: italic; }\n"
    ".empty { color: #999; font-style: italic; }\n";

}  // namespace detail

// Pure view of the prototype: (file name, content) pairs in a fixed order
// (index, views in declaration order, stylesheet).
inline std::vector<std::pair<std::string, std::string>> prototypeFiles(
    const Project& p) {
  detail::requireValid(p);

  detail::PrototypeLinks links;
  for (const auto& c : p.correspondences) {
    if (c.ctype == CorrespondenceType::NavItemFlow) {
      if (const NavigationFlow* flow = p.navigation.findFlow(c.right))
        links.itemFlow.emplace(c.left, flow);
    } else if (c.ctype == CorrespondenceType::AttributeLabel) {
      links.labelProperty.emplace(c.right, c.left);
    }
  }

  std::map<ElementId, const UIElement*> mainContainer;
  for (const auto& c : p.correspondences) {
    if (c.ctype != CorrespondenceType::ViewMainContainer) continue;
    for (const auto& root : p.ui.elements)
      if (root.id == c.right) mainContainer.emplace(c.left, &root);
  }

  std::vector<std::pair<std::string, std::string>> files;

  const View* entry = p.navigation.findView(p.navigation.entryView);
  std::string entryName = entry ? entry->name : "";
  std::string index;
  index += "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n";
  index += "<meta http-equiv=\"refresh\" content=\"0; url=" +
           detail::htmlEscape(entryName) + ".html\">\n";
  index += "<title>" + detail::htmlEscape(p.name) + "</title>\n</head>\n<body>\n";
  index += "<p>Redirecting to the entry view: " + detail::htmlEscape(entryName) +
           "</p>\n</body>\n</html>\n";
  files.emplace_back("index.html", std::move(index));

  for (const auto& view : p.navigation.views) {
    std::string doc;
    doc += "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n";
    doc += "<title>" + detail::htmlEscape(view.title) + "</title>\n";
    doc += "<link rel=\"stylesheet\" href=\"styles.css\">\n</head>\n<body>\n";
    doc += "<header class=\"view-header\">\n<h1>" +
           detail::htmlEscape(view.title) + "</h1>\n";
    doc += "<p class=\"view-name\">" + detail::htmlEscape(view.id.qualified()) +
           "</p>\n</header>\n";
    doc += "<main class=\"view-body\">\n";
    auto mc = mainContainer.find(view.id);
    if (mc != mainContainer.end()) {
      detail::renderElement(*mc->second, links, 0, doc);
    } else {
      doc += "<p class=\"empty\">view has no main container</p>\n";
    }
    doc += "</main>\n</body>\n</html>\n";
    files.emplace_back(view.name + ".html", std::move(doc));
  }

  files.emplace_back("styles.css", detail::kPrototypeStyles);
  return files;
}

// Writes the prototype into outDir (created if needed); returns the generated
// paths in write order.
inline std::vector<std::filesystem::path> generatePrototype(
    const Project& p, const std::filesystem::path& outDir) {
  auto files = prototypeFiles(p);
  std::error_code ec;
  std::filesystem::create_directories(outDir, ec);
  if (ec)
    throw IoError("cannot create output directory '" + outDir.string() +
                  "': " + ec.message());
  std::vector<std::filesystem::path> written;
  for (const auto& [name, content] : files) {
    std::filesystem::path path = outDir / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out << content;
    written.push_back(path);
  }
  return written;
}

}  // namespace mvmob
