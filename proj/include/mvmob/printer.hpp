// Canonical pretty-printers for the five DSLs: 2-space indent, one
// declaration per line, attributes sorted by name. parse(prettyPrint(m)) is
// structurally equal to m, and prettyPrint is a fixpoint on its own output.
#pragma once

#include <string>

#include "mvmob/model.hpp"

namespace mvmob {

inline std::string prettyPrint(const NavigationModel& m) {
  std::string out;
  for (const auto& v : m.views) {
    out += "view " + v.name + " " + quoteString(v.title);
    if (v.id == m.entryView) out += " entry";
    out += "\n";
  }
  if (!m.views.empty() && !m.flows.empty()) out += "\n";
  for (const auto& f : m.flows) {
    out += "flow " + f.name() + ": " + f.source.dotted() + " -> " +
           f.target.dotted();
    if (f.guard) out += " when " + printExpr(*f.guard);
    out += "\n";
  }
  return out;
}

inline std::string prettyPrint(const DataModel& m) {
  std::string out;
  for (const auto& e : m.entities) {
    if (!out.empty()) out += "\n";
    out += "entity " + e.name + " {\n";
    for (const auto& p : e.properties)
      out += "  prop " + p.name + ": " + std::string(toString(p.type)) + "\n";
    for (const auto& op : e.operations) {
      if (op.kind != OperationKind::custom) continue;  // implicit CRUD
      out += "  op " + op.name + "(";
      for (size_t i = 0; i < op.params.size(); ++i) {
        if (i) out += ", ";
        out += op.params[i].first + ": " +
               std::string(toString(op.params[i].second));
      }
      out += ")";
      if (op.returns) out += ": " + std::string(toString(*op.returns));
      out += "\n";
    }
    for (const auto& r : e.references)
      out += "  ref " + r.name + ": " + r.targetEntity.dotted() + " " +
             std::string(toString(r.cardinality)) + "\n";
    out += "}\n";
  }
  return out;
}

namespace detail {

inline void printUIElement(const UIElement& e, int indent, std::string& out) {
  out.append(indent * 2, ' ');
  out += std::string(toString(e.kind)) + " " + e.name();
  if (!e.attributes.empty()) {
    out += "(";
    bool first = true;
    for (const auto& [key, value] : e.attributes) {
      if (!first) out += ", ";
      first = false;
      out += key + " = " + quoteString(value);
    }
    out += ")";
  }
  if (e.isContainer()) {
    if (e.children.empty()) {
      out += " {}";
    } else {
      out += " {\n";
      for (const auto& child : e.children) printUIElement(child, indent + 1, out);
      out.append(indent * 2, ' ');
      out += "}";
    }
  }
  out += "\n";
}

}  // namespace detail

inline std::string prettyPrint(const UIModel& m) {
  std::string out;
  for (const auto& root : m.elements) {
    if (!out.empty()) out += "\n";
    detail::printUIElement(root, 0, out);
  }
  return out;
}

namespace detail {

inline std::string printEvent(const Event& e) {
  switch (e.kind) {
    case Event::Kind::userInteraction:
      return std::string(toString(e.gesture)) + " " + e.target.qualified();
    case Event::Kind::deviceCapability:
      return "device " + std::string(toString(e.capability)) + " " + e.signal;
    case Event::Kind::applicationSpecific:
      return "app " + e.name;
  }
  return "";
}

inline std::string printAction(const Action& a) {
  switch (a.kind) {
    case Action::Kind::dataOp: {
      std::string out = "data " + a.entity.qualified() + "." + a.operation + "(";
      for (size_t i = 0; i < a.args.size(); ++i) {
        if (i) out += ", ";
        out += printExpr(a.args[i]);
      }
      out += ")";
      if (a.bindAs) out += " bind " + *a.bindAs;
      return out;
    }
    case Action::Kind::uiUpdate: {
      std::string out = "ui " + a.element.qualified() + " " +
                        std::string(toString(a.update));
      if (a.value) out += " " + printExpr(*a.value);
      return out;
    }
    case Action::Kind::navigate:
      return "goto " + a.flow.dotted();
    case Action::Kind::deviceAccess: {
      std::string out =
          "device " + std::string(toString(a.capability)) + " " + a.request;
      if (a.bindAs) out += " bind " + *a.bindAs;
      return out;
    }
  }
  return "";
}

}  // namespace detail

inline std::string prettyPrint(const BusinessLogicModel& m) {
  std::string out;
  for (const auto& rule : m.rules) {
    if (!out.empty()) out += "\n";
    out += "rule " + rule.name();
    if (rule.scope) out += " in " + rule.scope->dotted();
    out += " on " + detail::printEvent(rule.trigger) + " do {\n";
    for (const auto& node : rule.body.nodes) {
      out += "  " + node.label() + ": " + detail::printAction(node.action);
      for (const auto& edge : node.outgoing) {
        out += " -> " + edge.target.name();
        if (edge.condition) out += " if " + printExpr(*edge.condition);
      }
      out += "\n";
    }
    out += "}\n";
  }
  return out;
}

inline std::string prettyPrint(const std::vector<Correspondence>& corrs) {
  std::string out;
  for (const auto& c : corrs) {
    out += "correspond " + std::string(toString(c.ctype)) + " " + c.name() +
           " <-> " + c.left.qualified() + " " + c.right.qualified() + "\n";
  }
  return out;
}

}  // namespace mvmob
