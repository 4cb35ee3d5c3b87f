// Pre-deployment static analyses over a valid project. Each pass is a pure
// function; findings are ordered by element id so repeated runs are
// byte-identical.
#pragma once

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <string>
#include <vector>

#include "mvmob/model.hpp"

namespace mvmob {

struct AnalysisFinding {
  ElementId element;
  Severity severity = Severity::warning;
  std::string message;

  bool operator==(const AnalysisFinding&) const = default;
};

struct AnalysisResult {
  std::string name;
  std::vector<AnalysisFinding> findings;
  std::map<std::string, long long> summary;

  bool hasErrors() const {
    return std::any_of(findings.begin(), findings.end(), [](const auto& f) {
      return f.severity == Severity::error;
    });
  }
};

inline nlohmann::json toJson(const AnalysisResult& r) {
  nlohmann::json findings = nlohmann::json::array();
  for (const auto& f : r.findings)
    findings.push_back({{"element", f.element.qualified()},
                        {"severity", std::string(toString(f.severity))},
                        {"message", f.message}});
  return nlohmann::json{
      {"name", r.name}, {"summary", r.summary}, {"findings", findings}};
}

namespace detail {

inline void sortFindings(std::vector<AnalysisFinding>& findings) {
  std::stable_sort(findings.begin(), findings.end(),
                   [](const AnalysisFinding& a, const AnalysisFinding& b) {
                     return std::tie(a.element.model, a.element.path, a.message) <
                            std::tie(b.element.model, b.element.path, b.message);
                   });
}

// Views reachable from the entry view with every flow treated as traversable
// (guards ignored: a may-reach over-approximation).
inline std::set<ElementId> reachableViews(const NavigationModel& nav) {
  std::set<ElementId> reached;
  if (!nav.findView(nav.entryView)) return reached;
  std::vector<ElementId> frontier{nav.entryView};
  reached.insert(nav.entryView);
  while (!frontier.empty()) {
    ElementId current = frontier.back();
    frontier.pop_back();
    for (const auto& flow : nav.flows) {
      if (flow.source != current) continue;
      if (nav.findView(flow.target) && reached.insert(flow.target).second)
        frontier.push_back(flow.target);
    }
  }
  return reached;
}

}  // namespace detail

inline AnalysisResult reachability(const Project& p) {
  AnalysisResult result;
  result.name = "reachability";
  std::set<ElementId> reached = detail::reachableViews(p.navigation);
  long long unreachable = 0;
  for (const auto& view : p.navigation.views) {
    if (reached.count(view.id)) continue;
    ++unreachable;
    result.findings.push_back({view.id, Severity::error,
                               "view '" + view.name +
                                   "' is unreachable from the entry view"});
  }
  result.summary["reachable"] = static_cast<long long>(reached.size());
  result.summary["unreachable"] = unreachable;
  detail::sortFindings(result.findings);
  return result;
}

// A flow is alive when something can exercise it: a navigate action or a
// NavItemFlow correspondence. Flows whose source is unreachable are dead for
// certain.
inline AnalysisResult deadFlows(const Project& p) {
  AnalysisResult result;
  result.name = "dead-flows";

  std::set<ElementId> referenced;
  for (const auto& rule : p.logic.rules)
    for (const auto& node : rule.body.nodes)
      if (node.action.kind == Action::Kind::navigate)
        referenced.insert(node.action.flow);
  for (const auto& c : p.correspondences)
    if (c.ctype == CorrespondenceType::NavItemFlow) referenced.insert(c.right);

  std::set<ElementId> reached = detail::reachableViews(p.navigation);
  long long unreferenced = 0, unreachableSource = 0;
  for (const auto& flow : p.navigation.flows) {
    if (!referenced.count(flow.id)) {
      ++unreferenced;
      result.findings.push_back(
          {flow.id, Severity::warning,
           "flow '" + flow.name() +
               "' is exercised by no navigate action or NavItemFlow correspondence"});
    }
    if (!reached.count(flow.source)) {
      ++unreachableSource;
      result.findings.push_back({flow.id, Severity::error,
                                 "flow '" + flow.name() +
                                     "' starts at unreachable view '" +
                                     flow.source.dotted() + "'"});
    }
  }
  result.summary["flows"] = static_cast<long long>(p.navigation.flows.size());
  result.summary["unreferenced"] = unreferenced;
  result.summary["unreachableSource"] = unreachableSource;
  detail::sortFindings(result.findings);
  return result;
}

inline bool isInteractiveKind(UIElementKind k) {
  return k == UIElementKind::button || k == UIElementKind::navigationItem ||
         k == UIElementKind::listItems || k == UIElementKind::menu;
}

inline AnalysisResult eventCoverage(const Project& p) {
  AnalysisResult result;
  result.name = "event-coverage";

  std::set<ElementId> targeted;
  for (const auto& rule : p.logic.rules)
    if (rule.trigger.kind == Event::Kind::userInteraction)
      targeted.insert(rule.trigger.target);

  long long interactive = 0, inert = 0;
  p.ui.walk([&](const UIElement& e) {
    if (!isInteractiveKind(e.kind)) return;
    ++interactive;
    if (!targeted.count(e.id)) {
      ++inert;
      result.findings.push_back({e.id, Severity::warning,
                                 "inert element: no rule reacts to '" +
                                     e.id.dotted() + "'"});
    }
  });

  std::set<ElementId> reached = detail::reachableViews(p.navigation);
  long long unreachableScope = 0;
  for (const auto& rule : p.logic.rules) {
    if (!rule.scope || reached.count(*rule.scope)) continue;
    ++unreachableScope;
    result.findings.push_back({rule.id, Severity::error,
                               "rule '" + rule.name() +
                                   "' is scoped to unreachable view '" +
                                   rule.scope->dotted() + "'"});
  }

  result.summary["interactive"] = interactive;
  result.summary["inert"] = inert;
  result.summary["unreachableScope"] = unreachableScope;
  detail::sortFindings(result.findings);
  return result;
}

namespace detail {

// Enumerates the simple cycles of one rule body in canonical form (each cycle
// rotated so its lexicographically smallest node comes first). Rule bodies
// are small; plain DFS enumeration is fine.
inline std::vector<std::vector<ElementId>> simpleCycles(const ControlGraph& g) {
  std::vector<ElementId> order;
  for (const auto& n : g.nodes) order.push_back(n.id);
  std::sort(order.begin(), order.end());

  std::set<std::vector<ElementId>> canonical;
  std::vector<ElementId> path;
  std::set<ElementId> onPath;

  std::function<void(const ElementId&, const ElementId&)> dfs =
      [&](const ElementId& start, const ElementId& current) {
        const ActionNode* node = g.findNode(current);
        if (!node) return;
        for (const auto& edge : node->outgoing) {
          if (edge.target == start) {
            std::vector<ElementId> cycle = path;
            auto smallest = std::min_element(cycle.begin(), cycle.end());
            std::rotate(cycle.begin(), smallest, cycle.end());
            canonical.insert(std::move(cycle));
            continue;
          }
          // Only extend to nodes greater than the start to avoid duplicates.
          if (edge.target < start || onPath.count(edge.target)) continue;
          if (!g.findNode(edge.target)) continue;
          path.push_back(edge.target);
          onPath.insert(edge.target);
          dfs(start, edge.target);
          onPath.erase(edge.target);
          path.pop_back();
        }
      };

  for (const auto& start : order) {
    path = {start};
    onPath = {start};
    dfs(start, start);
  }
  return {canonical.begin(), canonical.end()};
}

inline bool cycleHasCondition(const ControlGraph& g,
                              const std::vector<ElementId>& cycle) {
  for (size_t i = 0; i < cycle.size(); ++i) {
    const ActionNode* node = g.findNode(cycle[i]);
    const ElementId& next = cycle[(i + 1) % cycle.size()];
    if (!node) continue;
    for (const auto& edge : node->outgoing)
      if (edge.target == next && edge.condition) return true;
  }
  return false;
}

}  // namespace detail

// Cycles in rule bodies: a cycle with no conditioned edge can never leave the
// loop, which the simulator converts into a budget-exhausted finding at run
// time; this pass reports it statically.
inline AnalysisResult guardedCycleBudget(const Project& p) {
  AnalysisResult result;
  result.name = "guarded-cycles";
  long long unconditioned = 0, conditioned = 0;
  for (const auto& rule : p.logic.rules) {
    for (const auto& cycle : detail::simpleCycles(rule.body)) {
      std::string names;
      for (const auto& id : cycle) {
        if (!names.empty()) names += " -> ";
        names += id.name();
      }
      names += " -> " + cycle.front().name();
      if (detail::cycleHasCondition(rule.body, cycle)) {
        ++conditioned;
        result.findings.push_back(
            {cycle.front(), Severity::info,
             "conditional cycle in rule '" + rule.name() + "': " + names});
      } else {
        ++unconditioned;
        result.findings.push_back(
            {cycle.front(), Severity::error,
             "potential non-termination in rule '" + rule.name() +
                 "': unconditioned cycle " + names});
      }
    }
  }
  result.summary["unconditionedCycles"] = unconditioned;
  result.summary["conditionedCycles"] = conditioned;
  detail::sortFindings(result.findings);
  return result;
}

inline const std::vector<std::string>& analysisNames() {
  static const std::vector<std::string> names = {
      "reachability", "dead-flows", "event-coverage", "guarded-cycles"};
  return names;
}

inline std::optional<AnalysisResult> runAnalysis(const Project& p,
                                                 std::string_view name) {
  if (name == "reachability") return reachability(p);
  if (name == "dead-flows") return deadFlows(p);
  if (name == "event-coverage") return eventCoverage(p);
  if (name == "guarded-cycles") return guardedCycleBudget(p);
  return std::nullopt;
}

}  // namespace mvmob
