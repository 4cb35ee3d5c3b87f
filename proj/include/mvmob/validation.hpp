// Semantic validation: per-model (intra) checks and the cross-model
// correspondence type-checker. A project is valid iff no error-severity
// diagnostic is produced.
//
// Semantic diagnostics carry the offending element's qualified id in the
// span's file slot (there is no source position once models are in memory);
// the registry of VAL codes lives in docs/grammar.md.
#pragma once

#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "mvmob/model.hpp"

namespace mvmob {

struct ValidationReport {
  std::vector<Diagnostic> diagnostics;

  bool valid() const { return !hasErrors(diagnostics); }

  void merge(const ValidationReport& other) {
    diagnostics.insert(diagnostics.end(), other.diagnostics.begin(),
                       other.diagnostics.end());
  }
};

inline nlohmann::json toJson(const ValidationReport& report) {
  nlohmann::json diags = nlohmann::json::array();
  for (const auto& d : report.diagnostics) {
    diags.push_back({{"code", d.code},
                     {"severity", std::string(toString(d.severity))},
                     {"message", d.message},
                     {"file", d.span.file},
                     {"line", d.span.startLine},
                     {"col", d.span.startCol}});
  }
  return nlohmann::json{{"valid", report.valid()}, {"diagnostics", diags}};
}

namespace detail {

inline SourceSpan elementSpan(const ElementId& id) {
  return SourceSpan{id.qualified(), 1, 1, 1, 1};
}

inline void addFinding(ValidationReport& report, Severity severity,
                       std::string code, const ElementId& subject,
                       std::string message) {
  report.diagnostics.push_back({severity, std::move(code), std::move(message),
                                elementSpan(subject)});
}

}  // namespace detail

// --------------------------------------------------------------------------
// Intra-model checks

inline ValidationReport validateIntra(const NavigationModel& m) {
  ValidationReport report;
  for (const auto& f : m.flows) {
    if (!m.findView(f.source))
      detail::addFinding(report, Severity::error, "VAL100", f.id,
                         "flow '" + f.name() + "' references unknown source view '" +
                             f.source.dotted() + "'");
    if (!m.findView(f.target))
      detail::addFinding(report, Severity::error, "VAL100", f.id,
                         "flow '" + f.name() + "' references unknown target view '" +
                             f.target.dotted() + "'");
  }
  if (m.entryView.path.empty() || !m.findView(m.entryView)) {
    ElementId subject = m.entryView.path.empty()
                            ? makeId(ModelKind::Navigation, {"_entry"})
                            : m.entryView;
    detail::addFinding(report, Severity::error, "VAL102", subject,
                       "entry view '" +
                           (m.entryView.path.empty() ? std::string("<none>")
                                                     : m.entryView.dotted()) +
                           "' does not exist");
  }
  return report;
}

inline ValidationReport validateIntra(const DataModel& m) {
  ValidationReport report;
  for (const auto& e : m.entities) {
    for (const auto& r : e.references)
      if (!m.findEntity(r.targetEntity))
        detail::addFinding(report, Severity::error, "VAL110", r.id,
                           "reference '" + r.name + "' targets unknown entity '" +
                               r.targetEntity.dotted() + "'");
    for (const auto& op : e.operations)
      if (op.kind == OperationKind::custom && isCrudName(op.name))
        detail::addFinding(report, Severity::error, "VAL111", op.id,
                           "operation '" + op.name +
                               "' collides with the implicit CRUD operation");
    for (const auto& p : e.properties)
      if (isCrudName(p.name))
        detail::addFinding(report, Severity::error, "VAL111", p.id,
                           "property '" + p.name +
                               "' collides with the implicit CRUD operation");
    for (const auto& r : e.references)
      if (isCrudName(r.name))
        detail::addFinding(report, Severity::error, "VAL111", r.id,
                           "reference '" + r.name +
                               "' collides with the implicit CRUD operation");
  }
  return report;
}

inline ValidationReport validateIntra(const UIModel& m) {
  ValidationReport report;
  std::set<ElementId> seen;

  std::function<void(const UIElement&, const ElementId*)> walk =
      [&](const UIElement& e, const ElementId* parent) {
        if (!seen.insert(e.id).second)
          detail::addFinding(report, Severity::error, "VAL120", e.id,
                             "duplicate element id breaks the containment forest");
        bool pathConsistent =
            parent ? (e.id.path.size() == parent->path.size() + 1 &&
                      std::equal(parent->path.begin(), parent->path.end(),
                                 e.id.path.begin()))
                   : e.id.path.size() == 1;
        if (!pathConsistent)
          detail::addFinding(report, Severity::error, "VAL120", e.id,
                             "element id path does not match its containment");
        if (!e.isContainer() && !e.children.empty())
          detail::addFinding(report, Severity::error, "VAL121", e.id,
                             "basic element '" + e.name() + "' has children");
        for (const auto& child : e.children) walk(child, &e.id);
      };

  for (const auto& root : m.elements) {
    if (!root.isContainer())
      detail::addFinding(report, Severity::error, "VAL120", root.id,
                         "root element '" + root.name() + "' must be a container");
    walk(root, nullptr);
  }
  return report;
}

inline ValidationReport validateIntra(const BusinessLogicModel& m) {
  ValidationReport report;
  for (const auto& rule : m.rules) {
    if (rule.body.nodes.empty()) {
      detail::addFinding(report, Severity::error, "VAL130", rule.id,
                         "rule '" + rule.name() + "' has an empty body");
      continue;
    }
    for (const auto& node : rule.body.nodes)
      for (const auto& edge : node.outgoing)
        if (!rule.body.findNode(edge.target))
          detail::addFinding(report, Severity::error, "VAL130", node.id,
                             "control flow targets unknown node '" +
                                 edge.target.dotted() + "'");

    // Breadth-first sweep from the entry node.
    std::set<ElementId> reached{rule.body.nodes.front().id};
    std::vector<const ActionNode*> frontier{&rule.body.nodes.front()};
    while (!frontier.empty()) {
      const ActionNode* node = frontier.back();
      frontier.pop_back();
      for (const auto& edge : node->outgoing) {
        const ActionNode* next = rule.body.findNode(edge.target);
        if (next && reached.insert(next->id).second) frontier.push_back(next);
      }
    }
    for (const auto& node : rule.body.nodes)
      if (!reached.count(node.id))
        detail::addFinding(report, Severity::error, "VAL131", node.id,
                           "node '" + node.label() +
                               "' is unreachable from the rule entry node");
  }
  return report;
}

inline ValidationReport validateIntra(const ModelSet& models) {
  ValidationReport report;
  if (models.navigation) report.merge(validateIntra(*models.navigation));
  if (models.data) report.merge(validateIntra(*models.data));
  if (models.ui) report.merge(validateIntra(*models.ui));
  if (models.logic) report.merge(validateIntra(*models.logic));
  return report;
}

// --------------------------------------------------------------------------
// Cross-model checks. Precondition: every present model passed validateIntra
// (the validateProject pipeline enforces this). Checks that need an absent
// model are skipped, which is what makes stakeholder slices re-checkable.

inline ValidationReport validateCross(const ModelSet& models) {
  ValidationReport report;
  const auto* nav = models.navigation ? &*models.navigation : nullptr;
  const auto* data = models.data ? &*models.data : nullptr;
  const auto* ui = models.ui ? &*models.ui : nullptr;
  const auto* logic = models.logic ? &*models.logic : nullptr;

  auto isRootContainer = [&](const ElementId& id) -> const UIElement* {
    for (const auto& root : ui->elements)
      if (root.id == id) return &root;
    return nullptr;
  };

  // ViewMainContainer bookkeeping feeds VAL201/202/203 and NavItemFlow.
  std::map<ElementId, std::vector<const Correspondence*>> mainContainerOfView;
  std::map<ElementId, std::vector<ElementId>> viewsOfContainer;
  std::map<ElementId, ElementId> viewOfRoot;  // root container -> view

  for (const auto& c : models.correspondences) {
    auto [leftKind, rightKind] = endpointKinds(c.ctype);
    if (!models.has(leftKind) || !models.has(rightKind)) continue;

    std::string typeName(toString(c.ctype));
    auto kindCode = [&]() -> std::string {
      switch (c.ctype) {
        case CorrespondenceType::ViewMainContainer: return "VAL200";
        case CorrespondenceType::AttributeLabel: return "VAL210";
        case CorrespondenceType::ActionDataOperation: return "VAL220";
        case CorrespondenceType::ElementEntityBinding: return "VAL230";
        case CorrespondenceType::NavItemFlow: return "VAL231";
      }
      return "VAL200";
    }();

    if (c.left.model != leftKind || c.right.model != rightKind) {
      detail::addFinding(report, Severity::error, kindCode, c.id,
                         typeName + " correspondence '" + c.name() +
                             "' must link " + std::string(toString(leftKind)) +
                             " to " + std::string(toString(rightKind)));
      continue;
    }

    switch (c.ctype) {
      case CorrespondenceType::ViewMainContainer: {
        const View* view = nav->findView(c.left);
        if (!view) {
          detail::addFinding(report, Severity::error, "VAL200", c.id,
                             "left endpoint '" + c.left.qualified() +
                                 "' is not a view");
          break;
        }
        const UIElement* root = isRootContainer(c.right);
        if (!root || !root->isContainer()) {
          detail::addFinding(report, Severity::error, "VAL200", c.id,
                             "right endpoint '" + c.right.qualified() +
                                 "' is not a root container");
          break;
        }
        auto& list = mainContainerOfView[view->id];
        list.push_back(&c);
        if (list.size() == 2)
          detail::addFinding(report, Severity::error, "VAL201", c.id,
                             "view '" + view->name +
                                 "' has more than one main container");
        viewsOfContainer[root->id].push_back(view->id);
        viewOfRoot.emplace(root->id, view->id);
        break;
      }
      case CorrespondenceType::AttributeLabel: {
        const Entity* entity = c.left.path.size() == 2
                                   ? data->findEntity(c.left.path[0])
                                   : nullptr;
        const Property* prop =
            entity ? entity->findProperty(c.left.path[1]) : nullptr;
        if (!prop) {
          detail::addFinding(report, Severity::error, "VAL210", c.id,
                             "left endpoint '" + c.left.qualified() +
                                 "' is not an entity property");
          break;
        }
        const UIElement* el = ui->findElement(c.right);
        if (!el || el->kind != UIElementKind::label)
          detail::addFinding(report, Severity::error, "VAL210", c.id,
                             "right endpoint '" + c.right.qualified() +
                                 "' is not a label element");
        break;
      }
      case CorrespondenceType::ActionDataOperation: {
        const ActionNode* node = nullptr;
        if (c.left.path.size() == 2) {
          const EcaRule* rule =
              logic->findRule(makeId(ModelKind::BusinessLogic, {c.left.path[0]}));
          if (rule) node = rule->body.findNode(c.left);
        }
        if (!node || node->action.kind != Action::Kind::dataOp) {
          detail::addFinding(report, Severity::error, "VAL220", c.id,
                             "left endpoint '" + c.left.qualified() +
                                 "' is not a data operation action");
          break;
        }
        const Entity* entity = c.right.path.size() == 2
                                   ? data->findEntity(c.right.path[0])
                                   : nullptr;
        const DataOperation* op =
            entity ? entity->findOperation(c.right.path[1]) : nullptr;
        if (!op) {
          detail::addFinding(report, Severity::error, "VAL220", c.id,
                             "right endpoint '" + c.right.qualified() +
                                 "' is not a data operation");
          break;
        }
        if (node->action.entity != entity->id || node->action.operation != op->name)
          detail::addFinding(report, Severity::error, "VAL220", c.id,
                             "action '" + c.left.qualified() + "' invokes '" +
                                 node->action.entity.dotted() + "." +
                                 node->action.operation +
                                 "', not the linked operation '" +
                                 c.right.dotted() + "'");
        break;
      }
      case CorrespondenceType::ElementEntityBinding: {
        const UIElement* el = ui->findElement(c.left);
        if (!el || !el->isContainer()) {
          detail::addFinding(report, Severity::error, "VAL230", c.id,
                             "left endpoint '" + c.left.qualified() +
                                 "' is not a container element");
          break;
        }
        if (!data->findEntity(c.right))
          detail::addFinding(report, Severity::error, "VAL230", c.id,
                             "right endpoint '" + c.right.qualified() +
                                 "' is not an entity");
        break;
      }
      case CorrespondenceType::NavItemFlow:
        break;  // needs the ViewMainContainer map; handled below
    }
  }

  // NavItemFlow: the linked flow must start at the view owning the item.
  for (const auto& c : models.correspondences) {
    if (c.ctype != CorrespondenceType::NavItemFlow) continue;
    if (!ui || !nav) continue;
    if (c.left.model != ModelKind::UI || c.right.model != ModelKind::Navigation)
      continue;  // already reported above
    const UIElement* item = ui->findElement(c.left);
    if (!item || item->kind != UIElementKind::navigationItem) {
      detail::addFinding(report, Severity::error, "VAL231", c.id,
                         "left endpoint '" + c.left.qualified() +
                             "' is not a navigation item");
      continue;
    }
    const NavigationFlow* flow = nav->findFlow(c.right);
    if (!flow) {
      detail::addFinding(report, Severity::error, "VAL231", c.id,
                         "right endpoint '" + c.right.qualified() +
                             "' is not a navigation flow");
      continue;
    }
    ElementId rootId = makeId(ModelKind::UI, {c.left.path.front()});
    auto owner = viewOfRoot.find(rootId);
    if (owner == viewOfRoot.end()) {
      detail::addFinding(report, Severity::error, "VAL231", c.id,
                         "item's root container '" + rootId.qualified() +
                             "' is not the main container of any view");
      continue;
    }
    if (owner->second != flow->source)
      detail::addFinding(report, Severity::error, "VAL231", c.id,
                         "flow '" + flow->name() + "' starts at '" +
                             flow->source.dotted() + "' but the item lives in view '" +
                             owner->second.dotted() + "'");
  }

  if (nav && ui) {
    for (const auto& view : nav->views)
      if (!mainContainerOfView.count(view.id))
        detail::addFinding(report, Severity::warning, "VAL202", view.id,
                           "view '" + view.name + "' has no main container");
    for (const auto& [containerId, views] : viewsOfContainer)
      if (views.size() > 1) {
        std::string names;
        for (const auto& v : views) {
          if (!names.empty()) names += ", ";
          names += v.dotted();
        }
        detail::addFinding(report, Severity::warning, "VAL203", containerId,
                           "container serves as main container for views: " + names);
      }
  }

  // Business-logic references into the other models.
  if (logic) {
    for (const auto& rule : logic->rules) {
      if (rule.scope && nav && !nav->findView(*rule.scope))
        detail::addFinding(report, Severity::error, "VAL242", rule.id,
                           "rule scope '" + rule.scope->dotted() +
                               "' is not a declared view");
      if (rule.trigger.kind == Event::Kind::userInteraction && ui) {
        const UIElement* el = ui->findElement(rule.trigger.target);
        if (!el) {
          detail::addFinding(report, Severity::error, "VAL241", rule.id,
                             "event target '" + rule.trigger.target.qualified() +
                                 "' does not exist");
        } else if (el->isContainer() && el->kind != UIElementKind::menu &&
                   el->kind != UIElementKind::navigationBar &&
                   el->kind != UIElementKind::listItems) {
          detail::addFinding(report, Severity::error, "VAL241", rule.id,
                             "event target '" + rule.trigger.target.qualified() +
                                 "' must be a basic element or an interactive container");
        }
      }
      for (const auto& node : rule.body.nodes) {
        const Action& a = node.action;
        if (a.kind == Action::Kind::navigate && nav) {
          if (!nav->findFlow(a.flow))
            detail::addFinding(report, Severity::error, "VAL240", node.id,
                               "navigate action references unknown flow '" +
                                   a.flow.dotted() + "'");
        }
        if (a.kind == Action::Kind::dataOp && data) {
          const Entity* entity = data->findEntity(a.entity);
          if (!entity || !entity->findOperation(a.operation))
            detail::addFinding(report, Severity::error, "VAL243", node.id,
                               "data action references unknown operation '" +
                                   a.entity.dotted() + "." + a.operation + "'");
        }
      }
    }
  }

  // Navigation guards versus the statically declared environment shape: the
  // names bound by bindAs, with property shape checks when the binding's
  // entity is inferable.
  if (nav && logic) {
    std::map<std::string, const Entity*> boundEntity;  // name -> entity or null
    for (const auto& rule : logic->rules)
      for (const auto& node : rule.body.nodes) {
        const Action& a = node.action;
        if (!a.bindAs) continue;
        const Entity* entity = nullptr;
        if (a.kind == Action::Kind::dataOp && data) {
          const Entity* e = data->findEntity(a.entity);
          if (e && (a.operation == "create" || a.operation == "read")) entity = e;
        }
        auto [it, inserted] = boundEntity.emplace(*a.bindAs, entity);
        if (!inserted && it->second != entity) it->second = nullptr;  // ambiguous
      }
    for (const auto& flow : nav->flows) {
      if (!flow.guard) continue;
      for (const auto& path : freePaths(*flow.guard)) {
        auto it = boundEntity.find(path.front());
        if (it == boundEntity.end()) {
          detail::addFinding(report, Severity::warning, "VAL101", flow.id,
                             "guard path '" + pathText(path) +
                                 "' has no binding for '" + path.front() + "'");
          continue;
        }
        if (path.size() > 1 && it->second) {
          const Entity* e = it->second;
          const std::string& seg = path[1];
          if (seg != "id" && !e->findProperty(seg) && !e->findReference(seg))
            detail::addFinding(report, Severity::warning, "VAL101", flow.id,
                               "guard path '" + pathText(path) +
                                   "' names no property of entity '" + e->name + "'");
        }
      }
    }
  }

  sortDiagnostics(report.diagnostics);
  return report;
}

inline ValidationReport validateCross(const Project& p) {
  return validateCross(ModelSet::fromProject(p));
}

// Two-phase pipeline: viewpoint-local findings first; cross checks run only
// when every present model is individually valid.
inline ValidationReport validateProject(const ModelSet& models) {
  ValidationReport report = validateIntra(models);
  if (report.valid()) report.merge(validateCross(models));
  sortDiagnostics(report.diagnostics);
  return report;
}

inline ValidationReport validateProject(const Project& p) {
  return validateProject(ModelSet::fromProject(p));
}

}  // namespace mvmob
