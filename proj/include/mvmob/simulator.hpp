// Deterministic interpreter for the ECA business logic: scenario scripts
// drive events into the rule set and every effect is written to an
// append-only trace. Identical (project, scenario) inputs always produce an
// identical trace.
#pragma once

#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvmob/model.hpp"
#include "mvmob/values.hpp"

namespace mvmob {

struct SeedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Node executions allowed per event delivery before a rule is cut off.
constexpr long long kStepBudget = 10000;

// --------------------------------------------------------------------------
// Store: entity instances with per-entity auto-incrementing ids.

inline std::optional<Value> coerceValue(PropertyType type, const Value& v) {
  switch (type) {
    case PropertyType::string:
      if (v.isString()) return v;
      return std::nullopt;
    case PropertyType::integer:
      if (v.isInt()) return v;
      return std::nullopt;
    case PropertyType::floating:
      if (v.isFloat()) return v;
      if (v.isInt()) return Value(static_cast<double>(v.asInt()));
      return std::nullopt;
    case PropertyType::boolean:
      if (v.isBool()) return v;
      return std::nullopt;
    case PropertyType::date:
      if (v.isDate()) return v;
      if (v.isString() && isIsoDate(v.asString())) return Value(Date{v.asString()});
      return std::nullopt;
    case PropertyType::url:
      if (v.isString()) return v;
      return std::nullopt;
  }
  return std::nullopt;
}

class Store {
 public:
  // Values are positional, one per declared property; a missing or
  // uncoercible value stores null. Ids start at 1 per entity and never reuse.
  std::shared_ptr<EntityInstance> create(const Entity& entity,
                                         const std::vector<Value>& values) {
    auto inst = std::make_shared<EntityInstance>();
    inst->entity = entity.name;
    inst->id = ++counters_[entity.name];
    for (size_t i = 0; i < entity.properties.size(); ++i) {
      const Property& prop = entity.properties[i];
      Value v = i < values.size() ? values[i] : Value(nullptr);
      auto coerced = v.isNull() ? std::optional<Value>(Value(nullptr))
                                : coerceValue(prop.type, v);
      inst->properties[prop.name] = coerced.value_or(Value(nullptr));
    }
    for (const auto& ref : entity.references)
      inst->references[ref.name] = Value(nullptr);
    instances_[entity.name].push_back(inst);
    return inst;
  }

  const std::vector<std::shared_ptr<EntityInstance>>& instances(
      const std::string& entity) const {
    static const std::vector<std::shared_ptr<EntityInstance>> empty;
    auto it = instances_.find(entity);
    return it == instances_.end() ? empty : it->second;
  }

  bool remove(const std::string& entity, long long id) {
    auto it = instances_.find(entity);
    if (it == instances_.end()) return false;
    auto& list = it->second;
    for (auto iter = list.begin(); iter != list.end(); ++iter) {
      if ((*iter)->id == id) {
        list.erase(iter);
        return true;
      }
    }
    return false;
  }

  long long count(const std::string& entity) const {
    auto it = instances_.find(entity);
    return it == instances_.end() ? 0 : static_cast<long long>(it->second.size());
  }

  std::map<std::string, long long> counts() const {
    std::map<std::string, long long> out;
    for (const auto& [entity, list] : instances_)
      out[entity] = static_cast<long long>(list.size());
    return out;
  }

 private:
  std::map<std::string, std::vector<std::shared_ptr<EntityInstance>>> instances_;
  std::map<std::string, long long> counters_;
};

// --------------------------------------------------------------------------
// Scenario scripts (.scn, JSON)

struct Stimulus {
  Event event;
  std::map<std::string, Value> payload;
};

struct SeedInstance {
  std::string entity;
  std::map<std::string, Value> values;
};

struct Scenario {
  std::vector<SeedInstance> seedData;
  Environment initialBindings;
  std::vector<Stimulus> stimuli;
};

inline Value jsonToValue(const nlohmann::json& j) {
  if (j.is_null()) return Value(nullptr);
  if (j.is_boolean()) return Value(j.get<bool>());
  if (j.is_number_integer()) return Value(j.get<long long>());
  if (j.is_number_float()) return Value(j.get<double>());
  if (j.is_string()) return Value(j.get<std::string>());
  throw ScenarioError("scenario values must be JSON scalars");
}

inline Event eventFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw ScenarioError("stimulus event must be an object with a \"kind\"");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "userInteraction") {
    auto gesture = gestureFromString(j.at("gesture").get<std::string>());
    if (!gesture) throw ScenarioError("unknown gesture in stimulus");
    auto target = parseQualifiedId(j.at("target").get<std::string>());
    if (!target || target->model != ModelKind::UI)
      throw ScenarioError("stimulus target must be a UI element reference");
    return Event::interaction(*gesture, std::move(*target));
  }
  if (kind == "deviceCapability") {
    auto cap = capabilityFromString(j.at("capability").get<std::string>());
    if (!cap) throw ScenarioError("unknown device capability in stimulus");
    return Event::device(*cap, j.at("signal").get<std::string>());
  }
  if (kind == "applicationSpecific")
    return Event::application(j.at("name").get<std::string>());
  throw ScenarioError("unknown event kind '" + kind + "'");
}

inline nlohmann::json eventToJson(const Event& e) {
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

inline Scenario parseScenario(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ScenarioError(std::string("scenario is not valid JSON: ") + e.what());
  }
  try {
    Scenario scenario;
    const nlohmann::json seeds = j.value("seed", nlohmann::json::array());
    for (const auto& seed : seeds) {
      SeedInstance s;
      s.entity = seed.at("entity").get<std::string>();
      const nlohmann::json values = seed.value("values", nlohmann::json::object());
      for (const auto& [key, value] : values.items())
        s.values[key] = jsonToValue(value);
      scenario.seedData.push_back(std::move(s));
    }
    const nlohmann::json bindings = j.value("bindings", nlohmann::json::object());
    for (const auto& [key, value] : bindings.items())
      scenario.initialBindings.bindings[key] = jsonToValue(value);
    const nlohmann::json stimuli = j.value("stimuli", nlohmann::json::array());
    for (const auto& stim : stimuli) {
      Stimulus s;
      s.event = eventFromJson(stim.at("event"));
      const nlohmann::json payload = stim.value("payload", nlohmann::json::object());
      for (const auto& [key, value] : payload.items())
        s.payload[key] = jsonToValue(value);
      scenario.stimuli.push_back(std::move(s));
    }
    return scenario;
  } catch (const nlohmann::json::exception& e) {
    throw ScenarioError(std::string("malformed scenario: ") + e.what());
  }
}

// --------------------------------------------------------------------------
// Trace

enum class TraceKind {
  eventDelivered,
  ruleFired,
  actionExecuted,
  conditionEvaluated,
  navigated,
  actionSkipped,
  budgetExhausted,
};

inline std::string_view toString(TraceKind k) {
  switch (k) {
    case TraceKind::eventDelivered: return "eventDelivered";
    case TraceKind::ruleFired: return "ruleFired";
    case TraceKind::actionExecuted: return "actionExecuted";
    case TraceKind::conditionEvaluated: return "conditionEvaluated";
    case TraceKind::navigated: return "navigated";
    case TraceKind::actionSkipped: return "actionSkipped";
    case TraceKind::budgetExhausted: return "budgetExhausted";
  }
  return "?";
}

struct TraceEvent {
  long long step = 0;
  TraceKind kind = TraceKind::eventDelivered;
  ElementId subject;
  nlohmann::json detail = nlohmann::json::object();
};

inline nlohmann::json toJson(const TraceEvent& e) {
  return {{"step", e.step},
          {"kind", std::string(toString(e.kind))},
          {"subject", e.subject.qualified()},
          {"detail", e.detail}};
}

// One trace event per line (JSON Lines).
inline std::string traceToJsonl(const std::vector<TraceEvent>& trace) {
  std::string out;
  for (const auto& e : trace) {
    out += toJson(e).dump();
    out += "\n";
  }
  return out;
}

// --------------------------------------------------------------------------
// Simulation state

struct UiElementState {
  bool visible = true;
  std::string text;

  bool operator==(const UiElementState&) const = default;
};

struct SimState {
  ElementId currentView;
  Store store;
  Environment env;
  std::map<ElementId, UiElementState> uiState;
  long long step = 0;
};

inline SimState initState(const Project& project, const Scenario& scenario) {
  SimState state;
  state.currentView = project.navigation.entryView;
  for (const auto& seed : scenario.seedData) {
    const Entity* entity = project.data.findEntity(seed.entity);
    if (!entity)
      throw SeedError("seed references unknown entity '" + seed.entity + "'");
    std::vector<Value> values;
    for (const auto& [name, value] : seed.values) {
      const Property* prop = entity->findProperty(name);
      if (!prop)
        throw SeedError("seed sets unknown property '" + seed.entity + "." +
                        name + "'");
      if (!value.isNull() && !coerceValue(prop->type, value))
        throw SeedError("seed value for '" + seed.entity + "." + name +
                        "' does not conform to type " +
                        std::string(toString(prop->type)));
    }
    for (const auto& prop : entity->properties) {
      auto it = seed.values.find(prop.name);
      values.push_back(it == seed.values.end() ? Value(nullptr) : it->second);
    }
    state.store.create(*entity, values);
  }
  state.env = scenario.initialBindings;
  project.ui.walk([&](const UIElement& e) {
    UiElementState s;
    auto text = e.attributes.find("text");
    if (text != e.attributes.end()) s.text = text->second;
    state.uiState[e.id] = s;
  });
  return state;
}

namespace detail {

class RuleRunner {
 public:
  RuleRunner(const Project& project, SimState& state,
             const std::map<std::string, Value>& payload,
             std::vector<TraceEvent>& trace, long long& budget)
      : project_(project), state_(state), payload_(payload), trace_(trace),
        budget_(budget) {}

  void runRule(const EcaRule& rule) {
    emit(TraceKind::ruleFired, rule.id, {{"rule", rule.name()}});
    const ActionNode* node = rule.body.entry();
    while (node) {
      if (budget_ <= 0) {
        emit(TraceKind::budgetExhausted, rule.id, {{"limit", kStepBudget}});
        return;
      }
      --budget_;
      execute(*node);
      node = selectNext(rule, *node);
    }
  }

 private:
  void emit(TraceKind kind, const ElementId& subject, nlohmann::json detail) {
    trace_.push_back({++state_.step, kind, subject, std::move(detail)});
  }

  const ActionNode* selectNext(const EcaRule& rule, const ActionNode& node) {
    for (const auto& edge : node.outgoing) {
      if (edge.condition) {
        bool result = evaluate(*edge.condition, state_.env);
        emit(TraceKind::conditionEvaluated, node.id,
             {{"condition", printExpr(*edge.condition)},
              {"target", edge.target.name()},
              {"result", result}});
        if (!result) continue;
      }
      return rule.body.findNode(edge.target);
    }
    return nullptr;
  }

  void execute(const ActionNode& node) {
    switch (node.action.kind) {
      case Action::Kind::dataOp: executeDataOp(node); return;
      case Action::Kind::uiUpdate: executeUiUpdate(node); return;
      case Action::Kind::navigate: executeNavigate(node); return;
      case Action::Kind::deviceAccess: executeDeviceAccess(node); return;
    }
  }

  void bind(const std::optional<std::string>& name, Value value) {
    if (name) state_.env.bindings[*name] = std::move(value);
  }

  void executeDataOp(const ActionNode& node) {
    const Action& a = node.action;
    const Entity* entity = project_.data.findEntity(a.entity);
    const DataOperation* op = entity ? entity->findOperation(a.operation) : nullptr;
    if (!op) {
      emit(TraceKind::actionSkipped, node.id,
           {{"reason", "unknownOperation"},
            {"operation", a.entity.dotted() + "." + a.operation}});
      return;
    }
    nlohmann::json detail{{"entity", entity->name}, {"operation", op->name}};
    switch (op->kind) {
      case OperationKind::create: {
        std::vector<Value> values;
        for (size_t i = 0; i < entity->properties.size(); ++i)
          values.push_back(i < a.args.size()
                               ? evalToValue(a.args[i], state_.env)
                               : Value(nullptr));
        auto inst = state_.store.create(*entity, values);
        bind(a.bindAs, Value(inst));
        detail["instance"] = inst->id;
        if (a.bindAs) detail["bound"] = *a.bindAs;
        emit(TraceKind::actionExecuted, node.id, detail);
        return;
      }
      case OperationKind::read: {
        const Expr* filter = a.args.empty() ? nullptr : &a.args.front();
        std::shared_ptr<EntityInstance> match;
        for (const auto& inst : state_.store.instances(entity->name)) {
          if (filter) {
            Environment scoped = state_.env;
            scoped.bindings["it"] = Value(inst);
            if (!evaluate(*filter, scoped)) continue;
          }
          match = inst;
          break;  // first match in id order
        }
        bind(a.bindAs, match ? Value(match) : Value(nullptr));
        detail["matched"] = match ? nlohmann::json(match->id) : nlohmann::json();
        if (a.bindAs) detail["bound"] = *a.bindAs;
        emit(TraceKind::actionExecuted, node.id, detail);
        return;
      }
      case OperationKind::update: {
        auto skip = [&](std::string_view reason) {
          emit(TraceKind::actionSkipped, node.id,
               {{"reason", std::string(reason)}, {"operation", "update"}});
        };
        if (a.args.size() != 3 ||
            a.args[0].kind != Expr::Kind::Operand ||
            a.args[0].lhs.kind != Operand::Kind::Path ||
            a.args[1].kind != Expr::Kind::Operand ||
            a.args[1].lhs.kind != Operand::Kind::Path ||
            a.args[1].lhs.path.size() != 1)
          return skip("badArguments");
        auto target = resolvePath(state_.env, a.args[0].lhs.path);
        if (!target || !target->isInstance() || !target->asInstance())
          return skip("noInstance");
        const std::string& propName = a.args[1].lhs.path.front();
        const Property* prop = entity->findProperty(propName);
        if (!prop) return skip("unknownProperty");
        Value v = evalToValue(a.args[2], state_.env);
        auto coerced = v.isNull() ? std::optional<Value>(Value(nullptr))
                                  : coerceValue(prop->type, v);
        if (!coerced) return skip("typeError");
        target->asInstance()->properties[propName] = *coerced;
        detail["instance"] = target->asInstance()->id;
        detail["property"] = propName;
        emit(TraceKind::actionExecuted, node.id, detail);
        return;
      }
      case OperationKind::del: {
        if (a.args.size() != 1 || a.args[0].kind != Expr::Kind::Operand ||
            a.args[0].lhs.kind != Operand::Kind::Path) {
          emit(TraceKind::actionSkipped, node.id,
               {{"reason", "badArguments"}, {"operation", "delete"}});
          return;
        }
        auto target = resolvePath(state_.env, a.args[0].lhs.path);
        if (!target || !target->isInstance() || !target->asInstance()) {
          emit(TraceKind::actionSkipped, node.id,
               {{"reason", "noInstance"}, {"operation", "delete"}});
          return;
        }
        auto inst = target->asInstance();
        if (!state_.store.remove(inst->entity, inst->id)) {
          emit(TraceKind::actionSkipped, node.id,
               {{"reason", "notInStore"}, {"operation", "delete"}});
          return;
        }
        detail["instance"] = inst->id;
        emit(TraceKind::actionExecuted, node.id, detail);
        return;
      }
      case OperationKind::custom: {
        // Custom operations have no defined effect; they bind null so rules
        // can still be exercised end to end.
        bind(a.bindAs, Value(nullptr));
        detail["effect"] = "none";
        emit(TraceKind::actionExecuted, node.id, detail);
        return;
      }
    }
  }

  void executeUiUpdate(const ActionNode& node) {
    const Action& a = node.action;
    auto it = state_.uiState.find(a.element);
    if (it == state_.uiState.end()) {
      emit(TraceKind::actionSkipped, node.id,
           {{"reason", "unknownElement"}, {"element", a.element.qualified()}});
      return;
    }
    nlohmann::json detail{{"element", a.element.qualified()},
                          {"update", std::string(toString(a.update))}};
    switch (a.update) {
      case UiUpdateKind::setText: {
        Value v = a.value ? evalToValue(*a.value, state_.env) : Value(nullptr);
        it->second.text = v.isNull() ? "" : renderValue(v);
        detail["text"] = it->second.text;
        break;
      }
      case UiUpdateKind::show: it->second.visible = true; break;
      case UiUpdateKind::hide: it->second.visible = false; break;
      case UiUpdateKind::refresh: break;  // traced, no state change
    }
    emit(TraceKind::actionExecuted, node.id, detail);
  }

  void executeNavigate(const ActionNode& node) {
    const Action& a = node.action;
    const NavigationFlow* flow = project_.navigation.findFlow(a.flow);
    if (!flow) {
      emit(TraceKind::actionSkipped, node.id,
           {{"reason", "unknownFlow"}, {"flow", a.flow.dotted()}});
      return;
    }
    if (flow->source != state_.currentView) {
      emit(TraceKind::actionSkipped, node.id,
           {{"reason", "sourceMismatch"},
            {"flow", flow->name()},
            {"currentView", state_.currentView.dotted()}});
      return;
    }
    if (flow->guard && !evaluate(*flow->guard, state_.env)) {
      emit(TraceKind::actionSkipped, node.id,
           {{"reason", "guardFalse"}, {"flow", flow->name()}});
      return;
    }
    emit(TraceKind::actionExecuted, node.id, {{"flow", flow->name()}});
    ElementId from = state_.currentView;
    state_.currentView = flow->target;
    emit(TraceKind::navigated, flow->id,
         {{"from", from.dotted()}, {"to", flow->target.dotted()}});
  }

  void executeDeviceAccess(const ActionNode& node) {
    const Action& a = node.action;
    auto it = payload_.find(a.request);
    Value value = it == payload_.end() ? Value(nullptr) : it->second;
    bind(a.bindAs, value);
    nlohmann::json detail{{"capability", std::string(toString(a.capability))},
                          {"request", a.request},
                          {"value", renderValue(value)}};
    if (a.bindAs) detail["bound"] = *a.bindAs;
    emit(TraceKind::actionExecuted, node.id, detail);
  }

  const Project& project_;
  SimState& state_;
  const std::map<std::string, Value>& payload_;
  std::vector<TraceEvent>& trace_;
  long long& budget_;
};

}  // namespace detail

// Delivers one stimulus: fires every matching rule in declaration order under
// a shared node-execution budget. The matching set is fixed against the view
// that received the event; a navigation performed by an earlier rule does not
// add or remove matches within the same delivery.
inline std::vector<TraceEvent> deliver(const Project& project, SimState& state,
                                       const Stimulus& stimulus) {
  std::vector<TraceEvent> trace;
  const Event& event = stimulus.event;
  ElementId subject = event.kind == Event::Kind::userInteraction
                          ? event.target
                          : state.currentView;
  trace.push_back({++state.step, TraceKind::eventDelivered, subject,
                   nlohmann::json{{"event", eventToJson(event)}}});

  std::vector<const EcaRule*> matching;
  for (const auto& rule : project.logic.rules) {
    if (rule.trigger != event) continue;
    if (rule.scope && *rule.scope != state.currentView) continue;
    matching.push_back(&rule);
  }

  long long budget = kStepBudget;
  detail::RuleRunner runner(project, state, stimulus.payload, trace, budget);
  for (const EcaRule* rule : matching) runner.runRule(*rule);
  return trace;
}

struct SimRun {
  SimState state;
  std::vector<TraceEvent> trace;
};

// Folds deliver over the scenario's stimuli. Propagates SeedError only.
inline SimRun run(const Project& project, const Scenario& scenario) {
  SimRun result;
  result.state = initState(project, scenario);
  for (const auto& stimulus : scenario.stimuli) {
    auto events = deliver(project, result.state, stimulus);
    result.trace.insert(result.trace.end(), events.begin(), events.end());
  }
  return result;
}

}  // namespace mvmob
