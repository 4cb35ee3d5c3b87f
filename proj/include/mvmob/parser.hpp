// Parsers for the five textual DSLs (.nav, .data, .ui, .bl, .corr).
//
// All parsers recover at declaration boundaries so one file can report several
// problems. Any error diagnostic makes the result bottom (no model): recovery
// is for diagnostics only, never for producing half-formed models.
// Cross-references (flow endpoints, correspondence endpoints, action targets)
// are parsed permissively; the validation passes resolve them.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mvmob/lexer.hpp"
#include "mvmob/model.hpp"

namespace mvmob {

template <typename M>
struct ParseResult {
  std::optional<M> model;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return model.has_value(); }
};

namespace detail {

class DslParser {
 public:
  DslParser(std::string_view text, std::string file) : file_(std::move(file)) {
    Lexer lexer(text, file_);
    tokens_ = lexer.run(diags_);
  }

  std::vector<Diagnostic> takeDiagnostics() {
    sortDiagnostics(diags_);
    return std::move(diags_);
  }

  bool failed() const { return hasErrors(diags_); }

 protected:
  const Token& cur() const { return tokens_[pos_]; }
  const Token& peek(size_t ahead = 1) const {
    size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  bool atEnd() const { return cur().kind == TokenKind::EndOfFile; }
  Token take() { return tokens_[pos_++]; }

  void error(const Token& at, std::string code, std::string message) {
    diags_.push_back({Severity::error, std::move(code), std::move(message), at.span});
  }

  void expectedError(const std::string& expected) {
    std::string found(tokenKindName(cur().kind));
    if (cur().kind == TokenKind::Ident) found += " '" + cur().text + "'";
    error(cur(), "PAR001", "expected " + expected + ", found " + found);
  }

  bool expect(TokenKind kind, const std::string& what) {
    if (cur().kind == kind) {
      ++pos_;
      return true;
    }
    expectedError(what);
    return false;
  }

  bool expectKeyword(std::string_view word) {
    if (cur().isIdent(word)) {
      ++pos_;
      return true;
    }
    expectedError("'" + std::string(word) + "'");
    return false;
  }

  std::optional<std::string> expectIdent(const std::string& what) {
    if (cur().kind == TokenKind::Ident) return take().text;
    expectedError(what);
    return std::nullopt;
  }

  std::optional<std::string> expectString(const std::string& what) {
    if (cur().kind == TokenKind::String) return take().text;
    expectedError(what);
    return std::nullopt;
  }

  std::optional<Expr> parseCondition() {
    ExprParser parser(tokens_, pos_, diags_);
    return parser.parse();
  }

  // ModelKind ":" segment ("." segment)* — any model kind accepted here.
  std::optional<ElementId> parseQualifiedRef() {
    if (cur().kind != TokenKind::Ident) {
      expectedError("a model-qualified reference");
      return std::nullopt;
    }
    auto kind = modelKindFromString(cur().text);
    if (!kind) {
      error(cur(), "PAR006", "unknown model kind '" + cur().text + "'");
      return std::nullopt;
    }
    ++pos_;
    if (!expect(TokenKind::Colon, "':' after model kind")) return std::nullopt;
    ElementId id{*kind, {}};
    auto seg = expectIdent("an identifier");
    if (!seg) return std::nullopt;
    id.path.push_back(std::move(*seg));
    while (cur().kind == TokenKind::Dot) {
      ++pos_;
      auto next = expectIdent("an identifier after '.'");
      if (!next) return std::nullopt;
      id.path.push_back(std::move(*next));
    }
    return id;
  }

  // Skips to the next declaration keyword at brace depth zero (or EOF).
  void syncToDeclaration(const std::set<std::string_view>& starters) {
    int depth = 0;
    while (!atEnd()) {
      const Token& t = cur();
      if (t.kind == TokenKind::LBrace) ++depth;
      if (t.kind == TokenKind::RBrace && depth > 0) --depth;
      if (depth == 0 && t.kind == TokenKind::Ident && starters.count(t.text)) return;
      ++pos_;
    }
  }

  std::string file_;
  std::vector<Token> tokens_;
  std::vector<Diagnostic> diags_;
  size_t pos_ = 0;
};

// ---------------------------------------------------------------------------

class NavigationParser : public DslParser {
 public:
  using DslParser::DslParser;

  std::optional<NavigationModel> parse() {
    NavigationModel model;
    std::set<std::string> names;  // views and flows share the id namespace
    std::vector<Token> entryMarks;
    static const std::set<std::string_view> starters = {"view", "flow"};

    while (!atEnd()) {
      if (cur().isIdent("view")) {
        if (!parseView(model, names, entryMarks)) syncToDeclaration(starters);
      } else if (cur().isIdent("flow")) {
        if (!parseFlow(model, names)) syncToDeclaration(starters);
      } else {
        expectedError("'view' or 'flow'");
        ++pos_;
        syncToDeclaration(starters);
      }
    }

    if (entryMarks.empty()) {
      diags_.push_back({Severity::error, "NAM010", "no entry view declared",
                        SourceSpan{file_, 1, 1, 1, 1}});
    }
    for (size_t i = 1; i < entryMarks.size(); ++i)
      error(entryMarks[i], "NAM011", "multiple entry views declared");

    if (failed()) return std::nullopt;
    return model;
  }

 private:
  bool parseView(NavigationModel& model, std::set<std::string>& names,
                 std::vector<Token>& entryMarks) {
    ++pos_;  // view
    Token nameTok = cur();
    auto name = expectIdent("a view name");
    if (!name) return false;
    auto title = expectString("the view title string");
    if (!title) return false;
    bool entry = false;
    if (cur().isIdent("entry")) {
      entry = true;
      entryMarks.push_back(take());
    }
    if (!names.insert(*name).second)
      error(nameTok, "NAM001", "duplicate name '" + *name + "' in navigation model");
    View v;
    v.id = makeId(ModelKind::Navigation, {*name});
    v.name = *name;
    v.title = *title;
    if (entry) model.entryView = v.id;
    model.views.push_back(std::move(v));
    return true;
  }

  bool parseFlow(NavigationModel& model, std::set<std::string>& names) {
    ++pos_;  // flow
    Token nameTok = cur();
    auto name = expectIdent("a flow name");
    if (!name) return false;
    if (!expect(TokenKind::Colon, "':' after flow name")) return false;
    auto source = expectIdent("the source view name");
    if (!source) return false;
    if (!expect(TokenKind::Arrow, "'->'")) return false;
    auto target = expectIdent("the target view name");
    if (!target) return false;
    NavigationFlow f;
    f.id = makeId(ModelKind::Navigation, {*name});
    f.source = makeId(ModelKind::Navigation, {*source});
    f.target = makeId(ModelKind::Navigation, {*target});
    if (cur().isIdent("when")) {
      ++pos_;
      auto guard = parseCondition();
      if (!guard) return false;
      f.guard = std::move(*guard);
    }
    if (!names.insert(*name).second)
      error(nameTok, "NAM001", "duplicate name '" + *name + "' in navigation model");
    model.flows.push_back(std::move(f));
    return true;
  }
};

// ---------------------------------------------------------------------------

class DataParser : public DslParser {
 public:
  using DslParser::DslParser;

  std::optional<DataModel> parse() {
    DataModel model;
    std::set<std::string> entityNames;
    static const std::set<std::string_view> starters = {"entity"};

    while (!atEnd()) {
      if (cur().isIdent("entity")) {
        if (!parseEntity(model, entityNames)) syncToDeclaration(starters);
      } else {
        expectedError("'entity'");
        ++pos_;
        syncToDeclaration(starters);
      }
    }
    if (failed()) return std::nullopt;
    return model;
  }

 private:
  bool parseEntity(DataModel& model, std::set<std::string>& entityNames) {
    ++pos_;  // entity
    Token nameTok = cur();
    auto name = expectIdent("an entity name");
    if (!name) return false;
    if (!names_insert(entityNames, nameTok, *name, "data model")) {
      // still parse the body for further diagnostics
    }
    if (!expect(TokenKind::LBrace, "'{'")) return false;

    ElementId entityId = makeId(ModelKind::Data, {*name});
    std::vector<Property> properties;
    std::vector<DataOperation> customOps;
    std::vector<Reference> references;
    std::set<std::string> memberNames;

    auto syncMember = [&] {
      while (!atEnd() && cur().kind != TokenKind::RBrace &&
             !(cur().kind == TokenKind::Ident &&
               (cur().text == "prop" || cur().text == "op" ||
                cur().text == "ref" || cur().text == "entity")))
        ++pos_;
      return cur().kind != TokenKind::Ident || cur().text != "entity";
    };

    while (!atEnd() && cur().kind != TokenKind::RBrace) {
      bool ok;
      if (cur().isIdent("prop")) {
        ok = parseProperty(entityId, properties, memberNames);
      } else if (cur().isIdent("op")) {
        ok = parseOperation(entityId, customOps, memberNames);
      } else if (cur().isIdent("ref")) {
        ok = parseReference(entityId, references, memberNames);
      } else {
        expectedError("'prop', 'op', 'ref', or '}'");
        ok = false;
      }
      if (!ok && !syncMember()) return false;  // ran into the next entity decl
    }
    if (!expect(TokenKind::RBrace, "'}'")) return false;

    model.entities.push_back(makeEntity(*name, std::move(properties),
                                        std::move(customOps),
                                        std::move(references)));
    return true;
  }

  bool names_insert(std::set<std::string>& names, const Token& at,
                    const std::string& name, const std::string& where) {
    if (!names.insert(name).second) {
      error(at, "NAM001", "duplicate name '" + name + "' in " + where);
      return false;
    }
    return true;
  }

  std::optional<PropertyType> expectPropertyType() {
    if (cur().kind == TokenKind::Ident) {
      if (auto t = propertyTypeFromString(cur().text)) {
        ++pos_;
        return t;
      }
      error(cur(), "PAR006", "unknown property type '" + cur().text + "'");
      return std::nullopt;
    }
    expectedError("a property type");
    return std::nullopt;
  }

  bool parseProperty(const ElementId& entityId, std::vector<Property>& out,
                     std::set<std::string>& memberNames) {
    ++pos_;  // prop
    Token nameTok = cur();
    auto name = expectIdent("a property name");
    if (!name) return false;
    if (!expect(TokenKind::Colon, "':'")) return false;
    auto type = expectPropertyType();
    if (!type) return false;
    names_insert(memberNames, nameTok, *name, "entity '" + entityId.name() + "'");
    Property p;
    p.id = childId(entityId, *name);
    p.name = *name;
    p.type = *type;
    out.push_back(std::move(p));
    return true;
  }

  bool parseOperation(const ElementId& entityId, std::vector<DataOperation>& out,
                      std::set<std::string>& memberNames) {
    ++pos_;  // op
    Token nameTok = cur();
    auto name = expectIdent("an operation name");
    if (!name) return false;
    if (!expect(TokenKind::LParen, "'('")) return false;
    DataOperation op;
    op.id = childId(entityId, *name);
    op.name = *name;
    op.kind = OperationKind::custom;
    if (cur().kind != TokenKind::RParen) {
      while (true) {
        auto param = expectIdent("a parameter name");
        if (!param) return false;
        if (!expect(TokenKind::Colon, "':'")) return false;
        auto type = expectPropertyType();
        if (!type) return false;
        op.params.emplace_back(*param, *type);
        if (cur().kind != TokenKind::Comma) break;
        ++pos_;
      }
    }
    if (!expect(TokenKind::RParen, "')'")) return false;
    if (cur().kind == TokenKind::Colon) {
      ++pos_;
      auto type = expectPropertyType();
      if (!type) return false;
      op.returns = *type;
    }
    names_insert(memberNames, nameTok, *name, "entity '" + entityId.name() + "'");
    out.push_back(std::move(op));
    return true;
  }

  bool parseReference(const ElementId& entityId, std::vector<Reference>& out,
                      std::set<std::string>& memberNames) {
    ++pos_;  // ref
    Token nameTok = cur();
    auto name = expectIdent("a reference name");
    if (!name) return false;
    if (!expect(TokenKind::Colon, "':'")) return false;
    auto target = expectIdent("the target entity name");
    if (!target) return false;
    Cardinality card;
    if (cur().isIdent("one")) {
      card = Cardinality::one;
      ++pos_;
    } else if (cur().isIdent("many")) {
      card = Cardinality::many;
      ++pos_;
    } else {
      expectedError("'one' or 'many'");
      return false;
    }
    names_insert(memberNames, nameTok, *name, "entity '" + entityId.name() + "'");
    Reference r;
    r.id = childId(entityId, *name);
    r.name = *name;
    r.targetEntity = makeId(ModelKind::Data, {*target});
    r.cardinality = card;
    out.push_back(std::move(r));
    return true;
  }
};

// ---------------------------------------------------------------------------

class UIParser : public DslParser {
 public:
  using DslParser::DslParser;

  std::optional<UIModel> parse() {
    UIModel model;
    std::set<std::string> rootNames;
    while (!atEnd()) {
      auto kind = elementKindHere();
      if (!kind) {
        expectedError("a UI element kind");
        ++pos_;
        syncToAnyKind();
        continue;
      }
      Token kindTok = cur();
      auto element = parseElement(std::nullopt, rootNames);
      if (!element) {
        syncToAnyKind();
        continue;
      }
      if (!element->isContainer())
        error(kindTok, "NAM003",
              "root element '" + element->name() + "' must be a container");
      model.elements.push_back(std::move(*element));
    }
    if (failed()) return std::nullopt;
    return model;
  }

 private:
  std::optional<UIElementKind> elementKindHere() const {
    if (cur().kind != TokenKind::Ident) return std::nullopt;
    return uiElementKindFromString(cur().text);
  }

  void syncToAnyKind() {
    while (!atEnd()) {
      if (elementKindHere() &&
          (pos_ == 0 || tokens_[pos_ - 1].kind == TokenKind::RBrace))
        return;
      ++pos_;
    }
  }

  std::optional<UIElement> parseElement(const std::optional<ElementId>& parent,
                                        std::set<std::string>& siblingNames) {
    auto kind = elementKindHere();
    if (!kind) {
      expectedError("a UI element kind");
      return std::nullopt;
    }
    ++pos_;
    Token nameTok = cur();
    auto name = expectIdent("an element name");
    if (!name) return std::nullopt;
    if (!siblingNames.insert(*name).second)
      error(nameTok, "NAM001",
            "duplicate element name '" + *name + "' under the same parent");

    UIElement element;
    element.kind = *kind;
    element.id = parent ? childId(*parent, *name) : makeId(ModelKind::UI, {*name});

    if (cur().kind == TokenKind::LParen) {
      ++pos_;
      if (cur().kind != TokenKind::RParen) {
        while (true) {
          Token attrTok = cur();
          auto attr = expectIdent("an attribute name");
          if (!attr) return std::nullopt;
          if (!expect(TokenKind::Assign, "'='")) return std::nullopt;
          auto value = expectString("the attribute value string");
          if (!value) return std::nullopt;
          if (!element.attributes.emplace(*attr, *value).second)
            error(attrTok, "NAM001", "duplicate attribute '" + *attr + "'");
          if (cur().kind != TokenKind::Comma) break;
          ++pos_;
        }
      }
      if (!expect(TokenKind::RParen, "')'")) return std::nullopt;
    }

    if (cur().kind == TokenKind::LBrace) {
      if (!element.isContainer()) {
        error(cur(), "NAM004",
              "basic element '" + *name + "' cannot contain children");
        return std::nullopt;
      }
      ++pos_;
      std::set<std::string> childNames;
      while (!atEnd() && cur().kind != TokenKind::RBrace) {
        auto child = parseElement(element.id, childNames);
        if (!child) return std::nullopt;
        element.children.push_back(std::move(*child));
      }
      if (!expect(TokenKind::RBrace, "'}'")) return std::nullopt;
    } else if (element.isContainer()) {
      expectedError("'{' opening the container body");
      return std::nullopt;
    }
    return element;
  }
};

// ---------------------------------------------------------------------------

class LogicParser : public DslParser {
 public:
  using DslParser::DslParser;

  std::optional<BusinessLogicModel> parse() {
    BusinessLogicModel model;
    std::set<std::string> ruleNames;
    static const std::set<std::string_view> starters = {"rule"};
    while (!atEnd()) {
      if (cur().isIdent("rule")) {
        if (!parseRule(model, ruleNames)) syncToDeclaration(starters);
      } else {
        expectedError("'rule'");
        ++pos_;
        syncToDeclaration(starters);
      }
    }
    if (failed()) return std::nullopt;
    return model;
  }

 private:
  bool parseRule(BusinessLogicModel& model, std::set<std::string>& ruleNames) {
    ++pos_;  // rule
    Token nameTok = cur();
    auto name = expectIdent("a rule name");
    if (!name) return false;
    if (!ruleNames.insert(*name).second)
      error(nameTok, "NAM001", "duplicate rule name '" + *name + "'");

    EcaRule rule;
    rule.id = makeId(ModelKind::BusinessLogic, {*name});

    if (cur().isIdent("in")) {
      ++pos_;
      auto scope = expectIdent("a view name after 'in'");
      if (!scope) return false;
      rule.scope = makeId(ModelKind::Navigation, {*scope});
    }
    if (!expectKeyword("on")) return false;
    auto trigger = parseEvent();
    if (!trigger) return false;
    rule.trigger = std::move(*trigger);
    if (!expectKeyword("do")) return false;
    if (!expect(TokenKind::LBrace, "'{'")) return false;

    std::set<std::string> labels;
    struct PendingEdge {
      size_t nodeIndex;
      Token labelTok;
      std::string label;
      std::optional<Expr> condition;
    };
    std::vector<PendingEdge> edges;

    while (!atEnd() && cur().kind != TokenKind::RBrace) {
      Token labelTok = cur();
      auto label = expectIdent("a node label");
      if (!label) return false;
      if (!labels.insert(*label).second)
        error(labelTok, "NAM001",
              "duplicate node label '" + *label + "' in rule '" + *name + "'");
      if (!expect(TokenKind::Colon, "':' after the node label")) return false;
      auto action = parseAction();
      if (!action) return false;

      ActionNode node;
      node.id = childId(rule.id, *label);
      node.action = std::move(*action);
      size_t nodeIndex = rule.body.nodes.size();

      while (cur().kind == TokenKind::Arrow) {
        ++pos_;
        Token targetTok = cur();
        auto target = expectIdent("a target node label");
        if (!target) return false;
        PendingEdge edge{nodeIndex, targetTok, *target, std::nullopt};
        if (cur().isIdent("if")) {
          ++pos_;
          auto cond = parseCondition();
          if (!cond) return false;
          edge.condition = std::move(*cond);
        }
        edges.push_back(std::move(edge));
      }
      rule.body.nodes.push_back(std::move(node));
    }
    if (!expect(TokenKind::RBrace, "'}'")) return false;

    if (rule.body.nodes.empty())
      error(nameTok, "NAM005",
            "rule '" + *name + "' must contain at least one action node");

    for (auto& edge : edges) {
      if (!labels.count(edge.label)) {
        error(edge.labelTok, "NAM002",
              "undefined node label '" + edge.label + "' in rule '" + *name + "'");
        continue;
      }
      rule.body.nodes[edge.nodeIndex].outgoing.push_back(
          ControlFlow{childId(rule.id, edge.label), std::move(edge.condition)});
    }

    model.rules.push_back(std::move(rule));
    return true;
  }

  std::optional<Event> parseEvent() {
    if (cur().kind != TokenKind::Ident) {
      expectedError("an event");
      return std::nullopt;
    }
    if (auto gesture = gestureFromString(cur().text)) {
      ++pos_;
      auto target = parseQualifiedRef();
      if (!target) return std::nullopt;
      return Event::interaction(*gesture, std::move(*target));
    }
    if (cur().isIdent("device")) {
      ++pos_;
      auto cap = expectCapability();
      if (!cap) return std::nullopt;
      auto signal = expectIdent("the capability signal name");
      if (!signal) return std::nullopt;
      return Event::device(*cap, std::move(*signal));
    }
    if (cur().isIdent("app")) {
      ++pos_;
      auto name = expectIdent("the application event name");
      if (!name) return std::nullopt;
      return Event::application(std::move(*name));
    }
    expectedError("'tap', 'longPress', 'swipe', 'device', or 'app'");
    return std::nullopt;
  }

  std::optional<Capability> expectCapability() {
    if (cur().kind == TokenKind::Ident) {
      if (auto cap = capabilityFromString(cur().text)) {
        ++pos_;
        return cap;
      }
      error(cur(), "PAR006", "unknown device capability '" + cur().text + "'");
      return std::nullopt;
    }
    expectedError("a device capability");
    return std::nullopt;
  }

  std::optional<Action> parseAction() {
    if (cur().isIdent("data")) return parseDataAction();
    if (cur().isIdent("ui")) return parseUiAction();
    if (cur().isIdent("goto")) {
      ++pos_;
      auto flow = expectIdent("a navigation flow name");
      if (!flow) return std::nullopt;
      return Action::navigate(makeId(ModelKind::Navigation, {*flow}));
    }
    if (cur().isIdent("device")) {
      ++pos_;
      auto cap = expectCapability();
      if (!cap) return std::nullopt;
      auto request = expectIdent("the capability request name");
      if (!request) return std::nullopt;
      return Action::deviceAccess(*cap, std::move(*request), parseBind());
    }
    expectedError("'data', 'ui', 'goto', or 'device'");
    return std::nullopt;
  }

  std::optional<std::string> parseBind() {
    if (!cur().isIdent("bind")) return std::nullopt;
    ++pos_;
    auto name = expectIdent("a binding name");
    if (!name) {
      return std::nullopt;  // diagnostic already emitted
    }
    return name;
  }

  std::optional<Action> parseDataAction() {
    ++pos_;  // data
    Token refTok = cur();
    auto ref = parseQualifiedRef();
    if (!ref) return std::nullopt;
    if (ref->model != ModelKind::Data || ref->path.size() != 2) {
      error(refTok, "PAR006",
            "data action target must have the form Data:<entity>.<operation>");
      return std::nullopt;
    }
    ElementId entity = makeId(ModelKind::Data, {ref->path[0]});
    std::string operation = ref->path[1];
    if (!expect(TokenKind::LParen, "'('")) return std::nullopt;
    std::vector<Expr> args;
    if (cur().kind != TokenKind::RParen) {
      while (true) {
        auto arg = parseCondition();
        if (!arg) return std::nullopt;
        args.push_back(std::move(*arg));
        if (cur().kind != TokenKind::Comma) break;
        ++pos_;
      }
    }
    if (!expect(TokenKind::RParen, "')'")) return std::nullopt;
    return Action::dataOp(std::move(entity), std::move(operation),
                          std::move(args), parseBind());
  }

  std::optional<Action> parseUiAction() {
    ++pos_;  // ui
    Token refTok = cur();
    auto element = parseQualifiedRef();
    if (!element) return std::nullopt;
    if (element->model != ModelKind::UI) {
      error(refTok, "PAR006", "ui action target must be a UI element reference");
      return std::nullopt;
    }
    if (cur().kind != TokenKind::Ident) {
      expectedError("'setText', 'show', 'hide', or 'refresh'");
      return std::nullopt;
    }
    auto update = uiUpdateKindFromString(cur().text);
    if (!update) {
      error(cur(), "PAR006", "unknown ui update '" + cur().text + "'");
      return std::nullopt;
    }
    ++pos_;
    std::optional<Expr> value;
    if (*update == UiUpdateKind::setText) {
      auto expr = parseCondition();
      if (!expr) return std::nullopt;
      value = std::move(*expr);
    }
    return Action::uiUpdate(std::move(*element), *update, std::move(value));
  }
};

// ---------------------------------------------------------------------------

class CorrespondenceParser : public DslParser {
 public:
  using DslParser::DslParser;

  std::optional<std::vector<Correspondence>> parse() {
    std::vector<Correspondence> out;
    std::set<std::string> names;
    static const std::set<std::string_view> starters = {"correspond"};
    while (!atEnd()) {
      if (cur().isIdent("correspond")) {
        if (!parseOne(out, names)) syncToDeclaration(starters);
      } else {
        expectedError("'correspond'");
        ++pos_;
        syncToDeclaration(starters);
      }
    }
    if (failed()) return std::nullopt;
    return out;
  }

 private:
  bool parseOne(std::vector<Correspondence>& out, std::set<std::string>& names) {
    ++pos_;  // correspond
    if (cur().kind != TokenKind::Ident) {
      expectedError("a correspondence type");
      return false;
    }
    auto ctype = correspondenceTypeFromString(cur().text);
    if (!ctype) {
      error(cur(), "PAR006", "unknown correspondence type '" + cur().text + "'");
      return false;
    }
    ++pos_;
    Token nameTok = cur();
    auto name = expectIdent("a correspondence name");
    if (!name) return false;
    if (!names.insert(*name).second)
      error(nameTok, "NAM001", "duplicate correspondence name '" + *name + "'");
    if (!expect(TokenKind::BiArrow, "'<->'")) return false;
    auto left = parseQualifiedRef();
    if (!left) return false;
    auto right = parseQualifiedRef();
    if (!right) return false;
    Correspondence c;
    c.id = makeId(ModelKind::Correspondence, {*name});
    c.ctype = *ctype;
    c.left = std::move(*left);
    c.right = std::move(*right);
    out.push_back(std::move(c));
    return true;
  }
};

}  // namespace detail

inline ParseResult<NavigationModel> parseNavigation(std::string_view text,
                                                    const std::string& file) {
  detail::NavigationParser parser(text, file);
  ParseResult<NavigationModel> result;
  result.model = parser.parse();
  result.diagnostics = parser.takeDiagnostics();
  return result;
}

inline ParseResult<DataModel> parseData(std::string_view text,
                                        const std::string& file) {
  detail::DataParser parser(text, file);
  ParseResult<DataModel> result;
  result.model = parser.parse();
  result.diagnostics = parser.takeDiagnostics();
  return result;
}

inline ParseResult<UIModel> parseUI(std::string_view text,
                                    const std::string& file) {
  detail::UIParser parser(text, file);
  ParseResult<UIModel> result;
  result.model = parser.parse();
  result.diagnostics = parser.takeDiagnostics();
  return result;
}

inline ParseResult<BusinessLogicModel> parseLogic(std::string_view text,
                                                  const std::string& file) {
  detail::LogicParser parser(text, file);
  ParseResult<BusinessLogicModel> result;
  result.model = parser.parse();
  result.diagnostics = parser.takeDiagnostics();
  return result;
}

inline ParseResult<std::vector<Correspondence>> parseCorrespondences(
    std::string_view text, const std::string& file) {
  detail::CorrespondenceParser parser(text, file);
  ParseResult<std::vector<Correspondence>> result;
  result.model = parser.parse();
  result.diagnostics = parser.takeDiagnostics();
  return result;
}

}  // namespace mvmob
