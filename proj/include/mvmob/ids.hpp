// Element identity: every model element is addressed by the model it lives in
// plus a dot-joined path of identifier segments, e.g. UI:homeRoot.navbar.item.
#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mvmob {

enum class ModelKind { Navigation, Data, UI, BusinessLogic, Correspondence };

constexpr std::array<ModelKind, 5> kAllModelKinds = {
    ModelKind::Navigation, ModelKind::Data, ModelKind::UI,
    ModelKind::BusinessLogic, ModelKind::Correspondence};

inline std::string_view toString(ModelKind kind) {
  switch (kind) {
    case ModelKind::Navigation: return "Navigation";
    case ModelKind::Data: return "Data";
    case ModelKind::UI: return "UI";
    case ModelKind::BusinessLogic: return "BusinessLogic";
    case ModelKind::Correspondence: return "Correspondence";
  }
  return "?";
}

inline std::optional<ModelKind> modelKindFromString(std::string_view text) {
  for (ModelKind kind : kAllModelKinds)
    if (text == toString(kind)) return kind;
  return std::nullopt;
}

inline bool isIdentifier(std::string_view text) {
  if (text.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(text[0])) && text[0] != '_')
    return false;
  for (char c : text.substr(1))
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

struct ElementId {
  ModelKind model = ModelKind::Navigation;
  std::vector<std::string> path;  // non-empty, identifier segments

  bool operator==(const ElementId&) const = default;
  auto operator<=>(const ElementId&) const = default;

  // Last path segment; the element's local name.
  const std::string& name() const { return path.back(); }

  std::string dotted() const {
    std::string out;
    for (const auto& seg : path) {
      if (!out.empty()) out += '.';
      out += seg;
    }
    return out;
  }

  // Qualified form used everywhere ids are serialized: "UI:homeRoot.navbar".
  std::string qualified() const {
    return std::string(toString(model)) + ":" + dotted();
  }
};

inline ElementId makeId(ModelKind model, std::vector<std::string> path) {
  return ElementId{model, std::move(path)};
}

inline ElementId childId(const ElementId& parent, std::string segment) {
  ElementId id = parent;
  id.path.push_back(std::move(segment));
  return id;
}

// Parses "ModelKind:seg.seg"; rejects malformed text with nullopt.
inline std::optional<ElementId> parseQualifiedId(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  auto kind = modelKindFromString(text.substr(0, colon));
  if (!kind) return std::nullopt;
  ElementId id{*kind, {}};
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    auto dot = rest.find('.');
    std::string_view seg =
        dot == std::string_view::npos ? rest : rest.substr(0, dot);
    if (!isIdentifier(seg)) return std::nullopt;
    id.path.emplace_back(seg);
    if (dot == std::string_view::npos) break;
    rest = rest.substr(dot + 1);
    if (rest.empty()) return std::nullopt;  // trailing dot
  }
  if (id.path.empty()) return std::nullopt;
  return id;
}

}  // namespace mvmob
