// Project loading: the mvmob.json manifest names one file per viewpoint; any
// may be absent (stakeholder slices are partial projects). Also the slice
// export used by the "project" command.
#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mvmob/codegen.hpp"
#include "mvmob/parser.hpp"
#include "mvmob/printer.hpp"
#include "mvmob/projection.hpp"

namespace mvmob {

inline std::string readFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void writeFile(const std::filesystem::path& path,
                      const std::string& content) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << content;
}

struct ProjectManifest {
  std::string name;
  std::filesystem::path dir;
  // Relative paths, keyed by the manifest field that named them.
  std::map<ModelKind, std::filesystem::path> files;

  bool has(ModelKind kind) const { return files.count(kind) != 0; }
  std::filesystem::path pathOf(ModelKind kind) const {
    return dir / files.at(kind);
  }
};

inline const char* manifestKey(ModelKind kind) {
  switch (kind) {
    case ModelKind::Navigation: return "navigation";
    case ModelKind::Data: return "data";
    case ModelKind::UI: return "ui";
    case ModelKind::BusinessLogic: return "logic";
    case ModelKind::Correspondence: return "correspondences";
  }
  return "?";
}

inline const char* fileExtension(ModelKind kind) {
  switch (kind) {
    case ModelKind::Navigation: return ".nav";
    case ModelKind::Data: return ".data";
    case ModelKind::UI: return ".ui";
    case ModelKind::BusinessLogic: return ".bl";
    case ModelKind::Correspondence: return ".corr";
  }
  return "";
}

inline ProjectManifest loadManifest(const std::filesystem::path& projectDir) {
  std::filesystem::path manifestPath = projectDir / "mvmob.json";
  if (!std::filesystem::exists(manifestPath))
    throw IoError("no mvmob.json manifest in '" + projectDir.string() + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(readFile(manifestPath));
  } catch (const nlohmann::json::exception& e) {
    throw IoError("malformed manifest '" + manifestPath.string() +
                  "': " + e.what());
  }
  ProjectManifest manifest;
  manifest.dir = projectDir;
  if (!j.is_object() || !j.contains("name") || !j["name"].is_string())
    throw IoError("manifest must be an object with a \"name\" string");
  manifest.name = j["name"].get<std::string>();
  for (ModelKind kind : kAllModelKinds) {
    const char* key = manifestKey(kind);
    if (!j.contains(key)) continue;
    if (!j[key].is_string())
      throw IoError(std::string("manifest field \"") + key + "\" must be a path");
    manifest.files[kind] = j[key].get<std::string>();
  }
  return manifest;
}

struct LoadedProject {
  ModelSet models;
  std::vector<Diagnostic> parseDiagnostics;

  bool parseOk() const { return !hasErrors(parseDiagnostics); }
};

// Parses every file the manifest names. IO problems throw IoError; parse
// problems land in parseDiagnostics and leave that model absent.
inline LoadedProject loadProject(const ProjectManifest& manifest) {
  LoadedProject loaded;
  loaded.models.name = manifest.name;

  auto collect = [&](auto& result) {
    loaded.parseDiagnostics.insert(loaded.parseDiagnostics.end(),
                                   result.diagnostics.begin(),
                                   result.diagnostics.end());
    return std::move(result.model);
  };

  if (manifest.has(ModelKind::Navigation)) {
    auto path = manifest.pathOf(ModelKind::Navigation);
    auto result = parseNavigation(readFile(path), path.filename().string());
    loaded.models.navigation = collect(result);
  }
  if (manifest.has(ModelKind::Data)) {
    auto path = manifest.pathOf(ModelKind::Data);
    auto result = parseData(readFile(path), path.filename().string());
    loaded.models.data = collect(result);
  }
  if (manifest.has(ModelKind::UI)) {
    auto path = manifest.pathOf(ModelKind::UI);
    auto result = parseUI(readFile(path), path.filename().string());
    loaded.models.ui = collect(result);
  }
  if (manifest.has(ModelKind::BusinessLogic)) {
    auto path = manifest.pathOf(ModelKind::BusinessLogic);
    auto result = parseLogic(readFile(path), path.filename().string());
    loaded.models.logic = collect(result);
  }
  if (manifest.has(ModelKind::Correspondence)) {
    auto path = manifest.pathOf(ModelKind::Correspondence);
    auto result = parseCorrespondences(readFile(path), path.filename().string());
    if (auto corrs = collect(result)) loaded.models.correspondences = *corrs;
  }
  return loaded;
}

inline LoadedProject loadProject(const std::filesystem::path& projectDir) {
  return loadProject(loadManifest(projectDir));
}

// --------------------------------------------------------------------------
// Slice export: a stakeholder slice written as an ordinary project directory,
// so the slice runs through the exact same toolchain.

inline std::vector<std::pair<std::string, std::string>> sliceFiles(
    const ModelSet& slice) {
  std::vector<std::pair<std::string, std::string>> files;
  std::string base = slice.name.empty() ? std::string("project") : slice.name;
  for (auto& c : base)
    c = std::isalnum(static_cast<unsigned char>(c))
            ? static_cast<char>(std::tolower(static_cast<unsigned char>(c)))
            : '_';

  nlohmann::json manifest{{"name", slice.name}};
  auto add = [&](ModelKind kind, const std::string& content) {
    std::string file = base + fileExtension(kind);
    manifest[manifestKey(kind)] = file;
    files.emplace_back(std::move(file), content);
  };
  if (slice.navigation) add(ModelKind::Navigation, prettyPrint(*slice.navigation));
  if (slice.data) add(ModelKind::Data, prettyPrint(*slice.data));
  if (slice.ui) add(ModelKind::UI, prettyPrint(*slice.ui));
  if (slice.logic) add(ModelKind::BusinessLogic, prettyPrint(*slice.logic));
  add(ModelKind::Correspondence, prettyPrint(slice.correspondences));

  files.emplace_back("mvmob.json", manifest.dump(2) + "\n");
  return files;
}

inline std::vector<std::filesystem::path> writeSlice(
    const ModelSet& slice, const std::filesystem::path& outDir) {
  std::vector<std::filesystem::path> written;
  for (const auto& [name, content] : sliceFiles(slice)) {
    std::filesystem::path path = outDir / name;
    writeFile(path, content);
    written.push_back(path);
  }
  return written;
}

}  // namespace mvmob
