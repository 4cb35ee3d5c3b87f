// Diagnostics shared by the DSL frontend, validation, and analyses.
// Codes are registered in docs/grammar.md (PAR/NAM/VAL families).
#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace mvmob {

enum class Severity { error, warning, info };

inline std::string_view toString(Severity s) {
  switch (s) {
    case Severity::error: return "error";
    case Severity::warning: return "warning";
    case Severity::info: return "info";
  }
  return "?";
}

struct SourceSpan {
  std::string file;
  int startLine = 1, startCol = 1;  // 1-based, inclusive
  int endLine = 1, endCol = 1;

  bool operator==(const SourceSpan&) const = default;
};

struct Diagnostic {
  Severity severity = Severity::error;
  std::string code;  // e.g. "PAR001", "VAL210"
  std::string message;
  SourceSpan span;

  bool operator==(const Diagnostic&) const = default;

  // Editor-friendly line format: file:line:col: severity CODE message
  std::string toLine() const {
    return span.file + ":" + std::to_string(span.startLine) + ":" +
           std::to_string(span.startCol) + ": " + std::string(toString(severity)) +
           " " + code + " " + message;
  }
};

inline bool hasErrors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
    return d.severity == Severity::error;
  });
}

// Deterministic report order: (file, line, col, code).
inline void sortDiagnostics(std::vector<Diagnostic>& diags) {
  std::stable_sort(diags.begin(), diags.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     return std::tie(a.span.file, a.span.startLine,
                                     a.span.startCol, a.code) <
                            std::tie(b.span.file, b.span.startLine,
                                     b.span.startCol, b.code);
                   });
}

}  // namespace mvmob
