// Hand-written lexer shared by the five DSLs and the condition language.
// Keywords are soft: the lexer only produces IDENT tokens and the parsers
// match keyword text in context, so names like "data" stay usable as
// identifiers and path segments.
#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "mvmob/diagnostics.hpp"

namespace mvmob {

enum class TokenKind {
  Ident,
  Integer,
  Float,
  String,
  LBrace,    // {
  RBrace,    // }
  LParen,    // (
  RParen,    // )
  Colon,     // :
  Comma,     // ,
  Dot,       // .
  Assign,    // =
  Arrow,     // ->
  BiArrow,   // <->
  EqEq,      // ==
  NotEq,     // !=
  Lt,        // <
  LtEq,      // <=
  Gt,        // >
  GtEq,      // >=
  EndOfFile,
  Invalid,
};

inline std::string_view tokenKindName(TokenKind k) {
  switch (k) {
    case TokenKind::Ident: return "identifier";
    case TokenKind::Integer: return "integer literal";
    case TokenKind::Float: return "float literal";
    case TokenKind::String: return "string literal";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Colon: return "':'";
    case TokenKind::Comma: return "','";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Assign: return "'='";
    case TokenKind::Arrow: return "'->'";
    case TokenKind::BiArrow: return "'<->'";
    case TokenKind::EqEq: return "'=='";
    case TokenKind::NotEq: return "'!='";
    case TokenKind::Lt: return "'<'";
    case TokenKind::LtEq: return "'<='";
    case TokenKind::Gt: return "'>'";
    case TokenKind::GtEq: return "'>='";
    case TokenKind::EndOfFile: return "end of file";
    case TokenKind::Invalid: return "invalid token";
  }
  return "?";
}

struct Token {
  TokenKind kind = TokenKind::EndOfFile;
  std::string text;        // identifier text or decoded string value
  long long intValue = 0;  // Integer
  double floatValue = 0;   // Float
  SourceSpan span;

  bool isIdent(std::string_view word) const {
    return kind == TokenKind::Ident && text == word;
  }
};

// Tokenizes the whole input up front. Lexical problems become PAR00x
// diagnostics; the offending stretch is skipped so parsing can continue.
class Lexer {
 public:
  Lexer(std::string_view source, std::string file)
      : src_(source), file_(std::move(file)) {}

  std::vector<Token> run(std::vector<Diagnostic>& diags) {
    std::vector<Token> tokens;
    while (true) {
      skipTrivia(diags);
      if (pos_ >= src_.size()) break;
      tokens.push_back(next(diags));
    }
    Token eof;
    eof.kind = TokenKind::EndOfFile;
    eof.span = spanHere();
    tokens.push_back(eof);
    return tokens;
  }

 private:
  char peek(size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  char advance() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  SourceSpan spanHere() const { return SourceSpan{file_, line_, col_, line_, col_}; }

  void skipTrivia(std::vector<Diagnostic>& diags) {
    while (pos_ < src_.size()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        SourceSpan start = spanHere();
        advance();
        advance();
        bool closed = false;
        while (pos_ < src_.size()) {
          if (peek() == '*' && peek(1) == '/') {
            advance();
            advance();
            closed = true;
            break;
          }
          advance();
        }
        if (!closed)
          diags.push_back({Severity::error, "PAR003",
                           "unterminated block comment", start});
      } else {
        break;
      }
    }
  }

  Token next(std::vector<Diagnostic>& diags) {
    Token tok;
    tok.span = spanHere();
    char c = peek();

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string text;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
        text += advance();
      tok.kind = TokenKind::Ident;
      tok.text = std::move(text);
      finishSpan(tok);
      return tok;
    }

    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      return lexNumber(diags, tok);
    }

    if (c == '"') return lexString(diags, tok);

    auto two = [&](char a, char b) { return peek() == a && peek(1) == b; };
    if (two('<', '-') && peek(2) == '>') {
      advance(); advance(); advance();
      tok.kind = TokenKind::BiArrow;
      finishSpan(tok);
      return tok;
    }
    if (two('-', '>')) { advance(); advance(); tok.kind = TokenKind::Arrow; finishSpan(tok); return tok; }
    if (two('=', '=')) { advance(); advance(); tok.kind = TokenKind::EqEq; finishSpan(tok); return tok; }
    if (two('!', '=')) { advance(); advance(); tok.kind = TokenKind::NotEq; finishSpan(tok); return tok; }
    if (two('<', '=')) { advance(); advance(); tok.kind = TokenKind::LtEq; finishSpan(tok); return tok; }
    if (two('>', '=')) { advance(); advance(); tok.kind = TokenKind::GtEq; finishSpan(tok); return tok; }

    switch (c) {
      case '{': advance(); tok.kind = TokenKind::LBrace; break;
      case '}': advance(); tok.kind = TokenKind::RBrace; break;
      case '(': advance(); tok.kind = TokenKind::LParen; break;
      case ')': advance(); tok.kind = TokenKind::RParen; break;
      case ':': advance(); tok.kind = TokenKind::Colon; break;
      case ',': advance(); tok.kind = TokenKind::Comma; break;
      case '.': advance(); tok.kind = TokenKind::Dot; break;
      case '=': advance(); tok.kind = TokenKind::Assign; break;
      case '<': advance(); tok.kind = TokenKind::Lt; break;
      case '>': advance(); tok.kind = TokenKind::Gt; break;
      default: {
        advance();
        tok.kind = TokenKind::Invalid;
        tok.text = std::string(1, c);
        diags.push_back({Severity::error, "PAR007",
                         std::string("invalid character '") + c + "'", tok.span});
        break;
      }
    }
    finishSpan(tok);
    return tok;
  }

  Token lexNumber(std::vector<Diagnostic>& diags, Token tok) {
    size_t start = pos_;
    if (peek() == '-') advance();
    while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    bool isFloat = false;
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      isFloat = true;
      advance();
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    }
    if (peek() == 'e' || peek() == 'E') {
      char sign = peek(1);
      size_t digitsAt = (sign == '+' || sign == '-') ? 2 : 1;
      if (std::isdigit(static_cast<unsigned char>(peek(digitsAt)))) {
        isFloat = true;
        advance();  // e
        if (sign == '+' || sign == '-') advance();
        while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
      }
    }
    std::string_view text = src_.substr(start, pos_ - start);
    if (isFloat) {
      tok.kind = TokenKind::Float;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                       tok.floatValue);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        diags.push_back({Severity::error, "PAR004",
                         "malformed float literal '" + std::string(text) + "'",
                         tok.span});
        tok.kind = TokenKind::Invalid;
      }
    } else {
      tok.kind = TokenKind::Integer;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                       tok.intValue);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        diags.push_back({Severity::error, "PAR004",
                         "integer literal out of range '" + std::string(text) + "'",
                         tok.span});
        tok.kind = TokenKind::Invalid;
      }
    }
    tok.text = std::string(text);
    finishSpan(tok);
    return tok;
  }

  Token lexString(std::vector<Diagnostic>& diags, Token tok) {
    advance();  // opening quote
    std::string value;
    while (true) {
      if (pos_ >= src_.size() || peek() == '\n') {
        diags.push_back({Severity::error, "PAR002",
                         "unterminated string literal", tok.span});
        tok.kind = TokenKind::Invalid;
        finishSpan(tok);
        return tok;
      }
      char c = advance();
      if (c == '"') break;
      if (c == '\\') {
        if (pos_ >= src_.size()) continue;
        char esc = advance();
        switch (esc) {
          case '"': value += '"'; break;
          case '\\': value += '\\'; break;
          case 'n': value += '\n'; break;
          case 't': value += '\t'; break;
          case 'r': value += '\r'; break;
          default:
            diags.push_back({Severity::error, "PAR005",
                             std::string("invalid escape sequence '\\") + esc + "'",
                             tok.span});
            break;
        }
      } else {
        value += c;
      }
    }
    tok.kind = TokenKind::String;
    tok.text = std::move(value);
    finishSpan(tok);
    return tok;
  }

  void finishSpan(Token& tok) {
    tok.span.endLine = line_;
    tok.span.endCol = col_ > 1 ? col_ - 1 : 1;
  }

  std::string_view src_;
  std::string file_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace mvmob
