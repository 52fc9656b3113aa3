// Recursive-descent parser for the concept/GCI grammar:
//
//   gci     := concept ("<=" | "==") concept
//   fixdef  := ("lfp" | "gfp") NAME "=" concept
//   concept := conj ("|" conj)*
//   conj    := unary ("&" unary)*
//   unary   := "~" unary | ("exists" | "forall") NAME "." unary | atom
//   atom    := "top" | "bot" | NAME | "(" concept ")"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "alc/syntax.hpp"

namespace alc {

namespace {

enum class Tok { Ident, And, Or, Not, Dot, LParen, RParen, Sub, Equiv, Assign, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

const char *describe(Tok t) {
  switch (t) {
  case Tok::Ident: return "identifier";
  case Tok::And: return "'&'";
  case Tok::Or: return "'|'";
  case Tok::Not: return "'~'";
  case Tok::Dot: return "'.'";
  case Tok::LParen: return "'('";
  case Tok::RParen: return "')'";
  case Tok::Sub: return "'<='";
  case Tok::Equiv: return "'=='";
  case Tok::Assign: return "'='";
  case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text, std::size_t line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto ch = static_cast<unsigned char>(text[i]);
    if (std::isspace(ch)) {
      ++i;
      continue;
    }
    if (ch == '#') break;
    if (std::isalpha(ch) || ch == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(text.substr(i, j - i)), i});
      i = j;
      continue;
    }
    auto two = text.substr(i, 2);
    if (two == "<=") {
      out.push_back({Tok::Sub, "<=", i});
      i += 2;
      continue;
    }
    if (two == "==") {
      out.push_back({Tok::Equiv, "==", i});
      i += 2;
      continue;
    }
    Tok single;
    switch (ch) {
    case '&': single = Tok::And; break;
    case '|': single = Tok::Or; break;
    case '~': single = Tok::Not; break;
    case '.': single = Tok::Dot; break;
    case '(': single = Tok::LParen; break;
    case ')': single = Tok::RParen; break;
    case '=': single = Tok::Assign; break;
    default:
      throw SyntaxError(std::string("unexpected character '") + static_cast<char>(ch) + "'", i, line);
    }
    out.push_back({single, std::string(1, static_cast<char>(ch)), i});
    ++i;
  }
  out.push_back({Tok::End, {}, text.size()});
  return out;
}

class Parser {
public:
  Parser(std::string_view text, const Signature &sig, std::size_t line)
      : tokens_(tokenize(text, line)), sig_(sig), line_(line) {}

  Concept disjunction() {
    Concept c = conj();
    while (peek().kind == Tok::Or) {
      next();
      c = Concept::disj(std::move(c), conj());
    }
    return c;
  }

  Gci gci_or_fixdef() {
    const Token &head = peek();
    if (head.kind == Tok::Ident && (head.text == "lfp" || head.text == "gfp")) {
      const auto sem = head.text == "lfp" ? FixSemantics::Lfp : FixSemantics::Gfp;
      next();
      Concept defined = concept_name(expect(Tok::Ident));
      expect(Tok::Assign);
      Concept body = disjunction();
      return Gci::fixdef(std::move(defined), std::move(body), sem);
    }
    Concept lhs = disjunction();
    const Token &op = peek();
    if (op.kind != Tok::Sub && op.kind != Tok::Equiv) fail("expected '<=' or '=='", op);
    next();
    Concept rhs = disjunction();
    return op.kind == Tok::Sub ? Gci::subsumes(std::move(lhs), std::move(rhs))
                               : Gci::equiv(std::move(lhs), std::move(rhs));
  }

  void finish() {
    if (peek().kind != Tok::End) fail("unexpected trailing input", peek());
  }

private:
  const Token &peek() const { return tokens_[pos_]; }
  const Token &next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string &what, const Token &at) const {
    std::string msg = what + ", found " + (at.kind == Tok::Ident ? "'" + at.text + "'" : describe(at.kind));
    throw SyntaxError(msg, at.pos, line_);
  }

  const Token &expect(Tok kind) {
    if (peek().kind != kind) fail(std::string("expected ") + describe(kind), peek());
    return next();
  }

  Concept concept_name(const Token &t) {
    if (is_keyword(t.text)) fail("expected a concept name", t);
    auto idx = sig_.concept_index(t.text);
    if (!idx) throw UnknownName(t.text, t.pos, line_);
    return Concept::name(t.text, *idx);
  }

  Concept conj() {
    Concept c = unary();
    while (peek().kind == Tok::And) {
      next();
      c = Concept::conj(std::move(c), unary());
    }
    return c;
  }

  Concept unary() {
    const Token &t = peek();
    if (t.kind == Tok::Not) {
      next();
      return Concept::negation(unary());
    }
    if (t.kind == Tok::Ident && (t.text == "exists" || t.text == "forall")) {
      const bool is_exists = t.text == "exists";
      next();
      const Token &role = expect(Tok::Ident);
      if (is_keyword(role.text)) fail("expected a role name", role);
      auto idx = sig_.role_index(role.text);
      if (!idx) throw UnknownName(role.text, role.pos, line_);
      expect(Tok::Dot);
      Concept filler = unary();
      return is_exists ? Concept::exists(role.text, *idx, std::move(filler))
                       : Concept::forall(role.text, *idx, std::move(filler));
    }
    return atom();
  }

  Concept atom() {
    const Token &t = peek();
    if (t.kind == Tok::LParen) {
      next();
      Concept c = disjunction();
      expect(Tok::RParen);
      return c;
    }
    if (t.kind != Tok::Ident) fail("expected a concept", t);
    next();
    if (t.text == "top") return Concept::top();
    if (t.text == "bot") return Concept::bot();
    return concept_name(t);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Signature &sig_;
  std::size_t line_;
};

template <typename Fn>
void for_each_line(std::string_view text, Fn &&fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    fn(line, line_no);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

bool is_blank(std::string_view line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

} // namespace

Concept parse_concept(std::string_view text, const Signature &sig) {
  Parser p(text, sig, 0);
  Concept c = p.disjunction();
  p.finish();
  return c;
}

Gci parse_gci(std::string_view text, const Signature &sig) {
  Parser p(text, sig, 0);
  Gci g = p.gci_or_fixdef();
  p.finish();
  return g;
}

Theory parse_theory(std::string_view text, const Signature &sig) {
  Theory out;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    if (is_blank(line)) return;
    Parser p(line, sig, line_no);
    out.push_back(p.gci_or_fixdef());
    p.finish();
  });
  return out;
}

Signature infer_signature(std::string_view text) {
  std::vector<std::string> concepts;
  std::vector<std::string> roles;
  auto add = [](std::vector<std::string> &v, const std::string &name) {
    if (std::find(v.begin(), v.end(), name) == v.end()) v.push_back(name);
  };
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    auto tokens = tokenize(line, line_no);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const auto &t = tokens[i];
      if (t.kind != Tok::Ident || is_keyword(t.text)) continue;
      const bool after_quantifier =
          i > 0 && tokens[i - 1].kind == Tok::Ident && (tokens[i - 1].text == "exists" || tokens[i - 1].text == "forall");
      if (after_quantifier) {
        if (std::find(concepts.begin(), concepts.end(), t.text) != concepts.end())
          throw SyntaxError("'" + t.text + "' used both as concept and as role", t.pos, line_no);
        add(roles, t.text);
      } else {
        if (std::find(roles.begin(), roles.end(), t.text) != roles.end())
          throw SyntaxError("'" + t.text + "' used both as concept and as role", t.pos, line_no);
        add(concepts, t.text);
      }
    }
  });
  return Signature(std::move(concepts), std::move(roles));
}

} // namespace alc
