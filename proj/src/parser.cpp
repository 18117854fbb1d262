#include "ltlfsynth/parser.hpp"

#include <cctype>
#include <vector>

namespace ltlfsynth {

ParseError::ParseError(const std::string& message, unsigned line, unsigned column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { Ident, True, False, Not, Next, WeakNext, Finally, Globally, Until, Release,
                 And, Or, Implies, Iff, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  unsigned line;
  unsigned column;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  unsigned line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t{Tok::End, {}, line, col};
    auto rest = s.substr(i);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      t.text = std::string(s.substr(i, j - i));
      if (t.text == "true" || t.text == "tt") t.kind = Tok::True;
      else if (t.text == "false" || t.text == "ff") t.kind = Tok::False;
      else if (t.text == "X") t.kind = Tok::Next;
      else if (t.text == "N") t.kind = Tok::WeakNext;
      else if (t.text == "F") t.kind = Tok::Finally;
      else if (t.text == "G") t.kind = Tok::Globally;
      else if (t.text == "U") t.kind = Tok::Until;
      else if (t.text == "R") t.kind = Tok::Release;
      else t.kind = Tok::Ident;
      advance(j - i);
    } else if (rest.starts_with("<->")) {
      t.kind = Tok::Iff;
      advance(3);
    } else if (rest.starts_with("->")) {
      t.kind = Tok::Implies;
      advance(2);
    } else if (rest.starts_with("&&")) {
      t.kind = Tok::And;
      advance(2);
    } else if (rest.starts_with("||")) {
      t.kind = Tok::Or;
      advance(2);
    } else if (c == '&') {
      t.kind = Tok::And;
      advance(1);
    } else if (c == '|') {
      t.kind = Tok::Or;
      advance(1);
    } else if (c == '!') {
      t.kind = Tok::Not;
      advance(1);
    } else if (c == '(') {
      t.kind = Tok::LParen;
      advance(1);
    } else if (c == ')') {
      t.kind = Tok::RParen;
      advance(1);
    } else {
      throw ParseError(std::string("unknown token '") + c + "'", line, col);
    }
    out.push_back(std::move(t));
  }
  out.push_back(Token{Tok::End, {}, line, col});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, PropTable& props, bool allow_new)
      : toks_(std::move(toks)), props_(props), allow_new_(allow_new) {}

  RawFormula parse() {
    if (peek().kind == Tok::End) throw error("empty formula");
    RawFormula f = parse_iff();
    if (peek().kind == Tok::RParen) throw error("unbalanced parentheses: unexpected ')'");
    if (peek().kind != Tok::End) throw error("unexpected token '" + describe(peek()) + "'");
    return f;
  }

 private:
  using R = RawFormula::Op;

  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  ParseError error(const std::string& msg) const { return ParseError(msg, peek().line, peek().column); }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::LParen: return "(";
      case Tok::RParen: return ")";
      case Tok::Not: return "!";
      case Tok::And: return "&&";
      case Tok::Or: return "||";
      case Tok::Implies: return "->";
      case Tok::Iff: return "<->";
      case Tok::End: return "end of input";
      default: return t.text;
    }
  }

  RawFormula parse_iff() {
    RawFormula lhs = parse_implies();
    while (peek().kind == Tok::Iff) {
      take();
      lhs = RawFormula::binary(R::Iff, std::move(lhs), parse_implies());
    }
    return lhs;
  }

  RawFormula parse_implies() {
    RawFormula lhs = parse_or();
    if (peek().kind == Tok::Implies) {
      take();
      return RawFormula::binary(R::Implies, std::move(lhs), parse_implies());
    }
    return lhs;
  }

  RawFormula parse_or() {
    RawFormula lhs = parse_and();
    while (peek().kind == Tok::Or) {
      take();
      lhs = RawFormula::binary(R::Or, std::move(lhs), parse_and());
    }
    return lhs;
  }

  RawFormula parse_and() {
    RawFormula lhs = parse_temporal();
    while (peek().kind == Tok::And) {
      take();
      lhs = RawFormula::binary(R::And, std::move(lhs), parse_temporal());
    }
    return lhs;
  }

  RawFormula parse_temporal() {
    RawFormula lhs = parse_unary();
    if (peek().kind == Tok::Until || peek().kind == Tok::Release) {
      R op = take().kind == Tok::Until ? R::Until : R::Release;
      return RawFormula::binary(op, std::move(lhs), parse_temporal());
    }
    return lhs;
  }

  RawFormula parse_unary() {
    switch (peek().kind) {
      case Tok::Not: take(); return RawFormula::unary(R::Not, parse_unary());
      case Tok::Next: take(); return RawFormula::unary(R::Next, parse_unary());
      case Tok::WeakNext: take(); return RawFormula::unary(R::WeakNext, parse_unary());
      case Tok::Finally: take(); return RawFormula::unary(R::Finally, parse_unary());
      case Tok::Globally: take(); return RawFormula::unary(R::Globally, parse_unary());
      default: return parse_atom();
    }
  }

  RawFormula parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::True: take(); return RawFormula::leaf(R::True);
      case Tok::False: take(); return RawFormula::leaf(R::False);
      case Tok::Ident: {
        auto idx = props_.find(t.text);
        if (!idx) {
          if (!allow_new_) throw error("unknown proposition '" + t.text + "'");
          idx = props_.intern(t.text);
        }
        take();
        return RawFormula::leaf(R::Prop, *idx);
      }
      case Tok::LParen: {
        const Token& open = take();
        RawFormula inner = parse_iff();
        if (peek().kind != Tok::RParen) {
          if (peek().kind == Tok::End)
            throw ParseError("unbalanced parentheses: '(' is never closed", open.line, open.column);
          throw error("expected ')' but found '" + describe(peek()) + "'");
        }
        take();
        return inner;
      }
      case Tok::RParen: throw error("unbalanced parentheses: unexpected ')'");
      case Tok::End: throw error("unexpected end of input");
      default: throw error("expected a formula but found '" + describe(t) + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  PropTable& props_;
  bool allow_new_;
};

}  // namespace

RawFormula parse_raw(std::string_view text, PropTable& props, bool allow_new_props) {
  // Registration is committed only when the whole text parses.
  PropTable scratch = props;
  RawFormula f = Parser(tokenize(text), scratch, allow_new_props).parse();
  props = std::move(scratch);
  return f;
}

Formula parse_formula(std::string_view text, PropTable& props, bool allow_new_props) {
  return to_nnf(parse_raw(text, props, allow_new_props));
}

}  // namespace ltlfsynth
