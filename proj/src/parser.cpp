#include "parser.hpp"

#include <cctype>
#include <vector>

namespace pdl {

namespace {

enum class Tok : std::uint8_t {
  Prop, LParen, RParen, Comma, Semi, Amp, Pipe, Tilde, Arrow, Iff,
  KwC, KwD, KwDSup, KwI,
  BoxU, DiaU, BoxUPrime, DiaUPrime, BoxBigU, DiaBigU,
  HashT, HashF, RBrace, End,
};

struct Token {
  Tok type;
  std::size_t pos;
  std::string name;  // Prop only
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  // Peek never throws: a lexing failure shows up as End here and as a
  // thrown error once the parser actually demands the token.  This is what
  // lets prefix parsing stop cleanly in front of non-formula text.
  const Token& peek() {
    if (!cached_) {
      try {
        cur_ = lex();
      } catch (const ParseError&) {
        cur_ = Token{Tok::End, err_pos_, {}};
      }
      cached_ = true;
    }
    return cur_;
  }

  Token next() {
    if (cached_ && cur_.type != Tok::End) {
      cached_ = false;
      return cur_;
    }
    cached_ = false;
    return lex();  // may throw with a precise position
  }

  std::size_t offset_of_next() {
    peek();
    return cur_.pos;
  }

 private:
  Token lex() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    err_pos_ = pos_;
    if (pos_ >= text_.size()) return {Tok::End, pos_, {}};
    const std::size_t start = pos_;
    const char c = text_[pos_];
    switch (c) {
      case '(': ++pos_; return {Tok::LParen, start, {}};
      case ')': ++pos_; return {Tok::RParen, start, {}};
      case ',': ++pos_; return {Tok::Comma, start, {}};
      case ';': ++pos_; return {Tok::Semi, start, {}};
      case '&': ++pos_; return {Tok::Amp, start, {}};
      case '|': ++pos_; return {Tok::Pipe, start, {}};
      case '~': ++pos_; return {Tok::Tilde, start, {}};
      case '}': ++pos_; return {Tok::RBrace, start, {}};
      case '-':
        if (lookahead(1) == '>') { pos_ += 2; return {Tok::Arrow, start, {}}; }
        throw ParseError("expected '->'", start);
      case '<':
        if (lookahead(1) == '-' && lookahead(2) == '>') { pos_ += 3; return {Tok::Iff, start, {}}; }
        if (lookahead(1) == 'u' && lookahead(2) == '>') { pos_ += 3; return {Tok::DiaU, start, {}}; }
        if (lookahead(1) == 'u' && lookahead(2) == '\'' && lookahead(3) == '>') {
          pos_ += 4; return {Tok::DiaUPrime, start, {}};
        }
        if (lookahead(1) == 'U' && lookahead(2) == '>') { pos_ += 3; return {Tok::DiaBigU, start, {}}; }
        throw ParseError("expected '<->', '<u>', '<u'>' or '<U>'", start);
      case '[':
        if (lookahead(1) == 'u' && lookahead(2) == ']') { pos_ += 3; return {Tok::BoxU, start, {}}; }
        if (lookahead(1) == 'u' && lookahead(2) == '\'' && lookahead(3) == ']') {
          pos_ += 4; return {Tok::BoxUPrime, start, {}};
        }
        if (lookahead(1) == 'U' && lookahead(2) == ']') { pos_ += 3; return {Tok::BoxBigU, start, {}}; }
        throw ParseError("expected '[u]', '[u']' or '[U]'", start);
      case '#':
        if (lookahead(1) == 'T') { pos_ += 2; return {Tok::HashT, start, {}}; }
        if (lookahead(1) == 'F') { pos_ += 2; return {Tok::HashF, start, {}}; }
        throw ParseError("expected '#T' or '#F'", start);
      case '_': {
        std::size_t end = pos_;
        while (end < text_.size() && ident_char(text_[end])) ++end;
        if (text_.substr(pos_, end - pos_) == k_top_witness)
          throw ParseError("the symbol _t is reserved for internal use", start);
        throw ParseError("proposition symbols must start with a lowercase letter", start);
      }
      default: break;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && ident_char(text_[end])) ++end;
      std::string name(text_.substr(pos_, end - pos_));
      pos_ = end;
      return {Tok::Prop, start, std::move(name)};
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && ident_char(text_[end])) ++end;
      const std::string_view word = text_.substr(pos_, end - pos_);
      if (word == "C") { pos_ = end; return {Tok::KwC, start, {}}; }
      if (word == "I") { pos_ = end; return {Tok::KwI, start, {}}; }
      if (word == "D") {
        pos_ = end;
        if (pos_ < text_.size() && text_[pos_] == '^') {
          if (lookahead(1) != '{') throw ParseError("expected '{' after 'D^'", pos_);
          pos_ += 2;
          return {Tok::KwDSup, start, {}};
        }
        return {Tok::KwD, start, {}};
      }
      throw ParseError("unknown operator '" + std::string(word) + "'", start);
    }
    throw ParseError("unexpected character", start);
  }

  char lookahead(std::size_t k) const {
    return pos_ + k < text_.size() ? text_[pos_ + k] : '\0';
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t err_pos_ = 0;
  Token cur_{};
  bool cached_ = false;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  FormulaId formula() { return iff(); }

  std::size_t stop_offset() { return lex_.offset_of_next(); }

  void require_end(std::string_view text) {
    if (lex_.peek().type != Tok::End)
      throw ParseError("unexpected trailing input", lex_.peek().pos);
    // The lenient peek hides lexing errors; re-scan the tail for them.
    for (std::size_t i = lex_.peek().pos; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i])))
        throw ParseError("unexpected trailing input", i);
    }
  }

 private:
  FormulaId iff() {
    FormulaId l = implies();
    while (lex_.peek().type == Tok::Iff) {
      lex_.next();
      l = mk_iff(l, implies());
    }
    return l;
  }

  FormulaId implies() {
    FormulaId l = disj();
    if (lex_.peek().type == Tok::Arrow) {
      lex_.next();
      return mk_implies(l, implies());  // right associative
    }
    return l;
  }

  FormulaId disj() {
    FormulaId l = conj();
    while (lex_.peek().type == Tok::Pipe) {
      lex_.next();
      l = mk_or(l, conj());
    }
    return l;
  }

  FormulaId conj() {
    FormulaId l = unary();
    while (lex_.peek().type == Tok::Amp) {
      lex_.next();
      l = mk_and(l, unary());
    }
    return l;
  }

  FormulaId unary() {
    switch (lex_.peek().type) {
      case Tok::Tilde: lex_.next(); return mk_not(unary());
      case Tok::KwC: lex_.next(); return mk_c(unary());
      case Tok::BoxU: lex_.next(); return mk_u_box(unary());
      case Tok::DiaU: lex_.next(); return mk_u_dia(unary());
      case Tok::BoxUPrime: lex_.next(); return mk_uprime_box(unary());
      case Tok::DiaUPrime: lex_.next(); return mk_uprime_dia(unary());
      case Tok::BoxBigU: lex_.next(); return mk_ubox(unary());
      case Tok::DiaBigU: lex_.next(); return mk_ubig_dia(unary());
      default: return atom();
    }
  }

  FormulaId atom() {
    const Token t = lex_.next();
    switch (t.type) {
      case Tok::Prop:
        return mk_prop(t.name);
      case Tok::LParen: {
        FormulaId f = iff();
        expect(Tok::RParen, "expected ')'");
        return f;
      }
      case Tok::HashT: return mk_top();
      case Tok::HashF: return mk_bot();
      case Tok::KwD: {
        expect(Tok::LParen, "expected '(' after D");
        std::vector<FormulaId> premises = flist_until_semi();
        expect(Tok::Semi, "expected ';' in D(...)");
        FormulaId concl = iff();
        expect(Tok::RParen, "expected ')'");
        return mk_dep(premises, concl);
      }
      case Tok::KwI: {
        expect(Tok::LParen, "expected '(' after I");
        std::vector<FormulaId> left = flist_nonempty();
        expect(Tok::Semi, "expected ';' in I(...)");
        std::vector<FormulaId> conds = flist_until_semi();
        expect(Tok::Semi, "expected ';' in I(...)");
        std::vector<FormulaId> right = flist_nonempty();
        expect(Tok::RParen, "expected ')'");
        return mk_indep(left, conds, right);
      }
      case Tok::KwDSup: {
        FormulaId cond = iff();
        expect(Tok::RBrace, "expected '}'");
        expect(Tok::LParen, "expected '(' after D^{...}");
        std::vector<FormulaId> premises = flist_until_semi();
        expect(Tok::Semi, "expected ';' in D^{...}(...)");
        FormulaId concl = iff();
        expect(Tok::RParen, "expected ')'");
        return mk_reldep(cond, premises, concl);
      }
      default:
        throw ParseError("expected a formula", t.pos);
    }
  }

  std::vector<FormulaId> flist_nonempty() {
    std::vector<FormulaId> out;
    out.push_back(iff());
    while (lex_.peek().type == Tok::Comma) {
      lex_.next();
      out.push_back(iff());
    }
    return out;
  }

  std::vector<FormulaId> flist_until_semi() {
    if (lex_.peek().type == Tok::Semi) return {};
    return flist_nonempty();
  }

  void expect(Tok t, const char* msg) {
    const Token got = lex_.next();
    if (got.type != t) throw ParseError(msg, got.pos);
  }

  Lexer lex_;
};

}  // namespace

FormulaId parse_formula(std::string_view text) {
  Parser p(text);
  FormulaId f = p.formula();
  p.require_end(text);
  return f;
}

FormulaId parse_formula_prefix(std::string_view text, std::size_t* consumed) {
  Parser p(text);
  FormulaId f = p.formula();
  if (consumed != nullptr) *consumed = p.stop_offset();
  return f;
}

FormulaId parse(std::string_view text, Fragment frag) {
  FormulaId f = parse_formula(text);
  require_fragment(f, frag);
  return f;
}

}  // namespace pdl
