#include "lstar/parse.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "lstar/errors.hpp"
#include "lstar/signature.hpp"

namespace lstar {

ParseError::ParseError(std::string p, int l, int c, std::string msg)
    : path(std::move(p)), line(l), column(c), message(std::move(msg)) {
  std::ostringstream os;
  os << path << ":" << line << ":" << column << ": " << message;
  rendered = os.str();
}

namespace {

enum class Tok {
  Ident, Star, LParen, RParen, Colon, Arrow, Comma, Dot, Proj1, Proj2,
  Backslash, Equal, End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Marker marker = Marker::Plain;
  int line = 1;
  int column = 1;
};

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

std::vector<Token> tokenize(const std::string& src, const std::string& path) {
  std::vector<Token> out;
  std::size_t pos = 0;
  int line = 1, col = 1;
  auto advance = [&] {
    if (src[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  };
  while (pos < src.size()) {
    char c = src[pos];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance();
      continue;
    }
    if (c == '-' && pos + 1 < src.size() && src[pos + 1] == '-') {
      while (pos < src.size() && src[pos] != '\n') advance();
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (is_ident_start(c)) {
      std::string text;
      while (pos < src.size() && is_ident_char(src[pos])) {
        text += src[pos];
        advance();
      }
      t.kind = Tok::Ident;
      t.text = std::move(text);
      if (pos < src.size() && (src[pos] == '\'' || src[pos] == '*')) {
        t.marker = src[pos] == '\'' ? Marker::Primed : Marker::Starred;
        advance();
      }
      out.push_back(std::move(t));
      continue;
    }
    switch (c) {
      case '(': t.kind = Tok::LParen; advance(); break;
      case ')': t.kind = Tok::RParen; advance(); break;
      case ':': t.kind = Tok::Colon; advance(); break;
      case ',': t.kind = Tok::Comma; advance(); break;
      case '=': t.kind = Tok::Equal; advance(); break;
      case '*': t.kind = Tok::Star; advance(); break;
      case '\\': t.kind = Tok::Backslash; advance(); break;
      case '-':
        advance();
        if (pos >= src.size() || src[pos] != '>')
          throw ParseError(path, t.line, t.column, "expected `->`");
        advance();
        t.kind = Tok::Arrow;
        break;
      case '.':
        advance();
        if (pos < src.size() && src[pos] == '1') {
          t.kind = Tok::Proj1;
          advance();
        } else if (pos < src.size() && src[pos] == '2') {
          t.kind = Tok::Proj2;
          advance();
        } else {
          t.kind = Tok::Dot;
        }
        break;
      default:
        throw ParseError(path, line, col,
                         std::string("unexpected character `") + c + "`");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = Tok::End;
  end.line = line;
  end.column = col;
  out.push_back(std::move(end));
  return out;
}

bool is_decl_keyword(const std::string& text) {
  return text == "def" || text == "assume" || text == "check" || text == "mode";
}

class Parser {
 public:
  Parser(const std::string& text, std::string path)
      : path_(std::move(path)), toks_(tokenize(text, path_)) {}

  SourceFile file() {
    SourceFile out;
    out.path = path_;
    for (;;) {
      const Token& t = peek();
      if (t.kind == Tok::End) break;
      if (t.kind != Tok::Ident || t.marker != Marker::Plain || !is_decl_keyword(t.text))
        fail(t, "expected `mode`, `def`, `assume`, or `check`");
      if (t.text == "mode") {
        eat();
        const Token& m = expect(Tok::Ident, "a mode name");
        Mode mode;
        if (m.marker != Marker::Plain || !mode_from_string(m.text, mode))
          fail(m, "unknown mode `" + m.text + "`");
        if (out.pragma) fail(m, "duplicate mode pragma");
        out.pragma = mode;
        eat();
      } else if (t.text == "assume") {
        eat();
        Name name = binder_name("assumption name");
        expect_eat(Tok::Colon, "`:`");
        TermPtr type = parse_term();
        out.assumes.push(name, type);
        scope_.push_back(name);
      } else if (t.text == "def") {
        eat();
        const Token& n = expect(Tok::Ident, "a definition name");
        if (n.marker != Marker::Plain) fail(n, "definition names take no marker");
        reject_reserved(n);
        if (defs_.count(n.text)) fail(n, "duplicate definition `" + n.text + "`");
        std::string name = n.text;
        eat();
        expect_eat(Tok::Colon, "`:`");
        parse_term();  // the annotation documents the macro; expansion sites are checked
        expect_eat(Tok::Equal, "`=`");
        TermPtr body = parse_term();
        defs_[name] = Def{body, scope_.size()};
      } else {  // check
        int line = t.line;
        eat();
        TermPtr term = parse_term();
        expect_eat(Tok::Colon, "`:`");
        TermPtr type = parse_term();
        out.goals.push_back({term, type, line});
      }
    }
    out.constants_used = used_;
    return out;
  }

  TermPtr term_only(const std::vector<Name>& scope) {
    scope_ = scope;
    TermPtr t = parse_term();
    if (peek().kind != Tok::End) fail(peek(), "trailing input after term");
    return t;
  }

 private:
  struct Def {
    TermPtr body;
    std::size_t depth;  // scope size at definition time
  };

  std::string path_;
  std::vector<Token> toks_;
  std::size_t at_ = 0;
  std::vector<Name> scope_;
  std::map<std::string, Def> defs_;
  std::set<std::string> used_;

  const Token& peek(std::size_t k = 0) const {
    std::size_t i = at_ + k;
    if (i >= toks_.size()) i = toks_.size() - 1;
    return toks_[i];
  }
  void eat() { ++at_; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(path_, t.line, t.column, msg);
  }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(peek(), std::string("expected ") + what);
    return peek();
  }
  void expect_eat(Tok kind, const char* what) {
    expect(kind, what);
    eat();
  }

  void reject_reserved(const Token& t) const {
    if (t.marker == Marker::Plain &&
        (is_decl_keyword(t.text) || t.text == "Sg" || all_constant_names().count(t.text)))
      fail(t, "`" + t.text + "` is reserved and cannot be bound");
  }

  Name binder_name(const char* what) {
    const Token& t = expect(Tok::Ident, what);
    reject_reserved(t);
    Name name(t.text, t.marker);
    eat();
    return name;
  }

  bool starts_atom(const Token& t) const {
    switch (t.kind) {
      case Tok::Star:
      case Tok::LParen:
        return true;
      case Tok::Ident:
        return !(t.marker == Marker::Plain && (is_decl_keyword(t.text) || t.text == "Sg"));
      default:
        return false;
    }
  }

  TermPtr parse_term() {
    const Token& t = peek();
    if (t.kind == Tok::Backslash) {
      eat();
      expect_eat(Tok::LParen, "`(`");
      Name x = binder_name("a binder name");
      expect_eat(Tok::Colon, "`:`");
      TermPtr dom = parse_term();
      expect_eat(Tok::RParen, "`)`");
      expect_eat(Tok::Dot, "`.`");
      scope_.push_back(x);
      TermPtr body = parse_term();
      scope_.pop_back();
      return lam(x, dom, body);
    }
    if (t.kind == Tok::Ident && t.marker == Marker::Plain && t.text == "Sg") {
      eat();
      expect_eat(Tok::LParen, "`(`");
      Name x = binder_name("a binder name");
      expect_eat(Tok::Colon, "`:`");
      TermPtr dom = parse_term();
      expect_eat(Tok::RParen, "`)`");
      expect_eat(Tok::Dot, "`.`");
      scope_.push_back(x);
      TermPtr body = parse_term();
      scope_.pop_back();
      return sigma(x, dom, body);
    }
    if (t.kind == Tok::LParen && peek(1).kind == Tok::Ident && peek(2).kind == Tok::Colon) {
      eat();
      Name x = binder_name("a binder name");
      expect_eat(Tok::Colon, "`:`");
      TermPtr dom = parse_term();
      expect_eat(Tok::RParen, "`)`");
      if (peek().kind != Tok::Arrow) fail(peek(), "expected `->` after binder");
      eat();
      scope_.push_back(x);
      TermPtr cod = parse_term();
      scope_.pop_back();
      return pi(x, dom, cod);
    }
    TermPtr lhs = parse_app();
    if (peek().kind == Tok::Arrow) {
      eat();
      TermPtr rhs = parse_term();
      // Non-dependent arrow: the codomain never mentions the binder.
      return pi(Name("", Marker::Plain), lhs, shift(rhs, 1, 0));
    }
    return lhs;
  }

  TermPtr parse_app() {
    TermPtr t = parse_postfix();
    while (starts_atom(peek())) t = app(t, parse_postfix());
    return t;
  }

  TermPtr parse_postfix() {
    TermPtr t = parse_atom();
    for (;;) {
      if (peek().kind == Tok::Proj1) {
        eat();
        t = proj(1, t);
      } else if (peek().kind == Tok::Proj2) {
        eat();
        t = proj(2, t);
      } else {
        return t;
      }
    }
  }

  TermPtr parse_atom() {
    const Token& t = peek();
    if (t.kind == Tok::Star) {
      eat();
      return sort();
    }
    if (t.kind == Tok::LParen) {
      eat();
      TermPtr first = parse_term();
      if (peek().kind == Tok::Comma) {
        eat();
        TermPtr second = parse_term();
        expect_eat(Tok::RParen, "`)`");
        return pair(first, second);
      }
      expect_eat(Tok::RParen, "`)`");
      return first;
    }
    if (t.kind == Tok::Ident) {
      Name name(t.text, t.marker);
      for (std::size_t i = scope_.size(); i-- > 0;) {
        if (same_name(scope_[i], name)) {
          eat();
          return var(scope_.size() - 1 - i, name);
        }
      }
      if (t.marker == Marker::Plain) {
        auto def = defs_.find(t.text);
        if (def != defs_.end()) {
          eat();
          return shift(def->second.body,
                       static_cast<long long>(scope_.size() - def->second.depth), 0);
        }
        if (all_constant_names().count(t.text)) {
          used_.insert(t.text);
          eat();
          return cnst(t.text);
        }
      }
      fail(t, "unknown identifier `" + show_name(name) + "`");
    }
    fail(t, "expected a term");
  }
};

Mode inferred_mode(const std::set<std::string>& used) {
  for (const char* n : {"qEq", "qRel", "rel", "qEqE", "qRelE"})
    if (used.count(n)) return Mode::Internal;
  for (const char* n : {"Eq", "Rel", "reflstar", "qFunE", "qSumE"})
    if (used.count(n)) return Mode::LStarUEq;
  for (const char* n : {"U", "T", "qstar", "qFun", "qSum"})
    if (used.count(n)) return Mode::LStarU;
  return Mode::LStar;
}

}  // namespace

Mode SourceFile::effective_mode(std::optional<Mode> flag) const {
  Mode mode = flag ? *flag : (pragma ? *pragma : inferred_mode(constants_used));
  const Signature& sig = declare_signature(mode);
  for (const std::string& name : constants_used) {
    if (!sig.find(name))
      throw ParseError(path, 0, 0, "constant `" + name + "` is not available in mode `" +
                                       to_string(mode) + "`");
  }
  return mode;
}

SourceFile parse_source(const std::string& text, const std::string& path) {
  return Parser(text, path).file();
}

SourceFile parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_source(buf.str(), path);
}

TermPtr parse_term(const std::string& text, const std::vector<Name>& scope) {
  return Parser(text, "<string>").term_only(scope);
}

}  // namespace lstar
