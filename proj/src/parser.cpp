#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "slt/syntax.hpp"

namespace slt {

namespace {

enum class Tok {
  Ident,
  KwLet,
  KwMain,
  KwEnd,
  KwRec,
  KwCall,
  KwUnit,
  KwNat,
  KwStr,
  KwBool,
  KwInt,
  Arrow,
  Colon,
  Dot,
  Comma,
  Semi,
  Equals,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Eof,
  Bad,
};

struct Token {
  Tok kind;
  std::string text;
  SourceLoc loc;
};

const std::map<std::string_view, Tok> kKeywords = {
    {"let", Tok::KwLet},   {"main", Tok::KwMain}, {"end", Tok::KwEnd},
    {"rec", Tok::KwRec},   {"call", Tok::KwCall}, {"unit", Tok::KwUnit},
    {"nat", Tok::KwNat},   {"str", Tok::KwStr},   {"bool", Tok::KwBool},
    {"int", Tok::KwInt},
};

std::string_view token_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::KwLet: return "'let'";
    case Tok::KwMain: return "'main'";
    case Tok::KwEnd: return "'end'";
    case Tok::KwRec: return "'rec'";
    case Tok::KwCall: return "'call'";
    case Tok::KwUnit: return "'unit'";
    case Tok::KwNat: return "'nat'";
    case Tok::KwStr: return "'str'";
    case Tok::KwBool: return "'bool'";
    case Tok::KwInt: return "'int'";
    case Tok::Arrow: return "'->'";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Equals: return "'='";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Eof: return "end of input";
    case Tok::Bad: return "invalid character";
  }
  return "?";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      const SourceLoc loc{line_, col_};
      if (pos_ >= text_.size()) {
        out.push_back({Tok::Eof, "", loc});
        return out;
      }
      const char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_')) {
          advance();
        }
        std::string word(text_.substr(start, pos_ - start));
        const auto kw = kKeywords.find(word);
        out.push_back({kw == kKeywords.end() ? Tok::Ident : kw->second, std::move(word), loc});
        continue;
      }
      if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
        advance();
        advance();
        out.push_back({Tok::Arrow, "->", loc});
        continue;
      }
      Tok kind = Tok::Bad;
      switch (c) {
        case ':': kind = Tok::Colon; break;
        case '.': kind = Tok::Dot; break;
        case ',': kind = Tok::Comma; break;
        case ';': kind = Tok::Semi; break;
        case '=': kind = Tok::Equals; break;
        case '{': kind = Tok::LBrace; break;
        case '}': kind = Tok::RBrace; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        default: break;
      }
      out.push_back({kind, std::string(1, c), loc});
      advance();
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_trivia() {
    for (;;) {
      while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
      if (pos_ + 1 < text_.size() && text_[pos_] == '/' && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        continue;
      }
      return;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ParseResult run() {
    Declarations decls;
    TypePtr main;
    bool saw_main = false;

    while (peek().kind != Tok::Eof) {
      if (peek().kind == Tok::KwLet) {
        const Token let_tok = take();
        const Token name = expect(Tok::Ident, "declaration name");
        if (name.kind != Tok::Ident) {
          recover_to_semi();
          continue;
        }
        if (!expect_ok(Tok::Equals, "'='")) {
          recover_to_semi();
          continue;
        }
        TypePtr body = parse_type();
        if (!body) {
          recover_to_semi();  // the type fault is already reported
        } else if (!expect_ok(Tok::Semi, "';' after declaration")) {
          recover_to_semi();
        }
        if (saw_main) {
          report(DiagCode::Parse, "declarations must precede the main entry", let_tok.loc);
          continue;
        }
        if (decls.contains(DeclName(name.text))) {
          report(DiagCode::DupDecl, "declaration name '" + name.text + "' is already bound",
                 name.loc);
          continue;
        }
        if (body) decls.add(DeclName(name.text), std::move(body));
        continue;
      }
      if (peek().kind == Tok::KwMain) {
        const Token main_tok = take();
        if (!expect_ok(Tok::Equals, "'='")) {
          recover_to_semi();
          continue;
        }
        TypePtr body = parse_type();
        if (!body) {
          recover_to_semi();  // the type fault is already reported
        } else if (!expect_ok(Tok::Semi, "';' after the main type")) {
          recover_to_semi();
        }
        if (saw_main) {
          report(DiagCode::Parse, "a file must contain exactly one main entry", main_tok.loc);
          continue;
        }
        saw_main = true;
        main = std::move(body);
        continue;
      }
      report(DiagCode::Parse,
             std::string("expected 'let' or 'main', found ") + std::string(token_name(peek().kind)),
             peek().loc);
      recover_to_semi();
    }

    if (!saw_main && diagnostics_.empty()) {
      report(DiagCode::Parse, "missing main entry", peek().loc);
    }

    ParseResult result;
    result.diagnostics = std::move(diagnostics_);
    const bool has_errors = !result.diagnostics.empty();
    if (saw_main && main && !has_errors) {
      result.file = SourceFile{std::move(main), std::move(decls)};
    }
    return result;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }

  Token take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  void report(DiagCode code, std::string message, SourceLoc loc) {
    diagnostics_.push_back(error_at(code, std::move(message), loc));
  }

  Token expect(Tok kind, std::string_view what) {
    if (peek().kind == kind) return take();
    report(DiagCode::Parse,
           "expected " + std::string(what) + ", found " + std::string(token_name(peek().kind)),
           peek().loc);
    return Token{Tok::Bad, "", peek().loc};
  }

  bool expect_ok(Tok kind, std::string_view what) {
    if (peek().kind == kind) {
      take();
      return true;
    }
    report(DiagCode::Parse,
           "expected " + std::string(what) + ", found " + std::string(token_name(peek().kind)),
           peek().loc);
    return false;
  }

  void recover_to_semi() {
    while (peek().kind != Tok::Semi && peek().kind != Tok::Eof) take();
    if (peek().kind == Tok::Semi) take();
  }

  // type ::= end | recvar | rec recvar . type | call name | branching
  TypePtr parse_type() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::KwEnd:
        return make_end(take().loc);
      case Tok::KwRec: {
        const Token rec_tok = take();
        const Token var = expect(Tok::Ident, "recursion variable");
        if (var.kind != Tok::Ident) return nullptr;
        if (!expect_ok(Tok::Dot, "'.' after the recursion variable")) return nullptr;
        TypePtr body = parse_type();
        if (!body) return nullptr;
        return make_rec(RecVar(var.text), std::move(body), rec_tok.loc);
      }
      case Tok::KwCall: {
        const Token call_tok = take();
        const Token name = expect(Tok::Ident, "declaration name after 'call'");
        if (name.kind != Tok::Ident) return nullptr;
        return make_call(DeclName(name.text), call_tok.loc);
      }
      case Tok::Ident: {
        if (peek(1).kind == Tok::Arrow) return parse_branching();
        const Token var = take();
        return make_var(RecVar(var.text), var.loc);
      }
      default:
        report(DiagCode::Parse,
               "expected a type, found " + std::string(token_name(t.kind)), t.loc);
        return nullptr;
    }
  }

  TypePtr parse_branching() {
    const Token sender = expect(Tok::Ident, "sender role");
    expect_ok(Tok::Arrow, "'->'");
    const Token receiver = expect(Tok::Ident, "receiver role");
    if (sender.kind != Tok::Ident || receiver.kind != Tok::Ident) return nullptr;
    if (!expect_ok(Tok::Colon, "':' after the receiver role")) return nullptr;

    bool self_msg = false;
    if (sender.text == receiver.text) {
      report(DiagCode::SelfMsg, "a role cannot send a message to itself: '" + sender.text + "'",
             sender.loc);
      self_msg = true;
    }

    std::vector<Branch> branches;
    std::map<std::string, SourceLoc> labels_seen;
    bool branch_error = false;

    auto parse_one = [&]() {
      const Token label = expect(Tok::Ident, "branch label");
      if (label.kind != Tok::Ident) {
        branch_error = true;
        return;
      }
      if (!expect_ok(Tok::LParen, "'(' after the branch label")) {
        branch_error = true;
        return;
      }
      Sort sort = Sort::Unit;
      switch (peek().kind) {
        case Tok::KwUnit: take(); break;
        case Tok::KwNat: take(); sort = Sort::Nat; break;
        case Tok::KwInt: take(); sort = Sort::Nat; break;  // alias
        case Tok::KwStr: take(); sort = Sort::Str; break;
        case Tok::KwBool: take(); sort = Sort::Bool; break;
        default: break;  // omitted sort means unit
      }
      if (!expect_ok(Tok::RParen, "')' after the payload sort")) {
        branch_error = true;
        return;
      }
      if (!expect_ok(Tok::Dot, "'.' before the branch continuation")) {
        branch_error = true;
        return;
      }
      TypePtr cont = parse_type();
      if (!cont) {
        branch_error = true;
        return;
      }
      const auto [it, fresh] = labels_seen.emplace(label.text, label.loc);
      if (!fresh) {
        report(DiagCode::DupLabel, "duplicate branch label '" + label.text + "'", label.loc);
        return;  // drop the duplicate, keep parsing
      }
      branches.push_back(Branch{Label(label.text), sort, std::move(cont)});
    };

    if (peek().kind == Tok::LBrace) {
      take();
      if (peek().kind == Tok::RBrace) {
        report(DiagCode::Parse, "a branching must offer at least one branch", peek().loc);
        take();
        return nullptr;
      }
      parse_one();
      while (peek().kind == Tok::Comma) {
        take();
        parse_one();
      }
      expect_ok(Tok::RBrace, "'}' or ',' after a branch");
    } else {
      parse_one();
    }

    if (self_msg || branch_error || branches.empty()) return nullptr;
    return make_branching(Role(sender.text), Role(receiver.text), std::move(branches), sender.loc);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace

ParseResult parse(std::string_view text) {
  Lexer lexer(text);
  Parser parser(lexer.run());
  return parser.run();
}

}  // namespace slt
