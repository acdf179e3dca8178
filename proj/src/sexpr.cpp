#include "bilat/sexpr.hpp"

#include <cctype>
#include <sstream>

namespace bilat {

namespace {

struct Token {
  enum Kind { LParen, RParen, Atom, End } kind;
  std::string text;
  std::size_t start;
  std::size_t end;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) {
    do {
      tokens_.push_back(lex());
    } while (tokens_.back().kind != Token::End);
  }

  const Token& peek() const { return tokens_[index_]; }
  const Token& take() { return tokens_[index_ == tokens_.size() - 1 ? index_ : index_++]; }

private:
  Token lex() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
    if (pos_ >= text_.size()) return {Token::End, "", text_.size(), text_.size()};
    std::size_t start = pos_;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      return {Token::LParen, "(", start, pos_};
    }
    if (c == ')') {
      ++pos_;
      return {Token::RParen, ")", start, pos_};
    }
    while (pos_ < text_.size()) {
      char a = text_[pos_];
      if (a == '(' || a == ')' || a == ';' ||
          std::isspace(static_cast<unsigned char>(a)))
        break;
      ++pos_;
    }
    return {Token::Atom, text_.substr(start, pos_ - start), start, pos_};
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

[[noreturn]] void err(const Token& t, const std::string& msg) {
  throw ParseError({t.start, t.end}, msg);
}

struct Parser {
  Lexer lex;

  explicit Parser(const std::string& text) : lex(text) {}

  Token expect(Token::Kind kind, const char* what) {
    Token t = lex.take();
    if (t.kind != kind) err(t, std::string("expected ") + what);
    return t;
  }

  bool atomAhead(const char* text) {
    return lex.peek().kind == Token::Atom && lex.peek().text == text;
  }

  unsigned nat() {
    Token t = expect(Token::Atom, "a natural number");
    for (char c : t.text)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        err(t, "expected a natural number");
    try {
      return static_cast<unsigned>(std::stoul(t.text));
    } catch (const std::exception&) {
      err(t, "assumption-class label out of range");
    }
  }

  Formula formula() {
    Token t = lex.take();
    if (t.kind == Token::Atom) {
      if (!validAtomName(t.text)) err(t, "invalid atom name");
      return Formula::atom(t.text);
    }
    if (t.kind != Token::LParen) err(t, "expected a formula");
    Token head = expect(Token::Atom, "a connective");
    Conn conn;
    if (head.text == "and") conn = Conn::And;
    else if (head.text == "or") conn = Conn::Or;
    else if (head.text == "imp") conn = Conn::Imp;
    else if (head.text == "not") conn = Conn::Not;
    else if (head.text == "conk") conn = Conn::Conk;
    else if (head.text == "honk") conn = Conn::Honk;
    else if (head.text == "tonk") conn = Conn::Tonk;
    else err(head, "unknown connective " + head.text);
    std::vector<Formula> operands;
    for (int i = 0; i < connArity(conn); ++i) operands.push_back(formula());
    expect(Token::RParen, ")");
    return Formula::make(conn, std::move(operands));
  }

  static bool validAtomName(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
  }

  SignedFormula signedFormula() {
    expect(Token::LParen, "a signed formula");
    Token signTok = expect(Token::Atom, "a sign");
    Sign sign;
    if (signTok.text == "+") sign = Sign::Plus;
    else if (signTok.text == "-") sign = Sign::Minus;
    else err(signTok, "expected + or -");
    Formula body = formula();
    expect(Token::RParen, ")");
    return {sign, std::move(body)};
  }

  Conclusion conclusion() {
    if (atomAhead("bot")) {
      lex.take();
      return Conclusion::absurdity();
    }
    return Conclusion::of(signedFormula());
  }

  Deduction node() {
    expect(Token::LParen, "a deduction node");
    Token head = expect(Token::Atom, "a rule name");
    if (head.text == "hyp") {
      unsigned label = nat();
      Conclusion c = conclusion();
      expect(Token::RParen, ")");
      Deduction d;
      d.rule = RuleName::Hyp;
      d.conclusion = std::move(c);
      d.label = label;
      return d;
    }
    std::optional<RuleName> rule = ruleFromToken(head.text);
    if (!rule) err(head, "unknown rule " + head.text);
    Deduction d;
    d.rule = *rule;
    d.conclusion = conclusion();
    expect(Token::LParen, "a discharge list");
    while (lex.peek().kind == Token::Atom) d.discharged.push_back(nat());
    expect(Token::RParen, ")");
    while (lex.peek().kind == Token::LParen) d.premises.push_back(node());
    expect(Token::RParen, ")");
    return d;
  }
};

}  // namespace

Deduction parseDeduction(const std::string& text) {
  Parser p(text);
  Deduction d = p.node();
  Token t = p.lex.take();
  if (t.kind != Token::End) err(t, "trailing content after deduction");
  return d;
}

Formula parseFormula(const std::string& text) {
  Parser p(text);
  Formula f = p.formula();
  Token t = p.lex.take();
  if (t.kind != Token::End) err(t, "trailing content after formula");
  return f;
}

std::string print(const Formula& f) {
  if (f.isAtom()) return f.atomName();
  std::string s = "(";
  s += connToken(f.conn());
  for (const Formula& op : f.operands()) {
    s += ' ';
    s += print(op);
  }
  s += ')';
  return s;
}

std::string print(const SignedFormula& sf) {
  return std::string("(") + signToken(sf.sign) + " " + print(sf.body) + ")";
}

std::string print(const Conclusion& c) {
  return c.isAbsurdity() ? "bot" : print(c.signedFormula());
}

std::string print(const Deduction& d) {
  std::ostringstream out;
  if (d.rule == RuleName::Hyp) {
    out << "(hyp " << d.label << " " << print(d.conclusion) << ")";
    return out.str();
  }
  out << "(" << ruleInfo(d.rule).token << " " << print(d.conclusion) << " (";
  for (std::size_t i = 0; i < d.discharged.size(); ++i) {
    if (i) out << " ";
    out << d.discharged[i];
  }
  out << ")";
  for (const Deduction& p : d.premises) out << " " << print(p);
  out << ")";
  return out.str();
}

std::string print(const Path& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  s += "]";
  return s;
}

}  // namespace bilat
