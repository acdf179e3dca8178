#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace bilat {

enum class Conn { Atom, And, Or, Imp, Not, Conk, Honk, Tonk };

int connArity(Conn c);
const char* connToken(Conn c);

// Immutable formula tree. Copies share structure; equality is structural.
class Formula {
public:
  Formula() = default;

  static Formula atom(std::string name);
  static Formula make(Conn c, std::vector<Formula> operands);
  static Formula binary(Conn c, Formula left, Formula right);
  static Formula negation(Formula operand);

  bool valid() const { return node_ != nullptr; }
  Conn conn() const { return node_->conn; }
  bool isAtom() const { return node_->conn == Conn::Atom; }
  const std::string& atomName() const { return node_->name; }
  const std::vector<Formula>& operands() const { return node_->operands; }
  const Formula& operand(int i) const { return node_->operands[i]; }

  // Number of connective occurrences.
  int degree() const { return node_->degree; }

  friend bool operator==(const Formula& a, const Formula& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Formula& a, const Formula& b) { return compare(a, b) != 0; }
  friend bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }

  static int compare(const Formula& a, const Formula& b);

private:
  struct Node {
    Conn conn;
    std::string name;             // Conn::Atom only
    std::vector<Formula> operands;
    int degree;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Reflexive-transitive closure of the immediate-operand relation.
std::set<Formula> subformulas(const Formula& f);

enum class Sign { Plus, Minus };

Sign flipSign(Sign s);
const char* signToken(Sign s);

struct SignedFormula {
  Sign sign = Sign::Plus;
  Formula body;

  int degree() const { return body.degree(); }

  friend bool operator==(const SignedFormula& a, const SignedFormula& b) {
    return a.sign == b.sign && a.body == b.body;
  }
  friend bool operator!=(const SignedFormula& a, const SignedFormula& b) { return !(a == b); }
  friend bool operator<(const SignedFormula& a, const SignedFormula& b) {
    if (a.sign != b.sign) return a.sign < b.sign;
    return a.body < b.body;
  }
};

// Same body, opposite sign.
SignedFormula star(const SignedFormula& sf);

// A node's conclusion: a signed formula, or the incoherence marker.
class Conclusion {
public:
  Conclusion() = default;

  static Conclusion absurdity() { return Conclusion(); }
  static Conclusion of(SignedFormula sf);

  bool isAbsurdity() const { return !signed_.valid(); }
  bool isSigned() const { return signed_.valid(); }
  Sign sign() const { return sign_; }
  const Formula& body() const { return signed_; }
  SignedFormula signedFormula() const { return {sign_, signed_}; }

  int degree() const { return isAbsurdity() ? 0 : signed_.degree(); }

  friend bool operator==(const Conclusion& a, const Conclusion& b);
  friend bool operator!=(const Conclusion& a, const Conclusion& b) { return !(a == b); }

private:
  Sign sign_ = Sign::Plus;
  Formula signed_;  // invalid handle encodes absurdity
};

}  // namespace bilat
