#include "bilat/formula.hpp"

#include <cassert>

namespace bilat {

int connArity(Conn c) {
  switch (c) {
    case Conn::Atom: return 0;
    case Conn::Not: return 1;
    default: return 2;
  }
}

const char* connToken(Conn c) {
  switch (c) {
    case Conn::Atom: return "";
    case Conn::And: return "and";
    case Conn::Or: return "or";
    case Conn::Imp: return "imp";
    case Conn::Not: return "not";
    case Conn::Conk: return "conk";
    case Conn::Honk: return "honk";
    case Conn::Tonk: return "tonk";
  }
  return "";
}

Formula Formula::atom(std::string name) {
  auto node = std::make_shared<Node>();
  node->conn = Conn::Atom;
  node->name = std::move(name);
  node->degree = 0;
  return Formula(std::move(node));
}

Formula Formula::make(Conn c, std::vector<Formula> operands) {
  assert(static_cast<int>(operands.size()) == connArity(c));
  auto node = std::make_shared<Node>();
  node->conn = c;
  node->degree = 1;
  for (const Formula& op : operands) node->degree += op.degree();
  node->operands = std::move(operands);
  return Formula(std::move(node));
}

Formula Formula::binary(Conn c, Formula left, Formula right) {
  return make(c, {std::move(left), std::move(right)});
}

Formula Formula::negation(Formula operand) {
  return make(Conn::Not, {std::move(operand)});
}

int Formula::compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  if (a.node_->conn != b.node_->conn)
    return a.node_->conn < b.node_->conn ? -1 : 1;
  if (a.node_->conn == Conn::Atom)
    return a.node_->name.compare(b.node_->name);
  for (std::size_t i = 0; i < a.node_->operands.size(); ++i) {
    int c = compare(a.node_->operands[i], b.node_->operands[i]);
    if (c != 0) return c;
  }
  return 0;
}

namespace {
void collectSubformulas(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  for (const Formula& op : f.operands()) collectSubformulas(op, out);
}
}  // namespace

std::set<Formula> subformulas(const Formula& f) {
  std::set<Formula> out;
  collectSubformulas(f, out);
  return out;
}

Sign flipSign(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

const char* signToken(Sign s) { return s == Sign::Plus ? "+" : "-"; }

SignedFormula star(const SignedFormula& sf) { return {flipSign(sf.sign), sf.body}; }

Conclusion Conclusion::of(SignedFormula sf) {
  Conclusion c;
  c.sign_ = sf.sign;
  c.signed_ = std::move(sf.body);
  return c;
}

bool operator==(const Conclusion& a, const Conclusion& b) {
  if (a.isAbsurdity() || b.isAbsurdity()) return a.isAbsurdity() == b.isAbsurdity();
  return a.sign_ == b.sign_ && a.signed_ == b.signed_;
}

}  // namespace bilat
