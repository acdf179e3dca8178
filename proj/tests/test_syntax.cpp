#include <doctest.h>

#include "bilat/formula.hpp"
#include "bilat/sexpr.hpp"
#include "oracles.hpp"

using namespace bilat;

TEST_CASE("degree counts connective occurrences") {
  Formula f = parseFormula("(imp (or A B) (not C))");
  CHECK(f.degree() == 3);
  CHECK(f.degree() == oracle::formulaDegree(f));
  CHECK(Formula::atom("A").degree() == 0);
  CHECK(parseFormula("(and (and A A) (and A A))").degree() == 3);
}

TEST_CASE("conjugation flips the sign and nothing else") {
  SignedFormula sf{Sign::Plus, parseFormula("(and A B)")};
  CHECK(star(sf).sign == Sign::Minus);
  CHECK(star(sf).body == sf.body);
  CHECK(star(star(sf)) == sf);
}

TEST_CASE("formula identity is structural") {
  CHECK(parseFormula("(and A B)") == parseFormula("(and A B)"));
  CHECK(parseFormula("(and A B)") != parseFormula("(and B A)"));
  CHECK(parseFormula("(or A B)") != parseFormula("(and A B)"));
  CHECK(Formula::atom("A") < Formula::atom("B"));
}

TEST_CASE("subformulas collects each distinct part once") {
  std::set<Formula> subs = subformulas(parseFormula("(imp A (and A B))"));
  CHECK(subs.size() == 4);
  CHECK(subs.count(Formula::atom("A")) == 1);
  CHECK(subs.count(Formula::atom("B")) == 1);
  CHECK(subs.count(parseFormula("(and A B)")) == 1);
  CHECK(subs.count(parseFormula("(imp A (and A B))")) == 1);
}

TEST_CASE("incoherence conclusion differs from every signed conclusion") {
  Conclusion bot = Conclusion::absurdity();
  CHECK(bot.isAbsurdity());
  CHECK_FALSE(bot.isSigned());
  CHECK(bot.degree() == 0);
  CHECK(bot != Conclusion::of({Sign::Plus, Formula::atom("A")}));
  CHECK(bot == Conclusion::absurdity());
}

TEST_CASE("connective arity table") {
  CHECK(connArity(Conn::Not) == 1);
  CHECK(connArity(Conn::And) == 2);
  CHECK(connArity(Conn::Tonk) == 2);
  CHECK(connArity(Conn::Atom) == 0);
}
