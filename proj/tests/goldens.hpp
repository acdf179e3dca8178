// Frozen test vectors shared by the unit tests and the acceptance gate.
#pragma once

#include <vector>

#include "bilat/analysis.hpp"
#include "bilat/check.hpp"

namespace goldens {

struct RuleGolden {
  const char* system;
  const char* text;
};

// One well-formed instance of every inference rule.
inline const std::vector<RuleGolden> kRules = {
    {"B", "(hyp 1 (+ A))"},
    {"B", "(+andI (+ (and A B)) () (hyp 1 (+ A)) (hyp 2 (+ B)))"},
    {"B", "(+andE1 (+ A) () (hyp 1 (+ (and A B))))"},
    {"B", "(+andE2 (+ B) () (hyp 1 (+ (and A B))))"},
    {"B", "(-andI1 (- (and A B)) () (hyp 1 (- A)))"},
    {"B", "(-andI2 (- (and A B)) () (hyp 1 (- B)))"},
    {"B",
     "(-andE (+ C) (1 2) (hyp 3 (- (and A B))) (hyp 4 (+ C)) (hyp 4 (+ C)))"},
    {"B", "(+orI1 (+ (or A B)) () (hyp 1 (+ A)))"},
    {"B", "(+orI2 (+ (or A B)) () (hyp 1 (+ B)))"},
    {"B",
     "(+orE (+ C) (1 2) (hyp 3 (+ (or A B))) (hyp 4 (+ C)) (hyp 4 (+ C)))"},
    {"B", "(-orI (- (or A B)) () (hyp 1 (- A)) (hyp 2 (- B)))"},
    {"B", "(-orE1 (- A) () (hyp 1 (- (or A B))))"},
    {"B", "(-orE2 (- B) () (hyp 1 (- (or A B))))"},
    {"B", "(+impI (+ (imp A A)) (1) (hyp 1 (+ A)))"},
    {"B", "(+impE (+ B) () (hyp 1 (+ (imp A B))) (hyp 2 (+ A)))"},
    {"B", "(-impI (- (imp A B)) () (hyp 1 (+ A)) (hyp 2 (- B)))"},
    {"B", "(-impE1 (+ A) () (hyp 1 (- (imp A B))))"},
    {"B", "(-impE2 (- B) () (hyp 1 (- (imp A B))))"},
    {"B", "(+notI (+ (not A)) () (hyp 1 (- A)))"},
    {"B", "(+notE (- A) () (hyp 1 (+ (not A))))"},
    {"B", "(-notI (- (not A)) () (hyp 1 (+ A)))"},
    {"B", "(-notE (+ A) () (hyp 1 (- (not A))))"},
    {"B", "(red (+ A) (1) (nc bot () (hyp 2 (+ A)) (hyp 1 (- A))))"},
    {"B", "(nc bot () (hyp 1 (+ A)) (hyp 2 (- A)))"},
    {"B+tonk", "(+tonkI (+ (tonk A B)) () (hyp 1 (+ A)))"},
    {"B+tonk", "(tonkE (+ B) () (hyp 1 (+ (tonk A B))))"},
    {"B+conk", "(+conkI (+ (conk A B)) () (hyp 1 (+ A)) (hyp 2 (+ B)))"},
    {"B+conk", "(+conkE1 (+ A) () (hyp 1 (+ (conk A B))))"},
    {"B+conk", "(+conkE2 (+ B) () (hyp 1 (+ (conk A B))))"},
    {"B+conk", "(-conkI (- (conk A B)) () (hyp 1 (- A)) (hyp 2 (- B)))"},
    {"B+conk", "(-conkE1 (- A) () (hyp 1 (- (conk A B))))"},
    {"B+conk", "(-conkE2 (- B) () (hyp 1 (- (conk A B))))"},
    {"B+honk", "(+honkI (+ (honk A B)) () (hyp 1 (- A)) (hyp 2 (+ B)))"},
    {"B+honk", "(+honkE1 (- A) () (hyp 1 (+ (honk A B))))"},
    {"B+honk", "(+honkE2 (+ B) () (hyp 1 (+ (honk A B))))"},
    {"B+honk", "(-honkI (- (honk A B)) () (hyp 1 (+ A)) (hyp 2 (- B)))"},
    {"B+honk", "(-honkE1 (+ A) () (hyp 1 (- (honk A B))))"},
    {"B+honk", "(-honkE2 (- B) () (hyp 1 (- (honk A B))))"},
};

struct Mutant {
  const char* text;
  bilat::ViolationKind kind;
  bilat::Path position;
  const char* system = "B";
  bilat::Mode redMode = bilat::Mode::General;
};

inline const std::vector<Mutant> kMutants = {
    {"(+andI (+ (and A B)) () (hyp 1 (+ A)))", bilat::ViolationKind::Arity, {}},
    {"(+andE1 (+ B) () (hyp 1 (+ (and A B))))",
     bilat::ViolationKind::Schema,
     {}},
    {"(hyp 1 bot)", bilat::ViolationKind::AbsurdityAsHypothesis, {}},
    {"(+andI (+ (and A B)) () (hyp 1 (+ A)) (hyp 1 (+ B)))",
     bilat::ViolationKind::InconsistentAssumptionClass,
     {1}},
    {"(+impI (+ (imp A (imp A A))) (1) (+impI (+ (imp A A)) (1) (hyp 1 (+ "
     "A))))",
     bilat::ViolationKind::DischargeScope,
     {0}},
    {"(+andI (+ (and (imp A A) A)) () (+impI (+ (imp A A)) (1) (hyp 1 (+ A))) "
     "(hyp 1 (+ A)))",
     bilat::ViolationKind::DischargeScope,
     {1}},
    {"(+impI (+ (imp A B)) (1) (hyp 1 (+ B)))",
     bilat::ViolationKind::Schema,
     {}},
    {"(+conkI (+ (conk A B)) () (hyp 1 (+ A)) (hyp 2 (+ B)))",
     bilat::ViolationKind::RuleOutsideSystem,
     {}},
    {"(red (+ (and A B)) (1) (nc bot () (hyp 2 (+ A)) (hyp 3 (- A))))",
     bilat::ViolationKind::Restriction,
     {},
     "B",
     bilat::Mode::AtomicOnly},
    {"(nc bot () (hyp 1 (+ A)) (hyp 2 (- B)))",
     bilat::ViolationKind::Schema,
     {}},
};

struct ReductionGolden {
  const char* file;       // corpus entry holding the left-hand deduction
  bilat::RedexKind kind;  // expected selected redex
  const char* subcase;    // expected trace tag of the first step
  const char* rhs;        // result of the single operation, up to relabelling
};

inline const std::vector<ReductionGolden> kReductions = {
    {"a1_perm.bnd", bilat::RedexKind::Perm, "into-elim",
     "(-andE (+ E) (5 6) (hyp 1 (- (and A B))) (+orE (+ E) (11 12) (hyp 3 (+ "
     "(or C D))) (hyp 7 (+ E)) (hyp 8 (+ E))) (+orE (+ E) (13 14) (hyp 4 (+ "
     "(or C D))) (hyp 7 (+ E)) (hyp 8 (+ E))))"},
    {"a2_perm_nc.bnd", bilat::RedexKind::Perm, "into-nc",
     "(-andE bot (2 3) (hyp 4 (- (and B C))) (nc bot () (hyp 1 (+ A)) (hyp 5 "
     "(- A))) (nc bot () (hyp 1 (+ A)) (hyp 6 (- A))))"},
    {"bb1_re_and.bnd", bilat::RedexKind::RE, "and1",
     "(red (+ A) (3) (nc bot () (-andI1 (- (and A B)) () (hyp 3 (- A))) (hyp "
     "2 (+ (and A B)))))"},
    {"bb3i_re_imp.bnd", bilat::RedexKind::RE, "imp-i",
     "(red (+ A) (4) (nc bot () (-impI (- (imp B A)) () (hyp 3 (+ B)) (hyp 4 "
     "(- A))) (hyp 2 (+ (imp B A)))))"},
    {"bb3ii_re_imp.bnd", bilat::RedexKind::RE, "imp-ii",
     "(red (- A) (3) (nc bot () (+impI (+ (imp B A)) (4) (hyp 3 (+ A))) (hyp "
     "2 (- (imp B A)))))"},
    {"bb3iii_re_imp.bnd", bilat::RedexKind::RE, "imp-iii",
     "(red (+ A) (5) (nc bot () (+impI (+ (imp A B)) (3) (red (+ B) (4) (nc "
     "bot () (hyp 3 (+ A)) (hyp 5 (- A))))) (hyp 2 (- (imp A B)))))"},
    {"bb4_re_or.bnd", bilat::RedexKind::RE, "or",
     "(red (+ E) (7) (nc bot () (-orI (- (or A B)) () (red (- A) (8) (nc bot "
     "() (hyp 5 (+ E)) (hyp 7 (- E)))) (red (- B) (9) (nc bot () (hyp 6 (+ "
     "E)) (hyp 7 (- E))))) (hyp 2 (+ (or A B)))))"},
    {"bc1_rnc.bnd", bilat::RedexKind::RNC, "1",
     "(nc bot () (-notI (- (not A)) () (hyp 1 (+ A))) (hyp 3 (+ (not A))))"},
    {"bc2_rnc.bnd", bilat::RedexKind::RNC, "2",
     "(nc bot () (hyp 1 (+ A)) (hyp 3 (- A)))"},
    {"bd1_inc_and.bnd", bilat::RedexKind::INC, "and",
     "(nc bot () (hyp 2 (+ B)) (hyp 3 (- B)))"},
    {"bd2_inc_imp.bnd", bilat::RedexKind::INC, "imp",
     "(nc bot () (+impE (+ B) () (hyp 5 (+ (imp A B))) (hyp 3 (+ A))) (hyp 4 "
     "(- B)))"},
};

// atomizeNC applied to the corpus entry on the left.
inline const char* kAtomizationLhs = "nc_complex.bnd";
inline const char* kAtomizationRhs =
    "(+orE bot (3 4) (hyp 1 (+ (or C D))) (nc bot () (hyp 3 (+ C)) (-orE1 (- "
    "C) () (hyp 2 (- (or C D))))) (nc bot () (hyp 4 (+ D)) (-orE2 (- D) () "
    "(hyp 2 (- (or C D))))))";

}  // namespace goldens
