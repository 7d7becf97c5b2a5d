#include <doctest.h>

#include "pint/decide.hpp"

using namespace pint;

namespace {

const PointTheory kAll[] = {PointTheory::DloOpen, PointTheory::DloLeft,
                            PointTheory::DloRight, PointTheory::DloClosed,
                            PointTheory::DiscreteUnbounded};

PFormulaPtr lit_lt(LTerm s, LTerm t) {
  return PFormula::literal({false, s, t});
}
PFormulaPtr lit_eq(LTerm s, LTerm t) {
  return PFormula::literal({true, s, t});
}
PFormulaPtr fa(int v, PFormulaPtr f) {
  return PFormula::quantifier(PConn::Forall, v, std::move(f));
}
PFormulaPtr ex(int v, PFormulaPtr f) {
  return PFormula::quantifier(PConn::Exists, v, std::move(f));
}
PFormulaPtr land(PFormulaPtr a, PFormulaPtr b) {
  return PFormula::binary(PConn::And, std::move(a), std::move(b));
}
PFormulaPtr imp(PFormulaPtr a, PFormulaPtr b) {
  return PFormula::binary(PConn::Imp, std::move(a), std::move(b));
}
PFormulaPtr iff(PFormulaPtr a, PFormulaPtr b) {
  return PFormula::binary(PConn::Iff, std::move(a), std::move(b));
}
PFormulaPtr lnot(PFormulaPtr a) { return PFormula::negation(std::move(a)); }

void agree(const PFormulaPtr& s, PointTheory t, bool expected) {
  CAPTURE(theory_name(t));
  CHECK(qe_decide(s, t) == expected);
  CHECK(eval_testpoints(s, t) == expected);
}

}  // namespace

TEST_CASE("theory traits and names") {
  CHECK(theory_dense(PointTheory::DloOpen));
  CHECK(theory_dense(PointTheory::DloClosed));
  CHECK_FALSE(theory_dense(PointTheory::DiscreteUnbounded));
  CHECK_FALSE(theory_has_min(PointTheory::DloOpen));
  CHECK(theory_has_min(PointTheory::DloLeft));
  CHECK_FALSE(theory_has_max(PointTheory::DloLeft));
  CHECK(theory_has_max(PointTheory::DloRight));
  CHECK(theory_has_min(PointTheory::DloClosed));
  CHECK(theory_has_max(PointTheory::DloClosed));
  CHECK(theory_name(PointTheory::DloOpen) == "dlo-open");
  CHECK(theory_name(PointTheory::DloLeft) == "dlo-left");
  CHECK(theory_name(PointTheory::DloRight) == "dlo-right");
  CHECK(theory_name(PointTheory::DloClosed) == "dlo-closed");
  CHECK(theory_name(PointTheory::DiscreteUnbounded) == "discrete-unbounded");
}

TEST_CASE("density separates the theories") {
  // all a. all b. (a < b -> ex x. (a < x & x < b))
  auto betw = fa(0, fa(1, imp(lit_lt(LTerm::mkvar(0), LTerm::mkvar(1)),
                              ex(2, land(lit_lt(LTerm::mkvar(0), LTerm::mkvar(2)),
                                         lit_lt(LTerm::mkvar(2), LTerm::mkvar(1)))))));
  for (PointTheory t : kAll) agree(betw, t, theory_dense(t));
}

TEST_CASE("endpoints separate the theories") {
  // all b. ex x. x < b  — fails exactly when a least element exists
  auto below =
      fa(0, ex(1, lit_lt(LTerm::mkvar(1), LTerm::mkvar(0))));
  for (PointTheory t : kAll) agree(below, t, !theory_has_min(t));
  // all b. ex x. b < x
  auto above =
      fa(0, ex(1, lit_lt(LTerm::mkvar(0), LTerm::mkvar(1))));
  for (PointTheory t : kAll) agree(above, t, !theory_has_max(t));
}

TEST_CASE("endpoint constants") {
  // ex x. (MIN < x & x < MAX) over the closed segment
  auto interior = ex(0, land(lit_lt(LTerm::min(), LTerm::mkvar(0)),
                             lit_lt(LTerm::mkvar(0), LTerm::max())));
  agree(interior, PointTheory::DloClosed, true);
  // all x. (x = MIN | MIN < x) over theories with a least element
  auto least = fa(0, PFormula::binary(
                         PConn::Or, lit_eq(LTerm::mkvar(0), LTerm::min()),
                         lit_lt(LTerm::min(), LTerm::mkvar(0))));
  agree(least, PointTheory::DloLeft, true);
  agree(least, PointTheory::DloClosed, true);
}

TEST_CASE("discrete offsets") {
  PointTheory zz = PointTheory::DiscreteUnbounded;
  // all a. all b. (a < b <-> (a+1 < b | a+1 = b))
  auto succ_lt =
      fa(0, fa(1, iff(lit_lt(LTerm::mkvar(0), LTerm::mkvar(1)),
                      PFormula::binary(
                          PConn::Or,
                          lit_lt(LTerm::mkvar(0, 1), LTerm::mkvar(1)),
                          lit_eq(LTerm::mkvar(0, 1), LTerm::mkvar(1))))));
  agree(succ_lt, zz, true);
  // all a. ex b. b = a + 1
  auto succ = fa(0, ex(1, lit_eq(LTerm::mkvar(1), LTerm::mkvar(0, 1))));
  agree(succ, zz, true);
  // all a. ex b. (a < b & ~ ex c. (a < c & c < b)) — immediate successors
  auto immediate =
      fa(0, ex(1, land(lit_lt(LTerm::mkvar(0), LTerm::mkvar(1)),
                       lnot(ex(2, land(lit_lt(LTerm::mkvar(0), LTerm::mkvar(2)),
                                       lit_lt(LTerm::mkvar(2), LTerm::mkvar(1))))))));
  agree(immediate, zz, true);
  agree(immediate, PointTheory::DloOpen, false);
  // offsets shift both sides consistently: all a. all b. (a+1 = b+1 <-> a = b)
  auto shift = fa(0, fa(1, iff(lit_eq(LTerm::mkvar(0, 1), LTerm::mkvar(1, 1)),
                               lit_eq(LTerm::mkvar(0), LTerm::mkvar(1)))));
  agree(shift, zz, true);
}

TEST_CASE("find_witness returns smallest-first assignments") {
  PointTheory zz = PointTheory::DiscreteUnbounded;
  // ex x. ex y. (x < y & ~ ex z. (x < z & z < y))
  auto s = ex(0, ex(1, land(lit_lt(LTerm::mkvar(0), LTerm::mkvar(1)),
                            lnot(ex(2, land(lit_lt(LTerm::mkvar(0), LTerm::mkvar(2)),
                                            lit_lt(LTerm::mkvar(2), LTerm::mkvar(1))))))));
  auto w = find_witness(s, zz);
  REQUIRE(w.has_value());
  REQUIRE(w->count(0));
  REQUIRE(w->count(1));
  CHECK((*w)[1] == (*w)[0] + 1);
  CHECK(denominator((*w)[0]) == 1);

  auto dense = find_witness(
      ex(0, ex(1, lit_lt(LTerm::mkvar(0), LTerm::mkvar(1)))),
      PointTheory::DloOpen);
  REQUIRE(dense.has_value());
  CHECK((*dense)[0] < (*dense)[1]);

  CHECK_FALSE(find_witness(ex(0, lit_lt(LTerm::mkvar(0), LTerm::mkvar(0))),
                           PointTheory::DloOpen)
                  .has_value());
}

TEST_CASE("two-sorted sentences route through translation") {
  ParseOptions closed;
  auto sub = parse_formula("all x:i. ex z:i. ii04(z,x)", closed);
  REQUIRE(bool(sub));
  // every interval has a strict subinterval over dense orders only
  CHECK(decide_over(sub.formula, TheorySpec::infinite(PointTheory::DloOpen))
            .valid);
  DecideOutcome zz = decide_over(
      sub.formula, TheorySpec::infinite(PointTheory::DiscreteUnbounded));
  CHECK_FALSE(zz.valid);
  CHECK(zz.verdict == "INVALID");
  CHECK(zz.failing_theory == "discrete-unbounded");
  CHECK_FALSE(zz.witness.empty());
}

TEST_CASE("decide_over chains finds countermodels") {
  ParseOptions fs;
  fs.free_sorts = {{"x", Sort::Interval}, {"y", Sort::Interval}};
  auto body = parse_formula("ii34(x,y) -> ii44(x,y)", fs);
  REQUIRE(bool(body));
  auto sentence = Formula::quantifier(
      Conn::Forall, "x", Sort::Interval,
      Formula::quantifier(Conn::Forall, "y", Sort::Interval, body.formula));

  CHECK(decide_over(sentence, TheorySpec::chain(2)).valid);
  DecideOutcome c3 = decide_over(sentence, TheorySpec::chain(3));
  CHECK_FALSE(c3.valid);
  CHECK(c3.failing_theory == "chain3");
  CHECK(c3.witness == "x=[0,1] y=[1,2]");

  DecideOutcome lin = decide_sentence(sentence, ClassTag::Lin);
  CHECK_FALSE(lin.valid);
  CHECK(lin.failing_theory == "chain3");  // first failing representative

  // a Lin validity: meets and before are disjoint
  auto disj = parse_formula("ii34(x,y) -> ~ii44(x,y)", fs);
  REQUIRE(bool(disj));
  auto closed2 = Formula::quantifier(
      Conn::Forall, "x", Sort::Interval,
      Formula::quantifier(Conn::Forall, "y", Sort::Interval, disj.formula));
  DecideOutcome ok = decide_sentence(closed2, ClassTag::Lin);
  CHECK(ok.valid);
  CHECK(ok.verdict == "VALID_ON_REPRESENTATIVES");
  CHECK(decide_sentence(closed2, ClassTag::Den).verdict == "VALID");
}

TEST_CASE("class representatives") {
  auto den = class_representatives(ClassTag::Den);
  REQUIRE(den.size() == 6);
  CHECK(den[0].name() == "chain0");
  CHECK(den[1].name() == "chain1");
  CHECK(den[2].name() == "dlo-open");
  CHECK(den[5].name() == "dlo-closed");
  auto unb = class_representatives(ClassTag::Unb);
  REQUIRE(unb.size() == 2);
  CHECK(unb[0].name() == "dlo-open");
  CHECK(unb[1].name() == "discrete-unbounded");
  CHECK(class_representatives(ClassTag::Lin).size() == 9);
  CHECK(class_representatives(ClassTag::Dis).size() == 8);
  CHECK(class_complete(ClassTag::Den));
  CHECK_FALSE(class_complete(ClassTag::Unb));
  CHECK(class_from_name("den") == ClassTag::Den);
  CHECK(class_from_name("unb") == ClassTag::Unb);
  CHECK_FALSE(class_from_name("dense").has_value());
  CHECK(class_name(ClassTag::Dis) == "dis");
}
