#include <doctest.h>

#include <algorithm>

#include "pint/data.hpp"
#include "pint/zeta.hpp"

using namespace pint;

namespace {

const ZetaCheck* find_check(const ZetaReport& rep, std::string_view name) {
  auto it = std::find_if(rep.checks.begin(), rep.checks.end(),
                         [&](const ZetaCheck& c) { return c.name == name; });
  return it == rep.checks.end() ? nullptr : &*it;
}

ZetaSpec identity_spec(OrderKind order) {
  ZetaSpec s;
  s.id = "identity";
  s.order = order;
  GuardedAffineMap::Piece id_pt{ZGuard{}, Aff{1, 0, 0}, Aff{}};
  GuardedAffineMap::Piece id_iv{ZGuard{}, Aff{1, 0, 0}, Aff{0, 1, 0}};
  s.point_map.pieces = {id_pt};
  s.point_inv.pieces = {id_pt};
  s.interval_map.pieces = {id_iv};
  s.interval_inv.pieces = {id_iv};
  return s;
}

}  // namespace

TEST_CASE("rationals parse and print") {
  CHECK(rat_to_string(rat_parse("3")) == "3");
  CHECK(rat_to_string(rat_parse("-7")) == "-7");
  CHECK(rat_to_string(rat_parse("1/2")) == "1/2");
  CHECK(rat_to_string(rat_parse("3/6")) == "1/2");
  CHECK(rat_to_string(rat_parse("-14/5")) == "-14/5");
  CHECK(rat_parse("2/4") == Rat(1, 2));
}

TEST_CASE("elements parse and print") {
  auto p = QElem::parse("-1/2");
  REQUIRE(p.has_value());
  CHECK(p->sort == Sort::Point);
  CHECK(p->a == Rat(-1, 2));
  CHECK(p->to_string() == "-1/2");

  auto i = QElem::parse("[-14/5,3]");
  REQUIRE(i.has_value());
  CHECK(i->sort == Sort::Interval);
  CHECK(i->a == Rat(-14, 5));
  CHECK(i->b == 3);
  CHECK(i->to_string() == "[-14/5,3]");

  CHECK_FALSE(QElem::parse("[2,1]").has_value());  // not an interval
  CHECK_FALSE(QElem::parse("[1,1]").has_value());
  CHECK_FALSE(QElem::parse("abc").has_value());
}

TEST_CASE("orders") {
  CHECK(order_from_name("QQ") == OrderKind::QQ);
  CHECK(order_from_name("ZZ") == OrderKind::ZZ);
  CHECK(order_from_name("QQ01") == OrderKind::QQ01);
  CHECK_FALSE(order_from_name("RR").has_value());
  CHECK(order_name(OrderKind::QQ01) == "QQ01");

  CHECK(order_contains(OrderKind::QQ, Rat(1, 3)));
  CHECK(order_contains(OrderKind::ZZ, Rat(-5)));
  CHECK_FALSE(order_contains(OrderKind::ZZ, Rat(1, 2)));
  CHECK(order_contains(OrderKind::QQ01, Rat(1, 2)));
  CHECK(order_contains(OrderKind::QQ01, Rat(0)));
  CHECK(order_contains(OrderKind::QQ01, Rat(1)));
  CHECK_FALSE(order_contains(OrderKind::QQ01, Rat(3, 2)));
  CHECK_FALSE(order_contains(OrderKind::QQ01, Rat(-1, 2)));

  auto qq = order_classes(OrderKind::QQ);
  CHECK(std::count(qq.begin(), qq.end(), ClassTag::Den) == 1);
  CHECK(std::count(qq.begin(), qq.end(), ClassTag::Dis) == 0);
  auto zz = order_classes(OrderKind::ZZ);
  CHECK(std::count(zz.begin(), zz.end(), ClassTag::Dis) == 1);
  CHECK(std::count(zz.begin(), zz.end(), ClassTag::Den) == 0);
  auto seg = order_classes(OrderKind::QQ01);
  CHECK(std::count(seg.begin(), seg.end(), ClassTag::Unb) == 0);
  CHECK(std::count(seg.begin(), seg.end(), ClassTag::Den) == 1);
}

TEST_CASE("holds_q mirrors the region semantics") {
  auto I = [](int l, int r) { return QElem::interval(Rat(l), Rat(r)); };
  CHECK(holds_q(Rel::ii34, I(0, 1), I(1, 2)));
  CHECK(holds_q(Rel::ii04, I(1, 2), I(0, 3)));
  CHECK(holds_q(Rel::ip2, I(0, 2), QElem::point(Rat(1))));
  CHECK_FALSE(holds_q(Rel::ip2, I(0, 2), QElem::point(Rat(2))));
  CHECK(holds_q(Rel::pp4, QElem::point(Rat(-1, 2)), QElem::point(Rat(1, 3))));
}

TEST_CASE("catalog parsing") {
  const char* text =
      "# example\n"
      "zeta shift order=ZZ expect=pass\n"
      "point piece guard=\"true\" out=\"a\"\n"
      "point inv piece guard=\"true\" out=\"a\"\n"
      "interval piece guard=\"b-a=1\" out=\"[a+1,b+1]\"\n"
      "interval piece guard=\"b-a>1\" out=\"[a,b]\"\n"
      "interval inv piece guard=\"b-a=1\" out=\"[a-1,b-1]\"\n"
      "interval inv piece guard=\"b-a>1\" out=\"[a,b]\"\n"
      "respects lt,eqp,ip2,ii24,eqi\n"
      "break ip1 x=\"[0,1]\" y=\"0\" fx=\"[1,2]\" fy=\"0\"\n"
      "end\n";
  ZetaCatalog cat = parse_zeta_catalog(text);
  REQUIRE_MESSAGE(cat.ok(),
                  (cat.errors.empty() ? "" : cat.errors[0].message.c_str()));
  REQUIRE(cat.specs.size() == 1);
  const ZetaSpec& s = cat.specs[0];
  CHECK(s.id == "shift");
  CHECK(s.order == OrderKind::ZZ);
  CHECK(s.expect_pass);
  CHECK_FALSE(s.deviates);
  CHECK(s.interval_map.pieces.size() == 2);
  CHECK(s.respects ==
        ExplicitSet::of({Rel::pp4, Rel::pp2, Rel::ip2, Rel::ii24, Rel::ii13}));
  REQUIRE(s.breaks.size() == 1);
  CHECK(s.breaks[0].rel == Rel::ip1);
  CHECK(s.breaks[0].fx == QElem::interval(Rat(1), Rat(2)));
  CHECK(s.breaks_set() == ExplicitSet::of({Rel::ip1}));

  // the guarded pieces dispatch on interval length
  auto unit = QElem::interval(Rat(0), Rat(1));
  auto wide = QElem::interval(Rat(0), Rat(5));
  REQUIRE(s.interval_map.apply(unit).has_value());
  CHECK(*s.interval_map.apply(unit) == QElem::interval(Rat(1), Rat(2)));
  CHECK(*s.interval_map.apply(wide) == wide);
  CHECK(s.interval_map.matches(unit) == 1);
  CHECK(s.interval_map.matches(wide) == 1);
  CHECK(*s.interval_inv.apply(QElem::interval(Rat(1), Rat(2))) == unit);

  // overrides shadow pieces; images include extras
  ZetaCatalog cat2 = parse_zeta_catalog(
      "zeta t order=QQ expect=pass\n"
      "point piece guard=\"true\" out=\"a\"\n"
      "point inv piece guard=\"true\" out=\"a\"\n"
      "point override pre=\"0\" out=\"1\"\n"
      "point extra pre=\"0\" out=\"2\"\n"
      "interval piece guard=\"true\" out=\"[a,b]\"\n"
      "interval inv piece guard=\"true\" out=\"[a,b]\"\n"
      "respects eqi\n"
      "end\n");
  REQUIRE_MESSAGE(cat2.ok(),
                  (cat2.errors.empty() ? "" : cat2.errors[0].message.c_str()));
  const ZetaSpec& t = cat2.specs[0];
  CHECK(*t.point_map.apply(QElem::point(Rat(0))) == QElem::point(Rat(1)));
  auto imgs = t.images(QElem::point(Rat(0)));
  REQUIRE(imgs.size() == 2);
  CHECK(std::count(imgs.begin(), imgs.end(), QElem::point(Rat(1))) == 1);
  CHECK(std::count(imgs.begin(), imgs.end(), QElem::point(Rat(2))) == 1);
}

TEST_CASE("catalog diagnostics") {
  auto first_error = [](std::string_view text) {
    ZetaCatalog c = parse_zeta_catalog(text);
    REQUIRE_FALSE(c.ok());
    return c.errors[0].message;
  };
  CHECK(first_error("zeta a order=QQ expect=pass\nrespects lt\n") ==
        "unterminated zeta block: a");
  CHECK(first_error("zeta a order=XX expect=pass\nend\n") ==
        "unknown order: XX");
  CHECK(first_error("respects lt\n") ==
        "directive outside zeta block: respects");
  CHECK(first_error("zeta a order=QQ expect=pass\nend\n"
                    "zeta a order=QQ expect=pass\nend\n") ==
        "duplicate zeta id: a");
  CHECK(first_error("zeta a order=QQ expect=pass\n"
                    "point inv extra pre=\"0\" out=\"1\"\nend\n") ==
        "extras belong to the forward relation only");
  CHECK(first_error("zeta a order=QQ expect=pass\n"
                    "respects lt\n"
                    "break lt x=\"0\" y=\"1\" fx=\"0\" fy=\"-1\"\n"
                    "end\n") == "respects and breaks overlap in a");
  CHECK(first_error("zeta a order=QQ expect=pass\n"
                    "point piece guard=\"tru\" out=\"a\"\nend\n")
            .find("bad guard") == 0);
  CHECK(first_error("zeta a order=QQ expect=pass\n"
                    "interval piece guard=\"true\" out=\"a\"\nend\n")
            .find("bad out") == 0);
}

TEST_CASE("verify accepts the identity and flags fake witnesses") {
  ZetaSpec id = identity_spec(OrderKind::QQ);
  id.respects = ExplicitSet::all();
  ZetaReport rep = verify_zeta(id, 500, 7);
  CHECK(rep.pass);
  CHECK(rep.checks.size() == 6 + kExplicitCount);  // no soundness row

  // a witness that does not violate anything
  ZetaSpec bad = identity_spec(OrderKind::QQ);
  bad.breaks.push_back({Rel::pp4, QElem::point(Rat(0)), QElem::point(Rat(1)),
                        QElem::point(Rat(0)), QElem::point(Rat(1))});
  ZetaReport rep2 = verify_zeta(bad, 500, 7);
  CHECK_FALSE(rep2.pass);
  const ZetaCheck* row = find_check(rep2, "break lt");
  REQUIRE(row != nullptr);
  CHECK_FALSE(row->pass);
  CHECK(row->detail.find("biconditional not violated") != std::string::npos);

  // fx must be an image of x
  ZetaSpec bad2 = identity_spec(OrderKind::QQ);
  bad2.breaks.push_back({Rel::pp4, QElem::point(Rat(0)), QElem::point(Rat(1)),
                         QElem::point(Rat(5)), QElem::point(Rat(1))});
  ZetaReport rep3 = verify_zeta(bad2, 500, 7);
  const ZetaCheck* row2 = find_check(rep3, "break lt");
  REQUIRE(row2 != nullptr);
  CHECK(row2->detail.find("not an image") != std::string::npos);
}

TEST_CASE("verify catches respect violations") {
  // shift points by one but claim ip1 survives
  ZetaSpec s = identity_spec(OrderKind::QQ);
  s.point_map.pieces[0].out_l = Aff{1, 0, 1};   // a + 1
  s.point_inv.pieces[0].out_l = Aff{1, 0, -1};  // a - 1
  s.respects = ExplicitSet::of({Rel::ip1});
  ZetaReport rep = verify_zeta(s, 2000, 7);
  CHECK_FALSE(rep.pass);
  const ZetaCheck* row = find_check(rep, "respects ip1");
  REQUIRE(row != nullptr);
  CHECK_FALSE(row->pass);
}

TEST_CASE("verify catches broken round-trips and coverage gaps") {
  ZetaSpec s = identity_spec(OrderKind::QQ);
  s.point_inv.pieces[0].out_l = Aff{1, 0, 1};  // wrong inverse
  ZetaReport rep = verify_zeta(s, 500, 7);
  const ZetaCheck* rt = find_check(rep, "round-trip point");
  REQUIRE(rt != nullptr);
  CHECK_FALSE(rt->pass);

  ZetaSpec gap = identity_spec(OrderKind::QQ);
  gap.interval_map.pieces[0].guard =
      ZGuard{false, Aff{0, 1, 0}, Aff{1, 0, 1}, CmpOp::Gt};  // only b > a+1
  ZetaReport rep2 = verify_zeta(gap, 500, 7);
  const ZetaCheck* cov = find_check(rep2, "coverage interval");
  REQUIRE(cov != nullptr);
  CHECK_FALSE(cov->pass);
}

TEST_CASE("verify catches maps that leave the order") {
  ZetaSpec s = identity_spec(OrderKind::QQ01);
  s.point_map.pieces[0].out_l = Aff{1, 0, 1};  // pushes 1 to 2, outside [0,1]
  s.point_inv.pieces[0].out_l = Aff{1, 0, -1};
  ZetaReport rep = verify_zeta(s, 500, 7);
  const ZetaCheck* dom = find_check(rep, "domain point");
  REQUIRE(dom != nullptr);
  CHECK_FALSE(dom->pass);
}

TEST_CASE("soundness link cross-checks the rulebase") {
  Rulebase rb = parse_rulebase(
      "rule den-x class=den premises=ii24 target=ii34 src=\"s\"\n");
  REQUIRE(rb.ok());
  ZetaSpec s = identity_spec(OrderKind::QQ);
  s.respects = ExplicitSet::of({Rel::ii24});
  s.breaks.push_back({Rel::ii34, QElem::interval(Rat(0), Rat(1)),
                      QElem::interval(Rat(1), Rat(2)),
                      QElem::interval(Rat(0), Rat(1)),
                      QElem::interval(Rat(1), Rat(2))});
  ZetaReport rep = verify_zeta(s, 500, 7, &rb);
  const ZetaCheck* row = find_check(rep, "soundness-link");
  REQUIRE(row != nullptr);
  CHECK_FALSE(row->pass);
  CHECK(row->detail.find("den-x") != std::string::npos);

  // over ZZ the dense rule does not apply
  ZetaSpec z = s;
  z.order = OrderKind::ZZ;
  ZetaReport zrep = verify_zeta(z, 500, 7, &rb);
  const ZetaCheck* row2 = find_check(zrep, "soundness-link");
  REQUIRE(row2 != nullptr);
  CHECK(row2->pass);
}

TEST_CASE("the shipped catalog parses and spot-verifies") {
  ZetaCatalog cat = parse_zeta_catalog(
      load_data(std::string(PINT_SOURCE_DIR) + "/data/zeta.catalog",
                "data/zeta.catalog"));
  REQUIRE_MESSAGE(
      cat.ok(),
      (cat.errors.empty() ? std::string()
                          : cat.errors[0].message + " (line " +
                                std::to_string(cat.errors[0].line) + ")"));
  CHECK(cat.specs.size() == 21);

  auto find_spec = [&](std::string_view id) -> const ZetaSpec* {
    for (const ZetaSpec& s : cat.specs)
      if (s.id == id) return &s;
    return nullptr;
  };
  const ZetaSpec* corrected = find_spec("den-ii14-swap");
  REQUIRE(corrected != nullptr);
  CHECK(corrected->deviates);
  CHECK(verify_zeta(*corrected, 2000, 7).pass);

  const ZetaSpec* original = find_spec("den-ii14-original");
  REQUIRE(original != nullptr);
  CHECK_FALSE(original->expect_pass);
  ZetaReport rep = verify_zeta(*original, 2000, 7);
  CHECK_FALSE(rep.pass);
  const ZetaCheck* rt = find_check(rep, "round-trip interval");
  REQUIRE(rt != nullptr);
  CHECK_FALSE(rt->pass);  // the one-sided reassignment is not a bijection

  const ZetaSpec* unit = find_spec("unb-unit-shift");
  REQUIRE(unit != nullptr);
  CHECK(unit->order == OrderKind::ZZ);
  CHECK(verify_zeta(*unit, 2000, 7).pass);
}
