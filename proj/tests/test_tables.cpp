#include <doctest.h>

#include "pint/data.hpp"
#include "pint/tables.hpp"

using namespace pint;

TEST_CASE("expected-table parsing") {
  ExpectedTable t = parse_expected_table(
      "# comment\n"
      "\n"
      "ii34: ii14,ii03\n"
      "ii14: ii14,ii04 !suspect\n"
      "meets: before\n"          // aliases canonicalize
      "mcs: ip0,ip2\n"
      "mis\tlt,eqp,ip2\n");      // TAB separator
  REQUIRE(t.ok());
  REQUIRE(t.entries.size() == 5);
  CHECK(t.entries[0].target == "ii34");
  CHECK(t.entries[0].set == ExplicitSet::of({Rel::ii14, Rel::ii03}));
  CHECK_FALSE(t.entries[0].suspect);
  CHECK(t.entries[1].suspect);
  CHECK(t.entries[2].target == "ii34");
  CHECK(t.entries[2].set == ExplicitSet::of({Rel::ii44}));
  CHECK(t.entries[3].target == "mcs");
  CHECK(t.entries[4].target == "mis");
  CHECK(t.entries[4].set == ExplicitSet::of({Rel::pp4, Rel::pp2, Rel::ip2}));

  // duplicates collapse
  ExpectedTable d = parse_expected_table("eqi: ii34\neqi: meets\n");
  REQUIRE(d.ok());
  CHECK(d.entries.size() == 1);

  // diagnostics
  CHECK_FALSE(parse_expected_table("nonsense\n").ok());
  CHECK_FALSE(parse_expected_table("pi00: lt\n").ok());
  CHECK_FALSE(parse_expected_table("eqi: wibble\n").ok());
}

TEST_CASE("expected-table formatting round-trips") {
  const char* text = "ii34: ii14,ii03\nii14: ii14,ii04 !suspect\nmcs: ip0,ip2\n";
  ExpectedTable t = parse_expected_table(text);
  REQUIRE(t.ok());
  CHECK(format_expected_table(t, false) == text);
  ExpectedTable t2 = parse_expected_table(format_expected_table(t, true));
  REQUIRE(t2.ok());
  REQUIRE(t2.entries.size() == t.entries.size());
  for (size_t i = 0; i < t.entries.size(); ++i) {
    CHECK(t2.entries[i].target == t.entries[i].target);
    CHECK(t2.entries[i].set == t.entries[i].set);
    CHECK(t2.entries[i].suspect == t.entries[i].suspect);
  }
}

TEST_CASE("diff_tables classifies rows") {
  ExpectedTable exp = parse_expected_table(
      "eqi: ii34\n"
      "eqi: ii24 !suspect\n"       // will be computed: confirmed omission
      "eqi: ii44,eqi !suspect\n"   // contains the target
      "eqi: ip2,ii04 !suspect\n"   // not computed
      "eqi: ii03\n"                // not computed: MISSING
      "ii14: ii44\n");
  REQUIRE(exp.ok());
  std::map<std::string, std::vector<ExplicitSet>> computed = {
      {"eqi",
       {ExplicitSet::of({Rel::ii34}), ExplicitSet::of({Rel::ii24}),
        ExplicitSet::of({Rel::ip0})}},  // ip0 unexpected: EXTRA
      {"ii14", {ExplicitSet::of({Rel::ii44})}},
  };
  DiffReport rep = diff_tables(computed, exp);
  CHECK_FALSE(rep.clean());

  int match = 0, missing = 0, extra = 0, suspect = 0;
  for (const DiffRow& r : rep.rows) {
    switch (r.kind) {
      case DiffRow::Kind::Match: ++match; break;
      case DiffRow::Kind::Missing: ++missing; break;
      case DiffRow::Kind::Extra: ++extra; break;
      case DiffRow::Kind::Suspect:
        ++suspect;
        CHECK_FALSE(r.note.empty());  // every suspect gets adjudicated
        break;
    }
  }
  CHECK(match == 2);
  CHECK(missing == 1);
  CHECK(extra == 1);
  CHECK(suspect == 3);

  // adjudication notes
  auto note_for = [&](ExplicitSet s) {
    for (const DiffRow& r : rep.rows)
      if (r.kind == DiffRow::Kind::Suspect && r.set == s) return r.note;
    return std::string();
  };
  CHECK(note_for(ExplicitSet::of({Rel::ii24})) ==
        "omission confirmed by enumeration");
  CHECK(note_for(ExplicitSet::of({Rel::ii44, Rel::ii13})) ==
        "not minimal: contains the target");
  CHECK(note_for(ExplicitSet::of({Rel::ip2, Rel::ii04})) ==
        "not produced by enumeration");

  // a clean diff
  std::map<std::string, std::vector<ExplicitSet>> exact = {
      {"eqi", {ExplicitSet::of({Rel::ii34}), ExplicitSet::of({Rel::ii03})}},
      {"ii14", {ExplicitSet::of({Rel::ii44})}},
  };
  ExpectedTable exp2 =
      parse_expected_table("eqi: ii34\neqi: ii03\nii14: ii44\n");
  REQUIRE(exp2.ok());
  CHECK(diff_tables(exact, exp2).clean());
}

TEST_CASE("diff text output shows verdict labels") {
  ExpectedTable exp = parse_expected_table("eqi: ii34\neqi: ii24 !suspect\n");
  REQUIRE(exp.ok());
  std::map<std::string, std::vector<ExplicitSet>> computed = {
      {"eqi", {ExplicitSet::of({Rel::ii34})}}};
  DiffReport rep = diff_tables(computed, exp);
  std::string text = rep.to_text(false);
  CHECK(text.find("MATCH") != std::string::npos);
  CHECK(text.find("SUSPECT") != std::string::npos);
  CHECK(text.find("{ii34}") != std::string::npos);
  CHECK(text.find("computed=no") != std::string::npos);
}

TEST_CASE("embedded data is registered for every shipped table") {
  for (const char* path :
       {"data/rulebase.rules", "data/zeta.catalog",
        "data/expected/den_iplus.tbl", "data/expected/den_mplus.tbl",
        "data/expected/den_full.tbl", "data/expected/den_mis.tbl",
        "data/expected/den_harvest.tbl", "data/expected/unb_iplus.tbl",
        "data/expected/unb_full.tbl", "data/expected/unb_mis.tbl",
        "data/expected/unb_harvest.tbl"}) {
    CAPTURE(path);
    CHECK_FALSE(embedded_data(path).empty());
    // and the embedded copy matches the checkout when available
    std::string disk = load_data(std::string(PINT_SOURCE_DIR) + "/" + path,
                                 path);
    CHECK(disk == embedded_data(path));
  }
  CHECK(embedded_data("data/nope").empty());
  CHECK(embedded_data_paths().size() == 11);
}
