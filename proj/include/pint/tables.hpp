#pragma once

#include <map>
#include <string>
#include <vector>

#include "pint/relations.hpp"
#include "pint/rulebase.hpp"

namespace pint {

// Expected-table file: one entry per line, `<target>: r1,r2,...` with an
// optional trailing `!suspect` marker. Targets are relation names for
// spectrum tables or the pseudo-targets `mcs` / `mis` for harvest tables.
// A TAB may replace the `: ` separator (tsv round-trip). `#` lines are
// comments.
struct ExpectedEntry {
  std::string target;
  ExplicitSet set;
  bool suspect = false;
};

struct ExpectedTable {
  std::vector<ExpectedEntry> entries;
  std::vector<RuleDiagnostic> errors;
  bool ok() const { return errors.empty(); }
};

ExpectedTable parse_expected_table(std::string_view text);
std::string format_expected_table(const ExpectedTable& t, bool tsv);

// Comparison of computed set families against an expected table.
//   MATCH:   expected (non-suspect) and computed
//   MISSING: expected (non-suspect), not computed
//   EXTRA:   computed, not expected at all
//   SUSPECT: suspect-flagged entries, adjudicated by whether the
//            enumeration reproduces them.
struct DiffRow {
  enum class Kind { Match, Missing, Extra, Suspect };
  Kind kind = Kind::Match;
  std::string target;
  ExplicitSet set;
  bool computed = false;
  std::string note;  // adjudication for suspects
};

struct DiffReport {
  std::vector<DiffRow> rows;
  // true when no MISSING and no EXTRA rows exist (suspects excluded)
  bool clean() const;
  std::string to_text(bool tsv) const;
};

DiffReport diff_tables(
    const std::map<std::string, std::vector<ExplicitSet>>& computed,
    const ExpectedTable& expected);

}  // namespace pint
