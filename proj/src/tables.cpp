#include "pint/tables.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "pint/data.hpp"
#include "pint/lineio.hpp"

namespace pint {

ExpectedTable parse_expected_table(std::string_view text) {
  ExpectedTable t;
  lineio::for_each_line(text, [&](int line_no, std::string_view line) {
    auto fail = [&](std::string msg) {
      t.errors.push_back({line_no, std::move(msg)});
    };
    size_t colon = line.find(':');
    size_t tab = line.find('\t');
    size_t sep = std::min(colon, tab);
    if (sep == std::string_view::npos) {
      fail("expected `<target>: r1,r2,...`");
      return;
    }
    std::string target(lineio::trim(line.substr(0, sep)));
    std::string_view rest = lineio::trim(line.substr(sep + 1));
    bool suspect = false;
    constexpr std::string_view kSuspect = "!suspect";
    if (rest.size() >= kSuspect.size() && rest.ends_with(kSuspect)) {
      suspect = true;
      rest = lineio::trim(rest.substr(0, rest.size() - kSuspect.size()));
    }
    if (target != "mcs" && target != "mis") {
      auto rel = rel_from_name(target);
      if (!rel || !explicit_bit(*rel)) {
        fail("unknown target: " + target);
        return;
      }
      target = rel_name(*rel);
    }
    auto s = ExplicitSet::parse(rest);
    if (!s) {
      fail("unparseable relation set: " + std::string(rest));
      return;
    }
    // duplicate lines collapse (set semantics)
    for (const ExpectedEntry& e : t.entries)
      if (e.target == target && e.set == *s) return;
    t.entries.push_back({target, *s, suspect});
  });
  return t;
}

std::string format_expected_table(const ExpectedTable& t, bool tsv) {
  std::string out;
  for (const ExpectedEntry& e : t.entries) {
    out += e.target;
    out += tsv ? "\t" : ": ";
    out += e.set.to_string();
    if (e.suspect) out += " !suspect";
    out += '\n';
  }
  return out;
}

bool DiffReport::clean() const {
  return std::none_of(rows.begin(), rows.end(), [](const DiffRow& r) {
    return r.kind == DiffRow::Kind::Missing || r.kind == DiffRow::Kind::Extra;
  });
}

std::string DiffReport::to_text(bool tsv) const {
  const char* sep = tsv ? "\t" : " ";
  std::ostringstream os;
  for (const DiffRow& r : rows) {
    switch (r.kind) {
      case DiffRow::Kind::Match: os << "MATCH"; break;
      case DiffRow::Kind::Missing: os << "MISSING"; break;
      case DiffRow::Kind::Extra: os << "EXTRA"; break;
      case DiffRow::Kind::Suspect: os << "SUSPECT-CONFIRMED"; break;
    }
    os << sep << r.target << sep << '{' << r.set.to_string() << '}';
    if (r.kind == DiffRow::Kind::Suspect)
      os << sep << "computed=" << (r.computed ? "yes" : "no") << sep << '('
         << r.note << ')';
    os << '\n';
  }
  return os.str();
}

DiffReport diff_tables(
    const std::map<std::string, std::vector<ExplicitSet>>& computed,
    const ExpectedTable& expected) {
  DiffReport rep;
  // group expected entries by target, preserving target first-seen order
  std::vector<std::string> order;
  std::map<std::string, std::vector<const ExpectedEntry*>> by_target;
  auto seen = [&](const std::string& t) {
    if (!by_target.count(t)) order.push_back(t);
    return &by_target[t];
  };
  for (const ExpectedEntry& e : expected.entries) seen(e.target)->push_back(&e);
  for (const auto& [t, sets] : computed) seen(t);

  for (const std::string& target : order) {
    std::set<ExplicitSet> comp;
    if (auto it = computed.find(target); it != computed.end())
      comp.insert(it->second.begin(), it->second.end());
    std::set<ExplicitSet> expected_any;
    for (const ExpectedEntry* e : by_target[target]) {
      expected_any.insert(e->set);
      if (e->suspect) {
        bool in_comp = comp.count(e->set) != 0;
        std::string note;
        if (in_comp) {
          note = "omission confirmed by enumeration";
        } else if (rel_from_name(target) &&
                   e->set.contains(*rel_from_name(target))) {
          note = "not minimal: contains the target";
        } else {
          note = "not produced by enumeration";
        }
        rep.rows.push_back({DiffRow::Kind::Suspect, target, e->set, in_comp,
                            std::move(note)});
      } else if (comp.count(e->set)) {
        rep.rows.push_back({DiffRow::Kind::Match, target, e->set, true, ""});
      } else {
        rep.rows.push_back(
            {DiffRow::Kind::Missing, target, e->set, false, ""});
      }
    }
    for (const ExplicitSet& s : comp)
      if (!expected_any.count(s))
        rep.rows.push_back({DiffRow::Kind::Extra, target, s, true, ""});
  }
  return rep;
}

std::string load_data(const std::string& path, const std::string& fallback) {
  if (!path.empty()) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::string_view bundled = embedded_data(fallback);
  if (bundled.empty())
    throw std::runtime_error("no bundled data under: " + fallback);
  return std::string(bundled);
}

}  // namespace pint
