#include "pint/relations.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <map>

namespace pint {

namespace {

struct RelInfo {
  Rel rel;
  std::string_view name;
  Sort left, right;
  Rel inv;
};

constexpr Sort P = Sort::Point;
constexpr Sort I = Sort::Interval;

constexpr std::array<RelInfo, kRelCount> kInfo = {{
    {Rel::pp4, "lt", P, P, Rel::pp0},
    {Rel::pp2, "eqp", P, P, Rel::pp2},
    {Rel::pp0, "gtp", P, P, Rel::pp4},
    {Rel::ip0, "ip0", I, P, Rel::pi44},
    {Rel::ip1, "ip1", I, P, Rel::pi24},
    {Rel::ip2, "ip2", I, P, Rel::pi04},
    {Rel::ip3, "ip3", I, P, Rel::pi02},
    {Rel::ip4, "ip4", I, P, Rel::pi00},
    {Rel::pi00, "pi00", P, I, Rel::ip4},
    {Rel::pi02, "pi02", P, I, Rel::ip3},
    {Rel::pi04, "pi04", P, I, Rel::ip2},
    {Rel::pi24, "pi24", P, I, Rel::ip1},
    {Rel::pi44, "pi44", P, I, Rel::ip0},
    {Rel::ii00, "ii00", I, I, Rel::ii44},
    {Rel::ii01, "ii01", I, I, Rel::ii34},
    {Rel::ii02, "ii02", I, I, Rel::ii24},
    {Rel::ii03, "ii03", I, I, Rel::ii23},
    {Rel::ii04, "ii04", I, I, Rel::ii22},
    {Rel::ii12, "ii12", I, I, Rel::ii14},
    {Rel::ii13, "eqi", I, I, Rel::ii13},
    {Rel::ii14, "ii14", I, I, Rel::ii12},
    {Rel::ii22, "ii22", I, I, Rel::ii04},
    {Rel::ii23, "ii23", I, I, Rel::ii03},
    {Rel::ii24, "ii24", I, I, Rel::ii02},
    {Rel::ii34, "ii34", I, I, Rel::ii01},
    {Rel::ii44, "ii44", I, I, Rel::ii00},
}};

const RelInfo& info(Rel r) { return kInfo[static_cast<size_t>(r)]; }

const std::map<std::string_view, Rel> kAliases = {
    {"lt", Rel::pp4},       {"gt", Rel::pp0},       {"gtp", Rel::pp0},
    {"eq_p", Rel::pp2},     {"eqp", Rel::pp2},      {"pp0", Rel::pp0},
    {"pp2", Rel::pp2},      {"pp4", Rel::pp4},      {"eq_i", Rel::ii13},
    {"eqi", Rel::ii13},     {"ii13", Rel::ii13},    {"meets", Rel::ii34},
    {"before", Rel::ii44},  {"starts", Rel::ii14},  {"finishes", Rel::ii03},
    {"during", Rel::ii04},  {"overlaps", Rel::ii24},
};

// R+ in bit order.
constexpr std::array<Rel, kExplicitCount> kExplicit = {
    Rel::pp4, Rel::pp2, Rel::ip0, Rel::ip1, Rel::ip2, Rel::ip3, Rel::ip4,
    Rel::ii34, Rel::ii44, Rel::ii14, Rel::ii03, Rel::ii04, Rel::ii24,
    Rel::ii13,
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Sort left_sort(Rel r) { return info(r).left; }
Sort right_sort(Rel r) { return info(r).right; }
std::string_view rel_name(Rel r) { return info(r).name; }
Rel inverse(Rel r) { return info(r).inv; }

std::optional<Rel> rel_from_name(std::string_view name) {
  if (auto it = kAliases.find(name); it != kAliases.end()) return it->second;
  for (const auto& ri : kInfo)
    if (ri.name == name) return ri.rel;
  return std::nullopt;
}

std::optional<int> explicit_bit(Rel r) {
  for (int i = 0; i < kExplicitCount; ++i)
    if (kExplicit[i] == r) return i;
  return std::nullopt;
}

Rel explicit_rel(int bit) { return kExplicit[bit]; }

ExplicitSet ExplicitSet::of(std::initializer_list<Rel> rels) {
  ExplicitSet s;
  for (Rel r : rels) s.add(r);
  return s;
}

bool ExplicitSet::contains(Rel r) const {
  auto b = explicit_bit(r);
  return b && contains_bit(*b);
}

ExplicitSet& ExplicitSet::add(Rel r) {
  mask_ |= uint16_t(1u << *explicit_bit(r));
  return *this;
}

ExplicitSet& ExplicitSet::remove(Rel r) {
  if (auto b = explicit_bit(r)) mask_ &= uint16_t(~(1u << *b));
  return *this;
}

int ExplicitSet::size() const { return std::popcount(mask_); }

std::vector<Rel> ExplicitSet::members() const {
  std::vector<Rel> out;
  for (int i = 0; i < kExplicitCount; ++i)
    if (contains_bit(i)) out.push_back(explicit_rel(i));
  return out;
}

std::string ExplicitSet::to_string() const {
  std::string out;
  for (Rel r : members()) {
    if (!out.empty()) out += ',';
    out += rel_name(r);
  }
  return out;
}

std::optional<ExplicitSet> ExplicitSet::parse(std::string_view text) {
  ExplicitSet s;
  text = trim(text);
  if (text.empty()) return s;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view item =
        trim(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
    auto r = rel_from_name(item);
    if (!r || !explicit_bit(*r)) return std::nullopt;
    s.add(*r);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return s;
}

Rel reverse(Rel r) {
  switch (r) {
    case Rel::ip0: return Rel::ip4;
    case Rel::ip4: return Rel::ip0;
    case Rel::ip1: return Rel::ip3;
    case Rel::ip3: return Rel::ip1;
    case Rel::ii14: return Rel::ii03;
    case Rel::ii03: return Rel::ii14;
    default: return r;
  }
}

bool is_reversible(Rel r) { return reverse(r) != r; }

bool is_self_symmetric(Rel r) { return r == Rel::ip2 || r == Rel::ii04; }

ExplicitSet symmetric_set(ExplicitSet s) {
  ExplicitSet out;
  for (Rel r : s.members()) out.add(reverse(r));
  return out;
}

Rel dual_symbol(Rel r) {
  std::string n(rel_name(r));
  if (n == "lt") n = "pp4";
  else if (n == "eqp") n = "pp2";
  else if (n == "gtp") n = "pp0";
  else if (n == "eqi") n = "ii13";
  if (n.size() == 3) {
    n[2] = char('0' + (4 - (n[2] - '0')));
  } else {
    int k1 = n[2] - '0', k2 = n[3] - '0';
    n[2] = char('0' + (4 - k2));
    n[3] = char('0' + (4 - k1));
  }
  return *rel_from_name(n);
}

DualAction dual_symbol_action(Rel r) {
  if (is_reversible(r)) return {reverse(r), false};
  if (is_self_symmetric(r)) return {r, false};
  return {r, true};
}

std::optional<Vocab> vocab_from_name(std::string_view name) {
  if (name == "all") return Vocab::All;
  if (name == "iplus") return Vocab::IPlus;
  if (name == "mplus") return Vocab::MPlus;
  return std::nullopt;
}

std::string_view vocab_name(Vocab v) {
  switch (v) {
    case Vocab::All: return "all";
    case Vocab::IPlus: return "iplus";
    case Vocab::MPlus: return "mplus";
  }
  return "";
}

ExplicitSet vocab_universe(Vocab v) {
  switch (v) {
    case Vocab::All:
      return ExplicitSet::all();
    case Vocab::IPlus:
      return ExplicitSet::of({Rel::ii34, Rel::ii44, Rel::ii14, Rel::ii03,
                              Rel::ii04, Rel::ii24, Rel::ii13});
    case Vocab::MPlus:
      return ExplicitSet::of({Rel::ip0, Rel::ip1, Rel::ip2, Rel::ip3, Rel::ip4});
  }
  return {};
}

}  // namespace pint
