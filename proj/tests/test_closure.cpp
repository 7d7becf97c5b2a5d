#include <doctest.h>

#include <random>
#include <set>

#include "pint/closure.hpp"
#include "pint/data.hpp"

using namespace pint;

namespace {

const Rulebase& real_rulebase() {
  static Rulebase rb = [] {
    Rulebase r = parse_rulebase(load_data(
        std::string(PINT_SOURCE_DIR) + "/data/rulebase.rules",
        "data/rulebase.rules"));
    REQUIRE_MESSAGE(r.ok(), "rulebase has diagnostics");
    expand_symmetry(r);
    return r;
  }();
  return rb;
}

const ClosureEngine& engine() {
  static ClosureEngine eng(real_rulebase());
  return eng;
}

}  // namespace

TEST_CASE("closure basics over the shipped rulebase") {
  const ClosureEngine& eng = engine();
  CHECK(eng.closure(ClassTag::Lin, ExplicitSet{}).empty());
  CHECK(eng.closure(ClassTag::Den, ExplicitSet{}).empty());

  // nothing in Lin defines anything from before alone
  ExplicitSet before = ExplicitSet::of({Rel::ii44});
  CHECK(eng.closure(ClassTag::Lin, before) == before);
  // over dense orders, before generates the whole interval vocabulary
  CHECK(eng.closure(ClassTag::Den, before) == vocab_universe(Vocab::IPlus));
  // Dis has no rules of its own beyond Lin
  CHECK(eng.closure(ClassTag::Dis, before) == before);

  // full set is a fixpoint in every class
  for (ClassTag cls :
       {ClassTag::Lin, ClassTag::Den, ClassTag::Dis, ClassTag::Unb})
    CHECK(eng.closure(cls, ExplicitSet::all()) == ExplicitSet::all());
}

TEST_CASE("closure is extensive, monotone and idempotent (sampled)") {
  const ClosureEngine& eng = engine();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<uint32_t> dist(0, (1u << kExplicitCount) - 1);
  for (ClassTag cls :
       {ClassTag::Lin, ClassTag::Den, ClassTag::Dis, ClassTag::Unb}) {
    for (int i = 0; i < 200; ++i) {
      ExplicitSet s{uint16_t(dist(rng))};
      ExplicitSet t{uint16_t(dist(rng) | s.mask())};  // s ⊆ t
      ExplicitSet cs = eng.closure(cls, s);
      CHECK(s.subset_of(cs));
      CHECK(cs.subset_of(eng.closure(cls, t)));
      CHECK(eng.closure(cls, cs) == cs);
    }
  }
}

TEST_CASE("class monotonicity: subclasses define at least as much") {
  const ClosureEngine& eng = engine();
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<uint32_t> dist(0, (1u << kExplicitCount) - 1);
  for (int i = 0; i < 300; ++i) {
    ExplicitSet s{uint16_t(dist(rng))};
    ExplicitSet lin = eng.closure(ClassTag::Lin, s);
    for (ClassTag cls : {ClassTag::Den, ClassTag::Dis, ClassTag::Unb})
      CHECK(lin.subset_of(eng.closure(cls, s)));
  }
}

TEST_CASE("the closure table matches pointwise closure") {
  const ClosureEngine& eng = engine();
  const auto& tab = eng.table(ClassTag::Den);
  for (uint32_t m = 0; m < (1u << kExplicitCount); m += 97)
    CHECK(tab[m] == eng.closure(ClassTag::Den, ExplicitSet{uint16_t(m)}).mask());
}

TEST_CASE("spectrum of interval equality over dense orders") {
  Spectrum sp =
      spectrum(engine(), ClassTag::Den, Rel::ii13, Vocab::IPlus);
  // every other interval relation alone defines equality over dense orders
  std::set<uint16_t> got;
  for (const ExplicitSet& s : sp.mcs) got.insert(s.mask());
  std::set<uint16_t> want;
  for (Rel r : {Rel::ii34, Rel::ii14, Rel::ii03, Rel::ii24, Rel::ii04,
                Rel::ii44})
    want.insert(ExplicitSet::of({r}).mask());
  CHECK(got == want);
  // hence the only maximal independent set is the empty one
  REQUIRE(sp.mis.size() == 1);
  CHECK(sp.mis[0].empty());
}

TEST_CASE("mcs are minimal and mis are maximal") {
  const ClosureEngine& eng = engine();
  for (ClassTag cls : {ClassTag::Den, ClassTag::Unb}) {
    for (Rel target : {Rel::ii34, Rel::ip2, Rel::pp4}) {
      Spectrum sp = spectrum(eng, cls, target, Vocab::All);
      for (const ExplicitSet& s : sp.mcs) {
        CHECK(eng.closure(cls, s).contains(target));
        CHECK_FALSE(s.contains(target));
        for (Rel r : s.members()) {
          ExplicitSet smaller = s;
          smaller.remove(r);
          CHECK_FALSE(eng.closure(cls, smaller).contains(target));
        }
      }
      ExplicitSet universe = vocab_universe(Vocab::All);
      for (const ExplicitSet& s : sp.mis) {
        CHECK_FALSE(eng.closure(cls, s).contains(target));
        for (Rel r : (universe - s).members()) {
          if (r == target) continue;
          ExplicitSet larger = s;
          larger.add(r);
          CHECK(eng.closure(cls, larger).contains(target));
        }
      }
    }
  }
}

TEST_CASE("harvest families are consistent with closure") {
  const ClosureEngine& eng = engine();
  Harvest h = harvest(eng, ClassTag::Den, Vocab::All);
  ExplicitSet all = ExplicitSet::all();
  for (const ExplicitSet& s : h.minimal_generating) {
    CHECK(eng.closure(ClassTag::Den, s) == all);
    for (Rel r : s.members()) {
      ExplicitSet smaller = s;
      smaller.remove(r);
      CHECK(eng.closure(ClassTag::Den, smaller) != all);
    }
  }
  for (const ExplicitSet& s : h.maximal_non) {
    CHECK(eng.closure(ClassTag::Den, s) != all);
    for (Rel r : (all - s).members()) {
      ExplicitSet larger = s;
      larger.add(r);
      CHECK(eng.closure(ClassTag::Den, larger) == all);
    }
  }
}
