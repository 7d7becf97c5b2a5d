#include "pint/closure.hpp"

#include <algorithm>

namespace pint {

namespace {

bool inherits(ClassTag cls, ClassTag rule_cls) {
  return rule_cls == ClassTag::Lin || rule_cls == cls;
}

}  // namespace

ClosureEngine::ClosureEngine(const Rulebase& rb) {
  for (ClassTag cls :
       {ClassTag::Lin, ClassTag::Den, ClassTag::Dis, ClassTag::Unb}) {
    auto& steps = steps_[int(cls)];
    for (const Rule& r : rb.rules) {
      if (!inherits(cls, r.cls)) continue;
      int bit = *explicit_bit(r.target);
      steps.push_back({r.premises.mask(), uint16_t(1u << bit)});
    }
  }
}

void ClosureEngine::fill(ClassTag cls) const {
  const auto& steps = steps_[int(cls)];
  auto& memo = memo_[int(cls)];
  constexpr uint32_t N = 1u << kExplicitCount;
  for (uint32_t m = 0; m < N; ++m) {
    uint16_t cur = uint16_t(m);
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Step& s : steps) {
        if ((s.premises & ~cur) == 0 && (cur & s.target) == 0) {
          cur |= s.target;
          changed = true;
        }
      }
    }
    memo[m] = cur;
  }
  filled_[int(cls)] = true;
}

ExplicitSet ClosureEngine::closure(ClassTag cls, ExplicitSet s) const {
  if (!filled_[int(cls)]) fill(cls);
  return ExplicitSet(memo_[int(cls)][s.mask()]);
}

const std::array<uint16_t, 1u << kExplicitCount>& ClosureEngine::table(
    ClassTag cls) const {
  if (!filled_[int(cls)]) fill(cls);
  return memo_[int(cls)];
}

namespace {

// Enumerates submasks of `universe` in ascending mask order, applying f.
template <class F>
void for_each_subset(uint16_t universe, F&& f) {
  uint32_t sub = 0;
  while (true) {
    f(uint16_t(sub));
    if (sub == universe) break;
    sub = (sub - universe) & universe;  // next submask in increasing order
  }
}

void sort_sets(std::vector<ExplicitSet>& v) {
  std::sort(v.begin(), v.end(), [](ExplicitSet a, ExplicitSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.mask() < b.mask();
  });
}

}  // namespace

Spectrum spectrum(const ClosureEngine& eng, ClassTag cls, Rel target,
                  Vocab vocab) {
  const auto& table = eng.table(cls);
  int bit = *explicit_bit(target);
  uint16_t tmask = uint16_t(1u << bit);
  uint16_t universe = uint16_t(vocab_universe(vocab).mask() & ~tmask);
  Spectrum out;
  for_each_subset(universe, [&](uint16_t s) {
    bool derives = (table[s] & tmask) != 0;
    if (derives) {
      // minimal: removing any single element loses the derivation
      bool minimal = true;
      for (int b = 0; b < kExplicitCount && minimal; ++b)
        if (s >> b & 1)
          minimal = (table[s & ~(1u << b)] & tmask) == 0;
      if (minimal) out.mcs.push_back(ExplicitSet(s));
    } else {
      // maximal: adding any available element yields the derivation
      bool maximal = true;
      for (int b = 0; b < kExplicitCount && maximal; ++b)
        if ((universe >> b & 1) && !(s >> b & 1))
          maximal = (table[s | (1u << b)] & tmask) != 0;
      if (maximal) out.mis.push_back(ExplicitSet(s));
    }
  });
  sort_sets(out.mcs);
  sort_sets(out.mis);
  return out;
}

Harvest harvest(const ClosureEngine& eng, ClassTag cls, Vocab vocab) {
  const auto& table = eng.table(cls);
  uint16_t universe = vocab_universe(vocab).mask();
  uint16_t full = ExplicitSet::all().mask();
  Harvest out;
  for_each_subset(universe, [&](uint16_t s) {
    bool generates = table[s] == full;
    if (generates) {
      bool minimal = true;
      for (int b = 0; b < kExplicitCount && minimal; ++b)
        if (s >> b & 1) minimal = table[s & ~(1u << b)] != full;
      if (minimal) out.minimal_generating.push_back(ExplicitSet(s));
    } else {
      bool maximal = true;
      for (int b = 0; b < kExplicitCount && maximal; ++b)
        if ((universe >> b & 1) && !(s >> b & 1))
          maximal = table[s | (1u << b)] == full;
      if (maximal) out.maximal_non.push_back(ExplicitSet(s));
    }
  });
  sort_sets(out.minimal_generating);
  sort_sets(out.maximal_non);
  return out;
}

}  // namespace pint
