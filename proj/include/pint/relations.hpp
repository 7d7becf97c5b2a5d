#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pint {

enum class Sort : uint8_t { Point, Interval };

// The 26 relation symbols, grouped by argument kinds. An interval [a,b]
// splits the domain into regions 0 (< a), 1 (= a), 2 (between), 3 (= b),
// 4 (> b); a point c splits it into regions 0 (< c), 2 (= c), 4 (> c).
// pp/pi/ip/ii name the argument kinds (first argument first), and the
// region digits locate the second argument relative to the first:
//   pp_k(c,d)    : d lies in region k of c            (k in {0,2,4})
//   ip_k(I,c)    : c lies in region k of I            (k in 0..4)
//   pi_kk'(c,J)  : J's endpoints lie in regions k,k' of c
//   ii_kk'(I,J)  : J's endpoints lie in regions k,k' of I
enum class Rel : uint8_t {
  // point-point (canonical names lt, eqp, gtp)
  pp4, pp2, pp0,
  // interval-point
  ip0, ip1, ip2, ip3, ip4,
  // point-interval
  pi00, pi02, pi04, pi24, pi44,
  // interval-interval
  ii00, ii01, ii02, ii03, ii04,
  ii12, ii13, ii14,
  ii22, ii23, ii24,
  ii34,
  ii44,
};
inline constexpr int kRelCount = 26;

Sort left_sort(Rel r);
Sort right_sort(Rel r);

// Canonical textual name (region form): lt, gtp, eqp, eqi, ip0..ip4,
// pi00..pi44, ii00..ii44.
std::string_view rel_name(Rel r);

// Resolves canonical names, region forms (pp0/pp2/pp4, ii13), and the
// named aliases meets, before, starts, finishes, during, overlaps,
// eq_i, eq_p, gt, lt.
std::optional<Rel> rel_from_name(std::string_view name);

// inverse(r)(x,y) <=> r(y,x); total on all 26 symbols.
Rel inverse(Rel r);

// The 14 explicit relations R+ = {lt, eqp} ∪ {ip0..ip4} ∪
// {ii34, ii44, ii14, ii03, ii04, ii24, eqi}, indexed by bit:
//   0 lt, 1 eqp, 2 ip0, 3 ip1, 4 ip2, 5 ip3, 6 ip4,
//   7 ii34, 8 ii44, 9 ii14, 10 ii03, 11 ii04, 12 ii24, 13 eqi.
inline constexpr int kExplicitCount = 14;
std::optional<int> explicit_bit(Rel r);
Rel explicit_rel(int bit);

class ExplicitSet {
 public:
  constexpr ExplicitSet() = default;
  constexpr explicit ExplicitSet(uint16_t mask) : mask_(mask) {}

  static ExplicitSet all() { return ExplicitSet((1u << kExplicitCount) - 1); }
  static ExplicitSet of(std::initializer_list<Rel> rels);

  bool contains(Rel r) const;
  bool contains_bit(int bit) const { return mask_ >> bit & 1; }
  ExplicitSet& add(Rel r);
  ExplicitSet& add_bit(int bit) { mask_ |= uint16_t(1u << bit); return *this; }
  ExplicitSet& remove(Rel r);

  bool subset_of(ExplicitSet o) const { return (mask_ & ~o.mask_) == 0; }
  bool empty() const { return mask_ == 0; }
  int size() const;
  uint16_t mask() const { return mask_; }

  ExplicitSet operator|(ExplicitSet o) const { return ExplicitSet(mask_ | o.mask_); }
  ExplicitSet operator&(ExplicitSet o) const { return ExplicitSet(mask_ & o.mask_); }
  ExplicitSet operator-(ExplicitSet o) const { return ExplicitSet(mask_ & ~o.mask_); }
  bool operator==(const ExplicitSet&) const = default;
  auto operator<=>(const ExplicitSet&) const = default;

  std::vector<Rel> members() const;  // in bit order
  // Comma-separated canonical names in bit order, e.g. "lt,ip2,ii24".
  std::string to_string() const;
  // Parses a comma-separated relation list; every member must resolve to an
  // explicit relation. Whitespace around names is ignored.
  static std::optional<ExplicitSet> parse(std::string_view text);

 private:
  uint16_t mask_ = 0;
};

// reverse(r): the image of r under order reversal, restricted to R+. The
// reversible relations pair up ip0<->ip4, ip1<->ip3, ii14<->ii03;
// everything else in R+ is fixed.
Rel reverse(Rel r);
bool is_reversible(Rel r);      // ip0, ip1, ip3, ip4, ii14, ii03
bool is_self_symmetric(Rel r);  // ip2, ii04

// Replaces every reversible member by its reverse.
ExplicitSet symmetric_set(ExplicitSet s);

// Dual of any of the 26 symbols under order reversal: region digits
// complement (k -> 4-k) and the two endpoint digits swap.
Rel dual_symbol(Rel r);

// How the order-reversal dual acts on an atom r(x,y) of R+:
// the symbol to substitute and whether the arguments swap.
struct DualAction {
  Rel symbol;
  bool swap_args;
};
DualAction dual_symbol_action(Rel r);

// Vocabulary universes for spectrum enumeration.
enum class Vocab : uint8_t { All, IPlus, MPlus };
std::optional<Vocab> vocab_from_name(std::string_view name);
std::string_view vocab_name(Vocab v);
ExplicitSet vocab_universe(Vocab v);

}  // namespace pint
