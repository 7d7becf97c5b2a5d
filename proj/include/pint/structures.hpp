#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "pint/relations.hpp"

namespace pint {

struct SortError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Region of c relative to the interval [l,r]: 0 (< l), 1 (= l),
// 2 (between), 3 (= r), 4 (> r). Requires l < r.
template <class T>
int region_in_interval(const T& l, const T& r, const T& c) {
  if (c < l) return 0;
  if (c == l) return 1;
  if (c < r) return 2;
  if (c == r) return 3;
  return 4;
}

// Region of d relative to the point c: 0 (< c), 2 (= c), 4 (> c).
template <class T>
int region_at_point(const T& c, const T& d) {
  if (d < c) return 0;
  if (d == c) return 2;
  return 4;
}

// Truth of r(x, y) over any linear order, with x and y given as either a
// point value (is_interval = false, value in `a`) or an interval (a < b).
// Sorts must already match the symbol.
template <class T>
bool holds_regions(Rel r, bool x_interval, const T& xa, const T& xb,
                   bool y_interval, const T& ya, const T& yb) {
  auto digits = [&](int& k1, int& k2) {
    std::string_view n = rel_name(r);
    if (n == "lt") n = "pp4";
    else if (n == "eqp") n = "pp2";
    else if (n == "gtp") n = "pp0";
    else if (n == "eqi") n = "ii13";
    k1 = n[2] - '0';
    k2 = n.size() > 3 ? n[3] - '0' : -1;
  };
  int k1, k2;
  digits(k1, k2);
  if (!x_interval && !y_interval)  // pp_k(c,d): d in region k of c
    return region_at_point(xa, ya) == k1;
  if (x_interval && !y_interval)  // ip_k(I,c): c in region k of I
    return region_in_interval(xa, xb, ya) == k1;
  if (!x_interval && y_interval)  // pi_kk'(c,J)
    return region_at_point(xa, ya) == k1 && region_at_point(xa, yb) == k2;
  // ii_kk'(I,J)
  return region_in_interval(xa, xb, ya) == k1 &&
         region_in_interval(xa, xb, yb) == k2;
}

// An element of a two-sorted structure over integer carriers: a point `a`
// or an interval [a,b] with a < b.
struct Element {
  Sort sort;
  long long a = 0;
  long long b = 0;

  static Element point(long long v) { return {Sort::Point, v, v}; }
  static Element interval(long long l, long long r) { return {Sort::Interval, l, r}; }
  bool operator==(const Element&) const = default;
  auto operator<=>(const Element&) const = default;
  std::string to_string() const;
};

// holds(r, x, y): truth of the atom over the ambient integer order.
// Throws SortError when an argument's sort does not match the symbol.
bool holds(Rel r, const Element& x, const Element& y);

// The finite linear order on {0, ..., n-1}.
struct FiniteChain {
  int n = 0;

  std::vector<Element> points() const;
  std::vector<Element> intervals() const;
  std::vector<Element> elements(Sort s) const;
  bool contains(const Element& e) const;

  // Order-reversal image of an element, i -> n-1-i.
  Element dual(const Element& e) const;
};

}  // namespace pint
