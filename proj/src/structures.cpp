#include "pint/structures.hpp"

namespace pint {

std::string Element::to_string() const {
  if (sort == Sort::Point) return std::to_string(a);
  return "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

bool holds(Rel r, const Element& x, const Element& y) {
  if (x.sort != left_sort(r) || y.sort != right_sort(r))
    throw SortError("sort mismatch: " + std::string(rel_name(r)) + "(" +
                    x.to_string() + ", " + y.to_string() + ")");
  return holds_regions<long long>(r, x.sort == Sort::Interval, x.a, x.b,
                                  y.sort == Sort::Interval, y.a, y.b);
}

std::vector<Element> FiniteChain::points() const {
  std::vector<Element> out;
  for (int i = 0; i < n; ++i) out.push_back(Element::point(i));
  return out;
}

std::vector<Element> FiniteChain::intervals() const {
  std::vector<Element> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(Element::interval(i, j));
  return out;
}

std::vector<Element> FiniteChain::elements(Sort s) const {
  return s == Sort::Point ? points() : intervals();
}

bool FiniteChain::contains(const Element& e) const {
  if (e.sort == Sort::Point) return 0 <= e.a && e.a < n;
  return 0 <= e.a && e.a < e.b && e.b < n;
}

Element FiniteChain::dual(const Element& e) const {
  if (e.sort == Sort::Point) return Element::point(n - 1 - e.a);
  return Element::interval(n - 1 - e.b, n - 1 - e.a);
}

}  // namespace pint
