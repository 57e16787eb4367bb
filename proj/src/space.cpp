#include "space.hpp"

#include "error.hpp"

#include <set>

namespace rbla {

Space make_space(std::string name, std::vector<std::string> basis) {
  if (basis.empty()) throw InputError("space '" + name + "' has no basis");
  std::set<std::string> seen;
  for (const auto& l : basis) {
    if (l.empty()) throw InputError("space '" + name + "' has an empty basis label");
    if (!seen.insert(l).second)
      throw InputError("space '" + name + "' repeats basis label '" + l + "'");
  }
  return Space{std::move(name), std::move(basis)};
}

std::string dual_label(const std::string& label) {
  if (!label.empty() && label.back() == '*') return label.substr(0, label.size() - 1);
  return label + "*";
}

Space dual_of(const Space& s) {
  Space d;
  d.name = dual_label(s.name);
  d.basis.reserve(s.basis.size());
  for (const auto& l : s.basis) d.basis.push_back(dual_label(l));
  return d;
}

Space direct_sum(const Space& a, const Space& b) {
  std::set<std::string> taken(a.basis.begin(), a.basis.end());
  std::vector<std::string> basis = a.basis;
  for (const auto& l : b.basis) {
    std::string label = l;
    while (!taken.insert(label).second) label += "'";
    basis.push_back(std::move(label));
  }
  return make_space(a.name + "+" + b.name, std::move(basis));
}

} // namespace rbla
