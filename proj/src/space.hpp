#pragma once

#include <string>
#include <vector>

namespace rbla {

// A finite-dimensional vector space with an ordered, labelled basis.
// The dual space carries the dual basis in the same index order; dual
// labels toggle a trailing '*', so dual_of is an involution.
struct Space {
  std::string name;
  std::vector<std::string> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  bool operator==(const Space&) const = default;
};

Space make_space(std::string name, std::vector<std::string> basis);

std::string dual_label(const std::string& label);
Space dual_of(const Space& s);

// Concatenated basis, first summand's labels first. A second-summand label
// already taken gains primes until unique, so coordinates never alias.
Space direct_sum(const Space& a, const Space& b);

} // namespace rbla
