#include "report.hpp"

namespace rbla {

namespace {

std::string pair_label(const std::string& a, const std::string& b) { return a + "(x)" + b; }

} // namespace

void CheckReport::add(const std::string& equation, const std::string& witness,
                      const Vector& defect) {
  Violation v{equation, witness, {}};
  for (int i = 0; i < defect.space.dim(); ++i) {
    const auto& s = defect.c[static_cast<size_t>(i)];
    if (!s.is_zero()) v.defect.emplace_back(defect.space.basis[static_cast<size_t>(i)], s);
  }
  violations.push_back(std::move(v));
}

void CheckReport::add(const std::string& equation, const std::string& witness,
                      const Tensor2& defect) {
  Violation v{equation, witness, {}};
  for (int i = 0; i < defect.s1.dim(); ++i)
    for (int j = 0; j < defect.s2.dim(); ++j) {
      const auto& s = defect.c.at(i, j);
      if (!s.is_zero())
        v.defect.emplace_back(pair_label(defect.s1.basis[static_cast<size_t>(i)],
                                         defect.s2.basis[static_cast<size_t>(j)]),
                              s);
    }
  violations.push_back(std::move(v));
}

void CheckReport::add(const std::string& equation, const std::string& witness,
                      const Tensor3& defect) {
  Violation v{equation, witness, {}};
  for (int i = 0; i < defect.s1.dim(); ++i)
    for (int j = 0; j < defect.s2.dim(); ++j)
      for (int k = 0; k < defect.s3.dim(); ++k) {
        const auto& s = defect.at(i, j, k);
        if (!s.is_zero())
          v.defect.emplace_back(pair_label(pair_label(defect.s1.basis[static_cast<size_t>(i)],
                                                      defect.s2.basis[static_cast<size_t>(j)]),
                                           defect.s3.basis[static_cast<size_t>(k)]),
                                s);
      }
  violations.push_back(std::move(v));
}

void CheckReport::add_scalar(const std::string& equation, const std::string& witness,
                             const Scalar& defect) {
  violations.push_back(Violation{equation, witness, {{"value", defect}}});
}

void CheckReport::add_flag(const std::string& equation, const std::string& witness) {
  violations.push_back(Violation{equation, witness, {}});
}

void CheckReport::absorb(const std::string& prefix, const CheckReport& sub) {
  for (const auto& v : sub.violations)
    violations.push_back(Violation{prefix + "." + v.equation, v.witness, v.defect});
}

void CheckReport::append(const CheckReport& sub) {
  violations.insert(violations.end(), sub.violations.begin(), sub.violations.end());
}

std::string summary(const CheckReport& rep) {
  if (rep.pass()) return rep.check + ": pass";
  std::string out = rep.check + ": FAIL";
  size_t shown = 0;
  for (const auto& v : rep.violations) {
    if (shown == 4) {
      out += " (+" + std::to_string(rep.violations.size() - shown) + " more)";
      break;
    }
    out += "\n  " + v.equation + " at " + v.witness;
    if (!v.defect.empty()) {
      out += ": ";
      for (size_t i = 0; i < v.defect.size() && i < 6; ++i) {
        if (i) out += ", ";
        out += v.defect[i].second.str() + "*" + v.defect[i].first;
      }
      if (v.defect.size() > 6) out += ", ...";
    }
    ++shown;
  }
  return out;
}

StructureError::StructureError(const std::string& what, CheckReport rep)
    : std::runtime_error(what + "\n" + summary(rep)), rep_(std::move(rep)) {}

} // namespace rbla
