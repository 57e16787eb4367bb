#pragma once

#include <chrono>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "tensor.hpp"

namespace rbla {

// One failed instance of a law: the law's name, the basis combination that
// broke it, and the nonzero coordinates of the defect.
struct Violation {
  std::string equation;
  std::string witness;
  std::vector<std::pair<std::string, Scalar>> defect;
};

struct CheckReport {
  std::string check;
  std::vector<Violation> violations;
  long long ms = 0;

  bool pass() const { return violations.empty(); }
  void add(const std::string& equation, const std::string& witness, const Vector& defect);
  void add(const std::string& equation, const std::string& witness, const Tensor2& defect);
  void add(const std::string& equation, const std::string& witness, const Tensor3& defect);
  void add_scalar(const std::string& equation, const std::string& witness, const Scalar& defect);
  void add_flag(const std::string& equation, const std::string& witness);
  // Import another report's violations, prefixing their equation tags.
  void absorb(const std::string& prefix, const CheckReport& sub);
  // Same without prefixing.
  void append(const CheckReport& sub);
};

std::string summary(const CheckReport& rep);

// Thrown by constructions whose prerequisites fail; carries the evidence.
class StructureError : public std::runtime_error {
 public:
  StructureError(const std::string& what, CheckReport rep);
  const CheckReport& report() const { return rep_; }

 private:
  CheckReport rep_;
};

class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  long long ms() const {
    auto d = std::chrono::steady_clock::now() - t0_;
    return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

} // namespace rbla
