#pragma once

#include "scalar.hpp"
#include "space.hpp"

#include <optional>
#include <vector>

namespace rbla {

// Dense matrix over Scalar, row-major. All sizes here are tiny, so the
// plain O(n^3) algorithms are exact and fast enough.
class Mat {
public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static Mat identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  bool is_zero() const;
  Mat transpose() const;
  std::vector<Scalar> col(int j) const;
  void set_col(int j, const std::vector<Scalar>& v);
  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;

  Scalar det() const;                  // square only
  std::optional<Mat> inverse() const;  // nullopt when singular

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(const Scalar& s, Mat m);
  Mat operator-() const;
  bool operator==(const Mat&) const = default;

private:
  int r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

Mat block_diag(const Mat& a, const Mat& b);
// Linear combination sum_k c[k] * ops[k]; ops must be nonempty and same-shaped.
Mat combine(const std::vector<Mat>& ops, const std::vector<Scalar>& c);

// Coordinates over a labelled space; arithmetic requires equal spaces.
struct Vector {
  Space space;
  std::vector<Scalar> c;
};

Vector zero_vector(const Space& s);
Vector basis_vector(const Space& s, int i);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, Vector v);
bool is_zero(const Vector& v);

// Nonzero coefficients rendered over the space's labels, e.g. "2h - 3y".
std::string pretty(const Vector& v);
std::string pretty(const Space& s, const std::vector<Scalar>& coords);

} // namespace rbla
