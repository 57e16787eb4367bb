#include "matrix.hpp"

#include "error.hpp"

namespace rbla {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Mat Mat::transpose() const {
  Mat t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::vector<Scalar> Mat::col(int j) const {
  std::vector<Scalar> v(r_);
  for (int i = 0; i < r_; ++i) v[i] = at(i, j);
  return v;
}

void Mat::set_col(int j, const std::vector<Scalar>& v) {
  if (static_cast<int>(v.size()) != r_) throw InputError("column length mismatch");
  for (int i = 0; i < r_; ++i) at(i, j) = v[i];
}

std::vector<Scalar> Mat::apply(const std::vector<Scalar>& x) const {
  if (static_cast<int>(x.size()) != c_) throw InputError("matrix/vector size mismatch");
  std::vector<Scalar> y(r_);
  for (int i = 0; i < r_; ++i) {
    Scalar acc;
    for (int j = 0; j < c_; ++j) acc += at(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

Mat& Mat::operator+=(const Mat& o) {
  if (r_ != o.r_ || c_ != o.c_) throw InputError("matrix shape mismatch in +");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (r_ != o.r_ || c_ != o.c_) throw InputError("matrix shape mismatch in -");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.c_ != b.r_) throw InputError("matrix shape mismatch in *");
  Mat m(a.r_, b.c_);
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.c_; ++j) m.at(i, j) += aik * b.at(k, j);
    }
  return m;
}

Mat operator*(const Scalar& s, Mat m) {
  for (auto& x : m.a_) x *= s;
  return m;
}

Mat Mat::operator-() const { return Scalar(-1) * *this; }

namespace {

// Gauss-Jordan over the rationals; returns the inverse through `inv` when
// requested and the determinant either way.
Scalar eliminate(Mat a, Mat* inv) {
  const int n = a.rows();
  Mat id = Mat::identity(n);
  Scalar det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (!a.at(i, col).is_zero()) { pivot = i; break; }
    if (pivot < 0) return Scalar(0);
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(id.at(pivot, j), id.at(col, j));
      }
      det = -det;
    }
    Scalar p = a.at(col, col);
    det *= p;
    Scalar pinv = Scalar(1) / p;
    for (int j = 0; j < n; ++j) {
      a.at(col, j) *= pinv;
      id.at(col, j) *= pinv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      Scalar f = a.at(i, col);
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        id.at(i, j) -= f * id.at(col, j);
      }
    }
  }
  if (inv) *inv = id;
  return det;
}

} // namespace

Scalar Mat::det() const {
  if (r_ != c_) throw InputError("determinant of a non-square matrix");
  return eliminate(*this, nullptr);
}

std::optional<Mat> Mat::inverse() const {
  if (r_ != c_) throw InputError("inverse of a non-square matrix");
  Mat inv;
  if (eliminate(*this, &inv).is_zero()) return std::nullopt;
  return inv;
}

Vector zero_vector(const Space& s) { return Vector{s, std::vector<Scalar>(s.dim())}; }

Vector basis_vector(const Space& s, int i) {
  Vector v = zero_vector(s);
  v.c[i] = Scalar(1);
  return v;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.space != b.space) throw InputError("vector space mismatch in add");
  Vector r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.space != b.space) throw InputError("vector space mismatch in sub");
  Vector r = a;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
  return r;
}

Vector scale(const Scalar& s, Vector v) {
  for (auto& x : v.c) x *= s;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v.c)
    if (!x.is_zero()) return false;
  return true;
}

Mat block_diag(const Mat& a, const Mat& b) {
  Mat m(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return m;
}

Mat combine(const std::vector<Mat>& ops, const std::vector<Scalar>& c) {
  Mat m(ops[0].rows(), ops[0].cols());
  for (size_t k = 0; k < ops.size(); ++k)
    if (!c[k].is_zero()) m += c[k] * ops[k];
  return m;
}

std::string pretty(const Space& s, const std::vector<Scalar>& coords) {
  std::string out;
  for (int i = 0; i < s.dim(); ++i) {
    const Scalar& x = coords[i];
    if (x.is_zero()) continue;
    Scalar mag = x.sign() < 0 ? -x : x;
    if (out.empty()) {
      if (x.sign() < 0) out += "-";
    } else {
      out += x.sign() < 0 ? " - " : " + ";
    }
    if (!(mag == Scalar(1))) out += mag.str() + "*";
    out += s.basis[i];
  }
  return out.empty() ? "0" : out;
}

std::string pretty(const Vector& v) { return pretty(v.space, v.c); }

} // namespace rbla
