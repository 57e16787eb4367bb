#pragma once

// Shared fixtures for the test binaries: the 3-dimensional simple algebra
// with its golden operator data, two 2-dimensional families, and small
// construction shortcuts. Include doctest.h before this header.

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "cybe.hpp"
#include "error.hpp"

#define CHECK_PASS(expr)                                  \
  do {                                                    \
    rbla::CheckReport _r = (expr);                        \
    CHECK_MESSAGE(_r.pass(), rbla::summary(_r));          \
  } while (0)

#define REQUIRE_PASS(expr)                                \
  do {                                                    \
    rbla::CheckReport _r = (expr);                        \
    REQUIRE_MESSAGE(_r.pass(), rbla::summary(_r));        \
  } while (0)

#define CHECK_FAIL(expr)                                                        \
  do {                                                                          \
    rbla::CheckReport _r = (expr);                                              \
    CHECK_MESSAGE(!_r.pass(), _r.check, ": expected a violation, report clean"); \
  } while (0)

namespace fx {

using namespace rbla;

inline Mat mati(int rows, int cols, std::initializer_list<long> v) {
  Mat m(rows, cols);
  auto it = v.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Scalar(*it++);
  return m;
}

// One structure-constant term: e_i * e_j has coefficient num/den on e_k.
struct Entry {
  int i, j, k;
  long num;
  long den = 1;
};

inline BilinearProduct prod(const Space& s, const std::vector<Entry>& es) {
  std::vector<Mat> L(static_cast<size_t>(s.dim()), Mat(s.dim(), s.dim()));
  for (const auto& e : es)
    L[static_cast<size_t>(e.i)].at(e.k, e.j) += Scalar(e.num, e.den);
  return make_product(s, std::move(L));
}

// Entries list e_i * e_j for i < j only; e_j * e_i is filled with the negative.
inline BilinearProduct antiprod(const Space& s, const std::vector<Entry>& es) {
  std::vector<Mat> L(static_cast<size_t>(s.dim()), Mat(s.dim(), s.dim()));
  for (const auto& e : es) {
    Scalar c(e.num, e.den);
    L[static_cast<size_t>(e.i)].at(e.k, e.j) += c;
    L[static_cast<size_t>(e.j)].at(e.k, e.i) -= c;
  }
  return make_product(s, std::move(L));
}

inline Mat bump(Mat m, int i, int j, long delta) {
  m.at(i, j) += Scalar(delta);
  return m;
}

inline BilinearProduct bump_product(BilinearProduct p, int i, int j, int k, long delta) {
  p.L[static_cast<size_t>(i)].at(k, j) += Scalar(delta);
  return p;
}

// --- the simple 3-dimensional algebra: [h,x] = 2x, [h,y] = -2y, [x,y] = h ---

inline Space sl2_space() { return make_space("sl2", {"x", "h", "y"}); }

inline BilinearProduct sl2_bracket() {
  return antiprod(sl2_space(), {{1, 0, 0, 2}, {1, 2, 2, -2}, {0, 2, 1, 1}});
}

// P(x) = x + y, P(h) = 2h + 4y, P(y) = x - 2h - 3y; weight-0 operator.
inline Mat sl2_P() { return mati(3, 3, {1, 0, 1, 0, 2, -2, 1, 4, -3}); }

inline RBLieAlgebra sl2_rb() { return make_rb_lie(make_lie(sl2_bracket()), Scalar(0), sl2_P()); }

// B(x,y) = B(y,x) = 1, B(h,h) = 2: symmetric, invariant, nondegenerate.
inline BilinearForm sl2_form() {
  return BilinearForm{sl2_space(), mati(3, 3, {0, 0, 1, 0, 2, 0, 1, 0, 0})};
}

// Golden adjoint of P under that form: P^(x) = -3x + 2h + y, P^(h) = -4x + 2h,
// P^(y) = x + y.
inline Mat sl2_Phat() { return mati(3, 3, {-3, -4, 1, 2, 2, 0, 1, 0, 1}); }

// Golden induced product x o y = [P(x), y], all nine values.
inline BilinearProduct sl2_circ() {
  return prod(sl2_space(), {
                               {0, 0, 1, -1},              // x o x = -h
                               {0, 1, 0, -2}, {0, 1, 2, 2}, // x o h = -2x + 2y
                               {0, 2, 1, 1},               // x o y = h
                               {1, 0, 0, 4},  {1, 0, 1, -4}, // h o x = 4x - 4h
                               {1, 1, 2, 8},               // h o h = 8y
                               {1, 2, 2, -4},              // h o y = -4y
                               {2, 0, 0, -4}, {2, 0, 1, 3}, // y o x = -4x + 3h
                               {2, 1, 0, -2}, {2, 1, 2, -6}, // y o h = -2x - 6y
                               {2, 2, 1, 1},  {2, 2, 2, 4},  // y o y = h + 4y
                           });
}

// Golden left product for Q = P^: x <| h = -6x + 4h + 2y, x <| y = 4x - 2h,
// h <| y = 2x + 2y, antisymmetric.
inline BilinearProduct sl2_tri_l() {
  return antiprod(sl2_space(), {
                                   {0, 1, 0, -6}, {0, 1, 1, 4}, {0, 1, 2, 2},
                                   {0, 2, 0, 4},  {0, 2, 1, -2},
                                   {1, 2, 0, 2},  {1, 2, 2, 2},
                               });
}

// --- 2-dimensional families ---

inline Space na2_space() { return make_space("na2", {"e1", "e2"}); }

// The nonabelian 2-dimensional algebra [e1, e2] = e1.
inline BilinearProduct na2_bracket() { return antiprod(na2_space(), {{0, 1, 0, 1}}); }

// Operator criterion on that bracket for P = [[a,b],[c,d]] at weight w:
// a*d - b*c - a*(a+d+w) = 0 and c*(a+d+w) = 0.
inline bool na2_oracle(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d,
                       const Scalar& w) {
  Scalar tr = a + d + w;
  return (a * d - b * c - a * tr).is_zero() && (c * tr).is_zero();
}

inline Space ab2_space() { return make_space("ab2", {"e1", "e2"}); }

inline BilinearProduct ab2_bracket() { return zero_product(ab2_space()); }

// --- deterministic pseudo-random data for corruption sweeps ---

inline Scalar rand_scalar(std::mt19937& rng, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> d(lo, hi);
  return Scalar(d(rng));
}

inline Mat rand_mat(std::mt19937& rng, int rows, int cols, int lo = -2, int hi = 2) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rand_scalar(rng, lo, hi);
  return m;
}

inline Tensor2 rand_tensor(std::mt19937& rng, const Space& s, int lo = -2, int hi = 2) {
  return Tensor2{s, s, rand_mat(rng, s.dim(), s.dim(), lo, hi)};
}

inline Tensor2 rand_antisym_tensor(std::mt19937& rng, const Space& s, int lo = -2, int hi = 2) {
  Tensor2 t = rand_tensor(rng, s, lo, hi);
  return sub(t, flip(t));
}

inline bool has_tag(const CheckReport& r, const std::string& tag) {
  for (const auto& v : r.violations)
    if (v.equation.find(tag) != std::string::npos) return true;
  return false;
}

} // namespace fx
