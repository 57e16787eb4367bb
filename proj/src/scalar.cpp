#include "scalar.hpp"

#include "error.hpp"

namespace rbla {

namespace {

bool digits_only(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

bool valid_integer(const std::string& s) {
  if (!s.empty() && s[0] == '-') return digits_only(s.substr(1));
  return digits_only(s);
}

} // namespace

Scalar::Scalar(long num, long den) {
  if (den == 0) throw InputError("scalar with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Scalar Scalar::parse(const std::string& text) {
  std::string num = text, den;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!digits_only(den)) throw InputError("bad scalar denominator: '" + text + "'");
  }
  if (!valid_integer(num)) throw InputError("bad scalar: '" + text + "'");
  Scalar s;
  s.v_ = mpq_class(den.empty() ? num : num + "/" + den);
  if (s.v_.get_den() == 0) throw InputError("scalar with zero denominator: '" + text + "'");
  s.v_.canonicalize();
  return s;
}

std::string Scalar::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.v_ = -v_;
  return s;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw InputError("scalar division by zero");
  v_ /= o.v_;
  return *this;
}

} // namespace rbla
