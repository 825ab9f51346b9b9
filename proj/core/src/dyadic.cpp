#include "gasket/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace gasket {

namespace {

// Numerators are kept well below 2^53 so doubles stay exact; the guard only
// trips on inputs far outside the intended level / tolerance ranges.
void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("dyadic overflow: ") + what);
}

}  // namespace

Dyadic Dyadic::make(std::int64_t num, int exp) {
  check(num >= 0, "negative numerator");
  check(exp >= 0, "negative exponent");
  if (num == 0) return Dyadic(0, 0);
  while (exp > 0 && (num & 1) == 0) {
    num >>= 1;
    --exp;
  }
  check(num < (std::int64_t{1} << 53), "numerator too large");
  check(exp <= 60, "exponent too large");
  return Dyadic(num, exp);
}

Dyadic Dyadic::half() const { return make(num_, exp_ + 1); }

Dyadic Dyadic::twice() const {
  if (exp_ > 0) return Dyadic(num_, exp_ - 1);
  return make(num_ << 1, 0);
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
  const int e = exp_ > o.exp_ ? exp_ : o.exp_;
  check(e - exp_ < 62 && e - o.exp_ < 62, "exponent spread");
  const std::int64_t a = num_ << (e - exp_);
  const std::int64_t b = o.num_ << (e - o.exp_);
  check(a >= 0 && b >= 0 && a <= INT64_MAX - b, "sum");
  return make(a + b, e);
}

Dyadic Dyadic::operator-(const Dyadic& o) const {
  const int e = exp_ > o.exp_ ? exp_ : o.exp_;
  check(e - exp_ < 62 && e - o.exp_ < 62, "exponent spread");
  const std::int64_t a = num_ << (e - exp_);
  const std::int64_t b = o.num_ << (e - o.exp_);
  check(a >= b, "negative difference");
  return make(a - b, e);
}

Dyadic Dyadic::operator*(const Dyadic& o) const {
  const __int128 p = static_cast<__int128>(num_) * o.num_;
  check(p < (static_cast<__int128>(1) << 62), "product");
  return make(static_cast<std::int64_t>(p), exp_ + o.exp_);
}

std::strong_ordering operator<=>(const Dyadic& x, const Dyadic& y) {
  const int e = x.exp_ > y.exp_ ? x.exp_ : y.exp_;
  const __int128 a = static_cast<__int128>(x.num_) << (e - x.exp_);
  const __int128 b = static_cast<__int128>(y.num_) << (e - y.exp_);
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double Dyadic::to_double() const {
  return std::ldexp(static_cast<double>(num_), -exp_);
}

std::string Dyadic::to_fraction() const {
  if (num_ == 0) return "0";
  if (exp_ == 0 && num_ == 1) return "1";
  return std::to_string(num_) + "/2^" + std::to_string(exp_);
}

std::string Dyadic::to_decimal() const {
  check(exp_ <= 59, "decimal expansion");
  std::string out = std::to_string(num_ >> exp_);
  std::int64_t rest = exp_ == 0 ? 0 : (num_ & ((std::int64_t{1} << exp_) - 1));
  if (rest == 0) return out;
  out += '.';
  // Long division: a dyadic with exponent e has at most e decimal digits.
  while (rest != 0) {
    rest *= 10;
    out += static_cast<char>('0' + (rest >> exp_));
    rest &= (std::int64_t{1} << exp_) - 1;
  }
  return out;
}

Dyadic min(const Dyadic& x, const Dyadic& y) { return x <= y ? x : y; }
Dyadic max(const Dyadic& x, const Dyadic& y) { return x <= y ? y : x; }

}  // namespace gasket
