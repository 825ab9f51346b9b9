#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace gasket {

// Nonnegative dyadic rational num / 2^exp, kept normalized (num odd or the
// canonical zero 0/2^0).  All address-space distances are numbers of this
// form, so the metric code is exact; exponents stay small enough that
// to_double() is lossless.
class Dyadic {
 public:
  constexpr Dyadic() : num_(0), exp_(0) {}

  // num / 2^exp; requires num >= 0 and exp >= 0.
  static Dyadic make(std::int64_t num, int exp);

  static Dyadic zero() { return Dyadic(); }
  static Dyadic one() { return make(1, 0); }

  // 2^-k for k >= 0.
  static Dyadic pow2(int k) { return make(1, k); }

  std::int64_t num() const { return num_; }
  int exp() const { return exp_; }
  bool is_zero() const { return num_ == 0; }

  Dyadic half() const;
  Dyadic twice() const;

  Dyadic operator+(const Dyadic& o) const;
  // Requires *this >= o.
  Dyadic operator-(const Dyadic& o) const;
  Dyadic operator*(const Dyadic& o) const;

  friend bool operator==(const Dyadic& x, const Dyadic& y) {
    return x.num_ == y.num_ && x.exp_ == y.exp_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& x, const Dyadic& y);

  // Exact: numerators stay far below 2^53.
  double to_double() const;

  // "num/2^exp", or "0" / "1" for the trivial values.
  std::string to_fraction() const;
  // Exact decimal expansion (dyadics terminate), e.g. "0.25".
  std::string to_decimal() const;

 private:
  Dyadic(std::int64_t num, int exp) : num_(num), exp_(exp) {}

  std::int64_t num_;
  int exp_;
};

Dyadic min(const Dyadic& x, const Dyadic& y);
Dyadic max(const Dyadic& x, const Dyadic& y);

}  // namespace gasket
