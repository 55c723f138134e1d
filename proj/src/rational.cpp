#include "shortcycle/rational.hpp"

#include "shortcycle/error.hpp"

namespace shortcycle {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  // cpp_rational rejects a negative denominator, so move the sign first.
  value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den)
                   : boost::multiprecision::cpp_rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw InvalidInput("division by zero");
  value_ /= o.value_;
  return *this;
}

BigInt Rational::floor() const {
  BigInt num = numerator();
  BigInt den = denominator();
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

BigInt Rational::ceil() const {
  BigInt num = numerator();
  BigInt den = denominator();
  BigInt q = num / den;
  if (num > 0 && q * den != num) q += 1;
  return q;
}

double Rational::to_double() const {
  return value_.convert_to<double>();
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

Rational reciprocal(std::int64_t k) {
  if (k <= 0) throw InvalidInput("reciprocal of non-positive integer");
  return Rational(BigInt(1), BigInt(k));
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if (a % b != 0 && ((a > 0) == (b > 0))) ++q;
  return q;
}

}  // namespace shortcycle
