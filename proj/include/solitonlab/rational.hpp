#pragma once

// Exact rational scalars. Every quantity in the library (structure constants,
// connection coefficients, curvature, soliton unknowns) is a Rat; there is no
// floating point anywhere on the computational path.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace solitonlab {

/// Raised for malformed user input (rational literals, parameters, files).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
class Rat {
 public:
  Rat() = default;
  Rat(int v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(std::int64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InputError("zero denominator");
    // boost::rational over an unbounded integer rejects negative denominators.
    value_ = den < 0 ? Impl(-num, -den) : Impl(num, den);
  }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
  Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
  Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    value_ /= o.value_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { Rat r; r.value_ = -a.value_; return r; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// `p` for integers, `p/q` otherwise.
  std::string str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  double to_double() const { return value_.convert_to<double>(); }

  std::size_t hash() const {
    return std::hash<std::string>{}(str());
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  using Impl = boost::multiprecision::cpp_rational;
  Impl value_{0};
};

namespace detail {
inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}
}  // namespace detail

/// Parses `[-]digits` or `[-]digits/digits`.
inline Rat rat_parse(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!detail::all_digits(num_text) || !detail::all_digits(den_text)) {
    throw InputError("malformed rational literal '" + original + "'");
  }
  BigInt num{std::string(num_text)};
  BigInt den{std::string(den_text)};
  if (den == 0) throw InputError("zero denominator in '" + original + "'");
  if (negative) num = -num;
  return Rat(num, den);
}

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

}  // namespace solitonlab

template <>
struct std::hash<solitonlab::Rat> {
  std::size_t operator()(const solitonlab::Rat& r) const { return r.hash(); }
};
