#include "gammakit/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>

namespace gammakit {

Rat parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(Int(text));
    }
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  }
}

std::string format_rational(const Rat& value) {
  const Int num = boost::multiprecision::numerator(value);
  const Int den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rat& value) { return value.convert_to<double>(); }

double log_big(const Int& n) {
  if (n <= 0) throw std::domain_error("log_big needs a positive integer");
  const std::size_t bits = boost::multiprecision::msb(n);
  if (bits < 512) return std::log(n.convert_to<double>());
  // Keep the top bits as a double mantissa, add back the shifted-out scale.
  const std::size_t shift = bits - 52;
  const Int top = n >> shift;
  return std::log(top.convert_to<double>()) +
         static_cast<double>(shift) * std::log(2.0);
}

}  // namespace gammakit
