#include "kcsim/util.hpp"

#include <cstdlib>
#include <stdexcept>

namespace kcsim {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto parse_ll = [](const std::string& part) {
    std::size_t pos = 0;
    long long v = std::stoll(part, &pos);
    if (pos != part.size()) throw std::invalid_argument("bad rational: " + part);
    return v;
  };
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    long long num = parse_ll(s.substr(0, slash));
    long long den = parse_ll(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rational(num, den);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string frac = s.substr(dot + 1);
    if (frac.empty() || frac.size() > 9)
      throw std::invalid_argument("bad decimal: " + s);
    long long den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    long long whole = dot == 0 ? 0 : parse_ll(s.substr(0, dot));
    long long num = parse_ll(frac);
    bool neg = !s.empty() && s[0] == '-';
    long long scaled = whole * den + (neg ? -num : num);
    return Rational(scaled, den);
  }
  return Rational(parse_ll(s));
}

long long ceil_to_int(const Rational& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r > 0) ++q;
  return q;
}

}  // namespace kcsim
