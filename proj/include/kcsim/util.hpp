#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace kcsim {

using Rational = boost::rational<long long>;

// Accepts "3", "5/4" and short decimals like "1.25".
Rational parse_rational(const std::string& s);

long long ceil_to_int(const Rational& r);

namespace detail {

// SplitMix64 finalizer, used wherever a deterministic per-key value is
// needed (stretch factors, generator reseeding).
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline double unit_interval(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace detail

}  // namespace kcsim
