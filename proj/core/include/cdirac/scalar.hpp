#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace cdirac {

using Scalar = mpq_class;

// Accepts "3", "-1/2", "+4/6"; always canonicalized.
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& x);
bool is_integer(const Scalar& x);
// Exact square root of a nonnegative rational square; throws otherwise.
Scalar exact_sqrt(const Scalar& x);

struct Weight {
  std::vector<Scalar> c;

  Weight() = default;
  explicit Weight(std::size_t rank) : c(rank) {}
  explicit Weight(std::vector<Scalar> coords) : c(std::move(coords)) {}
  Weight(std::initializer_list<long> coords);
  Weight(std::initializer_list<Scalar> coords) : c(coords) {}

  std::size_t size() const { return c.size(); }
  const Scalar& operator[](std::size_t i) const { return c[i]; }
  Scalar& operator[](std::size_t i) { return c[i]; }
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a);
  friend Weight operator*(const Scalar& s, Weight a);
  friend bool operator==(const Weight& a, const Weight& b) { return a.c == b.c; }
  friend bool operator<(const Weight& a, const Weight& b) { return a.c < b.c; }
};

std::string to_string(const Weight& w);
std::vector<std::string> to_strings(const Weight& w);

}  // namespace cdirac
