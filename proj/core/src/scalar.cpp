#include "cdirac/scalar.hpp"

#include <cctype>

#include "cdirac/errors.hpp"

namespace cdirac {

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  bool digits = false, slash = false, denom_digits = false;
  for (; i < s.size(); ++i) {
    char ch = s[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      (slash ? denom_digits : digits) = true;
    } else if (ch == '/' && !slash && digits) {
      slash = true;
    } else {
      throw ParseError("not a rational: '" + s + "'");
    }
  }
  if (!digits || (slash && !denom_digits)) throw ParseError("not a rational: '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Scalar x;
  x.set_str(s, 10);
  if (x.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
  x.canonicalize();
  return x;
}

std::string to_string(const Scalar& x) { return x.get_str(); }

bool is_integer(const Scalar& x) { return x.get_den() == 1; }

Scalar exact_sqrt(const Scalar& x) {
  if (sgn(x) < 0) throw Error("exact_sqrt of negative " + x.get_str());
  mpz_class n = x.get_num(), d = x.get_den();
  mpz_class rn = sqrt(n), rd = sqrt(d);
  if (rn * rn != n || rd * rd != d) throw Error("not a rational square: " + x.get_str());
  Scalar r(rn, rd);
  r.canonicalize();
  return r;
}

Weight::Weight(std::initializer_list<long> coords) {
  for (long v : coords) c.emplace_back(v);
}

bool Weight::is_zero() const {
  for (const auto& x : c)
    if (x != 0) return false;
  return true;
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  return *this;
}

Weight operator-(Weight a) {
  for (auto& x : a.c) x = -x;
  return a;
}

Weight operator*(const Scalar& s, Weight a) {
  for (auto& x : a.c) x *= s;
  return a;
}

std::string to_string(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += w[i].get_str();
  }
  return out + ")";
}

std::vector<std::string> to_strings(const Weight& w) {
  std::vector<std::string> out;
  for (const auto& x : w.c) out.push_back(x.get_str());
  return out;
}

}  // namespace cdirac
