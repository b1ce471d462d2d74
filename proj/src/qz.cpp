#include "brauer/qz.hpp"

#include <cctype>
#include <ostream>

namespace brauer {

namespace {

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

Int parse_int(std::string_view s, std::string_view what) {
  s = trimmed(s);
  bool ok = !s.empty();
  for (size_t i = 0; ok && i < s.size(); ++i) {
    char c = s[i];
    ok = (c >= '0' && c <= '9') || (i == 0 && (c == '-' || c == '+'));
  }
  if (!ok || s == "-" || s == "+") {
    throw std::invalid_argument("Invariant::parse: bad " + std::string(what) +
                                " in \"" + std::string(s) + "\"");
  }
  return Int(std::string(s));
}

}  // namespace

Invariant::Invariant(Int num, Int den) {
  if (den == 0) {
    throw std::invalid_argument("Invariant: denominator must be nonzero");
  }
  if (den < 0) {
    den = -den;
    num = -num;
  }
  num %= den;
  if (num < 0) num += den;
  Int g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Invariant Invariant::parse(std::string_view text) {
  text = trimmed(text);
  size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Invariant(parse_int(text, "integer"), 1);
  }
  if (text.find('/', slash + 1) != std::string_view::npos) {
    throw std::invalid_argument("Invariant::parse: more than one '/' in \"" +
                                std::string(text) + "\"");
  }
  return Invariant(parse_int(text.substr(0, slash), "numerator"),
                   parse_int(text.substr(slash + 1), "denominator"));
}

std::string Invariant::str() const {
  return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Invariant& a) {
  return os << a.str();
}

Invariant add(const Invariant& a, const Invariant& b) {
  return Invariant(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

Invariant negate(const Invariant& a) {
  return Invariant(-a.num(), a.den());
}

Invariant scale(const Invariant& a, const Int& n) {
  return Invariant(a.num() * n, a.den());
}

Int order(const Invariant& a) {
  return a.den();
}

bool same_cyclic_subgroup(const Invariant& a, const Invariant& b) {
  return a.den() == b.den();
}

Invariant primary_part(const Invariant& a, const Int& p) {
  if (!is_prime(p)) {
    throw std::domain_error("primary_part: p = " + p.str() + " is not prime");
  }
  unsigned e = valuation(a.den(), p);
  if (e == 0) return Invariant{};
  Int pe = pow_int(p, e);
  Int m = a.den() / pe;
  // CRT splitting of num/(m * p^e): the p-primary component is x/p^e with
  // x = num * m^{-1} mod p^e.
  Int x = (a.num() * mod_inverse(m, pe)) % pe;
  return Invariant(x, pe);
}

}  // namespace brauer
