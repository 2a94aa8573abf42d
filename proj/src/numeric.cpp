#include "icox/numeric.hpp"

#include <cctype>
#include <cstdlib>

namespace icox {

namespace {

bool is_plain_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw DomainError("empty rational literal");

  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string n = text.substr(0, slash), d = text.substr(slash + 1);
    if (!is_plain_integer(n) || !is_plain_integer(d))
      throw DomainError("bad rational literal: " + text);
    return make_rat(Int(n), Int(d));
  }

  // [sign] digits [. digits] [e [sign] digits]
  std::string s = text;
  bool neg = false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') {
    neg = s[i] == '-';
    ++i;
  }
  std::string digits;
  long frac_digits = 0;
  long exponent = 0;
  bool any = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    digits += s[i++];
    any = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digits += s[i++];
      ++frac_digits;
      any = true;
    }
  }
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    std::string e;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) e += s[i++];
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e += s[i++];
    if (e.empty() || e == "+" || e == "-")
      throw DomainError("bad rational literal: " + text);
    exponent = std::strtol(e.c_str(), nullptr, 10);
  }
  if (!any || i != s.size()) throw DomainError("bad rational literal: " + text);

  Int num(digits.empty() ? "0" : digits);
  Int den = 1;
  long shift = exponent - frac_digits;
  Int ten = 10;
  if (shift >= 0) {
    Int p;
    mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(shift));
    num *= p;
  } else {
    mpz_pow_ui(den.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-shift));
  }
  Rat r = make_rat(num, den);
  if (neg) r = -r;
  return r;
}

std::string rat_str(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double rat_to_double(const Rat& r) { return r.get_d(); }

std::string RatInterval::str() const {
  if (exact()) return rat_str(lo) + " (exact)";
  return "[" + rat_str(lo) + ", " + rat_str(hi) + "]";
}

}  // namespace icox
