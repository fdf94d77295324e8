#include "combinach/rational.hpp"

#include <cctype>

#include "combinach/errors.hpp"

namespace combinach {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) {
      throw validation_error("bad rational: '" + text + "'");
    }
    return Rational(mpz_class(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw validation_error("bad rational: '" + text + "'");
  }
  mpz_class d(den);
  if (d == 0) throw validation_error("zero denominator: '" + text + "'");
  Rational r(mpz_class(num), d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  Rational r = value;
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string decimal_approx(const Rational& value, int digits) {
  Rational r = value;
  r.canonicalize();
  const bool negative = r < 0;
  if (negative) r = -r;
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round half away from zero
  mpz_class scaled_num = r.get_num() * scale * 2 + r.get_den();
  mpz_class q = scaled_num / (r.get_den() * 2);
  mpz_class whole = q / scale;
  mpz_class frac = q % scale;
  std::string f = frac.get_str();
  if ((int)f.size() < digits) f = std::string(digits - f.size(), '0') + f;
  std::string out = whole.get_str();
  if (digits > 0) out += "." + f;
  if (negative && (whole != 0 || frac != 0)) out = "-" + out;
  return out;
}

}  // namespace combinach
