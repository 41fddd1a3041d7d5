#include "zeta_rpa/numbers.hpp"

#include <cctype>

#include "zeta_rpa/errors.hpp"

namespace zeta_rpa {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ZeroDenominator("rational with zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigRational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const BigInt& x) { return x.get_str(); }

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) throw ParseError("empty number in '" + std::string(whole) + "'");
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') ++i;
  if (i == text.size()) throw ParseError("missing digits in '" + std::string(whole) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ParseError("not an exact rational: '" + std::string(whole) + "'");
    }
  }
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part[0] == '-';
    if (!int_part.empty() && (int_part[0] == '-' || int_part[0] == '+')) int_part.remove_prefix(1);
    if (int_part.empty() && frac_part.empty()) {
      throw ParseError("not a number: '" + std::string(text) + "'");
    }
    std::string digits = std::string(int_part.empty() ? "0" : int_part) + std::string(frac_part);
    BigInt num = parse_integer(digits, text);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
    return make_rational(negative ? BigInt(-num) : num, den);
  }
  return BigRational(parse_integer(text, text));
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  BigInt r;
  BigInt top(n);
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

BigRational binomial(const BigRational& top, long k) {
  if (k < 0) return 0;
  BigRational r = 1;
  for (long i = 0; i < k; ++i) r *= top - i;
  r /= BigRational(factorial(static_cast<unsigned long>(k)));
  return r;
}

}  // namespace zeta_rpa
