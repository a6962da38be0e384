#include "bigint.hpp"

#include <cctype>
#include <stdexcept>

namespace uif {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(std::uint64_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt int_pow(const BigInt& base, std::uint64_t exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return r;
}

std::uint32_t ceil_sqrt(std::uint64_t k) {
  std::uint64_t r = 0;
  while (r * r < k) ++r;
  return static_cast<std::uint32_t>(r);
}

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  BigRat q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_str(const BigRat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<BigRat> parse_rat(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::string text(s);
  auto slash = text.find('/');
  auto dot = text.find('.');
  try {
    if (slash != std::string::npos) {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) return std::nullopt;
      return make_rat(num, den);
    }
    if (dot != std::string::npos) {
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      std::size_t frac_len = text.size() - dot - 1;
      if (digits.empty() || digits == "-" || digits == "+") return std::nullopt;
      BigInt num(digits);
      return make_rat(num, int_pow(BigInt(10), frac_len));
    }
    return make_rat(BigInt(text), 1);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace uif
