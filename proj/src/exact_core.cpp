#include "zeta_rpa/exact_core.hpp"

#include <mutex>
#include <vector>

namespace zeta_rpa {

namespace {

std::mutex bernoulli_mutex;
std::vector<BigRational> bernoulli_table{BigRational(1)};

std::mutex lcm_mutex;
std::vector<BigInt> lcm_table{BigInt(1), BigInt(1)};  // index 0 unused

}  // namespace

BigRational bernoulli(int k) {
  if (k < 0) throw InvalidArgument("bernoulli: negative index");
  if (k > 1 && k % 2 == 1) return 0;
  std::lock_guard<std::mutex> lock(bernoulli_mutex);
  // sum_{j=0}^{n} C(n+1, j) B_j = 0  =>  B_n = -1/(n+1) sum_{j<n} C(n+1, j) B_j
  for (int n = static_cast<int>(bernoulli_table.size()); n <= k; ++n) {
    BigRational acc = 0;
    for (int j = 0; j < n; ++j) {
      if (j > 1 && j % 2 == 1) continue;
      acc += BigRational(binomial(n + 1, j)) * bernoulli_table[static_cast<std::size_t>(j)];
    }
    acc /= -(n + 1);
    bernoulli_table.push_back(acc);
  }
  return bernoulli_table[static_cast<std::size_t>(k)];
}

BigRational pochhammer(const BigRational& base, int k) {
  if (k < -1) throw InvalidArgument("pochhammer: k below -1");
  if (k == -1) {
    if (base == 1) throw PoleAtOne("(s)_{-1} at s = 1");
    BigRational d = base - 1;
    return 1 / d;
  }
  BigRational r = 1;
  for (int i = 0; i < k; ++i) r *= base + i;
  return r;
}

RatFunc pochhammer(const RatFunc& base, int k) {
  if (k < -1) throw InvalidArgument("pochhammer: k below -1");
  if (k == -1) return RatFunc(1) / (base - RatFunc(1));
  RatFunc r(1);
  for (int i = 0; i < k; ++i) r = r * (base + RatFunc(i));
  return r;
}

BigInt lcm_upto(int k) {
  if (k < 1) throw InvalidArgument("lcm_upto: k must be positive");
  std::lock_guard<std::mutex> lock(lcm_mutex);
  for (int n = static_cast<int>(lcm_table.size()); n <= k; ++n) {
    BigInt next;
    BigInt nn(n);
    mpz_lcm(next.get_mpz_t(), lcm_table.back().get_mpz_t(), nn.get_mpz_t());
    lcm_table.push_back(next);
  }
  return lcm_table[static_cast<std::size_t>(k)];
}

PolyQ binom_poly(int shift, int k) {
  if (k < 0) throw InvalidArgument("binom_poly: negative k");
  PolyQ r = PolyQ::constant(1);
  for (int i = 0; i < k; ++i) r *= PolyQ{BigRational(shift - i), BigRational(1)};
  return r / BigRational(factorial(static_cast<unsigned long>(k)));
}

}  // namespace zeta_rpa
