#include "zeta_rpa/pade.hpp"

namespace zeta_rpa {

BigRational MomentFunctional::apply(const PolyQ& p) const {
  BigRational acc = 0;
  for (int j = 0; j <= p.degree(); ++j) {
    const BigRational& c = p.coeffs()[static_cast<std::size_t>(j)];
    if (sgn(c) != 0) acc += c * moment(j);
  }
  return acc;
}

PolyQ orth_poly_determinant(const MomentFunctional& fun, const std::vector<PolyQ>& basis, int n,
                            const Normalization& norm) {
  if (n < 0 || static_cast<int>(basis.size()) < n + 1) {
    throw InvalidArgument("orth_poly_determinant: basis must hold e_0..e_n");
  }
  auto un = static_cast<std::size_t>(n);
  Matrix<BigRational> alpha(un, std::vector<BigRational>(un + 1));
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = 0; j <= un; ++j) alpha[i][j] = fun.apply(basis[i] * basis[j]);
  }
  // Cofactor expansion along the polynomial row.
  PolyQ result;
  for (std::size_t j = 0; j <= un; ++j) {
    Matrix<BigRational> minor(un, std::vector<BigRational>());
    for (std::size_t i = 0; i < un; ++i) {
      for (std::size_t k = 0; k <= un; ++k) {
        if (k != j) minor[i].push_back(alpha[i][k]);
      }
    }
    BigRational d = determinant(std::move(minor));
    if (j == un && sgn(d) == 0) throw ZeroDeterminant("orth_poly_determinant: vanishing Hankel minor");
    if ((un + j) % 2 == 1) d = -d;
    result += basis[j] * d;
  }
  BigRational current =
      norm.kind == Normalization::Kind::Leading ? result.leading() : eval_q(result, norm.point);
  if (sgn(current) == 0) throw ZeroDeterminant("orth_poly_determinant: normalization point is a root");
  BigRational scale = norm.value / current;
  return result * scale;
}

PolyQ associated_poly(const MomentFunctional& fun, const PolyQ& p) {
  // (x^j - t^j)/(x - t) = sum_{i<j} x^i t^{j-1-i}
  int d = p.degree();
  if (d <= 0) return {};
  std::vector<BigRational> mu(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) mu[static_cast<std::size_t>(i)] = fun.moment(i);
  std::vector<BigRational> r(static_cast<std::size_t>(d), BigRational(0));
  for (int j = 1; j <= d; ++j) {
    const BigRational& pj = p.coeffs()[static_cast<std::size_t>(j)];
    if (sgn(pj) == 0) continue;
    for (int k = 0; k < j; ++k) r[static_cast<std::size_t>(k)] += pj * mu[static_cast<std::size_t>(j - 1 - k)];
  }
  return PolyQ(std::move(r));
}

}  // namespace zeta_rpa
