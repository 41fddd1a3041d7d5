#include "zeta_rpa/ratfunc.hpp"

namespace zeta_rpa {

RatFunc::RatFunc(PolyQ num, PolyQ den) {
  if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = PolyQ::constant(1);
    return;
  }
  PolyQ g = gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  BigRational lead = den.leading();
  num_ = num / lead;
  den_ = den / lead;
}

RatFunc ratfunc_normalize(const PolyQ& num, const PolyQ& den) { return RatFunc(num, den); }

BigRational RatFunc::eval(const BigRational& s) const {
  BigRational d = eval_q(den_, s);
  if (sgn(d) == 0) throw ZeroDenominator("rational function evaluated at a pole");
  BigRational n = eval_q(num_, s);
  return n / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a) {
  RatFunc r;
  r.num_ = -a.num_;
  r.den_ = a.den_;
  return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw ZeroDenominator("division by the zero rational function");
  if (a.is_zero()) return RatFunc();
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string to_string(const RatFunc& f) {
  if (f.den().degree() == 0) return "(" + to_string(f.num(), "s") + ")";
  return "(" + to_string(f.num(), "s") + ")/(" + to_string(f.den(), "s") + ")";
}

}  // namespace zeta_rpa
