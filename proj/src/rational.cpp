#include "onebit/rational.hpp"

#include <stdexcept>

#include "onebit/errors.hpp"

namespace onebit {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + s);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Integer floor_rational(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Integer ceil_rational(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

long floor_long(const Rational& x) { return floor_rational(x).get_si(); }
long ceil_long(const Rational& x) { return ceil_rational(x).get_si(); }

Integer floor_sqrt(const Rational& x) {
  if (sgn(x) < 0) throw std::invalid_argument("floor_sqrt of a negative value");
  Integer c;
  mpz_sqrt(c.get_mpz_t(), floor_rational(x).get_mpz_t());
  // adjust for the rational part: want the largest c with c*c*den <= num
  while (Integer((c + 1) * (c + 1)) * x.get_den() <= x.get_num()) ++c;
  while (c > 0 && Integer(c * c) * x.get_den() > x.get_num()) --c;
  return c;
}

Integer ceil_sqrt(const Rational& x) {
  Integer c = floor_sqrt(x);
  if (Integer(c * c) * x.get_den() == x.get_num()) return c;
  return c + 1;
}

Rational pow_checked(const Rational& base, unsigned long exp,
                     std::size_t max_bits) {
  if (exp == 0) return Rational(1);
  const std::size_t num_bits = mpz_sizeinbase(base.get_num().get_mpz_t(), 2);
  const std::size_t den_bits = mpz_sizeinbase(base.get_den().get_mpz_t(), 2);
  if (exp * std::max(num_bits, den_bits) > max_bits)
    throw InstanceTooLarge("power-row value would exceed " +
                           std::to_string(max_bits) + " bits");
  Rational r;
  mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), exp);
  mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), exp);
  r.canonicalize();
  return r;
}

}  // namespace onebit
