#include "parkfn/rational.hpp"

#include <stdexcept>

namespace pf {

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int int_pow(long base, unsigned long e) { return int_pow(Int(base), e); }

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("rat_pow: 0 to a negative power");
    return Rat(0);
  }
  Rat r;
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), a);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), a);
  if (e < 0) r = 1 / r;
  r.canonicalize();
  return r;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

Int binom(long n, long k) {
  if (k < 0 || k > n || n < 0) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int multinomial(long n, const std::vector<int>& parts) {
  long sum = 0;
  for (int p : parts) {
    if (p < 0) return Int(0);
    sum += p;
  }
  if (sum != n) return Int(0);
  Int r = factorial(static_cast<unsigned long>(n));
  for (int p : parts) r /= factorial(static_cast<unsigned long>(p));
  return r;
}

std::string rat_str(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("rat_parse: zero denominator");
  r.canonicalize();
  return r;
}

}  // namespace pf
