#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace pf {

// Exact arithmetic lives on GMP. Rat is always canonical: reduced, den > 0,
// zero stored as 0/1 (mpq_class guarantees this after canonicalize()).
using Int = mpz_class;
using Rat = mpq_class;

Int int_pow(const Int& base, unsigned long e);
Int int_pow(long base, unsigned long e);

// base^e with e possibly negative; base must be nonzero when e < 0.
Rat rat_pow(const Rat& base, long e);

// Canonicalized num/den (mpq_class's two-argument constructor does not reduce).
Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den);

Int binom(long n, long k);  // zero outside 0 <= k <= n
Int factorial(unsigned long n);
Int multinomial(long n, const std::vector<int>& parts);  // n!/prod(parts!)

// Canonical string form "num/den" (den always present, e.g. "2/1", "-1/3").
std::string rat_str(const Rat& r);
Rat rat_parse(const std::string& s);  // accepts "num" or "num/den"

}  // namespace pf
