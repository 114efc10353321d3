#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mordell {

using Int = mpz_class;
using Rat = mpq_class;

// Prime factorization by trial division plus Pollard rho.  Input may be
// negative or zero; the sign is dropped and 0/1 yield an empty map.
std::map<Int, unsigned> factorize(const Int& n);

// All positive divisors, unsorted order not guaranteed beyond determinism.
std::vector<Int> divisors(const Int& n);

bool is_prime(const Int& n);

// Least prime strictly greater than n.
Int next_prime_above(const Int& n);

// Exact k-th root of an integer if it is a perfect k-th power (sign-aware:
// negative n is accepted only for odd k).
std::optional<Int> perfect_kth_root(const Int& n, unsigned k);

// Exact k-th root of a rational, if one exists in Q.
std::optional<Rat> rational_kth_root(const Rat& q, unsigned k);

// c = c1 * t^6 with c1 a sixth-power-free integer carrying the sign of c
// and t > 0 rational.  Throws std::invalid_argument on c = 0.
struct SixthPowerFree {
  Int c1;
  Rat t;
};
SixthPowerFree sixth_power_free(const Rat& c);

bool is_sixth_power_free(const Int& n);

std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

}  // namespace mordell
