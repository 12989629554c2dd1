#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace tau {

using Int = mpz_class;

// All primes <= limit, ascending.
std::vector<uint64_t> primes_up_to(uint64_t limit);

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(uint64_t n);

// GMP probable-prime test. "Composite" verdicts are exact; "prime" verdicts
// carry error probability < 4^-40.
bool is_probable_prime(const Int& n);

Int int_pow(uint64_t base, unsigned long exp);
Int int_pow(const Int& base, unsigned long exp);

// (base^exp) mod m without overflow; m must be < 2^32 so products fit in 64 bits.
uint64_t pow_mod_u64(uint64_t base, uint64_t exp, uint64_t m);

}  // namespace tau
