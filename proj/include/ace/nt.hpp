#ifndef ACE_NT_HPP_
#define ACE_NT_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "ace/rng.hpp"

namespace ace::nt {

// Miller-Rabin rounds used everywhere a primality decision is needed.
inline constexpr int kPrimalityRounds = 64;

bool is_probable_prime(const mpz_class& n, int rounds = kPrimalityRounds);
mpz_class next_prime(const mpz_class& n);

// b^e mod m, e >= 0.
mpz_class powm(const mpz_class& b, const mpz_class& e, const mpz_class& m);

// a^{-1} mod m; throws CryptoError when gcd(a, m) != 1.
mpz_class invert(const mpz_class& a, const mpz_class& m);

mpz_class gcd(const mpz_class& a, const mpz_class& b);
mpz_class lcm(const mpz_class& a, const mpz_class& b);

size_t bit_length(const mpz_class& n);  // bit_length(0) == 0

// Uniform prime with exactly `bits` bits (top bit set), bits >= 2.
mpz_class random_prime(unsigned bits, Rng& rng, unsigned max_attempts = 100000);

// Canonical big-endian encoding, fixed width. Throws UsageError when the
// value needs more than `width` bytes.
std::vector<uint8_t> to_bytes_be(const mpz_class& n, size_t width);
mpz_class from_bytes_be(std::span<const uint8_t> bytes);

}  // namespace ace::nt

#endif  // ACE_NT_HPP_
