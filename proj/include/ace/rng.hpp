#ifndef ACE_RNG_HPP_
#define ACE_RNG_HPP_

#include <array>
#include <cstdint>
#include <cstddef>

#include <gmpxx.h>

namespace ace {

/*
 * Deterministic random generator backed by the ChaCha20 block function
 * (RFC 8439). Every piece of randomness in the library flows through an
 * injected Rng so that seeded runs are reproducible byte for byte across
 * platforms; production entropy comes from Rng::from_os().
 */
class Rng {
public:
    explicit Rng(uint64_t seed);
    explicit Rng(const std::array<uint8_t, 32>& key);

    // Seeded from the operating system entropy pool.
    static Rng from_os();

    uint64_t next_u64();
    void fill(uint8_t* out, size_t len);
    bool coin();

    // Uniform integer in [0, bound), bound > 0. Rejection sampling.
    uint64_t below_u64(uint64_t bound);
    mpz_class below(const mpz_class& bound);

    // Uniform element of Z*_n (invertible residues mod n), n > 1.
    mpz_class unit_below(const mpz_class& n);

    // Independent child stream keyed from this stream's output.
    Rng fork();

private:
    std::array<uint32_t, 16> state_;
    std::array<uint8_t, 64> block_;
    size_t pos_;  // bytes of block_ already consumed

    void refill();
};

}  // namespace ace

#endif  // ACE_RNG_HPP_
