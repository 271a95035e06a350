#include "ace/nt.hpp"

#include "ace/errors.hpp"

namespace ace::nt {

bool is_probable_prime(const mpz_class& n, int rounds) {
    return mpz_probab_prime_p(n.get_mpz_t(), rounds) != 0;
}

mpz_class next_prime(const mpz_class& n) {
    mpz_class r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

mpz_class powm(const mpz_class& b, const mpz_class& e, const mpz_class& m) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

mpz_class invert(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw CryptoError("invert: value has no inverse modulo m");
    return r;
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

size_t bit_length(const mpz_class& n) {
    if (n == 0) return 0;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

mpz_class random_prime(unsigned bits, Rng& rng, unsigned max_attempts) {
    if (bits < 2) throw UsageError("random_prime: need at least 2 bits");
    mpz_class low = mpz_class(1) << (bits - 1);
    mpz_class span = low;  // [2^(bits-1), 2^bits)
    for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
        mpz_class cand = low + rng.below(span);
        mpz_setbit(cand.get_mpz_t(), 0);
        if (is_probable_prime(cand)) return cand;
    }
    throw CryptoError("random_prime: search exhausted");
}

std::vector<uint8_t> to_bytes_be(const mpz_class& n, size_t width) {
    if (n < 0) throw UsageError("to_bytes_be: negative value");
    size_t need = n == 0 ? 0 : (bit_length(n) + 7) / 8;
    if (need > width) throw UsageError("to_bytes_be: value does not fit width");
    std::vector<uint8_t> out(width, 0);
    if (n != 0) {
        size_t count = 0;
        mpz_export(out.data() + (width - need), &count, 1, 1, 1, 0, n.get_mpz_t());
    }
    return out;
}

mpz_class from_bytes_be(std::span<const uint8_t> bytes) {
    mpz_class v;
    if (!bytes.empty())
        mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
    return v;
}

}  // namespace ace::nt
