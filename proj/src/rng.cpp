#include "ace/rng.hpp"

#include <cstring>
#include <random>

#include "ace/errors.hpp"

namespace ace {

namespace {

inline uint32_t rotl32(uint32_t v, int c) { return (v << c) | (v >> (32 - c)); }

inline void quarter_round(uint32_t& a, uint32_t& b, uint32_t& c, uint32_t& d) {
    a += b; d ^= a; d = rotl32(d, 16);
    c += d; b ^= c; b = rotl32(b, 12);
    a += b; d ^= a; d = rotl32(d, 8);
    c += d; b ^= c; b = rotl32(b, 7);
}

// "expand 32-byte k"
constexpr uint32_t kSigma[4] = {0x61707865, 0x3320646e, 0x79622d32, 0x6b206574};

void chacha20_block(const std::array<uint32_t, 16>& in, uint8_t out[64]) {
    uint32_t x[16];
    for (int i = 0; i < 16; ++i) x[i] = in[i];
    for (int round = 0; round < 10; ++round) {
        quarter_round(x[0], x[4], x[8], x[12]);
        quarter_round(x[1], x[5], x[9], x[13]);
        quarter_round(x[2], x[6], x[10], x[14]);
        quarter_round(x[3], x[7], x[11], x[15]);
        quarter_round(x[0], x[5], x[10], x[15]);
        quarter_round(x[1], x[6], x[11], x[12]);
        quarter_round(x[2], x[7], x[8], x[13]);
        quarter_round(x[3], x[4], x[9], x[14]);
    }
    for (int i = 0; i < 16; ++i) {
        uint32_t v = x[i] + in[i];
        out[4 * i + 0] = static_cast<uint8_t>(v);
        out[4 * i + 1] = static_cast<uint8_t>(v >> 8);
        out[4 * i + 2] = static_cast<uint8_t>(v >> 16);
        out[4 * i + 3] = static_cast<uint8_t>(v >> 24);
    }
}

inline uint64_t splitmix64(uint64_t& s) {
    uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(uint64_t seed) {
    std::array<uint8_t, 32> key{};
    uint64_t s = seed;
    for (int i = 0; i < 4; ++i) {
        uint64_t w = splitmix64(s);
        for (int b = 0; b < 8; ++b) key[8 * i + b] = static_cast<uint8_t>(w >> (8 * b));
    }
    *this = Rng(key);
}

Rng::Rng(const std::array<uint8_t, 32>& key) : pos_(64) {
    for (int i = 0; i < 4; ++i) state_[i] = kSigma[i];
    for (int i = 0; i < 8; ++i) {
        state_[4 + i] = static_cast<uint32_t>(key[4 * i]) |
                        static_cast<uint32_t>(key[4 * i + 1]) << 8 |
                        static_cast<uint32_t>(key[4 * i + 2]) << 16 |
                        static_cast<uint32_t>(key[4 * i + 3]) << 24;
    }
    state_[12] = 0;  // block counter
    state_[13] = 0;  // nonce (spills from the counter on overflow)
    state_[14] = 0;
    state_[15] = 0;
}

Rng Rng::from_os() {
    std::random_device rd;
    std::array<uint8_t, 32> key;
    for (size_t i = 0; i < key.size(); i += 4) {
        uint32_t w = rd();
        key[i] = static_cast<uint8_t>(w);
        key[i + 1] = static_cast<uint8_t>(w >> 8);
        key[i + 2] = static_cast<uint8_t>(w >> 16);
        key[i + 3] = static_cast<uint8_t>(w >> 24);
    }
    return Rng(key);
}

void Rng::refill() {
    chacha20_block(state_, block_.data());
    if (++state_[12] == 0) ++state_[13];
    pos_ = 0;
}

void Rng::fill(uint8_t* out, size_t len) {
    while (len > 0) {
        if (pos_ == 64) refill();
        size_t take = std::min(len, 64 - pos_);
        std::memcpy(out, block_.data() + pos_, take);
        pos_ += take;
        out += take;
        len -= take;
    }
}

uint64_t Rng::next_u64() {
    uint8_t b[8];
    fill(b, 8);
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
    return v;
}

bool Rng::coin() {
    uint8_t b;
    fill(&b, 1);
    return (b & 1) != 0;
}

uint64_t Rng::below_u64(uint64_t bound) {
    if (bound == 0) throw UsageError("below_u64: bound must be positive");
    // Rejection from the largest multiple of bound.
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        uint64_t v = next_u64();
        if (v < limit) return v % bound;
    }
}

mpz_class Rng::below(const mpz_class& bound) {
    if (bound <= 0) throw UsageError("below: bound must be positive");
    size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    size_t nbytes = (bits + 7) / 8;
    unsigned top_mask = (bits % 8 == 0) ? 0xff : ((1u << (bits % 8)) - 1);
    std::vector<uint8_t> buf(nbytes);
    mpz_class v;
    for (;;) {
        fill(buf.data(), buf.size());
        buf[0] &= static_cast<uint8_t>(top_mask);
        mpz_import(v.get_mpz_t(), buf.size(), 1, 1, 1, 0, buf.data());
        if (v < bound) return v;
    }
}

mpz_class Rng::unit_below(const mpz_class& n) {
    if (n <= 1) throw UsageError("unit_below: modulus must exceed 1");
    mpz_class v, g;
    for (;;) {
        v = below(n);
        mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        if (g == 1) return v;
    }
}

Rng Rng::fork() {
    std::array<uint8_t, 32> key;
    fill(key.data(), key.size());
    return Rng(key);
}

}  // namespace ace
