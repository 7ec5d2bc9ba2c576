#pragma once

#include <cstdint>
#include <vector>

namespace frobwitt {

/// splitmix64: tiny deterministic generator.  We use it everywhere instead of
/// std::uniform_int_distribution so that seeded runs are bit-identical across
/// compilers and platforms.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, bound).  Plain modulo; the tiny bias is
    /// irrelevant for property sampling and keeps the stream portable.
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

    /// Derive an independent stream (used to fan trials across workers while
    /// keeping results independent of the worker count).
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 g(seed ^ (0x6a09e667f3bcc909ULL + index * 0x9e3779b97f4a7c15ULL));
        return g.next();
    }

  private:
    std::uint64_t state_;
};

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t pow_u64(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    unsigned __int128 r = 1, b = base % mod;
    while (exp) {
        if (exp & 1) r = r * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

/// Binomial coefficient as unsigned 64-bit; callers keep arguments small.
inline std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

} // namespace frobwitt
