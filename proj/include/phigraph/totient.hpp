#pragma once

// Euler phi, deterministic 64-bit factorization and the iterated-totient
// quantities built on top of it (iteration length R, cumulative sum Phi,
// perfect totient numbers).

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

namespace phigraph {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

namespace detail {

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 mod) {
    u64 r = mod > 1 ? 1 : 0;
    base %= mod;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

inline u64 checked_mul(u64 a, u64 b) {
    u128 p = u128(a) * b;
    if (p > u128(UINT64_MAX)) throw std::overflow_error("product exceeds 64 bits");
    return static_cast<u64>(p);
}

} // namespace detail

// Deterministic Miller-Rabin. The twelve smallest primes are a proven base
// set for every n below 3.3e24, which covers the whole 64-bit range.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

struct PrimePower {
    u64 prime;
    unsigned exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime factorization with primes in strictly increasing order.
struct Factorization {
    u64 n = 1;
    std::vector<PrimePower> factors;
};

namespace detail {

inline constexpr u64 kTrialLimit = 1'000'000;

// Brent's cycle-finding variant of Pollard rho with batched gcds.
// Parameters come from a fixed-seed generator keyed on n, so repeated
// runs split the same number the same way.
inline u64 pollard_brent(u64 n) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ n);
    for (;;) {
        u64 c = rng() % (n - 1) + 1;
        u64 y = rng() % n;
        u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            for (u64 k = 0; k < r && g == 1; k += 128) {
                ys = y;
                u64 lim = std::min<u64>(128, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            do {
                ys = (mulmod(ys, ys, n) + c) % n;
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

inline void factor_into(u64 n, std::vector<u64>& primes) {
    if (n == 1) return;
    if (is_prime(n)) { primes.push_back(n); return; }
    u64 d = pollard_brent(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

} // namespace detail

inline Factorization factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: argument must be positive");
    Factorization f;
    f.n = n;
    u64 rest = n;
    auto strip = [&](u64 p) {
        if (rest % p) return;
        unsigned e = 0;
        while (rest % p == 0) { rest /= p; ++e; }
        f.factors.push_back({p, e});
    };
    strip(2);
    strip(3);
    strip(5);
    for (u64 p = 7; p <= detail::kTrialLimit && p * p <= rest;) {
        // wheel mod 30
        for (u64 step : {4ull, 2ull, 4ull, 2ull, 4ull, 6ull, 2ull, 6ull}) {
            strip(p);
            p += step;
        }
    }
    if (rest > 1) {
        if (is_prime(rest)) {
            f.factors.push_back({rest, 1});
        } else {
            // every remaining prime exceeds the trial bound, so sorted
            // rho output extends the ascending factor list
            std::vector<u64> primes;
            detail::factor_into(rest, primes);
            std::sort(primes.begin(), primes.end());
            for (std::size_t i = 0; i < primes.size();) {
                std::size_t j = i;
                while (j < primes.size() && primes[j] == primes[i]) ++j;
                f.factors.push_back({primes[i], static_cast<unsigned>(j - i)});
                i = j;
            }
        }
    }
    return f;
}

// Sorted list of all divisors.
inline std::vector<u64> divisors(const Factorization& f) {
    std::vector<u64> divs{1};
    for (const auto& [p, e] : f.factors) {
        std::size_t count = divs.size();
        u64 pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk = detail::checked_mul(pk, p);
            for (std::size_t j = 0; j < count; ++j)
                divs.push_back(detail::checked_mul(divs[j], pk));
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

namespace detail {

inline constexpr std::size_t kPhiTableSize = 1u << 20;

// Linear sieve of phi over [0, n]; table[0] is unused and set to 0.
inline std::vector<std::uint32_t> sieve_phi(std::size_t n) {
    std::vector<std::uint32_t> phi(n + 1, 0);
    std::vector<std::uint32_t> primes;
    if (n >= 1) phi[1] = 1;
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (phi[i] == 0) {
            phi[i] = i - 1;
            primes.push_back(i);
        }
        for (std::uint32_t p : primes) {
            u64 ip = u64(i) * p;
            if (ip > n) break;
            if (i % p == 0) {
                phi[ip] = phi[i] * p;
                break;
            }
            phi[ip] = phi[i] * (p - 1);
        }
    }
    return phi;
}

inline const std::vector<std::uint32_t>& phi_table() {
    static std::vector<std::uint32_t> table;
    static std::once_flag flag;
    std::call_once(flag, [] { table = sieve_phi(kPhiTableSize - 1); });
    return table;
}

} // namespace detail

inline u64 totient(u64 n) {
    if (n == 0) throw std::invalid_argument("totient: argument must be positive");
    if (n < detail::kPhiTableSize) return detail::phi_table()[n];
    u64 result = n;
    for (const auto& [p, e] : factorize(n).factors) result -= result / p;
    return result;
}

// phi applied k times; once the orbit reaches 1 it stays there.
inline u64 iterate_totient(u64 n, u64 k) {
    if (n == 0) throw std::invalid_argument("iterate_totient: argument must be positive");
    u64 v = n;
    for (u64 i = 0; i < k && v != 1; ++i) v = totient(v);
    return v;
}

// The full orbit n, phi(n), phi(phi(n)), ..., 1.
struct TotientChain {
    u64 origin = 1;
    std::vector<u64> values;  // values[0] == origin, back() == 1
    u64 steps = 0;            // iteration length R(origin)
    u64 phi_sum = 0;          // Phi(origin) = sum of values[1..]
};

inline TotientChain chain(u64 n) {
    if (n == 0) throw std::invalid_argument("chain: argument must be positive");
    TotientChain c;
    c.origin = n;
    c.values.push_back(n);
    u64 v = n;
    while (v != 1) {
        v = totient(v);
        c.values.push_back(v);
        c.phi_sum += v;
        ++c.steps;
    }
    return c;
}

// R(n): number of phi applications needed to reach 1. R(1) = 0.
inline u64 iteration_length(u64 n) { return chain(n).steps; }

// Phi(n) = phi(n) + phi^2(n) + ... + 1. Phi(1) = 0.
inline u64 totient_sum(u64 n) { return chain(n).phi_sum; }

inline bool is_perfect_totient(u64 n) {
    if (n < 2) throw std::domain_error("is_perfect_totient: argument must be at least 2");
    return totient_sum(n) == n;
}

inline std::vector<u64> perfect_totient_numbers_upto(u64 limit) {
    std::vector<u64> out;
    for (u64 n = 2; n <= limit; ++n)
        if (totient_sum(n) == n) out.push_back(n);
    return out;
}

// Gauss: sum of phi(d) over the divisors d of n equals n. Computed the
// direct way so it can serve as a cross-check of phi itself.
inline u64 divisor_totient_sum(u64 n) {
    u64 sum = 0;
    for (u64 d : divisors(factorize(n))) sum += totient(d);
    return sum;
}

} // namespace phigraph
