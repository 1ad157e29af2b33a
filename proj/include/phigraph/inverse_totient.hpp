#pragma once

// Complete enumeration of phi preimages: all n with phi(n) = m.

#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "phigraph/totient.hpp"

namespace phigraph {

struct PreimageSet {
    u64 target = 0;
    std::vector<u64> solutions;  // ascending, duplicate-free
};

namespace detail {

struct InvPhiSearch {
    std::vector<u64> primes;  // candidate primes p with (p-1) | m, ascending
    std::vector<u64> out;

    // Extend the partial product using primes[i..], each at most once.
    // A completed product (rem == 1) is emitted but the scan goes on:
    // the factor 2 contributes phi = 1 and can still extend it.
    void dfs(std::size_t i, u64 rem, u64 prod) {
        if (rem == 1) out.push_back(prod);
        for (std::size_t j = i; j < primes.size(); ++j) {
            u64 p = primes[j];
            if (p - 1 > rem) break;
            if (rem % (p - 1) != 0) continue;
            u64 phi_pk = p - 1;  // phi(p^k), starting at k = 1
            u128 pk = p;
            for (;;) {
                if (rem % phi_pk == 0) {
                    u128 next = u128(prod) * pk;
                    if (next <= u128(UINT64_MAX))
                        dfs(j + 1, rem / phi_pk, static_cast<u64>(next));
                }
                if (phi_pk > rem / p) break;
                phi_pk *= p;
                pk *= p;
            }
        }
    }
};

} // namespace detail

// Every n with phi(n) = m, built from prime powers p^k whose phi values
// multiply to m. Candidate primes are the p with (p-1) | m; distinct
// primes have coprime contributions, so each solution is produced once.
inline PreimageSet inverse_totient(u64 m) {
    if (m == 0) throw std::domain_error("inverse_totient: target must be positive");
    if (m >= (u64(1) << 32)) throw std::domain_error("inverse_totient: target must be below 2^32");
    PreimageSet result;
    result.target = m;
    if (m > 1 && m % 2 != 0) return result;  // phi(n) is even for n > 2
    detail::InvPhiSearch search;
    for (u64 d : divisors(factorize(m)))
        if (is_prime(d + 1)) search.primes.push_back(d + 1);
    search.dfs(0, m, 1);
    std::sort(search.out.begin(), search.out.end());
    result.solutions = std::move(search.out);
    return result;
}

inline bool is_nontotient(u64 m) { return inverse_totient(m).solutions.empty(); }

namespace detail {

inline constexpr u64 kBruteSieveCap = u64(1) << 24;

// Shared, lazily grown phi table for brute-force scans. Readers take a
// snapshot; a request beyond the current size rebuilds under the lock.
inline std::shared_ptr<const std::vector<std::uint32_t>> brute_phi_snapshot(u64 upto) {
    static std::mutex mu;
    static std::shared_ptr<const std::vector<std::uint32_t>> current;
    std::lock_guard<std::mutex> lock(mu);
    if (!current || current->size() <= upto) {
        std::size_t size = std::max<std::size_t>(upto + 1, current ? current->size() * 2 : 0);
        current = std::make_shared<const std::vector<std::uint32_t>>(sieve_phi(size - 1));
    }
    return current;
}

} // namespace detail

// Reference implementation: scan 1..bound and keep every n with phi(n) = m.
// Agrees with inverse_totient whenever bound covers the largest solution;
// 2m^2 + 10 always does, since phi(n) > sqrt(n/2) for n > 6.
inline PreimageSet inverse_totient_brute(u64 m, u64 bound) {
    if (m == 0) throw std::domain_error("inverse_totient_brute: target must be positive");
    if (bound >= (u64(1) << 40)) throw std::domain_error("inverse_totient_brute: bound must be below 2^40");
    PreimageSet result;
    result.target = m;
    if (bound <= detail::kBruteSieveCap) {
        auto phi = detail::brute_phi_snapshot(bound);
        for (u64 n = 1; n <= bound; ++n)
            if ((*phi)[n] == m) result.solutions.push_back(n);
    } else {
        for (u64 n = 1; n <= bound; ++n)
            if (totient(n) == m) result.solutions.push_back(n);
    }
    return result;
}

} // namespace phigraph
