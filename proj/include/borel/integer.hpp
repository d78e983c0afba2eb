#ifndef BOREL_INTEGER_HPP
#define BOREL_INTEGER_HPP

// Arbitrary-precision integer support plus the handful of number-theoretic
// helpers the rest of the library needs. Everything downstream treats Int as
// an opaque exact integer; no operation here ever rounds.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "borel/errors.hpp"

namespace borel {

using Int = boost::multiprecision::cpp_int;

inline Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

/// gcd with gcd(0,0) == 0, result always >= 0.
inline Int int_gcd(Int a, Int b) {
    a = int_abs(a);
    b = int_abs(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

/// Largest power of p dividing x (x != 0), together with the cofactor.
inline std::pair<int, Int> remove_prime_factor(Int x, const Int& p) {
    if (x == 0) throw internal_error("remove_prime_factor: zero argument");
    int mult = 0;
    while (x % p == 0) {
        x /= p;
        ++mult;
    }
    return {mult, x};
}

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) acc = mulmod_u64(acc, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return acc;
}

} // namespace detail

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

/// Strips every factor of each listed prime from |x|; the sign is dropped.
/// The result is the part of x coprime to the given primes.
inline Int coprime_part(const Int& x, const std::vector<long long>& primes) {
    Int r = int_abs(x);
    if (r == 0) return r;
    for (long long p : primes) {
        Int bp(p);
        while (r % bp == 0) r /= bp;
    }
    return r;
}

} // namespace borel

#endif
