#pragma once

#include <cstdint>
#include <vector>

#include "sumcomm/errors.hpp"

namespace sumcomm {

// Moduli are capped at 2^62 so products fit in an unsigned 128-bit intermediate.
inline constexpr std::uint64_t kModulusCap = std::uint64_t{1} << 62;

/// An element of Z_m, kept reduced.
struct Residue {
    std::uint64_t value = 0;
    std::uint64_t modulus = 2;

    Residue() = default;
    Residue(std::uint64_t v, std::uint64_t m) : value(v), modulus(m) {
        if (m < 2) throw OutOfRange("modulus must be >= 2");
        if (v >= m) throw OutOfRange("residue not reduced");
    }

    bool operator==(const Residue& o) const = default;
};

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Multiplicative inverse of a mod m via extended Euclid. Works for any
/// modulus with gcd(a, m) = 1, not only primes. Throws ZeroInverse when
/// a == 0 mod m, OutOfRange when the inverse does not exist.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

/// Deterministic Miller-Rabin with a fixed witness set complete below 2^64.
/// Accepts 2 <= n < 2^62; throws OutOfRange otherwise.
bool is_prime(std::uint64_t n);

/// Smallest prime strictly greater than n (n >= 2). Throws OutOfRange if the
/// search would leave the 62-bit modulus range.
std::uint64_t next_prime_above(std::uint64_t n);

/// An odd prime usable as a protocol modulus.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint64_t p) : p_(p) {
        if (p < 3 || p % 2 == 0 || !is_prime(p))
            throw OutOfRange("modulus must be an odd prime in [3, 2^62)");
    }
    std::uint64_t value() const { return p_; }

private:
    std::uint64_t p_;
};

/// Pairwise distinct primes p_1..p_m with product N < 2^62.
class CrtSystem {
public:
    explicit CrtSystem(std::vector<std::uint64_t> primes);
    const std::vector<std::uint64_t>& moduli() const { return primes_; }
    std::uint64_t product() const { return product_; }

private:
    std::vector<std::uint64_t> primes_;
    std::uint64_t product_;
};

/// Unique x in [0, N) with x == residues[i] mod p_i for all i.
Residue crt_combine(const std::vector<Residue>& residues, const CrtSystem& system);

}  // namespace sumcomm
