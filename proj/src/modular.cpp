#include "sumcomm/modular.hpp"

#include <array>

namespace sumcomm {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    const std::uint64_t s = a + b;  // no overflow: a, b < 2^62
    return s >= m ? s - m : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + m - b;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    a %= m;
    if (a == 0) throw ZeroInverse();
    // extended Euclid on (a, m); track only the coefficient of a
    std::int64_t t = 0, new_t = 1;
    std::uint64_t r = m, new_r = a;
    while (new_r != 0) {
        const std::uint64_t q = r / new_r;
        const std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * new_t;
        t = new_t;
        new_t = tmp_t;
        const std::uint64_t tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (r != 1) throw OutOfRange("element not invertible (gcd != 1)");
    return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(m))
                 : static_cast<std::uint64_t>(t);
}

namespace {

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int r) {
    a %= n;
    if (a == 0) return true;
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2 || n >= kModulusCap) throw OutOfRange("is_prime requires 2 <= n < 2^62");
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    std::uint64_t d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    // witness set complete for all n < 3.3 * 10^24
    constexpr std::array<std::uint64_t, 12> witnesses = {2,  3,  5,  7,  11, 13,
                                                         17, 19, 23, 29, 31, 37};
    for (std::uint64_t a : witnesses) {
        if (!miller_rabin_witness(n, a, d, r)) return false;
    }
    return true;
}

std::uint64_t next_prime_above(std::uint64_t n) {
    if (n < 2) throw OutOfRange("next_prime_above requires n >= 2");
    std::uint64_t candidate = n + 1;
    if (candidate == 2) return 2;
    if (candidate % 2 == 0) ++candidate;
    for (;; candidate += 2) {
        if (candidate >= kModulusCap) throw OutOfRange("no prime below 2^62 found");
        if (is_prime(candidate)) return candidate;
    }
}

CrtSystem::CrtSystem(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
    if (primes_.empty()) throw OutOfRange("CrtSystem needs at least one prime");
    unsigned __int128 product = 1;
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (!is_prime(primes_[i])) throw OutOfRange("CrtSystem moduli must be prime");
        for (std::size_t j = 0; j < i; ++j) {
            if (primes_[i] == primes_[j])
                throw NotSquareFree("duplicate prime factor " + std::to_string(primes_[i]));
        }
        product *= primes_[i];
        if (product >= kModulusCap) throw OutOfRange("CrtSystem product exceeds 2^62");
    }
    product_ = static_cast<std::uint64_t>(product);
}

Residue crt_combine(const std::vector<Residue>& residues, const CrtSystem& system) {
    const auto& primes = system.moduli();
    if (residues.size() != primes.size())
        throw LengthMismatch("crt_combine: " + std::to_string(residues.size()) +
                             " residues for " + std::to_string(primes.size()) + " moduli");
    const std::uint64_t n = system.product();
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const std::uint64_t p = primes[i];
        if (residues[i].modulus != p)
            throw LengthMismatch("residue modulus does not match system modulus");
        const std::uint64_t q = n / p;  // product of the other primes
        const std::uint64_t coeff = mul_mod(q, mod_inverse(q % p, p), n);
        x = add_mod(x, mul_mod(residues[i].value, coeff, n), n);
    }
    return Residue{x, n};
}

}  // namespace sumcomm
