#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sumcomm/errors.hpp"
#include "sumcomm/modular.hpp"

namespace sumcomm {

/// Maximal no-wrap arithmetic progression {b, b+D, ...} in Z_p with base b < D.
struct Dap {
    std::uint64_t p;
    std::uint64_t diff;
    std::uint64_t base;

    std::uint64_t size() const { return (p - 1 - base) / diff + 1; }
    std::uint64_t last() const { return base + (size() - 1) * diff; }
    bool contains(std::uint64_t x) const {
        return x < p && x % diff == base && x <= last();
    }
    std::vector<std::uint64_t> elements() const;
};

/// The unique maximal D-AP containing x; its base is x mod D.
Dap dap_of(std::uint64_t x, std::uint64_t diff, std::uint64_t p);

/// Contiguous image of a sumset of D-APs: {start + i*D mod p | 0 <= i < length}.
struct SumsetInterval {
    std::uint64_t p;
    std::uint64_t diff;
    std::uint64_t start;
    std::uint64_t length;  // capped at p

    std::vector<std::uint64_t> elements() const;
};

/// Closed-form sumset of D-APs sharing (p, D):
/// start = sum of bases mod p, length = min{p, sum of sizes - k + 1}.
SumsetInterval sumset_interval(std::span<const Dap> daps);

/// Minimum number of +-D steps mod p between g0 and g1; value in [0, (p-1)/2].
std::uint64_t dist(std::uint64_t g0, std::uint64_t g1, std::uint64_t diff, std::uint64_t p);

/// Membership via ((g - start) * D^-1 mod p) < length; always true at length >= p.
bool interval_contains(const SumsetInterval& s, std::uint64_t g);

/// Test-oracle representation of an arbitrary subset of Z_p. Desk-scale only.
struct DenseSet {
    std::uint64_t p;
    std::vector<bool> bits;

    explicit DenseSet(std::uint64_t p_) : p(p_), bits(p_, false) {
        if (p_ < 2 || p_ > (std::uint64_t{1} << 16))
            throw OutOfRange("DenseSet requires 2 <= p <= 2^16");
    }
    static DenseSet of(std::uint64_t p, std::initializer_list<std::uint64_t> xs);
    static DenseSet from_dap(const Dap& a);

    void add(std::uint64_t x) { bits.at(x) = true; }
    bool contains(std::uint64_t x) const { return bits.at(x); }
    std::uint64_t count() const;
    std::vector<std::uint64_t> elements() const;
};

/// Exact sumset by enumeration; the independent oracle for sumset_interval.
DenseSet brute_sumset(std::span<const DenseSet> sets);

/// |sum of A_i| >= min{p, sum |A_i| - k + 1}; returns whether the bound holds.
bool check_cauchy_davenport(std::span<const DenseSet> sets);

}  // namespace sumcomm
