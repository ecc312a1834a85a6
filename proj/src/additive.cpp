#include "sumcomm/additive.hpp"

#include <algorithm>

namespace sumcomm {

std::vector<std::uint64_t> Dap::elements() const {
    std::vector<std::uint64_t> out;
    out.reserve(size());
    for (std::uint64_t x = base; x < p; x += diff) out.push_back(x);
    return out;
}

Dap dap_of(std::uint64_t x, std::uint64_t diff, std::uint64_t p) {
    if (diff < 1 || diff >= p) throw BadDifference("D must be in [1, p)");
    if (x >= p) throw OutOfRange("element not reduced mod p");
    return Dap{p, diff, x % diff};
}

std::vector<std::uint64_t> SumsetInterval::elements() const {
    std::vector<std::uint64_t> out;
    out.reserve(length);
    std::uint64_t x = start;
    for (std::uint64_t i = 0; i < length; ++i) {
        out.push_back(x);
        x = add_mod(x, diff, p);
    }
    return out;
}

SumsetInterval sumset_interval(std::span<const Dap> daps) {
    if (daps.empty()) throw EmptySet("sumset_interval needs at least one D-AP");
    const std::uint64_t p = daps.front().p;
    const std::uint64_t diff = daps.front().diff;
    std::uint64_t start = 0;
    std::uint64_t total = 0;
    for (const Dap& a : daps) {
        if (a.p != p || a.diff != diff)
            throw MixedParameters("sumset_interval inputs must share p and D");
        start = add_mod(start, a.base, p);
        total += a.size();
    }
    const std::uint64_t length = std::min<std::uint64_t>(p, total - daps.size() + 1);
    return SumsetInterval{p, diff, start, length};
}

std::uint64_t dist(std::uint64_t g0, std::uint64_t g1, std::uint64_t diff, std::uint64_t p) {
    if (diff < 1 || diff >= p) throw BadDifference("D must be in [1, p)");
    const std::uint64_t dinv = mod_inverse(diff, p);
    const std::uint64_t fwd = mul_mod(sub_mod(g1 % p, g0 % p, p), dinv, p);
    return std::min(fwd, fwd == 0 ? 0 : p - fwd);
}

bool interval_contains(const SumsetInterval& s, std::uint64_t g) {
    if (s.length >= s.p) return true;
    const std::uint64_t dinv = mod_inverse(s.diff, s.p);
    const std::uint64_t offset = mul_mod(sub_mod(g % s.p, s.start, s.p), dinv, s.p);
    return offset < s.length;
}

DenseSet DenseSet::of(std::uint64_t p, std::initializer_list<std::uint64_t> xs) {
    DenseSet s(p);
    for (std::uint64_t x : xs) s.add(x);
    return s;
}

DenseSet DenseSet::from_dap(const Dap& a) {
    DenseSet s(a.p);
    for (std::uint64_t x : a.elements()) s.add(x);
    return s;
}

std::uint64_t DenseSet::count() const {
    return static_cast<std::uint64_t>(std::count(bits.begin(), bits.end(), true));
}

std::vector<std::uint64_t> DenseSet::elements() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < p; ++x)
        if (bits[x]) out.push_back(x);
    return out;
}

DenseSet brute_sumset(std::span<const DenseSet> sets) {
    if (sets.empty()) throw EmptySet("brute_sumset needs at least one set");
    const std::uint64_t p = sets.front().p;
    DenseSet acc(p);
    acc.add(0);
    for (const DenseSet& s : sets) {
        if (s.p != p) throw MixedParameters("brute_sumset inputs must share p");
        if (s.count() == 0) throw EmptySet("brute_sumset inputs must be nonempty");
        DenseSet next(p);
        for (std::uint64_t a = 0; a < p; ++a) {
            if (!acc.bits[a]) continue;
            for (std::uint64_t b = 0; b < p; ++b) {
                if (s.bits[b]) next.add(add_mod(a, b, p));
            }
        }
        acc = std::move(next);
    }
    return acc;
}

bool check_cauchy_davenport(std::span<const DenseSet> sets) {
    const DenseSet sum = brute_sumset(sets);
    std::uint64_t total = 0;
    for (const DenseSet& s : sets) total += s.count();
    const std::uint64_t bound =
        std::min<std::uint64_t>(sum.p, total - sets.size() + 1);
    return sum.count() >= bound;
}

}  // namespace sumcomm
