#ifndef GRAPHENT_SUBSET_H
#define GRAPHENT_SUBSET_H

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace graphent {

/// Maximum number of vertices / qubits; keeps every subset in one machine word.
constexpr size_t kMaxVertices = 63;

constexpr uint64_t full_mask(size_t n) {
    return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
}

/// A set of qubit (vertex) indices. Bit q is internal index q, i.e. user-facing
/// qubit label q + 1.
struct SubsetMask {
    uint64_t bits = 0;

    size_t size() const {
        return static_cast<size_t>(std::popcount(bits));
    }
    bool contains(size_t q) const {
        return (bits >> q) & 1;
    }
    SubsetMask complement(size_t n) const {
        return SubsetMask{full_mask(n) ^ bits};
    }
    bool within(size_t n) const {
        return (bits & ~full_mask(n)) == 0;
    }
    std::vector<size_t> members() const {
        std::vector<size_t> out;
        for (uint64_t b = bits; b; b &= b - 1) {
            out.push_back(static_cast<size_t>(std::countr_zero(b)));
        }
        return out;
    }

    static SubsetMask of(std::initializer_list<size_t> qubits) {
        SubsetMask s;
        for (size_t q : qubits) {
            s.bits |= uint64_t{1} << q;
        }
        return s;
    }

    auto operator<=>(const SubsetMask &) const = default;
};

/// Calls f(SubsetMask) for every size-m subset of {0..n-1} in ascending bit order.
template <typename F>
void for_each_subset_of_size(size_t n, size_t m, F &&f) {
    if (m > n) {
        return;
    }
    if (m == 0) {
        f(SubsetMask{0});
        return;
    }
    uint64_t s = full_mask(m);
    const uint64_t limit = full_mask(n);
    while (true) {
        f(SubsetMask{s});
        if (s == (limit & ~full_mask(n - m))) {
            break;
        }
        // Gosper's hack: next integer with the same popcount.
        uint64_t c = s & (~s + 1);
        uint64_t r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}

inline std::vector<SubsetMask> subsets_of_size(size_t n, size_t m) {
    std::vector<SubsetMask> out;
    for_each_subset_of_size(n, m, [&](SubsetMask s) { out.push_back(s); });
    return out;
}

/// n choose m; exact for every n <= 63.
inline uint64_t binomial(size_t n, size_t m) {
    if (m > n) {
        return 0;
    }
    m = std::min(m, n - m);
    unsigned __int128 r = 1;
    for (size_t i = 1; i <= m; i++) {
        r = r * (n - m + i) / i;
    }
    return static_cast<uint64_t>(r);
}

/// "{1,3,4}" using 1-based labels.
inline std::string subset_label(SubsetMask s) {
    std::string out = "{";
    bool first = true;
    for (size_t q : s.members()) {
        if (!first) {
            out += ",";
        }
        first = false;
        out += std::to_string(q + 1);
    }
    out += "}";
    return out;
}

}  // namespace graphent

#endif
