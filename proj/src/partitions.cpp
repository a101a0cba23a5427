#include "basesize/partitions.hpp"

#include <algorithm>
#include <numeric>

#include "basesize/errors.hpp"

namespace basesize {

namespace {

void check_range(unsigned n, const Limits& limits) {
    if (n < 1 || n > limits.max_n) {
        throw InputError("n = " + std::to_string(n) + " outside [1, " +
                         std::to_string(limits.max_n) + "]");
    }
}

// Walks partitions of `n` with all parts <= `cap` whose largest part equals
// `first`, in descending lexicographic order. `first == 0` means no
// constraint on the largest part beyond `cap`.
void walk(unsigned n, unsigned first, const std::function<void(const CycleType&)>& visit) {
    std::vector<unsigned> counts(n, 0);
    std::vector<unsigned> parts;
    parts.reserve(n);

    // Recursive descent: the next part is at most the previous one, tried
    // from largest to smallest, which yields descending lex order.
    std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned cap) {
        if (remaining == 0) {
            visit(CycleType::from_counts(n, counts));
            return;
        }
        for (unsigned p = std::min(cap, remaining); p >= 1; --p) {
            ++counts[p - 1];
            rec(remaining - p, p);
            --counts[p - 1];
        }
    };

    if (first == 0) {
        rec(n, n);
    } else {
        ++counts[first - 1];
        rec(n - first, first);
    }
}

}  // namespace

CycleType CycleType::from_counts(unsigned n, std::vector<unsigned> counts) {
    if (n < 1) throw InputError("cycle type needs n >= 1");
    if (counts.size() > n) {
        for (std::size_t i = n; i < counts.size(); ++i) {
            if (counts[i] != 0) throw InputError("cycle length exceeds n");
        }
    }
    counts.resize(n, 0);
    unsigned long total = 0;
    for (unsigned i = 1; i <= n; ++i) total += static_cast<unsigned long>(i) * counts[i - 1];
    if (total != n) {
        throw InputError("invalid cycle type: sum i*c_i = " + std::to_string(total) +
                         " but n = " + std::to_string(n));
    }
    return CycleType(n, std::move(counts));
}

CycleType CycleType::from_parts(std::vector<unsigned> parts) {
    unsigned n = 0;
    for (unsigned p : parts) {
        if (p == 0) throw InputError("cycle lengths must be positive");
        n += p;
    }
    std::vector<unsigned> counts(n, 0);
    for (unsigned p : parts) ++counts[p - 1];
    return from_counts(n, std::move(counts));
}

CycleType CycleType::identity(unsigned n) {
    std::vector<unsigned> counts(n, 0);
    if (n > 0) counts[0] = n;
    return from_counts(n, std::move(counts));
}

unsigned CycleType::num_cycles() const {
    return std::accumulate(counts_.begin(), counts_.end(), 0u);
}

std::vector<unsigned> CycleType::parts() const {
    std::vector<unsigned> out;
    for (unsigned i = n_; i >= 1; --i) out.insert(out.end(), counts_[i - 1], i);
    return out;
}

std::string CycleType::to_string() const {
    std::string s = "(";
    bool first = true;
    for (unsigned p : parts()) {
        if (!first) s += ',';
        s += std::to_string(p);
        first = false;
    }
    return s + ")";
}

void for_each_cycle_type(unsigned n, const std::function<void(const CycleType&)>& visit,
                         const Limits& limits) {
    check_range(n, limits);
    walk(n, 0, visit);
}

std::vector<CycleType> enumerate_cycle_types(unsigned n, const Limits& limits) {
    std::vector<CycleType> out;
    for_each_cycle_type(n, [&](const CycleType& ct) { out.push_back(ct); }, limits);
    return out;
}

std::vector<CycleType> cycle_types_with_largest_part(unsigned n, unsigned largest,
                                                     const Limits& limits) {
    check_range(n, limits);
    if (largest < 1 || largest > n) throw InputError("largest part outside [1, n]");
    std::vector<CycleType> out;
    walk(n, largest, [&](const CycleType& ct) { out.push_back(ct); });
    return out;
}

BigInt class_size(const CycleType& ct) {
    BigInt denom = 1;
    for (unsigned i = 1; i <= ct.n(); ++i) {
        const unsigned c = ct.count(i);
        if (c == 0) continue;
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), i, c);
        denom *= p * factorial(c);
    }
    return exact_div(factorial(ct.n()), denom, "class size");
}

int sign_of(const CycleType& ct) {
    return (ct.n() - ct.num_cycles()) % 2 == 0 ? 1 : -1;
}

ClassTable class_table(unsigned n, const Limits& limits) {
    ClassTable table;
    table.n = n;
    table.group_order = factorial(n);
    for_each_cycle_type(
        n,
        [&](const CycleType& ct) {
            table.classes.push_back(ClassDatum{ct, class_size(ct), sign_of(ct)});
        },
        limits);
    return table;
}

std::vector<unsigned> representative(const CycleType& ct) {
    std::vector<unsigned> images(ct.n());
    unsigned start = 0;
    for (unsigned len : ct.parts()) {
        for (unsigned j = 0; j < len; ++j) images[start + j] = start + (j + 1) % len;
        start += len;
    }
    return images;
}

CycleType cycle_type_of(const std::vector<unsigned>& images) {
    const auto n = static_cast<unsigned>(images.size());
    std::vector<bool> seen(n, false);
    for (unsigned y : images) {
        if (y >= n || seen[y]) throw InputError("image vector is not a permutation");
        seen[y] = true;
    }
    std::fill(seen.begin(), seen.end(), false);
    std::vector<unsigned> parts;
    for (unsigned x = 0; x < n; ++x) {
        if (seen[x]) continue;
        unsigned len = 0;
        for (unsigned y = x; !seen[y]; y = images[y]) {
            seen[y] = true;
            ++len;
        }
        parts.push_back(len);
    }
    return CycleType::from_parts(std::move(parts));
}

}  // namespace basesize
