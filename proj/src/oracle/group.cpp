#include "basesize/oracle/group.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <unordered_map>

#include "basesize/errors.hpp"

namespace basesize::oracle {

namespace {

bool is_prime(unsigned q) {
    if (q < 2) return false;
    for (unsigned d = 2; d * d <= q; ++d) {
        if (q % d == 0) return false;
    }
    return true;
}

long mod(long x, unsigned q) {
    const long m = static_cast<long>(q);
    return ((x % m) + m) % m;
}

long inverse_mod(long x, unsigned q) {
    // q is prime: x^(q-2).
    long result = 1;
    long base = mod(x, q);
    for (unsigned e = q - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % q;
        base = base * base % q;
    }
    return result;
}

unsigned primitive_root(unsigned q) {
    for (unsigned g = 2; g < q; ++g) {
        unsigned order = 1;
        long x = g;
        while (x != 1) {
            x = x * g % q;
            ++order;
        }
        if (order == q - 1) return g;
    }
    return 1;  // q = 2
}

}  // namespace

std::size_t LabeledGroup::kernel_order() const {
    if (!has_labels()) return order();
    return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), 1));
}

LabeledGroup closure(std::size_t degree, const std::vector<Perm>& generators,
                     const std::vector<int>& labels, const Limits& limits) {
    if (!labels.empty() && labels.size() != generators.size()) {
        throw InputError("one label per generator required");
    }
    for (const auto& g : generators) {
        if (g.degree() != degree) throw InputError("generator degree does not match group degree");
    }
    for (int l : labels) {
        if (l != 1 && l != -1) throw InputError("labels must be +1 or -1");
    }

    LabeledGroup group;
    group.degree = degree;
    const bool labeled = !labels.empty();
    std::unordered_map<Perm, std::size_t, PermHash> index;

    auto insert = [&](Perm p, int label) -> std::size_t {
        auto [it, inserted] = index.try_emplace(p, group.elements.size());
        if (!inserted) {
            if (labeled && group.labels[it->second] != label) {
                throw InputError("labels are not a homomorphism: " + p.to_cycles() +
                                 " reached with both signs");
            }
            return it->second;
        }
        if (group.elements.size() >= limits.max_group_order) {
            throw CapacityError("group order exceeds " + std::to_string(limits.max_group_order));
        }
        group.elements.push_back(std::move(p));
        if (labeled) group.labels.push_back(label);
        return it->second;
    };

    insert(Perm::identity(degree), 1);
    for (std::size_t i = 0; i < generators.size(); ++i) {
        group.generators.push_back(insert(generators[i], labeled ? labels[i] : 1));
    }
    // Breadth-first: every element times every generator.
    for (std::size_t next = 0; next < group.elements.size(); ++next) {
        for (std::size_t i = 0; i < generators.size(); ++i) {
            const int label = labeled ? group.labels[next] * labels[i] : 1;
            insert(group.elements[next] * generators[i], label);
        }
    }
    return group;
}

LabeledGroup symmetric_group(std::size_t n, const Limits& limits) {
    if (n < 1) throw InputError("symmetric group needs n >= 1");
    std::vector<Perm> gens;
    if (n >= 2) {
        gens.push_back(Perm::from_cycles("(1,2)", n));
        std::vector<std::uint32_t> cycle(n);
        for (std::size_t x = 0; x < n; ++x) cycle[x] = static_cast<std::uint32_t>((x + 1) % n);
        gens.emplace_back(std::move(cycle));
    }
    std::vector<int> labels;
    for (const auto& g : gens) labels.push_back(g.sign());
    auto group = closure(n, gens, labels, limits);
    group.name = "S_" + std::to_string(n);
    return group;
}

LabeledGroup alternating_group(std::size_t n, const Limits& limits) {
    if (n < 1) throw InputError("alternating group needs n >= 1");
    std::vector<Perm> gens;
    if (n >= 3) {
        gens.push_back(Perm::from_cycles("(1,2,3)", n));
        // (1..n) for odd n, (2..n) for even n: both even.
        std::vector<std::uint32_t> cycle(n);
        const std::size_t start = n % 2 == 1 ? 0 : 1;
        for (std::size_t x = 0; x < start; ++x) cycle[x] = static_cast<std::uint32_t>(x);
        for (std::size_t x = start; x < n; ++x) {
            cycle[x] = static_cast<std::uint32_t>(x + 1 < n ? x + 1 : start);
        }
        gens.emplace_back(std::move(cycle));
    }
    std::vector<int> labels(gens.size(), 1);
    auto group = closure(n, gens, labels, limits);
    group.name = "A_" + std::to_string(n);
    return group;
}

int mobius_label(long a, long b, long c, long d, unsigned q) {
    const long det = mod(a * d - b * c, q);
    if (det == 0) throw InputError("singular Moebius map");
    // Euler's criterion.
    long result = 1;
    long base = det;
    for (unsigned e = (q - 1) / 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % q;
        base = base * base % q;
    }
    return result == 1 ? 1 : -1;
}

std::uint32_t mobius_apply(long a, long b, long c, long d, unsigned q, std::uint32_t x) {
    if (x == q) {
        // Infinity goes to a/c, or stays at infinity when c = 0.
        if (mod(c, q) == 0) return q;
        return static_cast<std::uint32_t>(mod(a * inverse_mod(c, q), q));
    }
    const long num = mod(a * static_cast<long>(x) + b, q);
    const long den = mod(c * static_cast<long>(x) + d, q);
    if (den == 0) return q;
    return static_cast<std::uint32_t>(mod(num * inverse_mod(den, q), q));
}

LabeledGroup pgl2(unsigned q, const Limits& limits) {
    if (q < 3 || q > 31 || !is_prime(q)) {
        throw InputError("pgl2 needs an odd prime q <= 31 (got " + std::to_string(q) + ")");
    }
    const long w = primitive_root(q);
    // x -> x + 1, x -> w x, x -> -1/x generate PGL_2(q).
    const std::vector<std::array<long, 4>> matrices = {{1, 1, 0, 1}, {w, 0, 0, 1}, {0, -1, 1, 0}};
    std::vector<Perm> gens;
    std::vector<int> labels;
    for (const auto& [a, b, c, d] : matrices) {
        std::vector<std::uint32_t> images(q + 1);
        for (std::uint32_t x = 0; x <= q; ++x) images[x] = mobius_apply(a, b, c, d, q, x);
        gens.emplace_back(std::move(images));
        labels.push_back(mobius_label(a, b, c, d, q));
    }
    auto group = closure(q + 1, gens, labels, limits);
    group.name = "PGL_2(" + std::to_string(q) + ")";
    return group;
}

bool spot_check_labels(const LabeledGroup& group, std::size_t samples, std::uint64_t seed) {
    if (!group.has_labels()) return true;
    std::unordered_map<Perm, std::size_t, PermHash> index;
    for (std::size_t i = 0; i < group.elements.size(); ++i) index.emplace(group.elements[i], i);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, group.order() - 1);
    for (std::size_t t = 0; t < samples; ++t) {
        const auto g = pick(rng);
        const auto h = pick(rng);
        const auto it = index.find(group.elements[g] * group.elements[h]);
        if (it == index.end()) return false;
        if (group.labels[it->second] != group.labels[g] * group.labels[h]) return false;
    }
    return true;
}

}  // namespace basesize::oracle
