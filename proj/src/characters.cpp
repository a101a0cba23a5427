#include "basesize/characters.hpp"

#include <array>
#include <bit>
#include <fstream>
#include <functional>

#include "basesize/errors.hpp"

namespace basesize {

namespace {

void check_aligned(const ClassTable& classes, const CharVector& chi) {
    if (chi.n != classes.n || chi.values.size() != classes.size()) {
        throw InputError("character is not aligned with the class table");
    }
}

void check_aligned(const ClassTable& classes, const SignVector& phi) {
    if (phi.n != classes.n || phi.values.size() != classes.size()) {
        throw InputError("linear character is not aligned with the class table");
    }
}

// Partitions of k as multiplicity vectors b_1..b_k.
std::vector<std::vector<unsigned>> partitions_of(unsigned k) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> b(k, 0);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned cap) {
        if (remaining == 0) {
            out.push_back(b);
            return;
        }
        for (unsigned p = std::min(cap, remaining); p >= 1; --p) {
            ++b[p - 1];
            rec(remaining - p, p);
            --b[p - 1];
        }
    };
    rec(k, k);
    return out;
}

BigInt subsets_value(const CycleType& ct, const std::vector<std::vector<unsigned>>& etas) {
    BigInt total = 0;
    for (const auto& b : etas) {
        BigInt term = 1;
        for (unsigned j = 1; j <= b.size() && term != 0; ++j) {
            if (b[j - 1] != 0) term *= binomial(ct.count(j), b[j - 1]);
        }
        total += term;
    }
    return total;
}

void check_uniform(unsigned n, unsigned r, unsigned s, const Limits& limits) {
    if (r < 1 || s < 1) throw InputError("uniform partitions need r >= 1 and s >= 1");
    if (n != r * s) {
        throw InputError("n = " + std::to_string(n) + " is not r*s = " + std::to_string(r) + "*" +
                         std::to_string(s));
    }
    if (n > limits.uniform_ceiling || n > 32) {
        throw CapacityError("uniform partition enumeration capped at n = " +
                            std::to_string(limits.uniform_ceiling));
    }
}

constexpr std::uint32_t kCacheMagic = 0x55504152;  // "UPAR"

}  // namespace

BigInt ActionTag::domain_size(unsigned n) const {
    if (kind == Kind::subsets) return binomial(n, k);
    BigInt denom = factorial(r);
    for (unsigned i = 0; i < r; ++i) denom *= factorial(s);
    return exact_div(factorial(n), denom, "uniform partition count");
}

std::string ActionTag::to_string() const {
    if (kind == Kind::subsets) return "subsets:" + std::to_string(k);
    return "partitions:" + std::to_string(r) + "x" + std::to_string(s);
}

const char* to_string(Method m) { return m == Method::formula ? "formula" : "oracle"; }

BigInt chi_subsets(const CycleType& ct, unsigned k) {
    if (k < 1 || k > ct.n()) {
        throw InputError("k = " + std::to_string(k) + " outside [1, " + std::to_string(ct.n()) + "]");
    }
    return subsets_value(ct, partitions_of(k));
}

CharVector subsets_character(const ClassTable& classes, unsigned k) {
    if (k < 1 || k > classes.n) throw InputError("k outside [1, n]");
    const auto etas = partitions_of(k);
    CharVector chi{classes.n, ActionTag::subsets(k), {}};
    chi.values.reserve(classes.size());
    for (const auto& c : classes.classes) chi.values.push_back(subsets_value(c.cycle_type, etas));
    return chi;
}

UniformPartitions UniformPartitions::enumerate(unsigned r, unsigned s, const Limits& limits) {
    const unsigned n = r * s;
    check_uniform(n, r, s, limits);
    UniformPartitions out(r, s);

    // The next block always takes the smallest unused point plus s - 1 more
    // unused points, so blocks come out sorted by minimum element.
    const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
    std::vector<std::uint32_t> current;
    current.reserve(r);
    std::function<void(std::uint32_t)> rec = [&](std::uint32_t used) {
        if (used == all) {
            out.blocks_.insert(out.blocks_.end(), current.begin(), current.end());
            return;
        }
        const std::uint32_t free = all & ~used;
        const std::uint32_t lowest = free & (~free + 1);
        std::function<void(std::uint32_t, std::uint32_t, unsigned)> pick =
            [&](std::uint32_t block, std::uint32_t candidates, unsigned need) {
                if (need == 0) {
                    current.push_back(block);
                    rec(used | block);
                    current.pop_back();
                    return;
                }
                if (static_cast<unsigned>(std::popcount(candidates)) < need) return;
                const std::uint32_t bit = candidates & (~candidates + 1);
                pick(block | bit, candidates & ~bit, need - 1);
                pick(block, candidates & ~bit, need);
            };
        pick(lowest, free & ~lowest, s - 1);
    };
    rec(0);
    return out;
}

UniformPartitions UniformPartitions::load_or_build(unsigned r, unsigned s,
                                                   const std::filesystem::path& dir,
                                                   const Limits& limits) {
    const unsigned n = r * s;
    check_uniform(n, r, s, limits);
    const auto expected = ActionTag::uniform_partitions(r, s).domain_size(n);
    const auto path = dir / ("uniform-n" + std::to_string(n) + "-r" + std::to_string(r) + "-s" +
                             std::to_string(s) + ".bin");

    if (std::ifstream in{path, std::ios::binary}) {
        std::array<std::uint32_t, 4> header{};
        std::uint64_t count = 0;
        in.read(reinterpret_cast<char*>(header.data()), sizeof(header));
        in.read(reinterpret_cast<char*>(&count), sizeof(count));
        if (in && header == std::array<std::uint32_t, 4>{kCacheMagic, n, r, s} && expected == count) {
            UniformPartitions cached(r, s);
            cached.blocks_.resize(count * r);
            in.read(reinterpret_cast<char*>(cached.blocks_.data()),
                    static_cast<std::streamsize>(cached.blocks_.size() * sizeof(std::uint32_t)));
            if (in) return cached;
        }
    }

    auto built = enumerate(r, s, limits);
    std::filesystem::create_directories(dir);
    std::ofstream out{path, std::ios::binary | std::ios::trunc};
    const std::array<std::uint32_t, 4> header{kCacheMagic, n, r, s};
    const std::uint64_t count = built.size();
    out.write(reinterpret_cast<const char*>(header.data()), sizeof(header));
    out.write(reinterpret_cast<const char*>(&count), sizeof(count));
    out.write(reinterpret_cast<const char*>(built.blocks_.data()),
              static_cast<std::streamsize>(built.blocks_.size() * sizeof(std::uint32_t)));
    return built;
}

std::uint64_t UniformPartitions::count_fixed(const std::vector<unsigned>& images) const {
    const unsigned n = this->n();
    if (images.size() != n) throw InputError("permutation degree does not match partition size");

    // Byte-sliced image tables: image of a mask is the OR of four lookups.
    std::array<std::array<std::uint32_t, 256>, 4> table{};
    for (unsigned slice = 0; slice < 4; ++slice) {
        for (unsigned byte = 0; byte < 256; ++byte) {
            std::uint32_t im = 0;
            for (unsigned bit = 0; bit < 8; ++bit) {
                const unsigned x = slice * 8 + bit;
                if ((byte >> bit & 1u) && x < n) im |= 1u << images[x];
            }
            table[slice][byte] = im;
        }
    }
    auto image = [&](std::uint32_t m) {
        return table[0][m & 0xff] | table[1][m >> 8 & 0xff] | table[2][m >> 16 & 0xff] |
               table[3][m >> 24];
    };

    std::uint64_t fixed = 0;
    const std::size_t count = size();
    for (std::size_t p = 0; p < count; ++p) {
        const std::uint32_t* blocks = blocks_.data() + p * r_;
        bool invariant = true;
        for (unsigned i = 0; i < r_ && invariant; ++i) {
            const std::uint32_t im = image(blocks[i]);
            if (im == blocks[i]) continue;
            bool found = false;
            for (unsigned j = 0; j < r_; ++j) {
                if (blocks[j] == im) {
                    found = true;
                    break;
                }
            }
            invariant = found;
        }
        fixed += invariant ? 1 : 0;
    }
    return fixed;
}

BigInt chi_uniform_partitions(const CycleType& ct, unsigned r, unsigned s, const Limits& limits) {
    check_uniform(ct.n(), r, s, limits);
    const auto parts = UniformPartitions::enumerate(r, s, limits);
    return BigInt(static_cast<unsigned long>(parts.count_fixed(representative(ct))));
}

CharVector uniform_partitions_character(const ClassTable& classes, const UniformPartitions& parts) {
    if (classes.n != parts.n()) throw InputError("class table and partition list disagree on n");
    CharVector chi{classes.n, ActionTag::uniform_partitions(parts.r(), parts.s()), {}};
    chi.values.reserve(classes.size());
    for (const auto& c : classes.classes) {
        chi.values.emplace_back(static_cast<unsigned long>(parts.count_fixed(representative(c.cycle_type))));
    }
    return chi;
}

SignVector sign_vector(unsigned n, const Limits& limits) {
    SignVector v{n, SignVector::Kind::sign, {}};
    for_each_cycle_type(n, [&](const CycleType& ct) { v.values.push_back(sign_of(ct)); }, limits);
    return v;
}

SignVector trivial_vector(unsigned n, const Limits& limits) {
    SignVector v{n, SignVector::Kind::trivial, {}};
    for_each_cycle_type(n, [&](const CycleType&) { v.values.push_back(1); }, limits);
    return v;
}

BigInt class_sum(const ClassTable& classes, const SignVector& phi, const CharVector& chi, unsigned l) {
    check_aligned(classes, chi);
    check_aligned(classes, phi);
    BigInt total = 0;
    BigInt power;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        mpz_pow_ui(power.get_mpz_t(), chi.values[i].get_mpz_t(), l);
        if (phi.values[i] > 0) {
            total += classes.classes[i].size * power;
        } else {
            total -= classes.classes[i].size * power;
        }
    }
    return total;
}

BigInt inner_product(const ClassTable& classes, const SignVector& phi, const CharVector& chi, unsigned l) {
    BigInt q = exact_div(class_sum(classes, phi, chi, l), classes.group_order, "inner product");
    if (phi.kind == SignVector::Kind::sign && q < 0) {
        throw ConsistencyError("negative <sgn, chi^" + std::to_string(l) + "> = " + q.get_str());
    }
    return q;
}

OrbitCounts orbit_counts(const ClassTable& classes, const CharVector& chi, unsigned l) {
    check_aligned(classes, chi);
    if (classes.n < 2) throw InputError("orbit counts with the alternating subgroup need n >= 2");
    BigInt all = 0;
    BigInt even = 0;
    BigInt power;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        mpz_pow_ui(power.get_mpz_t(), chi.values[i].get_mpz_t(), l);
        BigInt term = classes.classes[i].size * power;
        if (classes.classes[i].sign > 0) even += term;
        all += term;
    }
    return {exact_div(all, classes.group_order, "orbit count o(l)"),
            exact_div(2 * even, classes.group_order, "orbit count o_K(l)")};
}

PowerSweep::PowerSweep(const ClassTable& classes, const CharVector& chi)
    : classes_(classes), chi_(chi), powers_(classes.size(), BigInt(1)) {
    check_aligned(classes, chi);
    if (classes.n < 2) throw InputError("power sweep needs n >= 2");
}

OrbitReport PowerSweep::next() {
    ++l_;
    BigInt even = 0;
    BigInt odd = 0;
    for (std::size_t i = 0; i < powers_.size(); ++i) {
        powers_[i] *= chi_.values[i];
        if (powers_[i] == 0) continue;
        const auto& c = classes_.classes[i];
        if (c.sign > 0) {
            even += c.size * powers_[i];
        } else {
            odd += c.size * powers_[i];
        }
    }
    const BigInt& order = classes_.group_order;
    OrbitReport report;
    report.l = l_;
    report.method = Method::formula;
    report.regular = exact_div(even - odd, order, "inner product");
    report.o = exact_div(even + odd, order, "orbit count o(l)");
    report.o_K = exact_div(2 * even, order, "orbit count o_K(l)");
    if (report.regular < 0) {
        throw ConsistencyError("negative <sgn, chi^" + std::to_string(l_) + ">");
    }
    return report;
}

}  // namespace basesize
