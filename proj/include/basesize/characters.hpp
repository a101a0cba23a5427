#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "basesize/bigint.hpp"
#include "basesize/limits.hpp"
#include "basesize/partitions.hpp"

namespace basesize {

/// Which S_n action a permutation character belongs to.
struct ActionTag {
    enum class Kind { subsets, uniform_partitions };

    Kind kind = Kind::subsets;
    unsigned k = 0;  // subsets
    unsigned r = 0;  // uniform partitions: r blocks ...
    unsigned s = 0;  // ... of size s

    static ActionTag subsets(unsigned k) { return {Kind::subsets, k, 0, 0}; }
    static ActionTag uniform_partitions(unsigned r, unsigned s) {
        return {Kind::uniform_partitions, 0, r, s};
    }

    /// Number of points acted on: C(n, k), or n! / (s!^r r!).
    BigInt domain_size(unsigned n) const;
    std::string to_string() const;
};

/// Permutation character values, aligned with enumerate_cycle_types(n).
struct CharVector {
    unsigned n = 0;
    ActionTag action;
    std::vector<BigInt> values;

    /// Value on the identity class, which comes last in enumeration order.
    const BigInt& identity_value() const { return values.back(); }
};

/// A linear character of S_n with values in {+1, -1}, aligned with
/// enumerate_cycle_types(n): either sgn or the trivial character.
struct SignVector {
    enum class Kind { trivial, sign };

    unsigned n = 0;
    Kind kind = Kind::sign;
    std::vector<int> values;
};

enum class Method { formula, oracle };

const char* to_string(Method m);

/// Orbit counts on Omega^l. `regular` is the number of regular G-orbits;
/// `o` and `o_K` count orbits of G and of the kernel K of the labeling.
struct OrbitReport {
    unsigned l = 0;
    BigInt regular;
    BigInt o;
    BigInt o_K;
    Method method = Method::formula;
};

/// Number of k-subsets of [n] fixed by a permutation of type `ct`:
/// the sum over partitions eta = (1^b_1 ... k^b_k) of k of prod_j C(c_j, b_j).
BigInt chi_subsets(const CycleType& ct, unsigned k);

CharVector subsets_character(const ClassTable& classes, unsigned k);

/// All partitions of [n] into r unordered blocks of size s, n = r*s. Each
/// block is a bitmask over points 0..n-1; a partition is its r blocks sorted
/// by minimum element. Read-only once built, so it can be shared.
class UniformPartitions {
public:
    static UniformPartitions enumerate(unsigned r, unsigned s, const Limits& limits = default_limits());

    /// Loads "uniform-n<n>-r<r>-s<s>.bin" from `dir` if present and valid,
    /// otherwise enumerates and writes it there.
    static UniformPartitions load_or_build(unsigned r, unsigned s, const std::filesystem::path& dir,
                                           const Limits& limits = default_limits());

    unsigned n() const { return r_ * s_; }
    unsigned r() const { return r_; }
    unsigned s() const { return s_; }
    std::size_t size() const { return r_ == 0 ? 0 : blocks_.size() / r_; }
    std::span<const std::uint32_t> partition(std::size_t i) const {
        return {blocks_.data() + i * r_, r_};
    }

    /// Number of partitions mapped to themselves (blocks permuted among
    /// themselves) by the permutation with the given images.
    std::uint64_t count_fixed(const std::vector<unsigned>& images) const;

private:
    UniformPartitions(unsigned r, unsigned s) : r_(r), s_(s) {}

    unsigned r_;
    unsigned s_;
    std::vector<std::uint32_t> blocks_;
};

/// Number of uniform partitions invariant under representative(ct).
BigInt chi_uniform_partitions(const CycleType& ct, unsigned r, unsigned s,
                              const Limits& limits = default_limits());

CharVector uniform_partitions_character(const ClassTable& classes, const UniformPartitions& parts);

SignVector sign_vector(unsigned n, const Limits& limits = default_limits());
SignVector trivial_vector(unsigned n, const Limits& limits = default_limits());

/// Sum over classes of phi * |class| * chi^l, before division by n!.
BigInt class_sum(const ClassTable& classes, const SignVector& phi, const CharVector& chi, unsigned l);

/// <phi, chi^l> as an exact integer. Throws ConsistencyError if n! does not
/// divide the class sum, or if phi is sgn and the result is negative.
BigInt inner_product(const ClassTable& classes, const SignVector& phi, const CharVector& chi, unsigned l);

struct OrbitCounts {
    BigInt o;
    BigInt o_K;
};

/// Orbit counts of S_n and A_n on Omega^l by orbit counting. Requires n >= 2.
OrbitCounts orbit_counts(const ClassTable& classes, const CharVector& chi, unsigned l);

/// Walks l = 1, 2, ... keeping chi^l per class and multiplying by chi once
/// per step. Each step yields <sgn, chi^l>, o(l) and o_K(l).
class PowerSweep {
public:
    PowerSweep(const ClassTable& classes, const CharVector& chi);

    /// Advances to l + 1 and returns the report for the new l.
    OrbitReport next();
    unsigned l() const { return l_; }

private:
    const ClassTable& classes_;
    const CharVector& chi_;
    std::vector<BigInt> powers_;
    unsigned l_ = 0;
};

}  // namespace basesize
