#pragma once

#include <functional>
#include <string>
#include <vector>

#include "basesize/bigint.hpp"
#include "basesize/limits.hpp"

namespace basesize {

/// Cycle type of a permutation of [n], stored as multiplicities:
/// count(i) is the number of i-cycles, for i = 1..n.
class CycleType {
public:
    /// `counts[i - 1]` is the number of i-cycles. Shorter vectors are padded
    /// with zeros; throws InputError unless sum i * c_i == n.
    static CycleType from_counts(unsigned n, std::vector<unsigned> counts);
    /// Cycle lengths in any order, all positive.
    static CycleType from_parts(std::vector<unsigned> parts);
    static CycleType identity(unsigned n);

    unsigned n() const { return n_; }
    /// Number of i-cycles, 1 <= i; zero for i > n.
    unsigned count(unsigned i) const { return i >= 1 && i <= n_ ? counts_[i - 1] : 0; }
    const std::vector<unsigned>& counts() const { return counts_; }
    unsigned num_cycles() const;
    /// Cycle lengths, non-increasing.
    std::vector<unsigned> parts() const;
    bool is_identity() const { return counts_.empty() || counts_[0] == n_; }
    std::string to_string() const;

    friend bool operator==(const CycleType&, const CycleType&) = default;

private:
    CycleType(unsigned n, std::vector<unsigned> counts) : n_(n), counts_(std::move(counts)) {}

    unsigned n_ = 0;
    std::vector<unsigned> counts_;
};

struct ClassDatum {
    CycleType cycle_type;
    BigInt size;
    int sign = 1;
};

/// Conjugacy classes of S_n in enumeration order, with |S_n| = n!.
struct ClassTable {
    unsigned n = 0;
    BigInt group_order;
    std::vector<ClassDatum> classes;

    std::size_t size() const { return classes.size(); }
};

/// Visits every partition of n as a cycle type, in descending lexicographic
/// order of the non-increasing part lists: (n), (n-1,1), (n-2,2), ..., (1^n).
void for_each_cycle_type(unsigned n, const std::function<void(const CycleType&)>& visit,
                         const Limits& limits = default_limits());

std::vector<CycleType> enumerate_cycle_types(unsigned n, const Limits& limits = default_limits());

/// The slice of enumerate_cycle_types(n) with largest part exactly `largest`.
/// Slices for largest = n, n-1, ..., 1 concatenate to the full enumeration
/// and can be processed independently.
std::vector<CycleType> cycle_types_with_largest_part(unsigned n, unsigned largest,
                                                     const Limits& limits = default_limits());

/// n! / prod_i i^{c_i} c_i!
BigInt class_size(const CycleType& ct);

/// (-1)^{n - sum_i c_i}
int sign_of(const CycleType& ct);

ClassTable class_table(unsigned n, const Limits& limits = default_limits());

/// Canonical representative of the class: cycles laid out over consecutive
/// points 0..n-1, longest cycles first. Entry x is the image of x.
std::vector<unsigned> representative(const CycleType& ct);

/// Cycle type of a permutation given by its image vector.
CycleType cycle_type_of(const std::vector<unsigned>& images);

}  // namespace basesize
