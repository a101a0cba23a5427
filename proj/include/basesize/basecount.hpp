#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "basesize/bigint.hpp"
#include "basesize/characters.hpp"
#include "basesize/limits.hpp"

namespace basesize {

struct SearchOptions {
    /// Largest l tried before giving up with CapacityError. Defaults to the
    /// domain size of the action.
    std::optional<unsigned long> max_l;
    Limits limits;
};

/// Result of a min-l search over <phi, chi^l>.
///
/// For the subset actions sgn is base-controlling, so `base_size` is the
/// true base size and `trace[l-1].regular` the number of regular orbits on
/// Omega^l. For uniform partition actions the value is only a candidate and
/// `candidate_only` is set.
struct BaseSizeReport {
    std::string action;
    BigInt domain_size;
    /// Absent when the action is not faithful.
    std::optional<unsigned> base_size;
    /// One entry per l = 1..base_size.
    std::vector<OrbitReport> trace;
    Method method = Method::formula;
    bool candidate_only = false;
    /// A published base size for this action, when one is known.
    std::optional<unsigned> reference_base_size;
    std::vector<std::string> warnings;
};

struct WreathReport {
    std::string inner_action;
    BigInt distinguishing_number;
    unsigned base_size = 0;
    /// Counts <sgn, chi^l> for l = 1..base_size.
    std::vector<OrbitReport> trace;
};

struct BoundsReport {
    unsigned lower = 0;
    unsigned upper = 0;
    std::vector<OrbitReport> lower_trace;  // S_{m-1} on k-subsets
    std::vector<OrbitReport> upper_trace;  // S_m on k-subsets
};

/// Throws InputError unless k = 1 and n >= 2, or n > 2k >= 2.
void check_subsets_params(unsigned n, unsigned k, const Limits& limits = default_limits());

BaseSizeReport base_size_subsets(unsigned n, unsigned k, const SearchOptions& options = {});

/// <sgn, chi^l> for S_n on k-subsets: the number of regular orbits on Omega^l.
BigInt regular_orbit_count(unsigned n, unsigned k, unsigned l, const Limits& limits = default_limits());

/// Least l with <sgn, chi^l> >= distinguishing_number: the base size of
/// S_{n,k} wr P in product action when D(P) = distinguishing_number.
WreathReport base_size_wreath_subsets(unsigned n, unsigned k, const BigInt& distinguishing_number,
                                      const SearchOptions& options = {});

/// lower = b(S_{m-1,k}); upper = least l with <sgn, chi_m^l> >= r.
BoundsReport large_base_bounds(unsigned m, unsigned k, unsigned r, const SearchOptions& options = {});

/// Least l with <sgn, chi^l> != 0 for S_n on partitions into r blocks of
/// size s. Always marked candidate_only: sgn need not be base-controlling
/// for this action.
BaseSizeReport base_size_partitions_action(unsigned n, unsigned r, unsigned s,
                                           const SearchOptions& options = {},
                                           const std::optional<std::filesystem::path>& cache_dir = {});

/// Same, reusing an already computed class table and character.
BaseSizeReport base_size_partitions_action(const ClassTable& classes, const CharVector& chi,
                                           const SearchOptions& options = {});

}  // namespace basesize
