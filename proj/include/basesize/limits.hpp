#pragma once

#include <cstddef>

namespace basesize {

/// Capacity bounds shared by the formula and oracle layers. Exceeding any of
/// them raises CapacityError (or InputError for range preconditions).
struct Limits {
    /// Largest n accepted by the cycle-type enumeration.
    unsigned max_n = 64;
    /// Largest n for which uniform set partitions are enumerated.
    unsigned uniform_ceiling = 16;
    /// Largest group order produced by closure.
    std::size_t max_group_order = 1'000'000;
    /// Largest degree of an induced action built as a full table.
    std::size_t max_induced_degree = 10'000;
    /// Largest degree accepted by the base-controlling subset search.
    std::size_t max_controlling_degree = 24;
    /// Largest m accepted by the distinguishing-number search.
    std::size_t max_distinguishing_degree = 12;
    /// Node budget for tuple-orbit searches.
    std::size_t max_search_nodes = 20'000'000;
};

inline const Limits& default_limits() {
    static const Limits limits{};
    return limits;
}

}  // namespace basesize
