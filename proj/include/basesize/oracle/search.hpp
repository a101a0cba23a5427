#pragma once

#include <cstdint>
#include <vector>

#include "basesize/bigint.hpp"
#include "basesize/characters.hpp"
#include "basesize/limits.hpp"
#include "basesize/oracle/action.hpp"

namespace basesize::oracle {

/// Orbit counts on Omega^l by stabilizer-chain descent: a G-orbit on Omega^l
/// is a G-orbit representative w_1, then a G_{w_1}-orbit representative w_2,
/// and so on. Once the stabilizer is trivial every remaining coordinate
/// contributes a factor of |Omega|. `regular` counts orbits whose tuples
/// have trivial stabilizer; `o_K` is computed over the kernel of the labels
/// and is zero when the action is unlabeled.
OrbitReport orbit_counts_bruteforce(const InducedAction& action, unsigned l,
                                    const Limits& limits = default_limits());

BigInt regular_orbits_on_tuples(const InducedAction& action, unsigned l,
                                const Limits& limits = default_limits());

/// Least l such that some l-tuple has trivial pointwise stabilizer.
/// Throws InputError for unfaithful actions.
unsigned base_size_bruteforce(const InducedAction& action, const Limits& limits = default_limits());

struct ControlVerdict {
    bool controlling = true;
    /// Entry set of the first tuple found whose pointwise stabilizer is
    /// nontrivial yet labeled +1 throughout.
    std::vector<std::uint32_t> counterexample;
    std::size_t stabilizer_order = 0;
    /// Labels occurring on the counterexample's stabilizer.
    std::vector<int> label_image;
};

/// Checks that a point set has trivial pointwise stabilizer exactly when the
/// stabilizer is labeled +1 throughout. Requires surjective labels.
ControlVerdict is_base_controlling(const InducedAction& action, const Limits& limits = default_limits());

/// Least c such that some c-coloring of the points has trivial stabilizer
/// (elements preserving every color class).
unsigned distinguishing_number(const InducedAction& action, const Limits& limits = default_limits());

}  // namespace basesize::oracle
