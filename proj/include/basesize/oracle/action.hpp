#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "basesize/limits.hpp"
#include "basesize/oracle/group.hpp"

namespace basesize::oracle {

/// A group acting on an indexed set of points through a full action table.
/// Element e of the parent group sends point x to image(e, x). Labels are
/// carried over from the parent.
struct InducedAction {
    std::shared_ptr<const LabeledGroup> group;
    std::size_t degree = 0;
    /// Canonical encoding of each point: a sorted subset, the concatenated
    /// sorted blocks of a partition, or a coordinate tuple.
    std::vector<std::vector<std::uint32_t>> points;
    /// Row-major, order() rows of `degree` images.
    std::vector<std::uint32_t> table;
    std::string description;

    std::size_t order() const { return group->order(); }
    bool has_labels() const { return group->has_labels(); }
    int label(std::size_t e) const { return group->labels[e]; }
    std::uint32_t image(std::size_t e, std::size_t x) const { return table[e * degree + x]; }
    std::span<const std::uint32_t> row(std::size_t e) const { return {table.data() + e * degree, degree}; }
};

InducedAction natural_action(std::shared_ptr<const LabeledGroup> group);

/// Action on the k-subsets of the group's natural domain, in lexicographic
/// order of sorted subsets.
InducedAction act_on_subsets(std::shared_ptr<const LabeledGroup> group, unsigned k,
                             const Limits& limits = default_limits());

/// Action on partitions of the natural domain into r blocks of size s.
InducedAction act_on_uniform_partitions(std::shared_ptr<const LabeledGroup> group, unsigned r, unsigned s,
                                        const Limits& limits = default_limits());

/// G wr P on Omega^r in product action, where G is `inner` and P <= S_r is
/// generated by `top_generators` (all of S_r when empty). An element
/// (g_1, ..., g_r; sigma) moves coordinate i to position sigma(i) after
/// applying g_i. The result is unlabeled.
InducedAction product_action_wreath(const InducedAction& inner, unsigned r,
                                    const std::vector<Perm>& top_generators = {},
                                    const Limits& limits = default_limits());

/// Same action with points renamed: old point x becomes relabeling[x].
InducedAction relabel_points(const InducedAction& action, const Perm& relabeling);

/// Copy of the group with every element labeled by its sign on the
/// natural domain.
std::shared_ptr<const LabeledGroup> with_sign_labels(const LabeledGroup& group);

/// Throws InputError when some non-identity element fixes every point.
void require_faithful(const InducedAction& action);

/// Index of the identity element in the parent group.
std::size_t identity_index(const LabeledGroup& group);

}  // namespace basesize::oracle
