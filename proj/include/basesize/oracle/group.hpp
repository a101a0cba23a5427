#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "basesize/limits.hpp"
#include "basesize/oracle/perm.hpp"

namespace basesize::oracle {

/// A finite permutation group stored as its full element list, optionally
/// carrying a homomorphism to {+1, -1} as per-element labels.
struct LabeledGroup {
    std::size_t degree = 0;
    std::vector<Perm> elements;
    /// labels[i] is the label of elements[i]; empty when unlabeled.
    std::vector<int> labels;
    /// Indices into `elements` of the generators the closure started from.
    std::vector<std::size_t> generators;
    std::string name;

    std::size_t order() const { return elements.size(); }
    bool has_labels() const { return !labels.empty(); }
    /// Order of the kernel of the labeling (elements labeled +1).
    std::size_t kernel_order() const;
};

/// Closure of `generators` under multiplication. `labels`, when non-empty,
/// gives one label per generator and is extended multiplicatively.
///
/// Throws CapacityError past limits.max_group_order and InputError when the
/// same element is reached with both labels (the labels do not define a
/// homomorphism).
LabeledGroup closure(std::size_t degree, const std::vector<Perm>& generators,
                     const std::vector<int>& labels = {}, const Limits& limits = default_limits());

/// S_n on [n], generated by (1,2) and (1,...,n), labeled by sign.
LabeledGroup symmetric_group(std::size_t n, const Limits& limits = default_limits());

/// A_n on [n], labeled by sign (hence all +1).
LabeledGroup alternating_group(std::size_t n, const Limits& limits = default_limits());

/// Label of the Moebius map x -> (ax+b)/(cx+d) over F_q: +1 iff ad - bc is
/// a nonzero square mod q.
int mobius_label(long a, long b, long c, long d, unsigned q);

/// Image of projective point x under x -> (ax+b)/(cx+d). Points 0..q-1 are
/// field elements and q is infinity.
std::uint32_t mobius_apply(long a, long b, long c, long d, unsigned q, std::uint32_t x);

/// PGL_2(q) on the q+1 points of the projective line, q an odd prime <= 31,
/// labeled +1 exactly on PSL_2(q) (determinant a square).
LabeledGroup pgl2(unsigned q, const Limits& limits = default_limits());

/// Checks label(gh) = label(g) label(h) on `samples` random pairs.
bool spot_check_labels(const LabeledGroup& group, std::size_t samples, std::uint64_t seed);

}  // namespace basesize::oracle
