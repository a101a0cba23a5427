#include "basesize/oracle/action.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "basesize/characters.hpp"
#include "basesize/errors.hpp"

namespace basesize::oracle {

namespace {

void check_degree(std::size_t degree, const Limits& limits) {
    if (degree > limits.max_induced_degree) {
        throw CapacityError("induced degree " + std::to_string(degree) + " exceeds " +
                            std::to_string(limits.max_induced_degree));
    }
}

// Fills the table by mapping each point's encoding through each element and
// looking the canonical image up in `index`.
template <typename Canon>
void build_table(InducedAction& action, const std::map<std::vector<std::uint32_t>, std::uint32_t>& index,
                 Canon canonical_image) {
    const auto& elements = action.group->elements;
    action.table.resize(elements.size() * action.degree);
    for (std::size_t e = 0; e < elements.size(); ++e) {
        for (std::size_t x = 0; x < action.degree; ++x) {
            const auto it = index.find(canonical_image(elements[e], action.points[x]));
            if (it == index.end()) throw ConsistencyError("induced image is not a point of the action");
            action.table[e * action.degree + x] = it->second;
        }
    }
}

}  // namespace

std::size_t identity_index(const LabeledGroup& group) {
    for (std::size_t e = 0; e < group.elements.size(); ++e) {
        if (group.elements[e].is_identity()) return e;
    }
    throw ConsistencyError("group has no identity element");
}

InducedAction natural_action(std::shared_ptr<const LabeledGroup> group) {
    InducedAction action;
    action.degree = group->degree;
    action.points.resize(group->degree);
    for (std::uint32_t x = 0; x < group->degree; ++x) action.points[x] = {x};
    action.table.reserve(group->order() * group->degree);
    for (const auto& g : group->elements) {
        action.table.insert(action.table.end(), g.images().begin(), g.images().end());
    }
    action.description = group->name.empty() ? "group" : group->name;
    action.description += " on " + std::to_string(group->degree) + " points";
    action.group = std::move(group);
    return action;
}

InducedAction act_on_subsets(std::shared_ptr<const LabeledGroup> group, unsigned k, const Limits& limits) {
    const std::size_t d = group->degree;
    if (k < 1 || k > d) throw InputError("subset size k outside [1, degree]");
    const auto count = basesize::binomial(d, k);
    if (!count.fits_ulong_p()) throw CapacityError("too many subsets");
    check_degree(count.get_ui(), limits);

    InducedAction action;
    action.group = group;
    action.degree = count.get_ui();
    action.description = (group->name.empty() ? "group" : group->name) + " on " + std::to_string(k) + "-subsets";

    // Lexicographic k-combinations of 0..d-1.
    std::vector<std::uint32_t> combo(k);
    std::iota(combo.begin(), combo.end(), 0u);
    std::map<std::vector<std::uint32_t>, std::uint32_t> index;
    while (true) {
        index.emplace(combo, static_cast<std::uint32_t>(action.points.size()));
        action.points.push_back(combo);
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && combo[i] == d - k + static_cast<unsigned>(i)) --i;
        if (i < 0) break;
        ++combo[i];
        for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }

    build_table(action, index, [](const Perm& g, const std::vector<std::uint32_t>& subset) {
        std::vector<std::uint32_t> im(subset.size());
        std::transform(subset.begin(), subset.end(), im.begin(), [&](std::uint32_t x) { return g[x]; });
        std::sort(im.begin(), im.end());
        return im;
    });
    return action;
}

InducedAction act_on_uniform_partitions(std::shared_ptr<const LabeledGroup> group, unsigned r, unsigned s,
                                        const Limits& limits) {
    if (group->degree != static_cast<std::size_t>(r) * s) {
        throw InputError("degree " + std::to_string(group->degree) + " is not r*s");
    }
    const auto parts = UniformPartitions::enumerate(r, s, limits);
    check_degree(parts.size(), limits);

    InducedAction action;
    action.group = group;
    action.degree = parts.size();
    action.description = (group->name.empty() ? "group" : group->name) + " on partitions into " +
                         std::to_string(r) + " blocks of size " + std::to_string(s);

    std::map<std::vector<std::uint32_t>, std::uint32_t> index;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        std::vector<std::uint32_t> encoding;
        for (auto mask : parts.partition(p)) {
            for (std::uint32_t x = 0; x < group->degree; ++x) {
                if (mask >> x & 1u) encoding.push_back(x);
            }
        }
        index.emplace(encoding, static_cast<std::uint32_t>(p));
        action.points.push_back(std::move(encoding));
    }

    build_table(action, index, [s](const Perm& g, const std::vector<std::uint32_t>& encoding) {
        std::vector<std::vector<std::uint32_t>> blocks;
        for (std::size_t b = 0; b < encoding.size(); b += s) {
            std::vector<std::uint32_t> block;
            for (std::size_t j = b; j < b + s; ++j) block.push_back(g[encoding[j]]);
            std::sort(block.begin(), block.end());
            blocks.push_back(std::move(block));
        }
        std::sort(blocks.begin(), blocks.end());  // sorted blocks order by minimum
        std::vector<std::uint32_t> out;
        for (const auto& block : blocks) out.insert(out.end(), block.begin(), block.end());
        return out;
    });
    return action;
}

InducedAction product_action_wreath(const InducedAction& inner, unsigned r,
                                    const std::vector<Perm>& top_generators, const Limits& limits) {
    if (r < 1) throw InputError("wreath product needs r >= 1");
    const std::size_t d = inner.degree;
    std::size_t degree = 1;
    for (unsigned i = 0; i < r; ++i) {
        if (degree > limits.max_induced_degree / std::max<std::size_t>(d, 1)) {
            throw CapacityError("product action degree exceeds " + std::to_string(limits.max_induced_degree));
        }
        degree *= d;
    }
    check_degree(degree, limits);

    // Point index of a tuple: base-d digits, first coordinate most significant.
    std::vector<std::vector<std::uint32_t>> tuples(degree, std::vector<std::uint32_t>(r));
    for (std::size_t x = 0; x < degree; ++x) {
        std::size_t rest = x;
        for (unsigned i = r; i-- > 0;) {
            tuples[x][i] = static_cast<std::uint32_t>(rest % d);
            rest /= d;
        }
    }
    auto encode = [&](const std::vector<std::uint32_t>& t) {
        std::size_t x = 0;
        for (auto v : t) x = x * d + v;
        return static_cast<std::uint32_t>(x);
    };

    std::vector<Perm> gens;
    // Base group: each inner generator acting in a single coordinate.
    for (unsigned coord = 0; coord < r; ++coord) {
        for (auto e : inner.group->generators) {
            std::vector<std::uint32_t> images(degree);
            for (std::size_t x = 0; x < degree; ++x) {
                auto t = tuples[x];
                t[coord] = inner.image(e, t[coord]);
                images[x] = encode(t);
            }
            gens.emplace_back(std::move(images));
        }
    }
    // Top group: coordinate permutations.
    std::vector<Perm> tops = top_generators;
    if (tops.empty() && r >= 2) {
        tops.push_back(Perm::from_cycles("(1,2)", r));
        std::vector<std::uint32_t> cycle(r);
        for (unsigned i = 0; i < r; ++i) cycle[i] = (i + 1) % r;
        tops.emplace_back(std::move(cycle));
    }
    for (const auto& sigma : tops) {
        if (sigma.degree() != r) throw InputError("top generator degree must equal r");
        std::vector<std::uint32_t> images(degree);
        for (std::size_t x = 0; x < degree; ++x) {
            std::vector<std::uint32_t> t(r);
            for (unsigned i = 0; i < r; ++i) t[sigma[i]] = tuples[x][i];
            images[x] = encode(t);
        }
        gens.emplace_back(std::move(images));
    }

    auto group = std::make_shared<LabeledGroup>(closure(degree, gens, {}, limits));
    group->name = "(" + inner.description + ") wr " +
                  (top_generators.empty() ? "S_" + std::to_string(r) : "P");
    auto action = natural_action(group);
    action.points = std::move(tuples);
    action.description = group->name + " in product action on " + std::to_string(degree) + " points";
    return action;
}

InducedAction relabel_points(const InducedAction& action, const Perm& relabeling) {
    if (relabeling.degree() != action.degree) throw InputError("relabeling degree mismatch");
    InducedAction out = action;
    const auto inv = relabeling.inverse();
    for (std::size_t e = 0; e < action.order(); ++e) {
        for (std::size_t x = 0; x < action.degree; ++x) {
            out.table[e * action.degree + x] = relabeling[action.image(e, inv[x])];
        }
    }
    for (std::size_t x = 0; x < action.degree; ++x) out.points[relabeling[x]] = action.points[x];
    return out;
}

std::shared_ptr<const LabeledGroup> with_sign_labels(const LabeledGroup& group) {
    auto copy = std::make_shared<LabeledGroup>(group);
    copy->labels.resize(copy->elements.size());
    for (std::size_t e = 0; e < copy->elements.size(); ++e) copy->labels[e] = copy->elements[e].sign();
    return copy;
}

void require_faithful(const InducedAction& action) {
    std::size_t trivial = 0;
    for (std::size_t e = 0; e < action.order(); ++e) {
        const auto row = action.row(e);
        bool fixes_all = true;
        for (std::size_t x = 0; x < action.degree && fixes_all; ++x) fixes_all = row[x] == x;
        if (fixes_all) ++trivial;
    }
    if (trivial != 1) {
        throw InputError(action.description + " is not faithful (kernel of order " +
                         std::to_string(trivial) + ")");
    }
}

}  // namespace basesize::oracle
