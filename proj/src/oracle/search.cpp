#include "basesize/oracle/search.hpp"

#include <algorithm>
#include <functional>

#include "basesize/errors.hpp"

namespace basesize::oracle {

namespace {

using Subgroup = std::vector<std::uint32_t>;

class Descent {
public:
    Descent(const InducedAction& action, const Limits& limits) : action_(action), limits_(limits) {}

    void tick() {
        if (++nodes_ > limits_.max_search_nodes) {
            throw CapacityError("tuple search exceeded " + std::to_string(limits_.max_search_nodes) +
                                " nodes");
        }
    }

    Subgroup stabilizer(const Subgroup& h, std::uint32_t point) const {
        Subgroup out;
        for (auto e : h) {
            if (action_.image(e, point) == point) out.push_back(e);
        }
        return out;
    }

    /// Smallest point of each orbit of `h`, ascending, paired with orbit size.
    std::vector<std::pair<std::uint32_t, std::size_t>> orbit_reps(const Subgroup& h) {
        std::vector<std::pair<std::uint32_t, std::size_t>> reps;
        seen_.assign(action_.degree, 0);
        for (std::uint32_t x = 0; x < action_.degree; ++x) {
            if (seen_[x]) continue;
            std::size_t size = 0;
            for (auto e : h) {
                const auto y = action_.image(e, x);
                if (!seen_[y]) {
                    seen_[y] = 1;
                    ++size;
                }
            }
            reps.emplace_back(x, size);
        }
        return reps;
    }

    void count(const Subgroup& h, unsigned left, BigInt& all, BigInt& regular) {
        tick();
        if (left == 0) {
            all += 1;
            if (h.size() == 1) regular += 1;
            return;
        }
        if (h.size() == 1) {
            BigInt tail;
            mpz_ui_pow_ui(tail.get_mpz_t(), action_.degree, left);
            all += tail;
            regular += tail;
            return;
        }
        for (const auto& [p, size] : orbit_reps(h)) count(stabilizer(h, p), left - 1, all, regular);
    }

    bool base_within(const Subgroup& h, unsigned left) {
        tick();
        if (h.size() == 1) return true;
        if (left == 0) return false;
        for (const auto& [p, size] : orbit_reps(h)) {
            if (size > 1 && base_within(stabilizer(h, p), left - 1)) return true;
        }
        return false;
    }

private:
    const InducedAction& action_;
    const Limits& limits_;
    std::size_t nodes_ = 0;
    std::vector<char> seen_;
};

Subgroup whole(const InducedAction& action) {
    Subgroup all(action.order());
    for (std::uint32_t e = 0; e < all.size(); ++e) all[e] = e;
    return all;
}

Subgroup kernel(const InducedAction& action) {
    Subgroup k;
    for (std::uint32_t e = 0; e < action.order(); ++e) {
        if (action.label(e) == 1) k.push_back(e);
    }
    return k;
}

}  // namespace

OrbitReport orbit_counts_bruteforce(const InducedAction& action, unsigned l, const Limits& limits) {
    OrbitReport report;
    report.l = l;
    report.method = Method::oracle;
    Descent(action, limits).count(whole(action), l, report.o, report.regular);
    if (action.has_labels()) {
        BigInt unused;
        Descent(action, limits).count(kernel(action), l, report.o_K, unused);
    }
    return report;
}

BigInt regular_orbits_on_tuples(const InducedAction& action, unsigned l, const Limits& limits) {
    BigInt all;
    BigInt regular;
    Descent(action, limits).count(whole(action), l, all, regular);
    return regular;
}

unsigned base_size_bruteforce(const InducedAction& action, const Limits& limits) {
    require_faithful(action);
    if (action.order() == 1) return 0;
    Descent descent(action, limits);
    const auto g = whole(action);
    for (unsigned l = 1; l <= action.degree; ++l) {
        if (descent.base_within(g, l)) return l;
    }
    throw ConsistencyError("faithful action without a base of length <= degree");
}

ControlVerdict is_base_controlling(const InducedAction& action, const Limits& limits) {
    if (!action.has_labels()) throw InputError("base-controlling check needs labels");
    if (action.degree > limits.max_controlling_degree) {
        throw CapacityError("base-controlling search capped at degree " +
                            std::to_string(limits.max_controlling_degree));
    }
    const auto& labels = action.group->labels;
    if (std::find(labels.begin(), labels.end(), -1) == labels.end()) {
        throw InputError("labels are all +1; the check is degenerate");
    }
    require_faithful(action);

    // Stabilizers of G-equivalent tuples are conjugate, so descending through
    // orbit representatives of the current stabilizer visits every
    // stabilizer up to conjugacy. Points fixed by the current stabilizer do
    // not change it and are skipped.
    ControlVerdict verdict;
    Descent descent(action, limits);
    std::vector<std::uint32_t> chosen;
    std::function<bool(const Subgroup&)> visit = [&](const Subgroup& h) {
        descent.tick();
        if (h.size() == 1) return false;
        const bool has_odd =
            std::any_of(h.begin(), h.end(), [&](std::uint32_t e) { return action.label(e) == -1; });
        if (!has_odd) {
            verdict.controlling = false;
            verdict.counterexample = chosen;
            std::sort(verdict.counterexample.begin(), verdict.counterexample.end());
            verdict.stabilizer_order = h.size();
            verdict.label_image = {1};
            return true;
        }
        for (const auto& [p, size] : descent.orbit_reps(h)) {
            if (size == 1) continue;
            chosen.push_back(p);
            const bool found = visit(descent.stabilizer(h, p));
            chosen.pop_back();
            if (found) return true;
        }
        return false;
    };
    visit(whole(action));
    return verdict;
}

unsigned distinguishing_number(const InducedAction& action, const Limits& limits) {
    const std::size_t m = action.degree;
    if (m > limits.max_distinguishing_degree) {
        throw CapacityError("distinguishing number search capped at m = " +
                            std::to_string(limits.max_distinguishing_degree));
    }
    require_faithful(action);
    if (action.order() == 1 || m == 0) return 1;

    std::vector<std::vector<std::uint32_t>> inverse(action.order(), std::vector<std::uint32_t>(m));
    for (std::size_t e = 0; e < action.order(); ++e) {
        for (std::uint32_t x = 0; x < m; ++x) inverse[e][action.image(e, x)] = x;
    }

    std::vector<unsigned> color(m, 0);
    // Assign colors to points 0..m-1 as a restricted growth string, keeping
    // the elements still consistent with the partial coloring.
    std::function<bool(std::uint32_t, unsigned, unsigned, const Subgroup&)> extend =
        [&](std::uint32_t i, unsigned used, unsigned colors, const Subgroup& cand) {
            if (cand.size() == 1) return true;
            if (i == m) return false;
            for (unsigned c = 0; c < std::min(used + 1, colors); ++c) {
                color[i] = c;
                Subgroup next;
                for (auto e : cand) {
                    const auto fwd = action.image(e, i);
                    const auto back = inverse[e][i];
                    if (fwd <= i && color[fwd] != c) continue;
                    if (back < i && color[back] != c) continue;
                    next.push_back(e);
                }
                if (extend(i + 1, std::max(used, c + 1), colors, next)) return true;
            }
            return false;
        };

    Subgroup all(action.order());
    for (std::uint32_t e = 0; e < all.size(); ++e) all[e] = e;
    for (unsigned colors = 1; colors <= m; ++colors) {
        if (extend(0, 0, colors, all)) return colors;
    }
    throw ConsistencyError("faithful action without a distinguishing coloring");
}

}  // namespace basesize::oracle
