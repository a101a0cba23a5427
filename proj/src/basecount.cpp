#include "basesize/basecount.hpp"

#include "basesize/errors.hpp"

namespace basesize {

namespace {

std::string subsets_label(unsigned n, unsigned k) {
    return "S_" + std::to_string(n) + " on " + std::to_string(k) + "-subsets";
}

unsigned long effective_cap(const SearchOptions& options, const BigInt& domain_size) {
    unsigned long cap = domain_size.fits_ulong_p() ? domain_size.get_ui() : ~0ul;
    if (options.max_l) cap = *options.max_l;
    return cap;
}

// Least l >= 1 with <sgn, chi^l> >= threshold, keeping the full trace.
unsigned search(const ClassTable& classes, const CharVector& chi, const BigInt& threshold,
                unsigned long cap, const std::string& what, std::vector<OrbitReport>& trace) {
    PowerSweep sweep(classes, chi);
    while (sweep.l() < cap) {
        trace.push_back(sweep.next());
        if (trace.back().regular >= threshold) return trace.back().l;
    }
    throw CapacityError(what + ": no l <= " + std::to_string(cap) + " reaches threshold " +
                        threshold.get_str());
}

std::optional<unsigned> published_uniform_base_size(unsigned n, unsigned r, unsigned s) {
    if (n == 15 && r == 3 && s == 5) return 3;
    return std::nullopt;
}

}  // namespace

void check_subsets_params(unsigned n, unsigned k, const Limits& limits) {
    if (n > limits.max_n) {
        throw InputError("n = " + std::to_string(n) + " exceeds limit " + std::to_string(limits.max_n));
    }
    if (k == 1 && n >= 2) return;
    if (k >= 2 && n > 2 * k) return;
    throw InputError("need n > 2k >= 2, or k = 1 and n >= 2 (got n = " + std::to_string(n) +
                     ", k = " + std::to_string(k) + ")");
}

BaseSizeReport base_size_subsets(unsigned n, unsigned k, const SearchOptions& options) {
    check_subsets_params(n, k, options.limits);
    const auto classes = class_table(n, options.limits);
    const auto chi = subsets_character(classes, k);

    BaseSizeReport report;
    report.action = subsets_label(n, k);
    report.domain_size = chi.identity_value();
    report.base_size = search(classes, chi, 1, effective_cap(options, report.domain_size),
                              report.action, report.trace);
    return report;
}

BigInt regular_orbit_count(unsigned n, unsigned k, unsigned l, const Limits& limits) {
    check_subsets_params(n, k, limits);
    const auto classes = class_table(n, limits);
    return inner_product(classes, sign_vector(n, limits), subsets_character(classes, k), l);
}

WreathReport base_size_wreath_subsets(unsigned n, unsigned k, const BigInt& distinguishing_number,
                                      const SearchOptions& options) {
    check_subsets_params(n, k, options.limits);
    if (distinguishing_number < 1) throw InputError("distinguishing number must be >= 1");
    const auto classes = class_table(n, options.limits);
    const auto chi = subsets_character(classes, k);

    WreathReport report;
    report.inner_action = subsets_label(n, k);
    report.distinguishing_number = distinguishing_number;
    report.base_size = search(classes, chi, distinguishing_number,
                              effective_cap(options, chi.identity_value()), report.inner_action,
                              report.trace);
    return report;
}

BoundsReport large_base_bounds(unsigned m, unsigned k, unsigned r, const SearchOptions& options) {
    if (m < 1) throw InputError("m must be positive");
    check_subsets_params(m - 1, k, options.limits);
    check_subsets_params(m, k, options.limits);
    if (r < 1) throw InputError("r must be >= 1");

    BoundsReport report;
    {
        const auto classes = class_table(m - 1, options.limits);
        const auto chi = subsets_character(classes, k);
        report.lower = search(classes, chi, 1, effective_cap(options, chi.identity_value()),
                              subsets_label(m - 1, k), report.lower_trace);
    }
    {
        const auto classes = class_table(m, options.limits);
        const auto chi = subsets_character(classes, k);
        report.upper = search(classes, chi, r, effective_cap(options, chi.identity_value()),
                              subsets_label(m, k), report.upper_trace);
    }
    return report;
}

BaseSizeReport base_size_partitions_action(unsigned n, unsigned r, unsigned s,
                                           const SearchOptions& options,
                                           const std::optional<std::filesystem::path>& cache_dir) {
    if (r < 1 || s < 1 || n != r * s) {
        throw InputError("need n = r*s with r, s >= 1 (got n = " + std::to_string(n) +
                         ", r = " + std::to_string(r) + ", s = " + std::to_string(s) + ")");
    }
    const auto parts = cache_dir ? UniformPartitions::load_or_build(r, s, *cache_dir, options.limits)
                                 : UniformPartitions::enumerate(r, s, options.limits);
    const auto classes = class_table(n, options.limits);
    return base_size_partitions_action(classes, uniform_partitions_character(classes, parts), options);
}

BaseSizeReport base_size_partitions_action(const ClassTable& classes, const CharVector& chi,
                                           const SearchOptions& options) {
    if (chi.action.kind != ActionTag::Kind::uniform_partitions) {
        throw InputError("expected a uniform partition character");
    }
    const unsigned n = classes.n;
    const unsigned r = chi.action.r;
    const unsigned s = chi.action.s;

    BaseSizeReport report;
    report.action = "S_" + std::to_string(n) + " on partitions into " + std::to_string(r) +
                    " blocks of size " + std::to_string(s);
    report.domain_size = chi.identity_value();
    report.candidate_only = true;
    report.reference_base_size = published_uniform_base_size(n, r, s);
    report.warnings.push_back(
        "sgn is not known to be base-controlling for this action; the min-l value is a candidate, "
        "not a proven base size");

    // The kernel of the action is a union of classes; any non-identity class
    // fixing every point makes the action unfaithful.
    bool faithful = true;
    for (std::size_t i = 0; i + 1 < chi.values.size(); ++i) {
        if (chi.values[i] == report.domain_size) faithful = false;
    }
    if (!faithful) {
        report.warnings.push_back("action is not faithful; base size is undefined");
        return report;
    }
    if (n < 2) {
        report.base_size = 1;
        return report;
    }

    report.base_size = search(classes, chi, 1, effective_cap(options, report.domain_size),
                              report.action, report.trace);
    if (report.reference_base_size && *report.reference_base_size != *report.base_size) {
        report.warnings.push_back("min-l value " + std::to_string(*report.base_size) +
                                  " differs from the published base size " +
                                  std::to_string(*report.reference_base_size) +
                                  "; sgn is not base-controlling here");
    }
    return report;
}

}  // namespace basesize
