#include <doctest.h>

#include <functional>

#include "basesize/basecount.hpp"
#include "basesize/errors.hpp"
#include "basesize/oracle/search.hpp"

using namespace basesize;

namespace {

// Straight evaluation of the signed partition sum
//   sum_{pi |- n} (-1)^{n - sum c_i} n!/prod(i^c_i c_i!) (sum_{eta |- k} prod_j C(c_j, b_j))^l
// with its own partition recursion, independent of the library's class
// tables and power sweep.
mpz_class signed_partition_sum(unsigned n, unsigned k, unsigned l) {
    auto for_each_multiplicity = [](unsigned m, const std::function<void(const std::vector<unsigned>&)>& f) {
        std::vector<unsigned> c(m + 1, 0);
        std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned max_part) {
            if (rest == 0) {
                f(c);
                return;
            }
            for (unsigned p = 1; p <= std::min(rest, max_part); ++p) {
                ++c[p];
                rec(rest - p, p);
                --c[p];
            }
        };
        rec(m, m);
    };
    mpz_class nfact;
    mpz_fac_ui(nfact.get_mpz_t(), n);
    mpz_class total = 0;
    for_each_multiplicity(n, [&](const std::vector<unsigned>& c) {
        mpz_class denom = 1;
        unsigned cycles = 0;
        for (unsigned i = 1; i <= n; ++i) {
            mpz_class pw, f;
            mpz_ui_pow_ui(pw.get_mpz_t(), i, c[i]);
            mpz_fac_ui(f.get_mpz_t(), c[i]);
            denom *= pw * f;
            cycles += c[i];
        }
        mpz_class chi = 0;
        for_each_multiplicity(k, [&](const std::vector<unsigned>& b) {
            mpz_class term = 1;
            for (unsigned j = 1; j <= k; ++j) {
                mpz_class bin;
                mpz_bin_uiui(bin.get_mpz_t(), j <= n ? c[j] : 0, b[j]);
                term *= bin;
            }
            chi += term;
        });
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), chi.get_mpz_t(), l);
        const mpz_class size = nfact / denom;
        total += ((n - cycles) % 2 == 0 ? 1 : -1) * size * pw;
    });
    return total;
}

oracle::InducedAction subsets_action(unsigned n, unsigned k) {
    auto g = std::make_shared<oracle::LabeledGroup>(oracle::symmetric_group(n));
    return oracle::act_on_subsets(g, k);
}

void check_monotone(const BaseSizeReport& r) {
    REQUIRE(r.base_size);
    REQUIRE(r.trace.size() == *r.base_size);
    for (std::size_t i = 0; i + 1 < r.trace.size(); ++i) CHECK(r.trace[i].regular == 0);
    CHECK(r.trace.back().regular > 0);
}

}  // namespace

TEST_CASE("base_size_subsets for the natural action is n - 1") {
    for (unsigned n = 2; n <= 12; ++n) {
        const auto r = base_size_subsets(n, 1);
        CHECK(*r.base_size == n - 1);
        check_monotone(r);
        if (n <= 7) CHECK(oracle::base_size_bruteforce(subsets_action(n, 1)) == n - 1);
    }
}

TEST_CASE("base_size_subsets (5,2) equals the brute-force base size") {
    const auto r = base_size_subsets(5, 2);
    check_monotone(r);
    CHECK(*r.base_size == oracle::base_size_bruteforce(subsets_action(5, 2)));
}

TEST_CASE("base_size_subsets (15,5) matches direct evaluation of the signed partition sum") {
    const auto r = base_size_subsets(15, 5);
    check_monotone(r);
    unsigned expected = 0;
    for (unsigned l = 1; expected == 0; ++l) {
        if (signed_partition_sum(15, 5, l) != 0) expected = l;
    }
    CHECK(*r.base_size == expected);
    mpz_class fact15;
    mpz_fac_ui(fact15.get_mpz_t(), 15);
    for (const auto& step : r.trace) CHECK(step.regular * fact15 == signed_partition_sum(15, 5, step.l));
}

TEST_CASE("base_size_subsets preconditions and cap") {
    CHECK_THROWS_AS(base_size_subsets(4, 2), InputError);
    CHECK_THROWS_AS(base_size_subsets(1, 1), InputError);
    CHECK_THROWS_AS(base_size_subsets(6, 0), InputError);
    SearchOptions tight;
    tight.max_l = 3;
    CHECK_THROWS_AS(base_size_subsets(6, 1, tight), CapacityError);
    tight.max_l = 5;
    CHECK(*base_size_subsets(6, 1, tight).base_size == 5);
}

TEST_CASE("regular_orbit_count examples") {
    for (unsigned n = 2; n <= 9; ++n) CHECK(regular_orbit_count(n, 1, n - 1) == 1);
    CHECK(regular_orbit_count(4, 1, 2) == 0);
    const auto action = subsets_action(5, 2);
    for (unsigned l = 1; l <= 5; ++l) {
        CHECK(regular_orbit_count(5, 2, l) == oracle::regular_orbits_on_tuples(action, l));
    }
}

TEST_CASE("base_size_wreath_subsets") {
    const auto w = base_size_wreath_subsets(3, 1, 2);
    CHECK(w.base_size == 3);
    REQUIRE(w.trace.size() == 3);
    CHECK(w.trace[1].regular == 1);
    CHECK(w.trace[2].regular == 4);

    for (auto [n, k] : {std::pair{5u, 1u}, {5u, 2u}, {7u, 3u}, {9u, 4u}}) {
        CHECK(base_size_wreath_subsets(n, k, 1).base_size == *base_size_subsets(n, k).base_size);
    }

    auto s4 = std::make_shared<oracle::LabeledGroup>(oracle::symmetric_group(4));
    const auto wreath = oracle::product_action_wreath(oracle::natural_action(s4), 2);
    CHECK(base_size_wreath_subsets(4, 1, 2).base_size == oracle::base_size_bruteforce(wreath));
    CHECK_THROWS_AS(base_size_wreath_subsets(4, 1, 0), InputError);
}

TEST_CASE("large_base_bounds") {
    for (auto [m, k] : {std::pair{5u, 1u}, {7u, 2u}, {9u, 3u}}) {
        const auto b = large_base_bounds(m, k, 1);
        CHECK(b.lower == *base_size_subsets(m - 1, k).base_size);
        CHECK(b.upper == *base_size_subsets(m, k).base_size);
    }

    const auto b = large_base_bounds(5, 1, 2);
    CHECK(b.lower == 3);
    CHECK(b.upper == 5);
    REQUIRE(b.upper_trace.size() == 5);
    CHECK(b.upper_trace[3].regular == 1);
    CHECK(b.upper_trace[4].regular == 11);
    const auto s5 = subsets_action(5, 1);
    CHECK(oracle::regular_orbits_on_tuples(s5, 4) == 1);
    CHECK(oracle::regular_orbits_on_tuples(s5, 5) == 11);

    CHECK(large_base_bounds(6, 1, 2).lower == 4);
    CHECK(oracle::base_size_bruteforce(subsets_action(5, 1)) == 4);

    CHECK_THROWS_AS(large_base_bounds(4, 2, 2), InputError);
    CHECK_THROWS_AS(large_base_bounds(5, 1, 0), InputError);
}

TEST_CASE("base_size_partitions_action is always a flagged candidate") {
    const auto single = base_size_partitions_action(5, 1, 5);
    CHECK_FALSE(single.base_size);
    CHECK(single.candidate_only);
    CHECK(single.domain_size == 1);

    // S_4 on the three pairings has the Klein four-group as kernel.
    CHECK_FALSE(base_size_partitions_action(4, 2, 2).base_size);

    const auto r = base_size_partitions_action(6, 3, 2);
    REQUIRE(r.base_size);
    CHECK(r.candidate_only);
    check_monotone(r);
    auto s6 = std::make_shared<oracle::LabeledGroup>(oracle::symmetric_group(6));
    const auto action = oracle::act_on_uniform_partitions(s6, 3, 2);
    const auto verdict = oracle::is_base_controlling(action);
    const auto brute = oracle::base_size_bruteforce(action);
    // When sgn controls the action the candidate must be exact.
    if (verdict.controlling) CHECK(*r.base_size == brute);
    MESSAGE("S_6 on 15 pairings: candidate " << *r.base_size << ", oracle " << brute
                                             << ", controlling " << verdict.controlling);

    CHECK_THROWS_AS(base_size_partitions_action(6, 2, 2), InputError);
    CHECK_THROWS_AS(base_size_partitions_action(18, 3, 6), CapacityError);
}
