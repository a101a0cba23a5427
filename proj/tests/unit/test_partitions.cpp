#include <doctest.h>

#include <map>
#include <set>

#include "basesize/errors.hpp"
#include "basesize/partitions.hpp"
#include "test_oracles.hpp"

using namespace basesize;

TEST_CASE("enumerate_cycle_types counts match the pentagonal recurrence") {
    const auto p = testref::partition_numbers(30);
    CHECK(p[4] == 5);
    CHECK(p[15] == 176);
    for (unsigned n = 1; n <= 30; ++n) {
        CHECK(enumerate_cycle_types(n).size() == p[n].get_ui());
    }
}

TEST_CASE("enumerate_cycle_types order and edge cases") {
    const auto one = enumerate_cycle_types(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].count(1) == 1);

    const auto four = enumerate_cycle_types(4);
    std::vector<std::vector<unsigned>> parts;
    for (const auto& ct : four) parts.push_back(ct.parts());
    CHECK(parts == std::vector<std::vector<unsigned>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});

    CHECK_THROWS_AS(enumerate_cycle_types(0), InputError);
    CHECK_THROWS_AS(enumerate_cycle_types(65), InputError);
    Limits small;
    small.max_n = 10;
    CHECK_THROWS_AS(enumerate_cycle_types(11, small), InputError);
}

TEST_CASE("enumeration has no duplicates and every item is valid") {
    for (unsigned n = 1; n <= 20; ++n) {
        std::set<std::vector<unsigned>> seen;
        for (const auto& ct : enumerate_cycle_types(n)) {
            unsigned total = 0;
            for (unsigned i = 1; i <= n; ++i) total += i * ct.count(i);
            CHECK(total == n);
            CHECK(ct.counts().size() == n);
            CHECK(seen.insert(ct.counts()).second);
        }
    }
}

TEST_CASE("largest-part slices concatenate to the full enumeration") {
    for (unsigned n : {1u, 5u, 12u}) {
        std::vector<CycleType> joined;
        for (unsigned m = n; m >= 1; --m) {
            auto slice = cycle_types_with_largest_part(n, m);
            joined.insert(joined.end(), slice.begin(), slice.end());
        }
        CHECK(joined == enumerate_cycle_types(n));
    }
}

TEST_CASE("class_size examples") {
    CHECK(class_size(CycleType::identity(4)) == 1);
    CHECK(class_size(CycleType::from_counts(4, {0, 2})) == 3);
    CHECK(class_size(CycleType::from_counts(3, {0, 0, 1})) == 2);
    CHECK_THROWS_AS(CycleType::from_counts(4, {1, 2}), InputError);
    CHECK_THROWS_AS(CycleType::from_counts(4, {0, 0, 0, 0, 1}), InputError);
}

TEST_CASE("class sizes and signs agree with brute force over S_n, n <= 7") {
    for (unsigned n = 1; n <= 7; ++n) {
        std::map<std::vector<unsigned>, std::pair<unsigned, int>> brute;
        testref::for_each_perm(n, [&](const std::vector<unsigned>& p) {
            auto& entry = brute[testref::sorted_cycle_lengths(p)];
            ++entry.first;
            entry.second = testref::parity(p);
        });
        const auto types = enumerate_cycle_types(n);
        CHECK(types.size() == brute.size());
        for (const auto& ct : types) {
            const auto& [count, sign] = brute.at(ct.parts());
            CHECK(class_size(ct) == count);
            CHECK(sign_of(ct) == sign);
        }
    }
}

TEST_CASE("sign_of examples") {
    CHECK(sign_of(CycleType::identity(7)) == 1);
    CHECK(sign_of(CycleType::from_counts(4, {2, 1})) == -1);
    CHECK(sign_of(CycleType::from_counts(4, {0, 2})) == 1);
}

TEST_CASE("class sums: sizes add to n! and signed sizes cancel") {
    for (unsigned n = 1; n <= 25; ++n) {
        const auto table = class_table(n);
        BigInt total = 0;
        BigInt signed_total = 0;
        for (const auto& c : table.classes) {
            CHECK(table.group_order % c.size == 0);
            total += c.size;
            signed_total += c.sign * c.size;
        }
        CHECK(total == factorial(n));
        if (n >= 2) CHECK(signed_total == 0);
    }
}

TEST_CASE("representative has the requested cycle type, longest cycles first") {
    for (const auto& ct : enumerate_cycle_types(9)) {
        const auto rep = representative(ct);
        CHECK(cycle_type_of(rep) == ct);
    }
    const auto rep = representative(CycleType::from_parts({1, 3, 2}));
    CHECK(rep == std::vector<unsigned>{1, 2, 0, 4, 3, 5});
    CHECK_THROWS_AS(cycle_type_of({0, 0}), InputError);
}
