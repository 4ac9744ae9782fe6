#include <doctest.h>

#include <cmath>
#include <random>
#include <span>
#include <vector>

#include "oracles.hpp"
#include "qrsort/baselines.hpp"

using namespace qrsort;
using test::Tagged;

namespace {

template <class Fn>
std::vector<Element> run(std::vector<Element> a, Fn fn) {
    CostLedger ledger;
    fn(std::span(a), ledger);
    return a;
}

const auto merge = [](std::span<Element> a, CostLedger& l) { merge_sort(a, l); };
const auto quick = [](std::span<Element> a, CostLedger& l) { quicksort(a, l); };
const auto counting = [](std::span<Element> a, CostLedger& l) { counting_sort_value(a, l); };

} // namespace

TEST_CASE("algorithm ids round-trip through their names") {
    for (AlgorithmId id : kAllAlgorithms) CHECK(parse_algorithm(to_string(id)) == id);
    CHECK_FALSE(parse_algorithm("bogo").has_value());
}

TEST_SUITE("merge_sort") {
    TEST_CASE("small and sorted inputs") {
        CHECK(run({3, 1, 2}, merge) == std::vector<Element>{1, 2, 3});
        std::vector<Element> ascending(1024);
        for (std::size_t i = 0; i < ascending.size(); ++i) ascending[i] = static_cast<Element>(i);
        CHECK(run(ascending, merge) == ascending);
        CHECK(run({}, merge).empty());
    }

    TEST_CASE("matches insertion sort and stays stable") {
        std::mt19937_64 rng(41);
        for (int c = 0; c < 1000; ++c) {
            const auto n = std::uniform_int_distribution<std::size_t>(0, 512)(rng);
            const auto values = test::duplicate_heavy(rng, n, -300, 300);
            CHECK(run(values, merge) == test::insertion_sorted(values));
            auto tagged = test::tag(values);
            CostLedger ledger;
            merge_sort(std::span(tagged), ledger, test::by_value);
            REQUIRE(test::stable_order(tagged));
        }
    }
}

TEST_SUITE("quicksort") {
    TEST_CASE("small input") { CHECK(run({3, 1, 2}, quick) == std::vector<Element>{1, 2, 3}); }

    TEST_CASE("all-equal input stays n log n") {
        const std::size_t n = 10'000;
        std::vector<Element> a(n, 7);
        CostLedger ledger;
        quicksort(std::span(a), ledger);
        CHECK(a == std::vector<Element>(n, 7));
        CHECK(total_units(ledger) < 64.0 * n * std::log2(static_cast<double>(n)));
    }

    TEST_CASE("random inputs come out sorted") {
        std::mt19937_64 rng(43);
        for (int c = 0; c < 1000; ++c) {
            const auto n = std::uniform_int_distribution<std::size_t>(0, 2000)(rng);
            const auto values = c % 3 ? test::random_values(rng, n, -1'000'000, 1'000'000)
                                      : test::duplicate_heavy(rng, n, 0, 10);
            REQUIRE(run(values, quick) == test::sorted_copy(values));
        }
    }
}

TEST_SUITE("counting_sort_value") {
    TEST_CASE("range of seven uses eight bins") {
        std::vector<Element> a{7, 2, 0, 5, 3, 1, 6, 4};
        CostLedger ledger;
        counting_sort_value(std::span(a), ledger);
        CHECK(a == std::vector<Element>{0, 1, 2, 3, 4, 5, 6, 7});
        CHECK(ledger.counting_bins == 8);
        CHECK(ledger.counting_passes == 1);
    }

    TEST_CASE("all-equal input uses a single bin") {
        std::vector<Element> a{5, 5, 5};
        CostLedger ledger;
        counting_sort_value(std::span(a), ledger);
        CHECK(a == std::vector<Element>{5, 5, 5});
        CHECK(ledger.counting_bins == 1);
    }

    TEST_CASE("bin cap guard") {
        std::vector<Element> a{0, 1000};
        CostLedger ledger;
        try {
            counting_sort_value(std::span(a), ledger, 1000);
            FAIL("expected range_exceeds_memory");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::range_exceeds_memory);
        }
        CHECK_NOTHROW(counting_sort_value(std::span(a), ledger, 1001));
    }

    TEST_CASE("random inputs match the oracle and stay stable") {
        std::mt19937_64 rng(47);
        for (int c = 0; c < 200; ++c) {
            const auto n = std::uniform_int_distribution<std::size_t>(1, 3000)(rng);
            const auto values = test::random_values(rng, n, -500'000, 499'999);
            REQUIRE(run(values, counting) == test::sorted_copy(values));
            auto tagged = test::tag(test::duplicate_heavy(rng, n, -500, 500));
            CostLedger ledger;
            counting_sort_value(std::span(tagged), ledger, kDefaultBinCap, test::by_value);
            REQUIRE(test::stable_order(tagged));
        }
    }
}

TEST_SUITE("radix_sort_lsd") {
    TEST_CASE("base 10 example takes three passes") {
        std::vector<Element> a{170, 45, 75, 90};
        CostLedger ledger;
        radix_sort_lsd(std::span(a), 10, ledger);
        CHECK(a == std::vector<Element>{45, 75, 90, 170});
        CHECK(ledger.counting_passes == 3);
        CHECK(ledger.divisions == 2 + 3 * 4);
        CHECK(ledger.modulos == 3 * 4);
    }

    TEST_CASE("base above the largest offset is one pass") {
        std::mt19937_64 rng(53);
        for (int c = 0; c < 100; ++c) {
            auto a = test::random_values(rng, 200, 1000, 1099);
            auto b = a;
            CostLedger lr, lc;
            radix_sort_lsd(std::span(a), 100, lr);
            counting_sort_value(std::span(b), lc);
            CHECK(lr.counting_passes == 1);
            CHECK(a == b);
        }
    }

    TEST_CASE("base = n matches the oracle with closed-form pass count") {
        std::mt19937_64 rng(59);
        for (int c = 0; c < 300; ++c) {
            const auto n = std::uniform_int_distribution<std::size_t>(2, 2000)(rng);
            const auto values = test::random_values(rng, n, -1'000'000, 1'000'000);
            auto a = values;
            CostLedger ledger;
            radix_sort_lsd(std::span(a), n, ledger);
            REQUIRE(a == test::sorted_copy(values));

            const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
            const std::uint64_t top = static_cast<std::uint64_t>(*hi - *lo); // m - 1
            // floor(log_n(m - 1)) + 1 by repeated multiplication.
            std::uint64_t passes = 1;
            for (unsigned __int128 p = n; p <= top; p *= n) ++passes;
            REQUIRE(ledger.counting_passes == passes);
        }
    }

    TEST_CASE("stable on duplicates") {
        std::mt19937_64 rng(61);
        for (int c = 0; c < 200; ++c) {
            auto tagged = test::tag(test::duplicate_heavy(rng, 1000, -100'000, 100'000));
            CostLedger ledger;
            radix_sort_lsd(std::span(tagged), 16, ledger, test::by_value);
            REQUIRE(test::stable_order(tagged));
        }
    }

    TEST_CASE("base below two is rejected") {
        std::vector<Element> a{2, 1};
        CostLedger ledger;
        CHECK_THROWS_AS(radix_sort_lsd(std::span(a), 1, ledger), Error);
    }
}

TEST_CASE("pass count drops as n passes each log breakpoint") {
    // 10^6 has four digits in base 100, three in bases 101..1000, two above.
    CHECK(radix_pass_count(1'000'000, 100) == 4);
    CHECK(radix_pass_count(1'000'000, 101) == 3);
    CHECK(radix_pass_count(1'000'000, 999) == 3);
    CHECK(radix_pass_count(1'000'000, 1000) == 3);
    CHECK(radix_pass_count(1'000'000, 1001) == 2);
    CHECK(radix_pass_count(0, 2) == 1);
}
