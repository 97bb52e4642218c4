#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "resmax/combinatorics.hpp"
#include "resmax/errors.hpp"
#include "resmax/functions.hpp"
#include "resmax/oracle.hpp"
#include "resmax/rng.hpp"
#include "resmax/subset.hpp"
#include "resmax/text.hpp"
#include "testers.hpp"

using namespace resmax;

TEST_SUITE("rng") {

TEST_CASE("identical seeds give identical streams") {
    Rng a(123), b(123);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
    Rng c(9), d(9);
    for (int i = 0; i < 200; ++i) {
        CHECK(c.next_unit() == d.next_unit());
        CHECK(c.next_index(17) == d.next_index(17));
        CHECK(c.next_normal() == d.next_normal());
    }
    Rng e(1), f(2);
    bool differs = false;
    for (int i = 0; i < 10; ++i) differs = differs || e.next_u64() != f.next_u64();
    CHECK(differs);
}

TEST_CASE("next_unit stays in the half-open unit interval") {
    Rng rng(4);
    for (int i = 0; i < 10000; ++i) {
        double u = rng.next_unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("next_index is uniform enough and in range") {
    Rng rng(11);
    const int n = 8;
    std::vector<int> counts(n, 0);
    const int draws = 80000;
    for (int i = 0; i < draws; ++i) {
        int v = rng.next_index(n);
        REQUIRE(v >= 0);
        REQUIRE(v < n);
        ++counts[static_cast<std::size_t>(v)];
    }
    for (int c : counts) {
        CHECK(c > draws / n * 0.9);
        CHECK(c < draws / n * 1.1);
    }
    CHECK_THROWS_AS(rng.next_index(0), InvalidInputError);
    CHECK_THROWS_AS(rng.next_index(-5), InvalidInputError);
}

TEST_CASE("next_normal has roughly standard moments") {
    Rng rng(21);
    const int draws = 50000;
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < draws; ++i) {
        double x = rng.next_normal();
        sum += x;
        sum_sq += x * x;
    }
    double mean = sum / draws;
    double var = sum_sq / draws - mean * mean;
    CHECK(std::fabs(mean) < 0.02);
    CHECK(std::fabs(var - 1.0) < 0.05);
}

TEST_CASE("mix64 scrambles structured inputs") {
    CHECK(mix64(0) != 0);
    CHECK(mix64(1) != mix64(2));
    CHECK(mix64(1) != 1);
    std::map<uint64_t, int> seen;
    for (uint64_t i = 0; i < 1000; ++i) seen[mix64(i)] = 1;
    CHECK(seen.size() == 1000);
}

}  // TEST_SUITE

TEST_SUITE("combinatorics") {

TEST_CASE("binomial matches an additive Pascal triangle") {
    // Reference built independently by the addition recurrence.
    std::vector<std::vector<uint64_t>> pascal(41);
    for (int n = 0; n <= 40; ++n) {
        pascal[n].assign(static_cast<std::size_t>(n) + 1, 1);
        for (int k = 1; k < n; ++k) {
            pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
        }
    }
    for (int n = 0; n <= 40; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(binomial(n, k) == pascal[n][k]);
        }
    }
}

TEST_CASE("binomial edge cases and saturation") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(15, 7) == 6435);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(4, -2) == 0);
    // C(68, 34) is about 2.8e19, past the 64-bit range.
    CHECK(binomial(68, 34) == UINT64_MAX);
    CHECK(binomial(200, 100) == UINT64_MAX);
    // Symmetry below the saturation point.
    CHECK(binomial(60, 10) == binomial(60, 50));
}

TEST_CASE("combinations come out in lexicographic order") {
    std::vector<std::vector<int>> seen;
    for_each_combination(4, 2, [&](const std::vector<int>& c) {
        seen.push_back(c);
    });
    std::vector<std::vector<int>> expected = {{0, 1}, {0, 2}, {0, 3},
                                              {1, 2}, {1, 3}, {2, 3}};
    CHECK(seen == expected);
}

TEST_CASE("combination counts match binomial") {
    for (int n : {0, 1, 5, 8}) {
        for (int k = 0; k <= n; ++k) {
            uint64_t count = 0;
            std::vector<int> previous;
            bool ordered = true;
            for_each_combination(n, k, [&](const std::vector<int>& c) {
                if (count > 0 && !(previous < c)) ordered = false;
                previous = c;
                ++count;
            });
            CHECK(count == binomial(n, k));
            CHECK(ordered);
        }
    }
    CHECK_THROWS_AS(for_each_combination(3, 4, [](const std::vector<int>&) {}),
                    InvalidInputError);
    CHECK_THROWS_AS(for_each_combination(3, -1, [](const std::vector<int>&) {}),
                    InvalidInputError);
}

}  // TEST_SUITE

TEST_SUITE("text") {

TEST_CASE("format_double uses shortest round-trip form") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(1.5) == "1.5");
    CHECK(format_double(-2.25) == "-2.25");
    CHECK(format_double(0.1) == "0.1");
}

TEST_CASE("format then parse is the identity on doubles") {
    Rng rng(31);
    std::vector<double> values = {0.0,   -0.0,  1.0 / 3.0, 1e300, 1e-300,
                                  2.5e7, 1e-17, 123456.789};
    for (int i = 0; i < 500; ++i) values.push_back(rng.next_normal() * 1e3);
    for (double v : values) {
        double back = parse_double(format_double(v));
        CHECK(back == v);
    }
}

TEST_CASE("parse_double rejects junk") {
    CHECK_THROWS_AS(parse_double(""), ParseError);
    CHECK_THROWS_AS(parse_double("abc"), ParseError);
    CHECK_THROWS_AS(parse_double("1.5x"), ParseError);
    CHECK_THROWS_AS(parse_double(" 1.5"), ParseError);
    CHECK(parse_double("-42.5") == -42.5);
}

TEST_CASE("split preserves empty fields") {
    CHECK(split("a,b,c", ',') == std::vector<std::string>{"a", "b", "c"});
    CHECK(split("", ',') == std::vector<std::string>{""});
    CHECK(split("x,,y", ',') == std::vector<std::string>{"x", "", "y"});
    CHECK(split("tail,", ',') == std::vector<std::string>{"tail", ""});
}

}  // TEST_SUITE

TEST_SUITE("oracle") {

TEST_CASE("evaluate bumps the counter once per call") {
    ModularFunction f({1.0, 2.0, 4.0});
    CHECK(f.eval_count() == 0);
    CHECK(f.evaluate(Subset::empty(3)) == 0.0);
    CHECK(f.eval_count() == 1);
    CHECK(f.evaluate(Subset({0, 2}, 3)) == 5.0);
    CHECK(f.evaluate(Subset({0, 2}, 3)) == 5.0);
    CHECK(f.eval_count() == 3);
}

TEST_CASE("evaluate rejects subsets from another universe") {
    ModularFunction f({1.0, 2.0});
    CHECK_THROWS_AS(f.evaluate(Subset({0}, 3)), InvalidInputError);
}

TEST_CASE("marginal gain value and cost") {
    TabularFunction f = make_example1_function(1.0);
    long long before = f.eval_count();
    // Adding the independent element to the best singleton is worth its
    // full singleton value here.
    double gain = marginal_gain(f, 2, Subset({0}, 3));
    CHECK(gain == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f.eval_count() - before == 2);

    CHECK_THROWS_AS(marginal_gain(f, 0, Subset({0}, 3)), InvalidInputError);
    CHECK_THROWS_AS(marginal_gain(f, 3, Subset({0}, 3)), InvalidInputError);
}

TEST_CASE("memoized oracle is transparent and caches") {
    auto inner = std::make_shared<ModularFunction>(
        std::vector<double>{0.5, 1.5, 2.5, 3.5});
    MemoizedOracle memo(inner);

    Rng rng(8);
    std::vector<Subset> queries;
    for (int i = 0; i < 50; ++i) {
        std::vector<int> members;
        for (int v = 0; v < 4; ++v) {
            if (rng.next_u64() & 1) members.push_back(v);
        }
        queries.emplace_back(members, 4);
    }
    // Repeat everything twice so every subset is a guaranteed hit later.
    std::vector<Subset> sequence = queries;
    sequence.insert(sequence.end(), queries.begin(), queries.end());

    ModularFunction reference({0.5, 1.5, 2.5, 3.5});
    long long distinct = 0;
    {
        std::vector<std::vector<int>> seen;
        for (const Subset& q : sequence) {
            if (std::find(seen.begin(), seen.end(), q.members()) == seen.end()) {
                seen.push_back(q.members());
            }
        }
        distinct = static_cast<long long>(seen.size());
    }

    for (const Subset& q : sequence) {
        CHECK(memo.evaluate(q) == reference.evaluate(q));
    }
    CHECK(memo.eval_count() == static_cast<long long>(sequence.size()));
    CHECK(inner->eval_count() == distinct);
    CHECK(memo.miss_count() == distinct);
    CHECK(memo.hit_count() + memo.miss_count() == memo.eval_count());
}

TEST_CASE("memoized oracle keeps values bit-identical for log-det") {
    LogDetFunction f = random_psd_instance(6, 4, 99);
    MemoizedOracle memo(f);
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        uint32_t mask = static_cast<uint32_t>(rng.next_u64()) & 0x3f;
        Subset s = testutil::subset_from_mask(mask, 6);
        double direct = f.evaluate(s);
        CHECK(memo.evaluate(s) == direct);
        CHECK(memo.evaluate(s) == direct);
    }
}

TEST_CASE("null inner oracle is rejected") {
    CHECK_THROWS_AS(MemoizedOracle(std::shared_ptr<const ObjectiveOracle>()),
                    InvalidInputError);
}

}  // TEST_SUITE
