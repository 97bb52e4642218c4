#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "resmax/adversary.hpp"
#include "resmax/analysis.hpp"
#include "resmax/combinatorics.hpp"
#include "resmax/errors.hpp"
#include "resmax/functions.hpp"
#include "resmax/rng.hpp"
#include "resmax/solvers.hpp"
#include "resmax/subset.hpp"
#include "testers.hpp"

using namespace resmax;

namespace {

void check_result_shape(const SolveResult& result, int alpha, int beta) {
    CHECK(result.selected.size() == alpha);
    CHECK(result.selected == result.a1.union_with(result.a2));
    CHECK(result.a1.intersect(result.a2) == Subset::empty(
              result.selected.parent_size()));
    CHECK(result.worst_removal.removed.size() ==
          std::min(beta, result.selected.size()));
    CHECK(result.worst_removal.removed.is_subset_of(result.selected));
    CHECK(result.residual_value == result.worst_removal.residual_value);
}

}  // namespace

TEST_SUITE("solvers") {

TEST_CASE("problem instances validate their shape") {
    ModularFunction f({1.0, 2.0, 3.0});
    CHECK_NOTHROW(ProblemInstance(f, 3, 0));
    CHECK_NOTHROW(ProblemInstance(f, 2, 2));
    CHECK_THROWS_AS(ProblemInstance(f, 2, -1), InvalidInputError);
    CHECK_THROWS_AS(ProblemInstance(f, 1, 2), InvalidInputError);
    CHECK_THROWS_AS(ProblemInstance(f, 4, 1), InvalidInputError);
}

TEST_CASE("plain greedy picks the top weights of a modular function") {
    ModularFunction f({1.0, 6.0, 2.0, 5.0, 4.0});
    Subset picked = plain_greedy(f, Subset::full(5), 3);
    CHECK(picked == Subset({1, 3, 4}, 5));

    // Restricting the candidate pool restricts the answer.
    Subset pool({0, 2, 4}, 5);
    CHECK(plain_greedy(f, pool, 2) == Subset({2, 4}, 5));
    CHECK(plain_greedy(f, pool, 0) == Subset::empty(5));
}

TEST_CASE("plain greedy breaks ties toward smaller indices") {
    ModularFunction f({1.0, 2.0, 2.0, 0.5});
    CHECK(plain_greedy(f, Subset::full(4), 2) == Subset({1, 2}, 4));
    ModularFunction uniform({3.0, 3.0, 3.0});
    CHECK(plain_greedy(uniform, Subset::full(3), 2) == Subset({0, 1}, 3));
}

TEST_CASE("plain greedy spends one evaluation per candidate per round") {
    ModularFunction f({1.0, 2.0, 3.0, 4.0, 5.0, 6.0});
    long long before = f.eval_count();
    plain_greedy(f, Subset::full(6), 3);
    CHECK(f.eval_count() - before == 6 + 5 + 4);
}

TEST_CASE("plain greedy rejects bad arguments") {
    ModularFunction f({1.0, 2.0, 3.0});
    CHECK_THROWS_AS(plain_greedy(f, Subset::full(3), -1), InvalidInputError);
    CHECK_THROWS_AS(plain_greedy(f, Subset({0}, 3), 2), InvalidInputError);
    CHECK_THROWS_AS(plain_greedy(f, Subset::full(4), 1), InvalidInputError);
}

TEST_CASE("plain greedy meets the classic approximation factor") {
    const double factor = 1.0 - std::exp(-1.0);
    Rng rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        int m = 4 + rng.next_index(4);
        WeightedCoverageFunction f = testutil::random_coverage(rng, m);
        int k = 1 + rng.next_index(m - 1);
        Subset picked = plain_greedy(f, Subset::full(m), k);
        double best = testutil::brute_force_max_value(
            f, k, (uint32_t{1} << m) - 1u);
        CHECK(f.evaluate(picked) >= factor * best - 1e-9);
    }
}

TEST_CASE("two-phase solver on the worked example") {
    TabularFunction f = make_example1_function(1.0);
    ProblemInstance instance(f, 2, 1);
    SolveResult result = resilient_greedy(instance);
    CHECK(result.solver_name == "resilient");
    CHECK(result.a1 == Subset({0}, 3));
    CHECK(result.a2 == Subset({1}, 3));
    CHECK(result.selected == Subset({0, 1}, 3));
    CHECK(result.worst_removal.removed == Subset({0}, 3));
    CHECK(result.residual_value == 1.5);
    CHECK(result.worst_removal.exact);
    // 3 singleton rankings plus one greedy round over 2 candidates.
    CHECK(result.eval_count == 5);
    CHECK(result.worst_removal.eval_count_used == 2);
    check_result_shape(result, 2, 1);
}

TEST_CASE("phase one always takes the individually best elements") {
    Rng rng(55);
    for (int trial = 0; trial < 20; ++trial) {
        int m = 5 + rng.next_index(5);
        WeightedCoverageFunction f = testutil::random_coverage(rng, m);
        int beta = 1 + rng.next_index(3);
        int alpha = beta + rng.next_index(m - beta + 1);
        if (alpha > m) alpha = m;
        ProblemInstance instance(f, alpha, beta);
        SolveResult result = resilient_greedy(instance);
        check_result_shape(result, alpha, beta);

        // Reference ranking: sort singleton values, stable on index.
        std::vector<double> singleton(static_cast<std::size_t>(m));
        for (int v = 0; v < m; ++v) {
            singleton[static_cast<std::size_t>(v)] =
                f.evaluate(Subset({v}, m));
        }
        std::vector<int> order(static_cast<std::size_t>(m));
        for (int v = 0; v < m; ++v) order[static_cast<std::size_t>(v)] = v;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return singleton[static_cast<std::size_t>(a)] >
                   singleton[static_cast<std::size_t>(b)];
        });
        Subset expected_a1(std::vector<int>(order.begin(),
                                            order.begin() + beta), m);
        CHECK(result.a1 == expected_a1);
    }
}

TEST_CASE("phase-one ties keep the smallest indices") {
    ModularFunction f({2.0, 2.0, 1.0, 2.0});
    ProblemInstance instance(f, 3, 2);
    SolveResult result = resilient_greedy(instance);
    CHECK(result.a1 == Subset({0, 1}, 4));
}

TEST_CASE("a zero removal budget reduces to plain greedy") {
    Rng rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        int m = 4 + rng.next_index(4);
        TabularFunction f = testutil::random_concave_tabular(rng, m);
        int alpha = 1 + rng.next_index(m);
        ProblemInstance instance(f, alpha, 0);
        SolveResult result = resilient_greedy(instance);
        CHECK(result.a1 == Subset::empty(m));
        CHECK(result.selected == plain_greedy(f, Subset::full(m), alpha));
        CHECK(result.residual_value == f.evaluate(result.selected));
        CHECK(result.worst_removal.eval_count_used == 1);
    }
}

TEST_CASE("when the budget equals the selection size everything dies") {
    ModularFunction f({4.0, 3.0, 2.0, 1.0});
    ProblemInstance instance(f, 2, 2);
    SolveResult result = resilient_greedy(instance);
    CHECK(result.a1 == Subset({0, 1}, 4));
    CHECK(result.a2 == Subset::empty(4));
    CHECK(result.worst_removal.removed == result.selected);
    CHECK(result.residual_value == 0.0);
}

TEST_CASE("single-element universe") {
    ModularFunction f({2.0});
    SolveResult all_gone = resilient_greedy(ProblemInstance(f, 1, 1));
    CHECK(all_gone.selected == Subset({0}, 1));
    CHECK(all_gone.residual_value == 0.0);
    SolveResult kept = resilient_greedy(ProblemInstance(f, 1, 0));
    CHECK(kept.residual_value == 2.0);
}

TEST_CASE("selection stays within the stated evaluation budget") {
    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        int m = 3 + rng.next_index(8);
        ModularFunction f = testutil::random_modular(rng, m);
        int beta = rng.next_index(std::min(m, 4));
        int alpha = beta + rng.next_index(m - beta + 1);
        ProblemInstance instance(f, alpha, beta);
        long long before = f.eval_count();
        SolveResult result = resilient_greedy(instance);
        long long spent = result.eval_count;
        CHECK(spent <= static_cast<long long>(m) +
                           static_cast<long long>(m) * (alpha - beta) +
                           (alpha - beta));
        // Exact accounting: the ranking pass plus one evaluation per
        // surviving candidate per greedy round.
        long long expected = m;
        for (int round = 0; round < alpha - beta; ++round) {
            expected += (m - beta) - round;
        }
        CHECK(spent == expected);
        CHECK(f.eval_count() - before ==
              spent + result.worst_removal.eval_count_used);
    }
}

TEST_CASE("the solver is deterministic") {
    LogDetFunction f = random_psd_instance(9, 5, 314);
    ProblemInstance instance(f, 5, 2);
    SolveResult first = resilient_greedy(instance);
    SolveResult second = resilient_greedy(instance);
    CHECK(first.selected == second.selected);
    CHECK(first.a1 == second.a1);
    CHECK(first.residual_value == second.residual_value);
    CHECK(first.eval_count == second.eval_count);
}

TEST_CASE("positive scaling leaves the chosen sets unchanged") {
    LogDetFunction f = random_psd_instance(8, 4, 2718);
    testutil::ScaledOracle scaled(f, 3.7);
    ProblemInstance plain_instance(f, 4, 1);
    ProblemInstance scaled_instance(scaled, 4, 1);
    SolveResult plain = resilient_greedy(plain_instance);
    SolveResult scaled_result = resilient_greedy(scaled_instance);
    CHECK(plain.selected == scaled_result.selected);
    CHECK(plain.a1 == scaled_result.a1);
    CHECK(plain.worst_removal.removed == scaled_result.worst_removal.removed);
    CHECK(scaled_result.residual_value ==
          doctest::Approx(3.7 * plain.residual_value).epsilon(1e-12));
}

TEST_CASE("exhaustive solver on the worked example") {
    TabularFunction f = make_example1_function(1.0);
    ProblemInstance instance(f, 2, 1);
    SolveResult result = exact_maxmin(instance);
    CHECK(result.solver_name == "exact");
    CHECK(result.selected == Subset({0, 1}, 3));
    CHECK(result.residual_value == 1.5);
    CHECK(result.a1 == Subset::empty(3));
    CHECK(result.a2 == result.selected);
    CHECK(result.worst_removal.exact);
    // 3 two-element candidates, each certified with 2 evaluations.
    CHECK(result.eval_count == 6);
}

TEST_CASE("exhaustive solver has a modular closed form") {
    std::vector<double> weights{3.0, 9.5, 1.5, 7.0, 6.0, 2.5, 8.0, 4.0};
    ModularFunction f(weights);
    ProblemInstance instance(f, 4, 2);
    long long before = f.eval_count();
    SolveResult result = exact_maxmin(instance);
    // Best play: take the four largest weights 9.5, 8.0, 7.0, 6.0; the
    // adversary deletes the two largest, leaving 7.0 + 6.0.
    CHECK(result.selected == Subset({1, 3, 4, 6}, 8));
    CHECK(result.residual_value == doctest::Approx(13.0).epsilon(1e-12));
    CHECK(static_cast<uint64_t>(result.eval_count) ==
          binomial(8, 4) * binomial(4, 2));
    CHECK(f.eval_count() - before == result.eval_count);
}

TEST_CASE("exhaustive solver matches a brute-force reference") {
    Rng rng(4242);
    for (int trial = 0; trial < 30; ++trial) {
        int m = 3 + rng.next_index(5);
        int alpha = 1 + rng.next_index(m);
        int beta = rng.next_index(alpha + 1);
        SolveResult result;
        testutil::BruteForceResult reference;
        if (trial % 3 == 0) {
            ModularFunction f = testutil::random_modular(rng, m);
            result = exact_maxmin(ProblemInstance(f, alpha, beta));
            reference = testutil::brute_force_maxmin(f, alpha, beta);
        } else if (trial % 3 == 1) {
            WeightedCoverageFunction f = testutil::random_coverage(rng, m);
            result = exact_maxmin(ProblemInstance(f, alpha, beta));
            reference = testutil::brute_force_maxmin(f, alpha, beta);
        } else {
            TabularFunction f = testutil::random_concave_tabular(rng, m);
            result = exact_maxmin(ProblemInstance(f, alpha, beta));
            reference = testutil::brute_force_maxmin(f, alpha, beta);
        }
        // The reference also considers smaller selections, but a larger
        // set never hurts under a monotone objective, so the values
        // agree.
        CHECK(result.residual_value ==
              doctest::Approx(reference.value).epsilon(1e-12));
    }
}

TEST_CASE("exhaustive solver ties pick the lexicographically first set") {
    ModularFunction f({1.0, 1.0, 1.0, 1.0, 1.0});
    SolveResult result = exact_maxmin(ProblemInstance(f, 3, 1));
    CHECK(result.selected == Subset({0, 1, 2}, 5));
}

TEST_CASE("exhaustive solver refuses oversized enumerations") {
    ModularFunction f(std::vector<double>(24, 1.0));
    ProblemInstance instance(f, 12, 6);
    long long before = f.eval_count();
    CHECK_THROWS_AS(exact_maxmin(instance), CapacityError);
    // The check happens before any oracle work.
    CHECK(f.eval_count() == before);
    ModularFunction small({1.0, 2.0, 3.0, 4.0});
    CHECK_THROWS_AS(exact_maxmin(ProblemInstance(small, 2, 1), 5),
                    CapacityError);
}

TEST_CASE("phase two satisfies the greedy chain against the optimum") {
    const double factor = 1.0 - std::exp(-1.0);
    Rng rng(606);
    for (int trial = 0; trial < 20; ++trial) {
        int m = 5 + rng.next_index(3);
        WeightedCoverageFunction f = testutil::random_coverage(rng, m);
        int beta = 1 + rng.next_index(2);
        int alpha = beta + 1 + rng.next_index(m - beta - 1);
        ProblemInstance instance(f, alpha, beta);
        SolveResult result = resilient_greedy(instance);

        // The phase-two set is greedy over the pool left after phase
        // one, so it carries the classic factor against the best
        // equal-sized set in that pool, which in turn is at least the
        // best residual anyone can guarantee.
        uint32_t pool_mask = result.a1.complement().to_mask();
        double best_in_pool = testutil::brute_force_max_value(
            f, alpha - beta, pool_mask);
        double phase_two_value = f.evaluate(result.a2);
        CHECK(phase_two_value >= factor * best_in_pool - 1e-9);

        double f_star =
            testutil::brute_force_maxmin(f, alpha, beta).value;
        CHECK(result.residual_value >=
              theorem1_bound(compute_curvature(f).kappa, beta).bound * f_star -
                  1e-9);
    }
}

TEST_CASE("the residual never falls below the certified fraction") {
    Rng rng(1001);
    int instances = 0;
    while (instances < 40) {
        int family = instances % 4;
        int m = 4 + rng.next_index(4);
        int beta = 1 + rng.next_index(2);
        int alpha = std::min(m, beta + 1 + rng.next_index(3));
        double kappa = 0.0;
        double f_star = 0.0;
        SolveResult result;
        if (family == 0) {
            ModularFunction f = testutil::random_modular(rng, m);
            kappa = compute_curvature(f).kappa;
            result = resilient_greedy(ProblemInstance(f, alpha, beta));
            f_star = testutil::brute_force_maxmin(f, alpha, beta).value;
        } else if (family == 1) {
            WeightedCoverageFunction f = testutil::random_coverage(rng, m);
            kappa = compute_curvature(f).kappa;
            result = resilient_greedy(ProblemInstance(f, alpha, beta));
            f_star = testutil::brute_force_maxmin(f, alpha, beta).value;
        } else if (family == 2) {
            TabularFunction f = testutil::random_concave_tabular(rng, m);
            kappa = compute_curvature(f).kappa;
            result = resilient_greedy(ProblemInstance(f, alpha, beta));
            f_star = testutil::brute_force_maxmin(f, alpha, beta).value;
        } else {
            LogDetFunction f = random_psd_instance(
                m, 3 + rng.next_index(15), rng.next_u64());
            kappa = compute_curvature(f).kappa;
            result = resilient_greedy(ProblemInstance(f, alpha, beta));
            f_star = testutil::brute_force_maxmin(f, alpha, beta).value;
        }
        double bound = theorem1_bound(kappa, beta).bound;
        CHECK(result.residual_value >= bound * f_star - 1e-9);
        ++instances;
    }
}

TEST_CASE("zero curvature makes the two-phase solver exact") {
    Rng rng(313);
    for (int trial = 0; trial < 30; ++trial) {
        int m = 4 + rng.next_index(5);
        ModularFunction f = testutil::random_modular(rng, m);
        // Random weights leave rounding crumbs in the curvature ratio, so
        // the measured kappa is tiny positive noise rather than exactly 0.
        CHECK(compute_curvature(f).kappa < 1e-9);
        int beta = 1 + rng.next_index(2);
        int alpha = std::min(m, beta + 1 + rng.next_index(3));
        SolveResult result = resilient_greedy(ProblemInstance(f, alpha, beta));
        double f_star = testutil::brute_force_maxmin(f, alpha, beta).value;
        CHECK(result.residual_value ==
              doctest::Approx(f_star).epsilon(1e-12));
    }
}

TEST_CASE("baseline greedy ignores the removal budget while selecting") {
    TabularFunction f = make_example1_function(1.0);
    ProblemInstance instance(f, 2, 1);
    SolveResult result = baseline_greedy(instance);
    CHECK(result.solver_name == "greedy");
    // Plain greedy takes 0 first, then 2 for its bigger joint value.
    CHECK(result.selected == Subset({0, 2}, 3));
    CHECK(result.a1 == Subset::empty(3));
    CHECK(result.a2 == result.selected);
    // The adversary then deletes 0 and only the singleton value of 2 is
    // left, worse than what the two-phase solver kept.
    CHECK(result.residual_value == 1.0);
    check_result_shape(result, 2, 1);
}

TEST_CASE("baseline top picks the best singletons") {
    ModularFunction f({1.0, 5.0, 3.0, 2.0});
    SolveResult result = baseline_top_alpha(ProblemInstance(f, 2, 1));
    CHECK(result.solver_name == "top");
    CHECK(result.selected == Subset({1, 2}, 4));
    CHECK(result.eval_count == 4);
    CHECK(result.residual_value == 3.0);
}

TEST_CASE("baseline random is seeded and spends nothing on selection") {
    ModularFunction f({1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0});
    ProblemInstance instance(f, 3, 1);
    SolveResult a = baseline_random(instance, 11);
    SolveResult b = baseline_random(instance, 11);
    CHECK(a.solver_name == "random");
    CHECK(a.selected == b.selected);
    CHECK(a.selected.size() == 3);
    CHECK(a.eval_count == 0);
    check_result_shape(a, 3, 1);

    // Different seeds cover different subsets eventually.
    bool saw_difference = false;
    for (uint64_t seed = 0; seed < 10 && !saw_difference; ++seed) {
        saw_difference = !(baseline_random(instance, seed).selected ==
                           a.selected);
    }
    CHECK(saw_difference);
}

TEST_CASE("automatic certification falls back to the heuristic at scale") {
    ModularFunction f(std::vector<double>(40, 1.0));
    ProblemInstance instance(f, 30, 15);
    SolveResult result = resilient_greedy(instance);
    // C(30, 15) is far beyond the enumeration cap, so the certificate is
    // heuristic.
    CHECK_FALSE(result.worst_removal.exact);
    CHECK(result.residual_value == 15.0);

    SolverOptions forced;
    forced.removal = RemovalMethod::kExact;
    CHECK_THROWS_AS(resilient_greedy(instance, forced), CapacityError);

    SolverOptions heuristic;
    heuristic.removal = RemovalMethod::kGreedy;
    TabularFunction small = make_example1_function(1.0);
    SolveResult forced_greedy =
        resilient_greedy(ProblemInstance(small, 2, 1), heuristic);
    CHECK_FALSE(forced_greedy.worst_removal.exact);

    SolverOptions exact;
    exact.removal = RemovalMethod::kExact;
    SolveResult forced_exact =
        resilient_greedy(ProblemInstance(small, 2, 1), exact);
    CHECK(forced_exact.worst_removal.exact);
}

}  // TEST_SUITE
