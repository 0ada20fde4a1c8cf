#include "evec/digraph.hpp"

#include <random>

#include "doctest.h"
#include "evec/errors.hpp"
#include "evec/instance.hpp"
#include "test_support.hpp"

using namespace evec;

TEST_CASE("construction validates arcs") {
    CHECK_THROWS_AS(Digraph(2, {{0, 0}}), input_error);          // self-loop
    CHECK_THROWS_AS(Digraph(3, {{0, 1}, {0, 1}}), input_error);  // duplicate
    CHECK_THROWS_AS(Digraph(2, {{0, 2}}), input_error);          // out of range
    CHECK_THROWS_AS(Digraph(-1, {}), input_error);
    CHECK(Digraph().vertex_count() == 0);  // empty digraph is legal
    CHECK(Digraph().is_acyclic());
}

TEST_CASE("neighborhoods") {
    const Digraph path3 = gen_path(3);
    CHECK(path3.in_neighbors(1) == std::vector<int>{0});
    CHECK(path3.out_neighbors(1) == std::vector<int>{2});

    const Digraph fig = gen_figure1();
    CHECK(fig.in_neighbors(2) == std::vector<int>{0, 1});
    CHECK(fig.out_neighbors(1) == std::vector<int>{2, 3});

    CHECK(gen_antichain(3).in_neighbors(0).empty());
    CHECK(gen_total_order(3).out_neighbors(0) == std::vector<int>{1, 2});

    CHECK_THROWS_AS(path3.in_neighbors(3), input_error);
    CHECK_THROWS_AS(path3.out_neighbors(-1), input_error);
}

TEST_CASE("e-vector") {
    CHECK(e_vector(gen_figure1()) == std::vector<int>{-1, -2, 2, 1});
    CHECK(e_vector(gen_path(4)) == std::vector<int>{-1, 0, 0, 1});
    CHECK(e_vector(gen_total_order(3)) == std::vector<int>{-2, 0, 2});
    CHECK(e_vector(Digraph()).empty());
}

TEST_CASE("acyclicity") {
    CHECK(gen_path(4).is_acyclic());
    CHECK_FALSE(Digraph(2, {{0, 1}, {1, 0}}).is_acyclic());
    CHECK(gen_figure1().is_acyclic());
}

TEST_CASE("acyclic flag matches an independent DFS") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const int n = static_cast<int>(rng() % 9);
        const auto d = testsup::random_digraph(n, 0.3, rng);
        CHECK(d.is_acyclic() == !testsup::dfs_has_cycle(d));
    }
}

TEST_CASE("induced subgraph") {
    const std::vector<int> keep01{0, 1};
    const auto sub = induced_subgraph(gen_total_order(3), keep01);
    CHECK(sub.graph == Digraph(2, {{0, 1}}));
    CHECK(sub.old_to_new == std::vector<int>{0, 1, -1});
    CHECK(sub.new_to_old == std::vector<int>{0, 1});

    const std::vector<int> keep012{0, 1, 2};
    const auto sub2 = induced_subgraph(gen_figure1(), keep012);
    CHECK(sub2.graph == Digraph(3, {{0, 2}, {1, 2}}));

    const Digraph fig = gen_figure1();
    const std::vector<int> all{0, 1, 2, 3};
    CHECK(induced_subgraph(fig, all).graph == fig);  // identity

    const std::vector<int> bad{0, 9};
    CHECK_THROWS_AS(induced_subgraph(fig, bad), input_error);
}

TEST_CASE("transitive closure") {
    CHECK(transitive_closure(gen_path(3)) == Digraph(3, {{0, 1}, {0, 2}, {1, 2}}));
    const Digraph fig = gen_figure1();
    CHECK(transitive_closure(fig) == fig);  // already a poset
    const Digraph closed = transitive_closure(gen_path(5));
    CHECK(transitive_closure(closed) == closed);  // idempotent
    CHECK_THROWS_AS(transitive_closure(Digraph(2, {{0, 1}, {1, 0}})), input_error);
}

TEST_CASE("transitivity test") {
    CHECK_FALSE(is_transitive(gen_path(3)));  // (0,2) missing
    CHECK(is_transitive(gen_total_order(3)));
    CHECK(is_transitive(gen_figure1()));
    CHECK(is_transitive(Digraph()));
}

TEST_CASE("e-vector sums to zero and <e,e> is even, cyclic digraphs included") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const int n = static_cast<int>(rng() % 11);
        const auto d = testsup::random_digraph(n, 0.4, rng);
        const auto e = e_vector(d);
        long long sum = 0, ee = 0;
        for (int x : e) {
            sum += x;
            ee += static_cast<long long>(x) * x;
        }
        CHECK(sum == 0);
        CHECK(ee % 2 == 0);
    }
}

TEST_CASE("deleting a maximal vertex bumps e by one exactly on its in-neighbors") {
    std::mt19937_64 rng(13);
    int cases = 0;
    while (cases < 300) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const auto d1 = testsup::random_digraph(n, 0.35, rng);
        const auto e1 = e_vector(d1);
        for (int z = 0; z < n; ++z) {
            if (d1.out_degree(z) != 0) continue;  // maximal vertices only
            std::vector<int> keep;
            for (int v = 0; v < n; ++v)
                if (v != z) keep.push_back(v);
            const auto sub = induced_subgraph(d1, keep);
            const auto e = e_vector(sub.graph);
            long long pred_sum_small = 0, pred_sum_big = 0;
            for (int x = 0; x < n; ++x) {
                if (x == z) continue;
                const bool is_pred = d1.has_arc(x, z);
                CHECK(e[sub.old_to_new[x]] == e1[x] + (is_pred ? 1 : 0));
                if (is_pred) {
                    pred_sum_small += e[sub.old_to_new[x]];
                    pred_sum_big += e1[x];
                }
            }
            CHECK(pred_sum_small == pred_sum_big + d1.in_degree(z));
            ++cases;
        }
    }
}
