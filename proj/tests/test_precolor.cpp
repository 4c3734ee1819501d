#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "cvd/generators.hpp"
#include "cvd/precolor.hpp"
#include "support/test_graphs.hpp"

using namespace cvd;

TEST_CASE("greedy on a star is always proper") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Graph g = cvd::testing::star(3);
        Rng rng(seed);
        CHECK(greedy_precolor(g, 3, rng) == 0);
        CHECK(total_conflicts_from_scratch(g) == 0);
    }
}

TEST_CASE("single edge with one color") {
    Graph g = cvd::testing::path(2);
    Rng rng(5);
    greedy_precolor(g, 1, rng);
    CHECK(g.edge_color(0, 1) == 0);
    random_precolor(g, 1, rng);
    CHECK(g.edge_color(0, 1) == 0);
}

TEST_CASE("greedy beats random on K4 on average") {
    const int seeds = 2000;
    double greedy_sum = 0, random_sum = 0;
    for (int s = 0; s < seeds; ++s) {
        Graph g = cvd::testing::complete_graph(4);
        Rng rng(static_cast<std::uint64_t>(s));
        greedy_precolor(g, 3, rng);
        CHECK(g.fully_colored());
        greedy_sum += static_cast<double>(total_conflicts_from_scratch(g));
        random_precolor(g, 3, rng);
        random_sum += static_cast<double>(total_conflicts_from_scratch(g));
    }
    CHECK(greedy_sum / seeds <= random_sum / seeds);
}

TEST_CASE("greedy only clashes when every color was already taken") {
    Rng gen(11);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_regular_graph(30, 5, gen);
        Rng rng(static_cast<std::uint64_t>(trial));
        greedy_precolor(g, 5, rng);
        // Replay the canonical order and inspect what was visible at each assignment.
        std::vector<EdgeId> order(g.num_edges());
        std::iota(order.begin(), order.end(), EdgeId{0});
        std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
            auto ka = std::pair{std::min(g.edge(a).u, g.edge(a).v), std::max(g.edge(a).u, g.edge(a).v)};
            auto kb = std::pair{std::min(g.edge(b).u, g.edge(b).v), std::max(g.edge(b).u, g.edge(b).v)};
            return ka < kb;
        });
        std::vector<char> done(g.num_edges(), 0);
        for (EdgeId e : order) {
            std::set<Color> taken;
            for (VertexId end : {g.edge(e).u, g.edge(e).v})
                for (const Incidence& inc : g.incident(end))
                    if (done[inc.edge]) taken.insert(g.color(inc.edge));
            if (taken.size() < 5) CHECK(taken.count(g.color(e)) == 0);
            done[e] = 1;
        }
    }
}

TEST_CASE("greedy ignores previous colors") {
    Graph a = cvd::testing::petersen();
    Graph b = cvd::testing::petersen();
    for (EdgeId e = 0; e < b.num_edges(); ++e) b.set_color(e, 2);
    Rng ra(9), rb(9);
    greedy_precolor(a, 3, ra);
    greedy_precolor(b, 3, rb);
    CHECK(a == b);
}

TEST_CASE("random precolor with D=1 is forced") {
    Graph g(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
    Rng rng(2);
    random_precolor(g, 1, rng);
    for (EdgeId e = 0; e < g.num_edges(); ++e) CHECK(g.color(e) == 0);
    // sum of (degree - 1) over non-isolated vertices: 2 + 0 + 0 + 1 + 0
    CHECK(total_conflicts_from_scratch(g) == 3);
}

TEST_CASE("random precolor frequencies") {
    Graph g = cvd::testing::petersen();
    std::array<long, 3> freq{};
    const int runs = 2000;
    Rng rng(4);
    for (int r = 0; r < runs; ++r) {
        random_precolor(g, 3, rng);
        for (EdgeId e = 0; e < g.num_edges(); ++e) ++freq[static_cast<std::size_t>(g.color(e))];
    }
    const double expected = runs * 15.0 / 3.0;  // 10000, sd ~ 67
    for (long f : freq) CHECK(std::abs(static_cast<double>(f) - expected) < 400);
}

TEST_CASE("empty edge set") {
    Graph g(4, {});
    Rng rng(1);
    random_precolor(g, 3, rng);
    greedy_precolor(g, 0, rng);
    CHECK(g.num_edges() == 0);
}

TEST_CASE("zero colors with edges is rejected") {
    Graph g = cvd::testing::path(2);
    Rng rng(1);
    CHECK_THROWS_AS(greedy_precolor(g, 0, rng), std::invalid_argument);
    CHECK_THROWS_AS(random_precolor(g, 0, rng), std::invalid_argument);
}

TEST_CASE("precolor mode parsing") {
    CHECK(parse_precolor_mode("greedy") == PrecolorMode::greedy);
    CHECK(parse_precolor_mode("random") == PrecolorMode::random);
    CHECK(to_string(PrecolorMode::random) == "random");
    CHECK_THROWS_AS(parse_precolor_mode("smart"), std::invalid_argument);
}
