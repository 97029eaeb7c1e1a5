#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

#include "graphcomp/bipartite.hpp"
#include "graphcomp/combinatorics.hpp"
#include "graphcomp/egf.hpp"
#include "graphcomp/multipartite.hpp"
#include "graphcomp/oracle.hpp"

using graphcomp::BigInt;
using graphcomp::PartSpec;

namespace {

// All part lists with the given number of parts and entries >= 0 summing to
// at most `max_total`.
void for_each_part_list(int parts, int max_total,
                        const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> current(static_cast<std::size_t>(parts), 0);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == parts) {
            visit(current);
            return;
        }
        for (int a = 0; a <= remaining; ++a) {
            current[pos] = a;
            rec(pos + 1, remaining - a);
        }
    };
    rec(0, max_total);
}

} // namespace

TEST_CASE("PartSpec validation") {
    CHECK_THROWS_AS(PartSpec({}), std::invalid_argument);
    CHECK_THROWS_AS(PartSpec({2, -1}), std::invalid_argument);
    CHECK(PartSpec({0}).total_vertices() == 0);
    CHECK(PartSpec({2, 3, 4}).total_vertices() == 9);
}

TEST_CASE("multipartite connectivity indicator") {
    const std::vector<int> single{1, 0, 0}, pair_same{2, 0, 0}, cross{1, 1, 0}, empty{0, 0, 0};
    CHECK(graphcomp::multipartite_connected(single));
    CHECK_FALSE(graphcomp::multipartite_connected(pair_same));
    CHECK(graphcomp::multipartite_connected(cross));
    CHECK_FALSE(graphcomp::multipartite_connected(empty));
}

TEST_CASE("count_multipartite known values") {
    CHECK(graphcomp::count_multipartite(PartSpec({2, 3})) == BigInt(34));
    CHECK(graphcomp::count_multipartite(PartSpec({1, 1, 1})) == graphcomp::bell(3));
    for (int a = 0; a <= 6; ++a) {
        CHECK(graphcomp::count_multipartite(PartSpec({a})) == BigInt(1));
    }
}

TEST_CASE("two parts reduce to the bipartite count") {
    for (int m = 0; m <= 5; ++m) {
        for (int n = 0; n <= 5; ++n) {
            CHECK(graphcomp::count_multipartite(PartSpec({m, n})) ==
                  graphcomp::count_bipartite(m, static_cast<std::uint64_t>(n)));
        }
    }
}

TEST_CASE("count is invariant under part permutation") {
    std::mt19937 rng(17);
    const std::vector<std::vector<int>> specs{
        {1, 2, 3}, {2, 2, 2}, {4, 1, 2}, {3, 3, 1, 1}, {0, 2, 3}, {5, 2, 1}};
    for (auto parts : specs) {
        BigInt reference = graphcomp::count_multipartite(PartSpec(parts));
        for (int iter = 0; iter < 4; ++iter) {
            std::shuffle(parts.begin(), parts.end(), rng);
            CHECK(graphcomp::count_multipartite(PartSpec(parts)) == reference);
        }
    }
}

TEST_CASE("appending an empty part changes nothing") {
    for_each_part_list(3, 6, [&](const std::vector<int>& parts) {
        BigInt reference = graphcomp::count_multipartite(PartSpec(parts));
        std::vector<int> padded = parts;
        padded.push_back(0);
        CHECK(graphcomp::count_multipartite(PartSpec(padded)) == reference);
    });
}

TEST_CASE("count_multipartite agrees with the composition oracle") {
    for (int parts = 1; parts <= 3; ++parts) {
        for_each_part_list(parts, 7, [&](const std::vector<int>& list) {
            const PartSpec spec(list);
            CHECK(graphcomp::count_multipartite(spec) ==
                  graphcomp::count_compositions(graphcomp::complete_multipartite(spec)));
        });
    }
}

TEST_CASE("connectivity indicator assembles from exponential pieces") {
    // With y_i = e^{x_i}, the indicator series equals
    //   y_1 y_2 y_3 - (y_1 + y_2 + y_3) + 2 + (x_1 + x_2 + x_3),
    // the three-part instance of the product-of-exponentials form.
    using graphcomp::BigInt;
    using graphcomp::Egf;
    const std::vector<int> caps{2, 2, 2};

    Egf product_of_ys = Egf::from_indicator(caps, [](std::span<const int>) { return true; });
    Egf sum_of_ys(caps);
    Egf sum_of_xs(caps);
    std::vector<int> idx{0, 0, 0};
    do {
        int positive = 0, total = 0;
        for (int v : idx) {
            positive += v > 0;
            total += v;
        }
        if (positive <= 1) {
            // e^{x_i} restricted to coordinate i; at the origin all three overlap.
            sum_of_ys.set_coefficient(idx, BigInt(positive == 0 ? 3 : 1));
        }
        if (total == 1) sum_of_xs.set_coefficient(idx, BigInt(1));
    } while (graphcomp::next_multi_index(idx, caps));
    Egf constant = scale(Egf::one(caps), BigInt(2));

    Egf assembled =
        add(add(add(product_of_ys, scale(sum_of_ys, BigInt(-1))), constant), sum_of_xs);
    CHECK(assembled == Egf::from_indicator(caps, graphcomp::multipartite_connected));
}

TEST_CASE("edge count formula") {
    CHECK(graphcomp::multipartite_edge_count(PartSpec({2, 3})) == BigInt(6));
    CHECK(graphcomp::multipartite_edge_count(PartSpec({1, 1, 1})) == BigInt(3));
    CHECK(graphcomp::multipartite_edge_count(PartSpec({7})) == BigInt(0));

    for (int parts = 1; parts <= 3; ++parts) {
        for_each_part_list(parts, 10, [&](const std::vector<int>& list) {
            const PartSpec spec(list);
            CHECK(graphcomp::multipartite_edge_count(spec) ==
                  BigInt(graphcomp::complete_multipartite(spec).edge_count()));
        });
    }
}
