#include <doctest.h>

#include <random>

#include "hulldec/hypergraph.hpp"
#include "test_util.hpp"

using namespace hulldec;
using testutil::random_feasible_slice_sums;
using testutil::random_hypermatrix;

namespace {

const ScalarMode<Rational> kExact{};

std::vector<Rational> rat(std::initializer_list<long> nums, long den = 1) {
    std::vector<Rational> v;
    for (long n : nums) {
        Rational q(n, den);
        q.canonicalize();
        v.push_back(q);
    }
    return v;
}

}  // namespace

TEST_CASE("degrees: frozen cases") {
    WeightedHypergraph<Rational> pair{2, 2, {{{1, 2}, Rational(1)}}};
    CHECK(degrees(pair) == rat({1, 1}));

    WeightedHypergraph<Rational> triple{3, 3, {{{1, 2, 3}, Rational(1)}}};
    CHECK(degrees(triple) == rat({1, 1, 1}));

    WeightedHypergraph<Rational> star{3, 2, {{{1, 2}, Rational(1)}, {{1, 3}, Rational(1)}}};
    CHECK(degrees(star) == rat({2, 1, 1}));
}

TEST_CASE("validate: rejects malformed hypergraphs") {
    WeightedHypergraph<Rational> bad_size{3, 2, {{{1, 2, 3}, Rational(1)}}};
    CHECK_THROWS_AS(validate(bad_size, kExact), std::invalid_argument);
    WeightedHypergraph<Rational> dup{3, 2, {{{1, 2}, Rational(1)}, {{1, 2}, Rational(2)}}};
    CHECK_THROWS_AS(validate(dup, kExact), std::invalid_argument);
    WeightedHypergraph<Rational> neg{3, 2, {{{1, 2}, Rational(-1)}}};
    CHECK_THROWS_AS(validate(neg, kExact), std::invalid_argument);
    WeightedHypergraph<Rational> unsorted{3, 2, {{{2, 1}, Rational(1)}}};
    CHECK_THROWS_AS(validate(unsorted, kExact), std::invalid_argument);
}

TEST_CASE("hypermatrix correspondence: weights copy, degrees scale by (d-1)!") {
    SymHypermatrix<Rational> a(3, 3);
    a.set({1, 2, 3}, Rational(1));
    auto h = from_hypermatrix(a);
    REQUIRE(h.edges.size() == 1);
    CHECK(h.edges[0].first == std::vector<int>{1, 2, 3});
    CHECK(h.edges[0].second == 1);
    CHECK(degrees(h) == rat({1, 1, 1}));
    CHECK(slice_sums(a) == rat({2, 2, 2}));

    // round trip from_hypermatrix . to_hypermatrix is the identity
    auto back = to_hypermatrix(h);
    CHECK(back.support() == a.support());

    auto empty = from_hypermatrix(SymHypermatrix<Rational>(4, 2));
    CHECK(empty.edges.empty());
}

TEST_CASE("correspondence: degree/slice-sum factor over random hypermatrices") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        int d = 2 + static_cast<int>(rng() % 3);
        int n = d + static_cast<int>(rng() % (10 - d));
        auto a = random_hypermatrix(n, d, rng);
        auto h = from_hypermatrix(a);
        CHECK(to_hypermatrix(h).support() == a.support());
        auto deg = degrees(h);
        auto sums = slice_sums(a);
        Rational fact = factorial<Rational>(d - 1);
        for (int i = 0; i < n; ++i)
            CHECK(sums[static_cast<std::size_t>(i)] ==
                  Rational(fact * deg[static_cast<std::size_t>(i)]));
    }
}

TEST_CASE("realize_degrees: frozen cases") {
    auto h = realize_degrees(2, rat({1, 1}), kExact);
    REQUIRE(h.edges.size() == 1);
    CHECK(h.edges[0].first == std::vector<int>{1, 2});
    CHECK(h.edges[0].second == 1);

    try {
        realize_degrees(2, rat({2, 1}), kExact);
        FAIL("expected InfeasibleError");
    } catch (const InfeasibleError& e) {
        CHECK(e.lhs == "4");
        CHECK(e.rhs == "3");
    }

    // n = d+1 closed form on R = (2,2,2,2): every triple gets 1/3
    auto quad = realize_degrees(3, rat({1, 1, 1, 1}), kExact);
    REQUIRE(quad.edges.size() == 4);
    for (const auto& [vertices, weight] : quad.edges) CHECK(weight == Rational(1, 3));
    CHECK(degrees(quad) == rat({1, 1, 1, 1}));
}

TEST_CASE("realize_degrees: random feasible degree sequences reconstruct exactly") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        int d = 2 + static_cast<int>(rng() % 3);
        int n = d + static_cast<int>(rng() % (11 - d));
        auto sums = random_feasible_slice_sums(n, d, rng);
        Rational fact = factorial<Rational>(d - 1);
        std::vector<Rational> deg;
        for (const auto& v : sums) deg.push_back(Rational(v / fact));

        auto h = realize_degrees(d, deg, kExact);
        CHECK_NOTHROW(validate(h, kExact));
        CHECK(degrees(h) == deg);
        CHECK(h.edges.size() <= static_cast<std::size_t>(n));
        for (const auto& [vertices, weight] : h.edges) CHECK(weight > 0);
    }
}

TEST_CASE("realize_degrees: n in {d, d+1} matches the transported singleton") {
    std::mt19937_64 rng(43);
    for (int d = 2; d <= 4; ++d) {
        for (int n : {d, d + 1}) {
            for (int trial = 0; trial < 25; ++trial) {
                std::vector<Rational> deg;
                if (n == d) {
                    Rational v = testutil::random_positive_rational(rng);
                    deg.assign(static_cast<std::size_t>(n), v);
                } else {
                    auto sums = random_feasible_slice_sums(n, d, rng);
                    Rational fact = factorial<Rational>(d - 1);
                    for (const auto& v : sums) deg.push_back(Rational(v / fact));
                }
                Rational fact = factorial<Rational>(d - 1);
                std::vector<Rational> r;
                for (const auto& v : deg) r.push_back(Rational(fact * v));

                auto h = realize_degrees(d, deg, kExact);
                auto transported = from_hypermatrix(singleton_solution(d, n, r, kExact));
                CHECK(h.edges == transported.edges);
            }
        }
    }
}

TEST_CASE("realize_degrees: degree-0 vertices are retained, not dropped") {
    auto h = realize_degrees(2, rat({1, 1, 0}), kExact);
    CHECK(h.n == 3);
    auto deg = degrees(h);
    CHECK(deg == rat({1, 1, 0}));
}
