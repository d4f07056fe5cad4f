#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "farey_oracle.hpp"
#include "twobridge/minimal_paths.hpp"

using namespace twobridge;

namespace {

std::multiset<long long> m_values(const std::vector<MinimalPath>& paths) {
    std::multiset<long long> out;
    for (const MinimalPath& p : paths) out.insert(p.unadjusted_slope);
    return out;
}

std::map<long long, Int> slope_map(std::initializer_list<std::pair<long long, long long>> init) {
    std::map<long long, Int> out;
    for (auto [slope, count] : init) out[slope] = count;
    return out;
}

}  // namespace

TEST_CASE("7/17 has the five expected minimal paths") {
    auto paths = enumerate_minimal_expansions(Rational(7, 17));
    REQUIRE(paths.size() == 5);
    CHECK(m_values(paths) == std::multiset<long long>{4, 2, 1, -1, -3});

    int even_count = 0;
    for (const auto& p : paths)
        if (p.is_even) {
            ++even_count;
            CHECK(p.expansion.str() == "1+[-2,4,-2,2]");
            CHECK(p.unadjusted_slope == 4);
        }
    CHECK(even_count == 1);

    auto ext = extremal_paths(paths);
    CHECK(paths[ext.upper_index].unadjusted_slope == 4);
    CHECK(paths[ext.lower_index].unadjusted_slope == -3);

    SlopeMultiset slopes = slope_multiset(Rational(7, 17));
    CHECK(slopes.entries() == slope_map({{0, 1}, {4, 1}, {6, 1}, {10, 1}, {14, 1}}));
    CHECK(slopes.diameter() == 14);
    CHECK(slopes.crossing_number() == 7);
}

TEST_CASE("small knots enumerate as expected") {
    auto trefoil = enumerate_minimal_expansions(Rational(1, 3));
    REQUIRE(trefoil.size() == 2);
    CHECK(trefoil[0].expansion.str() == "1+[-2,2]");
    CHECK(trefoil[1].expansion.str() == "0+[3]");
    CHECK(trefoil[1].unadjusted_slope == -1);
    CHECK(trefoil[0].is_even);
    CHECK_FALSE(trefoil[1].is_even);
    CHECK(slope_multiset(Rational(1, 3)).entries() == slope_map({{0, 1}, {6, 1}}));

    auto fig8 = enumerate_minimal_expansions(Rational(2, 5));
    REQUIRE(fig8.size() == 3);
    std::set<std::string> cfs;
    for (const auto& p : fig8) cfs.insert(p.expansion.str());
    CHECK(cfs == std::set<std::string>{"0+[2,2]", "0+[3,-2]", "1+[-2,3]"});
    CHECK(slope_multiset(Rational(2, 5)).entries() == slope_map({{-4, 1}, {0, 1}, {4, 1}}));

    auto single = enumerate_minimal_expansions(Rational(7, 1));
    REQUIRE(single.size() == 1);
    CHECK(single[0].vertices == std::vector<Rational>{Rational::infinity(), Rational(7, 1)});
}

TEST_CASE("even expansion is the unique all-even path") {
    CHECK(even_expansion(Rational(7, 17)).expansion.str() == "1+[-2,4,-2,2]");
    CHECK(even_expansion(Rational(2, 5)).expansion.str() == "0+[2,2]");
    CHECK(even_expansion(Rational(7, 45)).expansion.all_quotients_even());

    for (long long q = 3; q <= 199; q += 2)
        for (long long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            MinimalPath even = even_expansion(Rational(p, q));
            CHECK(even.is_even);
            CHECK(eval_cf(even.expansion) == Rational(p, q));
        }
}

TEST_CASE("8/21 slope multiset carries multiplicities") {
    SlopeMultiset slopes = slope_multiset(Rational(8, 21));
    CHECK(slopes.entries() == slope_map({{-8, 1}, {-4, 2}, {0, 3}, {6, 1}}));
    CHECK(slopes.path_count() == 7);
    CHECK(slopes.distinct_count() == 4);
}

TEST_CASE("7/45 has exactly five distinct slopes") {
    SlopeMultiset slopes = slope_multiset(Rational(7, 45));
    CHECK(slopes.distinct_count() == 5);
    CHECK(slopes.entries() == slope_map({{0, 1}, {6, 1}, {12, 1}, {18, 1}, {22, 1}}));
}

TEST_CASE("multiset computation agrees with explicit enumeration") {
    for (long long q = 3; q <= 199; q += 2)
        for (long long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            auto paths = enumerate_minimal_expansions(Rational(p, q));
            long long m_even = 0;
            int evens = 0;
            for (const auto& path : paths)
                if (path.is_even) {
                    m_even = path.unadjusted_slope;
                    ++evens;
                }
            REQUIRE(evens == 1);
            std::map<long long, Int> expected;
            for (const auto& path : paths) expected[-2 * (path.unadjusted_slope - m_even)] += 1;
            CHECK(slope_multiset(Rational(p, q)).entries() == expected);
        }
}

TEST_CASE("mirror negates slopes and the inverse representative preserves them") {
    for (long long q = 3; q <= 99; q += 2)
        for (long long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            TwoBridgeKnot k = normalize_knot(p, q);
            SlopeMultiset s = boundary_slopes(k, p);
            CHECK(boundary_slopes(k, k.q() - p) == s.negated());
            CHECK(boundary_slopes(k, mod_inverse(p, k.q())) == s);
        }
}

TEST_CASE("slope count bounds") {
    auto [lo3, hi3] = slope_count_bounds(parse_cf("[2,2,3]"));
    CHECK(lo3 == 3);
    CHECK(hi3 == 5);
    CHECK(slope_multiset(Rational(7, 17)).distinct_count() == 5);

    auto [lo1, hi1] = slope_count_bounds(parse_cf("[3]"));
    CHECK(lo1 == 2);
    CHECK(hi1 == 2);

    auto [lo5, hi5] = slope_count_bounds(parse_cf("[2,1,1,1,2]"));
    CHECK(lo5 == 4);
    CHECK(hi5 == 13);
    CHECK(slope_multiset(Rational(8, 21)).distinct_count() == 4);

    CHECK_THROWS_AS(slope_count_bounds(parse_cf("[1,2]")), std::invalid_argument);
}

TEST_CASE("fibonacci convention") {
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(2) == 1);
    CHECK(fibonacci(3) == 2);
    CHECK(fibonacci(5) == 5);
    CHECK(fibonacci(10) == 55);
}

TEST_CASE("graph oracle agrees with the recursion on small denominators") {
    const long long q_max = 39;
    oracle::MinimalPathOracle oracle_paths(q_max);
    for (long long q = 3; q <= q_max; q += 2)
        for (long long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            auto expected = enumerate_minimal_expansions(Rational(p, q));
            auto got = oracle_paths.paths_to(p, q);
            REQUIRE(got.size() == expected.size());

            std::set<std::vector<std::pair<long long, long long>>> expected_set, got_set;
            for (const auto& path : expected) {
                std::vector<std::pair<long long, long long>> verts;
                for (const Rational& v : path.vertices)
                    verts.emplace_back(v.numerator().convert_to<long long>(),
                                       v.denominator().convert_to<long long>());
                expected_set.insert(std::move(verts));
            }
            for (const auto& path : got) got_set.insert({path.begin(), path.end()});
            CHECK(expected_set == got_set);
        }
}
