#include "doctest.h"

#include <random>

#include "twobridge/continued_fraction.hpp"
#include "twobridge/knot.hpp"

using namespace twobridge;

namespace {

ContinuedFraction cf(long long r, std::vector<long long> q) {
    ContinuedFraction out;
    out.integer_part = r;
    for (long long b : q) out.quotients.push_back(b);
    return out;
}

ContinuedFraction random_cf(std::mt19937_64& rng, int min_len = 0, int max_len = 12) {
    std::uniform_int_distribution<int> len_dist(min_len, max_len);
    std::uniform_int_distribution<int> quot(-9, 9);
    std::uniform_int_distribution<int> rdist(-3, 3);
    ContinuedFraction out;
    out.integer_part = rdist(rng);
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) out.quotients.push_back(quot(rng));
    return out;
}

struct Mat2 {
    Int a = 1, b = 0, c = 0, d = 1;
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
    Mat2 negate() const { return {-a, -b, -c, -d}; }
};

Mat2 cf_matrix(const std::vector<Int>& v) {
    Mat2 m;
    for (const Int& b : v) m = m * Mat2{b, 1, 1, 0};
    return m;
}

}  // namespace

TEST_CASE("rational normalization and the infinite point") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(5, 0) == Rational::infinity());
    CHECK(Rational(-3, 0) == Rational::infinity());
    CHECK_THROWS_AS(Rational(0, 0), std::domain_error);
    CHECK(Rational(7, 17).str() == "7/17");
    CHECK(parse_rational(" -7 / 17 ") == Rational(-7, 17));
    CHECK(parse_rational("5") == Rational(5, 1));
    CHECK_THROWS_AS(parse_rational("x/3"), std::invalid_argument);
}

TEST_CASE("eval_cf matches the worked examples") {
    CHECK(eval_cf(cf(0, {3})) == Rational(1, 3));
    CHECK(eval_cf(cf(0, {2, 2, 3})) == Rational(7, 17));
    CHECK(eval_cf(cf(1, {-2, 4, -2, 2})) == Rational(7, 17));
    CHECK(eval_cf(cf(0, {6, 2, 3})) == Rational(7, 45));
    CHECK(eval_cf(cf(0, {3, 0, 3, 2, 3})) == Rational(7, 45));
    CHECK(eval_cf(cf(5, {})) == Rational(5, 1));
    CHECK(eval_cf(cf(0, {2, 2})) == Rational(2, 5));
    // 1/0 is a legal output of the matrix form.
    CHECK(eval_cf(cf(0, {0})) == Rational::infinity());
    CHECK(eval_cf(cf(1, {-1, -1})).denominator() >= 0);
}

TEST_CASE("convergents trace the Farey path") {
    auto path = convergents(cf(0, {2, 2, 3}));
    std::vector<Rational> expected{Rational::infinity(), Rational(0, 1), Rational(1, 2), Rational(2, 5),
                                   Rational(7, 17)};
    CHECK(path == expected);

    auto even = convergents(cf(1, {-2, 4, -2, 2}));
    std::vector<Rational> expected_even{Rational::infinity(), Rational(1, 1),  Rational(1, 2),
                                        Rational(3, 7),       Rational(5, 12), Rational(7, 17)};
    CHECK(even == expected_even);

    auto trivial = convergents(cf(7, {}));
    CHECK(trivial == std::vector<Rational>{Rational::infinity(), Rational(7, 1)});
}

TEST_CASE("convergents of random expansions are consecutive Farey edges") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 500; ++round) {
        ContinuedFraction c = random_cf(rng);
        auto verts = convergents(c);
        for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
            if (verts[i] == verts[i + 1]) continue;  // zero quotients can repeat a vertex
            Int det = farey_edge_det(verts[i], verts[i + 1]);
            CHECK((det == 1 || det == -1));
        }
    }
}

TEST_CASE("farey edge determinants and mediants") {
    CHECK(farey_edge_det(Rational(2, 5), Rational(7, 17)) == -1);
    CHECK(farey_edge_det(Rational::infinity(), Rational(0, 1)) == 1);
    CHECK(farey_edge_det(Rational(1, 2), Rational(1, 3)) == 1);
    CHECK(mediant(Rational(1, 2), Rational(1, 3)) == Rational(2, 5));
    // The mediant completes the triangle over the edge.
    CHECK(farey_edge_det(Rational(1, 2), Rational(2, 5)) == 1);
    CHECK(farey_edge_det(Rational(1, 3), Rational(2, 5)) == -1);
}

TEST_CASE("rewrite_negate worked examples") {
    ContinuedFraction in = cf(0, {2, 3, -2, 2});
    ContinuedFraction out = rewrite_negate(in, 2);
    CHECK(out == cf(0, {2, 2, 1, 1, -2}));
    CHECK(eval_cf(out) == Rational(7, 17));
    CHECK(eval_cf(in) == Rational(7, 17));

    ContinuedFraction short_in = cf(0, {3, -2});
    ContinuedFraction short_out = rewrite_negate(short_in, 1);
    CHECK(short_out == cf(0, {2, 1, 1}));
    CHECK(eval_cf(short_out) == Rational(2, 5));

    CHECK_THROWS_AS(rewrite_negate(cf(0, {2, 3}), 1), std::invalid_argument);
    CHECK_THROWS_AS(rewrite_negate(cf(0, {-2, 3}), 0), std::invalid_argument);
}

TEST_CASE("rewrite_drop_zero worked examples") {
    CHECK(rewrite_drop_zero(cf(0, {3, 0, 3, 2, 3}), 1) == cf(0, {6, 2, 3}));

    // Chained zero elimination.
    ContinuedFraction chained = cf(0, {2, 3, 0, 3, 2, 0, 2, 3});
    chained = rewrite_drop_zero(chained, 2);
    chained = rewrite_drop_zero(chained, 3);
    CHECK(chained == cf(0, {2, 6, 4, 3}));

    // Cancellation down to a leading zero, then a merge into the integer part.
    ContinuedFraction cancel = rewrite_drop_zero(cf(0, {3, 0, -3, 4}), 1);
    CHECK(cancel == cf(0, {0, 4}));
    CHECK(rewrite_drop_zero(cancel, 0) == cf(4, {}));

    CHECK_THROWS_AS(rewrite_drop_zero(cf(0, {2, 0}), 1), std::invalid_argument);
    CHECK_THROWS_AS(rewrite_drop_zero(cf(0, {2, 3}), 1), std::invalid_argument);
}

TEST_CASE("rewrites preserve the exact value on random expansions") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> mag(1, 9);
    int negate_cases = 0, zero_cases = 0;
    while (negate_cases < 1000 || zero_cases < 1000) {
        ContinuedFraction c = random_cf(rng, 2);
        std::uniform_int_distribution<int> pos(1, static_cast<int>(c.quotients.size()) - 1);
        if (negate_cases < 1000) {
            ContinuedFraction work = c;
            int at = pos(rng);
            work.quotients[static_cast<std::size_t>(at)] = -mag(rng);
            CHECK(eval_cf(rewrite_negate(work, static_cast<std::size_t>(at))) == eval_cf(work));
            ++negate_cases;
        }
        if (zero_cases < 1000) {
            ContinuedFraction work = c;
            std::uniform_int_distribution<int> zpos(0, static_cast<int>(c.quotients.size()) - 2);
            int at = zpos(rng);
            work.quotients[static_cast<std::size_t>(at)] = 0;
            CHECK(eval_cf(rewrite_drop_zero(work, static_cast<std::size_t>(at))) == eval_cf(work));
            ++zero_cases;
        }
    }
}

TEST_CASE("matrix conjugation identity behind the rewrites") {
    // diag(-1,1) * M_b = (-1)^|b| * M_{-b} * diag(-1,1)
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> quot(-9, 9);
    std::uniform_int_distribution<int> len_dist(0, 8);
    const Mat2 flip{-1, 0, 0, 1};
    for (int round = 0; round < 300; ++round) {
        int len = len_dist(rng);
        std::vector<Int> b, nb;
        for (int i = 0; i < len; ++i) {
            b.push_back(quot(rng));
            nb.push_back(-b.back());
        }
        Mat2 lhs = flip * cf_matrix(b);
        Mat2 rhs = cf_matrix(nb) * flip;
        if (len % 2 == 1) rhs = rhs.negate();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("euclidean and strongly positive expansions") {
    CHECK(euclidean_cf(Rational(7, 17)) == cf(0, {2, 2, 3}));
    CHECK(strongly_positive_cf(Rational(7, 17)).cf == cf(0, {2, 2, 3}));
    CHECK_FALSE(strongly_positive_cf(Rational(7, 17)).used_reversal);
    CHECK(strongly_positive_cf(Rational(7, 45)).cf == cf(0, {6, 2, 3}));
    CHECK(strongly_positive_cf(Rational(8, 21)).cf == cf(0, {2, 1, 1, 1, 2}));

    // Reversal kicks in above 1/2: 4/7 = 0+[1,1,3] becomes 0+[3,2] = 2/7.
    auto rev = strongly_positive_cf(Rational(4, 7));
    CHECK(rev.used_reversal);
    CHECK(rev.cf == cf(0, {3, 2}));
    CHECK(rev.value == Rational(2, 7));

    CHECK_THROWS_AS(strongly_positive_cf(Rational(1, 4)), std::domain_error);
    CHECK_THROWS_AS(strongly_positive_cf(Rational(5, 3)), std::domain_error);
}

TEST_CASE("strongly positive expansion round-trips through eval") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> quot(1, 7);
    std::uniform_int_distribution<int> len_dist(1, 8);
    std::uniform_int_distribution<int> edge(2, 7);
    for (int round = 0; round < 300; ++round) {
        ContinuedFraction sp;
        int len = len_dist(rng);
        for (int i = 0; i < len; ++i) sp.quotients.push_back(quot(rng));
        sp.quotients.front() = edge(rng);
        sp.quotients.back() = edge(rng);
        REQUIRE(sp.is_strongly_positive());
        Rational x = eval_cf(sp);
        if (x.denominator() % 2 == 0) continue;
        auto back = strongly_positive_cf(x);
        CHECK(back.cf == sp);
        CHECK_FALSE(back.used_reversal);
    }
}

TEST_CASE("cf_reverse satisfies the inverse congruence") {
    auto [rev, value] = cf_reverse(cf(0, {2, 2, 3}));
    CHECK(rev == cf(0, {3, 2, 2}));
    CHECK(value == Rational(5, 17));
    CHECK((7 * 5) % 17 == 1);

    auto [pal, pal_value] = cf_reverse(cf(0, {3, 1, 3}));
    CHECK(pal == cf(0, {3, 1, 3}));
    CHECK(pal_value == Rational(4, 15));

    auto [r45, v45] = cf_reverse(cf(0, {6, 2, 3}));
    CHECK(r45 == cf(0, {3, 2, 6}));
    CHECK((Int(7) * v45.numerator()) % 45 == 1);

    CHECK_THROWS_AS(cf_reverse(cf(0, {1, 2})), std::invalid_argument);
}

TEST_CASE("cf parsing and printing") {
    CHECK(parse_cf("0+[2,2,3]") == cf(0, {2, 2, 3}));
    CHECK(parse_cf("[6,2,3]") == cf(0, {6, 2, 3}));
    CHECK(parse_cf("1+[-2,4,-2,2]") == cf(1, {-2, 4, -2, 2}));
    CHECK(parse_cf("5+[]") == cf(5, {}));
    CHECK(parse_cf(" -1 + [ 2 , -3 ] ") == cf(-1, {2, -3}));
    CHECK(cf(1, {-2, 4, -2, 2}).str() == "1+[-2,4,-2,2]");
    CHECK_THROWS_AS(parse_cf("2,3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cf("[2,3"), std::invalid_argument);
}

TEST_CASE("normalize_knot builds the equivalence class") {
    TwoBridgeKnot k = normalize_knot(7, 17);
    CHECK(k.class_reps() == std::vector<Int>{5, 7, 10, 12});
    CHECK(k.canonical_p() == 5);
    CHECK_FALSE(k.is_torus());
    CHECK(k.chirality_reps() == std::vector<Int>{5, 7});

    TwoBridgeKnot trefoil = normalize_knot(1, 3);
    CHECK(trefoil.is_torus());
    CHECK(trefoil.class_reps() == std::vector<Int>{1, 2});

    CHECK_THROWS_AS(normalize_knot(24, 45), KnotError);
    CHECK_THROWS_AS(normalize_knot(1, 4), KnotError);
    CHECK_THROWS_AS(normalize_knot(1, 1), KnotError);
    CHECK_THROWS_AS(normalize_knot(3, 3), KnotError);

    try {
        normalize_knot(1, 1);
    } catch (const KnotError& e) {
        CHECK(e.kind() == KnotErrorKind::unknot);
    }
    try {
        normalize_knot(1, 4);
    } catch (const KnotError& e) {
        CHECK(e.kind() == KnotErrorKind::even_denominator);
    }
}

TEST_CASE("normalize_knot is constant on the class orbit") {
    for (long long q = 3; q <= 199; q += 2)
        for (long long p = 1; p < q; ++p) {
            if (boost::multiprecision::gcd(Int(p), Int(q)) != 1) continue;
            TwoBridgeKnot k = normalize_knot(p, q);
            for (const Int& rep : k.class_reps()) {
                TwoBridgeKnot other = normalize_knot(rep, Int(q));
                CHECK(other == k);
            }
        }
}
