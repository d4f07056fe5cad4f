#include "twobridge/minimal_paths.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace twobridge {

namespace {

// Tail of a partially expanded fraction: the next quotient b must be one of
// floor(y), floor(y)+1 with |b| >= 2, after which the tail becomes 1/(y - b).
// |y| > 1 holds throughout, and tail denominators strictly decrease.
Rational tail_after(const Rational& y, const Int& b) {
    return Rational(y.denominator(), y.numerator() - b * y.denominator());
}

int sign_of(const Int& v) { return v < 0 ? -1 : 1; }

struct Enumerator {
    std::vector<MinimalPath> results;
    std::vector<Int> quotients;
    Int integer_part;

    void emit() {
        MinimalPath path;
        path.expansion = ContinuedFraction(integer_part, quotients);
        path.vertices = convergents(path.expansion);
        long long m = 0;
        // Unadjusted slope: edge determinants along the path, first edge excluded.
        for (std::size_t i = 1; i + 1 < path.vertices.size(); ++i) {
            Int det = farey_edge_det(path.vertices[i], path.vertices[i + 1]);
            m += static_cast<long long>(det);
        }
        path.unadjusted_slope = m;
        path.is_even = path.expansion.all_quotients_even();
        results.push_back(std::move(path));
    }

    void expand(const Rational& y) {
        if (y.is_integer()) {
            quotients.push_back(y.numerator());
            emit();
            quotients.pop_back();
            return;
        }
        Int lo = y.floor();
        for (int step = 0; step < 2; ++step) {
            Int b = lo + step;
            if (b > -2 && b < 2) continue;
            quotients.push_back(b);
            expand(tail_after(y, b));
            quotients.pop_back();
        }
    }
};

bool quotients_less(const MinimalPath& a, const MinimalPath& b) {
    return std::lexicographical_compare(a.expansion.quotients.begin(), a.expansion.quotients.end(),
                                        b.expansion.quotients.begin(), b.expansion.quotients.end());
}

}  // namespace

std::vector<MinimalPath> enumerate_minimal_expansions(const Rational& x) {
    if (x.is_infinite()) throw std::domain_error("enumerate_minimal_expansions: infinite argument");
    Enumerator en;
    if (x.is_integer()) {
        en.integer_part = x.numerator();
        en.emit();
        return std::move(en.results);
    }
    Int fl = x.floor();
    for (int step = 0; step < 2; ++step) {
        en.integer_part = fl + step;
        en.expand(Rational(x.denominator(), x.numerator() - en.integer_part * x.denominator()));
    }
    std::sort(en.results.begin(), en.results.end(), quotients_less);
    return std::move(en.results);
}

std::vector<MinimalPath> enumerate_minimal_expansions(const TwoBridgeKnot& knot, const Int& representative_p) {
    return enumerate_minimal_expansions(Rational(representative_p, knot.q()));
}

MinimalPath even_expansion(const Rational& x) {
    if (x.is_infinite()) throw std::domain_error("even_expansion: infinite argument");
    if (x.is_integer()) {
        MinimalPath p;
        p.expansion.integer_part = x.numerator();
        p.vertices = convergents(p.expansion);
        p.is_even = true;
        return p;
    }

    std::vector<ContinuedFraction> found;
    Int fl = x.floor();
    for (int step = 0; step < 2; ++step) {
        Int r = fl + step;
        ContinuedFraction cf(r, {});
        Rational y(x.denominator(), x.numerator() - r * x.denominator());
        bool ok = true;
        while (true) {
            if (y.is_integer()) {
                if (y.numerator() % 2 != 0) ok = false;
                else cf.quotients.push_back(y.numerator());
                break;
            }
            Int b = y.floor();
            if (b % 2 != 0) ++b;  // exactly one of floor, floor+1 is even
            cf.quotients.push_back(b);
            y = tail_after(y, b);
        }
        if (ok) found.push_back(std::move(cf));
    }
    if (found.size() != 1)
        throw std::logic_error("even_expansion: expected exactly one all-even expansion, found " +
                               std::to_string(found.size()));

    MinimalPath p;
    p.expansion = std::move(found.front());
    p.vertices = convergents(p.expansion);
    long long m = 0;
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i)
        m += static_cast<long long>(farey_edge_det(p.vertices[i], p.vertices[i + 1]));
    p.unadjusted_slope = m;
    p.is_even = true;
    return p;
}

SlopeMultiset::SlopeMultiset(const std::map<long long, Int>& m_counts, long long m_even) {
    for (const auto& [m, count] : m_counts) entries_[-2 * (m - m_even)] += count;
}

std::set<long long> SlopeMultiset::distinct_slopes() const {
    std::set<long long> out;
    for (const auto& [slope, count] : entries_) out.insert(slope);
    return out;
}

Int SlopeMultiset::path_count() const {
    Int total = 0;
    for (const auto& [slope, count] : entries_) total += count;
    return total;
}

SlopeMultiset SlopeMultiset::negated() const {
    SlopeMultiset out;
    for (const auto& [slope, count] : entries_) out.entries_[-slope] = count;
    return out;
}

namespace {

using MCounts = std::map<long long, Int>;

struct SlopeDp {
    // Tail fraction and position parity determine everything downstream.
    std::map<std::tuple<Int, Int, int>, MCounts> memo;

    // Distribution of the remaining contribution to m when the next quotient
    // sits at a position of the given parity (1 = odd position, factor -1).
    const MCounts& run(const Rational& y, int parity) {
        auto key = std::make_tuple(y.numerator(), y.denominator(), parity);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;

        MCounts out;
        int factor = parity ? -1 : 1;
        if (y.is_integer()) {
            out[factor * sign_of(y.numerator())] = 1;
        } else {
            Int lo = y.floor();
            for (int step = 0; step < 2; ++step) {
                Int b = lo + step;
                if (b > -2 && b < 2) continue;
                long long term = factor * sign_of(b);
                for (const auto& [m, count] : run(tail_after(y, b), 1 - parity))
                    out[term + m] += count;
            }
        }
        return memo.emplace(std::move(key), std::move(out)).first->second;
    }
};

}  // namespace

SlopeMultiset slope_multiset(const Rational& x) {
    if (x.is_infinite()) throw std::domain_error("slope_multiset: infinite argument");
    if (x.is_integer()) return SlopeMultiset(MCounts{{0, 1}}, 0);

    SlopeDp dp;
    MCounts m_counts;
    Int fl = x.floor();
    for (int step = 0; step < 2; ++step) {
        Int r = fl + step;
        Rational y(x.denominator(), x.numerator() - r * x.denominator());
        for (const auto& [m, count] : dp.run(y, 1)) m_counts[m] += count;
    }
    const MinimalPath even = even_expansion(x);
    return SlopeMultiset(m_counts, even.unadjusted_slope);
}

SlopeMultiset boundary_slopes(const TwoBridgeKnot& knot, const Int& representative_p) {
    Int rep = representative_p % knot.q();
    if (rep < 0) rep += knot.q();
    if (rep == 0 || boost::multiprecision::gcd(rep, knot.q()) != 1)
        throw std::invalid_argument("boundary_slopes: representative not a unit mod q");
    return slope_multiset(Rational(rep, knot.q()));
}

SlopeMultiset boundary_slopes(const TwoBridgeKnot& knot) {
    return boundary_slopes(knot, knot.canonical_p());
}

Int fibonacci(long long n) {
    if (n <= 0) return 0;
    Int a = 0, b = 1;  // fib(0), fib(1)
    for (long long i = 1; i < n; ++i) {
        Int c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return b;
}

std::pair<long long, Int> slope_count_bounds(const ContinuedFraction& sp) {
    if (!sp.is_strongly_positive())
        throw std::invalid_argument("slope_count_bounds: expansion is not strongly positive");
    long long m = static_cast<long long>(sp.quotients.size());
    return {2 + m / 2, fibonacci(m + 2)};
}

ExtremalPaths extremal_paths(const std::vector<MinimalPath>& paths) {
    if (paths.empty()) throw std::invalid_argument("extremal_paths: empty path list");
    std::size_t upper = 0, lower = 0;
    bool upper_tie = false, lower_tie = false;
    for (std::size_t i = 1; i < paths.size(); ++i) {
        long long m = paths[i].unadjusted_slope;
        if (m > paths[upper].unadjusted_slope) {
            upper = i;
            upper_tie = false;
        } else if (m == paths[upper].unadjusted_slope) {
            upper_tie = true;
        }
        if (m < paths[lower].unadjusted_slope) {
            lower = i;
            lower_tie = false;
        } else if (m == paths[lower].unadjusted_slope) {
            lower_tie = true;
        }
    }
    if (paths.size() > 1 && (upper_tie || lower_tie))
        throw std::logic_error("extremal_paths: tie at an extremum");
    return {upper, lower};
}

}  // namespace twobridge
