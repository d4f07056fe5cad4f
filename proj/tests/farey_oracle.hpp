#pragma once

// Test-only oracle. Minimal paths are enumerated by walking the Farey graph
// itself: build every edge with denominators up to the bound inside the
// window [-1, 2], then DFS from 1/0 under the path rules (no backtracking,
// never two edges of one triangle). It shares no code with the
// continued-fraction recursion it is used to check.

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace twobridge::oracle {

using Frac = std::pair<long long, long long>;  // numerator, denominator >= 0
using Path = std::vector<Frac>;

struct FareyGraph {
    std::map<Frac, std::vector<Frac>> adj;

    void add_edge(const Frac& a, const Frac& b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    // Subdivide the triangle over (a, b) by mediants until the denominator
    // bound is exceeded; emits exactly the edges of the tessellation.
    void subdivide(const Frac& a, const Frac& b, long long q_max) {
        Frac med{a.first + b.first, a.second + b.second};
        if (med.second > q_max) return;
        add_edge(a, med);
        add_edge(b, med);
        subdivide(a, med, q_max);
        subdivide(med, b, q_max);
    }
};

class MinimalPathOracle {
public:
    explicit MinimalPathOracle(long long q_max) : q_max_(q_max) {
        const Frac inf{1, 0};
        for (long long r = -1; r <= 2; ++r) {
            graph_.add_edge(inf, {r, 1});
            if (r < 2) graph_.add_edge({r, 1}, {r + 1, 1});
        }
        for (long long r = -1; r < 2; ++r) graph_.subdivide({r, 1}, {r + 1, 1}, q_max);

        for (long long r = -1; r <= 2; ++r) {
            Path path{inf, {r, 1}};
            record(path);
            walk(inf, {r, 1}, path);
        }
    }

    // All minimal paths from 1/0 to p/q, as vertex sequences.
    std::vector<Path> paths_to(long long p, long long q) const {
        auto it = found_.find({p, q});
        return it == found_.end() ? std::vector<Path>{} : it->second;
    }

private:
    void record(const Path& path) {
        const Frac& end = path.back();
        if (end.second >= 3 && end.second % 2 == 1 && end.first > 0 && end.first < end.second &&
            std::gcd(end.first, end.second) == 1)
            found_[end].push_back(path);
    }

    void walk(const Frac& prev, const Frac& cur, Path& path) {
        // The two triangles over the edge (prev, cur) have third vertices at
        // the mediant and at the difference; a minimal path may use neither.
        const Frac mate1{prev.first + cur.first, prev.second + cur.second};
        const Frac mate2{cur.first - prev.first, cur.second - prev.second};
        for (const Frac& next : graph_.adj.at(cur)) {
            // Continuations always ascend in denominator: the other
            // small-denominator neighbor is a triangle mate.
            if (next.second <= cur.second) continue;
            if (next == mate1 || next == mate2) continue;
            path.push_back(next);
            record(path);
            walk(cur, next, path);
            path.pop_back();
        }
    }

    long long q_max_;
    FareyGraph graph_;
    std::map<Frac, std::vector<Path>> found_;
};

}  // namespace twobridge::oracle
