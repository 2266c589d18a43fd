#include "qga/paths.hpp"

#include <algorithm>
#include <deque>

namespace qga {

namespace {

// Arrows reachable (via allowed pairs) from the given seed set.
std::vector<bool> closure(int n, const std::vector<std::vector<int>>& succ,
                          const std::vector<bool>& seed) {
    std::vector<bool> seen = seed;
    std::deque<int> q;
    for (int i = 0; i < n; ++i)
        if (seen[i]) q.push_back(i);
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : succ[x])
            if (!seen[y]) {
                seen[y] = true;
                q.push_back(y);
            }
    }
    return seen;
}

}  // namespace

bool words_infinite(const Algebra& a, const WordSpec& spec,
                    std::optional<Path>* witness) {
    const int n = a.quiver.num_arrows();
    std::vector<std::vector<int>> succ(n), pred(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (a.composable(x, y) && spec.pair_allowed(x, y)) {
                succ[x].push_back(y);
                pred[y].push_back(x);
            }
    std::vector<bool> starts(n, false), ends(n, false);
    for (int x = 0; x < n; ++x) {
        starts[x] = spec.start_ok(x);
        ends[x] = spec.end_ok(x);
    }
    auto fwd = closure(n, succ, starts);
    auto bwd = closure(n, pred, ends);

    // DFS for a cycle among arrows that can appear in some accepted word.
    std::vector<int> color(n, 0);  // 0 unvisited, 1 on stack, 2 done
    std::vector<int> parent(n, -1);
    for (int root = 0; root < n; ++root) {
        if (!fwd[root] || !bwd[root] || color[root]) continue;
        std::vector<std::pair<int, size_t>> stack{{root, 0}};
        color[root] = 1;
        while (!stack.empty()) {
            auto& [x, i] = stack.back();
            if (i < succ[x].size()) {
                int y = succ[x][i++];
                if (!fwd[y] || !bwd[y]) continue;
                if (color[y] == 1) {
                    if (witness) {
                        // Unwind the stack back to y to extract the cycle.
                        std::vector<int> cyc;
                        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
                            cyc.push_back(it->first);
                            if (it->first == y) break;
                        }
                        std::reverse(cyc.begin(), cyc.end());
                        Path p;
                        p.source_vertex = a.quiver.arrow(cyc.front()).source;
                        p.arrows = cyc;
                        *witness = p;
                    }
                    return true;
                }
                if (color[y] == 0) {
                    color[y] = 1;
                    stack.push_back({y, 0});
                }
            } else {
                color[x] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

WordEnumeration enumerate_words(const Algebra& a, const WordSpec& spec,
                                int max_len) {
    WordEnumeration out;
    out.bound = max_len;
    std::optional<Path> wit;
    bool infinite = words_infinite(a, spec, &wit);
    out.finite = !infinite;
    out.witness_cycle = wit;

    const int n = a.quiver.num_arrows();
    std::vector<std::vector<int>> frontier;  // words of current length
    for (int x = 0; x < n; ++x)
        if (spec.start_ok(x)) frontier.push_back({x});
    bool exhausted = false;
    for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
        for (const auto& w : frontier)
            if (spec.end_ok(w.back())) {
                Path p;
                p.source_vertex = a.quiver.arrow(w.front()).source;
                p.arrows = w;
                out.words.push_back(p);
            }
        if (len == max_len) break;
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier)
            for (int y = 0; y < n; ++y)
                if (a.composable(w.back(), y) && spec.pair_allowed(w.back(), y)) {
                    auto w2 = w;
                    w2.push_back(y);
                    next.push_back(std::move(w2));
                }
        frontier = std::move(next);
    }
    // Check whether anything remained beyond the bound.
    if (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier)
            for (int y = 0; y < n; ++y)
                if (a.composable(w.back(), y) && spec.pair_allowed(w.back(), y))
                    next.push_back({y});
        // Any extension that can still reach an accepting arrow means
        // truncation. Cheap over-approximation: any extension at all whose
        // suffix can reach an end arrow.
        std::vector<std::vector<int>> succ(n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (a.composable(x, y) && spec.pair_allowed(x, y))
                    succ[x].push_back(y);
        std::vector<bool> ends(n, false);
        for (int x = 0; x < n; ++x) ends[x] = spec.end_ok(x);
        std::vector<std::vector<int>> pred(n);
        for (int x = 0; x < n; ++x)
            for (int y : succ[x]) pred[y].push_back(x);
        auto can_end = closure(n, pred, ends);
        for (const auto& w : next)
            if (can_end[w.back()]) {
                exhausted = false;
                out.truncated = true;
                break;
            }
    }
    (void)exhausted;
    return out;
}

WordSpec spec_nonzero_paths(const Algebra& a) {
    WordSpec s;
    s.pair_allowed = [&a](int x, int y) { return !a.has_relation(x, y); };
    s.start_ok = [](int) { return true; };
    s.end_ok = [](int) { return true; };
    return s;
}

WordSpec spec_critical_paths(const Algebra& a) {
    WordSpec s;
    s.pair_allowed = [&a](int x, int y) { return a.has_relation(x, y); };
    s.start_ok = [](int) { return true; };
    s.end_ok = [](int) { return true; };
    return s;
}

PathEnumeration enumerate_paths(const Algebra& a, bool critical, int max_len) {
    PathEnumeration out;
    out.bound = max_len;
    for (int v = 0; v < a.quiver.num_vertices(); ++v) {
        Path p;
        p.source_vertex = v;
        out.paths.push_back(p);
    }
    auto spec = critical ? spec_critical_paths(a) : spec_nonzero_paths(a);
    auto words = enumerate_words(a, spec, max_len);
    out.finite = words.finite;
    out.truncated = words.truncated;
    for (auto& w : words.words) out.paths.push_back(std::move(w));
    return out;
}

}  // namespace qga
