#include "qga/homology.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "qga/paths.hpp"

namespace qga {

namespace {

CycleReport cycle_report(const Algebra& a, bool critical) {
    auto spec = critical ? spec_critical_paths(a) : spec_nonzero_paths(a);
    std::optional<Path> wit;
    CycleReport rep;
    rep.ok = !words_infinite(a, spec, &wit);
    rep.witness = wit;
    return rep;
}

}  // namespace

CycleReport is_smooth(const Algebra& a) { return cycle_report(a, true); }
CycleReport is_proper(const Algebra& a) { return cycle_report(a, false); }

ExtTable ext_table(const Algebra& a,
                   std::optional<std::pair<int, int>> shift_range) {
    if (!is_smooth(a).ok)
        throw InfiniteEnumerationError(
            "ext table is infinite: algebra is not smooth");
    // Critical words form paths in an acyclic digraph on arrows, so no
    // arrow repeats and the arrow count bounds the length.
    auto paths = enumerate_paths(a, /*critical=*/true, a.quiver.num_arrows());
    std::map<std::tuple<int, int, int>, ExtEntry> buckets;
    for (const auto& p : paths.paths) {
        int l = p.length() - path_degree(a, p);
        if (shift_range && (l < shift_range->first || l > shift_range->second))
            continue;
        int i = path_source(a, p), j = path_target(a, p);
        auto& e = buckets[{i, j, l}];
        e.i = i;
        e.j = j;
        e.l = l;
        ++e.dim;
        e.basis.push_back(p);
    }
    ExtTable t;
    for (auto& [k, e] : buckets) t.entries.push_back(std::move(e));
    return t;
}

nlohmann::ordered_json ext_table_to_json(const Algebra& a, const ExtTable& t) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& e : t.entries) {
        nlohmann::ordered_json j;
        j["i"] = a.quiver.vertex(e.i);
        j["j"] = a.quiver.vertex(e.j);
        j["l"] = e.l;
        j["dim"] = e.dim;
        auto basis = nlohmann::ordered_json::array();
        for (const auto& p : e.basis) basis.push_back(path_to_string(a, p));
        j["basis"] = basis;
        out.push_back(j);
    }
    return out;
}

DegreeBoundReport is_presilting_projective(const Algebra& a,
                                           const Idempotent& kept) {
    DegreeBoundReport rep;
    const int n = a.quiver.num_arrows();
    std::vector<std::vector<int>> succ(n), pred(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (a.composable(x, y) && !a.has_relation(x, y)) {
                succ[x].push_back(y);
                pred[y].push_back(x);
            }
    std::vector<bool> start(n, false), finish(n, false);
    for (int x = 0; x < n; ++x) {
        start[x] = kept.contains(a.quiver.arrow(x).source);
        finish[x] = kept.contains(a.quiver.arrow(x).target);
    }
    auto close = [&](const std::vector<std::vector<int>>& adj,
                     std::vector<bool> seen) {
        std::vector<int> q;
        for (int i = 0; i < n; ++i)
            if (seen[i]) q.push_back(i);
        while (!q.empty()) {
            int x = q.back();
            q.pop_back();
            for (int y : adj[x])
                if (!seen[y]) {
                    seen[y] = true;
                    q.push_back(y);
                }
        }
        return seen;
    };
    auto fwd = close(succ, start);
    auto bwd = close(pred, finish);
    std::vector<bool> live(n);
    int live_count = 0;
    for (int x = 0; x < n; ++x) {
        live[x] = fwd[x] && bwd[x];
        if (live[x]) ++live_count;
    }

    const long long NEG = std::numeric_limits<long long>::min() / 4;
    std::vector<long long> dist(n, NEG);  // best degree of a path ending at x
    std::vector<int> parent(n, -1);
    for (int x = 0; x < n; ++x)
        if (live[x] && start[x]) dist[x] = a.quiver.arrow(x).degree;
    int improved_node = -1;
    for (int it = 0; it <= live_count; ++it) {
        bool changed = false;
        for (int x = 0; x < n; ++x) {
            if (!live[x] || dist[x] == NEG) continue;
            for (int y : succ[x]) {
                if (!live[y]) continue;
                long long cand = dist[x] + a.quiver.arrow(y).degree;
                if (cand > dist[y]) {
                    dist[y] = cand;
                    parent[y] = x;
                    changed = true;
                    improved_node = y;
                }
            }
        }
        if (!changed) {
            improved_node = -1;
            break;
        }
    }
    if (improved_node >= 0) {
        // A relaxation survived |live| rounds: positive-degree cycle. Walk
        // parents until a repeat, then extract the cycle.
        std::vector<int> seen_at(n, -1);
        int x = improved_node, steps = 0;
        while (x >= 0 && seen_at[x] < 0) {
            seen_at[x] = steps++;
            x = parent[x];
        }
        rep.ok = false;
        rep.witness_is_cycle = true;
        if (x >= 0) {
            std::vector<int> cyc;
            int y = x;
            do {
                cyc.push_back(y);
                y = parent[y];
            } while (y != x);
            std::reverse(cyc.begin(), cyc.end());
            Path p;
            p.source_vertex = a.quiver.arrow(cyc.front()).source;
            p.arrows = cyc;
            rep.witness = p;
        }
        return rep;
    }
    long long best = 0;  // idempotents have degree 0
    int best_end = -1;
    for (int x = 0; x < n; ++x)
        if (live[x] && finish[x] && dist[x] > best) {
            best = dist[x];
            best_end = x;
        }
    if (best_end >= 0) {
        std::vector<int> arrows;
        for (int x = best_end; x >= 0; x = parent[x]) arrows.push_back(x);
        std::reverse(arrows.begin(), arrows.end());
        Path p;
        p.source_vertex = a.quiver.arrow(arrows.front()).source;
        p.arrows = arrows;
        rep.ok = false;
        rep.witness = p;
    }
    return rep;
}

DegreeBoundReport is_preSMC_simples(const Algebra& a, const Idempotent& kept) {
    if (!is_smooth(a).ok)
        throw InfiniteEnumerationError(
            "pre-SMC test requires a smooth algebra");
    DegreeBoundReport rep;
    WordSpec spec;
    spec.pair_allowed = [&a](int x, int y) { return a.has_relation(x, y); };
    spec.start_ok = [&a, &kept](int x) {
        return kept.contains(a.quiver.arrow(x).source);
    };
    spec.end_ok = [&a, &kept](int x) {
        return kept.contains(a.quiver.arrow(x).target);
    };
    auto words = enumerate_words(a, spec, a.quiver.num_arrows());
    for (const auto& w : words.words) {
        int l = w.length() - path_degree(a, w);
        if (l <= 0) {
            rep.ok = false;
            rep.witness = w;
            return rep;
        }
    }
    return rep;
}

}  // namespace qga
