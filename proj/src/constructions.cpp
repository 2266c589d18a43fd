#include "qga/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qga/paths.hpp"

namespace qga {

namespace {

std::string word_name(const Algebra& a, const Path& w) {
    if (w.arrows.size() == 1) return a.quiver.arrow(w.arrows[0]).name;
    std::string s = "[";
    for (size_t i = 0; i < w.arrows.size(); ++i) {
        if (i) s += ".";
        s += a.quiver.arrow(w.arrows[i]).name;
    }
    return s + "]";
}

// Builds the quotient algebra whose generators are the given words, with a
// relation between two words exactly when their junction pair lies in I.
// Cut generators carry the resolution grading (shifted down by length - 1);
// corner generators keep the plain path degree.
Algebra algebra_from_words(const Algebra& a, const Idempotent& removed,
                           const WordEnumeration& words, bool shift_degree) {
    Algebra out;
    for (int v = 0; v < a.quiver.num_vertices(); ++v)
        if (!removed.contains(v)) out.quiver.add_vertex(a.quiver.vertex(v));
    for (const auto& w : words.words) {
        int deg = path_degree(a, w);
        if (shift_degree) deg -= static_cast<int>(w.arrows.size()) - 1;
        out.quiver.add_arrow(word_name(a, w),
                             a.quiver.vertex(path_source(a, w)),
                             a.quiver.vertex(path_target(a, w)), deg);
    }
    const int m = static_cast<int>(words.words.size());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const auto& p = words.words[i];
            const auto& q = words.words[j];
            if (path_target(a, p) != path_source(a, q)) continue;
            if (a.has_relation(p.arrows.back(), q.arrows.front()))
                out.relations.emplace_back(i, j);
        }
    normalize_relations(out);
    out.truncated = words.truncated;
    out.truncation_bound = words.truncated ? words.bound : 0;
    return out;
}

WordSpec cut_spec(const Algebra& a, const Idempotent& removed) {
    WordSpec s;
    s.pair_allowed = [&a, &removed](int x, int y) {
        return a.has_relation(x, y) &&
               removed.contains(a.quiver.arrow(x).target);
    };
    s.start_ok = [&a, &removed](int x) {
        return !removed.contains(a.quiver.arrow(x).source);
    };
    s.end_ok = [&a, &removed](int x) {
        return !removed.contains(a.quiver.arrow(x).target);
    };
    return s;
}

WordSpec corner_spec(const Algebra& a, const Idempotent& kept) {
    WordSpec s;
    s.pair_allowed = [&a, &kept](int x, int y) {
        return !a.has_relation(x, y) && !kept.contains(a.quiver.arrow(x).target);
    };
    s.start_ok = [&a, &kept](int x) {
        return kept.contains(a.quiver.arrow(x).source);
    };
    s.end_ok = [&a, &kept](int x) {
        return kept.contains(a.quiver.arrow(x).target);
    };
    return s;
}

}  // namespace

Algebra quadratic_dual(const Algebra& a) {
    Algebra d;
    for (const auto& v : a.quiver.vertices()) d.quiver.add_vertex(v);
    // Opposite arrows keep their names so the double dual is the identity
    // on the nose, not just up to isomorphism.
    for (const auto& ar : a.quiver.arrows())
        d.quiver.add_arrow(ar.name, a.quiver.vertex(ar.target),
                           a.quiver.vertex(ar.source), 1 - ar.degree);
    for (int x = 0; x < a.quiver.num_arrows(); ++x)
        for (int y = 0; y < a.quiver.num_arrows(); ++y)
            if (a.composable(x, y) && !a.has_relation(x, y))
                d.relations.emplace_back(y, x);
    normalize_relations(d);
    d.truncated = a.truncated;
    d.truncation_bound = a.truncation_bound;
    return d;
}

bool idempotent_cut_finite(const Algebra& a, const Idempotent& removed) {
    return !words_infinite(a, cut_spec(a, removed));
}

Algebra idempotent_cut(const Algebra& a, const Idempotent& removed,
                       int max_len) {
    for (int v : removed.vertices)
        if (v < 0 || v >= a.quiver.num_vertices())
            throw InvalidAlgebraError("idempotent refers to unknown vertex");
    auto words = enumerate_words(a, cut_spec(a, removed), max_len);
    auto out = algebra_from_words(a, removed, words, /*shift_degree=*/true);
    return out;
}

bool corner_finite(const Algebra& a, const Idempotent& kept) {
    return !words_infinite(a, corner_spec(a, kept));
}

Algebra corner_algebra(const Algebra& a, const Idempotent& kept, int max_len) {
    auto rep = validate_gentle(a);
    if (!rep.is_gentle)
        throw InvalidAlgebraError(
            "corner algebra requires a gentle input; first violation: " +
            rep.violations.front().witness);
    auto words = enumerate_words(a, corner_spec(a, kept), max_len);
    return algebra_from_words(a, kept.complement(a), words,
                              /*shift_degree=*/false);
}

Algebra corner_via_dual(const Algebra& a, const Idempotent& kept,
                        int max_len) {
    auto rep = validate_gentle(a);
    if (!rep.is_gentle)
        throw InvalidAlgebraError(
            "corner algebra requires a gentle input; first violation: " +
            rep.violations.front().witness);
    Algebra d = quadratic_dual(a);
    Algebra cut = idempotent_cut(d, kept.complement(d), max_len);
    return quadratic_dual(cut);
}

namespace {

bool try_arrow_assignment(const Algebra& a, const Algebra& b, size_t k,
                          std::vector<int>& vmap, std::vector<int>& amap,
                          std::vector<bool>& vused, std::vector<bool>& aused) {
    const int n = a.quiver.num_arrows();
    if (static_cast<int>(k) == n) {
        // Extend the vertex map bijectively over untouched vertices.
        std::vector<int> free_cod;
        for (int v = 0; v < b.quiver.num_vertices(); ++v)
            if (!vused[v]) free_cod.push_back(v);
        std::vector<int> saved = vmap;
        size_t idx = 0;
        for (int v = 0; v < a.quiver.num_vertices(); ++v)
            if (vmap[v] < 0) vmap[v] = free_cod[idx++];
        // Relations must map exactly onto relations.
        std::vector<std::pair<int, int>> mapped;
        for (const auto& r : a.relations)
            mapped.emplace_back(amap[r.first], amap[r.second]);
        std::sort(mapped.begin(), mapped.end());
        if (mapped == b.relations) return true;
        vmap = saved;
        return false;
    }
    const Arrow& ar = a.quiver.arrow(static_cast<int>(k));
    for (int c = 0; c < b.quiver.num_arrows(); ++c) {
        if (aused[c]) continue;
        const Arrow& bc = b.quiver.arrow(c);
        if (bc.degree != ar.degree) continue;
        int vs = vmap[ar.source], vt = vmap[ar.target];
        if (vs >= 0 && vs != bc.source) continue;
        if (vt >= 0 && vt != bc.target) continue;
        bool set_s = vs < 0, set_t = vt < 0;
        if (set_s) {
            if (vused[bc.source]) continue;
            vmap[ar.source] = bc.source;
            vused[bc.source] = true;
        }
        if (set_t && vmap[ar.target] < 0) {
            if (vused[bc.target]) {
                if (set_s) {
                    vused[bc.source] = false;
                    vmap[ar.source] = -1;
                }
                continue;
            }
            vmap[ar.target] = bc.target;
            vused[bc.target] = true;
        } else if (set_t && vmap[ar.target] != bc.target) {
            // source assignment just fixed the target (loop case) wrongly
            if (set_s) {
                vused[bc.source] = false;
                vmap[ar.source] = -1;
            }
            continue;
        }
        amap[k] = c;
        aused[c] = true;
        if (try_arrow_assignment(a, b, k + 1, vmap, amap, vused, aused))
            return true;
        aused[c] = false;
        amap[k] = -1;
        if (set_t && vmap[ar.target] == bc.target &&
            !(set_s && ar.source == ar.target)) {
            vused[bc.target] = false;
            vmap[ar.target] = -1;
        }
        if (set_s) {
            vused[bc.source] = false;
            vmap[ar.source] = -1;
        }
    }
    return false;
}

}  // namespace

std::optional<GradedIso> graded_iso(const Algebra& a, const Algebra& b) {
    if (a.quiver.num_vertices() != b.quiver.num_vertices()) return std::nullopt;
    if (a.quiver.num_arrows() != b.quiver.num_arrows()) return std::nullopt;
    if (a.relations.size() != b.relations.size()) return std::nullopt;
    std::multiset<int> da, db;
    for (const auto& ar : a.quiver.arrows()) da.insert(ar.degree);
    for (const auto& ar : b.quiver.arrows()) db.insert(ar.degree);
    if (da != db) return std::nullopt;

    std::vector<int> vmap(a.quiver.num_vertices(), -1);
    std::vector<int> amap(a.quiver.num_arrows(), -1);
    std::vector<bool> vused(b.quiver.num_vertices(), false);
    std::vector<bool> aused(b.quiver.num_arrows(), false);
    if (!try_arrow_assignment(a, b, 0, vmap, amap, vused, aused))
        return std::nullopt;
    return GradedIso{vmap, amap};
}

bool check_iterated_cut(const Algebra& a, const Idempotent& e,
                        const Idempotent& f, int max_len) {
    Idempotent un;
    un.vertices = e.vertices;
    for (int v : f.vertices) un.vertices.push_back(v);
    std::sort(un.vertices.begin(), un.vertices.end());
    un.vertices.erase(std::unique(un.vertices.begin(), un.vertices.end()),
                      un.vertices.end());
    Algebra one_step = idempotent_cut(a, un, max_len);

    auto iterate = [&](const Idempotent& first, const Idempotent& second) {
        Algebra mid = idempotent_cut(a, first, max_len);
        std::vector<std::string> names;
        for (int v : second.vertices)
            if (!first.contains(v)) names.push_back(a.quiver.vertex(v));
        return idempotent_cut(mid, Idempotent::from_names(mid, names), max_len);
    };
    Algebra ef = iterate(e, f);
    Algebra fe = iterate(f, e);
    return graded_iso(ef, one_step).has_value() &&
           graded_iso(fe, one_step).has_value();
}

}  // namespace qga
