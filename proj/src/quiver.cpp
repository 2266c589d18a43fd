#include "qga/quiver.hpp"

#include <algorithm>
#include <map>

namespace qga {

void normalize_relations(Algebra& a) {
    for (const auto& r : a.relations) {
        if (r.first < 0 || r.first >= a.quiver.num_arrows() || r.second < 0 ||
            r.second >= a.quiver.num_arrows())
            throw InvalidAlgebraError("relation refers to unknown arrow");
        if (!a.composable(r.first, r.second))
            throw InvalidAlgebraError(
                "relation " + a.quiver.arrow(r.first).name + "*" +
                a.quiver.arrow(r.second).name + " is not composable");
    }
    std::sort(a.relations.begin(), a.relations.end());
    a.relations.erase(std::unique(a.relations.begin(), a.relations.end()),
                      a.relations.end());
}

int path_degree(const Algebra& a, const Path& p) {
    int d = 0;
    for (int ar : p.arrows) d += a.quiver.arrow(ar).degree;
    return d;
}

int path_source(const Algebra& a, const Path& p) {
    if (p.arrows.empty()) return p.source_vertex;
    return a.quiver.arrow(p.arrows.front()).source;
}

int path_target(const Algebra& a, const Path& p) {
    if (p.arrows.empty()) return p.source_vertex;
    return a.quiver.arrow(p.arrows.back()).target;
}

std::string path_to_string(const Algebra& a, const Path& p) {
    if (p.arrows.empty()) return "e_" + a.quiver.vertex(p.source_vertex);
    std::string s;
    for (size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) s += ".";
        s += a.quiver.arrow(p.arrows[i]).name;
    }
    return s;
}

Idempotent Idempotent::from_names(const Algebra& a,
                                  const std::vector<std::string>& names) {
    Idempotent e;
    for (const auto& n : names) {
        auto v = a.quiver.vertex_id(n);
        if (!v) throw InvalidAlgebraError("unknown vertex: " + n);
        e.vertices.push_back(*v);
    }
    std::sort(e.vertices.begin(), e.vertices.end());
    e.vertices.erase(std::unique(e.vertices.begin(), e.vertices.end()),
                     e.vertices.end());
    return e;
}

Idempotent Idempotent::complement(const Algebra& a) const {
    Idempotent c;
    for (int v = 0; v < a.quiver.num_vertices(); ++v)
        if (!contains(v)) c.vertices.push_back(v);
    return c;
}

GentleReport validate_gentle(const Algebra& a) {
    GentleReport rep;
    const auto& Q = a.quiver;
    auto fail = [&](const std::string& cond, const std::string& wit) {
        rep.is_gentle = false;
        rep.violations.push_back({cond, wit});
    };

    std::vector<int> out(Q.num_vertices(), 0), in(Q.num_vertices(), 0);
    for (const auto& ar : Q.arrows()) {
        ++out[ar.source];
        ++in[ar.target];
    }
    for (int v = 0; v < Q.num_vertices(); ++v) {
        if (out[v] > 2)
            fail("V1", "vertex " + Q.vertex(v) + " is the source of " +
                           std::to_string(out[v]) + " arrows");
        if (in[v] > 2)
            fail("V2", "vertex " + Q.vertex(v) + " is the target of " +
                           std::to_string(in[v]) + " arrows");
    }

    // For each arrow, count continuations/precursors split by membership
    // in I; gentleness demands at most one of each kind.
    for (int x = 0; x < Q.num_arrows(); ++x) {
        std::vector<int> cont_in, cont_out, prec_in, prec_out;
        for (int y = 0; y < Q.num_arrows(); ++y) {
            if (a.composable(x, y))
                (a.has_relation(x, y) ? cont_in : cont_out).push_back(y);
            if (a.composable(y, x))
                (a.has_relation(y, x) ? prec_in : prec_out).push_back(y);
        }
        auto names = [&](const std::vector<int>& v) {
            std::string s;
            for (size_t i = 0; i < v.size(); ++i)
                s += (i ? ", " : "") + Q.arrow(v[i]).name;
            return s;
        };
        if (cont_in.size() > 1)
            fail("V3", "arrow " + Q.arrow(x).name +
                           " has multiple vanishing continuations: " +
                           names(cont_in));
        if (cont_out.size() > 1)
            fail("V3", "arrow " + Q.arrow(x).name +
                           " has multiple nonzero continuations: " +
                           names(cont_out));
        if (prec_in.size() > 1)
            fail("V4", "arrow " + Q.arrow(x).name +
                           " has multiple vanishing precursors: " +
                           names(prec_in));
        if (prec_out.size() > 1)
            fail("V4", "arrow " + Q.arrow(x).name +
                           " has multiple nonzero precursors: " +
                           names(prec_out));
    }
    return rep;
}

}  // namespace qga
