#include "qga/classify.hpp"

#include <algorithm>
#include <sstream>

#include "qga/constructions.hpp"
#include "qga/homology.hpp"
#include "qga/surface.hpp"

namespace qga {

Algebra canonical_An(int n, const std::vector<int>& degrees) {
    if (n < 1 || degrees.size() != static_cast<size_t>(4 * n - 1))
        throw InvalidAlgebraError("genus-n shape needs 4n-1 arrow degrees");
    Algebra q;
    for (int v = 1; v <= 2 * n; ++v) q.quiver.add_vertex(std::to_string(v));
    int d = 0;
    for (int i = 1; i <= n; ++i) {
        std::string lo = std::to_string(2 * i - 1), hi = std::to_string(2 * i);
        q.quiver.add_arrow("a" + std::to_string(i), lo, hi, degrees[d++]);
        q.quiver.add_arrow("b" + std::to_string(i), hi, lo, degrees[d++]);
        q.quiver.add_arrow("c" + std::to_string(i), lo, hi, degrees[d++]);
        if (i < n)
            q.quiver.add_arrow("d" + std::to_string(i), hi,
                               std::to_string(2 * i + 1), degrees[d++]);
    }
    for (int i = 1; i <= n; ++i) {
        int ai = *q.quiver.arrow_id("a" + std::to_string(i));
        int bi = *q.quiver.arrow_id("b" + std::to_string(i));
        int ci = *q.quiver.arrow_id("c" + std::to_string(i));
        q.relations.emplace_back(ai, bi);
        q.relations.emplace_back(bi, ci);
        if (i < n) {
            int di = *q.quiver.arrow_id("d" + std::to_string(i));
            int an = *q.quiver.arrow_id("a" + std::to_string(i + 1));
            q.relations.emplace_back(ci, di);
            q.relations.emplace_back(di, an);
        }
    }
    normalize_relations(q);
    return q;
}

namespace {

Algebra forget_grading(const Algebra& a) {
    Algebra z;
    for (const auto& v : a.quiver.vertices()) z.quiver.add_vertex(v);
    for (const auto& ar : a.quiver.arrows())
        z.quiver.add_arrow(ar.name, a.quiver.vertex(ar.source),
                           a.quiver.vertex(ar.target), 0);
    z.relations = a.relations;
    normalize_relations(z);
    return z;
}

void require_smooth_proper(const Algebra& a, const char* what) {
    if (!is_smooth(a).ok || !is_proper(a).ok)
        throw InvalidAlgebraError(std::string(what) +
                                  " requires a smooth and proper algebra");
}

}  // namespace

std::optional<AnShape> detect_An_shape(const Algebra& a) {
    int nv = a.quiver.num_vertices();
    if (nv < 2 || nv % 2 != 0) return std::nullopt;
    int n = nv / 2;
    if (a.quiver.num_arrows() != 4 * n - 1) return std::nullopt;
    Algebra canon = canonical_An(n, std::vector<int>(4 * n - 1, 0));
    auto iso = graded_iso(canon, forget_grading(a));
    if (!iso) return std::nullopt;
    AnShape shape;
    shape.n = n;
    shape.vertex_map = iso->vertex_map;
    auto deg_of = [&](const std::string& name) {
        int c = *canon.quiver.arrow_id(name);
        return a.quiver.arrow(iso->arrow_map[c]).degree;
    };
    for (int i = 1; i <= n; ++i) {
        int da = deg_of("a" + std::to_string(i));
        int db = deg_of("b" + std::to_string(i));
        int dc = deg_of("c" + std::to_string(i));
        shape.params.emplace_back(da + db, db + dc);
    }
    return shape;
}

bool has_full_exceptional_sequence(const Algebra& a) {
    require_smooth_proper(a, "exceptional sequence test");
    auto s = surface_invariants(a);
    return !(s.genus >= 1 && s.boundary_components == 1 &&
             s.boundary_circ == 1);
}

std::optional<std::vector<int>> exceptional_sequence_acyclic(const Algebra& a) {
    const int nv = a.quiver.num_vertices();
    std::vector<int> indeg(nv, 0);
    for (const auto& ar : a.quiver.arrows()) ++indeg[ar.target];
    std::vector<bool> peeled(nv, false);
    std::vector<int> order;
    for (int step = 0; step < nv; ++step) {
        int pick = -1;
        for (int v = 0; v < nv && pick < 0; ++v)
            if (!peeled[v] && indeg[v] == 0) pick = v;
        if (pick < 0) return std::nullopt;  // oriented cycle
        peeled[pick] = true;
        order.push_back(pick);
        for (const auto& ar : a.quiver.arrows())
            if (ar.source == pick && !peeled[ar.target]) --indeg[ar.target];
    }
    return order;
}

ExistenceVerdict silting_existence(const Algebra& a) {
    require_smooth_proper(a, "silting existence");
    ExistenceVerdict v;
    if (has_full_exceptional_sequence(a)) {
        v.value = Existence::Exists;
        v.rule = "R1";
        v.evidence = "full exceptional sequence";
        return v;
    }
    auto shape = detect_An_shape(a);
    if (shape) {
        bool all_ok = true;
        for (auto [ai, bi] : shape->params)
            if (ai == 1 && bi == 1) all_ok = false;
        std::ostringstream ev;
        ev << "genus-" << shape->n << " shape, params";
        for (auto [ai, bi] : shape->params)
            ev << " (" << ai << "," << bi << ")";
        if (all_ok) {
            v.value = Existence::Exists;
            v.rule = "R2";
            v.evidence = ev.str();
            return v;
        }
        if (shape->n == 1) {
            v.value = Existence::NotExists;
            v.rule = "R3";
            v.evidence = ev.str();
            return v;
        }
        v.value = Existence::Unknown;
        v.rule = "R4";
        v.evidence = ev.str();
        return v;
    }
    auto s = surface_invariants(a);
    std::ostringstream ev;
    ev << "genus " << s.genus << ", one boundary, one marked point, "
       << "no literal shape match";
    v.value = Existence::Unknown;
    v.rule = "R4";
    v.evidence = ev.str();
    return v;
}

G11Report g11_equivalences(const Algebra& a) {
    require_smooth_proper(a, "loop-arc equivalence report");
    G11Report r;

    // (1) every vertex carries a nonzero cycle of positive length.
    const int na = a.quiver.num_arrows();
    std::vector<std::vector<bool>> reach(na, std::vector<bool>(na, false));
    for (int x = 0; x < na; ++x) reach[x][x] = true;
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < na; ++y)
            if (a.composable(x, y) && !a.has_relation(x, y)) reach[x][y] = true;
    for (int k = 0; k < na; ++k)
        for (int x = 0; x < na; ++x)
            if (reach[x][k])
                for (int y = 0; y < na; ++y)
                    if (reach[k][y]) reach[x][y] = true;
    r.all_corners_nontrivial = true;
    for (int v = 0; v < a.quiver.num_vertices(); ++v) {
        bool has_cycle = false;
        for (int x = 0; x < na && !has_cycle; ++x) {
            if (a.quiver.arrow(x).source != v) continue;
            for (int y = 0; y < na && !has_cycle; ++y)
                if (a.quiver.arrow(y).target == v && reach[x][y])
                    has_cycle = true;
        }
        if (!has_cycle) r.all_corners_nontrivial = false;
    }

    // (2) both ends of every arc in the same chain.
    RibbonModel m = assemble_ribbon(a);
    r.all_arcs_loops = true;
    for (int v = 0; v < m.num_arcs; ++v)
        if (m.chain_of_end(2 * v) != m.chain_of_end(2 * v + 1))
            r.all_arcs_loops = false;

    // (3) one boundary component with one marked point.
    auto s = surface_invariants(a);
    r.one_boundary_one_circ = s.boundary_components == 1 && s.boundary_circ == 1;

    r.agree = r.all_corners_nontrivial == r.all_arcs_loops &&
              r.all_arcs_loops == r.one_boundary_one_circ;
    return r;
}

}  // namespace qga
