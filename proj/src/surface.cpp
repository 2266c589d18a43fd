#include "qga/surface.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "qga/constructions.hpp"
#include "qga/homology.hpp"

namespace qga {

int RibbonModel::chain_of_end(int end) const {
    for (size_t c = 0; c < linear_chains.size(); ++c)
        for (int e : linear_chains[c])
            if (e == end) return static_cast<int>(c);
    for (size_t c = 0; c < cyclic_chains.size(); ++c)
        for (int e : cyclic_chains[c])
            if (e == end) return static_cast<int>(linear_chains.size() + c);
    return -1;
}

RibbonModel assemble_ribbon(const Algebra& a) {
    auto rep = validate_gentle(a);
    if (!rep.is_gentle)
        throw InvalidAlgebraError(
            "surface model requires a gentle algebra; first violation: " +
            rep.violations.front().witness);

    const auto& Q = a.quiver;
    RibbonModel m;
    m.num_arcs = Q.num_vertices();
    m.tail_end.assign(Q.num_arrows(), -1);
    m.head_end.assign(Q.num_arrows(), -1);

    // Per arc: place head/tail attachments on the two ends. Composable
    // pairs through the arc force same end (nonzero) or opposite ends
    // (relation); each end holds at most one head and one tail. At most
    // four attachments, so take the lexicographically first valid
    // assignment (canonical: first attachment anchors end 0).
    for (int v = 0; v < Q.num_vertices(); ++v) {
        struct Att {
            int arrow;
            bool is_head;
        };
        std::vector<Att> atts;
        for (int x = 0; x < Q.num_arrows(); ++x)
            if (Q.arrow(x).target == v) atts.push_back({x, true});
        for (int x = 0; x < Q.num_arrows(); ++x)
            if (Q.arrow(x).source == v) atts.push_back({x, false});
        const int k = static_cast<int>(atts.size());
        bool placed = false;
        for (int mask = 0; mask < (1 << k) && !placed; ++mask) {
            auto side = [&](int i) { return (mask >> i) & 1; };
            bool ok = true;
            int heads[2] = {0, 0}, tails[2] = {0, 0};
            for (int i = 0; i < k && ok; ++i)
                (atts[i].is_head ? heads : tails)[side(i)]++;
            ok = ok && heads[0] <= 1 && heads[1] <= 1 && tails[0] <= 1 &&
                 tails[1] <= 1;
            for (int i = 0; i < k && ok; ++i)
                for (int j = 0; j < k && ok; ++j) {
                    if (!atts[i].is_head || atts[j].is_head) continue;
                    bool nonzero = !a.has_relation(atts[i].arrow, atts[j].arrow);
                    if ((side(i) == side(j)) != nonzero) ok = false;
                }
            if (!ok) continue;
            placed = true;
            for (int i = 0; i < k; ++i) {
                int end = 2 * v + side(i);
                if (atts[i].is_head)
                    m.head_end[atts[i].arrow] = end;
                else
                    m.tail_end[atts[i].arrow] = end;
            }
        }
        if (!placed)
            throw InvalidAlgebraError(
                "inconsistent end assignment at vertex " + Q.vertex(v));
    }

    // Chains: each end has at most one outgoing link (an arrow leaving it)
    // and one incoming link (an arrow arriving); arrow direction is the
    // anticlockwise order around the marked point.
    const int E = 2 * m.num_arcs;
    std::vector<int> next(E, -1), prev(E, -1);
    for (int x = 0; x < Q.num_arrows(); ++x) {
        if (next[m.tail_end[x]] != -1 || prev[m.head_end[x]] != -1)
            throw InvalidAlgebraError("end slot used twice");
        next[m.tail_end[x]] = m.head_end[x];
        prev[m.head_end[x]] = m.tail_end[x];
    }
    std::vector<bool> seen(E, false);
    for (int e = 0; e < E; ++e) {
        if (seen[e] || prev[e] != -1) continue;
        std::vector<int> chain;
        for (int x = e; x != -1; x = next[x]) {
            chain.push_back(x);
            seen[x] = true;
        }
        m.linear_chains.push_back(std::move(chain));
    }
    for (int e = 0; e < E; ++e) {
        if (seen[e]) continue;
        std::vector<int> chain;
        int x = e;
        do {
            chain.push_back(x);
            seen[x] = true;
            x = next[x];
        } while (x != e);
        m.cyclic_chains.push_back(std::move(chain));
    }

    // Corner walk. A token is an arrival end x (traveling along arc x/2).
    // The next side around the face is the arc whose end precedes x in its
    // chain; no predecessor means the face closes along the boundary.
    std::vector<bool> used(E, false);
    auto walk = [&](int start_x, bool expect_boundary) {
        RibbonModel::Face f;
        int x = start_x;
        while (true) {
            if (used[x]) throw InvalidAlgebraError("face walk reuses a token");
            used[x] = true;
            f.tokens.push_back({x / 2, x});
            int z = prev[x];
            if (z == -1) {
                f.boundary = true;
                f.end_chain = m.chain_of_end(x);
                break;
            }
            x = z ^ 1;
            if (!expect_boundary && x == start_x) break;
        }
        return f;
    };
    for (size_t c = 0; c < m.linear_chains.size(); ++c) {
        int y = m.linear_chains[c].back();
        auto f = walk(y ^ 1, true);
        f.start_chain = static_cast<int>(c);
        m.faces.push_back(std::move(f));
    }
    for (int e = 0; e < E; ++e)
        if (!used[e]) m.faces.push_back(walk(e, false));
    return m;
}

SurfaceInvariants surface_invariants(const Algebra& a) {
    RibbonModel m = assemble_ribbon(a);
    SurfaceInvariants s;
    s.boundary_circ = static_cast<int>(m.linear_chains.size());
    s.punctures_circ = static_cast<int>(m.cyclic_chains.size());
    int boundary_faces = 0;
    for (const auto& f : m.faces)
        if (f.boundary)
            ++boundary_faces;
        else
            ++s.punctures_bullet;
    s.boundary_bullet = boundary_faces;

    // Connected components of the dissection: two arcs lie in the same
    // component when some chain contains an end of each.
    std::vector<int> parent(m.num_arcs);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    auto unite_chain = [&](const std::vector<int>& chain) {
        for (size_t i = 1; i < chain.size(); ++i)
            parent[find(chain[i] / 2)] = find(chain[0] / 2);
    };
    for (const auto& c : m.linear_chains) unite_chain(c);
    for (const auto& c : m.cyclic_chains) unite_chain(c);
    std::map<int, int> comp_id;
    for (int arc = 0; arc < m.num_arcs; ++arc)
        comp_id.emplace(find(arc), static_cast<int>(comp_id.size()));
    s.num_components = static_cast<int>(comp_id.size());
    auto comp_of_chain = [&](const std::vector<int>& chain) {
        return comp_id.at(find(chain[0] / 2));
    };

    // Boundary components: follow "face starting at chain c ends at chain
    // c'" around; each orbit is one boundary circle.
    std::vector<int> comp_boundary(s.num_components, 0);
    std::vector<int> to(m.linear_chains.size(), -1);
    for (const auto& f : m.faces)
        if (f.boundary) to[f.start_chain] = f.end_chain;
    std::vector<bool> done(m.linear_chains.size(), false);
    for (size_t c = 0; c < to.size(); ++c) {
        if (done[c]) continue;
        ++s.boundary_components;
        ++comp_boundary[comp_of_chain(m.linear_chains[c])];
        for (int x = static_cast<int>(c); !done[x]; x = to[x]) done[x] = true;
    }

    int circ_points = s.boundary_circ + s.punctures_circ;
    s.euler_characteristic = circ_points - m.num_arcs + s.punctures_bullet;
    // Traced cell count: chain points, arcs plus one boundary segment per
    // boundary face, all faces.
    s.euler_traced = circ_points - (m.num_arcs + boundary_faces) +
                     (boundary_faces + s.punctures_bullet);

    // Genus per component: chi_i = 2 - 2 g_i - b_i on each connected piece.
    std::vector<int> comp_chi(s.num_components, 0);
    for (const auto& c : m.linear_chains) ++comp_chi[comp_of_chain(c)];
    for (const auto& c : m.cyclic_chains) ++comp_chi[comp_of_chain(c)];
    for (int arc = 0; arc < m.num_arcs; ++arc) --comp_chi[comp_id.at(find(arc))];
    for (const auto& f : m.faces)
        if (!f.boundary) ++comp_chi[comp_id.at(find(f.tokens[0].first))];
    for (int i = 0; i < s.num_components; ++i) {
        int twice_g = 2 - comp_boundary[i] - comp_chi[i];
        if (twice_g < 0 || twice_g % 2 != 0)
            throw InvalidAlgebraError("inconsistent surface invariants");
        s.genus += twice_g / 2;
    }
    return s;
}

CutInvariants cut_invariants(const Algebra& a, const Idempotent& removed,
                             int max_len) {
    CutInvariants out;
    Algebra cut = idempotent_cut(a, removed, max_len);
    Algebra corner = corner_algebra(a, removed, max_len);
    if (cut.truncated || corner.truncated)
        throw InfiniteEnumerationError(
            "cut or corner is infinite; surface invariants undefined");
    out.cut = surface_invariants(cut);
    out.corner = surface_invariants(corner);
    return out;
}

TwoOutOfThreeReport two_out_of_three(const Algebra& a,
                                     const Idempotent& removed, int max_len) {
    TwoOutOfThreeReport r;
    auto flags = [](const Algebra& x) {
        return SmoothProper{is_smooth(x).ok, is_proper(x).ok};
    };
    r.whole = flags(a);
    Algebra cut = idempotent_cut(a, removed, max_len);
    Algebra corner = corner_algebra(a, removed, max_len);
    if (cut.truncated || corner.truncated) r.all_finite = false;
    r.cut = flags(cut);
    r.corner = flags(corner);
    if (r.all_finite) {
        int clean = 0;
        for (auto f : {r.whole, r.cut, r.corner})
            if (f.smooth && f.proper) ++clean;
        r.consistent = clean != 2;
    }
    return r;
}

std::string ribbon_to_dot(const Algebra& a, const RibbonModel& m) {
    std::ostringstream os;
    os << "digraph ribbon {\n";
    os << "  // arcs as bold edges between their two ends\n";
    for (int v = 0; v < m.num_arcs; ++v) {
        os << "  \"" << a.quiver.vertex(v) << ".0\" -> \""
           << a.quiver.vertex(v) << ".1\" [dir=none, style=bold];\n";
    }
    auto end_name = [&](int e) {
        return a.quiver.vertex(e / 2) + "." + std::to_string(e % 2);
    };
    for (int x = 0; x < a.quiver.num_arrows(); ++x)
        os << "  \"" << end_name(m.tail_end[x]) << "\" -> \""
           << end_name(m.head_end[x]) << "\" [label=\""
           << a.quiver.arrow(x).name << "\"];\n";
    os << "  // chains (boundary points, then punctures)\n";
    for (size_t c = 0; c < m.linear_chains.size(); ++c) {
        os << "  // boundary point " << c << ":";
        for (int e : m.linear_chains[c]) os << " " << end_name(e);
        os << "\n";
    }
    for (size_t c = 0; c < m.cyclic_chains.size(); ++c) {
        os << "  // puncture " << c << ":";
        for (int e : m.cyclic_chains[c]) os << " " << end_name(e);
        os << "\n";
    }
    for (size_t i = 0; i < m.faces.size(); ++i) {
        os << "  // face " << i << (m.faces[i].boundary ? " (boundary):" : ":");
        for (auto [arc, e] : m.faces[i].tokens) os << " " << end_name(e);
        os << "\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace qga
