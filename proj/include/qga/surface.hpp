// Marked-surface model of a gentle algebra.
//
// Every quiver vertex is an arc with two ends. An arrow leaves an end of
// its source arc and arrives at an end of its target arc; a composable
// pair sits at the same end of the middle arc exactly when its composition
// is nonzero. Ends linked by arrows form chains (arrow direction = the
// anticlockwise order around the point): linear chains are boundary
// marked points, cyclic chains are interior punctures of the first color.
// Faces are traced by the fatgraph corner walk; a face that never meets a
// chain gap is an interior puncture of the second color. Euler
// characteristic: chi = #chain-points - #arcs + #interior-faces, and
// genus from chi = 2 - 2g - b.

#pragma once

#include <string>
#include <vector>

#include "qga/quiver.hpp"

namespace qga {

// An arc end is encoded as 2*vertex + side with side in {0, 1}.
struct RibbonModel {
    int num_arcs = 0;
    std::vector<int> tail_end;  // per arrow: end of the source arc it leaves
    std::vector<int> head_end;  // per arrow: end of the target arc it reaches

    // Chains of ends: linked lists under "arrow from this end's tail slot".
    std::vector<std::vector<int>> linear_chains;  // boundary points, in order
    std::vector<std::vector<int>> cyclic_chains;  // interior punctures

    // Faces as token sequences; a token (arc, end) means "travel along the
    // arc, arriving at that end". Boundary faces end at a chain gap.
    struct Face {
        std::vector<std::pair<int, int>> tokens;
        bool boundary = false;
        int start_chain = -1;  // linear chain index, boundary faces only
        int end_chain = -1;
    };
    std::vector<Face> faces;

    int chain_of_end(int end) const;  // linear chains first, then cyclic
};

struct SurfaceInvariants {
    // Disjoint unions of dissections are allowed: counts are totals over
    // all connected components, genus is the sum of component genera, and
    // chi = 2 * num_components - 2 * genus - boundary_components.
    int num_components = 0;
    int genus = 0;
    int boundary_components = 0;
    int boundary_circ = 0;
    int boundary_bullet = 0;
    int punctures_circ = 0;
    int punctures_bullet = 0;
    int euler_characteristic = 0;
    // Independent recount from the traced cell structure; must equal
    // euler_characteristic.
    int euler_traced = 0;
};

RibbonModel assemble_ribbon(const Algebra& a);
SurfaceInvariants surface_invariants(const Algebra& a);

// Both constructions share the same vertex set e: the cut removes those
// vertices, the corner keeps exactly them.
struct CutInvariants {
    SurfaceInvariants cut;     // surface of the vertex-removal algebra
    SurfaceInvariants corner;  // surface of the corner at the same vertices
};
CutInvariants cut_invariants(const Algebra& a, const Idempotent& removed,
                             int max_len);

struct SmoothProper {
    bool smooth = false;
    bool proper = false;
};
struct TwoOutOfThreeReport {
    SmoothProper whole, cut, corner;
    bool all_finite = true;
    bool consistent = true;  // no two puncture-free with the third not
};
TwoOutOfThreeReport two_out_of_three(const Algebra& a,
                                     const Idempotent& removed, int max_len);

// Graphviz rendering: arcs as edges, chains as ordered fans, faces listed.
std::string ribbon_to_dot(const Algebra& a, const RibbonModel& m);

}  // namespace qga
