// Existence classification for silting objects and simple-minded
// collections on smooth proper gentle algebras, via the genus-n family
//
//   Q(n):  vertices 1..2n; for each i: arrows a_i, c_i: 2i-1 -> 2i and
//          b_i: 2i -> 2i-1; for each j < n: d_j: 2j -> 2j+1; relations
//          {a_i b_i, b_i c_i, c_j d_j, d_j a_{j+1}}.
//
// The parameters are a_i = |a_i|+|b_i| and b_i = |b_i|+|c_i| under a
// matched labeling. Verdicts: a full exceptional sequence forces
// existence; on the literal shape, all (a_i, b_i) != (1, 1) forces
// existence, and n = 1 with (a_1, b_1) = (1, 1) forces non-existence;
// everything else is reported unknown.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qga/quiver.hpp"

namespace qga {

struct AnShape {
    int n = 0;
    std::vector<std::pair<int, int>> params;  // (a_i, b_i)
    std::vector<int> vertex_map;  // canonical vertex (0-based) -> input vertex
};

// Builds the literal genus-n algebra with the given arrow degrees, in the
// canonical order a_1, b_1, c_1, d_1, a_2, ... (degrees.size() = 4n - 1).
Algebra canonical_An(int n, const std::vector<int>& degrees);

std::optional<AnShape> detect_An_shape(const Algebra& a);

// Requires smooth and proper. False exactly when the surface has genus
// >= 1 with one boundary component carrying one marked point.
bool has_full_exceptional_sequence(const Algebra& a);

// Topological order by repeated source peeling; empty optional when the
// quiver has an oriented cycle.
std::optional<std::vector<int>> exceptional_sequence_acyclic(const Algebra& a);

enum class Existence { Exists, NotExists, Unknown };

struct ExistenceVerdict {
    Existence value = Existence::Unknown;
    std::string rule;  // R1..R4
    std::string evidence;
};

// Requires smooth and proper (throws otherwise).
ExistenceVerdict silting_existence(const Algebra& a);

struct G11Report {
    bool all_corners_nontrivial = false;  // every vertex lies on a nonzero cycle
    bool all_arcs_loops = false;          // both ends of each arc share a chain
    bool one_boundary_one_circ = false;   // b = 1 and one boundary point
    bool agree = false;
};

// Requires smooth and proper (throws otherwise).
G11Report g11_equivalences(const Algebra& a);

}  // namespace qga
