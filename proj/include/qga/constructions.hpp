// Algebra constructions:
//  - quadratic dual (an exact involution on quadratic monomial algebras)
//  - idempotent cut A_e: remove a set of vertices, keeping composite
//    generators for words through removed relation-middle vertices
//  - corner algebra eAe (gentle input): nonzero paths between kept vertices
//    whose interior junction vertices are removed
//  - corner computed via the dual route, and graded isomorphism testing
//
// Generator naming: a word of length 1 keeps its original arrow name, so
// cutting nothing returns the algebra unchanged; longer words are named
// "[a.b.c]" after their arrow constituents.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qga/quiver.hpp"

namespace qga {

Algebra quadratic_dual(const Algebra& a);

// A_e where e lists the REMOVED vertices. J_e = relations whose middle
// vertex is removed. Generators are J_e-words with both endpoints kept.
// May be infinite; enumeration stops at max_len and marks truncation.
Algebra idempotent_cut(const Algebra& a, const Idempotent& removed,
                       int max_len);

// True if A_e is finitely generated (as a quiver algebra).
bool idempotent_cut_finite(const Algebra& a, const Idempotent& removed);

// eAe where e lists the KEPT vertices. Requires a gentle input (throws
// InvalidAlgebraError otherwise). Generators are nonzero paths between kept
// vertices with all interior vertices removed (interior vertices are
// junctions by construction). May be infinite; truncates at max_len.
Algebra corner_algebra(const Algebra& a, const Idempotent& kept, int max_len);

bool corner_finite(const Algebra& a, const Idempotent& kept);

// Same result through the identity eAe = ((A^!)_{1-e})^!.
Algebra corner_via_dual(const Algebra& a, const Idempotent& kept, int max_len);

// Mapping of a degree-preserving isomorphism of quiver algebras.
struct GradedIso {
    std::vector<int> vertex_map;  // domain vertex -> codomain vertex
    std::vector<int> arrow_map;   // domain arrow  -> codomain arrow
};

// Searches for a degree-preserving quiver-algebra isomorphism mapping
// relations onto relations. Backtracking; fine for small quivers.
std::optional<GradedIso> graded_iso(const Algebra& a, const Algebra& b);

// Checks (A_e)_f = A_{e ∪ f} up to graded isomorphism for the two cut
// orders; returns true when both iterated cuts match the one-step cut.
bool check_iterated_cut(const Algebra& a, const Idempotent& e,
                        const Idempotent& f, int max_len);

}  // namespace qga
