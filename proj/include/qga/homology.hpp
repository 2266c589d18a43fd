// Homological predicates and the Ext table.
//
// Smoothness: no cyclic word whose consecutive pairs (cyclically) are all
// relations; equivalently the relation-composition digraph on arrows is
// acyclic. Properness is the same with non-relation compositions. The Ext
// table between the vertex simples has a basis of critical paths (every
// consecutive pair a relation), a path of length p and degree d sitting in
// shift l = p - d. Pre-silting / pre-SMC tests reduce to degree bounds on
// nonzero (resp. critical) paths through the kept vertices, decided exactly
// by longest-path relaxation with positive-cycle detection.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qga/quiver.hpp"

namespace qga {

struct CycleReport {
    bool ok = true;                   // smooth (resp. proper)
    std::optional<Path> witness;      // offending cyclic word
};

CycleReport is_smooth(const Algebra& a);
CycleReport is_proper(const Algebra& a);

struct ExtEntry {
    int i = 0;  // source vertex
    int j = 0;  // target vertex
    int l = 0;  // shift
    int dim = 0;
    std::vector<Path> basis;  // critical paths i -> j with l = len - deg
};

struct ExtTable {
    std::vector<ExtEntry> entries;  // sorted by (i, j, l), dim > 0 only
};

// Requires is_smooth(a) unless a shift interval [lo, hi] is given, in which
// case only critical paths with shifts in range are needed (still finite
// per shift only for smooth algebras, so smoothness is required throughout).
ExtTable ext_table(const Algebra& a,
                   std::optional<std::pair<int, int>> shift_range = {});

nlohmann::ordered_json ext_table_to_json(const Algebra& a, const ExtTable& t);

struct DegreeBoundReport {
    bool ok = true;
    std::optional<Path> witness;  // offending path or pumping cycle
    bool witness_is_cycle = false;
};

// True iff every nonzero path from a kept vertex to a kept vertex has
// degree <= 0 (the projective at the kept vertices has no positive
// self-extensions). Exact: positive-degree cycles through such paths are
// detected and reported as pumping witnesses.
DegreeBoundReport is_presilting_projective(const Algebra& a,
                                           const Idempotent& kept);

// True iff the simples at the kept vertices have Hom concentrated in
// shifts >= 1 off the diagonal identities: no critical path of length >= 1
// between kept vertices with shift l <= 0. Requires is_smooth(a).
DegreeBoundReport is_preSMC_simples(const Algebra& a, const Idempotent& kept);

}  // namespace qga
