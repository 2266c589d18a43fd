// Core data model: graded quivers, paths, quadratic monomial algebras,
// gentleness validation.
//
// All types are immutable value types after construction; operations are
// pure functions and safe to call concurrently on shared data.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qga {

class InvalidAlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when an unbounded enumeration is requested but the relevant
// finiteness criterion fails. Carries a witness cycle when available.
class InfiniteEnumerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Arrow {
    std::string name;
    int source = -1;  // vertex index
    int target = -1;  // vertex index
    int degree = 0;
};

// Finite quiver with integer-graded arrows. Vertices and arrows keep
// declaration order; that order is the tie-break for every deterministic
// output downstream.
class GradedQuiver {
public:
    GradedQuiver() = default;

    int add_vertex(const std::string& id) {
        if (vertex_index_.count(id))
            throw InvalidAlgebraError("duplicate vertex id: " + id);
        vertex_index_[id] = static_cast<int>(vertices_.size());
        vertices_.push_back(id);
        return static_cast<int>(vertices_.size()) - 1;
    }

    int add_arrow(const std::string& name, const std::string& source,
                  const std::string& target, int degree) {
        if (arrow_index_.count(name))
            throw InvalidAlgebraError("duplicate arrow name: " + name);
        auto s = vertex_index_.find(source);
        auto t = vertex_index_.find(target);
        if (s == vertex_index_.end())
            throw InvalidAlgebraError("arrow " + name + ": unknown vertex " + source);
        if (t == vertex_index_.end())
            throw InvalidAlgebraError("arrow " + name + ": unknown vertex " + target);
        arrow_index_[name] = static_cast<int>(arrows_.size());
        arrows_.push_back(Arrow{name, s->second, t->second, degree});
        return static_cast<int>(arrows_.size()) - 1;
    }

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(int i) const { return arrows_.at(i); }
    const std::string& vertex(int i) const { return vertices_.at(i); }

    std::optional<int> vertex_id(const std::string& id) const {
        auto it = vertex_index_.find(id);
        if (it == vertex_index_.end()) return std::nullopt;
        return it->second;
    }
    std::optional<int> arrow_id(const std::string& name) const {
        auto it = arrow_index_.find(name);
        if (it == arrow_index_.end()) return std::nullopt;
        return it->second;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::unordered_map<std::string, int> vertex_index_;
    std::unordered_map<std::string, int> arrow_index_;
};

// A = kQ / <I> with I a set of composable length-2 monomials, stored as
// ordered pairs of arrow indices in a sorted, duplicate-free vector.
struct Algebra {
    GradedQuiver quiver;
    std::vector<std::pair<int, int>> relations;

    // Set when the algebra is a truncation of an infinite construction.
    bool truncated = false;
    int truncation_bound = 0;

    bool has_relation(int a, int b) const {
        for (const auto& r : relations)
            if (r.first == a && r.second == b) return true;
        return false;
    }
    bool composable(int a, int b) const {
        return quiver.arrow(a).target == quiver.arrow(b).source;
    }
};

// Checks structural invariants (relations compose, no duplicates) and
// normalizes relation order to (first-arrow index, second-arrow index).
void normalize_relations(Algebra& a);

// Path in the quiver: a composable word of arrows, or the length-0
// idempotent at source_vertex.
struct Path {
    int source_vertex = -1;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    bool is_idempotent() const { return arrows.empty(); }
};

int path_degree(const Algebra& a, const Path& p);
int path_source(const Algebra& a, const Path& p);
int path_target(const Algebra& a, const Path& p);
std::string path_to_string(const Algebra& a, const Path& p);

// Subset of vertices; used both as "removed" (cuts) and "kept" (corners).
struct Idempotent {
    std::vector<int> vertices;  // sorted, unique

    static Idempotent from_names(const Algebra& a,
                                 const std::vector<std::string>& names);
    bool contains(int v) const {
        for (int w : vertices)
            if (w == v) return true;
        return false;
    }
    Idempotent complement(const Algebra& a) const;
};

struct GentleViolation {
    std::string condition;  // V1..V4
    std::string witness;
};

struct GentleReport {
    bool is_gentle = true;
    std::vector<GentleViolation> violations;
};

// Conditions of the gentle definition:
//   V1: a vertex is the source of more than two arrows
//   V2: a vertex is the target of more than two arrows
//   V3: an arrow has two relation-continuations or two nonzero continuations
//   V4: an arrow has two relation-precursors or two nonzero precursors
GentleReport validate_gentle(const Algebra& a);

}  // namespace qga
