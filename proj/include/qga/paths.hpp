// Generic word enumeration over a quiver.
//
// A WordSpec selects which arrows may start/end a word and which ordered
// pairs of consecutive arrows are allowed. Enumeration is breadth-first by
// length, ties broken by arrow declaration order, so output order is
// deterministic. Finiteness is decided exactly: the language is infinite
// iff the allowed-pair digraph has a cycle through an arrow that is both
// reachable from a start arrow and co-reachable from an end arrow.

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qga/quiver.hpp"

namespace qga {

struct WordSpec {
    std::function<bool(int, int)> pair_allowed;  // consecutive arrows a,b
    std::function<bool(int)> start_ok;           // first arrow of a word
    std::function<bool(int)> end_ok;             // last arrow of a word
};

struct WordEnumeration {
    std::vector<Path> words;      // length >= 1, sorted by (length, lex)
    bool finite = false;          // language itself finite?
    bool truncated = false;       // bound reached before exhaustion
    int bound = 0;                // bound used when truncated
    std::optional<Path> witness_cycle;  // a cycle proving infiniteness
};

// Enumerates all words of length 1..max_len satisfying the spec. If the
// language is finite, all of it is returned and `finite` is true (the bound
// is still respected: a finite language longer than the bound is reported
// truncated). For infinite languages a witness cycle is attached.
WordEnumeration enumerate_words(const Algebra& a, const WordSpec& spec,
                                int max_len);

// True if the language of the spec is infinite; fills witness if so.
bool words_infinite(const Algebra& a, const WordSpec& spec,
                    std::optional<Path>* witness = nullptr);

// Convenience specs over a fixed algebra.
WordSpec spec_nonzero_paths(const Algebra& a);   // consecutive pairs not in I
WordSpec spec_critical_paths(const Algebra& a);  // consecutive pairs all in I

// Nonzero (resp. critical) paths of length 0..max_len, idempotents included.
// `critical` selects relation-composed words instead of nonzero ones.
struct PathEnumeration {
    std::vector<Path> paths;
    bool finite = false;
    bool truncated = false;
    int bound = 0;
};
PathEnumeration enumerate_paths(const Algebra& a, bool critical, int max_len);

}  // namespace qga
