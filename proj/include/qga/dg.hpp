// Differential graded quiver algebra built from a subset J of the
// relations.
//
// Generators are the J-words: composable arrow words whose every
// consecutive pair lies in J (single arrows included). A generator
// [a1...an] has degree sum(|ai|) - n + 1 and differential
//
//   d [a1...an] = sum_{i=1}^{n-1} (-1)^{|[a1...ai]|} [a1...ai][a(i+1)...an],
//
// so d raises degree by one and vanishes on single arrows. Relations pair
// generators whose junction lies in I \ J. The canonical projection onto
// the original algebra sends single-arrow generators to their arrows and
// longer generators to zero; its kernel admits an explicit contracting
// homotopy with rational coefficients, checked term by term here.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "json.hpp"
#include "qga/quiver.hpp"

namespace qga {

using Rational = boost::rational<long long>;

struct DgTerm {
    std::vector<int> monomial;  // generator indices, composable
    Rational coeff;
};
using FormalCombination = std::vector<DgTerm>;

struct DgQuiverAlgebra {
    Algebra algebra;  // generators as arrows, junction relations
    std::vector<std::vector<int>> generator_word;  // generator -> arrow indices
    std::vector<FormalCombination> differential;   // per generator
};

using RelationSubset = std::vector<std::pair<int, int>>;

RelationSubset relation_subset_from_names(
    const Algebra& a,
    const std::vector<std::pair<std::string, std::string>>& names);

// True when the set of J-words is finite (the J-pair digraph is acyclic).
bool is_AJ_finite(const Algebra& a, const RelationSubset& J);

// Builds the dg algebra for the subset J, generators up to arrow-length
// max_len. Throws if J is not a subset of the relations.
DgQuiverAlgebra build_AJ(const Algebra& a, const RelationSubset& J,
                         int max_len);

struct CheckResult {
    bool ok = true;
    std::string detail;  // first failure, when not ok
};

// Verifies on every generator: degree +1, matching endpoints, and d*d = 0
// after reduction modulo the junction relations.
CheckResult check_differential(const DgQuiverAlgebra& dg);

// Verifies d*psi + psi*d = id on every nonzero monomial of the projection
// kernel with total arrow length <= max_len (monomials with at least one
// factor of word length >= 2). Exact rational arithmetic throughout.
CheckResult check_homotopy(const Algebra& a, const RelationSubset& J,
                           int max_len);

nlohmann::ordered_json dg_to_json(const DgQuiverAlgebra& dg);
std::string serialize_dg(const DgQuiverAlgebra& dg);

}  // namespace qga
