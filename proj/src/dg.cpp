#include "qga/dg.hpp"

#include <algorithm>
#include <map>

#include "qga/io.hpp"
#include "qga/paths.hpp"

namespace qga {

namespace {

std::string bracket_name(const Algebra& a, const std::vector<int>& word) {
    std::string s = "[";
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) s += ".";
        s += a.quiver.arrow(word[i]).name;
    }
    return s + "]";
}

int word_degree(const Algebra& a, const std::vector<int>& word) {
    int d = 0;
    for (int x : word) d += a.quiver.arrow(x).degree;
    return d - static_cast<int>(word.size()) + 1;
}

bool in_subset(const RelationSubset& J, int x, int y) {
    for (const auto& r : J)
        if (r.first == x && r.second == y) return true;
    return false;
}

}  // namespace

RelationSubset relation_subset_from_names(
    const Algebra& a,
    const std::vector<std::pair<std::string, std::string>>& names) {
    RelationSubset J;
    for (const auto& [x, y] : names) {
        auto xi = a.quiver.arrow_id(x);
        auto yi = a.quiver.arrow_id(y);
        if (!xi || !yi)
            throw InvalidAlgebraError("unknown arrow in relation subset: " + x +
                                      "*" + y);
        if (!a.has_relation(*xi, *yi))
            throw InvalidAlgebraError("pair " + x + "*" + y +
                                      " is not a relation");
        J.emplace_back(*xi, *yi);
    }
    std::sort(J.begin(), J.end());
    J.erase(std::unique(J.begin(), J.end()), J.end());
    return J;
}

bool is_AJ_finite(const Algebra& a, const RelationSubset& J) {
    WordSpec s;
    s.pair_allowed = [&J](int x, int y) { return in_subset(J, x, y); };
    s.start_ok = [](int) { return true; };
    s.end_ok = [](int) { return true; };
    return !words_infinite(a, s);
}

DgQuiverAlgebra build_AJ(const Algebra& a, const RelationSubset& J,
                         int max_len) {
    for (const auto& r : J)
        if (!a.has_relation(r.first, r.second))
            throw InvalidAlgebraError("subset contains a non-relation pair");

    WordSpec spec;
    spec.pair_allowed = [&J](int x, int y) { return in_subset(J, x, y); };
    spec.start_ok = [](int) { return true; };
    spec.end_ok = [](int) { return true; };
    auto words = enumerate_words(a, spec, max_len);

    DgQuiverAlgebra dg;
    for (const auto& v : a.quiver.vertices()) dg.algebra.quiver.add_vertex(v);
    std::map<std::vector<int>, int> index;
    for (const auto& w : words.words) {
        dg.algebra.quiver.add_arrow(
            bracket_name(a, w.arrows),
            a.quiver.vertex(a.quiver.arrow(w.arrows.front()).source),
            a.quiver.vertex(a.quiver.arrow(w.arrows.back()).target),
            word_degree(a, w.arrows));
        index[w.arrows] = static_cast<int>(dg.generator_word.size());
        dg.generator_word.push_back(w.arrows);
    }
    const int m = static_cast<int>(dg.generator_word.size());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            int last = dg.generator_word[i].back();
            int first = dg.generator_word[j].front();
            if (a.quiver.arrow(last).target != a.quiver.arrow(first).source)
                continue;
            if (a.has_relation(last, first) && !in_subset(J, last, first))
                dg.algebra.relations.emplace_back(i, j);
        }
    normalize_relations(dg.algebra);
    dg.algebra.truncated = words.truncated;
    dg.algebra.truncation_bound = words.truncated ? max_len : 0;

    for (int g = 0; g < m; ++g) {
        const auto& w = dg.generator_word[g];
        FormalCombination d;
        for (size_t i = 1; i < w.size(); ++i) {
            std::vector<int> left(w.begin(), w.begin() + i);
            std::vector<int> right(w.begin() + i, w.end());
            int sign_exp = word_degree(a, left);
            Rational c = (sign_exp % 2 == 0) ? Rational(1) : Rational(-1);
            d.push_back({{index.at(left), index.at(right)}, c});
        }
        dg.differential.push_back(std::move(d));
    }
    return dg;
}

namespace {

// Drops monomials hitting a junction relation and merges duplicates.
FormalCombination reduce(const DgQuiverAlgebra& dg, FormalCombination c) {
    std::map<std::vector<int>, Rational> acc;
    for (auto& t : c) {
        bool zero = false;
        for (size_t i = 0; i + 1 < t.monomial.size() && !zero; ++i)
            if (dg.algebra.has_relation(t.monomial[i], t.monomial[i + 1]))
                zero = true;
        if (!zero) acc[t.monomial] += t.coeff;
    }
    FormalCombination out;
    for (auto& [m, c2] : acc)
        if (c2 != Rational(0)) out.push_back({m, c2});
    return out;
}

int gen_degree(const DgQuiverAlgebra& dg, int g) {
    return dg.algebra.quiver.arrow(g).degree;
}

int monomial_degree(const DgQuiverAlgebra& dg, const std::vector<int>& m) {
    int d = 0;
    for (int g : m) d += gen_degree(dg, g);
    return d;
}

// Leibniz extension of the differential to a monomial, reduced.
FormalCombination d_monomial(const DgQuiverAlgebra& dg,
                             const std::vector<int>& m) {
    FormalCombination out;
    int sign_exp = 0;
    for (size_t i = 0; i < m.size(); ++i) {
        Rational sign = (sign_exp % 2 == 0) ? Rational(1) : Rational(-1);
        for (const auto& t : dg.differential[m[i]]) {
            std::vector<int> mono(m.begin(), m.begin() + i);
            mono.insert(mono.end(), t.monomial.begin(), t.monomial.end());
            mono.insert(mono.end(), m.begin() + i + 1, m.end());
            out.push_back({std::move(mono), sign * t.coeff});
        }
        sign_exp += gen_degree(dg, m[i]);
    }
    return reduce(dg, std::move(out));
}

FormalCombination d_combination(const DgQuiverAlgebra& dg,
                                const FormalCombination& c) {
    FormalCombination out;
    for (const auto& t : c)
        for (auto& u : d_monomial(dg, t.monomial))
            out.push_back({u.monomial, t.coeff * u.coeff});
    return reduce(dg, std::move(out));
}

}  // namespace

CheckResult check_differential(const DgQuiverAlgebra& dg) {
    const auto& Q = dg.algebra.quiver;
    for (int g = 0; g < Q.num_arrows(); ++g) {
        for (const auto& t : dg.differential[g]) {
            if (monomial_degree(dg, t.monomial) != Q.arrow(g).degree + 1)
                return {false, "differential of " + Q.arrow(g).name +
                                   " is not of degree +1"};
            if (Q.arrow(t.monomial.front()).source != Q.arrow(g).source ||
                Q.arrow(t.monomial.back()).target != Q.arrow(g).target)
                return {false, "differential of " + Q.arrow(g).name +
                                   " has mismatched endpoints"};
            for (size_t i = 0; i + 1 < t.monomial.size(); ++i)
                if (Q.arrow(t.monomial[i]).target !=
                    Q.arrow(t.monomial[i + 1]).source)
                    return {false, "differential of " + Q.arrow(g).name +
                                       " is not composable"};
        }
        auto dd = d_combination(dg, reduce(dg, dg.differential[g]));
        if (!dd.empty())
            return {false, "d*d is nonzero on " + Q.arrow(g).name};
    }
    return {true, ""};
}

namespace {

// The contracting homotopy on a nonzero monomial of the kernel.
FormalCombination psi(const Algebra& a, const RelationSubset& J,
                      const DgQuiverAlgebra& dg,
                      const std::map<std::vector<int>, int>& index,
                      const std::vector<int>& m) {
    const size_t s = m.size() - 1;  // junctions
    int n = 0;
    for (int g : m) n += static_cast<int>(dg.generator_word[g].size());
    long long denom = n - static_cast<long long>(s) - 1;
    std::vector<bool> in_J(s, false);
    for (size_t i = 0; i < s; ++i) {
        int last = dg.generator_word[m[i]].back();
        int first = dg.generator_word[m[i + 1]].front();
        in_J[i] = in_subset(J, last, first);
        if (in_J[i]) ++denom;
    }
    FormalCombination out;
    if (denom == 0) return out;  // nothing to contract
    int sign_exp = 0;
    for (size_t i = 0; i < s; ++i) {
        sign_exp += gen_degree(dg, m[static_cast<int>(i)]);
        if (!in_J[i]) continue;
        std::vector<int> merged = dg.generator_word[m[i]];
        const auto& right = dg.generator_word[m[i + 1]];
        merged.insert(merged.end(), right.begin(), right.end());
        auto it = index.find(merged);
        if (it == index.end())
            throw InvalidAlgebraError(
                "homotopy needs a generator beyond the length bound");
        std::vector<int> mono(m.begin(), m.begin() + i);
        mono.push_back(it->second);
        mono.insert(mono.end(), m.begin() + i + 2, m.end());
        Rational c(sign_exp % 2 == 0 ? 1 : -1, denom);
        out.push_back({std::move(mono), c});
    }
    return out;
}

FormalCombination psi_combination(const Algebra& a, const RelationSubset& J,
                                  const DgQuiverAlgebra& dg,
                                  const std::map<std::vector<int>, int>& index,
                                  const FormalCombination& c) {
    FormalCombination out;
    for (const auto& t : c)
        for (auto& u : psi(a, J, dg, index, t.monomial))
            out.push_back({u.monomial, t.coeff * u.coeff});
    return out;
}

}  // namespace

CheckResult check_homotopy(const Algebra& a, const RelationSubset& J,
                           int max_len) {
    DgQuiverAlgebra dg = build_AJ(a, J, max_len);
    std::map<std::vector<int>, int> index;
    for (size_t g = 0; g < dg.generator_word.size(); ++g)
        index[dg.generator_word[g]] = static_cast<int>(g);

    auto arrow_len = [&](const std::vector<int>& m) {
        int n = 0;
        for (int g : m) n += static_cast<int>(dg.generator_word[g].size());
        return n;
    };
    auto in_kernel = [&](const std::vector<int>& m) {
        for (int g : m)
            if (dg.generator_word[g].size() >= 2) return true;
        for (size_t i = 0; i + 1 < m.size(); ++i)
            if (in_subset(J, dg.generator_word[m[i]].back(),
                          dg.generator_word[m[i + 1]].front()))
                return true;
        return false;
    };

    // DFS over nonzero monomials with total arrow length <= max_len.
    const int G = static_cast<int>(dg.generator_word.size());
    std::vector<std::vector<int>> stack;
    for (int g = 0; g < G; ++g) stack.push_back({g});
    while (!stack.empty()) {
        std::vector<int> m = std::move(stack.back());
        stack.pop_back();
        if (in_kernel(m)) {
            FormalCombination id{{m, Rational(1)}};
            auto lhs = reduce(
                dg, d_combination(dg, psi_combination(a, J, dg, index, id)));
            auto rhs =
                reduce(dg, psi_combination(a, J, dg, index,
                                           d_combination(dg, {{m, Rational(1)}})));
            FormalCombination sum = lhs;
            for (auto& t : rhs) sum.push_back(t);
            sum = reduce(dg, std::move(sum));
            if (!(sum.size() == 1 && sum[0].monomial == m &&
                  sum[0].coeff == Rational(1))) {
                std::string names;
                for (int g : m) names += dg.algebra.quiver.arrow(g).name;
                return {false, "homotopy identity fails on " + names};
            }
        }
        for (int g = 0; g < G; ++g) {
            if (dg.algebra.quiver.arrow(m.back()).target !=
                dg.algebra.quiver.arrow(g).source)
                continue;
            if (dg.algebra.has_relation(m.back(), g)) continue;
            auto m2 = m;
            m2.push_back(g);
            if (arrow_len(m2) <= max_len) stack.push_back(std::move(m2));
        }
    }
    return {true, ""};
}

nlohmann::ordered_json dg_to_json(const DgQuiverAlgebra& dg) {
    auto doc = algebra_to_json(dg.algebra);
    auto diff = nlohmann::ordered_json::array();
    for (size_t g = 0; g < dg.differential.size(); ++g) {
        if (dg.differential[g].empty()) continue;
        nlohmann::ordered_json entry;
        entry["generator"] = dg.algebra.quiver.arrow(static_cast<int>(g)).name;
        auto terms = nlohmann::ordered_json::array();
        for (const auto& t : dg.differential[g]) {
            nlohmann::ordered_json jt;
            auto path = nlohmann::ordered_json::array();
            for (int f : t.monomial)
                path.push_back(dg.algebra.quiver.arrow(f).name);
            jt["path"] = path;
            std::string c = std::to_string(t.coeff.numerator());
            if (t.coeff.denominator() != 1)
                c += "/" + std::to_string(t.coeff.denominator());
            jt["coeff"] = c;
            terms.push_back(jt);
        }
        entry["terms"] = terms;
        diff.push_back(entry);
    }
    doc["differential"] = diff;
    return doc;
}

std::string serialize_dg(const DgQuiverAlgebra& dg) {
    return dg_to_json(dg).dump(2) + "\n";
}

}  // namespace qga
