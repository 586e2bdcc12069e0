#include "limbforge/hopf.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>

namespace limbforge {

namespace {

// Preorder sizes let a position range [p, p + order) name a subtree.
void collect_antichains(const CanonicalTree& t, int pos, std::vector<std::vector<int>>& out) {
    std::vector<std::vector<int>> acc{{}};
    int child_pos = pos + 1;
    for (const auto& c : t.children()) {
        std::vector<std::vector<int>> sub;
        collect_antichains(c, child_pos, sub);
        std::vector<std::vector<int>> next;
        for (const auto& a : acc) {
            for (const auto& b : sub) {
                auto merged = a;
                merged.insert(merged.end(), b.begin(), b.end());
                next.push_back(std::move(merged));
            }
        }
        acc = std::move(next);
        child_pos += static_cast<int>(c.order());
    }
    out = std::move(acc);
    out.push_back({pos});
}

// Cuts the subtrees rooted at positions in `cut`; returns what remains of `t`
// (nothing if the root itself is cut) and appends the removed subtrees.
std::optional<CanonicalTree> prune(const CanonicalTree& t, int pos, const std::set<int>& cut, Forest& removed) {
    if (cut.contains(pos)) {
        removed.push_back(t);
        return std::nullopt;
    }
    std::vector<CanonicalTree> kids;
    int child_pos = pos + 1;
    for (const auto& c : t.children()) {
        if (auto kept = prune(c, child_pos, cut, removed)) kids.push_back(std::move(*kept));
        child_pos += static_cast<int>(c.order());
    }
    return CanonicalTree(t.weight(), std::move(kids));
}

using CodeList = std::vector<std::string>;

CodeList codes_of(const Forest& f) {
    CodeList out;
    for (const auto& t : f) out.push_back(t.code().bytes());
    std::sort(out.begin(), out.end());
    return out;
}

CodeList codes_of(const std::optional<CanonicalTree>& t) {
    if (!t) return {};
    return {t->code().bytes()};
}

CodeList merge(CodeList a, const CodeList& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
}

using PairMap = std::map<std::pair<CodeList, CodeList>, BigInt>;
using TripleMap = std::map<std::tuple<CodeList, CodeList, CodeList>, BigInt>;

// Delta of a tree by code lists, with a cache since trees repeat a lot.
const PairMap& delta_tree(const CanonicalTree& t, std::map<std::string, PairMap>& cache) {
    auto it = cache.find(t.code().bytes());
    if (it != cache.end()) return it->second;
    PairMap m;
    for (const auto& term : coproduct(t)) m[{codes_of(term.left), codes_of(term.right)}] += term.coefficient;
    return cache.emplace(t.code().bytes(), std::move(m)).first->second;
}

PairMap delta_forest(const Forest& f, std::map<std::string, PairMap>& cache) {
    PairMap acc{{{{}, {}}, BigInt(1)}};
    for (const auto& t : f) {
        PairMap next;
        for (const auto& [lhs, c1] : acc) {
            for (const auto& [rhs, c2] : delta_tree(t, cache)) {
                next[{merge(lhs.first, rhs.first), merge(lhs.second, rhs.second)}] += c1 * c2;
            }
        }
        acc = std::move(next);
    }
    return acc;
}

void drop_zeros(TripleMap& m) {
    for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
}

}  // namespace

std::vector<std::vector<int>> antichains(const CanonicalTree& t) {
    std::vector<std::vector<int>> out;
    collect_antichains(t, 0, out);
    for (auto& a : out) std::sort(a.begin(), a.end());
    std::sort(out.begin(), out.end());
    return out;
}

BigInt count_antichains(const CanonicalTree& t) {
    BigInt prod = 1;
    for (const auto& c : t.children()) prod *= count_antichains(c);
    return prod + 1;
}

std::vector<ForestTerm> coproduct(const CanonicalTree& t) {
    std::map<std::pair<CodeList, std::string>, ForestTerm> merged;
    for (const auto& s : antichains(t)) {
        Forest left;
        const auto right = prune(t, 0, std::set<int>(s.begin(), s.end()), left);
        std::sort(left.begin(), left.end());
        const auto key = std::make_pair(codes_of(left), right ? right->code().bytes() : std::string());
        auto [it, fresh] = merged.try_emplace(key, ForestTerm{0, left, right});
        it->second.coefficient += 1;
    }
    std::vector<ForestTerm> out;
    for (auto& [key, term] : merged) {
        if (term.coefficient != 0) out.push_back(std::move(term));
    }
    return out;
}

bool check_coassociativity(const CanonicalTree& t) {
    std::map<std::string, PairMap> cache;
    TripleMap lhs, rhs;
    for (const auto& term : coproduct(t)) {
        const auto right = codes_of(term.right);
        for (const auto& [pair, c] : delta_forest(term.left, cache)) {
            lhs[{pair.first, pair.second, right}] += term.coefficient * c;
        }
        const auto left = codes_of(term.left);
        const Forest right_forest = term.right ? Forest{*term.right} : Forest{};
        for (const auto& [pair, c] : delta_forest(right_forest, cache)) {
            rhs[{left, pair.first, pair.second}] += term.coefficient * c;
        }
    }
    drop_zeros(lhs);
    drop_zeros(rhs);
    return lhs == rhs;
}

bool check_counit(const CanonicalTree& t) {
    // eps kills every nonempty forest, so only terms with an empty leg survive.
    std::map<std::string, BigInt> via_left, via_right;
    for (const auto& term : coproduct(t)) {
        if (term.left.empty() && term.right) via_left[term.right->code().bytes()] += term.coefficient;
        if (!term.right && term.left.size() == 1) via_right[term.left[0].code().bytes()] += term.coefficient;
        if (!term.right && term.left.size() != 1) return false;
    }
    const std::map<std::string, BigInt> expect{{t.code().bytes(), BigInt(1)}};
    return via_left == expect && via_right == expect;
}

bool check_grading(const CanonicalTree& t) {
    for (const auto& term : coproduct(t)) {
        long w = term.right ? term.right->total_weight() : 0;
        for (const auto& f : term.left) w += f.total_weight();
        if (w != t.total_weight()) return false;
    }
    return true;
}

}  // namespace limbforge
