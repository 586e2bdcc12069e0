#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "limbforge/bigint.hpp"
#include "limbforge/limbs.hpp"
#include "limbforge/trees.hpp"

namespace limbforge {

enum class CensusProperty { has_limb, has_cospectral_mate, has_k_cospectral_vertices };

const char* to_string(CensusProperty p) noexcept;
/// Throws `InvalidArgument` for unknown names.
CensusProperty parse_census_property(const std::string& name);
/// Throws `InvalidArgument` for unknown names ("rooted", "free",
/// "weighted-rooted", "weighted-free").
TreeFamily parse_tree_family(const std::string& name);

struct CensusParams {
    /// Pattern for has_limb (limb mode); default: the Schwenk tree rooted at a.
    std::optional<CanonicalTree> limb;
    /// Class size for has_k_cospectral_vertices.
    int k = 2;
};

struct CensusRow {
    int n = 0;
    BigInt total;
    BigInt hits;
    CensusProperty property = CensusProperty::has_limb;
    int k = 0;
    BigRational fraction;
};

constexpr int kCensusMaxUnweighted = 16;
constexpr int kCensusMaxWeighted = 10;

/// Whether one tree of the family has the property.
///  - has_limb: the pattern occurs as a limb (free hosts: at any vertex).
///  - has_cospectral_mate: swapping the Schwenk limb between its rootings
///    at a and b (either way) gives a non-isomorphic tree of the same family.
///  - has_k_cospectral_vertices: some cospectral class meets at least k
///    similarity orbits.
/// Weighted families use weighted polynomials.
bool census_hit(const CanonicalTree& tree, CensusProperty property, TreeFamily kind, const CensusParams& params);

/// Exhaustive census for n = n_min..n_max, rows handed to `on_row` as soon
/// as they are complete. Trees are checked in parallel. Throws `TooLarge`
/// beyond n = 16 (n = 10 for weighted families).
std::vector<CensusRow> census(CensusProperty property, TreeFamily kind, int n_min, int n_max,
                              const CensusParams& params = {},
                              const std::function<void(const CensusRow&)>& on_row = {});

}  // namespace limbforge
