#pragma once

#include <istream>
#include <string>

#include <json.hpp>

#include "limbforge/census.hpp"
#include "limbforge/graph.hpp"
#include "limbforge/hopf.hpp"
#include "limbforge/polynomial.hpp"
#include "limbforge/series.hpp"
#include "limbforge/spectra.hpp"
#include "limbforge/trees.hpp"

namespace limbforge {

using Json = nlohmann::json;

/// {"vertices":[{"id":0,"weight":1},...],"edges":[[0,1],...],"root":0};
/// "root" only when present. Vertices and edges in stored order.
Json graph_to_json(const WeightedGraph& g);
/// Accepts the format above, "weight" defaulting to 1 and "root" optional.
/// Structural problems raise `InvalidArgument`; invariant violations
/// `InvalidGraph`.
WeightedGraph graph_from_json(const Json& j);
/// Parses text; a parse failure raises `InvalidArgument`.
WeightedGraph graph_from_text(const std::string& text);

/// The canonical tree materialised with preorder ids from 0, root included.
Json tree_to_json(const CanonicalTree& t);

Json big_to_json(const BigInt& v);
/// {"degree":d,"coefficients":["c0","c1",...]}, low to high.
Json poly_to_json(const IntPolynomial& p);
/// Coefficients c_0..c_N as decimal strings; rationals as "p/q".
Json series_coefficients_json(const RationalSeries& s);
Json coproduct_to_json(const std::vector<ForestTerm>& terms);
/// {"n":..,"property":..,["k":..,]"total":"..","hits":"..","fraction":"p/q"}.
Json census_row_to_json(const CensusRow& row);
/// "p/q", or "p" when the denominator is 1.
std::string rational_to_string(const BigRational& r);

}  // namespace limbforge
