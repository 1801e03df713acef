#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "gmt/chains/chain.hpp"
#include "gmt/chains/complex.hpp"
#include "gmt/group/normed_group.hpp"

namespace gmt::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kChainSchema = "gmt-chains/chain";
inline constexpr int kSchemaVersion = 1;

/// Floats in documents: 12 significant digits.
std::string format_double(double x);
json rational_json(const Rational& q);
Rational rational_from(const json& j);

json group_json(const NormedGroup& g);
NormedGroup group_from(const json& j);

/// A single-slot element is one "p/q" string; wider groups use an array.
json element_json(const GroupElement& g);
GroupElement element_from(const json& j, const NormedGroup& group);

json complex_json(const SimplicialComplex& k);
SimplicialComplex complex_from(const json& j,
                               SimplicialComplex::Validation v = SimplicialComplex::Validation::Full);

/// {schema, version, group, complex, chain: {dimension, cells}}.
json chain_json(const GChain& s);
GChain chain_from(const json& j, SimplicialComplex::Validation v = SimplicialComplex::Validation::Full);

/// {"linear": [[...]], "translation": [...]}.
json affine_json(const AffineMap& f);
AffineMap affine_from(const json& j);

json mass_json(const MassReport& r);
json interval_json(const Interval& i);

/// Parses text, mapping syntax errors to Error(ParseError).
json parse(const std::string& text);

}  // namespace gmt::io
