#pragma once

#include "wfh/characters.hpp"

#include "json.hpp"

namespace wfh {

using nlohmann::json;

// Integers are written as decimal strings, labels in their text syntax.
json encode(const IntValuedPoly& p);
json encode(const RGammaElement& a);
json encode(const WeightedSymFn& f);
json encode(const CentreElement& z);
json encode(const FHElement& a);
json encode(const TensorElement& x);
json encode(const BlockPartition& b);
json encode(const BlockReport& r);
json encode(const Indecomposables& d);

// Malformed documents raise Validation errors.
IntValuedPoly decode_intpoly(const json& j);
RGammaElement decode_rgamma(const json& j);
WeightedSymFn decode_wsf(const json& j);
CentreElement decode_centre(const json& j);
FHElement decode_fh(const json& j);
TensorElement decode_tensor(const json& j);
BlockPartition decode_blocks(const json& j);
BlockReport decode_block_report(const json& j);
Indecomposables decode_indecomposables(const json& j);

}  // namespace wfh
