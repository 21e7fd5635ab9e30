#pragma once

#include <string>

#include "lensstring/bialgebra.hpp"
#include "lensstring/classify.hpp"
#include "lensstring/torsion.hpp"

namespace lensstring {

// JSON serialization of the documented schemas. Kept out of the core headers
// so the library itself stays dependency-free.

/// {"n": int, "m": int, "coeffs": [ ... ]}
std::string to_json(const CyclicPoly& p);
/// {"n": int, "m": int, "terms": [{"exp": a, "coeff": c}, ...]}
std::string to_json(const OneForm& w);
/// {"n": int, "terms": [{"i": , "j": , "c": }, ...]}
std::string to_json(const BiForm& b);
/// {"n": int, "terms": [{"p": , "q": , "c": , "mod": }, ...]}
std::string to_json(const EqTensor& t);
/// {"left": EqTensor, "swapped": EqTensor}
std::string to_json(const EqTensorPair& t);
std::string to_json(const AlphaTensor& t);
std::string to_json(const CountReport& r);
std::string to_json(const PairVerdict& v);
std::string to_json(const TransformReport& r);
/// {"lhs": ..., "rhs": ..., "compatible": bool}
std::string to_json(const BialgebraVerdict& v);
std::string to_json(const SearchResult& r);

BiForm biform_from_json(const std::string& text);
EqTensor eqtensor_from_json(const std::string& text);

}  // namespace lensstring
