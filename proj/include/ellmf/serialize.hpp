#pragma once

// JSON encodings of polynomials, factorizations, Betti and cohomology tables.
// Decoders throw ParseError naming the offending JSON path.

#include <json.hpp>

#include "ellmf/mf.hpp"
#include "ellmf/tables.hpp"

namespace ellmf {

using Json = nlohmann::json;  // object keys are kept sorted

/// Terms in increasing (x, y) order: {"x", "y", "c"} with c[k] the lambda^k
/// coefficient of the numerator and, for non-polynomial coefficients, "d" the
/// monic denominator in the same layout.
Json poly_to_json(const BiPoly& p);
BiPoly poly_from_json(const Json& j, const std::string& path, bool numeric);

Json mf_to_json(const MatrixFactorization& m);
MatrixFactorization mf_from_json(const Json& j);

/// {"entries": [{"i", "j", "beta"}, ...]} sorted by (i, j).
Json betti_to_json(const BettiTable& t);
BettiTable betti_from_json(const Json& j);

/// {"rows": [[h, h] x 4], "r", "d", "tube"}.
Json cohom_to_json(const CohomTable& t, const RDPair& p, TubeTag tag);

/// Two-space indent and a trailing newline.
std::string dump_canonical(const Json& j);

}  // namespace ellmf
