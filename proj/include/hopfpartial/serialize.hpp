#pragma once

#include "hopfpartial/algebra.hpp"
#include "hopfpartial/report.hpp"

namespace hp {

// {"order": N, "coeffs": ["p/q", ...]}
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

// [[index, scalar], ...]
Json sparse_to_json(const SparseVec& v);
SparseVec sparse_from_json(const Json& j);

// {"rows": r, "cols": c, "entries": [[row, col, scalar], ...]} column-major.
Json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

Json linmap_to_json(const LinMap& m);
LinMap linmap_from_json(const Json& j);

// Structure-constant rows {"left", "right", "product"} for every basis pair.
Json algebra_table_to_json(const StructuredAlgebra& a);

// dim, sparse mult/comult triples, unit, counit, antipode.
Json hopf_to_json(const HopfAlgebraData& h);
HopfAlgebraData hopf_from_json(const Json& j);

}  // namespace hp
