#pragma once

#include <json.hpp>

#include "w22/charges.hpp"
#include "w22/griess.hpp"
#include "w22/growth.hpp"
#include "w22/qseries.hpp"
#include "w22/shapovalov.hpp"
#include "w22/verma.hpp"

namespace w22 {

/// Insertion-ordered JSON so records keep their documented field order.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
/// Accepts "p/q" or "p" strings (and JSON integers); throws ParseError otherwise.
Rational rational_from_json(const Json& j);

/// { "offset": "p/q", "coeffs": ["a0/b0", ...], "order": N }
Json to_json(const QSeries& s);
QSeries qseries_from_json(const Json& j);

/// { "w": [m1, ...], "l": [n1, ...] }
Json to_json(const Monomial& m);
/// [[monomial, "p/q"], ...] in basis order.
Json to_json(const ModuleVector& v);
Json to_json(const HighestWeight& w);

/// { "weight", "vacuum", "level", "basis", "matrix", "determinant", "radical" }
Json to_json(const GramMatrix& g);
/// { "irreducible": bool, "witness_m": int or null, "trivial_vacuum": bool }
Json to_json(const IrreducibilityDecision& d);

Json to_json(const GrowthReport& r);

Json to_json(const MinimalPair& p);
Json to_json(const std::vector<PairSolution>& sols);
Json to_json(const CurvePoint& p);
Json to_json(const NoncongruentResult& r);

/// { "basis": [l1, l2], "products": [[e1e1, e1e2], [e2e1, e2e2]], "form": [[..],[..]] }
/// where each product is a coordinate pair ["p/q", "p/q"]. Throws ParseError on
/// malformed records and AxiomError on axiom violations.
CommAlgebra2 comm_algebra_from_json(const Json& j);
Json to_json(const CommAlgebra2& a);
Json to_json(const GriessVerdict& v, const CommAlgebra2& a);
/// { "verdict", "hypotheses_met", "surviving_modules", "trace": [{step, claim, paper_anchor, outcome}] }
Json to_json(const PipelineResult& r);

}  // namespace w22
