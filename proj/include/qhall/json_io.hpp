#pragma once

#include <string>

#include <json.hpp>

#include "qhall/basis.hpp"
#include "qhall/core.hpp"
#include "qhall/hall.hpp"
#include "qhall/module_theory.hpp"
#include "qhall/order.hpp"
#include "qhall/poly.hpp"

namespace qhall {

using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are JSON numbers; larger ones are decimal
// strings. Non-integral rationals are "p/q" strings.
Json to_json(const Integer& z);
Json to_json(const Rational& r);
Json to_json(const Partition& p);
Json to_json(const MultiPartition& pi);
Json to_json(const Word& w);
Json to_json(const DimVector& d);
Json to_json(const ModuleSummands& m);
Json to_json(const IntPoly& p, const std::string& var = "q");
Json to_json(const RatPoly& p, const std::string& var = "v");
Json to_json(const LaurentPoly& p);
Json to_json(const RatFunc& f);
Json to_json(const Step& s);
Json to_json(const HallVector<LaurentPoly>& x);
Json to_json(const HallVector<RatFunc>& x);
Json to_json(const Poset& p);
Json to_json(const TransitionMatrix& t);

/// Accepts {"n":..,"parts":[[..],..]} or a bare parts array when n is given (n > 0).
MultiPartition multipartition_from_json(const Json& j, int n = 0, const std::string& name = "pi");
Word word_from_json(const Json& j, int n = 0);
DimVector dim_vector_from_json(const Json& j);
ModuleSummands module_from_json(const Json& j);
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
IntPoly int_poly_from_json(const Json& j);
LaurentPoly laurent_from_json(const Json& j);
RatFunc ratfunc_from_json(const Json& j);
HallVector<RatFunc> hall_vector_from_json(const Json& j);

/// Parses text, turning syntax errors into DomainError.
Json parse_json(const std::string& text, const std::string& what);

/// One node per element labelled by its JSON, one edge per cover.
std::string to_dot(const Poset& p);

}  // namespace qhall
