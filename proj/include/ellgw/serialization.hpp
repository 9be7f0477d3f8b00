#ifndef ELLGW_SERIALIZATION_HPP
#define ELLGW_SERIALIZATION_HPP

#include <json.hpp>

#include <ellgw/invariant_record.hpp>
#include <ellgw/jet_algebra.hpp>
#include <ellgw/modular_forms.hpp>
#include <ellgw/series.hpp>

namespace ellgw
{

// Insertion-ordered so that output is byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const Rational &r);
Json to_json(const QSeries &s);
// [{"indices": [...], "coeff": "p/q"}, ...] in monomial order.
Json to_json(const DiffPoly &p);
Json to_json(const QuasiModularRep &rep);
Json to_json(const InvariantRecord &rec);

// Inverses; throw std::invalid_argument on malformed documents.
Rational rational_from_json(const Json &j);
QSeries qseries_from_json(const Json &j);
DiffPoly diffpoly_from_json(const Json &j);
QuasiModularRep quasimodular_from_json(const Json &j);

} // namespace ellgw

#endif
