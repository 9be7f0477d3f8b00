#include <ellgw/serialization.hpp>

#include <stdexcept>
#include <string>

namespace ellgw
{

namespace
{

// Type and key errors from the JSON library become invalid_argument.
template <class F>
auto guarded(const char *what, F &&f)
{
    try {
        return f();
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string(what) + ": " + e.what());
    }
}

} // namespace

Json to_json(const Rational &r)
{
    return to_string(r);
}

Json to_json(const QSeries &s)
{
    Json coeffs = Json::array();
    for (const auto &c : s.coeffs()) {
        coeffs.push_back(to_string(c));
    }
    Json j;
    j["order"] = s.order();
    j["coeffs"] = std::move(coeffs);
    return j;
}

Json to_json(const DiffPoly &p)
{
    Json out = Json::array();
    for (const auto &[m, c] : p.terms()) {
        Json t;
        t["indices"] = m.indices();
        t["coeff"] = to_string(c);
        out.push_back(std::move(t));
    }
    return out;
}

Json to_json(const QuasiModularRep &rep)
{
    Json terms = Json::array();
    for (const auto &[m, c] : rep.terms) {
        Json t;
        t["e2"] = m.e2;
        t["e4"] = m.e4;
        t["e6"] = m.e6;
        t["coeff"] = to_string(c);
        terms.push_back(std::move(t));
    }
    Json j;
    j["weight"] = rep.weight;
    j["terms"] = std::move(terms);
    return j;
}

Json to_json(const InvariantRecord &rec)
{
    Json j;
    j["insertions"] = rec.insertions;
    j["genus"] = rec.genus ? Json(*rec.genus) : Json(nullptr);
    j["pipeline"] = to_string(rec.pipeline);
    j["q_order"] = rec.q_order;
    j["series"] = to_json(rec.series);
    if (rec.quasi_modular) {
        j["quasi_modular"] = to_json(*rec.quasi_modular);
    }
    return j;
}

Rational rational_from_json(const Json &j)
{
    if (!j.is_string()) {
        throw std::invalid_argument("rational must be a JSON string");
    }
    return parse_rational(j.get<std::string>());
}

QSeries qseries_from_json(const Json &j)
{
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs") || !j["order"].is_number_integer()
        || !j["coeffs"].is_array()) {
        throw std::invalid_argument("QSeries JSON needs integer \"order\" and array \"coeffs\"");
    }
    std::vector<Rational> coeffs;
    for (const auto &c : j["coeffs"]) {
        coeffs.push_back(rational_from_json(c));
    }
    return QSeries(j["order"].get<int>(), std::move(coeffs));
}

DiffPoly diffpoly_from_json(const Json &j)
{
    if (!j.is_array()) {
        throw std::invalid_argument("DiffPoly JSON must be an array");
    }
    DiffPoly p;
    for (const auto &t : j) {
        if (!t.is_object() || !t.contains("indices") || !t.contains("coeff") || !t["indices"].is_array()) {
            throw std::invalid_argument("DiffPoly term needs \"indices\" and \"coeff\"");
        }
        const auto idx = guarded("DiffPoly indices", [&] { return t["indices"].get<std::vector<int>>(); });
        p.add_term(JetMonomial(idx), rational_from_json(t["coeff"]));
    }
    return p;
}

QuasiModularRep quasimodular_from_json(const Json &j)
{
    if (!j.is_object() || !j.contains("weight") || !j.contains("terms") || !j["terms"].is_array()) {
        throw std::invalid_argument("QuasiModularRep JSON needs \"weight\" and \"terms\"");
    }
    QuasiModularRep rep;
    rep.weight = guarded("QuasiModularRep weight", [&] { return j["weight"].get<int>(); });
    for (const auto &t : j["terms"]) {
        const EisensteinMonomial m = guarded("QuasiModularRep term", [&] {
            return EisensteinMonomial{t.at("e2").get<int>(), t.at("e4").get<int>(), t.at("e6").get<int>()};
        });
        if (m.weight() != rep.weight) {
            throw std::invalid_argument("QuasiModularRep term does not have the declared weight");
        }
        rep.terms[m] += rational_from_json(t.at("coeff"));
    }
    return rep;
}

} // namespace ellgw
