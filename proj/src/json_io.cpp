#include "hb/json_io.hpp"

#include <stdexcept>

namespace hb {

namespace {

long long to_ll(const BigInt& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("rational too large for JSON serialization");
    return v.convert_to<long long>();
}

} // namespace

Json to_json(const Rational& q) {
    return Json::array({to_ll(numerator(q)), to_ll(denominator(q))});
}

Rational rational_from_json(const Json& j) {
    return Rational(j.at(0).get<long long>(), j.at(1).get<long long>());
}

Json to_json(const GroupElement& g) {
    return Json::array({to_ll(numerator(g.theta.turns())), to_ll(denominator(g.theta.turns())),
                        to_ll(numerator(g.phi.turns())), to_ll(denominator(g.phi.turns()))});
}

GroupElement element_from_json(const Json& j) {
    return {RationalAngle(Rational(j.at(0).get<long long>(), j.at(1).get<long long>())),
            RationalAngle(Rational(j.at(2).get<long long>(), j.at(3).get<long long>()))};
}

Json to_json(const FiniteSubgroup& f) {
    Json gens = Json::array();
    for (const GroupElement& g : f.generators) gens.push_back(to_json(g));
    Json els = Json::array();
    for (const GroupElement& g : f.elements) els.push_back(to_json(g));
    return Json{{"ambient", Json::array({f.ambient_n, f.ambient_m})},
                {"generators", std::move(gens)},
                {"order", f.order},
                {"class", to_string(f.class_tag)},
                {"elements", std::move(els)}};
}

Json to_json(const RectUnion& u) {
    Json pieces = Json::array();
    for (const Rect& r : u.pieces)
        pieces.push_back(Json::array(
            {to_json(r.x.lo), to_json(r.x.hi), to_json(r.y.lo), to_json(r.y.hi)}));
    return Json{{"pieces", std::move(pieces)}};
}

RectUnion rect_union_from_json(const Json& j) {
    RectUnion u;
    for (const Json& p : j.at("pieces"))
        u.pieces.push_back(Rect{{rational_from_json(p.at(0)), rational_from_json(p.at(1))},
                                {rational_from_json(p.at(2)), rational_from_json(p.at(3))}});
    return u;
}

Json to_json(const ElementaryReport& r) {
    Json j{{"pass", r.pass()},
           {"condition_a", r.condition_a},
           {"condition_b", r.condition_b},
           {"area", to_json(r.area)}};
    if (r.violating_pair)
        j["violating_pair"] =
            Json::array({to_json(r.violating_pair->first), to_json(r.violating_pair->second)});
    if (r.uncovered_point)
        j["uncovered_point"] =
            Json::array({to_json(r.uncovered_point->first), to_json(r.uncovered_point->second)});
    return j;
}

Json to_json(const CosetSelection& s) {
    Json reps = Json::array();
    for (const GroupElement& g : s.representatives) reps.push_back(to_json(g));
    Json trans = Json::array();
    for (const GroupElement& g : s.transversal) trans.push_back(to_json(g));
    return Json{{"index", s.index},
                {"omega", s.omega},
                {"theta", s.theta},
                {"transversal", std::move(trans)},
                {"representatives", std::move(reps)}};
}

Json to_json(const GridFunction& f) {
    Json values = Json::array();
    for (const Rational& v : f.values) values.push_back(to_json(v));
    return Json{{"n1", f.spec.n1}, {"n2", f.spec.n2}, {"values", std::move(values)}};
}

GridFunction grid_function_from_json(const Json& j) {
    GridFunction f;
    f.spec = GridSpec{j.at("n1").get<long long>(), j.at("n2").get<long long>()};
    for (const Json& v : j.at("values")) f.values.push_back(rational_from_json(v));
    if (static_cast<long long>(f.values.size()) != f.spec.points())
        throw std::invalid_argument("grid function value count does not match dimensions");
    return f;
}

Json to_json(const InvariantReport& r) {
    Json gens = Json::array();
    for (const GroupElement& g : r.generators) gens.push_back(to_json(g));
    return Json{{"ambient", Json::array({r.ambient_n, r.ambient_m})},
                {"generators", std::move(gens)},
                {"class", to_string(r.class_tag)},
                {"trials", r.trials},
                {"rho_sigma_identity", r.rho_sigma_identity},
                {"sigma_rho_identity", r.sigma_rho_identity},
                {"annihilated", r.annihilated},
                {"invariant_dimension", r.invariant_dimension},
                {"pass", r.pass()}};
}

Json to_json(const WitnessReport& r) {
    Json gens = Json::array();
    for (const GroupElement& g : r.generators) gens.push_back(to_json(g));
    Json stab = Json::array();
    for (const GroupElement& g : r.stabilizer) stab.push_back(to_json(g));
    return Json{{"subgroup",
                 Json{{"ambient", Json::array({r.ambient_n, r.ambient_m})},
                      {"generators", std::move(gens)}}},
                {"grid", Json::array({r.grid.n1, r.grid.n2})},
                {"stabilizer", std::move(stab)},
                {"match", r.match}};
}

Json to_json(const CharacterTable& t) {
    Json rows = Json::array();
    for (const Character& chi : t.rows) {
        Json phases = Json::array();
        for (const Rational& p : chi.phases) phases.push_back(to_json(p));
        rows.push_back(Json{{"label", chi.label}, {"phases", std::move(phases)}});
    }
    Json els = Json::array();
    for (const GroupElement& g : t.element_order) els.push_back(to_json(g));
    return Json{{"group", to_json(t.group)},
                {"factor_orders", t.factor_orders},
                {"element_order", std::move(els)},
                {"rows", std::move(rows)}};
}

Json to_json(const InducedRepDescriptor& d) {
    return Json{{"little_group", to_json(d.little_group)},
                {"irrep_label", d.irrep_label},
                {"orbit", d.orbit_note},
                {"measure", d.measure_note},
                {"carrier", d.carrier_note}};
}

} // namespace hb
