#include "lvint/serialize.hpp"

namespace lvint {

using nlohmann::json;

PlanarField field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("P") || !j.contains("Q"))
        throw std::invalid_argument("field json must be an object with \"P\" and \"Q\"");
    return {BiPoly::parse(j.at("P").get<std::string>()),
            BiPoly::parse(j.at("Q").get<std::string>())};
}

json field_to_json(const PlanarField& f) {
    return json{{"P", f.P.str()}, {"Q", f.Q.str()}};
}

json to_json(const LVData& lv) {
    return json{{"p", lv.p},
                {"q", lv.q},
                {"r", lv.r},
                {"M", lv.M},
                {"alpha", lv.alpha.str()},
                {"beta", lv.beta.str()},
                {"time_scale", lv.time_scale.str()},
                {"I_M", lv.I_M.body().str()},
                {"h", lv.h.body().str()},
                {"mu", lv.mu.body().str()}};
}

json to_json(const Obstruction& o) {
    json coords = json::array(), basis = json::array();
    for (const auto& c : o.coords) coords.push_back(c.str());
    for (const auto& b : o.basis) basis.push_back(b.str());
    return json{{"degree", o.degree}, {"coords", coords}, {"basis", basis}};
}

json to_json(const FirstIntegralCertificate& c) {
    return json{{"integral", c.integral.str()},
                {"leading", c.leading.body().str()},
                {"verified_to_degree", c.verified_to_degree}};
}

json to_json(const IIFCertificate& c) {
    return json{{"v", c.v.str()}, {"verified_to_degree", c.verified_to_degree}};
}

json to_json(const InvariantCurveCertificate& c) {
    return json{{"curve", c.curve.str()},
                {"cofactor", c.cofactor.str()},
                {"verified_to_degree", c.verified_to_degree}};
}

json to_json(const ClassificationVerdict& v) {
    json j{{"integrable", v.integrable}};
    if (v.witness) j["certificate"] = to_json(*v.witness);
    if (v.obstruction) j["obstruction"] = to_json(*v.obstruction);
    return j;
}

json to_json(const NormalFormReport& r) {
    json eta = json::array();
    for (const auto& [degree, coords] : r.eta) {
        json entry{{"degree", degree}};
        json cs = json::array(), basis = json::array();
        for (const auto& c : coords) cs.push_back(c.str());
        for (const auto& b : r.chain.at(degree).basis) basis.push_back(b.body().str());
        entry["coords"] = cs;
        entry["basis"] = basis;
        eta.push_back(entry);
    }
    json gens = json::array();
    for (const auto& g : r.generators) {
        gens.push_back(json{{"degree", g.degree},
                            {"U", json::array({g.field_part.P.str(), g.field_part.Q.str()})},
                            {"nu", g.scale_part.str()}});
    }
    return json{{"lv", to_json(r.lv)},
                {"max_degree", r.max_degree},
                {"eta", eta},
                {"generators", gens},
                {"residual", field_to_json(r.residual_field)}};
}

json to_json(const AplicaParams& p) {
    return json{{"a20", p.a20.str()}, {"a11", p.a11.str()}, {"a02", p.a02.str()},
                {"b20", p.b20.str()}, {"b11", p.b11.str()}, {"b02", p.b02.str()}};
}

json to_json(const SweepReport& r) {
    json samples = json::array();
    for (const auto& s : r.samples) {
        json item{{"index", s.index},
                  {"params", to_json(s.params)},
                  {"cases_satisfied", s.cases_satisfied},
                  {"integrable", s.integrable},
                  {"oracle_agrees", s.oracle_agrees}};
        if (s.obstruction_degree >= 0) item["obstruction_degree"] = s.obstruction_degree;
        samples.push_back(item);
    }
    return json{{"seed", r.seed},
                {"mode", r.mode},
                {"max_degree", r.max_degree},
                {"count", r.samples.size()},
                {"samples", samples},
                {"summary",
                 json{{"integrable", r.integrable_count},
                      {"obstructed", r.obstructed_count},
                      {"disagreements", r.disagreement_count}}}};
}

}  // namespace lvint
