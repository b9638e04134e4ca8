#include "tandiv/json_io.hpp"

#include <json.hpp>

#include "tandiv/error.hpp"

namespace tandiv {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(errc::parse, "malformed JSON");
    return j;
}

json cert_row_to_json(const CertRow& row) {
    return json{{"k", row.k},         {"name", row.name},     {"value", row.value},
                {"bound", row.bound}, {"upper", row.upper},   {"gating", row.gating},
                {"margin", row.margin()}};
}

CertRow cert_row_from_json(const json& j) {
    CertRow row;
    row.k = j.at("k").get<int>();
    row.name = j.at("name").get<std::string>();
    row.value = j.at("value").get<double>();
    row.bound = j.at("bound").get<double>();
    row.upper = j.at("upper").get<bool>();
    row.gating = j.at("gating").get<bool>();
    return row;
}

} // namespace

std::string kernel_to_json(const Kernel& k) {
    json j{{"family", family_name(k.family())}, {"params", json::object()}};
    return j.dump();
}

Kernel kernel_from_json(const std::string& text) {
    json j = parse(text);
    require(j.contains("family"), errc::parse, "kernel JSON: missing family");
    return Kernel(family_from_name(j.at("family").get<std::string>()));
}

std::string curve_to_json(const ApproachCurve& c) {
    json j{{"family", curve_family_name(c.family())}, {"c", c.c()}};
    if (c.family() == CurveFamily::power) j["alpha"] = c.alpha();
    return j.dump();
}

ApproachCurve curve_from_json(const std::string& text) {
    json j = parse(text);
    require(j.contains("family"), errc::parse, "curve JSON: missing family");
    CurveFamily f = curve_family_from_name(j.at("family").get<std::string>());
    double c = j.value("c", 1.0);
    switch (f) {
        case CurveFamily::power: {
            require(j.contains("alpha"), errc::parse, "curve JSON: power needs alpha");
            return ApproachCurve::power(c, j.at("alpha").get<double>());
        }
        case CurveFamily::loglinear: return ApproachCurve::loglinear(c);
        case CurveFamily::linear: return ApproachCurve::linear(c);
    }
    fail(errc::parse, "curve JSON: bad family");
}

std::string interval_union_to_json(const IntervalUnion& u) {
    json j = json::array();
    for (const Arc& a : u.arcs()) j.push_back(json::array({a.lo, a.hi}));
    return j.dump();
}

IntervalUnion interval_union_from_json(const std::string& text) {
    json j = parse(text);
    require(j.is_array(), errc::parse, "interval union JSON: expected an array of [lo, hi]");
    std::vector<Arc> arcs;
    for (const auto& item : j) {
        require(item.is_array() && item.size() == 2, errc::parse,
                "interval union JSON: each entry must be [lo, hi]");
        arcs.push_back({item[0].get<double>(), item[1].get<double>()});
    }
    return IntervalUnion::from_arcs(std::move(arcs));
}

std::string product_to_json(const BlaschkeProduct& b) {
    json factors = json::array();
    for (const auto& f : b.factors()) factors.push_back(json{{"n", f.n}, {"delta", f.delta}});
    return json{{"factors", factors}}.dump();
}

BlaschkeProduct product_from_json(const std::string& text) {
    json j = parse(text);
    require(j.contains("factors") && j.at("factors").is_array(), errc::parse,
            "product JSON: missing factors array");
    std::vector<BlaschkeFactor> fs;
    for (const auto& item : j.at("factors")) {
        BlaschkeFactor f;
        f.n = item.at("n").get<long long>();
        f.delta = item.at("delta").get<double>();
        require(f.n >= 1 && f.delta > 0.0, errc::parse, "product JSON: bad factor");
        fs.push_back(f);
    }
    return BlaschkeProduct(std::move(fs));
}

std::string schedule_to_json(const Schedule& s) {
    json entries = json::array();
    for (const auto& e : s.entries) {
        entries.push_back(json{{"k", e.k},
                               {"delta", e.delta},
                               {"u", e.u},
                               {"v", e.v},
                               {"n", e.n},
                               {"lambda_u", e.lambda_u},
                               {"carrier", e.carrier}});
    }
    json cert = json::array();
    for (const auto& row : s.certificate) cert.push_back(cert_row_to_json(row));
    json j{{"variant", variant_name(s.variant)},
           {"depth", s.depth},
           {"beta_target", s.beta_target},
           {"kernel_family", s.kernel_family},
           {"curve_family", s.curve_family},
           {"entries", entries},
           {"certificate", cert}};
    return j.dump(2);
}

Schedule schedule_from_json(const std::string& text) {
    json j = parse(text);
    Schedule s;
    s.variant = variant_from_name(j.at("variant").get<std::string>());
    s.depth = j.at("depth").get<int>();
    s.beta_target = j.at("beta_target").get<double>();
    s.kernel_family = j.at("kernel_family").get<std::string>();
    s.curve_family = j.at("curve_family").get<std::string>();
    for (const auto& item : j.at("entries")) {
        ScheduleEntry e;
        e.k = item.at("k").get<int>();
        e.delta = item.at("delta").get<double>();
        e.u = item.at("u").get<double>();
        e.v = item.at("v").get<double>();
        e.n = item.at("n").get<long long>();
        e.lambda_u = item.at("lambda_u").get<double>();
        e.carrier = item.value("carrier", false);
        s.entries.push_back(e);
    }
    if (j.contains("certificate"))
        for (const auto& item : j.at("certificate")) s.certificate.push_back(cert_row_from_json(item));
    require((int)s.entries.size() == s.depth, errc::parse, "schedule JSON: depth mismatch");
    return s;
}

std::string validation_to_json(const ValidationReport& rep) {
    json rows = json::array();
    for (const auto& row : rep.rows) rows.push_back(cert_row_to_json(row));
    return json{{"pass", rep.pass},
                {"min_gating_margin", rep.min_gating_margin},
                {"rows", rows}}
        .dump(2);
}

std::string beta_to_json(const BetaEstimate& est) {
    json j{{"value", est.value},
           {"deltas", est.deltas},
           {"inner_liminf", est.inner_liminf},
           {"r_grid", est.r_grid}};
    return j.dump(2);
}

std::string set_sequence_to_json(const SetSequence& seq) {
    json sets = json::array(), combs = json::array();
    for (const auto& s : seq.sets) {
        json arcs = json::array();
        for (const Arc& a : s.arcs()) arcs.push_back(json::array({a.lo, a.hi}));
        sets.push_back(std::move(arcs));
    }
    for (const auto& c : seq.combs) {
        json arcs = json::array();
        for (const Arc& a : c.arcs()) arcs.push_back(json::array({a.lo, a.hi}));
        combs.push_back(std::move(arcs));
    }
    return json{{"sets", sets}, {"combs", combs}}.dump();
}

} // namespace tandiv
