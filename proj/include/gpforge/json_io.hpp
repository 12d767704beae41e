#pragma once

// JSON encoding of every public record type. Rationals are always the
// canonical "num/den" string, binary form coefficients descending powers of p.
// Output through nlohmann::json is key-sorted, so identical inputs serialize
// byte-identically.

#include <gpforge/conformance.hpp>
#include <gpforge/elliptic.hpp>
#include <gpforge/family.hpp>
#include <gpforge/search.hpp>

#include <json.hpp>

namespace gpforge {

using nlohmann::json;

inline void to_json(json& j, const Rational& r) { j = r.str(); }
inline void from_json(const json& j, Rational& r) {
    r = Rational::from_string(j.get<std::string>());
}

inline void to_json(json& j, const BinaryForm& f) { j = f.coefficients; }
inline void from_json(const json& j, BinaryForm& f) {
    auto coeffs = j.get<std::vector<Rational>>();
    int degree = static_cast<int>(coeffs.size()) - 1;
    f = BinaryForm(degree, std::move(coeffs));
}

inline void to_json(json& j, const ConicPoint& pt) {
    j = json{{"U", pt.U}, {"V", pt.V}, {"R", pt.R}};
}
inline void from_json(const json& j, ConicPoint& pt) {
    j.at("U").get_to(pt.U);
    j.at("V").get_to(pt.V);
    j.at("R").get_to(pt.R);
}

inline void to_json(json& j, const QuarticModel& m) {
    j = json{{"t", m.t}, {"coeffs", m.F}, {"clearing_factor", m.clearing}};
    if (m.marked_point)
        j["marked_point"] = json{{"p", m.marked_point->p},
                                 {"q", m.marked_point->q},
                                 {"S", m.marked_point->S}};
}
inline void from_json(const json& j, QuarticModel& m) {
    j.at("t").get_to(m.t);
    j.at("coeffs").get_to(m.F);
    j.at("clearing_factor").get_to(m.clearing);
    if (j.contains("marked_point")) {
        QuarticModel::MarkedPoint mp;
        j.at("marked_point").at("p").get_to(mp.p);
        j.at("marked_point").at("q").get_to(mp.q);
        j.at("marked_point").at("S").get_to(mp.S);
        m.marked_point = std::move(mp);
    } else {
        m.marked_point.reset();
    }
}

inline void to_json(json& j, const ECPoint& p) {
    if (p.infinity)
        j = json{{"infinity", true}};
    else
        j = json{{"x", p.x}, {"y", p.y}};
}
inline void from_json(const json& j, ECPoint& p) {
    if (j.contains("infinity") && j.at("infinity").get<bool>()) {
        p = ECPoint::at_infinity();
    } else {
        p = ECPoint::affine(j.at("x").get<Rational>(), j.at("y").get<Rational>());
    }
}

inline void to_json(json& j, const TrinomialCurve& c) {
    j = json{{"n", c.n}, {"a", c.a}, {"b", c.b}};
}
inline void from_json(const json& j, TrinomialCurve& c) {
    j.at("n").get_to(c.n);
    j.at("a").get_to(c.a);
    j.at("b").get_to(c.b);
}

inline void to_json(json& j, const CurvePoint& p) { j = json{{"x", p.x}, {"y", p.y}}; }
inline void from_json(const json& j, CurvePoint& p) {
    j.at("x").get_to(p.x);
    j.at("y").get_to(p.y);
}

inline void to_json(json& j, const FamilyRecord& rec) {
    j = json{{"T", rec.T},
             {"n", rec.n},
             {"m", rec.m},
             {"curve", rec.curve},
             {"points", rec.sequence.points},
             {"provenance",
              json{{"t", rec.provenance.t},
                   {"U", rec.provenance.U},
                   {"V", rec.provenance.V},
                   {"R", rec.provenance.R},
                   {"S", rec.provenance.S},
                   {"p", rec.provenance.p},
                   {"q", rec.provenance.q}}}};
}
inline void from_json(const json& j, FamilyRecord& rec) {
    j.at("T").get_to(rec.T);
    j.at("n").get_to(rec.n);
    j.at("m").get_to(rec.m);
    j.at("curve").get_to(rec.curve);
    auto points = j.at("points").get<std::vector<CurvePoint>>();
    const auto& prov = j.at("provenance");
    prov.at("t").get_to(rec.provenance.t);
    prov.at("U").get_to(rec.provenance.U);
    prov.at("V").get_to(rec.provenance.V);
    prov.at("R").get_to(rec.provenance.R);
    prov.at("S").get_to(rec.provenance.S);
    prov.at("p").get_to(rec.provenance.p);
    prov.at("q").get_to(rec.provenance.q);
    rec.sequence.points = std::move(points);
    if (rec.sequence.points.size() >= 2) {
        rec.sequence.base = rec.sequence.points[0].x;
        rec.sequence.ratio = rec.sequence.points[1].x / rec.sequence.points[0].x;
    }
}

inline void to_json(json& j, const GPSequence& s) {
    j = json{{"base", s.base}, {"ratio", s.ratio}, {"points", s.points}};
}
inline void from_json(const json& j, GPSequence& s) {
    j.at("base").get_to(s.base);
    j.at("ratio").get_to(s.ratio);
    j.at("points").get_to(s.points);
}

inline void to_json(json& j, const GPHit& h) {
    j = json{{"i", h.i}, {"x", h.x}, {"y", h.y}};
}

inline void to_json(json& j, const Length10Hit& h) {
    j = json{{"p", h.p}, {"q", h.q}, {"S7", h.S7}, {"S9", h.S9}, {"degenerate", h.degenerate}};
}

inline void to_json(json& j, const AuditEntry& e) {
    j = json{{"id", e.id}, {"status", to_string(e.status)}, {"witness", e.witness}};
}

inline void to_json(json& j, const ConformanceReport& r) {
    j = json{{"entries", r.entries}};
}

}  // namespace gpforge
