// JSON wire formats: points as integer arrays, regions as tagged objects,
// Johnson statistics as {"a":..., "entries":[{"point":[...],"j":...}]},
// verdicts as JSON lines, Laurent polynomials as exponent/coefficient pairs
// plus the canonical string rendering.
#pragma once

#include <json.hpp>

#include "verify.hpp"

namespace qcat {

using nlohmann::json;

inline json to_json(const Point& p) { return json(p); }

inline Point point_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("point: expected JSON array");
    return j.get<Point>();
}

inline json to_json(const Region& r) {
    switch (r.kind) {
        case Region::Kind::Simplex:
            return json{{"type", "simplex"}, {"b", r.b}};
        case Region::Kind::BoxSlice:
            return json{{"type", "box_slice"}, {"m", r.m}, {"n", r.n}};
        case Region::Kind::RotatedBox:
            return json{{"type", "rotated_box"}, {"b", r.b}, {"i", r.i}};
        case Region::Kind::Box:
            return json{{"type", "box"}};
    }
    return {};
}

inline Region region_from_json(const json& j) {
    std::string type = j.at("type").get<std::string>();
    if (type == "simplex") return Region::simplex(j.at("b").get<long long>());
    if (type == "box_slice")
        return Region::box_slice(j.at("m").get<long long>(), j.at("n").get<long long>());
    if (type == "rotated_box")
        return Region::rotated_box(j.at("b").get<long long>(), j.at("i").get<int>());
    if (type == "box") return Region::box();
    throw std::invalid_argument("region: unknown type " + type);
}

inline json to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(json::array({e, c.str()}));
    return json{{"terms", terms}, {"string", p.to_string()}};
}

inline LaurentPoly laurent_from_json(const json& j) {
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : j.at("terms"))
        terms.emplace_back(t.at(0).get<long long>(), BigInt(t.at(1).get<std::string>()));
    return LaurentPoly::from_terms(std::move(terms));
}

inline json to_json(const JohnsonStatistic& J) {
    json entries = json::array();
    for (const auto& [p, v] : J.table) entries.push_back(json{{"point", p}, {"j", v}});
    return json{{"a", J.a}, {"entries", entries}};
}

inline JohnsonStatistic johnson_from_json(const json& j) {
    JohnsonStatistic J;
    J.a = j.at("a").get<int>();
    for (const auto& e : j.at("entries")) {
        Point p = point_from_json(e.at("point"));
        if (!is_root_point(J.a, p))
            throw std::invalid_argument("statistic entry " + point_str(p) + " is not a root point");
        J.table[p] = e.at("j").get<long long>();
    }
    return J;
}

inline json to_json(const Partition& blocks) {
    json out = json::array();
    for (const auto& block : blocks) {
        json b = json::array();
        for (const auto& p : block) b.push_back(p);
        out.push_back(b);
    }
    return out;
}

inline json to_json(const Verdict& v, bool with_wall_time = true) {
    json j{{"claim", v.claim},
           {"params", v.params},
           {"status", Verdict::status_name(v.status)}};
    if (v.status == Verdict::Status::Counterexample) j["certificate"] = v.certificate;
    if (with_wall_time) j["wall_ms"] = v.wall_ms;
    return j;
}

// Table-2-style text rendering of a partition: one block per line, points in
// descending height, the root point in angle brackets.
inline std::string render_partition(int a, const Partition& blocks) {
    std::ostringstream out;
    for (const auto& block : blocks) {
        std::vector<Point> sorted = block;
        std::sort(sorted.begin(), sorted.end(), [](const Point& p, const Point& r) {
            long long hp = tilted_height(p), hr = tilted_height(r);
            return hp != hr ? hp > hr : p < r;
        });
        long long min_h = tilted_height(sorted.back());
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (i) out << " ";
            out << point_str(sorted[i], is_root_point(a, sorted[i]));
        }
        out << "  J=" << min_h << "\n";
    }
    return out.str();
}

}  // namespace qcat
