#pragma once

// JSON encodings of the library types (ordered_json keeps key order stable
// for byte-deterministic output).

#include <string>

#include <json.hpp>

#include "forcing.hpp"
#include "orbit.hpp"
#include "plist.hpp"
#include "region.hpp"
#include "verify.hpp"

namespace hsforce {

using json = nlohmann::ordered_json;

inline json to_json(const Rectangle& r) {
    return json{{"x_min", r.x_min.str()},
                {"x_max", r.x_max.str()},
                {"y_min", r.y_min.str()},
                {"y_max", r.y_max.str()},
                {"provenance", r.provenance}};
}

inline json to_json(const PruningRegion& region) {
    json a = json::array();
    for (const auto& r : region) a.push_back(to_json(r));
    return a;
}

inline json to_json(const PeriodicOrbit& o) {
    return json{{"period", o.period()}, {"code", o.code.str()}};
}

inline json to_json(const PlanePoint& p) {
    return json{{"forward", p.forward.str()}, {"backward", p.backward.str()}};
}

inline json to_json(const HomoclinicOrbit& o) {
    switch (o.family) {
        case HomoclinicOrbit::Family::Maximal:
            return json{{"family", "decoration"}, {"w", o.w.str()}};
        case HomoclinicOrbit::Family::Star:
            return json{{"family", "star"}, {"q", o.q.str()}};
        case HomoclinicOrbit::Family::Chain: {
            json qs = json::array();
            for (const auto& q : o.qs) qs.push_back(q.str());
            return json{{"family", "plist"}, {"qs", qs}};
        }
    }
    throw std::logic_error("unreachable");
}

inline json to_json(const HomoclinicOrbit& gen, const PruningRegion& region,
                    const ForcingReport& rep) {
    json forced = json::array();
    for (const auto& o : rep.forced) forced.push_back(to_json(o));
    json excluded = json::array();
    for (const auto& e : rep.excluded)
        excluded.push_back(json{{"period", e.orbit.period()},
                                {"code", e.orbit.code.str()},
                                {"witness_forward", e.witness.forward.str()},
                                {"witness_backward", e.witness.backward.str()},
                                {"rect_index", e.rect_index}});
    return json{{"generator", to_json(gen)},
                {"region", to_json(region)},
                {"maxPeriod", rep.max_period},
                {"forced", forced},
                {"excluded", excluded}};
}

inline json to_json(const Verdict& v) {
    json j;
    switch (v.status) {
        case VerifyStatus::Verified: j["status"] = "Verified"; break;
        case VerifyStatus::Violated: j["status"] = "Violated"; break;
        case VerifyStatus::Inconclusive: j["status"] = "Inconclusive"; break;
    }
    if (v.n) j["n"] = *v.n;
    if (v.side) j["side"] = *v.side == Side::Stable ? "stable" : "unstable";
    if (v.witness) j["witness"] = to_json(*v.witness);
    if (v.status == VerifyStatus::Inconclusive) j["bound_reached"] = v.bound_reached;
    if (!v.notes.empty()) j["notes"] = v.notes;
    return j;
}

}  // namespace hsforce
