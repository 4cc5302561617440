#include "ssn/serialize.hpp"

#include <limits>

namespace ssn {

using json = nlohmann::ordered_json;

namespace {

json knot_params(const KnotId& knot) {
    return std::visit(
        [](const auto& k) -> json {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, Em1Knot>)
                return {{"l", k.l}, {"n", k.n}, {"p", k.p}};
            else if constexpr (std::is_same_v<T, Em2Knot>)
                return {{"l", k.l}, {"m", k.m}, {"n", k.n}, {"p", k.p}};
            else if constexpr (std::is_same_v<T, Em3Knot>)
                return {{"a1", to_json(k.a1)}, {"a2", to_json(k.a2)}, {"a3", to_json(k.a3)}};
            else if constexpr (std::is_same_v<T, TorusKnot>)
                return {{"p", k.p}, {"q", k.q}};
            else if constexpr (std::is_same_v<T, Unknot>)
                return json::object();
            else
                return {{"components", std::string{k.first, k.second}}, {"pair", to_json(k.state)}};
        },
        knot);
}

const char* family_name(const KnotId& knot) {
    static constexpr const char* names[] = {"EM1", "EM2", "EM3", "Torus", "Unknot", "HopfStage"};
    return names[knot.index()];
}

const char* kind_name(MoveKind kind) {
    switch (kind) {
    case MoveKind::Seiferter: return "seiferter";
    case MoveKind::AnnularPair: return "annular_pair";
    case MoveKind::HopfPair: return "hopf_pair";
    }
    return "?";
}

json move_json(const TwistMove& m) { return {{"kind", kind_name(m.kind)}, {"name", m.name}, {"count", to_json(m.count)}}; }

} // namespace

json to_json(const ExtendedRational& r) { return r.fraction_str(); }

json to_json(const Integer& v) {
    if (v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min())
        return static_cast<std::int64_t>(v);
    return v.str();
}

json to_json(const SeifertInvariants& si) {
    json coeffs = json::array();
    for (const auto& q : si.coefficients) coeffs.push_back(to_json(q));
    return {{"base", to_string(si.base)}, {"coeffs", std::move(coeffs)}};
}

json to_json(const SfsClassification& c) {
    json out = {{"kind", to_string(c.kind)}};
    if (c.kind == SfsKind::LensSpace || c.kind == SfsKind::ConnectedSumOfLensSpaces) {
        json lens = json::array();
        for (const auto& l : c.lens) lens.push_back({to_json(l.p), to_json(l.q)});
        out["lens"] = std::move(lens);
    } else {
        out["space"] = to_json(c.space);
    }
    return out;
}

json to_json(const SurgeryVertex& v) {
    return {{"id", v.id()}, {"family", family_name(v.knot)}, {"params", knot_params(v.knot)}, {"slope", v.slope.json_str()}};
}

json to_json(const SurgeryResult& r) {
    json out = {{"family", family_name(r.vertex.knot)},
                {"params", knot_params(r.vertex.knot)},
                {"slope", r.vertex.slope.json_str()},
                {"id", r.vertex.id()},
                {"space", to_json(r.space)}};
    out["classification"] = to_json(recognize(r.space));
    return out;
}

json to_json(const HopfPairState& s) { return json::array({to_json(s.a), to_json(s.b)}); }

json to_json(const TwistSequence& seq) {
    json out = json::array();
    for (const auto& step : seq.steps)
        out.push_back({{"component", step.component == HopfComponent::A ? "A" : "B"}, {"count", to_json(step.count)}});
    return out;
}

json to_json(const SurgeryDescription& d) {
    json out = json::object();
    for (const auto& s : d.surgeries) out[std::string(1, s.component)] = to_json(s.coefficient);
    return out;
}

json to_json(const NetworkPath& path) {
    json start = to_json(path.start);
    if (path.start_identified_with) start["identified_with"] = path.start_identified_with->id();
    json steps = json::array();
    for (const auto& step : path.steps) {
        json s = {{"move", move_json(step.move)}, {"vertex", to_json(step.vertex)}};
        if (step.identified_with) s["identified_with"] = step.identified_with->id();
        steps.push_back(std::move(s));
    }
    return {{"start", std::move(start)}, {"steps", std::move(steps)}, {"terminal", path.terminal().id()}};
}

json to_json(const NetworkGraph& graph) {
    json nodes = json::array();
    for (const auto& n : graph.nodes)
        nodes.push_back({{"id", n.id}, {"knot", n.knot}, {"slope", n.slope}, {"aliases", n.aliases}});
    json edges = json::array();
    for (const auto& e : graph.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"move", e.move}});
    return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

} // namespace ssn
