#include "ssn/network.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ssn/errors.hpp"

namespace ssn {

namespace {

using Q = ExtendedRational;

TwistMove seiferter(const char* name, const Integer& count) { return {MoveKind::Seiferter, name, count}; }

SurgeryVertex unknot_at(const Integer& slope) { return {Unknot{}, Slope(Q(slope))}; }

// T_{l,1-l}; the unknot for l = 0, 1.
SurgeryVertex em2_terminal(std::int64_t l, bool minus_one) {
    Integer slope = Integer(l) * (1 - l) - (minus_one ? 1 : 0);
    if (l == 0 || l == 1) return unknot_at(slope);
    return {TorusKnot{l, 1 - l}, Slope(Q(slope))};
}

void push(NetworkPath& path, TwistMove move, SurgeryVertex vertex, const std::optional<SurgeryVertex>& terminal) {
    if (terminal)
        path.steps.push_back({std::move(move), *terminal, std::move(vertex)});
    else
        path.steps.push_back({std::move(move), std::move(vertex), std::nullopt});
}

std::string escape_dot(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

void check_range(const char* name, const IntRange& r) {
    if (r.lo > r.hi) {
        std::ostringstream os;
        os << "export_graph: empty range for " << name << " (" << r.lo << ":" << r.hi << ")";
        throw PreconditionError(os.str());
    }
}

std::vector<bool> variants(SlopeVariant v) {
    switch (v) {
    case SlopeVariant::Gamma: return {false};
    case SlopeVariant::GammaMinusOne: return {true};
    case SlopeVariant::Both: return {false, true};
    }
    return {false};
}

// Vertices keyed by id, merged when a path identifies two of them.
class GraphBuilder {
public:
    void add_path(const NetworkPath& path) {
        std::string prev = add(path.start);
        if (path.start_identified_with) merge(prev, add(*path.start_identified_with));
        for (const auto& step : path.steps) {
            std::string id = add(step.vertex);
            if (step.identified_with) merge(id, add(*step.identified_with));
            edges_.push_back({prev, id, step.move.str()});
            prev = id;
        }
    }

    void add_vertex(const SurgeryVertex& v) { add(v); }

    NetworkGraph finish() {
        // Meridian edges between unknot surgeries one apart.
        for (const auto& [id, v] : vertices_) {
            if (!std::holds_alternative<Unknot>(v.knot) || v.slope.is_symbolic()) continue;
            SurgeryVertex below = unknot_at(v.slope.value().numerator() - 1);
            if (vertices_.count(below.id())) edges_.push_back({id, below.id(), seiferter("mu", -1).str()});
        }

        std::map<std::string, std::vector<std::string>> groups;
        for (const auto& [id, v] : vertices_) groups[find(id)].push_back(id);

        std::map<std::string, std::string> rep;
        NetworkGraph g;
        for (auto& [root, members] : groups) {
            auto basic = std::find_if(members.begin(), members.end(),
                                      [&](const std::string& m) { return is_basic(vertices_.at(m).knot); });
            std::string chosen = basic != members.end() ? *basic : members.front();  // members are sorted
            GraphNode node;
            node.id = chosen;
            for (const auto& m : members) {
                rep[m] = chosen;
                if (m != chosen) node.aliases.push_back(m);
            }
            const SurgeryVertex& v = vertices_.at(chosen);
            node.knot = to_string(v.knot);
            node.slope = v.slope.json_str();
            g.nodes.push_back(std::move(node));
        }
        std::sort(g.nodes.begin(), g.nodes.end(), [](const auto& a, const auto& b) { return a.id < b.id; });

        std::set<GraphEdge> edges;
        for (const auto& e : edges_) {
            GraphEdge mapped{rep.at(e.from), rep.at(e.to), e.move};
            if (mapped.from != mapped.to) edges.insert(std::move(mapped));
        }
        g.edges.assign(edges.begin(), edges.end());
        return g;
    }

private:
    std::string add(const SurgeryVertex& v) {
        std::string id = v.id();
        if (!vertices_.count(id)) {
            vertices_.emplace(id, v);
            parent_[id] = id;
        }
        return id;
    }

    std::string find(const std::string& id) {
        std::string root = id;
        while (parent_.at(root) != root) root = parent_.at(root);
        parent_[id] = root;
        return root;
    }

    void merge(const std::string& a, const std::string& b) {
        std::string ra = find(a), rb = find(b);
        if (ra != rb) parent_[std::max(ra, rb)] = std::min(ra, rb);
    }

    std::map<std::string, SurgeryVertex> vertices_;
    std::map<std::string, std::string> parent_;
    std::vector<GraphEdge> edges_;
};

} // namespace

std::string TwistMove::str() const { return "(" + name + ", " + count.str() + ")"; }

const SurgeryVertex& NetworkPath::terminal() const {
    if (steps.empty()) return start_identified_with ? *start_identified_with : start;
    return steps.back().vertex;
}

NetworkPath em1_path(std::int64_t l, std::int64_t n, std::int64_t p, bool minus_one) {
    NetworkPath path{em1_vertex(l, n, p, minus_one).vertex, std::nullopt, {}};
    SurgeryVertex hub = em1_vertex(l, 0, 0, minus_one).vertex;
    SurgeryVertex unknot = unknot_at(minus_one ? -1 : 0);
    // K(0, 0, 0) is the trivial knot; no annular move is needed.
    std::optional<SurgeryVertex> hub_is_unknot;
    if (l == 0) hub_is_unknot = unknot;

    if (n != 0)
        push(path, seiferter("c_a", n), hub, hub_is_unknot);
    else if (p != 0)
        push(path, seiferter("c_b", p), hub, hub_is_unknot);
    else if (l == 0)
        path.start_identified_with = unknot;

    if (l != 0) path.steps.push_back({{MoveKind::AnnularPair, "cc_cd", -l}, unknot, std::nullopt});
    return path;
}

NetworkPath em2_path(std::int64_t l, std::int64_t m, std::int64_t n, std::int64_t p, bool minus_one) {
    if (m < 1) {
        std::ostringstream os;
        os << "em2_path: the stair construction needs m >= 1, got m=" << m;
        throw PreconditionError(os.str());
    }
    NetworkPath path{em2_vertex(l, m, n, p, minus_one).vertex, std::nullopt, {}};
    SurgeryVertex terminal = em2_terminal(l, minus_one);
    auto at = [&](std::int64_t mm) -> std::optional<SurgeryVertex> {
        if (mm == 1) return terminal;
        return std::nullopt;
    };

    if (n != 0)
        push(path, seiferter("c_a", n), em2_vertex(l, m, 0, 0, minus_one).vertex, at(m));
    else if (p != 0)
        push(path, seiferter("c_b", p), em2_vertex(l, m, 0, 0, minus_one).vertex, at(m));
    else if (m == 1)
        path.start_identified_with = terminal;

    for (std::int64_t k = m; k >= 2; --k) {
        path.steps.push_back({seiferter("c_b", -1), em2_vertex(l, k, 0, 1, minus_one).vertex,
                              em2_vertex(l, k - 1, 1, 0, minus_one).vertex});
        push(path, seiferter("c_a", 1), em2_vertex(l, k - 1, 0, 0, minus_one).vertex, at(k - 1));
    }
    return path;
}

Em3HopfPair em3_hopf_pair(const ExtendedRational& a1, const ExtendedRational& a2, const ExtendedRational& a3) {
    auto t = em3_trivializable(a1, a2, a3);
    if (!t) em3_vertex(a1, a2, a3);  // throws with the precondition
    if (t->which == Em3Case::I) {
        Integer n = t->parameter;
        Q first = Q(Integer(-a1.numerator()), Integer(a1.denominator() + (n - 1) * a1.numerator())) - Q(1);
        return {'a', 'b', {first, -a2 - Q(1)}};
    }
    Q second = a3.reciprocal() + Q(t->parameter);
    if (t->swapped) return {'a', 'c', {-a1, second}};
    return {'b', 'c', {-a2, second}};
}

NetworkPath em3_path(const ExtendedRational& a1, const ExtendedRational& a2, const ExtendedRational& a3) {
    SurgeryVertex top = em3_vertex(a1, a2, a3).vertex;
    Em3Trivialization t = *em3_trivializable(a1, a2, a3);
    Em3HopfPair pair = em3_hopf_pair(a1, a2, a3);

    SurgeryVertex base;
    if (t.which == Em3Case::I) {
        base = em2_terminal(t.parameter, true);  // (T_{n,1-n}, n(1-n) - 1)
    } else {
        base = unknot_at(Integer(t.parameter) - 1);
    }

    NetworkPath path{top, std::nullopt, {}};
    HopfPairState state = pair.state;
    if (state.is_trivial()) path.start_identified_with = base;
    for (const auto& step : decompose(pair.state).steps) {
        if (step.count == 0) continue;  // b is already ∞
        state = apply(state, step);
        TwistMove move{MoveKind::HopfPair, std::string(1, step.component == HopfComponent::A ? pair.first : pair.second),
                       step.count};
        if (state.is_trivial())
            path.steps.push_back({std::move(move), base, std::nullopt});
        else
            path.steps.push_back(
                {std::move(move), {HopfStageKnot{pair.first, pair.second, state}, Slope::symbol("unknown")}, std::nullopt});
    }
    return path;
}

std::string to_string(Family family) {
    switch (family) {
    case Family::EM1: return "EM1";
    case Family::EM2: return "EM2";
    case Family::EM3: return "EM3";
    case Family::Torus: return "Torus";
    }
    return "?";
}

NetworkGraph export_graph(const GraphRequest& r) {
    GraphBuilder builder;
    std::size_t count = 0;
    switch (r.family) {
    case Family::EM1:
        check_range("l", r.l), check_range("n", r.n), check_range("p", r.p);
        for (bool mo : variants(r.variant))
            for (auto l = r.l.lo; l <= r.l.hi; ++l)
                for (auto n = r.n.lo; n <= r.n.hi; ++n)
                    for (auto p = r.p.lo; p <= r.p.hi; ++p)
                        if (n == 0 || p == 0) builder.add_path(em1_path(l, n, p, mo)), ++count;
        break;
    case Family::EM2:
        check_range("l", r.l), check_range("m", r.m), check_range("n", r.n), check_range("p", r.p);
        for (bool mo : variants(r.variant))
            for (auto l = r.l.lo; l <= r.l.hi; ++l)
                for (auto m = std::max<std::int64_t>(r.m.lo, 1); m <= r.m.hi; ++m)
                    for (auto n = r.n.lo; n <= r.n.hi; ++n)
                        for (auto p = r.p.lo; p <= r.p.hi; ++p)
                            if (n == 0 || p == 0) builder.add_path(em2_path(l, m, n, p, mo)), ++count;
        break;
    case Family::EM3:
        builder.add_path(em3_path(r.a1, r.a2, r.a3));
        ++count;
        break;
    case Family::Torus:
        check_range("p", r.p), check_range("q", r.q);
        for (auto p = r.p.lo; p <= r.p.hi; ++p)
            for (auto q = r.q.lo; q <= r.q.hi; ++q) {
                if (p == 0 || q == 0 || gcd(Integer(p), Integer(q)) != 1) continue;
                if ((p == 1 || p == -1) && (q == 1 || q == -1)) continue;
                builder.add_vertex(torus_reducible_surgery(p, q).vertex);
                ++count;
            }
        break;
    }
    if (count == 0)
        throw PreconditionError("export_graph: no parameter tuple in the ranges is a valid " + to_string(r.family) +
                                " vertex");
    return builder.finish();
}

std::string to_dot(const NetworkGraph& graph) {
    std::ostringstream os;
    os << "digraph network {\n";
    for (const auto& node : graph.nodes) {
        std::string label = escape_dot(node.id);
        for (const auto& a : node.aliases) label += "\\n= " + escape_dot(a);
        os << "  \"" << escape_dot(node.id) << "\" [label=\"" << label << "\"];\n";
    }
    for (const auto& e : graph.edges)
        os << "  \"" << escape_dot(e.from) << "\" -> \"" << escape_dot(e.to) << "\" [label=\"" << escape_dot(e.move)
           << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace ssn
