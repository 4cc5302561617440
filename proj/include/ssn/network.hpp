#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssn/families.hpp"
#include "ssn/twist.hpp"

namespace ssn {

enum class MoveKind { Seiferter, AnnularPair, HopfPair };

/// One network edge. `name` is the seiferter ("c_a", "c_b", "mu"), the
/// annular pair ("cc_cd") or the Hopf component twisted ("a", "b", "c").
struct TwistMove {
    MoveKind kind = MoveKind::Seiferter;
    std::string name;
    Integer count;

    /// "(c_a, 1)"
    std::string str() const;

    friend bool operator==(const TwistMove&, const TwistMove&) = default;
};

struct PathStep {
    TwistMove move;
    SurgeryVertex vertex;
    // The same surgery under another name (K(l,m,0,1) = K(l,m-1,1,0), or a
    // family vertex that is a torus knot / the unknot).
    std::optional<SurgeryVertex> identified_with;
};

struct NetworkPath {
    SurgeryVertex start;
    std::optional<SurgeryVertex> start_identified_with;
    std::vector<PathStep> steps;

    /// Last vertex, preferring a torus knot / unknot name when it has one.
    const SurgeryVertex& terminal() const;
};

/// (c_a, n) or (c_b, p) to K(l, 0, 0), then (cc_cd, -l) to the unknot.
NetworkPath em1_path(std::int64_t l, std::int64_t n, std::int64_t p, bool minus_one);

/// (c_a, n) or (c_b, p) to K(l, m, 0, 0), then m - 1 stair steps down to
/// K(l, 1, 0, 0) = T_{l, 1-l}. Requires m >= 1.
NetworkPath em2_path(std::int64_t l, std::int64_t m, std::int64_t n, std::int64_t p, bool minus_one);

/// Hopf-pair twists from (T_{n,1-n}, n(1-n) - 1) or (O, p - 1) to
/// (K(a1, a2, a3), gamma). Intermediate vertices are HopfStageKnot.
NetworkPath em3_path(const ExtendedRational& a1, const ExtendedRational& a2, const ExtendedRational& a3);

/// The Hopf pair and its components used by em3_path.
struct Em3HopfPair {
    char first;
    char second;
    HopfPairState state;
};

Em3HopfPair em3_hopf_pair(const ExtendedRational& a1, const ExtendedRational& a2, const ExtendedRational& a3);

enum class Family { EM1, EM2, EM3, Torus };

std::string to_string(Family family);

struct IntRange {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

enum class SlopeVariant { Gamma, GammaMinusOne, Both };

struct GraphRequest {
    Family family = Family::EM1;
    IntRange l, m{1, 1}, n, p, q;
    SlopeVariant variant = SlopeVariant::Gamma;
    ExtendedRational a1, a2, a3;  // EM3 only
};

struct GraphNode {
    std::string id;
    std::vector<std::string> aliases;  // other names of the same surgery
    std::string knot;
    std::string slope;  // "p/q" or a symbol
};

struct GraphEdge {
    std::string from;
    std::string to;
    std::string move;

    friend auto operator<=>(const GraphEdge&, const GraphEdge&) = default;
};

struct NetworkGraph {
    std::vector<GraphNode> nodes;  // sorted by id
    std::vector<GraphEdge> edges;  // sorted, no duplicates
};

/// Union of the constructive paths from every vertex in the ranges. Vertices
/// identified along a path share one node. Meridian edges (O, s) -> (O, s-1)
/// are added when both ends are present. Throws PreconditionError on an
/// empty range, or when no tuple in the ranges is a valid vertex.
NetworkGraph export_graph(const GraphRequest& request);

std::string to_dot(const NetworkGraph& graph);

} // namespace ssn
