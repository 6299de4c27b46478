#ifndef DISKNET_NETWORK_HPP
#define DISKNET_NETWORK_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "disknet/errors.hpp"
#include "disknet/rational.hpp"

namespace disknet {

using VertexId = int;
using EdgeId = int;

enum class VertexKind { Boundary, InteriorBoundary, Internal };

/// One end of an edge. End 0 lives at the edge's u endpoint, end 1 at v;
/// a self-loop has both ends in the same vertex's rotation.
struct Dart {
    EdgeId edge = -1;
    int end = 0;

    friend bool operator==(const Dart& a, const Dart& b) {
        return a.edge == b.edge && a.end == b.end;
    }
    friend bool operator!=(const Dart& a, const Dart& b) { return !(a == b); }
    friend bool operator<(const Dart& a, const Dart& b) {
        return a.edge != b.edge ? a.edge < b.edge : a.end < b.end;
    }
};

/// Planar-embedded resistor network in a disk.
///
/// The embedding is purely combinatorial: a clockwise rotation of edge-ends
/// per vertex plus the clockwise cyclic order of the on-circle boundary
/// vertices. For a vertex in boundary_order the rotation list is anchored,
/// not cyclic: the disk boundary arc toward the next clockwise boundary
/// vertex sits conceptually just before entry 0, and the arc toward the
/// previous one just after the last entry.
///
/// Values are immutable in use: all edit operations copy. The mutating
/// methods below exist to build networks and to implement the edit
/// operations; validate() checks the result.
class EmbeddedNetwork {
public:
    struct VertexData {
        VertexKind kind = VertexKind::Internal;
        std::vector<Dart> rotation;
    };
    struct EdgeData {
        VertexId u = -1, v = -1;
        Rational conductance = Rational(1);
    };

    EmbeddedNetwork() = default;

    VertexId add_vertex(VertexKind kind);
    VertexId add_vertex(VertexKind kind, VertexId id);
    /// Adds an edge without placing its darts; callers position them via
    /// set_rotation / insert_dart.
    EdgeId add_edge(VertexId u, VertexId v, Rational conductance);
    EdgeId add_edge(VertexId u, VertexId v, Rational conductance, EdgeId id);

    void set_rotation(VertexId v, std::vector<Dart> rotation);
    void insert_dart(VertexId v, std::size_t pos, Dart d);
    void remove_dart(VertexId v, Dart d);
    /// Moves one end of an edge to another vertex at the given rotation
    /// position of the destination. The dart is removed from the old vertex.
    void move_dart(EdgeId e, int end, VertexId to, std::size_t pos);
    void set_conductance(EdgeId e, const Rational& c);
    /// Rewrites one endpoint of an edge without touching any rotation list;
    /// callers keep the rotations in sync themselves.
    void set_endpoint(EdgeId e, int end, VertexId v);
    void set_kind(VertexId v, VertexKind kind);
    void set_boundary_order(std::vector<VertexId> order);
    void set_interior_boundary(std::optional<VertexId> b);
    /// Removes an edge and its darts.
    void erase_edge(EdgeId e);
    /// Removes an edge record only; its darts must already be gone from all
    /// rotation lists.
    void erase_edge_record(EdgeId e);
    /// Removes an isolated vertex.
    void erase_vertex(VertexId v);

    bool has_vertex(VertexId v) const { return verts_.count(v) != 0; }
    bool has_edge(EdgeId e) const { return edges_.count(e) != 0; }
    const std::map<VertexId, VertexData>& vertices() const { return verts_; }
    const std::map<EdgeId, EdgeData>& edges() const { return edges_; }
    const VertexData& vertex(VertexId v) const;
    const EdgeData& edge(EdgeId e) const;
    VertexKind kind(VertexId v) const { return vertex(v).kind; }
    const std::vector<Dart>& rotation(VertexId v) const { return vertex(v).rotation; }
    std::size_t degree(VertexId v) const { return vertex(v).rotation.size(); }
    const std::vector<VertexId>& boundary_order() const { return boundary_order_; }
    std::optional<VertexId> interior_boundary() const { return interior_boundary_; }

    bool is_rnpd() const { return interior_boundary_.has_value(); }
    bool is_boundary_kind(VertexId v) const {
        return kind(v) != VertexKind::Internal;
    }

    VertexId dart_vertex(const Dart& d) const;  // endpoint holding this dart end
    VertexId endpoint(EdgeId e, int end) const;
    VertexId other_endpoint(EdgeId e, VertexId v) const;
    bool is_self_loop(EdgeId e) const;

    std::size_t vertex_count() const { return verts_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    /// Boundary vertices in response-matrix row order: boundary_order first,
    /// then the interior boundary vertex when present.
    std::vector<VertexId> boundary_ids() const;
    std::size_t boundary_count() const {
        return boundary_order_.size() + (interior_boundary_ ? 1 : 0);
    }

    VertexId next_vertex_id() const { return next_vertex_id_; }
    EdgeId next_edge_id() const { return next_edge_id_; }

    bool connected() const;

    /// Structural well-formedness: id references, positive conductances,
    /// rotation lists matching incident edge-ends, boundary bookkeeping.
    void validate_basic() const;
    /// Full disk-embedding invariants: basic checks plus connectivity and a
    /// genus-zero trace of the arc-augmented map (the combinatorial form of
    /// "planar in the disk, boundary on the circle in boundary_order").
    void validate() const;

    /// Renumbers vertex and edge ids densely (0..n-1) preserving order.
    EmbeddedNetwork compacted() const;

    friend bool operator==(const EmbeddedNetwork& a, const EmbeddedNetwork& b);

private:
    std::map<VertexId, VertexData> verts_;
    std::map<EdgeId, EdgeData> edges_;
    std::vector<VertexId> boundary_order_;
    std::optional<VertexId> interior_boundary_;
    VertexId next_vertex_id_ = 0;
    EdgeId next_edge_id_ = 0;
};

enum class EdgeClass { BoundaryEdge, BoundarySpike, PseudoBoundaryEdge, BoundaryPseudoSpike, Plain };

const char* edge_class_name(EdgeClass c);

// ---- netcore edit operations (pure: return new values) ----

/// Deletes an edge; the network must stay connected.
EmbeddedNetwork delete_edge(const EmbeddedNetwork& net, EdgeId e);

/// Contracts a non-loop edge, merging its endpoints. At most one endpoint
/// may be a boundary-kind vertex; that endpoint's id and kind survive.
EmbeddedNetwork contract_edge(const EmbeddedNetwork& net, EdgeId e);

/// Strong restriction to V': edges with both endpoints in V'. Vertices of V'
/// adjacent (in the original) to a vertex outside V' become boundary.
EmbeddedNetwork restrict_strong(const EmbeddedNetwork& net, const std::vector<VertexId>& vs);

/// Weak restriction to V': edges with at least one endpoint in V'; absorbed
/// neighbors outside V' become boundary.
EmbeddedNetwork restrict_weak(const EmbeddedNetwork& net, const std::vector<VertexId>& vs);

std::map<EdgeId, EdgeClass> classify_edges(const EmbeddedNetwork& net);

// Reverse directions of the one-way reductions. Positions index the vertex's
// current rotation (insert-before semantics; pos == degree appends).
EmbeddedNetwork insert_loop(const EmbeddedNetwork& net, VertexId v, std::size_t pos,
                            const Rational& c);
EmbeddedNetwork insert_pendant(const EmbeddedNetwork& net, VertexId v, std::size_t pos,
                               const Rational& c);
/// Splits edge e into a series pair a,b; requires ab/(a+b) == c(e) exactly.
EmbeddedNetwork split_edge(const EmbeddedNetwork& net, EdgeId e, const Rational& a,
                           const Rational& b);
/// Splits edge e into a parallel pair a,b; requires a+b == c(e) exactly.
EmbeddedNetwork split_parallel(const EmbeddedNetwork& net, EdgeId e, const Rational& a,
                               const Rational& b);

}  // namespace disknet

#endif
