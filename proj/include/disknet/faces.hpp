#ifndef DISKNET_FACES_HPP
#define DISKNET_FACES_HPP

#include <cstddef>
#include <vector>

#include "disknet/network.hpp"

namespace disknet {

/// Flattened combinatorial map over a network's darts, optionally augmented
/// with the disk-boundary arcs between consecutive boundary vertices.
///
/// Real darts come first (two per edge); with arcs, each boundary-order
/// position j contributes a_next(j) (the arc toward the next clockwise
/// boundary vertex) and a_prev(j). Faces are orbits of d -> sigma(alpha(d));
/// with clockwise rotations each face lies to the LEFT of its darts, so
/// inner faces of a disk embedding trace counterclockwise.
class MapView {
public:
    MapView(const EmbeddedNetwork& net, bool with_arcs);

    int dart_count() const { return static_cast<int>(vertex_of_.size()); }
    int real_dart_count() const { return real_count_; }
    bool is_arc(int d) const { return d >= real_count_; }

    int dart_index(const Dart& d) const;      // real darts only
    Dart dart_at(int idx) const;               // real darts only
    int arc_next(std::size_t boundary_pos) const;
    int arc_prev(std::size_t boundary_pos) const;

    VertexId vertex_of(int d) const { return vertex_of_[d]; }
    int alpha(int d) const { return alpha_[d]; }
    int sigma(int d) const { return sigma_[d]; }
    int sigma_inv(int d) const { return sigma_inv_[d]; }
    int face_next(int d) const { return sigma_[alpha_[d]]; }

    /// Orbit id per dart under face_next, plus the orbit lists.
    const std::vector<int>& face_of() const { return face_of_; }
    const std::vector<std::vector<int>>& faces() const { return faces_; }
    /// Index of the beyond-circle face (arc-augmented maps with >=1 boundary
    /// vertex only; -1 otherwise).
    int outer_face() const { return outer_face_; }

    const EmbeddedNetwork& net() const { return *net_; }

private:
    const EmbeddedNetwork* net_;
    int real_count_ = 0;
    std::vector<VertexId> vertex_of_;
    std::vector<int> alpha_, sigma_, sigma_inv_;
    std::vector<int> face_of_;
    std::vector<std::vector<int>> faces_;
    int outer_face_ = -1;
    std::map<VertexId, int> boundary_pos_;
    std::map<EdgeId, int> edge_pos_;
    std::vector<EdgeId> edge_by_pos_;
};

struct FaceCorner {
    VertexId vertex = -1;
    Dart in;   // dart arriving at vertex (its end sits in vertex's rotation)
    Dart out;  // next dart clockwise; the face continues along its edge
};

struct Face {
    std::vector<FaceCorner> corners;
    bool is_outer = false;
};

/// All faces of the abstract rotation-system map (no disk arcs). Throws
/// EmbeddingInconsistent when the trace contradicts a genus-zero embedding.
std::vector<Face> trace_faces(const EmbeddedNetwork& net);

/// Face lookup helper: index into trace_faces(net) of the inner face whose
/// corner vertex set equals `vertex_set` exactly, if unique.
int find_inner_face(const std::vector<Face>& faces, const std::vector<VertexId>& vertex_set);

/// Inserts a new interior boundary vertex inside the given inner face and
/// connects it to the listed face vertices (which must be corners of that
/// face, in face order). The input must be a cprn.
EmbeddedNetwork insert_star(const EmbeddedNetwork& net, const Face& face,
                            const std::vector<VertexId>& attach);

}  // namespace disknet

#endif
