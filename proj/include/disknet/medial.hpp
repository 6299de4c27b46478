#ifndef DISKNET_MEDIAL_HPP
#define DISKNET_MEDIAL_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "disknet/faces.hpp"
#include "disknet/network.hpp"

namespace disknet {

/// One medial strand: the straight-through walk of the medial graph. Steps
/// are corner ids (darts of the arc-augmented map; the corner of dart d
/// joins the midpoints of d's edge and sigma(d)'s edge). Open strands run
/// stub to stub; circles have no stubs.
struct Strand {
    std::vector<int> steps;        // corner ids in traversal order
    std::vector<bool> forward;     // per step: traversed first->second?
    std::vector<EdgeId> passes;    // edges crossed, in order (steps.size()-1)
    std::optional<int> stub_start; // 0-based clockwise stub index
    std::optional<int> stub_end;
    std::vector<EdgeId> self_intersections;  // edges whose midpoint is crossed twice

    bool is_circle() const { return !stub_start.has_value(); }
};

/// Medial graph of a network: one degree-4 vertex per edge midpoint plus 2n
/// degree-1 stubs on the circle; strands precomputed. The interior boundary
/// vertex of an rnpd is treated like an internal vertex here.
class MedialGraph {
public:
    explicit MedialGraph(const EmbeddedNetwork& source);

    const EmbeddedNetwork& net() const { return *net_; }
    const MapView& map() const { return *mv_; }
    int stub_count() const { return stub_count_; }
    const std::vector<Strand>& strands() const { return strands_; }

    /// Strand index owning each stub.
    int strand_at_stub(int stub) const { return stub_strand_.at(static_cast<std::size_t>(stub)); }

    /// Medial-face node ids for the side/containment machinery: one node per
    /// arc-augmented network face ("face node") plus one per network vertex
    /// ("vertex node"). The beyond-circle face is excluded from floods.
    int face_node(int face_orbit) const { return face_orbit; }
    int vertex_node(VertexId v) const;
    int node_count() const;
    int outer_node() const { return mv_->outer_face(); }
    /// The two nodes flanking a corner: (vertex side, face side).
    std::pair<int, int> corner_sides(int corner) const;
    /// Left and right nodes of a directed corner traversal.
    std::pair<int, int> left_right(int corner, bool forward) const;

    /// Connected components of medial faces with the given corners removed;
    /// returns a component id per node, -1 for the beyond-circle node.
    std::vector<int> components(const std::vector<int>& barrier_corners) const;

private:
    std::shared_ptr<const EmbeddedNetwork> net_;
    std::shared_ptr<const MapView> mv_;
    int stub_count_ = 0;
    std::vector<Strand> strands_;
    std::vector<int> stub_strand_;
    std::vector<VertexId> vertex_ids_;  // dense vertex numbering for nodes
    std::map<VertexId, int> vertex_pos_;

    void trace_strands();
};

MedialGraph medial_graph(const EmbeddedNetwork& net);

struct ZEntry {
    int strand = 0;  // 1-based strand number
    int sign = 0;    // +1 / -1 for rnpds, 0 for cprns
    bool bar = false;

    friend bool operator==(const ZEntry& a, const ZEntry& b) {
        return a.strand == b.strand && a.sign == b.sign && a.bar == b.bar;
    }
};

struct ZSequence {
    std::vector<ZEntry> entries;

    std::string str() const;
    friend bool operator==(const ZSequence& a, const ZSequence& b) {
        return a.entries == b.entries;
    }
};

/// z-sequence read clockwise from t_1; `rotate_start` shifts which stub
/// plays t_1. For rnpds entries carry orientation signs and bars on
/// self-intersecting strands; for cprns both are omitted.
ZSequence z_sequence(const EmbeddedNetwork& net, int rotate_start = 0);

bool z_equal_up_to_rotation(const EmbeddedNetwork& a, const EmbeddedNetwork& b);

enum class RegionKind { Lens, Loop, Circle };

struct Region {
    RegionKind kind;
    int strand_a = -1;
    int strand_b = -1;              // lens only
    std::vector<EdgeId> pivots;     // crossing midpoints bounding the region
    std::vector<int> boundary;      // corner ids of the bounding curve
    bool contains_interior_boundary = false;
};

struct RegionReport {
    std::vector<Region> lenses;
    std::vector<Region> loops;
    std::vector<Region> circles;
};

RegionReport detect_regions(const MedialGraph& mg);

struct IrreducibilityReport {
    bool pass = false;
    char violated = 0;  // 'a', 'b' or 'c' when failing
    std::string detail;
};

/// The three mutually necessary-and-sufficient medial conditions for an rnpd
/// to admit no reduction by the local moves: (a) no medial circles, (b) at
/// most one self-intersecting strand, intersecting itself once with its loop
/// around the interior boundary vertex, (c) pairwise at most two crossings
/// with every lens around the interior boundary vertex.
IrreducibilityReport check_irreducible(const EmbeddedNetwork& net);

/// Applies the medial motion on the triangle formed by the three given edge
/// midpoints: the network-level Y-Delta move at the matching site.
EmbeddedNetwork apply_motion(const EmbeddedNetwork& net, const std::vector<EdgeId>& triangle);

/// All triangles on which a motion currently applies.
std::vector<std::vector<EdgeId>> motion_sites(const EmbeddedNetwork& net);

struct YDeltaSearchResult {
    enum class Status { Found, NotEquivalent, Inconclusive } status;
    std::vector<std::vector<EdgeId>> path;  // motions applied to `from`
    int explored = 0;
};

/// Bounded breadth-first search for a motion path between two graphs
/// (conductances ignored). Depth-limited; exhausting the reachable set
/// proves inequivalence, hitting the limit is inconclusive.
YDeltaSearchResult find_ydelta_path(const EmbeddedNetwork& from, const EmbeddedNetwork& to,
                                    int max_depth, int max_states = 20000);

/// Canonical key of the embedded graph rooted at the circle (conductances
/// optional): equal keys = same rooted embedding.
std::string canonical_key(const EmbeddedNetwork& net, bool with_conductances);

/// Stubs strictly between a strand's endpoints on the side away from the
/// given face (the face sits to the strand's right when walking start->end).
int stubs_on_far_side(const MedialGraph& mg, const Strand& strand, int face_orbit);

std::string medial_to_dot(const MedialGraph& mg);

}  // namespace disknet

#endif
