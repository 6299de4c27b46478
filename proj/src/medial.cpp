#include "disknet/medial.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "disknet/moves.hpp"

namespace disknet {

namespace {

// Directed strand state: the corner of dart `d` (joining the midpoints of
// edge(d) and edge(sigma(d))), traversed first->second when forward.
struct StrandStep {
    int d;
    bool forward;

    friend bool operator<(const StrandStep& a, const StrandStep& b) {
        return a.d != b.d ? a.d < b.d : a.forward < b.forward;
    }
    friend bool operator==(const StrandStep& a, const StrandStep& b) {
        return a.d == b.d && a.forward == b.forward;
    }
};

struct Advance {
    bool ended;
    int stub = -1;        // 0-based clockwise stub index when ended
    int terminal = -1;    // the stub-edge corner when ended
    StrandStep next{};    // when not ended
    EdgeId crossed = -1;  // midpoint crossed by this advance
};

}  // namespace

MedialGraph::MedialGraph(const EmbeddedNetwork& source)
    : net_(std::make_shared<EmbeddedNetwork>(source)) {
    mv_ = std::make_shared<MapView>(*net_, /*with_arcs=*/true);
    stub_count_ = 2 * static_cast<int>(net_->boundary_order().size());
    int i = 0;
    for (const auto& [vid, vd] : net_->vertices()) {
        (void)vd;
        vertex_ids_.push_back(vid);
        vertex_pos_[vid] = i++;
    }
    trace_strands();
}

int MedialGraph::vertex_node(VertexId v) const {
    return static_cast<int>(mv_->faces().size()) + vertex_pos_.at(v);
}

int MedialGraph::node_count() const {
    return static_cast<int>(mv_->faces().size()) + static_cast<int>(vertex_ids_.size());
}

std::pair<int, int> MedialGraph::corner_sides(int corner) const {
    return {vertex_node(mv_->vertex_of(corner)), face_node(mv_->face_of()[mv_->sigma(corner)])};
}

std::pair<int, int> MedialGraph::left_right(int corner, bool forward) const {
    auto [vside, fside] = corner_sides(corner);
    // forward runs clockwise around the corner's vertex: vertex on the right
    if (forward) return {fside, vside};
    return {vside, fside};
}

std::vector<int> MedialGraph::components(const std::vector<int>& barrier_corners) const {
    std::set<int> barrier(barrier_corners.begin(), barrier_corners.end());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(node_count()));
    for (int d = 0; d < mv_->dart_count(); ++d) {
        if (barrier.count(d)) continue;
        int fside = face_node(mv_->face_of()[mv_->sigma(d)]);
        if (fside == outer_node()) continue;
        int vside = vertex_node(mv_->vertex_of(d));
        adj[static_cast<std::size_t>(vside)].push_back(fside);
        adj[static_cast<std::size_t>(fside)].push_back(vside);
    }
    std::vector<int> comp(static_cast<std::size_t>(node_count()), -1);
    int c = 0;
    for (int start = 0; start < node_count(); ++start) {
        if (start == outer_node() || comp[static_cast<std::size_t>(start)] != -1) continue;
        std::vector<int> stack{start};
        comp[static_cast<std::size_t>(start)] = c;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[static_cast<std::size_t>(x)])
                if (comp[static_cast<std::size_t>(y)] == -1) {
                    comp[static_cast<std::size_t>(y)] = c;
                    stack.push_back(y);
                }
        }
        ++c;
    }
    return comp;
}

namespace {

// stub s (0-based clockwise from t_1): s = 2p is the stub just
// counterclockwise of boundary position p, s = 2p+1 the one just clockwise.
int odd_stub_corner(const MapView& mv, const EmbeddedNetwork& net, int p) {
    VertexId v = net.boundary_order()[static_cast<std::size_t>(p)];
    (void)v;
    return mv.sigma_inv(mv.arc_prev(static_cast<std::size_t>(p)));  // last real dart
}

Advance advance(const MapView& mv, const EmbeddedNetwork& net, StrandStep s) {
    Advance out{};
    if (s.forward) {
        int t = mv.sigma(s.d);
        out.crossed = mv.dart_at(t).edge;
        int t2 = mv.alpha(t);
        int nd = mv.sigma_inv(t2);
        if (mv.is_arc(nd)) {
            // fell onto the even stub just clockwise of this vertex
            out.ended = true;
            out.terminal = nd;
            VertexId w = mv.vertex_of(t2);
            int p = -1;
            const auto& order = net.boundary_order();
            for (std::size_t j = 0; j < order.size(); ++j)
                if (order[j] == w && mv.arc_next(j) == nd) p = static_cast<int>(j);
            out.stub = 2 * p + 1;
            return out;
        }
        out.next = StrandStep{nd, false};
        return out;
    }
    out.crossed = mv.dart_at(s.d).edge;
    int d2 = mv.alpha(s.d);
    if (mv.is_arc(mv.sigma(d2))) {
        out.ended = true;
        out.terminal = d2;
        VertexId u = mv.vertex_of(d2);
        int p = -1;
        const auto& order = net.boundary_order();
        for (std::size_t j = 0; j < order.size(); ++j)
            if (order[j] == u && mv.arc_prev(j) == mv.sigma(d2)) p = static_cast<int>(j);
        out.stub = 2 * p;
        return out;
    }
    out.next = StrandStep{d2, true};
    return out;
}

}  // namespace

void MedialGraph::trace_strands() {
    stub_strand_.assign(static_cast<std::size_t>(stub_count_), -1);
    if (net_->edges().empty()) return;
    const MapView& mv = *mv_;
    std::set<StrandStep> seen;

    auto run = [&](StrandStep start, std::optional<int> from_stub) {
        Strand s;
        s.stub_start = from_stub;
        StrandStep cur = start;
        while (true) {
            seen.insert(cur);
            s.steps.push_back(cur.d);
            s.forward.push_back(cur.forward);
            Advance a = advance(mv, *net_, cur);
            s.passes.push_back(a.crossed);
            if (a.ended) {
                s.steps.push_back(a.terminal);
                s.forward.push_back(!from_stub.has_value() ? true : true);
                s.stub_end = a.stub;
                break;
            }
            if (!from_stub.has_value() && a.next == start) break;  // circle closed
            cur = a.next;
        }
        std::map<EdgeId, int> count;
        for (EdgeId e : s.passes) ++count[e];
        for (auto& [e, k] : count)
            if (k >= 2) s.self_intersections.push_back(e);
        return s;
    };

    const int n = stub_count_ / 2;
    for (int stub = 0; stub < stub_count_; ++stub) {
        if (stub_strand_[static_cast<std::size_t>(stub)] != -1) continue;
        int p = stub / 2;
        StrandStep start{};
        if (stub % 2 == 0)
            start = StrandStep{odd_stub_corner(mv, *net_, p), false};
        else
            start = StrandStep{mv.arc_next(static_cast<std::size_t>(p)), true};
        Strand s = run(start, stub);
        int id = static_cast<int>(strands_.size());
        stub_strand_[static_cast<std::size_t>(stub)] = id;
        stub_strand_[static_cast<std::size_t>(*s.stub_end)] = id;
        strands_.push_back(std::move(s));
    }
    (void)n;

    // closed strands: whatever corner states remain untouched
    for (int d = 0; d < mv.real_dart_count(); ++d) {
        if (mv.is_arc(mv.sigma(d))) continue;
        StrandStep fwd{d, true};
        if (seen.count(fwd) || seen.count(StrandStep{d, false})) continue;
        Strand s = run(fwd, std::nullopt);
        strands_.push_back(std::move(s));
    }
}

MedialGraph medial_graph(const EmbeddedNetwork& net) { return MedialGraph(net); }

namespace {

// terminal stub-edge corners are the strand's first/last steps; a strand's
// crossing list sits between consecutive steps
struct LoopSlice {
    std::vector<int> corners;
    std::vector<bool> forward;
};

LoopSlice loop_slice(const Strand& s, EdgeId pivot) {
    std::vector<std::size_t> at;
    for (std::size_t i = 0; i < s.passes.size(); ++i)
        if (s.passes[i] == pivot) at.push_back(i);
    LoopSlice out;
    if (at.size() < 2) return out;
    // crossing i sits between steps i and i+1
    for (std::size_t k = at[0] + 1; k <= at[1]; ++k) {
        out.corners.push_back(s.steps[k]);
        out.forward.push_back(s.forward[k]);
    }
    return out;
}

struct SideProbe {
    bool touches_left = false;
    bool touches_right = false;
};

SideProbe probe_sides(const MedialGraph& mg, const std::vector<int>& corners,
                      const std::vector<bool>& forward, const std::vector<int>& comp,
                      int target_comp) {
    SideProbe p;
    for (std::size_t i = 0; i < corners.size(); ++i) {
        auto [l, r] = mg.left_right(corners[i], forward[i]);
        if (comp[static_cast<std::size_t>(l)] == target_comp) p.touches_left = true;
        if (comp[static_cast<std::size_t>(r)] == target_comp) p.touches_right = true;
    }
    return p;
}

// component holding the disk collar (faces next to the circle)
int collar_component(const MedialGraph& mg, const std::vector<int>& comp) {
    const MapView& mv = mg.map();
    for (int d = mv.real_dart_count(); d < mv.dart_count(); ++d) {
        int f = mv.face_of()[d];
        if (f == mv.outer_face()) continue;
        int node = mg.face_node(f);
        if (comp[static_cast<std::size_t>(node)] != -1) return comp[static_cast<std::size_t>(node)];
    }
    return -1;
}

}  // namespace

ZSequence z_sequence(const EmbeddedNetwork& net, int rotate_start) {
    MedialGraph mg(net);
    const int n2 = mg.stub_count();
    ZSequence z;
    if (n2 == 0 || net.edges().empty()) return z;
    const int n = n2 / 2;
    int shift = ((rotate_start % n) + n) % n * 2;

    std::vector<int> number(mg.strands().size(), 0);
    int next = 1;
    std::vector<int> stub_of(static_cast<std::size_t>(n2));
    for (int s = 0; s < n2; ++s) stub_of[static_cast<std::size_t>(s)] = (s + shift) % n2;
    for (int s = 0; s < n2; ++s) {
        int strand = mg.strand_at_stub(stub_of[static_cast<std::size_t>(s)]);
        if (number[static_cast<std::size_t>(strand)] == 0)
            number[static_cast<std::size_t>(strand)] = next++;
    }

    // orientation signs for rnpds: the strand runs from s^- to s^+ clockwise
    // around the interior boundary vertex, i.e. with it on the right
    std::vector<int> start_sign(mg.strands().size(), 0);
    if (net.is_rnpd()) {
        VertexId b = *net.interior_boundary();
        for (std::size_t si = 0; si < mg.strands().size(); ++si) {
            const Strand& s = mg.strands()[si];
            if (s.is_circle()) continue;
            if (s.self_intersections.empty()) {
                auto comp = mg.components(s.steps);
                int cb = comp[static_cast<std::size_t>(mg.vertex_node(b))];
                SideProbe p = probe_sides(mg, s.steps, s.forward, comp, cb);
                if (p.touches_right == p.touches_left)
                    fail(Err::AmbiguousOrientation,
                         "strand does not separate the interior boundary vertex cleanly");
                start_sign[si] = p.touches_right ? -1 : +1;
            } else {
                int vote = 0;
                for (EdgeId pivot : s.self_intersections) {
                    LoopSlice loop = loop_slice(s, pivot);
                    if (loop.corners.empty()) continue;
                    auto comp = mg.components(loop.corners);
                    int collar = collar_component(mg, comp);
                    int cb = comp[static_cast<std::size_t>(mg.vertex_node(b))];
                    if (cb == collar) continue;  // this loop does not enclose b
                    SideProbe p = probe_sides(mg, loop.corners, loop.forward, comp, cb);
                    if (p.touches_left == p.touches_right) continue;
                    int v = p.touches_right ? -1 : +1;
                    if (vote != 0 && vote != v)
                        fail(Err::AmbiguousOrientation, "self-intersection loops disagree");
                    vote = v;
                }
                if (vote == 0)
                    fail(Err::AmbiguousOrientation,
                         "no self-intersection loop encloses the interior boundary vertex");
                start_sign[si] = vote;
            }
        }
    }

    for (int s = 0; s < n2; ++s) {
        int raw = stub_of[static_cast<std::size_t>(s)];
        int si = mg.strand_at_stub(raw);
        const Strand& st = mg.strands()[static_cast<std::size_t>(si)];
        ZEntry e;
        e.strand = number[static_cast<std::size_t>(si)];
        if (net.is_rnpd()) {
            e.bar = !st.self_intersections.empty();
            e.sign = (st.stub_start == raw) ? start_sign[static_cast<std::size_t>(si)]
                                            : -start_sign[static_cast<std::size_t>(si)];
        }
        z.entries.push_back(e);
    }
    return z;
}

std::string ZSequence::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ' ';
        os << entries[i].strand;
        if (entries[i].bar) os << '~';
        if (entries[i].sign > 0) os << '+';
        if (entries[i].sign < 0) os << '-';
    }
    return os.str();
}

bool z_equal_up_to_rotation(const EmbeddedNetwork& a, const EmbeddedNetwork& b) {
    if (a.boundary_order().size() != b.boundary_order().size()) return false;
    ZSequence za = z_sequence(a);
    for (std::size_t k = 0; k < b.boundary_order().size(); ++k)
        if (za == z_sequence(b, static_cast<int>(k))) return true;
    return b.boundary_order().empty() && za.entries.empty();
}

namespace {

Region make_region(const MedialGraph& mg, RegionKind kind, int sa, int sb,
                   std::vector<EdgeId> pivots, std::vector<int> boundary) {
    Region r;
    r.kind = kind;
    r.strand_a = sa;
    r.strand_b = sb;
    r.pivots = std::move(pivots);
    r.boundary = std::move(boundary);
    if (mg.net().is_rnpd()) {
        auto comp = mg.components(r.boundary);
        int collar = collar_component(mg, comp);
        int cb = comp[static_cast<std::size_t>(
            mg.vertex_node(*mg.net().interior_boundary()))];
        r.contains_interior_boundary = (cb != collar && cb != -1);
    }
    return r;
}

std::vector<std::size_t> crossing_indices(const Strand& s, EdgeId e) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < s.passes.size(); ++i)
        if (s.passes[i] == e) out.push_back(i);
    return out;
}

// strand segment between crossings i<j: corners i+1..j
std::vector<int> segment(const Strand& s, std::size_t i, std::size_t j) {
    std::vector<int> out;
    for (std::size_t k = i + 1; k <= j; ++k) out.push_back(s.steps[k]);
    return out;
}

bool clean_segment(const Strand& s, std::size_t i, std::size_t j, const std::set<EdgeId>& shared) {
    std::set<EdgeId> inside;
    for (std::size_t k = i + 1; k < j; ++k) {
        EdgeId e = s.passes[k];
        if (shared.count(e)) return false;  // crosses the partner again
        if (!inside.insert(e).second) return false;  // self-crossing inside
    }
    return true;
}

}  // namespace

RegionReport detect_regions(const MedialGraph& mg) {
    RegionReport rep;
    const auto& strands = mg.strands();

    for (std::size_t si = 0; si < strands.size(); ++si) {
        const Strand& s = strands[si];
        if (s.is_circle()) {
            rep.circles.push_back(
                make_region(mg, RegionKind::Circle, static_cast<int>(si), -1, {}, s.steps));
        }
        for (EdgeId pivot : s.self_intersections) {
            LoopSlice loop = loop_slice(s, pivot);
            rep.loops.push_back(make_region(mg, RegionKind::Loop, static_cast<int>(si), -1,
                                            {pivot}, loop.corners));
        }
    }

    for (std::size_t a = 0; a < strands.size(); ++a) {
        for (std::size_t b = a + 1; b < strands.size(); ++b) {
            std::set<EdgeId> pa(strands[a].passes.begin(), strands[a].passes.end());
            std::set<EdgeId> shared;
            for (EdgeId e : strands[b].passes)
                if (pa.count(e)) shared.insert(e);
            if (shared.size() < 2) continue;
            std::vector<EdgeId> sh(shared.begin(), shared.end());
            for (std::size_t x = 0; x < sh.size(); ++x) {
                for (std::size_t y = x + 1; y < sh.size(); ++y) {
                    auto ia = crossing_indices(strands[a], sh[x]);
                    auto ja = crossing_indices(strands[a], sh[y]);
                    auto ib = crossing_indices(strands[b], sh[x]);
                    auto jb = crossing_indices(strands[b], sh[y]);
                    if (ia.empty() || ja.empty() || ib.empty() || jb.empty()) continue;
                    std::size_t a1 = std::min(ia[0], ja[0]), a2 = std::max(ia[0], ja[0]);
                    std::size_t b1 = std::min(ib[0], jb[0]), b2 = std::max(ib[0], jb[0]);
                    if (!clean_segment(strands[a], a1, a2, shared)) continue;
                    if (!clean_segment(strands[b], b1, b2, shared)) continue;
                    std::vector<int> boundary = segment(strands[a], a1, a2);
                    auto segb = segment(strands[b], b1, b2);
                    boundary.insert(boundary.end(), segb.begin(), segb.end());
                    rep.lenses.push_back(make_region(mg, RegionKind::Lens, static_cast<int>(a),
                                                     static_cast<int>(b), {sh[x], sh[y]},
                                                     std::move(boundary)));
                }
            }
        }
    }
    return rep;
}

IrreducibilityReport check_irreducible(const EmbeddedNetwork& net) {
    if (!net.is_rnpd()) fail(Err::Domain, "irreducibility check expects an rnpd");
    MedialGraph mg(net);
    RegionReport rep = detect_regions(mg);
    IrreducibilityReport out;

    if (!rep.circles.empty()) {
        out.violated = 'a';
        out.detail = "medial circle present";
        return out;
    }

    std::set<int> selfint;
    for (const Strand& s : mg.strands())
        if (!s.self_intersections.empty())
            selfint.insert(static_cast<int>(&s - mg.strands().data()));
    if (selfint.size() > 1) {
        out.violated = 'b';
        out.detail = "more than one self-intersecting strand";
        return out;
    }
    if (selfint.size() == 1) {
        const Strand& s = mg.strands()[static_cast<std::size_t>(*selfint.begin())];
        if (s.self_intersections.size() > 1) {
            out.violated = 'b';
            out.detail = "strand intersects itself more than once";
            return out;
        }
        for (const Region& loop : rep.loops) {
            if (loop.strand_a == *selfint.begin() && !loop.contains_interior_boundary) {
                out.violated = 'b';
                out.detail = "self-intersection loop misses the interior boundary vertex";
                return out;
            }
        }
    }

    for (std::size_t a = 0; a < mg.strands().size(); ++a) {
        for (std::size_t b = a + 1; b < mg.strands().size(); ++b) {
            std::set<EdgeId> pa(mg.strands()[a].passes.begin(), mg.strands()[a].passes.end());
            int crossings = 0;
            for (EdgeId e : mg.strands()[b].passes)
                if (pa.count(e)) ++crossings;
            if (crossings > 2) {
                out.violated = 'c';
                out.detail = "two strands intersect more than twice";
                return out;
            }
        }
    }
    for (const Region& lens : rep.lenses) {
        if (!lens.contains_interior_boundary) {
            out.violated = 'c';
            out.detail = "lens misses the interior boundary vertex";
            return out;
        }
    }

    out.pass = true;
    return out;
}

std::vector<std::vector<EdgeId>> motion_sites(const EmbeddedNetwork& net) {
    std::vector<std::vector<EdgeId>> out;
    for (const MoveSite& s : find_sites(net, MoveKind::YToDelta))
        out.push_back(s.edges);
    for (const MoveSite& s : find_sites(net, MoveKind::DeltaToY))
        out.push_back(s.edges);
    return out;
}

EmbeddedNetwork apply_motion(const EmbeddedNetwork& net, const std::vector<EdgeId>& triangle) {
    if (triangle.size() != 3) fail(Err::NotATriangle, "a motion needs three edge midpoints");
    std::set<EdgeId> want(triangle.begin(), triangle.end());
    if (want.size() != 3) fail(Err::NotATriangle, "motion edges must be distinct");
    for (MoveKind k : {MoveKind::YToDelta, MoveKind::DeltaToY}) {
        for (const MoveSite& s : find_sites(net, k)) {
            std::set<EdgeId> got(s.edges.begin(), s.edges.end());
            if (got == want) return apply_move(net, s);
        }
    }
    fail(Err::NotATriangle, "the given midpoints do not bound a medial triangle");
}

std::string canonical_key(const EmbeddedNetwork& net, bool with_conductances) {
    if (net.boundary_order().empty()) return "<empty>";
    std::map<VertexId, int> label;
    std::vector<VertexId> order;
    std::deque<VertexId> queue;
    auto visit = [&](VertexId v) {
        if (label.count(v)) return;
        label[v] = static_cast<int>(order.size());
        order.push_back(v);
        queue.push_back(v);
    };
    // circle vertices seed the labeling so the key is anchored to the disk
    for (VertexId v : net.boundary_order()) visit(v);

    std::map<VertexId, std::vector<Dart>> rot;  // canonically anchored rotations
    std::map<VertexId, Dart> entry;             // first-arrival dart per internal vertex
    std::ostringstream os;
    std::map<EdgeId, int> edge_label;

    auto canonical_rotation = [&](VertexId v) {
        std::vector<Dart> r = net.rotation(v);
        bool anchored = std::find(net.boundary_order().begin(), net.boundary_order().end(), v) !=
                        net.boundary_order().end();
        if (!anchored && !r.empty()) {
            auto it = entry.count(v) ? std::find(r.begin(), r.end(), entry.at(v)) : r.begin();
            std::rotate(r.begin(), it, r.end());
        }
        return r;
    };

    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (const Dart& d : canonical_rotation(v)) {
            VertexId w = net.other_endpoint(d.edge, v);
            if (!label.count(w)) entry[w] = Dart{d.edge, d.end == 0 ? 1 : 0};
            visit(w);
        }
    }

    os << "b" << net.boundary_order().size();
    os << (net.interior_boundary() ? ";i" + std::to_string(label.at(*net.interior_boundary()))
                                   : ";i-");
    for (VertexId v : order) {
        os << "|v";
        switch (net.kind(v)) {
            case VertexKind::Boundary: os << 'B'; break;
            case VertexKind::InteriorBoundary: os << 'I'; break;
            case VertexKind::Internal: os << 'N'; break;
        }
        for (const Dart& d : canonical_rotation(v)) {
            auto it = edge_label.find(d.edge);
            int el;
            if (it == edge_label.end()) {
                el = static_cast<int>(edge_label.size());
                edge_label[d.edge] = el;
            } else {
                el = it->second;
            }
            os << ",e" << el << ":" << label.at(net.other_endpoint(d.edge, v));
            if (with_conductances) os << "=" << net.edge(d.edge).conductance.str();
        }
    }
    return os.str();
}

YDeltaSearchResult find_ydelta_path(const EmbeddedNetwork& from, const EmbeddedNetwork& to,
                                    int max_depth, int max_states) {
    YDeltaSearchResult res;
    res.status = YDeltaSearchResult::Status::Inconclusive;
    std::string goal = canonical_key(to, false);
    struct Node {
        EmbeddedNetwork net;
        std::vector<std::vector<EdgeId>> path;
        int depth;
    };
    std::deque<Node> frontier;
    std::set<std::string> seen;
    frontier.push_back({from, {}, 0});
    seen.insert(canonical_key(from, false));
    bool truncated = false;
    while (!frontier.empty()) {
        Node cur = std::move(frontier.front());
        frontier.pop_front();
        ++res.explored;
        if (canonical_key(cur.net, false) == goal) {
            res.status = YDeltaSearchResult::Status::Found;
            res.path = cur.path;
            return res;
        }
        if (cur.depth >= max_depth) {
            truncated = true;
            continue;
        }
        for (const auto& tri : motion_sites(cur.net)) {
            EmbeddedNetwork next = apply_motion(cur.net, tri);
            std::string key = canonical_key(next, false);
            if (!seen.insert(key).second) continue;
            if (static_cast<int>(seen.size()) > max_states) {
                truncated = true;
                continue;
            }
            auto path = cur.path;
            path.push_back(tri);
            frontier.push_back({std::move(next), std::move(path), cur.depth + 1});
        }
    }
    res.status = truncated ? YDeltaSearchResult::Status::Inconclusive
                           : YDeltaSearchResult::Status::NotEquivalent;
    return res;
}

int stubs_on_far_side(const MedialGraph& mg, const Strand& strand, int face_orbit) {
    if (strand.is_circle()) fail(Err::Domain, "circles have no endpoints");
    auto comp = mg.components(strand.steps);
    int cf = comp[static_cast<std::size_t>(mg.face_node(face_orbit))];
    SideProbe p = probe_sides(mg, strand.steps, strand.forward, comp, cf);
    if (p.touches_left == p.touches_right)
        fail(Err::AmbiguousOrientation, "strand does not separate the reference face cleanly");
    // the far side is the component across the strand from the face
    int far = -1;
    for (std::size_t i = 0; i < strand.steps.size() && far == -1; ++i) {
        auto [l, r] = mg.left_right(strand.steps[i], strand.forward[i]);
        int lc = comp[static_cast<std::size_t>(l)], rc = comp[static_cast<std::size_t>(r)];
        if (p.touches_right && lc != cf && lc != -1) far = lc;
        if (p.touches_left && rc != cf && rc != -1) far = rc;
    }
    if (far == -1) return 0;

    const MapView& mv = mg.map();
    int count = 0;
    for (int stub = 0; stub < mg.stub_count(); ++stub) {
        if (strand.stub_start == stub || strand.stub_end == stub) continue;
        int ppos = stub / 2;
        int corner = (stub % 2 == 0)
                         ? odd_stub_corner(mv, mg.net(), ppos)
                         : mv.arc_next(static_cast<std::size_t>(ppos));
        int fside = mg.corner_sides(corner).second;
        if (comp[static_cast<std::size_t>(fside)] == far) ++count;
    }
    return count;
}

std::string medial_to_dot(const MedialGraph& mg) {
    const MapView& mv = mg.map();
    static const char* palette[] = {"red",    "blue",   "forestgreen", "orange",
                                    "purple", "brown",  "deeppink",    "teal",
                                    "gray40", "olive",  "navy",        "crimson"};
    std::ostringstream os;
    os << "graph medial {\n  layout=neato;\n";
    for (const auto& [eid, ed] : mg.net().edges()) {
        (void)ed;
        os << "  m" << eid << " [shape=point,width=0.12];\n";
    }
    for (int stub = 0; stub < mg.stub_count(); ++stub)
        os << "  t" << stub + 1 << " [shape=circle,width=0.2,label=\"t" << stub + 1 << "\"];\n";

    auto corner_name = [&](int corner, const Strand& s, std::size_t k) {
        // endpoint corners connect to stubs, inner corners to midpoints
        (void)s;
        (void)k;
        int sig = mv.sigma(corner);
        std::string a = mv.is_arc(corner) ? "" : "m" + std::to_string(mv.dart_at(corner).edge);
        std::string b = mv.is_arc(sig) ? "" : "m" + std::to_string(mv.dart_at(sig).edge);
        return std::make_pair(a, b);
    };

    for (std::size_t si = 0; si < mg.strands().size(); ++si) {
        const Strand& s = mg.strands()[si];
        const char* color = palette[si % (sizeof(palette) / sizeof(palette[0]))];
        for (std::size_t k = 0; k < s.steps.size(); ++k) {
            auto [a, b] = corner_name(s.steps[k], s, k);
            if (a.empty() && s.stub_start)
                a = "t" + std::to_string((k == 0 ? *s.stub_start : *s.stub_end) + 1);
            if (b.empty() && s.stub_start)
                b = "t" + std::to_string((k == 0 ? *s.stub_start : *s.stub_end) + 1);
            if (a.empty() || b.empty()) continue;
            os << "  " << a << " -- " << b << " [color=" << color << "];\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace disknet
