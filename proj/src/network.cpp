#include "disknet/network.hpp"

#include <algorithm>
#include <set>

#include "disknet/faces.hpp"

namespace disknet {

VertexId EmbeddedNetwork::add_vertex(VertexKind kind) { return add_vertex(kind, next_vertex_id_); }

VertexId EmbeddedNetwork::add_vertex(VertexKind kind, VertexId id) {
    if (verts_.count(id)) fail(Err::Domain, "duplicate vertex id " + std::to_string(id));
    verts_[id].kind = kind;
    next_vertex_id_ = std::max(next_vertex_id_, id + 1);
    return id;
}

EdgeId EmbeddedNetwork::add_edge(VertexId u, VertexId v, Rational c) {
    return add_edge(u, v, std::move(c), next_edge_id_);
}

EdgeId EmbeddedNetwork::add_edge(VertexId u, VertexId v, Rational c, EdgeId id) {
    if (edges_.count(id)) fail(Err::Domain, "duplicate edge id " + std::to_string(id));
    if (!has_vertex(u) || !has_vertex(v)) fail(Err::Domain, "edge endpoint missing");
    edges_[id] = EdgeData{u, v, std::move(c)};
    next_edge_id_ = std::max(next_edge_id_, id + 1);
    return id;
}

void EmbeddedNetwork::set_rotation(VertexId v, std::vector<Dart> rotation) {
    verts_.at(v).rotation = std::move(rotation);
}

void EmbeddedNetwork::insert_dart(VertexId v, std::size_t pos, Dart d) {
    auto& rot = verts_.at(v).rotation;
    if (pos > rot.size()) fail(Err::Domain, "dart position out of range");
    rot.insert(rot.begin() + static_cast<std::ptrdiff_t>(pos), d);
}

void EmbeddedNetwork::remove_dart(VertexId v, Dart d) {
    auto& rot = verts_.at(v).rotation;
    auto it = std::find(rot.begin(), rot.end(), d);
    if (it == rot.end()) fail(Err::Domain, "dart not present in rotation");
    rot.erase(it);
}

void EmbeddedNetwork::move_dart(EdgeId e, int end, VertexId to, std::size_t pos) {
    VertexId from = endpoint(e, end);
    remove_dart(from, Dart{e, end});
    insert_dart(to, pos, Dart{e, end});
    auto& ed = edges_.at(e);
    (end == 0 ? ed.u : ed.v) = to;
}

void EmbeddedNetwork::set_conductance(EdgeId e, const Rational& c) { edges_.at(e).conductance = c; }

void EmbeddedNetwork::set_endpoint(EdgeId e, int end, VertexId v) {
    auto& ed = edges_.at(e);
    (end == 0 ? ed.u : ed.v) = v;
}

void EmbeddedNetwork::set_kind(VertexId v, VertexKind kind) { verts_.at(v).kind = kind; }

void EmbeddedNetwork::set_boundary_order(std::vector<VertexId> order) {
    boundary_order_ = std::move(order);
}

void EmbeddedNetwork::set_interior_boundary(std::optional<VertexId> b) { interior_boundary_ = b; }

void EmbeddedNetwork::erase_edge(EdgeId e) {
    const EdgeData ed = edge(e);
    remove_dart(ed.u, Dart{e, 0});
    remove_dart(ed.v, Dart{e, 1});
    edges_.erase(e);
}

void EmbeddedNetwork::erase_edge_record(EdgeId e) {
    if (!edges_.count(e)) fail(Err::Domain, "unknown edge id " + std::to_string(e));
    edges_.erase(e);
}

void EmbeddedNetwork::erase_vertex(VertexId v) {
    if (!vertex(v).rotation.empty()) fail(Err::Domain, "erasing non-isolated vertex");
    verts_.erase(v);
    boundary_order_.erase(std::remove(boundary_order_.begin(), boundary_order_.end(), v),
                          boundary_order_.end());
    if (interior_boundary_ == v) interior_boundary_.reset();
}

const EmbeddedNetwork::VertexData& EmbeddedNetwork::vertex(VertexId v) const {
    auto it = verts_.find(v);
    if (it == verts_.end()) fail(Err::Domain, "unknown vertex id " + std::to_string(v));
    return it->second;
}

const EmbeddedNetwork::EdgeData& EmbeddedNetwork::edge(EdgeId e) const {
    auto it = edges_.find(e);
    if (it == edges_.end()) fail(Err::Domain, "unknown edge id " + std::to_string(e));
    return it->second;
}

VertexId EmbeddedNetwork::dart_vertex(const Dart& d) const { return endpoint(d.edge, d.end); }

VertexId EmbeddedNetwork::endpoint(EdgeId e, int end) const {
    const auto& ed = edge(e);
    return end == 0 ? ed.u : ed.v;
}

VertexId EmbeddedNetwork::other_endpoint(EdgeId e, VertexId v) const {
    const auto& ed = edge(e);
    if (ed.u == v) return ed.v;
    if (ed.v == v) return ed.u;
    fail(Err::Domain, "vertex not an endpoint of edge");
}

bool EmbeddedNetwork::is_self_loop(EdgeId e) const {
    const auto& ed = edge(e);
    return ed.u == ed.v;
}

std::vector<VertexId> EmbeddedNetwork::boundary_ids() const {
    std::vector<VertexId> ids = boundary_order_;
    if (interior_boundary_) ids.push_back(*interior_boundary_);
    return ids;
}

bool EmbeddedNetwork::connected() const {
    if (verts_.empty()) return true;
    std::set<VertexId> seen;
    std::vector<VertexId> stack{verts_.begin()->first};
    seen.insert(stack.back());
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (const Dart& d : rotation(v)) {
            VertexId w = other_endpoint(d.edge, v);
            if (seen.insert(w).second) stack.push_back(w);
        }
    }
    return seen.size() == verts_.size();
}

void EmbeddedNetwork::validate_basic() const {
    for (const auto& [eid, ed] : edges_) {
        if (!has_vertex(ed.u) || !has_vertex(ed.v))
            fail(Err::EmbeddingInconsistent, "edge with missing endpoint");
        if (!ed.conductance.is_positive())
            fail(Err::Domain, "non-positive conductance on edge " + std::to_string(eid));
    }
    std::map<VertexId, std::multiset<Dart>> expect;
    for (const auto& [eid, ed] : edges_) {
        expect[ed.u].insert(Dart{eid, 0});
        expect[ed.v].insert(Dart{eid, 1});
    }
    for (const auto& [vid, vd] : verts_) {
        std::multiset<Dart> got(vd.rotation.begin(), vd.rotation.end());
        auto it = expect.find(vid);
        const std::multiset<Dart> want = it == expect.end() ? std::multiset<Dart>{} : it->second;
        if (got != want)
            fail(Err::EmbeddingInconsistent,
                 "rotation at vertex " + std::to_string(vid) + " does not list its edge-ends");
    }
    std::set<VertexId> seen_b;
    for (VertexId v : boundary_order_) {
        if (!has_vertex(v)) fail(Err::EmbeddingInconsistent, "boundary_order names missing vertex");
        if (kind(v) != VertexKind::Boundary)
            fail(Err::EmbeddingInconsistent, "boundary_order vertex not of Boundary kind");
        if (!seen_b.insert(v).second)
            fail(Err::EmbeddingInconsistent, "duplicate vertex in boundary_order");
    }
    int interior_count = 0;
    for (const auto& [vid, vd] : verts_)
        if (vd.kind == VertexKind::InteriorBoundary) ++interior_count;
    if (interior_count > 1)
        fail(Err::EmbeddingInconsistent, "more than one interior boundary vertex");
    if (interior_boundary_) {
        if (!has_vertex(*interior_boundary_) ||
            kind(*interior_boundary_) != VertexKind::InteriorBoundary)
            fail(Err::EmbeddingInconsistent, "interior_boundary bookkeeping mismatch");
    } else if (interior_count != 0) {
        fail(Err::EmbeddingInconsistent, "InteriorBoundary vertex without interior_boundary set");
    }
}

void EmbeddedNetwork::validate() const {
    validate_basic();
    if (!connected()) fail(Err::EmbeddingInconsistent, "network not connected");
    for (const auto& [vid, vd] : verts_) {
        if (vd.kind == VertexKind::Boundary &&
            std::find(boundary_order_.begin(), boundary_order_.end(), vid) ==
                boundary_order_.end())
            fail(Err::EmbeddingInconsistent,
                 "Boundary vertex " + std::to_string(vid) + " missing from boundary_order");
    }
    if (boundary_order_.empty() && !verts_.empty())
        fail(Err::EmbeddingInconsistent, "no on-circle boundary vertices");
    if (verts_.empty()) return;
    // Genus-zero check of the arc-augmented map: a wrong rotation anchor or a
    // crossing shows up as V - E + F != 2 with the disk arcs counted as edges.
    MapView mv(*this, /*with_arcs=*/true);
    long V = static_cast<long>(verts_.size());
    long E = static_cast<long>(edges_.size()) + static_cast<long>(boundary_order_.size());
    long F = static_cast<long>(mv.faces().size());
    if (V - E + F != 2)
        fail(Err::EmbeddingInconsistent,
             "arc-augmented map is not genus zero (V-E+F=" + std::to_string(V - E + F) + ")");
}

EmbeddedNetwork EmbeddedNetwork::compacted() const {
    EmbeddedNetwork out;
    std::map<VertexId, VertexId> vmap;
    std::map<EdgeId, EdgeId> emap;
    for (const auto& [vid, vd] : verts_) vmap[vid] = out.add_vertex(vd.kind);
    for (const auto& [eid, ed] : edges_)
        emap[eid] = out.add_edge(vmap.at(ed.u), vmap.at(ed.v), ed.conductance);
    for (const auto& [vid, vd] : verts_) {
        std::vector<Dart> rot;
        rot.reserve(vd.rotation.size());
        for (const Dart& d : vd.rotation) rot.push_back(Dart{emap.at(d.edge), d.end});
        out.set_rotation(vmap.at(vid), std::move(rot));
    }
    std::vector<VertexId> order;
    for (VertexId v : boundary_order_) order.push_back(vmap.at(v));
    out.set_boundary_order(order);
    if (interior_boundary_) out.set_interior_boundary(vmap.at(*interior_boundary_));
    return out;
}

bool operator==(const EmbeddedNetwork& a, const EmbeddedNetwork& b) {
    if (a.boundary_order_ != b.boundary_order_ || a.interior_boundary_ != b.interior_boundary_)
        return false;
    if (a.edges_.size() != b.edges_.size() || a.verts_.size() != b.verts_.size()) return false;
    for (const auto& [eid, ed] : a.edges_) {
        auto it = b.edges_.find(eid);
        if (it == b.edges_.end()) return false;
        if (ed.u != it->second.u || ed.v != it->second.v ||
            ed.conductance != it->second.conductance)
            return false;
    }
    for (const auto& [vid, vd] : a.verts_) {
        auto it = b.verts_.find(vid);
        if (it == b.verts_.end()) return false;
        if (vd.kind != it->second.kind) return false;
        const auto& ra = vd.rotation;
        const auto& rb = it->second.rotation;
        if (ra.size() != rb.size()) return false;
        bool anchored = std::find(a.boundary_order_.begin(), a.boundary_order_.end(), vid) !=
                        a.boundary_order_.end();
        if (anchored) {
            if (ra != rb) return false;
        } else if (!ra.empty()) {
            // unanchored rotations compare cyclically
            bool match = false;
            for (std::size_t s = 0; s < ra.size() && !match; ++s) {
                match = true;
                for (std::size_t i = 0; i < ra.size(); ++i)
                    if (ra[(s + i) % ra.size()] != rb[i]) {
                        match = false;
                        break;
                    }
            }
            if (!match) return false;
        }
    }
    return true;
}

const char* edge_class_name(EdgeClass c) {
    switch (c) {
        case EdgeClass::BoundaryEdge: return "boundary_edge";
        case EdgeClass::BoundarySpike: return "boundary_spike";
        case EdgeClass::PseudoBoundaryEdge: return "pseudo_boundary_edge";
        case EdgeClass::BoundaryPseudoSpike: return "boundary_pseudo_spike";
        case EdgeClass::Plain: return "plain";
    }
    return "?";
}

EmbeddedNetwork delete_edge(const EmbeddedNetwork& net, EdgeId e) {
    net.edge(e);  // existence check
    EmbeddedNetwork out = net;
    out.erase_edge(e);
    if (!out.connected()) fail(Err::ConnectivityBroken, "deleting edge " + std::to_string(e));
    return out;
}

EmbeddedNetwork contract_edge(const EmbeddedNetwork& net, EdgeId e) {
    const auto ed = net.edge(e);
    if (ed.u == ed.v) fail(Err::SelfLoopContraction, "edge " + std::to_string(e));
    bool ub = net.is_boundary_kind(ed.u), vb = net.is_boundary_kind(ed.v);
    if (ub && vb)
        fail(Err::BoundaryContraction, "contracting edge between two boundary vertices");
    VertexId keep = vb ? ed.v : ed.u;
    VertexId gone = (keep == ed.u) ? ed.v : ed.u;

    Dart d_keep{e, net.endpoint(e, 0) == keep ? 0 : 1};
    Dart d_gone{e, d_keep.end == 0 ? 1 : 0};
    const std::vector<Dart> keep_rot = net.rotation(keep);
    const std::vector<Dart> gone_rot = net.rotation(gone);
    auto kit = std::find(keep_rot.begin(), keep_rot.end(), d_keep);
    auto git = std::find(gone_rot.begin(), gone_rot.end(), d_gone);
    if (kit == keep_rot.end() || git == gone_rot.end())
        fail(Err::EmbeddingInconsistent, "contract: darts missing from rotations");

    // Splice gone's rotation (read clockwise starting just after the
    // contracted dart) into keep's rotation at the contracted dart's slot.
    // This keeps keep's anchoring intact when keep is a circle vertex.
    std::vector<Dart> spliced(keep_rot.begin(), kit);
    std::size_t gpos = static_cast<std::size_t>(git - gone_rot.begin());
    for (std::size_t i = 1; i < gone_rot.size(); ++i)
        spliced.push_back(gone_rot[(gpos + i) % gone_rot.size()]);
    spliced.insert(spliced.end(), kit + 1, keep_rot.end());

    EmbeddedNetwork out = net;
    out.erase_edge(e);
    for (const Dart& d : gone_rot)
        if (d.edge != e) out.set_endpoint(d.edge, d.end, keep);
    out.set_rotation(gone, {});
    out.set_rotation(keep, std::move(spliced));
    out.erase_vertex(gone);
    return out;
}

namespace {

EmbeddedNetwork restricted(const EmbeddedNetwork& net, const std::set<VertexId>& keep_vs,
                           const std::set<EdgeId>& keep_es,
                           const std::map<VertexId, VertexKind>& kinds) {
    EmbeddedNetwork out;
    for (const auto& [vid, vd] : net.vertices())
        if (keep_vs.count(vid)) out.add_vertex(kinds.at(vid), vid);
    for (const auto& [eid, ed] : net.edges())
        if (keep_es.count(eid)) out.add_edge(ed.u, ed.v, ed.conductance, eid);
    for (VertexId vid : keep_vs) {
        std::vector<Dart> rot;
        for (const Dart& d : net.rotation(vid))
            if (keep_es.count(d.edge)) rot.push_back(d);
        out.set_rotation(vid, std::move(rot));
    }
    std::vector<VertexId> order;
    for (VertexId v : net.boundary_order())
        if (keep_vs.count(v) && kinds.at(v) == VertexKind::Boundary) order.push_back(v);
    out.set_boundary_order(order);
    if (net.interior_boundary() && keep_vs.count(*net.interior_boundary()) &&
        kinds.at(*net.interior_boundary()) == VertexKind::InteriorBoundary)
        out.set_interior_boundary(net.interior_boundary());
    return out;
}

}  // namespace

EmbeddedNetwork restrict_strong(const EmbeddedNetwork& net, const std::vector<VertexId>& vs) {
    if (vs.empty()) fail(Err::EmptyRestriction, "strong restriction to empty vertex set");
    std::set<VertexId> keep(vs.begin(), vs.end());
    for (VertexId v : keep) net.vertex(v);
    std::set<EdgeId> keep_es;
    for (const auto& [eid, ed] : net.edges())
        if (keep.count(ed.u) && keep.count(ed.v)) keep_es.insert(eid);
    std::map<VertexId, VertexKind> kinds;
    for (VertexId v : keep) {
        bool outside_neighbor = false;
        for (const Dart& d : net.rotation(v))
            if (!keep.count(net.other_endpoint(d.edge, v))) outside_neighbor = true;
        if (net.is_boundary_kind(v))
            kinds[v] = net.kind(v);  // b keeps its InteriorBoundary kind
        else
            kinds[v] = outside_neighbor ? VertexKind::Boundary : VertexKind::Internal;
    }
    return restricted(net, keep, keep_es, kinds);
}

EmbeddedNetwork restrict_weak(const EmbeddedNetwork& net, const std::vector<VertexId>& vs) {
    if (vs.empty()) fail(Err::EmptyRestriction, "weak restriction to empty vertex set");
    std::set<VertexId> core(vs.begin(), vs.end());
    for (VertexId v : core) net.vertex(v);
    std::set<EdgeId> keep_es;
    std::set<VertexId> keep = core;
    for (const auto& [eid, ed] : net.edges()) {
        if (core.count(ed.u) || core.count(ed.v)) {
            keep_es.insert(eid);
            keep.insert(ed.u);
            keep.insert(ed.v);
        }
    }
    std::map<VertexId, VertexKind> kinds;
    for (VertexId v : keep) {
        if (!core.count(v))
            kinds[v] = VertexKind::Boundary;  // absorbed neighbors become boundary
        else
            kinds[v] = net.kind(v);
    }
    return restricted(net, keep, keep_es, kinds);
}

std::map<EdgeId, EdgeClass> classify_edges(const EmbeddedNetwork& net) {
    std::map<EdgeId, EdgeClass> cls;
    for (const auto& [eid, ed] : net.edges()) {
        if (net.is_boundary_kind(ed.u) && net.is_boundary_kind(ed.v))
            cls[eid] = EdgeClass::BoundaryEdge;
        else if ((net.is_boundary_kind(ed.u) && net.degree(ed.u) == 1) ||
                 (net.is_boundary_kind(ed.v) && net.degree(ed.v) == 1))
            cls[eid] = EdgeClass::BoundarySpike;
        else
            cls[eid] = EdgeClass::Plain;
    }
    auto has_class = [&](VertexId v, EdgeClass c) {
        for (const Dart& d : net.rotation(v))
            if (cls.at(d.edge) == c) return true;
        return false;
    };
    // Pseudo classes: spike- and boundary-edge-like edges at the seam where a
    // 4-periodic graph's spiked arc meets its boundary-edge arc. A boundary
    // vertex carrying a boundary edge, joined to an internal vertex: the edge
    // is a pseudo-boundary edge when that internal vertex carries a boundary
    // spike, and a boundary pseudo-spike when instead the boundary vertex has
    // degree 2 (its whole residual attachment is this one inward edge).
    for (const auto& [eid, ed] : net.edges()) {
        if (cls.at(eid) != EdgeClass::Plain) continue;
        for (auto [b, in] : {std::pair{ed.u, ed.v}, std::pair{ed.v, ed.u}}) {
            if (!net.is_boundary_kind(b) || net.kind(in) != VertexKind::Internal) continue;
            if (!has_class(b, EdgeClass::BoundaryEdge)) continue;
            if (has_class(in, EdgeClass::BoundarySpike)) {
                cls[eid] = EdgeClass::PseudoBoundaryEdge;
                break;
            }
            if (net.degree(b) == 2) {
                cls[eid] = EdgeClass::BoundaryPseudoSpike;
                break;
            }
        }
    }
    return cls;
}

EmbeddedNetwork insert_loop(const EmbeddedNetwork& net, VertexId v, std::size_t pos,
                            const Rational& c) {
    if (!c.is_positive()) fail(Err::Domain, "loop conductance must be positive");
    EmbeddedNetwork out = net;
    EdgeId e = out.add_edge(v, v, c);
    out.insert_dart(v, pos, Dart{e, 0});
    out.insert_dart(v, pos + 1, Dart{e, 1});
    return out;
}

EmbeddedNetwork insert_pendant(const EmbeddedNetwork& net, VertexId v, std::size_t pos,
                               const Rational& c) {
    if (!c.is_positive()) fail(Err::Domain, "pendant conductance must be positive");
    EmbeddedNetwork out = net;
    VertexId w = out.add_vertex(VertexKind::Internal);
    EdgeId e = out.add_edge(v, w, c);
    out.insert_dart(v, pos, Dart{e, 0});
    out.set_rotation(w, {Dart{e, 1}});
    return out;
}

EmbeddedNetwork split_edge(const EmbeddedNetwork& net, EdgeId e, const Rational& a,
                           const Rational& b) {
    if (!a.is_positive() || !b.is_positive()) fail(Err::Domain, "series parts must be positive");
    const auto ed = net.edge(e);
    if (a * b / (a + b) != ed.conductance)
        fail(Err::Domain, "series split does not reproduce the edge conductance");
    EmbeddedNetwork out = net;
    VertexId w = out.add_vertex(VertexKind::Internal);
    EdgeId e1 = out.add_edge(ed.u, w, a);
    EdgeId e2 = out.add_edge(w, ed.v, b);
    auto replace = [&out](VertexId at, Dart from, Dart to) {
        auto rot = out.rotation(at);
        auto it = std::find(rot.begin(), rot.end(), from);
        *it = to;
        out.set_rotation(at, rot);
    };
    replace(ed.u, Dart{e, 0}, Dart{e1, 0});
    replace(ed.v, Dart{e, 1}, Dart{e2, 1});
    out.set_rotation(w, {Dart{e1, 1}, Dart{e2, 0}});
    out.erase_edge_record(e);
    return out;
}

EmbeddedNetwork split_parallel(const EmbeddedNetwork& net, EdgeId e, const Rational& a,
                               const Rational& b) {
    if (!a.is_positive() || !b.is_positive()) fail(Err::Domain, "parallel parts must be positive");
    const auto ed = net.edge(e);
    if (a + b != ed.conductance)
        fail(Err::Domain, "parallel split does not reproduce the edge conductance");
    if (ed.u == ed.v) fail(Err::Domain, "cannot split a self-loop into a parallel pair");
    EmbeddedNetwork out = net;
    out.set_conductance(e, a);
    EdgeId e2 = out.add_edge(ed.u, ed.v, b);
    const auto& rot_u = out.rotation(ed.u);
    std::size_t pu = static_cast<std::size_t>(
        std::find(rot_u.begin(), rot_u.end(), Dart{e, 0}) - rot_u.begin());
    out.insert_dart(ed.u, pu + 1, Dart{e2, 0});
    const auto& rot_v = out.rotation(ed.v);
    std::size_t pv = static_cast<std::size_t>(
        std::find(rot_v.begin(), rot_v.end(), Dart{e, 1}) - rot_v.begin());
    out.insert_dart(ed.v, pv, Dart{e2, 1});
    return out;
}

}  // namespace disknet
