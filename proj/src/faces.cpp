#include "disknet/faces.hpp"

#include <algorithm>
#include <set>

namespace disknet {

MapView::MapView(const EmbeddedNetwork& net, bool with_arcs) : net_(&net) {
    int ei = 0;
    for (const auto& [eid, ed] : net.edges()) {
        (void)ed;
        edge_pos_[eid] = ei++;
        edge_by_pos_.push_back(eid);
    }
    real_count_ = 2 * ei;
    int total = real_count_;
    if (with_arcs) {
        int j = 0;
        for (VertexId v : net.boundary_order()) boundary_pos_[v] = j++;
        total += 2 * j;
    }
    vertex_of_.assign(total, -1);
    alpha_.assign(total, -1);
    sigma_.assign(total, -1);
    sigma_inv_.assign(total, -1);

    for (const auto& [eid, ed] : net.edges()) {
        int base = 2 * edge_pos_[eid];
        vertex_of_[base] = ed.u;
        vertex_of_[base + 1] = ed.v;
        alpha_[base] = base + 1;
        alpha_[base + 1] = base;
    }
    const std::size_t n = net.boundary_order().size();
    if (with_arcs) {
        for (std::size_t j = 0; j < n; ++j) {
            int an = arc_next(j), ap = arc_prev(j);
            vertex_of_[an] = net.boundary_order()[j];
            vertex_of_[ap] = net.boundary_order()[j];
            alpha_[an] = arc_prev((j + 1) % n);
        }
        for (std::size_t j = 0; j < n; ++j) alpha_[arc_prev(j)] = arc_next((j + n - 1) % n);
    }

    for (const auto& [vid, vd] : net.vertices()) {
        std::vector<int> cycle;
        auto pos = boundary_pos_.find(vid);
        if (with_arcs && pos != boundary_pos_.end()) {
            cycle.push_back(arc_prev(pos->second));
            cycle.push_back(arc_next(pos->second));
        }
        for (const Dart& d : vd.rotation) cycle.push_back(dart_index(d));
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            sigma_[cycle[i]] = cycle[(i + 1) % cycle.size()];
            sigma_inv_[cycle[(i + 1) % cycle.size()]] = cycle[i];
        }
    }

    // Faces: orbits of sigma(alpha(d)). With clockwise rotations a face lies
    // to the right of each of its darts.
    face_of_.assign(total, -1);
    for (int d0 = 0; d0 < total; ++d0) {
        if (face_of_[d0] != -1) continue;
        int f = static_cast<int>(faces_.size());
        faces_.emplace_back();
        int d = d0;
        do {
            face_of_[d] = f;
            faces_.back().push_back(d);
            d = sigma_[alpha_[d]];
            if (d < 0) fail(Err::EmbeddingInconsistent, "face trace fell off the map");
        } while (d != d0);
    }
    if (with_arcs && n > 0) outer_face_ = face_of_[arc_next(0)];
}

int MapView::dart_index(const Dart& d) const { return 2 * edge_pos_.at(d.edge) + d.end; }

Dart MapView::dart_at(int idx) const {
    if (idx < 0 || idx >= real_count_) fail(Err::Domain, "dart index out of range");
    return Dart{edge_by_pos_[static_cast<std::size_t>(idx / 2)], idx % 2};
}

int MapView::arc_next(std::size_t boundary_pos) const {
    return real_count_ + 2 * static_cast<int>(boundary_pos);
}

int MapView::arc_prev(std::size_t boundary_pos) const {
    return real_count_ + 2 * static_cast<int>(boundary_pos) + 1;
}

std::vector<Face> trace_faces(const EmbeddedNetwork& net) {
    net.validate_basic();
    std::vector<Face> out;
    if (net.edges().empty()) {
        Face f;
        f.is_outer = true;
        out.push_back(f);
        return out;
    }
    MapView mv(net, /*with_arcs=*/false);
    for (const auto& orbit : mv.faces()) {
        Face f;
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            int d = orbit[k];
            int prev = orbit[(k + orbit.size() - 1) % orbit.size()];
            FaceCorner c;
            c.vertex = mv.vertex_of(d);
            c.in = mv.dart_at(mv.alpha(prev));
            c.out = mv.dart_at(d);
            f.corners.push_back(c);
        }
        out.push_back(std::move(f));
    }

    // components, for the per-component genus check
    std::set<VertexId> seen;
    long comps = 0;
    for (const auto& [vid, vd] : net.vertices()) {
        (void)vd;
        if (seen.count(vid)) continue;
        ++comps;
        std::vector<VertexId> stack{vid};
        seen.insert(vid);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (const Dart& d : net.rotation(v)) {
                VertexId w = net.other_endpoint(d.edge, v);
                if (seen.insert(w).second) stack.push_back(w);
            }
        }
    }
    long V = static_cast<long>(net.vertex_count());
    long E = static_cast<long>(net.edge_count());
    long F = static_cast<long>(out.size());
    long isolated = 0;
    for (const auto& [vid, vd] : net.vertices())
        if (vd.rotation.empty()) ++isolated;
    // Isolated vertices contribute no face orbit; count the sphere face each
    // would sit in so Euler still closes.
    if (V - E + (F + isolated) != 2 * comps)
        fail(Err::EmbeddingInconsistent, "face trace does not close to genus zero");

    if (!net.boundary_order().empty()) {
        VertexId v1 = net.boundary_order().front();
        if (net.degree(v1) > 0) {
            // The outer face turns the corner between the last and first
            // anchored darts at v1, where the disk arcs sit.
            int outer = mv.face_of()[mv.dart_index(net.rotation(v1).front())];
            out[static_cast<std::size_t>(outer)].is_outer = true;
        }
    }
    return out;
}

int find_inner_face(const std::vector<Face>& faces, const std::vector<VertexId>& vertex_set) {
    std::set<VertexId> want(vertex_set.begin(), vertex_set.end());
    int found = -1;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (faces[i].is_outer) continue;
        std::set<VertexId> got;
        for (const FaceCorner& c : faces[i].corners) got.insert(c.vertex);
        if (got == want) {
            if (found != -1) return -1;
            found = static_cast<int>(i);
        }
    }
    return found;
}

EmbeddedNetwork insert_star(const EmbeddedNetwork& net, const Face& face,
                            const std::vector<VertexId>& attach) {
    if (net.is_rnpd()) fail(Err::Domain, "insert_star requires a cprn");
    if (face.is_outer) fail(Err::FaceNotFound, "cannot insert a star into the outer face");
    if (attach.empty()) fail(Err::AttachNotOnFace, "empty attach set");
    // The face must actually belong to this network.
    for (const FaceCorner& c : face.corners) {
        if (!net.has_vertex(c.vertex)) fail(Err::FaceNotFound, "face names a missing vertex");
        const auto& rot = net.rotation(c.vertex);
        auto it = std::find(rot.begin(), rot.end(), c.in);
        if (it == rot.end()) fail(Err::FaceNotFound, "face corner dart missing");
        std::size_t k = static_cast<std::size_t>(it - rot.begin());
        if (rot[(k + 1) % rot.size()] != c.out)
            fail(Err::FaceNotFound, "face corner is not a corner of this embedding");
    }

    // first corner of each attach vertex, kept in face-walk order
    std::vector<std::size_t> corner_of;
    for (VertexId a : attach) {
        std::size_t k = face.corners.size();
        for (std::size_t i = 0; i < face.corners.size(); ++i)
            if (face.corners[i].vertex == a) {
                k = i;
                break;
            }
        if (k == face.corners.size())
            fail(Err::AttachNotOnFace, "vertex " + std::to_string(a) + " not on the face");
        corner_of.push_back(k);
    }
    std::vector<std::size_t> order(attach.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return corner_of[x] < corner_of[y]; });
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (corner_of[order[i]] == corner_of[order[i + 1]])
            fail(Err::AttachNotOnFace, "duplicate attach vertex");

    EmbeddedNetwork out = net;
    VertexId b = out.add_vertex(VertexKind::InteriorBoundary);
    out.set_interior_boundary(b);
    // Inner faces trace counterclockwise, so the clockwise rotation around
    // the new center is the reversed face-walk order.
    std::vector<Dart> b_rot;
    for (std::size_t oi : order) {
        VertexId v = attach[oi];
        const FaceCorner& c = face.corners[corner_of[oi]];
        EdgeId spoke = out.add_edge(b, v, Rational(1));
        b_rot.push_back(Dart{spoke, 0});
        const auto& rot = out.rotation(v);
        std::size_t where =
            static_cast<std::size_t>(std::find(rot.begin(), rot.end(), c.out) - rot.begin());
        out.insert_dart(v, where, Dart{spoke, 1});
    }
    std::reverse(b_rot.begin(), b_rot.end());
    out.set_rotation(b, b_rot);
    return out;
}

}  // namespace disknet
