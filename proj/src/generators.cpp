#include "disknet/generators.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace disknet {

namespace {

struct PiBuilder {
    int n;
    int layers;
    EmbeddedNetwork net;
    // ids
    std::map<std::pair<int, int>, VertexId> ring;  // (layer 1..L, pos) -> id
    std::map<int, VertexId> tip;                   // pos -> id, where spiked
    std::map<std::pair<int, int>, EdgeId> ring_edge;  // (layer, pos): pos -> pos+1
    std::map<std::pair<int, int>, EdgeId> conn;       // (layer, pos): layer -> layer+1
    std::map<int, EdgeId> spike;                      // pos
    std::map<int, EdgeId> chain;                      // pos: tip pos -> pos+1
};

}  // namespace

EmbeddedNetwork four_periodic(int n) {
    if (n < 3) fail(Err::Domain, "four_periodic requires n >= 3");
    PiBuilder b;
    b.n = n;
    b.layers = (n + 1) / 4;
    const int L = b.layers;
    const int res = n % 4;

    auto at = [&](int layer, int pos) { return b.ring.at({layer, (pos % n + n) % n}); };

    // Spiked positions on the outer ring, and the boundary-edge chain for the
    // n = 4k+2 case (chain tips are positions n/2-1 .. n-1).
    auto spiked = [&](int pos) {
        switch (res) {
            case 0: return pos < n / 2;
            case 1:
            case 2: return true;
            default: return false;
        }
    };
    auto chained = [&](int pos) { return res == 2 && pos >= n / 2 - 1; };

    for (int layer = 1; layer <= L; ++layer)
        for (int pos = 0; pos < n; ++pos) {
            bool outer = layer == L;
            VertexKind k = VertexKind::Internal;
            if (outer && !spiked(pos)) k = VertexKind::Boundary;
            b.ring[{layer, pos}] = b.net.add_vertex(k);
        }
    for (int pos = 0; pos < n; ++pos)
        if (spiked(pos)) b.tip[pos] = b.net.add_vertex(VertexKind::Boundary);

    for (int layer = 1; layer <= L; ++layer)
        for (int pos = 0; pos < n; ++pos)
            b.ring_edge[{layer, pos}] =
                b.net.add_edge(at(layer, pos), at(layer, pos + 1), Rational(1));
    for (int layer = 1; layer < L; ++layer)
        for (int pos = 0; pos < n; ++pos)
            b.conn[{layer, pos}] = b.net.add_edge(at(layer, pos), at(layer + 1, pos), Rational(1));
    for (auto& [pos, t] : b.tip) b.spike[pos] = b.net.add_edge(at(L, pos), t, Rational(1));
    if (res == 2)
        for (int pos = n / 2 - 1; pos < n - 1; ++pos)
            b.chain[pos] = b.net.add_edge(b.tip.at(pos), b.tip.at(pos + 1), Rational(1));

    auto dart_of = [&](EdgeId e, VertexId v) {
        return Dart{e, b.net.endpoint(e, 0) == v ? 0 : 1};
    };

    // Rotations, clockwise. A ring vertex reads [outward, ring-next, inward,
    // ring-prev]; outer boundary vertices are anchored with the arcs in the
    // outward slot.
    for (int layer = 1; layer <= L; ++layer)
        for (int pos = 0; pos < n; ++pos) {
            VertexId v = at(layer, pos);
            std::vector<Dart> rot;
            if (layer < L)
                rot.push_back(dart_of(b.conn.at({layer, pos}), v));
            else if (spiked(pos))
                rot.push_back(dart_of(b.spike.at(pos), v));
            rot.push_back(dart_of(b.ring_edge.at({layer, pos}), v));
            if (layer > 1) rot.push_back(dart_of(b.conn.at({layer - 1, pos}), v));
            rot.push_back(dart_of(b.ring_edge.at({layer, (pos + n - 1) % n}), v));
            b.net.set_rotation(v, rot);
        }
    for (auto& [pos, t] : b.tip) {
        std::vector<Dart> rot;
        if (res == 2 && chained(pos) && pos < n - 1) rot.push_back(dart_of(b.chain.at(pos), t));
        rot.push_back(dart_of(b.spike.at(pos), t));
        if (res == 2 && chained(pos) && pos > n / 2 - 1)
            rot.push_back(dart_of(b.chain.at(pos - 1), t));
        b.net.set_rotation(t, rot);
    }

    std::vector<VertexId> order;
    for (int pos = 0; pos < n; ++pos)
        order.push_back(spiked(pos) ? b.tip.at(pos) : b.ring.at({L, pos}));
    b.net.set_boundary_order(order);
    return b.net;
}

int center_face_index(const EmbeddedNetwork& net, int n) {
    std::vector<VertexId> ring1;
    for (int i = 0; i < n; ++i) ring1.push_back(i);
    auto faces = trace_faces(net);
    int idx = find_inner_face(faces, ring1);
    if (idx < 0) fail(Err::FaceNotFound, "center face not found");
    // guard against matching a bigger face that happens to use the same set
    if (faces[static_cast<std::size_t>(idx)].corners.size() != static_cast<std::size_t>(n))
        fail(Err::FaceNotFound, "center face has unexpected size");
    return idx;
}

EmbeddedNetwork spider(int n) {
    EmbeddedNetwork pi = four_periodic(n);
    auto faces = trace_faces(pi);
    const Face& center = faces[static_cast<std::size_t>(center_face_index(pi, n))];
    std::vector<VertexId> attach;
    for (const FaceCorner& c : center.corners) attach.push_back(c.vertex);
    return insert_star(pi, center, attach);
}

Rational random_positive_rational(std::mt19937_64& rng, int max_numerator, int max_denominator) {
    long num = 1 + static_cast<long>(rng_below(rng, static_cast<std::uint64_t>(max_numerator)));
    long den = 1 + static_cast<long>(rng_below(rng, static_cast<std::uint64_t>(max_denominator)));
    return Rational(num, den);
}

EmbeddedNetwork with_random_conductances(const EmbeddedNetwork& net, std::mt19937_64& rng,
                                         int max_numerator, int max_denominator) {
    EmbeddedNetwork out = net;
    for (const auto& [eid, ed] : net.edges()) {
        (void)ed;
        out.set_conductance(eid, random_positive_rational(rng, max_numerator, max_denominator));
    }
    return out;
}

EmbeddedNetwork insert_internal_star(const EmbeddedNetwork& net, const Face& face) {
    if (face.is_outer) fail(Err::FaceNotFound, "cannot star the outer face");
    EmbeddedNetwork out = net;
    VertexId w = out.add_vertex(VertexKind::Internal);
    std::vector<Dart> w_rot;
    // distinct corner vertices only, in face order
    std::vector<std::size_t> picks;
    std::set<VertexId> seen;
    for (std::size_t i = 0; i < face.corners.size(); ++i)
        if (seen.insert(face.corners[i].vertex).second) picks.push_back(i);
    for (std::size_t i : picks) {
        const FaceCorner& c = face.corners[i];
        EdgeId spoke = out.add_edge(w, c.vertex, Rational(1));
        w_rot.push_back(Dart{spoke, 0});
        const auto& rot = out.rotation(c.vertex);
        std::size_t where =
            static_cast<std::size_t>(std::find(rot.begin(), rot.end(), c.out) - rot.begin());
        out.insert_dart(c.vertex, where, Dart{spoke, 1});
    }
    // counterclockwise face walk -> reverse for a clockwise rotation
    std::reverse(w_rot.begin(), w_rot.end());
    out.set_rotation(w, w_rot);
    return out;
}

EmbeddedNetwork random_network(const RandomNetworkParams& params, std::uint64_t seed) {
    if (params.n_boundary < 2) fail(Err::Domain, "random_network needs >= 2 boundary vertices");
    std::mt19937_64 rng(seed);
    EmbeddedNetwork net;
    const int k = params.n_boundary;
    std::vector<VertexId> order;
    for (int i = 0; i < k; ++i) order.push_back(net.add_vertex(VertexKind::Boundary));
    if (k == 2) {
        EdgeId e0 = net.add_edge(order[0], order[1], Rational(1));
        EdgeId e1 = net.add_edge(order[0], order[1], Rational(1));
        net.set_rotation(order[0], {Dart{e0, 0}, Dart{e1, 0}});
        net.set_rotation(order[1], {Dart{e1, 1}, Dart{e0, 1}});
    } else {
        std::vector<EdgeId> ring;
        for (int i = 0; i < k; ++i)
            ring.push_back(net.add_edge(order[static_cast<std::size_t>(i)],
                                        order[static_cast<std::size_t>((i + 1) % k)], Rational(1)));
        for (int i = 0; i < k; ++i) {
            // anchored: [ring-next, ring-prev]
            net.set_rotation(order[static_cast<std::size_t>(i)],
                             {Dart{ring[static_cast<std::size_t>(i)], 0},
                              Dart{ring[static_cast<std::size_t>((i + k - 1) % k)], 1}});
        }
    }
    net.set_boundary_order(order);

    for (int i = 0; i < params.n_internal; ++i) {
        auto faces = trace_faces(net);
        std::vector<std::size_t> inner;
        for (std::size_t f = 0; f < faces.size(); ++f)
            if (!faces[f].is_outer && faces[f].corners.size() >= 2) inner.push_back(f);
        if (inner.empty()) break;
        const Face& f = faces[inner[rng_below(rng, inner.size())]];
        net = insert_internal_star(net, f);
    }

    for (int i = 0; i < params.delete_attempts; ++i) {
        if (net.edge_count() <= 1) break;
        std::vector<EdgeId> ids;
        for (const auto& [eid, ed] : net.edges()) {
            (void)ed;
            ids.push_back(eid);
        }
        EdgeId e = ids[rng_below(rng, ids.size())];
        try {
            net = delete_edge(net, e);
        } catch (const Error&) {
            // cut edge: keep it
        }
    }

    auto random_edge = [&]() {
        std::vector<EdgeId> ids;
        for (const auto& [eid, ed] : net.edges()) {
            (void)ed;
            ids.push_back(eid);
        }
        return ids[rng_below(rng, ids.size())];
    };
    for (int i = 0; i < params.parallel_attempts; ++i) {
        EdgeId e = random_edge();
        if (net.is_self_loop(e)) continue;
        const auto ed = net.edge(e);
        EmbeddedNetwork out = net;
        EdgeId e2 = out.add_edge(ed.u, ed.v, Rational(1));
        const auto& ru = out.rotation(ed.u);
        std::size_t pu =
            static_cast<std::size_t>(std::find(ru.begin(), ru.end(), Dart{e, 0}) - ru.begin());
        out.insert_dart(ed.u, pu + 1, Dart{e2, 0});
        const auto& rv = out.rotation(ed.v);
        std::size_t pv =
            static_cast<std::size_t>(std::find(rv.begin(), rv.end(), Dart{e, 1}) - rv.begin());
        out.insert_dart(ed.v, pv, Dart{e2, 1});
        net = out;
    }
    for (int i = 0; i < params.loop_attempts; ++i) {
        std::vector<VertexId> vs;
        for (const auto& [vid, vd] : net.vertices()) {
            (void)vd;
            vs.push_back(vid);
        }
        VertexId v = vs[rng_below(rng, vs.size())];
        net = insert_loop(net, v, rng_below(rng, net.degree(v) + 1), Rational(1));
    }
    for (int i = 0; i < params.pendant_attempts; ++i) {
        std::vector<VertexId> vs;
        for (const auto& [vid, vd] : net.vertices()) {
            (void)vd;
            vs.push_back(vid);
        }
        VertexId v = vs[rng_below(rng, vs.size())];
        net = insert_pendant(net, v, rng_below(rng, net.degree(v) + 1), Rational(1));
    }

    if (params.random_conductances)
        net = with_random_conductances(net, rng, params.max_numerator, params.max_denominator);
    return net;
}

}  // namespace disknet
