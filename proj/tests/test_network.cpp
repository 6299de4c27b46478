#include "doctest.h"

#include <algorithm>

#include "disknet/faces.hpp"
#include "disknet/generators.hpp"
#include "disknet/network.hpp"
#include "helpers.hpp"

using namespace disknet;
namespace th = disknet::testing;

TEST_CASE("fixtures pass the embedding invariants") {
    th::parallel_pair_example().validate();
    th::punctured_example().validate();
    th::two_edge_path().validate();
    th::single_edge().validate();
    th::parallel_pair().validate();
}

TEST_CASE("face tracing") {
    auto f1 = trace_faces(th::parallel_pair_example());
    CHECK(f1.size() == 4);
    int outer = 0;
    for (const auto& f : f1) outer += f.is_outer ? 1 : 0;
    CHECK(outer == 1);

    CHECK(trace_faces(four_periodic(3)).size() == 2);
    CHECK(trace_faces(th::single_edge()).size() == 1);
    CHECK(trace_faces(th::single_edge())[0].is_outer);
}

TEST_CASE("euler count holds across generated networks") {
    for (int n = 3; n <= 9; ++n) {
        EmbeddedNetwork pi = four_periodic(n);
        auto faces = trace_faces(pi);
        long V = static_cast<long>(pi.vertex_count());
        long E = static_cast<long>(pi.edge_count());
        CHECK(V - E + static_cast<long>(faces.size()) == 2);
    }
}

TEST_CASE("delete edge") {
    EmbeddedNetwork pp = th::parallel_pair();
    EdgeId first = pp.edges().begin()->first;
    EmbeddedNetwork one = delete_edge(pp, first);
    one.validate();
    CHECK(one.edge_count() == 1);

    // deleting a cut edge must fail
    EmbeddedNetwork path = th::two_edge_path();
    CHECK_THROWS_AS(delete_edge(path, path.edges().begin()->first), Error);
    try {
        delete_edge(path, path.edges().begin()->first);
    } catch (const Error& e) {
        CHECK(e.kind() == Err::ConnectivityBroken);
    }
}

TEST_CASE("contract edge merges rotations and kinds") {
    EmbeddedNetwork path = th::two_edge_path();
    // contract the spike at p: the internal vertex joins the boundary
    EdgeId pr = 0;
    EmbeddedNetwork c = contract_edge(path, pr);
    c.validate();
    CHECK(c.vertex_count() == 2);
    CHECK(c.edge_count() == 1);
    CHECK(c.kind(0) == VertexKind::Boundary);
    CHECK(c.boundary_order() == std::vector<VertexId>{0, 1});

    // contracting one of a parallel pair leaves a self-loop
    EmbeddedNetwork pp = th::parallel_pair();
    // both endpoints boundary: rejected
    CHECK_THROWS_AS(contract_edge(pp, 0), Error);

    EmbeddedNetwork para = th::parallel_pair_example();
    EmbeddedNetwork pc = contract_edge(para, 2);  // c-d edge, d internal
    pc.validate();
    CHECK(pc.is_self_loop(3));

    // self-loop contraction is rejected
    CHECK_THROWS_AS(contract_edge(pc, 3), Error);
}

TEST_CASE("contract then spike count in a four periodic graph") {
    EmbeddedNetwork pi = four_periodic(4);
    auto cls = classify_edges(pi);
    EdgeId spike = -1;
    for (auto& [eid, c] : cls)
        if (c == EdgeClass::BoundarySpike) spike = eid;
    REQUIRE(spike != -1);
    auto before = pi.vertex_count();
    EmbeddedNetwork c = contract_edge(pi, spike);
    c.validate();
    CHECK(c.vertex_count() == before - 1);
    // the former internal ring vertex is now a circle vertex
    CHECK(c.boundary_order().size() == pi.boundary_order().size());
}

TEST_CASE("delete then re-insert at the same positions is the identity") {
    EmbeddedNetwork net = th::parallel_pair_example();
    EdgeId e = 5;  // the a-c edge
    const auto ed = net.edge(e);
    const auto& ra = net.rotation(ed.u);
    const auto& rc = net.rotation(ed.v);
    std::size_t pu = static_cast<std::size_t>(
        std::find(ra.begin(), ra.end(), Dart{e, 0}) - ra.begin());
    std::size_t pv = static_cast<std::size_t>(
        std::find(rc.begin(), rc.end(), Dart{e, 1}) - rc.begin());
    EmbeddedNetwork cut = delete_edge(net, e);
    EmbeddedNetwork back = cut;
    EdgeId e2 = back.add_edge(ed.u, ed.v, ed.conductance, e);
    back.insert_dart(ed.u, pu, Dart{e2, 0});
    back.insert_dart(ed.v, pv, Dart{e2, 1});
    back.validate();
    CHECK(back == net);
}

TEST_CASE("insert star") {
    EmbeddedNetwork tri = four_periodic(3);
    auto faces = trace_faces(tri);
    int inner = -1;
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (!faces[i].is_outer) inner = static_cast<int>(i);
    REQUIRE(inner >= 0);
    std::vector<VertexId> corners;
    for (const auto& c : faces[static_cast<std::size_t>(inner)].corners)
        corners.push_back(c.vertex);

    EmbeddedNetwork xi = insert_star(tri, faces[static_cast<std::size_t>(inner)], corners);
    xi.validate();
    CHECK(xi.vertex_count() == tri.vertex_count() + 1);
    CHECK(xi.edge_count() == tri.edge_count() + 3);
    CHECK(xi.is_rnpd());
    CHECK(xi == spider(3));

    // single attach vertex: an antenna
    EmbeddedNetwork ant = insert_star(tri, faces[static_cast<std::size_t>(inner)], {corners[1]});
    ant.validate();
    CHECK(ant.degree(*ant.interior_boundary()) == 1);

    CHECK_THROWS_AS(insert_star(tri, faces[static_cast<std::size_t>(inner)], {99}), Error);
    try {
        insert_star(tri, faces[static_cast<std::size_t>(inner)], {99});
    } catch (const Error& e) {
        CHECK(e.kind() == Err::AttachNotOnFace);
    }
    // outer face is rejected
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (faces[i].is_outer) CHECK_THROWS_AS(insert_star(tri, faces[i], corners), Error);
}

TEST_CASE("star insertion size bookkeeping on polygons") {
    for (int n = 3; n <= 6; ++n) {
        EmbeddedNetwork pi = four_periodic(n);
        auto faces = trace_faces(pi);
        const auto& center = faces[static_cast<std::size_t>(center_face_index(pi, n))];
        std::vector<VertexId> corners;
        for (const auto& c : center.corners) corners.push_back(c.vertex);
        EmbeddedNetwork starred = insert_star(pi, center, corners);
        starred.validate();
        CHECK(starred.vertex_count() == pi.vertex_count() + 1);
        CHECK(starred.edge_count() == pi.edge_count() + static_cast<std::size_t>(n));
    }
}

TEST_CASE("restrictions") {
    EmbeddedNetwork net = th::parallel_pair_example();
    std::vector<VertexId> all{0, 1, 2, 3};
    CHECK(restrict_strong(net, all) == net);

    // weak restriction to the interior vertex set recovers the network when
    // every edge touches an internal vertex
    EmbeddedNetwork path = th::two_edge_path();
    CHECK(restrict_weak(path, {2}) == path);

    // with a boundary-boundary chord present, exactly that chord is dropped
    EmbeddedNetwork w = restrict_weak(net, {2, 3});
    CHECK(w.vertex_count() == net.vertex_count());
    CHECK(w.edge_count() == net.edge_count() - 1);
    CHECK_FALSE(w.has_edge(5));

    // strong restriction to the interior set keeps only interior-interior edges
    EmbeddedNetwork s = restrict_strong(net, {2, 3});
    CHECK(s.vertex_count() == 2);
    CHECK(s.edge_count() == 0);
    CHECK(s.kind(2) == VertexKind::Boundary);

    CHECK_THROWS_AS(restrict_strong(net, {}), Error);

    // restricting a spider to its center keeps a single vertex, no edges
    EmbeddedNetwork xi = spider(3);
    EmbeddedNetwork just_b = restrict_strong(xi, {*xi.interior_boundary()});
    CHECK(just_b.vertex_count() == 1);
    CHECK(just_b.edge_count() == 0);
    CHECK(just_b.interior_boundary().has_value());
}

TEST_CASE("restriction boundary promotion follows adjacency") {
    EmbeddedNetwork pi = four_periodic(7);
    // inner ring only: all its vertices touch the outer ring, so all promote
    std::vector<VertexId> ring1;
    for (int i = 0; i < 7; ++i) ring1.push_back(i);
    EmbeddedNetwork s = restrict_strong(pi, ring1);
    for (auto& [vid, vd] : s.vertices()) {
        (void)vid;
        CHECK(vd.kind == VertexKind::Boundary);
    }
    CHECK(s.edge_count() == 7);
}

TEST_CASE("classify edges on the small polygons") {
    auto count = [](const std::map<EdgeId, EdgeClass>& cls, EdgeClass want) {
        int k = 0;
        for (auto& [e, c] : cls)
            if (c == want) ++k;
        return k;
    };

    auto c3 = classify_edges(four_periodic(3));
    CHECK(count(c3, EdgeClass::BoundaryEdge) == 3);
    CHECK(count(c3, EdgeClass::BoundarySpike) == 0);

    auto c4 = classify_edges(four_periodic(4));
    CHECK(count(c4, EdgeClass::BoundarySpike) == 2);
    CHECK(count(c4, EdgeClass::BoundaryEdge) == 1);
    CHECK(count(c4, EdgeClass::PseudoBoundaryEdge) == 2);
    CHECK(count(c4, EdgeClass::Plain) == 1);

    auto c6 = classify_edges(four_periodic(6));
    CHECK(count(c6, EdgeClass::BoundaryEdge) == 3);
    CHECK(count(c6, EdgeClass::BoundarySpike) == 2);
    CHECK(count(c6, EdgeClass::BoundaryPseudoSpike) == 2);

    auto c8 = classify_edges(four_periodic(8));
    CHECK(count(c8, EdgeClass::BoundarySpike) == 4);
    CHECK(count(c8, EdgeClass::PseudoBoundaryEdge) == 2);
    CHECK(count(c8, EdgeClass::BoundaryEdge) == 3);
}

TEST_CASE("spike count invariant for n divisible by four") {
    for (int n : {4, 8, 12}) {
        auto cls = classify_edges(four_periodic(n));
        int spikes = 0;
        for (auto& [e, c] : cls)
            if (c == EdgeClass::BoundarySpike) ++spikes;
        CHECK(spikes == n / 2);
    }
}

TEST_CASE("reverse reductions") {
    EmbeddedNetwork net = th::single_edge(Rational(1, 2));
    EmbeddedNetwork split = split_edge(net, 0, Rational(1), Rational(1));
    split.validate();
    CHECK(split.vertex_count() == 3);
    CHECK_THROWS(split_edge(net, 0, Rational(1), Rational(2)));

    EmbeddedNetwork par = split_parallel(th::single_edge(Rational(5)), 0, Rational(2), Rational(3));
    par.validate();
    CHECK(par.edge_count() == 2);

    EmbeddedNetwork lo = insert_loop(net, 0, 0, Rational(4));
    lo.validate();
    CHECK(lo.is_self_loop(1));

    EmbeddedNetwork pe = insert_pendant(net, 1, 1, Rational(2));
    pe.validate();
    CHECK(pe.vertex_count() == 3);
}
