#include "doctest.h"

#include "disknet/generators.hpp"
#include "disknet/response.hpp"
#include "helpers.hpp"

using namespace disknet;
namespace th = disknet::testing;
using th::mat;

TEST_CASE("kirchhoff matrix of the worked example") {
    KirchhoffMatrix K = kirchhoff(th::parallel_pair_example());
    CHECK(K.n_boundary == 2);
    CHECK(K.m == mat(4, 4,
                     {"-5", "1", "1", "3",
                      "1", "-5", "2", "2",
                      "1", "2", "-3", "0",
                      "3", "2", "0", "-5"}));
    CHECK(K.m.is_symmetric());
}

TEST_CASE("kirchhoff edge cases") {
    KirchhoffMatrix K = kirchhoff(th::single_edge(Rational(7)));
    CHECK(K.m == mat(2, 2, {"-7", "7", "7", "-7"}));

    // self-loops contribute nothing
    EmbeddedNetwork withloop = insert_loop(th::single_edge(Rational(7)), 0, 0, Rational(3));
    CHECK(kirchhoff(withloop).m == K.m);

    EmbeddedNetwork disc;
    disc.add_vertex(VertexKind::Boundary);
    disc.add_vertex(VertexKind::Boundary);
    CHECK_THROWS_AS(kirchhoff(disc), Error);
}

TEST_CASE("response of the worked example") {
    // Two terminals: the response is [[-g, g], [g, -g]] with g the effective
    // conductance, here 1 + 1*2/(1+2) + 3*2/(3+2) = 43/15 by series/parallel
    // reduction.
    ResponseMatrix lam = response(th::parallel_pair_example());
    CHECK(lam.m == mat(2, 2, {"-43/15", "43/15", "43/15", "-43/15"}));
    CHECK(lam.boundary_map == std::vector<VertexId>{0, 1});
    CHECK(lam.m(0, 0) + lam.m(0, 1) == Rational(0));
}

TEST_CASE("response equals kirchhoff when no internal vertices") {
    // all-boundary star: spider(3) has no Internal vertices at all
    EmbeddedNetwork xi3 = spider(3);
    ResponseMatrix lam = response(xi3);
    KirchhoffMatrix K = kirchhoff(xi3);
    CHECK(lam.m == K.m);
    CHECK(lam.m == mat(4, 4,
                       {"-3", "1", "1", "1",
                        "1", "-3", "1", "1",
                        "1", "1", "-3", "1",
                        "1", "1", "1", "-3"}));
}

TEST_CASE("response invariants on generated networks") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        RandomNetworkParams p;
        p.n_boundary = 3 + static_cast<int>(seed % 3);
        p.n_internal = 2 + static_cast<int>(seed % 4);
        EmbeddedNetwork net = random_network(p, seed);
        net.validate();
        ResponseMatrix lam = response(net);
        const std::size_t n = lam.m.rows();
        CHECK(lam.m.is_symmetric());
        for (std::size_t i = 0; i < n; ++i) {
            Rational row(0);
            for (std::size_t j = 0; j < n; ++j) row += lam.m(i, j);
            CHECK(row == Rational(0));
            CHECK(lam.m(i, i).is_negative());
        }
    }
}

TEST_CASE("response is invariant under internal relabeling") {
    EmbeddedNetwork net = th::parallel_pair_example();
    // rebuild with internal ids swapped (b=3, d=2)
    EmbeddedNetwork alt;
    alt.add_vertex(VertexKind::Boundary, 0);
    alt.add_vertex(VertexKind::Boundary, 1);
    alt.add_vertex(VertexKind::Internal, 2);  // plays d
    alt.add_vertex(VertexKind::Internal, 3);  // plays b
    alt.add_edge(0, 3, Rational(1), 0);
    alt.add_edge(3, 1, Rational(2), 1);
    alt.add_edge(1, 2, Rational(1), 2);
    alt.add_edge(1, 2, Rational(1), 3);
    alt.add_edge(0, 2, Rational(3), 4);
    alt.add_edge(0, 1, Rational(1), 5);
    alt.set_rotation(0, {Dart{0, 0}, Dart{5, 0}, Dart{4, 0}});
    alt.set_rotation(1, {Dart{3, 0}, Dart{2, 0}, Dart{5, 1}, Dart{1, 1}});
    alt.set_rotation(3, {Dart{1, 0}, Dart{0, 1}});
    alt.set_rotation(2, {Dart{4, 1}, Dart{2, 1}, Dart{3, 1}});
    alt.set_boundary_order({0, 1});
    alt.validate();
    CHECK(response(alt).m == response(net).m);
}

TEST_CASE("dirichlet solves") {
    EmbeddedNetwork net = th::parallel_pair_example();
    SUBCASE("constant potentials drive no current") {
        auto sol = solve_dirichlet(net, {Rational(5), Rational(5)});
        for (const auto& c : sol.boundary_current) CHECK(c == Rational(0));
        for (const auto& [e, i] : sol.current) CHECK(i == Rational(0));
    }
    SUBCASE("unit potential at the first terminal reads off a response column") {
        auto sol = solve_dirichlet(net, {Rational(1), Rational(0)});
        CHECK(sol.boundary_current[0] == Rational(-43, 15));
        CHECK(sol.boundary_current[1] == Rational(43, 15));
    }
    SUBCASE("series pair splits the potential") {
        auto sol = solve_dirichlet(th::two_edge_path(), {Rational(1), Rational(0)});
        CHECK(sol.potential.at(2) == Rational(1, 2));
    }
    SUBCASE("currents match the response map for random potentials") {
        ResponseMatrix lam = response(net);
        std::vector<Rational> u{Rational(3, 7), Rational(-2, 5)};
        auto sol = solve_dirichlet(net, u);
        for (std::size_t i = 0; i < 2; ++i) {
            Rational expect(0);
            for (std::size_t j = 0; j < 2; ++j) expect += lam.m(i, j) * u[j];
            CHECK(sol.boundary_current[i] == expect);
        }
    }
    SUBCASE("kirchhoff current law at internal vertices") {
        auto sol = solve_dirichlet(net, {Rational(1), Rational(0)});
        // vertex 2 (internal): edges 0 (a-b) and 1 (b-c)
        Rational into_b = sol.current.at(0) - sol.current.at(1);
        CHECK(into_b == Rational(0));
    }
}

TEST_CASE("peel boundary edge") {
    ResponseMatrix lam = response(th::parallel_pair_example());
    SUBCASE("zero conductance is a no-op") {
        CHECK(peel_boundary_edge(lam, 0, 1, Rational(0)).m == lam.m);
    }
    SUBCASE("peeling one of a parallel pair leaves the other") {
        EmbeddedNetwork pp = th::parallel_pair(Rational(2), Rational(5));
        ResponseMatrix both = response(pp);
        ResponseMatrix peeled = peel_boundary_edge(both, 0, 1, Rational(2));
        CHECK(peeled.m == response(th::single_edge(Rational(5))).m);
    }
    SUBCASE("forward oracle: add an extra circle chord, peel it back off") {
        EmbeddedNetwork net = th::parallel_pair_example();
        EmbeddedNetwork bigger = net;
        EdgeId extra = bigger.add_edge(0, 1, Rational(1));
        bigger.insert_dart(0, 2, Dart{extra, 0});
        bigger.insert_dart(1, 2, Dart{extra, 1});
        bigger.validate();
        ResponseMatrix peeled = peel_boundary_edge(response(bigger), 0, 1, Rational(1));
        CHECK(peeled.m == response(net).m);
    }
}

TEST_CASE("peel boundary spike") {
    SUBCASE("two-edge path contracts to a single edge") {
        ResponseMatrix lam = response(th::two_edge_path());
        CHECK(lam.m == mat(2, 2, {"-1/2", "1/2", "1/2", "-1/2"}));
        ResponseMatrix peeled = peel_boundary_spike(lam, 0, Rational(1));
        CHECK(peeled.m == mat(2, 2, {"-1", "1", "1", "-1"}));
    }
    SUBCASE("matches the forward model on a spider spike") {
        EmbeddedNetwork xi4 = spider(4);
        std::mt19937_64 rng(99);
        EmbeddedNetwork net = with_random_conductances(xi4, rng);
        auto cls = classify_edges(net);
        EdgeId spike = -1;
        for (auto& [e, c] : cls)
            if (c == EdgeClass::BoundarySpike) {
                spike = e;
                break;
            }
        REQUIRE(spike != -1);
        VertexId tip = net.is_boundary_kind(net.edge(spike).u) ? net.edge(spike).u
                                                               : net.edge(spike).v;
        ResponseMatrix peeled =
            peel_boundary_spike(response(net), tip, net.edge(spike).conductance);
        ResponseMatrix oracle = response(contract_edge(net, spike));
        CHECK(peeled.m == oracle.m);
        CHECK(peeled.boundary_map == oracle.boundary_map);
    }
    SUBCASE("pendant spikes are rejected") {
        EmbeddedNetwork pend;
        VertexId p = pend.add_vertex(VertexKind::Boundary);
        VertexId w = pend.add_vertex(VertexKind::Internal);
        EdgeId e = pend.add_edge(p, w, Rational(2));
        pend.set_rotation(p, {Dart{e, 0}});
        pend.set_rotation(w, {Dart{e, 1}});
        pend.set_boundary_order({p});
        ResponseMatrix lam = response(pend);
        CHECK(lam.m(0, 0) == Rational(0));
        CHECK_THROWS_AS(peel_boundary_spike(lam, p, Rational(2)), Error);
    }
}

TEST_CASE("peels invert the forward model on random networks") {
    std::mt19937_64 rng(123);
    int edge_checked = 0, spike_checked = 0;
    for (std::uint64_t seed = 0; seed < 120 && (edge_checked < 100 || spike_checked < 100);
         ++seed) {
        RandomNetworkParams p;
        p.n_boundary = 3 + static_cast<int>(seed % 4);
        p.n_internal = 1 + static_cast<int>(seed % 3);
        EmbeddedNetwork net = random_network(p, seed + 1000);

        // boundary edge: delete and compare
        for (const auto& [eid, ed] : net.edges()) {
            if (!(net.is_boundary_kind(ed.u) && net.is_boundary_kind(ed.v)) || ed.u == ed.v)
                continue;
            EmbeddedNetwork cut;
            try {
                cut = delete_edge(net, eid);
            } catch (const Error&) {
                continue;
            }
            ResponseMatrix peeled = peel_boundary_edge(response(net), ed.u, ed.v, ed.conductance);
            CHECK(peeled.m == response(cut).m);
            ++edge_checked;
            break;
        }
        // boundary spike: contract and compare
        auto cls = classify_edges(net);
        for (auto& [eid, c] : cls) {
            if (c != EdgeClass::BoundarySpike) continue;
            const auto& ed = net.edge(eid);
            VertexId tip = (net.is_boundary_kind(ed.u) && net.degree(ed.u) == 1) ? ed.u : ed.v;
            if (!(net.is_boundary_kind(tip) && net.degree(tip) == 1)) continue;
            VertexId nb = net.other_endpoint(eid, tip);
            if (net.is_boundary_kind(nb) || net.degree(nb) <= 1) continue;
            ResponseMatrix peeled = peel_boundary_spike(response(net), tip, ed.conductance);
            CHECK(peeled.m == response(contract_edge(net, eid)).m);
            ++spike_checked;
            break;
        }
    }
    // the random pool must actually exercise both operations
    CHECK(edge_checked >= 30);
    CHECK(spike_checked >= 5);
}
