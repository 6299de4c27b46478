#ifndef DISKNET_TESTS_HELPERS_HPP
#define DISKNET_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "disknet/matrix.hpp"
#include "disknet/network.hpp"

namespace disknet::testing {

// Four-vertex cprn with a parallel pair: boundary a,c on the circle,
// internal b (top) and d (bottom).
//
//   ids: a=0, c=1, b=2, d=3
//   edges: 0 ab(1), 1 bc(2), 2 cd(1), 3 cd'(1), 4 ad(3), 5 ac(1)
inline EmbeddedNetwork parallel_pair_example() {
    EmbeddedNetwork net;
    VertexId a = net.add_vertex(VertexKind::Boundary);
    VertexId c = net.add_vertex(VertexKind::Boundary);
    VertexId b = net.add_vertex(VertexKind::Internal);
    VertexId d = net.add_vertex(VertexKind::Internal);
    EdgeId ab = net.add_edge(a, b, Rational(1));
    EdgeId bc = net.add_edge(b, c, Rational(2));
    EdgeId cd1 = net.add_edge(c, d, Rational(1));
    EdgeId cd2 = net.add_edge(c, d, Rational(1));
    EdgeId ad = net.add_edge(a, d, Rational(3));
    EdgeId ac = net.add_edge(a, c, Rational(1));
    net.set_rotation(a, {Dart{ab, 0}, Dart{ac, 0}, Dart{ad, 0}});
    net.set_rotation(c, {Dart{cd2, 0}, Dart{cd1, 0}, Dart{ac, 1}, Dart{bc, 1}});
    net.set_rotation(b, {Dart{bc, 0}, Dart{ab, 1}});
    net.set_rotation(d, {Dart{ad, 1}, Dart{cd1, 1}, Dart{cd2, 1}});
    net.set_boundary_order({a, c});
    return net;
}

// Five-vertex rnpd: boundary L,R on the circle, interior boundary C in the
// middle, internal T (top) and D (bottom).
//
//   ids: L=0, R=1, T=2, D=3, C=4
inline EmbeddedNetwork punctured_example() {
    EmbeddedNetwork net;
    VertexId L = net.add_vertex(VertexKind::Boundary);
    VertexId R = net.add_vertex(VertexKind::Boundary);
    VertexId T = net.add_vertex(VertexKind::Internal);
    VertexId D = net.add_vertex(VertexKind::Internal);
    VertexId C = net.add_vertex(VertexKind::InteriorBoundary);
    EdgeId lt = net.add_edge(L, T, Rational(2));
    EdgeId tr = net.add_edge(T, R, Rational(1));
    EdgeId rd = net.add_edge(R, D, Rational(7));
    EdgeId ld = net.add_edge(L, D, Rational(3));
    EdgeId lc = net.add_edge(L, C, Rational(1));
    EdgeId rc = net.add_edge(R, C, Rational(1));
    EdgeId ct = net.add_edge(C, T, Rational(1));
    EdgeId cd = net.add_edge(C, D, Rational(5));
    net.set_rotation(L, {Dart{lt, 0}, Dart{lc, 0}, Dart{ld, 0}});
    net.set_rotation(R, {Dart{rd, 0}, Dart{rc, 0}, Dart{tr, 1}});
    net.set_rotation(T, {Dart{tr, 0}, Dart{ct, 1}, Dart{lt, 1}});
    net.set_rotation(D, {Dart{ld, 1}, Dart{cd, 1}, Dart{rd, 1}});
    net.set_rotation(C, {Dart{ct, 0}, Dart{rc, 1}, Dart{cd, 0}, Dart{lc, 1}});
    net.set_boundary_order({L, R});
    net.set_interior_boundary(C);
    return net;
}

// Path p - r - q with unit conductances; p,q boundary, r internal.
inline EmbeddedNetwork two_edge_path(Rational first = Rational(1), Rational second = Rational(1)) {
    EmbeddedNetwork net;
    VertexId p = net.add_vertex(VertexKind::Boundary);
    VertexId q = net.add_vertex(VertexKind::Boundary);
    VertexId r = net.add_vertex(VertexKind::Internal);
    EdgeId pr = net.add_edge(p, r, first);
    EdgeId rq = net.add_edge(r, q, second);
    net.set_rotation(p, {Dart{pr, 0}});
    net.set_rotation(q, {Dart{rq, 1}});
    net.set_rotation(r, {Dart{pr, 1}, Dart{rq, 0}});
    net.set_boundary_order({p, q});
    return net;
}

// Single boundary edge p - q.
inline EmbeddedNetwork single_edge(Rational c = Rational(1)) {
    EmbeddedNetwork net;
    VertexId p = net.add_vertex(VertexKind::Boundary);
    VertexId q = net.add_vertex(VertexKind::Boundary);
    EdgeId e = net.add_edge(p, q, c);
    net.set_rotation(p, {Dart{e, 0}});
    net.set_rotation(q, {Dart{e, 1}});
    net.set_boundary_order({p, q});
    return net;
}

// Two boundary vertices joined by a parallel pair.
inline EmbeddedNetwork parallel_pair(Rational c1 = Rational(1), Rational c2 = Rational(1)) {
    EmbeddedNetwork net;
    VertexId p = net.add_vertex(VertexKind::Boundary);
    VertexId q = net.add_vertex(VertexKind::Boundary);
    EdgeId e1 = net.add_edge(p, q, c1);
    EdgeId e2 = net.add_edge(p, q, c2);
    net.set_rotation(p, {Dart{e1, 0}, Dart{e2, 0}});
    net.set_rotation(q, {Dart{e2, 1}, Dart{e1, 1}});
    net.set_boundary_order({p, q});
    return net;
}

inline RationalMatrix mat(std::size_t rows, std::size_t cols,
                          const std::vector<std::string>& entries) {
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational::parse(entries[i * cols + j]);
    return m;
}

}  // namespace disknet::testing

#endif
