#ifndef DISKNET_RESPONSE_HPP
#define DISKNET_RESPONSE_HPP

#include <map>
#include <vector>

#include "disknet/matrix.hpp"
#include "disknet/network.hpp"

namespace disknet {

/// Kirchhoff matrix with its vertex ordering: boundary vertices first (circle
/// order, then the interior boundary vertex), internal vertices after.
struct KirchhoffMatrix {
    RationalMatrix m;
    std::size_t n_boundary = 0;
    std::vector<VertexId> index_map;  // row/col -> vertex id
};

struct ResponseMatrix {
    RationalMatrix m;
    std::vector<VertexId> boundary_map;  // row/col -> boundary vertex id

    std::size_t index_of(VertexId v) const;
};

struct PotentialSolution {
    std::map<VertexId, Rational> potential;
    std::map<EdgeId, Rational> voltage;  // potential(u) - potential(v), edge end order
    std::map<EdgeId, Rational> current;  // voltage * conductance
    std::vector<Rational> boundary_current;  // net current into each boundary vertex
    std::vector<VertexId> boundary_map;
};

KirchhoffMatrix kirchhoff(const EmbeddedNetwork& net);

/// Exact response matrix: the Schur complement of the Kirchhoff matrix onto
/// the boundary block. Equals the Kirchhoff matrix when there are no
/// internal vertices.
ResponseMatrix response(const EmbeddedNetwork& net);

/// Same computation in doubles, for numeric sweeps.
Matrix<double> response_double(const EmbeddedNetwork& net);

/// Boundary potentials are given in boundary_ids() order.
PotentialSolution solve_dirichlet(const EmbeddedNetwork& net, const std::vector<Rational>& u);

/// Response update for deleting boundary edge (p,q) of conductance c: only
/// the four entries touching p and q change.
ResponseMatrix peel_boundary_edge(const ResponseMatrix& lam, VertexId p, VertexId q,
                                  const Rational& c);

/// Response update for contracting the boundary spike of conductance xi at
/// boundary vertex p (a rank-one rational update). Throws SpikeSingular when
/// xi + lambda_pp vanishes, which happens exactly for a pendant spike.
ResponseMatrix peel_boundary_spike(const ResponseMatrix& lam, VertexId p, const Rational& xi);

}  // namespace disknet

#endif
