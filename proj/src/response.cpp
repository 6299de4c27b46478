#include "disknet/response.hpp"

#include <algorithm>

namespace disknet {

std::size_t ResponseMatrix::index_of(VertexId v) const {
    auto it = std::find(boundary_map.begin(), boundary_map.end(), v);
    if (it == boundary_map.end()) fail(Err::Domain, "vertex not in response index map");
    return static_cast<std::size_t>(it - boundary_map.begin());
}

KirchhoffMatrix kirchhoff(const EmbeddedNetwork& net) {
    if (!net.connected()) fail(Err::Disconnected, "kirchhoff of disconnected network");
    KirchhoffMatrix K;
    K.index_map = net.boundary_ids();
    K.n_boundary = K.index_map.size();
    for (const auto& [vid, vd] : net.vertices())
        if (vd.kind == VertexKind::Internal) K.index_map.push_back(vid);
    const std::size_t m = K.index_map.size();
    std::map<VertexId, std::size_t> pos;
    for (std::size_t i = 0; i < m; ++i) pos[K.index_map[i]] = i;

    K.m = RationalMatrix(m, m);
    for (const auto& [eid, ed] : net.edges()) {
        (void)eid;
        if (ed.u == ed.v) continue;  // self-loops carry no boundary-visible current
        std::size_t i = pos.at(ed.u), j = pos.at(ed.v);
        K.m(i, j) += ed.conductance;
        K.m(j, i) += ed.conductance;
        K.m(i, i) -= ed.conductance;
        K.m(j, j) -= ed.conductance;
    }
    return K;
}

namespace {

template <typename T>
T from_rational(const Rational& r);

template <>
Rational from_rational<Rational>(const Rational& r) {
    return r;
}

template <>
double from_rational<double>(const Rational& r) {
    return r.to_double();
}

template <typename T>
Matrix<T> response_matrix(const KirchhoffMatrix& K) {
    const std::size_t n = K.n_boundary;
    const std::size_t m = K.index_map.size();
    Matrix<T> A(n, n), B(n, m - n), C(m - n, m - n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) A(i, j) = from_rational<T>(K.m(i, j));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = n; j < m; ++j) B(i, j - n) = from_rational<T>(K.m(i, j));
    for (std::size_t i = n; i < m; ++i)
        for (std::size_t j = n; j < m; ++j) C(i - n, j - n) = from_rational<T>(K.m(i, j));
    return schur_complement(A, B, C);
}

}  // namespace

ResponseMatrix response(const EmbeddedNetwork& net) {
    KirchhoffMatrix K = kirchhoff(net);
    ResponseMatrix lam;
    lam.boundary_map.assign(K.index_map.begin(),
                            K.index_map.begin() + static_cast<std::ptrdiff_t>(K.n_boundary));
    lam.m = response_matrix<Rational>(K);
    return lam;
}

Matrix<double> response_double(const EmbeddedNetwork& net) {
    return response_matrix<double>(kirchhoff(net));
}

PotentialSolution solve_dirichlet(const EmbeddedNetwork& net, const std::vector<Rational>& u) {
    KirchhoffMatrix K = kirchhoff(net);
    const std::size_t n = K.n_boundary;
    const std::size_t m = K.index_map.size();
    if (u.size() != n) fail(Err::ShapeMismatch, "one potential per boundary vertex required");

    PotentialSolution sol;
    sol.boundary_map.assign(K.index_map.begin(), K.index_map.begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t i = 0; i < n; ++i) sol.potential[K.index_map[i]] = u[i];

    if (m > n) {
        // interior Kirchhoff system: C phi = -B^T u
        RationalMatrix C(m - n, m - n);
        for (std::size_t i = n; i < m; ++i)
            for (std::size_t j = n; j < m; ++j) C(i - n, j - n) = K.m(i, j);
        std::vector<Rational> rhs(m - n, Rational(0));
        for (std::size_t i = n; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) rhs[i - n] -= K.m(i, j) * u[j];
        std::vector<Rational> phi = solve(C, rhs);
        for (std::size_t i = n; i < m; ++i) sol.potential[K.index_map[i]] = phi[i - n];
    }

    for (const auto& [eid, ed] : net.edges()) {
        Rational v = sol.potential.at(ed.u) - sol.potential.at(ed.v);
        sol.voltage[eid] = v;
        sol.current[eid] = v * ed.conductance;
    }
    sol.boundary_current.assign(n, Rational(0));
    std::map<VertexId, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i) pos[K.index_map[i]] = i;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            sol.boundary_current[i] += K.m(i, j) * sol.potential.at(K.index_map[j]);
    return sol;
}

ResponseMatrix peel_boundary_edge(const ResponseMatrix& lam, VertexId p, VertexId q,
                                  const Rational& c) {
    if (p == q) fail(Err::Domain, "peel_boundary_edge needs distinct boundary vertices");
    ResponseMatrix out = lam;
    std::size_t i = lam.index_of(p), j = lam.index_of(q);
    out.m(i, i) += c;
    out.m(j, j) += c;
    out.m(i, j) -= c;
    out.m(j, i) -= c;
    return out;
}

ResponseMatrix peel_boundary_spike(const ResponseMatrix& lam, VertexId p, const Rational& xi) {
    if (!xi.is_positive()) fail(Err::Domain, "spike conductance must be positive");
    std::size_t ip = lam.index_of(p);
    if (lam.m(ip, ip).is_zero())
        fail(Err::SpikeSingular, "no current enters this vertex; its spike is a pendant");
    Rational s = xi + lam.m(ip, ip);
    if (s.is_zero())
        fail(Err::SpikeSingular, "spike conductance equals the diagonal bound at this vertex");
    const std::size_t n = lam.m.rows();
    ResponseMatrix out = lam;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            if (j == ip && k == ip)
                out.m(j, k) = xi - xi * xi / s;
            else if (j == ip)
                out.m(j, k) = xi * lam.m(ip, k) / s;
            else if (k == ip)
                out.m(j, k) = xi * lam.m(j, ip) / s;
            else
                out.m(j, k) = lam.m(j, k) - lam.m(ip, j) * lam.m(ip, k) / s;
        }
    }
    return out;
}

}  // namespace disknet
