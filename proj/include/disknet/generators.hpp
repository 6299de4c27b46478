#ifndef DISKNET_GENERATORS_HPP
#define DISKNET_GENERATORS_HPP

#include <cstdint>
#include <random>

#include "disknet/faces.hpp"
#include "disknet/network.hpp"

namespace disknet {

/// 4-periodic graph: floor((n+1)/4) concentric n-gon layers with the
/// residue-dependent outer decoration (spikes / boundary-edge chain), all
/// outermost vertices boundary, unit conductances. Layer-1 (innermost) ring
/// vertices get ids 0..n-1.
EmbeddedNetwork four_periodic(int n);

/// Spider graph: four_periodic(n) with an interior boundary vertex inserted
/// into the center face and joined to every vertex on it.
EmbeddedNetwork spider(int n);

/// Index into trace_faces(four_periodic_like) of the center face (the one
/// bounded by the layer-1 ring).
int center_face_index(const EmbeddedNetwork& net, int n);

struct RandomNetworkParams {
    int n_boundary = 4;
    int n_internal = 3;
    int delete_attempts = 3;
    int parallel_attempts = 0;
    int loop_attempts = 0;
    int pendant_attempts = 0;
    bool random_conductances = true;
    int max_numerator = 12;
    int max_denominator = 6;
};

/// Seed-deterministic random planar network: triangulates a boundary polygon
/// by repeated star insertion into inner faces, then subsamples edges
/// (skipping cuts), so an embedding holds by construction.
EmbeddedNetwork random_network(const RandomNetworkParams& params, std::uint64_t seed);

/// Copy with fresh random positive rational conductances.
EmbeddedNetwork with_random_conductances(const EmbeddedNetwork& net, std::mt19937_64& rng,
                                         int max_numerator = 12, int max_denominator = 6);

Rational random_positive_rational(std::mt19937_64& rng, int max_numerator, int max_denominator);

/// Bounded sampling that stays deterministic across standard libraries.
inline std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t k) { return rng() % k; }

/// insert_star-like helper placing an Internal vertex (used by the random
/// generator's triangulation step).
EmbeddedNetwork insert_internal_star(const EmbeddedNetwork& net, const Face& face);

}  // namespace disknet

#endif
