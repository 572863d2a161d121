#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rigidlink/graph.hpp"

namespace rigidlink {

/// d-dimensional coordinates for every vertex, flattened: vertex v owns
/// coords[v*dim .. v*dim+dim-1].
struct Realization {
    int dim = 0;
    std::vector<double> coords;

    double coord(int v, int axis) const {
        return coords[static_cast<size_t>(v) * static_cast<size_t>(dim) + static_cast<size_t>(axis)];
    }
};

/// Rigidity matrix of (G,p): one row per edge in canonical order, d|V|
/// columns. The row of edge uv carries p(u)-p(v) in u's columns and
/// p(v)-p(u) in v's columns.
std::vector<std::vector<double>> rigidity_matrix(const Graph& g, const Realization& p);

struct RankOracleReport {
    int rank = 0;
    uint64_t modulus = 0;
    uint64_t seed = 0;
    int repetitions = 0;
};

/// Rank of the rigidity matrix at random coordinates drawn from GF(p),
/// p = 2^61 - 1, computed by exact elimination and maximized over
/// `repetitions` independent draws (at least 2). Equals the generic rank
/// except with probability <= |E| * d|V| / p per repetition.
RankOracleReport generic_rank(const Graph& g, int dim, uint64_t seed, int repetitions = 2);

/// Debug-only floating route: double-precision elimination with a pivot
/// tolerance. Subject to the usual floating rank ambiguity; the exact
/// field rank above is the authoritative one.
int generic_rank_float(const Graph& g, int dim, uint64_t seed);

/// Default seed used when the caller does not override it (the CLI maps
/// RIGIDLINK_SEED onto this).
constexpr uint64_t kDefaultOracleSeed = 0x5eed2d11;

struct EquivalenceWitness {
    Realization p;
    Realization q;
    double residual = 0.0;      // max relative squared-length error over edges
    double distance_gap = 0.0;  // | ||q(u)-q(v)|| - ||p(u)-p(v)|| |
    int trial = 0;
};

/// Searches for an equivalent realization of a random generic (G,p) that
/// changes the u-v distance: per trial, multi-start damped least squares on
/// the squared edge lengths from a random initialization. A returned witness
/// proves {u,v} is not globally linked in that realization; absence of a
/// witness proves nothing. Limits: dim in {1,2,3}, |V| <= 12.
std::optional<EquivalenceWitness> equivalence_sampler(const Graph& g, int u, int v, int dim,
                                                      int trials, uint64_t seed);

constexpr double kSamplerResidualTolerance = 1e-10;
constexpr double kSamplerDistanceGap = 1e-4;

}  // namespace rigidlink
