#include "rigidlink/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace rigidlink {

namespace {

constexpr uint64_t kPrime = (uint64_t{1} << 61) - 1;  // Mersenne prime 2^61-1

uint64_t mul_mod(uint64_t a, uint64_t b) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % kPrime);
}

uint64_t sub_mod(uint64_t a, uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

uint64_t pow_mod(uint64_t base, uint64_t exp) {
    uint64_t result = 1;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base);
        base = mul_mod(base, base);
        exp >>= 1;
    }
    return result;
}

uint64_t inv_mod(uint64_t a) { return pow_mod(a, kPrime - 2); }

// Rejection sampling keeps the draw uniform and portable across standard
// library implementations (uniform_int_distribution is not).
uint64_t draw_below(std::mt19937_64& rng, uint64_t bound) {
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

int rank_mod_p(std::vector<std::vector<uint64_t>>& rows, int cols) {
    int rank = 0;
    int row_count = static_cast<int>(rows.size());
    for (int col = 0; col < cols && rank < row_count; ++col) {
        int pivot = -1;
        for (int r = rank; r < row_count; ++r) {
            if (rows[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
        uint64_t inv = inv_mod(rows[static_cast<size_t>(rank)][static_cast<size_t>(col)]);
        for (int r = rank + 1; r < row_count; ++r) {
            uint64_t factor = rows[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (factor == 0) continue;
            factor = mul_mod(factor, inv);
            auto& target = rows[static_cast<size_t>(r)];
            const auto& source = rows[static_cast<size_t>(rank)];
            for (int c = col; c < cols; ++c)
                target[static_cast<size_t>(c)] =
                    sub_mod(target[static_cast<size_t>(c)],
                            mul_mod(factor, source[static_cast<size_t>(c)]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::vector<std::vector<double>> rigidity_matrix(const Graph& g, const Realization& p) {
    int n = g.vertex_count();
    int d = p.dim;
    if (d < 1) throw PreconditionError("dimension must be at least 1");
    if (p.coords.size() != static_cast<size_t>(n) * static_cast<size_t>(d))
        throw PreconditionError("realization does not cover all vertices");

    std::vector<std::vector<double>> rows;
    rows.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges()) {
        std::vector<double> row(static_cast<size_t>(n) * static_cast<size_t>(d), 0.0);
        for (int axis = 0; axis < d; ++axis) {
            double diff = p.coord(u, axis) - p.coord(v, axis);
            row[static_cast<size_t>(u) * d + static_cast<size_t>(axis)] = diff;
            row[static_cast<size_t>(v) * d + static_cast<size_t>(axis)] = -diff;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

RankOracleReport generic_rank(const Graph& g, int dim, uint64_t seed, int repetitions) {
    if (dim < 1) throw PreconditionError("dimension must be at least 1");
    repetitions = std::max(repetitions, 2);

    int n = g.vertex_count();
    int cols = n * dim;
    RankOracleReport report{0, kPrime, seed, repetitions};
    if (g.edge_count() == 0 || n == 0) return report;

    for (int rep = 0; rep < repetitions; ++rep) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(rep + 1));
        std::vector<uint64_t> coords(static_cast<size_t>(cols));
        for (auto& c : coords) c = draw_below(rng, kPrime);

        std::vector<std::vector<uint64_t>> rows;
        rows.reserve(g.edges().size());
        for (const auto& [u, v] : g.edges()) {
            std::vector<uint64_t> row(static_cast<size_t>(cols), 0);
            for (int axis = 0; axis < dim; ++axis) {
                uint64_t pu = coords[static_cast<size_t>(u) * dim + static_cast<size_t>(axis)];
                uint64_t pv = coords[static_cast<size_t>(v) * dim + static_cast<size_t>(axis)];
                row[static_cast<size_t>(u) * dim + static_cast<size_t>(axis)] = sub_mod(pu, pv);
                row[static_cast<size_t>(v) * dim + static_cast<size_t>(axis)] = sub_mod(pv, pu);
            }
            rows.push_back(std::move(row));
        }
        report.rank = std::max(report.rank, rank_mod_p(rows, cols));
    }
    return report;
}

namespace {

double uniform_pm1(std::mt19937_64& rng) {
    // 53-bit mantissa draw in [-1, 1]
    return 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
}

}  // namespace

int generic_rank_float(const Graph& g, int dim, uint64_t seed) {
    if (dim < 1) throw PreconditionError("dimension must be at least 1");
    int n = g.vertex_count();
    if (g.edge_count() == 0 || n == 0) return 0;

    std::mt19937_64 rng(seed);
    Realization p{dim, std::vector<double>(static_cast<size_t>(n) * static_cast<size_t>(dim))};
    for (auto& c : p.coords) c = uniform_pm1(rng);
    std::vector<std::vector<double>> rows = rigidity_matrix(g, p);

    int cols = n * dim;
    int rank = 0;
    int row_count = static_cast<int>(rows.size());
    for (int col = 0; col < cols && rank < row_count; ++col) {
        int pivot = rank;
        for (int r = rank + 1; r < row_count; ++r)
            if (std::abs(rows[static_cast<size_t>(r)][static_cast<size_t>(col)]) >
                std::abs(rows[static_cast<size_t>(pivot)][static_cast<size_t>(col)]))
                pivot = r;
        if (std::abs(rows[static_cast<size_t>(pivot)][static_cast<size_t>(col)]) < 1e-9) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
        for (int r = rank + 1; r < row_count; ++r) {
            double factor = rows[static_cast<size_t>(r)][static_cast<size_t>(col)] /
                            rows[static_cast<size_t>(rank)][static_cast<size_t>(col)];
            if (factor == 0.0) continue;
            for (int c = col; c < cols; ++c)
                rows[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    factor * rows[static_cast<size_t>(rank)][static_cast<size_t>(c)];
        }
        ++rank;
    }
    return rank;
}

namespace {

struct LeastSquaresProblem {
    const Graph& g;
    int dim;
    std::vector<double> target;  // squared edge lengths of (G,p)

    double residual_entry(const std::vector<double>& q, size_t edge_index) const {
        const auto& [u, v] = g.edges()[edge_index];
        double sq = 0.0;
        for (int axis = 0; axis < dim; ++axis) {
            double diff = q[static_cast<size_t>(u) * dim + static_cast<size_t>(axis)] -
                          q[static_cast<size_t>(v) * dim + static_cast<size_t>(axis)];
            sq += diff * diff;
        }
        return sq - target[edge_index];
    }

    double max_relative_residual(const std::vector<double>& q) const {
        double worst = 0.0;
        for (size_t e = 0; e < g.edges().size(); ++e) {
            double rel = std::abs(residual_entry(q, e)) / std::max(1.0, target[e]);
            worst = std::max(worst, rel);
        }
        return worst;
    }
};

// Solves (A + lambda I) x = b for a small symmetric positive semidefinite A
// by Gaussian elimination with partial pivoting. Returns false when the
// damped system is still numerically singular.
bool solve_damped(std::vector<std::vector<double>> a, std::vector<double> b, double lambda,
                  std::vector<double>& x) {
    size_t n = b.size();
    for (size_t i = 0; i < n; ++i) a[i][i] += lambda;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        for (size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (std::abs(a[pivot][col]) < 1e-14) return false;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (size_t r = col + 1; r < n; ++r) {
            double factor = a[r][col] / a[col][col];
            if (factor == 0.0) continue;
            for (size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    x.assign(n, 0.0);
    for (size_t i = n; i-- > 0;) {
        double sum = b[i];
        for (size_t c = i + 1; c < n; ++c) sum -= a[i][c] * x[c];
        x[i] = sum / a[i][i];
    }
    return true;
}

// Levenberg-Marquardt on squared-edge-length residuals.
bool refine(const LeastSquaresProblem& problem, std::vector<double>& q) {
    const int dim = problem.dim;
    const size_t params = q.size();
    const auto& edges = problem.g.edges();
    double lambda = 1e-3;

    auto cost = [&](const std::vector<double>& point) {
        double total = 0.0;
        for (size_t e = 0; e < edges.size(); ++e) {
            double r = problem.residual_entry(point, e);
            total += r * r;
        }
        return total;
    };

    double current = cost(q);
    for (int iter = 0; iter < 300; ++iter) {
        // Normal equations J^T J and J^T r; rows of J are sparse (2*dim entries).
        std::vector<std::vector<double>> jtj(params, std::vector<double>(params, 0.0));
        std::vector<double> jtr(params, 0.0);
        for (size_t e = 0; e < edges.size(); ++e) {
            const auto& [u, v] = edges[e];
            double r = problem.residual_entry(q, e);
            std::vector<std::pair<size_t, double>> entries;
            entries.reserve(static_cast<size_t>(2 * dim));
            for (int axis = 0; axis < dim; ++axis) {
                double diff = q[static_cast<size_t>(u) * dim + static_cast<size_t>(axis)] -
                              q[static_cast<size_t>(v) * dim + static_cast<size_t>(axis)];
                entries.emplace_back(static_cast<size_t>(u) * dim + static_cast<size_t>(axis),
                                     2.0 * diff);
                entries.emplace_back(static_cast<size_t>(v) * dim + static_cast<size_t>(axis),
                                     -2.0 * diff);
            }
            for (const auto& [i, ji] : entries) {
                jtr[i] += ji * r;
                for (const auto& [j, jj] : entries) jtj[i][j] += ji * jj;
            }
        }

        bool stepped = false;
        for (int attempt = 0; attempt < 8 && !stepped; ++attempt) {
            std::vector<double> step;
            if (solve_damped(jtj, jtr, lambda, step)) {
                std::vector<double> candidate = q;
                for (size_t i = 0; i < params; ++i) candidate[i] -= step[i];
                double next = cost(candidate);
                if (next < current) {
                    q = std::move(candidate);
                    current = next;
                    lambda = std::max(lambda * 0.3, 1e-12);
                    stepped = true;
                }
            }
            if (!stepped) lambda *= 10.0;
        }
        if (!stepped) break;
        if (current < 1e-26) break;
    }
    return problem.max_relative_residual(q) <= kSamplerResidualTolerance;
}

double distance(const std::vector<double>& coords, int dim, int a, int b) {
    double sq = 0.0;
    for (int axis = 0; axis < dim; ++axis) {
        double diff = coords[static_cast<size_t>(a) * dim + static_cast<size_t>(axis)] -
                      coords[static_cast<size_t>(b) * dim + static_cast<size_t>(axis)];
        sq += diff * diff;
    }
    return std::sqrt(sq);
}

}  // namespace

std::optional<EquivalenceWitness> equivalence_sampler(const Graph& g, int u, int v, int dim,
                                                      int trials, uint64_t seed) {
    if (dim < 1 || dim > 3) throw PreconditionError("equivalence_sampler supports dim in {1,2,3}");
    if (g.vertex_count() > 12)
        throw PreconditionError("equivalence_sampler supports at most 12 vertices");
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw PreconditionError("vertices must be distinct");

    int n = g.vertex_count();
    std::mt19937_64 base_rng(seed);
    Realization p{dim, std::vector<double>(static_cast<size_t>(n) * static_cast<size_t>(dim))};
    for (auto& c : p.coords) c = uniform_pm1(base_rng);

    LeastSquaresProblem problem{g, dim, {}};
    problem.target.reserve(g.edges().size());
    for (const auto& [x, y] : g.edges()) {
        double sq = 0.0;
        for (int axis = 0; axis < dim; ++axis) {
            double diff = p.coord(x, axis) - p.coord(y, axis);
            sq += diff * diff;
        }
        problem.target.push_back(sq);
    }
    double reference = distance(p.coords, dim, u, v);

    for (int trial = 0; trial < trials; ++trial) {
        // Per-trial generator derived by counter, so trials are independent
        // of each other and reproducible individually.
        std::mt19937_64 rng(seed ^ (0xd1342543de82ef95ULL * static_cast<uint64_t>(trial + 1)));
        std::vector<double> q(p.coords.size());
        for (auto& c : q) c = uniform_pm1(rng);

        if (!refine(problem, q)) continue;
        double gap = std::abs(distance(q, dim, u, v) - reference);
        if (gap >= kSamplerDistanceGap) {
            EquivalenceWitness witness;
            witness.p = p;
            witness.q = Realization{dim, q};
            witness.residual = problem.max_relative_residual(q);
            witness.distance_gap = gap;
            witness.trial = trial;
            return witness;
        }
    }
    return std::nullopt;
}

}  // namespace rigidlink
