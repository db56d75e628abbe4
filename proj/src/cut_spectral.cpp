#include "ergo/cut_spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

#include "ergo/errors.hpp"

namespace ergo {

namespace {

constexpr int kBruteLimit = 24;
constexpr int kDenseLimit = 2048;

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> mask(static_cast<std::size_t>(g.order()), 0);
    for (int u = 0; u < g.order(); ++u)
        for (int v : g.neighbors(u)) mask[static_cast<std::size_t>(u)] |= 1u << v;
    return mask;
}

std::vector<int> mask_to_subset(std::uint32_t mask, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) out.push_back(v);
    return out;
}

// Walks all 2^n subsets in Gray order, maintaining crossing count and
// volume incrementally; visit(mask, crossing, volume, popcount) decides
// whether the subset competes.
template <typename Visit>
void gray_walk(const Graph& g, Visit visit) {
    const int n = g.order();
    const auto adj = adjacency_masks(g);
    std::uint32_t cur = 0;
    long long crossing = 0;
    long long volume = 0;
    int size = 0;
    const std::uint64_t end = 1ull << n;
    for (std::uint64_t i = 1; i < end; ++i) {
        const int v = std::countr_zero(i);
        const std::uint32_t bit = 1u << v;
        const int d = g.degree(v);
        if (cur & bit) {
            cur ^= bit;
            const int inside = std::popcount(adj[static_cast<std::size_t>(v)] & cur);
            crossing -= d - 2 * inside;
            volume -= d;
            --size;
        } else {
            const int inside = std::popcount(adj[static_cast<std::size_t>(v)] & cur);
            cur ^= bit;
            crossing += d - 2 * inside;
            volume += d;
            ++size;
        }
        visit(cur, crossing, volume, size);
    }
}

long long crossing_of(const Graph& g, const std::vector<int>& subset,
                      std::vector<char>& member) {
    for (int v : subset) member[static_cast<std::size_t>(v)] = 1;
    long long crossing = 0;
    for (int u : subset)
        for (int v : g.neighbors(u))
            if (!member[static_cast<std::size_t>(v)]) ++crossing;
    for (int v : subset) member[static_cast<std::size_t>(v)] = 0;
    return crossing;
}

}  // namespace

std::pair<double, std::vector<int>> brute_expansion(const Graph& g) {
    const int n = g.order();
    if (n < 1) throw input_error("expansion needs at least one vertex");
    if (n > kBruteLimit) throw capacity_error("subset enumeration limited to n <= 24");
    long long best_num = -1;
    long long best_den = 1;
    std::uint32_t best_mask = 0;
    const int half = n / 2;
    gray_walk(g, [&](std::uint32_t mask, long long crossing, long long, int size) {
        if (size < 1 || size > half) return;
        // crossing/size vs best_num/best_den by cross multiplication
        if (best_num < 0 || crossing * best_den < best_num * size ||
            (crossing * best_den == best_num * size && mask < best_mask)) {
            best_num = crossing;
            best_den = size;
            best_mask = mask;
        }
    });
    if (best_num < 0) throw input_error("no admissible subset");  // n = 1
    return {static_cast<double>(best_num) / static_cast<double>(best_den),
            mask_to_subset(best_mask, n)};
}

std::pair<double, std::vector<int>> brute_conductance(const Graph& g) {
    const int n = g.order();
    if (n > kBruteLimit) throw capacity_error("subset enumeration limited to n <= 24");
    if (g.edge_count() == 0) throw input_error("conductance needs at least one edge");
    const long long e = static_cast<long long>(g.edge_count());
    long long best_num = -1;
    long long best_den = 1;
    std::uint32_t best_mask = 0;
    gray_walk(g, [&](std::uint32_t mask, long long crossing, long long volume, int size) {
        if (size < 1 || volume > e || volume == 0) return;
        if (best_num < 0 || crossing * best_den < best_num * volume ||
            (crossing * best_den == best_num * volume && mask < best_mask)) {
            best_num = crossing;
            best_den = volume;
            best_mask = mask;
        }
    });
    if (best_num < 0) throw input_error("no admissible subset for conductance");
    return {static_cast<double>(best_num) / static_cast<double>(best_den),
            mask_to_subset(best_mask, n)};
}

namespace {

Eigen::MatrixXd laplacian_matrix(const Graph& g) {
    const int n = g.order();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u) {
        m(u, u) = g.degree(u);
        for (int v : g.neighbors(u)) m(u, v) = -1.0;
    }
    return m;
}

// Power iteration for the largest eigenvalue of a symmetric linear operator
// given as apply(x) -> y, with one known eigenvector deflated away. Stops on
// the residual norm ||A x - theta x||, which bounds |theta - lambda| for
// symmetric operators, so abs_tol is a certified eigenvalue error.
template <typename Apply>
double deflated_power(const Apply& apply, const Eigen::VectorXd& known, int n, double abs_tol) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    Rng rng = make_rng(0x9e3779b97f4a7c15ULL);  // fixed internal seed; result is deterministic
    for (int i = 0; i < n; ++i) x(i) = uniform01(rng) - 0.5;
    const double known_norm2 = known.squaredNorm();
    auto deflate = [&](Eigen::VectorXd& v) { v -= (known.dot(v) / known_norm2) * known; };
    deflate(x);
    const double start_norm = x.norm();
    if (start_norm < 1e-300) throw numeric_error("degenerate start vector");
    x /= start_norm;
    for (int it = 0; it < 200000; ++it) {
        Eigen::VectorXd y = apply(x);
        deflate(y);
        const double theta = x.dot(y);
        if ((y - theta * x).norm() <= abs_tol) return theta;
        const double norm = y.norm();
        if (norm < 1e-300) return 0.0;  // operator annihilates the deflated complement
        x = y / norm;
    }
    throw numeric_error("power iteration did not converge");
}

}  // namespace

double lambda2_laplacian(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw input_error("lambda2 needs at least two vertices");
    if (n <= kDenseLimit) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian_matrix(g));
        if (solver.info() != Eigen::Success) throw numeric_error("dense eigensolver failed");
        return solver.eigenvalues()(1);
    }
    return lambda2_laplacian_iterative(g);
}

double lambda2_laplacian_iterative(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw input_error("lambda2 needs at least two vertices");
    // Shifted operator s I - L is PSD with top eigenvector all-ones (value s);
    // the largest eigenvalue orthogonal to ones is s - lambda2.
    int d_max = 0;
    for (int v = 0; v < n; ++v) d_max = std::max(d_max, g.degree(v));
    const double s = 2.0 * d_max + 1.0;
    auto apply = [&](const Eigen::VectorXd& x) {
        Eigen::VectorXd y(n);
        for (int u = 0; u < n; ++u) {
            double acc = (s - g.degree(u)) * x(u);
            for (int v : g.neighbors(u)) acc += x(v);
            y(u) = acc;
        }
        return y;
    };
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
    const double mu = deflated_power(apply, ones, n, 1e-7);
    return s - mu;
}

double lambda2_walk(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw input_error("lambda2 needs at least two vertices");
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) throw input_error("walk matrix undefined with isolated vertices");
    if (n <= kDenseLimit) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
        for (int u = 0; u < n; ++u)
            for (int v : g.neighbors(u))
                m(u, v) = 1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
        if (solver.info() != Eigen::Success) throw numeric_error("dense eigensolver failed");
        return solver.eigenvalues()(n - 2);
    }
    return lambda2_walk_iterative(g);
}

double lambda2_walk_iterative(const Graph& g) {
    const int n = g.order();
    if (n < 2) throw input_error("lambda2 needs at least two vertices");
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) throw input_error("walk matrix undefined with isolated vertices");
    // Conjugate M = D^{-1/2} A D^{-1/2}; top eigenvector is exactly
    // D^{1/2} 1 with eigenvalue 1. Shift by +I to make the target the
    // largest magnitude among the rest.
    Eigen::VectorXd sqrt_deg(n);
    for (int v = 0; v < n; ++v) sqrt_deg(v) = std::sqrt(static_cast<double>(g.degree(v)));
    auto apply = [&](const Eigen::VectorXd& x) {
        Eigen::VectorXd y(n);
        for (int u = 0; u < n; ++u) {
            double acc = x(u);  // the +I shift
            for (int v : g.neighbors(u)) acc += x(v) / (sqrt_deg(u) * sqrt_deg(v));
            y(u) = acc;
        }
        return y;
    };
    const double mu = deflated_power(apply, sqrt_deg, n, 1e-7);
    return mu - 1.0;
}

SpectralReport cheeger_report(const Graph& g) {
    if (!is_connected(g)) throw input_error("cheeger report needs a connected graph");
    if (g.order() < 2) throw input_error("cheeger report needs at least two vertices");
    SpectralReport r;
    auto [phi, phi_w] = brute_expansion(g);
    auto [cond, cond_w] = brute_conductance(g);
    r.phi = phi;
    r.phi_witness = std::move(phi_w);
    r.conductance = cond;
    r.conductance_witness = std::move(cond_w);
    r.lambda2_L = lambda2_laplacian(g);
    r.lambda2_P = lambda2_walk(g);
    for (int v = 0; v < g.order(); ++v) r.d_max = std::max(r.d_max, g.degree(v));

    const double slack = 1e-9;
    r.laplacian_lower_holds = r.phi * r.phi / (2.0 * r.d_max) <= r.lambda2_L + slack;
    r.laplacian_upper_holds = r.lambda2_L <= 2.0 * r.phi + slack;
    const double gap = 1.0 - r.lambda2_P;
    r.walk_lower_holds = r.conductance * r.conductance / 8.0 <= gap + slack;
    r.walk_upper_holds = gap <= 2.0 * r.conductance + slack;
    r.walk_upper_tight_holds = gap <= r.conductance + slack;
    return r;
}

CutProfile cut_profile(const Graph& g, double c, std::uint64_t trials, Rng& rng) {
    const int n = g.order();
    if (n < 4) throw input_error("cut profile needs n >= 4");
    if (!(c > 0.0)) throw input_error("cut profile needs c > 0");
    if (trials == 0) throw input_error("cut profile needs at least one trial");
    const double scale = c * std::log(static_cast<double>(n));

    std::vector<int> sizes;
    for (int u = 1; u <= n / 2; u *= 2) sizes.push_back(u);
    if (sizes.empty() || sizes.back() != n / 2) sizes.push_back(n / 2);

    CutProfile profile;
    profile.c = c;
    std::vector<char> member(static_cast<std::size_t>(n), 0);
    double global_min = std::numeric_limits<double>::infinity();
    for (int u : sizes) {
        CutProfileBucket bucket;
        bucket.u = u;
        long long best_crossing = -1;
        for (std::uint64_t t = 0; t < trials; ++t) {
            const auto picks = sample_distinct(rng, static_cast<std::uint64_t>(n),
                                               static_cast<std::uint64_t>(u));
            std::vector<int> subset(picks.begin(), picks.end());
            const long long crossing = crossing_of(g, subset, member);
            if (best_crossing < 0 || crossing < best_crossing) best_crossing = crossing;
        }
        bucket.samples = trials;
        if (n <= kBruteLimit && u <= 12) {
            // Exhaustive minimum over all u-subsets of the crossing count.
            std::vector<int> subset(static_cast<std::size_t>(u));
            std::iota(subset.begin(), subset.end(), 0);
            for (;;) {
                const long long crossing = crossing_of(g, subset, member);
                if (crossing < best_crossing) best_crossing = crossing;
                int i = u - 1;
                while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - u + i) --i;
                if (i < 0) break;
                ++subset[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < u; ++j)
                    subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
            }
            bucket.exhaustive = true;
        }
        bucket.min_ratio = static_cast<double>(best_crossing) / (static_cast<double>(u) * scale);
        global_min = std::min(global_min, bucket.min_ratio);
        profile.buckets.push_back(bucket);
    }
    profile.empirical_delta = 1.0 - global_min;
    return profile;
}

}  // namespace ergo
