#include "gainspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gainspec/distance.hpp"
#include "gainspec/paths.hpp"

namespace gainspec {

double Spectrum::spectral_radius() const {
    return std::max(std::abs(eigenvalues.front()), std::abs(eigenvalues.back()));
}

namespace {

constexpr int kMaxSweeps = 100;

void require_hermitian(const HermitianMatrix& m) {
    for (int i = 0; i < m.order(); ++i) {
        for (int j = i; j < m.order(); ++j) {
            if (std::abs(m.at(i, j) - std::conj(m.at(j, i))) > 1e-10) {
                throw NumericalError("eigensolver input is not Hermitian");
            }
        }
    }
}

// Row-major symmetric N x N storage.
struct JacobiOutput {
    std::vector<double> values;   // unsorted diagonal
    std::vector<double> vectors;  // accumulated rotations, column k = eigenvector k
};

double off_diagonal_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            if (p != q) s += a[static_cast<std::size_t>(p) * n + q] * a[static_cast<std::size_t>(p) * n + q];
        }
    }
    return std::sqrt(s);
}

// Cyclic Jacobi on a symmetric matrix; converges when the off-diagonal
// Frobenius norm drops below `threshold`.
JacobiOutput jacobi_eigen(std::vector<double> a, int n, double threshold, bool want_vectors) {
    std::vector<double> v;
    if (want_vectors) {
        v.assign(static_cast<std::size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
    }
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    bool converged = off_diagonal_norm(a, n) <= threshold;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (int k = 0; k < n; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
                if (want_vectors) {
                    for (int k = 0; k < n; ++k) {
                        const double vkp = v[static_cast<std::size_t>(k) * n + p];
                        const double vkq = v[static_cast<std::size_t>(k) * n + q];
                        v[static_cast<std::size_t>(k) * n + p] = c * vkp - s * vkq;
                        v[static_cast<std::size_t>(k) * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
        converged = off_diagonal_norm(a, n) <= threshold;
    }
    if (!converged) {
        throw NumericalError("Jacobi eigensolver did not converge within 100 sweeps");
    }
    JacobiOutput out;
    out.values.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.values[static_cast<std::size_t>(i)] = at(i, i);
    out.vectors = std::move(v);
    return out;
}

// [[X, -Y], [Y, X]] for M = X + iY.
std::vector<double> embed(const HermitianMatrix& m) {
    const int n = m.order();
    const int nn = 2 * n;
    std::vector<double> b(static_cast<std::size_t>(nn) * nn, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Complex z = m.at(i, j);
            b[static_cast<std::size_t>(i) * nn + j] = z.real();
            b[static_cast<std::size_t>(i) * nn + (n + j)] = -z.imag();
            b[static_cast<std::size_t>(n + i) * nn + j] = z.imag();
            b[static_cast<std::size_t>(n + i) * nn + (n + j)] = z.real();
        }
    }
    return b;
}

struct SolveResult {
    std::vector<double> sorted_values;  // 2n embedding eigenvalues, ascending
    std::vector<int> sorted_index;      // into Jacobi columns
    JacobiOutput raw;
};

SolveResult solve_embedding(const HermitianMatrix& m, bool want_vectors) {
    require_hermitian(m);
    const int n = m.order();
    if (n == 0) throw DimensionError("empty matrix has no spectrum");
    const double norm_m = m.frobenius_norm();
    SolveResult r;
    r.raw = jacobi_eigen(embed(m), 2 * n, 1e-11 * norm_m, want_vectors);
    r.sorted_index.resize(static_cast<std::size_t>(2 * n));
    std::iota(r.sorted_index.begin(), r.sorted_index.end(), 0);
    std::sort(r.sorted_index.begin(), r.sorted_index.end(), [&](int i, int j) {
        return r.raw.values[static_cast<std::size_t>(i)] < r.raw.values[static_cast<std::size_t>(j)];
    });
    r.sorted_values.reserve(static_cast<std::size_t>(2 * n));
    for (int idx : r.sorted_index) r.sorted_values.push_back(r.raw.values[static_cast<std::size_t>(idx)]);
    return r;
}

// Every eigenvalue of M shows up twice in the embedding; average the sorted
// pairs (2k, 2k+1) into one value each.
std::vector<double> collapse_pairs(const std::vector<double>& sorted_values) {
    std::vector<double> out;
    out.reserve(sorted_values.size() / 2);
    for (std::size_t k = 0; k + 1 < sorted_values.size(); k += 2) {
        out.push_back(0.5 * (sorted_values[k] + sorted_values[k + 1]));
    }
    return out;
}

}  // namespace

Spectrum eigenvalues_hermitian(const HermitianMatrix& m) {
    const auto solved = solve_embedding(m, false);
    return Spectrum{collapse_pairs(solved.sorted_values)};
}

EigenDecomposition eigen_hermitian(const HermitianMatrix& m) {
    const int n = m.order();
    const auto solved = solve_embedding(m, true);
    EigenDecomposition dec;
    dec.spectrum.eigenvalues = collapse_pairs(solved.sorted_values);

    const double cluster_tol = 1e-9 * std::max(1.0, m.frobenius_norm());
    const int nn = 2 * n;
    auto embedding_column = [&](int sorted_pos) {
        // Complex image u + iv of the embedding eigenvector [u; v].
        const int col = solved.sorted_index[static_cast<std::size_t>(sorted_pos)];
        std::vector<Complex> z(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            z[static_cast<std::size_t>(i)] =
                Complex(solved.raw.vectors[static_cast<std::size_t>(i) * nn + col],
                        solved.raw.vectors[static_cast<std::size_t>(n + i) * nn + col]);
        }
        return z;
    };

    std::vector<std::vector<Complex>> accepted;
    accepted.reserve(static_cast<std::size_t>(n));
    auto project_out = [&](std::vector<Complex>& z, const std::vector<Complex>& q) {
        Complex dot(0.0, 0.0);
        for (int i = 0; i < n; ++i) {
            dot += std::conj(q[static_cast<std::size_t>(i)]) * z[static_cast<std::size_t>(i)];
        }
        for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] -= dot * q[static_cast<std::size_t>(i)];
    };
    auto norm_of = [&](const std::vector<Complex>& z) {
        double s = 0.0;
        for (const auto& x : z) s += std::norm(x);
        return std::sqrt(s);
    };

    int k = 0;
    while (k < n) {
        int end = k + 1;
        while (end < n && dec.spectrum.eigenvalues[static_cast<std::size_t>(end)] -
                              dec.spectrum.eigenvalues[static_cast<std::size_t>(end - 1)] <=
                          cluster_tol) {
            ++end;
        }
        // The cluster [k, end) needs end-k orthonormal vectors out of the
        // 2(end-k) embedding images; pivoted Gram-Schmidt picks them.
        std::vector<std::vector<Complex>> candidates;
        for (int pos = 2 * k; pos < 2 * end; ++pos) {
            auto z = embedding_column(pos);
            for (const auto& q : accepted) project_out(z, q);
            candidates.push_back(std::move(z));
        }
        for (int picked = 0; picked < end - k; ++picked) {
            int best = -1;
            double best_norm = -1.0;
            for (int c = 0; c < static_cast<int>(candidates.size()); ++c) {
                const double nz = norm_of(candidates[static_cast<std::size_t>(c)]);
                if (nz > best_norm) {
                    best_norm = nz;
                    best = c;
                }
            }
            if (best_norm < 0.1) {
                throw NumericalError("degenerate eigenvector cluster could not be separated");
            }
            auto q = std::move(candidates[static_cast<std::size_t>(best)]);
            candidates.erase(candidates.begin() + best);
            for (auto& x : q) x /= best_norm;
            for (auto& c : candidates) project_out(c, q);
            accepted.push_back(std::move(q));
        }
        k = end;
    }
    dec.vectors = std::move(accepted);
    return dec;
}

bool cospectral(const HermitianMatrix& a, const HermitianMatrix& b, double tol) {
    if (a.order() != b.order()) throw DimensionError("matrix orders differ");
    const auto sa = eigenvalues_hermitian(a);
    const auto sb = eigenvalues_hermitian(b);
    for (std::size_t i = 0; i < sa.eigenvalues.size(); ++i) {
        if (std::abs(sa.eigenvalues[i] - sb.eigenvalues[i]) > tol) return false;
    }
    return true;
}

bool balance_by_largest_eigenvalue(const GainGraph& g, double tol) {
    if (!g.connected()) throw ConnectivityError("graph is not connected");
    const auto a = adjacency(g);
    const auto phi = eigenvalues_hermitian(a);
    const auto underlying = eigenvalues_hermitian(a.entrywise_abs());
    return std::abs(phi.lambda_max() - underlying.lambda_max()) <= tol;
}

bool balance_or_antibalance_by_radius(const GainGraph& g, double tol) {
    if (!g.connected()) throw ConnectivityError("graph is not connected");
    const auto a = adjacency(g);
    const auto phi = eigenvalues_hermitian(a);
    const auto underlying = eigenvalues_hermitian(a.entrywise_abs());
    return std::abs(phi.spectral_radius() - underlying.spectral_radius()) <= tol;
}

namespace {

// D^max(Phi) next to the classical distance matrix D(G), the latter built
// from BFS distances on its own.
std::pair<HermitianMatrix, HermitianMatrix> dmax_and_underlying(const GainGraph& g) {
    const auto independence = is_order_independent(g);
    if (!independence.independent) {
        throw PreconditionError("graph is order dependent; D^max is not well defined");
    }
    const int n = g.order();
    auto matrices = distance_matrices(g, VertexOrder::standard(n));
    HermitianMatrix classical(n);
    for (int s = 0; s < n; ++s) {
        const auto dist = bfs_distances(g, s);
        for (int t = 0; t < n; ++t) {
            classical.set(s, t, Complex(static_cast<double>(dist[static_cast<std::size_t>(t)]), 0.0));
        }
    }
    return {std::move(matrices.dmax), std::move(classical)};
}

}  // namespace

bool distance_spectral_balance(const GainGraph& g, double tol) {
    auto [dmax, classical] = dmax_and_underlying(g);
    return cospectral(dmax, classical, tol);
}

bool distance_spectral_balance_largest(const GainGraph& g, double tol) {
    auto [dmax, classical] = dmax_and_underlying(g);
    const auto a = eigenvalues_hermitian(dmax);
    const auto b = eigenvalues_hermitian(classical);
    return std::abs(a.lambda_max() - b.lambda_max()) <= tol;
}

}  // namespace gainspec
