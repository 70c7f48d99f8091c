#include "fgc/modframe.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace fgc {

namespace {

Eigen::MatrixXcd gaussian(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> dist(0.0, 1.0);
    Eigen::MatrixXcd m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = std::complex<double>(dist(rng), dist(rng));
    return m;
}

// random isometry: rows x cols with Q^* Q = I, rows >= cols
Eigen::MatrixXcd random_isometry(int rows, int cols, std::mt19937_64& rng) {
    Eigen::MatrixXcd g = gaussian(rows, cols, rng);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    return qr.householderQ() * Eigen::MatrixXcd::Identity(rows, cols);
}

} // namespace

ToyModule random_projection(int n, int k, int rank, std::uint64_t seed) {
    if (n < 1 || k < 1) throw InvalidRank("need n >= 1 and k >= 1");
    if (rank < 1 || rank > k * n)
        throw InvalidRank("rank must lie in [1, k*n], got " + std::to_string(rank));
    std::mt19937_64 rng(seed);
    Eigen::MatrixXcd q = random_isometry(k * n, rank, rng);
    ToyModule m{ToyAlgebra{n}, k, q * q.adjoint()};

    double herm = (m.p - m.p.adjoint()).norm();
    double idem = (m.p * m.p - m.p).norm();
    if (herm > 1e-10 || idem > 1e-10)
        throw InternalInvariant("generated p is not a projection to tolerance");
    return m;
}

ToyModule random_bimodule(int n, int k, int blocks, std::uint64_t seed) {
    if (n < 1 || k < 1) throw InvalidRank("need n >= 1 and k >= 1");
    if (blocks < 1 || blocks > k)
        throw InvalidRank("block rank must lie in [1, k], got " + std::to_string(blocks));
    std::mt19937_64 rng(seed);
    Eigen::MatrixXcd q = random_isometry(k, blocks, rng);
    Eigen::MatrixXcd small = q * q.adjoint(); // k x k projection of rank `blocks`
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(k * n, k * n);
    for (int b = 0; b < k; ++b)
        for (int c = 0; c < k; ++c)
            p.block(b * n, c * n, n, n) = small(b, c) * Eigen::MatrixXcd::Identity(n, n);
    return ToyModule{ToyAlgebra{n}, k, std::move(p)};
}

Frame frame_of(const ToyModule& m) {
    const int n = m.algebra.n;
    Frame f{m.algebra, {}};
    for (int i = 0; i < m.k; ++i)
        f.vectors.push_back(m.p.middleCols(i * n, n));
    return f;
}

double t_value(const Frame& f) {
    double total = 0.0;
    for (const auto& xi : f.vectors)
        total += (xi.adjoint() * xi).trace().real();
    return total / f.algebra.n;
}

Frame resample_frame(const Frame& f, std::uint64_t seed) {
    const int r = static_cast<int>(f.vectors.size());
    const int r2 = r + static_cast<int>(seed % 2);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    // W with orthonormal rows: zeta_j = sum_i W(i,j) xi_i keeps sum xi xi^*
    Eigen::MatrixXcd w = random_isometry(r2, r, rng).adjoint();
    Frame out{f.algebra, {}};
    for (int j = 0; j < r2; ++j) {
        Eigen::MatrixXcd zeta = Eigen::MatrixXcd::Zero(f.vectors[0].rows(), f.vectors[0].cols());
        for (int i = 0; i < r; ++i) zeta += w(i, j) * f.vectors[i];
        out.vectors.push_back(std::move(zeta));
    }
    return out;
}

Frame tensor_modules(const Frame& f1, const Frame& f2) {
    if (!(f1.algebra == f2.algebra))
        throw AlgebraMismatch("tensor factors must be modules over the same algebra");
    const int n = f1.algebra.n;
    const int k1 = static_cast<int>(f1.vectors[0].rows()) / n;
    const int k2 = static_cast<int>(f2.vectors[0].rows()) / n;
    if (n > 1) {
        // the interior tensor product needs the left action a |-> diag(a) to
        // preserve the second module: its projection sum_j eta_j eta_j^* must
        // commute with every lifted algebra element
        Eigen::MatrixXcd p2 = Eigen::MatrixXcd::Zero(k2 * n, k2 * n);
        for (const auto& eta : f2.vectors) p2 += eta * eta.adjoint();
        std::mt19937_64 rng(0xb1b0d01eull);
        Eigen::MatrixXcd a = gaussian(n, n, rng);
        a = (a + a.adjoint()).eval();
        Eigen::MatrixXcd lift = Eigen::MatrixXcd::Zero(k2 * n, k2 * n);
        for (int c = 0; c < k2; ++c) lift.block(c * n, c * n, n, n) = a;
        if ((p2 * lift - lift * p2).norm() > 1e-8 * a.norm())
            throw AlgebraMismatch(
                "second tensor factor is not a bimodule: its projection does not "
                "commute with the left action of the algebra");
    }
    Frame out{f1.algebra, {}};
    for (const auto& xi : f1.vectors) {
        for (const auto& eta : f2.vectors) {
            Eigen::MatrixXcd z(k1 * k2 * n, n);
            for (int b = 0; b < k1; ++b)
                for (int c = 0; c < k2; ++c)
                    z.middleRows((b * k2 + c) * n, n) =
                        xi.middleRows(b * n, n) * eta.middleRows(c * n, n);
            out.vectors.push_back(std::move(z));
        }
    }
    return out;
}

Eigen::MatrixXcd gram_matrix(const Frame& f) {
    const int n = f.algebra.n;
    const int r = static_cast<int>(f.vectors.size());
    Eigen::MatrixXcd g(r * n, r * n);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            g.block(i * n, j * n, n, n) = f.vectors[i].adjoint() * f.vectors[j];
    return g;
}

double reconstruction_error(const ToyModule& m, const Frame& f) {
    std::mt19937_64 rng(12345);
    const int n = m.algebra.n;
    double worst = 0.0;
    // p * (random) spans the module; also probe the block columns of p
    for (int t = 0; t < 8; ++t) {
        Eigen::MatrixXcd eta = t < m.k ? Eigen::MatrixXcd(m.p.middleCols((t % m.k) * n, n))
                                       : Eigen::MatrixXcd(m.p * gaussian(m.k * n, n, rng));
        Eigen::MatrixXcd rec = Eigen::MatrixXcd::Zero(eta.rows(), eta.cols());
        for (const auto& xi : f.vectors) rec += xi * (xi.adjoint() * eta);
        worst = std::max(worst, (rec - eta).norm());
    }
    return worst;
}

std::vector<SweepRow> sweep(int n, int k, int rank, int trials, int resamples,
                            std::uint64_t seed) {
    std::vector<SweepRow> rows;
    for (int t = 0; t < trials; ++t) {
        ToyModule m = random_projection(n, k, rank, seed + static_cast<std::uint64_t>(t));
        Frame f = frame_of(m);
        double base = t_value(f);
        double spread = 0.0;
        for (int r = 0; r < resamples; ++r) {
            Frame g = resample_frame(f, seed * 1000003ull + static_cast<std::uint64_t>(r));
            spread = std::max(spread, std::abs(t_value(g) - base));
        }
        rows.push_back(SweepRow{t, n, k, rank, base, spread});
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "module_id,n,k,rank,T,resample_spread\n";
    os.precision(15);
    for (const auto& r : rows)
        os << r.id << "," << r.n << "," << r.k << "," << r.rank << "," << r.t << ","
           << r.spread << "\n";
    return os.str();
}

} // namespace fgc
