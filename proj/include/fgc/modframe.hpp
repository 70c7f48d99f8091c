#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

#include "fgc/errors.hpp"

namespace fgc {

/// M_n(C) with its unique normalized trace tr/n: a finite-dimensional stand-in
/// for a unital simple algebra with unique trace.
struct ToyAlgebra {
    int n = 1;
    bool operator==(const ToyAlgebra& o) const { return n == o.n; }
};

/// Right module p C^{kn} over M_n, cut out by a Hermitian idempotent p.
struct ToyModule {
    ToyAlgebra algebra;
    int k = 1;
    Eigen::MatrixXcd p; // kn x kn
};

/// Frame vectors are kn x n blocks xi with reconstruction
/// eta = sum_i xi_i <xi_i, eta>_A, inner product <xi, eta>_A = xi^* eta.
struct Frame {
    ToyAlgebra algebra;
    std::vector<Eigen::MatrixXcd> vectors;
};

/// Deterministic Haar-style random projection of the given rank.
ToyModule random_projection(int n, int k, int rank, std::uint64_t seed);

/// Random module that is also a bimodule: p = P (x) I_n for a Haar-random
/// k x k projection P of rank `blocks`, so p commutes with the diagonal left
/// action of M_n.  The module rank is blocks * n and T = blocks.
ToyModule random_bimodule(int n, int k, int blocks, std::uint64_t seed);

/// The k block columns of p; their Gram matrix is p itself.
Frame frame_of(const ToyModule& m);

/// sum_i tau(<xi_i, xi_i>_A); frame-independent and equal to (tau (x) Tr)(p).
double t_value(const Frame& f);

/// A different frame of the same module, obtained from a random co-isometry;
/// cardinality grows by seed % 2.  Deterministic per seed.
Frame resample_frame(const Frame& f, std::uint64_t seed);

/// Elementary-tensor frame {xi_i (x) eta_j} of the interior tensor product,
/// concretely the blockwise products xi_i^{(b)} eta_j^{(c)}.  The second
/// factor must be a bimodule (its Gram projection commutes with the diagonal
/// left action), otherwise the interior tensor product is undefined.
Frame tensor_modules(const Frame& f1, const Frame& f2);

/// Gram matrix (<xi_i, xi_j>_A)_{ij} as an rn x rn block matrix.
Eigen::MatrixXcd gram_matrix(const Frame& f);

/// Largest reconstruction residual over a spanning test set.
double reconstruction_error(const ToyModule& m, const Frame& f);

struct SweepRow {
    int id, n, k, rank;
    double t;
    double spread; // max |T - T_resampled| over the resamplings
};

/// Random modules with frame resamplings; the raw material for the
/// frame-independence and T = rank/n checks.
std::vector<SweepRow> sweep(int n, int k, int rank, int trials, int resamples,
                            std::uint64_t seed);

std::string sweep_csv(const std::vector<SweepRow>& rows);

} // namespace fgc
