#pragma once

#include <optional>

#include "fgc/exact.hpp"

namespace fgc {

/// Minimal solution of t^2 - D u^2 = +-4 with (t + u sqrt(D))/2 > 1.
/// epsilon0 is the fundamental unit of the quadratic order of discriminant D.
struct PellSolution {
    Int D;
    Int t, u;
    int sign; // +4 or -4
    QuadExt epsilon0;
};

/// Validates D: positive, nonsquare, congruent to 0 or 1 mod 4.
void check_discriminant(const Int& D);

/// Fundamental unit via the continued fraction of (sigma + sqrt(D))/2,
/// sigma = D mod 2; one minimal period yields the fundamental automorphism.
PellSolution solve_pell4(const Int& D);

/// Independent oracle: scan u = 1..u_max testing D u^2 +- 4 for squares.
/// The first u admitting a solution gives the least unit exceeding 1.
std::optional<PellSolution> brute_force_pell4(const Int& D, const Int& u_max);

/// Exact epsilon0^n; always positive.
QuadExt unit_power(const PellSolution& s, long n);

} // namespace fgc
