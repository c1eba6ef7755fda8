#pragma once

#include <optional>
#include <vector>

#include "anticyc/lattice.hpp"

namespace anticyc {

using IMat = std::vector<std::vector<Int>>;
using QMat = std::vector<std::vector<Rat>>;
using QVec = std::vector<Rat>;

IMat identity_imat(int n);
IMat mul(const IMat& a, const IMat& b);
IMat transpose(const IMat& a);

/// Exact determinant by fraction-free Bareiss elimination.
Int det_bareiss(IMat a);

/// Row-style Hermite normal form of the row space of a (pivots positive,
/// entries above pivots reduced). Zero rows dropped. Canonical for a lattice
/// given as a row span.
IMat hermite_normal_form(IMat a);

struct SmithResult {
    IMat s;  // diagonal, d_1 | d_2 | ..., nonnegative
    IMat u;  // unimodular, u * a * v = s
    IMat v;  // unimodular
};

SmithResult smith_normal_form(const IMat& a);

/// Basis (as rows) of the integer kernel {x : a x = 0}. The kernel of an
/// integer matrix is automatically saturated in Z^cols.
IMat kernel_basis(const IMat& a);

/// All leading principal minors of -a positive (a symmetric).
bool is_negative_definite(const IMat& a);

/// Solve a x = b exactly over Q; nullopt if inconsistent or a singular
/// (a must be square).
std::optional<QVec> solve_rational(const IMat& a, const QVec& b);

/// Exact inverse of a square rational matrix; nullopt if singular.
std::optional<QMat> inverse_rational(const QMat& a);

QMat to_qmat(const IMat& a);

/// True iff every entry is an integer.
bool is_integral(const QMat& a);
bool is_integral(const QVec& v);

}  // namespace anticyc
