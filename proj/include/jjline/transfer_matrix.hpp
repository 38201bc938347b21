#pragma once

#include <variant>
#include <vector>

#include "jjline/scattering.hpp"

namespace jjline {

// 2x2 wave-transfer matrix. Convention: (a_L, b_L)^T = T (a_R, b_R)^T with
// a the left-moving and b the right-moving amplitude on each side, so a
// chain is the product of element matrices in spatial order (leftmost
// first). det T = 1 for every element built here.
struct TransferMatrix {
    cplx m00{1.0}, m01{0.0}, m10{0.0}, m11{1.0};
};

cplx det(const TransferMatrix& t);
TransferMatrix operator*(const TransferMatrix& lhs, const TransferMatrix& rhs);

struct Junction {
    JunctionSpec spec;
};
struct Gap {
    double d = 0.0;  // dimensionless length (phase velocity = 1)
};
using ChainElement = std::variant<Junction, Gap>;
using ChainSpec = std::vector<ChainElement>;

// T = [[1 - r/t, r/t], [-r/t, 1/t]] from the junction's (r, t).
// Throws singular_matrix_error at the lossless resonance t = 0.
TransferMatrix junction_matrix(const JunctionSpec& spec, double omega);

// diag(e^{i w d}, e^{-i w d}): free flight over length d >= 0.
TransferMatrix propagation_matrix(double d, double omega);

// Ordered product, leftmost element first.
TransferMatrix cascade(const std::vector<TransferMatrix>& mats);

// r_tot = m01/m11, t_tot = 1/m11 (incidence from the left, nothing
// incoming from the right). Throws total_reflection_error when m11 = 0.
ReflectionTransmission scattering_from_matrix(const TransferMatrix& t);

TransferMatrix chain_matrix(const ChainSpec& chain, double omega);

} // namespace jjline
