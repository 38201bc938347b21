#include "jjline/transfer_matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "jjline/errors.hpp"

namespace jjline {

cplx det(const TransferMatrix& t) {
    return t.m00 * t.m11 - t.m01 * t.m10;
}

TransferMatrix operator*(const TransferMatrix& a, const TransferMatrix& b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

TransferMatrix junction_matrix(const JunctionSpec& spec, double omega) {
    const auto [r, t] = scatter(spec, omega);
    if (std::abs(t) < 1e-300)
        throw singular_matrix_error(
            "junction_matrix: t = 0 at the lossless resonance; offset omega "
            "or add loss (gamma > 0)");
    const cplx rho = r / t;
    return {1.0 - rho, rho, -rho, 1.0 / t};
}

TransferMatrix propagation_matrix(double d, double omega) {
    if (!(d >= 0.0))
        throw std::invalid_argument("propagation_matrix: d must be >= 0");
    const cplx phase = std::polar(1.0, omega * d);
    return {phase, 0.0, 0.0, 1.0 / phase};
}

TransferMatrix cascade(const std::vector<TransferMatrix>& mats) {
    if (mats.empty())
        throw std::invalid_argument("cascade: empty chain");
    TransferMatrix acc = mats.front();
    for (std::size_t i = 1; i < mats.size(); ++i) acc = acc * mats[i];
    return acc;
}

ReflectionTransmission scattering_from_matrix(const TransferMatrix& t) {
    if (std::abs(t.m11) < 1e-300)
        throw total_reflection_error(
            "scattering_from_matrix: m11 = 0, chain is totally reflecting");
    return {t.m01 / t.m11, 1.0 / t.m11};
}

TransferMatrix chain_matrix(const ChainSpec& chain, double omega) {
    if (chain.empty())
        throw std::invalid_argument("chain_matrix: empty chain");
    TransferMatrix acc;
    bool first = true;
    for (const auto& el : chain) {
        const TransferMatrix m = std::visit(
            [omega](const auto& e) -> TransferMatrix {
                using T = std::decay_t<decltype(e)>;
                if constexpr (std::is_same_v<T, Junction>)
                    return junction_matrix(e.spec, omega);
                else
                    return propagation_matrix(e.d, omega);
            },
            el);
        acc = first ? m : acc * m;
        first = false;
    }
    return acc;
}

} // namespace jjline
