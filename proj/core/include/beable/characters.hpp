#pragma once

#include <vector>

#include "beable/algebra.hpp"

namespace beable {

/// A dispersion-free (multiplicative) state of a subalgebra, recorded by
/// its values on the algebra basis and the 1x1 block it factors through.
struct Character {
    std::vector<Complex> values;  ///< aligned with the algebra basis
    int source_block = -1;

    [[nodiscard]] Complex operator()(const Vector& coeffs) const {
        Complex s = 0.0;
        for (std::size_t i = 0; i < values.size(); ++i)
            s += coeffs(static_cast<Eigen::Index>(i)) * values[i];
        return s;
    }
};

/// True iff the functional (given by its values on B's basis) is unital and
/// multiplicative on all basis pairs -- equivalently, dispersion-free.
bool dispersion_free_check(const std::vector<Complex>& values, const StarAlgebra& b,
                           const ToleranceConfig& tol = {});

/// All dispersion-free states of B, one per 1x1 block of the Wedderburn
/// decomposition. A full matrix block contributes none.
std::vector<Character> characters(const StarAlgebra& b, const ToleranceConfig& tol = {});

}  // namespace beable
