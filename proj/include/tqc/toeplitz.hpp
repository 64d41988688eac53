// Copyright 2026 The tqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "tqc/error.hpp"
#include "tqc/linalg.hpp"

namespace tqc {

/// Generator of the symmetric tridiagonal Toeplitz Hamiltonian with a^n on
/// the main diagonal and b^n on both neighbouring diagonals.
struct ToeplitzParams {
    double a = 1.0;
    double b = 1.0;
    double n = 1.0;
    std::size_t m = 4;

    double diagonal_entry() const { return std::pow(a, n); }
    double off_diagonal_entry() const { return std::pow(b, n); }
};

enum class SpectrumSource { ClosedFormStandard, ClosedFormSwapped, Numerical };
enum class SpectrumFormula { Standard, SwappedRoles };

struct ToeplitzSpectrum {
    std::vector<double> eigenvalues;
    Matrix eigenvectors;
    SpectrumSource source = SpectrumSource::Numerical;
};

inline Matrix tridiagonal_toeplitz(double diagonal, double off_diagonal, std::size_t m) {
    if (m < 2) {
        throw Error(ErrorCode::InvalidParams, "Toeplitz dimension must be >= 2, got " + std::to_string(m));
    }
    if (!std::isfinite(diagonal) || !std::isfinite(off_diagonal)) {
        throw Error(ErrorCode::InvalidParams, "Toeplitz entries must be finite");
    }
    Matrix h(m);
    for (std::size_t i = 0; i < m; ++i) {
        h(i, i) = diagonal;
        if (i + 1 < m) {
            h(i, i + 1) = off_diagonal;
            h(i + 1, i) = off_diagonal;
        }
    }
    return h;
}

inline Matrix build_hamiltonian(const ToeplitzParams &p) {
    return tridiagonal_toeplitz(p.diagonal_entry(), p.off_diagonal_entry(), p.m);
}

/// Zero diagonal, unit neighbours: H = a^n I + b^n S.
inline Matrix unit_hopping_generator(std::size_t m) { return tridiagonal_toeplitz(0.0, 1.0, m); }

inline ToeplitzSpectrum closed_form_spectrum(const ToeplitzParams &p,
                                             SpectrumFormula formula = SpectrumFormula::Standard) {
    if (!(p.a > 0.0) || !(p.b > 0.0)) {
        throw Error(ErrorCode::InvalidParams, "closed-form spectrum needs a > 0 and b > 0");
    }
    if (p.m < 2) {
        throw Error(ErrorCode::InvalidParams, "Toeplitz dimension must be >= 2");
    }
    const std::size_t m = p.m;
    const double an = p.diagonal_entry();
    const double bn = p.off_diagonal_entry();
    const double step = std::numbers::pi / static_cast<double>(m + 1);

    ToeplitzSpectrum out;
    out.eigenvalues.resize(m);
    out.eigenvectors = Matrix(m);
    out.source = formula == SpectrumFormula::Standard ? SpectrumSource::ClosedFormStandard
                                                      : SpectrumSource::ClosedFormSwapped;
    const double vnorm = std::sqrt(2.0 / static_cast<double>(m + 1));
    for (std::size_t j = 1; j <= m; ++j) {
        const double c = std::cos(static_cast<double>(j) * step);
        if (formula == SpectrumFormula::Standard) {
            out.eigenvalues[j - 1] = an + 2.0 * bn * c;
        } else {
            // Variant with the roles of a and b exchanged; only used to
            // measure its distance from the true spectrum.
            out.eigenvalues[j - 1] = bn + 2.0 * an * std::sqrt(bn / an) * c;
        }
        for (std::size_t k = 1; k <= m; ++k) {
            out.eigenvectors(k - 1, j - 1) = vnorm * std::sin(static_cast<double>(k * j) * step);
        }
    }
    return out;
}

inline ToeplitzSpectrum numerical_spectrum(const ToeplitzParams &p) {
    auto eig = hermitian_eig(build_hamiltonian(p));
    return {std::move(eig.values), std::move(eig.vectors), SpectrumSource::Numerical};
}

/// max |lambda_swapped - lambda_numerical| after sorting both.
inline double spectrum_discrepancy(const ToeplitzParams &p) {
    auto swapped = closed_form_spectrum(p, SpectrumFormula::SwappedRoles).eigenvalues;
    auto numeric = numerical_spectrum(p).eigenvalues;
    std::sort(swapped.begin(), swapped.end());
    double worst = 0.0;
    for (std::size_t k = 0; k < swapped.size(); ++k) {
        worst = std::max(worst, std::abs(swapped[k] - numeric[k]));
    }
    return worst;
}

}  // namespace tqc
