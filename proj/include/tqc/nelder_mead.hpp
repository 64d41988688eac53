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
#include <array>
#include <cmath>
#include <cstddef>

namespace tqc {

struct SimplexOptions {
    double f_tolerance = 1e-10;  // stop when f(worst) - f(best) falls below this
    double x_tolerance = 1e-7;   // ... and every vertex lies this close to the best one
    int max_evaluations = 500;
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;
};

template <std::size_t N>
struct SimplexResult {
    std::array<double, N> x{};
    double value = 0.0;
    int evaluations = 0;
    bool converged = false;
};

/// Nelder-Mead downhill simplex. The initial simplex is `start` plus one
/// vertex per axis displaced by `step[i]`. The best vertex never gets worse,
/// so the result is at most f(start).
template <std::size_t N, class F>
SimplexResult<N> nelder_mead(F &&f, const std::array<double, N> &start, const std::array<double, N> &step,
                             const SimplexOptions &opt = {}) {
    using Point = std::array<double, N>;
    struct Vertex {
        Point x;
        double fx;
    };
    std::array<Vertex, N + 1> simplex;
    int evals = 0;
    auto eval = [&](const Point &x) {
        ++evals;
        return static_cast<double>(f(x));
    };

    simplex[0] = {start, eval(start)};
    for (std::size_t i = 0; i < N; ++i) {
        Point x = start;
        x[i] += step[i];
        simplex[i + 1] = {x, eval(x)};
    }

    auto by_value = [](const Vertex &l, const Vertex &r) { return l.fx < r.fx; };
    auto blend = [](const Point &from, const Point &to, double coef) {
        // from + coef * (to - from)
        Point r;
        for (std::size_t i = 0; i < N; ++i) {
            r[i] = from[i] + coef * (to[i] - from[i]);
        }
        return r;
    };

    bool converged = false;
    while (true) {
        std::sort(simplex.begin(), simplex.end(), by_value);
        double diameter = 0.0;
        for (std::size_t v = 1; v <= N; ++v) {
            for (std::size_t i = 0; i < N; ++i) {
                diameter = std::max(diameter, std::abs(simplex[v].x[i] - simplex[0].x[i]));
            }
        }
        // A flat initial simplex is not a minimum: keep contracting until it is small too.
        if (simplex[N].fx - simplex[0].fx <= opt.f_tolerance && diameter <= opt.x_tolerance) {
            converged = true;
            break;
        }
        // One iteration costs at most N + 2 evaluations (reflect, contract, shrink).
        if (evals + static_cast<int>(N) + 2 > opt.max_evaluations) {
            break;
        }

        Point centroid{};
        for (std::size_t v = 0; v < N; ++v) {
            for (std::size_t i = 0; i < N; ++i) {
                centroid[i] += simplex[v].x[i] / static_cast<double>(N);
            }
        }
        Vertex &worst = simplex[N];

        const Point xr = blend(centroid, worst.x, -opt.reflection);
        const double fr = eval(xr);
        if (fr < simplex[0].fx) {
            const Point xe = blend(centroid, worst.x, -opt.expansion);
            const double fe = eval(xe);
            worst = fe < fr ? Vertex{xe, fe} : Vertex{xr, fr};
            continue;
        }
        if (fr < simplex[N - 1].fx) {
            worst = {xr, fr};
            continue;
        }
        // Contraction: outside if the reflected point beat the worst, else inside.
        const bool outside = fr < worst.fx;
        const Point xc = outside ? blend(centroid, xr, opt.contraction) : blend(centroid, worst.x, opt.contraction);
        const double fc = eval(xc);
        if (fc < (outside ? fr : worst.fx)) {
            worst = {xc, fc};
            continue;
        }
        for (std::size_t v = 1; v <= N; ++v) {
            simplex[v].x = blend(simplex[0].x, simplex[v].x, opt.shrink);
            simplex[v].fx = eval(simplex[v].x);
        }
    }

    const auto best = std::min_element(simplex.begin(), simplex.end(), by_value);
    return {best->x, best->fx, evals, converged};
}

}  // namespace tqc
