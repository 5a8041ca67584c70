#pragma once

// Straight-line re-implementation of the trial-vector rules, kept deliberately
// separate from the library internals so the two can check each other. It
// recomputes the population roles from scratch and consumes random draws in
// the documented order: partner u, T u, then r4 (+ r1, r2 or r3) per variable.

#include <cstddef>
#include <vector>

#include "bmrbwr/optimizer.hpp"

namespace oracle {

inline std::vector<double> trial(bmrbwr::algorithm algo, std::size_t k,
                                 const bmrbwr::population& pop, const bmrbwr::bounds& box,
                                 bmrbwr::sense s, bmrbwr::random_stream& rng) {
    const std::size_t n = pop.members.size();
    const std::size_t m = box.lower.size();
    const bool minimizing = s == bmrbwr::sense::minimize;

    std::size_t best = 0, worst = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (minimizing ? pop.members[i].penalized < pop.members[best].penalized
                       : pop.members[i].penalized > pop.members[best].penalized)
            best = i;
        if (minimizing ? pop.members[i].penalized > pop.members[worst].penalized
                       : pop.members[i].penalized < pop.members[worst].penalized)
            worst = i;
    }
    std::vector<double> mean(m, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) mean[j] += pop.members[i].position[j];
    for (std::size_t j = 0; j < m; ++j) mean[j] /= static_cast<double>(n);

    const double u_partner = rng.next_uniform();
    std::size_t partner = static_cast<std::size_t>(u_partner * static_cast<double>(n - 1));
    if (partner > n - 2) partner = n - 2;
    if (partner >= k) ++partner;

    const double t = rng.next_uniform() < 0.5 ? 1.0 : 2.0;

    std::vector<double> out(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double r4 = rng.next_uniform();
        double v;
        if (r4 > 0.5) {
            const double r1 = rng.next_uniform();
            const double r2 = rng.next_uniform();
            const double vk = pop.members[k].position[j];
            const double vb = pop.members[best].position[j];
            const double vp = pop.members[partner].position[j];
            if (algo == bmrbwr::algorithm::bmr)
                v = vk + r1 * (vb - t * mean[j]) + r2 * (vb - vp);
            else
                v = vk + r1 * (vb - t * vp) -
                    r2 * (pop.members[worst].position[j] - vp);
        } else {
            const double r3 = rng.next_uniform();
            v = box.upper[j] - (box.upper[j] - box.lower[j]) * r3;
        }
        if (v < box.lower[j]) v = box.lower[j];
        if (v > box.upper[j]) v = box.upper[j];
        out[j] = v;
    }
    return out;
}

}  // namespace oracle
