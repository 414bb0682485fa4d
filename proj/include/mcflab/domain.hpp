#ifndef MCFLAB_DOMAIN_HPP
#define MCFLAB_DOMAIN_HPP

#include <vector>

#include "mcflab/rng.hpp"
#include "mcflab/types.hpp"

namespace mcf {

/** Axis-aligned coordinate rectangle [lo1,hi1] x [lo2,hi2]. */
struct Rect {
    double lo1 = -1, hi1 = 1, lo2 = -1, hi2 = 1;

    bool contains(const Vec2& p) const {
        return p.x() >= lo1 && p.x() <= hi1 && p.y() >= lo2 && p.y() <= hi2;
    }

    Vec2 sample(Rng& rng) const {
        return {rng.uniform(lo1, hi1), rng.uniform(lo2, hi2)};
    }

    std::vector<Vec2> grid(int n1, int n2) const {
        std::vector<Vec2> pts;
        pts.reserve(static_cast<size_t>(n1) * n2);
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n2; ++j) {
                double a = n1 > 1 ? double(i) / (n1 - 1) : 0.5;
                double b = n2 > 1 ? double(j) / (n2 - 1) : 0.5;
                pts.emplace_back(lo1 + a * (hi1 - lo1), lo2 + b * (hi2 - lo2));
            }
        return pts;
    }
};

} // namespace mcf

#endif
