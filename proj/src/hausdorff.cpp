#include "mcflab/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mcf {

namespace {

double min_dist2(const Vec2& p, std::span<const Vec2> set) {
    double best = std::numeric_limits<double>::infinity();
    for (const Vec2& q : set) best = std::min(best, (p - q).squaredNorm());
    return best;
}

double directed2(std::span<const Vec2> from, std::span<const Vec2> to) {
    double worst = 0;
    for (const Vec2& p : from) worst = std::max(worst, min_dist2(p, to));
    return worst;
}

double point_segment_dist2(const Vec2& p, const Vec2& a, const Vec2& b) {
    const Vec2 ab = b - a;
    const double len2 = ab.squaredNorm();
    if (len2 == 0) return (p - a).squaredNorm();
    const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
    return (p - (a + t * ab)).squaredNorm();
}

double min_polyline_dist2(const Vec2& p, std::span<const Vec2> poly,
                          bool closed) {
    double best = std::numeric_limits<double>::infinity();
    const size_t n = poly.size();
    if (n == 1) return (p - poly[0]).squaredNorm();
    for (size_t i = 0; i + 1 < n; ++i)
        best = std::min(best, point_segment_dist2(p, poly[i], poly[i + 1]));
    if (closed)
        best = std::min(best, point_segment_dist2(p, poly[n - 1], poly[0]));
    return best;
}

double directed2_polyline(std::span<const Vec2> from, std::span<const Vec2> to,
                          bool to_closed) {
    double worst = 0;
    for (const Vec2& p : from)
        worst = std::max(worst, min_polyline_dist2(p, to, to_closed));
    return worst;
}

std::span<const Vec2> core(std::span<const Vec2> s, bool closed,
                           double trim_fraction) {
    if (closed || trim_fraction <= 0) return s;
    const size_t drop = static_cast<size_t>(trim_fraction * s.size());
    if (2 * drop >= s.size()) return s;
    return s.subspan(drop, s.size() - 2 * drop);
}

} // namespace

double directed_hausdorff(std::span<const Vec2> a, std::span<const Vec2> b) {
    return std::sqrt(directed2(a, b));
}

double hausdorff_distance(std::span<const Vec2> a, std::span<const Vec2> b) {
    return std::sqrt(std::max(directed2(a, b), directed2(b, a)));
}

double directed_hausdorff_polyline(std::span<const Vec2> from,
                                   std::span<const Vec2> to, bool to_closed) {
    return std::sqrt(directed2_polyline(from, to, to_closed));
}

double hausdorff_trimmed(std::span<const Vec2> a, bool a_closed,
                         std::span<const Vec2> b, bool b_closed,
                         double trim_fraction) {
    const double ab =
        directed2_polyline(core(a, a_closed, trim_fraction), b, b_closed);
    const double ba =
        directed2_polyline(core(b, b_closed, trim_fraction), a, a_closed);
    return std::sqrt(std::max(ab, ba));
}

} // namespace mcf
