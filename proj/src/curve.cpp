#include "mcflab/curve.hpp"

#include <cmath>

#include "mcflab/errors.hpp"

namespace mcf {

double segment_length(const Vec2& a, const Vec2& b,
                      const SurfaceMetric* metric) {
    const double chord = (b - a).norm();
    if (!metric || metric->form() != MetricForm::Isothermal) return chord;
    const Vec2 mid = 0.5 * (a + b);
    return std::exp(metric->coef_unchecked(mid).val) * chord;
}

double curve_length(const Curve& c, const SurfaceMetric* metric) {
    double L = 0;
    for (size_t i = 0; i + 1 < c.pts.size(); ++i)
        L += segment_length(c.pts[i], c.pts[i + 1], metric);
    if (c.closed && c.pts.size() > 1)
        L += segment_length(c.pts.back(), c.pts.front(), metric);
    return L;
}

std::vector<double> arclength_table(const Curve& c,
                                    const SurfaceMetric* metric) {
    std::vector<double> s(c.pts.size(), 0.0);
    for (size_t i = 1; i < c.pts.size(); ++i)
        s[i] = s[i - 1] + segment_length(c.pts[i - 1], c.pts[i], metric);
    if (c.closed && c.pts.size() > 1)
        s.push_back(s.back() +
                    segment_length(c.pts.back(), c.pts.front(), metric));
    return s;
}

namespace {

Vec2 catmull_rom(const Vec2& p0, const Vec2& p1, const Vec2& p2,
                 const Vec2& p3, double t) {
    const double t2 = t * t, t3 = t2 * t;
    return 0.5 * ((2.0 * p1) + (-p0 + p2) * t +
                  (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3) * t2 +
                  (-p0 + 3.0 * p1 - 3.0 * p2 + p3) * t3);
}

} // namespace

Curve resample_arclength(const Curve& c, int n, const SurfaceMetric* metric) {
    if (c.pts.size() < 2) throw TooFewPoints("resample needs >= 2 points");
    if (n < 2) throw TooFewPoints("resample target must be >= 2");

    const auto s = arclength_table(c, metric);
    const double total = s.back();
    const size_t m = c.pts.size();

    auto point_at = [&](size_t seg) -> const Vec2& {
        return c.pts[seg % m];
    };

    Curve out;
    out.param = CurveParam::Arclength;
    out.closed = c.closed;
    out.pts.reserve(n);

    // Closed curves omit the duplicate endpoint; open curves include both.
    const int segments_out = c.closed ? n : n - 1;
    out.spacing = total / segments_out;
    size_t seg = 0;
    for (int i = 0; i < n; ++i) {
        double target = total * double(i) / segments_out;
        if (target > total) target = total;
        while (seg + 1 < s.size() - 1 && s[seg + 1] < target) ++seg;
        const double span = s[seg + 1] - s[seg];
        const double t = span > 0 ? (target - s[seg]) / span : 0.0;

        Vec2 p;
        if (c.closed) {
            p = catmull_rom(point_at(seg + m - 1), point_at(seg),
                            point_at(seg + 1), point_at(seg + 2), t);
        } else {
            // Quadratic phantom nodes keep the end segments curvature-
            // consistent; linear reflection would flatten them and bias
            // repeated resampling outward.
            const Vec2& p1 = c.pts[seg];
            const Vec2& p2 = c.pts[std::min(seg + 1, m - 1)];
            const Vec2 p0 = seg > 0
                                ? c.pts[seg - 1]
                                : 3.0 * c.pts[0] - 3.0 * c.pts[1] + c.pts[2];
            const Vec2 p3 = seg + 2 < m
                                ? c.pts[seg + 2]
                                : 3.0 * c.pts[m - 1] - 3.0 * c.pts[m - 2] +
                                      c.pts[m - 3];
            p = catmull_rom(p0, p1, p2, p3, t);
        }
        out.pts.push_back(p);
    }
    return out;
}

bool arclength_uniform(const Curve& c, const SurfaceMetric* metric,
                       double rel_tol) {
    if (c.pts.size() < 3) return true;
    std::vector<double> lens;
    for (size_t i = 0; i + 1 < c.pts.size(); ++i)
        lens.push_back(segment_length(c.pts[i], c.pts[i + 1], metric));
    if (c.closed)
        lens.push_back(segment_length(c.pts.back(), c.pts.front(), metric));
    double mean = 0;
    for (double l : lens) mean += l;
    mean /= lens.size();
    if (mean <= 0) return false;
    for (double l : lens)
        if (std::abs(l - mean) > rel_tol * mean) return false;
    return true;
}

namespace {

// Finite-difference weights for derivatives up to `order` at point z on the
// given nodes (Fornberg, Math. Comp. 51 (1988) 699-706).
std::vector<std::vector<double>> fornberg_weights(double z,
                                                  const std::vector<double>& x,
                                                  int order) {
    const size_t n = x.size();
    std::vector<std::vector<double>> c(order + 1,
                                       std::vector<double>(n, 0.0));
    double c1 = 1.0;
    double c4 = x[0] - z;
    c[0][0] = 1.0;
    for (size_t i = 1; i < n; ++i) {
        const int mn = static_cast<int>(std::min<size_t>(i, order));
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - z;
        for (size_t j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    c[k][i] = c1 * (k * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for (int k = mn; k >= 1; --k)
                c[k][j] = (c4 * c[k][j] - k * c[k - 1][j]) / c3;
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    return c;
}

} // namespace

std::vector<CurveState> curve_states(const Curve& c,
                                     const SurfaceMetric* metric,
                                     StencilMode mode) {
    const size_t m = c.pts.size();
    if (m < 5) throw TooFewPoints("curve derivatives need >= 5 points");

    // Arclength spacing of every segment, plus the wrap segment if closed.
    std::vector<double> h;
    h.reserve(m);
    for (size_t i = 0; i + 1 < m; ++i)
        h.push_back(segment_length(c.pts[i], c.pts[i + 1], metric));
    if (c.closed) h.push_back(segment_length(c.pts.back(), c.pts.front(), metric));

    // Uniform spacing admits 4th-order central stencils; fall back to the
    // nonuniform 3-point formulas otherwise (resampled curves drift a little).
    double h_mean = 0, h_dev = 0;
    for (double hi : h) h_mean += hi;
    h_mean /= h.size();
    for (double hi : h) h_dev = std::max(h_dev, std::abs(hi - h_mean));
    bool uniform = h_dev <= 1e-3 * h_mean;
    if (c.spacing) {
        // Exact spacing beats the midpoint-rule length estimates.
        h_mean = *c.spacing;
        uniform = true;
    }

    std::vector<CurveState> st(m);
    auto central = [&](size_t i, size_t prev, size_t next, double h1,
                       double h2) {
        const Vec2 dp = c.pts[next] - c.pts[i];
        const Vec2 dm = c.pts[i] - c.pts[prev];
        st[i].pos = c.pts[i];
        st[i].vel = (h1 * h1 * dp + h2 * h2 * dm) / (h1 * h2 * (h1 + h2));
        st[i].acc = 2.0 * (h1 * dp - h2 * dm) / (h1 * h2 * (h1 + h2));
    };
    auto central5 = [&](size_t i) {
        const Vec2 fm2 = c.pts[(i + 2 * m - 2) % m];
        const Vec2 fm1 = c.pts[(i + m - 1) % m];
        const Vec2 f0 = c.pts[i];
        const Vec2 fp1 = c.pts[(i + 1) % m];
        const Vec2 fp2 = c.pts[(i + 2) % m];
        st[i].pos = f0;
        st[i].vel = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h_mean);
        st[i].acc = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) /
                    (12.0 * h_mean * h_mean);
    };

    for (size_t i = 0; i < m; ++i) {
        const bool interior5 = c.closed || (i >= 2 && i + 2 < m);
        if (uniform && interior5) {
            central5(i);
        } else if (c.closed) {
            const size_t prev = (i + m - 1) % m;
            const size_t next = (i + 1) % m;
            central(i, prev, next, h[prev], h[i]);
        } else if (i > 0 && i + 1 < m) {
            central(i, i - 1, i + 1, h[i - 1], h[i]);
        }
    }

    if (!c.closed && mode == StencilMode::FlowSafe) {
        // Compact one-sided stencils: wide ones amplify grid-scale noise
        // under explicit stepping and destabilize the free ends.
        auto compact = [&](size_t i, int dir, double step) {
            const auto& p = c.pts;
            const Vec2 f0 = p[i], f1 = p[i + dir], f2 = p[i + 2 * dir],
                       f3 = p[i + 3 * dir];
            st[i].pos = f0;
            st[i].vel = dir * (-3.0 * f0 + 4.0 * f1 - f2) / (2.0 * step);
            st[i].acc = (2.0 * f0 - 5.0 * f1 + 4.0 * f2 - f3) / (step * step);
        };
        const double h_lo = uniform ? h_mean : 0.5 * (h[0] + h[1]);
        const double h_hi = uniform ? h_mean : 0.5 * (h[m - 2] + h[m - 3]);
        compact(0, +1, h_lo);
        compact(m - 1, -1, h_hi);
    } else if (!c.closed) {
        // Boundary nodes take one-sided stencils over a six-point window;
        // Fornberg weights handle the uneven offsets uniformly.
        const size_t w = std::min<size_t>(6, m);
        auto boundary = [&](size_t i, size_t first, double step) {
            std::vector<double> nodes(w);
            for (size_t k = 0; k < w; ++k)
                nodes[k] = (double(first + k) - double(i)) * step;
            const auto wt = fornberg_weights(0.0, nodes, 2);
            Vec2 vel{0, 0}, acc{0, 0};
            for (size_t k = 0; k < w; ++k) {
                vel += wt[1][k] * c.pts[first + k];
                acc += wt[2][k] * c.pts[first + k];
            }
            st[i].pos = c.pts[i];
            st[i].vel = vel;
            st[i].acc = acc;
        };
        auto local_step = [&](size_t first) {
            if (uniform) return h_mean;
            double acc = 0;
            for (size_t k = 0; k + 1 < w; ++k) acc += h[first + k];
            return acc / double(w - 1);
        };
        boundary(0, 0, local_step(0));
        boundary(m - 1, m - w, local_step(m - w));
        if (uniform && m >= 6) {
            boundary(1, 0, h_mean);
            boundary(m - 2, m - w, h_mean);
        }
    }
    return st;
}


std::vector<UnitSpeedState> unit_speed_states(const SurfaceMetric& metric,
                                              const Curve& c,
                                              StencilMode mode) {
    const auto raw = curve_states(c, &metric, mode);
    const size_t n = raw.size();
    std::vector<UnitSpeedState> out(n);
    std::vector<double> m(n);
    for (size_t i = 0; i < n; ++i) {
        out[i].rho = metric.rho(raw[i].pos);
        out[i].e2rho = std::exp(2 * out[i].rho.val);
        m[i] = std::exp(out[i].rho.val) * raw[i].vel.norm();
    }
    auto mdot = [&](size_t i) {
        if (c.closed) {
            const size_t p = (i + n - 1) % n, q = (i + 1) % n;
            return (m[q] - m[p]) / 2.0;
        }
        if (i == 0) return m[1] - m[0];
        if (i + 1 == n) return m[n - 1] - m[n - 2];
        return (m[i + 1] - m[i - 1]) / 2.0;
    };
    const double total = curve_length(c, &metric);
    const double spacing =
        c.spacing ? *c.spacing : total / (c.closed ? n : n - 1);
    for (size_t i = 0; i < n; ++i) {
        const double mi = m[i];
        const double md = mdot(i) / spacing;
        out[i].state.pos = raw[i].pos;
        out[i].state.vel = raw[i].vel / mi;
        out[i].state.acc =
            raw[i].acc / (mi * mi) - raw[i].vel * md / (mi * mi * mi);
    }
    return out;
}

bool self_intersects(const Curve& c) {
    const size_t m = c.pts.size();
    if (m < 4) return false;
    const size_t nseg = c.closed ? m : m - 1;
    auto seg = [&](size_t i) {
        return std::pair<Vec2, Vec2>{c.pts[i], c.pts[(i + 1) % m]};
    };
    auto orient = [](const Vec2& a, const Vec2& b, const Vec2& p) {
        return (b.x() - a.x()) * (p.y() - a.y()) -
               (b.y() - a.y()) * (p.x() - a.x());
    };
    for (size_t i = 0; i < nseg; ++i) {
        auto [a1, a2] = seg(i);
        for (size_t j = i + 2; j < nseg; ++j) {
            if (c.closed && i == 0 && j == nseg - 1) continue; // adjacent
            auto [b1, b2] = seg(j);
            const double o1 = orient(a1, a2, b1), o2 = orient(a1, a2, b2);
            const double o3 = orient(b1, b2, a1), o4 = orient(b1, b2, a2);
            if (((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0))) return true;
        }
    }
    return false;
}

} // namespace mcf
