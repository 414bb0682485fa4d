#include "mcflab/fields.hpp"

namespace mcf {

Field2 constant_field(double c) {
    return [c](const Vec2&) { return Jet2{c, 0, 0, 0, 0, 0}; };
}

Field2 fd_wrap(std::function<double(const Vec2&)> f, double step) {
    // Second partials are rounded off badly at the first-derivative step;
    // widen the stencil for them.
    const double h = step;
    const double h2 = std::max(step, 1e-4);
    return [f = std::move(f), h, h2](const Vec2& p) {
        Jet2 j;
        const double x = p.x(), y = p.y();
        j.val = f(p);
        j.d1 = (f({x + h, y}) - f({x - h, y})) / (2 * h);
        j.d2 = (f({x, y + h}) - f({x, y - h})) / (2 * h);
        j.d11 = (f({x + h2, y}) - 2 * j.val + f({x - h2, y})) / (h2 * h2);
        j.d22 = (f({x, y + h2}) - 2 * j.val + f({x, y - h2})) / (h2 * h2);
        j.d12 = (f({x + h2, y + h2}) - f({x + h2, y - h2}) -
                 f({x - h2, y + h2}) + f({x - h2, y - h2})) /
                (4 * h2 * h2);
        return j;
    };
}

} // namespace mcf
