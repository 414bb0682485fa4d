#ifndef MCFLAB_CURVE_IO_HPP
#define MCFLAB_CURVE_IO_HPP

#include <string>
#include <vector>

#include "mcflab/curve.hpp"
#include "mcflab/soliton.hpp"

namespace mcf {

enum class CurveFormat { CSV, JSON };

/** A curve with its ODE states: columns (s, u, v, w, z). */
struct CurveRecord {
    std::vector<double> s, u, v, w, z;

    size_t size() const { return s.size(); }

    static CurveRecord from_run(const SolitonRun& run);
    static CurveRecord from_curve(const Curve& c, const SurfaceMetric* metric);
    Curve to_curve(bool closed = false) const;
};

/** Writes the record with header "s,u,v,w,z"; values round-trip bit-exactly
 * for finite doubles. JSON mirrors the same five fields. */
void export_curve(const CurveRecord& rec, const std::string& path,
                  CurveFormat format);

/** Same columns plus a per-point residual column (s,u,v,w,z,residual). */
void export_curve_with_residual(const CurveRecord& rec,
                                const std::vector<double>& residual,
                                const std::string& path);

CurveRecord import_curve(const std::string& path, CurveFormat format);

/** Shortest round-trip decimal form of a double. */
std::string format_double(double x);

} // namespace mcf

#endif
