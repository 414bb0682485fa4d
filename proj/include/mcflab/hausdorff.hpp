#ifndef MCFLAB_HAUSDORFF_HPP
#define MCFLAB_HAUSDORFF_HPP

#include <span>
#include <vector>

#include "mcflab/types.hpp"

namespace mcf {

/** Directed Hausdorff distance sup_{a in A} inf_{b in B} |a-b|. */
double directed_hausdorff(std::span<const Vec2> a, std::span<const Vec2> b);

/** Symmetric Hausdorff distance between two point sets. */
double hausdorff_distance(std::span<const Vec2> a, std::span<const Vec2> b);

/** Directed Hausdorff from points to the polyline through `to` (segments,
 * closed if requested); avoids the half-spacing quantization floor of the
 * pure point-set distance. */
double directed_hausdorff_polyline(std::span<const Vec2> from,
                                   std::span<const Vec2> to, bool to_closed);

/** Symmetric polyline Hausdorff with a fraction of each end of both OPEN
 * sequences dropped on the "from" side of each directed sweep;
 * nearest-segment queries still see the full polylines. Open-curve ends
 * carry free-boundary artifacts that are not comparable geometrically.
 * trim = 0 keeps every sample. */
double hausdorff_trimmed(std::span<const Vec2> a, bool a_closed,
                         std::span<const Vec2> b, bool b_closed,
                         double trim_fraction);

} // namespace mcf

#endif
