#ifndef MCFLAB_TYPES_HPP
#define MCFLAB_TYPES_HPP

#include <Eigen/Core>

namespace mcf {

using Scalar = double;
using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using VecX = Eigen::VectorXd;
using MatX = Eigen::MatrixXd;

} // namespace mcf

#endif
