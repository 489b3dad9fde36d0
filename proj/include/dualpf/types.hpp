#pragma once

#include <Eigen/Dense>

namespace dualpf {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

}  // namespace dualpf
