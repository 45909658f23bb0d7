#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace liegamma {

// The twelve matrix representations handled by the library: seven groups
// plus the adjoint representations that differ from the group itself.
enum class GroupId {
  SO2,
  SE2,
  AdSE2,
  SO3,
  SE3,
  AdSE3,
  SE23,
  AdSE23,
  SGal3,
  AdSGal3,
  Sim3,
  AdSim3,
};

// Side of the square matrix carrying elements of the representation.
int matrix_dim(GroupId g);

// Number of tangent coordinates (non-adjoint ids only).
int tangent_dim(GroupId g);

bool is_adjoint(GroupId g);

// Adjoint representation id for a non-adjoint group id.
GroupId adjoint_id(GroupId g);

const char* group_name(GroupId g);

// Parses names like "se3", "SGal3", "adse2" (case-insensitive).
GroupId parse_group(const std::string& name);

struct AdjointGroupNotSupported : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct SingularMatrix : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownFamily : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct SeriesNotConverged : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotImplementedClosedForm : std::logic_error {
  using std::logic_error::logic_error;
};
struct UnsupportedAlgebra : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct UnknownSuite : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Tangent coordinates tagged with their group.  The flat vector is kept in
// the printed component order of each group:
//   SO(2)/SO(3):  phi
//   SE(2):        rho(2), phi
//   SE(3):        rho, phi
//   SE_2(3):      rho, nu, phi
//   SGal(3):      rho, nu, phi, tau
//   Sim(3):       rho, phi, lambda
class TangentVector {
 public:
  TangentVector(GroupId group, Eigen::VectorXd coords);

  static TangentVector zero(GroupId group);

  GroupId group() const { return group_; }
  const Eigen::VectorXd& coords() const { return coords_; }

  Eigen::Vector3d rho3() const;     // SE3, SE23, SGal3, Sim3
  Eigen::Vector2d rho2() const;     // SE2
  Eigen::Vector3d nu() const;       // SE23, SGal3
  Eigen::Vector3d phi3() const;     // SO3, SE3, SE23, SGal3, Sim3
  double phi_scalar() const;        // SO2, SE2
  double lambda() const;            // Sim3
  double tau() const;               // SGal3

  TangentVector scaled(double a) const { return {group_, (a * coords_).eval()}; }

 private:
  GroupId group_;
  Eigen::VectorXd coords_;
};

}  // namespace liegamma
