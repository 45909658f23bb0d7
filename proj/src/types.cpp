#include "liegamma/types.hpp"

#include <algorithm>
#include <cctype>

namespace liegamma {

int matrix_dim(GroupId g) {
  switch (g) {
    case GroupId::SO2: return 2;
    case GroupId::SE2: return 3;
    case GroupId::AdSE2: return 3;
    case GroupId::SO3: return 3;
    case GroupId::SE3: return 4;
    case GroupId::AdSE3: return 6;
    case GroupId::SE23: return 5;
    case GroupId::AdSE23: return 9;
    case GroupId::SGal3: return 5;
    case GroupId::AdSGal3: return 10;
    case GroupId::Sim3: return 4;
    case GroupId::AdSim3: return 7;
  }
  throw std::logic_error("matrix_dim: bad GroupId");
}

int tangent_dim(GroupId g) {
  switch (g) {
    case GroupId::SO2: return 1;
    case GroupId::SE2: return 3;
    case GroupId::SO3: return 3;
    case GroupId::SE3: return 6;
    case GroupId::SE23: return 9;
    case GroupId::SGal3: return 10;
    case GroupId::Sim3: return 7;
    default:
      throw AdjointGroupNotSupported("tangent_dim: adjoint ids have no tangent layout");
  }
}

bool is_adjoint(GroupId g) {
  switch (g) {
    case GroupId::AdSE2:
    case GroupId::AdSE3:
    case GroupId::AdSE23:
    case GroupId::AdSGal3:
    case GroupId::AdSim3:
      return true;
    default:
      return false;
  }
}

GroupId adjoint_id(GroupId g) {
  switch (g) {
    case GroupId::SO2: return GroupId::SO2;  // degenerate, 1x1 adjoint handled separately
    case GroupId::SO3: return GroupId::SO3;  // self-adjoint
    case GroupId::SE2: return GroupId::AdSE2;
    case GroupId::SE3: return GroupId::AdSE3;
    case GroupId::SE23: return GroupId::AdSE23;
    case GroupId::SGal3: return GroupId::AdSGal3;
    case GroupId::Sim3: return GroupId::AdSim3;
    default:
      throw AdjointGroupNotSupported("adjoint_id: already an adjoint id");
  }
}

const char* group_name(GroupId g) {
  switch (g) {
    case GroupId::SO2: return "so2";
    case GroupId::SE2: return "se2";
    case GroupId::AdSE2: return "adse2";
    case GroupId::SO3: return "so3";
    case GroupId::SE3: return "se3";
    case GroupId::AdSE3: return "adse3";
    case GroupId::SE23: return "se23";
    case GroupId::AdSE23: return "adse23";
    case GroupId::SGal3: return "sgal3";
    case GroupId::AdSGal3: return "adsgal3";
    case GroupId::Sim3: return "sim3";
    case GroupId::AdSim3: return "adsim3";
  }
  return "?";
}

GroupId parse_group(const std::string& name) {
  std::string s = name;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  for (GroupId g : {GroupId::SO2, GroupId::SE2, GroupId::AdSE2, GroupId::SO3, GroupId::SE3,
                    GroupId::AdSE3, GroupId::SE23, GroupId::AdSE23, GroupId::SGal3,
                    GroupId::AdSGal3, GroupId::Sim3, GroupId::AdSim3}) {
    if (s == group_name(g)) return g;
  }
  if (s == "se_2(3)" || s == "se2(3)" || s == "se2_3") return GroupId::SE23;
  throw std::invalid_argument("unknown group: " + name);
}

TangentVector::TangentVector(GroupId group, Eigen::VectorXd coords)
    : group_(group), coords_(std::move(coords)) {
  if (is_adjoint(group_)) {
    throw AdjointGroupNotSupported("TangentVector: use the base group id");
  }
  if (coords_.size() != tangent_dim(group_)) {
    throw std::invalid_argument(std::string("TangentVector: ") + group_name(group_) +
                                " expects " + std::to_string(tangent_dim(group_)) +
                                " coordinates, got " + std::to_string(coords_.size()));
  }
}

TangentVector TangentVector::zero(GroupId group) {
  return {group, Eigen::VectorXd::Zero(tangent_dim(group))};
}

Eigen::Vector3d TangentVector::rho3() const {
  switch (group_) {
    case GroupId::SE3:
    case GroupId::SE23:
    case GroupId::SGal3:
    case GroupId::Sim3:
      return coords_.head<3>();
    default:
      throw std::logic_error("rho3: group has no 3-vector rho");
  }
}

Eigen::Vector2d TangentVector::rho2() const {
  if (group_ != GroupId::SE2) throw std::logic_error("rho2: SE(2) only");
  return coords_.head<2>();
}

Eigen::Vector3d TangentVector::nu() const {
  if (group_ != GroupId::SE23 && group_ != GroupId::SGal3)
    throw std::logic_error("nu: SE_2(3)/SGal(3) only");
  return coords_.segment<3>(3);
}

Eigen::Vector3d TangentVector::phi3() const {
  switch (group_) {
    case GroupId::SO3: return coords_.head<3>();
    case GroupId::SE3: return coords_.segment<3>(3);
    case GroupId::SE23:
    case GroupId::SGal3:
      return coords_.segment<3>(6);
    case GroupId::Sim3: return coords_.segment<3>(3);
    default:
      throw std::logic_error("phi3: group has no 3-vector phi");
  }
}

double TangentVector::phi_scalar() const {
  switch (group_) {
    case GroupId::SO2: return coords_[0];
    case GroupId::SE2: return coords_[2];
    default:
      throw std::logic_error("phi_scalar: SO(2)/SE(2) only");
  }
}

double TangentVector::lambda() const {
  if (group_ != GroupId::Sim3) throw std::logic_error("lambda: Sim(3) only");
  return coords_[6];
}

double TangentVector::tau() const {
  if (group_ != GroupId::SGal3) throw std::logic_error("tau: SGal(3) only");
  return coords_[9];
}

}  // namespace liegamma
