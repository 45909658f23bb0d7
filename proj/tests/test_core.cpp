#include <doctest.h>

#include <Eigen/Dense>

#include "liegamma/core.hpp"

using namespace liegamma;

TEST_CASE("skew3 acts as cross product") {
  Eigen::Vector3d a(0.3, -1.2, 2.0), b(1.0, 0.5, -0.7);
  CHECK((skew3(a) * b - a.cross(b)).norm() == doctest::Approx(0.0));
  CHECK((skew3(a) + skew3(a).transpose()).norm() == 0.0);
}

TEST_CASE("skew2 is phi times the SO(2) generator") {
  Eigen::Matrix2d S = so2_generator();
  CHECK(S(0, 1) == -1.0);
  CHECK(S(1, 0) == 1.0);
  CHECK((skew2(0.7) - 0.7 * S).norm() == 0.0);
}

TEST_CASE("wedge layouts keep structural zeros") {
  Eigen::VectorXd c(10);
  c << 1, 2, 3, 4, 5, 6, 0.1, 0.2, 0.3, 1.5;
  const Eigen::MatrixXd W = wedge(TangentVector{GroupId::SGal3, c});
  CHECK(W(3, 4) == 1.5);                       // tau slot
  CHECK(W.block(0, 3, 3, 1).isApprox(c.segment(3, 3)));  // nu column
  CHECK(W.block(0, 4, 3, 1).isApprox(c.head(3)));        // rho column
  CHECK(W.row(4).norm() == 0.0);
  CHECK(W(3, 3) == 0.0);

  Eigen::VectorXd s(7);
  s << 1, 2, 3, 0.1, 0.2, 0.3, 0.4;
  const Eigen::MatrixXd Ws = wedge(TangentVector{GroupId::Sim3, s});
  CHECK(Ws(3, 3) == -0.4);
  CHECK(Ws.row(3).head(3).norm() == 0.0);
}

TEST_CASE("curlywedge layouts") {
  CHECK(curlywedge(TangentVector::zero(GroupId::SO2)).rows() == 1);
  CHECK(curlywedge(TangentVector{GroupId::SO2, Eigen::VectorXd::Constant(1, 0.9)})(0, 0) == 0.0);

  Eigen::VectorXd s(7);
  s << 1, 2, 3, 0.1, 0.2, 0.3, 0.4;
  const Eigen::MatrixXd Ws = curlywedge(TangentVector{GroupId::Sim3, s});
  CHECK(Ws(6, 6) == 0.0);  // bottom corner of the 7x7 algebra element
  CHECK(Ws.block(0, 6, 3, 1).isApprox(-s.head(3)));
  CHECK((Ws.block(0, 0, 3, 3) - skew3(s.segment(3, 3)) -
         0.4 * Eigen::Matrix3d::Identity()).norm() == 0.0);
}

TEST_CASE("mat_inverse guards singular input") {
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(3, 3);
  CHECK_THROWS_AS(mat_inverse(A), SingularMatrix);
  A = Eigen::MatrixXd::Identity(3, 3) * 2.0;
  CHECK((mat_inverse(A) - 0.5 * Eigen::MatrixXd::Identity(3, 3)).norm() ==
        doctest::Approx(0.0));
}

TEST_CASE("tangent layout accessors") {
  Eigen::VectorXd c(9);
  c << 1, 2, 3, 4, 5, 6, 7, 8, 9;
  const TangentVector xi{GroupId::SE23, c};
  CHECK(xi.rho3() == Eigen::Vector3d(1, 2, 3));
  CHECK(xi.nu() == Eigen::Vector3d(4, 5, 6));
  CHECK(xi.phi3() == Eigen::Vector3d(7, 8, 9));
  CHECK_THROWS(TangentVector(GroupId::SE3, Eigen::VectorXd::Zero(5)));
  CHECK_THROWS_AS(TangentVector(GroupId::AdSE3, Eigen::VectorXd::Zero(6)),
                  AdjointGroupNotSupported);
}
