#include "tvg/geom/pose.hpp"

#include <cmath>

namespace tvg::geom {

Eigen::Matrix3d skew(const Eigen::Vector3d& v) {
    Eigen::Matrix3d m;
    m << 0, -v.z(), v.y(),
         v.z(), 0, -v.x(),
         -v.y(), v.x(), 0;
    return m;
}

Pose se3_exp(const Vector6d& twist) {
    const Eigen::Vector3d omega = twist.head<3>();
    const Eigen::Vector3d v = twist.tail<3>();
    const double theta_sq = omega.squaredNorm();
    const Eigen::Matrix3d W = skew(omega);

    double a, b, c; // sin(t)/t, (1-cos(t))/t^2, (t-sin(t))/t^3
    if (theta_sq < 1e-12) {
        a = 1.0 - theta_sq / 6.0;
        b = 0.5 - theta_sq / 24.0;
        c = 1.0 / 6.0 - theta_sq / 120.0;
    } else {
        const double theta = std::sqrt(theta_sq);
        a = std::sin(theta) / theta;
        b = (1.0 - std::cos(theta)) / theta_sq;
        c = (theta - std::sin(theta)) / (theta_sq * theta);
    }

    Pose out;
    out.rotation = Eigen::Matrix3d::Identity() + a * W + b * W * W;
    const Eigen::Matrix3d V = Eigen::Matrix3d::Identity() + b * W + c * W * W;
    out.translation = V * v;
    return out;
}

Vector6d se3_log(const Pose& pose) {
    const Eigen::Matrix3d& R = pose.rotation;
    const double cos_theta =
        std::clamp((R.trace() - 1.0) * 0.5, -1.0, 1.0);
    const double theta = std::acos(cos_theta);

    Eigen::Vector3d omega;
    if (theta < 1e-6) {
        // R ~ I + W: read the skew part directly.
        omega << (R(2, 1) - R(1, 2)) * 0.5,
                 (R(0, 2) - R(2, 0)) * 0.5,
                 (R(1, 0) - R(0, 1)) * 0.5;
    } else if (theta > M_PI - 1e-6) {
        // Near pi the skew part vanishes; recover the axis from R + I.
        Eigen::Matrix3d A = R + Eigen::Matrix3d::Identity();
        int col = 0;
        A.colwise().norm().maxCoeff(&col);
        Eigen::Vector3d axis = A.col(col).normalized();
        // Canonical branch: fix the sign from the skew part when available.
        Eigen::Vector3d s((R(2, 1) - R(1, 2)), (R(0, 2) - R(2, 0)),
                          (R(1, 0) - R(0, 1)));
        if (s.dot(axis) < 0) axis = -axis;
        omega = theta * axis;
    } else {
        const double k = theta / (2.0 * std::sin(theta));
        omega << k * (R(2, 1) - R(1, 2)),
                 k * (R(0, 2) - R(2, 0)),
                 k * (R(1, 0) - R(0, 1));
    }

    const Eigen::Matrix3d W = skew(omega);
    Eigen::Matrix3d Vinv;
    const double theta_sq = omega.squaredNorm();
    if (theta_sq < 1e-12) {
        Vinv = Eigen::Matrix3d::Identity() - 0.5 * W + (1.0 / 12.0) * W * W;
    } else {
        const double t = std::sqrt(theta_sq);
        const double coef =
            (1.0 / theta_sq) - (1.0 + std::cos(t)) / (2.0 * t * std::sin(t));
        Vinv = Eigen::Matrix3d::Identity() - 0.5 * W + coef * W * W;
    }

    Vector6d out;
    out.head<3>() = omega;
    out.tail<3>() = Vinv * pose.translation;
    return out;
}

std::optional<ProjectedPoint> project(const CameraIntrinsics& K,
                                      const Pose& camera_from_world,
                                      const Eigen::Vector3d& point_world) {
    const Eigen::Vector3d pc = camera_from_world * point_world;
    if (pc.z() <= 0.0) return std::nullopt;
    return ProjectedPoint{
        Eigen::Vector2d(K.fx * pc.x() / pc.z() + K.cx,
                        K.fy * pc.y() / pc.z() + K.cy),
        pc.z()};
}

} // namespace tvg::geom
