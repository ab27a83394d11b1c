#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <optional>

namespace tvg::geom {

using Vector6d = Eigen::Matrix<double, 6, 1>;

// Rigid transform on SE(3). By convention a frame pose is world-from-camera;
// functions taking a transform in another direction say so in the argument
// name.
struct Pose {
    Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
    Eigen::Vector3d translation = Eigen::Vector3d::Zero();

    static Pose identity() { return Pose{}; }

    static Pose from_quaternion(const Eigen::Quaterniond& q,
                                const Eigen::Vector3d& t) {
        return Pose{q.normalized().toRotationMatrix(), t};
    }

    Eigen::Quaterniond quaternion() const {
        return Eigen::Quaterniond(rotation).normalized();
    }

    Eigen::Vector3d operator*(const Eigen::Vector3d& p) const {
        return rotation * p + translation;
    }

    Pose operator*(const Pose& rhs) const {
        return Pose{rotation * rhs.rotation,
                    rotation * rhs.translation + translation};
    }

    Pose inverse() const {
        Eigen::Matrix3d rt = rotation.transpose();
        return Pose{rt, -(rt * translation)};
    }

    // Max-norm deviation of R^T R from the identity.
    double orthonormality_error() const {
        return (rotation.transpose() * rotation -
                Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
    }

    bool is_valid(double tol = 1e-9) const {
        return orthonormality_error() < tol && rotation.determinant() > 0.0 &&
               translation.allFinite();
    }
};

// Similarity transform: p -> s * R * p + t, with s > 0.
struct SimilarityTransform {
    double scale = 1.0;
    Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
    Eigen::Vector3d translation = Eigen::Vector3d::Zero();

    Eigen::Vector3d operator*(const Eigen::Vector3d& p) const {
        return scale * (rotation * p) + translation;
    }

    SimilarityTransform inverse() const {
        Eigen::Matrix3d rt = rotation.transpose();
        return SimilarityTransform{1.0 / scale, rt,
                                   -(rt * translation) / scale};
    }
};

struct CameraIntrinsics {
    double fx = 0, fy = 0;
    double cx = 0, cy = 0;
    int width = 0, height = 0;

    bool is_valid() const {
        return fx > 0 && fy > 0 && cx > 0 && cx < width && cy > 0 &&
               cy < height && width > 0 && height > 0;
    }

    // Pixel -> normalized image coordinates (intrinsics removed).
    Eigen::Vector2d normalize(const Eigen::Vector2d& px) const {
        return {(px.x() - cx) / fx, (px.y() - cy) / fy};
    }

    Eigen::Vector2d denormalize(const Eigen::Vector2d& n) const {
        return {n.x() * fx + cx, n.y() * fy + cy};
    }
};

Eigen::Matrix3d skew(const Eigen::Vector3d& v);

// Exponential map. Twist layout: [rotation; translation].
Pose se3_exp(const Vector6d& twist);

// Logarithm; canonical branch with rotation angle in [0, pi].
Vector6d se3_log(const Pose& pose);

struct ProjectedPoint {
    Eigen::Vector2d pixel;
    double depth; // camera-frame Z
};

// Pinhole projection. Returns nullopt when the point is at or behind the
// camera plane.
std::optional<ProjectedPoint> project(const CameraIntrinsics& K,
                                      const Pose& camera_from_world,
                                      const Eigen::Vector3d& point_world);

} // namespace tvg::geom
