#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "carpose/errors.hpp"

namespace carpose {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr int kNumKeypoints = 66;

/// Pinhole camera, pixel units, no distortion. Camera frame: +x right,
/// +y down, +z forward.
struct Intrinsics {
  double fx = 0.0;
  double fy = 0.0;
  double ux = 0.0;
  double uy = 0.0;
  int width = 0;
  int height = 0;
};

/// Unit quaternion stored canonicalized (first nonzero of w,x,y,z positive)
/// so equal rotations have equal components. Normalized at construction.
class UnitQuaternion {
 public:
  UnitQuaternion() : w_(1.0), x_(0.0), y_(0.0), z_(0.0) {}
  UnitQuaternion(double w, double x, double y, double z);

  static UnitQuaternion identity() { return {}; }
  static UnitQuaternion from_axis_angle(const Vec3& axis, double angle_rad);
  static UnitQuaternion from_eigen(const Eigen::Quaterniond& q) {
    return {q.w(), q.x(), q.y(), q.z()};
  }

  double w() const { return w_; }
  double x() const { return x_; }
  double y() const { return y_; }
  double z() const { return z_; }

  Eigen::Quaterniond to_eigen() const { return {w_, x_, y_, z_}; }
  Mat3 to_matrix() const { return to_eigen().toRotationMatrix(); }

  Vec3 rotate(const Vec3& v) const { return to_eigen() * v; }
  UnitQuaternion inverse() const { return {w_, -x_, -y_, -z_}; }
  UnitQuaternion operator*(const UnitQuaternion& rhs) const {
    return from_eigen(to_eigen() * rhs.to_eigen());
  }

  double dot(const UnitQuaternion& rhs) const {
    return w_ * rhs.w_ + x_ * rhs.x_ + y_ * rhs.y_ + z_ * rhs.z_;
  }

 private:
  double w_, x_, y_, z_;
};

/// Rigid transform from model coordinates to camera coordinates.
struct Pose {
  UnitQuaternion rotation;
  Vec3 translation{0.0, 0.0, 0.0};

  Vec3 apply(const Vec3& p) const { return rotation.rotate(p) + translation; }
  static Pose identity() { return {}; }
};

/// Watertight triangle mesh in meters with 66 semantically indexed keypoints.
/// Model frame: origin at the 3D bounding-box center, +z forward, vertical
/// axis = y (down, matching the camera frame); height is the y extent.
struct CarModel {
  int id = 0;
  std::string name;
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::array<Vec3, kNumKeypoints> keypoints3d{};
  double height = 0.0;
};

struct KeypointSlot {
  double x = 0.0;
  double y = 0.0;
  bool labelled = false;
};

/// Per-car 2D keypoint annotation, one slot per semantic index.
struct KeypointObservation {
  std::array<KeypointSlot, kNumKeypoints> slots{};

  int labelled_count() const {
    int n = 0;
    for (const auto& s : slots) n += s.labelled ? 1 : 0;
    return n;
  }
};

enum class Surface { Front = 0, Left = 1, Rear = 2, Right = 3 };

/// Keypoint indices belonging to one of the four car surfaces. Indices 22 and
/// 23 belong to no surface.
const std::vector<int>& surface_keypoints(Surface s);

/// Surface owning keypoint k, or nullopt for the two unassigned indices.
std::optional<Surface> surface_of_keypoint(int k);

/// Human-readable name of semantic keypoint k (0..65).
const char* keypoint_name(int k);

/// Perspective projection of a model point through pose p. Throws
/// BehindCameraError when the transformed depth is <= 1e-9.
Vec2 project(const Intrinsics& K, const Pose& p, const Vec3& x3);

/// Inverse of projection at known depth d (camera frame). Throws
/// NonpositiveDepthError when d <= 0.
Vec3 backproject(const Intrinsics& K, const Vec2& pixel, double depth);

/// Geodesic distance arccos(|q1.q2|) in [0, pi/2]. Sign-flip invariant.
double rotation_distance(const UnitQuaternion& q1, const UnitQuaternion& q2);

/// Compose an allocentric rotation with the rotation taking +z to the
/// (normalized) center ray. Throws ZeroRayError on a zero ray.
UnitQuaternion allocentric_to_egocentric(const UnitQuaternion& alloc,
                                         const Vec3& center_ray);
UnitQuaternion egocentric_to_allocentric(const UnitQuaternion& ego,
                                         const Vec3& center_ray);

/// Yaw about the vertical axis (y), pitch about the lateral axis (x), roll
/// about the longitudinal axis (z); R = Ry(yaw) * Rx(pitch) * Rz(roll).
/// A pure heading rotation therefore has roll = pitch = 0.
struct EulerAngles {
  double roll = 0.0;
  double pitch = 0.0;
  double yaw = 0.0;
};

/// Throws GimbalDegenerateError when |pitch| is within 1e-6 of pi/2.
EulerAngles euler_from_pose(const Pose& p);
UnitQuaternion quaternion_from_euler(const EulerAngles& e);

/// Heading-only rotation, the common case for vehicles on a ground plane.
inline UnitQuaternion yaw_rotation(double yaw) {
  return UnitQuaternion::from_axis_angle(Vec3(0, 1, 0), yaw);
}

}  // namespace carpose
