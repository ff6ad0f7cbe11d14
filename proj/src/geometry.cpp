#include "carpose/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace carpose {

UnitQuaternion::UnitQuaternion(double w, double x, double y, double z) {
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  if (n < 1e-12) throw GimbalDegenerateError("zero-norm quaternion");
  w_ = w / n;
  x_ = x / n;
  y_ = y / n;
  z_ = z / n;
  // canonical sign: first nonzero of (w, x, y, z) positive
  double lead = w_;
  if (lead == 0.0) lead = x_;
  if (lead == 0.0) lead = y_;
  if (lead == 0.0) lead = z_;
  if (lead < 0.0) {
    w_ = -w_;
    x_ = -x_;
    y_ = -y_;
    z_ = -z_;
  }
  if (w_ == 0.0) w_ = 0.0;  // normalize -0.0
}

UnitQuaternion UnitQuaternion::from_axis_angle(const Vec3& axis, double angle_rad) {
  const double n = axis.norm();
  if (n < 1e-15) {
    if (std::abs(angle_rad) < 1e-15) return identity();
    throw ZeroRayError("zero rotation axis");
  }
  const double half = 0.5 * angle_rad;
  const Vec3 a = axis / n;
  return {std::cos(half), a.x() * std::sin(half), a.y() * std::sin(half),
          a.z() * std::sin(half)};
}

const std::vector<int>& surface_keypoints(Surface s) {
  static const std::vector<int> front = {0,  1,  2,  3,  4,  5,  6,  8,  49, 51,
                                         52, 53, 54, 55, 56, 57, 58, 59, 60, 61};
  static const std::vector<int> left = {7,  9,  10, 11, 12, 13, 14,
                                        15, 16, 17, 18, 19, 20, 21};
  static const std::vector<int> rear = {24, 25, 26, 27, 28, 29, 30, 31,
                                        32, 33, 34, 35, 62, 63, 64, 65};
  static const std::vector<int> right = {36, 37, 38, 39, 40, 41, 42,
                                         43, 44, 45, 46, 47, 48, 50};
  switch (s) {
    case Surface::Front:
      return front;
    case Surface::Left:
      return left;
    case Surface::Rear:
      return rear;
    case Surface::Right:
      return right;
  }
  return front;  // unreachable
}

std::optional<Surface> surface_of_keypoint(int k) {
  static const std::array<int8_t, kNumKeypoints> lut = [] {
    std::array<int8_t, kNumKeypoints> t{};
    t.fill(-1);
    for (int s = 0; s < 4; ++s)
      for (int idx : surface_keypoints(static_cast<Surface>(s))) t[idx] = static_cast<int8_t>(s);
    return t;
  }();
  if (k < 0 || k >= kNumKeypoints) return std::nullopt;
  if (lut[k] < 0) return std::nullopt;
  return static_cast<Surface>(lut[k]);
}

const char* keypoint_name(int k) {
  static const char* names[kNumKeypoints] = {
      "top left corner of left front car light",
      "bottom left corner of left front car light",
      "top right corner of left front car light",
      "bottom right corner of left front car light",
      "top right corner of left front fog light",
      "bottom right corner of left front fog light",
      "front section of left front wheel",
      "center of left front wheel",
      "top right corner of front glass",
      "top left corner of left front door",
      "bottom left corner of left front door",
      "top right corner of left front door",
      "middle corner of left front door",
      "front corner of car handle of left front door",
      "rear corner of car handle of left front door",
      "bottom right corner of left front door",
      "top right corner of left rear door",
      "front corner of car handle of left rear door",
      "rear corner of car handle of left rear door",
      "bottom right corner of left rear door",
      "center of left rear wheel",
      "rear section of left rear wheel",
      "top left corner of left rear car light",
      "bottom left corner of left rear car light",
      "top left corner of rear glass",
      "top right corner of left rear car light",
      "bottom right corner of left rear car light",
      "bottom left corner of trunk",
      "left corner of rear bumper",
      "right corner of rear bumper",
      "bottom right corner of trunk",
      "bottom left corner of right rear car light",
      "top left corner of right rear car light",
      "top right corner of rear glass",
      "bottom right corner of right rear car light",
      "top right corner of right rear car light",
      "rear section of right rear wheel",
      "center of right rear wheel",
      "bottom left corner of right rear car door",
      "rear corner of car handle of right rear car door",
      "front corner of car handle of right rear car door",
      "top left corner of right rear car door",
      "bottom left corner of right front car door",
      "rear corner of car handle of right front car door",
      "front corner of car handle of right front car door",
      "middle corner of right front car door",
      "top left corner of right front car door",
      "bottom right corner of right front car door",
      "top right corner of right front car door",
      "top left corner of front glass",
      "center of right front wheel",
      "front section of right front wheel",
      "bottom left corner of right fog light",
      "top left corner of right fog light",
      "bottom left corner of right front car light",
      "top left corner of right front car light",
      "bottom right corner of right front car light",
      "top right corner of right front car light",
      "top right corner of front license plate",
      "top left corner of front license plate",
      "bottom left corner of front license plate",
      "bottom right corner of front license plate",
      "top left corner of rear license plate",
      "top right corner of rear license plate",
      "bottom right corner of rear license plate",
      "bottom left corner of rear license plate",
  };
  if (k < 0 || k >= kNumKeypoints) return "invalid keypoint index";
  return names[k];
}

Vec2 project(const Intrinsics& K, const Pose& p, const Vec3& x3) {
  const Vec3 c = p.apply(x3);
  if (c.z() <= 1e-9) throw BehindCameraError("point behind camera");
  return {K.fx * c.x() / c.z() + K.ux, K.fy * c.y() / c.z() + K.uy};
}

Vec3 backproject(const Intrinsics& K, const Vec2& pixel, double depth) {
  if (depth <= 0.0) throw NonpositiveDepthError("nonpositive depth");
  return {depth * (pixel.x() - K.ux) / K.fx, depth * (pixel.y() - K.uy) / K.fy,
          depth};
}

double rotation_distance(const UnitQuaternion& q1, const UnitQuaternion& q2) {
  const double d = std::clamp(std::abs(q1.dot(q2)), 0.0, 1.0);
  return std::acos(d);
}

namespace {

UnitQuaternion ray_alignment(const Vec3& center_ray) {
  const double n = center_ray.norm();
  if (n < 1e-15) throw ZeroRayError("zero center ray");
  const Vec3 r = center_ray / n;
  const Vec3 z(0, 0, 1);
  const Vec3 axis = z.cross(r);
  const double s = axis.norm();
  const double c = z.dot(r);
  if (s < 1e-15) {
    if (c > 0.0) return UnitQuaternion::identity();
    return UnitQuaternion::from_axis_angle(Vec3(1, 0, 0), M_PI);
  }
  return UnitQuaternion::from_axis_angle(axis / s, std::atan2(s, c));
}

}  // namespace

UnitQuaternion allocentric_to_egocentric(const UnitQuaternion& alloc,
                                         const Vec3& center_ray) {
  return ray_alignment(center_ray) * alloc;
}

UnitQuaternion egocentric_to_allocentric(const UnitQuaternion& ego,
                                         const Vec3& center_ray) {
  return ray_alignment(center_ray).inverse() * ego;
}

EulerAngles euler_from_pose(const Pose& p) {
  const Mat3 R = p.rotation.to_matrix();
  // R = Ry(yaw) Rx(pitch) Rz(roll); middle row is [cp*sr, cp*cr, -sp]
  const double sp = std::clamp(-R(1, 2), -1.0, 1.0);
  const double pitch = std::asin(sp);
  if (std::abs(pitch) > M_PI / 2.0 - 1e-6)
    throw GimbalDegenerateError("pitch at +-pi/2");
  EulerAngles e;
  e.pitch = pitch;
  e.yaw = std::atan2(R(0, 2), R(2, 2));
  e.roll = std::atan2(R(1, 0), R(1, 1));
  return e;
}

UnitQuaternion quaternion_from_euler(const EulerAngles& e) {
  return UnitQuaternion::from_axis_angle(Vec3(0, 1, 0), e.yaw) *
         UnitQuaternion::from_axis_angle(Vec3(1, 0, 0), e.pitch) *
         UnitQuaternion::from_axis_angle(Vec3(0, 0, 1), e.roll);
}

}  // namespace carpose
