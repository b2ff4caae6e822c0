/// @file grid.hpp
/// @brief Structured 1D/2D/3D grids with smooth coordinate maps and point location.
///
/// A grid node with index (i, j, k) is placed in two stages:
///   1. Axis-separable coordinates. Along each axis a,
///        xi_a(i)  = origin_a + i * spacing_a
///        u_a(i)   = xi_a(i) + amplitude * spacing_a * sin(pi * xi_a(i))
///      (amplitude is zero unless the grid was perturbed).
///   2. Outer rigid motion: p = R (u - c) + c + t, with rotation R about the
///      center c followed by the translation t.
///
/// Node storage order is lexicographic with the lowest axis fastest:
///   node = i + n0 * (j + n1 * k).
/// Unused axes of lower-dimensional grids have count 1 and spacing 1.

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace bfi {

using Vec3 = std::array<double, 3>;
using Index3 = std::array<std::size_t, 3>;
using Mat3 = std::array<Vec3, 3>;

enum class MapKind { uniform, shifted, rotated, perturbed };

/// Result of locating a physical point in a grid.
struct CellLocation {
  Index3 cell{};   ///< lower corner node index of the containing cell
  Vec3 local{};    ///< isoparametric coordinates in [0,1] per axis
  bool inside = false;
};

class Grid {
 public:
  /// Location tolerance in local (cell-fraction) units; points this close to
  /// the hull are snapped onto it.
  static constexpr double kHullTolerance = 1e-10;
  static constexpr double kNewtonTolerance = 1e-12;
  static constexpr int kNewtonMaxIterations = 25;

  int dim() const { return dim_; }
  const Index3& counts() const { return counts_; }
  std::size_t size() const { return counts_[0] * counts_[1] * counts_[2]; }
  const Vec3& spacing() const { return spacing_; }
  const Vec3& origin() const { return origin_; }
  const Vec3& translation() const { return translation_; }
  double amplitude() const { return amplitude_; }
  bool is_rotated() const { return rotated_; }
  const Mat3& rotation() const { return rotation_; }
  const Vec3& rotation_center() const { return center_; }
  MapKind kind() const;

  std::size_t flatten(const Index3& idx) const {
    return idx[0] + counts_[0] * (idx[1] + counts_[1] * idx[2]);
  }
  Index3 unflatten(std::size_t node) const;
  /// Strides of the linear node index along each axis.
  Index3 strides() const { return {1, counts_[0], counts_[0] * counts_[1]}; }

  /// Axis coordinate u_a(i) before the outer rotation and translation.
  double axis_coordinate(int axis, std::size_t i) const { return axes_[axis][i]; }

  Vec3 position(const Index3& idx) const;
  Vec3 position(std::size_t node) const { return position(unflatten(node)); }
  std::vector<Vec3> positions() const;

  /// Physical point at isoparametric coordinates `local` inside `cell`.
  Vec3 cell_point(const Index3& cell, const Vec3& local) const;

  /// Locate `p`. Throws Error(newton_divergence) when the inverse of a
  /// perturbed axis map does not converge.
  CellLocation locate(const Vec3& p) const;

  /// Axis-aligned bounding box of all nodes: {min, max}.
  std::array<Vec3, 2> bounding_box() const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  friend Grid make_uniform_grid(int, const Index3&, const Vec3&, const Vec3&);
  friend Grid shift_grid(const Grid&, const Vec3&);
  friend Grid rotate_grid(const Grid&, double, const Vec3&, const Vec3&);
  friend Grid perturb_grid(const Grid&, double, const Vec3&);
  friend std::vector<Grid> split_fine_grid(const Grid&, const Index3&);

  void rebuild_axes();
  /// Fractional lattice coordinate (xi - origin)/spacing of axis value u.
  double lattice_coordinate(int axis, double u) const;

  int dim_ = 1;
  Index3 counts_{1, 1, 1};
  Vec3 spacing_{1.0, 1.0, 1.0};
  Vec3 origin_{};
  double amplitude_ = 0.0;
  bool rotated_ = false;
  Mat3 rotation_{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  Vec3 center_{};
  Vec3 translation_{};
  std::array<std::vector<double>, 3> axes_;
};

/// Node i sits at origin + i * spacing. Throws on counts < 2 or spacing <= 0.
Grid make_uniform_grid(int dim, const Index3& counts, const Vec3& spacing,
                       const Vec3& origin);

/// Translate every node by `w`.
Grid shift_grid(const Grid& g, const Vec3& w);

/// Rigid rotation by `angle_deg` about `axis` through `center`. In 2D the
/// axis is implicitly z and the argument is ignored. The axis is normalized
/// when its length is within 1e-12 of one; otherwise the call throws.
Grid rotate_grid(const Grid& g, double angle_deg, const Vec3& axis,
                 const Vec3& center);

/// Smooth sinusoidal perturbation of a uniform (optionally shifted) grid:
/// the lattice is recentred so that xi_a(0) = -L_a/2 and each axis coordinate
/// gains amplitude * spacing_a * sin(pi * xi_a).
Grid perturb_grid(const Grid& g, double amplitude, const Vec3& lengths);

/// Split a uniform/shifted grid into prod(factor) interleaved subgrids.
/// Subgrid order is lexicographic over offsets, lowest axis fastest; see
/// subgrid_offsets().
std::vector<Grid> split_fine_grid(const Grid& fine, const Index3& factor);

/// Offsets matching the order returned by split_fine_grid(). The fine node
/// of subgrid node i is offset + factor * i per axis.
std::vector<Index3> subgrid_offsets(int dim, const Index3& factor);

/// Rotation matrix for `angle_deg` about the unit vector `axis`.
Mat3 rotation_matrix(double angle_deg, const Vec3& axis);

}  // namespace bfi
