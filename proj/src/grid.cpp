#include "bfi/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bfi/error.hpp"

namespace bfi {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw Error(ErrorCode::invalid_argument, msg);
}

Vec3 mat_vec(const Mat3& m, const Vec3& v) {
  return {m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
          m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
          m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2]};
}

Vec3 mat_t_vec(const Mat3& m, const Vec3& v) {
  return {m[0][0] * v[0] + m[1][0] * v[1] + m[2][0] * v[2],
          m[0][1] * v[0] + m[1][1] * v[1] + m[2][1] * v[2],
          m[0][2] * v[0] + m[1][2] * v[1] + m[2][2] * v[2]};
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

}  // namespace

MapKind Grid::kind() const {
  if (amplitude_ != 0.0) return MapKind::perturbed;
  if (rotated_) return MapKind::rotated;
  if (translation_ != Vec3{}) return MapKind::shifted;
  return MapKind::uniform;
}

Index3 Grid::unflatten(std::size_t node) const {
  Index3 idx{};
  idx[0] = node % counts_[0];
  node /= counts_[0];
  idx[1] = node % counts_[1];
  idx[2] = node / counts_[1];
  return idx;
}

void Grid::rebuild_axes() {
  for (int a = 0; a < 3; ++a) {
    auto& axis = axes_[a];
    axis.resize(counts_[a]);
    for (std::size_t i = 0; i < counts_[a]; ++i) {
      const double xi = origin_[a] + static_cast<double>(i) * spacing_[a];
      axis[i] = (a < dim_ && amplitude_ != 0.0)
                    ? xi + amplitude_ * spacing_[a] * std::sin(std::numbers::pi * xi)
                    : xi;
    }
  }
}

Vec3 Grid::position(const Index3& idx) const {
  Vec3 u{axes_[0][idx[0]], axes_[1][idx[1]], axes_[2][idx[2]]};
  if (!rotated_) {
    return {u[0] + translation_[0], u[1] + translation_[1], u[2] + translation_[2]};
  }
  const Vec3 r = mat_vec(rotation_, {u[0] - center_[0], u[1] - center_[1], u[2] - center_[2]});
  return {r[0] + center_[0] + translation_[0], r[1] + center_[1] + translation_[1],
          r[2] + center_[2] + translation_[2]};
}

std::vector<Vec3> Grid::positions() const {
  std::vector<Vec3> out(size());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = position(n);
  return out;
}

Vec3 Grid::cell_point(const Index3& cell, const Vec3& local) const {
  Vec3 u{};
  for (int a = 0; a < 3; ++a) {
    if (a < dim_) {
      const double x0 = axes_[a][cell[a]];
      const double x1 = axes_[a][cell[a] + 1];
      u[a] = x0 + local[a] * (x1 - x0);
    } else {
      u[a] = axes_[a][0];
    }
  }
  if (!rotated_) {
    return {u[0] + translation_[0], u[1] + translation_[1], u[2] + translation_[2]};
  }
  const Vec3 r = mat_vec(rotation_, {u[0] - center_[0], u[1] - center_[1], u[2] - center_[2]});
  return {r[0] + center_[0] + translation_[0], r[1] + center_[1] + translation_[1],
          r[2] + center_[2] + translation_[2]};
}

double Grid::lattice_coordinate(int axis, double u) const {
  const double h = spacing_[axis];
  if (amplitude_ == 0.0) return (u - origin_[axis]) / h;

  // Solve xi + A sin(pi xi) = u; the unperturbed inverse is the initial guess.
  const double amp = amplitude_ * h;
  double xi = u;
  for (int it = 0; it < kNewtonMaxIterations; ++it) {
    const double arg = std::numbers::pi * xi;
    const double residual = xi + amp * std::sin(arg) - u;
    const double slope = 1.0 + amp * std::numbers::pi * std::cos(arg);
    const double step = residual / slope;
    xi -= step;
    if (std::abs(step) <= kNewtonTolerance * h ||
        std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(xi)) {
      return (xi - origin_[axis]) / h;
    }
  }
  throw Error(ErrorCode::newton_divergence,
              "perturbed-axis inversion did not converge for coordinate " + std::to_string(u));
}

CellLocation Grid::locate(const Vec3& p) const {
  Vec3 q;
  if (!rotated_) {
    q = {p[0] - translation_[0], p[1] - translation_[1], p[2] - translation_[2]};
  } else {
    const Vec3 r = mat_t_vec(rotation_, {p[0] - translation_[0] - center_[0],
                                         p[1] - translation_[1] - center_[1],
                                         p[2] - translation_[2] - center_[2]});
    q = {r[0] + center_[0], r[1] + center_[1], r[2] + center_[2]};
  }

  CellLocation loc;
  loc.inside = true;
  for (int a = 0; a < dim_; ++a) {
    const auto& axis = axes_[a];
    const std::size_t n = counts_[a];
    const double s = lattice_coordinate(a, q[a]);
    if (!(s >= -kHullTolerance && s <= static_cast<double>(n - 1) + kHullTolerance)) {
      loc.inside = false;
      return loc;
    }
    std::size_t i = static_cast<std::size_t>(
        std::clamp(std::floor(s), 0.0, static_cast<double>(n - 2)));
    // Lower cell preferred: x_i <= q < x_{i+1}, except at the upper hull.
    while (i + 2 < n && q[a] >= axis[i + 1]) ++i;
    while (i > 0 && q[a] < axis[i]) --i;
    const double t = (q[a] - axis[i]) / (axis[i + 1] - axis[i]);
    loc.cell[a] = i;
    loc.local[a] = std::clamp(t, 0.0, 1.0);
  }
  return loc;
}

std::array<Vec3, 2> Grid::bounding_box() const {
  Vec3 lo{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
          std::numeric_limits<double>::max()};
  Vec3 hi{-lo[0], -lo[1], -lo[2]};
  for (int corner = 0; corner < 8; ++corner) {
    Index3 idx{};
    for (int a = 0; a < 3; ++a) idx[a] = ((corner >> a) & 1) ? counts_[a] - 1 : 0;
    const Vec3 p = position(idx);
    for (int a = 0; a < 3; ++a) {
      lo[a] = std::min(lo[a], p[a]);
      hi[a] = std::max(hi[a], p[a]);
    }
  }
  return {lo, hi};
}

Grid make_uniform_grid(int dim, const Index3& counts, const Vec3& spacing,
                       const Vec3& origin) {
  require(dim >= 1 && dim <= 3, "grid dimension must be 1, 2 or 3");
  Grid g;
  g.dim_ = dim;
  for (int a = 0; a < 3; ++a) {
    if (a < dim) {
      require(counts[a] >= 2, "grid needs at least 2 nodes per axis (axis " +
                                  std::to_string(a) + ")");
      require(std::isfinite(spacing[a]) && spacing[a] > 0.0,
              "grid spacing must be positive (axis " + std::to_string(a) + ")");
      require(std::isfinite(origin[a]), "grid origin must be finite");
      g.counts_[a] = counts[a];
      g.spacing_[a] = spacing[a];
      g.origin_[a] = origin[a];
    } else {
      g.counts_[a] = 1;
      g.spacing_[a] = 1.0;
      g.origin_[a] = 0.0;
    }
  }
  g.rebuild_axes();
  return g;
}

Grid shift_grid(const Grid& g, const Vec3& w) {
  Grid out = g;
  for (int a = 0; a < g.dim_; ++a) {
    require(std::isfinite(w[a]), "shift vector must be finite");
    out.translation_[a] += w[a];
  }
  return out;
}

Mat3 rotation_matrix(double angle_deg, const Vec3& axis) {
  const double theta = angle_deg * std::numbers::pi / 180.0;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double C = 1.0 - c;
  const double x = axis[0], y = axis[1], z = axis[2];
  return {{{c + x * x * C, x * y * C - z * s, x * z * C + y * s},
           {y * x * C + z * s, c + y * y * C, y * z * C - x * s},
           {z * x * C - y * s, z * y * C + x * s, c + z * z * C}}};
}

Grid rotate_grid(const Grid& g, double angle_deg, const Vec3& axis, const Vec3& center) {
  require(g.dim_ >= 2, "rotation requires a 2D or 3D grid");
  require(std::isfinite(angle_deg), "rotation angle must be finite");
  Vec3 unit{0.0, 0.0, 1.0};
  Vec3 c = center;
  if (g.dim_ == 3) {
    const double len = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    require(std::abs(len - 1.0) <= 1e-12,
            "rotation axis must be a unit vector (length " + std::to_string(len) + ")");
    unit = {axis[0] / len, axis[1] / len, axis[2] / len};
  } else {
    c[2] = 0.0;
  }
  const Mat3 r_new = rotation_matrix(angle_deg, unit);

  // p' = R'(R(u - c0) + c0 + t - c) + c  =  R'R (u - c0) + c0 + t'.
  Grid out = g;
  out.rotated_ = true;
  out.rotation_ = mat_mul(r_new, g.rotation_);
  const Vec3 v{g.center_[0] + g.translation_[0] - c[0], g.center_[1] + g.translation_[1] - c[1],
               g.center_[2] + g.translation_[2] - c[2]};
  const Vec3 rv = mat_vec(r_new, v);
  for (int a = 0; a < 3; ++a) out.translation_[a] = rv[a] + c[a] - g.center_[a];
  if (g.dim_ == 2) out.translation_[2] = g.translation_[2];
  return out;
}

Grid perturb_grid(const Grid& g, double amplitude, const Vec3& lengths) {
  require(!g.rotated_, "perturbation applies to unrotated grids");
  require(std::isfinite(amplitude) && std::abs(amplitude) * std::numbers::pi < 1.0,
          "perturbation amplitude must satisfy |amplitude| * pi < 1");
  Grid out = g;
  out.amplitude_ = amplitude;
  for (int a = 0; a < g.dim_; ++a) {
    require(std::isfinite(lengths[a]) && lengths[a] > 0.0, "domain lengths must be positive");
    require(std::abs(amplitude) * std::numbers::pi * g.spacing_[a] < 1.0,
            "perturbation is not monotone at this spacing");
    out.origin_[a] = -0.5 * lengths[a];
  }
  out.rebuild_axes();
  return out;
}

std::vector<Index3> subgrid_offsets(int dim, const Index3& factor) {
  std::vector<Index3> out;
  const std::size_t fx = factor[0];
  const std::size_t fy = dim >= 2 ? factor[1] : 1;
  const std::size_t fz = dim >= 3 ? factor[2] : 1;
  for (std::size_t k = 0; k < fz; ++k)
    for (std::size_t j = 0; j < fy; ++j)
      for (std::size_t i = 0; i < fx; ++i) out.push_back({i, j, k});
  return out;
}

std::vector<Grid> split_fine_grid(const Grid& fine, const Index3& factor) {
  require(!fine.rotated_ && fine.amplitude_ == 0.0,
          "only uniform or shifted grids can be split");
  for (int a = 0; a < fine.dim_; ++a) require(factor[a] >= 1, "split factor must be >= 1");

  std::vector<Grid> out;
  for (const Index3& off : subgrid_offsets(fine.dim_, factor)) {
    Grid sub = fine;
    for (int a = 0; a < fine.dim_; ++a) {
      const std::size_t n = (fine.counts_[a] - off[a] + factor[a] - 1) / factor[a];
      require(n >= 2, "split factor leaves a subgrid with fewer than 2 nodes on axis " +
                          std::to_string(a));
      sub.counts_[a] = n;
      sub.origin_[a] = fine.origin_[a] + static_cast<double>(off[a]) * fine.spacing_[a];
      sub.spacing_[a] = static_cast<double>(factor[a]) * fine.spacing_[a];
    }
    sub.rebuild_axes();
    out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace bfi
