#include "bfi/interp.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "bfi/error.hpp"
#include "bfi/parallel.hpp"

namespace bfi {

std::string_view to_string(Method m) {
  return m == Method::multilinear ? "multilinear" : "lls";
}

Method parse_method(std::string_view name) {
  if (name == "multilinear") return Method::multilinear;
  if (name == "lls") return Method::lls;
  throw Error(ErrorCode::invalid_argument,
              "unknown interpolation method '" + std::string(name) + "'");
}

CornerWeights multilinear_weights(int dim, const Vec3& local) {
  if (dim < 1 || dim > 3) throw Error(ErrorCode::invalid_argument, "dimension must be 1, 2 or 3");
  for (int a = 0; a < dim; ++a) {
    if (!(local[a] >= 0.0 && local[a] <= 1.0)) {
      throw Error(ErrorCode::invalid_argument,
                  "local coordinate " + std::to_string(local[a]) + " outside [0,1]");
    }
  }
  CornerWeights w;
  w.count = 1 << dim;
  for (int k = 0; k < w.count; ++k) {
    double v = 1.0;
    for (int a = 0; a < dim; ++a) v *= ((k >> a) & 1) ? local[a] : 1.0 - local[a];
    w.values[k] = v;
  }
  return w;
}

CornerWeights lls_weights(int dim, std::span<const Vec3> vertices, const Vec3& p) {
  if (dim < 1 || dim > 3) throw Error(ErrorCode::invalid_argument, "dimension must be 1, 2 or 3");
  const int n = 1 << dim;
  if (static_cast<int>(vertices.size()) != n) {
    throw Error(ErrorCode::invalid_argument, "least-squares fit expects 2^d vertices");
  }

  // Rows [1, (x_k - p)/scale]; the fitted affine value at p is coefficient 0.
  double scale = 0.0;
  for (const Vec3& v : vertices)
    for (int a = 0; a < dim; ++a) scale = std::max(scale, std::abs(v[a] - p[a]));
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorCode::rank_deficient, "degenerate least-squares stencil");
  }

  const int m = dim + 1;
  std::array<std::array<double, 4>, 8> rows{};
  for (int k = 0; k < n; ++k) {
    rows[k][0] = 1.0;
    for (int a = 0; a < dim; ++a) rows[k][a + 1] = (vertices[k][a] - p[a]) / scale;
  }

  // Normal equations M z = e0, then w_k = rows_k . z.
  std::array<std::array<double, 5>, 4> aug{};
  double max_diag = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += rows[k][i] * rows[k][j];
      aug[i][j] = s;
    }
    aug[i][m] = (i == 0) ? 1.0 : 0.0;
    max_diag = std::max(max_diag, aug[i][i]);
  }
  for (int col = 0; col < m; ++col) {
    int pivot = col;
    for (int r = col + 1; r < m; ++r)
      if (std::abs(aug[r][col]) > std::abs(aug[pivot][col])) pivot = r;
    if (std::abs(aug[pivot][col]) <= 1e-12 * max_diag) {
      throw Error(ErrorCode::rank_deficient, "least-squares vertex configuration is degenerate");
    }
    std::swap(aug[col], aug[pivot]);
    for (int r = 0; r < m; ++r) {
      if (r == col) continue;
      const double factor = aug[r][col] / aug[col][col];
      for (int c = col; c <= m; ++c) aug[r][c] -= factor * aug[col][c];
    }
  }
  std::array<double, 4> z{};
  for (int i = 0; i < m; ++i) z[i] = aug[i][m] / aug[i][i];

  CornerWeights w;
  w.count = n;
  for (int k = 0; k < n; ++k) {
    double v = 0.0;
    for (int i = 0; i < m; ++i) v += rows[k][i] * z[i];
    w.values[k] = v;
  }
  return w;
}

TransferPlan::TransferPlan(const Grid& source, Method method, std::size_t n)
    : source_(source), method_(method), corners_(1 << source.dim()) {
  const Index3 strides = source.strides();
  for (int k = 0; k < corners_; ++k) {
    std::size_t off = 0;
    for (int a = 0; a < source.dim(); ++a)
      if ((k >> a) & 1) off += strides[a];
    offsets_[k] = off;
  }
  base_.assign(n, 0);
  weights_.assign(n * static_cast<std::size_t>(corners_), 0.0);
  valid_.assign(n, 0);
}

template <typename PointAt>
void TransferPlan::fill(const PointAt& point_at) {
  const int dim = source_.dim();
  parallel_for(valid_.size(), [&](std::size_t begin, std::size_t end) {
    std::array<Vec3, 8> verts{};
    for (std::size_t e = begin; e < end; ++e) {
      const Vec3 p = point_at(e);
      CellLocation loc;
      try {
        loc = source_.locate(p);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::newton_divergence) throw;
        continue;
      }
      if (!loc.inside) continue;

      CornerWeights w;
      if (method_ == Method::multilinear) {
        w = multilinear_weights(dim, loc.local);
      } else {
        for (int k = 0; k < corners_; ++k) {
          Index3 idx = loc.cell;
          for (int a = 0; a < dim; ++a) idx[a] += (k >> a) & 1;
          verts[k] = source_.position(idx);
        }
        try {
          w = lls_weights(dim, {verts.data(), static_cast<std::size_t>(corners_)}, p);
        } catch (const Error& err) {
          if (err.code() != ErrorCode::rank_deficient) throw;
          continue;
        }
      }
      base_[e] = source_.flatten(loc.cell);
      std::copy(w.values.begin(), w.values.begin() + corners_,
                weights_.begin() + static_cast<std::ptrdiff_t>(e * corners_));
      valid_[e] = 1;
    }
  });
}

TransferPlan build_transfer_plan(const Grid& source, std::span<const Vec3> targets, Method method) {
  TransferPlan plan(source, method, targets.size());
  plan.fill([&](std::size_t e) { return targets[e]; });
  return plan;
}

TransferPlan build_transfer_plan(const Grid& source, const Grid& target, Method method) {
  if (source.dim() != target.dim()) {
    throw Error(ErrorCode::dim_mismatch, "source and target grids differ in dimension");
  }
  TransferPlan plan(source, method, target.size());
  plan.fill([&](std::size_t e) { return target.position(e); });
  return plan;
}

Transfer apply_plan(const TransferPlan& plan, std::span<const double> source_values) {
  if (source_values.size() != plan.source().size()) {
    throw Error(ErrorCode::grid_mismatch, "value count does not match the plan's source grid");
  }
  Transfer out;
  out.values.assign(plan.size(), std::numeric_limits<double>::quiet_NaN());
  out.valid.assign(plan.size(), 0);
  const int corners = plan.corners();
  parallel_for(plan.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t e = begin; e < end; ++e) {
      if (!plan.valid(e)) continue;
      const auto w = plan.weights(e);
      double sum = 0.0;
      bool ok = true;
      for (int k = 0; k < corners; ++k) {
        const double v = source_values[plan.node(e, k)];
        if (std::isnan(v)) ok = false;
        sum += w[k] * v;
      }
      if (ok) {
        out.values[e] = sum;
        out.valid[e] = 1;
      }
    }
  });
  return out;
}

Transfer apply_plan(const TransferPlan& plan, const Field& f) {
  if (!(f.grid == plan.source())) {
    throw Error(ErrorCode::grid_mismatch, "field does not live on the plan's source grid");
  }
  return apply_plan(plan, std::span<const double>(f.values));
}

}  // namespace bfi
