#include "bfi/test_functions.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "bfi/error.hpp"

namespace bfi {

namespace {

constexpr double kPi = std::numbers::pi;

double dot(const Vec3& k, const Vec3& p) { return k[0] * p[0] + k[1] * p[1] + k[2] * p[2]; }

/// sin(pi * k.x)
TestFunction plane_sine(std::string id, std::string formula, int dim, Vec3 k, Vec3 probe) {
  TestFunction tf;
  tf.id = std::move(id);
  tf.formula = std::move(formula);
  tf.dim = dim;
  tf.value = [k](const Vec3& p) { return std::sin(kPi * dot(k, p)); };
  tf.axis_derivative = [k](const Vec3& p, int axis, int order) {
    const double u = kPi * dot(k, p);
    return std::pow(kPi * k[axis], order) * std::sin(u + order * kPi / 2.0);
  };
  tf.probe = probe;
  return tf;
}

std::vector<TestFunction> build_catalog() {
  std::vector<TestFunction> c;

  {
    TestFunction tf;
    tf.id = "constant";
    tf.formula = "1.5";
    tf.value = [](const Vec3&) { return 1.5; };
    tf.axis_derivative = [](const Vec3&, int, int order) { return order == 0 ? 1.5 : 0.0; };
    c.push_back(tf);
  }
  {
    const Vec3 k{2.0, -0.5, 0.25};
    TestFunction tf;
    tf.id = "affine";
    tf.formula = "1 + 2x - 0.5y + 0.25z";
    tf.value = [k](const Vec3& p) { return 1.0 + dot(k, p); };
    tf.axis_derivative = [k](const Vec3& p, int axis, int order) {
      if (order == 0) return 1.0 + dot(k, p);
      return order == 1 ? k[axis] : 0.0;
    };
    c.push_back(tf);
  }

  c.push_back(plane_sine("sin_pi_x", "sin(pi*x)", 1, {1, 0, 0}, {0.25, 0, 0}));
  c.push_back(plane_sine("sin_pi_x_2y", "sin(pi*(x+2y))", 2, {1, 2, 0}, {0.25, 0.25, 0}));
  c.push_back(plane_sine("sin_pi_x_02y", "sin(pi*(x+0.2y))", 2, {1, 0.2, 0}, {0.25, 0.25, 0}));
  c.push_back(
      plane_sine("sin_pi_x_2y_3z", "sin(pi*(x+2y+3z))", 3, {1, 2, 3}, {0.1, 0.2, 0.1}));

  {
    const Vec3 k{1.0, 0.2, 0.0};
    TestFunction tf;
    tf.id = "cubic_x_02y";
    tf.formula = "(x+0.2y)^3";
    tf.dim = 2;
    tf.value = [k](const Vec3& p) { return std::pow(dot(k, p), 3); };
    tf.axis_derivative = [k](const Vec3& p, int axis, int order) {
      const double u = dot(k, p);
      const double ka = k[axis];
      switch (order) {
        case 0: return u * u * u;
        case 1: return 3.0 * u * u * ka;
        case 2: return 6.0 * u * ka * ka;
        case 3: return 6.0 * ka * ka * ka;
        default: return 0.0;
      }
    };
    tf.probe = {0.25, 0.25, 0};
    c.push_back(tf);
  }
  {
    const Vec3 k{1.0, 0.2, 0.0};
    TestFunction tf;
    tf.id = "exp_x_02y";
    tf.formula = "exp(x+0.2y)";
    tf.dim = 2;
    tf.value = [k](const Vec3& p) { return std::exp(dot(k, p)); };
    tf.axis_derivative = [k](const Vec3& p, int axis, int order) {
      return std::pow(k[axis], order) * std::exp(dot(k, p));
    };
    tf.probe = {0.25, 0.25, 0};
    c.push_back(tf);
  }
  {
    TestFunction tf;
    tf.id = "sin_x_2y_z2";
    tf.formula = "sin(x+2y+z^2)";
    tf.dim = 3;
    tf.value = [](const Vec3& p) { return std::sin(p[0] + 2.0 * p[1] + p[2] * p[2]); };
    tf.axis_derivative = [](const Vec3& p, int axis, int order) {
      const double u = p[0] + 2.0 * p[1] + p[2] * p[2];
      if (axis < 2) {
        const double ka = axis == 0 ? 1.0 : 2.0;
        return std::pow(ka, order) * std::sin(u + order * kPi / 2.0);
      }
      const double z = p[2];
      const double s = std::sin(u);
      const double co = std::cos(u);
      switch (order) {
        case 0: return s;
        case 1: return 2.0 * z * co;
        case 2: return -4.0 * z * z * s + 2.0 * co;
        case 3: return -8.0 * z * z * z * co - 12.0 * z * s;
        default: return 16.0 * z * z * z * z * s - 48.0 * z * z * co - 12.0 * s;
      }
    };
    tf.probe = {0.1, 0.05, 0.3};
    c.push_back(tf);
  }
  return c;
}

}  // namespace

std::span<const TestFunction> test_function_catalog() {
  static const std::vector<TestFunction> catalog = build_catalog();
  return catalog;
}

const TestFunction& test_function(std::string_view id) {
  for (const TestFunction& tf : test_function_catalog()) {
    if (tf.id == id) return tf;
  }
  throw Error(ErrorCode::invalid_argument, "unknown test function '" + std::string(id) + "'");
}

Field sample_function(const Grid& g, const TestFunction& tf) {
  std::vector<double> v(g.size());
  for (std::size_t n = 0; n < v.size(); ++n) v[n] = tf.value(g.position(n));
  return Field(g, std::move(v));
}

}  // namespace bfi
