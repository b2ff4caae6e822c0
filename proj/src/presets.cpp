#include "bfi/presets.hpp"

#include <array>
#include <string>

#include "bfi/error.hpp"

namespace bfi {

namespace {

constexpr std::string_view kTable1 = R"(# 1D linear vs BFECC interpolation, quarter-cell shift
[study]
name = table1
title = 1D, grid shift w = 0.25 dx
dim = 1
function = sin_pi_x
method = multilinear
boosters = none, bfecc

[domain]
lower = 0
upper = 1

[levels]
spacings = 0.05, 0.025, 0.0125, 0.00625

[target]
transform = shift
shift = 0.25

[bands]
none = 1.85, 2.3
bfecc = 2.85, 3.15
)";

constexpr std::string_view kTable2 = R"(# 2D bilinear vs BFECC, quarter-cell shift
[study]
name = table2
title = 2D, grid shift w = (0.25 dx, 0.25 dy), dx = dy
dim = 2
function = sin_pi_x_2y
method = multilinear
boosters = none, bfecc

[domain]
lower = 0
upper = 1

[levels]
spacings = 0.05, 0.025, 0.0125, 0.00625

[target]
transform = shift
shift = 0.25

[bands]
none = 1.85, 2.3
bfecc = 2.8, 3.2
)";

constexpr std::string_view kTable3 = R"(# 2D super-convergence at cell centroids
[study]
name = table3
title = 2D, grid shift w = (0.5 dx, 0.5 dy), dx = dy
dim = 2
function = sin_pi_x_2y
method = multilinear
boosters = none, bfecc

[domain]
lower = 0
upper = 1

[levels]
spacings = 0.05, 0.025, 0.0125, 0.00625

[target]
transform = shift
shift = 0.5

[bands]
none = 1.85, 2.3
bfecc = 3.78, 4.21
)";

constexpr std::string_view kTable4 = R"(# 2D least squares underlying scheme: BFECC vs modified MacCormack
[study]
name = table4
title = 2D, grid shift w = (0.25 dx, 0.25 dy), dx = dy
dim = 2
function = sin_pi_x_02y
method = lls
boosters = none, bfecc, maccormack

[domain]
lower = 0
upper = 1

[levels]
spacings = 0.05, 0.025, 0.0125, 0.00625

[target]
transform = shift
shift = 0.25

[bands]
none = 1.85, 2.3
bfecc = 2.8, 3.2
maccormack = 2.8, 3.2
)";

constexpr std::string_view kTable5 = R"(# 2D least squares underlying scheme, cubic polynomial
[study]
name = table5
title = 2D, grid shift w = (0.25 dx, 0.25 dy), dx = dy
dim = 2
function = cubic_x_02y
method = lls
boosters = none, bfecc, maccormack

[domain]
lower = 0
upper = 1

[levels]
spacings = 0.05, 0.025, 0.0125, 0.00625

[target]
transform = shift
shift = 0.25

[bands]
none = 1.85, 2.3
bfecc = 2.8, 3.2
maccormack = 2.8, 3.2
)";

constexpr std::string_view kTable6 = R"(# 2D least squares underlying scheme, exponential
[study]
name = table6
title = 2D, grid shift w = (0.25 dx, 0.25 dy), dx = dy
dim = 2
function = exp_x_02y
method = lls
boosters = none, bfecc, maccormack

[domain]
lower = 0
upper = 1

[levels]
spacings = 0.05, 0.025, 0.0125, 0.00625

[target]
transform = shift
shift = 0.25

[bands]
none = 1.85, 2.3
bfecc = 2.8, 3.2
maccormack = 2.8, 3.2
)";

constexpr std::string_view kTable7 = R"(# 2D least squares at cell centroids: BFECC super-converges, MacCormack does not
[study]
name = table7
title = 2D, grid shift w = (0.5 dx, 0.5 dy), dx = dy
dim = 2
function = exp_x_02y
method = lls
boosters = none, bfecc, maccormack

[domain]
lower = 0
upper = 1

[levels]
spacings = 0.05, 0.025, 0.0125, 0.00625

[target]
transform = shift
shift = 0.5

[bands]
none = 1.85, 2.3
bfecc = 3.8, 4.2
maccormack = 2.8, 3.2
)";

constexpr std::string_view kTable8 = R"(# 3D source and target spacing ratio sqrt(2):1
[study]
name = table8
title = 3D, grid spacing ratio sqrt(2):1
dim = 3
function = sin_pi_x_2y_3z
method = multilinear
boosters = none, bfecc

[domain]
lower = 0
upper = 1

[levels]
spacings = 0.0625, 0.03125, 0.015625, 0.0078125

[target]
transform = ratio
ratio = 1.4142135623730951

[bands]
bfecc = 1.85, 2.2
)";

constexpr std::string_view kTable9 = R"(# 3D smoothly perturbed and shifted target grid
[study]
name = table9
title = 3D, rectangular source to smoothly perturbed target, w = (0.25 dx, 0.25 dy, 0.25 dz)
dim = 3
function = sin_x_2y_z2
method = multilinear
boosters = none, bfecc

[domain]
lower = -0.125
upper = 0.125

[levels]
spacings = 0.0125, 0.00625, 0.003125, 0.0015625

[target]
transform = perturb
amplitude = 0.1
shift = 0.25

[bands]
bfecc = 2.54, 3.31
)";

constexpr std::string_view kTable10 = R"(# 3D target rotated by 3 degrees about the z axis through the domain centre
[study]
name = table10
title = 3D, rotation of 3 degrees of a rectangular grid
dim = 3
function = sin_pi_x_2y_3z
method = multilinear
boosters = none, bfecc

[domain]
lower = 0
upper = 1

[levels]
spacings = 0.05, 0.025, 0.0125, 0.00625

[target]
transform = rotate
angle_deg = 3
axis = 0, 0, 1
)";

constexpr std::string_view kTable11 = R"(# 3D trilinear, dx:dy:dz = 1:0.9:1.2, quarter-cell shift
[study]
name = table11
title = 3D, grid shift w = (0.25 dx, 0.25 dy, 0.25 dz), dx:dy:dz = 1:0.9:1.2
dim = 3
function = sin_pi_x_2y_3z
method = multilinear
boosters = none, bfecc

[domain]
lower = 0
upper = 1

[levels]
spacings = 0.05, 0.025, 0.0125, 0.00625
aspect = 1, 0.9, 1.2

[target]
transform = shift
shift = 0.25

[bands]
bfecc = 2.8, 3.41
)";

constexpr std::string_view kTable12 = R"(# 3D trilinear, dx:dy:dz = 1:0.9:1.2, centroid shift
[study]
name = table12
title = 3D, grid shift w = (0.5 dx, 0.5 dy, 0.5 dz), dx:dy:dz = 1:0.9:1.2
dim = 3
function = sin_pi_x_2y_3z
method = multilinear
boosters = none, bfecc

[domain]
lower = 0
upper = 1

[levels]
spacings = 0.05, 0.025, 0.0125, 0.00625
aspect = 1, 0.9, 1.2

[target]
transform = shift
shift = 0.5

[bands]
bfecc = 3.74, 4.2
)";

constexpr std::string_view kTable13 = R"(# 3D least squares, dx:dy:dz = 1:0.9:1.2, quarter-cell shift
[study]
name = table13
title = 3D, grid shift w = (0.25 dx, 0.25 dy, 0.25 dz), dx:dy:dz = 1:0.9:1.2
dim = 3
function = sin_pi_x_2y_3z
method = lls
boosters = none, bfecc

[domain]
lower = 0
upper = 1

[levels]
spacings = 0.05, 0.025, 0.0125, 0.00625
aspect = 1, 0.9, 1.2

[target]
transform = shift
shift = 0.25

[bands]
bfecc = 2.75, 3.47
)";

constexpr std::string_view kCubeQuarter = R"(# 3D trilinear, dx = dy = dz, quarter-cell shift
[study]
name = cube-quarter
title = 3D, grid shift w = (0.25 dx, 0.25 dy, 0.25 dz), dx = dy = dz
dim = 3
function = sin_pi_x_2y_3z
method = multilinear
boosters = none, bfecc

[domain]
lower = 0
upper = 1

[levels]
spacings = 0.05, 0.025, 0.0125, 0.00625

[target]
transform = shift
shift = 0.25

[bands]
bfecc = 2.8, 3.39
)";

constexpr std::string_view kCubeLlsQuarter = R"(# 3D least squares, dx = dy = dz, quarter-cell shift
[study]
name = cube-lls-quarter
title = 3D, grid shift w = (0.25 dx, 0.25 dy, 0.25 dz), dx = dy = dz
dim = 3
function = sin_pi_x_2y_3z
method = lls
boosters = none, bfecc

[domain]
lower = 0
upper = 1

[levels]
spacings = 0.05, 0.025, 0.0125, 0.00625

[target]
transform = shift
shift = 0.25

[bands]
bfecc = 2.8, 3.2
)";

constexpr std::string_view kCubeHalf = R"(# 3D trilinear super-convergence at cell centroids
[study]
name = cube-half
title = 3D, grid shift w = (0.5 dx, 0.5 dy, 0.5 dz), dx = dy = dz
dim = 3
function = sin_pi_x_2y_3z
method = multilinear
boosters = none, bfecc

[domain]
lower = 0
upper = 1

[levels]
spacings = 0.05, 0.025, 0.0125, 0.00625

[target]
transform = shift
shift = 0.5

[bands]
bfecc = 3.77, 4.2
)";

constexpr std::string_view kSplit = R"(# 3D coarse-to-fine transfer at ratio 2:1 with the fine target split into
# interleaved subgrids whose spacing matches the source
[study]
name = split
title = 3D, spacing ratio 2:1, fine target split into 8 subgrids
dim = 3
function = sin_pi_x_2y_3z
method = multilinear
boosters = none, bfecc

[domain]
lower = 0
upper = 1

[levels]
spacings = 0.1, 0.05, 0.025, 0.0125

[target]
transform = ratio
ratio = 2
split = true
shift = 0.25

[bands]
bfecc = 2.7, 3.5
)";

constexpr std::array<Preset, 17> kPresets{{
    {"table1", "1D linear vs BFECC, w = 0.25 dx", kTable1},
    {"table2", "2D bilinear vs BFECC, w = 0.25 dx", kTable2},
    {"table3", "2D super-convergence, w = 0.5 dx", kTable3},
    {"table4", "2D LLS: BFECC vs MacCormack, sin(pi(x+0.2y))", kTable4},
    {"table5", "2D LLS: BFECC vs MacCormack, (x+0.2y)^3", kTable5},
    {"table6", "2D LLS: BFECC vs MacCormack, exp(x+0.2y)", kTable6},
    {"table7", "2D LLS at centroids: BFECC vs MacCormack", kTable7},
    {"table8", "3D spacing ratio sqrt(2):1", kTable8},
    {"table9", "3D smoothly perturbed target", kTable9},
    {"table10", "3D target rotated by 3 degrees", kTable10},
    {"table11", "3D trilinear, 1:0.9:1.2 spacing, w = 0.25", kTable11},
    {"table12", "3D trilinear, 1:0.9:1.2 spacing, w = 0.5", kTable12},
    {"table13", "3D LLS, 1:0.9:1.2 spacing, w = 0.25", kTable13},
    {"cube-quarter", "3D trilinear, uniform spacing, w = 0.25", kCubeQuarter},
    {"cube-lls-quarter", "3D LLS, uniform spacing, w = 0.25", kCubeLlsQuarter},
    {"cube-half", "3D trilinear super-convergence, w = 0.5", kCubeHalf},
    {"split", "3D ratio 2:1 with fine-grid splitting", kSplit},
}};

}  // namespace

std::span<const Preset> presets() { return kPresets; }

const Preset& find_preset(std::string_view name) {
  for (const Preset& p : kPresets) {
    if (p.name == name) return p;
  }
  throw Error(ErrorCode::unknown_preset, "unknown preset '" + std::string(name) + "'");
}

}  // namespace bfi
