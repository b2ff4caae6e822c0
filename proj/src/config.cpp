// Study configuration format:
//
//   # comment
//   [section]
//   key = value            vectors are comma separated; one value broadcasts
//
// Sections and keys are fixed; anything else is rejected with its line number.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <string>
#include <vector>

#include "bfi/error.hpp"
#include "bfi/study.hpp"
#include "bfi/test_functions.hpp"

namespace bfi {

std::string_view to_string(Booster b) {
  switch (b) {
    case Booster::none: return "none";
    case Booster::bfecc: return "bfecc";
    case Booster::maccormack: return "maccormack";
  }
  return "none";
}

std::string_view to_string(TargetTransform t) {
  switch (t) {
    case TargetTransform::shift: return "shift";
    case TargetTransform::rotate: return "rotate";
    case TargetTransform::perturb: return "perturb";
    case TargetTransform::ratio: return "ratio";
  }
  return "shift";
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = value.find(',', start);
    out.push_back(trim(std::string_view(value).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct Line {
  int number;
  std::string section;
  std::string key;
  std::string value;

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::parse_error, "line " + std::to_string(number) + ": [" + section +
                                            "] " + key + ": " + why);
  }

  double to_double(const std::string& s) const {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) fail("expected a number, got '" + s + "'");
    return v;
  }
  double number_value() const { return to_double(value); }
  long integer() const {
    long v = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
      fail("expected an integer, got '" + value + "'");
    }
    return v;
  }
  std::vector<double> numbers() const {
    std::vector<double> out;
    for (const auto& item : split_list(value)) out.push_back(to_double(item));
    return out;
  }
  Vec3 vec3() const {
    const auto v = numbers();
    if (v.size() == 1) return {v[0], v[0], v[0]};
    if (v.size() > 3) fail("expected at most 3 components");
    Vec3 out{};
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
  }
  bool boolean() const {
    if (value == "true" || value == "yes" || value == "1") return true;
    if (value == "false" || value == "no" || value == "0") return false;
    fail("expected true or false, got '" + value + "'");
  }
};

using Setter = std::function<void(StudyConfig&, const Line&)>;

Booster parse_booster(const Line& line, const std::string& s) {
  if (s == "none") return Booster::none;
  if (s == "bfecc") return Booster::bfecc;
  if (s == "maccormack") return Booster::maccormack;
  line.fail("unknown booster '" + s + "'");
}

const std::map<std::string, std::map<std::string, Setter>>& schema() {
  static const std::map<std::string, std::map<std::string, Setter>> s = {
      {"study",
       {
           {"name", [](StudyConfig& c, const Line& l) { c.name = l.value; }},
           {"title", [](StudyConfig& c, const Line& l) { c.title = l.value; }},
           {"dim", [](StudyConfig& c, const Line& l) { c.dim = static_cast<int>(l.integer()); }},
           {"function", [](StudyConfig& c, const Line& l) { c.function = l.value; }},
           {"method",
            [](StudyConfig& c, const Line& l) {
              try {
                c.method = parse_method(l.value);
              } catch (const Error& e) {
                l.fail(e.what());
              }
            }},
           {"boosters",
            [](StudyConfig& c, const Line& l) {
              c.boosters.clear();
              for (const auto& item : split_list(l.value)) c.boosters.push_back(parse_booster(l, item));
            }},
           {"margin",
            [](StudyConfig& c, const Line& l) {
              const long v = l.integer();
              if (v < 0) l.fail("must be non-negative");
              c.margin = static_cast<std::size_t>(v);
            }},
           {"padding",
            [](StudyConfig& c, const Line& l) {
              const long v = l.integer();
              if (v < 0) l.fail("must be non-negative");
              c.padding = static_cast<std::size_t>(v);
            }},
       }},
      {"domain",
       {
           {"lower", [](StudyConfig& c, const Line& l) { c.lower = l.vec3(); }},
           {"upper", [](StudyConfig& c, const Line& l) { c.upper = l.vec3(); }},
       }},
      {"levels",
       {
           {"spacings", [](StudyConfig& c, const Line& l) { c.spacings = l.numbers(); }},
           {"aspect", [](StudyConfig& c, const Line& l) { c.aspect = l.vec3(); }},
       }},
      {"target",
       {
           {"transform",
            [](StudyConfig& c, const Line& l) {
              if (l.value == "shift") c.transform = TargetTransform::shift;
              else if (l.value == "rotate") c.transform = TargetTransform::rotate;
              else if (l.value == "perturb") c.transform = TargetTransform::perturb;
              else if (l.value == "ratio") c.transform = TargetTransform::ratio;
              else l.fail("unknown transform '" + l.value + "'");
            }},
           {"shift", [](StudyConfig& c, const Line& l) { c.shift = l.vec3(); }},
           {"angle_deg", [](StudyConfig& c, const Line& l) { c.angle_deg = l.number_value(); }},
           {"axis", [](StudyConfig& c, const Line& l) { c.axis = l.vec3(); }},
           {"amplitude", [](StudyConfig& c, const Line& l) { c.amplitude = l.number_value(); }},
           {"ratio", [](StudyConfig& c, const Line& l) { c.ratio = l.number_value(); }},
           {"split", [](StudyConfig& c, const Line& l) { c.split = l.boolean(); }},
       }},
      {"bands",
       {
           {"none", [](StudyConfig& c, const Line& l) {
              const auto v = l.numbers();
              if (v.size() != 2) l.fail("expected 'low, high'");
              c.bands[Booster::none] = {v[0], v[1]};
            }},
           {"bfecc", [](StudyConfig& c, const Line& l) {
              const auto v = l.numbers();
              if (v.size() != 2) l.fail("expected 'low, high'");
              c.bands[Booster::bfecc] = {v[0], v[1]};
            }},
           {"maccormack", [](StudyConfig& c, const Line& l) {
              const auto v = l.numbers();
              if (v.size() != 2) l.fail("expected 'low, high'");
              c.bands[Booster::maccormack] = {v[0], v[1]};
            }},
       }},
      {"output",
       {
           {"csv", [](StudyConfig& c, const Line& l) { c.csv_path = l.value; }},
           {"table", [](StudyConfig& c, const Line& l) { c.table_path = l.value; }},
       }},
  };
  return s;
}

}  // namespace

StudyConfig parse_config(std::string_view text) {
  StudyConfig config;
  std::string section;
  std::set<std::string> seen;
  std::set<std::string> required{"study.dim", "study.function", "levels.spacings"};

  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string raw(text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos));
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++number;

    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw Error(ErrorCode::parse_error,
                    "line " + std::to_string(number) + ": malformed section header");
      }
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      if (!schema().contains(section)) {
        throw Error(ErrorCode::parse_error,
                    "line " + std::to_string(number) + ": unknown section [" + section + "]");
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::parse_error,
                  "line " + std::to_string(number) + ": expected 'key = value'");
    }
    Line l{number, section, trim(std::string_view(line).substr(0, eq)),
           trim(std::string_view(line).substr(eq + 1))};
    if (section.empty()) l.fail("key outside of any section");
    const auto& keys = schema().at(section);
    const auto it = keys.find(l.key);
    if (it == keys.end()) l.fail("unknown key");
    const std::string full = section + "." + l.key;
    if (!seen.insert(full).second) l.fail("duplicate key");
    if (l.value.empty()) l.fail("missing value");
    it->second(config, l);
    required.erase(full);
  }

  if (!required.empty()) {
    std::string missing;
    for (const auto& k : required) missing += (missing.empty() ? "" : ", ") + k;
    throw Error(ErrorCode::validation_error, "missing required keys: " + missing);
  }

  // Only the direction of the rotation axis matters in a config file.
  const double len =
      std::sqrt(config.axis[0] * config.axis[0] + config.axis[1] * config.axis[1] +
                config.axis[2] * config.axis[2]);
  if (len > 0.0) {
    for (double& a : config.axis) a /= len;
  }

  validate_config(config);
  return config;
}

void validate_config(const StudyConfig& c) {
  std::vector<std::string> problems;
  auto check = [&](bool ok, const std::string& field, const std::string& why) {
    if (!ok) problems.push_back(field + ": " + why);
  };

  check(c.dim >= 1 && c.dim <= 3, "study.dim", "must be 1, 2 or 3");
  const int dim = std::clamp(c.dim, 1, 3);
  bool known_function = false;
  for (const auto& tf : test_function_catalog()) known_function = known_function || tf.id == c.function;
  check(known_function, "study.function", "unknown test function '" + c.function + "'");
  check(!c.boosters.empty(), "study.boosters", "at least one scheme is required");
  {
    std::set<Booster> unique(c.boosters.begin(), c.boosters.end());
    check(unique.size() == c.boosters.size(), "study.boosters", "duplicate entries");
  }

  for (int a = 0; a < dim; ++a) {
    check(std::isfinite(c.lower[a]) && std::isfinite(c.upper[a]) && c.lower[a] < c.upper[a],
          "domain.lower/upper", "lower must be below upper on every axis");
    check(c.aspect[a] > 0.0 && std::isfinite(c.aspect[a]), "levels.aspect", "must be positive");
    check(c.shift[a] >= 0.0 && c.shift[a] <= 1.0, "target.shift",
          "fractional shifts must lie in [0,1]");
  }

  check(c.spacings.size() >= 2, "levels.spacings", "at least two levels are required");
  for (std::size_t k = 0; k < c.spacings.size(); ++k) {
    check(c.spacings[k] > 0.0 && std::isfinite(c.spacings[k]), "levels.spacings",
          "spacings must be positive");
    if (k > 0) {
      check(std::abs(c.spacings[k - 1] / c.spacings[k] - 2.0) <= 1e-9, "levels.spacings",
            "each spacing must be half of the previous one");
    }
  }

  switch (c.transform) {
    case TargetTransform::rotate:
      check(dim >= 2, "target.transform", "rotation needs a 2D or 3D study");
      check(std::isfinite(c.angle_deg), "target.angle_deg", "must be finite");
      check(dim == 2 || std::abs(std::hypot(c.axis[0], c.axis[1], c.axis[2]) - 1.0) <= 1e-9,
            "target.axis", "must be a non-zero vector");
      break;
    case TargetTransform::perturb:
      check(std::abs(c.amplitude) * std::numbers::pi < 1.0, "target.amplitude",
            "|amplitude| * pi must be below 1");
      for (int a = 0; a < dim; ++a) {
        check(c.lower[a] == -c.upper[a], "domain.lower/upper",
              "perturbed studies use a domain centred on the origin");
      }
      break;
    case TargetTransform::ratio:
      check(c.ratio > 0.0 && std::isfinite(c.ratio), "target.ratio", "must be positive");
      break;
    case TargetTransform::shift:
      break;
  }
  if (c.split) {
    check(c.transform == TargetTransform::ratio, "target.split", "requires transform = ratio");
    check(c.ratio >= 1.0 && std::abs(c.ratio - std::round(c.ratio)) <= 1e-12, "target.split",
          "requires an integer ratio");
  }
  for (const auto& [booster, band] : c.bands) {
    check(band.first <= band.second, "bands." + std::string(to_string(booster)),
          "low must not exceed high");
  }

  if (!problems.empty()) {
    std::string msg = "invalid study configuration:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw Error(ErrorCode::validation_error, msg);
  }
}

}  // namespace bfi
