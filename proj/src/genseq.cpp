#include "circlepack/genseq.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "circlepack/classification.hpp"

namespace circlepack {

using std::numbers::pi;

const char* to_string(GenKind k) {
  switch (k) {
    case GenKind::greedy_adversary: return "greedy_adversary";
    case GenKind::uniform: return "uniform";
    case GenKind::single_worstcase: return "single_worstcase";
    case GenKind::class_boundary: return "class_boundary";
  }
  return "?";
}

std::optional<GenKind> gen_kind_from_string(std::string_view s) {
  for (GenKind k : {GenKind::greedy_adversary, GenKind::uniform, GenKind::single_worstcase,
                    GenKind::class_boundary}) {
    if (s == to_string(k)) return k;
  }
  if (s == "greedy") return GenKind::greedy_adversary;
  return std::nullopt;
}

void check_spec(const GenSpec& spec) {
  if (!std::isfinite(spec.r_min) || !std::isfinite(spec.r_max) || !std::isfinite(spec.threshold)) {
    throw std::invalid_argument("generator parameters must be finite");
  }
  if (spec.r_min < 0.0 || spec.r_min > spec.r_max) {
    throw std::invalid_argument("need 0 <= r_min <= r_max");
  }
  if (spec.kind == GenKind::greedy_adversary && spec.threshold <= 0.0) {
    throw std::invalid_argument("threshold must be positive");
  }
  if (spec.kind == GenKind::uniform && spec.r_min <= 0.0) {
    throw std::invalid_argument("uniform radii need r_min > 0");
  }
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::mt19937_64 make_rng(std::uint64_t seed) {
  std::uint64_t s = seed;
  return std::mt19937_64(splitmix64(s));
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double total_area(const std::vector<double>& radii) {
  double total = 0.0;
  for (double r : radii) total += pi * r * r;
  return total;
}

std::vector<double> greedy_adversary(const GenSpec& spec) {
  check_spec(spec);
  std::vector<double> out;
  if (spec.r_min <= 0.0) throw std::invalid_argument("greedy adversary needs r_min > 0");
  auto rng = make_rng(spec.seed);
  double total = 0.0;
  while (out.size() < spec.max_count) {
    const double remaining = spec.threshold - total;
    if (remaining < pi * spec.r_min * spec.r_min) break;
    const double hi = std::max(spec.r_min, std::min(spec.r_max, std::sqrt(remaining / pi)));
    double r = spec.r_min + uniform01(rng) * (hi - spec.r_min);
    r = std::clamp(r, spec.r_min, hi);
    while (r >= spec.r_min && total + pi * r * r > spec.threshold) r = std::nextafter(r, 0.0);
    if (r < spec.r_min) break;
    total += pi * r * r;
    out.push_back(r);
  }
  return out;
}

std::vector<double> uniform(const GenSpec& spec) {
  check_spec(spec);
  auto rng = make_rng(spec.seed);
  std::vector<double> out(spec.max_count);
  for (double& r : out) r = std::min(spec.r_max, spec.r_min + uniform01(rng) * (spec.r_max - spec.r_min));
  return out;
}

std::vector<double> single_worstcase(const GenSpec& spec) { return {0.5 + spec.epsilon}; }

std::vector<double> class_boundary(const GenSpec& spec) {
  check_spec(spec);
  const ClassTable table = build_class_table(spec.lane_width, std::nullopt, std::nullopt, true);
  std::vector<double> edges;
  if (table.large()) edges.push_back(table.max_radius());
  for (const ClassRow& row : table.rows()) edges.push_back(row.lower_bound());
  std::vector<double> out;
  for (double e : edges) {
    for (double r : {e - 1e-9, e + 1e-9}) {
      if (r > 0.0 && r >= spec.r_min && r <= spec.r_max) out.push_back(r);
    }
  }
  auto rng = make_rng(spec.seed);
  std::shuffle(out.begin(), out.end(), rng);
  if (out.size() > spec.max_count) out.resize(spec.max_count);
  return out;
}

std::vector<double> generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::greedy_adversary: return greedy_adversary(spec);
    case GenKind::uniform: return uniform(spec);
    case GenKind::single_worstcase: return single_worstcase(spec);
    case GenKind::class_boundary: return class_boundary(spec);
  }
  return {};
}

std::vector<double> minimize(std::vector<double> input,
                             const std::function<bool(const std::vector<double>&)>& fails) {
  std::size_t parts = 2;
  while (input.size() >= 2) {
    const std::size_t chunk = (input.size() + parts - 1) / parts;
    bool reduced = false;
    for (std::size_t start = 0; start < input.size(); start += chunk) {
      std::vector<double> rest;
      rest.reserve(input.size());
      rest.insert(rest.end(), input.begin(), input.begin() + static_cast<std::ptrdiff_t>(start));
      const std::size_t stop = std::min(input.size(), start + chunk);
      rest.insert(rest.end(), input.begin() + static_cast<std::ptrdiff_t>(stop), input.end());
      if (!rest.empty() && fails(rest)) {
        input = std::move(rest);
        parts = std::max<std::size_t>(parts - 1, 2);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      if (chunk == 1) break;
      parts = std::min(input.size(), parts * 2);
    }
  }
  return input;
}

}  // namespace circlepack
