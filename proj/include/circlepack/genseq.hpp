#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

namespace circlepack {

enum class GenKind { greedy_adversary, uniform, single_worstcase, class_boundary };

const char* to_string(GenKind k);
std::optional<GenKind> gen_kind_from_string(std::string_view s);

struct GenSpec {
  GenKind kind = GenKind::greedy_adversary;
  std::uint64_t seed = 0;
  double threshold = 0.0;  // area budget
  double r_min = 0.0;
  double r_max = 0.5;
  std::size_t max_count = 5000;
  double lane_width = 1.0;  // class_boundary: width the class table is built for
  double epsilon = 1e-6;    // single_worstcase: 0.5 + epsilon
};

/// Throws std::invalid_argument for r_min > r_max, threshold <= 0 (budget
/// kinds) or non-finite fields.
void check_spec(const GenSpec& spec);

std::uint64_t splitmix64(std::uint64_t& state);

/// mt19937_64 keyed by one splitmix64 step of the seed, so nearby seeds give
/// unrelated streams.
std::mt19937_64 make_rng(std::uint64_t seed);

/// 53-bit uniform double in [0, 1).
double uniform01(std::mt19937_64& rng);

/// Draws r uniformly in [r_min, min(r_max, sqrt(remaining / pi))] until the
/// remaining budget drops below pi r_min^2. The running sum of pi r^2 never
/// exceeds the threshold in floating point.
std::vector<double> greedy_adversary(const GenSpec& spec);
/// max_count radii uniform in [r_min, r_max], budget ignored.
std::vector<double> uniform(const GenSpec& spec);
std::vector<double> single_worstcase(const GenSpec& spec);
/// Every class boundary q_i w_i of the table for lane_width, nudged by
/// +-1e-9, filtered to [r_min, r_max] and shuffled by the seed.
std::vector<double> class_boundary(const GenSpec& spec);

std::vector<double> generate(const GenSpec& spec);

/// Area sum in input order, the same accumulation the budget check uses.
double total_area(const std::vector<double>& radii);

/// Delta-debugging shrink: returns a subsequence on which `fails` still holds.
/// `fails(input)` must be true on entry.
std::vector<double> minimize(std::vector<double> input,
                             const std::function<bool(const std::vector<double>&)>& fails);

}  // namespace circlepack
