#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "circlepack/audit.hpp"
#include "circlepack/bounds.hpp"
#include "circlepack/classification.hpp"
#include "circlepack/containers.hpp"
#include "circlepack/genseq.hpp"
#include "circlepack/io.hpp"

using namespace circlepack;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitRejected = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double default_eps() {
  if (const char* env = std::getenv("CIRCLEPACK_EPS")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v >= 0.0) || !std::isfinite(v)) {
      throw UsageError(std::string("CIRCLEPACK_EPS is not a non-negative number: ") + env);
    }
    return v;
  }
  return kDefaultEps;
}

SquareMode parse_mode(const std::string& s) {
  if (s == "general") return SquareMode::general;
  if (s == "no-tiny" || s == "no_tiny") return SquareMode::no_tiny;
  throw UsageError("unknown mode '" + s + "' (general, no-tiny)");
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_out(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

struct PackOptions {
  std::string container = "square";
  double b = 1.0;
  std::string mode = "general";
  std::string input = "-";
  std::string json = "-";
  std::string svg;
  double scale = 500.0;
  double eps = -1.0;
};

std::unique_ptr<Packer> make_packer(const std::string& container, double b, SquareMode mode) {
  if (container == "rect") {
    if (mode != SquareMode::general) throw UsageError("no-tiny mode applies to the square only");
    if (!(b >= 1.0) || !std::isfinite(b)) throw UsageError("--b must be >= 1 for the rectangle");
    return std::make_unique<RectPacker>(b);
  }
  if (container == "square") return std::make_unique<SquarePacker>(mode);
  throw UsageError("unknown container '" + container + "' (square, rect)");
}

void warn_bound_audits(const Packer& p) {
  std::vector<const DslpLane*> lanes;
  if (auto* r = dynamic_cast<const RectPacker*>(&p)) lanes.push_back(&r->lane());
  if (auto* s = dynamic_cast<const SquarePacker*>(&p)) {
    for (const DslpLane& d : s->medium_lanes()) lanes.push_back(&d);
  }
  for (const DslpLane* d : lanes) {
    const BoundCheck c = check_dslp_lane(*d, p.world().circles());
    if (!c.passed()) {
      std::fprintf(stderr, "warning: lane %s occupies %.9g, below its DSLP bound %.9g\n", d->id().c_str(),
                   c.occupied, c.bound);
    }
  }
}

int run_pack(const PackOptions& o) {
  const double eps = o.eps >= 0.0 ? o.eps : default_eps();
  const SquareMode mode = parse_mode(o.mode);
  auto packer = make_packer(o.container, o.b, mode);

  std::vector<double> radii;
  {
    std::istringstream in(slurp(o.input));
    radii = read_radii(in);
  }
  for (std::size_t k = 0; k < radii.size(); ++k) packer->check_input(k, radii[k]);
  for (double r : radii) {
    if (!packer->pack(r)) break;
  }
  const PackResult result = packer->result();

  const AuditReport report = validate(result, result.container_rect(), eps);
  if (!report.valid) {
    for (const Violation& v : report.violations) {
      std::fprintf(stderr, "error: %s: %s\n", to_string(v.kind), v.detail.c_str());
    }
    return kExitInput;
  }
  if (result.status == PackStatus::rejected) warn_bound_audits(*packer);

  write_out(o.json, to_json(result, eps).dump(2) + "\n");
  if (!o.svg.empty()) write_out(o.svg, render_svg(result, o.scale));
  return result.status == PackStatus::all_packed ? kExitOk : kExitRejected;
}

int run_verify(const std::string& input, double eps_opt) {
  const double eps = eps_opt >= 0.0 ? eps_opt : default_eps();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(slurp(input));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("malformed JSON: ") + e.what());
  }
  const PackResult result = result_from_json(j);
  const AuditReport report = validate(result, result.container_rect(), eps);
  std::cout << to_json(report).dump(2) << "\n";
  return report.valid ? kExitOk : kExitInput;
}

struct BoundsOptions {
  std::vector<double> delta;
  std::vector<double> rect;
  std::vector<std::string> square;
  bool table = false;
  double table_w = 1.0;
  int rows = 13;
};

int run_bounds(const BoundsOptions& o) {
  bool any = false;
  for (double q : o.delta) {
    std::printf("delta(%.17g) = %.17g\n", q, bounds::delta(q));
    any = true;
  }
  for (double b : o.rect) {
    std::printf("guarantee_rect(%.17g) = %.17g\n", b, bounds::guarantee_rect(b));
    any = true;
  }
  for (const std::string& m : o.square) {
    const SquareMode mode = parse_mode(m);
    std::printf("guarantee_square(%s) = %.17g\n", to_string(mode), bounds::guarantee_square(mode));
    any = true;
  }
  if (o.table) {
    const ClassTable t = build_class_table(o.table_w);
    std::printf("class,q,w,lower_bound\n");
    for (const ClassRow& row : t.rows()) {
      if (row.index > o.rows) break;
      std::printf("%d,%.9g,%.9g,%.9g\n", row.index, row.q, row.w, row.lower_bound());
    }
    any = true;
  }
  if (!any) throw UsageError("bounds needs at least one of --delta, --rect, --square-mode, --table");
  return kExitOk;
}

struct GenOptions {
  std::string kind = "greedy_adversary";
  std::uint64_t seed = 0;
  double threshold = bounds::kSquareGeneral;
  double r_min = 0.001;
  double r_max = 0.5;
  std::size_t count = 5000;
  double width = 1.0;
  double epsilon = 1e-6;

  GenSpec spec() const {
    const auto k = gen_kind_from_string(kind);
    if (!k) throw UsageError("unknown generator kind '" + kind + "'");
    GenSpec s;
    s.kind = *k;
    s.seed = seed;
    s.threshold = threshold;
    s.r_min = r_min;
    s.r_max = r_max;
    s.max_count = count;
    s.lane_width = width;
    s.epsilon = epsilon;
    return s;
  }
};

int run_gen(const GenOptions& o) {
  for (double r : generate(o.spec())) std::printf("%.17g\n", r);
  return kExitOk;
}

struct BatchOptions {
  std::string container = "square";
  double b = 1.0;
  std::string mode = "general";
  GenOptions gen;
  bool threshold_set = false;
  std::size_t runs = 100;
  unsigned threads = 0;
  double eps = -1.0;
};

int run_batch(BatchOptions o) {
  const double eps = o.eps >= 0.0 ? o.eps : default_eps();
  const SquareMode mode = parse_mode(o.mode);
  make_packer(o.container, o.b, mode);  // validates the configuration up front
  if (!o.threshold_set) {
    o.gen.threshold = o.container == "rect" ? bounds::guarantee_rect(o.b) : bounds::guarantee_square(mode);
  }
  const GenSpec base = o.gen.spec();

  struct Row {
    std::size_t n = 0;
    PackResult result;
    bool valid = true;
    std::string error;
  };
  std::vector<Row> rows(o.runs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < rows.size();) {
      GenSpec s = base;
      s.seed = base.seed + k;
      try {
        const auto radii = generate(s);
        auto p = make_packer(o.container, o.b, mode);
        for (std::size_t i = 0; i < radii.size(); ++i) p->check_input(i, radii[i]);
        for (double r : radii) {
          if (!p->pack(r)) break;
        }
        rows[k].n = radii.size();
        rows[k].result = p->result();
        rows[k].valid = validate(rows[k].result, rows[k].result.container_rect(), eps).valid;
      } catch (const std::exception& e) {
        rows[k].error = e.what();
      }
    }
  };
  const unsigned n_threads = std::max(1u, o.threads ? o.threads : std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(n_threads, rows.size()); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  bool invalid = false, rejected = false;
  std::printf("seed,count,status,packed,total_packed_area,valid\n");
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const Row& r = rows[k];
    if (!r.error.empty()) {
      std::printf("%llu,%zu,error,0,0,false\n", static_cast<unsigned long long>(base.seed + k), r.n);
      std::fprintf(stderr, "seed %llu: %s\n", static_cast<unsigned long long>(base.seed + k), r.error.c_str());
      invalid = true;
      continue;
    }
    std::printf("%llu,%zu,%s,%zu,%.17g,%s\n", static_cast<unsigned long long>(base.seed + k), r.n,
                to_string(r.result.status), r.result.placements.size(), r.result.total_packed_area,
                r.valid ? "true" : "false");
    invalid |= !r.valid;
    rejected |= r.result.status == PackStatus::rejected;
  }
  if (invalid) return kExitInput;
  return rejected ? kExitRejected : kExitOk;
}

void add_gen_options(CLI::App* cmd, GenOptions& g) {
  cmd->add_option("--kind", g.kind, "greedy_adversary, uniform, single_worstcase or class_boundary")
      ->capture_default_str();
  cmd->add_option("--seed", g.seed, "Generator seed")->capture_default_str();
  cmd->add_option("--rmin", g.r_min, "Smallest radius")->capture_default_str();
  cmd->add_option("--rmax", g.r_max, "Largest radius")->capture_default_str();
  cmd->add_option("--count", g.count, "Maximum number of radii")->capture_default_str();
  cmd->add_option("--width", g.width, "Lane width for class_boundary")->capture_default_str();
  cmd->add_option("--epsilon", g.epsilon, "Excess over 1/2 for single_worstcase")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online circle packing into squares and 1 x b rectangles"};
  app.require_subcommand(1);

  PackOptions pack;
  auto* pack_cmd = app.add_subcommand("pack", "Pack a radius sequence online");
  pack_cmd->add_option("--container", pack.container, "square or rect")->capture_default_str();
  pack_cmd->add_option("--b", pack.b, "Rectangle length (rect only)")->capture_default_str();
  pack_cmd->add_option("--mode", pack.mode, "general or no-tiny (square only)")->capture_default_str();
  pack_cmd->add_option("--input", pack.input, "Radii file, one per line or a JSON array; - for stdin")
      ->capture_default_str();
  pack_cmd->add_option("--json", pack.json, "Result JSON path; - for stdout")->capture_default_str();
  pack_cmd->add_option("--svg", pack.svg, "Optional SVG rendering path");
  pack_cmd->add_option("--scale", pack.scale, "SVG pixels per unit")->capture_default_str();
  pack_cmd->add_option("--eps", pack.eps, "Contact tolerance (default CIRCLEPACK_EPS or 1e-9)");

  std::string verify_input = "-";
  double verify_eps = -1.0;
  auto* verify_cmd = app.add_subcommand("verify", "Check a pack result JSON");
  verify_cmd->add_option("--input", verify_input, "Result JSON path; - for stdin")->capture_default_str();
  verify_cmd->add_option("--eps", verify_eps, "Contact tolerance (default CIRCLEPACK_EPS or 1e-9)");

  BoundsOptions bnd;
  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate density bounds and guarantees");
  bounds_cmd->add_option("--delta", bnd.delta, "Dense-block density bound for relative radius q");
  bounds_cmd->add_option("--rect", bnd.rect, "Guaranteed area for the 1 x b rectangle");
  bounds_cmd->add_option("--square-mode", bnd.square, "Guaranteed area for the square (general, no-tiny)");
  bounds_cmd->add_flag("--table", bnd.table, "Print the class table as CSV");
  bounds_cmd->add_option("--table-width", bnd.table_w, "Base lane width of the table")->capture_default_str();
  bounds_cmd->add_option("--rows", bnd.rows, "Number of table rows")->capture_default_str();

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Emit a seeded radius sequence, one per line");
  add_gen_options(gen_cmd, gen);
  gen_cmd->add_option("--threshold", gen.threshold, "Area budget")->capture_default_str();

  BatchOptions batch;
  auto* batch_cmd = app.add_subcommand("batch", "Generate, pack and validate many seeded runs");
  batch_cmd->add_option("--container", batch.container, "square or rect")->capture_default_str();
  batch_cmd->add_option("--b", batch.b, "Rectangle length (rect only)")->capture_default_str();
  batch_cmd->add_option("--mode", batch.mode, "general or no-tiny")->capture_default_str();
  batch_cmd->add_option("--runs", batch.runs, "Number of seeds")->capture_default_str();
  batch_cmd->add_option("--threads", batch.threads, "Worker threads (0 = all cores)")->capture_default_str();
  batch_cmd->add_option("--eps", batch.eps, "Contact tolerance");
  batch_cmd->add_option("--threshold", batch.gen.threshold, "Area budget (default: the container's guarantee)");
  add_gen_options(batch_cmd, batch.gen);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*pack_cmd) return run_pack(pack);
    if (*verify_cmd) return run_verify(verify_input, verify_eps);
    if (*bounds_cmd) return run_bounds(bnd);
    if (*gen_cmd) return run_gen(gen);
    if (*batch_cmd) {
      batch.threshold_set = batch_cmd->count("--threshold") > 0;
      return run_batch(batch);
    }
  } catch (const InputError& e) {
    std::fprintf(stderr, "input error: radius #%zu: %s\n", e.index(), e.what());
    return kExitInput;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return kExitInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  }
  return kExitInput;
}
