#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "narrow2/errors.hpp"
#include "narrow2/narrow2.hpp"
#include "render.hpp"

namespace {

using namespace narrow2;
using narrow2::cli::Format;

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kArgument = 2,
  kDimension = 3,
  kExhausted = 4,
  kFormat = 5,
  kUnwritable = 6,
};

// Failure to write the requested output file.
struct WriteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input file that cannot be read or parsed.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::uint64_t limit = 10'000'000;
  unsigned workers = 1;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out;
  bool verbose = false;
  bool timing = false;

  Format fmt() const { return cli::parse_format(format); }
  SearchOptions search() const {
    SearchOptions o;
    o.limit = limit;
    o.workers = workers;
    return o;
  }
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  if (!file) throw WriteError("cannot open " + cfg.out + " for writing");
  file << text;
  file.flush();
  if (!file) throw WriteError("cannot write " + cfg.out);
}

std::uint64_t default_limit() {
  const char* env = std::getenv("NARROW2_LIMIT");
  if (env == nullptr || *env == '\0') return 10'000'000;
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(env).size()) {
    throw ArgumentError(std::string("NARROW2_LIMIT is not an integer: ") + env);
  }
  return v;
}

Json read_json(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot read " + path);
  std::stringstream buffer;
  buffer << file.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

class Timer {
 public:
  explicit Timer(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  std::optional<double> seconds() const {
    if (!enabled_) return std::nullopt;
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

std::vector<std::vector<std::size_t>> all_points(const AdditiveSystem& s) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (unsigned i = 0; i + 1 < s.d; ++i) {
    const std::size_t codes = s.ground_sets[i].size() * s.ground_sets[i].size();
    std::vector<std::vector<std::size_t>> next;
    for (const auto& prefix : out) {
      for (std::size_t c = 0; c < codes; ++c) {
        next.push_back(prefix);
        next.back().push_back(c);
      }
    }
    out = std::move(next);
  }
  return out;
}

int run(int argc, char** argv) {
  Config cfg;
  cfg.limit = default_limit();

  CLI::App app{"Narrow and ray class 2-rank toolkit for multiquadratic fields"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--limit", cfg.limit, "Prime search limit (default NARROW2_LIMIT or 10^7)")
      ->check(CLI::Range(std::uint64_t{3}, std::numeric_limits<std::uint64_t>::max()));
  app.add_option("--workers", cfg.workers, "Worker threads for prime searches")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--seed", cfg.seed, "Seed for random generators");
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", cfg.out, "Write output to this path instead of stdout");
  app.add_flag("--verbose", cfg.verbose, "Print contexts and full transcripts");
  app.add_flag("--timing", cfg.timing, "Report wall time for searches");

  RedeiCache cache;
  std::function<void()> action;

  // symbol
  auto* symbol = app.add_subcommand("symbol", "Legendre or Redei symbol");
  symbol->require_subcommand(1);
  std::string leg_a;
  std::uint64_t leg_p = 0;
  auto* legendre_cmd = symbol->add_subcommand("legendre", "Legendre symbol (a/p) as 0 or 1");
  legendre_cmd->add_option("a", leg_a)->required();
  legendre_cmd->add_option("p", leg_p)->required();
  legendre_cmd->callback([&] {
    action = [&] {
      Integer a;
      if (a.set_str(leg_a, 10) != 0) throw ArgumentError("not an integer: " + leg_a);
      const int value = legendre(a, leg_p);
      emit(cfg, cli::render_legendre(cfg.fmt(), a, leg_p, value));
    };
  });
  std::uint64_t ra = 0, rb = 0, rc = 0;
  auto* redei_cmd = symbol->add_subcommand("redei", "Redei symbol [a, b, c] in F2");
  redei_cmd->add_option("a", ra)->required();
  redei_cmd->add_option("b", rb)->required();
  redei_cmd->add_option("c", rc)->required();
  redei_cmd->callback([&] {
    action = [&] {
      const int value = redei_symbol(ra, rb, rc);
      const auto ctx = cache.context(ra, rb);
      emit(cfg, cli::render_redei(cfg.fmt(), *ctx, rc, value, cfg.verbose));
    };
  });

  // maximal
  std::vector<std::uint64_t> max_entries;
  std::optional<std::uint64_t> max_c;
  auto* maximal = app.add_subcommand("maximal", "Decide whether a vector attains the 2-rank bound");
  maximal->add_option("entries", max_entries)->required();
  maximal->add_option("--c", max_c, "Squarefree modulus for the ray class bound");
  maximal->callback([&] {
    action = [&] {
      cli::MaximalOutput m;
      m.vector = parse_acceptable(max_entries);
      m.report = is_maximal(m.vector, &cache);
      if (max_c) {
        m.c = *max_c;
        m.ray_bound = ray_class_bound(m.vector, *max_c);
        m.prediction = predicted_ray_dimension(m.vector, *max_c, &cache);
        m.units = verify_unit_reduction(m.vector, *max_c);
      }
      emit(cfg, cli::render_maximal(cfg.fmt(), m, cfg.verbose));
    };
  });

  // search
  auto* search = app.add_subcommand("search", "Prime searches");
  search->require_subcommand(1);
  std::size_t space_m = 3, space_n = 3;
  auto* space_cmd = search->add_subcommand("space", "Build a Redei-started space");
  space_cmd->add_option("--m", space_m, "Number of coordinates")->check(CLI::Range(1, 64));
  space_cmd->add_option("--n", space_n, "Primes per coordinate")->check(CLI::Range(1, 100000));
  space_cmd->callback([&] {
    action = [&] {
      Timer timer(cfg.timing);
      const RedeiSpace space = build_space(space_m, space_n, cfg.search(), cache);
      emit(cfg, cli::render_space(cfg.fmt(), space, {cfg.limit, timer.seconds()}, cfg.verbose));
    };
  });
  std::vector<unsigned> tri_profile;
  std::size_t tri_pool = 1, tri_max = 0;
  auto* triples_cmd = search->add_subcommand("triples", "Enumerate maximal vectors");
  triples_cmd->add_option("--omega", tri_profile, "Prime counts per entry, comma separated")
      ->required()
      ->delimiter(',');
  triples_cmd->add_option("--pool", tri_pool, "Products drawn from pool*k primes per coordinate")
      ->check(CLI::Range(1, 4096));
  triples_cmd->add_option("--max", tri_max, "Stop after this many vectors (0: all)");
  triples_cmd->callback([&] {
    action = [&] {
      Timer timer(cfg.timing);
      const auto result = enumerate_maximal_vectors(tri_profile, tri_pool, cfg.search(), cache, tri_max);
      emit(cfg, cli::render_triples(cfg.fmt(), tri_profile, tri_pool, result,
                                    {cfg.limit, timer.seconds()}, cfg.verbose));
    };
  });
  std::uint64_t ray_c = 0;
  std::vector<unsigned> ray_profile;
  auto* ray_cmd = search->add_subcommand("rayclass", "Find a vector attaining the ray class bound");
  ray_cmd->add_option("--c", ray_c, "Squarefree modulus")->required();
  ray_cmd->add_option("--omega", ray_profile, "Prime counts per entry")->required()->delimiter(',');
  ray_cmd->callback([&] {
    action = [&] {
      Timer timer(cfg.timing);
      const auto result = find_ray_class_vector(ray_c, ray_profile, cfg.search(), cache);
      emit(cfg, cli::render_rayclass(cfg.fmt(), ray_profile, result, {cfg.limit, timer.seconds()},
                                     cfg.verbose));
    };
  });

  // additive
  auto* additive = app.add_subcommand("additive", "Additive systems");
  additive->require_subcommand(1);
  unsigned add_d = 2, add_dim = 2;
  std::vector<std::size_t> add_sizes;
  auto* random_cmd = additive->add_subcommand("random", "Random bilinear system as JSON");
  random_cmd->add_option("--d", add_d, "Number of coordinates")->check(CLI::Range(0, 4));
  random_cmd->add_option("--sizes", add_sizes, "Ground set sizes")->delimiter(',');
  random_cmd->add_option("--dim", add_dim, "Largest value dimension")->check(CLI::Range(0, 8));
  random_cmd->callback([&] {
    action = [&] {
      auto sizes = add_sizes;
      if (sizes.empty()) sizes.assign(add_d, 3);
      if (sizes.size() != add_d) throw ArgumentError("--sizes needs exactly d values");
      for (std::size_t n : sizes) {
        if (n == 0 || n > 8) throw ArgumentError("ground set sizes must lie in 1..8");
      }
      emit(cfg, dump(additive_to_json(random_bilinear_system(cfg.seed, add_d, sizes, add_dim))));
    };
  });
  std::string add_in;
  auto load = [&] {
    try {
      return additive_from_json(read_json(add_in));
    } catch (const ArgumentError& e) {
      throw FormatError("$", e.what());
    }
  };
  auto* validate_cmd = additive->add_subcommand("validate", "Check the system laws");
  validate_cmd->add_option("--in", add_in, "System JSON")->required();
  validate_cmd->callback([&] {
    action = [&] { emit(cfg, cli::render_validation(cfg.fmt(), validate(load()))); };
  });
  auto* shrink_cmd = additive->add_subcommand("shrink", "Exact shrinking inequality");
  shrink_cmd->add_option("--in", add_in, "System JSON")->required();
  shrink_cmd->callback([&] {
    action = [&] { emit(cfg, cli::render_shrinking(cfg.fmt(), verify_shrinking(load()))); };
  });
  std::vector<std::size_t> classes_x;
  auto* classes_cmd = additive->add_subcommand("classes", "Equivalence structure W(x)");
  classes_cmd->add_option("--in", add_in, "System JSON")->required();
  classes_cmd->add_option("--x", classes_x, "Pair codes of the first d-1 coordinates")
      ->delimiter(',');
  classes_cmd->callback([&] {
    action = [&] {
      const AdditiveSystem s = load();
      if (s.d == 0) throw ArgumentError("classes needs d >= 1");
      std::vector<cli::ClassesRow> rows;
      const auto points =
          classes_cmd->count("--x") ? std::vector<std::vector<std::size_t>>{classes_x} : all_points(s);
      for (const auto& x : points) rows.push_back({x, equivalence_structure(s, x)});
      emit(cfg, cli::render_classes(cfg.fmt(), s, rows));
    };
  });

  // emit-gp
  std::vector<std::uint64_t> gp_entries;
  std::uint64_t gp_c = 1;
  auto* gp = app.add_subcommand("emit-gp", "Write a PARI/GP cross-check script");
  gp->add_option("entries", gp_entries)->required();
  gp->add_option("--c", gp_c, "Squarefree modulus for the ray class section");
  gp->callback([&] {
    action = [&] { emit(cfg, emit_gp_script(parse_acceptable(gp_entries), gp_c, &cache)); };
  });

  // unit
  std::uint64_t unit_d = 0;
  auto* unit = app.add_subcommand("unit", "Fundamental unit of Q(sqrt d)");
  unit->add_option("d", unit_d)->required();
  unit->callback([&] {
    action = [&] { emit(cfg, cli::render_unit(cfg.fmt(), fundamental_unit(unit_d))); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (cfg.limit < 3) throw ArgumentError("prime limit must be at least 3");
  action();
  return kOk;
}

int fail(int code, const std::string& message) {
  std::cerr << "narrow2: " << message << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UnsupportedDimensionError& e) {
    return fail(kDimension, e.what());
  } catch (const ExhaustionError& e) {
    return fail(kExhausted, e.what());
  } catch (const FormatError& e) {
    return fail(kFormat, e.what());
  } catch (const InputError& e) {
    return fail(kFormat, e.what());
  } catch (const ValidationError& e) {
    return fail(kFormat, e.what());
  } catch (const WriteError& e) {
    return fail(kUnwritable, e.what());
  } catch (const std::exception& e) {
    return fail(kArgument, e.what());
  }
}
