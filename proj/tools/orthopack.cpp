#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orthopack/checks.hpp"
#include "orthopack/constructions.hpp"
#include "orthopack/cube.hpp"
#include "orthopack/engine.hpp"
#include "orthopack/errors.hpp"
#include "orthopack/finite_group.hpp"
#include "orthopack/fourier.hpp"
#include "orthopack/json_io.hpp"
#include "orthopack/report.hpp"
#include "orthopack/version.hpp"
#include "orthopack/workspace.hpp"

namespace {

using namespace orthopack;

constexpr int kExitFail = 1;
constexpr int kExitUndecidable = 2;
constexpr int kExitUsage = 64;
constexpr int kExitSoftware = 70;
constexpr int kExitIo = 74;

// Semantic misuse of flags or names, as opposed to bad input files.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunContext {
  std::string command;
  std::string report_path;
  bool timings = false;
  Report report;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  void note_input(const std::string& path, const std::string& bytes) {
    report.inputs.emplace_back(path, sha256_hex(bytes));
  }

  void flush() {
    if (report_path.empty()) return;
    report.command = command;
    report.version = kVersion;
    report.include_timings = timings;
    if (timings) {
      const auto elapsed = std::chrono::steady_clock::now() - started;
      report.timings["total"] = std::chrono::duration<double>(elapsed).count();
    }
    write_json_file(report_path, report_to_json(report));
  }
};

std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw OrthopackError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json_bytes(const std::string& path, const std::string& bytes) {
  try {
    return json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ValidationError("bad JSON in " + path + ": " + e.what());
  }
}

void emit_json(const json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << dump_canonical(j);
  else
    write_json_file(out_path, j);
}

int exit_code_of(const Certificate& c) {
  switch (c.verdict) {
    case Verdict::Pass: return 0;
    case Verdict::Fail: return kExitFail;
    default: return kExitUndecidable;
  }
}

FamilySet named_construction(const std::string& name, int dimension) {
  if (name == "thin3d") return thin3d();
  if (name == "thick3d") return thick3d();
  if (name == "lattice") return integer_lattice(dimension);
  if (name == "empty") return empty_set(dimension);
  if (name == "singleton") return singleton_origin(dimension);
  if (name == "thin3d-lift1") return lift(thin3d(), 1);
  if (name == "thin3d-product") return product(thin3d(), thin3d());
  throw UsageError("unknown construction: " + name);
}

Workspace load_workspace(RunContext& ctx, const std::string& path,
                         const std::vector<std::string>& witness_flags) {
  Workspace ws = default_workspace();
  if (!path.empty()) {
    const std::string bytes = read_file_bytes(path);
    ctx.note_input(path, bytes);
    ws = workspace_from_json(parse_json_bytes(path, bytes));
  }
  for (const std::string& flag : witness_flags) {
    const std::size_t eq = flag.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == flag.size())
      throw UsageError("--witness takes name=preset, e.g. alpha=sqrt2/2");
    try {
      ws.witnesses[SymbolId{flag.substr(0, eq)}] = parse_witness_preset(flag.substr(eq + 1));
    } catch (const ValidationError& e) {
      throw UsageError(e.what());
    }
  }
  return ws;
}

struct ConstructArgs {
  std::string name;
  int dimension = 3;
  std::string out_path;
};

int run_construct(RunContext& ctx, const ConstructArgs& args) {
  if (args.dimension < 1) throw UsageError("--dimension must be positive");
  const FamilySet fs = named_construction(args.name, args.dimension);
  emit_json(familyset_to_json(fs), args.out_path);
  ctx.flush();
  return 0;
}

struct VerifyArgs {
  std::string set_path;
  std::string check;
  std::string workspace_path;
  std::vector<std::string> witness_flags;
  int window = 0;  // 0: workspace default
  int kmax = 0;
  std::string out_path;
};

int run_verify(RunContext& ctx, const VerifyArgs& args) {
  const Workspace ws = load_workspace(ctx, args.workspace_path, args.witness_flags);
  const int window = args.window > 0 ? args.window : ws.window;
  const int kmax = args.kmax > 0 ? args.kmax : ws.kmax;

  const std::string bytes = read_file_bytes(args.set_path);
  ctx.note_input(args.set_path, bytes);
  const json doc = parse_json_bytes(args.set_path, bytes);
  const std::string schema = doc.value("schema", "");

  bool have_families = false;
  FamilySet fs;
  std::vector<Vector> points;
  if (schema == kFamilySetSchema) {
    fs = familyset_from_json(doc);
    require_symbols_declared(ws, fs);
    have_families = true;
    points = truncate(fs, window, kmax);
  } else if (schema == kPointSetSchema) {
    points = pointset_from_json(doc);
  } else {
    throw ValidationError("unsupported input schema: " + schema);
  }

  const SymbolWitness witness = witness_of(ws);
  Certificate cert = Certificate::undecidable("unset", json::object());
  if (args.check == "maximal") {
    if (!have_families) throw UsageError("--check maximal needs a family-set artifact");
    cert = verify_maximal(fs);
  } else if (args.check == "affine-cover") {
    if (!have_families) throw UsageError("--check affine-cover needs a family-set artifact");
    cert = affine_cover_check(points, natural_cover(fs));
  } else if (args.check == "orthogonal") {
    cert = pairwise_orthogonal(points);
  } else if (args.check == "packing") {
    cert = is_packing(points, witness);
  } else if (args.check == "slab") {
    cert = slab_check(points, window, witness);
  } else if (args.check == "coordinate") {
    cert = coordinate_shift_check(points, window);
  } else {
    throw UsageError("unknown check: " + args.check);
  }

  if (!args.out_path.empty()) write_json_file(args.out_path, json(cert));
  ctx.report.certificates.push_back(cert);
  ctx.flush();
  return exit_code_of(cert);
}

struct FiniteArgs {
  long long p = 3, q = 5, r = 7;
  std::string emit;
  std::string verify;
  std::uint64_t seed = 0;
  std::string out_path;
};

Certificate few_zeros_evidence(const CubeParams& params, std::uint64_t seed, int samples) {
  const long long n = cube_modulus(params);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> whole(0, n - 1);
  std::uniform_real_distribution<double> frac(0.01, 0.99);
  for (int trial = 0; trial < samples; ++trial) {
    const Rational xi = Rational(whole(rng)) + Rational(frac(rng));
    if (!closed_form_ft(params, xi).excludes_zero()) {
      Certificate cert = Certificate::undecidable(
          "few_zeros", {{"trial", trial}, {"xi", rational_repr(xi)}, {"samples", samples}});
      cert.evidence_only = true;
      return cert;
    }
  }
  Certificate cert = Certificate::pass("few_zeros", {{"samples", samples}, {"seed", seed}});
  cert.evidence_only = true;
  return cert;
}

int run_finite(RunContext& ctx, const FiniteArgs& args) {
  if (args.emit.empty() && args.verify.empty())
    throw UsageError("finite needs --emit and/or --verify");
  const CubeParams params{args.p, args.q, args.r};
  try {
    validate_cube_params(params);
  } catch (const ValidationError& e) {
    throw UsageError(e.what());
  }
  const long long n = cube_modulus(params);

  if (!args.emit.empty()) {
    const LiftedExample lifted = lift_to_r(params);
    json artifact;
    if (args.emit == "h0") {
      artifact = residues_to_json(lifted.h.starts, n);
    } else if (args.emit == "gamma0") {
      artifact = residues_to_json(lifted.gamma_residues, n);
    } else if (args.emit == "lambda0") {
      artifact = residues_to_json(lifted.lambda_residues, n);
    } else if (args.emit == "lift") {
      artifact = json{{"schema", kLiftSchema},
                      {"modulus", lifted.modulus},
                      {"h", intervals_to_json(lifted.h)},
                      {"lambda", residues_to_json(lifted.lambda_residues, n)},
                      {"gamma", residues_to_json(lifted.gamma_residues, n)}};
    } else {
      throw UsageError("unknown --emit target: " + args.emit);
    }
    emit_json(artifact, args.out_path);
  }

  int code = 0;
  if (!args.verify.empty()) {
    const FiniteGroup group = cube_group(params);
    const auto zero = [&params](const GroupElement& e) { return ft_zero_set_h0(params, e); };
    Certificate cert = Certificate::undecidable("unset", json::object());
    try {
      if (args.verify == "maximal") {
        cert = exhaustive_maximality(lambda0(params), zero, group);
      } else if (args.verify == "spectrum") {
        cert = spectrum_check(gamma0(params), zero, group, discrete_cube(params).size());
      } else if (args.verify == "tiling") {
        const bool ok = tiling_check(discrete_cube(params), gamma0(params), group);
        const json details{{"tile_size", discrete_cube(params).size()},
                           {"translate_count", gamma0(params).size()}};
        cert = ok ? Certificate::pass("tiling", details)
                  : Certificate::fail("tiling", json(nullptr), details);
      } else if (args.verify == "few-zeros") {
        cert = few_zeros_evidence(params, args.seed, 1000);
      } else {
        throw UsageError("unknown --verify target: " + args.verify);
      }
    } catch (const BoundExceeded& e) {
      cert = Certificate::undecidable(args.verify, {{"reason", e.what()}});
    }
    ctx.report.certificates.push_back(cert);
    code = exit_code_of(cert);
  }
  ctx.flush();
  return code;
}

struct ReportArgs {
  std::string in_path;
  std::string csv_path;
  std::string out_path;
};

int run_report(const ReportArgs& args) {
  const std::string bytes = read_file_bytes(args.in_path);
  const Report r = report_from_json(parse_json_bytes(args.in_path, bytes));
  const std::string text = render_report_text(r);
  if (args.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(args.out_path);
    if (!out) throw OrthopackError("cannot open " + args.out_path + " for writing");
    out << text;
  }
  if (!args.csv_path.empty()) {
    std::ofstream out(args.csv_path);
    if (!out) throw OrthopackError("cannot open " + args.csv_path + " for writing");
    out << render_report_csv(r);
  }
  return 0;
}

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i > 0) out.push_back(' ');
    out += argv[i];
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact orthogonal exponential sets for the cube"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  RunContext ctx;
  ctx.command = join_args(argc, argv);

  ConstructArgs construct_args;
  CLI::App* construct = app.add_subcommand("construct", "build a named family set");
  construct->add_option("name", construct_args.name, "thin3d|thick3d|lattice|empty|singleton|thin3d-lift1|thin3d-product")->required();
  construct->add_option("--dimension", construct_args.dimension, "ambient dimension for lattice/empty/singleton");
  construct->add_option("--out", construct_args.out_path, "artifact path (stdout when omitted)");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run a certificate check on a stored set");
  verify->add_option("--set", verify_args.set_path, "family-set or point-set artifact")->required();
  verify->add_option("--check", verify_args.check, "maximal|orthogonal|packing|slab|coordinate|affine-cover")->required();
  verify->add_option("--workspace", verify_args.workspace_path, "workspace config file");
  verify->add_option("--witness", verify_args.witness_flags, "symbol witness, name=preset (repeatable)");
  verify->add_option("--window", verify_args.window, "truncation and scan window");
  verify->add_option("--kmax", verify_args.kmax, "family index bound for truncation");
  verify->add_option("--out", verify_args.out_path, "write the certificate JSON here");

  FiniteArgs finite_args;
  CLI::App* finite = app.add_subcommand("finite", "squared-prime finite group example");
  finite->add_option("--p", finite_args.p, "smallest odd prime");
  finite->add_option("--q", finite_args.q, "middle odd prime");
  finite->add_option("--r", finite_args.r, "largest odd prime");
  finite->add_option("--emit", finite_args.emit, "h0|gamma0|lambda0|lift");
  finite->add_option("--verify", finite_args.verify, "maximal|spectrum|tiling|few-zeros");
  finite->add_option("--seed", finite_args.seed, "RNG seed for sampled evidence");
  finite->add_option("--out", finite_args.out_path, "artifact path (stdout when omitted)");

  ReportArgs report_args;
  CLI::App* report = app.add_subcommand("report", "render a stored report");
  report->add_option("--in", report_args.in_path, "report JSON produced by --report")->required();
  report->add_option("--csv", report_args.csv_path, "also write a CSV summary here");
  report->add_option("--out", report_args.out_path, "write the text summary here instead of stdout");

  for (CLI::App* sub : {construct, verify, finite}) {
    sub->add_option("--report", ctx.report_path, "write a run report JSON here");
    sub->add_flag("--timings", ctx.timings, "include wall-clock timings in the report");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (construct->parsed()) return run_construct(ctx, construct_args);
    if (verify->parsed()) return run_verify(ctx, verify_args);
    if (finite->parsed()) return run_finite(ctx, finite_args);
    return run_report(report_args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OrthopackError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitSoftware;
  }
}
