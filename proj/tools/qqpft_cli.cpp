// Command-line front end: signal synthesis, transform execution, the
// verification battery, and plot-ready slice export.
//
// Exit codes: 0 = success / all checks passed, 1 = verification failure,
// 2 = usage or I/O error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qqpft/battery.hpp"
#include "qqpft/generators.hpp"
#include "qqpft/io.hpp"
#include "qqpft/time_frequency.hpp"

namespace {

using namespace qqpft;

constexpr std::uint64_t kSizeGuardBytes = 2ull << 30;  // 2 GiB

struct SliceRequest {
  double x1 = 0.0;
  double x2 = 0.0;
};

SliceRequest parse_slice(const std::string& text) {
  std::istringstream in(text);
  SliceRequest s;
  char comma = 0;
  if (!(in >> s.x1 >> comma >> s.x2) || comma != ',')
    throw std::invalid_argument("--slice expects \"x1,x2\"");
  return s;
}

int snap_index(double x, double origin, double step, int count) {
  int idx = static_cast<int>(std::lround((x - origin) / step));
  if (idx < 0) idx = 0;
  if (idx >= count) idx = count - 1;
  return idx;
}

void print_signal_info(std::ostream& out, const QSignal2D& f) {
  out << "format: QSIG1\n";
  out << "n: " << f.n() << "\n";
  out << "extent: " << f.spec().extent << "\n";
  out << "spacing: " << f.spec().spacing() << "\n";
  out << "l2_norm: " << lp_norm(f, 2.0) << "\n";
  double best = -1.0;
  int b1 = 0, b2 = 0;
  for (int m1 = 0; m1 < f.n(); ++m1)
    for (int m2 = 0; m2 < f.n(); ++m2) {
      const double v = norm_sq(f.at(m1, m2));
      if (v > best) {
        best = v;
        b1 = m1;
        b2 = m2;
      }
    }
  out << "sup_modulus: " << std::sqrt(best) << "\n";
  out << "sup_at: t=(" << f.spec().coord(b1) << "," << f.spec().coord(b2) << ")\n";
}

void print_spectrum_info(std::ostream& out, const QQPFTResult& F) {
  out << "format: QQPF1\n";
  out << "n: " << F.n() << "\n";
  out << "params: " << format_param_pair(F.params) << "\n";
  out << "xi1_range: [" << F.freq.xi1.front() << "," << F.freq.xi1.back() << "]\n";
  out << "xi2_range: [" << F.freq.xi2.front() << "," << F.freq.xi2.back() << "]\n";
  out << "l2_norm: " << lp_norm(F, 2.0) << "\n";
  double best = -1.0;
  int b1 = 0, b2 = 0;
  for (int k1 = 0; k1 < F.n(); ++k1)
    for (int k2 = 0; k2 < F.n(); ++k2) {
      const double v = norm_sq(F.at(k1, k2));
      if (v > best) {
        best = v;
        b1 = k1;
        b2 = k2;
      }
    }
  out << "sup_modulus: " << std::sqrt(best) << "\n";
  out << "sup_at: xi=(" << F.freq.xi1[b1] << "," << F.freq.xi2[b2] << ")\n";
  out << "chirp_warning: " << (F.chirp_warning[0] ? 1 : 0) << "," << (F.chirp_warning[1] ? 1 : 0)
      << "\n";
}

void print_tf_info(std::ostream& out, const TFGrid4D& F) {
  out << "format: QTF41\n";
  out << "nx: " << F.xspec().n << "\n";
  out << "x_extent: " << F.xspec().extent << "\n";
  out << "nxi: " << F.xispec().n() << "\n";
  out << "params: " << format_param_pair(F.params()) << "\n";
  out << "l2_norm_4d: " << lp_norm_4d(F, 2.0) << "\n";
  double best = 0.0;
  for (const auto& q : F.values()) best = std::max(best, norm_sq(q));
  out << "sup_modulus: " << std::sqrt(best) << "\n";
}

struct TransformArgs {
  std::string input;
  std::string window;
  std::string params_text;
  std::string out_path;
  std::string slice_text;
  bool direct = false;
  bool force = false;
};

void add_transform_options(CLI::App* cmd, TransformArgs& args, bool needs_window) {
  cmd->add_option("input", args.input, "input QSIG1 file")->required();
  auto* w = cmd->add_option("--window", args.window, "window QSIG1 file");
  if (needs_window) w->required();
  cmd->add_option("--params", args.params_text, "transform parameters \"A,B,C,D,E;A,B,C,D,E\"")
      ->required();
  cmd->add_option("--out", args.out_path, "output path")->required();
  cmd->add_option("--slice", args.slice_text,
                  "export one fixed-x CSV slice \"x1,x2\" instead of the full field");
  cmd->add_flag("--force", args.force, "allow 4D outputs above the 2 GiB guard");
}

int cmd_gen(const std::string& generator, int n, double extent, double width, double rate,
            std::uint64_t seed, const std::string& out_path, const std::string& csv_path) {
  const GridSpec spec(n, extent);
  QSignal2D f(spec);
  if (generator == "gaussian") {
    f = gen_gaussian(spec, width);
  } else if (generator == "chirp") {
    f = gen_chirp(spec, width, rate);
  } else if (generator == "impulse") {
    f = gen_impulse(spec);
  } else if (generator == "random-smooth") {
    f = gen_random_smooth(spec, seed);
  } else if (generator == "quaternion-random") {
    f = gen_quaternion_random(spec, seed);
  } else {
    throw std::invalid_argument("unknown generator id: " + generator);
  }
  write_qsig(out_path, f);
  if (!csv_path.empty()) write_signal_csv(csv_path, f);
  return 0;
}

int cmd_qqpft(const TransformArgs& args) {
  if (!args.slice_text.empty())
    throw std::invalid_argument("--slice applies to 4D outputs (stft, af, wvd) only");
  const QSignal2D f = read_qsig(args.input);
  const ParamPair P = parse_param_pair(args.params_text);
  QQPFTResult F = args.direct ? qqpft_direct(f, P, canonical_freq_grid(f.spec(), P))
                              : qqpft_fast(f, P);
  if (F.chirp_warning[0] || F.chirp_warning[1])
    std::cerr << "warning: chirp sampling guard tripped (axis "
              << (F.chirp_warning[0] ? "1" : "2") << "); output may be aliased\n";
  write_qqpf(args.out_path, F);
  return 0;
}

int cmd_tf(const std::string& kind, const TransformArgs& args) {
  const QSignal2D f = read_qsig(args.input);
  const QSignal2D g = args.window.empty() ? f : read_qsig(args.window);
  const ParamPair P = parse_param_pair(args.params_text);
  if (args.direct)
    throw std::invalid_argument("--direct applies to the qqpft command only");
  if (!(f.spec() == g.spec()))
    throw std::invalid_argument("grid mismatch between signal and window");

  const int n = f.n();
  if (!args.slice_text.empty()) {
    const SliceRequest s = parse_slice(args.slice_text);
    QQPFTResult slice{P, FreqGridSpec::uniform(2, 0, 1, 0, 1), {}, {}};
    if (kind == "stft") {
      const int m1 = snap_index(s.x1, f.spec().coord(0), f.spec().spacing(), n);
      const int m2 = snap_index(s.x2, f.spec().coord(0), f.spec().spacing(), n);
      slice = stqqpft_slice(WindowedPair(f, g, P), m1, m2);
    } else if (kind == "af") {
      const GridSpec xspec(n / 2, f.spec().extent);
      const int p1 = snap_index(s.x1, xspec.coord(0), xspec.spacing(), n / 2);
      const int p2 = snap_index(s.x2, xspec.coord(0), xspec.spacing(), n / 2);
      slice = qqpaf_slice(f, g, P, p1, p2);
    } else {
      const int m1 = snap_index(s.x1, f.spec().coord(0), f.spec().spacing(), n);
      const int m2 = snap_index(s.x2, f.spec().coord(0), f.spec().spacing(), n);
      slice = qqpwvd_slice(f, g, P, m1, m2);
    }
    write_slice_csv(args.out_path, slice);
    return 0;
  }

  const std::uint64_t nx = kind == "af" ? static_cast<std::uint64_t>(n) / 2 : n;
  const std::uint64_t bytes = nx * nx * static_cast<std::uint64_t>(n) * n * sizeof(Quaternion);
  if (bytes > kSizeGuardBytes && !args.force)
    throw std::invalid_argument("full 4D output would exceed 2 GiB; pass --force or use --slice");

  TFGrid4D F = kind == "stft" ? stqqpft(WindowedPair(f, g, P))
               : kind == "af" ? qqpaf(f, g, P)
                              : qqpwvd(f, g, P);
  write_qtf4(args.out_path, F);

  if (kind == "stft") {
    const double e2 = lp_norm_4d(F, 2.0);
    const double fn = lp_norm(f, 2.0);
    const double gn = lp_norm(g, 2.0);
    std::cerr << "energy_ratio: " << P.abs_b() * e2 * e2 / (fn * fn * gn * gn) << "\n";
  }
  return 0;
}

int cmd_verify(const BatteryOptions& opts, const std::vector<std::string>& inputs,
               const std::string& out_path) {
  BatteryOptions run = opts;
  for (const auto& path : inputs) run.signals.push_back(read_qsig(path));

  BatteryResult result{};
  if (out_path.empty()) {
    result = run_battery(run, std::cout, &std::cerr);
  } else {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open report for writing: " + out_path);
    result = run_battery(run, out, &std::cerr);
  }
  return result.all_passed() ? 0 : 1;
}

int cmd_info(const std::string& path, const std::string& csv_path) {
  const std::string fmt = sniff_format(path);
  if (fmt == "QSIG1") {
    const QSignal2D f = read_qsig(path);
    print_signal_info(std::cout, f);
    if (!csv_path.empty()) write_signal_csv(csv_path, f);
  } else if (fmt == "QQPF1") {
    print_spectrum_info(std::cout, read_qqpf(path));
  } else if (fmt == "QTF41") {
    print_tf_info(std::cout, read_qtf4(path));
  } else {
    throw std::runtime_error("unrecognized file format: " + path);
  }
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"two-sided quaternion quadratic-phase Fourier analysis toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "synthesize a signal file");
  std::string generator, gen_out, gen_csv;
  int gen_n = 64;
  double gen_extent = 16.0, gen_width = 1.0, gen_rate = 0.5;
  std::uint64_t gen_seed = 0;
  gen->add_option("generator", generator,
                  "gaussian | chirp | impulse | random-smooth | quaternion-random")
      ->required();
  gen->add_option("--n", gen_n, "samples per axis");
  gen->add_option("--extent", gen_extent, "physical width of the centered grid");
  gen->add_option("--width", gen_width, "envelope width");
  gen->add_option("--rate", gen_rate, "chirp rate");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--out", gen_out, "output QSIG1 path")->required();
  gen->add_option("--csv", gen_csv, "also export sample CSV");

  // transforms
  TransformArgs qq_args, stft_args, af_args, wvd_args;
  auto* qq = app.add_subcommand("qqpft", "two-sided quadratic-phase transform");
  add_transform_options(qq, qq_args, false);
  qq->add_flag("--direct", qq_args.direct, "force the O(n^4) quadrature path");
  auto* stft = app.add_subcommand("stft", "windowed transform on the 4D lattice");
  add_transform_options(stft, stft_args, true);
  auto* af = app.add_subcommand("af", "ambiguity transform");
  add_transform_options(af, af_args, false);
  auto* wvd = app.add_subcommand("wvd", "Wigner-Ville transform");
  add_transform_options(wvd, wvd_args, false);

  // verify
  auto* verify = app.add_subcommand("verify", "run an identity / inequality battery");
  BatteryOptions bopts;
  std::vector<std::string> verify_inputs;
  std::string verify_out, verify_params;
  verify->add_option("--battery", bopts.battery,
                     "parseval | hy | renyi | shannon | lieb | concentration | entropy-tf | "
                     "lemma41 | thm45 | thm46 | all");
  verify->add_option("--seed", bopts.seed, "battery seed");
  verify->add_option("--n", bopts.n, "grid samples per axis");
  verify->add_option("--extent", bopts.extent, "grid extent");
  verify->add_option("--signals", bopts.signal_count, "number of generated signals");
  verify->add_option("--param-count", bopts.param_count, "number of generated parameter pairs");
  verify->add_option("--params", verify_params, "fixed parameter pair instead of generated ones");
  verify->add_option("--alpha", bopts.alpha, "Renyi order override");
  verify->add_option("--q", bopts.q, "Lieb / concentration exponent override");
  verify->add_option("--epsilon", bopts.epsilon, "concentration epsilon override");
  verify->add_option("--in", verify_inputs, "QSIG1 inputs instead of generated signals");
  verify->add_option("--out", verify_out, "report path (default: stdout)");

  // info
  auto* info = app.add_subcommand("info", "describe a QSIG1/QQPF1/QTF41 file");
  std::string info_path, info_csv;
  info->add_option("file", info_path, "input file")->required();
  info->add_option("--csv", info_csv, "export sample CSV (QSIG1 only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints usage or the requested help text
    return code == 0 ? 0 : 2;
  }

  if (gen->parsed())
    return cmd_gen(generator, gen_n, gen_extent, gen_width, gen_rate, gen_seed, gen_out, gen_csv);
  if (qq->parsed()) return cmd_qqpft(qq_args);
  if (stft->parsed()) return cmd_tf("stft", stft_args);
  if (af->parsed()) return cmd_tf("af", af_args);
  if (wvd->parsed()) return cmd_tf("wvd", wvd_args);
  if (verify->parsed()) {
    if (!verify_params.empty()) bopts.params = parse_param_pair(verify_params);
    return cmd_verify(bopts, verify_inputs, verify_out);
  }
  if (info->parsed()) return cmd_info(info_path, info_csv);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (...) {
    std::fprintf(stderr, "error: unexpected failure\n");
    return 2;
  }
}
