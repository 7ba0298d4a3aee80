// Copyright 2026 The dftpe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dftpe/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dftpe/csv.hpp"
#include "dftpe/dft.hpp"
#include "dftpe/encoders.hpp"
#include "dftpe/errors.hpp"
#include "dftpe/experiments.hpp"
#include "dftpe/reconstruction.hpp"
#include "dftpe/selftest.hpp"
#include "dftpe/spectral.hpp"

namespace dftpe {

namespace {

// Defaults follow the figure configuration: d=256, S=80, rho=1e4, sigma = 4*2*pi/d.
struct Options {
  std::string out_path;
  std::uint64_t seed = 0;

  std::size_t d = 256;
  std::size_t S = 80;
  double rho = 10000.0;
  double sigma_mult = 4.0;

  std::vector<std::size_t> positions = {5, 40, 75};
  std::string encoding = "dft";
  std::size_t display = 0;  // 0: full lattice

  std::string decode_encoding = "both";

  SyntheticTaskConfig task;
  ModelConfig model;
  std::vector<std::string> encoders = {"original", "dft"};
  std::string loss_csv;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_spectrum(const Options& o, std::ostream& out) {
  const PEConfig cfg{o.d, o.S, o.rho};
  cfg.validate();
  const Lattice lattice = cfg.lattice();
  const FrequencyDistribution original =
      kde_distribution(cfg, KdeConfig::from_multiplier(o.sigma_mult, o.d));
  const FrequencyDistribution flat = dft_distribution(lattice);
  out << "# dftpe spectrum d=" << o.d << " rho=" << num(o.rho)
      << " sigma_mult=" << num(o.sigma_mult) << " seed=" << o.seed << '\n';
  out << "k,omega,g_original,g_dft\n";
  for (std::size_t k = 0; k < original.size(); ++k) {
    out << k << ',' << csv::real(lattice.frequency(k)) << ',' << csv::real(original[k]) << ','
        << csv::real(flat[k]) << '\n';
  }
}

void write_reconstruction(const Options& o, std::ostream& out) {
  const PEConfig cfg{o.d, o.S, o.rho};
  cfg.validate();
  const Lattice lattice = cfg.lattice();
  const EncodingKind kind = parse_encoding_kind(o.encoding);
  if (kind == EncodingKind::Zero) throw ValidationError("reconstruct needs original or dft");
  if (o.positions.empty()) throw ValidationError("--positions must name at least one position");
  for (std::size_t p : o.positions) {
    if (p >= o.d) throw ValidationError("position " + std::to_string(p) + " outside lattice");
  }
  const std::size_t rows = o.display == 0 ? o.d : std::min(o.display, o.d);
  const FrequencyDistribution g =
      kind == EncodingKind::Dft
          ? dft_distribution(lattice)
          : kde_distribution(cfg, KdeConfig::from_multiplier(o.sigma_mult, o.d));

  std::vector<ReconstructionReport> reports;
  for (std::size_t p : o.positions) reports.push_back(reconstruct(Signal::one_hot(lattice, p), g));

  out << "# dftpe reconstruct d=" << o.d << " rho=" << num(o.rho)
      << " sigma_mult=" << num(o.sigma_mult) << " encoding=" << to_string(kind)
      << " seed=" << o.seed << '\n';
  out << 't';
  for (std::size_t p : o.positions) out << ",ref_" << p << ",rec_" << p;
  out << '\n';
  for (std::size_t t = 0; t < rows; ++t) {
    out << t;
    for (const auto& r : reports) {
      out << ',' << csv::real(r.reference[t]) << ',' << csv::real(r.reconstructed[t]);
    }
    out << '\n';
  }
}

void write_encoding(const Options& o, std::ostream& out) {
  const EncodingKind kind = parse_encoding_kind(o.encoding);
  const EncodingMatrix enc = build_encoding_matrix(kind, PEConfig{o.d, o.S, o.rho});
  out << "# dftpe encode d=" << o.d << " S=" << o.S << " rho=" << num(o.rho)
      << " encoding=" << to_string(kind) << " aliasing_warning=" << enc.aliasing_warning
      << " seed=" << o.seed << '\n';
  out << 't';
  for (std::size_t s = 1; s <= o.S; ++s) out << ",e" << s;
  out << '\n';
  for (std::size_t t = 0; t < o.d; ++t) {
    out << t;
    for (std::size_t s = 0; s < o.S; ++s) out << ',' << csv::real(enc.columns(t, s));
    out << '\n';
  }
}

void write_decode_test(const Options& o, std::ostream& out) {
  std::vector<EncodingKind> kinds;
  if (o.decode_encoding == "both") {
    kinds = {EncodingKind::Original, EncodingKind::Dft};
  } else {
    kinds = {parse_encoding_kind(o.decode_encoding)};
  }
  out << "# dftpe decode-test d=" << o.d << " S=" << o.S << " rho=" << num(o.rho)
      << " seed=" << o.seed << '\n';
  out << "encoding,d,S,aliasing_warning,accuracy\n";
  for (EncodingKind kind : kinds) {
    const EncodingMatrix enc = build_encoding_matrix(kind, PEConfig{o.d, o.S, o.rho});
    out << to_string(kind) << ',' << o.d << ',' << o.S << ',' << enc.aliasing_warning << ','
        << csv::real(position_decode_accuracy(enc)) << '\n';
  }
}

void write_demo(const Options& o, std::ostream& out) {
  SyntheticTaskConfig task = o.task;
  task.seed = o.seed;
  std::vector<EncodingKind> kinds;
  for (const auto& name : o.encoders) kinds.push_back(parse_encoding_kind(name));
  if (kinds.empty()) throw ValidationError("--encoders must name at least one encoder");

  const std::vector<ComparisonResult> results = run_comparison(task, o.model, kinds);
  out << "# dftpe demo S=" << task.S << " D=" << task.D << " band=[" << task.band_begin << ','
      << task.band_end << ") amplitude=" << num(task.amplitude) << " noise=" << num(task.noise)
      << " N=" << task.N << " heads=" << o.model.heads << " lr=" << num(o.model.learning_rate)
      << " epochs=" << o.model.epochs << " seed=" << o.seed << '\n';
  for (const auto& r : results) {
    out << "encoder=" << to_string(r.kind) << " precision=" << csv::real(r.metrics.precision)
        << " recall=" << csv::real(r.metrics.recall) << " f1=" << csv::real(r.metrics.f1)
        << " accuracy=" << csv::real(r.metrics.accuracy())
        << " initial_loss=" << csv::real(r.loss_curve.front())
        << " final_loss=" << csv::real(r.loss_curve.back())
        << (r.non_convergent ? " non_convergent=1" : "") << '\n';
  }

  if (!o.loss_csv.empty()) {
    std::ofstream file(o.loss_csv, std::ios::binary);
    if (!file) throw ValidationError("cannot open loss CSV '" + o.loss_csv + "'");
    file << "epoch";
    if (results.size() == 1) {
      file << ",loss";
    } else {
      for (const auto& r : results) file << ",loss_" << to_string(r.kind);
    }
    file << '\n';
    for (std::size_t e = 0; e < results.front().loss_curve.size(); ++e) {
      file << e;
      for (const auto& r : results) file << ',' << csv::real(r.loss_curve[e]);
      file << '\n';
    }
  }
}

bool write_selftest(std::ostream& out) {
  const std::vector<SelfTestCheck> checks = run_selftest();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    out << (c.passed ? "ok   " : "FAIL ") << c.name << " (" << c.detail << ")\n";
    if (!c.passed) ++failed;
  }
  if (failed == 0) {
    out << "PASS " << checks.size() << " checks\n";
  } else {
    out << "FAIL " << failed << " of " << checks.size() << " checks\n";
  }
  return failed == 0;
}

void add_lattice_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--d", o.d, "Encoding dimension / lattice size (even, >= 4)")
      ->capture_default_str();
  cmd->add_option("--rho", o.rho, "Frequency base of the original encoder")
      ->capture_default_str();
}

void add_common_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out_path, "Write output to this file instead of stdout");
  cmd->add_option("--seed", o.seed, "Random seed (echoed in the preamble)")
      ->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"DFT positional encoding analysis toolkit", "dftpe"};
  app.require_subcommand(1);

  auto* spectrum = app.add_subcommand("spectrum", "Frequency distributions of both encoders");
  add_lattice_flags(spectrum, o);
  spectrum->add_option("--sigma-mult", o.sigma_mult, "KDE bandwidth in units of 2*pi/d")
      ->capture_default_str();

  auto* recon = app.add_subcommand("reconstruct", "Reference one-hot reconstruction");
  add_lattice_flags(recon, o);
  recon->add_option("--sigma-mult", o.sigma_mult, "KDE bandwidth in units of 2*pi/d")
      ->capture_default_str();
  recon->add_option("--positions", o.positions, "Comma-separated one-hot positions")
      ->delimiter(',')
      ->capture_default_str();
  recon->add_option("--encoding", o.encoding, "Frequency weights: original or dft")
      ->check(CLI::IsMember({"original", "dft"}))
      ->capture_default_str();
  recon->add_option("--display", o.display, "Emit only lattice points t < display (0: all)")
      ->capture_default_str();

  auto* encode = app.add_subcommand("encode", "Dump an encoding matrix");
  add_lattice_flags(encode, o);
  encode->add_option("--S", o.S, "Sequence length (positions are 0-based)")
      ->capture_default_str();
  encode->add_option("--encoding", o.encoding, "original, dft or none")
      ->check(CLI::IsMember({"original", "dft", "none"}))
      ->capture_default_str();

  auto* decode = app.add_subcommand("decode-test", "Position decoding accuracy by inner product");
  add_lattice_flags(decode, o);
  decode->add_option("--S", o.S, "Sequence length")->capture_default_str();
  decode->add_option("--encoding", o.decode_encoding, "original, dft or both")
      ->check(CLI::IsMember({"original", "dft", "both"}))
      ->capture_default_str();

  auto* demo = app.add_subcommand("demo", "Train attention classifiers on a synthetic task");
  demo->add_option("--S", o.task.S, "Window length")->capture_default_str();
  demo->add_option("--D", o.task.D, "Feature dimension (= encoding dimension)")
      ->capture_default_str();
  demo->add_option("--band-begin", o.task.band_begin, "First in-band position")
      ->capture_default_str();
  demo->add_option("--band-end", o.task.band_end, "One past the last in-band position")
      ->capture_default_str();
  demo->add_option("--amplitude", o.task.amplitude, "Spike amplitude")->capture_default_str();
  demo->add_option("--noise", o.task.noise, "Gaussian noise scale")->capture_default_str();
  demo->add_option("--N", o.task.N, "Number of windows (train + held out)")
      ->capture_default_str();
  demo->add_option("--heads", o.model.heads, "Attention heads")->capture_default_str();
  demo->add_option("--lr", o.model.learning_rate, "Gradient descent step size")
      ->capture_default_str();
  demo->add_option("--epochs", o.model.epochs, "Full-batch epochs")->capture_default_str();
  demo->add_option("--rho", o.model.rho, "Frequency base of the original encoder")
      ->capture_default_str();
  demo->add_option("--encoders", o.encoders, "Comma-separated encoders: original, dft, none")
      ->delimiter(',')
      ->capture_default_str();
  demo->add_option("--loss-csv", o.loss_csv, "Write the training loss curves here");

  auto* selftest = app.add_subcommand("selftest", "Run the built-in invariant checks");

  for (auto* cmd : {spectrum, recon, encode, decode, demo, selftest}) add_common_flags(cmd, o);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitValidation;
  }

  std::ostringstream buffer;
  bool selftest_ok = true;
  try {
    if (*spectrum) write_spectrum(o, buffer);
    else if (*recon) write_reconstruction(o, buffer);
    else if (*encode) write_encoding(o, buffer);
    else if (*decode) write_decode_test(o, buffer);
    else if (*demo) write_demo(o, buffer);
    else if (*selftest) selftest_ok = write_selftest(buffer);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const DegenerateInputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  const std::string& out_path = o.out_path;
  if (out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << out_path << "' for writing\n";
      return kExitValidation;
    }
    file << buffer.str();
  }
  return selftest_ok ? kExitOk : kExitSelfTestFailed;
}

}  // namespace dftpe
