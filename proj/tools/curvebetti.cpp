// curvebetti: Betti tables of shifted monomial curves and the checks around
// their periodicity.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curvebetti/curvebetti.hpp"

namespace cb = curvebetti;

namespace {

enum Exit { kOk = 0, kFail = 1, kInvalid = 2, kTruncated = 3, kInconclusive = 4 };

struct CliConfig {
  std::vector<cb::Int> sequence;
  cb::Int shift = 0;
  std::string field = "q";
  std::string format = "table";
  cb::Int l_max = 0;
  cb::Int buffer = -1;
  cb::Int regJ = -1;
  cb::Int periods = 1;
  int threads = 0;
  bool affine = false;
  bool scan = false;
  bool rigorous = false;
  bool totals = false;
  std::string check;
  cb::Int h = 0;
  bool families = false;
};

cb::FieldSpec parse_field(const std::string& text) {
  if (text == "q" || text == "Q" || text == "QQ") return cb::FieldSpec::rationals();
  if (text.rfind("p:", 0) == 0) {
    try {
      return cb::FieldSpec::prime(std::stoll(text.substr(2)));
    } catch (const std::logic_error&) {
    }
  }
  throw cb::Error(cb::ErrorKind::InvalidInput, "field must be q or p:<prime>", {{"field", text}});
}

cb::RunOptions run_options(const CliConfig& cfg) {
  return {parse_field(cfg.field), cfg.threads};
}

void print_json(const cb::ordered_json& j) { std::cout << j.dump(2) << '\n'; }

int exit_for(const cb::Error& ex) {
  switch (ex.kind()) {
    case cb::ErrorKind::ScanTruncated:
    case cb::ErrorKind::WindowBreach: return kTruncated;
    case cb::ErrorKind::InternalWeightMismatch: return kFail;
    default: return kInvalid;
  }
}

int exit_for(const cb::VerificationReport& report) {
  switch (report.status) {
    case cb::VerificationReport::Status::Pass: return kOk;
    case cb::VerificationReport::Status::Fail: return kFail;
    case cb::VerificationReport::Status::Inconclusive: return kInconclusive;
  }
  return kFail;
}

cb::Int regJ_for(const CliConfig& cfg, const cb::CurveSequence& curve) {
  return cfg.regJ >= 0 ? cfg.regJ : cb::betti_J(curve, run_options(cfg)).regJ;
}

int cmd_betti(const CliConfig& cfg) {
  const auto curve = cb::make_curve(cfg.sequence);
  const cb::Int regJ = regJ_for(cfg, curve);
  cb::ProjectiveMode mode = cb::auto_mode(curve, cfg.shift, regJ);
  if (cfg.scan) mode = cb::ProjectiveMode::scan(cfg.l_max, regJ);
  if (cfg.rigorous) mode = cb::ProjectiveMode::rigorous(regJ, cfg.buffer);
  if (mode.kind == cb::ProjectiveMode::Kind::Scan) mode.l_max = cfg.l_max;
  else mode.buffer = cfg.buffer;

  const auto options = run_options(cfg);
  const auto run = cb::betti_projective(cb::shift_curve(curve, cfg.shift), mode, options);
  const cb::BettiTable table = cfg.affine ? cb::betti_affine(run, options) : run.table;
  if (cfg.format == "json") print_json(cb::table_to_json(table));
  else std::cout << cb::format_table(table, cfg.totals);
  return kOk;
}

int cmd_verify(const CliConfig& cfg) {
  const auto curve = cb::make_curve(cfg.sequence);
  cb::VerifyOptions options;
  options.run = run_options(cfg);
  options.l_max = cfg.l_max;
  options.buffer = cfg.buffer;
  const cb::Int regJ = regJ_for(cfg, curve);

  cb::VerificationReport report;
  if (cfg.check == "shift") report = cb::check_shift(curve, cfg.shift, regJ, options);
  else if (cfg.check == "affine") report = cb::check_affine_equality(curve, cfg.shift, regJ, options);
  else if (cfg.check == "period") report = cb::check_main_periodicity(curve, cfg.shift, cfg.periods, regJ, options);
  else if (cfg.check == "double-cone") report = cb::check_double_cone(curve, cfg.shift, regJ, options);
  else if (cfg.check == "deletion") report = cb::check_deletion(curve, cfg.shift, regJ, options);
  else if (cfg.check == "inhomog") report = cb::check_inhomogeneous_shape(curve, cfg.shift, regJ, options);
  else throw cb::Error(cb::ErrorKind::InvalidInput, "unknown check", {{"check", cfg.check}});
  print_json(report.to_json());
  return exit_for(report);
}

/// h when the sequence is a^h for some h >= 2.
std::optional<cb::Int> bresinsky_h(const std::vector<cb::Int>& a) {
  if (a.size() != 4) return std::nullopt;
  for (cb::Int h = 2; (2 * h - 1) * 2 * h <= a[0]; ++h)
    if (cb::bresinsky_sequence(h) == a) return h;
  return std::nullopt;
}

int cmd_bounds(const CliConfig& cfg) {
  const auto curve = cb::make_curve(cfg.sequence);
  const cb::Int regJ = regJ_for(cfg, curve);
  const cb::Int N = cb::bound_N(curve, regJ);
  cb::ordered_json j;
  j["sequence"] = curve.a;
  j["b"] = curve.b;
  j["d"] = curve.d;
  j["c"] = curve.c;
  j["B"] = curve.B;
  j["regJ"] = regJ;
  j["N"] = N;
  j["projective_threshold"] = N - curve.an();
  j["degenerate"] = curve.degenerate();
  if (cfg.shift > 0) {
    j["shift"] = cfg.shift;
    j["e"] = cb::shift_e(curve, cfg.shift);
  }
  if (auto h = bresinsky_h(curve.a)) {
    j["bresinsky_h"] = *h;
    j["bresinsky_envelope"] = 4 * curve.b1() * curve.b2() * (curve.b2() + 1);
  }
  if (cfg.format == "json") {
    print_json(j);
  } else {
    for (const auto& [key, value] : j.items()) std::cout << key << " = " << value.dump() << '\n';
  }
  return kOk;
}

int cmd_numsg(const CliConfig& cfg) {
  const cb::Int c = cb::conductor(cfg.sequence);
  cb::Int smallest = cfg.sequence.front();
  for (cb::Int g : cfg.sequence) smallest = std::min(smallest, g);
  cb::ordered_json j;
  j["generators"] = cfg.sequence;
  j["conductor"] = c;
  j["frobenius"] = c - 1;
  j["apery_modulus"] = smallest;
  j["apery_set"] = cb::apery_set(cfg.sequence, smallest);
  if (cfg.format == "json") {
    print_json(j);
  } else {
    for (const auto& [key, value] : j.items()) std::cout << key << " = " << value.dump() << '\n';
  }
  return kOk;
}

int cmd_bresinsky(const CliConfig& cfg) {
  const auto ctx = cb::bresinsky_context(cfg.h, cfg.shift);
  cb::VerifyOptions options;
  options.run = run_options(cfg);
  options.buffer = cfg.buffer;
  const auto report = cb::bresinsky_mu_check(cfg.h, cfg.shift, options);
  const cb::Int period = ctx.period();

  std::string diagnosis = "residue " + std::to_string(ctx.s);
  if (ctx.sharp())
    diagnosis += " = 4h (mod " + std::to_string(period) + "): sharp case";
  else
    diagnosis += " != 4h (mod " + std::to_string(period) + "): mu' <= " + std::to_string(ctx.mu_bound());

  if (cfg.format == "json") {
    cb::ordered_json j = report.to_json();
    j["diagnosis"] = diagnosis;
    if (cfg.families) {
      j["families"] = cb::family_to_json(ctx, cb::bresinsky_family(ctx));
      if (ctx.sharp()) j["sharp_generators"] = cb::family_to_json(ctx, cb::bresinsky_sharp_generators(ctx));
    }
    print_json(j);
  } else {
    std::cout << "a = " << cb::ordered_json(ctx.curve.a).dump() << ", j = " << ctx.j << ", m = " << ctx.m
              << ", s = " << ctx.s << ", (alpha, beta) = (" << ctx.alpha << ", " << ctx.beta_digit << ")\n";
    std::cout << "mu' = " << report.params.value("mu_prime", cb::Int{-1}) << '\n';
    std::cout << diagnosis << '\n';
    std::cout << "status: " << cb::VerificationReport::to_string(report.status) << '\n';
    if (cfg.families) {
      auto show = [&](const std::vector<cb::FamilyBinomial>& fam) {
        for (const auto& f : fam)
          std::cout << "  " << f.family << "[" << f.index << "] " << cb::ordered_json(f.lhs).dump() << " - "
                    << cb::ordered_json(f.rhs).dump() << "  deg " << f.degree() << "  weight "
                    << cb::affine_weight(ctx, f.lhs) << '\n';
      };
      std::cout << "families:\n";
      show(cb::bresinsky_family(ctx));
      if (ctx.sharp()) {
        std::cout << "sharp generators:\n";
        show(cb::bresinsky_sharp_generators(ctx));
      }
    }
  }
  return exit_for(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti tables of shifted monomial curves"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", cfg.field, "q or p:<prime>")->capture_default_str();
    sub->add_option("--threads", cfg.threads, "worker threads (0: CURVEBETTI_THREADS or hardware)");
    sub->add_option("--regJ", cfg.regJ, "use this reg J(a) instead of computing it");
  };
  auto add_seq = [&](CLI::App* sub) {
    sub->add_option("--seq", cfg.sequence, "a_1,...,a_n")->delimiter(',')->required();
  };

  auto* betti = app.add_subcommand("betti", "Betti table of the projective closure (or the affine curve)");
  add_seq(betti);
  betti->add_option("--shift", cfg.shift, "shift j")->required();
  betti->add_flag("--affine", cfg.affine, "table of I(a+j) in the semigroup grading");
  betti->add_option("--format", cfg.format)->check(CLI::IsMember({"table", "json"}));
  betti->add_option("--lmax", cfg.l_max, "scan depth");
  betti->add_option("--buffer", cfg.buffer, "window buffer in rigorous mode");
  auto* scan = betti->add_flag("--scan", cfg.scan, "enumerate every degree up to --lmax");
  auto* rigorous = betti->add_flag("--rigorous", cfg.rigorous, "windowed high block (needs j > N - a_n)");
  scan->excludes(rigorous);
  betti->add_flag("--totals", cfg.totals, "add a total row to the text table");
  add_common(betti);

  auto* verify = app.add_subcommand("verify", "run one theorem check");
  verify->add_option("check", cfg.check)
      ->required()
      ->check(CLI::IsMember({"shift", "affine", "period", "double-cone", "deletion", "inhomog"}));
  add_seq(verify);
  verify->add_option("--shift", cfg.shift)->required();
  verify->add_option("--periods", cfg.periods)->capture_default_str();
  verify->add_option("--buffer", cfg.buffer);
  verify->add_option("--lmax", cfg.l_max);
  add_common(verify);

  auto* bounds = app.add_subcommand("bounds", "invariants d, c, B, reg J, N");
  add_seq(bounds);
  bounds->add_option("--shift", cfg.shift);
  bounds->add_option("--format", cfg.format)->check(CLI::IsMember({"table", "json"}));
  add_common(bounds);

  auto* numsg = app.add_subcommand("numsg", "conductor and Apery set of a numerical semigroup");
  numsg->add_option("--gens", cfg.sequence, "g_1,...,g_r")->delimiter(',')->required();
  numsg->add_option("--format", cfg.format)->check(CLI::IsMember({"table", "json"}));

  auto* bres = app.add_subcommand("bresinsky", "mu' for the Bresinsky curves a^h");
  bres->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  bres->add_option("--h", cfg.h, "h >= 2")->required();
  bres->add_option("--shift", cfg.shift)->required();
  bres->add_flag("--families", cfg.families, "list the candidate generator families");
  bres->add_option("--format", cfg.format)->check(CLI::IsMember({"table", "json"}));
  bres->add_option("--buffer", cfg.buffer);
  add_common(bres);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kInvalid;
  }

  try {
    if (betti->parsed()) return cmd_betti(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (bounds->parsed()) return cmd_bounds(cfg);
    if (numsg->parsed()) return cmd_numsg(cfg);
    if (bres->parsed()) return cmd_bresinsky(cfg);
  } catch (const cb::Error& ex) {
    std::cerr << ex.to_json().dump() << '\n';
    return exit_for(ex);
  } catch (const std::exception& ex) {
    std::cerr << cb::ordered_json{{"error", "Internal"}, {"message", ex.what()}}.dump() << '\n';
    return kFail;
  }
  return kInvalid;
}
