#include "lcd/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include "lcd/bounds.hpp"
#include "lcd/classifier.hpp"
#include "lcd/code.hpp"
#include "lcd/errors.hpp"
#include "lcd/io.hpp"
#include "lcd/lcd_theory.hpp"
#include "lcd/properties.hpp"

namespace lcd {

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

// "-" selects the given standard stream.
class Input {
 public:
  Input(const std::string& path, std::istream& stdin_) {
    if (path == "-") {
      stream_ = &stdin_;
      return;
    }
    file_ = std::make_unique<std::ifstream>(path);
    if (!*file_) throw IoError("cannot open '" + path + "' for reading");
    stream_ = file_.get();
  }
  std::istream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* stream_ = nullptr;
};

class Output {
 public:
  Output(const std::string& path, std::ostream& stdout_) : path_(path) {
    if (path == "-") {
      stream_ = &stdout_;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw IoError("cannot open '" + path + "' for writing");
    stream_ = file_.get();
  }
  std::ostream& get() { return *stream_; }
  bool is_stdout() const { return path_ == "-"; }
  void close() {
    stream_->flush();
    if (!*stream_) throw IoError("write to '" + path_ + "' failed");
  }

 private:
  std::string path_;
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string opt(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "-"; }

unsigned resolve_threads(unsigned requested) {
  if (requested) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<CellValue> load_cells(const std::string& path, std::istream& in) {
  if (path.empty()) return {};
  Input src(path, in);
  return read_cell_values(src.get());
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Binary LCD code toolkit", "lcdtool"};
  app.require_subcommand(1);

  std::string code_path;
  auto* analyze = app.add_subcommand("analyze", "Print parameters of a code file");
  analyze->add_option("codefile", code_path, "code file ('-' for stdin)")->required();

  std::size_t n = 0, k = 0, dmin = 1, dual_dmin = 1, nmax = 0;
  unsigned threads = 1;
  std::string out_path, strategy = "augment";
  bool reproducible = false, allow_large = false, show_stats = false;
  auto* classify_cmd = app.add_subcommand("classify", "Classify LCD [n,k,>=d] codes");
  classify_cmd->add_option("--n", n)->required();
  classify_cmd->add_option("--k", k)->required();
  classify_cmd->add_option("--dmin", dmin)->required();
  classify_cmd->add_option("--dual-dmin", dual_dmin);
  classify_cmd->add_option("--threads", threads, "worker threads, 0 = all cores");
  classify_cmd->add_option("--out", out_path, "database file ('-' for stdout)")->required();
  classify_cmd->add_option("--strategy", strategy)->check(CLI::IsMember({"augment", "dedup"}));
  classify_cmd->add_flag("--allow-large", allow_large, "lift the desk-scale guard");
  classify_cmd->add_flag("--reproducible", reproducible, "omit the timestamp comment");
  classify_cmd->add_flag("--stats", show_stats, "print per-level counts");

  auto* dlcd = app.add_subcommand("dlcd", "Exact d_LCD(n,k) by exhaustive search");
  dlcd->add_option("--n", n)->required();
  dlcd->add_option("--k", k)->required();
  dlcd->add_option("--threads", threads);

  std::string seeds_path, ceilings_path;
  auto* table = app.add_subcommand("table", "Interval table of d_LCD(n,k)");
  table->add_option("--nmax", nmax)->required();
  table->add_option("--seeds", seeds_path, "exact values 'n k d'");
  table->add_option("--ceilings", ceilings_path, "upper bounds 'n k d'");
  table->add_option("--out", out_path)->required();

  std::string op, vector_bits;
  std::size_t coord = 0;
  auto* construct = app.add_subcommand("construct", "Apply a construction to a code file");
  construct->add_option("--op", op)
      ->required()
      ->check(CLI::IsMember({"extend-parity", "duplicate-column", "puncture", "shorten"}));
  construct->add_option("--in", code_path, "input code file ('-' for stdin)")->required();
  construct->add_option("--out", out_path)->default_val("-");
  construct->add_option("--coord", coord, "coordinate for puncture/shorten (0-based)");
  construct->add_option("--v", vector_bits, "column vector for duplicate-column, k bits");

  std::string suite;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "Run randomized property suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember(suites));
  verify->add_option("--trials", trials);
  verify->add_option("--seed", seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ERROR usage: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      Input src(code_path, in);
      const LinearCode code = parse_code(src.get());
      if (code.dimension() == 0) throw DegenerateCode("the zero code has no minimum distance");
      const CodeMetrics m = compute_metrics(code);
      out << "n=" << code.length() << " k=" << code.dimension() << " d=" << opt(m.d)
          << " lcd=" << (m.is_lcd() ? "true" : "false") << " ddual=" << opt(m.d_dual)
          << " hull=" << m.hull_dim << " even_like=" << (m.is_even_like ? "true" : "false")
          << " has_all_ones=" << (m.has_all_ones ? "true" : "false") << '\n';
      out << "weight_enumerator=";
      for (std::size_t i = 0; i < m.weight_enumerator.size(); ++i)
        out << (i ? " " : "") << m.weight_enumerator[i];
      out << '\n';
      return kExitOk;
    }
    if (classify_cmd->parsed()) {
      SearchSpec spec{n, k, dmin, dual_dmin, {}};
      ClassifyOptions options;
      options.threads = resolve_threads(threads);
      options.strategy = strategy == "dedup" ? IsomorphRejection::LevelDedup
                                             : IsomorphRejection::CanonicalAugmentation;
      options.allow_large = allow_large;
      ClassifyStats stats;
      const auto records = classify(spec, options, &stats);
      Output sink(out_path, out);
      write_code_db(sink.get(), {n, k, dmin, dual_dmin, reproducible ? "" : utc_now()}, records);
      sink.close();
      std::ostream& msg = sink.is_stdout() ? err : out;
      if (show_stats)
        for (std::size_t m = 0; m < stats.level_counts.size(); ++m)
          msg << "level=" << m + 1 << " codes=" << stats.level_counts[m]
              << " candidates=" << stats.candidates[m] << '\n';
      msg << "count=" << records.size() << '\n';
      return kExitOk;
    }
    if (dlcd->parsed()) {
      ClassifyOptions options;
      options.threads = resolve_threads(threads);
      out << d_lcd_exact(n, k, options) << '\n';
      return kExitOk;
    }
    if (table->parsed()) {
      const auto seeds = load_cells(seeds_path, in);
      const auto ceilings = load_cells(ceilings_path, in);
      const BoundsTable t = build_table(nmax, seeds, ceilings);
      Output sink(out_path, out);
      write_bounds_tsv(sink.get(), t);
      sink.close();
      std::size_t exact = 0;
      for (const auto& c : t.cells()) exact += c.exact();
      (sink.is_stdout() ? err : out) << "cells=" << t.cells().size() << " exact=" << exact << '\n';
      return kExitOk;
    }
    if (construct->parsed()) {
      Input src(code_path, in);
      const LinearCode code = parse_code(src.get());
      LinearCode result = code;
      if (op == "extend-parity") {
        result = extend_parity(code);
      } else if (op == "duplicate-column") {
        if (vector_bits.size() != code.dimension() || vector_bits.find_first_not_of("01") != std::string::npos)
          throw PreconditionError("--v must be a string of k = " + std::to_string(code.dimension()) + " bits");
        std::vector<bool> v;
        for (char c : vector_bits) v.push_back(c == '1');
        result = duplicate_column(code, v);
      } else {
        if (coord >= code.length())
          throw PreconditionError("--coord " + std::to_string(coord) + " out of range for length " +
                                  std::to_string(code.length()));
        result = op == "puncture" ? puncture(code, coord) : shorten(code, coord);
      }
      Output sink(out_path, out);
      write_code(sink.get(), result.generator());
      sink.close();
      return kExitOk;
    }
    if (verify->parsed()) {
      std::vector<std::string> run = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      bool all_ok = true;
      for (const auto& name : run) {
        const SuiteResult r = run_suite(name, trials, seed);
        out << "suite=" << r.name << " trials=" << r.trials << " failures=" << r.failures << ' '
            << (r.passed() ? "PASS" : "FAIL") << '\n';
        if (!r.passed()) {
          all_ok = false;
          if (!r.first_failure.empty()) out << "  first failure: " << r.first_failure << '\n';
        }
      }
      return all_ok ? kExitOk : kExitVerification;
    }
  } catch (const ScaleGuardError& e) {
    err << "ERROR scale-guard: " << e.what() << '\n';
    return kExitScaleGuard;
  } catch (const ParseError& e) {
    err << "ERROR parse: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BoundsContradiction& e) {
    err << "ERROR contradiction: " << e.what() << '\n';
    return kExitVerification;
  } catch (const VerificationError& e) {
    err << "ERROR verification: " << e.what() << '\n';
    return kExitVerification;
  } catch (const DegenerateCode& e) {
    err << "ERROR degenerate: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "ERROR precondition: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "ERROR io: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "ERROR failed: " << e.what() << '\n';
    return kExitUsage;
  }
  err << "ERROR usage: no subcommand\n";
  return kExitUsage;
}

}  // namespace lcd
