#pragma once

#include "carryless/classify.hpp"
#include "carryless/digitnum.hpp"
#include "carryless/factorize.hpp"
#include "carryless/oeis.hpp"
#include "carryless/powers.hpp"
#include "carryless/primes.hpp"
#include "carryless/sequences.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace carryless::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUnavailable = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDomain = 65;

enum class OutputFormat { Plain, BFile };

struct CliConfig {
  std::filesystem::path cache_dir = oeis::default_cache_dir();
  bool offline = false;
  OutputFormat output_format = OutputFormat::Plain;
};

/// Things the process supplies that tests want to replace.
struct Environment {
  std::filesystem::path fixture_dir;
  oeis::RemoteGet remote;
  std::chrono::milliseconds courtesy_delay{1000};
};

namespace detail {

inline void print_list(std::ostream& out, const std::vector<DigitNum>& values, OutputFormat fmt) {
  std::int64_t i = 1;
  for (const auto& v : values) {
    if (fmt == OutputFormat::BFile) out << i++ << ' ';
    out << v << '\n';
  }
}

inline std::string kind_token(PrimeKind k) { return std::string(1, kind_letter(k)); }

inline int report_exit(const oeis::ComparisonReport& r) {
  switch (r.verdict) {
    case oeis::Verdict::Match: return kExitOk;
    case oeis::Verdict::Mismatch: return kExitMismatch;
    case oeis::Verdict::Unavailable: return kExitUnavailable;
  }
  return kExitUnavailable;
}

inline oeis::ComparisonReport verify_one(oeis::Fetcher& fetcher, const std::string& a_number, std::size_t terms,
                                         const std::string& bfile_path) {
  const SequenceSpec& spec = find_sequence(a_number);
  oeis::BFileSeq ref;
  try {
    if (!bfile_path.empty()) {
      ref = oeis::parse_bfile(oeis::read_file_bytes(bfile_path), a_number);
      ref.source = oeis::Source::File;
    } else {
      ref = fetcher.fetch(a_number);
    }
  } catch (const unavailable_error& e) {
    return oeis::unavailable_report(a_number, terms, e.what());
  }
  auto generated = spec.generator(terms);
  auto report = oeis::compare(generated, spec.offset, ref, terms);
  report.note = "[" + oeis::source_token(ref.source) + "]";
  return report;
}

}  // namespace detail

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env = {}) {
  CLI::App app{"Carryless arithmetic mod 10", "carryless"};
  app.require_subcommand(1);

  CliConfig config;
  std::string cache_dir;
  std::string fixture_dir = env.fixture_dir.string();
  std::string format = "plain";
  app.add_option("--cache-dir", cache_dir, "b-file cache directory (default: $CARRYLESS_CACHE_DIR or per-user data dir)");
  app.add_option("--fixtures", fixture_dir, "directory of shipped b-file fixtures");
  app.add_flag("--offline", config.offline, "never contact oeis.org");
  app.add_option("--format", format, "list output format")->check(CLI::IsMember({"plain", "bfile"}));

  auto* calc = app.add_subcommand("calc", "carryless calculator");
  std::string calc_op;
  std::vector<std::string> calc_args;
  calc->add_option("op", calc_op, "add | mul | sub | neg | pow")
      ->required()
      ->check(CLI::IsMember({"add", "mul", "sub", "neg", "pow"}));
  calc->add_option("args", calc_args, "operands")->required();

  auto* classify_cmd = app.add_subcommand("classify", "residue class of a number");
  std::string classify_arg;
  classify_cmd->add_option("n", classify_arg)->required();

  auto* factor_cmd = app.add_subcommand("factor", "factor into carryless primes");
  std::string factor_arg;
  bool factor_machine = false;
  factor_cmd->add_option("n", factor_arg)->required();
  factor_cmd->add_flag("--machine", factor_machine, "one factor per line: value multiplicity kind");

  auto* divisors_cmd = app.add_subcommand("divisors", "divisors or divisor-class representatives");
  std::string divisors_arg;
  divisors_cmd->add_option("n", divisors_arg)->required();

  auto* primes_cmd = app.add_subcommand("primes", "carryless primes with a given number of digits");
  std::size_t primes_digits = 0;
  bool primes_count = false, primes_kind = false;
  primes_cmd->add_option("--digits", primes_digits)->required()->check(CLI::PositiveNumber);
  primes_cmd->add_flag("--count", primes_count, "print only the count");
  primes_cmd->add_flag("--kind", primes_kind, "annotate each prime with e or f");

  auto* squares_cmd = app.add_subcommand("squares", "carryless squares with a given number of digits");
  std::size_t squares_digits = 0;
  bool squares_count = false;
  squares_cmd->add_option("--digits", squares_digits)->required()->check(CLI::PositiveNumber);
  squares_cmd->add_flag("--count", squares_count, "print only the count");

  auto* seq_cmd = app.add_subcommand("seq", "emit a supported sequence in b-file format");
  std::string seq_anum;
  std::size_t seq_terms = 20;
  seq_cmd->add_option("anum", seq_anum)->required();
  seq_cmd->add_option("--terms", seq_terms)->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "compare a generated sequence with its b-file");
  std::string verify_anum, verify_bfile;
  std::size_t verify_terms = 200;
  verify_cmd->add_option("anum", verify_anum)->required();
  verify_cmd->add_option("--terms", verify_terms)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--bfile", verify_bfile, "compare against this file instead of fetching");

  auto* verify_all_cmd = app.add_subcommand("verify-all", "verify every supported sequence");
  std::size_t verify_all_terms = 200;
  verify_all_cmd->add_option("--terms", verify_all_terms)->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (!cache_dir.empty()) config.cache_dir = cache_dir;
  config.output_format = format == "bfile" ? OutputFormat::BFile : OutputFormat::Plain;

  try {
    if (*calc) {
      auto need = [&](std::size_t n) {
        if (calc_args.size() != n) {
          throw usage_error("calc " + calc_op + " takes " + std::to_string(n) + " operand(s)");
        }
      };
      if (calc_op == "neg") {
        need(1);
        out << neg(DigitNum::parse(calc_args[0])) << '\n';
      } else if (calc_op == "pow") {
        need(2);
        const std::string& e = calc_args[1];
        if (e.empty() || e.size() > 9 || !std::all_of(e.begin(), e.end(), [](char c) { return c >= '0' && c <= '9'; })) {
          throw usage_error("exponent must be a nonnegative integer below 10^9");
        }
        out << pow(DigitNum::parse(calc_args[0]), static_cast<unsigned>(std::stoul(e))) << '\n';
      } else {
        need(2);
        DigitNum a = DigitNum::parse(calc_args[0]);
        DigitNum b = DigitNum::parse(calc_args[1]);
        if (calc_op == "add") out << add(a, b) << '\n';
        else if (calc_op == "mul") out << mul(a, b) << '\n';
        else out << sub(a, b) << '\n';
      }
      return kExitOk;
    }

    if (*classify_cmd) {
      out << to_string(classify(DigitNum::parse(classify_arg))) << '\n';
      return kExitOk;
    }

    if (*factor_cmd) {
      DigitNum n = DigitNum::parse(factor_arg);
      Factorization f = factor(n);
      if (!factor_machine) {
        out << render_factorization(n, f) << '\n';
        return kExitOk;
      }
      out << "class " << class_token(f.class_tag) << '\n';
      out << f.unit << " 1 unit\n";
      if (f.special) out << *f.special << " 1 special\n";
      for (const auto& p : f.primes) out << p.prime << ' ' << p.multiplicity << ' ' << detail::kind_token(p.kind) << '\n';
      return kExitOk;
    }

    if (*divisors_cmd) {
      DigitNum n = DigitNum::parse(divisors_arg);
      if (n_member(n)) {
        detail::print_list(out, all_divisors(n), config.output_format);
      } else {
        DivisorClasses dc = divisors(n);
        out << "class_shape " << shape_token(dc.class_shape) << '\n';
        detail::print_list(out, dc.representatives, config.output_format);
      }
      return kExitOk;
    }

    if (*primes_cmd) {
      if (primes_count) {
        out << (primes_digits < 2 ? BigInt(0) : count_primes_with_digits(primes_digits)).str() << '\n';
        return kExitOk;
      }
      std::int64_t i = 1;
      for (const auto& p : primes_with_digits(primes_digits)) {
        if (config.output_format == OutputFormat::BFile) out << i++ << ' ';
        out << p.value;
        if (primes_kind) out << ' ' << detail::kind_token(p.kind);
        out << '\n';
      }
      return kExitOk;
    }

    if (*squares_cmd) {
      if (squares_count) out << count_squares_with_digits(squares_digits).str() << '\n';
      else detail::print_list(out, squares_with_digits(squares_digits), config.output_format);
      return kExitOk;
    }

    if (*seq_cmd) {
      const SequenceSpec& spec = find_sequence(seq_anum);
      out << oeis::render_bfile(spec.offset, spec.generator(seq_terms));
      return kExitOk;
    }

    oeis::Fetcher fetcher({fixture_dir, config.cache_dir, config.offline, env.courtesy_delay}, env.remote);

    if (*verify_cmd) {
      auto report = detail::verify_one(fetcher, verify_anum, verify_terms, verify_bfile);
      out << report.summary() << '\n';
      return detail::report_exit(report);
    }

    if (*verify_all_cmd) {
      bool all_match = true;
      for (const auto& spec : supported_sequences()) {
        auto report = detail::verify_one(fetcher, spec.a_number, verify_all_terms, {});
        all_match = all_match && report.verdict == oeis::Verdict::Match;
        out << report.summary() << '\n';
      }
      return all_match ? kExitOk : kExitMismatch;
    }
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const unavailable_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUnavailable;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace carryless::cli
