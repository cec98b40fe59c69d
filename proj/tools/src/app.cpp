#include "dedekind_cli/app.hpp"

#include <iomanip>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <dedekind/dedekind_sum.hpp>
#include <dedekind/equivalence.hpp>
#include <dedekind/errors.hpp>
#include <dedekind/exact_arith.hpp>
#include <dedekind/serialize.hpp>

#include "dedekind_cli/bench.hpp"
#include "dedekind_cli/reference_table.hpp"
#include "dedekind_cli/selftest.hpp"

namespace dedekind::cli {
namespace {

using nlohmann::json;

enum class Format { Human, Json, Tsv };

struct Options {
  std::string format = "human";
  std::string method = "bhk";
  unsigned jobs = 1;
  std::vector<std::string> integers;
  std::vector<std::string> bench_moduli;
  std::string bench_m = "2";
  std::size_t bench_reps = 3;
  std::string naive_cap = "10000000";
};

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "tsv") return Format::Tsv;
  return Format::Human;
}

std::vector<BigInt> parse_all(const std::vector<std::string>& texts) {
  std::vector<BigInt> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_bigint(t));
  return out;
}

std::string join(const std::vector<BigInt>& values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += to_string(values[i]);
  }
  return out;
}

void print_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

void print_evaluation_human(std::ostream& out, const DedekindEvaluation& e) {
  out << "S(" << to_string(e.m) << "/" << to_string(e.n) << ") = " << e.value.to_display_string()
      << '\n'
      << "fractional residue: " << to_string(e.fractional_residue) << " (mod " << to_string(e.n)
      << ")\n"
      << "method: " << to_string(e.method) << '\n';
}

int cmd_sum(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto args = parse_all(opt.integers);
  const BigInt &m = args[0], &n = args[1];
  const Format format = parse_format(opt.format);

  std::vector<DedekindEvaluation> evals;
  if (opt.method == "naive" || opt.method == "both") evals.push_back(dedekind_sum_naive(m, n));
  if (opt.method == "bhk" || opt.method == "both") evals.push_back(dedekind_sum_bhk(m, n));

  switch (format) {
    case Format::Human:
      for (std::size_t i = 0; i < evals.size(); ++i) {
        if (i) out << '\n';
        print_evaluation_human(out, evals[i]);
      }
      break;
    case Format::Json:
      if (evals.size() == 1) {
        print_json(out, to_json(evals.front()));
      } else {
        json doc = json::array();
        for (const auto& e : evals) doc.push_back(to_json(e));
        print_json(out, doc);
      }
      break;
    case Format::Tsv:
      out << "m\tn\tvalue\tresidue\tmethod\n";
      for (const auto& e : evals)
        out << to_string(e.m) << '\t' << to_string(e.n) << '\t' << e.value.to_string() << '\t'
            << to_string(e.fractional_residue) << '\t' << to_string(e.method) << '\n';
      break;
  }

  if (evals.size() == 2) {
    if (evals[0].value != evals[1].value) {
      err << "error: naive value " << evals[0].value << " differs from bhk value "
          << evals[1].value << '\n';
      return kVerificationFailed;
    }
    if (format == Format::Human) out << "\nnaive and bhk agree\n";
  }
  return kSuccess;
}

int cmd_frac(const Options& opt, std::ostream& out) {
  const auto args = parse_all(opt.integers);
  const BigInt m = reduce_unit(args[0], args[1]);
  const BigInt& n = args[1];
  const BigInt inverse = mod_inverse(m, n);
  const BigInt residue = fractional_residue(m, n);
  const Rational fraction(residue, n);

  switch (parse_format(opt.format)) {
    case Format::Human:
      out << "S(" << to_string(m) << "/" << to_string(n) << ") = " << fraction.to_display_string()
          << " (mod 1)\n"
          << "m* = " << to_string(inverse) << ", residue (m + m*) mod n = " << to_string(residue)
          << '\n';
      break;
    case Format::Json:
      print_json(out, json{{"m", bigint_to_json(m)},
                           {"n", bigint_to_json(n)},
                           {"inverse", bigint_to_json(inverse)},
                           {"residue", bigint_to_json(residue)},
                           {"fraction", fraction.to_string()}});
      break;
    case Format::Tsv:
      out << "m\tn\tinverse\tresidue\tfraction\n"
          << to_string(m) << '\t' << to_string(n) << '\t' << to_string(inverse) << '\t'
          << to_string(residue) << '\t' << fraction.to_string() << '\n';
      break;
  }
  return kSuccess;
}

int cmd_equal(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto args = parse_all(opt.integers);
  const BigInt &m1 = args[0], &m2 = args[1], &n = args[2];

  const bool condition = congruence_condition(m1, m2, n);
  const bool residues = same_fractional_part(m1, m2, n);
  const Method method = opt.method == "naive" ? Method::Naive : Method::Bhk;
  const Rational difference = dedekind_sum(m1, n, method).value - dedekind_sum(m2, n, method).value;
  if (opt.method == "both") {
    const Rational other = dedekind_sum_naive(m1, n).value - dedekind_sum_naive(m2, n).value;
    if (other != difference) {
      err << "error: naive and bhk differences disagree\n";
      return kVerificationFailed;
    }
  }
  const bool integral = difference.is_integer();

  switch (parse_format(opt.format)) {
    case Format::Human:
      out << "(m1 m2 - 1)(m1 - m2) = 0 mod n: " << std::boolalpha << condition << '\n'
          << "m1 + m1* = m2 + m2* mod n:      " << residues << '\n'
          << "S(m1/n) - S(m2/n) = " << difference.to_display_string() << " (integer: " << integral
          << ")\n";
      break;
    case Format::Json:
      print_json(out, json{{"m1", bigint_to_json(floor_mod(m1, n))},
                           {"m2", bigint_to_json(floor_mod(m2, n))},
                           {"n", bigint_to_json(n)},
                           {"condition", condition},
                           {"same_fractional_part", residues},
                           {"difference", difference.to_string()},
                           {"difference_is_integer", integral}});
      break;
    case Format::Tsv:
      out << "m1\tm2\tn\tcondition\tsame_fractional_part\tdifference\n"
          << to_string(floor_mod(m1, n)) << '\t' << to_string(floor_mod(m2, n)) << '\t'
          << to_string(n) << '\t' << std::boolalpha << condition << '\t' << residues << '\t'
          << difference.to_string() << '\n';
      break;
  }

  if (condition != residues || residues != integral) {
    err << "error: the three equivalence tests disagree\n";
    return kVerificationFailed;
  }
  return kSuccess;
}

// Square-free factorization, or nothing with a warning for other moduli.
std::optional<SquarefreeFactorization> try_factor(const BigInt& n, std::ostream& err) {
  try {
    return factor_squarefree(n);
  } catch (const NotSquarefree& e) {
    err << "warning: " << e.what() << "; not square-free, falling back to a linear scan\n";
    return std::nullopt;
  }
}

void print_report_human(std::ostream& out, const EquivalenceReport& r) {
  out << "n = " << to_string(r.n) << ", m1 = " << to_string(r.m1) << '\n'
      << "S(m2/" << to_string(r.n) << ") = " << r.base_fraction.to_display_string()
      << " + offset\n";
  for (const auto& g : r.groups)
    out << "  " << std::setw(8) << to_string(g.offset) << ": " << join(g.members, " ") << '\n';
  out << "count = " << r.count;
  if (r.s_exponent) out << " = 2^" << *r.s_exponent;
  out << '\n' << "members: " << join(r.members(), " ") << '\n';
  if (r.self_member) out << "m1 = " << to_string(r.m1) << " belongs to its own class\n";
}

int cmd_enumerate(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto args = parse_all(opt.integers);
  reduce_unit(args[0], args[1]);
  try_factor(args[1], err);
  const EquivalenceReport report = build_report(args[0], args[1], opt.jobs);

  switch (parse_format(opt.format)) {
    case Format::Human:
      print_report_human(out, report);
      break;
    case Format::Json:
      print_json(out, to_json(report));
      break;
    case Format::Tsv: {
      std::vector<std::pair<BigInt, BigInt>> rows;
      for (const auto& g : report.groups)
        for (const auto& m : g.members) rows.emplace_back(m, g.offset);
      std::sort(rows.begin(), rows.end());
      out << "member\toffset\n";
      for (const auto& [m, offset] : rows) out << to_string(m) << '\t' << to_string(offset) << '\n';
      break;
    }
  }
  return kSuccess;
}

int cmd_count(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto args = parse_all(opt.integers);
  const BigInt m1 = reduce_unit(args[0], args[1]);
  const BigInt& n = args[1];

  std::optional<unsigned> s;
  std::uint64_t count = 0;
  if (const auto fact = try_factor(n, err)) {
    const ClassCount law = count_class(m1, *fact);
    const auto members = enumerate_crt(m1, *fact);
    if (members.size() != law.count) {
      err << "error: CRT enumeration found " << members.size() << " members, expected "
          << law.count << '\n';
      return kVerificationFailed;
    }
    count = law.count;
    s = law.s_exponent;
  } else {
    count = enumerate_bruteforce(m1, n, opt.jobs).size();
  }

  switch (parse_format(opt.format)) {
    case Format::Human:
      out << "count=" << count;
      if (s) out << " s=" << *s;
      out << '\n';
      break;
    case Format::Json: {
      json doc{{"n", bigint_to_json(n)}, {"m1", bigint_to_json(m1)}, {"count", count}};
      if (s) doc["s"] = *s;
      print_json(out, doc);
      break;
    }
    case Format::Tsv:
      out << "n\tm1\tcount\ts\n"
          << to_string(n) << '\t' << to_string(m1) << '\t' << count << '\t'
          << (s ? std::to_string(*s) : "") << '\n';
      break;
  }
  return kSuccess;
}

int cmd_classify(const Options& opt, std::ostream& out) {
  const BigInt n = parse_bigint(opt.integers.at(0));
  const auto classes = classify_all(n, opt.jobs);

  switch (parse_format(opt.format)) {
    case Format::Human:
      for (const auto& c : classes)
        out << "residue " << to_string(c.residue) << " (" << Rational(c.residue, n).to_display_string()
            << "), " << c.members.size() << " members: " << join(c.members, " ") << '\n';
      out << classes.size() << " classes\n";
      break;
    case Format::Json:
      print_json(out, to_json(classes, n));
      break;
    case Format::Tsv:
      out << "residue\tfraction\tsize\tmembers\n";
      for (const auto& c : classes)
        out << to_string(c.residue) << '\t' << Rational(c.residue, n).to_string() << '\t'
            << c.members.size() << '\t' << join(c.members, ",") << '\n';
      break;
  }
  return kSuccess;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  const ReferenceTable& table = published_table();
  const EquivalenceReport report = build_report(table.m1, table.n, opt.jobs);
  const auto diff = diff_against(report, table);
  std::size_t expected = 0;
  for (const auto& g : table.groups) expected += g.members.size();

  if (parse_format(opt.format) == Format::Json) {
    print_json(out, json{{"pass", diff.empty()}, {"diff", diff}, {"report", to_json(report)}});
  } else if (diff.empty()) {
    out << "PASS: " << report.count << "/" << expected << " members matched, base "
        << report.base_fraction << ", s = " << table.s_exponent << '\n';
  } else {
    out << "FAIL\n";
    for (const auto& line : diff) out << "  " << line << '\n';
  }
  if (!diff.empty()) {
    err << "error: computed class of " << to_string(table.m1) << " mod " << to_string(table.n)
        << " differs from the published table\n";
    return kVerificationFailed;
  }
  return kSuccess;
}

int cmd_bench(const Options& opt, std::ostream& out, std::ostream& err) {
  std::vector<std::string> texts = opt.bench_moduli;
  if (texts.empty()) texts = {"1", "10007", "100003", "1000000000000037", "999999999999999989"};
  const auto rows = run_bench(parse_all(texts), parse_bigint(opt.bench_m), opt.bench_reps,
                              parse_bigint(opt.naive_cap));

  bool ok = true;
  for (const auto& r : rows) ok = ok && r.fraction_ok && r.agree.value_or(true);

  auto fmt_us = [](const std::optional<double>& us) {
    if (!us) return std::string("skipped");
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << *us;
    return os.str();
  };

  switch (parse_format(opt.format)) {
    case Format::Human:
      out << std::left << std::setw(20) << "n" << std::setw(8) << "m" << std::right << std::setw(14)
          << "naive_us" << std::setw(12) << "bhk_us" << std::setw(8) << "agree" << std::setw(10)
          << "frac_ok" << '\n';
      for (const auto& r : rows)
        out << std::left << std::setw(20) << to_string(r.n) << std::setw(8) << to_string(r.m)
            << std::right << std::setw(14) << fmt_us(r.naive_us) << std::setw(12)
            << fmt_us(r.bhk_us) << std::setw(8)
            << (r.agree ? (*r.agree ? "yes" : "NO") : "-") << std::setw(10)
            << (r.fraction_ok ? "yes" : "NO") << '\n';
      break;
    case Format::Json: {
      json doc = json::array();
      for (const auto& r : rows) {
        json row{{"n", bigint_to_json(r.n)},
                 {"m", bigint_to_json(r.m)},
                 {"bhk_us", r.bhk_us},
                 {"value", r.value.to_string()},
                 {"fraction_ok", r.fraction_ok}};
        row["naive_us"] = r.naive_us ? json(*r.naive_us) : json(nullptr);
        row["agree"] = r.agree ? json(*r.agree) : json(nullptr);
        doc.push_back(std::move(row));
      }
      print_json(out, doc);
      break;
    }
    case Format::Tsv:
      out << "n\tm\tnaive_us\tbhk_us\tagree\tfraction_ok\n";
      for (const auto& r : rows)
        out << to_string(r.n) << '\t' << to_string(r.m) << '\t' << fmt_us(r.naive_us) << '\t'
            << fmt_us(r.bhk_us) << '\t' << (r.agree ? (*r.agree ? "true" : "false") : "") << '\t'
            << (r.fraction_ok ? "true" : "false") << '\n';
      break;
  }
  if (!ok) {
    err << "error: evaluator disagreement in benchmark\n";
    return kVerificationFailed;
  }
  return kSuccess;
}

int cmd_selftest(const Options& opt, std::ostream& out) {
  const auto results = run_selftest();
  bool ok = true;
  if (parse_format(opt.format) == Format::Json) {
    json doc = json::array();
    for (const auto& r : results)
      doc.push_back(json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    print_json(out, doc);
    for (const auto& r : results) ok = ok && r.passed;
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
      if (!r.passed) out << ": " << r.detail;
      out << '\n';
      ok = ok && r.passed;
    }
  }
  return ok ? kSuccess : kVerificationFailed;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Dedekind sums and their fractional-part classes", "dedekind"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"human", "json", "tsv"}))
      ->capture_default_str()
      ->option_text("{human|json|tsv}");
  app.add_option("--jobs", opt.jobs, "Worker threads for linear scans")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();

  auto add_method = [&opt](CLI::App* sub) {
    sub->add_option("--method", opt.method, "Evaluator")
        ->check(CLI::IsMember({"naive", "bhk", "both"}))
        ->capture_default_str();
  };
  auto add_integers = [&opt](CLI::App* sub, const std::string& names, std::size_t count) {
    sub->add_option(names, opt.integers, "Integer arguments")->required()->expected(static_cast<int>(count));
  };

  std::vector<std::pair<CLI::App*, std::function<int()>>> commands;

  auto* sum = app.add_subcommand("sum", "Evaluate S(m/n) = 12 s(m/n) exactly");
  add_integers(sum, "m_n", 2);
  add_method(sum);
  commands.emplace_back(sum, [&] { return cmd_sum(opt, out, err); });

  auto* frac = app.add_subcommand("frac", "Fractional part of S(m/n) from (m + m*) mod n");
  add_integers(frac, "m_n", 2);
  commands.emplace_back(frac, [&] { return cmd_frac(opt, out); });

  auto* equal = app.add_subcommand("equal", "Decide whether S(m1/n) - S(m2/n) is an integer");
  add_integers(equal, "m1_m2_n", 3);
  add_method(equal);
  commands.emplace_back(equal, [&] { return cmd_equal(opt, out, err); });

  auto* enumerate = app.add_subcommand("enumerate", "List the class of m1 grouped by integer offset");
  add_integers(enumerate, "m1_n", 2);
  commands.emplace_back(enumerate, [&] { return cmd_enumerate(opt, out, err); });

  auto* count = app.add_subcommand("count", "Size of the class of m1 (2^s for square-free n)");
  add_integers(count, "m1_n", 2);
  commands.emplace_back(count, [&] { return cmd_count(opt, out, err); });

  auto* classify = app.add_subcommand("classify", "Partition all units mod n by fractional part");
  add_integers(classify, "n", 1);
  commands.emplace_back(classify, [&] { return cmd_classify(opt, out); });

  auto* verify = app.add_subcommand("verify-paper-example",
                                    "Recompute the class of 17 mod 15015 and diff it against the published table");
  commands.emplace_back(verify, [&] { return cmd_verify(opt, out, err); });

  auto* bench = app.add_subcommand("bench", "Time the definitional and continued-fraction evaluators");
  bench->add_option("--n", opt.bench_moduli, "Modulus (repeatable)");
  bench->add_option("--m", opt.bench_m, "Numerator")->capture_default_str();
  bench->add_option("--reps", opt.bench_reps, "Repetitions per cell")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--naive-cap", opt.naive_cap, "Largest n evaluated by the definitional sum")
      ->capture_default_str();
  commands.emplace_back(bench, [&] { return cmd_bench(opt, out, err); });

  auto* selftest = app.add_subcommand("selftest", "Run property checks at reduced bounds");
  commands.emplace_back(selftest, [&] { return cmd_selftest(opt, out); });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    for (const auto& [sub, run] : commands)
      if (sub->parsed()) return run();
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsageError;
}

}  // namespace dedekind::cli
