#include "sylvester/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "sylvester/numtheory.hpp"
#include "sylvester/oracle.hpp"
#include "sylvester/quasipolynomial.hpp"
#include "sylvester/summands.hpp"
#include "sylvester/waves.hpp"

namespace sylvester::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Options {
  std::string summands;
  std::string s = "0";
  std::string max_s = "0";
  std::string format = "text";
  std::string route = "bernoulli";
  int repeat = 5;
  std::size_t dp_budget = 1'000'000;
};

BigInt parse_nonnegative(const std::string& text, const char* flag) {
  BigInt v = parse_bigint(text);
  if (v < 0) throw std::invalid_argument(std::string(flag) + " must be nonnegative");
  return v;
}

std::size_t to_size(const BigInt& v, const char* flag) {
  if (!v.fits_ulong_p()) throw std::invalid_argument(std::string(flag) + " is too large");
  return v.get_ui();
}

AssembleOptions assemble_options(const Options& o) {
  return {o.route == "eulerian" ? WaveRoute::kEulerian : WaveRoute::kBernoulli, true};
}

std::string integer_value(const Rational& r) {
  if (!r.is_integer()) throw std::logic_error("closed form produced non-integer " + r.to_string());
  return r.to_string();
}

double millis(Clock::duration d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

void print_quasi_text(std::ostream& out, const Quasipolynomial& q) {
  for (std::int64_t r = 0; r < q.period(); ++r) {
    out << "  s = " << r << " mod " << q.period() << ": " << to_string(q.at_residue(r)) << "\n";
  }
}

int cmd_count(const Options& o, std::ostream& out) {
  const SummandSet d = SummandSet::parse(o.summands);
  const BigInt s = parse_nonnegative(o.s, "--s");
  const std::string value = integer_value(assemble(d, assemble_options(o)).evaluate(s));
  if (o.format == "json") {
    out << json{{"summands", std::vector<std::int64_t>(d.elements().begin(), d.elements().end())},
                {"s", s.get_str()},
                {"count", value}}
               .dump()
        << "\n";
  } else {
    out << value << "\n";
  }
  return kOk;
}

int cmd_waves(const Options& o, std::ostream& out) {
  const SummandSet d = SummandSet::parse(o.summands);
  const auto waves = all_waves(d, assemble_options(o));
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& [j, wave] : waves) arr.push_back(wave.to_json(d));
    out << arr.dump(2) << "\n";
    return kOk;
  }
  for (const auto& [j, wave] : waves) {
    out << "W_" << j << " (weight " << WaveIndex::make(j, d).weight() << ")\n";
    print_quasi_text(out, wave);
  }
  return kOk;
}

int cmd_quasi(const Options& o, std::ostream& out) {
  const SummandSet d = SummandSet::parse(o.summands);
  const Quasipolynomial q = assemble(d, assemble_options(o));
  if (o.format == "json") {
    out << q.to_json(d).dump(2) << "\n";
  } else {
    out << "W(s; " << d.to_string() << "), period " << q.period() << "\n";
    print_quasi_text(out, q);
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, const Hooks& hooks) {
  const SummandSet d = SummandSet::parse(o.summands);
  const std::size_t max_s = to_size(parse_nonnegative(o.max_s, "--max-s"), "--max-s");
  Quasipolynomial q = assemble(d, assemble_options(o));
  if (hooks.corrupt_coefficient) {
    const auto& [residue, delta] = *hooks.corrupt_coefficient;
    q.mutable_residue(residue) += Polynomial<Rational>::constant(delta, 's');
  }
  const CountTable table = dp_count(d, max_s);

  std::optional<std::size_t> bad;
  Rational closed;
  for (std::size_t s = 0; s <= max_s; ++s) {
    closed = q.evaluate(BigInt(static_cast<unsigned long>(s)));
    if (!(closed == Rational(table.counts[s]))) {
      bad = s;
      break;
    }
  }

  if (o.format == "json") {
    json j{{"summands", std::vector<std::int64_t>(d.elements().begin(), d.elements().end())},
           {"max_s", std::to_string(max_s)},
           {"pass", !bad.has_value()},
           {"first_mismatch", nullptr}};
    if (bad) {
      j["first_mismatch"] = {{"s", std::to_string(*bad)},
                             {"closed_form", closed.to_string()},
                             {"dp", table.counts[*bad].get_str()}};
    }
    out << j.dump() << "\n";
  } else if (bad) {
    out << "MISMATCH " << d.to_string() << " at s=" << *bad << ": closed form " << closed
        << ", dp " << table.counts[*bad].get_str() << "\n";
  } else {
    out << "PASS " << d.to_string() << " for s=0.." << max_s << "\n";
  }
  return bad ? kMismatch : kOk;
}

template <class F>
double average_millis(int repeat, F&& f) {
  const auto start = Clock::now();
  for (int i = 0; i < repeat; ++i) f();
  return millis(Clock::now() - start) / repeat;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const SummandSet d = SummandSet::parse(o.summands);
  const BigInt s = parse_nonnegative(o.s, "--s");
  if (o.repeat < 1) throw std::invalid_argument("--repeat must be at least 1");

  auto start = Clock::now();
  const Quasipolynomial q = assemble(d, assemble_options(o));
  const double assembly_ms = millis(Clock::now() - start);

  Rational value;
  const double closed_ms = average_millis(o.repeat, [&] { value = q.evaluate(s); });
  std::optional<double> dp_ms;
  if (s <= BigInt(static_cast<unsigned long>(o.dp_budget))) {
    const auto n = s.get_ui();
    dp_ms = average_millis(o.repeat, [&] { (void)dp_count(d, n); });
  }

  // Crossover scan on a doubling grid up to the DP budget.
  json grid = json::array();
  std::optional<std::size_t> crossover;
  for (std::size_t t = 1; t <= o.dp_budget; t *= 2) {
    const BigInt bt(static_cast<unsigned long>(t));
    const double c = average_millis(o.repeat, [&] { (void)q.evaluate(bt); });
    const double p = average_millis(o.repeat, [&] { (void)dp_count(d, t); });
    grid.push_back({{"s", std::to_string(t)}, {"closed_form_ms", c}, {"dp_ms", p}});
    if (!crossover && c < p) crossover = t;
  }

  if (o.format == "json") {
    json j{{"summands", std::vector<std::int64_t>(d.elements().begin(), d.elements().end())},
           {"s", s.get_str()},
           {"value", integer_value(value)},
           {"repeat", o.repeat},
           {"assembly_ms", assembly_ms},
           {"closed_form_ms", closed_ms},
           {"dp_ms", dp_ms ? json(*dp_ms) : json(nullptr)},
           {"dp_budget", o.dp_budget},
           {"crossover_s", crossover ? json(std::to_string(*crossover)) : json(nullptr)},
           {"grid", grid}};
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << std::fixed << std::setprecision(4);
  out << "summands      " << d.to_string() << "\n";
  out << "s             " << s.get_str() << "\n";
  out << "W(s)          " << integer_value(value) << "\n";
  out << "assembly      " << assembly_ms << " ms (one time)\n";
  out << "closed form   " << closed_ms << " ms per evaluation\n";
  if (dp_ms) {
    out << "dp            " << *dp_ms << " ms per table\n";
  } else {
    out << "dp            skipped (s exceeds budget " << o.dp_budget << ")\n";
  }
  out << "crossover     ";
  if (crossover) {
    out << "closed form faster from s=" << *crossover << " on the doubling grid\n";
  } else {
    out << "none up to s=" << o.dp_budget << "\n";
  }
  out << std::setw(12) << "s" << std::setw(16) << "closed_ms" << std::setw(16) << "dp_ms" << "\n";
  for (const auto& row : grid) {
    out << std::setw(12) << row["s"].get<std::string>() << std::setw(16)
        << row["closed_form_ms"].get<double>() << std::setw(16) << row["dp_ms"].get<double>()
        << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Hooks& hooks) {
  CLI::App app{"Restricted partition counts through Sylvester waves", "sylvester"};
  app.require_subcommand(1);
  Options o;

  const auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--summands", o.summands, "comma-separated positive integers, e.g. 1,2,3")
        ->required();
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--route", o.route, "wave formula used for assembly")
        ->check(CLI::IsMember({"bernoulli", "eulerian"}));
  };

  auto* count = app.add_subcommand("count", "print W(s) for one s");
  add_common(count);
  count->add_option("--s", o.s, "nonnegative integer of any size")->required();

  auto* waves = app.add_subcommand("waves", "print every Sylvester wave per residue class");
  add_common(waves);

  auto* quasi = app.add_subcommand("quasi", "print the assembled quasipolynomial");
  add_common(quasi);

  auto* verify = app.add_subcommand("verify", "compare the closed form with DP for s = 0..max-s");
  add_common(verify);
  verify->add_option("--max-s", o.max_s, "largest s checked")->required();

  auto* bench = app.add_subcommand("bench", "time closed-form evaluation against DP");
  add_common(bench);
  bench->add_option("--s", o.s, "query point")->required();
  bench->add_option("--repeat", o.repeat, "repetitions per timing");
  bench->add_option("--dp-budget", o.dp_budget, "largest s the DP is run for");

  try {
    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (count->parsed()) return cmd_count(o, out);
    if (waves->parsed()) return cmd_waves(o, out);
    if (quasi->parsed()) return cmd_quasi(o, out);
    if (verify->parsed()) return cmd_verify(o, out, hooks);
    if (bench->parsed()) return cmd_bench(o, out);
  } catch (const std::logic_error& e) {
    // invalid_argument and domain_error are user errors; other logic_errors are bugs.
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::domain_error*>(&e)) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace sylvester::cli
