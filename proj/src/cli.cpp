#include "mcent/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcent/class_enum.hpp"
#include "mcent/coeff_engine.hpp"
#include "mcent/parallel.hpp"
#include "mcent/partial_perm.hpp"
#include "mcent/polynomials.hpp"
#include "mcent/shape.hpp"
#include "mcent/table_io.hpp"
#include "mcent/verify.hpp"

namespace mcent {

namespace {

using ordered_json = nlohmann::ordered_json;

// Raised for failed assertions so they map to exit code 1.
struct AssertionFailure : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

struct Options
{
  int m = 0;
  int n = -1;
  int max_size = 4;
  int max_n = 7;
  int pad = -1;
  int complete = -1;
  int threads = 0;
  std::uint64_t seed = VerifyConfig{}.seed;
  std::size_t random_pairs = VerifyConfig{}.random_pairs;
  std::string format = "text";
  std::string out_path;
  std::string from_path;
  std::string suite = "all";
  bool project = false;
  bool normalize = false;
  std::vector<std::string> shapes;
};

void guardrail(int m, int n, std::ostream& err)
{
  if (n > 10 || m > 3) {
    BigInt cost = n >= m && m >= 0 ? count_partial_perms(m, n) : BigInt(0);
    err << "warning: m=" << m << ", n=" << n
        << " is beyond desk scale; |P^m_n| = " << cost.str()
        << " partial permutations may be enumerated\n";
  }
}

void write_output(const Options& opt, const std::string& text, std::ostream& out)
{
  if (opt.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out_path, std::ios::binary | std::ios::trunc);
  if (!file)
    throw std::invalid_argument("cannot open '" + opt.out_path + "' for writing");
  file << text;
  if (!file.flush())
    throw std::invalid_argument("failed writing '" + opt.out_path + "'");
}

std::string bound_str(const Rational& q)
{
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  return denominator(q) == 1 ? numerator(q).str()
                             : numerator(q).str() + "/" + denominator(q).str();
}

int cmd_shape(const Options& opt, std::ostream& out, std::ostream& err)
{
  (void)err;
  MarkedCycleShape shape = parse_shape(opt.shapes.empty() ? "" : opt.shapes[0], opt.m);
  if (opt.pad >= 0)
    shape = shape.pad(opt.pad);
  if (opt.complete >= 0)
    shape = shape.complete(opt.complete);

  if (opt.format == "json") {
    ordered_json doc;
    doc["shape"] = shape.str();
    doc["m"] = shape.marked();
    doc["size"] = shape.size();
    doc["m1"] = shape.m1();
    doc["proper"] = shape.is_proper();
    doc["normalized"] = shape.strip_fixed_stars().str();
    out << doc.dump() << "\n";
  } else {
    out << "shape: " << shape.str() << "\n"
        << "size: " << shape.size() << "\n"
        << "m1: " << shape.m1() << "\n"
        << "proper: " << (shape.is_proper() ? "true" : "false") << "\n"
        << "normalized: " << shape.strip_fixed_stars().str() << "\n";
  }
  return kExitOk;
}

int cmd_mult(const Options& opt, std::ostream& out, std::ostream& err)
{
  if (opt.shapes.size() != 2)
    throw std::invalid_argument("mult takes two shapes");
  const auto lambda = parse_shape(opt.shapes[0], opt.m);
  const auto delta = parse_shape(opt.shapes[1], opt.m);
  const int n = opt.n >= 0 ? opt.n : lambda.size() + delta.size();
  if (n < std::max(lambda.size(), delta.size()))
    throw std::invalid_argument("--n must be at least the size of both shapes");
  guardrail(opt.m, n, err);

  const auto expansion = multiply_invariant(lambda, delta, n);
  std::optional<ClassExpansion> projected;
  if (opt.project)
    projected = project_to_centralizer(expansion, n);

  if (opt.format == "json") {
    ordered_json doc;
    doc["m"] = opt.m;
    doc["n"] = n;
    doc["lambda"] = lambda.str();
    doc["delta"] = delta.str();
    doc["A"] = ordered_json::object();
    for (const auto& [rho, k] : expansion.coeffs())
      doc["A"][rho.str()] = k.str();
    if (projected) {
      doc["K"] = ordered_json::object();
      for (const auto& [rho, c] : projected->coeffs())
        doc["K"][rho.str()] = c.str();
    }
    out << doc.dump() << "\n";
    return kExitOk;
  }

  out << "A-expansion (n=" << n << "): " << expansion.str("A") << "\n";
  if (projected) {
    out << "K-expansion (n=" << n << "): " << projected->str("K") << "\n";
    for (const auto& [tau, k] : expansion.coeffs()) {
      const int fixed = tau.m1();
      const int top = n - tau.size() + fixed;
      out << "  " << k.str() << "*A[" << tau.str() << "] -> " << k.str() << "*C(" << top << ","
          << fixed << ") = " << (k * binomial(top, fixed)).str() << " * K[" << tau.complete(n).str()
          << "]\n";
    }
  }
  return kExitOk;
}

int cmd_poly(const Options& opt, std::ostream& out, std::ostream& err)
{
  if (opt.shapes.size() != 3)
    throw std::invalid_argument("poly takes three shapes");
  auto lambda = parse_shape(opt.shapes[0], opt.m);
  auto delta = parse_shape(opt.shapes[1], opt.m);
  auto rho = parse_shape(opt.shapes[2], opt.m);
  if (opt.normalize) {
    lambda = lambda.strip_fixed_stars();
    delta = delta.strip_fixed_stars();
    rho = rho.strip_fixed_stars();
  }
  for (const auto* s : {&lambda, &delta, &rho})
    if (!s->is_proper())
      throw std::invalid_argument(
          "shape " + s->str() +
          " has (*) cycles; the polynomiality theorem is stated for proper shapes only"
          " (pass --normalize to strip them)");
  guardrail(opt.m, lambda.size() + delta.size(), err);

  const auto poly = structure_poly(lambda, delta, rho);
  const auto db = degree_and_bound(lambda, delta, rho, poly);

  if (opt.format == "json") {
    ordered_json doc;
    doc["lambda"] = lambda.str();
    doc["delta"] = delta.str();
    doc["rho"] = rho.str();
    doc["poly"] = ordered_json::parse(poly_to_json(poly));
    doc["monomial"] = poly.to_monomial().str();
    doc["degree"] = db.degree ? ordered_json(*db.degree) : ordered_json(nullptr);
    doc["bound"] = bound_str(db.bound);
    doc["bound_floor"] = db.floor_bound;
    if (opt.n >= 0)
      doc["value"] = poly.eval(opt.n).str();
    out << doc.dump() << "\n";
  } else {
    out << "binomial: " << poly.str() << "\n"
        << "monomial: " << poly.to_monomial().str() << "\n"
        << "factored: " << poly.factored_str() << "\n"
        << "degree: " << (db.degree ? std::to_string(*db.degree) : "none (zero polynomial)")
        << "\n"
        << "bound: " << bound_str(db.bound);
    if (db.bound != db.floor_bound)
      out << " (integer bound " << db.floor_bound << ")";
    out << "\n";
    if (opt.n >= 0)
      out << "value at n=" << opt.n << ": " << poly.eval(opt.n).str() << "\n";
  }
  if (!db.holds())
    throw AssertionFailure("degree exceeds (|lambda|+|delta|-|rho|)/2");
  return kExitOk;
}

int cmd_table(const Options& opt, std::ostream& out, std::ostream& err)
{
  CoefficientTable table;
  if (!opt.from_path.empty()) {
    std::ifstream file(opt.from_path, std::ios::binary);
    if (!file)
      throw std::invalid_argument("cannot read '" + opt.from_path + "'");
    std::stringstream buf;
    buf << file.rdbuf();
    table = table_from_json(buf.str());
  } else {
    if (opt.max_size < opt.m)
      throw std::invalid_argument("--max-size must be at least --m");
    guardrail(opt.m, 2 * opt.max_size, err);
    table = build_table(opt.m, opt.max_size, resolve_threads(opt.threads));
  }

  if (opt.format == "csv")
    write_output(opt, table_to_csv(table), out);
  else if (opt.format == "json")
    write_output(opt, table_to_json(table), out);
  else {
    std::string text;
    for (const auto& e : table.entries)
      text += "k[" + e.lambda.str() + " ; " + e.delta.str() + " -> " + e.rho.str() +
              "] = " + e.k.str() + "\n";
    write_output(opt, text, out);
  }
  if (!opt.out_path.empty())
    err << "wrote " << table.entries.size() << " entries to " << opt.out_path << "\n";
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err)
{
  guardrail(opt.m, opt.max_n, err);
  VerifyConfig cfg;
  cfg.m = opt.m;
  cfg.max_size = opt.max_size;
  cfg.max_n = opt.max_n;
  cfg.seed = opt.seed;
  cfg.threads = resolve_threads(opt.threads);
  cfg.random_pairs = opt.random_pairs;
  const auto reports = run_suite(opt.suite, cfg, &out);
  bool ok = true;
  for (const auto& r : reports)
    ok = ok && r.passed();
  out << (ok ? "all checks passed" : "verification FAILED") << "\n";
  return ok ? kExitOk : kExitFailure;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Partial-permutation algebras and m-centraliser structure coefficients", "mcent"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--m", opt.m, "number of marked points")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto* shape = app.add_subcommand("shape", "canonicalize a shape and print its metrics");
  add_common(shape);
  shape->add_option("shape", opt.shapes, "shape text, e.g. \"(1,*,3)(2)\"");
  shape->add_option("--pad", opt.pad, "append k (*) cycles")->check(CLI::NonNegativeNumber);
  shape->add_option("--complete", opt.complete, "pad up to size n")->check(CLI::NonNegativeNumber);

  auto* mult = app.add_subcommand("mult", "expand A_lambda(n) A_delta(n)");
  add_common(mult);
  mult->add_option("shapes", opt.shapes, "lambda delta")->expected(2);
  mult->add_option("--n", opt.n, "ambient size (default |lambda|+|delta|)");
  mult->add_flag("--project", opt.project, "also print the psi image in the K basis");

  auto* poly = app.add_subcommand("poly", "structure polynomial c(n) for proper shapes");
  add_common(poly);
  poly->add_option("shapes", opt.shapes, "lambda delta rho")->expected(3);
  poly->add_flag("--normalize", opt.normalize, "strip (*) cycles before computing");
  poly->add_option("--n", opt.n, "also evaluate at this n");

  auto* table = app.add_subcommand("table", "universal coefficient table");
  add_common(table);
  table->add_option("--max-size", opt.max_size, "largest |lambda|, |delta|");
  table->add_option("--out", opt.out_path, "output file (default stdout)");
  table->add_option("--from", opt.from_path, "re-serialize an existing JSON table");
  table->add_option("--threads", opt.threads, "worker threads");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--m", opt.m, "largest m swept")->check(CLI::NonNegativeNumber);
  verify->add_option("--suite", opt.suite, "suite name or all");
  verify->add_option("--max-size", opt.max_size, "largest shape size");
  verify->add_option("--max-n", opt.max_n, "largest ambient n");
  verify->add_option("--seed", opt.seed, "random seed");
  verify->add_option("--random-pairs", opt.random_pairs, "random deg2 pairs");
  verify->add_option("--threads", opt.threads, "worker threads");

  // JSON is the table default; other subcommands default to text.
  table->preparse_callback([&](std::size_t) { opt.format = "json"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*shape)
      return cmd_shape(opt, out, err);
    if (*mult)
      return cmd_mult(opt, out, err);
    if (*poly)
      return cmd_poly(opt, out, err);
    if (*table)
      return cmd_table(opt, out, err);
    if (*verify)
      return cmd_verify(opt, out, err);
  } catch (const AssertionFailure& e) {
    err << "assertion failed: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::logic_error& e) {
    // std::invalid_argument and std::domain_error derive from logic_error.
    if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::domain_error*>(&e)) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    err << "internal check failed: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

} // namespace mcent
