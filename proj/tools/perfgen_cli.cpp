#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "perfgen/families.hpp"
#include "perfgen/groebner.hpp"
#include "perfgen/harness.hpp"
#include "perfgen/order.hpp"
#include "perfgen/poly_io.hpp"
#include "perfgen/stdbasis.hpp"

using namespace perfgen;

namespace {

int selftest() {
  int failed = 0;
  auto check = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << '\n';
    if (!ok) ++failed;
  };

  const auto ord = OrderSpec::block_sum(3, 3);
  const Monomial a(3, {0, 0, 4}), b(3, {3, 2, 0});
  check("leading term of x3^4 + x1^3*x2^2 is x3^4", ord.less(a, b));

  const PrimeField field;
  const std::vector<Polynomial> m2 = maximal_ideal_power(2, field, 2);
  check("mu(m^2) = 3 in two variables", mu_stabilized(m2).mu == 3);

  const auto rep = verify_example(3, field);
  check("example N=3: height 3", rep.height_ok());
  check("example N=3: mu = mu mod m^3 = 7", rep.mu_ok() && rep.mu_mod_3_ok());
  check("example N=3: y0..y3 regular", rep.regular_sequence_ok());
  check("example N=3: initial-form height 1", rep.phi_height_ok());

  const auto f = parse_poly("x1^3", 2, field);
  const std::vector<Polynomial> basis{parse_poly("x1^2 + x2^5", 2, field)};
  const auto div = hironaka_divide(f, basis, OrderSpec::pure_lex(2), 8);
  check("division x1^3 by x1^2 + x2^5", div.remainder == parse_poly("-x1*x2^5", 2, field));
  return failed == 0 ? 0 : 1;
}

IdealFile load_ideal(const std::string& path) { return read_ideal_file(path); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"perfgen: minimal generators of perfect ideals over F_p"};
  app.require_subcommand(1);

  auto* self = app.add_subcommand("selftest", "Run a short internal consistency check");

  BatchConfig batch;
  std::string family = "pfaffian";
  std::string out_path;
  std::string config_path;
  std::optional<std::uint32_t> prime;
  std::optional<int> workers;
  auto* eval = app.add_subcommand("eval", "Generate instances and evaluate the bounds");
  eval->add_option("--family", family, "hilbert-burch, pfaffian, m-primary, complete-intersection, example, "
                                        "example-g4, user")->capture_default_str();
  eval->add_option("--t", batch.t, "Hilbert-Burch matrix columns")->capture_default_str();
  eval->add_option("--deg", batch.deg, "Entry degree")->capture_default_str();
  eval->add_option("--k", batch.k, "Pfaffian matrix size is 2k+1")->capture_default_str();
  eval->add_option("--g", batch.g, "Complete intersection length")->capture_default_str();
  eval->add_option("--n", batch.n, "Truncation degree n; 0 picks ord(J)+1")->capture_default_str();
  eval->add_option("--gens", batch.gens, "m-primary generator count; 0 picks d+1")->capture_default_str();
  eval->add_option("--N", batch.N, "First example parameter")->capture_default_str();
  eval->add_option("--d", batch.d, "Number of variables")->capture_default_str();
  eval->add_option("--count", batch.count, "Number of instances")->capture_default_str();
  eval->add_option("--seed", batch.seed, "Master seed")->capture_default_str();
  eval->add_option("--ideal", batch.ideal_path, "Ideal file for the user family");
  eval->add_option("--p", prime, "Prime modulus");
  eval->add_option("--workers", workers, "Worker threads");
  eval->add_option("--out", out_path, "Append records here instead of stdout");
  eval->add_option("--config", config_path, "key = value config file");

  unsigned example_N = 3;
  auto* verify = app.add_subcommand("verify-example", "Check the N+4 generator example");
  verify->add_option("--N", example_N, "N >= 3")->capture_default_str();
  verify->add_option("--p", prime, "Prime modulus");

  std::string ideal_path, poly_text, order_text;
  unsigned trunc = 6;
  auto* divide = app.add_subcommand("divide", "Division with remainder modulo m^T");
  divide->add_option("--ideal", ideal_path, "Ideal file")->required();
  divide->add_option("--poly", poly_text, "Dividend")->required();
  divide->add_option("--order", order_text, "paper:g=<int>, lex")->required();
  divide->add_option("--trunc", trunc, "Truncation level T")->required();

  auto* stair = app.add_subcommand("staircase", "Leading-term staircase modulo m^T");
  stair->add_option("--ideal", ideal_path, "Ideal file")->required();
  stair->add_option("--order", order_text, "paper:g=<int>, lex")->required();
  stair->add_option("--trunc", trunc, "Truncation level T")->required();

  std::string in_path;
  auto* report = app.add_subcommand("report", "Summarize a record file");
  report->add_option("--in", in_path, "Record file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (self->parsed()) return selftest();

    if (eval->parsed()) {
      if (!config_path.empty()) batch.harness = load_config(config_path);
      if (prime) batch.harness.field = PrimeField(*prime);
      if (workers) batch.harness.workers = *workers;
      batch.family = parse_family(family);
      BatchSummary summary;
      if (out_path.empty()) {
        summary = run_batch(batch, std::cout);
        summary.print(std::cerr);
      } else {
        std::ofstream out(out_path, std::ios::app);
        if (!out) throw Error("cannot open '" + out_path + "' for appending");
        summary = run_batch(batch, out);
        summary.print(std::cout);
      }
      return 0;
    }

    if (verify->parsed()) {
      const PrimeField field = prime ? PrimeField(*prime) : PrimeField();
      const auto rep = verify_example(example_N, field);
      auto line = [](const char* name, bool ok, const std::string& detail) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << ": " << detail << '\n';
      };
      line("height", rep.height_ok(), rep.height ? std::to_string(*rep.height) : "unit ideal");
      line("mu mod m^3", rep.mu_mod_3_ok(), std::to_string(rep.mu_mod_3));
      line("mu", rep.mu_ok(),
           std::to_string(rep.mu.mu) + (rep.mu.stable ? " (stable from T=" + std::to_string(rep.mu.level) + ")"
                                                      : " (not stable)"));
      std::string reg;
      for (bool b : rep.regular) reg += b ? '1' : '0';
      line("regular sequence y0..yN", rep.regular_sequence_ok(), reg);
      line("initial-form height", rep.phi_height_ok(), std::to_string(rep.phi_height));
      return rep.all_ok() ? 0 : 1;
    }

    if (divide->parsed()) {
      const IdealFile ideal = load_ideal(ideal_path);
      const auto ord = OrderSpec::parse(order_text, ideal.nvars);
      const auto f = parse_poly(poly_text, ideal.nvars, ideal.field);
      std::cout << format_trace(hironaka_divide(f, ideal.generators, ord, trunc));
      return 0;
    }

    if (stair->parsed()) {
      const IdealFile ideal = load_ideal(ideal_path);
      const auto ord = OrderSpec::parse(order_text, ideal.nvars);
      const auto st = truncated_staircase(ideal.generators, ord, trunc);
      for (std::size_t i = 0; i < st.generators.size(); ++i) {
        std::cout << st.generators[i].to_string() << "  <-  " << format_poly(st.witnesses[i]) << '\n';
      }
      std::cout << "stable: " << (staircase_stable(ideal.generators, ord, trunc) ? "yes" : "no") << '\n';
      return 0;
    }

    if (report->parsed()) {
      std::ifstream in(in_path);
      if (!in) throw Error("cannot open '" + in_path + "'");
      summarize_records(in).print(std::cout);
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
