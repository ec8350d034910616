// pfrob: p-numerical semigroup toolkit.
// Computes p-Apery sets, p-Frobenius numbers, genus, power sums and
// lambda-weighted sums for numerical semigroups S_p = {n : d(n) > p},
// plus a brute-force self-check mode (verify).

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pfrob/pfrob.hpp"

namespace {

using pfrob::Int;
using pfrob::NumberFieldElement;
using pfrob::ordered_json;
using pfrob::Rat;

std::vector<std::uint64_t> parse_generator_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  for (const std::string& part : pfrob::detail::split(s, ',')) {
    if (part.empty() ||
        part.find_first_not_of("0123456789") != std::string::npos)
      throw pfrob::parse_error("bad generator '" + part + "' in '" + s + "'");
    out.push_back(pfrob::to_u64(pfrob::parse_integer(part), "generator"));
  }
  return out;
}

ordered_json base_json(const pfrob::Generators& gens) {
  ordered_json j;
  ordered_json gl = ordered_json::array();
  for (std::uint64_t g : gens.values()) gl.push_back(g);
  j["generators"] = gl;
  return j;
}

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

// format resolution: tabular commands default to csv, the rest to json;
// csv is only valid for tabular output
std::string resolve_format(const std::string& requested, bool tabular) {
  if (requested.empty()) return tabular ? "csv" : "json";
  if (requested == "csv" && !tabular)
    throw pfrob::parse_error("csv format applies only to table and complement");
  return requested;
}

int run_scalar(const pfrob::Generators& gens, std::uint64_t p,
               const std::string& key, const Int& value,
               const std::string& format) {
  std::string fmt = resolve_format(format, false);
  if (fmt == "plain") {
    std::cout << value.get_str() << "\n";
    return 0;
  }
  ordered_json j = base_json(gens);
  j["p"] = p;
  j[key] = value.get_str();
  emit(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "pfrob: Frobenius numbers, genus, power sums and weighted sums of "
      "numerical semigroups generalized by a denumerant threshold p"};
  app.require_subcommand(1);

  std::string gens_str, lambda_str, format;
  std::uint64_t p = 0, bound = 0;
  unsigned long mu = 1;
  std::vector<unsigned long> verify_mus;
  std::vector<std::string> verify_lambdas;

  auto add_common = [&](CLI::App* sub, bool with_p) {
    sub->add_option("-g,--generators", gens_str,
                    "comma-separated generators, e.g. 5,7,11")
        ->required();
    if (with_p)
      sub->add_option("-p", p, "denumerant threshold: membership is d(n) > p")
          ->capture_default_str();
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    return sub;
  };

  CLI::App* sc_apery = add_common(
      app.add_subcommand(
          "apery", "least n per residue class mod a1 with d(n) >= p+1"),
      true);
  CLI::App* sc_frob = add_common(
      app.add_subcommand("frobenius", "largest n with d(n) <= p (-1 if none)"),
      true);
  CLI::App* sc_genus = add_common(
      app.add_subcommand("genus", "count of n >= 1 with d(n) <= p"), true);
  CLI::App* sc_syl = add_common(
      app.add_subcommand("sylvester-sum", "sum of all n >= 1 with d(n) <= p"),
      true);
  CLI::App* sc_pow = add_common(
      app.add_subcommand("power-sum", "sum of n^mu over n >= 1 with d(n) <= p"),
      true);
  sc_pow->add_option("--mu", mu, "power")->capture_default_str();
  CLI::App* sc_wsum = add_common(
      app.add_subcommand("weighted-sum",
                         "sum of lambda^n n^mu over n >= 1 with d(n) <= p"),
      true);
  sc_wsum->add_option("--mu", mu, "power")->capture_default_str();
  sc_wsum
      ->add_option("--lambda", lambda_str,
                   "weight: INT, NUM/DEN, zeta:M, gauss:RE,IM, or "
                   "nf:modulus=c0,...,1;elem=e0,...")
      ->required();
  CLI::App* sc_comp = add_common(
      app.add_subcommand("complement", "all n >= 1 with d(n) <= p, ascending"),
      true);
  CLI::App* sc_table = add_common(
      app.add_subcommand("table", "denumerant values d(0..bound)"), false);
  sc_table->add_option("--bound", bound, "largest n to tabulate")->required();
  CLI::App* sc_verify = add_common(
      app.add_subcommand("verify",
                         "closed forms vs brute-force enumeration; exit 1 on "
                         "any mismatch"),
      true);
  sc_verify->add_option("--mu", verify_mus,
                        "powers to check (repeatable; default 0 1 2 3)");
  sc_verify->add_option("--lambda", verify_lambdas,
                        "weights to check (repeatable; default 2 and -1/2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    pfrob::Generators gens(parse_generator_list(gens_str));

    if (app.got_subcommand(sc_table)) {
      pfrob::DenumerantTable table(gens, bound);
      std::string fmt = resolve_format(format, true);
      if (fmt == "csv") {
        std::cout << "n,d\n";
        for (std::uint64_t n = 0; n <= table.bound(); ++n)
          std::cout << n << "," << table.at(n).get_str() << "\n";
      } else if (fmt == "plain") {
        for (std::uint64_t n = 0; n <= table.bound(); ++n)
          std::cout << n << " " << table.at(n).get_str() << "\n";
      } else {
        ordered_json j = base_json(gens);
        j["bound"] = bound;
        ordered_json rows = ordered_json::array();
        for (std::uint64_t n = 0; n <= table.bound(); ++n) {
          ordered_json row;
          row["n"] = n;
          row["d"] = table.at(n).get_str();
          rows.push_back(row);
        }
        j["table"] = rows;
        emit(j);
      }
      return 0;
    }

    if (app.got_subcommand(sc_comp)) {
      pfrob::ComplementSet cs(gens, p);
      std::string fmt = resolve_format(format, true);
      if (fmt == "csv") {
        std::cout << "n\n";
        for (std::uint64_t v : cs.elements()) std::cout << v << "\n";
      } else if (fmt == "plain") {
        for (std::uint64_t v : cs.elements()) std::cout << v << "\n";
      } else {
        ordered_json j = base_json(gens);
        j["p"] = p;
        ordered_json elems = ordered_json::array();
        for (std::uint64_t v : cs.elements()) elems.push_back(v);
        j["complement"] = elems;
        emit(j);
      }
      return 0;
    }

    if (app.got_subcommand(sc_verify)) {
      std::vector<unsigned long> mus =
          verify_mus.empty() ? std::vector<unsigned long>{0, 1, 2, 3}
                             : verify_mus;
      std::vector<NumberFieldElement> lambdas;
      if (verify_lambdas.empty()) {
        lambdas.push_back(NumberFieldElement::rational(Rat(2)));
        lambdas.push_back(NumberFieldElement::rational(Rat(-1, 2)));
      } else {
        for (const std::string& s : verify_lambdas)
          lambdas.push_back(pfrob::parse_lambda(s));
      }
      pfrob::VerificationReport rep = pfrob::verify(gens, p, mus, lambdas);
      std::string fmt = resolve_format(format, false);
      if (fmt == "plain") {
        for (const pfrob::VerificationCheck& c : rep.checks) {
          if (c.match)
            std::cout << "ok " << c.name << ": " << c.formula << "\n";
          else
            std::cout << "MISMATCH " << c.name << ": formula=" << c.formula
                      << " oracle=" << c.oracle << "\n";
        }
        std::cout << (rep.all_match() ? "all checks passed"
                                      : "checks FAILED")
                  << "\n";
      } else {
        ordered_json j = base_json(gens);
        j["p"] = p;
        ordered_json rows = ordered_json::array();
        for (const pfrob::VerificationCheck& c : rep.checks) {
          ordered_json row;
          row["check"] = c.name;
          row["formula"] = c.formula;
          row["oracle"] = c.oracle;
          row["match"] = c.match;
          rows.push_back(row);
        }
        j["verify"] = rows;
        emit(j);
      }
      return rep.all_match() ? 0 : 1;
    }

    // the remaining commands share one p-Apery set
    pfrob::PAperySet ap(gens, p);

    if (app.got_subcommand(sc_apery)) {
      std::string fmt = resolve_format(format, false);
      if (fmt == "plain") {
        const char* sep = "";
        for (std::uint64_t v : ap.values()) {
          std::cout << sep << v;
          sep = " ";
        }
        std::cout << "\n";
      } else {
        ordered_json j = base_json(gens);
        j["p"] = p;
        ordered_json vals = ordered_json::array();
        for (std::uint64_t v : ap.values()) vals.push_back(std::to_string(v));
        j["apery"] = vals;
        emit(j);
      }
      return 0;
    }
    if (app.got_subcommand(sc_frob))
      return run_scalar(gens, p, "frobenius", pfrob::frobenius_from_apery(ap),
                        format);
    if (app.got_subcommand(sc_genus))
      return run_scalar(gens, p, "genus", pfrob::genus_from_apery(ap), format);
    if (app.got_subcommand(sc_syl))
      return run_scalar(gens, p, "sylvester_sum",
                        pfrob::sylvester_from_apery(ap), format);
    if (app.got_subcommand(sc_pow))
      return run_scalar(gens, p, "power_sum",
                        pfrob::power_sum_from_apery(ap, mu), format);

    if (app.got_subcommand(sc_wsum)) {
      NumberFieldElement lambda = pfrob::parse_lambda(lambda_str);
      NumberFieldElement result;
      if (mu == 1) {
        bool root = pfrob::pow(lambda, gens.a1()) ==
                    NumberFieldElement::one_in(lambda.modulus());
        result = root ? pfrob::weighted_sum_lambda_root_from_apery(ap, lambda)
                      : pfrob::weighted_sum_mu1_from_apery(ap, lambda);
      } else {
        result = pfrob::weighted_power_sum_from_apery(ap, mu, lambda);
      }
      std::string fmt = resolve_format(format, false);
      if (fmt == "plain") {
        std::cout << result.to_string() << "\n";
      } else {
        ordered_json j = base_json(gens);
        j["p"] = p;
        j["weighted_sum"] = pfrob::nf_to_json(result);
        emit(j);
      }
      return 0;
    }

    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const pfrob::consistency_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const pfrob::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const pfrob::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const pfrob::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 4;
  }
}
