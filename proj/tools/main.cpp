// qvt: exact calculator and verification harness for the C_{alpha,beta,m}
// single-deletion-correcting codes and their q-binomial identities.

#include <complex>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qvt/codes.hpp"
#include "qvt/errors.hpp"
#include "qvt/numtheory.hpp"
#include "qvt/qpoly.hpp"
#include "qvt/verify.hpp"
#include "qvt/words.hpp"

namespace {

using nlohmann::json;

// Process exit codes. Anything thrown as std::invalid_argument is a usage
// error and maps to kUsage.
constexpr int kOk = 0;
constexpr int kFailure = 1;       // verification or integrity failure
constexpr int kUsage = 2;
constexpr int kNotFound = 3;      // decode: no codeword within one deletion
constexpr int kUniqueness = 4;    // decode: two codewords matched

struct Options {
  std::string format = "plain";
  bool json() const { return format == "json"; }
};

json point_to_json(const qvt::ParamPoint& point) {
  json obj = json::object();
  for (const auto& [name, value] : point.entries) obj[name] = value;
  return obj;
}

json report_to_json(const qvt::VerificationReport& report) {
  return json{{"identity", report.identity},
              {"point", point_to_json(report.point)},
              {"expected", report.expected},
              {"actual", report.actual},
              {"passed", report.passed},
              {"tolerance", report.tolerance},
              {"elapsed_ms", report.elapsed_ms}};
}

void print_report_plain(const qvt::VerificationReport& report) {
  std::cout << (report.passed ? "PASS " : "FAIL ") << report.identity << " "
            << report.point.to_string();
  if (report.passed && report.expected == report.actual) {
    std::cout << "  value=" << report.expected;
  } else {
    std::cout << "  expected=" << report.expected
              << "  actual=" << report.actual;
  }
  if (report.tolerance > 0) std::cout << "  tol=" << report.tolerance;
  std::cout << "  (" << report.elapsed_ms << " ms)\n";
}

int cmd_qbinom(long long i, long long j, std::optional<int> mod,
               const Options& opts) {
  const qvt::QPoly poly = qvt::q_binomial(static_cast<int>(i),
                                          static_cast<int>(j));
  if (mod) {
    const qvt::ResiduePoly residue = qvt::reduce_mod(poly, *mod);
    if (opts.json()) {
      std::cout << json{{"modulus", residue.modulus()},
                        {"coefficients", residue.coefficient_strings()}}
                       .dump()
                << "\n";
    } else {
      std::cout << residue.to_string() << "\n";
    }
  } else {
    if (opts.json()) {
      std::cout << json(poly.coefficient_strings()).dump() << "\n";
    } else {
      std::cout << poly.to_string() << "\n";
    }
  }
  return kOk;
}

// Enumerates either C_{alpha,beta,m} (m set) or all of C_{alpha,beta}.
template <typename F>
void for_each_selected(int alpha, int beta, std::optional<long long> m, F&& f) {
  if (m) {
    qvt::for_each_codeword(alpha, beta, *m, std::forward<F>(f));
  } else {
    qvt::for_each_constant_weight(alpha, beta, std::forward<F>(f));
  }
}

int code_list(int alpha, int beta, std::optional<long long> m,
              const Options& opts) {
  std::vector<std::string> words;
  for_each_selected(alpha, beta, m,
                    [&](const qvt::Word& w) { words.push_back(w.to_string()); });
  if (opts.json()) {
    std::cout << json(words).dump() << "\n";
  } else {
    for (size_t i = 0; i < words.size(); ++i) {
      std::cout << (i ? " " : "") << words[i];
    }
    std::cout << "\n";
  }
  return kOk;
}

int code_card(int alpha, int beta, std::optional<long long> m,
              const Options& opts) {
  const qvt::Int closed =
      m ? qvt::cardinality_closed_form({alpha, beta, *m})
        : qvt::binomial(alpha + beta, beta);
  long long enumerated = 0;
  for_each_selected(alpha, beta, m, [&](const qvt::Word&) { ++enumerated; });
  const bool agree = closed == enumerated;
  if (opts.json()) {
    std::cout << json{{"closed_form", closed.str()},
                      {"enumerated", std::to_string(enumerated)},
                      {"agree", agree}}
                     .dump()
              << "\n";
  } else {
    std::cout << "closed_form=" << closed.str() << " enumerated=" << enumerated
              << "\n";
  }
  if (!agree) {
    std::cerr << "error: closed form and enumeration disagree\n";
    return kFailure;
  }
  return kOk;
}

int code_dm(int alpha, int beta, std::optional<long long> m,
            const Options& opts) {
  const qvt::QPoly dm = m ? qvt::dm_distribution_code(alpha, beta, *m)
                          : qvt::dm_distribution_constant_weight(alpha, beta);
  if (opts.json()) {
    std::cout << json(dm.coefficient_strings()).dump() << "\n";
  } else {
    std::cout << dm.to_string() << "\n";
  }
  return kOk;
}

int code_sphere(int alpha, int beta, std::optional<long long> m,
                const Options& opts) {
  long long run_sum = 0;
  std::unordered_set<std::uint64_t> sphere_set;  // uniform length, bits suffice
  for_each_selected(alpha, beta, m, [&](const qvt::Word& w) {
    run_sum += qvt::run_number(w);
    for (int pos = 1; pos <= w.length(); ++pos) {
      sphere_set.insert(w.with_deleted(pos).bits());
    }
  });
  const long long sphere = static_cast<long long>(sphere_set.size());

  json out{{"sphere", std::to_string(sphere)},
           {"run_sum", std::to_string(run_sum)}};
  std::string plain = "sphere=" + std::to_string(sphere);
  if (m && alpha == beta) {
    const qvt::Int card = qvt::cardinality_closed_form({alpha, beta, *m});
    if (card != 0 && sphere % card == 0) {
      const qvt::Int ratio = sphere / card;
      out["ratio"] = ratio.str();
      plain += " ratio=" + ratio.str();
    } else {
      std::cerr << "error: sphere size is not a multiple of the cardinality\n";
      return kFailure;
    }
  } else if (m) {
    const qvt::Int card = qvt::cardinality_closed_form({alpha, beta, *m});
    if (card != 0) {
      const double observed =
          static_cast<double>(sphere) / card.convert_to<double>();
      out["ratio_observed"] = observed;
      plain += " ratio_observed=" + std::to_string(observed);
    }
  }
  if (opts.json()) {
    std::cout << out.dump() << "\n";
  } else {
    std::cout << plain << "\n";
  }
  return kOk;
}

int cmd_decode(int alpha, int beta, long long m, const std::string& text,
               const Options& opts) {
  const qvt::Word received = qvt::Word::parse(text);
  const qvt::CodeSpec spec{alpha, beta, m};
  std::optional<qvt::Word> decoded;
  try {
    decoded = qvt::decode_single_deletion(received, spec);
  } catch (const qvt::integrity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUniqueness;
  }
  if (opts.json()) {
    std::cout << json{{"decoded", decoded ? json(decoded->to_string()) : json()}}
                     .dump()
              << "\n";
  } else {
    std::cout << (decoded ? decoded->to_string() : "NOT_FOUND") << "\n";
  }
  return decoded ? kOk : kNotFound;
}

struct VerifyBounds {
  std::optional<int> max;
  int max_gamma = 8;
  double tolerance = 1e-6;

  int dm() const { return max.value_or(16); }
  int cardinality() const { return max.value_or(18); }
  int rpoly() const { return max.value_or(8); }
  int roots() const { return max.value_or(8); }
  int decoder() const { return max.value_or(12); }
  int gamma() const { return max.value_or(max_gamma); }
};

int cmd_verify(const std::string& identity, const VerifyBounds& bounds,
               const Options& opts) {
  long long total = 0;
  long long passed = 0;
  const qvt::ReportSink sink = [&](const qvt::VerificationReport& report) {
    ++total;
    passed += report.passed ? 1 : 0;
    if (opts.json()) {
      std::cout << report_to_json(report).dump() << "\n";
    } else {
      print_report_plain(report);
    }
  };

  const bool all = identity == "all";
  if (identity == "dm" || all) qvt::verify_dm_identity(bounds.dm(), sink);
  if (identity == "cardinality" || all) {
    qvt::verify_cardinality(bounds.cardinality(), sink);
  }
  if (identity == "sphere" || all) {
    qvt::verify_sphere_theorem(all ? bounds.max_gamma : bounds.gamma(), sink);
  }
  if (identity == "rpoly" || all) qvt::verify_r_poly(bounds.rpoly(), sink);
  if (identity == "roots" || all) {
    qvt::verify_root_of_unity(bounds.roots(), bounds.tolerance, sink);
  }
  if (identity == "decoder" || all) qvt::verify_decoder(bounds.decoder(), sink);

  const long long failed = total - passed;
  if (opts.json()) {
    std::cout << json{{"summary",
                       {{"total", total}, {"passed", passed}, {"failed", failed}}}}
                     .dump()
              << "\n";
  } else {
    std::cout << (failed == 0 ? "PASS" : "FAIL") << " " << passed << "/"
              << total << " checks\n";
  }
  return failed == 0 ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact q-binomial arithmetic and single-deletion-correcting codes "
      "built from descent statistics"};
  app.require_subcommand(1);

  Options opts;
  app.fallthrough();  // let --format appear after the subcommand too
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"plain", "json"}))
      ->capture_default_str();

  // qbinom
  long long qb_i = 0, qb_j = 0;
  int qb_mod = 0;
  auto* qbinom = app.add_subcommand(
      "qbinom", "Print the Gaussian binomial [i over j]");
  qbinom->add_option("i", qb_i, "upper index")->required()
      ->check(CLI::NonNegativeNumber);
  qbinom->add_option("j", qb_j, "lower index")->required()
      ->check(CLI::NonNegativeNumber);
  auto* qb_mod_opt = qbinom->add_option("--mod", qb_mod,
                                        "reduce modulo q^n - 1")
                         ->check(CLI::PositiveNumber);

  // code
  int code_alpha = 0, code_beta = 0;
  long long code_m = 0;
  auto* code = app.add_subcommand(
      "code", "Inspect C_{alpha,beta} or the class C_{alpha,beta,m}");
  code->add_option("alpha", code_alpha, "number of As")->required()
      ->check(CLI::PositiveNumber);
  code->add_option("beta", code_beta, "number of Bs")->required()
      ->check(CLI::PositiveNumber);
  auto* code_m_opt =
      code->add_option("--m", code_m, "moment residue class (any integer)");
  auto* flag_list = code->add_flag("--list", "list codewords");
  auto* flag_card =
      code->add_flag("--card", "closed-form and enumerated cardinality");
  auto* flag_dm = code->add_flag("--dm", "descent moment distribution");
  auto* flag_sphere = code->add_flag("--sphere", "deletion sphere cardinality");

  // decode
  int dec_alpha = 0, dec_beta = 0;
  long long dec_m = 0;
  std::string dec_word;
  auto* decode = app.add_subcommand(
      "decode", "Recover the codeword a received word was deleted from");
  decode->add_option("alpha", dec_alpha)->required()
      ->check(CLI::PositiveNumber);
  decode->add_option("beta", dec_beta)->required()
      ->check(CLI::PositiveNumber);
  decode->add_option("m", dec_m)->required();
  decode->add_option("word", dec_word,
                     "received word over {A,B} (0/1 accepted)")
      ->required();

  // verify
  std::string verify_identity;
  VerifyBounds bounds;
  int verify_max = 0;
  auto* verify = app.add_subcommand(
      "verify", "Check the library identities against brute-force oracles");
  verify->add_option("identity", verify_identity, "which identity to sweep")
      ->required()
      ->check(CLI::IsMember({"dm", "cardinality", "sphere", "rpoly", "roots",
                             "decoder", "all"}));
  auto* verify_max_opt =
      verify->add_option("--max", verify_max,
                         "override the default sweep bound of the identity")
          ->check(CLI::PositiveNumber);
  verify->add_option("--max-gamma", bounds.max_gamma,
                     "bound for the sphere sweep")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--tolerance", bounds.tolerance,
                     "numeric tolerance for the root-of-unity sweep")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (qbinom->parsed()) {
      return cmd_qbinom(qb_i, qb_j,
                        qb_mod_opt->count() ? std::optional<int>(qb_mod)
                                            : std::nullopt,
                        opts);
    }
    if (code->parsed()) {
      const std::optional<long long> m =
          code_m_opt->count() ? std::optional<long long>(code_m) : std::nullopt;
      const int actions = static_cast<int>(flag_list->count()) +
                          static_cast<int>(flag_card->count()) +
                          static_cast<int>(flag_dm->count()) +
                          static_cast<int>(flag_sphere->count());
      if (actions > 1) {
        std::cerr << "error: pick one of --list, --card, --dm, --sphere\n";
        return kUsage;
      }
      if (*flag_list) return code_list(code_alpha, code_beta, m, opts);
      if (*flag_dm) return code_dm(code_alpha, code_beta, m, opts);
      if (*flag_sphere) return code_sphere(code_alpha, code_beta, m, opts);
      return code_card(code_alpha, code_beta, m, opts);
    }
    if (decode->parsed()) {
      return cmd_decode(dec_alpha, dec_beta, dec_m, dec_word, opts);
    }
    if (verify->parsed()) {
      if (verify_max_opt->count()) bounds.max = verify_max;
      return cmd_verify(verify_identity, bounds, opts);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const qvt::integrity_error& e) {
    std::cerr << "integrity error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
