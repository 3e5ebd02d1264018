#include "qvt/verify.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>

#include "qvt/codes.hpp"
#include "qvt/errors.hpp"
#include "qvt/numtheory.hpp"
#include "qvt/qpoly.hpp"
#include "qvt/words.hpp"

namespace qvt {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void emit(std::vector<VerificationReport>& reports, const ReportSink& sink,
          VerificationReport report) {
  if (sink) sink(report);
  reports.push_back(std::move(report));
}

std::string format_complex(std::complex<double> z) {
  std::ostringstream out;
  out.precision(12);
  out << z.real() << (z.imag() < 0 ? " - " : " + ")
      << std::abs(z.imag()) << "i";
  return out.str();
}

}  // namespace

std::string ParamPoint::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, value] : entries) {
    if (!first) out << " ";
    out << name << "=" << value;
    first = false;
  }
  return out.str();
}

std::vector<VerificationReport> verify_dm_identity(int max_total_length,
                                                   const ReportSink& sink) {
  std::vector<VerificationReport> reports;
  for (int total = 2; total <= max_total_length; ++total) {
    for (int alpha = 1; alpha < total; ++alpha) {
      const int beta = total - alpha;
      const auto start = Clock::now();
      const QPoly closed = q_binomial(total, beta);
      const QPoly brute = dm_distribution_constant_weight(alpha, beta);
      emit(reports, sink,
           {.identity = "dm",
            .point = {{{"alpha", alpha}, {"beta", beta}}},
            .expected = closed.to_string(),
            .actual = brute.to_string(),
            .passed = closed == brute,
            .elapsed_ms = ms_since(start)});
    }
  }
  return reports;
}

std::vector<VerificationReport> verify_cardinality(int max_total_length,
                                                   const ReportSink& sink) {
  std::vector<VerificationReport> reports;
  for (int total = 2; total <= max_total_length; ++total) {
    for (int alpha = 1; alpha < total; ++alpha) {
      const int beta = total - alpha;
      const Int at_m0 = cardinality_closed_form({alpha, beta, 0});
      for (int m = 0; m < total; ++m) {
        const auto start = Clock::now();
        const Int closed = cardinality_closed_form({alpha, beta, m});
        long long enumerated = 0;
        for_each_codeword(alpha, beta, m, [&](const Word&) { ++enumerated; });
        const ParamPoint point{{{"alpha", alpha}, {"beta", beta}, {"m", m}}};
        emit(reports, sink,
             {.identity = "cardinality",
              .point = point,
              .expected = closed.str(),
              .actual = std::to_string(enumerated),
              .passed = closed == enumerated,
              .elapsed_ms = ms_since(start)});
        const auto bound_start = Clock::now();
        emit(reports, sink,
             {.identity = "cardinality_bound",
              .point = point,
              .expected = "<= " + at_m0.str(),
              .actual = closed.str(),
              .passed = closed <= at_m0,
              .elapsed_ms = ms_since(bound_start)});
      }
    }
  }
  return reports;
}

std::vector<VerificationReport> verify_sphere_theorem(int max_gamma,
                                                      const ReportSink& sink) {
  std::vector<VerificationReport> reports;
  for (int gamma = 1; gamma <= max_gamma; ++gamma) {
    for (int m = 0; m < 2 * gamma; ++m) {
      const auto start = Clock::now();
      const CodeSpec spec{gamma, gamma, m};
      const Int predicted = (gamma + 1) * cardinality_closed_form(spec);
      std::string actual;
      bool passed = false;
      try {
        const SphereCardinality sphere = sphere_cardinality(spec);
        actual = std::to_string(sphere.set_size);
        passed = predicted == sphere.set_size;
      } catch (const integrity_error& e) {
        actual = std::string("integrity error: ") + e.what();
      }
      emit(reports, sink,
           {.identity = "sphere",
            .point = {{{"gamma", gamma}, {"m", m}}},
            .expected = predicted.str(),
            .actual = actual,
            .passed = passed,
            .elapsed_ms = ms_since(start)});
    }
  }
  return reports;
}

std::vector<VerificationReport> verify_r_poly(int max_ab,
                                              const ReportSink& sink) {
  std::vector<VerificationReport> reports;
  for (int alpha = 1; alpha <= max_ab; ++alpha) {
    for (int beta = 1; beta <= max_ab; ++beta) {
      for (int r = 2; r <= alpha + beta; ++r) {
        const auto start = Clock::now();
        const QPoly closed = r_poly_closed_form(alpha, beta, r);
        const QPoly brute = run_class_dm(alpha, beta, r);
        emit(reports, sink,
             {.identity = "rpoly",
              .point = {{{"alpha", alpha}, {"beta", beta}, {"r", r}}},
              .expected = closed.to_string(),
              .actual = brute.to_string(),
              .passed = closed == brute,
              .elapsed_ms = ms_since(start)});
      }
    }
  }
  // Symmetry of the run classes for alpha = beta = gamma, taken modulo
  // q^(2*gamma) - 1.
  for (int gamma = 1; gamma <= max_ab; ++gamma) {
    const int modulus = 2 * gamma;
    for (int r = 2; r <= 2 * gamma; ++r) {
      const auto start = Clock::now();
      const int paired = 2 * gamma + 2 - r;
      const ResiduePoly lhs = reduce_mod(r_poly_closed_form(gamma, gamma, r), modulus);
      const ResiduePoly rhs =
          reduce_mod(r_poly_closed_form(gamma, gamma, paired), modulus);
      emit(reports, sink,
           {.identity = "rpoly_symmetry",
            .point = {{{"gamma", gamma}, {"r", r}}},
            .expected = rhs.to_string(),
            .actual = lhs.to_string(),
            .passed = lhs == rhs,
            .elapsed_ms = ms_since(start)});
    }
  }
  return reports;
}

std::vector<VerificationReport> verify_root_of_unity(int max_ab,
                                                     double tolerance,
                                                     const ReportSink& sink) {
  if (tolerance <= 0) throw std::invalid_argument("tolerance must be > 0");
  std::vector<VerificationReport> reports;
  for (int alpha = 1; alpha <= max_ab; ++alpha) {
    for (int beta = 1; beta <= max_ab; ++beta) {
      const QPoly qb = q_binomial(alpha + beta, beta);
      for (long long d : divisors(alpha + beta)) {
        for (long long k = 0; k < d; ++k) {
          if (std::gcd(k, d) != 1) continue;
          const auto start = Clock::now();
          const Int limit = q_binomial_limit_at_primitive_root(
              alpha, beta, static_cast<int>(d));
          const std::complex<double> value =
              eval_at_root_of_unity(qb, static_cast<int>(d), k);
          const double error = std::abs(value - std::complex<double>(
                                                    limit.convert_to<double>(), 0.0));
          emit(reports, sink,
               {.identity = "roots",
                .point = {{{"alpha", alpha},
                           {"beta", beta},
                           {"d", d},
                           {"k", k}}},
                .expected = limit.str(),
                .actual = format_complex(value),
                .passed = error <= tolerance,
                .tolerance = tolerance,
                .elapsed_ms = ms_since(start)});
        }
      }
    }
  }
  return reports;
}

std::vector<VerificationReport> verify_decoder(int max_total_length,
                                               const ReportSink& sink) {
  std::vector<VerificationReport> reports;
  for (int total = 2; total <= max_total_length; ++total) {
    for (int alpha = 1; alpha < total; ++alpha) {
      const int beta = total - alpha;
      for (int m = 0; m < total; ++m) {
        const auto start = Clock::now();
        const CodeSpec spec{alpha, beta, m};
        long long trips = 0;
        long long recovered = 0;
        bool integrity_ok = true;
        std::string note;
        try {
          for_each_codeword(spec, [&](const Word& codeword) {
            for (int pos = 1; pos <= codeword.length(); ++pos) {
              ++trips;
              const auto decoded =
                  decode_single_deletion(codeword.with_deleted(pos), spec);
              if (decoded && *decoded == codeword) ++recovered;
            }
          });
          const SphereCardinality sphere = sphere_cardinality(spec);
          (void)sphere;  // throws on overlap
        } catch (const integrity_error& e) {
          integrity_ok = false;
          note = std::string("; integrity error: ") + e.what();
        }
        const bool passed = integrity_ok && recovered == trips;
        emit(reports, sink,
             {.identity = "decoder",
              .point = {{{"alpha", alpha}, {"beta", beta}, {"m", m}}},
              .expected = std::to_string(trips) + "/" + std::to_string(trips) +
                          " recovered, spheres disjoint",
              .actual = std::to_string(recovered) + "/" +
                        std::to_string(trips) + " recovered" +
                        (integrity_ok ? ", spheres disjoint" : note),
              .passed = passed,
              .elapsed_ms = ms_since(start)});
      }
    }
  }
  return reports;
}

}  // namespace qvt
