#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace qvt {

/// Named parameter coordinates of one verification point, in a fixed
/// emission order (alpha, beta, then whichever of m/r/d/k apply).
struct ParamPoint {
  std::vector<std::pair<std::string, long long>> entries;

  std::string to_string() const;
  bool operator==(const ParamPoint&) const = default;
};

/// Outcome of checking one identity at one parameter point. `expected`
/// holds what the closed form predicts and `actual` what the independent
/// brute-force route measured, both rendered from exact arithmetic; the
/// root-of-unity checks are the one numeric exception and carry their
/// tolerance (tolerance is 0 for exact checks).
struct VerificationReport {
  std::string identity;
  ParamPoint point;
  std::string expected;
  std::string actual;
  bool passed = false;
  double tolerance = 0.0;
  double elapsed_ms = 0.0;
};

/// Receives each report as soon as its parameter point finishes, so long
/// sweeps show progress and failures surface immediately.
using ReportSink = std::function<void(const VerificationReport&)>;

/// DM(C_{alpha,beta}) = [alpha+beta over beta], per (alpha, beta) with
/// alpha, beta >= 1 and alpha+beta <= max_total_length.
std::vector<VerificationReport> verify_dm_identity(int max_total_length,
                                                   const ReportSink& sink = {});

/// Closed-form cardinality vs exhaustive enumeration per (alpha, beta, m)
/// with alpha+beta <= max_total_length, plus the bound
/// #C_{a,b,m} <= #C_{a,b,0} at every point (identity "cardinality_bound").
std::vector<VerificationReport> verify_cardinality(int max_total_length,
                                                   const ReportSink& sink = {});

/// Sphere size of C_{gamma,gamma,m} vs (gamma+1) times the closed-form
/// cardinality, per (gamma, m) with gamma <= max_gamma.
std::vector<VerificationReport> verify_sphere_theorem(int max_gamma,
                                                      const ReportSink& sink = {});

/// Closed-form R_r vs the brute-force run-class distribution per
/// (alpha, beta, r) with alpha, beta <= max_ab and 2 <= r <= alpha+beta,
/// plus, for alpha = beta = gamma, the pairing
/// R_r = R_{2*gamma+2-r} modulo q^(2*gamma) - 1 (identity "rpoly_symmetry").
std::vector<VerificationReport> verify_r_poly(int max_ab,
                                              const ReportSink& sink = {});

/// Exact root-of-unity value of [alpha+beta over beta] vs double-precision
/// Horner evaluation, per (alpha, beta, d, k) with alpha, beta <= max_ab,
/// d | alpha+beta and k coprime to d.
std::vector<VerificationReport> verify_root_of_unity(
    int max_ab, double tolerance, const ReportSink& sink = {});

/// Exhaustive decode round trips (every codeword, every deletion position)
/// plus the sphere-disjointness check, per (alpha, beta, m) with
/// alpha+beta <= max_total_length.
std::vector<VerificationReport> verify_decoder(int max_total_length,
                                               const ReportSink& sink = {});

}  // namespace qvt
