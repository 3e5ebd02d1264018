#pragma once

#include <optional>

#include "qvt/qpoly.hpp"
#include "qvt/words.hpp"

namespace qvt {

/// Parameters of the code C_{alpha,beta,m}: words with alpha As and beta
/// Bs whose major index is congruent to m modulo alpha+beta. Any integer
/// m is accepted and normalized into [0, alpha+beta).
struct CodeSpec {
  int alpha;
  int beta;
  int m;

  CodeSpec(int alpha, int beta, long long m);

  int total_length() const { return alpha + beta; }
};

/// Parameters of the VT code VT_{length,m}: 01-words of the given length
/// whose moment is congruent to m modulo length+1.
struct VTSpec {
  int length;
  int modulus;  // always length + 1
  int m;

  VTSpec(int length, long long m);
};

/// True when moment(y) is congruent to spec.m modulo spec.modulus.
/// y is read as a 01-word (B = 1); throws on length mismatch.
bool vt_membership(const Word& y, const VTSpec& spec);

/// True when w has exactly alpha As, beta Bs, and major index congruent
/// to m; equivalently, when its descent vector lies in
/// VT_{alpha+beta-1, m}.
bool code_membership(const Word& w, const CodeSpec& spec);

/// Closed-form cardinality of C_{alpha,beta,m}:
///
///   (1/(a+b)) * sum over d | gcd(a,b) of
///       binomial((a+b)/d, b/d) * mu(d/gcd(d,m)) * phi(d)/phi(d/gcd(d,m))
///
/// The sum is always divisible by a+b; a nonzero remainder raises
/// integrity_error (it would mean broken arithmetic, not bad input).
Int cardinality_closed_form(const CodeSpec& spec);

/// The m = 0 specialization:
/// (1/(a+b)) * sum over d | gcd(a,b) of binomial((a+b)/d, b/d) * phi(d).
Int cardinality_m0(int alpha, int beta);

/// Closed form for the run-class distribution R_r over C_{alpha,beta}:
///
///   q^floor((r-1)^2/4) * [a-1 over floor((r-2)/2)] [b-1 over floor((r-1)/2)]
/// + q^b q^floor((r-1)^2/4) * [a-1 over floor((r-1)/2)] [b-1 over floor((r-2)/2)]
///
/// relying on the q-binomial zero convention when a floor argument
/// exceeds a-1 or b-1. Throws for r < 2 (no word has fewer runs).
QPoly r_poly_closed_form(int alpha, int beta, int r);

struct SphereCardinality {
  long long set_size;  // true cardinality of the deletion sphere, as a set
  long long run_sum;   // sum of run_number over the codewords
};

/// Deletion-sphere cardinality of C_{alpha,beta,m}, computed as a genuine
/// set size alongside the run-number sum. The two agree exactly when the
/// per-word spheres are disjoint; a mismatch raises integrity_error since
/// it would falsify the single-deletion-correcting property.
SphereCardinality sphere_cardinality(const CodeSpec& spec);

/// Recovers the unique codeword within one deletion of `received` by
/// trying all 2(alpha+beta) single-symbol insertions and filtering by
/// membership. Returns nullopt when no insertion lands in the code;
/// raises integrity_error if two distinct codewords match (which would
/// falsify unique decodability). Throws std::invalid_argument unless
/// received has length alpha+beta-1.
std::optional<Word> decode_single_deletion(const Word& received,
                                           const CodeSpec& spec);

/// True when the per-word deletion spheres of c are pairwise disjoint,
/// i.e. the sphere of c is as large as the run-number sum. Members must
/// be nonempty words.
bool is_single_deletion_correcting(const WordSet& c);

/// Materialized C_{alpha,beta,m} (guarded to alpha+beta <= 28).
WordSet code_set(const CodeSpec& spec);

/// Streaming enumeration of C_{alpha,beta,m} in lexicographic order.
template <typename F>
void for_each_codeword(const CodeSpec& spec, F&& f) {
  for_each_codeword(spec.alpha, spec.beta, spec.m, std::forward<F>(f));
}

}  // namespace qvt
