#include "qvt/codes.hpp"

#include <set>
#include <stdexcept>
#include <unordered_set>

#include "qvt/errors.hpp"
#include "qvt/numtheory.hpp"

namespace qvt {

namespace {

int normalize_residue(long long m, long long modulus) {
  return static_cast<int>(((m % modulus) + modulus) % modulus);
}

}  // namespace

CodeSpec::CodeSpec(int alpha_in, int beta_in, long long m_in)
    : alpha(alpha_in), beta(beta_in), m(0) {
  if (alpha < 1 || beta < 1) {
    throw std::invalid_argument("code spec requires alpha, beta >= 1");
  }
  if (alpha + beta > Word::kMaxLength) {
    throw std::invalid_argument("code word length out of range");
  }
  m = normalize_residue(m_in, alpha + beta);
}

VTSpec::VTSpec(int length_in, long long m_in)
    : length(length_in), modulus(length_in + 1), m(0) {
  if (length < 0 || length >= Word::kMaxLength) {
    throw std::invalid_argument("VT length out of range");
  }
  m = normalize_residue(m_in, modulus);
}

bool vt_membership(const Word& y, const VTSpec& spec) {
  if (y.length() != spec.length) {
    throw std::invalid_argument("VT membership: word length mismatch");
  }
  return moment(y) % spec.modulus == spec.m;
}

bool code_membership(const Word& w, const CodeSpec& spec) {
  if (w.length() != spec.total_length()) return false;
  if (w.count_b() != spec.beta) return false;
  return major_index(w) % spec.total_length() == spec.m;
}

Int cardinality_closed_form(const CodeSpec& spec) {
  const long long total = spec.total_length();
  Int sum = 0;
  for (long long d : divisors(gcd(spec.alpha, spec.beta))) {
    const long long g = gcd(d, spec.m);
    const int mu = mobius(d / g);
    if (mu == 0) continue;
    // phi(t) divides phi(d) for every t | d, so the term stays integral.
    const long long phi_ratio = euler_phi(d) / euler_phi(d / g);
    sum += binomial(total / d, spec.beta / d) * mu * phi_ratio;
  }
  if (sum % total != 0) {
    throw integrity_error("cardinality sum not divisible by alpha + beta");
  }
  return sum / total;
}

Int cardinality_m0(int alpha, int beta) {
  if (alpha < 1 || beta < 1) {
    throw std::invalid_argument("cardinality_m0 requires alpha, beta >= 1");
  }
  const long long total = alpha + beta;
  Int sum = 0;
  for (long long d : divisors(gcd(alpha, beta))) {
    sum += binomial(total / d, beta / d) * euler_phi(d);
  }
  if (sum % total != 0) {
    throw integrity_error("cardinality sum not divisible by alpha + beta");
  }
  return sum / total;
}

QPoly r_poly_closed_form(int alpha, int beta, int r) {
  if (alpha < 1 || beta < 1) {
    throw std::invalid_argument("r_poly requires alpha, beta >= 1");
  }
  if (r < 2) {
    throw std::invalid_argument("r_poly requires r >= 2");
  }
  const int corner = (r - 1) * (r - 1) / 4;
  const QPoly first =
      q_binomial(alpha - 1, (r - 2) / 2) * q_binomial(beta - 1, (r - 1) / 2);
  const QPoly second =
      q_binomial(alpha - 1, (r - 1) / 2) * q_binomial(beta - 1, (r - 2) / 2);
  return first.shifted(corner) + second.shifted(corner + beta);
}

SphereCardinality sphere_cardinality(const CodeSpec& spec) {
  std::unordered_set<std::uint64_t> sphere;  // all words share length l-1
  long long run_sum = 0;
  for_each_codeword(spec, [&](const Word& w) {
    run_sum += run_number(w);
    for (int pos = 1; pos <= w.length(); ++pos) {
      sphere.insert(w.with_deleted(pos).bits());
    }
  });
  const long long set_size = static_cast<long long>(sphere.size());
  if (set_size != run_sum) {
    throw integrity_error(
        "deletion spheres of a code class overlap; single-deletion "
        "correction is falsified");
  }
  return {set_size, run_sum};
}

std::optional<Word> decode_single_deletion(const Word& received,
                                           const CodeSpec& spec) {
  if (received.length() != spec.total_length() - 1) {
    throw std::invalid_argument(
        "decode expects a word one symbol shorter than the code length");
  }
  std::set<Word> matches;
  for (int pos = 0; pos <= received.length(); ++pos) {
    for (bool symbol_b : {false, true}) {
      const Word candidate = received.with_inserted(pos, symbol_b);
      if (code_membership(candidate, spec)) matches.insert(candidate);
    }
  }
  if (matches.empty()) return std::nullopt;
  if (matches.size() > 1) {
    throw integrity_error(
        "two distinct codewords are one deletion from the same word");
  }
  return *matches.begin();
}

bool is_single_deletion_correcting(const WordSet& c) {
  if (c.empty()) return true;
  if (c.word_length() < 1) {
    throw std::invalid_argument("members must be nonempty words");
  }
  long long run_sum = 0;
  for (const Word& w : c) run_sum += run_number(w);
  return static_cast<long long>(deletion_sphere(c).size()) == run_sum;
}

WordSet code_set(const CodeSpec& spec) {
  return code_set(spec.alpha, spec.beta, spec.m);
}

}  // namespace qvt
