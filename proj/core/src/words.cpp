#include "qvt/words.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace qvt {

namespace {

constexpr int kMaterializeLimit = 28;

std::uint64_t low_mask(int n) {
  return n <= 0 ? 0 : (std::uint64_t{1} << n) - 1;
}

// Bit mask of the descent positions: bit (len - i) is set iff symbol i is B
// and symbol i+1 is A. Bit 0 of the raw pairing has no partner symbol and
// is masked off.
std::uint64_t descent_mask(const Word& w) {
  if (w.length() < 2) return 0;
  return w.bits() & ~(w.bits() << 1) & (low_mask(w.length()) - 1);
}

}  // namespace

Word::Word(int length, std::uint64_t bits) : len_(length), bits_(bits) {
  if (length < 0 || length > kMaxLength) {
    throw std::invalid_argument("word length out of range");
  }
  if (bits & ~low_mask(length)) {
    throw std::invalid_argument("word bits exceed its length");
  }
}

Word Word::parse(std::string_view text) {
  if (text.size() > kMaxLength) {
    throw std::invalid_argument("word length out of range");
  }
  std::uint64_t bits = 0;
  for (char ch : text) {
    bits <<= 1;
    switch (ch) {
      case 'A':
      case '0':
        break;
      case 'B':
      case '1':
        bits |= 1;
        break;
      default:
        throw std::invalid_argument(std::string("invalid word symbol '") + ch +
                                    "' (expected A, B, 0 or 1)");
    }
  }
  return Word(static_cast<int>(text.size()), bits);
}

int Word::count_b() const { return std::popcount(bits_); }

std::string Word::to_string() const {
  std::string text(static_cast<size_t>(len_), 'A');
  for (int i = 1; i <= len_; ++i) {
    if (symbol_is_b(i)) text[static_cast<size_t>(i - 1)] = 'B';
  }
  return text;
}

Word Word::with_deleted(int pos) const {
  if (pos < 1 || pos > len_) {
    throw std::invalid_argument("deletion position out of range");
  }
  const int tail = len_ - pos;  // symbols after pos
  const std::uint64_t suffix = bits_ & low_mask(tail);
  const std::uint64_t prefix = bits_ >> (tail + 1);
  return Word(len_ - 1, (prefix << tail) | suffix);
}

Word Word::with_inserted(int pos, bool symbol_b) const {
  if (pos < 0 || pos > len_) {
    throw std::invalid_argument("insertion position out of range");
  }
  const int tail = len_ - pos;  // symbols that end up after the new one
  const std::uint64_t suffix = bits_ & low_mask(tail);
  const std::uint64_t prefix = bits_ >> tail;
  return Word(len_ + 1, (prefix << (tail + 1)) |
                            (std::uint64_t{symbol_b} << tail) | suffix);
}

DescentVector::DescentVector(int length, std::uint64_t bits)
    : len_(length), bits_(bits) {
  if (length < 0 || length > Word::kMaxLength) {
    throw std::invalid_argument("descent vector length out of range");
  }
  if (bits & ~low_mask(length)) {
    throw std::invalid_argument("descent vector bits exceed its length");
  }
}

std::string DescentVector::to_string() const {
  std::string text(static_cast<size_t>(len_), '0');
  for (int i = 1; i <= len_; ++i) {
    if (bit(i)) text[static_cast<size_t>(i - 1)] = '1';
  }
  return text;
}

DescentVector descent_vector(const Word& w) {
  if (w.length() < 2) return DescentVector(std::max(w.length() - 1, 0), 0);
  // Descent bit for position i sits at bit (len - i); in the vector of
  // length len - 1 that same position is bit (len - 1 - i), one to the right.
  return DescentVector(w.length() - 1, descent_mask(w) >> 1);
}

long long moment(const DescentVector& y) {
  long long total = 0;
  std::uint64_t bits = y.bits();
  while (bits) {
    const int p = std::countr_zero(bits);
    total += y.length() - p;
    bits &= bits - 1;
  }
  return total;
}

long long moment(const Word& y) {
  long long total = 0;
  std::uint64_t bits = y.bits();
  while (bits) {
    const int p = std::countr_zero(bits);
    total += y.length() - p;
    bits &= bits - 1;
  }
  return total;
}

long long major_index(const Word& w) {
  long long total = 0;
  std::uint64_t d = descent_mask(w);
  while (d) {
    const int p = std::countr_zero(d);
    total += w.length() - p;
    d &= d - 1;
  }
  return total;
}

int run_number(const Word& w) {
  if (w.length() == 0) return 0;
  const std::uint64_t transitions =
      (w.bits() ^ (w.bits() << 1)) & (low_mask(w.length()) - 1);
  return std::popcount(transitions) + 1;
}

void WordSet::insert(const Word& w) {
  if (length_ < 0) {
    length_ = w.length();
  } else if (w.length() != length_) {
    throw std::invalid_argument("word set members must share one length");
  }
  auto it = std::lower_bound(words_.begin(), words_.end(), w);
  if (it == words_.end() || *it != w) words_.insert(it, w);
}

bool WordSet::contains(const Word& w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

WordSet deletion_sphere(const WordSet& c) {
  WordSet sphere;
  for (const Word& w : c) {
    if (w.empty()) {
      throw std::invalid_argument("deletion sphere of the empty word");
    }
    for (int pos = 1; pos <= w.length(); ++pos) {
      sphere.insert(w.with_deleted(pos));
    }
  }
  return sphere;
}

namespace {

void check_materialize(int alpha, int beta) {
  if (alpha < 0 || beta < 0) {
    throw std::invalid_argument("alpha and beta must be >= 0");
  }
  if (alpha + beta > kMaterializeLimit) {
    throw std::invalid_argument(
        "refusing to materialize words longer than 28 symbols; stream instead");
  }
}

QPoly histogram_to_poly(const std::vector<long long>& counts) {
  std::vector<Int> coeffs(counts.size());
  for (size_t k = 0; k < counts.size(); ++k) coeffs[k] = counts[k];
  return QPoly::from_coefficients(std::move(coeffs));
}

long long max_major_index(int length) {
  return static_cast<long long>(length) * (length - 1) / 2;
}

}  // namespace

WordSet constant_weight_set(int alpha, int beta) {
  check_materialize(alpha, beta);
  WordSet set;
  for_each_constant_weight(alpha, beta, [&](const Word& w) { set.insert(w); });
  return set;
}

WordSet code_set(int alpha, int beta, long long m) {
  check_materialize(alpha, beta);
  WordSet set;
  for_each_codeword(alpha, beta, m, [&](const Word& w) { set.insert(w); });
  return set;
}

QPoly dm_distribution(const WordSet& c) {
  if (c.empty()) return QPoly{};
  std::vector<long long> counts(
      static_cast<size_t>(max_major_index(c.word_length())) + 1);
  for (const Word& w : c) counts[static_cast<size_t>(major_index(w))] += 1;
  return histogram_to_poly(counts);
}

QPoly dm_distribution_constant_weight(int alpha, int beta) {
  std::vector<long long> counts(
      static_cast<size_t>(max_major_index(alpha + beta)) + 1);
  for_each_constant_weight(alpha, beta, [&](const Word& w) {
    counts[static_cast<size_t>(major_index(w))] += 1;
  });
  return histogram_to_poly(counts);
}

QPoly dm_distribution_code(int alpha, int beta, long long m) {
  std::vector<long long> counts(
      static_cast<size_t>(max_major_index(alpha + beta)) + 1);
  for_each_codeword(alpha, beta, m, [&](const Word& w) {
    counts[static_cast<size_t>(major_index(w))] += 1;
  });
  return histogram_to_poly(counts);
}

QPoly run_weighted_dm(const WordSet& c) {
  if (c.empty()) return QPoly{};
  std::vector<long long> weights(
      static_cast<size_t>(max_major_index(c.word_length())) + 1);
  for (const Word& w : c) {
    weights[static_cast<size_t>(major_index(w))] += run_number(w);
  }
  return histogram_to_poly(weights);
}

QPoly run_class_dm(int alpha, int beta, int r) {
  std::vector<long long> counts(
      static_cast<size_t>(max_major_index(alpha + beta)) + 1);
  for_each_constant_weight(alpha, beta, [&](const Word& w) {
    if (run_number(w) == r) counts[static_cast<size_t>(major_index(w))] += 1;
  });
  return histogram_to_poly(counts);
}

std::vector<long long> code_class_counts(int alpha, int beta) {
  if (alpha < 0 || beta < 0 || alpha + beta < 1) {
    throw std::invalid_argument("need alpha + beta >= 1");
  }
  const long long modulus = alpha + beta;
  std::vector<long long> counts(static_cast<size_t>(modulus));
  for_each_constant_weight(alpha, beta, [&](const Word& w) {
    counts[static_cast<size_t>(major_index(w) % modulus)] += 1;
  });
  return counts;
}

}  // namespace qvt
