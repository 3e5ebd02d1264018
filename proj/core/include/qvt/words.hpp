#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qvt/qpoly.hpp"

namespace qvt {

/// Word over the ordered two-symbol alphabet {A, B} with A < B, packed as
/// bits with A = 0 and B = 1. Symbol positions are 1-based; symbol i lives
/// at bit (length - i), so for words of equal length the numeric order of
/// the bit pattern is exactly the lexicographic order of the word.
class Word {
 public:
  static constexpr int kMaxLength = 62;

  Word() : len_(0), bits_(0) {}
  Word(int length, std::uint64_t bits);

  /// Parses a word over {A, B}; the characters 0 and 1 are accepted as
  /// synonyms (0 -> A, 1 -> B). Throws std::invalid_argument otherwise.
  static Word parse(std::string_view text);

  int length() const { return len_; }
  std::uint64_t bits() const { return bits_; }
  bool empty() const { return len_ == 0; }

  /// True when symbol i (1-based) is B.
  bool symbol_is_b(int i) const { return (bits_ >> (len_ - i)) & 1u; }

  int count_b() const;
  int count_a() const { return len_ - count_b(); }

  /// Canonical text form over {A, B}.
  std::string to_string() const;

  /// Word with symbol at 1-based position pos removed.
  Word with_deleted(int pos) const;

  /// Word with a new symbol inserted so that it ends up at 1-based
  /// position pos + 1; pos ranges over [0, length].
  Word with_inserted(int pos, bool symbol_b) const;

  auto operator<=>(const Word&) const = default;  // length-major, then lex

 private:
  int len_;
  std::uint64_t bits_;
};

/// 01-vector marking the descents of a word: bit i (1-based) is set when
/// symbol i is B and symbol i+1 is A. Has length max(word length - 1, 0).
class DescentVector {
 public:
  DescentVector() : len_(0), bits_(0) {}
  DescentVector(int length, std::uint64_t bits);

  int length() const { return len_; }
  std::uint64_t bits() const { return bits_; }
  bool bit(int i) const { return (bits_ >> (len_ - i)) & 1u; }

  /// The same 01-sequence as a Word (0 -> A, 1 -> B), e.g. for VT
  /// membership tests.
  Word to_word() const { return Word(len_, bits_); }

  std::string to_string() const;

  auto operator<=>(const DescentVector&) const = default;

 private:
  int len_;
  std::uint64_t bits_;
};

DescentVector descent_vector(const Word& w);

/// Position-weighted sum over the integers: sum of i * y_i, 1-based.
long long moment(const DescentVector& y);

/// Moment of a word read as a 01-sequence (B counts as 1).
long long moment(const Word& y);

/// moment(descent_vector(w)): the sum of the descent positions of w.
long long major_index(const Word& w);

/// Number of maximal blocks of equal consecutive symbols; 0 for the
/// empty word.
int run_number(const Word& w);

/// Set of distinct words of one common length. Insertion keeps the set
/// sorted and rejects words of a different length than the first insert.
class WordSet {
 public:
  WordSet() = default;

  void insert(const Word& w);
  bool contains(const Word& w) const;
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

  /// Common length of the members; -1 while empty.
  int word_length() const { return length_; }

  std::vector<Word>::const_iterator begin() const { return words_.begin(); }
  std::vector<Word>::const_iterator end() const { return words_.end(); }
  const std::vector<Word>& words() const { return words_; }

  bool operator==(const WordSet&) const = default;

 private:
  std::vector<Word> words_;  // sorted, unique
  int length_ = -1;
};

/// All words obtained by deleting exactly one symbol from a member of c.
/// Throws if c contains the empty word.
WordSet deletion_sphere(const WordSet& c);

/// Calls f for every word of the given length in lexicographic order.
template <typename F>
void for_each_word(int length, F&& f) {
  const std::uint64_t count = std::uint64_t{1} << length;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    f(Word(length, bits));
  }
}

/// Calls f for every word with alpha As and beta Bs in lexicographic
/// order (binomial(alpha+beta, beta) words in total).
template <typename F>
void for_each_constant_weight(int alpha, int beta, F&& f) {
  if (alpha < 0 || beta < 0) {
    throw std::invalid_argument("alpha and beta must be >= 0");
  }
  const int len = alpha + beta;
  if (beta == 0 || alpha == 0) {
    f(Word(len, beta == 0 ? 0 : (std::uint64_t{1} << len) - 1));
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << len;
  std::uint64_t v = (std::uint64_t{1} << beta) - 1;  // lex-least: all Bs last
  while (v < limit) {
    f(Word(len, v));
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t u = v & (~v + 1);
    const std::uint64_t w = v + u;
    v = w | (((v ^ w) >> 2) / u);
  }
}

/// Calls f for every word of C_{alpha,beta} whose major index is congruent
/// to m modulo alpha+beta, in lexicographic order. Any integer m is
/// accepted and reduced.
template <typename F>
void for_each_codeword(int alpha, int beta, long long m, F&& f) {
  if (alpha < 0 || beta < 0 || alpha + beta < 1) {
    throw std::invalid_argument("need alpha + beta >= 1");
  }
  const long long modulus = alpha + beta;
  const long long target = ((m % modulus) + modulus) % modulus;
  for_each_constant_weight(alpha, beta, [&](const Word& w) {
    if (major_index(w) % modulus == target) f(w);
  });
}

/// Materialized C_{alpha,beta}. Guarded to alpha+beta <= 28; larger
/// parameter points must stream.
WordSet constant_weight_set(int alpha, int beta);

/// Materialized C_{alpha,beta,m}, same guard as constant_weight_set.
WordSet code_set(int alpha, int beta, long long m);

/// Descent moment distribution of a word set: the coefficient of q^k
/// counts members with major index k. The empty set gives 0.
QPoly dm_distribution(const WordSet& c);

/// DM of all of C_{alpha,beta}, streamed (no materialization).
QPoly dm_distribution_constant_weight(int alpha, int beta);

/// DM of C_{alpha,beta,m}, streamed.
QPoly dm_distribution_code(int alpha, int beta, long long m);

/// Sum of run_number(w) * q^major_index(w) over the set.
QPoly run_weighted_dm(const WordSet& c);

/// Brute-force run-class distribution: DM of the words of C_{alpha,beta}
/// with exactly r runs. Zero when no word has r runs.
QPoly run_class_dm(int alpha, int beta, int r);

/// Codeword counts of C_{alpha,beta,m} for every m in [0, alpha+beta),
/// from one enumeration pass over C_{alpha,beta}.
std::vector<long long> code_class_counts(int alpha, int beta);

}  // namespace qvt
