#pragma once

#include "framed/intmat2.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace framed {

/// A word in the generators of the braid group on three strands.
///
/// Letters are signed generator indices: +1, -1, +2, -2 for tau1, tau1^-1, tau2, tau2^-1.
/// The empty word is the identity.
class BraidWord {
public:
  BraidWord() = default;
  explicit BraidWord(std::vector<int> letters);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  /// Concatenation without any reduction.
  BraidWord concat(const BraidWord& other) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  std::vector<int> letters_;
};

/// Proper nontrivial simple braids (divisors of Delta other than 1 and Delta).
enum class Simple : std::uint8_t { A, B, AB, BA };

std::string to_string(Simple s);

/// Left-greedy normal form Delta^k x_1 ... x_r.
struct GarsideNormalForm {
  std::int64_t delta_power = 0;
  std::vector<Simple> factors;

  friend bool operator==(const GarsideNormalForm&, const GarsideNormalForm&) = default;

  /// A word representing the same element.
  BraidWord to_word() const;
};

/// Concatenation followed by free reduction.
BraidWord braid_mul(const BraidWord& w1, const BraidWord& w2);

/// Cancels adjacent inverse pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

std::int64_t exponent_sum(const BraidWord& w);

/// Word for Delta^k (Delta = tau1 tau2 tau1).
BraidWord delta_word(std::int64_t k);

GarsideNormalForm normal_form(const BraidWord& w);

/// True iff the two words represent the same braid.
bool braid_equal(const BraidWord& w1, const BraidWord& w2);

/// Image under tau1 -> U1, tau2 -> U2.
Mat2Z phi(const BraidWord& w);

/// If phi(w) = I, the k with w = Delta^{4k}; otherwise nullopt.
std::optional<std::int64_t> kernel_power(const BraidWord& w);

/// A word w with phi(w) = m for m in SL2(Z).
///
/// The first column is reduced by the Euclidean algorithm: while the lower entry c is nonzero,
/// the larger of |a|, |c| is reduced by the smaller using the nearest-integer quotient (ties
/// rounded toward zero, |a| = |c| handled by U1). Left multiplication by U1^-q performs
/// a <- a - q c, and by U2^q performs c <- c - q a. If a = 0 the step uses U1^c to make a = 1.
/// The reduced matrix is +-U1^x; the sign -I is emitted as Delta^2. The word is
/// (inverse of the reduction steps, in order) followed by Delta^2 if needed and tau1^x.
/// Throws DomainError unless det(m) = 1.
BraidWord lift_matrix(const Mat2Z& m);

/// Parses "1 -2 1" or "a B a" (a/A = tau1^{+-1}, b/B = tau2^{+-1}). Throws DomainError.
BraidWord parse_braid_word(const std::string& text);

/// Compact letter form, e.g. "a B a"; "" for the identity.
std::string to_string(const BraidWord& w);

}  // namespace framed
