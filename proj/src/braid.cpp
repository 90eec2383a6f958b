#include "framed/braid.hpp"

#include <array>
#include <cctype>
#include <sstream>

namespace framed {

namespace {

// Simple braids of B3, i.e. divisors of Delta = aba in the positive monoid.
enum Code : int { E = 0, A = 1, B = 2, AB = 3, BA = 4, D = 5, NONE = -1 };
constexpr int kSimples = 6;
constexpr std::array<int, kSimples> kLength = {0, 1, 1, 2, 2, 3};

// Product of two simples when it is again simple.
constexpr int simple_mul(int x, int y) {
  if (x == E) return y;
  if (y == E) return x;
  if (x == A && y == B) return AB;
  if (x == B && y == A) return BA;
  if ((x == A && y == BA) || (x == B && y == AB) || (x == AB && y == A) || (x == BA && y == B)) return D;
  return NONE;
}

// r with u * r = y, or NONE when u is not a left divisor of y.
constexpr int left_quotient(int u, int y) {
  for (int r = 0; r < kSimples; ++r) {
    if (simple_mul(u, r) == y) return r;
  }
  return NONE;
}

constexpr int left_gcd(int x, int y) {
  int best = E;
  for (int u = 0; u < kSimples; ++u) {
    if (left_quotient(u, x) != NONE && left_quotient(u, y) != NONE && kLength[u] > kLength[best]) best = u;
  }
  return best;
}

// Right complement: x * complement(x) = Delta.
constexpr int complement(int x) { return left_quotient(x, D); }

// Conjugation by Delta swaps the generators.
constexpr int flip(int x) {
  constexpr std::array<int, kSimples> image = {E, B, A, BA, AB, D};
  return image[x];
}

// Makes (x, y) left-weighted in place; returns false if it already was.
bool make_left_weighted(int& x, int& y) {
  const int u = left_gcd(complement(x), y);
  if (u == E) return false;
  x = simple_mul(x, u);
  y = left_quotient(u, y);
  return true;
}

Simple to_simple(int code) {
  switch (code) {
    case A: return Simple::A;
    case B: return Simple::B;
    case AB: return Simple::AB;
    case BA: return Simple::BA;
    default: throw ConsistencyError("identity or Delta left inside a normal form");
  }
}

void append_letters(std::vector<int>& out, Simple s) {
  switch (s) {
    case Simple::A: out.push_back(1); break;
    case Simple::B: out.push_back(2); break;
    case Simple::AB: out.insert(out.end(), {1, 2}); break;
    case Simple::BA: out.insert(out.end(), {2, 1}); break;
  }
}

void append_power(std::vector<int>& out, int generator, const Int& exponent) {
  const Int n = exponent < 0 ? Int(-exponent) : exponent;
  const int letter = exponent < 0 ? -generator : generator;
  for (Int i = 0; i < n; ++i) out.push_back(letter);
}

// Nearest integer to num/den, ties toward zero.
Int nearest_quotient(Int num, Int den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Int q0 = floor_div(num, den);
  const Int twice_r = 2 * (num - q0 * den);
  if (twice_r > den) return q0 + 1;
  if (twice_r < den) return q0;
  return q0 >= 0 ? q0 : Int(q0 + 1);
}

constexpr std::int64_t kMaxLiftLength = 10'000'000;

}  // namespace

BraidWord::BraidWord(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int l : letters_) {
    if (l != 1 && l != -1 && l != 2 && l != -2) {
      throw DomainError("braid letter must be one of 1, -1, 2, -2 (got " + std::to_string(l) + ")");
    }
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& l : out) l = -l;
  return BraidWord(std::move(out));
}

BraidWord BraidWord::concat(const BraidWord& other) const {
  std::vector<int> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return BraidWord(std::move(out));
}

std::string to_string(Simple s) {
  switch (s) {
    case Simple::A: return "a";
    case Simple::B: return "b";
    case Simple::AB: return "ab";
    case Simple::BA: return "ba";
  }
  return "?";
}

BraidWord GarsideNormalForm::to_word() const {
  std::vector<int> out = delta_word(delta_power).letters();
  for (Simple s : factors) append_letters(out, s);
  return BraidWord(std::move(out));
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> stack;
  stack.reserve(w.size());
  for (int l : w.letters()) {
    if (!stack.empty() && stack.back() == -l) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(std::move(stack));
}

BraidWord braid_mul(const BraidWord& w1, const BraidWord& w2) { return free_reduce(w1.concat(w2)); }

std::int64_t exponent_sum(const BraidWord& w) {
  std::int64_t s = 0;
  for (int l : w.letters()) s += l > 0 ? 1 : -1;
  return s;
}

BraidWord delta_word(std::int64_t k) {
  std::vector<int> out;
  const int sign = k < 0 ? -1 : 1;
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out.insert(out.end(), {sign, 2 * sign, sign});
  return BraidWord(std::move(out));
}

GarsideNormalForm normal_form(const BraidWord& w) {
  // Rewrite tau_i^-1 = Delta^-1 * c_i with c_1 = ab, c_2 = ba, then slide every Delta^-1 to the
  // front; each slide conjugates the factors already collected, which is tracked lazily.
  struct Pending {
    int code;
    std::int64_t flips_before;
  };
  std::vector<Pending> pending;
  pending.reserve(w.size());
  std::int64_t inverses = 0;
  for (int l : w.letters()) {
    switch (l) {
      case 1: pending.push_back({A, inverses}); break;
      case 2: pending.push_back({B, inverses}); break;
      case -1: ++inverses; pending.push_back({AB, inverses}); break;
      case -2: ++inverses; pending.push_back({BA, inverses}); break;
    }
  }

  std::vector<int> left;
  left.reserve(pending.size());
  for (const auto& p : pending) {
    const int code = ((inverses - p.flips_before) % 2 == 0) ? p.code : flip(p.code);
    left.push_back(code);
    for (std::size_t j = left.size() - 1; j > 0; --j) {
      if (!make_left_weighted(left[j - 1], left[j])) break;
    }
  }
  // Fixpoint pass; a no-op when the sweep above already produced a left-weighted sequence.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t j = 0; j + 1 < left.size(); ++j) changed |= make_left_weighted(left[j], left[j + 1]);
  }

  GarsideNormalForm nf;
  nf.delta_power = -inverses;
  std::size_t begin = 0;
  while (begin < left.size() && left[begin] == D) {
    ++nf.delta_power;
    ++begin;
  }
  std::size_t end = left.size();
  while (end > begin && left[end - 1] == E) --end;
  for (std::size_t j = begin; j < end; ++j) nf.factors.push_back(to_simple(left[j]));
  return nf;
}

bool braid_equal(const BraidWord& w1, const BraidWord& w2) { return normal_form(w1) == normal_form(w2); }

Mat2Z phi(const BraidWord& w) {
  static const Mat2Z u1 = unipotent_upper();
  static const Mat2Z u2 = unipotent_lower();
  static const Mat2Z u1_inv = unimodular_inverse(u1);
  static const Mat2Z u2_inv = unimodular_inverse(u2);
  Mat2Z m = Mat2Z::identity();
  for (int l : w.letters()) {
    switch (l) {
      case 1: m = m * u1; break;
      case -1: m = m * u1_inv; break;
      case 2: m = m * u2; break;
      case -2: m = m * u2_inv; break;
    }
  }
  return m;
}

std::optional<std::int64_t> kernel_power(const BraidWord& w) {
  if (phi(w) != Mat2Z::identity()) return std::nullopt;
  const std::int64_t sum = exponent_sum(w);
  if (sum % 12 != 0) {
    throw ConsistencyError("word in the kernel of phi has exponent sum " + std::to_string(sum) + ", not a multiple of 12");
  }
  const std::int64_t k = sum / 12;
  if (normal_form(w) != GarsideNormalForm{4 * k, {}}) {
    throw ConsistencyError("word in the kernel of phi is not Delta^" + std::to_string(4 * k));
  }
  return k;
}

BraidWord lift_matrix(const Mat2Z& m) {
  if (m.det() != 1) {
    throw DomainError("lift_matrix requires det = 1 (got " + m.det().str() + ")");
  }
  struct Step {
    int generator;
    Int exponent;
  };
  std::vector<Step> steps;
  Int a = m.a, b = m.b, c = m.c, d = m.d;
  Int total = 0;
  auto record = [&](int generator, const Int& e) {
    steps.push_back({generator, e});
    total += abs(e);
    if (total > kMaxLiftLength) throw DomainError("lift_matrix: word would exceed " + std::to_string(kMaxLiftLength) + " letters");
  };
  while (c != 0) {
    if (a == 0) {
      // c = +-1 here; U1^c makes a = 1.
      const Int e = c;
      a += e * c;
      b += e * d;
      record(1, e);
    } else if (abs(a) > abs(c)) {
      const Int q = nearest_quotient(a, c);
      a -= q * c;
      b -= q * d;
      record(1, -q);
    } else {
      const Int q = nearest_quotient(c, a);
      c -= q * a;
      d -= q * b;
      record(2, q);
    }
  }
  // Now [[a, b], [0, d]] with a = d = +-1, equal to +-U1^x.
  std::vector<int> out;
  for (const auto& s : steps) append_power(out, s.generator, -s.exponent);
  if (a == 1) {
    append_power(out, 1, b);
  } else {
    const auto delta_sq = delta_word(2).letters();
    out.insert(out.end(), delta_sq.begin(), delta_sq.end());
    append_power(out, 1, -b);
  }
  return free_reduce(BraidWord(std::move(out)));
}

BraidWord parse_braid_word(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    const bool numeric = std::isdigit(static_cast<unsigned char>(token.back())) != 0;
    if (numeric) {
      if (token == "1" || token == "+1") out.push_back(1);
      else if (token == "-1") out.push_back(-1);
      else if (token == "2" || token == "+2") out.push_back(2);
      else if (token == "-2") out.push_back(-2);
      else throw DomainError("bad braid letter '" + token + "' (expected 1, -1, 2, -2 or a/A/b/B)");
      continue;
    }
    for (char ch : token) {
      switch (ch) {
        case 'a': out.push_back(1); break;
        case 'A': out.push_back(-1); break;
        case 'b': out.push_back(2); break;
        case 'B': out.push_back(-2); break;
        default: throw DomainError(std::string("bad braid letter '") + ch + "' (expected a/A/b/B or signed integers)");
      }
    }
  }
  return BraidWord(std::move(out));
}

std::string to_string(const BraidWord& w) {
  std::string out;
  for (int l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += l == 1 ? 'a' : l == -1 ? 'A' : l == 2 ? 'b' : 'B';
  }
  return out;
}

}  // namespace framed
