#include "framed/hochschild.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace framed {

namespace {

constexpr std::uint64_t kMaxCellCodes = 50'000'000;

std::vector<SparseVector> product_table(const StructureConstantAlgebra& a) {
  std::vector<SparseVector> table(a.dim * a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = 0; j < a.dim; ++j) table[i * a.dim + j] = a.product(i, j);
  }
  return table;
}

std::vector<Rational> basis_vector(std::size_t dim, std::size_t i) {
  std::vector<Rational> v(dim);
  v[i] = 1;
  return v;
}

bool is_unit_vector(const std::vector<Rational>& u, std::size_t i) {
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] != (k == i ? 1 : 0)) return false;
  }
  return true;
}

StructureConstantAlgebra algebra_from_table(std::size_t dim, std::vector<std::string> labels, std::vector<Rational> unit,
                                            const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>>& entries) {
  StructureConstantAlgebra a(dim, std::move(labels), std::move(unit));
  for (const auto& [i, j, k, c] : entries) a.at(i, j, k) += c;
  return a;
}

// Change of basis f_0 = unit, f_r = e_{others[r-1]}; returns coordinates of v in the f basis.
struct UnitFirst {
  std::size_t pivot;
  std::vector<std::size_t> others;
  std::vector<Rational> unit;

  explicit UnitFirst(const std::vector<Rational>& u) : unit(u) {
    pivot = u.size();
    for (std::size_t k = 0; k < u.size(); ++k) {
      if (u[k] != 0) {
        pivot = k;
        break;
      }
    }
    if (pivot == u.size()) throw DomainError("algebra unit is zero");
    for (std::size_t k = 0; k < u.size(); ++k) {
      if (k != pivot) others.push_back(k);
    }
  }

  std::vector<Rational> to_e(std::size_t r) const {
    return r == 0 ? unit : basis_vector(unit.size(), others[r - 1]);
  }

  std::vector<Rational> to_f(const std::vector<Rational>& v) const {
    std::vector<Rational> out(v.size());
    const Rational lead = v[pivot] / unit[pivot];
    out[0] = lead;
    for (std::size_t r = 0; r < others.size(); ++r) out[r + 1] = v[others[r]] - lead * unit[others[r]];
    return out;
  }

  StructureConstantAlgebra apply(const StructureConstantAlgebra& a) const {
    std::vector<std::string> labels;
    labels.push_back("1");
    for (auto k : others) labels.push_back(a.labels[k]);
    StructureConstantAlgebra out(a.dim, std::move(labels), basis_vector(a.dim, 0));
    for (std::size_t r = 0; r < a.dim; ++r) {
      for (std::size_t s = 0; s < a.dim; ++s) {
        const auto prod = to_f(a.multiply(to_e(r), to_e(s)));
        for (std::size_t k = 0; k < a.dim; ++k) out.at(r, s, k) = prod[k];
      }
    }
    return out;
  }
};

std::vector<std::size_t> parallel_ranks(const std::vector<const SparseMatrixQ*>& mats) {
  std::vector<std::future<std::size_t>> jobs;
  jobs.reserve(mats.size());
  for (const auto* m : mats) jobs.push_back(std::async(std::launch::async, [m] { return m->rank(); }));
  std::vector<std::size_t> out;
  out.reserve(mats.size());
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------------------------
// Algebras

StructureConstantAlgebra::StructureConstantAlgebra(std::size_t dim_, std::vector<std::string> labels_, std::vector<Rational> unit_)
    : dim(dim_), labels(std::move(labels_)), unit(std::move(unit_)), constants(dim_ * dim_ * dim_) {
  if (labels.empty()) {
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  }
  if (labels.size() != dim || unit.size() != dim) throw DomainError("algebra: basis labels and unit must have dim entries");
}

SparseVector StructureConstantAlgebra::product(std::size_t i, std::size_t j) const {
  SparseVector out;
  for (std::size_t k = 0; k < dim; ++k) {
    if (at(i, j, k) != 0) out.emplace_back(static_cast<std::uint32_t>(k), at(i, j, k));
  }
  return out;
}

std::vector<Rational> StructureConstantAlgebra::multiply(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  std::vector<Rational> out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      const Rational s = x[i] * y[j];
      for (std::size_t k = 0; k < dim; ++k) out[k] += s * at(i, j, k);
    }
  }
  return out;
}

std::string Violation::describe(const std::vector<std::string>& labels) const {
  std::string out = law + " fails at (";
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k) out += ", ";
    out += indices[k] < labels.size() ? labels[indices[k]] : std::to_string(indices[k]);
  }
  out += ") in component ";
  out += component < labels.size() ? labels[component] : std::to_string(component);
  return out;
}

ValidationReport validate_algebra(const StructureConstantAlgebra& a) {
  ValidationReport report;
  const std::size_t n = a.dim;
  if (n == 0) report.messages.push_back("dimension must be positive");
  if (a.constants.size() != n * n * n) report.messages.push_back("structure constant table has wrong size");
  if (a.unit.size() != n) report.messages.push_back("unit vector has wrong size");
  if (!report.messages.empty()) return report;

  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      Rational left = 0, right = 0;
      for (std::size_t i = 0; i < n; ++i) {
        left += a.unit[i] * a.at(i, j, k);
        right += a.unit[i] * a.at(j, i, k);
      }
      const Rational expected = j == k ? 1 : 0;
      if (left != expected) report.violations.push_back({"left unit", {j}, k});
      if (right != expected) report.violations.push_back({"right unit", {j}, k});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          Rational lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < n; ++m) {
            lhs += a.at(i, j, m) * a.at(m, k, l);
            rhs += a.at(j, k, m) * a.at(i, m, l);
          }
          if (lhs != rhs) report.violations.push_back({"associativity", {i, j, k}, l});
        }
      }
    }
  }
  return report;
}

ValidationReport validate_two_algebra(const TwoAlgebra& a) {
  ValidationReport report;
  for (const auto& [name, alg] : {std::pair{"mu1 ", &a.first}, std::pair{"mu2 ", &a.second}}) {
    auto sub = validate_algebra(*alg);
    for (auto& v : sub.violations) {
      v.law = name + v.law;
      report.violations.push_back(std::move(v));
    }
    for (auto& m : sub.messages) report.messages.push_back(name + m);
  }
  if (!report.messages.empty()) return report;
  if (a.first.dim != a.second.dim) {
    report.messages.push_back("the two products live on spaces of different dimension");
    return report;
  }
  if (a.first.unit != a.second.unit) report.messages.push_back("the two products do not share a unit");

  const std::size_t n = a.first.dim;
  const auto mu1 = [&](std::size_t x, std::size_t y) { return a.first.multiply(basis_vector(n, x), basis_vector(n, y)); };
  const auto mu2 = [&](std::size_t x, std::size_t y) { return a.second.multiply(basis_vector(n, x), basis_vector(n, y)); };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          const auto lhs = a.second.multiply(mu1(i, j), mu1(k, l));
          const auto rhs = a.first.multiply(mu2(i, k), mu2(j, l));
          for (std::size_t c = 0; c < n; ++c) {
            if (lhs[c] != rhs[c]) {
              report.violations.push_back({"interchange", {i, j, k, l}, c});
              break;
            }
          }
        }
      }
    }
  }
  return report;
}

std::vector<std::string> builtin_algebra_names() { return {"q", "dual", "trunc3", "prod2", "mat2", "group2", "group3"}; }

std::optional<StructureConstantAlgebra> builtin_algebra(const std::string& name) {
  using E = std::tuple<std::size_t, std::size_t, std::size_t, Rational>;
  if (name == "q") return algebra_from_table(1, {"1"}, {1}, {E{0, 0, 0, 1}});
  if (name == "dual") {
    return algebra_from_table(2, {"1", "x"}, {1, 0}, {E{0, 0, 0, 1}, E{0, 1, 1, 1}, E{1, 0, 1, 1}});
  }
  if (name == "trunc3") {
    std::vector<E> entries;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; i + j < 3; ++j) entries.emplace_back(i, j, i + j, 1);
    }
    return algebra_from_table(3, {"1", "x", "x2"}, {1, 0, 0}, entries);
  }
  if (name == "prod2") {
    // e = (1, 0) is idempotent.
    return algebra_from_table(2, {"1", "e"}, {1, 0}, {E{0, 0, 0, 1}, E{0, 1, 1, 1}, E{1, 0, 1, 1}, E{1, 1, 1, 1}});
  }
  if (name == "mat2") {
    // Matrix units e11, e12, e21, e22 (index 2r + c for e_{r+1,c+1}).
    std::vector<E> entries;
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) {
        for (std::size_t c2 = 0; c2 < 2; ++c2) entries.emplace_back(2 * r + c, 2 * c + c2, 2 * r + c2, 1);
      }
    }
    return algebra_from_table(4, {"e11", "e12", "e21", "e22"}, {1, 0, 0, 1}, entries);
  }
  if (name == "group2" || name == "group3") {
    const std::size_t n = name == "group2" ? 2 : 3;
    std::vector<E> entries;
    std::vector<std::string> labels = {"1", "g", "g2"};
    labels.resize(n);
    std::vector<Rational> unit(n);
    unit[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) entries.emplace_back(i, j, (i + j) % n, 1);
    }
    return algebra_from_table(n, labels, unit, entries);
  }
  return std::nullopt;
}

TwoAlgebra diagonal_two_algebra(const StructureConstantAlgebra& a) { return {a, a}; }

AlgebraSpec parse_algebra_spec(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<Rational> unit;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> mul1, mul2;
  bool has_mul2 = false;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    throw DomainError("algebra spec line " + std::to_string(line_no) + ": " + why);
  };
  auto index = [&](const std::string& tok) {
    const Int v = parse_integer(tok);
    if (v < 0 || v >= dim) fail("basis index " + tok + " out of range");
    return static_cast<std::size_t>(v.convert_to<std::uint64_t>());
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key)) continue;
    std::vector<std::string> rest;
    for (std::string tok; fields >> tok;) rest.push_back(tok);
    if (key == "dim") {
      if (rest.size() != 1) fail("dim takes one value");
      const Int d = parse_integer(rest[0]);
      if (d < 1 || d > 64) fail("dim must be between 1 and 64");
      dim = d.convert_to<std::size_t>();
      continue;
    }
    if (dim == 0) fail("'dim' must come first");
    if (key == "basis") {
      if (rest.size() != dim) fail("basis needs " + std::to_string(dim) + " labels");
      labels = rest;
    } else if (key == "unit") {
      if (rest.size() != dim) fail("unit needs " + std::to_string(dim) + " coordinates");
      unit.clear();
      for (const auto& tok : rest) unit.push_back(parse_rational(tok));
    } else if (key == "mul" || key == "mul2") {
      if (rest.size() != 4) fail(key + " takes 'i j k coefficient'");
      auto& target = key == "mul" ? mul1 : mul2;
      has_mul2 |= key == "mul2";
      target.emplace_back(index(rest[0]), index(rest[1]), index(rest[2]), parse_rational(rest[3]));
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (dim == 0) throw DomainError("algebra spec has no 'dim' line");
  if (unit.empty()) throw DomainError("algebra spec has no 'unit' line");
  AlgebraSpec spec{algebra_from_table(dim, labels, unit, mul1), std::nullopt};
  if (has_mul2) spec.second = algebra_from_table(dim, labels, unit, mul2);
  return spec;
}

AlgebraSpec load_algebra(const std::string& name_or_path) {
  if (auto a = builtin_algebra(name_or_path)) return {*a, std::nullopt};
  std::ifstream file(name_or_path);
  if (!file) throw DomainError("unknown algebra '" + name_or_path + "' (not a builtin name or readable file)");
  std::stringstream buf;
  buf << file.rdbuf();
  return parse_algebra_spec(buf.str());
}

StructureConstantAlgebra unit_first_basis(const StructureConstantAlgebra& a) {
  if (is_unit_vector(a.unit, 0)) return a;
  return UnitFirst(a.unit).apply(a);
}

TwoAlgebra unit_first_basis(const TwoAlgebra& a) {
  if (is_unit_vector(a.first.unit, 0)) return a;
  const UnitFirst change(a.first.unit);
  return {change.apply(a.first), change.apply(a.second)};
}

// ---------------------------------------------------------------------------------------------
// Bisimplicial cyclic bar construction

namespace {

// Basis grids of one cell C_{p,q}, encoded base-dim, position 0 most significant.
struct Cell {
  int p = 0;
  int q = 0;
  std::vector<std::uint64_t> codes;
  std::unordered_map<std::uint64_t, std::uint32_t> index;
};

using Digits = std::vector<std::uint32_t>;
using Emit = std::function<void(std::uint64_t, const Rational&)>;

}  // namespace

struct BicyclicModule::Impl {
  std::size_t n = 0;
  bool normalized = true;
  std::vector<SparseVector> inner_prod;
  std::vector<SparseVector> outer_prod;
  std::vector<SparseVector> singleton;
  std::mutex mutex;
  std::map<std::pair<int, int>, std::shared_ptr<const Cell>> cells;

  Impl(const StructureConstantAlgebra& inner, const StructureConstantAlgebra& outer, bool normalized_)
      : n(inner.dim), normalized(normalized_), inner_prod(product_table(inner)), outer_prod(product_table(outer)) {
    for (std::size_t d = 0; d < n; ++d) singleton.push_back({{static_cast<std::uint32_t>(d), Rational(1)}});
  }

  Digits decode(std::uint64_t code, std::size_t length) const {
    Digits g(length);
    for (std::size_t k = length; k-- > 0;) {
      g[k] = static_cast<std::uint32_t>(code % n);
      code /= n;
    }
    return g;
  }

  std::uint64_t encode(const Digits& g) const {
    std::uint64_t code = 0;
    for (auto d : g) code = code * n + d;
    return code;
  }

  bool admissible(const Digits& g, int p, int q) const {
    if (!normalized) return true;
    const std::size_t width = static_cast<std::size_t>(q) + 1;
    for (int j = 1; j <= p; ++j) {
      bool all_unit = true;
      for (std::size_t i = 0; i < width && all_unit; ++i) all_unit = g[j * width + i] == 0;
      if (all_unit) return false;
    }
    for (std::size_t i = 1; i < width; ++i) {
      bool all_unit = true;
      for (int j = 0; j <= p && all_unit; ++j) all_unit = g[j * width + i] == 0;
      if (all_unit) return false;
    }
    return true;
  }

  std::shared_ptr<const Cell> cell(int p, int q) {
    std::lock_guard lock(mutex);
    auto& slot = cells[{p, q}];
    if (slot) return slot;
    auto c = std::make_shared<Cell>();
    c->p = p;
    c->q = q;
    const std::size_t length = static_cast<std::size_t>(p + 1) * static_cast<std::size_t>(q + 1);
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < length; ++k) {
      if (total > kMaxCellCodes / n) throw DomainError("chain group C_{" + std::to_string(p) + "," + std::to_string(q) + "} is too large");
      total *= n;
    }
    for (std::uint64_t code = 0; code < total; ++code) {
      if (!admissible(decode(code, length), p, q)) continue;
      c->index.emplace(code, static_cast<std::uint32_t>(c->codes.size()));
      c->codes.push_back(code);
    }
    slot = std::move(c);
    return slot;
  }

  // Expands a tensor of linear combinations into basis grids.
  void expand(const std::vector<const SparseVector*>& slots, const Rational& coeff, const Emit& emit) const {
    std::function<void(std::size_t, std::uint64_t, const Rational&)> rec = [&](std::size_t k, std::uint64_t code, const Rational& c) {
      if (k == slots.size()) {
        emit(code, c);
        return;
      }
      for (const auto& [d, v] : *slots[k]) rec(k + 1, code * n + d, c * v);
    };
    rec(0, 0, coeff);
  }

  template <class F>
  SparseMatrixQ build(const Cell& src, const Cell& dst, F&& f) const {
    SparseMatrixQ m(dst.codes.size(), src.codes.size());
    const std::size_t length = static_cast<std::size_t>(src.p + 1) * static_cast<std::size_t>(src.q + 1);
    for (std::size_t col = 0; col < src.codes.size(); ++col) {
      const Digits g = decode(src.codes[col], length);
      f(g, Emit([&](std::uint64_t code, const Rational& c) {
          if (const auto it = dst.index.find(code); it != dst.index.end()) m.add(it->second, col, c);
        }));
    }
    m.finalize();
    return m;
  }

  SparseMatrixQ horizontal(int p, int q, bool all_faces) {
    if (p < 1) throw DomainError("horizontal boundary needs p >= 1");
    const auto src = cell(p, q);
    const auto dst = cell(p - 1, q);
    const std::size_t w = static_cast<std::size_t>(q) + 1;
    const int faces = all_faces ? p : p - 1;
    return build(*src, *dst, [&](const Digits& g, const Emit& emit) {
      std::vector<const SparseVector*> slots;
      for (int j = 0; j <= faces; ++j) {
        slots.clear();
        if (j < p) {
          for (int blk = 0; blk <= p; ++blk) {
            if (blk == j + 1) continue;
            for (std::size_t i = 0; i < w; ++i) {
              slots.push_back(blk == j ? &outer_prod[g[j * w + i] * n + g[(j + 1) * w + i]] : &singleton[g[blk * w + i]]);
            }
          }
        } else {
          for (std::size_t i = 0; i < w; ++i) slots.push_back(&outer_prod[g[p * w + i] * n + g[i]]);
          for (int blk = 1; blk < p; ++blk) {
            for (std::size_t i = 0; i < w; ++i) slots.push_back(&singleton[g[blk * w + i]]);
          }
        }
        expand(slots, Rational(j % 2 == 0 ? 1 : -1), emit);
      }
    });
  }

  SparseMatrixQ vertical(int p, int q, bool all_faces) {
    if (q < 1) throw DomainError("vertical boundary needs q >= 1");
    const auto src = cell(p, q);
    const auto dst = cell(p, q - 1);
    const std::size_t w = static_cast<std::size_t>(q) + 1;
    const int faces = all_faces ? q : q - 1;
    return build(*src, *dst, [&](const Digits& g, const Emit& emit) {
      std::vector<const SparseVector*> slots;
      for (int i = 0; i <= faces; ++i) {
        slots.clear();
        for (int blk = 0; blk <= p; ++blk) {
          const std::uint32_t* x = &g[blk * w];
          if (i < q) {
            for (int k = 0; k <= q; ++k) {
              if (k == i + 1) continue;
              slots.push_back(k == i ? &inner_prod[x[i] * n + x[i + 1]] : &singleton[x[k]]);
            }
          } else {
            slots.push_back(&inner_prod[x[q] * n + x[0]]);
            for (int k = 1; k < q; ++k) slots.push_back(&singleton[x[k]]);
          }
        }
        expand(slots, Rational(i % 2 == 0 ? 1 : -1), emit);
      }
    });
  }

  SparseMatrixQ permutation(int p, int q, bool outer) {
    if (normalized) throw DomainError("rotations are only defined on the unnormalized complex");
    const auto c = cell(p, q);
    const std::size_t w = static_cast<std::size_t>(q) + 1;
    const Rational s = ((outer ? p : q) % 2 == 0) ? 1 : -1;
    return build(*c, *c, [&](const Digits& g, const Emit& emit) {
      Digits r(g.size());
      for (int blk = 0; blk <= p; ++blk) {
        for (int i = 0; i <= q; ++i) {
          const int src_blk = outer ? (blk + p) % (p + 1) : blk;
          const int src_i = outer ? i : (i + q) % (q + 1);
          r[blk * w + i] = g[src_blk * w + src_i];
        }
      }
      emit(encode(r), s);
    });
  }

  // Connes' operator on the q = 0 row, C_k -> C_{k+1}.
  SparseMatrixQ connes(int k) {
    const auto src = cell(k, 0);
    const auto dst = cell(k + 1, 0);
    if (normalized) {
      // B(a_0..a_k) = sum_i (-1)^{ki} (1, a_i, ..., a_k, a_0, ..., a_{i-1}).
      return build(*src, *dst, [&](const Digits& g, const Emit& emit) {
        Digits r(g.size() + 1);
        for (int i = 0; i <= k; ++i) {
          r[0] = 0;
          for (int m = 0; m <= k; ++m) r[m + 1] = g[(i + m) % (k + 1)];
          emit(encode(r), Rational((k * i) % 2 == 0 ? 1 : -1));
        }
      });
    }
    // B = (1 - t_{k+1}) s N_k.
    const SparseMatrixQ t = permutation(k, 0, true);
    SparseMatrixQ norm = SparseMatrixQ::identity(src->codes.size());
    SparseMatrixQ power = norm;
    for (int i = 1; i <= k; ++i) {
      power = t * power;
      norm = norm + power;
    }
    const SparseMatrixQ extra = build(*src, *dst, [&](const Digits& g, const Emit& emit) {
      Digits r(g.size() + 1);
      r[0] = 0;
      std::copy(g.begin(), g.end(), r.begin() + 1);
      emit(encode(r), Rational(1));
    });
    const SparseMatrixQ t_next = permutation(k + 1, 0, true);
    return (SparseMatrixQ::identity(dst->codes.size()) - t_next) * (extra * norm);
  }
};

BicyclicModule::BicyclicModule(const TwoAlgebra& a, IterationOrder order, bool normalized) {
  const TwoAlgebra based = unit_first_basis(a);
  const bool mu1_inner = order == IterationOrder::FirstMu1;
  impl_ = std::make_shared<Impl>(mu1_inner ? based.first : based.second, mu1_inner ? based.second : based.first, normalized);
}

std::size_t BicyclicModule::dim(int p, int q) const { return impl_->cell(p, q)->codes.size(); }

SparseMatrixQ BicyclicModule::horizontal(int p, int q, bool all_faces) const { return impl_->horizontal(p, q, all_faces); }

SparseMatrixQ BicyclicModule::vertical(int p, int q, bool all_faces) const { return impl_->vertical(p, q, all_faces); }

SparseMatrixQ BicyclicModule::outer_rotation(int p, int q) const { return impl_->permutation(p, q, true); }

SparseMatrixQ BicyclicModule::inner_rotation(int p, int q) const { return impl_->permutation(p, q, false); }

ChainComplexQ BicyclicModule::total_complex(int top) const {
  if (top < 0) throw DomainError("total degree must be >= 0");
  ChainComplexQ c;
  c.normalized = impl_->normalized;
  std::vector<std::vector<std::size_t>> offsets(top + 1);
  for (int d = 0; d <= top; ++d) {
    std::size_t total = 0;
    for (int p = 0; p <= d; ++p) {
      offsets[d].push_back(total);
      total += dim(p, d - p);
    }
    c.dims.push_back(total);
  }
  c.boundary.emplace_back(0, c.dims[0]);
  for (int d = 1; d <= top; ++d) {
    SparseMatrixQ m(c.dims[d - 1], c.dims[d]);
    for (int p = 0; p <= d; ++p) {
      const int q = d - p;
      const std::size_t col0 = offsets[d][p];
      if (p >= 1) {
        const SparseMatrixQ h = horizontal(p, q);
        const std::size_t row0 = offsets[d - 1][p - 1];
        for (std::size_t j = 0; j < h.cols(); ++j) {
          for (const auto& [r, v] : h.column(j)) m.add(row0 + r, col0 + j, v);
        }
      }
      if (q >= 1) {
        const SparseMatrixQ v = vertical(p, q);
        const std::size_t row0 = offsets[d - 1][p];
        const bool flip = p % 2 == 1;
        for (std::size_t j = 0; j < v.cols(); ++j) {
          for (const auto& [r, x] : v.column(j)) m.add(row0 + r, col0 + j, flip ? Rational(-x) : x);
        }
      }
    }
    m.finalize();
    c.boundary.push_back(std::move(m));
  }
  return c;
}

// ---------------------------------------------------------------------------------------------
// Homology

ChainComplexQ cyclic_bar(const StructureConstantAlgebra& a, int n_max, bool normalized) {
  if (n_max < 0) throw DomainError("n_max must be >= 0 (got " + std::to_string(n_max) + ")");
  const StructureConstantAlgebra based = unit_first_basis(a);
  BicyclicModule::Impl impl(based, based, normalized);
  ChainComplexQ c;
  c.normalized = normalized;
  for (int k = 0; k <= n_max; ++k) c.dims.push_back(impl.cell(k, 0)->codes.size());
  c.boundary.emplace_back(0, c.dims[0]);
  for (int k = 1; k <= n_max; ++k) c.boundary.push_back(impl.horizontal(k, 0, true));
  if (!normalized) {
    for (int k = 0; k <= n_max; ++k) c.cyclic.push_back(impl.permutation(k, 0, true));
  }
  for (int k = 0; k < n_max; ++k) c.connes.push_back(impl.connes(k));
  return c;
}

std::vector<std::size_t> betti_numbers(const ChainComplexQ& c) {
  const std::size_t top = c.top_degree();
  std::vector<const SparseMatrixQ*> mats;
  for (std::size_t k = 1; k <= top; ++k) mats.push_back(&c.boundary[k]);
  const auto ranks = parallel_ranks(mats);
  std::vector<std::size_t> betti;
  for (std::size_t k = 0; k < top; ++k) {
    const std::size_t in_rank = ranks[k];                   // rank of C_{k+1} -> C_k
    const std::size_t out_rank = k == 0 ? 0 : ranks[k - 1]; // rank of C_k -> C_{k-1}
    betti.push_back(c.dims[k] - out_rank - in_rank);
  }
  return betti;
}

namespace {

HomologyResult homology_of(const ChainComplexQ& c, int requested) {
  HomologyResult r;
  r.built_through = c.top_degree();
  r.betti = betti_numbers(c);
  r.truncated = r.betti.empty();
  r.note = "complex built through degree " + std::to_string(r.built_through) + "; homology reported for degrees 0.." +
           (r.betti.empty() ? std::string("(none)") : std::to_string(r.betti.size() - 1)) + " (requested max " +
           std::to_string(requested) + ")";
  return r;
}

}  // namespace

HomologyResult hh_betti(const StructureConstantAlgebra& a, int n_max, bool normalized) {
  if (n_max < 0) throw DomainError("n_max must be >= 0 (got " + std::to_string(n_max) + ")");
  if (n_max < 2) {
    HomologyResult r;
    r.truncated = true;
    r.note = "n_max < 2: no degree is below the truncation";
    return r;
  }
  return homology_of(cyclic_bar(a, n_max - 1, normalized), n_max);
}

std::size_t hh0_direct(const StructureConstantAlgebra& a) {
  std::vector<SparseVector> commutators;
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = i + 1; j < a.dim; ++j) {
      SparseVector v;
      for (std::size_t k = 0; k < a.dim; ++k) {
        const Rational c = a.at(i, j, k) - a.at(j, i, k);
        if (c != 0) v.emplace_back(static_cast<std::uint32_t>(k), c);
      }
      if (!v.empty()) commutators.push_back(std::move(v));
    }
  }
  return a.dim - sparse_rank(std::move(commutators));
}

HomologyResult secondary_hh_betti(const TwoAlgebra& a, int total_max, IterationOrder order, bool normalized) {
  if (total_max < 0) throw DomainError("total_max must be >= 0 (got " + std::to_string(total_max) + ")");
  const auto report = validate_two_algebra(a);
  if (!report.valid()) {
    const std::string why = report.violations.empty() ? report.messages.front() : report.violations.front().describe(a.first.labels);
    throw DomainError("not a valid 2-algebra: " + why);
  }
  if (total_max < 2) {
    HomologyResult r;
    r.truncated = true;
    r.note = "total_max < 2: no degree is below the truncation";
    return r;
  }
  const BicyclicModule module(a, order, normalized);
  return homology_of(module.total_complex(total_max - 1), total_max);
}

std::pair<SparseMatrixQ, SparseMatrixQ> bicyclic_rotations(const TwoAlgebra& a, int p, int q) {
  if (p < 0 || q < 0) throw DomainError("p and q must be >= 0");
  const BicyclicModule module(a, IterationOrder::FirstMu1, false);
  return {module.outer_rotation(p, q), module.inner_rotation(p, q)};
}

}  // namespace framed
