#include "framed/io.hpp"
#include "framed/orbit.hpp"
#include "framed/selftest.hpp"

#include <CLI11.hpp>

#include <unistd.h>

#include <deque>
#include <functional>
#include <iostream>

using namespace framed;

namespace {

struct Options {
  bool json = false;
  bool normalized = true;
  bool unnormalized = false;
  std::int64_t max = -1;
  std::uint64_t seed = 7;
};

using Action = std::function<Json()>;

std::vector<Vec2Q> parse_points(const std::string& text) {
  std::vector<Vec2Q> out;
  std::size_t pos = 0;
  while ((pos = text.find('(', pos)) != std::string::npos) {
    const auto close = text.find(')', pos);
    if (close == std::string::npos) throw ParseError("unbalanced '(' in point list '" + text + "'");
    out.push_back(parse_vec2q(text.substr(pos, close - pos + 1)));
    pos = close + 1;
  }
  if (out.empty() && text.find_first_not_of(" \t0") != std::string::npos) {
    throw ParseError("expected points like '(1/2,0) (0,1/3)', got '" + text + "'");
  }
  return out;
}

FiniteTorusSubgroup parse_subgroup(const std::string& text) { return subgroup_from_generators(parse_points(text)); }

Int parse_int_arg(const std::string& text) {
  try {
    return parse_integer(text);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Rational parse_rational_arg(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Json subgroup_json(const FiniteTorusSubgroup& c) {
  Json j = to_json(c);
  j["generators"] = Json::array();
  for (const auto& g : c.generators) {
    if (g.x != 0 || g.y != 0) j["generators"].push_back(to_json(g));
  }
  return j;
}

int max_or(const Options& o, int fallback) {
  if (o.max < 0) return fallback;
  if (o.max > 64) throw DomainError("--max must be at most 64");
  return static_cast<int>(o.max);
}

class Cli {
public:
  Cli() : app_("Exact braid, isogeny, lattice and Hochschild computations", "framed") {
    app_.require_subcommand(1);
    app_.add_flag("--json", opts_.json, "Compact JSON output (default when stdout is not a terminal)");
    app_.set_version_flag("--version", "framed 0.1.0");
    add_braid();
    add_matrix();
    add_cover();
    add_lattice();
    add_orbit();
    add_sd();
    add_hh();
    add_selftest();
  }

  int run(int argc, char** argv) {
    try {
      app_.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app_.exit(e);
      return code == 0 ? 0 : 2;
    }
    if (!action_) {
      std::cerr << "error: missing verb\n";
      return 2;
    }
    try {
      const Json out = action_();
      const bool pretty = !opts_.json && isatty(STDOUT_FILENO);
      std::cout << (pretty ? out.dump(2) : out.dump()) << "\n";
      if (out.contains("passed") && !out["passed"].get<bool>()) return 1;
      return 0;
    } catch (const ParseError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    } catch (const DomainError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    } catch (const ConsistencyError& e) {
      std::cerr << "internal error: " << e.what() << "\n";
      return 1;
    }
  }

private:
  CLI::App* group(const std::string& name, const std::string& desc) {
    auto* g = app_.add_subcommand(name, desc);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  }

  CLI::App* verb(CLI::App* parent, const std::string& name, const std::string& desc, Action action) {
    auto* v = parent->add_subcommand(name, desc);
    v->fallthrough();
    v->callback([this, action = std::move(action)] { action_ = action; });
    return v;
  }

  std::string& slot() { return args_.emplace_back(); }

  void add_braid() {
    auto* g = group("braid", "Braid group on three strands");
    auto& w = slot();
    auto& w2 = slot();
    auto& m = slot();
    verb(g, "nf", "Garside normal form", [&] { return to_json(normal_form(parse_braid(w))); })->add_option("word", w)->required();
    verb(g, "phi", "Image in SL2(Z)", [&] {
      Json j;
      j["matrix"] = to_json(phi(parse_braid(w)));
      return j;
    })->add_option("word", w)->required();
    auto* mul = verb(g, "mul", "Free-reduced product", [&] {
      Json j;
      j["word"] = to_string(braid_mul(parse_braid(w), parse_braid(w2)));
      return j;
    });
    mul->add_option("w1", w)->required();
    mul->add_option("w2", w2)->required();
    verb(g, "kernel", "k with w = Delta^(4k), or null", [&] {
      Json j;
      const auto k = kernel_power(parse_braid(w));
      j["kernel_power"] = k ? Json(*k) : Json(nullptr);
      return j;
    })->add_option("word", w)->required();
    verb(g, "lift", "Braid word mapping to an SL2(Z) matrix", [&] {
      const Mat2Z mat = parse_mat2z(m);
      const BraidWord lifted = lift_matrix(mat);
      Json j;
      j["word"] = to_string(lifted);
      j["length"] = lifted.size();
      j["matrix"] = to_json(phi(lifted));
      return j;
    })->add_option("matrix", m)->required();
    auto* eq = verb(g, "eq", "Equality in the braid group", [&] {
      Json j;
      j["equal"] = braid_equal(parse_braid(w), parse_braid(w2));
      return j;
    });
    eq->add_option("w1", w)->required();
    eq->add_option("w2", w2)->required();
  }

  void add_matrix() {
    auto* g = group("matrix", "Integer 2x2 matrices");
    auto& m = slot();
    auto& m2 = slot();
    verb(g, "det", "Determinant", [&] {
      Json j;
      j["det"] = to_json(parse_mat2q(m).det());
      return j;
    })->add_option("matrix", m)->required();
    verb(g, "classify", "Monoid and group membership", [&] {
      const auto c = classify(parse_mat2z(m));
      Json j;
      j["E"] = c.in_EZ;
      j["E+"] = c.in_EpZ;
      j["GL2"] = c.in_GL2Z;
      j["SL2"] = c.in_SL2Z;
      return j;
    })->add_option("matrix", m)->required();
    verb(g, "hnf", "Row Hermite normal form", [&] {
      Json j;
      j["hnf"] = to_json(row_hnf(parse_mat2z(m)));
      return j;
    })->add_option("matrix", m)->required();
    verb(g, "inverse", "Rational inverse", [&] {
      Json j;
      j["inverse"] = to_json(inverse(parse_mat2q(m)));
      return j;
    })->add_option("matrix", m)->required();
    auto* mul = verb(g, "mul", "Product", [&] {
      Json j;
      j["product"] = to_json(parse_mat2q(m) * parse_mat2q(m2));
      return j;
    });
    mul->add_option("m1", m)->required();
    mul->add_option("m2", m2)->required();
  }

  void add_cover() {
    auto* g = group("cover", "Universal-cover monoid of E+(Z)");
    auto& x = slot();
    auto& y = slot();
    verb(g, "z", "z(A) = (a+d) + i(b-c)", [&] {
      Json j;
      j["z"] = to_json(z_of(parse_mat2q(x)));
      return j;
    })->add_option("matrix", x)->required();
    auto* zeta = verb(g, "zeta", "Cocycle representative and carry", [&] {
      const Mat2Q a = parse_mat2q(x), b = parse_mat2q(y);
      Json j;
      j["zeta"] = to_json(eta_zeta(a, b));
      j["carry"] = cover_carry(a, b);
      return j;
    });
    zeta->add_option("a", x)->required();
    zeta->add_option("b", y)->required();
    verb(g, "lift", "Lift of a braid word", [&] { return to_json(lift_word(parse_braid(x))); })->add_option("word", x)->required();
    auto* mul = verb(g, "mul", "Product of cover elements [[..]]@w", [&] {
      return to_json(cover_mul(parse_rational_cover(x), parse_rational_cover(y)));
    });
    mul->add_option("x", x)->required();
    mul->add_option("y", y)->required();
    verb(g, "transpose", "Transpose anti-automorphism", [&] {
      return to_json(transpose_cover(parse_rational_cover(x)));
    })->add_option("x", x)->required();
    verb(g, "inverse", "Inverse in the rational cover", [&] {
      return to_json(cover_inverse(parse_rational_cover(x)));
    })->add_option("x", x)->required();
    verb(g, "scalar", "Lift of a positive scalar", [&] { return to_json(scalar_lift(parse_rational_arg(x))); })
        ->add_option("r", x)
        ->required();
  }

  void add_lattice() {
    auto* g = group("lattice", "Sublattices of Z^2 and finite subgroups of the torus");
    auto& a = slot();
    verb(g, "count", "Number of sublattices of index n", [&] {
      const Int n = parse_int_arg(a);
      Json j;
      j["index"] = to_json(n);
      j["count"] = enumerate_sublattices(n).size();
      return j;
    })->add_option("n", a)->required();
    verb(g, "enum", "Sublattices of index n", [&] {
      Json j = Json::array();
      for (const auto& l : enumerate_sublattices(parse_int_arg(a))) j.push_back(to_json(l));
      return j;
    })->add_option("n", a)->required();
    verb(g, "image", "Row lattice of a matrix", [&] { return to_json(image_lattice(parse_mat2z(a))); })
        ->add_option("matrix", a)
        ->required();
    verb(g, "subgroup", "Subgroup generated by torus points", [&] {
      const auto c = parse_subgroup(a);
      Json j = subgroup_json(c);
      j["elements"] = Json::array();
      for (const auto& e : c.elements()) j["elements"].push_back(to_json(e));
      return j;
    })->add_option("points", a)->required();
    verb(g, "matrix", "Isogeny A_C with kernel C", [&] {
      Json j;
      j["matrix"] = to_json(matrix_from_subgroup(parse_subgroup(a)));
      return j;
    })->add_option("points", a)->required();
    verb(g, "kernel", "Kernel of an isogeny", [&] { return subgroup_json(kernel_subgroup(parse_mat2z(a))); })
        ->add_option("matrix", a)
        ->required();
  }

  void add_orbit() {
    auto* g = group("orbit", "Finite orbit category of the torus");
    auto& a = slot();
    auto& b = slot();
    auto* hom = verb(g, "hom", "Whether T/C -> T/C' exists", [&] {
      const OrbitObject c{parse_subgroup(a)}, c2{parse_subgroup(b)};
      Json j;
      j["exists"] = hom_exists(c, c2);
      return j;
    });
    hom->add_option("source", a)->required();
    hom->add_option("target", b)->required();
    auto* act = verb(g, "act", "Isogeny action on a finite subgroup", [&] {
      return subgroup_json(isogeny_act(parse_mat2z(a), OrbitObject{parse_subgroup(b)}).subgroup);
    });
    act->add_option("matrix", a)->required();
    act->add_option("points", b)->required();
    auto* poset = verb(g, "poset", "Factorization poset of isogenies up to GL2(Z)", [&] {
      const auto p = factorization_poset(opts_.max < 0 ? 6 : opts_.max);
      Json j = Json::array();
      for (std::size_t i = 0; i < p.objects.size(); ++i) {
        Json o;
        o["hnf"] = to_json(p.objects[i]);
        o["kernel"] = to_json(p.kernels[i]);
        o["covers"] = p.covers(i);
        j.push_back(std::move(o));
      }
      return j;
    });
    poset->add_option("--max", opts_.max, "Largest determinant (default 6)");
  }

  void add_sd() {
    auto* g = group("sd", "Semidirect products of the torus with its symmetry monoids");
    auto& a = slot();
    auto& b = slot();
    auto* mul = verb(g, "mul", "Product g h", [&] { return to_json(sd_mul(parse_semidirect(a), parse_semidirect(b))); });
    mul->add_option("element", a)->required();
    mul->add_option("other", b)->required();
    auto* apply = verb(g, "apply", "Affine action on a torus point", [&] {
      const Vec2Q q = parse_vec2q(b);
      Json j;
      j["point"] = to_json(aff_apply(parse_semidirect(a), TorusPoint(q.x, q.y)).vec());
      return j;
    });
    apply->add_option("element", a)->required();
    apply->add_option("point", b)->required();
    verb(g, "inverse", "Inverse, or null when the linear part is not invertible", [&] {
      const auto inv = sd_inverse(parse_semidirect(a));
      Json j;
      j["invertible"] = inv.has_value();
      j["inverse"] = inv ? to_json(*inv) : Json(nullptr);
      return j;
    })->add_option("element", a)->required();
  }

  void add_hh() {
    auto* g = group("hh", "Hochschild homology of finite-dimensional algebras");
    auto& alg = slot();
    auto& order = slot();
    auto add_norm = [&](CLI::App* v) {
      v->add_flag("--normalized", opts_.normalized, "Use the normalized complex (default)");
      v->add_flag("--unnormalized", opts_.unnormalized, "Use the full cyclic bar complex");
    };
    verb(g, "validate", "Check associativity, unit and interchange", [&] {
      const auto spec = load_algebra(alg);
      Json j;
      j["algebra"] = to_json(validate_algebra(spec.algebra), spec.algebra.labels);
      if (spec.second) {
        j["two_algebra"] = to_json(validate_two_algebra({spec.algebra, *spec.second}), spec.algebra.labels);
      } else {
        j["diagonal_two_algebra"] = to_json(validate_two_algebra(diagonal_two_algebra(spec.algebra)), spec.algebra.labels);
      }
      return j;
    })->add_option("algebra", alg)->required();
    auto* betti = verb(g, "betti", "Betti numbers of HH_*", [&] {
      const auto spec = load_algebra(alg);
      const auto report = validate_algebra(spec.algebra);
      if (!report.valid()) throw DomainError("algebra is not unital associative: " + describe(report, spec.algebra));
      Json j = to_json(hh_betti(spec.algebra, max_or(opts_, 5), !opts_.unnormalized));
      j["normalized"] = !opts_.unnormalized;
      return j;
    });
    betti->add_option("algebra", alg)->required();
    betti->add_option("--max", opts_.max, "Truncation degree (default 5)");
    add_norm(betti);
    verb(g, "hh0", "dim A/[A,A]", [&] {
      Json j;
      j["hh0"] = hh0_direct(load_algebra(alg).algebra);
      return j;
    })->add_option("algebra", alg)->required();
    auto* secondary = verb(g, "secondary", "Betti numbers of secondary Hochschild homology", [&] {
      const auto spec = load_algebra(alg);
      const TwoAlgebra two = spec.second ? TwoAlgebra{spec.algebra, *spec.second} : diagonal_two_algebra(spec.algebra);
      IterationOrder o = IterationOrder::FirstMu1;
      if (order == "mu2") {
        o = IterationOrder::FirstMu2;
      } else if (order != "mu1") {
        throw ParseError("--order must be mu1 or mu2");
      }
      Json j = to_json(secondary_hh_betti(two, max_or(opts_, 4), o, !opts_.unnormalized));
      j["order"] = order;
      j["normalized"] = !opts_.unnormalized;
      return j;
    });
    order = "mu1";
    secondary->add_option("algebra", alg)->required();
    secondary->add_option("--max", opts_.max, "Truncation total degree (default 4)");
    secondary->add_option("--order", order, "Inner product: mu1 or mu2");
    add_norm(secondary);
    auto& p = slot();
    auto& q = slot();
    auto* rot = verb(g, "rotations", "The two rotations on the unnormalized C_{p,q}", [&] {
      const auto spec = load_algebra(alg);
      const TwoAlgebra two = spec.second ? TwoAlgebra{spec.algebra, *spec.second} : diagonal_two_algebra(spec.algebra);
      const int pp = to_int64(parse_int_arg(p)), qq = to_int64(parse_int_arg(q));
      const auto [t1, t2] = bicyclic_rotations(two, pp, qq);
      Json j;
      j["dim"] = t1.rows();
      j["commute"] = t1 * t2 == t2 * t1;
      if (t1.rows() <= 64) {
        j["outer"] = to_json(t1);
        j["inner"] = to_json(t2);
      }
      return j;
    });
    rot->add_option("algebra", alg)->required();
    rot->add_option("p", p)->required();
    rot->add_option("q", q)->required();
  }

  void add_selftest() {
    auto& suite = slot();
    suite = "all";
    auto* v = verb(&app_, "selftest", "Property suites", [&] { return run_selftest(suite, opts_.seed); });
    v->add_option("suite", suite, "cocycle, duality, homology or all")->check(CLI::IsMember(selftest_suites()));
    v->add_option("--seed", opts_.seed, "Random seed (default 7)");
  }

  static std::string describe(const ValidationReport& r, const StructureConstantAlgebra& a) {
    return r.violations.empty() ? r.messages.front() : r.violations.front().describe(a.labels);
  }

  CLI::App app_;
  Options opts_;
  std::deque<std::string> args_;
  Action action_;
};

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  return cli.run(argc, argv);
}
