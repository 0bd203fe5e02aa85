#include "qhess/verify.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <initializer_list>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "qhess/classical_f.hpp"
#include "qhess/coordinate_ring.hpp"
#include "qhess/hessenberg.hpp"
#include "qhess/poly_io.hpp"
#include "qhess/quantized.hpp"
#include "qhess/symmetric.hpp"

namespace qhess {

bool VerificationReport::passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

bool VerificationReport::resource_exhausted() const {
  for (const auto& c : checks)
    if (c.resource_error) return true;
  return false;
}

std::size_t VerificationReport::failure_count() const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (!c.pass) ++n;
  return n;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite << " (n_max=" << n_max << ")\n";
  for (const auto& c : checks) {
    os << (c.pass ? "  pass  " : (c.resource_error ? "  LIMIT " : "  FAIL  ")) << c.id;
    if (!c.params.empty()) os << " [" << c.params << "]";
    if (!c.pass && !c.witness.empty()) os << "\n        witness: " << c.witness;
    os << "\n";
  }
  os << (passed() ? "PASS" : "FAIL") << ": " << checks.size() - failure_count() << "/"
     << checks.size() << " checks in " << wall_seconds << "s\n";
  return os.str();
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json jchecks = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json jc = {{"id", c.id}, {"params", c.params}, {"pass", c.pass}};
    if (c.resource_error) jc["resource_error"] = true;
    if (!c.pass && !c.witness.empty()) jc["witness"] = c.witness;
    jchecks.push_back(std::move(jc));
  }
  return {{"suite", suite},
          {"n_max", n_max},
          {"passed", passed()},
          {"wall_seconds", wall_seconds},
          {"checks", jchecks}};
}

namespace {

// A check returns an empty string on pass, a witness on failure.
using CheckFn = std::function<std::string()>;

class Suite {
 public:
  void add(std::string id, std::string params, CheckFn fn) {
    items_.push_back({std::move(id), std::move(params), std::move(fn)});
  }

  std::vector<CheckResult> run(unsigned threads) {
    std::vector<CheckResult> results(items_.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::size_t at = next.fetch_add(1);
        if (at >= items_.size()) return;
        CheckResult& r = results[at];
        r.id = items_[at].id;
        r.params = items_[at].params;
        try {
          r.witness = items_[at].fn();
          r.pass = r.witness.empty();
        } catch (const ResourceLimitError& e) {
          r.pass = false;
          r.resource_error = true;
          r.witness = e.what();
        } catch (const std::exception& e) {
          r.pass = false;
          r.witness = std::string("exception: ") + e.what();
        }
      }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::stable_sort(results.begin(), results.end(), [](const CheckResult& a, const CheckResult& b) {
      return std::tie(a.id, a.params) < std::tie(b.id, b.params);
    });
    return results;
  }

 private:
  struct Item {
    std::string id, params;
    CheckFn fn;
  };
  std::vector<Item> items_;
};

std::string params_of(std::initializer_list<std::pair<const char*, long>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) os << ' ';
    first = false;
    os << k << '=' << v;
  }
  return os.str();
}

std::string expect_equal(const Polynomial& a, const Polynomial& b) {
  if (a == b) return {};
  return "lhs = " + to_text(a) + " ; rhs = " + to_text(b);
}

std::string expect_true(bool ok, const std::string& what) { return ok ? std::string{} : what; }

constexpr int kGroebnerCap = 4;       // spec-stated bound for Groebner-backed checks
constexpr int kCertificateCap = 5;    // bound for exchange/cofactor certificates
constexpr int kInvolutionBound = 7;   // exhaustive dual checks

// ---------------------------------------------------------------- fij suite

void build_fij(Suite& s, int n_max) {
  auto reg = Registry::xs(n_max);
  for (int j = 1; j <= n_max; ++j) {
    s.add("fij/base", params_of({{"j", j}}), [reg, j] {
      Polynomial expect(reg);
      for (int k = 1; k <= j; ++k) expect += Polynomial::variable(reg, reg->x(k));
      return expect_equal(classical_f(reg, j, j, FMethod::closed), expect);
    });
    for (int i = j; i <= n_max; ++i) {
      s.add("fij/agreement", params_of({{"i", i}, {"j", j}}), [reg, i, j] {
        Polynomial closed = classical_f(reg, i, j, FMethod::closed);
        for (FMethod m : {FMethod::recursion, FMethod::eh, FMethod::determinant}) {
          Polynomial other = classical_f(reg, i, j, m);
          if (other != closed) return expect_equal(closed, other);
        }
        return std::string{};
      });
      s.add("fij/degree", params_of({{"i", i}, {"j", j}}), [reg, i, j] {
        Polynomial f = classical_f(reg, i, j);
        if (f.homogeneous_degree() != std::optional<long>(2 * (i - j + 1)))
          return "inhomogeneous or wrong degree: " + to_text(f);
        for (VarId id : f.support())
          if (reg->var(id).a > i) return "support exceeds x" + std::to_string(i);
        return std::string{};
      });
    }
  }
  for (int i = 1; i <= n_max; ++i)
    s.add("fij/lemma62", params_of({{"i", i}}), [reg, i] {
      Polynomial rhs(reg);
      for (int k = 0; k <= i - 1; ++k) {
        Polynomial t = Rational(i - k) * elementary(reg, k, i) *
                       Polynomial::term(reg, 1, Monomial::variable(*reg, reg->x(1), i - k));
        rhs += (k % 2 == 0) ? t : -t;
      }
      return expect_equal(classical_f(reg, i, 1, FMethod::closed), rhs);
    });
}

// ------------------------------------------------------------------ E suite

void build_E(Suite& s, int n_max) {
  auto reg = Registry::full(n_max);
  for (int n = 1; n <= n_max; ++n)
    for (int i = 1; i <= n; ++i) {
      s.add("E/agreement", params_of({{"i", i}, {"n", n}}), [reg, i, n] {
        Polynomial charpoly = quantized_elementary(reg, i, n, EMethod::charpoly);
        Polynomial rec = quantized_elementary(reg, i, n, EMethod::recursion);
        Polynomial strings = quantized_elementary(reg, i, n, EMethod::strings);
        if (charpoly != rec) return expect_equal(charpoly, rec);
        return expect_equal(charpoly, strings);
      });
      s.add("E/degree-support", params_of({{"i", i}, {"n", n}}), [reg, i, n] {
        Polynomial e = quantized_elementary(reg, i, n);
        if (e.homogeneous_degree() != std::optional<long>(2 * i))
          return "wrong degree: " + to_text(e);
        for (VarId id : e.support()) {
          const Variable& v = reg->var(id);
          if (v.kind == VarKind::x && v.a > n) return std::string("support exceeds x range");
          if (v.kind == VarKind::q && v.b > n) return std::string("support exceeds q range");
          if (v.kind == VarKind::z || v.kind == VarKind::lambda)
            return std::string("unexpected variable kind");
        }
        return std::string{};
      });
      s.add("E/classical-limit", params_of({{"i", i}, {"n", n}}), [reg, i, n] {
        return expect_equal(classical_limit(quantized_elementary(reg, i, n)),
                            elementary(reg, i, n));
      });
    }
  s.add("E/worked-examples", "", [reg] {
    struct Case {
      int i, n;
      const char* text;
    };
    for (const Case& c : {Case{1, 1, "x1"}, Case{1, 2, "x1 + x2"}, Case{1, 3, "x1 + x2 + x3"},
                          Case{2, 2, "x1*x2 + q1_2"},
                          Case{2, 3, "x1*x2 + x1*x3 + x2*x3 + q1_2 + q2_3"},
                          Case{3, 3, "x1*x2*x3 + q2_3*x1 + q1_2*x3 + q1_3"}}) {
      if (c.n > reg->rank()) continue;
      Polynomial got = quantized_elementary(reg, c.i, c.n);
      Polynomial expect = parse_text(reg, c.text);
      if (got != expect) return expect_equal(got, expect);
    }
    return std::string{};
  });
  // truncations
  for (int n = 2; n <= n_max; ++n) {
    s.add("hE/full-function", params_of({{"n", n}}), [reg, n] {
      auto h = HessenbergFunction::full(n);
      if (!h.q_vanishing_set().empty()) return std::string("expected empty vanishing set");
      return expect_equal(truncated_quantized_elementary(reg, h, n, n),
                          quantized_elementary(reg, n, n));
    });
    s.add("hE/identity-function", params_of({{"n", n}}), [reg, n] {
      auto h = HessenbergFunction::identity(n);
      for (int i = 1; i <= n; ++i) {
        Polynomial t = truncated_quantized_elementary(reg, h, i, n);
        if (t != elementary(reg, i, n)) return expect_equal(t, elementary(reg, i, n));
      }
      return std::string{};
    });
  }
  if (n_max >= 5)
    s.add("hE/worked-example", "n=5", [reg] {
      auto h = HessenbergFunction::make({3, 4, 4, 5, 5});
      std::map<VarId, Rational> zeros = {{reg->q(1, 3), 0}, {reg->q(1, 4), 0},
                                         {reg->q(1, 5), 0}, {reg->q(2, 5), 0}};
      for (int i = 1; i <= 5; ++i) {
        Polynomial expect = quantized_elementary(reg, i, 5).substitute_values(zeros);
        Polynomial got = truncated_quantized_elementary(reg, h, i, 5);
        if (got != expect) return expect_equal(got, expect);
      }
      return std::string{};
    });
}

// ------------------------------------------------------------------ F suite

void build_F(Suite& s, int n_max) {
  auto reg = Registry::xq(n_max);
  for (int j = 1; j <= n_max; ++j)
    for (int i = j; i <= n_max; ++i) {
      s.add("F/agreement", params_of({{"i", i}, {"j", j}}), [reg, i, j] {
        Polynomial qz = quantized_f(reg, i, j, QFMethod::quantize);
        Polynomial det = quantized_f(reg, i, j, QFMethod::determinant);
        Polynomial rec = quantized_f(reg, i, j, QFMethod::recursion);
        if (qz != det) return expect_equal(qz, det);
        return expect_equal(qz, rec);
      });
      s.add("F/degree-support", params_of({{"i", i}, {"j", j}}), [reg, i, j] {
        Polynomial f = quantized_f(reg, i, j);
        if (f.homogeneous_degree() != std::optional<long>(2 * (i - j + 1)))
          return "wrong degree: " + to_text(f);
        for (VarId id : f.support()) {
          const Variable& v = reg->var(id);
          if (v.kind == VarKind::x && v.a > i) return std::string("support exceeds x range");
          if (v.kind == VarKind::q && v.b > i) return std::string("support exceeds q range");
        }
        return std::string{};
      });
      s.add("F/classical-limit", params_of({{"i", i}, {"j", j}}), [reg, i, j] {
        return expect_equal(classical_limit(quantized_f(reg, i, j)),
                            classical_f(reg, i, j, FMethod::closed));
      });
      s.add("F/expand-reconstruct", params_of({{"i", i}, {"j", j}}), [reg, i, j] {
        Polynomial f = classical_f(reg, i, j, FMethod::closed);
        auto expansion = expand_standard(f, i);
        Polynomial back(reg);
        for (const auto& [idx, c] : expansion) {
          if (!is_integer(c))
            return "non-integer expansion coefficient " + rational_to_string(c);
          back += c * std_elem_monomial(reg, idx);
        }
        return expect_equal(back, f);
      });
    }
  s.add("F/worked-examples", "", [reg] {
    struct Case {
      int i, j;
      const char* text;
    };
    for (const Case& c :
         {Case{2, 1, "x1^2 - x1*x2 - 2*q1_2"},
          Case{3, 2, "x1^2 + x2^2 - x1*x3 - x2*x3 - 2*q1_2 - 2*q2_3"},
          Case{3, 1,
               "x1^3 - x1^2*x2 - x1^2*x3 + x1*x2*x3 - 3*q1_2*x1 - q1_2*x2 + q2_3*x1 + "
               "2*q1_2*x3 + 3*q1_3"}}) {
      if (c.i > reg->rank()) continue;
      Polynomial got = quantized_f(reg, c.i, c.j);
      Polynomial expect = parse_text(reg, c.text);
      if (got != expect) return expect_equal(got, expect);
    }
    return std::string{};
  });
  for (int j = 1; j < n_max; ++j)
    s.add("F/subdiagonal-form", params_of({{"j", j}}), [reg, j] {
      // F_{j+1,j} = sum_k ((x_k - x_{j+1}) x_k - 2 q_{k,k+1})
      Polynomial expect(reg);
      for (int k = 1; k <= j; ++k) {
        Polynomial xk = Polynomial::variable(reg, reg->x(k));
        Polynomial xj1 = Polynomial::variable(reg, reg->x(j + 1));
        expect += (xk - xj1) * xk - Rational(2) * Polynomial::variable(reg, reg->q(k, k + 1));
      }
      return expect_equal(quantized_f(reg, j + 1, j), expect);
    });
}

// ------------------------------------------------- divided-difference suite

void build_divided_difference(Suite& s, int n_max) {
  auto reg = Registry::xs(n_max + 1);
  for (int j = 1; j <= n_max; ++j)
    for (int i = j + 1; i <= n_max; ++i)
      for (int k = 1; k <= n_max; ++k)
        s.add("dd/lemma61", params_of({{"i", i}, {"j", j}, {"k", k}}), [reg, i, j, k] {
          Polynomial got = divided_difference(classical_f(reg, i, j), k);
          Polynomial expect(reg);
          if (k == i)
            expect = -classical_f(reg, i - 1, j);
          else if (k == j)
            expect = classical_f(reg, i, j + 1);
          return expect_equal(got, expect);
        });
  for (int i = 1; i <= n_max; ++i)
    for (int k = 1; k <= n_max; ++k)
      s.add("dd/lemma63", params_of({{"i", i}, {"k", k}}), [reg, i, k] {
        return expect_equal(divided_difference(complete(reg, k, i), i),
                            complete(reg, k - 1, i + 1));
      });
  for (int n = 1; n <= n_max; ++n)
    for (int m = 1; m <= n; ++m)
      s.add("dd/newton-eh", params_of({{"m", m}, {"n", n}}), [reg, m, n] {
        Polynomial acc(reg);
        for (int i = 0; i <= m; ++i) {
          Polynomial t = elementary(reg, i, n) * complete(reg, m - i, n);
          acc += (i % 2 == 0) ? t : -t;
        }
        return expect_true(acc.is_zero(), "nonzero: " + to_text(acc));
      });
  for (int i = 1; i <= n_max; ++i)
    for (int k = 1; k <= i; ++k)
      s.add("dd/newton-ep", params_of({{"k", k}, {"i", i}}), [reg, k, i] {
        Polynomial rhs(reg);
        for (int l = 1; l <= k; ++l) {
          Polynomial t = power_sum(reg, l, i) * elementary(reg, k - l, i);
          rhs += (l % 2 == 1) ? t : -t;
        }
        return expect_equal(Rational(k) * elementary(reg, k, i), rhs);
      });
  s.add("dd/degree-drop", "", [reg, n_max] {
    int i = std::max(2, n_max), j = 1;
    Polynomial d = divided_difference(classical_f(reg, i, j), i);
    if (d.is_zero()) return std::string("unexpected zero");
    return expect_true(d.homogeneous_degree() == std::optional<long>(2 * (i - j + 1) - 2),
                       "degree did not drop by 2");
  });
}

// ------------------------------------------------- determinant-props suite

Polynomial random_polynomial(const RegistryPtr& reg, std::mt19937_64& rng, int max_terms,
                             int max_exp, int max_vars_per_term) {
  std::uniform_int_distribution<int> coef_dist(-9, 9);
  std::uniform_int_distribution<int> exp_dist(1, max_exp);
  std::uniform_int_distribution<int> nvar_dist(0, max_vars_per_term);
  std::uniform_int_distribution<VarId> var_dist(0, static_cast<VarId>(reg->size() - 1));
  std::uniform_int_distribution<int> nterm_dist(0, max_terms);
  Polynomial out(reg);
  int terms = nterm_dist(rng);
  for (int t = 0; t < terms; ++t) {
    std::vector<Monomial::Factor> factors;
    int nv = nvar_dist(rng);
    for (int v = 0; v < nv; ++v) factors.emplace_back(var_dist(rng), exp_dist(rng));
    out.add_term(Monomial(*reg, std::move(factors)), coef_dist(rng));
  }
  return out;
}

void build_determinant_props(Suite& s, int n_max, std::uint64_t seed) {
  auto reg = Registry::xs(n_max);
  auto regq = Registry::xq(n_max);
  auto reg3 = Registry::full(3);

  for (int trial = 0; trial < 12; ++trial) {
    s.add("poly/ring-axioms", params_of({{"trial", trial}}), [reg3, seed, trial] {
      std::mt19937_64 rng(seed + 1000 + static_cast<unsigned>(trial));
      Polynomial a = random_polynomial(reg3, rng, 4, 3, 3);
      Polynomial b = random_polynomial(reg3, rng, 4, 3, 3);
      Polynomial c = random_polynomial(reg3, rng, 4, 3, 3);
      Polynomial zero(reg3);
      Polynomial one = Polynomial::constant(reg3, 1);
      if ((a + b) + c != a + (b + c)) return std::string("additive associativity");
      if (a + b != b + a) return std::string("additive commutativity");
      if (a * b != b * a) return std::string("multiplicative commutativity");
      if ((a * b) * c != a * (b * c)) return std::string("multiplicative associativity");
      if (a * (b + c) != a * b + a * c) return std::string("distributivity");
      if (a + zero != a || a * one != a) return std::string("identities");
      if (!(a - a).is_zero()) return std::string("additive inverse");
      auto da = a.homogeneous_degree();
      auto db = b.homogeneous_degree();
      if (da && db && !a.is_zero() && !b.is_zero()) {
        auto dab = (a * b).homogeneous_degree();
        if (!(a * b).is_zero() && dab != std::optional<long>(*da + *db))
          return std::string("product degree");
      }
      return std::string{};
    });
    s.add("poly/serde-roundtrip", params_of({{"trial", trial}}), [reg3, seed, trial] {
      std::mt19937_64 rng(seed + 2000 + static_cast<unsigned>(trial));
      Polynomial p = random_polynomial(reg3, rng, 6, 4, 4);
      Polynomial back = parse_text(reg3, to_text(p));
      if (back != p) return "text roundtrip: " + to_text(p);
      Polynomial back2 = poly_from_json(reg3, poly_to_json(p));
      if (back2 != p) return "json roundtrip: " + to_text(p);
      return std::string{};
    });
    s.add("det/strategies-random", params_of({{"trial", trial}}), [reg3, seed, trial] {
      std::mt19937_64 rng(seed + 3000 + static_cast<unsigned>(trial));
      std::uniform_int_distribution<int> order_dist(1, 4);
      int order = order_dist(rng);
      PolyMatrix m(reg3, order);
      for (int r = 0; r < order; ++r)
        for (int c = 0; c < order; ++c) m.set(r, c, random_polynomial(reg3, rng, 2, 2, 2));
      return expect_equal(m.determinant(DetStrategy::cofactor),
                          m.determinant(DetStrategy::bareiss));
    });
  }
  s.add("det/charpoly-m2", "", [] {
    auto reg = Registry::full(2);
    PolyMatrix m2 = quantized_matrix(reg, 2);
    PolyMatrix lhs(reg, 2);
    Polynomial lam = Polynomial::variable(reg, reg->lambda_id());
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) lhs.set(r, c, (r == c ? lam : Polynomial(reg)) - m2.at(r, c));
    Polynomial expect = parse_text(reg, "lam^2 - x1*lam - x2*lam + x1*x2 + q1_2");
    return expect_equal(lhs.determinant(), expect);
  });
  for (int j = 1; j <= n_max; ++j)
    for (int i = j; i <= n_max; ++i) {
      s.add("eh/prop64", params_of({{"i", i}, {"j", j}}), [reg, i, j] {
        return expect_equal(classical_f(reg, i, j, FMethod::eh),
                            classical_f(reg, i, j, FMethod::closed));
      });
      s.add("fdet/thm69", params_of({{"i", i}, {"j", j}}), [reg, i, j] {
        return expect_equal(classical_f(reg, i, j, FMethod::determinant),
                            classical_f(reg, i, j, FMethod::closed));
      });
      s.add("Fdet/cor610", params_of({{"i", i}, {"j", j}}), [regq, i, j] {
        return expect_equal(quantized_f(regq, i, j, QFMethod::determinant),
                            quantized_f(regq, i, j, QFMethod::quantize));
      });
    }
  for (int n = 1; n <= n_max; ++n)
    for (int m = 1; m <= n; ++m) {
      s.add("matfac/prop65", params_of({{"m", m}, {"n", n}}), [reg, m, n] {
        return expect_true(check_matrix_factorization(reg, m, n), "factorization mismatch");
      });
      s.add("hdet/prop66", params_of({{"m", m}, {"n", n}}), [reg, m, n] {
        return expect_true(check_h_determinant(reg, m, n), "h determinant mismatch");
      });
    }
  for (int i = 1; i <= n_max; ++i)
    for (int k = 1; k <= i; ++k) {
      s.add("ef/thm68", params_of({{"k", k}, {"i", i}}), [reg, k, i] {
        return expect_true(check_e_f_exchange(reg, k, i), "exchange identity failed");
      });
      s.add("eki/det-formula", params_of({{"k", k}, {"i", i}}), [reg, k, i] {
        return expect_equal(elementary_from_f_determinant(reg, k, i), elementary(reg, k, i));
      });
      s.add("EF/remark-exchange", params_of({{"k", k}, {"i", i}}), [regq, k, i] {
        return expect_true(check_E_F_exchange(regq, k, i), "exchange identity failed");
      });
      s.add("Eki/remark-det", params_of({{"k", k}, {"i", i}}), [regq, k, i] {
        return expect_equal(quantized_elementary_from_F_determinant(regq, k, i),
                            quantized_elementary(regq, k, i));
      });
    }
}

// -------------------------------------------------------------- main3 suite

void build_main3(Suite& s, int n_max) {
  auto reg = Registry::full(n_max);
  for (int n = 2; n <= n_max; ++n)
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= i; ++j) {
        s.add("main3/identity", params_of({{"i", i}, {"j", j}, {"n", n}}), [reg, i, j, n] {
          return expect_true(check_phi_F_identity(reg, i, j, n), "phi(xi) != (-1)^(i-j) F");
        });
        s.add("main3/xi-closed-form", params_of({{"i", i}, {"j", j}, {"n", n}}),
              [reg, i, j, n] {
                Polynomial direct =
                    defining_minor(reg, OperatorChoice::regular_semisimple, n + 1 - j, n - i, n);
                return expect_equal(xi_minor_determinant(reg, i, j, n), direct);
              });
      }
  for (int n = 2; n <= n_max; ++n)
    for (int j = 1; j < n; ++j)
      for (int i = j + 1; i <= n; ++i)
        s.add("main3/nu-homogeneous", params_of({{"i", i}, {"j", j}, {"n", n}}), [reg, i, j, n] {
          Polynomial nu = defining_minor(reg, OperatorChoice::regular_nilpotent, i, j, n);
          return expect_true(
              nu.homogeneous_degree() == std::optional<long>(2 * (i - j + 1)),
              "nu degree mismatch: " + to_text(nu));
        });
  for (int n = 2; n <= std::min(n_max, kGroebnerCap); ++n)
    for (int c : {1, n + 1})
      s.add("main3/shift-invariance", params_of({{"n", n}, {"c", c}}), [reg, n, c] {
        std::vector<Rational> diag;
        for (int d = 1; d <= n; ++d) diag.push_back(Rational(d - c));
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l) {
            if (k == l) continue;
            Polynomial shifted = diagonal_operator_minor(reg, diag, k, l, n);
            Polynomial plain =
                defining_minor(reg, OperatorChoice::regular_semisimple, k, l, n);
            if (shifted != plain) return expect_equal(shifted, plain);
          }
        return std::string{};
      });
}

// -------------------------------------------------------------- phi-q suite

void build_phi_q(Suite& s, int n_max, std::uint64_t seed, const MonomialOrder& order) {
  const int cap = std::min(n_max, kGroebnerCap);
  for (int n = 2; n <= cap; ++n) {
    auto reg = Registry::full(n);
    std::vector<Polynomial> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(quantized_elementary(reg, i, n));
    auto gb = std::make_shared<GroebnerBasis>(buchberger(gens, order));
    for (int r = 1; r < n; ++r)
      for (int ss = r + 1; ss <= n; ++ss)
        s.add("phiq/identity", params_of({{"r", r}, {"s", ss}, {"n", n}}), [reg, gb, r, ss, n] {
          return expect_true(check_phi_q_identity(reg, r, ss, n, *gb),
                             "normal form not zero");
        });
    for (int trial = 0; trial < 4; ++trial) {
      s.add("nf/idempotent-linear", params_of({{"n", n}, {"trial", trial}}),
            [reg, gb, seed, trial, n] {
              std::mt19937_64 rng(seed + 4000 + static_cast<unsigned>(trial) + 100 * n);
              Polynomial p = random_polynomial(reg, rng, 5, 3, 3);
              Polynomial q = random_polynomial(reg, rng, 5, 3, 3);
              Polynomial np = normal_form(p, *gb);
              if (normal_form(np, *gb) != np) return std::string("not idempotent");
              Polynomial sum = normal_form(p + q, *gb);
              if (sum != np + normal_form(q, *gb)) return std::string("not additive");
              if (normal_form(p * Rational(3, 2), *gb) != np * Rational(3, 2))
                return std::string("not homogeneous over Q");
              return std::string{};
            });
    }
  }
  s.add("phiq/explicit-n2", "", [] {
    auto reg = Registry::full(2);
    // x1^2 - q12 = x1 (x1+x2) - (x1 x2 + q12): membership certificate at n = 2
    Polynomial x1 = Polynomial::variable(reg, reg->x(1));
    Polynomial combo = x1 * quantized_elementary(reg, 1, 2) - quantized_elementary(reg, 2, 2);
    Polynomial direct = x1 * x1 - Polynomial::variable(reg, reg->q(1, 2));
    return expect_equal(combo, direct);
  });
}

// ------------------------------------------------------ ideal-equality suite

void build_ideal_equality(Suite& s, int n_max, const MonomialOrder& order) {
  const int cert_cap = std::min(n_max, kCertificateCap);
  for (int n = 1; n <= cert_cap; ++n) {
    auto reg = Registry::xs(n);
    auto regq = Registry::xq(n);
    for (int j = 1; j <= n; ++j) {
      s.add("ideal/classical-f-in-e", params_of({{"n", n}, {"j", j}}), [reg, n, j] {
        auto coeffs = f_from_e_certificate(reg, n, j);
        Polynomial combo(reg);
        for (int k = 1; k <= n; ++k)
          combo += coeffs[static_cast<std::size_t>(k - 1)] * elementary(reg, k, n);
        return expect_equal(combo, classical_f(reg, n, j, FMethod::closed));
      });
      s.add("ideal/quantum-F-in-E", params_of({{"n", n}, {"j", j}}), [regq, n, j] {
        auto coeffs = F_from_E_certificate(regq, n, j);
        Polynomial combo(regq);
        for (int k = 1; k <= n; ++k)
          combo += coeffs[static_cast<std::size_t>(k - 1)] * quantized_elementary(regq, k, n);
        return expect_equal(combo, quantized_f(regq, n, j));
      });
    }
    for (int k = 1; k <= n; ++k) {
      s.add("ideal/classical-e-in-f", params_of({{"n", n}, {"k", k}}), [reg, n, k] {
        auto coeffs = e_from_f_certificate(reg, n, k);
        Polynomial combo(reg);
        for (int j = 1; j <= n; ++j)
          combo += coeffs[static_cast<std::size_t>(j - 1)] * classical_f(reg, n, j);
        return expect_equal(combo, elementary(reg, k, n));
      });
      s.add("ideal/quantum-E-in-F", params_of({{"n", n}, {"k", k}}), [regq, n, k] {
        auto coeffs = E_from_F_certificate(regq, n, k);
        Polynomial combo(regq);
        for (int j = 1; j <= n; ++j)
          combo += coeffs[static_cast<std::size_t>(j - 1)] * quantized_f(regq, n, j);
        return expect_equal(combo, quantized_elementary(regq, k, n));
      });
    }
  }
  for (int n = 2; n <= std::min(n_max, kGroebnerCap); ++n) {
    s.add("ideal/groebner-classical", params_of({{"n", n}}), [n, order] {
      auto reg = Registry::xs(n);
      std::vector<Polynomial> fs, es;
      for (int j = 1; j <= n; ++j) fs.push_back(classical_f(reg, n, j));
      for (int i = 1; i <= n; ++i) es.push_back(elementary(reg, i, n));
      return expect_true(ideal_equal(fs, es, order), "ideals differ");
    });
    s.add("ideal/groebner-quantum", params_of({{"n", n}}), [n, order] {
      auto reg = Registry::xq(n);
      std::vector<Polynomial> Fs, Es;
      for (int j = 1; j <= n; ++j) Fs.push_back(quantized_f(reg, n, j));
      for (int i = 1; i <= n; ++i) Es.push_back(quantized_elementary(reg, i, n));
      return expect_true(ideal_equal(Fs, Es, order), "ideals differ");
    });
  }
  s.add("ideal/distinct-sanity", "", [order] {
    auto reg = Registry::xs(2);
    Polynomial x1 = Polynomial::variable(reg, reg->x(1));
    return expect_true(!ideal_equal({x1}, {x1 * x1}, order), "(x1) == (x1^2)?");
  });
}

// ------------------------------------------------------------- hilbert suite

// dim of the degree-d piece of the ideal spanned by monomial multiples of the
// generators, by exact row reduction (independent of the Groebner route)
std::int64_t macaulay_quotient_dim(const RegistryPtr& reg, const std::vector<Polynomial>& gens,
                                   const std::vector<VarId>& vars, long d) {
  std::vector<Monomial> monos;
  std::vector<Monomial::Factor> cur;
  std::function<void(std::size_t, long)> enumerate = [&](std::size_t vi, long left) {
    if (vi == vars.size()) {
      if (left == 0) monos.push_back(Monomial(*reg, cur));
      return;
    }
    const long deg = reg->degree(vars[vi]);
    enumerate(vi + 1, left);
    int pushed = 0;
    for (int e = 1; left - e * deg >= 0; ++e) {
      cur.emplace_back(vars[vi], 1);
      ++pushed;
      enumerate(vi + 1, left - e * deg);
    }
    while (pushed-- > 0) cur.pop_back();
  };
  enumerate(0, d);
  std::map<Monomial, std::size_t, CanonicalLess> index;
  for (const auto& m : monos) index.emplace(m, index.size());

  std::vector<std::vector<Rational>> rows;
  for (const auto& g : gens) {
    auto gd = g.homogeneous_degree();
    if (!gd || *gd > d) continue;
    std::vector<Monomial> shifts;
    std::vector<Monomial::Factor> cur2;
    std::function<void(std::size_t, long)> enum2 = [&](std::size_t vi, long left) {
      if (vi == vars.size()) {
        if (left == 0) shifts.push_back(Monomial(*reg, cur2));
        return;
      }
      const long deg = reg->degree(vars[vi]);
      enum2(vi + 1, left);
      int pushed = 0;
      for (int e = 1; left - e * deg >= 0; ++e) {
        cur2.emplace_back(vars[vi], 1);
        ++pushed;
        enum2(vi + 1, left - e * deg);
      }
      while (pushed-- > 0) cur2.pop_back();
    };
    enum2(0, d - *gd);
    for (const auto& sh : shifts) {
      std::vector<Rational> row(index.size(), Rational(0));
      for (const auto& [m, c] : g.terms()) row[index.at(m.times(sh))] = c;
      rows.push_back(std::move(row));
    }
  }
  // rank by Gaussian elimination
  std::size_t rank = 0;
  for (std::size_t col = 0; col < index.size() && rank < rows.size(); ++col) {
    std::size_t sel = rows.size();
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rows[r][col] != 0) {
        sel = r;
        break;
      }
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t c2 = col; c2 < index.size(); ++c2) rows[r][c2] -= f * rows[rank][c2];
    }
    ++rank;
  }
  return static_cast<std::int64_t>(index.size() - rank);
}

std::string series_to_string(const std::vector<std::int64_t>& coeffs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) os << ',';
    os << coeffs[i];
  }
  os << ']';
  return os.str();
}

void build_hilbert(Suite& s, int n_max, std::uint64_t seed, const MonomialOrder& order) {
  // Hessenberg combinatorics (exhaustive at fixed small bounds)
  s.add("hess/dual-example", "", [] {
    auto h = HessenbergFunction::make({3, 4, 4, 5, 5});
    auto d = h.dual();
    if (d.values() != std::vector<int>{2, 4, 5, 5, 5})
      return "dual gave " + d.to_csv();
    return std::string{};
  });
  static const std::int64_t catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 1; n <= kInvolutionBound; ++n) {
    s.add("hess/dual-involution", params_of({{"n", n}}), [n] {
      for (const auto& h : HessenbergFunction::all(n)) {
        auto d = h.dual();  // construction revalidates the invariants
        if (d.dual() != h) return "involution fails for " + h.to_csv();
        if (d.dimension() != h.dimension()) return "dimension differs for " + h.to_csv();
      }
      return std::string{};
    });
    s.add("hess/catalan-count", params_of({{"n", n}}), [n] {
      auto all = HessenbergFunction::all(n);
      return expect_true(static_cast<std::int64_t>(all.size()) == catalan[n],
                         "expected Catalan count");
    });
    s.add("hess/shaded-count", params_of({{"n", n}}), [n] {
      for (const auto& h : HessenbergFunction::all(n)) {
        int sum = 0;
        for (int j = 1; j <= n; ++j) sum += h(j);
        if (h.shaded_count() != sum) return "shaded count mismatch for " + h.to_csv();
      }
      return std::string{};
    });
  }

  const int cap = std::min(n_max, kGroebnerCap);
  for (int n = 2; n <= cap; ++n) {
    for (const auto& h : HessenbergFunction::all(n)) {
      s.add("hilbert/f-ideal-ci", params_of({{"n", n}}) + " h=" + h.to_csv(), [n, h, order] {
        auto reg = Registry::xs(n);
        std::vector<Polynomial> gens;
        std::vector<long> degrees;
        for (int j = 1; j <= n; ++j) {
          gens.push_back(classical_f(reg, h(j), j));
          degrees.push_back(2 * (h(j) - j + 1));
        }
        auto expect = complete_intersection_series(degrees);
        GroebnerBasis gb = buchberger(gens, order);
        HilbertSeries got =
            hilbert_series(gb, static_cast<long>(expect.size()) + 1);
        for (std::size_t dgr = 0; dgr < got.coeffs.size(); ++dgr) {
          std::int64_t want = dgr < expect.size() ? expect[dgr] : 0;
          if (got.coeffs[dgr] != want)
            return "series " + series_to_string(got.coeffs) + " != ci " +
                   series_to_string(expect);
        }
        return std::string{};
      });
      s.add("hilbert/redundant-ideal", params_of({{"n", n}}) + " h=" + h.to_csv(),
            [n, h, order] {
              auto reg = Registry::xs(n);
              std::vector<Polynomial> minimal, redundant;
              std::vector<long> degrees;
              for (int j = 1; j <= n; ++j) {
                minimal.push_back(classical_f(reg, h(j), j));
                degrees.push_back(2 * (h(j) - j + 1));
                for (int i = h(j); i <= n; ++i) redundant.push_back(classical_f(reg, i, j));
              }
              auto expect = complete_intersection_series(degrees);
              GroebnerBasis gb = buchberger(redundant, order);
              HilbertSeries got = hilbert_series(gb, static_cast<long>(expect.size()) + 1);
              for (std::size_t dgr = 0; dgr < got.coeffs.size(); ++dgr) {
                std::int64_t want = dgr < expect.size() ? expect[dgr] : 0;
                if (got.coeffs[dgr] != want)
                  return "series " + series_to_string(got.coeffs) + " != ci " +
                         series_to_string(expect);
              }
              return std::string{};
            });
    }
    s.add("dim/borel", params_of({{"n", n}}), [n, order] {
      auto reg = Registry::xs(n);
      std::vector<Polynomial> es;
      for (int i = 1; i <= n; ++i) es.push_back(elementary(reg, i, n));
      auto dim = quotient_dimension(buchberger(es, order));
      std::uint64_t factorial = 1;
      for (int t = 2; t <= n; ++t) factorial *= static_cast<std::uint64_t>(t);
      return expect_true(dim && *dim == factorial, "expected n! standard monomials");
    });
    s.add("dim/Qn-specialized", params_of({{"n", n}}), [n, order, seed] {
      auto reg = Registry::xq(n);
      std::mt19937_64 rng(seed + 7000 + static_cast<unsigned>(n));
      std::uniform_int_distribution<int> num(1, 40);
      std::map<VarId, Rational> values;
      std::set<Rational> used;
      for (VarId id : reg->q_ids()) {
        Rational v;
        do {
          v = Rational(num(rng), 1 + num(rng) % 7);
          v.canonicalize();
        } while (used.count(v));
        used.insert(v);
        values[id] = v;
      }
      std::vector<Polynomial> gens;
      for (int i = 1; i <= n; ++i)
        gens.push_back(quantized_elementary(reg, i, n).substitute_values(values));
      auto dim = quotient_dimension(buchberger(gens, order), reg->x_ids());
      std::uint64_t factorial = 1;
      for (int t = 2; t <= n; ++t) factorial *= static_cast<std::uint64_t>(t);
      return expect_true(dim && *dim == factorial, "expected n! standard monomials");
    });
  }

  // the quotient of the semisimple coordinate presentation by all quantum
  // parameters has the Hilbert series of C[x]/(f_{i,j} | i >= h*(j))
  for (int n = 2; n <= std::min(cap, 3); ++n)
    for (const auto& h : HessenbergFunction::all(n))
      s.add("hilbert/semisimple-mod-q", params_of({{"n", n}}) + " h=" + h.to_csv(),
            [n, h, order] {
              auto regq = Registry::xq(n);
              auto regx = Registry::xs(n);
              auto dual = h.dual();
              std::vector<Polynomial> fq, fx;
              for (const auto& g :
                   presentation_generators(regq, PresentationTarget::coordring_regular_semisimple,
                                           h))
                fq.push_back(g);
              for (VarId id : regq->q_ids()) fq.push_back(Polynomial::variable(regq, id));
              for (int j = 1; j <= n; ++j)
                for (int i = dual(j); i <= n; ++i) fx.push_back(classical_f(regx, i, j));
              long bound = 2 * dual.dimension() + 2;
              HilbertSeries a = hilbert_series(buchberger(fq, order), bound);
              HilbertSeries b = hilbert_series(buchberger(fx, order), bound);
              if (a.coeffs != b.coeffs)
                return "series " + series_to_string(a.coeffs) + " != " +
                       series_to_string(b.coeffs);
              return std::string{};
            });

  // independent Macaulay-style rank computation against the series
  for (int n = 2; n <= std::min(cap, 3); ++n)
    s.add("hilbert/brute-force", params_of({{"n", n}}), [n, order] {
      auto reg = Registry::xs(n);
      auto h = HessenbergFunction::full(n);
      std::vector<Polynomial> gens;
      for (int j = 1; j <= n; ++j) gens.push_back(classical_f(reg, n, j));
      long bound = 2 * h.dimension();
      HilbertSeries got = hilbert_series(buchberger(gens, order), bound);
      for (long d = 0; d <= bound; d += 2) {
        std::int64_t brute = macaulay_quotient_dim(reg, gens, reg->x_ids(), d);
        if (brute != got.coeffs[static_cast<std::size_t>(d)])
          return "degree " + std::to_string(d) + ": " + std::to_string(brute) +
                 " != " + std::to_string(got.coeffs[static_cast<std::size_t>(d)]);
      }
      return std::string{};
    });
}

}  // namespace

std::vector<std::int64_t> complete_intersection_series(const std::vector<long>& degrees) {
  std::vector<std::int64_t> acc{1};
  for (long d : degrees) {
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("generator degrees must be even >= 2");
    std::vector<std::int64_t> block(static_cast<std::size_t>(d - 1), 0);
    for (long t = 0; t <= d - 2; t += 2) block[static_cast<std::size_t>(t)] = 1;
    std::vector<std::int64_t> next(acc.size() + block.size() - 1, 0);
    for (std::size_t a = 0; a < acc.size(); ++a)
      for (std::size_t b = 0; b < block.size(); ++b) next[a + b] += acc[a] * block[b];
    acc = std::move(next);
  }
  return acc;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "fij-agreement", "E-agreement",  "F-agreement", "divided-difference",
      "determinant-props", "main3",    "phi-q",       "ideal-equality",
      "hilbert",       "all"};
  return names;
}

VerificationReport run_suite(const std::string& suite, const VerifyOptions& opt) {
  if (opt.n_max < 0 || (opt.n_max != 0 && opt.n_max < 2))
    throw std::invalid_argument("n_max must be at least 2");

  const bool groebner_suite = suite == "phi-q" || suite == "ideal-equality" || suite == "hilbert";
  int n_max = opt.n_max != 0 ? opt.n_max : (groebner_suite ? 4 : 5);

  Suite checks;
  auto dispatch = [&](const std::string& name) {
    int nm = opt.n_max != 0 ? opt.n_max : 5;
    int nm_gb = opt.n_max != 0 ? opt.n_max : 4;
    if (name == "fij-agreement")
      build_fij(checks, nm);
    else if (name == "E-agreement")
      build_E(checks, nm);
    else if (name == "F-agreement")
      build_F(checks, nm);
    else if (name == "divided-difference")
      build_divided_difference(checks, nm);
    else if (name == "determinant-props")
      build_determinant_props(checks, nm, opt.seed);
    else if (name == "main3")
      build_main3(checks, nm);
    else if (name == "phi-q")
      build_phi_q(checks, nm_gb, opt.seed, opt.order);
    else if (name == "ideal-equality")
      build_ideal_equality(checks, nm_gb, opt.order);
    else if (name == "hilbert")
      build_hilbert(checks, nm_gb, opt.seed, opt.order);
    else
      throw std::invalid_argument("unknown suite '" + name + "'");
  };

  auto start = std::chrono::steady_clock::now();
  if (suite == "all") {
    for (const auto& name : suite_names())
      if (name != "all") dispatch(name);
  } else {
    dispatch(suite);
  }

  VerificationReport report;
  report.suite = suite;
  report.n_max = n_max;
  report.checks = checks.run(opt.threads);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace qhess
