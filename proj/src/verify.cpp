#include "hyperlat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "hyperlat/catalog.hpp"
#include "hyperlat/errors.hpp"
#include "hyperlat/folding.hpp"
#include "hyperlat/lattice.hpp"
#include "hyperlat/numth.hpp"
#include "hyperlat/parallel.hpp"
#include "hyperlat/ribbon.hpp"
#include "hyperlat/theta.hpp"

namespace hyperlat {

namespace {

using Key = std::pair<std::string, int>;

std::string label(const std::string& name, int level) {
  return (name == "A" || name == "D") ? name + std::to_string(level) : name;
}

std::string join(const std::vector<BigInt>& v, std::size_t n) {
  std::ostringstream os;
  for (std::size_t i = 0; i < std::min(n, v.size()); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

// Lazily built module data shared by the checks of one run.
class Context {
 public:
  Context(const GoldenTable& g, unsigned threads) : golden(g), threads(threads) {}

  const GoldenTable& golden;
  unsigned threads;

  const RootSystem& system(const std::string& name, int level) {
    auto& slot = systems_[{name, level}];
    if (!slot) slot = std::make_unique<RootSystem>(get_module(name, level));
    return *slot;
  }

  const std::vector<RibbonPoint>& ribbon(const std::string& name, int level) {
    auto it = ribbons_.find({name, level});
    if (it == ribbons_.end()) it = ribbons_.emplace(Key{name, level}, build_ribbon(system(name, level))).first;
    return it->second;
  }

  const RootExpander& expander(const std::string& name, int level) {
    auto& slot = expanders_[{name, level}];
    if (!slot) {
      const RootSystem& sys = system(name, level);
      slot = std::make_unique<RootExpander>(sys, basis(sys, BasisChoice::B1));
    }
    return *slot;
  }

  const IntMatrix& gram(const std::string& name, int level) { return expander(name, level).gram(); }

  const std::vector<std::vector<BigInt>>& expansions(const std::string& name, int level) {
    auto it = expansions_.find({name, level});
    if (it == expansions_.end())
      it = expansions_.emplace(Key{name, level}, expander(name, level).expand_all(ribbon(name, level), threads)).first;
    return it->second;
  }

 private:
  std::map<Key, std::unique_ptr<RootSystem>> systems_;
  std::map<Key, std::vector<RibbonPoint>> ribbons_;
  std::map<Key, std::unique_ptr<RootExpander>> expanders_;
  std::map<Key, std::vector<std::vector<BigInt>>> expansions_;
};

struct Outcome {
  bool passed = true;
  std::string detail;
};

Outcome expect(bool ok, const std::string& detail) { return {ok, detail}; }

struct Check {
  int criterion;
  std::string name;
  std::optional<Key> module;
  bool slow;
  double budget;  // seconds, 0 for none
  std::function<Outcome(Context&)> run;
};

// Exhaustive count over the box |x_i| <= sqrt(2M K_ii), which contains every
// vector of norm <= 2M.
std::vector<BigInt> box_theta(const IntMatrix& a, std::size_t max_index) {
  const std::size_t n = a.rows();
  const RatMatrix k = rational_inverse(a);
  std::vector<long> bound(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational r = k(i, i) * static_cast<long>(2 * max_index);
    BigInt fl = r.get_num() / r.get_den();
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), fl.get_mpz_t());
    bound[i] = root.get_si();
  }
  std::vector<BigInt> out(max_index + 1, 0);
  std::vector<long> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -bound[i];
  for (;;) {
    BigInt norm = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) norm += a(i, j) * x[i] * x[j];
    if (norm <= 2 * static_cast<long>(max_index)) out[norm.get_ui() / 2] += 1;
    std::size_t i = 0;
    while (i < n && x[i] == bound[i]) x[i] = -bound[i], ++i;
    if (i == n) break;
    ++x[i];
  }
  return out;
}

IntMatrix cartan_a(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 2;
    if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = -1;
  }
  return m;
}

IntMatrix divide_exact(const IntMatrix& a, long d) {
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!mpz_divisible_ui_p(a(i, j).get_mpz_t(), d)) throw InvariantError("Gram matrix is not divisible by the rescaling factor");
      out(i, j) = a(i, j) / d;
    }
  return out;
}

std::vector<BigInt> nontrivial(const std::vector<BigInt>& divisors) {
  std::vector<BigInt> out;
  for (const auto& d : divisors)
    if (d != 1) out.push_back(d);
  return out;
}

std::vector<long> canonical_sign(std::vector<long> v) {
  for (long c : v) {
    if (c == 0) continue;
    if (c < 0)
      for (auto& u : v) u = -u;
    break;
  }
  return v;
}

// Is there a signed permutation of coordinates taking the set {+-a_i} onto {+-b_i}?
bool match_up_to_signed_permutation(const std::vector<std::vector<long>>& a, const std::vector<std::vector<long>>& b) {
  if (a.size() != b.size() || a.empty()) return a.size() == b.size();
  const std::size_t n = a.front().size();
  std::multiset<std::vector<long>> target;
  for (const auto& v : b) target.insert(canonical_sign(v));
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  do {
    for (unsigned long signs = 0; signs < (1ul << n); ++signs) {
      std::multiset<std::vector<long>> image;
      for (const auto& v : a) {
        std::vector<long> w(n);
        for (std::size_t i = 0; i < n; ++i) w[perm[i]] = ((signs >> i) & 1 ? -v[i] : v[i]);
        image.insert(canonical_sign(w));
      }
      if (image == target) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<Check> build_checks(const GoldenTable& g, const VerifyOptions& opt) {
  std::vector<Check> checks;
  auto add = [&](int c, std::string name, std::optional<Key> module, bool slow, double budget,
                 std::function<Outcome(Context&)> run) {
    checks.push_back({c, std::move(name), std::move(module), slow, budget, std::move(run)});
  };

  // 1. Counting.
  for (int k = 1; k <= 4; ++k)
    add(1, "ribbon size A" + std::to_string(k), Key{"A", k}, false, 0, [k](Context& ctx) {
      const std::size_t got = ctx.ribbon("A", k).size();
      const std::size_t want = ctx.golden.ribbon_sizes.at(k - 1);
      return expect(got == want, std::to_string(got) + " positive higher roots, expected " + std::to_string(want));
    });
  for (const auto& row : g.rows)
    add(1, "root count " + label(row.name, row.level), Key{row.name, row.level}, false, 0,
        [name = row.name, level = row.level](Context& ctx) {
          const GoldenRow* r = ctx.golden.find_row(name, level);
          const std::size_t got = 2 * ctx.ribbon(name, level).size();
          return expect(got == r->root_count, "|R| = " + std::to_string(got) + ", expected " + std::to_string(r->root_count));
        });

  // 2. Printed Gram matrices.
  for (int k = 1; k <= 3; ++k) {
    add(2, "B1 Gram congruent to printed A" + std::to_string(k), Key{"A", k}, false, 0, [k](Context& ctx) {
      const IntMatrix& printed = k == 1 ? ctx.golden.gram_a1 : k == 2 ? ctx.golden.gram_a2 : ctx.golden.gram_a3;
      const auto witness = find_signed_permutation(ctx.gram("A", k), printed);
      return expect(witness.has_value(), witness ? "signed permutation found" : "no signed permutation relates them");
    });
    add(2, "determinant A" + std::to_string(k), Key{"A", k}, false, 0, [k](Context& ctx) {
      const BigInt det = determinant(ctx.gram("A", k));
      const BigInt want = ctx.golden.find_row("A", k)->determinant;
      return expect(det == want, "det = " + det.get_str() + ", expected " + want.get_str());
    });
  }
  add(2, "printed A1 inverse", Key{"A", 1}, false, 0, [](Context& ctx) {
    const RatMatrix k = rational_inverse(ctx.golden.gram_a1) * Rational(8);
    return expect(k == to_rational(ctx.golden.inverse_a1_times_8), "8 A^-1 against the printed K");
  });

  // 3. Invariants table.
  for (const auto& row : g.rows)
    add(3, "invariants " + label(row.name, row.level), Key{row.name, row.level}, false, 0,
        [name = row.name, level = row.level](Context& ctx) {
          const GoldenRow* r = ctx.golden.find_row(name, level);
          const IntMatrix& a = ctx.gram(name, level);
          const BigInt det = determinant(a);
          const BigInt ell = modular_level(a);
          const long phi = euler_phi(ell.get_si());
          std::ostringstream os;
          os << "rank " << a.rows() << " det " << det << " level " << ell << " phi " << phi;
          bool ok = true;
          if (a.rows() != r->lattice_rank) ok = false, os << "; rank expected " << r->lattice_rank;
          if (det != r->determinant) ok = false, os << "; det expected " << r->determinant;
          if (ell != r->modular_level) ok = false, os << "; level expected " << r->modular_level;
          if (phi != r->euler_phi) ok = false, os << "; phi expected " << r->euler_phi;
          return expect(ok, os.str());
        });

  // 4. Dual quotients.
  add(4, "SNF A1", Key{"A", 1}, false, 0, [](Context& ctx) {
    const auto snf = smith_normal_form(ctx.gram("A", 1));
    return expect(snf == ctx.golden.snf_a1, "divisors " + join(snf, snf.size()));
  });
  add(4, "SNF rescaled A1", Key{"A", 1}, false, 0, [](Context& ctx) {
    const auto snf = smith_normal_form(divide_exact(ctx.gram("A", 1), 2));
    const auto factors = nontrivial(snf);
    BigInt order = 1;
    for (const auto& d : snf) order *= d;
    return expect(factors == ctx.golden.rescaled_group_a1 && order == ctx.golden.rescaled_order_a1,
                  "order " + order.get_str() + ", factors " + join(factors, factors.size()));
  });

  // 5. Theta prefixes.
  for (const auto& t : g.theta) {
    const std::size_t dim = 2 * expected_rank(t.name, t.level).value_or(0);
    double budget = dim <= 12 ? 10 : 300;
    if (t.name == "E21") budget = 1800;
    const bool slow_item = t.name == "E21";
    std::size_t prefix = t.verified_prefix;
    std::string name = "theta " + label(t.name, t.level) + " first " + std::to_string(prefix);
    if (slow_item && !opt.full) {
      prefix -= 1;
      name = "theta " + label(t.name, t.level) + " first " + std::to_string(prefix) + " (fast)";
    }
    add(5, name, Key{t.name, t.level}, false, budget, [nm = t.name, level = t.level, prefix](Context& ctx) {
      const GoldenTheta* gt = ctx.golden.find_theta(nm, level);
      IntMatrix a = ctx.gram(nm, level);
      if (gt->rescale != 1) a = divide_exact(a, gt->rescale);
      EnumerationOptions o;
      o.threads = ctx.threads;
      const ThetaSeries s = theta_coefficients(a, prefix - 1, o);
      const std::vector<BigInt> want(gt->coefficients.begin(), gt->coefficients.begin() + prefix);
      return expect(s.coefficients == want, join(s.coefficients, prefix));
    });
  }

  // 6. Shells against roots.
  struct ShellCase {
    std::string name;
    int level;
    int kind;  // 0: shell(6) = roots; 1: D3 pattern; 2: shell(6) strictly contains the roots
  };
  const std::vector<ShellCase> shell_cases = {{"A", 1, 0},  {"A", 2, 0},  {"A", 3, 0}, {"A", 4, 0}, {"E5", 5, 0},
                                              {"D", 3, 1},  {"D", 6, 2},  {"E9", 9, 2}, {"E21", 21, 2}};
  for (const auto& sc : shell_cases) {
    const bool slow = sc.name == "E21";
    add(6, "shells " + label(sc.name, sc.level), Key{sc.name, sc.level}, slow, 0, [sc](Context& ctx) {
      const GoldenRow* r = ctx.golden.find_row(sc.name, sc.level);
      const auto cls = classify_shells(ctx.gram(sc.name, sc.level), ctx.expansions(sc.name, sc.level), 6, ctx.threads);
      std::ostringstream os;
      const ShellReport* six = nullptr;
      for (const auto& s : cls.shells) {
        os << "norm " << s.norm << ": " << s.vectors << " vectors, " << s.roots << " roots; ";
        if (s.norm == 6) six = &s;
      }
      os << "|R| = " << cls.root_count;
      bool ok = six && cls.roots_outside_shells == 0 && six->roots == cls.root_count && cls.root_count == r->root_count;
      const auto& first = cls.shells.front();
      ok = ok && first.norm == r->kissing_norm && first.vectors == r->kissing_count;
      if (sc.kind == 0) ok = ok && cls.shells.size() == 1 && six->vectors == six->roots;
      if (sc.kind == 1)
        ok = ok && cls.shells.size() == 2 && first.norm == 4 && first.vectors == 36 && first.roots == 0 &&
             six->vectors == six->roots;
      if (sc.kind == 2) ok = ok && six->vectors > six->roots;
      return expect(ok, os.str());
    });
  }

  // 7. Rank of the ribbon Gram matrix and its projection formula.
  for (const Key& m : std::vector<Key>{{"A", 1}, {"A", 2}, {"A", 3}, {"D", 3}})
    add(7, "ribbon Gram " + label(m.first, m.second), m, false, 60, [m](Context& ctx) {
      const RootSystem& sys = ctx.system(m.first, m.second);
      const BigGram big = big_gram(sys, ctx.threads);
      const auto& fam = ctx.expander(m.first, m.second).family();
      const IntMatrix t = inner_product_table(sys, ctx.ribbon(m.first, m.second), fam, ctx.threads);
      const RatMatrix proj = to_rational(t) * rational_inverse(ctx.gram(m.first, m.second)) * to_rational(t.transpose());
      const bool ok = big.rank == sys.lattice_rank() && proj == to_rational(big.matrix);
      return expect(ok, "rank " + std::to_string(big.rank) + " of " + std::to_string(big.matrix.rows()) + "x" +
                            std::to_string(big.matrix.cols()));
    });

  // 8. Root integrality.
  for (const auto& row : g.rows)
    add(8, "root expansions " + label(row.name, row.level), Key{row.name, row.level}, false, 0,
        [name = row.name, level = row.level](Context& ctx) {
          const auto& ex = ctx.expansions(name, level);
          const IntMatrix& a = ctx.gram(name, level);
          std::size_t bad = 0;
          for (const auto& v : ex)
            if (gram_norm(a, v) != 6) ++bad;
          return expect(bad == 0, std::to_string(ex.size()) + " integral expansions, " + std::to_string(bad) +
                                      " with norm other than 6");
        });
  add(8, "A1 expansions match the printed list", Key{"A", 1}, false, 1, [](Context& ctx) {
    std::vector<std::vector<long>> got;
    for (const auto& v : ctx.expansions("A", 1)) {
      std::vector<long> w;
      for (const auto& c : v) w.push_back(c.get_si());
      got.push_back(w);
    }
    const bool ok = match_up_to_signed_permutation(got, ctx.golden.root_expansions_a1);
    return expect(ok, std::to_string(got.size()) + " computed against " +
                          std::to_string(ctx.golden.root_expansions_a1.size()) + " printed");
  });

  // 9. Characters.
  for (int k = 1; k <= 2; ++k)
    add(9, "character A" + std::to_string(k), Key{"A", k}, false, 0, [k](Context& ctx) {
      const IntMatrix& a = ctx.gram("A", k);
      const BigInt det = determinant(a);
      const long ell = modular_level(a).get_si();
      const long s = static_cast<long>(a.rows() / 2);
      const auto found = matching_characters(det, s, ell);
      std::ostringstream os;
      os << found.size() << " matching characters mod " << ell;
      if (found.size() != 1) return expect(false, os.str());
      const auto& chi = found.front();
      const long kron = k == 1 ? ctx.golden.kronecker_a1 : ctx.golden.kronecker_a2;
      bool ok = chi.is_real() && chi.parity() == (s % 2 ? -1 : 1);
      for (long p : primes_up_to(100))
        if (p > 2 && ell % p != 0 && chi(p).as_integer() != kronecker(kron, p)) ok = false;
      os << ", parity " << chi.parity() << ", agrees with Kronecker " << kron << ": " << (ok ? "yes" : "no");
      return expect(ok, os.str());
    });

  // 10. Series identities.
  add(10, "A1 theta = b1 + 32 b4 + 60 b5", Key{"A", 1}, false, 5, [](Context& ctx) {
    const auto& gd = ctx.golden;
    const auto combo = combine_series(gd.b_basis, gd.b_weights, gd.b_length);
    const ThetaSeries s = theta_coefficients(ctx.gram("A", 1), gd.b_length - 1, ctx.threads);
    return expect(s.coefficients == combo, join(combo, combo.size()));
  });
  add(10, "A1 theta = Jacobi combination", Key{"A", 1}, false, 5, [](Context& ctx) {
    const std::size_t m = ctx.golden.jacobi_length - 1;
    const auto jac = jacobi_theta_series(m);
    const ThetaSeries s = theta_coefficients(ctx.gram("A", 1), m, ctx.threads);
    return expect(s.coefficients == jac, "through index " + std::to_string(m));
  });

  // 11. Property suites.
  for (int k = 1; k <= 3; ++k)
    add(11, "folding symmetries A" + std::to_string(k), Key{"A", k}, false, 0, [k](Context& ctx) {
      const RootSystem& sys = ctx.system("A", k);
      const ExtendedFusion& f = sys.fusion();
      const long n = f.altitude(), period = 3 * n;
      const IntMatrix p1 = f.twist_P();
      const IntMatrix p2 = p1 * p1;
      std::size_t failures = 0;
      for (long p = 0; p < period; ++p)
        for (long q = 0; q < period; ++q) {
          const IntMatrix x = f(p, q);
          const IntMatrix neg = -x;
          if (!(f(-p, p + q) == neg && f(p + q, -q) == neg && f(n - q, n - p) == neg)) ++failures;
          if (!(f(p + period, q) == x && f(p, q + period) == x && f(p + n, q + n) == x)) ++failures;
          if (!(f(q, p) == x.transpose())) ++failures;
          if (!(f(p + n, q) == p1 * x && f(p, q + n) == p2 * x)) ++failures;
        }
      return expect(failures == 0, std::to_string(failures) + " failing points over a " + std::to_string(period) + "x" +
                                       std::to_string(period) + " period");
    });
  add(11, "enumeration against box oracle", std::nullopt, false, 0, [](Context& ctx) {
    std::vector<std::pair<std::string, IntMatrix>> forms = {
        {"diag(2)", IntMatrix{{2}}},
        {"A0", IntMatrix{{6, -3}, {-3, 6}}},
        {"A0 rescaled", IntMatrix{{2, -1}, {-1, 2}}},
        {"D4", IntMatrix{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}},
        {"skew 3", IntMatrix{{4, 1, -2}, {1, 6, 3}, {-2, 3, 8}}},
        {"A1 printed", ctx.golden.gram_a1},
    };
    for (std::size_t n = 2; n <= 6; ++n) forms.push_back({"A" + std::to_string(n) + " Cartan", cartan_a(n)});
    std::size_t compared = 0;
    for (const auto& [nm, a] : forms)
      for (std::size_t m : {std::size_t(4), std::size_t(10)}) {
        const auto want = box_theta(a, m);
        for (bool reduce : {false, true}) {
          EnumerationOptions o;
          o.reduce = reduce;
          o.threads = ctx.threads;
          if (theta_coefficients(a, m, o).coefficients != want)
            return expect(false, nm + " differs at M = " + std::to_string(m));
          ++compared;
        }
      }
    return expect(true, std::to_string(compared) + " enumerations agree");
  });
  add(11, "thread-count invariance", Key{"A", 2}, false, 0, [](Context& ctx) {
    const IntMatrix& a = ctx.gram("A", 2);
    EnumerationOptions o;
    o.threads = 1;
    const auto base = theta_coefficients(a, 12, o).coefficients;
    for (unsigned t : {2u, 3u, 8u}) {
      o.threads = t;
      if (theta_coefficients(a, 12, o).coefficients != base)
        return expect(false, "output changes with " + std::to_string(t) + " threads");
    }
    o.threads = 4;
    o.reduce = false;
    if (theta_coefficients(a, 12, o).coefficients != base) return expect(false, "output changes without reduction");
    return expect(true, "1, 2, 3, 4, 8 threads agree through index 12");
  });
  for (int k = 1; k <= 3; ++k)
    add(11, "harmonicity A" + std::to_string(k), Key{"A", k}, false, 0, [k](Context& ctx) {
      const RootSystem& sys = ctx.system("A", k);
      const auto& pts = ctx.ribbon("A", k);
      std::vector<char> ok(pts.size(), 0);
      parallel_for(pts.size(), resolve_threads(ctx.threads), [&](std::size_t i) { ok[i] = harmonicity_check(sys, pts[i]); });
      const auto bad = std::count(ok.begin(), ok.end(), 0);
      return expect(bad == 0, std::to_string(pts.size() - bad) + " of " + std::to_string(pts.size()) + " ribbon points");
    });

  return checks;
}

}  // namespace

std::vector<CheckResult> run_checks(const GoldenTable& table, const VerifyOptions& options) {
  Context ctx(table, resolve_threads(options.threads));
  std::vector<CheckResult> out;
  for (const auto& c : build_checks(table, options)) {
    if (c.slow && !options.full) continue;
    if (!options.criteria.empty() &&
        std::find(options.criteria.begin(), options.criteria.end(), c.criterion) == options.criteria.end())
      continue;
    if (options.module && (!c.module || c.module->first != options.module->name || c.module->second != options.module->level))
      continue;
    CheckResult r{c.criterion, c.name, false, "", 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = c.run(ctx);
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget > 0 && r.seconds > c.budget) {
      r.passed = false;
      std::ostringstream os;
      os << r.detail << " (took " << r.seconds << " s, budget " << c.budget << " s)";
      r.detail = os.str();
    }
    out.push_back(std::move(r));
  }
  return out;
}

double criterion_budget(int criterion) {
  switch (criterion) {
    case 1: return 1;
    case 2: return 10;
    case 3: return 30;
    case 4: return 1;
    case 6: return 300;
    case 7: return 60;
    case 8: return 1;
    case 9: return 1;
    case 10: return 5;
    default: return 0;  // 5 has per-item budgets, 11 has none
  }
}

std::vector<CriterionSummary> summarize(const std::vector<CheckResult>& results) {
  std::map<int, CriterionSummary> by;
  for (const auto& r : results) {
    auto& s = by[r.criterion];
    s.criterion = r.criterion;
    ++s.checks;
    s.seconds += r.seconds;
    if (!r.passed) {
      if (s.failures++ == 0) s.first_failure = r.name + ": " + r.detail;
    }
  }
  std::vector<CriterionSummary> out;
  for (auto& [c, s] : by) {
    s.passed = s.failures == 0;
    const double budget = criterion_budget(c);
    if (budget > 0 && s.seconds > budget) {
      s.passed = false;
      if (s.first_failure.empty()) {
        std::ostringstream os;
        os << "took " << s.seconds << " s, budget " << budget << " s";
        s.first_failure = os.str();
      }
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace hyperlat
