#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "symstab/combinatorics.hpp"
#include "symstab/io.hpp"
#include "symstab/verify.hpp"

namespace {

using namespace symstab;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::vector<Int> parse_int_list(const std::string& s) {
  std::vector<Int> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      out.push_back(Int(tok));
    } catch (const std::exception&) {
      throw input_error("not an integer list: '" + s + "'");
    }
  }
  if (out.empty()) throw input_error("empty integer list");
  return out;
}

std::string join(const std::vector<Int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

std::string join_rats(const std::vector<Rat>& v) {
  std::vector<Int> ints;
  for (const Rat& r : v) {
    if (denominator(r) != 1)
      throw input_error("expansion produced a non-integer coefficient");
    ints.push_back(numerator(r));
  }
  return join(ints);
}

struct Config {
  std::string complex_path, zeta_path;
  std::string num, den, counts;
  std::string format = "text";
  std::string cache_dir = default_cache_dir();
  std::size_t budget = 200000;
  int n = 1, n_max = 2, k_max = 1, k = 1, terms = 0;
  std::int64_t q = 0, arg_n = 0, p = 2;
  bool generators = false;
};

BuildOptions build_options(const Config& c) {
  BuildOptions opt;
  opt.budget = c.budget;
  return opt;
}

RationalZeta zeta_input(const Config& c) {
  if (!c.zeta_path.empty()) return load_zeta(c.zeta_path).zeta;
  if (c.num.empty() || c.den.empty())
    throw input_error("provide either --zeta FILE or --num and --den");
  if (c.q < 2) throw input_error("field 'q' must be a prime power >= 2");
  return make_zeta(Int(c.q), parse_int_list(c.num), parse_int_list(c.den));
}

int run_sym(const Config& c) {
  ComplexDocument doc = load_complex(c.complex_path);
  ProductComplex S =
      cached_sym_power(doc.set, c.n, build_options(c), c.cache_dir);
  std::cout << "space: sym^" << c.n << " " << doc.name << "\n";
  for (int d = 0; d <= S.set->dims(); ++d)
    std::cout << "dim " << d << ": " << S.set->counts[d] << "\n";
  std::cout << "total: " << S.set->total_nondegenerate() << "\n";
  return kExitPass;
}

int run_homology(const Config& c) {
  ComplexDocument doc = load_complex(c.complex_path);
  std::string space = doc.name;
  SetPtr X = doc.set;
  if (c.n != 1) {
    X = cached_sym_power(doc.set, c.n, build_options(c), c.cache_dir).set;
    space = "sym^" + std::to_string(c.n) + " " + doc.name;
  }
  HomologyEngine H(*X);
  std::cout << (c.format == "csv" ? homology_report_csv(space, H)
                                  : homology_report_text(space, H, c.generators));
  return kExitPass;
}

int run_stability(const Config& c) {
  ComplexDocument doc = load_complex(c.complex_path);
  StabilityReport R =
      check_stability(doc.set, doc.name, c.n_max, c.k_max, build_options(c));
  if (c.format == "csv") {
    std::cout << stability_csv(R);
  } else {
    for (const StabilityCell& cell : R.cells)
      std::cout << "n=" << cell.n << " k=" << cell.k
                << (cell.k < cell.n ? " iso=" : " surj=")
                << ((cell.k < cell.n ? cell.iso : cell.surj) ? "true" : "false")
                << (cell.pass ? " pass" : " FAIL") << "\n";
    std::cout << (R.pass ? "PASS" : "FAIL") << "\n";
  }
  return R.pass ? kExitPass : kExitViolation;
}

int run_lemma24(const Config& c) {
  ConnectivityReport R = check_lemma24(c.n, c.k, build_options(c));
  std::cout << "cofibre sym^" << c.n << " S^" << c.k << " / sym^" << (c.n - 1)
            << " S^" << c.k << "\n";
  for (std::size_t d = 0; d < R.reduced_betti.size(); ++d) {
    std::cout << "reduced H_" << d << ": betti " << R.reduced_betti[d];
    if (!R.reduced_torsion[d].empty())
      std::cout << ", torsion " << join(R.reduced_torsion[d]);
    std::cout << "\n";
  }
  std::cout << (R.pass ? "PASS" : "FAIL") << "\n";
  return R.pass ? kExitPass : kExitViolation;
}

int run_h1ab(const Config& c) {
  ComplexDocument doc = load_complex(c.complex_path);
  H1Report R = check_h1_abelianization(doc.set, doc.name, c.n_max,
                                       build_options(c));
  std::cout << "H_1(" << doc.name << "): betti " << R.base_betti;
  if (!R.base_torsion.empty()) std::cout << ", torsion " << join(R.base_torsion);
  std::cout << "\n";
  for (const H1Cell& cell : R.cells) {
    std::cout << "n=" << cell.n << ": betti " << cell.betti;
    if (!cell.torsion.empty()) std::cout << ", torsion " << join(cell.torsion);
    if (cell.alpha_checked)
      std::cout << ", H_1(alpha) iso=" << (cell.alpha_iso ? "true" : "false");
    std::cout << (cell.pass ? " pass" : " FAIL") << "\n";
  }
  std::cout << (R.pass ? "PASS" : "FAIL") << "\n";
  return R.pass ? kExitPass : kExitViolation;
}

int run_eulergen(const Config& c) {
  ComplexDocument doc = load_complex(c.complex_path);
  EulerGenReport R =
      euler_generating_check(doc.set, doc.name, c.n_max, build_options(c));
  std::cout << "chi(" << doc.name << ") = " << R.chi << "\n";
  std::vector<Int> lhs(R.lhs.begin(), R.lhs.end());
  std::cout << "chi(sym^n): " << join(lhs) << "\n";
  std::cout << "series:     " << join(R.rhs) << "\n";
  std::cout << (R.pass ? "PASS" : "FAIL") << "\n";
  return R.pass ? kExitPass : kExitViolation;
}

int run_zeta_expand(const Config& c) {
  RationalZeta Z = zeta_input(c);
  if (c.terms < 1) throw input_error("--terms must be >= 1");
  PowerSeries e = expand_zeta(Z, c.terms - 1);
  std::cout << join_rats(e.c) << "\n";
  return kExitPass;
}

int run_zeta_from_counts(const Config& c) {
  if (c.q < 2) throw input_error("field 'q' must be a prime power >= 2");
  PointCounts P{Int(c.q), parse_int_list(c.counts)};
  for (const Int& nm : P.counts)
    if (nm < 0) throw input_error("point counts must be nonnegative");
  const int N = c.terms >= 1 ? c.terms - 1
                             : static_cast<int>(P.counts.size());
  std::cout << join(sym_counts_from_counts(P, N)) << "\n";
  return kExitPass;
}

int run_zeta_to_counts(const Config& c) {
  if (c.q < 2) throw input_error("field 'q' must be a prime power >= 2");
  PointCounts P = counts_from_sym_counts(parse_int_list(c.counts), Int(c.q));
  std::cout << join(P.counts) << "\n";
  return kExitPass;
}

int run_zeta_diff(const Config& c) {
  RationalZeta W = finite_difference_series(zeta_input(c));
  std::cout << "numerator:   " << poly_to_string(W.num) << "\n";
  std::cout << "denominator: " << poly_to_string(W.den) << "\n";
  return kExitPass;
}

int run_zeta_connected(const Config& c) {
  ConnectednessReport R = connectedness_check(zeta_input(c));
  std::cout << "multiplicity: " << R.multiplicity << "\n";
  std::cout << (R.connected ? "connected" : "not connected") << "\n";
  return R.connected ? kExitPass : kExitViolation;
}

int run_zeta_bound(const Config& c) {
  const int rows = c.terms >= 1 ? c.terms : 9;  // default: rows 0..8
  PoleBoundReport R = second_pole_bound(zeta_input(c), rows - 1);
  if (R.beta_exact)
    std::cout << "beta = " << R.beta_lo << " (exact)\n";
  else
    std::cout << "beta in [" << R.beta_lo << ", " << R.beta_hi << "]\n";
  std::cout << "C = " << R.C << "\n";
  std::cout << "n,c_n,delta,bound\n";
  for (const PoleBoundRow& row : R.rows)
    std::cout << row.n << "," << row.c << "," << row.delta << "," << row.bound
              << "\n";
  std::cout << (R.pass ? "PASS" : "FAIL") << "\n";
  return R.pass ? kExitPass : kExitViolation;
}

int run_gcd_binom(const Config& c) {
  std::cout << gcd_binomials(c.arg_n) << "\n";
  return kExitPass;
}

int run_valp(const Config& c) {
  ValpReport R = valp_prime_power_factorial(c.p, c.k);
  std::cout << "val_" << c.p << "(" << c.p << "^" << c.k
            << "!) = " << R.valuation << "\n";
  std::cout << "closed form (p^k-1)/(p-1) = " << R.closed_form << "\n";
  std::cout << "quotient coprime to p: " << (R.coprime ? "true" : "false")
            << "\n";
  return R.coprime ? kExitPass : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetric powers, stabilization checks, and zeta identities"};
  app.require_subcommand(1);
  Config c;

  auto add_common = [&](CLI::App* s, bool needs_complex) {
    if (needs_complex)
      s->add_option("--complex", c.complex_path, "complex document (JSON)")
          ->required();
    s->add_option("--budget", c.budget, "simplex budget");
    s->add_option("--cache-dir", c.cache_dir, "symmetric-power cache directory");
    s->add_option("--format", c.format, "output format (text|csv)")
        ->check(CLI::IsMember({"text", "csv"}));
  };
  auto add_zeta_input = [&](CLI::App* s) {
    s->add_option("--zeta", c.zeta_path, "zeta document (JSON)");
    s->add_option("--num", c.num, "numerator coefficients, ascending");
    s->add_option("--den", c.den, "denominator coefficients, ascending");
    s->add_option("--q", c.q, "field size");
  };

  CLI::App* sym = app.add_subcommand("sym", "build a symmetric power");
  add_common(sym, true);
  sym->add_option("-n,--n", c.n, "power")->required();

  CLI::App* hom = app.add_subcommand("homology", "homology of X or sym^n X");
  add_common(hom, true);
  hom->add_option("-n,--n", c.n, "power (default 1: the complex itself)");
  hom->add_flag("--generators", c.generators, "print generator cycles");

  CLI::App* stab = app.add_subcommand("stability", "stabilization range check");
  add_common(stab, true);
  stab->add_option("--n-max", c.n_max, "largest n")->required();
  stab->add_option("--k-max", c.k_max, "largest homology degree");

  CLI::App* lem = app.add_subcommand("lemma24", "cofibre connectivity check");
  add_common(lem, false);
  lem->add_option("-n,--n", c.n, "power")->required();
  lem->add_option("-k,--k", c.k, "sphere dimension")->required();

  CLI::App* h1 = app.add_subcommand("h1ab", "H_1 abelianization invariance");
  add_common(h1, true);
  h1->add_option("--n-max", c.n_max, "largest n")->required();

  CLI::App* eg = app.add_subcommand("eulergen",
                                    "Euler characteristic generating identity");
  add_common(eg, true);
  eg->add_option("--n-max", c.n_max, "largest n")->required();

  CLI::App* zeta = app.add_subcommand("zeta", "zeta-function operations");
  zeta->require_subcommand(1);
  CLI::App* zx = zeta->add_subcommand("expand", "Maclaurin expansion");
  add_zeta_input(zx);
  zx->add_option("--terms", c.terms, "number of coefficients")->required();
  CLI::App* zf = zeta->add_subcommand("from-counts",
                                      "symmetric-power counts from N_m");
  zf->add_option("--counts", c.counts, "N_1..N_M, comma separated")->required();
  zf->add_option("--q", c.q, "field size")->required();
  zf->add_option("--terms", c.terms, "number of c_n to produce");
  CLI::App* zt = zeta->add_subcommand("to-counts", "N_m from c_0..c_N");
  zt->add_option("--counts", c.counts, "c_0..c_N, comma separated")->required();
  zt->add_option("--q", c.q, "field size")->required();
  CLI::App* zd = zeta->add_subcommand("diff", "(1-t) * zeta, reduced");
  add_zeta_input(zd);
  CLI::App* zc = zeta->add_subcommand("connected", "connectedness criterion");
  add_zeta_input(zc);
  CLI::App* zb = zeta->add_subcommand("bound", "certified difference bound");
  add_zeta_input(zb);
  zb->add_option("--terms", c.terms, "number of rows");

  CLI::App* gb = app.add_subcommand("gcd-binom", "gcd of binomials C(n,1..n-1)");
  gb->add_option("n", c.arg_n, "n >= 2")->required();

  CLI::App* vp = app.add_subcommand("valp", "p-adic valuation of (p^k)!");
  vp->add_option("-p,--p", c.p, "prime")->required();
  vp->add_option("-k,--k", c.k, "exponent")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (*sym) return run_sym(c);
    if (*hom) return run_homology(c);
    if (*stab) return run_stability(c);
    if (*lem) return run_lemma24(c);
    if (*h1) return run_h1ab(c);
    if (*eg) return run_eulergen(c);
    if (*zx) return run_zeta_expand(c);
    if (*zf) return run_zeta_from_counts(c);
    if (*zt) return run_zeta_to_counts(c);
    if (*zd) return run_zeta_diff(c);
    if (*zc) return run_zeta_connected(c);
    if (*zb) return run_zeta_bound(c);
    if (*gb) return run_gcd_binom(c);
    if (*vp) return run_valp(c);
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
