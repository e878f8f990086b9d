#include "symstab/verify.hpp"

#include <sstream>

namespace symstab {

namespace {

std::string torsion_string(const std::vector<Int>& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ";";
    os << t[i];
  }
  return os.str();
}

BuildOptions capped(BuildOptions opt, int cap) {
  if (opt.dim_cap < 0 || opt.dim_cap > cap) opt.dim_cap = cap;
  return opt;
}

// zero group placeholder for degrees beyond the stored range
const HomologyGroup& group_or_zero(HomologyEngine& H, int d) {
  static const HomologyGroup zero{};
  if (d > H.dims()) return zero;
  return H.group(d);
}

}  // namespace

StabilityReport check_stability(SetPtr X, const std::string& name, int n_max,
                                int k_max, const BuildOptions& opt) {
  if (n_max < 1 || k_max < 0) throw input_error("check_stability: empty range");
  {
    HomologyEngine HX(*X);
    if (HX.group(0).betti != 1 || !HX.group(0).torsion.empty())
      throw input_error("check_stability requires a connected complex");
  }
  // H_0..H_{k_max} only need the skeleton one dimension higher
  const BuildOptions bopt = capped(opt, k_max + 1);

  StabilityReport R;
  R.space = name;
  R.pass = true;

  ProductComplex cur = sym_power(X, 1, bopt);
  auto cur_engine = std::make_unique<HomologyEngine>(*cur.set, bopt.parallel);
  for (int n = 1; n <= n_max; ++n) {
    ProductComplex next = sym_power(X, n + 1, bopt);
    auto next_engine = std::make_unique<HomologyEngine>(*next.set, bopt.parallel);
    const SimplicialMap alpha = stabilization_map(X, cur, next);
    const ChainMap f = chain_map(alpha);
    for (int k = 0; k <= std::min(k_max, n); ++k) {
      StabilityCell cell;
      cell.n = n;
      cell.k = k;
      const HomologyGroup& GS = group_or_zero(*cur_engine, k);
      const HomologyGroup& GT = group_or_zero(*next_engine, k);
      cell.betti_src = GS.betti;
      cell.betti_tgt = GT.betti;
      cell.torsion_src = GS.torsion;
      cell.torsion_tgt = GT.torsion;
      InducedMap m = induced_map(*cur_engine, *next_engine, f, k);
      cell.iso = m.isomorphism();
      cell.surj = m.surjective;
      cell.pass = k < n ? cell.iso : cell.surj;
      if (!cell.pass) R.pass = false;
      R.cells.push_back(std::move(cell));
    }
    cur = std::move(next);
    cur_engine = std::move(next_engine);
  }
  return R;
}

std::string stability_csv(const StabilityReport& R) {
  std::ostringstream os;
  os << "space,n,k,betti_src,betti_tgt,torsion_src,torsion_tgt,iso,surj,pass\n";
  for (const StabilityCell& c : R.cells) {
    os << R.space << "," << c.n << "," << c.k << "," << c.betti_src << ","
       << c.betti_tgt << "," << torsion_string(c.torsion_src) << ","
       << torsion_string(c.torsion_tgt) << "," << (c.iso ? "true" : "false")
       << "," << (c.surj ? "true" : "false") << ","
       << (c.pass ? "true" : "false") << "\n";
  }
  return os.str();
}

ConnectivityReport check_lemma24(int n, int k, const BuildOptions& opt) {
  if (n < 2 || k < 1) throw input_error("check_lemma24 requires n >= 2, k >= 1");
  // reduced homology is needed through degree n only
  const BuildOptions bopt = capped(opt, std::min(n * k, n + 1));
  SetPtr S = sphere_model(k);
  ProductComplex prev = sym_power(S, n - 1, bopt);
  ProductComplex full = sym_power(S, n, bopt);
  const SimplicialMap alpha = stabilization_map(S, prev, full);
  const Subcomplex image = image_subcomplex(alpha);
  SetPtr cofibre = collapse(full.set, image);

  HomologyEngine H(*cofibre, bopt.parallel);
  ConnectivityReport R;
  R.n = n;
  R.k = k;
  R.pass = true;
  for (int d = 0; d <= n; ++d) {
    const HomologyGroup& G = group_or_zero(H, d);
    const std::int64_t reduced = d == 0 ? G.betti - 1 : G.betti;
    R.reduced_betti.push_back(reduced);
    R.reduced_torsion.push_back(G.torsion);
    if (d <= n - 1 && (reduced != 0 || !G.torsion.empty())) R.pass = false;
  }
  return R;
}

H1Report check_h1_abelianization(SetPtr X, const std::string& name, int n_max,
                                 const BuildOptions& opt) {
  if (n_max < 2) throw input_error("check_h1_abelianization requires n_max >= 2");
  const BuildOptions bopt = capped(opt, 2);  // H_1 only needs the 2-skeleton

  H1Report R;
  R.space = name;
  R.pass = true;
  std::unique_ptr<HomologyEngine> base;
  {
    HomologyEngine HX(*X);
    if (HX.group(0).betti != 1)
      throw input_error("check_h1_abelianization requires a connected complex");
    const HomologyGroup& G = group_or_zero(HX, 1);
    R.base_betti = G.betti;
    R.base_torsion = G.torsion;
  }

  std::vector<ProductComplex> powers;   // Sym^2 .. Sym^{n_max}
  std::vector<std::unique_ptr<HomologyEngine>> engines;
  for (int n = 2; n <= n_max; ++n) {
    powers.push_back(sym_power(X, n, bopt));
    engines.push_back(
        std::make_unique<HomologyEngine>(*powers.back().set, bopt.parallel));
  }
  for (int n = 2; n <= n_max; ++n) {
    H1Cell cell;
    cell.n = n;
    const HomologyGroup& G = group_or_zero(*engines[n - 2], 1);
    cell.betti = G.betti;
    cell.torsion = G.torsion;
    cell.groups_equal = G.betti == R.base_betti && G.torsion == R.base_torsion;
    cell.pass = cell.groups_equal;
    if (n < n_max) {
      const SimplicialMap alpha =
          stabilization_map(X, powers[n - 2], powers[n - 1]);
      InducedMap m =
          induced_map(*engines[n - 2], *engines[n - 1], chain_map(alpha), 1);
      cell.alpha_checked = true;
      cell.alpha_iso = m.isomorphism();
      cell.pass = cell.pass && cell.alpha_iso;
    }
    if (!cell.pass) R.pass = false;
    R.cells.push_back(std::move(cell));
  }
  return R;
}

std::int64_t euler_characteristic_checked(const SimplicialSet& X) {
  ChainComplex C = normalized_chains(X);
  const std::int64_t chi = euler_characteristic(C);
  HomologyEngine H(C);
  std::int64_t chi_b = 0;
  for (int d = 0; d <= H.dims(); ++d)
    chi_b += (d % 2 ? -1 : 1) * H.group(d).betti;
  if (chi != chi_b)
    throw std::logic_error("Euler characteristic mismatch: chains vs Betti");
  return chi;
}

EulerGenReport euler_generating_check(SetPtr X, const std::string& name,
                                      int n_max, const BuildOptions& opt) {
  if (n_max < 0) throw input_error("euler_generating_check: negative range");
  EulerGenReport R;
  R.space = name;
  R.chi = euler_characteristic_checked(*X);
  for (int n = 0; n <= n_max; ++n) {
    SetPtr S = sym_power(X, n, opt).set;
    R.lhs.push_back(euler_characteristic_checked(*S));
  }
  const PowerSeries rhs = geometric_power(static_cast<int>(R.chi), n_max);
  R.pass = true;
  for (int n = 0; n <= n_max; ++n) {
    if (denominator(rhs.c[n]) != 1)
      throw std::logic_error("generating series has non-integer coefficients");
    R.rhs.push_back(numerator(rhs.c[n]));
    if (Int(R.lhs[n]) != R.rhs[n]) R.pass = false;
  }
  return R;
}

}  // namespace symstab
