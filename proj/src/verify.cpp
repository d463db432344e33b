#include "charplie/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "charplie/orbitbounds.hpp"
#include "charplie/stabmod.hpp"

namespace charplie {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point t0 = Clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    }
};

void claim(std::vector<Claim>& out, const std::string& id, const std::string& desc,
           const std::function<std::pair<bool, std::string>()>& fn) {
    Timer t;
    Claim c;
    c.id = id;
    c.desc = desc;
    try {
        auto [pass, detail] = fn();
        c.pass = pass;
        c.detail = detail;
    } catch (const std::exception& e) {
        c.pass = false;
        c.detail = std::string("exception: ") + e.what();
    }
    c.ms = t.ms();
    out.push_back(std::move(c));
}

LieAlgebra make_algebra(Family fam, int rank) {
    return LieAlgebra::build(RootSystem::build(fam, rank), special_characteristic(fam));
}

Weight fw(const LieAlgebra& g, int node1, int mult = 1) {
    Weight w = g.roots().zero_weight();
    w.coords[std::size_t(node1 - 1)] = mult;
    return w;
}

SampleConfig cfg_with(std::uint64_t seed, std::uint64_t salt, int trials = 5, int degree = 20) {
    SampleConfig c;
    c.seed = Rng(seed).split(salt).seed_state();
    c.trials = trials;
    c.field_degree = degree;
    return c;
}

std::string dims_str(const StabilizerReport& r) {
    std::ostringstream os;
    os << "trials=[";
    for (std::size_t i = 0; i < r.trial_dims.size(); ++i)
        os << (i ? "," : "") << r.trial_dims[i];
    os << "] min=" << r.min_dim << " ker=" << r.dim_ker << " verdict=" << verdict_name(r.verdict);
    return os.str();
}

bool trials_constant(const StabilizerReport& r) {
    for (int d : r.trial_dims)
        if (d != r.min_dim) return false;
    return true;
}

// preimage in V of (V/V^d)^d for a subspace d of g (over the prime field)
Subspace annihilator_preimage(const GModule& V, const Subspace& dspace) {
    const LieAlgebra& g = *V.g;
    const Field& f = g.base_field();
    Subspace vd = fixed_space_subalg(V, dspace);
    Mat q = vd.quotient_map();
    // v such that Q(x v) = 0 for every x in the subalgebra basis
    Mat cons(f, dspace.dim() * q.rows(), V.dim);
    for (int i = 0; i < dspace.dim(); ++i) {
        Element x{&g, f, dspace.basis_vector(i)};
        Mat act = V.act(x);
        Mat qa = q * act;
        for (int r = 0; r < q.rows(); ++r)
            for (int c = 0; c < V.dim; ++c) cons.set(i * q.rows() + r, c, qa.get(r, c));
    }
    return kernel(cons);
}

Subspace derived_subalgebra_space(const LieAlgebra& g, const Subspace& dspace) {
    const Field& f = g.base_field();
    std::vector<Vec> rows;
    for (int i = 0; i < dspace.dim(); ++i)
        for (int j = i + 1; j < dspace.dim(); ++j)
            rows.push_back(g.bracket(Element{&g, f, dspace.basis_vector(i)},
                                     Element{&g, f, dspace.basis_vector(j)})
                               .coords);
    return Subspace::from_rows(f, g.dim(), rows);
}

} // namespace

// --- criterion 1: the virtually-free table ---------------------------------

void criterion_vfree_table(std::vector<Claim>& out, std::uint64_t seed) {
    struct Row {
        int n, dim_v, dim_ker;
    };
    for (Row row : {Row{3, 8, 14}, Row{4, 16, 27}, Row{5, 32, 44}, Row{6, 64, 65}}) {
        claim(out, "vfree_table/sp" + std::to_string(2 * row.n) + "_spin",
              "Sp_" + std::to_string(2 * row.n) +
                  " spin pullback: dim V, dim ker, virtually free generic stabilizer",
              [&]() -> std::pair<bool, std::string> {
                  LieAlgebra g = make_algebra(Family::C, row.n);
                  GModule V = irreducible(g, fw(g, 1));
                  StabilizerReport r = generic_stabilizer(V, cfg_with(seed, 100 + row.n));
                  bool pass = V.dim == row.dim_v && r.dim_ker == row.dim_ker &&
                              r.verdict == Verdict::virtually_free && trials_constant(r);
                  std::ostringstream os;
                  os << "dimV=" << V.dim << " " << dims_str(r);
                  return {pass, os.str()};
              });
    }
}

// --- criterion 2: spin of B_7 and B_4 ---------------------------------------

void criterion_spin_typeB(std::vector<Claim>& out, std::uint64_t seed) {
    claim(out, "spinB/b7_generically_free", "spin of B_7 (dim 128 > dim G = 105) is generically free",
          [&]() -> std::pair<bool, std::string> {
              LieAlgebra g = make_algebra(Family::B, 7);
              GModule V = spin_module(g);
              StabilizerReport r = generic_stabilizer(V, cfg_with(seed, 207));
              bool pass = V.dim == 128 && g.dim() == 105 && r.min_dim == 0 &&
                          r.verdict == Verdict::generically_free && trials_constant(r);
              return {pass, dims_str(r)};
          });
    claim(out, "spinB/b4_stabilizer_21",
          "spin of B_4: generic stabilizer dim 21 with n_v = 0 and m_v of dim 1",
          [&]() -> std::pair<bool, std::string> {
              LieAlgebra g = make_algebra(Family::B, 4);
              GModule V = spin_module(g);
              StabilizerReport r = generic_stabilizer(V, cfg_with(seed, 204));
              bool pass = V.dim == 16 && r.min_dim == 21 && trials_constant(r) &&
                          r.intersections.at("n_v") == 0 && r.intersections.at("m_v") == 1;
              std::ostringstream os;
              os << dims_str(r) << " n_v=" << r.intersections.at("n_v")
                 << " m_v=" << r.intersections.at("m_v");
              return {pass, os.str()};
          });
}

// --- criterion 3: spin sums --------------------------------------------------

void criterion_spin_sums(std::vector<Claim>& out, std::uint64_t seed) {
    const int copies_for[7] = {0, 0, 4, 4, 3, 2, 2};
    for (int n = 2; n <= 6; ++n) {
        int c = copies_for[n];
        claim(out, "spin_sums/b" + std::to_string(n) + "_x" + std::to_string(c),
              "sum of " + std::to_string(c) + " spin copies of B_" + std::to_string(n) +
                  " is generically free",
              [&, n, c]() -> std::pair<bool, std::string> {
                  LieAlgebra g = make_algebra(Family::B, n);
                  GModule V = direct_sum_copies(spin_module(g), c);
                  StabilizerReport r = generic_stabilizer(V, cfg_with(seed, 300 + std::uint64_t(n)));
                  bool pass = r.min_dim == 0 && r.verdict == Verdict::generically_free &&
                              trials_constant(r);
                  return {pass, dims_str(r)};
              });
    }
}

// --- criterion 4: F4 and G2 naturals -----------------------------------------

void criterion_fg_naturals(std::vector<Claim>& out, std::uint64_t seed) {
    struct Row {
        Family fam;
        int dim_v, stab;
    };
    for (Row row : {Row{Family::F4, 26, 28}, Row{Family::G2, 7, 8}}) {
        std::string fam = family_name(row.fam);
        claim(out, "fg/" + fam + "_natural_stab",
              fam + " natural module: faithful, generic stabilizer of dim " + std::to_string(row.stab),
              [&]() -> std::pair<bool, std::string> {
                  LieAlgebra g = make_algebra(row.fam, row.fam == Family::F4 ? 4 : 2);
                  GModule V = defining_module(g);
                  StabilizerReport r =
                      generic_stabilizer(V, cfg_with(seed, 400 + std::uint64_t(row.dim_v)));
                  bool pass = V.dim == row.dim_v && r.dim_ker == 0 && r.min_dim == row.stab &&
                              r.verdict == Verdict::neither && trials_constant(r);
                  return {pass, dims_str(r)};
              });
        claim(out, "fg/" + fam + "_pullback_meets_n",
              fam + " natural pulled back along the very special isogeny: stabilizer contains n",
              [&]() -> std::pair<bool, std::string> {
                  int rank = row.fam == Family::F4 ? 4 : 2;
                  LieAlgebra g = make_algebra(row.fam, rank);
                  LieAlgebra g2 = make_algebra(row.fam, rank);
                  VerySpecialMap d = very_special_differential(g, g2);
                  GModule V = pullback(d, defining_module(g2));
                  StabilizerReport r =
                      generic_stabilizer(V, cfg_with(seed, 450 + std::uint64_t(row.dim_v)));
                  int dim_n = g.distinguished().n.dim();
                  bool pass = r.intersections.at("n_v") == dim_n && r.dim_ker == dim_n &&
                              r.verdict == Verdict::neither;
                  std::ostringstream os;
                  os << dims_str(r) << " n_v=" << r.intersections.at("n_v") << " dim n=" << dim_n;
                  return {pass, os.str()};
              });
    }
}

// --- criterion 5: the 27-dimensional G2 module -------------------------------

void criterion_g2_27(std::vector<Claim>& out, std::uint64_t seed) {
    claim(out, "g2/dim27_generically_free",
          "G_2 module of weight (0,2): dim 27, trivial kernel, generically free",
          [&]() -> std::pair<bool, std::string> {
              LieAlgebra g = make_algebra(Family::G2, 2);
              GModule V = irreducible(g, fw(g, 2, 2));
              StabilizerReport r = generic_stabilizer(V, cfg_with(seed, 527));
              bool pass = V.dim == 27 && r.dim_ker == 0 && r.min_dim == 0 &&
                          r.verdict == Verdict::generically_free && trials_constant(r);
              return {pass, dims_str(r)};
          });
}

// --- criterion 6: type B catalog ---------------------------------------------

void criterion_typeB_catalog(std::vector<Claim>& out, std::uint64_t seed) {
    claim(out, "typeB/b3_w2_n_plus_torus",
          "B_3 module of weight omega_2: dim 14, generic stabilizer n + a toral part, dim 9",
          [&]() -> std::pair<bool, std::string> {
              LieAlgebra g = make_algebra(Family::B, 3);
              GModule V = irreducible(g, fw(g, 2));
              StabilizerReport r = generic_stabilizer(V, cfg_with(seed, 614));
              const Distinguished& d = g.distinguished();
              const Field ext = r.witness.space.field();
              // the stabilizer has the shape n + Lie(T) for a torus depending
              // on the sampled vector; the invariant part: it contains n and
              // its derived subalgebra falls back into n
              Subspace nlift = d.n.space.lift(ext);
              bool contains_n = r.witness.space.contains(nlift);
              bool derived_in_n = true;
              for (int i = 0; i < r.witness.dim() && derived_in_n; ++i)
                  for (int j = i + 1; j < r.witness.dim() && derived_in_n; ++j) {
                      Element br = g.bracket(r.witness.basis_element(i), r.witness.basis_element(j));
                      if (!nlift.contains_vector(br.coords)) derived_in_n = false;
                  }
              bool pass = V.dim == 14 && r.min_dim == 9 && trials_constant(r) &&
                          r.intersections.at("n_v") == 7 && contains_n && derived_in_n;
              std::ostringstream os;
              os << dims_str(r) << " n_v=" << r.intersections.at("n_v")
                 << " contains_n=" << (contains_n ? "yes" : "no")
                 << " [g_v,g_v] in n=" << (derived_in_n ? "yes" : "no");
              return {pass, os.str()};
          });
    for (int n : {4, 5}) {
        int node = n - 2, dimv = (n == 4) ? 48 : 100, dimn = 2 * n + 1;
        claim(out, "typeB/b" + std::to_string(n) + "_w" + std::to_string(node) + "_stab_n",
              "B_" + std::to_string(n) + " module of weight omega_" + std::to_string(node) +
                  ": dim " + std::to_string(dimv) + ", generic stabilizer exactly n",
              [&, n, node, dimv, dimn]() -> std::pair<bool, std::string> {
                  LieAlgebra g = make_algebra(Family::B, n);
                  GModule V = irreducible(g, fw(g, node));
                  StabilizerReport r =
                      generic_stabilizer(V, cfg_with(seed, 620 + std::uint64_t(n)));
                  const Distinguished& d = g.distinguished();
                  bool equal_n =
                      r.witness.space == d.n.space.lift(r.witness.space.field());
                  bool pass = V.dim == dimv && r.min_dim == dimn && equal_n && trials_constant(r);
                  std::ostringstream os;
                  os << dims_str(r) << " g_v==n:" << (equal_n ? "yes" : "no");
                  return {pass, os.str()};
              });
    }
    claim(out, "typeB/b3_dim64_virtually_free",
          "B_3 module of weight omega_2+omega_3: dim 64, virtually free with kernel n",
          [&]() -> std::pair<bool, std::string> {
              LieAlgebra g = make_algebra(Family::B, 3);
              Weight w = fw(g, 2);
              w.coords[2] = 1;
              GModule V = irreducible(g, w);
              StabilizerReport r = generic_stabilizer(V, cfg_with(seed, 664));
              bool ker_is_n = kernel_of_action(V).space == g.distinguished().n.space;
              bool pass = V.dim == 64 && r.verdict == Verdict::virtually_free && r.dim_ker == 7 &&
                          ker_is_n && trials_constant(r);
              std::ostringstream os;
              os << dims_str(r) << " ker==n:" << (ker_is_n ? "yes" : "no");
              return {pass, os.str()};
          });
}

// --- criterion 7: type C catalog ---------------------------------------------

void criterion_typeC_catalog(std::vector<Claim>& out, std::uint64_t seed) {
    for (int n : {3, 4}) {
        claim(out, "typeC/c" + std::to_string(n) + "_natural",
              "natural module of Sp_" + std::to_string(2 * n) + ": any nonzero vector has stabilizer of dim " +
                  std::to_string(2 * n * n - n),
              [&, n]() -> std::pair<bool, std::string> {
                  LieAlgebra g = make_algebra(Family::C, n);
                  GModule V = irreducible(g, fw(g, n));
                  StabilizerReport r = generic_stabilizer(V, cfg_with(seed, 700 + std::uint64_t(n)));
                  bool pass = V.dim == 2 * n && r.min_dim == 2 * n * n - n && trials_constant(r);
                  return {pass, dims_str(r)};
              });
    }
    claim(out, "typeC/c3_w2", "C_3 module of weight omega_2: dim 14, generic stabilizer of dim 9",
          [&]() -> std::pair<bool, std::string> {
              LieAlgebra g = make_algebra(Family::C, 3);
              GModule V = irreducible(g, fw(g, 2));
              StabilizerReport r = generic_stabilizer(V, cfg_with(seed, 714));
              bool pass = V.dim == 14 && r.min_dim == 9 && trials_constant(r);
              return {pass, dims_str(r)};
          });
    claim(out, "typeC/c3_dim48_virtually_free",
          "C_3 module of weight omega_1+omega_3: dim 48, virtually free with kernel z(g) of dim 1",
          [&]() -> std::pair<bool, std::string> {
              LieAlgebra g = make_algebra(Family::C, 3);
              Weight w = fw(g, 1);
              w.coords[2] = 1;
              GModule V = irreducible(g, w);
              StabilizerReport r = generic_stabilizer(V, cfg_with(seed, 748));
              bool ker_is_z = kernel_of_action(V).space == g.distinguished().z.space;
              bool pass = V.dim == 48 && r.dim_ker == 1 && ker_is_z &&
                          r.verdict == Verdict::virtually_free && trials_constant(r);
              std::ostringstream os;
              os << dims_str(r) << " ker==z:" << (ker_is_z ? "yes" : "no");
              return {pass, os.str()};
          });
}

// --- criterion 8: structural identity suite -----------------------------------

void criterion_structure(std::vector<Claim>& out, std::uint64_t) {
    std::vector<std::pair<Family, int>> cases;
    for (int n = 2; n <= 6; ++n) cases.emplace_back(Family::B, n);
    for (int n = 3; n <= 6; ++n) cases.emplace_back(Family::C, n);
    cases.emplace_back(Family::F4, 4);
    cases.emplace_back(Family::G2, 2);

    for (auto [fam, rank] : cases) {
        std::string tag = family_name(fam) + std::to_string(rank);
        claim(out, "structure/" + tag, "structural identities for " + tag,
              [&, fam, rank]() -> std::pair<bool, std::string> {
                  LieAlgebra g = make_algebra(fam, rank);
                  const Distinguished& d = g.distinguished();
                  std::ostringstream os;
                  bool pass = true;
                  auto note = [&](const char* what, bool ok) {
                      pass = pass && ok;
                      os << what << (ok ? "+" : "-") << " ";
                  };
                  Subspace zlong = g.center_of(d.g_long.space);
                  note("zlong+n=m", sum(zlong, d.n.space) == d.m.space);
                  note("glong^m=zlong", intersect(d.g_long.space, d.m.space) == zlong);
                  note("[gshort,gshort]=n", derived_subalgebra_space(g, d.g_short.space) == d.n.space);
                  int expect_n = 0;
                  switch (fam) {
                      case Family::B: expect_n = 2 * rank + 1; break;
                      case Family::C: expect_n = 2 * rank * rank - rank - 1; break;
                      case Family::F4: expect_n = 26; break;
                      case Family::G2: expect_n = 7; break;
                  }
                  note("dim n", d.n.dim() == expect_n);
                  if (fam == Family::B) {
                      Subspace zh = g.center_of(d.n.space);
                      note("[h,h]=z(h) dim1",
                           zh.dim() == 1 && derived_subalgebra_space(g, d.n.space) == zh);
                  }
                  if (fam == Family::C) note("z in n iff even", d.z_in_n == (rank % 2 == 0));
                  {
                      LieAlgebra tgt = make_algebra(dual_family(fam), rank);
                      VerySpecialMap vs = very_special_differential(g, tgt); // verifies hom + kernel
                      note("dpi", vs.matrix.rank() == g.dim() - d.n.dim());
                  }
                  return {pass, os.str()};
              });
    }
}

// --- criterion 9: formula suite -------------------------------------------------

void criterion_formulas(std::vector<Claim>& out, std::uint64_t seed) {
    claim(out, "formulas/sp_orbit_centralizer",
          "square-zero orbit and centralizer dimensions in sp_2n sum to dim G for all n <= 12",
          [&]() -> std::pair<bool, std::string> {
              for (int n = 1; n <= 12; ++n)
                  for (int r = 1; r <= n; ++r)
                      if (sp_sqzero_orbit_dim(n, r) + sp_sqzero_centralizer(n, r) != 2LL * n * n + n)
                          return {false, "mismatch at n=" + std::to_string(n) + " r=" + std::to_string(r)};
              return {true, "all n <= 12"};
          });
    claim(out, "formulas/so_odd_bound",
          "nilpotent orbit bound r(2n+1-r) holds for so_{2n+1}, all n <= 12",
          [&]() -> std::pair<bool, std::string> {
              for (int n = 2; n <= 12; ++n)
                  for (int r = 1; r <= 2 * n; ++r) {
                      SoOddNilpotentDims d = so_odd_centralizer(n, r);
                      if (d.orbit > d.bound) return {false, "bound violated"};
                  }
              SoOddNilpotentDims d42 = so_odd_centralizer(4, 2);
              return {d42.centralizer == 22 && d42.orbit == 14, "centralizer(4,2)=22 orbit=14"};
          });
    claim(out, "formulas/toral_B_bound", "toral orbit dimensions in so_{2n+1} stay below n^2+n",
          [&]() -> std::pair<bool, std::string> {
              for (int n = 2; n <= 12; ++n)
                  for (int r = 0; r <= n; ++r)
                      if (toral_orbit_dim_B(n, r) > (long long)n * n + n)
                          return {false, "exceeded at n=" + std::to_string(n)};
              return {true, "max over r <= n^2+n for all n <= 12"};
          });
    claim(out, "formulas/second_min_C", "s(3)=14, s(4)=26, 2n*s(n)=84/208, and > 6n^2+6n from n=5",
          [&]() -> std::pair<bool, std::string> {
              bool pass = second_min_dim_C(3) == 14 && second_min_dim_C(4) == 26 &&
                          6 * second_min_dim_C(3) == 84 && 8 * second_min_dim_C(4) == 208;
              for (int n = 5; n <= 12; ++n)
                  pass = pass && 2LL * n * second_min_dim_C(n) > 6LL * n * n + 6 * n;
              return {pass, "s(3)=" + std::to_string(second_min_dim_C(3)) +
                                " s(4)=" + std::to_string(second_min_dim_C(4))};
          });
    claim(out, "formulas/threshold_totality",
          "every named dimension threshold evaluates over its full rank range",
          [&]() -> std::pair<bool, std::string> {
              long long acc = 0;
              acc += threshold("FG_dim", Family::F4, 4) + threshold("FG_dim", Family::G2, 2);
              acc += threshold("long_root", Family::F4, 4) + threshold("long_root", Family::G2, 2);
              acc += threshold("short_root", Family::F4, 4) + threshold("short_root", Family::G2, 2);
              for (int n = 3; n <= 12; ++n) acc += threshold("long_root", Family::B, n);
              for (int n = 2; n <= 12; ++n) acc += threshold("long_root", Family::C, n);
              for (int n = 2; n <= 12; ++n) acc += threshold("short_root", Family::B, n);
              for (int n = 3; n <= 12; ++n) acc += threshold("short_root", Family::C, n);
              for (int n = 3; n <= 12; ++n) {
                  acc += threshold("C_faithful", Family::C, n, false);
                  acc += threshold("C_faithful", Family::C, n, true);
              }
              for (int n = 2; n <= 12; ++n) acc += threshold("B_faithful", Family::B, n);
              for (int n = 3; n <= 12; ++n) acc += threshold("B_vs", Family::B, n);
              for (int n = 2; n <= 12; ++n) acc += threshold("B_quo", Family::B, n);
              bool spot = threshold("FG_dim", Family::F4, 4) == 240 &&
                          threshold("C_faithful", Family::C, 4, false) == 72 &&
                          threshold("C_faithful", Family::C, 4, true) == 80 &&
                          threshold("B_quo", Family::B, 3) == 84 &&
                          threshold("short_root", Family::C, 3) == 30;
              return {spot && acc > 0, "checksum=" + std::to_string(acc)};
          });
    claim(out, "formulas/short_root_parity",
          "pairings of short coroots with 200 random root-lattice weights of B_4 are even",
          [&]() -> std::pair<bool, std::string> {
              RootSystem rs = RootSystem::build(Family::B, 4);
              std::vector<int> shorts;
              for (int i = 0; i < rs.num_positive(); ++i)
                  if (!rs.positive(i).is_long) shorts.push_back(i);
              Rng rng(Rng(seed).split(900).seed_state());
              for (int t = 0; t < 200; ++t) {
                  std::vector<int> lam(4);
                  for (auto& c : lam) c = int(rng.next() % 17) - 8;
                  for (int s : shorts)
                      if (pairing_parity_check(rs, lam, s) % 2 != 0) return {false, "odd pairing"};
              }
              return {true, "200 weights x " + std::to_string(shorts.size()) + " short roots"};
          });
}

// --- criterion 10: property suites ----------------------------------------------

void criterion_properties(std::vector<Claim>& out, std::uint64_t seed) {
    claim(out, "properties/annihilator_inclusion",
          "(V/V^d)^d lies inside V^{[d,d]}/V^d for d = g and d = n on 20 catalog modules",
          [&]() -> std::pair<bool, std::string> {
              struct Item {
                  Family fam;
                  int rank;
                  std::vector<int> weight;
              };
              std::vector<Item> items = {
                  {Family::B, 2, {1, 0}},       {Family::B, 2, {0, 1}},
                  {Family::B, 3, {1, 0, 0}},    {Family::B, 3, {0, 0, 1}},
                  {Family::B, 3, {0, 1, 0}},    {Family::B, 3, {0, 1, 1}},
                  {Family::B, 4, {1, 0, 0, 0}}, {Family::B, 4, {0, 0, 0, 1}},
                  {Family::B, 4, {0, 1, 0, 0}}, {Family::B, 5, {1, 0, 0, 0, 0}},
                  {Family::C, 3, {1, 0, 0}},    {Family::C, 3, {0, 0, 1}},
                  {Family::C, 3, {0, 1, 0}},    {Family::C, 3, {1, 0, 1}},
                  {Family::C, 4, {0, 0, 0, 1}}, {Family::C, 4, {1, 0, 0, 0}},
                  {Family::F4, 4, {0, 0, 0, 1}},{Family::F4, 4, {1, 0, 0, 0}},
                  {Family::G2, 2, {0, 1}},      {Family::G2, 2, {0, 2}},
              };
              int count = 0;
              for (const auto& it : items) {
                  LieAlgebra g = make_algebra(it.fam, it.rank);
                  GModule V = irreducible(g, Weight{it.weight});
                  const Field& f = g.base_field();
                  Subspace full = Subspace::full(f, g.dim());
                  for (const Subspace& d : {full, g.distinguished().n.space}) {
                      Subspace pre = annihilator_preimage(V, d);
                      Subspace vdd = fixed_space_subalg(V, derived_subalgebra_space(g, d));
                      if (!vdd.contains(pre))
                          return {false, "inclusion failed on " + V.provenance};
                      ++count;
                  }
              }
              return {true, std::to_string(count) + " inclusions verified (20 modules x {g, n})"};
          });
    claim(out, "properties/three_quarters_bound",
          "dim V^x <= (3/4) dim V for 100 random square-zero/toral x on spin modules with V^z = 0",
          [&]() -> std::pair<bool, std::string> {
              Rng rng(Rng(seed).split(1010).seed_state());
              for (int n = 2; n <= 6; ++n) {
                  LieAlgebra g = make_algebra(Family::B, n);
                  GModule V = spin_module(g);
                  // V^z = 0 sanity
                  if (fixed_space_subalg(V, g.distinguished().z.space).dim() != 0)
                      return {false, "spin module has central fixed vectors"};
                  Field ext = Field::make(2, 8);
                  const Distinguished& d = g.distinguished();
                  for (int t = 0; t < 100; ++t) {
                      Element x = g.zero_element(ext);
                      if (t % 2 == 0) {
                          // random noncentral toral combination of the coroot basis
                          bool central = true;
                          while (central) {
                              for (int u = 0; u < n; ++u)
                                  x.coords[std::size_t(g.h_index(u))] =
                                      (rng.next() & 1) ? ext.one() : ext.zero();
                              central = x.is_zero() ||
                                        d.z.space.lift(ext).contains_vector(x.coords);
                          }
                      } else {
                          // random conjugate of a square-zero class representative
                          int r = 1 + int(rng.next() % std::uint64_t(n));
                          Element rep =
                              representative(g, ClassLabel{Family::B, n, ClassKind::sqzero, r});
                          Vec v(rep.coords.size());
                          for (std::size_t q = 0; q < v.size(); ++q) v[q] = rep.coords[q];
                          for (int w = 0; w < 8; ++w) {
                              int ref = int(rng.next() % std::uint64_t(g.num_pos()));
                              if (rng.next() & 1) ref = neg_ref(ref);
                              v = g.ad_one_param(ref, ext.sample(rng), ext).apply(v);
                          }
                          x = g.element(ext, std::move(v));
                      }
                      int fix = fixed_space(V, x).dim();
                      if (4 * fix > 3 * V.dim)
                          return {false, "bound failed on spin(B" + std::to_string(n) + ")"};
                  }
              }
              return {true, "100 elements per spin module, B_2..B_6"};
          });
    claim(out, "properties/mother_inequality_spin17",
          "dim x^G + dim V^x < dim V for the spin module of B_8 and every realizable toral class",
          [&]() -> std::pair<bool, std::string> {
              LieAlgebra g = make_algebra(Family::B, 8);
              GModule V = spin_module(g);
              std::ostringstream os;
              // toral classes carry even D-rank; the orbit formula is still
              // evaluated (and bounded) over the full range 0..n
              for (int r = 0; r <= 8; ++r)
                  if (toral_orbit_dim_B(8, r) > 72) return {false, "orbit bound violated"};
              for (int r : {2, 4, 6, 8}) {
                  Element x = representative(g, ClassLabel{Family::B, 8, ClassKind::toral_B, r});
                  MotherInequality m = mother_inequality(V, x, toral_orbit_dim_B(8, r));
                  os << "r=" << r << ":margin=" << m.margin << " ";
                  if (!m.holds) return {false, os.str()};
              }
              return {true, os.str()};
          });
}

// --- criterion 11: the counterexample module ------------------------------------

void criterion_counterexample(std::vector<Claim>& out, std::uint64_t seed) {
    claim(out, "counterexample/b2_not_virtually_free",
          "B_2 with V = n + 5 natural copies: stabilizer dim 4 = 2n but kernel dim 1, verdict neither",
          [&]() -> std::pair<bool, std::string> {
              LieAlgebra g = make_algebra(Family::B, 2);
              GModule nat = irreducible(g, fw(g, 2));
              GModule nmod = sub_module(adjoint_module(g), g.distinguished().n.space, "n-module(B2)");
              GModule V = direct_sum(nmod, direct_sum_copies(nat, 5));
              StabilizerReport r = generic_stabilizer(V, cfg_with(seed, 1100));
              bool pass = V.dim == 25 && r.min_dim == 4 && r.dim_ker == 1 &&
                          r.verdict == Verdict::neither && trials_constant(r);
              return {pass, dims_str(r)};
          });
    claim(out, "counterexample/b2_quotient_growth",
          "dim V/V^{[g,g]} grows without bound in the number of summed copies, with trivial action on it",
          [&]() -> std::pair<bool, std::string> {
              LieAlgebra g = make_algebra(Family::B, 2);
              const Field& f = g.base_field();
              GModule nat = irreducible(g, fw(g, 2));
              GModule nmod = sub_module(adjoint_module(g), g.distinguished().n.space, "n-module(B2)");
              Subspace derived = derived_subalgebra_space(g, Subspace::full(f, g.dim()));
              int prev = -1;
              std::ostringstream os;
              for (int m = 1; m <= 3; ++m) {
                  GModule V = direct_sum(nmod, direct_sum_copies(nat, 5 * m));
                  int dim_x = V.dim - fixed_space_subalg(V, derived).dim();
                  os << "m=" << m << ":dimX=" << dim_x << " ";
                  if (dim_x <= prev) return {false, os.str() + "(not growing)"};
                  prev = dim_x;
                  // X^{[g,g]} = 0: the preimage of the fixed space of the quotient
                  // is no bigger than V^{[g,g]} itself
                  Subspace pre = annihilator_preimage(V, derived);
                  if (!(pre == fixed_space_subalg(V, derived))) return {false, os.str() + "(X fixed)"};
              }
              return {true, os.str()};
          });
}

// ---------------------------------------------------------------------------

std::vector<std::string> suite_names() {
    return {"ivfree", "structure", "typeB", "typeC", "FG", "counterexample", "bounds", "all"};
}

VerificationReport run_suite(const std::string& name, std::uint64_t seed) {
    VerificationReport rep;
    rep.suite = name;
    rep.seed = seed;
    auto add = [&](void (*fn)(std::vector<Claim>&, std::uint64_t)) { fn(rep.claims, seed); };
    if (name == "ivfree") {
        add(criterion_vfree_table);
    } else if (name == "structure") {
        add(criterion_structure);
    } else if (name == "typeB") {
        add(criterion_spin_typeB);
        add(criterion_spin_sums);
        add(criterion_typeB_catalog);
    } else if (name == "typeC") {
        add(criterion_typeC_catalog);
    } else if (name == "FG") {
        add(criterion_fg_naturals);
        add(criterion_g2_27);
    } else if (name == "counterexample") {
        add(criterion_counterexample);
    } else if (name == "bounds") {
        add(criterion_formulas);
        add(criterion_properties);
    } else if (name == "all") {
        add(criterion_vfree_table);
        add(criterion_spin_typeB);
        add(criterion_spin_sums);
        add(criterion_fg_naturals);
        add(criterion_g2_27);
        add(criterion_typeB_catalog);
        add(criterion_typeC_catalog);
        add(criterion_structure);
        add(criterion_formulas);
        add(criterion_properties);
        add(criterion_counterexample);
    } else {
        throw unsupported_error("unknown suite '" + name + "'");
    }
    return rep;
}

} // namespace charplie
