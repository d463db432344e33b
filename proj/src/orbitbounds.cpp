#include "charplie/orbitbounds.hpp"

#include <algorithm>

namespace charplie {

namespace {

long long binom2(long long m) { return m * (m - 1) / 2; }

long long dim_g(Family f, int n) {
    switch (f) {
        case Family::B:
        case Family::C: return 2LL * n * n + n;
        case Family::F4: return 52;
        case Family::G2: return 14;
    }
    return 0;
}

} // namespace

long long sp_sqzero_orbit_dim(int n, int r) {
    if (r < 1 || r > n) throw unsupported_error("sp_sqzero_orbit_dim: need 1 <= r <= n");
    return (long long)r * (2 * n + 1) - (long long)r * r;
}

long long sp_sqzero_centralizer(int n, int r) {
    if (r < 0 || r > n) throw unsupported_error("sp_sqzero_centralizer: need 0 <= r <= n");
    if (r == 0) return dim_g(Family::C, n); // the zero class
    return (2LL * n - r) + binom2(2LL * n - r) + binom2(r);
}

SoOddNilpotentDims so_odd_centralizer(int n, int r) {
    if (r < 1 || r > 2 * n) throw unsupported_error("so_odd_centralizer: need 1 <= r <= 2n");
    SoOddNilpotentDims d;
    d.centralizer = binom2(2LL * n + 1 - r) + binom2(r);
    d.orbit = dim_g(Family::B, n) - d.centralizer;
    d.bound = (long long)r * (2 * n + 1 - r);
    if (d.orbit > d.bound) throw invariant_error("so_odd_centralizer: orbit exceeds its bound");
    return d;
}

long long toral_orbit_dim_B(int n, int r) {
    if (r < 0 || r > n) throw unsupported_error("toral_orbit_dim_B: need 0 <= r <= n");
    long long dr = 2LL * r * r - r;            // type D_r
    long long bnr = 2LL * (n - r) * (n - r) + (n - r); // type B_{n-r}
    return dim_g(Family::B, n) - dr - bnr;
}

long long generation_count(const ClassLabel& c) {
    if (c.family != Family::C) throw unsupported_error("generation_count: type C classes only");
    int n = c.rank;
    switch (c.kind) {
        case ClassKind::toral_sp: {
            int s = c.r;
            if (s < 1) throw unsupported_error("generation_count: toral class needs s >= 1");
            return std::max(4LL, (long long)((n + s - 1) / s));
        }
        case ClassKind::sqzero: {
            int r = c.r;
            if (r == 1) return std::max(8LL, 2LL * n);
            int s = (r % 2 == 0) ? r / 2 : (r - 1) / 2;
            return std::max(4LL, (long long)((n + s - 1) / s));
        }
        case ClassKind::long_root: return std::max(8LL, 2LL * n);
        case ClassKind::short_root: return std::max(4LL, (long long)n);
        default: throw unsupported_error("generation_count: class not applicable");
    }
}

namespace {

// indices of the positive long / short roots, in root order
std::vector<int> roots_of_length(const RootSystem& rs, bool want_long) {
    std::vector<int> out;
    for (int i = 0; i < rs.num_positive(); ++i)
        if (rs.positive(i).is_long == want_long) out.push_back(i);
    return out;
}

// mod-p support of a defining-module action matrix
struct SupportInfo {
    std::vector<bool> rows, cols;
};

SupportInfo support_of(const Mat& m) {
    SupportInfo s;
    s.rows.assign(std::size_t(m.rows()), false);
    s.cols.assign(std::size_t(m.cols()), false);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            FieldElement v = m.get(i, j);
            if (v.lo || v.hi) {
                s.rows[std::size_t(i)] = true;
                s.cols[std::size_t(j)] = true;
            }
        }
    return s;
}

bool disjoint(const SupportInfo& a, const SupportInfo& b) {
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        if (a.rows[i] && b.rows[i]) return false;
        if (a.cols[i] && b.cols[i]) return false;
        // products in either order must vanish too
        if (a.cols[i] && b.rows[i]) return false;
        if (a.rows[i] && b.cols[i]) return false;
    }
    return true;
}

// greedy commuting family of root elements of the requested lengths whose
// defining images have pairwise disjoint support
std::vector<int> greedy_disjoint(const GModule& defining, const std::vector<int>& candidates,
                                 const LieAlgebra& g, int how_many) {
    std::vector<int> chosen;
    std::vector<SupportInfo> sup;
    for (int idx : candidates) {
        if (int(chosen.size()) == how_many) break;
        SupportInfo s = support_of(defining.action[std::size_t(g.e_index(idx))]);
        bool ok = true;
        for (const auto& t : sup)
            if (!disjoint(s, t)) { ok = false; break; }
        if (!ok) continue;
        chosen.push_back(idx);
        sup.push_back(std::move(s));
    }
    if (int(chosen.size()) != how_many)
        throw unsupported_error("representative: class parameters out of range");
    return chosen;
}

int mat_rank_of_action(const GModule& defining, const Element& x) {
    return defining.act(x).rank();
}

} // namespace

Element representative(const LieAlgebra& g, const ClassLabel& c) {
    const RootSystem& rs = g.roots();
    if (rs.family() != c.family || rs.rank() != c.rank)
        throw error("representative: class label does not match the algebra");
    const Field& f = g.base_field();
    int n = rs.rank();
    GModule def = defining_module(g);
    std::vector<int> longs = roots_of_length(rs, true);
    std::vector<int> shorts = roots_of_length(rs, false);

    Element x = g.zero_element(f);
    int expect_rank = -1;
    bool expect_nilpotent = false;

    switch (c.kind) {
        case ClassKind::long_root:
            x.coords[std::size_t(g.e_index(longs.front()))] = f.one();
            expect_rank = (c.family == Family::C) ? 1 : 2;
            expect_nilpotent = true;
            break;
        case ClassKind::short_root:
            x.coords[std::size_t(g.e_index(shorts.front()))] = f.one();
            expect_nilpotent = true;
            break;
        case ClassKind::sqzero: {
            int r = c.r;
            if (r < 1) throw unsupported_error("representative: square-zero rank must be positive");
            expect_rank = r;
            expect_nilpotent = true;
            if (c.family == Family::C) {
                if (r % 2 == 1) {
                    // odd rank: commuting long root elements, not inside m
                    if (r > n) throw unsupported_error("representative: rank exceeds n");
                    for (int i = 0; i < r; ++i)
                        x.coords[std::size_t(g.e_index(longs[std::size_t(i)]))] = f.one();
                } else {
                    // even rank 2s: commuting short root elements, inside m
                    for (int idx : greedy_disjoint(def, shorts, g, r / 2))
                        x.coords[std::size_t(g.e_index(idx))] = f.one();
                }
            } else if (c.family == Family::B) {
                int t = r / 2;
                std::vector<int> chosen = greedy_disjoint(def, longs, g, t);
                for (int idx : chosen) x.coords[std::size_t(g.e_index(idx))] = f.one();
                if (r % 2 == 1) {
                    // add a short root element with disjoint support
                    std::vector<SupportInfo> sup;
                    for (int idx : chosen)
                        sup.push_back(support_of(def.action[std::size_t(g.e_index(idx))]));
                    bool placed = false;
                    for (int idx : shorts) {
                        SupportInfo s = support_of(def.action[std::size_t(g.e_index(idx))]);
                        bool ok = true;
                        for (const auto& u : sup)
                            if (!disjoint(s, u)) { ok = false; break; }
                        if (ok) {
                            x.coords[std::size_t(g.e_index(idx))] = f.one();
                            placed = true;
                            break;
                        }
                    }
                    if (!placed) throw unsupported_error("representative: rank out of range");
                }
            } else {
                throw unsupported_error("representative: square-zero classes modeled for B and C");
            }
            break;
        }
        case ClassKind::toral_sp: {
            if (c.family != Family::C) throw unsupported_error("representative: toral_sp is a type C class");
            int s = c.r;
            if (s < 1 || 2 * s > n) throw unsupported_error("representative: need 1 <= s <= n/2");
            for (int i = 0; i < s; ++i) {
                std::vector<int> cc = rs.coroot_coeffs(longs[std::size_t(i)]);
                for (int t = 0; t < n; ++t) {
                    FieldElement add = f.from_int(cc[std::size_t(t)]);
                    auto& dst = x.coords[std::size_t(g.h_index(t))];
                    dst = f.add(dst, add);
                }
            }
            expect_rank = 2 * s;
            break;
        }
        case ClassKind::toral_B: {
            if (c.family != Family::B) throw unsupported_error("representative: toral_B is a type B class");
            int r = c.r;
            if (r < 1 || r > n) throw unsupported_error("representative: need 1 <= r <= n");
            // in the simply connected algebra the toral elements sit in the
            // coroot lattice mod 2, which forces the D-part rank to be even
            if (r % 2 != 0)
                throw unsupported_error(
                    "representative: toral classes of odd D-rank are not realized in spin_{2n+1}");
            // pairing pattern [i <= r] over the chain, transported to the fixed
            // numbering (node i here corresponds to chain position n+1-i)
            for (int bj = 1; bj <= n - 1; ++bj) {
                int cval = (bj <= r) ? (bj % 2) : 0;
                if (cval) {
                    int node = n + 1 - bj; // 1-based local node
                    x.coords[std::size_t(g.h_index(node - 1))] = f.one();
                }
            }
            break;
        }
    }

    // verify the class-defining properties
    ElementClass cls = g.classify(x);
    if (expect_nilpotent) {
        if (cls != ElementClass::nilpotent || !g.p_power(x).is_zero())
            throw invariant_error("representative: expected a square-zero nilpotent");
    } else {
        if (cls != ElementClass::toral) throw invariant_error("representative: expected a toral element");
    }
    if (expect_rank >= 0 && mat_rank_of_action(def, x) != expect_rank)
        throw invariant_error("representative: defining-module rank mismatch");
    if (c.kind == ClassKind::toral_B) {
        // centralizer of type D_r x B_{n-r}: Cartan plus its root spaces
        long long expect_cent = n + 2LL * c.r * (c.r - 1) + 2LL * (n - c.r) * (n - c.r);
        if (g.centralizer(x).dim() != expect_cent)
            throw invariant_error("representative: toral centralizer type mismatch");
    }
    if (g.special() && c.family == Family::C) {
        const Distinguished& d = g.distinguished();
        bool in_m = d.m.space.contains_vector(x.coords);
        bool should_be_in_m = (c.kind == ClassKind::toral_sp) ||
                              (c.kind == ClassKind::sqzero && c.r % 2 == 0) ||
                              c.kind == ClassKind::short_root;
        if (in_m != should_be_in_m)
            throw invariant_error("representative: m-membership pattern violated");
    }
    return x;
}

MotherInequality mother_inequality(const GModule& V, const Element& x, long long orbit_dim) {
    MotherInequality m;
    m.orbit_dim = orbit_dim;
    m.dim_v = V.dim;
    m.fixed_dim = fixed_space(V, x).dim();
    m.margin = (long long)V.dim - orbit_dim - m.fixed_dim;
    m.holds = m.margin > 0;
    return m;
}

HeisCriteria heis_criteria(const GModule& V) {
    const LieAlgebra& g = *V.g;
    const RootSystem& rs = g.roots();
    int n = rs.rank();
    const Field& f = g.base_field();
    const Distinguished& d = g.distinguished();
    HeisCriteria h;
    h.dim_v = V.dim;

    Subspace center_preimage = Subspace::zero(f, g.dim());
    Subspace hfix = Subspace::zero(f, V.dim);
    if (rs.family() == Family::B) {
        center_preimage = d.z.space;
        hfix = fixed_space_subalg(V, d.n.space);
    } else if (rs.family() == Family::C) {
        // the Heisenberg algebra is g / ker dpi; the module must kill n
        for (int i = 0; i < d.n.dim(); ++i) {
            Element e{&g, f, d.n.space.basis_vector(i)};
            if (!V.act(e).is_zero())
                throw error("heis_criteria: the action does not vanish on ker dpi");
        }
        // preimage of z(h): elements whose brackets with g land in n
        Mat qn = d.n.space.quotient_map();
        EchelonBasis cons(f, g.dim());
        for (int b = 0; b < g.dim(); ++b) {
            for (int row = 0; row < qn.rows(); ++row) {
                Vec cvec(std::size_t(g.dim()), FieldElement{});
                bool nz = false;
                for (int i = 0; i < g.dim(); ++i) {
                    // coefficient of x_i in Q_n([b_i, b_b])[row]
                    FieldElement acc{};
                    for (auto [bb, cc] : g.bracket_z(i, b)) {
                        FieldElement t = f.mul(qn.get(row, bb), f.from_int(cc));
                        acc = f.add(acc, t);
                    }
                    cvec[std::size_t(i)] = acc;
                    if (acc.lo || acc.hi) nz = true;
                }
                if (nz) cons.insert(cvec);
            }
        }
        Mat consm(f, cons.dim(), g.dim());
        for (int i = 0; i < cons.dim(); ++i) consm.set_row(i, cons.row(i));
        center_preimage = kernel(consm);
        hfix = fixed_space_subalg(V, Subspace::full(f, g.dim()));
    } else {
        throw unsupported_error("heis_criteria: types B and C only");
    }

    h.dim_fix_center = fixed_space_subalg(V, center_preimage).dim();
    h.dim_fix_h = hfix.dim();
    h.crit1 = 4LL * n + h.dim_fix_center < (long long)V.dim;
    h.crit2 = (h.dim_fix_h == 0) && (4LL * n * n < (long long)V.dim);
    return h;
}

long long threshold(const std::string& prop, Family fam, int rank, bool adjoint_form) {
    auto bad = [&]() -> long long {
        throw unsupported_error("threshold: no bound named for " + prop + " / " + family_name(fam) +
                                std::to_string(rank));
    };
    if (prop == "long_root") {
        if (fam == Family::F4) return 64;
        if (fam == Family::G2) return 20;
        if (fam == Family::B) return rank == 3 ? 30 : (rank >= 4 ? 4LL * rank * rank : bad());
        if (fam == Family::C) return rank >= 2 ? 4LL * rank * rank : bad();
        return bad();
    }
    if (prop == "short_root") {
        if (fam == Family::F4) return 64;
        if (fam == Family::G2) return 20;
        if (fam == Family::C) return rank == 3 ? 30 : (rank >= 4 ? 4LL * rank * rank : bad());
        if (fam == Family::B) return rank >= 2 ? 4LL * rank * rank : bad();
        return bad();
    }
    if (prop == "FG_dim") {
        if (fam == Family::F4) return 240;
        if (fam == Family::G2) return 48;
        return bad();
    }
    if (prop == "C_faithful") {
        if (fam != Family::C) return bad();
        if (rank == 3) return 48;
        if (rank == 4) return adjoint_form ? 80 : 72;
        if (rank >= 5) return 6LL * rank * rank + 6 * rank;
        return bad();
    }
    if (prop == "B_faithful") {
        if (fam != Family::B || rank < 2) return bad();
        return 4LL * rank * rank + 4 * rank;
    }
    if (prop == "B_vs") {
        if (fam != Family::B || rank < 3) return bad();
        return 4LL * rank * rank;
    }
    if (prop == "B_quo") {
        if (fam != Family::B || rank < 2) return bad();
        return 8LL * rank * rank + 4 * rank;
    }
    return bad();
}

long long second_min_dim_C(int n) {
    if (n < 3) throw unsupported_error("second_min_dim_C: n >= 3");
    return (n % 2) ? (2LL * n * n - n - 1) : (2LL * n * n - n - 2);
}

namespace {

bool generation_experiment_impl(const LieAlgebra& g, const ClassLabel& c, int count,
                                std::uint64_t seed, bool against_full) {
    Element rep = representative(g, c);
    Field ext = Field::make(g.p(), 8);
    Subspace target = against_full ? Subspace::full(ext, g.dim())
                                   : g.distinguished().n.space.lift(ext);
    Rng rng(seed);
    for (int draw = 0; draw < 10; ++draw) {
        std::vector<Element> conj;
        for (int t = 0; t < count; ++t) {
            // conjugate by a random word of one-parameter automorphisms
            Vec v(std::size_t(g.dim()), FieldElement{});
            for (int i = 0; i < g.dim(); ++i) v[std::size_t(i)] = rep.coords[std::size_t(i)];
            for (int w = 0; w < 10; ++w) {
                int ref = int(rng.next() % std::uint64_t(g.num_pos()));
                if (rng.next() & 1) ref = neg_ref(ref);
                FieldElement tv = ext.sample(rng);
                Mat A = g.ad_one_param(ref, tv, ext);
                v = A.apply(v);
            }
            conj.push_back(g.element(ext, std::move(v)));
        }
        Subalg s = g.generated_subalgebra(conj);
        if (s.space.contains(target)) return true;
    }
    return false;
}

} // namespace

bool generation_experiment(const LieAlgebra& g, const ClassLabel& c, int count, std::uint64_t seed) {
    return generation_experiment_impl(g, c, count, seed, false);
}

bool generation_experiment_full(const LieAlgebra& g, const ClassLabel& c, int count,
                                std::uint64_t seed) {
    return generation_experiment_impl(g, c, count, seed, true);
}

} // namespace charplie
