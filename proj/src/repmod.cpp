#include "charplie/repmod.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace charplie {

namespace {

Weight weight_add(const Weight& a, const Weight& b) {
    Weight r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

Weight weight_neg(const Weight& a) {
    Weight r = a;
    for (auto& c : r.coords) c = -c;
    return r;
}

Weight zero_weight_of(const LieAlgebra& g) { return g.roots().zero_weight(); }

} // namespace


namespace {

Vec unit_vec(const Field& f, int dim, int idx) {
    Vec v(std::size_t(dim), FieldElement{});
    v[std::size_t(idx)] = f.one();
    return v;
}

} // namespace

Mat GModule::act(const Element& x) const {
    if (x.algebra != g) throw error("GModule::act: algebra mismatch");
    const Field& f = x.field;
    Mat out(f, dim, dim);
    for (int i = 0; i < g->dim(); ++i) {
        const FieldElement& c = x.coords[std::size_t(i)];
        if (!c.lo && !c.hi) continue;
        const Mat& A = action[std::size_t(i)];
        for (int r = 0; r < dim; ++r)
            for (int cc = 0; cc < dim; ++cc) {
                FieldElement v = A.get(r, cc);
                if (!v.lo && !v.hi) continue;
                out.set(r, cc, f.add(out.get(r, cc), f.mul(c, v)));
            }
    }
    return out;
}

std::vector<std::pair<Weight, Subspace>> GModule::weight_decomposition() const {
    if (!has_weights()) throw error("weight_decomposition: module has no weight data");
    std::map<std::vector<int>, std::vector<int>> groups;
    for (int i = 0; i < dim; ++i) groups[weights[std::size_t(i)].coords].push_back(i);
    std::vector<std::pair<Weight, Subspace>> out;
    const Field& f = g->base_field();
    for (auto& [wc, idxs] : groups) {
        std::vector<Vec> rows;
        for (int i : idxs) {
            Vec v(std::size_t(dim), FieldElement{});
            v[std::size_t(i)] = f.one();
            rows.push_back(std::move(v));
        }
        out.emplace_back(Weight{wc}, Subspace::from_rows(f, dim, rows));
    }
    return out;
}

void verify_gmodule(const GModule& m) {
    const LieAlgebra& g = *m.g;
    const Field& f = g.base_field();
    if (int(m.action.size()) != g.dim()) throw invariant_error("module: wrong action count");
    // Cartan acts diagonally by the declared weights
    if (m.has_weights()) {
        for (int t = 0; t < g.roots().rank(); ++t) {
            const Mat& H = m.action[std::size_t(g.h_index(t))];
            for (int r = 0; r < m.dim; ++r)
                for (int c = 0; c < m.dim; ++c) {
                    FieldElement expect =
                        (r == c) ? f.from_int(m.weights[std::size_t(r)].coords[std::size_t(t)])
                                 : FieldElement{};
                    if (!(H.get(r, c) == expect))
                        throw invariant_error("module: Cartan action disagrees with weights");
                }
        }
    }
    // bracket compatibility on all basis pairs
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i + 1; j < g.dim(); ++j) {
            Mat lhs(f, m.dim, m.dim);
            for (auto [b, c] : g.bracket_z(i, j)) {
                Mat t = m.action[std::size_t(b)].scaled(f.from_int(c));
                lhs = lhs + t;
            }
            Mat rhs = m.action[std::size_t(i)] * m.action[std::size_t(j)] -
                      m.action[std::size_t(j)] * m.action[std::size_t(i)];
            if (!(lhs == rhs)) throw invariant_error("module: bracket compatibility failed");
        }
    // p-power compatibility on the basis: e -> 0, h -> h
    for (int b = 0; b < g.dim(); ++b) {
        Mat P = m.action[std::size_t(b)].pow(std::uint64_t(g.p()));
        Mat expect = g.basis_is_cartan(b) ? m.action[std::size_t(b)] : Mat(f, m.dim, m.dim);
        if (!(P == expect)) throw invariant_error("module: p-power compatibility failed");
    }
}

// ---------------------------------------------------------------------------
// integral generator models and the extension to the full basis

namespace {

struct ModelGens {
    int dim = 0;
    std::vector<ZMat> x, y; // per node: e_{delta_i}, e_{-delta_i}
    std::vector<Weight> weights;
};

// processes positive roots by height; the extraspecial first component is
// always a simple root, so [M_xi, M_eta]/N extends the generator matrices to
// the whole basis over Z
std::vector<ZMat> extend_action(const LieAlgebra& g, const ModelGens& gens) {
    const RootSystem& rs = g.roots();
    int N = g.num_pos(), n = rs.rank();
    std::vector<ZMat> pos(static_cast<std::size_t>(N));
    std::vector<ZMat> neg(static_cast<std::size_t>(N));
    for (int t = 0; t < n; ++t) {
        int idx = g.pos_index_for_node(t);
        pos[std::size_t(idx)] = gens.x[std::size_t(t)];
        neg[std::size_t(idx)] = gens.y[std::size_t(t)];
    }
    for (int i = 0; i < N; ++i) {
        if (g.pos_is_simple(i)) continue;
        auto ex = g.extraspecial(i);
        pos[std::size_t(i)] =
            pos[std::size_t(ex.xi)].bracket(pos[std::size_t(ex.eta)]).divided(ex.n_value);
        neg[std::size_t(i)] =
            neg[std::size_t(ex.xi)].bracket(neg[std::size_t(ex.eta)]).divided(-ex.n_value);
    }
    std::vector<ZMat> all(std::size_t(g.dim()));
    for (int i = 0; i < N; ++i) {
        all[std::size_t(g.e_index(i))] = pos[std::size_t(i)];
        all[std::size_t(g.e_index(neg_ref(i)))] = neg[std::size_t(i)];
    }
    for (int t = 0; t < n; ++t) {
        ZMat h = gens.x[std::size_t(t)].bracket(gens.y[std::size_t(t)]);
        // integral sanity: h must be diagonal and match the declared weights
        for (int r = 0; r < gens.dim; ++r)
            for (int c = 0; c < gens.dim; ++c) {
                long long expect =
                    (r == c) ? gens.weights[std::size_t(r)].coords[std::size_t(t)] : 0;
                if (h.at(r, c) != expect)
                    throw invariant_error("model: Cartan matrix disagrees with weights over Z");
            }
        all[std::size_t(g.h_index(t))] = h;
    }
    return all;
}

GModule module_from_model(const LieAlgebra& g, const ModelGens& gens, const std::string& name) {
    GModule m;
    m.g = &g;
    m.dim = gens.dim;
    m.provenance = name;
    m.weights = gens.weights;
    const Field& f = g.base_field();
    std::vector<ZMat> all = extend_action(g, gens);
    m.action.reserve(all.size());
    for (const auto& z : all) m.action.push_back(z.mod_p(f));
    verify_gmodule(m);
    return m;
}

// fermionic operators on the 2^n subset basis (bit a-1 set <=> a in S)
ZMat creation(int n, int i) {
    ZMat m(1 << n, 1 << n);
    for (int s = 0; s < (1 << n); ++s) {
        if (s & (1 << (i - 1))) continue;
        int below = s & ((1 << (i - 1)) - 1);
        int sign = (__builtin_popcount(unsigned(below)) & 1) ? -1 : 1;
        m.at(s | (1 << (i - 1)), s) = sign;
    }
    return m;
}

ZMat annihilation(int n, int i) {
    ZMat m(1 << n, 1 << n);
    for (int s = 0; s < (1 << n); ++s) {
        if (!(s & (1 << (i - 1)))) continue;
        int t = s & ~(1 << (i - 1));
        int below = t & ((1 << (i - 1)) - 1);
        int sign = (__builtin_popcount(unsigned(below)) & 1) ? -1 : 1;
        m.at(t, s) = sign;
    }
    return m;
}

} // namespace

GModule natural_weyl_module(const LieAlgebra& g) {
    if (g.roots().family() != Family::B) throw unsupported_error("Weyl natural module: type B only");
    int n = g.roots().rank();
    ModelGens gens;
    gens.dim = 2 * n + 1;
    gens.weights.resize(std::size_t(gens.dim), g.roots().zero_weight());
    auto vp = [&](int a) { return a - 1; };     // v_a, weight e_a
    auto vm = [&](int a) { return n + a - 1; }; // v_{-a}
    int v0 = 2 * n;
    for (int a = 1; a <= n; ++a) {
        Weight w = g.roots().zero_weight();
        w.coords[0] = (a == n) ? 2 : 0;
        for (int i = 2; i <= n; ++i)
            w.coords[std::size_t(i - 1)] = (a == n + 1 - i ? 1 : 0) - (a == n + 2 - i ? 1 : 0);
        gens.weights[std::size_t(vp(a))] = w;
        gens.weights[std::size_t(vm(a))] = weight_neg(w);
    }
    { // node 1: alpha = e_n
        ZMat X(gens.dim, gens.dim), Y(gens.dim, gens.dim);
        X.at(vp(n), v0) = 2;
        X.at(v0, vm(n)) = -1;
        Y.at(v0, vp(n)) = 1;
        Y.at(vm(n), v0) = -2;
        gens.x.push_back(X);
        gens.y.push_back(Y);
    }
    for (int i = 2; i <= n; ++i) { // alpha = e_a - e_b
        int a = n + 1 - i, b = n + 2 - i;
        ZMat X(gens.dim, gens.dim), Y(gens.dim, gens.dim);
        X.at(vp(a), vp(b)) = 1;
        X.at(vm(b), vm(a)) = -1;
        Y.at(vp(b), vp(a)) = 1;
        Y.at(vm(a), vm(b)) = -1;
        gens.x.push_back(X);
        gens.y.push_back(Y);
    }
    return module_from_model(g, gens, "weyl_natural(B" + std::to_string(n) + ")");
}

GModule spin_module(const LieAlgebra& g) {
    if (g.roots().family() != Family::B) throw unsupported_error("spin module: type B only");
    int n = g.roots().rank();
    if (n > 12) throw unsupported_error("spin module: rank capped at 12");
    ModelGens gens;
    gens.dim = 1 << n;
    gens.weights.resize(std::size_t(gens.dim), g.roots().zero_weight());
    for (int s = 0; s < gens.dim; ++s) {
        Weight w = g.roots().zero_weight();
        w.coords[0] = (s & (1 << (n - 1))) ? 1 : -1;
        for (int i = 2; i <= n; ++i) {
            int a = n + 1 - i, b = n + 2 - i;
            int sa = (s & (1 << (a - 1))) ? 1 : 0, sb = (s & (1 << (b - 1))) ? 1 : 0;
            w.coords[std::size_t(i - 1)] = sa - sb;
        }
        gens.weights[std::size_t(s)] = w;
    }
    gens.x.push_back(creation(n, n));
    gens.y.push_back(annihilation(n, n));
    for (int i = 2; i <= n; ++i) {
        int a = n + 1 - i, b = n + 2 - i;
        gens.x.push_back(creation(n, a) * annihilation(n, b));
        gens.y.push_back(creation(n, b) * annihilation(n, a));
    }
    GModule m = module_from_model(g, gens, "spin(B" + std::to_string(n) + ")");
    m.highest_weight = g.roots().fundamental_weight(0);
    m.hw_index = gens.dim - 1; // the full subset
    m.hw_vector = unit_vec(g.base_field(), m.dim, m.hw_index);
    return m;
}

GModule adjoint_module(const LieAlgebra& g) {
    GModule m;
    m.g = &g;
    m.dim = g.dim();
    m.provenance = "adjoint(" + family_name(g.roots().family()) + std::to_string(g.roots().rank()) + ")";
    const Field& f = g.base_field();
    for (int b = 0; b < g.dim(); ++b) m.action.push_back(g.ad_basis(b, f));
    for (int b = 0; b < g.dim(); ++b) {
        if (g.basis_is_cartan(b))
            m.weights.push_back(zero_weight_of(g));
        else
            m.weights.push_back(g.roots().root_as_weight(g.basis_root_ref(b)));
    }
    int hr = g.roots().highest_root();
    m.highest_weight = g.roots().root_as_weight(hr);
    m.hw_index = g.e_index(hr);
    m.hw_vector = unit_vec(f, m.dim, m.hw_index);
    verify_gmodule(m);
    return m;
}

GModule trivial_module(const LieAlgebra& g) {
    GModule m;
    m.g = &g;
    m.dim = 1;
    m.provenance = "trivial";
    m.action.assign(std::size_t(g.dim()), Mat(g.base_field(), 1, 1));
    m.weights = {zero_weight_of(g)};
    m.highest_weight = zero_weight_of(g);
    m.hw_index = 0;
    m.hw_vector = unit_vec(g.base_field(), 1, 0);
    return m;
}

GModule defining_module(const LieAlgebra& g) {
    const RootSystem& rs = g.roots();
    switch (rs.family()) {
        case Family::C: {
            int n = rs.rank();
            ModelGens gens;
            gens.dim = 2 * n;
            gens.weights.resize(std::size_t(gens.dim), rs.zero_weight());
            auto up = [&](int a) { return a - 1; };
            auto wp = [&](int a) { return n + a - 1; };
            for (int a = 1; a <= n; ++a) {
                Weight w = rs.zero_weight();
                w.coords[0] = (a == n) ? 1 : 0;
                for (int i = 2; i <= n; ++i)
                    w.coords[std::size_t(i - 1)] = (a == n + 1 - i ? 1 : 0) - (a == n + 2 - i ? 1 : 0);
                gens.weights[std::size_t(up(a))] = w;
                gens.weights[std::size_t(wp(a))] = weight_neg(w);
            }
            { // node 1: alpha = 2 e_n
                ZMat X(gens.dim, gens.dim), Y(gens.dim, gens.dim);
                X.at(up(n), wp(n)) = 1;
                Y.at(wp(n), up(n)) = 1;
                gens.x.push_back(X);
                gens.y.push_back(Y);
            }
            for (int i = 2; i <= n; ++i) { // alpha = e_a - e_b
                int a = n + 1 - i, b = n + 2 - i;
                ZMat X(gens.dim, gens.dim), Y(gens.dim, gens.dim);
                X.at(up(a), up(b)) = 1;
                X.at(wp(b), wp(a)) = -1;
                Y.at(up(b), up(a)) = 1;
                Y.at(wp(a), wp(b)) = -1;
                gens.x.push_back(X);
                gens.y.push_back(Y);
            }
            GModule m = module_from_model(g, gens, "natural(C" + std::to_string(n) + ")");
            m.highest_weight = rs.fundamental_weight(n - 1);
            m.hw_index = 0; // u_1 carries the highest weight e_1
            m.hw_vector = unit_vec(g.base_field(), m.dim, 0);
            return m;
        }
        case Family::B:
            return natural_weyl_module(g);
        case Family::F4:
        case Family::G2: {
            // the natural module is n with the adjoint action
            GModule ad = adjoint_module(g);
            const Distinguished& d = g.distinguished();
            return sub_module(ad, d.n.space, "natural(" + family_name(rs.family()) + ")");
        }
    }
    throw error("defining_module: unreachable");
}

// ---------------------------------------------------------------------------
// functorial constructions

GModule tensor(const GModule& a, const GModule& b) {
    if (a.g != b.g) throw error("tensor: algebra mismatch");
    const LieAlgebra& g = *a.g;
    const Field& f = g.base_field();
    GModule m;
    m.g = &g;
    m.dim = a.dim * b.dim;
    m.provenance = "(" + a.provenance + ")(x)(" + b.provenance + ")";
    m.action.reserve(std::size_t(g.dim()));
    for (int t = 0; t < g.dim(); ++t) {
        Mat M(f, m.dim, m.dim);
        const Mat& A = a.action[std::size_t(t)];
        const Mat& B = b.action[std::size_t(t)];
        for (int i = 0; i < a.dim; ++i)
            for (int i2 = 0; i2 < a.dim; ++i2) {
                FieldElement v = A.get(i2, i);
                if (!v.lo && !v.hi) continue;
                for (int j = 0; j < b.dim; ++j) M.set(i2 * b.dim + j, i * b.dim + j, v);
            }
        for (int j = 0; j < b.dim; ++j)
            for (int j2 = 0; j2 < b.dim; ++j2) {
                FieldElement v = B.get(j2, j);
                if (!v.lo && !v.hi) continue;
                for (int i = 0; i < a.dim; ++i) {
                    int r = i * b.dim + j2, c = i * b.dim + j;
                    M.set(r, c, f.add(M.get(r, c), v));
                }
            }
        m.action.push_back(std::move(M));
    }
    if (a.has_weights() && b.has_weights())
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < b.dim; ++j)
                m.weights.push_back(weight_add(a.weights[std::size_t(i)], b.weights[std::size_t(j)]));
    if (a.has_hw() && b.has_hw() && a.highest_weight && b.highest_weight) {
        m.hw_vector.assign(std::size_t(m.dim), FieldElement{});
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < b.dim; ++j)
                m.hw_vector[std::size_t(i * b.dim + j)] =
                    f.mul(a.hw_vector[std::size_t(i)], b.hw_vector[std::size_t(j)]);
        if (a.hw_index >= 0 && b.hw_index >= 0) m.hw_index = a.hw_index * b.dim + b.hw_index;
        m.highest_weight = weight_add(*a.highest_weight, *b.highest_weight);
    }
    verify_gmodule(m);
    return m;
}

GModule exterior_power(const GModule& mod, int k) {
    const LieAlgebra& g = *mod.g;
    const Field& f = g.base_field();
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (int(cur.size()) == k) {
            subsets.push_back(cur);
            return;
        }
        for (int i = start; i < mod.dim; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < int(subsets.size()); ++i) index[subsets[std::size_t(i)]] = i;

    GModule m;
    m.g = &g;
    m.dim = int(subsets.size());
    m.provenance = "wedge^" + std::to_string(k) + "(" + mod.provenance + ")";
    m.action.reserve(std::size_t(g.dim()));
    for (int t = 0; t < g.dim(); ++t) {
        Mat M(f, m.dim, m.dim);
        const Mat& A = mod.action[std::size_t(t)];
        for (int si = 0; si < m.dim; ++si) {
            const auto& s = subsets[std::size_t(si)];
            for (int slot = 0; slot < k; ++slot)
                for (int tgt = 0; tgt < mod.dim; ++tgt) {
                    FieldElement v = A.get(tgt, s[std::size_t(slot)]);
                    if (!v.lo && !v.hi) continue;
                    std::vector<int> ns = s;
                    ns[std::size_t(slot)] = tgt;
                    bool dup = false;
                    int sign = 1;
                    for (int pass = 0; pass + 1 < k && !dup; ++pass)
                        for (int q = 0; q + 1 < k; ++q) {
                            if (ns[std::size_t(q)] == ns[std::size_t(q + 1)]) {
                                dup = true;
                                break;
                            }
                            if (ns[std::size_t(q)] > ns[std::size_t(q + 1)]) {
                                std::swap(ns[std::size_t(q)], ns[std::size_t(q + 1)]);
                                sign = -sign;
                            }
                        }
                    if (dup) continue;
                    int r = index.at(ns);
                    FieldElement add = (sign > 0) ? v : f.neg(v);
                    M.set(r, si, f.add(M.get(r, si), add));
                }
        }
        m.action.push_back(std::move(M));
    }
    if (mod.has_weights())
        for (const auto& s : subsets) {
            Weight w = zero_weight_of(g);
            for (int i : s) w = weight_add(w, mod.weights[std::size_t(i)]);
            m.weights.push_back(w);
        }
    verify_gmodule(m);
    return m;
}

GModule sym_square(const GModule& mod) {
    const LieAlgebra& g = *mod.g;
    const Field& f = g.base_field();
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < mod.dim; ++i)
        for (int j = i; j < mod.dim; ++j) pairs.emplace_back(i, j);
    auto index = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        return i * mod.dim - i * (i - 1) / 2 + (j - i);
    };
    GModule m;
    m.g = &g;
    m.dim = int(pairs.size());
    m.provenance = "sym^2(" + mod.provenance + ")";
    for (int t = 0; t < g.dim(); ++t) {
        Mat M(f, m.dim, m.dim);
        const Mat& A = mod.action[std::size_t(t)];
        for (int pi = 0; pi < m.dim; ++pi) {
            auto [i, j] = pairs[std::size_t(pi)];
            for (int tgt = 0; tgt < mod.dim; ++tgt) {
                FieldElement v = A.get(tgt, i);
                if (v.lo || v.hi) {
                    int r = index(tgt, j);
                    M.set(r, pi, f.add(M.get(r, pi), v));
                }
                FieldElement w = A.get(tgt, j);
                if (w.lo || w.hi) {
                    int r = index(i, tgt);
                    M.set(r, pi, f.add(M.get(r, pi), w));
                }
            }
        }
        m.action.push_back(std::move(M));
    }
    if (mod.has_weights())
        for (auto [i, j] : pairs)
            m.weights.push_back(weight_add(mod.weights[std::size_t(i)], mod.weights[std::size_t(j)]));
    verify_gmodule(m);
    return m;
}

GModule direct_sum(const GModule& a, const GModule& b) {
    if (a.g != b.g) throw error("direct_sum: algebra mismatch");
    const LieAlgebra& g = *a.g;
    const Field& f = g.base_field();
    GModule m;
    m.g = &g;
    m.dim = a.dim + b.dim;
    m.provenance = "(" + a.provenance + ")(+)(" + b.provenance + ")";
    for (int t = 0; t < g.dim(); ++t) {
        Mat M(f, m.dim, m.dim);
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j) M.set(i, j, a.action[std::size_t(t)].get(i, j));
        for (int i = 0; i < b.dim; ++i)
            for (int j = 0; j < b.dim; ++j)
                M.set(a.dim + i, a.dim + j, b.action[std::size_t(t)].get(i, j));
        m.action.push_back(std::move(M));
    }
    if (a.has_weights() && b.has_weights()) {
        m.weights = a.weights;
        m.weights.insert(m.weights.end(), b.weights.begin(), b.weights.end());
    }
    return m;
}

GModule direct_sum_copies(const GModule& mod, int copies) {
    if (copies < 1) throw error("direct_sum_copies: need at least one copy");
    GModule m = mod;
    for (int i = 1; i < copies; ++i) m = direct_sum(m, mod);
    m.provenance = std::to_string(copies) + "x(" + mod.provenance + ")";
    return m;
}

GModule dual_module(const GModule& mod) {
    const LieAlgebra& g = *mod.g;
    GModule m;
    m.g = &g;
    m.dim = mod.dim;
    m.provenance = "dual(" + mod.provenance + ")";
    for (int t = 0; t < g.dim(); ++t)
        m.action.push_back(mod.action[std::size_t(t)].transpose().scaled(g.base_field().from_int(-1)));
    if (mod.has_weights())
        for (const auto& w : mod.weights) m.weights.push_back(weight_neg(w));
    verify_gmodule(m);
    return m;
}

namespace {

// weight of an RREF row when its support is weight-homogeneous
std::optional<Weight> row_weight(const GModule& mod, const Vec& row) {
    std::optional<Weight> w;
    for (int j = 0; j < mod.dim; ++j) {
        if (!row[std::size_t(j)].lo && !row[std::size_t(j)].hi) continue;
        const Weight& wj = mod.weights[std::size_t(j)];
        if (!w)
            w = wj;
        else if (!(*w == wj))
            return std::nullopt;
    }
    return w;
}

} // namespace

GModule sub_module(const GModule& mod, const Subspace& s, const std::string& name) {
    const LieAlgebra& g = *mod.g;
    const Field& f = g.base_field();
    if (s.ambient_dim() != mod.dim) throw error("sub_module: ambient mismatch");
    std::vector<int> pivots;
    s.basis().rref(&pivots);
    GModule m;
    m.g = &g;
    m.dim = s.dim();
    m.provenance = name;
    for (int t = 0; t < g.dim(); ++t) {
        Mat M(f, m.dim, m.dim);
        for (int j = 0; j < m.dim; ++j) {
            Vec w = mod.action[std::size_t(t)].apply(s.basis_vector(j));
            if (!s.contains_vector(w)) throw error("sub_module: subspace is not invariant");
            for (int i = 0; i < m.dim; ++i) M.set(i, j, w[std::size_t(pivots[std::size_t(i)])]);
        }
        m.action.push_back(std::move(M));
    }
    if (mod.has_weights()) {
        bool ok = true;
        std::vector<Weight> ws;
        for (int i = 0; i < m.dim && ok; ++i) {
            auto w = row_weight(mod, s.basis_vector(i));
            if (!w)
                ok = false;
            else
                ws.push_back(*w);
        }
        if (ok) m.weights = std::move(ws);
    }
    verify_gmodule(m);
    return m;
}

GModule quotient_module(const GModule& mod, const Subspace& s, const std::string& name) {
    const LieAlgebra& g = *mod.g;
    const Field& f = g.base_field();
    if (s.ambient_dim() != mod.dim) throw error("quotient_module: ambient mismatch");
    for (int j = 0; j < s.dim(); ++j)
        for (int t = 0; t < g.dim(); ++t) {
            Vec w = mod.action[std::size_t(t)].apply(s.basis_vector(j));
            if (!s.contains_vector(w)) throw error("quotient_module: subspace is not invariant");
        }
    Mat q = s.quotient_map();
    std::vector<int> pivots;
    s.basis().rref(&pivots);
    std::vector<bool> is_piv(std::size_t(mod.dim), false);
    for (int c : pivots) is_piv[std::size_t(c)] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < mod.dim; ++c)
        if (!is_piv[std::size_t(c)]) free_cols.push_back(c);

    GModule m;
    m.g = &g;
    m.dim = mod.dim - s.dim();
    m.provenance = name;
    for (int t = 0; t < g.dim(); ++t) {
        // Q * A * section, the section placing coordinates on the free columns
        Mat AR(f, mod.dim, m.dim);
        for (int j = 0; j < m.dim; ++j)
            for (int r = 0; r < mod.dim; ++r)
                AR.set(r, j, mod.action[std::size_t(t)].get(r, free_cols[std::size_t(j)]));
        m.action.push_back(q * AR);
    }
    if (mod.has_weights()) {
        bool graded = true;
        for (int i = 0; i < s.dim() && graded; ++i)
            if (!row_weight(mod, s.basis_vector(i))) graded = false;
        if (graded)
            for (int c : free_cols) m.weights.push_back(mod.weights[std::size_t(c)]);
    }
    verify_gmodule(m);
    return m;
}

GModule pullback(const VerySpecialMap& dpi, const GModule& target_module) {
    if (target_module.g != dpi.target) throw error("pullback: module is not over the target algebra");
    const LieAlgebra& g = *dpi.source;
    const Field& f = g.base_field();
    GModule m;
    m.g = &g;
    m.dim = target_module.dim;
    m.provenance = "pullback(" + target_module.provenance + ")";
    for (int i = 0; i < g.dim(); ++i) {
        Mat M(f, m.dim, m.dim);
        for (int j = 0; j < dpi.target->dim(); ++j) {
            FieldElement c = dpi.matrix.get(j, i);
            if (!c.lo && !c.hi) continue;
            M = M + target_module.action[std::size_t(j)].scaled(c);
        }
        m.action.push_back(std::move(M));
    }
    if (target_module.has_weights()) {
        int n = g.roots().rank();
        for (const auto& w : target_module.weights) {
            Weight pw = zero_weight_of(g);
            for (int i = 0; i < n; ++i) {
                int img = dpi.cartan_image[std::size_t(i)];
                pw.coords[std::size_t(i)] = (img >= 0) ? w.coords[std::size_t(img)] : 0;
            }
            m.weights.push_back(pw);
        }
        if (target_module.has_hw()) {
            m.hw_index = target_module.hw_index;
            m.hw_vector = target_module.hw_vector;
            int top = -1;
            for (int i = 0; i < m.dim; ++i)
                if (m.hw_vector[std::size_t(i)].lo || m.hw_vector[std::size_t(i)].hi) top = i;
            if (top >= 0) m.highest_weight = m.weights[std::size_t(top)];
        }
    }
    verify_gmodule(m);
    return m;
}

// ---------------------------------------------------------------------------
// highest-weight machinery

namespace {

// per-weight echelon that can express members of the span over a stored basis
struct TrackedSpace {
    Field f;
    int ambient;
    std::vector<Vec> reduced;
    std::vector<int> pivots;
    std::vector<Vec> expr;    // reduced[i] = sum_t expr[i][t] * basis[t]
    std::vector<int> members; // global indices of the stored basis vectors

    TrackedSpace(const Field& ff, int amb) : f(ff), ambient(amb) {}

    std::optional<Vec> coords_of(const Vec& v) const {
        Vec w = v;
        Vec c(std::size_t(members.size()), FieldElement{});
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            FieldElement t = w[std::size_t(pivots[i])];
            if (!t.lo && !t.hi) continue;
            for (int j = 0; j < ambient; ++j)
                w[std::size_t(j)] = f.sub(w[std::size_t(j)], f.mul(t, reduced[i][std::size_t(j)]));
            for (std::size_t u = 0; u < c.size(); ++u)
                c[u] = f.add(c[u], f.mul(t, expr[i][std::size_t(u)]));
        }
        for (const auto& e : w)
            if (e.lo || e.hi) return std::nullopt;
        return c;
    }

    bool add(const Vec& v, int member) {
        Vec w = v;
        Vec c(std::size_t(members.size()) + 1, FieldElement{});
        c.back() = f.one();
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            FieldElement t = w[std::size_t(pivots[i])];
            if (!t.lo && !t.hi) continue;
            for (int j = 0; j < ambient; ++j)
                w[std::size_t(j)] = f.sub(w[std::size_t(j)], f.mul(t, reduced[i][std::size_t(j)]));
            for (std::size_t u = 0; u + 1 < c.size(); ++u)
                c[u] = f.sub(c[u], f.mul(t, expr[i][std::size_t(u)]));
        }
        int pc = -1;
        for (int j = 0; j < ambient; ++j)
            if (w[std::size_t(j)].lo || w[std::size_t(j)].hi) { pc = j; break; }
        if (pc < 0) return false;
        FieldElement ip = f.inv(w[std::size_t(pc)]);
        for (int j = 0; j < ambient; ++j) w[std::size_t(j)] = f.mul(ip, w[std::size_t(j)]);
        for (auto& e : c) e = f.mul(ip, e);
        for (auto& row : expr) row.push_back(FieldElement{});
        reduced.push_back(std::move(w));
        pivots.push_back(pc);
        expr.push_back(std::move(c));
        members.push_back(member);
        return true;
    }
};

struct HwClosure {
    std::vector<Vec> vecs;
    std::vector<Weight> wts;
    std::vector<int> level;
    std::vector<int> parent;
    std::vector<int> lowering_root;
    std::map<std::vector<int>, TrackedSpace> spaces;
    std::map<std::vector<int>, int> weight_level;
};

HwClosure lowering_closure(const GModule& mod, const Vec& top, const Weight& lambda) {
    const LieAlgebra& g = *mod.g;
    const Field& f = g.base_field();
    HwClosure cl;
    cl.vecs.push_back(top);
    cl.wts.push_back(lambda);
    cl.level.push_back(0);
    cl.parent.push_back(-1);
    cl.lowering_root.push_back(-1);
    cl.spaces.emplace(lambda.coords, TrackedSpace(f, mod.dim));
    cl.spaces.at(lambda.coords).add(top, 0);
    cl.weight_level[lambda.coords] = 0;
    std::size_t head = 0;
    while (head < cl.vecs.size()) {
        std::size_t vi = head++;
        const Vec v = cl.vecs[vi];
        for (int r = 0; r < g.num_pos(); ++r) {
            Vec w = mod.action[std::size_t(g.e_index(neg_ref(r)))].apply(v);
            bool nz = false;
            for (const auto& e : w)
                if (e.lo || e.hi) { nz = true; break; }
            if (!nz) continue;
            Weight nw = cl.wts[vi];
            Weight rw = g.roots().root_as_weight(r);
            for (std::size_t t = 0; t < nw.coords.size(); ++t) nw.coords[t] -= rw.coords[t];
            auto it = cl.spaces.find(nw.coords);
            if (it == cl.spaces.end()) it = cl.spaces.emplace(nw.coords, TrackedSpace(f, mod.dim)).first;
            if (it->second.add(w, int(cl.vecs.size()))) {
                cl.vecs.push_back(w);
                cl.wts.push_back(nw);
                cl.level.push_back(cl.level[vi] + g.roots().positive(r).height);
                cl.parent.push_back(int(vi));
                cl.lowering_root.push_back(r);
                cl.weight_level[nw.coords] = cl.level.back();
            }
        }
    }
    return cl;
}

} // namespace

GModule hw_submodule(const GModule& ambient, const Weight& lambda) {
    if (!ambient.has_weights()) throw error("hw_submodule: ambient module lacks weight data");
    const LieAlgebra& g = *ambient.g;
    const Field& f = g.base_field();
    std::vector<int> idxs;
    for (int i = 0; i < ambient.dim; ++i)
        if (ambient.weights[std::size_t(i)] == lambda) idxs.push_back(i);
    if (idxs.empty()) throw unsupported_error("hw_submodule: no vector of the requested weight");
    // weight vectors killed by every raising operator (all positive roots;
    // simple ones do not suffice in characteristic p)
    Mat constraints(f, g.num_pos() * ambient.dim, int(idxs.size()));
    for (int r = 0; r < g.num_pos(); ++r) {
        const Mat& A = ambient.action[std::size_t(g.e_index(r))];
        for (std::size_t t = 0; t < idxs.size(); ++t)
            for (int out = 0; out < ambient.dim; ++out)
                constraints.set(r * ambient.dim + out, int(t), A.get(out, idxs[t]));
    }
    Subspace hw = kernel(constraints);
    if (hw.dim() == 0)
        throw unsupported_error("hw_submodule: weight space has no highest-weight vector");
    Vec top(std::size_t(ambient.dim), FieldElement{});
    Vec sol = hw.basis_vector(0);
    for (std::size_t t = 0; t < idxs.size(); ++t) top[std::size_t(idxs[t])] = sol[t];

    HwClosure cl = lowering_closure(ambient, top, lambda);
    Subspace span = Subspace::from_rows(f, ambient.dim, cl.vecs);
    GModule m = sub_module(ambient, span, "hw(" + lambda.str() + " in " + ambient.provenance + ")");
    m.highest_weight = lambda;
    // coordinates of the top vector over the RREF basis (unit pivots)
    std::vector<int> pivots;
    span.basis().rref(&pivots);
    m.hw_vector.assign(std::size_t(m.dim), FieldElement{});
    for (int i = 0; i < m.dim; ++i) m.hw_vector[std::size_t(i)] = top[std::size_t(pivots[std::size_t(i)])];
    int support = 0, where = -1;
    for (int i = 0; i < m.dim; ++i)
        if (m.hw_vector[std::size_t(i)].lo || m.hw_vector[std::size_t(i)].hi) { ++support; where = i; }
    if (support == 0) throw invariant_error("hw_submodule: lost the top vector");
    if (support == 1 && m.hw_vector[std::size_t(where)] == f.one()) m.hw_index = where;
    return m;
}

namespace {

struct GramData {
    HwClosure cl;
    std::map<std::vector<int>, Mat> gram;
};

GramData compute_gram(const GModule& mod) {
    if (!mod.has_hw() || !mod.has_weights() || !mod.highest_weight)
        throw error("contravariant form: module is not marked as highest-weight");
    const LieAlgebra& g = *mod.g;
    const Field& f = g.base_field();
    const Weight lambda = *mod.highest_weight;
    const Vec& top = mod.hw_vector;
    // the marked vector must be a genuine highest-weight vector
    for (int r = 0; r < g.num_pos(); ++r) {
        Vec w = mod.action[std::size_t(g.e_index(r))].apply(top);
        for (const auto& e : w)
            if (e.lo || e.hi)
                throw error("contravariant form: marked vector is not annihilated by raising operators");
    }
    GramData gd{lowering_closure(mod, top, lambda), {}};
    HwClosure& cl = gd.cl;
    if (int(cl.vecs.size()) != mod.dim)
        throw error("contravariant form: module is not generated by its highest-weight vector");

    std::vector<std::pair<int, std::vector<int>>> order;
    for (const auto& [wc, lv] : cl.weight_level) order.emplace_back(lv, wc);
    std::sort(order.begin(), order.end());

    for (const auto& [lv, wc] : order) {
        TrackedSpace& sp = cl.spaces.at(wc);
        int s = int(sp.members.size());
        Mat G(f, s, s);
        if (lv == 0) {
            G.set(0, 0, f.one());
        } else {
            for (int i = 0; i < s; ++i) {
                int gi = sp.members[std::size_t(i)];
                int par = cl.parent[std::size_t(gi)];
                int r = cl.lowering_root[std::size_t(gi)];
                const Weight& pw = cl.wts[std::size_t(par)];
                TrackedSpace& up = cl.spaces.at(pw.coords);
                const Mat& upG = gd.gram.at(pw.coords);
                int ppos = -1;
                for (std::size_t t = 0; t < up.members.size(); ++t)
                    if (up.members[t] == par) ppos = int(t);
                for (int j = 0; j < s; ++j) {
                    // <f_r P, B_j> = <P, e_r B_j>
                    Vec u = mod.action[std::size_t(g.e_index(r))].apply(
                        cl.vecs[std::size_t(sp.members[std::size_t(j)])]);
                    auto cu = up.coords_of(u);
                    if (!cu)
                        throw invariant_error("contravariant form: raising left the weight grading");
                    FieldElement acc{};
                    for (std::size_t t = 0; t < cu->size(); ++t)
                        acc = f.add(acc, f.mul((*cu)[t], upG.get(ppos, int(t))));
                    G.set(i, j, acc);
                }
            }
            for (int i = 0; i < s; ++i)
                for (int j = i + 1; j < s; ++j)
                    if (!(G.get(i, j) == G.get(j, i)))
                        throw invariant_error("contravariant form: asymmetric Gram block");
        }
        gd.gram[wc] = std::move(G);
    }
    return gd;
}

} // namespace

ContravariantForm contravariant_form(const GModule& mod) {
    GramData gd = compute_gram(mod);
    const Field& f = mod.g->base_field();
    Mat B(f, mod.dim, mod.dim);
    for (int i = 0; i < mod.dim; ++i) B.set_row(i, gd.cl.vecs[std::size_t(i)]);
    Mat Gcl(f, mod.dim, mod.dim);
    for (auto& [wc, sp] : gd.cl.spaces) {
        const Mat& G = gd.gram.at(wc);
        for (std::size_t i = 0; i < sp.members.size(); ++i)
            for (std::size_t j = 0; j < sp.members.size(); ++j)
                Gcl.set(sp.members[i], sp.members[j], G.get(int(i), int(j)));
    }
    // unit-vector Gram X from B^T X B = Gcl
    Mat Bt = B.transpose();
    auto solve_mat = [&](const Mat& A, const Mat& R) {
        Mat X(f, A.cols(), R.cols());
        for (int c = 0; c < R.cols(); ++c) {
            Vec rhs(std::size_t(R.rows()));
            for (int r = 0; r < R.rows(); ++r) rhs[std::size_t(r)] = R.get(r, c);
            auto x = solve(A, rhs);
            if (!x) throw invariant_error("contravariant form: basis change failed");
            for (int r = 0; r < X.rows(); ++r) X.set(r, c, (*x)[std::size_t(r)]);
        }
        return X;
    };
    Mat Y = solve_mat(Bt, Gcl);
    Mat X = solve_mat(Bt, Y.transpose());
    return ContravariantForm{X.transpose()};
}

GModule irreducible_head(const GModule& mod) {
    GramData gd = compute_gram(mod);
    const LieAlgebra& g = *mod.g;
    const Field& f = g.base_field();
    std::vector<Vec> rad_rows;
    for (auto& [wc, sp] : gd.cl.spaces) {
        const Mat& G = gd.gram.at(wc);
        Subspace kerG = kernel(G);
        for (int t = 0; t < kerG.dim(); ++t) {
            Vec coeff = kerG.basis_vector(t);
            Vec v(std::size_t(mod.dim), FieldElement{});
            for (std::size_t i = 0; i < sp.members.size(); ++i) {
                const FieldElement& c = coeff[i];
                if (!c.lo && !c.hi) continue;
                const Vec& bv = gd.cl.vecs[std::size_t(sp.members[i])];
                for (int q = 0; q < mod.dim; ++q)
                    v[std::size_t(q)] = f.add(v[std::size_t(q)], f.mul(c, bv[std::size_t(q)]));
            }
            rad_rows.push_back(std::move(v));
        }
    }
    Subspace rad = Subspace::from_rows(f, mod.dim, rad_rows);
    GModule head = (rad.dim() == 0) ? mod : quotient_module(mod, rad, "head(" + mod.provenance + ")");
    head.provenance = "head(" + mod.provenance + ")";
    head.highest_weight = mod.highest_weight;
    head.hw_index = -1;
    head.hw_vector = (rad.dim() == 0) ? mod.hw_vector : rad.quotient_map().apply(mod.hw_vector);
    int support = 0, where = -1;
    for (int i = 0; i < head.dim; ++i)
        if (head.hw_vector[std::size_t(i)].lo || head.hw_vector[std::size_t(i)].hi) { ++support; where = i; }
    if (support == 0) throw invariant_error("irreducible_head: top vector lost in quotient");
    if (support == 1 && head.hw_vector[std::size_t(where)] == f.one()) head.hw_index = where;

    // no proper nonzero submodule generated by a basis weight vector
    for (int s = 0; s < head.dim; ++s) {
        EchelonBasis eb(f, head.dim);
        std::vector<Vec> work;
        Vec unit(std::size_t(head.dim), FieldElement{});
        unit[std::size_t(s)] = f.one();
        eb.insert(unit);
        work.push_back(unit);
        while (!work.empty() && eb.dim() < head.dim) {
            Vec v = work.back();
            work.pop_back();
            for (int t = 0; t < g.dim(); ++t) {
                Vec w = head.action[std::size_t(t)].apply(v);
                if (eb.insert(w)) work.push_back(w);
                if (eb.dim() == head.dim) break;
            }
        }
        if (eb.dim() != head.dim)
            throw invariant_error("irreducible_head: quotient has a proper weight-generated submodule");
    }
    return head;
}

// ---------------------------------------------------------------------------
// fixed spaces and kernels

Subspace fixed_space(const GModule& v, const Element& x) { return kernel(v.act(x)); }

Subspace fixed_space_subalg(const GModule& v, const Subspace& h) {
    const Field& f = h.field();
    Subspace fix = Subspace::full(f, v.dim);
    for (int i = 0; i < h.dim() && fix.dim() > 0; ++i) {
        Element x{v.g, f, h.basis_vector(i)};
        fix = intersect(fix, fixed_space(v, x));
    }
    return fix;
}

Subalg kernel_of_action(const GModule& v) {
    const LieAlgebra& g = *v.g;
    const Field& f = g.base_field();
    EchelonBasis eb(f, g.dim());
    for (int r = 0; r < v.dim && eb.dim() < g.dim(); ++r)
        for (int c = 0; c < v.dim; ++c) {
            Vec row(std::size_t(g.dim()), FieldElement{});
            bool nz = false;
            for (int i = 0; i < g.dim(); ++i) {
                FieldElement e = v.action[std::size_t(i)].get(r, c);
                row[std::size_t(i)] = e;
                if (e.lo || e.hi) nz = true;
            }
            if (nz) eb.insert(row);
        }
    Mat cons(f, eb.dim(), g.dim());
    for (int i = 0; i < eb.dim(); ++i) cons.set_row(i, eb.row(i));
    Subalg k{&g, kernel(cons)};
    for (int i = 0; i < k.dim(); ++i)
        for (int b = 0; b < g.dim(); ++b) {
            Element br = g.bracket(g.basis_element(b, f), k.basis_element(i));
            if (!k.space.contains_vector(br.coords))
                throw invariant_error("kernel_of_action: kernel is not an ideal");
        }
    return k;
}

} // namespace charplie
