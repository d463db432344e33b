#include "charplie/rootdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace charplie {

std::string family_name(Family f) {
    switch (f) {
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::F4: return "F4";
        case Family::G2: return "G2";
    }
    return "?";
}

Family family_from_name(const std::string& s) {
    if (s == "B" || s == "b") return Family::B;
    if (s == "C" || s == "c") return Family::C;
    if (s == "F4" || s == "f4" || s == "F") return Family::F4;
    if (s == "G2" || s == "g2" || s == "G") return Family::G2;
    throw unsupported_error("unknown family '" + s + "' (expected B, C, F4, G2)");
}

std::string Weight::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ',';
        os << coords[i];
    }
    return os.str();
}

int special_characteristic(Family f) { return f == Family::G2 ? 3 : 2; }

RootSystem RootSystem::build(Family family, int rank) {
    RootSystem rs;
    rs.family_ = family;
    switch (family) {
        case Family::B:
        case Family::C:
            if (rank < 2) throw unsupported_error("rank >= 2 required for types B and C");
            break;
        case Family::F4:
            if (rank != 4) throw unsupported_error("F4 has rank 4");
            break;
        case Family::G2:
            if (rank != 2) throw unsupported_error("G2 has rank 2");
            break;
    }
    rs.rank_ = rank;
    int n = rank;
    auto& C = rs.cartan_;
    C.assign(std::size_t(n), std::vector<int>(std::size_t(n), 0));
    for (int i = 0; i < n; ++i) C[std::size_t(i)][std::size_t(i)] = 2;
    auto chain = [&](int i, int j) {
        C[std::size_t(i)][std::size_t(j)] = -1;
        C[std::size_t(j)][std::size_t(i)] = -1;
    };
    switch (family) {
        case Family::B:
            // node 1 short, bond 1=2
            C[0][1] = -2;
            C[1][0] = -1;
            for (int i = 1; i + 1 < n; ++i) chain(i, i + 1);
            rs.d_.assign(std::size_t(n), 2);
            rs.d_[0] = 1;
            rs.d_long_ = 2;
            break;
        case Family::C:
            // node 1 long, bond 1=2
            C[0][1] = -1;
            C[1][0] = -2;
            for (int i = 1; i + 1 < n; ++i) chain(i, i + 1);
            rs.d_.assign(std::size_t(n), 1);
            rs.d_[0] = 2;
            rs.d_long_ = 2;
            break;
        case Family::F4:
            chain(0, 1);
            C[1][2] = -1;
            C[2][1] = -2;
            chain(2, 3);
            rs.d_ = {2, 2, 1, 1};
            rs.d_long_ = 2;
            break;
        case Family::G2:
            C[0][1] = -1;
            C[1][0] = -3;
            rs.d_ = {3, 1};
            rs.d_long_ = 3;
            break;
    }

    // enumerate the root set as the closure of the simple roots under the
    // simple reflections
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(std::size_t(n), 0);
        e[std::size_t(i)] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        std::vector<int> b = queue.back();
        queue.pop_back();
        for (int i = 0; i < n; ++i) {
            long long pr = 0;
            for (int j = 0; j < n; ++j) pr += (long long)C[std::size_t(i)][std::size_t(j)] * b[std::size_t(j)];
            std::vector<int> r = b;
            r[std::size_t(i)] -= int(pr);
            if (seen.insert(r).second) queue.push_back(r);
        }
    }

    for (const auto& v : seen) {
        int h = std::accumulate(v.begin(), v.end(), 0);
        if (h <= 0) continue;
        Root r;
        r.coeffs = v;
        r.height = h;
        // squared length via the symmetrized form (delta_i,delta_j) = d_i C_ij
        long long norm2 = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                norm2 += (long long)rs.d_[std::size_t(i)] * C[std::size_t(i)][std::size_t(j)] *
                         v[std::size_t(i)] * v[std::size_t(j)];
        if (norm2 != 2 && norm2 != 2 * rs.d_long_)
            throw invariant_error("root enumeration produced a vector of unexpected length");
        r.is_long = (norm2 == 2 * rs.d_long_);
        rs.positive_.push_back(std::move(r));
    }
    std::sort(rs.positive_.begin(), rs.positive_.end(), [](const Root& a, const Root& b) {
        if (a.height != b.height) return a.height < b.height;
        return a.coeffs < b.coeffs;
    });

    int expected = (family == Family::F4) ? 24 : (family == Family::G2) ? 6 : n * n;
    if (int(rs.positive_.size()) != expected)
        throw invariant_error("unexpected number of positive roots");
    return rs;
}

std::vector<int> RootSystem::root_coeffs(int ref) const {
    std::vector<int> c = positive_[std::size_t(pos_index(ref))].coeffs;
    if (!is_positive_ref(ref))
        for (auto& x : c) x = -x;
    return c;
}

int RootSystem::find_positive(const std::vector<int>& coeffs) const {
    for (int i = 0; i < num_positive(); ++i)
        if (positive_[std::size_t(i)].coeffs == coeffs) return i;
    return -1;
}

int RootSystem::find_root(const std::vector<int>& coeffs) const {
    int i = find_positive(coeffs);
    if (i >= 0) return i;
    std::vector<int> m = coeffs;
    for (auto& x : m) x = -x;
    i = find_positive(m);
    if (i >= 0) return neg_ref(i);
    throw error("find_root: not a root");
}

std::vector<int> RootSystem::coroot_coeffs(int ref) const {
    std::vector<int> m = root_coeffs(ref);
    int da = half_norm(ref);
    for (int i = 0; i < rank_; ++i) {
        long long t = (long long)m[std::size_t(i)] * d_[std::size_t(i)];
        if (t % da) throw invariant_error("coroot coefficients not integral");
        m[std::size_t(i)] = int(t / da);
    }
    return m;
}

long long RootSystem::pairing(const Weight& lambda, int ref) const {
    if (int(lambda.coords.size()) != rank_) throw error("pairing: weight has wrong rank");
    std::vector<int> cv = coroot_coeffs(ref);
    long long s = 0;
    for (int i = 0; i < rank_; ++i) s += (long long)cv[std::size_t(i)] * lambda.coords[std::size_t(i)];
    return s;
}

Weight RootSystem::root_as_weight(int ref) const {
    std::vector<int> m = root_coeffs(ref);
    Weight w;
    w.coords.assign(std::size_t(rank_), 0);
    for (int i = 0; i < rank_; ++i) {
        long long s = 0;
        for (int j = 0; j < rank_; ++j)
            s += (long long)cartan_[std::size_t(i)][std::size_t(j)] * m[std::size_t(j)];
        w.coords[std::size_t(i)] = int(s);
    }
    return w;
}

int RootSystem::highest_root() const {
    int best = 0;
    for (int i = 1; i < num_positive(); ++i)
        if (positive_[std::size_t(i)].height > positive_[std::size_t(best)].height) best = i;
    return best;
}

bool RootSystem::in_root_lattice(const Weight& lambda) const {
    // fundamental coordinates of sum x_j delta_j are C x; solve C x = lambda
    // exactly and test integrality
    int n = rank_;
    std::vector<std::vector<long long>> num(std::size_t(n), std::vector<long long>(std::size_t(n) + 1, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) num[std::size_t(i)][std::size_t(j)] = cartan_[std::size_t(i)][std::size_t(j)];
        num[std::size_t(i)][std::size_t(n)] = lambda.coords[std::size_t(i)];
    }
    // fraction-free Gaussian elimination (Bareiss-like, denominators tracked)
    long long den = 1;
    for (int c = 0; c < n; ++c) {
        int sel = -1;
        for (int r = c; r < n; ++r)
            if (num[std::size_t(r)][std::size_t(c)] != 0) { sel = r; break; }
        if (sel < 0) throw invariant_error("Cartan matrix singular");
        std::swap(num[std::size_t(sel)], num[std::size_t(c)]);
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            long long f = num[std::size_t(r)][std::size_t(c)];
            if (!f) continue;
            long long piv = num[std::size_t(c)][std::size_t(c)];
            for (int j = 0; j <= n; ++j)
                num[std::size_t(r)][std::size_t(j)] =
                    num[std::size_t(r)][std::size_t(j)] * piv - f * num[std::size_t(c)][std::size_t(j)];
        }
        (void)den;
    }
    for (int i = 0; i < n; ++i) {
        long long piv = num[std::size_t(i)][std::size_t(i)];
        long long rhs = num[std::size_t(i)][std::size_t(n)];
        if (piv == 0) throw invariant_error("Cartan matrix singular");
        if (rhs % piv) return false;
    }
    return true;
}

Weight RootSystem::fundamental_weight(int node) const {
    Weight w;
    w.coords.assign(std::size_t(rank_), 0);
    w.coords[std::size_t(node)] = 1;
    return w;
}

Weight RootSystem::zero_weight() const {
    Weight w;
    w.coords.assign(std::size_t(rank_), 0);
    return w;
}

bool is_dominant(const Weight& lambda) {
    for (int c : lambda.coords)
        if (c < 0) return false;
    return true;
}

bool is_restricted(const Weight& lambda, int p) {
    for (int c : lambda.coords)
        if (c < 0 || c >= p) return false;
    return true;
}

WeightSplit split_weight(const RootSystem& rs, const Weight& lambda) {
    if (int(lambda.coords.size()) != rs.rank()) throw error("split_weight: wrong rank");
    if (!is_dominant(lambda)) throw error("split_weight: weight not dominant");
    WeightSplit s;
    s.short_part = rs.zero_weight();
    s.long_part = rs.zero_weight();
    for (int i = 0; i < rs.rank(); ++i) {
        if (rs.node_is_short(i))
            s.short_part.coords[std::size_t(i)] = lambda.coords[std::size_t(i)];
        else
            s.long_part.coords[std::size_t(i)] = lambda.coords[std::size_t(i)];
    }
    return s;
}

RestrictedSplit restricted_split(const Weight& lambda, int p) {
    if (!is_dominant(lambda)) throw error("restricted_split: weight not dominant");
    RestrictedSplit s;
    s.r = 1;
    s.lambda0.coords.assign(lambda.coords.size(), 0);
    s.lambda1.coords.assign(lambda.coords.size(), 0);
    for (std::size_t i = 0; i < lambda.coords.size(); ++i) {
        s.lambda0.coords[i] = lambda.coords[i] % p;
        s.lambda1.coords[i] = lambda.coords[i] / p;
    }
    return s;
}

long long pairing_parity_check(const RootSystem& rs, const std::vector<int>& lambda_root_coords,
                               int short_root_ref) {
    if (rs.family() != Family::B) throw error("pairing_parity_check: type B only");
    if (rs.root_is_long(short_root_ref)) throw error("pairing_parity_check: short root required");
    if (int(lambda_root_coords.size()) != rs.rank()) throw error("pairing_parity_check: wrong rank");
    // lambda = sum lambda_j delta_j; its fundamental coordinates are C * lambda
    Weight w;
    w.coords.assign(std::size_t(rs.rank()), 0);
    for (int i = 0; i < rs.rank(); ++i) {
        long long s = 0;
        for (int j = 0; j < rs.rank(); ++j)
            s += (long long)rs.cartan()[std::size_t(i)][std::size_t(j)] * lambda_root_coords[std::size_t(j)];
        w.coords[std::size_t(i)] = int(s);
    }
    long long v = rs.pairing(w, short_root_ref);
    if (v % 2 != 0)
        throw invariant_error("pairing_parity_check: odd pairing for a root-lattice weight");
    return v;
}

} // namespace charplie
