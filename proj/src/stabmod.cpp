#include "charplie/stabmod.hpp"

namespace charplie {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::generically_free: return "generically_free";
        case Verdict::virtually_free: return "virtually_free";
        case Verdict::neither: return "neither";
    }
    return "?";
}

namespace {

Subalg stabilizer_with(const GModule& V, const std::vector<Mat>& lifted, const Vec& v,
                       const Field& ext) {
    const LieAlgebra& g = *V.g;
    Mat M(ext, V.dim, g.dim());
    for (int i = 0; i < g.dim(); ++i) {
        Vec w = lifted[std::size_t(i)].apply(v);
        for (int r = 0; r < V.dim; ++r) M.set(r, i, w[std::size_t(r)]);
    }
    Subalg s{&g, kernel(M)};
    if (!g.subspace_bracket_closed(s.space))
        throw invariant_error("stabilizer: kernel is not bracket-closed");
    return s;
}

} // namespace

Subalg stabilizer(const GModule& V, const Vec& v, const Field& ext) {
    if (int(v.size()) != V.dim) throw error("stabilizer: vector has wrong dimension");
    std::vector<Mat> lifted;
    lifted.reserve(V.action.size());
    for (const auto& A : V.action) lifted.push_back(A.lift(ext));
    return stabilizer_with(V, lifted, v, ext);
}

Verdict verdict_of(int min_dim, int ker_dim) {
    if (min_dim < ker_dim)
        throw invariant_error("verdict: stabilizer smaller than the action kernel");
    if (min_dim == 0) return Verdict::generically_free;
    if (min_dim == ker_dim) return Verdict::virtually_free;
    return Verdict::neither;
}

StabilizerReport generic_stabilizer(const GModule& V, const SampleConfig& cfg) {
    if (cfg.trials < 1) throw error("generic_stabilizer: need at least one trial");
    const LieAlgebra& g = *V.g;
    StabilizerReport rep;
    rep.config = cfg;
    if (V.dim == 0) {
        rep.zero_module = true;
        rep.verdict = Verdict::generically_free;
        return rep;
    }
    Field ext = Field::make(g.p(), cfg.field_degree);
    std::vector<Mat> lifted;
    lifted.reserve(V.action.size());
    for (const auto& A : V.action) lifted.push_back(A.lift(ext));

    Subalg ker = kernel_of_action(V);
    rep.dim_ker = ker.dim();
    Subspace ker_ext = ker.space.lift(ext);

    Rng base(cfg.seed);
    for (int t = 0; t < cfg.trials; ++t) {
        Rng trial = base.split(std::uint64_t(t));
        Vec v(std::size_t(V.dim));
        for (auto& e : v) e = ext.sample(trial);
        Subalg s = stabilizer_with(V, lifted, v, ext);
        if (!s.space.contains(ker_ext))
            throw invariant_error("generic_stabilizer: stabilizer does not contain the kernel");
        rep.trial_dims.push_back(s.dim());
        if (rep.witness_trial < 0 || s.dim() < rep.min_dim) {
            rep.min_dim = s.dim();
            rep.witness_trial = t;
            rep.witness = std::move(s);
            rep.witness_vector = std::move(v);
        }
    }
    rep.verdict = verdict_of(rep.min_dim, rep.dim_ker);

    if (g.special()) {
        const Distinguished& d = g.distinguished();
        rep.intersections = substabilizer_profile(rep, {{"n_v", d.n.space},
                                                        {"m_v", d.m.space},
                                                        {"z_v", d.z.space},
                                                        {"glong_v", d.g_long.space},
                                                        {"gshort_v", d.g_short.space}});
    }
    return rep;
}

std::map<std::string, int> substabilizer_profile(
    const StabilizerReport& report,
    const std::vector<std::pair<std::string, Subspace>>& subalgebras) {
    std::map<std::string, int> out;
    if (report.zero_module) {
        for (const auto& [name, sub] : subalgebras) out[name] = sub.dim();
        return out;
    }
    const Field& ext = report.witness.space.field();
    for (const auto& [name, sub] : subalgebras)
        out[name] = intersect(report.witness.space, sub.lift(ext)).dim();
    return out;
}

} // namespace charplie
