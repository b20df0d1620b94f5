#include "spencer/grading.hpp"

namespace spencer {

const SVec& GradedAlgebra::bracket_basis(int d1, int i, int d2, int j) const {
    static const SVec empty;
    auto it = br.find({d1, d2});
    if (it == br.end()) throw MissingComponent("no bracket table for degrees " +
                                               std::to_string(d1) + "," + std::to_string(d2));
    (void)empty;
    return it->second[i][j];
}

Vec GradedAlgebra::bracket(int d1, const Vec& x, int d2, const Vec& y) const {
    const int target = dim(d1 + d2);
    Vec r(target);
    if (target == 0) return r;
    auto it = br.find({d1, d2});
    if (it == br.end()) throw MissingComponent("no bracket table for degrees " +
                                               std::to_string(d1) + "," + std::to_string(d2));
    const auto& tab = it->second;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < y.size(); ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (const auto& [k, v] : tab[i][j]) r[k] += c * v;
        }
    }
    return r;
}

void GradedAlgebra::symmetrize_tables() {
    std::vector<std::pair<int, int>> keys;
    for (const auto& [k, t] : br) keys.push_back(k);
    for (auto [d1, d2] : keys) {
        if (br.count({d2, d1})) continue;
        const auto& tab = br.at({d1, d2});
        const SuperSpace& s1 = comp.at(d1);
        const SuperSpace& s2 = comp.at(d2);
        std::vector<std::vector<SVec>> flip(s2.dim(), std::vector<SVec>(s1.dim()));
        for (int i = 0; i < s1.dim(); ++i)
            for (int j = 0; j < s2.dim(); ++j) {
                int s = -sign_pow(s1.par[i], s2.par[j]);
                SVec out;
                for (const auto& [k, v] : tab[i][j]) out.emplace_back(k, s < 0 ? -v : v);
                flip[j][i] = std::move(out);
            }
        br[{d2, d1}] = std::move(flip);
    }
}

LieSuperAlgebra GradedAlgebra::degree0() const {
    LieSuperAlgebra g;
    g.space = comp.at(0);
    const auto& tab = br.at({0, 0});
    const int n = g.space.dim();
    g.sc.assign(n, std::vector<SVec>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g.sc[i][j] = tab[i][j];
    g.cartan = cartan0;
    g.raising = raising0;
    g.weight_labels = weight_labels;
    return g;
}

bool GradedAlgebra::check_grading() const {
    for (const auto& [key, tab] : br) {
        auto [d1, d2] = key;
        const int target = d1 + d2;
        for (const auto& row : tab)
            for (const auto& sv : row) {
                if (!sv.empty() && dim(target) == 0) return false;
                for (const auto& [k, v] : sv) {
                    if (k >= dim(target) || v.is_zero()) return false;
                }
            }
    }
    // depth-1: g_{-1} abelian
    if (has_table(-1, -1)) {
        for (const auto& row : br.at({-1, -1}))
            for (const auto& sv : row)
                if (!sv.empty()) return false;
    }
    return true;
}

std::vector<Vec> GradedAlgebra::action_kernel() const {
    const int n0 = dim(0), nm = dim(-1);
    ExactMatrix sys(nm * nm, n0);
    for (int a = 0; a < n0; ++a) {
        for (int j = 0; j < nm; ++j) {
            for (const auto& [k, v] : bracket_basis(0, a, -1, j)) sys.at(k * nm + j, a) = v;
        }
    }
    return kernel_basis(sys);
}

GradedAlgebra GradedAlgebra::eval_alpha(const Rat& x) const {
    GradedAlgebra g = *this;
    for (auto& [d, sp] : g.comp)
        for (auto& w : sp.weights)
            for (auto& c : w) c = c.eval_alpha(x);
    for (auto& [k, tab] : g.br)
        for (auto& row : tab)
            for (auto& sv : row)
                for (auto& [i, c] : sv) c = c.eval_alpha(x);
    for (auto& v : g.cartan0)
        for (auto& c : v) c = c.eval_alpha(x);
    for (auto& v : g.raising0)
        for (auto& c : v) c = c.eval_alpha(x);
    return g;
}

Module module_from_grading(const GradedAlgebra& g, const LieSuperAlgebra& deg0) {
    Module m;
    m.alg = &deg0;
    m.space = g.comp.at(-1);
    const int nv = m.space.dim();
    const auto& tab = g.br.at({0, -1});
    for (int a = 0; a < deg0.dim(); ++a) {
        ExactMatrix act(nv, nv);
        for (int j = 0; j < nv; ++j)
            for (const auto& [k, v] : tab[a][j]) act.at(k, j) = v;
        m.act.push_back(std::move(act));
    }
    return m;
}

GradedAlgebra grade_by_element(const LieSuperAlgebra& g, const Vec& h) {
    const int n = g.dim();
    std::vector<long> degree(n);
    int max_deg = 0;
    for (int i = 0; i < n; ++i) {
        Vec ei(n);
        ei[i] = Scalar(1);
        Vec b = g.bracket(h, ei);
        Scalar lam = b[i];
        b[i] = Scalar(0);
        if (!vec_is_zero(b))
            throw NotDiagonalizable("ad(h) is not diagonal on basis element " + g.space.labels[i]);
        if (!lam.is_rational() || denominator(lam.rat()) != 1)
            throw NotDiagonalizable("non-integer eigenvalue on " + g.space.labels[i]);
        long d = static_cast<long>(numerator(lam.rat()));
        if (d < -1) throw DepthExceeded("eigenvalue " + std::to_string(d) + " below -1");
        degree[i] = d;
        max_deg = std::max(max_deg, static_cast<int>(d));
    }
    GradedAlgebra out;
    out.cutoff = max_deg;
    out.stabilized = true;
    std::map<int, std::vector<int>> members;  // degree -> parent indices
    std::vector<std::pair<int, int>> where(n);
    for (int i = 0; i < n; ++i) members[static_cast<int>(degree[i])].push_back(i);
    for (auto& [d, idx] : members) {
        SuperSpace sp;
        for (size_t t = 0; t < idx.size(); ++t) {
            int i = idx[t];
            Weight w = g.space.weights.empty() ? Weight{} : g.space.weights[i];
            sp.push(g.space.labels[i], g.space.par[i], std::move(w));
            where[i] = {d, static_cast<int>(t)};
        }
        out.comp[d] = std::move(sp);
    }
    for (const auto& [d1, idx1] : members) {
        for (const auto& [d2, idx2] : members) {
            std::vector<std::vector<SVec>> tab(idx1.size(), std::vector<SVec>(idx2.size()));
            for (size_t a = 0; a < idx1.size(); ++a)
                for (size_t b = 0; b < idx2.size(); ++b) {
                    SVec out_sv;
                    for (const auto& [k, v] : g.sc[idx1[a]][idx2[b]]) {
                        auto [dk, lk] = where[k];
                        if (dk != d1 + d2)
                            throw NotDiagonalizable("bracket violates grading");
                        out_sv.emplace_back(lk, v);
                    }
                    tab[a][b] = std::move(out_sv);
                }
            out.br[{d1, d2}] = std::move(tab);
        }
    }
    // inherited degree-0 Borel data
    auto restrict0 = [&](const Vec& v, Vec& out_v) {
        out_v.assign(out.dim(0), Scalar(0));
        for (int i = 0; i < n; ++i) {
            if (v[i].is_zero()) continue;
            auto [d, l] = where[i];
            if (d != 0) return false;
            out_v[l] = v[i];
        }
        return true;
    };
    for (const Vec& c : g.cartan) {
        Vec v;
        if (restrict0(c, v)) out.cartan0.push_back(std::move(v));
    }
    for (const Vec& r : g.raising) {
        Vec v;
        if (restrict0(r, v)) out.raising0.push_back(std::move(v));
    }
    out.weight_labels = g.weight_labels;
    return out;
}

}  // namespace spencer
