#include "spencer/spencer.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spencer {

SDim CochainSpace::sdim() const {
    SDim d;
    for (Par p : par) (is_odd(p) ? d.odd : d.even)++;
    return d;
}

SpencerComplex::SpencerComplex(const GradedAlgebra& g) : g_(&g) {
    dual_minus1_ = dual(g.comp.at(-1));
    weighted_ = !g.comp.at(-1).weights.empty();
}

int SpencerComplex::coef_dim(int k, int s) const {
    const int d = k - s;
    if (d < -1) return 0;
    if (d > g_->cutoff) {
        if (g_->stabilized) return 0;
        throw MissingComponent("component g_" + std::to_string(d) +
                               " beyond the materialized cutoff");
    }
    return g_->dim(d);
}

CochainSpace SpencerComplex::cochains(int k, int s) const {
    CochainSpace c;
    c.k = k;
    c.s = s;
    const int d = k - s;
    const int nc = coef_dim(k, s);
    if (nc == 0) return c;
    const SuperSpace& coef = g_->comp.at(d);
    for (const MIdx& J : ext_basis(dual_minus1_, s)) {
        Par pj = midx_parity(dual_minus1_, J);
        Weight wj = midx_weight(dual_minus1_, J);
        for (int a = 0; a < nc; ++a) {
            c.basis.push_back(CochainRef{a, J});
            c.par.push_back(coef.par[a] + pj);
            if (weighted_) {
                Weight w = coef.weights[a];
                for (size_t t = 0; t < w.size(); ++t) w[t] += wj[t];
                c.weight.push_back(std::move(w));
            } else {
                c.weight.push_back({});
            }
        }
    }
    return c;
}

namespace {

std::map<MIdx, int> midx_index(const SuperSpace& v, int s) {
    std::map<MIdx, int> m;
    int i = 0;
    for (const MIdx& J : ext_basis(v, s)) m[J] = i++;
    return m;
}

}  // namespace

ExactMatrix SpencerComplex::differential(int k, int s) const {
    CochainSpace src = cochains(k, s);
    CochainSpace dst = cochains(k, s + 1);
    ExactMatrix m(static_cast<int>(dst.basis.size()), static_cast<int>(src.basis.size()));
    if (src.basis.empty() || dst.basis.empty()) return m;
    const int d = k - s;
    const int nv = g_->dim(-1);
    const int nc_dst = g_->dim(d - 1);
    auto dst_index = midx_index(dual_minus1_, s + 1);
    const auto& tab = g_->br.at({d, -1});
    for (size_t col = 0; col < src.basis.size(); ++col) {
        const auto& ref = src.basis[col];
        for (int i = 0; i < nv; ++i) {
            const SVec& br = tab[ref.coef][i];
            if (br.empty()) continue;
            auto ins = wedge_insert(dual_minus1_, i, ref.J);
            if (!ins) continue;
            const int jrow = dst_index.at(ins->second);
            for (const auto& [b, v] : br) {
                int row = jrow * nc_dst + b;
                m.at(row, static_cast<int>(col)) += ins->first < 0 ? -v : v;
            }
        }
    }
    return m;
}

CohomologyReport SpencerComplex::cohomology(int k, int s) const {
    CochainSpace C = cochains(k, s);
    CohomologyReport rep;
    rep.k = k;
    rep.s = s;
    rep.cochain_sdim = C.sdim();
    const int dim = static_cast<int>(C.basis.size());
    if (dim == 0) return rep;

    ExactMatrix dout = differential(k, s);
    ExactMatrix din = differential(k, s - 1);

    // block decomposition by (weight, parity)
    std::map<std::pair<std::string, Par>, std::vector<int>> blocks;
    for (int i = 0; i < dim; ++i)
        blocks[{weight_str(C.weight[i]), C.par[i]}].push_back(i);

    struct BlockOut {
        std::vector<Vec> reps;  // in block coordinates
        std::vector<int> cols;
    };
    std::vector<std::pair<const std::pair<std::string, Par>*, const std::vector<int>*>> blist;
    for (const auto& [key, cols] : blocks) blist.push_back({&key, &cols});
    std::vector<BlockOut> bout(blist.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int bi = 0; bi < static_cast<int>(blist.size()); ++bi) {
        const std::vector<int>& cols = *blist[bi].second;
        const int bdim = static_cast<int>(cols.size());
        // restrict dout to the block columns, keeping only nonzero rows
        std::vector<Vec> rows;
        {
            std::map<int, Vec> by_row;
            for (int t = 0; t < bdim; ++t) {
                for (int r = 0; r < dout.rows(); ++r) {
                    const Scalar& v = dout.at(r, cols[t]);
                    if (v.is_zero()) continue;
                    auto [it, fresh] = by_row.emplace(r, Vec(bdim));
                    it->second[t] = v;
                }
            }
            for (auto& [r, row] : by_row) rows.push_back(std::move(row));
        }
        std::vector<Vec> kernel = kernel_basis(ExactMatrix::from_rows(rows, bdim));
        // image of the incoming differential restricted to this block
        SpanBuilder image(bdim);
        if (din.cols() > 0) {
            std::map<int, int> col_of;  // global row -> block position
            for (int t = 0; t < bdim; ++t) col_of[cols[t]] = t;
            for (int c = 0; c < din.cols(); ++c) {
                Vec v(bdim);
                bool nz = false, inside = true;
                for (int r = 0; r < din.rows() && inside; ++r) {
                    const Scalar& x = din.at(r, c);
                    if (x.is_zero()) continue;
                    auto it = col_of.find(r);
                    if (it == col_of.end()) {
                        inside = false;
                    } else {
                        v[it->second] = x;
                        nz = true;
                    }
                }
                if (inside && nz) image.add(std::move(v));
            }
        }
        BlockOut out;
        out.cols = cols;
        for (const Vec& z : kernel) {
            Vec r = image.reduce(z);
            if (!vec_is_zero(r)) {
                // normalize the leading coordinate to 1 for stable output
                int lead = -1;
                for (int t = 0; t < bdim; ++t) {
                    if (!r[t].is_zero()) {
                        lead = t;
                        break;
                    }
                }
                Vec rr = vec_scale(r, r[lead].inv());
                image.add(r);  // quotient by previously chosen representatives
                out.reps.push_back(std::move(rr));
            }
        }
        bout[bi] = std::move(out);
    }

    for (size_t bi = 0; bi < bout.size(); ++bi) {
        for (const Vec& r : bout[bi].reps) {
            Vec full(dim);
            for (size_t t = 0; t < bout[bi].cols.size(); ++t) full[bout[bi].cols[t]] = r[t];
            CohomologyClass cls;
            int lead = bout[bi].cols[0];
            for (int t = 0; t < dim; ++t) {
                if (!full[t].is_zero()) {
                    lead = t;
                    break;
                }
            }
            cls.parity = C.par[lead];
            cls.weight = C.weight[lead];
            cls.rep = std::move(full);
            (is_odd(cls.parity) ? rep.sdim.odd : rep.sdim.even)++;
            rep.classes.push_back(std::move(cls));
        }
    }
    return rep;
}

ExactMatrix SpencerComplex::g0_action(const Vec& x, int k, int s) const {
    CochainSpace C = cochains(k, s);
    const int dim = static_cast<int>(C.basis.size());
    ExactMatrix m(dim, dim);
    if (dim == 0) return m;
    const int d = k - s;
    const int nc = g_->dim(d);
    const int nv = g_->dim(-1);
    const SuperSpace& coef = g_->comp.at(d);
    const SuperSpace& V = g_->comp.at(-1);
    auto index = midx_index(dual_minus1_, s);
    const auto& act_tab = g_->br.at({0, d});   // [x, m]
    const auto& vec_tab = g_->br.at({0, -1});  // [x, e_l]

    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        const Par px = g_->comp.at(0).par[i];
        // coadjoint on the dual basis: x.e'_j = -(-1)^{p(x)p_j} sum_l a_{jl} e'_l
        // where [x, e_l] = sum_j a_{jl} e_j
        std::vector<SVec> coad(nv);
        for (int l = 0; l < nv; ++l) {
            for (const auto& [j, a] : vec_tab[i][l]) {
                int sg = (is_odd(px) && is_odd(V.par[j])) ? 1 : -1;
                coad[j].emplace_back(l, sg < 0 ? -a : a);
            }
        }
        for (int col = 0; col < dim; ++col) {
            const auto& ref = C.basis[col];
            const Scalar& xi = x[i];
            // [x, m] ox w
            for (const auto& [b, v] : act_tab[i][ref.coef]) {
                int row = index.at(ref.J) * nc + b;
                m.at(row, col) += xi * v;
            }
            // (-1)^{p(x)p(m)} m ox (x.w), derivation over the slots
            int pre0 = (is_odd(px) && is_odd(coef.par[ref.coef])) ? -1 : 1;
            Par acc = Par::Even;
            for (size_t slot = 0; slot < ref.J.size(); ++slot) {
                int j = ref.J[slot];
                int pre = pre0 * ((is_odd(px) && is_odd(acc)) ? -1 : 1);
                acc = acc + dual_minus1_.par[j];
                MIdx rest;
                for (size_t t = 0; t < ref.J.size(); ++t)
                    if (t != slot) rest.push_back(ref.J[t]);
                for (const auto& [l, a] : coad[j]) {
                    // commute the replacement e'_l from this slot to the front
                    int outsign = 1;
                    for (size_t t = 0; t < slot; ++t)
                        outsign *= -sign_pow(dual_minus1_.par[ref.J[t]], dual_minus1_.par[l]);
                    auto ins = wedge_insert(dual_minus1_, l, rest);
                    if (!ins) continue;
                    int row = index.at(ins->second) * nc + ref.coef;
                    Scalar val = xi * a * Scalar(pre * outsign * ins->first);
                    m.at(row, col) += val;
                }
            }
        }
    }
    return m;
}

bool SpencerComplex::check_d_squared(int k, int s) const {
    ExactMatrix a = differential(k, s);
    ExactMatrix b = differential(k, s + 1);
    if (a.rows() == 0 || b.rows() == 0) return true;
    return (b * a).is_zero();
}

bool SpencerComplex::check_equivariance(int k, int s) const {
    const int n0 = g_->dim(0);
    ExactMatrix d = differential(k, s);
    for (int i = 0; i < n0; ++i) {
        Vec x(n0);
        x[i] = Scalar(1);
        ExactMatrix a_src = g0_action(x, k, s);
        ExactMatrix a_dst = g0_action(x, k, s + 1);
        if (!(a_dst * d - d * a_src).is_zero()) return false;
    }
    return true;
}

std::vector<CohomologyReport> SpencerComplex::structure_functions(int k_max) const {
    std::vector<CohomologyReport> out;
    for (int k = 1; k <= k_max; ++k) out.push_back(cohomology(k, 2));
    return out;
}

}  // namespace spencer
