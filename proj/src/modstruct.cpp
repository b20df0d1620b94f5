#include "spencer/modstruct.hpp"

#include <algorithm>

namespace spencer {

Module cohomology_module(const SpencerComplex& sc, const CohomologyReport& rep,
                         const LieSuperAlgebra& g0) {
    const GradedAlgebra& g = sc.graded();
    CochainSpace C = sc.cochains(rep.k, rep.s);
    const int cdim = static_cast<int>(C.basis.size());
    const int m = static_cast<int>(rep.classes.size());

    // coordinates on the kernel: image generators first, then representatives
    CoordSpan span(cdim);
    int n_im = 0;
    {
        ExactMatrix din = sc.differential(rep.k, rep.s - 1);
        for (int c = 0; c < din.cols(); ++c) {
            Vec v(cdim);
            bool nz = false;
            for (int r = 0; r < cdim; ++r) {
                v[r] = din.at(r, c);
                if (!v[r].is_zero()) nz = true;
            }
            if (nz && span.add(v)) ++n_im;
        }
    }
    for (const auto& cls : rep.classes) {
        if (!span.add(cls.rep)) throw std::logic_error("representative inside the image");
    }
    auto class_coords = [&](const Vec& cocycle) {
        auto c = span.express(cocycle);
        if (!c) throw std::logic_error("vector outside kernel + image span");
        Vec out(m);
        for (int t = 0; t < m; ++t) out[t] = (*c)[n_im + t];
        return out;
    };

    Module mod;
    mod.alg = &g0;
    for (int t = 0; t < m; ++t) {
        mod.space.push("c" + std::to_string(t + 1), rep.classes[t].parity,
                       rep.classes[t].weight);
    }
    const int n0 = g0.dim();
    for (int i = 0; i < n0; ++i) {
        Vec x(n0);
        x[i] = Scalar(1);
        ExactMatrix act = sc.g0_action(x, rep.k, rep.s);
        ExactMatrix r(m, m);
        for (int t = 0; t < m; ++t) {
            Vec img = act.apply(rep.classes[t].rep);
            Vec cc = class_coords(img);
            for (int s2 = 0; s2 < m; ++s2) r.at(s2, t) = cc[s2];
        }
        mod.act.push_back(std::move(r));
    }
    return mod;
}

std::map<std::string, std::vector<int>> weight_spaces(const Module& m) {
    // verify diagonality of the Cartan action while grouping
    std::map<std::string, std::vector<int>> out;
    const int d = m.space.dim();
    for (const Vec& h : m.alg->cartan) {
        ExactMatrix hm = m.action_of(h);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (i != j && !hm.at(i, j).is_zero())
                    throw NonDiagonalizableAction("cartan action is not diagonal on the module");
    }
    for (int i = 0; i < d; ++i) out[weight_str(m.space.weights.empty() ? Weight{} : m.space.weights[i])].push_back(i);
    return out;
}

std::vector<WeightVectorInfo> highest_weight_vectors(const Module& m) {
    const int d = m.space.dim();
    std::vector<WeightVectorInfo> out;
    if (d == 0) return out;
    std::vector<Vec> rows;
    for (const Vec& r : m.alg->raising) {
        ExactMatrix a = m.action_of(r);
        for (int i = 0; i < a.rows(); ++i) {
            Vec row = a.row(i);
            if (!vec_is_zero(row)) rows.push_back(std::move(row));
        }
    }
    std::vector<Vec> kernel = rows.empty()
                                  ? std::vector<Vec>()
                                  : kernel_basis(ExactMatrix::from_rows(rows, d));
    if (rows.empty()) {
        for (int i = 0; i < d; ++i) {
            Vec v(d);
            v[i] = Scalar(1);
            kernel.push_back(std::move(v));
        }
    }
    for (const Vec& v : kernel) {
        WeightVectorInfo info;
        info.vec = v;
        int lead = -1;
        for (int i = 0; i < d; ++i) {
            if (!v[i].is_zero()) {
                lead = i;
                break;
            }
        }
        info.parity = m.space.par[lead];
        if (!m.space.weights.empty()) info.weight = m.space.weights[lead];
        // verify homogeneity, annihilation and the eigenvalues
        for (int i = 0; i < d; ++i) {
            if (v[i].is_zero()) continue;
            if (m.space.par[i] != info.parity)
                throw NonDiagonalizableAction("highest weight vector mixes parities");
            if (!m.space.weights.empty() && !(m.space.weights[i] == info.weight))
                throw NonDiagonalizableAction("highest weight vector mixes weights");
        }
        for (const Vec& r : m.alg->raising) {
            if (!vec_is_zero(m.action_of(r).apply(v)))
                throw std::logic_error("raising operator does not annihilate HWV");
        }
        for (size_t hc = 0; hc < m.alg->cartan.size(); ++hc) {
            Vec hv = m.action_of(m.alg->cartan[hc]).apply(v);
            Vec expect = vec_scale(v, info.weight.empty() ? Scalar(0) : info.weight[hc]);
            for (int i = 0; i < d; ++i)
                if (!(hv[i] - expect[i]).is_zero())
                    throw std::logic_error("HWV eigenvalue mismatch");
        }
        out.push_back(std::move(info));
    }
    // deterministic order: by weight string, then parity
    std::stable_sort(out.begin(), out.end(), [](const WeightVectorInfo& a, const WeightVectorInfo& b) {
        return weight_str(a.weight) < weight_str(b.weight);
    });
    return out;
}

std::vector<Vec> submodule_generated(const Module& m, const std::vector<Vec>& gens) {
    SpanBuilder span(m.space.dim());
    std::vector<Vec> frontier;
    for (const Vec& v : gens) {
        if (span.add(v)) frontier.push_back(span.basis()[span.dim() - 1]);
    }
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const Vec& v : frontier) {
            for (const auto& a : m.act) {
                Vec img = a.apply(v);
                if (span.add(img)) next.push_back(img);
            }
        }
        frontier = std::move(next);
    }
    return span.basis();
}

Vec QuotientModule::to_quotient(const Vec& v) const {
    Vec r = sub.reduce(v);
    Vec q(positions.size());
    for (size_t t = 0; t < positions.size(); ++t) q[t] = r[positions[t]];
    return q;
}

Vec QuotientModule::lift(const Vec& q) const {
    Vec v(sub.ambient());
    for (size_t t = 0; t < positions.size(); ++t) v[positions[t]] = q[t];
    return v;
}

QuotientModule quotient_module(const Module& m, const std::vector<Vec>& subgens) {
    const int d = m.space.dim();
    QuotientModule qm{Module{}, {}, SpanBuilder(d)};
    for (const Vec& v : subgens) qm.sub.add(v);
    std::vector<bool> is_pivot(d, false);
    for (int p : qm.sub.pivots()) is_pivot[p] = true;
    for (int i = 0; i < d; ++i)
        if (!is_pivot[i]) qm.positions.push_back(i);
    qm.mod.alg = m.alg;
    for (size_t t = 0; t < qm.positions.size(); ++t) {
        int i = qm.positions[t];
        qm.mod.space.push(m.space.labels[i] + "~", m.space.par[i],
                          m.space.weights.empty() ? Weight{} : m.space.weights[i]);
    }
    const int qd = static_cast<int>(qm.positions.size());
    for (const auto& a : m.act) {
        ExactMatrix r(qd, qd);
        for (int t = 0; t < qd; ++t) {
            Vec img = a.apply(qm.lift([&] {
                Vec u(qd);
                u[t] = Scalar(1);
                return u;
            }()));
            Vec q = qm.to_quotient(img);
            for (int s2 = 0; s2 < qd; ++s2) r.at(s2, t) = q[s2];
        }
        qm.mod.act.push_back(std::move(r));
    }
    return qm;
}

SDim endomorphism_sdim(const Module& m) {
    const int d = m.space.dim();
    SDim out;
    if (d == 0) return out;
    for (int sector = 0; sector < 2; ++sector) {
        // unknowns: entries E_{ij} with p_i + p_j = sector
        std::vector<std::pair<int, int>> cells;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if ((is_odd(m.space.par[i] + m.space.par[j]) ? 1 : 0) == sector)
                    cells.emplace_back(i, j);
        if (cells.empty()) continue;
        std::map<std::pair<int, int>, int> cell_index;
        for (size_t t = 0; t < cells.size(); ++t) cell_index[cells[t]] = static_cast<int>(t);
        std::vector<Vec> rows;
        for (const auto& a : m.act) {
            // rho(x) E - (-1)^{p(x)p(E)} E rho(x) = 0
            // (for even E this is the plain commutator)
            std::map<std::pair<int, int>, Vec> row_map;
            for (size_t t = 0; t < cells.size(); ++t) {
                auto [i, j] = cells[t];
                for (int r = 0; r < d; ++r) {
                    const Scalar& v = a.at(r, i);
                    if (!v.is_zero()) {
                        auto& row = row_map[{r, j}];
                        if (row.empty()) row.assign(cells.size(), Scalar(0));
                        row[t] += v;
                    }
                }
                for (int c = 0; c < d; ++c) {
                    const Scalar& v = a.at(j, c);
                    if (!v.is_zero()) {
                        auto& row = row_map[{i, c}];
                        if (row.empty()) row.assign(cells.size(), Scalar(0));
                        // sign: odd E and odd x anticommute
                        bool flip = sector == 1 && is_odd(m.alg->space.par[&a - m.act.data()]);
                        row[t] -= flip ? -v : v;
                    }
                }
            }
            for (auto& [rc, row] : row_map) rows.push_back(std::move(row));
        }
        int dim_sector = static_cast<int>(cells.size()) -
                         (rows.empty() ? 0 : rank(ExactMatrix::from_rows(rows, static_cast<int>(cells.size()))));
        (sector == 0 ? out.even : out.odd) = dim_sector;
    }
    return out;
}

bool is_irreducible(const Module& m) {
    const int d = m.space.dim();
    if (d == 0) return false;
    for (int i = 0; i < d; ++i) {
        Vec v(d);
        v[i] = Scalar(1);
        if (static_cast<int>(submodule_generated(m, {v}).size()) != d) return false;
    }
    return true;
}

ModuleReport composition_report(const Module& m) {
    ModuleReport rep;
    rep.sdim = m.space.sdim();
    rep.hwvs = highest_weight_vectors(m);
    const int d = m.space.dim();

    // iterated socle filtration
    std::vector<Vec> accumulated;  // ambient spanning of the layers so far
    Module cur = m;
    QuotientModule carrier = quotient_module(m, {});  // identity carrier
    bool first = true;
    while (true) {
        std::vector<WeightVectorInfo> hw = highest_weight_vectors(cur);
        if (hw.empty()) {
            if (cur.space.dim() > 0) throw std::logic_error("no HWV in a nonzero module");
            break;
        }
        std::vector<Vec> gens;
        for (const auto& w : hw) gens.push_back(w.vec);
        std::vector<Vec> layer_span = submodule_generated(cur, gens);
        Layer layer;
        layer.hwvs = hw;
        {
            SDim sd;
            SpanBuilder sb(cur.space.dim());
            for (const Vec& v : layer_span) sb.add(v);
            for (const Vec& v : sb.basis()) {
                int lead = 0;
                while (v[lead].is_zero()) ++lead;
                (is_odd(cur.space.par[lead]) ? sd.odd : sd.even)++;
            }
            layer.sdim = sd;
        }
        {
            Module lm = sub_module(cur, layer_span, "l");
            SDim es = endomorphism_sdim(lm);
            if (es.even == 1 && es.odd == 0)
                layer.type_tag = "G";
            else if (es.even == 1 && es.odd == 1)
                layer.type_tag = "Q";
            else
                layer.type_tag = "(" + es.str() + ")";
        }
        rep.layers.push_back(std::move(layer));
        if (static_cast<int>(layer_span.size()) == cur.space.dim()) break;
        // lift the layer into ambient coordinates and accumulate
        std::vector<Vec> ambient_layer;
        if (first) {
            ambient_layer = layer_span;
        } else {
            for (const Vec& v : layer_span) ambient_layer.push_back(carrier.lift(v));
        }
        for (const Vec& v : ambient_layer) accumulated.push_back(v);
        carrier = quotient_module(m, accumulated);
        cur = carrier.mod;
        first = false;
    }
    rep.split = rep.layers.size() == 1;
    (void)d;
    return rep;
}

}  // namespace spencer
