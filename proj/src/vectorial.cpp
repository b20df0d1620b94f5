#include "spencer/vectorial.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace spencer {

namespace {

// monomial in K[x_1..x_a] ox Lambda(xi_1..xi_b)
struct Mono {
    std::vector<int> ev;  // exponents of the even variables
    unsigned odd = 0;     // bitmask of odd variables
    auto operator<=>(const Mono& o) const = default;
};

int popcount_below(unsigned mask, int k) {
    return __builtin_popcount(mask & ((1u << k) - 1u));
}

int interleave_sign(unsigned a, unsigned b) {
    int inv = 0;
    for (int i = 0; i < 32; ++i) {
        if (b & (1u << i)) inv += __builtin_popcount(a >> (i + 1));
    }
    return (inv & 1) ? -1 : 1;
}

struct VarSet {
    int a, b;
    Par parity(const Mono& m) const {
        return (__builtin_popcount(m.odd) & 1) ? Par::Odd : Par::Even;
    }
    std::optional<std::pair<int, Mono>> mul(const Mono& x, const Mono& y) const {
        if (x.odd & y.odd) return std::nullopt;
        Mono r;
        r.ev.resize(a);
        for (int i = 0; i < a; ++i) r.ev[i] = x.ev[i] + y.ev[i];
        r.odd = x.odd | y.odd;
        return std::make_pair(interleave_sign(x.odd, y.odd), r);
    }
    std::optional<std::pair<Scalar, Mono>> dx(const Mono& m, int i) const {
        if (m.ev[i] == 0) return std::nullopt;
        Mono r = m;
        r.ev[i] -= 1;
        return std::make_pair(Scalar(m.ev[i]), r);
    }
    std::optional<std::pair<Scalar, Mono>> dxi(const Mono& m, int k) const {
        if (!(m.odd & (1u << k))) return std::nullopt;
        Mono r = m;
        r.odd &= ~(1u << k);
        int s = (popcount_below(m.odd, k) & 1) ? -1 : 1;
        return std::make_pair(Scalar(s), r);
    }
    std::vector<Mono> monomials_of_degree(int d) const {
        std::vector<Mono> out;
        std::vector<int> ev(a, 0);
        std::function<void(int, int)> rec = [&](int pos, int rem) {
            if (pos == a) {
                for (unsigned mask = 0; mask < (1u << b); ++mask) {
                    if (__builtin_popcount(mask) == rem) out.push_back(Mono{ev, mask});
                }
                return;
            }
            for (int e = 0; e <= rem; ++e) {
                ev[pos] = e;
                rec(pos + 1, rem - e);
            }
            ev[pos] = 0;
        };
        if (d >= 0) rec(0, d);
        std::sort(out.begin(), out.end());
        return out;
    }
    std::string str(const Mono& m) const {
        std::string s;
        for (int i = 0; i < a; ++i) {
            if (m.ev[i] == 0) continue;
            s += "x" + std::to_string(i + 1);
            if (m.ev[i] > 1) s += "^" + std::to_string(m.ev[i]);
        }
        for (int k = 0; k < b; ++k) {
            if (m.odd & (1u << k)) s += "q" + std::to_string(k + 1);
        }
        return s.empty() ? "1" : s;
    }
};

/// Shared assembly. A model provides, per degree, an ambient enumeration
/// with parity/weight/label and a bilinear ambient bracket; a component is
/// a subspace of the ambient span (missing entry = full span). Bracket
/// tables are produced for all materialized degree pairs and closure is
/// asserted, including vanishing into dropped components.
struct ModelAssembly {
    int lo = -1, hi = 0;
    bool complete = false;  // nothing exists above hi
    std::function<int(int)> ambient_dim;
    std::function<Par(int, int)> amb_par;
    std::function<Weight(int, int)> amb_weight;
    std::function<std::string(int, int)> amb_label;
    std::function<SVec(int, int, int, int)> amb_bracket;
    std::map<int, std::vector<Vec>> basis;

    GradedAlgebra run() {
        GradedAlgebra g;
        std::map<int, CoordSpan> span;
        for (int d = lo; d <= hi; ++d) {
            const int na = ambient_dim(d);
            if (!basis.count(d)) {
                std::vector<Vec> units;
                for (int t = 0; t < na; ++t) {
                    Vec v(na);
                    v[t] = Scalar(1);
                    units.push_back(std::move(v));
                }
                basis[d] = std::move(units);
            }
            const auto& bs = basis[d];
            span.emplace(d, CoordSpan(na));
            SuperSpace sp;
            for (size_t i = 0; i < bs.size(); ++i) {
                if (!span.at(d).add(bs[i])) throw BadParams("dependent component basis");
                int lead = -1;
                for (int t = 0; t < na; ++t) {
                    if (!bs[i][t].is_zero()) {
                        lead = t;
                        break;
                    }
                }
                int nnz = 0;
                for (int t = 0; t < na; ++t)
                    if (!bs[i][t].is_zero()) ++nnz;
                std::string label = nnz == 1 ? amb_label(d, lead)
                                             : "v" + std::to_string(d) + "_" + std::to_string(i + 1);
                sp.push(std::move(label), amb_par(d, lead), amb_weight(d, lead));
            }
            g.comp[d] = std::move(sp);
        }
        g.cutoff = hi;
        g.stabilized = complete || g.dim(hi) == 0;
        for (int d1 = lo; d1 <= hi; ++d1) {
            for (int d2 = lo; d2 <= hi; ++d2) {
                const int target = d1 + d2;
                if (target > hi) continue;  // beyond the materialized range
                const auto& b1 = basis[d1];
                const auto& b2 = basis[d2];
                std::vector<std::vector<SVec>> tab(b1.size(), std::vector<SVec>(b2.size()));
                const int ntar = target < lo ? 0 : ambient_dim(target);
                for (size_t i = 0; i < b1.size(); ++i) {
                    for (size_t j = 0; j < b2.size(); ++j) {
                        Vec acc(ntar);
                        for (size_t t1 = 0; t1 < b1[i].size(); ++t1) {
                            if (b1[i][t1].is_zero()) continue;
                            for (size_t t2 = 0; t2 < b2[j].size(); ++t2) {
                                if (b2[j][t2].is_zero()) continue;
                                Scalar c = b1[i][t1] * b2[j][t2];
                                for (const auto& [k, v] : amb_bracket(
                                         d1, static_cast<int>(t1), d2, static_cast<int>(t2)))
                                    acc[k] += c * v;
                            }
                        }
                        if (target < lo || g.dim(target) == 0) {
                            if (!vec_is_zero(acc))
                                throw BadParams("bracket escaped the materialized components");
                            continue;
                        }
                        auto coords = span.at(target).express(acc);
                        if (!coords) throw BadParams("component brackets are not closed");
                        tab[i][j] = sparsify(*coords);
                    }
                }
                g.br[{d1, d2}] = std::move(tab);
            }
        }
        return g;
    }
};

/// raising operators: degree-0 basis elements of lexicographically positive
/// weight (valid whenever the torus separates positive and negative roots)
void fill_raising_by_weight(GradedAlgebra& g) {
    const SuperSpace& z = g.comp.at(0);
    for (int i = 0; i < z.dim(); ++i) {
        const Weight& w = z.weights[i];
        int sign = 0;
        for (const auto& c : w) {
            if (!c.is_zero()) {
                sign = (Scalar(0) < c) ? 1 : -1;
                break;
            }
        }
        if (sign > 0) {
            Vec r(z.dim());
            r[i] = Scalar(1);
            g.raising0.push_back(std::move(r));
        }
    }
}

}  // namespace

GradedAlgebra build_vect(int a, int b, int max_degree, bool special) {
    if (a < 0 || b < 0 || a + b == 0 || b > 20) throw BadParams("vect: bad sizes");
    VarSet vs{a, b};
    const int nvar = a + b;
    const bool complete = (a == 0);
    int hi = complete ? std::min(max_degree, b - 1) : max_degree;

    using Term = std::pair<Mono, int>;  // (coefficient monomial, target variable)
    auto amb = std::make_shared<std::map<int, std::vector<Term>>>();
    auto amb_index = std::make_shared<std::map<int, std::map<Term, int>>>();
    for (int d = -1; d <= hi; ++d) {
        std::vector<Term> list;
        for (const Mono& m : vs.monomials_of_degree(d + 1))
            for (int c = 0; c < nvar; ++c) list.emplace_back(m, c);
        std::sort(list.begin(), list.end());
        for (size_t t = 0; t < list.size(); ++t) (*amb_index)[d][list[t]] = static_cast<int>(t);
        (*amb)[d] = std::move(list);
    }
    auto var_par = [a](int c) { return c < a ? Par::Even : Par::Odd; };
    auto term_par = [vs, var_par](const Term& f) { return vs.parity(f.first) + var_par(f.second); };
    auto term_weight = [a, b](const Term& f) {
        Weight w;
        for (int i = 0; i < a; ++i) w.push_back(Scalar(f.first.ev[i] - (f.second == i ? 1 : 0)));
        for (int k = 0; k < b; ++k) {
            int e = (f.first.odd >> k) & 1;
            w.push_back(Scalar(e - (f.second == a + k ? 1 : 0)));
        }
        return w;
    };
    auto deriv = [vs, a](const Mono& m, int c) { return c < a ? vs.dx(m, c) : vs.dxi(m, c - a); };

    ModelAssembly as;
    as.lo = -1;
    as.hi = hi;
    as.complete = complete;
    as.ambient_dim = [amb](int d) { return d < -1 ? 0 : static_cast<int>(amb->at(d).size()); };
    as.amb_par = [amb, term_par](int d, int t) { return term_par(amb->at(d)[t]); };
    as.amb_weight = [amb, term_weight](int d, int t) { return term_weight(amb->at(d)[t]); };
    as.amb_label = [amb, vs, a](int d, int t) {
        const auto& f = amb->at(d)[t];
        std::string tgt = f.second < a ? "x" + std::to_string(f.second + 1)
                                       : "q" + std::to_string(f.second - a + 1);
        return vs.str(f.first) + "D" + tgt;
    };
    as.amb_bracket = [amb, amb_index, vs, deriv, term_par](int d1, int t1, int d2, int t2) {
        const auto& x = amb->at(d1)[t1];
        const auto& y = amb->at(d2)[t2];
        const int target = d1 + d2;
        SVec out;
        if (target < -1) return out;
        const auto& index = amb_index->at(target);
        auto acc = [&](int at, const Scalar& v) {
            if (v.is_zero()) return;
            for (auto& [k, val] : out) {
                if (k == at) {
                    val += v;
                    return;
                }
            }
            out.emplace_back(at, v);
        };
        int s = sign_pow(term_par(x), term_par(y));
        if (auto dmy = deriv(y.first, x.second)) {
            if (auto pr = vs.mul(x.first, dmy->second))
                acc(index.at({pr->second, y.second}), dmy->first * Scalar(pr->first));
        }
        if (auto dmx = deriv(x.first, y.second)) {
            if (auto pr = vs.mul(y.first, dmx->second)) {
                Scalar v = dmx->first * Scalar(pr->first);
                acc(index.at({pr->second, x.second}), s < 0 ? v : -v);
            }
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const auto& p) { return p.second.is_zero(); }),
                  out.end());
        return out;
    };
    if (special) {
        // div(m d_x) = dx(m); div(m d_xi) = (-1)^{p(m)} dxi(m)
        auto divergence = [&](const Term& f) {
            auto d = deriv(f.first, f.second);
            if (d && f.second >= a && is_odd(vs.parity(f.first))) d->first = -d->first;
            return d;
        };
        for (int d = -1; d <= hi; ++d) {
            const auto& list = amb->at(d);
            std::map<std::string, std::vector<int>> blocks;
            for (size_t t = 0; t < list.size(); ++t) {
                std::string key = weight_str(term_weight(list[t]));
                key += is_odd(term_par(list[t])) ? "|o" : "|e";
                blocks[key].push_back(static_cast<int>(t));
            }
            std::vector<Vec> vecs;
            for (const auto& [key, idxs] : blocks) {
                std::map<Mono, int> img;
                std::vector<std::pair<int, std::pair<Scalar, Mono>>> entries;
                for (size_t t = 0; t < idxs.size(); ++t) {
                    if (auto dv = divergence(list[idxs[t]])) {
                        img.emplace(dv->second, static_cast<int>(img.size()));
                        entries.push_back({static_cast<int>(t), *dv});
                    }
                }
                ExactMatrix sys(static_cast<int>(img.size()), static_cast<int>(idxs.size()));
                for (const auto& [t, dv] : entries) sys.at(img.at(dv.second), t) += dv.first;
                for (const Vec& k : kernel_basis(sys)) {
                    Vec full(list.size());
                    for (size_t t = 0; t < idxs.size(); ++t) full[idxs[t]] = k[t];
                    vecs.push_back(std::move(full));
                }
            }
            as.basis[d] = std::move(vecs);
        }
    }
    GradedAlgebra g = as.run();
    {
        CoordSpan span0(static_cast<int>(amb->at(0).size()));
        for (const Vec& v : as.basis[0]) span0.add(v);
        auto diag_amb = [&](int c) {
            Mono m;
            m.ev.assign(a, 0);
            if (c < a)
                m.ev[c] = 1;
            else
                m.odd = 1u << (c - a);
            Vec v(amb->at(0).size());
            v[amb_index->at(0).at({m, c})] = Scalar(1);
            return v;
        };
        if (!special) {
            for (int c = 0; c < nvar; ++c) {
                if (auto coords = span0.express(diag_amb(c))) g.cartan0.push_back(*coords);
            }
        } else {
            for (int c = 0; c + 1 < nvar; ++c) {
                Vec v = diag_amb(c);
                Vec w = diag_amb(c + 1);
                for (size_t t = 0; t < v.size(); ++t) v[t] -= w[t];
                if (auto coords = span0.express(v)) g.cartan0.push_back(*coords);
            }
        }
    }
    for (int i = 0; i < a; ++i) g.weight_labels.push_back("e" + std::to_string(i + 1));
    for (int k = 0; k < b; ++k) g.weight_labels.push_back("d" + std::to_string(k + 1));
    fill_raising_by_weight(g);
    return g;
}

namespace {

struct FunctionModelSpec {
    VarSet vs;
    int npairs = 0;       // symplectic pairs among the even variables
    bool buttin = false;  // odd bracket pairing x_i with xi_i
    int hi = 0;
    bool complete = false;
    bool drop_top = false;
    std::vector<Mono> torus;  // weight torus (diagonal on monomials)
    std::vector<std::vector<std::pair<Mono, Scalar>>> cartan_combos;
    std::vector<std::string> wlabels;
    const std::map<int, std::vector<Vec>>* forced_basis = nullptr;
    bool raising_by_weight = true;
};

GradedAlgebra build_function_model(const FunctionModelSpec& spec) {
    const VarSet vs = spec.vs;
    auto amb = std::make_shared<std::map<int, std::vector<Mono>>>();
    auto amb_index = std::make_shared<std::map<int, std::map<Mono, int>>>();
    for (int d = -1; d <= spec.hi; ++d) {
        (*amb)[d] = vs.monomials_of_degree(d + 2);
        for (size_t t = 0; t < (*amb)[d].size(); ++t)
            (*amb_index)[d][(*amb)[d][t]] = static_cast<int>(t);
    }
    const Par shift = spec.buttin ? Par::Odd : Par::Even;
    const int npairs = spec.npairs;
    const bool buttin = spec.buttin;

    auto poisson = [vs, npairs, buttin](const Mono& f, const Mono& g) {
        std::map<Mono, Scalar> out;
        auto term = [&](std::optional<std::pair<Scalar, Mono>> df,
                        std::optional<std::pair<Scalar, Mono>> dg, Scalar c0) {
            if (!df || !dg || c0.is_zero()) return;
            if (auto pr = vs.mul(df->second, dg->second)) {
                Scalar v = c0 * df->first * dg->first * Scalar(pr->first);
                if (v.is_zero()) return;
                auto [it, fresh] = out.emplace(pr->second, v);
                if (!fresh) {
                    it->second += v;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        };
        if (!buttin) {
            for (int i = 0; i < npairs; ++i) {
                term(vs.dx(f, i), vs.dx(g, npairs + i), Scalar(1));
                term(vs.dx(f, npairs + i), vs.dx(g, i), Scalar(-1));
            }
            Scalar sf = is_odd(vs.parity(f)) ? Scalar(-1) : Scalar(1);
            for (int j = 0; j < vs.b; ++j) {
                int jj = vs.b - 1 - j;
                term(vs.dxi(f, j), vs.dxi(g, jj), -sf);
            }
        } else {
            Scalar sf = is_odd(vs.parity(f)) ? Scalar(-1) : Scalar(1);
            for (int i = 0; i < vs.a; ++i) {
                term(vs.dx(f, i), vs.dxi(g, i), Scalar(1));
                term(vs.dxi(f, i), vs.dx(g, i), sf);
            }
        }
        return out;
    };

    ModelAssembly as;
    as.lo = -1;
    as.hi = spec.hi;
    as.complete = spec.complete;
    as.ambient_dim = [amb](int d) { return d < -1 ? 0 : static_cast<int>(amb->at(d).size()); };
    as.amb_par = [amb, vs, shift](int d, int t) { return vs.parity(amb->at(d)[t]) + shift; };
    as.amb_weight = [amb, poisson, torus = spec.torus](int d, int t) {
        const Mono& m = amb->at(d)[t];
        Weight w;
        for (const Mono& h : torus) {
            auto br = poisson(h, m);
            Scalar lam(0);
            for (const auto& [k, v] : br) {
                if (k == m)
                    lam = v;
                else if (!v.is_zero())
                    throw BadParams("torus monomial is not diagonal");
            }
            w.push_back(lam);
        }
        return w;
    };
    as.amb_label = [amb, vs](int d, int t) { return vs.str(amb->at(d)[t]); };
    as.amb_bracket = [amb, amb_index, poisson](int d1, int t1, int d2, int t2) {
        SVec out;
        const int target = d1 + d2;
        auto br = poisson(amb->at(d1)[t1], amb->at(d2)[t2]);
        if (target < -1) return out;  // constants are divided out
        const auto& index = amb_index->at(target);
        for (const auto& [m, v] : br) out.emplace_back(index.at(m), v);
        return out;
    };
    if (spec.drop_top) as.basis[spec.hi] = {};
    if (spec.forced_basis) {
        for (const auto& [d, vecs] : *spec.forced_basis) as.basis[d] = vecs;
    }
    GradedAlgebra g = as.run();
    g.weight_labels = spec.wlabels;
    {
        CoordSpan span0(static_cast<int>(amb->at(0).size()));
        for (const Vec& v : as.basis[0]) span0.add(v);
        for (const auto& combo : spec.cartan_combos) {
            Vec v(amb->at(0).size());
            for (const auto& [m, c] : combo) v[amb_index->at(0).at(m)] += c;
            auto coords = span0.express(v);
            if (!coords) throw BadParams("cartan element not in the degree-0 component");
            g.cartan0.push_back(*coords);
        }
    }
    if (spec.raising_by_weight) fill_raising_by_weight(g);
    return g;
}

}  // namespace

GradedAlgebra build_h(int a, int b, int max_degree, bool h_odd) {
    if (a < 0 || b < 0 || (a == 0 && b < 3) || b > 20) throw BadParams("h: bad sizes");
    if (h_odd && a != 0) throw BadParams("the h-odd variant is defined for h(0|b)");
    FunctionModelSpec spec;
    spec.vs = VarSet{2 * a, b};  // p_1..p_a, q_1..q_a | xi_1..xi_b
    spec.npairs = a;
    spec.complete = (a == 0);
    spec.hi = spec.complete ? std::min(max_degree, b - 2) : max_degree;
    spec.drop_top = h_odd && spec.hi == b - 2;
    for (int i = 0; i < a; ++i) {
        Mono m;
        m.ev.assign(2 * a, 0);
        m.ev[i] = 1;
        m.ev[a + i] = 1;
        spec.torus.push_back(m);
        spec.cartan_combos.push_back({{m, Scalar(1)}});
        spec.wlabels.push_back("e" + std::to_string(i + 1));
    }
    for (int j = 0; 2 * j + 1 < b; ++j) {
        Mono m;
        m.ev.assign(2 * a, 0);
        m.odd = (1u << j) | (1u << (b - 1 - j));
        spec.torus.push_back(m);
        spec.cartan_combos.push_back({{m, Scalar(1)}});
        spec.wlabels.push_back("d" + std::to_string(j + 1));
    }
    return build_function_model(spec);
}

GradedAlgebra build_le(int n, int max_degree, bool special) {
    if (n < 1 || n > 12) throw BadParams("le: bad size");
    FunctionModelSpec spec;
    spec.vs = VarSet{n, n};
    spec.buttin = true;
    spec.hi = max_degree;
    auto xi_mono = [n](int i) {
        Mono m;
        m.ev.assign(n, 0);
        m.ev[i] = 1;
        m.odd = 1u << i;
        return m;
    };
    for (int i = 0; i < n; ++i) {
        spec.torus.push_back(xi_mono(i));
        spec.wlabels.push_back("e" + std::to_string(i + 1));
    }
    if (special) {
        // cartan of sle: traceless combinations of x_i xi_i
        for (int i = 0; i + 1 < n; ++i)
            spec.cartan_combos.push_back({{xi_mono(i), Scalar(1)}, {xi_mono(i + 1), Scalar(-1)}});
    } else {
        for (int i = 0; i < n; ++i) spec.cartan_combos.push_back({{xi_mono(i), Scalar(1)}});
    }
    // this torus does not separate the positive roots of the periplectic
    // degree-0 part, so no raising data is attached; the le/sle golden
    // cases assert dimensions and parities only
    spec.raising_by_weight = false;

    std::map<int, std::vector<Vec>> forced;
    if (special) {
        VarSet vs = spec.vs;
        for (int d = -1; d <= spec.hi; ++d) {
            std::vector<Mono> amb = vs.monomials_of_degree(d + 2);
            std::vector<Mono> img = vs.monomials_of_degree(d);
            std::map<Mono, int> img_index;
            for (size_t t = 0; t < img.size(); ++t) img_index[img[t]] = static_cast<int>(t);
            ExactMatrix sys(static_cast<int>(img.size()), static_cast<int>(amb.size()));
            for (size_t t = 0; t < amb.size(); ++t) {
                for (int i = 0; i < n; ++i) {
                    auto d1 = vs.dxi(amb[t], i);
                    if (!d1) continue;
                    auto d2 = vs.dx(d1->second, i);
                    if (!d2) continue;
                    sys.at(img_index.at(d2->second), static_cast<int>(t)) += d1->first * d2->first;
                }
            }
            forced[d] = kernel_basis(sys);
        }
        spec.forced_basis = &forced;
        return build_function_model(spec);
    }
    return build_function_model(spec);
}

}  // namespace spencer
