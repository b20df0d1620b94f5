#include "spencer/liesuper.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace spencer {

Vec densify(const SVec& s, int dim) {
    Vec v(dim);
    for (const auto& [k, c] : s) v[k] = c;
    return v;
}

SVec sparsify(const Vec& v) {
    SVec s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) s.emplace_back(static_cast<int>(i), v[i]);
    }
    return s;
}

Vec LieSuperAlgebra::bracket(const Vec& x, const Vec& y) const {
    Vec r(dim());
    for (int i = 0; i < dim(); ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            if (y[j].is_zero()) continue;
            Scalar c = x[i] * y[j];
            for (const auto& [k, v] : sc[i][j]) r[k] += c * v;
        }
    }
    return r;
}

std::vector<std::tuple<int, int, int>> LieSuperAlgebra::check_jacobi() const {
    std::vector<std::tuple<int, int, int>> bad;
    const int n = dim();
    std::vector<Vec> basis(n, Vec(n));
    for (int i = 0; i < n; ++i) basis[i][i] = Scalar(1);
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            Vec ab = bracket_basis(a, b);
            for (int c = b; c < n; ++c) {
                // [[a,b],c] - [a,[b,c]] + (-1)^{p(a)p(b)} [b,[a,c]] = 0
                Vec lhs = bracket(ab, basis[c]);
                Vec t1 = bracket(basis[a], bracket_basis(b, c));
                Vec t2 = bracket(basis[b], bracket_basis(a, c));
                int s = sign_pow(space.par[a], space.par[b]);
                bool ok = true;
                for (int k = 0; k < n && ok; ++k) {
                    Scalar d = lhs[k] - t1[k] + (s < 0 ? -t2[k] : t2[k]);
                    ok = d.is_zero();
                }
                if (!ok) bad.emplace_back(a, b, c);
            }
        }
    }
    return bad;
}

bool LieSuperAlgebra::check_anticommutativity() const {
    const int n = dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Vec ij = bracket_basis(i, j);
            Vec ji = bracket_basis(j, i);
            int s = sign_pow(space.par[i], space.par[j]);
            for (int k = 0; k < n; ++k) {
                if (!(ij[k] + (s < 0 ? -ji[k] : ji[k])).is_zero()) return false;
            }
        }
    }
    return true;
}

LieSuperAlgebra LieSuperAlgebra::eval_alpha(const Rat& x) const {
    LieSuperAlgebra g = *this;
    for (auto& row : g.sc)
        for (auto& sv : row)
            for (auto& [k, c] : sv) c = c.eval_alpha(x);
    for (auto& w : g.space.weights)
        for (auto& c : w) c = c.eval_alpha(x);
    for (auto& v : g.cartan)
        for (auto& c : v) c = c.eval_alpha(x);
    for (auto& v : g.raising)
        for (auto& c : v) c = c.eval_alpha(x);
    return g;
}

// --------------------------------------------------------------- Module

ExactMatrix Module::action_of(const Vec& x) const {
    const int d = space.dim();
    ExactMatrix m(d, d);
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                if (!act[i].at(r, c).is_zero()) m.at(r, c) += x[i] * act[i].at(r, c);
    }
    return m;
}

bool Module::is_representation() const {
    const int n = alg->dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            ExactMatrix lhs = action_of(alg->bracket_basis(i, j));
            ExactMatrix ij = act[i] * act[j];
            ExactMatrix ji = act[j] * act[i];
            int s = sign_pow(alg->space.par[i], alg->space.par[j]);
            ExactMatrix rhs = s < 0 ? ij + ji : ij - ji;
            if (!(lhs - rhs).is_zero()) return false;
        }
    }
    return true;
}

Module defining_module(const LieSuperAlgebra& g) {
    if (g.def_mats.empty()) throw BadParams("algebra has no stored matrix realization");
    Module m;
    m.alg = &g;
    m.act = g.def_mats;
    const int n = static_cast<int>(g.def_format.size());
    std::vector<ExactMatrix> hmats;
    for (const Vec& h : g.cartan) {
        ExactMatrix hm(n, n);
        for (size_t i = 0; i < h.size(); ++i) {
            if (h[i].is_zero()) continue;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    if (!g.def_mats[i].at(r, c).is_zero()) hm.at(r, c) += h[i] * g.def_mats[i].at(r, c);
        }
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (r != c && !hm.at(r, c).is_zero())
                    throw BadParams("cartan not diagonal on defining module");
        hmats.push_back(std::move(hm));
    }
    for (int i = 0; i < n; ++i) {
        Weight w;
        for (const auto& hm : hmats) w.push_back(hm.at(i, i));
        m.space.push("v" + std::to_string(i + 1), g.def_format[i], std::move(w));
    }
    return m;
}

Module dual_module(const Module& m) {
    Module d;
    d.alg = m.alg;
    d.space = dual(m.space);
    const int n = m.space.dim();
    for (size_t a = 0; a < m.act.size(); ++a) {
        Par px = m.alg->space.par[a];
        ExactMatrix r(n, n);
        // (x . e'_j)(e_k) = -(-1)^{p(x)p(e_j)} rho(x)_{jk}
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const Scalar& v = m.act[a].at(j, k);
                if (v.is_zero()) continue;
                int s = (is_odd(px) && is_odd(m.space.par[j])) ? 1 : -1;
                r.at(k, j) = s < 0 ? -v : v;
            }
        }
        d.act.push_back(std::move(r));
    }
    return d;
}

Module pi_module(const Module& m) {
    Module p;
    p.alg = m.alg;
    p.space = parity_shift(m.space);
    for (size_t a = 0; a < m.act.size(); ++a) {
        ExactMatrix r = m.act[a];
        if (is_odd(m.alg->space.par[a])) {
            for (int i = 0; i < r.rows(); ++i)
                for (int j = 0; j < r.cols(); ++j)
                    if (!r.at(i, j).is_zero()) r.at(i, j) = -r.at(i, j);
        }
        p.act.push_back(std::move(r));
    }
    return p;
}

Module tensor_module(const Module& a, const Module& b) {
    Module t;
    t.alg = a.alg;
    t.space = tensor(a.space, b.space);
    const int na = a.space.dim(), nb = b.space.dim();
    for (size_t g = 0; g < a.act.size(); ++g) {
        Par px = a.alg->space.par[g];
        ExactMatrix r(na * nb, na * nb);
        // x.(v ox w) = xv ox w + (-1)^{p(x)p(v)} v ox xw
        for (int i = 0; i < na; ++i) {
            for (int j = 0; j < nb; ++j) {
                int col = i * nb + j;
                for (int k = 0; k < na; ++k) {
                    const Scalar& c = a.act[g].at(k, i);
                    if (!c.is_zero()) r.at(k * nb + j, col) += c;
                }
                int s = (is_odd(px) && is_odd(a.space.par[i])) ? -1 : 1;
                for (int k = 0; k < nb; ++k) {
                    const Scalar& c = b.act[g].at(k, j);
                    if (!c.is_zero()) r.at(i * nb + k, col) += (s < 0 ? -c : c);
                }
            }
        }
        t.act.push_back(std::move(r));
    }
    return t;
}

namespace {

// action on degree-2 monomials, shared by S^2 and Lambda^2
Module power2_module(const Module& m, bool ext) {
    Module p;
    p.alg = m.alg;
    const SuperSpace& v = m.space;
    std::vector<MIdx> basis = ext ? ext_basis(v, 2) : sym_basis(v, 2);
    std::map<MIdx, int> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
    for (const MIdx& J : basis)
        p.space.push(midx_label(v, J, ext ? "^" : "."), midx_parity(v, J), midx_weight(v, J));
    const int n = static_cast<int>(basis.size());
    auto insert = [&](int i, const MIdx& J) {
        return ext ? wedge_insert(v, i, J) : sym_insert(v, i, J);
    };
    for (size_t g = 0; g < m.act.size(); ++g) {
        Par px = m.alg->space.par[g];
        ExactMatrix r(n, n);
        for (int col = 0; col < n; ++col) {
            const MIdx& J = basis[col];
            // x.(u w) = (x u) w + (-1)^{p(x)p(u)} u (x w)
            for (int k = 0; k < v.dim(); ++k) {
                const Scalar& c = m.act[g].at(k, J[0]);
                if (!c.is_zero()) {
                    if (auto ins = insert(k, MIdx{J[1]})) {
                        int row = index.at(ins->second);
                        r.at(row, col) += ins->first < 0 ? -c : c;
                    }
                }
            }
            int pre = (is_odd(px) && is_odd(v.par[J[0]])) ? -1 : 1;
            for (int k = 0; k < v.dim(); ++k) {
                const Scalar& c = m.act[g].at(k, J[1]);
                if (!c.is_zero()) {
                    if (auto ins = insert(J[0], MIdx{k})) {
                        int row = index.at(ins->second);
                        int s = pre * ins->first;
                        r.at(row, col) += s < 0 ? -c : c;
                    }
                }
            }
        }
        p.act.push_back(std::move(r));
    }
    return p;
}

}  // namespace

Module sym2_module(const Module& m) { return power2_module(m, false); }
Module ext2_module(const Module& m) { return power2_module(m, true); }

Module sub_module(const Module& m, const std::vector<Vec>& span_vectors,
                  const std::string& label_prefix) {
    SpanBuilder sb(m.space.dim());
    for (const Vec& v : span_vectors) sb.add(v);
    const std::vector<Vec> basis = sb.basis();
    CoordSpan coords(m.space.dim());
    for (const Vec& v : basis) coords.add(v);

    Module s;
    s.alg = m.alg;
    const int d = static_cast<int>(basis.size());
    for (int i = 0; i < d; ++i) {
        Par p = Par::Even;
        Weight w;
        bool first = true;
        for (int j = 0; j < m.space.dim(); ++j) {
            if (basis[i][j].is_zero()) continue;
            if (first) {
                p = m.space.par[j];
                if (!m.space.weights.empty()) w = m.space.weights[j];
                first = false;
            } else if (m.space.par[j] != p) {
                throw BadParams("sub_module: span vector mixes parities");
            }
        }
        s.space.push(label_prefix + std::to_string(i + 1), p, std::move(w));
    }
    for (size_t g = 0; g < m.act.size(); ++g) {
        ExactMatrix r(d, d);
        for (int col = 0; col < d; ++col) {
            Vec img = m.act[g].apply(basis[col]);
            auto c = coords.express(img);
            if (!c) throw BadParams("sub_module: span is not action stable");
            for (int row = 0; row < d; ++row) r.at(row, col) = (*c)[row];
        }
        s.act.push_back(std::move(r));
    }
    return s;
}

// ----------------------------------------------------------- builders

namespace {

struct MatBasis {
    std::vector<ExactMatrix> mats;
    std::vector<Par> pars;
    std::vector<std::string> labels;
};

Vec flatten(const ExactMatrix& m) {
    Vec v;
    v.reserve(size_t(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

ExactMatrix matrix_bracket(const ExactMatrix& a, const ExactMatrix& b, Par pa, Par pb) {
    ExactMatrix ab = a * b;
    ExactMatrix ba = b * a;
    return (is_odd(pa) && is_odd(pb)) ? ab + ba : ab - ba;
}

std::string subscript(int i, int j) {
    return std::to_string(i + 1) + "," + std::to_string(j + 1);
}

/// Assign weights to basis elements as exact ad-eigenvalues under the
/// stored Cartan vectors; throws when a basis vector is not an eigenvector.
void assign_weights(LieSuperAlgebra& g) {
    const int n = g.dim();
    g.space.weights.assign(n, Weight());
    for (int i = 0; i < n; ++i) {
        Weight w;
        Vec ei(n);
        ei[i] = Scalar(1);
        for (const Vec& h : g.cartan) {
            Vec b = g.bracket(h, ei);
            Scalar lambda = b[i];
            b[i] = Scalar(0);
            if (!vec_is_zero(b))
                throw BadParams("basis element " + g.space.labels[i] + " is not a weight vector");
            w.push_back(lambda);
        }
        g.space.weights[i] = std::move(w);
    }
}

}  // namespace

LieSuperAlgebra algebra_from_matrices(const std::vector<ExactMatrix>& basis,
                                      const std::vector<Par>& basis_par,
                                      const std::vector<std::string>& labels,
                                      const std::vector<Par>& format, bool align_weights) {
    const int n = static_cast<int>(basis.size());
    const int N = static_cast<int>(format.size());
    LieSuperAlgebra g;
    CoordSpan span(N * N);
    for (int i = 0; i < n; ++i) {
        if (!span.add(flatten(basis[i]))) throw BadParams("dependent basis matrices");
        g.space.push(labels[i], basis_par[i]);
    }
    g.sc.assign(n, std::vector<SVec>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            ExactMatrix br = matrix_bracket(basis[i], basis[j], basis_par[i], basis_par[j]);
            auto c = span.express(flatten(br));
            if (!c) throw BadParams("matrix basis is not bracket closed");
            g.sc[i][j] = sparsify(*c);
        }
    }
    g.def_mats = basis;
    g.def_format = format;
    (void)align_weights;
    return g;
}

LieSuperAlgebra build_gl(int p, int q) {
    const int N = p + q;
    std::vector<Par> fmt(N, Par::Even);
    for (int i = p; i < N; ++i) fmt[i] = Par::Odd;
    MatBasis b;
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            ExactMatrix e(N, N);
            e.at(i, j) = Scalar(1);
            b.mats.push_back(std::move(e));
            b.pars.push_back(fmt[i] + fmt[j]);
            b.labels.push_back("E" + subscript(i, j));
        }
    }
    LieSuperAlgebra g = algebra_from_matrices(b.mats, b.pars, b.labels, fmt);
    for (int i = 0; i < N; ++i) {
        Vec h(N * N);
        h[i * N + i] = Scalar(1);
        g.cartan.push_back(std::move(h));
    }
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            Vec r(N * N);
            r[i * N + j] = Scalar(1);
            g.raising.push_back(std::move(r));
        }
    for (int i = 0; i < p; ++i) g.weight_labels.push_back("e" + std::to_string(i + 1));
    for (int i = 0; i < q; ++i) g.weight_labels.push_back("d" + std::to_string(i + 1));
    assign_weights(g);
    return g;
}

LieSuperAlgebra build_sl(int p, int q) {
    if (p == q) throw BadParams("sl(n|n) has a center; use psl or gl");
    const int N = p + q;
    std::vector<Par> fmt(N, Par::Even);
    for (int i = p; i < N; ++i) fmt[i] = Par::Odd;
    MatBasis b;
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            if (i == j) continue;
            ExactMatrix e(N, N);
            e.at(i, j) = Scalar(1);
            b.mats.push_back(std::move(e));
            b.pars.push_back(fmt[i] + fmt[j]);
            b.labels.push_back("E" + subscript(i, j));
        }
    }
    for (int i = 0; i + 1 < N; ++i) {
        ExactMatrix h(N, N);
        h.at(i, i) = Scalar(1);
        h.at(i + 1, i + 1) = (fmt[i] == fmt[i + 1]) ? Scalar(-1) : Scalar(1);
        b.mats.push_back(std::move(h));
        b.pars.push_back(Par::Even);
        b.labels.push_back("H" + std::to_string(i + 1));
    }
    LieSuperAlgebra g = algebra_from_matrices(b.mats, b.pars, b.labels, fmt);
    const int off = N * (N - 1);
    for (int i = 0; i + 1 < N; ++i) {
        Vec h(g.dim());
        h[off + i] = Scalar(1);
        g.cartan.push_back(std::move(h));
    }
    int idx = 0;
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            if (i == j) continue;
            if (i < j) {
                Vec r(g.dim());
                r[idx] = Scalar(1);
                g.raising.push_back(std::move(r));
            }
            ++idx;
        }
    }
    for (int i = 0; i < p; ++i) g.weight_labels.push_back("e" + std::to_string(i + 1));
    for (int i = 0; i < q; ++i) g.weight_labels.push_back("d" + std::to_string(i + 1));
    assign_weights(g);
    return g;
}

namespace {

/// Shared construction of sl(n|n)/<1> and sq(n)/<1>: brackets are computed
/// in the span extended by the identity, whose coordinate is then dropped.
LieSuperAlgebra quotient_by_identity(const MatBasis& b, int N) {
    const int d = static_cast<int>(b.mats.size());
    LieSuperAlgebra g;
    for (int i = 0; i < d; ++i) g.space.push(b.labels[i], b.pars[i]);
    CoordSpan span(N * N);
    for (int i = 0; i < d; ++i) {
        if (!span.add(flatten(b.mats[i]))) throw BadParams("dependent basis in quotient");
    }
    span.add(flatten(ExactMatrix::identity(N)));
    g.sc.assign(d, std::vector<SVec>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            ExactMatrix br = matrix_bracket(b.mats[i], b.mats[j], b.pars[i], b.pars[j]);
            auto c = span.express(flatten(br));
            if (!c) throw BadParams("quotient: bracket escaped span");
            Vec cc(*c);
            cc.resize(d);
            g.sc[i][j] = sparsify(cc);
        }
    return g;
}

LieSuperAlgebra build_q_family(int n, bool drop_btrace, bool project_center) {
    const int N = 2 * n;
    std::vector<Par> fmt(N, Par::Even);
    for (int i = n; i < N; ++i) fmt[i] = Par::Odd;
    MatBasis b;
    auto amat = [&](int i, int j) {
        ExactMatrix e(N, N);
        e.at(i, j) = Scalar(1);
        e.at(n + i, n + j) = Scalar(1);
        return e;
    };
    auto bmat = [&](int i, int j) {
        ExactMatrix e(N, N);
        e.at(i, n + j) = Scalar(1);
        e.at(n + i, j) = Scalar(1);
        return e;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            b.mats.push_back(amat(i, j));
            b.pars.push_back(Par::Even);
            b.labels.push_back("A" + subscript(i, j));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            b.mats.push_back(bmat(i, j));
            b.pars.push_back(Par::Odd);
            b.labels.push_back("B" + subscript(i, j));
        }
    const int off_a = 0;
    const int off_b = n * (n - 1);
    const int off_diag = 2 * n * (n - 1);
    int ndiag_a = 0;
    if (project_center) {
        for (int i = 0; i + 1 < n; ++i) {
            b.mats.push_back(amat(i, i) - amat(i + 1, i + 1));
            b.pars.push_back(Par::Even);
            b.labels.push_back("HA" + std::to_string(i + 1));
        }
        ndiag_a = n - 1;
    } else {
        for (int i = 0; i < n; ++i) {
            b.mats.push_back(amat(i, i));
            b.pars.push_back(Par::Even);
            b.labels.push_back("A" + subscript(i, i));
        }
        ndiag_a = n;
    }
    if (drop_btrace) {
        for (int i = 0; i + 1 < n; ++i) {
            b.mats.push_back(bmat(i, i) - bmat(i + 1, i + 1));
            b.pars.push_back(Par::Odd);
            b.labels.push_back("HB" + std::to_string(i + 1));
        }
    } else {
        for (int i = 0; i < n; ++i) {
            b.mats.push_back(bmat(i, i));
            b.pars.push_back(Par::Odd);
            b.labels.push_back("B" + subscript(i, i));
        }
    }
    LieSuperAlgebra g = project_center ? quotient_by_identity(b, N)
                                       : algebra_from_matrices(b.mats, b.pars, b.labels, fmt);
    for (int i = 0; i < ndiag_a; ++i) {
        Vec h(g.dim());
        h[off_diag + i] = Scalar(1);
        g.cartan.push_back(std::move(h));
    }
    int idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (i < j) {
                Vec r(g.dim());
                r[off_a + idx] = Scalar(1);
                g.raising.push_back(r);
                Vec rb(g.dim());
                rb[off_b + idx] = Scalar(1);
                g.raising.push_back(rb);
            }
            ++idx;
        }
    if (project_center) {
        for (int i = 0; i + 1 < n; ++i) g.weight_labels.push_back("h" + std::to_string(i + 1));
    } else {
        for (int i = 0; i < n; ++i) g.weight_labels.push_back("e" + std::to_string(i + 1));
    }
    assign_weights(g);
    return g;
}

}  // namespace

LieSuperAlgebra build_q(int n) { return build_q_family(n, false, false); }
LieSuperAlgebra build_sq(int n) { return build_q_family(n, true, false); }
LieSuperAlgebra build_psq(int n) { return build_q_family(n, true, true); }

LieSuperAlgebra build_psl(int n) {
    const int N = 2 * n;
    std::vector<Par> fmt(N, Par::Even);
    for (int i = n; i < N; ++i) fmt[i] = Par::Odd;
    MatBasis b;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (i == j) continue;
            ExactMatrix e(N, N);
            e.at(i, j) = Scalar(1);
            b.mats.push_back(std::move(e));
            b.pars.push_back(fmt[i] + fmt[j]);
            b.labels.push_back("E" + subscript(i, j));
        }
    for (int i = 0; i + 2 < N; ++i) {
        ExactMatrix h(N, N);
        h.at(i, i) = Scalar(1);
        h.at(i + 1, i + 1) = (fmt[i] == fmt[i + 1]) ? Scalar(-1) : Scalar(1);
        b.mats.push_back(std::move(h));
        b.pars.push_back(Par::Even);
        b.labels.push_back("H" + std::to_string(i + 1));
    }
    LieSuperAlgebra g = quotient_by_identity(b, N);
    const int off = N * (N - 1);
    for (int i = 0; i + 2 < N; ++i) {
        Vec h(g.dim());
        h[off + i] = Scalar(1);
        g.cartan.push_back(std::move(h));
    }
    int idx = 0;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (i == j) continue;
            if (i < j) {
                Vec r(g.dim());
                r[idx] = Scalar(1);
                g.raising.push_back(std::move(r));
            }
            ++idx;
        }
    for (int i = 0; i + 2 < N; ++i) g.weight_labels.push_back("h" + std::to_string(i + 1));
    assign_weights(g);
    return g;
}

namespace {

/// Canonical form matrix, format, parity and explicit Cartan of each kind.
void canonical_form(FormKind kind, int m, int two_n, ExactMatrix& B, std::vector<Par>& fmt,
                    Par& pb, std::vector<ExactMatrix>& cartan_mats,
                    std::vector<std::string>& wlabels) {
    auto diag_pair = [](int N, int i, int j) {
        ExactMatrix h(N, N);
        h.at(i, i) = Scalar(1);
        h.at(j, j) = Scalar(-1);
        return h;
    };
    switch (kind) {
        case FormKind::OspSy: {
            // antidiag(1_m) on the even part, J_{2n} on the odd part
            int N = m + two_n, n = two_n / 2;
            B = ExactMatrix(N, N);
            fmt.assign(N, Par::Even);
            for (int i = m; i < N; ++i) fmt[i] = Par::Odd;
            for (int i = 0; i < m; ++i) B.at(i, m - 1 - i) = Scalar(1);
            for (int i = 0; i < n; ++i) {
                B.at(m + i, m + n + i) = Scalar(1);
                B.at(m + n + i, m + i) = Scalar(-1);
            }
            pb = Par::Even;
            for (int i = 0; i < m / 2; ++i) {
                cartan_mats.push_back(diag_pair(N, i, m - 1 - i));
                wlabels.push_back("e" + std::to_string(i + 1));
            }
            for (int j = 0; j < n; ++j) {
                cartan_mats.push_back(diag_pair(N, m + j, m + n + j));
                wlabels.push_back("d" + std::to_string(j + 1));
            }
            break;
        }
        case FormKind::OspSk: {
            // J_{2n} on the even part, antidiag(1_m) on the odd part
            int N = m + two_n, n = two_n / 2;
            B = ExactMatrix(N, N);
            fmt.assign(N, Par::Even);
            for (int i = two_n; i < N; ++i) fmt[i] = Par::Odd;
            for (int i = 0; i < n; ++i) {
                B.at(i, n + i) = Scalar(1);
                B.at(n + i, i) = Scalar(-1);
            }
            for (int i = 0; i < m; ++i) B.at(two_n + i, N - 1 - i) = Scalar(1);
            pb = Par::Even;
            for (int j = 0; j < n; ++j) {
                cartan_mats.push_back(diag_pair(N, j, n + j));
                wlabels.push_back("d" + std::to_string(j + 1));
            }
            for (int i = 0; i < m / 2; ++i) {
                cartan_mats.push_back(diag_pair(N, two_n + i, N - 1 - i));
                wlabels.push_back("e" + std::to_string(i + 1));
            }
            break;
        }
        case FormKind::PeSy:
        case FormKind::PeSk: {
            int n = m;
            int N = 2 * n;
            B = ExactMatrix(N, N);
            fmt.assign(N, Par::Even);
            for (int i = n; i < N; ++i) fmt[i] = Par::Odd;
            for (int i = 0; i < n; ++i) {
                B.at(i, n + i) = Scalar(1);
                B.at(n + i, i) = kind == FormKind::PeSy ? Scalar(-1) : Scalar(1);
            }
            pb = Par::Odd;
            for (int i = 0; i < n; ++i) {
                cartan_mats.push_back(diag_pair(N, i, n + i));
                wlabels.push_back("e" + std::to_string(i + 1));
            }
            break;
        }
    }
}

}  // namespace

LieSuperAlgebra build_form_algebra(FormKind kind, int m, int two_n) {
    ExactMatrix B;
    std::vector<Par> fmt;
    Par pb = Par::Even;
    std::vector<ExactMatrix> cart_mats;
    std::vector<std::string> wlabels;
    canonical_form(kind, m, two_n, B, fmt, pb, cart_mats, wlabels);
    const int N = static_cast<int>(fmt.size());

    // group ambient matrix units by weight under the Cartan; solving the
    // form condition blockwise keeps the basis weight aligned
    std::map<std::pair<std::vector<std::string>, Par>, std::vector<std::pair<int, int>>> blocks;
    auto weight_key = [&](int a, int c) {
        std::vector<std::string> key;
        for (const auto& h : cart_mats) key.push_back((h.at(a, a) - h.at(c, c)).str());
        return key;
    };
    for (int a = 0; a < N; ++a)
        for (int c = 0; c < N; ++c) blocks[{weight_key(a, c), fmt[a] + fmt[c]}].emplace_back(a, c);

    MatBasis out;
    std::vector<bool> raising_flag;
    for (const auto& [key, cells] : blocks) {
        const Par px = key.second;
        const int nc = static_cast<int>(cells.size());
        ExactMatrix sys(N * N, nc);
        for (int t = 0; t < nc; ++t) {
            ExactMatrix x(N, N);
            x.at(cells[t].first, cells[t].second) = Scalar(1);
            ExactMatrix xst = supertranspose(x, fmt, px);
            ExactMatrix lhs = xst * B;
            ExactMatrix rhs = B * x;
            int s = (is_odd(px) && is_odd(pb)) ? -1 : 1;
            ExactMatrix cond = s < 0 ? lhs - rhs : lhs + rhs;
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) sys.at(i * N + j, t) = cond.at(i, j);
        }
        for (const Vec& k : kernel_basis(sys)) {
            ExactMatrix x(N, N);
            bool strictly_upper = true;
            for (int t = 0; t < nc; ++t) {
                if (k[t].is_zero()) continue;
                auto [a, c] = cells[t];
                x.at(a, c) = k[t];
                if (a >= c) strictly_upper = false;
            }
            out.mats.push_back(std::move(x));
            out.pars.push_back(px);
            out.labels.push_back("X" + std::to_string(out.mats.size()));
            raising_flag.push_back(strictly_upper);
        }
    }
    LieSuperAlgebra g = algebra_from_matrices(out.mats, out.pars, out.labels, fmt);
    {
        CoordSpan span(N * N);
        for (const auto& mtx : out.mats) span.add(flatten(mtx));
        for (const auto& h : cart_mats) {
            auto c = span.express(flatten(h));
            if (!c) throw BadParams("cartan escaped algebra span");
            g.cartan.push_back(*c);
        }
    }
    for (size_t i = 0; i < out.mats.size(); ++i) {
        if (raising_flag[i]) {
            Vec r(g.dim());
            r[i] = Scalar(1);
            g.raising.push_back(std::move(r));
        }
    }
    g.weight_labels = wlabels;
    assign_weights(g);
    return g;
}

LieSuperAlgebra build_osp_sy(int m, int two_n) { return build_form_algebra(FormKind::OspSy, m, two_n); }
LieSuperAlgebra build_osp_sk(int m, int two_n) { return build_form_algebra(FormKind::OspSk, m, two_n); }
LieSuperAlgebra build_pe_sy(int n) { return build_form_algebra(FormKind::PeSy, n, 0); }
LieSuperAlgebra build_pe_sk(int n) { return build_form_algebra(FormKind::PeSk, n, 0); }

LieSuperAlgebra build_spe(int n) {
    LieSuperAlgebra pe = build_pe_sy(n);
    const int N = 2 * n;
    std::vector<ExactMatrix> mats;
    std::vector<Par> pars;
    std::vector<std::string> labels;
    std::vector<int> traced;
    for (int i = 0; i < pe.dim(); ++i) {
        Scalar st = supertrace(pe.def_mats[i], pe.def_format);
        if (st.is_zero()) {
            mats.push_back(pe.def_mats[i]);
            pars.push_back(pe.space.par[i]);
            labels.push_back(pe.space.labels[i]);
        } else {
            traced.push_back(i);
        }
    }
    const size_t off_h = mats.size();
    for (size_t t = 0; t + 1 < traced.size(); ++t) {
        const ExactMatrix& a = pe.def_mats[traced[t]];
        const ExactMatrix& b = pe.def_mats[traced[t + 1]];
        Scalar sa = supertrace(a, pe.def_format);
        Scalar sb = supertrace(b, pe.def_format);
        ExactMatrix diff(N, N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) diff.at(i, j) = sb * a.at(i, j) - sa * b.at(i, j);
        mats.push_back(std::move(diff));
        pars.push_back(Par::Even);
        labels.push_back("H" + std::to_string(t + 1));
    }
    LieSuperAlgebra g = algebra_from_matrices(mats, pars, labels, pe.def_format);
    for (size_t t = 0; t + 1 < traced.size(); ++t) {
        Vec h(g.dim());
        h[off_h + t] = Scalar(1);
        g.cartan.push_back(std::move(h));
    }
    for (int i = 0; i < g.dim(); ++i) {
        bool upper = true;
        for (int r = 0; r < N && upper; ++r)
            for (int c = 0; c <= r && upper; ++c)
                if (!g.def_mats[i].at(r, c).is_zero()) upper = false;
        if (upper) {
            Vec rv(g.dim());
            rv[i] = Scalar(1);
            g.raising.push_back(std::move(rv));
        }
    }
    for (size_t i = 0; i < g.cartan.size(); ++i)
        g.weight_labels.push_back("h" + std::to_string(i + 1));
    assign_weights(g);
    return g;
}

LieSuperAlgebra build_central_extension(const LieSuperAlgebra& g, const std::string& zlabel) {
    if (g.def_mats.empty()) throw BadParams("central extension needs a matrix realization");
    const int N = static_cast<int>(g.def_format.size());
    std::vector<ExactMatrix> mats = g.def_mats;
    std::vector<Par> pars = g.space.par;
    std::vector<std::string> labels = g.space.labels;
    mats.push_back(ExactMatrix::identity(N));
    pars.push_back(Par::Even);
    labels.push_back(zlabel);
    LieSuperAlgebra c = algebra_from_matrices(mats, pars, labels, g.def_format);
    for (const Vec& h : g.cartan) {
        Vec hh = h;
        hh.resize(c.dim());
        c.cartan.push_back(std::move(hh));
    }
    Vec z(c.dim());
    z[c.dim() - 1] = Scalar(1);
    c.cartan.push_back(std::move(z));
    for (const Vec& r : g.raising) {
        Vec rr = r;
        rr.resize(c.dim());
        c.raising.push_back(std::move(rr));
    }
    c.weight_labels = g.weight_labels;
    c.weight_labels.push_back("z");
    assign_weights(c);
    return c;
}

LieSuperAlgebra build_tau_spe(int n) {
    LieSuperAlgebra spe = build_spe(n);
    const int N = 2 * n;
    std::vector<ExactMatrix> mats = spe.def_mats;
    std::vector<Par> pars = spe.space.par;
    std::vector<std::string> labels = spe.space.labels;
    ExactMatrix tz(N, N);
    for (int i = 0; i < n; ++i) tz.at(i, i) = Scalar(1 + n);   // tau + n z, upper block
    for (int i = n; i < N; ++i) tz.at(i, i) = Scalar(n - 1);   // lower block
    mats.push_back(std::move(tz));
    pars.push_back(Par::Even);
    labels.push_back("tz");
    LieSuperAlgebra g = algebra_from_matrices(mats, pars, labels, spe.def_format);
    for (const Vec& h : spe.cartan) {
        Vec hh = h;
        hh.resize(g.dim());
        g.cartan.push_back(std::move(hh));
    }
    Vec z(g.dim());
    z[g.dim() - 1] = Scalar(1);
    g.cartan.push_back(std::move(z));
    for (const Vec& r : spe.raising) {
        Vec rr = r;
        rr.resize(g.dim());
        g.raising.push_back(std::move(rr));
    }
    g.weight_labels = spe.weight_labels;
    g.weight_labels.push_back("tz");
    assign_weights(g);
    return g;
}

Scalar supertrace(const ExactMatrix& a, const std::vector<Par>& format) {
    if (a.rows() != a.cols() || a.rows() != static_cast<int>(format.size()))
        throw ShapeMismatch("supertrace needs a square matrix matching the format");
    Scalar s;
    for (int i = 0; i < a.rows(); ++i) s += is_odd(format[i]) ? -a.at(i, i) : a.at(i, i);
    return s;
}

Scalar queertrace(const ExactMatrix& a, int n) {
    if (a.rows() != 2 * n || a.cols() != 2 * n) throw ShapeMismatch("queertrace needs 2n x 2n");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (a.at(i, j) != a.at(n + i, n + j) || a.at(i, n + j) != a.at(n + i, j))
                throw ShapeMismatch("matrix is not in q(n)");
        }
    Scalar s;
    for (int i = 0; i < n; ++i) s += a.at(i, n + i);
    return s;
}

}  // namespace spencer
