#include "spencer/prolong.hpp"

#include <algorithm>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spencer {

namespace {

// Hom(g_{-1}, g_{i-1}) coordinates: X_{a,j} = coefficient of target basis a
// in X(e_j); flat index a * nv + j.
struct HomShape {
    int ntar, nv;
    int flat(int a, int j) const { return a * nv + j; }
};

/// apply an element of degree d >= 0 (coordinate vector) to e_j of g_{-1}
Vec apply_to(const GradedAlgebra& g, int d, const Vec& x, int j) {
    const int target = g.dim(d - 1);
    Vec r(target);
    const auto& tab = g.br.at({d, -1});
    for (size_t a = 0; a < x.size(); ++a) {
        if (x[a].is_zero()) continue;
        for (const auto& [k, v] : tab[a][j]) r[k] += x[a] * v;
    }
    return r;
}

std::string wkey(const Weight& w) {
    std::string s;
    for (const auto& c : w) {
        s += c.str();
        s += ';';
    }
    return s;
}

}  // namespace

std::vector<Vec> prolong_step(const GradedAlgebra& g, int i) {
    if (i < 1) throw BadParams("prolong_step needs i >= 1");
    const SuperSpace& V = g.comp.at(-1);
    const SuperSpace& T = g.comp.at(i - 1);  // target of the Hom
    const int nv = V.dim(), nt = T.dim();
    HomShape shape{nt, nv};
    if (nt == 0) return {};

    const bool weighted = !V.weights.empty() && !T.weights.empty();
    // group Hom coordinates (a, j) into (weight, parity) blocks
    std::map<std::pair<std::string, Par>, std::vector<std::pair<int, int>>> blocks;
    for (int a = 0; a < nt; ++a)
        for (int j = 0; j < nv; ++j) {
            Weight w;
            if (weighted) {
                w = T.weights[a];
                for (size_t t = 0; t < w.size(); ++t) w[t] -= V.weights[j][t];
            }
            blocks[{wkey(w), T.par[a] + V.par[j]}].emplace_back(a, j);
        }

    // precompute apply(e_a of degree i-1, e_l) in degree i-2 coordinates
    const int nlow = (i >= 2) ? g.dim(i - 2) : g.dim(-1);
    std::vector<std::vector<Vec>> tgt_apply(nt, std::vector<Vec>(nv));
    {
        const auto& tab = g.br.at({i - 1, -1});
        for (int a = 0; a < nt; ++a)
            for (int l = 0; l < nv; ++l) tgt_apply[a][l] = densify(tab[a][l], nlow);
    }

    std::vector<const std::vector<std::pair<int, int>>*> block_list;
    for (const auto& [k, cells] : blocks) block_list.push_back(&cells);
    std::vector<std::vector<Vec>> block_out(block_list.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int bi = 0; bi < static_cast<int>(block_list.size()); ++bi) {
        const auto& cells = *block_list[bi];
        const int nc = static_cast<int>(cells.size());
        // rows: one per (j <= l pair, target coordinate of degree i-2)
        std::vector<Vec> rows;
        for (int j = 0; j < nv; ++j) {
            for (int l = j; l < nv; ++l) {
                // condition: X(e_j)(e_l) - (-1)^{p_j p_l} X(e_l)(e_j) = 0
                int s = sign_pow(V.par[j], V.par[l]);
                std::vector<Vec> cols(nc);
                for (int t = 0; t < nc; ++t) {
                    auto [a, jj] = cells[t];
                    Vec contrib(nlow);
                    if (jj == j) vec_axpy(contrib, Scalar(1), tgt_apply[a][l]);
                    if (jj == l) vec_axpy(contrib, Scalar(-s), tgt_apply[a][j]);
                    cols[t] = std::move(contrib);
                }
                for (int b = 0; b < nlow; ++b) {
                    Vec row(nc);
                    bool any = false;
                    for (int t = 0; t < nc; ++t) {
                        if (!cols[t][b].is_zero()) {
                            row[t] = cols[t][b];
                            any = true;
                        }
                    }
                    if (any) rows.push_back(std::move(row));
                }
            }
        }
        ExactMatrix sys = ExactMatrix::from_rows(rows, nc);
        std::vector<Vec> kb = kernel_basis(sys);
        // expand block coordinates back to flat Hom coordinates
        std::vector<Vec> out;
        for (const Vec& k : kb) {
            Vec x(nt * nv);
            for (int t = 0; t < nc; ++t) {
                if (!k[t].is_zero()) x[shape.flat(cells[t].first, cells[t].second)] = k[t];
            }
            out.push_back(std::move(x));
        }
        block_out[bi] = std::move(out);
    }
    std::vector<Vec> result;
    for (auto& v : block_out)
        for (auto& x : v) result.push_back(std::move(x));
    return result;
}

int prolong_step_intersection_dim(const GradedAlgebra& g, int i) {
    // realize both spaces inside W = g_{-1} ox (g'_{-1})^{ox (i+1)} and
    // intersect: A = image of maps V -> g_i-as-multilinear, i.e. tensors of
    // elements of g_0 ox S^i with one more dual slot; concretely we take
    //   A = span of (full symmetrization over the i+1 dual slots applied to
    //       the Hom tensors of candidates from g_0 ox S^i(g'_{-1}))
    //   B = tensors supersymmetric in all i+1 dual slots built from
    //       g_{-1} ox S^{i+1}
    // and count dim(A cap B). Practical only for small dims; used in tests.
    const SuperSpace& V = g.comp.at(-1);
    const int nv = V.dim();
    const int n0 = g.dim(0);
    // multilinear value of a basis element x of g_0 on e_j: [x, e_j]
    auto act = [&](int x, int j) { return densify(g.br.at({0, -1})[x][j], nv); };

    // enumerate s-tuples (multisets are not enough: build full tensor coords)
    const int s = i;  // S^i side
    std::vector<std::vector<int>> tuples;
    {
        std::vector<int> cur(s + 1, 0);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == s + 1) {
                tuples.push_back(cur);
                return;
            }
            for (int j = 0; j < nv; ++j) {
                cur[pos] = j;
                rec(pos + 1);
            }
        };
        if (s >= 0) rec(0);
    }
    // coordinates of W: (value index v, tuple of i+1 argument indices)
    const long tup_count = static_cast<long>(tuples.size());
    const long wdim = nv * tup_count;
    auto widx = [&](int v, long t) { return v * tup_count + t; };

    // Both spaces are realized as subspaces of maps V^{ox(i+1)} -> V given
    // by their values on all tuples.
    // A: for x in g_0, monomial M in S^i(g'_{-1}): the map
    //    (v_0..v_i) -> sum_k <M | v_0..v^k..v_i> [x, v_k]
    // B: for u in V, monomial N in S^{i+1}: (v_0..v_i) -> <N | v_0..v_i> u.
    // Pairings use the supersymmetric monomial evaluation.
    SuperSpace Vd = dual(V);
    auto eval_sym = [&](const MIdx& mono, const std::vector<int>& args) -> Scalar {
        // <e'_{mono} | e_{args}> in S^k: sum over bijections with Koszul signs
        const int k = static_cast<int>(mono.size());
        std::vector<int> perm(k);
        for (int t = 0; t < k; ++t) perm[t] = t;
        Scalar total(0);
        std::sort(perm.begin(), perm.end());
        do {
            bool match = true;
            for (int t = 0; t < k && match; ++t) match = (mono[t] == args[perm[t]]);
            if (!match) continue;
            // sign of rearranging the arguments so that position perm[t]
            // pairs with slot t, in the supersymmetric convention
            std::vector<Par> pars(k);
            for (int t = 0; t < k; ++t) pars[t] = V.par[args[t]];
            int sgn = koszul_sign(pars, perm);
            total += Scalar(sgn);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return total;
    };

    std::vector<Vec> a_span, b_span;
    for (int x = 0; x < n0; ++x) {
        for (const MIdx& mono : sym_basis(Vd, s)) {
            Vec w(wdim);
            bool nz = false;
            for (long t = 0; t < tup_count; ++t) {
                const auto& args = tuples[t];
                for (int k = 0; k <= s; ++k) {
                    std::vector<int> rest;
                    for (int u = 0; u <= s; ++u)
                        if (u != k) rest.push_back(args[u]);
                    Scalar pair = eval_sym(mono, rest);
                    if (pair.is_zero()) continue;
                    Vec img = act(x, args[k]);
                    for (int vv = 0; vv < nv; ++vv) {
                        if (!img[vv].is_zero()) {
                            w[widx(vv, t)] += pair * img[vv];
                            nz = true;
                        }
                    }
                }
            }
            if (nz) a_span.push_back(std::move(w));
        }
    }
    for (int u = 0; u < nv; ++u) {
        for (const MIdx& mono : sym_basis(Vd, s + 1)) {
            Vec w(wdim);
            bool nz = false;
            for (long t = 0; t < tup_count; ++t) {
                Scalar pair = eval_sym(mono, tuples[t]);
                if (!pair.is_zero()) {
                    w[widx(u, t)] = pair;
                    nz = true;
                }
            }
            if (nz) b_span.push_back(std::move(w));
        }
    }
    std::vector<Vec> cap = intersect(a_span, b_span, static_cast<int>(wdim));
    return static_cast<int>(cap.size());
}

GradedAlgebra cartan_prolong(const LieSuperAlgebra& g0, const Module& g_minus1, int max_degree) {
    if (max_degree < 1) throw BadParams("max_degree must be >= 1");
    GradedAlgebra g;
    g.comp[-1] = g_minus1.space;
    g.comp[0] = g0.space;
    g.cartan0 = g0.cartan;
    g.raising0 = g0.raising;
    g.weight_labels = g0.weight_labels;

    const int nv = g_minus1.space.dim();
    const int n0 = g0.dim();
    // base bracket tables
    {
        std::vector<std::vector<SVec>> t(nv, std::vector<SVec>(nv));
        g.br[{-1, -1}] = std::move(t);
    }
    {
        std::vector<std::vector<SVec>> t(n0, std::vector<SVec>(nv));
        for (int a = 0; a < n0; ++a)
            for (int j = 0; j < nv; ++j) {
                Vec col(nv);
                for (int r = 0; r < nv; ++r) col[r] = g_minus1.act[a].at(r, j);
                t[a][j] = sparsify(col);
            }
        g.br[{0, -1}] = std::move(t);
    }
    {
        std::vector<std::vector<SVec>> t(n0, std::vector<SVec>(n0));
        for (int a = 0; a < n0; ++a)
            for (int b = 0; b < n0; ++b) t[a][b] = g0.sc[a][b];
        g.br[{0, 0}] = std::move(t);
    }

    // Hom data per positive degree: hom[i][idx] = flat Hom coordinates
    std::map<int, std::vector<Vec>> hom;
    std::map<int, CoordSpan> hom_span;

    g.cutoff = 0;
    for (int i = 1; i <= max_degree; ++i) {
        std::vector<Vec> basis = prolong_step(g, i);
        const int nt = g.dim(i - 1);
        SuperSpace sp;
        const SuperSpace& T = g.comp.at(i - 1);
        const SuperSpace& V = g.comp.at(-1);
        const bool weighted = !V.weights.empty() && !T.weights.empty();
        for (size_t idx = 0; idx < basis.size(); ++idx) {
            Par p = Par::Even;
            Weight w;
            bool found = false;
            for (int a = 0; a < nt && !found; ++a)
                for (int j = 0; j < nv && !found; ++j) {
                    if (basis[idx][a * nv + j].is_zero()) continue;
                    p = T.par[a] + V.par[j];
                    if (weighted) {
                        w = T.weights[a];
                        for (size_t t = 0; t < w.size(); ++t) w[t] -= V.weights[j][t];
                    }
                    found = true;
                }
            sp.push("g" + std::to_string(i) + "_" + std::to_string(idx + 1), p, std::move(w));
        }
        g.comp[i] = std::move(sp);
        // bracket with g_{-1}: the Hom data itself
        {
            std::vector<std::vector<SVec>> t(basis.size(), std::vector<SVec>(nv));
            for (size_t idx = 0; idx < basis.size(); ++idx)
                for (int j = 0; j < nv; ++j) {
                    Vec val(nt);
                    for (int a = 0; a < nt; ++a) val[a] = basis[idx][a * nv + j];
                    t[idx][j] = sparsify(val);
                }
            g.br[{i, -1}] = std::move(t);
        }
        hom_span.emplace(i, CoordSpan(nt * nv));
        for (const Vec& x : basis) hom_span.at(i).add(x);
        hom[i] = std::move(basis);
        g.cutoff = i;
        if (g.dim(i) == 0) {
            g.stabilized = true;
            break;
        }
    }

    // remaining brackets: [g_0, g_i], then [g_i, g_j] by increasing total
    auto express_in = [&](int d, const Vec& homvec) -> Vec {
        auto c = hom_span.at(d).express(homvec);
        if (!c) throw BadParams("prolong bracket escaped component " + std::to_string(d));
        return *c;
    };
    auto hom_of = [&](int d, int idx, int j) -> Vec {
        // value of basis element idx of degree d on e_j
        return densify(g.br.at({d, -1})[idx][j], g.dim(d - 1));
    };
    for (int i = 1; i <= g.cutoff; ++i) {
        if (g.dim(i) == 0) continue;
        const int ni = g.dim(i);
        std::vector<std::vector<SVec>> t(n0, std::vector<SVec>(ni));
        for (int a = 0; a < n0; ++a) {
            Par pa = g0.space.par[a];
            for (int idx = 0; idx < ni; ++idx) {
                Par px = g.comp.at(i).par[idx];
                // (x.X)(e_j) = [x, X(e_j)] - (-1)^{p(x)p(X)} X([x, e_j])
                Vec homvec(g.dim(i - 1) * nv);
                for (int j = 0; j < nv; ++j) {
                    Vec xj = hom_of(i, idx, j);
                    Vec t1 = g.bracket(0, densify(SVec{{a, Scalar(1)}}, n0), i - 1, xj);
                    // X([x,e_j]) = sum_k c_k X(e_k)
                    Vec xe = densify(g.br.at({0, -1})[a][j], nv);
                    Vec t2(g.dim(i - 1));
                    for (int k = 0; k < nv; ++k) {
                        if (!xe[k].is_zero()) vec_axpy(t2, xe[k], hom_of(i, idx, k));
                    }
                    int s = sign_pow(pa, px);
                    for (int b = 0; b < g.dim(i - 1); ++b) {
                        Scalar v = t1[b] - (s < 0 ? -t2[b] : t2[b]);
                        if (!v.is_zero()) homvec[b * nv + j] = v;
                    }
                }
                t[a][idx] = sparsify(express_in(i, homvec));
            }
        }
        g.br[{0, i}] = std::move(t);
    }
    for (int total = 2; total <= g.cutoff; ++total) {
        for (int i = 1; i < total; ++i) {
            int j = total - i;
            if (j < 1) continue;
            if (g.dim(i) == 0 || g.dim(j) == 0 || g.dim(total) == 0) {
                g.br[{i, j}] = std::vector<std::vector<SVec>>(
                    g.dim(i), std::vector<SVec>(g.dim(j)));
                continue;
            }
            g.symmetrize_tables();
            std::vector<std::vector<SVec>> t(g.dim(i), std::vector<SVec>(g.dim(j)));
            for (int xi = 0; xi < g.dim(i); ++xi) {
                Par px = g.comp.at(i).par[xi];
                for (int yj = 0; yj < g.dim(j); ++yj) {
                    Par py = g.comp.at(j).par[yj];
                    // [X,Y](v) = [X, Y(v)] - (-1)^{p(X)p(Y)} [Y, X(v)]
                    Vec homvec(g.dim(total - 1) * nv);
                    Vec ex(g.dim(i));
                    ex[xi] = Scalar(1);
                    Vec ey(g.dim(j));
                    ey[yj] = Scalar(1);
                    for (int v = 0; v < nv; ++v) {
                        Vec yv = hom_of(j, yj, v);
                        Vec t1 = g.bracket(i, ex, j - 1, yv);
                        Vec xv = hom_of(i, xi, v);
                        Vec t2 = g.bracket(j, ey, i - 1, xv);
                        int s = sign_pow(px, py);
                        for (int b = 0; b < g.dim(total - 1); ++b) {
                            Scalar val = t1[b] - (s < 0 ? -t2[b] : t2[b]);
                            if (!val.is_zero()) homvec[b * nv + v] = val;
                        }
                    }
                    t[xi][yj] = sparsify(express_in(total, homvec));
                }
            }
            g.br[{i, j}] = std::move(t);
        }
    }
    g.symmetrize_tables();
    return g;
}

}  // namespace spencer
