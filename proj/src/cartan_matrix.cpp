#include "spencer/cartan_matrix.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace spencer {

namespace {

using Content = std::vector<int>;

int height(const Content& c) {
    int h = 0;
    for (int x : c) h += x;
    return h;
}

}  // namespace

struct CartanAlgebra::Impl {
    std::vector<std::vector<Scalar>> cm;
    std::vector<Par> gpar;
    int n;

    // interned bracket trees over generator indices (side-agnostic)
    struct Tree {
        int gen;  // >= 0: leaf; -1: pair
        int l, r;
        Par par;
        Content content;
    };
    std::vector<Tree> pool;
    std::map<int, int> leaf_id;
    std::map<std::pair<int, int>, int> pair_id;

    int leaf(int g) {
        auto it = leaf_id.find(g);
        if (it != leaf_id.end()) return it->second;
        Content c(n, 0);
        c[g] = 1;
        pool.push_back(Tree{g, -1, -1, gpar[g], std::move(c)});
        leaf_id[g] = static_cast<int>(pool.size()) - 1;
        return leaf_id[g];
    }
    int pair(int a, int b) {
        auto it = pair_id.find({a, b});
        if (it != pair_id.end()) return it->second;
        Content c = pool[a].content;
        for (int i = 0; i < n; ++i) c[i] += pool[b].content[i];
        pool.push_back(Tree{-1, a, b, pool[a].par + pool[b].par, std::move(c)});
        pair_id[{a, b}] = static_cast<int>(pool.size()) - 1;
        return pair_id[{a, b}];
    }

    using FElem = std::map<int, Scalar>;  // tree id -> coefficient

    struct Mixed {
        Vec h;                      // Cartan coordinates (length n)
        std::map<Content, FElem> f, e;
        Mixed() = default;
        explicit Mixed(int n_) : h(n_) {}
        std::map<Content, FElem>& pick(int side) { return side == 0 ? f : e; }
    };

    static void felem_add(FElem& a, int t, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = a.emplace(t, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) a.erase(it);
        }
    }
    static void felem_axpy(FElem& a, const Scalar& c, const FElem& b) {
        for (const auto& [t, v] : b) felem_add(a, t, c * v);
    }
    void mixed_axpy(Mixed& a, const Scalar& c, const Mixed& b) const {
        if (c.is_zero()) return;
        for (int i = 0; i < n; ++i) a.h[i] += c * b.h[i];
        for (const auto& [ct, fe] : b.f) felem_axpy(a.f[ct], c, fe);
        for (const auto& [ct, fe] : b.e) felem_axpy(a.e[ct], c, fe);
    }

    // per-side component data at a root content
    struct Comp {
        std::vector<FElem> basis;
        std::unique_ptr<CoordSpan> span;
        int psi_dim = 0;
    };
    std::map<Content, Comp> comp[2];  // [0] = negative (f) side, [1] = positive (e)

    bool is_root_content(int side, const Content& c) const {
        auto it = comp[side].find(c);
        return it != comp[side].end() && !it->second.basis.empty();
    }

    // eigenvalue of ad(h_i) on the given content, on the negative side
    Scalar neg_weight(int i, const Content& c) const {
        Scalar s;
        for (int j = 0; j < n; ++j) {
            if (c[j]) s += Scalar(c[j]) * cm[i][j];
        }
        return -s;
    }

    // ---- generator application: [x^{op}_i, tree of the other side] ------
    // opposite-side generator lowers the content by alpha_i; the result is
    // a Mixed with only h (height-1 case) and same-side parts.
    std::map<std::pair<int, int>, Mixed> gen_apply_memo[2];  // key (i, tree)

    /// [x^{other}_i, t] for t a tree of side `side`
    Mixed gen_apply(int side, int i, int t) {
        auto it = gen_apply_memo[side].find({i, t});
        if (it != gen_apply_memo[side].end()) return it->second;
        const Tree tr = pool[t];  // copy: pool reallocates during recursion
        Mixed out(n);
        if (tr.gen >= 0) {
            if (tr.gen == i) {
                // [e_i, f_i] = h_i; [f_i, e_i] = -(-1)^{p_i p_i}[e_i, f_i]
                Scalar c(1);
                if (side == 1) {
                    c = is_odd(gpar[i]) ? Scalar(1) : Scalar(-1);
                }
                out.h[i] = c;
            }
        } else {
            // [g, [u,v]] = [[g,u],v] + (-1)^{p(g)p(u)} [u,[g,v]]
            Mixed gu = gen_apply(side, i, tr.l);
            Mixed gv = gen_apply(side, i, tr.r);
            Mixed t1 = bracket_mixed_tree(gu, side, tr.r);
            Mixed t2 = bracket_tree_mixed(side, tr.l, gv);
            int s = sign_pow(gpar[i], pool[tr.l].par);
            mixed_axpy(out, Scalar(1), t1);
            mixed_axpy(out, Scalar(s), t2);
        }
        gen_apply_memo[side][{i, t}] = out;
        return out;
    }

    /// [m, t] for m Mixed (h + same-side parts only) and t a tree of side s
    Mixed bracket_mixed_tree(const Mixed& m, int side, int t) {
        Mixed out(n);
        const Content tc = pool[t].content;  // copy: pool may grow below
        // h part: [h_i, t] = (side eigenvalue) * t
        for (int i = 0; i < n; ++i) {
            if (m.h[i].is_zero()) continue;
            Scalar w = neg_weight(i, tc);
            if (side == 1) w = -w;
            felem_add(out.pick(side)[tc], t, m.h[i] * w);
        }
        // same-side parts: plain tree brackets
        const auto& parts = (side == 0) ? m.f : m.e;
        for (const auto& [ct, fe] : parts) {
            for (const auto& [u, cu] : fe) {
                int nt = pair(u, t);
                felem_add(out.pick(side)[pool[nt].content], nt, cu);
            }
        }
        // opposite-side parts of m would need the full recursion; they do
        // not arise in gen_apply (contents stay on one side of 0)
        const auto& opp = (side == 0) ? m.e : m.f;
        if (!opp.empty()) throw std::logic_error("unexpected mixed bracket");
        return out;
    }

    Mixed bracket_tree_mixed(int side, int t, const Mixed& m) {
        Mixed out(n);
        const Content tc = pool[t].content;  // copy: pool may grow below
        // [t, h_i] = -[h_i, t] (h is even, no sign)
        for (int i = 0; i < n; ++i) {
            if (m.h[i].is_zero()) continue;
            Scalar w = neg_weight(i, tc);
            if (side == 1) w = -w;
            felem_add(out.pick(side)[tc], t, -(m.h[i] * w));
        }
        const auto& parts = (side == 0) ? m.f : m.e;
        for (const auto& [ct, fe] : parts) {
            for (const auto& [u, cu] : fe) {
                int nt = pair(t, u);
                felem_add(out.pick(side)[pool[nt].content], nt, cu);
            }
        }
        const auto& opp = (side == 0) ? m.e : m.f;
        if (!opp.empty()) throw std::logic_error("unexpected mixed bracket");
        return out;
    }

    // ---- reduction to the chosen basis --------------------------------

    std::map<int, Vec> reduce_tree_memo[2];  // tree -> coords in comp basis

    /// psi coordinates: images under all opposite generators, recursively
    /// reduced; injective modulo the radical.
    Vec psi(int side, const Content& c, const FElem& x) {
        Vec out;
        for (int i = 0; i < n; ++i) {
            if (c[i] == 0) continue;
            Content low = c;
            low[i] -= 1;
            Mixed img(n);
            for (const auto& [t, cv] : x) {
                Mixed gi = gen_apply(side, i, t);
                mixed_axpy(img, cv, gi);
            }
            if (height(low) == 0) {
                for (int j = 0; j < n; ++j) out.push_back(img.h[j]);
            } else {
                const auto& parts = (side == 0) ? img.f : img.e;
                Vec coords(comp_dim(side, low));
                auto it = parts.find(low);
                if (it != parts.end()) {
                    Vec r = reduce(side, low, it->second);
                    for (size_t k = 0; k < r.size(); ++k) coords[k] = r[k];
                }
                for (const auto& s : coords) out.push_back(s);
            }
        }
        return out;
    }

    int comp_dim(int side, const Content& c) {
        auto it = comp[side].find(c);
        return it == comp[side].end() ? 0 : static_cast<int>(it->second.basis.size());
    }

    Vec reduce(int side, const Content& c, const FElem& x) {
        const int d = comp_dim(side, c);
        Vec out(d);
        if (d == 0 || x.empty()) return out;
        // reduce tree by tree (memoized)
        for (const auto& [t, cv] : x) {
            auto it = reduce_tree_memo[side].find(t);
            if (it == reduce_tree_memo[side].end()) {
                FElem single;
                single[t] = Scalar(1);
                Vec ps = psi(side, c, single);
                auto coords = comp[side].at(c).span->express(ps);
                if (!coords) throw std::logic_error("psi image escaped the component span");
                reduce_tree_memo[side][t] = *coords;
                it = reduce_tree_memo[side].find(t);
            }
            for (int k = 0; k < d; ++k) out[k] += cv * it->second[k];
        }
        return out;
    }

    /// substitute the basis combination for reduced coordinates
    FElem from_coords(int side, const Content& c, const Vec& coords) {
        FElem out;
        if (coords.empty()) return out;
        const auto& basis = comp[side].at(c).basis;
        for (size_t k = 0; k < coords.size(); ++k) felem_axpy(out, coords[k], basis[k]);
        return out;
    }

    /// canonical form: every f/e part replaced by its reduced basis combo
    void normalize(Mixed& m) {
        std::map<Content, FElem> nf, ne;
        for (auto& [ct, fe] : m.f) {
            Vec r = reduce(0, ct, fe);
            FElem rep = from_coords(0, ct, r);
            if (!rep.empty()) nf[ct] = std::move(rep);
        }
        for (auto& [ct, fe] : m.e) {
            Vec r = reduce(1, ct, fe);
            FElem rep = from_coords(1, ct, r);
            if (!rep.empty()) ne[ct] = std::move(rep);
        }
        m.f = std::move(nf);
        m.e = std::move(ne);
    }

    // ---- mixed-side tree bracket [e-tree, f-tree] ----------------------

    std::map<std::pair<int, int>, Mixed> ef_memo;  // (e-tree, f-tree)

    Mixed bracket_ef(int s, int t) {
        auto it = ef_memo.find({s, t});
        if (it != ef_memo.end()) return it->second;
        Mixed out(n);
        const Tree st = pool[s];  // copy: pool reallocates during recursion
        if (st.gen >= 0) {
            out = gen_apply(0, st.gen, t);  // [e_i, f-tree]
        } else {
            // [[s1,s2], t] = [s1, [s2, t]] - (-1)^{p(s1)p(s2)} [s2, [s1, t]]
            Mixed m1 = bracket_ef(st.r, t);
            Mixed m2 = bracket_ef(st.l, t);
            Mixed t1 = bracket_etree_mixed(st.l, m1);
            Mixed t2 = bracket_etree_mixed(st.r, m2);
            int sg = sign_pow(pool[st.l].par, pool[st.r].par);
            mixed_axpy(out, Scalar(1), t1);
            mixed_axpy(out, Scalar(-sg), t2);
        }
        normalize(out);
        ef_memo[{s, t}] = out;
        return out;
    }

    /// [e-tree s, m] for a general normalized Mixed m
    Mixed bracket_etree_mixed(int s, const Mixed& m) {
        Mixed out(n);
        const Content sc_cont = pool[s].content;  // copy: pool may grow below
        // h parts: [s, h_i] = -[h_i, s] = -(+w) s
        for (int i = 0; i < n; ++i) {
            if (m.h[i].is_zero()) continue;
            Scalar w = -neg_weight(i, sc_cont);  // e-side eigenvalue
            felem_add(out.e[sc_cont], s, -(m.h[i] * w));
        }
        // e parts: tree brackets
        for (const auto& [ct, fe] : m.e) {
            for (const auto& [u, cu] : fe) {
                int nt = pair(s, u);
                felem_add(out.e[pool[nt].content], nt, cu);
            }
        }
        // f parts: recurse
        for (const auto& [ct, fe] : m.f) {
            for (const auto& [u, cu] : fe) {
                Mixed b = bracket_ef(s, u);
                mixed_axpy(out, cu, b);
            }
        }
        normalize(out);
        return out;
    }

    /// full bracket of normalized Mixed elements
    Mixed bracket(const Mixed& x, const Mixed& y) {
        Mixed out(n);
        // [h_i, y]
        for (int i = 0; i < n; ++i) {
            if (x.h[i].is_zero()) continue;
            for (const auto& [ct, fe] : y.f) {
                Scalar w = neg_weight(i, ct);
                felem_axpy(out.f[ct], x.h[i] * w, fe);
            }
            for (const auto& [ct, fe] : y.e) {
                Scalar w = -neg_weight(i, ct);
                felem_axpy(out.e[ct], x.h[i] * w, fe);
            }
        }
        // [x.f/e, y.h] = -[y.h, x.*]
        for (int i = 0; i < n; ++i) {
            if (y.h[i].is_zero()) continue;
            for (const auto& [ct, fe] : x.f) {
                Scalar w = neg_weight(i, ct);
                felem_axpy(out.f[ct], -(y.h[i] * w), fe);
            }
            for (const auto& [ct, fe] : x.e) {
                Scalar w = -neg_weight(i, ct);
                felem_axpy(out.e[ct], -(y.h[i] * w), fe);
            }
        }
        // f x f
        for (const auto& [c1, f1] : x.f)
            for (const auto& [t1, v1] : f1)
                for (const auto& [c2, f2] : y.f)
                    for (const auto& [t2, v2] : f2) {
                        int nt = pair(t1, t2);
                        felem_add(out.f[pool[nt].content], nt, v1 * v2);
                    }
        // e x e
        for (const auto& [c1, f1] : x.e)
            for (const auto& [t1, v1] : f1)
                for (const auto& [c2, f2] : y.e)
                    for (const auto& [t2, v2] : f2) {
                        int nt = pair(t1, t2);
                        felem_add(out.e[pool[nt].content], nt, v1 * v2);
                    }
        // e x f and f x e
        for (const auto& [c1, f1] : x.e)
            for (const auto& [t1, v1] : f1)
                for (const auto& [c2, f2] : y.f)
                    for (const auto& [t2, v2] : f2) {
                        Mixed b = bracket_ef(t1, t2);
                        mixed_axpy(out, v1 * v2, b);
                    }
        for (const auto& [c1, f1] : x.f)
            for (const auto& [t1, v1] : f1)
                for (const auto& [c2, f2] : y.e)
                    for (const auto& [t2, v2] : f2) {
                        Mixed b = bracket_ef(t2, t1);
                        int sg = -sign_pow(pool[t1].par, pool[t2].par);
                        mixed_axpy(out, Scalar(sg) * v1 * v2, b);
                    }
        normalize(out);
        return out;
    }

    // ---- generation -----------------------------------------------------

    void generate(SDim expected) {
        // height 1
        std::vector<Content> prev;
        for (int i = 0; i < n; ++i) {
            Content c(n, 0);
            c[i] = 1;
            for (int side = 0; side < 2; ++side) {
                Comp cp;
                cp.psi_dim = n;
                cp.span = std::make_unique<CoordSpan>(n);
                FElem f;
                f[leaf(i)] = Scalar(1);
                Vec ps = psi(side, c, f);
                if (!cp.span->add(ps)) throw GenerationDiverged("degenerate Cartan matrix row");
                cp.basis.push_back(std::move(f));
                comp[side][c] = std::move(cp);
            }
            prev.push_back(std::move(c));
        }
        long total = 2L * n + n;
        for (int h = 2; !prev.empty(); ++h) {
            std::vector<Content> candidates;
            for (const Content& c : prev) {
                for (int i = 0; i < n; ++i) {
                    Content cc = c;
                    cc[i] += 1;
                    if (std::find(candidates.begin(), candidates.end(), cc) == candidates.end())
                        candidates.push_back(cc);
                }
            }
            std::sort(candidates.begin(), candidates.end());
            std::vector<Content> found;
            for (const Content& c : candidates) {
                // spanning set: right-normed trees over multiset permutations
                std::vector<int> letters;
                for (int i = 0; i < n; ++i) letters.insert(letters.end(), c[i], i);
                std::sort(letters.begin(), letters.end());
                for (int side = 0; side < 2; ++side) {
                    int psi_dim = 0;
                    for (int i = 0; i < n; ++i) {
                        if (c[i] == 0) continue;
                        Content low = c;
                        low[i] -= 1;
                        psi_dim += (height(low) == 0) ? n : comp_dim(side, low);
                    }
                    Comp cp;
                    cp.psi_dim = psi_dim;
                    cp.span = std::make_unique<CoordSpan>(psi_dim);
                    comp[side][c] = std::move(cp);
                    std::vector<int> perm = letters;
                    do {
                        int t = leaf(perm.back());
                        for (int k = static_cast<int>(perm.size()) - 2; k >= 0; --k)
                            t = pair(leaf(perm[k]), t);
                        FElem f;
                        f[t] = Scalar(1);
                        Vec ps = psi(side, c, f);
                        Comp& target = comp[side].at(c);
                        if (target.span->add(ps)) target.basis.push_back(std::move(f));
                    } while (std::next_permutation(perm.begin(), perm.end()));
                }
                int d0 = comp_dim(0, c), d1 = comp_dim(1, c);
                if (d0 != d1)
                    throw GenerationDiverged("asymmetric root multiplicities at a content");
                if (d0 > 0) {
                    found.push_back(c);
                    total += 2L * d0;
                    if (total > expected.total())
                        throw GenerationDiverged("dimension exceeded the expected value");
                } else {
                    comp[0].erase(c);
                    comp[1].erase(c);
                }
            }
            prev = std::move(found);
        }
        if (total != expected.total())
            throw GenerationDiverged("generated dimension " + std::to_string(total) +
                                     " != expected " + std::to_string(expected.total()));
    }

    // sorted root contents (height, then lex)
    std::vector<Content> sorted_roots() const {
        std::vector<Content> roots;
        for (const auto& [c, cp] : comp[0])
            if (!cp.basis.empty()) roots.push_back(c);
        std::sort(roots.begin(), roots.end(), [](const Content& a, const Content& b) {
            if (height(a) != height(b)) return height(a) < height(b);
            return a < b;
        });
        return roots;
    }
};

namespace {

Par content_parity(const std::vector<Par>& gpar, const std::vector<int>& c) {
    Par p = Par::Even;
    for (size_t i = 0; i < c.size(); ++i)
        if ((c[i] & 1) && is_odd(gpar[i])) p = p + Par::Odd;
    return p;
}

}  // namespace

CartanAlgebra::CartanAlgebra(std::vector<std::vector<Scalar>> cm, std::vector<Par> gen_par,
                             SDim expected) {
    impl_ = std::make_shared<Impl>();
    impl_->cm = std::move(cm);
    impl_->gpar = std::move(gen_par);
    impl_->n = static_cast<int>(impl_->gpar.size());
    impl_->generate(expected);

    // assemble: negative side (height ascending), cartan, positive side
    Impl& im = *impl_;
    const int n = im.n;
    auto roots = im.sorted_roots();
    struct Entry {
        int side;  // 0 f, 2 h, 1 e
        Content c;
        int idx;
    };
    std::vector<Entry> order;
    for (const auto& c : roots)
        for (int k = 0; k < im.comp_dim(0, c); ++k) order.push_back({0, c, k});
    for (int i = 0; i < n; ++i) order.push_back({2, Content(n, 0), i});
    for (const auto& c : roots)
        for (int k = 0; k < im.comp_dim(1, c); ++k) order.push_back({1, c, k});
    const int dim = static_cast<int>(order.size());

    auto entry_mixed = [&](const Entry& en) {
        Impl::Mixed m(n);
        if (en.side == 2) {
            m.h[en.idx] = Scalar(1);
        } else if (en.side == 0) {
            m.f[en.c] = im.comp[0].at(en.c).basis[en.idx];
        } else {
            m.e[en.c] = im.comp[1].at(en.c).basis[en.idx];
        }
        return m;
    };
    // flat coordinates of a normalized Mixed
    std::map<std::pair<int, std::string>, int> offset;  // (side, content key) -> base index
    auto ckey = [](const Content& c) {
        std::string s;
        for (int x : c) s += std::to_string(x) + ",";
        return s;
    };
    {
        int pos = 0;
        for (const auto& c : roots) {
            offset[{0, ckey(c)}] = pos;
            pos += im.comp_dim(0, c);
        }
        offset[{2, ""}] = pos;
        pos += n;
        for (const auto& c : roots) {
            offset[{1, ckey(c)}] = pos;
            pos += im.comp_dim(1, c);
        }
    }
    auto flatten = [&](const Impl::Mixed& m) {
        Vec v(dim);
        for (int i = 0; i < n; ++i) v[offset.at({2, std::string("")}) + i] = m.h[i];
        for (const auto& [c, fe] : m.f) {
            Vec r = im.reduce(0, c, fe);
            int base = offset.at({0, ckey(c)});
            for (size_t k = 0; k < r.size(); ++k) v[base + k] = r[k];
        }
        for (const auto& [c, fe] : m.e) {
            Vec r = im.reduce(1, c, fe);
            int base = offset.at({1, ckey(c)});
            for (size_t k = 0; k < r.size(); ++k) v[base + k] = r[k];
        }
        return v;
    };

    LieSuperAlgebra g;
    for (const auto& en : order) {
        if (en.side == 2) {
            g.space.push("H" + std::to_string(en.idx + 1), Par::Even);
        } else {
            std::string nm = (en.side == 0 ? "F[" : "E[") + ckey(en.c) + "]" +
                             std::to_string(en.idx + 1);
            g.space.push(std::move(nm), content_parity(im.gpar, en.c));
        }
    }
    g.sc.assign(dim, std::vector<SVec>(dim));
    std::vector<Impl::Mixed> mixed;
    for (const auto& en : order) mixed.push_back(entry_mixed(en));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            Impl::Mixed b = im.bracket(mixed[i], mixed[j]);
            g.sc[i][j] = sparsify(flatten(b));
        }
    }
    for (int i = 0; i < n; ++i) {
        Vec h(dim);
        h[offset.at({2, std::string("")}) + i] = Scalar(1);
        g.cartan.push_back(std::move(h));
        g.weight_labels.push_back("H" + std::to_string(i + 1));
    }
    for (const auto& c : roots) {
        int base = offset.at({1, ckey(c)});
        for (int k = 0; k < im.comp_dim(1, c); ++k) {
            Vec r(dim);
            r[base + k] = Scalar(1);
            g.raising.push_back(std::move(r));
        }
    }
    // weights
    g.space.weights.assign(dim, Weight());
    for (int t = 0; t < dim; ++t) {
        Weight w;
        const Entry& en = order[t];
        for (int i = 0; i < n; ++i) {
            if (en.side == 2)
                w.push_back(Scalar(0));
            else if (en.side == 0)
                w.push_back(im.neg_weight(i, en.c));
            else
                w.push_back(-im.neg_weight(i, en.c));
        }
        g.space.weights[t] = std::move(w);
    }
    alg_ = std::move(g);

    // sanity: verify the declared superdimension split
    SDim got = alg_.sdim();
    if (got.total() != expected.total() || got.even != expected.even)
        throw GenerationDiverged("superdimension " + got.str() + " != expected " + expected.str());
}

int CartanAlgebra::rank() const { return impl_->n; }

int CartanAlgebra::h_index(int i) const {
    Impl& im = *impl_;
    auto roots = im.sorted_roots();
    int pos = 0;
    for (const auto& c : roots) pos += im.comp_dim(0, c);
    return pos + (i - 1);
}

int CartanAlgebra::gen_index(int side, int i) const {
    BWord w = BWord::gen(i);
    Vec v = word_element(side, w);
    for (size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) return static_cast<int>(k);
    throw BadParams("generator vanished");
}

Vec CartanAlgebra::word_element(int side, const BWord& w) const {
    Impl& im = *impl_;
    std::function<int(const BWord&)> build = [&](const BWord& bw) -> int {
        if (bw.leaf > 0) return im.leaf(bw.leaf - 1);
        if (bw.parts.size() != 2) throw BadParams("bracket word must be binary");
        int l = build(bw.parts[0]);
        int r = build(bw.parts[1]);
        return im.pair(l, r);
    };
    int t = build(w);
    const Content& c = im.pool[t].content;
    const int s = (side < 0) ? 0 : 1;
    const int dim = alg_.dim();
    Vec out(dim);
    if (!im.is_root_content(s, c)) return out;
    Impl::FElem f;
    f[t] = Scalar(1);
    Vec r = im.reduce(s, c, f);
    // locate the offset of this content in the assembled order
    auto roots = im.sorted_roots();
    int pos = 0;
    if (s == 0) {
        for (const auto& cc : roots) {
            if (cc == c) break;
            pos += im.comp_dim(0, cc);
        }
    } else {
        for (const auto& cc : roots) pos += im.comp_dim(0, cc);
        pos += im.n;
        for (const auto& cc : roots) {
            if (cc == c) break;
            pos += im.comp_dim(1, cc);
        }
    }
    for (size_t k = 0; k < r.size(); ++k) out[pos + static_cast<int>(k)] = r[k];
    return out;
}

}  // namespace spencer
