#include "spencer/superspace.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace spencer {

int koszul_sign(const std::vector<Par>& parities, const std::vector<int>& perm) {
    // count inversions of odd pairs; bubble-style is fine at these sizes
    int sign = 1;
    const int n = static_cast<int>(perm.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (perm[i] > perm[j] && is_odd(parities[perm[i]]) && is_odd(parities[perm[j]]))
                sign = -sign;
        }
    }
    return sign;
}

std::string weight_str(const Weight& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += w[i].str();
    }
    return s + ")";
}

SDim SuperSpace::sdim() const {
    SDim d;
    for (Par p : par) (is_odd(p) ? d.odd : d.even)++;
    return d;
}

void SuperSpace::push(std::string label, Par p, Weight w) {
    labels.push_back(std::move(label));
    par.push_back(p);
    if (!w.empty() || !weights.empty()) {
        weights.resize(par.size());
        weights.back() = std::move(w);
    }
}

SuperSpace dual(const SuperSpace& v) {
    SuperSpace d;
    d.par = v.par;
    for (const auto& l : v.labels) d.labels.push_back(l + "'");
    for (const auto& w : v.weights) {
        Weight nw;
        for (const auto& x : w) nw.push_back(-x);
        d.weights.push_back(std::move(nw));
    }
    return d;
}

SuperSpace parity_shift(const SuperSpace& v) {
    SuperSpace s = v;
    for (auto& p : s.par) p = p + Par::Odd;
    for (auto& l : s.labels) l = "Pi(" + l + ")";
    return s;
}

SuperSpace tensor(const SuperSpace& v, const SuperSpace& w) {
    SuperSpace t;
    for (int i = 0; i < v.dim(); ++i) {
        for (int j = 0; j < w.dim(); ++j) {
            Weight wt;
            if (!v.weights.empty() && !w.weights.empty()) {
                wt = v.weights[i];
                for (size_t k = 0; k < wt.size(); ++k) wt[k] += w.weights[j][k];
            }
            t.push(v.labels[i] + "*" + w.labels[j], v.par[i] + w.par[j], std::move(wt));
        }
    }
    return t;
}

namespace {

void enumerate_monomials(const SuperSpace& v, int s, bool repeats_at_odd,
                         std::vector<MIdx>& out) {
    MIdx cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == s) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < v.dim(); ++i) {
            bool rep_ok = repeats_at_odd ? is_odd(v.par[i]) : !is_odd(v.par[i]);
            cur.push_back(i);
            rec(rep_ok ? i : i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

}  // namespace

std::vector<MIdx> ext_basis(const SuperSpace& v, int s) {
    std::vector<MIdx> out;
    enumerate_monomials(v, s, /*repeats_at_odd=*/true, out);
    return out;
}

std::vector<MIdx> sym_basis(const SuperSpace& v, int s) {
    std::vector<MIdx> out;
    enumerate_monomials(v, s, /*repeats_at_odd=*/false, out);
    return out;
}

Par midx_parity(const SuperSpace& v, const MIdx& J) {
    Par p = Par::Even;
    for (int j : J) p = p + v.par[j];
    return p;
}

Weight midx_weight(const SuperSpace& v, const MIdx& J) {
    if (v.weights.empty()) return {};
    Weight w(v.weights.empty() ? 0 : v.weights[0].size(), Scalar(0));
    for (int j : J) {
        for (size_t k = 0; k < w.size(); ++k) w[k] += v.weights[j][k];
    }
    return w;
}

std::string midx_label(const SuperSpace& v, const MIdx& J, const std::string& sep) {
    std::string s;
    for (size_t i = 0; i < J.size(); ++i) {
        if (i) s += sep;
        s += v.labels[J[i]];
    }
    return s;
}

SuperSpace ext_power(const SuperSpace& v, int s) {
    SuperSpace e;
    for (const MIdx& J : ext_basis(v, s)) e.push(midx_label(v, J, "^"), midx_parity(v, J), midx_weight(v, J));
    return e;
}

SuperSpace sym_power(const SuperSpace& v, int s) {
    SuperSpace e;
    for (const MIdx& J : sym_basis(v, s)) e.push(midx_label(v, J, "."), midx_parity(v, J), midx_weight(v, J));
    return e;
}

std::optional<std::pair<int, MIdx>> wedge_insert(const SuperSpace& v, int i, const MIdx& J) {
    int sign = 1;
    MIdx out;
    out.reserve(J.size() + 1);
    size_t k = 0;
    for (; k < J.size() && J[k] < i; ++k) {
        // hop e_i past e_{J[k]}: x^y = -(-1)^{p(x)p(y)} y^x
        sign *= -sign_pow(v.par[i], v.par[J[k]]);
        out.push_back(J[k]);
    }
    if (k < J.size() && J[k] == i && !is_odd(v.par[i])) return std::nullopt;
    out.push_back(i);
    for (; k < J.size(); ++k) out.push_back(J[k]);
    return std::make_pair(sign, std::move(out));
}

std::optional<std::pair<int, MIdx>> sym_insert(const SuperSpace& v, int i, const MIdx& J) {
    int sign = 1;
    MIdx out;
    out.reserve(J.size() + 1);
    size_t k = 0;
    for (; k < J.size() && J[k] < i; ++k) {
        sign *= sign_pow(v.par[i], v.par[J[k]]);
        out.push_back(J[k]);
    }
    if (k < J.size() && J[k] == i && is_odd(v.par[i])) return std::nullopt;
    out.push_back(i);
    for (; k < J.size(); ++k) out.push_back(J[k]);
    return std::make_pair(sign, std::move(out));
}

ExactMatrix supertranspose(const ExactMatrix& a, const std::vector<Par>& format, Par pa) {
    const int n = a.rows();
    ExactMatrix t(a.cols(), a.rows());
    for (int i = 0; i < a.cols(); ++i) {
        for (int j = 0; j < n; ++j) {
            Par pi = format[i], pj = format[j];
            int s = (is_odd(pi + pj) && is_odd(pi + pa)) ? -1 : 1;
            t.at(i, j) = s < 0 ? -a.at(j, i) : a.at(j, i);
        }
    }
    return t;
}

std::pair<ExactMatrix, ExactMatrix> parity_parts(const ExactMatrix& a, const std::vector<Par>& format) {
    ExactMatrix even(a.rows(), a.cols()), odd(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            if (is_odd(format[i] + format[j]))
                odd.at(i, j) = a.at(i, j);
            else
                even.at(i, j) = a.at(i, j);
        }
    }
    return {even, odd};
}

}  // namespace spencer
