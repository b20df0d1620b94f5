#include "spencer/matrix.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spencer {

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vec>& rows, int cols) {
    ExactMatrix m(static_cast<int>(rows.size()), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        for (int j = 0; j < cols; ++j) m.at(static_cast<int>(i), j) = rows[i][j];
    }
    return m;
}

Vec ExactMatrix::row(int i) const {
    return Vec(e_.begin() + size_t(i) * cols_, e_.begin() + size_t(i + 1) * cols_);
}

void ExactMatrix::set_row(int i, const Vec& v) {
    std::copy(v.begin(), v.end(), e_.begin() + size_t(i) * cols_);
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    ExactMatrix r(rows_, o.cols_);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (!o.at(k, j).is_zero()) r.at(i, j) += a * o.at(k, j);
            }
        }
    }
    return r;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    ExactMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    ExactMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec ExactMatrix::apply(const Vec& v) const {
    Vec r(rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
        }
    }
    return r;
}

ExactMatrix ExactMatrix::eval_alpha(const Rat& x) const {
    ExactMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].eval_alpha(x);
    return r;
}

namespace {

RrefResult rref_impl(const ExactMatrix& m, bool parallel) {
    RrefResult res;
    res.reduced = m;
    ExactMatrix& a = res.reduced;
    const int rows = a.rows(), cols = a.cols();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i) {
            if (!a.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = c; j < cols; ++j) std::swap(a.at(r, j), a.at(piv, j));
        }
        Scalar inv = a.at(r, c).inv();
        if (!inv.is_one()) {
            for (int j = c; j < cols; ++j) {
                if (!a.at(r, j).is_zero()) a.at(r, j) *= inv;
            }
        }
        a.at(r, c) = Scalar(1);
        // each non-pivot row update is independent of the others
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (parallel && rows > 32)
#endif
        for (int i = 0; i < rows; ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            Scalar f = a.at(i, c);
            a.at(i, c) = Scalar(0);
            for (int j = c + 1; j < cols; ++j) {
                if (!a.at(r, j).is_zero()) a.at(i, j) -= f * a.at(r, j);
            }
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    (void)parallel;
    return res;
}

}  // namespace

RrefResult rref(const ExactMatrix& m) { return rref_impl(m, true); }
RrefResult rref_serial(const ExactMatrix& m) { return rref_impl(m, false); }

int rank(const ExactMatrix& m) { return rref(m).rank; }

std::vector<Vec> kernel_basis(const ExactMatrix& m) {
    RrefResult r = rref(m);
    const int cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (int p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        Vec v(cols);
        v[c] = Scalar(1);
        for (int i = 0; i < r.rank; ++i) {
            const Scalar& x = r.reduced.at(i, c);
            if (!x.is_zero()) v[r.pivots[i]] = -x;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vec> row_space_basis(const ExactMatrix& m) {
    RrefResult r = rref(m);
    std::vector<Vec> rows;
    rows.reserve(r.rank);
    for (int i = 0; i < r.rank; ++i) rows.push_back(r.reduced.row(i));
    return rows;
}

std::vector<Vec> intersect(const std::vector<Vec>& a, const std::vector<Vec>& b, int ambient) {
    if (a.empty() || b.empty()) return {};
    // null vectors of [A^T | -B^T] give coefficient pairs with A x = B y
    ExactMatrix sys(ambient, static_cast<int>(a.size() + b.size()));
    for (size_t k = 0; k < a.size(); ++k)
        for (int i = 0; i < ambient; ++i) sys.at(i, static_cast<int>(k)) = a[k][i];
    for (size_t k = 0; k < b.size(); ++k)
        for (int i = 0; i < ambient; ++i) sys.at(i, static_cast<int>(a.size() + k)) = -b[k][i];
    std::vector<Vec> null = kernel_basis(sys);
    SpanBuilder span(ambient);
    std::vector<Vec> out;
    for (const Vec& n : null) {
        Vec v(ambient);
        for (size_t k = 0; k < a.size(); ++k) {
            if (!n[k].is_zero()) vec_axpy(v, n[k], a[k]);
        }
        if (!vec_is_zero(v) && span.add(v)) out.push_back(span.basis().back());
    }
    return out;
}

bool solve_in_span(const std::vector<Vec>& basis, const Vec& v, Vec* coords) {
    const int ambient = static_cast<int>(v.size());
    const int n = static_cast<int>(basis.size());
    ExactMatrix sys(ambient, n + 1);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < ambient; ++i) sys.at(i, k) = basis[k][i];
    for (int i = 0; i < ambient; ++i) sys.at(i, n) = v[i];
    RrefResult r = rref(sys);
    for (int p : r.pivots) {
        if (p == n) return false;  // inconsistent
    }
    if (coords) {
        coords->assign(n, Scalar(0));
        for (int i = 0; i < r.rank; ++i) (*coords)[r.pivots[i]] = r.reduced.at(i, n);
    }
    return true;
}

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec vec_scale(const Vec& v, const Scalar& c) {
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) r[i] = v[i] * c;
    }
    return r;
}

void vec_axpy(Vec& y, const Scalar& c, const Vec& x) {
    if (c.is_zero()) return;
    for (size_t i = 0; i < x.size(); ++i) {
        if (!x[i].is_zero()) y[i] += c * x[i];
    }
}

bool CoordSpan::add(const Vec& v) {
    // coordinates refer to accepted generators only, so the index is rolled
    // back when the vector turns out to be dependent
    const int gen_idx = ngen_;
    Vec left = v;
    std::vector<Scalar> combo(ngen_ + 1, Scalar(0));
    combo[gen_idx] = Scalar(1);
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Scalar f = left[pivots_[i]];
        if (f.is_zero()) continue;
        left[pivots_[i]] = Scalar(0);
        for (int j = pivots_[i] + 1; j < ambient_; ++j) {
            if (!rows_[i][j].is_zero()) left[j] -= f * rows_[i][j];
        }
        for (size_t k = 0; k < combo_[i].size(); ++k) {
            if (!combo_[i][k].is_zero()) combo[k] -= f * combo_[i][k];
        }
    }
    int piv = -1;
    for (int j = 0; j < ambient_; ++j) {
        if (!left[j].is_zero()) {
            piv = j;
            break;
        }
    }
    if (piv < 0) return false;
    ngen_ += 1;
    Scalar inv = left[piv].inv();
    if (!inv.is_one()) {
        left = vec_scale(left, inv);
        for (auto& c : combo) {
            if (!c.is_zero()) c *= inv;
        }
    }
    left[piv] = Scalar(1);
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Scalar f = rows_[i][piv];
        if (f.is_zero()) continue;
        rows_[i][piv] = Scalar(0);
        for (int j = piv + 1; j < ambient_; ++j) {
            if (!left[j].is_zero()) rows_[i][j] -= f * left[j];
        }
        combo_[i].resize(ngen_, Scalar(0));
        for (size_t k = 0; k < combo.size(); ++k) {
            if (!combo[k].is_zero()) combo_[i][k] -= f * combo[k];
        }
    }
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    size_t idx = static_cast<size_t>(it - pivots_.begin());
    pivots_.insert(it, piv);
    rows_.insert(rows_.begin() + idx, std::move(left));
    combo_.insert(combo_.begin() + idx, std::move(combo));
    return true;
}

std::optional<Vec> CoordSpan::express(const Vec& v) const {
    Vec left = v;
    Vec coords(ngen_, Scalar(0));
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Scalar f = left[pivots_[i]];
        if (f.is_zero()) continue;
        left[pivots_[i]] = Scalar(0);
        for (int j = pivots_[i] + 1; j < ambient_; ++j) {
            if (!rows_[i][j].is_zero()) left[j] -= f * rows_[i][j];
        }
        for (size_t k = 0; k < combo_[i].size(); ++k) {
            if (!combo_[i][k].is_zero()) coords[k] += f * combo_[i][k];
        }
    }
    if (!vec_is_zero(left)) return std::nullopt;
    return coords;
}

bool SpanBuilder::add(Vec v) {
    v = reduce(std::move(v));
    int piv = -1;
    for (int j = 0; j < ambient_; ++j) {
        if (!v[j].is_zero()) {
            piv = j;
            break;
        }
    }
    if (piv < 0) return false;
    Scalar inv = v[piv].inv();
    if (!inv.is_one()) v = vec_scale(v, inv);
    v[piv] = Scalar(1);
    // back-substitute into existing rows to keep the basis in rref
    for (Vec& row : rows_) {
        if (!row[piv].is_zero()) {
            Scalar f = row[piv];
            row[piv] = Scalar(0);
            for (int j = piv + 1; j < ambient_; ++j) {
                if (!v[j].is_zero()) row[j] -= f * v[j];
            }
        }
    }
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    size_t idx = static_cast<size_t>(it - pivots_.begin());
    pivots_.insert(it, piv);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
}

Vec SpanBuilder::reduce(Vec v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        const Scalar& f = v[pivots_[i]];
        if (!f.is_zero()) {
            Scalar c = f;  // row has pivot 1
            v[pivots_[i]] = Scalar(0);
            for (int j = pivots_[i] + 1; j < ambient_; ++j) {
                if (!rows_[i][j].is_zero()) v[j] -= c * rows_[i][j];
            }
        }
    }
    return v;
}

}  // namespace spencer
