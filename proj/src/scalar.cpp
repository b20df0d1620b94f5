#include "spencer/scalar.hpp"

#include <sstream>

namespace spencer {

// ---------------------------------------------------------------- Poly

Poly::Poly(Rat c) {
    if (c != 0) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::variable() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& Poly::coeff(int d) const {
    static const Rat zero(0);
    if (d < 0 || d >= static_cast<int>(c_.size())) return zero;
    return c_[d];
}

const Rat& Poly::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

void Poly::divmod(const Poly& n, const Poly& d, Poly& q, Poly& r) {
    if (d.is_zero()) throw std::logic_error("polynomial division by zero");
    std::vector<Rat> rem = n.c_;
    std::vector<Rat> quo;
    int dd = d.degree();
    int rd = static_cast<int>(rem.size()) - 1;
    if (rd >= dd) quo.assign(rd - dd + 1, Rat(0));
    while (rd >= dd) {
        if (rem[rd] != 0) {
            Rat f = rem[rd] / d.c_.back();
            quo[rd - dd] = f;
            for (int i = 0; i <= dd; ++i) rem[rd - dd + i] -= f * d.c_[i];
        }
        --rd;
    }
    q = Poly(std::move(quo));
    r = Poly(std::move(rem));
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Poly r = *this;
    Rat lead = r.c_.back();
    for (auto& x : r.c_) x /= lead;
    return r;
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Rat& c = coeff(d);
        if (c == 0) continue;
        Rat ac = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (ac == 1) && d > 0;
        if (!unit) os << ac.str();
        if (d > 0) {
            if (!unit) os << "*";
            os << "a";
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

// -------------------------------------------------------------- Scalar

Scalar::Scalar(Poly num, Poly den) {
    if (den.is_zero()) throw std::logic_error("zero denominator");
    if (num.is_zero()) {
        v_ = Rat(0);
        return;
    }
    Poly g = Poly::gcd(num, den);
    if (g.degree() > 0) {
        Poly q, r;
        Poly::divmod(num, g, q, r);
        num = q;
        Poly::divmod(den, g, q, r);
        den = q;
    }
    Rat lead = den.leading();
    if (lead != 1) {
        num = num * Poly(Rat(1) / lead);
        den = den.monic();
    }
    if (den.degree() == 0 && num.degree() == 0) {
        v_ = num.coeff(0);
    } else {
        v_ = RatFunc{std::move(num), std::move(den)};
    }
}

Scalar Scalar::alpha() { return Scalar(Poly::variable(), Poly(Rat(1))); }

bool Scalar::is_zero() const {
    return is_rational() && std::get<Rat>(v_) == 0;
}

bool Scalar::is_one() const {
    return is_rational() && std::get<Rat>(v_) == 1;
}

const Rat& Scalar::rat() const {
    if (!is_rational()) throw std::logic_error("scalar is not rational: " + str());
    return std::get<Rat>(v_);
}

Poly Scalar::num() const {
    if (is_rational()) return Poly(std::get<Rat>(v_));
    return std::get<RatFunc>(v_).num;
}

Poly Scalar::den() const {
    if (is_rational()) return Poly(Rat(1));
    return std::get<RatFunc>(v_).den;
}

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(Rat(-std::get<Rat>(v_)));
    const auto& rf = std::get<RatFunc>(v_);
    Scalar r;
    r.v_ = RatFunc{-rf.num, rf.den};
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_rational() && o.is_rational())
        return Scalar(Rat(std::get<Rat>(v_) + std::get<Rat>(o.v_)));
    return Scalar(num() * o.den() + o.num() * den(), den() * o.den());
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_rational() && o.is_rational())
        return Scalar(Rat(std::get<Rat>(v_) * std::get<Rat>(o.v_)));
    if (is_zero() || o.is_zero()) return Scalar();
    return Scalar(num() * o.num(), den() * o.den());
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw std::logic_error("division by zero scalar");
    if (is_rational() && o.is_rational())
        return Scalar(Rat(std::get<Rat>(v_) / std::get<Rat>(o.v_)));
    return Scalar(num() * o.den(), den() * o.num());
}

Scalar Scalar::inv() const {
    if (is_zero()) throw std::logic_error("inverse of zero");
    if (is_rational()) return Scalar(Rat(1 / std::get<Rat>(v_)));
    const auto& rf = std::get<RatFunc>(v_);
    return Scalar(rf.den, rf.num);
}

bool Scalar::operator==(const Scalar& o) const {
    if (is_rational() != o.is_rational()) return false;
    if (is_rational()) return std::get<Rat>(v_) == std::get<Rat>(o.v_);
    return std::get<RatFunc>(v_) == std::get<RatFunc>(o.v_);
}

bool Scalar::operator<(const Scalar& o) const {
    // rationals before rational functions, then coefficientwise
    if (is_rational() != o.is_rational()) return is_rational();
    if (is_rational()) return std::get<Rat>(v_) < std::get<Rat>(o.v_);
    const auto cmp = [](const Poly& a, const Poly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        for (int d = a.degree(); d >= 0; --d) {
            if (a.coeff(d) != b.coeff(d)) return a.coeff(d) < b.coeff(d) ? -1 : 1;
        }
        return 0;
    };
    const auto& x = std::get<RatFunc>(v_);
    const auto& y = std::get<RatFunc>(o.v_);
    int c = cmp(x.num, y.num);
    if (c != 0) return c < 0;
    return cmp(x.den, y.den) < 0;
}

Scalar Scalar::eval_alpha(const Rat& x) const {
    if (is_rational()) return *this;
    const auto& rf = std::get<RatFunc>(v_);
    Rat d = rf.den.eval(x);
    if (d == 0) throw PoleAtAlpha("denominator " + rf.den.str() + " vanishes at a = " + x.str());
    return Scalar(Rat(rf.num.eval(x) / d));
}

std::string Scalar::str() const {
    if (is_rational()) return std::get<Rat>(v_).str();
    const auto& rf = std::get<RatFunc>(v_);
    std::string n = rf.num.str();
    if (rf.den.degree() == 0) return n;  // den is monic, hence exactly 1
    std::string d = rf.den.str();
    auto wrap = [](const std::string& s) {
        return s.find_first_of("+- ") == std::string::npos ? s : "(" + s + ")";
    };
    return wrap(n) + "/" + wrap(d);
}

}  // namespace spencer
