#include "constacode/polyring.hpp"

#include <algorithm>
#include <sstream>

#include "constacode/cosets.hpp"

namespace constacode {

static void check_same_field(const Poly& a, const Poly& b) {
    if (a.field() && b.field() && a.field() != b.field() &&
        (a.field()->p() != b.field()->p() || a.field()->degree() != b.field()->degree() ||
         a.field()->defining_poly() != b.field()->defining_poly()))
        fail_param("polynomials over different fields");
}

Poly::Poly(FieldPtr f, std::vector<FElem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    for (FElem c : c_)
        if (c >= f_->order()) fail_param("coefficient outside the stated field");
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::xn_minus(FieldPtr f, std::uint64_t n, FElem c) {
    std::vector<FElem> v(n + 1, 0);
    v[0] = f->neg(c);
    v[n] = 1;
    return Poly(std::move(f), std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
    check_same_field(*this, o);
    std::vector<FElem> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f_->add(coeff(i), o.coeff(i));
    return Poly(f_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
    check_same_field(*this, o);
    std::vector<FElem> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f_->sub(coeff(i), o.coeff(i));
    return Poly(f_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    check_same_field(*this, o);
    if (is_zero() || o.is_zero()) return zero(f_);
    std::vector<FElem> v(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            v[i + j] = f_->add(v[i + j], f_->mul(c_[i], o.c_[j]));
    }
    return Poly(f_, std::move(v));
}

Poly Poly::scaled(FElem c) const {
    std::vector<FElem> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = f_->mul(c_[i], c);
    return Poly(f_, std::move(v));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(f_->inv(lead()));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    check_same_field(*this, d);
    if (d.is_zero()) fail_param("polynomial division by zero");
    std::vector<FElem> rem = c_;
    const int dd = d.degree();
    if (degree() < dd) return {zero(f_), *this};
    std::vector<FElem> quo(degree() - dd + 1, 0);
    FElem lead_inv = f_->inv(d.lead());
    for (int k = degree(); k >= dd; --k) {
        FElem c = f_->mul(rem[k], lead_inv);
        quo[k - dd] = c;
        if (c == 0) continue;
        for (int i = 0; i <= dd; ++i)
            rem[k - dd + i] = f_->sub(rem[k - dd + i], f_->mul(c, d.c_[i]));
    }
    return {Poly(f_, std::move(quo)), Poly(f_, std::move(rem))};
}

FElem Poly::eval(FElem x) const {
    FElem v = 0;
    for (std::size_t i = c_.size(); i-- > 0;) v = f_->add(f_->mul(v, x), c_[i]);
    return v;
}

std::string Poly::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i];
    }
    return os.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly reciprocal(const Poly& f) {
    if (f.is_zero() || f.coeff(0) == 0) fail_param("reciprocal: zero constant term");
    std::vector<FElem> v(f.coeffs().rbegin(), f.coeffs().rend());
    return Poly(f.field(), std::move(v)).monic();
}

Poly minimal_polynomial(const FieldPtr& ext, FElem x, const SubfieldMap& down_map) {
    const FieldPtr& sub = down_map.small();
    const std::uint64_t s = sub->order();
    if (x == 0) return Poly::x(sub);
    std::vector<FElem> orbit;
    FElem c = x;
    do {
        orbit.push_back(c);
        c = ext->pow(c, s);
    } while (c != x);
    // Product of (X - conjugate) over the orbit, expanded inside ext.
    std::vector<FElem> coef = {1};
    for (FElem root : orbit) {
        std::vector<FElem> next(coef.size() + 1, 0);
        for (std::size_t i = 0; i < coef.size(); ++i) {
            next[i + 1] = ext->add(next[i + 1], coef[i]);
            next[i] = ext->add(next[i], ext->mul(coef[i], ext->neg(root)));
        }
        coef = std::move(next);
    }
    std::vector<FElem> out(coef.size());
    for (std::size_t i = 0; i < coef.size(); ++i) out[i] = down_map.down(coef[i]);
    return Poly(sub, std::move(out));
}

std::vector<XnFactor> factor_xn_minus_lambda(std::uint64_t q, std::uint64_t n, std::uint64_t r,
                                             const FieldPtr& ext, FElem beta,
                                             const SubfieldMap& down_map) {
    if (ext->element_order(beta) != r * n) fail_param("beta is not a primitive rn-th root of unity");
    std::vector<XnFactor> out;
    for (std::uint64_t leader : gamma1(q, n, r)) {
        out.push_back({leader, minimal_polynomial(ext, ext->pow(beta, leader), down_map)});
    }
    return out;
}

Poly parse_poly(const FieldPtr& f, const std::string& csv) {
    std::vector<FElem> v;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        v.push_back(std::stoull(tok));
    }
    return Poly(f, std::move(v));
}

}  // namespace constacode
