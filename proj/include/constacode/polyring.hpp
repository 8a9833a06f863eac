#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "constacode/gf.hpp"

namespace constacode {

// Dense polynomial over a field, ascending coefficients, no trailing zeros.
class Poly {
public:
    Poly() = default;
    Poly(FieldPtr f, std::vector<FElem> coeffs);
    static Poly zero(FieldPtr f) { return Poly(std::move(f), {}); }
    static Poly one(FieldPtr f) { return Poly(std::move(f), {1}); }
    static Poly x(FieldPtr f) { return Poly(std::move(f), {0, 1}); }
    // x^n - c
    static Poly xn_minus(FieldPtr f, std::uint64_t n, FElem c);

    const FieldPtr& field() const { return f_; }
    const std::vector<FElem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    FElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    FElem lead() const { return c_.back(); }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(FElem c) const;
    Poly monic() const;

    // quotient/remainder by a nonzero divisor
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator%(const Poly& d) const { return divmod(d).second; }
    Poly operator/(const Poly& d) const { return divmod(d).first; }

    FElem eval(FElem x) const;

    std::string str() const;  // comma-separated ascending coefficient indices

private:
    FieldPtr f_;
    std::vector<FElem> c_;
};

Poly poly_gcd(const Poly& a, const Poly& b);  // monic

// Monic normalization of x^deg(f) * f(1/x); requires f(0) != 0.
Poly reciprocal(const Poly& f);

// Minimal polynomial over the order-`sub` subfield of an element x of ext,
// returned over the standalone field `sub_field` (via the canonical
// subfield isomorphism). Computed as the orbit product under y -> y^sub.
Poly minimal_polynomial(const FieldPtr& ext, FElem x, const SubfieldMap& down_map);

// x^n - lambda = prod over Gamma^(1) of M_{beta^i}; returns (leader, factor)
// ordered by leader ascending. beta and the extension come from the caller.
struct XnFactor {
    std::uint64_t leader;
    Poly factor;
};
std::vector<XnFactor> factor_xn_minus_lambda(std::uint64_t q, std::uint64_t n, std::uint64_t r,
                                             const FieldPtr& ext, FElem beta,
                                             const SubfieldMap& down_map);

Poly parse_poly(const FieldPtr& f, const std::string& csv);

}  // namespace constacode
