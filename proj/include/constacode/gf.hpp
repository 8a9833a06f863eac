#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "constacode/errors.hpp"

namespace constacode {

// Elements of GF(p^deg) are indices in [0, q): the base-p digits of the
// index, little-endian, are the coefficients of the element in the
// polynomial basis 1, x, ..., x^{deg-1}.
using FElem = std::uint64_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
public:
    // defining_poly: ascending coefficients in [0,p), monic, degree deg.
    // When absent, the lexicographically smallest monic primitive
    // polynomial is used (coefficients compared low-degree first as
    // base-p digits).
    static FieldPtr create(std::uint64_t p, unsigned deg,
                           std::optional<std::vector<std::uint32_t>> defining_poly = std::nullopt);

    // q given as a prime power p^s; factors it.
    static FieldPtr create_order(std::uint64_t q,
                                 std::optional<std::vector<std::uint32_t>> defining_poly = std::nullopt);

    std::uint64_t p() const { return p_; }
    unsigned degree() const { return deg_; }
    std::uint64_t order() const { return q_; }
    FElem generator() const { return generator_; }
    const std::vector<std::uint32_t>& defining_poly() const { return poly_; }
    bool has_tables() const { return !log_.empty(); }

    FElem add(FElem a, FElem b) const;
    FElem sub(FElem a, FElem b) const;
    FElem neg(FElem a) const;
    FElem mul(FElem a, FElem b) const;
    FElem inv(FElem a) const;
    // Exponent reduced modulo q-1 for nonzero base; 0^0 = 1.
    FElem pow(FElem a, std::uint64_t e) const;
    FElem pow_signed(FElem a, std::int64_t e) const;

    // Discrete log with respect to the designated generator.
    std::uint64_t log(FElem a) const;

    // Least t >= 1 with a^t = 1.
    std::uint64_t element_order(FElem a) const;

    // Trace onto the subfield of order sub_order = p^d with d | deg:
    // x + x^s + ... + x^{s^(deg/d - 1)}, s = sub_order. The result is an
    // element of *this* field lying in that subfield.
    FElem trace_to(FElem x, std::uint64_t sub_order) const;

    bool has_subfield(std::uint64_t sub_order) const;

    std::vector<std::uint32_t> to_digits(FElem a) const;
    FElem from_digits(const std::vector<std::uint32_t>& d) const;

    std::string elem_str(FElem a) const;  // "a^k" when nonzero log is cheap, else decimal

private:
    Field() = default;

    FElem mul_nolut(FElem a, FElem b) const;

    std::uint64_t p_ = 0;
    unsigned deg_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> poly_;  // ascending, size deg_+1, monic
    FElem generator_ = 0;
    std::vector<std::uint32_t> log_;      // built for q <= table limit
    std::vector<std::uint32_t> antilog_;  // antilog_[k] = generator^k, size q-1
    std::vector<std::uint64_t> qm1_prime_factors_;
};

// Maps the order-sub_order subfield of `big` onto the standalone field
// `small` of the same order through the field isomorphism fixing GF(p).
class SubfieldMap {
public:
    SubfieldMap() = default;
    SubfieldMap(FieldPtr big, FieldPtr small);

    FElem down(FElem big_elem) const;  // element of big lying in the subfield -> small
    FElem up(FElem small_elem) const;

    const FieldPtr& big() const { return big_; }
    const FieldPtr& small() const { return small_; }

private:
    FieldPtr big_, small_;
    std::unordered_map<FElem, FElem> down_;
    std::vector<FElem> up_;
};

// Arithmetic helpers on dense GF(p) coefficient vectors (ascending); used
// by the field constructor before any Field exists.
namespace gfp {
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& m,
                                    std::uint64_t p);
bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint64_t p);
}  // namespace gfp

bool is_prime_u64(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);  // distinct, ascending

}  // namespace constacode
