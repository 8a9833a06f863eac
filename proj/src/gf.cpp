#include "constacode/gf.hpp"

#include <algorithm>
#include <cassert>

namespace constacode {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace gfp {

static void trim(std::vector<std::uint32_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

static std::vector<std::uint32_t> mul(const std::vector<std::uint32_t>& a,
                                      const std::vector<std::uint32_t>& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<std::uint32_t>((c[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
    return c;
}

std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& m,
                                    std::uint64_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    // m need not be monic here: scale by the inverse of its leading coefficient.
    std::uint64_t lead = m.back();
    std::uint64_t lead_inv = 1;
    for (std::uint64_t x = 1; x < p; ++x)
        if (x * lead % p == 1) { lead_inv = x; break; }
    while (a.size() > dm) {
        std::uint64_t c = a.back() % p * lead_inv % p;
        std::size_t shift = a.size() - 1 - dm;
        if (c != 0)
            for (std::size_t i = 0; i <= dm; ++i)
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p * p - c * m[i] % p) % p);
        a.pop_back();
        trim(a);
        if (a.size() <= dm) break;
    }
    return a;
}

static std::vector<std::uint32_t> mulmod(const std::vector<std::uint32_t>& a,
                                         const std::vector<std::uint32_t>& b,
                                         const std::vector<std::uint32_t>& m, std::uint64_t p) {
    return poly_mod(mul(a, b, p), m, p);
}

// x^(p^k) mod f via repeated p-th powering.
static std::vector<std::uint32_t> x_pow_p_iter(const std::vector<std::uint32_t>& f, std::uint64_t p,
                                               unsigned k) {
    std::vector<std::uint32_t> r = poly_mod({0, 1}, f, p);
    for (unsigned i = 0; i < k; ++i) {
        // r <- r^p mod f by square-and-multiply on the exponent p.
        std::vector<std::uint32_t> acc = {1};
        std::vector<std::uint32_t> base = r;
        std::uint64_t e = p;
        while (e) {
            if (e & 1) acc = mulmod(acc, base, f, p);
            base = mulmod(base, base, f, p);
            e >>= 1;
        }
        r = std::move(acc);
    }
    return r;
}

// Trial division against every monic polynomial of degree <= deg/2.
bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint64_t p) {
    const std::size_t deg = f.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    // Cheap necessary condition first: x^(p^deg) == x (mod f).
    {
        auto r = x_pow_p_iter(f, p, static_cast<unsigned>(deg));
        if (r != std::vector<std::uint32_t>{0, 1}) return false;
    }
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        // All monic polynomials of degree d, enumerated by their low coefficients.
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        std::vector<std::uint32_t> g(d + 1, 0);
        g[d] = 1;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t t = idx;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

// ord(x) == q-1 in GF(p)[x]/(f), f irreducible of degree deg.
static bool is_primitive(const std::vector<std::uint32_t>& f, std::uint64_t p, std::uint64_t q) {
    auto powx = [&](std::uint64_t e) {
        std::vector<std::uint32_t> acc = {1};
        std::vector<std::uint32_t> base = poly_mod({0, 1}, f, p);
        while (e) {
            if (e & 1) acc = mulmod(acc, base, f, p);
            base = mulmod(base, base, f, p);
            e >>= 1;
        }
        return acc;
    };
    for (std::uint64_t fac : prime_factors(q - 1)) {
        if (powx((q - 1) / fac) == std::vector<std::uint32_t>{1}) return false;
    }
    return true;
}

}  // namespace gfp

static constexpr std::uint64_t kTableLimit = 1ull << 26;

FieldPtr Field::create(std::uint64_t p, unsigned deg,
                       std::optional<std::vector<std::uint32_t>> defining_poly) {
    if (!is_prime_u64(p)) fail_param("characteristic is not prime: " + std::to_string(p));
    if (deg < 1) fail_param("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < deg; ++i) {
        if (q > (1ull << 40) / p) fail_param("field order exceeds 2^40");
        q *= p;
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->deg_ = deg;
    f->q_ = q;
    f->qm1_prime_factors_ = prime_factors(q - 1);

    if (defining_poly) {
        auto& dp = *defining_poly;
        if (dp.size() != deg + 1 || dp.back() % p != 1) fail_param("defining polynomial must be monic of the stated degree");
        for (auto& c : dp) c %= p;
        if (deg > 1 && !gfp::is_irreducible(dp, p)) fail_param("defining polynomial is reducible");
        f->poly_ = dp;
    } else {
        // Lexicographically smallest monic primitive polynomial, low
        // coefficients enumerated as base-p digits.
        std::uint64_t count = 1;
        for (unsigned i = 0; i < deg; ++i) count *= p;
        std::vector<std::uint32_t> g(deg + 1, 0);
        g[deg] = 1;
        bool found = false;
        for (std::uint64_t idx = 0; idx < count && !found; ++idx) {
            std::uint64_t t = idx;
            for (unsigned i = 0; i < deg; ++i) {
                g[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            if (deg == 1) {
                // GF(p): f = x - a primitive iff a is a primitive root mod p.
                std::uint64_t a = (p - g[0]) % p;
                if (a == 0) continue;
                bool prim = true;
                for (std::uint64_t fac : f->qm1_prime_factors_) {
                    std::uint64_t e = (p - 1) / fac, r = 1, b = a;
                    while (e) {
                        if (e & 1) r = r * b % p;
                        b = b * b % p;
                        e >>= 1;
                    }
                    if (r == 1) { prim = false; break; }
                }
                if (!prim) continue;
            } else {
                if (g[0] == 0) continue;
                if (!gfp::is_irreducible(g, p)) continue;
                if (!gfp::is_primitive(g, p, q)) continue;
            }
            f->poly_ = g;
            found = true;
        }
        if (!found) fail_param("no primitive polynomial found");  // cannot happen
    }

    // Designated primitive element: smallest index of multiplicative order q-1.
    if (deg == 1) {
        f->generator_ = 0;
        if (p == 2) {
            f->generator_ = 1;
        } else {
            for (std::uint64_t a = 2; a < p; ++a)
                if (f->element_order(a) == p - 1) { f->generator_ = a; break; }
            if (f->generator_ == 0) fail_param("no primitive root");
        }
        if (!defining_poly) f->poly_ = {static_cast<std::uint32_t>((p - f->generator_) % p), 1};
    } else {
        f->generator_ = 0;
        for (FElem x = p; x < q; ++x) {
            if (f->element_order(x) == q - 1) { f->generator_ = x; break; }
        }
        if (f->generator_ == 0) {
            if (!defining_poly) fail_param("default polynomial not primitive");
            fail_param("no primitive element found");  // cannot happen for a field
        }
    }

    if (q <= kTableLimit && deg > 1) {
        f->antilog_.assign(q - 1, 0);
        f->log_.assign(q, 0);
        FElem x = 1;
        for (std::uint64_t k = 0; k < q - 1; ++k) {
            f->antilog_[k] = static_cast<std::uint32_t>(x);
            f->log_[x] = static_cast<std::uint32_t>(k);
            x = f->mul_nolut(x, f->generator_);
        }
        if (x != 1) fail_param("generator order mismatch");  // cannot happen
    }
    return f;
}

FieldPtr Field::create_order(std::uint64_t q, std::optional<std::vector<std::uint32_t>> defining_poly) {
    if (q < 2) fail_param("field order must be >= 2");
    auto fs = prime_factors(q);
    if (fs.size() != 1) fail_param("field order is not a prime power: " + std::to_string(q));
    std::uint64_t p = fs[0];
    unsigned deg = 0;
    for (std::uint64_t t = q; t > 1; t /= p) ++deg;
    std::uint64_t check = 1;
    for (unsigned i = 0; i < deg; ++i) check *= p;
    if (check != q) fail_param("field order is not a prime power: " + std::to_string(q));
    return create(p, deg, std::move(defining_poly));
}

std::vector<std::uint32_t> Field::to_digits(FElem a) const {
    std::vector<std::uint32_t> d(deg_);
    for (unsigned i = 0; i < deg_; ++i) {
        d[i] = static_cast<std::uint32_t>(a % p_);
        a /= p_;
    }
    return d;
}

FElem Field::from_digits(const std::vector<std::uint32_t>& d) const {
    FElem a = 0;
    for (std::size_t i = std::min<std::size_t>(d.size(), deg_); i-- > 0;) a = a * p_ + d[i] % p_;
    return a;
}

FElem Field::add(FElem a, FElem b) const {
    if (p_ == 2) return a ^ b;
    FElem r = 0, mult = 1;
    for (unsigned i = 0; i < deg_; ++i) {
        r += mult * ((a % p_ + b % p_) % p_);
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

FElem Field::neg(FElem a) const {
    if (p_ == 2) return a;
    FElem r = 0, mult = 1;
    for (unsigned i = 0; i < deg_; ++i) {
        r += mult * ((p_ - a % p_) % p_);
        a /= p_;
        mult *= p_;
    }
    return r;
}

FElem Field::sub(FElem a, FElem b) const { return add(a, neg(b)); }

FElem Field::mul_nolut(FElem a, FElem b) const {
    if (a == 0 || b == 0) return 0;
    if (deg_ == 1) return a * b % p_;
    if (p_ == 2) {
        // Bitmask carryless multiply, reduce by the defining polynomial.
        std::uint64_t poly_mask = 0;
        for (unsigned i = 0; i <= deg_; ++i)
            if (poly_[i]) poly_mask |= 1ull << i;
        // At most 128 product bits is not possible here (deg <= 40), but
        // the running reduction keeps everything within 64 bits.
        std::uint64_t r = 0, x = a;
        for (unsigned i = 0; i < deg_; ++i) {
            if ((b >> i) & 1) r ^= x;
            x <<= 1;
            if ((x >> deg_) & 1) x ^= poly_mask;
        }
        return r;
    }
    auto da = to_digits(a);
    auto db = to_digits(b);
    std::vector<std::uint64_t> c(2 * deg_ - 1, 0);
    for (unsigned i = 0; i < deg_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < deg_; ++j) c[i + j] += std::uint64_t(da[i]) * db[j];
    }
    // x^deg = -(poly_[deg-1] x^{deg-1} + ... + poly_[0]) since poly_ is monic.
    for (std::size_t k = c.size(); k-- > deg_;) {
        std::uint64_t coef = c[k] % p_;
        if (coef == 0) continue;
        for (unsigned i = 0; i < deg_; ++i)
            c[k - deg_ + i] += coef * ((p_ - poly_[i]) % p_);
    }
    FElem r = 0;
    for (unsigned i = deg_; i-- > 0;) r = r * p_ + c[i] % p_;
    return r;
}

FElem Field::mul(FElem a, FElem b) const {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) {
        std::uint64_t k = log_[a] + log_[b];
        if (k >= q_ - 1) k -= q_ - 1;
        return antilog_[k];
    }
    if (deg_ == 1) return a * b % p_;
    return mul_nolut(a, b);
}

FElem Field::inv(FElem a) const {
    if (a == 0) throw Error(ErrorKind::Parameter, "division by zero");
    if (!log_.empty()) {
        std::uint64_t k = log_[a];
        return antilog_[k == 0 ? 0 : q_ - 1 - k];
    }
    if (deg_ == 1) return pow(a, p_ - 2);
    return pow(a, q_ - 2);
}

FElem Field::pow(FElem a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    e %= q_ - 1;
    if (!log_.empty()) {
        // log and reduced exponent are both < 2^26, so the product fits.
        return antilog_[log_[a] * e % (q_ - 1)];
    }
    FElem r = 1, b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

FElem Field::pow_signed(FElem a, std::int64_t e) const {
    std::uint64_t m = q_ - 1;
    std::int64_t red = e % static_cast<std::int64_t>(m);
    if (red < 0) red += m;
    return pow(a, static_cast<std::uint64_t>(red));
}

std::uint64_t Field::log(FElem a) const {
    if (a == 0) throw Error(ErrorKind::Parameter, "log of zero");
    if (!log_.empty()) return log_[a];
    // Fallback for table-free fields: baby-step only needed at desk scale.
    FElem x = 1;
    for (std::uint64_t k = 0; k < q_ - 1; ++k) {
        if (x == a) return k;
        x = mul(x, generator_);
    }
    throw Error(ErrorKind::Internal, "log: not a power of the generator");
}

std::uint64_t Field::element_order(FElem a) const {
    if (a == 0) throw Error(ErrorKind::Parameter, "order of zero element");
    std::uint64_t ord = q_ - 1;
    for (std::uint64_t f : qm1_prime_factors_) {
        while (ord % f == 0 && pow(a, ord / f) == 1) ord /= f;
    }
    return ord;
}

bool Field::has_subfield(std::uint64_t sub_order) const {
    std::uint64_t t = sub_order;
    unsigned d = 0;
    while (t > 1 && t % p_ == 0) {
        t /= p_;
        ++d;
    }
    return t == 1 && d >= 1 && deg_ % d == 0;
}

FElem Field::trace_to(FElem x, std::uint64_t sub_order) const {
    if (!has_subfield(sub_order)) throw Error(ErrorKind::Parameter, "incompatible subfield");
    unsigned d = 0;
    for (std::uint64_t t = sub_order; t > 1; t /= p_) ++d;
    unsigned steps = deg_ / d;
    FElem acc = x, y = x;
    for (unsigned i = 1; i < steps; ++i) {
        y = pow(y, sub_order);
        acc = add(acc, y);
    }
    return acc;
}

std::string Field::elem_str(FElem a) const {
    if (a == 0) return "0";
    if (a == 1) return "1";
    if (!log_.empty()) return "a^" + std::to_string(log_[a]);
    return std::to_string(a);
}

SubfieldMap::SubfieldMap(FieldPtr big, FieldPtr small) : big_(std::move(big)), small_(std::move(small)) {
    const std::uint64_t q0 = small_->order();
    if (big_->p() != small_->p() || !big_->has_subfield(q0))
        fail_param("SubfieldMap: not a subfield");
    const std::uint64_t Q = big_->order();
    FElem g = big_->pow(big_->generator(), (Q - 1) / (q0 - 1));

    // Root of the GF(p)-minimal polynomial of g inside the small field; the
    // map g^t -> w^t is then the unique isomorphism fixing GF(p).
    const std::uint64_t p = big_->p();
    std::vector<FElem> orbit;
    FElem c = g;
    do {
        orbit.push_back(c);
        c = big_->pow(c, p);
    } while (c != g);
    FElem w = 0;
    {
        // minpoly coefficients lie in the prime field: index < p.
        std::vector<FElem> coef = {1};
        for (FElem root : orbit) {
            std::vector<FElem> next(coef.size() + 1, 0);
            for (std::size_t i = 0; i < coef.size(); ++i) {
                next[i + 1] = big_->add(next[i + 1], coef[i]);
                next[i] = big_->add(next[i], big_->mul(coef[i], big_->neg(root)));
            }
            coef = std::move(next);
        }
        for (FElem cand = 0; cand < q0; ++cand) {
            FElem v = 0;
            for (std::size_t i = coef.size(); i-- > 0;) {
                v = small_->add(small_->mul(v, cand), coef[i] % p);
            }
            if (v == 0) { w = cand; break; }
        }
    }

    up_.assign(q0, 0);
    down_.reserve(q0);
    down_[0] = 0;
    FElem xb = 1, xs = 1;
    for (std::uint64_t t = 0; t < q0 - 1; ++t) {
        down_[xb] = xs;
        up_[xs] = xb;
        xb = big_->mul(xb, g);
        xs = small_->mul(xs, w);
    }
}

FElem SubfieldMap::down(FElem big_elem) const {
    auto it = down_.find(big_elem);
    if (it == down_.end()) throw Error(ErrorKind::Internal, "element not in subfield");
    return it->second;
}

FElem SubfieldMap::up(FElem small_elem) const { return up_.at(small_elem); }

}  // namespace constacode
