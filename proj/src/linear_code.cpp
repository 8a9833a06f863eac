#include "constacode/linear_code.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "constacode/errors.hpp"

namespace constacode {

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

static mpz_class pow_mpz(std::uint64_t base, std::uint64_t exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

std::uint64_t LinearCode::message_count() const {
    std::uint64_t total = 1;
    const std::uint64_t qv = q();
    for (std::uint32_t j = 0; j < k; ++j) {
        if (total > UINT64_MAX / qv) return UINT64_MAX;
        total *= qv;
    }
    return total;
}

// Row echelon form in place; returns rank and fills pivot column list.
static std::uint32_t row_echelon(const Field& f, std::vector<std::uint8_t>& rows, std::uint32_t k,
                                 std::uint32_t n, std::vector<std::uint32_t>* pivots = nullptr) {
    auto at = [&](std::uint32_t r, std::uint32_t c) -> std::uint8_t& {
        return rows[std::size_t(r) * n + c];
    };
    std::uint32_t rank = 0;
    for (std::uint32_t col = 0; col < n && rank < k; ++col) {
        std::uint32_t piv = rank;
        while (piv < k && at(piv, col) == 0) ++piv;
        if (piv == k) continue;
        if (piv != rank)
            for (std::uint32_t c = 0; c < n; ++c) std::swap(at(piv, c), at(rank, c));
        FElem inv = f.inv(at(rank, col));
        for (std::uint32_t c = col; c < n; ++c)
            at(rank, c) = static_cast<std::uint8_t>(f.mul(inv, at(rank, c)));
        for (std::uint32_t r = 0; r < k; ++r) {
            if (r == rank || at(r, col) == 0) continue;
            FElem m = at(r, col);
            for (std::uint32_t c = col; c < n; ++c)
                at(r, c) = static_cast<std::uint8_t>(f.sub(at(r, c), f.mul(m, at(rank, c))));
        }
        if (pivots) pivots->push_back(col);
        ++rank;
    }
    return rank;
}

std::uint32_t rank_of(const FieldPtr& f, std::vector<std::uint8_t> rows, std::uint32_t k,
                      std::uint32_t n) {
    return row_echelon(*f, rows, k, n);
}

LinearCode make_code(FieldPtr field, std::uint32_t n, std::vector<std::uint8_t> rows_flat,
                     std::uint32_t k) {
    if (rows_flat.size() != std::size_t(k) * n) fail_param("generator matrix size mismatch");
    if (rank_of(field, rows_flat, k, n) != k) fail_param("generator rows are linearly dependent");
    LinearCode code;
    code.field = std::move(field);
    code.n = n;
    code.k = k;
    code.gen = std::move(rows_flat);
    return code;
}

mpz_class WeightEnumerator::total() const {
    mpz_class t = 0;
    for (const auto& [w, c] : counts) t += c;
    return t;
}

std::optional<std::uint32_t> WeightEnumerator::min_positive_weight() const {
    for (const auto& [w, c] : counts)
        if (w > 0 && c > 0) return w;
    return std::nullopt;
}

mpz_class WeightEnumerator::count(std::uint32_t w) const {
    auto it = counts.find(w);
    return it == counts.end() ? mpz_class(0) : it->second;
}

WeightEnumerator WeightEnumerator::pow(unsigned e) const {
    WeightEnumerator acc;
    acc.n = 0;
    acc.counts[0] = 1;
    for (unsigned t = 0; t < e; ++t) {
        WeightEnumerator next;
        next.n = acc.n + n;
        for (const auto& [w1, c1] : acc.counts)
            for (const auto& [w2, c2] : counts) next.counts[w1 + w2] += c1 * c2;
        acc = std::move(next);
    }
    return acc;
}

WeightEnumerator WeightEnumerator::subst_zr(unsigned r) const {
    WeightEnumerator out;
    out.n = n * r;
    for (const auto& [w, c] : counts) out.counts[w * r] = c;
    return out;
}

std::string WeightEnumerator::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : counts) {
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (w == 0) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str();
            os << "z";
            if (w != 1) os << "^" << w;
        }
    }
    if (first) os << "0";
    return os.str();
}

WeightEnumerator weight_distribution(const LinearCode& code, std::uint64_t budget, int threads,
                                     KernelKind kind) {
    if (code.message_count() > budget)
        fail_budget("codeword enumeration exceeds budget of " + std::to_string(budget));
    auto raw = enumerate_weights_raw(code.field, code.gen.data(), code.k, code.n, threads, kind);
    WeightEnumerator we;
    we.n = code.n;
    for (std::uint32_t w = 0; w <= code.n; ++w)
        if (raw[w]) we.counts[w] = mpz_class(static_cast<unsigned long>(raw[w]));
    return we;
}

std::uint32_t min_distance(const LinearCode& code, std::uint64_t budget, int threads) {
    auto we = weight_distribution(code, budget, threads);
    auto d = we.min_positive_weight();
    if (!d) fail_param("code has no nonzero codeword");
    return *d;
}

std::optional<std::uint32_t> low_weight_search(const LinearCode& parity, std::uint32_t w_max) {
    const Field& f = *parity.field;
    const std::uint32_t m = parity.k;
    const std::uint32_t n = parity.n;
    const std::uint64_t q = f.order();

    std::vector<std::string> cols(n);
    for (std::uint32_t j = 0; j < n; ++j) {
        std::string c(m, '\0');
        for (std::uint32_t i = 0; i < m; ++i) c[i] = static_cast<char>(parity.row(i)[j]);
        cols[j] = std::move(c);
    }

    // Weight 1: a zero column.
    const std::string zero(m, '\0');
    for (std::uint32_t j = 0; j < n; ++j)
        if (cols[j] == zero) return 1;
    if (w_max < 2) return std::nullopt;

    auto normalize = [&](const std::string& c) {
        std::string out = c;
        for (std::uint32_t i = 0; i < m; ++i) {
            if (out[i] == 0) continue;
            FElem inv = f.inv(static_cast<std::uint8_t>(out[i]));
            for (std::uint32_t t = i; t < m; ++t)
                out[t] = static_cast<char>(f.mul(inv, static_cast<std::uint8_t>(out[t])));
            break;
        }
        return out;
    };
    auto add_scaled = [&](const std::string& a, FElem s, const std::string& b) {
        std::string out(m, '\0');
        for (std::uint32_t i = 0; i < m; ++i)
            out[i] = static_cast<char>(f.add(static_cast<std::uint8_t>(a[i]),
                                             f.mul(s, static_cast<std::uint8_t>(b[i]))));
        return out;
    };

    // Weight 2: two columns projectively equal.
    std::unordered_map<std::string, std::vector<std::uint32_t>> norm_cols;
    bool found2 = false;
    for (std::uint32_t j = 0; j < n; ++j) {
        auto& bucket = norm_cols[normalize(cols[j])];
        if (!bucket.empty()) found2 = true;
        bucket.push_back(j);
    }
    if (found2) return 2;
    if (w_max < 3) return std::nullopt;

    // Weight 3: c_i + b c_j projectively matches a third column.
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            for (std::uint64_t b = 1; b < q; ++b) {
                std::string s = add_scaled(cols[i], b, cols[j]);
                if (s == zero) continue;  // would be weight 2, excluded above
                auto it = norm_cols.find(normalize(s));
                if (it == norm_cols.end()) continue;
                for (std::uint32_t t : it->second)
                    if (t != i && t != j) return 3;
            }
        }
    }
    if (w_max < 4) return std::nullopt;

    // Weight 4: two disjoint pairs with projectively equal combinations.
    std::unordered_map<std::string, std::vector<std::pair<std::uint32_t, std::uint32_t>>> pair_map;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            for (std::uint64_t b = 1; b < q; ++b) {
                std::string s = add_scaled(cols[i], b, cols[j]);
                if (s == zero) continue;
                auto& bucket = pair_map[normalize(s)];
                for (auto [pi, pj] : bucket)
                    if (pi != i && pi != j && pj != i && pj != j) return 4;
                bucket.emplace_back(i, j);
            }
        }
    }
    return std::nullopt;
}

LinearCode dual(const LinearCode& code) {
    const Field& f = *code.field;
    const std::uint32_t n = code.n;
    const std::uint32_t k = code.k;
    std::vector<std::uint8_t> rref = code.gen;
    std::vector<std::uint32_t> pivots;
    if (row_echelon(f, rref, k, n, &pivots) != k) fail_internal("generator lost rank");

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::uint8_t> drows;
    drows.reserve(std::size_t(n - k) * n);
    for (std::uint32_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<std::uint8_t> v(n, 0);
        v[free_col] = 1;
        for (std::uint32_t r = 0; r < k; ++r)
            v[pivots[r]] = static_cast<std::uint8_t>(
                f.neg(rref[std::size_t(r) * n + free_col]));
        drows.insert(drows.end(), v.begin(), v.end());
    }
    return make_code(code.field, n, std::move(drows), n - k);
}

WeightEnumerator macwilliams(const WeightEnumerator& we, std::uint32_t n, std::uint32_t k,
                             std::uint64_t q) {
    if (we.n != n) fail_param("enumerator length mismatch");
    std::vector<mpz_class> qm1pow(n + 1);
    qm1pow[0] = 1;
    for (std::uint32_t t = 1; t <= n; ++t) qm1pow[t] = qm1pow[t - 1] * mpz_class(q - 1);

    std::vector<mpz_class> acc(n + 1, mpz_class(0));
    for (const auto& [i, ai] : we.counts) {
        if (ai == 0) continue;
        std::vector<mpz_class> ci(i + 1), cni(n - i + 1);
        for (std::uint32_t s = 0; s <= i; ++s) ci[s] = binomial(i, s);
        for (std::uint32_t t = 0; t <= n - i; ++t) cni[t] = binomial(n - i, t);
        for (std::uint32_t j = 0; j <= n; ++j) {
            mpz_class kr = 0;  // Krawtchouk K_j(i)
            std::uint32_t smax = std::min(i, j);
            for (std::uint32_t s = 0; s <= smax; ++s) {
                if (j - s > n - i) continue;
                mpz_class term = ci[s] * cni[j - s] * qm1pow[j - s];
                if (s & 1)
                    kr -= term;
                else
                    kr += term;
            }
            acc[j] += ai * kr;
        }
    }
    mpz_class qk = pow_mpz(q, k);
    WeightEnumerator out;
    out.n = n;
    for (std::uint32_t j = 0; j <= n; ++j) {
        if (acc[j] == 0) continue;
        mpz_class quot, rem;
        mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), acc[j].get_mpz_t(), qk.get_mpz_t());
        if (rem != 0 || quot < 0) fail_internal("transform of enumerator is not integral");
        if (quot != 0) out.counts[j] = quot;
    }
    return out;
}

PlessReport pless_check(const WeightEnumerator& we, const mpz_class& a1d, const mpz_class& a2d,
                        const mpz_class& a3d, std::uint32_t n, std::uint32_t k, std::uint64_t q) {
    mpz_class s0 = 0, s1 = 0, s2 = 0, s3 = 0;
    for (const auto& [w, c] : we.counts) {
        mpz_class iw(w);
        s0 += c;
        s1 += c * iw;
        s2 += c * iw * iw;
        s3 += c * iw * iw * iw;
    }
    mpz_class Q(static_cast<unsigned long>(q)), N(n);
    mpz_class qm1 = Q - 1;
    mpz_class qk = pow_mpz(q, k);

    mpz_class b0 = 1;
    mpz_class b1 = qm1 * N - a1d;
    mpz_class b2 = qm1 * qm1 * N * N + qm1 * N - (2 * qm1 * N - Q + 2) * a1d + 2 * a2d;
    mpz_class b3 = qm1 * N * (qm1 * qm1 * N * N + 3 * qm1 * N - Q + 2) -
                   (3 * qm1 * qm1 * N * N - 3 * (Q - 3) * qm1 * N + Q * Q - 6 * Q + 6) * a1d +
                   6 * (qm1 * N - Q + 2) * a2d - 6 * a3d;

    // Identity t reads sum(i^t A_i) = q^{k-t} * B_t; compare with both sides
    // scaled by q^t so negative exponents never appear.
    auto check = [&](const mpz_class& s, const mpz_class& b, unsigned t) {
        return s * pow_mpz(q, t) == b * qk;
    };
    PlessReport rep;
    rep.moment[0] = check(s0, b0, 0);
    rep.moment[1] = check(s1, b1, 1);
    rep.moment[2] = check(s2, b2, 2);
    rep.moment[3] = check(s3, b3, 3);
    return rep;
}

bool sphere_packing_ok(std::uint32_t n, std::uint32_t k, std::uint32_t d, std::uint64_t q) {
    mpz_class lhs = 0;
    std::uint32_t t = (d - 1) / 2;
    mpz_class qm1pow = 1;
    for (std::uint32_t i = 0; i <= t; ++i) {
        lhs += binomial(n, i) * qm1pow;
        qm1pow *= mpz_class(q - 1);
    }
    return lhs <= pow_mpz(q, n - k);
}

bool sphere_packing_even_ok(std::uint32_t n, std::uint32_t k, std::uint32_t d_even,
                            std::uint64_t q) {
    if (d_even % 2 != 0) fail_param("even-distance bound requires even d");
    mpz_class lhs = 0;
    std::uint32_t t = (d_even - 2) / 2;
    mpz_class qm1pow = 1;
    for (std::uint32_t i = 0; i <= t; ++i) {
        lhs += binomial(n - 1, i) * qm1pow;
        qm1pow *= mpz_class(q - 1);
    }
    return lhs <= pow_mpz(q, n - 1 - k);
}

bool griesmer_ok(std::uint32_t n, std::uint32_t k, std::uint32_t d, std::uint64_t q) {
    mpz_class sum = 0, qi = 1, D(d);
    for (std::uint32_t i = 0; i < k; ++i) {
        mpz_class ceil_term;
        mpz_cdiv_q(ceil_term.get_mpz_t(), D.get_mpz_t(), qi.get_mpz_t());
        sum += ceil_term;
        qi *= mpz_class(static_cast<unsigned long>(q));
    }
    return mpz_class(n) >= sum;
}

std::vector<std::string> codeword_set(const LinearCode& code, std::uint64_t budget) {
    const std::uint64_t total = code.message_count();
    if (total > budget) fail_budget("codeword set enumeration exceeds budget");
    EnumPlan plan = make_enum_plan(code.field, code.gen.data(), code.k, code.n);
    const std::uint32_t n = code.n, k = code.k, q = plan.q;
    const std::size_t stride = plan.stride;
    auto add_row = [&](std::uint8_t* dst, const std::uint8_t* row) {
        for (std::uint32_t i = 0; i < n; ++i)
            dst[i] = plan.add_table[std::size_t(dst[i]) * q + row[i]];
    };

    std::vector<std::string> out;
    out.reserve(total);
    std::vector<std::uint8_t> cw(stride, 0);
    std::vector<std::uint32_t> digits(k, 0);
    out.emplace_back(reinterpret_cast<const char*>(cw.data()), n);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint32_t d = 0;
        while (digits[d] == q - 1) {
            add_row(cw.data(), &plan.delta[(std::size_t(d) * q + (q - 1)) * stride]);
            digits[d] = 0;
            ++d;
        }
        add_row(cw.data(), &plan.delta[(std::size_t(d) * q + digits[d]) * stride]);
        digits[d]++;
        out.emplace_back(reinterpret_cast<const char*>(cw.data()), n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool permutation_equivalent_under(const LinearCode& a, const LinearCode& b,
                                  const std::vector<std::uint32_t>& perm, std::uint64_t budget) {
    if (a.n != b.n || a.field->order() != b.field->order()) return false;
    if (perm.size() != a.n) fail_param("permutation length mismatch");
    std::vector<bool> seen(a.n, false);
    for (auto p : perm) {
        if (p >= a.n || seen[p]) fail_param("not a permutation");
        seen[p] = true;
    }
    auto sa = codeword_set(a, budget);
    for (auto& w : sa) {
        std::string y(a.n, '\0');
        for (std::uint32_t i = 0; i < a.n; ++i) y[i] = w[perm[i]];
        w = std::move(y);
    }
    std::sort(sa.begin(), sa.end());
    return sa == codeword_set(b, budget);
}

std::optional<std::uint64_t> is_constant_weight(const LinearCode& code, std::uint64_t budget,
                                                int threads) {
    auto we = weight_distribution(code, budget, threads);
    std::optional<std::uint64_t> w;
    for (const auto& [wt, c] : we.counts) {
        if (wt == 0 || c == 0) continue;
        if (w) return std::nullopt;
        w = wt;
    }
    return w;
}

bool contains(const LinearCode& code, const std::uint8_t* word) {
    std::vector<std::uint8_t> rows(code.gen);
    rows.insert(rows.end(), word, word + code.n);
    return rank_of(code.field, rows, code.k + 1, code.n) == code.k;
}

}  // namespace constacode
