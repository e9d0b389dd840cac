#include "borwein/series.hpp"

#include <algorithm>
#include <map>

namespace borwein {

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::string s(text);
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rational r;
        if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
        r.canonicalize();
        return r;
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        Integer n;
        if (n.set_str(s, 10) != 0) throw std::invalid_argument("bad integer literal: " + s);
        return Rational(n);
    }
    std::string intpart = s.substr(0, dot);
    std::string fracpart = s.substr(dot + 1);
    bool negative = false;
    if (!intpart.empty() && (intpart[0] == '-' || intpart[0] == '+')) {
        negative = intpart[0] == '-';
        intpart.erase(0, 1);
    }
    if (intpart.empty()) intpart = "0";
    if (fracpart.empty()) fracpart = "0";
    Integer ip, fp, scale(10);
    if (ip.set_str(intpart, 10) != 0 || fp.set_str(fracpart, 10) != 0)
        throw std::invalid_argument("bad decimal literal: " + s);
    mpz_pow_ui(scale.get_mpz_t(), scale.get_mpz_t(), fracpart.size());
    Rational r = Rational(ip) + make_rational(fp, scale);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

TruncatedSeries TruncatedSeries::truncated(std::int64_t new_order) const {
    if (new_order >= order()) return *this;
    TruncatedSeries out(new_order);
    std::copy_n(coeffs_.begin(), new_order + 1, out.coeffs_.begin());
    return out;
}

TruncatedSeries TruncatedSeries::shifted(std::int64_t k) const {
    if (k < 0) throw std::domain_error("negative shift");
    TruncatedSeries out(order());
    for (std::int64_t n = k; n <= order(); ++n) out.coeffs_[n] = coeffs_[n - k];
    return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out(order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = -coeffs_[i];
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    *this = *this + rhs;
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    *this = *this - rhs;
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    std::int64_t n = std::min(a.order(), b.order());
    TruncatedSeries out = a.truncated(n);
    for (std::int64_t i = 0; i <= n; ++i) out.coeffs_[i] += b.coeffs_[i];
    return out;
}

TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    std::int64_t n = std::min(a.order(), b.order());
    TruncatedSeries out = a.truncated(n);
    for (std::int64_t i = 0; i <= n; ++i) out.coeffs_[i] -= b.coeffs_[i];
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::int64_t n = std::min(a.order(), b.order());
    TruncatedSeries out(n);
    Rational tmp;
    for (std::int64_t i = 0; i <= n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::int64_t j = 0; i + j <= n; ++j) {
            if (b.coeffs_[j] == 0) continue;
            tmp = a.coeffs_[i] * b.coeffs_[j];
            out.coeffs_[i + j] += tmp;
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (coeffs_[0] == 0) throw std::domain_error("inverse of series with zero constant term");
    TruncatedSeries out(order());
    Rational c0_inv = 1 / coeffs_[0];
    out.coeffs_[0] = c0_inv;
    Rational acc;
    for (std::int64_t n = 1; n <= order(); ++n) {
        acc = 0;
        for (std::int64_t j = 1; j <= n; ++j) {
            if (coeffs_[j] == 0) continue;
            acc += coeffs_[j] * out.coeffs_[n - j];
        }
        out.coeffs_[n] = -c0_inv * acc;
    }
    return out;
}

TruncatedSeries TruncatedSeries::pow(const Rational& delta) const {
    if (coeffs_[0] != 1)
        throw std::domain_error("pow requires constant term 1");
    TruncatedSeries out(order());
    out.coeffs_[0] = 1;
    /* n F_n = sum_{i=1..n} (delta*i - (n-i)) a_i F_{n-i}, with a_0 = F_0 = 1. */
    Rational acc, w;
    for (std::int64_t n = 1; n <= order(); ++n) {
        acc = 0;
        for (std::int64_t i = 1; i <= n; ++i) {
            if (coeffs_[i] == 0) continue;
            w = delta * i - (n - i);
            acc += w * coeffs_[i] * out.coeffs_[n - i];
        }
        out.coeffs_[n] = acc / n;
    }
    return out;
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c == 0; });
}

Rational TruncatedSeries::max_abs_coeff() const {
    Rational m = 0;
    for (const auto& c : coeffs_) {
        Rational a = abs(c);
        if (a > m) m = a;
    }
    return m;
}

std::vector<SparseTerm> pentagonal_terms(std::int64_t modulus, std::int64_t order) {
    if (modulus < 1) throw std::domain_error("modulus must be >= 1");
    /* (q^m; q^m)_inf = sum_{l in Z} (-1)^l q^{m l(3l-1)/2} */
    std::vector<SparseTerm> terms{{0, 1}};
    for (std::int64_t l = 1;; ++l) {
        std::int64_t e1 = modulus * l * (3 * l - 1) / 2;
        std::int64_t e2 = modulus * l * (3 * l + 1) / 2;
        int s = (l % 2 == 0) ? 1 : -1;
        if (e1 > order) break;
        terms.push_back({e1, s});
        if (e2 <= order) terms.push_back({e2, s});
    }
    std::sort(terms.begin(), terms.end(),
              [](const SparseTerm& a, const SparseTerm& b) { return a.exponent < b.exponent; });
    return terms;
}

namespace {

/* dense * sparse, same order. */
TruncatedSeries mul_sparse(const TruncatedSeries& a, const std::vector<SparseTerm>& t) {
    TruncatedSeries out(a.order());
    for (const auto& [e, s] : t) {
        for (std::int64_t n = e; n <= a.order(); ++n) {
            if (a[n - e] == 0) continue;
            if (s > 0)
                out.coeff(n) += a[n - e];
            else
                out.coeff(n) -= a[n - e];
        }
    }
    return out;
}

/* dense / sparse; sparse terms must start with exponent 0, coefficient +1. */
TruncatedSeries div_sparse(const TruncatedSeries& a, const std::vector<SparseTerm>& t) {
    TruncatedSeries out(a.order());
    for (std::int64_t n = 0; n <= a.order(); ++n) {
        Rational acc = a[n];
        for (const auto& [e, s] : t) {
            if (e == 0) continue;
            if (e > n) break;
            if (s > 0)
                acc -= out[n - e];
            else
                acc += out[n - e];
        }
        out.coeff(n) = acc;
    }
    return out;
}

bool is_integral(const Rational& r) { return r.get_den() == 1; }

}  // namespace

TruncatedSeries expand_product(const EtaProduct& prod, std::int64_t order) {
    /* Moduli must be non-descending; repeats are merged by adding exponents,
     * so cancelling factor pairs behave as expected. */
    std::vector<EtaFactor> factors;
    for (const auto& f : prod.factors) {
        if (f.modulus < 1) throw std::domain_error("modulus must be >= 1");
        if (!factors.empty() && f.modulus < factors.back().modulus)
            throw std::domain_error("eta product moduli must be ascending");
        if (!factors.empty() && f.modulus == factors.back().modulus)
            factors.back().exponent += f.exponent;
        else
            factors.push_back(f);
    }
    TruncatedSeries result = TruncatedSeries::one(order);
    for (const auto& f : factors) {
        if (f.exponent == 0 || f.modulus > order) continue;
        auto terms = pentagonal_terms(f.modulus, order);
        if (is_integral(f.exponent)) {
            Integer e = f.exponent.get_num();
            for (Integer i = 0; i < abs(e); ++i)
                result = (e > 0) ? mul_sparse(result, terms) : div_sparse(result, terms);
        } else {
            TruncatedSeries base(order);
            for (const auto& [e, s] : terms) base.coeff(e) = s;
            result = result * base.pow(f.exponent);
        }
    }
    return result;
}

TruncatedSeries borwein_coefficients(std::int64_t p, const Rational& delta,
                                     std::int64_t order) {
    if (p < 2) throw std::domain_error("p must be >= 2");
    if (delta < 0) throw std::domain_error("delta must be >= 0");
    if (delta == 0) return TruncatedSeries::one(order);
    if (is_integral(delta))
        return expand_product({{{1, delta}, {p, -delta}}}, order);
    /* Rational exponent: expand the integer-exponent base once, then one pow. */
    TruncatedSeries base = expand_product({{{1, 1}, {p, -1}}}, order);
    return base.pow(delta);
}

TruncatedSeries partition_numbers(std::int64_t order) {
    TruncatedSeries p(order);
    p.coeff(0) = 1;
    auto terms = pentagonal_terms(1, order);
    for (std::int64_t n = 1; n <= order; ++n) {
        Rational acc = 0;
        for (const auto& [e, s] : terms) {
            if (e == 0) continue;
            if (e > n) break;
            if (s > 0)
                acc -= p[n - e];
            else
                acc += p[n - e];
        }
        p.coeff(n) = acc;
    }
    return p;
}

}  // namespace borwein
