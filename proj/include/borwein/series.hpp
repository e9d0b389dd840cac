#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "borwein/rational.hpp"

namespace borwein {

/* Exact power series over Rational, truncated at a fixed order: coefficients
 * of q^n for n <= order are exact, everything above is unknown. Every binary
 * operation truncates to the smaller order of its inputs. */
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::int64_t order)
        : coeffs_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw std::domain_error("series order must be >= 0");
    }

    static TruncatedSeries one(std::int64_t order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }

    static TruncatedSeries from_coeffs(std::vector<Rational> coeffs) {
        if (coeffs.empty()) throw std::domain_error("series needs a constant term");
        TruncatedSeries s(static_cast<std::int64_t>(coeffs.size()) - 1);
        s.coeffs_ = std::move(coeffs);
        return s;
    }

    std::int64_t order() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

    const Rational& operator[](std::int64_t n) const {
        return coeffs_[static_cast<std::size_t>(n)];
    }
    Rational& coeff(std::int64_t n) { return coeffs_[static_cast<std::size_t>(n)]; }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    TruncatedSeries truncated(std::int64_t new_order) const;

    /* Multiplication by q^k (coefficients above the order fall off). */
    TruncatedSeries shifted(std::int64_t k) const;

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const Rational& c);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    /* Reciprocal; requires a nonzero constant term. */
    TruncatedSeries inverse() const;

    /* this^delta for rational delta, via the coefficient recurrence of
     * a*F' = delta*a'*F. Requires constant term exactly 1. */
    TruncatedSeries pow(const Rational& delta) const;

    bool operator==(const TruncatedSeries&) const = default;

    bool is_zero() const;
    Rational max_abs_coeff() const;

private:
    std::vector<Rational> coeffs_;
};

/* One pentagonal-number-theorem term of (q^m; q^m)_inf: exponent and sign. */
struct SparseTerm {
    std::int64_t exponent;
    int sign;
};

/* Nonzero terms of (q^m; q^m)_inf up to the given order,
 * sorted by ascending exponent. The constant term 1 is included. */
std::vector<SparseTerm> pentagonal_terms(std::int64_t modulus, std::int64_t order);

/* Product of factors (1 - q^{m n})^e over n >= 1, one factor spec per modulus. */
struct EtaFactor {
    std::int64_t modulus = 1;
    Rational exponent;
};

struct EtaProduct {
    std::vector<EtaFactor> factors;  // moduli distinct, ascending
};

/* Exact expansion of an EtaProduct to the given order. Integer exponents go
 * through the sparse pentagonal expansion, rational ones through pow(). */
TruncatedSeries expand_product(const EtaProduct& prod, std::int64_t order);

/* Coefficients of G_p(q)^delta = (f(q^p)/f(q))^delta, exact.
 * p >= 2 need not be prime. delta = 0 yields the constant series 1. */
TruncatedSeries borwein_coefficients(std::int64_t p, const Rational& delta,
                                     std::int64_t order);

/* p(0..order) via the pentagonal recurrence. */
TruncatedSeries partition_numbers(std::int64_t order);

}  // namespace borwein
