#pragma once

// Sparse multivariate Laurent polynomials with exact integer coefficients.
// Values are immutable in spirit: every operation returns a new polynomial
// and never mutates its arguments.

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace lpa {

using Int = mpz_class;

// Indexed variable x[n], x[n,m] or x[n,m,l]. The index arity is fixed per
// seed context; `primes` distinguishes automatically generated fresh keys
// (printed as x'[...]) from lattice variables.
struct VarKey {
    int arity = 1;
    std::array<int, 3> idx{0, 0, 0};
    int primes = 0;

    friend auto operator<=>(const VarKey&, const VarKey&) = default;
};

VarKey var1(int n);
VarKey var2(int n, int m);
VarKey var3(int n, int m, int l);

// Exponent map with no zero entries; the empty map is the identity.
class Monomial {
public:
    using Map = std::map<VarKey, int>;

    Monomial() = default;
    explicit Monomial(Map exps);

    const Map& exponents() const { return exps_; }
    bool is_identity() const { return exps_.empty(); }
    int exponent(const VarKey& v) const;
    long total_degree() const;

    Monomial operator*(const Monomial& o) const;
    Monomial operator/(const Monomial& o) const;
    Monomial inverse() const;
    Monomial pow(int e) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    Map exps_;
};

// Graded-lexicographic term order: total degree first, then exponents
// compared along the VarKey order. Fixes canonical printing, leading
// terms and gcd sign normalization.
int compare_monomials(const Monomial& a, const Monomial& b);

struct TermOrderGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compare_monomials(a, b) > 0;
    }
};

class LaurentPoly {
public:
    using TermMap = std::map<Monomial, Int, TermOrderGreater>;

    LaurentPoly() = default;
    LaurentPoly(long c);                      // NOLINT(google-explicit-constructor)
    LaurentPoly(const Int& c);                // NOLINT(google-explicit-constructor)
    explicit LaurentPoly(const VarKey& v, int exp = 1);
    LaurentPoly(const Monomial& m, Int coeff);

    static LaurentPoly from_terms(TermMap terms);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_monomial() const { return terms_.size() == 1; }
    // Unit of the Laurent ring: +-1 times a monomial.
    bool is_unit() const;
    bool is_constant() const;
    const Int& constant_value() const;

    // True when no exponent is negative, i.e. an ordinary polynomial.
    bool is_ordinary() const;

    // Leading term under the graded-lex order.
    const Monomial& leading_monomial() const;
    const Int& leading_coefficient() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    TermMap terms_;
};

LaurentPoly pow(const LaurentPoly& p, int e);  // e >= 0

// Index arity of the variables of p, or 0 when p is constant.
// Throws on mixed arities.
int arity_of(const LaurentPoly& p);
void check_same_arity(const LaurentPoly& p, const LaurentPoly& q);

std::set<VarKey> support(const LaurentPoly& p);
bool depends_on(const LaurentPoly& p, const VarKey& v);

// gcd of the integer coefficients (positive; 0 for the zero polynomial).
Int content(const LaurentPoly& p);

// p = m * q with q an ordinary polynomial attaining exponent 0 in each of
// its variables. p must be nonzero.
std::pair<Monomial, LaurentPoly> strip_monomial(const LaurentPoly& p);

// Quotient p/d in the Laurent ring, or nullopt when d does not divide p.
// Monomial factors of d never obstruct. d must be nonzero.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LaurentPoly& d);

// Largest e with f^e | p. p nonzero, f not a unit.
int multiplicity(const LaurentPoly& p, const LaurentPoly& f);

// gcd of the monomial-stripped parts over Z (primitive PRS), times the gcd
// of the monomial parts, normalized to positive leading coefficient.
// Not both arguments may be zero.
LaurentPoly gcd(const LaurentPoly& p, const LaurentPoly& q);

// Every occurrence of v replaced by r. If p carries negative exponents of
// v, r must be a unit monomial.
LaurentPoly substitute(const LaurentPoly& p, const VarKey& v, const LaurentPoly& r);

// p|_{v <- 0}; p must have nonnegative exponents in v.
LaurentPoly substitute_zero(const LaurentPoly& p, const VarKey& v);

// All variable indices shifted by delta (first `arity` components used).
LaurentPoly shift_indices(const LaurentPoly& p, const std::array<int, 3>& delta);

// p|_{v <- f/v} split as Q * f^e with f not dividing Q.
// p must have nonnegative exponents in v; f nonzero and not a unit.
std::pair<LaurentPoly, int> eval_at_quotient(const LaurentPoly& p, const VarKey& v,
                                             const LaurentPoly& f);

// numerator * base^(-exponent) with base not a monomial and not dividing
// the numerator. Used to hold substituted values F|_{x <- F_j/x_j} before
// the divisibility exponent is extracted.
struct QuotientForm {
    LaurentPoly numerator;
    LaurentPoly base;
    int exponent = 0;
};

QuotientForm make_quotient_form(const LaurentPoly& numerator, const LaurentPoly& base);

// Exact integer evaluation. Monomial parts with negative exponents are
// divided out at the end; throws std::domain_error if a division is
// inexact or a divisor is zero.
Int eval_int(const LaurentPoly& p, const std::map<VarKey, Int>& values);

// Polynomial composition; p must be ordinary in every substituted variable.
LaurentPoly eval_poly(const LaurentPoly& p, const std::map<VarKey, LaurentPoly>& values);

}  // namespace lpa
