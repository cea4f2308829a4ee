#include "lpa/laurent.hpp"

#include <algorithm>
#include <vector>

namespace lpa {

VarKey var1(int n) { return VarKey{1, {n, 0, 0}, 0}; }
VarKey var2(int n, int m) { return VarKey{2, {n, m, 0}, 0}; }
VarKey var3(int n, int m, int l) { return VarKey{3, {n, m, l}, 0}; }

Monomial::Monomial(Map exps) : exps_(std::move(exps)) {
    for (auto it = exps_.begin(); it != exps_.end();) {
        it = it->second == 0 ? exps_.erase(it) : std::next(it);
    }
}

int Monomial::exponent(const VarKey& v) const {
    auto it = exps_.find(v);
    return it == exps_.end() ? 0 : it->second;
}

long Monomial::total_degree() const {
    long d = 0;
    for (const auto& [v, e] : exps_) d += e;
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Map m = exps_;
    for (const auto& [v, e] : o.exps_) {
        int& slot = m[v];
        slot += e;
        if (slot == 0) m.erase(v);
    }
    Monomial r;
    r.exps_ = std::move(m);
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const { return *this * o.inverse(); }

Monomial Monomial::inverse() const {
    Map m;
    for (const auto& [v, e] : exps_) m.emplace(v, -e);
    Monomial r;
    r.exps_ = std::move(m);
    return r;
}

Monomial Monomial::pow(int e) const {
    Map m;
    if (e != 0) {
        for (const auto& [v, x] : exps_) m.emplace(v, x * e);
    }
    Monomial r;
    r.exps_ = std::move(m);
    return r;
}

int compare_monomials(const Monomial& a, const Monomial& b) {
    long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    auto ia = a.exponents().begin(), ea = a.exponents().end();
    auto ib = b.exponents().begin(), eb = b.exponents().end();
    while (ia != ea || ib != eb) {
        // Missing keys carry exponent 0.
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            if (ia->second != 0) return ia->second > 0 ? 1 : -1;
            ++ia;
        } else if (ia == ea || ib->first < ia->first) {
            if (ib->second != 0) return ib->second > 0 ? -1 : 1;
            ++ib;
        } else {
            if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
            ++ia;
            ++ib;
        }
    }
    return 0;
}

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.emplace(Monomial{}, Int(c));
}

LaurentPoly::LaurentPoly(const Int& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

LaurentPoly::LaurentPoly(const VarKey& v, int exp) {
    Monomial::Map m;
    if (exp != 0) m.emplace(v, exp);
    terms_.emplace(Monomial(std::move(m)), Int(1));
}

LaurentPoly::LaurentPoly(const Monomial& m, Int coeff) {
    if (coeff != 0) terms_.emplace(m, std::move(coeff));
}

LaurentPoly LaurentPoly::from_terms(TermMap terms) {
    LaurentPoly p;
    for (auto it = terms.begin(); it != terms.end();) {
        it = it->second == 0 ? terms.erase(it) : std::next(it);
    }
    p.terms_ = std::move(terms);
    return p;
}

bool LaurentPoly::is_unit() const {
    if (terms_.size() != 1) return false;
    const Int& c = terms_.begin()->second;
    return c == 1 || c == -1;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_identity());
}

const Int& LaurentPoly::constant_value() const {
    static const Int zero(0);
    if (terms_.empty()) return zero;
    if (!is_constant()) throw std::logic_error("constant_value: polynomial is not constant");
    return terms_.begin()->second;
}

bool LaurentPoly::is_ordinary() const {
    for (const auto& [m, c] : terms_) {
        for (const auto& [v, e] : m.exponents()) {
            if (e < 0) return false;
        }
    }
    return true;
}

const Monomial& LaurentPoly::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading_monomial: zero polynomial");
    return terms_.begin()->first;
}

const Int& LaurentPoly::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("leading_coefficient: zero polynomial");
    return terms_.begin()->second;
}

LaurentPoly LaurentPoly::operator-() const {
    TermMap t = terms_;
    for (auto& [m, c] : t) c = -c;
    LaurentPoly p;
    p.terms_ = std::move(t);
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_same_arity(*this, o);
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_same_arity(*this, o);
    TermMap t;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma * mb;
            auto [it, inserted] = t.try_emplace(m, ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) t.erase(it);
            }
        }
    }
    LaurentPoly r;
    r.terms_ = std::move(t);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly pow(const LaurentPoly& p, int e) {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    LaurentPoly r(1);
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

int arity_of(const LaurentPoly& p) {
    int arity = 0;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [v, e] : m.exponents()) {
            if (arity == 0) {
                arity = v.arity;
            } else if (arity != v.arity) {
                throw std::invalid_argument("mixed index arities in one polynomial");
            }
        }
    }
    return arity;
}

void check_same_arity(const LaurentPoly& p, const LaurentPoly& q) {
    int a = arity_of(p), b = arity_of(q);
    if (a != 0 && b != 0 && a != b) {
        throw std::invalid_argument("index arity mismatch between operands");
    }
}

std::set<VarKey> support(const LaurentPoly& p) {
    std::set<VarKey> s;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [v, e] : m.exponents()) s.insert(v);
    }
    return s;
}

bool depends_on(const LaurentPoly& p, const VarKey& v) {
    for (const auto& [m, c] : p.terms()) {
        if (m.exponent(v) != 0) return true;
    }
    return false;
}

Int content(const LaurentPoly& p) {
    Int g(0);
    for (const auto& [m, c] : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

std::pair<Monomial, LaurentPoly> strip_monomial(const LaurentPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("strip_monomial: zero polynomial");
    // Per-variable minimum exponent over all terms; a variable absent from
    // some term has minimum <= 0 there.
    std::map<VarKey, int> mins;
    for (const VarKey& v : support(p)) {
        int lo = 0;
        bool first = true;
        for (const auto& [m, c] : p.terms()) {
            int e = m.exponent(v);
            lo = first ? e : std::min(lo, e);
            first = false;
        }
        if (lo != 0) mins.emplace(v, lo);
    }
    Monomial mono{Monomial::Map(mins.begin(), mins.end())};
    Monomial inv = mono.inverse();
    LaurentPoly::TermMap t;
    for (const auto& [m, c] : p.terms()) t.emplace(m * inv, c);
    return {mono, LaurentPoly::from_terms(std::move(t))};
}

namespace {

// Exact division of monomial-stripped ordinary polynomials by greedy
// leading-term elimination; the quotient of stripped parts is itself
// ordinary, so a leading-term mismatch proves indivisibility.
std::optional<LaurentPoly> ordinary_exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    LaurentPoly::TermMap qt;
    const Monomial& lb = b.leading_monomial();
    const Int& cb = b.leading_coefficient();
    while (!r.is_zero()) {
        Monomial q = r.leading_monomial() / lb;
        for (const auto& [v, e] : q.exponents()) {
            if (e < 0) return std::nullopt;
        }
        Int cq = r.leading_coefficient() / cb;
        if (cq * cb != r.leading_coefficient()) return std::nullopt;
        qt.emplace(q, cq);
        r -= LaurentPoly(q, cq) * b;
    }
    return LaurentPoly::from_terms(std::move(qt));
}

}  // namespace

std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LaurentPoly& d) {
    if (d.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
    if (p.is_zero()) return LaurentPoly();
    auto [mp, sp] = strip_monomial(p);
    auto [md, sd] = strip_monomial(d);
    auto q = ordinary_exact_divide(sp, sd);
    if (!q) return std::nullopt;
    return LaurentPoly(mp / md, Int(1)) * *q;
}

int multiplicity(const LaurentPoly& p, const LaurentPoly& f) {
    if (p.is_zero()) throw std::invalid_argument("multiplicity: zero polynomial");
    if (f.is_zero() || f.is_monomial()) {
        throw std::invalid_argument("multiplicity: factor must not be a unit");
    }
    int e = 0;
    LaurentPoly cur = p;
    while (auto q = exact_divide(cur, f)) {
        cur = std::move(*q);
        ++e;
    }
    return e;
}

namespace {

LaurentPoly sign_normalized(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    return p.leading_coefficient() < 0 ? -p : p;
}

// --- primitive PRS gcd over Z on ordinary polynomials ---

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

int degree_in(const LaurentPoly& p, const VarKey& v) {
    int d = 0;
    for (const auto& [m, c] : p.terms()) d = std::max(d, m.exponent(v));
    return d;
}

// View as univariate in v: coefficient polynomial of v^e.
LaurentPoly coeff_of(const LaurentPoly& p, const VarKey& v, int e) {
    LaurentPoly::TermMap t;
    for (const auto& [m, c] : p.terms()) {
        if (m.exponent(v) == e) {
            Monomial::Map mm = m.exponents();
            mm.erase(v);
            t.emplace(Monomial(std::move(mm)), c);
        }
    }
    return LaurentPoly::from_terms(std::move(t));
}

LaurentPoly times_power(const LaurentPoly& p, const VarKey& v, int e) {
    Monomial::Map mm;
    if (e != 0) mm.emplace(v, e);
    return p * LaurentPoly(Monomial(std::move(mm)), Int(1));
}

// Content with respect to v: gcd of the univariate coefficients.
LaurentPoly content_wrt(const LaurentPoly& p, const VarKey& v) {
    LaurentPoly g;
    for (int e = 0; e <= degree_in(p, v); ++e) {
        LaurentPoly c = coeff_of(p, v, e);
        if (c.is_zero()) continue;
        g = g.is_zero() ? sign_normalized(c) : poly_gcd(g, c);
        if (g.is_constant() && g.constant_value() == 1) break;
    }
    return g;
}

LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b, const VarKey& v) {
    int db = degree_in(b, v);
    LaurentPoly lb = coeff_of(b, v, db);
    while (!a.is_zero()) {
        int da = degree_in(a, v);
        if (da < db) break;
        LaurentPoly la = coeff_of(a, v, da);
        a = a * lb - times_power(la, v, da - db) * b;
    }
    return a;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return sign_normalized(b);
    if (b.is_zero()) return sign_normalized(a);
    if (a.is_constant() && b.is_constant()) {
        Int g;
        mpz_gcd(g.get_mpz_t(), a.constant_value().get_mpz_t(), b.constant_value().get_mpz_t());
        return LaurentPoly(g);
    }
    std::set<VarKey> vars = support(a);
    std::set<VarKey> vb = support(b);
    vars.insert(vb.begin(), vb.end());
    VarKey v = *vars.begin();

    LaurentPoly ca = content_wrt(a, v);
    LaurentPoly cb = content_wrt(b, v);
    LaurentPoly cg = poly_gcd(ca, cb);
    LaurentPoly pa = *exact_divide(a, ca);
    LaurentPoly pb = *exact_divide(b, cb);
    if (degree_in(pa, v) < degree_in(pb, v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        LaurentPoly r = pseudo_remainder(pa, pb, v);
        pa = std::move(pb);
        if (r.is_zero()) {
            pb = LaurentPoly();
        } else {
            LaurentPoly cr = content_wrt(r, v);
            pb = *exact_divide(r, cr);
        }
    }
    LaurentPoly prim = *exact_divide(pa, content_wrt(pa, v));
    return sign_normalized(cg * prim);
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
    if (p.is_zero()) return sign_normalized(q);
    if (q.is_zero()) return sign_normalized(p);
    check_same_arity(p, q);
    auto [mp, sp] = strip_monomial(p);
    auto [mq, sq] = strip_monomial(q);
    Monomial::Map mins;
    for (const auto& [v, e] : mp.exponents()) mins.emplace(v, std::min(e, mq.exponent(v)));
    for (const auto& [v, e] : mq.exponents()) {
        if (!mp.exponents().count(v)) mins.emplace(v, std::min(e, 0));
    }
    LaurentPoly mono(Monomial(std::move(mins)), Int(1));
    return sign_normalized(mono * poly_gcd(sp, sq));
}

LaurentPoly substitute(const LaurentPoly& p, const VarKey& v, const LaurentPoly& r) {
    bool negative = false;
    for (const auto& [m, c] : p.terms()) {
        if (m.exponent(v) < 0) negative = true;
    }
    LaurentPoly rinv;
    if (negative) {
        if (!r.is_unit()) {
            throw std::invalid_argument(
                "substitute: negative exponent requires a unit monomial replacement");
        }
        rinv = LaurentPoly(r.leading_monomial().inverse(), r.leading_coefficient());
    }
    std::map<int, LaurentPoly> powers;  // cache of r^e / rinv^{-e}
    LaurentPoly out;
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(v);
        Monomial::Map rest = m.exponents();
        rest.erase(v);
        LaurentPoly base(Monomial(std::move(rest)), c);
        if (e == 0) {
            out += base;
            continue;
        }
        auto it = powers.find(e);
        if (it == powers.end()) {
            LaurentPoly pw = e > 0 ? pow(r, e) : pow(rinv, -e);
            it = powers.emplace(e, std::move(pw)).first;
        }
        out += base * it->second;
    }
    return out;
}

LaurentPoly substitute_zero(const LaurentPoly& p, const VarKey& v) {
    LaurentPoly::TermMap t;
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(v);
        if (e < 0) throw std::invalid_argument("substitute_zero: negative exponent");
        if (e == 0) t.emplace(m, c);
    }
    return LaurentPoly::from_terms(std::move(t));
}

LaurentPoly shift_indices(const LaurentPoly& p, const std::array<int, 3>& delta) {
    LaurentPoly::TermMap t;
    for (const auto& [m, c] : p.terms()) {
        Monomial::Map mm;
        for (const auto& [v, e] : m.exponents()) {
            VarKey w = v;
            for (int i = 0; i < v.arity; ++i) w.idx[i] += delta[i];
            mm.emplace(w, e);
        }
        t.emplace(Monomial(std::move(mm)), c);
    }
    return LaurentPoly::from_terms(std::move(t));
}

std::pair<LaurentPoly, int> eval_at_quotient(const LaurentPoly& p, const VarKey& v,
                                             const LaurentPoly& f) {
    if (f.is_zero() || f.is_monomial()) {
        throw std::invalid_argument("eval_at_quotient: f must not be zero or a unit");
    }
    LaurentPoly substituted;
    std::map<int, LaurentPoly> fpowers;
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(v);
        if (e < 0) throw std::invalid_argument("eval_at_quotient: negative exponent in v");
        Monomial::Map rest = m.exponents();
        rest.erase(v);
        if (e != 0) rest.emplace(v, -e);
        LaurentPoly base(Monomial(std::move(rest)), c);
        if (e == 0) {
            substituted += base;
        } else {
            auto it = fpowers.find(e);
            if (it == fpowers.end()) it = fpowers.emplace(e, pow(f, e)).first;
            substituted += base * it->second;
        }
    }
    int e = multiplicity(substituted, f);
    LaurentPoly q = substituted;
    for (int i = 0; i < e; ++i) q = *exact_divide(q, f);
    return {q, e};
}

QuotientForm make_quotient_form(const LaurentPoly& numerator, const LaurentPoly& base) {
    if (base.is_monomial()) throw std::invalid_argument("QuotientForm: base must not be a monomial");
    if (exact_divide(numerator, base)) {
        throw std::invalid_argument("QuotientForm: base divides numerator");
    }
    return QuotientForm{numerator, base, 0};
}

Int eval_int(const LaurentPoly& p, const std::map<VarKey, Int>& values) {
    if (p.is_zero()) return Int(0);
    auto [mono, stripped] = strip_monomial(p);
    Int sum(0);
    for (const auto& [m, c] : stripped.terms()) {
        Int t = c;
        for (const auto& [v, e] : m.exponents()) {
            auto it = values.find(v);
            if (it == values.end()) throw std::domain_error("eval_int: missing variable value");
            for (int i = 0; i < e; ++i) t *= it->second;
        }
        sum += t;
    }
    for (const auto& [v, e] : mono.exponents()) {
        auto it = values.find(v);
        if (it == values.end()) throw std::domain_error("eval_int: missing variable value");
        for (int i = 0; i < e; ++i) sum *= it->second;
        for (int i = 0; i > e; --i) {
            if (it->second == 0) throw std::domain_error("eval_int: division by zero");
            Int q = sum / it->second;
            if (q * it->second != sum) throw std::domain_error("eval_int: inexact division");
            sum = q;
        }
    }
    return sum;
}

LaurentPoly eval_poly(const LaurentPoly& p, const std::map<VarKey, LaurentPoly>& values) {
    LaurentPoly out;
    for (const auto& [m, c] : p.terms()) {
        LaurentPoly t(c);
        for (const auto& [v, e] : m.exponents()) {
            auto it = values.find(v);
            if (it == values.end()) throw std::domain_error("eval_poly: missing variable value");
            if (e < 0) throw std::invalid_argument("eval_poly: negative exponent");
            t *= pow(it->second, e);
        }
        out += t;
    }
    return out;
}

}  // namespace lpa
