#include "lpa/evolve.hpp"

namespace lpa {

namespace {

Int exact_int_divide(const Int& num, const Int& den, const std::string& where) {
    if (den == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        throw LaurentFalsified(where);
    }
    Int q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

std::vector<std::array<int, 2>> window_points(int arity, int r) {
    std::vector<std::array<int, 2>> pts;
    if (arity == 1) {
        pts.push_back({0, 0});
    } else if (arity == 2) {
        for (int j = -r; j <= r; ++j) pts.push_back({j, 0});
    } else {
        for (int j = -r; j <= r; ++j) {
            for (int k = -r; k <= r; ++k) pts.push_back({j, k});
        }
    }
    return pts;
}

}  // namespace

Recurrence recurrence_of(const SeedTemplate& t) {
    if (t.arity != 1) throw std::invalid_argument("recurrence_of: arity-1 templates only");
    return {t.rank, t.layers[0]};
}

LatticeEquation equation_of(const SeedTemplate& t) { return {t.arity, t.rho, t.layers[0]}; }

std::vector<Int> numeric_evolve(const Recurrence& r, const std::vector<Int>& initial, int steps) {
    if (static_cast<int>(initial.size()) != r.order) {
        throw std::invalid_argument("numeric_evolve: initial data must match the order");
    }
    std::vector<Int> window = initial;
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (int n = 0; n < steps; ++n) {
        std::map<VarKey, Int> vals;
        for (int j = 1; j < r.order; ++j) vals.emplace(var1(j), window[static_cast<std::size_t>(j)]);
        Int num = eval_int(r.rhs, vals);
        Int next = exact_int_divide(num, window.front(), "term " + std::to_string(r.order + n));
        window.erase(window.begin());
        window.push_back(next);
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<LaurentPoly> symbolic_evolve(const Recurrence& r, int depth, std::size_t budget) {
    std::vector<LaurentPoly> vals;
    vals.reserve(static_cast<std::size_t>(r.order + depth));
    for (int i = 0; i < r.order; ++i) vals.emplace_back(var1(i));
    for (int n = 0; n < depth; ++n) {
        std::map<VarKey, LaurentPoly> m;
        for (int j = 1; j < r.order; ++j) {
            m.emplace(var1(j), vals[static_cast<std::size_t>(n + j)]);
        }
        LaurentPoly num = eval_poly(r.rhs, m);
        if (num.term_count() > budget) throw BudgetExceeded(num.term_count(), budget);
        auto q = exact_divide(num, vals[static_cast<std::size_t>(n)]);
        if (!q) throw LaurentFalsified("term " + std::to_string(r.order + n));
        if (q->term_count() > budget) throw BudgetExceeded(q->term_count(), budget);
        vals.push_back(std::move(*q));
    }
    return vals;
}

std::vector<CellResidual> lattice_residual(const LatticeEquation& e,
                                           const std::map<VarKey, LaurentPoly>& values) {
    std::vector<CellResidual> out;
    for (const auto& [base, base_val] : values) {
        auto target = values.find(shifted(base, e.rho));
        if (target == values.end()) continue;
        std::map<VarKey, LaurentPoly> m;
        bool complete = true;
        for (const VarKey& u : support(e.rhs)) {
            auto it = values.find(shifted(u, base.idx));
            if (it == values.end()) {
                complete = false;
                break;
            }
            m.emplace(u, it->second);
        }
        if (!complete) continue;
        out.push_back({base, target->second * base_val - eval_poly(e.rhs, m)});
    }
    return out;
}

std::map<VarKey, Int> lattice_numeric_evolve(const SeedTemplate& t, int radius, const Int& init,
                                             int sweeps) {
    std::map<VarKey, Int> values;
    for (int i = 0; i < t.rank; ++i) {
        for (const auto& pt : window_points(t.arity, radius)) {
            values.emplace(site_var(t, i, pt), init);
        }
    }
    LatticeEquation eq = equation_of(t);
    std::set<VarKey> stencil = support(eq.rhs);
    for (int s = 0; s < sweeps; ++s) {
        for (const auto& pt : window_points(t.arity, radius)) {
            VarKey w = site_var(t, t.rank + s, pt);
            std::array<int, 3> back{-eq.rho[0], -eq.rho[1], -eq.rho[2]};
            VarKey base = shifted(w, back);
            auto bit = values.find(base);
            if (bit == values.end()) continue;
            std::map<VarKey, Int> m;
            bool complete = true;
            for (const VarKey& u : stencil) {
                auto it = values.find(shifted(u, base.idx));
                if (it == values.end()) {
                    complete = false;
                    break;
                }
                m.emplace(u, it->second);
            }
            if (!complete) continue;
            Int num = eval_int(eq.rhs, m);
            values.emplace(w, exact_int_divide(num, bit->second, "site of layer " +
                                                                     std::to_string(t.rank + s)));
        }
    }
    return values;
}

}  // namespace lpa
