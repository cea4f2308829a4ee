#include "lpa/seed.hpp"

#include <algorithm>

namespace lpa {

const SeedEntry* Seed::find(const VarKey& v) const {
    for (const auto& e : entries) {
        if (e.var == v) return &e;
    }
    return nullptr;
}

std::optional<std::size_t> Seed::position(const VarKey& v) const {
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].var == v) return i;
    }
    return std::nullopt;
}

namespace {

LaurentPoly derivative(const LaurentPoly& p, const VarKey& v) {
    LaurentPoly::TermMap t;
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(v);
        if (e == 0) continue;
        Monomial::Map mm = m.exponents();
        if (e == 1) {
            mm.erase(v);
        } else {
            mm[v] = e - 1;
        }
        t.emplace(Monomial(std::move(mm)), c * e);
    }
    return LaurentPoly::from_terms(std::move(t));
}

bool has_repeated_factor(const LaurentPoly& p) {
    for (const VarKey& v : support(p)) {
        LaurentPoly d = derivative(p, v);
        if (d.is_zero()) continue;
        LaurentPoly g = gcd(p, d);
        if (!strip_monomial(g).second.is_unit()) return true;
    }
    return false;
}

std::string var_name(const VarKey& v) {
    std::string s = "x[";
    for (int i = 0; i < v.arity; ++i) {
        if (i) s += ',';
        s += std::to_string(v.idx[i]);
    }
    s += ']';
    s.append(static_cast<std::size_t>(v.primes), '\'');
    return s;
}

}  // namespace

ValidationReport validate_seed(const Seed& s) {
    ValidationReport rep;
    auto flag = [&rep](std::size_t i, std::string check, std::string msg) {
        rep.issues.push_back({i, std::move(check), std::move(msg)});
    };
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        const SeedEntry& e = s.entries[i];
        if (e.var.arity != s.arity) {
            flag(i, "arity", var_name(e.var) + ": variable arity differs from seed arity");
            continue;
        }
        for (std::size_t j = i + 1; j < s.entries.size(); ++j) {
            if (s.entries[j].var == e.var) {
                flag(j, "duplicate", "duplicate cluster variable " + var_name(e.var));
            }
        }
        if (e.exch.is_zero()) {
            flag(i, "LP1/zero", var_name(e.var) + ": zero exchange polynomial");
            continue;
        }
        if (!e.exch.is_ordinary()) {
            flag(i, "LP1/laurent", var_name(e.var) + ": exchange polynomial has negative exponents");
        }
        if (depends_on(e.exch, e.var)) {
            flag(i, "LP2", var_name(e.var) + ": exchange polynomial depends on its own variable");
        }
        if (e.frozen) continue;
        if (content(e.exch) != 1) {
            flag(i, "LP1/content", var_name(e.var) + ": integer content is not +-1");
        }
        if (!strip_monomial(e.exch).first.is_identity()) {
            flag(i, "LP1/variable-divides",
                 var_name(e.var) + ": exchange polynomial divisible by a variable");
        }
        if (!e.exch.is_monomial() && has_repeated_factor(e.exch)) {
            flag(i, "LP1/repeated-factor",
                 var_name(e.var) + ": exchange polynomial has a repeated factor");
        }
        rep.uncertified.push_back(var_name(e.var) + ": irreducibility not certified");
    }
    return rep;
}

NormalizedExchange normalize_exchange(const Seed& s, const VarKey& k) {
    const SeedEntry* entry = s.find(k);
    if (!entry) throw std::invalid_argument("normalize_exchange: no such cluster variable");
    if (entry->frozen) throw std::invalid_argument("normalize_exchange: frozen variable");

    NormalizedExchange ne;
    ne.fhat = entry->exch;
    for (const VarKey& v : support(entry->exch)) {
        if (v == k) throw std::logic_error("normalize_exchange: LP2 violation");
        const SeedEntry* other = s.find(v);
        if (!other) {
            throw std::invalid_argument("normalize_exchange: exchange polynomial references " +
                                        var_name(v) + " which has no seed entry");
        }
        auto [q, e] = eval_at_quotient(entry->exch, v, other->exch);
        if (e > 0) ne.exponents.emplace(v, -e);
        // Re-check: the leftover must not be divisible by F_v.
        if (exact_divide(q, other->exch)) {
            throw std::logic_error("normalize_exchange: divisibility re-check failed at " +
                                   var_name(v));
        }
    }
    for (const auto& [v, a] : ne.exponents) {
        ne.fhat = ne.fhat * LaurentPoly(VarKey(v), a);
    }
    return ne;
}

ExchangeUpdate transform_exchange(const LaurentPoly& f, const LaurentPoly& fhat,
                                  const VarKey& k, const VarKey& self,
                                  const VarKey& new_key) {
    // F depends on x_k, hence a_self = 0 and the x_self <- 0 slice exists.
    LaurentPoly numer = substitute_zero(fhat, self);
    if (numer.is_zero()) {
        throw std::logic_error("mutation: fhat vanishes at " + var_name(self) +
                               " = 0 (LP1 violation)");
    }
    ExchangeUpdate upd;
    upd.var = self;
    upd.g = substitute(f, k, numer * LaurentPoly(new_key, -1));

    LaurentPoly h = upd.g;
    for (;;) {
        LaurentPoly d = strip_monomial(gcd(h, numer)).second;
        if (d.is_unit()) break;
        h = *exact_divide(h, d);
    }
    upd.h = h;
    auto [mono, stripped] = strip_monomial(h);
    upd.m = mono.inverse();
    upd.f_new = stripped;
    if (depends_on(upd.f_new, self)) {
        throw std::logic_error("mutation step 6: new exchange polynomial depends on " +
                               var_name(self));
    }
    if (!depends_on(upd.f_new, new_key)) {
        throw std::logic_error("mutation: dependence on the mutated variable was lost");
    }
    return upd;
}

std::pair<Seed, MutationTrace> mutate(const Seed& s, const VarKey& k,
                                      std::optional<VarKey> relabel) {
    auto pos = s.position(k);
    if (!pos) throw std::invalid_argument("mutate: no such cluster variable");
    if (s.entries[*pos].frozen) throw std::invalid_argument("mutate: variable is frozen");

    VarKey new_key = relabel.value_or([&] {
        VarKey primed = k;
        ++primed.primes;
        return primed;
    }());
    if (s.find(new_key)) {
        throw std::invalid_argument("mutate: relabel key " + var_name(new_key) +
                                    " already present in the seed");
    }

    MutationTrace trace;
    trace.at = k;
    trace.new_var = new_key;
    trace.fhat = normalize_exchange(s, k);
    trace.new_var_value = trace.fhat.fhat * LaurentPoly(k, -1);

    Seed out;
    out.arity = s.arity;
    out.entries.reserve(s.entries.size());
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        const SeedEntry& e = s.entries[i];
        if (i == *pos) {
            out.entries.push_back({new_key, e.exch, e.frozen});
        } else if (!depends_on(e.exch, k)) {
            out.entries.push_back(e);
        } else {
            ExchangeUpdate upd = transform_exchange(e.exch, trace.fhat.fhat, k, e.var, new_key);
            out.entries.push_back({e.var, upd.f_new, e.frozen});
            trace.updates.push_back(std::move(upd));
        }
    }
    return {std::move(out), std::move(trace)};
}

Period1Result detect_period1(const Seed& s) {
    if (s.arity != 1) throw std::invalid_argument("detect_period1: arity-1 seeds only");
    if (s.entries.empty()) throw std::invalid_argument("detect_period1: empty seed");
    const int base = s.entries.front().var.idx[0];
    const int rank = static_cast<int>(s.entries.size());
    for (int i = 0; i < rank; ++i) {
        const SeedEntry& e = s.entries[static_cast<std::size_t>(i)];
        if (e.frozen) throw std::invalid_argument("detect_period1: frozen entries not allowed");
        if (e.var != var1(base + i)) {
            throw std::invalid_argument("detect_period1: variables must be consecutive");
        }
    }
    auto [mutated, trace] = mutate(s, var1(base), var1(base + rank));

    const std::array<int, 3> unit{1, 0, 0};
    Period1Result res;
    res.periodic = true;
    for (int i = 0; i < rank; ++i) {
        const LaurentPoly& prev = s.entries[static_cast<std::size_t>((i + rank - 1) % rank)].exch;
        LaurentPoly expected = shift_indices(prev, unit);
        if (mutated.entries[static_cast<std::size_t>(i)].exch != expected) {
            res.periodic = false;
            res.witness = "entry " + std::to_string(i) + " (" +
                          var_name(mutated.entries[static_cast<std::size_t>(i)].var) +
                          "): exchange polynomial differs from the shifted seed";
            break;
        }
    }
    return res;
}

std::vector<std::size_t> dependence_closure(const Seed& s, const VarKey& k) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < s.entries.size(); ++i) {
        if (depends_on(s.entries[i].exch, k)) out.push_back(i);
    }
    return out;
}

}  // namespace lpa
