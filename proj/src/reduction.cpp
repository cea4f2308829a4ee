#include "lpa/reduction.hpp"

#include <stdexcept>

namespace lpa {

VarKey apply_reduction(const ReductionMap& r, const VarKey& v) {
    if (v.arity != r.arity_from) throw std::invalid_argument("apply_reduction: arity mismatch");
    VarKey out;
    out.arity = r.arity_to;
    out.idx = {0, 0, 0};
    out.primes = v.primes;
    for (int c = 0; c < r.arity_to; ++c) {
        int s = 0;
        for (int d = 0; d < r.arity_from; ++d) {
            s += r.matrix[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)] *
                 v.idx[static_cast<std::size_t>(d)];
        }
        out.idx[static_cast<std::size_t>(c)] = s;
    }
    return out;
}

LaurentPoly apply_reduction(const ReductionMap& r, const LaurentPoly& p) {
    LaurentPoly out;
    for (const auto& [m, c] : p.terms()) {
        Monomial::Map exps;
        for (const auto& [v, e] : m.exponents()) {
            VarKey w = apply_reduction(r, v);
            int& slot = exps[w];
            slot += e;
            if (slot == 0) exps.erase(w);
        }
        out += LaurentPoly(Monomial(std::move(exps)), c);
    }
    return out;
}

ReductionMap compose(const ReductionMap& r2, const ReductionMap& r1) {
    if (r1.arity_to != r2.arity_from) throw std::invalid_argument("compose: arity mismatch");
    ReductionMap out;
    out.name = r2.name + ";" + r1.name;
    out.arity_from = r1.arity_from;
    out.arity_to = r2.arity_to;
    for (int c = 0; c < out.arity_to; ++c) {
        for (int d = 0; d < out.arity_from; ++d) {
            int s = 0;
            for (int k = 0; k < r1.arity_to; ++k) {
                s += r2.matrix[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)] *
                     r1.matrix[static_cast<std::size_t>(k)][static_cast<std::size_t>(d)];
            }
            out.matrix[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)] = s;
        }
    }
    return out;
}

ReductionResult verify_reduction(const ReductionMap& r, const SeedTemplate& from,
                                 const SeedTemplate& to) {
    ReductionResult res;
    auto problem = [&res](std::string msg) {
        res.ok = false;
        res.problems.push_back(std::move(msg));
    };
    if (r.arity_from != from.arity || r.arity_to != to.arity) {
        problem("arity mismatch between map and templates");
        return res;
    }
    if (from.rank != to.rank) {
        problem("rank mismatch: " + std::to_string(from.rank) + " vs " + std::to_string(to.rank));
        return res;
    }
    for (int c = 0; c < from.arity; ++c) {
        VarKey e;
        e.arity = from.arity;
        e.idx = {0, 0, 0};
        e.idx[static_cast<std::size_t>(c)] = 1;
        if (lambda_of(to, apply_reduction(r, e)) != lambda_of(from, e)) {
            problem("map does not preserve the layer grading");
            break;
        }
    }
    VarKey rho;
    rho.arity = from.arity;
    rho.idx = from.rho;
    VarKey rho_img = apply_reduction(r, rho);
    for (int c = 0; c < to.arity; ++c) {
        if (rho_img.idx[static_cast<std::size_t>(c)] != to.rho[static_cast<std::size_t>(c)]) {
            problem("map does not carry the relabel shift onto the target one");
            break;
        }
    }
    for (int i = 0; i < from.rank; ++i) {
        LaurentPoly expected = apply_reduction(r, from.layers[static_cast<std::size_t>(i)]);
        const LaurentPoly& actual = to.layers[static_cast<std::size_t>(i)];
        if (expected != actual) {
            res.ok = false;
            res.diffs.push_back({i, std::move(expected), actual});
        }
    }
    return res;
}

ReductionMap make_reduction(const std::string& name) {
    ReductionMap r;
    r.name = name;
    if (name == "reduction1") {  // (n,m,l) -> (n+l, m+l)
        r.arity_from = 3;
        r.arity_to = 2;
        r.matrix = {{{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}};
    } else if (name == "reduction2") {  // (n,m) -> (n+2m)
        r.arity_from = 2;
        r.arity_to = 1;
        r.matrix = {{{1, 2, 0}, {0, 0, 0}, {0, 0, 0}}};
    } else if (name == "reduction3") {  // (n,m,l) -> (n+2l, m)
        r.arity_from = 3;
        r.arity_to = 2;
        r.matrix = {{{1, 0, 2}, {0, 1, 0}, {0, 0, 0}}};
    } else if (name == "reduction4") {  // (n,m) -> (n+4m)
        r.arity_from = 2;
        r.arity_to = 1;
        r.matrix = {{{1, 4, 0}, {0, 0, 0}, {0, 0, 0}}};
    } else {
        throw std::invalid_argument("unknown reduction: " + name);
    }
    return r;
}

std::vector<std::string> reduction_names() {
    return {"reduction1", "reduction2", "reduction3", "reduction4"};
}

}  // namespace lpa
