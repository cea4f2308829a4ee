#pragma once

// Seeds and the six-step mutation, with inspectable intermediates.

#include <optional>
#include <string>
#include <vector>

#include "lpa/laurent.hpp"

namespace lpa {

struct SeedEntry {
    VarKey var;
    LaurentPoly exch;
    bool frozen = false;

    friend bool operator==(const SeedEntry&, const SeedEntry&) = default;
};

// Ordered list of (cluster variable, exchange polynomial) pairs. Frozen
// entries mark window-boundary variables whose exchange polynomial
// references variables outside the seed; they may never be mutated.
struct Seed {
    std::vector<SeedEntry> entries;
    int arity = 1;

    const SeedEntry* find(const VarKey& v) const;
    std::optional<std::size_t> position(const VarKey& v) const;

    friend bool operator==(const Seed&, const Seed&) = default;
};

struct ValidationIssue {
    std::size_t entry = 0;
    std::string check;    // e.g. "LP2", "LP1/variable-divides"
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    // Full irreducibility is not decided; only necessary conditions are.
    std::vector<std::string> uncertified;

    bool ok() const { return issues.empty(); }
};

// Checks LP2 exactly and the decidable parts of LP1 (nonzero, ordinary,
// content +-1, no variable divides, no repeated factor shared with another
// entry). Frozen entries only get the LP2 and shape checks.
ValidationReport validate_seed(const Seed& s);

// fhat = (prod x_j^{a_j}) F_k with every a_j <= 0 chosen so that each
// substitution x_j <- F_j/x_j yields a Laurent polynomial not divisible
// by F_j.
struct NormalizedExchange {
    LaurentPoly fhat;
    std::map<VarKey, int> exponents;  // the nonpositive a_j, zeros omitted
};

NormalizedExchange normalize_exchange(const Seed& s, const VarKey& k);

// Intermediates of one exchange-polynomial update (steps 4-6).
struct ExchangeUpdate {
    VarKey var;         // the entry whose polynomial changed
    LaurentPoly g;      // after the x_k substitution
    LaurentPoly h;      // after removal of factors shared with fhat|_{x_i<-0}
    Monomial m;         // the normalizing Laurent monomial
    LaurentPoly f_new;  // m * h
};

struct MutationTrace {
    VarKey at;
    VarKey new_var;
    NormalizedExchange fhat;
    LaurentPoly new_var_value;  // fhat / x_k
    std::vector<ExchangeUpdate> updates;
};

// Full mutation at x_k. The new cluster variable is named `relabel` when
// given, otherwise the same index with one extra prime.
std::pair<Seed, MutationTrace> mutate(const Seed& s, const VarKey& k,
                                      std::optional<VarKey> relabel = std::nullopt);

// Steps 4-6 applied to a single exchange polynomial; also used to derive
// the rank-N family seeds from their defining recurrences.
ExchangeUpdate transform_exchange(const LaurentPoly& f, const LaurentPoly& fhat,
                                  const VarKey& k, const VarKey& self,
                                  const VarKey& new_key);

struct Period1Result {
    bool periodic = false;
    std::string witness;  // first mismatching entry when not periodic
};

// Mutates at the first variable, relabels it one rank ahead and compares
// the result entrywise with the unit shift of s. Arity-1 seeds with
// consecutively indexed variables only.
Period1Result detect_period1(const Seed& s);

// Entries whose exchange polynomial depends on x_k.
std::vector<std::size_t> dependence_closure(const Seed& s, const VarKey& k);

}  // namespace lpa
