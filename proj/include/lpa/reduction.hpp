#pragma once

// Index-identification maps between the lattice seeds and the checks that
// a reduction carries one seed template onto another.

#include <string>
#include <vector>

#include "lpa/lattice.hpp"

namespace lpa {

// Affine index map r(v) = matrix . v between variable index spaces,
// closing the identification x_v = x_{r(v)} of lattice variables.
struct ReductionMap {
    std::string name;
    int arity_from = 0;
    int arity_to = 0;
    std::array<std::array<int, 3>, 3> matrix{};  // row c: coefficients of r(v)[c]
};

VarKey apply_reduction(const ReductionMap& r, const VarKey& v);
LaurentPoly apply_reduction(const ReductionMap& r, const LaurentPoly& p);

// r2 after r1.
ReductionMap compose(const ReductionMap& r2, const ReductionMap& r1);

struct ReductionDiff {
    int layer = 0;
    LaurentPoly expected;  // image of the source layer polynomial
    LaurentPoly actual;    // target layer polynomial
};

struct ReductionResult {
    bool ok = true;
    std::vector<std::string> problems;  // structural mismatches
    std::vector<ReductionDiff> diffs;   // per-layer polynomial mismatches
};

// Checks that r maps every layer polynomial of `from` onto the one of
// `to`, preserves layers and carries the relabel shift onto the target
// one.
ReductionResult verify_reduction(const ReductionMap& r, const SeedTemplate& from,
                                 const SeedTemplate& to);

// Registry: reduction1 (dbkp -> 2d1), reduction2 (2d1 -> somos6),
// reduction3 (dbkp-alt -> 2d2), reduction4 (2d2 -> somos7).
ReductionMap make_reduction(const std::string& name);
std::vector<std::string> reduction_names();

}  // namespace lpa
