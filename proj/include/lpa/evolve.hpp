#pragma once

// Difference equations extracted from the seed templates: exact numeric
// evolution and symbolic evolution in the initial values.

#include <map>
#include <stdexcept>
#include <vector>

#include "lpa/lattice.hpp"

namespace lpa {

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded(std::size_t terms, std::size_t budget)
        : std::runtime_error("term budget exceeded: " + std::to_string(terms) + " > " +
                             std::to_string(budget)),
          terms(terms),
          budget(budget) {}
    std::size_t terms;
    std::size_t budget;
};

// An exact division x_{n+N} = rhs / x_n failed, so the value is not a
// Laurent polynomial (or not an integer) in the initial data.
struct LaurentFalsified : std::runtime_error {
    explicit LaurentFalsified(const std::string& where)
        : std::runtime_error("Laurent property falsified at " + where) {}
};

// x_{n+N} x_n = f(x_{n+1}, ..., x_{n+N-1}); f is written in x[1]..x[N-1].
struct Recurrence {
    int order = 0;
    LaurentPoly rhs;
};

// x_{w+rho} x_w = f(sites near w); f is written in absolute variables at
// the base site w = 0, rho being the template relabel shift.
struct LatticeEquation {
    int arity = 1;
    std::array<int, 3> rho{0, 0, 0};
    LaurentPoly rhs;
};

// Derived from the layer-0 polynomial of the template.
Recurrence recurrence_of(const SeedTemplate& t);  // arity-1 templates only
LatticeEquation equation_of(const SeedTemplate& t);

// The next `steps` terms after the order-many initial values.
// Throws LaurentFalsified when a division is inexact.
std::vector<Int> numeric_evolve(const Recurrence& r, const std::vector<Int>& initial, int steps);

// Terms x_0..x_{order+depth-1} as Laurent polynomials in the initial
// variables x[0]..x[order-1]. Every exact division that succeeds
// certifies the Laurent property of that term.
std::vector<LaurentPoly> symbolic_evolve(const Recurrence& r, int depth,
                                         std::size_t budget = 200000);

// Residual x_{w+rho} x_w - f at every base w for which all referenced
// sites are present in `values`.
struct CellResidual {
    VarKey base;
    LaurentPoly residual;
};

std::vector<CellResidual> lattice_residual(const LatticeEquation& e,
                                           const std::map<VarKey, LaurentPoly>& values);

// Fills the slab layers 0..rank-1 within the radius with `init`, then
// advances `sweeps` further layers by the lattice equation. Sites whose
// stencil leaves the known region are skipped.
std::map<VarKey, Int> lattice_numeric_evolve(const SeedTemplate& t, int radius, const Int& init,
                                             int sweeps);

}  // namespace lpa
