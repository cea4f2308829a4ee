#pragma once

// Finite-window instantiation of the lattice seed templates, the layer
// mutation sweeps and their verification.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lpa/seed.hpp"

namespace lpa {

// Finite generator data for an infinite lattice seed. A lattice site is
// addressed either by its variable index (n), (n,m) or (n,m,l), or by
// (layer, transverse) coordinates: layer(v) = lambda . idx and the
// transverse coordinates tau project out the sweep-invariant directions.
struct SeedTemplate {
    std::string name;
    int arity = 1;
    int rank = 0;                                   // number of layers R
    std::array<int, 3> lambda{1, 0, 0};             // layer functional
    std::array<std::array<int, 3>, 2> tau{};        // arity-1 transverse rows
    std::array<std::array<int, 3>, 3> basis{};      // index = basis[0]*layer + basis[1]*j + basis[2]*k
    std::array<int, 3> rho{0, 0, 0};                // relabel shift, lambda(rho) = rank
    std::vector<LaurentPoly> layers;                // F_i at the layer-i base site
};

struct Window {
    int radius = 3;
    int margin = 2;
};

int lambda_of(const SeedTemplate& t, const VarKey& v);
std::array<int, 2> tau_of(const SeedTemplate& t, const VarKey& v);
VarKey site_var(const SeedTemplate& t, int layer, std::array<int, 2> transverse);
VarKey shifted(const VarKey& v, const std::array<int, 3>& delta);

// Exchange polynomial at the lattice site v, taking v to lie on the given
// layer: the layer polynomial shifted from its base site to v.
LaurentPoly layer_poly_at(const SeedTemplate& t, const VarKey& v, int layer);

// One entry per layer and transverse point within the radius; entries whose
// polynomial references variables outside the window are frozen.
Seed instantiate(const SeedTemplate& t, const Window& w);

// Mutation order for one sweep, grouped into diamond shells |j|+|k| = n.
struct MutationSchedule {
    std::vector<VarKey> order;
    std::vector<std::size_t> shell_sizes;
};

// Schedule for the sweep at the given layer. `sweep` is the number of
// sweeps already performed (each one invalidates a margin-wide border);
// by default it is taken to be the layer number, matching consecutive
// sweeps from layer 0.
MutationSchedule schedule_mu_tilde(const SeedTemplate& t, const Window& w, int layer,
                                   int sweep = -1);

std::pair<Seed, std::vector<MutationTrace>> run_schedule(const Seed& s,
                                                         const MutationSchedule& sched,
                                                         const std::array<int, 3>& rho);

struct CovarianceDiff {
    VarKey var;
    LaurentPoly expected;
    LaurentPoly actual;
};

struct CovarianceResult {
    bool ok = true;
    std::vector<CovarianceDiff> diffs;
};

// Checks that `after` equals the unit shift of `before` on the interior
// shrunk by `sweeps` margins.
CovarianceResult verify_shift_covariance(const Seed& before, const Seed& after,
                                         const SeedTemplate& t, const Window& w,
                                         int sweeps = 1);

// Runs the schedule as given and under `trials` random permutations and
// compares the final seeds on the interior.
bool verify_order_independence(const Seed& s, const MutationSchedule& sched,
                               const SeedTemplate& t, const Window& w, int trials,
                               std::uint64_t rng_seed);

// Registry: dbkp, dbkp-alt, 2d1, 2d2, somos6, somos7, rank<N>-product,
// rank<N>-affine.
SeedTemplate make_template(const std::string& name);
std::vector<std::string> template_names();

// Rank-N period-1 families with explicit parameters.
SeedTemplate make_rank_product(int rank, const std::vector<int>& a);
SeedTemplate make_rank_affine(int rank, long A, long B);

}  // namespace lpa
