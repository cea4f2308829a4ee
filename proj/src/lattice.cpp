#include "lpa/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>

#include "lpa/io.hpp"

namespace lpa {

namespace {

int dot(const std::array<int, 3>& row, const std::array<int, 3>& idx, int arity) {
    int s = 0;
    for (int i = 0; i < arity; ++i) s += row[static_cast<std::size_t>(i)] * idx[static_cast<std::size_t>(i)];
    return s;
}

}  // namespace

int lambda_of(const SeedTemplate& t, const VarKey& v) { return dot(t.lambda, v.idx, t.arity); }

std::array<int, 2> tau_of(const SeedTemplate& t, const VarKey& v) {
    std::array<int, 2> out{0, 0};
    for (int i = 0; i + 1 < t.arity; ++i) {
        out[static_cast<std::size_t>(i)] = dot(t.tau[static_cast<std::size_t>(i)], v.idx, t.arity);
    }
    return out;
}

VarKey shifted(const VarKey& v, const std::array<int, 3>& delta) {
    VarKey out = v;
    for (int i = 0; i < v.arity; ++i) out.idx[static_cast<std::size_t>(i)] += delta[static_cast<std::size_t>(i)];
    return out;
}

VarKey site_var(const SeedTemplate& t, int layer, std::array<int, 2> transverse) {
    VarKey v;
    v.arity = t.arity;
    v.idx = {0, 0, 0};
    for (int c = 0; c < t.arity; ++c) {
        auto cc = static_cast<std::size_t>(c);
        v.idx[cc] = t.basis[0][cc] * layer + t.basis[1][cc] * transverse[0] +
                    t.basis[2][cc] * transverse[1];
    }
    return v;
}

LaurentPoly layer_poly_at(const SeedTemplate& t, const VarKey& v, int layer) {
    if (layer < 0 || layer >= t.rank) throw std::invalid_argument("layer_poly_at: layer out of range");
    std::array<int, 3> delta{0, 0, 0};
    for (int c = 0; c < t.arity; ++c) {
        auto cc = static_cast<std::size_t>(c);
        delta[cc] = v.idx[cc] - t.basis[0][cc] * layer;
    }
    return shift_indices(t.layers[static_cast<std::size_t>(layer)], delta);
}

namespace {

// Transverse offsets reached by the layer polynomial from its site.
std::vector<std::array<int, 2>> tau_footprint(const SeedTemplate& t, int layer) {
    std::vector<std::array<int, 2>> out;
    for (const VarKey& u : support(t.layers[static_cast<std::size_t>(layer)])) {
        out.push_back(tau_of(t, u));
    }
    return out;
}

bool within(const std::array<int, 2>& tau, int bound) {
    return std::abs(tau[0]) <= bound && std::abs(tau[1]) <= bound;
}

// Transverse points with each component in [-r, r], in lexicographic order.
std::vector<std::array<int, 2>> transverse_points(int arity, int r) {
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

void check_template(const SeedTemplate& t) {
    auto bad = [&t](const std::string& msg) {
        throw std::logic_error("template " + t.name + ": " + msg);
    };
    if (t.rank <= 0 || static_cast<int>(t.layers.size()) != t.rank) bad("layer count != rank");
    if (lambda_of(t, site_var(t, 1, {0, 0})) != 1) bad("layer basis vector is not on layer 1");
    for (int c = 0; c + 1 < t.arity; ++c) {
        VarKey b;
        b.arity = t.arity;
        b.idx = {0, 0, 0};
        for (int d = 0; d < t.arity; ++d) {
            b.idx[static_cast<std::size_t>(d)] = t.basis[static_cast<std::size_t>(c + 1)][static_cast<std::size_t>(d)];
        }
        if (lambda_of(t, b) != 0) bad("transverse basis vector leaves its layer");
        std::array<int, 2> tb = tau_of(t, b);
        if (tb[static_cast<std::size_t>(c)] != 1 || tb[static_cast<std::size_t>(1 - c)] != 0) {
            bad("tau is not inverse to the transverse basis");
        }
    }
    VarKey rho;
    rho.arity = t.arity;
    rho.idx = t.rho;
    if (lambda_of(t, rho) != t.rank) bad("relabel shift does not advance one full rank");
    for (int i = 0; i < t.rank; ++i) {
        const LaurentPoly& f = t.layers[static_cast<std::size_t>(i)];
        if (f.is_zero()) bad("zero layer polynomial");
        for (const VarKey& u : support(f)) {
            if (u.arity != t.arity) bad("layer polynomial variable of wrong arity");
            int lu = lambda_of(t, u);
            if (lu < 0 || lu >= t.rank) bad("layer polynomial leaves the layer range");
        }
    }
}

}  // namespace

Seed instantiate(const SeedTemplate& t, const Window& w) {
    if (w.radius < 0) throw std::invalid_argument("instantiate: negative radius");
    Seed s;
    s.arity = t.arity;
    for (int i = 0; i < t.rank; ++i) {
        std::vector<std::array<int, 2>> foot = tau_footprint(t, i);
        for (const auto& pt : transverse_points(t.arity, w.radius)) {
            VarKey v = site_var(t, i, pt);
            bool frozen = false;
            for (const auto& off : foot) {
                std::array<int, 2> tu{pt[0] + off[0], pt[1] + off[1]};
                if (!within(tu, w.radius)) {
                    frozen = true;
                    break;
                }
            }
            s.entries.push_back({v, layer_poly_at(t, v, i), frozen});
        }
    }
    return s;
}

MutationSchedule schedule_mu_tilde(const SeedTemplate& t, const Window& w, int layer, int sweep) {
    if (layer < 0 || layer >= t.rank) throw std::invalid_argument("schedule: layer out of range");
    if (sweep < 0) sweep = layer;
    MutationSchedule sched;
    const int region = w.radius - w.margin * sweep;
    if (region < 0) return sched;

    std::vector<std::array<int, 2>> foot = tau_footprint(t, layer);
    auto schedulable = [&](const std::array<int, 2>& pt) {
        if (!within(pt, region)) return false;
        for (const auto& off : foot) {
            if (!within({pt[0] + off[0], pt[1] + off[1]}, w.radius)) return false;
        }
        return true;
    };
    auto add_shell = [&](const std::vector<std::array<int, 2>>& pts) {
        std::size_t before = sched.order.size();
        for (const auto& pt : pts) {
            if (schedulable(pt)) sched.order.push_back(site_var(t, layer, pt));
        }
        if (sched.order.size() > before) sched.shell_sizes.push_back(sched.order.size() - before);
    };

    if (t.arity == 1) {
        add_shell({{0, 0}});
        return sched;
    }
    if (t.arity == 2) {
        add_shell({{0, 0}});
        for (int n = 1; n <= region; ++n) add_shell({{n, 0}, {-n, 0}});
        return sched;
    }
    add_shell({{0, 0}});
    for (int n = 1; n <= 2 * region; ++n) {
        std::vector<std::array<int, 2>> pts;
        for (int j = n; j >= -n; --j) pts.push_back({j, n - std::abs(j)});
        for (int j = -n + 1; j <= n - 1; ++j) pts.push_back({j, -(n - std::abs(j))});
        add_shell(pts);
    }
    return sched;
}

std::pair<Seed, std::vector<MutationTrace>> run_schedule(const Seed& s,
                                                         const MutationSchedule& sched,
                                                         const std::array<int, 3>& rho) {
    Seed cur = s;
    std::vector<MutationTrace> traces;
    traces.reserve(sched.order.size());
    for (const VarKey& v : sched.order) {
        auto [next, trace] = mutate(cur, v, shifted(v, rho));
        cur = std::move(next);
        traces.push_back(std::move(trace));
    }
    return {std::move(cur), std::move(traces)};
}

CovarianceResult verify_shift_covariance(const Seed& before, const Seed& after,
                                         const SeedTemplate& t, const Window& w, int sweeps) {
    const int region = w.radius - w.margin * sweeps;
    const std::array<int, 3> unit{1, 0, 0};

    std::map<VarKey, const LaurentPoly*> prev;
    for (const auto& e : before.entries) prev.emplace(e.var, &e.exch);

    CovarianceResult res;
    for (const auto& e : after.entries) {
        if (!within(tau_of(t, e.var), region)) continue;
        auto it = prev.find(shifted(e.var, {-1, 0, 0}));
        if (it == prev.end()) {
            res.ok = false;
            res.diffs.push_back({e.var, LaurentPoly(), e.exch});
            continue;
        }
        LaurentPoly expected = shift_indices(*it->second, unit);
        if (expected != e.exch) {
            res.ok = false;
            res.diffs.push_back({e.var, std::move(expected), e.exch});
        }
    }
    return res;
}

bool verify_order_independence(const Seed& s, const MutationSchedule& sched,
                               const SeedTemplate& t, const Window& w, int trials,
                               std::uint64_t rng_seed) {
    const int region = w.radius - w.margin;
    Seed baseline = run_schedule(s, sched, t.rho).first;
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<VarKey> order = sched.order;
        std::mt19937_64 rng(rng_seed + static_cast<std::uint64_t>(trial));
        std::shuffle(order.begin(), order.end(), rng);
        MutationSchedule shuffled{std::move(order), {}};
        Seed got = run_schedule(s, shuffled, t.rho).first;
        for (std::size_t p = 0; p < s.entries.size(); ++p) {
            if (!within(tau_of(t, s.entries[p].var), region)) continue;
            if (baseline.entries[p].var != got.entries[p].var ||
                baseline.entries[p].exch != got.entries[p].exch) {
                return false;
            }
        }
    }
    return true;
}

namespace {

SeedTemplate finish(SeedTemplate t, const std::vector<std::string>& polys) {
    for (const std::string& src : polys) t.layers.push_back(parse_expr(src));
    check_template(t);
    return t;
}

SeedTemplate make_dbkp() {
    SeedTemplate t;
    t.name = "dbkp";
    t.arity = 3;
    t.rank = 6;
    t.lambda = {1, 2, 3};
    t.tau = {{{0, 1, 1}, {0, 0, 1}}};
    t.basis = {{{1, 0, 0}, {-2, 1, 0}, {-1, -1, 1}}};
    t.rho = {1, 1, 1};
    return finish(std::move(t), {
        "x[0,1,1]*x[1,0,0] + x[0,1,0]*x[1,0,1] + x[0,0,1]*x[1,1,0]",
        "x[0,1,0]*x[1,0,1]*x[2,0,0] + x[0,0,1]*x[1,1,0]*x[2,0,0]"
        " + x[0,0,0]*x[1,1,0]*x[2,0,1] + x[0,0,0]*x[1,0,1]*x[2,1,0]",
        "x[1,1,0]*x[2,-1,0]*x[2,0,1]*x[3,0,0] + x[1,0,1]*x[2,-1,0]*x[2,1,0]*x[3,0,0]"
        " + x[1,0,0]*x[2,-1,1]*x[2,1,0]*x[3,0,0] + x[1,0,0]*x[2,-1,0]*x[2,0,1]*x[3,1,0]"
        " + x[1,0,0]*x[2,0,1]*x[2,1,0]*x[3,-1,0]",
        "x[4,-1,0]*x[3,1,0]*x[3,0,-1]*x[2,0,0] + x[4,0,-1]*x[3,1,0]*x[3,-1,0]*x[2,0,0]"
        " + x[4,0,0]*x[3,1,-1]*x[3,-1,0]*x[2,0,0] + x[4,0,0]*x[3,1,0]*x[3,0,-1]*x[2,-1,0]"
        " + x[4,0,0]*x[3,0,-1]*x[3,-1,0]*x[2,1,0]",
        "x[5,-1,0]*x[4,0,-1]*x[3,0,0] + x[5,0,-1]*x[4,-1,0]*x[3,0,0]"
        " + x[5,0,0]*x[4,-1,0]*x[3,0,-1] + x[5,0,0]*x[4,0,-1]*x[3,-1,0]",
        "x[5,-1,-1]*x[4,0,0] + x[5,-1,0]*x[4,0,-1] + x[5,0,-1]*x[4,-1,0]",
    });
}

SeedTemplate make_dbkp_alt() {
    SeedTemplate t;
    t.name = "dbkp-alt";
    t.arity = 3;
    t.rank = 7;
    t.lambda = {1, 4, 2};
    t.tau = {{{0, 1, 0}, {0, 0, 1}}};
    t.basis = {{{1, 0, 0}, {-4, 1, 0}, {-2, 0, 1}}};
    t.rho = {1, 1, 1};
    return finish(std::move(t), {
        "x[0,1,1]*x[1,0,0] + x[0,1,0]*x[1,0,1] + x[0,0,1]*x[1,1,0]",
        "x[0,1,0]*x[1,0,1]*x[2,0,0] + x[0,0,1]*x[1,1,0]*x[2,0,0]"
        " + x[0,0,0]*x[1,1,0]*x[2,0,1] + x[0,0,0]*x[1,0,1]*x[2,1,0]",
        "x[1,1,0]*x[2,0,1]*x[2,0,-1]*x[3,0,0] + x[1,0,1]*x[2,0,-1]*x[2,1,0]*x[3,0,0]"
        " + x[1,0,0]*x[2,0,1]*x[2,1,-1]*x[3,0,0] + x[1,0,0]*x[2,0,-1]*x[2,1,0]*x[3,0,1]"
        " + x[1,0,0]*x[2,0,1]*x[2,1,0]*x[3,0,-1]",
        "x[2,0,-1]*x[3,0,1]*x[4,0,0] + x[2,0,1]*x[3,0,-1]*x[4,0,0]"
        " + x[2,0,0]*x[3,0,-1]*x[4,0,1] + x[2,0,0]*x[3,0,1]*x[4,0,-1]",
        "x[5,-1,0]*x[4,0,-1]*x[4,0,1]*x[3,0,0] + x[5,0,-1]*x[4,0,1]*x[4,-1,0]*x[3,0,0]"
        " + x[5,0,0]*x[4,0,-1]*x[4,-1,1]*x[3,0,0] + x[5,0,0]*x[4,0,1]*x[4,-1,0]*x[3,0,-1]"
        " + x[5,0,0]*x[4,0,-1]*x[4,-1,0]*x[3,0,1]",
        "x[6,-1,0]*x[5,0,-1]*x[4,0,0] + x[6,0,-1]*x[5,-1,0]*x[4,0,0]"
        " + x[6,0,0]*x[5,-1,0]*x[4,0,-1] + x[6,0,0]*x[5,0,-1]*x[4,-1,0]",
        "x[6,-1,-1]*x[5,0,0] + x[6,-1,0]*x[5,0,-1] + x[6,0,-1]*x[5,-1,0]",
    });
}

SeedTemplate make_2d1() {
    SeedTemplate t;
    t.name = "2d1";
    t.arity = 2;
    t.rank = 6;
    t.lambda = {1, 2, 0};
    t.tau = {{{0, 1, 0}, {0, 0, 0}}};
    t.basis = {{{1, 0, 0}, {-2, 1, 0}, {0, 0, 0}}};
    t.rho = {2, 2, 0};
    return finish(std::move(t), {
        "x[1,2]*x[1,0] + x[0,1]*x[2,1] + x[1,1]^2",
        "x[0,1]*x[2,1]*x[2,0] + x[1,1]^2*x[2,0] + x[0,0]*x[1,1]*x[3,1] + x[0,0]*x[2,1]^2",
        "x[1,1]*x[2,-1]*x[3,1]*x[3,0] + x[2,1]^2*x[2,-1]*x[3,0] + x[1,0]*x[3,0]^2*x[2,1]"
        " + x[1,0]*x[2,-1]*x[3,1]^2 + x[1,0]*x[3,1]*x[2,1]*x[3,-1]",
        "x[4,-1]*x[3,1]*x[2,-1]*x[2,0] + x[3,-1]^2*x[3,1]*x[2,0] + x[4,0]*x[2,0]^2*x[3,-1]"
        " + x[4,0]*x[3,1]*x[2,-1]^2 + x[4,0]*x[2,-1]*x[3,-1]*x[2,1]",
        "x[5,-1]*x[3,-1]*x[3,0] + x[4,-1]^2*x[3,0] + x[5,0]*x[4,-1]*x[2,-1] + x[5,0]*x[3,-1]^2",
        "x[4,-2]*x[4,0] + x[5,-1]*x[3,-1] + x[4,-1]^2",
    });
}

SeedTemplate make_2d2() {
    SeedTemplate t;
    t.name = "2d2";
    t.arity = 2;
    t.rank = 7;
    t.lambda = {1, 4, 0};
    t.tau = {{{0, 1, 0}, {0, 0, 0}}};
    t.basis = {{{1, 0, 0}, {-4, 1, 0}, {0, 0, 0}}};
    t.rho = {3, 1, 0};
    return finish(std::move(t), {
        "x[2,1]*x[1,0] + x[0,1]*x[3,0] + x[2,0]*x[1,1]",
        "x[0,1]*x[3,0]*x[2,0] + x[2,0]^2*x[1,1] + x[0,0]*x[1,1]*x[4,0] + x[0,0]*x[3,0]*x[2,1]",
        "x[1,1]*x[4,0]*x[0,0]*x[3,0] + x[3,0]^2*x[0,0]*x[2,1] + x[1,0]*x[4,0]*x[0,1]*x[3,0]"
        " + x[1,0]*x[0,0]*x[2,1]*x[5,0] + x[1,0]^2*x[4,0]*x[2,1]",
        "x[0,0]*x[5,0]*x[4,0] + x[4,0]^2*x[1,0] + x[2,0]*x[1,0]*x[6,0] + x[2,0]^2*x[5,0]",
        "x[5,-1]*x[2,0]*x[6,0]*x[3,0] + x[3,0]^2*x[6,0]*x[4,-1] + x[5,0]*x[2,0]*x[6,-1]*x[3,0]"
        " + x[5,0]*x[6,0]*x[4,-1]*x[1,0] + x[5,0]^2*x[2,0]*x[4,-1]",
        "x[6,-1]*x[3,0]*x[4,0] + x[4,0]^2*x[5,-1] + x[6,0]*x[5,-1]*x[2,0] + x[6,0]*x[3,0]*x[4,-1]",
        "x[4,-1]*x[5,0] + x[6,-1]*x[3,0] + x[4,0]*x[5,-1]",
    });
}

SeedTemplate make_somos6() {
    SeedTemplate t;
    t.name = "somos6";
    t.arity = 1;
    t.rank = 6;
    t.lambda = {1, 0, 0};
    t.basis = {{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}};
    t.rho = {6, 0, 0};
    return finish(std::move(t), {
        "x[5]*x[1] + x[2]*x[4] + x[3]^2",
        "x[2]^2*x[4] + x[3]^2*x[2] + x[0]*x[3]*x[5] + x[0]*x[4]^2",
        "x[3]^2*x[0]*x[5] + x[4]^2*x[0]*x[3] + x[1]*x[3]^2*x[4] + x[1]*x[0]*x[5]^2"
        " + x[1]^2*x[5]*x[4]",
        "x[2]^2*x[5]*x[0] + x[1]^2*x[5]*x[2] + x[4]*x[2]^2*x[1] + x[4]*x[5]*x[0]^2"
        " + x[4]^2*x[0]*x[1]",
        "x[3]^2*x[1] + x[2]^2*x[3] + x[5]*x[2]*x[0] + x[5]*x[1]^2",
        "x[0]*x[4] + x[3]*x[1] + x[2]^2",
    });
}

SeedTemplate make_somos7() {
    SeedTemplate t;
    t.name = "somos7";
    t.arity = 1;
    t.rank = 7;
    t.lambda = {1, 0, 0};
    t.basis = {{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}};
    t.rho = {7, 0, 0};
    return finish(std::move(t), {
        "x[6]*x[1] + x[4]*x[3] + x[2]*x[5]",
        "x[4]*x[3]*x[2] + x[2]^2*x[5] + x[0]*x[5]*x[4] + x[0]*x[3]*x[6]",
        "x[5]*x[4]*x[0]*x[3] + x[3]^2*x[0]*x[6] + x[1]*x[4]^2*x[3] + x[1]*x[0]*x[6]*x[5]"
        " + x[1]^2*x[4]*x[6]",
        "x[0]*x[5]*x[4] + x[4]^2*x[1] + x[2]*x[1]*x[6] + x[2]^2*x[5]",
        "x[1]*x[2]*x[6]*x[3] + x[3]^2*x[6]*x[0] + x[5]*x[2]^2*x[3] + x[5]*x[6]*x[0]*x[1]"
        " + x[5]^2*x[2]*x[0]",
        "x[2]*x[3]*x[4] + x[4]^2*x[1] + x[6]*x[1]*x[2] + x[6]*x[3]*x[0]",
        "x[0]*x[5] + x[2]*x[3] + x[4]*x[1]",
    });
}

// Grows a rank-N period-1 family out of its first polynomial: the last
// layer is the back-shift of F_0 and the mutation consistency relation
// F_{i-1} = u^{-1}(F_i') determines the rest. The result is certified by
// an actual mutation cycle.
SeedTemplate make_rank_family(const std::string& name, int rank, LaurentPoly f0) {
    if (rank < 2) throw std::invalid_argument("rank family: rank must be at least 2");
    const std::array<int, 3> back{-1, 0, 0};

    std::vector<LaurentPoly> layers(static_cast<std::size_t>(rank));
    layers[0] = f0;
    layers[static_cast<std::size_t>(rank - 1)] = shift_indices(f0, back);
    for (int i = rank - 1; i >= 2; --i) {
        const LaurentPoly& fi = layers[static_cast<std::size_t>(i)];
        LaurentPoly transformed = fi;
        if (depends_on(fi, var1(0))) {
            transformed = transform_exchange(fi, f0, var1(0), var1(i), var1(rank)).f_new;
        }
        layers[static_cast<std::size_t>(i - 1)] = shift_indices(transformed, back);
    }

    SeedTemplate t;
    t.name = name;
    t.arity = 1;
    t.rank = rank;
    t.lambda = {1, 0, 0};
    t.basis = {{{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}};
    t.rho = {rank, 0, 0};
    t.layers = std::move(layers);
    check_template(t);

    Seed s = instantiate(t, Window{0, 0});
    ValidationReport rep = validate_seed(s);
    if (!rep.ok()) {
        throw std::invalid_argument("rank family " + name + ": derived seed invalid: " +
                                    rep.issues.front().message);
    }
    Period1Result p = detect_period1(s);
    if (!p.periodic) {
        throw std::invalid_argument("rank family " + name +
                                    ": parameters do not give a period-1 seed (" + p.witness + ")");
    }
    return t;
}

}  // namespace

SeedTemplate make_rank_product(int rank, const std::vector<int>& a) {
    if (static_cast<int>(a.size()) != rank - 1) {
        throw std::invalid_argument("rank product family needs rank-1 exponents");
    }
    LaurentPoly f0(1);
    for (int i = 1; i < rank; ++i) {
        int e = a[static_cast<std::size_t>(i - 1)];
        if (e < 1) throw std::invalid_argument("rank product family: exponents must be positive");
        f0 = f0 * LaurentPoly(var1(i), e);
    }
    f0 = f0 + LaurentPoly(1);
    return make_rank_family("rank" + std::to_string(rank) + "-product", rank, f0);
}

SeedTemplate make_rank_affine(int rank, long A, long B) {
    LaurentPoly f0 = LaurentPoly(var1(1)) * LaurentPoly(var1(rank - 1));
    for (int i = 1; i < rank; ++i) f0 = f0 + LaurentPoly(A) * LaurentPoly(var1(i));
    f0 = f0 + LaurentPoly(B);
    return make_rank_family("rank" + std::to_string(rank) + "-affine", rank, f0);
}

SeedTemplate make_template(const std::string& name) {
    if (name == "dbkp") return make_dbkp();
    if (name == "dbkp-alt") return make_dbkp_alt();
    if (name == "2d1") return make_2d1();
    if (name == "2d2") return make_2d2();
    if (name == "somos6") return make_somos6();
    if (name == "somos7") return make_somos7();
    if (name.rfind("rank", 0) == 0) {
        std::size_t dash = name.find('-');
        if (dash != std::string::npos && dash > 4) {
            int rank = std::atoi(name.substr(4, dash - 4).c_str());
            std::string kind = name.substr(dash + 1);
            if (rank >= 2) {
                if (kind == "product") return make_rank_product(rank, std::vector<int>(static_cast<std::size_t>(rank - 1), 1));
                if (kind == "affine") return make_rank_affine(rank, 1, 1);
            }
        }
    }
    throw std::invalid_argument("unknown seed template: " + name);
}

std::vector<std::string> template_names() {
    return {"dbkp", "dbkp-alt", "2d1", "2d2", "somos6", "somos7", "rank<N>-product",
            "rank<N>-affine"};
}

}  // namespace lpa
