#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "likejudge/simplex.hpp"

using namespace likejudge;

namespace {

// Indicator row over `worlds` for a bitmask of satisfying world indices.
std::vector<double> mask_row(std::uint32_t worlds, std::uint32_t mask) {
    std::vector<double> row(worlds, 0.0);
    for (std::uint32_t w = 0; w < worlds; ++w) {
        if (mask & (1u << w)) row[w] = 1.0;
    }
    return row;
}

LinearConstraint geq(std::uint32_t worlds, std::uint32_t mask, double bound) {
    return {mask_row(worlds, mask), Relation::Geq, bound};
}
LinearConstraint eq(std::uint32_t worlds, std::uint32_t mask, double bound) {
    return {mask_row(worlds, mask), Relation::Eq, bound};
}

// Independent oracle: enumerate vertices of the feasible polytope by solving
// all maximal active-constraint subsets. Exponential, test-only.
struct Oracle {
    struct Row {
        std::vector<double> a;
        double b;
        bool equality;
    };
    std::vector<Row> rows;
    std::size_t dim;

    explicit Oracle(const FeasibilityProblem& p) : dim(p.world_count) {
        for (const LinearConstraint& c : p.constraints) {
            if (c.relation == Relation::Eq) {
                rows.push_back({c.coefficients, c.bound, true});
            } else if (c.relation == Relation::Geq) {
                std::vector<double> neg(c.coefficients);
                for (double& v : neg) v = -v;
                rows.push_back({neg, -c.bound, false});  // as <=
            } else {
                rows.push_back({c.coefficients, c.bound, false});
            }
        }
        rows.push_back({std::vector<double>(dim, 1.0), 1.0, true});
        for (std::size_t i = 0; i < dim; ++i) {
            std::vector<double> a(dim, 0.0);
            a[i] = -1.0;
            rows.push_back({a, 0.0, false});  // -x_i <= 0
        }
    }

    static bool solve(std::vector<std::vector<double>> m, std::vector<double> b,
                      std::vector<double>& x) {
        const std::size_t n = b.size();
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t pivot = col;
            for (std::size_t r = col + 1; r < n; ++r) {
                if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
            }
            if (std::abs(m[pivot][col]) < 1e-9) return false;
            std::swap(m[col], m[pivot]);
            std::swap(b[col], b[pivot]);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col) continue;
                double f = m[r][col] / m[col][col];
                for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
                b[r] -= f * b[col];
            }
        }
        x.assign(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / m[i][i];
        return true;
    }

    bool vertex_ok(const std::vector<double>& x) const {
        for (const Row& r : rows) {
            double lhs = 0.0;
            for (std::size_t i = 0; i < dim; ++i) lhs += r.a[i] * x[i];
            if (r.equality) {
                if (std::abs(lhs - r.b) > 1e-7) return false;
            } else if (lhs > r.b + 1e-7) {
                return false;
            }
        }
        return true;
    }

    // Minimum of the objective over all vertices; NaN when infeasible.
    double min_over_vertices(const std::vector<double>& objective) const {
        std::vector<std::size_t> eqs, ineqs;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            (rows[i].equality ? eqs : ineqs).push_back(i);
        }
        double best = std::numeric_limits<double>::quiet_NaN();
        if (eqs.size() > dim) return best;
        std::size_t need = dim - eqs.size();
        std::vector<std::size_t> pick(need);
        auto consider = [&](const std::vector<std::size_t>& active) {
            std::vector<std::vector<double>> m;
            std::vector<double> b;
            for (std::size_t i : eqs) {
                m.push_back(rows[i].a);
                b.push_back(rows[i].b);
            }
            for (std::size_t i : active) {
                m.push_back(rows[i].a);
                b.push_back(rows[i].b);
            }
            std::vector<double> x;
            if (!solve(std::move(m), std::move(b), x)) return;
            if (!vertex_ok(x)) return;
            double v = 0.0;
            for (std::size_t i = 0; i < dim; ++i) v += objective[i] * x[i];
            if (std::isnan(best) || v < best) best = v;
        };
        // all (need)-subsets of ineqs
        std::vector<std::size_t> idx(need);
        if (need == 0) {
            consider({});
            return best;
        }
        if (ineqs.size() < need) return best;
        for (std::size_t i = 0; i < need; ++i) idx[i] = i;
        for (;;) {
            std::vector<std::size_t> active;
            for (std::size_t i : idx) active.push_back(ineqs[i]);
            consider(active);
            std::size_t i = need;
            while (i > 0 && idx[i - 1] == ineqs.size() - need + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < need; ++j) idx[j] = idx[j - 1] + 1;
        }
        return best;
    }

    bool feasible() const {
        std::vector<double> zero(dim, 0.0);
        return !std::isnan(min_over_vertices(zero));
    }
};

}  // namespace

TEST_CASE("likelihood-logic consistency examples") {
    // atoms p1 (MSB), p2: worlds 00,01,10,11 -> p1 in {2,3}, p1&p2 = {3},
    // p1&!p2 = {2}
    FeasibilityProblem bad;
    bad.world_count = 4;
    bad.constraints = {
        eq(4, 0b1100, 0.5),   // l(p1) = 0.5
        geq(4, 0b1000, 0.4),  // l(p1 & p2) >= 0.4
        geq(4, 0b0100, 0.7),  // l(p1 & !p2) >= 0.7
    };
    CHECK_FALSE(feasible(bad));

    FeasibilityProblem trivial;
    trivial.world_count = 2;
    trivial.constraints = {geq(2, 0b10, 0.0)};
    CHECK(feasible(trivial));

    FeasibilityProblem good;
    good.world_count = 4;
    good.constraints = {
        geq(4, 0b1100, 0.3),
        geq(4, 0b1000, 0.4),
        geq(4, 0b0100, 0.1),
    };
    CHECK(feasible(good));
}

TEST_CASE("minimize computes implied lower bounds") {
    FeasibilityProblem p;
    p.world_count = 4;
    p.constraints = {
        geq(4, 0b1000, 0.4),  // l(p1 & p2) >= 0.4
        geq(4, 0b0100, 0.1),  // l(p1 & !p2) >= 0.1
    };
    CHECK(minimize(p, mask_row(4, 0b1100)) == doctest::Approx(0.5).epsilon(1e-9));

    FeasibilityProblem pinned;
    pinned.world_count = 2;
    pinned.constraints = {eq(2, 0b10, 1.0)};
    CHECK(minimize(pinned, mask_row(2, 0b10)) == doctest::Approx(1.0));

    FeasibilityProblem free_issue;
    free_issue.world_count = 2;
    CHECK(minimize(free_issue, mask_row(2, 0b10)) ==
          doctest::Approx(0.0).epsilon(1e-9));

    FeasibilityProblem infeasible_problem;
    infeasible_problem.world_count = 2;
    infeasible_problem.constraints = {geq(2, 0b10, 0.8), geq(2, 0b01, 0.8)};
    CHECK_THROWS_AS(minimize(infeasible_problem, mask_row(2, 0b10)),
                    InfeasibleError);
}

TEST_CASE("margins inside the tolerance band are not silently guessed") {
    // infeasible by 5e-8: between the acceptance (1e-9) and rejection (1e-7)
    // thresholds, so the solver must refuse to certify
    FeasibilityProblem p;
    p.world_count = 2;
    p.constraints = {geq(2, 0b10, 1.0 + 5e-8)};
    CHECK_THROWS_AS(feasible(p), NumericalError);

    FeasibilityProblem q;
    q.world_count = 2;
    q.constraints = {geq(2, 0b10, 1.0 + 5e-6)};  // clearly infeasible
    CHECK_FALSE(feasible(q));
}

TEST_CASE("random problems agree with the vertex oracle") {
    std::mt19937_64 rng(2024);
    int feasible_count = 0;
    for (int trial = 0; trial < 150; ++trial) {
        int atoms = 2 + static_cast<int>(rng() % 2);  // 2..3 atoms
        std::uint32_t worlds = 1u << atoms;
        FeasibilityProblem p;
        p.world_count = worlds;
        int rows = 1 + static_cast<int>(rng() % 4);
        for (int r = 0; r < rows; ++r) {
            std::uint32_t mask = static_cast<std::uint32_t>(rng()) &
                                 ((1u << worlds) - 1u);
            double bound = ljt::unit(rng);
            Relation rel = rng() % 3 == 0   ? Relation::Eq
                           : rng() % 2 == 0 ? Relation::Geq
                                            : Relation::Leq;
            p.constraints.push_back(
                {mask_row(worlds, mask), rel, rel == Relation::Eq
                                                   ? bound * 0.5
                                                   : bound});
        }
        Oracle oracle(p);
        bool expect = oracle.feasible();
        CAPTURE(trial);
        CHECK(feasible(p) == expect);
        if (!expect) continue;
        ++feasible_count;
        std::uint32_t obj_mask =
            static_cast<std::uint32_t>(rng()) & ((1u << worlds) - 1u);
        std::vector<double> objective = mask_row(worlds, obj_mask);
        double got = minimize(p, objective);
        double want = oracle.min_over_vertices(objective);
        CHECK(got == doctest::Approx(want).epsilon(1e-6));
        CHECK(got >= -1e-9);
        CHECK(got <= 1.0 + 1e-9);
    }
    CHECK(feasible_count > 20);  // the sampler must exercise both branches
}

TEST_CASE("removing constraints preserves feasibility") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        std::uint32_t worlds = 4;
        FeasibilityProblem p;
        p.world_count = worlds;
        for (int r = 0; r < 3; ++r) {
            std::uint32_t mask =
                static_cast<std::uint32_t>(rng()) & ((1u << worlds) - 1u);
            p.constraints.push_back(geq(worlds, mask, ljt::unit(rng)));
        }
        if (!feasible(p)) continue;
        for (std::size_t drop = 0; drop < p.constraints.size(); ++drop) {
            FeasibilityProblem q;
            q.world_count = worlds;
            for (std::size_t i = 0; i < p.constraints.size(); ++i) {
                if (i != drop) q.constraints.push_back(p.constraints[i]);
            }
            CHECK(feasible(q));
        }
    }
}

TEST_CASE("additivity axiom holds for implied bounds") {
    // min l(phi) >= min l(phi & psi) + min l(phi & !psi) - 2 eps on
    // consistent sets: the two parts are disjoint.
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 80; ++trial) {
        std::uint32_t worlds = 8;
        // witness distribution keeps the constraint set consistent
        std::vector<double> witness(worlds);
        double total = 0.0;
        for (double& v : witness) {
            v = ljt::unit(rng) + 1e-3;
            total += v;
        }
        for (double& v : witness) v /= total;

        FeasibilityProblem p;
        p.world_count = worlds;
        for (int r = 0; r < 4; ++r) {
            std::uint32_t mask =
                static_cast<std::uint32_t>(rng()) & ((1u << worlds) - 1u);
            double value = 0.0;
            for (std::uint32_t w = 0; w < worlds; ++w) {
                if (mask & (1u << w)) value += witness[w];
            }
            p.constraints.push_back(
                geq(worlds, mask, value * ljt::unit(rng)));
        }
        REQUIRE(feasible(p));

        std::uint32_t phi =
            static_cast<std::uint32_t>(rng()) & ((1u << worlds) - 1u);
        std::uint32_t psi =
            static_cast<std::uint32_t>(rng()) & ((1u << worlds) - 1u);
        double whole = minimize(p, mask_row(worlds, phi));
        double left = minimize(p, mask_row(worlds, phi & psi));
        double right = minimize(p, mask_row(worlds, phi & ~psi));
        CHECK(whole >= left + right - 2 * kCmpEps);
    }
}
