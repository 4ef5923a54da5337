// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Every tolerance is pinned here, not configured.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hulldec/cli.hpp"
#include "hulldec/hypergraph.hpp"
#include "hulldec/hypermatrix.hpp"
#include "hulldec/majorization.hpp"
#include "hulldec/spectral.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace hulldec;
using testutil::random_feasible_slice_sums;
using testutil::random_hypermatrix;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long long g_assertions = 0;

void require(bool ok, const std::string& what) {
    ++g_assertions;
    if (!ok) throw Failure(what);
}

const ScalarMode<Rational> kExact{};
const ScalarMode<double> kFloat{};

// ---------------------------------------------------------------- criterion 1

void criterion_1_known_infeasible_inputs() {
    auto run = [](const std::vector<std::string>& args) {
        std::istringstream in;
        std::ostringstream out, err;
        int code = cli::run(args, in, out, err);
        return std::pair<int, std::string>(code, out.str());
    };

    auto [code1, out1] = run({"check", "--d", "2", "--slice-sums", "[2,1]"});
    require(code1 == 2, "check d=2 R=(2,1) must exit 2");
    require(out1 == "{\"realizable\":false,\"lhs\":4,\"rhs\":3}\n",
            "check d=2 R=(2,1) verdict must match exactly, got: " + out1);

    auto [code2, out2] = run({"check", "--d", "2", "--slice-sums", "[1]"});
    require(code2 == 2, "check n=1 R=(1) must exit 2");
    auto [code3, out3] = run({"check", "--d", "3", "--slice-sums", "[1]"});
    require(code3 == 2, "check n=1 R=(1) must exit 2 for d=3 as well");
    (void)out2;
    (void)out3;
}

// ---------------------------------------------------------------- criterion 2

void criterion_2_singletons() {
    std::mt19937_64 rng(1002);
    for (int d = 2; d <= 4; ++d) {
        for (int n : {d, d + 1}) {
            for (int trial = 0; trial < 50; ++trial) {
                std::vector<Rational> r;
                if (n == d) {
                    r.assign(static_cast<std::size_t>(n), testutil::random_positive_rational(rng));
                } else {
                    r = random_feasible_slice_sums(n, d, rng);
                }
                auto closed = singleton_solution(d, n, r, kExact);
                auto greedy = realize(d, r, kExact);
                require(closed.support() == greedy.support(),
                        "realize and singleton_solution must coincide entry-for-entry");

                if (n == d + 1) {
                    auto solved = oracles::solve_slice_system(d, r);
                    require(solved.has_value(),
                            "square slice-sum system must have a unique solution");
                    auto tuples = canonical_tuples(n, d);
                    for (std::size_t j = 0; j < tuples.size(); ++j) {
                        require((*solved)[j] >= 0, "unique solution must be nonnegative");
                        require((*solved)[j] == closed.entry(tuples[j]),
                                "unique solution must equal the closed form");
                    }
                }
            }
        }
    }
}

// ---------------------------------------------------------------- criterion 3

void criterion_3_constructive_realization() {
    std::mt19937_64 rng(1003);
    Rational dfact[5];
    for (int d = 2; d <= 4; ++d) dfact[d] = factorial<Rational>(d);
    for (int trial = 0; trial < 500; ++trial) {
        int d = 2 + static_cast<int>(rng() % 3);
        int n = d + static_cast<int>(rng() % (11 - d));
        auto r = random_feasible_slice_sums(n, d, rng);
        auto a = realize(d, r, kExact);
        require(slice_sums(a) == r, "slice sums must reconstruct exactly");
        require(a.support().size() <= static_cast<std::size_t>(n), "support must have at most n tuples");
        Rational positions(static_cast<long>(a.support().size()));
        positions *= dfact[d];
        require(positions <= Rational(n) * dfact[d],
                "full-array positive entries must be at most n*d!");
        for (const auto& [tuple, value] : a.support())
            require(value > 0, "stored entries must be positive");
    }
}

// ---------------------------------------------------------------- criterion 4

void criterion_4_feasibility_grid() {
    for (int d : {2, 3}) {
        for (int n = 1; n <= 4; ++n) {
            std::vector<long> values(static_cast<std::size_t>(n), 0);
            while (true) {
                std::vector<Rational> r;
                for (long v : values) r.push_back(Rational(v));
                bool lib = is_realizable(d, r, kExact);
                bool oracle = oracles::bruteforce_feasible(d, r);
                require(lib == oracle, "is_realizable must match the brute-force oracle on the grid");

                int pos = 0;
                while (pos < n && values[static_cast<std::size_t>(pos)] == 3) {
                    values[static_cast<std::size_t>(pos)] = 0;
                    ++pos;
                }
                if (pos == n) break;
                ++values[static_cast<std::size_t>(pos)];
            }
        }
    }
}

// ---------------------------------------------------------------- criterion 5

void criterion_5_grassmann_decomposition() {
    std::mt19937_64 rng(1005);
    int produced = 0;
    while (produced < 500) {
        for (int n = 1; n <= 10 && produced < 500; ++n) {
            for (int k = 0; k <= n && produced < 500; ++k) {
                SymMatrix x = random_hull_point(n, k, rng());
                auto comb = grassmann_decompose(x, k);
                ++produced;

                require(comb.terms.size() <= static_cast<std::size_t>(n),
                        "at most n projector terms");
                Matrix<double> recon(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
                for (const auto& term : comb.terms) {
                    const SymMatrix& p = term.atom;
                    double proj_resid = frobenius(subtract(multiply(p.data(), p.data()), p.data()));
                    require(proj_resid <= 1e-8, "||P^2 - P||_F <= 1e-8");
                    require(std::fabs(p.trace_value() - k) <= 1e-8, "|tr P - k| <= 1e-8");
                    for (std::size_t i = 0; i < recon.rows(); ++i)
                        for (std::size_t j = 0; j < recon.cols(); ++j)
                            recon(i, j) += term.weight * p(static_cast<int>(i), static_cast<int>(j));
                }
                require(frobenius(subtract(recon, x.data())) <= 1e-8,
                        "projector reconstruction within 1e-8");
            }
        }
    }
}

// ---------------------------------------------------------------- criterion 6

void criterion_6_fan_consistency() {
    std::mt19937_64 rng(1006);
    std::uniform_real_distribution<double> unif(-2.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        Matrix<double> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double v = unif(rng);
                m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
                m(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = v;
            }
        SymMatrix b(m);
        auto oracle = oracles::shifted_spectrum_desc(b, 3.7);
        for (int k = 1; k <= n; ++k) {
            FanResult fan = fan_value(b, k);
            require(std::fabs(fan.value - oracles::top_k_sum(oracle, k)) <= 1e-8,
                    "fan_value must match the shifted independent eigensolve");
            require(std::fabs(trace(multiply(b.data(), fan.maximizer.data())) - fan.value) <= 1e-8,
                    "the maximizer must attain the Fan value");
            for (int s = 0; s < 50; ++s) {
                SymMatrix x = random_hull_point(n, k, rng());
                require(trace(multiply(b.data(), x.data())) <= fan.value + 1e-8,
                        "tr(BX) <= fan_value + 1e-8 over hull points");
            }
        }
    }
}

// ---------------------------------------------------------------- criterion 7

void criterion_7_rado() {
    std::mt19937_64 rng(1007);
    std::uniform_real_distribution<double> unif(-3.0, 3.0);

    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        std::vector<double> y;
        for (int i = 0; i < n; ++i) y.push_back(unif(rng));
        int m = 1 + static_cast<int>(rng() % 5);
        auto weights = testutil::random_convex_weights<double>(m, rng);
        std::vector<double> x(static_cast<std::size_t>(n), 0.0);
        for (int j = 0; j < m; ++j) {
            auto v = permuted(testutil::random_permutation(n, rng), y);
            for (int i = 0; i < n; ++i)
                x[static_cast<std::size_t>(i)] += weights[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(i)];
        }

        auto comb = rado_decompose(x, y, kFloat);
        require(comb.terms.size() <= static_cast<std::size_t>(n), "at most n permutation atoms");
        for (const auto& term : comb.terms) validate(term.atom);
        auto recon = testutil::reconstruct_permutations(comb, y);
        require(testutil::inf_norm_diff(recon, x) <= 1e-9,
                "permutation reconstruction within 1e-9");
    }

    int refused = 0;
    while (refused < 300) {
        int n = 2 + static_cast<int>(rng() % 7);
        std::vector<double> x, y;
        for (int i = 0; i < n; ++i) {
            x.push_back(unif(rng));
            y.push_back(unif(rng));
        }
        if (refused % 2 == 1) {
            // equal totals, but mass moved outward so x strictly majorizes y
            x = y;
            auto mx = std::max_element(x.begin(), x.end());
            auto mn = std::min_element(x.begin(), x.end());
            if (mx == mn || *mx - *mn < 1e-6) continue;
            *mx += 0.5;
            *mn -= 0.5;
        }
        if (is_majorized(x, y, kFloat)) continue;
        bool threw = false;
        try {
            rado_decompose(x, y, kFloat);
        } catch (const NotMajorizedError&) {
            threw = true;
        }
        require(threw, "non-majorized pairs must fail with the typed error");
        ++refused;
    }
}

// ---------------------------------------------------------------- criterion 8

void criterion_8_extreme_points() {
    SymHypermatrix<Rational> cycle(4, 2);
    cycle.set({1, 2}, Rational(1));
    cycle.set({2, 3}, Rational(1));
    cycle.set({3, 4}, Rational(1));
    cycle.set({1, 4}, Rational(1));
    auto reduced = extreme_reduce(cycle);
    require(is_extreme(reduced), "reduced 4-cycle must be extreme");
    require(slice_sums(reduced) == std::vector<Rational>{2, 2, 2, 2},
            "4-cycle reduction must preserve the slice sums");

    std::mt19937_64 rng(1008);
    for (int trial = 0; trial < 200; ++trial) {
        int d = 2 + static_cast<int>(rng() % 3);
        int n = d + static_cast<int>(rng() % (9 - d));
        auto a = random_hypermatrix(n, d, rng);
        auto r = extreme_reduce(a);
        require(slice_sums(r) == slice_sums(a), "extreme_reduce must preserve slice sums exactly");
        require(is_extreme(r), "extreme_reduce output must be extreme");
        require(r.support().size() <= static_cast<std::size_t>(n),
                "extreme support has at most n tuples");
    }

    for (int d = 2; d <= 5; ++d)
        for (int n = d + 1; n <= 8; ++n)
            require(constraint_rank(d, n) == n, "constraint rank must equal n");
}

// ---------------------------------------------------------------- criterion 9

void criterion_9_hypergraphs() {
    std::mt19937_64 rng(1009);
    for (int trial = 0; trial < 200; ++trial) {
        int d = 2 + static_cast<int>(rng() % 3);
        int n = d + static_cast<int>(rng() % (11 - d));
        auto sums = random_feasible_slice_sums(n, d, rng);
        const Rational fact = factorial<Rational>(d - 1);
        std::vector<Rational> deg;
        for (const auto& v : sums) deg.push_back(Rational(v / fact));

        auto h = realize_degrees(d, deg, kExact);
        require(degrees(h) == deg, "degrees must reconstruct exactly");
        require(h.edges.size() <= static_cast<std::size_t>(n),
                "at most n positive-weight edges");

        auto a = to_hypermatrix(h);
        auto back = slice_sums(a);
        auto hdeg = degrees(h);
        for (int i = 0; i < n; ++i)
            require(back[static_cast<std::size_t>(i)] ==
                        Rational(fact * hdeg[static_cast<std::size_t>(i)]),
                    "slice sums must equal (d-1)! times the degrees");
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        std::function<void()> body;
    };
    const std::vector<Criterion> criteria{
        {1, "known infeasible slice sums rejected via check (exit 2, exact verdict)", criterion_1_known_infeasible_inputs},
        {2, "singleton closed forms match realize; solve oracle confirms uniqueness", criterion_2_singletons},
        {3, "500 exact realizations: slice sums, support <= n, entries <= n*d!", criterion_3_constructive_realization},
        {4, "feasibility equals brute-force oracle on the {0..3}^n grid", criterion_4_feasibility_grid},
        {5, "500 hull points decompose into <= n near-projectors within 1e-8", criterion_5_grassmann_decomposition},
        {6, "fan values match the shifted eigensolve; tr(BX) bounded by fan", criterion_6_fan_consistency},
        {7, "rado decompositions reconstruct within 1e-9; typed refusals", criterion_7_rado},
        {8, "extreme reduction preserves slice sums; constraint rank = n", criterion_8_extreme_points},
        {9, "degree realizations exact; (d-1)! correspondence round-trips", criterion_9_hypergraphs},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        long long before = g_assertions;
        try {
            c.body();
            std::printf("criterion %d: PASS  (%lld checks) %s\n", c.id, g_assertions - before, c.label);
        } catch (const std::exception& e) {
            ++failed;
            std::printf("criterion %d: FAIL  %s: %s\n", c.id, c.label, e.what());
        }
    }
    if (failed == 0)
        std::printf("acceptance: all %zu criteria passed (%lld checks)\n", criteria.size(), g_assertions);
    else
        std::printf("acceptance: %d of %zu criteria FAILED\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
