#include "hulldec/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hulldec/errors.hpp"
#include "hulldec/json_io.hpp"
#include "hulldec/majorization.hpp"
#include "hulldec/spectral.hpp"

namespace hulldec::cli {

namespace {

struct Common {
    std::string mode;  // "", "exact" or "float"
    double eps = 1e-9;
    std::uint64_t seed = 0;
    std::string input_path;
    bool pretty = false;

    void attach(CLI::App* sub) {
        sub->add_option("--mode", mode, "Scalar arithmetic: exact | float");
        sub->add_option("--eps", eps, "Comparison tolerance in float mode")->check(CLI::PositiveNumber);
        sub->add_option("--seed", seed, "Seed for randomized commands");
        sub->add_option("--input", input_path, "Read the input document from this file instead of stdin");
        sub->add_flag("--pretty", pretty, "Pretty-print JSON output");
    }

    bool exact(bool default_exact) const {
        if (mode == "exact") return true;
        if (mode == "float") return false;
        if (mode.empty()) return default_exact;
        throw std::invalid_argument("--mode must be 'exact' or 'float'");
    }
};

Json read_document(const Common& common, std::istream& in) {
    if (!common.input_path.empty()) {
        std::ifstream file(common.input_path);
        if (!file) throw std::invalid_argument("cannot open input file: " + common.input_path);
        return Json::parse(file);
    }
    return Json::parse(in);
}

void emit(std::ostream& out, const Json& j, bool pretty) {
    out << j.dump(pretty ? 2 : -1) << "\n";
}

Json parse_inline_array(const std::string& text, const char* what) {
    Json j = Json::parse(text, nullptr, true);
    if (!j.is_array() || j.empty())
        throw std::invalid_argument(std::string(what) + ": expected a nonempty JSON array");
    return j;
}

template <class S>
std::vector<S> scalars_from_array(const Json& arr) {
    std::vector<S> out;
    out.reserve(arr.size());
    for (const Json& e : arr) out.push_back(scalar_from_json<S>(e));
    return out;
}

template <class F>
int dispatch(bool exact, double eps, F&& f) {
    if (exact) return f(ScalarMode<Rational>{});
    return f(ScalarMode<double>{eps});
}

template <class S>
std::pair<std::vector<S>, std::vector<S>> read_vector_pair(const Json& doc) {
    if (!doc.is_object() || !doc.contains("x") || !doc.contains("y"))
        throw std::invalid_argument("expected {\"x\": {\"entries\": [...]}, \"y\": {\"entries\": [...]}}");
    return {vector_from_json<S>(doc["x"]), vector_from_json<S>(doc["y"])};
}

double decomposition_residual(const ProjectorCombination& comb, const SymMatrix& x) {
    const std::size_t n = static_cast<std::size_t>(x.order());
    Matrix<double> recon(n, n);
    for (const auto& term : comb.terms)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) recon(i, j) += term.weight * term.atom(static_cast<int>(i), static_cast<int>(j));
    return frobenius(subtract(recon, x.data()));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Constructive convex decompositions: majorization, Grassmannian hulls, and "
                 "slice-sum / degree-sequence realization of symmetric hypermatrices"};
    app.require_subcommand(1);
    Common common;

    int k = 0;
    int d = 0;
    int n = 0;
    std::string slice_sums_text;
    std::string degrees_text;

    auto* c_majorize = app.add_subcommand("majorize", "Is x majorized by y? Reads {\"x\", \"y\"}");
    common.attach(c_majorize);

    auto* c_dvec = app.add_subcommand("decompose-vector",
                                      "Decompose a hypersimplex point into 0/1 vertex subsets");
    c_dvec->add_option("--k", k, "Number of ones per vertex")->required();
    common.attach(c_dvec);

    auto* c_rado = app.add_subcommand("decompose-rado",
                                      "Write x as a convex combination of permutations of y");
    common.attach(c_rado);

    auto* c_dmat = app.add_subcommand("decompose-matrix",
                                      "Decompose a hull point into rank-k projectors");
    c_dmat->add_option("--k", k, "Target trace / rank")->required();
    common.attach(c_dmat);

    auto* c_fan = app.add_subcommand("fan", "Sum of the k largest eigenvalues plus its maximizer");
    c_fan->add_option("--k", k, "Number of leading eigenvalues")->required();
    common.attach(c_fan);

    auto* c_realize = app.add_subcommand("realize", "Realize slice sums as a hypermatrix");
    c_realize->add_option("--d", d, "Hypermatrix order")->required();
    c_realize->add_option("--slice-sums", slice_sums_text, "JSON array of slice sums")->required();
    common.attach(c_realize);

    auto* c_rdeg = app.add_subcommand("realize-degrees",
                                      "Realize a weighted degree sequence as a hypergraph");
    c_rdeg->add_option("--d", d, "Edge size")->required();
    c_rdeg->add_option("--degrees", degrees_text, "JSON array of weighted degrees")->required();
    common.attach(c_rdeg);

    auto* c_check = app.add_subcommand("check", "Report realizability of slice sums");
    c_check->add_option("--d", d, "Hypermatrix order")->required();
    c_check->add_option("--slice-sums", slice_sums_text, "JSON array of slice sums")->required();
    common.attach(c_check);

    auto* c_extreme = app.add_subcommand("extreme", "Is the hypermatrix an extreme point?");
    common.attach(c_extreme);

    auto* c_reduce = app.add_subcommand("reduce", "Reduce a hypermatrix to an extreme point");
    common.attach(c_reduce);

    auto* c_dim = app.add_subcommand("dimension", "Dimension of the slice-sum polytope");
    c_dim->add_option("--d", d, "Hypermatrix order")->required();
    c_dim->add_option("--n", n, "Index range")->required();
    common.attach(c_dim);

    auto* c_random = app.add_subcommand("random-hull", "Sample a random point of the trace-k hull");
    c_random->add_option("--n", n, "Matrix order")->required();
    c_random->add_option("--k", k, "Target trace")->required();
    common.attach(c_random);

    std::vector<std::string> argv_storage = args;
    std::vector<const char*> argv;
    argv.push_back("hulldec");
    for (const std::string& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << Json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand(c_majorize)) {
            Json doc = read_document(common, in);
            return dispatch(common.exact(false), common.eps, [&](auto mode) {
                using S = decltype(mode.eps);
                auto [x, y] = read_vector_pair<S>(doc);
                bool majorized = is_majorized(x, y, mode);
                emit(out, Json{{"majorized", majorized}}, common.pretty);
                return majorized ? 0 : 2;
            });
        }

        if (app.got_subcommand(c_dvec)) {
            Json doc = read_document(common, in);
            return dispatch(common.exact(false), common.eps, [&](auto mode) {
                using S = decltype(mode.eps);
                auto x = vector_from_json<S>(doc);
                auto comb = hypersimplex_decompose(x, k, mode);
                emit(out, combination_to_json(comb, [](const SubsetIndicator& s) { return subset_to_json(s); }),
                     common.pretty);
                return 0;
            });
        }

        if (app.got_subcommand(c_rado)) {
            Json doc = read_document(common, in);
            return dispatch(common.exact(false), common.eps, [&](auto mode) {
                using S = decltype(mode.eps);
                auto [x, y] = read_vector_pair<S>(doc);
                auto comb = rado_decompose(x, y, mode);
                emit(out, combination_to_json(comb, [](const Permutation& p) { return permutation_to_json(p); }),
                     common.pretty);
                return 0;
            });
        }

        if (app.got_subcommand(c_dmat) || app.got_subcommand(c_fan)) {
            if (common.exact(false))
                throw std::invalid_argument("matrix commands run in float mode only");
            Json doc = read_document(common, in);
            SymMatrix x = matrix_from_json(doc);
            if (app.got_subcommand(c_dmat)) {
                auto comb = grassmann_decompose(x, k);
                Json j = combination_to_json(comb, [](const SymMatrix& p) { return matrix_to_json(p); });
                j["residual"] = decomposition_residual(comb, x);
                emit(out, j, common.pretty);
            } else {
                FanResult fan = fan_value(x, k);
                Json j;
                j["value"] = fan.value;
                j["maximizer"] = matrix_to_json(fan.maximizer);
                emit(out, j, common.pretty);
            }
            return 0;
        }

        if (app.got_subcommand(c_realize)) {
            Json arr = parse_inline_array(slice_sums_text, "--slice-sums");
            return dispatch(common.exact(true), common.eps, [&](auto mode) {
                using S = decltype(mode.eps);
                auto r = scalars_from_array<S>(arr);
                emit(out, hypermatrix_to_json(realize(d, r, mode)), common.pretty);
                return 0;
            });
        }

        if (app.got_subcommand(c_rdeg)) {
            Json arr = parse_inline_array(degrees_text, "--degrees");
            return dispatch(common.exact(true), common.eps, [&](auto mode) {
                using S = decltype(mode.eps);
                auto deg = scalars_from_array<S>(arr);
                emit(out, hypergraph_to_json(realize_degrees(d, deg, mode)), common.pretty);
                return 0;
            });
        }

        if (app.got_subcommand(c_check)) {
            Json arr = parse_inline_array(slice_sums_text, "--slice-sums");
            return dispatch(common.exact(true), common.eps, [&](auto mode) {
                using S = decltype(mode.eps);
                auto r = scalars_from_array<S>(arr);
                bool realizable = is_realizable(d, r, mode);
                S mx = r[0];
                S total(0);
                for (const S& v : r) {
                    if (v > mx) mx = v;
                    total += v;
                }
                Json j;
                j["realizable"] = realizable;
                j["lhs"] = scalar_to_json(S(S(d) * mx));
                j["rhs"] = scalar_to_json(total);
                emit(out, j, common.pretty);
                return realizable ? 0 : 2;
            });
        }

        if (app.got_subcommand(c_extreme) || app.got_subcommand(c_reduce)) {
            Json doc = read_document(common, in);
            const bool want_reduce = app.got_subcommand(c_reduce);
            return dispatch(common.exact(true), common.eps, [&](auto mode) {
                using S = decltype(mode.eps);
                auto a = hypermatrix_from_json<S>(doc, mode);
                if (want_reduce)
                    emit(out, hypermatrix_to_json(extreme_reduce(a)), common.pretty);
                else
                    emit(out, Json{{"extreme", is_extreme(a)}}, common.pretty);
                return 0;
            });
        }

        if (app.got_subcommand(c_dim)) {
            PolytopeDimension dim = polytope_dimension(d, n);
            Json j;
            if (dim.singleton)
                j["singleton"] = true;
            else
                j["dimension"] = dim.dimension;
            emit(out, j, common.pretty);
            return 0;
        }

        if (app.got_subcommand(c_random)) {
            if (common.exact(false))
                throw std::invalid_argument("matrix commands run in float mode only");
            emit(out, matrix_to_json(random_hull_point(n, k, common.seed)), common.pretty);
            return 0;
        }

        throw std::logic_error("unhandled subcommand");
    } catch (const InfeasibleError& e) {
        Json j{{"error", e.what()}};
        j["lhs"] = e.lhs;
        j["rhs"] = e.rhs;
        err << j.dump() << "\n";
        return 2;
    } catch (const NotMajorizedError& e) {
        err << Json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const NotInHullError& e) {
        err << Json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << Json{{"error", std::string("invalid JSON: ") + e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << Json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
}

}  // namespace hulldec::cli
