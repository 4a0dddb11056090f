#pragma once

// Command-line front end. `run_args` parses with CLI11 and dispatches; `run`
// takes an already-filled RunConfig. Exit codes: 0 ok, 1 a verification
// failed, 2 bad input.

#include "wedgeforge/charmaps.hpp"
#include "wedgeforge/checks.hpp"
#include "wedgeforge/complexes.hpp"
#include "wedgeforge/error.hpp"
#include "wedgeforge/intlin.hpp"
#include "wedgeforge/io.hpp"
#include "wedgeforge/nests.hpp"
#include "wedgeforge/polyprod.hpp"
#include "wedgeforge/rings.hpp"
#include "wedgeforge/wedge.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace wedgeforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInput = 2;

inline constexpr int kDefaultMaxD = 16;

struct RunConfig {
    std::string command;
    std::string complex_path;
    std::string lambda_path;
    std::string J; // empty: not given
    std::string powers;
    std::string increments;
    bool verify = false;
    bool oracle = false;
    bool reduce = false;
    bool standard = false;
    bool homology = false;
    bool report = false;
    bool list_faces = false;
    int max_degree = 10;
    bool max_degree_given = false;
    int power_per_copy = 1;
    int check_orders = 0;
    std::uint64_t seed = 20240601;
    int max_d = kDefaultMaxD;
    int max_ambient = kDefaultAmbientGuard;
    int degree_guard = kDefaultDegreeGuard;
    std::string format = "json";
};

/// "2,1,3" -> (2,1,3). Whitespace around tokens is ignored.
inline WedgeVector parse_weight_vector(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const auto b = tok.find_first_not_of(" \t");
        const auto e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw Error(ErrorCode::ParseError, "empty entry in \"" + s + "\"");
        tok = tok.substr(b, e - b + 1);
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "not an integer: \"" + tok + "\"");
        }
        if (used != tok.size()) throw Error(ErrorCode::ParseError, "not an integer: \"" + tok + "\"");
        if (v <= 0) throw Error(ErrorCode::NonPositiveEntry, "entry " + tok + " is not positive");
        if (v > 1'000'000) throw Error(ErrorCode::ParseError, "entry " + tok + " is out of range");
        out.push_back(static_cast<int>(v));
    }
    if (out.empty() || s.back() == ',') throw Error(ErrorCode::ParseError, "expected comma-separated integers, got \"" + s + "\"");
    return WedgeVector(out);
}

namespace detail {

using io::json;

inline SimplicialComplex load_complex(const RunConfig& c) {
    if (c.complex_path.empty()) throw Error(ErrorCode::ParseError, "--complex is required");
    return io::complex_from_json(io::read_json_file(c.complex_path));
}

inline IntMatrix load_lambda(const RunConfig& c) {
    if (c.lambda_path.empty()) throw Error(ErrorCode::ParseError, "--lambda is required");
    return io::matrix_from_json(io::read_json_file(c.lambda_path));
}

inline WedgeVector weight_vector(const RunConfig& c, const SimplicialComplex& k, bool required = true) {
    WedgeVector j = WedgeVector::ones(k.vertex_count());
    if (!c.J.empty()) j = parse_weight_vector(c.J);
    else if (required) throw Error(ErrorCode::ParseError, "--J is required");
    check_length(k, j);
    if (j.d() > c.max_d)
        throw Error(ErrorCode::GuardExceeded,
                    "d(J) = " + std::to_string(j.d()) + " exceeds --max-d " + std::to_string(c.max_d));
    return j;
}

inline void check_ambient(const RunConfig& c, int ambient) {
    if (ambient > c.max_ambient)
        throw Error(ErrorCode::AmbientTooLarge,
                    "ambient dimension " + std::to_string(ambient) + " exceeds --max-ambient " + std::to_string(c.max_ambient));
}

inline std::string matrix_text(const IntMatrix& m, const std::string& indent = "  ") {
    std::size_t w = 1;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) w = std::max(w, m(r, c).str().size());
    std::ostringstream os;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << indent << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << std::setw(static_cast<int>(w)) << m(r, c).str();
        os << "]\n";
    }
    return os.str();
}

inline std::string list_text(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

struct Outcome {
    json doc;
    std::string text;
    bool passed = true;
};

inline Outcome cmd_wedge(const RunConfig& c) {
    const auto k = load_complex(c);
    const auto j = weight_vector(c, k);
    const WedgedComplex w = c.oracle ? wedged_from_nonfaces(k, j) : wedge_J(k, j);
    Outcome o{io::to_json(w), {}, true};
    o.doc["construction"] = c.oracle ? "minimal-nonfaces" : "iterated-wedge";
    std::ostringstream text;
    text << "K(J) for J=(" << j.str() << "): " << w.complex.vertex_count() << " vertices, " << w.complex.facets().size()
         << " facets, dimension " << w.complex.dimension() << "\n";
    for (Face f : w.complex.facets()) text << "  " << io::face_json(w.complex, f).dump() << "\n";
    if (c.check_orders > 0) {
        std::mt19937_64 rng(c.seed);
        int agreed = 0;
        for (int t = 0; t < c.check_orders; ++t)
            if (wedge_in_order(k, random_wedge_order(j, rng)) == w) ++agreed;
        const bool oracle_ok = wedged_from_nonfaces(k, j) == w;
        o.passed = agreed == c.check_orders && oracle_ok;
        o.doc["order_independence"] = {
            {"orders", c.check_orders}, {"agreed", agreed}, {"seed", c.seed}, {"oracle_agrees", oracle_ok}, {"passed", o.passed}};
        text << "order independence: " << agreed << "/" << c.check_orders << " random orders agree, oracle "
             << (oracle_ok ? "agrees" : "DIFFERS") << " -> " << (o.passed ? "PASS" : "FAIL") << "\n";
    }
    o.text = text.str();
    return o;
}

inline Outcome cmd_lambda_j(const RunConfig& c) {
    const auto k = load_complex(c);
    const auto lambda = load_lambda(c);
    const auto j = weight_vector(c, k);
    const auto derived = build_lambda_J({k, lambda}, j);
    Outcome o{io::to_json(derived), {}, true};
    std::ostringstream text;
    text << "lambda(J) for J=(" << j.str() << "), columns";
    for (const auto& l : derived.column_order) text << ' ' << l;
    text << "\n" << matrix_text(derived.lambda_J);
    if (c.verify) {
        // verify_lambda_J throws TheoremViolation on failure; report it as data.
        const auto report = verify_characteristic(derived.KJ.complex, derived.lambda_J_canonical());
        o.doc["verification"] = io::to_json(report, derived.KJ.complex);
        o.passed = report.passed;
        text << "verification: facet minors " << (report.facet_minors_ok ? "ok" : "BAD") << ", face summands "
             << (report.faces_ok ? "ok" : "BAD") << " -> " << (report.passed ? "PASS" : "FAIL") << "\n";
    }
    o.text = text.str();
    return o;
}

inline Outcome cmd_kernel(const RunConfig& c) {
    const auto lambda = load_lambda(c);
    std::optional<SimplicialComplex> k;
    if (!c.complex_path.empty()) k = load_complex(c);
    WedgeVector j = WedgeVector::ones(lambda.cols());
    if (k) j = weight_vector(c, *k, false);
    else if (!c.J.empty()) {
        j = parse_weight_vector(c.J);
        if (j.size() != lambda.cols()) throw Error(ErrorCode::LengthMismatch, "J length differs from the column count");
        if (j.d() > c.max_d) throw Error(ErrorCode::GuardExceeded, "d(J) exceeds --max-d");
    }
    if (k) require_valid_base(*k, lambda);
    const IntMatrix s = kernel_S(lambda);
    const IntMatrix sj = build_S_J(s, j);
    const IntMatrix lj = lambda_J_matrix(lambda, j);
    const bool ok = verify_kernel_J(lj, sj, lambda.cols(), lambda.rows());
    json rows = json::array();
    for (auto [group, copy] : lambda_J_column_tags(j)) rows.push_back(canonical_label(group, copy));
    Outcome o{{{"J", j.entries()}, {"S", io::to_json(s)}, {"S_J", io::to_json(sj)}, {"lambda_J", io::to_json(lj)},
               {"row_order", rows}, {"passed", ok}},
              {},
              ok};
    o.text = "S:\n" + matrix_text(s) + "S(J) for J=(" + j.str() + "):\n" + matrix_text(sj) +
             "lambda(J) S(J) = 0 and S(J) saturated: " + (ok ? "PASS" : "FAIL") + "\n";
    return o;
}

inline Outcome cmd_cohomology(const RunConfig& c) {
    const auto k = load_complex(c);
    const auto lambda = load_lambda(c);
    const auto j = weight_vector(c, k);
    RingPresentation p = c.standard ? presentation_standard(k, lambda, j) : presentation_condensed(k, lambda, j);
    if (c.reduce) p = eliminate_unit_variables(p);
    Outcome o{io::to_json(p), {}, true};
    o.doc["form"] = c.standard ? "standard" : "condensed";
    o.doc["reduced"] = c.reduce;
    o.doc["J"] = j.entries();
    o.text = io::presentation_string(p) + "\n";
    if (c.max_degree_given) {
        const auto dims = graded_dims(p, c.max_degree, c.degree_guard);
        o.doc["graded_dims"] = dims;
        o.text += "ranks in degrees 0,2,4,...: " + list_text(dims) + "\n";
    }
    return o;
}

inline Outcome cmd_hilbert(const RunConfig& c) {
    const auto k = load_complex(c);
    const auto j = weight_vector(c, k);
    if (c.max_degree > c.degree_guard)
        throw Error(ErrorCode::DegreeTooLarge, "--max-degree " + std::to_string(c.max_degree) + " exceeds guard " +
                                                   std::to_string(c.degree_guard));
    const HilbertSeries h = hilbert_weighted(k, j);
    const auto coeffs = h.coefficients(static_cast<std::size_t>(std::max(c.max_degree, 0)));
    json cs = json::array();
    std::string text_cs;
    for (const auto& x : coeffs) {
        cs.push_back(x.str());
        text_cs += (text_cs.empty() ? "" : " ") + x.str();
    }
    Outcome o{{{"J", j.entries()}, {"series", io::to_json(h)}, {"reduced", io::to_json(h.reduced())}, {"coefficients", cs},
               {"grading", "t counts cohomological degree 2; one unit per variable"}},
              {},
              true};
    const auto r = h.reduced();
    std::string num;
    for (std::size_t i = 0; i < r.numerator.size(); ++i) {
        const Integer& a = r.numerator[i];
        if (a == 0) continue;
        const Integer mag = abs(a);
        std::string term = i == 0 ? mag.str() : (mag == 1 ? "" : mag.str() + " ") + (i == 1 ? "t" : "t^" + std::to_string(i));
        num += num.empty() ? (a < 0 ? "-" : "") + term : (a < 0 ? " - " : " + ") + term;
    }
    o.text = "H(t) = (" + (num.empty() ? std::string("0") : num) + ") / (1 - t)^" + std::to_string(r.denominator_power) +
             "\ncoefficients: " + text_cs + "\n";
    return o;
}

inline Outcome cmd_betti(const RunConfig& c) {
    const auto k = load_complex(c);
    const auto lambda = load_lambda(c);
    const auto j = weight_vector(c, k);
    const BettiNumbers b = betti_MJ(k, lambda, j);
    const std::string tag = b.manifold_certified ? "manifold" : "combinatorial only";
    Outcome o{{{"J", j.entries()}, {"betti", b.values}, {"manifold_certified", b.manifold_certified}, {"tag", tag},
               {"degrees", "H^0, H^2, H^4, ..."}},
              {},
              true};
    o.text = "even Betti numbers: " + list_text(b.values) + " (" + tag + ")\n";
    return o;
}

inline Outcome cmd_real_model(const RunConfig& c) {
    const auto k = load_complex(c);
    CubicalModel model;
    json source;
    if (!c.powers.empty()) {
        if (!c.J.empty()) throw Error(ErrorCode::ParseError, "--powers and --J are exclusive");
        const auto p = parse_weight_vector(c.powers);
        check_length(k, p);
        check_ambient(c, p.d());
        model = real_model(k, p.entries());
        source = {{"powers", p.entries()}};
    } else {
        const auto j = weight_vector(c, k, false);
        if (c.power_per_copy < 1) throw Error(ErrorCode::NonPositiveEntry, "--power-per-copy must be positive");
        check_ambient(c, j.d() * c.power_per_copy);
        model = real_model_wedged(k, j, c.power_per_copy);
        source = {{"J", j.entries()}, {"power_per_copy", c.power_per_copy}};
    }
    json counts = json::array();
    for (const auto& cells : model.cells) counts.push_back(cells.size());
    Outcome o{{{"ambient", model.ambient},
               {"source", source},
               {"maximal_face_count", model.maximal_faces.size()},
               {"cell_counts", counts},
               {"euler_characteristic", model.euler_characteristic()}},
              {},
              true};
    std::ostringstream text;
    text << "cubical model in [-1,1]^" << model.ambient << ": " << model.maximal_faces.size() << " maximal faces, "
         << model.cell_count() << " cells, Euler characteristic " << model.euler_characteristic() << "\n";
    if (c.list_faces) {
        o.doc["maximal_faces"] = model.maximal_faces;
        for (const auto& f : model.maximal_faces) text << "  " << f << "\n";
    }
    if (c.homology) {
        const auto h = cubical_homology(model);
        o.doc["homology"] = io::to_json(h);
        o.doc["total_betti"] = total_betti(h);
        for (std::size_t d = 0; d < h.size(); ++d) {
            if (h[d].betti == 0 && h[d].torsion.empty()) continue;
            text << "  H_" << d << " = Z^" << h[d].betti;
            for (const auto& t : h[d].torsion) text << " + Z/" << t.str();
            text << "\n";
        }
        text << "total Betti number " << total_betti(h) << "\n";
    }
    o.text = text.str();
    return o;
}

inline Outcome cmd_verify_wedge_equivalence(const RunConfig& c) {
    const auto k = load_complex(c);
    const auto j = weight_vector(c, k);
    check_ambient(c, j.d());
    const auto cmp = compare_wedge_subspaces(k, j);
    Outcome o{io::to_json(cmp), {}, cmp.equal};
    o.doc["J"] = j.entries();
    o.text = "Z(K;(D1,S0)^J) vs Z(K(J);(D1,S0)) in [-1,1]^" + std::to_string(cmp.ambient) + ", " +
             std::to_string(cmp.maximal_face_count) + " maximal faces: " + (cmp.equal ? "PASS" : "FAIL") +
             (cmp.first_difference ? " at " + *cmp.first_difference : "") + "\n";
    return o;
}

inline Outcome cmd_nest(const RunConfig& c) {
    const auto k = load_complex(c);
    const auto lambda = load_lambda(c);
    std::vector<std::size_t> increments;
    if (!c.increments.empty()) {
        const WedgeVector inc = parse_weight_vector(c.increments);
        for (int x : inc.entries()) increments.push_back(static_cast<std::size_t>(x));
    }
    const Nest nest = make_nest({k, lambda}, increments);
    if (nest.sequence.back().d() > c.max_d)
        throw Error(ErrorCode::GuardExceeded, "final d(J) exceeds --max-d " + std::to_string(c.max_d));
    Outcome o;
    json seq = json::array();
    for (const auto& j : nest.sequence) seq.push_back(j.entries());
    if (!c.report) {
        require_valid_base(k, lambda);
        json steps = json::array();
        for (std::size_t i = 1; i < nest.sequence.size(); ++i) steps.push_back(io::to_json(normal_bundle(nest.sequence[i - 1], nest.sequence[i])));
        o.doc = {{"sequence", seq}, {"steps", steps}};
        std::ostringstream text;
        for (std::size_t i = 0; i < nest.sequence.size(); ++i) {
            text << "J_" << i << " = (" << nest.sequence[i].str() << ")";
            if (i > 0) {
                const auto step = normal_bundle(nest.sequence[i - 1], nest.sequence[i]);
                text << "  normal bundle";
                for (const auto& s : step.summands) text << " " << s.multiplicity << "a_" << s.index;
            }
            text << "\n";
        }
        o.text = text.str();
        return o;
    }
    const NestReport report = nest_report(nest);
    o.doc = io::to_json(report);
    o.doc["sequence"] = seq;
    o.passed = report.passed;
    std::ostringstream text;
    text << std::left << std::setw(16) << "J" << std::setw(6) << "d" << std::setw(8) << "dim" << std::setw(8) << "H2"
         << std::setw(24) << "betti" << "normal bundle\n";
    for (const auto& s : report.stages) {
        std::string bundle = "-";
        if (s.step) {
            bundle.clear();
            for (const auto& n : s.step->summands)
                bundle += (bundle.empty() ? "" : " + ") + std::to_string(n.multiplicity) + "a_" + std::to_string(n.index);
        }
        text << std::setw(16) << "(" + s.J.str() + ")" << std::setw(6) << s.d << std::setw(8) << s.real_dimension << std::setw(8)
             << s.h2_rank << std::setw(24) << list_text(s.betti) << bundle << "\n";
    }
    text << "nest report: " << (report.passed ? "PASS" : "FAIL") << "\n";
    o.text = text.str();
    return o;
}

inline Outcome cmd_corpus_check(const RunConfig& c) {
    const auto results = checks::run_all(c.seed, c.check_orders > 0 ? c.check_orders : 20);
    Outcome o;
    o.doc = {{"seed", c.seed}, {"checks", json::array()}};
    std::ostringstream text;
    for (const auto& r : results) {
        o.passed = o.passed && r.passed;
        // Timings are left out of JSON so that output stays byte-stable.
        o.doc["checks"].push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
        text << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases, " << std::fixed << std::setprecision(2)
             << r.seconds << " s)" << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
    }
    o.doc["passed"] = o.passed;
    text << (o.passed ? "all checks passed" : "some checks FAILED") << "\n";
    o.text = text.str();
    return o;
}

inline int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::TheoremViolation:
    case ErrorCode::InvalidBase:
    case ErrorCode::ChainComplexInconsistent: return kExitFailed;
    default: return kExitInput;
    }
}

} // namespace detail

inline int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (c.format != "json" && c.format != "text") {
        err << "error: --format must be json or text\n";
        return kExitInput;
    }
    try {
        detail::Outcome o;
        if (c.command == "wedge") o = detail::cmd_wedge(c);
        else if (c.command == "lambda-j") o = detail::cmd_lambda_j(c);
        else if (c.command == "kernel") o = detail::cmd_kernel(c);
        else if (c.command == "cohomology") o = detail::cmd_cohomology(c);
        else if (c.command == "hilbert") o = detail::cmd_hilbert(c);
        else if (c.command == "betti") o = detail::cmd_betti(c);
        else if (c.command == "real-model") o = detail::cmd_real_model(c);
        else if (c.command == "verify-wedge-equivalence") o = detail::cmd_verify_wedge_equivalence(c);
        else if (c.command == "nest") o = detail::cmd_nest(c);
        else if (c.command == "corpus-check") o = detail::cmd_corpus_check(c);
        else {
            err << "error: unknown command \"" << c.command << "\"\n";
            return kExitInput;
        }
        if (c.format == "json") out << o.doc.dump(2) << "\n";
        else out << o.text;
        return o.passed ? kExitOk : kExitFailed;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return detail::exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

/// `args` excludes the program name.
inline int run_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Simplicial wedges, derived characteristic matrices and toric cohomology", "wedgeforge"};
    app.require_subcommand(1);
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--max-d", c.max_d, "Guard on d(J) for matrix work");
    app.add_option("--max-ambient", c.max_ambient, "Guard on the cube dimension of real models");
    app.add_option("--degree-guard", c.degree_guard, "Guard on --max-degree");

    auto complex_opt = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--complex", c.complex_path, "Complex JSON file");
        if (required) o->required();
    };
    auto lambda_opt = [&](CLI::App* sub) { sub->add_option("--lambda", c.lambda_path, "Characteristic matrix JSON file")->required(); };
    auto j_opt = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--J", c.J, "Weight vector, e.g. 2,1,3");
        if (required) o->required();
    };

    auto* wedge = app.add_subcommand("wedge", "Build K(J)");
    complex_opt(wedge, true);
    j_opt(wedge, true);
    wedge->add_flag("--oracle", c.oracle, "Build from minimal non-faces instead of iterated wedges");
    wedge->add_option("--check-order-independence", c.check_orders, "Compare N random wedge orders");
    wedge->add_option("--seed", c.seed, "Seed for random orders");

    auto* lambda_j = app.add_subcommand("lambda-j", "Derived characteristic matrix");
    complex_opt(lambda_j, true);
    lambda_opt(lambda_j);
    j_opt(lambda_j, true);
    lambda_j->add_flag("--verify", c.verify, "Check (K(J), lambda(J)) is characteristic");

    auto* kernel = app.add_subcommand("kernel", "Kernel matrices S and S(J)");
    complex_opt(kernel, false);
    lambda_opt(kernel);
    j_opt(kernel, false);

    auto* cohomology = app.add_subcommand("cohomology", "Cohomology ring presentation of M(J)");
    complex_opt(cohomology, true);
    lambda_opt(cohomology);
    j_opt(cohomology, true);
    cohomology->add_flag("--standard", c.standard, "Presentation on the vertices of K(J)");
    cohomology->add_flag("--condensed", "Presentation on v_1..v_m (default)");
    cohomology->add_flag("--reduce", c.reduce, "Eliminate variables with unit coefficients");
    auto* cohom_degree = cohomology->add_option("--max-degree", c.max_degree, "Also report graded ranks up to this degree");

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of the J-weighted Stanley-Reisner ring");
    complex_opt(hilbert, true);
    j_opt(hilbert, true);
    hilbert->add_option("--max-degree", c.max_degree, "Number of coefficients");

    auto* betti = app.add_subcommand("betti", "Even Betti numbers of M(J)");
    complex_opt(betti, true);
    lambda_opt(betti);
    j_opt(betti, true);

    auto* real = app.add_subcommand("real-model", "Cubical model of a real polyhedral product");
    complex_opt(real, true);
    j_opt(real, false);
    real->add_option("--powers", c.powers, "Pair (D1,S0)^p_i per vertex of K");
    real->add_option("--power-per-copy", c.power_per_copy, "With --J: power of (D1,S0) on every vertex of K(J)");
    real->add_flag("--homology", c.homology, "Integral homology");
    real->add_flag("--list-faces", c.list_faces, "List maximal cubical faces");

    auto* equiv = app.add_subcommand("verify-wedge-equivalence", "Compare Z(K;(D1,S0)^J) with Z(K(J);(D1,S0))");
    complex_opt(equiv, true);
    j_opt(equiv, true);

    auto* nest = app.add_subcommand("nest", "Nest of embeddings M(J_0) in M(J_1) in ...");
    complex_opt(nest, true);
    lambda_opt(nest);
    nest->add_option("--increments", c.increments, "Groups to increment, e.g. 1,1,2");
    nest->add_flag("--report", c.report, "Check dimensions, H2 ranks and normal bundles");

    auto* corpus = app.add_subcommand("corpus-check", "Run the property suites on the bundled corpus");
    corpus->add_option("--seed", c.seed, "Seed for randomized checks");
    corpus->add_option("--orders", c.check_orders, "Random wedge orders per case");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }
    for (auto* sub : app.get_subcommands()) c.command = sub->get_name();
    c.max_degree_given = cohom_degree->count() > 0;
    if (c.standard && cohomology->get_option("--condensed")->count() > 0) {
        err << "error: --standard and --condensed are exclusive\n";
        return kExitInput;
    }
    return run(c, out, err);
}

} // namespace wedgeforge::cli
