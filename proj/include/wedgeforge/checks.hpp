#pragma once

// Property suites over the bundled corpus, run by `wedgeforge corpus-check`
// and by the test binaries.

#include "wedgeforge/charmaps.hpp"
#include "wedgeforge/complexes.hpp"
#include "wedgeforge/corpus.hpp"
#include "wedgeforge/intlin.hpp"
#include "wedgeforge/nests.hpp"
#include "wedgeforge/polyprod.hpp"
#include "wedgeforge/rings.hpp"
#include "wedgeforge/wedge.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace wedgeforge::checks {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string detail; // first failure, if any
    double seconds = 0.0;
};

namespace detail {

class Recorder {
public:
    explicit Recorder(std::string name) { result_.name = std::move(name); }

    void expect(bool ok, const std::string& what) {
        ++result_.cases;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.detail = what;
        }
    }

    CheckResult finish(std::chrono::steady_clock::time_point start) {
        result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return result_;
    }

private:
    CheckResult result_;
};

template <typename Body>
CheckResult timed(const std::string& name, Body&& body) {
    const auto start = std::chrono::steady_clock::now();
    Recorder rec(name);
    try {
        body(rec);
    } catch (const std::exception& e) {
        rec.expect(false, std::string("exception: ") + e.what());
    }
    return rec.finish(start);
}

inline std::string describe(const std::string& name, const WedgeVector& j) { return name + " J=(" + j.str() + ")"; }

/// Corpus complexes plus their wedges with d(J) ≤ m + extra.
inline std::vector<std::pair<std::string, SimplicialComplex>> complexes_with_wedges(int extra) {
    std::vector<std::pair<std::string, SimplicialComplex>> out;
    for (const auto& [name, k] : corpus::complexes()) {
        for (const auto& j : corpus::weight_vectors_up_to(k.vertex_count(), static_cast<int>(k.vertex_count()) + extra))
            out.emplace_back(describe(name, j), wedge_J(k, j).complex);
    }
    return out;
}

inline SimplicialComplex prefixed(const SimplicialComplex& k, const std::string& prefix) {
    std::vector<std::string> labels;
    for (const auto& l : k.vertices()) labels.push_back(prefix + l);
    return relabel(k, labels);
}

inline bool smith_certificate_ok(const IntMatrix& a, const SmithForm& s) {
    if (!(s.U * a * s.V == s.D)) return false;
    if (abs(det(s.U)) != 1 || abs(det(s.V)) != 1) return false;
    for (std::size_t r = 0; r < s.D.rows(); ++r)
        for (std::size_t c = 0; c < s.D.cols(); ++c)
            if (r != c && s.D(r, c) != 0) return false;
    for (std::size_t t = 0; t < s.divisors.size(); ++t) {
        if (s.divisors[t] < 0) return false;
        if (t + 1 < s.divisors.size()) {
            const Integer& a0 = s.divisors[t];
            const Integer& a1 = s.divisors[t + 1];
            if (a0 == 0 ? a1 != 0 : a1 % a0 != 0) return false;
        }
    }
    return true;
}

} // namespace detail

/// faces() is subset-closed, minimal non-faces are non-faces with all proper
/// subsets present, and the complex is recovered from its minimal non-faces.
inline CheckResult check_face_structure() {
    return detail::timed("faces/minimal non-faces/reconstruction", [](detail::Recorder& rec) {
        for (const auto& [name, k] : detail::complexes_with_wedges(3)) {
            const FaceSet fs = face_set(k);
            bool closed = true;
            for (Face f : fs)
                for (auto v : f.members())
                    if (fs.count(f.without(v)) == 0) closed = false;
            rec.expect(closed, name + ": faces not closed under subsets");
            const auto mnf = minimal_nonfaces(k);
            bool minimal_ok = true;
            for (Face t : mnf) {
                if (fs.count(t) != 0) minimal_ok = false;
                for (auto v : t.members())
                    if (fs.count(t.without(v)) == 0) minimal_ok = false;
            }
            rec.expect(minimal_ok, name + ": minimal non-face inconsistency");
            rec.expect(complex_avoiding(k.vertices(), mnf) == k, name + ": reconstruction from minimal non-faces differs");
        }
    });
}

inline CheckResult check_join_laws() {
    return detail::timed("join unit and associativity", [](detail::Recorder& rec) {
        const auto cs = corpus::complexes();
        for (const auto& a : cs) {
            rec.expect(join(a.complex, SimplicialComplex::irrelevant()) == a.complex, a.name + ": K * {∅} != K");
            rec.expect(join(SimplicialComplex::irrelevant(), a.complex) == a.complex, a.name + ": {∅} * K != K");
            for (const auto& b : cs)
                for (const auto& c : cs) {
                    const auto x = detail::prefixed(a.complex, "a");
                    const auto y = detail::prefixed(b.complex, "b");
                    const auto z = detail::prefixed(c.complex, "c");
                    rec.expect(join(join(x, y), z) == join(x, join(y, z)),
                               a.name + "*" + b.name + "*" + c.name + ": join not associative");
                }
        }
    });
}

inline CheckResult check_fh_vectors() {
    return detail::timed("h-vector sums to facet count", [](detail::Recorder& rec) {
        for (const auto& [name, k] : detail::complexes_with_wedges(3)) {
            const auto fh = f_h_vectors(k);
            std::int64_t sum = 0;
            for (auto h : fh.h) sum += h;
            rec.expect(fh.h.front() == 1, name + ": h_0 != 1");
            rec.expect(sum == static_cast<std::int64_t>(k.facets().size()), name + ": sum h != facet count");
        }
    });
}

/// wedge_J agrees with the minimal-non-face construction.
inline CheckResult check_wedge_oracle(int extra = 4) {
    return detail::timed("wedge vs minimal non-face oracle", [extra](detail::Recorder& rec) {
        for (const auto& [name, k] : corpus::complexes()) {
            const auto m = static_cast<int>(k.vertex_count());
            for (const auto& j : corpus::weight_vectors_up_to(k.vertex_count(), m + extra)) {
                rec.expect(wedge_J(k, j) == wedged_from_nonfaces(k, j), detail::describe(name, j) + ": oracle mismatch");
            }
        }
    });
}

inline CheckResult check_order_independence(std::uint64_t seed, int orders, int extra = 4) {
    return detail::timed("wedge order independence", [=](detail::Recorder& rec) {
        std::mt19937_64 rng(seed);
        for (const auto& [name, k] : corpus::complexes()) {
            const auto m = static_cast<int>(k.vertex_count());
            for (const auto& j : corpus::weight_vectors_up_to(k.vertex_count(), m + extra)) {
                const WedgedComplex reference = wedge_J(k, j);
                for (int r = 0; r < orders; ++r) {
                    rec.expect(wedge_in_order(k, random_wedge_order(j, rng)) == reference,
                               detail::describe(name, j) + ": random order differs");
                }
            }
        }
    });
}

/// K(J) has d(J) vertices and is pure of dimension d(J) - m + n - 1.
inline CheckResult check_wedge_dimensions(int extra = 4) {
    return detail::timed("K(J) vertex count and dimension", [extra](detail::Recorder& rec) {
        for (const auto& [name, k] : corpus::complexes()) {
            const auto m = static_cast<int>(k.vertex_count());
            const int n = k.dimension() + 1;
            for (const auto& j : corpus::weight_vectors_up_to(k.vertex_count(), m + extra)) {
                const auto kj = wedge_J(k, j).complex;
                rec.expect(static_cast<int>(kj.vertex_count()) == j.d() && kj.is_pure() && kj.dimension() == j.d() - m + n - 1,
                           detail::describe(name, j) + ": wrong size or dimension");
                rec.expect(pseudomanifold_check(kj).passed, detail::describe(name, j) + ": pseudomanifold check failed");
            }
        }
    });
}

inline CheckResult check_smith_certificates(std::uint64_t seed, int random_cases = 200) {
    return detail::timed("Smith normal form certificates", [=](detail::Recorder& rec) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> dim(1, 5);
        std::uniform_int_distribution<int> entry(-6, 6);
        for (int c = 0; c < random_cases; ++c) {
            IntMatrix a(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
            for (std::size_t r = 0; r < a.rows(); ++r)
                for (std::size_t col = 0; col < a.cols(); ++col) a(r, col) = entry(rng);
            rec.expect(detail::smith_certificate_ok(a, smith_normal_form(a)), "random matrix certificate failed");
        }
        for (const auto& e : corpus::characteristic_pairs()) {
            const auto m = static_cast<int>(e.pair.K.vertex_count());
            for (const auto& j : corpus::weight_vectors_up_to(e.pair.K.vertex_count(), m + 2)) {
                const IntMatrix lj = lambda_J_matrix(e.pair.lambda, j);
                rec.expect(detail::smith_certificate_ok(lj, smith_normal_form(lj)), detail::describe(e.name, j) + ": certificate failed");
            }
        }
    });
}

/// (K(J), λ(J)) is characteristic whenever (K, λ) is.
inline CheckResult check_characteristic_theorem(int extra = 4) {
    return detail::timed("lambda(J) characteristic", [extra](detail::Recorder& rec) {
        for (const auto& e : corpus::characteristic_pairs()) {
            const auto m = static_cast<int>(e.pair.K.vertex_count());
            for (const auto& j : corpus::weight_vectors_up_to(e.pair.K.vertex_count(), m + extra)) {
                const auto derived = build_lambda_J(e.pair, j);
                const auto report = verify_characteristic(derived.KJ.complex, derived.lambda_J_canonical());
                rec.expect(report.passed, detail::describe(e.name, j) + ": verification failed");
                rec.expect(rank(derived.lambda_J) == static_cast<std::size_t>(j.d()) - e.pair.lambda.cols() + e.pair.lambda.rows(),
                           detail::describe(e.name, j) + ": rank of lambda(J) wrong");
            }
        }
    });
}

inline CheckResult check_kernels(int extra = 4) {
    return detail::timed("kernel S(J) saturated", [extra](detail::Recorder& rec) {
        for (const auto& e : corpus::characteristic_pairs()) {
            const auto m = static_cast<int>(e.pair.K.vertex_count());
            const IntMatrix s = kernel_S(e.pair);
            rec.expect((e.pair.lambda * s).is_zero() && smith_normal_form(s).all_unit(), e.name + ": S not a saturated kernel");
            for (const auto& j : corpus::weight_vectors_up_to(e.pair.K.vertex_count(), m + extra)) {
                rec.expect(verify_kernel_J(lambda_J_matrix(e.pair.lambda, j), build_S_J(s, j), e.pair.lambda.cols(), e.pair.lambda.rows()),
                           detail::describe(e.name, j) + ": kernel check failed");
            }
        }
    });
}

/// The two presentations have equal graded ranks; the reduced presentation too;
/// they match the h-vector of K(J).
inline CheckResult check_presentations(int extra = 4, int max_degree = 10) {
    return detail::timed("standard vs condensed presentations", [=](detail::Recorder& rec) {
        for (const auto& e : corpus::characteristic_pairs()) {
            const auto m = static_cast<int>(e.pair.K.vertex_count());
            for (const auto& j : corpus::weight_vectors_up_to(e.pair.K.vertex_count(), m + extra)) {
                const auto condensed = graded_dims(presentation_condensed(e.pair.K, e.pair.lambda, j), max_degree);
                const auto standard = graded_dims(presentation_standard(e.pair.K, e.pair.lambda, j), max_degree);
                const auto reduced =
                    graded_dims(eliminate_unit_variables(presentation_condensed(e.pair.K, e.pair.lambda, j)), max_degree);
                rec.expect(condensed == standard, detail::describe(e.name, j) + ": standard and condensed ranks differ");
                rec.expect(condensed == reduced, detail::describe(e.name, j) + ": elimination changed ranks");
                auto betti = betti_MJ(e.pair.K, e.pair.lambda, j).values;
                betti.resize(static_cast<std::size_t>(max_degree) + 1, 0);
                rec.expect(betti == condensed, detail::describe(e.name, j) + ": h-vector differs from graded ranks");
            }
        }
    });
}

/// Hilbert series of SR^J(K) against a direct count of monomials not
/// divisible by any generator, and the regular-sequence comparison with the
/// Stanley-Reisner series of K(J).
inline CheckResult check_hilbert(int max_entry = 3, int max_degree = 10) {
    return detail::timed("weighted Hilbert series", [=](detail::Recorder& rec) {
        for (const auto& [name, k] : corpus::complexes()) {
            for (const auto& j : corpus::weight_vectors_bounded(k.vertex_count(), max_entry)) {
                const auto coeffs = hilbert_weighted(k, j).coefficients(static_cast<std::size_t>(max_degree));
                const auto gens = weighted_ideal(k, j);
                for (int d = 0; d <= max_degree; ++d) {
                    std::vector<Exponents> mons;
                    wedgeforge::detail::monomials_of_degree(k.vertex_count(), d, mons);
                    std::int64_t count = 0;
                    for (const auto& mon : mons) {
                        bool in_ideal = false;
                        for (const auto& g : gens) {
                            bool div = true;
                            for (std::size_t i = 0; i < g.size(); ++i)
                                if (g[i] > mon[i]) div = false;
                            if (div) in_ideal = true;
                        }
                        if (!in_ideal) ++count;
                    }
                    rec.expect(coeffs[static_cast<std::size_t>(d)] == count,
                               detail::describe(name, j) + ": coefficient mismatch at degree " + std::to_string(d));
                }
                HilbertSeries shifted = hilbert_weighted(k, j);
                shifted.denominator_power += j.d() - static_cast<int>(k.vertex_count());
                const auto sr = hilbert_stanley_reisner(wedge_J(k, j).complex);
                rec.expect(shifted.coefficients(static_cast<std::size_t>(max_degree)) == sr.coefficients(static_cast<std::size_t>(max_degree)),
                           detail::describe(name, j) + ": regular-sequence comparison failed");
            }
        }
    });
}

inline CheckResult check_subspace_equality(int extra = 4) {
    return detail::timed("wedge/product subspace equality", [extra](detail::Recorder& rec) {
        for (const auto& [name, k] : corpus::complexes()) {
            const auto m = static_cast<int>(k.vertex_count());
            for (const auto& j : corpus::weight_vectors_up_to(k.vertex_count(), m + extra)) {
                const auto cmp = compare_wedge_subspaces(k, j);
                rec.expect(cmp.equal, detail::describe(name, j) + ": " + cmp.first_difference.value_or("differs"));
            }
        }
    });
}

/// ∂∂ = 0 and χ(cells) = χ(homology) on the real models.
inline CheckResult check_chain_complexes() {
    return detail::timed("cubical boundary squares to zero", [](detail::Recorder& rec) {
        for (const auto& [name, k] : corpus::complexes()) {
            const auto m = static_cast<int>(k.vertex_count());
            for (const auto& j : corpus::weight_vectors_up_to(k.vertex_count(), m + 2)) {
                for (int p : {1, 2}) {
                    if (p * j.d() > 10) continue;
                    const auto model = real_model_wedged(k, j, p);
                    rec.expect(boundary_squares_to_zero(boundary_matrices(model)), detail::describe(name, j) + ": dd != 0");
                    const auto h = cubical_homology(model);
                    std::int64_t chi = 0;
                    for (std::size_t i = 0; i < h.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * h[i].betti;
                    rec.expect(chi == model.euler_characteristic(), detail::describe(name, j) + ": Euler characteristic mismatch");
                }
            }
        }
        for (int d = 1; d <= 8; ++d) {
            // Two points with powers (d, 1) give the boundary of a cube: a sphere.
            const auto h = cubical_homology(real_model(corpus::two_points(), {d, 1}));
            bool sphere = h.size() == static_cast<std::size_t>(d + 1) && h.front().betti == 1 && h.back().betti == 1 &&
                          total_betti(h) == 2;
            rec.expect(sphere, "boundary of the " + std::to_string(d + 1) + "-cube is not a sphere");
        }
    });
}

inline CheckResult check_order_relation(std::uint64_t seed, int trials = 500) {
    return detail::timed("nest order is a strict partial order", [=](detail::Recorder& rec) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> entry(1, 3);
        auto draw = [&] {
            std::vector<int> e(3);
            for (auto& x : e) x = entry(rng);
            return WedgeVector(e);
        };
        for (int t = 0; t < trials; ++t) {
            const auto a = draw(), b = draw(), c = draw();
            rec.expect(!leq(a, a), "order is reflexive");
            if (leq(a, b) && leq(b, c)) rec.expect(leq(a, c), "order is not transitive");
            rec.expect(!(leq(a, b) && leq(b, a)), "order is not antisymmetric");
            if (leq(a, b)) {
                const auto step = normal_bundle(a, b);
                rec.expect(step.complex_codimension() == b.d() - a.d(), "normal bundle rank mismatch");
            }
        }
    });
}

inline CheckResult check_nests() {
    return detail::timed("nest invariants", [](detail::Recorder& rec) {
        for (const auto& e : corpus::characteristic_pairs()) {
            std::vector<std::size_t> increments;
            for (std::size_t i = 0; i < 3; ++i) increments.push_back(i % e.pair.K.vertex_count() + 1);
            const auto report = nest_report(make_nest(e.pair, increments));
            rec.expect(report.passed, e.name + ": nest report failed");
        }
    });
}

/// Runs every suite; order is fixed.
inline std::vector<CheckResult> run_all(std::uint64_t seed = 20240601, int orders = 20) {
    return {
        check_face_structure(),
        check_join_laws(),
        check_fh_vectors(),
        check_wedge_oracle(),
        check_order_independence(seed, orders),
        check_wedge_dimensions(),
        check_smith_certificates(seed),
        check_characteristic_theorem(),
        check_kernels(),
        check_presentations(),
        check_hilbert(),
        check_subspace_equality(),
        check_chain_complexes(),
        check_order_relation(seed),
        check_nests(),
    };
}

} // namespace wedgeforge::checks
