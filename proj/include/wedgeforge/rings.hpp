#pragma once

// Graded ring presentations Z[v]/(monomials + polynomials + linear forms):
// Stanley-Reisner and weighted ideals, the two presentations of H*(M(J)),
// Hilbert series and graded ranks.
//
// Grading: every variable has cohomological degree 2 and the series variable
// t counts one unit per degree 2.

#include "wedgeforge/charmaps.hpp"
#include "wedgeforge/complexes.hpp"
#include "wedgeforge/intlin.hpp"
#include "wedgeforge/wedge.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace wedgeforge {

using Exponents = std::vector<int>;
using Polynomial = std::map<Exponents, Integer>;
using Rational = boost::multiprecision::cpp_rational;

struct Variable {
    std::string name;
    int degree = 2;
    friend bool operator==(const Variable&, const Variable&) = default;
};

struct RingPresentation {
    std::vector<Variable> variables;
    std::vector<Exponents> monomial_generators;
    /// Non-monomial relations; only produced by eliminate_unit_variables.
    std::vector<Polynomial> polynomial_generators;
    std::vector<std::vector<Integer>> linear_forms;

    friend bool operator==(const RingPresentation&, const RingPresentation&) = default;
};

/// Numerator / (1 - t)^denominator_power.
struct HilbertSeries {
    std::vector<Integer> numerator;
    int denominator_power = 0;

    std::vector<Integer> coefficients(std::size_t max_degree) const {
        std::vector<Integer> out(max_degree + 1);
        for (std::size_t d = 0; d <= max_degree; ++d) {
            for (std::size_t i = 0; i < numerator.size() && i <= d; ++i) {
                if (numerator[i] == 0) continue;
                out[d] += numerator[i] * series_binomial(d - i);
            }
        }
        return out;
    }

    /// Cancels common factors (1 - t) between numerator and denominator.
    HilbertSeries reduced() const {
        HilbertSeries h = *this;
        while (h.denominator_power > 0 && !h.numerator.empty() &&
               std::accumulate(h.numerator.begin(), h.numerator.end(), Integer(0)) == 0) {
            // Synthetic division by (1 - t).
            std::vector<Integer> q(h.numerator.size() - 1);
            Integer carry = 0;
            for (std::size_t i = 0; i + 1 < h.numerator.size(); ++i) {
                carry += h.numerator[i];
                q[i] = carry;
            }
            h.numerator = std::move(q);
            --h.denominator_power;
        }
        while (!h.numerator.empty() && h.numerator.back() == 0) h.numerator.pop_back();
        return h;
    }

private:
    // Coefficient of t^d in (1 - t)^{-k}.
    Integer series_binomial(std::size_t d) const {
        if (denominator_power == 0) return d == 0 ? 1 : 0;
        const std::size_t k = static_cast<std::size_t>(denominator_power);
        Integer r = 1;
        for (std::size_t i = 1; i < k; ++i) r = r * (d + i) / i;
        return r;
    }
};

inline std::vector<Exponents> sr_ideal(const SimplicialComplex& k) {
    std::vector<Exponents> gens;
    for (Face tau : minimal_nonfaces(k)) {
        Exponents e(k.vertex_count(), 0);
        for (auto v : tau.members()) e[v] = 1;
        gens.push_back(std::move(e));
    }
    return gens;
}

/// I_K^J: one generator Π v_i^{j_i} per minimal non-face.
inline std::vector<Exponents> weighted_ideal(const SimplicialComplex& k, const WedgeVector& j) {
    check_length(k, j);
    std::vector<Exponents> gens;
    for (Face tau : minimal_nonfaces(k)) {
        Exponents e(k.vertex_count(), 0);
        for (auto v : tau.members()) e[v] = j[v];
        gens.push_back(std::move(e));
    }
    return gens;
}

/// Rows of λ as linear forms; zero rows are dropped.
inline std::vector<std::vector<Integer>> linear_ideal(const IntMatrix& lambda) {
    std::vector<std::vector<Integer>> forms;
    for (std::size_t r = 0; r < lambda.rows(); ++r) {
        auto row = lambda.row(r);
        if (std::any_of(row.begin(), row.end(), [](const Integer& x) { return x != 0; })) forms.push_back(std::move(row));
    }
    return forms;
}

inline std::vector<Variable> numbered_variables(std::size_t m) {
    std::vector<Variable> vars;
    for (std::size_t i = 1; i <= m; ++i) vars.push_back({"v" + std::to_string(i), 2});
    return vars;
}

inline void require_valid_base(const SimplicialComplex& k, const IntMatrix& lambda) {
    if (!verify_characteristic(k, lambda).passed) {
        throw Error(ErrorCode::InvalidBase, "base matrix is not characteristic for the complex");
    }
}

/// Z[v_1..v_m] / (I_K^J + L_M).
inline RingPresentation presentation_condensed(const SimplicialComplex& k, const IntMatrix& lambda, const WedgeVector& j) {
    check_length(k, j);
    require_valid_base(k, lambda);
    return RingPresentation{numbered_variables(k.vertex_count()), weighted_ideal(k, j), {}, linear_ideal(lambda)};
}

/// Z[v_11..v_mj_m] / (I_{K(J)} + L_{M(J)}), variables in canonical order.
inline RingPresentation presentation_standard(const SimplicialComplex& k, const IntMatrix& lambda, const WedgeVector& j) {
    check_length(k, j);
    require_valid_base(k, lambda);
    const DerivedCharPair derived = build_lambda_J(CharPair{k, lambda}, j);
    RingPresentation p;
    for (const auto& label : derived.KJ.complex.vertices()) p.variables.push_back({"v" + label, 2});
    p.monomial_generators = sr_ideal(derived.KJ.complex);
    p.linear_forms = linear_ideal(derived.lambda_J_canonical());
    return p;
}

namespace detail {

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

inline bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// Substitutes v_k := Σ_l sub[l] v_l (sub[k] ignored) and drops variable k.
inline Polynomial substitute(const Polynomial& p, std::size_t k, const std::vector<Integer>& sub) {
    const std::size_t n = sub.size();
    Polynomial linear;
    for (std::size_t l = 0; l < n; ++l) {
        if (l == k || sub[l] == 0) continue;
        Exponents e(n, 0);
        e[l] = 1;
        linear[e] = sub[l];
    }
    Polynomial out;
    for (const auto& [e, c] : p) {
        Exponents rest = e;
        rest[k] = 0;
        Polynomial term{{rest, c}};
        for (int power = 0; power < e[k]; ++power) term = poly_mul(term, linear);
        for (auto& [te, tc] : term) out[te] += tc;
    }
    Polynomial dropped;
    for (auto& [e, c] : out) {
        if (c == 0) continue;
        Exponents shrunk = e;
        shrunk.erase(shrunk.begin() + static_cast<std::ptrdiff_t>(k));
        dropped[shrunk] += c;
    }
    std::erase_if(dropped, [](const auto& kv) { return kv.second == 0; });
    return dropped;
}

/// Keeps minimal monomials, strips polynomial terms lying in the monomial
/// ideal, promotes ±1 single terms to monomials, sorts everything.
inline void normalize(RingPresentation& p) {
    bool changed = true;
    while (changed) {
        changed = false;
        auto& mons = p.monomial_generators;
        std::sort(mons.begin(), mons.end());
        mons.erase(std::unique(mons.begin(), mons.end()), mons.end());
        std::vector<Exponents> minimal;
        for (const auto& m : mons) {
            bool redundant = false;
            for (const auto& other : mons)
                if (&other != &m && other != m && divides(other, m)) redundant = true;
            if (!redundant) minimal.push_back(m);
        }
        mons = std::move(minimal);

        std::vector<Polynomial> polys;
        for (auto poly : p.polynomial_generators) {
            std::erase_if(poly, [&](const auto& kv) {
                return std::any_of(mons.begin(), mons.end(), [&](const Exponents& g) { return divides(g, kv.first); });
            });
            if (poly.empty()) continue;
            if (poly.size() == 1 && abs(poly.begin()->second) == 1) {
                mons.push_back(poly.begin()->first);
                changed = true;
                continue;
            }
            if (poly.begin()->second < 0)
                for (auto& kv : poly) kv.second = -kv.second;
            polys.push_back(std::move(poly));
        }
        std::sort(polys.begin(), polys.end());
        polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
        p.polynomial_generators = std::move(polys);
    }
}

} // namespace detail

/// Repeatedly solves a linear form for a variable with coefficient ±1 and
/// substitutes it everywhere. Form choice: fewest terms, then lowest index of
/// the eliminated variable.
inline RingPresentation eliminate_unit_variables(RingPresentation p) {
    detail::normalize(p);
    for (;;) {
        std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> best; // (terms, variable, form)
        for (std::size_t f = 0; f < p.linear_forms.size(); ++f) {
            const auto& form = p.linear_forms[f];
            const auto terms = static_cast<std::size_t>(
                std::count_if(form.begin(), form.end(), [](const Integer& x) { return x != 0; }));
            for (std::size_t v = 0; v < form.size(); ++v) {
                if (abs(form[v]) != 1) continue;
                std::tuple<std::size_t, std::size_t, std::size_t> key{terms, v, f};
                if (!best || key < *best) best = key;
                break;
            }
        }
        if (!best) break;
        const auto [terms, k, f] = *best;
        const std::vector<Integer> form = p.linear_forms[f];
        const Integer c = form[k];
        std::vector<Integer> sub(form.size());
        for (std::size_t l = 0; l < form.size(); ++l) sub[l] = (l == k) ? Integer(0) : Integer(-c * form[l]);

        std::vector<std::vector<Integer>> forms;
        for (std::size_t g = 0; g < p.linear_forms.size(); ++g) {
            if (g == f) continue;
            auto other = p.linear_forms[g];
            const Integer gk = other[k];
            for (std::size_t l = 0; l < other.size(); ++l)
                if (l != k) other[l] += gk * sub[l];
            other.erase(other.begin() + static_cast<std::ptrdiff_t>(k));
            if (std::any_of(other.begin(), other.end(), [](const Integer& x) { return x != 0; })) forms.push_back(std::move(other));
        }

        std::vector<Polynomial> polys;
        for (const auto& m : p.monomial_generators) polys.push_back(detail::substitute(Polynomial{{m, 1}}, k, sub));
        for (const auto& poly : p.polynomial_generators) polys.push_back(detail::substitute(poly, k, sub));

        p.variables.erase(p.variables.begin() + static_cast<std::ptrdiff_t>(k));
        p.linear_forms = std::move(forms);
        p.monomial_generators.clear();
        p.polynomial_generators.clear();
        for (auto& poly : polys) {
            if (poly.size() == 1 && abs(poly.begin()->second) == 1) p.monomial_generators.push_back(poly.begin()->first);
            else if (!poly.empty()) p.polynomial_generators.push_back(std::move(poly));
        }
        detail::normalize(p);
    }
    return p;
}

/// Hilbert series of SR^J(K) = Z[v]/I_K^J, from the decomposition of
/// monomials by their J-support {i : a_i ≥ j_i}, which must be a face.
inline HilbertSeries hilbert_weighted(const SimplicialComplex& k, const WedgeVector& j) {
    check_length(k, j);
    const std::size_t m = k.vertex_count();
    const auto max_len = static_cast<std::size_t>(j.d()) + 1;
    std::vector<Integer> numerator(max_len);
    for (Face sigma : all_faces(k)) {
        std::vector<Integer> term{1};
        for (std::size_t i = 0; i < m; ++i) {
            const auto ji = static_cast<std::size_t>(j[i]);
            std::vector<Integer> next(term.size() + ji);
            for (std::size_t a = 0; a < term.size(); ++a) {
                if (sigma.contains(i)) {
                    next[a + ji] += term[a];
                } else {
                    next[a] += term[a];
                    next[a + ji] -= term[a];
                }
            }
            term = std::move(next);
        }
        for (std::size_t a = 0; a < term.size() && a < max_len; ++a) numerator[a] += term[a];
    }
    while (!numerator.empty() && numerator.back() == 0) numerator.pop_back();
    return HilbertSeries{numerator, static_cast<int>(m)};
}

inline HilbertSeries hilbert_stanley_reisner(const SimplicialComplex& k) {
    return hilbert_weighted(k, WedgeVector::ones(k.vertex_count()));
}

namespace detail {

using RationalPoly = std::map<Exponents, Rational>;
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

inline void monomials_of_degree(std::size_t vars, int degree, std::vector<Exponents>& out) {
    Exponents cur(vars, 0);
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (vars == 0) {
            if (left == 0) out.push_back(cur);
            return;
        }
        if (pos + 1 == vars) {
            cur[pos] = left;
            out.push_back(cur);
            cur[pos] = 0;
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, left - e);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, degree);
}

/// Incremental row echelon over Q; returns whether the row was independent.
class RationalEchelon {
public:
    bool insert(SparseRow row) {
        for (;;) {
            if (row.empty()) return false;
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) break;
            const Rational factor = row.front().second;
            row = axpy(row, it->second, -factor);
        }
        const Rational lead = row.front().second;
        for (auto& [c, v] : row) v /= lead;
        const std::size_t col = row.front().first;
        pivots_.emplace(col, std::move(row));
        return true;
    }
    std::size_t rank() const { return pivots_.size(); }

private:
    static SparseRow axpy(const SparseRow& a, const SparseRow& b, const Rational& f) {
        SparseRow out;
        std::size_t i = 0, k = 0;
        while (i < a.size() || k < b.size()) {
            if (k == b.size() || (i < a.size() && a[i].first < b[k].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[k].first < a[i].first) {
                out.emplace_back(b[k].first, f * b[k].second);
                ++k;
            } else {
                Rational v = a[i].second + f * b[k].second;
                if (v != 0) out.emplace_back(a[i].first, v);
                ++i;
                ++k;
            }
        }
        return out;
    }

    std::map<std::size_t, SparseRow> pivots_;
};

} // namespace detail

inline constexpr int kDefaultDegreeGuard = 12;

/// Ranks over Q of the graded pieces of the presented ring, t-degrees 0..max_degree.
///
/// The linear forms are brought to reduced echelon form over Q and used to
/// eliminate their pivot variables; each degree-d piece is then the quotient
/// of the monomials in the free variables by the span of all monomial
/// multiples of the rewritten generators, found by rational row reduction.
inline std::vector<std::int64_t> graded_dims(const RingPresentation& p, int max_degree, int degree_guard = kDefaultDegreeGuard) {
    if (max_degree < 0) throw Error(ErrorCode::DegreeTooLarge, "negative degree bound");
    if (max_degree > degree_guard) {
        throw Error(ErrorCode::DegreeTooLarge, "degree " + std::to_string(max_degree) + " exceeds guard " + std::to_string(degree_guard));
    }
    const std::size_t n = p.variables.size();
    for (const auto& v : p.variables)
        if (v.degree != 2) throw Error(ErrorCode::InvalidPresentation, "graded_dims expects degree-2 generators");
    for (const auto& f : p.linear_forms)
        if (f.size() != n) throw Error(ErrorCode::InvalidPresentation, "linear form length differs from variable count");

    // Reduced row echelon form of the linear forms.
    std::vector<std::vector<Rational>> rref;
    for (const auto& f : p.linear_forms) rref.emplace_back(f.begin(), f.end());
    std::vector<std::size_t> pivot_cols;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < n && prow < rref.size(); ++c) {
        std::size_t r = prow;
        while (r < rref.size() && rref[r][c] == 0) ++r;
        if (r == rref.size()) continue;
        std::swap(rref[prow], rref[r]);
        const Rational lead = rref[prow][c];
        for (auto& x : rref[prow]) x /= lead;
        for (std::size_t o = 0; o < rref.size(); ++o) {
            if (o == prow || rref[o][c] == 0) continue;
            const Rational f = rref[o][c];
            for (std::size_t cc = 0; cc < n; ++cc) rref[o][cc] -= f * rref[prow][cc];
        }
        pivot_cols.push_back(c);
        ++prow;
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (std::find(pivot_cols.begin(), pivot_cols.end(), c) == pivot_cols.end()) free_cols.push_back(c);
    const std::size_t nf = free_cols.size();

    // Each original variable as a rational linear form in the free variables.
    std::vector<std::vector<Rational>> image(n, std::vector<Rational>(nf));
    for (std::size_t f = 0; f < nf; ++f) image[free_cols[f]][f] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r)
        for (std::size_t f = 0; f < nf; ++f) image[pivot_cols[r]][f] = -rref[r][free_cols[f]];

    auto rewrite = [&](const Exponents& e, const Rational& coeff) {
        detail::RationalPoly acc{{Exponents(nf, 0), coeff}};
        for (std::size_t v = 0; v < n; ++v) {
            for (int power = 0; power < e[v]; ++power) {
                detail::RationalPoly next;
                for (const auto& [ae, ac] : acc)
                    for (std::size_t f = 0; f < nf; ++f) {
                        if (image[v][f] == 0) continue;
                        Exponents ne = ae;
                        ne[f] += 1;
                        next[ne] += ac * image[v][f];
                    }
                std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
                acc = std::move(next);
            }
        }
        return acc;
    };

    struct Relation {
        detail::RationalPoly poly;
        int degree;
    };
    std::vector<Relation> relations;
    auto add_relation = [&](detail::RationalPoly poly) {
        std::erase_if(poly, [](const auto& kv) { return kv.second == 0; });
        if (poly.empty()) return;
        const int deg = std::accumulate(poly.begin()->first.begin(), poly.begin()->first.end(), 0);
        for (const auto& [e, c] : poly)
            if (std::accumulate(e.begin(), e.end(), 0) != deg) throw Error(ErrorCode::InvalidPresentation, "inhomogeneous relation");
        relations.push_back({std::move(poly), deg});
    };
    for (const auto& m : p.monomial_generators) {
        if (m.size() != n) throw Error(ErrorCode::InvalidPresentation, "exponent vector length differs from variable count");
        add_relation(rewrite(m, 1));
    }
    for (const auto& poly : p.polynomial_generators) {
        detail::RationalPoly acc;
        for (const auto& [e, c] : poly) {
            if (e.size() != n) throw Error(ErrorCode::InvalidPresentation, "exponent vector length differs from variable count");
            for (auto& [re, rc] : rewrite(e, Rational(c))) acc[re] += rc;
        }
        add_relation(std::move(acc));
    }

    std::vector<std::int64_t> dims;
    for (int d = 0; d <= max_degree; ++d) {
        std::vector<Exponents> basis;
        detail::monomials_of_degree(nf, d, basis);
        std::map<Exponents, std::size_t> index;
        for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
        detail::RationalEchelon echelon;
        for (const auto& rel : relations) {
            if (rel.degree > d) continue;
            std::vector<Exponents> multipliers;
            detail::monomials_of_degree(nf, d - rel.degree, multipliers);
            for (const auto& mu : multipliers) {
                detail::SparseRow row;
                for (const auto& [e, c] : rel.poly) {
                    Exponents prod = e;
                    for (std::size_t f = 0; f < nf; ++f) prod[f] += mu[f];
                    row.emplace_back(index.at(prod), c);
                }
                std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                echelon.insert(std::move(row));
                if (echelon.rank() == basis.size()) break;
            }
            if (echelon.rank() == basis.size()) break;
        }
        dims.push_back(static_cast<std::int64_t>(basis.size() - echelon.rank()));
    }
    return dims;
}

struct BettiNumbers {
    std::vector<std::int64_t> values; // rank H^0, H^2, H^4, ...
    bool manifold_certified = false;  // false: h-vector only ("combinatorial only")
};

/// Even Betti numbers of M(J) as the h-vector of K(J).
inline BettiNumbers betti_MJ(const SimplicialComplex& k, const IntMatrix& lambda, const WedgeVector& j) {
    check_length(k, j);
    require_valid_base(k, lambda);
    const WedgedComplex kj = wedge_J(k, j);
    BettiNumbers out;
    out.values = f_h_vectors(kj.complex).h;
    out.manifold_certified = pseudomanifold_check(kj.complex).passed;
    return out;
}

} // namespace wedgeforge
