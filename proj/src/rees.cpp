#include "ca/rees.hpp"

#include <algorithm>

namespace ca {

Polynomial sharp(const Polynomial& f, int k) {
    if (f.is_zero() || !f.is_homogeneous()) throw Error("sharp: nonzero homogeneous input required");
    int n = f.nvars();
    int d = f.degree();
    if (k < 0 || k > d) throw Error("sharp: slot count out of range");
    std::vector<PolyTerm> terms;
    for (auto& t : f.terms()) {
        std::vector<std::int32_t> e(2 * n, 0);
        int rem = k;
        for (int i = n - 1; i >= 0; --i) {
            int take = std::min<int>(rem, t.mono.exponent(i));
            e[n + i] = take;
            e[i] = t.mono.exponent(i) - take;
            rem -= take;
        }
        terms.push_back(PolyTerm{t.coeff, Monomial(std::move(e))});
    }
    return Polynomial::from_terms(2 * n, f.field(), TermOrder::grevlex(), std::move(terms));
}

Polynomial lift_to_rees_ring(const Polynomial& f, int n, int s, const TermOrder& order) {
    std::vector<PolyTerm> terms;
    for (auto& t : f.terms()) {
        std::vector<std::int32_t> e(n + s, 0);
        for (int i = 0; i < n; ++i) e[i] = t.mono.exponent(i);
        terms.push_back(PolyTerm{t.coeff, Monomial(std::move(e))});
    }
    return Polynomial::from_terms(n + s, f.field(), order, std::move(terms));
}

ReesPresentation rees_generators(const std::vector<Polynomial>& L, int n) {
    Field field = L.empty() ? Field::rationals() : L[0].field();
    ReesPresentation P;
    P.origin = ReesPresentation::Origin::MaximalIdeal;
    P.n = n;
    P.s = n;
    P.common_degree = 1;

    P.base_ideal.nvars = n;
    P.base_ideal.field = field;
    P.base_ideal.names = default_names(n);
    P.base_ideal.order = TermOrder::grevlex();
    for (auto& f : L) {
        if (f.is_zero() || !f.is_homogeneous())
            throw Error("rees_generators: members of L must be nonzero homogeneous");
        P.base_ideal.gens.push_back(f.reorder(P.base_ideal.order));
    }
    for (int i = 0; i < n; ++i)
        P.base_forms.push_back(Polynomial::from_terms(
            n, field, P.base_ideal.order,
            {PolyTerm{Scalar::one(field), Monomial::variable(n, i)}}));

    IdealPresentation& I = P.generators;
    I.nvars = 2 * n;
    I.field = field;
    I.names = default_names(2 * n, true);
    I.order = TermOrder::grevlex();
    for (auto& f : L)
        for (int k = 0; k <= f.degree(); ++k) I.gens.push_back(sharp(f, k));
    Scalar one = Scalar::one(field);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<std::int32_t> a(2 * n, 0), b(2 * n, 0);
            a[i] = 1;
            a[n + j] = 1;  // x_i y_j
            b[j] = 1;
            b[n + i] = 1;  // x_j y_i
            I.gens.push_back(Polynomial::from_terms(
                2 * n, field, I.order,
                {PolyTerm{one, Monomial(std::move(a))}, PolyTerm{-one, Monomial(std::move(b))}}));
        }
    return P;
}

MinimalityReport minimality_check(const ReesPresentation& P) {
    auto cols = as_columns(P.generators);
    GradedFreeModule F{{0}};
    MinimalityReport rep;
    for (size_t i = 0; i < cols.size(); ++i) {
        std::vector<VecPoly> others;
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != i) others.push_back(cols[j]);
        if (in_span_degreewise(cols[i], others, F)) {
            rep.minimal = false;
            rep.redundant_index = static_cast<int>(i);
            return rep;
        }
    }
    rep.minimal = true;
    return rep;
}

ReesTheoremReport verify_groebner_theorem(const std::vector<Polynomial>& L, int n,
                                          int hilbert_bound) {
    ReesTheoremReport rep;
    rep.hilbert_bound = hilbert_bound;
    TermOrder base_order = TermOrder::grevlex();
    std::vector<Polynomial> base;
    for (auto& f : L) base.push_back(f.reorder(base_order));
    rep.base_is_groebner = is_groebner(base, base_order);

    ReesPresentation P = rees_generators(L, n);
    rep.lifted_is_groebner = is_groebner(P.generators.gens, P.generators.order);

    auto gb_base = buchberger(P.base_ideal, base_order);
    auto gb_rees = buchberger(P.generators, P.generators.order);
    rep.hilbert_identity = true;
    for (int i = 0; i <= hilbert_bound; ++i) {
        long a = hilbert_function(gb_base, i, n);
        long r = hilbert_function(gb_rees, i, 2 * n);
        if (r != (i + 1) * a) {
            rep.hilbert_identity = false;
            break;
        }
    }
    return rep;
}

ReducednessReport reducedness_check(const GroebnerBasis& gb) {
    ReducednessReport rep;
    const auto& els = gb.elements;
    for (size_t b = 0; b < els.size(); ++b) {
        if (els[b].is_zero()) continue;
        for (auto& t : els[b].terms()) {
            for (size_t a = 0; a < els.size(); ++a) {
                if (a == b || els[a].is_zero()) continue;
                if (els[a].lead_mono().divides(t.mono)) {
                    rep.reduced = false;
                    rep.witness = std::make_pair(els[a], els[b]);
                    return rep;
                }
            }
        }
    }
    for (auto& g : els)
        if (!g.is_zero() && !g.lead_coeff().is_one()) {
            rep.reduced = false;
            return rep;
        }
    rep.reduced = true;
    return rep;
}

Polynomial rees_involution(const ReesPresentation& P, const Polynomial& f) {
    if (P.s != P.n) throw Error("involution needs matching variable blocks");
    if (f.nvars() != 2 * P.n) throw Error("involution: wrong ambient");
    if (!f.is_zero() && !f.bidegree().has_value())
        throw Error("involution: bihomogeneous input required");
    std::vector<int> perm(2 * P.n);
    for (int i = 0; i < P.n; ++i) {
        perm[i] = P.n + i;
        perm[P.n + i] = i;
    }
    return f.permute_vars(perm);
}

ReesPresentation rees_ideal_elimination(const IdealPresentation& J,
                                        const std::vector<Polynomial>& fs) {
    if (fs.empty()) throw Error("rees_ideal_elimination: no forms given");
    int n = J.nvars;
    int s = static_cast<int>(fs.size());
    int c = fs[0].degree();
    for (auto& f : fs)
        if (f.is_zero() || !f.is_homogeneous() || f.degree() != c)
            throw Error("rees_ideal_elimination: forms must share one degree");

    // Work ring: x_1..x_n, y_1..y_s, t.
    int m = n + s + 1;
    IdealPresentation W;
    W.nvars = m;
    W.field = J.field;
    W.names = default_names(n);
    for (int j = 0; j < s; ++j) W.names.push_back("y" + std::to_string(j + 1));
    W.names.push_back("t");
    W.order = TermOrder::grevlex();
    auto lift = [&](const Polynomial& f) {
        std::vector<PolyTerm> terms;
        for (auto& t : f.terms()) {
            std::vector<std::int32_t> e(m, 0);
            for (int i = 0; i < n; ++i) e[i] = t.mono.exponent(i);
            terms.push_back(PolyTerm{t.coeff, Monomial(std::move(e))});
        }
        return Polynomial::from_terms(m, W.field, W.order, std::move(terms));
    };
    for (auto& g : J.gens) W.gens.push_back(lift(g));
    for (int j = 0; j < s; ++j) {
        Polynomial yj = Polynomial::from_terms(
            m, W.field, W.order, {PolyTerm{Scalar::one(W.field), Monomial::variable(m, n + j)}});
        Polynomial ft = lift(fs[j]).mul_term(Scalar::one(W.field), Monomial::variable(m, m - 1));
        W.gens.push_back(yj - ft);
    }
    std::vector<int> keep(n + s);
    for (int i = 0; i < n + s; ++i) keep[i] = i;

    ReesPresentation P;
    P.origin = ReesPresentation::Origin::Elimination;
    P.n = n;
    P.s = s;
    P.common_degree = c;
    P.base_ideal = J;
    P.base_forms = fs;
    P.generators = eliminate(W, keep);
    return P;
}

IdealPresentation assoc_graded(const ReesPresentation& P) {
    IdealPresentation out = P.generators;
    for (auto& f : P.base_forms)
        out.gens.push_back(lift_to_rees_ring(f, P.n, P.s, out.order));
    return out;
}

}  // namespace ca
