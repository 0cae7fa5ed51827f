#include "ca/cohomology.hpp"

#include <algorithm>
#include <sstream>

#include "ca/linalg.hpp"

namespace ca {

namespace {

ModulePresentation zero_presentation(int nvars, const Field& field) {
    return ModulePresentation{nvars, field, GradedFreeModule{{}}, {}};
}

// Dualization engine: resolve E once, then read off every Ext^i(E, B(-n))
// from the dual complex. Twists dualize to n - t, map k picks up columns
// dual_col[b][a] = maps[k][a][b].
struct ExtEngine {
    int n = 0;
    Field field;
    TermOrder base = TermOrder::grevlex();
    Resolution res;

    explicit ExtEngine(const ModulePresentation& e)
        : n(e.nvars), field(e.field), res(minimal_free_resolution(e)) {}

    GradedFreeModule dual_module(int k) const {
        GradedFreeModule g{{}};
        for (int t : res.modules[k].twists) g.twists.push_back(n - t);
        return g;
    }

    // Columns of the dual map G_k -> G_{k+1}; one column per generator of G_k.
    std::vector<VecPoly> dual_map(int k) const {
        int src_rank = res.modules[k].rank();
        int dst_rank = res.modules[k + 1].rank();
        std::vector<VecPoly> cols;
        cols.reserve(src_rank);
        for (int b = 0; b < src_rank; ++b) {
            std::vector<Polynomial> coords;
            coords.reserve(dst_rank);
            for (int a = 0; a < dst_rank; ++a) coords.push_back(res.maps[k][a][b]);
            cols.emplace_back(std::move(coords));
        }
        return cols;
    }

    ModulePresentation ext(int i) const {
        if (i < 0 || i > n || i > res.length()) return zero_presentation(n, field);
        GradedFreeModule g = dual_module(i);
        if (g.rank() == 0) return zero_presentation(n, field);

        std::vector<VecPoly> kernel;
        if (i == res.length()) {
            for (int j = 0; j < g.rank(); ++j) {
                std::vector<Polynomial> coords(
                    static_cast<size_t>(g.rank()), Polynomial(n, field, base));
                coords[j] = Polynomial::from_terms(
                    n, field, base, {PolyTerm{Scalar::one(field), Monomial(n)}});
                kernel.emplace_back(std::move(coords));
            }
        } else {
            kernel = kernel_of_map(dual_map(i), dual_module(i + 1), base);
        }
        if (kernel.empty()) return zero_presentation(n, field);

        GradedFreeModule f0{{}};
        for (const auto& v : kernel) {
            auto d = v.degree_in(g);
            if (!d) throw Error("ext: inhomogeneous kernel generator");
            f0.twists.push_back(*d);
        }

        ModuleOrder pot = ModuleOrder::pot(base);
        auto pot_ptr = std::make_shared<const ModuleOrder>(pot);
        std::vector<VecPoly> relations = schreyer_syzygies(kernel, g, pot_ptr).syzygies;
        if (i > 0) {
            for (const auto& col : dual_map(i - 1)) {
                if (col.is_zero()) continue;
                auto div = divide_module(col, kernel, pot);
                if (!div.remainder.is_zero()) throw Error("ext: image escapes kernel");
                VecPoly rel{std::move(div.quotients)};
                if (!rel.is_zero()) relations.push_back(std::move(rel));
            }
        }
        return ModulePresentation{n, field, std::move(f0), std::move(relations)};
    }
};

long row_dim_or_zero(const std::map<int, long>& support, int a) {
    auto it = support.find(a);
    return it == support.end() ? 0 : it->second;
}

void require_window(int top, int hi, int row) {
    if (top > hi)
        throw Error("cohomology window ends at " + std::to_string(hi) +
                    " but row " + std::to_string(row) + " reaches degree " +
                    std::to_string(top) + "; widen the window");
}

// Sum of two rows of profiles sharing the window [lo, hi].
ProfileRow merge_rows(const ProfileRow* x, const ProfileRow* y, int lo) {
    if (!x && !y) return {};
    if (!x) return *y;
    if (!y) return *x;
    ProfileRow out;
    bool both_complete = x->tail == TailState::None && y->tail == TailState::None;
    auto add_from = [&](const ProfileRow& r) {
        for (auto& [a, d] : r.support)
            if (both_complete || a >= lo) out.support[a] += d;
    };
    add_from(*x);
    add_from(*y);
    if (x->tail == TailState::AllBelowNonzero || y->tail == TailState::AllBelowNonzero)
        out.tail = TailState::AllBelowNonzero;
    else if (!both_complete)
        out.tail = TailState::UnknownBelow;
    if (x->top && y->top) out.top = std::max(*x->top, *y->top);
    return out;
}

bool row_is_empty(const ProfileRow& r) {
    return !r.top && r.support.empty() && r.tail == TailState::None;
}

}  // namespace

std::optional<long> CohomologyProfile::dim_at(int i, int a) const {
    auto it = rows.find(i);
    if (it == rows.end()) return 0L;
    const ProfileRow& r = it->second;
    if (r.top && a > *r.top) return 0L;
    if (a >= lo || r.tail == TailState::None) return row_dim_or_zero(r.support, a);
    return std::nullopt;
}

bool CohomologyProfile::row_nonzero(int i) const { return rows.count(i) > 0; }

int CohomologyProfile::top_index() const {
    int m = -1;
    for (auto& [i, r] : rows) m = std::max(m, i);
    return m;
}

std::optional<int> CohomologyProfile::a(int i) const {
    auto it = rows.find(i);
    if (it == rows.end()) return std::nullopt;
    return it->second.top;
}

std::string CohomologyProfile::str() const {
    std::ostringstream os;
    os << "window [" << lo << ", " << hi << "], n = " << n;
    if (asserted) os << ", asserted";
    os << "\n";
    for (auto& [i, r] : rows) {
        os << "H^" << i << ": top ";
        if (r.top)
            os << *r.top;
        else
            os << "?";
        os << ", dims {";
        bool first = true;
        for (auto& [a, d] : r.support) {
            if (!first) os << ", ";
            first = false;
            os << a << ": " << d;
        }
        os << "}";
        if (r.tail == TailState::AllBelowNonzero) os << ", nonzero below window";
        if (r.tail == TailState::UnknownBelow) os << ", unknown below window";
        os << "\n";
    }
    return os.str();
}

ProfileInvariants profile_invariants(const CohomologyProfile& P) {
    int top = std::max(P.n, P.top_index());
    ProfileInvariants inv;
    inv.a_star.assign(static_cast<size_t>(top) + 1, std::nullopt);
    inv.reg_j.assign(static_cast<size_t>(top) + 1, std::nullopt);
    for (int j = 0; j <= top; ++j) {
        for (int i = 0; i <= j; ++i) {
            auto it = P.rows.find(i);
            if (it == P.rows.end() || !it->second.top) continue;
            int a = *it->second.top;
            if (!inv.a_star[j] || a > *inv.a_star[j]) inv.a_star[j] = a;
            if (!inv.reg_j[j] || a + i > *inv.reg_j[j]) inv.reg_j[j] = a + i;
        }
    }
    inv.a_star_total = inv.a_star[top];
    inv.reg = inv.reg_j[top];
    return inv;
}

ModulePresentation graded_ext(const ModulePresentation& E, int i) {
    return ExtEngine(E).ext(i);
}

ModulePresentation graded_ext(const IdealPresentation& I, int i) {
    return graded_ext(I.quotient_presentation(), i);
}

CohomologyProfile cohomology_profile(const ModulePresentation& E, int lo, int hi) {
    if (lo > hi) throw Error("cohomology window is empty");
    ExtEngine eng(E);
    CohomologyProfile P;
    P.n = eng.n;
    P.lo = lo;
    P.hi = hi;
    for (int i = 0; i <= eng.n; ++i) {
        ModulePresentation ext = eng.ext(eng.n - i);
        QuotientModule q = QuotientModule::from_presentation(ext, eng.base);
        if (q.is_zero_module()) continue;
        ProfileRow row;
        int d0 = *q.indeg();
        row.top = -d0;
        require_window(-d0, hi, i);
        if (q.krull_dim() == 0) {
            int bound = q.finite_support_bound();
            for (int d = d0; d <= bound; ++d) {
                long h = q.hilbert(d);
                if (h > 0) row.support[-d] = h;
            }
            row.tail = TailState::None;
        } else {
            for (int a = lo; a <= std::min(hi, -d0); ++a) {
                long h = q.hilbert(-a);
                if (h > 0) row.support[a] = h;
            }
            int pf = *q.positive_from();
            row.tail = pf <= 1 - lo ? TailState::AllBelowNonzero : TailState::UnknownBelow;
        }
        P.rows[i] = std::move(row);
    }
    return P;
}

CohomologyProfile cohomology_profile(const IdealPresentation& I, int lo, int hi) {
    return cohomology_profile(I.quotient_presentation(), lo, hi);
}

SimplicialComplex SimplicialComplex::from_facets(int vertices,
                                                 std::vector<std::vector<int>> facets) {
    SimplicialComplex K;
    K.vertices = vertices;
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw Error("facet repeats a vertex");
        for (int v : f)
            if (v < 1 || v > vertices) throw Error("facet vertex out of range");
    }
    for (size_t i = 0; i < facets.size(); ++i)
        for (size_t j = 0; j < facets.size(); ++j) {
            if (i == j) continue;
            if (std::includes(facets[i].begin(), facets[i].end(), facets[j].begin(),
                              facets[j].end()))
                throw Error("facet list is not an antichain");
        }
    K.facets = std::move(facets);
    return K;
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (auto& f : facets) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

std::set<std::vector<int>> all_faces(const SimplicialComplex& K) {
    std::set<std::vector<int>> faces;
    for (const auto& f : K.facets) {
        int m = static_cast<int>(f.size());
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<int> g;
            for (int j = 0; j < m; ++j)
                if (mask & (1 << j)) g.push_back(f[j]);
            faces.insert(std::move(g));
        }
    }
    return faces;
}

std::vector<long> reduced_cohomology(const std::set<std::vector<int>>& faces,
                                     const Field& k) {
    if (faces.empty()) return {};
    int top_dim = -1;
    for (auto& f : faces) top_dim = std::max(top_dim, static_cast<int>(f.size()) - 1);
    // idx[d + 1] indexes the faces of dimension d.
    std::vector<std::map<std::vector<int>, int>> idx(static_cast<size_t>(top_dim) + 2);
    for (auto& f : faces) {
        auto& m = idx[f.size()];
        int pos = static_cast<int>(m.size());
        m.emplace(f, pos);
    }
    // rank_delta[d + 1] = rank of C^d -> C^{d+1}.
    std::vector<int> rank_delta(static_cast<size_t>(top_dim) + 3, 0);
    for (int d = -1; d < top_dim; ++d) {
        const auto& cols = idx[d + 1];
        const auto& rows = idx[d + 2];
        if (cols.empty() || rows.empty()) continue;
        ScalarMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()), k);
        for (auto& [face, r] : rows) {
            for (size_t p = 0; p < face.size(); ++p) {
                std::vector<int> sub;
                sub.reserve(face.size() - 1);
                for (size_t q = 0; q < face.size(); ++q)
                    if (q != p) sub.push_back(face[q]);
                auto it = cols.find(sub);
                if (it == cols.end()) throw Error("face set is not downward closed");
                Scalar s = Scalar::from_int(k, p % 2 == 0 ? 1 : -1);
                m.at(r, it->second) = s;
            }
        }
        rank_delta[d + 2] = m.rank();
    }
    std::vector<long> h(static_cast<size_t>(top_dim) + 2, 0);
    for (int d = -1; d <= top_dim; ++d)
        h[d + 1] = static_cast<long>(idx[d + 1].size()) - rank_delta[d + 2] - rank_delta[d + 1];
    return h;
}

IdealPresentation stanley_reisner_ideal(const SimplicialComplex& K, const Field& k) {
    if (K.vertices > 20) throw Error("too many vertices");
    auto faces = all_faces(K);
    TermOrder order = TermOrder::grevlex();
    IdealPresentation I;
    I.nvars = K.vertices;
    I.field = k;
    I.names = default_names(K.vertices);
    I.order = order;
    auto is_face = [&](const std::vector<int>& s) { return faces.count(s) > 0; };
    std::vector<std::vector<int>> masks_by_size(static_cast<size_t>(K.vertices) + 1);
    for (int mask = 1; mask < (1 << K.vertices); ++mask)
        masks_by_size[__builtin_popcount(static_cast<unsigned>(mask))].push_back(mask);
    for (int size = 1; size <= K.vertices; ++size) {
        for (int mask : masks_by_size[size]) {
            std::vector<int> s;
            for (int v = 0; v < K.vertices; ++v)
                if (mask & (1 << v)) s.push_back(v + 1);
            if (is_face(s)) continue;
            bool minimal = true;
            for (size_t p = 0; p < s.size() && minimal; ++p) {
                std::vector<int> sub;
                for (size_t q = 0; q < s.size(); ++q)
                    if (q != p) sub.push_back(s[q]);
                if (!is_face(sub)) minimal = false;
            }
            if (!minimal) continue;
            std::vector<std::int32_t> e(static_cast<size_t>(K.vertices), 0);
            for (int v : s) e[v - 1] = 1;
            I.gens.push_back(Polynomial::from_terms(
                K.vertices, k, order,
                {PolyTerm{Scalar::one(k), Monomial(std::move(e))}}));
        }
    }
    std::sort(I.gens.begin(), I.gens.end(), [&](const Polynomial& a, const Polynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return order.compare(a.lead_mono(), b.lead_mono()) == Ordering::LT;
    });
    return I;
}

CohomologyProfile hochster_profile(const SimplicialComplex& K, const Field& k, int lo,
                                   int hi) {
    if (lo > hi) throw Error("cohomology window is empty");
    CohomologyProfile P;
    P.n = K.vertices;
    P.lo = lo;
    P.hi = hi;
    auto faces = all_faces(K);
    if (faces.empty()) return P;

    // Reduced cohomology of every vertex link, indexed by face.
    std::map<std::vector<int>, std::vector<long>> link_h;
    for (const auto& f : faces) {
        std::set<std::vector<int>> link;
        for (const auto& g : faces) {
            std::vector<int> both;
            std::set_union(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(both));
            if (both.size() != f.size() + g.size()) continue;
            if (faces.count(both)) link.insert(g);
        }
        link_h.emplace(f, reduced_cohomology(link, k));
    }
    auto link_dim = [&](const std::vector<int>& f, int j) -> long {
        // dim of reduced H^j of the link, entry j + 1.
        const auto& h = link_h.at(f);
        if (j + 1 < 0 || j + 1 >= static_cast<int>(h.size())) return 0;
        return h[j + 1];
    };

    for (int i = 0; i <= K.dim() + 1; ++i) {
        long at_zero = link_dim({}, i - 1);
        int minsize = K.vertices + 1;
        for (const auto& f : faces) {
            if (f.empty()) continue;
            if (link_dim(f, i - static_cast<int>(f.size()) - 1) > 0)
                minsize = std::min(minsize, static_cast<int>(f.size()));
        }
        bool has_tail = minsize <= K.vertices;
        if (at_zero == 0 && !has_tail) continue;

        ProfileRow row;
        row.top = at_zero > 0 ? 0 : -minsize;
        require_window(*row.top, hi, i);
        if (at_zero > 0 && (!has_tail || 0 >= lo)) row.support[0] = at_zero;
        if (has_tail) {
            for (int a = lo; a <= std::min(hi, -1); ++a) {
                long dim = 0;
                for (const auto& f : faces) {
                    if (f.empty()) continue;
                    long c = binomial(-a - 1, static_cast<long>(f.size()) - 1);
                    if (c > 0) dim += c * link_dim(f, i - static_cast<int>(f.size()) - 1);
                }
                if (dim > 0) row.support[a] = dim;
            }
            row.tail =
                lo <= 1 - minsize ? TailState::AllBelowNonzero : TailState::UnknownBelow;
        } else {
            row.tail = TailState::None;
        }
        P.rows[i] = std::move(row);
    }
    return P;
}

CohomologyProfile ideal_profile_via_ses(const SimplicialComplex& K, const Field& k, int lo,
                                        int hi) {
    int v = K.vertices;
    CohomologyProfile P;
    P.n = v;
    P.lo = lo;
    P.hi = hi;
    IdealPresentation I = stanley_reisner_ideal(K, k);
    if (I.gens.empty()) return P;  // full simplex, zero ideal
    CohomologyProfile H = hochster_profile(K, k, lo, hi);

    for (int i = 1; i < v; ++i) {
        auto it = H.rows.find(i - 1);
        if (it != H.rows.end()) P.rows[i] = it->second;
    }

    // Top row: the ambient polynomial ring contributes binomial dimensions in
    // degrees <= -v, glued with the shifted row below it.
    ProfileRow amb;
    amb.top = -v;
    for (int a = lo; a <= std::min(hi, -v); ++a) {
        long c = binomial(-a - 1, v - 1);
        if (c > 0) amb.support[a] = c;
    }
    amb.tail = lo <= 1 - v ? TailState::AllBelowNonzero : TailState::UnknownBelow;
    const ProfileRow* below = nullptr;
    auto it = H.rows.find(v - 1);
    if (it != H.rows.end()) below = &it->second;
    ProfileRow top_row = merge_rows(below, &amb, lo);
    require_window(*top_row.top, hi, v);
    P.rows[v] = std::move(top_row);
    return P;
}

CohomologyProfile profile_shift(const CohomologyProfile& P, int t) {
    CohomologyProfile Q;
    Q.n = P.n;
    Q.lo = P.lo - t;
    Q.hi = P.hi - t;
    Q.asserted = P.asserted;
    for (auto& [i, r] : P.rows) {
        ProfileRow s;
        if (r.top) s.top = *r.top - t;
        s.tail = r.tail;
        for (auto& [a, d] : r.support) s.support[a - t] = d;
        Q.rows[i] = std::move(s);
    }
    return Q;
}

CohomologyProfile profile_direct_sum(const CohomologyProfile& P, const CohomologyProfile& Q) {
    if (P.n != Q.n) throw Error("direct sum needs matching ambients");
    CohomologyProfile R;
    R.n = P.n;
    R.lo = std::max(P.lo, Q.lo);
    R.hi = std::min(P.hi, Q.hi);
    if (R.lo > R.hi) throw Error("direct sum windows do not overlap");
    R.asserted = P.asserted || Q.asserted;
    std::set<int> indices;
    for (auto& [i, r] : P.rows) indices.insert(i);
    for (auto& [i, r] : Q.rows) indices.insert(i);
    for (int i : indices) {
        const ProfileRow* x = nullptr;
        const ProfileRow* y = nullptr;
        auto ip = P.rows.find(i);
        auto iq = Q.rows.find(i);
        if (ip != P.rows.end()) x = &ip->second;
        if (iq != Q.rows.end()) y = &iq->second;
        ProfileRow m = merge_rows(x, y, R.lo);
        if (m.top) require_window(*m.top, R.hi, i);
        if (!row_is_empty(m)) R.rows[i] = std::move(m);
    }
    return R;
}

CohomologyProfile extension_shift(const CohomologyProfile& P, int s) {
    if (s < 0) throw Error("extension count must be nonnegative");
    CohomologyProfile cur = P;
    for (int step = 0; step < s; ++step) {
        CohomologyProfile next;
        next.n = cur.n + 1;
        next.lo = cur.lo;
        next.hi = cur.hi;
        next.asserted = cur.asserted;
        for (auto& [i, r] : cur.rows) {
            if (!r.top) throw Error("extension needs certified row tops");
            ProfileRow out;
            out.top = *r.top - 1;
            // Degree m of the extension collects every degree above m.
            long running = 0;
            std::map<int, long> suffix;  // at m: sum of dims in degrees >= m + 1
            for (int a = *r.top; a >= cur.lo; --a) {
                auto d = cur.dim_at(i, a);
                running += *d;
                suffix[a - 1] = running;
            }
            for (int m = cur.lo; m <= std::min(cur.hi, *out.top); ++m) {
                auto itm = suffix.find(m);
                long val = itm == suffix.end() ? 0 : itm->second;
                if (val > 0) out.support[m] = val;
            }
            if (running > 0 || r.tail == TailState::AllBelowNonzero)
                out.tail = TailState::AllBelowNonzero;
            else
                out.tail = TailState::UnknownBelow;
            next.rows[i + 1] = std::move(out);
        }
        cur = std::move(next);
    }
    return cur;
}

std::pair<int, int> quotient_regular_invariants(int a_star, int reg, int c) {
    if (c < 1) throw Error("regular sequence must be nonempty");
    return {a_star + c, reg + c - 1};
}

long predict_rees_bigraded(const CohomologyProfile& P, int i, int a, int b) {
    auto need = [&](int row) -> long {
        auto d = P.dim_at(row, a);
        if (!d) throw Error("prediction needs degree " + std::to_string(a) +
                            " of row " + std::to_string(row) + "; widen the window");
        return *d;
    };
    if (b >= std::max(0, a + 1)) return 0;
    if (b >= 0) return need(i);
    if (b >= std::min(0, a + 1)) return need(i - 1);
    return 0;
}

ReesProfilePrediction predict_rees_profile(const CohomologyProfile& P) {
    int dim_a = P.top_index();
    if (dim_a < 0) throw Error("profile has no nonzero rows");
    ReesProfilePrediction out;
    out.dim_a = dim_a;
    out.dim_r = dim_a + (dim_a >= 1 ? 1 : 0);

    CohomologyProfile& Q = out.profile;
    Q.n = 2 * P.n;
    Q.lo = P.lo;
    Q.hi = P.hi;
    Q.asserted = P.asserted;

    for (int i = 0; i <= dim_a + 1; ++i) {
        const ProfileRow* cell = nullptr;
        const ProfileRow* prev = nullptr;
        auto ic = P.rows.find(i);
        auto ip = P.rows.find(i - 1);
        if (ic != P.rows.end()) cell = &ic->second;
        if (ip != P.rows.end()) prev = &ip->second;
        if (!cell && !prev) continue;

        ProfileRow row;
        // Nonnegative side: degree a contributes a + 1 copies of row i.
        if (cell) {
            for (int a = std::max(P.lo, 0); a <= P.hi; ++a) {
                auto d = P.dim_at(i, a);
                if (*d > 0) row.support[a] = (a + 1) * *d;
            }
        }
        // Side below -1: degree a contributes -a - 1 copies of row i - 1.
        if (prev) {
            if (prev->tail == TailState::None) {
                for (auto& [a, d] : prev->support)
                    if (a <= -2) row.support[a] += (-a - 1) * d;
            } else {
                for (int a = P.lo; a <= std::min(P.hi, -2); ++a) {
                    auto d = P.dim_at(i - 1, a);
                    if (*d > 0) row.support[a] += (-a - 1) * *d;
                }
            }
        }
        // Tail of the new row comes from the row below the diagonal.
        if (!prev || prev->tail == TailState::None)
            row.tail = TailState::None;
        else if (prev->tail == TailState::AllBelowNonzero)
            row.tail = P.lo <= -1 ? TailState::AllBelowNonzero : TailState::UnknownBelow;
        else
            row.tail = TailState::UnknownBelow;

        // Top degree of the new row.
        std::optional<int> top;
        if (cell && cell->top && *cell->top >= 0) {
            top = *cell->top;
        } else if (prev) {
            std::optional<int> neg;
            for (auto& [a, d] : prev->support)
                if (a <= -2 && (!neg || a > *neg)) neg = a;
            if (neg)
                top = *neg;
            else if (prev->tail == TailState::AllBelowNonzero && P.lo <= -1)
                top = P.lo - 1;
            else if (prev->tail == TailState::UnknownBelow)
                throw Error("prediction needs certified dims below the window; widen it");
        }
        row.top = top;
        if (row.top) require_window(*row.top, P.hi, i);
        if (!row_is_empty(row)) Q.rows[i] = std::move(row);
    }

    // Depth scan: row j may only live in degree -1 for every j < i - 1, and
    // the diagonal row i - 1 must vanish in nonnegative degrees.
    auto only_minus_one = [&](int j) -> bool {
        auto it = P.rows.find(j);
        if (it == P.rows.end()) return true;
        const ProfileRow& r = it->second;
        if (r.tail == TailState::AllBelowNonzero) return false;
        if (r.tail == TailState::UnknownBelow)
            throw Error("depth needs certified dims below the window; widen it");
        for (auto& [a, d] : r.support)
            if (a != -1 && d > 0) return false;
        return true;
    };
    int depth = 0;
    bool prefix_ok = true;
    for (int i = 1; i <= dim_a + 2; ++i) {
        if (i >= 2) prefix_ok = prefix_ok && only_minus_one(i - 2);
        if (!prefix_ok) break;
        auto a_prev = P.a(i - 1);
        if (!a_prev || *a_prev < 0) depth = i;
    }
    out.depth = depth;
    out.cohen_macaulay = depth == out.dim_r;

    ProfileInvariants inv = profile_invariants(Q);
    out.a_star = inv.a_star_total;
    out.reg = inv.reg;
    return out;
}

int depth_rees_polyext(const CohomologyProfile& P) {
    int s = -1;
    for (int i = 0; i <= std::max(P.n, P.top_index()); ++i)
        if (P.row_nonzero(i)) {
            s = i;
            break;
        }
    if (s < 0) throw Error("profile has no nonzero rows");
    const ProfileRow& r = P.rows.at(s);
    int a_s;
    if (r.top)
        a_s = *r.top;
    else if (r.tail == TailState::AllBelowNonzero)
        a_s = P.lo - 1;
    else
        throw Error("depth formula needs a certified top degree");
    return a_s >= 0 ? s + 1 : s + 2;
}

}  // namespace ca
