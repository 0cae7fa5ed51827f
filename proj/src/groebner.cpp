#include "ca/groebner.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <tuple>

#include "ca/linalg.hpp"

namespace ca {

void enumerate_monomials(int nvars, int degree, const std::function<void(const Monomial&)>& fn) {
    if (degree < 0) return;
    std::vector<std::int32_t> e(nvars, 0);
    if (nvars == 0) {
        if (degree == 0) fn(Monomial(0));
        return;
    }
    // Exponents chosen left to right, highest remaining power first.
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == nvars - 1) {
            e[i] = rem;
            fn(Monomial(e));
            e[i] = 0;
            return;
        }
        for (int k = rem; k >= 0; --k) {
            e[i] = k;
            self(self, i + 1, rem - k);
        }
        e[i] = 0;
    };
    rec(rec, 0, degree);
}

std::vector<VecPoly> as_columns(const IdealPresentation& I) {
    std::vector<VecPoly> cols;
    for (auto& g : I.gens) cols.push_back(VecPoly({g}));
    return cols;
}

VecPoly unit_vector(int rank, int pos, const Polynomial& value) {
    VecPoly v(rank, value.nvars(), value.field(), value.order());
    v[pos] = value;
    return v;
}

ModulePresentation IdealPresentation::quotient_presentation() const {
    ModulePresentation p;
    p.nvars = nvars;
    p.field = field;
    p.f0 = GradedFreeModule{{0}};
    for (auto& g : gens)
        if (!g.is_zero()) p.relations.push_back(VecPoly({g}));
    return p;
}

std::optional<int> VecPoly::degree_in(const GradedFreeModule& F) const {
    if (rank() != F.rank()) throw Error("degree_in: rank mismatch");
    std::optional<int> d;
    for (int i = 0; i < rank(); ++i) {
        for (auto& t : coords_[i].terms()) {
            int td = t.mono.degree() + F.twists[i];
            if (!d)
                d = td;
            else if (*d != td)
                return std::nullopt;
        }
    }
    return d;
}

std::optional<VecPoly::Lead> VecPoly::lead(const ModuleOrder& o) const {
    std::optional<Lead> best;
    for (int i = 0; i < rank(); ++i) {
        if (coords_[i].is_zero()) continue;
        const auto& t = coords_[i].lead();
        if (!best || o.compare(t.mono, i, best->mono, best->pos) == Ordering::GT)
            best = Lead{i, t.mono, t.coeff};
    }
    return best;
}

// ---- division ----

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const TermOrder& order) {
    Polynomial h = f.order() == order ? f : f.reorder(order);
    std::vector<Polynomial> D;
    for (auto& d : divisors) D.push_back(d.order() == order ? d : d.reorder(order));
    std::vector<Polynomial> q(divisors.size(), Polynomial(f.nvars(), f.field(), order));
    Polynomial r(f.nvars(), f.field(), order);
    while (!h.is_zero()) {
        const PolyTerm lt = h.lead();
        int hit = -1;
        for (size_t i = 0; i < D.size(); ++i) {
            if (!D[i].is_zero() && D[i].lead_mono().divides(lt.mono)) {
                hit = static_cast<int>(i);
                break;
            }
        }
        if (hit < 0) {
            Polynomial head = Polynomial::from_terms(f.nvars(), f.field(), order, {lt});
            r = r + head;
            h = h - head;
        } else {
            Scalar c = lt.coeff / D[hit].lead_coeff();
            Monomial m = lt.mono.divide_by(D[hit].lead_mono());
            q[hit] = q[hit] + Polynomial::from_terms(f.nvars(), f.field(), order, {PolyTerm{c, m}});
            h = poly_combine(h, D[hit], c, m);
        }
    }
    return DivisionResult{std::move(q), std::move(r)};
}

ModDivisionResult divide_module(const VecPoly& f, const std::vector<VecPoly>& divisors,
                                const ModuleOrder& order) {
    if (f.rank() == 0) return ModDivisionResult{{}, f};
    int nvars = f[0].nvars();
    const Field& field = f[0].field();
    const TermOrder& base = f[0].order();
    VecPoly h = f;
    VecPoly r(f.rank(), nvars, field, base);
    std::vector<Polynomial> q(divisors.size(), Polynomial(nvars, field, base));
    std::vector<std::optional<VecPoly::Lead>> dl(divisors.size());
    for (size_t i = 0; i < divisors.size(); ++i) dl[i] = divisors[i].lead(order);
    while (true) {
        auto lt = h.lead(order);
        if (!lt) break;
        int hit = -1;
        for (size_t i = 0; i < divisors.size(); ++i) {
            if (dl[i] && dl[i]->pos == lt->pos && dl[i]->mono.divides(lt->mono)) {
                hit = static_cast<int>(i);
                break;
            }
        }
        Polynomial head = Polynomial::from_terms(nvars, field, base, {PolyTerm{lt->coeff, lt->mono}});
        if (hit < 0) {
            r[lt->pos] = r[lt->pos] + head;
            h[lt->pos] = h[lt->pos] - head;
        } else {
            Scalar c = lt->coeff / dl[hit]->coeff;
            Monomial m = lt->mono.divide_by(dl[hit]->mono);
            q[hit] = q[hit] + Polynomial::from_terms(nvars, field, base, {PolyTerm{c, m}});
            h = h - divisors[hit].mul_term(c, m);
        }
    }
    return ModDivisionResult{std::move(q), std::move(r)};
}

// ---- Buchberger ----

namespace {

struct Engine {
    const GradedFreeModule& F;
    std::shared_ptr<const ModuleOrder> order;
    std::vector<VecPoly> G;
    std::vector<VecPoly::Lead> leads;
    std::set<std::tuple<int, int, int>> queue;  // (degree, i, j)
    std::set<std::pair<int, int>> handled;

    Engine(const GradedFreeModule& f, std::shared_ptr<const ModuleOrder> o) : F(f), order(std::move(o)) {}

    void add(const VecPoly& v) {
        auto l = v.lead(*order);
        if (!l) return;
        int j = static_cast<int>(G.size());
        G.push_back(v.scale(l->coeff.inverse()));
        l->coeff = Scalar::one(l->coeff.field());
        leads.push_back(*l);
        for (int i = 0; i < j; ++i) {
            if (leads[i].pos != leads[j].pos) continue;
            Monomial l_ij = leads[i].mono.lcm(leads[j].mono);
            queue.insert({l_ij.degree() + F.twists[leads[i].pos], i, j});
        }
    }

    bool chain_skip(int i, int j, const Monomial& l_ij) const {
        for (size_t k = 0; k < G.size(); ++k) {
            int ki = static_cast<int>(k);
            if (ki == i || ki == j || leads[k].pos != leads[i].pos) continue;
            if (!leads[k].mono.divides(l_ij)) continue;
            auto p1 = std::minmax(i, ki), p2 = std::minmax(ki, j);
            if (handled.count({p1.first, p1.second}) && handled.count({p2.first, p2.second}))
                return true;
        }
        return false;
    }

    void run() {
        while (!queue.empty()) {
            auto [d, i, j] = *queue.begin();
            queue.erase(queue.begin());
            handled.insert({i, j});
            Monomial l_ij = leads[i].mono.lcm(leads[j].mono);
            if (F.rank() == 1 && leads[i].mono.coprime(leads[j].mono)) continue;
            if (chain_skip(i, j, l_ij)) continue;
            Scalar one = Scalar::one(G[i][0].field());
            VecPoly s = G[i].mul_term(one, l_ij.divide_by(leads[i].mono)) -
                        G[j].mul_term(one, l_ij.divide_by(leads[j].mono));
            VecPoly r = divide_module(s, G, *order).remainder;
            if (!r.is_zero()) add(r);
        }
    }

    // Minimal lead set, tail-reduced, sorted. Leaves a reduced basis.
    std::vector<VecPoly> reduce() const {
        std::vector<bool> kept(G.size(), true);
        for (size_t i = 0; i < G.size(); ++i) {
            for (size_t j = 0; j < G.size(); ++j) {
                if (i == j || !kept[j]) continue;
                if (leads[j].pos != leads[i].pos) continue;
                if (!leads[j].mono.divides(leads[i].mono)) continue;
                if (leads[j].mono == leads[i].mono && j > i) continue;
                kept[i] = false;
                break;
            }
        }
        std::vector<VecPoly> mins;
        for (size_t i = 0; i < G.size(); ++i)
            if (kept[i]) mins.push_back(G[i]);
        std::vector<VecPoly> out;
        for (size_t i = 0; i < mins.size(); ++i) {
            std::vector<VecPoly> others;
            for (size_t j = 0; j < mins.size(); ++j)
                if (j != i) others.push_back(mins[j]);
            out.push_back(divide_module(mins[i], others, *order).remainder);
        }
        std::sort(out.begin(), out.end(), [&](const VecPoly& a, const VecPoly& b) {
            auto la = *a.lead(*order), lb = *b.lead(*order);
            int da = la.mono.degree() + F.twists[la.pos], db = lb.mono.degree() + F.twists[lb.pos];
            if (da != db) return da < db;
            return order->compare(la.mono, la.pos, lb.mono, lb.pos) == Ordering::LT;
        });
        return out;
    }
};

}  // namespace

std::vector<VecPoly> buchberger_module(const std::vector<VecPoly>& gens,
                                       const GradedFreeModule& F,
                                       const std::shared_ptr<const ModuleOrder>& order) {
    Engine e(F, order);
    for (auto& g : gens) e.add(g);
    e.run();
    return e.reduce();
}

bool is_groebner_module(const std::vector<VecPoly>& gens,
                        const std::shared_ptr<const ModuleOrder>& order) {
    std::vector<std::optional<VecPoly::Lead>> leads;
    for (auto& g : gens) leads.push_back(g.lead(*order));
    for (size_t i = 0; i < gens.size(); ++i) {
        if (!leads[i]) continue;
        for (size_t j = i + 1; j < gens.size(); ++j) {
            if (!leads[j] || leads[i]->pos != leads[j]->pos) continue;
            Monomial l_ij = leads[i]->mono.lcm(leads[j]->mono);
            VecPoly s = gens[i].mul_term(leads[i]->coeff.inverse(), l_ij.divide_by(leads[i]->mono)) -
                        gens[j].mul_term(leads[j]->coeff.inverse(), l_ij.divide_by(leads[j]->mono));
            if (!divide_module(s, gens, *order).remainder.is_zero()) return false;
        }
    }
    return true;
}

GroebnerBasis buchberger(const IdealPresentation& I, const TermOrder& order) {
    std::vector<VecPoly> cols;
    for (auto& g : I.gens)
        if (!g.is_zero()) cols.push_back(VecPoly({g.reorder(order)}));
    GradedFreeModule F{{0}};
    auto mo = std::make_shared<const ModuleOrder>(ModuleOrder::pot(order));
    auto gb = buchberger_module(cols, F, mo);
    GroebnerBasis out;
    out.order = order;
    out.reduced = true;
    for (auto& v : gb) out.elements.push_back(v[0]);
    return out;
}

bool is_groebner(const std::vector<Polynomial>& gens, const TermOrder& order) {
    std::vector<VecPoly> cols;
    for (auto& g : gens)
        if (!g.is_zero()) cols.push_back(VecPoly({g.reorder(order)}));
    auto mo = std::make_shared<const ModuleOrder>(ModuleOrder::pot(order));
    return is_groebner_module(cols, mo);
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int degree, int nvars) {
    std::vector<Monomial> leads;
    for (auto& g : gb.elements)
        if (!g.is_zero()) leads.push_back(g.lead_mono());
    std::vector<Monomial> out;
    enumerate_monomials(nvars, degree, [&](const Monomial& m) {
        for (auto& l : leads)
            if (l.divides(m)) return;
        out.push_back(m);
    });
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return gb.order.compare(a, b) == Ordering::GT;
    });
    return out;
}

long hilbert_function(const GroebnerBasis& gb, int degree, int nvars) {
    std::vector<Monomial> leads;
    for (auto& g : gb.elements)
        if (!g.is_zero()) leads.push_back(g.lead_mono());
    long count = 0;
    enumerate_monomials(nvars, degree, [&](const Monomial& m) {
        for (auto& l : leads)
            if (l.divides(m)) return;
        ++count;
    });
    return count;
}

IdealPresentation eliminate(const IdealPresentation& I, const std::vector<int>& keep) {
    std::vector<bool> keep_mask(I.nvars, false);
    for (int v : keep) keep_mask.at(v) = true;
    std::vector<int> priority;
    for (int v = 0; v < I.nvars; ++v)
        if (!keep_mask[v]) priority.push_back(v);
    int dropped = static_cast<int>(priority.size());
    for (int v = 0; v < I.nvars; ++v)
        if (keep_mask[v]) priority.push_back(v);
    TermOrder elim_order = TermOrder::elim(dropped).with_priority(priority);
    GroebnerBasis gb = buchberger(I, elim_order);

    IdealPresentation out;
    out.nvars = static_cast<int>(keep.size());
    out.field = I.field;
    out.order = TermOrder::grevlex();
    std::vector<int> new_index(I.nvars, -1);
    for (size_t i = 0; i < keep.size(); ++i) {
        new_index[keep[i]] = static_cast<int>(i);
        out.names.push_back(I.names.empty() ? "x" + std::to_string(keep[i] + 1) : I.names[keep[i]]);
    }
    for (auto& g : gb.elements) {
        bool pure = true;
        for (auto& t : g.terms())
            for (int v = 0; v < I.nvars && pure; ++v)
                if (!keep_mask[v] && t.mono.exponent(v) > 0) pure = false;
        if (!pure) continue;
        std::vector<PolyTerm> terms;
        for (auto& t : g.terms()) {
            std::vector<std::int32_t> e(keep.size(), 0);
            for (int v = 0; v < I.nvars; ++v)
                if (t.mono.exponent(v) > 0) e[new_index[v]] = t.mono.exponent(v);
            terms.push_back(PolyTerm{t.coeff, Monomial(std::move(e))});
        }
        out.gens.push_back(Polynomial::from_terms(out.nvars, out.field, out.order, std::move(terms)));
    }
    std::sort(out.gens.begin(), out.gens.end(), [&](const Polynomial& a, const Polynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return out.order.compare(a.lead_mono(), b.lead_mono()) == Ordering::LT;
    });
    return out;
}

IdealPresentation initial_ideal(const IdealPresentation& I, const TermOrder& order) {
    GroebnerBasis gb = buchberger(I, order);
    IdealPresentation out;
    out.nvars = I.nvars;
    out.field = I.field;
    out.names = I.names;
    out.order = order;
    for (auto& g : gb.elements)
        out.gens.push_back(Polynomial::from_terms(
            I.nvars, I.field, order, {PolyTerm{Scalar::one(I.field), g.lead_mono()}}));
    return out;
}

SchreyerResult schreyer_syzygies(const std::vector<VecPoly>& gb, const GradedFreeModule& F,
                                 const std::shared_ptr<const ModuleOrder>& order) {
    std::vector<VecPoly::Lead> leads;
    std::vector<VecPoly> G;
    GradedFreeModule ambient;
    int nvars = 0;
    Field field;
    for (auto& g : gb) {
        auto l = g.lead(*order);
        if (!l) throw Error("syzygies: zero element in basis");
        G.push_back(g.scale(l->coeff.inverse()));
        l->coeff = Scalar::one(l->coeff.field());
        leads.push_back(*l);
        auto d = g.degree_in(F);
        if (!d) throw Error("syzygies: inhomogeneous element");
        ambient.twists.push_back(*d);
        nvars = g[0].nvars();
        field = g[0].field();
    }
    const TermOrder& base = order->base();
    SchreyerResult res;
    res.ambient = ambient;
    std::vector<std::pair<Monomial, int>> lead_pairs;
    for (auto& l : leads) lead_pairs.emplace_back(l.mono, l.pos);
    res.order = std::make_shared<const ModuleOrder>(
        ModuleOrder::schreyer(order, std::move(lead_pairs), base));
    Scalar one = Scalar::one(field);
    for (size_t i = 0; i < G.size(); ++i) {
        for (size_t j = i + 1; j < G.size(); ++j) {
            if (leads[i].pos != leads[j].pos) continue;
            Monomial l_ij = leads[i].mono.lcm(leads[j].mono);
            Monomial mi = l_ij.divide_by(leads[i].mono), mj = l_ij.divide_by(leads[j].mono);
            VecPoly s = G[i].mul_term(one, mi) - G[j].mul_term(one, mj);
            auto div = divide_module(s, G, *order);
            if (!div.remainder.is_zero()) throw Error("syzygies: input is not a Groebner basis");
            VecPoly syz(static_cast<int>(G.size()), nvars, field, base);
            syz[static_cast<int>(i)] =
                Polynomial::from_terms(nvars, field, base, {PolyTerm{one, mi}});
            syz[static_cast<int>(j)] =
                Polynomial::from_terms(nvars, field, base, {PolyTerm{-one, mj}});
            for (size_t k = 0; k < G.size(); ++k)
                syz[static_cast<int>(k)] = syz[static_cast<int>(k)] - div.quotients[k];
            res.syzygies.push_back(std::move(syz));
        }
    }
    return res;
}

std::vector<VecPoly> kernel_of_map(const std::vector<VecPoly>& columns,
                                   const GradedFreeModule& target,
                                   const TermOrder& base) {
    int g = target.rank(), m = static_cast<int>(columns.size());
    if (m == 0) return {};
    int nvars = columns[0][0].nvars();
    Field field = columns[0][0].field();
    GradedFreeModule W{target.twists};
    for (auto& c : columns) {
        auto d = c.degree_in(target);
        W.twists.push_back(d ? *d : 0);
    }
    auto worder = std::make_shared<const ModuleOrder>(ModuleOrder::block(
        g, ModuleOrder::pot(base), ModuleOrder::pot(base)));
    std::vector<VecPoly> graph;
    Polynomial one = Polynomial::from_terms(nvars, field, base,
                                            {PolyTerm{Scalar::one(field), Monomial(nvars)}});
    for (int k = 0; k < m; ++k) {
        VecPoly w(g + m, nvars, field, base);
        for (int r = 0; r < g; ++r) w[r] = columns[k][r].order() == base ? columns[k][r] : columns[k][r].reorder(base);
        w[g + k] = one;
        graph.push_back(std::move(w));
    }
    auto gb = buchberger_module(graph, W, worder);
    std::vector<VecPoly> kernel;
    for (auto& v : gb) {
        bool top_zero = true;
        for (int r = 0; r < g && top_zero; ++r)
            if (!v[r].is_zero()) top_zero = false;
        if (!top_zero) continue;
        std::vector<Polynomial> coords(v.coords().begin() + g, v.coords().end());
        kernel.push_back(VecPoly(std::move(coords)));
    }
    return kernel;
}

// ---- quotient Hilbert data ----

QuotientModule::QuotientModule(GradedFreeModule f0, int nvars, Field field)
    : f0_(std::move(f0)), nvars_(nvars), field_(field), leads_(f0_.rank()) {}

QuotientModule QuotientModule::from_presentation(const ModulePresentation& pres,
                                                 const TermOrder& base) {
    QuotientModule q(pres.f0, pres.nvars, pres.field);
    auto mo = std::make_shared<const ModuleOrder>(ModuleOrder::pot(base));
    auto gb = buchberger_module(pres.relations, pres.f0, mo);
    for (auto& v : gb) {
        auto l = v.lead(*mo);
        if (l) q.leads_[l->pos].push_back(l->mono);
    }
    // Keep only minimal generators per position.
    for (auto& L : q.leads_) {
        std::vector<Monomial> mins;
        for (size_t i = 0; i < L.size(); ++i) {
            bool redundant = false;
            for (size_t j = 0; j < L.size() && !redundant; ++j)
                if (i != j && L[j].divides(L[i]) && (L[j] != L[i] || j < i)) redundant = true;
            if (!redundant) mins.push_back(L[i]);
        }
        L = std::move(mins);
    }
    return q;
}

bool QuotientModule::position_survives(int p) const {
    for (auto& m : leads_[p])
        if (m.is_one()) return false;
    return true;
}

long QuotientModule::hilbert(int degree) const {
    long total = 0;
    for (int p = 0; p < f0_.rank(); ++p) {
        int d = degree - f0_.twists[p];
        if (d < 0 || !position_survives(p)) continue;
        enumerate_monomials(nvars_, d, [&](const Monomial& m) {
            for (auto& l : leads_[p])
                if (l.divides(m)) return;
            ++total;
        });
    }
    return total;
}

bool QuotientModule::is_zero_module() const {
    for (int p = 0; p < f0_.rank(); ++p)
        if (position_survives(p)) return false;
    return true;
}

std::optional<int> QuotientModule::indeg() const {
    std::optional<int> d;
    for (int p = 0; p < f0_.rank(); ++p)
        if (position_survives(p) && (!d || f0_.twists[p] < *d)) d = f0_.twists[p];
    return d;
}

int QuotientModule::krull_dim() const {
    int dim = -1;
    for (int p = 0; p < f0_.rank(); ++p) {
        if (!position_survives(p)) continue;
        dim = std::max(dim, monomial_ideal_dim(leads_[p], nvars_));
    }
    return dim;
}

std::optional<int> QuotientModule::positive_from() const {
    std::optional<int> t;
    for (int p = 0; p < f0_.rank(); ++p) {
        if (!position_survives(p)) continue;
        if (monomial_ideal_dim(leads_[p], nvars_) >= 1 && (!t || f0_.twists[p] < *t))
            t = f0_.twists[p];
    }
    return t;
}

int QuotientModule::finite_support_bound() const {
    int bound = std::numeric_limits<int>::min();
    for (int p = 0; p < f0_.rank(); ++p) {
        if (!position_survives(p)) continue;
        if (monomial_ideal_dim(leads_[p], nvars_) != 0)
            throw Error("finite_support_bound on a positive-dimensional position");
        int cap = f0_.twists[p];
        for (int v = 0; v < nvars_; ++v) {
            int pure = -1;
            for (auto& m : leads_[p]) {
                if (m.exponent(v) != m.degree()) continue;  // not a pure power of v
                if (m.exponent(v) > 0 && (pure < 0 || m.exponent(v) < pure)) pure = m.exponent(v);
            }
            if (pure < 0) throw Error("finite_support_bound: missing pure power");
            cap += pure - 1;
        }
        bound = std::max(bound, cap);
    }
    return bound;
}

int monomial_ideal_dim(const std::vector<Monomial>& gens, int nvars) {
    for (auto& m : gens)
        if (m.is_one()) return -1;
    std::vector<std::vector<int>> supports;
    for (auto& m : gens) {
        std::vector<int> s;
        for (int v = 0; v < nvars; ++v)
            if (m.exponent(v) > 0) s.push_back(v);
        if (!s.empty()) supports.push_back(std::move(s));
    }
    // Max independent set: largest variable set containing no full support.
    auto rec = [&](auto&& self, std::vector<bool>& avail) -> int {
        for (auto& s : supports) {
            bool inside = true;
            for (int v : s)
                if (!avail[v]) {
                    inside = false;
                    break;
                }
            if (!inside) continue;
            int best = -1;
            for (int v : s) {
                avail[v] = false;
                best = std::max(best, self(self, avail));
                avail[v] = true;
            }
            return best;
        }
        int c = 0;
        for (int v = 0; v < nvars; ++v)
            if (avail[v]) ++c;
        return c;
    };
    std::vector<bool> avail(nvars, true);
    return rec(rec, avail);
}

bool in_span_degreewise(const VecPoly& g, const std::vector<VecPoly>& others,
                        const GradedFreeModule& F) {
    auto dg = g.degree_in(F);
    if (!dg) throw Error("in_span_degreewise: inhomogeneous element");
    if (g.is_zero()) return true;
    int nvars = g[0].nvars();
    const Field& field = g[0].field();
    // Basis of the degree piece of F.
    std::map<std::pair<int, std::vector<std::int32_t>>, int> index;
    for (int p = 0; p < F.rank(); ++p) {
        int d = *dg - F.twists[p];
        if (d < 0) continue;
        enumerate_monomials(nvars, d, [&](const Monomial& m) {
            int id = static_cast<int>(index.size());
            index[{p, m.exponents()}] = id;
        });
    }
    auto vectorize = [&](const VecPoly& v, std::vector<Scalar>& out) {
        for (int p = 0; p < v.rank(); ++p)
            for (auto& t : v[p].terms()) {
                auto it = index.find({p, t.mono.exponents()});
                if (it == index.end()) throw Error("in_span_degreewise: stray term");
                out[it->second] = out[it->second] + t.coeff;
            }
    };
    // Columns: monomial multiples of the other generators landing in degree dg.
    std::vector<std::vector<Scalar>> columns;
    for (auto& h : others) {
        if (h.is_zero()) continue;
        auto dh = h.degree_in(F);
        if (!dh) throw Error("in_span_degreewise: inhomogeneous element");
        if (*dh > *dg) continue;
        enumerate_monomials(nvars, *dg - *dh, [&](const Monomial& m) {
            VecPoly prod = h.mul_term(Scalar::one(field), m);
            std::vector<Scalar> col(index.size(), Scalar::zero(field));
            vectorize(prod, col);
            columns.push_back(std::move(col));
        });
    }
    ScalarMatrix M(static_cast<int>(index.size()), static_cast<int>(columns.size()), field);
    for (size_t c = 0; c < columns.size(); ++c)
        for (size_t r = 0; r < columns[c].size(); ++r) M.at(static_cast<int>(r), static_cast<int>(c)) = columns[c][r];
    std::vector<Scalar> target(index.size(), Scalar::zero(field));
    vectorize(g, target);
    return ScalarMatrix::in_column_span(M, target);
}

std::vector<int> minimal_generator_indices(const std::vector<VecPoly>& gens,
                                           const GradedFreeModule& F) {
    std::vector<int> order_idx;
    for (size_t i = 0; i < gens.size(); ++i) order_idx.push_back(static_cast<int>(i));
    std::stable_sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
        auto da = gens[a].degree_in(F), db = gens[b].degree_in(F);
        return da.value_or(0) < db.value_or(0);
    });
    std::vector<bool> kept(gens.size(), true);
    for (int i : order_idx) {
        std::vector<VecPoly> others;
        for (size_t j = 0; j < gens.size(); ++j)
            if (static_cast<int>(j) != i && kept[j]) others.push_back(gens[j]);
        if (in_span_degreewise(gens[i], others, F)) kept[i] = false;
    }
    std::vector<int> out;
    for (size_t i = 0; i < gens.size(); ++i)
        if (kept[i]) out.push_back(static_cast<int>(i));
    return out;
}

IdealPresentation colon(const IdealPresentation& J, const Polynomial& f) {
    std::vector<VecPoly> cols = as_columns(J);
    cols.push_back(VecPoly({f.reorder(J.order)}));
    auto kernel = kernel_of_map(cols, GradedFreeModule{{0}}, J.order);
    IdealPresentation out;
    out.nvars = J.nvars;
    out.field = J.field;
    out.names = J.names;
    out.order = J.order;
    int last = static_cast<int>(cols.size()) - 1;
    for (auto& v : kernel)
        if (!v[last].is_zero()) out.gens.push_back(v[last]);
    return out;
}

}  // namespace ca
