#include "ca/resolution.hpp"

#include <algorithm>
#include <sstream>

#include "ca/linalg.hpp"

namespace ca {

namespace {

VecPoly mul_poly(const VecPoly& v, const Polynomial& p) {
    std::vector<Polynomial> coords;
    for (int i = 0; i < v.rank(); ++i) coords.push_back(v[i] * p);
    return VecPoly(std::move(coords));
}

VecPoly drop_coord(const VecPoly& v, int r) {
    std::vector<Polynomial> coords;
    for (int i = 0; i < v.rank(); ++i)
        if (i != r) coords.push_back(v[i]);
    return VecPoly(std::move(coords));
}

// Drop basis elements whose lead term is a multiple of another element's lead
// in the same coordinate. The survivors span the same lead module, so they are
// still a Groebner basis of the same submodule; without this the syzygy levels
// never shrink once unit leads appear.
void prune_redundant(std::vector<VecPoly>& gens, const ModuleOrder& o) {
    std::vector<VecPoly::Lead> leads;
    leads.reserve(gens.size());
    for (auto& g : gens) leads.push_back(*g.lead(o));
    std::vector<bool> drop(gens.size(), false);
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < gens.size(); ++j) {
            if (i == j || leads[i].pos != leads[j].pos) continue;
            if (!leads[j].mono.divides(leads[i].mono)) continue;
            if (leads[i].mono.divides(leads[j].mono) && j > i) continue;
            drop[i] = true;
            break;
        }
    std::vector<VecPoly> kept;
    for (size_t i = 0; i < gens.size(); ++i)
        if (!drop[i]) kept.push_back(std::move(gens[i]));
    gens = std::move(kept);
}

// Sort a basis for the syzygy iteration: position ascending, then lex
// descending on the lead monomial. Keeps resolutions short.
void sort_for_syzygies(std::vector<VecPoly>& gens, const ModuleOrder& o) {
    TermOrder lex = TermOrder::lex();
    std::stable_sort(gens.begin(), gens.end(), [&](const VecPoly& a, const VecPoly& b) {
        auto la = *a.lead(o), lb = *b.lead(o);
        if (la.pos != lb.pos) return la.pos < lb.pos;
        return lex.compare(la.mono, lb.mono) == Ordering::GT;
    });
}

// Cancel one unit entry of maps[k] at (row r, column c) and contract the
// neighbouring maps accordingly.
void cancel_unit(Resolution& R, int k, int r, int c) {
    auto& d = R.maps[k];
    Scalar u = d[c][r].lead_coeff();
    for (size_t c2 = 0; c2 < d.size(); ++c2) {
        if (static_cast<int>(c2) == c || d[c2][r].is_zero()) continue;
        Polynomial lambda = d[c2][r].scale(u.inverse());
        d[c2] = d[c2] - mul_poly(d[c], lambda);
    }
    std::vector<VecPoly> nd;
    for (size_t c2 = 0; c2 < d.size(); ++c2)
        if (static_cast<int>(c2) != c) nd.push_back(drop_coord(d[c2], r));
    R.maps[k] = std::move(nd);
    R.modules[k].twists.erase(R.modules[k].twists.begin() + r);
    R.modules[k + 1].twists.erase(R.modules[k + 1].twists.begin() + c);
    if (k + 1 < static_cast<int>(R.maps.size())) {
        for (auto& col : R.maps[k + 1]) col = drop_coord(col, c);
    }
    if (k > 0) {
        auto& prev = R.maps[k - 1];
        prev.erase(prev.begin() + r);
    }
}

bool minimalize_pass(Resolution& R) {
    for (size_t k = 0; k < R.maps.size(); ++k) {
        const auto& d = R.maps[k];
        int rows = R.modules[k].rank();
        for (int r = 0; r < rows; ++r)
            for (size_t c = 0; c < d.size(); ++c)
                if (!d[c][r].is_zero() && d[c][r].is_constant()) {
                    cancel_unit(R, static_cast<int>(k), r, static_cast<int>(c));
                    return true;
                }
    }
    return false;
}

}  // namespace

Resolution minimal_free_resolution(const ModulePresentation& pres) {
    Resolution R;
    R.modules.push_back(pres.f0);
    TermOrder base = TermOrder::grevlex();
    for (auto& rel : pres.relations)
        if (!rel.is_zero() && !rel.degree_in(pres.f0))
            throw Error("resolution: inhomogeneous relation");

    auto order = std::make_shared<const ModuleOrder>(ModuleOrder::pot(base));
    std::vector<VecPoly> relations;
    for (auto& rel : pres.relations) {
        if (rel.is_zero()) continue;
        std::vector<Polynomial> coords;
        for (int i = 0; i < rel.rank(); ++i) coords.push_back(rel[i].reorder(base));
        relations.push_back(VecPoly(std::move(coords)));
    }
    if (!relations.empty()) {
        auto gb = buchberger_module(relations, pres.f0, order);
        GradedFreeModule F = pres.f0;
        int level = 0;
        while (!gb.empty()) {
            if (level > pres.nvars + 1) throw Error("resolution: length bound exceeded");
            sort_for_syzygies(gb, *order);
            GradedFreeModule next;
            for (auto& g : gb) {
                auto dg = g.degree_in(F);
                if (!dg) throw Error("resolution: inhomogeneous syzygy");
                next.twists.push_back(*dg);
            }
            R.modules.push_back(next);
            R.maps.push_back(gb);
            auto syz = schreyer_syzygies(gb, F, order);
            F = syz.ambient;
            order = syz.order;
            gb = syz.syzygies;
            prune_redundant(gb, *order);
            ++level;
        }
    }
    while (minimalize_pass(R)) {
    }
    while (R.modules.size() > 1 && R.modules.back().rank() == 0) {
        R.modules.pop_back();
        R.maps.pop_back();
    }
    R.minimal = true;
    return R;
}

Resolution minimal_free_resolution(const IdealPresentation& I) {
    if (!I.homogeneous()) throw Error("resolution: inhomogeneous input");
    return minimal_free_resolution(I.quotient_presentation());
}

BettiTable BettiTable::from_resolution(const Resolution& R, int n) {
    BettiTable T;
    T.n = n;
    for (size_t i = 0; i < R.modules.size(); ++i)
        for (int t : R.modules[i].twists) ++T.entries[{static_cast<int>(i), t}];
    return T;
}

long BettiTable::beta(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

int BettiTable::max_index() const {
    int m = -1;
    for (auto& [k, v] : entries)
        if (v > 0) m = std::max(m, k.first);
    return m;
}

std::string BettiTable::str() const {
    // Macaulay layout: row d lists beta_{i, i+d}.
    int imax = max_index();
    if (imax < 0) return "(zero module)\n";
    int dmin = 0, dmax = 0;
    for (auto& [k, v] : entries) {
        if (v == 0) continue;
        dmin = std::min(dmin, k.second - k.first);
        dmax = std::max(dmax, k.second - k.first);
    }
    std::ostringstream out;
    out << "      ";
    for (int i = 0; i <= imax; ++i) out << i << "\t";
    out << "\n";
    for (int d = dmin; d <= dmax; ++d) {
        out << d << ":  ";
        for (int i = 0; i <= imax; ++i) {
            long b = beta(i, i + d);
            out << "  " << (b ? std::to_string(b) : ".") << "\t";
        }
        out << "\n";
    }
    return out.str();
}

BettiInvariants betti_invariants(const BettiTable& T) {
    BettiInvariants inv;
    int pd = std::max(T.max_index(), 0);
    inv.pd = pd;
    inv.depth = T.n - pd;
    inv.b.assign(pd + 1, std::nullopt);
    for (auto& [k, v] : T.entries) {
        if (v == 0) continue;
        auto& bi = inv.b[k.first];
        bi = bi ? std::max(*bi, k.second) : k.second;
    }
    inv.b_star.assign(pd + 1, std::nullopt);
    inv.j_reg.assign(pd + 1, std::nullopt);
    for (int j = pd; j >= 0; --j) {
        std::optional<int> bs = j + 1 <= pd ? inv.b_star[j + 1] : std::nullopt;
        std::optional<int> jr = j + 1 <= pd ? inv.j_reg[j + 1] : std::nullopt;
        if (inv.b[j]) {
            bs = bs ? std::max(*bs, *inv.b[j]) : *inv.b[j];
            int v = *inv.b[j] - j;
            jr = jr ? std::max(*jr, v) : v;
        }
        inv.b_star[j] = bs;
        inv.j_reg[j] = jr;
    }
    inv.reg = inv.j_reg[0].value_or(0);
    for (int j = 0; j <= pd; ++j) {
        if (!inv.b[j]) continue;
        bool extremal = true;
        for (int i = j + 1; i <= pd; ++i)
            if (inv.b[i] && *inv.b[i] - i >= *inv.b[j] - j) extremal = false;
        if (extremal) inv.extremal.push_back(j);
    }
    return inv;
}

long resolution_euler_characteristic(const Resolution& R, int nvars, int degree) {
    long acc = 0;
    int sign = 1;
    for (auto& F : R.modules) {
        for (int t : F.twists)
            if (degree - t >= 0) acc += sign * binomial(nvars + degree - t - 1, nvars - 1);
        sign = -sign;
    }
    return acc;
}

bool resolution_is_complex(const Resolution& R) {
    for (size_t k = 0; k + 1 < R.maps.size(); ++k) {
        // image of each generator of F_{k+2} under two steps
        for (auto& col : R.maps[k + 1]) {
            VecPoly acc(R.modules[k].rank(), 0, Field(), TermOrder::grevlex());
            bool init = false;
            for (int j = 0; j < col.rank(); ++j) {
                if (col[j].is_zero()) continue;
                VecPoly part = mul_poly(R.maps[k][j], col[j]);
                acc = init ? acc + part : part;
                init = true;
            }
            if (init && !acc.is_zero()) return false;
        }
    }
    return true;
}

bool resolution_is_minimal(const Resolution& R) {
    for (auto& d : R.maps)
        for (auto& col : d)
            for (int r = 0; r < col.rank(); ++r)
                if (!col[r].is_zero() && col[r].is_constant()) return false;
    return true;
}

bool resolution_maps_homogeneous(const Resolution& R) {
    for (size_t k = 0; k < R.maps.size(); ++k)
        for (size_t c = 0; c < R.maps[k].size(); ++c) {
            auto d = R.maps[k][c].degree_in(R.modules[k]);
            if (R.maps[k][c].is_zero()) continue;
            if (!d || *d != R.modules[k + 1].twists[c]) return false;
        }
    return true;
}

}  // namespace ca
