#include "ca/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <utility>

#include "ca/linalg.hpp"

namespace ca {

namespace {

using OptL = std::optional<long>;

OptL widen(const std::optional<int>& v) {
    if (!v) return std::nullopt;
    return OptL(static_cast<long>(*v));
}

std::string num(const OptL& v) { return v ? std::to_string(*v) : std::string("-inf"); }

// Comparisons where an absent value reads as minus infinity.
bool le(const OptL& a, const OptL& b) {
    if (!a) return true;
    if (!b) return false;
    return *a <= *b;
}

bool eq(const OptL& a, const OptL& b) {
    if (!a || !b) return !a && !b;
    return *a == *b;
}

OptL omax(const OptL& a, const OptL& b) {
    if (!a) return b;
    if (!b) return a;
    return OptL(std::max(*a, *b));
}

OptL oadd(const OptL& a, long d) {
    if (!a) return a;
    return OptL(*a + d);
}

TheoremReport base_report(std::string id, std::string inputs) {
    TheoremReport r;
    r.id = std::move(id);
    r.inputs = std::move(inputs);
    return r;
}

TheoremReport le_report(std::string id, std::string inputs, OptL left, OptL right) {
    TheoremReport r = base_report(std::move(id), std::move(inputs));
    r.left = left;
    r.right = right;
    if (le(left, right)) {
        r.verdict = Verdict::Holds;
    } else {
        r.verdict = Verdict::Fails;
        r.witness = num(left) + " > " + num(right);
    }
    return r;
}

TheoremReport na_report(std::string id, std::string inputs, std::string reason) {
    TheoremReport r = base_report(std::move(id), std::move(inputs));
    r.verdict = Verdict::NotApplicable;
    r.reason = std::move(reason);
    return r;
}

std::string poly_list(const std::vector<Polynomial>& ps, const std::vector<std::string>& names) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < ps.size(); ++i) {
        if (i) os << ", ";
        os << ps[i].str(names);
    }
    if (ps.empty()) os << "0";
    os << ")";
    return os.str();
}

std::string ideal_digest(const IdealPresentation& J) {
    return J.field.str() + " n=" + std::to_string(J.nvars) + " J=" + poly_list(J.gens, J.names);
}

bool window_error(const Error& e) {
    return std::string(e.what()).find("widen") != std::string::npos;
}

CohomologyProfile profile_auto(const IdealPresentation& I, int lo, int hi) {
    for (int attempt = 0;; ++attempt) {
        try {
            return cohomology_profile(I, lo, hi);
        } catch (const Error& e) {
            if (attempt >= 8 || !window_error(e)) throw;
            hi += 4;
        }
    }
}

struct PredictedPair {
    CohomologyProfile base;
    ReesProfilePrediction pred;
};

PredictedPair predict_auto(const IdealPresentation& J, int lo, int hi) {
    for (int attempt = 0;; ++attempt) {
        CohomologyProfile base = profile_auto(J, lo, hi);
        try {
            ReesProfilePrediction pred = predict_rees_profile(base);
            return {std::move(base), std::move(pred)};
        } catch (const Error& e) {
            if (attempt >= 8 || !window_error(e)) throw;
            lo -= 6;
        }
    }
}

bool is_zero_ring(const IdealPresentation& J) {
    GroebnerBasis gb = buchberger(J, TermOrder::grevlex());
    return hilbert_function(gb, 0, J.nvars) == 0;
}

OptL partial(const std::vector<std::optional<int>>& v, const std::optional<int>& total, int j) {
    if (j < 0) return std::nullopt;
    if (j >= static_cast<int>(v.size())) return widen(total);
    return widen(v[j]);
}

OptL betti_at(const BettiInvariants& B, int i) {
    if (i < 0 || i >= static_cast<int>(B.b.size())) return std::nullopt;
    return widen(B.b[i]);
}

bool same_ideal(const IdealPresentation& X, const IdealPresentation& Y) {
    GroebnerBasis gx = buchberger(X, TermOrder::grevlex());
    GroebnerBasis gy = buchberger(Y, TermOrder::grevlex());
    if (gx.elements.size() != gy.elements.size()) return false;
    for (size_t i = 0; i < gx.elements.size(); ++i)
        if (!(gx.elements[i] - gy.elements[i]).is_zero()) return false;
    return true;
}

bool regular_sequence_on(const IdealPresentation& J, const std::vector<Polynomial>& fs) {
    IdealPresentation P = J;
    for (const Polynomial& f : fs) {
        if (!same_ideal(colon(P, f), P)) return false;
        P.gens.push_back(f);
    }
    return true;
}

// True when some row satisfies reg = a_i + i with a_i <= -2.
bool low_reg_witness(const CohomologyProfile& P, long reg) {
    for (const auto& [i, row] : P.rows)
        if (row.top && *row.top + i == reg && *row.top <= -2) return true;
    return false;
}

void sort_reports(std::vector<TheoremReport>& rs) {
    std::sort(rs.begin(), rs.end(), [](const TheoremReport& a, const TheoremReport& b) {
        if (a.id != b.id) return a.id < b.id;
        return a.inputs < b.inputs;
    });
}

// Shared evaluation of the maximal-ideal transfer statements from a profile
// of A and the predicted profile of its blowup. BA may be null when no
// presentation (hence no resolution) is available.
std::vector<TheoremReport> maxideal_core(const CohomologyProfile& PA,
                                         const ReesProfilePrediction& RP,
                                         const std::string& inputs,
                                         const BettiInvariants* BA) {
    const int n = PA.n;
    const CohomologyProfile& PR = RP.profile;
    ProfileInvariants IA = profile_invariants(PA);
    ProfileInvariants IR = profile_invariants(PR);
    auto asA = [&](int j) { return partial(IA.a_star, IA.a_star_total, j); };
    auto asR = [&](int j) { return partial(IR.a_star, IR.a_star_total, j); };
    auto rgA = [&](int j) { return partial(IA.reg_j, IA.reg, j); };
    auto rgR = [&](int j) { return partial(IR.reg_j, IR.reg, j); };
    const OptL aA = widen(IA.a_star_total), aR = widen(IR.a_star_total);
    const OptL regA = widen(IA.reg), regR = widen(IR.reg);
    const int jmax = 2 * n + 2;

    std::vector<TheoremReport> out;

    {  // a*_{j-n}(A) - n <= a*_j(R) <= a*_j(A)
        TheoremReport lo = base_report("a-invariant2.lower", inputs);
        TheoremReport hi = base_report("a-invariant2.upper", inputs);
        lo.verdict = hi.verdict = Verdict::Holds;
        for (int j = 0; j <= jmax; ++j) {
            OptL lhs = oadd(asA(j - n), -n), mid = asR(j), rhs = asA(j);
            if (lo.verdict == Verdict::Holds && !le(lhs, mid)) {
                lo.verdict = Verdict::Fails;
                lo.witness = "j=" + std::to_string(j) + ": " + num(lhs) + " > " + num(mid);
                lo.left = lhs;
                lo.right = mid;
            }
            if (hi.verdict == Verdict::Holds && !le(mid, rhs)) {
                hi.verdict = Verdict::Fails;
                hi.witness = "j=" + std::to_string(j) + ": " + num(mid) + " > " + num(rhs);
                hi.left = mid;
                hi.right = rhs;
            }
        }
        if (lo.verdict == Verdict::Holds) {
            lo.left = oadd(aA, -n);
            lo.right = aR;
        }
        if (hi.verdict == Verdict::Holds) {
            hi.left = aR;
            hi.right = aA;
        }
        out.push_back(std::move(lo));
        out.push_back(std::move(hi));
    }
    {  // a*_j(R) = a*_j(A) iff a*_j(A) >= 0 or a*_{j-1}(A) = a*_j(A) <= -2
        TheoremReport fwd = base_report("a-invariant2.iff.if", inputs);
        TheoremReport bwd = base_report("a-invariant2.iff.only-if", inputs);
        fwd.verdict = bwd.verdict = Verdict::Holds;
        for (int j = 0; j <= jmax; ++j) {
            bool equal = eq(asR(j), asA(j));
            bool cond = (asA(j) && *asA(j) >= 0) ||
                        (eq(asA(j - 1), asA(j)) && le(asA(j), OptL(-2)));
            if (fwd.verdict == Verdict::Holds && cond && !equal) {
                fwd.verdict = Verdict::Fails;
                fwd.witness = "j=" + std::to_string(j) + ": condition met yet " + num(asR(j)) +
                              " != " + num(asA(j));
            }
            if (bwd.verdict == Verdict::Holds && equal && !cond) {
                bwd.verdict = Verdict::Fails;
                bwd.witness =
                    "j=" + std::to_string(j) + ": equal at " + num(asA(j)) + " without the condition";
            }
        }
        fwd.left = bwd.left = aR;
        fwd.right = bwd.right = aA;
        out.push_back(std::move(fwd));
        out.push_back(std::move(bwd));
    }
    {  // a*(A) - n <= a*(R) <= a*(A); equality iff a*(A) != -1
        TheoremReport b = base_report("a-invariant3.bounds", inputs);
        b.left = aR;
        b.right = aA;
        bool oklo = le(oadd(aA, -n), aR), okhi = le(aR, aA);
        b.verdict = (oklo && okhi) ? Verdict::Holds : Verdict::Fails;
        if (!oklo) b.witness = num(oadd(aA, -n)) + " > " + num(aR);
        if (!okhi) b.witness = num(aR) + " > " + num(aA);
        out.push_back(std::move(b));

        bool equal = eq(aR, aA);
        bool cond = !(aA && *aA == -1);
        TheoremReport fwd = base_report("a-invariant3.iff.if", inputs);
        fwd.left = aR;
        fwd.right = aA;
        fwd.verdict = (!cond || equal) ? Verdict::Holds : Verdict::Fails;
        if (fwd.verdict == Verdict::Fails)
            fwd.witness = "a*(A) != -1 yet " + num(aR) + " != " + num(aA);
        out.push_back(std::move(fwd));
        TheoremReport bwd = base_report("a-invariant3.iff.only-if", inputs);
        bwd.left = aR;
        bwd.right = aA;
        bwd.verdict = (!equal || cond) ? Verdict::Holds : Verdict::Fails;
        if (bwd.verdict == Verdict::Fails) bwd.witness = "equal at " + num(aA) + " with a*(A) = -1";
        out.push_back(std::move(bwd));
    }
    {  // reg_{j-n}(A) <= reg_j(R) <= reg_j(A) + 1
        TheoremReport lo = base_report("regularity2.lower", inputs);
        TheoremReport hi = base_report("regularity2.upper", inputs);
        lo.verdict = hi.verdict = Verdict::Holds;
        for (int j = 0; j <= jmax; ++j) {
            OptL lhs = rgA(j - n), mid = rgR(j), rhs = oadd(rgA(j), 1);
            if (lo.verdict == Verdict::Holds && !le(lhs, mid)) {
                lo.verdict = Verdict::Fails;
                lo.witness = "j=" + std::to_string(j) + ": " + num(lhs) + " > " + num(mid);
                lo.left = lhs;
                lo.right = mid;
            }
            if (hi.verdict == Verdict::Holds && !le(mid, rhs)) {
                hi.verdict = Verdict::Fails;
                hi.witness = "j=" + std::to_string(j) + ": " + num(mid) + " > " + num(rhs);
                hi.left = mid;
                hi.right = rhs;
            }
        }
        if (lo.verdict == Verdict::Holds) {
            lo.left = regA;
            lo.right = regR;
        }
        if (hi.verdict == Verdict::Holds) {
            hi.left = regR;
            hi.right = oadd(regA, 1);
        }
        out.push_back(std::move(lo));
        out.push_back(std::move(hi));
    }
    {  // reg_j(R) = reg_j(A) + 1 iff some i < j has reg_j(A) = a_i + i, a_i <= -2
        TheoremReport fwd = base_report("regularity2.iff.if", inputs);
        TheoremReport bwd = base_report("regularity2.iff.only-if", inputs);
        fwd.verdict = bwd.verdict = Verdict::Holds;
        for (int j = 0; j <= jmax; ++j) {
            OptL rj = rgA(j);
            bool equal = rgR(j) && rj && *rgR(j) == *rj + 1;
            bool cond = false;
            if (rj)
                for (const auto& [i, row] : PA.rows)
                    if (i < j && row.top && *row.top + i == *rj && *row.top <= -2) {
                        cond = true;
                        break;
                    }
            if (fwd.verdict == Verdict::Holds && cond && !equal) {
                fwd.verdict = Verdict::Fails;
                fwd.witness = "j=" + std::to_string(j) + ": condition met yet " + num(rgR(j)) +
                              " != " + num(oadd(rj, 1));
            }
            if (bwd.verdict == Verdict::Holds && equal && !cond) {
                bwd.verdict = Verdict::Fails;
                bwd.witness =
                    "j=" + std::to_string(j) + ": jump to " + num(rgR(j)) + " without the condition";
            }
        }
        fwd.left = bwd.left = regR;
        fwd.right = bwd.right = oadd(regA, 1);
        out.push_back(std::move(fwd));
        out.push_back(std::move(bwd));
    }
    {  // reg(A) <= reg(R) <= reg(A) + 1; jump iff some a_i = reg(A) - i is <= -2
        TheoremReport b = base_report("regularity3.bounds", inputs);
        b.left = regR;
        b.right = regA;
        bool oklo = le(regA, regR), okhi = le(regR, oadd(regA, 1));
        b.verdict = (oklo && okhi) ? Verdict::Holds : Verdict::Fails;
        if (!oklo) b.witness = num(regA) + " > " + num(regR);
        if (!okhi) b.witness = num(regR) + " > " + num(oadd(regA, 1));
        out.push_back(std::move(b));

        bool equal = regR && regA && *regR == *regA + 1;
        bool cond = regA && low_reg_witness(PA, *regA);
        TheoremReport fwd = base_report("regularity3.iff.if", inputs);
        fwd.left = regR;
        fwd.right = oadd(regA, 1);
        fwd.verdict = (!cond || equal) ? Verdict::Holds : Verdict::Fails;
        if (fwd.verdict == Verdict::Fails)
            fwd.witness = "condition met yet " + num(regR) + " != " + num(oadd(regA, 1));
        out.push_back(std::move(fwd));
        TheoremReport bwd = base_report("regularity3.iff.only-if", inputs);
        bwd.left = regR;
        bwd.right = oadd(regA, 1);
        bwd.verdict = (!equal || cond) ? Verdict::Holds : Verdict::Fails;
        if (bwd.verdict == Verdict::Fails) bwd.witness = "jump without a low witness row";
        out.push_back(std::move(bwd));
    }
    {  // resolution-side sufficient condition for the regularity jump
        if (!BA) {
            out.push_back(
                na_report("sufficient", inputs, "resolution route unavailable for profile-only input"));
        } else {
            bool hyp = false;
            std::ostringstream detail;
            for (int i : BA->extremal) {
                OptL bi = betti_at(*BA, i);
                if (!bi) continue;
                detail << " i=" << i << " b=" << *bi << ";";
                if (regA && *bi - i == *regA && *bi <= n - 2) hyp = true;
            }
            bool equal = regR && regA && *regR == *regA + 1;
            if (hyp) {
                TheoremReport r = base_report("sufficient", inputs);
                r.left = regR;
                r.right = oadd(regA, 1);
                r.verdict = equal ? Verdict::Holds : Verdict::Fails;
                if (!equal) r.witness = num(regR) + " != " + num(oadd(regA, 1));
                out.push_back(std::move(r));
            } else {
                TheoremReport r = na_report("sufficient", inputs, "no extremal index meets the hypothesis");
                r.left = regR;
                r.right = oadd(regA, 1);
                r.note = "extremal:" + detail.str() + " bound n-2=" + std::to_string(n - 2) +
                         (equal ? "; conclusion holds anyway" : "; conclusion fails too");
                out.push_back(std::move(r));
            }
        }
    }
    return out;
}

}  // namespace

std::string TheoremReport::str() const {
    std::string v = verdict == Verdict::Holds ? "holds"
                    : verdict == Verdict::Fails ? "fails"
                                                : "n/a";
    std::string s = id + ": " + v + " left=" + num(left) + " right=" + num(right);
    if (!witness.empty()) s += " witness[" + witness + "]";
    if (!reason.empty()) s += " reason[" + reason + "]";
    if (!note.empty()) s += " note[" + note + "]";
    if (asserted_inputs) s += " [asserted]";
    if (probabilistic) s += " [randomized]";
    return s;
}

bool any_failure(const std::vector<TheoremReport>& reports) {
    for (const TheoremReport& r : reports)
        if (r.verdict == Verdict::Fails) return true;
    return false;
}

std::vector<TheoremReport> check_section3(const IdealPresentation& J,
                                          const std::vector<Polynomial>& forms) {
    if (forms.empty()) throw Error("no center forms given");
    int c = -1;
    for (const Polynomial& f : forms) {
        if (f.is_zero() || !f.is_homogeneous())
            throw Error("center forms must be nonzero and homogeneous");
        if (c >= 0 && f.degree() != c) throw Error("center forms must share one degree");
        c = f.degree();
    }
    std::string inputs = ideal_digest(J) + " I=" + poly_list(forms, J.names);
    if (c != 1)
        return {na_report("section3", inputs,
                          "only degree-one centers keep the presentation standard graded")};
    if (is_zero_ring(J)) return {na_report("section3", inputs, "quotient ring is zero")};

    const int n = J.nvars;
    const int s = static_cast<int>(forms.size());
    ReesPresentation P = rees_ideal_elimination(J, forms);
    IdealPresentation G = assoc_graded(P);
    CohomologyProfile PA = profile_auto(J, -(n + s) - 6, 4);
    CohomologyProfile PR = profile_auto(P.generators, -(n + s) - 6, 4);
    CohomologyProfile PG = profile_auto(G, -(n + s) - 6, 4);
    ProfileInvariants IA = profile_invariants(PA);
    ProfileInvariants IR = profile_invariants(PR);
    ProfileInvariants IG = profile_invariants(PG);
    BettiInvariants BA =
        betti_invariants(BettiTable::from_resolution(minimal_free_resolution(J), n));
    BettiInvariants BR = betti_invariants(
        BettiTable::from_resolution(minimal_free_resolution(P.generators), n + s));
    OptL aA = widen(IA.a_star_total), aR = widen(IR.a_star_total), aG = widen(IG.a_star_total);
    OptL regA = widen(IA.reg), regR = widen(IR.reg), regG = widen(IG.reg);

    std::vector<TheoremReport> out;
    out.push_back(le_report("a-invariant1.lower", inputs, oadd(aA, -s), aR));
    out.push_back(le_report("a-invariant1.upper", inputs, aR, omax(aA, aG)));
    out.push_back(le_report("regularity1.lower", inputs, regA, regR));
    out.push_back(le_report("regularity1.upper", inputs, regR, omax(oadd(regA, 1), regG)));
    {  // rowwise a_i(R) <= max{a_{i-1}(A), a_i(G)}
        TheoremReport r = base_report("bound1", inputs);
        r.verdict = Verdict::Holds;
        for (int i = 0; i <= n + s + 2; ++i) {
            OptL lhs = widen(PR.a(i));
            OptL rhs = omax(widen(PA.a(i - 1)), widen(PG.a(i)));
            if (!le(lhs, rhs)) {
                r.verdict = Verdict::Fails;
                r.witness = "i=" + std::to_string(i) + ": " + num(lhs) + " > " + num(rhs);
                r.left = lhs;
                r.right = rhs;
                break;
            }
        }
        if (r.verdict == Verdict::Holds) {
            r.left = aR;
            r.right = omax(aA, aG);
        }
        out.push_back(std::move(r));
    }
    {  // rowwise b_i(R) >= b_i(A)
        TheoremReport r = base_report("shift", inputs);
        r.verdict = Verdict::Holds;
        for (int i = 0; i <= std::max(BA.pd, BR.pd); ++i) {
            OptL lhs = betti_at(BA, i), rhs = betti_at(BR, i);
            if (!le(lhs, rhs)) {
                r.verdict = Verdict::Fails;
                r.witness = "i=" + std::to_string(i) + ": " + num(lhs) + " > " + num(rhs);
                r.left = lhs;
                r.right = rhs;
                break;
            }
        }
        if (r.verdict == Verdict::Holds) {
            r.left = betti_at(BA, 0).has_value() && !BA.b_star.empty() ? widen(BA.b_star[0]) : OptL{};
            r.right = !BR.b_star.empty() ? widen(BR.b_star[0]) : OptL{};
        }
        out.push_back(std::move(r));
    }
    if (regular_sequence_on(J, forms)) {
        long bump = static_cast<long>(s) * (c - 1);
        out.push_back(le_report("regular-sequence.a-lower", inputs, oadd(aA, -s), aR));
        out.push_back(le_report("regular-sequence.a-upper", inputs, aR, oadd(aA, bump)));
        out.push_back(le_report("regular-sequence.reg-lower", inputs, regA, regR));
        out.push_back(le_report("regular-sequence.reg-upper", inputs, regR,
                                omax(oadd(regA, 1), oadd(regA, bump))));
    } else {
        out.push_back(
            na_report("regular-sequence", inputs, "the center is not cut by a regular sequence"));
    }
    sort_reports(out);
    return out;
}

std::vector<TheoremReport> check_maximal_ideal_theorems(const IdealPresentation& J) {
    std::string inputs = ideal_digest(J);
    if (is_zero_ring(J)) return {na_report("maxideal", inputs, "quotient ring is zero")};
    const int n = J.nvars;
    PredictedPair pp = predict_auto(J, -(2 * n + 8), 4);
    BettiInvariants BA =
        betti_invariants(BettiTable::from_resolution(minimal_free_resolution(J), n));
    std::vector<TheoremReport> out = maxideal_core(pp.base, pp.pred, inputs, &BA);

    if (n >= 1 && n <= 3) {  // direct route: resolve the presentation itself
        GroebnerBasis gb = buchberger(J, TermOrder::grevlex());
        ReesPresentation P = rees_generators(gb.elements, n);
        CohomologyProfile direct =
            profile_auto(P.generators, pp.pred.profile.lo, pp.pred.profile.hi);
        TheoremReport r = base_report("vanish3.direct", inputs);
        r.verdict = Verdict::Holds;
        const int clo = std::max(direct.lo, pp.pred.profile.lo);
        const int chi = std::min(direct.hi, pp.pred.profile.hi);
        for (int i = 0; i <= 2 * n + 2 && r.verdict == Verdict::Holds; ++i) {
            OptL tp = widen(pp.pred.profile.a(i)), td = widen(direct.a(i));
            if (!eq(tp, td)) {
                r.verdict = Verdict::Fails;
                r.witness = "row " + std::to_string(i) + ": top " + num(tp) + " vs " + num(td);
                r.left = tp;
                r.right = td;
                break;
            }
            for (int a = clo; a <= chi; ++a) {
                auto dp = pp.pred.profile.dim_at(i, a);
                auto dd = direct.dim_at(i, a);
                if (!dp || !dd || *dp != *dd) {
                    r.verdict = Verdict::Fails;
                    r.witness = "row " + std::to_string(i) + " degree " + std::to_string(a) + ": " +
                                (dp ? std::to_string(*dp) : "?") + " vs " +
                                (dd ? std::to_string(*dd) : "?");
                    r.left = dp ? OptL(*dp) : OptL{};
                    r.right = dd ? OptL(*dd) : OptL{};
                    break;
                }
            }
        }
        if (r.verdict == Verdict::Holds) {
            r.left = widen(pp.pred.a_star);
            r.right = widen(pp.pred.reg);
            r.note = "predicted and direct rows agree on [" + std::to_string(clo) + "," +
                     std::to_string(chi) + "]";
        }
        out.push_back(std::move(r));
    }
    sort_reports(out);
    return out;
}

std::vector<TheoremReport> check_maximal_ideal_profile(const CohomologyProfile& A_profile,
                                                       const std::string& label) {
    ReesProfilePrediction pred = predict_rees_profile(A_profile);
    std::string inputs = label + " window=[" + std::to_string(A_profile.lo) + "," +
                         std::to_string(A_profile.hi) + "]";
    std::vector<TheoremReport> out = maxideal_core(A_profile, pred, inputs, nullptr);
    if (A_profile.asserted)
        for (TheoremReport& r : out) r.asserted_inputs = true;
    sort_reports(out);
    return out;
}

TheoremReport check_rs_corollary(const IdealPresentation& J, int s) {
    if (s < 0) throw Error("negative number of adjoined variables");
    std::string inputs = ideal_digest(J) + " s=" + std::to_string(s);
    if (J.nvars == 0 && s == 0) return na_report("rs-corollary", inputs, "embedding dimension 0");
    if (is_zero_ring(J)) return na_report("rs-corollary", inputs, "quotient ring is zero");
    const int n = J.nvars;
    CohomologyProfile PA = profile_auto(J, -(n + s) - 8, 4);
    ProfileInvariants IA = profile_invariants(PA);
    long regA = *IA.reg;
    int iw = -1;
    long aw = 0;
    for (const auto& [i, row] : PA.rows)
        if (row.top && *row.top + i == regA && i > iw) {
            iw = i;
            aw = *row.top;
        }
    long c = std::max(0L, aw + 2);
    long formula = (s < c) ? regA : regA + 1;
    CohomologyProfile PT = extension_shift(PA, s);
    ProfileInvariants IT = profile_invariants(PT);
    long regT = *IT.reg;
    long direct = regT + (low_reg_witness(PT, regT) ? 1 : 0);
    TheoremReport r = base_report("rs-corollary", inputs);
    r.left = OptL(direct);
    r.right = OptL(formula);
    r.note = "i=" + std::to_string(iw) + " a_i=" + std::to_string(aw) + " c=" + std::to_string(c) +
             " branch=" + (s < c ? "flat" : "jump") + " reg(extension)=" + std::to_string(regT);
    bool ok = (direct == formula) && (regT == regA);
    r.verdict = ok ? Verdict::Holds : Verdict::Fails;
    if (!ok)
        r.witness = "direct " + std::to_string(direct) + " vs formula " + std::to_string(formula) +
                    " (reg(A)=" + std::to_string(regA) + ", reg(ext)=" + std::to_string(regT) + ")";
    return r;
}

std::vector<TheoremReport> check_ini(const IdealPresentation& J, const TermOrder& order) {
    std::string inputs = ideal_digest(J) + " order=" + order.str();
    if (is_zero_ring(J)) return {na_report("ini3", inputs, "quotient ring is zero")};
    const int n = J.nvars;
    IdealPresentation Jin = initial_ideal(J, order);
    PredictedPair orig = predict_auto(J, -(2 * n + 8), 4);
    PredictedPair mono = predict_auto(Jin, -(2 * n + 8), 4);

    std::vector<TheoremReport> out;
    {
        TheoremReport r = base_report("ini3.rows", inputs);
        r.verdict = Verdict::Holds;
        for (int i = 0; i <= 2 * n + 2; ++i) {
            OptL a0 = widen(orig.pred.profile.a(i)), a1 = widen(mono.pred.profile.a(i));
            if (!le(a0, a1)) {
                r.verdict = Verdict::Fails;
                r.witness = "i=" + std::to_string(i) + ": " + num(a0) + " > " + num(a1);
                r.left = a0;
                r.right = a1;
                break;
            }
        }
        if (r.verdict == Verdict::Holds) {
            r.left = widen(orig.pred.a_star);
            r.right = widen(mono.pred.a_star);
        }
        out.push_back(std::move(r));
    }
    out.push_back(
        le_report("ini3.a-star", inputs, widen(orig.pred.a_star), widen(mono.pred.a_star)));
    out.push_back(le_report("ini3.reg", inputs, widen(orig.pred.reg), widen(mono.pred.reg)));
    sort_reports(out);
    return out;
}

bool borel_fixed(const IdealPresentation& I) {
    const int n = I.nvars;
    std::vector<Monomial> gens;
    for (const Polynomial& g : I.gens) {
        if (g.is_zero()) continue;
        if (g.terms().size() != 1) throw Error("borel check expects a monomial ideal");
        gens.push_back(g.lead_mono());
    }
    auto member = [&](const Monomial& m) {
        for (const Monomial& g : gens)
            if (g.divides(m)) return true;
        return false;
    };
    for (const Monomial& m : gens) {
        const std::vector<std::int32_t>& e = m.exponents();
        for (int j = 0; j < n; ++j) {
            if (e[j] == 0) continue;
            for (int i = 0; i < j; ++i) {
                std::vector<std::int32_t> e2(e.begin(), e.end());
                e2[j] -= 1;
                e2[i] += 1;
                if (!member(Monomial(std::move(e2)))) return false;
            }
        }
    }
    return true;
}

GinResult gin_randomized(const IdealPresentation& J, int trials, std::uint64_t seed) {
    if (J.field.kind == FieldKind::Prime && J.field.p < 32003)
        throw Error("field too small for generic coordinate changes");
    if (trials <= 0) throw Error("at least one trial required");
    GinResult res;
    res.trials = trials;
    res.seed = seed;
    const int n = J.nvars;
    if (n == 0 || J.gens.empty()) {
        res.gin = initial_ideal(J, TermOrder::grevlex());
        res.agreeing = trials;
        res.borel_fixed = true;
        res.stable = true;
        return res;
    }

    std::mt19937_64 gen(seed);
    std::map<std::string, std::pair<int, IdealPresentation>> seen;
    for (int t = 0; t < trials; ++t) {
        ScalarMatrix M(n, n, J.field);
        for (int guard = 0;; ++guard) {
            if (guard > 1000) throw Error("could not sample an invertible change of coordinates");
            for (int r = 0; r < n; ++r)
                for (int col = 0; col < n; ++col)
                    M.at(r, col) =
                        Scalar::from_int(J.field, static_cast<long>(gen() % 19) - 9);
            if (M.rank() == n) break;
            ++res.singular_resampled;
        }
        std::vector<Polynomial> images;
        for (int i = 0; i < n; ++i) {
            std::vector<PolyTerm> terms;
            for (int j = 0; j < n; ++j) {
                Scalar cij = M.at(i, j);
                if (!cij.is_zero()) terms.push_back({cij, Monomial::variable(n, j, 1)});
            }
            images.push_back(
                Polynomial::from_terms(n, J.field, TermOrder::grevlex(), std::move(terms)));
        }
        IdealPresentation JT = J;
        JT.order = TermOrder::grevlex();
        JT.gens.clear();
        for (const Polynomial& g : J.gens) JT.gens.push_back(g.substitute(images));
        IdealPresentation ini = initial_ideal(JT, TermOrder::grevlex());
        std::ostringstream key;
        for (const Polynomial& g : ini.gens) {
            for (int e : g.lead_mono().exponents()) key << e << ",";
            key << ";";
        }
        auto it = seen.find(key.str());
        if (it == seen.end())
            seen.emplace(key.str(), std::make_pair(1, ini));
        else
            it->second.first += 1;
    }

    const TermOrder ord = TermOrder::grevlex();
    auto before = [&](const IdealPresentation& X, const IdealPresentation& Y) {
        size_t nx = X.gens.size(), ny = Y.gens.size();
        for (size_t k = 0; k < std::min(nx, ny); ++k) {
            Ordering cmp =
                ord.compare(X.gens[nx - 1 - k].lead_mono(), Y.gens[ny - 1 - k].lead_mono());
            if (cmp == Ordering::LT) return true;
            if (cmp == Ordering::GT) return false;
        }
        return nx < ny;
    };
    const IdealPresentation* best = nullptr;
    int best_count = 0;
    for (const auto& [key, entry] : seen) {
        (void)key;
        if (!best || before(*best, entry.second)) {
            best = &entry.second;
            best_count = entry.first;
        }
    }
    res.gin = *best;
    res.agreeing = best_count;
    res.borel_fixed = borel_fixed(res.gin);
    res.stable = res.borel_fixed && res.agreeing * 10 >= trials * 9;
    return res;
}

std::vector<TheoremReport> check_gin(const IdealPresentation& J, int trials, std::uint64_t seed) {
    std::string inputs =
        ideal_digest(J) + " trials=" + std::to_string(trials) + " seed=" + std::to_string(seed);
    if (is_zero_ring(J)) {
        TheoremReport r = na_report("gin", inputs, "quotient ring is zero");
        r.probabilistic = true;
        return {r};
    }
    GinResult gr = gin_randomized(J, trials, seed);
    inputs += " agreeing=" + std::to_string(gr.agreeing) + "/" + std::to_string(gr.trials) +
              " borel=" + (gr.borel_fixed ? "yes" : "no");
    const int n = J.nvars;
    PredictedPair orig = predict_auto(J, -(2 * n + 8), 4);
    PredictedPair gpair = predict_auto(gr.gin, -(2 * n + 8), 4);
    ProfileInvariants IA = profile_invariants(orig.base);
    ProfileInvariants IGin = profile_invariants(gpair.base);
    OptL aA = widen(IA.a_star_total), regA = widen(IA.reg);
    OptL aGq = widen(IGin.a_star_total);
    OptL aRg = widen(gpair.pred.a_star), regRg = widen(gpair.pred.reg);

    std::vector<TheoremReport> out;
    {
        TheoremReport r = base_report("gin-a.star-transfer", inputs);
        r.left = aGq;
        r.right = aA;
        r.verdict = eq(aGq, aA) ? Verdict::Holds : Verdict::Fails;
        if (r.verdict == Verdict::Fails) r.witness = num(aGq) + " != " + num(aA);
        out.push_back(std::move(r));
    }
    {
        TheoremReport r = base_report("gin-a.bounds", inputs);
        r.left = aRg;
        r.right = aA;
        bool oklo = le(oadd(aA, -n), aRg), okhi = le(aRg, aA);
        r.verdict = (oklo && okhi) ? Verdict::Holds : Verdict::Fails;
        if (!oklo) r.witness = num(oadd(aA, -n)) + " > " + num(aRg);
        if (!okhi) r.witness = num(aRg) + " > " + num(aA);
        out.push_back(std::move(r));

        bool equal = eq(aRg, aA);
        bool cond = !(aA && *aA == -1);
        TheoremReport fwd = base_report("gin-a.iff.if", inputs);
        fwd.left = aRg;
        fwd.right = aA;
        fwd.verdict = (!cond || equal) ? Verdict::Holds : Verdict::Fails;
        if (fwd.verdict == Verdict::Fails)
            fwd.witness = "a*(A) != -1 yet " + num(aRg) + " != " + num(aA);
        out.push_back(std::move(fwd));
        TheoremReport bwd = base_report("gin-a.iff.only-if", inputs);
        bwd.left = aRg;
        bwd.right = aA;
        bwd.verdict = (!equal || cond) ? Verdict::Holds : Verdict::Fails;
        if (bwd.verdict == Verdict::Fails) bwd.witness = "equal at " + num(aA) + " with a*(A) = -1";
        out.push_back(std::move(bwd));
    }
    {
        TheoremReport r = base_report("gin-reg.bounds", inputs);
        r.left = regRg;
        r.right = regA;
        bool oklo = le(regA, regRg), okhi = le(regRg, oadd(regA, 1));
        r.verdict = (oklo && okhi) ? Verdict::Holds : Verdict::Fails;
        if (!oklo) r.witness = num(regA) + " > " + num(regRg);
        if (!okhi) r.witness = num(regRg) + " > " + num(oadd(regA, 1));
        out.push_back(std::move(r));

        bool cond = regA && low_reg_witness(orig.base, *regA);
        if (cond) {
            TheoremReport r2 = base_report("gin-reg.sufficient", inputs);
            r2.left = regRg;
            r2.right = oadd(regA, 1);
            bool equal = regRg && regA && *regRg == *regA + 1;
            r2.verdict = equal ? Verdict::Holds : Verdict::Fails;
            if (!equal) r2.witness = num(regRg) + " != " + num(oadd(regA, 1));
            out.push_back(std::move(r2));
        } else {
            TheoremReport r2 = na_report("gin-reg.sufficient", inputs, "equality condition not met");
            r2.left = regRg;
            r2.right = oadd(regA, 1);
            out.push_back(std::move(r2));
        }
    }
    {
        TheoremReport r = na_report("gin-exploration", inputs, "open comparison, recorded only");
        r.note = "a*(R)=" + num(widen(orig.pred.a_star)) + " a*(R_gin)=" + num(aRg) +
                 " reg(R)=" + num(widen(orig.pred.reg)) + " reg(R_gin)=" + num(regRg) +
                 (eq(widen(orig.pred.a_star), aRg) ? "; a-star agrees" : "; a-star differs") +
                 (eq(widen(orig.pred.reg), regRg) ? "; reg agrees" : "; reg differs");
        out.push_back(std::move(r));
    }
    for (TheoremReport& r : out) r.probabilistic = true;
    if (!gr.stable) {
        std::string why = "randomized initial ideal inconclusive (agreeing " +
                          std::to_string(gr.agreeing) + "/" + std::to_string(gr.trials) +
                          ", borel " + (gr.borel_fixed ? "yes" : "no") + ")";
        for (TheoremReport& r : out)
            if (r.verdict != Verdict::NotApplicable) {
                std::string was = std::string("was ") +
                                  (r.verdict == Verdict::Holds ? "holds" : "fails") +
                                  (r.witness.empty() ? "" : " (" + r.witness + ")");
                r.note = r.note.empty() ? was : r.note + "; " + was;
                r.verdict = Verdict::NotApplicable;
                r.reason = why;
                r.witness.clear();
            }
    }
    sort_reports(out);
    return out;
}

}  // namespace ca
