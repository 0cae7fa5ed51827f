#include "ca/order.hpp"

namespace ca {

namespace {

// Exponent of u at priority slot k (0 = highest priority variable).
inline std::int32_t at(const Monomial& u, const std::vector<int>& prio, int k) {
    return prio.empty() ? u.exponent(k) : u.exponent(prio[k]);
}

Ordering grevlex_cmp(const Monomial& u, const Monomial& v, const std::vector<int>& prio) {
    if (u.degree() != v.degree()) return u.degree() > v.degree() ? Ordering::GT : Ordering::LT;
    for (int k = u.nvars() - 1; k >= 0; --k) {
        std::int32_t d = at(u, prio, k) - at(v, prio, k);
        if (d != 0) return d < 0 ? Ordering::GT : Ordering::LT;
    }
    return Ordering::EQ;
}

}  // namespace

Ordering TermOrder::compare(const Monomial& u, const Monomial& v) const {
    if (u.nvars() != v.nvars()) throw Error("order: ambient mismatch");
    if (!priority_.empty() && static_cast<int>(priority_.size()) != u.nvars())
        throw Error("order: priority permutation size mismatch");
    switch (kind_) {
        case Kind::Lex: {
            for (int k = 0; k < u.nvars(); ++k) {
                std::int32_t d = at(u, priority_, k) - at(v, priority_, k);
                if (d != 0) return d > 0 ? Ordering::GT : Ordering::LT;
            }
            return Ordering::EQ;
        }
        case Kind::GrevLex:
            return grevlex_cmp(u, v, priority_);
        case Kind::Elim: {
            int du = 0, dv = 0;
            for (int k = 0; k < elim_block_; ++k) {
                du += at(u, priority_, k);
                dv += at(v, priority_, k);
            }
            if (du != dv) return du > dv ? Ordering::GT : Ordering::LT;
            return grevlex_cmp(u, v, priority_);
        }
        case Kind::Weighted: {
            if (static_cast<int>(weights_.size()) != u.nvars())
                throw Error("order: weight vector size mismatch");
            long wu = 0, wv = 0;
            for (int k = 0; k < u.nvars(); ++k) {
                wu += static_cast<long>(weights_[k]) * at(u, priority_, k);
                wv += static_cast<long>(weights_[k]) * at(v, priority_, k);
            }
            if (wu != wv) return wu > wv ? Ordering::GT : Ordering::LT;
            return grevlex_cmp(u, v, priority_);
        }
    }
    throw Error("unreachable");
}

std::string TermOrder::str() const {
    switch (kind_) {
        case Kind::GrevLex: return "revlex";
        case Kind::Lex: return "lex";
        case Kind::Elim: return "elim:" + std::to_string(elim_block_);
        case Kind::Weighted: {
            std::string s = "weighted:";
            for (size_t i = 0; i < weights_.size(); ++i)
                s += (i ? "," : "") + std::to_string(weights_[i]);
            return s;
        }
    }
    return "?";
}

ModuleOrder ModuleOrder::top(TermOrder base) { return ModuleOrder(Scheme::TOP, std::move(base)); }

ModuleOrder ModuleOrder::pot(TermOrder base) { return ModuleOrder(Scheme::POT, std::move(base)); }

ModuleOrder ModuleOrder::schreyer(std::shared_ptr<const ModuleOrder> parent,
                                  std::vector<std::pair<Monomial, int>> gen_leads,
                                  TermOrder base) {
    ModuleOrder m(Scheme::Schreyer, std::move(base));
    m.parent_ = std::move(parent);
    m.gen_leads_ = std::move(gen_leads);
    return m;
}

ModuleOrder ModuleOrder::block(int split, ModuleOrder top_part, ModuleOrder bottom_part) {
    ModuleOrder m(Scheme::Block, top_part.base());
    m.split_ = split;
    m.top_part_ = std::make_shared<const ModuleOrder>(std::move(top_part));
    m.bottom_part_ = std::make_shared<const ModuleOrder>(std::move(bottom_part));
    return m;
}

Ordering ModuleOrder::compare(const Monomial& m1, int pos1, const Monomial& m2, int pos2) const {
    switch (scheme_) {
        case Scheme::TOP: {
            Ordering c = base_.compare(m1, m2);
            if (c != Ordering::EQ) return c;
            if (pos1 != pos2) return pos1 < pos2 ? Ordering::GT : Ordering::LT;
            return Ordering::EQ;
        }
        case Scheme::POT: {
            if (pos1 != pos2) return pos1 < pos2 ? Ordering::GT : Ordering::LT;
            return base_.compare(m1, m2);
        }
        case Scheme::Schreyer: {
            const auto& [u1, p1] = gen_leads_.at(pos1);
            const auto& [u2, p2] = gen_leads_.at(pos2);
            Ordering c = parent_->compare(m1 * u1, p1, m2 * u2, p2);
            if (c != Ordering::EQ) return c;
            if (pos1 != pos2) return pos1 < pos2 ? Ordering::GT : Ordering::LT;
            return Ordering::EQ;
        }
        case Scheme::Block: {
            bool t1 = pos1 < split_, t2 = pos2 < split_;
            if (t1 != t2) return t1 ? Ordering::GT : Ordering::LT;
            if (t1) return top_part_->compare(m1, pos1, m2, pos2);
            return bottom_part_->compare(m1, pos1 - split_, m2, pos2 - split_);
        }
    }
    throw Error("unreachable");
}

}  // namespace ca
