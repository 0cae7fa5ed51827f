#ifndef CA_ORDER_HPP
#define CA_ORDER_HPP

#include <memory>
#include <string>
#include <vector>

#include "ca/monomial.hpp"

namespace ca {

enum class Ordering { LT, EQ, GT };

// Global monomial order. Four kinds:
//   grevlex  - compare total degree, then the last nonzero exponent
//              difference (under the priority permutation) negative wins;
//   lex      - first nonzero exponent difference positive wins;
//   elim(k)  - total degree of the first k priority variables, then grevlex
//              on everything (gives the elimination property for that block);
//   weighted - weight vector dot product, then grevlex.
// `priority` lists variable indices from highest to lowest; empty means the
// identity (x1 > x2 > ...). All comparisons happen in priority coordinates.
class TermOrder {
public:
    enum class Kind { GrevLex, Lex, Elim, Weighted };

    static TermOrder grevlex() { return TermOrder(Kind::GrevLex); }
    static TermOrder lex() { return TermOrder(Kind::Lex); }
    static TermOrder elim(int first_block) {
        TermOrder t(Kind::Elim);
        t.elim_block_ = first_block;
        return t;
    }
    static TermOrder weighted(std::vector<int> w) {
        TermOrder t(Kind::Weighted);
        t.weights_ = std::move(w);
        return t;
    }

    TermOrder with_priority(std::vector<int> perm) const {
        TermOrder t(*this);
        t.priority_ = std::move(perm);
        return t;
    }

    Ordering compare(const Monomial& u, const Monomial& v) const;

    Kind kind() const { return kind_; }
    int elim_block() const { return elim_block_; }
    const std::vector<int>& weights() const { return weights_; }
    const std::vector<int>& priority() const { return priority_; }
    bool graded() const { return kind_ == Kind::GrevLex; }

    bool operator==(const TermOrder&) const = default;
    std::string str() const;

private:
    explicit TermOrder(Kind k) : kind_(k) {}

    Kind kind_;
    int elim_block_ = 0;
    std::vector<int> weights_;
    std::vector<int> priority_;
};

// Order on terms of a free module, i.e. on pairs (monomial, position).
// Schemes: term-over-position, position-over-term (lower position wins),
// the Schreyer order induced by the lead terms of a previous generating
// set, and a two-block order whose first block dominates (used for kernel
// elimination).
class ModuleOrder {
public:
    static ModuleOrder top(TermOrder base);
    static ModuleOrder pot(TermOrder base);
    // gen_leads[i] = lead term of generator i in the parent module; ties on
    // equal images break toward the smaller index.
    static ModuleOrder schreyer(std::shared_ptr<const ModuleOrder> parent,
                                std::vector<std::pair<Monomial, int>> gen_leads,
                                TermOrder base);
    // Positions < split use `top_part`, positions >= split use `bottom_part`,
    // and any term in the top block exceeds any term in the bottom block.
    static ModuleOrder block(int split, ModuleOrder top_part, ModuleOrder bottom_part);

    Ordering compare(const Monomial& m1, int pos1, const Monomial& m2, int pos2) const;
    const TermOrder& base() const { return base_; }

private:
    enum class Scheme { TOP, POT, Schreyer, Block };

    ModuleOrder(Scheme s, TermOrder base) : scheme_(s), base_(std::move(base)) {}

    Scheme scheme_;
    TermOrder base_ = TermOrder::grevlex();
    std::shared_ptr<const ModuleOrder> parent_;
    std::vector<std::pair<Monomial, int>> gen_leads_;
    int split_ = 0;
    std::shared_ptr<const ModuleOrder> top_part_, bottom_part_;
};

}  // namespace ca

#endif
