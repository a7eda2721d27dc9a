#include "rexlab/reductions.hpp"

#include <algorithm>

#include "rexlab/error.hpp"

namespace rexlab {

std::size_t Dnf::size() const {
    std::size_t total = 0;
    for (const auto& t : terms) {
        total += t.size();
    }
    return total;
}

void Dnf::validate() const {
    for (std::size_t j = 0; j < terms.size(); ++j) {
        std::vector<bool> used(n + 1, false);
        for (const Literal& lit : terms[j]) {
            if (lit.var < 1 || lit.var > n) {
                throw DomainError("term " + std::to_string(j + 1) + " uses variable " +
                                  std::to_string(lit.var) + " outside [1, " + std::to_string(n) + "]");
            }
            if (used[lit.var]) {
                throw DomainError("term " + std::to_string(j + 1) + " repeats variable " +
                                  std::to_string(lit.var));
            }
            used[lit.var] = true;
        }
    }
}

bool eval_dnf(const Dnf& phi, const Word& x) {
    if (x.size() != phi.n) {
        throw DomainError("assignment has length " + std::to_string(x.size()) + ", expected " +
                          std::to_string(phi.n));
    }
    return std::any_of(phi.terms.begin(), phi.terms.end(), [&x](const Term& t) {
        return std::all_of(t.begin(), t.end(), [&x](const Literal& lit) {
            return (x[lit.var - 1] == 1) == lit.positive;
        });
    });
}

Regex dnf_to_re(const Dnf& phi) {
    phi.validate();
    std::vector<Regex> branches;
    branches.reserve(phi.terms.size());
    for (const Term& term : phi.terms) {
        std::vector<Regex> factors(phi.n, any_symbol());
        for (const Literal& lit : term) {
            factors[lit.var - 1] = Regex::symbol(lit.positive ? 1 : 0);
        }
        branches.push_back(concat_all(factors));
    }
    return union_all(branches);
}

struct Formula::Node {
    FormulaKind kind;
    std::size_t index = 0;
    std::vector<Formula> kids;
};

Formula Formula::var(std::size_t index) {
    if (index == 0) {
        throw DomainError("variables are 1-based");
    }
    return Formula(std::make_shared<const Node>(Node{FormulaKind::Var, index, {}}));
}

Formula Formula::negate(Formula f) {
    return Formula(std::make_shared<const Node>(Node{FormulaKind::Not, 0, {std::move(f)}}));
}

Formula Formula::conj(Formula a, Formula b) {
    return Formula(std::make_shared<const Node>(Node{FormulaKind::And, 0, {std::move(a), std::move(b)}}));
}

Formula Formula::disj(Formula a, Formula b) {
    return Formula(std::make_shared<const Node>(Node{FormulaKind::Or, 0, {std::move(a), std::move(b)}}));
}

FormulaKind Formula::kind() const noexcept { return node_->kind; }

std::size_t Formula::index() const {
    if (node_->kind != FormulaKind::Var) {
        throw DomainError("index() on a non-variable formula");
    }
    return node_->index;
}

const Formula& Formula::operand() const {
    if (node_->kind != FormulaKind::Not) {
        throw DomainError("operand() on a non-negation formula");
    }
    return node_->kids[0];
}

const Formula& Formula::left() const {
    if (node_->kids.size() != 2) {
        throw DomainError("left() on a non-binary formula");
    }
    return node_->kids[0];
}

const Formula& Formula::right() const {
    if (node_->kids.size() != 2) {
        throw DomainError("right() on a non-binary formula");
    }
    return node_->kids[1];
}

std::size_t Formula::size() const {
    std::size_t total = 1;
    for (const auto& k : node_->kids) {
        total += k.size();
    }
    return total;
}

std::size_t Formula::max_var() const {
    std::size_t m = node_->kind == FormulaKind::Var ? node_->index : 0;
    for (const auto& k : node_->kids) {
        m = std::max(m, k.max_var());
    }
    return m;
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) {
        return true;
    }
    if (a.node_->kind != b.node_->kind || a.node_->index != b.node_->index ||
        a.node_->kids.size() != b.node_->kids.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.node_->kids.size(); ++i) {
        if (!(a.node_->kids[i] == b.node_->kids[i])) {
            return false;
        }
    }
    return true;
}

void BooleanFormula::validate() const {
    if (root.max_var() > n) {
        throw DomainError("formula uses x" + std::to_string(root.max_var()) + " but n = " + std::to_string(n));
    }
}

namespace {

bool eval_node(const Formula& f, const Word& x) {
    switch (f.kind()) {
    case FormulaKind::Var:
        return x[f.index() - 1] == 1;
    case FormulaKind::Not:
        return !eval_node(f.operand(), x);
    case FormulaKind::And:
        return eval_node(f.left(), x) && eval_node(f.right(), x);
    case FormulaKind::Or:
        return eval_node(f.left(), x) || eval_node(f.right(), x);
    }
    return false;
}

Formula nnf_node(const Formula& f, bool negated) {
    switch (f.kind()) {
    case FormulaKind::Var:
        return negated ? Formula::negate(f) : f;
    case FormulaKind::Not:
        return nnf_node(f.operand(), !negated);
    case FormulaKind::And:
    case FormulaKind::Or: {
        Formula l = nnf_node(f.left(), negated);
        Formula r = nnf_node(f.right(), negated);
        bool as_and = (f.kind() == FormulaKind::And) != negated;
        return as_and ? Formula::conj(std::move(l), std::move(r)) : Formula::disj(std::move(l), std::move(r));
    }
    }
    return f;
}

Regex literal_gadget(std::size_t i, std::size_t n, bool positive, bool counting) {
    std::vector<Regex> factors;
    append_power(factors, any_symbol(), i - 1, counting);
    factors.push_back(Regex::symbol(positive ? 1 : 0));
    append_power(factors, any_symbol(), n - i, counting);
    return concat_all(factors);
}

Regex compile_nnf(const Formula& f, std::size_t n, FormulaTarget target, bool counting) {
    switch (f.kind()) {
    case FormulaKind::Var:
        return literal_gadget(f.index(), n, true, counting);
    case FormulaKind::Not:
        // NNF guarantees the operand is a variable.
        return literal_gadget(f.operand().index(), n, false, counting);
    case FormulaKind::Or:
        return Regex::alt(compile_nnf(f.left(), n, target, counting), compile_nnf(f.right(), n, target, counting));
    case FormulaKind::And: {
        Regex l = compile_nnf(f.left(), n, target, counting);
        Regex r = compile_nnf(f.right(), n, target, counting);
        if (target == FormulaTarget::Inter) {
            return Regex::inter(std::move(l), std::move(r));
        }
        return Regex::complement(Regex::alt(Regex::complement(std::move(l)), Regex::complement(std::move(r))));
    }
    }
    return Regex::empty_set();
}

} // namespace

bool eval_formula(const BooleanFormula& phi, const Word& x) {
    if (x.size() != phi.n) {
        throw DomainError("assignment has length " + std::to_string(x.size()) + ", expected " +
                          std::to_string(phi.n));
    }
    phi.validate();
    return eval_node(phi.root, x);
}

bool is_nnf(const Formula& f) {
    switch (f.kind()) {
    case FormulaKind::Var:
        return true;
    case FormulaKind::Not:
        return f.operand().kind() == FormulaKind::Var;
    case FormulaKind::And:
    case FormulaKind::Or:
        return is_nnf(f.left()) && is_nnf(f.right());
    }
    return false;
}

BooleanFormula nnf(const BooleanFormula& phi) {
    return {phi.n, nnf_node(phi.root, false)};
}

Regex formula_to_re(const BooleanFormula& phi, FormulaTarget target, bool counting_allowed) {
    phi.validate();
    return compile_nnf(nnf(phi).root, phi.n, target, counting_allowed);
}

Word pad_input(const Word& x, std::size_t target_len) {
    if (target_len < x.size()) {
        throw DomainError("cannot pad a word of length " + std::to_string(x.size()) + " to " +
                          std::to_string(target_len));
    }
    Word out = x;
    out.append(Word::zeros(target_len - x.size()));
    return out;
}

Regex pad_regex(const Regex& r, std::size_t pad) {
    if (pad == 0) {
        return r;
    }
    return Regex::concat(r, literal_word(Word::zeros(pad)));
}

} // namespace rexlab
