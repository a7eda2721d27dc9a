#include <algorithm>
#include <cctype>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "rexlab/error.hpp"
#include "rexlab/reductions.hpp"

namespace rexlab {

namespace {

[[noreturn]] void dnf_fail(std::size_t line, const std::string& msg) {
    throw ParseError("dnf line " + std::to_string(line) + ": " + msg, line);
}

std::size_t parse_count(const std::string& token, std::size_t line) {
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        dnf_fail(line, "expected a non-negative integer, got '" + token + "'");
    }
    try {
        return std::stoul(token);
    } catch (const std::exception&) {
        dnf_fail(line, "number out of range '" + token + "'");
    }
}

} // namespace

void write_dnf(std::ostream& out, const Dnf& phi) {
    out << "dnf " << phi.n << ' ' << phi.terms.size() << '\n';
    for (const Term& t : phi.terms) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            out << (i ? " " : "") << (t[i].positive ? '+' : '-') << t[i].var;
        }
        out << '\n';
    }
}

Dnf parse_dnf(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    Dnf phi;
    std::size_t expected = 0;
    bool header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        std::istringstream tokens(line);
        if (!header) {
            std::string key;
            if (!(tokens >> key)) {
                continue;
            }
            std::string n_tok;
            std::string m_tok;
            if (key != "dnf" || !(tokens >> n_tok >> m_tok)) {
                dnf_fail(line_no, "expected header 'dnf <n> <m>'");
            }
            phi.n = parse_count(n_tok, line_no);
            expected = parse_count(m_tok, line_no);
            header = true;
            continue;
        }
        if (phi.terms.size() == expected) {
            if (line.find_first_not_of(" \t") != std::string::npos) {
                dnf_fail(line_no, "more terms than declared");
            }
            continue;
        }
        Term term;
        std::string tok;
        while (tokens >> tok) {
            if (tok.size() < 2 || (tok[0] != '+' && tok[0] != '-')) {
                dnf_fail(line_no, "literal '" + tok + "' must be a signed index such as +3 or -1");
            }
            std::size_t var = parse_count(tok.substr(1), line_no);
            if (var < 1 || var > phi.n) {
                dnf_fail(line_no, "variable " + tok + " outside [1, " + std::to_string(phi.n) + "]");
            }
            for (const Literal& lit : term) {
                if (lit.var == var) {
                    dnf_fail(line_no, "variable " + std::to_string(var) + " repeated in a term");
                }
            }
            term.push_back({var, tok[0] == '+'});
        }
        phi.terms.push_back(std::move(term));
    }
    if (!header) {
        dnf_fail(line_no + 1, "missing header 'dnf <n> <m>'");
    }
    // Trailing empty terms may be missing when the file ends early.
    if (phi.terms.size() != expected) {
        dnf_fail(line_no + 1, "declared " + std::to_string(expected) + " terms, found " +
                                  std::to_string(phi.terms.size()));
    }
    return phi;
}

std::string print_formula(const Formula& f) {
    switch (f.kind()) {
    case FormulaKind::Var:
        return "(var " + std::to_string(f.index()) + ")";
    case FormulaKind::Not:
        return "(not " + print_formula(f.operand()) + ")";
    case FormulaKind::And:
        return "(and " + print_formula(f.left()) + " " + print_formula(f.right()) + ")";
    case FormulaKind::Or:
        return "(or " + print_formula(f.left()) + " " + print_formula(f.right()) + ")";
    }
    return {};
}

void write_formula(std::ostream& out, const BooleanFormula& phi) {
    out << "formula " << phi.n << '\n' << print_formula(phi.root) << '\n';
}

namespace {

class SexprParser {
public:
    explicit SexprParser(std::string_view text, std::size_t offset) : text_(text), pos_(offset) {}

    Formula parse_all() {
        Formula f = parse();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("trailing input");
        }
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("formula syntax error at offset " + std::to_string(pos_) + ": " + msg, pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    std::string word() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected an operator or number");
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    Formula parse() {
        expect('(');
        std::string op = word();
        Formula out = Formula::var(1);
        if (op == "var") {
            std::string num = word();
            if (!std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                fail("variable index must be a positive integer");
            }
            std::size_t idx = 0;
            try {
                idx = std::stoul(num);
            } catch (const std::exception&) {
                fail("variable index out of range");
            }
            if (idx == 0) {
                fail("variables are 1-based");
            }
            out = Formula::var(idx);
        } else if (op == "not") {
            out = Formula::negate(parse());
        } else if (op == "and" || op == "or") {
            Formula l = parse();
            Formula r = parse();
            out = op == "and" ? Formula::conj(std::move(l), std::move(r)) : Formula::disj(std::move(l), std::move(r));
        } else {
            fail("unknown operator '" + op + "'");
        }
        expect(')');
        return out;
    }

    std::string_view text_;
    std::size_t pos_;
};

} // namespace

BooleanFormula parse_formula(std::string_view text) {
    std::size_t start = text.find_first_not_of(" \t\r\n");
    if (start == std::string_view::npos) {
        throw ParseError("empty formula", 0);
    }
    std::optional<std::size_t> declared;
    std::size_t body = start;
    if (text.substr(start, 7) == "formula") {
        std::size_t eol = text.find('\n', start);
        std::istringstream header{std::string(text.substr(start, eol == std::string_view::npos ? std::string_view::npos : eol - start))};
        std::string key;
        std::string n_tok;
        std::string extra;
        if (!(header >> key >> n_tok) || (header >> extra) ||
            !std::all_of(n_tok.begin(), n_tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            throw ParseError("expected header 'formula <n>'", start);
        }
        declared = std::stoul(n_tok);
        body = eol == std::string_view::npos ? text.size() : eol + 1;
    }
    Formula root = SexprParser(text, body).parse_all();
    BooleanFormula phi{declared.value_or(root.max_var()), root};
    phi.validate();
    return phi;
}

} // namespace rexlab
