#include <cctype>
#include <limits>
#include <string>

#include "rexlab/error.hpp"
#include "rexlab/regex.hpp"

namespace rexlab {

namespace {

// Binding strength used by the minimal-parentheses printer.
int precedence(const Regex& r) {
    switch (r.kind()) {
    case RegexKind::Union:
        return 1;
    case RegexKind::Inter:
        return 2;
    case RegexKind::Concat:
        return 3;
    case RegexKind::Compl:
        return 4;
    case RegexKind::Star:
    case RegexKind::Count:
        return 5;
    default:
        return 6;
    }
}

void print_minimal(const Regex& r, std::string& out);

void print_child(const Regex& child, bool parens, std::string& out) {
    if (parens) {
        out.push_back('(');
    }
    print_minimal(child, out);
    if (parens) {
        out.push_back(')');
    }
}

void print_minimal(const Regex& r, std::string& out) {
    Regex cur = r;
    // Loop along right children so long concatenations do not recurse.
    while (true) {
        int p = precedence(cur);
        switch (cur.kind()) {
        case RegexKind::EmptySet:
            out.push_back('@');
            return;
        case RegexKind::Epsilon:
            out.push_back('e');
            return;
        case RegexKind::Symbol:
            out.push_back(static_cast<char>('0' + cur.bit()));
            return;
        case RegexKind::Union:
        case RegexKind::Inter:
        case RegexKind::Concat: {
            Regex l = cur.left();
            Regex rt = cur.right();
            print_child(l, precedence(l) <= p, out);
            if (cur.kind() == RegexKind::Union) {
                out.push_back('|');
            } else if (cur.kind() == RegexKind::Inter) {
                out.push_back('&');
            }
            if (precedence(rt) < p) {
                print_child(rt, true, out);
                return;
            }
            cur = rt;
            break;
        }
        case RegexKind::Compl: {
            out.push_back('!');
            Regex in = cur.inner();
            if (precedence(in) < p) {
                print_child(in, true, out);
                return;
            }
            cur = in;
            break;
        }
        case RegexKind::Star:
        case RegexKind::Count: {
            Regex in = cur.inner();
            print_child(in, precedence(in) < p, out);
            if (cur.kind() == RegexKind::Star) {
                out.push_back('*');
            } else {
                out += '{' + std::to_string(cur.reps()) + '}';
            }
            return;
        }
        }
    }
}

void print_full(const Regex& r, std::string& out) {
    switch (r.kind()) {
    case RegexKind::EmptySet:
        out.push_back('@');
        return;
    case RegexKind::Epsilon:
        out.push_back('e');
        return;
    case RegexKind::Symbol:
        out.push_back(static_cast<char>('0' + r.bit()));
        return;
    case RegexKind::Union:
    case RegexKind::Inter:
    case RegexKind::Concat: {
        std::size_t closers = 0;
        Regex cur = r;
        while (cur.kind() == RegexKind::Union || cur.kind() == RegexKind::Inter ||
               cur.kind() == RegexKind::Concat) {
            out.push_back('(');
            print_full(cur.left(), out);
            if (cur.kind() == RegexKind::Union) {
                out.push_back('|');
            } else if (cur.kind() == RegexKind::Inter) {
                out.push_back('&');
            }
            ++closers;
            cur = cur.right();
        }
        print_full(cur, out);
        out.append(closers, ')');
        return;
    }
    case RegexKind::Compl:
        out += "(!";
        print_full(r.inner(), out);
        out.push_back(')');
        return;
    case RegexKind::Star:
        out.push_back('(');
        print_full(r.inner(), out);
        out += "*)";
        return;
    case RegexKind::Count:
        out.push_back('(');
        print_full(r.inner(), out);
        out += '{' + std::to_string(r.reps()) + "})";
        return;
    }
}

// Grammar, loosest first:
//   union   := inter ('|' union)?
//   inter   := concat ('&' inter)?
//   concat  := unary unary*
//   unary   := '!' unary | postfix
//   postfix := atom ('*' | '{' digits '}')*
//   atom    := '0' | '1' | 'e' | '@' | '(' union ')'
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Regex parse_all() {
        Regex r = parse_union();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("regex syntax error at position " + std::to_string(pos_) + ": " + msg, pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool at_atom_start() {
        skip_ws();
        if (pos_ >= text_.size()) {
            return false;
        }
        char c = text_[pos_];
        return c == '0' || c == '1' || c == 'e' || c == '@' || c == '(' || c == '!';
    }

    Regex parse_union() {
        std::vector<Regex> branches{parse_inter()};
        while (peek('|')) {
            ++pos_;
            branches.push_back(parse_inter());
        }
        return union_all(branches);
    }

    Regex parse_inter() {
        std::vector<Regex> parts{parse_concat()};
        while (peek('&')) {
            ++pos_;
            parts.push_back(parse_concat());
        }
        Regex acc = parts.back();
        for (std::size_t i = parts.size() - 1; i-- > 0;) {
            acc = Regex::inter(parts[i], acc);
        }
        return acc;
    }

    Regex parse_concat() {
        if (!at_atom_start()) {
            fail(pos_ < text_.size() ? "expected an expression before '" + std::string(1, text_[pos_]) + "'"
                                     : "unexpected end of input");
        }
        std::vector<Regex> factors;
        while (at_atom_start()) {
            factors.push_back(parse_unary());
        }
        return concat_all(factors);
    }

    Regex parse_unary() {
        skip_ws();
        std::size_t bangs = 0;
        while (peek('!')) {
            ++pos_;
            ++bangs;
        }
        Regex r = parse_postfix();
        for (std::size_t i = 0; i < bangs; ++i) {
            r = Regex::complement(r);
        }
        return r;
    }

    Regex parse_postfix() {
        Regex r = parse_atom();
        while (true) {
            if (peek('*')) {
                ++pos_;
                r = Regex::star(r);
            } else if (peek('{')) {
                ++pos_;
                r = Regex::count(r, parse_reps());
            } else {
                return r;
            }
        }
    }

    std::uint64_t parse_reps() {
        skip_ws();
        std::size_t start = pos_;
        std::uint64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
                pos_ = start;
                fail("repetition count overflows 64 bits");
            }
            value = value * 10 + digit;
            ++pos_;
        }
        if (pos_ == start) {
            fail("expected a repetition count");
        }
        if (!peek('}')) {
            fail("expected '}'");
        }
        ++pos_;
        return value;
    }

    Regex parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        char c = text_[pos_];
        switch (c) {
        case '0':
        case '1':
            ++pos_;
            return Regex::symbol(static_cast<Bit>(c - '0'));
        case 'e':
            ++pos_;
            return Regex::epsilon();
        case '@':
            ++pos_;
            return Regex::empty_set();
        case '(': {
            ++pos_;
            Regex r = parse_union();
            if (!peek(')')) {
                fail("expected ')'");
            }
            ++pos_;
            return r;
        }
        default:
            fail("unexpected '" + std::string(1, c) + "'");
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

std::string print(const Regex& r, PrintStyle style) {
    std::string out;
    if (style == PrintStyle::Minimal) {
        print_minimal(r, out);
    } else {
        print_full(r, out);
    }
    return out;
}

Regex parse(std::string_view text) {
    return Parser(text).parse_all();
}

} // namespace rexlab
