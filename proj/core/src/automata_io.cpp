#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include "rexlab/automata.hpp"
#include "rexlab/error.hpp"

namespace rexlab {

namespace {

void write_list(std::ostream& out, const char* key, const std::vector<State>& states) {
    out << key;
    for (State s : states) {
        out << ' ' << s;
    }
    out << '\n';
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw ParseError("automaton line " + std::to_string(line) + ": " + msg, line);
}

State parse_state(const std::string& token, std::size_t line, std::size_t count) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(token, &used);
    } catch (const std::exception&) {
        fail(line, "invalid state '" + token + "'");
    }
    if (used != token.size() || token.front() == '-' || token.front() == '+') {
        fail(line, "invalid state '" + token + "'");
    }
    if (v >= count) {
        fail(line, "state " + token + " out of range");
    }
    return static_cast<State>(v);
}

} // namespace

void write_automaton(std::ostream& out, const Nfa& a) {
    out << "nfa " << a.state_count << '\n';
    write_list(out, "init", a.initials);
    write_list(out, "final", a.finals);
    for (State s = 0; s < a.state_count; ++s) {
        for (Bit b = 0; b < 2; ++b) {
            if (!a.transitions[s][b].empty()) {
                out << "t " << s << ' ' << static_cast<int>(b);
                for (State t : a.transitions[s][b]) {
                    out << ' ' << t;
                }
                out << '\n';
            }
        }
    }
}

void write_automaton(std::ostream& out, const Dfa& d) {
    out << "dfa " << d.state_count << '\n';
    out << "init " << d.initial << '\n';
    std::vector<State> finals;
    for (State s = 0; s < d.state_count; ++s) {
        if (d.finals[s]) {
            finals.push_back(s);
        }
    }
    write_list(out, "final", finals);
    for (State s = 0; s < d.state_count; ++s) {
        for (Bit b = 0; b < 2; ++b) {
            out << "t " << s << ' ' << static_cast<int>(b) << ' ' << d.transitions[s][b] << '\n';
        }
    }
}

Automaton read_automaton(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<bool> is_dfa;
    std::size_t count = 0;
    Nfa nfa;
    bool seen_init = false;
    bool seen_final = false;
    std::vector<std::array<bool, 2>> dfa_seen;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string key;
        if (!(tokens >> key) || key.front() == '#') {
            continue;
        }
        if (!is_dfa) {
            if (key != "dfa" && key != "nfa") {
                fail(line_no, "expected header 'dfa <n>' or 'nfa <n>', got '" + key + "'");
            }
            std::string n_token;
            if (!(tokens >> n_token)) {
                fail(line_no, "missing state count");
            }
            count = parse_state(n_token, line_no, std::numeric_limits<State>::max());
            is_dfa = key == "dfa";
            nfa = Nfa(count);
            dfa_seen.assign(count, {false, false});
            continue;
        }
        std::vector<State> states;
        if (key == "init" || key == "final") {
            std::string tok;
            while (tokens >> tok) {
                states.push_back(parse_state(tok, line_no, count));
            }
            if (key == "init") {
                if (seen_init) {
                    fail(line_no, "duplicate init line");
                }
                seen_init = true;
                nfa.initials = states;
            } else {
                if (seen_final) {
                    fail(line_no, "duplicate final line");
                }
                seen_final = true;
                nfa.finals = states;
            }
        } else if (key == "t") {
            std::string from_tok;
            std::string bit_tok;
            if (!(tokens >> from_tok >> bit_tok)) {
                fail(line_no, "transition needs '<from> <0|1> <to...>'");
            }
            State from = parse_state(from_tok, line_no, count);
            if (bit_tok != "0" && bit_tok != "1") {
                fail(line_no, "invalid symbol '" + bit_tok + "'");
            }
            Bit b = static_cast<Bit>(bit_tok[0] - '0');
            std::string tok;
            while (tokens >> tok) {
                nfa.transitions[from][b].push_back(parse_state(tok, line_no, count));
            }
            if (*is_dfa) {
                if (nfa.transitions[from][b].size() != 1 || dfa_seen[from][b]) {
                    fail(line_no, "a DFA needs exactly one successor per state and symbol");
                }
                dfa_seen[from][b] = true;
            }
        } else {
            fail(line_no, "unknown directive '" + key + "'");
        }
    }
    if (!is_dfa) {
        fail(line_no + 1, "empty automaton description");
    }
    if (!seen_init) {
        fail(line_no + 1, "missing init line");
    }
    if (!seen_final) {
        fail(line_no + 1, "missing final line");
    }
    if (!*is_dfa) {
        nfa.normalize();
        return nfa;
    }
    if (nfa.initials.size() != 1) {
        fail(line_no + 1, "a DFA needs exactly one initial state");
    }
    Dfa dfa(count);
    dfa.initial = nfa.initials.front();
    for (State s = 0; s < count; ++s) {
        for (Bit b = 0; b < 2; ++b) {
            if (!dfa_seen[s][b]) {
                fail(line_no + 1, "missing DFA transition for state " + std::to_string(s) + " on " +
                                      std::to_string(static_cast<int>(b)));
            }
            dfa.transitions[s][b] = nfa.transitions[s][b].front();
        }
    }
    for (State f : nfa.finals) {
        dfa.finals[f] = true;
    }
    return dfa;
}

Automaton parse_automaton(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_automaton(in);
}

} // namespace rexlab
