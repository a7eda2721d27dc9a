#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rexlab/automata.hpp"
#include "rexlab/error.hpp"
#include "rexlab/gadget.hpp"
#include "rexlab/harness.hpp"
#include "rexlab/local_prg.hpp"
#include "rexlab/match.hpp"
#include "rexlab/reductions.hpp"
#include "rexlab/regex.hpp"

namespace rexlab {

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) {
        throw Error("cannot write '" + path + "'");
    }
}

Word parse_word_arg(const std::string& s) {
    return s == "e" ? Word() : Word::parse(s);
}

std::string show_word(const Word& w) {
    return w.empty() ? "e" : w.to_string();
}

Dfa as_dfa(const Automaton& a, std::size_t cap) {
    if (const Dfa* d = std::get_if<Dfa>(&a)) {
        return *d;
    }
    return determinize(std::get<Nfa>(a), cap);
}

template <class A>
std::string render(const A& a) {
    std::ostringstream ss;
    write_automaton(ss, a);
    return ss.str();
}

struct GadgetOpts {
    std::size_t n = 16;
    std::size_t k = 3;
    std::size_t N = 64;
    std::string gamma = "1/5";
    std::string variant = "starred";
    std::string pred;  // empty: default predicate

    void attach(CLI::App* sub) {
        sub->add_option("--n", n, "Seed length (power of two)")->capture_default_str();
        sub->add_option("--k", k, "Locality")->capture_default_str();
        sub->add_option("--N", N, "Example length")->capture_default_str();
        sub->add_option("--gamma", gamma, "Advantage gamma in (0, 1/2)")->capture_default_str();
        sub->add_option("--variant", variant, "starred | star_free | counting")->capture_default_str();
        sub->add_option("--pred", pred, "Predicate truth table, 2^k bits (default u1 xor (u2 and u3))");
    }

    GadgetConfig config(std::uint64_t seed) const {
        GadgetConfig cfg;
        cfg.n = n;
        cfg.k = k;
        cfg.N = N;
        cfg.gamma = parse_rational(gamma);
        cfg.variant = parse_variant(variant);
        if (pred.empty()) {
            cfg.predicate = default_predicate(k);
        } else {
            cfg.predicate = parse_predicate("pred " + std::to_string(k) + " " + pred);
        }
        cfg.prng_seed = seed;
        cfg.validate();
        return cfg;
    }
};

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Regular-expression toolkit: matching, automata, reductions and hardness gadgets", "rexlab"};
    app.require_subcommand(1);
    int status = 0;
    std::string output;

    // parse
    std::string re_a;
    std::string re_b;
    bool full = false;
    auto* cmd_parse = app.add_subcommand("parse", "Parse an expression and print it back");
    cmd_parse->add_option("re", re_a, "Expression")->required();
    cmd_parse->add_flag("--full", full, "Parenthesise every operator");
    cmd_parse->callback([&] {
        out << print(parse(re_a), full ? PrintStyle::FullyParenthesized : PrintStyle::Minimal) << '\n';
    });

    // match
    std::string word;
    auto* cmd_match = app.add_subcommand("match", "Test membership of a word ('e' is the empty word)");
    cmd_match->add_option("re", re_a, "Expression")->required();
    cmd_match->add_option("word", word, "Word over {0,1}")->required();
    cmd_match->callback([&] {
        bool ok = matches(parse(re_a), parse_word_arg(word));
        out << (ok ? "true" : "false") << '\n';
        status = ok ? 0 : 1;
    });

    // size
    bool counting = false;
    auto* cmd_size = app.add_subcommand("size", "Print the size of an expression");
    cmd_size->add_option("re", re_a, "Expression")->required();
    cmd_size->add_flag("--counting", counting, "Charge r{k} as |r| + ceil(log2 k)");
    cmd_size->callback([&] {
        SizeReport rep = size_report(parse(re_a), counting);
        out << rep.size << '\n';
        if (rep.zero_count_nodes > 0) {
            err << "warning: " << rep.zero_count_nodes << " r{0} node(s) counted as size 0\n";
        }
    });

    // compile-dnf / compile-formula
    std::string in_path;
    std::string in_path_b;
    auto* cmd_dnf = app.add_subcommand("compile-dnf", "Compile a DNF file to an expression");
    cmd_dnf->add_option("file", in_path, "DNF file ('-' for stdin)")->required();
    cmd_dnf->add_option("-o,--output", output, "Output file");
    cmd_dnf->callback([&] { write_output(output, print(dnf_to_re(parse_dnf(read_input(in_path)))) + "\n", out); });

    std::string target = "inter";
    auto* cmd_formula = app.add_subcommand("compile-formula", "Compile a Boolean formula file to an expression");
    cmd_formula->add_option("file", in_path, "Formula file ('-' for stdin)")->required();
    cmd_formula->add_option("--target", target, "inter | neg")->required()->check(CLI::IsMember({"inter", "neg"}));
    cmd_formula->add_flag("--counting", counting, "Keep padding powers as counters");
    cmd_formula->add_option("-o,--output", output, "Output file");
    cmd_formula->callback([&] {
        BooleanFormula phi = parse_formula(read_input(in_path));
        Regex r = formula_to_re(phi, target == "inter" ? FormulaTarget::Inter : FormulaTarget::Neg, counting);
        write_output(output, print(r) + "\n", out);
    });

    // automata
    std::size_t cap = kDefaultSubsetCap;
    auto* cmd_re2nfa = app.add_subcommand("re2nfa", "Thompson NFA of a plain expression");
    cmd_re2nfa->add_option("re", re_a, "Expression")->required();
    cmd_re2nfa->add_option("-o,--output", output, "Output file");
    cmd_re2nfa->callback([&] { write_output(output, render(thompson(parse(re_a))), out); });

    auto* cmd_nfa2dfa = app.add_subcommand("nfa2dfa", "Subset construction");
    cmd_nfa2dfa->add_option("file", in_path, "Automaton file ('-' for stdin)")->required();
    cmd_nfa2dfa->add_option("--cap", cap, "Maximum number of DFA states")->capture_default_str();
    cmd_nfa2dfa->add_option("-o,--output", output, "Output file");
    cmd_nfa2dfa->callback([&] { write_output(output, render(as_dfa(parse_automaton(read_input(in_path)), cap)), out); });

    auto* cmd_dfa2re = app.add_subcommand("dfa2re", "State elimination to an expression");
    cmd_dfa2re->add_option("file", in_path, "Automaton file ('-' for stdin)")->required();
    cmd_dfa2re->add_option("-o,--output", output, "Output file");
    cmd_dfa2re->callback([&] {
        write_output(output, print(dfa_to_re(as_dfa(parse_automaton(read_input(in_path)), cap))) + "\n", out);
    });

    auto* cmd_min = app.add_subcommand("min", "Minimise a DFA");
    cmd_min->add_option("file", in_path, "Automaton file ('-' for stdin)")->required();
    cmd_min->add_option("-o,--output", output, "Output file");
    cmd_min->callback([&] { write_output(output, render(minimize(as_dfa(parse_automaton(read_input(in_path)), cap))), out); });

    auto* cmd_compl = app.add_subcommand("complement", "Complement a DFA");
    cmd_compl->add_option("file", in_path, "Automaton file ('-' for stdin)")->required();
    cmd_compl->add_option("-o,--output", output, "Output file");
    cmd_compl->callback([&] {
        write_output(output, render(complement_dfa(as_dfa(parse_automaton(read_input(in_path)), cap))), out);
    });

    std::string op = "and";
    auto* cmd_product = app.add_subcommand("product", "Product of two DFAs");
    cmd_product->add_option("left", in_path, "Automaton file")->required();
    cmd_product->add_option("right", in_path_b, "Automaton file")->required();
    cmd_product->add_option("--op", op, "and | or")->check(CLI::IsMember({"and", "or"}))->capture_default_str();
    cmd_product->add_option("-o,--output", output, "Output file");
    cmd_product->callback([&] {
        Dfa a = as_dfa(parse_automaton(read_input(in_path)), cap);
        Dfa b = as_dfa(parse_automaton(read_input(in_path_b)), cap);
        write_output(output, render(product(a, b, op == "and" ? ProductOp::And : ProductOp::Or)), out);
    });

    // equiv
    std::size_t max_len = 8;
    auto* cmd_equiv = app.add_subcommand("equiv", "Compare two expressions on all words up to a length");
    cmd_equiv->add_option("left", re_a, "Expression")->required();
    cmd_equiv->add_option("right", re_b, "Expression")->required();
    cmd_equiv->add_option("--maxlen", max_len, "Longest word compared")->capture_default_str();
    cmd_equiv->callback([&] {
        Equivalence eq = equivalent_upto(parse(re_a), parse(re_b), max_len, max_len);
        if (eq) {
            out << "equivalent\n";
        } else {
            out << "not equivalent\ncounterexample=" << show_word(*eq.counterexample) << '\n';
            status = 1;
        }
    });

    // generators
    std::uint64_t seed = 0;
    std::size_t n = 8;
    std::size_t m = 16;
    std::size_t k = 3;
    auto* cmd_hg = app.add_subcommand("gen-hypergraph", "Sample an (n, m, k) hypergraph");
    cmd_hg->add_option("--n", n, "Vertices")->capture_default_str();
    cmd_hg->add_option("--m", m, "Edges")->capture_default_str();
    cmd_hg->add_option("--k", k, "Edge size")->capture_default_str();
    cmd_hg->add_option("--seed", seed, "Random seed")->required();
    cmd_hg->add_option("-o,--output", output, "Output file");
    cmd_hg->callback([&] {
        Rng rng = derive_rng(seed, 0);
        std::ostringstream ss;
        write_hypergraph(ss, sample_hypergraph(n, m, k, rng));
        write_output(output, ss.str(), out);
    });

    GadgetOpts gopts;
    std::string mode = "pseudorandom";
    std::size_t challenge_m = 400;
    auto* cmd_ch = app.add_subcommand("gen-challenge", "Sample a distinguishing challenge");
    gopts.attach(cmd_ch);
    cmd_ch->add_option("--m", challenge_m, "Number of (edge, label) pairs")->capture_default_str();
    cmd_ch->add_option("--mode", mode, "random | pseudorandom")
        ->check(CLI::IsMember({"random", "pseudorandom"}))
        ->capture_default_str();
    cmd_ch->add_option("--seed", seed, "Random seed")->required();
    cmd_ch->add_option("-o,--output", output, "Output file");
    cmd_ch->callback([&] {
        GadgetConfig cfg = gopts.config(seed);
        Rng rng = derive_rng(seed, 0);
        std::ostringstream ss;
        write_challenge(ss, make_challenge(cfg, challenge_m, parse_mode(mode), rng));
        write_output(output, ss.str(), out);
    });

    std::string hidden;
    auto* cmd_gadget = app.add_subcommand("gen-gadget", "Build the target expression R = R_x | R_dup");
    gopts.attach(cmd_gadget);
    cmd_gadget->add_option("--seed", seed, "Random seed for the hidden string")->required();
    cmd_gadget->add_option("--x", hidden, "Explicit hidden string of n bits");
    cmd_gadget->add_option("-o,--output", output, "Output file");
    cmd_gadget->callback([&] {
        GadgetConfig cfg = gopts.config(seed);
        Seed x = hidden.empty() ? gadget_seed(cfg) : Word::parse(hidden);
        GadgetSize sz = gadget_size(x, cfg);
        std::ostringstream ss;
        ss << format_config(cfg) << '\n'
           << "x " << x.to_string() << '\n'
           << "size measured=" << sz.measured << " closed_form=" << sz.closed_form << '\n'
           << print(build_target(x, cfg)) << '\n';
        write_output(output, ss.str(), out);
    });

    std::size_t count = 100;
    auto* cmd_ex = app.add_subcommand("gen-examples", "Simulate labelled examples from a challenge");
    gopts.attach(cmd_ex);
    cmd_ex->add_option("--challenge", in_path, "Challenge file ('-' for stdin)")->required();
    cmd_ex->add_option("--count", count, "Number of examples")->capture_default_str();
    cmd_ex->add_option("--seed", seed, "Random seed")->required();
    cmd_ex->add_option("-o,--output", output, "Output file");
    cmd_ex->callback([&] {
        Challenge ch = parse_challenge(read_input(in_path));
        gopts.n = ch.n;
        gopts.k = ch.k;
        GadgetConfig cfg = gopts.config(seed);
        Rng rng = derive_rng(seed, 0);
        std::ostringstream ss;
        write_examples(ss, simulate_oracle(cfg, ch, count, rng));
        write_output(output, ss.str(), out);
    });

    std::string learner = "oracle";
    std::size_t trials = 100;
    std::size_t p_train = 200;
    std::size_t v_size = 200;
    auto* cmd_dist = app.add_subcommand("distinguish", "Estimate a learner's distinguishing advantage");
    gopts.attach(cmd_dist);
    cmd_dist->add_option("--learner", learner, "oracle | const0 | const1 | majority")
        ->check(CLI::IsMember({"oracle", "const0", "const1", "majority"}))
        ->capture_default_str();
    cmd_dist->add_option("--trials", trials, "Trials per mode")->capture_default_str();
    cmd_dist->add_option("--p-train", p_train, "Training examples per trial")->capture_default_str();
    cmd_dist->add_option("--v-size", v_size, "Validation examples per trial")->capture_default_str();
    cmd_dist->add_option("--seed", seed, "Master seed")->required();
    cmd_dist->add_option("-o,--output", output, "Output file");
    cmd_dist->callback([&] {
        GadgetConfig cfg = gopts.config(seed);
        for (const auto& w : cfg.warnings()) {
            err << "warning: " << w << '\n';
        }
        AdvantageReport rep =
            advantage_estimate(cfg, learner_by_name(learner), learner, trials, p_train, v_size, seed);
        std::ostringstream ss;
        write_report(ss, cfg, rep);
        write_output(output, ss.str(), out);
    });

    if (!args.empty() && !args[0].empty() && args[0][0] != '-') {
        try {
            app.get_subcommand(args[0]);
        } catch (const CLI::OptionNotFound&) {
            err << "rexlab: error: unknown command '" << args[0] << "'\n";
            return 2;
        }
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        err << "rexlab: error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "rexlab: error: " << e.what() << '\n';
        return 2;
    }
    return status;
}

} // namespace rexlab
