#include "lawrence/braid.hpp"
#include "lawrence/curves.hpp"
#include "lawrence/gates.hpp"
#include "lawrence/io.hpp"
#include "lawrence/laurent.hpp"
#include "lawrence/pairing.hpp"
#include "lawrence/pl.hpp"
#include "lawrence/random.hpp"
#include "lawrence/rep.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

using namespace lawrence;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kInvariant = 3;

unsigned env_threads() {
    if (const char* s = std::getenv("LAWRENCE_THREADS")) {
        int v = std::atoi(s);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 0;
}

// t -> -t, printed with s standing for -t
LaurentPoly negate_t(const LaurentPoly& p) {
    std::vector<Term> ts = p.terms();
    for (auto& tm : ts)
        if (tm.dt % 2 != 0) tm.c = -tm.c;
    return LaurentPoly::from_terms(std::move(ts));
}

std::string poly_text(const LaurentPoly& p, bool neg_t) {
    if (!neg_t) return p.to_string();
    std::string s = negate_t(p).to_string();
    for (char& c : s)
        if (c == 't') c = 's';
    return s;
}

void print_table(const std::vector<std::string>& cells, int d, const std::string& title) {
    std::size_t w = 1;
    for (const auto& c : cells) w = std::max(w, c.size());
    std::cout << title << '\n';
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            const std::string& s = cells[static_cast<std::size_t>(r * d + c)];
            std::cout << (c ? "  " : "") << s << std::string(w - s.size(), ' ');
        }
        std::cout << '\n';
    }
}

// Greedy one-letter deletion while the failure persists.
BraidWord shrink(BraidWord w, const std::function<bool(const BraidWord&)>& fails) {
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t k = 0; k < w.letters.size(); ++k) {
            std::vector<int> ls = w.letters;
            ls.erase(ls.begin() + static_cast<long>(k));
            BraidWord c(w.n, ls);
            if (fails(c)) {
                w = c;
                progress = true;
                break;
            }
        }
    }
    return w;
}

struct Args {
    int n = 3;
    int m = 1;
    std::string word;
    int i = 0;
    int j = 0;
    std::string family = "burau";
    std::string out = "json";
    std::string q0 = "2";
    std::string t0 = "3";
    std::string nm;
    std::string suite;
    std::string task;
    std::uint64_t seed = 1;
    int count = 100;
    int len = 10;
    int reps = 10;
    bool pretty = false;
    bool neg_t = false;
    bool data = false;
    std::string backend = "combinatorial";
};

int cmd_braid(const Args& a, const std::string& action) {
    BraidWord w = parse_word(a.word, a.n);
    json out{{"word", to_json(w)}, {"writhe", w.writhe()}};
    if (action == "reduce") {
        out["free_reduced"] = to_json(free_reduce(w));
        HandleResult h = handle_reduce(w);
        out["handle_reduced"] = to_json(h.witness);
        out["handle_steps"] = h.steps;
    } else if (action == "perm") {
        out["permutation"] = permutation(w).images;
    } else if (action == "crossings") {
        if (a.i < 1 || a.j < 1) throw std::invalid_argument("crossings needs --i and --j");
        out["crossing_number"] = crossing_number(w, a.i, a.j);
        out["i"] = a.i;
        out["j"] = a.j;
    } else if (action == "rho") {
        int bn = 0, bm = 0;
        char comma = 0;
        std::istringstream is(a.nm);
        if (!(is >> bn >> comma >> bm) || comma != ',') throw std::invalid_argument("--nm expects n,m");
        if (bn + bm != w.n) throw std::invalid_argument("--nm must add up to the strand count");
        if (!in_Bnm(w, bn, bm)) {
            out["in_Bnm"] = false;
        } else {
            RhoExponents r = rho_exponents(w, bn, bm);
            out["in_Bnm"] = true;
            out["rho"] = {{"a", r.a}, {"b", r.b}};
            out["rho_text"] = make_monomial(1, r.a, r.b).to_string();
        }
    } else if (!action.empty()) {
        throw std::invalid_argument("unknown braid action " + action);
    }
    std::cout << out.dump() << '\n';
    return kOk;
}

int cmd_rep(const Args& a) {
    BraidWord w = parse_word(a.word, a.n);
    Family f = parse_family(a.family);
    RepMatrix m = evaluate(w, f);
    if (a.out == "csv") {
        BigRational q0, t0;
        try {
            q0 = BigRational(a.q0);
            t0 = BigRational(a.t0);
        } catch (const std::exception&) {
            throw std::invalid_argument("--q0/--t0 must be rationals like 2 or -3/5");
        }
        std::cout << to_csv(m, q0, t0);
        return kOk;
    }
    if (a.out != "json") throw std::invalid_argument("--out must be json or csv");
    if (a.pretty) {
        std::vector<std::string> cells;
        for (const auto& e : m.a) cells.push_back(poly_text(e, a.neg_t));
        print_table(cells, m.d, family_name(f) + " n=" + std::to_string(m.n));
        return kOk;
    }
    json out = to_json(m);
    if (auto s = is_scalar(m)) out["scalar"] = poly_text(*s, a.neg_t);
    std::cout << out.dump() << '\n';
    return kOk;
}

IntersectionData data_for(const Args& a, const BraidWord& w, int i, int j) {
    if (a.backend == "pl") return pl::intersection_data(w, i, j);
    if (a.backend != "combinatorial") throw std::invalid_argument("--backend must be combinatorial or pl");
    return intersection_data(DiskModel(w.n), w, i, j);
}

int cmd_pair(const Args& a) {
    BraidWord w = parse_word(a.word, a.n);
    if (a.m < 1) throw std::invalid_argument("--m must be at least 1");
    if ((a.i == 0) != (a.j == 0)) throw std::invalid_argument("give both --i and --j, or neither");
    if (a.i != 0) {
        if (a.i < 1 || a.i > a.n - 1 || a.j < 1 || a.j > a.n - 1) throw std::invalid_argument("--i/--j out of range");
        IntersectionData d = data_for(a, w, a.i, a.j);
        LaurentPoly v = pair_cabled(d, a.m);
        if (a.pretty) {
            std::cout << poly_text(v, a.neg_t) << '\n';
            return kOk;
        }
        json out{{"n", a.n}, {"m", a.m}, {"i", a.i}, {"j", a.j}, {"entry", to_json(v)}, {"text", poly_text(v, a.neg_t)}};
        if (a.data) out["data"] = to_json(d);
        std::cout << out.dump() << '\n';
        return kOk;
    }
    PairingMatrix p = pairing_matrix(w, a.n, a.m, env_threads());
    if (a.pretty) {
        std::vector<std::string> cells;
        for (const auto& e : p.entries) cells.push_back(poly_text(e, a.neg_t));
        print_table(cells, p.dim(), "pairing n=" + std::to_string(p.n) + " m=" + std::to_string(p.m));
        return kOk;
    }
    std::cout << to_json(p).dump() << '\n';
    return kOk;
}

int cmd_trivial(const Args& a) {
    BraidWord w = parse_word(a.word, a.n);
    bool lk = trivial(w);
    json out{{"word", to_json(w)}, {"lk", lk}, {"trivial", lk}};
    try {
        HandleResult h = handle_reduce(w);
        out["handle"] = h.trivial;
        out["handle_steps"] = h.steps;
        if (h.trivial != lk) {
            out["error"] = "verdicts disagree";
            std::cout << out.dump() << '\n';
            return kInvariant;
        }
    } catch (const BudgetExhausted&) {
        out["handle"] = nullptr;
        out["budget_exhausted"] = true;
    }
    std::cout << out.dump() << '\n';
    return kOk;
}

struct Case {
    BraidWord word;
    std::function<std::optional<std::string>(const BraidWord&)> check;  // message on violation
};

Case make_case(const std::string& suite, Rng& rng) {
    if (suite == "relations") {
        int n = draw(rng, 2, 5);
        BraidWord w = random_word(rng, n, draw(rng, 0, 10));
        std::vector<int> rel = random_relator(rng, n);
        int pos = draw(rng, 0, static_cast<int>(w.size()));
        auto check = [rel, pos](const BraidWord& v) -> std::optional<std::string> {
            std::vector<int> ls = v.letters;
            int p = std::min(pos, static_cast<int>(ls.size()));
            ls.insert(ls.begin() + p, rel.begin(), rel.end());
            BraidWord u(v.n, ls);
            DiskModel model(v.n);
            for (int i = 1; i < v.n; ++i) {
                if (!(apply_word(model, standard_fork(model, i), v) == apply_word(model, standard_fork(model, i), u)))
                    return "fork image changed by a relator";
                if (!(apply_word(model, standard_noodle(model, i), v) == apply_word(model, standard_noodle(model, i), u)))
                    return "noodle image changed by a relator";
            }
            if (!(evaluate(v, Family::burau) == evaluate(u, Family::burau))) return "burau matrix changed by a relator";
            if (!(evaluate(v, Family::lk) == evaluate(u, Family::lk))) return "lk matrix changed by a relator";
            if (handle_reduce(v).trivial != handle_reduce(u).trivial) return "handle verdict changed by a relator";
            return std::nullopt;
        };
        return {w, check};
    }
    if (suite == "lemma-coef") {
        int n = draw(rng, 2, 4);
        BraidWord w = random_word(rng, n, draw(rng, 0, 10));
        return {w, [](const BraidWord& v) -> std::optional<std::string> {
                    DiskModel model(v.n);
                    for (int i = 1; i < v.n; ++i)
                        for (int j = 1; j < v.n; ++j)
                            if (!sign_parity_holds(intersection_data(model, v, i, j)))
                                return "sign differs from parity of b_ii at fork " + std::to_string(i) + ", noodle " +
                                       std::to_string(j);
                    return std::nullopt;
                }};
    }
    if (suite == "burau-agree" || suite == "lk-agree") {
        int m = suite == "burau-agree" ? 1 : 2;
        int n = draw(rng, 2, 4);
        BraidWord w = random_word(rng, n, draw(rng, 0, 10));
        return {w, [m](const BraidWord& v) -> std::optional<std::string> {
                    if (!matrix_gate(v, m, 1)) return "pairing matrix differs from the predicted matrix";
                    return std::nullopt;
                }};
    }
    if (suite == "engines-agree") {
        int n = draw(rng, 2, 4);
        BraidWord w = random_word(rng, n, draw(rng, 0, 8));
        return {w, [](const BraidWord& v) -> std::optional<std::string> {
                    DiskModel model(v.n);
                    for (int i = 1; i < v.n; ++i)
                        for (int j = 1; j < v.n; ++j) {
                            try {
                                if (!(pl::intersection_data(v, i, j) == intersection_data(model, v, i, j)))
                                    return "backends disagree at fork " + std::to_string(i) + ", noodle " + std::to_string(j);
                            } catch (const pl::Uncertified& e) {
                                return std::string(e.what());
                            }
                        }
                    return std::nullopt;
                }};
    }
    if (suite == "wordproblem") {
        int n = draw(rng, 2, 5);
        int len = draw(rng, 0, 16);
        BraidWord w = rng() % 2 ? random_trivial_word(rng, n, len) : random_word(rng, n, len);
        return {w, [](const BraidWord& v) -> std::optional<std::string> {
                    if (trivial(v) != handle_reduce(v).trivial) return "lk and handle reduction disagree";
                    return std::nullopt;
                }};
    }
    throw std::invalid_argument("unknown suite " + suite);
}

int cmd_fuzz(const Args& a) {
    if (a.count < 0) throw std::invalid_argument("--count must be non-negative");
    Rng rng(a.seed);
    make_case(a.suite, rng);  // validates the suite name before any work
    rng.seed(a.seed);
    for (int k = 0; k < a.count; ++k) {
        Case c = make_case(a.suite, rng);
        auto msg = c.check(c.word);
        if (msg) {
            BraidWord small = shrink(c.word, [&](const BraidWord& v) { return c.check(v).has_value(); });
            json out{{"suite", a.suite}, {"seed", a.seed}, {"ok", false}, {"index", k},
                     {"word", to_json(c.word)}, {"reproducer", to_json(small)}, {"detail", *msg}};
            std::cout << out.dump() << '\n';
            return kInvariant;
        }
    }
    std::cout << json{{"suite", a.suite}, {"seed", a.seed}, {"count", a.count}, {"ok", true}}.dump() << '\n';
    return kOk;
}

int cmd_bench(const Args& a) {
    if (a.reps < 1 || a.len < 0) throw std::invalid_argument("--reps must be positive and --len non-negative");
    if (a.n < 2) throw std::invalid_argument("--n must be at least 2");
    Rng rng(a.seed);
    std::vector<BraidWord> words;
    for (int r = 0; r < a.reps; ++r) words.push_back(random_word(rng, a.n, a.len));
    std::size_t checksum = 0;
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& w : words) {
        if (a.task == "lk-product") {
            checksum += evaluate(w, Family::lk).a.front().size();
        } else if (a.task == "pairing") {
            checksum += pairing_matrix(w, a.n, a.m, env_threads()).entries.front().size();
        } else {
            throw std::invalid_argument("--task must be lk-product or pairing");
        }
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << json{{"task", a.task}, {"n", a.n}, {"len", a.len}, {"reps", a.reps}, {"checksum", checksum},
                      {"seconds", sec}, {"seconds_per_rep", sec / a.reps}}
                     .dump()
              << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lawrence representations of braid groups and the noodle-fork pairing"};
    app.require_subcommand(1);
    app.fallthrough();
    Args a;
    std::string braid_action;
    bool pretty = false;
    app.add_flag("--pretty", pretty, "human-readable tables instead of JSON");

    auto word_opts = [&](CLI::App* s) {
        s->add_option("--n", a.n, "number of strands")->required();
        s->add_option("--word", a.word, "generator indices, e.g. \"1 -2 1\"")->required();
    };

    auto* braid = app.add_subcommand("braid", "inspect a braid word");
    word_opts(braid);
    braid->add_option("action", braid_action, "reduce | perm | crossings | rho");
    braid->add_option("--i", a.i, "first strand (crossings)");
    braid->add_option("--j", a.j, "second strand (crossings)");
    braid->add_option("--nm", a.nm, "block sizes n,m (rho)");

    auto* rep = app.add_subcommand("rep", "evaluate a representation");
    word_opts(rep);
    rep->add_option("--family", a.family, "burau | lk");
    rep->add_option("--out", a.out, "json | csv");
    rep->add_option("--q0", a.q0, "rational value of q for csv");
    rep->add_option("--t0", a.t0, "rational value of t for csv");
    rep->add_flag("--neg-t", a.neg_t, "print in s = -t");

    auto* pair = app.add_subcommand("pair", "noodle-fork pairing");
    word_opts(pair);
    pair->add_option("--m", a.m, "cable multiplicity");
    pair->add_option("--i", a.i, "fork index");
    pair->add_option("--j", a.j, "noodle index");
    pair->add_option("--backend", a.backend, "combinatorial | pl (single entry only)");
    pair->add_flag("--data", a.data, "include intersection data");
    pair->add_flag("--neg-t", a.neg_t, "print in s = -t");

    auto* triv = app.add_subcommand("trivial", "decide whether a word is trivial");
    word_opts(triv);

    auto* fuzz = app.add_subcommand("fuzz", "seeded property suites");
    fuzz->add_option("--suite", a.suite, "relations | lemma-coef | burau-agree | lk-agree | engines-agree | wordproblem")
        ->required();
    fuzz->add_option("--seed", a.seed, "mt19937_64 seed");
    fuzz->add_option("--count", a.count, "number of cases");

    auto* bench = app.add_subcommand("bench", "timing");
    bench->add_option("--task", a.task, "lk-product | pairing")->required();
    bench->add_option("--n", a.n, "strands");
    bench->add_option("--m", a.m, "multiplicity for pairing");
    bench->add_option("--len", a.len, "word length");
    bench->add_option("--reps", a.reps, "repetitions");
    bench->add_option("--seed", a.seed, "mt19937_64 seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }
    a.pretty = pretty;

    try {
        if (*braid) return cmd_braid(a, braid_action);
        if (*rep) return cmd_rep(a);
        if (*pair) return cmd_pair(a);
        if (*triv) return cmd_trivial(a);
        if (*fuzz) return cmd_fuzz(a);
        if (*bench) return cmd_bench(a);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const pl::Uncertified& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInvariant;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInvariant;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInvariant;
    }
    return kUsage;
}
