#include "catent/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "catent/entropy.hpp"
#include "catent/errors.hpp"
#include "catent/kgroup.hpp"
#include "catent/lls.hpp"
#include "catent/sl2z.hpp"
#include "catent/words.hpp"

namespace catent::cli {

namespace {

using json = nlohmann::ordered_json;

std::string sig12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

// Floats in JSON are rounded to 12 significant digits.
double round12(double x) {
    return std::stod(sig12(x));
}

// Arbitrary-precision integers go out as JSON numbers when they fit in
// 64 bits and as decimal strings beyond that.
json big_to_json(const Int& n) {
    if (fits_int64(n)) return n.convert_to<long long>();
    return n.str();
}

json mat_to_json(const Mat2Z& m) {
    return json::array({big_to_json(m.a()), big_to_json(m.b()), big_to_json(m.c()),
                        big_to_json(m.d())});
}

json ints_to_json(const std::vector<Int>& values) {
    json arr = json::array();
    for (const Int& v : values) arr.push_back(big_to_json(v));
    return arr;
}

KClass parse_kclass(std::string_view text) {
    std::size_t comma = text.find(',');
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos)
        throw ParseError("class must be 'rank,degree'");
    auto parse_piece = [&](std::string_view piece, std::size_t pos) {
        std::size_t lo = piece.find_first_not_of(" \t");
        if (lo == std::string_view::npos) throw ParseError("empty class entry", pos + 1);
        std::size_t hi = piece.find_last_not_of(" \t");
        piece = piece.substr(lo, hi - lo + 1);
        for (std::size_t i = 0; i < piece.size(); ++i) {
            if (i == 0 && (piece[i] == '+' || piece[i] == '-') && piece.size() > 1) continue;
            if (!std::isdigit(static_cast<unsigned char>(piece[i])))
                throw ParseError("bad integer '" + std::string(piece) + "' in class", pos + 1);
        }
        return int_from_decimal(piece);
    };
    return {parse_piece(text.substr(0, comma), 0), parse_piece(text.substr(comma + 1), comma + 1)};
}

json entropy_json(const EntropyValue& e, const Mat2Z& m) {
    json j;
    j["kind"] = "entropy";
    if (e.is_zero()) {
        j["zero"] = true;
        j["trace"] = big_to_json(e.radius().trace());
        j["float"] = 0.0;
    } else {
        j["trace"] = big_to_json(e.radius().trace());
        j["discriminant"] = big_to_json(e.radius().discriminant());
        j["float"] = round12(e.value());
    }
    j["matrix"] = mat_to_json(m);
    return j;
}

void print_entropy_text(std::ostream& out, const EntropyValue& e, const Mat2Z& m) {
    out << "matrix: " << m.str() << "\n";
    out << "trace: " << e.radius().trace() << "\n";
    if (e.is_zero()) {
        out << "entropy: 0 (exact; |trace| <= 2)\n";
    } else {
        out << "entropy: " << sig12(e.value()) << " = log((" << boost::multiprecision::abs(e.radius().trace())
            << " + sqrt(" << e.radius().discriminant() << "))/2)\n";
    }
}

struct Options {
    std::string word;
    std::string matrix;
    std::string m_sequence;
    std::string a_text;
    std::string b_text;
    std::string v_text = "2,-9";
    std::string w_text = "2,9";
    std::string genus = "0";
    std::string deg = "0";
    std::string shift = "0";
    bool automorphism = false;
    long long steps = 60;
    int bound = 12;
    bool json_output = false;
};

Int parse_int_flag(const std::string& text, const char* flag) {
    std::string_view piece = text;
    bool ok = !piece.empty();
    for (std::size_t i = 0; ok && i < piece.size(); ++i) {
        if (i == 0 && (piece[i] == '+' || piece[i] == '-') && piece.size() > 1) continue;
        if (!std::isdigit(static_cast<unsigned char>(piece[i]))) ok = false;
    }
    if (!ok) throw ParseError(std::string("bad integer '") + text + "' for " + flag);
    return int_from_decimal(text);
}

Mat2Z matrix_from_options(const Options& opt, bool word_set, bool matrix_set) {
    if (word_set == matrix_set)
        throw ParseError("exactly one of --word or --matrix is required");
    return word_set ? evaluate(parse_word(opt.word)) : Mat2Z::parse(opt.matrix);
}

int run_eval(const Options& opt, std::ostream& out) {
    Word w = parse_word(opt.word);
    Mat2Z m = evaluate(w);
    if (opt.json_output) {
        json j;
        j["kind"] = "eval";
        j["word"] = print_word(w);
        j["matrix"] = mat_to_json(m);
        out << j.dump() << "\n";
    } else {
        out << m.str() << "\n";
    }
    return 0;
}

int run_entropy(const Options& opt, bool word_set, bool matrix_set, std::ostream& out) {
    Mat2Z m = matrix_from_options(opt, word_set, matrix_set);
    EntropyValue e = entropy_of_matrix(m);
    if (opt.json_output)
        out << entropy_json(e, m).dump() << "\n";
    else
        print_entropy_text(out, e, m);
    return 0;
}

int run_lls(const Options& opt, std::ostream& out) {
    Mat2Z m = Mat2Z::parse(opt.matrix);
    LLSPeriod period = lls_period(m);
    if (opt.json_output) {
        json j;
        j["kind"] = "lls";
        j["period"] = ints_to_json(period.canonical());
        j["matrix"] = mat_to_json(m);
        if (m.trace() > 2) {
            Reduction red = reduce_hyperbolic(m);
            j["reduced"] = mat_to_json(red.reduced);
            j["conjugator"] = mat_to_json(red.conjugator);
        }
        out << j.dump() << "\n";
    } else {
        out << period.str() << "\n";
        if (m.trace() > 2) {
            Reduction red = reduce_hyperbolic(m);
            out << "reduced: " << red.reduced.str() << "\n";
            out << "conjugator: " << red.conjugator.str() << "\n";
        }
    }
    return 0;
}

int run_conjugate(const Options& opt, std::ostream& out) {
    Mat2Z a = Mat2Z::parse(opt.a_text);
    Mat2Z b = Mat2Z::parse(opt.b_text);
    bool verdict = is_conjugate(a, b);
    std::optional<Mat2Z> witness;
    if (verdict) witness = brute_force_conjugate(a, b, opt.bound);
    if (opt.json_output) {
        json j;
        j["kind"] = "conjugate";
        j["conjugate"] = verdict;
        j["period_a"] = ints_to_json(lls_period(a).canonical());
        j["period_b"] = ints_to_json(lls_period(b).canonical());
        j["conjugator"] = witness ? mat_to_json(*witness) : json(nullptr);
        out << j.dump() << "\n";
    } else {
        out << (verdict ? "true" : "false") << "\n";
        if (witness)
            out << "conjugator: " << witness->str() << "\n";
        else if (verdict)
            out << "(no conjugator witness within word length " << opt.bound << ")\n";
    }
    return 0;
}

int run_repr(const Options& opt, std::ostream& out) {
    Mat2Z m = Mat2Z::parse(opt.matrix);
    TypeMSequence seq = type_m_representative(m);
    Word w = type_m_word(seq);
    Mat2Z value = evaluate(w);
    if (opt.json_output) {
        json j;
        j["kind"] = "repr";
        j["m"] = ints_to_json(seq);
        j["word"] = print_word(w);
        j["matrix"] = mat_to_json(value);
        out << j.dump() << "\n";
    } else {
        out << "m: " << print_m_sequence(seq) << "\n";
        out << "word: " << print_word(w) << "\n";
        out << "evaluates to: " << value.str() << "\n";
    }
    return 0;
}

int run_growth(const Options& opt, bool word_set, bool matrix_set, std::ostream& out) {
    Mat2Z m = matrix_from_options(opt, word_set, matrix_set);
    KClass v = parse_kclass(opt.v_text);
    KClass w = parse_kclass(opt.w_text);
    GrowthReport report = growth_sequence(m, v, w, opt.steps);
    if (opt.json_output) {
        json j;
        j["kind"] = "growth";
        j["target"] = round12(report.target);
        j["final_gap"] = round12(report.final_gap);
        json rows = json::array();
        for (const GrowthRow& row : report.rows) {
            json r;
            r["l"] = row.l;
            r["chi_abs"] = row.chi_abs.str();  // always a decimal string
            r["estimate"] = round12(row.estimate);
            r["rate"] = round12(row.rate);
            r["gap"] = round12(row.gap);
            rows.push_back(std::move(r));
        }
        j["rows"] = std::move(rows);
        out << j.dump() << "\n";
    } else {
        out << report.csv();
        out << "target: " << sig12(report.target) << "\n";
        out << "gap: " << sig12(report.final_gap) << "\n";
    }
    return 0;
}

int run_verify_type_m(const Options& opt, std::ostream& out) {
    TypeMSequence m = parse_m_sequence(opt.m_sequence);
    TypeMCertificate cert = verify_type_m(m);
    if (opt.json_output) {
        json j;
        j["kind"] = "verify_type_m";
        j["m"] = ints_to_json(cert.m);
        j["ok"] = cert.ok();
        json prefixes = json::array();
        for (const TypeMPrefix& p : cert.prefixes) {
            json pj;
            pj["n"] = p.index;
            pj["matrix"] = mat_to_json(p.matrix);
            pj["alpha"] = big_to_json(p.alpha);
            pj["beta"] = big_to_json(p.beta);
            pj["a_positive"] = p.a_positive;
            pj["a_le_c"] = p.a_le_c;
            pj["cf_matches"] = p.cf_matches;
            pj["alpha_in_range"] = p.alpha_in_range;
            pj["beta_in_range"] = p.beta_in_range;
            prefixes.push_back(std::move(pj));
        }
        j["prefixes"] = std::move(prefixes);
        j["lls"] = ints_to_json(cert.lls);
        j["lls_matches"] = cert.lls_matches;
        out << j.dump() << "\n";
    } else {
        for (const TypeMPrefix& p : cert.prefixes) {
            out << "prefix " << p.index << ": matrix " << p.matrix.str() << " alpha " << p.alpha
                << " beta " << p.beta << " properties "
                << (p.a_positive ? "i" : "-") << (p.a_le_c ? ",ii" : ",-")
                << (p.cf_matches ? ",iii" : ",-") << (p.alpha_in_range ? ",iv" : ",-")
                << (p.beta_in_range ? ",v" : ",-") << "\n";
        }
        out << "lls: ";
        for (std::size_t i = 0; i < cert.lls.size(); ++i) out << (i ? "," : "") << cert.lls[i];
        out << (cert.lls_matches ? " (matches m)" : " (MISMATCH)") << "\n";
        out << (cert.ok() ? "ok" : "FAILED") << "\n";
    }
    return 0;
}

int run_standard(const Options& opt, std::ostream& out) {
    StandardDescriptor d{parse_int_flag(opt.genus, "--genus"), parse_int_flag(opt.deg, "--deg"),
                         parse_int_flag(opt.shift, "--shift"), opt.automorphism};
    StandardEntropy result = entropy_of_curve_autoeq(d);
    if (opt.json_output) {
        json j;
        j["kind"] = "standard";
        j["zero"] = true;
        j["float"] = 0.0;
        j["matrix"] = mat_to_json(result.induced);
        out << j.dump() << "\n";
    } else {
        out << "entropy: 0 (exact)\n";
        out << "matrix: " << result.induced.str() << "\n";
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"categorical entropy of curve autoequivalences via the induced SL(2,Z) action"};
    app.require_subcommand(1);
    Options opt;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", opt.json_output, "JSON output"); };

    CLI::App* eval = app.add_subcommand("eval", "evaluate a word to its induced matrix");
    eval->add_option("--word", opt.word, "word in S, T, [n], L0, AUT")->required();
    add_json(eval);

    CLI::App* entropy = app.add_subcommand("entropy", "entropy of a word or matrix");
    auto* ent_word = entropy->add_option("--word", opt.word, "word in S, T, [n], L0, AUT");
    auto* ent_matrix = entropy->add_option("--matrix", opt.matrix, "matrix a,b,c,d");
    ent_word->excludes(ent_matrix);
    add_json(entropy);

    CLI::App* lls = app.add_subcommand("lls", "LLS-period of a hyperbolic matrix");
    lls->add_option("--matrix", opt.matrix, "matrix a,b,c,d")->required();
    add_json(lls);

    CLI::App* conj = app.add_subcommand("conjugate", "SL(2,Z) conjugacy test (trace > 2)");
    conj->add_option("--a", opt.a_text, "first matrix a,b,c,d")->required();
    conj->add_option("--b", opt.b_text, "second matrix a,b,c,d")->required();
    conj->add_option("--bound", opt.bound, "conjugator word-length bound for the witness search");
    add_json(conj);

    CLI::App* repr = app.add_subcommand("repr", "type-m representative of a trace > 2 matrix");
    repr->add_option("--matrix", opt.matrix, "matrix a,b,c,d")->required();
    add_json(repr);

    CLI::App* growth = app.add_subcommand("growth", "pairing growth table against log(rho)");
    auto* gr_word = growth->add_option("--word", opt.word, "word in S, T, [n], L0, AUT");
    auto* gr_matrix = growth->add_option("--matrix", opt.matrix, "matrix a,b,c,d");
    gr_word->excludes(gr_matrix);
    growth->add_option("--steps", opt.steps, "number of iterations (default 60)");
    growth->add_option("--v", opt.v_text, "pairing class rank,degree (default 2,-9)");
    growth->add_option("--w", opt.w_text, "iterated class rank,degree (default 2,9)");
    add_json(growth);

    CLI::App* verify = app.add_subcommand("verify-type-m", "five-property certificate for m");
    verify->add_option("--m", opt.m_sequence, "sequence m_{2n},...,m_1 as m1,m2,...")->required();
    add_json(verify);

    CLI::App* standard = app.add_subcommand("standard", "entropy of a standard autoequivalence");
    standard->add_option("--genus", opt.genus, "curve genus (>= 0)");
    standard->add_option("--deg", opt.deg, "twist degree k");
    standard->add_option("--shift", opt.shift, "translation amount n");
    standard->add_flag("--aut", opt.automorphism, "include a curve automorphism (trivial action)");
    add_json(standard);

    std::vector<const char*> argv;
    argv.push_back("catent");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (eval->parsed()) return run_eval(opt, out);
        if (entropy->parsed())
            return run_entropy(opt, ent_word->count() > 0, ent_matrix->count() > 0, out);
        if (lls->parsed()) return run_lls(opt, out);
        if (conj->parsed()) return run_conjugate(opt, out);
        if (repr->parsed()) return run_repr(opt, out);
        if (growth->parsed())
            return run_growth(opt, gr_word->count() > 0, gr_matrix->count() > 0, out);
        if (verify->parsed()) return run_verify_type_m(opt, out);
        if (standard->parsed()) return run_standard(opt, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace catent::cli
