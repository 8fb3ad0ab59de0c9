// wittrb: exact verification and classification of homogeneous odd
// weight-zero Rota-Baxter operators on the modified Witt-type Lie
// superalgebra [L_m,L_n]=(m-n)L_{m+n}, [L_m,G_n]=(m-n-1)G_{m+n}, [G,G]=0.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "wittrb/reports.hpp"

namespace {

using namespace wittrb;

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

Window parse_window_checked(const std::string& text) {
    const Window w = Window::parse(text);
    if (!(w.lo <= 0 && 0 <= w.hi))
        throw InvalidParameters("window must satisfy lo <= 0 <= hi, got " + text);
    return w;
}

void emit(const ReportResult& res, const std::string& format) {
    if (format == "json")
        std::cout << res.json.dump(2) << "\n";
    else
        std::cout << res.text;
}

int run(int argc, char** argv) {
    CLI::App app{"exact Rota-Baxter operator verifier/classifier for the modified "
                 "Witt-type Lie superalgebra"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

    std::string window_str = "-8:8";
    std::string family_str, file_path, c_eval_str, reading = "both";
    std::string k_range_str = "-5:5", d_range_str = "-3:3";
    int k = 0, which = 1;
    bool do_search = false, naive_sign = false, odd_parity = false, full_tuples = false;
    std::string f_table_path;

    CLI::App* verify_family = app.add_subcommand("verify-family", "sweep a named family");
    verify_family->add_option("--family", family_str, "family name")->required();
    verify_family->add_option("--k", k, "shift")->required();
    verify_family->add_option("--window", window_str, "table window LO:HI");
    verify_family->add_option("--c-eval", c_eval_str, "evaluate residuals at c = p/q");
    verify_family->add_option("--f-table", f_table_path, "JSON f table for trivial-g");

    CLI::App* verify_file = app.add_subcommand("verify-file", "sweep an operator-table file");
    verify_file->add_option("file", file_path, "operator JSON file")->required();
    verify_file->add_option("--c-eval", c_eval_str, "evaluate residuals at c = p/q");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "full residual report for a family or file");
    sweep_cmd->add_option("--family", family_str, "family name");
    sweep_cmd->add_option("--k", k, "shift");
    sweep_cmd->add_option("--file", file_path, "operator JSON file");
    sweep_cmd->add_option("--window", window_str, "table window LO:HI");
    sweep_cmd->add_option("--c-eval", c_eval_str, "evaluate residuals at c = p/q");
    sweep_cmd->add_flag("--all-tuples,!--failures-only", full_tuples,
                        "include every checked tuple");
    full_tuples = true;

    CLI::App* classify_cmd = app.add_subcommand("classify", "solve (GG) and match families");
    classify_cmd->add_option("--k", k, "shift")->required();
    classify_cmd->add_option("--window", window_str, "window LO:HI, symmetric about 0");

    CLI::App* examples_cmd = app.add_subcommand("examples", "audit the two worked examples");
    examples_cmd->add_option("--which", which, "example number (1 or 2)")->required();
    examples_cmd->add_option("--reading", reading, "literal | shifted | both");
    std::string examples_window = "-12:12";
    examples_cmd->add_option("--window", examples_window, "table window LO:HI");
    examples_cmd->add_option("--c-eval", c_eval_str, "evaluate residuals at c = p/q");

    CLI::App* decompose_cmd =
        app.add_subcommand("decompose", "parity split / componentwise claim search");
    decompose_cmd->add_option("--file", file_path, "general-operator JSON file");
    decompose_cmd->add_flag("--search", do_search, "run the built-in candidate search");
    std::string decompose_window = "-2:2";
    decompose_cmd->add_option("--window", decompose_window, "search window LO:HI");

    CLI::App* structures_cmd =
        app.add_subcommand("structures", "pre-Lie / dendriform checks for a family or file");
    structures_cmd->add_option("--family", family_str, "family name");
    structures_cmd->add_option("--k", k, "shift");
    structures_cmd->add_option("--file", file_path, "operator JSON file");
    std::string structures_window = "-6:6";
    structures_cmd->add_option("--window", structures_window, "table window LO:HI");
    structures_cmd->add_flag("--naive-sign", naive_sign, "also test the naive-sign chain");

    CLI::App* derivations_cmd = app.add_subcommand("derivations", "degree-wise derivation solver");
    derivations_cmd->add_option("--d-range", d_range_str, "degree range LO:HI");
    derivations_cmd->add_option("--window", window_str, "window LO:HI");
    derivations_cmd->add_flag("--odd", odd_parity, "solve parity-reversing candidates");

    CLI::App* figure_cmd = app.add_subcommand("figure-data", "support/solution/derivation data");
    figure_cmd->add_option("--k-range", k_range_str, "shift range LO:HI");
    figure_cmd->add_option("--window", window_str, "window LO:HI");

    CLI::App* replay_cmd = app.add_subcommand("replay", "recompute an embedded counterexample");
    replay_cmd->add_option("file", file_path, "replay blob JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors exit 2, --help exits 0
    }

    std::optional<Rational> c_eval;
    if (!c_eval_str.empty()) c_eval = parse_rational(c_eval_str);

    const auto family_spec = [&](Window w) {
        const auto tag = family_from_name(family_str);
        if (!tag) throw InvalidParameters("unknown family '" + family_str + "'");
        FamilySpec spec{*tag, k, {}};
        if (*tag == FamilyTag::TrivialG) {
            if (!f_table_path.empty()) {
                for (const auto& [idx, poly] : load_json_file(f_table_path).items())
                    spec.f_table[std::stoi(idx)] = poly_from_json(poly);
            } else {
                for (int M = w.lo; M <= w.hi; ++M) spec.f_table[M] = CoeffPoly::c();
            }
        }
        return spec;
    };

    ReportResult res;
    if (*verify_family) {
        const Window w = parse_window_checked(window_str);
        res = report_verify_family(family_spec(w), w, c_eval);
    } else if (*verify_file) {
        res = report_verify_file(load_json_file(file_path), c_eval);
    } else if (*sweep_cmd) {
        if (!file_path.empty()) {
            const OddOperator op = OddOperator::from_json(load_json_file(file_path));
            res = report_sweep(op, c_eval, full_tuples);
        } else if (!family_str.empty()) {
            const Window w = parse_window_checked(window_str);
            res = report_sweep(build_family(family_spec(w), w), c_eval, full_tuples);
        } else {
            throw InvalidParameters("sweep needs --file or --family");
        }
    } else if (*classify_cmd) {
        res = report_classify(k, parse_window_checked(window_str));
    } else if (*examples_cmd) {
        res = report_examples(which, reading, parse_window_checked(examples_window), c_eval);
    } else if (*decompose_cmd) {
        if (do_search)
            res = report_decompose_search(parse_window_checked(decompose_window));
        else if (!file_path.empty())
            res = report_decompose_file(load_json_file(file_path));
        else
            throw InvalidParameters("decompose needs --file or --search");
    } else if (*structures_cmd) {
        const Window w = parse_window_checked(structures_window);
        if (!file_path.empty())
            res = report_structures(OddOperator::from_json(load_json_file(file_path)), naive_sign);
        else if (!family_str.empty())
            res = report_structures(build_family(family_spec(w), w), naive_sign);
        else
            throw InvalidParameters("structures needs --file or --family");
    } else if (*derivations_cmd) {
        const Window dr = Window::parse(d_range_str);
        res = report_derivations(dr.lo, dr.hi, parse_window_checked(window_str), odd_parity);
    } else if (*figure_cmd) {
        const Window kr = Window::parse(k_range_str);
        res = report_figure_data(kr.lo, kr.hi, parse_window_checked(window_str));
    } else if (*replay_cmd) {
        res = report_replay(load_json_file(file_path));
    }

    emit(res, format);
    return res.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error&) {
        return 2; // CLI11_PARSE already printed usage
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
