// Command-line front end: series evaluation, products, brackets,
// modular-form checks, dimension tables and relation discovery.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "bibracket/modular.hpp"
#include "bibracket/relations.hpp"

using nlohmann::json;
using namespace bibracket;

namespace {

enum class Format { text, jsonfmt, csv, latex };

struct FormatOpts {
    bool as_json = false, as_csv = false, as_latex = false;
    Format get() const {
        if (as_json) return Format::jsonfmt;
        if (as_csv) return Format::csv;
        if (as_latex) return Format::latex;
        return Format::text;
    }
};

void add_format_flags(CLI::App* app, FormatOpts& f) {
    app->add_flag("--json", f.as_json, "JSON output");
    app->add_flag("--csv", f.as_csv, "CSV output");
    app->add_flag("--latex", f.as_latex, "LaTeX table output");
}

// one table row: label + integer value + stability
struct TableRow {
    std::string key;
    long value;
    bool stable = true;
};

int emit_table(const std::string& command, const json& params, int precision,
               const std::vector<TableRow>& rows, Format fmt, bool all_stable) {
    switch (fmt) {
        case Format::jsonfmt: {
            json results = json::array();
            for (const auto& r : rows)
                results.push_back({{"k", r.key}, {"value", r.value}, {"stable", r.stable}});
            json out = {{"command", command},
                        {"params", params},
                        {"precision", precision},
                        {"results", results},
                        {"stable", all_stable}};
            std::cout << out.dump(2) << "\n";
            break;
        }
        case Format::csv:
            std::cout << "k,value,stable\n";
            for (const auto& r : rows)
                std::cout << r.key << "," << r.value << "," << (r.stable ? "1" : "0") << "\n";
            break;
        case Format::latex: {
            std::cout << "\\begin{tabular}{c|";
            for (size_t i = 0; i < rows.size(); ++i) std::cout << "c";
            std::cout << "}\n$k$";
            for (const auto& r : rows) std::cout << " & " << r.key;
            std::cout << " \\\\ \\hline\n" << command;
            for (const auto& r : rows) std::cout << " & " << r.value;
            std::cout << " \\\\\n\\end{tabular}\n";
            break;
        }
        default:
            for (const auto& r : rows) {
                std::cout << command << "(" << r.key << ") = " << r.value;
                if (!r.stable) std::cout << "   [UNSTABLE]";
                std::cout << "\n";
            }
    }
    return 0;
}

std::string comb_to_string(const BiLinComb& c) { return print_lincomb(c); }

json comb_to_json(const BiLinComb& c) {
    json terms = json::array();
    for (const auto& [w, q] : c.terms())
        terms.push_back({{"word", print_word(w)}, {"coeff", to_string(q)}});
    return terms;
}

json series_to_json(const QSeries& s) {
    json coeffs = json::array();
    for (int n = 0; n <= s.precision(); ++n) coeffs.push_back(to_string(s.coeff(n)));
    return coeffs;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bibracket: exact q-series algebra of bi-brackets"};
    app.require_subcommand(1);

    // ---- eval
    std::string eval_input;
    int eval_prec = 60;
    bool eval_oracle = false;
    FormatOpts eval_fmt;
    auto* cmd_eval = app.add_subcommand("eval", "evaluate a word or linear combination as a q-series");
    cmd_eval->add_option("input", eval_input, "word or linear combination")->required();
    cmd_eval->add_option("--prec", eval_prec, "number of q-coefficients");
    cmd_eval->add_flag("--oracle", eval_oracle, "use the direct-enumeration oracle");
    add_format_flags(cmd_eval, eval_fmt);

    // ---- pmap
    std::string pmap_input;
    FormatOpts pmap_fmt;
    auto* cmd_pmap = app.add_subcommand("pmap", "apply the partition involution P to a word");
    cmd_pmap->add_option("input", pmap_input, "word")->required();
    add_format_flags(cmd_pmap, pmap_fmt);

    // ---- product
    std::string prod_mode, prod_u, prod_v;
    int prod_prec = 0;
    FormatOpts prod_fmt;
    auto* cmd_prod = app.add_subcommand("product", "stuffle or shuffle product of two words");
    cmd_prod->add_option("--mode", prod_mode, "stuffle|shuffle")->required();
    cmd_prod->add_option("u", prod_u, "left word")->required();
    cmd_prod->add_option("v", prod_v, "right word")->required();
    cmd_prod->add_option("--prec", prod_prec, "also print the series at this precision");
    add_format_flags(cmd_prod, prod_fmt);

    // ---- bracket
    std::string br_mode, br_index;
    int br_prec = 0;
    FormatOpts br_fmt;
    auto* cmd_br = app.add_subcommand("bracket", "stuffle (ast) or shuffle (sh) bracket of an index");
    cmd_br->add_option("--mode", br_mode, "ast|sh")->required();
    cmd_br->add_option("index", br_index, "comma-separated s1,...,sl")->required();
    cmd_br->add_option("--prec", br_prec, "also print the series at this precision");
    add_format_flags(cmd_br, br_fmt);

    // ---- eisenstein
    int eis_k = 0, eis_prec = 60;
    FormatOpts eis_fmt;
    auto* cmd_eis = app.add_subcommand("eisenstein", "q-expansion of the Eisenstein series G~_k");
    cmd_eis->add_option("k", eis_k, "even weight >= 2")->required();
    cmd_eis->add_option("--prec", eis_prec, "number of q-coefficients");
    add_format_flags(cmd_eis, eis_fmt);

    // ---- rankin-cohen
    int rc_k = 0, rc_l = 0, rc_n = 0, rc_prec = 60;
    FormatOpts rc_fmt;
    auto* cmd_rc = app.add_subcommand("rankin-cohen", "n-th Rankin-Cohen bracket (G~_k, G~_l)_n");
    cmd_rc->add_option("k", rc_k)->required();
    cmd_rc->add_option("l", rc_l)->required();
    cmd_rc->add_option("n", rc_n)->required();
    cmd_rc->add_option("--prec", rc_prec, "number of q-coefficients");
    add_format_flags(cmd_rc, rc_fmt);

    // ---- verify modular-suite
    int ver_prec = 60;
    FormatOpts ver_fmt;
    auto* cmd_verify = app.add_subcommand("verify", "run identity suites");
    auto* cmd_vms = cmd_verify->add_subcommand("modular-suite", "quasi-modular and cusp-form identities");
    cmd_vms->add_option("--prec", ver_prec, "number of q-coefficients");
    add_format_flags(cmd_vms, ver_fmt);

    // ---- dims
    std::string dims_family = "sh";
    int dims_kmax = 7, dims_prec = 0;
    bool dims_strict = false;
    FormatOpts dims_fmt;
    auto* cmd_dims = app.add_subcommand("dims", "graded dimension lower bounds per weight");
    cmd_dims->add_option("--family", dims_family, "sh|ast|plain");
    cmd_dims->add_option("--max-weight", dims_kmax, "largest weight")->required();
    cmd_dims->add_option("--prec", dims_prec, "number of q-coefficients (default 4*max-weight)");
    cmd_dims->add_flag("--strict", dims_strict, "exit nonzero if any rank is precision-sensitive");
    add_format_flags(cmd_dims, dims_fmt);

    // ---- ds-counts
    std::string ds_variant = "eds";
    int ds_kmax = 7;
    FormatOpts ds_fmt;
    auto* cmd_ds = app.add_subcommand("ds-counts", "double-shuffle relation counts per weight");
    cmd_ds->add_option("--variant", ds_variant, "eds|fds|rds");
    cmd_ds->add_option("--max-weight", ds_kmax, "largest weight")->required();
    add_format_flags(cmd_ds, ds_fmt);

    // ---- relations
    int rel_weight = 0, rel_prec = 60;
    FormatOpts rel_fmt;
    auto* cmd_rel = app.add_subcommand("relations", "kernel basis of brackets of a given weight");
    cmd_rel->add_option("--weight", rel_weight, "weight")->required();
    cmd_rel->add_option("--prec", rel_prec, "number of q-coefficients");
    add_format_flags(cmd_rel, rel_fmt);

    // ---- express
    std::string ex_target;
    int ex_weight = 0, ex_prec = 60;
    FormatOpts ex_fmt;
    auto* cmd_ex = app.add_subcommand("express", "write a combination in terms of brackets of weight <= K");
    cmd_ex->add_option("target", ex_target, "word or linear combination")->required();
    cmd_ex->add_option("--weight", ex_weight, "largest generator weight")->required();
    cmd_ex->add_option("--prec", ex_prec, "number of q-coefficients");
    add_format_flags(cmd_ex, ex_fmt);

    // ---- sequences
    std::string seq_kind = "dprime";
    int seq_max = 14;
    FormatOpts seq_fmt;
    auto* cmd_seq = app.add_subcommand("sequences", "d', d and generator-count sequences");
    cmd_seq->add_option("--kind", seq_kind, "dprime|d|gen");
    cmd_seq->add_option("--max", seq_max, "largest index")->required();
    add_format_flags(cmd_seq, seq_fmt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_eval) {
            BiLinComb c = parse_lincomb(eval_input);
            Evaluator ev(eval_prec);
            QSeries s(eval_prec);
            if (eval_oracle)
                for (const auto& [w, q] : c.terms()) s += q * ev.bibracket_oracle(w);
            else
                s = ev.lincomb(c);
            if (eval_fmt.get() == Format::jsonfmt) {
                json out = {{"command", "eval"},
                            {"params", {{"input", eval_input}, {"oracle", eval_oracle}}},
                            {"precision", eval_prec},
                            {"results", series_to_json(s)},
                            {"stable", true}};
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << s.str() << "\n";
            }
            return 0;
        }
        if (*cmd_pmap) {
            BiLinComb out = partition_map(parse_lincomb(pmap_input));
            if (pmap_fmt.get() == Format::jsonfmt) {
                json j = {{"command", "pmap"},
                          {"params", {{"input", pmap_input}}},
                          {"precision", nullptr},
                          {"results", comb_to_json(out)},
                          {"stable", true}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << comb_to_string(out) << "\n";
            }
            return 0;
        }
        if (*cmd_prod) {
            BiWord u = parse_word(prod_u), v = parse_word(prod_v);
            BiLinComb out;
            if (prod_mode == "stuffle") out = stuffle_mul(u, v);
            else if (prod_mode == "shuffle") out = shuffle_mul(u, v);
            else throw CLI::ValidationError("--mode must be stuffle or shuffle");
            if (prod_fmt.get() == Format::jsonfmt) {
                json j = {{"command", "product"},
                          {"params", {{"mode", prod_mode}, {"u", prod_u}, {"v", prod_v}}},
                          {"precision", prod_prec},
                          {"results", comb_to_json(out)},
                          {"stable", true}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << comb_to_string(out) << "\n";
                if (prod_prec > 0) {
                    Evaluator ev(prod_prec);
                    std::cout << ev.lincomb(out).str() << "\n";
                }
            }
            return 0;
        }
        if (*cmd_br) {
            ZWord s;
            for (int x : detail::parse_int_list(br_index)) s.push_back(x);
            BiLinComb out;
            if (br_mode == "ast") out = stuffle_bracket(s);
            else if (br_mode == "sh") out = shuffle_bracket(s);
            else throw CLI::ValidationError("--mode must be ast or sh");
            if (br_fmt.get() == Format::jsonfmt) {
                json j = {{"command", "bracket"},
                          {"params", {{"mode", br_mode}, {"index", br_index}}},
                          {"precision", br_prec},
                          {"results", comb_to_json(out)},
                          {"stable", true}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << comb_to_string(out) << "\n";
                if (br_prec > 0) {
                    Evaluator ev(br_prec);
                    std::cout << ev.lincomb(out).str() << "\n";
                }
            }
            return 0;
        }
        if (*cmd_eis) {
            Evaluator ev(eis_prec);
            QModForm g = eisenstein(eis_k, ev);
            if (eis_fmt.get() == Format::jsonfmt) {
                json j = {{"command", "eisenstein"},
                          {"params", {{"k", eis_k}}},
                          {"precision", eis_prec},
                          {"results", series_to_json(g.series)},
                          {"stable", true}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << g.series.str() << "\n";
            }
            return 0;
        }
        if (*cmd_rc) {
            Evaluator ev(rc_prec);
            QSeries s = rankin_cohen(eisenstein(rc_k, ev), eisenstein(rc_l, ev), rc_n);
            if (rc_fmt.get() == Format::jsonfmt) {
                json j = {{"command", "rankin-cohen"},
                          {"params", {{"k", rc_k}, {"l", rc_l}, {"n", rc_n}}},
                          {"precision", rc_prec},
                          {"results", series_to_json(s)},
                          {"stable", true}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << s.str() << "\n";
            }
            return 0;
        }
        if (*cmd_vms) {
            auto results = modular_suite(ver_prec);
            bool all = true;
            if (ver_fmt.get() == Format::jsonfmt) {
                json arr = json::array();
                for (const auto& r : results) {
                    arr.push_back({{"name", r.name}, {"passed", r.passed}});
                    all = all && r.passed;
                }
                json j = {{"command", "verify modular-suite"},
                          {"params", json::object()},
                          {"precision", ver_prec},
                          {"results", arr},
                          {"stable", true}};
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& r : results) {
                    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << "\n";
                    all = all && r.passed;
                }
            }
            return all ? 0 : 1;
        }
        if (*cmd_dims) {
            Family fam = parse_family(dims_family);
            if (dims_prec == 0) dims_prec = 4 * dims_kmax;
            auto table = dims_table(fam, dims_kmax, dims_prec);
            std::vector<TableRow> rows;
            bool all_stable = true;
            for (const auto& g : table) {
                rows.push_back({std::to_string(g.k), g.dim, g.stable});
                all_stable = all_stable && g.stable;
            }
            emit_table("dims", {{"family", dims_family}, {"max_weight", dims_kmax}}, dims_prec,
                       rows, dims_fmt.get(), all_stable);
            return (dims_strict && !all_stable) ? 1 : 0;
        }
        if (*cmd_ds) {
            DsVariant var = parse_ds_variant(ds_variant);
            std::vector<TableRow> rows;
            for (int k = 1; k <= ds_kmax; ++k)
                rows.push_back({std::to_string(k), ds_counts(k, var), true});
            emit_table("ds-counts", {{"variant", ds_variant}, {"max_weight", ds_kmax}}, 0, rows,
                       ds_fmt.get(), true);
            return 0;
        }
        if (*cmd_rel) {
            RelationReport rep = find_relations(rel_weight, rel_prec);
            if (rel_fmt.get() == Format::jsonfmt) {
                json kern = json::array();
                for (const auto& v : rep.kernel) {
                    json rel = json::array();
                    for (size_t i = 0; i < v.size(); ++i)
                        if (v[i] != 0)
                            rel.push_back({{"word", rep.labels[i]}, {"coeff", to_string(v[i])}});
                    kern.push_back(rel);
                }
                json j = {{"command", "relations"},
                          {"params", {{"weight", rel_weight}}},
                          {"precision", rel_prec},
                          {"results", {{"rank", rep.rank}, {"kernel", kern}, {"audited", rep.audited}}},
                          {"stable", rep.stable}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "generators: " << rep.labels.size() << ", rank: " << rep.rank
                          << ", relations: " << rep.kernel.size()
                          << (rep.stable ? "" : "   [UNSTABLE]") << "\n";
                for (const auto& v : rep.kernel) {
                    std::string line;
                    for (size_t i = 0; i < v.size(); ++i) {
                        if (v[i] == 0) continue;
                        if (!line.empty()) line += " + ";
                        line += to_string(v[i]) + " * " + rep.labels[i];
                    }
                    std::cout << line << " = 0\n";
                }
            }
            return rep.audited ? 0 : 1;
        }
        if (*cmd_ex) {
            BiLinComb target = parse_lincomb(ex_target);
            std::vector<Generator> gens;
            for (int w = 0; w <= ex_weight; ++w)
                for (const auto& g : generators_of_weight(Family::plain, w)) gens.push_back(g);
            Expressed res = express_in_basis(target, gens, ex_prec);
            if (ex_fmt.get() == Format::jsonfmt) {
                json comb = json::array();
                for (const auto& [lab, c] : res.combination)
                    comb.push_back({{"word", lab}, {"coeff", to_string(c)}});
                json j = {{"command", "express"},
                          {"params", {{"target", ex_target}, {"weight", ex_weight}}},
                          {"precision", ex_prec},
                          {"results", {{"independent", res.independent}, {"combination", comb}}},
                          {"stable", true}};
                std::cout << j.dump(2) << "\n";
            } else if (res.independent) {
                std::cout << "independent\n";
            } else {
                std::string line;
                for (const auto& [lab, c] : res.combination) {
                    if (!line.empty()) line += " + ";
                    line += to_string(c) + " * " + lab;
                }
                std::cout << line << "\n";
            }
            return 0;
        }
        if (*cmd_seq) {
            std::vector<TableRow> rows;
            if (seq_kind == "dprime") {
                auto d = dprime_sequence(seq_max);
                for (int k = 0; k <= seq_max; ++k)
                    rows.push_back({std::to_string(k), d[static_cast<size_t>(k)], true});
            } else if (seq_kind == "d") {
                auto d = d_sequence(seq_max);
                for (int k = 0; k <= seq_max; ++k)
                    rows.push_back({std::to_string(k), d[static_cast<size_t>(k)], true});
            } else if (seq_kind == "gen") {
                for (int k = 1; k <= seq_max; ++k)
                    rows.push_back({std::to_string(k), gen_count(k), true});
            } else {
                throw CLI::ValidationError("--kind must be dprime, d or gen");
            }
            emit_table("sequences", {{"kind", seq_kind}, {"max", seq_max}}, 0, rows,
                       seq_fmt.get(), true);
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
