#include "gravity/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "gravity/arnold.hpp"
#include "gravity/circle_action.hpp"
#include "gravity/errors.hpp"
#include "gravity/expression.hpp"
#include "gravity/gravity_gk.hpp"
#include "gravity/gravity_westerland.hpp"
#include "gravity/operad_core.hpp"
#include "gravity/verify.hpp"

namespace gravity {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "gravity-operad/1";

void write_output(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n')
            std::cout << '\n';
        return;
    }
    std::ofstream f(out_file);
    if (!f)
        throw std::ios_base::failure("cannot open output file " + out_file);
    f << text;
    if (!text.empty() && text.back() != '\n')
        f << '\n';
    if (!f)
        throw std::ios_base::failure("failed writing " + out_file);
}

json matrix_to_json(const LinearMap& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows; ++r)
        rows.push_back(json::array());
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            rows[r].push_back("0");
    for (const Entry& e : m.entries)
        rows[e.row][e.col] = rational_to_string(e.value);
    return rows;
}

json dims_json(int max_arity) {
    json arr = json::array();
    for (int n = 1; n <= max_arity; ++n) {
        json row;
        row["arity"] = n;
        json degrees = json::object();
        for (int k : grav_degrees(n))
            if (grav_dim(n, k) > 0)
                degrees[std::to_string(k)] = grav_dim(n, k);
        row["dims"] = degrees;
        arr.push_back(row);
    }
    return arr;
}

std::string dims_csv(int max_arity) {
    std::ostringstream out;
    out << "n,degree,dim\n";
    for (int n = 1; n <= max_arity; ++n)
        for (int k : grav_degrees(n))
            if (grav_dim(n, k) > 0)
                out << n << "," << k << "," << grav_dim(n, k) << "\n";
    return out.str();
}

Vec parse_coord_list(const std::string& text, int expected) {
    Vec out;
    std::string token;
    std::istringstream stream(text);
    while (std::getline(stream, token, ','))
        out.push_back(rational_from_string(token));
    if (static_cast<int>(out.size()) != expected)
        throw Error("expected " + std::to_string(expected) + " coordinates, got " +
                    std::to_string(out.size()));
    return out;
}

int cmd_verify(const std::string& suite, int max_arity, std::uint64_t seed,
               const std::string& out_file, const std::string& format) {
    VerifyOptions opt;
    opt.max_arity = max_arity;
    opt.seed = seed;
    std::vector<SuiteResult> results = run_suites(suite, opt);

    bool all_pass = true;
    std::ostringstream text;
    json report;
    report["schema"] = kSchema;
    report["suite"] = suite;
    report["max_arity"] = max_arity;
    report["seed"] = seed;
    json checks = json::array();
    for (const SuiteResult& s : results) {
        for (const CheckResult& c : s.checks) {
            all_pass = all_pass && c.pass;
            text << (c.pass ? "[ok]   " : "[FAIL] ") << s.suite << ": " << c.name;
            if (!c.detail.empty())
                text << " (" << c.detail << ")";
            text << "\n";
            json jc;
            jc["suite"] = s.suite;
            jc["name"] = c.name;
            jc["pass"] = c.pass;
            jc["detail"] = c.detail;
            checks.push_back(jc);
        }
    }
    report["checks"] = checks;
    report["pass"] = all_pass;

    if (format == "json")
        write_output(report.dump(2), out_file);
    else {
        std::cout << text.str();
        if (!out_file.empty())
            write_output(report.dump(2), out_file);
    }
    return all_pass ? 0 : 1;
}

int cmd_export(const std::string& what, const std::string& model_name_arg, int max_arity,
               const std::string& out_file) {
    json doc;
    doc["schema"] = kSchema;
    Model model = model_name_arg == "gk" ? Model::GetzlerKapranov : Model::Westerland;
    if (what == "dims") {
        doc["what"] = "dims";
        doc["dims"] = dims_json(max_arity);
    } else if (what == "structure-constants") {
        doc["what"] = "structure-constants";
        doc["model"] = model_name(model);
        doc["max_arity"] = max_arity;
        json constants = json::array();
        for (int r = 1; r <= max_arity; ++r)
            for (int s = 1; r + s - 1 <= max_arity; ++s)
                for (int i = 1; i <= r; ++i) {
                    TreeInsertion t = tree_insertion(r, s, i);
                    for (int p : grav_degrees(r))
                        for (int q : grav_degrees(s)) {
                            if (grav_dim(r, p) == 0 || grav_dim(s, q) == 0)
                                continue;
                            LinearMap m = model == Model::Westerland
                                              ? w_structure_matrix(t, p, q)
                                              : gk_structure_matrix(t, p, q);
                            json cell;
                            cell["r"] = r;
                            cell["s"] = s;
                            cell["i"] = i;
                            cell["deg_x"] = p;
                            cell["deg_y"] = q;
                            cell["matrix"] = matrix_to_json(m);
                            constants.push_back(cell);
                        }
                }
        doc["constants"] = constants;
    } else if (what == "presentation") {
        doc["what"] = "presentation";
        OperadPresentation p = build_presentation(model, max_arity);
        doc["model"] = p.name;
        doc["max_arity"] = p.max_arity;
        json dims = json::array();
        for (int n = 1; n <= p.max_arity; ++n) {
            json row;
            row["arity"] = n;
            json degrees = json::object();
            for (int k = 0; k < static_cast<int>(p.dims[n].size()); ++k)
                if (p.dims[n][k] > 0)
                    degrees[std::to_string(k)] = p.dims[n][k];
            row["dims"] = degrees;
            json labels = json::array();
            for (const auto& per_degree : p.labels[n])
                for (const std::string& label : per_degree)
                    labels.push_back(label);
            row["labels"] = labels;
            dims.push_back(row);
        }
        doc["arity_spaces"] = dims;
        json comps = json::array();
        for (const auto& [key, m] : p.composition) {
            json cell;
            cell["r"] = key[0];
            cell["s"] = key[1];
            cell["i"] = key[2];
            cell["deg_x"] = key[3];
            cell["deg_y"] = key[4];
            cell["matrix"] = matrix_to_json(m);
            comps.push_back(cell);
        }
        doc["composition"] = comps;
        json actions = json::array();
        for (const auto& [key, m] : p.action) {
            json cell;
            cell["arity"] = key[0];
            cell["transposition"] = key[1];
            cell["degree"] = key[2];
            cell["matrix"] = matrix_to_json(m);
            actions.push_back(cell);
        }
        doc["action"] = actions;
    } else {
        throw CLI::ValidationError("--what must be dims, structure-constants or presentation");
    }
    write_output(doc.dump(2), out_file);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"gravity: exact models of the gravity operad"};
    app.require_subcommand(1);

    int max_arity = 5;
    std::uint64_t seed = 12345;
    std::string out_file;
    std::string format = "text";

    // dims
    auto* dims = app.add_subcommand("dims", "dimension table of the gravity components");
    int dims_max = 6;
    std::string dims_format = "csv";
    std::string dims_out;
    dims->add_option("--max-arity", dims_max, "largest arity in the table");
    dims->add_option("--format", dims_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    dims->add_option("--out", dims_out, "output file (default stdout)");

    // straighten
    auto* straighten_cmd = app.add_subcommand("straighten", "normalize an expression");
    std::string straighten_expr;
    int straighten_n = 0;
    straighten_cmd->add_option("expression", straighten_expr)->required();
    straighten_cmd->add_option("--n", straighten_n, "ambient label count");

    // delta
    auto* delta_cmd = app.add_subcommand("delta", "apply the contraction delta*");
    std::string delta_expr;
    int delta_n = 0;
    delta_cmd->add_option("expression", delta_expr)->required();
    delta_cmd->add_option("--n", delta_n, "ambient label count");

    // residue
    auto* residue_cmd = app.add_subcommand("residue", "residue along a boundary divisor");
    std::string residue_expr;
    int res_r = 0, res_s = 0, res_i = 0;
    residue_cmd->add_option("expression", residue_expr)->required();
    residue_cmd->add_option("--r", res_r)->required();
    residue_cmd->add_option("--s", res_s)->required();
    residue_cmd->add_option("--i", res_i)->required();

    // compose
    auto* compose_cmd = app.add_subcommand("compose", "compose gravity elements");
    std::string compose_model = "w";
    int comp_r = 0, comp_s = 0, comp_i = 0, deg_x = 0, deg_y = 0;
    std::string x_coords, y_coords;
    compose_cmd->add_option("--model", compose_model, "w or gk")
        ->check(CLI::IsMember({"w", "gk"}));
    compose_cmd->add_option("--r", comp_r)->required();
    compose_cmd->add_option("--s", comp_s)->required();
    compose_cmd->add_option("--i", comp_i)->required();
    compose_cmd->add_option("--deg-x", deg_x)->required();
    compose_cmd->add_option("--deg-y", deg_y)->required();
    compose_cmd->add_option("--x", x_coords, "comma-separated coordinates")->required();
    compose_cmd->add_option("--y", y_coords, "comma-separated coordinates")->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    std::string suite = "all";
    verify_cmd->add_option("--suite", suite)
        ->check(CLI::IsMember({"arnold", "delta", "westerland", "gk", "compare", "relations",
                               "all"}));
    verify_cmd->add_option("--max-arity", max_arity);
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--out", out_file, "write the JSON report here");
    verify_cmd->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // export
    auto* export_cmd = app.add_subcommand("export", "machine-readable exports");
    std::string what = "structure-constants";
    std::string export_model = "w";
    int export_max = 4;
    std::string export_out;
    export_cmd->add_option("--what", what)
        ->check(CLI::IsMember({"dims", "structure-constants", "presentation"}));
    export_cmd->add_option("--model", export_model, "w or gk")
        ->check(CLI::IsMember({"w", "gk"}));
    export_cmd->add_option("--max-arity", export_max);
    export_cmd->add_option("--out", export_out, "output file (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (dims->parsed()) {
            if (dims_format == "json") {
                json doc;
                doc["schema"] = kSchema;
                doc["what"] = "dims";
                doc["dims"] = dims_json(dims_max);
                write_output(doc.dump(2), dims_out);
            } else {
                write_output(dims_csv(dims_max), dims_out);
            }
            return 0;
        }
        if (straighten_cmd->parsed()) {
            std::optional<int> ambient;
            if (straighten_n > 0)
                ambient = straighten_n;
            std::cout << print_element(parse_expression(straighten_expr, ambient)) << "\n";
            return 0;
        }
        if (delta_cmd->parsed()) {
            std::optional<int> ambient;
            if (delta_n > 0)
                ambient = delta_n;
            ArnoldElement x = parse_expression(delta_expr, ambient);
            std::cout << print_element(delta_contract(x)) << "\n";
            return 0;
        }
        if (residue_cmd->parsed()) {
            TreeInsertion t = tree_insertion(res_r, res_s, res_i);
            ArnoldElement x = parse_expression(residue_expr, t.n);
            std::cout << print_tensor(residue(t, x)) << "\n";
            return 0;
        }
        if (compose_cmd->parsed()) {
            TreeInsertion t = tree_insertion(comp_r, comp_s, comp_i);
            Vec xv = parse_coord_list(x_coords, grav_dim(comp_r, deg_x));
            Vec yv = parse_coord_list(y_coords, grav_dim(comp_s, deg_y));
            Vec result;
            if (compose_model == "w") {
                GravityElementW x{comp_r, deg_x, xv}, y{comp_s, deg_y, yv};
                result = grav_w_compose(t, x, y).coords;
            } else {
                GravityElementGK x{comp_r, deg_x, xv}, y{comp_s, deg_y, yv};
                result = grav_gk_compose(t, x, y).coords;
            }
            std::string text;
            for (std::size_t j = 0; j < result.size(); ++j)
                text += (j ? "," : "") + rational_to_string(result[j]);
            std::cout << text << "\n";
            return 0;
        }
        if (verify_cmd->parsed())
            return cmd_verify(suite, max_arity, seed, out_file, format);
        if (export_cmd->parsed())
            return cmd_export(what, export_model, export_max, export_out);
    } catch (const ParseError& e) {
        std::cerr << "parse error at offset " << e.offset << ": " << e.what() << "\n";
        return 2;
    } catch (const InvalidGenerator& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const LabelOutOfRange& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace gravity
