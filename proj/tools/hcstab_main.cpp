#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hcstab/cost.hpp"
#include "hcstab/linkage.hpp"
#include "hcstab/matrix_io.hpp"
#include "hcstab/metrics.hpp"
#include "hcstab/oracle.hpp"
#include "hcstab/report.hpp"
#include "hcstab/sublevel.hpp"
#include "hcstab/tree.hpp"

namespace {

struct Options {
    std::string input;
    std::string method = "average";
    double tol = 1e-7;
    int max_rounds = 200;
    int cap = hcstab::kDefaultEnumerationCap;
    bool emit_ystar = false;
    std::string out;
    std::string dump_lp;
    double override_epsilon = 0.0;
    bool has_override = false;
    int enum_n = 0;
    bool list_trees = false;
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write output file: " + out_path);
    out << text;
}

int check_config(const Options& o) {
    if (!(o.tol > 0.0 && o.tol <= 1e-2)) {
        std::cerr << "error: --tol must lie in (0, 1e-2]\n";
        return 1;
    }
    if (o.max_rounds < 1) {
        std::cerr << "error: --max-rounds must be positive\n";
        return 1;
    }
    if (o.cap < 1) {
        std::cerr << "error: --cap must be positive\n";
        return 1;
    }
    return 0;
}

hcstab::SsConfig make_config(const Options& o) {
    hcstab::SsConfig cfg;
    cfg.separation_tol = o.tol;
    cfg.max_rounds = o.max_rounds;
    cfg.enumeration_cap = o.cap;
    return cfg;
}

hcstab::Method parse_method(const std::string& name) {
    auto m = hcstab::method_from_string(name);
    if (!m) throw std::runtime_error("unknown method: " + name);
    return *m;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

std::string json_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

int run_certify(const Options& o) {
    auto in = hcstab::io::read_similarity(o.input);
    const hcstab::Method method = parse_method(o.method);
    hcstab::StabilityReport rep = hcstab::certify(in.matrix, method, make_config(o), in.warnings);
    if (!o.dump_lp.empty()) {
        auto inst = hcstab::make_ss_instance(in.matrix, hcstab::tree_to_indicator(rep.tree));
        std::ofstream dump(o.dump_lp);
        if (!dump) throw std::runtime_error("cannot write LP dump: " + o.dump_lp);
        hcstab::lp::write_lp_text(hcstab::build_base_model(inst), dump);
    }
    emit(hcstab::render_report(rep, o.emit_ystar), o.out);
    return rep.certified ? 0 : 2;
}

int run_oracle_check(const Options& o) {
    auto in = hcstab::io::read_similarity(o.input);
    const hcstab::Method method = parse_method(o.method);
    hcstab::StabilityReport rep = hcstab::certify(in.matrix, method, make_config(o), in.warnings);
    const hcstab::LevelIndicator x = hcstab::tree_to_indicator(rep.tree);
    const double eps_checked = o.has_override ? o.override_epsilon : rep.epsilon;
    const hcstab::CertificateCheck check =
        hcstab::verify_certificate(in.matrix, x, eps_checked, o.cap);
    emit(hcstab::render_oracle_report(rep, check, eps_checked, o.emit_ystar), o.out);
    if (!check.valid) return 3;
    return rep.certified ? 0 : 2;
}

int run_loss(const Options& o) {
    auto in = hcstab::io::read_similarity(o.input);
    const hcstab::Method method = parse_method(o.method);
    hcstab::Tree tree{0, {}};
    if (method == hcstab::Method::exhaustive)
        tree = hcstab::exhaustive_best(in.matrix, o.cap).first;
    else if (method == hcstab::Method::average)
        tree = hcstab::agglomerate(in.matrix, hcstab::LinkageRule::average);
    else if (method == hcstab::Method::max_pairwise)
        tree = hcstab::agglomerate(in.matrix, hcstab::LinkageRule::max_pairwise);
    else
        tree = hcstab::agglomerate(in.matrix, hcstab::LinkageRule::min_pairwise);
    const double value = hcstab::loss(in.matrix, hcstab::tree_to_indicator(tree));

    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    std::string text = "{\n  \"n\": " + std::to_string(in.matrix.n()) + ",\n  \"method\": " +
                       json_quote(o.method) + ",\n  \"loss_x\": " + buf + ",\n  \"tree\": [";
    const auto lines = split_lines(hcstab::to_text(tree));
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i) text += ", ";
        text += json_quote(lines[i]);
    }
    text += "]\n}\n";
    emit(text, o.out);
    return 0;
}

int run_enumerate(const Options& o) {
    std::string text = "{\n  \"n\": " + std::to_string(o.enum_n) + ",\n  \"count\": ";
    std::vector<std::string> listed;
    long count = 0;
    hcstab::for_each_tree(
        o.enum_n,
        [&](const hcstab::Tree& t) {
            ++count;
            if (o.list_trees) {
                std::string flat;
                for (const std::string& line : split_lines(hcstab::to_text(t))) {
                    if (!flat.empty()) flat += "; ";
                    flat += line;
                }
                listed.push_back(std::move(flat));
            }
        },
        o.cap);
    text += std::to_string(count);
    if (o.list_trees) {
        text += ",\n  \"trees\": [";
        for (std::size_t i = 0; i < listed.size(); ++i) {
            if (i) text += ", ";
            text += json_quote(listed[i]);
        }
        text += "]";
    }
    text += "\n}\n";
    emit(text, o.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"optimality and stability certificates for hierarchical clusterings"};
    app.require_subcommand(1);
    Options o;

    const std::vector<std::string> methods = {"average", "max-pairwise", "min-pairwise",
                                              "exhaustive"};
    auto add_common = [&](CLI::App* sub, bool with_input = true) {
        if (with_input)
            sub->add_option("input", o.input, "similarity matrix file")->required();
        sub->add_option("--method", o.method, "clustering rule for X")
            ->check(CLI::IsMember(methods));
        sub->add_option("--tol", o.tol, "separation / violation tolerance");
        sub->add_option("--max-rounds", o.max_rounds, "cutting-plane round limit");
        sub->add_option("--cap", o.cap, "tree enumeration cap");
        sub->add_option("--out", o.out, "report file (default stdout)");
        sub->add_flag("--emit-ystar", o.emit_ystar, "include y* in the report");
    };

    CLI::App* cert = app.add_subcommand("certify", "certify near-optimality of a clustering");
    add_common(cert);
    cert->add_option("--dump-lp", o.dump_lp, "write the base relaxation in LP text format");

    CLI::App* oracle = app.add_subcommand("oracle-check",
                                          "validate a certificate by full enumeration");
    add_common(oracle);
    CLI::Option* ov = oracle->add_option("--override-epsilon", o.override_epsilon,
                                         "test hook: radius to validate instead of epsilon");

    CLI::App* lossc = app.add_subcommand("loss", "clustering loss under a linkage rule");
    add_common(lossc);

    CLI::App* enumc = app.add_subcommand("enumerate", "enumerate hierarchies on n leaves");
    enumc->add_option("--n", o.enum_n, "leaf count")->required();
    enumc->add_option("--cap", o.cap, "tree enumeration cap");
    enumc->add_option("--out", o.out, "report file (default stdout)");
    enumc->add_flag("--list", o.list_trees, "list every tree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    o.has_override = ov->count() > 0;

    if (int rc = check_config(o); rc != 0) return rc;

    try {
        if (cert->parsed()) return run_certify(o);
        if (oracle->parsed()) return run_oracle_check(o);
        if (lossc->parsed()) return run_loss(o);
        return run_enumerate(o);
    } catch (const hcstab::io::ParseError& e) {
        std::cerr << "error: " << e.what();
        if (e.line() > 0) std::cerr << " (line " << e.line() << ", field " << e.column() << ")";
        std::cerr << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
