// Command-line front end: build, combine, check, and factor truncated
// Riordan matrices with exact rational arithmetic.
//
// Exit codes: 0 success, 2 parse/usage error, 3 domain-precondition error,
// 4 internal-contract failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "riordan/decompose.hpp"
#include "riordan/error.hpp"
#include "riordan/gfparse.hpp"
#include "riordan/involution.hpp"
#include "riordan/json_io.hpp"
#include "riordan/matrix.hpp"
#include "riordan/series.hpp"

namespace {

using namespace riordan;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RiordanMatrix load_matrix(const std::string& path) { return matrix_from_json_text(slurp(path)); }

// A series argument is a generating-function expression when it mentions x,
// otherwise a comma-separated coefficient list. Lists may be shorter than
// the target truncation when `pad` is set; they are zero-extended.
Series parse_series_arg(const std::string& text, int order, bool pad) {
    if (text.find('x') != std::string::npos) return eval(text, order);
    Series s = series_from_string(text);
    if (s.trunc_order() == order) return s;
    if (!pad || s.trunc_order() > order)
        throw DomainError("series truncation mismatch: list has order " +
                          std::to_string(s.trunc_order()) + ", need " + std::to_string(order));
    std::vector<Rat> c = s.coeffs();
    c.resize(static_cast<std::size_t>(order) + 1, Rat(0));
    return Series(std::move(c));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw DomainError("cannot write '" + out_path + "'");
    out << text;
}

std::string format_matrix(const RiordanMatrix& m, const std::string& format) {
    if (format == "json") return matrix_to_json(m).dump(2) + "\n";
    if (format == "triangle") return matrix_to_triangle(m);
    if (format == "csv") return matrix_to_csv(m);
    throw DomainError("unknown format '" + format + "'");
}

struct MatrixOutputOpts {
    std::string format = "json";
    std::string out_path;
};

void add_output_opts(CLI::App* cmd, MatrixOutputOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format: json, triangle or csv")
        ->check(CLI::IsMember({"json", "triangle", "csv"}));
    cmd->add_option("-o,--output", opts.out_path, "Write to a file instead of stdout");
}

int run(int argc, char** argv) {
    CLI::App app{"Exact computer algebra for truncated Riordan groups"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "Build a matrix from its defining pair (d, h)");
    std::string build_d, build_h;
    int build_n = 0;
    MatrixOutputOpts build_out;
    build->add_option("--d", build_d, "d series (expression or coefficient list)")->required();
    build->add_option("--h", build_h, "h series (expression or coefficient list)")->required();
    build->add_option("-n,--order", build_n, "Truncation order")->required();
    add_output_opts(build, build_out);

    // mul
    auto* mulc = app.add_subcommand("mul", "Multiply two matrices");
    std::vector<std::string> mul_paths;
    MatrixOutputOpts mul_out;
    mulc->add_option("paths", mul_paths, "Two matrix JSON files")->expected(2)->required();
    add_output_opts(mulc, mul_out);

    // inv
    auto* invc = app.add_subcommand("inv", "Invert a matrix");
    std::string inv_path;
    MatrixOutputOpts inv_out;
    invc->add_option("path", inv_path, "Matrix JSON file")->required();
    add_output_opts(invc, inv_out);

    // project
    auto* projc = app.add_subcommand("project", "Delete the last row and column");
    std::string proj_path;
    MatrixOutputOpts proj_out;
    projc->add_option("path", proj_path, "Matrix JSON file")->required();
    add_output_opts(projc, proj_out);

    // check
    auto* checkc = app.add_subcommand("check", "Predicates; prints true or false");
    std::string check_path;
    bool check_involution = false, check_omega0 = false, check_membership = false;
    checkc->add_flag("--involution", check_involution, "Does the matrix square to identity?");
    checkc->add_flag("--omega0", check_omega0, "Does h2^2 = h1*h3 hold?");
    checkc->add_flag("--membership", check_membership,
                     "Is the matrix in the group generated by involutions?");
    checkc->add_option("path", check_path, "Matrix JSON file")->required();

    // involution
    auto* involc = app.add_subcommand("involution", "Build an involution from sign and alpha");
    std::string invol_sign = "+", invol_alpha = "0";
    int invol_n = 0;
    MatrixOutputOpts invol_out;
    involc->add_option("--sign", invol_sign, "Corner sign: + or -")
        ->check(CLI::IsMember({"+", "-"}));
    involc->add_option("--alpha", invol_alpha, "Free coefficients (zero-extended)");
    involc->add_option("-n,--order", invol_n, "Truncation order")->required();
    add_output_opts(involc, invol_out);

    // commutator
    auto* commc = app.add_subcommand("commutator", "Write a unit-diagonal matrix as [A, B]");
    std::string comm_path, comm_r = "2", comm_out;
    commc->add_option("path", comm_path, "Matrix JSON file")->required();
    commc->add_option("--r", comm_r, "Diagonal parameter r (rational, default 2)");
    commc->add_option("-o,--output", comm_out, "Write to a file instead of stdout");

    // factor
    auto* factc = app.add_subcommand("factor", "Factor into at most four involutions");
    std::string fact_path, fact_out;
    factc->add_option("path", fact_path, "Matrix JSON file")->required();
    factc->add_option("-o,--output", fact_out, "Write to a file instead of stdout");

    // named
    auto* namedc = app.add_subcommand("named", "Built-in matrices");
    std::string named_which;
    int named_n = 0;
    MatrixOutputOpts named_out;
    namedc->add_option("name", named_which, "pascal | identity | klein:<I|NEG_I|IPLUS0|IMINUS0>")
        ->required();
    namedc->add_option("-n,--order", named_n, "Truncation order")->required();
    add_output_opts(namedc, named_out);

    // apply
    auto* applyc = app.add_subcommand("apply", "Apply a matrix to a series");
    std::string apply_path, apply_series;
    applyc->add_option("path", apply_path, "Matrix JSON file")->required();
    applyc->add_option("--series", apply_series, "Series (expression or coefficient list)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (build->parsed()) {
        if (build_n < 0) throw DomainError("order must be nonnegative");
        RiordanMatrix m = RiordanMatrix::from_dh(parse_series_arg(build_d, build_n, true),
                                                 parse_series_arg(build_h, build_n, true));
        emit(format_matrix(m, build_out.format), build_out.out_path);
    } else if (mulc->parsed()) {
        RiordanMatrix m = mul(load_matrix(mul_paths[0]), load_matrix(mul_paths[1]));
        emit(format_matrix(m, mul_out.format), mul_out.out_path);
    } else if (invc->parsed()) {
        emit(format_matrix(inverse(load_matrix(inv_path)), inv_out.format), inv_out.out_path);
    } else if (projc->parsed()) {
        emit(format_matrix(project(load_matrix(proj_path)), proj_out.format), proj_out.out_path);
    } else if (checkc->parsed()) {
        if (check_involution + check_omega0 + check_membership != 1)
            throw ParseError("check: pass exactly one of --involution, --omega0, --membership", 0);
        const RiordanMatrix m = load_matrix(check_path);
        bool result = false;
        if (check_involution) result = is_involution(m);
        if (check_omega0) result = is_omega0(m);
        if (check_membership) result = in_generated_by_involutions(m);
        std::cout << (result ? "true" : "false") << "\n";
    } else if (involc->parsed()) {
        if (invol_n < 0) throw DomainError("order must be nonnegative");
        const int alpha_order = invol_n > 0 ? invol_n - 1 : 0;
        InvolutionSpec spec{invol_sign == "+" ? 1 : -1,
                            parse_series_arg(invol_alpha, alpha_order, true)};
        emit(format_matrix(build_involution(spec, invol_n), invol_out.format), invol_out.out_path);
    } else if (commc->parsed()) {
        const RiordanMatrix m = load_matrix(comm_path);
        const auto [a, b] = commutator_decompose(m, rat_from_string(comm_r));
        Json doc;
        doc["A"] = matrix_to_json(a);
        doc["B"] = matrix_to_json(b);
        doc["verified"] = true;  // commutator_decompose verifies exactly
        emit(doc.dump(2) + "\n", comm_out);
    } else if (factc->parsed()) {
        const FactorizationCertificate cert = factor_involutions(load_matrix(fact_path));
        emit(certificate_to_json(cert).dump(2) + "\n", fact_out);
    } else if (namedc->parsed()) {
        if (named_n < 0) throw DomainError("order must be nonnegative");
        RiordanMatrix m = RiordanMatrix::identity(named_n);
        if (named_which == "pascal")
            m = RiordanMatrix::pascal(named_n);
        else if (named_which == "identity")
            m = RiordanMatrix::identity(named_n);
        else if (named_which.rfind("klein:", 0) == 0)
            m = klein(klein_tag_from_name(named_which.substr(6)), named_n);
        else
            throw DomainError("unknown named matrix '" + named_which + "'");
        emit(format_matrix(m, named_out.format), named_out.out_path);
    } else if (applyc->parsed()) {
        const RiordanMatrix m = load_matrix(apply_path);
        const Series s = parse_series_arg(apply_series, m.order(), false);
        std::cout << series_to_string(act(m, s)) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const riordan::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const riordan::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const riordan::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
