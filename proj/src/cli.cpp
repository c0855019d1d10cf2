#include "leosys/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "leosys/families.hpp"
#include "leosys/verify.hpp"

namespace leosys {

namespace {

ParameterArray load_array(const std::string& path, std::istream& in) {
    if (path == "-") return read_parameter_file(in);
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open " + path);
    return read_parameter_file(file);
}

void emit_file(const ParameterArray& pa, const std::string& path, std::ostream& out,
               const std::string& comment) {
    std::ostringstream buffer;
    if (!comment.empty()) buffer << "# " << comment << "\n";
    write_parameter_file(buffer, pa);
    if (path.empty() || path == "-") {
        out << buffer.str();
        return;
    }
    std::ofstream file(path);
    if (!file) throw ParseError("cannot open " + path);
    file << buffer.str();
}

std::vector<FieldElement> parse_eps_list(const std::string& text, const FieldDescriptor& desc) {
    std::vector<FieldElement> out;
    std::string part;
    std::istringstream is(text);
    while (std::getline(is, part, ',')) out.push_back(parse_element(part, desc));
    return out;
}

void require_valid(const ParameterArray& pa) {
    ValidationReport report = validate(pa);
    if (!report.valid)
        throw Error("parameter array is not a Leonard system:\n" + report.to_string());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Exact Leonard-system workbench: 24 bases, transition matrices, "
                 "orthogonal-polynomial data"};
    app.require_subcommand(1);

    // validate
    std::string validate_file;
    auto* cmd_validate = app.add_subcommand("validate", "check the classification conditions");
    cmd_validate->add_option("file", validate_file, "parameter file, - for stdin")->required();

    // family
    auto* cmd_family = app.add_subcommand("family", "emit a parameter file for a named family");
    cmd_family->require_subcommand(1);
    long fam_d = 3;
    std::string fam_field = "Q", fam_out;
    auto* cmd_kraw = cmd_family->add_subcommand("krawtchouk", "theta_i = d-2i family");
    cmd_kraw->add_option("--d", fam_d, "diameter")->required();
    cmd_kraw->add_option("--field", fam_field, "Q or GF(p), default Q");
    cmd_kraw->add_option("-o,--output", fam_out, "output file (default stdout)");

    std::string qr_q, qr_h, qr_hs, qr_s, qr_ss, qr_r1, qr_t0 = "0", qr_ts0 = "0";
    auto* cmd_qracah = cmd_family->add_subcommand("q-racah", "q-Racah parametrization");
    cmd_qracah->set_help_flag("--help", "print help");  // frees -h / --h for the h parameter
    cmd_qracah->add_option("--d", fam_d, "diameter")->required();
    cmd_qracah->add_option("--q", qr_q)->required();
    cmd_qracah->add_option("--h", qr_h)->required();
    cmd_qracah->add_option("--hs", qr_hs, "h*")->required();
    cmd_qracah->add_option("--s", qr_s)->required();
    cmd_qracah->add_option("--ss", qr_ss, "s*")->required();
    cmd_qracah->add_option("--r1", qr_r1)->required();
    cmd_qracah->add_option("--theta0", qr_t0, "theta_0 (default 0)");
    cmd_qracah->add_option("--thetas0", qr_ts0, "theta*_0 (default 0)");
    cmd_qracah->add_option("--field", fam_field, "Q or GF(p), default Q");
    cmd_qracah->add_option("-o,--output", fam_out, "output file (default stdout)");

    // rep
    std::string rep_file, rep_basis;
    bool rep_pretty = false;
    auto* cmd_rep = app.add_subcommand("rep", "print the matrices representing the pair");
    cmd_rep->add_option("file", rep_file, "parameter file, - for stdin")->required();
    cmd_rep->add_option("--basis", rep_basis, "basis label, e.g. d*0*0d")->required();
    cmd_rep->add_flag("--pretty", rep_pretty, "aligned columns");

    // transition
    std::string tr_file, tr_from, tr_to, tr_eps;
    bool tr_pretty = false;
    auto* cmd_tr = app.add_subcommand("transition", "print a transition matrix");
    cmd_tr->add_option("file", tr_file, "parameter file, - for stdin")->required();
    cmd_tr->add_option("--from", tr_from, "source basis label")->required();
    cmd_tr->add_option("--to", tr_to, "target basis label")->required();
    cmd_tr->add_option("--eps", tr_eps, "eps0,epsd,eps0*,epsd* (default all ones)");
    cmd_tr->add_flag("--pretty", tr_pretty, "aligned columns");

    // askey
    std::string askey_file;
    bool askey_pretty = false;
    auto* cmd_askey = app.add_subcommand("askey", "print P, P*, k, k*, nu and residuals");
    cmd_askey->add_option("file", askey_file, "parameter file, - for stdin")->required();
    cmd_askey->add_flag("--pretty", askey_pretty, "aligned columns");

    // verify
    std::string verify_file;
    bool verify_deep = false;
    long verify_max_d = 5;
    auto* cmd_verify = app.add_subcommand("verify", "run the invariant suite");
    cmd_verify->add_option("file", verify_file, "parameter file, - for stdin")->required();
    cmd_verify->add_flag("--deep", verify_deep, "include brute-force oracle cross-checks");
    cmd_verify->add_option("--max-d", verify_max_d, "oracle scale cap (default 5)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_validate->parsed()) {
            ParameterArray pa = load_array(validate_file, in);
            ValidationReport report = validate(pa);
            out << report.to_string();
            return report.valid ? 0 : 1;
        }
        if (cmd_kraw->parsed()) {
            ParameterArray pa = krawtchouk_array(fam_d, FieldDescriptor::parse(fam_field));
            emit_file(pa, fam_out, out, "krawtchouk family, d = " + std::to_string(fam_d));
            return 0;
        }
        if (cmd_qracah->parsed()) {
            QRacahParams p;
            p.d = fam_d;
            p.field = FieldDescriptor::parse(fam_field);
            p.q = parse_element(qr_q, p.field);
            p.h = parse_element(qr_h, p.field);
            p.h_star = parse_element(qr_hs, p.field);
            p.s = parse_element(qr_s, p.field);
            p.s_star = parse_element(qr_ss, p.field);
            p.r1 = parse_element(qr_r1, p.field);
            p.theta0 = parse_element(qr_t0, p.field);
            p.theta_star0 = parse_element(qr_ts0, p.field);
            ParameterArray pa = q_racah_array(p);
            emit_file(pa, fam_out, out, "q-racah family, d = " + std::to_string(fam_d));
            return 0;
        }
        if (cmd_rep->parsed()) {
            ParameterArray pa = load_array(rep_file, in);
            require_valid(pa);
            RepresentationPair rep = representation(pa, BasisLabel::parse(rep_basis));
            out << "A:\n" << format_matrix(rep.a_rep, rep_pretty);
            out << "A*:\n" << format_matrix(rep.a_star_rep, rep_pretty);
            return 0;
        }
        if (cmd_tr->parsed()) {
            ParameterArray pa = load_array(tr_file, in);
            require_valid(pa);
            EpsilonConfig eps = EpsilonConfig::ones(pa.field);
            if (!tr_eps.empty()) {
                auto parts = parse_eps_list(tr_eps, pa.field);
                if (parts.size() != 4)
                    throw ParseError("--eps needs four comma-separated elements");
                eps = EpsilonConfig{parts[0], parts[1], parts[2], parts[3]};
            }
            MatrixF t = transition_any(pa, eps, BasisLabel::parse(tr_from),
                                       BasisLabel::parse(tr_to));
            out << format_matrix(t, tr_pretty);
            return 0;
        }
        if (cmd_askey->parsed()) {
            ParameterArray pa = load_array(askey_file, in);
            require_valid(pa);
            AskeyData data = askey_data(pa);
            out << "P:\n" << format_matrix(data.p, askey_pretty);
            out << "P*:\n" << format_matrix(data.p_star, askey_pretty);
            auto row = [&](const char* name, const std::vector<FieldElement>& v) {
                out << name << ":";
                for (const auto& x : v) out << ' ' << x.to_string();
                out << '\n';
            };
            row("k", data.k);
            row("k*", data.k_star);
            out << "nu: " << data.nu.to_string() << '\n';
            const long d = pa.d;
            MatrixF poly(d + 1, d + 1);
            for (long i = 0; i <= d; ++i)
                for (long j = 0; j <= d; ++j) poly(i, j) = p_poly_value(pa, i, j);
            MatrixF res_row = MatrixF::Zero(d + 1, d + 1);
            MatrixF res_col = MatrixF::Zero(d + 1, d + 1);
            for (long i = 0; i <= d; ++i)
                for (long j = 0; j <= d; ++j) {
                    FieldElement srow = FieldElement::zero(pa.field);
                    FieldElement scol = FieldElement::zero(pa.field);
                    for (long nn = 0; nn <= d; ++nn) {
                        srow = srow + poly(i, nn) * poly(j, nn) * data.k[static_cast<std::size_t>(nn)];
                        scol = scol +
                               poly(nn, i) * poly(nn, j) * data.k_star[static_cast<std::size_t>(nn)];
                    }
                    if (i == j) {
                        srow = srow - data.nu / data.k_star[static_cast<std::size_t>(j)];
                        scol = scol - data.nu / data.k[static_cast<std::size_t>(j)];
                    }
                    res_row(i, j) = srow;
                    res_col(i, j) = scol;
                }
            out << "orthogonality residual (rows):\n" << format_matrix(res_row, askey_pretty);
            out << "orthogonality residual (columns):\n" << format_matrix(res_col, askey_pretty);
            return is_zero_matrix(res_row) && is_zero_matrix(res_col) ? 0 : 1;
        }
        if (cmd_verify->parsed()) {
            ParameterArray pa = load_array(verify_file, in);
            VerifyOptions opts;
            opts.deep = verify_deep;
            opts.max_d = verify_max_d;
            auto results = run_verification(pa, opts);
            for (const auto& r : results) {
                out << "CHECK " << r.name;
                if (!r.labels.empty()) out << ' ' << r.labels;
                out << (r.pass ? " PASS" : " FAIL") << '\n';
            }
            bool ok = all_passed(results);
            out << (ok ? "VERIFY PASS" : "VERIFY FAIL") << '\n';
            return ok ? 0 : 1;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace leosys
