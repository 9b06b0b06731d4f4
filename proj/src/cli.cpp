#include "valfactor/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "valfactor/errors.hpp"
#include "valfactor/json_io.hpp"

namespace valfactor {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot read input file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string render(const json& doc) { return doc.dump(2) + "\n"; }

json matrix_rows(const IntMat& m) { return monomap_json(m).at("rows"); }

int do_factor(const std::string& in_path, const std::string& out_path, bool trace,
              long cap, std::ostream& out, std::ostream& err) {
    FactorProblem p = parse_factor_problem(parse_text(read_file(in_path)));
    ZigzagCert cert = zigzag_factor(p.map, p.weights, cap);
    if (trace) {
        err << "factored a " << cert.n << "-variable map into " << cert.arrows.size()
            << " upper node(s)\n";
        for (std::size_t k = 0; k < cert.arrows.size(); ++k)
            err << "  node " << 2 * k + 2 << ": left " << cert.arrows[k].left.size()
                << " move(s), right " << cert.arrows[k].right.size() << " move(s)\n";
    }
    const std::string bytes = render(cert_json(cert));
    out << bytes;
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw input_error("cannot write output file " + out_path);
        f << bytes;
    }
    return 0;
}

int do_verify(const std::string& in_path, bool trace, std::ostream& out,
              std::ostream& err) {
    ZigzagCert cert = parse_cert(parse_text(read_file(in_path)));
    VerifyReport rep = verify_zigzag(cert);
    json doc;
    doc["accepted"] = rep.accepted;
    if (!rep.accepted) doc["reason"] = rep.reason;
    out << render(doc);
    if (trace) {
        if (rep.accepted) err << "accepted\n";
        else err << "rejected: " << rep.reason << "\n";
    }
    return rep.accepted ? 0 : 1;
}

int do_monomialize(const std::string& in_path, bool trace, long cap, std::ostream& out,
                   std::ostream& err) {
    MonomializeProblem p = parse_monomialize_problem(parse_text(read_file(in_path)));
    MonomialForm form = monomialize(p.poly, p.weights, cap);
    json monomial = json::array();
    for (const mpz_class& e : form.monomial) monomial.push_back(json_int(e));
    json doc{{"A", matrix_rows(form.transform.A)},
             {"steps", form.transform.steps},
             {"monomial", std::move(monomial)},
             {"unit", poly_json(form.unit)}};
    out << render(doc);
    if (trace)
        err << "monomialized after " << form.transform.steps << " step(s), unit has "
            << form.unit.terms.size() << " term(s)\n";
    return 0;
}

int do_perron(const std::string& weights_path, long steps, bool trace, std::ostream& out,
              std::ostream& err) {
    std::vector<Value> tau = parse_weights(parse_text(read_file(weights_path)), "weights");
    PerronRun run = perron_accumulate(tau, steps);
    json digits = json::array();
    for (const auto& row : run.digits) {
        json d = json::array();
        for (const mpz_class& a : row) d.push_back(json_int(a));
        digits.push_back(std::move(d));
    }
    json doc{{"A", matrix_rows(run.mat.A)},
             {"det", json_int(det(run.mat.A))},
             {"tau_h", weights_json(run.tau_h)},
             {"digits", std::move(digits)}};
    out << render(doc);
    if (trace) err << "accumulated " << steps << " step(s)\n";
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact factorization of monomial maps along a valuation"};
    app.require_subcommand(1);

    std::string in_path, out_path, weights_path;
    bool trace = false;
    long cap = default_cap;
    long steps = 0;

    CLI::App* factor = app.add_subcommand("factor", "factor a monomial map into a zigzag certificate");
    factor->add_option("-i,--input", in_path, "problem JSON file")->required();
    factor->add_option("-o,--output", out_path, "also write the certificate to this file");
    factor->add_flag("--trace", trace, "human-readable progress on stderr");
    factor->add_option("--cap", cap, "iteration cap for every internal search");

    CLI::App* verify = app.add_subcommand("verify", "check a zigzag certificate");
    verify->add_option("-i,--input", in_path, "certificate JSON file")->required();
    verify->add_flag("--trace", trace, "report the verdict on stderr");

    CLI::App* mono = app.add_subcommand("monomialize", "rewrite a polynomial as a monomial times a unit");
    mono->add_option("-i,--input", in_path, "problem JSON file")->required();
    mono->add_flag("--trace", trace, "human-readable progress on stderr");
    mono->add_option("--cap", cap, "iteration cap for the substitution search");

    CLI::App* perron = app.add_subcommand("perron", "accumulate continued-fraction steps on a weight vector");
    perron->add_option("--weights", weights_path, "weights JSON file")->required();
    perron->add_option("--steps", steps, "number of steps")->required();
    perron->add_flag("--trace", trace, "report progress on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (factor->parsed()) return do_factor(in_path, out_path, trace, cap, out, err);
        if (verify->parsed()) return do_verify(in_path, trace, out, err);
        if (mono->parsed()) return do_monomialize(in_path, trace, cap, out, err);
        if (perron->parsed()) return do_perron(weights_path, steps, trace, out, err);
        err << "error: no subcommand\n";
        return 2;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const cap_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const input_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace valfactor
