#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <aon/aon.hpp>

namespace {

struct Options {
    std::string input = "-";
    std::string format = "json";
    std::int64_t budget = 10000000;
};

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f)
        throw aon::ParseError("cannot open input file: " + path);
    ss << f.rdbuf();
    return ss.str();
}

aon::Matrix load_matrix(const Options& opt) {
    return aon::parse_matrix_document(aon::parse_json_text(read_input(opt.input)));
}

aon::CharacterAlgebra load_algebra(const Options& opt) {
    return aon::parse_algebra_document(aon::parse_json_text(read_input(opt.input)));
}

void print_json(const aon::Json& j) { std::cout << j.dump(2) << "\n"; }

void print_matrix(const aon::Matrix& m) {
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            width[j] = std::max(width[j], m.at(i, j).str().size());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::cout << "[ ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const std::string s = m.at(i, j).str();
            std::cout << std::string(width[j] - s.size(), ' ') << s
                      << (j + 1 < m.cols() ? "  " : " ");
        }
        std::cout << "]\n";
    }
}

void print_scalar_list(const std::string& label, const std::vector<aon::Scalar>& v) {
    std::cout << label << ":";
    for (const aon::Scalar& s : v)
        std::cout << " " << s.str();
    std::cout << "\n";
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

void run_classify(const Options& opt) {
    const aon::Matrix m = load_matrix(opt);
    const aon::ClassificationReport rep = aon::classify(m);
    if (opt.format == "json") {
        print_json(aon::emit_classification(rep));
        return;
    }
    std::cout << "field: " << m.spec().str() << "\n";
    std::cout << "invertible: " << yesno(rep.invertible) << "\n";
    std::cout << "solid: " << yesno(rep.solid) << "\n";
    std::cout << "normalized: " << yesno(rep.normalized) << "\n";
    std::cout << "ao: " << yesno(rep.ao) << "\n";
    if (rep.ao_witness) {
        print_scalar_list("ao witness h", rep.ao_witness->h);
        print_scalar_list("ao witness k", rep.ao_witness->k);
    }
}

void run_normalize(const Options& opt) {
    const aon::Matrix out = aon::normalize(load_matrix(opt));
    if (opt.format == "json") {
        print_json(aon::emit_matrix_document(out));
        return;
    }
    std::cout << "field: " << out.spec().str() << "\n";
    print_matrix(out);
}

void run_ao(const Options& opt) {
    const aon::Matrix m = load_matrix(opt);
    const auto witness = aon::check_ao(m);
    if (opt.format == "json") {
        aon::Json out{{"ao", witness.has_value()}};
        out["witness"] = witness ? aon::emit_witness(*witness) : aon::Json(nullptr);
        print_json(out);
        return;
    }
    std::cout << "ao: " << yesno(witness.has_value()) << "\n";
    if (witness) {
        print_scalar_list("witness h", witness->h);
        print_scalar_list("witness k", witness->k);
    }
}

void run_eigendata(const Options& opt) {
    const aon::Matrix m = load_matrix(opt);
    if (!aon::is_normalized(m) || !aon::check_ao(m))
        throw aon::NotAONError("input matrix is not AO normalized");
    const aon::EigendataReport rep = aon::eigendata(aon::build_phi_r(m));
    if (opt.format == "json") {
        print_json(aon::emit_eigendata(rep));
        return;
    }
    std::cout << "P:\n";
    print_matrix(rep.p);
    std::cout << "Q:\n";
    print_matrix(rep.q);
    std::cout << "nu: " << rep.nu.str() << "\n";
    print_scalar_list("k", rep.k);
    print_scalar_list("kstar", rep.kstar);
    print_scalar_list("m", rep.m);
    print_scalar_list("mstar", rep.mstar);
    const std::size_t n = rep.p.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::cout << "pnum[" << i << "][" << j << "]:";
            for (std::size_t h = 0; h < n; ++h)
                std::cout << " " << rep.pnum.at(i, j, h).str();
            std::cout << "\n";
        }
}

void run_dual(const Options& opt) {
    const aon::Matrix out = aon::dual_aon(load_matrix(opt));
    if (opt.format == "json") {
        print_json(aon::emit_matrix_document(out));
        return;
    }
    std::cout << "field: " << out.spec().str() << "\n";
    print_matrix(out);
}

void run_character(const Options& opt) {
    const aon::CharacterAlgebra alg = load_algebra(opt);
    {
        const std::vector<std::string> failures = aon::detail::algebra_axiom_failures(alg);
        if (!failures.empty())
            throw aon::AxiomViolationError("character algebra axioms fail: " + failures.front());
    }
    const aon::CharacterSystem sys = aon::semisimple_decompose(alg);
    if (opt.format == "json") {
        print_json(aon::emit_character_system(sys));
        return;
    }
    std::cout << "field: " << sys.spec().str() << "\n";
    std::cout << "eigenmatrix:\n";
    print_matrix(sys.p);
    print_scalar_list("valencies", sys.algebra.k);
    const auto idem = aon::idempotent_coordinates(sys);
    for (std::size_t i = 0; i < idem.size(); ++i)
        print_scalar_list("e_" + std::to_string(i), idem[i]);
}

void run_enumerate(const Options& opt, std::int64_t d, std::int64_t p) {
    if (d < 0)
        throw aon::ParseError("diameter must be nonnegative");
    const aon::CensusResult census =
        aon::enumerate_census(static_cast<std::size_t>(d), p, aon::Int(opt.budget));
    if (opt.format == "json") {
        print_json(aon::emit_census(census));
        return;
    }
    std::cout << "field: " << census.spec.str() << ", d = " << census.d << "\n";
    std::cout << "candidates: " << census.candidates.str() << "\n";
    std::cout << "normalized solid: " << census.normalized_solid.size() << "\n";
    std::cout << "aon: " << census.aon_count << "\n";
    for (const aon::CensusEntry& entry : census.normalized_solid) {
        std::cout << (entry.ao ? "aon member:\n" : "normalized solid (not ao):\n");
        print_matrix(entry.matrix);
    }
}

int run_verify(const Options& opt) {
    const aon::Matrix m = load_matrix(opt);
    const aon::VerifyReport rep = aon::run_matrix_suite(m);
    if (opt.format == "json") {
        print_json(aon::emit_verify_report(rep));
    } else {
        for (const aon::CheckResult& c : rep.checks) {
            const char* tag = c.status == aon::CheckStatus::pass     ? "[PASS]"
                              : c.status == aon::CheckStatus::fail   ? "[FAIL]"
                                                                     : "[SKIP]";
            std::cout << tag << " " << c.name;
            if (!c.detail.empty())
                std::cout << " (" << c.detail << ")";
            std::cout << "\n";
        }
        std::cout << (rep.all_passed() ? "all checks passed" : "some checks failed") << "\n";
    }
    return rep.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of solid matrices, idempotent systems "
                 "and character systems"};
    app.require_subcommand(1);

    Options opt;
    std::int64_t d = 0;
    std::int64_t p = 2;

    std::function<int()> action;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", opt.input, "input document path, - for stdin")
            ->capture_default_str();
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "pretty"}))
            ->capture_default_str();
        sub->add_option("--budget", opt.budget, "enumeration candidate budget")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };
    auto add_sub = [&](const std::string& name, const std::string& desc,
                       std::function<int()> fn) {
        CLI::App* sub = app.add_subcommand(name, desc);
        add_common(sub);
        sub->callback([&action, fn]() { action = fn; });
        return sub;
    };

    add_sub("classify", "report invertible / solid / normalized / AO flags",
            [&]() { run_classify(opt); return 0; });
    add_sub("normalize", "emit the normalized representative of a solid matrix",
            [&]() { run_normalize(opt); return 0; });
    add_sub("ao", "check transpose-inverse diagonal equivalence and emit the witness",
            [&]() { run_ao(opt); return 0; });
    add_sub("eigendata", "full eigenmatrix report of an AO normalized matrix",
            [&]() { run_eigendata(opt); return 0; });
    add_sub("dual", "emit the dual of an AO normalized matrix",
            [&]() { run_dual(opt); return 0; });
    add_sub("character", "decompose a character algebra given by structure constants",
            [&]() { run_character(opt); return 0; });
    CLI::App* enumerate = add_sub("enumerate", "census of AO normalized matrices over F_p",
                                  [&]() { run_enumerate(opt, d, p); return 0; });
    enumerate->add_option("-d,--diameter", d, "diameter (matrix size minus one)")->required();
    enumerate->add_option("-p,--prime", p, "field characteristic")->required();
    add_sub("verify", "run every applicable invariant suite on a matrix",
            [&]() { return run_verify(opt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action();
    } catch (const aon::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const aon::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
