#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "codo/errors.hpp"
#include "codo/families.hpp"
#include "codo/io.hpp"
#include "codo/spectral.hpp"

namespace {

// exit codes: 0 success, 1 mathematical failure, 2 usage or I/O
struct CliIoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliIoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw CliIoError("cannot write " + path);
}

codo::Scalar scalar_flag(const std::string& text) {
    return codo::Scalar(codo::Rational::from_string(text));
}

struct ConstructFlags {
    std::string family;
    int n = 1;
    std::string alpha0 = "0", alpha2 = "0", beta = "0";
    std::string gamma;
    std::string g2 = "0";
    int trunc = 0;
    std::string mu1 = "1", mu2 = "-1";
    std::string out_l, out_m;
};

int run_construct(const ConstructFlags& f) {
    codo::BuiltPair pair;
    if (f.family == "theorem2") {
        codo::Theorem2Params p;
        p.n = f.n;
        p.alpha0 = codo::Rational::from_string(f.alpha0);
        p.alpha2 = codo::Rational::from_string(f.alpha2);
        p.beta = codo::Rational::from_string(f.beta);
        p.mu1 = scalar_flag(f.mu1);
        p.mu2 = scalar_flag(f.mu2);
        if (!f.gamma.empty()) p.gamma = scalar_flag(f.gamma);
        pair = codo::build_theorem2(p);
    } else {
        codo::Theorem3Params p;
        p.n = f.n;
        p.g2 = codo::Rational::from_string(f.g2);
        p.mu1 = scalar_flag(f.mu1);
        p.mu2 = scalar_flag(f.mu2);
        p.trunc = f.trunc;
        pair = codo::build_theorem3(p);
    }
    std::cout << "constructed " << f.family << " pair: order(L) = " << pair.L.order()
              << ", order(M) = " << pair.M.order() << "\n";
    for (const auto& [id, value] : pair.constants.assignment)
        std::cout << id.to_string() << " = " << value.to_string() << "\n";
    if (!pair.window.unbounded())
        std::cout << "certified window: [" << pair.window.low << ", " << pair.window.trunc
                  << ") (" << pair.window.orders() << " orders)\n";
    spill(f.out_l, codo::render_operator(pair.L, pair.d));
    std::cout << "wrote " << f.out_l << "\n";
    spill(f.out_m, codo::render_operator(pair.M, pair.d));
    std::cout << "wrote " << f.out_m << "\n";
    return 0;
}

struct PairFlags {
    std::string l_path, m_path;
    int degz = -1;
    bool check_reducible = false;
    bool check_nonsingular = false;
};

int run_verify(const PairFlags& f) {
    codo::ParsedOperator l = codo::parse_operator(slurp(f.l_path));
    codo::ParsedOperator m = codo::parse_operator(slurp(f.m_path));
    codo::DiffOperator c = codo::commutator(l.op, m.op);
    if (c.is_zero()) {
        std::cout << "COMMUTE\n";
        return 0;
    }
    std::cout << "NONZERO at " << codo::first_nonzero(c)->to_string() << "\n";
    return 1;
}

int print_curve_block(const codo::DiffOperator& l, const codo::DiffOperator& m,
                      const PairFlags& f) {
    int degz = f.degz >= 0 ? f.degz : std::max(m.order(), 1);
    codo::RelationResult rel = codo::find_quadratic_relation(l, m, degz);
    std::cout << "relation: " << rel.curve.to_string() << " = 0\n";
    if (!rel.unique)
        std::cout << "note: relation not unique at this degree; "
                     "free coefficients pinned to zero\n";
    if (!codo::eval_relation(rel.curve, l, m).is_zero())
        throw codo::Error("relation residual unexpectedly nonzero");

    const bool quadratic = rel.curve.wdegree() == 2;
    std::optional<codo::Reducibility> red;
    if (quadratic) red = codo::reducibility_quadratic(rel.curve);

    if (f.check_reducible) {
        if (!quadratic) {
            std::cout << "reducible: not applicable (relation is linear in w)\n";
        } else if (red->reducible) {
            std::cout << "reducible: yes\n";
            std::cout << "factor: " << red->f1.to_string() << "\n";
            std::cout << "factor: " << red->f2.to_string() << "\n";
        } else {
            std::cout << "reducible: no (over the session field)\n";
        }
    }
    if (f.check_nonsingular) {
        if (!quadratic) {
            std::cout << "nonsingular: not applicable (relation is linear in w)\n";
        } else {
            std::cout << "discriminant: " << red->discriminant.to_string("z") << "\n";
            std::cout << "nonsingular: "
                      << (codo::nonsingular_hyperelliptic(red->discriminant) ? "yes" : "no")
                      << "\n";
        }
    }
    return 0;
}

int run_curve(const PairFlags& f) {
    codo::ParsedOperator l = codo::parse_operator(slurp(f.l_path));
    codo::ParsedOperator m = codo::parse_operator(slurp(f.m_path));
    return print_curve_block(l.op, m.op, f);
}

int run_report(const PairFlags& f) {
    codo::ParsedOperator l = codo::parse_operator(slurp(f.l_path));
    codo::ParsedOperator m = codo::parse_operator(slurp(f.m_path));
    std::cout << "codo report 1\n";
    std::cout << "l: " << f.l_path << " (order " << l.op.order() << ")\n";
    std::cout << "m: " << f.m_path << " (order " << m.op.order() << ")\n";
    std::cout << "ring: "
              << (l.op.tag() == codo::RingTag::Polynomial ? "polynomial" : "laurent") << "\n";

    codo::DiffOperator c = codo::commutator(l.op, m.op);
    if (!c.is_zero()) {
        std::cout << "commute: no (" << codo::first_nonzero(c)->to_string() << ")\n";
        return 1;
    }
    std::cout << "commute: yes\n";
    if (l.op.tag() == codo::RingTag::Laurent) {
        codo::CommutationWindow w = codo::commutation_window(l.op, m.op);
        if (!w.unbounded())
            std::cout << "certified window: [" << w.low << ", " << w.trunc << ") ("
                      << w.orders() << " orders)\n";
        return 0;
    }
    PairFlags full = f;
    full.check_reducible = true;
    full.check_nonsingular = true;
    return print_curve_block(l.op, m.op, full);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact commuting pairs of 2x2 differential operators"};
    app.require_subcommand(1);

    ConstructFlags cf;
    CLI::App* construct = app.add_subcommand(
        "construct", "build a commuting pair (L, M) from one of the two families");
    construct->add_option("--family", cf.family, "theorem2 or theorem3")
        ->required()
        ->check(CLI::IsMember({"theorem2", "theorem3"}));
    construct->add_option("--n", cf.n, "family index n >= 1")->check(CLI::PositiveNumber);
    construct->add_option("--alpha0", cf.alpha0, "rational, theorem2 only");
    construct->add_option("--alpha2", cf.alpha2, "rational, theorem2 only");
    construct->add_option("--beta", cf.beta, "rational, theorem2 only");
    construct->add_option("--gamma", cf.gamma,
                          "rational override of the offdiagonal slope (theorem2)");
    construct->add_option("--g2", cf.g2, "rational, theorem3 only");
    construct->add_option("--trunc", cf.trunc, "working truncation order (theorem3)");
    construct->add_option("--mu1", cf.mu1, "rational leading constant");
    construct->add_option("--mu2", cf.mu2, "rational leading constant");
    construct->add_option("--out-l", cf.out_l, "path for the L document")->required();
    construct->add_option("--out-m", cf.out_m, "path for the M document")->required();

    PairFlags vf;
    CLI::App* verify = app.add_subcommand("verify", "check [L, M] = 0 from documents");
    verify->add_option("--l", vf.l_path, "L document")->required();
    verify->add_option("--m", vf.m_path, "M document")->required();

    PairFlags qf;
    CLI::App* curve = app.add_subcommand("curve", "find the spectral relation R(z, w)");
    curve->add_option("--l", qf.l_path, "L document")->required();
    curve->add_option("--m", qf.m_path, "M document")->required();
    curve->add_option("--degz", qf.degz, "z-degree bound")->required();
    curve->add_flag("--check-reducible", qf.check_reducible,
                    "attempt to split the relation over the session field");
    curve->add_flag("--check-nonsingular", qf.check_nonsingular,
                    "test squarefreeness of the discriminant");

    PairFlags rf;
    CLI::App* report = app.add_subcommand("report", "verify + curve + analysis in one run");
    report->add_option("--l", rf.l_path, "L document")->required();
    report->add_option("--m", rf.m_path, "M document")->required();
    report->add_option("--degz", rf.degz, "z-degree bound (default: order of M)");

    int rc = 0;
    construct->callback([&] { rc = run_construct(cf); });
    verify->callback([&] { rc = run_verify(vf); });
    curve->callback([&] { rc = run_curve(qf); });
    report->callback([&] { rc = run_report(rf); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const codo::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const codo::VersionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const codo::InvalidRational& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CliIoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const codo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
