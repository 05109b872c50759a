// Command-line front end: exact invariants of finite cyclic symmetries of
// noncommutative tori, JSON in/out, and the one-shot verification suite.

#include <CLI11.hpp>
#include <iostream>

#include "nctori/catalog.hpp"
#include "nctori/cyclotomic.hpp"
#include "nctori/exactla.hpp"
#include "nctori/forms.hpp"
#include "nctori/json_io.hpp"
#include "nctori/ktheory.hpp"
#include "nctori/simplicity.hpp"
#include "nctori/weyl.hpp"

namespace {

using nctori::json_io::json;

constexpr const char *kVersion = "0.1.0";

void emit(const json &payload) { std::cout << nctori::json_io::dump_with_schema(payload); }

int cmd_cyclotomic(unsigned long n) {
    emit(json{{"n", n}, {"poly", nctori::json_io::to_json(nctori::cyclotomic::cyclotomic_poly(n))},
              {"text", nctori::cyclotomic::cyclotomic_poly(n).str()}});
    return 0;
}

int cmd_companion(unsigned long n) {
    emit(json{{"n", n},
              {"matrix", nctori::json_io::to_json(nctori::cyclotomic::companion_cyclotomic(n))}});
    return 0;
}

int cmd_phi(unsigned long n) {
    emit(json{{"n", n}, {"phi", nctori::cyclotomic::euler_phi(n)}});
    return 0;
}

int cmd_invariant_space(unsigned long cyclotomic_n, const std::string &matrix_file) {
    nctori::IntMatrix a = cyclotomic_n
                              ? nctori::cyclotomic::companion_cyclotomic(cyclotomic_n)
                              : nctori::json_io::int_matrix_from_json(
                                    nctori::json_io::load_json_file(matrix_file));
    nctori::forms::SkewFormSpace space = nctori::forms::invariant_form_space(a);
    json j = nctori::json_io::to_json(space);
    j["generic_member"] = nctori::json_io::to_json(space.generic_member());
    emit(j);
    return 0;
}

int cmd_nondegenerate(const std::string &form_file) {
    nctori::ParamMatrix theta =
        nctori::json_io::param_matrix_from_json(nctori::json_io::load_json_file(form_file));
    emit(nctori::json_io::to_json(nctori::simplicity::is_nondegenerate(theta)));
    return 0;
}

int cmd_free_check(const std::string &matrix_file, unsigned long order) {
    nctori::IntMatrix a =
        nctori::json_io::int_matrix_from_json(nctori::json_io::load_json_file(matrix_file));
    bool free = nctori::simplicity::is_free_outside_origin(a, order);
    emit(json{{"order", order}, {"free_outside_origin", free}});
    return 0;
}

int cmd_k1(unsigned long n, bool as_json) {
    nctori::ktheory::KReport report = nctori::ktheory::s1_report(n);
    if (as_json) {
        emit(nctori::json_io::to_json(report));
        return 0;
    }
    std::cout << "cyclic order n = " << report.n << ", lattice dimension d = " << report.d << "\n";
    std::cout << "degree  fixed rank\n";
    for (const auto &[l, rk] : report.per_degree_ranks)
        std::cout << "  " << l << (l < 10 ? "     " : "    ") << rk << "\n";
    std::cout << "s1 (odd-degree sum, K1 rank) = " << report.s1 << "\n";
    std::cout << "s0 = " << report.s0 << "\n";
    if (report.prime_closed_form)
        std::cout << "prime closed form check: " << report.prime_closed_form->get_str() << "\n";
    std::cout << "verdict: " << (report.af ? "AF" : "NOT_AF") << "\n";
    return 0;
}

int cmd_af_verdict(unsigned long n, const std::string &form_file, bool as_json) {
    nctori::ParamMatrix theta =
        form_file.empty()
            ? nctori::forms::canonical_nondegenerate_seed(n)
            : nctori::json_io::param_matrix_from_json(nctori::json_io::load_json_file(form_file));
    nctori::ktheory::AfReport report = nctori::ktheory::af_verdict(n, theta);
    json j{{"n", report.n},
           {"form", form_file.empty() ? "canonical nondegenerate seed" : form_file},
           {"s1", report.s1},
           {"theta_invariant", report.theta_invariant},
           {"theta_nondegenerate", report.theta_nondegenerate},
           {"free_outside_origin", report.free_outside_origin},
           {"verdict", report.verdict == nctori::ktheory::AfVerdict::AF ? "AF" : "NOT_AF"},
           {"note", "criterion-level: AF-ness is decided by the K-theoretic criterion s1 = 0 "
                    "for simple tori with an action free outside the origin"}};
    if (as_json) {
        emit(j);
    } else {
        std::cout << "n = " << n << ": " << j["verdict"].get<std::string>()
                  << " (s1 = " << report.s1 << ")\n"
                  << j["note"].get<std::string>() << "\n";
    }
    return 0;
}

int cmd_partition(unsigned long n) {
    auto cert = nctori::ktheory::partition_search(n);
    json j{{"n", n}};
    if (cert) {
        j["certificate"] = nctori::json_io::to_json(*cert);
        nctori::ktheory::WitnessPair w = nctori::ktheory::fixed_witnesses(n, *cert);
        j["wedge_coefficient"] = w.wedge_coefficient.get_str();
        j["orientation_sign"] = w.orientation_sign;
    } else {
        j["certificate"] = nullptr;
    }
    emit(j);
    return 0;
}

int cmd_action(unsigned long n, bool conjugated, const std::string &fixtures, bool as_json) {
    nctori::catalog::Dim4Fixtures f = nctori::catalog::four_torus_fixtures(fixtures);
    if (!f.companion.count(static_cast<unsigned>(n)))
        throw std::invalid_argument("action: n must be one of 5, 8, 10, 12");
    const unsigned un = static_cast<unsigned>(n);
    const nctori::IntMatrix &a = conjugated ? f.conjugated.at(un) : f.companion.at(un);
    const nctori::ParamMatrix &theta =
        conjugated ? f.theta_product : ((un == 5 || un == 10) ? f.theta_5 : f.theta_8);
    std::vector<nctori::weyl::NormalWord> table = nctori::weyl::action_table(a, theta);
    if (as_json) {
        json images = json::array();
        for (const auto &w : table) images.push_back(nctori::json_io::to_json(w));
        emit(json{{"n", n}, {"conjugated", conjugated}, {"images", std::move(images)}});
    } else {
        for (std::size_t i = 0; i < table.size(); ++i)
            std::cout << "u" << (i + 1) << " -> " << table[i].str() << "\n";
    }
    return 0;
}

int cmd_gl3_survey(const std::string &fixtures, bool as_json) {
    nctori::catalog::Gl3SurveyReport report = nctori::catalog::gl3_survey(fixtures);
    if (as_json) {
        json entries = json::array();
        for (const auto &e : report.entries) {
            json w = json::array();
            for (const auto &x : e.witness) w.push_back(x.get_str());
            entries.push_back(json{{"name", e.name},
                                   {"space_dimension", e.space_dimension},
                                   {"is_flip", e.is_flip},
                                   {"generic_degenerate", e.generic_degenerate},
                                   {"witness", std::move(w)}});
        }
        emit(json{{"entries", std::move(entries)},
                  {"flip_admits_nondegenerate", report.flip_admits_nondegenerate},
                  {"flip_only", report.flip_only}});
    } else {
        for (const auto &e : report.entries) {
            std::cout << e.name << ": invariant space dim " << e.space_dimension;
            if (e.is_flip)
                std::cout << " (flip; admits nondegenerate forms)";
            else {
                std::cout << " degenerate, witness (";
                for (std::size_t i = 0; i < e.witness.size(); ++i)
                    std::cout << (i ? "," : "") << e.witness[i].get_str();
                std::cout << ")";
            }
            std::cout << "\n";
        }
        std::cout << "verdict: "
                  << (report.flip_only ? "only the flip admits nondegenerate invariant forms"
                                       : "COUNTEREXAMPLE FOUND")
                  << "\n";
    }
    return report.flip_only ? 0 : 1;
}

int cmd_verify_paper(const std::string &fixtures, bool as_json) {
    nctori::catalog::VerifyReport report = nctori::catalog::verify_paper_report(fixtures);
    if (as_json) {
        json checks = json::array();
        for (const auto &c : report.checks)
            checks.push_back(json{{"name", c.name},
                                  {"claim", c.claim},
                                  {"pass", c.passed},
                                  {"criterion_level", c.criterion_level},
                                  {"details", c.details}});
        emit(json{{"command", "verify-paper"},
                  {"version", kVersion},
                  {"checks", std::move(checks)},
                  {"all_passed", report.all_passed()}});
    } else {
        for (const auto &c : report.checks) {
            std::cout << (c.passed ? "PASS" : "FAIL") << "  " << c.name;
            if (c.criterion_level) std::cout << "  [criterion-level]";
            std::cout << "\n      " << c.claim << "\n      -> " << c.details << "\n";
        }
        std::cout << (report.all_passed() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    }
    return report.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact invariants of finite cyclic symmetries of noncommutative tori"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string fixtures = nctori::catalog::default_fixture_dir();
    app.add_option("--fixtures", fixtures, "fixture directory")->capture_default_str();

    unsigned long n = 0;
    std::string matrix_file, form_file;
    bool as_json = false, conjugated = false;
    unsigned long cyclotomic_n = 0, order = 0;

    CLI::App *c_cyc = app.add_subcommand("cyclotomic", "n-th cyclotomic polynomial");
    c_cyc->add_option("n", n)->required()->check(CLI::PositiveNumber);

    CLI::App *c_comp = app.add_subcommand("companion", "companion matrix of the n-th cyclotomic polynomial");
    c_comp->add_option("n", n)->required()->check(CLI::PositiveNumber);

    CLI::App *c_phi = app.add_subcommand("phi", "Euler totient");
    c_phi->add_option("n", n)->required()->check(CLI::PositiveNumber);

    CLI::App *c_inv = app.add_subcommand("invariant-space", "basis of the invariant skew forms");
    c_inv->add_option("--cyclotomic", cyclotomic_n, "use the cyclotomic companion matrix of this order");
    c_inv->add_option("--matrix", matrix_file, "integer matrix JSON file");

    CLI::App *c_nd = app.add_subcommand("nondegenerate", "nondegeneracy verdict for a skew form");
    c_nd->add_option("--form", form_file, "parametrized form JSON file")->required();

    CLI::App *c_free = app.add_subcommand("free-check", "freeness outside the origin");
    c_free->add_option("--matrix", matrix_file, "integer matrix JSON file")->required();
    c_free->add_option("--order", order, "group order")->required()->check(CLI::PositiveNumber);

    CLI::App *c_k1 = app.add_subcommand("k1", "fixed exterior ranks and the K1 rank s1");
    c_k1->add_option("n", n)->required()->check(CLI::Range(2ul, 1000000ul));
    c_k1->add_flag("--json", as_json);

    CLI::App *c_af = app.add_subcommand("af-verdict", "AF verdict for the crossed product");
    c_af->add_option("n", n)->required()->check(CLI::Range(2ul, 1000000ul));
    c_af->add_option("--form", form_file, "parametrized form JSON file (default: canonical seed)");
    c_af->add_flag("--json", as_json);

    CLI::App *c_part = app.add_subcommand("partition", "odd-odd residue-covering partition certificate");
    c_part->add_option("n", n)->required()->check(CLI::PositiveNumber);

    CLI::App *c_act = app.add_subcommand("action", "generator images of the canonical action");
    c_act->add_option("--n", n, "group order (5, 8, 10, 12)")->required();
    c_act->add_flag("--conjugated", conjugated, "use the conjugated generator on the product form");
    c_act->add_flag("--json", as_json);

    CLI::App *c_gl3 = app.add_subcommand("gl3-survey", "survey of rank-3 finite-order symmetries");
    c_gl3->add_flag("--json", as_json);

    CLI::App *c_verify = app.add_subcommand("verify-paper", "run the full fixture verification suite");
    c_verify->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
        app.exit(e);
        return 2;
    }

    try {
        if (c_cyc->parsed()) return cmd_cyclotomic(n);
        if (c_comp->parsed()) return cmd_companion(n);
        if (c_phi->parsed()) return cmd_phi(n);
        if (c_inv->parsed()) {
            if ((cyclotomic_n == 0) == matrix_file.empty())
                throw std::invalid_argument("invariant-space: pass exactly one of --cyclotomic, --matrix");
            return cmd_invariant_space(cyclotomic_n, matrix_file);
        }
        if (c_nd->parsed()) return cmd_nondegenerate(form_file);
        if (c_free->parsed()) return cmd_free_check(matrix_file, order);
        if (c_k1->parsed()) return cmd_k1(n, as_json);
        if (c_af->parsed()) return cmd_af_verdict(n, form_file, as_json);
        if (c_part->parsed()) return cmd_partition(n, as_json);
        if (c_act->parsed()) return cmd_action(n, conjugated, fixtures, as_json);
        if (c_gl3->parsed()) return cmd_gl3_survey(fixtures, as_json);
        if (c_verify->parsed()) return cmd_verify_paper(fixtures, as_json);
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
