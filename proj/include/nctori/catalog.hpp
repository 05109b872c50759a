#pragma once

#include <map>
#include <optional>
#include <string>

#include "nctori/ktheory.hpp"
#include "nctori/param.hpp"
#include "nctori/weyl.hpp"

namespace nctori::catalog {

/// Directory the fixture JSON files were installed to at configure time.
std::string default_fixture_dir();

/// One fixture: a named integer or parametrized matrix, with its declared
/// order (verified at load) and an optional editorial note.
struct CatalogEntry {
    std::string name;
    std::optional<unsigned long> declared_order;
    std::optional<IntMatrix> int_matrix;
    std::optional<ParamMatrix> param_matrix;
    std::string note;
};

/// The fifteen finite-order generators in the rank-3 integer linear group
/// (five of order 2, two of order 3, four each of orders 4 and 6), loaded
/// with checksum and order verification.
std::vector<CatalogEntry> gl3_table(const std::string &fixture_dir = default_fixture_dir());

/// The dimension-4 fixture set: cyclotomic companions C_n, base changes B,
/// conjugated generators A_n, the product form and the two invariant forms
/// it conjugates to, the generic two-parameter invariant members, and the
/// expected generator action tables.
struct Dim4Fixtures {
    std::map<unsigned, IntMatrix> companion; // n = 5, 8, 10, 12
    IntMatrix b_5_10;
    IntMatrix b_8_12;
    std::map<unsigned, IntMatrix> conjugated;   // A_n
    ParamMatrix theta_product;                  // block form of theta(E12-E21) twice
    ParamMatrix theta_5;                        // invariant under C_5 and C_10
    ParamMatrix theta_8;                        // invariant under C_8 and C_12
    std::map<unsigned, ParamMatrix> t4_generic; // two-parameter invariant members
    std::map<unsigned, std::vector<weyl::NormalWord>> expected_actions;

    const IntMatrix &base_change(unsigned n) const;
};

Dim4Fixtures four_torus_fixtures(const std::string &fixture_dir = default_fixture_dir());

/// Survey of invariant skew forms for every rank-3 finite-order generator:
/// all of them admit only degenerate forms except the flip -I.
struct Gl3SurveyEntry {
    std::string name;
    std::size_t space_dimension = 0;
    bool is_flip = false;
    bool generic_degenerate = false;
    bool basis_members_degenerate = false;
    std::vector<Int> witness; // empty for the flip
};

struct Gl3SurveyReport {
    std::vector<Gl3SurveyEntry> entries;
    bool flip_admits_nondegenerate = false;
    bool flip_only = false; // the survey verdict
};

Gl3SurveyReport gl3_survey(const std::string &fixture_dir = default_fixture_dir());

/// Comparison of the computed canonical-action tables of the conjugated
/// generators against the recorded images, phases included.
struct ActionTableReport {
    struct PerGroup {
        unsigned n;
        bool matches;
        std::vector<weyl::NormalWord> computed;
        std::vector<weyl::NormalWord> expected;
    };
    std::vector<PerGroup> groups;
    bool all_match = false;
};

ActionTableReport verify_action_tables(const std::string &fixture_dir = default_fixture_dir());

/// One verification check: a named, self-contained claim with its outcome.
/// criterion_level marks operator-algebra statements that are certified via
/// the K-theoretic criterion they reduce to, not re-proved analytically.
struct VerifyCheck {
    std::string name;
    std::string claim;
    bool passed = false;
    bool criterion_level = false;
    std::string details;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_passed() const;
};

/// The full fixture-driven verification suite behind `verify-paper`.
VerifyReport verify_paper_report(const std::string &fixture_dir = default_fixture_dir());

/// FNV-1a 64 hash, hex-encoded; fixture files are pinned by these.
std::string fnv1a64_hex(const std::string &bytes);

} // namespace nctori::catalog
