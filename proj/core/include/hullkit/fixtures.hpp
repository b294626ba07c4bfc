#pragma once

#include <array>

#include "hullkit/embedding.hpp"

namespace hullkit {

/// One bundled known-answer table: a reference code, a congruence witness P
/// for its (possibly negated) Gram matrix, and the expected [n,k,d] of the
/// shortest embedding for each listed t, with the exact appended columns
/// (combinations of columns of P) that realize those distances.
struct FixtureTable {
    struct Row {
        std::size_t t;
        Matrix append;
        std::array<std::size_t, 3> nkd;
    };

    std::string name;
    InnerKind kind;
    LinearCode code;
    Matrix p;                    // bundled witness
    CanonicalForm claimed_form;  // stated canonical form of the (±) Gram matrix

    std::vector<Row> rows;

    /// The matrix the witness identity applies to: -G G^T over odd-order
    /// fields with the Euclidean product, G G* otherwise.
    Matrix stated_gram() const;
};

const std::vector<std::string>& fixture_names();  // table1 .. table6
const FixtureTable& fixture(const std::string& name);

struct FixtureRowResult {
    std::size_t t = 0;
    std::array<std::size_t, 3> expected{};
    std::array<std::size_t, 3> actual{};
    std::size_t hull = 0;
    bool pass = false;
};

struct FixtureReport {
    std::string name;
    std::vector<FixtureRowResult> rows;
    bool pass = false;

    /// Description of the first differing cell, empty when pass.
    std::string first_mismatch() const;
};

/// Re-runs every row of the table through manual append and compares the
/// achieved hull dimension and [n,k,d] exactly.
FixtureReport run_fixture(const FixtureTable& table);

}  // namespace hullkit
