#include "hullkit/fixtures.hpp"

#include <sstream>

#include "hullkit/io.hpp"

namespace hullkit {

namespace {

// Appended column described as a combination of witness columns:
// (column index, scalar encoding) pairs.
using Combo = std::vector<std::pair<std::size_t, std::uint32_t>>;

Matrix combo_columns(const Matrix& p, const std::vector<Combo>& cols) {
    const FieldSpec& f = *p.field();
    Matrix d(p.field(), p.rows(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [col, scale] : cols[j])
            for (std::size_t i = 0; i < p.rows(); ++i)
                d.set_enc(i, j, f.add_enc(d.enc_at(i, j), f.mul_enc(scale, p.enc_at(i, col))));
    return d;
}

Matrix parse_text(const char* text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

// [5,3,3] Hamming code over GF(4); z denotes the primitive element with
// z^2 = z + 1, so encodings are 0,1, z=2, z^2=3.
constexpr const char* kCode1 = R"(field p=2 m=2 modulus=1,1,1
3 5
1 0 0 1 3
0 1 0 3 3
0 0 1 3 1
)";
constexpr const char* kWitness1 = R"(field p=2 m=2 modulus=1,1,1
3 3
1 0 0
2 1 0
1 0 1
)";

// [8,4,5] MDS code over GF(9); w^2 = w + 1, encodings 0..8 with w = 3.
constexpr const char* kCode2 = R"(field p=3 m=2 modulus=2,2,1
4 8
1 0 0 0 2 1 3 4
0 1 0 0 1 8 2 5
0 0 1 0 6 5 5 5
0 0 0 1 6 1 2 8
)";
constexpr const char* kWitness2 = R"(field p=3 m=2 modulus=2,2,1
4 4
4 7 0 0
1 5 0 0
2 8 1 0
4 4 2 1
)";

// [18,8,7] ternary code
constexpr const char* kCode3 = R"(field p=3 m=1 modulus=0,1
8 18
1 0 0 0 0 0 0 0 0 1 1 0 1 2 2 0 1 0
0 1 0 0 0 0 0 0 0 2 0 1 2 2 0 2 2 1
0 0 1 0 0 0 0 0 1 1 1 1 2 2 2 0 2 2
0 0 0 1 0 0 0 0 2 2 1 0 2 0 0 2 2 2
0 0 0 0 1 0 0 0 2 2 1 0 0 1 2 0 0 2
0 0 0 0 0 1 0 0 2 0 2 0 1 1 2 2 2 0
0 0 0 0 0 0 1 0 0 2 0 2 0 1 1 2 2 2
0 0 0 0 0 0 0 1 2 0 1 2 2 2 0 1 0 2
)";
constexpr const char* kWitness3 = R"(field p=3 m=1 modulus=0,1
8 8
2 2 0 0 0 0 0 0
0 1 0 0 0 0 0 0
1 1 0 0 0 0 0 1
1 0 1 0 0 0 0 0
2 1 0 1 0 0 0 0
2 0 0 0 1 0 0 0
2 0 0 0 0 1 0 0
0 1 0 0 0 0 1 0
)";

// [9,6,3] code over GF(5)
constexpr const char* kCode4 = R"(field p=5 m=1 modulus=0,1
6 9
1 0 0 0 0 0 2 4 4
0 1 0 0 0 0 4 1 1
0 0 1 0 0 0 1 0 4
0 0 0 1 0 0 4 0 2
0 0 0 0 1 0 2 1 1
0 0 0 0 0 1 1 3 4
)";
constexpr const char* kWitness4 = R"(field p=5 m=1 modulus=0,1
6 6
0 2 2 0 0 0
3 1 1 0 0 0
2 1 0 1 0 0
0 1 1 1 0 0
2 4 0 3 0 1
3 4 1 4 1 0
)";

// [7,4,3] binary Hamming code
constexpr const char* kCode5 = R"(field p=2 m=1 modulus=0,1
4 7
1 0 0 0 1 1 0
0 1 0 0 0 1 1
0 0 1 0 1 1 1
0 0 0 1 1 0 1
)";
constexpr const char* kWitness5 = R"(field p=2 m=1 modulus=0,1
4 4
1 0 0 0
1 0 0 1
0 1 0 0
1 0 1 0
)";

// [15,6,6] binary code
constexpr const char* kCode6 = R"(field p=2 m=1 modulus=0,1
6 15
1 0 0 0 0 0 0 0 1 0 0 1 1 1 1
0 1 0 0 0 0 1 0 0 0 1 1 0 1 1
0 0 1 0 0 0 1 1 0 1 1 0 0 0 1
0 0 0 1 0 0 1 1 1 1 0 0 1 0 0
0 0 0 0 1 0 0 1 1 1 1 0 0 1 0
0 0 0 0 0 1 0 0 1 1 1 1 0 0 1
)";
constexpr const char* kWitness6 = R"(field p=2 m=1 modulus=0,1
6 6
1 0 0 0 0 0
0 1 0 0 0 0
1 1 1 0 1 0
1 0 1 0 0 0
0 0 0 1 1 1
1 1 1 1 0 0
)";

Combo col(std::size_t j, std::uint32_t scale = 1) { return {{j, scale}}; }

FixtureTable::Row row(const Matrix& p, std::size_t t, const std::vector<Combo>& combos,
                      std::array<std::size_t, 3> nkd) {
    return {t, combo_columns(p, combos), nkd};
}

std::vector<FixtureTable> build_tables() {
    std::vector<FixtureTable> tables;

    {
        LinearCode code(parse_text(kCode1));
        Matrix p = parse_text(kWitness1);
        std::vector<FixtureTable::Row> rows = {
            row(p, 0, {col(1), col(2)}, {7, 3, 3}),
            row(p, 1, {col(2)}, {6, 3, 3}),
            row(p, 3, {col(0)}, {6, 3, 4}),
        };
        tables.push_back({"table1", InnerKind::Hermitian, std::move(code), std::move(p),
                          CanonicalForm{CanonKind::HermitianDiag, 1, std::nullopt},
                          std::move(rows)});
    }
    {
        LinearCode code(parse_text(kCode2));
        Matrix p = parse_text(kWitness2);
        const std::uint32_t w = 3;
        std::vector<FixtureTable::Row> rows = {
            row(p, 0, {col(3)}, {9, 4, 5}),
            row(p, 2, {col(0, w)}, {9, 4, 5}),
            row(p, 3, {col(0, w), col(1, w)}, {10, 4, 5}),
            row(p, 4, {col(0, w), col(1, w), col(2, w)}, {11, 4, 6}),
        };
        tables.push_back({"table2", InnerKind::Hermitian, std::move(code), std::move(p),
                          CanonicalForm{CanonKind::HermitianDiag, 3, std::nullopt},
                          std::move(rows)});
    }
    {
        LinearCode code(parse_text(kCode3));
        Matrix p = parse_text(kWitness3);
        std::vector<FixtureTable::Row> rows = {
            row(p, 0, {col(2), col(3), col(4), col(5), col(6), col(7)}, {24, 8, 7}),
            row(p, 1, {col(3), col(4), col(5), col(6), col(7)}, {23, 8, 7}),
            row(p, 2, {col(4), col(5), col(6), col(7)}, {22, 8, 7}),
            row(p, 3, {col(5), col(6), col(7)}, {21, 8, 7}),
            row(p, 4, {col(6), col(7)}, {20, 8, 7}),
            row(p, 5, {col(7)}, {19, 8, 7}),
            row(p, 7, {col(0)}, {19, 8, 8}),
            row(p, 8, {col(0), col(1)}, {20, 8, 9}),
        };
        tables.push_back({"table3", InnerKind::Euclidean, std::move(code), std::move(p),
                          CanonicalForm{CanonKind::OddSquare, 2, std::nullopt}, std::move(rows)});
    }
    {
        LinearCode code(parse_text(kCode4));
        Matrix p = parse_text(kWitness4);
        const FieldElement z = code.field()->canonical_nonsquare();  // 2
        std::vector<FixtureTable::Row> rows = {
            row(p, 0, {col(4), col(5)}, {11, 6, 3}),
            row(p, 1, {col(5)}, {10, 6, 3}),
            row(p, 3, {col(0)}, {10, 6, 3}),
            row(p, 4, {col(0), col(1)}, {11, 6, 4}),
            row(p, 5, {col(0), col(1), col(2)}, {12, 6, 4}),
            row(p, 6, {col(0), col(1), col(2), col(3), col(3)}, {14, 6, 6}),
        };
        tables.push_back({"table4", InnerKind::Euclidean, std::move(code), std::move(p),
                          CanonicalForm{CanonKind::OddNonSquare, 4, z}, std::move(rows)});
    }
    {
        LinearCode code(parse_text(kCode5));
        Matrix p = parse_text(kWitness5);
        std::vector<FixtureTable::Row> rows = {
            row(p, 0, {col(1), col(2), col(3)}, {10, 4, 3}),
            row(p, 1, {col(2), col(3)}, {9, 4, 3}),
            row(p, 2, {col(3)}, {8, 4, 3}),
            row(p, 4, {col(0)}, {8, 4, 4}),
        };
        tables.push_back({"table5", InnerKind::Euclidean, std::move(code), std::move(p),
                          CanonicalForm{CanonKind::EvenIdentity, 1, std::nullopt},
                          std::move(rows)});
    }
    {
        LinearCode code(parse_text(kCode6));
        Matrix p = parse_text(kWitness6);
        std::vector<FixtureTable::Row> rows = {
            row(p, 0, {col(4), col(5)}, {17, 6, 6}),
            row(p, 1, {col(5)}, {16, 6, 6}),
            row(p, 3, {col(0), col(1)}, {17, 6, 6}),
            row(p, 4, {{{0, 1}, {1, 1}}, col(0), col(1)}, {18, 6, 6}),
            row(p, 5,
                {{{1, 1}, {2, 1}}, {{0, 1}, {2, 1}}, {{0, 1}, {1, 1}, {2, 1}}, col(3)},
                {19, 6, 7}),
            row(p, 6,
                {{{0, 1}, {1, 1}, {2, 1}, {3, 1}},
                 {{0, 1}, {2, 1}, {3, 1}},
                 {{1, 1}, {2, 1}, {3, 1}},
                 col(3),
                 col(2)},
                {20, 6, 8}),
        };
        tables.push_back({"table6", InnerKind::Euclidean, std::move(code), std::move(p),
                          CanonicalForm{CanonKind::EvenAlternating, 4, std::nullopt},
                          std::move(rows)});
    }
    return tables;
}

const std::vector<FixtureTable>& tables() {
    static const std::vector<FixtureTable> t = build_tables();
    return t;
}

}  // namespace

Matrix FixtureTable::stated_gram() const {
    const Matrix b = gram(code.generator(), kind);
    if (kind == InnerKind::Euclidean && code.field()->p() != 2) return -b;
    return b;
}

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& t : tables()) v.push_back(t.name);
        return v;
    }();
    return names;
}

const FixtureTable& fixture(const std::string& name) {
    for (const auto& t : tables())
        if (t.name == name) return t;
    throw FixtureMismatch("unknown fixture: " + name + " (expected table1..table6)");
}

FixtureReport run_fixture(const FixtureTable& table) {
    FixtureReport report;
    report.name = table.name;
    report.pass = true;
    for (const auto& r : table.rows) {
        FixtureRowResult res;
        res.t = r.t;
        res.expected = r.nkd;
        const LinearCode ext(Matrix::hstack(table.code.generator(), r.append));
        res.hull = hull_dimension(ext, table.kind);
        res.actual = {ext.n(), ext.k(), minimum_distance(ext)};
        res.pass = res.hull == r.t && res.actual == r.nkd;
        report.pass = report.pass && res.pass;
        report.rows.push_back(res);
    }
    return report;
}

std::string FixtureReport::first_mismatch() const {
    for (const auto& r : rows) {
        if (r.pass) continue;
        if (r.hull != r.t)
            return name + " t=" + std::to_string(r.t) + ": hull dimension " +
                   std::to_string(r.hull);
        const char* labels[3] = {"n", "k", "d"};
        for (std::size_t i = 0; i < 3; ++i)
            if (r.actual[i] != r.expected[i])
                return name + " t=" + std::to_string(r.t) + ": " + labels[i] + "=" +
                       std::to_string(r.actual[i]) + ", expected " +
                       std::to_string(r.expected[i]);
    }
    return "";
}

}  // namespace hullkit
