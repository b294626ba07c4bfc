#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hullkit/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace hullkit;

namespace {

Matrix from_rows(const FieldPtr& f, const std::vector<std::vector<std::uint32_t>>& rows) {
    Matrix m(f, rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.set_enc(i, j, rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("generator validation") {
    const FieldPtr f2 = FieldSpec::make(2);
    CHECK_THROWS_AS(LinearCode(from_rows(f2, {{1, 0}, {1, 0}})), RankDeficientGenerator);
    CHECK_THROWS_AS(LinearCode(from_rows(f2, {{1}, {1}})), RankDeficientGenerator);  // k > n
    CHECK_NOTHROW(LinearCode(from_rows(f2, {{1, 1, 0}, {0, 1, 1}})));
}

TEST_CASE("hull dimensions of the bundled codes") {
    CHECK_THROWS_AS(hull_dimension(fixture("table3").code, InnerKind::Hermitian),
                    NotAHermitianField);  // GF(3) has no conjugation
    CHECK(hull_dimension(fixture("table1").code, InnerKind::Hermitian) == 2);
    CHECK(hull_dimension(fixture("table2").code, InnerKind::Hermitian) == 1);
    CHECK(hull_dimension(fixture("table3").code, InnerKind::Euclidean) == 6);
    CHECK(hull_dimension(fixture("table4").code, InnerKind::Euclidean) == 2);
    CHECK(hull_dimension(fixture("table5").code, InnerKind::Euclidean) == 3);
    CHECK(hull_dimension(fixture("table6").code, InnerKind::Euclidean) == 2);
}

TEST_CASE("hull basis: self-orthogonal, LCD, and membership") {
    const FieldPtr f2 = FieldSpec::make(2);
    // the binary repetition code of even length is self-orthogonal
    const LinearCode rep(from_rows(f2, {{1, 1, 1, 1}}));
    CHECK(hull_basis(rep, InnerKind::Euclidean).rows() == 1);

    // self-orthogonal with k = 2: the basis has k independent rows
    const LinearCode so(from_rows(f2, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
    const Matrix so_basis = hull_basis(so, InnerKind::Euclidean);
    CHECK(so_basis.rows() == 2);
    CHECK(rank(so_basis) == 2);

    // [2,1] code generated by (1,0) is LCD
    const LinearCode lcd(from_rows(f2, {{1, 0}}));
    CHECK(hull_basis(lcd, InnerKind::Euclidean).rows() == 0);

    std::mt19937 rng(3);
    for (const FieldPtr& f :
         {FieldSpec::make(2), FieldSpec::make(3), FieldSpec::make(2, 2), FieldSpec::make(5),
          FieldSpec::make(3, 2)}) {
        for (int i = 0; i < 20; ++i) {
            const LinearCode c = testgen::random_code(f, 6, 3, rng);
            for (InnerKind kind : {InnerKind::Euclidean, InnerKind::Hermitian}) {
                if (kind == InnerKind::Hermitian && !f->has_conjugation()) continue;
                const Matrix basis = hull_basis(c, kind);
                CHECK(basis.rows() == hull_dimension(c, kind));
                if (basis.rows() > 0) {
                    CHECK(rank(basis) == basis.rows());
                    // each row is in the dual and in the code
                    CHECK((basis * star(c.generator(), kind)).is_zero());
                    for (std::size_t r = 0; r < basis.rows(); ++r)
                        CHECK(rank(Matrix::vstack(c.generator(),
                                                  basis.block(r, 0, 1, basis.cols()))) == c.k());
                }
                // independent enumeration oracle
                CHECK(testoracle::hull_dimension_by_enumeration(c, kind) ==
                      hull_dimension(c, kind));
            }
        }
    }
}

TEST_CASE("hull-first generator form") {
    const FixtureTable& t4 = fixture("table4");
    const Matrix hf = hull_first_generator(t4.code, InnerKind::Euclidean);
    const std::size_t ell = 2;
    CHECK(hf.rows() == t4.code.k());
    CHECK(rank(hf) == t4.code.k());
    // top rows lie in the hull
    const Matrix top = hf.block(0, 0, ell, hf.cols());
    CHECK((top * star(t4.code.generator(), InnerKind::Euclidean)).is_zero());
    // bottom block has invertible Gram matrix
    const Matrix bottom = hf.block(ell, 0, t4.code.k() - ell, hf.cols());
    CHECK(rank(gram(bottom, InnerKind::Euclidean)) == t4.code.k() - ell);

    std::mt19937 rng(5);
    for (const FieldPtr& f : {FieldSpec::make(2), FieldSpec::make(3), FieldSpec::make(3, 2)}) {
        for (int i = 0; i < 15; ++i) {
            const LinearCode c = testgen::random_code(f, 6, 3, rng);
            const std::size_t l = hull_dimension(c, InnerKind::Euclidean);
            const Matrix g2 = hull_first_generator(c, InnerKind::Euclidean);
            CHECK(rank(g2) == c.k());
            CHECK(rank(Matrix::vstack(c.generator(), g2)) == c.k());  // same row space
            if (l > 0)
                CHECK((g2.block(0, 0, l, g2.cols()) * star(c.generator(), InnerKind::Euclidean))
                          .is_zero());
            if (l < c.k()) {
                const Matrix a = g2.block(l, 0, c.k() - l, g2.cols());
                CHECK(rank(gram(a, InnerKind::Euclidean)) == c.k() - l);
            }
        }
    }
}

TEST_CASE("minimum distance") {
    CHECK(minimum_distance(fixture("table1").code) == 3);  // [5,3,3] over GF(4)
    CHECK(minimum_distance(fixture("table5").code) == 3);  // [7,4,3] binary Hamming
    CHECK(minimum_distance(fixture("table6").code) == 6);  // [15,6,6]

    // a word of weight 1 short-circuits
    const FieldPtr f3 = FieldSpec::make(3);
    CHECK(minimum_distance(LinearCode(Matrix::identity(f3, 3))) == 1);

    // [9,9] over GF(9) exceeds the 2^24 bound
    const FieldPtr f9 = FieldSpec::make(3, 2);
    const LinearCode big(Matrix::identity(f9, 9));
    CHECK_THROWS_AS(minimum_distance(big), TooLargeToEnumerate);
    CHECK(minimum_distance(big, std::uint64_t(1) << 33) == 1);  // raised bound
}

TEST_CASE("classification of the bundled codes") {
    CHECK(classify(fixture("table3").code).tag == CodeTypeTag::Eos);
    CHECK(classify(fixture("table4").code).tag == CodeTypeTag::Eons);
    CHECK(classify(fixture("table5").code).tag == CodeTypeTag::Eena);
    CHECK(classify(fixture("table6").code).tag == CodeTypeTag::Eea);
}

TEST_CASE("classify stores a valid witness and is generator-invariant") {
    std::mt19937 rng(9);
    for (const FieldPtr& f : {FieldSpec::make(2), FieldSpec::make(3), FieldSpec::make(5),
                              FieldSpec::make(2, 2), FieldSpec::make(3, 2)}) {
        for (int i = 0; i < 12; ++i) {
            const LinearCode c = testgen::random_code(f, 5, 3, rng);
            const CodeType type = classify(c);
            const Matrix b = gram(c.generator(), InnerKind::Euclidean);
            const Matrix target = f->p() == 2 ? b : -b;
            CHECK(type.witness.P * type.witness.canonical_matrix() *
                      star(type.witness.P, InnerKind::Euclidean) ==
                  target);
            for (int rep = 0; rep < 4; ++rep) {
                const Matrix u = testgen::random_invertible(f, c.k(), rng);
                CHECK(classify(LinearCode(u * c.generator())).tag == type.tag);
            }
        }
    }
}

TEST_CASE("alternating Gram rank bound in characteristic 2") {
    // rows with zero coordinate sum give an alternating Gram matrix whose
    // rank is at most s-1
    std::mt19937 rng(15);
    for (const FieldPtr& f : {FieldSpec::make(2), FieldSpec::make(2, 2)}) {
        for (int i = 0; i < 50; ++i) {
            const std::size_t k = 2 + i % 3, s = 2 + i % 4;
            Matrix p(f, k, s);
            for (std::size_t r = 0; r < k; ++r) {
                std::uint32_t acc = 0;
                for (std::size_t c = 0; c + 1 < s; ++c) {
                    const std::uint32_t v = testgen::random_enc(f, rng);
                    p.set_enc(r, c, v);
                    acc = f->add_enc(acc, v);
                }
                p.set_enc(r, s - 1, acc);  // zero row sum in characteristic 2
            }
            const Matrix g = gram(p, InnerKind::Euclidean);
            CHECK(g.has_zero_diagonal());
            CHECK(rank(g) <= s - 1);
        }
    }
}
