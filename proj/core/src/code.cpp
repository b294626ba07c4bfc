#include "hullkit/code.hpp"

namespace hullkit {

LinearCode::LinearCode(Matrix generator) : g_(std::move(generator)) {
    if (g_.rows() == 0 || g_.cols() == 0)
        throw DimensionMismatch("generator matrix must be nonempty");
    if (g_.rows() > g_.cols() || rank(g_) != g_.rows()) throw RankDeficientGenerator();
}

const char* to_string(CodeTypeTag tag) {
    switch (tag) {
        case CodeTypeTag::Eos: return "Eos";
        case CodeTypeTag::Eons: return "Eons";
        case CodeTypeTag::Eea: return "Eea";
        case CodeTypeTag::Eena: return "Eena";
    }
    return "?";
}

std::size_t hull_dimension(const LinearCode& c, InnerKind kind) {
    return c.k() - rank(gram(c.generator(), kind));
}

Matrix hull_basis(const LinearCode& c, InnerKind kind) {
    const Matrix kernel = solve_left_kernel(gram(c.generator(), kind));
    return kernel * c.generator();
}

Matrix hull_first_generator(const LinearCode& c, InnerKind kind) {
    Matrix stack = hull_basis(c, kind);
    std::size_t have = stack.rows();
    if (have == 0) return c.generator();
    for (std::size_t i = 0; i < c.k() && have < c.k(); ++i) {
        const Matrix cand = Matrix::vstack(stack, c.generator().block(i, 0, 1, c.n()));
        if (rank(cand) > have) {
            stack = cand;
            ++have;
        }
    }
    return stack;
}

std::uint64_t codeword_count(const LinearCode& c) {
    const std::uint64_t cap = std::uint64_t(1) << 63;
    std::uint64_t words = 1;
    for (std::size_t i = 0; i < c.k(); ++i) {
        if (words > cap / c.field()->q()) return cap;
        words *= c.field()->q();
    }
    return words;
}

namespace {

struct DistanceSearch {
    const Matrix& g;
    const FieldSpec& f;
    std::size_t best;
    std::vector<std::vector<std::uint32_t>> saved;  // per-level scratch
    std::vector<std::uint32_t> cur;

    explicit DistanceSearch(const Matrix& gen)
        : g(gen),
          f(*gen.field()),
          best(gen.cols() + 1),
          saved(gen.rows(), std::vector<std::uint32_t>(gen.cols())),
          cur(gen.cols(), 0) {}

    void run(std::size_t level, bool any) {
        if (level == g.rows()) {
            if (!any) return;
            std::size_t w = 0;
            for (std::uint32_t v : cur) w += v != 0;
            if (w < best) best = w;
            return;
        }
        run(level + 1, any);
        if (best == 1) return;  // cannot improve
        saved[level] = cur;
        for (std::uint32_t cf = 1; cf < f.q(); ++cf) {
            for (std::size_t j = 0; j < cur.size(); ++j)
                cur[j] = f.add_enc(saved[level][j], f.mul_enc(cf, g.enc_at(level, j)));
            run(level + 1, true);
            if (best == 1) break;
        }
        cur = saved[level];
    }
};

}  // namespace

std::size_t minimum_distance(const LinearCode& c, std::uint64_t max_words) {
    if (codeword_count(c) > max_words) throw TooLargeToEnumerate();
    DistanceSearch search(c.generator());
    search.run(0, false);
    return search.best;
}

CodeType classify(const LinearCode& c) {
    const Matrix b = gram(c.generator(), InnerKind::Euclidean);
    if (c.field()->p() == 2) {
        const CodeTypeTag tag = b.has_zero_diagonal() ? CodeTypeTag::Eea : CodeTypeTag::Eena;
        return {tag, canonize_char2(b)};
    }
    CongruenceWitness wit = diagonalize_symmetric_odd(-b);
    const CodeTypeTag tag =
        wit.form.kind == CanonKind::OddSquare ? CodeTypeTag::Eos : CodeTypeTag::Eons;
    return {tag, std::move(wit)};
}

}  // namespace hullkit
