// Command-line front end: parse code/matrix files, run hull analyses and
// embeddings, emit deterministic reports. All output is byte-stable for
// identical inputs and flags; exit code 0 only when every requested check
// passes.

#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "hullkit/embedding.hpp"
#include "hullkit/fixtures.hpp"
#include "hullkit/io.hpp"

using namespace hullkit;

namespace {

std::string gf_label(const FieldSpec& f) { return "GF(" + std::to_string(f.q()) + ")"; }

std::string nk_label(const LinearCode& c) {
    return "[" + std::to_string(c.n()) + "," + std::to_string(c.k()) + "]";
}

std::string distance_cell(const LinearCode& c, std::uint64_t max_words) {
    if (codeword_count(c) > max_words) return "skipped";
    return std::to_string(minimum_distance(c, max_words));
}

void print_table(const std::vector<std::vector<std::string>>& rows, bool tsv) {
    if (rows.empty()) return;
    if (tsv) {
        for (const auto& row : rows) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j) std::cout << '\t';
                std::cout << row[j];
            }
            std::cout << '\n';
        }
        return;
    }
    std::vector<std::size_t> widths(rows.front().size(), 0);
    for (const auto& row : rows)
        for (std::size_t j = 0; j < row.size(); ++j) widths[j] = std::max(widths[j], row[j].size());
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) std::cout << "  ";
            std::cout << row[j];
            if (j + 1 < row.size())
                std::cout << std::string(widths[j] - row[j].size(), ' ');
        }
        std::cout << '\n';
    }
}

std::string form_label(const CanonicalForm& form) {
    std::string out = std::string(to_string(form.kind)) + " r=" + std::to_string(form.rank);
    if (form.z) out += " z=" + std::to_string(form.z->enc());
    return out;
}

int cmd_info(const std::string& path, std::uint64_t max_words) {
    const LinearCode code = parse_code_file(path);
    std::cout << "code: " << nk_label(code) << " over " << gf_label(*code.field()) << "\n";
    std::cout << "minimum distance: " << distance_cell(code, max_words) << "\n";
    std::cout << "euclidean hull dimension: " << hull_dimension(code, InnerKind::Euclidean)
              << "\n";
    std::cout << "euclidean type: " << to_string(classify(code).tag) << "\n";
    if (code.field()->has_conjugation())
        std::cout << "hermitian hull dimension: " << hull_dimension(code, InnerKind::Hermitian)
                  << "\n";
    return 0;
}

int cmd_canon(const std::string& path, InnerKind kind) {
    const Matrix a = parse_matrix_file(path);
    std::cout << "input: " << a.rows() << "x" << a.cols() << " matrix over "
              << gf_label(*a.field()) << "\n";
    std::cout << "kind: " << to_string(kind) << "\n";
    CongruenceWitness wit = kind == InnerKind::Hermitian ? diagonalize_hermitian(a)
                            : a.field()->p() == 2        ? canonize_char2(a)
                                                         : diagonalize_symmetric_odd(a);
    std::cout << "canonical form: " << form_label(wit.form) << "\n";
    std::cout << "witness P:\n";
    for (std::size_t i = 0; i < wit.P.rows(); ++i) {
        for (std::size_t j = 0; j < wit.P.cols(); ++j) {
            if (j) std::cout << ' ';
            std::cout << wit.P.enc_at(i, j);
        }
        std::cout << '\n';
    }
    const bool ok = wit.P * wit.canonical_matrix() * star(wit.P, wit.kind) == a;
    std::cout << "identity check: " << (ok ? "ok" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

int cmd_embed(const std::string& path, std::size_t t, InnerKind kind,
              const std::optional<std::string>& append_path,
              const std::optional<std::string>& out_path, std::uint64_t max_words) {
    const LinearCode code = parse_code_file(path);
    std::cout << "input: " << nk_label(code) << " over " << gf_label(*code.field()) << "\n";
    std::cout << "inner product: " << to_string(kind) << "\n";
    std::cout << "hull dimension: " << hull_dimension(code, kind) << "\n";
    std::cout << "target t: " << t << "\n";

    EmbeddingResult result = [&] {
        if (append_path) {
            const Matrix d = parse_matrix_file(*append_path);
            return append_columns(code, t, kind, d);
        }
        return embed(code, t, kind);
    }();
    if (kind == InnerKind::Euclidean)
        std::cout << "euclidean type: " << to_string(classify(code).tag) << "\n";
    const LengthVerdict verdict = shortest_length(code, t, kind);
    std::cout << "appended columns: " << result.s
              << (append_path ? " (manual)" : "") << "\n";
    std::cout << "shortest possible: " << verdict.s << " (" << to_string(verdict.branch)
              << ")\n";
    std::cout << "output: " << nk_label(result.code) << "\n";
    std::cout << "achieved hull dimension: " << hull_dimension(result.code, kind) << "\n";
    std::cout << "minimum distance: " << distance_cell(result.code, max_words) << "\n";
    if (out_path) {
        write_matrix_file(*out_path, result.code.generator());
        std::cout << "written: " << *out_path << "\n";
    } else {
        std::cout << format_matrix(result.code.generator());
    }
    return 0;
}

int cmd_sweep(const std::string& path, InnerKind kind, bool tsv, std::uint64_t max_words) {
    const LinearCode code = parse_code_file(path);
    if (!tsv)
        std::cout << "code: " << nk_label(code) << " over " << gf_label(*code.field())
                  << ", inner product " << to_string(kind) << "\n";
    const std::size_t ell = hull_dimension(code, kind);

    // diagonalize once, reuse across all t
    std::optional<CongruenceWitness> hermitian_wit;
    std::optional<CodeType> type;
    if (kind == InnerKind::Hermitian)
        hermitian_wit = diagonalize_hermitian(gram(code.generator(), InnerKind::Hermitian));
    else
        type = classify(code);

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"t", "length", "s", "d", "tags"});
    for (std::size_t t = 0; t <= code.k(); ++t) {
        const EmbeddingResult result =
            kind == InnerKind::Hermitian ? embed_hermitian(code, t, *hermitian_wit)
            : code.field()->p() == 2     ? embed_euclidean_even(code, t, *type)
                                         : embed_euclidean_odd(code, t, *type);
        std::string tags;
        auto add_tag = [&tags](const char* tag) {
            if (!tags.empty()) tags += ',';
            tags += tag;
        };
        if (t == 0) add_tag("LCD");
        if (t == code.k()) add_tag(kind == InnerKind::Hermitian ? "HSO" : "ESO");
        if (t == ell) add_tag("original");
        rows.push_back({std::to_string(t), std::to_string(result.code.n()),
                        std::to_string(result.s), distance_cell(result.code, max_words), tags});
    }
    print_table(rows, tsv);
    return 0;
}

int cmd_verify(const std::string& path, std::size_t t, InnerKind kind) {
    const LinearCode code = parse_code_file(path);
    std::cout << "code: " << nk_label(code) << " over " << gf_label(*code.field()) << "\n";
    std::cout << "target t: " << t << ", inner product " << to_string(kind) << "\n";
    const EmbeddingResult result = embed(code, t, kind);
    const VerificationReport report = verify_embedding(code, result);
    for (const auto& check : report.checks) {
        std::cout << "check " << check.name << ": "
                  << (check.skipped ? "skipped" : check.pass ? "ok" : "FAIL");
        if (!check.detail.empty()) std::cout << " (" << check.detail << ")";
        std::cout << "\n";
    }
    std::cout << "overall: " << (report.ok() ? "ok" : "FAIL") << "\n";
    return report.ok() ? 0 : 1;
}

int cmd_reproduce(const std::string& name) {
    std::vector<std::string> names;
    if (name == "all")
        names = fixture_names();
    else
        names.push_back(name);
    bool all_pass = true;
    std::string first_mismatch;
    for (const auto& table_name : names) {
        const FixtureTable& table = fixture(table_name);
        const FixtureReport report = run_fixture(table);
        for (const auto& row : report.rows) {
            std::cout << report.name << " t=" << row.t << ": [" << row.actual[0] << ","
                      << row.actual[1] << "," << row.actual[2] << "] hull=" << row.hull << " "
                      << (row.pass ? "ok" : "MISMATCH") << "\n";
        }
        std::cout << report.name << ": " << (report.pass ? "PASS" : "FAIL") << " ("
                  << report.rows.size() << " rows)\n";
        if (!report.pass && first_mismatch.empty()) first_mismatch = report.first_mismatch();
        all_pass = all_pass && report.pass;
    }
    if (!all_pass) throw FixtureMismatch("first differing cell: " + first_mismatch);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hull dimensions, Gram congruence classes, and shortest hull embeddings "
                 "of linear codes over finite fields"};
    app.require_subcommand(1);

    const std::map<std::string, InnerKind> kind_map{{"euclidean", InnerKind::Euclidean},
                                                    {"hermitian", InnerKind::Hermitian}};

    std::string file, append_file, out_file, fixture_name;
    std::size_t t = 0;
    InnerKind kind = InnerKind::Euclidean;
    std::uint64_t max_words = kDefaultEnumerationBound;
    bool tsv = false;

    auto* info = app.add_subcommand("info", "parameters, hull dimensions and type of a code");
    info->add_option("file", file, "code file")->required();
    info->add_option("--max-enum", max_words, "codeword enumeration bound for distances");

    auto* canon = app.add_subcommand("canon", "congruence canonical form of a matrix");
    canon->add_option("file", file, "matrix file")->required();
    canon->add_option("--inner,--kind", kind, "inner product kind")
        ->transform(CLI::CheckedTransformer(kind_map));

    auto* embed_cmd = app.add_subcommand("embed", "shortest t-dimensional hull embedding");
    embed_cmd->add_option("file", file, "code file")->required();
    embed_cmd->add_option("--t", t, "target hull dimension")->required();
    embed_cmd->add_option("--inner", kind, "inner product kind")
        ->transform(CLI::CheckedTransformer(kind_map));
    auto* append_opt =
        embed_cmd->add_option("--append", append_file, "append these columns verbatim");
    auto* out_opt = embed_cmd->add_option("--out", out_file, "write the extended code here");
    embed_cmd->add_option("--max-enum", max_words, "codeword enumeration bound for distances");

    auto* sweep = app.add_subcommand("sweep", "embeddings for every t from 0 to k");
    sweep->add_option("file", file, "code file")->required();
    sweep->add_option("--inner", kind, "inner product kind")
        ->transform(CLI::CheckedTransformer(kind_map));
    sweep->add_flag("--tsv", tsv, "machine-readable tab-separated output");
    sweep->add_option("--max-enum", max_words, "codeword enumeration bound for distances");

    auto* verify = app.add_subcommand("verify", "embed and check all embedding invariants");
    verify->add_option("file", file, "code file")->required();
    verify->add_option("--t", t, "target hull dimension")->required();
    verify->add_option("--inner", kind, "inner product kind")
        ->transform(CLI::CheckedTransformer(kind_map));

    auto* reproduce = app.add_subcommand("reproduce", "re-run a bundled known-answer table");
    reproduce->add_option("name", fixture_name, "table1..table6 or all")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*info) return cmd_info(file, max_words);
        if (*canon) return cmd_canon(file, kind);
        if (*embed_cmd)
            return cmd_embed(file, t, kind,
                             *append_opt ? std::optional<std::string>(append_file) : std::nullopt,
                             *out_opt ? std::optional<std::string>(out_file) : std::nullopt,
                             max_words);
        if (*sweep) return cmd_sweep(file, kind, tsv, max_words);
        if (*verify) return cmd_verify(file, t, kind);
        if (*reproduce) return cmd_reproduce(fixture_name);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
