// rootform: construct and verify real matrix square roots, canonical forms
// and block idempotents from the command line.
//
// Exit codes: 0 success, 1 malformed input (parse/shape/argument errors),
// 2 mathematical obstruction (the construction does not apply to the input).
// Every successful run prints the residuals that certify its output.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rootform/errors.hpp"
#include "rootform/families.hpp"
#include "rootform/idempotent.hpp"
#include "rootform/jacobi.hpp"
#include "rootform/lu.hpp"
#include "rootform/matrix.hpp"
#include "rootform/matrix_io.hpp"
#include "rootform/orthogonal_form.hpp"
#include "rootform/predicates.hpp"
#include "rootform/roots.hpp"
#include "rootform/tolerances.hpp"

namespace {

using namespace rootform;

/// Accumulates the report and renders it as `label = value` lines or as one
/// JSON object. Matrices go inline unless --out DIR was given, in which case
/// they are written to DIR/<name>.mat and reported by path.
class Report {
public:
    Report(bool as_json, std::filesystem::path out_dir)
        : json_(as_json), out_dir_(std::move(out_dir)) {}

    void field(const std::string& label, const std::string& value) {
        lines_.emplace_back(label, value);
        if (json_)
            obj_[label] = value;
    }

    // Keep string literals away from the bool overload.
    void field(const std::string& label, const char* value) { field(label, std::string(value)); }

    void field(const std::string& label, std::size_t value) {
        lines_.emplace_back(label, std::to_string(value));
        if (json_)
            obj_[label] = value;
    }

    void field(const std::string& label, bool value) {
        lines_.emplace_back(label, value ? "true" : "false");
        if (json_)
            obj_[label] = value;
    }

    void residual(const std::string& label, double value) {
        lines_.emplace_back(label, format_scalar(value));
        if (json_)
            obj_["residuals"][label] = value;
    }

    void matrix(const std::string& name, const Matrix& m) { matrices_.emplace_back(name, m); }

    /// Print the report. `status` is "ok" or "error".
    void emit(const std::string& status) {
        if (json_) {
            obj_["status"] = status;
            for (const auto& [name, m] : matrices_) {
                if (out_dir_.empty()) {
                    nlohmann::json jm;
                    jm["rows"] = m.rows();
                    jm["cols"] = m.cols();
                    for (std::size_t i = 0; i < m.rows(); ++i) {
                        nlohmann::json row = nlohmann::json::array();
                        for (std::size_t j = 0; j < m.cols(); ++j)
                            row.push_back(m(i, j));
                        jm["entries"].push_back(row);
                    }
                    obj_["outputs"][name] = jm;
                } else {
                    obj_["outputs"][name] = write_out(name, m).string();
                }
            }
            std::fputs(obj_.dump(2).c_str(), stdout);
            std::fputc('\n', stdout);
            return;
        }
        std::printf("status = %s\n", status.c_str());
        for (const auto& [label, value] : lines_)
            std::printf("%s = %s\n", label.c_str(), value.c_str());
        for (const auto& [name, m] : matrices_) {
            if (out_dir_.empty())
                std::printf("%s =\n%s", name.c_str(), to_text(m).c_str());
            else
                std::printf("%s = %s\n", name.c_str(), write_out(name, m).string().c_str());
        }
    }

private:
    std::filesystem::path write_out(const std::string& name, const Matrix& m) {
        std::error_code ec;
        std::filesystem::create_directories(out_dir_, ec);
        if (ec)
            throw ParseError("cannot create output directory: " + out_dir_.string());
        std::filesystem::path path = out_dir_ / (name + ".mat");
        write_file(path, m);
        return path;
    }

    bool json_;
    std::filesystem::path out_dir_;
    nlohmann::json obj_;
    std::vector<std::pair<std::string, std::string>> lines_;
    std::vector<std::pair<std::string, Matrix>> matrices_;
};

struct GlobalOptions {
    double tol = -1.0; // < 0 means default
    std::uint64_t seed = 0;
    std::string out_dir;
    bool json = false;

    Tolerances tolerances() const {
        Tolerances t;
        if (tol >= 0.0) {
            if (!(tol > 0.0 && tol < 1.0))
                throw InvalidInput("BadTolerance", "--tol must lie strictly between 0 and 1");
            t.eq_rtol = tol;
        }
        return t;
    }

    Report report() const { return Report(json, out_dir); }
};

std::vector<PsiParam> parse_psi_list(const std::vector<std::string>& items) {
    std::vector<PsiParam> out;
    out.reserve(items.size());
    for (const std::string& item : items) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw InvalidInput("BadPsiParam", "--psi entries must look like a:b, got '" + item + "'");
        PsiParam p;
        try {
            std::size_t used = 0;
            p.a = std::stod(item.substr(0, colon), &used);
            if (used != colon)
                throw std::invalid_argument("trailing characters");
            const std::string bs = item.substr(colon + 1);
            p.b = std::stod(bs, &used);
            if (used != bs.size())
                throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw InvalidInput("BadPsiParam", "--psi entries must look like a:b, got '" + item + "'");
        }
        out.push_back(p);
    }
    return out;
}

// ---- subcommand handlers ------------------------------------------------------

int run_family(const std::string& kind, const std::vector<double>& params,
               const GlobalOptions& global) {
    Report rep = global.report();
    rep.field("command", "family " + kind);
    Matrix m = identity(1);

    if (kind == "involutory2") {
        if (params.empty())
            m = sample_involutory_2x2(Seed{global.seed});
        else if (params.size() == 2)
            m = involutory_2x2(GeneralInvolutory{params[0], params[1]});
        else
            throw InvalidInput("BadParams", "family involutory2 takes --params a,b (or none to sample)");
        rep.residual("involutory_residual", involutory_residual(m));
    } else if (kind == "psi") {
        if (params.empty())
            m = psi(0.0, 1.0);
        else if (params.size() == 2)
            m = psi(params[0], params[1]);
        else
            throw InvalidInput("BadParams", "family psi takes --params a,b");
        rep.residual("psi_square_plus_identity_residual",
                     frobenius_norm(m * m + identity(2)));
    } else if (kind == "rotation" || kind == "reflection") {
        if (params.size() != 1)
            throw InvalidInput("BadParams", "family " + kind + " takes --params theta");
        m = kind == "rotation" ? rotation(params[0]) : reflection(params[0]);
        rep.residual("orthogonality_residual", orthogonality_residual(m));
        if (kind == "reflection")
            rep.residual("involutory_residual", involutory_residual(m));
    }

    rep.matrix("matrix", m);
    rep.emit("ok");
    return 0;
}

int run_root(const std::string& kind, const std::string& in,
             const std::optional<std::vector<int>>& signs,
             const std::optional<std::vector<PsiParam>>& psi_params,
             const GlobalOptions& global) {
    const Tolerances tol = global.tolerances();
    const Matrix a = read_file(in);

    Matrix root = identity(1);
    if (kind == "involutory") {
        root = involutory_real_root(a, RootOptions{signs, psi_params}, tol);
    } else if (kind == "symmetric") {
        root = symmetric_real_root(a, RootOptions{signs, psi_params}, tol);
    } else { // orthogonal
        if (signs || psi_params)
            throw InvalidInput("UnsupportedOption",
                               "root orthogonal is fully determined; --signs/--psi do not apply");
        root = orthogonal_real_root(a, tol);
    }

    Report rep = global.report();
    rep.field("command", "root " + kind);
    rep.residual("root_squared_vs_input", frobenius_norm(root * root - a));
    if (kind == "orthogonal")
        rep.residual("orthogonality_residual", orthogonality_residual(root));
    rep.matrix("root", root);
    rep.emit("ok");
    return 0;
}

int run_tower(const std::string& in, std::size_t depth, const GlobalOptions& global) {
    const Tolerances tol = global.tolerances();
    const Matrix a = read_file(in);
    const RootTower tower = root_tower(a, depth, tol);
    const Matrix eye = identity(a.rows());

    Report rep = global.report();
    rep.field("command", "tower");
    rep.field("depth", tower.depth);
    for (std::size_t k = 1; k <= tower.depth; ++k) {
        const Matrix& dk = tower.dk[k - 1];
        const Matrix level = tower.p * dk * transpose(tower.p);
        rep.residual("dk_distance_" + std::to_string(k), frobenius_norm(dk - eye));
        rep.residual("reconstruction_residual_" + std::to_string(k),
                     frobenius_norm(repeated_square(level, k) - a));
    }
    rep.matrix("p", tower.p);
    for (std::size_t k = 1; k <= tower.depth; ++k)
        rep.matrix("d" + std::to_string(k), tower.dk[k - 1]);
    rep.emit("ok");
    return 0;
}

int run_idempotent(const std::vector<std::string>& block_paths,
                   const std::vector<double>& example_params, const GlobalOptions& global) {
    const Tolerances tol = global.tolerances();
    if (block_paths.empty() == example_params.empty())
        throw InvalidInput("BadArguments", "pass exactly one of --blocks or --example");

    Report rep = global.report();
    Matrix p = identity(1);
    Matrix t = identity(1);
    if (!block_paths.empty()) {
        if (block_paths.size() != 4)
            throw InvalidInput("BadArguments", "--blocks takes exactly four files: A B C D");
        BlockQuadruple quad(read_file(block_paths[0]), read_file(block_paths[1]),
                            read_file(block_paths[2]), read_file(block_paths[3]));
        rep.field("command", "idempotent --blocks");
        p = block_idempotent(quad, tol);
        t = involutory_from_idempotent(p, tol);
    } else {
        if (example_params.size() != 6)
            throw InvalidInput("BadArguments", "--example takes a,b,c,d,n,m");
        const double nd = example_params[4], md = example_params[5];
        if (nd < 1 || md < 1 || nd != static_cast<std::size_t>(nd) || md != static_cast<std::size_t>(md))
            throw InvalidInput("BadArguments", "orders n and m must be positive integers");
        rep.field("command", "idempotent --example");
        ExampleFamily fam =
            example_family(example_params[0], example_params[1], example_params[2],
                           example_params[3], static_cast<std::size_t>(nd),
                           static_cast<std::size_t>(md), tol);
        p = std::move(fam.p);
        t = std::move(fam.t);
    }

    rep.residual("idempotent_residual", idempotent_residual(p));
    rep.residual("involutory_residual", involutory_residual(t));
    rep.matrix("p", p);
    rep.matrix("t", t);
    rep.emit("ok");
    return 0;
}

int run_verify(const std::string& kind, const std::string& in, const GlobalOptions& global) {
    const Tolerances tol = global.tolerances();
    const Matrix a = read_file(in);

    double res = 0.0;
    bool ok = false;
    std::string label;
    if (kind == "involutory") {
        res = involutory_residual(a);
        ok = is_involutory(a, tol);
        label = "involutory_residual";
    } else if (kind == "idempotent") {
        res = idempotent_residual(a);
        ok = is_idempotent(a, tol);
        label = "idempotent_residual";
    } else { // orthogonal
        res = orthogonality_residual(a);
        ok = is_orthogonal(a, tol);
        label = "orthogonality_residual";
    }

    Report rep = global.report();
    rep.field("command", "verify " + kind);
    rep.residual(label, res);
    rep.field("verified", ok);
    rep.emit(ok ? "ok" : "error");
    if (!ok) {
        const std::string name = kind == "involutory"    ? "NotInvolutory"
                                 : kind == "idempotent"  ? "NotIdempotent"
                                                         : "NotOrthogonal";
        std::fprintf(stderr, "%s: verification failed (residual %s)\n", name.c_str(),
                     format_scalar(res).c_str());
        return 2;
    }
    return 0;
}

int run_canonicalize(const std::string& kind, const std::string& in,
                     const GlobalOptions& global) {
    const Tolerances tol = global.tolerances();
    const Matrix a = read_file(in);
    Report rep = global.report();
    rep.field("command", "canonicalize " + kind);

    if (kind == "orthogonal") {
        const CanonicalOrthogonalForm form = orthogonal_canonical_form(a, tol);
        const Matrix d = blocks_direct_sum(form.blocks);
        rep.field("plus_count", count_blocks(form.blocks, BlockTag::PlusOne));
        rep.field("minus_count", count_blocks(form.blocks, BlockTag::MinusOne));
        rep.field("rotation_count", count_blocks(form.blocks, BlockTag::Rotation));
        std::size_t idx = 1;
        for (const CanonicalBlock& blk : form.blocks) {
            std::string desc;
            switch (blk.tag) {
            case BlockTag::PlusOne: desc = "PlusOne"; break;
            case BlockTag::MinusOne: desc = "MinusOne"; break;
            case BlockTag::Rotation: desc = "Rotation(" + format_scalar(blk.theta) + ")"; break;
            case BlockTag::Reflection: desc = "Reflection(" + format_scalar(blk.theta) + ")"; break;
            }
            rep.field("block_" + std::to_string(idx++), desc);
        }
        const OrthogonalClassification cls = classify_orthogonal(a, tol);
        rep.field("classification", std::string(to_string(cls.kind)));
        rep.field("root_eligible", cls.root_eligible);
        rep.residual("reconstruction_residual",
                     frobenius_norm(form.p * d * transpose(form.p) - a));
        rep.matrix("p", form.p);
        rep.matrix("d", d);
    } else if (kind == "idempotent") {
        const IdempotentCanonicalForm canon = idempotent_canonicalize(a, tol);
        Matrix ir0(a.rows(), a.cols());
        for (std::size_t i = 0; i < canon.rank; ++i)
            ir0(i, i) = 1.0;
        rep.field("rank", canon.rank);
        rep.residual("reconstruction_residual",
                     frobenius_norm(canon.m * ir0 * lu_invert(canon.m, tol) - a));
        rep.matrix("m", canon.m);
    } else { // involutory
        const InvolutoryEigenbasis basis = involutory_eigenbasis(a, tol);
        Matrix j(a.rows(), a.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            j(i, i) = i < basis.positive_count ? 1.0 : -1.0;
        rep.field("positive_count", basis.positive_count);
        rep.residual("diagonalization_residual",
                     frobenius_norm(lu_invert(basis.b, tol) * a * basis.b - j));
        rep.matrix("b", basis.b);
    }

    rep.emit("ok");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"real square roots of involutory, symmetric and orthogonal matrices;\n"
                 "block idempotents and canonical forms — with residuals for every claim"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--tol", global.tol, "equality tolerance (relative Frobenius)");
    app.add_option("--seed", global.seed, "seed for sampled outputs");
    app.add_option("--out", global.out_dir, "write matrices to this directory instead of inline");
    app.add_flag("--json", global.json, "emit the report as a single JSON object");

    std::string family_kind;
    std::vector<double> family_params;
    auto* family = app.add_subcommand("family", "generate a parametric family member");
    family->fallthrough();
    family->add_option("kind", family_kind, "involutory2|psi|rotation|reflection")
        ->required()
        ->check(CLI::IsMember({"involutory2", "psi", "rotation", "reflection"}));
    family->add_option("--params", family_params, "comma-separated parameters")->delimiter(',');

    std::string root_kind, root_in;
    std::vector<int> root_signs;
    std::vector<std::string> root_psi;
    auto* root = app.add_subcommand("root", "construct a real square root");
    root->fallthrough();
    root->add_option("kind", root_kind, "involutory|symmetric|orthogonal")
        ->required()
        ->check(CLI::IsMember({"involutory", "symmetric", "orthogonal"}));
    root->add_option("--in", root_in, "input matrix file")->required();
    root->add_option("--signs", root_signs, "+-1 per positive direction")->delimiter(',');
    root->add_option("--psi", root_psi, "a:b pair per negative pair")->delimiter(',');

    std::string tower_in;
    std::size_t tower_depth = 0;
    auto* tower = app.add_subcommand("tower", "root-approximation tower of an orthogonal matrix");
    tower->fallthrough();
    tower->add_option("--in", tower_in, "input matrix file")->required();
    tower->add_option("--depth", tower_depth, "number of levels (1..40)")->required();

    std::vector<std::string> idem_blocks;
    std::vector<double> idem_example;
    auto* idem = app.add_subcommand("idempotent", "build an idempotent from block data");
    idem->fallthrough();
    idem->add_option("--blocks", idem_blocks, "four matrix files: A B C D")->expected(4);
    idem->add_option("--example", idem_example, "a,b,c,d,n,m scalar family")->delimiter(',');

    std::string verify_kind, verify_in;
    auto* verify = app.add_subcommand("verify", "check a matrix property, print the residual");
    verify->fallthrough();
    verify->add_option("kind", verify_kind, "involutory|idempotent|orthogonal")
        ->required()
        ->check(CLI::IsMember({"involutory", "idempotent", "orthogonal"}));
    verify->add_option("--in", verify_in, "input matrix file")->required();

    std::string canon_kind, canon_in;
    auto* canon = app.add_subcommand("canonicalize", "compute a canonical form");
    canon->fallthrough();
    canon->add_option("kind", canon_kind, "orthogonal|idempotent|involutory")
        ->required()
        ->check(CLI::IsMember({"orthogonal", "idempotent", "involutory"}));
    canon->add_option("--in", canon_in, "input matrix file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (family->parsed())
            return run_family(family_kind, family_params, global);
        if (root->parsed()) {
            std::optional<std::vector<int>> signs;
            if (root->count("--signs"))
                signs = root_signs;
            std::optional<std::vector<PsiParam>> psi_params;
            if (root->count("--psi"))
                psi_params = parse_psi_list(root_psi);
            return run_root(root_kind, root_in, signs, psi_params, global);
        }
        if (tower->parsed())
            return run_tower(tower_in, tower_depth, global);
        if (idem->parsed())
            return run_idempotent(idem_blocks, idem_example, global);
        if (verify->parsed())
            return run_verify(verify_kind, verify_in, global);
        if (canon->parsed())
            return run_canonicalize(canon_kind, canon_in, global);
        std::fprintf(stderr, "InvalidInput: no subcommand\n");
        return 1;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "%s: %s\n", e.name().c_str(), e.what());
        if (global.json)
            std::printf("{\n  \"status\": \"error\",\n  \"error\": \"%s\"\n}\n", e.name().c_str());
        return 2;
    } catch (const InvalidInput& e) {
        std::fprintf(stderr, "%s: %s\n", e.name().c_str(), e.what());
        if (global.json)
            std::printf("{\n  \"status\": \"error\",\n  \"error\": \"%s\"\n}\n", e.name().c_str());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "Error: %s\n", e.what());
        return 1;
    }
}
