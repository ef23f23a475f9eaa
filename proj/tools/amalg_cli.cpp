// amalg: file-based front end for the lattice-algebra workbench.
// Reports go to stdout as JSON, diagnostics to stderr.
// Exit codes: 0 all requested checks hold, 1 a check fails or a domain
// error occurs, 2 invalid input.

#include "amalg/complexify.hpp"
#include "amalg/constructions.hpp"
#include "amalg/errors.hpp"
#include "amalg/representation.hpp"
#include "amalg/sampling.hpp"
#include "amalg/specfile.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace amalg;

RatVec parse_rational_csv(const std::string& text) {
    RatVec out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
}

int run_check(const std::string& path, const std::string& require_csv) {
    const AlgebraSpec spec = load_spec(path);
    const AxiomReport rep = check_axioms(spec);
    const AmNormVerdict am = is_am_norm(spec.norm);

    Json report;
    report["input"] = path;
    report["dimension"] = spec.dim();
    report.update(axiom_report_json(rep, am));

    std::map<std::string, bool> holds;
    holds["positive_product"] = rep.positive_product;
    holds["associative"] = rep.associative;
    holds["submultiplicative"] = rep.submultiplicative;
    holds["identity"] = rep.identity.has_value();
    holds["identity_norm_one"] = rep.identity_norm_one;
    holds["f_algebra"] = rep.f_algebra.value_or(false);
    holds["almost_f_algebra"] = rep.almost_f_algebra.value_or(false);
    holds["am_norm"] = am.am;

    std::vector<std::string> required;
    if (require_csv.empty()) {
        for (const auto& [name, value] : holds) required.push_back(name);
    } else {
        std::stringstream ss(require_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!holds.count(item)) throw BadParameter("unknown check name: " + item);
            required.push_back(item);
        }
    }
    bool all = true;
    for (const std::string& name : required) all = all && holds[name];
    report["required"] = required;
    report["all_hold"] = all;
    std::cout << dump_json(report);
    return all ? 0 : 1;
}

int run_represent(const std::string& path) {
    const AlgebraSpec spec = load_spec(path);
    const RepresentationResult rep = represent_am_unit(spec);
    Json report;
    report["input"] = path;
    report.update(representation_json(rep));
    std::cout << dump_json(report);
    return 0;
}

int run_quotient(const std::string& path) {
    const ConstraintSystem cs = load_constraints(path);
    Json report;
    report["input"] = path;
    const SubalgebraVerdict sub = subalgebra_check(cs);
    report["subalgebra"] = sub.closed;
    const QuotientResult q = quotient_representation(cs); // throws NotSubalgebra when not closed
    report.update(quotient_json(q));
    std::cout << dump_json(report);
    return 0;
}

int run_alt_product(const std::string& path, const std::string& kind, int alpha, int beta,
                    const std::string& phi_csv, const std::string& x0_csv,
                    const std::string& out_path) {
    const AlgebraSpec spec = load_spec(path);
    Json report;
    report["input"] = path;
    report["kind"] = kind;

    StructureTensor tensor;
    std::vector<std::pair<int, int>> differs;
    if (kind == "star") {
        if (alpha < 1 || beta < 1) throw BadParameter("star needs --alpha and --beta (1-based)");
        const StarResult res = star_product(spec, alpha - 1, beta - 1);
        tensor = res.tensor;
        differs = res.differs_at;
    } else if (kind == "ast") {
        if (phi_csv.empty() || x0_csv.empty()) throw BadParameter("ast needs --phi and --x0");
        const Functional phi(parse_rational_csv(phi_csv));
        const Element x0(parse_rational_csv(x0_csv));
        const AstResult res = ast_product(spec, phi, x0);
        tensor = res.tensor;
        differs = res.differs_at;
        report["witness"] = {{"x", element_json(res.witness_x)},
                             {"new_square", element_json(res.witness_square)}};
    } else {
        throw BadParameter("--kind must be 'star' or 'ast'");
    }

    AlgebraSpec deformed;
    deformed.norm = spec.norm;
    deformed.tensor = tensor;
    report["spec"] = emit_spec(deformed);
    Json diff = Json::array();
    for (const auto& [i, j] : differs) diff.push_back(Json::array({i + 1, j + 1}));
    report["differs_at"] = std::move(diff);
    report["differs"] = !differs.empty();

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw ValidationError("cannot write file: " + out_path);
        out << dump_json(emit_spec(deformed));
    }
    std::cout << dump_json(report);
    return 0;
}

int run_martignon(int n) {
    const std::vector<StructureTensor> products = martignon_products(n);
    Json report;
    report["tag"] = "unique_unital_product";
    report["n"] = n;
    report["solutions"] = products.size();
    Json solutions = Json::array();
    for (const StructureTensor& t : products) solutions.push_back(tensor_entries_json(t));
    report["solution_entries"] = std::move(solutions);
    const bool unique_pointwise =
        products.size() == 1 && products[0] == StructureTensor::kronecker(n);
    report["unique_pointwise"] = unique_pointwise;
    std::cout << dump_json(report);
    if (!unique_pointwise) {
        std::cerr << "martignon: solution set is not the pointwise singleton\n";
        return 1;
    }
    return 0;
}

int run_gallery_list() {
    Json report;
    report["gallery"] = Json::array();
    for (const std::string& name : GalleryName::names()) {
        Json entry;
        entry["name"] = name;
        entry["parameterized"] = (name != "twisted_linf2");
        report["gallery"].push_back(std::move(entry));
    }
    std::cout << dump_json(report);
    return 0;
}

int run_gallery_emit(const std::string& name, int n, const std::string& weights_csv) {
    const RatVec weights = weights_csv.empty() ? RatVec{} : parse_rational_csv(weights_csv);
    const AlgebraSpec spec = gallery(GalleryName::parse(name, n, weights));
    std::cout << dump_json(emit_spec(spec));
    return 0;
}

Json sparse_json(const std::map<long, Rational>& entries) {
    Json arr = Json::array();
    for (const auto& [i, v] : entries) arr.push_back(Json::array({i, format_rational(v)}));
    return arr;
}

int run_demo_sparse(std::uint64_t seed) {
    Sampler sampler(seed);
    Json report;
    report["tag"] = "approximate_unit_model";
    report["seed"] = seed;
    bool ok = true;

    Json elements = Json::array();
    for (int trial = 0; trial < 3; ++trial) {
        const SparseSeq x = sampler.sparse();
        const long witness = approx_algebraic_identity_witness(x);
        const SparseSeq en = UnitPrefix{std::max(witness, 1L)}.realize();
        const bool converged = seq_norm(seq_ops(seq_ops(en, x, SeqOp::mul), x, SeqOp::sub)) == 0;
        ok = ok && converged;
        // beyond the support there is always an atom the element cannot reproduce
        const SparseSeq atom(std::map<long, Rational>{{witness + 1, Rational(1)}});
        const bool not_identity = seq_ops(x, atom, SeqOp::mul) != atom;
        ok = ok && not_identity;
        elements.push_back({{"entries", sparse_json(x.entries)},
                            {"identity_witness", witness},
                            {"unit_prefix_reproduces", converged},
                            {"not_a_global_identity", not_identity}});
    }
    report["elements"] = std::move(elements);

    Json functionals = Json::array();
    for (int trial = 0; trial < 3; ++trial) {
        const SparseFunctional f = sampler.sparse_functional_positive();
        const long witness = approx_order_unit_witness(f);
        const SparseSeq en = UnitPrefix{std::max(witness, 1L)}.realize();
        const bool attained = f.pairing(en) == f.norm();
        ok = ok && attained;
        functionals.push_back({{"entries", sparse_json(f.entries)},
                               {"order_unit_witness", witness},
                               {"norm_attained", attained}});
    }
    report["functionals"] = std::move(functionals);

    // disjoint positive triples: shift one factor beyond the other's support
    std::vector<std::tuple<SparseSeq, SparseSeq, SparseSeq>> triples;
    const SparseSeq zero_seq;
    for (int trial = 0; trial < 5; ++trial) {
        const SparseSeq x = seq_ops(sampler.sparse(), zero_seq, SeqOp::sup);
        std::map<long, Rational> shifted;
        for (const auto& [i, v] : seq_ops(sampler.sparse(), zero_seq, SeqOp::sup).entries) {
            shifted[i + x.max_support_index()] = v;
        }
        const SparseSeq y(std::move(shifted));
        const SparseSeq h = seq_ops(sampler.sparse(), zero_seq, SeqOp::sup);
        triples.emplace_back(x, y, h);
    }
    const bool f_alg = verify_f_algebra_sparse(triples);
    ok = ok && f_alg;
    report["f_algebra_samples_ok"] = f_alg;

    report["ok"] = ok;
    std::cout << dump_json(report);
    return ok ? 0 : 1;
}

int dispatch(int argc, char** argv) {
    CLI::App app{"workbench for finite-dimensional lattice algebras"};
    app.require_subcommand(1);
    std::uint64_t seed = 20240901;
    app.add_option("--seed", seed, "seed for randomized demo checks");

    std::string check_path, check_require;
    CLI::App* check = app.add_subcommand("check", "run the axiom battery on a spec file");
    check->add_option("file", check_path, "spec file")->required();
    check->add_option("--require", check_require, "comma list of checks that must hold");

    std::string represent_path;
    CLI::App* represent =
        app.add_subcommand("represent", "isometry of an AM spec with unit onto a pointwise algebra");
    represent->add_option("file", represent_path, "spec file")->required();

    std::string quotient_path;
    CLI::App* quotient =
        app.add_subcommand("quotient", "quotient-and-glue normal form of a constraint system");
    quotient->add_option("file", quotient_path, "constraint file")->required();

    std::string alt_path, alt_kind, alt_phi, alt_x0, alt_out;
    int alt_alpha = 0, alt_beta = 0;
    CLI::App* alt = app.add_subcommand("alt-product", "deformed products on a unital spec");
    alt->add_option("file", alt_path, "spec file")->required();
    alt->add_option("--kind", alt_kind, "star or ast")->required();
    alt->add_option("--alpha", alt_alpha, "support coordinate for alpha (1-based, star)");
    alt->add_option("--beta", alt_beta, "support coordinate for beta (1-based, star)");
    alt->add_option("--phi", alt_phi, "comma-separated functional coordinates (ast)");
    alt->add_option("--x0", alt_x0, "comma-separated element coordinates (ast)");
    alt->add_option("--out", alt_out, "write the deformed spec file here");

    int martignon_n = 0;
    CLI::App* martignon =
        app.add_subcommand("martignon", "all nonnegative products with identity (1,...,1)");
    martignon->add_option("n", martignon_n, "dimension")->required();

    CLI::App* gallery_cmd = app.add_subcommand("gallery", "named example specs");
    CLI::App* gallery_list = gallery_cmd->add_subcommand("list", "list gallery names");
    std::string gallery_name, gallery_weights;
    int gallery_n = 1;
    CLI::App* gallery_emit = gallery_cmd->add_subcommand("emit", "emit a gallery spec file");
    gallery_emit->add_option("name", gallery_name, "gallery name")->required();
    gallery_emit->add_option("n", gallery_n, "size parameter");
    gallery_emit->add_option("--weights", gallery_weights, "comma-separated weights (pointwise)");
    gallery_cmd->require_subcommand(1);

    CLI::App* demo = app.add_subcommand("demo-sparse", "finitely supported approximate-unit demo");
    demo->add_option("--seed", seed, "seed for the randomized demo");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (*check) return run_check(check_path, check_require);
    if (*represent) return run_represent(represent_path);
    if (*quotient) return run_quotient(quotient_path);
    if (*alt) return run_alt_product(alt_path, alt_kind, alt_alpha, alt_beta, alt_phi, alt_x0, alt_out);
    if (*martignon) return run_martignon(martignon_n);
    if (*gallery_cmd) {
        if (*gallery_list) return run_gallery_list();
        if (*gallery_emit) return run_gallery_emit(gallery_name, gallery_n, gallery_weights);
    }
    if (*demo) return run_demo_sparse(seed);
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const amalg::ValidationError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const amalg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
