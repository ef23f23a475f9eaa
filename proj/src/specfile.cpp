#include "amalg/specfile.hpp"

#include "amalg/errors.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace amalg {

namespace {

const Json& require_field(const Json& j, const char* key, const char* where) {
    const auto it = j.find(key);
    if (it == j.end()) {
        throw ValidationError(std::string(where) + ": missing field '" + key + "'");
    }
    return *it;
}

int require_int(const Json& j, const char* where) {
    if (!j.is_number_integer()) throw ValidationError(std::string(where) + ": expected an integer");
    return j.get<int>();
}

std::string require_string(const Json& j, const char* where) {
    if (!j.is_string()) throw ValidationError(std::string(where) + ": expected a string");
    return j.get<std::string>();
}

} // namespace

Json element_json(const Element& x) {
    Json arr = Json::array();
    for (int k = 0; k < x.dim(); ++k) arr.push_back(format_rational(x[k]));
    return arr;
}

Json tensor_entries_json(const StructureTensor& t) {
    Json entries = Json::array();
    for (int i = 0; i < t.dim; ++i) {
        for (int j = 0; j < t.dim; ++j) {
            for (int k = 0; k < t.dim; ++k) {
                if (t.at(i, j, k) == 0) continue;
                entries.push_back(Json::array({i + 1, j + 1, k + 1, format_rational(t.at(i, j, k))}));
            }
        }
    }
    return entries;
}

Json emit_spec(const AlgebraSpec& spec) {
    spec.validate();
    Json weights = Json::array();
    for (const Rational& w : spec.norm.weights) weights.push_back(format_rational(w));
    Json j;
    j["dimension"] = spec.dim();
    j["norm"] = {{"kind", spec.norm.kind == NormKind::weighted_sup ? "weighted_sup" : "weighted_l1"},
                 {"weights", std::move(weights)}};
    j["product"] = {{"entries", tensor_entries_json(spec.tensor)}};
    return j;
}

AlgebraSpec parse_spec(const Json& j) {
    if (!j.is_object()) throw ValidationError("spec file: root must be an object");
    const int dim = require_int(require_field(j, "dimension", "spec file"), "dimension");
    if (dim < 1) throw ValidationError("spec file: dimension must be >= 1");

    const Json& jnorm = require_field(j, "norm", "spec file");
    const std::string kind = require_string(require_field(jnorm, "kind", "norm"), "norm.kind");
    NormKind nk;
    if (kind == "weighted_sup") {
        nk = NormKind::weighted_sup;
    } else if (kind == "weighted_l1") {
        nk = NormKind::weighted_l1;
    } else {
        throw ValidationError("norm.kind: expected 'weighted_sup' or 'weighted_l1'");
    }
    const Json& jweights = require_field(jnorm, "weights", "norm");
    if (!jweights.is_array() || static_cast<int>(jweights.size()) != dim) {
        throw ValidationError("norm.weights: expected an array of length 'dimension'");
    }
    RatVec weights;
    weights.reserve(jweights.size());
    for (const Json& w : jweights) {
        const Rational value = parse_rational(require_string(w, "norm.weights"));
        if (value <= 0) throw ValidationError("norm.weights: weights must be strictly positive");
        weights.push_back(value);
    }

    const Json& jprod = require_field(j, "product", "spec file");
    const Json& jentries = require_field(jprod, "entries", "product");
    if (!jentries.is_array()) throw ValidationError("product.entries: expected an array");
    StructureTensor tensor(dim);
    std::set<std::array<int, 3>> seen;
    std::size_t pos = 0;
    for (const Json& entry : jentries) {
        const std::string where = "product.entries[" + std::to_string(pos++) + "]";
        if (!entry.is_array() || entry.size() != 4) {
            throw ValidationError(where + ": expected [i, j, k, \"p/q\"]");
        }
        const int i = require_int(entry[0], where.c_str());
        const int jj = require_int(entry[1], where.c_str());
        const int k = require_int(entry[2], where.c_str());
        if (i < 1 || i > dim || jj < 1 || jj > dim || k < 1 || k > dim) {
            throw ValidationError(where + ": index out of range (1-based)");
        }
        if (!seen.insert({i, jj, k}).second) {
            throw ValidationError(where + ": duplicate (i, j, k) entry");
        }
        tensor.at(i - 1, jj - 1, k - 1) = parse_rational(require_string(entry[3], where.c_str()));
    }

    AlgebraSpec spec;
    spec.norm = NormSpec(nk, std::move(weights));
    spec.tensor = std::move(tensor);
    spec.validate();
    return spec;
}

AlgebraSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("json parse error in ") + path + ": " + e.what());
    }
    return parse_spec(j);
}

Json emit_constraints(const ConstraintSystem& cs) {
    cs.validate();
    Json arr = Json::array();
    for (const auto& c : cs.constraints) {
        arr.push_back(Json::array({c.t + 1, c.s + 1, format_rational(c.lambda)}));
    }
    Json j;
    j["ambient"] = cs.ambient;
    j["constraints"] = std::move(arr);
    return j;
}

ConstraintSystem parse_constraints(const Json& j) {
    if (!j.is_object()) throw ValidationError("constraint file: root must be an object");
    ConstraintSystem cs;
    cs.ambient = require_int(require_field(j, "ambient", "constraint file"), "ambient");
    const Json& jcons = require_field(j, "constraints", "constraint file");
    if (!jcons.is_array()) throw ValidationError("constraints: expected an array");
    std::size_t pos = 0;
    for (const Json& entry : jcons) {
        const std::string where = "constraints[" + std::to_string(pos++) + "]";
        if (!entry.is_array() || entry.size() != 3) {
            throw ValidationError(where + ": expected [t, s, \"p/q\"]");
        }
        ConstraintSystem::Constraint c;
        c.t = require_int(entry[0], where.c_str()) - 1;
        c.s = require_int(entry[1], where.c_str()) - 1;
        c.lambda = parse_rational(require_string(entry[2], where.c_str()));
        cs.constraints.push_back(std::move(c));
    }
    cs.validate();
    return cs;
}

ConstraintSystem load_constraints(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("json parse error in ") + path + ": " + e.what());
    }
    return parse_constraints(j);
}

std::string dump_json(const Json& j) {
    return j.dump(2) + "\n";
}

namespace {

Json index_triple_json(const std::array<int, 3>& t) {
    return Json::array({t[0] + 1, t[1] + 1, t[2] + 1});
}

Json disjointness_witness_json(const DisjointnessWitness& w) {
    Json j;
    j["entry"] = index_triple_json(w.entry);
    j["f"] = element_json(w.f);
    j["g"] = element_json(w.g);
    if (w.h.dim() > 0) {
        j["h"] = element_json(w.h);
        j["side"] = w.left ? "left" : "right";
    }
    return j;
}

} // namespace

Json axiom_report_json(const AxiomReport& rep, const AmNormVerdict& am) {
    Json checks = Json::array();

    Json positive;
    positive["name"] = "positive_product";
    positive["tag"] = "lattice_algebra_axiom";
    positive["holds"] = rep.positive_product;
    if (rep.positivity_witness) positive["witness"] = index_triple_json(*rep.positivity_witness);
    checks.push_back(std::move(positive));

    Json assoc;
    assoc["name"] = "associative";
    assoc["tag"] = "algebra_axiom";
    assoc["holds"] = rep.associative;
    if (rep.associativity_witness) {
        assoc["witness"] = Json::array({(*rep.associativity_witness)[0] + 1,
                                        (*rep.associativity_witness)[1] + 1,
                                        (*rep.associativity_witness)[2] + 1});
    }
    checks.push_back(std::move(assoc));

    Json submult;
    submult["name"] = "submultiplicative";
    submult["tag"] = "banach_algebra_axiom";
    submult["holds"] = rep.submultiplicative;
    submult["note"] = "checked at positive unit-ball extreme points";
    if (rep.submult_witness) {
        submult["witness"] = {{"x", element_json(rep.submult_witness->x)},
                              {"y", element_json(rep.submult_witness->y)},
                              {"product_norm", format_rational(rep.submult_witness->product_norm)}};
    }
    checks.push_back(std::move(submult));

    Json identity;
    identity["name"] = "identity";
    identity["tag"] = "algebra_identity";
    identity["holds"] = rep.identity.has_value();
    if (rep.identity) identity["value"] = element_json(*rep.identity);
    checks.push_back(std::move(identity));

    Json norm_one;
    norm_one["name"] = "identity_norm_one";
    norm_one["tag"] = "algebra_identity";
    norm_one["holds"] = rep.identity_norm_one;
    checks.push_back(std::move(norm_one));

    Json falg;
    falg["name"] = "f_algebra";
    falg["tag"] = "f_algebra";
    if (rep.f_algebra) {
        falg["holds"] = *rep.f_algebra;
        if (rep.f_witness) falg["witness"] = disjointness_witness_json(*rep.f_witness);
    } else {
        falg["holds"] = nullptr; // undefined without a positive product
    }
    checks.push_back(std::move(falg));

    Json almost;
    almost["name"] = "almost_f_algebra";
    almost["tag"] = "almost_f_algebra";
    if (rep.almost_f_algebra) {
        almost["holds"] = *rep.almost_f_algebra;
        if (rep.almost_f_witness) almost["witness"] = disjointness_witness_json(*rep.almost_f_witness);
    } else {
        almost["holds"] = nullptr;
    }
    checks.push_back(std::move(almost));

    Json amj;
    amj["name"] = "am_norm";
    amj["tag"] = "am_space";
    amj["holds"] = am.am;
    if (am.witness) {
        amj["witness"] = {{"x", element_json(am.witness->first)},
                          {"y", element_json(am.witness->second)}};
    }
    checks.push_back(std::move(amj));

    Json j;
    j["checks"] = std::move(checks);
    return j;
}

Json representation_json(const RepresentationResult& rep) {
    Json scaling = Json::array();
    for (const Rational& w : rep.scaling) scaling.push_back(format_rational(w));
    Json j;
    j["tag"] = "am_representation";
    j["scaling"] = std::move(scaling);
    j["transported_entries"] = tensor_entries_json(rep.transported);
    j["is_pointwise"] = rep.is_pointwise;
    return j;
}

Json quotient_json(const QuotientResult& q) {
    Json classes = Json::array();
    for (const auto& members : q.classes) {
        Json cls = Json::array();
        for (int p : members) cls.push_back(p + 1);
        classes.push_back(std::move(cls));
    }
    Json zero = Json::array();
    for (int zc : q.zero_classes) zero.push_back(zc + 1);
    Json basis = Json::array();
    for (const RatVec& b : q.embedded_basis) {
        Json row = Json::array();
        for (const Rational& v : b) row.push_back(format_rational(v));
        basis.push_back(std::move(row));
    }
    Json j;
    j["tag"] = "sublattice_quotient";
    j["classes"] = std::move(classes);
    j["zero_classes"] = std::move(zero);
    j["solution_dimension"] = q.solution_dim;
    j["image_dimension"] = static_cast<int>(q.classes.size()) - static_cast<int>(q.zero_classes.size());
    j["embedded_basis"] = std::move(basis);
    return j;
}

Json ideal_report_json(const IdealAeReport& rep) {
    Json support = Json::array();
    for (int k : rep.support) support.push_back(k + 1);
    Json j;
    j["tag"] = "ideal_norm_coincidence";
    j["support"] = std::move(support);
    j["restricted"] = emit_spec(rep.restricted);
    if (rep.representation) {
        j["representation"] = representation_json(*rep.representation);
    } else {
        j["representation_error"] = rep.representation_error;
    }
    j["ambient_submultiplicative"] = rep.ambient_submultiplicative;
    j["norm_coincides"] = rep.norm_coincides;
    j["spectral_within_tol"] = rep.spectral_within_tol;
    j["spectral_max_err"] = rep.spectral_max_err;
    j["samples"] = rep.samples;
    return j;
}

} // namespace amalg
