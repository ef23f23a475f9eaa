#include "amalg/representation.hpp"

#include "amalg/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace amalg {

void ConstraintSystem::validate() const {
    if (ambient < 1) throw ValidationError("constraint system: ambient dimension must be positive");
    for (const Constraint& c : constraints) {
        if (c.t < 0 || c.t >= ambient || c.s < 0 || c.s >= ambient) {
            throw ValidationError("constraint system: index out of range");
        }
        if (c.lambda < 0) throw ValidationError("constraint system: lambda must be nonnegative");
    }
}

RepresentationResult represent_am_unit(const AlgebraSpec& a) {
    const AxiomReport rep = check_axioms(a);
    if (!rep.positive_product) throw PreconditionViolated("represent_am_unit: product is not positive");
    if (!rep.associative) throw PreconditionViolated("represent_am_unit: product is not associative");
    if (a.norm.kind != NormKind::weighted_sup) {
        throw NotAM("represent_am_unit: norm kind is not weighted_sup");
    }
    if (!rep.identity) throw NoIdentity("represent_am_unit: no two-sided identity");
    const Element unit = *order_unit_of_ball(a.norm);
    if (*rep.identity != unit) {
        throw IdentityNotOrderUnit("represent_am_unit: identity is not the order unit of the ball");
    }

    const int n = a.dim();
    RepresentationResult out;
    out.scaling = a.norm.weights;
    out.transported = StructureTensor(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                out.transported.at(i, j, k) =
                    a.tensor.at(i, j, k) * a.norm.weights[static_cast<std::size_t>(k)] /
                    (a.norm.weights[static_cast<std::size_t>(i)] * a.norm.weights[static_cast<std::size_t>(j)]);
            }
        }
    }
    out.is_pointwise = (out.transported == StructureTensor::kronecker(n));
    if (!out.is_pointwise) {
        throw TheoremViolation(
            "represent_am_unit: transported product is not pointwise although the "
            "preconditions verified");
    }
    return out;
}

namespace {

// Sparse linear equation sum coeff_v * x_v = rhs over tensor entries.
struct Equation {
    std::vector<std::pair<int, Rational>> terms;
    Rational rhs;
};

} // namespace

std::vector<StructureTensor> martignon_products(int n) {
    if (n < 1) throw BadParameter("martignon_products: n must be >= 1");
    const int nvars = n * n * n;
    const auto var = [n](int i, int j, int k) { return (i * n + j) * n + k; };

    std::vector<Equation> eqs;
    eqs.reserve(static_cast<std::size_t>(2) * n * n);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            Equation left, right;
            for (int i = 0; i < n; ++i) {
                left.terms.emplace_back(var(i, j, k), Rational(1));
                right.terms.emplace_back(var(j, i, k), Rational(1));
            }
            left.rhs = (j == k) ? 1 : 0;
            right.rhs = left.rhs;
            eqs.push_back(std::move(left));
            eqs.push_back(std::move(right));
        }
    }

    std::vector<std::optional<Rational>> value(static_cast<std::size_t>(nvars));

    // Propagate: residual-zero equations with same-signed surviving
    // coefficients force their variables to zero; single-variable
    // equations are solved directly.
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Equation& eq : eqs) {
            Rational residual = eq.rhs;
            std::vector<std::pair<int, Rational>> open;
            for (const auto& [v, coeff] : eq.terms) {
                if (value[static_cast<std::size_t>(v)]) {
                    residual -= coeff * *value[static_cast<std::size_t>(v)];
                } else {
                    open.emplace_back(v, coeff);
                }
            }
            if (open.empty()) {
                if (residual != 0) return {}; // inconsistent
                continue;
            }
            if (open.size() == 1) {
                value[static_cast<std::size_t>(open[0].first)] = residual / open[0].second;
                changed = true;
                continue;
            }
            if (residual == 0) {
                const bool all_pos = std::all_of(open.begin(), open.end(),
                                                 [](const auto& t) { return t.second > 0; });
                const bool all_neg = std::all_of(open.begin(), open.end(),
                                                 [](const auto& t) { return t.second < 0; });
                if (all_pos || all_neg) {
                    for (const auto& [v, coeff] : open) value[static_cast<std::size_t>(v)] = Rational(0);
                    changed = true;
                }
            }
        }
    }

    const bool complete = std::all_of(value.begin(), value.end(),
                                      [](const auto& v) { return v.has_value(); });
    RatVec solution(static_cast<std::size_t>(nvars), Rational(0));
    if (complete) {
        for (int v = 0; v < nvars; ++v) solution[static_cast<std::size_t>(v)] = *value[static_cast<std::size_t>(v)];
    } else {
        // Eliminate exactly; the marginal systems here never reach this
        // branch with a nontrivial kernel, but stay honest if they would.
        RatMat a(eqs.size(), RatVec(static_cast<std::size_t>(nvars), Rational(0)));
        RatVec b(eqs.size(), Rational(0));
        for (std::size_t r = 0; r < eqs.size(); ++r) {
            for (const auto& [v, coeff] : eqs[r].terms) a[r][static_cast<std::size_t>(v)] = coeff;
            b[r] = eqs[r].rhs;
        }
        // Pin already-forced values.
        for (int v = 0; v < nvars; ++v) {
            if (!value[static_cast<std::size_t>(v)]) continue;
            RatVec row(static_cast<std::size_t>(nvars), Rational(0));
            row[static_cast<std::size_t>(v)] = 1;
            a.push_back(std::move(row));
            b.push_back(*value[static_cast<std::size_t>(v)]);
        }
        const auto sol = solve_linear(a, b);
        if (!sol) return {};
        if (!kernel_basis(a, nvars).empty()) {
            throw TheoremViolation(
                "martignon_products: affine solution set is positive-dimensional before the "
                "positivity cut; cannot happen for marginal-sum systems");
        }
        solution = *sol;
    }

    StructureTensor t(n);
    t.c = solution;
    if (!t.is_nonnegative()) return {};
    // Confirm the defining equations on the final tensor.
    const Element one(RatVec(static_cast<std::size_t>(n), Rational(1)));
    for (int j = 0; j < n; ++j) {
        const Element ej = Element::atom(n, j);
        if (multiply(one, ej, t) != ej || multiply(ej, one, t) != ej) {
            throw TheoremViolation("martignon_products: solution does not verify");
        }
    }
    return {t};
}

RatMat solution_basis(const ConstraintSystem& cs) {
    cs.validate();
    RatMat rows;
    rows.reserve(cs.constraints.size());
    for (const auto& c : cs.constraints) {
        RatVec row(static_cast<std::size_t>(cs.ambient), Rational(0));
        row[static_cast<std::size_t>(c.t)] += 1;
        row[static_cast<std::size_t>(c.s)] -= c.lambda;
        rows.push_back(std::move(row));
    }
    return kernel_basis(rows, cs.ambient);
}

std::vector<int> forced_zero_coordinates(const ConstraintSystem& cs) {
    const RatMat basis = solution_basis(cs);
    std::vector<int> zeros;
    for (int p = 0; p < cs.ambient; ++p) {
        const bool all_zero = std::all_of(basis.begin(), basis.end(), [p](const RatVec& b) {
            return b[static_cast<std::size_t>(p)] == 0;
        });
        if (all_zero) zeros.push_back(p);
    }
    return zeros;
}

SubalgebraVerdict subalgebra_check(const ConstraintSystem& cs) {
    const RatMat basis = solution_basis(cs);
    SubalgebraVerdict out;
    out.closed = true;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            RatVec product(basis[i].size());
            for (std::size_t p = 0; p < product.size(); ++p) product[p] = basis[i][p] * basis[j][p];
            if (!in_row_span(basis, product)) {
                out.closed = false;
                out.witness = SubalgebraVerdict::Witness{static_cast<int>(i), static_cast<int>(j),
                                                         std::move(product)};
                return out;
            }
        }
    }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

} // namespace

int QuotientResult::class_of(int coordinate) const {
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (std::binary_search(classes[c].begin(), classes[c].end(), coordinate)) {
            return static_cast<int>(c);
        }
    }
    throw BadParameter("class_of: coordinate outside the partition");
}

QuotientResult quotient_representation(const ConstraintSystem& cs) {
    const SubalgebraVerdict sub = subalgebra_check(cs);
    if (!sub.closed) {
        throw NotSubalgebra("quotient_representation: solution subspace is not closed under products");
    }

    QuotientResult out;
    out.basis = solution_basis(cs);
    out.solution_dim = static_cast<int>(out.basis.size());

    const std::vector<int> zeros = forced_zero_coordinates(cs);
    const std::set<int> zero_set(zeros.begin(), zeros.end());

    // Case split per constraint. A lambda outside {0,1} on a coordinate
    // that is not forced to zero would mean some solution f has
    // f(t)^2 = lambda^2 f(s)^2 and f^2(t) = lambda f(s)^2 with f(s) != 0,
    // contradicting closure under squares.
    UnionFind uf(cs.ambient);
    std::set<int> marked;
    for (const auto& c : cs.constraints) {
        if (zero_set.count(c.s)) {
            marked.insert(c.t);
        } else if (c.lambda == 0) {
            marked.insert(c.t);
        } else if (c.lambda == 1) {
            uf.unite(c.t, c.s);
        } else {
            throw ContradictsSubalgebra(
                "quotient_representation: constraint with lambda outside {0,1} on a "
                "non-vanishing coordinate survived subalgebra_check");
        }
    }
    // Every marked coordinate is zero in all solutions by construction of
    // the solution subspace; a mismatch would mean the null space and the
    // case analysis disagree.
    for (int t : marked) {
        if (!zero_set.count(t)) {
            throw TheoremViolation("quotient_representation: marked coordinate is not forced to zero");
        }
    }

    std::map<int, std::vector<int>> groups;
    for (int p = 0; p < cs.ambient; ++p) groups[uf.find(p)].push_back(p);
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        out.classes.push_back(members);
    }
    std::sort(out.classes.begin(), out.classes.end());

    for (std::size_t ci = 0; ci < out.classes.size(); ++ci) {
        const bool meets_zero = std::any_of(out.classes[ci].begin(), out.classes[ci].end(),
                                            [&](int p) { return zero_set.count(p) > 0; });
        if (meets_zero) {
            // Glued coordinates carry equal values in every solution, so a
            // class meeting the zero set lies inside it.
            for (int p : out.classes[ci]) {
                if (!zero_set.count(p)) {
                    throw TheoremViolation(
                        "quotient_representation: class meets the zero set without being contained in it");
                }
            }
            out.zero_classes.push_back(static_cast<int>(ci));
        }
    }

    // Cross-validate the computed partition against the semantic relation
    // "f(t) = f(s) for every basis f". Gluing refines semantics everywhere;
    // they agree on non-vanishing classes; all vanishing coordinates are
    // semantically equal (common value 0), which the partition may split.
    const auto columns_equal = [&](int p, int q) {
        return std::all_of(out.basis.begin(), out.basis.end(), [&](const RatVec& b) {
            return b[static_cast<std::size_t>(p)] == b[static_cast<std::size_t>(q)];
        });
    };
    for (const auto& members : out.classes) {
        for (std::size_t m = 1; m < members.size(); ++m) {
            if (!columns_equal(members[0], members[m])) {
                throw TheoremViolation("quotient_representation: glued pair separated by a solution");
            }
        }
    }
    for (std::size_t a = 0; a < out.classes.size(); ++a) {
        for (std::size_t b = a + 1; b < out.classes.size(); ++b) {
            const bool a_zero = std::binary_search(out.zero_classes.begin(), out.zero_classes.end(),
                                                   static_cast<int>(a));
            const bool b_zero = std::binary_search(out.zero_classes.begin(), out.zero_classes.end(),
                                                   static_cast<int>(b));
            if (a_zero || b_zero) continue;
            if (columns_equal(out.classes[a][0], out.classes[b][0])) {
                throw TheoremViolation(
                    "quotient_representation: distinct non-vanishing classes are semantically equal");
            }
        }
    }

    // Embedding: each basis solution becomes a function on classes.
    out.embedded_basis.reserve(out.basis.size());
    for (const RatVec& b : out.basis) {
        RatVec g(out.classes.size());
        for (std::size_t ci = 0; ci < out.classes.size(); ++ci) {
            g[ci] = b[static_cast<std::size_t>(out.classes[ci][0])];
        }
        out.embedded_basis.push_back(std::move(g));
    }

    // Image = {g : g = 0 on the zero classes}: dimension count plus
    // membership of every non-vanishing class indicator.
    const int expected_dim = static_cast<int>(out.classes.size()) -
                             static_cast<int>(out.zero_classes.size());
    if (out.solution_dim != expected_dim) {
        throw TheoremViolation("quotient_representation: dimension count mismatch");
    }
    if (rank(out.embedded_basis) != out.solution_dim) {
        throw TheoremViolation("quotient_representation: embedding is not injective");
    }
    for (const RatVec& g : out.embedded_basis) {
        for (int zc : out.zero_classes) {
            if (g[static_cast<std::size_t>(zc)] != 0) {
                throw TheoremViolation("quotient_representation: image does not vanish on F");
            }
        }
    }
    for (std::size_t ci = 0; ci < out.classes.size(); ++ci) {
        if (std::binary_search(out.zero_classes.begin(), out.zero_classes.end(), static_cast<int>(ci))) {
            continue;
        }
        RatVec indicator(out.classes.size(), Rational(0));
        indicator[ci] = 1;
        if (!in_row_span(out.embedded_basis, indicator)) {
            throw TheoremViolation("quotient_representation: vanishing ideal exceeds the image");
        }
    }

    return out;
}

AmClassification classify_am_algebra(const AlgebraSpec& a) {
    AmClassification out;
    const AxiomReport rep = check_axioms(a);
    if (!rep.positive_product || !rep.associative || !rep.submultiplicative) {
        out.failed_condition = "algebra axioms (positive/associative/submultiplicative)";
        return out;
    }
    if (a.norm.kind != NormKind::weighted_sup) {
        out.failed_condition = "norm kind is not weighted_sup";
        return out;
    }
    const int n = a.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                if (i == j && j == k) continue;
                if (a.tensor.at(i, j, k) != 0) {
                    out.failed_condition = "tensor is not diagonal (not an f-algebra)";
                    return out;
                }
            }
        }
    }
    for (int k = 0; k < n; ++k) {
        if (a.tensor.at(k, k, k) != a.norm.weights[static_cast<std::size_t>(k)]) {
            out.failed_condition = "diagonal entries do not match the norm weights";
            return out;
        }
    }
    out.ok = true;
    out.zero_set_size = 0;
    out.isometry_diag = a.norm.weights;
    return out;
}

} // namespace amalg
