#include "gravity/operad_core.hpp"

#include <algorithm>

#include "gravity/arnold.hpp"
#include "gravity/circle_action.hpp"
#include "gravity/errors.hpp"
#include "gravity/gravity_gk.hpp"
#include "gravity/gravity_westerland.hpp"

namespace gravity {

std::string model_name(Model m) {
    return m == Model::Westerland ? "westerland" : "getzler-kapranov";
}

PresentedElement presented_basis_element(const OperadPresentation& p, int n, int k, int index) {
    if (index < 0 || index >= p.dim(n, k))
        throw OutOfRange("presented basis index out of range");
    PresentedElement x;
    x.arity = n;
    x.degree = k;
    x.coords.assign(p.dim(n, k), Rational(0));
    x.coords[index] = 1;
    return x;
}

PresentedElement presented_unit(const OperadPresentation& p) {
    return presented_basis_element(p, 1, 0, 0);
}

PresentedElement presented_compose(const OperadPresentation& p, int i,
                                   const PresentedElement& x, const PresentedElement& y) {
    const int n = x.arity + y.arity - 1;
    PresentedElement out;
    out.arity = n;
    out.degree = x.degree + y.degree;
    out.coords.assign(p.dim(n, out.degree), Rational(0));
    auto it = p.composition.find({x.arity, y.arity, i, x.degree, y.degree});
    if (it == p.composition.end()) {
        if (p.dim(x.arity, x.degree) > 0 && p.dim(y.arity, y.degree) > 0)
            throw Error("presentation is missing a composition matrix");
        return out;
    }
    const LinearMap& m = it->second;
    const int dim_y = p.dim(y.arity, y.degree);
    for (const Entry& e : m.entries) {
        const int alpha = e.row / dim_y;
        const int beta = e.row % dim_y;
        if (is_zero(x.coords[alpha]) || is_zero(y.coords[beta]))
            continue;
        out.coords[e.col] += e.value * x.coords[alpha] * y.coords[beta];
    }
    return out;
}

PresentedElement presented_act(const OperadPresentation& p, const Permutation& g,
                               const PresentedElement& x) {
    if (static_cast<int>(g.size()) != x.arity)
        throw AmbientMismatch("permutation size does not match arity");
    PresentedElement out = x;
    // g = t_{j_1} ... t_{j_m} composed right to left, so the matrices act
    // starting from the last factor.
    std::vector<int> factors = adjacent_factorization(g);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        auto mt = p.action.find({x.arity, *it, x.degree});
        if (mt == p.action.end())
            throw Error("presentation is missing an action matrix");
        out.coords = apply_map(mt->second, out.coords);
    }
    return out;
}

namespace {

LinearMap action_matrix_on_moduli_dual(int n, int j, int k) {
    // Row beta = coordinates of the relabeled moduli basis vector; this is
    // the matrix of the homology action on the canonical dual coordinates
    // (the transposition is its own inverse).
    Permutation g = adjacent_transposition(n, j);
    const auto& mb = moduli_basis(n, k - 1);
    LinearMap m;
    m.rows = static_cast<int>(mb.size());
    m.cols = m.rows;
    m.source_basis_tag = "grav:n=" + std::to_string(n) + ":k=" + std::to_string(k);
    m.target_basis_tag = m.source_basis_tag;
    for (int beta = 0; beta < m.rows; ++beta) {
        Vec coords = moduli_coordinates(sn_act(g, mb[beta].underlying));
        for (int gamma = 0; gamma < m.cols; ++gamma)
            if (!is_zero(coords[gamma]))
                m.add(beta, gamma, coords[gamma]);
    }
    m.normalize();
    return m;
}

}  // namespace

OperadPresentation build_presentation(Model model, int max_arity) {
    OperadPresentation p;
    p.max_arity = max_arity;
    p.name = model_name(model);
    p.dims.resize(max_arity + 1);
    p.labels.resize(max_arity + 1);
    for (int n = 1; n <= max_arity; ++n) {
        p.dims[n].assign(n, 0);
        p.labels[n].resize(n);
        for (int k : grav_degrees(n)) {
            p.dims[n][k] = grav_dim(n, k);
            for (int idx = 0; idx < p.dims[n][k]; ++idx)
                p.labels[n][k].push_back("g" + std::to_string(n) + "d" + std::to_string(k) + "#" +
                                         std::to_string(idx));
        }
    }
    for (int r = 1; r <= max_arity; ++r) {
        for (int s = 1; r + s - 1 <= max_arity; ++s) {
            for (int i = 1; i <= r; ++i) {
                TreeInsertion t = tree_insertion(r, s, i);
                for (int dx : grav_degrees(r)) {
                    for (int dy : grav_degrees(s)) {
                        if (grav_dim(r, dx) == 0 || grav_dim(s, dy) == 0)
                            continue;
                        LinearMap m = model == Model::Westerland
                                          ? w_structure_matrix(t, dx, dy)
                                          : gk_structure_matrix(t, dx, dy);
                        p.composition[{r, s, i, dx, dy}] = std::move(m);
                    }
                }
            }
        }
    }
    for (int n = 2; n <= max_arity; ++n)
        for (int j = 1; j < n; ++j)
            for (int k : grav_degrees(n))
                if (grav_dim(n, k) > 0)
                    p.action[{n, j, k}] = action_matrix_on_moduli_dual(n, j, k);
    return p;
}

namespace {

bool equal_coords(const Vec& a, const Vec& b) {
    return a == b;
}

std::vector<PresentedElement> all_basis_elements(const OperadPresentation& p, int n) {
    std::vector<PresentedElement> out;
    for (int k = 0; k < static_cast<int>(p.dims[n].size()); ++k)
        for (int idx = 0; idx < p.dims[n][k]; ++idx)
            out.push_back(presented_basis_element(p, n, k, idx));
    return out;
}

std::string describe(int r, int s, int u, int i, int j) {
    return "(r=" + std::to_string(r) + ",s=" + std::to_string(s) + ",u=" + std::to_string(u) +
           ",i=" + std::to_string(i) + ",j=" + std::to_string(j) + ")";
}

}  // namespace

AxiomReport check_axioms(const OperadPresentation& p, int max_total_arity) {
    AxiomReport report;

    // Unit laws.
    PresentedElement unit = presented_unit(p);
    for (int n = 1; n <= std::min(p.max_arity, max_total_arity); ++n) {
        for (const PresentedElement& x : all_basis_elements(p, n)) {
            for (int i = 1; i <= n; ++i) {
                PresentedElement left = presented_compose(p, i, x, unit);
                report.note(equal_coords(left.coords, x.coords),
                            "unit law x o_" + std::to_string(i) + " 1 at arity " +
                                std::to_string(n));
            }
            PresentedElement right = presented_compose(p, 1, unit, x);
            report.note(equal_coords(right.coords, x.coords),
                        "unit law 1 o_1 x at arity " + std::to_string(n));
        }
    }

    // Associativity, both shapes.
    for (int r = 1; r <= p.max_arity; ++r) {
        for (int s = 1; r + s - 1 <= p.max_arity; ++s) {
            for (int u = 1; r + s + u - 2 <= std::min(p.max_arity, max_total_arity); ++u) {
                auto xs = all_basis_elements(p, r);
                auto ys = all_basis_elements(p, s);
                auto zs = all_basis_elements(p, u);
                for (const auto& x : xs) {
                    for (const auto& y : ys) {
                        for (const auto& z : zs) {
                            for (int i = 1; i <= r; ++i) {
                                PresentedElement xy = presented_compose(p, i, x, y);
                                // Sequential: z lands inside y.
                                for (int j = 1; j <= s; ++j) {
                                    PresentedElement left =
                                        presented_compose(p, i + j - 1, xy, z);
                                    PresentedElement right = presented_compose(
                                        p, i, x, presented_compose(p, j, y, z));
                                    report.note(equal_coords(left.coords, right.coords),
                                                "sequential associativity " +
                                                    describe(r, s, u, i, j));
                                }
                                // Parallel: z lands in a slot left of the block.
                                for (int j = 1; j < i; ++j) {
                                    PresentedElement left = presented_compose(p, j, xy, z);
                                    PresentedElement xz = presented_compose(p, j, x, z);
                                    PresentedElement right =
                                        presented_compose(p, i + u - 1, xz, y);
                                    Rational sign =
                                        (y.degree * z.degree) % 2 == 0 ? Rational(1) : Rational(-1);
                                    Vec scaled = right.coords;
                                    for (Rational& c : scaled)
                                        c *= sign;
                                    report.note(equal_coords(left.coords, scaled),
                                                "parallel commutation " + describe(r, s, u, i, j));
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    // Equivariance on the generators of both symmetric groups.
    for (int r = 1; r <= p.max_arity; ++r) {
        for (int s = 1; r + s - 1 <= std::min(p.max_arity, max_total_arity); ++s) {
            auto xs = all_basis_elements(p, r);
            auto ys = all_basis_elements(p, s);
            for (int i = 1; i <= r; ++i) {
                for (const auto& x : xs) {
                    for (const auto& y : ys) {
                        PresentedElement xy = presented_compose(p, i, x, y);
                        for (int a = 1; a < r; ++a) {
                            Permutation sigma = adjacent_transposition(r, a);
                            PresentedElement left = presented_compose(
                                p, sigma[i - 1], presented_act(p, sigma, x), y);
                            PresentedElement right =
                                presented_act(p, block_outer(sigma, s, i), xy);
                            report.note(equal_coords(left.coords, right.coords),
                                        "outer equivariance " + describe(r, s, 0, i, a));
                        }
                        for (int b = 1; b < s; ++b) {
                            Permutation tau = adjacent_transposition(s, b);
                            PresentedElement left =
                                presented_compose(p, i, x, presented_act(p, tau, y));
                            PresentedElement right =
                                presented_act(p, block_inner(tau, r, i), xy);
                            report.note(equal_coords(left.coords, right.coords),
                                        "inner equivariance " + describe(r, s, 0, i, b));
                        }
                    }
                }
            }
        }
    }

    // Coxeter relations of the stored action matrices.
    for (int n = 2; n <= std::min(p.max_arity, max_total_arity); ++n) {
        for (int k = 0; k < static_cast<int>(p.dims[n].size()); ++k) {
            if (p.dims[n][k] == 0)
                continue;
            auto act = [&](int j, const Vec& v) {
                return apply_map(p.action.at({n, j, k}), v);
            };
            for (int idx = 0; idx < p.dims[n][k]; ++idx) {
                Vec e(p.dims[n][k], Rational(0));
                e[idx] = 1;
                for (int j = 1; j < n; ++j)
                    report.note(equal_coords(act(j, act(j, e)), e),
                                "involution t_" + std::to_string(j) + " arity " +
                                    std::to_string(n));
                for (int j = 1; j + 1 < n; ++j)
                    report.note(equal_coords(act(j, act(j + 1, act(j, e))),
                                             act(j + 1, act(j, act(j + 1, e)))),
                                "braid relation at arity " + std::to_string(n));
                for (int j = 1; j < n; ++j)
                    for (int l = j + 2; l < n; ++l)
                        report.note(equal_coords(act(j, act(l, e)), act(l, act(j, e))),
                                    "commuting transpositions at arity " + std::to_string(n));
            }
        }
    }

    return report;
}

std::map<std::pair<int, int>, Rational> grading_automorphism(const Rational& r,
                                                             const OperadPresentation& p) {
    if (is_zero(r))
        throw ZeroScalar("grading automorphism requires a nonzero scalar");
    std::map<std::pair<int, int>, Rational> scales;
    for (int n = 1; n <= p.max_arity; ++n) {
        for (int k = 0; k < static_cast<int>(p.dims[n].size()); ++k) {
            if (p.dims[n][k] == 0)
                continue;
            Rational power(1);
            for (int e = 0; e < k; ++e)
                power *= r;
            scales[{n, k}] = power;
        }
    }
    return scales;
}

AxiomReport check_grading_action(const OperadPresentation& p,
                                 const std::vector<Rational>& scalars) {
    AxiomReport report;
    for (const Rational& r : scalars) {
        auto alpha_r = grading_automorphism(r, p);
        for (const Rational& s : scalars) {
            auto alpha_s = grading_automorphism(s, p);
            auto alpha_rs = grading_automorphism(r * s, p);
            bool ok = true;
            for (const auto& [key, scale] : alpha_rs)
                if (alpha_r.at(key) * alpha_s.at(key) != scale)
                    ok = false;
            report.note(ok, "alpha_r alpha_s = alpha_rs for r=" + rational_to_string(r) +
                                ", s=" + rational_to_string(s));
        }
        // Commutation with every composition map: scaling the output by
        // r^{p+q} must agree with scaling the inputs by r^p and r^q.
        for (const auto& [key, m] : p.composition) {
            const auto [kr, ks, ki, kp, kq] = key;
            Rational in_scale = alpha_r.at({kr, kp}) * alpha_r.at({ks, kq});
            Rational out_scale(1);
            if (m.cols > 0)
                out_scale = alpha_r.at({kr + ks - 1, kp + kq});
            bool ok = true;
            for (const Entry& e : m.entries)
                if (in_scale * e.value != out_scale * e.value)
                    ok = false;
            report.note(ok, "alpha_" + rational_to_string(r) + " commutes with o_i at (" +
                                std::to_string(kr) + "," + std::to_string(ks) + "," +
                                std::to_string(ki) + ")");
        }
    }
    return report;
}

AxiomReport check_getzler_relations(int k, int l, const OperadPresentation& p) {
    if (k < 2 || l < 0 || (k == 2 && l == 0))
        throw OutOfRange("no Getzler relation for these parameters");
    const int total = k + l;
    if (total > p.max_arity)
        throw OutOfRange("relation arity exceeds the presentation bound");

    AxiomReport report;
    auto bracket = [&](int m) {
        if (p.dim(m, 1) != 1)
            throw Error("presentation lacks the one-dimensional degree-1 bracket");
        return presented_basis_element(p, m, 1, 0);
    };

    // U = g_{k+l-1} o_1 g_2, the composite feeding inputs 1,2 into the
    // inner bracket and the rest into the outer one.
    PresentedElement inner = bracket(2);
    PresentedElement u = presented_compose(p, 1, bracket(total - 1), inner);

    Vec lhs(p.dim(total, 2), Rational(0));
    for (int a = 1; a <= k; ++a) {
        for (int b = a + 1; b <= k; ++b) {
            // Route composite input 1 to label a, input 2 to label b, the
            // remaining x labels ascending, y labels fixed.
            Permutation sigma(total);
            sigma[0] = a;
            sigma[1] = b;
            int next = 2;
            for (int label = 1; label <= k; ++label)
                if (label != a && label != b)
                    sigma[next++] = label;
            for (int label = k + 1; label <= total; ++label)
                sigma[next++] = label;
            PresentedElement term = presented_act(p, sigma, u);
            // The canonical bracket here is Sigma_2-symmetric (tau.b = b),
            // so the Koszul extraction signs of the odd-bracket
            // normalization are all +1 in this basis.
            for (std::size_t c = 0; c < lhs.size(); ++c)
                lhs[c] += term.coords[c];
        }
    }

    Vec rhs(p.dim(total, 2), Rational(0));
    if (l > 0)
        rhs = presented_compose(p, 1, bracket(l + 1), bracket(k)).coords;

    report.note(lhs == rhs, "Getzler relation k=" + std::to_string(k) + ", l=" +
                                std::to_string(l) + " in " + p.name);
    return report;
}

}  // namespace gravity
