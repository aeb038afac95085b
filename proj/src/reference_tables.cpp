#include "torsionforge/reference_tables.hpp"

#include "torsionforge/errors.hpp"

namespace torsionforge {

namespace {

// Resolves a named quantity against the model's ring, falling back to the
// value it was built with; options must match the ones used for the builtin.
Scalar resolve(const Model& m, const BuiltinOptions& options, const std::string& name) {
    if (m.ring->index_of(name)) return Scalar::var(m.ring, name);
    if (name == "delta" && options.delta != 0)
        return Scalar::constant(m.ring, options.delta);
    auto it = options.values.find(name);
    if (it != options.values.end()) return Scalar::constant(m.ring, it->second);
    if (name == "s") {
        // The square root collapsed to a rational; reconstruct it from the
        // squares of the baked coefficients.
        auto square_of = [&](const std::string& p) -> Rational {
            auto v = options.values.find(p);
            if (v != options.values.end()) return v->second * v->second;
            auto r = options.radical_values.find(p);
            if (r != options.radical_values.end()) return r->second;
            throw MissingParam(p);
        };
        Rational radicand = square_of("r") * square_of("r") - square_of("u1") - square_of("u2");
        auto root = exact_sqrt(radicand);
        if (!root) throw NotPerfectSquare("s", to_string(radicand));
        return Scalar::constant(m.ring, *root);
    }
    throw MissingParam(name);
}

struct CommonSyms {
    Scalar eps, rho, t, one, two;
};

CommonSyms common_syms(const Model& m, const BuiltinOptions& options) {
    return {resolve(m, options, "eps"), resolve(m, options, "rho"), resolve(m, options, "t"),
            Scalar::one(m.ring), Scalar::constant(m.ring, 2)};
}

}  // namespace

std::map<std::pair<int, int>, KForm> reference_curvature_h3(const Model& m,
                                                            const BuiltinOptions& options) {
    auto [eps, rho, t, one, two] = common_syms(m, options);
    auto E = [&](std::initializer_list<int> idx) { return KForm::basis(m.ring, idx); };
    auto C = [&](long v) { return Scalar::constant(m.ring, v); };

    Scalar t2 = t * t;
    Scalar P = C(3) + C(4) * eps * eps - C(4) * rho + C(4) * rho * rho;
    Scalar G = one + two * eps - two * rho;
    Scalar W = one - two * eps;

    std::map<std::pair<int, int>, KForm> out;
    out.insert_or_assign(std::make_pair(1, 2), -P * t2 * E({1, 2}) + two * G * t2 * E({3, 4}));
    out.insert_or_assign(std::make_pair(1, 3), C(4) * rho * rho * t2 * E({1, 3}) + W * W * t2 * E({2, 4}));
    out.insert_or_assign(std::make_pair(1, 4), C(4) * rho * rho * t2 * E({1, 4}) - W * W * t2 * E({2, 3}));
    out.insert_or_assign(std::make_pair(1, 5), two * G * rho * t2 * E({2, 6}));
    out.insert_or_assign(std::make_pair(1, 6), W * G * t2 * E({1, 6}));
    out.insert_or_assign(std::make_pair(2, 3), -W * W * t2 * E({1, 4}) + C(4) * rho * rho * t2 * E({2, 3}));
    out.insert_or_assign(std::make_pair(2, 4), W * W * t2 * E({1, 3}) + C(4) * rho * rho * t2 * E({2, 4}));
    out.insert_or_assign(std::make_pair(2, 5), -two * G * rho * t2 * E({1, 6}));
    out.insert_or_assign(std::make_pair(2, 6), W * G * t2 * E({2, 6}));
    out.insert_or_assign(std::make_pair(3, 4), two * G * t2 * E({1, 2}) - P * t2 * E({3, 4}));
    out.insert_or_assign(std::make_pair(3, 5), two * G * rho * t2 * E({4, 6}));
    out.insert_or_assign(std::make_pair(3, 6), W * G * t2 * E({3, 6}));
    out.insert_or_assign(std::make_pair(4, 5), -two * G * rho * t2 * E({3, 6}));
    out.insert_or_assign(std::make_pair(4, 6), W * G * t2 * E({4, 6}));
    out.insert_or_assign(std::make_pair(5, 6), C(4) * W * rho * t2 * (E({1, 2}) + E({3, 4})));
    return out;
}

std::map<std::pair<int, int>, KForm> reference_curvature_sl2c(const Model& m,
                                                              const BuiltinOptions& options) {
    auto [eps, rho, t, one, two] = common_syms(m, options);
    auto E = [&](std::initializer_list<int> idx) { return KForm::basis(m.ring, idx); };
    auto C = [&](long v) { return Scalar::constant(m.ring, v); };

    Scalar h = one - two * eps - two * rho;
    Scalar q1 = (one + C(6) * eps - two * rho) * (one - C(6) * eps + two * rho);
    Scalar q2 = C(3) + C(8) * eps + C(4) * eps * eps - C(8) * rho + C(8) * eps * rho
                + C(4) * rho * rho;
    Scalar q3 = one + two * eps - C(6) * rho;
    Scalar q4 = one - C(6) * eps + two * rho;
    Scalar q5 = (C(3) + two * eps - C(6) * rho) * (one + two * eps - C(6) * rho);
    Scalar q6 = C(7) + C(4) * eps * eps - C(16) * rho + C(8) * eps * rho + C(4) * rho * rho;

    Scalar half_sq = h * h / (two * t * t);
    Scalar quarter = one / (C(4) * t * t);

    std::map<std::pair<int, int>, KForm> out;
    out.insert_or_assign(std::make_pair(1, 2), -half_sq * (E({3, 4}) + E({5, 6})));
    out.insert_or_assign(std::make_pair(1, 3), quarter * (q1 * E({1, 3}) - q2 * E({2, 4})));
    out.insert_or_assign(std::make_pair(1, 4), h * quarter * (q3 * E({1, 4}) - q4 * E({2, 3})));
    out.insert_or_assign(std::make_pair(1, 5), quarter * (q1 * E({1, 5}) - q2 * E({2, 6})));
    out.insert_or_assign(std::make_pair(1, 6), h * quarter * (q3 * E({1, 6}) - q4 * E({2, 5})));
    out.insert_or_assign(std::make_pair(2, 3), -h * quarter * (q4 * E({1, 4}) - q3 * E({2, 3})));
    out.insert_or_assign(std::make_pair(2, 4), -quarter * (q5 * E({1, 3}) + q6 * E({2, 4})));
    out.insert_or_assign(std::make_pair(2, 5), -h * quarter * (q4 * E({1, 6}) - q3 * E({2, 5})));
    out.insert_or_assign(std::make_pair(2, 6), -quarter * (q5 * E({1, 5}) + q6 * E({2, 6})));
    out.insert_or_assign(std::make_pair(3, 4), -half_sq * (E({1, 2}) + E({5, 6})));
    out.insert_or_assign(std::make_pair(3, 5), quarter * (q1 * E({3, 5}) - q2 * E({4, 6})));
    out.insert_or_assign(std::make_pair(3, 6), h * quarter * (q3 * E({3, 6}) - q4 * E({4, 5})));
    out.insert_or_assign(std::make_pair(4, 5), -h * quarter * (q4 * E({3, 6}) - q3 * E({4, 5})));
    out.insert_or_assign(std::make_pair(4, 6), -quarter * (q5 * E({3, 5}) + q6 * E({4, 6})));
    out.insert_or_assign(std::make_pair(5, 6), -half_sq * (E({1, 2}) + E({3, 4})));
    return out;
}

G7ReferenceTable reference_curvature_g7(const Model& m, const BuiltinOptions& options) {
    auto [eps, rho, t, one, two] = common_syms(m, options);
    auto E = [&](std::initializer_list<int> idx) { return KForm::basis(m.ring, idx); };
    auto C = [&](long v) { return Scalar::constant(m.ring, v); };

    Scalar r = resolve(m, options, "r");
    Scalar u1 = resolve(m, options, "u1");
    Scalar u2 = resolve(m, options, "u2");
    Scalar delta = resolve(m, options, "delta");
    Scalar s = resolve(m, options, "s");

    Scalar U = u1 * u1 + u2 * u2;
    Scalar r2 = r * r;
    Scalar t2 = t * t;
    Scalar t4 = t2 * t2;
    Scalar r4 = r2 * r2;
    Scalar P = r4 - U;

    Scalar h = one - two * eps - two * rho;      // 1 - 2eps - 2rho
    Scalar g = one + two * eps - two * rho;      // 1 + 2eps - 2rho
    Scalar w = one - two * eps + two * rho;      // 1 - 2eps + 2rho
    Scalar er = eps - rho;

    Scalar A = C(4) * (two * eps * eps + two * rho * rho - eps - rho);
    Scalar B = C(4) * eps * eps + C(4) * rho * rho - C(4) * rho + C(3);
    Scalar Cc = C(4) * (two * eps * eps + two * rho * rho + eps - C(3) * rho);
    Scalar D = C(4) * (C(4) * eps * eps + C(4) * rho * rho - C(4) * rho + one);

    G7ReferenceTable out;

    out.combinations.emplace_back(
        "Omega^1_2 + Omega^3_4 + Omega^5_6",
        -h * h * (t4 + C(4) * U) / (t2 * P) * (E({1, 2}) + E({3, 4})));
    out.combinations.emplace_back(
        "Omega^1_3 - Omega^2_4",
        -h * (w * t4 - C(4) * g * U) / (t2 * P) * (E({1, 3}) - E({2, 4})));
    out.combinations.emplace_back(
        "Omega^1_4 + Omega^2_3",
        -h * (w * t4 - C(4) * g * U) / (t2 * P) * (E({1, 4}) + E({2, 3})));

    Scalar mix = g * t4 + C(8) * er * U;  // (1+2eps-2rho) t^4 + 8(eps-rho)|u|^2
    out.combinations.emplace_back(
        "Omega^1_5 - Omega^2_6",
        (h / s)
            * (-C(12) * U / (t2 * s) * E({1, 5})
               + two * delta * U / (r2 * s) * (E({1, 6}) - E({2, 5}))
               - mix / (t2 * s) * E({2, 6})
               - two * delta * u2 / r2 * (E({3, 5}) + E({4, 6}))
               - two * delta * u1 / r2 * (E({3, 6}) - E({4, 5}))
               + C(8) / t2 * (u1 * E({3, 5}) + u2 * E({4, 5}))));
    out.combinations.emplace_back(
        "Omega^1_6 + Omega^2_5",
        (h / s)
            * (two * delta * U / (r2 * s) * (E({1, 5}) + E({2, 6}))
               + mix / (t2 * s) * E({1, 6}) - C(12) * U / (t2 * s) * E({2, 5})
               - two * delta * u1 / r2 * (E({3, 5}) + E({4, 6}))
               + two * delta * u2 / r2 * (E({3, 6}) - E({4, 5}))
               - C(8) / t2 * (u2 * E({3, 5}) - u1 * E({4, 5}))));
    out.combinations.emplace_back(
        "Omega^3_5 - Omega^4_6",
        (h / s)
            * (two * delta * u2 / r2 * (E({1, 5}) + E({2, 6}))
               - two * delta * u1 / r2 * (E({1, 6}) - E({2, 5}))
               + C(8) / t2 * (u1 * E({1, 5}) - u2 * E({2, 5}))
               + C(4) * U / (t2 * s) * E({3, 5})
               - two * delta * U / (r2 * s) * (E({3, 6}) - E({4, 5}))
               - mix / (t2 * s) * E({4, 6})));
    out.combinations.emplace_back(
        "Omega^3_6 + Omega^4_5",
        (h / s)
            * (-two * delta * u1 / r2 * (E({1, 5}) + E({2, 6}))
               - two * delta * u2 / r2 * (E({1, 6}) - E({2, 5}))
               + C(8) / t2 * (u2 * E({1, 5}) + u1 * E({2, 5}))
               - two * delta * U / (r2 * s) * (E({3, 5}) + E({4, 6}))
               + mix / (t2 * s) * E({3, 6}) + C(4) * U / (t2 * s) * E({4, 5})));

    // The eight generating components.
    Scalar off_diag = (two * r4 * t4 * g - U * (t4 * B + r4 * D)) / (r4 * t2 * P);
    KForm twist = (delta * r2 * A * u2 + t2 * B * u1) * (E({1, 4}) - E({2, 3}))
                  + (delta * r2 * A * u1 - t2 * B * u2) * (E({1, 3}) + E({2, 4}));

    out.generating.insert_or_assign(std::make_pair(1, 2), -t2 * B / r4 * E({1, 2}) + off_diag * E({3, 4})
                             + C(16) * er * U / (t2 * P) * E({5, 6})
                             - one / (r4 * s) * twist);

    out.generating.insert_or_assign(std::make_pair(1, 3),
        -one / (r4 * s) * (delta * r2 * u1 * Cc - t2 * u2 * B) * (E({1, 2}) - E({3, 4}))
        + C(16) * er * u2 / (t2 * s) * E({5, 6})
        + u2 / (r4 * P)
              * (C(16) * delta * (eps * eps - rho * (one - rho)) * r2 * u1 - t2 * u2 * B)
              * (E({1, 3}) + E({2, 4}))
        - u1 / (r4 * P) * (delta * r2 * u1 * Cc - t2 * u2 * B) * (E({1, 4}) - E({2, 3}))
        + u2 / (r2 * t2 * P) * (delta * t2 * u2 * A - r2 * u1 * D) * (E({1, 4}) - E({2, 3}))
        + C(4) / (t2 * P)
              * (rho * rho * t4 - C(4) * eps * eps * u1 * u1
                 + u2 * u2 * (one - two * rho) * (one - two * rho))
              * E({1, 3})
        + one / (t2 * P)
              * (t4 * (one - two * eps) * (one - two * eps)
                 - C(4) * u1 * u1 * (one - two * rho) * (one - two * rho)
                 + C(16) * u2 * u2 * eps * eps)
              * E({2, 4}));

    out.generating.insert_or_assign(std::make_pair(1, 4),
        -one / (r4 * s) * (t2 * u1 * B + delta * r2 * u2 * Cc) * (E({1, 2}) - E({3, 4}))
        - C(16) * er * u1 / (t2 * s) * E({5, 6})
        - delta / (r2 * P) * (u1 * u1 * A - u2 * u2 * Cc) * (E({1, 3}) + E({2, 4}))
        + u1 * u2 / (r4 * t2 * P) * (t4 * B - r4 * D) * (E({1, 3}) + E({2, 4}))
        - u1 / (r4 * P)
              * (t2 * u1 * B + C(16) * delta * (eps * eps - rho * (one - rho)) * r2 * u2)
              * (E({1, 4}) - E({2, 3}))
        + C(4) / (t2 * P)
              * (rho * rho * t4 + (one - two * rho) * (one - two * rho) * u1 * u1
                 - C(4) * eps * eps * u2 * u2)
              * E({1, 4})
        - one / (t2 * P)
              * (t4 * (one - two * eps) * (one - two * eps) + C(16) * eps * eps * u1 * u1
                 - C(4) * (one - two * rho) * (one - two * rho) * u2 * u2)
              * E({2, 3}));

    out.generating.insert_or_assign(std::make_pair(1, 5),
        -C(12) * (one - two * rho) * U / (t2 * P) * E({1, 5})
        + C(4) * delta * rho * U / (r2 * P) * E({2, 5})
        + two * (rho * t4 * g - C(4) * (one - two * rho) * er * U) / (t2 * P) * E({2, 6})
        - two * delta * (one + two * eps - C(4) * rho) / (r2 * s)
              * (u1 * E({3, 6}) + u2 * E({4, 6}) - U / s * E({1, 6}))
        + C(4) / (r2 * t2 * s)
              * ((delta * rho * t2 * u2 + two * r2 * (one - two * rho) * u1) * E({3, 5})
                 + (-delta * rho * t2 * u1 + two * r2 * (one - two * rho) * u2) * E({4, 5})));

    out.generating.insert_or_assign(std::make_pair(1, 6),
        two * delta * (one - two * eps) * U / (r2 * P) * E({1, 5})
        - (C(4) * eps * er * (t4 + C(4) * U) - t4 * (one - two * rho)) / (t2 * P) * E({1, 6})
        + C(24) * eps * U / (t2 * P) * E({2, 5})
        + C(4) * delta * (two * eps - rho) / (r2 * s)
              * (-U / s * E({2, 6}) + u1 * E({4, 6}) - u2 * E({3, 6}))
        + two / (r2 * t2 * s)
              * ((C(8) * eps * r2 * u2 - delta * t2 * (one - two * eps) * u1) * E({3, 5})
                 + (-C(8) * eps * r2 * u1 - delta * t2 * (one - two * eps) * u2) * E({4, 5})));

    out.generating.insert_or_assign(std::make_pair(3, 4), off_diag * E({1, 2}) - t2 * B / r4 * E({3, 4})
                             - C(16) * er * U / (t2 * P) * E({5, 6})
                             + one / (r4 * s) * twist);

    out.generating.insert_or_assign(std::make_pair(3, 5),
        two * delta * (one + two * eps - C(4) * rho) / (r2 * s)
            * (-u1 * E({1, 6}) + u2 * E({2, 6}) - U / s * E({3, 6}))
        + C(4) * U / P * ((one - two * rho) / t2 * E({3, 5}) - delta * rho / r2 * E({4, 5}))
        + two * (rho * t4 * g - C(4) * (one - two * rho) * er * U) / (t2 * P) * E({4, 6})
        - C(4) / (r2 * t2 * s)
              * ((delta * rho * t2 * u2 - two * r2 * (one - two * rho) * u1) * E({1, 5})
                 + (delta * rho * t2 * u1 + two * r2 * (one - two * rho) * u2) * E({2, 5})));

    // The e46 coefficient here is +4 delta (2 eps - rho)|u|^2 / (r^2 P): the
    // sign is pinned by the pair sum with Omega^4_5 above and by a direct
    // expansion of d sigma + sigma ^ sigma at u2 = 0.
    out.generating.insert_or_assign(std::make_pair(3, 6),
        C(4) * delta * (two * eps - rho) / (r2 * s) * (u2 * E({1, 6}) + u1 * E({2, 6}))
        - two * delta * (one - two * eps) * U / (r2 * P) * E({3, 5})
        - C(4) * U / P * (two * eps / t2) * E({4, 5})
        + C(4) * U / P * ((two * eps - rho) * delta / r2) * E({4, 6})
        - (C(4) * eps * er * (t4 + C(4) * U) - t4 * (one - two * rho)) / (t2 * P) * E({3, 6})
        - two / (r2 * t2 * s)
              * ((C(8) * eps * r2 * u2 + delta * t2 * (one - two * eps) * u1) * E({1, 5})
                 + (C(8) * eps * r2 * u1 - delta * t2 * (one - two * eps) * u2) * E({2, 5})));

    return out;
}

FixtureReport check_model_curvature(const Model& m, const std::string& name,
                                    const BuiltinOptions& options) {
    auto eps = resolve(m, options, "eps");
    auto rho = resolve(m, options, "rho");
    auto q = curvature(*m.algebra, family_connection(*m.structure, eps, rho));

    FixtureReport report;
    auto record = [&](const std::string& label, bool ok) {
        (ok ? report.passed : report.failed).push_back(label);
    };
    auto label_of = [](int i, int j) {
        return "Omega^" + std::to_string(i) + "_" + std::to_string(j);
    };

    if (name == "g7") {
        auto table = reference_curvature_g7(m, options);
        const auto& combos = table.combinations;
        record(combos[0].first, q.omega(1, 2) + q.omega(3, 4) + q.omega(5, 6) == combos[0].second);
        record(combos[1].first, q.omega(1, 3) - q.omega(2, 4) == combos[1].second);
        record(combos[2].first, q.omega(1, 4) + q.omega(2, 3) == combos[2].second);
        record(combos[3].first, q.omega(1, 5) - q.omega(2, 6) == combos[3].second);
        record(combos[4].first, q.omega(1, 6) + q.omega(2, 5) == combos[4].second);
        record(combos[5].first, q.omega(3, 5) - q.omega(4, 6) == combos[5].second);
        record(combos[6].first, q.omega(3, 6) + q.omega(4, 5) == combos[6].second);
        for (const auto& [ij, expected] : table.generating)
            record(label_of(ij.first, ij.second), q.omega(ij.first, ij.second) == expected);
        return report;
    }

    auto table = name == "h3" ? reference_curvature_h3(m, options)
                              : reference_curvature_sl2c(m, options);
    for (const auto& [ij, expected] : table)
        record(label_of(ij.first, ij.second), q.omega(ij.first, ij.second) == expected);
    return report;
}

FixtureReport check_curvature_fixtures(const std::string& name, const BuiltinOptions& options) {
    return check_model_curvature(builtin(name, options), name, options);
}

bool hermitian_line_symmetries(const Model& m) {
    auto eps = Scalar::var(m.ring, "eps");
    auto rho = Scalar::constant(m.ring, Rational(1, 2)) - eps;
    auto q = curvature(*m.algebra, family_connection(*m.structure, eps, rho));
    return (q.omega(1, 2) + q.omega(3, 4) + q.omega(5, 6)).is_zero()
           && q.omega(2, 3) == -q.omega(1, 4) && q.omega(2, 4) == q.omega(1, 3)
           && q.omega(2, 5) == -q.omega(1, 6) && q.omega(2, 6) == q.omega(1, 5)
           && q.omega(4, 5) == -q.omega(3, 6) && q.omega(4, 6) == q.omega(3, 5);
}

}  // namespace torsionforge
