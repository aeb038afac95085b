#include "torsionforge/catalog.hpp"

#include "torsionforge/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace torsionforge {

namespace {

const std::vector<std::string> kBuiltins{"h3", "sl2c", "g7"};

// Parameter factory honoring baked rational values.
class ParamSource {
public:
    ParamSource(RingPtr ring, const BuiltinOptions& opts) : ring_(std::move(ring)), opts_(opts) {}

    Scalar operator()(const std::string& name) const {
        auto it = opts_.values.find(name);
        if (it != opts_.values.end()) return Scalar::constant(ring_, it->second);
        return Scalar::var(ring_, name);
    }

    const RingPtr& ring() const { return ring_; }

private:
    RingPtr ring_;
    const BuiltinOptions& opts_;
};

void validate_options(const std::vector<std::string>& param_names, const BuiltinOptions& opts,
                      bool is_g7) {
    auto known = [&](const std::string& n) {
        return std::find(param_names.begin(), param_names.end(), n) != param_names.end();
    };
    for (const auto& [n, v] : opts.values) {
        if (!known(n)) throw UnknownName(n);
        if (opts.radical_values.count(n))
            throw Error("parameter '" + n + "' given both a value and a radical value");
    }
    for (const auto& [n, v] : opts.radical_values) {
        if (!known(n)) throw UnknownName(n);
        if (sgn(v) <= 0)
            throw Error("radical value for '" + n + "' must be positive");
        if (exact_sqrt(v))
            throw Error("radical value for '" + n + "' is a perfect square; pass it in 'values'");
    }
    if (!is_g7 && opts.delta != 0) throw Error("delta only applies to the g7 structure");
    if (is_g7 && opts.delta != 0 && opts.delta != 1 && opts.delta != -1)
        throw Error("delta must be +1 or -1 (or 0 to keep it symbolic)");
}

// Declarations for the surviving (non-baked) parameters, radicals included.
std::vector<Ring::Decl> base_decls(const std::vector<std::string>& param_names,
                                   const BuiltinOptions& opts) {
    std::vector<Ring::Decl> decls;
    for (const auto& n : param_names) {
        if (opts.values.count(n)) continue;
        Ring::Decl d;
        d.name = n;
        auto rad = opts.radical_values.find(n);
        if (rad != opts.radical_values.end()) {
            d.kind = ParamKind::Radical;
            d.radicand = {{rad->second, {}}};
        }
        decls.push_back(std::move(d));
    }
    return decls;
}

Rational baked(const BuiltinOptions& opts, const std::string& name) {
    return opts.values.at(name);
}

Model finish_model(RingPtr ring, std::string name, std::vector<KForm> differentials,
                   std::vector<std::string> domain_notes) {
    Model m;
    m.ring = ring;
    m.algebra = std::make_shared<const LieAlgebra>(ring, std::move(name), std::move(differentials));
    m.structure = std::make_shared<const SU3Structure>(m.algebra);
    m.domain_notes = std::move(domain_notes);
    return m;
}

Model build_h3(const BuiltinOptions& opts) {
    const std::vector<std::string> names{"t", "eps", "rho", "lambda", "mu"};
    validate_options(names, opts, false);
    if (opts.values.count("t") && baked(opts, "t") == 0) throw Error("t must be nonzero");
    auto ring = Ring::make(base_decls(names, opts));
    ParamSource P(ring, opts);
    Scalar t = P("t");
    std::vector<KForm> de(6, KForm(ring, 2));
    de[5].add_term({1, 2}, Scalar::constant(ring, -2) * t);
    de[5].add_term({3, 4}, Scalar::constant(ring, 2) * t);
    return finish_model(ring, "h3", std::move(de), {"t != 0"});
}

Model build_sl2c(const BuiltinOptions& opts) {
    const std::vector<std::string> names{"t", "eps", "rho", "lambda", "mu"};
    validate_options(names, opts, false);
    if (opts.values.count("t") && baked(opts, "t") == 0) throw Error("t must be nonzero");
    auto ring = Ring::make(base_decls(names, opts));
    ParamSource P(ring, opts);
    Scalar inv_t = Scalar::one(ring) / P("t");
    std::vector<KForm> de(6, KForm(ring, 2));
    de[0].add_term({3, 5}, inv_t);
    de[0].add_term({4, 6}, -inv_t);
    de[1].add_term({3, 6}, inv_t);
    de[1].add_term({4, 5}, inv_t);
    de[2].add_term({1, 5}, -inv_t);
    de[2].add_term({2, 6}, inv_t);
    de[3].add_term({1, 6}, -inv_t);
    de[3].add_term({2, 5}, -inv_t);
    de[4].add_term({1, 3}, inv_t);
    de[4].add_term({2, 4}, -inv_t);
    de[5].add_term({1, 4}, inv_t);
    de[5].add_term({2, 3}, inv_t);
    return finish_model(ring, "sl2c", std::move(de), {"t != 0"});
}

Model build_g7(const BuiltinOptions& opts) {
    const std::vector<std::string> names{"r", "t", "u1", "u2", "eps", "rho", "lambda", "mu"};
    validate_options(names, opts, true);
    for (const char* n : {"r", "t"})
        if (opts.values.count(n) && baked(opts, n) == 0)
            throw Error(std::string(n) + " must be nonzero");

    auto decls = base_decls(names, opts);
    if (opts.delta == 0) decls.push_back({"delta", ParamKind::Sign, {}});

    // s = sqrt(r^4 - u1^2 - u2^2): assemble the radicand over the surviving
    // parameters, folding baked values into the constant term.
    Ring::Decl s_decl;
    s_decl.name = "s";
    s_decl.kind = ParamKind::Radical;
    Rational constant_part(0);
    auto contribute = [&](const std::string& n, int exp, const Rational& sign) {
        if (opts.values.count(n)) {
            constant_part += sign * rational_pow(baked(opts, n), exp);
        } else {
            s_decl.radicand.push_back({sign, {{n, exp}}});
        }
    };
    contribute("r", 4, Rational(1));
    contribute("u1", 2, Rational(-1));
    contribute("u2", 2, Rational(-1));
    if (constant_part != 0) s_decl.radicand.push_back({constant_part, {}});

    // Probe the normalized radicand: radical parameters among r, u1, u2 have
    // rational squares, so full baking can collapse it to a rational.
    bool s_is_param = true;
    Rational s_value(0);
    {
        auto probe_ring = Ring::make([&] {
            auto d = decls;
            d.push_back(s_decl);
            return d;
        }());
        std::size_t s_index = *probe_ring->index_of("s");
        const Poly* radicand = probe_ring->radicand(s_index);
        if (auto c = radicand->as_constant()) {
            if (sgn(*c) <= 0) throw Error("r^2 > |u| is violated by the given values");
            if (auto root = exact_sqrt(*c)) {
                s_is_param = false;
                s_value = *root;
            }
        }
    }
    if (s_is_param) decls.push_back(s_decl);
    auto ring = Ring::make(decls);

    ParamSource P(ring, opts);
    Scalar t = P("t");
    Scalar r = P("r");
    Scalar u1 = P("u1");
    Scalar u2 = P("u2");
    Scalar sv = s_is_param ? Scalar::var(ring, "s") : Scalar::constant(ring, s_value);
    Scalar delta = (opts.delta == 0) ? Scalar::var(ring, "delta")
                                     : Scalar::constant(ring, opts.delta);
    Scalar c2 = Scalar::constant(ring, 2), c4 = Scalar::constant(ring, 4);

    std::vector<KForm> de(6, KForm(ring, 2));
    de[0].add_term({2, 5}, -c2 / t);
    de[1].add_term({1, 5}, c2 / t);
    de[2].add_term({1, 5}, -c4 * u2 / (t * sv));
    de[2].add_term({2, 5}, -c4 * u1 / (t * sv));
    de[2].add_term({4, 5}, c2 / t);
    de[3].add_term({1, 5}, c4 * u1 / (t * sv));
    de[3].add_term({2, 5}, -c4 * u2 / (t * sv));
    de[3].add_term({3, 5}, -c2 / t);
    Scalar f = -c2 * delta * t / (r * r);
    de[5].add_term({1, 2}, f);
    de[5].add_term({3, 4}, -f);
    de[5].add_term({1, 3}, -f * u2 / sv);
    de[5].add_term({2, 4}, -f * u2 / sv);
    de[5].add_term({1, 4}, f * u1 / sv);
    de[5].add_term({2, 3}, -f * u1 / sv);
    return finish_model(ring, "g7", std::move(de), {"r != 0", "t != 0", "r^2 > |u|"});
}

}  // namespace

const std::vector<std::string>& builtin_names() {
    return kBuiltins;
}

Model builtin(const std::string& name, const BuiltinOptions& options) {
    if (name == "h3") return build_h3(options);
    if (name == "sl2c") return build_sl2c(options);
    if (name == "g7") return build_g7(options);
    throw UnknownName(name);
}

std::string serialize_model(const Model& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.ring->size(); ++i) {
        const Param& p = m.ring->param(i);
        switch (p.kind) {
            case ParamKind::Free:
                out << "param " << p.name << ";\n";
                break;
            case ParamKind::Sign:
                out << "sign " << p.name << ";\n";
                break;
            case ParamKind::Radical:
                out << "radical " << p.name << " = " << m.ring->radicand(i)->str() << ";\n";
                break;
        }
    }
    for (int k = 1; k <= 6; ++k) {
        const KForm& dk = m.algebra->d_basis(k);
        if (dk.is_zero()) continue;
        out << "d e" << k << " = " << dk.str() << ";\n";
    }
    for (const auto& [name, conn] : m.connections) {
        out << "connection " << name << " {\n";
        for (int i = 1; i <= 6; ++i)
            for (int j = 1; j <= 6; ++j)
                if (!conn.sigma(i, j).is_zero())
                    out << "  s[" << i << "][" << j << "] = " << conn.sigma(i, j).str() << ";\n";
        out << "}\n";
    }
    return out.str();
}

std::string model_to_json(const Model& m) {
    nlohmann::json j;
    j["name"] = m.algebra->name();
    j["params"] = nlohmann::json::array();
    for (std::size_t i = 0; i < m.ring->size(); ++i) {
        const Param& p = m.ring->param(i);
        nlohmann::json entry;
        entry["name"] = p.name;
        entry["kind"] = p.kind == ParamKind::Free    ? "free"
                        : p.kind == ParamKind::Sign ? "sign"
                                                    : "radical";
        if (p.kind == ParamKind::Radical) entry["radicand"] = m.ring->radicand(i)->str();
        j["params"].push_back(entry);
    }
    j["differentials"] = nlohmann::json::object();
    for (int k = 1; k <= 6; ++k) {
        const KForm& dk = m.algebra->d_basis(k);
        if (!dk.is_zero()) j["differentials"]["e" + std::to_string(k)] = dk.str();
    }
    j["domain"] = m.domain_notes;
    j["connections"] = nlohmann::json::object();
    for (const auto& [name, conn] : m.connections) {
        nlohmann::json entry = nlohmann::json::object();
        for (int i = 1; i <= 6; ++i)
            for (int jj = 1; jj <= 6; ++jj)
                if (!conn.sigma(i, jj).is_zero())
                    entry["s[" + std::to_string(i) + "][" + std::to_string(jj) + "]"] =
                        conn.sigma(i, jj).str();
        j["connections"][name] = entry;
    }
    return j.dump(2);
}

}  // namespace torsionforge
