#include "torsionforge/ring.hpp"

#include "torsionforge/errors.hpp"
#include "torsionforge/poly.hpp"

namespace torsionforge {

std::shared_ptr<const Ring> Ring::make(const std::vector<Decl>& decls) {
    auto ring = std::shared_ptr<Ring>(new Ring());
    for (const auto& d : decls) {
        if (d.name.empty()) throw Error("parameter with empty name");
        if (ring->by_name_.count(d.name)) throw Error("duplicate parameter '" + d.name + "'");
        ring->by_name_[d.name] = ring->params_.size();
        ring->params_.push_back(Param{d.name, d.kind});
        ring->radicands_.push_back(nullptr);
    }
    // Build radicands in declaration order so later ones may normalize through
    // earlier radicals (e.g. r^4 - u1^2 - u2^2 with u1 itself a radical).
    for (std::size_t i = 0; i < decls.size(); ++i) {
        const auto& d = decls[i];
        if (d.kind != ParamKind::Radical) continue;
        Poly radicand = Poly::zero(ring);
        for (const auto& [coeff, mono_names] : d.radicand) {
            Poly::Mono mono(ring->size(), 0);
            for (const auto& [name, exp] : mono_names) {
                auto idx = ring->index_of(name);
                if (!idx) throw Error("radicand of '" + d.name + "' uses unknown parameter '" + name + "'");
                if (*idx >= i)
                    throw Error("radicand of '" + d.name + "' may only use previously declared parameters");
                if (exp < 0) throw Error("negative exponent in radicand of '" + d.name + "'");
                mono[*idx] += exp;
            }
            radicand.add_term(std::move(mono), coeff);
        }
        if (radicand.is_zero()) throw Error("radicand of '" + d.name + "' is zero");
        for (std::size_t j = 0; j < ring->size(); ++j) {
            if (ring->params_[j].kind != ParamKind::Free && radicand.depends_on(j))
                throw Error("radicand of '" + d.name + "' must reduce to a polynomial in free parameters");
        }
        ring->radicands_[i] = std::make_shared<const Poly>(radicand);
    }
    return ring;
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

const Poly* Ring::radicand(std::size_t i) const {
    return radicands_.at(i).get();
}

}  // namespace torsionforge
