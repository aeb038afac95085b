#pragma once

#include "torsionforge/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace torsionforge {

class Poly;

enum class ParamKind { Free, Sign, Radical };

// A symbol adjoined to the rationals. Sign symbols square to 1, radical
// symbols square to their radicand, free symbols are transcendental.
struct Param {
    std::string name;
    ParamKind kind = ParamKind::Free;
};

// Immutable table of parameters underlying all polynomials of a model.
// Radicands are polynomials over the ring's free parameters only; a radicand
// declaration may mention earlier sign/radical symbols as long as they cancel
// after the square rewrites (e.g. u1^2 with u1 itself a radical).
class Ring : public std::enable_shared_from_this<Ring> {
public:
    struct Decl {
        std::string name;
        ParamKind kind = ParamKind::Free;
        // Radical only: sum of coeff * prod(name^exp) over previously declared params.
        std::vector<std::pair<Rational, std::map<std::string, int>>> radicand;
    };

    static std::shared_ptr<const Ring> make(const std::vector<Decl>& decls);

    std::size_t size() const { return params_.size(); }
    const Param& param(std::size_t i) const { return params_.at(i); }
    std::optional<std::size_t> index_of(const std::string& name) const;
    // Radicand of radical parameter i, normalized. Null for non-radicals.
    const Poly* radicand(std::size_t i) const;

    const std::vector<Param>& params() const { return params_; }

private:
    Ring() = default;
    std::vector<Param> params_;
    std::map<std::string, std::size_t> by_name_;
    std::vector<std::shared_ptr<const Poly>> radicands_;
};

using RingPtr = std::shared_ptr<const Ring>;

}  // namespace torsionforge
