#ifndef DEFOBS_REGISTRY_HPP
#define DEFOBS_REGISTRY_HPP

#include <array>
#include <cstdint>
#include <optional>

#include "defobs/abelian.hpp"
#include "defobs/dtable.hpp"
#include "defobs/manifold.hpp"

namespace defobs {

/// Invariant data for one oriented atom. d_table is absent for atoms whose
/// correction terms are out of scope (Brieskorn spheres other than P);
/// brieskorn_params are present exactly when the flat connection set is
/// enumerable here.
struct AtomRecord {
    std::optional<std::int64_t> pi1_order;  // nullopt = infinite
    FiniteAbelianGroup h1;
    std::optional<DInvariantTable> d_table;
    std::optional<std::array<std::int64_t, 3>> brieskorn_params;
};

/// Record for the atom with its orientation applied: reversing orientation
/// negates every d-invariant. Throws std::domain_error for unregistered kinds.
AtomRecord lookup(const Atom& atom);

}  // namespace defobs

#endif
