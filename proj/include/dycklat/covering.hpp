#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dycklat/dyck_path.hpp"

namespace dycklat {

/// Which covering generates the poset on D_n.
///
/// Restricted is the move DU^kD^k -> U^kD^kD. Tamari is DUQD -> UQDD for an
/// arbitrary Dyck factor Q. PatternAvoiding(mu) keeps only the Tamari moves
/// whose Q avoids the consecutive factor mu; PatternAvoiding("DU") coincides
/// with Restricted.
struct CoveringRelation {
    enum class Kind { Restricted, Tamari, PatternAvoiding };

    Kind kind = Kind::Restricted;
    std::string pattern;  // U/D word, only for PatternAvoiding

    static CoveringRelation restricted() { return {Kind::Restricted, ""}; }
    static CoveringRelation tamari() { return {Kind::Tamari, ""}; }
    static CoveringRelation pattern_avoiding(std::string mu);

    std::string name() const;

    friend bool operator==(const CoveringRelation&, const CoveringRelation&) = default;
};

/// All covers of P, deduplicated and sorted lexicographically.
std::vector<DyckPath> successors(const DyckPath& p, const CoveringRelation& rel);

/// All paths covered by P (inverse move scan), deduplicated and sorted.
std::vector<DyckPath> predecessors(const DyckPath& p, const CoveringRelation& rel);

/// Restricted move at the leftmost occurrence of DU^kD^k; nullopt iff P = U^nD^n.
std::optional<DyckPath> apply_leftmost(const DyckPath& p);

}  // namespace dycklat
