#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dycklat/dyck_path.hpp"

namespace dycklat {

/// Construction cases of the involution on D_n. CaseI..CaseV are the rule
/// branches defined on the subset P1; Inverse marks paths outside P1 whose
/// image is assigned as the preimage of a rule branch.
enum class PhiCase { CaseI, CaseII, CaseIII, CaseIV, CaseV, Inverse };

const char* phi_case_name(PhiCase c);

/// Decomposition payload for a path in P1.
struct P1Class {
    PhiCase tag = PhiCase::CaseI;
    int k = 0;                         // pyramid size (ii/iii) or trailing-descent parameter (iv/v)
    int r = 0;                         // extra ascent length in case v
    DyckPath prefix;                   // R in case iii
    std::vector<DyckPath> components;  // R_0..R_k in cases iv/v
};

/// Classifies P by its final ascent/descent runs; nullopt when P is not in P1.
std::optional<P1Class> classify_p1(const DyckPath& p);

/// Inserts UD on the last peak: R'UD^k becomes R'UUDD^k. Throws BadShape on
/// the empty path.
DyckPath sharp(const DyckPath& p);

/// Per-semilength bijection table; forward is an involution on D_n.
struct PhiTable {
    int n = 0;
    std::vector<DyckPath> paths;          // lex order
    std::vector<std::uint32_t> forward;   // lex index -> lex index
    std::vector<PhiCase> case_tag;

    DyckPath apply(const DyckPath& p) const;
    PhiCase tag_of(const DyckPath& p) const;
};

/// Tables for every semilength 0..max_n, built bottom-up (the rule branches
/// recurse into strictly smaller paths). Throws ConstructionFailure if the
/// rule images collide or fail to cover the complement of P1.
class PhiFamily {
public:
    explicit PhiFamily(int max_n);

    int max_semilength() const { return static_cast<int>(tables_.size()) - 1; }
    const PhiTable& table(int n) const;
    DyckPath phi(const DyckPath& p) const;  // throws TableMissing beyond max_n

private:
    std::vector<PhiTable> tables_;
};

PhiTable build_phi_table(int n);

}  // namespace dycklat
