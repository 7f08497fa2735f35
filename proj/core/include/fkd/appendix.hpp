#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fkd/gmodule.hpp"

namespace fkd {

// One printed action value, e.g. {"x12", "c9", "w(c6 - z c4)"}; z = zeta, z2 = zeta^2, w = 1/(1-zeta).
struct TableEntry {
    const char* gen;
    const char* src;
    const char* rhs;
};

using Terms = std::vector<std::pair<std::string, Scalar>>;
Terms parse_rhs(std::string_view rhs);

// the three tabulated simple modules L(t0), L(erho), L(s-)
enum class Table { A, B, C };

const std::vector<TableEntry>& printed_table(Table t);
// printed table with the entries that contradict the module axioms replaced
std::vector<TableEntry> corrected_table(Table t);
std::vector<BasisVector> table_basis(Table t);
GModule module_from_table(const std::vector<BasisVector>& basis, const std::vector<TableEntry>& entries);

struct FidelityReport {
    int total = 0;
    int matching = 0;
    std::vector<std::string> mismatches;  // "gen src: printed ... built ..."
};
// compare every printed entry against the action of the built module
FidelityReport appendix_fidelity(Table t, const GModule& built);

}  // namespace fkd
