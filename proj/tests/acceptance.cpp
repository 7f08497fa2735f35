// One line per acceptance criterion. Exit status is 0 when the failing checks are exactly
// the documented ones (see README), so a regression anywhere else fails the test.
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <string>

#include "fkd/verify.hpp"

using namespace fkd::verify;

int main(int argc, char** argv) {
    const std::map<int, std::string> titles = {
        {1, "appendix fidelity"},
        {2, "tensor products of simple modules"},
        {3, "socle filtrations of A, B, C and A* = A"},
        {4, "simple tensor projective isomorphisms"},
        {5, "projectives, BGG reciprocity, induced modules, P(eps)⊗P(eps)"},
        {6, "Ext^1 matrix and T01"},
        {7, "character infrastructure"},
        {8, "commutativity, double duals, duality table"},
        {9, "oracle and mutation checks"},
    };
    auto rs = verify_all();
    if (argc > 1) std::ofstream(argv[1]) << report_json(rs) << "\n";

    std::set<std::string> failed, documented(documented_failures().begin(), documented_failures().end());
    for (const auto& r : rs) {
        if (!r.pass) failed.insert(r.id);
        std::printf("  %s %-44s %8.0f ms\n", r.pass ? "ok  " : "FAIL", r.id.c_str(), r.ms);
        if (!r.pass) std::printf("       expected: %s\n       actual:   %s\n", r.expected.c_str(), r.actual.c_str());
    }
    std::printf("\n");
    for (const auto& [c, title] : titles) {
        bool pass = std::none_of(rs.begin(), rs.end(), [&](const auto& r) { return r.criterion == c && !r.pass; });
        std::printf("criterion %d: %s  %s\n", c, pass ? "PASS" : "FAIL", title.c_str());
    }
    for (const auto& id : failed)
        if (!documented.count(id)) std::printf("unexpected failure: %s\n", id.c_str());
    for (const auto& id : documented)
        if (!failed.count(id)) std::printf("documented failure now passes: %s\n", id.c_str());
    return failed == documented ? 0 : 1;
}
