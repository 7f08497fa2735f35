#include "fkd/perm.hpp"

#include <stdexcept>
#include <string>

namespace fkd {

namespace {
constexpr std::array<std::string_view, 6> kNames = {"e", "12", "13", "23", "123", "132"};
}

std::string_view Perm::name() const { return kNames[index()]; }

Perm Perm::parse(std::string_view s) {
    for (int i = 0; i < 6; ++i)
        if (kNames[i] == s) return from_index(i);
    throw std::invalid_argument("unknown permutation '" + std::string(s) + "'");
}

}  // namespace fkd
