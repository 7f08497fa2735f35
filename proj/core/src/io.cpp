#include "fkd/io.hpp"

#include <stdexcept>

#include "json.hpp"

namespace fkd {

using nlohmann::json;

namespace {

json int_json(const std::string& s) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used == s.size()) return v;
    } catch (const std::out_of_range&) {
    }
    return s;
}

std::string int_text(const json& j) {
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    if (j.is_string()) return j.get<std::string>();
    throw std::invalid_argument("scalar entry is not an integer");
}

json scalar_json(const Scalar& s) {
    return json::array({int_json(s.a().num_str()), int_json(s.a().den_str()), int_json(s.b().num_str()),
                        int_json(s.b().den_str())});
}

Scalar scalar_of(const json& j) {
    if (!j.is_array() || j.size() != 4) throw std::invalid_argument("scalar must be [a_num, a_den, b_num, b_den]");
    try {
        return Scalar(Rational::from_string(int_text(j[0]), int_text(j[1])),
                      Rational::from_string(int_text(j[2]), int_text(j[3])));
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("bad scalar: ") + e.what());
    }
}

}  // namespace

std::string scalar_to_json(const Scalar& s) { return scalar_json(s).dump(); }

Scalar scalar_from_json(const std::string& text) {
    try {
        return scalar_of(json::parse(text));
    } catch (const json::exception& e) {
        throw std::invalid_argument(e.what());
    }
}

std::string module_to_json(const GModule& m, int indent) {
    json j;
    j["basis"] = json::array();
    for (const auto& b : m.basis()) j["basis"].push_back({{"name", b.name}, {"z", b.z}, {"s3", std::string(b.s3.name())}});
    json acts = json::object();
    for (Gen g : kAllGens) {
        json entries = json::array();
        const SparseMat& a = m.action(g);
        for (int c = 0; c < a.cols(); ++c)
            for (const auto& [r, v] : a.column(c)) entries.push_back(json::array({c, r, scalar_json(v)}));
        acts[std::string(gen_name(g))] = std::move(entries);
    }
    j["actions"] = std::move(acts);
    return j.dump(indent);
}

GModule module_from_json(const std::string& text) {
    try {
        json j = json::parse(text);
        std::vector<BasisVector> basis;
        for (const auto& b : j.at("basis"))
            basis.push_back({b.at("name").get<std::string>(), b.at("z").get<int>(), Perm::parse(b.at("s3").get<std::string>())});
        int n = int(basis.size());
        GModule::Actions act;
        for (auto& a : act) a = SparseMat(n, n);
        for (const auto& [name, entries] : j.at("actions").items()) {
            Gen g = parse_gen(name);
            for (const auto& e : entries) {
                int c = e.at(0).get<int>(), r = e.at(1).get<int>();
                if (c < 0 || c >= n || r < 0 || r >= n) throw std::invalid_argument("action index out of range");
                act[int(g)].add(r, c, scalar_of(e.at(2)));
            }
        }
        return GModule(std::move(basis), std::move(act));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("module json: ") + e.what());
    }
}

}  // namespace fkd
