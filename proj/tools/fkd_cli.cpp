#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fkd/analysis.hpp"
#include "fkd/catalog.hpp"
#include "fkd/io.hpp"
#include "fkd/verify.hpp"

using namespace fkd;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// a catalog key, or a path to a module in JSON format
GModule load(const std::string& key) {
    if (key.size() > 5 && key.substr(key.size() - 5) == ".json") {
        std::ifstream in(key);
        if (!in) throw UsageError("cannot read " + key);
        std::stringstream ss;
        ss << in.rdbuf();
        return module_from_json(ss.str());
    }
    if (!catalog::is_key(key)) throw UsageError("unknown module key '" + key + "'");
    return catalog::build(key);
}

WeightLabel label(const std::string& s) {
    try {
        return parse_label(s);
    } catch (const std::exception&) {
        throw UsageError("unknown weight '" + s + "'");
    }
}

std::string name_of(const GModule& m) {
    auto n = catalog::identify(m);
    return n ? *n : "M" + std::to_string(m.dim());
}

// simples, then projectives, then the rest; higher shifts first
std::vector<std::string> display_order(std::vector<std::string> names) {
    auto rank = [](const std::string& s) {
        int cat = s.rfind("L(", 0) == 0 ? 0 : s.rfind("P(", 0) == 0 ? 1 : 2;
        int shift = 0;
        int lab = 8;
        if (auto b = s.find('['); b != std::string::npos) shift = std::stoi(s.substr(b + 1));
        if (cat < 2) {
            auto close = s.find(')');
            lab = idx(parse_label(s.substr(2, close - 2)));
        }
        return std::tuple(cat, -shift, lab, s);
    };
    std::sort(names.begin(), names.end(), [&](const auto& a, const auto& b) { return rank(a) < rank(b); });
    return names;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
    return s;
}

void print_summary(const GModule& m) {
    std::cout << "dim " << m.dim() << "\n";
    std::cout << "char " << m.character().str() << "\n";
    std::cout << "composition " << decompose_character(m.character()).str() << "\n";
}

int run_verify(bool all, const std::vector<std::string>& ids, const std::string& report, int threads) {
    std::vector<verify::CheckResult> rs;
    if (all || ids.empty()) {
        rs = verify::verify_all(threads);
    } else {
        for (const auto& id : ids)
            if (!verify::has_check(id)) throw UsageError("unknown check '" + id + "'");
        rs = verify::run_checks(ids, threads);
    }
    if (report == "json") std::cout << verify::report_json(rs) << "\n";
    else std::cout << verify::report_text(rs);
    bool ok = std::all_of(rs.begin(), rs.end(), [](const auto& r) { return r.pass; });
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graded modules over the double of FK3 # kS3"};
    app.require_subcommand(1);

    std::string key, key2, json_out, report = "text", wa, wb;
    bool decomp = false, filtration = false, matrix = false, all = false;
    std::vector<std::string> checks;
    int threads = 0;

    auto* build = app.add_subcommand("build", "build a catalog module");
    build->add_option("key", key, "L(x), P(x), A, B, C, T01, Ind(x,y), with optional * and [k]")->required();
    build->add_option("--json", json_out, "write the module as JSON to this file (- for stdout)");

    auto* tensor_cmd = app.add_subcommand("tensor", "tensor product of two modules");
    tensor_cmd->add_option("left", key)->required();
    tensor_cmd->add_option("right", key2)->required();
    tensor_cmd->add_flag("--decompose", decomp, "split into indecomposable summands");

    auto* char_cmd = app.add_subcommand("char", "graded character");
    char_cmd->add_option("key", key)->required();

    auto* socle_cmd = app.add_subcommand("socle", "socle or socle filtration");
    socle_cmd->add_option("key", key)->required();
    socle_cmd->add_flag("--filtration", filtration);

    auto* dual_cmd = app.add_subcommand("dual", "dual module");
    dual_cmd->add_option("key", key)->required();

    auto* ext_cmd = app.add_subcommand("ext", "dimensions of Ext^1 between simples");
    ext_cmd->add_flag("--matrix", matrix);

    auto* fusion_cmd = app.add_subcommand("fusion", "product of two weights");
    fusion_cmd->add_option("a", wa)->required();
    fusion_cmd->add_option("b", wb)->required();

    auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
    verify_cmd->add_flag("--all", all);
    verify_cmd->add_option("--check", checks, "check id (repeatable)");
    verify_cmd->add_option("--report", report)->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_option("--threads", threads);
    auto* list_cmd = verify_cmd->add_flag("--list", "list the check ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*build) {
            GModule m = load(key);
            if (json_out.empty()) {
                print_summary(m);
            } else if (json_out == "-") {
                std::cout << module_to_json(m, 1) << "\n";
            } else {
                std::ofstream out(json_out);
                if (!out) throw UsageError("cannot write " + json_out);
                out << module_to_json(m, 1) << "\n";
            }
        } else if (*tensor_cmd) {
            GModule m = tensor(load(key), load(key2));
            if (!decomp) {
                print_summary(m);
            } else {
                Decomposition d = decompose(m);
                std::vector<std::string> names;
                for (const auto& s : d.summands) names.push_back(name_of(s.module));
                std::cout << join(display_order(names), " ⊕ ") << "\n";
                if (!d.certified) {
                    std::cerr << "decomposition not certified\n";
                    return 1;
                }
            }
        } else if (*char_cmd) {
            std::cout << load(key).character().str() << "\n";
        } else if (*socle_cmd) {
            GModule m = load(key);
            if (filtration) std::cout << socle_filtration(m).render(" " + key, true) << "\n";
            else std::cout << decompose_character(restrict_to(m, socle(m)).character()).str() << "\n";
        } else if (*dual_cmd) {
            GModule d = dual(load(key));
            std::cout << "char " << d.character().str() << "\n";
            if (auto n = catalog::identify(d)) std::cout << "iso " << *n << "\n";
        } else if (*ext_cmd) {
            QuiverMatrix q = separated_quiver();
            if (matrix) {
                std::cout << "      ";
                for (auto b : kAllLabels) std::cout << std::setw(5) << label_name(b);
                std::cout << "\n";
                for (auto a : kAllLabels) {
                    std::cout << std::setw(5) << label_name(a) << " ";
                    for (auto b : kAllLabels) std::cout << std::setw(5) << q[idx(a)][idx(b)];
                    std::cout << "\n";
                }
            } else {
                for (auto a : kAllLabels)
                    for (auto b : kAllLabels)
                        if (q[idx(a)][idx(b)])
                            std::cout << "Ext1(L(" << label_name(a) << "), L(" << label_name(b) << ")) = "
                                      << q[idx(a)][idx(b)] << "\n";
            }
        } else if (*fusion_cmd) {
            std::vector<std::string> out;
            for (auto c : weight_tensor_decompose(label(wa), label(wb))) out.emplace_back(label_name(c));
            std::cout << join(out, " + ") << "\n";
        } else if (*verify_cmd) {
            if (list_cmd->count()) {
                for (const auto& c : verify::checks())
                    std::cout << c.id << "\t" << c.criterion << "\t" << c.title << "\n";
                return 0;
            }
            return run_verify(all, checks, report, threads);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
