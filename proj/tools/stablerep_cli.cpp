// Command-line interface: decompose Schur functors of the indecomposables,
// multiply stable classes, classify, scan, verify, and print the two
// height/position tables. Exit codes: 0 success, 1 verified disagreement,
// 2 usage error.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "stablerep/errors.hpp"
#include "stablerep/fp_module.hpp"
#include "stablerep/json_io.hpp"
#include "stablerep/plethysm.hpp"
#include "stablerep/verify.hpp"

using namespace stablerep;

namespace {

constexpr int kMaxPrimeOracle = 13;
constexpr int kMaxPrimeRing = 97;

void require_prime(int p, bool oracle_backed) {
    const int bound = oracle_backed ? kMaxPrimeOracle : kMaxPrimeRing;
    require(is_odd_prime(p), "p must be an odd prime, got " + std::to_string(p));
    require(p <= bound, "p = " + std::to_string(p) + " exceeds the supported bound " +
                            std::to_string(bound) +
                            (oracle_backed ? " for oracle-backed commands" : ""));
}

std::vector<int> parse_int_list(const std::string& csv, const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            require(used == tok.size(), "");
        } catch (const std::exception&) {
            throw domain_error("invalid " + what + " entry '" + tok + "'");
        }
    }
    require(!out.empty(), what + " must not be empty");
    return out;
}

BasisIndex parse_basis_pair(const std::string& s, int p) {
    std::vector<int> lm = parse_int_list(s, "basis symbol");
    require(lm.size() == 2, "basis symbol must be 'l,m', got '" + s + "'");
    require(lm[0] >= 0 && lm[0] <= p - 2, "basis symbol l outside [0, p-2]");
    require(lm[1] >= 0 && lm[1] <= p - 2, "basis symbol m outside [0, p-2]");
    return BasisIndex{lm[0], lm[1]};
}

std::string describe(const PlethysmResult& r) {
    std::string s = "nabla^" + r.nu.to_string() + " ";
    s += render_basis_label(r.l, r.twist);
    s += "  ->  " + r.decomposition.to_string();
    if (r.projective) {
        s += "  [projective]";
    } else if (r.stably_irreducible) {
        s += "  [stably irreducible, case " + r.theorem_case + "]";
    } else {
        s += "  [" + r.theorem_case + "]";
    }
    return s;
}

int cmd_decompose(int p, const std::string& nu_csv, int l, int omega, bool with_oracle,
                  bool presentation, const std::string& format) {
    require_prime(p, with_oracle);
    const Partition nu = Partition::parse(nu_csv);
    require(l >= 0 && l <= p - 2, "l outside [0, p-2]");
    require(omega >= 0 && omega <= p - 2, "omega outside [0, p-2]");
    require(is_p_small(nu, p), "partition " + nu.to_string() + " is not p-small");

    const PlethysmResult r = decompose_twisted(nu, l, omega, p);
    bool agree = true;
    nlohmann::json j = json_of(r);
    std::string oracle_text;
    if (with_oracle) {
        require(omega == 0, "the matrix oracle handles untwisted inputs only");
        const FpModule m = schur_apply(nu, build_sym(l, p));
        const KNDecomposition d = decompose_kN(m);
        const StableElement transported = green_transport(d);
        agree = transported == r.decomposition;
        oracle_text = "oracle decomposition: " + transported.to_string() + "  [" +
                      (agree ? "AGREE" : "DISAGREE") + "]";
        j["oracle"] = json_of(d);
        j["oracle_agrees"] = agree;
    }
    if (presentation) j["presentation"] = psi_to_presentation(r.decomposition).to_string();
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << describe(r) << "\n";
        if (presentation) {
            std::cout << "presentation: " << psi_to_presentation(r.decomposition).to_string()
                      << "\n";
        }
        if (with_oracle) std::cout << oracle_text << "\n";
    }
    return agree ? 0 : 1;
}

int cmd_tensor(int p, const std::string& a_s, const std::string& b_s, bool presentation,
               const std::string& format) {
    require_prime(p, false);
    const BasisIndex a = parse_basis_pair(a_s, p);
    const BasisIndex b = parse_basis_pair(b_s, p);
    const StableElement product =
        cg_multiply(StableElement::basis(p, a.l, a.m), StableElement::basis(p, b.l, b.m));
    if (format == "json") {
        nlohmann::json j = json_of(product);
        if (presentation) j["presentation"] = psi_to_presentation(product).to_string();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << render_basis_label(a.l, a.m) << " \xE2\x8A\x97 " << render_basis_label(b.l, b.m)
                  << "  =  " << product.to_string() << "\n";
        if (presentation) {
            std::cout << "presentation: " << psi_to_presentation(product).to_string() << "\n";
        }
    }
    return 0;
}

int cmd_classify(int p, const std::string& nu_csv, int l, const std::string& format) {
    require_prime(p, false);
    const Partition nu = Partition::parse(nu_csv);
    require(l >= 0 && l <= p - 2, "l outside [0, p-2]");
    require(is_p_small(nu, p), "partition " + nu.to_string() + " is not p-small");

    const PlethysmResult r = decompose_plethysm(nu, l, p);
    nlohmann::json j = json_of(r);
    j["projective_closed_form"] = is_projective_closed_form(nu, l, p);
    std::string extra;
    if (is_pl_small(nu, p, l)) {
        const auto witness = multiset_criterion(nu, l, p);
        j["pl_small"] = true;
        j["reduced_case"] = class_case_label(classify_pl_small(nu, l, p));
        if (witness) {
            j["multiset_witness"] = *witness;
            extra = "multiset witness i=" + std::to_string(*witness) + ", reduced case " +
                    j["reduced_case"].get<std::string>();
        } else {
            j["multiset_witness"] = nullptr;
            extra = "no multiset witness, reduced case " + j["reduced_case"].get<std::string>();
        }
    } else {
        j["pl_small"] = false;
    }
    if (format == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << describe(r) << "\n";
        if (!extra.empty()) std::cout << extra << "\n";
    }
    return 0;
}

int cmd_tables(int p, const std::string& format) {
    require_prime(p, false);
    const HeightPositionTables tabs = height_position_tables(p);
    if (format == "json") {
        nlohmann::json j;
        j["p"] = p;
        for (int t = 0; t < 2; ++t) {
            nlohmann::json rows = nlohmann::json::array();
            for (int h = p - 2; h >= 0; --h) {
                nlohmann::json row = nlohmann::json::array();
                for (int c = 0; c <= (p - 3) / 2; ++c) {
                    const BasisIndex cell = tabs.cells[t][h][c];
                    row.push_back(nlohmann::json{{"l", cell.l},
                                                 {"m", cell.m},
                                                 {"label", render_basis_label(cell.l, cell.m)}});
                }
                rows.push_back(row);
            }
            j[t == 0 ? "table1" : "table2"] = rows;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    for (int t = 0; t < 2; ++t) {
        std::cout << (t == 0 ? "table 1 (even symmetric powers)"
                             : "table 2 (odd symmetric powers)")
                  << ", rows are heights " << p - 2 << "..0, columns are positions 0.."
                  << (p - 3) / 2 << ":\n";
        std::vector<std::vector<std::string>> cells(p - 1);
        std::vector<size_t> width((p - 1) / 2, 0);
        for (int h = p - 2; h >= 0; --h) {
            for (int c = 0; c <= (p - 3) / 2; ++c) {
                const BasisIndex cell = tabs.cells[t][h][c];
                cells[p - 2 - h].push_back(render_basis_label(cell.l, cell.m));
                width[c] = std::max(width[c], cells[p - 2 - h].back().size());
            }
        }
        for (const auto& row : cells) {
            for (size_t c = 0; c < row.size(); ++c) {
                std::cout << (c ? " | " : "  ") << row[c]
                          << std::string(width[c] - row[c].size(), ' ');
            }
            std::cout << "\n";
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_scan(int p, int l_filter, long long max_size, const std::string& format) {
    require_prime(p, false);
    require(p <= 13 || max_size >= 0, "scan at p > 13 requires --max-size");
    long long bound = max_size < 0 ? p : std::min<long long>(max_size + 1, p);
    nlohmann::json all = nlohmann::json::array();
    for (const Partition& nu : partitions_smaller_than(bound)) {
        for (int l = 0; l <= p - 2; ++l) {
            if (l_filter >= 0 && l != l_filter) continue;
            const PlethysmResult r = decompose_plethysm(nu, l, p);
            if (format == "json") {
                all.push_back(json_of(r));
            } else {
                std::cout << describe(r) << "\n";
            }
        }
    }
    if (format == "json") std::cout << all.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& p_list, const std::string& theorems, long long oracle_budget,
               int oracle_max_size, int jobs, uint64_t seed) {
    const std::vector<int> primes = parse_int_list(p_list, "p-list");
    const bool auto_budget = oracle_budget < 0;
    for (int p : primes) {
        require_prime(p, oracle_budget > 0 || (auto_budget && p <= 7));
    }
    std::set<std::string> which;
    {
        std::stringstream ss(theorems);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            require(tok == "1.2" || tok == "1.3" || tok == "1.4" || tok == "1.5" ||
                        tok == "5.9" || tok == "5.11" || tok == "rings",
                    "unknown check id '" + tok + "'");
            which.insert(tok);
        }
        require(!which.empty(), "no checks requested");
    }
    if (jobs <= 0) jobs = std::max(1u, std::thread::hardware_concurrency());

    bool all_ok = true;
    auto report = [&](const std::string& id, int p, const verify::CheckResult& r) {
        std::printf("check %-5s p=%-3d %-48s %s  [%lld points, %.2fs]\n", id.c_str(), p,
                    r.name.c_str(), r.ok() ? "OK" : "FAIL", r.points, r.seconds);
        for (const std::string& f : r.failures) std::printf("    %s\n", f.c_str());
        std::fflush(stdout);
        all_ok = all_ok && r.ok();
    };

    for (int p : primes) {
        if (which.count("1.2")) report("1.2", p, verify::check_projectivity(p));
        if (which.count("1.3")) report("1.3", p, verify::check_case_list_full(p));
        if (which.count("1.4")) report("1.4", p, verify::check_twisted_projectivity(p));
        if (which.count("1.5")) report("1.5", p, verify::check_twisted_irreducibility(p));
        if (which.count("5.9")) report("5.9", p, verify::check_multiset_criterion(p));
        if (which.count("5.11")) report("5.11", p, verify::check_case_list_reduced(p));
        if (which.count("rings")) report("rings", p, verify::check_ring_structure(p, seed));
        const long long budget = auto_budget ? (p <= 7 ? 20000 : 0) : oracle_budget;
        if (budget > 0) {
            const int cap = p <= 7 ? p - 1 : oracle_max_size;
            report("orcl", p, verify::check_oracle(p, budget, cap, jobs));
        }
    }
    std::printf("%s\n", all_ok ? "ALL CHECKS PASS" : "CHECKS FAILED");
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact stable-category calculator for the special linear group of rank one"};
    app.require_subcommand(1);

    std::string format = "table";
    std::string nu_csv;
    int p = 7;
    int l = 0;
    int omega = 0;
    bool with_oracle = false;
    bool presentation = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--p", p, "odd prime")->required();
        sub->add_option("--format", format, "output format: table or json")
            ->check(CLI::IsMember({"table", "json"}));
    };

    CLI::App* dec = app.add_subcommand("decompose", "decompose a Schur functor of a basis symbol");
    add_common(dec);
    dec->add_option("--nu", nu_csv,
                    "partition, descending comma list (empty for the empty partition)");
    dec->add_option("--l", l, "symmetric power index")->required();
    dec->add_option("--omega", omega, "input twist: use the omega-th Heller translate");
    dec->add_flag("--oracle", with_oracle, "cross-check against the matrix-level pipeline");
    dec->add_flag("--presentation", presentation,
                  "also print the image under the presentation isomorphism");

    std::string a_sym, b_sym;
    CLI::App* ten = app.add_subcommand("tensor", "multiply two basis symbols");
    add_common(ten);
    ten->add_option("--a", a_sym, "first symbol as 'l,m'")->required();
    ten->add_option("--b", b_sym, "second symbol as 'l,m'")->required();
    ten->add_flag("--presentation", presentation,
                  "also print the image under the presentation isomorphism");

    CLI::App* cls = app.add_subcommand("classify", "projectivity / stable irreducibility verdicts");
    add_common(cls);
    cls->add_option("--nu", nu_csv, "partition, descending comma list");
    cls->add_option("--l", l, "symmetric power index")->required();

    long long scan_max_size = -1;
    int scan_l = -1;
    CLI::App* scn = app.add_subcommand("scan", "decompose every p-small partition");
    add_common(scn);
    scn->add_option("--l", scan_l, "restrict to one symmetric power index");
    scn->add_option("--max-size", scan_max_size, "restrict |nu|");

    CLI::App* tab = app.add_subcommand("tables", "print the two height/position tables");
    add_common(tab);

    std::string p_list = "3,5,7";
    std::string theorems = "1.2,1.3,1.4,1.5,5.9,5.11";
    long long oracle_budget = -1;
    int oracle_max_size = 4;
    int jobs = 0;
    uint64_t seed = 0;
    CLI::App* ver = app.add_subcommand("verify", "run the classification checks");
    ver->add_option("--p-list", p_list, "comma list of odd primes");
    ver->add_option("--theorems", theorems, "check ids among 1.2,1.3,1.4,1.5,5.9,5.11,rings");
    ver->add_option("--oracle-budget", oracle_budget,
                    "matrix-oracle dimension budget (0 disables the oracle; "
                    "default: 20000 for p <= 7, off beyond)");
    ver->add_option("--oracle-max-size", oracle_max_size, "matrix-oracle |nu| cap for p > 7");
    ver->add_option("--jobs", jobs, "worker threads (default: hardware)");
    ver->add_option("--seed", seed, "seed for the randomized ring checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (dec->parsed()) {
            return cmd_decompose(p, nu_csv, l, omega, with_oracle, presentation, format);
        }
        if (ten->parsed()) return cmd_tensor(p, a_sym, b_sym, presentation, format);
        if (cls->parsed()) return cmd_classify(p, nu_csv, l, format);
        if (scn->parsed()) return cmd_scan(p, scan_l, scan_max_size, format);
        if (tab->parsed()) return cmd_tables(p, format);
        if (ver->parsed()) {
            return cmd_verify(p_list, theorems, oracle_budget, oracle_max_size, jobs, seed);
        }
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
