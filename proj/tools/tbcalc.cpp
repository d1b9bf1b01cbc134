// Command-line front end. Exit codes: 0 success, 1 invalid input, 2 internal
// invariant violation.

#include "tbcalc/batch.hpp"
#include "tbcalc/error.hpp"
#include "tbcalc/io.hpp"
#include "tbcalc/linking.hpp"
#include "tbcalc/tb.hpp"
#include "tbcalc/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

namespace {

using namespace tbcalc;

constexpr int kOk = 0;
constexpr int kInput = 1;
constexpr int kInternal = 2;

struct Range {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

Range parse_range(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw Error(ErrorCode::bad_exponents, "range must look like A:B, got '" + text + "'");
    }
    try {
        std::size_t used_lo = 0;
        std::size_t used_hi = 0;
        const std::string lo = text.substr(0, colon);
        const std::string hi = text.substr(colon + 1);
        Range r{std::stoll(lo, &used_lo), std::stoll(hi, &used_hi)};
        if (used_lo != lo.size() || used_hi != hi.size() || r.lo > r.hi) {
            throw std::invalid_argument(text);
        }
        return r;
    } catch (const std::logic_error&) {
        throw Error(ErrorCode::bad_exponents, "range must look like A:B with A <= B, got '" + text + "'");
    }
}

std::string id_list(const std::set<VertexId>& ids)
{
    std::string out = "{";
    for (const VertexId v : ids) {
        out += (out.size() > 1 ? ", " : "") + std::to_string(to_int(v));
    }
    return out + "}";
}

void print_explain(const TbResult& r)
{
    std::cout << "N = " << r.N << "\n";
    std::cout << "W_R = " << id_list(r.wr) << "\n";
    if (r.rupture) {
        std::cout << "rupture = " << to_int(*r.rupture) << "\n";
    }
    for (const auto& [v, np] : r.contributions) {
        std::cout << "n'(" << to_int(v) << ") = " << np << "\n";
        for (const ArmWeight& a : r.arm_weights.at(v)) {
            std::cout << "  arm from " << to_int(a.first) << ": length " << a.length << ", weight " << a.weight
                      << (a.imaginary ? ", imaginary" : ", real") << "\n";
        }
    }
    std::cout << "tb = " << r.N << " - 1";
    for (const auto& [v, np] : r.contributions) {
        std::cout << " + (" << np << ")";
    }
    std::cout << " = " << r.value << "\n";
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCode::malformed_document, "cannot write '" + path + "'");
    }
    out << content;
}

nlohmann::json read_json(const std::string& path, ErrorCode code)
{
    std::ifstream in(path);
    if (!in) {
        throw Error(code, "cannot read '" + path + "'");
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(code, std::string("invalid JSON in '") + path + "': " + e.what());
    }
}

int report_verify(const VerifyReport& rep, bool as_json)
{
    if (as_json) {
        nlohmann::json counts = nlohmann::json::array();
        for (const auto& c : rep.counts) {
            counts.push_back({{"identity", c.identity}, {"instances", c.instances}, {"violations", c.violations}});
        }
        nlohmann::json viol = nlohmann::json::array();
        for (const auto& v : rep.violations) {
            viol.push_back({{"identity", v.identity}, {"detail", v.detail}});
        }
        std::cout << nlohmann::json{{"ok", rep.ok()},
                                    {"instances", rep.instances()},
                                    {"skipped", rep.skipped},
                                    {"counts", counts},
                                    {"violations", viol}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& c : rep.counts) {
            std::cout << c.identity << ": " << c.instances << " instances, " << c.violations << " violations\n";
        }
        std::cout << "skipped pairs: " << rep.skipped << "\n";
        std::size_t shown = 0;
        for (const auto& v : rep.violations) {
            if (shown++ == 20) {
                std::cout << "... " << rep.violations.size() - 20 << " more\n";
                break;
            }
            std::cout << "VIOLATION " << v.identity << ": " << v.detail << "\n";
        }
        std::cout << (rep.ok() ? "OK" : "FAILED") << "\n";
    }
    return rep.ok() ? kOk : kInternal;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Thurston-Bennequin invariants of the real links of x^m + y^n +- z^2"};
    app.require_subcommand(1);

    std::int64_t m = 0;
    std::int64_t n = 0;
    std::string sign_text;
    bool as_json = false;
    bool explain = false;
    std::string dot_path;
    auto* compute = app.add_subcommand("compute", "tb of one Brieskorn double point");
    compute->add_option("--m", m, "exponent of x")->required();
    compute->add_option("--n", n, "exponent of y")->required();
    compute->add_option("--sign", sign_text, "plus or minus")->required()->check(CLI::IsMember({"plus", "minus"}));
    compute->add_flag("--json", as_json, "emit the result document");
    compute->add_option("--dot", dot_path, "write the annotated graph in DOT format");
    compute->add_flag("--explain", explain, "print N, W_R, n' values and arm weights");

    std::string m_range;
    std::string n_range;
    std::string out_path;
    auto* table = app.add_subcommand("table", "CSV table of tb over a grid");
    table->add_option("--m-range", m_range, "A:B")->required();
    table->add_option("--n-range", n_range, "C:D")->required();
    table->add_option("--sign", sign_text, "plus or minus")->required()->check(CLI::IsMember({"plus", "minus"}));
    table->add_option("--out", out_path, "output CSV path")->required();

    std::vector<std::string> suites;
    std::int64_t m_max = 10;
    std::int64_t n_max = 120;
    std::int64_t k_max = 3;
    bool serial = false;
    auto* verify = app.add_subcommand("verify", "check identities exactly over a grid");
    verify->add_option("--suite", suites, "period,symmetry,integrality,parity,structure")
        ->required()
        ->delimiter(',')
        ->check(CLI::IsMember({"period", "symmetry", "integrality", "parity", "structure"}));
    verify->add_option("--m-max", m_max, "largest m")->required();
    verify->add_option("--n-max", n_max, "largest n")->required();
    verify->add_option("--k-max", k_max, "largest k in the symmetry identities")->capture_default_str();
    verify->add_flag("--json", as_json, "emit a JSON report");
    verify->add_flag("--serial", serial, "use the serial reference evaluator");

    std::string decomposition_path;
    auto* linkform = app.add_subcommand("linkform", "linking form from a real-part decomposition");
    linkform->add_option("--decomposition", decomposition_path, "decomposition JSON")->required();
    linkform->add_flag("--json", as_json, "emit JSON");

    std::string graph_path;
    auto* evaluate = app.add_subcommand("evaluate", "tb of an annotated graph document");
    evaluate->add_option("--graph", graph_path, "graph document JSON with real marks")->required();
    evaluate->add_flag("--json", as_json, "emit the result document");
    evaluate->add_flag("--explain", explain, "print N, W_R, n' values and arm weights");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }

    try {
        if (*compute) {
            const TbResult r = tb(m, n, parse_sign(sign_text));
            if (!dot_path.empty()) {
                write_file(dot_path, to_dot(r.graph, r.wr));
            }
            if (as_json) {
                std::cout << to_json(r).dump(2) << "\n";
            } else if (explain) {
                print_explain(r);
            } else {
                std::cout << r.value << "\n";
            }
        } else if (*table) {
            const Range mr = parse_range(m_range);
            const Range nr = parse_range(n_range);
            const Sign s = parse_sign(sign_text);
            std::ofstream out(out_path);
            if (!out) {
                throw Error(ErrorCode::malformed_document, "cannot write '" + out_path + "'");
            }
            std::vector<GridKey> keys;
            std::size_t skipped = 0;
            for (std::int64_t a = mr.lo; a <= mr.hi; ++a) {
                for (std::int64_t b = nr.lo; b <= nr.hi; ++b) {
                    if (a >= 2 && b >= 2 && std::gcd(a, b) == 1) {
                        keys.push_back({a, b, s});
                    } else {
                        ++skipped;
                    }
                }
            }
            write_table_csv(out, evaluate_grid_parallel(keys), skipped);
            std::cout << "wrote " << keys.size() << " rows to " << out_path << "\n";
        } else if (*verify) {
            VerifyConfig cfg;
            for (const auto& s : suites) {
                cfg.suites.insert(parse_suite(s));
            }
            cfg.m_max = m_max;
            cfg.n_max = n_max;
            cfg.k_max = k_max;
            cfg.parallel = !serial;
            return report_verify(verify_identities(cfg), as_json);
        } else if (*linkform) {
            const Decomposition d =
                decomposition_from_json(read_json(decomposition_path, ErrorCode::malformed_decomposition));
            const LinkingMatrix lm = linking_form_from_decomposition(d);
            std::cout << (as_json ? to_json(lm).dump(2) : format_matrix(lm)) << "\n";
        } else if (*evaluate) {
            const GraphDocument doc = graph_document_from_json(read_json(graph_path, ErrorCode::malformed_document));
            TbResult r = tb_from_graph(doc.graph);
            r.sign = doc.meta.sign;
            r.m = doc.meta.m.value_or(0);
            r.n = doc.meta.n.value_or(0);
            if (as_json) {
                std::cout << to_json(r).dump(2) << "\n";
            } else if (explain) {
                print_explain(r);
            } else {
                std::cout << r.value << "\n";
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_input_error(e.code()) ? kInput : kInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kOk;
}
