// Command-line front end: tables of generalized Stirling numbers,
// poly-Bernoulli polynomial expansion in 1..n variables, R-function
// evaluation, and identity-suite verification.
//
// Exit status: 0 success, 1 usage/domain error, 2 verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "polybern/serialize.hpp"
#include "polybern/suites.hpp"

namespace {

using namespace polybern;

// "Z", "Z1,Z2,...", or "A..B" (inclusive).
std::vector<long> parse_int_set(const std::string& s) {
    std::vector<long> out;
    auto range = s.find("..");
    if (range != std::string::npos) {
        long a = std::stol(s.substr(0, range));
        long b = std::stol(s.substr(range + 2));
        if (b < a) throw CLI::ValidationError("range", "descending range: " + s);
        for (long v = a; v <= b; ++v) out.push_back(v);
        return out;
    }
    size_t pos = 0;
    while (pos <= s.size()) {
        auto comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
        if (tok.empty()) throw CLI::ValidationError("list", "empty element in: " + s);
        out.push_back(std::stol(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw CLI::ValidationError("list", "no values in: " + s);
    return out;
}

std::vector<unsigned> to_unsigned(const std::vector<long>& vs, const std::string& flag) {
    std::vector<unsigned> out;
    for (long v : vs) {
        if (v < 0) throw CLI::ValidationError(flag, "must be non-negative");
        out.push_back(static_cast<unsigned>(v));
    }
    return out;
}

struct Output {
    std::string format = "text";
    std::string path;

    void emit(const std::string& text, const Json& json) const {
        std::string body = (format == "json" ? json.dump() : text) + "\n";
        if (path.empty()) {
            std::cout << body;
        } else {
            std::ofstream f(path, std::ios::binary);
            if (!f) throw CLI::ValidationError("--out", "cannot open " + path);
            f << body;
        }
    }
};

// Renders one value per requested k: bare for a single k, listed otherwise.
void emit_per_k(const Output& out, const std::vector<long>& ks,
                const std::vector<std::string>& texts, const std::vector<Json>& jsons) {
    if (ks.size() == 1) {
        out.emit(texts[0], jsons[0]);
        return;
    }
    std::string text;
    Json arr = Json::array();
    for (size_t i = 0; i < ks.size(); ++i) {
        if (i) text += "\n";
        text += "k=" + std::to_string(ks[i]) + ": " + texts[i];
        arr.push_back(Json{{"k", ks[i]}, {"value", jsons[i]}});
    }
    out.emit(text, arr);
}

}  // namespace

int main(int argc, char** argv) {
    using namespace polybern;

    CLI::App app{"exact poly-Bernoulli and generalized Stirling calculator"};
    app.require_subcommand(1);

    Output out;
    std::string k_spec = "0,1,2";
    std::string q_spec = "0..3";
    unsigned p = 0, p1 = 0, p2 = 0, m = 0, n = 1, r = 0, max_p = 3, kind = 2;
    long mu = 0;
    std::string y_spec = "0", degrees_spec, route = "def", suite = "all";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", out.format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        cmd->add_option("--out", out.path, "write output to this path");
    };

    auto* gsn_cmd = app.add_subcommand("gsn", "generalized Stirling polynomial S(p1,k)");
    gsn_cmd->add_option("--p1", p1)->required();
    gsn_cmd->add_option("--p2", p2)->required();
    gsn_cmd->add_option("--k", k_spec, "k value, list, or A..B")->required();
    gsn_cmd->add_option("--route", route)
        ->check(CLI::IsMember({"def", "explicit", "stirling-m", "stirling-n"}));
    gsn_cmd->add_option("--m", m);
    gsn_cmd->add_option("--n", n);
    add_common(gsn_cmd);

    auto* st_cmd = app.add_subcommand("stirling", "standard Stirling number");
    st_cmd->add_option("--kind", kind)->check(CLI::IsMember({1u, 2u}))->required();
    st_cmd->add_option("--p", p)->required();
    st_cmd->add_option("--k", k_spec)->required();
    add_common(st_cmd);

    auto* pb_cmd = app.add_subcommand("pb", "poly-Bernoulli polynomial in one variable");
    pb_cmd->add_option("--p", p)->required();
    pb_cmd->add_option("--k", k_spec)->required();
    add_common(pb_cmd);

    auto* pb2_cmd = app.add_subcommand("pb2", "bi-variate poly-Bernoulli polynomial");
    pb2_cmd->add_option("--p1", p1)->required();
    pb2_cmd->add_option("--p2", p2)->required();
    pb2_cmd->add_option("--k", k_spec)->required();
    pb2_cmd->add_option("--route", route)
        ->check(CLI::IsMember({"def", "explicit", "numbers", "stirling-m", "stirling-n"}));
    pb2_cmd->add_option("--m", m);
    pb2_cmd->add_option("--n", n);
    add_common(pb2_cmd);

    auto* pbn_cmd = app.add_subcommand("pbn", "n-variate poly-Bernoulli polynomial");
    pbn_cmd->add_option("--degrees", degrees_spec, "per-variable degrees N,N,...")->required();
    pbn_cmd->add_option("--k", k_spec)->required();
    add_common(pbn_cmd);

    auto* rf_cmd = app.add_subcommand("rfun", "recursive R-function value");
    rf_cmd->add_option("--mu", mu)->check(CLI::Range(-1L, 1000000L))->required();
    rf_cmd->add_option("--k", k_spec)->required();
    rf_cmd->add_option("--y", y_spec, "rational argument a/b")->required();
    add_common(rf_cmd);

    auto* v_cmd = app.add_subcommand("verify", "run identity verification suites");
    v_cmd->add_option("--suite", suite, "suite name or 'all'");
    v_cmd->add_option("--max-p", max_p);
    v_cmd->add_option("--k", k_spec, "k grid: value, list, or A..B");
    v_cmd->add_option("--q", q_spec, "q grid: value, list, or A..B");
    v_cmd->add_option("--m", m, "largest m-shift sampled");
    v_cmd->add_option("--n", n, "largest n-shift sampled");
    v_cmd->add_option("--r", r, "largest r-shift sampled");
    add_common(v_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        if (gsn_cmd->parsed() || pb_cmd->parsed() || pb2_cmd->parsed() || pbn_cmd->parsed() ||
            st_cmd->parsed()) {
            std::vector<long> ks = parse_int_set(k_spec);
            std::vector<std::string> texts;
            std::vector<Json> jsons;
            for (long k : ks) {
                if (st_cmd->parsed()) {
                    Int v = kind == 2 ? stirling2(p, k) : stirling1_unsigned(p, k);
                    texts.push_back(v.get_str());
                    jsons.push_back(Json(v.get_str()));
                    continue;
                }
                MPoly poly;
                if (gsn_cmd->parsed()) {
                    if (route == "stirling-m")
                        poly = gsn_via_stirling_m(p1, p2, k, m);
                    else if (route == "stirling-n")
                        poly = gsn_via_stirling_n(p1, p2, k, n);
                    else
                        poly = gsn_sym(p1, p2, k);
                } else if (pb_cmd->parsed()) {
                    poly = pb_poly(p, k);
                } else if (pb2_cmd->parsed()) {
                    Pb2Route rt = Pb2Route::Definition;
                    unsigned param = 0;
                    if (route == "explicit") rt = Pb2Route::Explicit;
                    if (route == "numbers") rt = Pb2Route::Numbers;
                    if (route == "stirling-m") rt = Pb2Route::StirlingM, param = m;
                    if (route == "stirling-n") rt = Pb2Route::StirlingN, param = n;
                    poly = pb2(p1, p2, k, rt, param);
                } else {
                    poly = pbn(to_unsigned(parse_int_set(degrees_spec), "--degrees"), k);
                }
                texts.push_back(poly.str());
                jsons.push_back(to_json(poly));
            }
            emit_per_k(out, ks, texts, jsons);
            return 0;
        }
        if (rf_cmd->parsed()) {
            std::vector<long> ks = parse_int_set(k_spec);
            Rat y = Rat::parse(y_spec);
            std::vector<std::string> texts;
            std::vector<Json> jsons;
            for (long k : ks) {
                Rat v = r_function(mu, k, y);
                texts.push_back(v.str());
                jsons.push_back(to_json(v));
            }
            emit_per_k(out, ks, texts, jsons);
            return 0;
        }
        // verify
        CatalogConfig cfg;
        cfg.max_p = max_p;
        cfg.k_values = parse_int_set(k_spec);
        cfg.q_values = to_unsigned(parse_int_set(q_spec), "--q");
        if (v_cmd->count("--m")) {
            cfg.m_values.clear();
            for (unsigned i = 0; i <= m; ++i) cfg.m_values.push_back(i);
        }
        if (v_cmd->count("--n")) {
            cfg.n_values.clear();
            for (unsigned i = 1; i <= n; ++i) cfg.n_values.push_back(i);
        }
        if (v_cmd->count("--r")) {
            cfg.r_values.clear();
            for (unsigned i = 0; i <= r; ++i) cfg.r_values.push_back(i);
        }
        SuiteReport rep = suite == "all" ? run_all_suites(cfg) : run_suite(suite, cfg);
        std::string text;
        if (rep.failed == 0) {
            text = "all " + std::to_string(rep.passed) + " checks passed";
        } else {
            text = std::to_string(rep.failed) + " of " +
                   std::to_string(rep.passed + rep.failed) + " checks failed";
            for (const auto& c : rep.results)
                if (!c.pass)
                    text += "\nFAIL " + c.name + " [" + c.params + "]\n  lhs: " + c.lhs +
                            "\n  rhs: " + c.rhs;
        }
        out.emit(text, to_json(rep));
        return rep.failed == 0 ? 0 : 2;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
