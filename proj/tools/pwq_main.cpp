// pwq: packed words, coinversion codes, and the quotient rings they govern.
//
// Subcommands: enumerate, groebner, hilbert, frobenius, cfunction, verify.
// Exit codes: 0 success, 1 verification failure, 2 invalid arguments,
// 3 internal inconsistency.

#include <CLI11.hpp>
#include <atomic>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

#include "pwq/json_io.hpp"
#include "pwq/quotients.hpp"

using namespace pwq;

namespace {

enum class Format { json, csv, text };

struct RunConfig {
    int n = 0;
    int k = 0;
    int n_max = -1;  // -1: per-suite default
    int max_n = 6;   // configured ceiling for any n
    std::string ring = "S";
    std::string suite = "all";
    std::string alpha_arg;
    std::string order_arg = "lex";
    std::string format_arg = "text";
    std::string convention_arg = "auto";
    std::string cache_dir;
    int jobs = 1;

    Format format() const {
        if (format_arg == "json") return Format::json;
        if (format_arg == "csv") return Format::csv;
        if (format_arg == "text") return Format::text;
        throw CLI::ValidationError("--format must be json, csv or text");
    }

    std::vector<Rational> alpha(int arity) const {
        if (alpha_arg.empty()) return default_alpha(arity);
        std::vector<Rational> out;
        std::stringstream ss(alpha_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(rational_from_string(tok));
        return out;
    }

    void check_nk() const {
        if (n < 1 || k < 1 || k > n || n > max_n)
            throw CLI::ValidationError("need 1 <= k <= n <= " + std::to_string(max_n));
    }
};

GroebnerCache& cache_for(const RunConfig& cfg) {
    static std::unique_ptr<GroebnerCache> cache;
    if (!cache) {
        std::string dir = cfg.cache_dir;
        if (dir.empty())
            if (const char* env = std::getenv("PWQ_CACHE_DIR")) dir = env;
        cache = dir.empty() ? std::make_unique<GroebnerCache>()
                            : std::make_unique<GroebnerCache>(dir);
    }
    return *cache;
}

ShapeConvention convention_for(const RunConfig& cfg) {
    if (cfg.convention_arg == "shape") return ShapeConvention::shape;
    if (cfg.convention_arg == "conjugate-shape") return ShapeConvention::conjugate_shape;
    if (cfg.convention_arg == "auto") return calibrate_convention(&cache_for(cfg));
    throw CLI::ValidationError("--convention must be auto, shape or conjugate-shape");
}

std::string csv_quote(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string word_str(const PackedWord& w) {
    std::string s;
    for (int v : w.letters) s += std::to_string(v);
    return s;
}

std::string osp_str(const OrderedSetPartition& s) {
    std::string out = "(";
    for (size_t b = 0; b < s.blocks.size(); ++b) {
        if (b) out += "|";
        for (int v : s.blocks[b]) out += std::to_string(v);
    }
    return out + ")";
}

std::string code_str(const CodeSequence& c) {
    std::string out = "(";
    for (size_t i = 0; i < c.entries.size(); ++i)
        out += (i ? "," : "") + std::to_string(c.entries[i]);
    return out + ")";
}

std::string qpoly_csv(const QPolynomial& p) {
    std::string out;
    for (int i = 0; i <= std::max(p.degree(), 0); ++i)
        out += (i ? "," : "") + std::to_string(p.coeff(i));
    return out;
}

int cmd_enumerate(const RunConfig& cfg) {
    cfg.check_nk();
    auto words = enumerate_packed_words(cfg.n, cfg.k);
    Format fmt = cfg.format();
    if (fmt == Format::json) {
        Json rows = Json::array();
        for (const auto& w : words) {
            OrderedSetPartition s = word_to_osp(w);
            rows.push_back(Json{{"word", to_json(w)},
                                {"osp", to_json(s)},
                                {"code", to_json(coinversion_code(s))},
                                {"boosted", to_json(boosted_code(s))}});
        }
        std::cout << Json{{"n", cfg.n}, {"k", cfg.k}, {"count", words.size()}, {"rows", rows}}
                         .dump(1)
                  << "\n";
    } else {
        if (fmt == Format::csv) std::cout << "word,osp,code,boosted\n";
        for (const auto& w : words) {
            OrderedSetPartition s = word_to_osp(w);
            std::string cells[4] = {word_str(w), osp_str(s), code_str(coinversion_code(s)),
                                    code_str(boosted_code(s))};
            if (fmt == Format::csv)
                std::cout << csv_quote(cells[0]) << "," << csv_quote(cells[1]) << ","
                          << csv_quote(cells[2]) << "," << csv_quote(cells[3]) << "\n";
            else
                std::cout << cells[0] << "  " << cells[1] << "  " << cells[2] << "  "
                          << cells[3] << "\n";
        }
    }
    return 0;
}

QuotientRing ring_for(const RunConfig& cfg) {
    cfg.check_nk();
    if (cfg.ring == "S") return quotient_S(cfg.n, cfg.k, &cache_for(cfg));
    if (cfg.ring == "R") return quotient_R(cfg.n, cfg.k, &cache_for(cfg));
    throw CLI::ValidationError("--ring must be S or R");
}

int cmd_groebner(const RunConfig& cfg) {
    cfg.check_nk();
    MonomialOrder ord = order_from_name(cfg.order_arg);
    IdealPresentation I = cfg.ring == "S"   ? ideal_J(cfg.n, cfg.k)
                          : cfg.ring == "R" ? ideal_I_hrs(cfg.n, cfg.k)
                                            : throw CLI::ValidationError("--ring must be S or R");
    std::string tag = (cfg.ring == "S" ? "J" : "I") + std::string("_n") +
                      std::to_string(cfg.n) + "_k" + std::to_string(cfg.k);
    GroebnerBasis G = cache_for(cfg).get(tag, I, ord);
    Format fmt = cfg.format();
    if (fmt == Format::json) {
        Json basis = Json::array();
        for (const auto& g : G.basis) basis.push_back(to_json(g));
        std::cout << Json{{"ring", cfg.ring}, {"n", cfg.n},       {"k", cfg.k},
                          {"order", order_name(ord)}, {"size", G.basis.size()}, {"basis", basis}}
                         .dump(1)
                  << "\n";
    } else {
        for (const auto& g : G.basis)
            std::cout << (fmt == Format::csv ? csv_quote(g.str()) : g.str()) << "\n";
    }
    return 0;
}

int cmd_hilbert(const RunConfig& cfg) {
    QuotientRing Q = ring_for(cfg);
    Format fmt = cfg.format();
    if (fmt == Format::json)
        std::cout << Json{{"ring", cfg.ring},
                          {"n", cfg.n},
                          {"k", cfg.k},
                          {"dimension", Q.dimension()},
                          {"coeffs", to_json(Q.hilbert)},
                          {"text", Q.hilbert.str()}}
                         .dump(1)
                  << "\n";
    else if (fmt == Format::csv)
        std::cout << cfg.n << "," << cfg.k << "," << qpoly_csv(Q.hilbert) << "\n";
    else
        std::cout << Q.hilbert.str() << "\n";
    return 0;
}

int cmd_frobenius(const RunConfig& cfg) {
    QuotientRing Q = ring_for(cfg);
    SchurSymmetricFunction F = graded_frobenius(Q);
    Format fmt = cfg.format();
    if (fmt == Format::json)
        std::cout << Json{{"ring", cfg.ring}, {"n", cfg.n}, {"k", cfg.k},
                          {"frobenius", to_json(F)}, {"text", F.str()}}
                         .dump(1)
                  << "\n";
    else if (fmt == Format::csv) {
        std::cout << "lambda,coeffs\n";
        for (const auto& [lam, c] : F.terms())
            std::cout << csv_quote(lam.str()) << "," << csv_quote(qpoly_csv(c)) << "\n";
    } else
        std::cout << F.str() << "\n";
    return 0;
}

int cmd_cfunction(const RunConfig& cfg) {
    cfg.check_nk();
    ShapeConvention conv = convention_for(cfg);
    SchurSymmetricFunction C = c_function(cfg.n, cfg.k, conv);
    Format fmt = cfg.format();
    const char* conv_name = conv == ShapeConvention::shape ? "shape" : "conjugate-shape";
    if (fmt == Format::json)
        std::cout << Json{{"n", cfg.n}, {"k", cfg.k}, {"convention", conv_name},
                          {"cfunction", to_json(C)}, {"text", C.str()}}
                         .dump(1)
                  << "\n";
    else if (fmt == Format::csv) {
        std::cout << "lambda,coeffs\n";
        for (const auto& [lam, c] : C.terms())
            std::cout << csv_quote(lam.str()) << "," << csv_quote(qpoly_csv(c)) << "\n";
    } else
        std::cout << C.str() << "\n";
    return 0;
}

// ---- verify ----------------------------------------------------------

VerifyReport verify_bijection_case(int n, int k) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.theorem = "2.2/3.2";
    rep.n = n;
    rep.k = k;
    bool ok = true;
    std::set<std::vector<int>> boosted_codes, plain_codes;
    for (const auto& w : enumerate_packed_words(n, 1)) {
        OrderedSetPartition s = word_to_osp(w);
        if (s.block_count() >= k) {
            CodeSequence bc = boosted_code(s);
            boosted_codes.insert(bc.entries);
            if (!(insert_from_boosted(bc) == s)) ok = false;
            auto [plain, cnt] = unboost(bc);
            if (!(plain == coinversion_code(s)) || cnt != s.block_count()) ok = false;
        }
        if (s.block_count() == k) {
            CodeSequence pc = coinversion_code(s);
            plain_codes.insert(pc.entries);
            if (!(insert_from_code(pc, k) == s)) ok = false;
        }
    }
    bool characterized = n <= 5;
    if (characterized) {
        std::set<std::vector<int>> bp, pp;
        std::vector<int> c(n, 0);
        while (true) {
            if (is_valid_boosted_code(c, n, k)) bp.insert(c);
            if (is_valid_code(c, n, k)) pp.insert(c);
            int i = n - 1;
            while (i >= 0 && c[i] == n - 1) { c[i] = 0; --i; }
            if (i < 0) break;
            ++c[i];
        }
        if (bp != boosted_codes || pp != plain_codes) ok = false;
    }
    rep.pass = ok;
    rep.details = Json{{"boosted_codes", boosted_codes.size()},
                       {"plain_codes", plain_codes.size()},
                       {"characterization_checked", characterized}};
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

VerifyReport verify_dimension_case(int n, GroebnerCache* cache) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.theorem = "4.2-dimension";
    rep.n = n;
    rep.k = 1;
    long long fub = 1;
    {
        std::vector<long long> F(n + 1, 0);
        F[0] = 1;
        for (int m = 1; m <= n; ++m) {
            long long binom = 1;
            for (int i = 1; i <= m; ++i) {
                binom = binom * (m - i + 1) / i;
                F[m] += binom * F[m - i];
            }
        }
        fub = F[n];
    }
    QuotientRing S = quotient_S(n, 1, cache);
    rep.pass = static_cast<long long>(S.dimension()) == fub;
    rep.details = Json{{"dimension", S.dimension()}, {"fubini", fub}};
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

VerifyReport verify_standard_monomials_case(int n, int k, GroebnerCache* cache) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.theorem = "4.3";
    rep.n = n;
    rep.k = k;
    std::set<Exponents> codes;
    for (const auto& w : enumerate_packed_words(n, k)) {
        const auto& e = boosted_code(word_to_osp(w)).entries;
        codes.insert(Exponents(e.begin(), e.end()));
    }
    QuotientRing S = quotient_S(n, k, cache);
    std::set<Exponents> std_set;
    for (const auto& m : S.std_monomials.all()) std_set.insert(m);
    rep.pass = std_set == codes;
    rep.details = Json{{"standard_monomials", std_set.size()}, {"boosted_codes", codes.size()}};
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rep;
}

VerifyReport verify_hilbert_case(int n, int k, GroebnerCache* cache) {
    VerifyReport rep = verify_decomposition(n, k, cache);
    if (k == n) {
        bool factorial_ok = quotient_R(n, n, cache).hilbert == q_factorial(n);
        rep.pass = rep.pass && factorial_ok;
        rep.details["q_factorial_at_k_equals_n"] = factorial_ok;
    }
    return rep;
}

struct SuitePlan {
    std::string name;
    int default_nmax;
};

int cmd_verify(const RunConfig& cfg) {
    static const std::vector<SuitePlan> plans = {
        {"bijection", 6},       {"dimension", 5},      {"standard-monomials", 5},
        {"hilbert-decomposition", 5}, {"orbit-harmonics", 4}, {"frobenius", 4},
        {"ungraded", 4}};
    std::vector<std::string> chosen;
    if (cfg.suite == "all") {
        for (const auto& p : plans) chosen.push_back(p.name);
    } else {
        bool known = false;
        for (const auto& p : plans) known = known || p.name == cfg.suite;
        if (!known) throw CLI::ValidationError("unknown suite '" + cfg.suite + "'");
        chosen.push_back(cfg.suite);
    }

    GroebnerCache* cache = &cache_for(cfg);
    std::string convention = "n/a";
    bool needs_frobenius = false;
    for (const auto& s : chosen) needs_frobenius = needs_frobenius || s == "frobenius";
    if (needs_frobenius)
        convention =
            convention_for(cfg) == ShapeConvention::shape ? "shape" : "conjugate-shape";

    if (!cfg.alpha_arg.empty()) {
        std::vector<Rational> alpha = cfg.alpha(1);
        for (size_t a = 0; a < alpha.size(); ++a)
            for (size_t b = a + 1; b < alpha.size(); ++b)
                if (alpha[a] == alpha[b])
                    throw CLI::ValidationError("--alpha entries must be distinct");
        int needed = 0;
        for (const auto& s : chosen)
            if (s == "orbit-harmonics")
                needed = std::min(cfg.n_max > 0 ? cfg.n_max : 4, cfg.max_n);
        if (static_cast<int>(alpha.size()) < needed)
            throw CLI::ValidationError("--alpha needs at least one value per variable");
    }

    // expand the work list
    std::vector<std::function<VerifyReport()>> tasks;
    std::vector<std::string> suite_of;
    for (const auto& suite : chosen) {
        int nmax = cfg.n_max > 0 ? cfg.n_max : 0;
        for (const auto& p : plans)
            if (p.name == suite && nmax == 0) nmax = p.default_nmax;
        nmax = std::min(nmax, cfg.max_n);
        for (int n = 1; n <= nmax; ++n) {
            int kmax = suite == "dimension" ? 1 : n;
            for (int k = 1; k <= kmax; ++k) {
                if (suite == "bijection")
                    tasks.push_back([n, k] { return verify_bijection_case(n, k); });
                else if (suite == "dimension")
                    tasks.push_back([n, cache] { return verify_dimension_case(n, cache); });
                else if (suite == "standard-monomials")
                    tasks.push_back(
                        [n, k, cache] { return verify_standard_monomials_case(n, k, cache); });
                else if (suite == "hilbert-decomposition")
                    tasks.push_back([n, k, cache] { return verify_hilbert_case(n, k, cache); });
                else if (suite == "orbit-harmonics")
                    tasks.push_back([n, k, cache, &cfg] {
                        return verify_orbit_harmonics(n, k, cfg.alpha(n), cache);
                    });
                else if (suite == "frobenius")
                    tasks.push_back(
                        [n, k, cache] { return verify_frobenius_formula(n, k, cache); });
                else if (suite == "ungraded")
                    tasks.push_back([n, k, cache] { return verify_ungraded(n, k, cache); });
                suite_of.push_back(suite);
            }
        }
    }

    std::vector<VerifyReport> reports(tasks.size());
    int jobs = std::max(1, cfg.jobs);
    std::atomic<size_t> next{0};
    std::atomic<bool> internal_error{false};
    std::string internal_message;
    std::mutex err_mu;
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                reports[i] = tasks[i]();
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(err_mu);
                internal_error = true;
                internal_message = e.what();
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (internal_error) {
        std::cerr << "internal error: " << internal_message << "\n";
        return 3;
    }

    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.pass;

    Format fmt = cfg.format();
    if (fmt == Format::json) {
        Json out;
        out["convention"] = convention;
        out["suites"] = chosen;
        Json arr = Json::array();
        for (size_t i = 0; i < reports.size(); ++i) {
            Json j = reports[i].to_json();
            j["suite"] = suite_of[i];
            arr.push_back(std::move(j));
        }
        out["reports"] = arr;
        out["pass"] = all_pass;
        std::cout << out.dump(1) << "\n";
    } else if (fmt == Format::csv) {
        std::cout << "suite,theorem,n,k,pass,elapsed_ms\n";
        for (size_t i = 0; i < reports.size(); ++i)
            std::cout << suite_of[i] << "," << reports[i].theorem << "," << reports[i].n << ","
                      << reports[i].k << "," << (reports[i].pass ? "true" : "false") << ","
                      << reports[i].elapsed_ms << "\n";
    } else {
        for (size_t i = 0; i < reports.size(); ++i)
            std::cout << (reports[i].pass ? "[PASS] " : "[FAIL] ") << suite_of[i] << " n="
                      << reports[i].n << " k=" << reports[i].k << " (" << reports[i].elapsed_ms
                      << " ms)\n";
        std::cout << (all_pass ? "all cases passed" : "some cases FAILED") << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"packed-word quotient ring calculator"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", cfg.format_arg, "json, csv or text");
        cmd->add_option("--cache-dir", cfg.cache_dir,
                        "Groebner cache directory (or PWQ_CACHE_DIR)");
        cmd->add_option("--max-n", cfg.max_n, "configured ceiling for n");
    };

    CLI::App* enumerate = app.add_subcommand("enumerate", "list W_{n,k} with codes");
    enumerate->add_option("--n", cfg.n)->required();
    enumerate->add_option("--k", cfg.k)->required();
    add_common(enumerate);

    CLI::App* groebner_cmd = app.add_subcommand("groebner", "reduced Groebner basis");
    groebner_cmd->add_option("--ring", cfg.ring, "S (ideal J) or R (ideal I)");
    groebner_cmd->add_option("--n", cfg.n)->required();
    groebner_cmd->add_option("--k", cfg.k)->required();
    groebner_cmd->add_option("--order", cfg.order_arg, "lex or grlex");
    add_common(groebner_cmd);

    CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert series of S or R");
    hilbert->add_option("--ring", cfg.ring);
    hilbert->add_option("--n", cfg.n)->required();
    hilbert->add_option("--k", cfg.k)->required();
    add_common(hilbert);

    CLI::App* frobenius = app.add_subcommand("frobenius", "graded Frobenius image");
    frobenius->add_option("--ring", cfg.ring);
    frobenius->add_option("--n", cfg.n)->required();
    frobenius->add_option("--k", cfg.k)->required();
    add_common(frobenius);

    CLI::App* cfunction = app.add_subcommand("cfunction", "C_{n,k} in the Schur basis");
    cfunction->add_option("--n", cfg.n)->required();
    cfunction->add_option("--k", cfg.k)->required();
    cfunction->add_option("--convention", cfg.convention_arg,
                          "auto, shape or conjugate-shape");
    add_common(cfunction);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", cfg.suite,
                       "bijection, dimension, standard-monomials, hilbert-decomposition, "
                       "orbit-harmonics, frobenius, ungraded, all");
    verify->add_option("--n-max", cfg.n_max, "case bound (per-suite default)");
    verify->add_option("--alpha", cfg.alpha_arg, "comma-separated rationals");
    verify->add_option("--jobs", cfg.jobs, "worker pool width");
    verify->add_option("--convention", cfg.convention_arg);
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*enumerate) return cmd_enumerate(cfg);
        if (*groebner_cmd) return cmd_groebner(cfg);
        if (*hilbert) return cmd_hilbert(cfg);
        if (*frobenius) return cmd_frobenius(cfg);
        if (*cfunction) return cmd_cfunction(cfg);
        if (*verify) return cmd_verify(cfg);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
