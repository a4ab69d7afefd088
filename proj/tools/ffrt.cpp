// ffrt: catalogs and brute-force verification of Frobenius summand
// decompositions for Pluecker coordinate rings of Gr(2,n).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffrt/fp_linear.hpp"
#include "ffrt/report.hpp"
#include "ffrt/sl2_characters.hpp"
#include "ffrt/summand_catalog.hpp"
#include "ffrt/verifier.hpp"

namespace {

struct Options {
    int n = 4;
    long long p = 3;
    int r = 1;
    int j = 1;
    int k = 1;
    long long a = 0, b = 0, l = 0;
    std::string indices;
    int max_degree = 12;
    int threads = 0;
    std::string format = "text";
    std::string output;
    std::string config;
    bool allow_small_p = false;

    // which flags were set on the command line
    std::map<std::string, bool> set;
};

std::map<std::string, std::string> load_config(const std::string& path) {
    std::map<std::string, std::string> kv;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t");
            size_t e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (!key.empty()) kv[key] = val;
    }
    return kv;
}

// precedence: flags > config file > defaults; FFRT_THREADS overrides the
// thread count unless --threads was given explicitly
void apply_config(Options& o) {
    if (!o.config.empty()) {
        auto kv = load_config(o.config);
        auto get = [&](const char* key, auto& slot) {
            if (o.set[key]) return;
            auto it = kv.find(key);
            if (it == kv.end()) return;
            std::istringstream is(it->second);
            is >> slot;
        };
        get("n", o.n);
        get("p", o.p);
        get("r", o.r);
        get("j", o.j);
        get("k", o.k);
        get("max_degree", o.max_degree);
        get("threads", o.threads);
        get("format", o.format);
        get("output", o.output);
    }
    if (!o.set["threads"]) {
        if (const char* env = std::getenv("FFRT_THREADS")) {
            std::istringstream is(env);
            int t = 0;
            if (is >> t && t > 0) o.threads = t;
        }
    }
}

int write_output(const Options& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(o.output);
    if (!out) {
        std::cerr << "error: cannot write output path: " << o.output << "\n";
        return 1;
    }
    out << text;
    return out ? 0 : 1;
}

ffrt::ReportFormat format_of(const Options& o) {
    if (o.format == "json") return ffrt::ReportFormat::Json;
    if (o.format == "text") return ffrt::ReportFormat::Text;
    throw std::runtime_error("unknown format: " + o.format);
}

void check_hypotheses(const Options& o) {
    if (!o.allow_small_p) {
        ffrt::require_hypotheses(o.n, o.p);
    } else if (!ffrt::is_prime(o.p)) {
        throw std::invalid_argument("hypothesis violated: p prime");
    }
}

std::string tilting_multiset_text(const ffrt::TiltingMultiset& t, const char* letter) {
    if (t.mult.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t.mult.rbegin(); it != t.mult.rend(); ++it) {
        if (!first) os << " + ";
        if (it->second != 1) os << it->second << "*";
        os << letter << "(" << it->first << ")";
        first = false;
    }
    return os.str();
}

void add_common(CLI::App* cmd, Options& o, bool with_output = true) {
    auto track = [&o](const std::string& name) {
        return [&o, name](auto) { o.set[name] = true; };
    };
    cmd->add_option_function<std::string>("--config", [&o](const std::string& v) { o.config = v; },
                                          "key = value configuration file");
    cmd->add_option("--threads", o.threads, "worker thread count (0 = all cores)")
        ->each(track("threads"));
    if (with_output) {
        cmd->add_option("--format", o.format, "text or json")->each(track("format"));
        cmd->add_option("--output", o.output, "write the report to this path")
            ->each(track("output"));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Frobenius-summand catalogs for Gr(2,n) coordinate rings"};
    app.require_subcommand(1);
    Options o;

    auto track = [&o](const std::string& name) {
        return [&o, name](auto) { o.set[name] = true; };
    };
    auto add_np = [&](CLI::App* cmd, bool with_r) {
        cmd->add_option("--n", o.n, "number of rows of the Grassmannian Gr(2,n)")->each(track("n"));
        cmd->add_option("--p", o.p, "prime characteristic")->each(track("p"));
        if (with_r) cmd->add_option("--r", o.r, "Frobenius level")->each(track("r"));
        cmd->add_flag("--allow-small-p", o.allow_small_p,
                      "accept p below max{n-2,3}; catalogs are marked outside hypotheses");
    };

    // catalog
    CLI::App* cat = app.add_subcommand("catalog", "print a summand catalog");
    cat->require_subcommand(1);
    CLI::App* cat_s = cat->add_subcommand("s-invariants", "summands of S^{G_r}");
    CLI::App* cat_r = cat->add_subcommand("r-module", "summands of R over R^{p^r}");
    CLI::App* cat_push = cat->add_subcommand("pushforward", "sheaf pushforward catalog");
    for (CLI::App* c : {cat_s, cat_r, cat_push}) {
        add_np(c, true);
        add_common(c, o);
    }

    // decompose
    CLI::App* dec = app.add_subcommand("decompose", "catalog of a kernel-invariant module");
    dec->require_subcommand(1);
    CLI::App* dec_tjs = dec->add_subcommand("tjs", "(T(j) (x) S)^{G_1}");
    dec_tjs->add_option("--j", o.j, "tilting highest weight")->each(track("j"));
    CLI::App* dec_kjk = dec->add_subcommand("kjk", "K_{jk}^{G_1}");
    dec_kjk->add_option("--j", o.j, "first syzygy index")->each(track("j"));
    dec_kjk->add_option("--k", o.k, "second syzygy index")->each(track("k"));
    for (CLI::App* c : {dec_tjs, dec_kjk}) {
        add_np(c, false);
        add_common(c, o);
    }

    // tilting calculus
    CLI::App* tilt = app.add_subcommand("tilting", "tilting character calculus");
    tilt->require_subcommand(1);
    CLI::App* t_prod = tilt->add_subcommand("product", "decompose T(a) (x) T(b)");
    t_prod->add_option("--a", o.a)->required();
    t_prod->add_option("--b", o.b)->required();
    CLI::App* t_pieri = tilt->add_subcommand("pieri", "closed form of T(a) (x) T(1)");
    t_pieri->add_option("--a", o.a)->required();
    CLI::App* t_fus = tilt->add_subcommand("fusion", "fusion product of simples");
    t_fus->add_option("--indices", o.indices, "comma separated simple indices")->required();
    CLI::App* t_g1 = tilt->add_subcommand("g1inv", "G_1-invariants of T(l)");
    t_g1->add_option("--l", o.l)->required();
    for (CLI::App* c : {t_prod, t_pieri, t_fus, t_g1}) {
        c->add_option("--p", o.p, "prime characteristic")->each(track("p"));
        add_common(c, o);
    }

    // verify
    CLI::App* ver = app.add_subcommand("verify", "oracle verification of a catalog");
    ver->require_subcommand(1);
    CLI::App* v_s = ver->add_subcommand("s-invariants", "S^{G_r} against the brute-force oracle");
    CLI::App* v_tjs = ver->add_subcommand("tjs", "(T(j) (x) S)^{G_1} against the oracle");
    CLI::App* v_kjk = ver->add_subcommand("kjk", "K_{jk}^{G_1} against the oracle");
    CLI::App* v_b1 = ver->add_subcommand("b1-predictor", "cohomology predictor against the oracle");
    int lmax = 3;
    for (CLI::App* c : {v_s, v_tjs, v_kjk, v_b1}) {
        add_np(c, c == v_s);
        c->add_option("--j", o.j, "j index")->each(track("j"));
        c->add_option("--k", o.k, "k index")->each(track("k"));
        c->add_option("--max-degree", o.max_degree, "truncation degree D")->each(track("max_degree"));
        add_common(c, o);
    }
    v_b1->add_option("--lmax", lmax, "compare H^l for l = 1..lmax");

    // limit
    CLI::App* lim = app.add_subcommand("limit", "limiting tilt-free support interval");
    add_np(lim, false);
    lim->add_option("--j", o.j)->each(track("j"));
    add_common(lim, o);

    CLI11_PARSE(app, argc, argv);

    try {
        apply_config(o);
        ffrt::ReportFormat fmt = format_of(o);
        std::vector<std::string> notes;
        if (o.allow_small_p && o.p < std::max<long long>(o.n - 2, 3))
            notes.push_back("outside the standing hypothesis p >= max{n-2,3}");

        if (cat_s->parsed() || cat_r->parsed() || cat_push->parsed()) {
            check_hypotheses(o);
            std::vector<ffrt::SummandInstance> entries;
            std::string name;
            if (cat_s->parsed()) {
                entries = ffrt::catalog_S_Gr(o.n, o.p, o.r, !o.allow_small_p);
                name = "catalog-s-invariants";
            } else if (cat_r->parsed()) {
                entries = ffrt::catalog_R(o.n, o.p, o.r, !o.allow_small_p);
                name = "catalog-r-module";
            } else {
                entries = ffrt::pushforward_catalog(o.n, o.p, o.r, !o.allow_small_p);
                name = "catalog-pushforward";
            }
            return write_output(o, ffrt::emit_catalog_report(name, entries, o.n, o.p, o.r, fmt, notes));
        }

        if (dec_tjs->parsed() || dec_kjk->parsed()) {
            check_hypotheses(o);
            ffrt::DecompositionReport rep =
                dec_tjs->parsed() ? ffrt::decompose_TjS_G1(o.n, o.p, o.j, !o.allow_small_p)
                                  : ffrt::decompose_Kjk_G1(o.n, o.p, o.j, o.k, !o.allow_small_p);
            for (const auto& note : rep.notes) notes.push_back(note);
            std::string name = dec_tjs->parsed() ? "decompose-tjs" : "decompose-kjk";
            return write_output(o, ffrt::emit_catalog_report(name, rep.catalog, o.n, o.p, 1, fmt, notes));
        }

        if (t_prod->parsed()) {
            ffrt::WeightCharacter c =
                ffrt::char_tilting(static_cast<int>(o.a), o.p) * ffrt::char_tilting(static_cast<int>(o.b), o.p);
            return write_output(o, tilting_multiset_text(ffrt::decompose_into_tiltings(c, o.p), "T") + "\n");
        }
        if (t_pieri->parsed()) {
            return write_output(o, tilting_multiset_text(ffrt::tilting_pieri(static_cast<int>(o.a), o.p), "T") + "\n");
        }
        if (t_fus->parsed()) {
            std::vector<int> idx;
            std::istringstream is(o.indices);
            std::string tok;
            while (std::getline(is, tok, ',')) idx.push_back(std::stoi(tok));
            auto fus = ffrt::fusion_product(idx, o.p);
            ffrt::TiltingMultiset t;
            t.mult = fus;
            return write_output(o, tilting_multiset_text(t, "L") + "\n");
        }
        if (t_g1->parsed()) {
            return write_output(o, tilting_multiset_text(ffrt::g1_invariants_tilting(o.l, o.p), "T") + "\n");
        }

        if (v_s->parsed() || v_tjs->parsed() || v_kjk->parsed() || v_b1->parsed()) {
            ffrt::require_hypotheses(o.n, o.p);
            ffrt::Scenario sc = ffrt::Scenario::S_Gr;
            if (v_tjs->parsed()) sc = ffrt::Scenario::TjS_G1;
            if (v_kjk->parsed()) sc = ffrt::Scenario::Kjk_G1;
            if (v_b1->parsed()) sc = ffrt::Scenario::B1_predictor;
            ffrt::VerifyParams params;
            params.n = o.n;
            params.p = o.p;
            params.r = o.r;
            params.j = o.j;
            params.k = o.k;
            params.D = o.max_degree;
            params.lmax = lmax;
            params.threads = o.threads;
            ffrt::VerifyReport rep = ffrt::verify_decomposition(sc, params);
            int rc = write_output(o, ffrt::emit_verify_report(rep, fmt));
            if (rc) return rc;
            return rep.consistent ? 0 : 2;
        }

        if (lim->parsed()) {
            check_hypotheses(o);
            ffrt::LimitResult res = ffrt::iterate_limit(o.n, o.p, o.j, !o.allow_small_p);
            std::ostringstream os;
            if (fmt == ffrt::ReportFormat::Json) {
                nlohmann::json out;
                out["interval"] = {res.lo, res.hi};
                out["iterations"] = res.iterations;
                os << out.dump(2) << "\n";
            } else {
                os << "limit interval [" << res.lo << ", " << res.hi << "], iterations "
                   << res.iterations << "\n";
            }
            return write_output(o, os.str());
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
