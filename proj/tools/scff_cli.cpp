// scff: Shanks simple cubic function field computations over F_q(t).
#include "scff/search.hpp"

#include "scff/errors.hpp"

#include <CLI11.hpp>

#include <cinttypes>
#include <cstdio>
#include <thread>

namespace {

using namespace scff;

struct Common {
    uint32_t q = 5;
    uint64_t seed = kDefaultFactorSeed;
    int threads = static_cast<int>(std::thread::hardware_concurrency());
    char sep = '\t';
};

std::string fmt_measure(double m) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5f", m);
    return buf;
}

void print_invariants(const ShanksField& f, char sep) {
    auto line = [&](const char* k, const std::string& v) { std::printf("%s%c%s\n", k, sep, v.c_str()); };
    line("q", std::to_string(f.q));
    line("A", f.A.str());
    line("cube_free", f.cube_free ? "true" : "false");
    line("I", f.index.str());
    line("deg_I", std::to_string(f.deg_index()));
    line("genus", std::to_string(f.genus));
    if (f.regulator)
        line("R", std::to_string(*f.regulator));
    else {
        RegulatorBounds rb = regulator_bounds(f);
        std::string cands;
        for (int64_t r : rb.candidates) cands += (cands.empty() ? "" : ",") + std::to_string(r);
        line("R_interval", "[" + std::to_string((rb.deg_disc_K * rb.deg_disc_K + 15) / 16) + "," +
                               std::to_string(rb.upper) + "]");
        line("R_candidates", cands);
    }
    line("signature", kSignature);
    line("D_K", "(" + f.disc_K_base.str() + ")^2");
    line("basis_denominator", f.index.str());
    if (f.frobenius_power) {
        line("frobenius_power", "true");
        line("canonical_A", f.canonical_A.str());
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Shanks simple cubic function fields over F_q(t): invariants, prime splitting, "
                 "class numbers (exact oracle and truncated Euler product), surveys"};
    app.require_subcommand(1);

    Common c;
    std::string A_str, P_str, out_fmt = "tsv";
    uint64_t trunc = 0;
    int lambda = 0, deg_a = 0;
    int deg_i = -1;
    bool full_depth = false;

    auto add_common = [&](CLI::App* cmd, bool needs_A) {
        cmd->add_option("--q", c.q, "field size (odd prime >= 5)")->required();
        if (needs_A) cmd->add_option("--A", A_str, "Shanks parameter A, e.g. \"t^2+3t+1\"")->required();
        cmd->add_option("--seed", c.seed, "factorization seed");
        cmd->add_option("--threads", c.threads, "worker threads");
        cmd->add_option("--out", out_fmt, "tsv|csv")->check(CLI::IsMember({"tsv", "csv"}));
    };

    CLI::App* inv = app.add_subcommand("invariants", "index, genus, regulator, discriminant, signature");
    add_common(inv, true);

    CLI::App* psig = app.add_subcommand("psig", "P-signature of a finite prime");
    add_common(psig, true);
    psig->add_option("--P", P_str, "monic irreducible prime")->required();

    CLI::App* census = app.add_subcommand("census", "split/inert/ramified counts up to a truncation");
    add_common(census, true);
    auto* ct = census->add_option("--trunc", trunc, "number of primes");
    auto* cl = census->add_option("--lambda", lambda, "all primes of degree <= lambda");
    ct->excludes(cl);
    cl->excludes(ct);

    CLI::App* classno = app.add_subcommand("classno", "truncated Euler-product class number estimate");
    add_common(classno, true);
    auto* kt = classno->add_option("--trunc", trunc, "number of primes");
    auto* kl = classno->add_option("--lambda", lambda, "all primes of degree <= lambda");
    kt->excludes(kl);
    kl->excludes(kt);

    CLI::App* exact = app.add_subcommand("exact", "exact L-polynomial class number (genus <= 8)");
    add_common(exact, true);

    CLI::App* surv = app.add_subcommand("survey", "table of h', splitting counts, max measure");
    add_common(surv, false);
    surv->add_option("--deg-a", deg_a, "deg(A)")->required();
    surv->add_option("--deg-i", deg_i, "restrict to deg(I)");
    surv->add_option("--trunc", trunc, "number of primes (default per degree)");

    CLI::App* h1 = app.add_subcommand("search-h1", "all fields with ideal class number one");
    add_common(h1, false);
    h1->add_flag("--full-depth", full_depth, "q=5: run the deg(A) <= 13 enumeration");

    CLI::App* li = app.add_subcommand("large-index", "non-cube-free scan: reduction, regulator candidates");
    add_common(li, false);
    li->add_option("--deg-a", deg_a, "deg(A)")->required();

    CLI::App* cp = app.add_subcommand("classify-params", "(c,k,n) with square discriminant quartic");
    cp->add_option("--q", c.q, "field size (odd prime >= 5)")->required();
    cp->add_option("--out", out_fmt, "tsv|csv")->check(CLI::IsMember({"tsv", "csv"}));

    CLI::App* canon = app.add_subcommand("canon", "canonical parameter (Frobenius root, sign class)");
    add_common(canon, true);

    CLI11_PARSE(app, argc, argv);
    c.sep = out_fmt == "csv" ? ',' : '\t';
    if (c.threads < 1) c.threads = 1;
    int exit_code = 0;

    if (inv->parsed()) {
        print_invariants(build_field(c.q, Poly::parse(A_str, c.q), c.seed), c.sep);
    } else if (psig->parsed()) {
        ShanksField f = build_field(c.q, Poly::parse(A_str, c.q), c.seed);
        Poly P = Poly::parse(P_str, c.q);
        SplitType st = p_signature(f, P);
        std::printf("%u%c%s%c%s%c%s%c%s\n", c.q, c.sep, f.A.str().c_str(), c.sep, P.str().c_str(), c.sep, st.name(),
                    c.sep, st.signature());
    } else if (census->parsed()) {
        ShanksField f = build_field(c.q, Poly::parse(A_str, c.q), c.seed);
        IrreducibleTable table(c.q);
        Truncation tr = lambda > 0 ? Truncation::degree(lambda) : Truncation::count(trunc ? trunc : 40000);
        Census cs = splitting_census(f, table, tr, c.threads);
        std::printf("%u%c%s%c%" PRIu64 "%c%" PRIu64 "%c%" PRIu64 "%c%" PRIu64 "\n", c.q, c.sep, f.A.str().c_str(),
                    c.sep, cs.used, c.sep, cs.split, c.sep, cs.inert, c.sep, cs.ramified);
    } else if (classno->parsed()) {
        ShanksField f = build_field(c.q, Poly::parse(A_str, c.q), c.seed);
        IrreducibleTable table(c.q);
        uint64_t n = trunc;
        if (lambda > 0) n = table.count_up_to_degree(lambda);
        if (!n) n = default_truncation(c.q, f.deg_A());
        HApprox ha = truncated_estimate(f, table, n, c.threads);
        std::printf("%u%c%s%c%d%c%d%c%" PRId64 "%c%d%c%" PRIu64 "%c%.10Lg%c%.6e%c%" PRId64 "%c%" PRId64 "%c%" PRId64
                    "\n",
                    c.q, c.sep, f.A.str().c_str(), c.sep, f.genus, c.sep, f.deg_index(), c.sep,
                    f.regulator.value_or(f.regulator_upper), c.sep, ha.lambda, c.sep, ha.truncation, c.sep, ha.Eprime,
                    c.sep, ha.psi, c.sep, ha.E, c.sep, ha.L, c.sep, ha.hprime_estimate);
    } else if (exact->parsed()) {
        ShanksField f = build_field(c.q, Poly::parse(A_str, c.q), c.seed);
        IrreducibleTable table(c.q);
        LPolynomial L = exact_l_polynomial(f, table, !f.cube_free, c.threads);
        std::string coeffs;
        for (int64_t a : L.a) coeffs += (coeffs.empty() ? "" : ",") + std::to_string(a);
        std::string hp = f.regulator ? std::to_string(class_number_relation(L.h, *f.regulator)) : "-";
        std::printf("%u%c%s%c%d%c%s%c%" PRId64 "%c%s\n", c.q, c.sep, f.A.str().c_str(), c.sep, L.g, c.sep,
                    coeffs.c_str(), c.sep, L.h, c.sep, hp.c_str());
    } else if (surv->parsed()) {
        SearchPlan plan;
        plan.q = c.q;
        plan.deg_min = plan.deg_max = deg_a;
        if (deg_i >= 0) plan.deg_index = deg_i;
        if (trunc) plan.truncation = trunc;
        plan.threads = c.threads;
        plan.seed = c.seed;
        IrreducibleTable table(c.q);
        for (const SurveyRow& r : survey(plan, table)) {
            if (!r.error.empty()) {
                if (r.error.rfind("skipped:", 0) != 0) {
                    std::fprintf(stderr, "%s: %s\n", r.A.str().c_str(), r.error.c_str());
                    exit_code = 2;
                }
                continue;
            }
            std::printf("%u%c%s%c%" PRId64 "%c%" PRIu64 "%c%" PRIu64 "%c%s\n", c.q, c.sep, r.A.str().c_str(), c.sep,
                        r.hprime, c.sep, r.split, c.sep, r.inert, c.sep, fmt_measure(r.measure).c_str());
        }
    } else if (h1->parsed()) {
        IrreducibleTable table(c.q);
        ClassNumberOneResult res = search_class_number_one(c.q, table, full_depth, c.threads, c.seed);
        std::fprintf(stderr, "deg(A)=1: class number 1 (genus 0), all %u parameters\n", c.q - 1);
        if (res.hw_cutoff_deg)
            std::fprintf(stderr, "Hasse-Weil cutoff: no candidates beyond deg(A)=%d\n", res.hw_cutoff_deg - 1);
        for (size_t i = 0; i < res.fields.size(); ++i)
            std::printf("%u%c%d%c%s\n", c.q, c.sep, res.deg_index[i], c.sep, res.fields[i].str().c_str());
        for (const Poly& A : res.unresolved) {
            std::fprintf(stderr, "unresolved (beyond oracle cap): %s\n", A.str().c_str());
            exit_code = 2;
        }
    } else if (li->parsed()) {
        IrreducibleTable table(c.q);
        for (const LargeIndexRow& r : large_index_scan(c.q, deg_a, table, c.threads, c.seed)) {
            if (!r.error.empty()) {
                std::fprintf(stderr, "%s: %s\n", r.A.str().c_str(), r.error.c_str());
                exit_code = 2;
                continue;
            }
            std::string cands;
            for (const RegulatorCandidate& rc : r.candidates) {
                if (!cands.empty()) cands += ";";
                cands += "R=" + std::to_string(rc.R) + ":h'=" + std::to_string(rc.hprime) +
                         ":normform=" + (rc.norm_form_ok ? "1" : "0");
            }
            std::printf("%u%c%s%c%d%c%d%c%" PRId64 "%c%s\n", c.q, c.sep, r.A.str().c_str(), c.sep, r.deg_index, c.sep,
                        r.g, c.sep, r.h, c.sep, cands.c_str());
        }
    } else if (cp->parsed()) {
        for (const auto& [cc, k, n] : classify_parameters(c.q)) std::printf("%u%c%u%c%u\n", cc, c.sep, k, c.sep, n);
    } else if (canon->parsed()) {
        Poly A = Poly::parse(A_str, c.q);
        std::printf("%s%c%s%c%s%c%s\n", A.str().c_str(), c.sep, frobenius_canonical(A).str().c_str(), c.sep,
                    is_frobenius_power(A) ? "frobenius_power" : "canonical", c.sep, sign_canonical(A).str().c_str());
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const scff::InconsistencyError& e) {
        std::fprintf(stderr, "inconsistency: %s\n", e.what());
        return 2;
    } catch (const scff::ClassificationGapError& e) {
        std::fprintf(stderr, "classification gap: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
