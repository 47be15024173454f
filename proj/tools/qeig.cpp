// Command-line surface: compute eigenmatrices of the four schemes, run the
// verification sweeps and lemma suites, cross-check formulas against
// brute-force schemes, and emit machine-readable reports.
//
// Exit codes: 0 = everything PASS/EXCLUDED/OBSERVED with no flagged
// findings; 1 = a FAIL or a flagged finding is present; 2 = usage error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qeig/oracle.hpp"
#include "qeig/terms.hpp"
#include "qeig/verify.hpp"

using namespace qeig;
using nlohmann::json;

namespace {

struct ParamFlags {
    long n = -1, d = -1, e = -1, q = -1;

    SchemeParams to_params(const std::string& family) const {
        Family f = family_from_name(family);
        SchemeParams p;
        switch (f) {
            case Family::Grassmann:
                if (n < 0 || d < 0 || q < 0)
                    throw CLI::ValidationError("grassmann requires --n, --d and --q");
                p = SchemeParams::grassmann(n, d, q);
                break;
            case Family::Bilinear:
                if (d < 0 || e < 0 || q < 0)
                    throw CLI::ValidationError("bilinear requires --d, --e and --q");
                p = SchemeParams::bilinear(d, e, q);
                break;
            case Family::Hermitian:
                if (d < 0 || q < 0) throw CLI::ValidationError("hermitian requires --d and --q");
                p = SchemeParams::hermitian(d, q);
                break;
            case Family::Hamming:
                if (d < 0 || q < 0) throw CLI::ValidationError("hamming requires --d and --q");
                p = SchemeParams::hamming(d, q);
                break;
        }
        p.validate();
        return p;
    }
};

void add_param_flags(CLI::App* cmd, ParamFlags& pf) {
    cmd->add_option("--n", pf.n, "ambient dimension n (grassmann)");
    cmd->add_option("--d", pf.d, "parameter d");
    cmd->add_option("--e", pf.e, "parameter e (bilinear)");
    cmd->add_option("--q", pf.q, "field/alphabet size q");
}

json eigenmatrix_json(const Eigenmatrix& m) {
    json rows = json::array();
    for (long i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (long j = 0; j < m.size(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    json p = {{"d", m.params.d}, {"q", m.params.q}};
    if (m.params.family == Family::Grassmann) p["n"] = m.params.n;
    if (m.params.family == Family::Bilinear) p["e"] = m.params.e;
    return {{"schema", "qeig-eigenmatrix/1"},
            {"family", family_name(m.params.family)},
            {"params", p},
            {"vertex_count", to_string(m.params.vertex_count())},
            {"rows", rows}};
}

std::string eigenmatrix_csv(const Eigenmatrix& m) {
    std::string out;
    for (long j = 0; j < m.size(); ++j) out += (j ? ",j" : "j") + std::to_string(j);
    out += "\n";
    for (long i = 0; i < m.size(); ++i) {
        for (long j = 0; j < m.size(); ++j) out += (j ? "," : "") + to_string(m.at(i, j));
        out += "\n";
    }
    return out;
}

void print_eigenmatrix_pretty(std::ostream& os, const Eigenmatrix& m) {
    os << "P matrix of " << m.params.describe() << "  (v = " << to_string(m.params.vertex_count())
       << ")\n";
    std::vector<std::size_t> width(m.size(), 1);
    for (long j = 0; j < m.size(); ++j)
        for (long i = 0; i < m.size(); ++i)
            width[j] = std::max(width[j], to_string(m.at(i, j)).size());
    for (long i = 0; i < m.size(); ++i) {
        for (long j = 0; j < m.size(); ++j) {
            std::string s = to_string(m.at(i, j));
            os << std::string(width[j] - s.size() + (j ? 2 : 0), ' ') << s;
        }
        os << "\n";
    }
}

void write_or_print(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
    } else {
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open output file " + path);
        out << content;
    }
}

int report_exit_code(const VerdictReport& r) { return (r.has_fail() || r.has_flagged()) ? 1 : 0; }

void emit_report(const VerdictReport& r, const std::string& format, const std::string& report_path,
                 const std::string& csv_path, int verbosity) {
    if (!report_path.empty()) write_or_print(report_path, report_to_json(r).dump(2) + "\n");
    if (!csv_path.empty()) write_or_print(csv_path, report_to_csv(r));

    if (format == "json") {
        std::cout << report_to_json(r).dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << report_to_csv(r);
        return;
    }
    std::cout << r.check << ": " << r.counts.total << " tuples | pass " << r.counts.pass
              << " | fail " << r.counts.fail << " | excluded " << r.counts.excluded
              << " | observed " << r.counts.observed << " | flagged " << r.counts.flagged << " ("
              << r.duration_ms << " ms)\n";
    for (const auto& t : r.tuples) {
        bool noteworthy = t.status == Status::Fail || t.flagged;
        if (!noteworthy && verbosity < 1) continue;
        std::cout << "  " << status_name(t.status) << (t.flagged ? "(flagged)" : "") << "  "
                  << t.key << (t.note.empty() ? "" : "  " + t.note) << "\n";
        if ((noteworthy || verbosity > 1) && !t.witness.empty())
            std::cout << "    witness: " << t.witness.dump() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact eigenvalue computations and verification sweeps for the Grassmann, "
                 "bilinear-forms, Hermitian-forms and Hamming association schemes"};
    app.require_subcommand(1);

    std::string format = "pretty", out_path, report_path, csv_path, checkpoint_path;
    int jobs = 1;
    // own counter per subcommand: CLI11 runs flag callbacks of unparsed
    // subcommands too, which would zero a shared one
    int vf_verbosity = 0, lc_verbosity = 0, sc_verbosity = 0;

    // --- eigenmatrix ---------------------------------------------------
    auto* em = app.add_subcommand("eigenmatrix", "print the (d+1)x(d+1) eigenmatrix P");
    std::string em_family;
    ParamFlags em_pf;
    em->add_option("family", em_family, "grassmann | bilinear | hermitian | hamming")->required();
    add_param_flags(em, em_pf);
    em->add_option("--format", format, "json | csv | pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty", "pretty-table"}));
    em->add_option("--out", out_path, "write to file instead of stdout");

    // --- verify ---------------------------------------------------------
    auto* vf = app.add_subcommand("verify", "run a verification sweep");
    std::string check_id;
    vf->add_option("check", check_id,
                   "grassmann-monotone | grassmann-exceptional | bilinear-min | hermitian-suite | "
                   "cross-check-forms")
        ->required();
    long q_min = -1, q_max = -1, d_min = -1, d_max = -1, n_span = -1, e_span = -1;
    long q_fix = -1, d_fix = -1, e_fix = -1;
    vf->add_option("--q-min", q_min);
    vf->add_option("--q-max", q_max);
    vf->add_option("--q", q_fix, "fix q (sets both bounds)");
    vf->add_option("--d-min", d_min);
    vf->add_option("--d-max", d_max);
    vf->add_option("--d", d_fix, "fix d (sets both bounds)");
    vf->add_option("--n-span", n_span, "n runs 2d .. 2d+n-span");
    vf->add_option("--e-span", e_span, "e runs d .. d+e-span");
    vf->add_option("--e", e_fix, "fix e (bilinear; requires --d)");
    vf->add_option("--jobs", jobs, "parallel workers");
    vf->add_option("--checkpoint", checkpoint_path, "line-delimited JSON checkpoint file");
    vf->add_option("--report", report_path, "write the JSON report here");
    vf->add_option("--csv", csv_path, "write the CSV table here");
    vf->add_flag("-v,--verbose", vf_verbosity, "print per-tuple lines (twice: include witnesses)");
    vf->add_option("--format", format, "stdout format: pretty | json | csv")
        ->check(CLI::IsMember({"json", "csv", "pretty", "pretty-table"}));

    // --- oracle-check ----------------------------------------------------
    auto* oc = app.add_subcommand("oracle-check",
                                  "build the scheme explicitly and validate the eigenmatrix");
    std::string oc_family;
    ParamFlags oc_pf;
    long spectrum_cap = kDefaultSpectrumCap;
    bool skip_spectrum = false, skip_connectivity = false;
    oc->add_option("family", oc_family, "grassmann | bilinear | hermitian | hamming")->required();
    add_param_flags(oc, oc_pf);
    std::string cache_path;
    oc->add_option("--spectrum-cap", spectrum_cap, "vertex cap for dense spectrum work");
    oc->add_flag("--skip-spectrum", skip_spectrum);
    oc->add_flag("--skip-connectivity", skip_connectivity);
    oc->add_option("--cache", cache_path,
                   "scheme cache file (loaded when present, else written after building)");
    oc->add_option("--format", format)->check(CLI::IsMember({"json", "pretty", "pretty-table"}));

    // --- lemma-check ------------------------------------------------------
    auto* lc = app.add_subcommand("lemma-check", "run a lemma bound suite");
    std::string lemma_id;
    LemmaGridOverrides over;
    long lc_q_min = -1, lc_q_max = -1, lc_d_max = -1, lc_n_span = -1, lc_e_span = -1, lc_m_max = -1,
         lc_count = -1;
    unsigned long lc_seed = 0;
    bool lc_seed_set = false;
    lc->add_option("lemma", lemma_id, "one of: gauss-bounds, alternating-series, ...")->required();
    lc->add_option("--q-min", lc_q_min);
    lc->add_option("--q-max", lc_q_max);
    lc->add_option("--d-max", lc_d_max);
    lc->add_option("--n-span", lc_n_span);
    lc->add_option("--e-span", lc_e_span);
    lc->add_option("--m-max", lc_m_max);
    lc->add_option("--count", lc_count, "random sequence count (alternating-series)");
    lc->add_option("--seed", lc_seed, "RNG seed (alternating-series)")
        ->each([&](const std::string&) { lc_seed_set = true; });
    lc->add_option("--jobs", jobs);
    lc->add_option("--checkpoint", checkpoint_path);
    lc->add_option("--report", report_path);
    lc->add_option("--csv", csv_path);
    lc->add_flag("-v,--verbose", lc_verbosity, "print per-tuple lines (twice: include witnesses)");
    lc->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "pretty", "pretty-table"}));

    // --- scan --------------------------------------------------------------
    auto* sc = app.add_subcommand("scan", "open-conjecture scans (report-only)");
    std::string scan_what;
    HammingGrid hg;
    sc->add_option("what", scan_what, "hamming")->required()->check(CLI::IsMember({"hamming"}));
    sc->add_option("--q-min", hg.q_min);
    sc->add_option("--q-max", hg.q_max);
    sc->add_option("--d-min", hg.d_min);
    sc->add_option("--d-max", hg.d_max);
    sc->add_option("--vertex-cap", hg.vertex_cap);
    sc->add_option("--conn-work-cap", hg.conn_work_cap);
    sc->add_option("--jobs", jobs);
    sc->add_option("--checkpoint", checkpoint_path);
    sc->add_option("--report", report_path);
    sc->add_option("--csv", csv_path);
    sc->add_flag("-v,--verbose", sc_verbosity, "print per-tuple lines (twice: include witnesses)");
    sc->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "pretty", "pretty-table"}));

    // --- decompose -----------------------------------------------------------
    auto* dc = app.add_subcommand("decompose", "print the term decomposition of one eigenvalue");
    std::string dc_family;
    ParamFlags dc_pf;
    long dc_i = -1, dc_j = -1;
    dc->add_option("family", dc_family, "grassmann | bilinear | hermitian")->required();
    add_param_flags(dc, dc_pf);
    dc->add_option("--i", dc_i, "eigenspace index")->required();
    dc->add_option("--j", dc_j, "distance index")->required();
    dc->add_option("--format", format)->check(CLI::IsMember({"json", "pretty", "pretty-table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (em->parsed()) {
            Eigenmatrix m = eigenmatrix(em_pf.to_params(em_family));
            if (format == "json")
                write_or_print(out_path, eigenmatrix_json(m).dump(2) + "\n");
            else if (format == "csv")
                write_or_print(out_path, eigenmatrix_csv(m));
            else if (out_path.empty())
                print_eigenmatrix_pretty(std::cout, m);
            else {
                std::ofstream f(out_path);
                print_eigenmatrix_pretty(f, m);
            }
            return 0;
        }

        SweepOptions sweep_opt;
        sweep_opt.checkpoint_path = checkpoint_path;
        sweep_opt.jobs = jobs;

        if (vf->parsed()) {
            if (q_fix > 0) q_min = q_max = q_fix;
            if (d_fix > 0) d_min = d_max = d_fix;
            if (e_fix > 0) {
                if (d_fix <= 0 || e_fix < d_fix)
                    throw CLI::ValidationError("--e requires --d with e >= d");
                e_span = e_fix - d_fix;
            }
            auto apply_qd = [&](long& gq_min, long& gq_max, long& gd_min, long& gd_max) {
                if (q_min > 0) gq_min = q_min;
                if (q_max > 0) gq_max = q_max;
                if (d_min > 0) gd_min = d_min;
                if (d_max > 0) gd_max = d_max;
            };
            VerdictReport report;
            if (check_id == "grassmann-monotone" || check_id == "cross-check-forms") {
                GrassmannGrid g;
                if (check_id == "cross-check-forms") {
                    g.d_max = 8;
                    g.n_span = 6;
                }
                apply_qd(g.q_min, g.q_max, g.d_min, g.d_max);
                if (n_span >= 0) g.n_span = n_span;
                report = check_id == "grassmann-monotone" ? verify_grassmann_monotone(g, sweep_opt)
                                                          : cross_check_forms(g, sweep_opt);
            } else if (check_id == "grassmann-exceptional") {
                ExceptionalGrid g;
                if (d_min > 0) g.d_min = d_min;
                if (d_max > 0) g.d_max = d_max;
                report = verify_grassmann_exceptional(g, sweep_opt);
            } else if (check_id == "bilinear-min") {
                BilinearGrid g;
                apply_qd(g.q_min, g.q_max, g.d_min, g.d_max);
                if (e_span >= 0) g.e_span = e_span;
                report = verify_bilinear_min(g, sweep_opt);
            } else if (check_id == "hermitian-suite") {
                HermitianGrid g;
                apply_qd(g.q_min, g.q_max, g.d_min, g.d_max);
                report = verify_hermitian_suite(g, sweep_opt);
            } else {
                std::cerr << "unknown check '" << check_id
                          << "' (valid: grassmann-monotone, grassmann-exceptional, bilinear-min, "
                             "hermitian-suite, cross-check-forms)\n";
                return 2;
            }
            emit_report(report, format, report_path, csv_path, vf_verbosity);
            return report_exit_code(report);
        }

        if (lc->parsed()) {
            if (lc_q_min > 0) over.q_min = lc_q_min;
            if (lc_q_max > 0) over.q_max = lc_q_max;
            if (lc_d_max > 0) over.d_max = lc_d_max;
            if (lc_n_span >= 0) over.n_span = lc_n_span;
            if (lc_e_span >= 0) over.e_span = lc_e_span;
            if (lc_m_max > 0) over.m_max = lc_m_max;
            if (lc_count > 0) over.count = lc_count;
            if (lc_seed_set) over.seed = lc_seed;
            VerdictReport report = lemma_check(lemma_id, over, sweep_opt);
            emit_report(report, format, report_path, csv_path, lc_verbosity);
            return report_exit_code(report);
        }

        if (sc->parsed()) {
            VerdictReport report = scan_hamming_distinct(hg, sweep_opt);
            emit_report(report, format, report_path, csv_path, sc_verbosity);
            return report_exit_code(report);
        }

        if (oc->parsed()) {
            SchemeParams p = oc_pf.to_params(oc_family);
            SchemeInstance scheme = [&] {
                if (!cache_path.empty() && std::ifstream(cache_path).good()) {
                    SchemeInstance s = SchemeInstance::load(cache_path);
                    if (s.params().describe() != p.describe())
                        throw std::invalid_argument("cache file " + cache_path + " holds " +
                                                    s.params().describe() + ", not " + p.describe());
                    return s;
                }
                SchemeInstance s = SchemeInstance::build(p);
                if (!cache_path.empty()) s.save(cache_path);
                return s;
            }();
            IntersectionMatrixSet L = intersection_matrices(scheme);
            Eigenmatrix P = eigenmatrix(p);
            Verdict validation = validate_eigenmatrix(P, L);

            json out = {{"schema", "qeig-oracle-check/1"},
                        {"params", p.describe()},
                        {"vertex_count", scheme.vertex_count()},
                        {"eigenmatrix", eigenmatrix_json(P)["rows"]},
                        {"validation",
                         {{"status", status_name(validation.status)},
                          {"note", validation.note},
                          {"witness", validation.witness}}}};
            bool all_ok = validation.passed();

            if (!skip_spectrum && scheme.vertex_count() <= spectrum_cap) {
                json spectra = json::array();
                for (long j = 0; j <= p.d; ++j) {
                    auto spec = spectrum_multiset(scheme, j, P, spectrum_cap);
                    json entries = json::array();
                    long total = 0;
                    for (const auto& s : spec) {
                        entries.push_back({{"value", to_string(s.value)},
                                           {"multiplicity", s.multiplicity}});
                        total += s.multiplicity;
                    }
                    spectra.push_back({{"j", j}, {"entries", entries}, {"multiplicity_sum", total}});
                }
                out["spectra"] = spectra;
            }
            if (!skip_connectivity) {
                json conn = json::array();
                for (long j = 1; j <= p.d; ++j) {
                    Connectivity c = connectivity(scheme, j);
                    conn.push_back(
                        {{"j", j}, {"connected", c.connected}, {"components", c.component_count}});
                }
                out["connectivity"] = conn;
            }

            if (format == "json") {
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "oracle-check " << p.describe() << ": v = " << scheme.vertex_count()
                          << "\n";
                std::cout << "  eigenvector validation: " << status_name(validation.status);
                if (!validation.note.empty()) std::cout << "  (" << validation.note << ")";
                std::cout << "\n";
                if (validation.passed())
                    std::cout << "  multiplicities: " << validation.witness["multiplicities"].dump()
                              << "\n";
                if (out.contains("spectra"))
                    for (const auto& s : out["spectra"])
                        std::cout << "  spectrum j=" << s["j"] << ": " << s["entries"].dump()
                                  << " (sum " << s["multiplicity_sum"] << ")\n";
                if (out.contains("connectivity"))
                    for (const auto& c : out["connectivity"])
                        std::cout << "  distance-" << c["j"] << " graph: "
                                  << (c["connected"].get<bool>() ? "connected" : "disconnected")
                                  << " (" << c["components"] << " components)\n";
            }
            return all_ok ? 0 : 1;
        }

        if (dc->parsed()) {
            SchemeParams p = dc_pf.to_params(dc_family);
            TermDecomposition dec = decompose(p, dc_i, dc_j);
            ExponentProfile prof = exponent_profile(p, dc_i, dc_j);
            if (format == "json") {
                json terms = json::array();
                for (const auto& t : dec.terms)
                    terms.push_back({{"h", t.h},
                                     {"value", to_string(t.value)},
                                     {"exponent", t.exponent.get_str()}});
                json out = {{"schema", "qeig-decompose/1"},
                            {"params", p.describe()},
                            {"i", dec.i},
                            {"j", dec.j},
                            {"h_min", dec.h_min},
                            {"h_max", dec.h_max},
                            {"vertex_h0", prof.vertex().get_str()},
                            {"terms", terms},
                            {"sum", to_string(dec.sum())}};
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "terms of " << p.describe() << " at (i,j) = (" << dec.i << "," << dec.j
                          << "), h in [" << dec.h_min << ", " << dec.h_max << "], vertex h0 = "
                          << prof.vertex().get_str() << "\n";
                for (const auto& t : dec.terms)
                    std::cout << "  h = " << t.h << "  T_h = " << to_string(t.value)
                              << "  exponent = " << t.exponent.get_str() << "\n";
                std::cout << "  sum = " << to_string(dec.sum()) << "\n";
            }
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedField& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
